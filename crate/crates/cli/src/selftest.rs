//! Cross-oracle checks over seeded corpora. Each check returns the number of
//! cases it looked at and a description of every failing case.

use std::fmt::Write as _;

use grothen::bar::{h1_bar, pi1_abelianized};
use grothen::completion::{gr_pairs, gr_presentation, is_quotient_group, quotient_monoid, rho};
use grothen::corpus::{self, commutative_corpus, submonoid_samples, CorpusEntry, CorpusRng, ModuleShape};
use grothen::ku::{self, examples, ElementaryKuModule, ExtendedNat, HomotopyGroupData, KuSummand};
use grothen::lattice::structure_of_finite_abelian_group;
use grothen::telescope::telescope_pi0;
use grothen::{FgAbelianGroup, FiniteMonoid};

/// Random congruence quotients appended to the deterministic corpus.
pub const RANDOM_QUOTIENTS: usize = 150;
pub const QUOTIENT_SAMPLES: usize = 120;
pub const MODULE_SAMPLES: usize = 500;
pub const DEGREE_SAMPLES: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub total: usize,
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check { name, total: 0, failures: Vec::new() }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.total > 0
    }
}

pub fn corpus(seed: u64) -> Vec<CorpusEntry> {
    commutative_corpus(seed, RANDOM_QUOTIENTS)
}

/// Independent sub-seed for the `k`-th sampler.
fn rng(seed: u64, k: u64) -> CorpusRng {
    corpus::seeded_rng(seed.wrapping_add(k.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

pub fn four_way(corpus: &[CorpusEntry]) -> Check {
    let mut c = Check::new("four_way_completion");
    for entry in corpus {
        let m = &entry.monoid;
        let answers = (|| -> grothen::Result<[FgAbelianGroup; 4]> {
            Ok([gr_pairs(m)?.group, gr_presentation(m)?.group, pi1_abelianized(m)?, h1_bar(m)?])
        })();
        match answers {
            Ok(g) => c.case(g.iter().all(|x| *x == g[0]), || {
                format!("{}: {} / {} / {} / {}", entry.label, g[0], g[1], g[2], g[3])
            }),
            Err(e) => c.case(false, || format!("{}: {}", entry.label, e.name())),
        }
    }
    c
}

pub fn telescope(corpus: &[CorpusEntry]) -> Check {
    let mut c = Check::new("telescope");
    for entry in corpus {
        let m = &entry.monoid;
        let gr = gr_pairs(m).expect("corpus is commutative").group;
        for m0 in 0..m.len() {
            let stable = m.is_stably_group_like(m0);
            if stable {
                let t = telescope_pi0(m, m0).expect("corpus is commutative");
                let ok = t.carrier.is_group() && structure_of_finite_abelian_group(&t.carrier).ok() == Some(gr.clone());
                c.case(ok, || format!("{} at {}: carrier is not Gr", entry.label, m.name(m0)));
            } else if m0 == m.identity() && !m.is_group() {
                let t = telescope_pi0(m, m0).expect("corpus is commutative");
                let phi = t.level_map(0);
                let mut image = phi.clone();
                image.sort_unstable();
                image.dedup();
                let ok = image.len() == m.len()
                    && t.carrier.len() == m.len()
                    && m.homomorphism_violation(&t.carrier, &phi).is_none()
                    && !t.carrier.is_group();
                c.case(ok, || format!("{} at e: carrier is not M", entry.label));
            }
        }
    }
    c
}

pub fn quotients(corpus: &[CorpusEntry], seed: u64, count: usize) -> Check {
    let mut c = Check::new("quotient_compatibility");
    for (idx, sub) in submonoid_samples(corpus, seed, count) {
        let p = &corpus[idx].monoid;
        let q = quotient_monoid(p, &sub).expect("corpus is commutative");
        let r = rho(p, &sub).expect("corpus is commutative");
        let gr_q = gr_pairs(&q.monoid).expect("quotients are commutative").group;
        let mut ok = gr_q == r;
        if is_quotient_group(&q) {
            ok &= r.order() == Some(q.len().into());
        }
        c.case(ok, || format!("{} / {:?}: Gr = {gr_q}, rho = {r}", corpus[idx].label, sub.members()));
    }
    c
}

fn modules(seed: u64, k: u64, count: usize) -> Vec<ElementaryKuModule> {
    let mut rng = rng(seed, k);
    let shape = ModuleShape::default();
    (0..count).map(|_| corpus::random_module(&mut rng, &shape)).collect()
}

fn sample_where(seed: u64, k: u64, count: usize, keep: impl Fn(&ElementaryKuModule) -> bool) -> Vec<ElementaryKuModule> {
    let mut rng = rng(seed, k);
    let shape = ModuleShape::default();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let x = corpus::random_module(&mut rng, &shape);
        if keep(&x) {
            out.push(x);
        }
    }
    out
}

pub fn smash_laws(seed: u64, count: usize) -> Check {
    let mut c = Check::new("smash_laws");
    let k2 = ElementaryKuModule::ku_mod(2).unwrap();
    let k4 = ElementaryKuModule::ku_mod(4).unwrap();
    let kun = ku::smash(&k2, &k4);
    c.case(kun.to_string() == "ku/2 + S(ku/2)", || format!("ku/2 ^ ku/4 = {kun}"));
    let unit = ElementaryKuModule::ku();
    let xs = modules(seed, 1, count);
    for (i, x) in xs.iter().enumerate() {
        let y = &xs[(i + 1) % xs.len()];
        let z = &xs[(i + 2) % xs.len()];
        let ok = ku::smash(&unit, x) == *x
            && ku::smash(x, &unit) == *x
            && ku::smash(x, y) == ku::smash(y, x)
            && ku::smash(&ku::smash(x, y), z) == ku::smash(x, &ku::smash(y, z));
        c.case(ok, || format!("{x} ; {y} ; {z}"));
    }
    c
}

pub fn bott_cokernel_degree(seed: u64, count: usize) -> Check {
    let mut c = Check::new("bott_cokernel_degree");
    for x in modules(seed, 2, count) {
        let d = ku::suspension_degree(&x).expect("samples are nonzero") as i64;
        let top = (0..=d + 4).rev().find(|&m| !ku::bott_cokernel(&x, m).is_zero());
        let injective = (-2..=d + 4).all(|m| ku::bott_injective(&x, m));
        c.case(top == Some(d) && injective, || format!("{x}: top = {top:?}, degree = {d}"));
    }
    c
}

fn has_unit(x: &ElementaryKuModule) -> bool {
    x.multiplicity(KuSummand::free(0)) != ExtendedNat::ZERO
}

/// Largest free suspension beats largest torsion suspension; no torsion counts.
pub fn free_above_torsion(x: &ElementaryKuModule) -> bool {
    match (x.max_free_suspension(), x.max_torsion_suspension()) {
        (Some(f), Some(t)) => f > t,
        (Some(_), None) => true,
        _ => false,
    }
}

pub fn free_product_degree(seed: u64, count: usize) -> Check {
    let mut c = Check::new("free_product_degree");
    let xs = sample_where(seed, 3, 2 * count, has_unit);
    for pair in xs.chunks(2) {
        let (x, y) = (&pair[0], &pair[1]);
        let f = ku::free_product(x, y).expect("both have unit summands");
        let want = ku::suspension_degree(x).unwrap().max(ku::suspension_degree(y).unwrap());
        let got = ku::suspension_degree(&f).unwrap();
        c.case(got == want, || format!("{x} * {y}: degree {got}, expected {want}"));
    }
    c
}

pub fn smash_degree(seed: u64, count: usize) -> Check {
    let mut c = Check::new("smash_degree");
    let xs = sample_where(seed, 4, 2 * count, free_above_torsion);
    for pair in xs.chunks(2) {
        let (x, y) = (&pair[0], &pair[1]);
        let want = ku::suspension_degree(x).unwrap() + ku::suspension_degree(y).unwrap();
        let got = ku::suspension_degree(&ku::smash(x, y)).ok();
        c.case(got == Some(want), || format!("{x} ^ {y}: degree {got:?}, expected {want}"));
    }
    c
}

fn free(rank: u64) -> HomotopyGroupData {
    HomotopyGroupData { rank: ExtendedNat::Finite(rank), ..HomotopyGroupData::zero() }
}

pub fn example_modules() -> Check {
    let mut c = Check::new("example_modules");
    let p4 = examples::crystallographic_p4();
    c.case(ku::bott_cokernel(&p4, 0) == free(8), || "R^def_0 of 8*ku + S^2(ku)".into());
    c.case(ku::bott_cokernel(&p4, 2) == free(1), || "R^def_2 of 8*ku + S^2(ku)".into());
    for m in 3..=12 {
        c.case(ku::bott_cokernel(&p4, m).is_zero(), || format!("R^def_{m} of 8*ku + S^2(ku)"));
    }
    let h = examples::heisenberg();
    for m in 3..=12 {
        c.case(ku::bott_cokernel(&h, m).is_zero(), || format!("R^def_{m} of the Heisenberg module"));
    }
    let s = examples::nonorientable_surface(3);
    let ss = ku::smash(&s, &s);
    let contains = |summand: KuSummand| ss.multiplicity(summand) != ExtendedNat::ZERO;
    c.case(
        contains(KuSummand::torsion(0, 2).unwrap()) && contains(KuSummand::torsion(1, 2).unwrap()),
        || format!("surface smash square {ss} lacks ku/2 + S(ku/2)"),
    );
    c.case(ku::suspension_degree(&ss).ok() == Some(2), || format!("degree of {ss}"));
    c
}

fn group_case(c: &mut Check, label: &str, g: &FiniteMonoid, classes: usize) {
    let count = g.conjugacy_class_count();
    c.case(count.as_ref().ok() == Some(&classes), || format!("{label}: {count:?} classes"));
    let Ok(x) = ku::kdef_finite_group(classes as u64) else {
        return c.case(false, || format!("{label}: no wedge"));
    };
    c.case(x.to_string() == format!("{classes}*ku"), || format!("{label}: K^def = {x}"));
    c.case(ku::pi(&x, 0) == free(classes as u64), || format!("{label}: K^def_0"));
    c.case((1..=12).all(|m| ku::bott_cokernel(&x, m).is_zero()), || format!("{label}: R^def above 0"));
}

pub fn finite_groups() -> Check {
    let mut c = Check::new("finite_groups");
    group_case(&mut c, "S3", &corpus::symmetric_group_3(), 3);
    group_case(&mut c, "Q8", &corpus::quaternion_group(), 5);
    group_case(&mut c, "Z/4", &FiniteMonoid::cyclic(4), 4);
    c
}

pub fn all(seed: u64) -> (usize, Vec<Check>) {
    let corpus = corpus(seed);
    let checks = vec![
        four_way(&corpus),
        telescope(&corpus),
        quotients(&corpus, seed, QUOTIENT_SAMPLES),
        smash_laws(seed, MODULE_SAMPLES),
        bott_cokernel_degree(seed, MODULE_SAMPLES),
        free_product_degree(seed, DEGREE_SAMPLES),
        smash_degree(seed, DEGREE_SAMPLES),
        example_modules(),
        finite_groups(),
    ];
    (corpus.len(), checks)
}

/// The `selftest` report: one `key = value` line per check.
pub fn report(seed: u64) -> String {
    let (size, checks) = all(seed);
    let mut out = String::new();
    let _ = writeln!(out, "seed = {seed}");
    let _ = writeln!(out, "corpus = {size}");
    for c in &checks {
        let verdict = if c.passed() { "pass" } else { "fail" };
        let _ = writeln!(out, "{} = {verdict} ({}/{})", c.name, c.total - c.failures.len(), c.total);
        for f in c.failures.iter().take(3) {
            let _ = writeln!(out, "  failure: {f}");
        }
    }
    let ok = checks.iter().all(Check::passed);
    let _ = writeln!(out, "result = {}", if ok { "pass" } else { "fail" });
    out
}
