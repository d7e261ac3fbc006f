//! Reproducible test corpora: commutative monoids built from cyclic groups and
//! saturating chains by products and random congruence quotients, a few
//! non-abelian groups given by raw Cayley tables, and random ku-modules.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ku::{ElementaryKuModule, ExtendedNat, KuSummand};
use crate::monoid::{FiniteMonoid, Submonoid};

pub use rand_chacha::ChaCha8Rng as CorpusRng;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Largest monoid the commutative corpus produces.
pub const CORPUS_MAX_SIZE: usize = 12;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub label: String,
    pub monoid: FiniteMonoid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Base {
    Cyclic(usize),
    Saturating(usize),
}

impl Base {
    fn build(self) -> FiniteMonoid {
        match self {
            Base::Cyclic(n) => FiniteMonoid::cyclic(n),
            Base::Saturating(n) => FiniteMonoid::saturating(n),
        }
    }

    fn size(self) -> usize {
        match self {
            Base::Cyclic(n) | Base::Saturating(n) => n,
        }
    }

    fn label(self) -> String {
        match self {
            Base::Cyclic(n) => format!("Z/{n}"),
            Base::Saturating(n) => format!("Sat{n}"),
        }
    }
}

fn bases(max: usize) -> Vec<Base> {
    (1..=max)
        .flat_map(|n| [Base::Cyclic(n), Base::Saturating(n)])
        .collect()
}

fn product_of(factors: &[Base]) -> (String, FiniteMonoid) {
    let mut m = factors[0].build();
    for f in &factors[1..] {
        m = m.product(&f.build()).expect("product of valid monoids is valid");
    }
    let label = factors.iter().map(|f| f.label()).collect::<Vec<_>>().join(" x ");
    (label, m)
}

/// Cyclic groups and saturating chains up to size 12, their products of two
/// and three nontrivial factors with at most 12 elements.
pub fn deterministic_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for b in bases(CORPUS_MAX_SIZE) {
        out.push(CorpusEntry { label: b.label(), monoid: b.build() });
    }
    let nontrivial: Vec<Base> = bases(CORPUS_MAX_SIZE / 2).into_iter().filter(|b| b.size() >= 2).collect();
    for (i, &a) in nontrivial.iter().enumerate() {
        for &b in &nontrivial[i..] {
            if a.size() * b.size() <= CORPUS_MAX_SIZE {
                let (label, monoid) = product_of(&[a, b]);
                out.push(CorpusEntry { label, monoid });
            }
        }
    }
    let small: Vec<Base> = nontrivial.iter().copied().filter(|b| b.size() <= 3).collect();
    for (i, &a) in small.iter().enumerate() {
        for (j, &b) in small.iter().enumerate().skip(i) {
            for &c in &small[j..] {
                if a.size() * b.size() * c.size() <= CORPUS_MAX_SIZE {
                    let (label, monoid) = product_of(&[a, b, c]);
                    out.push(CorpusEntry { label, monoid });
                }
            }
        }
    }
    out
}

/// A product of up to three bases (at most 24 elements) divided by the
/// congruence generated by one to three random pairs; retried until the
/// quotient has at most 12 elements.
pub fn random_quotient(rng: &mut impl Rng) -> CorpusEntry {
    let all = bases(8);
    loop {
        let factor_count = rng.random_range(1..=3);
        let mut factors = Vec::new();
        let mut size = 1;
        for _ in 0..factor_count {
            let b = *all.choose(rng).unwrap();
            if size * b.size() <= 24 {
                size *= b.size();
                factors.push(b);
            }
        }
        if factors.is_empty() {
            continue;
        }
        let (label, m) = product_of(&factors);
        let pair_count = rng.random_range(1..=3);
        let pairs: Vec<(usize, usize)> = (0..pair_count)
            .map(|_| (rng.random_range(0..m.len()), rng.random_range(0..m.len())))
            .collect();
        let (q, _) = m.quotient_by_congruence(&pairs);
        if q.len() <= CORPUS_MAX_SIZE {
            let rel = pairs
                .iter()
                .map(|&(a, b)| format!("{}~{}", m.name(a), m.name(b)))
                .collect::<Vec<_>>()
                .join(",");
            return CorpusEntry { label: format!("({label}) / <{rel}>"), monoid: q };
        }
    }
}

/// The deterministic corpus followed by `random_count` random quotients.
pub fn commutative_corpus(seed: u64, random_count: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = deterministic_corpus();
    for _ in 0..random_count {
        out.push(random_quotient(&mut rng));
    }
    out
}

/// Random `(P, N)` pairs: `N` is generated by up to two random elements of `P`.
pub fn submonoid_samples(corpus: &[CorpusEntry], seed: u64, count: usize) -> Vec<(usize, Submonoid)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let idx = rng.random_range(0..corpus.len());
            let m = &corpus[idx].monoid;
            let gens: Vec<usize> = (0..rng.random_range(0..=2)).map(|_| rng.random_range(0..m.len())).collect();
            (idx, m.submonoid_generated(&gens))
        })
        .collect()
}

/// Shape limits for [`random_module`].
#[derive(Debug, Clone, Copy)]
pub struct ModuleShape {
    pub max_summands: usize,
    pub max_torsion: u64,
    pub max_suspension: u32,
    pub max_multiplicity: u64,
    /// Probability that a multiplicity is ω.
    pub omega_rate: f64,
    /// Probability that a summand is a torsion summand.
    pub torsion_rate: f64,
}

impl Default for ModuleShape {
    fn default() -> Self {
        ModuleShape {
            max_summands: 6,
            max_torsion: 12,
            max_suspension: 4,
            max_multiplicity: 3,
            omega_rate: 0.1,
            torsion_rate: 0.4,
        }
    }
}

pub fn random_summand(rng: &mut impl Rng, shape: &ModuleShape) -> (KuSummand, ExtendedNat) {
    let suspension = rng.random_range(0..=shape.max_suspension);
    let summand = if rng.random_bool(shape.torsion_rate) {
        KuSummand::torsion(suspension, rng.random_range(2..=shape.max_torsion)).unwrap()
    } else {
        KuSummand::free(suspension)
    };
    let k = if rng.random_bool(shape.omega_rate) {
        ExtendedNat::Omega
    } else {
        ExtendedNat::Finite(rng.random_range(1..=shape.max_multiplicity))
    };
    (summand, k)
}

/// A random nonzero wedge of 1 to `max_summands` summands.
pub fn random_module(rng: &mut impl Rng, shape: &ModuleShape) -> ElementaryKuModule {
    let count = rng.random_range(1..=shape.max_summands);
    ElementaryKuModule::from_summands((0..count).map(|_| random_summand(rng, shape)))
}

pub fn seeded_rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Symmetric group on three letters, elements in one-line notation.
pub fn symmetric_group_3() -> FiniteMonoid {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let names = perms
        .iter()
        .map(|p| p.iter().map(|i| (i + 1).to_string()).collect::<String>())
        .collect();
    // (p ∘ q)(i) = p(q(i))
    let table = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let c = [p[q[0]], p[q[1]], p[q[2]]];
                    perms.iter().position(|r| *r == c).unwrap()
                })
                .collect()
        })
        .collect();
    FiniteMonoid::new(names, table, 0).expect("S3 table is valid")
}

/// Quaternion group `{±1, ±i, ±j, ±k}`.
pub fn quaternion_group() -> FiniteMonoid {
    // unit quaternions as (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k
    const UNITS: [(i8, usize); 8] = [(1, 0), (-1, 0), (1, 1), (-1, 1), (1, 2), (-1, 2), (1, 3), (-1, 3)];
    fn mul_axis(a: usize, b: usize) -> (i8, usize) {
        match (a, b) {
            (0, x) | (x, 0) => (1, x),
            (x, y) if x == y => (-1, 0),
            (1, 2) => (1, 3),
            (2, 3) => (1, 1),
            (3, 1) => (1, 2),
            (2, 1) => (-1, 3),
            (3, 2) => (-1, 1),
            (1, 3) => (-1, 2),
            _ => unreachable!(),
        }
    }
    let axis = ["1", "i", "j", "k"];
    let names = UNITS
        .iter()
        .map(|&(s, a)| format!("{}{}", if s < 0 { "-" } else { "" }, axis[a]))
        .collect();
    let table = UNITS
        .iter()
        .map(|&(s, a)| {
            UNITS
                .iter()
                .map(|&(t, b)| {
                    let (u, c) = mul_axis(a, b);
                    let sign = s * t * u;
                    UNITS.iter().position(|&x| x == (sign, c)).unwrap()
                })
                .collect()
        })
        .collect();
    FiniteMonoid::new(names, table, 0).expect("Q8 table is valid")
}

/// Dihedral group of order `2n`: rotations `r0..`, reflections `s0..`.
pub fn dihedral_group(n: usize) -> FiniteMonoid {
    assert!(n >= 1);
    // element (flip, k) acts as x ↦ (-1)^flip x + k
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|f| (0..n).map(move |k| (f, k))).collect();
    let names = elems
        .iter()
        .map(|&(f, k)| format!("{}{k}", if f == 0 { "r" } else { "s" }))
        .collect();
    let table = elems
        .iter()
        .map(|&(f, k)| {
            elems
                .iter()
                .map(|&(g, l)| {
                    let shift = if f == 0 { (k + l) % n } else { (k + n - l) % n };
                    elems.iter().position(|&x| x == (f ^ g, shift)).unwrap()
                })
                .collect()
        })
        .collect();
    FiniteMonoid::new(names, table, 0).expect("dihedral table is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_commutative_and_small() {
        let corpus = commutative_corpus(DEFAULT_SEED, 40);
        assert!(corpus.len() > 40);
        for e in &corpus {
            assert!(e.monoid.is_commutative(), "{}", e.label);
            assert!(e.monoid.len() <= CORPUS_MAX_SIZE, "{}", e.label);
        }
    }

    #[test]
    fn corpus_is_reproducible() {
        let a = commutative_corpus(7, 30);
        let b = commutative_corpus(7, 30);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.label, y.label);
            assert_eq!(x.monoid, y.monoid);
        }
    }

    #[test]
    fn sample_groups() {
        let s3 = symmetric_group_3();
        assert_eq!(s3.len(), 6);
        assert!(s3.is_group() && !s3.is_commutative());
        let q8 = quaternion_group();
        assert!(q8.is_group() && !q8.is_commutative());
        // i^2 = -1 and i^4 = 1
        let i = q8.index_of("i").unwrap();
        assert_eq!(q8.name(q8.power(i, 2)), "-1");
        assert_eq!(q8.power(i, 4), q8.identity());
        let d4 = dihedral_group(4);
        assert!(d4.is_group() && !d4.is_commutative());
        assert_eq!(d4.conjugacy_class_count().unwrap(), 5);
        assert_eq!(dihedral_group(3).conjugacy_class_count().unwrap(), 3);
    }
}
