//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use grothen::corpus::{CORPUS_MAX_SIZE, DEFAULT_SEED};
use grothen::ku::{self, examples};
use grothen::FiniteMonoid;
use grothen_cli::selftest::{self, Check};

const MIN_CORPUS: usize = 200;
const COMPLETION_BUDGET: Duration = Duration::from_secs(30);
const MIN_QUOTIENT_SAMPLES: usize = 100;
const MODULE_SAMPLES: usize = 500;
const DEGREE_SAMPLES: usize = 200;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
}

fn from_check(c: &Check, min_cases: usize) -> Verdict {
    let mut detail = format!("{} {}/{}", c.name, c.total - c.failures.len(), c.total);
    if let Some(f) = c.failures.first() {
        detail += &format!("; first failure: {f}");
    }
    if c.total < min_cases {
        detail += &format!("; fewer than {min_cases} cases");
    }
    Verdict { ok: c.passed() && c.total >= min_cases, detail }
}

fn both(a: Verdict, b: Verdict) -> Verdict {
    Verdict { ok: a.ok && b.ok, detail: format!("{}; {}", a.detail, b.detail) }
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn cli(args: &[&str]) -> grothen_cli::Outcome {
    grothen_cli::run(std::iter::once("grothen").chain(args.iter().copied()))
}

fn completion_agreement() -> Verdict {
    let start = Instant::now();
    let corpus = selftest::corpus(DEFAULT_SEED);
    let check = selftest::four_way(&corpus);
    let elapsed = start.elapsed();
    let small = corpus.iter().all(|e| e.monoid.len() <= CORPUS_MAX_SIZE && e.monoid.is_commutative());
    let mut v = from_check(&check, MIN_CORPUS);
    v.ok &= small && elapsed < COMPLETION_BUDGET;
    if !small {
        v.detail += "; corpus entry too large or not commutative";
    }
    if elapsed >= COMPLETION_BUDGET {
        v.detail += &format!("; took {elapsed:?}");
    }
    v
}

fn telescope() -> Verdict {
    let corpus = selftest::corpus(DEFAULT_SEED);
    from_check(&selftest::telescope(&corpus), corpus.len())
}

fn quotients() -> Verdict {
    let corpus = selftest::corpus(DEFAULT_SEED);
    from_check(&selftest::quotients(&corpus, DEFAULT_SEED, selftest::QUOTIENT_SAMPLES), MIN_QUOTIENT_SAMPLES)
}

fn smash_laws() -> Verdict {
    let kun = ku::smash(&ku::parse_module("ku/2").unwrap(), &ku::parse_module("ku/4").unwrap());
    let exact = kun == ku::parse_module("ku/2 + S(ku/2)").unwrap();
    let mut v = from_check(&selftest::smash_laws(DEFAULT_SEED, MODULE_SAMPLES), MODULE_SAMPLES);
    v.ok &= exact;
    v.detail = format!("ku/2 ^ ku/4 = {kun}; {}", v.detail);
    v
}

fn bott_cokernel_degree() -> Verdict {
    from_check(&selftest::bott_cokernel_degree(DEFAULT_SEED, MODULE_SAMPLES), MODULE_SAMPLES)
}

fn degrees() -> Verdict {
    both(
        from_check(&selftest::free_product_degree(DEFAULT_SEED, DEGREE_SAMPLES), DEGREE_SAMPLES),
        from_check(&selftest::smash_degree(DEFAULT_SEED, DEGREE_SAMPLES), DEGREE_SAMPLES),
    )
}

fn example_modules() -> Verdict {
    let p4 = examples::crystallographic_p4();
    let h = examples::heisenberg();
    let s = examples::nonorientable_surface(3);
    let ss = ku::smash(&s, &s);
    let printed = [
        ku::bott_cokernel(&p4, 0).to_string() == "Z^8",
        ku::bott_cokernel(&p4, 2).to_string() == "Z",
        (3..=40).all(|m| ku::bott_cokernel(&p4, m).is_zero()),
        (3..=40).all(|m| ku::bott_cokernel(&h, m).is_zero()),
        ku::suspension_degree(&ss).ok() == Some(2),
    ];
    let mut v = from_check(&selftest::example_modules(), 1);
    v.ok &= printed.iter().all(|&b| b);
    v.detail += &format!("; surface square = {ss}");
    v
}

fn finite_groups() -> Verdict {
    let mut failures = Vec::new();
    for (file, classes) in [("s3.json", 3usize), ("q8.json", 5), ("z4.json", 4)] {
        let text = std::fs::read_to_string(fixture(file)).unwrap();
        let g = FiniteMonoid::from_json(&text).unwrap();
        let count = g.conjugacy_class_count().unwrap();
        let x = ku::kdef_finite_group(count as u64).unwrap();
        let mut ok = count == classes && x.to_string() == format!("{classes}*ku");
        ok &= ku::pi(&x, 0).to_string() == format!("Z^{classes}");
        ok &= (1..=40).all(|m| ku::bott_cokernel(&x, m).is_zero());
        let path = fixture(file);
        let out = cli(&["group", "kdef", path.to_str().unwrap(), "--pi", "0"]);
        ok &= out.stdout == format!("conjugacy_classes = {classes}\nK^def = {classes}*ku\nK^def_0 = Z^{classes}\n");
        if !ok {
            failures.push(format!("{file}: {count} classes, {x}"));
        }
    }
    let v = from_check(&selftest::finite_groups(), 1);
    Verdict {
        ok: v.ok && failures.is_empty(),
        detail: if failures.is_empty() { format!("S3 -> 3*ku, Q8 -> 5*ku, Z/4 -> 4*ku; {}", v.detail) } else { failures.join("; ") },
    }
}

fn determinism() -> Verdict {
    let first = cli(&["selftest"]);
    let second = cli(&["selftest"]);
    let z4 = fixture("z4.json");
    let examples = [
        (vec!["monoid", "gr", z4.to_str().unwrap(), "--method", "pairs"], "Gr = Z/4\n"),
        (vec!["ku", "rdef", "8*ku + S^2(ku)", "--m", "2"], "R^def_2 = Z\n"),
        (vec!["ku", "smash", "ku/2", "ku/4"], "ku/2 + S(ku/2)\n"),
    ];
    let mut bad = Vec::new();
    for (args, want) in &examples {
        let out = cli(args);
        if out.code != 0 || out.stdout != *want {
            bad.push(format!("{:?} gave {:?}", args, out.stdout));
        }
    }
    let same = first == second && first.code == 0;
    Verdict {
        ok: same && bad.is_empty(),
        detail: if same && bad.is_empty() {
            format!("selftest reports identical ({} bytes), {} examples exact", first.stdout.len(), examples.len())
        } else {
            format!("identical = {same}; {}", bad.join("; "))
        },
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("four-way completion agreement", completion_agreement),
        ("telescope carrier", telescope),
        ("quotient compatibility", quotients),
        ("smash of ku/2 and ku/4, smash laws", smash_laws),
        ("Bott cokernel top degree", bott_cokernel_degree),
        ("suspension degrees of free and smash products", degrees),
        ("example modules", example_modules),
        ("finite-group pipeline", finite_groups),
        ("determinism and CLI examples", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        if !v.ok {
            failed += 1;
        }
        println!("criterion {} [{}] {name}: {}", i + 1, if v.ok { "PASS" } else { "FAIL" }, v.detail);
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
