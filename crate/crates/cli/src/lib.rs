//! Command-line front end. [`run`] takes an argument vector and returns the
//! exit code together with everything that would be written to the terminal,
//! so the binary and the tests share one code path.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use grothen::bar::{h1_bar, pi1_abelianized};
use grothen::completion::{gr_pairs, gr_presentation, is_quotient_group, quotient_monoid, rho};
use grothen::ku::{self, parse_module, ElementaryKuModule};
use grothen::lattice::structure_of_finite_abelian_group;
use grothen::telescope::telescope_pi0;
use grothen::{Error, FiniteMonoid};

pub mod selftest;

#[derive(Debug, Parser)]
#[command(name = "grothen", version, about = "Group completions of finite monoids and elementary ku-modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Finite monoids given as JSON Cayley tables
    #[command(subcommand)]
    Monoid(MonoidCommand),
    /// Elementary ku-module expressions
    #[command(subcommand)]
    Ku(KuCommand),
    /// Finite groups
    #[command(subcommand)]
    Group(GroupCommand),
    /// Run the cross-oracle corpus and print a pass/fail summary
    Selftest {
        #[arg(long, default_value_t = grothen::corpus::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum MonoidCommand {
    /// Validate a monoid file and summarize it
    Check { file: PathBuf },
    /// Group completion
    Gr {
        file: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        /// Stabilizing element for the telescope method
        #[arg(long)]
        m0: Option<String>,
    },
    /// Quotient by the submonoid generated by the given elements
    Quotient {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sub: Vec<String>,
    },
    /// Number of conjugacy classes of a group
    Conjclasses { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Pairs,
    Presentation,
    BarPi1,
    BarH1,
    Telescope,
}

#[derive(Debug, Subcommand)]
enum KuCommand {
    /// Homotopy group in degree m
    Pi {
        expr: String,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Cokernel of the Bott map in degree m
    Rdef {
        expr: String,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Largest suspension occurring
    Suspdeg { expr: String },
    /// Smash product over ku
    Smash { left: String, right: String },
    /// Pushout along the unit summands
    Free { left: String, right: String },
}

#[derive(Debug, Subcommand)]
enum GroupCommand {
    /// Deformation K-theory of a finite group
    Kdef {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        pi: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        rdef: Option<i64>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Report = std::result::Result<String, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => {
            let code = if stdout.lines().any(|l| l == "result = fail") { 1 } else { 0 };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Domain(e)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {}: {e}\n", e.name()),
        },
    }
}

fn dispatch(command: Command) -> Report {
    match command {
        Command::Monoid(c) => monoid(c),
        Command::Ku(c) => ku_command(c),
        Command::Group(GroupCommand::Kdef { file, pi, rdef }) => kdef(&file, pi, rdef),
        Command::Selftest { seed } => Ok(selftest::report(seed)),
    }
}

fn load(path: &Path) -> std::result::Result<FiniteMonoid, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    match FiniteMonoid::from_json(&text) {
        Ok(m) => Ok(m),
        Err(Error::Format(msg)) => Err(Failure::Usage(format!("{}: {msg}", path.display()))),
        Err(e) => Err(Failure::Domain(e)),
    }
}

fn expression(text: &str) -> std::result::Result<ElementaryKuModule, Failure> {
    parse_module(text).map_err(|e| Failure::Usage(format!("cannot parse {text:?}: {e}")))
}

fn element(m: &FiniteMonoid, name: &str) -> std::result::Result<usize, Failure> {
    m.index_of(name).map_err(|_| Failure::Usage(format!("unknown element {name:?}")))
}

fn monoid(command: MonoidCommand) -> Report {
    let mut out = String::new();
    match command {
        MonoidCommand::Check { file } => {
            let m = load(&file)?;
            let _ = writeln!(out, "elements = {}", m.len());
            let _ = writeln!(out, "identity = {}", m.name(m.identity()));
            let _ = writeln!(out, "commutative = {}", m.is_commutative());
            let _ = writeln!(out, "group = {}", m.is_group());
        }
        MonoidCommand::Gr { file, method, m0 } => {
            if method != Method::Telescope && m0.is_some() {
                return Err(Failure::Usage("--m0 is only used with --method telescope".into()));
            }
            let m = load(&file)?;
            let group = match method {
                Method::Pairs => gr_pairs(&m)?.group,
                Method::Presentation => gr_presentation(&m)?.group,
                Method::BarPi1 => pi1_abelianized(&m)?,
                Method::BarH1 => h1_bar(&m)?,
                Method::Telescope => {
                    let name = m0.ok_or_else(|| Failure::Usage("--method telescope requires --m0".into()))?;
                    let m0 = element(&m, &name)?;
                    let t = telescope_pi0(&m, m0)?;
                    let stable = m.is_stably_group_like(m0);
                    let _ = writeln!(out, "m0 = {name}");
                    let _ = writeln!(out, "stably_group_like = {stable}");
                    let _ = writeln!(out, "carrier_size = {}", t.carrier.len());
                    let _ = writeln!(out, "carrier_is_group = {}", t.carrier.is_group());
                    if !stable {
                        return Ok(out);
                    }
                    structure_of_finite_abelian_group(&t.carrier)?
                }
            };
            let _ = writeln!(out, "Gr = {group}");
        }
        MonoidCommand::Quotient { file, sub } => {
            let m = load(&file)?;
            let gens = sub.iter().map(|s| element(&m, s)).collect::<std::result::Result<Vec<_>, _>>()?;
            let n = m.submonoid_generated(&gens);
            let q = quotient_monoid(&m, &n)?;
            let r = rho(&m, &n)?;
            let members: Vec<&str> = n.members().iter().map(|&x| m.name(x)).collect();
            let _ = writeln!(out, "sub = {{{}}}", members.join(", "));
            let _ = writeln!(out, "classes = {}", q.len());
            for (i, class) in q.classes.iter().enumerate() {
                let names: Vec<&str> = class.iter().map(|&x| m.name(x)).collect();
                let _ = writeln!(out, "class {} = {{{}}}", q.monoid.name(i), names.join(", "));
            }
            let _ = writeln!(out, "table =");
            out.push_str(&q.monoid.to_string());
            let _ = writeln!(out, "is_group = {}", is_quotient_group(&q));
            let _ = writeln!(out, "rho = {r}");
        }
        MonoidCommand::Conjclasses { file } => {
            let m = load(&file)?;
            let _ = writeln!(out, "conjugacy_classes = {}", m.conjugacy_class_count()?);
        }
    }
    Ok(out)
}

fn ku_command(command: KuCommand) -> Report {
    let out = match command {
        KuCommand::Pi { expr, m } => format!("pi_{m} = {}", ku::pi(&expression(&expr)?, m)),
        KuCommand::Rdef { expr, m } => format!("R^def_{m} = {}", ku::bott_cokernel(&expression(&expr)?, m)),
        KuCommand::Suspdeg { expr } => format!("suspension_degree = {}", ku::suspension_degree(&expression(&expr)?)?),
        KuCommand::Smash { left, right } => ku::smash(&expression(&left)?, &expression(&right)?).to_string(),
        KuCommand::Free { left, right } => ku::free_product(&expression(&left)?, &expression(&right)?)?.to_string(),
    };
    Ok(out + "\n")
}

fn kdef(file: &Path, pi: Option<i64>, rdef: Option<i64>) -> Report {
    let g = load(file)?;
    let classes = g.conjugacy_class_count()?;
    let x = ku::kdef_finite_group(classes as u64)?;
    let mut out = String::new();
    let _ = writeln!(out, "conjugacy_classes = {classes}");
    let _ = writeln!(out, "K^def = {x}");
    if let Some(m) = pi {
        let _ = writeln!(out, "K^def_{m} = {}", ku::pi(&x, m));
        if m >= 1 {
            let _ = writeln!(out, "rho_{m} = {}", ku::deformation_rho(&x, m)?);
        }
    }
    if let Some(m) = rdef {
        let _ = writeln!(out, "R^def_{m} = {}", ku::bott_cokernel(&x, m));
    }
    Ok(out)
}

