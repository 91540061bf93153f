//! The `semilab` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a theorem check fails,
//! 2 on usage, IO or parse errors. Precondition-unmet results are counted
//! but never change the exit code.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{dump_line, enumerate_semigroups};
use crate::congruence::{classify_quotient, enumerate_congruences, p_congruence, quotient};
use crate::permutative::{find_permutation_identity, lemma4_minimal_k};
use crate::semigroup::FiniteSemigroup;
use crate::subset::{idealizer, medial_witness, separator};
use crate::sweep::{run_sweep, OutputFormat, Selection, SweepConfig};
use crate::text::{parse_family, parse_partition, parse_sg, parse_subset, to_sg};

#[derive(Debug, Parser)]
#[command(
    name = "semilab",
    version,
    about = "Finite semigroup separators and congruences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a .sg file holds an associative table
    Validate { file: PathBuf },
    /// Separator of a subset, e.g. `sep z2.sg {0}`
    Sep { file: PathBuf, set: String },
    /// Idealizer of a subset
    Idealizer { file: PathBuf, set: String },
    /// Whether a subset is medial
    Medial { file: PathBuf, set: String },
    /// The congruence P induced by a family, e.g. `{0};{1,2}`
    Pcong { file: PathBuf, family: String },
    /// Quotient by a partition, e.g. `{0,1};{2}`
    Quotient { file: PathBuf, partition: String },
    /// All congruences with their quotient classification
    Congruences { file: PathBuf },
    /// Search for a permutation identity
    Permid {
        file: PathBuf,
        #[arg(long = "max-n", default_value_t = 4)]
        max_n: usize,
    },
    /// Least k such that adjacent factors commute between elements of S^k
    Lemma4 { file: PathBuf },
    /// Dump every semigroup of order N, one per line
    Enumerate {
        n: usize,
        #[arg(long = "up-to-iso")]
        up_to_iso: bool,
    },
    /// Check the theorems over every labelled semigroup of the given order
    Verify {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        theorem: Option<TheoremArg>,
        #[arg(long = "max-n", default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        parallelism: usize,
        #[arg(long, value_enum, default_value_t = OutputArg::Text)]
        output: OutputArg,
        /// Seeded random multi-set families per semigroup
        #[arg(long, default_value_t = 100)]
        families: usize,
        #[arg(long, default_value_t = SweepConfig::default().seed)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TheoremArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Cor1,
    Cor2,
    Lemmas,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Structured,
}

struct Failure(String);

fn load(path: &Path) -> Result<FiniteSemigroup, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_sg(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn lib<T>(r: crate::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure(e.to_string()))
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("usage error");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let mut text = String::new();
    let mut code = 0;
    match cmd {
        Command::Validate { file } => {
            let s = load(&file)?;
            let identity = s
                .identity_element()
                .map_or_else(|| "none".to_string(), |e| e.to_string());
            text = format!(
                "valid: order={} commutative={} identity={identity}\n",
                s.order(),
                s.is_commutative()
            );
        }
        Command::Sep { file, set } => {
            let s = load(&file)?;
            let a = lib(parse_subset(&set, s.order()))?;
            text = format!("{}\n", lib(separator(&s, &a))?);
        }
        Command::Idealizer { file, set } => {
            let s = load(&file)?;
            let a = lib(parse_subset(&set, s.order()))?;
            text = format!("{}\n", lib(idealizer(&s, &a))?);
        }
        Command::Medial { file, set } => {
            let s = load(&file)?;
            let a = lib(parse_subset(&set, s.order()))?;
            text = match lib(medial_witness(&s, &a))? {
                None => "medial\n".into(),
                Some((x, a, b, y)) => format!("not medial: witness (x={x},a={a},b={b},y={y})\n"),
            };
        }
        Command::Pcong { file, family } => {
            let s = load(&file)?;
            let fam = lib(parse_family(&family, s.order()))?;
            text = format!("{}\n", lib(p_congruence(&s, &fam))?);
        }
        Command::Quotient { file, partition } => {
            let s = load(&file)?;
            let c = lib(parse_partition(&partition, s.order()))?;
            let q = lib(quotient(&s, &c))?;
            let class = classify_quotient(&q);
            text = to_sg(q.semigroup());
            text.push_str(&format!(
                "# monoid={} commutative={} identity_class={}\n",
                class.is_monoid,
                class.is_commutative,
                class
                    .identity_class
                    .map_or_else(|| "none".to_string(), |c| c.to_string())
            ));
        }
        Command::Congruences { file } => {
            let s = load(&file)?;
            for c in lib(enumerate_congruences(&s))? {
                let class = classify_quotient(&lib(quotient(&s, &c))?);
                text.push_str(&format!(
                    "{c} monoid={} commutative={}\n",
                    class.is_monoid, class.is_commutative
                ));
            }
        }
        Command::Permid { file, max_n } => {
            let s = load(&file)?;
            if max_n < 2 {
                return Err(Failure("--max-n must be at least 2".into()));
            }
            text = match find_permutation_identity(&s, max_n) {
                Some(id) => format!("{id}\n"),
                None => format!("none up to n={max_n}\n"),
            };
        }
        Command::Lemma4 { file } => {
            let s = load(&file)?;
            let outcome = lemma4_minimal_k(&s);
            text = match outcome.minimal_k {
                Some(k) => format!("k={k}\n"),
                None => "none\n".into(),
            };
            for c in &outcome.counterexamples {
                text.push_str(&format!(
                    "k={} counterexample (u={},x={},y={},v={})\n",
                    c.k, c.u, c.x, c.y, c.v
                ));
            }
        }
        Command::Enumerate { n, up_to_iso } => {
            for s in lib(enumerate_semigroups(n, up_to_iso))? {
                text.push_str(&dump_line(&s));
                text.push('\n');
            }
        }
        Command::Verify {
            order,
            theorem,
            max_n,
            parallelism,
            output,
            families,
            seed,
        } => {
            let cfg = SweepConfig {
                min_order: order,
                max_order: order,
                n_max_permutation: max_n,
                random_families: families,
                seed,
                selection: match theorem {
                    None => Selection::All,
                    Some(TheoremArg::One) => Selection::Theorem1,
                    Some(TheoremArg::Two) => Selection::Theorem2,
                    Some(TheoremArg::Cor1) => Selection::Corollary1,
                    Some(TheoremArg::Cor2) => Selection::Corollary2,
                    Some(TheoremArg::Lemmas) => Selection::Lemmas,
                },
                parallelism,
                output: match output {
                    OutputArg::Text => OutputFormat::Text,
                    OutputArg::Structured => OutputFormat::Structured,
                },
                ..Default::default()
            };
            let report = lib(run_sweep(&cfg))?;
            if output == OutputArg::Structured {
                text = report.structured();
                let _ = write!(err, "{}", report.summary());
            } else {
                text = report.summary();
            }
            code = i32::from(report.has_failures());
        }
    }
    out.write_all(text.as_bytes())
        .map_err(|e| Failure(format!("write failed: {e}")))?;
    Ok(code)
}
