//! Command-line front end.
//!
//! Exit codes: `compose` uses 1 for parse errors and 2 for size mismatches;
//! `repr` and `check` use 3 when a size cap is exceeded; `proofeq` exits 0
//! for equivalent terms, 1 for distinct ones and 2 on any error.

mod check;
mod dot;
mod text;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

pub use check::{run_law, CheckOptions, Law, LawReport};
pub use dot::emit_dot;
pub use text::{emit_split_text, parse_split_text, TextError};

use crate::brauer::repr_arrow;
use crate::cones::Chain;
use crate::error::Error;
use crate::logic::{g_arrow, parse_derivation, proof_equiv, Fragment};
use crate::splitpre::SplitPreorder;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_BOUND: i32 = 3;
pub const EXIT_DISTINCT: i32 = 1;
pub const EXIT_PROOFEQ_ERROR: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "brauerian",
    version,
    about = "Split preorders, their representation in Rel, and proof equivalence"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compose two split preorders: prints P ∗ R for R: m -> n and P: n -> k.
    Compose {
        /// The second arrow, P: n -> k.
        p: PathBuf,
        /// The first arrow, R: m -> n.
        r: PathBuf,
    },
    /// Print the relation between function codes representing an arrow.
    Repr {
        /// Size of the chain of values.
        #[arg(long = "p", default_value_t = 2, value_parser = parse_chain_size)]
        chain: usize,
        file: PathBuf,
    },
    /// Check laws by exhaustive and seeded random sweeps.
    Check {
        #[arg(long, value_enum, value_delimiter = ',', required = true)]
        laws: Vec<Law>,
        /// Largest object size in exhaustive sweeps.
        #[arg(long, default_value_t = 2)]
        max: usize,
        #[arg(long = "p", default_value_t = 2, value_parser = parse_chain_size)]
        chain: usize,
        /// Source size for the faithfulness check.
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Target size for the faithfulness check.
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random instances for sampled laws.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Decide whether two derivation terms denote the same proof.
    Proofeq {
        #[arg(long, default_value = "conj")]
        fragment: Fragment,
        left: String,
        right: String,
    },
    /// Emit a Graphviz digraph of a split preorder file or a derivation term.
    Dot {
        /// Fragment used when the input is a derivation term.
        #[arg(long, default_value = "conj-disj-units")]
        fragment: Fragment,
        input: String,
    },
}

fn parse_chain_size(s: &str) -> Result<usize, String> {
    let size: usize = s.parse().map_err(|e| format!("{e}"))?;
    Chain::new(size)
        .map(|c| c.size())
        .map_err(|e| e.to_string())
}

/// Runs one invocation, returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Compose { p, r } => cmd_compose(&p, &r),
        Command::Repr { chain, file } => cmd_repr(chain, &file),
        Command::Check {
            laws,
            max,
            chain,
            m,
            n,
            seed,
            samples,
        } => {
            let opts = CheckOptions {
                max,
                chain: Chain::new(chain).expect("validated by the argument parser"),
                m,
                n,
                seed,
                samples,
            };
            cmd_check(&laws, &opts)
        }
        Command::Proofeq {
            fragment,
            left,
            right,
        } => cmd_proofeq(fragment, &left, &right),
        Command::Dot { fragment, input } => cmd_dot(fragment, &input),
    };
    let _ = out.write_all(outcome.stdout.as_bytes());
    let _ = err.write_all(outcome.stderr.as_bytes());
    outcome.code
}

/// Captured result of one subcommand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn load(path: &Path) -> Result<SplitPreorder, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_split_text(&text).map_err(|e| format!("{}:{}: {}", path.display(), e.line, e.message))
}

fn bound_or(code: i32, e: &Error) -> i32 {
    if matches!(e, Error::BoundExceeded { .. }) {
        EXIT_BOUND
    } else {
        code
    }
}

pub fn cmd_compose(p_path: &Path, r_path: &Path) -> Outcome {
    let p = match load(p_path) {
        Ok(p) => p,
        Err(m) => return Outcome::fail(EXIT_PARSE, m),
    };
    let r = match load(r_path) {
        Ok(r) => r,
        Err(m) => return Outcome::fail(EXIT_PARSE, m),
    };
    if r.tgt() != p.src() {
        return Outcome::fail(
            EXIT_MISMATCH,
            format!(
                "{}:1: target size {} does not match the source size {} of {}",
                r_path.display(),
                r.tgt(),
                p.src(),
                p_path.display()
            ),
        );
    }
    match SplitPreorder::compose(&p, &r) {
        Ok(pr) => Outcome::ok(emit_split_text(&pr)),
        Err(e) => Outcome::fail(EXIT_MISMATCH, e.to_string()),
    }
}

pub fn cmd_repr(chain: usize, path: &Path) -> Outcome {
    let chain = match Chain::new(chain) {
        Ok(c) => c,
        Err(e) => return Outcome::fail(EXIT_PARSE, e.to_string()),
    };
    let r = match load(path) {
        Ok(r) => r,
        Err(m) => return Outcome::fail(EXIT_PARSE, m),
    };
    match repr_arrow(chain, &r) {
        Ok(image) => {
            let mut s = format!("rel {} {}\n", image.dom_size(), image.cod_size());
            for (c1, c2) in image.pairs() {
                s.push_str(&format!("{c1} {c2}\n"));
            }
            Outcome::ok(s)
        }
        Err(e) => Outcome::fail(bound_or(EXIT_PARSE, &e), e.to_string()),
    }
}

pub fn cmd_check(laws: &[Law], opts: &CheckOptions) -> Outcome {
    let mut stdout = String::new();
    let mut code = EXIT_OK;
    for &law in laws {
        let name = law
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        match run_law(law, opts) {
            Ok(report) => {
                let verdict = if report.passed() { "pass" } else { "FAIL" };
                stdout.push_str(&format!("{name}: {verdict} ({} checked", report.checked));
                if !report.detail.is_empty() {
                    stdout.push_str(&format!("; {}", report.detail));
                }
                stdout.push_str(")\n");
                if let Some(failure) = report.failure {
                    stdout.push_str(&failure);
                    code = EXIT_CHECK_FAILED;
                }
            }
            Err(e) => {
                return Outcome {
                    code: bound_or(EXIT_CHECK_FAILED, &e),
                    stdout,
                    stderr: format!("error: {name}: {e}\n"),
                }
            }
        }
    }
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

pub fn cmd_proofeq(fragment: Fragment, left: &str, right: &str) -> Outcome {
    let result = (|| -> Result<(bool, SplitPreorder, SplitPreorder), String> {
        let f = parse_derivation(left, fragment).map_err(|e| format!("left term: {e}"))?;
        let g = parse_derivation(right, fragment).map_err(|e| format!("right term: {e}"))?;
        let same = proof_equiv(&f, &g).map_err(|e| e.to_string())?;
        let gf = g_arrow(&f).map_err(|e| e.to_string())?;
        let gg = g_arrow(&g).map_err(|e| e.to_string())?;
        Ok((same, gf, gg))
    })();
    match result {
        Ok((same, gf, gg)) => {
            let verdict = if same { "equivalent" } else { "distinct" };
            Outcome {
                code: if same { EXIT_OK } else { EXIT_DISTINCT },
                stdout: format!(
                    "{verdict}\n-- left\n{}-- right\n{}",
                    emit_split_text(&gf),
                    emit_split_text(&gg)
                ),
                stderr: String::new(),
            }
        }
        Err(m) => Outcome::fail(EXIT_PROOFEQ_ERROR, m),
    }
}

/// An existing file is read as a split preorder; anything else is parsed as
/// a derivation term.
pub fn cmd_dot(fragment: Fragment, input: &str) -> Outcome {
    let path = Path::new(input);
    let arrow = if path.is_file() {
        load(path)
    } else {
        parse_derivation(input, fragment)
            .and_then(|d| g_arrow(&d))
            .map_err(|e| e.to_string())
    };
    match arrow {
        Ok(a) => Outcome::ok(emit_dot(&a)),
        Err(m) => Outcome::fail(EXIT_PARSE, m),
    }
}
