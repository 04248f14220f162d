//! Command-line front end, shared by the `ulogic` binary and tests.
//!
//! Exit codes: 0 success, 2 parse or validation error, 3 undefined operation
//! (zero-probability conditioning, total conflict), 4 usage error.
//!
//! `--format machine` prints one `key=value` pair per line. Sets are written
//! as comma-separated state names in canonical order; mass entries appear in
//! set-encoding order.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::belief::{self, exploratory, MassFunction};
use crate::document::{LoadedModel, ModelDocument};
use crate::error::{Error, Result};
use crate::fixture;
use crate::formula::{self, Formula, Mode};
use crate::rational::{self, Rational};
use crate::semantics::Evaluator;
use crate::state::{StateSet, StateSpace};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNDEFINED: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Strict,
    Extended,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strict => Mode::Strict,
            ModeArg::Extended => Mode::Extended,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Rule {
    Dempster,
    Pointwise,
}

#[derive(Debug, Parser)]
#[command(
    name = "ulogic",
    about = "Truth sets, meaning entailment and evidential belief over variable valuations",
    version
)]
struct Cli {
    /// Where `=>` may appear in formulas
    #[arg(long, value_enum, default_value = "strict", global = true)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct MeasureArgs {
    /// Model document path, or `coinflip` for the shipped fixture
    model: String,
    #[arg(long)]
    measure: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a model document and report coherence per atom
    Check { model: String },
    /// Print the states where a formula is true
    TruthSet { model: String, formula: String },
    /// Print a formula's interpretation at one state
    Interpret {
        model: String,
        formula: String,
        state: String,
    },
    /// Print the coherence closure of an atom's valuation
    Cohere { model: String, atom: String },
    /// Print a measure, optionally conditioned on a formula's truth set
    Condition {
        #[command(flatten)]
        m: MeasureArgs,
        #[arg(long)]
        given: Option<String>,
    },
    /// Evidentially supported belief in an event
    Bel {
        #[command(flatten)]
        m: MeasureArgs,
        #[arg(long)]
        evidence: String,
        /// A formula, or a state list such as `{H-acc, T-acc}`
        #[arg(long)]
        event: String,
    },
    /// Probability of a formula, optionally conditioned on another
    Degree {
        #[command(flatten)]
        m: MeasureArgs,
        #[arg(long)]
        of: String,
        #[arg(long)]
        given: Option<String>,
    },
    /// Mass function induced by evidence
    Mass {
        #[command(flatten)]
        m: MeasureArgs,
        #[arg(long)]
        evidence: String,
    },
    /// Combine two bodies of evidence
    Combine {
        #[command(flatten)]
        m: MeasureArgs,
        #[arg(long, value_enum)]
        rule: Rule,
        #[arg(long)]
        e1: String,
        #[arg(long)]
        e2: String,
    },
    /// EXPLORATORY: weighted average of updates on each interpretation
    PointwiseCondition {
        #[command(flatten)]
        m: MeasureArgs,
        #[arg(long)]
        of: String,
        #[arg(long)]
        given: String,
    },
}

/// Runs one command line (including the program name) to completion.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: if e.is_undefined() {
                EXIT_UNDEFINED
            } else {
                EXIT_INVALID
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Loads a document from disk, falling back to the shipped fixture by name.
pub fn load_model(arg: &str) -> Result<LoadedModel> {
    if arg == fixture::NAME && !Path::new(arg).exists() {
        return Ok(fixture::coinflip());
    }
    ModelDocument::read(arg)?.build()
}

struct Ctx {
    loaded: LoadedModel,
    mode: Mode,
    machine: bool,
}

impl Ctx {
    fn space(&self) -> &StateSpace {
        self.loaded.model.space()
    }

    fn eval(&self) -> Evaluator<'_> {
        Evaluator::with_mode(&self.loaded.model, self.mode)
    }

    fn formula(&self, text: &str) -> Result<Formula> {
        Ok(formula::parse(text, self.mode)?)
    }

    fn event(&self, text: &str) -> Result<StateSet> {
        let trimmed = text.trim();
        match trimmed.strip_prefix('{') {
            Some(rest) => {
                let body = rest
                    .strip_suffix('}')
                    .ok_or_else(|| Error::Document(format!("unterminated state list `{text}`")))?;
                let names = body.split(',').map(str::trim).filter(|s| !s.is_empty());
                self.space().set_of(names)
            }
            None => self.eval().truth_set(&self.formula(trimmed)?),
        }
    }

    fn set(&self, set: &StateSet) -> String {
        if self.machine {
            self.space().names_in(set).collect::<Vec<_>>().join(",")
        } else {
            self.space().display_set(set)
        }
    }

    fn scalar(&self, key: &str, value: &Rational) -> String {
        if self.machine {
            format!("{key}={}\n", rational::format(value))
        } else {
            format!("{}\n", rational::format(value))
        }
    }

    fn mass(&self, m: &MassFunction) -> String {
        let mut out = String::new();
        for (set, mass) in m.iter() {
            if self.machine {
                writeln!(out, "mass[{}]={}", self.set(set), rational::format(mass)).unwrap();
            } else {
                writeln!(out, "{}  {}", self.set(set), rational::format(mass)).unwrap();
            }
        }
        out
    }
}

fn execute(cli: &Cli) -> Result<String> {
    let model_arg = match &cli.command {
        Command::Check { model }
        | Command::TruthSet { model, .. }
        | Command::Interpret { model, .. }
        | Command::Cohere { model, .. } => model,
        Command::Condition { m, .. }
        | Command::Bel { m, .. }
        | Command::Degree { m, .. }
        | Command::Mass { m, .. }
        | Command::Combine { m, .. }
        | Command::PointwiseCondition { m, .. } => &m.model,
    };
    let ctx = Ctx {
        loaded: load_model(model_arg)?,
        mode: cli.mode.into(),
        machine: cli.format == OutputFormat::Machine,
    };
    let measure = |m: &MeasureArgs| ctx.loaded.measure(&m.measure);
    let ev = ctx.eval();
    let mut out = String::new();

    match &cli.command {
        Command::Check { .. } => {
            let model = &ctx.loaded.model;
            if ctx.machine {
                writeln!(out, "states={}", ctx.space().names().join(",")).unwrap();
            } else {
                writeln!(
                    out,
                    "ok: {} states, {} atoms, {} measures",
                    ctx.space().len(),
                    model.atoms().count(),
                    ctx.loaded.measures.len()
                )
                .unwrap();
            }
            for (atom, v) in model.atoms() {
                let truth = ctx.set(&v.truth_set());
                if ctx.machine {
                    writeln!(out, "atom.{atom}.coherent={}", v.is_coherent()).unwrap();
                    writeln!(out, "atom.{atom}.constant={}", v.is_constant()).unwrap();
                    writeln!(out, "atom.{atom}.truth_set={truth}").unwrap();
                } else {
                    let status = if v.is_coherent() {
                        "coherent"
                    } else {
                        "incoherent"
                    };
                    let kind = if v.is_constant() { ", constant" } else { "" };
                    writeln!(out, "atom {atom}: {status}{kind}, truth set {truth}").unwrap();
                }
            }
            for name in ctx.loaded.measures.keys() {
                if ctx.machine {
                    writeln!(out, "measure.{name}=valid").unwrap();
                } else {
                    writeln!(out, "measure {name}: valid").unwrap();
                }
            }
        }
        Command::TruthSet { formula, .. } => {
            let set = ev.truth_set(&ctx.formula(formula)?)?;
            if ctx.machine {
                writeln!(out, "truth_set={}", ctx.set(&set)).unwrap();
            } else {
                writeln!(out, "{}", ctx.set(&set)).unwrap();
            }
        }
        Command::Interpret { formula, state, .. } => {
            let x = ctx.space().require(state)?;
            let set = ev.interpret(&ctx.formula(formula)?, x)?;
            if ctx.machine {
                writeln!(out, "interpretation={}", ctx.set(&set)).unwrap();
            } else {
                writeln!(out, "{}", ctx.set(&set)).unwrap();
            }
        }
        Command::Cohere { atom, .. } => {
            let model = &ctx.loaded.model;
            let closure = model.coherence_closure(atom)?;
            if ctx.machine {
                writeln!(out, "coherent={}", model.is_coherent(atom)?).unwrap();
            }
            for x in ctx.space().states() {
                let name = ctx.space().name(x);
                if ctx.machine {
                    writeln!(out, "closure.{name}={}", ctx.set(closure.at(x))).unwrap();
                } else {
                    writeln!(out, "{name}: {}", ctx.set(closure.at(x))).unwrap();
                }
            }
        }
        Command::Condition { m, given } => {
            let pi = measure(m)?;
            let post = match given {
                Some(g) => belief::posterior(&ev, pi, &ctx.formula(g)?)?,
                None => pi.clone(),
            };
            for x in ctx.space().states() {
                let name = ctx.space().name(x);
                let w = rational::format(post.weight(x));
                if ctx.machine {
                    writeln!(out, "weight.{name}={w}").unwrap();
                } else {
                    writeln!(out, "{name}  {w}").unwrap();
                }
            }
        }
        Command::Bel { m, evidence, event } => {
            let value = belief::bel(
                &ev,
                measure(m)?,
                &ctx.formula(evidence)?,
                &ctx.event(event)?,
            )?;
            out.push_str(&ctx.scalar("bel", &value));
        }
        Command::Degree { m, of, given } => {
            let pi = measure(m)?;
            let phi = ctx.formula(of)?;
            let value = match given {
                Some(g) => belief::degree_given(&ev, pi, &phi, &ctx.formula(g)?)?,
                None => belief::degree(&ev, pi, &phi)?,
            };
            out.push_str(&ctx.scalar("degree", &value));
        }
        Command::Mass { m, evidence } => {
            let mass = belief::mass_from_evidence(&ev, measure(m)?, &ctx.formula(evidence)?)?;
            out.push_str(&ctx.mass(&mass));
        }
        Command::Combine { m, rule, e1, e2 } => {
            let pi = measure(m)?;
            let (psi1, psi2) = (ctx.formula(e1)?, ctx.formula(e2)?);
            let combined = match rule {
                Rule::Dempster => belief::dempster_combine(
                    &belief::mass_from_evidence(&ev, pi, &psi1)?,
                    &belief::mass_from_evidence(&ev, pi, &psi2)?,
                )?,
                Rule::Pointwise => belief::pointwise_combine(&ev, pi, &psi1, &psi2)?,
            };
            if ctx.machine {
                let name = match rule {
                    Rule::Dempster => "dempster",
                    Rule::Pointwise => "pointwise",
                };
                writeln!(out, "rule={name}").unwrap();
            }
            out.push_str(&ctx.mass(&combined));
        }
        Command::PointwiseCondition { m, of, given } => {
            let value = exploratory::pointwise_condition(
                &ev,
                measure(m)?,
                &ctx.formula(of)?,
                &ctx.formula(given)?,
            )?;
            if ctx.machine {
                writeln!(out, "exploratory=true").unwrap();
            } else {
                writeln!(
                    out,
                    "EXPLORATORY: pointwise conditioning; interpretations of probability 0 are skipped and weights are not renormalized"
                )
                .unwrap();
            }
            out.push_str(&ctx.scalar("pointwise_condition", &value));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("ulogic").chain(args.iter().copied()))
    }

    #[test]
    fn bel_on_fixture() {
        let o = run_args(&[
            "bel",
            "coinflip",
            "--measure",
            "pi",
            "--evidence",
            "pbar",
            "--event",
            "h",
        ]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(o.stdout, "3/5\n");
    }

    #[test]
    fn event_as_state_list() {
        let o = run_args(&[
            "bel",
            "coinflip",
            "--measure",
            "pi",
            "--evidence",
            "pbar",
            "--event",
            "{H-acc, H-sh, H-st}",
        ]);
        assert_eq!(o.stdout, "3/5\n");
        let o = run_args(&[
            "bel",
            "coinflip",
            "--measure",
            "pi",
            "--evidence",
            "pbar",
            "--event",
            "{}",
        ]);
        assert_eq!(o.stdout, "0\n");
        let o = run_args(&[
            "bel",
            "coinflip",
            "--measure",
            "pi",
            "--evidence",
            "pbar",
            "--event",
            "{H-acc",
        ]);
        assert_eq!(o.code, EXIT_INVALID);
        let o = run_args(&[
            "bel",
            "coinflip",
            "--measure",
            "pi",
            "--evidence",
            "pbar",
            "--event",
            "{Q}",
        ]);
        assert_eq!(o.code, EXIT_INVALID);
        assert!(o.stderr.contains("`Q`"));
    }

    #[test]
    fn error_classes() {
        let o = run_args(&[
            "bel",
            "coinflip",
            "--measure",
            "piZero",
            "--evidence",
            "pbar",
            "--event",
            "h",
        ]);
        assert_eq!(o.code, EXIT_UNDEFINED);
        assert!(o.stderr.contains("probability 0"));
        let o = run_args(&["truth-set", "coinflip", "pbar &"]);
        assert_eq!(o.code, EXIT_INVALID);
        let o = run_args(&["truth-set", "coinflip", "zz"]);
        assert_eq!(o.code, EXIT_INVALID);
        assert!(o.stderr.contains("zz"));
        let o = run_args(&["frobnicate"]);
        assert_eq!(o.code, EXIT_USAGE);
        let o = run_args(&[
            "bel",
            "coinflip",
            "--measure",
            "nope",
            "--evidence",
            "pbar",
            "--event",
            "h",
        ]);
        assert_eq!(o.code, EXIT_INVALID);
        let o = run_args(&["check", "/definitely/not/here.json"]);
        assert_eq!(o.code, EXIT_INVALID);
    }

    #[test]
    fn help_exits_zero() {
        let o = run_args(&["--help"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("pointwise-condition"));
    }

    #[test]
    fn mode_flag_controls_nested_entailment() {
        let o = run_args(&["truth-set", "coinflip", "(pbar => h) & pbar"]);
        assert_eq!(o.code, EXIT_INVALID);
        assert!(o.stderr.contains("nested"));
        let o = run_args(&[
            "--mode",
            "extended",
            "--format",
            "machine",
            "truth-set",
            "coinflip",
            "(pbar => h) & pbar",
        ]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(o.stdout, "truth_set=H-acc\n");
    }
}
