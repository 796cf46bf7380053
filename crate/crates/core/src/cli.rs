//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.
//! `check` reports and never judges, so it exits 0 even when binomials are
//! unexplained.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::configs::{
    classify_pair, exhaustive_pair_search, gen_even_config, gen_odd_config, matches_known_family,
    satisfies_necessary_conditions, DEFAULT_PAIR_BUDGET,
};
use crate::covariance::sigma_numerator;
use crate::determinant::{det_general, det_path_recurrence};
use crate::error::{Error, Result};
use crate::ideal::{conjecture_status, linear_part, ConjectureReport};
use crate::model::{load, serialize, ColoredObject, ColoredPath, Labels};
use crate::poly::Polynomial;
use crate::search::{hunt, Budget, Constraint, HuntOptions};
use crate::verify::{run_suite, SuiteReport};

pub const CHECKPOINT_DIR_ENV: &str = "CGM_CHECKPOINT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "colored-cycles",
    version,
    about = "Linear binomials of colored Gaussian cycles"
)]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ConstraintArg {
    None,
    UniformVertex,
    UniformEdge,
    Uniform,
}

impl From<ConstraintArg> for Constraint {
    fn from(c: ConstraintArg) -> Self {
        match c {
            ConstraintArg::None => Constraint::None,
            ConstraintArg::UniformVertex => Constraint::UniformVertex,
            ConstraintArg::UniformEdge => Constraint::UniformEdge,
            ConstraintArg::Uniform => Constraint::Uniform,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Detect linear binomials of a colored cycle and match them to symmetries.
    Check { file: PathBuf },
    /// Determinant of the concentration matrix.
    Det { file: PathBuf },
    /// Numerator of sigma_ij (i <= j, 1-indexed).
    Sigma { file: PathBuf, i: usize, j: usize },
    /// Basis of the linear part of the vanishing ideal.
    LinearPart { file: PathBuf },
    /// Equal-determinant path configurations.
    Configs {
        #[command(subcommand)]
        action: ConfigsAction,
    },
    /// Hunt for colorings with unexplained binomials.
    Search {
        n: usize,
        #[arg(long, value_enum, default_value = "none")]
        constraint: ConstraintArg,
        #[arg(long, conflicts_with = "sample")]
        exhaustive: bool,
        /// Number of canonical classes to sample.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON outcome here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Progress file for resumable runs.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Permit unconstrained exhaustive runs at n >= 7.
        #[arg(long)]
        allow_large: bool,
    },
    /// Run a reproduction suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(crate::verify::SUITES))]
        suite: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConfigsAction {
    /// Generate the even (--even m) or odd (--odd m) configuration.
    Gen {
        #[arg(long, conflicts_with = "odd", required_unless_present = "odd")]
        even: Option<usize>,
        #[arg(long)]
        odd: Option<usize>,
    },
    /// Exhaustively search paths on m vertices for nontrivial equal-det pairs.
    Search {
        m: usize,
        max_v: usize,
        max_e: usize,
        /// Maximum number of paths to enumerate.
        #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET)]
        budget: u128,
    },
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    // Output is buffered so the worker pool never touches the caller's writer.
    let (result, buf) = pool.install(|| {
        let mut buf = Vec::new();
        (execute(&cli, &mut buf), buf)
    });
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("plain data");
    writeln!(out, "{text}")?;
    Ok(())
}

fn legend(labels: &Labels) -> Vec<(String, String)> {
    let v = labels
        .vertex
        .iter()
        .enumerate()
        .map(|(k, n)| (format!("v{k}"), n.clone()));
    let e = labels
        .edge
        .iter()
        .enumerate()
        .map(|(k, n)| (format!("e{k}"), n.clone()));
    v.chain(e).collect()
}

fn write_legend(out: &mut dyn Write, labels: &Labels) -> Result<()> {
    for (var, name) in legend(labels) {
        writeln!(out, "# {var} = {name}")?;
    }
    Ok(())
}

fn load_cycle(path: &Path) -> Result<(crate::model::ColoredCycle, Labels)> {
    let (obj, labels) = load(path)?;
    Ok((obj.into_cycle()?, labels))
}

#[derive(Serialize)]
struct DetOutput {
    polynomial: String,
    variables: Vec<(String, String)>,
}

#[derive(Serialize)]
struct SigmaOutput {
    i: usize,
    j: usize,
    numerator: String,
    shorter_part: Option<String>,
    complement_part: Option<String>,
    variables: Vec<(String, String)>,
}

#[derive(Serialize)]
struct LinearPartOutput {
    dimension: usize,
    numerator_rank: usize,
    binomial_basis: Vec<String>,
    extra_linear_forms: Vec<String>,
}

#[derive(Serialize)]
struct PairOutput {
    p: String,
    q: String,
    determinant: String,
    classification: crate::configs::PairClass,
}

#[derive(Serialize)]
struct PairSearchOutput {
    m: usize,
    paths_examined: u128,
    pairs: Vec<PairFinding>,
}

#[derive(Serialize)]
struct PairFinding {
    p: String,
    q: String,
    family: Option<crate::configs::Family>,
    necessary_conditions: bool,
}

/// JSON shape of `search` results.
#[derive(Debug, Serialize)]
pub struct SearchOutput {
    pub n: usize,
    pub constraint: Constraint,
    pub examined: usize,
    pub resumed_past: Option<String>,
    pub reports: Vec<ConjectureReport>,
}

fn path_json(p: &ColoredPath) -> String {
    let obj = ColoredObject::Path(p.clone());
    serialize(&obj, &Labels::generic(&obj))
}

fn print_report(out: &mut dyn Write, r: &ConjectureReport) -> Result<()> {
    writeln!(out, "cycle n={} canonical {}", r.n, r.canonical)?;
    writeln!(
        out,
        "symmetry group order {} (generators: {})",
        r.symmetry_group_order,
        r.generators
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )?;
    writeln!(out, "{} linear binomials", r.binomials.len())?;
    for e in &r.binomials {
        let tag = if e.explained {
            "explained  "
        } else {
            "UNEXPLAINED"
        };
        writeln!(out, "  {tag} {}  N = {}", e.binomial(), e.numerator)?;
    }
    writeln!(out, "{} unexplained", r.unexplained.len())?;
    if r.linear_part_skipped {
        writeln!(out, "linear part skipped (n too large)")?;
    } else {
        for f in &r.extra_linear_forms {
            writeln!(out, "  non-binomial linear form: {f}")?;
        }
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Check { file } => {
            let (c, labels) = load_cycle(file)?;
            let r = conjecture_status(&c)?;
            if cli.json {
                emit_json(out, &r)?;
            } else {
                print_report(out, &r)?;
                write_legend(out, &labels)?;
            }
            Ok(0)
        }
        Command::Det { file } => {
            let (obj, labels) = load(file)?;
            let d = match &obj {
                ColoredObject::Path(p) => det_path_recurrence(p),
                other => det_general(&other.to_graph())?,
            };
            if cli.json {
                emit_json(
                    out,
                    &DetOutput {
                        polynomial: d.to_string(),
                        variables: legend(&labels),
                    },
                )?;
            } else {
                writeln!(out, "{d}")?;
                write_legend(out, &labels)?;
            }
            Ok(0)
        }
        Command::Sigma { file, i, j } => {
            let (c, labels) = load_cycle(file)?;
            let s = sigma_numerator(&c, *i, *j)?;
            let o = SigmaOutput {
                i: s.i,
                j: s.j,
                numerator: s.numerator.to_string(),
                shorter_part: s.shorter_part().map(Polynomial::to_string),
                complement_part: s.complement_part().map(Polynomial::to_string),
                variables: legend(&labels),
            };
            if cli.json {
                emit_json(out, &o)?;
            } else {
                writeln!(out, "N({},{}) = {}", o.i, o.j, o.numerator)?;
                if let (Some(a), Some(b)) = (&o.shorter_part, &o.complement_part) {
                    writeln!(out, "  shorter arc:    {a}")?;
                    writeln!(out, "  complement arc: {b}")?;
                }
                write_legend(out, &labels)?;
            }
            Ok(0)
        }
        Command::LinearPart { file } => {
            let (c, _) = load_cycle(file)?;
            let lp = linear_part(&c)?;
            let o = LinearPartOutput {
                dimension: lp.dimension,
                numerator_rank: lp.numerator_rank,
                binomial_basis: lp.binomial_basis.iter().map(|b| b.to_string()).collect(),
                extra_linear_forms: lp.extra_forms.iter().map(|f| f.to_string()).collect(),
            };
            if cli.json {
                emit_json(out, &o)?;
            } else {
                writeln!(
                    out,
                    "dimension {} (numerator rank {})",
                    o.dimension, o.numerator_rank
                )?;
                for b in &o.binomial_basis {
                    writeln!(out, "  {b}")?;
                }
                for f in &o.extra_linear_forms {
                    writeln!(out, "  {f}")?;
                }
            }
            Ok(0)
        }
        Command::Configs {
            action: ConfigsAction::Gen { even, odd },
        } => {
            let (p, q) = match (even, odd) {
                (Some(m), _) => gen_even_config(*m)?,
                (None, Some(m)) => gen_odd_config(*m)?,
                (None, None) => unreachable!("clap requires one of --even/--odd"),
            };
            let o = PairOutput {
                p: path_json(&p),
                q: path_json(&q),
                determinant: det_path_recurrence(&p).to_string(),
                classification: classify_pair(&p, &q)?,
            };
            if cli.json {
                emit_json(out, &o)?;
            } else {
                writeln!(out, "P: {}", o.p)?;
                writeln!(out, "Q: {}", o.q)?;
                writeln!(out, "det: {}", o.determinant)?;
                writeln!(out, "class: {:?}", o.classification)?;
            }
            Ok(0)
        }
        Command::Configs {
            action:
                ConfigsAction::Search {
                    m,
                    max_v,
                    max_e,
                    budget,
                },
        } => {
            let s = exhaustive_pair_search(*m, *max_v, *max_e, *budget)?;
            let o = PairSearchOutput {
                m: s.m,
                paths_examined: s.paths_examined,
                pairs: s
                    .pairs
                    .iter()
                    .map(|(p, q)| PairFinding {
                        p: path_json(p),
                        q: path_json(q),
                        family: matches_known_family(p, q),
                        necessary_conditions: satisfies_necessary_conditions(p, q),
                    })
                    .collect(),
            };
            if cli.json {
                emit_json(out, &o)?;
            } else {
                writeln!(
                    out,
                    "{} paths, {} nontrivial equal-det pairs",
                    o.paths_examined,
                    o.pairs.len()
                )?;
                for f in &o.pairs {
                    let fam = f
                        .family
                        .map_or("no known family".to_string(), |x| format!("{x:?} family"));
                    writeln!(out, "  {} ~ {} [{fam}]", f.p, f.q)?;
                }
            }
            Ok(0)
        }
        Command::Search {
            n,
            constraint,
            exhaustive,
            sample,
            seed,
            out: out_file,
            checkpoint,
            allow_large,
        } => {
            let constraint: Constraint = (*constraint).into();
            let budget = match (exhaustive, sample) {
                (_, Some(k)) => Budget::Sample { k: *k, seed: *seed },
                (true, None) => Budget::Exhaustive,
                (false, None) => {
                    return Err(Error::Parse {
                        line: 1,
                        column: 1,
                        message: "choose --exhaustive or --sample k".into(),
                    })
                }
            };
            let checkpoint = checkpoint.clone().or_else(|| {
                std::env::var_os(CHECKPOINT_DIR_ENV).map(|dir| {
                    let tag = match budget {
                        Budget::Exhaustive => "exhaustive".to_string(),
                        Budget::Sample { k, seed } => format!("sample-{k}-{seed}"),
                    };
                    PathBuf::from(dir).join(format!("search-n{n}-{constraint}-{tag}.ckpt"))
                })
            });
            let opts = HuntOptions {
                checkpoint,
                allow_large_exhaustive: *allow_large,
                chunk: None,
            };
            let res = hunt(*n, constraint, budget, &opts)?;
            let o = SearchOutput {
                n: res.n,
                constraint: res.constraint,
                examined: res.examined,
                resumed_past: res.resumed_past.map(|e| e.to_string()),
                reports: res.reports,
            };
            if let Some(path) = out_file {
                std::fs::write(path, serde_json::to_string_pretty(&o).expect("plain data"))?;
            }
            if cli.json {
                emit_json(out, &o)?;
            } else {
                writeln!(
                    out,
                    "n={} {}: {} classes examined, {} with unexplained binomials",
                    o.n,
                    o.constraint,
                    o.examined,
                    o.reports.len()
                )?;
                for r in &o.reports {
                    let list: Vec<String> = r.unexplained.iter().map(|b| b.to_string()).collect();
                    writeln!(out, "  {}  {}", r.canonical, list.join(", "))?;
                }
            }
            Ok(0)
        }
        Command::Verify { suite } => {
            let report: SuiteReport = run_suite(suite)?;
            if cli.json {
                emit_json(out, &report)?;
            } else {
                writeln!(out, "{report}")?;
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}
