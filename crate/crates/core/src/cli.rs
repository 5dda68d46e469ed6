//! Command-line front end. Exit codes: 0 holds / certified, 1 violation or
//! failed hypothesis, 2 usage, parse or applicability errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::convexity::{log_check_from, Mode};
use crate::error::{Error, Result};
use crate::exact_arith::scalar::rat_to_string;
use crate::exact_arith::Rat;
use crate::qpolys::{gen_poly_seq, q_log_concave_check, q_log_convex_check, run_conjecture};
use crate::recurrence_analysis::{
    bisection_analysis, check_interlacing, check_thm_c_minus, check_thm_c_plus,
    check_thm_crit_plus, check_thm_lc_plus, suggest_mu, Certificate, Mu,
};
use crate::report::Report;
use crate::sequences::{
    gen_from_recurrence3, gen_named, parse_seq_spec, Recurrence3, Seq, SeqSpec, SEQUENCE_NAMES,
};
use crate::transforms::{named_transform, verify_identity, IDENTITY_NAMES};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_N: usize = 100;

/// Spec files shipped with the crate, usable by bare file name.
const BUNDLED_SPECS: &[(&str, &str)] = &[
    ("motzkin.json", include_str!("../specs/motzkin.json")),
    ("fine.json", include_str!("../specs/fine.json")),
    ("fine_shifted.json", include_str!("../specs/fine_shifted.json")),
    ("derangements.json", include_str!("../specs/derangements.json")),
    ("directed_animals.json", include_str!("../specs/directed_animals.json")),
    ("delannoy.json", include_str!("../specs/delannoy.json")),
    ("schroder.json", include_str!("../specs/schroder.json")),
    ("polyhexes.json", include_str!("../specs/polyhexes.json")),
    ("cubic_walks.json", include_str!("../specs/cubic_walks.json")),
    ("fibonacci.json", include_str!("../specs/fibonacci.json")),
];

#[derive(Parser, Debug)]
#[command(name = "logconvex", version, about = "Exact log-convexity checks for combinatorial sequences")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Largest index examined.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// First index examined.
    #[arg(long, global = true)]
    pub from: Option<usize>,
    /// Sequence spec file, instead of a catalogue name.
    #[arg(long, global = true)]
    pub spec: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckMode {
    Logconvex,
    Logconcave,
    Qlogconvex,
    Qlogconcave,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Theorem {
    CritPlus,
    CPlus,
    LcPlus,
    CMinus,
    CMinusLc,
    Bisection,
    Interlacing,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print z_0 ..= z_n.
    Generate { target: Option<String> },
    /// Log-convexity (or a dual) of a sequence or polynomial family.
    Check {
        target: Option<String>,
        #[arg(long, value_enum, default_value_t = CheckMode::Logconvex)]
        mode: CheckMode,
    },
    /// Certify a three-term recurrence with one of the criteria.
    Analyze {
        target: Option<String>,
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Comparison sequence, e.g. "(2n+5)/2"; suggested when omitted.
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, default_value_t = 0)]
        anchor: usize,
    },
    /// Apply a named triangle transform to a sequence.
    Transform {
        triangle: String,
        target: Option<String>,
    },
    /// Verify a named identity, or `all`.
    Identity { name: String },
    /// Search for a counterexample to an open conjecture.
    Conjecture {
        name: String,
        #[arg(long, default_value_t = 100)]
        corpus: usize,
        #[arg(long, default_value_t = 12)]
        len: usize,
    },
}

/// Runs a parsed command, writing the report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let n = cli.n.unwrap_or(DEFAULT_N);
    let emit = |out: &mut dyn Write, r: &Report| -> Result<()> {
        let text = match cli.format {
            Format::Plain => r.to_plain(),
            Format::Json => r.to_json() + "\n",
        };
        write_out(out, &text)
    };
    match &cli.command {
        Command::Generate { target } => {
            let (_, z) = terms(&resolve(target.as_deref(), cli.spec.as_deref())?, n)?;
            write_terms(out, &z, cli.format)?;
            Ok(EXIT_HOLDS)
        }
        Command::Check { target, mode } => {
            let (r, code) = check(target.as_deref(), cli, *mode, n)?;
            emit(out, &r)?;
            Ok(code)
        }
        Command::Analyze {
            target,
            theorem,
            mu,
            anchor,
        } => {
            let spec = resolve(target.as_deref(), cli.spec.as_deref())?;
            let rec = spec.recurrence().ok_or_else(|| Error::Validation {
                field: "target".into(),
                message: format!("`{}` is not given by a three-term recurrence", spec.label()),
            })?;
            let cert = analyze(&rec, *theorem, mu.as_deref(), *anchor, n)?;
            let status = if cert.certified() { "certified" } else { "not_certified" };
            let r = Report::new("analyze", &spec.label(), cert.range, status).certificate(&cert);
            emit(out, &r)?;
            Ok(if cert.certified() { EXIT_HOLDS } else { EXIT_VIOLATION })
        }
        Command::Transform { triangle, target } => {
            let (_, z) = terms(&resolve(target.as_deref(), cli.spec.as_deref())?, n)?;
            let image = named_transform(triangle, &z)?;
            write_terms(out, &image, cli.format)?;
            Ok(EXIT_HOLDS)
        }
        Command::Identity { name } => {
            let names: Vec<&str> = if name == "all" {
                IDENTITY_NAMES.to_vec()
            } else {
                vec![name.as_str()]
            };
            let mut code = EXIT_HOLDS;
            let mut reports = Vec::new();
            for id in names {
                let rep = verify_identity(id, n)?;
                let status = if rep.holds() { "holds" } else { "fails" };
                if !rep.holds() {
                    code = EXIT_VIOLATION;
                }
                reports.push(Report::new("identity", id, rep.range, status).witness(rep.first_mismatch.as_ref()));
            }
            match cli.format {
                Format::Plain => {
                    for r in &reports {
                        write_out(out, &r.to_plain())?;
                    }
                }
                Format::Json if reports.len() == 1 => emit(out, &reports[0])?,
                Format::Json => {
                    let text = serde_json::to_string_pretty(&reports).expect("reports serialize");
                    write_out(out, &(text + "\n"))?;
                }
            }
            Ok(code)
        }
        Command::Conjecture { name, corpus, len } => {
            let bound = cli.n.unwrap_or(match name.as_str() {
                "squared_binomial_c1c2" => 40,
                _ => DEFAULT_N,
            });
            let rep = run_conjecture(name, bound, *corpus, *len)?;
            let status = if rep.holds() { "no_counterexample" } else { "counterexample" };
            let range = if name.ends_with("_transform") { (0, *len) } else { (0, bound) };
            let r = Report::new("conjecture", name, range, status)
                .witness(rep.counterexample.as_ref())
                .bound(&rep.bound_checked);
            emit(out, &r)?;
            Ok(if rep.holds() { EXIT_HOLDS } else { EXIT_VIOLATION })
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Validation {
        field: "output".into(),
        message: e.to_string(),
    })
}

fn write_terms(out: &mut dyn Write, z: &Seq<Rat>, format: Format) -> Result<()> {
    let digits: Vec<String> = z.values().iter().map(rat_to_string).collect();
    let text = match format {
        Format::Plain => digits.iter().map(|d| format!("{d}\n")).collect(),
        Format::Json => serde_json::to_string(&digits).expect("strings serialize") + "\n",
    };
    write_out(out, &text)
}

/// A catalogue name, a spec path, or the file name of a bundled spec.
pub fn resolve(target: Option<&str>, spec: Option<&Path>) -> Result<SeqSpec> {
    let path = match (spec, target) {
        (Some(p), _) => p.to_path_buf(),
        (None, Some(t)) if t.ends_with(".json") => PathBuf::from(t),
        (None, Some(t)) => {
            if !SEQUENCE_NAMES.contains(&t) {
                return Err(Error::UnknownSequence(t.to_string()));
            }
            return Ok(SeqSpec::Named {
                name: t.to_string(),
                offset: 0,
            });
        }
        (None, None) => {
            return Err(Error::Validation {
                field: "target".into(),
                message: "give a sequence name, a spec file, or --spec".into(),
            })
        }
    };
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => {
            let file = path.file_name().and_then(|f| f.to_str()).unwrap_or("");
            match BUNDLED_SPECS.iter().find(|(name, _)| *name == file) {
                Some((_, body)) if path.components().count() == 1 => body.to_string(),
                _ => {
                    return Err(Error::Validation {
                        field: "spec".into(),
                        message: format!("{}: {e}", path.display()),
                    })
                }
            }
        }
    };
    parse_seq_spec(&text)
}

/// `z_0 ..= z_n` with the spec's offset.
pub fn terms(spec: &SeqSpec, n: usize) -> Result<(String, Seq<Rat>)> {
    let z = match spec {
        SeqSpec::Named { name, offset } => gen_named(name, n)?.to_rat().with_offset(*offset),
        SeqSpec::Recurrence(rec) => gen_from_recurrence3(rec, n)?.terms,
    };
    Ok((spec.label(), z))
}

fn check(target: Option<&str>, cli: &Cli, mode: CheckMode, n: usize) -> Result<(Report, i32)> {
    let (report, holds) = match mode {
        CheckMode::Logconvex | CheckMode::Logconcave => {
            let spec = resolve(target, cli.spec.as_deref())?;
            let (label, z) = terms(&spec, n)?;
            let m = if mode == CheckMode::Logconvex { Mode::Convex } else { Mode::Concave };
            let from = cli.from.unwrap_or(z.offset());
            let rep = log_check_from(&z, m, from)?;
            let status = if rep.holds() { "holds" } else { "fails" };
            let last = z.offset() + z.len().saturating_sub(1);
            (
                Report::new("check", &label, (from, last), status).witness(rep.first_violation.as_ref()),
                rep.holds(),
            )
        }
        CheckMode::Qlogconvex | CheckMode::Qlogconcave => {
            let name = target.ok_or_else(|| Error::Validation {
                field: "target".into(),
                message: "give a polynomial family".into(),
            })?;
            let ps = gen_poly_seq(name, n)?;
            let rep = if mode == CheckMode::Qlogconvex {
                q_log_convex_check(&ps)?
            } else {
                q_log_concave_check(&ps)?
            };
            let status = if rep.holds() { "holds" } else { "fails" };
            (
                Report::new("check", name, (0, n), status).witness(rep.first_violation.as_ref()),
                rep.holds(),
            )
        }
    };
    Ok((report, if holds { EXIT_HOLDS } else { EXIT_VIOLATION }))
}

fn analyze(rec: &Recurrence3, theorem: Theorem, mu: Option<&str>, anchor: usize, n: usize) -> Result<Certificate> {
    match theorem {
        Theorem::CritPlus => check_thm_crit_plus(rec, n),
        Theorem::LcPlus => check_thm_lc_plus(rec, n),
        Theorem::Interlacing => check_interlacing(rec, n),
        Theorem::CPlus => match mu {
            Some(text) => check_thm_c_plus(rec, &Mu::parse(text)?, n),
            None => {
                let mut s = suggest_mu(rec, n, 64)?;
                let mut cert = s.verify(rec, n)?;
                cert.note("mu suggested from lambda lower bounds");
                Ok(cert)
            }
        },
        Theorem::CMinus => check_thm_c_minus(rec, n, anchor, Mode::Convex),
        Theorem::CMinusLc => check_thm_c_minus(rec, n, anchor, Mode::Concave),
        Theorem::Bisection => bisection_analysis(rec, n),
    }
}
