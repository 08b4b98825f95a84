//! Command-line front end. Exit codes: 0 on success, 1 when a theorem-backed
//! check fails (or a single check returns false), 2 on usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::parse_point_set;
use crate::harness::campaign::{run_campaign_with, Execution};
use crate::harness::config::{CampaignConfig, Check, FieldId, SetSize};
use crate::harness::sample::{sample_scalar_set, sample_symmetric_set};
use crate::incidence::{expected_second_moment, first_moment, moment_profile, MomentProfile};
use crate::pinned::{pinned_extremes, pinned_pair, threshold};
use crate::plane::Point;
use crate::sumsets::{aa_plus_aa_stats, glibichuk_report, mult_subgroup, subfield_example, AaStats, ScalarSet};

#[derive(Parser, Debug)]
#[command(
    name = "pinned-dot",
    version,
    about = "Pinned dot products and incidences over F_q^2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification campaign from flags and/or a JSON config file.
    Verify(VerifyArgs),
    /// Find a pinned pair for the point set in FILE and print the witness as JSON.
    Pinned(SetArgs),
    /// Print both sides of the second-moment identity for the point set in FILE.
    Identity(SetArgs),
    /// Subfield product set in F_{p^2}: every pinned dot set has size p.
    Extremal {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that the 8-fold sumset of AA covers the field for a sampled symmetric A.
    Glibichuk {
        #[arg(long)]
        field: FieldId,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Measure |AA+AA| over sampled sets A (or a multiplicative subgroup).
    Stats {
        #[arg(long)]
        field: FieldId,
        #[arg(long)]
        size: Option<u64>,
        /// Use the subgroup of order M instead of sampling.
        #[arg(long, value_name = "M")]
        subgroup: Option<u64>,
        #[arg(long, default_value_t = 10)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Field as p,k; repeatable.
    #[arg(long = "field")]
    fields: Vec<FieldId>,
    #[arg(long)]
    trials: Option<usize>,
    /// q+1, q, 2q or an explicit integer.
    #[arg(long)]
    size: Option<SetSize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated subset of identity,theorem,imp,corollary,sharpness,glibichuk,lines.
    #[arg(long)]
    checks: Option<String>,
    /// JSON campaign config; flags override its values.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Point set file used for every trial instead of sampling.
    #[arg(long)]
    set: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Run trials on one thread.
    #[arg(long)]
    serial: bool,
}

#[derive(Args, Debug)]
struct SetArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

pub fn main() -> i32 {
    run(std::env::args_os())
}

pub fn run(args: impl IntoIterator<Item = impl Into<OsString> + Clone>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_json(out: Option<&PathBuf>, value: &impl Serialize) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(out, &text)
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Verify(args) => verify(args),
        Command::Pinned(args) => {
            let e = parse_point_set(&fs::read_to_string(&args.input)?)?;
            emit_json(args.out.as_ref(), &pinned_pair(&e)?)?;
            Ok(0)
        }
        Command::Identity(args) => {
            let e = parse_point_set(&fs::read_to_string(&args.input)?)?;
            #[derive(Serialize)]
            struct IdentityOut {
                field: String,
                q: u32,
                size: usize,
                lhs: u64,
                rhs: u64,
                holds: bool,
                first_moment: u64,
                first_moment_expected: u64,
                profile: MomentProfile,
            }
            let q = e.spec().q();
            let n = e.len() as u64;
            let profile = moment_profile(&e);
            let out = IdentityOut {
                field: e.spec().designation(),
                q,
                size: e.len(),
                lhs: profile.total,
                rhs: expected_second_moment(n, q as u64),
                holds: profile.total == expected_second_moment(n, q as u64),
                first_moment: first_moment(&e),
                first_moment_expected: n * (q as u64 + 1),
                profile,
            };
            emit_json(args.out.as_ref(), &out)?;
            Ok(if out.holds { 0 } else { 1 })
        }
        Command::Extremal { p, out } => extremal(p, out),
        Command::Glibichuk { field, size, seed, out } => {
            let spec = field.build()?;
            let a = sample_symmetric_set(&spec, size, seed, 0)?;
            let report = glibichuk_report(&a)?;
            #[derive(Serialize)]
            struct GlibichukOut {
                field: String,
                a: ScalarSet,
                pinned_cover: bool,
                eightfold: bool,
                passed: bool,
            }
            emit_json(
                out.as_ref(),
                &GlibichukOut {
                    field: spec.designation(),
                    a,
                    pinned_cover: report.pinned_cover,
                    eightfold: report.eightfold,
                    passed: report.passed(),
                },
            )?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Stats {
            field,
            size,
            subgroup,
            trials,
            seed,
            out,
            format,
        } => stats(field, size, subgroup, trials, seed, out, format),
    }
}

fn verify(args: VerifyArgs) -> Result<i32> {
    let mut config = match &args.input {
        Some(path) => serde_json::from_str::<CampaignConfig>(&fs::read_to_string(path)?)?,
        None => CampaignConfig::new([], [Check::Identity, Check::Theorem, Check::Imp, Check::Corollary]),
    };
    if !args.fields.is_empty() {
        config.fields = args.fields;
    }
    if let Some(t) = args.trials {
        config.trials = t;
    }
    if let Some(s) = args.size {
        config.set_size = s;
    }
    if let Some(s) = args.seed {
        config.seed = s;
    }
    if let Some(c) = &args.checks {
        config.checks = Check::parse_list(c)?;
    }
    if let Some(path) = &args.set {
        let e = parse_point_set(&fs::read_to_string(path)?)?;
        config.fields = vec![FieldId::from(e.spec())];
        config.fixed_set = Some(e);
    }
    let exec = if args.serial {
        Execution::Serial
    } else {
        Execution::Parallel
    };
    let report = run_campaign_with(&config, exec)?;
    let text = match args.format {
        Format::Json => report.to_json()?,
        Format::Csv => report.to_csv()?,
    };
    emit(args.out.as_ref(), &text)?;
    let defects = report.defects();
    if defects > 0 {
        eprintln!("{defects} theorem-backed check(s) failed");
        return Ok(1);
    }
    Ok(0)
}

fn extremal(p: u64, out: Option<PathBuf>) -> Result<i32> {
    let e = subfield_example(p)?;
    let q = e.spec().q();
    let ext = pinned_extremes(&e);
    #[derive(Serialize)]
    struct ExtremalOut {
        field: String,
        p: u64,
        q: u32,
        size: usize,
        pairs: u64,
        min_pinned: usize,
        max_pinned: usize,
        threshold: usize,
        sharp: bool,
        points: Vec<Point>,
    }
    let sharp = ext.min == p as usize && ext.max == p as usize && e.len() == q as usize;
    emit_json(
        out.as_ref(),
        &ExtremalOut {
            field: e.spec().designation(),
            p,
            q,
            size: e.len(),
            pairs: ext.pairs,
            min_pinned: ext.min,
            max_pinned: ext.max,
            threshold: threshold(q),
            sharp,
            points: e.points().to_vec(),
        },
    )?;
    Ok(if sharp { 0 } else { 1 })
}

fn stats(
    field: FieldId,
    size: Option<u64>,
    subgroup: Option<u64>,
    trials: u64,
    seed: u64,
    out: Option<PathBuf>,
    format: Format,
) -> Result<i32> {
    let spec = field.build()?;
    #[derive(Serialize)]
    struct Row {
        trial: u64,
        #[serde(flatten)]
        stats: AaStats,
        a: ScalarSet,
    }
    let sets: Vec<ScalarSet> = match (subgroup, size) {
        (Some(m), _) => vec![mult_subgroup(&spec, m)?],
        (None, Some(n)) => (0..trials)
            .map(|t| sample_scalar_set(&spec, n, seed, t))
            .collect::<Result<_>>()?,
        (None, None) => return Err(Error::InvalidConfig("stats needs --size or --subgroup".into())),
    };
    let rows: Vec<Row> = sets
        .into_iter()
        .enumerate()
        .map(|(t, a)| {
            Ok(Row {
                trial: t as u64,
                stats: aa_plus_aa_stats(&a)?,
                a,
            })
        })
        .collect::<Result<_>>()?;
    match format {
        Format::Json => emit_json(out.as_ref(), &rows)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["trial", "size", "card_aa_aa", "hi_bound", "subgroup"])?;
            for r in &rows {
                w.write_record([
                    r.trial.to_string(),
                    r.stats.size.to_string(),
                    r.stats.card_aa_aa.to_string(),
                    r.stats.hi_bound.to_string(),
                    r.stats.subgroup.to_string(),
                ])?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            emit(out.as_ref(), &String::from_utf8(bytes).expect("csv output is utf-8"))?;
        }
    }
    Ok(0)
}
