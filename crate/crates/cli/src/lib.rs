//! Command-line driver. `run` parses arguments, writes the report to `out`
//! and diagnostics to `err`, and returns the process exit status.
//!
//! Exit status: 0 on success (for `check` and `verify`: the predicate or
//! every check holds), 1 when a `check` predicate or a `verify` check fails,
//! 2 on malformed flags or invalid input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sparsegroup::enumerate::census;
use sparsegroup::ideals::is_arf;
use sparsegroup::io::{format_gap_line, parse_gap_line, parse_gap_list, SemigroupRecord};
use sparsegroup::kappa::{is_kappa_sparse, is_pure_kappa_sparse};
use sparsegroup::leaps::{is_hyperelliptic, is_sparse, leap_profile, leap_set};
use sparsegroup::verify::verify;
use sparsegroup::{
    ClassificationReport, Emit, EnumerationRequest, Mode, NumericalSemigroup, DEFAULT_GENUS_CAP,
};

#[derive(Parser, Debug)]
#[command(
    name = "sparsegroup",
    version,
    about = "Numerical semigroups and the kappa-sparse hierarchy"
)]
struct Cli {
    /// Largest genus `enumerate` and `verify` will accept.
    #[arg(long, global = true, env = "SPARSEGROUP_MAX_GENUS", default_value_t = DEFAULT_GENUS_CAP)]
    genus_cap: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Genus, conductor, Frobenius number and minimal generators.
    Info(Input),
    /// Test class membership; exits 0 iff every requested predicate holds.
    Check(CheckArgs),
    /// Leap profile as JSON, followed by the leaps as TSV rows.
    Leaps(Input),
    /// Position in the trivial / ordinary / Arf / sparse / pure-kappa hierarchy.
    Classify(ClassifyArgs),
    /// List the semigroups of one genus, or count every genus up to it.
    Enumerate(EnumerateArgs),
    /// Check the structural results exhaustively up to a genus.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// Comma-separated increasing gaps; an empty string is the trivial semigroup.
    #[arg(long, allow_hyphen_values = true)]
    gaps: Option<String>,
    /// Comma-separated generators.
    #[arg(long, allow_hyphen_values = true)]
    generators: Option<String>,
    /// Gap-list file, one semigroup per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    arf: bool,
    #[arg(long)]
    sparse: bool,
    #[arg(long)]
    hyperelliptic: bool,
    /// kappa-sparse for this kappa.
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u32).range(1..))]
    kappa: Option<u32>,
    /// Pure kappa-sparse for this kappa.
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u32).range(1..))]
    pure: Option<u32>,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    input: Input,
    /// Also report the four kappa-sparse tests for this kappa.
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u32).range(1..))]
    kappa: Option<u32>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    genus: u32,
    /// Restrict to kappa-sparse semigroups (pruned walk).
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u32).range(1..))]
    kappa: Option<u32>,
    /// With --kappa: only pure kappa-sparse semigroups.
    #[arg(long, requires = "kappa")]
    pure: bool,
    /// Only Arf semigroups.
    #[arg(long, conflicts_with = "kappa")]
    arf: bool,
    /// Print census rows for every genus up to --genus instead of a listing.
    #[arg(long)]
    count_only: bool,
    /// Defaults to tsv for census rows and json for listings.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 12)]
    max_genus: u32,
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return 2;
            }
            let _ = write!(out, "{rendered}");
            return 0;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

fn read_input(input: &Input) -> Result<Vec<NumericalSemigroup>> {
    if let Some(gaps) = &input.gaps {
        let h = parse_gap_line(gaps).with_context(|| format!("--gaps {gaps:?}"))?;
        return Ok(vec![h]);
    }
    if let Some(gens) = &input.generators {
        let values = gens
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| anyhow!("--generators {gens:?}: {e}"))?;
        let h = NumericalSemigroup::from_generators(values)
            .with_context(|| format!("--generators {gens:?}"))?;
        return Ok(vec![h]);
    }
    let path = input.file.as_ref().expect("clap enforces one input source");
    let text =
        std::fs::read_to_string(path).with_context(|| format!("--file {}", path.display()))?;
    parse_gap_list(&text).with_context(|| format!("--file {}", path.display()))
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Info(input) => {
            for h in read_input(input)? {
                json_line(out, &SemigroupRecord::from(&h))?;
            }
            Ok(0)
        }
        Command::Check(args) => check(args, out),
        Command::Leaps(input) => {
            for h in read_input(input)? {
                json_line(out, &leap_profile(&h))?;
                for leap in leap_set(&h) {
                    writeln!(out, "{}\t{}", leap.lo, leap.hi)?;
                }
            }
            Ok(0)
        }
        Command::Classify(args) => {
            for h in read_input(&args.input)? {
                json_line(out, &ClassificationReport::new(&h, args.kappa))?;
            }
            Ok(0)
        }
        Command::Enumerate(args) => enumerate(args, cli.genus_cap, out),
        Command::Verify(args) => {
            if args.max_genus > cli.genus_cap {
                bail!(
                    "--max-genus {} exceeds the genus cap {}",
                    args.max_genus,
                    cli.genus_cap
                );
            }
            let report = verify(args.max_genus);
            for c in &report.checks {
                writeln!(out, "{c}")?;
            }
            match report.first_failure() {
                None => {
                    writeln!(
                        out,
                        "PASS: {} checks over {} semigroups of genus <= {}",
                        report.checks.len(),
                        report.semigroups,
                        report.max_genus
                    )?;
                    Ok(0)
                }
                Some(c) => {
                    let cx = c.counterexample.as_deref().unwrap_or_default();
                    writeln!(out, "FAIL: {}: {}", c.name, cx)?;
                    writeln!(err, "first counterexample ({}): {}", c.name, cx)?;
                    Ok(1)
                }
            }
        }
    }
}

type Predicate = Box<dyn Fn(&NumericalSemigroup) -> bool>;

#[derive(Serialize)]
struct CheckOutcome {
    gaps: Vec<u32>,
    checks: BTreeMap<String, bool>,
    holds: bool,
}

fn check(args: &CheckArgs, out: &mut dyn Write) -> Result<i32> {
    let mut predicates: Vec<(String, Predicate)> = Vec::new();
    if args.arf {
        predicates.push(("arf".into(), Box::new(is_arf)));
    }
    if args.sparse {
        predicates.push(("sparse".into(), Box::new(is_sparse)));
    }
    if args.hyperelliptic {
        predicates.push(("hyperelliptic".into(), Box::new(is_hyperelliptic)));
    }
    if let Some(k) = args.kappa {
        predicates.push((
            format!("kappa_sparse_{k}"),
            Box::new(move |h| is_kappa_sparse(h, k)),
        ));
    }
    if let Some(k) = args.pure {
        predicates.push((
            format!("pure_kappa_sparse_{k}"),
            Box::new(move |h| is_pure_kappa_sparse(h, k)),
        ));
    }
    if predicates.is_empty() {
        bail!("check needs at least one of --arf, --sparse, --hyperelliptic, --kappa, --pure");
    }
    let mut all = true;
    for h in read_input(&args.input)? {
        let checks: BTreeMap<String, bool> = predicates
            .iter()
            .map(|(name, p)| (name.clone(), p(&h)))
            .collect();
        let holds = checks.values().all(|&b| b);
        all &= holds;
        json_line(
            out,
            &CheckOutcome {
                gaps: h.gaps().to_vec(),
                checks,
                holds,
            },
        )?;
    }
    Ok(if all { 0 } else { 1 })
}

fn enumerate(args: &EnumerateArgs, cap: u32, out: &mut dyn Write) -> Result<i32> {
    let mode = match (args.kappa, args.pure, args.arf) {
        (Some(_), true, _) => Mode::PureKappaSparse,
        (Some(_), false, _) => Mode::KappaSparse,
        (None, _, true) => Mode::Arf,
        (None, _, false) => Mode::All,
    };
    let emit = if args.count_only {
        Emit::CountOnly
    } else {
        Emit::Full
    };
    let mut req = EnumerationRequest::new(args.genus)
        .with_mode(mode)
        .with_emit(emit)
        .with_cap(cap);
    if let Some(k) = args.kappa {
        req = req.with_kappa(k);
    }
    req.validate()
        .with_context(|| format!("--genus {}", args.genus))?;

    match emit {
        Emit::CountOnly => {
            let rows = census(&req)?;
            match args.format.unwrap_or(Format::Tsv) {
                Format::Tsv => {
                    writeln!(out, "{}", sparsegroup::CensusRow::TSV_HEADER)?;
                    for row in &rows {
                        writeln!(out, "{}", row.to_tsv())?;
                    }
                }
                Format::Json => json_line(out, &rows)?,
            }
        }
        Emit::Full => {
            let format = args.format.unwrap_or(Format::Json);
            for h in req.listing()? {
                match format {
                    Format::Json => json_line(out, &SemigroupRecord::from(&h))?,
                    Format::Tsv => writeln!(out, "{}", format_gap_line(&h))?,
                }
            }
        }
    }
    Ok(0)
}
