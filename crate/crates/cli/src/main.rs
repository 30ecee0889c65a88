//! `pgl2`: reproduce the constructions, scan families and run the verification suites.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for a bad
//! configuration or a missing or broken external tool.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use pgl2_core::cas::{cas_classgroup, CasConfig, CasReport};
use pgl2_core::catalog::{self, CaseId, GroupCase};
use pgl2_core::cover::factored_display;
use pgl2_core::error::{CasError, FieldError};
use pgl2_core::fieldlab::{self, FieldCandidate};
use pgl2_core::poly::IntPolynomial;
use pgl2_core::reference;
use pgl2_core::verify::verify_paper;

#[derive(Parser)]
#[command(name = "pgl2", version, about = "Number-field families from finite subgroups of PGL2(Q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every exact check against the published data.
    VerifyPaper {
        #[arg(long)]
        case: Option<CaseId>,
        /// Read the catalog from a JSON file instead of the built-in one.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Specialize a family at admissible y and check every candidate.
    Family(FamilyArgs),
    /// Class group of a field through the external CAS.
    Classgroup(ClassgroupArgs),
    /// Print the built-in catalog as JSON.
    Catalog,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    case: CaseId,
    #[arg(long)]
    n: u32,
    /// Number of admissible y, ascending from --start-y.
    #[arg(long, conflicts_with = "range")]
    count: Option<usize>,
    /// Inclusive range `LO..HI` of y.
    #[arg(long)]
    range: Option<String>,
    #[arg(long, default_value_t = 1)]
    start_y: u64,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    #[arg(long, default_value_t = 1)]
    parallel: usize,
    /// Also compare each candidate's CAS n-rank with the bound.
    #[arg(long)]
    cas: bool,
    #[arg(long)]
    cas_path: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassgroupArgs {
    /// Coefficients from the constant term up, comma separated.
    #[arg(long, conflicts_with_all = ["case", "intro"])]
    poly: Option<String>,
    /// The introductory sextic example.
    #[arg(long)]
    intro: bool,
    #[arg(long, requires = "y")]
    case: Option<CaseId>,
    #[arg(long)]
    y: Option<u64>,
    /// Family exponent; also the rank taken when --rank-n is absent.
    #[arg(long)]
    n: Option<u32>,
    /// Take the index-th displayed subfield instead of the full field.
    #[arg(long, requires = "case")]
    subfield: Option<usize>,
    /// Which n-rank to report, when it differs from the family exponent.
    #[arg(long)]
    rank_n: Option<u64>,
    #[arg(long)]
    expect_rank: Option<usize>,
    #[arg(long)]
    expect_rank_ge: Option<usize>,
    #[arg(long)]
    rigorous: bool,
    #[arg(long)]
    cas_path: Option<PathBuf>,
    #[arg(long)]
    timeout: Option<u64>,
    #[arg(long)]
    log_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

/// An error that maps to exit code 2.
#[derive(Debug)]
struct ConfigError(anyhow::Error);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for ConfigError {}

fn config_err(e: impl Into<anyhow::Error>) -> anyhow::Error {
    anyhow::Error::new(ConfigError(e.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::VerifyPaper { case, catalog, format } => cmd_verify_paper(case, catalog, format),
        Command::Family(args) => cmd_family(args),
        Command::Classgroup(args) => cmd_classgroup(args),
        Command::Catalog => cmd_catalog(),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<ConfigError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn load_catalog(path: Option<PathBuf>) -> anyhow::Result<Vec<GroupCase>> {
    match path {
        None => Ok(catalog::catalog()),
        Some(p) => {
            let text = std::fs::read_to_string(&p)
                .with_context(|| format!("reading {}", p.display()))
                .map_err(config_err)?;
            serde_json::from_str(&text)
                .with_context(|| format!("parsing catalog {}", p.display()))
                .map_err(config_err)
        }
    }
}

fn cmd_verify_paper(case: Option<CaseId>, catalog: Option<PathBuf>, format: Format) -> anyhow::Result<bool> {
    let cases = load_catalog(catalog)?;
    let report = verify_paper(&cases, case);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Json => serde_json::to_writer_pretty(&mut out, &report)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["case", "check", "passed", "detail"])?;
            for c in &report.checks {
                w.write_record([c.case.as_str(), &c.name, if c.passed { "true" } else { "false" }, &c.detail])?;
            }
            w.flush()?;
        }
        Format::Pretty => {
            for c in &report.checks {
                writeln!(out, "{c}")?;
            }
            let failed = report.failures().count();
            writeln!(out, "{} checks, {failed} failed", report.checks.len())?;
        }
    }
    writeln!(out)?;
    Ok(report.passed())
}

fn parse_range(s: &str) -> anyhow::Result<(u64, u64)> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| anyhow!("range: expected LO..HI, got {s:?}"))?;
    let lo: u64 = lo.trim().parse().with_context(|| format!("range: bad lower bound {lo:?}"))?;
    let hi: u64 = hi.trim().parse().with_context(|| format!("range: bad upper bound {hi:?}"))?;
    Ok((lo, hi))
}

fn open_out(path: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display())).map_err(config_err)?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn csv_row(c: &FieldCandidate) -> [String; 8] {
    let (r1, r2) = c.signature.map_or((String::new(), String::new()), |s| (s.r1.to_string(), s.r2.to_string()));
    [
        c.case_id.to_string(),
        c.y.to_string(),
        c.n.to_string(),
        c.degree().to_string(),
        r1,
        r2,
        c.disc_bits.to_string(),
        c.all_checks_pass().to_string(),
    ]
}

fn cmd_family(args: FamilyArgs) -> anyhow::Result<bool> {
    let case = catalog::case(args.case);
    if !case.conditions.n_constraint.allows(args.n) {
        return Err(config_err(anyhow!("n: {} requires {}, got n = {}", case.id, case.conditions.n_constraint, args.n)));
    }
    let ys = match (&args.range, args.count) {
        (Some(r), _) => {
            let (lo, hi) = parse_range(r).map_err(config_err)?;
            case.conditions.admissible_in(args.n, lo.max(args.start_y), hi)
        }
        (None, Some(k)) => case.conditions.admissible_ys(args.n, args.start_y, k),
        (None, None) => return Err(config_err(anyhow!("one of --count or --range is required"))),
    };
    let results = fieldlab::scan_family(&case, args.n, &ys, args.parallel);
    let mut candidates = Vec::with_capacity(results.len());
    for (y, r) in ys.iter().zip(results) {
        candidates.push(r.with_context(|| format!("{} at y = {y}, n = {}", case.id, args.n))?);
    }

    let mut out = open_out(&args.out)?;
    match args.format {
        Format::Json => {
            for c in &candidates {
                serde_json::to_writer(&mut out, c)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["case", "y", "n", "degree", "r1", "r2", "disc_bits", "all_checks_pass"])?;
            for c in &candidates {
                w.write_record(csv_row(c))?;
            }
            w.flush()?;
        }
        Format::Pretty => {
            writeln!(out, "{}P = {}", case.id, factored_display(&case)?)?;
            for c in &candidates {
                let sig = c.signature.map_or("-".to_string(), |s| s.to_string());
                let failed: Vec<&str> =
                    c.checks.iter().filter(|(_, v)| **v == fieldlab::Verdict::Fail).map(|(k, _)| k.as_str()).collect();
                let status = if failed.is_empty() { "ok".to_string() } else { format!("FAIL {}", failed.join(",")) };
                writeln!(out, "y = {}: {}  signature {sig}  disc bits {}  {status}", c.y, c.poly.display_in("x"), c.disc_bits)?;
            }
        }
    }
    out.flush()?;

    let guaranteed = candidates.iter().filter(|c| c.guaranteed_checks_pass()).count();
    let all = candidates.iter().filter(|c| c.all_checks_pass()).count();
    let summary = format!(
        "summary: {} n = {}: {} candidates, {all} pass every check, {guaranteed} pass the guaranteed checks",
        case.id,
        args.n,
        candidates.len()
    );
    let mut ok = guaranteed == candidates.len();

    if args.cas {
        let cfg = CasConfig::resolve(args.cas_path.as_deref()).map_err(config_err)?;
        let batch = fieldlab::verify_rank_batch(&cfg, &case, args.n, &ys);
        for (y, r) in &batch.results {
            match r {
                Ok(c) => eprintln!("rank y = {y}: {} >= {}: {}", c.computed, c.bound, c.passed),
                Err(e) => eprintln!("rank y = {y}: unverified ({e})"),
            }
        }
        eprintln!(
            "rank summary: {} of {} completed claims pass ({:.0}%), batch {}",
            batch.passes(),
            batch.completed(),
            100.0 * batch.pass_rate(),
            if batch.passed() { "passes" } else { "does not pass" }
        );
        ok &= batch.passed();
    }

    match args.format {
        Format::Pretty if args.out.is_none() => println!("{summary}"),
        _ => eprintln!("{summary}"),
    }
    Ok(ok)
}

fn parse_poly(s: &str) -> anyhow::Result<IntPolynomial> {
    let coeffs = s
        .split(',')
        .map(|t| t.trim().parse().with_context(|| format!("poly: bad coefficient {t:?}")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let p = IntPolynomial::new(coeffs);
    if p.degree().unwrap_or(0) == 0 {
        return Err(anyhow!("poly: degree must be at least 1"));
    }
    Ok(p)
}

fn classgroup_target(args: &ClassgroupArgs) -> anyhow::Result<(IntPolynomial, Option<u32>)> {
    if let Some(p) = &args.poly {
        return Ok((parse_poly(p).map_err(config_err)?, args.n));
    }
    if args.intro {
        return Ok((reference::intro_sextic(), args.n));
    }
    let (Some(id), Some(y), Some(n)) = (args.case, args.y, args.n) else {
        return Err(config_err(anyhow!("give --poly, --intro, or --case with --y and --n")));
    };
    let case = catalog::case(id);
    let poly = match args.subfield {
        None => fieldlab::specialize(&case, y, n).map(|c| c.poly),
        Some(i) => fieldlab::subfield_polynomials(&case, y, n)
            .and_then(|v| v.into_iter().nth(i).ok_or(FieldError::UnsupportedCase(id))),
    };
    let poly = poly.with_context(|| format!("{id} at y = {y}, n = {n}")).map_err(config_err)?;
    Ok((poly, Some(n)))
}

fn cmd_classgroup(args: ClassgroupArgs) -> anyhow::Result<bool> {
    let (poly, family_n) = classgroup_target(&args)?;
    let rank_n = args
        .rank_n
        .or(family_n.map(u64::from))
        .ok_or_else(|| config_err(anyhow!("rank-n: give --rank-n or --n")))?;
    let mut cfg = CasConfig::resolve(args.cas_path.as_deref()).map_err(config_err)?;
    if let Some(t) = args.timeout {
        cfg.timeout_secs = t;
    }
    if args.log_dir.is_some() {
        cfg.log_dir = args.log_dir.clone();
    }
    let report = match cas_classgroup(&cfg, &poly, rank_n, args.rigorous) {
        Ok(r) => r,
        Err(e @ (CasError::NotConfigured | CasError::Missing(_) | CasError::Config(_))) => {
            return Err(config_err(e));
        }
        Err(e) => {
            let log = cfg.log_dir.as_ref().map_or(String::new(), |d| format!(" (transcript in {})", d.display()));
            return Err(anyhow!("{e}{log}"));
        }
    };
    print_report(&poly, &report, args.format)?;
    let mut ok = true;
    if let Some(k) = args.expect_rank {
        ok &= report.computed_rank_n == k;
    }
    if let Some(k) = args.expect_rank_ge {
        ok &= report.computed_rank_n >= k;
    }
    if args.expect_rank.is_some() || args.expect_rank_ge.is_some() {
        eprintln!("expectation {}", if ok { "met" } else { "not met" });
    }
    Ok(ok)
}

fn print_report(poly: &IntPolynomial, r: &CasReport, format: Format) -> anyhow::Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string(r)?),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            w.write_record(["invariants", "n", "rank_n", "certified", "version"])?;
            let inv: Vec<String> = r.class_group_invariants.iter().map(|d| d.to_string()).collect();
            w.write_record([inv.join(" "), r.n.to_string(), r.computed_rank_n.to_string(), r.certified.to_string(), r.tool_version.clone()])?;
            w.flush()?;
        }
        Format::Pretty => {
            let inv: Vec<String> = r.class_group_invariants.iter().map(|d| d.to_string()).collect();
            println!("field: {}", poly.display_in("x"));
            println!("class group: [{}], class number {}", inv.join(", "), r.class_number());
            println!("{}-rank: {}", r.n, r.computed_rank_n);
            println!("certified: {}  tool: {}", r.certified, r.tool_version);
            if let Some(t) = &r.transcript {
                println!("transcript: {}", t.display());
            }
        }
    }
    Ok(())
}

fn cmd_catalog() -> anyhow::Result<bool> {
    println!("{}", serde_json::to_string_pretty(&catalog::catalog())?);
    Ok(true)
}
