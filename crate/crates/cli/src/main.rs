//! `h43` — batch front end for the exact verification suites, the
//! extremal-value computation, the comparison families, and the residual
//! search.
//!
//! Exit codes: 0 success / all checks pass, 1 verification failure,
//! 2 usage error, 3 numeric failure or undecided comparison.

mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use h43_core::graph::{quotient, to_graph6, FamilyKind};
use h43_core::par::with_jobs;
use h43_core::search::{run_search, survivors_graph6};
use h43_core::spectral::{compare_rho, largest_quotient_root, perron_root, rho_prime, Verdict};
use h43_core::verify::{run_suite, Status, Suite};

use report::Report;

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

#[derive(Parser)]
#[command(
    name = "h43",
    version,
    about = "Exact verification and exhaustive search for spectral extremal bounds \
             on H(4,3)-free graphs of even size"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the extremal value rho'(m) with its exact isolating interval.
    RhoPrime(RhoPrimeArgs),
    /// Run a verification suite and emit a machine-readable report.
    Verify(VerifyArgs),
    /// Enumerate the residual configurations, filter, and rank by
    /// spectral radius.
    Search(SearchArgs),
    /// Inspect one comparison family at a given size.
    Family(FamilyArgs),
}

#[derive(Args)]
struct RhoPrimeArgs {
    /// Even edge count, at least 6.
    #[arg(long)]
    m: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Upper end of every sweep over m.
    #[arg(long, default_value_t = 500)]
    m_max: u64,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Write a CSV mirror of the rows here.
    #[arg(long)]
    csv: Option<std::path::PathBuf>,
    /// Cap the number of worker threads.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct SearchArgs {
    /// Comma-separated even edge counts, e.g. 18,20,22.
    #[arg(long, value_delimiter = ',', required = true)]
    m: Vec<u64>,
    /// Comparison margin for the table checks.
    #[arg(long, default_value_t = 1e-6)]
    margin: f64,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Write a CSV mirror of the rows here.
    #[arg(long)]
    csv: Option<std::path::PathBuf>,
    /// Dump every surviving graph in graph6 format to this file.
    #[arg(long)]
    dump_graphs: Option<std::path::PathBuf>,
    /// Cap the number of worker threads.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct FamilyArgs {
    /// Which family to build.
    #[arg(long, value_enum)]
    name: FamilyArg,
    /// Even edge count in the family's admissible range.
    #[arg(long)]
    m: u64,
    /// Comparison margin for the verdict.
    #[arg(long, default_value_t = 1e-6)]
    margin: f64,
    /// Write the graph as JSON adjacency lists here.
    #[arg(long)]
    json: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Charpoly,
    Decomp,
    Appendix,
    Thresholds,
    Obstruction,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Charpoly => Suite::Charpoly,
            SuiteArg::Decomp => Suite::Decomp,
            SuiteArg::Appendix => Suite::Appendix,
            SuiteArg::Thresholds => Suite::Thresholds,
            SuiteArg::Obstruction => Suite::Obstruction,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "s-minus")]
    SMinus,
    T,
    Same,
    Dist,
    Mixed,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> FamilyKind {
        match f {
            FamilyArg::SMinus => FamilyKind::SMinus,
            FamilyArg::T => FamilyKind::T,
            FamilyArg::Same => FamilyKind::Same,
            FamilyArg::Dist => FamilyKind::Dist,
            FamilyArg::Mixed => FamilyKind::Mixed,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::RhoPrime(args) => cmd_rho_prime(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Search(args) => cmd_search(&args),
        Command::Family(args) => cmd_family(&args),
    };
    ExitCode::from(code)
}

fn usage_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn cmd_rho_prime(args: &RhoPrimeArgs) -> u8 {
    match rho_prime(args.m) {
        Err(e) => usage_error(&e.to_string()),
        Ok(r) => {
            println!("rho'({}) = {:.12}", r.m, r.value);
            println!("interval: [{}, {}]", r.interval.lo, r.interval.hi);
            println!("width <= 1e-12 (exact rational endpoints)");
            EXIT_OK
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> u8 {
    if args.m_max < 24 {
        return usage_error("--m-max must be at least 24");
    }
    let suite: Suite = args.suite.into();
    let started = std::time::Instant::now();
    let results = with_jobs(args.jobs, || run_suite(suite, args.m_max));
    let timing_ms = started.elapsed().as_millis();

    for r in &results {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        };
        let range = r
            .m_range
            .map(|(lo, hi)| format!(" [m in {lo}..={hi}]"))
            .unwrap_or_default();
        println!("{status:>12}  {}{range}", r.id);
        if r.status != Status::Pass {
            println!("              {}", r.detail);
        }
    }
    let failed = results.iter().filter(|r| r.status == Status::Fail).count();
    let undecided = results
        .iter()
        .filter(|r| r.status == Status::Inconclusive)
        .count();
    println!(
        "{} checks: {} passed, {failed} failed, {undecided} inconclusive",
        results.len(),
        results.len() - failed - undecided
    );

    let report = Report::new(
        "verify",
        [
            ("suite".to_string(), format!("{suite:?}").to_lowercase()),
            ("m-max".to_string(), args.m_max.to_string()),
        ],
        &results,
        timing_ms,
    );
    if let Err(e) = report.write_json(args.out.as_deref()) {
        return numeric_error(&e);
    }
    if let Some(path) = &args.csv {
        if let Err(e) = report::verify_csv(path, &results) {
            return numeric_error(&e);
        }
    }
    if failed > 0 {
        EXIT_CHECK_FAILED
    } else if undecided > 0 {
        EXIT_NUMERIC
    } else {
        EXIT_OK
    }
}

fn numeric_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    EXIT_NUMERIC
}

fn cmd_search(args: &SearchArgs) -> u8 {
    for &m in &args.m {
        if m % 2 != 0 || m < 6 {
            return usage_error(&format!("m = {m} must be even and at least 6"));
        }
    }
    let started = std::time::Instant::now();
    let report = with_jobs(args.jobs, || run_search(&args.m, args.margin));
    let timing_ms = started.elapsed().as_millis();

    print!("{}", report.text_table());
    for row in &report.rows {
        for note in &row.notes {
            println!("note (m = {}): {note}", row.m);
        }
        for failure in &row.failures {
            eprintln!("perron failure (m = {}): {failure}", row.m);
        }
    }
    if report.any_reaches_extremal() {
        eprintln!(
            "WARNING: a residual graph reaches the extremal value within the margin; \
             inspect the report and escalate to exact comparison"
        );
    }

    let json_report = Report::new(
        "search",
        [
            (
                "m".to_string(),
                args.m
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
            ),
            ("margin".to_string(), args.margin.to_string()),
        ],
        &report.rows,
        timing_ms,
    );
    if let Err(e) = json_report.write_json(args.out.as_deref()) {
        return numeric_error(&e);
    }
    if let Some(path) = &args.csv {
        if let Err(e) = report::search_csv(path, &report.rows) {
            return numeric_error(&e);
        }
    }
    if let Some(path) = &args.dump_graphs {
        let lines: Vec<String> = args.m.iter().flat_map(|&m| survivors_graph6(m)).collect();
        if let Err(e) = std::fs::write(path, lines.join("\n") + "\n") {
            return numeric_error(&format!("writing {}: {e}", path.display()));
        }
        println!(
            "wrote {} surviving graphs to {}",
            lines.len(),
            path.display()
        );
    }
    let any_failures = report.rows.iter().any(|r| !r.failures.is_empty());
    if any_failures {
        EXIT_NUMERIC
    } else {
        EXIT_OK
    }
}

fn cmd_family(args: &FamilyArgs) -> u8 {
    let kind: FamilyKind = args.name.into();
    let graph = match kind.build(args.m) {
        Err(e) => return usage_error(&e.to_string()),
        Ok(g) => g,
    };
    println!(
        "family {} at m = {}: {} vertices, {} edges",
        kind.name(),
        args.m,
        graph.n(),
        graph.edge_count()
    );
    println!("graph6: {}", to_graph6(&graph));
    if let Some(path) = &args.json {
        let text = serde_json::to_string_pretty(&graph.to_json()).expect("graph serializes");
        if let Err(e) = std::fs::write(path, text + "\n") {
            return numeric_error(&format!("writing {}: {e}", path.display()));
        }
    }

    let partition = h43_core::graph::family_partition(kind, args.m).expect("family partition");
    let q = quotient(&graph, &partition).expect("family partitions are equitable");
    println!("equitable quotient matrix:");
    for row in q.entries() {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        println!("  [ {} ]", cells.join("  "));
    }
    let char_poly = q.char_poly();
    println!("characteristic polynomial: {char_poly}");
    let quotient_root = largest_quotient_root(&q);
    println!(
        "largest quotient root: {:.12}",
        quotient_root.interval.approx_f64()
    );

    let rho = match perron_root(&graph, 1e-9) {
        Err(e) => return numeric_error(&e.to_string()),
        Ok(r) => r,
    };
    let target = match rho_prime(args.m) {
        Err(e) => return usage_error(&e.to_string()),
        Ok(t) => t,
    };
    println!("rho       = {rho:.12}");
    println!("rho'(m)   = {:.12}", target.value);
    match compare_rho(&graph, args.m, args.margin) {
        Err(e) => numeric_error(&e.to_string()),
        Ok(v) => {
            let verdict = match v {
                Verdict::Below => "below",
                Verdict::Above => "above",
                Verdict::EqualWithinMargin => "equal-within-margin",
            };
            println!("verdict   = {verdict}");
            EXIT_OK
        }
    }
}
