//! `flagpath` command-line interface.
//!
//! Exit codes: 0 all checks pass, 1 verified violation, 2 precondition
//! failure (not flag, not normal, facet not in the complex), 3 parse or
//! usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use flagpath::audit::{self, AuditOptions, AuditReport, PairSelection};
use flagpath::io::{self, NamedComplex};
use flagpath::segment::{self, SegmentError, SegmentOptions, SegmentTrace};
use flagpath::{Face, InputError};

const EXIT_VIOLATION: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "flagpath", version, about = "Non-revisiting facet paths in flag normal simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report flagness, normality and size of a complex.
    Check {
        /// Facet-list file or generator spec such as `cross:3` or `sd(cycle:5)`.
        input: String,
    },
    /// Build the combinatorial segment between two facets.
    Segment {
        input: String,
        /// Start facet, e.g. "1 3 5".
        #[arg(long)]
        from: String,
        /// End facet.
        #[arg(long)]
        to: String,
        /// Print pearls and breakpoints of the construction.
        #[arg(long)]
        trace: bool,
        /// Skip the flag and normality checks.
        #[arg(long)]
        skip_precheck: bool,
    },
    /// Build and verify segments for many facet pairs.
    Audit(AuditArgs),
    /// Write the canonical facet list of a generated complex.
    Generate {
        spec: String,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        out: Option<std::path::PathBuf>,
    },
}

#[derive(Args)]
struct AuditArgs {
    input: String,
    /// Check every unordered pair of distinct facets.
    #[arg(long, conflicts_with = "sample")]
    all_pairs: bool,
    /// Check this many randomly drawn ordered pairs.
    #[arg(long, value_name = "N", requires = "seed")]
    sample: Option<usize>,
    #[arg(long, value_name = "S")]
    seed: Option<u64>,
    /// Worker threads for the pair loop.
    #[arg(long, env = "FLAGPATH_JOBS")]
    jobs: Option<usize>,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.command {
        Command::Check { input } => check(&input),
        Command::Segment {
            input,
            from,
            to,
            trace,
            skip_precheck,
        } => segment_cmd(&input, &from, &to, trace, skip_precheck),
        Command::Audit(args) => audit_cmd(args),
        Command::Generate { spec, out } => generate(&spec, out.as_deref()),
    }
}

fn load(input: &str) -> Result<NamedComplex, ExitCode> {
    io::resolve_input(input).map_err(|e: InputError| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn check(input: &str) -> ExitCode {
    let named = match load(input) {
        Ok(n) => n,
        Err(code) => return code,
    };
    let report = AuditReport::structural(&named.name, &named.complex);
    println!("complex: {}", report.complex);
    println!("flag={} normal={} n={} d={} facets={}", report.flag, report.normal, report.n, report.d, report.facets);
    ExitCode::from(report.status().exit_code() as u8)
}

fn parse_facet(literal: &str) -> Result<Face, ExitCode> {
    literal.parse().map_err(|e| {
        eprintln!("error: bad facet literal {literal:?}: {e}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn segment_cmd(input: &str, from: &str, to: &str, show_trace: bool, skip_precheck: bool) -> ExitCode {
    let named = match load(input) {
        Ok(n) => n,
        Err(code) => return code,
    };
    let (from, to) = match (parse_facet(from), parse_facet(to)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(code), _) | (_, Err(code)) => return code,
    };
    let c = &named.complex;
    let opts = SegmentOptions {
        precheck: !skip_precheck,
    };
    let seg = match segment::segment_between_facets_with(c, &from, &to, opts) {
        Ok(seg) => seg,
        Err(e @ (SegmentError::NotFlag | SegmentError::NotNormal | SegmentError::FacetsNotInComplex(_))) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PRECONDITION);
        }
        Err(e) => {
            eprintln!("error: construction failed: {e}");
            return ExitCode::from(EXIT_VIOLATION);
        }
    };
    for step in seg.path.steps() {
        println!("{step}");
    }
    if show_trace {
        print_trace(&seg.trace, 0);
    }
    let problems = audit::verify_segment(c, &from, &to, &seg.path);
    if problems.is_empty() {
        println!(
            "# {} steps, non-revisiting, bound {}",
            seg.path.len(),
            c.hirsch_bound()
        );
        ExitCode::SUCCESS
    } else {
        for p in &problems {
            eprintln!("violation: {p:?}");
        }
        ExitCode::from(EXIT_VIOLATION)
    }
}

fn print_trace(trace: &SegmentTrace, indent: usize) {
    let pad = "  ".repeat(indent);
    let pearls: Vec<String> = trace.pearls.iter().map(ToString::to_string).collect();
    let breaks: Vec<String> = trace.breakpoints.iter().map(ToString::to_string).collect();
    println!(
        "# {pad}dim {} pearls [{}] breakpoints [{}]",
        trace.dim,
        pearls.join(" "),
        breaks.join(" ")
    );
    for child in &trace.children {
        print_trace(child, indent + 1);
    }
}

fn audit_cmd(args: AuditArgs) -> ExitCode {
    let named = match load(&args.input) {
        Ok(n) => n,
        Err(code) => return code,
    };
    let pairs = match (args.all_pairs, args.sample, args.seed) {
        (_, Some(count), Some(seed)) => PairSelection::Sample { count, seed },
        (true, None, _) => PairSelection::All,
        _ => {
            eprintln!("error: pass --all-pairs or --sample N --seed S");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let opts = AuditOptions {
        pairs,
        jobs: args.jobs,
    };
    let report = audit::run_audit(&named.name, &named.complex, &opts);
    if args.json {
        print!("{}", report.to_json());
    } else {
        print_report(&report);
    }
    ExitCode::from(report.status().exit_code() as u8)
}

fn print_report(r: &AuditReport) {
    println!("complex: {}", r.complex);
    println!("flag={} normal={} n={} d={} facets={}", r.flag, r.normal, r.n, r.d, r.facets);
    let diameter = r.diameter.map_or("-".to_string(), |d| d.to_string());
    println!("bound={} diameter={}", r.bound, diameter);
    println!("pairs_checked={} max_segment_length={}", r.pairs_checked, r.max_segment_length);
    println!("violations={}", r.violations.len());
    for v in &r.violations {
        match (&v.from, &v.to) {
            (Some(a), Some(b)) => println!("  {{{a}}} -> {{{b}}}: {:?}", v.kind),
            _ => println!("  {:?}", v.kind),
        }
    }
}

fn generate(spec: &str, out: Option<&std::path::Path>) -> ExitCode {
    let complex = match spec.parse::<flagpath::GeneratorSpec>().and_then(|s| s.build()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let text = io::write_facet_list(&complex);
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}
