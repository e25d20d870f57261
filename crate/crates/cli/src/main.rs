use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sumconn::enumerate::{self, Budget, Canonical, DEFAULT_BUDGET_N};
use sumconn::families::{FamilyParams, FamilySpec};
use sumconn::graph6::{from_graph6, to_graph6};
use sumconn::invariants::{matching_number, randic, sum_connectivity};
use sumconn::verify::{self, Census, Direction, Suite, VerificationReport};
use sumconn::{Error, ErrorKind, Graph};

const EXIT_USAGE: u8 = 1;
const EXIT_FAILURE: u8 = 2;

#[derive(Parser)]
#[command(name = "sumconn", version, about = "Sum-connectivity index of bicyclic graphs")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Indices of graph6 graphs read from a file or stdin.
    Compute {
        /// Input file; stdin when absent or `-`.
        input: Option<PathBuf>,
    },
    /// Build a named family member.
    Construct {
        /// One of: bnm bnab unm h6 cycle path b1-1 b1-2 b2 b3-1 b3-2 b4-plus-pendant
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutFormat::Graph6)]
        out: OutFormat,
    },
    /// Every connected bicyclic graph on n vertices up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only graphs with this matching number.
        #[arg(long)]
        matching: Option<usize>,
        /// Keep only graphs without pendant vertices.
        #[arg(long)]
        no_pendants: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// Check the extremal claims and write a JSON report.
    Verify {
        #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
        suite: String,
        /// Largest order searched; for the scalar suite alone, the end of the
        /// integer range.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Best graphs by index, grouped into value levels.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        matching: Option<usize>,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        /// Number of distinct values shown.
        #[arg(long, default_value_t = 1)]
        top: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Graph6,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Min,
    Max,
}

/// Failure carried to `main`: message plus exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.kind() {
            ErrorKind::Capacity => EXIT_FAILURE,
            ErrorKind::Usage | ErrorKind::Domain => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn budget_for(n: usize) -> Budget {
    let budget = Budget::from_env();
    if budget.is_raised_for(n) {
        eprintln!("warning: n = {n} exceeds the default cap of {DEFAULT_BUDGET_N}; this may take a long time");
    }
    budget
}

fn compute(input: Option<PathBuf>) -> CmdResult {
    let reader: Box<dyn BufRead> = match input {
        Some(p) if p.as_os_str() != "-" => Box::new(io::BufReader::new(fs::File::open(p)?)),
        _ => Box::new(io::stdin().lock()),
    };
    let mut out = io::stdout().lock();
    writeln!(out, "n\tedges\tchi\tchi_float\trandic\trandic_float\tmatching\tbicyclic")?;
    let mut bad = 0;
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let g = match from_graph6(&line) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("line {}: {e}", i + 1);
                bad += 1;
                continue;
            }
        };
        let chi = sum_connectivity(&g);
        let r = randic(&g);
        writeln!(
            out,
            "{}\t{}\t{chi}\t{:.9}\t{r}\t{:.9}\t{}\t{}",
            g.order(),
            g.size(),
            chi.to_f64(),
            r.to_f64(),
            matching_number(&g),
            g.is_bicyclic()
        )?;
    }
    Ok(if bad > 0 { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS })
}

fn emit(graphs: &[Graph], label: &str, format: OutFormat) -> io::Result<()> {
    let mut out = io::stdout().lock();
    for (i, g) in graphs.iter().enumerate() {
        match format {
            OutFormat::Graph6 => writeln!(out, "{}", to_graph6(g))?,
            OutFormat::Dot => {
                let name = if graphs.len() == 1 { label.to_string() } else { format!("{label}_{}", i + 1) };
                write!(out, "{}", g.to_dot(&name))?
            }
        }
    }
    Ok(())
}

fn construct(family: &str, params: FamilyParams, format: OutFormat) -> CmdResult {
    let spec = FamilySpec::parse(family, params)?;
    let graphs = spec.build()?;
    emit(&graphs, &family.replace('-', "_"), format)?;
    Ok(ExitCode::SUCCESS)
}

fn enumerate(n: usize, matching: Option<usize>, no_pendants: bool, count_only: bool) -> CmdResult {
    let budget = budget_for(n);
    let graphs: Vec<Canonical> = match matching {
        Some(m) => enumerate::bicyclic_with_matching_within(n, m, budget)?,
        None => enumerate::all_bicyclic_within(n, budget)?.to_vec(),
    };
    let mut out = io::stdout().lock();
    let keep = graphs.iter().filter(|c| !no_pendants || c.graph.min_degree() >= 2);
    if count_only {
        writeln!(out, "{}", keep.count())?;
    } else {
        for c in keep {
            writeln!(out, "{}", c.code)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn summarize(report: &VerificationReport) {
    for r in &report.reports {
        let m = r.m.map(|m| format!(" m={m}")).unwrap_or_default();
        let status = if r.pass { "pass" } else { "FAIL" };
        println!(
            "{status} {} n={}{m} class={} value={:.9} argext={}",
            r.theorem_id,
            r.n,
            r.class_size,
            r.extremal_value.to_f64(),
            r.argext.join(",")
        );
    }
    for c in &report.lemma_checks {
        let status = if c.pass { "pass" } else { "FAIL" };
        println!(
            "{status} {} instances={} equalities={} failures={}",
            c.check_id, c.instances, c.equalities, c.failure_count
        );
        for f in &c.failures {
            println!("    {f}");
        }
    }
    if report.budget_exceeded {
        println!("budget exceeded: orders above the cap were skipped");
    }
    println!("{}", if report.pass { "all checks passed" } else { "verification FAILED" });
}

fn run_verify(suite: &str, n_max: Option<usize>, report_path: Option<PathBuf>) -> CmdResult {
    let suite = Suite::parse(suite).expect("validated by clap");
    let n_max = n_max.unwrap_or(if suite == Suite::Scalar {
        verify::DEFAULT_SCALAR_MAX
    } else {
        DEFAULT_BUDGET_N
    });
    let budget = if suite == Suite::Scalar { Budget::from_env() } else { budget_for(n_max) };
    let report = verify::run_suite(suite, n_max, budget)?;
    if let Some(path) = report_path {
        fs::write(path, report.to_json() + "\n")?;
    }
    summarize(&report);
    Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAILURE) })
}

fn extremal(n: usize, matching: Option<usize>, direction: DirectionArg, top: usize) -> CmdResult {
    let census = Census::build(n, budget_for(n))?;
    let members = census.class(matching);
    let direction = match direction {
        DirectionArg::Min => Direction::Min,
        DirectionArg::Max => Direction::Max,
    };
    let mut out = io::stdout().lock();
    writeln!(out, "rank\tchi\tchi_float\tgraph6")?;
    for (rank, level) in verify::value_levels(&census, &members, direction, top).iter().enumerate() {
        let value = &census.values[level[0]];
        for &i in level {
            writeln!(out, "{}\t{value}\t{:.9}\t{}", rank + 1, value.to_f64(), census.code(i))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool configured once");
    }
    let result = match cli.command {
        Command::Compute { input } => compute(input),
        Command::Construct { family, n, m, a, b, out } => construct(&family, FamilyParams { n, m, a, b }, out),
        Command::Enumerate {
            n,
            matching,
            no_pendants,
            count_only,
        } => enumerate(n, matching, no_pendants, count_only),
        Command::Verify { suite, n_max, report } => run_verify(&suite, n_max, report),
        Command::Extremal {
            n,
            matching,
            direction,
            top,
        } => extremal(n, matching, direction, top),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
