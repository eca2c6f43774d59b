use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use colorpack::io::ParsedPacking;
use colorpack::oracle::DEFAULT_ITEM_LIMIT;
use colorpack::scaling::{run_bench, BenchReport, Branch};
use colorpack::{
    generate, optimal_bins, parse_instance, parse_packing, predicted_bins, serialize_instance,
    serialize_packing, solve, validate_packing, CountBreakdown, GenSpec, Instance, PackingFormat,
    Skew,
};

const EXIT_INVALID: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_ORACLE_LIMIT: u8 = 4;

#[derive(Parser)]
#[command(name = "colorpack", version, about = "Colored bin packing solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pack an instance and print the packing with its bin count.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check a packing against an instance.
    Verify { instance: PathBuf, packing: PathBuf },
    /// Print the closed-form optimal bin count and its breakdown.
    Predict { file: PathBuf },
    /// Compute the optimum by exhaustive search on a small instance.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ITEM_LIMIT)]
        max_items: usize,
    },
    /// Print a seeded random instance.
    Gen {
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        items: usize,
        #[arg(long)]
        capacity: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "uniform", value_parser = parse_skew)]
        skew: Skew,
    },
    /// Time the solver on every branch over a list of sizes.
    Bench {
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "100000,200000,400000,800000"
        )]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

fn parse_skew(s: &str) -> Result<Skew, String> {
    s.parse().map_err(|e: colorpack::GenError| e.to_string())
}

/// A message for standard error and the exit code that goes with it.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve { file, format } => cmd_solve(&file, format),
        Command::Verify { instance, packing } => cmd_verify(&instance, &packing),
        Command::Predict { file } => cmd_predict(&file),
        Command::Oracle { file, max_items } => cmd_oracle(&file, max_items),
        Command::Gen {
            colors,
            items,
            capacity,
            seed,
            skew,
        } => cmd_gen(GenSpec {
            colors,
            items,
            capacity,
            seed,
            skew,
        }),
        Command::Bench {
            sizes,
            trials,
            seed,
        } => cmd_bench(&sizes, trials, seed),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("colorpack: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<Instance, Failure> {
    parse_instance(&read(path)?)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn cmd_solve(path: &Path, format: Format) -> Outcome {
    let instance = load_instance(path)?;
    let packing = solve(&instance).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    let report = validate_packing(&instance, &packing);
    if !report.is_valid() {
        let mut msg = String::from("solver produced an invalid packing");
        for v in &report.violations {
            let _ = write!(msg, "\n  {}", v.describe(instance.colors(), &[]));
        }
        return Err(Failure::new(EXIT_INTERNAL, msg));
    }
    Ok(match format {
        Format::Text => format!(
            "{}\nbin_count: {}\n",
            serialize_packing(&instance, &packing, PackingFormat::Text),
            packing.bin_count()
        ),
        Format::Structured => format!(
            "{}\n",
            serialize_packing(&instance, &packing, PackingFormat::Structured)
        ),
    })
}

fn cmd_verify(instance_path: &Path, packing_path: &Path) -> Outcome {
    let instance = load_instance(instance_path)?;
    let ParsedPacking { packing, unknown } = parse_packing(&instance, &read(packing_path)?)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", packing_path.display())))?;
    let report = validate_packing(&instance, &packing);
    if report.is_valid() {
        return Ok(format!("valid: {} bins\n", packing.bin_count()));
    }
    let mut msg = format!("invalid: {} violation(s)", report.violations.len());
    for v in &report.violations {
        let _ = write!(msg, "\n  {}", v.describe(instance.colors(), &unknown));
    }
    Err(Failure::new(EXIT_INVALID, msg))
}

fn render_breakdown(b: &CountBreakdown) -> String {
    let mut out = format!(
        "mode: {}\ncase_tag: {}\ndiscrepancy: {}\n",
        b.mode,
        b.case.as_str(),
        b.discrepancy
    );
    if let Some(e) = &b.even {
        let _ = write!(
            out,
            "F: {}\nR: {}\nP: {}\nM: {}\nC: {}\nRO: {}\nX: {}\n",
            e.full_bins,
            e.remainder,
            e.pair_capacity,
            e.singles,
            e.combined,
            e.leftover_tops,
            e.leftover_singles
        );
    }
    let _ = writeln!(out, "total: {}", b.total);
    out
}

fn cmd_predict(path: &Path) -> Outcome {
    let instance = load_instance(path)?;
    Ok(render_breakdown(&predicted_bins(&instance)))
}

fn cmd_oracle(path: &Path, max_items: usize) -> Outcome {
    let instance = load_instance(path)?;
    let optimum = optimal_bins(&instance, max_items).map_err(|e| {
        Failure::new(
            EXIT_ORACLE_LIMIT,
            format!("{e}; raise --max-items to search anyway (cost grows exponentially)"),
        )
    })?;
    let packing = solve(&instance).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    if !validate_packing(&instance, &packing).is_valid() {
        return Err(Failure::new(
            EXIT_INTERNAL,
            "solver produced an invalid packing",
        ));
    }
    let solver = packing.bin_count();
    Ok(format!(
        "optimum: {optimum}\nsolver: {solver}\nmatches: {}\n",
        optimum == solver
    ))
}

fn cmd_gen(spec: GenSpec) -> Outcome {
    let generated = generate(&spec).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
    if generated.underpopulated(&spec) {
        eprintln!(
            "colorpack: note: only {} of {} colors received items",
            generated.populated, spec.colors
        );
    }
    Ok(serialize_instance(&generated.instance))
}

fn render_report(report: &BenchReport) -> String {
    let mut out = String::from("branch\tn\tL\tbins\ttime_us\tns_per_item\n");
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{:.1}\t{:.2}",
            r.branch.as_str(),
            r.n,
            r.capacity,
            r.bins,
            r.time.as_secs_f64() * 1e6,
            r.nanos_per_item()
        );
    }
    if !report.summaries.is_empty() {
        out.push_str("\nbranch\tslope_ns_per_item\tdoubling_ratios\n");
    }
    for s in &report.summaries {
        let ratios: Vec<String> = s.ratios.iter().map(|r| format!("{r:.2}")).collect();
        let _ = writeln!(
            out,
            "{}\t{:.2}\t{}",
            s.branch.as_str(),
            s.slope_ns_per_item,
            ratios.join(",")
        );
    }
    out
}

fn cmd_bench(sizes: &[usize], trials: usize, seed: u64) -> Outcome {
    if let Some(&bad) = sizes.iter().find(|&&n| n == 0) {
        return Err(Failure::new(EXIT_PARSE, format!("invalid size {bad}")));
    }
    let report = run_bench(sizes, trials, seed, &Branch::ALL)
        .map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    Ok(render_report(&report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn breakdown_lists_even_fields() {
        let i = Instance::new(6, [("W", 15), ("B", 4), ("Y", 3), ("G", 3)]).unwrap();
        let out = render_breakdown(&predicted_bins(&i));
        assert!(out.starts_with("mode: unit\ncase_tag: even-combine\ndiscrepancy: 5\n"));
        assert!(out.ends_with("RO: 0\nX: 0\ntotal: 5\n"));
    }

    #[test]
    fn empty_report_has_only_a_header() {
        assert_eq!(render_report(&BenchReport::default()).lines().count(), 1);
    }

    #[test]
    fn skew_names() {
        assert_eq!(parse_skew("balanced"), Ok(Skew::Balanced));
        assert!(parse_skew("heavy").is_err());
    }
}
