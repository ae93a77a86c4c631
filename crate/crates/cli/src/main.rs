use std::collections::BTreeSet;
use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lawcos_core::verify::{run_all, CheckStatus, RunOptions, VerificationReport};
use lawcos_core::Point;
use lawcos_cli::batch::batch_random;
use lawcos_cli::parse::parse_triangle;
use lawcos_cli::report::{emit_batch_report, emit_report};
use lawcos_cli::sides::triangle_from_sides;
use lawcos_cli::svg::{render_svg, ColorMap, Layer, RenderOptions};

/// Exact verification of a dissection of the law of cosines.
///
/// Exit codes: 0 all checks pass, 1 some check failed, 2 input error.
#[derive(Parser)]
#[command(name = "lawcos", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one triangle and optionally emit a JSON report and an SVG.
    Verify(VerifyArgs),
    /// Verify a deterministic stream of random triangles.
    Batch(BatchArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum IncludeFamily {
    Euclid,
    Parallelograms,
    Disjointness,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum LayerArg {
    Squares,
    Pieces,
    Colored,
    Euclid,
    Parallelograms,
    Labels,
    /// Draw only the base triangle.
    None,
}

#[derive(Args)]
struct VerifyArgs {
    /// Triangle vertices "x1,y1 x2,y2 x3,y3"; coordinates may be
    /// integers, finite decimals or fractions p/q, all parsed exactly.
    #[arg(long, value_name = "POINTS", conflicts_with = "sides", required_unless_present = "sides")]
    points: Option<String>,

    /// Side lengths a=BC b=CA c=AB; the triangle is placed exactly when
    /// possible, otherwise the height is rationalized and reported.
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"])]
    sides: Option<Vec<String>>,

    /// Denominator bound for rationalizing an irrational height.
    #[arg(long, default_value_t = 1_000_000)]
    denominator_bound: u64,

    /// Optional check families to include (default: all of them).
    #[arg(long, value_delimiter = ',', value_name = "FAMILIES")]
    include: Option<Vec<IncludeFamily>>,

    /// Write the JSON report here.
    #[arg(long, value_name = "FILE")]
    report: Option<PathBuf>,

    /// Write an SVG rendering here.
    #[arg(long, value_name = "FILE")]
    svg: Option<PathBuf>,

    /// SVG layers to draw (default: squares,pieces,colored,labels).
    #[arg(long, value_delimiter = ',', value_name = "LAYERS")]
    show: Option<Vec<LayerArg>>,

    /// SVG width in pixels.
    #[arg(long, default_value_t = 800)]
    width: u32,

    /// SVG padding as a fraction of the figure size, in [0, 1/2).
    #[arg(long, default_value_t = 0.08)]
    padding: f64,
}

#[derive(Args)]
struct BatchArgs {
    /// Number of random triangles.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,

    /// Seed of the deterministic generator.
    #[arg(long)]
    seed: u64,

    /// Coordinates are uniform integers in [-bound, bound].
    #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
    bound: i64,

    /// Write the JSON summary here.
    #[arg(long, value_name = "FILE")]
    report: Option<PathBuf>,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify(args) => run_verify(args),
        Command::Batch(args) => run_batch(args),
    }
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;

struct Style {
    enabled: bool,
}

impl Style {
    fn detect() -> Self {
        Style {
            enabled: std::env::var_os("LAWCOS_NO_COLOR").is_none()
                && std::io::stdout().is_terminal(),
        }
    }

    fn paint(&self, code: &str, text: &str) -> String {
        if self.enabled {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    fn good(&self, text: &str) -> String {
        self.paint("32", text)
    }

    fn bad(&self, text: &str) -> String {
        self.paint("31", text)
    }

    fn dim(&self, text: &str) -> String {
        self.paint("2", text)
    }
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let style = Style::detect();
    let points = match resolve_points(&args) {
        Ok(points) => points,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_INPUT_ERROR);
        }
    };
    let [a, b, c] = points;
    let options = run_options(&args);
    let report = match run_all(a, b, c, &options) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT_ERROR);
        }
    };

    if let Some(path) = &args.report {
        if let Err(e) = std::fs::write(path, emit_report(&report)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_INPUT_ERROR);
        }
    }
    if let Some(path) = &args.svg {
        let render = RenderOptions {
            width_px: args.width,
            padding_fraction: args.padding,
            show: layer_set(&args.show),
            colors: ColorMap::default(),
        };
        if let Err(message) = render.validate() {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_INPUT_ERROR);
        }
        let svg = render_svg(&report.figure, Some(&report.comparisons), &render);
        if let Err(e) = std::fs::write(path, svg) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_INPUT_ERROR);
        }
    }

    print_verify_summary(&report, &style);
    if report.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn resolve_points(args: &VerifyArgs) -> Result<[Point; 3], String> {
    if let Some(text) = &args.points {
        return parse_triangle(text).map_err(|e| e.to_string());
    }
    let sides = args.sides.as_ref().expect("clap enforces points or sides");
    let mut parsed = Vec::with_capacity(3);
    for (i, token) in sides.iter().enumerate() {
        let value = token
            .parse::<lawcos_core::Scalar>()
            .map_err(|e| format!("side {}: {e}", i + 1))?;
        parsed.push(value);
    }
    let placement = triangle_from_sides(
        &parsed[0],
        &parsed[1],
        &parsed[2],
        args.denominator_bound,
    )
    .map_err(|e| e.to_string())?;
    // Perturbations must be impossible to miss.
    if placement.exact {
        println!("note: {}", placement.note);
    } else {
        eprintln!("warning: {}", placement.note);
        println!("warning: {}", placement.note);
    }
    Ok(placement.points)
}

fn run_options(args: &VerifyArgs) -> RunOptions {
    match &args.include {
        None => RunOptions::default(),
        Some(families) => RunOptions {
            euclid: families.contains(&IncludeFamily::Euclid),
            parallelograms: families.contains(&IncludeFamily::Parallelograms),
            disjointness: families.contains(&IncludeFamily::Disjointness),
        },
    }
}

fn layer_set(show: &Option<Vec<LayerArg>>) -> BTreeSet<Layer> {
    match show {
        None => RenderOptions::default().show,
        Some(layers) => layers
            .iter()
            .filter_map(|layer| match layer {
                LayerArg::Squares => Some(Layer::Squares),
                LayerArg::Pieces => Some(Layer::Pieces),
                LayerArg::Colored => Some(Layer::Colored),
                LayerArg::Euclid => Some(Layer::Euclid),
                LayerArg::Parallelograms => Some(Layer::Parallelograms),
                LayerArg::Labels => Some(Layer::Labels),
                LayerArg::None => None,
            })
            .collect(),
    }
}

fn print_verify_summary(report: &VerificationReport, style: &Style) {
    let t = &report.figure.triangle;
    println!(
        "triangle: A={} B={} C={} [{}]",
        t.a(),
        t.b(),
        t.c(),
        t.orientation()
    );
    let case = &report.case;
    println!(
        "angles: A={} B={} C={}",
        case.angles.a, case.angles.b, case.angles.c
    );
    println!(
        "reflected: A'={} (red), B'={} (green), C'={} (blue)",
        case.reflected.red, case.reflected.green, case.reflected.blue
    );
    let chain = &report.chain;
    println!(
        "chain: {} = {} = {} = {} = {} = {}",
        chain.sides, chain.squares, chain.pieces, chain.colored, chain.blue_quadruple, chain.twice_dot_cab
    );
    let mut passed = 0;
    let mut failed = 0;
    let mut skipped = 0;
    for check in &report.checks {
        match check.status {
            CheckStatus::Pass => passed += 1,
            CheckStatus::Fail => failed += 1,
            CheckStatus::Skipped => skipped += 1,
        }
    }
    println!(
        "checks: {passed} pass, {failed} fail, {skipped} skipped (of {})",
        report.checks.len()
    );
    for check in &report.checks {
        match check.status {
            CheckStatus::Fail => {
                println!(
                    "  {} {}: residual {} ({})",
                    style.bad("FAIL"),
                    check.name,
                    check.residual,
                    check.note
                );
            }
            CheckStatus::Skipped => {
                println!("  {} {}: {}", style.dim("skip"), check.name, check.note);
            }
            CheckStatus::Pass => {}
        }
    }
    if report.all_pass {
        println!("{}", style.good("PASS: every residual is exactly 0"));
    } else {
        println!("{}", style.bad("FAIL"));
    }
}

fn run_batch(args: BatchArgs) -> ExitCode {
    let style = Style::detect();
    let summary = batch_random(args.count, args.seed, args.bound);
    if let Some(path) = &args.report {
        if let Err(e) = std::fs::write(path, emit_batch_report(&summary)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_INPUT_ERROR);
        }
    }
    println!(
        "batch: count={} seed={} bound={} elapsed={:.3}s",
        summary.count,
        summary.seed,
        summary.bound,
        summary.elapsed.as_secs_f64()
    );
    for failure in &summary.failures {
        println!(
            "  {} instance {}: A={} B={} C={} checks {}",
            style.bad("FAIL"),
            failure.index,
            failure.points[0],
            failure.points[1],
            failure.points[2],
            failure.failed_checks.join(", ")
        );
    }
    if summary.failures.is_empty() {
        println!("{}", style.good("PASS: no failures"));
        ExitCode::SUCCESS
    } else {
        println!("{}", style.bad(&format!("FAIL: {} failures", summary.failures.len())));
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}
