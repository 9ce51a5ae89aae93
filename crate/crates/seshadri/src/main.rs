use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use seshadri::bounds::{self, PrymInput};
use seshadri::lattice;
use seshadri::montecarlo;
use seshadri::surfaces;
use seshadri::types::{BoundKind, SiegelPointSchema};
use seshadri::{Error, PolarizationType};

#[derive(Parser)]
#[command(
    name = "seshadri",
    version,
    about = "Period-lattice and Seshadri-constant bounds for polarized abelian varieties"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the random subcommands, recorded in the output.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for the parallel sections (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form Seshadri and period bounds for a polarization type.
    Bounds {
        /// Polarization type as a comma-separated list, e.g. 1,2,4.
        #[arg(long = "type", value_delimiter = ',', required = true)]
        degrees: Vec<i64>,
    },
    /// Minimal period length at a Siegel point read from a JSON file.
    PeriodLength {
        /// File holding {"g", "type", "X" (optional), "Y"}.
        file: PathBuf,
    },
    /// Seshadri bound table for abelian surfaces of type (1, d).
    SurfaceTable {
        /// Largest d in the table.
        #[arg(long)]
        dmax: i64,
        /// Mark rows whose Seshadri constant is known exactly.
        #[arg(long)]
        bold_exact: bool,
    },
    /// Minimal solution of the Pell equation x^2 - n y^2 = 1.
    Pell {
        #[arg(long)]
        n: i64,
    },
    /// Seshadri and period bounds for the Prym variety of a double cover.
    Prym {
        /// Genus of the covering curve (at least 3).
        #[arg(long)]
        genus: i64,
        /// Gonality of the covering curve, when known.
        #[arg(long)]
        gonality: Option<i64>,
    },
    /// Monte Carlo estimate of the average period count at fixed y.
    Average {
        #[arg(long = "type", value_delimiter = ',', required = true)]
        degrees: Vec<i64>,
        /// Imaginary part parameter: Im Z = (1/y^2) Id.
        #[arg(long)]
        y: f64,
        /// Squared counting radius.
        #[arg(long)]
        r2: f64,
        #[arg(long)]
        samples: u64,
    },
    /// Random search for a Siegel point whose minimal period length beats a
    /// target.
    Search {
        #[arg(long = "type", value_delimiter = ',', required = true)]
        degrees: Vec<i64>,
        /// Squared-length target the minimal period should exceed.
        #[arg(long)]
        target: f64,
        #[arg(long)]
        trials: u64,
        /// Comma-separated y values to draw from.
        #[arg(long, value_delimiter = ',')]
        y_grid: Option<Vec<f64>>,
    },
}

#[derive(Serialize)]
struct Envelope {
    command: &'static str,
    inputs: Value,
    results: Value,
    version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    threads: usize,
}

enum CliError {
    Input(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: could not configure {n} worker threads: {e}");
            return ExitCode::from(2);
        }
    }

    match run(&cli) {
        Ok(envelope) => {
            emit(&envelope, cli.format);
            ExitCode::SUCCESS
        }
        Err(CliError::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numerical() { 3 } else { 2 })
        }
    }
}

fn run(cli: &Cli) -> Result<Envelope, CliError> {
    let seed = cli.seed.unwrap_or(0);
    let envelope =
        |command: &'static str, inputs: Value, results: Value, seed: Option<u64>| Envelope {
            command,
            inputs,
            results,
            version: env!("CARGO_PKG_VERSION"),
            seed,
            threads: rayon::current_num_threads(),
        };

    match &cli.command {
        Command::Bounds { degrees } => {
            let d = PolarizationType::new(degrees)?;
            let mut report = bounds::elementary_bounds(&d);
            report.push(
                "maximal minimal period lower bound",
                "minimal_period",
                bounds::max_minimal_period_lower(&d),
                BoundKind::Lower,
                Some("holds for some (A, L) of this type"),
            );
            report.push(
                "very general lower bound",
                "seshadri",
                bounds::very_general_seshadri_lower(&d),
                BoundKind::Lower,
                Some("very general (A, L)"),
            );
            let verdict = bounds::very_ample_criterion(&d);
            Ok(envelope(
                "bounds",
                json!({ "type": d.degrees() }),
                json!({ "report": report, "very_ample": verdict }),
                cli.seed,
            ))
        }
        Command::PeriodLength { file } => {
            let raw = std::fs::read_to_string(file)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", file.display())))?;
            let schema: SiegelPointSchema = serde_json::from_str(&raw)
                .map_err(|e| CliError::Input(format!("invalid input file: {e}")))?;
            let (d, z) = schema.into_parts()?;
            let result = lattice::minimal_period_length(&z, &d)?;
            let q = lattice::gram_form(&z, &d)?;
            let det = q.matrix().determinant();
            let pfaffian = d.pfaffian().clone();
            let pfaffian_squared = (&pfaffian * &pfaffian).to_string();
            Ok(envelope(
                "period-length",
                json!({ "file": file.display().to_string(), "type": d.degrees() }),
                json!({
                    "m": result.value,
                    "witness": result.witness,
                    "certified_radius": result.certified_radius,
                    "gram_determinant": det,
                    "pfaffian_squared": pfaffian_squared,
                    "seshadri_lower": bounds::seshadri_lower_from_period(result.value),
                }),
                cli.seed,
            ))
        }
        Command::SurfaceTable { dmax, bold_exact } => {
            let rows = surfaces::surface_table(*dmax)?;
            Ok(envelope(
                "surface-table",
                json!({ "dmax": dmax, "bold_exact": bold_exact }),
                json!({ "rows": rows }),
                cli.seed,
            ))
        }
        Command::Pell { n } => {
            let sol = surfaces::pell_primitive(*n)?;
            Ok(envelope(
                "pell",
                json!({ "n": n }),
                json!({
                    "n": sol.n,
                    "ell0": sol.ell0.to_string(),
                    "k0": sol.k0.to_string(),
                    "period": sol.period,
                    "quotients": sol.quotients,
                }),
                cli.seed,
            ))
        }
        Command::Prym { genus, gonality } => {
            let input = PrymInput::new(*genus, *gonality)?;
            Ok(envelope(
                "prym",
                json!({ "genus": genus, "gonality": gonality }),
                json!({
                    "dim_p": input.dim_p(),
                    "seshadri": bounds::prym_seshadri_upper(&input),
                    "minimal_period": bounds::prym_period_upper(&input),
                }),
                cli.seed,
            ))
        }
        Command::Average {
            degrees,
            y,
            r2,
            samples,
        } => {
            let d = PolarizationType::new(degrees)?;
            let estimate = montecarlo::estimate_average(&d, *y, *r2, *samples, seed)?;
            Ok(envelope(
                "average",
                json!({ "type": d.degrees(), "y": y, "r2": r2, "samples": samples }),
                serde_json::to_value(&estimate).expect("estimate serializes"),
                Some(seed),
            ))
        }
        Command::Search {
            degrees,
            target,
            trials,
            y_grid,
        } => {
            let d = PolarizationType::new(degrees)?;
            let grid = y_grid
                .clone()
                .unwrap_or_else(|| montecarlo::DEFAULT_Y_GRID.to_vec());
            let result = montecarlo::existence_search(&d, *target, *trials, &grid, seed)?;
            if result.target_above_threshold {
                eprintln!(
                    "warning: target {} is at or above the existence threshold {}; \
                     nothing guarantees the search can reach it",
                    target,
                    montecarlo::existence_threshold_r2(&d)
                );
            }
            Ok(envelope(
                "search",
                json!({
                    "type": d.degrees(),
                    "target": target,
                    "trials": trials,
                    "y_grid": grid,
                }),
                serde_json::to_value(&result).expect("search result serializes"),
                Some(seed),
            ))
        }
    }
}

fn emit(envelope: &Envelope, format: Format) {
    match format {
        Format::Json => {
            let out = serde_json::to_string(envelope).expect("envelope serializes");
            println!("{out}");
        }
        Format::Text => {
            println!("command: {}", envelope.command);
            println!("version: {}", envelope.version);
            if let Some(seed) = envelope.seed {
                println!("seed: {seed}");
            }
            println!("threads: {}", envelope.threads);
            println!("inputs:");
            render_value(&envelope.inputs, 1);
            println!("results:");
            if envelope.command == "surface-table" {
                render_surface_table(envelope);
            } else {
                render_value(&envelope.results, 1);
            }
        }
    }
}

fn render_surface_table(envelope: &Envelope) {
    let rows: Vec<surfaces::SurfaceBounds> =
        serde_json::from_value(envelope.results["rows"].clone()).expect("rows round-trip");
    let bold = envelope.inputs["bold_exact"].as_bool().unwrap_or(false);
    print!("{}", surfaces::render_table_text(&rows, bold));
}

/// Key: value lines with two-space indentation; scalars and arrays render
/// exactly as they would in JSON so both formats show identical numbers.
fn render_value(value: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => {
            for (key, inner) in map {
                match inner {
                    Value::Object(_) => {
                        println!("{pad}{key}:");
                        render_value(inner, depth + 1);
                    }
                    Value::Array(items) if items.iter().any(Value::is_object) => {
                        println!("{pad}{key}:");
                        for item in items {
                            println!("{pad}  -");
                            render_value(item, depth + 2);
                        }
                    }
                    _ => println!("{pad}{key}: {inner}"),
                }
            }
        }
        _ => println!("{pad}{value}"),
    }
}
