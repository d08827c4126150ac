use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lie4::commands::{self, Backend, CliError, Outcome, Property};
use lie4::coordinate_model::DEFAULT_STEP;
use lie4::spec_file::parse_rational;

#[derive(Parser)]
#[command(name = "lie4", version, about = "Exact checks of left-invariant almost Kähler structures on 4-dimensional Lie algebras")]
struct Cli {
    /// Output rendering.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Curvature and almost Hermitian invariants of an algebra spec file.
    Check {
        file: PathBuf,
        /// Exact rational arithmetic (default).
        #[arg(long, conflicts_with = "float")]
        exact: bool,
        /// Double precision with residual tolerance 1e-9.
        #[arg(long)]
        float: bool,
        /// Extra properties that must hold for exit code 0.
        #[arg(long, value_enum, value_delimiter = ',')]
        require: Vec<Property>,
    },
    /// The two-parameter strictly almost Kähler family at (s, t).
    Family {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// Print the family as a spec file instead of a report.
        #[arg(long)]
        emit_spec: bool,
    },
    /// Certificates for the solution branches of the classification system.
    Classify {
        /// `all` or a branch id in 1..=17.
        #[arg(long, default_value = "all")]
        branch: String,
    },
    /// Reference algebras and the coordinate metric.
    Model {
        #[command(subcommand)]
        model: Model,
    },
    /// CSV of family invariants over an (s, t) grid.
    Sweep {
        /// LO:HI
        #[arg(long, allow_hyphen_values = true)]
        s_range: String,
        /// LO:HI
        #[arg(long, allow_hyphen_values = true)]
        t_range: String,
        /// Points per axis.
        #[arg(long, default_value_t = 11)]
        grid: usize,
        /// Write to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Model {
    /// The solvable algebra with df2 = (1 - α) f12, df3 = -f13, df4 = -α f14 - f23.
    G49 {
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        alpha: String,
    },
    /// ℝ² ⋉ sl₂-type reference algebra with its standard structure.
    R2sol2,
    /// Finite-difference curvature of the homogeneous coordinate metric.
    Kowalski {
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long, default_value_t = 10)]
        points: usize,
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cross-validate against the family at (s, t); give both.
        #[arg(long, allow_hyphen_values = true, requires = "t")]
        s: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "s")]
        t: Option<String>,
    },
}

enum Output {
    Report(Outcome),
    Text(String),
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })
}

fn as_f64(name: &str, v: &str) -> Result<f64, CliError> {
    use num_traits::ToPrimitive;
    Ok(parse_rational(name, v)?.to_f64().unwrap_or(f64::NAN))
}

fn run(cli: Cli) -> Result<Output, CliError> {
    Ok(match cli.command {
        Command::Check { file, float, require, .. } => {
            let backend = if float { Backend::Float } else { Backend::Exact };
            Output::Report(commands::cmd_check(&read(&file)?, backend, &require)?)
        }
        Command::Family { s, t, emit_spec } => {
            if emit_spec {
                let (s, t) = (parse_rational("s", &s)?, parse_rational("t", &t)?);
                if num_traits::Zero::is_zero(&t) {
                    return Err(CliError::ZeroT);
                }
                Output::Text(commands::family_spec(&s, &t, true)?.to_json() + "\n")
            } else {
                Output::Report(commands::cmd_family(&s, &t)?)
            }
        }
        Command::Classify { branch } => Output::Report(commands::cmd_classify(&branch)?),
        Command::Model { model } => Output::Report(match model {
            Model::G49 { alpha } => commands::cmd_model_g49(&alpha)?,
            Model::R2sol2 => commands::cmd_model_r2sol2()?,
            Model::Kowalski { lambda, points, step, seed, s, t } => {
                let st = match (s, t) {
                    (Some(s), Some(t)) => Some((as_f64("s", &s)?, as_f64("t", &t)?)),
                    _ => None,
                };
                commands::cmd_model_kowalski(lambda, points, step, seed, st)?
            }
        }),
        Command::Sweep { s_range, t_range, grid, output } => {
            let rows = commands::sweep_rows(
                commands::parse_range("--s-range", &s_range)?,
                commands::parse_range("--t-range", &t_range)?,
                grid,
            )?;
            match output {
                Some(path) => {
                    let file = std::fs::File::create(&path)
                        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
                    commands::write_sweep_csv(&rows, file)?;
                    Output::Text(String::new())
                }
                None => {
                    let mut buf = Vec::new();
                    commands::write_sweep_csv(&rows, &mut buf)?;
                    Output::Text(String::from_utf8(buf).expect("CSV is UTF-8"))
                }
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(Output::Report(o)) => {
            match format {
                Format::Json => print!("{}", o.report.to_json()),
                Format::Text => print!("{}", o.report.to_text()),
            }
            ExitCode::from(o.exit as u8)
        }
        Ok(Output::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
