mod commands;
mod encode;

use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use qsl2::modrep::Generator;
use qsl2::qarith::{parse_rational, Rational};
use qsl2::tensorcg::Interpretation;
use serde_json::{json, Map, Value};

use commands::{CliError, ModuleSpec, Output, Perturbation};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "qsl2",
    version,
    about = "Exact sl(2) and U_v(sl(2)) representation computations"
)]
struct Cli {
    /// Output format; json is the stable one.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Summands of F_m ⊗ F_n, cross-checked against the character of the built tensor module.
    Decompose {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        quantum: bool,
    },
    /// Highest-weight vector of weight m+n-2p in F_m ⊗ F_n; with --quantum, also compares phi.
    Hwv {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        quantum: bool,
        /// Index reading of the phi formula.
        #[arg(long, default_value = Interpretation::ASCENDING_SECOND.id, value_parser = parse_interpretation)]
        interpretation: Interpretation,
    },
    /// Verifies the defining relations on a constructed module.
    Check {
        #[command(subcommand)]
        module: CheckModule,
        /// Add 1 to one generator matrix entry before checking, as GEN:ROW:COL.
        #[arg(long, global = true, value_parser = parse_perturbation)]
        perturb: Option<Perturbation>,
        /// Include the module's basis, weights and generator matrices in the payload.
        #[arg(long, global = true)]
        describe: bool,
    },
    /// Table of [k] and [k]! for k <= max-n.
    Qtable {
        #[arg(long)]
        max_n: u32,
    },
}

#[derive(Subcommand)]
enum CheckModule {
    Findim {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        quantum: bool,
    },
    Verma {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
        hw: Rational,
        #[arg(long)]
        depth: i64,
    },
    Rasskazova {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
        beta: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
        lambda: Rational,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        window: usize,
    },
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_interpretation(s: &str) -> Result<Interpretation, String> {
    Interpretation::by_id(s).ok_or_else(|| {
        let ids: Vec<&str> = Interpretation::all().iter().map(|i| i.id).collect();
        format!(
            "unknown interpretation {s:?}; expected one of {}",
            ids.join(", ")
        )
    })
}

fn parse_perturbation(s: &str) -> Result<Perturbation, String> {
    let bad = || format!("expected GEN:ROW:COL, got {s:?}");
    let mut parts = s.split(':');
    let (Some(g), Some(r), Some(c), None) =
        (parts.next(), parts.next(), parts.next(), parts.next())
    else {
        return Err(bad());
    };
    let g = Generator::parse(g).ok_or_else(|| format!("unknown generator {g:?}"))?;
    Ok((
        g,
        r.parse().map_err(|_| bad())?,
        c.parse().map_err(|_| bad())?,
    ))
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Decompose { m, n, quantum } => commands::decompose(m, n, quantum),
        Command::Hwv {
            m,
            n,
            p,
            quantum,
            interpretation,
        } => commands::hwv(m, n, p, quantum, interpretation),
        Command::Check {
            module,
            perturb,
            describe,
        } => {
            let spec = match module {
                CheckModule::Findim { n, quantum } => ModuleSpec::FinDim { n, quantum },
                CheckModule::Verma { hw, depth } => ModuleSpec::Verma { hw, depth },
                CheckModule::Rasskazova {
                    beta,
                    lambda,
                    n,
                    window,
                } => ModuleSpec::Rasskazova {
                    beta,
                    lambda,
                    n,
                    window,
                },
            };
            commands::check(spec, perturb, describe)
        }
        Command::Qtable { max_n } => commands::qtable(max_n),
    }
}

fn envelope(
    command: &str,
    interpretation: Option<&str>,
    message: Option<&str>,
    payload: Option<Value>,
) -> Value {
    let mut env = Map::new();
    env.insert("version".into(), json!(VERSION));
    env.insert("command".into(), json!(command));
    if let Some(id) = interpretation {
        env.insert("interpretation".into(), json!(id));
    }
    env.insert(
        "status".into(),
        json!(if message.is_some() { "error" } else { "ok" }),
    );
    if let Some(m) = message {
        env.insert("message".into(), json!(m));
    }
    if let Some(p) = payload {
        env.insert("payload".into(), p);
    }
    Value::Object(env)
}

fn csv_cell(s: &str) -> String {
    s.replace(',', ";")
}

fn emit_output(format: Format, command: &str, out: &Output) {
    match format {
        Format::Json => {
            let env = envelope(
                command,
                out.interpretation,
                out.failure.as_deref(),
                Some(out.payload.clone()),
            );
            println!(
                "{}",
                serde_json::to_string_pretty(&env).expect("json values serialize")
            );
        }
        Format::Csv => {
            println!("{}", out.header.join(","));
            for row in &out.rows {
                let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                println!("{}", cells.join(","));
            }
        }
        Format::Pretty => {
            if let Some(id) = out.interpretation {
                println!("interpretation: {id}");
            }
            print!("{}", out.pretty);
        }
    }
    if let Some(msg) = &out.failure {
        eprintln!("qsl2: check failed: {msg}");
    }
}

fn emit_error(format: Format, command: &str, message: &str) {
    match format {
        Format::Json => {
            let env = envelope(command, None, Some(message), None);
            println!(
                "{}",
                serde_json::to_string_pretty(&env).expect("json values serialize")
            );
        }
        Format::Csv => println!("status,message\nerror,{}", csv_cell(message)),
        Format::Pretty => println!("error: {message}"),
    }
    eprintln!("qsl2: {message}");
}

/// Best-effort `--format` lookup for errors raised before clap finishes parsing.
fn format_from_args(args: &[String]) -> Format {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        let value = match a.strip_prefix("--format") {
            Some("") => it.next().map(String::as_str),
            Some(rest) => rest.strip_prefix('='),
            None => None,
        };
        if let Some(v) = value.and_then(|v| Format::from_str(v, false).ok()) {
            return v;
        }
    }
    Format::Json
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let command = args[1..].join(" ");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or_default();
            let message = first.trim_start_matches("error: ").to_string();
            emit_error(format_from_args(&args[1..]), &command, &message);
            return ExitCode::from(2);
        }
    };

    match run(cli.command) {
        Ok(out) => {
            emit_output(cli.format, &command, &out);
            if out.failure.is_some() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            emit_error(cli.format, &command, e.message());
            ExitCode::from(match e {
                CliError::Usage(_) => 2,
                CliError::Internal(_) => 1,
            })
        }
    }
}
