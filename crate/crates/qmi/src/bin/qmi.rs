//! Thin command-line front end: `compute` evaluates a JSON scenario,
//! `sweep` runs one property check over random instances, `demo` prints
//! the closed-form endpoint table.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qmi::measures::{holevo_reduction, mutual_information, ChannelInput, Ensemble};
use qmi::scenario::Scenario;
use qmi::state::{MeasurementBasis, PureState};
use qmi::verifier::{records_csv, run_check, SweepConfig, CHECK_NAMES};

#[derive(Parser)]
#[command(name = "qmi", about = "Measurement-induced information measures for quantum channels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the measures requested by a JSON scenario file.
    Compute {
        /// Path to the scenario JSON.
        scenario: PathBuf,
        /// Output format: json (default) or pretty.
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Run one property check over seeded random instances.
    Sweep {
        /// Check name; one of: trivial, forward_dpi, pure_mixed_equivalence,
        /// separable_reduction, reverse_claims.
        check: String,
        #[arg(long, default_value_t = 100)]
        instances: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        kraus: usize,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write per-instance records as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Print the worked-example table of closed-form endpoints.
    Demo,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> qmi::Result<ExitCode> {
    match cli.command {
        Command::Compute { scenario, format } => {
            let text = std::fs::read_to_string(&scenario)
                .map_err(|e| qmi::Error::Parse(format!("{}: {e}", scenario.display())))?;
            let sc = Scenario::from_json(&text)?;
            let report = sc.evaluate()?;
            if format == "pretty" {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("{}", serde_json::to_string(&report).unwrap());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            check,
            instances,
            dim,
            seed,
            kraus,
            out,
            csv,
        } => {
            if !CHECK_NAMES.contains(&check.as_str()) {
                return Err(qmi::Error::InvalidParameter(format!(
                    "unknown check '{check}'; known: {}",
                    CHECK_NAMES.join(", ")
                )));
            }
            let mut cfg = SweepConfig::new(&check, instances, dim, seed);
            cfg.kraus_count = kraus;
            cfg.verbose = csv.is_some();
            let report = run_check(&cfg)?;
            let doc = serde_json::to_string_pretty(&report).unwrap();
            match &out {
                Some(path) => std::fs::write(path, &doc)
                    .map_err(|e| qmi::Error::Parse(format!("{}: {e}", path.display())))?,
                None => println!("{doc}"),
            }
            if let Some(path) = &csv {
                std::fs::write(path, records_csv(&report))
                    .map_err(|e| qmi::Error::Parse(format!("{}: {e}", path.display())))?;
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!(
                    "check '{}' failed {}/{} instances (max violation {:.3e})",
                    report.check, report.fail_count, report.instances_run, report.max_violation
                );
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Demo => {
            demo()?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn demo() -> qmi::Result<()> {
    let plus = ChannelInput::Pure(PureState::plus());
    let comp = MeasurementBasis::computational(2);
    let mut rows = Vec::new();

    let cases: Vec<(&str, qmi::channel::KrausChannel)> = vec![
        ("identity", qmi::channel::identity(2)),
        ("dephasing lambda=1", qmi::channel::dephasing(1.0)?),
        ("depolarizing p=1", qmi::channel::depolarizing(1.0)?),
    ];
    for (label, ch) in &cases {
        let r = mutual_information(&plus, &comp, ch)?;
        rows.push(serde_json::json!({
            "case": format!("{label}, |+>"),
            "quantity": "mutual_information",
            "value": r.mutual_information,
        }));
    }

    let ens = Ensemble::new(
        vec![0.5, 0.5],
        vec![
            PureState::basis_state(2, 0).to_density(),
            PureState::basis_state(2, 1).to_density(),
        ],
    )?;
    for p in [0.0, 0.5, 1.0] {
        let chi = holevo_reduction(&ens, &qmi::channel::depolarizing(p)?)?;
        rows.push(serde_json::json!({
            "case": format!("holevo depolarizing p={p}"),
            "quantity": "holevo_chi",
            "value": chi,
        }));
    }

    println!("{:<30} {:<20} {:>14}", "case", "quantity", "value");
    for row in &rows {
        println!(
            "{:<30} {:<20} {:>14.9}",
            row["case"].as_str().unwrap(),
            row["quantity"].as_str().unwrap(),
            row["value"].as_f64().unwrap()
        );
    }
    println!("{}", serde_json::to_string(&rows).unwrap());
    Ok(())
}
