//! Batch driver over the library: seeded verification campaigns, the
//! end-to-end fixture, and failure replay.
//!
//! Exit codes: 0 all checks passed, 1 verification failure, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use percrown::exactlin::FgAbelianGroup;
use percrown::franke::{main_theorem_verify, q, q_inverse, realize_r, twisted_iso_exists};
use percrown::percomplex::{tensor, PeriodicComplex};
use percrown::verify::{
    check_version, complex_from_wire, replay_instances, run, CampaignConfig, CheckKind,
    FailureArtifact, TrialConfig,
};

#[derive(Parser)]
#[command(
    name = "verify",
    about = "exact verification campaigns for the reconstruction machinery"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run seeded randomized checks and write a JSON report.
    Campaign {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        period: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Comma-separated subset of
        /// theoremA,theoremB,propA,cones,disks,main,finality,kunneth
        #[arg(long, default_value = "main,kunneth,finality")]
        checks: String,
        #[arg(long, default_value_t = 2)]
        max_rank: usize,
        #[arg(long, default_value_t = 3)]
        max_entry: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a named fixture end to end.
    Fixture {
        /// currently: moore3
        name: String,
    },
    /// Re-run the check stored in a failure artifact.
    Replay { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Campaign {
            seed,
            period,
            trials,
            checks,
            max_rank,
            max_entry,
            out,
        } => {
            let mut parsed = Vec::new();
            for name in checks.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let check =
                    CheckKind::parse(name).ok_or_else(|| format!("unknown check {name:?}"))?;
                parsed.push(check);
            }
            let config = CampaignConfig {
                seed,
                period,
                max_rank,
                max_entry,
                trials,
                checks: parsed,
            };
            let report = run(&config).map_err(|e| e.to_string())?;
            for c in &report.checks {
                println!(
                    "{}: {}/{} passed{}",
                    c.check.name(),
                    c.pass,
                    c.pass + c.fail,
                    if c.fail > 0 { "  [FAIL]" } else { "" }
                );
                for f in c.failures.iter().take(3) {
                    println!("  trial {}: {}", f.trial, f.message);
                }
            }
            let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
            if let Some(path) = out {
                std::fs::write(&path, &json).map_err(|e| e.to_string())?;
                println!("report written to {}", path.display());
            }
            Ok(report.all_passed())
        }
        Command::Fixture { name } => match name.as_str() {
            "moore3" => moore3_fixture(),
            other => Err(format!("unknown fixture {other:?} (try moore3)")),
        },
        Command::Replay { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| e.to_string())?;
            let artifact: FailureArtifact =
                serde_json::from_str(&text).map_err(|e| format!("parse: {e}"))?;
            if let Some(warning) = check_version(artifact.format_version) {
                eprintln!("warning: {warning}");
            }
            let instances = artifact
                .instances
                .iter()
                .map(complex_from_wire)
                .collect::<percrown::Result<Vec<_>>>()
                .map_err(|e| e.to_string())?;
            let cfg = TrialConfig {
                period: artifact.period,
                max_rank: 0,
                max_entry: 0,
            };
            match replay_instances(artifact.check, &cfg, &instances) {
                Ok(()) => {
                    println!("replay of {} no longer fails", artifact.check.name());
                    Ok(true)
                }
                Err(msg) => {
                    println!("replay of {} reproduces: {msg}", artifact.check.name());
                    Ok(false)
                }
            }
        }
    }
}

/// The end-to-end mod-3 fixture at period 2: round trip through the split
/// section, realization, and monoidality on homology.
fn moore3_fixture() -> Result<bool, String> {
    let m = PeriodicComplex::moore(2, 3);
    let crown = q_inverse(&m).map_err(|e| e.to_string())?;
    let qm = q(&crown).map_err(|e| e.to_string())?;
    let back = qm.free_complex().map_err(|e| e.to_string())?;
    let round_trip = twisted_iso_exists(&m, &back);
    println!(
        "round trip through the split section: {}",
        verdict(round_trip)
    );

    let r = realize_r(&m).map_err(|e| e.to_string())?;
    let h = r.homology();
    let realization = h.slots[0] == FgAbelianGroup::cyclic(3) && h.slots[1].is_trivial();
    println!(
        "realization has homology (Z/3, 0): {}",
        verdict(realization)
    );

    let main = main_theorem_verify(&m, &m).map_err(|e| e.to_string())?;
    let expect = vec![FgAbelianGroup::cyclic(3), FgAbelianGroup::cyclic(3)];
    let monoidal = main.lhs.slots == expect && main.rhs.slots == expect;
    println!(
        "realized tensor and tensor of realizations are both (Z/3, Z/3): {}",
        verdict(monoidal)
    );

    let t = tensor(&m, &m).map_err(|e| e.to_string())?;
    println!(
        "tensor square has homology {:?} per slot",
        t.homology().slots
    );
    Ok(round_trip && realization && monoidal)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}
