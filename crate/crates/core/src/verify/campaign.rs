//! Campaign driver: seeded trials, shrinking, machine-readable reports.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::percomplex::PeriodicComplex;
use crate::{Error, Result};

use super::checks::{run_trial, CheckKind, TrialConfig, TrialFailure};
use super::io::{complex_to_wire, WireComplex};
use super::rng::SplitMix64;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub seed: u64,
    pub period: usize,
    pub max_rank: usize,
    pub max_entry: i64,
    pub trials: usize,
    pub checks: Vec<CheckKind>,
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.period < 2 {
            return Err(Error::Config("period must be at least 2".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::Config("no checks selected".into()));
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
pub struct FailureArtifact {
    pub kind: String,
    pub format_version: u32,
    pub check: CheckKind,
    pub trial: u64,
    pub period: usize,
    pub message: String,
    pub params: Vec<(String, String)>,
    pub instances: Vec<WireComplex>,
}

#[derive(Serialize, Deserialize)]
pub struct CheckReport {
    pub check: CheckKind,
    pub pass: usize,
    pub fail: usize,
    pub failures: Vec<FailureArtifact>,
}

#[derive(Serialize, Deserialize)]
pub struct Report {
    pub kind: String,
    pub format_version: u32,
    pub engine_version: String,
    pub seed: u64,
    pub config: CampaignConfig,
    pub checks: Vec<CheckReport>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.fail == 0)
    }
}

/// Shrink the failing instances by re-running the trial on greedily reduced
/// inputs. Only checks driven by generated twisted complexes shrink; others
/// keep their parameters.
fn shrink_failure(check: CheckKind, cfg: &TrialConfig, failure: TrialFailure) -> TrialFailure {
    if failure.instances.is_empty() {
        return failure;
    }
    let mut shrunk: Vec<PeriodicComplex> = failure.instances.clone();
    for idx in 0..shrunk.len() {
        let original = shrunk[idx].clone();
        let reduced = super::generate::shrink_twisted(&original, &mut |cand| {
            let mut candidate = shrunk.clone();
            candidate[idx] = cand.clone();
            replay_instances(check, cfg, &candidate).is_err()
        });
        shrunk[idx] = reduced;
    }
    let message = match replay_instances(check, cfg, &shrunk) {
        Err(m) => m,
        Ok(()) => failure.message.clone(),
    };
    TrialFailure {
        message,
        instances: shrunk,
        params: failure.params,
    }
}

/// Re-run a check on explicit instances; used by shrinking and by `replay`.
pub fn replay_instances(
    check: CheckKind,
    _cfg: &TrialConfig,
    instances: &[PeriodicComplex],
) -> std::result::Result<(), String> {
    use crate::franke;
    let crowns = || -> std::result::Result<_, String> {
        if instances.len() < 2 {
            return Err("artifact does not carry two instances".into());
        }
        let x = franke::q_inverse(&instances[0]).map_err(|e| e.to_string())?;
        let y = franke::q_inverse(&instances[1]).map_err(|e| e.to_string())?;
        Ok((x, y))
    };
    match check {
        CheckKind::TheoremA => {
            let (x, y) = crowns()?;
            franke::theorem_a_verify(&x, &y)
                .map(|_| ())
                .map_err(|e| e.to_string())
        }
        CheckKind::TheoremB => {
            let (x, y) = crowns()?;
            match franke::theorem_b_verify(&x, &y) {
                Ok(r) if r.external_vs_tensor && r.kan_preserves_hocolim && r.crown_vs_double_crown => Ok(()),
                Ok(_) => Err("a stage of the hocolim decomposition failed".into()),
                Err(e) => Err(e.to_string()),
            }
        }
        CheckKind::PropA => {
            let (x, y) = crowns()?;
            match franke::prop_a_verify(&x, &y) {
                Ok(reps) if reps.iter().all(|r| r.all_pass()) => Ok(()),
                Ok(_) => Err("a spectral comparison failed".into()),
                Err(e) => Err(e.to_string()),
            }
        }
        CheckKind::Cones => {
            let (x, y) = crowns()?;
            match franke::cones_verify(&x, &y) {
                Ok(reps) if reps.iter().all(|r| r.direct_matches && r.counit_route_matches) => {
                    Ok(())
                }
                Ok(_) => Err("a cone comparison failed".into()),
                Err(e) => Err(e.to_string()),
            }
        }
        CheckKind::Main => {
            if instances.len() < 2 {
                return Err("artifact does not carry two instances".into());
            }
            franke::main_theorem_verify(&instances[0], &instances[1])
                .map(|_| ())
                .map_err(|e| e.to_string())
        }
        CheckKind::Kunneth | CheckKind::Finality | CheckKind::Disks => Err(format!(
            "{} failures replay through their parameters, not instances",
            check.name()
        )),
    }
}

pub fn run(config: &CampaignConfig) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let cfg = TrialConfig {
        period: config.period,
        max_rank: config.max_rank,
        max_entry: config.max_entry,
    };
    let mut checks = Vec::new();
    for &check in &config.checks {
        let mut pass = 0;
        let mut fail = 0;
        let mut failures = Vec::new();
        for trial in 0..config.trials as u64 {
            let mut rng = SplitMix64::for_trial(config.seed, check.name(), trial);
            match run_trial(check, &cfg, &mut rng, trial)? {
                Ok(()) => pass += 1,
                Err(failure) => {
                    fail += 1;
                    let failure = shrink_failure(check, &cfg, failure);
                    failures.push(FailureArtifact {
                        kind: "failure_artifact".into(),
                        format_version: FORMAT_VERSION,
                        check,
                        trial,
                        period: config.period,
                        message: failure.message,
                        params: failure.params,
                        instances: failure.instances.iter().map(complex_to_wire).collect(),
                    });
                }
            }
        }
        checks.push(CheckReport {
            check,
            pass,
            fail,
            failures,
        });
    }
    Ok(Report {
        kind: "campaign_report".into(),
        format_version: FORMAT_VERSION,
        engine_version: env!("CARGO_PKG_VERSION").to_string(),
        seed: config.seed,
        config: config.clone(),
        checks,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_artifacts_replay_to_the_same_failure() {
        // period 2 breaks the crown-restriction stage on some instances; the
        // shrunk artifact must reproduce the failure when replayed
        let config = CampaignConfig {
            seed: 9,
            period: 2,
            max_rank: 2,
            max_entry: 3,
            trials: 6,
            checks: vec![CheckKind::TheoremB],
        };
        let report = run(&config).unwrap();
        let failures: Vec<&FailureArtifact> =
            report.checks[0].failures.iter().collect();
        assert!(!failures.is_empty(), "expected period-2 failures to shrink and store");
        for f in failures {
            let instances: Vec<PeriodicComplex> = f
                .instances
                .iter()
                .map(|w| super::super::io::complex_from_wire(w).unwrap())
                .collect();
            let cfg = TrialConfig {
                period: 2,
                max_rank: 0,
                max_entry: 0,
            };
            assert!(
                replay_instances(f.check, &cfg, &instances).is_err(),
                "artifact did not reproduce"
            );
        }
    }

    #[test]
    fn small_campaign_is_deterministic_and_green() {
        let config = CampaignConfig {
            seed: 11,
            period: 3,
            max_rank: 2,
            max_entry: 3,
            trials: 3,
            checks: vec![CheckKind::Main, CheckKind::Kunneth],
        };
        let r1 = run(&config).unwrap();
        let r2 = run(&config).unwrap();
        assert!(r1.all_passed(), "failures: {:?}", r1.checks[0].failures.first().map(|f| &f.message));
        let j1 = serde_json::to_value(&r1.checks).unwrap();
        let j2 = serde_json::to_value(&r2.checks).unwrap();
        assert_eq!(j1, j2);
    }
}
