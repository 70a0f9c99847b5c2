//! Timing probe: worst and total per-trial cost of each check family.
//!
//! Run with `cargo run --release --example profile_checks`.

use percrown::verify::{run_trial, CheckKind, SplitMix64, TrialConfig};
use std::time::{Duration, Instant};

fn main() {
    for period in [2usize, 3, 4] {
        let cfg = TrialConfig {
            period,
            max_rank: 2,
            max_entry: 3,
        };
        println!("period {period}:");
        for check in CheckKind::ALL {
            let trials = 12u64;
            let mut total = Duration::ZERO;
            let mut worst = Duration::ZERO;
            let mut fails = 0;
            for trial in 0..trials {
                let mut rng = SplitMix64::for_trial(7, check.name(), trial);
                let t0 = Instant::now();
                if run_trial(check, &cfg, &mut rng, trial).unwrap().is_err() {
                    fails += 1;
                }
                let dt = t0.elapsed();
                total += dt;
                if dt > worst {
                    worst = dt;
                }
            }
            println!(
                "  {:<9} total {:>10.2?}  worst {:>10.2?}  fails {fails}/{trials}",
                check.name(),
                total,
                worst
            );
        }
    }
}
