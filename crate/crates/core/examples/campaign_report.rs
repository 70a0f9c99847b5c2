//! Programmatic campaigns: run seeded checks, inspect the report, exercise
//! the wire formats.
//!
//! Run with `cargo run --example campaign_report`.

use percrown::percomplex::PeriodicComplex;
use percrown::verify::{
    complex_from_wire, complex_to_wire, run, CampaignConfig, CheckKind,
};

fn main() {
    let config = CampaignConfig {
        seed: 42,
        period: 3,
        max_rank: 2,
        max_entry: 3,
        trials: 20,
        checks: vec![
            CheckKind::TheoremA,
            CheckKind::TheoremB,
            CheckKind::Main,
            CheckKind::Kunneth,
        ],
    };
    let report = run(&config).unwrap();
    for c in &report.checks {
        println!("{}: {}/{}", c.check.name(), c.pass, c.pass + c.fail);
    }
    println!("all passed: {}", report.all_passed());
    println!("elapsed: {} ms", report.elapsed_ms);

    // objects round-trip through the JSON wire format
    let m = PeriodicComplex::moore(2, 3);
    let wire = complex_to_wire(&m);
    let json = serde_json::to_string_pretty(&wire).unwrap();
    println!("wire form of the mod-3 complex:\n{json}");
    let back = complex_from_wire(&serde_json::from_str(&json).unwrap()).unwrap();
    assert_eq!(back, m);
}
