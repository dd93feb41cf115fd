//! Replaying the connectivity arguments step by step and checking them
//! against the closed forms.
//!
//! cargo run --example derivation_replay

use embcalc::engine::{derive_eta_bound, derive_homogeneous_cartesianness};
use embcalc::estimates::{eta_connectivity, AnalyticCofunctor};
use embcalc::ExtInt::Finite;

fn main() -> embcalc::Result<()> {
    let f = AnalyticCofunctor::new(4, -3, "G");
    let trace = derive_eta_bound(&f, 1, 3)?;
    trace.verify()?;
    println!("{trace}");
    println!("closed form: {}\n", eta_connectivity(&f, Finite(1), 2)?);

    let trace = derive_homogeneous_cartesianness(2, 0, 4, 3, &[Finite(0), Finite(0)])?;
    trace.verify()?;
    println!("{} steps, conclusion: {}", trace.steps.len(), trace.conclusion);
    println!("{}", serde_json::to_string(&trace.conclusion).expect("serializable"));
    Ok(())
}
