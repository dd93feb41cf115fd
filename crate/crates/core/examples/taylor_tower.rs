//! The first stages of the tower of emb(I, N) for N ≃ ΣY with Y a 2-sphere.
//!
//! cargo run --example taylor_tower

use embcalc::spaces::SpaceExpr;
use embcalc::tower::{tower_summary, Stage};
use embcalc::ExtInt;

fn main() -> embcalc::Result<()> {
    let summary = tower_summary(4, &SpaceExpr::sphere(2), 4, ExtInt::Finite(4), ExtInt::Finite(1))?;
    for stage in &summary.stages {
        match stage {
            Stage::Immersions => println!("T_1 = immersions"),
            Stage::Layer {
                k,
                factors,
                map_connectivity,
            } => {
                println!("layer {k} (r_{k} is {map_connectivity}-connected):");
                for f in factors {
                    println!("  {:<24} {}", f.word.to_string(), f.expr.normalize());
                }
            }
        }
    }
    Ok(())
}
