//! Long knots in R^6 x I: the tower layers and the fibration to closed knots.
//!
//! cargo run --example long_knots

use embcalc::tower::{knot_tower, Stage};
use embcalc::ExtInt;

fn main() -> embcalc::Result<()> {
    let knots = knot_tower(7, 4, ExtInt::Finite(20))?;
    for stage in &knots.summary.stages {
        if let Stage::Layer { k, factors, .. } = stage {
            let rendered: Vec<String> = factors.iter().map(|f| f.expr.normalize().to_string()).collect();
            println!("layer {k}: {}", rendered.join(" × "));
        }
    }
    let fib = &knots.fibration;
    println!("{} → {} → {}", fib.fiber, fib.total, fib.base);
    println!(
        "base has dimension {} and is {}-connected",
        fib.base_dimension, fib.base_connectivity
    );

    // n < 4 lies outside the range of the layer formula
    println!("{}", knot_tower(3, 2, ExtInt::Finite(10)).unwrap_err());
    Ok(())
}
