//! The cube whose total fiber is the k-th layer, and its splitting word by
//! word, compared with the closed formula.
//!
//! cargo run --example layer_cube

use embcalc::spaces::{build_layer_cube, total_fiber_factors, SpaceExpr};
use embcalc::tower::layer_factors;
use embcalc::ExtInt;

fn main() -> embcalc::Result<()> {
    let (k, n) = (3, 5);
    let y = SpaceExpr::sphere(n - 2);
    let cube = build_layer_cube(k, n, &y)?;
    for (subset, vertex) in cube.iter() {
        println!("R = {subset:?}: {}", vertex.normalize());
    }

    let cutoff = ExtInt::Finite(8);
    let from_cube: Vec<String> = total_fiber_factors(&cube, cutoff)?
        .iter()
        .map(|f| format!("{} {}", f.word, f.expr.normalize()))
        .collect();
    let direct: Vec<String> = layer_factors(k, n, &y, cutoff)?
        .iter()
        .map(|f| format!("{} {}", f.word, f.expr.normalize()))
        .collect();
    println!("\nfactors up to connectivity {cutoff}:");
    for row in &from_cube {
        println!("  {row}");
    }
    println!("closed formula agrees: {}", from_cube == direct);
    Ok(())
}
