//! ΩΣ of a wedge splits into a weak product indexed by basic words.
//!
//! cargo run --example hilton_milnor

use embcalc::spaces::{hilton_milnor_factors, SpaceExpr};
use embcalc::ExtInt;

fn main() -> embcalc::Result<()> {
    let y = SpaceExpr::generic("Y", ExtInt::Finite(1))?;
    let summands = [SpaceExpr::sphere(2), y];
    println!("ΩΣ(S^2 ∨ Y), factors of connectivity <= 6:");
    for (word, factor) in hilton_milnor_factors(&summands, ExtInt::Finite(6))? {
        let factor = factor.normalize();
        println!(
            "  {:<16} {:<16} {}-connected",
            word.to_string(),
            factor.to_string(),
            factor.connectivity()
        );
    }
    Ok(())
}
