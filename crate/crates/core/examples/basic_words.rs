//! Basic words on three letters and the Witt counts that predict them.
//!
//! cargo run --example basic_words

use embcalc::words::{enumerate_basic_words, multidegrees_of_weight, witt_count};

fn main() -> embcalc::Result<()> {
    let words = enumerate_basic_words(3, 4)?;
    for w in &words {
        println!(
            "{:<20} degree {:?}  alpha {}  beta {}",
            w.to_string(),
            w.multidegree().degrees(),
            w.alpha(),
            w.beta()
        );
    }

    println!("\nper multidegree of weight 4:");
    for d in multidegrees_of_weight(3, 4) {
        let listed = words.iter().filter(|w| w.multidegree() == &d).count();
        println!("  {:?}: {listed} words, Witt count {}", d.degrees(), witt_count(&d));
    }
    Ok(())
}
