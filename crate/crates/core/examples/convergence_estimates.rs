//! Closed-form estimates for emb(-, N^n): excision, the maps to the tower
//! stages, and the metastable range.
//!
//! cargo run --example convergence_estimates

use embcalc::estimates::{
    converges, emb_analyticity, emb_eta_connectivity, excision_cartesianness, haefliger_metastable,
    layer_map_connectivity, HandleProfile,
};
use embcalc::ExtInt::{Finite, NegInf};

fn main() -> embcalc::Result<()> {
    let n = 6;
    let emb = emb_analyticity(n)?;
    println!("emb(-, N^{n}) is {}-analytic with excess {}", emb.rho, emb.c);

    let profile = HandleProfile::new(6, vec![Finite(0), Finite(1), Finite(1)])?;
    let indices: Vec<String> = profile.q_list.iter().map(|q| q.to_string()).collect();
    println!(
        "cube of handles [{}]: {}-Cartesian",
        indices.join(", "),
        excision_cartesianness(&profile)?
    );
    let collar = HandleProfile::new(6, vec![NegInf, Finite(2)])?;
    println!("with a collar: {}-Cartesian", excision_cartesianness(&collar)?);

    for k in 1..=5 {
        println!(
            "M of handle index 1: emb → T_{k} is {}-connected, r_{k} is {}-connected",
            emb_eta_connectivity(n, Finite(1), k)?,
            layer_map_connectivity(&emb, Finite(1), k)?,
        );
    }
    println!("tower converges on index-3 handles: {}", converges(&emb, Finite(3)));
    println!("tower converges on index-4 handles: {}", converges(&emb, Finite(4)));

    for (m, n) in [(1, 4), (2, 5), (3, 5)] {
        let h = haefliger_metastable(m, n)?;
        println!("M^{m} → N^{n}: square Cartesian {}, s = {}", h.square_1_cartesian, h.s);
    }
    Ok(())
}
