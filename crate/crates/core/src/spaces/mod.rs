//! Formal homotopy types, their connectivity, and the splitting of the
//! layer cube of a space of long knots into loop spaces of spheres and
//! smash powers.

mod cube;
mod expr;
mod split;

pub use cube::{build_layer_cube, CubeOfSpaces, Variance};
pub use expr::SpaceExpr;
pub use split::{
    for_each_total_fiber_factor, hilton_milnor_factors, hilton_milnor_split, total_fiber_factors, word_space,
    SplitFactor,
};

/// Connectivity of `x`; see [`SpaceExpr::connectivity`].
pub fn connectivity(x: &SpaceExpr) -> crate::ext::ExtInt {
    x.connectivity()
}
