//! Symbolic calculator for the embedding-calculus Taylor tower.
//!
//! The crate computes with formal homotopy types and connectivity bounds:
//!
//! * [`words`]: basic (Lyndon) words on `k` letters, their multidegrees and
//!   the Witt counts that predict how many there are.
//! * [`spaces`]: space expressions, cubes of spaces and the Hilton–Milnor
//!   splitting of `ΩΣ` of a wedge.
//! * [`tower`]: layers of the tower of `emb(I, N)` for `N ≃ ΣY`, computed both
//!   by the closed formula and from the defining cube.
//! * [`estimates`]: closed-form Cartesian-ness and connectivity estimates for
//!   analytic cofunctors.
//! * [`engine`]: replayable derivations of the main estimates from a handful
//!   of cube rules.
//! * [`cli`]: the `embcalc` command line.
//!
//! Extended integers ([`ExtInt`]) are used for every connectivity, so
//! contractible spaces (`+inf`) and empty ones (`-inf`) need no special
//! casing.

pub mod cli;
pub mod engine;
mod error;
pub mod estimates;
mod ext;
pub mod spaces;
pub mod tower;
pub mod words;

pub use error::{Error, Result};
pub use ext::ExtInt;
