//! Exact computations with necklace Lie bialgebras of quivers, their
//! Moyal-type quantization, matrix-trace representations, ribbon graph
//! complexes and cyclic A∞ weights.

pub mod ainf;
pub mod error;
pub mod hopf;
pub mod matrix_rep;
pub mod necklace;
pub mod poly;
pub mod quiver;
pub mod ribbon;
pub mod verify;

pub use error::{Error, Result};
