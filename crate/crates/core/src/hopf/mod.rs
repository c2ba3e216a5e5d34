//! The quantized Hopf structure on `(Sym L)[h]`.

pub mod glue;
mod coproduct;
mod star;

pub use coproduct::{antipode, coassoc_probe, coproduct, coproduct_colored, counit, TensorK};
pub use star::{star, star_monomials, star_tensor};
