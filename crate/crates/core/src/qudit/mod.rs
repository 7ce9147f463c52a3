//! Kets, bras, projectors and superpositions of d-level systems, in numeric
//! (evaluated) and symbolic (polynomial-entry) form.

mod ket;
mod matrix;
mod projector;
mod superposition;

pub use ket::{
    basis_ket, bra_of, inner_product, symbolic_ket, tensor_product, Bra, Ket, SymbolicKet,
};
pub use matrix::AmpMatrix;
pub use projector::{
    completeness_sum, outer_product, projector, symbolic_projector, Projector, SymbolicProjector,
};
pub use superposition::{superpose, Superposition};
