//! Exact construction of qudit computational-basis kets and projectors from
//! the Boole polynomial `x(x-1)...(x-d+1)`, plus the Hadamard/CNOT layer that
//! produces the two-qubit Bell basis.
//!
//! All arithmetic is exact. Scalars live in [`Rational`] (polynomial
//! coefficients) and [`AmplitudeQ2`], the field `Q(i, sqrt 2)` which is closed
//! under every gate and inner product used here.
//!
//! ```
//! use qudit_core::{basis_ket, symbolic_ket, Rational};
//!
//! let ket = symbolic_ket(3).unwrap();
//! assert_eq!(ket.entries()[0].to_string(), "1/2*x^2 - 3/2*x + 1");
//! assert_eq!(ket.evaluate(&Rational::from(1)), basis_ket(3, 1).unwrap());
//! ```

pub mod circuit;
mod error;
pub mod exactnum;
pub mod polyring;
pub mod qudit;
pub mod render;
pub mod verify;

pub use circuit::{
    bell_closed_form, bell_matrix, bell_state, cnot, gate_tensor, hadamard, BellState, Gate,
};
pub use error::{Error, Result};
pub use exactnum::{AmplitudeQ2, Rational};
pub use polyring::{
    boole_poly, lagrange_component, lagrange_factored, reduce_mod_boole, BoolePolynomial,
    FactoredComponent, Polynomial,
};
pub use qudit::{
    basis_ket, bra_of, completeness_sum, inner_product, outer_product, projector, superpose,
    symbolic_ket, symbolic_projector, tensor_product, AmpMatrix, Bra, Ket, Projector,
    Superposition, SymbolicKet, SymbolicProjector,
};
pub use verify::{run_verify, Check, VerifyReport, DEFAULT_D_CAP};
