//! Polynomials over the rationals, the Boole polynomial ideal and the
//! interpolating components of the symbolic qudit ket.

mod boole;
mod poly;

pub use boole::{
    boole_poly, lagrange_component, lagrange_factored, reduce_mod_boole, BoolePolynomial, Factor,
    FactoredComponent,
};
pub use poly::Polynomial;
