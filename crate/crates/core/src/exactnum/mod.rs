//! Exact scalars: reduced big rationals and the amplitude field `Q(i, sqrt 2)`.
//!
//! Literal grammar shared by the CLI and the JSON output:
//!
//! ```text
//! rational  := ["-"] digits ["/" digits]
//! amplitude := term { ("+" | "-") term }
//! term      := rational ["i"] ["s2"]        (s2 stands for sqrt 2)
//! ```

mod amplitude;
mod rational;

pub use amplitude::AmplitudeQ2;
pub use rational::Rational;

pub(crate) use rational::scan_rational;
