use num_bigint::BigInt;
use num_traits::One;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// The monic polynomial `x(x-1)...(x-(d-1))` whose roots are the classical
/// symbol values of a d-level system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoolePolynomial {
    d: usize,
    poly: Polynomial,
}

impl BoolePolynomial {
    pub fn new(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        let poly = (0..d)
            .map(|j| Polynomial::from_coeffs(vec![Rational::from(-(j as i64)), Rational::one()]))
            .product();
        Ok(BoolePolynomial { d, poly })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    /// Remainder of `p` modulo this polynomial.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        p.divmod(&self.poly)
            .expect("boole polynomial is monic and nonzero")
            .1
    }
}

pub fn boole_poly(d: usize) -> Result<BoolePolynomial> {
    BoolePolynomial::new(d)
}

/// Remainder of `p` modulo `boole_poly(d)`; agrees with `p` on `0..d`.
pub fn reduce_mod_boole(p: &Polynomial, d: usize) -> Result<Polynomial> {
    Ok(boole_poly(d)?.reduce(p))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn check_index(d: usize, k: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if k >= d {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            bound: d,
        });
    }
    Ok(())
}

/// Component `k` of the symbolic d-level ket:
///
/// ```text
/// l_k(x) = prod_{j != k} (j - x) / ((-1)^k k! (d-1-k)!)
/// ```
///
/// so that `l_k(m) = 1` when `m == k` and `0` for every other `m` in `0..d`.
pub fn lagrange_component(d: usize, k: usize) -> Result<Polynomial> {
    check_index(d, k)?;
    let numerator: Polynomial = (0..d)
        .filter(|&j| j != k)
        .map(|j| Polynomial::root_factor(Rational::from(j as i64)))
        .product();
    let mut denom = factorial(k) * factorial(d - 1 - k);
    if k % 2 == 1 {
        denom = -denom;
    }
    let scale = Rational::new(1, denom)?;
    Ok(numerator.scale(&scale))
}

/// One linear factor of a factored ket component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `x`
    X,
    /// `(x - j)`
    XMinus(usize),
    /// `(j - x)`
    MinusX(usize),
}

impl Factor {
    pub fn expand(self) -> Polynomial {
        match self {
            Factor::X => Polynomial::x(),
            Factor::XMinus(j) => {
                Polynomial::from_coeffs(vec![Rational::from(-(j as i64)), Rational::one()])
            }
            Factor::MinusX(j) => Polynomial::root_factor(Rational::from(j as i64)),
        }
    }

    fn render(self) -> String {
        match self {
            Factor::X => "x".to_string(),
            Factor::XMinus(j) => format!("(x-{j})"),
            Factor::MinusX(j) => format!("({j}-x)"),
        }
    }
}

/// Display template for `lagrange_component(d, k)` over the shared
/// denominator `(d-1)!`: `binom(d-1, k) * factors / (d-1)!`.
///
/// The sign `(-1)^k` is absorbed by flipping every factor with `j < k` to
/// `(x - j)`, which yields the `2x(2-x)` and `x(x-1)` shapes of the qutrit
/// display. [`expand`](Self::expand) must agree with [`lagrange_component`];
/// the expanded polynomial stays the reference for equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredComponent {
    pub multiplier: BigInt,
    pub common_denominator: BigInt,
    pub factors: Vec<Factor>,
}

impl FactoredComponent {
    pub fn expand(&self) -> Polynomial {
        let product: Polynomial = self.factors.iter().map(|f| f.expand()).product();
        let scale = Rational::new(self.multiplier.clone(), self.common_denominator.clone())
            .expect("factorial is nonzero");
        product.scale(&scale)
    }

    /// Numerator in the compact printed style, e.g. `3x(x-1)(3-x)`.
    pub fn numerator_text(&self) -> String {
        let mut out = String::new();
        if !self.multiplier.is_one() {
            out.push_str(&self.multiplier.to_string());
        }
        if let ([only], true) = (self.factors.as_slice(), out.is_empty()) {
            return only.render().trim_matches(['(', ')']).to_string();
        }
        for f in &self.factors {
            out.push_str(&f.render());
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

pub fn lagrange_factored(d: usize, k: usize) -> Result<FactoredComponent> {
    check_index(d, k)?;
    let factors = (0..d)
        .filter(|&j| j != k)
        .map(|j| match j {
            0 if k > 0 => Factor::X,
            j if j < k => Factor::XMinus(j),
            j => Factor::MinusX(j),
        })
        .collect();
    let common_denominator = factorial(d - 1);
    let multiplier = &common_denominator / (factorial(k) * factorial(d - 1 - k));
    Ok(FactoredComponent {
        multiplier,
        common_denominator,
        factors,
    })
}
