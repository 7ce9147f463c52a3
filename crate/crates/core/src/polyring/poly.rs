use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{scan_rational, Rational};

/// Dense univariate polynomial over [`Rational`]; `coeffs[n]` is the
/// coefficient of `x^n`. Trailing zeros are always stripped, so the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Self::from_coeffs(coeffs)
    }

    /// `c - x`, the factor shape used by the ket components.
    pub fn root_factor(c: Rational) -> Self {
        Self::from_coeffs(vec![c, Rational::from(-1)])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Rational::is_one)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Euclidean division: returns `(q, r)` with `self = q*den + r` and
    /// `deg r < deg den`.
    pub fn divmod(&self, den: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let den_deg = den.degree().ok_or(Error::DivisionByZero)?;
        if self.coeffs.len() <= den_deg {
            return Ok((Self::zero(), self.clone()));
        }
        if den.is_monic() && den.coeffs.iter().all(Rational::is_integer) {
            return Ok(self.divmod_monic_integer(den, den_deg));
        }
        let lead_inv = den.coeffs[den_deg].recip()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - den_deg];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + den_deg];
            if top.is_zero() {
                continue;
            }
            let factor = top * &lead_inv;
            for (j, dc) in den.coeffs.iter().enumerate() {
                rem[shift + j] = &rem[shift + j] - &factor * dc;
            }
            quot[shift] = factor;
        }
        rem.truncate(den_deg);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    // Long division by a monic integer polynomial stays integral once the
    // numerator's denominators are cleared.
    fn divmod_monic_integer(&self, den: &Polynomial, den_deg: usize) -> (Polynomial, Polynomial) {
        let (mut rem, scale) = self.integer_form();
        let den: Vec<BigInt> = den.coeffs.iter().map(|c| c.numer().clone()).collect();
        let mut quot = vec![BigInt::zero(); rem.len() - den_deg];
        for shift in (0..quot.len()).rev() {
            let factor = std::mem::take(&mut rem[shift + den_deg]);
            if factor.is_zero() {
                continue;
            }
            for (j, dc) in den[..den_deg].iter().enumerate() {
                if !dc.is_zero() {
                    rem[shift + j] -= &factor * dc;
                }
            }
            quot[shift] = factor;
        }
        rem.truncate(den_deg);
        (
            Self::from_integer_form(quot, &scale),
            Self::from_integer_form(rem, &scale),
        )
    }

    /// `(n, m)` with `self = n / m`, `n` integral and `m` the lcm of the
    /// coefficient denominators.
    fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        (ints, lcm)
    }

    fn from_integer_form(ints: Vec<BigInt>, denom: &BigInt) -> Self {
        Self::from_coeffs(
            ints.into_iter()
                .map(|n| Rational::new(n, denom.clone()).expect("nonzero denominator"))
                .collect(),
        )
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (slot, c) in coeffs.iter_mut().zip(&short.coeffs) {
            *slot = &*slot + c;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        // Integer convolution over a shared denominator avoids a gcd per
        // coefficient product.
        let (l, l_den) = self.integer_form();
        let (r, r_den) = rhs.integer_form();
        let mut coeffs = vec![BigInt::zero(); l.len() + r.len() - 1];
        for (i, a) in l.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in r.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_integer_form(coeffs, &(l_den * r_den))
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| acc * p)
    }
}

impl fmt::Display for Polynomial {
    /// Descending `c*x^n` terms, e.g. `1/2*x^2 - 3/2*x + 1`; unit
    /// coefficients are dropped in front of `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match n {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    f.write_str("x")?;
                    if n > 1 {
                        write!(f, "^{n}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Accepts the display form plus the looser `2x`, `x^3`, `-x + 1`.
    fn from_str(input: &str) -> Result<Self> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: String| Error::Parse {
            kind: "polynomial",
            input: input.to_string(),
            reason,
        };
        if compact.is_empty() {
            return Err(err("empty input".into()));
        }
        let mut rest = compact.as_str();
        let mut acc = Polynomial::zero();
        let mut first = true;
        while !rest.is_empty() {
            let negative = if let Some(after) = rest.strip_prefix('+') {
                rest = after;
                false
            } else if let Some(after) = rest.strip_prefix('-') {
                rest = after;
                true
            } else if first {
                false
            } else {
                return Err(err(format!("expected '+' or '-' before {rest:?}")));
            };
            first = false;

            if rest.starts_with('-') {
                return Err(err("doubled sign".into()));
            }
            let (mut coeff, used) = scan_rational(rest)?.unwrap_or((Rational::one(), 0));
            let had_coeff = used > 0;
            rest = &rest[used..];
            if had_coeff {
                if let Some(after) = rest.strip_prefix('*') {
                    if !after.starts_with('x') {
                        return Err(err("expected 'x' after '*'".into()));
                    }
                    rest = after;
                }
            }
            let mut power = 0usize;
            if let Some(after) = rest.strip_prefix('x') {
                rest = after;
                power = 1;
                if let Some(after) = rest.strip_prefix('^') {
                    let digits = after.bytes().take_while(u8::is_ascii_digit).count();
                    if digits == 0 {
                        return Err(err("expected exponent after '^'".into()));
                    }
                    power = after[..digits]
                        .parse()
                        .map_err(|e| err(format!("bad exponent: {e}")))?;
                    rest = &after[digits..];
                }
            } else if !had_coeff {
                return Err(err(format!("expected a term at {rest:?}")));
            }
            if negative {
                coeff = -coeff;
            }
            acc = acc + Polynomial::monomial(coeff, power);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(
            &Polynomial::x() * &(Polynomial::x() - Polynomial::one()),
            p("x^2 - x")
        );
        assert_eq!(
            &Polynomial::root_factor(q(1, 1)) + &Polynomial::x(),
            Polynomial::one()
        );
        // 2x(2-x) scaled by 1/2 is x(2-x) = [0, 2, -1]
        let two_x_two_minus_x = p("2*x") * Polynomial::root_factor(q(2, 1));
        assert_eq!(
            two_x_two_minus_x.scale(&q(1, 2)).coeffs(),
            &[q(0, 1), q(2, 1), q(-1, 1)]
        );
        assert!(p("x + 1").scale(&q(0, 1)).is_zero());
    }

    #[test]
    fn degree_of_product_adds() {
        let a = p("3x^2 + 1");
        let b = p("x^3 - 2x");
        assert_eq!((&a * &b).degree(), Some(5));
        assert_eq!(Polynomial::zero().degree(), None);
        assert!((&a * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn evaluation() {
        let boole = p("x^2 - x");
        assert_eq!(boole.eval(&q(1, 1)), q(0, 1));
        assert_eq!(boole.eval(&q(2, 1)), q(2, 1));
        assert_eq!(Polynomial::zero().eval(&q(7, 3)), q(0, 1));
    }

    #[test]
    fn divmod_examples() {
        let boole = p("x^2 - x");
        assert_eq!(
            p("x^2").divmod(&boole).unwrap(),
            (Polynomial::one(), Polynomial::x())
        );
        assert_eq!(
            boole.divmod(&boole).unwrap(),
            (Polynomial::one(), Polynomial::zero())
        );
        // (1-x)^2 - (1-x) expands to x^2 - x
        let one_minus_x = Polynomial::root_factor(q(1, 1));
        let lhs = &(&one_minus_x * &one_minus_x) - &one_minus_x;
        assert_eq!(
            lhs.divmod(&boole).unwrap(),
            (Polynomial::one(), Polynomial::zero())
        );
        assert_eq!(
            p("x").divmod(&Polynomial::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            p("x + 1").divmod(&boole).unwrap(),
            (Polynomial::zero(), p("x + 1"))
        );
        // non-monic divisor
        let (quot, rem) = p("x^3 + 1").divmod(&p("2x - 1")).unwrap();
        assert_eq!(quot, p("1/2x^2 + 1/4x + 1/8"));
        assert_eq!(rem, p("9/8"));
    }

    #[test]
    fn text_form() {
        let poly = Polynomial::from_coeffs(vec![q(1, 1), q(-3, 2), q(1, 2)]);
        assert_eq!(poly.to_string(), "1/2*x^2 - 3/2*x + 1");
        assert_eq!(p("1/2*x^2 - 3/2*x + 1"), poly);
        assert_eq!(p("-x + 1").to_string(), "-x + 1");
        assert_eq!(
            p("-1/6*x^3 + x^2 - 11/6*x + 1").to_string(),
            "-1/6*x^3 + x^2 - 11/6*x + 1"
        );
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p("0"), Polynomial::zero());
        assert_eq!(p("x - x"), Polynomial::zero());
        assert_eq!(p("-3"), Polynomial::constant(q(-3, 1)));
    }

    #[test]
    fn rejects_malformed_text() {
        for bad in ["", "x^", "2*", "y", "x x", "1/0*x", "--x", "x+", "2*3"] {
            assert!(bad.parse::<Polynomial>().is_err(), "{bad:?} parsed");
        }
    }
}
