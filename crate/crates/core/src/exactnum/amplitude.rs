use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::rational::{scan_rational, Rational};
use crate::error::{Error, Result};

/// An element `(a + ai*i) + (b + bi*i)*sqrt(2)` of the field `Q(i, sqrt 2)`.
///
/// Because `sqrt 2` is irrational and `i` is imaginary over `Q`, the four
/// rational components are unique, so equality is field-wise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AmplitudeQ2 {
    a: Rational,
    ai: Rational,
    b: Rational,
    bi: Rational,
}

impl AmplitudeQ2 {
    pub fn new(a: Rational, ai: Rational, b: Rational, bi: Rational) -> Self {
        AmplitudeQ2 { a, ai, b, bi }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(Rational::one())
    }

    pub fn i() -> Self {
        Self::new(
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn sqrt2() -> Self {
        Self::new(
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
        )
    }

    /// `1/sqrt(2)`, stored as `(1/2)*sqrt(2)`.
    pub fn inv_sqrt2() -> Self {
        Self::new(
            Rational::zero(),
            Rational::zero(),
            Rational::new(1, 2).expect("nonzero denominator"),
            Rational::zero(),
        )
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn ai(&self) -> &Rational {
        &self.ai
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn bi(&self) -> &Rational {
        &self.bi
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.ai.is_zero() && self.b.is_zero() && self.bi.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.ai.is_zero() && self.b.is_zero() && self.bi.is_zero()
    }

    /// Returns the value as a plain rational when both imaginary and both
    /// `sqrt 2` components vanish.
    pub fn as_rational(&self) -> Option<&Rational> {
        (self.ai.is_zero() && self.b.is_zero() && self.bi.is_zero()).then_some(&self.a)
    }

    /// Complex conjugate: negates the two imaginary components.
    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -&self.ai, self.b.clone(), -&self.bi)
    }

    /// `v * conj(v)`. The imaginary components of the result are always zero,
    /// the `sqrt 2` component generally is not.
    pub fn norm_sq(&self) -> Self {
        self * &self.conj()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.a * k, &self.ai * k, &self.b * k, &self.bi * k)
    }

    /// Display-only `(re, im)` approximation.
    pub fn approx(&self) -> (f64, f64) {
        let s2 = std::f64::consts::SQRT_2;
        (
            self.a.to_f64() + self.b.to_f64() * s2,
            self.ai.to_f64() + self.bi.to_f64() * s2,
        )
    }

    /// Decimal rendering of [`approx`](Self::approx), e.g. `0.707107` or
    /// `0.6+0.8i`.
    pub fn approx_string(&self) -> String {
        let (re, im) = self.approx();
        let fmt = |v: f64| {
            let s = format!("{v:.6}");
            let s = s.trim_end_matches('0').trim_end_matches('.');
            if s == "-0" {
                "0".to_string()
            } else {
                s.to_string()
            }
        };
        match (fmt(re).as_str(), fmt(im).as_str()) {
            (r, "0") => r.to_string(),
            ("0", i) => format!("{i}i"),
            (r, i) if i.starts_with('-') => format!("{r}{i}i"),
            (r, i) => format!("{r}+{i}i"),
        }
    }
}

impl From<Rational> for AmplitudeQ2 {
    fn from(a: Rational) -> Self {
        Self::new(a, Rational::zero(), Rational::zero(), Rational::zero())
    }
}

impl From<i64> for AmplitudeQ2 {
    fn from(n: i64) -> Self {
        Self::from(Rational::from(n))
    }
}

// Gaussian-rational product (x + yi)(u + vi).
fn gauss_mul(x: &Rational, y: &Rational, u: &Rational, v: &Rational) -> (Rational, Rational) {
    (x * u - y * v, x * v + y * u)
}

impl Add<&AmplitudeQ2> for &AmplitudeQ2 {
    type Output = AmplitudeQ2;
    fn add(self, rhs: &AmplitudeQ2) -> AmplitudeQ2 {
        AmplitudeQ2::new(
            &self.a + &rhs.a,
            &self.ai + &rhs.ai,
            &self.b + &rhs.b,
            &self.bi + &rhs.bi,
        )
    }
}

impl Sub<&AmplitudeQ2> for &AmplitudeQ2 {
    type Output = AmplitudeQ2;
    fn sub(self, rhs: &AmplitudeQ2) -> AmplitudeQ2 {
        AmplitudeQ2::new(
            &self.a - &rhs.a,
            &self.ai - &rhs.ai,
            &self.b - &rhs.b,
            &self.bi - &rhs.bi,
        )
    }
}

impl Mul<&AmplitudeQ2> for &AmplitudeQ2 {
    type Output = AmplitudeQ2;
    fn mul(self, rhs: &AmplitudeQ2) -> AmplitudeQ2 {
        // (p + q*s2)(r + t*s2) = (pr + 2qt) + (pt + qr)*s2 with p, q, r, t Gaussian.
        let (pr_re, pr_im) = gauss_mul(&self.a, &self.ai, &rhs.a, &rhs.ai);
        let (qt_re, qt_im) = gauss_mul(&self.b, &self.bi, &rhs.b, &rhs.bi);
        let (pt_re, pt_im) = gauss_mul(&self.a, &self.ai, &rhs.b, &rhs.bi);
        let (qr_re, qr_im) = gauss_mul(&self.b, &self.bi, &rhs.a, &rhs.ai);
        let two = Rational::from(2);
        AmplitudeQ2::new(
            pr_re + &two * qt_re,
            pr_im + &two * qt_im,
            pt_re + qr_re,
            pt_im + qr_im,
        )
    }
}

impl Neg for &AmplitudeQ2 {
    type Output = AmplitudeQ2;
    fn neg(self) -> AmplitudeQ2 {
        AmplitudeQ2::new(-&self.a, -&self.ai, -&self.b, -&self.bi)
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<AmplitudeQ2> for AmplitudeQ2 {
            type Output = AmplitudeQ2;
            fn $method(self, rhs: AmplitudeQ2) -> AmplitudeQ2 {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&AmplitudeQ2> for AmplitudeQ2 {
            type Output = AmplitudeQ2;
            fn $method(self, rhs: &AmplitudeQ2) -> AmplitudeQ2 {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for AmplitudeQ2 {
    type Output = AmplitudeQ2;
    fn neg(self) -> AmplitudeQ2 {
        -&self
    }
}

impl std::iter::Sum for AmplitudeQ2 {
    fn sum<I: Iterator<Item = AmplitudeQ2>>(iter: I) -> AmplitudeQ2 {
        iter.fold(AmplitudeQ2::zero(), |acc, v| acc + v)
    }
}

impl fmt::Display for AmplitudeQ2 {
    /// Canonical literal: nonzero terms in the order `a`, `ai i`, `b s2`,
    /// `bi i s2`, e.g. `3/5+4/5i` or `-1/2s2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [
            (&self.a, ""),
            (&self.ai, "i"),
            (&self.b, "s2"),
            (&self.bi, "is2"),
        ];
        let mut first = true;
        for (coeff, suffix) in terms {
            if coeff.is_zero() {
                continue;
            }
            if first {
                write!(f, "{coeff}{suffix}")?;
                first = false;
            } else if coeff.is_negative() {
                write!(f, "-{}{suffix}", coeff.abs())?;
            } else {
                write!(f, "+{coeff}{suffix}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AmplitudeQ2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AmplitudeQ2({self})")
    }
}

impl FromStr for AmplitudeQ2 {
    type Err = Error;

    /// Parses `term { ("+"|"-") term }` with `term := rational ["i"] ["s2"]`.
    /// Whitespace is ignored and repeated terms accumulate.
    fn from_str(input: &str) -> Result<Self> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: String| Error::Parse {
            kind: "amplitude",
            input: input.to_string(),
            reason,
        };
        let mut rest = compact.as_str();
        let mut value = AmplitudeQ2::zero();
        let mut sign_negative = false;
        let mut first = true;
        loop {
            if !first {
                match rest.as_bytes().first() {
                    Some(b'+') => sign_negative = false,
                    Some(b'-') => sign_negative = true,
                    Some(_) => return Err(err(format!("expected '+' or '-' before {rest:?}"))),
                    None => break,
                }
                rest = &rest[1..];
            }
            first = false;
            let (coeff, used) = match scan_rational(rest)? {
                Some(found) => found,
                None => return Err(err(format!("expected a rational at {rest:?}"))),
            };
            rest = &rest[used..];
            let imaginary = rest.starts_with('i');
            if imaginary {
                rest = &rest[1..];
            }
            let root_two = rest.starts_with("s2");
            if root_two {
                rest = &rest[2..];
            }
            let coeff = if sign_negative { -coeff } else { coeff };
            let slot = match (imaginary, root_two) {
                (false, false) => &mut value.a,
                (true, false) => &mut value.ai,
                (false, true) => &mut value.b,
                (true, true) => &mut value.bi,
            };
            *slot = &*slot + coeff;
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn amp(s: &str) -> AmplitudeQ2 {
        s.parse().unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(
            AmplitudeQ2::sqrt2() * AmplitudeQ2::sqrt2(),
            AmplitudeQ2::from(2)
        );
        let h = AmplitudeQ2::inv_sqrt2();
        assert_eq!(&h * &h, AmplitudeQ2::from(q(1, 2)));
        assert_eq!(&AmplitudeQ2::i() * &AmplitudeQ2::i(), AmplitudeQ2::from(-1));
        let v = AmplitudeQ2::new(q(1, 2), q(-1, 3), q(0, 1), q(0, 1));
        assert_eq!(
            v.conj(),
            AmplitudeQ2::new(q(1, 2), q(1, 3), q(0, 1), q(0, 1))
        );
    }

    #[test]
    fn norm_sq_examples() {
        // 9/25 + 16/25 = 1
        assert_eq!(amp("3/5+4/5i").norm_sq(), AmplitudeQ2::one());
        assert_eq!(amp("1/2s2").norm_sq(), AmplitudeQ2::from(q(1, 2)));
        assert_eq!(AmplitudeQ2::zero().norm_sq(), AmplitudeQ2::zero());
        // |1 + s2|^2 = 3 + 2 s2 keeps a sqrt(2) part
        assert_eq!(amp("1+1s2").norm_sq(), amp("3+2s2"));
    }

    #[test]
    fn literal_format_and_parse() {
        assert_eq!(amp("1/2s2"), AmplitudeQ2::inv_sqrt2());
        assert_eq!(
            amp("3/5+4/5i"),
            AmplitudeQ2::new(q(3, 5), q(4, 5), q(0, 1), q(0, 1))
        );
        assert_eq!(amp("-1/2is2").bi(), &q(-1, 2));
        assert_eq!(amp("1 - 2 + 1i").to_string(), "-1+1i");
        assert_eq!(AmplitudeQ2::zero().to_string(), "0");
        assert_eq!(amp("0+0s2").to_string(), "0");
        assert_eq!(amp("1/2-3/4i+1s2-5is2").to_string(), "1/2-3/4i+1s2-5is2");
        assert_eq!(amp("1+-1i"), amp("1-1i"));
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", "i", "s2", "1/0", "1*2", "1+", "1.5", "1i2", "1ss2"] {
            assert!(bad.parse::<AmplitudeQ2>().is_err(), "{bad:?} parsed");
        }
    }

    #[test]
    fn approximations_are_display_only() {
        assert_eq!(AmplitudeQ2::inv_sqrt2().approx_string(), "0.707107");
        assert_eq!(amp("3/5+4/5i").approx_string(), "0.6+0.8i");
        assert_eq!(amp("-1i").approx_string(), "-1i");
        assert_eq!(AmplitudeQ2::zero().approx_string(), "0");
    }
}
