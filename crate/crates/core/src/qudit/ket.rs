use crate::error::{Error, Result};
use crate::exactnum::{AmplitudeQ2, Rational};
use crate::polyring::{lagrange_component, Polynomial};

/// Column vector of amplitudes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ket {
    entries: Vec<AmplitudeQ2>,
}

impl Ket {
    pub fn new(entries: Vec<AmplitudeQ2>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Ket { entries })
    }

    pub fn zero(d: usize) -> Result<Self> {
        Self::new(vec![AmplitudeQ2::zero(); d])
    }

    pub fn d(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[AmplitudeQ2] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<AmplitudeQ2> {
        self.entries
    }

    /// Index of the single `1` entry when every other entry is zero.
    pub fn basis_index(&self) -> Option<usize> {
        let mut ones = self
            .entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero());
        match (ones.next(), ones.next()) {
            (Some((i, v)), None) if v.is_one() => Some(i),
            _ => None,
        }
    }

    pub fn scale(&self, k: &AmplitudeQ2) -> Ket {
        Ket {
            entries: self.entries.iter().map(|v| v * k).collect(),
        }
    }

    pub(crate) fn add(&self, rhs: &Ket) -> Result<Ket> {
        check_dims(self.d(), rhs.d())?;
        Ok(Ket {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

/// Row vector, the conjugate transpose of a [`Ket`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bra {
    entries: Vec<AmplitudeQ2>,
}

impl Bra {
    pub fn entries(&self) -> &[AmplitudeQ2] {
        &self.entries
    }

    pub fn d(&self) -> usize {
        self.entries.len()
    }

    /// `<self|ket>`.
    pub fn apply(&self, ket: &Ket) -> Result<AmplitudeQ2> {
        check_dims(self.d(), ket.d())?;
        Ok(self
            .entries
            .iter()
            .zip(ket.entries())
            .map(|(b, k)| b * k)
            .sum())
    }
}

/// Ket whose entries are polynomials in the classical symbol `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicKet {
    entries: Vec<Polynomial>,
}

impl SymbolicKet {
    pub fn d(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn evaluate(&self, at: &Rational) -> Ket {
        Ket {
            entries: self
                .entries
                .iter()
                .map(|p| AmplitudeQ2::from(p.eval(at)))
                .collect(),
        }
    }
}

pub(crate) fn check_dims(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

pub(crate) fn check_level(d: usize, x: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if x >= d {
        return Err(Error::OutOfRange {
            what: "x",
            value: x,
            bound: d,
        });
    }
    Ok(())
}

/// `(l_0(x), ..., l_{d-1}(x))` with `l_k` from [`lagrange_component`].
pub fn symbolic_ket(d: usize) -> Result<SymbolicKet> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let entries = (0..d)
        .map(|k| lagrange_component(d, k))
        .collect::<Result<_>>()?;
    Ok(SymbolicKet { entries })
}

/// Computational basis ket `|x>`, obtained by evaluating the symbolic ket at
/// `x` rather than writing down the unit vector.
pub fn basis_ket(d: usize, x: usize) -> Result<Ket> {
    check_level(d, x)?;
    Ok(symbolic_ket(d)?.evaluate(&Rational::from(x as i64)))
}

pub fn bra_of(ket: &Ket) -> Bra {
    Bra {
        entries: ket.entries.iter().map(AmplitudeQ2::conj).collect(),
    }
}

/// `sum_i conj(l_i) r_i`.
pub fn inner_product(l: &Ket, r: &Ket) -> Result<AmplitudeQ2> {
    bra_of(l).apply(r)
}

/// `|l> (x) |r>`; entry `i * r.d() + j` holds `l_i r_j`.
pub fn tensor_product(l: &Ket, r: &Ket) -> Ket {
    Ket {
        entries: l
            .entries
            .iter()
            .flat_map(|a| r.entries.iter().map(move |b| a * b))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ket(vals: &[i64]) -> Ket {
        Ket::new(vals.iter().map(|&v| AmplitudeQ2::from(v)).collect()).unwrap()
    }

    #[test]
    fn basis_kets() {
        assert_eq!(basis_ket(2, 0).unwrap(), ket(&[1, 0]));
        assert_eq!(basis_ket(3, 1).unwrap(), ket(&[0, 1, 0]));
        assert_eq!(basis_ket(4, 2).unwrap(), ket(&[0, 0, 1, 0]));
        assert_eq!(
            basis_ket(3, 3),
            Err(Error::OutOfRange {
                what: "x",
                value: 3,
                bound: 3
            })
        );
        assert_eq!(basis_ket(0, 0), Err(Error::ZeroDimension));
        assert_eq!(basis_ket(5, 3).unwrap().basis_index(), Some(3));
    }

    #[test]
    fn symbolic_kets() {
        let s2 = symbolic_ket(2).unwrap();
        assert_eq!(s2.entries(), &["1 - x".parse().unwrap(), Polynomial::x()]);
        let s3 = symbolic_ket(3).unwrap();
        let expect: Vec<Polynomial> = ["1/2x^2 - 3/2x + 1", "-x^2 + 2x", "1/2x^2 - 1/2x"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(s3.entries(), &expect[..]);
        assert_eq!(symbolic_ket(1).unwrap().entries(), &[Polynomial::one()]);
        assert_eq!(symbolic_ket(0), Err(Error::ZeroDimension));
    }

    #[test]
    fn bras_and_inner_products() {
        assert_eq!(bra_of(&ket(&[1, 0])).entries(), ket(&[1, 0]).entries());
        let k = Ket::new(vec![AmplitudeQ2::zero(), AmplitudeQ2::i()]).unwrap();
        assert_eq!(bra_of(&k).entries()[1], -AmplitudeQ2::i());
        assert!(bra_of(&ket(&[0, 0, 0]))
            .entries()
            .iter()
            .all(AmplitudeQ2::is_zero));
        assert_eq!(inner_product(&k, &k).unwrap(), AmplitudeQ2::one());
        let b0 = basis_ket(3, 0).unwrap();
        let b1 = basis_ket(3, 1).unwrap();
        let b2 = basis_ket(3, 2).unwrap();
        assert!(inner_product(&b0, &b1).unwrap().is_zero());
        assert!(inner_product(&b2, &b2).unwrap().is_one());
        assert!(inner_product(&b0, &basis_ket(2, 0).unwrap()).is_err());
    }

    #[test]
    fn tensor_products() {
        let b = |d, x| basis_ket(d, x).unwrap();
        assert_eq!(tensor_product(&b(2, 0), &b(2, 0)), ket(&[1, 0, 0, 0]));
        assert_eq!(tensor_product(&b(2, 1), &b(2, 1)), ket(&[0, 0, 0, 1]));
        assert_eq!(tensor_product(&b(2, 0), &b(3, 1)), ket(&[0, 1, 0, 0, 0, 0]));
        // |0>|1> sits at position 1
        assert_eq!(tensor_product(&b(2, 0), &b(2, 1)).basis_index(), Some(1));
    }
}
