use super::ket::{basis_ket, check_dims, check_level, Ket};
use super::matrix::AmpMatrix;
use crate::error::{Error, Result};
use crate::exactnum::{AmplitudeQ2, Rational};
use crate::polyring::{lagrange_component, Polynomial};

/// Rank-one projector `|x><x|` onto a computational basis state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projector {
    x: usize,
    matrix: AmpMatrix,
}

impl Projector {
    pub fn d(&self) -> usize {
        self.matrix.rows()
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn matrix(&self) -> &AmpMatrix {
        &self.matrix
    }

    pub fn trace(&self) -> AmplitudeQ2 {
        self.matrix.trace()
    }

    pub fn is_hermitian(&self) -> bool {
        self.matrix.is_hermitian()
    }

    pub fn is_idempotent(&self) -> bool {
        self.matrix.matmul(&self.matrix).as_ref() == Ok(&self.matrix)
    }
}

/// Diagonal projector with polynomial entries; off-diagonal entries are
/// identically zero and only materialized by [`to_matrix`](Self::to_matrix).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicProjector {
    diagonal: Vec<Polynomial>,
}

impl SymbolicProjector {
    pub fn d(&self) -> usize {
        self.diagonal.len()
    }

    pub fn diagonal(&self) -> &[Polynomial] {
        &self.diagonal
    }

    pub fn trace(&self) -> Polynomial {
        self.diagonal.iter().cloned().sum()
    }

    pub fn to_matrix(&self) -> Vec<Vec<Polynomial>> {
        let d = self.d();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        if i == j {
                            self.diagonal[i].clone()
                        } else {
                            Polynomial::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn evaluate(&self, at: &Rational) -> AmpMatrix {
        let d = self.d();
        AmpMatrix::from_fn(d, d, |i, j| {
            if i == j {
                AmplitudeQ2::from(self.diagonal[i].eval(at))
            } else {
                AmplitudeQ2::zero()
            }
        })
    }
}

/// `|k><b|`: entry `(i, j)` is `k_i * conj(b_j)`.
pub fn outer_product(k: &Ket, b: &Ket) -> Result<AmpMatrix> {
    check_dims(k.d(), b.d())?;
    let (ke, be) = (k.entries(), b.entries());
    Ok(AmpMatrix::from_fn(k.d(), b.d(), |i, j| {
        &ke[i] * &be[j].conj()
    }))
}

pub fn projector(d: usize, x: usize) -> Result<Projector> {
    check_level(d, x)?;
    let ket = basis_ket(d, x)?;
    Ok(Projector {
        x,
        matrix: outer_product(&ket, &ket)?,
    })
}

pub fn symbolic_projector(d: usize) -> Result<SymbolicProjector> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let diagonal = (0..d)
        .map(|k| lagrange_component(d, k))
        .collect::<Result<_>>()?;
    Ok(SymbolicProjector { diagonal })
}

/// `sum_x P(x)` over every basis state of a d-level system.
pub fn completeness_sum(d: usize) -> Result<AmpMatrix> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    (0..d).try_fold(AmpMatrix::zeros(d, d), |acc, x| {
        acc.add(projector(d, x)?.matrix())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(vals: &[i64]) -> AmpMatrix {
        let n = vals.len();
        AmpMatrix::from_fn(n, n, |i, j| {
            if i == j {
                AmplitudeQ2::from(vals[i])
            } else {
                AmplitudeQ2::zero()
            }
        })
    }

    #[test]
    fn outer_products() {
        let b = |d, x| basis_ket(d, x).unwrap();
        assert_eq!(outer_product(&b(3, 1), &b(3, 1)).unwrap(), diag(&[0, 1, 0]));
        assert_eq!(outer_product(&b(2, 0), &b(2, 0)).unwrap(), diag(&[1, 0]));
        let off = outer_product(&b(2, 0), &b(2, 1)).unwrap();
        assert!(off.get(0, 1).is_one());
        assert_eq!(
            off.iter_rows().flatten().filter(|v| !v.is_zero()).count(),
            1
        );
        assert!(outer_product(&b(2, 0), &b(3, 0)).is_err());
    }

    #[test]
    fn numeric_projectors() {
        assert_eq!(projector(2, 1).unwrap().matrix(), &diag(&[0, 1]));
        assert_eq!(projector(3, 2).unwrap().matrix(), &diag(&[0, 0, 1]));
        assert_eq!(projector(4, 0).unwrap().matrix(), &diag(&[1, 0, 0, 0]));
        let p = projector(5, 3).unwrap();
        assert!(p.is_idempotent() && p.is_hermitian() && p.trace().is_one());
        assert!(projector(0, 0).is_err());
        assert!(projector(4, 4).is_err());
    }

    #[test]
    fn symbolic_projectors() {
        let p2 = symbolic_projector(2).unwrap();
        assert_eq!(p2.diagonal(), &["1 - x".parse().unwrap(), Polynomial::x()]);
        let p3 = symbolic_projector(3).unwrap();
        assert_eq!(p3.diagonal()[1], "2x - x^2".parse().unwrap());
        assert_eq!(symbolic_projector(4).unwrap().trace(), Polynomial::one());
        let full = p3.to_matrix();
        assert!(full[0][1].is_zero() && full[2][1].is_zero());
        assert_eq!(p3.evaluate(&Rational::from(2)), diag(&[0, 0, 1]));
    }

    #[test]
    fn completeness() {
        assert!(completeness_sum(4).unwrap().is_identity());
        assert!(completeness_sum(1).unwrap().is_identity());
        assert_eq!(completeness_sum(0), Err(Error::ZeroDimension));
    }
}
