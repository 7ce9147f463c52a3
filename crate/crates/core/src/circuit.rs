//! Exact two-qubit gate layer and the Bell basis.
//!
//! Qubit order follows [`tensor_product`]: the left (high-order) qubit is the
//! CNOT control and the one the Hadamard acts on. The Bell matrix is
//! `CNOT * (H (x) I)`:
//!
//! ```text
//!              | 1 0  1  0 |
//!  1/sqrt(2) * | 0 1  0  1 |
//!              | 0 1  0 -1 |
//!              | 1 0 -1  0 |
//! ```

use crate::error::{Error, Result};
use crate::exactnum::{AmplitudeQ2, Rational};
use crate::qudit::{basis_ket, inner_product, tensor_product, AmpMatrix, Ket};

/// Square exact matrix acting on kets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gate {
    matrix: AmpMatrix,
}

impl Gate {
    pub fn new(matrix: AmpMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                left: matrix.rows(),
                right: matrix.cols(),
            });
        }
        Ok(Gate { matrix })
    }

    pub fn identity(n: usize) -> Self {
        Gate {
            matrix: AmpMatrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &AmpMatrix {
        &self.matrix
    }

    pub fn apply(&self, ket: &Ket) -> Result<Ket> {
        Ket::new(self.matrix.mul_vec(ket.entries())?)
    }

    /// `self * rhs`, i.e. `rhs` acts first.
    pub fn compose(&self, rhs: &Gate) -> Result<Gate> {
        Ok(Gate {
            matrix: self.matrix.matmul(&rhs.matrix)?,
        })
    }

    pub fn adjoint(&self) -> Gate {
        Gate {
            matrix: self.matrix.adjoint(),
        }
    }

    /// Exact check of `G * G^dagger == I`.
    pub fn is_unitary(&self) -> bool {
        self.matrix
            .matmul(&self.matrix.adjoint())
            .is_ok_and(|m| m.is_identity())
    }
}

fn gate_from_ints(scale: &AmplitudeQ2, rows: &[&[i64]]) -> Gate {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|&v| scale * &AmplitudeQ2::from(v)).collect())
        .collect();
    Gate::new(AmpMatrix::from_rows(rows).expect("rectangular literal")).expect("square literal")
}

/// `(1/sqrt 2) [[1, 1], [1, -1]]`.
pub fn hadamard() -> Gate {
    gate_from_ints(&AmplitudeQ2::inv_sqrt2(), &[&[1, 1], &[1, -1]])
}

/// Controlled NOT with the high-order qubit as control: swaps basis
/// positions 2 and 3.
pub fn cnot() -> Gate {
    gate_from_ints(
        &AmplitudeQ2::one(),
        &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]],
    )
}

/// Kronecker product, index order matching [`tensor_product`] of kets.
pub fn gate_tensor(l: &Gate, r: &Gate) -> Gate {
    Gate {
        matrix: l.matrix.kron(&r.matrix),
    }
}

pub fn bell_matrix() -> Gate {
    cnot()
        .compose(&gate_tensor(&hadamard(), &Gate::identity(2)))
        .expect("4x4 gates compose")
}

fn check_bit(what: &'static str, value: u64) -> Result<()> {
    if value > 1 {
        return Err(Error::NotABit { what, value });
    }
    Ok(())
}

/// One of the four Bell states, prepared from `|x>|y>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellState {
    x: u8,
    y: u8,
    ket: Ket,
}

impl BellState {
    pub fn x(&self) -> u8 {
        self.x
    }

    pub fn y(&self) -> u8 {
        self.y
    }

    pub fn ket(&self) -> &Ket {
        &self.ket
    }

    /// Conventional name: `B00 = Phi+`, `B01 = Psi+`, `B10 = Phi-`,
    /// `B11 = Psi-`.
    pub fn name(&self) -> &'static str {
        match (self.x, self.y) {
            (0, 0) => "Phi+",
            (0, 1) => "Psi+",
            (1, 0) => "Phi-",
            _ => "Psi-",
        }
    }

    pub fn is_unit(&self) -> bool {
        inner_product(&self.ket, &self.ket).is_ok_and(|n| n.is_one())
    }

    pub fn matches_closed_form(&self) -> bool {
        bell_closed_form(u64::from(self.x), u64::from(self.y)).is_ok_and(|k| k == self.ket)
    }
}

/// Bell state via the gate path: `bell_matrix() * (|x> (x) |y>)`.
pub fn bell_state(x: u64, y: u64) -> Result<BellState> {
    check_bit("x", x)?;
    check_bit("y", y)?;
    let input = tensor_product(&basis_ket(2, x as usize)?, &basis_ket(2, y as usize)?);
    Ok(BellState {
        x: x as u8,
        y: y as u8,
        ket: bell_matrix().apply(&input)?,
    })
}

/// Bell state from the closed form
/// `(1/sqrt 2) (1-y, y, y-2xy, (1-2x)(1-y))`, with no gate arithmetic.
pub fn bell_closed_form(x: u64, y: u64) -> Result<Ket> {
    check_bit("x", x)?;
    check_bit("y", y)?;
    let x = Rational::from(x as i64);
    let y = Rational::from(y as i64);
    let one = Rational::one();
    let two = Rational::from(2);
    let xy = &x * &y;
    let raw = [
        &one - &y,
        y.clone(),
        &y - &two * &xy,
        (&one - &two * &x) * (&one - &y),
    ];
    let h = AmplitudeQ2::inv_sqrt2();
    Ket::new(raw.into_iter().map(|v| h.scale(&v)).collect())
}
