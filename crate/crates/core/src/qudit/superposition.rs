use super::ket::{basis_ket, Ket};
use crate::error::{Error, Result};
use crate::exactnum::AmplitudeQ2;

/// `sum_x a_x |x>` stored as its amplitudes. Never normalized implicitly:
/// `Q(i, sqrt 2)` has no square root for most norms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Superposition {
    amplitudes: Vec<AmplitudeQ2>,
}

impl Superposition {
    pub fn d(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[AmplitudeQ2] {
        &self.amplitudes
    }

    /// `sum_x |a_x|^2`.
    pub fn norm_sq(&self) -> AmplitudeQ2 {
        self.amplitudes.iter().map(AmplitudeQ2::norm_sq).sum()
    }

    pub fn is_normalized(&self) -> bool {
        self.norm_sq().is_one()
    }

    /// Expands the amplitudes in the basis kets.
    pub fn to_ket(&self) -> Result<Ket> {
        let d = self.d();
        self.amplitudes
            .iter()
            .enumerate()
            .try_fold(Ket::zero(d)?, |acc, (x, a)| {
                acc.add(&basis_ket(d, x)?.scale(a))
            })
    }
}

pub fn superpose(d: usize, amps: Vec<AmplitudeQ2>) -> Result<Superposition> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if amps.len() != d {
        return Err(Error::DimensionMismatch {
            left: d,
            right: amps.len(),
        });
    }
    Ok(Superposition { amplitudes: amps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn amps(lits: &[&str]) -> Vec<AmplitudeQ2> {
        lits.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn normalization_queries() {
        assert!(superpose(2, amps(&["3/5", "4/5"])).unwrap().is_normalized());
        let unnormalized = superpose(2, amps(&["1", "1"])).unwrap();
        assert!(!unnormalized.is_normalized());
        assert_eq!(unnormalized.norm_sq(), AmplitudeQ2::from(2));
        assert!(superpose(2, amps(&["1/2s2", "1/2s2"]))
            .unwrap()
            .is_normalized());
        assert!(superpose(3, amps(&["1/2", "1/2i", "1/2s2"]))
            .unwrap()
            .is_normalized());
    }

    #[test]
    fn length_must_match() {
        assert_eq!(
            superpose(3, amps(&["1", "0"])),
            Err(Error::DimensionMismatch { left: 3, right: 2 })
        );
        assert_eq!(superpose(0, vec![]), Err(Error::ZeroDimension));
    }

    #[test]
    fn expands_in_basis() {
        let s = superpose(3, amps(&["1/2", "0", "-1/2i"])).unwrap();
        assert_eq!(s.to_ket().unwrap().entries(), s.amplitudes());
    }
}
