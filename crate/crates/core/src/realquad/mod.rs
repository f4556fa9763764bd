//! Arithmetic of the real quadratic field L = ℚ(√d) and its ring of
//! integers: units, class numbers, prime splitting, residue symbols and
//! quadratic-residue tests modulo prime-ideal powers.
//!
//! The sentinel d = 1 means L = ℚ; every operation specializes (ω = 0,
//! trace and norm are the identity, f(𝔭/p) = 1).

mod classno;
mod elem;
mod residues;
mod splitting;
mod units;

pub use classno::{class_number, is_strict_class_number_one, OLIdeal};
pub use elem::{QuadRat, QuadRingElem};
pub use residues::{is_square_mod_power, residue_symbol, ResidueRing, RingElem};
pub use splitting::{
    residue_field, splitting_type, PrimeIdeal, ResidueField, SplitKind, SplittingReport,
};
pub use units::fundamental_unit;

use crate::arith::is_squarefree;
use crate::error::{Error, Result};

/// The real quadratic field ℚ(√d) for squarefree d > 1, or ℚ itself for the
/// sentinel d = 1. ω = (1+√d)/2 when d ≡ 1 (mod 4), ω = √d otherwise, and
/// ω = 0 in the degenerate case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RealQuadField {
    pub d: i64,
}

impl RealQuadField {
    pub fn new(d: i64) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidInput(format!("d = {d} must be positive")));
        }
        if !is_squarefree(d) {
            return Err(Error::NotSquarefree(d));
        }
        Ok(RealQuadField { d })
    }

    pub fn rationals() -> Self {
        RealQuadField { d: 1 }
    }

    pub fn is_rational(&self) -> bool {
        self.d == 1
    }

    /// Field discriminant: d if d ≡ 1 (mod 4), else 4d. 1 for ℚ.
    pub fn discriminant(&self) -> i64 {
        if self.d == 1 {
            1
        } else if self.d % 4 == 1 {
            self.d
        } else {
            4 * self.d
        }
    }

    /// Trace of ω: 1 when d ≡ 1 (mod 4), else 0.
    pub fn omega_trace(&self) -> i64 {
        if self.d != 1 && self.d % 4 == 1 {
            1
        } else {
            0
        }
    }

    /// Norm of ω: (1−d)/4 when d ≡ 1 (mod 4), −d otherwise, 0 for ℚ.
    pub fn omega_norm(&self) -> i64 {
        if self.d == 1 {
            0
        } else if self.d % 4 == 1 {
            (1 - self.d) / 4
        } else {
            -self.d
        }
    }

    /// Degree over ℚ (1 or 2).
    pub fn degree(&self) -> usize {
        if self.d == 1 {
            1
        } else {
            2
        }
    }
}
