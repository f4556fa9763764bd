use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RealQuadField;
use crate::error::{Error, Result};

/// Element x + y·ω of the ring of integers of L. Conjugate, trace and norm
/// are closed form in (x, y, d). For the degenerate field y is forced to 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadRingElem {
    pub field: RealQuadField,
    pub x: BigInt,
    pub y: BigInt,
}

impl QuadRingElem {
    pub fn new(field: RealQuadField, x: BigInt, y: BigInt) -> Self {
        if field.is_rational() {
            assert!(y.is_zero(), "coordinates over ℚ have no ω part");
        }
        QuadRingElem { field, x, y }
    }

    pub fn from_i64(field: RealQuadField, x: i64, y: i64) -> Self {
        Self::new(field, BigInt::from(x), BigInt::from(y))
    }

    pub fn integer(field: RealQuadField, x: i64) -> Self {
        Self::new(field, BigInt::from(x), BigInt::zero())
    }

    pub fn zero(field: RealQuadField) -> Self {
        Self::integer(field, 0)
    }

    pub fn one(field: RealQuadField) -> Self {
        Self::integer(field, 1)
    }

    pub fn omega(field: RealQuadField) -> Self {
        if field.is_rational() {
            Self::zero(field)
        } else {
            Self::from_i64(field, 0, 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_rational_integer(&self) -> bool {
        self.y.is_zero()
    }

    /// Galois conjugate: ω̄ = Tr(ω) − ω.
    pub fn conjugate(&self) -> QuadRingElem {
        let t = BigInt::from(self.field.omega_trace());
        QuadRingElem {
            field: self.field,
            x: &self.x + &t * &self.y,
            y: -self.y.clone(),
        }
    }

    /// Tr_{L/ℚ}; the identity for L = ℚ.
    pub fn trace(&self) -> BigInt {
        if self.field.is_rational() {
            self.x.clone()
        } else {
            BigInt::from(2) * &self.x + BigInt::from(self.field.omega_trace()) * &self.y
        }
    }

    /// Norm_{L/ℚ}; the identity for L = ℚ.
    pub fn norm(&self) -> BigInt {
        if self.field.is_rational() {
            self.x.clone()
        } else {
            let t = BigInt::from(self.field.omega_trace());
            let n = BigInt::from(self.field.omega_norm());
            &self.x * &self.x + &self.x * &self.y * t + &self.y * &self.y * n
        }
    }

    pub fn add(&self, other: &QuadRingElem) -> QuadRingElem {
        assert_eq!(self.field, other.field);
        QuadRingElem {
            field: self.field,
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    pub fn sub(&self, other: &QuadRingElem) -> QuadRingElem {
        assert_eq!(self.field, other.field);
        QuadRingElem {
            field: self.field,
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn neg(&self) -> QuadRingElem {
        QuadRingElem {
            field: self.field,
            x: -self.x.clone(),
            y: -self.y.clone(),
        }
    }

    /// Product, using ω² = Tr(ω)·ω − N(ω).
    pub fn mul(&self, other: &QuadRingElem) -> QuadRingElem {
        assert_eq!(self.field, other.field);
        let t = BigInt::from(self.field.omega_trace());
        let n = BigInt::from(self.field.omega_norm());
        let yy = &self.y * &other.y;
        QuadRingElem {
            field: self.field,
            x: &self.x * &other.x - &yy * n,
            y: &self.x * &other.y + &self.y * &other.x + yy * t,
        }
    }

    pub fn mul_int(&self, c: &BigInt) -> QuadRingElem {
        QuadRingElem {
            field: self.field,
            x: &self.x * c,
            y: &self.y * c,
        }
    }

    /// Sign of the real embedding x + y·σ(ω), decided exactly.
    /// `second` selects σ(ω) = (1−√d)/2 (resp. −√d) instead of the positive
    /// embedding.
    pub fn embedding_sign(&self, second: bool) -> i32 {
        if self.field.is_rational() {
            return sign_big(&self.x);
        }
        // Write the embedding as (a + b√d)/2 with integers a, b.
        let d = BigInt::from(self.field.d);
        let (a, b) = if self.field.d % 4 == 1 {
            // ω = (1 ± √d)/2
            (BigInt::from(2) * &self.x + &self.y, self.y.clone())
        } else {
            (BigInt::from(2) * &self.x, BigInt::from(2) * &self.y)
        };
        let b = if second { -b } else { b };
        // sign of a + b√d
        if b.is_zero() {
            return sign_big(&a);
        }
        if b.is_positive() {
            if !a.is_negative() {
                1
            } else {
                sign_big(&(&b * &b * &d - &a * &a))
            }
        } else if !a.is_positive() {
            -1
        } else {
            sign_big(&(&a * &a - &b * &b * &d))
        }
    }

    /// Both real embeddings strictly positive (just x > 0 over ℚ).
    pub fn is_totally_positive(&self) -> bool {
        self.embedding_sign(false) > 0 && self.embedding_sign(true) > 0
    }

    pub fn to_rational_coeffs(&self) -> QuadRat {
        QuadRat {
            field: self.field,
            x: BigRational::from_integer(self.x.clone()),
            y: BigRational::from_integer(self.y.clone()),
        }
    }
}

fn sign_big(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl std::fmt::Debug for QuadRingElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

impl std::fmt::Display for QuadRingElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.y.is_zero() {
            write!(f, "{}", self.x)
        } else {
            write!(f, "{}+{}w", self.x, self.y)
        }
    }
}

/// Element of L with rational coordinates x + y·ω; the field of fractions
/// arithmetic needed inside quaternion algebras over L.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadRat {
    pub field: RealQuadField,
    pub x: BigRational,
    pub y: BigRational,
}

impl QuadRat {
    pub fn zero(field: RealQuadField) -> Self {
        QuadRat {
            field,
            x: BigRational::zero(),
            y: BigRational::zero(),
        }
    }

    pub fn one(field: RealQuadField) -> Self {
        QuadRat {
            field,
            x: BigRational::one(),
            y: BigRational::zero(),
        }
    }

    pub fn from_rational(field: RealQuadField, x: BigRational) -> Self {
        QuadRat {
            field,
            x,
            y: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn add(&self, o: &QuadRat) -> QuadRat {
        assert_eq!(self.field, o.field);
        QuadRat {
            field: self.field,
            x: &self.x + &o.x,
            y: &self.y + &o.y,
        }
    }

    pub fn sub(&self, o: &QuadRat) -> QuadRat {
        assert_eq!(self.field, o.field);
        QuadRat {
            field: self.field,
            x: &self.x - &o.x,
            y: &self.y - &o.y,
        }
    }

    pub fn neg(&self) -> QuadRat {
        QuadRat {
            field: self.field,
            x: -self.x.clone(),
            y: -self.y.clone(),
        }
    }

    pub fn mul(&self, o: &QuadRat) -> QuadRat {
        assert_eq!(self.field, o.field);
        let t = BigRational::from_integer(BigInt::from(self.field.omega_trace()));
        let n = BigRational::from_integer(BigInt::from(self.field.omega_norm()));
        let yy = &self.y * &o.y;
        QuadRat {
            field: self.field,
            x: &self.x * &o.x - &yy * n,
            y: &self.x * &o.y + &self.y * &o.x + yy * t,
        }
    }

    pub fn conjugate(&self) -> QuadRat {
        let t = BigRational::from_integer(BigInt::from(self.field.omega_trace()));
        QuadRat {
            field: self.field,
            x: &self.x + t * &self.y,
            y: -self.y.clone(),
        }
    }

    pub fn trace(&self) -> BigRational {
        if self.field.is_rational() {
            self.x.clone()
        } else {
            BigRational::from_integer(BigInt::from(2)) * &self.x
                + BigRational::from_integer(BigInt::from(self.field.omega_trace())) * &self.y
        }
    }

    pub fn norm(&self) -> BigRational {
        if self.field.is_rational() {
            self.x.clone()
        } else {
            self.mul(&self.conjugate()).x
        }
    }

    pub fn inverse(&self) -> Result<QuadRat> {
        if self.is_zero() {
            return Err(Error::Degenerate("division by zero in L".into()));
        }
        if self.field.is_rational() {
            return Ok(QuadRat {
                field: self.field,
                x: self.x.recip(),
                y: BigRational::zero(),
            });
        }
        let conj = self.conjugate();
        let n = self.mul(&conj).x; // norm as rational
        Ok(QuadRat {
            field: self.field,
            x: &conj.x / &n,
            y: &conj.y / &n,
        })
    }

    pub fn scale(&self, c: &BigRational) -> QuadRat {
        QuadRat {
            field: self.field,
            x: &self.x * c,
            y: &self.y * c,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    pub fn to_ring_elem(&self) -> Result<QuadRingElem> {
        if !self.is_integral() {
            return Err(Error::Invariant(format!(
                "element {}+{}w is not integral",
                self.x, self.y
            )));
        }
        Ok(QuadRingElem {
            field: self.field,
            x: self.x.to_integer(),
            y: self.y.to_integer(),
        })
    }
}

impl std::fmt::Debug for QuadRat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.y.is_zero() {
            write!(f, "{}", self.x)
        } else {
            write!(f, "{}+{}w", self.x, self.y)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> RealQuadField {
        RealQuadField::new(5).unwrap()
    }

    #[test]
    fn trace_and_norm() {
        let w = QuadRingElem::omega(f5());
        assert_eq!(w.trace(), BigInt::one());
        assert_eq!(w.norm(), BigInt::from(-1));
        // ω² = ω + 1 in ℚ(√5)
        let w2 = w.mul(&w);
        assert_eq!(w2, QuadRingElem::from_i64(f5(), 1, 1));
    }

    #[test]
    fn conjugation_involutive_and_multiplicative() {
        let a = QuadRingElem::from_i64(f5(), 3, -2);
        let b = QuadRingElem::from_i64(f5(), -1, 4);
        assert_eq!(a.conjugate().conjugate(), a);
        assert_eq!(a.mul(&b).conjugate(), a.conjugate().mul(&b.conjugate()));
        assert_eq!(a.mul(&a.conjugate()).x, a.norm());
    }

    #[test]
    fn total_positivity() {
        // √5 = 2ω − 1 has embeddings ±√5.
        let sqrt5 = QuadRingElem::from_i64(f5(), -1, 2);
        assert!(!sqrt5.is_totally_positive());
        // 3 + √5 = 2 + 2ω > 0 in both embeddings (9 > 5).
        let e = QuadRingElem::from_i64(f5(), 2, 2);
        assert!(e.is_totally_positive());
        assert!(QuadRingElem::one(f5()).is_totally_positive());
        let f2 = RealQuadField::new(2).unwrap();
        // 1 + √2 is positive, 1 − √2 negative.
        assert!(!QuadRingElem::from_i64(f2, 1, -1).is_totally_positive());
        assert!(QuadRingElem::from_i64(f2, 2, 1).is_totally_positive());
    }

    #[test]
    fn rational_field_specializes() {
        let q = RealQuadField::rationals();
        let a = QuadRingElem::integer(q, -7);
        assert_eq!(a.trace(), BigInt::from(-7));
        assert_eq!(a.norm(), BigInt::from(-7));
        assert!(!a.is_totally_positive());
        assert_eq!(a.conjugate(), a);
    }

    #[test]
    fn quadrat_inverse() {
        let a = QuadRat {
            field: f5(),
            x: BigRational::new(BigInt::from(3), BigInt::from(2)),
            y: BigRational::from_integer(BigInt::from(-1)),
        };
        let ainv = a.inverse().unwrap();
        assert_eq!(a.mul(&ainv), QuadRat::one(f5()));
    }
}
