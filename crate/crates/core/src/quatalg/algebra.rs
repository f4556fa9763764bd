use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{hilbert_symbol, Place};

/// The rational quaternion algebra with i² = a, j² = b, ij = −ji, definite
/// (a, b < 0), ramified exactly at {p, ∞}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuatAlgebra {
    pub a: i64,
    pub b: i64,
    pub p: i64,
}

impl QuatAlgebra {
    pub fn new(a: i64, b: i64, p: i64) -> Result<Self> {
        if a >= 0 || b >= 0 {
            return Err(Error::InvalidInput(format!(
                "algebra ({a}, {b}) is not definite"
            )));
        }
        Ok(QuatAlgebra { a, b, p })
    }

    /// Certify the ramified places: (a, b)_v = −1 exactly for v ∈ {p, ∞} and
    /// +1 at all other finite places up to `check_up_to` plus the prime
    /// divisors of a·b.
    pub fn certify_ramification(&self, check_up_to: i64) -> Result<()> {
        let ra = BigRational::from_integer(BigInt::from(self.a));
        let rb = BigRational::from_integer(BigInt::from(self.b));
        if hilbert_symbol(&ra, &rb, Place::Infinity)? != -1 {
            return Err(Error::Invariant("algebra split at ∞".into()));
        }
        let mut primes = crate::arith::primes_up_to(check_up_to.max(self.p));
        for (q, _) in crate::arith::factor(&BigInt::from(self.a * self.b)) {
            let q: i64 = q.to_string().parse().unwrap();
            if !primes.contains(&q) {
                primes.push(q);
            }
        }
        for q in primes {
            let sym = hilbert_symbol(&ra, &rb, Place::Prime(q))?;
            let expected = if q == self.p { -1 } else { 1 };
            if sym != expected {
                return Err(Error::Invariant(format!(
                    "Hilbert symbol at {q} is {sym}, expected {expected}"
                )));
            }
        }
        Ok(())
    }
}

/// Element t + x·i + y·j + z·ij with exact rational coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct QuatElem {
    pub alg: QuatAlgebra,
    pub t: BigRational,
    pub x: BigRational,
    pub y: BigRational,
    pub z: BigRational,
}

impl QuatElem {
    pub fn new(
        alg: QuatAlgebra,
        t: BigRational,
        x: BigRational,
        y: BigRational,
        z: BigRational,
    ) -> Self {
        QuatElem { alg, t, x, y, z }
    }

    pub fn from_i64(alg: QuatAlgebra, coords: [i64; 4]) -> Self {
        let r = |v: i64| BigRational::from_integer(BigInt::from(v));
        QuatElem::new(alg, r(coords[0]), r(coords[1]), r(coords[2]), r(coords[3]))
    }

    /// Coordinates scaled by `den`, e.g. `[1,1,1,1]/2` for the Hurwitz unit.
    pub fn from_i64_div(alg: QuatAlgebra, coords: [i64; 4], den: i64) -> Self {
        let r = |v: i64| BigRational::new(BigInt::from(v), BigInt::from(den));
        QuatElem::new(alg, r(coords[0]), r(coords[1]), r(coords[2]), r(coords[3]))
    }

    pub fn zero(alg: QuatAlgebra) -> Self {
        Self::from_i64(alg, [0, 0, 0, 0])
    }

    pub fn one(alg: QuatAlgebra) -> Self {
        Self::from_i64(alg, [1, 0, 0, 0])
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn coords(&self) -> [BigRational; 4] {
        [
            self.t.clone(),
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
        ]
    }

    pub fn add(&self, o: &QuatElem) -> QuatElem {
        assert_eq!(self.alg, o.alg);
        QuatElem::new(
            self.alg,
            &self.t + &o.t,
            &self.x + &o.x,
            &self.y + &o.y,
            &self.z + &o.z,
        )
    }

    pub fn sub(&self, o: &QuatElem) -> QuatElem {
        assert_eq!(self.alg, o.alg);
        QuatElem::new(
            self.alg,
            &self.t - &o.t,
            &self.x - &o.x,
            &self.y - &o.y,
            &self.z - &o.z,
        )
    }

    pub fn neg(&self) -> QuatElem {
        QuatElem::new(
            self.alg,
            -self.t.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> QuatElem {
        QuatElem::new(self.alg, &self.t * c, &self.x * c, &self.y * c, &self.z * c)
    }

    pub fn mul(&self, o: &QuatElem) -> QuatElem {
        assert_eq!(self.alg, o.alg);
        let a = BigRational::from_integer(BigInt::from(self.alg.a));
        let b = BigRational::from_integer(BigInt::from(self.alg.b));
        let ab = &a * &b;
        let (t1, x1, y1, z1) = (&self.t, &self.x, &self.y, &self.z);
        let (t2, x2, y2, z2) = (&o.t, &o.x, &o.y, &o.z);
        QuatElem::new(
            self.alg,
            t1 * t2 + &a * x1 * x2 + &b * y1 * y2 - &ab * z1 * z2,
            t1 * x2 + x1 * t2 - &b * y1 * z2 + &b * z1 * y2,
            t1 * y2 + y1 * t2 + &a * x1 * z2 - &a * z1 * x2,
            t1 * z2 + z1 * t2 + x1 * y2 - y1 * x2,
        )
    }

    /// Canonical involution x̄ = Trd(x) − x.
    pub fn conjugate(&self) -> QuatElem {
        QuatElem::new(
            self.alg,
            self.t.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }

    pub fn trd(&self) -> BigRational {
        &self.t + &self.t
    }

    /// Reduced norm t² − a·x² − b·y² + a·b·z²; positive definite.
    pub fn nrd(&self) -> BigRational {
        let a = BigRational::from_integer(BigInt::from(self.alg.a));
        let b = BigRational::from_integer(BigInt::from(self.alg.b));
        &self.t * &self.t - &a * &self.x * &self.x - &b * &self.y * &self.y
            + a * b * &self.z * &self.z
    }

    /// Polar form ⟨x, y⟩ with ⟨x, x⟩ = Nrd(x); Trd(x·ȳ) = 2⟨x, y⟩.
    pub fn nrd_pairing(&self, o: &QuatElem) -> BigRational {
        let a = BigRational::from_integer(BigInt::from(self.alg.a));
        let b = BigRational::from_integer(BigInt::from(self.alg.b));
        &self.t * &o.t - &a * &self.x * &o.x - &b * &self.y * &o.y + a * b * &self.z * &o.z
    }

    pub fn inverse(&self) -> Result<QuatElem> {
        let n = self.nrd();
        if n.is_zero() {
            return Err(Error::Degenerate("inverse of zero quaternion".into()));
        }
        Ok(self.conjugate().scale(&n.recip()))
    }
}

impl std::fmt::Debug for QuatElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({} + {}i + {}j + {}k)", self.t, self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> QuatAlgebra {
        QuatAlgebra::new(-1, -1, 2).unwrap()
    }

    #[test]
    fn multiplication_table() {
        let alg = b2();
        let i = QuatElem::from_i64(alg, [0, 1, 0, 0]);
        let j = QuatElem::from_i64(alg, [0, 0, 1, 0]);
        let k = QuatElem::from_i64(alg, [0, 0, 0, 1]);
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(i.mul(&i), QuatElem::from_i64(alg, [-1, 0, 0, 0]));
        assert_eq!(k.mul(&k), QuatElem::from_i64(alg, [-1, 0, 0, 0]));
        assert_eq!(i.mul(&k), j.neg());
        assert_eq!(k.mul(&i), j);
    }

    #[test]
    fn norm_multiplicative() {
        for alg in [b2(), QuatAlgebra::new(-2, -5, 5).unwrap(), QuatAlgebra::new(-1, -3, 3).unwrap()] {
            let xs = [
                QuatElem::from_i64(alg, [1, 2, -1, 3]),
                QuatElem::from_i64_div(alg, [1, -3, 5, 7], 2),
                QuatElem::from_i64(alg, [0, 1, 1, 1]),
            ];
            for u in &xs {
                for v in &xs {
                    assert_eq!(u.mul(v).nrd(), u.nrd() * v.nrd());
                }
            }
        }
    }

    #[test]
    fn conjugation_antihomomorphism() {
        let alg = b2();
        let u = QuatElem::from_i64(alg, [1, 2, 3, 4]);
        let v = QuatElem::from_i64(alg, [-2, 0, 1, 5]);
        assert_eq!(u.mul(&v).conjugate(), v.conjugate().mul(&u.conjugate()));
        assert_eq!(u.add(&u.conjugate()).t, u.trd());
        assert_eq!(u.mul(&u.conjugate()).t, u.nrd());
        assert!(u.mul(&u.conjugate()).x.is_zero());
    }

    #[test]
    fn ramification_certificates() {
        QuatAlgebra::new(-1, -1, 2).unwrap().certify_ramification(50).unwrap();
        QuatAlgebra::new(-1, -3, 3).unwrap().certify_ramification(50).unwrap();
        QuatAlgebra::new(-2, -5, 5).unwrap().certify_ramification(50).unwrap();
        // (−1, −1) is ramified at 2, not at 3.
        assert!(QuatAlgebra::new(-1, -1, 3)
            .unwrap()
            .certify_ramification(10)
            .is_err());
    }

    #[test]
    fn definiteness_enforced() {
        assert!(QuatAlgebra::new(1, -1, 2).is_err());
        let alg = b2();
        let u = QuatElem::from_i64_div(alg, [1, 1, 1, 1], 2);
        assert_eq!(u.nrd(), BigRational::one());
        assert!(u.nrd().is_positive());
    }
}
