use num_bigint::BigInt;
use num_integer::Integer;

use super::splitting::lift_omega_root;
use super::{PrimeIdeal, QuadRingElem};
use crate::error::{Error, Result};

/// Guard on |𝒪_L/𝔭^k| for full-ring enumerations.
pub const RESIDUE_RING_BOUND: u64 = 1 << 26;

/// The finite ring 𝒪_L/𝔭^k for an unramified prime 𝔭 (or L = ℚ), with
/// element encoding small enough for exhaustive scans.
///
/// - f = 1 (split or rational): the ring is ℤ/p^k via ω ↦ Hensel-lifted root.
/// - f = 2 (inert): pairs a + b·ω̂ with a, b ∈ ℤ/p^k and
///   ω̂² = Tr(ω)·ω̂ − N(ω).
#[derive(Clone, Debug)]
pub struct ResidueRing {
    pub p: u64,
    pub k: u32,
    pub f: u32,
    /// p^k.
    pub pk: u64,
    /// ω image for f = 1 (0 for L = ℚ).
    omega_root: u64,
    /// (Tr(ω) mod p^k, −N(ω) mod p^k) for f = 2.
    omega_poly: (u64, u64),
}

/// Ring element: a single residue for f = 1, a pair (a, b) for f = 2 with
/// b = 0 in the f = 1 case.
pub type RingElem = (u64, u64);

impl ResidueRing {
    pub fn new(ideal: &PrimeIdeal, k: u32) -> Result<ResidueRing> {
        if ideal.is_ramified() {
            return Err(Error::Ramified(format!(
                "residue rings are built for unramified primes only, got {}",
                ideal.generator_desc()
            )));
        }
        let p = ideal.p as u64;
        let size_log = ideal.f * k;
        let size = (p as u128).checked_pow(size_log).ok_or_else(|| {
            Error::BoundExceeded("residue ring size overflows".into())
        })?;
        if size > RESIDUE_RING_BOUND as u128 {
            return Err(Error::BoundExceeded(format!(
                "residue ring of size {size} above guard {RESIDUE_RING_BOUND}"
            )));
        }
        let pk = p.pow(k);
        let field = ideal.field;
        let omega_root = if field.is_rational() {
            0
        } else if ideal.f == 1 {
            let r = lift_omega_root(field, ideal.p, ideal.omega_root.unwrap(), k);
            big_to_u64_mod(&r, pk)
        } else {
            0
        };
        let t = field.omega_trace().rem_euclid(pk as i64) as u64;
        let negn = (-field.omega_norm()).rem_euclid(pk as i64) as u64;
        Ok(ResidueRing {
            p,
            k,
            f: ideal.f,
            pk,
            omega_root,
            omega_poly: (t, negn),
        })
    }

    pub fn size(&self) -> u64 {
        if self.f == 2 {
            self.pk * self.pk
        } else {
            self.pk
        }
    }

    /// Image of an integral element.
    pub fn reduce(&self, x: &QuadRingElem) -> RingElem {
        let xm = big_to_u64_mod(&x.x, self.pk);
        let ym = big_to_u64_mod(&x.y, self.pk);
        if self.f == 2 {
            (xm, ym)
        } else {
            (self.addm(xm, self.mulm(ym, self.omega_root)), 0)
        }
    }

    #[inline]
    fn addm(&self, a: u64, b: u64) -> u64 {
        let s = a as u128 + b as u128;
        (s % self.pk as u128) as u64
    }

    #[inline]
    fn mulm(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.pk as u128) as u64
    }

    pub fn add(&self, a: RingElem, b: RingElem) -> RingElem {
        (self.addm(a.0, b.0), self.addm(a.1, b.1))
    }

    pub fn sub(&self, a: RingElem, b: RingElem) -> RingElem {
        let neg = |x: u64| if x == 0 { 0 } else { self.pk - x };
        self.add(a, (neg(b.0), neg(b.1)))
    }

    pub fn mul(&self, a: RingElem, b: RingElem) -> RingElem {
        if self.f == 1 {
            (self.mulm(a.0, b.0), 0)
        } else {
            // (a0 + a1ω)(b0 + b1ω) = a0b0 + a1b1(−N) + (a0b1 + a1b0 + a1b1·T)ω
            let (t, negn) = self.omega_poly;
            let a1b1 = self.mulm(a.1, b.1);
            let re = self.addm(self.mulm(a.0, b.0), self.mulm(a1b1, negn));
            let im = self.addm(
                self.addm(self.mulm(a.0, b.1), self.mulm(a.1, b.0)),
                self.mulm(a1b1, t),
            );
            (re, im)
        }
    }

    pub fn square(&self, a: RingElem) -> RingElem {
        self.mul(a, a)
    }

    pub fn scale(&self, c: u64, a: RingElem) -> RingElem {
        (self.mulm(c % self.pk, a.0), self.mulm(c % self.pk, a.1))
    }

    /// Iterate over every element of the ring.
    pub fn elements(&self) -> Box<dyn Iterator<Item = RingElem>> {
        let pk = self.pk;
        if self.f == 2 {
            Box::new((0..pk).flat_map(move |a| (0..pk).map(move |b| (a, b))))
        } else {
            Box::new((0..pk).map(|a| (a, 0)))
        }
    }

    /// Is the element a unit (not in 𝔭)?
    pub fn is_unit(&self, a: RingElem) -> bool {
        if self.f == 2 {
            a.0 % self.p != 0 || a.1 % self.p != 0
        } else {
            a.0 % self.p != 0
        }
    }

    /// Compact encoding for set membership tables.
    pub fn encode(&self, a: RingElem) -> u64 {
        a.0 * if self.f == 2 { self.pk } else { 1 } + a.1
    }
}

pub(crate) fn big_to_u64_mod(x: &BigInt, m: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(m));
    r.to_string().parse::<u64>().unwrap()
}

/// Quadratic residue symbol of x modulo an unramified prime 𝔭: the image of
/// x in 𝔽_{p^f} raised to (p^f − 1)/2, read as ±1; 0 iff x ∈ 𝔭.
pub fn residue_symbol(x: &QuadRingElem, ideal: &PrimeIdeal) -> Result<i32> {
    if ideal.is_ramified() {
        return Err(Error::Ramified(format!(
            "residue symbol undefined at the ramified prime {}",
            ideal.generator_desc()
        )));
    }
    let ring = ResidueRing::new(ideal, 1)?;
    let a = ring.reduce(x);
    if !ring.is_unit(a) {
        return Ok(0);
    }
    let exponent = (ring.pk.pow(ideal.f) - 1) / 2;
    let mut acc: RingElem = (1, 0);
    let mut base = a;
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            acc = ring.mul(acc, base);
        }
        base = ring.square(base);
        e >>= 1;
    }
    if acc == (1, 0) {
        Ok(1)
    } else if acc == (ring.pk - 1, 0) {
        Ok(-1)
    } else {
        Err(Error::Invariant(format!(
            "power residue {acc:?} is not ±1; non-prime modulus?"
        )))
    }
}

/// Is x a square modulo 𝔭^k? Decided by full enumeration of 𝒪_L/𝔭^k.
pub fn is_square_mod_power(x: &QuadRingElem, ideal: &PrimeIdeal, k: u32) -> Result<bool> {
    if ideal.is_ramified() {
        return Err(Error::Ramified(format!(
            "square test modulo powers of the ramified prime {}",
            ideal.generator_desc()
        )));
    }
    let ring = ResidueRing::new(ideal, k)?;
    let target = ring.reduce(x);
    Ok(ring.elements().any(|y| ring.square(y) == target))
}
