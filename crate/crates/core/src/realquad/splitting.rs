use num_bigint::BigInt;
use num_traits::Zero;

use super::{QuadRingElem, RealQuadField};
use crate::arith::{is_prime, kronecker, valuation};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitKind {
    Split,
    Inert,
    Ramified,
}

impl SplitKind {
    pub fn label(&self) -> &'static str {
        match self {
            SplitKind::Split => "split",
            SplitKind::Inert => "inert",
            SplitKind::Ramified => "ramified",
        }
    }
}

/// One prime 𝔭 of L above p, with enough data to reduce elements mod 𝔭.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIdeal {
    pub field: RealQuadField,
    pub p: i64,
    /// Residue degree f(𝔭/p) ∈ {1, 2}.
    pub f: u32,
    /// Ramification index e(𝔭/p) ∈ {1, 2}.
    pub e: u32,
    /// For f = 1 over a quadratic field: ω ≡ root (mod 𝔭). None when inert
    /// or when L = ℚ.
    pub omega_root: Option<i64>,
}

impl PrimeIdeal {
    pub fn is_ramified(&self) -> bool {
        self.e == 2
    }

    /// Human-readable generator description, e.g. "(3)" or "(3, w - 1)".
    pub fn generator_desc(&self) -> String {
        match self.omega_root {
            None => format!("({})", self.p),
            Some(r) => format!("({}, w - {})", self.p, r),
        }
    }

    /// 𝔭-adic valuation of a nonzero element of 𝒪_L.
    pub fn valuation(&self, x: &QuadRingElem) -> Result<u32> {
        if x.is_zero() {
            return Err(Error::InvalidInput("valuation of zero".into()));
        }
        assert_eq!(x.field, self.field);
        let p = BigInt::from(self.p);
        if self.field.is_rational() {
            return Ok(valuation(&x.x, &p));
        }
        match (self.e, self.f) {
            (1, 2) => {
                // inert: 𝔭 = (p); v = min of coordinate valuations
                let vx = if x.x.is_zero() { u32::MAX } else { valuation(&x.x, &p) };
                let vy = if x.y.is_zero() { u32::MAX } else { valuation(&x.y, &p) };
                Ok(vx.min(vy))
            }
            (2, 1) => {
                // ramified: v_𝔭(x) = v_p(Norm(x))
                Ok(valuation(&x.norm(), &p))
            }
            (1, 1) => {
                // split: lift the root of the minimal polynomial of ω to
                // enough p-adic precision and read off v_p(x + y·root). The
                // image of a nonzero element is nonzero in ℤ_p, so raising
                // the precision always terminates.
                let mut cap = 16u32;
                loop {
                    let root =
                        lift_omega_root(self.field, self.p, self.omega_root.unwrap(), cap);
                    let pk = p.pow(cap);
                    let val = (&x.x + &x.y * &root) % &pk;
                    if val != BigInt::from(0) {
                        return Ok(valuation(&val, &p));
                    }
                    cap *= 2;
                }
            }
            _ => Err(Error::Invariant("impossible splitting data".into())),
        }
    }
}

/// Hensel lift of the root of the minimal polynomial of ω from mod p to
/// mod p^k (split unramified primes only; the derivative is a unit).
pub(crate) fn lift_omega_root(field: RealQuadField, p: i64, root: i64, k: u32) -> BigInt {
    let t = BigInt::from(field.omega_trace());
    let n = BigInt::from(field.omega_norm());
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut r = BigInt::from(root);
    for _ in 1..k {
        modulus = &modulus * &pb;
        // f(r) = r² − t·r + n, f'(r) = 2r − t
        let f = (&r * &r - &t * &r + &n) % &modulus;
        let fp = BigInt::from(2) * &r - &t;
        let fp_inv = crate::arith::mod_inverse(&fp, &modulus)
            .expect("derivative is a unit at an unramified split prime");
        r = (&r - f * fp_inv) % &modulus;
        if r < BigInt::from(0) {
            r += &modulus;
        }
    }
    r
}

/// Splitting data for p in L: kind, residue degree and the list of primes
/// above p.
#[derive(Clone, Debug)]
pub struct SplittingReport {
    pub field: RealQuadField,
    pub p: i64,
    pub kind: SplitKind,
    pub f: u32,
    pub ideals: Vec<PrimeIdeal>,
}

/// Residue field 𝔽_{p^f} of a prime, with its defining polynomial over 𝔽_p.
#[derive(Clone, Debug)]
pub struct ResidueField {
    pub p: i64,
    pub f: u32,
    /// Coefficients (c0, c1) of the monic modulus x² + c1·x + c0 when f = 2;
    /// (−root, 1) describing x − root when f = 1.
    pub modulus: (i64, i64),
}

/// Splitting of p in L from the Kronecker symbol (d_L | p); for p = 2 this
/// reads d_L mod 8.
pub fn splitting_type(field: RealQuadField, p: i64) -> Result<SplittingReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if field.is_rational() {
        return Ok(SplittingReport {
            field,
            p,
            kind: SplitKind::Split,
            f: 1,
            ideals: vec![PrimeIdeal {
                field,
                p,
                f: 1,
                e: 1,
                omega_root: None,
            }],
        });
    }
    let d_l = field.discriminant();
    let sym = kronecker(&BigInt::from(d_l), p);
    let kind = match sym {
        1 => SplitKind::Split,
        -1 => SplitKind::Inert,
        _ => SplitKind::Ramified,
    };
    let f = if kind == SplitKind::Inert { 2 } else { 1 };
    let roots = omega_roots_mod_p(field, p);
    let ideals = match kind {
        SplitKind::Split => {
            assert_eq!(roots.len(), 2, "split prime must give two roots");
            roots
                .iter()
                .map(|&r| PrimeIdeal {
                    field,
                    p,
                    f: 1,
                    e: 1,
                    omega_root: Some(r),
                })
                .collect()
        }
        SplitKind::Inert => vec![PrimeIdeal {
            field,
            p,
            f: 2,
            e: 1,
            omega_root: None,
        }],
        SplitKind::Ramified => {
            assert_eq!(roots.len(), 1, "ramified prime must give a double root");
            vec![PrimeIdeal {
                field,
                p,
                f: 1,
                e: 2,
                omega_root: Some(roots[0]),
            }]
        }
    };
    Ok(SplittingReport {
        field,
        p,
        kind,
        f,
        ideals,
    })
}

/// Roots of the minimal polynomial of ω modulo p.
fn omega_roots_mod_p(field: RealQuadField, p: i64) -> Vec<i64> {
    let t = field.omega_trace();
    let n = field.omega_norm();
    (0..p)
        .filter(|&r| {
            let v = (r as i128) * (r as i128) - (t as i128) * (r as i128) + n as i128;
            v.rem_euclid(p as i128) == 0
        })
        .collect()
}

/// The residue field of a prime ideal.
pub fn residue_field(ideal: &PrimeIdeal) -> ResidueField {
    if ideal.f == 2 {
        ResidueField {
            p: ideal.p,
            f: 2,
            modulus: (ideal.field.omega_norm(), -ideal.field.omega_trace()),
        }
    } else {
        ResidueField {
            p: ideal.p,
            f: 1,
            modulus: (-ideal.omega_root.unwrap_or(0), 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(d: i64) -> RealQuadField {
        RealQuadField::new(d).unwrap()
    }

    #[test]
    fn sqrt5_splitting() {
        let r = splitting_type(f(5), 3).unwrap();
        assert_eq!(r.kind, SplitKind::Inert);
        assert_eq!(r.f, 2);
        let r = splitting_type(f(5), 11).unwrap();
        assert_eq!(r.kind, SplitKind::Split);
        assert_eq!(r.f, 1);
        assert_eq!(r.ideals.len(), 2);
        let r = splitting_type(f(5), 5).unwrap();
        assert_eq!(r.kind, SplitKind::Ramified);
    }

    #[test]
    fn dyadic_splitting_rules() {
        // d ≡ 1 mod 8 ⟹ 2 splits; d ≡ 5 mod 8 ⟹ inert; even d_L ⟹ ramified.
        assert_eq!(splitting_type(f(17), 2).unwrap().kind, SplitKind::Split);
        assert_eq!(splitting_type(f(5), 2).unwrap().kind, SplitKind::Inert);
        assert_eq!(splitting_type(f(2), 2).unwrap().kind, SplitKind::Ramified);
        assert_eq!(splitting_type(f(3), 2).unwrap().kind, SplitKind::Ramified);
    }

    #[test]
    fn splitting_matches_polynomial_factorization() {
        // Direct check against the factorization of the minimal polynomial
        // of ω modulo p, for all p ≤ 100.
        for d in [2i64, 3, 5, 10, 13, 17, 21] {
            let field = f(d);
            for p in crate::arith::primes_up_to(100) {
                let report = splitting_type(field, p).unwrap();
                let nroots = omega_roots_mod_p(field, p).len();
                let disc_divisible = field.discriminant() % p == 0;
                match report.kind {
                    SplitKind::Split => assert!(nroots == 2 && !disc_divisible),
                    SplitKind::Inert => assert!(nroots == 0 && !disc_divisible),
                    SplitKind::Ramified => assert!(disc_divisible),
                }
            }
        }
    }

    #[test]
    fn rational_field_trivial_splitting() {
        let r = splitting_type(RealQuadField::rationals(), 7).unwrap();
        assert_eq!(r.f, 1);
        assert_eq!(r.ideals.len(), 1);
        assert_eq!(r.ideals[0].generator_desc(), "(7)");
    }

    #[test]
    fn valuations() {
        let field = f(5);
        // split p=11: ω ≡ 4 or 8 mod 11 (x²−x−1 mod 11 has roots 4, 8).
        let rep = splitting_type(field, 11).unwrap();
        let p1 = &rep.ideals[0];
        // ω − root ∈ 𝔭 exactly once
        let w = QuadRingElem::omega(field);
        let shifted = w.sub(&QuadRingElem::integer(field, p1.omega_root.unwrap()));
        assert_eq!(p1.valuation(&shifted).unwrap(), 1);
        // inert p=3: v(3·ω) = 1, v(9) = 2
        let rep = splitting_type(field, 3).unwrap();
        let p3 = &rep.ideals[0];
        assert_eq!(p3.valuation(&QuadRingElem::from_i64(field, 0, 3)).unwrap(), 1);
        assert_eq!(p3.valuation(&QuadRingElem::integer(field, 9)).unwrap(), 2);
        // ramified: v_𝔭(√2) = 1 in ℚ(√2)
        let f2 = f(2);
        let rep = splitting_type(f2, 2).unwrap();
        let pr = &rep.ideals[0];
        assert_eq!(pr.valuation(&QuadRingElem::omega(f2)).unwrap(), 1);
        assert_eq!(pr.valuation(&QuadRingElem::integer(f2, 2)).unwrap(), 2);
    }
}
