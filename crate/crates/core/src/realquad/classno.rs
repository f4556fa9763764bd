use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{fundamental_unit, QuadRingElem, RealQuadField};
use crate::arith::{exact_sqrt, isqrt, kronecker, primes_up_to, to_i64};
use crate::error::{Error, Result};
use crate::exactlin::{hnf, IntMatrix};

/// Default guard on the field discriminant for class-group enumeration.
pub const CLASS_NUMBER_DISC_BOUND: i64 = 4000;

/// Nonzero integral ideal of 𝒪_L in two-row Hermite form on the basis
/// (1, ω): rows span the ideal as a ℤ-module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OLIdeal {
    pub field: RealQuadField,
    /// 2×2 HNF basis; row i is (x, y) for x + y·ω.
    pub basis: IntMatrix,
}

impl OLIdeal {
    pub fn whole_ring(field: RealQuadField) -> Self {
        OLIdeal {
            field,
            basis: IntMatrix::identity(2),
        }
    }

    /// Ideal generated by a list of elements (ℤ-module closure under
    /// multiplication by 1 and ω).
    pub fn from_generators(field: RealQuadField, gens: &[QuadRingElem]) -> Result<Self> {
        let omega = QuadRingElem::omega(field);
        let mut rows = Vec::new();
        for g in gens {
            rows.push(vec![g.x.clone(), g.y.clone()]);
            let gw = g.mul(&omega);
            rows.push(vec![gw.x.clone(), gw.y.clone()]);
        }
        let (h, _) = hnf(&IntMatrix::from_rows(rows));
        let nonzero: Vec<Vec<BigInt>> = (0..h.rows)
            .filter(|&i| !h.is_zero_row(i))
            .map(|i| h.row_vec(i))
            .collect();
        if nonzero.len() != 2 {
            return Err(Error::Degenerate("ideal is not full rank".into()));
        }
        Ok(OLIdeal {
            field,
            basis: IntMatrix::from_rows(nonzero),
        })
    }

    pub fn principal(g: &QuadRingElem) -> Result<Self> {
        Self::from_generators(g.field, std::slice::from_ref(g))
    }

    pub fn norm(&self) -> BigInt {
        self.basis.det().abs()
    }

    pub fn mul(&self, other: &OLIdeal) -> Result<OLIdeal> {
        assert_eq!(self.field, other.field);
        let elems_a: Vec<QuadRingElem> = (0..2)
            .map(|i| {
                QuadRingElem::new(
                    self.field,
                    self.basis[(i, 0)].clone(),
                    self.basis[(i, 1)].clone(),
                )
            })
            .collect();
        let elems_b: Vec<QuadRingElem> = (0..2)
            .map(|i| {
                QuadRingElem::new(
                    self.field,
                    other.basis[(i, 0)].clone(),
                    other.basis[(i, 1)].clone(),
                )
            })
            .collect();
        let mut products = Vec::new();
        for a in &elems_a {
            for b in &elems_b {
                products.push(a.mul(b));
            }
        }
        OLIdeal::from_generators(self.field, &products)
    }

    pub fn conjugate(&self) -> Result<OLIdeal> {
        let elems: Vec<QuadRingElem> = (0..2)
            .map(|i| {
                QuadRingElem::new(
                    self.field,
                    self.basis[(i, 0)].clone(),
                    self.basis[(i, 1)].clone(),
                )
                .conjugate()
            })
            .collect();
        OLIdeal::from_generators(self.field, &elems)
    }

    pub fn contains(&self, e: &QuadRingElem) -> bool {
        // Solve c·B = (x, y) over ℤ for the 2×2 HNF basis.
        let b = &self.basis;
        let det = b.det();
        if det.is_zero() {
            return false;
        }
        // Cramer, then check divisibility.
        let c0 = &e.x * &b[(1, 1)] - &e.y * &b[(1, 0)];
        let c1 = &e.y * &b[(0, 0)] - &e.x * &b[(0, 1)];
        (&c0 % &det).is_zero() && (&c1 % &det).is_zero()
    }

    /// Principality test by norm-form enumeration: search an element γ ∈ 𝔞
    /// with |Norm(γ)| = Norm(𝔞). The search box is the fundamental-domain
    /// bound |coordinates| ≤ 2·√n·ε under the unit action, so the test is
    /// exact, not heuristic.
    pub fn principal_generator(&self) -> Result<Option<QuadRingElem>> {
        let n = self.norm();
        if n.is_one() {
            return Ok(Some(QuadRingElem::one(self.field)));
        }
        let field = self.field;
        let eps = fundamental_unit(field)?;
        // Integer over-estimate of ε in the positive embedding:
        // ε = x + yω ≤ x + y·(1 + isqrt(d)) + 1 for our ω conventions.
        let eps_bound: BigInt =
            eps.x.abs() + eps.y.abs() * (BigInt::one() + isqrt(&BigInt::from(field.d))) + 1;
        // |y|·√d ≤ |γ| + |γ̄| ≤ 2√n·ε ⟹ |y| ≤ 2·isqrt(n)+2 times ε / √d… use
        // the cruder but safe |y| ≤ 2·(isqrt(n)+1)·ε_bound.
        let y_bound = BigInt::from(2) * (isqrt(&n) + 1) * &eps_bound;
        let d_l = BigInt::from(field.discriminant());
        let t_omega = BigInt::from(field.omega_trace());

        // y ≥ 0 suffices: (γ) = (−γ) and negating flips the ω coordinate.
        let mut y = BigInt::zero();
        while y <= y_bound {
            // x² + t·x·y + N(ω)·y² = ±n ⟹ (2x + t·y)² = d_L·y² ± 4n
            let s2_base = &d_l * &y * &y;
            for target_sign in [1i64, -1] {
                let s2 = &s2_base + BigInt::from(4 * target_sign) * &n;
                if s2.is_negative() {
                    continue;
                }
                if let Some(s) = exact_sqrt(&s2) {
                    for s in [s.clone(), -s] {
                        let num = &s - &t_omega * &y;
                        if (&num % BigInt::from(2)).is_zero() {
                            let x = num / BigInt::from(2);
                            let cand = QuadRingElem::new(field, x, y.clone());
                            if cand.norm().abs() == n && self.contains(&cand) {
                                return Ok(Some(cand));
                            }
                        }
                    }
                }
            }
            y += 1;
        }
        Ok(None)
    }
}

/// Class number of L by Minkowski-bound ideal enumeration: every class
/// contains an integral ideal of norm ≤ √(d_L)/2; classes are separated by
/// principality of 𝔞·conj(𝔟).
pub fn class_number(field: RealQuadField) -> Result<u64> {
    if field.is_rational() {
        return Ok(1);
    }
    let d_l = field.discriminant();
    if d_l > CLASS_NUMBER_DISC_BOUND {
        return Err(Error::BoundExceeded(format!(
            "discriminant {d_l} above the class-number guard {CLASS_NUMBER_DISC_BOUND}"
        )));
    }
    let mk: i64 = to_i64(&(isqrt(&BigInt::from(d_l)) / 2u8))?;

    // Prime ideals of norm ≤ Minkowski bound.
    let mut small_primes: Vec<OLIdeal> = Vec::new();
    for q in primes_up_to(mk) {
        match kronecker(&BigInt::from(d_l), q) {
            1 | 0 => {
                for ideal in prime_ideals_above(field, q)? {
                    small_primes.push(ideal);
                }
            }
            _ => {
                // inert: norm q² — include only if q² ≤ bound
                if q * q <= mk {
                    small_primes.push(OLIdeal::principal(&QuadRingElem::integer(field, q))?);
                }
            }
        }
    }

    // All integral ideals of norm ≤ bound: close the set under products.
    let mut ideals: Vec<OLIdeal> = vec![OLIdeal::whole_ring(field)];
    let mut frontier = ideals.clone();
    while let Some(i) = frontier.pop() {
        for p in &small_primes {
            let prod = i.mul(p)?;
            if prod.norm() <= BigInt::from(mk) && !ideals.contains(&prod) {
                ideals.push(prod.clone());
                frontier.push(prod);
            }
        }
    }

    // Partition into ideal classes.
    let mut representatives: Vec<OLIdeal> = Vec::new();
    for i in &ideals {
        let mut found = false;
        for r in &representatives {
            let prod = i.mul(&r.conjugate()?)?;
            if prod.principal_generator()?.is_some() {
                found = true;
                break;
            }
        }
        if !found {
            representatives.push(i.clone());
        }
    }
    Ok(representatives.len() as u64)
}

/// The prime ideals (𝔭 = (q, ω − r)) above a split or ramified rational
/// prime q, via the roots of the minimal polynomial of ω mod q.
fn prime_ideals_above(field: RealQuadField, q: i64) -> Result<Vec<OLIdeal>> {
    let t = field.omega_trace();
    let n = field.omega_norm();
    let mut roots = Vec::new();
    for r in 0..q {
        if (r * r - t * r + n).rem_euclid(q) == 0 {
            roots.push(r);
        }
    }
    roots
        .into_iter()
        .map(|r| {
            OLIdeal::from_generators(
                field,
                &[
                    QuadRingElem::integer(field, q),
                    QuadRingElem::from_i64(field, -r, 1),
                ],
            )
        })
        .collect()
}

/// h_L⁺ = 1 ⟺ h_L = 1 and the fundamental unit has norm −1 (equivalently,
/// every totally positive unit is a square).
pub fn is_strict_class_number_one(field: RealQuadField) -> Result<bool> {
    if field.is_rational() {
        return Ok(true);
    }
    if class_number(field)? != 1 {
        return Ok(false);
    }
    let eps = fundamental_unit(field)?;
    Ok(eps.norm() == BigInt::from(-1))
}
