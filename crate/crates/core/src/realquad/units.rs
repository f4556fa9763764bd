use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{QuadRingElem, RealQuadField};
use crate::arith::{exact_sqrt, isqrt};
use crate::error::{Error, Result};

/// The fundamental unit ε > 1 of 𝒪_L, from the continued fraction of √d.
///
/// The expansion yields the fundamental solution of x² − d·y² = ±1, i.e. the
/// fundamental unit of the order ℤ[√d]. When d ≡ 1 (mod 4) the full ring of
/// integers can be strictly larger; its fundamental unit is then a cube root
/// (t + v√d)/2 of that solution, extracted exactly when it exists (the unit
/// index divides 3 because the conductor is 2).
pub fn fundamental_unit(field: RealQuadField) -> Result<QuadRingElem> {
    if field.is_rational() {
        return Err(Error::DegenerateField(
            "ℚ has no fundamental unit".into(),
        ));
    }
    let d = BigInt::from(field.d);
    let (x0, y0, norm) = pell_fundamental(&d);

    if field.d % 4 == 1 {
        if let Some((t, v)) = half_integer_cube_root(&x0, norm, &d) {
            // ε = (t + v√d)/2 = (t−v)/2 + v·ω
            let x = (&t - &v) / BigInt::from(2);
            let eps = QuadRingElem::new(field, x, v);
            debug_assert!(eps.norm().abs().is_one());
            return Ok(eps);
        }
        // ε = x0 + y0·√d = (x0 − y0) + 2·y0·ω
        let eps = QuadRingElem::new(field, &x0 - &y0, BigInt::from(2) * &y0);
        debug_assert!(eps.norm().abs().is_one());
        Ok(eps)
    } else {
        Ok(QuadRingElem::new(field, x0, y0))
    }
}

/// Fundamental solution of x² − d·y² = ±1 via the continued fraction of √d.
/// Returns (x, y, norm) with norm = (−1)^period.
fn pell_fundamental(d: &BigInt) -> (BigInt, BigInt, i32) {
    let a0 = isqrt(d);
    assert!(&(&a0 * &a0) != d, "d must not be a square");
    // State (P, Q) for the complete quotient (P + √d)/Q; a = floor of it.
    let mut p = BigInt::zero();
    let mut q = BigInt::one();
    // Convergent recurrences.
    let (mut h_prev, mut h) = (BigInt::one(), a0.clone());
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    let mut period = 0usize;
    loop {
        // Step the (P, Q) state.
        let a = if period == 0 {
            a0.clone()
        } else {
            (&p + &a0).div_floor(&q)
        };
        if period > 0 {
            let new_h = &a * &h + &h_prev;
            h_prev = std::mem::replace(&mut h, new_h);
            let new_k = &a * &k + &k_prev;
            k_prev = std::mem::replace(&mut k, new_k);
        }
        let p_next = &a * &q - &p;
        let q_next = (d - &p_next * &p_next) / &q;
        p = p_next;
        q = q_next;
        period += 1;
        assert!(q.is_positive(), "continued fraction state corrupted");
        if q.is_one() {
            break;
        }
    }
    let norm = if period % 2 == 0 { 1 } else { -1 };
    (h, k, norm)
}

/// Exact cube root (t + v√d)/2 of ε₀ = x0 + y0·√d with t, v > 0, if one
/// exists in the half-integer lattice t ≡ v (mod 2). n = Norm(ε₀) ∈ {±1}
/// forces Norm(root) = n, and ε³ + ε̄³ = t³ − 3·n·t pins t.
fn half_integer_cube_root(x0: &BigInt, norm: i32, d: &BigInt) -> Option<(BigInt, BigInt)> {
    let n = BigInt::from(norm);
    let target = BigInt::from(2) * x0; // t³ − 3·n·t = 2·x0
    let approx = cbrt_floor(&target);
    for delta in -2i64..=2 {
        let t = &approx + BigInt::from(delta);
        if !t.is_positive() {
            continue;
        }
        if &t * &t * &t - BigInt::from(3) * &n * &t == target {
            let v2_num = &t * &t - BigInt::from(4) * &n;
            if (&v2_num % d).is_zero() {
                if let Some(v) = exact_sqrt(&(&v2_num / d)) {
                    if ((&t - &v) % BigInt::from(2)).is_zero() {
                        return Some((t, v));
                    }
                }
            }
        }
    }
    None
}

fn cbrt_floor(x: &BigInt) -> BigInt {
    if x.is_zero() {
        return BigInt::zero();
    }
    assert!(x.is_positive());
    let mut r = x.nth_root(3);
    while &(&r * &r * &r) > x {
        r -= 1;
    }
    while (&r + 1u32).pow(3) <= *x {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_of(d: i64) -> QuadRingElem {
        fundamental_unit(RealQuadField::new(d).unwrap()).unwrap()
    }

    #[test]
    fn small_fields_match_tables() {
        // d=5: ε = ω, norm −1
        let e5 = unit_of(5);
        assert_eq!(e5, QuadRingElem::from_i64(RealQuadField::new(5).unwrap(), 0, 1));
        assert_eq!(e5.norm(), BigInt::from(-1));
        // d=2: ε = 1 + √2, norm −1
        let e2 = unit_of(2);
        assert_eq!(e2, QuadRingElem::from_i64(RealQuadField::new(2).unwrap(), 1, 1));
        assert_eq!(e2.norm(), BigInt::from(-1));
        // d=3: ε = 2 + √3, norm +1
        let e3 = unit_of(3);
        assert_eq!(e3, QuadRingElem::from_i64(RealQuadField::new(3).unwrap(), 2, 1));
        assert_eq!(e3.norm(), BigInt::from(1));
        // d=13: ε = (3+√13)/2 = 1 + ω, norm −1
        let e13 = unit_of(13);
        assert_eq!(
            e13,
            QuadRingElem::from_i64(RealQuadField::new(13).unwrap(), 1, 1)
        );
        assert_eq!(e13.norm(), BigInt::from(-1));
    }

    #[test]
    fn unit_norms_are_plus_minus_one() {
        for d in [2i64, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 29, 94] {
            let e = unit_of(d);
            let n = e.norm();
            assert!(n.abs().is_one(), "norm of unit for d={d} is {n}");
            // ε · ε̄ = ±1 exactly
            let prod = e.mul(&e.conjugate());
            assert_eq!(prod.x, n);
            assert!(prod.y.is_zero());
            // ε > 1 in the positive embedding
            let e_minus_one = e.sub(&QuadRingElem::one(e.field));
            assert!(e_minus_one.embedding_sign(false) > 0, "ε ≤ 1 for d={d}");
        }
    }

    #[test]
    fn not_a_proper_power() {
        // If ε were a proper power, a smaller unit (u + v·ω) > 1 would exist;
        // scan the full coordinate box below the fundamental unit.
        for d in [2i64, 3, 5, 13, 17, 21] {
            let field = RealQuadField::new(d).unwrap();
            let e = unit_of(d);
            let bx: i64 = e.x.to_string().parse().unwrap();
            let by: i64 = e.y.to_string().parse().unwrap();
            for x in -(bx.abs() + 2)..=(bx.abs() + 2) {
                for y in -(by.abs() + 2)..=(by.abs() + 2) {
                    let cand = QuadRingElem::from_i64(field, x, y);
                    if cand.norm().abs().is_one() {
                        // unit > 1 strictly smaller than ε in the positive embedding?
                        let gt_one = cand
                            .sub(&QuadRingElem::one(field))
                            .embedding_sign(false)
                            > 0;
                        let lt_eps = e.sub(&cand).embedding_sign(false) > 0;
                        assert!(
                            !(gt_one && lt_eps),
                            "unit {cand} below fundamental unit for d={d}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn known_larger_units() {
        // d=94: ε = 2143295 + 221064√94 (norm +1), a classic long period.
        let e = unit_of(94);
        assert_eq!(e.x, BigInt::from(2143295i64));
        assert_eq!(e.y, BigInt::from(221064i64));
        assert_eq!(e.norm(), BigInt::one());
        // d=73 ≡ 1 mod 8: ε = 943 + 250ω? Check norm and minimality basics.
        let e = unit_of(73);
        assert_eq!(e.norm().abs(), BigInt::one());
    }
}
