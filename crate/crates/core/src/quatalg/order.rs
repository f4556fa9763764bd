use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::algebra::{QuatAlgebra, QuatElem};
use crate::arith::{is_prime, legendre};
use crate::error::{Error, Result};
use crate::exactlin::{kernel_mod_lattice, lattice_intersect, IntLattice, IntMatrix, RatMatrix};

/// A maximal order of a definite quaternion algebra, as a 4-element basis
/// over ℤ containing 1. Coordinates of all basis vectors share the
/// denominator `scale`, so the order sits inside (1/scale)·ℤ⁴.
#[derive(Clone, Debug)]
pub struct MaximalOrder {
    pub alg: QuatAlgebra,
    pub basis: [QuatElem; 4],
    pub scale: i64,
}

impl MaximalOrder {
    pub fn new(alg: QuatAlgebra, basis: [QuatElem; 4]) -> Result<Self> {
        let mut scale = BigInt::one();
        for e in &basis {
            for c in e.coords() {
                scale = scale.lcm(c.denom());
            }
        }
        let scale: i64 = crate::arith::to_i64(&scale)?;
        let order = MaximalOrder { alg, basis, scale };
        order.verify()?;
        Ok(order)
    }

    /// Ring closure, 1 ∈ 𝒪, and reduced discriminant p (Trd-pairing
    /// determinant p²).
    fn verify(&self) -> Result<()> {
        if !self.contains(&QuatElem::one(self.alg)) {
            return Err(Error::Invariant("order does not contain 1".into()));
        }
        for ei in &self.basis {
            for ej in &self.basis {
                if !self.contains(&ei.mul(ej)) {
                    return Err(Error::Invariant(format!(
                        "order not closed: {ei:?} · {ej:?} escapes"
                    )));
                }
            }
        }
        let gram = self.trd_pairing_gram();
        let det = gram.det();
        let p2 = BigRational::from_integer(BigInt::from(self.alg.p) * BigInt::from(self.alg.p));
        if det != p2 {
            return Err(Error::Invariant(format!(
                "Trd-pairing determinant {det} is not p² = {p2}"
            )));
        }
        Ok(())
    }

    /// Gram of the pairing (x, y) ↦ Trd(x·ȳ) on the basis.
    pub fn trd_pairing_gram(&self) -> RatMatrix {
        let two = BigRational::from_integer(BigInt::from(2));
        RatMatrix::from_rows(
            self.basis
                .iter()
                .map(|ei| {
                    self.basis
                        .iter()
                        .map(|ej| &two * ei.nrd_pairing(ej))
                        .collect()
                })
                .collect(),
        )
    }

    /// Integer coordinates in the ambient scaled lattice (1/scale)·ℤ⁴.
    pub fn scaled_coords(&self, e: &QuatElem) -> Option<Vec<BigInt>> {
        let s = BigRational::from_integer(BigInt::from(self.scale));
        let mut out = Vec::with_capacity(4);
        for c in e.coords() {
            let v = c * &s;
            if !v.is_integer() {
                return None;
            }
            out.push(v.to_integer());
        }
        Some(out)
    }

    /// Quaternion from scaled integer coordinates.
    pub fn elem_from_scaled(&self, v: &[BigInt]) -> QuatElem {
        let s = BigInt::from(self.scale);
        QuatElem::new(
            self.alg,
            BigRational::new(v[0].clone(), s.clone()),
            BigRational::new(v[1].clone(), s.clone()),
            BigRational::new(v[2].clone(), s.clone()),
            BigRational::new(v[3].clone(), s),
        )
    }

    /// The order as a rank-4 lattice in scaled coordinates, carrying the
    /// reduced-norm quadratic map.
    pub fn lattice(&self) -> IntLattice {
        let rows: Vec<Vec<BigInt>> = self
            .basis
            .iter()
            .map(|e| self.scaled_coords(e).expect("basis is scale-integral"))
            .collect();
        IntLattice::with_ambient_gram(4, IntMatrix::from_rows(rows), self.ambient_gram())
            .expect("order lattice is well formed")
    }

    /// Even polar Gram of Nrd on the scaled ambient basis: 2·diag(1, −a, −b,
    /// ab)/scale².
    pub fn ambient_gram(&self) -> RatMatrix {
        let mut g = RatMatrix::zero(4, 4);
        let s2 = BigRational::from_integer(BigInt::from(self.scale) * BigInt::from(self.scale));
        let diag = [1i64, -self.alg.a, -self.alg.b, self.alg.a * self.alg.b];
        for (i, d) in diag.iter().enumerate() {
            g[(i, i)] = BigRational::from_integer(BigInt::from(2 * d)) / &s2;
        }
        g
    }

    pub fn contains(&self, e: &QuatElem) -> bool {
        match self.scaled_coords(e) {
            None => false,
            Some(v) => self.lattice_contains(&v),
        }
    }

    fn lattice_contains(&self, v: &[BigInt]) -> bool {
        // Solve on the basis coordinate matrix directly (4×4, invertible).
        let b = RatMatrix::from_rows(
            self.basis
                .iter()
                .map(|e| e.coords().to_vec())
                .collect::<Vec<_>>(),
        );
        let rhs: Vec<BigRational> = v
            .iter()
            .map(|x| BigRational::new(x.clone(), BigInt::from(self.scale)))
            .collect();
        match b.solve_left(&rhs) {
            Ok(c) => c.iter().all(|x| x.is_integer()),
            Err(_) => false,
        }
    }

    /// Coefficients of e on the order basis, if e is in the order.
    pub fn coefficients_of(&self, e: &QuatElem) -> Option<Vec<BigInt>> {
        let b = RatMatrix::from_rows(
            self.basis
                .iter()
                .map(|x| x.coords().to_vec())
                .collect::<Vec<_>>(),
        );
        let c = b.solve_left(&e.coords()).ok()?;
        if c.iter().all(|x| x.is_integer()) {
            Some(c.iter().map(|x| x.to_integer()).collect())
        } else {
            None
        }
    }
}

/// Build B_{p,∞} with an explicit maximal order, one model per residue
/// class of p:
///
/// - p = 2: (−1, −1) with the Hurwitz order ℤ⟨1, i, j, (1+i+j+ij)/2⟩;
/// - p ≡ 3 (mod 4): (−1, −p) with ℤ⟨1, i, (i+j)/2, (1+ij)/2⟩;
/// - p ≡ 5 (mod 8): (−2, −p) with ℤ⟨1, i, (1+i+j)/2, (2+i+ij)/4⟩;
/// - p ≡ 1 (mod 8): (−q, −p) for the least prime q ≡ 3 (mod 4) with
///   (q|p) = −1, with ℤ⟨1, (1+i)/2, (j+ij)/2, (c·i+ij)/q⟩, c² ≡ −p (mod q).
///
/// Every constructed order is certified: ring closure, 1 ∈ 𝒪, Trd-pairing
/// determinant p², Hilbert-symbol ramification exactly {p, ∞}.
pub fn make_bp(p: i64) -> Result<(QuatAlgebra, MaximalOrder)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let (alg, basis) = if p == 2 {
        let alg = QuatAlgebra::new(-1, -1, 2)?;
        (
            alg,
            [
                QuatElem::from_i64(alg, [1, 0, 0, 0]),
                QuatElem::from_i64(alg, [0, 1, 0, 0]),
                QuatElem::from_i64(alg, [0, 0, 1, 0]),
                QuatElem::from_i64_div(alg, [1, 1, 1, 1], 2),
            ],
        )
    } else if p % 4 == 3 {
        let alg = QuatAlgebra::new(-1, -p, p)?;
        (
            alg,
            [
                QuatElem::from_i64(alg, [1, 0, 0, 0]),
                QuatElem::from_i64(alg, [0, 1, 0, 0]),
                QuatElem::from_i64_div(alg, [0, 1, 1, 0], 2),
                QuatElem::from_i64_div(alg, [1, 0, 0, 1], 2),
            ],
        )
    } else if p % 8 == 5 {
        let alg = QuatAlgebra::new(-2, -p, p)?;
        (
            alg,
            [
                QuatElem::from_i64(alg, [1, 0, 0, 0]),
                QuatElem::from_i64(alg, [0, 1, 0, 0]),
                QuatElem::from_i64_div(alg, [1, 1, 1, 0], 2),
                QuatElem::from_i64_div(alg, [2, 1, 0, 1], 4),
            ],
        )
    } else {
        // p ≡ 1 (mod 8): minimal auxiliary prime q ≡ 3 (mod 4), (q|p) = −1.
        let q = (3..)
            .step_by(4)
            .find(|&q| is_prime(q) && legendre(&BigInt::from(q), p) == -1)
            .unwrap();
        let c = (0..q)
            .find(|&c| (c * c + p).rem_euclid(q) == 0)
            .ok_or_else(|| Error::Invariant("no square root of -p mod q".into()))?;
        let alg = QuatAlgebra::new(-q, -p, p)?;
        (
            alg,
            [
                QuatElem::from_i64(alg, [1, 0, 0, 0]),
                QuatElem::from_i64_div(alg, [1, 1, 0, 0], 2),
                QuatElem::from_i64_div(alg, [0, 0, 1, 1], 2),
                QuatElem::from_i64_div(alg, [0, c, 0, 1], q),
            ],
        )
    };
    alg.certify_ramification(100)?;
    let order = MaximalOrder::new(alg, basis)?;
    Ok((alg, order))
}

/// The rank-3 lattice Λ_O = 𝒪⁰ ∩ (ℤ + 2𝒪) with q(x) = Nrd(x), in HNF on the
/// scaled coordinates and certified positive definite.
pub fn lambda_o(order: &MaximalOrder) -> Result<IntLattice> {
    let o_lat = order.lattice();
    // Trace functional on scaled coordinates: Trd = 2·t/scale.
    let trace_map = RatMatrix::from_rows(vec![
        vec![BigRational::new(BigInt::from(2), BigInt::from(order.scale))],
        vec![BigRational::zero()],
        vec![BigRational::zero()],
        vec![BigRational::zero()],
    ]);
    let zero_target = IntLattice::plain(1, IntMatrix::zero(0, 1))?;
    let trace_zero = kernel_mod_lattice(&trace_map, &o_lat, &zero_target)?;
    if trace_zero.rank() != 3 {
        return Err(Error::Invariant(format!(
            "trace-zero part has rank {}",
            trace_zero.rank()
        )));
    }

    // ℤ + 2𝒪 in scaled coordinates.
    let mut rows: Vec<Vec<BigInt>> = vec![vec![
        BigInt::from(order.scale),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
    ]];
    for e in &order.basis {
        let v = order.scaled_coords(e).unwrap();
        rows.push(v.iter().map(|x| x * BigInt::from(2)).collect());
    }
    let z_plus_2o =
        IntLattice::with_ambient_gram(4, IntMatrix::from_rows(rows), order.ambient_gram())?
            .hnf_normalize()?;

    let lambda = lattice_intersect(&trace_zero, &z_plus_2o)?;
    if lambda.rank() != 3 {
        return Err(Error::Invariant(format!(
            "congruence lattice has rank {}",
            lambda.rank()
        )));
    }
    if !lambda.is_positive_definite()? {
        return Err(Error::NotPositiveDefinite("norm form on Λ_O".into()));
    }
    Ok(lambda)
}

/// Index of Λ_O inside the full trace-zero part 𝒪⁰ (finite by construction).
pub fn lambda_o_index(order: &MaximalOrder) -> Result<BigInt> {
    let o_lat = order.lattice();
    let trace_map = RatMatrix::from_rows(vec![
        vec![BigRational::new(BigInt::from(2), BigInt::from(order.scale))],
        vec![BigRational::zero()],
        vec![BigRational::zero()],
        vec![BigRational::zero()],
    ]);
    let zero_target = IntLattice::plain(1, IntMatrix::zero(0, 1))?;
    let trace_zero = kernel_mod_lattice(&trace_map, &o_lat, &zero_target)?;
    let lambda = lambda_o(order)?;
    // Coefficient matrix of the Λ basis over the 𝒪⁰ basis.
    let mut rows = Vec::new();
    for i in 0..lambda.rank() {
        let v = lambda.basis.row_vec(i);
        let c = trace_zero
            .coefficients_of(&v)
            .ok_or_else(|| Error::Invariant("Λ_O ⊄ 𝒪⁰".into()))?;
        rows.push(c);
    }
    Ok(IntMatrix::from_rows(rows).det().abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::fincke_pohst;

    #[test]
    fn hurwitz_order_certified() {
        let (_, order) = make_bp(2).unwrap();
        // Trd-pairing determinant 4 = 2².
        assert_eq!(
            order.trd_pairing_gram().det(),
            BigRational::from_integer(BigInt::from(4))
        );
    }

    #[test]
    fn catalogue_covers_residue_classes() {
        for p in [2i64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 41, 73] {
            let (alg, order) = make_bp(p).unwrap();
            assert_eq!(alg.p, p);
            let d = order.trd_pairing_gram().det();
            assert_eq!(
                d,
                BigRational::from_integer(BigInt::from(p) * BigInt::from(p)),
                "discriminant for p={p}"
            );
        }
    }

    #[test]
    fn lambda_o_for_p2_matches_hand_computation() {
        let (_, order) = make_bp(2).unwrap();
        let lam = lambda_o(&order).unwrap();
        assert_eq!(lam.rank(), 3);
        // q-values (3, 4, 4) with polar 4, 4, 0 — even gram
        // [[6,4,4],[4,8,0],[4,0,8]] on the HNF basis {i+j+k, 2j, 2k}.
        let g = lam.gram.as_ref().unwrap();
        assert_eq!(g, &IntMatrix::from_i64(&[&[6, 4, 4], &[4, 8, 0], &[4, 0, 8]]));
        // Contains i+j+ij, 2i, 2j (the stated generators).
        for v in [[0i64, 1, 1, 1], [0, 2, 0, 0], [0, 0, 2, 0]] {
            let coords: Vec<BigInt> = v
                .iter()
                .map(|&x| BigInt::from(x) * BigInt::from(order.scale))
                .collect();
            assert!(lam.contains(&coords));
        }
        // Minimum is 3: nothing at 1 or 2.
        assert!(fincke_pohst(&lam, &BigInt::from(1)).unwrap().is_empty());
        assert!(fincke_pohst(&lam, &BigInt::from(2)).unwrap().is_empty());
        assert_eq!(fincke_pohst(&lam, &BigInt::from(3)).unwrap().len(), 8);
    }

    #[test]
    fn two_i_always_in_lambda() {
        for p in [2i64, 3, 5, 7, 13, 17] {
            let (_, order) = make_bp(p).unwrap();
            let lam = lambda_o(&order).unwrap();
            let two_i = order
                .scaled_coords(&QuatElem::from_i64(order.alg, [0, 2, 0, 0]))
                .unwrap();
            assert!(lam.contains(&two_i), "2i missing for p={p}");
            // q(2i) = −4a
            assert_eq!(
                lam.ambient_q(&two_i).unwrap(),
                BigRational::from_integer(BigInt::from(-4 * order.alg.a))
            );
        }
    }

    #[test]
    fn p3_small_values() {
        let (_, order) = make_bp(3).unwrap();
        let lam = lambda_o(&order).unwrap();
        // Represented small values start {3, 4, ...}.
        assert!(fincke_pohst(&lam, &BigInt::from(1)).unwrap().is_empty());
        assert!(fincke_pohst(&lam, &BigInt::from(2)).unwrap().is_empty());
        assert!(!fincke_pohst(&lam, &BigInt::from(3)).unwrap().is_empty());
        assert!(!fincke_pohst(&lam, &BigInt::from(4)).unwrap().is_empty());
    }

    #[test]
    fn lambda_sits_in_both_parents() {
        for p in [2i64, 5, 11] {
            let (_, order) = make_bp(p).unwrap();
            let lam = lambda_o(&order).unwrap();
            for r in 0..lam.rank() {
                let v = lam.basis.row_vec(r);
                let e = order.elem_from_scaled(&v);
                assert!(e.trd().is_zero());
                // e − n ∈ 2𝒪 for n = 0 or ±1: e is trace-zero so n = 0 and
                // membership in ℤ+2𝒪 means e/2 ∈ 𝒪 + ½ℤ…; check directly:
                let half = e.scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
                let mut ok = false;
                for n in [0i64, 1, -1] {
                    let shifted = half.sub(&QuatElem::from_i64_div(order.alg, [n, 0, 0, 0], 2));
                    if order.contains(&shifted) {
                        ok = true;
                    }
                }
                assert!(ok, "basis vector outside ℤ+2𝒪 for p={p}");
            }
            let idx = lambda_o_index(&order).unwrap();
            assert!(idx.is_positive());
        }
    }
}
