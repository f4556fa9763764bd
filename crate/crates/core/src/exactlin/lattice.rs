use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::hnf::{hnf, hnf_rank, left_kernel};
use super::matrix::{row_times_int, row_times_rat, IntMatrix, RatMatrix};
use crate::error::{Error, Result};

/// A free sublattice of ℤ^ambient_dim with an optional quadratic structure.
///
/// The basis rows have full row rank. The quadratic data follows the
/// even-diagonal convention: `gram[i][j]` is the polar form
/// `b(x,y) = q(x+y) − q(x) − q(y)` on the basis, so `gram[i][i] = 2·q(b_i)`
/// and all entries are integers whenever `q` is integral on the lattice.
/// `ambient_gram`, when present, carries the same polar form on the ambient
/// standard basis (rational entries are allowed there: ambient coordinates
/// may be rescaled while the lattice itself stays integral).
#[derive(Clone, Debug)]
pub struct IntLattice {
    pub ambient_dim: usize,
    pub basis: IntMatrix,
    pub ambient_gram: Option<RatMatrix>,
    pub gram: Option<IntMatrix>,
}

impl IntLattice {
    /// Lattice with no quadratic structure.
    pub fn plain(ambient_dim: usize, basis: IntMatrix) -> Result<Self> {
        if basis.cols != ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "basis width {} vs ambient {}",
                basis.cols, ambient_dim
            )));
        }
        let (h, _) = hnf(&basis);
        let rank = hnf_rank(&h);
        if rank != basis.rows {
            return Err(Error::Degenerate("basis rows are dependent".into()));
        }
        Ok(IntLattice {
            ambient_dim,
            basis,
            ambient_gram: None,
            gram: None,
        })
    }

    /// Lattice inside an ambient quadratic space. The restricted basis Gram
    /// must come out integral; anything else is an invariant violation.
    pub fn with_ambient_gram(
        ambient_dim: usize,
        basis: IntMatrix,
        ambient_gram: RatMatrix,
    ) -> Result<Self> {
        if ambient_gram.rows != ambient_dim || ambient_gram.cols != ambient_dim {
            return Err(Error::DimensionMismatch("ambient gram shape".into()));
        }
        if !ambient_gram.is_symmetric() {
            return Err(Error::InvalidInput("ambient gram not symmetric".into()));
        }
        let mut lat = Self::plain(ambient_dim, basis)?;
        let gram = restrict_gram(&lat.basis, &ambient_gram)?;
        lat.ambient_gram = Some(ambient_gram);
        lat.gram = Some(gram);
        Ok(lat)
    }

    /// Lattice with a Gram matrix given directly on the basis.
    pub fn with_gram(ambient_dim: usize, basis: IntMatrix, gram: IntMatrix) -> Result<Self> {
        if gram.rows != basis.rows || gram.cols != basis.rows {
            return Err(Error::DimensionMismatch("gram shape".into()));
        }
        if !gram.is_symmetric() {
            return Err(Error::InvalidInput("gram not symmetric".into()));
        }
        let mut lat = Self::plain(ambient_dim, basis)?;
        lat.gram = Some(gram);
        Ok(lat)
    }

    /// Standard ℤ^n with q(x) = Σ x_i² (even gram 2·I).
    pub fn standard(n: usize) -> Self {
        let mut g = IntMatrix::zero(n, n);
        for i in 0..n {
            g[(i, i)] = BigInt::from(2);
        }
        IntLattice::with_ambient_gram(n, IntMatrix::identity(n), g.to_rational()).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    /// HNF-normalized copy (same lattice, canonical basis). Grams are
    /// recomputed from the ambient form when available, otherwise dropped.
    pub fn hnf_normalize(&self) -> Result<IntLattice> {
        let (h, _) = hnf(&self.basis);
        let basis = h.take_rows(0..hnf_rank(&h));
        match &self.ambient_gram {
            Some(ag) => IntLattice::with_ambient_gram(self.ambient_dim, basis, ag.clone()),
            None => IntLattice::plain(self.ambient_dim, basis),
        }
    }

    /// q-value of an ambient vector under the ambient polar form: x·G·xᵀ / 2.
    pub fn ambient_q(&self, v: &[BigInt]) -> Result<BigRational> {
        let ag = self
            .ambient_gram
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("lattice has no ambient gram".into()))?;
        let vr: Vec<BigRational> = v.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        let gv = row_times_rat(&vr, ag);
        let two = BigRational::from_integer(BigInt::from(2));
        Ok(vr
            .iter()
            .zip(gv.iter())
            .map(|(a, b)| a * b)
            .fold(BigRational::zero(), |a, b| a + b)
            / two)
    }

    /// q-value of a coefficient vector in terms of the basis gram.
    pub fn coeff_q(&self, c: &[BigInt]) -> Result<BigInt> {
        let g = self
            .gram
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("lattice has no gram".into()))?;
        let gv = row_times_int(c, g);
        let s: BigInt = c.iter().zip(gv.iter()).map(|(a, b)| a * b).sum();
        Ok(s / 2)
    }

    /// Membership test: does v lie in the lattice?
    pub fn contains(&self, v: &[BigInt]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        self.coefficients_of(v).is_some()
    }

    /// Integer coefficients of v on the basis, if v is in the lattice.
    pub fn coefficients_of(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        // Solve c·B = v over ℚ, then check integrality. The basis has full
        // row rank, so solve on a column-selected square submatrix.
        let b = &self.basis;
        let k = b.rows;
        if k == 0 {
            return if v.iter().all(|x| x.is_zero()) {
                Some(vec![])
            } else {
                None
            };
        }
        // Select k independent columns via HNF pivots of the transpose.
        let cols = pivot_columns(b);
        debug_assert_eq!(cols.len(), k);
        let square = RatMatrix::from_rows(
            (0..k)
                .map(|i| {
                    cols.iter()
                        .map(|&j| BigRational::from_integer(b[(i, j)].clone()))
                        .collect()
                })
                .collect(),
        );
        let rhs: Vec<BigRational> = cols
            .iter()
            .map(|&j| BigRational::from_integer(v[j].clone()))
            .collect();
        let c = square.solve_left(&rhs).ok()?;
        if !c.iter().all(|x| x.is_integer()) {
            return None;
        }
        let c: Vec<BigInt> = c.iter().map(|x| x.to_integer()).collect();
        // Confirm on all coordinates (the selected columns only determined c
        // on the row span).
        if row_times_int(&c, b) == v {
            Some(c)
        } else {
            None
        }
    }

    /// True if `other` spans the same lattice.
    pub fn same_lattice(&self, other: &IntLattice) -> bool {
        self.ambient_dim == other.ambient_dim
            && super::hnf::row_space_eq(&self.basis, &other.basis)
    }

    /// Positive definiteness of the basis gram via leading principal minors.
    pub fn is_positive_definite(&self) -> Result<bool> {
        let g = self
            .gram
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("lattice has no gram".into()))?;
        Ok(g.leading_minors().iter().all(|m| m > &BigInt::zero()))
    }
}

fn pivot_columns(b: &IntMatrix) -> Vec<usize> {
    // Columns of the first nonzero entries of the HNF rows.
    let (h, _) = hnf(b);
    let mut cols = Vec::new();
    for i in 0..h.rows {
        if let Some(j) = (0..h.cols).find(|&j| !h[(i, j)].is_zero()) {
            cols.push(j);
        }
    }
    cols
}

fn restrict_gram(basis: &IntMatrix, ambient: &RatMatrix) -> Result<IntMatrix> {
    let br = basis.to_rational();
    let g = br.mul(ambient).mul(&br.transpose());
    g.to_integer().map_err(|_| {
        Error::Invariant("restricted gram is not integral; the form is not integral on the lattice".into())
    })
}

/// Intersection of two lattices in the same ambient space. The result is in
/// HNF; its quadratic structure is restricted from the ambient form (the two
/// inputs must agree on it when both carry one).
pub fn lattice_intersect(l1: &IntLattice, l2: &IntLattice) -> Result<IntLattice> {
    if l1.ambient_dim != l2.ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "ambient {} vs {}",
            l1.ambient_dim, l2.ambient_dim
        )));
    }
    let ambient_gram = match (&l1.ambient_gram, &l2.ambient_gram) {
        (Some(a), Some(b)) => {
            if a != b {
                return Err(Error::InvalidInput(
                    "lattices carry different ambient quadratic maps".into(),
                ));
            }
            Some(a.clone())
        }
        (Some(a), None) => Some(a.clone()),
        (None, Some(b)) => Some(b.clone()),
        (None, None) => None,
    };
    // (c1, -c2) in the left kernel of [B1; B2] means c1·B1 = c2·B2.
    let stacked = l1.basis.stack(&l2.basis);
    let kernel = left_kernel(&stacked);
    let rows: Vec<Vec<BigInt>> = (0..kernel.rows)
        .map(|i| row_times_int(&kernel.row(i)[..l1.basis.rows], &l1.basis))
        .collect();
    let raw = if rows.is_empty() {
        IntMatrix::zero(0, l1.ambient_dim)
    } else {
        IntMatrix::from_rows(rows)
    };
    let (h, _) = hnf(&raw);
    let basis = h.take_rows(0..hnf_rank(&h));
    match ambient_gram {
        Some(ag) => IntLattice::with_ambient_gram(l1.ambient_dim, basis, ag),
        None => IntLattice::plain(l1.ambient_dim, basis),
    }
}

/// The sublattice {x ∈ L : x·f ∈ T}. `f` maps the ambient space of `L` to
/// the ambient space of `T` (rows act on the right); rational entries are
/// cleared by scaling both sides.
pub fn kernel_mod_lattice(f: &RatMatrix, l: &IntLattice, target: &IntLattice) -> Result<IntLattice> {
    if f.rows != l.ambient_dim || f.cols != target.ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, lattice ambient {}, target ambient {}",
            f.rows, f.cols, l.ambient_dim, target.ambient_dim
        )));
    }
    // Clear denominators: x·f ∈ T ⟺ x·(d·f) ∈ d·T.
    let mut den = BigInt::from(1);
    for i in 0..f.rows {
        for x in f.row(i) {
            den = num_integer::lcm(den, x.denom().clone());
        }
    }
    let fi = IntMatrix::from_rows(
        (0..f.rows)
            .map(|i| {
                f.row(i)
                    .iter()
                    .map(|x| (x * BigRational::from_integer(den.clone())).to_integer())
                    .collect()
            })
            .collect(),
    );
    let tgt = IntMatrix::from_rows(
        (0..target.basis.rows)
            .map(|i| target.basis.row(i).iter().map(|x| x * &den).collect())
            .collect::<Vec<Vec<BigInt>>>(),
    );
    let tgt = if target.basis.rows == 0 {
        IntMatrix::zero(0, target.ambient_dim)
    } else {
        tgt
    };

    // c·(B_L·f) = d·(den·B_T) for some integer d ⟺ (c, d) in the left kernel
    // of the stacked matrix.
    let bf = l.basis.mul(&fi);
    let stacked = bf.stack(&tgt);
    let kernel = left_kernel(&stacked);
    let rows: Vec<Vec<BigInt>> = (0..kernel.rows)
        .map(|i| row_times_int(&kernel.row(i)[..l.basis.rows], &l.basis))
        .collect();
    let raw = if rows.is_empty() {
        IntMatrix::zero(0, l.ambient_dim)
    } else {
        IntMatrix::from_rows(rows)
    };
    let (h, _) = hnf(&raw);
    let basis = h.take_rows(0..hnf_rank(&h));
    match &l.ambient_gram {
        Some(ag) => IntLattice::with_ambient_gram(l.ambient_dim, basis, ag.clone()),
        None => IntLattice::plain(l.ambient_dim, basis),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn scaled(n: usize, c: i64) -> IntLattice {
        let mut b = IntMatrix::zero(n, n);
        for i in 0..n {
            b[(i, i)] = BigInt::from(c);
        }
        let std = IntLattice::standard(n);
        IntLattice::with_ambient_gram(n, b, std.ambient_gram.unwrap()).unwrap()
    }

    #[test]
    fn intersect_scaled_copies() {
        let z2 = IntLattice::standard(2);
        let two_z2 = scaled(2, 2);
        let i = lattice_intersect(&z2, &two_z2).unwrap();
        assert!(i.same_lattice(&two_z2));
        // q restricted: q(2e_1) = 4
        assert_eq!(i.gram.as_ref().unwrap()[(0, 0)], BigInt::from(8));
    }

    #[test]
    fn intersect_line_with_doubled() {
        let line = IntLattice::with_ambient_gram(
            2,
            IntMatrix::from_i64(&[&[1, 1]]),
            IntLattice::standard(2).ambient_gram.unwrap(),
        )
        .unwrap();
        let two_z2 = scaled(2, 2);
        let i = lattice_intersect(&line, &two_z2).unwrap();
        assert_eq!(i.basis, IntMatrix::from_i64(&[&[2, 2]]));
    }

    #[test]
    fn intersect_idempotent_and_commutative() {
        let l = IntLattice::plain(2, IntMatrix::from_i64(&[&[2, 1], &[0, 3]])).unwrap();
        let l2 = IntLattice::plain(2, IntMatrix::from_i64(&[&[1, 1], &[0, 5]])).unwrap();
        let a = lattice_intersect(&l, &l2).unwrap();
        let b = lattice_intersect(&l2, &l).unwrap();
        assert!(a.same_lattice(&b));
        let c = lattice_intersect(&l, &l).unwrap();
        assert!(c.same_lattice(&l));
    }

    #[test]
    fn kernel_mod_zero_map_returns_l() {
        let l = IntLattice::standard(2);
        let f = RatMatrix::zero(2, 1);
        let t = IntLattice::plain(1, IntMatrix::zero(0, 1)).unwrap();
        let k = kernel_mod_lattice(&f, &l, &t).unwrap();
        assert!(k.same_lattice(&l));
    }

    #[test]
    fn kernel_mod_identity_into_doubled() {
        let l = IntLattice::standard(2);
        let f = RatMatrix::identity(2);
        let t = IntLattice::plain(2, IntMatrix::from_i64(&[&[2, 0], &[0, 2]])).unwrap();
        let k = kernel_mod_lattice(&f, &l, &t).unwrap();
        assert!(k.same_lattice(&scaled(2, 2)));
    }

    #[test]
    fn kernel_mod_sum_parity() {
        // x1+x2+x3 ∈ 2ℤ: index-2 sublattice of ℤ³.
        let l = IntLattice::standard(3);
        let f = RatMatrix::from_rows(vec![
            vec![BigRational::from_integer(BigInt::from(1))],
            vec![BigRational::from_integer(BigInt::from(1))],
            vec![BigRational::from_integer(BigInt::from(1))],
        ]);
        let t = IntLattice::plain(1, IntMatrix::from_i64(&[&[2]])).unwrap();
        let k = kernel_mod_lattice(&f, &l, &t).unwrap();
        assert_eq!(k.rank(), 3);
        for v in [[1i64, 1, 0], [0, 1, 1], [2, 0, 0]] {
            let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            assert!(k.contains(&v), "{v:?} should be in the parity sublattice");
        }
        let odd: Vec<BigInt> = [1i64, 0, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert!(!k.contains(&odd));
        // Index 2 in ℤ³.
        assert_eq!(k.basis.det().abs(), BigInt::from(2));
    }

    #[test]
    fn membership_and_coefficients() {
        let l = IntLattice::plain(3, IntMatrix::from_i64(&[&[1, 2, 0], &[0, 4, 1]])).unwrap();
        let v: Vec<BigInt> = [2i64, 8, 1].iter().map(|&x| BigInt::from(x)).collect();
        let c = l.coefficients_of(&v).unwrap();
        assert_eq!(c, vec![BigInt::from(2), BigInt::from(1)]);
        let w: Vec<BigInt> = [1i64, 0, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert!(!l.contains(&w));
    }
}
