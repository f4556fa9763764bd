use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::lattice::IntLattice;
use super::matrix::{row_times_int, RatMatrix};
use crate::error::{Error, Result};

/// All lattice vectors v with q(v) = target, in ambient coordinates, sorted
/// lexicographically by coordinates. Exact rational Cholesky inside; the gram
/// must be positive definite.
///
/// The output lists every vector (both signs), and the zero vector alone when
/// target = 0.
pub fn fincke_pohst(lattice: &IntLattice, target: &BigInt) -> Result<Vec<Vec<BigInt>>> {
    if target.is_negative() {
        return Ok(vec![]);
    }
    let gram = lattice
        .gram
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("enumeration needs a gram".into()))?;
    if !lattice.is_positive_definite()? {
        return Err(Error::NotPositiveDefinite(
            "fincke_pohst requires a definite gram".into(),
        ));
    }
    let n = lattice.rank();
    if n == 0 {
        return Ok(if target.is_zero() {
            vec![vec![BigInt::zero(); lattice.ambient_dim]]
        } else {
            vec![]
        });
    }

    // q(x) = Σ_i d_i (x_i + Σ_{j>i} u_ij x_j)², the exact Cholesky/LDL
    // splitting of Q = gram/2.
    let two = BigRational::from_integer(BigInt::from(2));
    let mut q = RatMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            q[(i, j)] = BigRational::from_integer(gram[(i, j)].clone()) / two.clone();
        }
    }
    let (d, u) = ldl(&q)?;

    let t = BigRational::from_integer(target.clone());
    let mut coeffs = vec![BigInt::zero(); n];
    let mut found: Vec<Vec<BigInt>> = Vec::new();
    enumerate_level(n, &d, &u, &t, &mut coeffs, n, &mut found);

    let mut out: Vec<Vec<BigInt>> = found
        .into_iter()
        .map(|c| row_times_int(&c, &lattice.basis))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// LDL^T of a symmetric positive definite rational matrix:
/// q(x) = Σ d_i (x_i + Σ_{j>i} u_ij x_j)².
fn ldl(q: &RatMatrix) -> Result<(Vec<BigRational>, RatMatrix)> {
    let n = q.rows;
    let mut a = q.clone();
    let mut d = vec![BigRational::zero(); n];
    let mut u = RatMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..i {
            // a[i][*] -= contributions of earlier pivots
            let f = u[(j, i)].clone();
            if f.is_zero() {
                continue;
            }
            for k in i..n {
                let t = &f * &u[(j, k)] * &d[j];
                a[(i, k)] -= t;
            }
        }
        d[i] = a[(i, i)].clone();
        if !d[i].is_positive() {
            return Err(Error::NotPositiveDefinite("pivot not positive".into()));
        }
        u[(i, i)] = BigRational::from_integer(BigInt::from(1));
        for k in i + 1..n {
            u[(i, k)] = &a[(i, k)] / &d[i];
        }
    }
    Ok((d, u))
}

/// Depth-first enumeration over coordinates n-1, n-2, ..., 0; `level` is the
/// number of still-unset coordinates. `remaining` is the budget
/// target − Σ_{i ≥ level} d_i (x_i + shift_i)².
fn enumerate_level(
    n: usize,
    d: &[BigRational],
    u: &RatMatrix,
    remaining: &BigRational,
    coeffs: &mut Vec<BigInt>,
    level: usize,
    found: &mut Vec<Vec<BigInt>>,
) {
    if level == 0 {
        if remaining.is_zero() {
            found.push(coeffs.clone());
        }
        return;
    }
    let i = level - 1;
    // shift = Σ_{j>i} u_ij x_j
    let mut shift = BigRational::zero();
    for j in i + 1..n {
        if !u[(i, j)].is_zero() {
            shift += &u[(i, j)] * BigRational::from_integer(coeffs[j].clone());
        }
    }
    // d_i (x + shift)² ≤ remaining
    let bound = remaining / &d[i];
    let (lo, hi) = integer_interval(&shift, &bound);
    let mut x = lo;
    while x <= hi {
        let xi = BigRational::from_integer(x.clone()) + &shift;
        let used = &d[i] * &xi * &xi;
        let rem = remaining - used;
        if !rem.is_negative() {
            coeffs[i] = x.clone();
            enumerate_level(n, d, u, &rem, coeffs, i, found);
        }
        x += 1;
    }
    coeffs[i] = BigInt::zero();
}

/// Exact integer solutions of (x + s)² ≤ b: [ceil(−√b − s), floor(√b − s)].
fn integer_interval(s: &BigRational, b: &BigRational) -> (BigInt, BigInt) {
    if b.is_negative() {
        return (BigInt::from(1), BigInt::zero()); // empty
    }
    // floor(√b − s): largest x with (x+s)² ≤ b and x+s ≥ 0-side handled by
    // scanning from an isqrt-based estimate and fixing up exactly.
    let est_hi = rational_sqrt_floor(b) - crate::arith::rational_floor(s);
    let mut hi: BigInt = est_hi + 2;
    loop {
        let v = BigRational::from_integer(hi.clone()) + s;
        if &(&v * &v) <= b {
            break;
        }
        hi -= 1;
    }
    let est_lo = -rational_sqrt_floor(b) - crate::arith::rational_ceil(s);
    let mut lo: BigInt = est_lo - 2;
    loop {
        let v = BigRational::from_integer(lo.clone()) + s;
        if &(&v * &v) <= b {
            break;
        }
        lo += 1;
    }
    (lo, hi)
}

/// floor(√(num/den)) for a nonnegative rational.
fn rational_sqrt_floor(q: &BigRational) -> BigInt {
    debug_assert!(!q.is_negative());
    let prod = q.numer() * q.denom();
    crate::arith::isqrt(&prod) / q.denom()
}
