//! Brute-force cross-checks. These deliberately avoid the algorithms they
//! validate: the box enumerator below knows nothing about the Cholesky
//! recursion inside `fincke_pohst` beyond a per-coordinate bound derived from
//! the inverse Gram, and is used to certify enumeration results on small
//! lattices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::IntLattice;

/// Every lattice vector with q(v) = target, found by scanning the full
/// coordinate box |x_i| ≤ √(target·(Q⁻¹)_ii). Exponential in the rank; only
/// for desk-scale validation.
pub fn naive_enumerate(lattice: &IntLattice, target: &BigInt) -> Result<Vec<Vec<BigInt>>> {
    if target.is_negative() {
        return Ok(vec![]);
    }
    let gram = lattice
        .gram
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("enumeration needs a gram".into()))?;
    let n = lattice.rank();
    if n == 0 {
        return Ok(if target.is_zero() {
            vec![vec![BigInt::zero(); lattice.ambient_dim]]
        } else {
            vec![]
        });
    }
    // Q = gram/2; for x Q xᵀ ≤ t every coordinate satisfies x_i² ≤ t·(Q⁻¹)_ii.
    let two = BigRational::from_integer(BigInt::from(2));
    let q = {
        let mut m = gram.to_rational();
        for i in 0..n {
            for j in 0..n {
                let v = m[(i, j)].clone() / two.clone();
                m[(i, j)] = v;
            }
        }
        m
    };
    let qinv = q.inverse()?;
    let t = BigRational::from_integer(target.clone());
    let bounds: Vec<BigInt> = (0..n)
        .map(|i| {
            let b = &t * &qinv[(i, i)];
            let prod = b.numer() * b.denom();
            if prod.is_negative() {
                BigInt::zero()
            } else {
                crate::arith::isqrt(&prod) / b.denom()
            }
        })
        .collect();

    let mut out = Vec::new();
    let mut coeffs = vec![BigInt::zero(); n];
    scan(lattice, &bounds, target, 0, &mut coeffs, &mut out)?;
    out.sort();
    Ok(out)
}

fn scan(
    lattice: &IntLattice,
    bounds: &[BigInt],
    target: &BigInt,
    i: usize,
    coeffs: &mut Vec<BigInt>,
    out: &mut Vec<Vec<BigInt>>,
) -> Result<()> {
    if i == bounds.len() {
        if &lattice.coeff_q(coeffs)? == target {
            let v: Vec<BigInt> = (0..lattice.ambient_dim)
                .map(|j| {
                    coeffs
                        .iter()
                        .enumerate()
                        .map(|(k, c)| c * &lattice.basis[(k, j)])
                        .sum()
                })
                .collect();
            out.push(v);
        }
        return Ok(());
    }
    let mut x = -bounds[i].clone();
    while x <= bounds[i] {
        coeffs[i] = x.clone();
        scan(lattice, bounds, target, i + 1, coeffs, out)?;
        x += 1;
    }
    coeffs[i] = BigInt::zero();
    Ok(())
}
