use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, RatMatrix};
use crate::arith::{factor, legendre, valuation_rational};
use crate::error::{Error, Result};

/// A place of ℚ: a finite prime or the real place.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Place {
    Infinity,
    Prime(i64),
}

/// Diagonal rational quadratic form; every coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFormDiag {
    pub coefficients: Vec<BigRational>,
}

impl QFormDiag {
    pub fn rank(&self) -> usize {
        self.coefficients.len()
    }

    /// det of the form = product of the coefficients (well defined up to
    /// squares; compare square classes with `same_det_class`).
    pub fn det(&self) -> BigRational {
        self.coefficients
            .iter()
            .fold(BigRational::one(), |a, b| a * b)
    }

    /// Same determinant square class: det₁·det₂ is a rational square.
    pub fn same_det_class(&self, other: &QFormDiag) -> bool {
        let p = self.det() * other.det();
        let n = p.numer() * p.denom();
        crate::arith::exact_sqrt(&n).is_some()
    }
}

/// Congruence diagonalization of a symmetric rational matrix, read as the
/// form q(x) = x·G·xᵀ. Symmetric Gaussian elimination with symmetric
/// pivoting; the product of the output entries equals det(G) up to a nonzero
/// rational square.
pub fn diagonalize_rational(gram: &RatMatrix) -> Result<QFormDiag> {
    if !gram.is_symmetric() {
        return Err(Error::InvalidInput("gram not symmetric".into()));
    }
    if gram.det().is_zero() {
        return Err(Error::Degenerate("form is degenerate".into()));
    }
    let n = gram.rows;
    let mut a = gram.clone();
    let mut coefficients = Vec::with_capacity(n);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            // Prefer a later index with nonzero diagonal; otherwise make one
            // with a symmetric row+column addition.
            if let Some(i) = (k + 1..n).find(|&i| !a[(i, i)].is_zero()) {
                swap_sym(&mut a, k, i);
            } else {
                let j = (k + 1..n)
                    .find(|&j| !a[(k, j)].is_zero())
                    .ok_or_else(|| Error::Degenerate("degenerate block".into()))?;
                // x_k ← x_k + x_j puts 2·a[k][j] on the diagonal.
                add_sym(&mut a, k, j);
            }
        }
        let piv = a[(k, k)].clone();
        coefficients.push(piv.clone());
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &piv;
            for j in k..n {
                let t = &f * &a[(k, j)];
                a[(i, j)] -= t;
            }
            for j in k..n {
                let t = &f * &a[(j, k)];
                a[(j, i)] -= t;
            }
        }
    }
    Ok(QFormDiag { coefficients })
}

/// Integer-matrix entry point; see `diagonalize_rational`.
pub fn diagonalize_over_q(gram: &IntMatrix) -> Result<QFormDiag> {
    diagonalize_rational(&gram.to_rational())
}

fn swap_sym(a: &mut RatMatrix, i: usize, j: usize) {
    let n = a.rows;
    for k in 0..n {
        let x = a[(i, k)].clone();
        a[(i, k)] = std::mem::replace(&mut a[(j, k)], x);
    }
    for k in 0..n {
        let x = a[(k, i)].clone();
        a[(k, i)] = std::mem::replace(&mut a[(k, j)], x);
    }
}

fn add_sym(a: &mut RatMatrix, i: usize, j: usize) {
    let n = a.rows;
    for k in 0..n {
        let t = a[(j, k)].clone();
        a[(i, k)] += t;
    }
    for k in 0..n {
        let t = a[(k, j)].clone();
        a[(k, i)] += t;
    }
}

/// Hilbert symbol (a, b)_v ∈ {±1}: 1 iff z² = a·x² + b·y² has a nontrivial
/// solution over the completion at v.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, place: Place) -> Result<i32> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidInput("hilbert symbol needs nonzero entries".into()));
    }
    match place {
        Place::Infinity => Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 }),
        Place::Prime(2) => Ok(hilbert_two(a, b)),
        Place::Prime(p) => {
            if p < 2 || !crate::arith::is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            Ok(hilbert_odd(a, b, p))
        }
    }
}

fn hilbert_odd(a: &BigRational, b: &BigRational, p: i64) -> i32 {
    let pb = BigInt::from(p);
    let alpha = valuation_rational(a, &pb);
    let beta = valuation_rational(b, &pb);
    let u = crate::arith::unit_part_mod(a, &pb, 1);
    let v = crate::arith::unit_part_mod(b, &pb, 1);
    let eps = ((p - 1) / 2) % 2; // (p-1)/2 mod 2
    let mut sym = 1i32;
    if (alpha * beta) % 2 != 0 && eps == 1 {
        sym = -sym;
    }
    if beta % 2 != 0 {
        sym *= legendre(&u, p);
    }
    if alpha % 2 != 0 {
        sym *= legendre(&v, p);
    }
    sym
}

fn hilbert_two(a: &BigRational, b: &BigRational) -> i32 {
    let two = BigInt::from(2);
    let alpha = valuation_rational(a, &two);
    let beta = valuation_rational(b, &two);
    let u = crate::arith::unit_part_mod(a, &two, 3); // odd unit mod 8
    let v = crate::arith::unit_part_mod(b, &two, 3);
    let eps = |x: &BigInt| -> i64 {
        // (x−1)/2 mod 2 for odd x mod 8
        let m: i64 = x.mod_floor(&BigInt::from(8)).to_string().parse().unwrap();
        ((m - 1) / 2).rem_euclid(2)
    };
    let omega = |x: &BigInt| -> i64 {
        // (x²−1)/8 mod 2 for odd x mod 8
        let m: i64 = x.mod_floor(&BigInt::from(8)).to_string().parse().unwrap();
        ((m * m - 1) / 8).rem_euclid(2)
    };
    let e = eps(&u) * eps(&v) + alpha.rem_euclid(2) * omega(&v) + beta.rem_euclid(2) * omega(&u);
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Hasse invariant of a diagonal form at a place: Π_{i<j} (a_i, a_j)_v.
pub fn hasse_invariant(d: &QFormDiag, place: Place) -> Result<i32> {
    let mut sym = 1i32;
    for i in 0..d.coefficients.len() {
        for j in i + 1..d.coefficients.len() {
            sym *= hilbert_symbol(&d.coefficients[i], &d.coefficients[j], place)?;
        }
    }
    Ok(sym)
}

/// All places where either argument could ramify: 2, ∞, and the primes of
/// the numerators/denominators. Used by product-formula tests.
pub fn relevant_places(values: &[BigRational]) -> Vec<Place> {
    let mut primes = vec![2i64];
    for v in values {
        for (p, _) in factor(v.numer()).into_iter().chain(factor(v.denom())) {
            let p: i64 = p.to_string().parse().unwrap();
            if !primes.contains(&p) {
                primes.push(p);
            }
        }
    }
    primes.sort_unstable();
    let mut places: Vec<Place> = primes.into_iter().map(Place::Prime).collect();
    places.push(Place::Infinity);
    places
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn ratq(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn diagonal_stays_diagonal() {
        let d = diagonalize_over_q(&IntMatrix::from_i64(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(d.coefficients, vec![rat(1), rat(1)]);
    }

    #[test]
    fn hyperbolic_plane() {
        let d = diagonalize_over_q(&IntMatrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        // (1, −1) up to squares: product is −1·square, and signs are (+, −).
        assert_eq!(d.rank(), 2);
        let prod = d.det();
        assert!(prod.is_negative());
        let signs: Vec<bool> = d.coefficients.iter().map(|c| c.is_positive()).collect();
        assert_eq!(signs.iter().filter(|&&s| s).count(), 1);
        assert!(d.same_det_class(&QFormDiag {
            coefficients: vec![rat(1), rat(-1)]
        }));
    }

    #[test]
    fn off_diagonal_example() {
        let d = diagonalize_over_q(&IntMatrix::from_i64(&[&[2, 1], &[1, 2]])).unwrap();
        assert_eq!(d.coefficients, vec![rat(2), ratq(3, 2)]);
        // det preserved up to squares: 2·(3/2) = 3 = det([[2,1],[1,2]]).
        assert!(d.same_det_class(&QFormDiag {
            coefficients: vec![rat(3), rat(1)]
        }));
    }

    #[test]
    fn degenerate_rejected() {
        assert!(diagonalize_over_q(&IntMatrix::from_i64(&[&[1, 1], &[1, 1]])).is_err());
    }

    #[test]
    fn hilbert_trivial_first_argument() {
        for b in [-7i64, -2, -1, 2, 3, 10] {
            for place in [Place::Infinity, Place::Prime(2), Place::Prime(3), Place::Prime(7)] {
                assert_eq!(hilbert_symbol(&rat(1), &rat(b), place).unwrap(), 1);
            }
        }
    }

    #[test]
    fn hilbert_minus_one_minus_one() {
        assert_eq!(
            hilbert_symbol(&rat(-1), &rat(-1), Place::Infinity).unwrap(),
            -1
        );
        // z² + x² + y² ≡ 0 mod 8 has no primitive solution.
        assert_eq!(
            hilbert_symbol(&rat(-1), &rat(-1), Place::Prime(2)).unwrap(),
            -1
        );
        assert_eq!(
            hilbert_symbol(&rat(-1), &rat(-1), Place::Prime(3)).unwrap(),
            1
        );
    }

    #[test]
    fn hilbert_bilinear_and_product_formula() {
        let vals = [-6i64, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10, 15];
        for &a in &vals {
            for &b in &vals {
                for &c in &vals[..6] {
                    for place in [Place::Infinity, Place::Prime(2), Place::Prime(3), Place::Prime(5)] {
                        let ab = hilbert_symbol(&rat(a), &rat(b), place).unwrap();
                        let ac = hilbert_symbol(&rat(a), &rat(c), place).unwrap();
                        let abc = hilbert_symbol(&rat(a), &rat(b * c), place).unwrap();
                        assert_eq!(ab * ac, abc, "bilinearity at {place:?} for ({a},{b},{c})");
                    }
                }
                let places = relevant_places(&[rat(a), rat(b)]);
                let prod: i32 = places
                    .iter()
                    .map(|&v| hilbert_symbol(&rat(a), &rat(b), v).unwrap())
                    .product();
                assert_eq!(prod, 1, "product formula for ({a},{b})");
            }
        }
    }

    #[test]
    fn hasse_examples() {
        let rank1 = QFormDiag {
            coefficients: vec![rat(5)],
        };
        assert_eq!(hasse_invariant(&rank1, Place::Prime(5)).unwrap(), 1);
        let ones = QFormDiag {
            coefficients: vec![rat(1); 5],
        };
        for p in [2i64, 3, 5, 7] {
            assert_eq!(hasse_invariant(&ones, Place::Prime(p)).unwrap(), 1);
        }
        let neg = QFormDiag {
            coefficients: vec![rat(-1), rat(-1)],
        };
        assert_eq!(hasse_invariant(&neg, Place::Prime(2)).unwrap(), -1);
    }
}
