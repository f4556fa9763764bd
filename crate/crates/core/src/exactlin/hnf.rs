use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Row Hermite normal form with transformation: returns (H, U) where U is
/// unimodular, H = U·m, pivots are positive, entries above a pivot are
/// reduced into [0, pivot), and zero rows sit at the bottom. The row span of
/// H equals the row span of m.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut pivot_row = 0usize;
    let mut pivots: Vec<(usize, usize)> = Vec::new();

    for col in 0..h.cols {
        if pivot_row == h.rows {
            break;
        }
        // Euclid on rows: kill entries below pivot_row in this column.
        loop {
            let mut nonzero: Vec<usize> = (pivot_row..h.rows)
                .filter(|&i| !h[(i, col)].is_zero())
                .collect();
            if nonzero.is_empty() {
                break;
            }
            if nonzero.len() == 1 {
                let i = nonzero[0];
                h.swap_rows(pivot_row, i);
                u.swap_rows(pivot_row, i);
                break;
            }
            // Pick the row with the smallest nonzero |entry| and reduce the rest.
            nonzero.sort_by(|&a, &b| h[(a, col)].abs().cmp(&h[(b, col)].abs()));
            let best = nonzero[0];
            h.swap_rows(pivot_row, best);
            u.swap_rows(pivot_row, best);
            let piv = h[(pivot_row, col)].clone();
            for i in pivot_row + 1..h.rows {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = h[(i, col)].div_floor(&piv);
                if !q.is_zero() {
                    let negq = -q;
                    h.add_multiple_of_row(i, pivot_row, &negq);
                    u.add_multiple_of_row(i, pivot_row, &negq);
                }
            }
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }

    // Reduce entries above each pivot into [0, pivot).
    for &(r, c) in pivots.iter() {
        let piv = h[(r, c)].clone();
        for i in 0..r {
            let q = h[(i, c)].div_floor(&piv);
            if !q.is_zero() {
                let negq = -q;
                h.add_multiple_of_row(i, r, &negq);
                u.add_multiple_of_row(i, r, &negq);
            }
        }
    }

    debug_assert_eq!(u.mul(m), h);
    (h, u)
}

/// Number of nonzero rows of an HNF matrix.
pub fn hnf_rank(h: &IntMatrix) -> usize {
    (0..h.rows).filter(|&i| !h.is_zero_row(i)).count()
}

/// Basis of the left kernel {v : v·m = 0}, as rows (an HNF basis).
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let (h, u) = hnf(m);
    let rows: Vec<Vec<BigInt>> = (0..h.rows)
        .filter(|&i| h.is_zero_row(i))
        .map(|i| u.row_vec(i))
        .collect();
    if rows.is_empty() {
        return IntMatrix::zero(0, m.rows);
    }
    let (k, _) = hnf(&IntMatrix::from_rows(rows));
    k.take_rows(0..hnf_rank(&k))
}

/// True when two matrices span the same row lattice over the integers.
pub fn row_space_eq(a: &IntMatrix, b: &IntMatrix) -> bool {
    if a.cols != b.cols {
        return false;
    }
    let (ha, _) = hnf(a);
    let (hb, _) = hnf(b);
    let ra = hnf_rank(&ha);
    let rb = hnf_rank(&hb);
    ra == rb && ha.take_rows(0..ra) == hb.take_rows(0..rb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn already_hnf_stays_put() {
        let m = IntMatrix::from_i64(&[&[2, 0], &[0, 2]]);
        let (h, u) = hnf(&m);
        assert_eq!(h, m);
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn two_by_two_example() {
        let m = IntMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let (h, u) = hnf(&m);
        assert_eq!(h, IntMatrix::from_i64(&[&[1, 0], &[0, 2]]));
        assert_eq!(u.mul(&m), h);
        assert_eq!(u.det().abs(), BigInt::from(1));
        // |det| preserved up to sign by a unimodular transform.
        assert_eq!(h.det().abs(), BigInt::from(2));
    }

    #[test]
    fn zero_row_preserved() {
        let m = IntMatrix::from_i64(&[&[0, 0]]);
        let (h, _) = hnf(&m);
        assert_eq!(h, m);
    }

    #[test]
    fn idempotent_on_row_span() {
        let m = IntMatrix::from_i64(&[&[4, 6, 2], &[6, 9, 3], &[2, 4, 2]]);
        let (h, u) = hnf(&m);
        assert_eq!(u.mul(&m), h);
        assert_eq!(u.det().abs(), BigInt::from(1));
        let (h2, _) = hnf(&h);
        assert_eq!(h, h2);
        assert!(row_space_eq(&m, &h));
    }

    #[test]
    fn kernel_of_rank_deficient() {
        let m = IntMatrix::from_i64(&[&[1, 1], &[2, 2], &[1, 0]]);
        let k = left_kernel(&m);
        assert_eq!(k.rows, 1);
        // (2, -1, 0) spans the kernel.
        assert_eq!(k.row_vec(0), vec![BigInt::from(2), BigInt::from(-1), BigInt::zero()]);
    }

    #[test]
    fn kernel_of_injective_is_empty() {
        let m = IntMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        let k = left_kernel(&m);
        assert_eq!(k.rows, 0);
    }

    #[test]
    fn negative_pivots_normalized() {
        let m = IntMatrix::from_i64(&[&[-3, 0], &[0, -5]]);
        let (h, _) = hnf(&m);
        assert_eq!(h, IntMatrix::from_i64(&[&[3, 0], &[0, 5]]));
    }
}
