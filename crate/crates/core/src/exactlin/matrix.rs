use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense matrix of arbitrary-precision integers, row major. Vectors are rows
/// throughout the crate; a linear map sends `v` to `v · m`.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<BigInt> {
        self.row(i).to_vec()
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[BigInt]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(|x| x.is_zero())
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            let a = i * self.cols + k;
            let b = j * self.cols + k;
            self.entries.swap(a, b);
        }
    }

    /// row[i] += c · row[j]
    pub fn add_multiple_of_row(&mut self, i: usize, j: usize, c: &BigInt) {
        for k in 0..self.cols {
            let t = &self.entries[j * self.cols + k] * c;
            self.entries[i * self.cols + k] += t;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let idx = i * self.cols + k;
            let v = -self.entries[idx].clone();
            self.entries[idx] = v;
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    /// Vertical stack: self on top of other.
    pub fn stack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "stack width");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn take_rows(&self, range: std::ops::Range<usize>) -> IntMatrix {
        IntMatrix::from_rows(range.map(|i| self.row_vec(i)).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    /// Bareiss fraction-free determinant.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = &t / &prev;
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    /// Leading principal minors det(A[..k, ..k]) for k = 1..=n.
    pub fn leading_minors(&self) -> Vec<BigInt> {
        (1..=self.rows)
            .map(|k| {
                IntMatrix::from_rows(
                    (0..k).map(|i| self.row(i)[..k].to_vec()).collect(),
                )
                .det()
            })
            .collect()
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(
                f,
                "  [{}]",
                self.row(i)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        write!(f, "]")
    }
}

/// Dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    /// Gauss-Jordan inverse; errors on singular input.
    pub fn inverse(&self) -> Result<RatMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !a[(i, col)].is_zero()) else {
                return Err(Error::Degenerate("singular matrix".into()));
            };
            for j in 0..n {
                let x = a.entries[p * n + j].clone();
                a.entries[p * n + j] = std::mem::replace(&mut a.entries[col * n + j], x);
                let y = inv.entries[p * n + j].clone();
                inv.entries[p * n + j] = std::mem::replace(&mut inv.entries[col * n + j], y);
            }
            let piv = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] /= piv.clone();
                inv[(col, j)] /= piv.clone();
            }
            for i in 0..n {
                if i == col || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in 0..n {
                    let t = &f * &a[(col, j)];
                    a[(i, j)] -= t;
                    let t = &f * &inv[(col, j)];
                    inv[(i, j)] -= t;
                }
            }
        }
        Ok(inv)
    }

    pub fn det(&self) -> BigRational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !a[(i, col)].is_zero()) else {
                return BigRational::zero();
            };
            if p != col {
                for j in 0..n {
                    let x = a.entries[p * n + j].clone();
                    a.entries[p * n + j] = std::mem::replace(&mut a.entries[col * n + j], x);
                }
                det = -det;
            }
            let piv = a[(col, col)].clone();
            det *= piv.clone();
            for i in col + 1..n {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let f = &a[(i, col)] / &piv;
                for j in col..n {
                    let t = &f * &a[(col, j)];
                    a[(i, j)] -= t;
                }
            }
        }
        det
    }

    /// Solves x · self = rhs for a row vector x, if self is square invertible.
    pub fn solve_left(&self, rhs: &[BigRational]) -> Result<Vec<BigRational>> {
        let inv = self.inverse()?;
        assert_eq!(rhs.len(), self.rows);
        Ok((0..inv.cols)
            .map(|j| {
                (0..inv.rows)
                    .map(|k| &rhs[k] * &inv[(k, j)])
                    .fold(BigRational::zero(), |a, b| a + b)
            })
            .collect())
    }

    /// True when every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }

    pub fn to_integer(&self) -> Result<IntMatrix> {
        if !self.is_integral() {
            return Err(Error::Invariant("matrix has non-integral entries".into()));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x.to_integer()).collect(),
        })
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.entries[i * self.cols + j]
    }
}

impl std::fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(
                f,
                "  [{}]",
                self.row(i)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        write!(f, "]")
    }
}

/// Row-vector times matrix helpers used all over the lattice code.
pub(crate) fn row_times_int(v: &[BigInt], m: &IntMatrix) -> Vec<BigInt> {
    assert_eq!(v.len(), m.rows);
    (0..m.cols)
        .map(|j| v.iter().zip(0..m.rows).map(|(c, i)| c * &m[(i, j)]).sum())
        .collect()
}

pub(crate) fn row_times_rat(v: &[BigRational], m: &RatMatrix) -> Vec<BigRational> {
    assert_eq!(v.len(), m.rows);
    (0..m.cols)
        .map(|j| {
            v.iter()
                .zip(0..m.rows)
                .map(|(c, i)| c * &m[(i, j)])
                .fold(BigRational::zero(), |a, b| a + b)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_bareiss() {
        let m = IntMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det(), BigInt::from(-2));
        let m = IntMatrix::from_i64(&[&[2, 0, 1], &[0, 2, 1], &[1, 1, 2]]);
        assert_eq!(m.det(), BigInt::from(4));
        let m = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.det(), BigInt::from(-1));
        let m = IntMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.det(), BigInt::zero());
    }

    #[test]
    fn rational_inverse_roundtrip() {
        let m = IntMatrix::from_i64(&[&[2, 1], &[1, 1]]).to_rational();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
    }

    #[test]
    fn solve_left_vector() {
        let m = IntMatrix::from_i64(&[&[1, 2], &[3, 5]]).to_rational();
        let rhs: Vec<BigRational> = [7, 17]
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        let x = m.solve_left(&rhs).unwrap();
        assert_eq!(row_times_rat(&x, &m), rhs);
    }
}
