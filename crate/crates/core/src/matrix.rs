//! Dense matrices over an exact coefficient ring, with the fraction-free
//! kernels this crate actually needs: determinant and rank by Bareiss
//! elimination over the integers, and Pfaffians both by skew elimination
//! (fast, rational entries) and by the combinatorial matchings expansion
//! (any ring, used for small symbolic matrices).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{Rational, Ring};

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    /// Builds a matrix from rows, which must all have the same length.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::shape("ragged rows"));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// `A == -A^T`, including a zero diagonal.
    pub fn is_antisymmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            if !self.get(i, i).is_zero() {
                return false;
            }
            for j in i + 1..self.cols {
                if self.get(i, j).clone() + self.get(j, i).clone() != R::zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Removes the listed row/column indices (0-based) from a square matrix.
    pub fn delete_rows_cols(&self, skip: &[usize]) -> Matrix<R> {
        let keep: Vec<usize> = (0..self.rows).filter(|i| !skip.contains(i)).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|j| !skip.contains(j)).collect();
        let mut data = Vec::with_capacity(keep.len() * keep_c.len());
        for &i in &keep {
            for &j in &keep_c {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: keep.len(),
            cols: keep_c.len(),
            data,
        }
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for (j, vj) in v.iter().enumerate() {
                    acc = acc + self.get(i, j).clone() * vj.clone();
                }
                acc
            })
            .collect()
    }

    /// Pfaffian by the matchings expansion: works over any ring, cost grows
    /// like a double factorial, so keep the order small (we use it up to 8).
    pub fn pfaffian_expansion(&self) -> Result<R> {
        self.check_skew()?;
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.pf_rec(&idx))
    }

    fn pf_rec(&self, idx: &[usize]) -> R {
        if idx.is_empty() {
            return R::one();
        }
        let l0 = idx[0];
        let mut acc = R::zero();
        let mut positive = true;
        for t in 1..idx.len() {
            let entry = self.get(l0, idx[t]);
            if !entry.is_zero() {
                let rest: Vec<usize> = idx[1..]
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != t - 1)
                    .map(|(_, &v)| v)
                    .collect();
                let term = entry.clone() * self.pf_rec(&rest);
                acc = if positive { acc + term } else { acc - term };
            }
            positive = !positive;
        }
        acc
    }

    /// Pfaffians of all principal `k x k` submatrices (row set = column set),
    /// one per size-`k` index subset, subsets in lexicographic order.
    pub fn principal_subpfaffians(&self, k: usize) -> Result<Vec<R>> {
        self.check_skew()?;
        if !k.is_multiple_of(2) {
            return Err(Error::OddOrder(k));
        }
        if k > self.rows {
            return Err(Error::shape(format!(
                "subpfaffian order {k} exceeds matrix order {}",
                self.rows
            )));
        }
        use itertools::Itertools;
        Ok((0..self.rows)
            .combinations(k)
            .map(|idx| self.pf_rec(&idx))
            .collect())
    }

    fn check_skew(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !self.rows.is_multiple_of(2) {
            return Err(Error::OddOrder(self.rows));
        }
        if !self.is_antisymmetric() {
            return Err(Error::NotAntisymmetric);
        }
        Ok(())
    }
}

impl Matrix<Rational> {
    /// Clears denominators row by row. Returns integer rows and the product
    /// of the scale factors, so `det(self) = det(scaled) / factor`.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut factor = BigInt::one();
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let mut l = BigInt::one();
            for q in row {
                l = l.lcm(q.denom());
            }
            factor *= &l;
            out.push(row.iter().map(|q| q.numer() * (&l / q.denom())).collect());
        }
        (out, factor)
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let (mut m, factor) = self.integer_rows();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            let pivot_row = m[k].clone();
            for row in m.iter_mut().skip(k + 1) {
                let lead = std::mem::replace(&mut row[k], BigInt::zero());
                for j in k + 1..n {
                    let t = &row[j] * &pivot_row[k] - &lead * &pivot_row[j];
                    row[j] = t / &prev;
                }
            }
            prev = pivot_row[k].clone();
        }
        let d = m[n - 1][n - 1].clone() * BigInt::from(sign);
        Ok(Rational::new(d, factor))
    }

    /// Rank by fraction-free elimination with full pivoting.
    pub fn rank(&self) -> usize {
        let (mut m, _) = self.integer_rows();
        let (r, c) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut k = 0;
        while k < r.min(c) {
            // Locate any nonzero entry in the trailing submatrix.
            let mut pivot = None;
            'search: for (i, row) in m.iter().enumerate().skip(k) {
                for (j, entry) in row.iter().enumerate().skip(k) {
                    if !entry.is_zero() {
                        pivot = Some((i, j));
                        break 'search;
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return k;
            };
            m.swap(k, pi);
            if pj != k {
                for row in &mut m {
                    row.swap(k, pj);
                }
            }
            let pivot_row = m[k].clone();
            for row in m.iter_mut().skip(k + 1) {
                let lead = std::mem::replace(&mut row[k], BigInt::zero());
                for j in k + 1..c {
                    let t = &row[j] * &pivot_row[k] - &lead * &pivot_row[j];
                    row[j] = t / &prev;
                }
            }
            prev = pivot_row[k].clone();
            k += 1;
        }
        k
    }

    /// Pfaffian by skew-symmetric elimination: at each step the leading 2x2
    /// block `[[0, a], [-a, 0]]` contributes the factor `a` and the trailing
    /// block is replaced by its Schur-type complement
    /// `D[i][j] + (r1[i]*r0[j] - r0[i]*r1[j]) / a`.
    pub fn pfaffian(&self) -> Result<Rational> {
        self.check_skew()?;
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut pf = Rational::one();
        let mut k = 0;
        while k < n {
            let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) else {
                return Ok(Rational::zero());
            };
            if j != k + 1 {
                a.swap(j, k + 1);
                for row in &mut a {
                    row.swap(j, k + 1);
                }
                pf = -pf;
            }
            let piv = a[k][k + 1].clone();
            pf *= &piv;
            let r0 = a[k].clone();
            let r1 = a[k + 1].clone();
            for i in k + 2..n {
                for jj in k + 2..n {
                    let delta = (&r1[i] * &r0[jj] - &r0[i] * &r1[jj]) / &piv;
                    a[i][jj] += delta;
                }
            }
            k += 2;
        }
        Ok(pf)
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        let mut widths = vec![0usize; self.cols];
        for row in &cells {
            for (j, s) in row.iter().enumerate() {
                widths[j] = widths[j].max(s.len());
            }
        }
        for row in &cells {
            write!(f, "[")?;
            for (j, s) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{s:>w$}", w = widths[j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
