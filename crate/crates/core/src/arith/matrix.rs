//! Dense matrices and fraction-free exact linear algebra.
//!
//! Rational matrices are lifted row by row to integers (each row times the lcm
//! of its denominators) and eliminated with Bareiss' one-step fraction-free
//! scheme, so no intermediate rational is ever reduced. Pivoting is
//! deterministic: columns are scanned left to right and the first row holding
//! a nonzero entry becomes the pivot row.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RatMatrix = Matrix<Rational>;
pub type IntMatrix = Matrix<BigInt>;

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// The submatrix on the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let cols: Vec<usize> = (0..self.cols).collect();
        self.select(rows, &cols)
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.select(&rows, cols)
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, T::zero())
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }
}

impl<T> Matrix<T>
where
    T: Clone
        + Zero
        + for<'a> core::ops::Mul<&'a T, Output = T>
        + for<'a> core::ops::AddAssign<&'a T>,
{
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc += &(a.clone() * other.get(k, j));
                }
                data.push(acc);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

/// Pivot rows and columns of a matrix together with its rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub rank: usize,
}

/// State after fraction-free forward elimination.
struct Echelon {
    a: Vec<Vec<BigInt>>,
    pivot_cols: Vec<usize>,
    swaps: usize,
}

/// Bareiss elimination over the first `ncols` columns; further columns (an
/// augmented right-hand side) are transformed along.
fn bareiss_forward(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    let m = a.len();
    let width = a.first().map_or(0, |r| r.len());
    let mut pivot_cols = Vec::new();
    let mut swaps = 0;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let factor = core::mem::take(&mut row[c]);
            for j in c + 1..width {
                let mut v = &piv * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v -= &factor * &pivot_row[j];
                }
                if !prev.is_one() {
                    v /= &prev;
                }
                row[j] = v;
            }
        }
        prev = piv;
        pivot_cols.push(c);
        r += 1;
    }
    Echelon {
        a,
        pivot_cols,
        swaps,
    }
}

fn lcm_of_denominators<'a, I: Iterator<Item = &'a Rational>>(it: I) -> BigInt {
    let mut l = BigInt::one();
    for x in it {
        if !x.denom().is_one() {
            l = l.lcm(x.denom());
        }
    }
    l
}

/// Row-wise integer lift: returns the integer rows and the product of the row scales.
fn integer_lift(m: &RatMatrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let mut rows = Vec::with_capacity(m.rows);
    for r in 0..m.rows {
        let row = m.row(r);
        let l = lcm_of_denominators(row.iter());
        rows.push(
            row.iter()
                .map(|x| {
                    if l.is_one() {
                        x.numer().clone()
                    } else {
                        x.numer() * (&l / x.denom())
                    }
                })
                .collect(),
        );
        scale *= l;
    }
    (rows, scale)
}

/// Determinant of a square integer matrix given by rows.
pub fn det_int(rows: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = rows.len();
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: r.len(),
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let e = bareiss_forward(rows.to_vec(), n);
    if e.pivot_cols.len() < n {
        return Ok(BigInt::zero());
    }
    let d = e.a[n - 1][n - 1].clone();
    Ok(if e.swaps % 2 == 1 { -d } else { d })
}

/// Column rank profile of an integer matrix given by rows.
pub fn pivot_columns_int(rows: &[Vec<BigInt>], ncols: usize) -> Vec<usize> {
    if rows.is_empty() {
        return Vec::new();
    }
    bareiss_forward(rows.to_vec(), ncols).pivot_cols
}

impl RatMatrix {
    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect(),
            cols,
        )
    }

    /// Exact determinant by Bareiss elimination of the integer lift.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let (rows, scale) = integer_lift(self);
        let d = det_int(&rows)?;
        Ok(Rational::new(d, scale))
    }

    /// Pivot columns chosen greedily left to right.
    pub fn column_profile(&self) -> Vec<usize> {
        let (rows, _) = integer_lift(self);
        pivot_columns_int(&rows, self.cols)
    }

    pub fn rank(&self) -> usize {
        self.column_profile().len()
    }

    /// Deterministic maximal nonsingular submatrix: the greedy row profile
    /// (ascending, first independent rows win), then the greedy column profile
    /// on those rows.
    pub fn rank_profile(&self) -> RankProfile {
        let rows = self.transpose().column_profile();
        let cols = self.select_rows(&rows).column_profile();
        debug_assert_eq!(rows.len(), cols.len());
        RankProfile {
            rank: rows.len(),
            rows,
            cols,
        }
    }

    /// Solves `self · x = b` for square nonsingular `self`. Returns `None` when singular.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        let n = self.rows;
        if self.cols != n {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if b.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: b.len(),
            });
        }
        let mut aug = Vec::with_capacity(n);
        for (r, br) in b.iter().enumerate() {
            let row = self.row(r);
            let l = lcm_of_denominators(row.iter().chain(core::iter::once(br)));
            aug.push(
                row.iter()
                    .chain(core::iter::once(br))
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect::<Vec<BigInt>>(),
            );
        }
        let e = bareiss_forward(aug, n);
        if e.pivot_cols.len() < n {
            return Ok(None);
        }
        let mut x: Vec<Rational> = vec![Rational::zero(); n];
        for i in (0..n).rev() {
            let row = &e.a[i];
            let mut acc = Rational::from_integer(row[n].clone());
            for j in i + 1..n {
                if !row[j].is_zero() {
                    acc -= &x[j] * Rational::from_integer(row[j].clone());
                }
            }
            x[i] = acc / Rational::from_integer(row[i].clone());
        }
        Ok(Some(x))
    }
}
