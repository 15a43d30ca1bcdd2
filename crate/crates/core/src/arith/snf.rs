//! Smith normal form with unimodular transforms.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `U·A·V = D` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | …`, `d_i ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// The diagonal entries `d_1, …, d_min(m,n)`.
    pub fn invariants(&self) -> Vec<BigInt> {
        let k = self.d.nrows().min(self.d.ncols());
        (0..k).map(|i| self.d.get(i, i).clone()).collect()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut().chain(self.v.iter_mut()) {
            r.swap(i, j);
        }
    }

    /// row_i -= q · row_j
    fn sub_row(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[j].clone();
            for (x, s) in m[i].iter_mut().zip(&src) {
                *x -= q * s;
            }
        }
    }

    /// col_i -= q · col_j
    fn sub_col(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for r in m.iter_mut() {
                let s = r[j].clone();
                r[i] -= q * s;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = -core::mem::take(x);
            }
        }
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn to_matrix(rows: Vec<Vec<BigInt>>, cols: usize) -> IntMatrix {
    IntMatrix::from_rows(rows, cols).expect("rectangular by construction")
}

pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let (m, n) = (a.nrows(), a.ncols());
    let mut w = Work {
        a: a.row_vecs(),
        u: identity(m),
        v: identity(n),
    };
    for t in 0..m.min(n) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if w.a[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(w, m, n);
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..m {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&w.a[t][t]);
                    w.sub_row(i, t, &q);
                    clean &= w.a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&w.a[t][t]);
                    w.sub_col(j, t, &q);
                    clean &= w.a[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let bad = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !w.a[i][j].is_multiple_of(&w.a[t][t]));
            match bad {
                Some((i, _)) => {
                    let minus_one = -BigInt::one();
                    w.sub_row(t, i, &minus_one);
                }
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
    }
    finish(w, m, n)
}

fn finish(w: Work, m: usize, n: usize) -> Smith {
    Smith {
        u: to_matrix(w.u, m),
        d: to_matrix(w.a, n),
        v: to_matrix(w.v, n),
    }
}
