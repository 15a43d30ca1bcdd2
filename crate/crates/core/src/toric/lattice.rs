//! Small integer-vector helpers shared by the fan and polytope code.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::matrix::{det_int, pivot_columns_int};
use crate::error::{Error, Result};

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn to_big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn rank(vectors: &[&[i64]]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    pivot_columns_int(&to_big(vectors), first.len()).len()
}

pub fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Internal(alloc::format!("integer {} overflows i64", x)))
}

/// A vector orthogonal to `n-1` vectors of ℤ^n: the signed maximal minors of
/// the matrix they form. It is zero exactly when the vectors are dependent.
pub fn normal_vector(vectors: &[&[i64]], n: usize) -> Result<Vec<i64>> {
    if vectors.len() + 1 != n {
        return Err(Error::Dimension {
            expected: n - 1,
            found: vectors.len(),
        });
    }
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let minor: Vec<Vec<BigInt>> = vectors
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, &x)| BigInt::from(x))
                    .collect()
            })
            .collect();
        let d = to_i64(&det_int(&minor)?)?;
        out.push(if k % 2 == 0 { d } else { -d });
    }
    Ok(out)
}

pub fn gcd_of(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| num_integer::gcd(g, x))
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
