//! The class group `A_{n-1}(X) = ℤ^s / {(⟨m,η_i⟩)_i}` and divisor classes.

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::fan::Fan;
use super::lattice::{dot, to_i64};
use crate::arith::snf::smith_normal_form;
use crate::arith::{int, Exponent, IntMatrix, RatMatrix, Rational};
use crate::error::{Error, Result};

/// Canonical coordinates of a divisor class: one residue per torsion block
/// followed by the free coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivisorClass(pub Vec<i64>);

/// Reduction data from the Smith form `U·R·V = D` of the ray matrix `R` (s×n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroup {
    u: Vec<Vec<i64>>,
    invariants: Vec<i64>,
}

impl ClassGroup {
    pub fn new(rays: &[Vec<i64>]) -> Result<Self> {
        let s = rays.len();
        let n = rays.first().map_or(0, |r| r.len());
        let r = IntMatrix::from_rows(
            rays.iter()
                .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            n,
        )?;
        let smith = smith_normal_form(&r);
        let invariants = smith
            .invariants()
            .iter()
            .map(to_i64)
            .collect::<Result<Vec<_>>>()?;
        if invariants.iter().any(|&d| d == 0) {
            return Err(Error::InvalidFan(
                "rays do not span the lattice rank".into(),
            ));
        }
        let u = (0..s)
            .map(|i| (0..s).map(|j| to_i64(smith.u.get(i, j))).collect())
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassGroup { u, invariants })
    }

    /// Smith invariants `d_1 | … | d_n` of the ray matrix; entries above 1 are torsion.
    pub fn invariants(&self) -> &[i64] {
        &self.invariants
    }

    pub fn torsion(&self) -> Vec<i64> {
        self.invariants.iter().copied().filter(|&d| d > 1).collect()
    }

    /// Rank of the free part, `s - n`.
    pub fn free_rank(&self) -> usize {
        self.u.len() - self.invariants.len()
    }

    pub fn class_of(&self, b: &[i64]) -> Result<DivisorClass> {
        if b.len() != self.u.len() {
            return Err(Error::Dimension {
                expected: self.u.len(),
                found: b.len(),
            });
        }
        let n = self.invariants.len();
        let mut out = Vec::new();
        for (j, row) in self.u.iter().enumerate() {
            let y: i128 = row
                .iter()
                .zip(b)
                .map(|(&a, &x)| a as i128 * x as i128)
                .sum();
            if j < n {
                let d = self.invariants[j] as i128;
                if d > 1 {
                    out.push(y.rem_euclid(d) as i64);
                }
            } else {
                out.push(
                    i64::try_from(y)
                        .map_err(|_| Error::Internal("class coordinate overflow".into()))?,
                );
            }
        }
        Ok(DivisorClass(out))
    }
}

/// Class of `∑ a_i D_i`.
pub fn degree_of_monomial(fan: &Fan, a: &Exponent) -> Result<DivisorClass> {
    let b: Vec<i64> = a.0.iter().map(|&e| e as i64).collect();
    fan.class_group().class_of(&b)
}

/// `ρ = ∑ b^(i) − (1,…,1)` for `n+1` degree representatives.
pub fn critical_degree(fan: &Fan, degrees: &[Vec<i64>]) -> Result<Vec<i64>> {
    if degrees.len() != fan.dim() + 1 {
        return Err(Error::Dimension {
            expected: fan.dim() + 1,
            found: degrees.len(),
        });
    }
    let s = fan.num_rays();
    let mut rho = alloc::vec![-1i64; s];
    for b in degrees {
        if b.len() != s {
            return Err(Error::Dimension {
                expected: s,
                found: b.len(),
            });
        }
        for (r, x) in rho.iter_mut().zip(b) {
            *r += x;
        }
    }
    Ok(rho)
}

/// The linear functional `m_σ` with `⟨m_σ,η_i⟩ = -b_i` on the rays of maximal
/// cone `k`, if it exists and is integral.
pub fn local_functional(fan: &Fan, b: &[i64], k: usize) -> Result<Option<Vec<i64>>> {
    let cone = &fan.max_cones()[k];
    let rows: Vec<Vec<i64>> = cone.iter().map(|&i| fan.ray(i).to_vec()).collect();
    let a = RatMatrix::from_i64(&rows)?;
    let basis_rows = a.rank_profile().rows;
    let sq = a.select_rows(&basis_rows);
    let rhs: Vec<Rational> = basis_rows.iter().map(|&r| int(-b[cone[r]])).collect();
    let Some(m) = sq.solve(&rhs)? else {
        return Ok(None);
    };
    if m.iter().any(|x| !x.is_integer()) {
        return Ok(None);
    }
    let m: Vec<i64> = m
        .iter()
        .map(|x| to_i64(&x.to_integer()))
        .collect::<Result<_>>()?;
    if cone.iter().any(|&i| dot(&m, fan.ray(i)) != -b[i]) {
        return Ok(None);
    }
    Ok(Some(m))
}

/// Cartier and strictly convex support function: on every maximal cone the
/// local functional exists, is integral, and is strictly larger than `-b_j`
/// on every ray outside the cone.
pub fn is_ample(fan: &Fan, b: &[i64]) -> Result<bool> {
    if b.len() != fan.num_rays() {
        return Err(Error::Dimension {
            expected: fan.num_rays(),
            found: b.len(),
        });
    }
    for (k, cone) in fan.max_cones().iter().enumerate() {
        let Some(m) = local_functional(fan, b, k)? else {
            return Ok(false);
        };
        for j in 0..fan.num_rays() {
            if !cone.contains(&j) && dot(&m, fan.ray(j)) <= -b[j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
