//! Section polytopes `P_b = {m ∈ ℝ^n : ⟨m,η_i⟩ ≥ -b_i}` and their lattice points.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::fan::Fan;
use super::lattice::{dot, normal_vector, subsets, to_i64};
use crate::arith::snf::smith_normal_form;
use crate::arith::{int, IntMatrix, RatMatrix, Rational};
use crate::error::{Error, Result};

/// True when `{m : ⟨m,η_i⟩ ≥ 0 ∀i}` is the origin, i.e. every `P_b` is bounded.
pub fn recession_is_trivial(rays: &[Vec<i64>]) -> Result<bool> {
    let n = rays.first().map_or(0, |r| r.len());
    let all: Vec<&[i64]> = rays.iter().map(|r| r.as_slice()).collect();
    if super::lattice::rank(&all) < n {
        return Ok(false);
    }
    // A nonzero pointed cone has an extreme ray cut out by n-1 tight constraints.
    for sub in subsets(rays.len(), n - 1) {
        let vs: Vec<&[i64]> = sub.iter().map(|&i| rays[i].as_slice()).collect();
        let nv = normal_vector(&vs, n)?;
        if nv.iter().all(|&x| x == 0) {
            continue;
        }
        let dots: Vec<i64> = rays.iter().map(|r| dot(&nv, r)).collect();
        if dots.iter().all(|&d| d >= 0) || dots.iter().all(|&d| d <= 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rational vertices of `P_b`.
pub fn vertices(rays: &[Vec<i64>], b: &[i64]) -> Result<Vec<Vec<Rational>>> {
    let n = rays.first().map_or(0, |r| r.len());
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for sub in subsets(rays.len(), n) {
        let a = RatMatrix::from_i64(&sub.iter().map(|&i| rays[i].clone()).collect::<Vec<_>>())?;
        let rhs: Vec<Rational> = sub.iter().map(|&i| int(-b[i])).collect();
        let Some(m) = a.solve(&rhs)? else {
            continue;
        };
        let feasible = rays.iter().zip(b).all(|(r, &bi)| {
            let v: Rational = r.iter().zip(&m).map(|(&x, y)| y * int(x)).sum();
            v >= int(-bi)
        });
        if feasible && !out.contains(&m) {
            out.push(m);
        }
    }
    Ok(out)
}

/// Lattice points of `P_b` by a bounding-box scan over the vertex hull.
pub fn lattice_points(fan: &Fan, b: &[i64]) -> Result<Vec<Vec<i64>>> {
    let rays = fan.rays();
    if b.len() != rays.len() {
        return Err(Error::Dimension {
            expected: rays.len(),
            found: b.len(),
        });
    }
    if !recession_is_trivial(rays)? {
        return Err(Error::Unbounded);
    }
    let verts = vertices(rays, b)?;
    if verts.is_empty() {
        return Ok(Vec::new());
    }
    let n = fan.dim();
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for k in 0..n {
        let floor = verts
            .iter()
            .map(|v| v[k].floor().to_integer())
            .min()
            .unwrap();
        let ceil = verts
            .iter()
            .map(|v| v[k].ceil().to_integer())
            .max()
            .unwrap();
        lo.push(to_i64(&floor)?);
        hi.push(to_i64(&ceil)?);
    }
    let mut out = Vec::new();
    let mut m = lo.clone();
    loop {
        if rays.iter().zip(b).all(|(r, &bi)| dot(r, &m) >= -bi) {
            out.push(m.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(out);
            }
            if m[k] < hi[k] {
                m[k] += 1;
                break;
            }
            m[k] = lo[k];
            k += 1;
        }
    }
}

/// Index in ℤ^n of the lattice spanned by differences of lattice points of
/// the section polytopes, or an error when it is not of full rank.
pub fn lattice_index(fan: &Fan, degrees: &[Vec<i64>]) -> Result<u64> {
    let n = fan.dim();
    let mut diffs: Vec<Vec<BigInt>> = Vec::new();
    for b in degrees {
        let pts = lattice_points(fan, b)?;
        let Some(first) = pts.first() else {
            return Err(Error::DegenerateSpan);
        };
        for p in &pts[1..] {
            diffs.push(
                p.iter()
                    .zip(first)
                    .map(|(x, y)| BigInt::from(x - y))
                    .collect(),
            );
        }
    }
    if diffs.is_empty() {
        return Err(Error::DegenerateSpan);
    }
    let smith = smith_normal_form(&IntMatrix::from_rows(diffs, n)?);
    let inv = smith.invariants();
    if inv.len() < n || inv.iter().any(|d| d == &BigInt::from(0)) {
        return Err(Error::DegenerateSpan);
    }
    let mut idx = BigInt::from(1);
    for d in inv {
        idx *= d;
    }
    idx.to_u64()
        .ok_or_else(|| Error::Internal("lattice index overflow".into()))
}
