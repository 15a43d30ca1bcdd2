//! Complete fans given by rays and maximal cones.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::divisor::ClassGroup;
use super::lattice::{dot, gcd_of, normal_vector, rank, subsets};
use crate::arith::Exponent;
use crate::error::{Error, Result};

/// A facet of a maximal cone together with its inward normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub rays: Vec<usize>,
    pub normal: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
    facets: Vec<Vec<Facet>>,
    class_group: ClassGroup,
}

impl Fan {
    /// Validates primitivity, full-dimensionality of every maximal cone and
    /// completeness (each facet is shared by exactly two maximal cones lying
    /// on opposite sides of it).
    pub fn new(rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        let dim = rays
            .first()
            .map(|r| r.len())
            .ok_or_else(|| Error::InvalidFan("no rays".into()))?;
        if dim == 0 {
            return Err(Error::InvalidFan(
                "rays must have positive dimension".into(),
            ));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    found: r.len(),
                });
            }
            if gcd_of(r) != 1 {
                return Err(Error::InvalidFan(format!(
                    "ray {} is zero or not primitive",
                    i
                )));
            }
        }
        for (i, a) in rays.iter().enumerate() {
            if rays[..i].contains(a) {
                return Err(Error::InvalidFan(format!("ray {} is repeated", i)));
            }
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for (k, c) in max_cones.into_iter().enumerate() {
            let mut c = c;
            c.sort_unstable();
            c.dedup();
            if let Some(&bad) = c.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::InvalidFan(format!(
                    "cone {} references missing ray {}",
                    k, bad
                )));
            }
            let vs: Vec<&[i64]> = c.iter().map(|&i| rays[i].as_slice()).collect();
            if rank(&vs) != dim {
                return Err(Error::InvalidFan(format!(
                    "maximal cone {} is not {}-dimensional",
                    k, dim
                )));
            }
            cones.push(c);
        }
        if cones.is_empty() {
            return Err(Error::InvalidFan("no maximal cones".into()));
        }
        let facets = cones
            .iter()
            .enumerate()
            .map(|(k, c)| cone_facets(&rays, c, dim, k))
            .collect::<Result<Vec<_>>>()?;

        let mut shared: BTreeMap<&[usize], Vec<(usize, &[i64])>> = BTreeMap::new();
        for (k, fs) in facets.iter().enumerate() {
            for f in fs {
                shared
                    .entry(f.rays.as_slice())
                    .or_default()
                    .push((k, f.normal.as_slice()));
            }
        }
        for (f, owners) in &shared {
            if owners.len() != 2 {
                return Err(Error::InvalidFan(format!(
                    "facet {:?} lies in {} maximal cones (complete fans need exactly 2)",
                    f,
                    owners.len()
                )));
            }
            let (a, b) = (owners[0].1, owners[1].1);
            if dot(a, b) >= 0 {
                return Err(Error::InvalidFan(format!(
                    "maximal cones {} and {} overlap across facet {:?}",
                    owners[0].0, owners[1].0, f
                )));
            }
        }

        let class_group = ClassGroup::new(&rays)?;
        Ok(Fan {
            dim,
            rays,
            max_cones: cones,
            facets,
            class_group,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of rays, i.e. of Cox-ring variables.
    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &[i64] {
        &self.rays[i]
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn facets(&self, cone: usize) -> &[Facet] {
        &self.facets[cone]
    }

    pub fn class_group(&self) -> &ClassGroup {
        &self.class_group
    }

    /// Smallest face of maximal cone `cone` containing the rays `t`.
    fn face_closure(&self, cone: usize, t: &[usize]) -> Vec<usize> {
        let mut face = self.max_cones[cone].clone();
        for f in &self.facets[cone] {
            if t.iter().all(|i| f.rays.contains(i)) {
                face.retain(|i| f.rays.contains(i));
            }
        }
        face
    }

    /// True when the ray set `t` spans a cone of the fan.
    pub fn is_cone(&self, t: &[usize]) -> bool {
        let mut t = t.to_vec();
        t.sort_unstable();
        t.dedup();
        (0..self.max_cones.len()).any(|k| {
            t.iter().all(|i| self.max_cones[k].contains(i)) && self.face_closure(k, &t) == t
        })
    }

    /// The monomials `x̂_σ = ∏_{η_i ∉ σ} x_i`, one per maximal cone.
    pub fn irrelevant_generators(&self) -> Vec<Exponent> {
        self.max_cones
            .iter()
            .map(|c| {
                Exponent(
                    (0..self.rays.len())
                        .map(|i| u32::from(!c.contains(&i)))
                        .collect(),
                )
            })
            .collect()
    }
}

fn cone_facets(rays: &[Vec<i64>], cone: &[usize], dim: usize, k: usize) -> Result<Vec<Facet>> {
    let mut out: Vec<Facet> = Vec::new();
    for sub in subsets(cone.len(), dim - 1) {
        let vs: Vec<&[i64]> = sub.iter().map(|&j| rays[cone[j]].as_slice()).collect();
        let nv = normal_vector(&vs, dim)?;
        if nv.iter().all(|&x| x == 0) {
            continue;
        }
        let dots: Vec<i64> = cone.iter().map(|&i| dot(&nv, &rays[i])).collect();
        let sign = if dots.iter().all(|&d| d >= 0) {
            1
        } else if dots.iter().all(|&d| d <= 0) {
            -1
        } else {
            continue;
        };
        let face: Vec<usize> = cone
            .iter()
            .zip(&dots)
            .filter(|(_, &d)| d == 0)
            .map(|(&i, _)| i)
            .collect();
        if out.iter().any(|f| f.rays == face) {
            continue;
        }
        let g = gcd_of(&nv);
        let normal = nv.iter().map(|&x| sign * x / g).collect();
        out.push(Facet { rays: face, normal });
    }
    if out.len() < dim {
        return Err(Error::InvalidFan(format!(
            "maximal cone {} is not strictly convex",
            k
        )));
    }
    Ok(out)
}
