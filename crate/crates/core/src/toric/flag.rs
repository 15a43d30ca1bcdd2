//! Complete flags of cones and their monomials `z_1, …, z_{n+1}`.

use alloc::format;
use alloc::vec::Vec;

use super::fan::Fan;
use super::lattice::rank;
use crate::arith::Exponent;
use crate::error::{Error, Result};

/// Nested cones `σ_1 ⊂ … ⊂ σ_n` with `dim σ_i = i`, as sorted ray-index sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    cones: Vec<Vec<usize>>,
}

impl Flag {
    pub fn new(fan: &Fan, cones: Vec<Vec<usize>>) -> Result<Self> {
        let n = fan.dim();
        if cones.len() != n {
            return Err(Error::InvalidFlag(format!(
                "expected {} nested cones, found {}",
                n,
                cones.len()
            )));
        }
        let mut sorted = Vec::with_capacity(n);
        for (i, c) in cones.into_iter().enumerate() {
            let mut c = c;
            c.sort_unstable();
            c.dedup();
            if let Some(&bad) = c.iter().find(|&&j| j >= fan.num_rays()) {
                return Err(Error::InvalidFlag(format!("unknown ray {}", bad)));
            }
            let vs: Vec<&[i64]> = c.iter().map(|&j| fan.ray(j)).collect();
            if rank(&vs) != i + 1 {
                return Err(Error::InvalidFlag(format!(
                    "cone {} of the flag has dimension {}, expected {}",
                    i + 1,
                    rank(&vs),
                    i + 1
                )));
            }
            if !fan.is_cone(&c) {
                return Err(Error::InvalidFlag(format!(
                    "cone {:?} is not a cone of the fan",
                    c
                )));
            }
            if let Some(prev) = sorted.last() {
                let prev: &Vec<usize> = prev;
                if !prev.iter().all(|j| c.contains(j)) {
                    return Err(Error::InvalidFlag(format!(
                        "cone {:?} does not contain {:?}",
                        c, prev
                    )));
                }
            }
            sorted.push(c);
        }
        Ok(Flag { cones: sorted })
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    /// `z_i = ∏_{η_j ∈ σ_i ∖ σ_{i-1}} x_j` for `i ≤ n` and `z_{n+1} = ∏_{η_j ∉ σ_n} x_j`.
    pub fn z_monomials(&self, fan: &Fan) -> Vec<Exponent> {
        let s = fan.num_rays();
        let mut out = Vec::with_capacity(self.cones.len() + 1);
        let mut prev: &[usize] = &[];
        for c in &self.cones {
            out.push(Exponent(
                (0..s)
                    .map(|j| u32::from(c.contains(&j) && !prev.contains(&j)))
                    .collect(),
            ));
            prev = c;
        }
        out.push(Exponent(
            (0..s).map(|j| u32::from(!prev.contains(&j))).collect(),
        ));
        out
    }
}

/// The z-monomials of a flag given directly as ray sets.
pub fn flag_z_monomials(fan: &Fan, cones: Vec<Vec<usize>>) -> Result<Vec<Exponent>> {
    Ok(Flag::new(fan, cones)?.z_monomials(fan))
}
