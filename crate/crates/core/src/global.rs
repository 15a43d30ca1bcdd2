//! Global residues in the torus and their computation through toric residues
//! on projective space.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::symdet::small_symbolic_det;
use crate::arith::{
    coeff_const, CoeffPoly, Exponent, LaurentExp, LaurentPoly, Rational, SparsePoly, Specialization,
};
use crate::error::{Error, Result};
use crate::macaulay::ResidueContext;
use crate::system::{CoxPolynomial, ToricSystem};
use crate::toric::{degree_of_monomial, lattice::subsets, Fan, Flag};

/// Largest system size for which Jacobians are expanded symbolically.
pub const MAX_JACOBIAN_SIZE: usize = 4;

/// A polynomial in `t_1, …, t_n` with coefficients in the atom ring.
pub type AffinePoly = SparsePoly<Exponent, CoeffPoly>;

fn jacobian_matrix(f: &[LaurentPoly], logarithmic: bool) -> Result<Vec<Vec<LaurentPoly>>> {
    let n = f.len();
    if n > MAX_JACOBIAN_SIZE {
        return Err(Error::TooLarge {
            size: n,
            max: MAX_JACOBIAN_SIZE,
        });
    }
    let mut rows = Vec::with_capacity(n);
    for fj in f {
        let mut row = Vec::with_capacity(n);
        for k in 0..n {
            let mut d = LaurentPoly::zero();
            for (m, c) in fj.terms() {
                if m.0.len() != n {
                    return Err(Error::Dimension {
                        expected: n,
                        found: m.0.len(),
                    });
                }
                if m.0[k] == 0 {
                    continue;
                }
                let mut e = m.0.clone();
                if !logarithmic {
                    e[k] -= 1;
                }
                d.add_term(LaurentExp(e), c * Rational::from_integer(m.0[k].into()));
            }
            row.push(d);
        }
        rows.push(row);
    }
    Ok(rows)
}

fn laurent_one(n: usize) -> LaurentPoly {
    LaurentPoly::monomial(LaurentExp(alloc::vec![0; n]), Rational::one())
}

/// `J^T(f) = det(t_k ∂f_j/∂t_k)`.
pub fn toric_jacobian(f: &[LaurentPoly]) -> Result<LaurentPoly> {
    let m = jacobian_matrix(f, true)?;
    small_symbolic_det(&m, &laurent_one(f.len()), MAX_JACOBIAN_SIZE)
}

/// `J(f) = det(∂f_j/∂t_k)`.
pub fn affine_jacobian(f: &[LaurentPoly]) -> Result<LaurentPoly> {
    let m = jacobian_matrix(f, false)?;
    small_symbolic_det(&m, &laurent_one(f.len()), MAX_JACOBIAN_SIZE)
}

/// `∑_{ξ ∈ V} q(ξ) / J^T(f)(ξ)` over the supplied roots.
pub fn global_residue_direct(
    f: &[LaurentPoly],
    q: &LaurentPoly,
    roots: &[Vec<Rational>],
) -> Result<Rational> {
    let jt = toric_jacobian(f)?;
    let mut acc = Rational::zero();
    for xi in roots {
        if xi.len() != f.len() {
            return Err(Error::Dimension {
                expected: f.len(),
                found: xi.len(),
            });
        }
        if xi.iter().any(|x| x.is_zero()) || f.iter().any(|fj| !fj.eval(xi).is_zero()) {
            return Err(Error::NotARoot);
        }
        let j = jt.eval(xi);
        if j.is_zero() {
            return Err(Error::RootNotSimple);
        }
        acc += q.eval(xi) / j;
    }
    Ok(acc)
}

/// `ℙ^n` with rays `η_0 = -∑ e_i` and `η_i = e_i`.
pub fn projective_space(n: usize) -> Result<Fan> {
    let mut rays = Vec::with_capacity(n + 1);
    rays.push(alloc::vec![-1; n]);
    for i in 0..n {
        let mut e = alloc::vec![0; n];
        e[i] = 1;
        rays.push(e);
    }
    Fan::new(rays, subsets(n + 1, n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// `F_0 = x_0` and `G = x_1^{d_1-1} ⋯ x_n^{d_n-1}`.
    Macaulay,
    /// `F_0 = x_0^k` with a user-supplied `G` in `x_0, …, x_n`.
    PowerOfX0 { k: u32, g: Exponent },
}

#[derive(Clone, Debug)]
pub struct Homogenized {
    pub system: ToricSystem,
    pub flag: Flag,
    pub g: Exponent,
}

impl Homogenized {
    /// The Laurent monomial `q = t^{g'} · t_1 ⋯ t_n` whose global residue (with
    /// respect to `dt/t`) equals the toric residue of `G`; `g'` drops `x_0`.
    pub fn torus_numerator(&self) -> LaurentExp {
        LaurentExp(self.g.0[1..].iter().map(|&e| e as i64 + 1).collect())
    }
}

fn total_degree_of(f: &AffinePoly) -> u32 {
    f.monomials()
        .map(|m| m.total_degree() as u32)
        .max()
        .unwrap_or(0)
}

/// Homogenizes `f_1, …, f_n` by total degree on `ℙ^n` and adjoins `F_0`.
pub fn homogenize_dense(f: &[AffinePoly], recipe: &Recipe) -> Result<Homogenized> {
    let n = f.len();
    if n == 0 {
        return Err(Error::Dimension {
            expected: 1,
            found: 0,
        });
    }
    let fan = projective_space(n)?;
    let s = n + 1;
    let (k, g) = match recipe {
        Recipe::Macaulay => {
            let mut g = alloc::vec![0u32; s];
            for (i, fi) in f.iter().enumerate() {
                let d = total_degree_of(fi);
                if d == 0 {
                    return Err(Error::SupportViolation(format!("f_{} is constant", i + 1)));
                }
                g[i + 1] = d - 1;
            }
            (1, Exponent(g))
        }
        Recipe::PowerOfX0 { k, g } => (*k, g.clone()),
    };
    if g.arity() != s {
        return Err(Error::Dimension {
            expected: s,
            found: g.arity(),
        });
    }
    let mut polys = Vec::with_capacity(s);
    let mut degrees = Vec::with_capacity(s);
    let mut x0 = alloc::vec![0u32; s];
    x0[0] = k;
    polys.push(CoxPolynomial::monomial(
        Exponent(x0),
        coeff_const(Rational::one()),
    ));
    degrees.push(degree_vector(k as i64, s));
    for fi in f {
        let d = total_degree_of(fi);
        let mut p = CoxPolynomial::zero();
        for (m, c) in fi.terms() {
            if m.arity() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: m.arity(),
                });
            }
            let mut e = Vec::with_capacity(s);
            e.push(d - m.total_degree() as u32);
            e.extend_from_slice(&m.0);
            p.add_term(Exponent(e), c.clone());
        }
        polys.push(p);
        degrees.push(degree_vector(d as i64, s));
    }
    let system = ToricSystem::new(fan, degrees, polys)?;
    if degree_of_monomial(system.fan(), &g)? != *system.rho_basis().class() {
        return Err(Error::SupportViolation(format!(
            "G = {:?} is not of critical degree",
            g.0
        )));
    }
    let flag = Flag::new(system.fan(), (1..=n).map(|k| (1..=k).collect()).collect())?;
    Ok(Homogenized { system, flag, g })
}

fn degree_vector(d: i64, s: usize) -> Vec<i64> {
    let mut b = alloc::vec![0; s];
    b[0] = d;
    b
}

/// The global residue via the toric residue of `G` on the homogenized system.
///
/// The normalized toric residue differs from the trace-map orientation used
/// for global residues by `(-1)^n` for the flag `σ_k = cone(η_1, …, η_k)`.
pub fn macaulay_global_residue(
    f: &[AffinePoly],
    recipe: &Recipe,
    spec: &Specialization,
) -> Result<Rational> {
    let hom = homogenize_dense(f, recipe)?;
    let ctx = ResidueContext::new(&hom.system, &hom.flag, spec)?;
    let r = ctx.residue_monomial(&hom.g)?;
    Ok(if f.len() % 2 == 1 { -r } else { r })
}

/// Specializes an affine polynomial to a Laurent polynomial over ℚ.
pub fn to_laurent(f: &AffinePoly, spec: &Specialization) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for (m, c) in f.terms() {
        out.add_term(LaurentExp(m.as_i64()), spec.eval(c)?);
    }
    Ok(out)
}
