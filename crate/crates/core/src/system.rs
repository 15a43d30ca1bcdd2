//! A polynomial system `F_0, …, F_n` of ample degrees on a complete toric variety.

use alloc::format;
use alloc::vec::Vec;

use crate::arith::{coeff_atom, Atom, CoeffPoly, Exponent, Rational, SparsePoly, Specialization};
use crate::error::{Error, Result};
use crate::toric::{critical_degree, is_ample, monomial_cmp, Fan, MonomialBasis};

/// A Cox-ring polynomial whose coefficients live in the atom ring 𝔸.
pub type CoxPolynomial = SparsePoly<Exponent, CoeffPoly>;
/// A Cox-ring polynomial with rational coefficients.
pub type RatCoxPolynomial = SparsePoly<Exponent, Rational>;

#[derive(Clone, Debug)]
pub struct ToricSystem {
    fan: Fan,
    degrees: Vec<Vec<i64>>,
    polys: Vec<CoxPolynomial>,
    rho: Vec<i64>,
    alpha_bases: Vec<MonomialBasis>,
    rho_basis: MonomialBasis,
}

impl ToricSystem {
    /// Checks ampleness of every degree and that each `F_i` is supported on `S_{α_i}`.
    pub fn new(fan: Fan, degrees: Vec<Vec<i64>>, polys: Vec<CoxPolynomial>) -> Result<Self> {
        let n = fan.dim();
        if degrees.len() != n + 1 || polys.len() != n + 1 {
            return Err(Error::Dimension {
                expected: n + 1,
                found: if degrees.len() != n + 1 {
                    degrees.len()
                } else {
                    polys.len()
                },
            });
        }
        for (i, b) in degrees.iter().enumerate() {
            if !is_ample(&fan, b)? {
                return Err(Error::NotAmple(i));
            }
        }
        let alpha_bases = degrees
            .iter()
            .map(|b| MonomialBasis::new(&fan, b))
            .collect::<Result<Vec<_>>>()?;
        for (i, (f, basis)) in polys.iter().zip(&alpha_bases).enumerate() {
            for m in f.monomials() {
                if m.arity() != fan.num_rays() || basis.position(m).is_none() {
                    return Err(Error::SupportViolation(format!(
                        "monomial {:?} of F_{} does not have degree α_{}",
                        m.0, i, i
                    )));
                }
            }
        }
        let rho = critical_degree(&fan, &degrees)?;
        let rho_basis = MonomialBasis::new(&fan, &rho)?;
        Ok(ToricSystem {
            fan,
            degrees,
            polys,
            rho,
            alpha_bases,
            rho_basis,
        })
    }

    /// The generic system: `F_i = ∑_k u_{ik} x^{a_k}` over the whole basis of `S_{α_i}`.
    pub fn generic(fan: Fan, degrees: Vec<Vec<i64>>) -> Result<Self> {
        let mut polys = Vec::with_capacity(degrees.len());
        for (i, b) in degrees.iter().enumerate() {
            let basis = MonomialBasis::new(&fan, b)?;
            polys.push(CoxPolynomial::from_terms(
                basis
                    .exponents()
                    .iter()
                    .enumerate()
                    .map(|(k, e)| (e.clone(), coeff_atom(Atom::new(i, k)))),
            ));
        }
        Self::new(fan, degrees, polys)
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn dim(&self) -> usize {
        self.fan.dim()
    }

    pub fn degrees(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    pub fn polys(&self) -> &[CoxPolynomial] {
        &self.polys
    }

    /// Representative of the critical degree `ρ`.
    pub fn rho(&self) -> &[i64] {
        &self.rho
    }

    pub fn alpha_basis(&self, i: usize) -> &MonomialBasis {
        &self.alpha_bases[i]
    }

    pub fn rho_basis(&self) -> &MonomialBasis {
        &self.rho_basis
    }

    /// Basis of `S_b` for an arbitrary representative.
    pub fn basis(&self, b: &[i64]) -> Result<MonomialBasis> {
        MonomialBasis::new(&self.fan, b)
    }

    /// Every atom occurring in the coefficients, sorted.
    pub fn atoms(&self) -> Vec<Atom> {
        let mut out: Vec<Atom> = self
            .polys
            .iter()
            .flat_map(|f| f.terms().flat_map(|(_, c)| c.atoms()))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn specialize(&self, spec: &Specialization) -> Result<Vec<RatCoxPolynomial>> {
        self.polys
            .iter()
            .map(|f| f.try_map_coeffs(|c| spec.eval(c)))
            .collect()
    }

    /// The same system with `F_eq` multiplied by `lambda`.
    pub fn scale_equation(&self, eq: usize, lambda: &Rational) -> Self {
        let mut out = self.clone();
        let factor = crate::arith::coeff_const(lambda.clone());
        out.polys[eq] = out.polys[eq].map_coeffs(|c| c.mul(&factor));
        out
    }
}

/// Terms of a polynomial listed in the canonical monomial order.
pub fn sorted_terms<C: Clone>(p: &SparsePoly<Exponent, C>) -> Vec<(Exponent, C)>
where
    C: crate::arith::Coeff,
{
    let mut v: Vec<(Exponent, C)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    v.sort_by(|a, b| monomial_cmp(&a.0, &b.0));
    v
}
