//! The flag element `Δ_σ̄ = det(A_ij)` where `F_j = ∑_i A_ij z_i`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::One;

use crate::arith::symdet::{small_symbolic_det, DEFAULT_MAX_SIZE};
use crate::arith::{coeff_atom, coeff_const, Atom, CoeffPoly, Exponent, Rational};
use crate::error::{Error, Result};
use crate::system::{CoxPolynomial, ToricSystem};
use crate::toric::lattice::subsets;
use crate::toric::{degree_of_monomial, Flag};

/// Splits `F` as `∑ A_i z_i`, sending each monomial to the first `z_i` dividing it.
pub fn decompose(f: &CoxPolynomial, z: &[Exponent]) -> Result<Vec<CoxPolynomial>> {
    let mut parts = alloc::vec![CoxPolynomial::zero(); z.len()];
    for (m, c) in f.terms() {
        let (i, q) = z
            .iter()
            .enumerate()
            .find_map(|(i, zi)| zi.quotient_of(m).map(|q| (i, q)))
            .ok_or(Error::NotDecomposable)?;
        parts[i].add_term(q, c.clone());
    }
    Ok(parts)
}

/// The decomposition matrix: row `j` holds `A_{1j}, …, A_{n+1,j}` for `F_j`.
pub fn decomposition_matrix(sys: &ToricSystem, flag: &Flag) -> Result<Vec<Vec<CoxPolynomial>>> {
    let z = flag.z_monomials(sys.fan());
    sys.polys().iter().map(|f| decompose(f, &z)).collect()
}

pub fn delta_element(sys: &ToricSystem, flag: &Flag) -> Result<CoxPolynomial> {
    let a = decomposition_matrix(sys, flag)?;
    let s = sys.fan().num_rays();
    let one = CoxPolynomial::monomial(Exponent::zero(s), coeff_const(Rational::one()));
    let delta = small_symbolic_det(&a, &one, DEFAULT_MAX_SIZE)?;
    let target = sys.rho_basis().class().clone();
    for m in delta.monomials() {
        if degree_of_monomial(sys.fan(), m)? != target {
            return Err(Error::Internal(format!(
                "monomial {:?} of the flag element is not of critical degree",
                m.0
            )));
        }
    }
    Ok(delta)
}

/// A term `±[k_0 … k_n] x^monomial` of `Δ_σ̄`, where the bracket is the
/// determinant of the coefficient columns `k_0 < … < k_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub negative: bool,
    pub columns: Vec<usize>,
    pub monomial: Exponent,
}

/// Rewrites `Δ` in bracket notation. This applies to unmixed systems whose
/// term with label `k` carries the atom `(i, k)` in every `F_i`; anything else
/// (or a coefficient that is not a single bracket) gives `None`.
pub fn bracket_form(sys: &ToricSystem, delta: &CoxPolynomial) -> Option<Vec<Bracket>> {
    let mut labels: Option<BTreeMap<Exponent, usize>> = None;
    for (i, f) in sys.polys().iter().enumerate() {
        let mut own = BTreeMap::new();
        for (m, c) in f.terms() {
            let atoms = c.atoms();
            if atoms.len() != 1 || atoms[0].eq != i || *c != coeff_atom(atoms[0]) {
                return None;
            }
            own.insert(m.clone(), atoms[0].index);
        }
        match &labels {
            None => labels = Some(own),
            Some(l) if *l == own => {}
            Some(_) => return None,
        }
    }
    let mut cols: Vec<usize> = labels?.into_values().collect();
    cols.sort_unstable();
    let n1 = sys.polys().len();
    let one = coeff_const(Rational::one());
    let mut dets: Vec<(Vec<usize>, CoeffPoly)> = Vec::new();
    for k in subsets(cols.len(), n1) {
        let columns: Vec<usize> = k.iter().map(|&j| cols[j]).collect();
        let m: Vec<Vec<CoeffPoly>> = (0..n1)
            .map(|i| {
                columns
                    .iter()
                    .map(|&c| coeff_atom(Atom::new(i, c)))
                    .collect()
            })
            .collect();
        let d = small_symbolic_det(&m, &one, DEFAULT_MAX_SIZE).ok()?;
        dets.push((columns, d));
    }
    let mut out = Vec::with_capacity(delta.len());
    for (m, c) in delta.terms() {
        let neg = c.neg();
        let (columns, negative) = dets.iter().find_map(|(k, d)| {
            if d == c {
                Some((k.clone(), false))
            } else if *d == neg {
                Some((k.clone(), true))
            } else {
                None
            }
        })?;
        out.push(Bracket {
            negative,
            columns,
            monomial: m.clone(),
        });
    }
    Some(out)
}
