//! The resultant and subresultant complexes at a specialization, and their
//! determinants.
//!
//! Terms are `C_p = ⊕_{|I|=p} S_{ρ-α_I}` for `p = 0, …, n+1`, with subsets in
//! lexicographic order and monomials in canonical order inside each block.
//! Each differential `M_p : C_p → C_{p-1}` is stored in row convention, one
//! row per basis element of the source:
//! `x^a e_I ↦ ∑_k (-1)^k F_{i_k} x^a e_{I∖i_k}`.
//!
//! The determinant is the torsion of the based exact complex. Stage `p`
//! selects rows `R_p` of `M_p` on the columns of `C_{p-1}` left over by stage
//! `p-1`. Each term is weighted by the shuffle sign of the split `(R_p^c, R_p)`
//! of `C_p`. With that weight the value does not depend on the subsets
//! chosen, sign included.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{Exponent, RatMatrix, Rational, Specialization};
use crate::delta::delta_element;
use crate::error::{Error, Result};
use crate::macaulay::shifted_row;
use crate::system::{RatCoxPolynomial, ToricSystem};
use crate::toric::lattice::subsets;
use crate::toric::{Flag, MonomialBasis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermLabel {
    Koszul {
        subset: Vec<usize>,
        monomial: Exponent,
    },
    /// The rank-one summand of `C_1` mapping to `Δ_σ̄`.
    Delta,
}

#[derive(Clone, Debug)]
pub struct ComplexSpec {
    labels: Vec<Vec<TermLabel>>,
    /// `maps[p-1]` is `M_p : C_p → C_{p-1}`.
    maps: Vec<RatMatrix>,
}

/// Outcome of the determinant computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Torsion {
    Value(Rational),
    /// The complex is not exact at `C_stage`.
    NotExact {
        stage: usize,
    },
}

struct Blocks {
    /// For each term: the (subset, basis) blocks in order.
    terms: Vec<Vec<(Vec<usize>, MonomialBasis)>>,
}

impl Blocks {
    fn new(sys: &ToricSystem) -> Result<Self> {
        let m = sys.dim() + 1;
        let mut terms = Vec::with_capacity(m + 1);
        for p in 0..=m {
            let mut blocks = Vec::new();
            for sub in subsets(m, p) {
                let mut b = sys.rho().to_vec();
                for &i in &sub {
                    for (x, a) in b.iter_mut().zip(&sys.degrees()[i]) {
                        *x -= a;
                    }
                }
                blocks.push((sub, sys.basis(&b)?));
            }
            terms.push(blocks);
        }
        Ok(Blocks { terms })
    }

    fn offset(&self, p: usize, subset: &[usize]) -> usize {
        self.terms[p]
            .iter()
            .take_while(|(s, _)| s.as_slice() != subset)
            .map(|(_, b)| b.len())
            .sum()
    }

    fn dim(&self, p: usize) -> usize {
        self.terms[p].iter().map(|(_, b)| b.len()).sum()
    }
}

fn koszul_maps(f: &[RatCoxPolynomial], blocks: &Blocks) -> Result<Vec<RatMatrix>> {
    let top = blocks.terms.len() - 1;
    let mut maps = Vec::with_capacity(top);
    for p in 1..=top {
        let mut m = RatMatrix::zeros(blocks.dim(p), blocks.dim(p - 1));
        let mut r = 0;
        for (sub, basis) in &blocks.terms[p] {
            for a in basis.exponents() {
                for (k, &i) in sub.iter().enumerate() {
                    let rest: Vec<usize> = sub.iter().copied().filter(|&x| x != i).collect();
                    let off = blocks.offset(p - 1, &rest);
                    let target = &blocks.terms[p - 1]
                        .iter()
                        .find(|(s, _)| *s == rest)
                        .expect("every subset has a block")
                        .1;
                    for (c, v) in shifted_row(&f[i], a, target)? {
                        let v = if k % 2 == 1 { -v } else { v };
                        m.set(r, off + c, v);
                    }
                }
                r += 1;
            }
        }
        maps.push(m);
    }
    Ok(maps)
}

fn koszul_labels(blocks: &Blocks) -> Vec<Vec<TermLabel>> {
    blocks
        .terms
        .iter()
        .map(|bs| {
            bs.iter()
                .flat_map(|(s, b)| {
                    b.exponents().iter().map(move |e| TermLabel::Koszul {
                        subset: s.clone(),
                        monomial: e.clone(),
                    })
                })
                .collect()
        })
        .collect()
}

fn append_row(m: &RatMatrix, row: &[Rational]) -> RatMatrix {
    let mut rows = m.row_vecs();
    rows.push(row.to_vec());
    RatMatrix::from_rows(rows, m.ncols()).expect("row length matches")
}

fn append_zero_col(m: &RatMatrix) -> RatMatrix {
    let rows = m
        .row_vecs()
        .into_iter()
        .map(|mut r| {
            r.push(Rational::zero());
            r
        })
        .collect();
    RatMatrix::from_rows(rows, m.ncols() + 1).expect("row length matches")
}

/// The resultant complex: Koszul terms with the Δ summand adjoined to `C_1`.
/// The component of `M_2` into that summand is zero.
pub fn build_resultant_complex(
    sys: &ToricSystem,
    flag: &Flag,
    spec: &Specialization,
) -> Result<ComplexSpec> {
    let f = sys.specialize(spec)?;
    let delta = delta_element(sys, flag)?.try_map_coeffs(|c| spec.eval(c))?;
    let blocks = Blocks::new(sys)?;
    let mut labels = koszul_labels(&blocks);
    let mut maps = koszul_maps(&f, &blocks)?;
    let drow = crate::macaulay::coefficient_vector(&delta, sys.rho_basis())?;
    maps[0] = append_row(&maps[0], &drow);
    if maps.len() > 1 {
        maps[1] = append_zero_col(&maps[1]);
    }
    labels[1].push(TermLabel::Delta);
    Ok(ComplexSpec { labels, maps })
}

/// The subresultant complex: Koszul terms with `h` removed from `C_0 = S_ρ`.
pub fn build_subresultant_complex(
    sys: &ToricSystem,
    h: &Exponent,
    spec: &Specialization,
) -> Result<ComplexSpec> {
    let c = sys
        .rho_basis()
        .position(h)
        .ok_or_else(|| Error::NotInBasis(format!("{:?}", h.0)))?;
    let f = sys.specialize(spec)?;
    let blocks = Blocks::new(sys)?;
    let mut labels = koszul_labels(&blocks);
    let mut maps = koszul_maps(&f, &blocks)?;
    let keep: Vec<usize> = (0..maps[0].ncols()).filter(|&k| k != c).collect();
    maps[0] = maps[0].select_cols(&keep);
    labels[0].remove(c);
    Ok(ComplexSpec { labels, maps })
}

/// Parity of pairs `j ∈ chosen`, `j' ∉ chosen` with `j < j'`.
fn shuffle_sign(chosen: &[usize], total: usize) -> bool {
    let mut odd = false;
    let mut is_chosen = alloc::vec![false; total];
    for &j in chosen {
        is_chosen[j] = true;
    }
    let mut chosen_seen = 0usize;
    for flag in is_chosen {
        if flag {
            chosen_seen += 1;
        } else if chosen_seen % 2 == 1 {
            odd = !odd;
        }
    }
    odd
}

impl ComplexSpec {
    /// Rank of `C_p` for `p = 0, …, n+1`.
    pub fn dims(&self) -> Vec<usize> {
        self.labels.iter().map(|l| l.len()).collect()
    }

    pub fn labels(&self, p: usize) -> &[TermLabel] {
        &self.labels[p]
    }

    pub fn map(&self, p: usize) -> &RatMatrix {
        &self.maps[p - 1]
    }

    pub fn num_maps(&self) -> usize {
        self.maps.len()
    }

    /// `M_{p+1} · M_p = 0` for every consecutive pair.
    pub fn is_complex(&self) -> Result<bool> {
        for p in 1..self.maps.len() {
            if !self.maps[p].mul(&self.maps[p - 1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn cayley_determinant(&self) -> Result<Torsion> {
        self.cayley_determinant_with(|_, n| (0..n).collect())
    }

    /// As [`Self::cayley_determinant`], offering the rows of `M_p` to the
    /// greedy selection in the order `order(p, dim C_p)`.
    pub fn cayley_determinant_with<O>(&self, order: O) -> Result<Torsion>
    where
        O: Fn(usize, usize) -> Vec<usize>,
    {
        let dims = self.dims();
        let mut complement: Vec<usize> = (0..dims[0]).collect();
        let mut tau = Rational::one();
        for p in 1..=self.maps.len() {
            let m = &self.maps[p - 1];
            let chosen: Vec<usize> = if complement.is_empty() {
                Vec::new()
            } else {
                let pref = order(p, dims[p]);
                let sub = m.select(&pref, &complement);
                let mut rows: Vec<usize> = sub
                    .transpose()
                    .column_profile()
                    .into_iter()
                    .map(|k| pref[k])
                    .collect();
                if rows.len() < complement.len() {
                    return Ok(Torsion::NotExact { stage: p - 1 });
                }
                rows.sort_unstable();
                let mut factor = m.select(&rows, &complement).det()?;
                if shuffle_sign(&rows, dims[p]) {
                    factor = -factor;
                }
                if p % 2 == 1 {
                    tau *= factor;
                } else {
                    tau /= factor;
                }
                rows
            };
            complement = (0..dims[p]).filter(|j| !chosen.contains(j)).collect();
        }
        if !complement.is_empty() {
            return Ok(Torsion::NotExact {
                stage: self.maps.len(),
            });
        }
        Ok(Torsion::Value(tau))
    }
}

/// `c · res^ℓ` at the specialization: the determinant of the resultant complex.
pub fn resultant_power(sys: &ToricSystem, flag: &Flag, spec: &Specialization) -> Result<Rational> {
    let cx = build_resultant_complex(sys, flag, spec)?;
    match cx.cayley_determinant()? {
        Torsion::Value(v) => Ok(v),
        Torsion::NotExact { stage } => Err(Error::NonGeneric(format!(
            "resultant complex is not exact at C_{}",
            stage
        ))),
    }
}

/// The `h`-subresultant, with `S_ρ/h` oriented so that `(h, rest)` is positive.
/// Zero when `h` lies in `⟨F⟩_ρ`.
pub fn subresultant_value(
    sys: &ToricSystem,
    h: &Exponent,
    spec: &Specialization,
) -> Result<Rational> {
    let pos = sys
        .rho_basis()
        .position(h)
        .ok_or_else(|| Error::NotInBasis(format!("{:?}", h.0)))?;
    let cx = build_subresultant_complex(sys, h, spec)?;
    match cx.cayley_determinant()? {
        Torsion::Value(v) => Ok(if pos % 2 == 1 { -v } else { v }),
        Torsion::NotExact { stage: 0 } => Ok(Rational::zero()),
        Torsion::NotExact { stage } => Err(Error::NonGeneric(format!(
            "subresultant complex is not exact at C_{}",
            stage
        ))),
    }
}

/// The residue of `h` by the Macaulay quotient and by `S_h / (c·res^ℓ)`.
pub fn residue_cross_check(
    sys: &ToricSystem,
    flag: &Flag,
    h: &Exponent,
    spec: &Specialization,
) -> Result<(Rational, Rational)> {
    let ctx = crate::macaulay::ResidueContext::new(sys, flag, spec)?;
    let direct = ctx.residue_monomial(h)?;
    let res = resultant_power(sys, flag, spec)?;
    let sub = subresultant_value(sys, h, spec)?;
    Ok((direct, sub / res))
}
