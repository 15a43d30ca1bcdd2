//! The matrix of `φ : (G_0,…,G_n,c) ↦ ∑ G_i F_i + c Δ_σ̄` and toric residues as
//! quotients of its minors.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{CoeffPoly, Exponent, Monomial, RatMatrix, Rational, Specialization};
use crate::delta::delta_element;
use crate::error::{Error, Result};
use crate::system::{CoxPolynomial, RatCoxPolynomial, ToricSystem};
use crate::toric::{Flag, MonomialBasis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowTag {
    /// The row of `x^multiplier · F_eq`.
    F { eq: usize, multiplier: Exponent },
    /// The row of the flag element.
    Delta,
}

/// `𝕄` with symbolic entries, stored by sparse rows.
#[derive(Clone, Debug)]
pub struct MacaulayMatrix {
    rows: Vec<RowTag>,
    entries: Vec<Vec<(usize, CoeffPoly)>>,
    columns: MonomialBasis,
    delta: CoxPolynomial,
}

/// Sparse row for `x^a · f` in the basis `cols`.
pub(crate) fn shifted_row<C: crate::arith::Coeff>(
    f: &crate::arith::SparsePoly<Exponent, C>,
    a: &Exponent,
    cols: &MonomialBasis,
) -> Result<Vec<(usize, C)>> {
    let mut row = Vec::with_capacity(f.len());
    for (m, c) in f.terms() {
        let e = m.mul(a);
        let col = cols.position(&e).ok_or_else(|| {
            Error::Internal(format!("monomial {:?} is outside the target basis", e.0))
        })?;
        row.push((col, c.clone()));
    }
    row.sort_by_key(|(c, _)| *c);
    Ok(row)
}

impl MacaulayMatrix {
    pub fn assemble(sys: &ToricSystem, flag: &Flag) -> Result<Self> {
        let delta = delta_element(sys, flag)?;
        let columns = sys.rho_basis().clone();
        let mut rows = Vec::new();
        let mut entries = Vec::new();
        for (i, f) in sys.polys().iter().enumerate() {
            let shift: Vec<i64> = sys
                .rho()
                .iter()
                .zip(&sys.degrees()[i])
                .map(|(r, a)| r - a)
                .collect();
            let multipliers = sys.basis(&shift)?;
            for a in multipliers.exponents() {
                entries.push(shifted_row(f, a, &columns)?);
                rows.push(RowTag::F {
                    eq: i,
                    multiplier: a.clone(),
                });
            }
        }
        entries.push(shifted_row(
            &delta,
            &Exponent::zero(sys.fan().num_rays()),
            &columns,
        )?);
        rows.push(RowTag::Delta);
        Ok(MacaulayMatrix {
            rows,
            entries,
            columns,
            delta,
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn row_tags(&self) -> &[RowTag] {
        &self.rows
    }

    pub fn columns(&self) -> &MonomialBasis {
        &self.columns
    }

    pub fn delta(&self) -> &CoxPolynomial {
        &self.delta
    }

    /// Index of the Δ row (always the last row).
    pub fn delta_row(&self) -> usize {
        self.rows.len() - 1
    }

    /// The symbolic entry at `(r, c)`.
    pub fn entry(&self, r: usize, c: usize) -> CoeffPoly {
        self.entries[r]
            .iter()
            .find(|(j, _)| *j == c)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(CoeffPoly::zero)
    }

    pub fn evaluate(&self, spec: &Specialization) -> Result<RatMatrix> {
        let mut m = RatMatrix::zeros(self.nrows(), self.ncols());
        for (r, row) in self.entries.iter().enumerate() {
            for (c, v) in row {
                m.set(r, *c, spec.eval(v)?);
            }
        }
        Ok(m)
    }

    /// Greedy minor: the Δ row is offered first, then the F rows in canonical order.
    pub fn select_minor(&self, spec: &Specialization) -> Result<SelectedMinor> {
        let mut pref = Vec::with_capacity(self.nrows());
        pref.push(self.delta_row());
        pref.extend(0..self.delta_row());
        self.select_minor_with(spec, &pref)
    }

    /// Greedy minor over rows offered in the order `preference`.
    pub fn select_minor_with(
        &self,
        spec: &Specialization,
        preference: &[usize],
    ) -> Result<SelectedMinor> {
        let full = self.evaluate(spec)?;
        let ordered = full.select_rows(preference);
        let profile = ordered.rank_profile();
        if profile.rank < self.ncols() {
            return Err(Error::NonGeneric(format!(
                "rank {} of the Macaulay matrix is below {}",
                profile.rank,
                self.ncols()
            )));
        }
        if profile.cols.len() != self.ncols() {
            return Err(Error::Internal(
                "a maximal minor omits columns of the critical degree".into(),
            ));
        }
        let mut rows: Vec<usize> = profile.rows.iter().map(|&k| preference[k]).collect();
        rows.sort_unstable();
        if !rows.contains(&self.delta_row()) {
            return Err(Error::NonGeneric(
                "the flag element row is not part of any maximal minor".into(),
            ));
        }
        SelectedMinor::from_matrix(&full, rows, self.delta_row())
    }

    /// The minor on exactly the given rows (sorted), which must include Δ.
    pub fn minor_with_rows(&self, spec: &Specialization, rows: &[usize]) -> Result<SelectedMinor> {
        let full = self.evaluate(spec)?;
        let mut rows = rows.to_vec();
        rows.sort_unstable();
        rows.dedup();
        if rows.len() != self.ncols() {
            return Err(Error::NotSquare {
                rows: rows.len(),
                cols: self.ncols(),
            });
        }
        if !rows.contains(&self.delta_row()) {
            return Err(Error::InvalidFlag(
                "a minor must contain the flag element row".into(),
            ));
        }
        SelectedMinor::from_matrix(&full, rows, self.delta_row())
    }
}

/// A square nonsingular submatrix `M̃` of `𝕄` at a specialization, keeping all columns.
#[derive(Clone, Debug)]
pub struct SelectedMinor {
    rows: Vec<usize>,
    matrix: RatMatrix,
    delta_pos: usize,
    det: Rational,
    /// `M̃⁻¹ e_Δ`: entry `c` is the residue of the `c`-th basis monomial.
    residues: Vec<Rational>,
}

impl SelectedMinor {
    fn from_matrix(full: &RatMatrix, rows: Vec<usize>, delta_row: usize) -> Result<Self> {
        let cols: Vec<usize> = (0..full.ncols()).collect();
        let matrix = full.select(&rows, &cols);
        let det = matrix.det()?;
        if det.is_zero() {
            return Err(Error::NonGeneric("the chosen minor is singular".into()));
        }
        let delta_pos = rows
            .iter()
            .position(|&r| r == delta_row)
            .expect("checked by caller");
        let mut e = alloc::vec![Rational::zero(); rows.len()];
        e[delta_pos] = Rational::one();
        let residues = matrix
            .solve(&e)?
            .ok_or_else(|| Error::Internal("nonsingular minor failed to solve".into()))?;
        Ok(SelectedMinor {
            rows,
            matrix,
            delta_pos,
            det,
            residues,
        })
    }

    /// Rows of `𝕄` used, ascending (the Δ row is last).
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn det(&self) -> &Rational {
        &self.det
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Residue of the `c`-th monomial of `S_ρ`.
    pub fn residue_at(&self, c: usize) -> &Rational {
        &self.residues[c]
    }

    /// Residues of all monomials of `S_ρ`, in basis order.
    pub fn residues(&self) -> &[Rational] {
        &self.residues
    }

    /// `(-1)^{r+c} det(M̃_h) / det(M̃)`, with `M̃_h` obtained by deleting the Δ
    /// row and the column of `h`. Evaluated literally, as a cross-check of the
    /// batched residues.
    pub fn residue_by_cofactor(&self, c: usize) -> Result<Rational> {
        let n = self.size();
        let rows: Vec<usize> = (0..n).filter(|&r| r != self.delta_pos).collect();
        let cols: Vec<usize> = (0..n).filter(|&k| k != c).collect();
        let minor = self.matrix.select(&rows, &cols).det()?;
        let v = minor / &self.det;
        Ok(if (self.delta_pos + c) % 2 == 1 { -v } else { v })
    }

    /// `det(M̃_P)/det(M̃)` where the Δ row is replaced by the coefficients of `P`.
    pub fn residue_by_replacement(&self, p: &[Rational]) -> Result<Rational> {
        let mut m = self.matrix.clone();
        for (c, v) in p.iter().enumerate() {
            m.set(self.delta_pos, c, v.clone());
        }
        Ok(m.det()? / &self.det)
    }
}

/// Coefficient vector of `P` in the basis, or an error when `P` leaves it.
pub fn coefficient_vector(p: &RatCoxPolynomial, basis: &MonomialBasis) -> Result<Vec<Rational>> {
    let mut v = alloc::vec![Rational::zero(); basis.len()];
    for (m, c) in p.terms() {
        let k = basis
            .position(m)
            .ok_or_else(|| Error::NotInBasis(format!("{:?}", m.0)))?;
        v[k] = c.clone();
    }
    Ok(v)
}

impl SelectedMinor {
    pub fn residue_monomial(&self, basis: &MonomialBasis, h: &Exponent) -> Result<Rational> {
        let c = basis
            .position(h)
            .ok_or_else(|| Error::NotInBasis(format!("{:?}", h.0)))?;
        Ok(self.residues[c].clone())
    }

    /// The residue of a polynomial of critical degree, linear in `P`.
    pub fn residue_poly(&self, basis: &MonomialBasis, p: &RatCoxPolynomial) -> Result<Rational> {
        let v = coefficient_vector(p, basis)?;
        Ok(v.iter()
            .zip(&self.residues)
            .filter(|(a, _)| !a.is_zero())
            .map(|(a, r)| a * r)
            .sum())
    }
}

/// Everything needed to evaluate residues of one system at one specialization.
#[derive(Clone, Debug)]
pub struct ResidueContext {
    pub matrix: MacaulayMatrix,
    pub minor: SelectedMinor,
}

impl ResidueContext {
    pub fn new(sys: &ToricSystem, flag: &Flag, spec: &Specialization) -> Result<Self> {
        let matrix = MacaulayMatrix::assemble(sys, flag)?;
        let minor = matrix.select_minor(spec)?;
        Ok(ResidueContext { matrix, minor })
    }

    pub fn residue_monomial(&self, h: &Exponent) -> Result<Rational> {
        self.minor.residue_monomial(self.matrix.columns(), h)
    }

    pub fn residue_poly(&self, p: &RatCoxPolynomial) -> Result<Rational> {
        self.minor.residue_poly(self.matrix.columns(), p)
    }

    pub fn residues(&self) -> &[Rational] {
        self.minor.residues()
    }
}
