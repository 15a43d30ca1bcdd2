//! Coefficient indeterminates `u_{ia}` and polynomials in them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::poly::{Monomial, SparsePoly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// The generic coefficient of the `index`-th support monomial of equation `eq`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub eq: usize,
    pub index: usize,
}

impl Atom {
    pub fn new(eq: usize, index: usize) -> Self {
        Atom { eq, index }
    }
}

/// A monomial in the atoms: sorted `(atom, exponent)` pairs with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomMono(Vec<(Atom, u32)>);

impl AtomMono {
    pub fn one() -> Self {
        AtomMono(Vec::new())
    }

    pub fn atom(a: Atom) -> Self {
        AtomMono(alloc::vec![(a, 1)])
    }

    pub fn factors(&self) -> &[(Atom, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
}

impl Monomial for AtomMono {
    fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            match a.cmp(&b) {
                core::cmp::Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        AtomMono(out)
    }
}

/// Polynomial over ℚ in the coefficient atoms: an element of the ring 𝔸.
pub type CoeffPoly = SparsePoly<AtomMono, Rational>;

pub fn coeff_const(c: Rational) -> CoeffPoly {
    CoeffPoly::monomial(AtomMono::one(), c)
}

pub fn coeff_atom(a: Atom) -> CoeffPoly {
    CoeffPoly::monomial(AtomMono::atom(a), Rational::one())
}

impl CoeffPoly {
    /// The value as a constant, if no atom occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Every atom occurring in some term.
    pub fn atoms(&self) -> Vec<Atom> {
        let mut out: Vec<Atom> = self
            .monomials()
            .flat_map(|m| m.factors().iter().map(|(a, _)| *a))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// An assignment of rational values to atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Specialization {
    values: BTreeMap<Atom, Rational>,
}

impl Specialization {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, a: Atom, v: Rational) {
        self.values.insert(a, v);
    }

    pub fn get(&self, a: &Atom) -> Option<&Rational> {
        self.values.get(a)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, &Rational)> {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Multiplies the value of every atom of equation `eq` by `lambda`.
    pub fn scale_equation(&self, eq: usize, lambda: &Rational) -> Self {
        let mut out = self.clone();
        for (a, v) in out.values.iter_mut() {
            if a.eq == eq {
                *v *= lambda;
            }
        }
        out
    }

    pub fn eval_mono(&self, m: &AtomMono) -> Result<Rational> {
        let mut acc = Rational::one();
        for (a, e) in m.factors() {
            let v = self
                .values
                .get(a)
                .ok_or_else(|| Error::MissingAtom(format!("u[{},{}]", a.eq, a.index)))?;
            for _ in 0..*e {
                acc *= v;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, p: &CoeffPoly) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in p.terms() {
            acc += self.eval_mono(m)? * c;
        }
        Ok(acc)
    }
}
