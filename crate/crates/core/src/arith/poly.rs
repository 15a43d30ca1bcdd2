//! Sparse multivariate polynomials, generic over the monomial and the
//! coefficient ring.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt::Debug;

use num_traits::Zero;

use super::rational::Rational;

/// Coefficient ring operations needed by the polynomial and determinant code.
pub trait Coeff: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// A commutative monoid of monomials.
pub trait Monomial: Ord + Clone + Debug {
    fn mul(&self, other: &Self) -> Self;
}

/// Exponent vector in ℕ^s of a Cox-ring monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn zero(arity: usize) -> Self {
        Exponent(alloc::vec![0; arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        Some(Exponent(
            other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
        ))
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&e| e as i64).collect()
    }
}

impl Monomial for Exponent {
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Exponent vector in ℤ^n of a Laurent monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentExp(pub Vec<i64>);

impl Monomial for LaurentExp {
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        LaurentExp(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Polynomial as a map from monomial to nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly<M: Ord, C> {
    terms: BTreeMap<M, C>,
}

impl<M: Monomial, C: Coeff> Default for SparsePoly<M, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<M: Monomial, C: Coeff> SparsePoly<M, C> {
    pub fn zero() -> Self {
        SparsePoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: M, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (M, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c·m`, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: M, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, M, C> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> btree_map::Keys<'_, M, C> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &M) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn into_terms(self) -> BTreeMap<M, C> {
        self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in other.terms() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.neg_ref());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), c1.mul_ref(c2));
            }
        }
        out
    }

    /// `self · c · m`.
    pub fn mul_term(&self, m: &M, c: &C) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in self.terms() {
            out.add_term(m1.mul(m), c1.mul_ref(c));
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (m, c1) in self.terms() {
            out.add_term(m.clone(), c1.mul_ref(c));
        }
        out
    }

    /// Applies `f` to every coefficient; terms mapping to zero are dropped.
    pub fn map_coeffs<D: Coeff, F: FnMut(&C) -> D>(&self, mut f: F) -> SparsePoly<M, D> {
        let mut out = SparsePoly::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coeff, E, F: FnMut(&C) -> Result<D, E>>(
        &self,
        mut f: F,
    ) -> Result<SparsePoly<M, D>, E> {
        let mut out = SparsePoly::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }
}

impl<M: Monomial, C: Coeff> Coeff for SparsePoly<M, C> {
    fn zero() -> Self {
        SparsePoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        self.add_assign(other);
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

pub type LaurentPoly = SparsePoly<LaurentExp, Rational>;

impl LaurentPoly {
    /// Evaluates at a point of the torus; panics if a coordinate with a negative
    /// exponent is zero.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = <Rational as Zero>::zero();
        for (m, c) in self.terms() {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                t *= super::rational::pow_signed(x, e);
            }
            acc += t;
        }
        acc
    }
}
