//! Monomial bases of graded pieces of the Cox ring.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::divisor::DivisorClass;
use super::fan::Fan;
use super::lattice::dot;
use super::polytope::lattice_points;
use crate::arith::Exponent;
use crate::error::{Error, Result};

/// Canonical monomial order: total degree ascending, then graded reverse
/// lexicographic (a larger exponent on the last variable comes first).
pub fn monomial_cmp(a: &Exponent, b: &Exponent) -> Ordering {
    a.total_degree().cmp(&b.total_degree()).then_with(|| {
        for (x, y) in a.0.iter().rev().zip(b.0.iter().rev()) {
            match y.cmp(x) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

/// The monomials of `S_b`, one for each lattice point of `P_b`, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    representative: Vec<i64>,
    class: DivisorClass,
    exponents: Vec<Exponent>,
    index: BTreeMap<Exponent, usize>,
}

impl MonomialBasis {
    pub fn new(fan: &Fan, b: &[i64]) -> Result<Self> {
        let class = fan.class_group().class_of(b)?;
        let mut exponents = Vec::new();
        for m in lattice_points(fan, b)? {
            let e = fan
                .rays()
                .iter()
                .zip(b)
                .map(|(r, &bi)| {
                    u32::try_from(dot(r, &m) + bi).map_err(|_| {
                        Error::Internal("negative exponent from section polytope".into())
                    })
                })
                .collect::<Result<Vec<u32>>>()?;
            exponents.push(Exponent(e));
        }
        exponents.sort_by(monomial_cmp);
        let index = exponents
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Ok(MonomialBasis {
            representative: b.to_vec(),
            class,
            exponents,
            index,
        })
    }

    pub fn representative(&self) -> &[i64] {
        &self.representative
    }

    pub fn class(&self) -> &DivisorClass {
        &self.class
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn position(&self, e: &Exponent) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn get(&self, i: usize) -> &Exponent {
        &self.exponents[i]
    }
}
