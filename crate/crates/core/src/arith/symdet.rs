//! Fully expanded determinants of small matrices over any coefficient ring.

use alloc::vec::Vec;

use super::poly::Coeff;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_SIZE: usize = 6;

/// Laplace expansion along the first row. Zero entries are skipped, and the
/// ring arithmetic cancels terms as they meet.
pub fn small_symbolic_det<C: Coeff>(m: &[Vec<C>], one: &C, max_size: usize) -> Result<C> {
    let n = m.len();
    if let Some(r) = m.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: r.len(),
        });
    }
    if n > max_size {
        return Err(Error::TooLarge {
            size: n,
            max: max_size,
        });
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(expand(m, 0, &cols, one))
}

fn expand<C: Coeff>(m: &[Vec<C>], row: usize, cols: &[usize], one: &C) -> C {
    if cols.is_empty() {
        return one.clone();
    }
    let mut acc = C::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = expand(m, row + 1, &rest, one);
        if minor.is_zero() {
            continue;
        }
        let term = entry.mul_ref(&minor);
        if k % 2 == 0 {
            acc.add_assign_ref(&term);
        } else {
            acc.add_assign_ref(&term.neg_ref());
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::{Exponent, SparsePoly};
    use crate::arith::rational::{int, Rational};
    use alloc::vec;

    type P = SparsePoly<Exponent, Rational>;

    fn var(i: usize) -> P {
        let mut e = vec![0; 2];
        e[i] = 1;
        P::monomial(Exponent(e), int(1))
    }

    #[test]
    fn two_by_two_symbolic() {
        let m = vec![vec![var(0), var(1)], vec![var(1), var(0)]];
        let one = P::monomial(Exponent::zero(2), int(1));
        let d = small_symbolic_det(&m, &one, DEFAULT_MAX_SIZE).unwrap();
        let expected = var(0).mul(&var(0)).sub(&var(1).mul(&var(1)));
        assert_eq!(d, expected);
    }

    #[test]
    fn refuses_large() {
        let m = vec![vec![int(1); 7]; 7];
        assert_eq!(
            small_symbolic_det(&m, &int(1), DEFAULT_MAX_SIZE),
            Err(Error::TooLarge { size: 7, max: 6 })
        );
    }
}
