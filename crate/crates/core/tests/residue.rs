mod common;

use common::*;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use toric_core::arith::{coeff_const, int, rat, Exponent, Rational, Specialization};
use toric_core::macaulay::{coefficient_vector, MacaulayMatrix, ResidueContext, RowTag};
use toric_core::system::{RatCoxPolynomial, ToricSystem};
use toric_core::toric::Flag;
use toric_core::Error;

fn context(sys: &ToricSystem, flag: &Flag, spec: &Specialization) -> ResidueContext {
    ResidueContext::new(sys, flag, spec).unwrap()
}

fn random_critical_poly<R: Rng>(sys: &ToricSystem, rng: &mut R) -> RatCoxPolynomial {
    RatCoxPolynomial::from_terms(
        sys.rho_basis()
            .exponents()
            .iter()
            .filter_map(|e| rng.gen_bool(0.6).then(|| (e.clone(), random_rational(rng)))),
    )
}

fn specialized_delta(ctx: &ResidueContext, spec: &Specialization) -> RatCoxPolynomial {
    ctx.matrix.delta().try_map_coeffs(|c| spec.eval(c)).unwrap()
}

#[test]
fn matrix_dimensions() {
    for ((sys, flag), rows, cols) in [
        (p1xp1(), 9, 9),
        (octahedron(), 101, 63),
        (simplex(), 33, 21),
        (example62(), 10, 10),
        (p1_linear(), 1, 1),
    ] {
        let m = MacaulayMatrix::assemble(&sys, &flag).unwrap();
        assert_eq!((m.nrows(), m.ncols()), (rows, cols));
        assert_eq!(m.row_tags().last(), Some(&RowTag::Delta));
        let f_rows: usize = (0..sys.polys().len())
            .map(|i| {
                let shift: Vec<i64> = sys
                    .rho()
                    .iter()
                    .zip(&sys.degrees()[i])
                    .map(|(r, a)| r - a)
                    .collect();
                sys.basis(&shift).unwrap().len()
            })
            .sum();
        assert_eq!(f_rows + 1, rows);
    }
}

#[test]
fn entries_are_coefficients_of_shifted_equations() {
    let (sys, flag) = p1xp1();
    let m = MacaulayMatrix::assemble(&sys, &flag).unwrap();
    for (r, tag) in m.row_tags().iter().enumerate() {
        let poly = match tag {
            RowTag::F { eq, multiplier } => {
                sys.polys()[*eq].mul_term(multiplier, &coeff_const(int(1)))
            }
            RowTag::Delta => m.delta().clone(),
        };
        for (c, col) in m.columns().exponents().iter().enumerate() {
            let want = poly.coeff(col).cloned().unwrap_or_default();
            assert_eq!(m.entry(r, c), want);
        }
    }
    // Rows come in equation order, multipliers ascending within each block.
    let eqs: Vec<usize> = m
        .row_tags()
        .iter()
        .filter_map(|t| match t {
            RowTag::F { eq, .. } => Some(*eq),
            RowTag::Delta => None,
        })
        .collect();
    assert_eq!(eqs, vec![0, 0, 0, 0, 1, 1, 2, 2]);
}

#[test]
fn flag_element_has_residue_one() {
    let mut rng = rng(21);
    for (sys, flag) in [p1xp1(), simplex(), example62(), p1_linear()] {
        for _ in 0..20 {
            let spec = random_spec(&sys, &mut rng);
            let ctx = context(&sys, &flag, &spec);
            assert_eq!(
                ctx.residue_poly(&specialized_delta(&ctx, &spec)).unwrap(),
                int(1)
            );
        }
    }
    let (sys, flag) = octahedron();
    for _ in 0..2 {
        let spec = random_spec(&sys, &mut rng);
        let ctx = context(&sys, &flag, &spec);
        assert_eq!(
            ctx.residue_poly(&specialized_delta(&ctx, &spec)).unwrap(),
            int(1)
        );
    }
}

#[test]
fn residues_vanish_on_the_ideal() {
    let mut rng = rng(22);
    for (sys, flag) in [p1xp1(), simplex(), example62()] {
        for _ in 0..5 {
            let spec = random_spec(&sys, &mut rng);
            let ctx = context(&sys, &flag, &spec);
            let f = sys.specialize(&spec).unwrap();
            for (r, tag) in ctx.matrix.row_tags().iter().enumerate() {
                if let RowTag::F { eq, multiplier } = tag {
                    let p = f[*eq].mul_term(multiplier, &int(1));
                    assert_eq!(ctx.residue_poly(&p).unwrap(), int(0), "row {r}");
                }
            }
        }
    }
}

#[test]
fn residues_are_linear() {
    let mut rng = rng(23);
    for (sys, flag) in [p1xp1(), simplex()] {
        let spec = random_spec(&sys, &mut rng);
        let ctx = context(&sys, &flag, &spec);
        for _ in 0..50 {
            let p = random_critical_poly(&sys, &mut rng);
            let q = random_critical_poly(&sys, &mut rng);
            let c = random_rational(&mut rng);
            let rp = ctx.residue_poly(&p).unwrap();
            let rq = ctx.residue_poly(&q).unwrap();
            assert_eq!(ctx.residue_poly(&p.add(&q)).unwrap(), &rp + &rq);
            assert_eq!(ctx.residue_poly(&p.scale(&c)).unwrap(), &c * &rp);
        }
        assert_eq!(ctx.residue_poly(&RatCoxPolynomial::zero()).unwrap(), int(0));
        let h = sys.rho_basis().get(0).clone();
        let c = rat(-7, 3);
        let ch = RatCoxPolynomial::monomial(h.clone(), c.clone());
        assert_eq!(
            ctx.residue_poly(&ch).unwrap(),
            c * ctx.residue_monomial(&h).unwrap()
        );
    }
}

#[test]
fn three_formulas_agree() {
    let mut rng = rng(24);
    for (sys, flag) in [p1xp1(), simplex(), example62()] {
        let spec = random_spec(&sys, &mut rng);
        let ctx = context(&sys, &flag, &spec);
        let basis = sys.rho_basis();
        for c in 0..basis.len() {
            let by_solve = ctx.minor.residue_at(c).clone();
            assert_eq!(ctx.minor.residue_by_cofactor(c).unwrap(), by_solve);
            let mut unit = vec![Rational::zero(); basis.len()];
            unit[c] = int(1);
            assert_eq!(ctx.minor.residue_by_replacement(&unit).unwrap(), by_solve);
        }
        let p = random_critical_poly(&sys, &mut rng);
        let v = coefficient_vector(&p, basis).unwrap();
        assert_eq!(
            ctx.minor.residue_by_replacement(&v).unwrap(),
            ctx.residue_poly(&p).unwrap()
        );
    }
}

#[test]
fn choice_of_minor_does_not_matter() {
    let mut rng = rng(25);
    for (sys, flag) in [p1xp1(), simplex(), example62()] {
        let m = MacaulayMatrix::assemble(&sys, &flag).unwrap();
        for _ in 0..5 {
            let spec = random_spec(&sys, &mut rng);
            let first = m.select_minor(&spec).unwrap();
            let mut order: Vec<usize> = (0..m.delta_row()).collect();
            order.shuffle(&mut rng);
            order.insert(0, m.delta_row());
            let other = m.select_minor_with(&spec, &order).unwrap();
            assert_eq!(first.residues(), other.residues());
            let reversed: Vec<usize> = std::iter::once(m.delta_row())
                .chain((0..m.delta_row()).rev())
                .collect();
            let third = m.select_minor_with(&spec, &reversed).unwrap();
            assert_eq!(first.residues(), third.residues());
        }
    }
}

#[test]
fn choice_of_flag_changes_at_most_one_sign() {
    let mut rng = rng(26);
    let cases = [
        {
            let (s, f) = p1xp1();
            let g = p1xp1_second_flag(&s);
            (s, f, g, 5)
        },
        {
            let (s, f) = simplex();
            let g = simplex_second_flag(&s);
            (s, f, g, 5)
        },
        {
            let (s, f) = octahedron();
            let g = octahedron_second_flag(&s);
            (s, f, g, 1)
        },
    ];
    for (sys, f, g, trials) in cases {
        for _ in 0..trials {
            let spec = random_spec(&sys, &mut rng);
            let a = context(&sys, &f, &spec);
            let b = context(&sys, &g, &spec);
            let sign = if a.residues() == b.residues() {
                int(1)
            } else {
                int(-1)
            };
            for (x, y) in a.residues().iter().zip(b.residues()) {
                assert_eq!(x, &(&sign * y));
            }
        }
    }
}

#[test]
fn scaling_an_equation_divides_the_residue() {
    let mut rng = rng(27);
    for (sys, flag) in [p1xp1(), simplex(), example62()] {
        let spec = random_spec(&sys, &mut rng);
        let base = context(&sys, &flag, &spec);
        for eq in 0..sys.polys().len() {
            for lambda in [int(2), int(3), int(-5)] {
                let scaled = sys.scale_equation(eq, &lambda);
                let ctx = context(&scaled, &flag, &spec);
                for (x, y) in base.residues().iter().zip(ctx.residues()) {
                    assert_eq!(y, &(x / &lambda));
                }
            }
        }
    }
}

#[test]
fn two_linear_forms_on_the_line() {
    let (sys, flag) = p1_linear();
    let mut rng = rng(28);
    for _ in 0..20 {
        let spec = random_spec(&sys, &mut rng);
        let ctx = context(&sys, &flag, &spec);
        let (a, b, c, d) = (
            val(&spec, 0, 0),
            val(&spec, 0, 1),
            val(&spec, 1, 0),
            val(&spec, 1, 1),
        );
        let want = int(1) / (a * d - b * c);
        assert_eq!(ctx.residue_monomial(&Exponent::zero(2)).unwrap(), want);
    }
}

#[test]
fn dense_quadrics_give_a_square_matrix_with_the_resultant_as_determinant() {
    let (sys, flag) = example62();
    let mut rng = rng(29);
    let h = exp(&[0, 2, 1]);
    for _ in 0..10 {
        let spec = random_spec(&sys, &mut rng);
        let ctx = context(&sys, &flag, &spec);
        assert_eq!(ctx.minor.size(), ctx.matrix.nrows());
        // res(x0², F1, F2) = res(F1(0,x1,x2), F2(0,x1,x2))².
        let a: Vec<Rational> = (0..3).map(|k| val(&spec, 1, k)).collect();
        let b: Vec<Rational> = (0..3).map(|k| val(&spec, 2, k)).collect();
        let syl = sylvester_quadrics(&a, &b);
        let det = ctx.minor.det().clone();
        assert!(det == &syl * &syl || det == -(&syl * &syl), "det = {det}");
        let c = ctx.matrix.columns().position(&h).unwrap();
        assert_eq!(
            ctx.residue_monomial(&h).unwrap(),
            ctx.minor.residue_by_cofactor(c).unwrap()
        );
    }
}

/// Resultant of `a0 u² + a1 uv + a2 v²` and `b0 u² + b1 uv + b2 v²`.
fn sylvester_quadrics(a: &[Rational], b: &[Rational]) -> Rational {
    let z = Rational::zero;
    let rows = vec![
        vec![a[0].clone(), a[1].clone(), a[2].clone(), z()],
        vec![z(), a[0].clone(), a[1].clone(), a[2].clone()],
        vec![b[0].clone(), b[1].clone(), b[2].clone(), z()],
        vec![z(), b[0].clone(), b[1].clone(), b[2].clone()],
    ];
    toric_core::arith::Matrix::from_rows(rows, 4)
        .unwrap()
        .det()
        .unwrap()
}

#[test]
fn zero_coefficients_are_rejected() {
    for (sys, flag) in [p1xp1(), simplex()] {
        let mut spec = Specialization::new();
        for a in sys.atoms() {
            spec.set(a, int(0));
        }
        let err = ResidueContext::new(&sys, &flag, &spec).unwrap_err();
        assert!(matches!(err, Error::NonGeneric(_)));
        assert!(err.is_degenerate());
    }
    let (sys, flag) = p1xp1();
    let full = random_spec(&sys, &mut rng(30));
    let mut spec = Specialization::new();
    for (a, v) in full.iter().skip(1) {
        spec.set(*a, v.clone());
    }
    assert!(matches!(
        ResidueContext::new(&sys, &flag, &spec),
        Err(Error::MissingAtom(_))
    ));
}

#[test]
fn matrix_is_onto_and_flag_element_is_not_in_the_ideal() {
    let mut rng = rng(31);
    for (sys, flag) in [p1xp1(), simplex(), example62(), octahedron()] {
        let m = MacaulayMatrix::assemble(&sys, &flag).unwrap();
        let spec = random_spec(&sys, &mut rng);
        let full = m.evaluate(&spec).unwrap();
        assert_eq!(full.rank(), m.ncols());
        let without: Vec<usize> = (0..m.delta_row()).collect();
        assert_eq!(full.select_rows(&without).rank(), m.ncols() - 1);
    }
}

#[test]
fn unknown_monomials_are_rejected() {
    let (sys, flag) = p1xp1();
    let spec = random_spec(&sys, &mut rng(32));
    let ctx = context(&sys, &flag, &spec);
    assert!(matches!(
        ctx.residue_monomial(&exp(&[1, 0, 0, 0])),
        Err(Error::NotInBasis(_))
    ));
    let p = RatCoxPolynomial::monomial(exp(&[3, 3, 0, 0]), int(1));
    assert!(matches!(ctx.residue_poly(&p), Err(Error::NotInBasis(_))));
}
