//! Shared fixtures: the worked systems and seeded random specializations.
#![allow(dead_code)]

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toric_core::arith::{
    coeff_atom, coeff_const, rat, Atom, CoeffPoly, Exponent, Rational, Specialization,
};
use toric_core::system::{CoxPolynomial, ToricSystem};
use toric_core::toric::{Fan, Flag};

pub fn exp(e: &[u32]) -> Exponent {
    Exponent(e.to_vec())
}

/// `∑_k u_{eq,k} x^{monos[k]}`.
pub fn generic_poly(eq: usize, monos: &[&[u32]]) -> CoxPolynomial {
    CoxPolynomial::from_terms(
        monos
            .iter()
            .enumerate()
            .map(|(k, m)| (exp(m), coeff_atom(Atom::new(eq, k)))),
    )
}

pub fn p1xp1_fan() -> Fan {
    Fan::new(
        vec![vec![1, 0], vec![0, -1], vec![-1, 0], vec![0, 1]],
        vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
    )
    .unwrap()
}

/// The system on ℙ¹×ℙ¹ with degrees D2+D3, 2D2+D3, D2+2D3; atom indices
/// follow the printed term lists (a_k, b_k, c_k).
pub fn p1xp1() -> (ToricSystem, Flag) {
    let fan = p1xp1_fan();
    let f0 = generic_poly(
        0,
        &[&[0, 1, 1, 0], &[1, 1, 0, 0], &[1, 0, 0, 1], &[0, 0, 1, 1]],
    );
    let f1 = generic_poly(
        1,
        &[
            &[0, 2, 1, 0],
            &[1, 2, 0, 0],
            &[0, 1, 1, 1],
            &[1, 1, 0, 1],
            &[0, 0, 1, 2],
            &[1, 0, 0, 2],
        ],
    );
    let f2 = generic_poly(
        2,
        &[
            &[0, 1, 2, 0],
            &[1, 1, 1, 0],
            &[2, 1, 0, 0],
            &[0, 0, 2, 1],
            &[1, 0, 1, 1],
            &[2, 0, 0, 1],
        ],
    );
    let degrees = vec![vec![0, 1, 1, 0], vec![0, 2, 1, 0], vec![0, 1, 2, 0]];
    let sys = ToricSystem::new(fan, degrees, vec![f0, f1, f2]).unwrap();
    let flag = Flag::new(sys.fan(), vec![vec![0], vec![0, 1]]).unwrap();
    (sys, flag)
}

pub fn p1xp1_second_flag(sys: &ToricSystem) -> Flag {
    Flag::new(sys.fan(), vec![vec![2], vec![2, 3]]).unwrap()
}

pub fn octahedron_fan() -> Fan {
    let mut rays = Vec::new();
    for i in 0..8i64 {
        rays.push(vec![
            if i & 4 != 0 { 1 } else { -1 },
            if i & 2 != 0 { 1 } else { -1 },
            if i & 1 != 0 { 1 } else { -1 },
        ]);
    }
    let cones = vec![
        vec![0, 1, 2, 3],
        vec![4, 5, 6, 7],
        vec![0, 1, 4, 5],
        vec![2, 3, 6, 7],
        vec![0, 2, 4, 6],
        vec![1, 3, 5, 7],
    ];
    Fan::new(rays, cones).unwrap()
}

pub const OCTAHEDRON_TERMS: [[u32; 8]; 7] = [
    [2, 2, 2, 2, 0, 0, 0, 0],
    [2, 2, 0, 0, 2, 2, 0, 0],
    [2, 0, 2, 0, 2, 0, 2, 0],
    [1, 1, 1, 1, 1, 1, 1, 1],
    [0, 2, 0, 2, 0, 2, 0, 2],
    [0, 0, 2, 2, 0, 0, 2, 2],
    [0, 0, 0, 0, 2, 2, 2, 2],
];

pub fn octahedron() -> (ToricSystem, Flag) {
    let fan = octahedron_fan();
    let terms: Vec<&[u32]> = OCTAHEDRON_TERMS.iter().map(|t| t.as_slice()).collect();
    let polys = (0..4).map(|i| generic_poly(i, &terms)).collect();
    let sys = ToricSystem::new(fan, vec![vec![1; 8]; 4], polys).unwrap();
    let flag = Flag::new(sys.fan(), vec![vec![0], vec![0, 1], vec![0, 1, 2, 3]]).unwrap();
    (sys, flag)
}

pub fn octahedron_second_flag(sys: &ToricSystem) -> Flag {
    Flag::new(sys.fan(), vec![vec![7], vec![5, 7], vec![4, 5, 6, 7]]).unwrap()
}

pub fn simplex_fan() -> Fan {
    Fan::new(
        vec![
            vec![1, 0, 0],
            vec![1, -3, -3],
            vec![-1, 3, 0],
            vec![-1, 0, 3],
        ],
        vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
    )
    .unwrap()
}

/// `F_i = a_i x1³ + b_i x2³ + c_i x3³ + d_i x4³`: atom index 0..3 is a, b, c, d.
pub fn simplex() -> (ToricSystem, Flag) {
    let fan = simplex_fan();
    let terms: [&[u32]; 4] = [&[3, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 3, 0], &[0, 0, 0, 3]];
    let polys = (0..4).map(|i| generic_poly(i, &terms)).collect();
    let sys = ToricSystem::new(fan, vec![vec![0, 3, 0, 0]; 4], polys).unwrap();
    let flag = Flag::new(sys.fan(), vec![vec![0], vec![0, 1], vec![0, 1, 2]]).unwrap();
    (sys, flag)
}

pub fn simplex_second_flag(sys: &ToricSystem) -> Flag {
    Flag::new(sys.fan(), vec![vec![3], vec![2, 3], vec![1, 2, 3]]).unwrap()
}

/// ℙ¹ with `F_0 = a x0 + b x1`, `F_1 = c x0 + d x1`.
pub fn p1_linear() -> (ToricSystem, Flag) {
    let fan = Fan::new(vec![vec![1], vec![-1]], vec![vec![0], vec![1]]).unwrap();
    let f0 = generic_poly(0, &[&[1, 0], &[0, 1]]);
    let f1 = generic_poly(1, &[&[1, 0], &[0, 1]]);
    let sys = ToricSystem::new(fan, vec![vec![1, 0], vec![1, 0]], vec![f0, f1]).unwrap();
    let flag = Flag::new(sys.fan(), vec![vec![0]]).unwrap();
    (sys, flag)
}

/// ℙ² with `F_0 = x0²` and dense quadrics `F_1`, `F_2`; atom indices follow
/// x1², x1x2, x2², x1x0, x2x0, x0².
pub fn example62() -> (ToricSystem, Flag) {
    let fan = toric_core::global::projective_space(2).unwrap();
    let quad: [&[u32]; 6] = [
        &[0, 2, 0],
        &[0, 1, 1],
        &[0, 0, 2],
        &[1, 1, 0],
        &[1, 0, 1],
        &[2, 0, 0],
    ];
    let f0 = CoxPolynomial::monomial(exp(&[2, 0, 0]), coeff_const(rat(1, 1)));
    let polys = vec![f0, generic_poly(1, &quad), generic_poly(2, &quad)];
    let sys = ToricSystem::new(fan, vec![vec![2, 0, 0]; 3], polys).unwrap();
    let flag = Flag::new(sys.fan(), vec![vec![1], vec![1, 2]]).unwrap();
    (sys, flag)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let n: i64 = rng.gen_range(-10_000..=10_000);
    let d: i64 = rng.gen_range(1..=100);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn random_nonzero<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = random_rational(rng);
        if r != rat(0, 1) {
            return r;
        }
    }
}

pub fn random_spec<R: Rng>(sys: &ToricSystem, rng: &mut R) -> Specialization {
    let mut s = Specialization::new();
    for a in sys.atoms() {
        s.set(a, random_nonzero(rng));
    }
    s
}

/// Value of atom `(eq, index)` in a specialization.
pub fn val(spec: &Specialization, eq: usize, index: usize) -> Rational {
    spec.get(&Atom::new(eq, index)).unwrap().clone()
}

/// Parses products like `-a_2 b_4 c_0 + b_5 a_3 c_0`, where letter `a` is
/// equation 0, `b` equation 1 and so on.
pub fn printed_coeff(text: &str) -> CoeffPoly {
    printed_coeff_with(text, |letter, k| {
        Atom::new((letter as u8 - b'a') as usize, k)
    })
}

/// As [`printed_coeff`], with a custom map from `letter_k` to atoms.
pub fn printed_coeff_with(text: &str, atom: impl Fn(char, usize) -> Atom) -> CoeffPoly {
    let mut out = CoeffPoly::zero();
    for (k, chunk) in text.replace('-', "+-").split('+').enumerate() {
        let chunk = chunk.trim();
        let (negative, body) = match chunk.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, chunk),
        };
        if body.trim().is_empty() || body.trim() == "0" {
            assert!(k == 0 || body.trim() == "0", "dangling sign in {text:?}");
            continue;
        }
        let mut term = coeff_const(rat(if negative { -1 } else { 1 }, 1));
        for tok in body.split_whitespace() {
            let (letter, idx) = tok.split_once('_').expect("atom like a_3");
            term = term.mul(&coeff_atom(atom(
                letter.chars().next().unwrap(),
                idx.parse().unwrap(),
            )));
        }
        out.add_assign(&term);
    }
    out
}
