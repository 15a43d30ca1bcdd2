//! The subcommands. Each returns its report as text.

use std::fmt::Write as _;
use std::path::PathBuf;

use toric_core::arith::{
    coeff_const, format_rational, int, pow_signed, Exponent, LaurentPoly, Rational, Specialization,
};
use toric_core::complex::{build_resultant_complex, resultant_power, subresultant_value, Torsion};
use toric_core::delta::{bracket_form, delta_element};
use toric_core::global::{global_residue_direct, homogenize_dense, macaulay_global_residue, to_laurent};
use toric_core::macaulay::{MacaulayMatrix, ResidueContext, RowTag};
use toric_core::system::{RatCoxPolynomial, ToricSystem};
use toric_core::toric::{lattice_index, Flag};

use crate::error::{CliError, CliResult};
use crate::expr::{format_coeff, format_monomial, parse_monomial, parse_poly};
use crate::instance::{GlobalInstance, Instance, ToricInstance};
use crate::sampling::{read_spec, spec_to_json, Sampler};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecSource {
    File(PathBuf),
    Seed(u64),
}

#[derive(Clone, Debug)]
pub struct Options {
    pub spec: SpecSource,
    pub retry: usize,
    pub flag: usize,
    pub h: Option<String>,
    pub poly: Option<String>,
    pub trials: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            spec: SpecSource::Seed(0),
            retry: 0,
            flag: 0,
            h: None,
            poly: None,
            trials: 10,
        }
    }
}

/// Runs `f` at the requested specialization. Seeded draws are repeated up to
/// `retry` more times while the specialization is degenerate.
fn at_spec<T>(
    inst: &Instance,
    opts: &Options,
    mut f: impl FnMut(&Specialization) -> CliResult<T>,
) -> CliResult<(T, Specialization)> {
    match &opts.spec {
        SpecSource::File(path) => {
            let spec = read_spec(path, inst.atoms())?;
            f(&spec).map(|v| (v, spec))
        }
        SpecSource::Seed(seed) => {
            let mut sampler = Sampler::new(*seed);
            let mut attempt = 0;
            loop {
                let spec = sampler.specialization(inst.atoms());
                match f(&spec) {
                    Err(CliError::Degenerate(_)) if attempt < opts.retry => attempt += 1,
                    other => return other.map(|v| (v, spec)),
                }
            }
        }
    }
}

fn toric(inst: &Instance) -> CliResult<&ToricInstance> {
    match inst {
        Instance::Toric(t) => Ok(t),
        Instance::Global(_) => Err(CliError::validation(
            "this command needs a toric instance; use `global` for global-residue instances",
        )),
    }
}

fn flag<'a>(t: &'a ToricInstance, opts: &Options) -> CliResult<&'a Flag> {
    t.flags.get(opts.flag).ok_or_else(|| {
        CliError::validation(format!(
            "flag index {} out of range ({} flags)",
            opts.flag,
            t.flags.len()
        ))
    })
}

fn cone_list(flag: &Flag) -> String {
    let cones: Vec<String> = flag
        .cones()
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    cones.join(" < ")
}

/// Prints `Δ_σ̄`, in bracket notation when the system allows it.
pub fn delta(inst: &Instance, opts: &Options) -> CliResult<String> {
    let t = toric(inst)?;
    let flag = flag(t, opts)?;
    let sys = &t.system;
    let d = delta_element(sys, flag)?;
    let vars = &t.variables;
    let z: Vec<String> = flag
        .z_monomials(sys.fan())
        .iter()
        .map(|e| format_monomial(e, vars))
        .collect();
    let mut out = String::new();
    writeln!(out, "flag: {}", cone_list(flag)).unwrap();
    writeln!(out, "z: {}", z.join(", ")).unwrap();
    writeln!(out, "terms: {}", d.len()).unwrap();
    match bracket_form(sys, &d) {
        Some(mut brackets) => {
            brackets.sort_by(|a, b| a.columns.cmp(&b.columns));
            for b in brackets {
                let sep = if b.columns.iter().any(|&c| c > 9) { "," } else { "" };
                let label = b.columns.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(sep);
                writeln!(
                    out,
                    "{} [{}] {}",
                    if b.negative { "-" } else { "+" },
                    label,
                    format_monomial(&b.monomial, vars)
                )
                .unwrap();
            }
        }
        None => {
            for (m, c) in toric_core::system::sorted_terms(&d) {
                writeln!(out, "+ ({}) {}", format_coeff(&c, &t.atoms.by_atom), format_monomial(&m, vars))
                    .unwrap();
            }
        }
    }
    Ok(out)
}

enum Target {
    Monomial(Exponent),
    Poly(RatCoxPolynomial),
    All,
}

fn residue_target(t: &ToricInstance, opts: &Options) -> CliResult<Target> {
    if let Some(h) = &opts.h {
        return Ok(Target::Monomial(parse_monomial(h, &t.variables)?));
    }
    if let Some(p) = &opts.poly {
        return Ok(Target::Poly(parse_poly(p, &t.variables)?));
    }
    if let Some(h) = &t.h {
        return Ok(Target::Monomial(h.clone()));
    }
    if let Some(p) = &t.p {
        return Ok(Target::Poly(p.clone()));
    }
    Ok(Target::All)
}

/// The residue of `h`, of `P`, or of every basis monomial.
pub fn residue(inst: &Instance, opts: &Options) -> CliResult<String> {
    let t = toric(inst)?;
    let flag = flag(t, opts)?;
    let target = residue_target(t, opts)?;
    let matrix = MacaulayMatrix::assemble(&t.system, flag)?;
    let (out, _) = at_spec(inst, opts, |spec| {
        let minor = matrix.select_minor(spec)?;
        let basis = matrix.columns();
        Ok(match &target {
            Target::Monomial(h) => {
                format!("{}\n", format_rational(&minor.residue_monomial(basis, h)?))
            }
            Target::Poly(p) => format!("{}\n", format_rational(&minor.residue_poly(basis, p)?)),
            Target::All => {
                let mut s = String::new();
                for (c, e) in basis.exponents().iter().enumerate() {
                    writeln!(
                        s,
                        "{} {}",
                        format_monomial(e, &t.variables),
                        format_rational(minor.residue_at(c))
                    )
                    .unwrap();
                }
                s
            }
        })
    })?;
    Ok(out)
}

/// The resultant-complex determinant, and `c` when the resultant is known.
pub fn resultant(inst: &Instance, opts: &Options) -> CliResult<String> {
    let t = toric(inst)?;
    let flag = flag(t, opts)?;
    let sys = &t.system;
    let ell = lattice_index(sys.fan(), sys.degrees())?;
    let ((tau, reference), spec) = at_spec(inst, opts, |spec| {
        let tau = resultant_power(sys, flag, spec)?;
        let reference = match &t.resultant {
            Some(r) => Some(r.eval(sys, flag, spec)?),
            None => None,
        };
        Ok((tau, reference))
    })?;
    let mut out = String::new();
    writeln!(out, "specialization: {}", spec_to_json(&spec, &t.atoms)).unwrap();
    writeln!(out, "ell: {ell}").unwrap();
    writeln!(out, "determinant of the resultant complex: {}", format_rational(&tau)).unwrap();
    match reference {
        Some(r) => {
            let r_ell = pow_signed(&r, ell as i64);
            writeln!(out, "reference resultant: {}", format_rational(&r)).unwrap();
            if r_ell == int(0) {
                return Err(CliError::Degenerate("the reference resultant vanishes".into()));
            }
            writeln!(out, "c: {}", format_rational(&(tau / r_ell))).unwrap();
        }
        None => writeln!(out, "c: not observable (no resultant reference in the instance)").unwrap(),
    }
    Ok(out)
}

/// The `h`-subresultant.
pub fn subres(inst: &Instance, opts: &Options) -> CliResult<String> {
    let t = toric(inst)?;
    let h = match residue_target(t, opts)? {
        Target::Monomial(h) => h,
        _ => return Err(CliError::validation("subres needs a monomial (--h or \"h\" in the instance)")),
    };
    let (s, spec) = at_spec(inst, opts, |spec| Ok(subresultant_value(&t.system, &h, spec)?))?;
    Ok(format!(
        "specialization: {}\nS_{}: {}\n",
        spec_to_json(&spec, &t.atoms),
        format_monomial(&h, &t.variables),
        format_rational(&s)
    ))
}

fn global_instance(inst: &Instance) -> CliResult<&GlobalInstance> {
    match inst {
        Instance::Global(g) => Ok(g),
        Instance::Toric(_) => Err(CliError::validation("`global` needs an instance of kind \"global\"")),
    }
}

/// The global residue through the toric residue, and by direct summation when roots are given.
pub fn global(inst: &Instance, opts: &Options) -> CliResult<String> {
    let g = global_instance(inst)?;
    let hom = homogenize_dense(&g.polys, &g.recipe)?;
    let q = LaurentPoly::monomial(hom.torus_numerator(), int(1));
    let ((value, direct), spec) = at_spec(inst, opts, |spec| {
        let value = macaulay_global_residue(&g.polys, &g.recipe, spec)?;
        let direct = match &g.roots {
            Some(roots) => {
                let f = g
                    .polys
                    .iter()
                    .map(|p| to_laurent(p, spec))
                    .collect::<Result<Vec<_>, _>>()?;
                Some(global_residue_direct(&f, &q, roots)?)
            }
            None => None,
        };
        Ok((value, direct))
    })?;
    let mut vars = vec!["x0".to_string()];
    vars.extend((1..=g.polys.len()).map(|i| format!("x{i}")));
    let mut out = String::new();
    if !g.atoms.by_atom.is_empty() {
        writeln!(out, "specialization: {}", spec_to_json(&spec, &g.atoms)).unwrap();
    }
    let tvars: Vec<String> = g.variables.clone();
    let qexp = Exponent(hom.torus_numerator().0.iter().map(|&e| e as u32).collect());
    writeln!(out, "G: {}", format_monomial(&hom.g, &vars)).unwrap();
    writeln!(out, "q: {}", format_monomial(&qexp, &tvars)).unwrap();
    writeln!(out, "global residue: {}", format_rational(&value)).unwrap();
    if let Some(d) = direct {
        writeln!(out, "direct sum over roots: {}", format_rational(&d)).unwrap();
        writeln!(out, "agree: {}", if d == value { "yes" } else { "no" }).unwrap();
        if d != value {
            return Err(CliError::validation(out));
        }
    }
    Ok(out)
}

/// Pass counts per property.
#[derive(Default)]
struct Tally {
    rows: Vec<(String, usize, usize)>,
}

impl Tally {
    fn record(&mut self, name: &str, ok: bool) {
        match self.rows.iter_mut().find(|(n, _, _)| n == name) {
            Some(row) => {
                row.1 += ok as usize;
                row.2 += 1;
            }
            None => self.rows.push((name.to_string(), ok as usize, 1)),
        }
    }

    fn all_passed(&self) -> bool {
        self.rows.iter().all(|(_, p, t)| p == t)
    }
}

fn random_poly(sampler: &mut Sampler, len: usize) -> Vec<Rational> {
    (0..len).map(|_| int(sampler.small_int(20))).collect()
}

/// Integer `e` with `λ^e = r`, searched in a bounded window.
fn exponent_of(lambda: &Rational, r: &Rational) -> Option<i64> {
    (-400..=400).find(|&e| pow_signed(lambda, e) == *r)
}

/// Agreement up to one sign: `Some(±1)` or `None`.
fn sign_between(a: &[Rational], b: &[Rational]) -> Option<i32> {
    if a == b {
        Some(1)
    } else if a.iter().zip(b).all(|(x, y)| *x == -y.clone()) {
        Some(-1)
    } else {
        None
    }
}

/// Runs the invariant suites over `trials` specializations.
pub fn verify(inst: &Instance, opts: &Options) -> CliResult<String> {
    if let Instance::Global(_) = inst {
        return verify_global(inst, opts);
    }
    let t = toric(inst)?;
    let flag = flag(t, opts)?;
    let sys = &t.system;
    let matrix = MacaulayMatrix::assemble(sys, flag)?;
    let basis = matrix.columns().clone();
    let other_flags: Vec<&Flag> = t
        .flags
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != opts.flag)
        .map(|(_, f)| f)
        .collect();
    let other_matrices = other_flags
        .iter()
        .map(|f| MacaulayMatrix::assemble(sys, f))
        .collect::<Result<Vec<_>, _>>()?;
    let ell = lattice_index(sys.fan(), sys.degrees())?;
    let seed = match &opts.spec {
        SpecSource::Seed(s) => *s,
        SpecSource::File(_) => 0,
    };
    let mut sampler = Sampler::new(seed);
    let mut tally = Tally::default();
    let mut out = String::new();
    writeln!(out, "instance: {}", t.name).unwrap();
    writeln!(out, "flag: {}", cone_list(flag)).unwrap();
    writeln!(
        out,
        "Macaulay matrix: {}x{}, ell = {}",
        matrix.nrows(),
        matrix.ncols(),
        ell
    )
    .unwrap();
    let mut flag_signs: Vec<Option<i32>> = vec![None; other_flags.len()];
    let mut cross_sign: Option<Rational> = None;
    let mut constants: Vec<Rational> = Vec::new();
    let file_spec = match &opts.spec {
        SpecSource::File(p) => Some(read_spec(p, &t.atoms)?),
        SpecSource::Seed(_) => None,
    };
    let trials = if file_spec.is_some() { 1 } else { opts.trials };
    for trial in 0..trials {
        let mut attempt = 0;
        let (spec, ctx) = loop {
            let spec = match &file_spec {
                Some(s) => s.clone(),
                None => sampler.specialization(&t.atoms),
            };
            match matrix.select_minor(&spec) {
                Ok(minor) => break (spec, minor),
                Err(e) if e.is_degenerate() && attempt < opts.retry && file_spec.is_none() => attempt += 1,
                Err(e) => return Err(e.into()),
            }
        };
        let residues = ctx.residues().to_vec();
        let polys = sys.specialize(&spec)?;

        // Normalization on the flag element.
        let delta = matrix.delta().try_map_coeffs(|c| spec.eval(c))?;
        tally.record("residue of the flag element is 1", ctx.residue_poly(&basis, &delta)? == int(1));

        // Vanishing on ⟨F⟩_ρ.
        for tag in matrix.row_tags() {
            if let RowTag::F { eq, multiplier } = tag {
                let p = polys[*eq].mul_term(multiplier, &int(1));
                tally.record("residue vanishes on the ideal", ctx.residue_poly(&basis, &p)? == int(0));
            }
        }

        // Linearity, through the replaced-row determinant.
        for _ in 0..5 {
            let p = random_poly(&mut sampler, basis.len());
            let q = random_poly(&mut sampler, basis.len());
            let c = sampler.rational();
            let sum: Vec<Rational> = p.iter().zip(&q).map(|(a, b)| a + &c * b).collect();
            let lhs = ctx.residue_by_replacement(&sum)?;
            let rhs = ctx.residue_by_replacement(&p)? + &c * ctx.residue_by_replacement(&q)?;
            tally.record("residue is linear", lhs == rhs);
            let direct: Rational = p.iter().zip(&residues).map(|(a, r)| a * r).sum();
            tally.record("replaced-row quotient matches", direct == ctx.residue_by_replacement(&p)?);
        }

        // Cofactor quotients.
        let cols: Vec<usize> = if basis.len() <= 30 {
            (0..basis.len()).collect()
        } else {
            (0..4).map(|_| sampler.small_int(1_000_000).unsigned_abs() as usize % basis.len()).collect()
        };
        for c in cols {
            tally.record("cofactor quotient matches", ctx.residue_by_cofactor(c)? == residues[c]);
        }

        // Another maximal minor.
        let mut pref: Vec<usize> = vec![matrix.delta_row()];
        pref.extend((0..matrix.delta_row()).rev());
        let alt = matrix.select_minor_with(&spec, &pref)?;
        tally.record("independent of the chosen minor", alt.residues() == residues.as_slice());

        // Other flags.
        for (k, m) in other_matrices.iter().enumerate() {
            let r = m.select_minor(&spec)?;
            let sign = sign_between(&residues, r.residues());
            let ok = match (sign, flag_signs[k]) {
                (None, _) => false,
                (Some(s), None) => {
                    flag_signs[k] = Some(s);
                    true
                }
                (Some(s), Some(prev)) => s == prev,
            };
            tally.record("independent of the flag up to one sign", ok);
        }

        // The complexes.
        let cx = build_resultant_complex(sys, flag, &spec)?;
        tally.record("consecutive differentials compose to zero", cx.is_complex()?);
        let tau = match cx.cayley_determinant()? {
            Torsion::Value(v) => v,
            Torsion::NotExact { stage } => {
                return Err(CliError::Degenerate(format!("resultant complex not exact at C_{stage}")))
            }
        };
        let reversed = cx.cayley_determinant_with(|_, n| (0..n).rev().collect())?;
        tally.record("complex determinant independent of the subsets", reversed == Torsion::Value(tau.clone()));

        // Residue through subresultants.
        let hs: Vec<usize> = if basis.len() <= 25 {
            (0..basis.len()).collect()
        } else {
            let mut v: Vec<usize> = Vec::new();
            while v.len() < 6 {
                let c = sampler.small_int(1_000_000).unsigned_abs() as usize % basis.len();
                if !v.contains(&c) {
                    v.push(c);
                }
            }
            v
        };
        for c in hs {
            let s = subresultant_value(sys, basis.get(c), &spec)?;
            let ok = if s == int(0) {
                residues[c] == int(0)
            } else {
                let ratio = &residues[c] * &tau / &s;
                let unit = ratio == int(1) || ratio == int(-1);
                let same = cross_sign.get_or_insert_with(|| ratio.clone()) == &ratio;
                unit && same
            };
            tally.record("residue = ±S_h / det(resultant complex), one sign", ok);
        }

        // The constant c.
        match &t.resultant {
            Some(r) => {
                let reference = pow_signed(&r.eval(sys, flag, &spec)?, ell as i64);
                let c = &tau / &reference;
                writeln!(out, "trial {trial}: c = {}", format_rational(&c)).unwrap();
                constants.push(c);
            }
            None => writeln!(out, "trial {trial}: c not observable (no resultant reference)").unwrap(),
        }

        if trial < 2 {
            verify_scaling(sys, flag, &spec, &residues, &tau, &mut tally, &mut out, trial)?;
        }
    }
    if let Some(first) = constants.first() {
        let same = constants.iter().all(|c| c == first);
        tally.record("c is independent of the specialization", same);
        writeln!(
            out,
            "c: {} across {} specializations ({})",
            format_rational(first),
            constants.len(),
            if same { "constant" } else { "NOT constant" }
        )
        .unwrap();
    } else {
        writeln!(out, "c: not observable for this instance").unwrap();
    }
    if let Some(r) = &cross_sign {
        writeln!(out, "residue * det / S_h = {}", format_rational(r)).unwrap();
    }
    for (k, s) in flag_signs.iter().enumerate() {
        if let Some(s) = s {
            writeln!(out, "flag {} vs flag {}: sign {}", opts.flag, k + (k >= opts.flag) as usize, s).unwrap();
        }
    }
    let mut passed = 0;
    let mut total = 0;
    for (name, p, n) in &tally.rows {
        writeln!(out, "{}: {p}/{n} {}", name, if p == n { "pass" } else { "FAIL" }).unwrap();
        passed += p;
        total += n;
    }
    writeln!(out, "passed {passed}/{total}").unwrap();
    if tally.all_passed() {
        Ok(out)
    } else {
        Err(CliError::Validation(out))
    }
}

/// Checks `Residue(λF_i) = Residue(F)/λ` and measures, per equation, the
/// degree of the complex determinant and of one nonzero subresultant.
#[allow(clippy::too_many_arguments)]
fn verify_scaling(
    sys: &ToricSystem,
    flag: &Flag,
    spec: &Specialization,
    residues: &[Rational],
    tau: &Rational,
    tally: &mut Tally,
    out: &mut String,
    trial: usize,
) -> CliResult<()> {
    let probe = residues.iter().position(|r| *r != int(0));
    let probe_value = match probe {
        Some(c) => Some(subresultant_value(sys, sys.rho_basis().get(c), spec)?),
        None => None,
    };
    let mut tau_degrees = Vec::new();
    let mut sub_degrees = Vec::new();
    for i in 0..sys.polys().len() {
        let mut e_tau = None;
        let mut e_sub = None;
        let mut consistent = true;
        for l in [2i64, 3, -5] {
            let lambda = int(l);
            let scaled = sys.scale_equation(i, &lambda);
            let ctx = ResidueContext::new(&scaled, flag, spec)?;
            let want: Vec<Rational> = residues.iter().map(|r| r / &lambda).collect();
            tally.record("residue scales by 1/lambda", ctx.residues() == want.as_slice());
            if l < 0 {
                continue;
            }
            let t2 = resultant_power(&scaled, flag, spec)?;
            consistent &= settle(&mut e_tau, exponent_of(&lambda, &(t2 / tau)));
            if let (Some(c), Some(s)) = (probe, &probe_value) {
                let s2 = subresultant_value(&scaled, sys.rho_basis().get(c), spec)?;
                consistent &= settle(&mut e_sub, exponent_of(&lambda, &(s2 / s)));
            }
        }
        tally.record("scaling degrees are integral and consistent", consistent);
        tau_degrees.push(e_tau.map_or("?".to_string(), |e| e.to_string()));
        sub_degrees.push(e_sub.map_or("-".to_string(), |e| e.to_string()));
    }
    writeln!(
        out,
        "trial {trial}: degree in each F_i of det(resultant complex): [{}]",
        tau_degrees.join(", ")
    )
    .unwrap();
    if let Some(c) = probe {
        writeln!(
            out,
            "trial {trial}: degree in each F_i of S_h for h = basis monomial {c}: [{}]",
            sub_degrees.join(", ")
        )
        .unwrap();
    }
    Ok(())
}

/// Records an observed exponent; false if it is missing or disagrees.
fn settle(slot: &mut Option<i64>, seen: Option<i64>) -> bool {
    match (seen, *slot) {
        (None, _) => false,
        (Some(e), None) => {
            *slot = Some(e);
            true
        }
        (Some(e), Some(prev)) => e == prev,
    }
}

fn verify_global(inst: &Instance, opts: &Options) -> CliResult<String> {
    let g = global_instance(inst)?;
    let seed = match &opts.spec {
        SpecSource::Seed(s) => *s,
        SpecSource::File(_) => 0,
    };
    let mut sampler = Sampler::new(seed);
    let mut tally = Tally::default();
    let mut out = String::new();
    writeln!(out, "instance: {}", g.name).unwrap();
    let hom = homogenize_dense(&g.polys, &g.recipe)?;
    let q = LaurentPoly::monomial(hom.torus_numerator(), int(1));
    for _ in 0..opts.trials.max(1) {
        let spec = sampler.specialization(&g.atoms);
        let value = macaulay_global_residue(&g.polys, &g.recipe, &spec)?;
        if let Some(roots) = &g.roots {
            let f = g
                .polys
                .iter()
                .map(|p| to_laurent(p, &spec))
                .collect::<Result<Vec<_>, _>>()?;
            tally.record("matches the sum over roots", global_residue_direct(&f, &q, roots)? == value);
        }
        for i in 0..g.polys.len() {
            let lambda = int(3);
            let mut scaled = g.polys.clone();
            scaled[i] = scaled[i].map_coeffs(|c| c.mul(&coeff_const(lambda.clone())));
            let v = macaulay_global_residue(&scaled, &g.recipe, &spec)?;
            tally.record("scales by 1/lambda", v == &value / &lambda);
        }
        // The toric residue of G against the ideal: G·x0^k is killed.
        let ctx = ResidueContext::new(&hom.system, &hom.flag, &spec)?;
        let basis = ctx.matrix.columns().clone();
        let mut zero = true;
        for tag in ctx.matrix.row_tags() {
            if let RowTag::F { eq, multiplier } = tag {
                let p = hom.system.specialize(&spec)?[*eq].mul_term(multiplier, &int(1));
                zero &= ctx.minor.residue_poly(&basis, &p)? == int(0);
            }
        }
        tally.record("vanishes on the ideal", zero);
        writeln!(out, "global residue: {}", format_rational(&value)).unwrap();
    }
    let mut passed = 0;
    let mut total = 0;
    for (name, p, n) in &tally.rows {
        writeln!(out, "{}: {p}/{n} {}", name, if p == n { "pass" } else { "FAIL" }).unwrap();
        passed += p;
        total += n;
    }
    writeln!(out, "passed {passed}/{total}").unwrap();
    if tally.all_passed() {
        Ok(out)
    } else {
        Err(CliError::Validation(out))
    }
}
