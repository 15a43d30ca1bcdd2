//! The JSON instance format and its validation into core types.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use toric_core::arith::{
    coeff_atom, coeff_const, format_rational, parse_rational, Atom, CoeffPoly, Exponent,
    RatMatrix, Rational, Specialization,
};
use toric_core::global::{AffinePoly, Recipe};
use toric_core::macaulay::MacaulayMatrix;
use toric_core::system::{CoxPolynomial, RatCoxPolynomial, ToricSystem};
use toric_core::toric::{Fan, Flag};

use crate::error::{CliError, CliResult};
use crate::expr::{format_monomial, format_rat_poly, parse_monomial, parse_poly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermSpec {
    pub exp: Vec<u32>,
    /// A rational `"p/q"` or an atom name.
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FlagField {
    One(Vec<Vec<usize>>),
    Many(Vec<Vec<Vec<usize>>>),
}

impl FlagField {
    fn flags(&self) -> Vec<Vec<Vec<usize>>> {
        match self {
            FlagField::One(f) => vec![f.clone()],
            FlagField::Many(fs) => fs.clone(),
        }
    }
}

/// A known form of the sparse resultant, used to read off the constant `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum ResultantSpec {
    /// `det(det)^power` with entries that are atoms or rationals.
    Determinant {
        det: Vec<Vec<String>>,
        #[serde(default = "one")]
        power: u32,
    },
    /// The Macaulay matrix is square and its determinant is the resultant.
    SquareMacaulay,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
    pub degrees: Vec<Vec<i64>>,
    pub polys: Vec<Vec<TermSpec>>,
    pub flag: FlagField,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(default, rename = "P", skip_serializing_if = "Option::is_none")]
    pub p: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resultant: Option<ResultantSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum RecipeSpec {
    Macaulay,
    X0Power { k: u32, g: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    /// Affine polynomials in `t_1, …, t_n`.
    pub polys: Vec<Vec<TermSpec>>,
    pub recipe: RecipeSpec,
    /// The common zeros in the torus, when known, for the direct sum.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InstanceFile {
    Toric(ToricFile),
    Global(GlobalFile),
}

impl InstanceFile {
    pub fn from_json(text: &str) -> CliResult<Self> {
        if text.trim().is_empty() {
            return Err(CliError::validation("empty instance file"));
        }
        serde_json::from_str(text).map_err(|e| CliError::validation(format!("parse error: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instances always serialize")
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Validation(m) => CliError::Validation(format!("{}: {m}", path.display())),
            other => other,
        })
    }
}

/// Atom names in both directions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AtomTable {
    pub by_atom: BTreeMap<Atom, String>,
    pub by_name: BTreeMap<String, Atom>,
}

impl AtomTable {
    fn insert(&mut self, name: &str, atom: Atom) -> CliResult<()> {
        if self.by_name.contains_key(name) {
            return Err(CliError::validation(format!(
                "atom `{name}` appears more than once; every coefficient needs its own atom"
            )));
        }
        self.by_name.insert(name.to_string(), atom);
        self.by_atom.insert(atom, name.to_string());
        Ok(())
    }

    pub fn atom(&self, name: &str) -> CliResult<Atom> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| CliError::validation(format!("unknown atom `{name}`")))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

fn coefficient(eq: usize, k: usize, s: &str, atoms: &mut AtomTable) -> CliResult<CoeffPoly> {
    if let Some(r) = parse_rational(s) {
        return Ok(coeff_const(r));
    }
    if !is_identifier(s.trim()) {
        return Err(CliError::validation(format!(
            "coefficient `{s}` is neither a rational nor an atom name"
        )));
    }
    let atom = Atom::new(eq, k);
    atoms.insert(s.trim(), atom)?;
    Ok(coeff_atom(atom))
}

fn read_polys(
    terms: &[Vec<TermSpec>],
    arity: usize,
    atoms: &mut AtomTable,
) -> CliResult<Vec<CoxPolynomial>> {
    let mut polys = Vec::with_capacity(terms.len());
    for (eq, list) in terms.iter().enumerate() {
        let mut p = CoxPolynomial::zero();
        for (k, t) in list.iter().enumerate() {
            if t.exp.len() != arity {
                return Err(CliError::validation(format!(
                    "term {k} of polynomial {eq} has {} exponents, expected {arity}",
                    t.exp.len()
                )));
            }
            let e = Exponent(t.exp.clone());
            if p.coeff(&e).is_some() {
                return Err(CliError::validation(format!(
                    "polynomial {eq} lists the monomial {:?} twice",
                    t.exp
                )));
            }
            p.add_term(e, coefficient(eq, k, &t.coeff, atoms)?);
        }
        polys.push(p);
    }
    Ok(polys)
}

fn default_variables(prefix: &str, count: usize, from: usize) -> Vec<String> {
    (from..from + count).map(|i| format!("{prefix}{i}")).collect()
}

fn check_variables(vars: Vec<String>, count: usize) -> CliResult<Vec<String>> {
    if vars.len() != count {
        return Err(CliError::validation(format!(
            "{} variable names given for {count} variables",
            vars.len()
        )));
    }
    Ok(vars)
}

#[derive(Clone, Debug, PartialEq)]
pub enum ResultantRef {
    Determinant {
        matrix: Vec<Vec<CoeffPoly>>,
        power: u32,
    },
    SquareMacaulay,
}

impl ResultantRef {
    pub fn eval(&self, sys: &ToricSystem, flag: &Flag, spec: &Specialization) -> CliResult<Rational> {
        match self {
            ResultantRef::Determinant { matrix, power } => {
                let rows = matrix
                    .iter()
                    .map(|r| r.iter().map(|c| spec.eval(c)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                let cols = rows.first().map_or(0, Vec::len);
                let d = RatMatrix::from_rows(rows, cols)?.det()?;
                let mut out = Rational::from_integer(1.into());
                for _ in 0..*power {
                    out *= &d;
                }
                Ok(out)
            }
            ResultantRef::SquareMacaulay => {
                let m = MacaulayMatrix::assemble(sys, flag)?;
                if m.nrows() != m.ncols() {
                    return Err(CliError::validation(format!(
                        "the Macaulay matrix is {}x{}, not square",
                        m.nrows(),
                        m.ncols()
                    )));
                }
                Ok(m.evaluate(spec)?.det()?)
            }
        }
    }
}

/// A validated toric instance.
#[derive(Clone, Debug)]
pub struct ToricInstance {
    pub name: String,
    pub variables: Vec<String>,
    pub system: ToricSystem,
    pub flags: Vec<Flag>,
    pub atoms: AtomTable,
    pub h: Option<Exponent>,
    pub p: Option<RatCoxPolynomial>,
    pub resultant: Option<ResultantRef>,
}

impl ToricInstance {
    pub fn from_file(f: &ToricFile) -> CliResult<Self> {
        let fan = Fan::new(f.rays.clone(), f.max_cones.clone())?;
        let s = fan.num_rays();
        let variables = match &f.variables {
            Some(v) => check_variables(v.clone(), s)?,
            None => default_variables("x", s, 0),
        };
        let mut atoms = AtomTable::default();
        let polys = read_polys(&f.polys, s, &mut atoms)?;
        let system = ToricSystem::new(fan, f.degrees.clone(), polys)?;
        let flags = f
            .flag
            .flags()
            .into_iter()
            .map(|cones| Flag::new(system.fan(), cones))
            .collect::<Result<Vec<_>, _>>()?;
        if flags.is_empty() {
            return Err(CliError::validation("at least one flag is required"));
        }
        let h = f.h.as_deref().map(|t| parse_monomial(t, &variables)).transpose()?;
        let p = f.p.as_deref().map(|t| parse_poly(t, &variables)).transpose()?;
        let resultant = f
            .resultant
            .as_ref()
            .map(|r| -> CliResult<ResultantRef> {
                let (det, power) = match r {
                    ResultantSpec::SquareMacaulay => return Ok(ResultantRef::SquareMacaulay),
                    ResultantSpec::Determinant { det, power } => (det, *power),
                };
                let matrix = det
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|e| match parse_rational(e) {
                                Some(v) => Ok(coeff_const(v)),
                                None => atoms.atom(e.trim()).map(coeff_atom),
                            })
                            .collect::<CliResult<Vec<_>>>()
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                if matrix.iter().any(|row| row.len() != matrix.len()) {
                    return Err(CliError::validation("resultant matrix must be square"));
                }
                Ok(ResultantRef::Determinant { matrix, power })
            })
            .transpose()?;
        Ok(ToricInstance {
            name: f.name.clone().unwrap_or_else(|| "instance".into()),
            variables,
            system,
            flags,
            atoms,
            h,
            p,
            resultant,
        })
    }

    /// The file form of this instance.
    pub fn to_file(&self) -> ToricFile {
        let term = |m: &Exponent, c: &CoeffPoly| TermSpec {
            exp: m.0.clone(),
            coeff: coeff_text(c, &self.atoms),
        };
        let polys = self
            .system
            .polys()
            .iter()
            .map(|f| in_file_order(f).into_iter().map(|(m, c)| term(m, c)).collect())
            .collect();
        let flags: Vec<Vec<Vec<usize>>> = self.flags.iter().map(|f| f.cones().to_vec()).collect();
        ToricFile {
            name: Some(self.name.clone()),
            variables: Some(self.variables.clone()),
            rays: self.system.fan().rays().to_vec(),
            max_cones: self.system.fan().max_cones().to_vec(),
            degrees: self.system.degrees().to_vec(),
            polys,
            flag: if flags.len() == 1 {
                FlagField::One(flags[0].clone())
            } else {
                FlagField::Many(flags)
            },
            h: self.h.as_ref().map(|e| format_monomial(e, &self.variables)),
            p: self.p.as_ref().map(|p| format_rat_poly(p, &self.variables)),
            resultant: self.resultant.as_ref().map(|r| match r {
                ResultantRef::SquareMacaulay => ResultantSpec::SquareMacaulay,
                ResultantRef::Determinant { matrix, power } => ResultantSpec::Determinant {
                    det: matrix
                        .iter()
                        .map(|row| row.iter().map(|c| coeff_text(c, &self.atoms)).collect())
                        .collect(),
                    power: *power,
                },
            }),
        }
    }
}

/// Terms in the order they were read: an atom's index is its position, and
/// constants fill the remaining positions.
fn in_file_order<'a>(f: &'a CoxPolynomial) -> Vec<(&'a Exponent, &'a CoeffPoly)> {
    let mut slots: Vec<Option<(&Exponent, &CoeffPoly)>> = vec![None; f.len()];
    let mut constants = Vec::new();
    for (m, c) in f.terms() {
        match c.atoms().first() {
            Some(a) if a.index < slots.len() && slots[a.index].is_none() => slots[a.index] = Some((m, c)),
            _ => constants.push((m, c)),
        }
    }
    let mut constants = constants.into_iter();
    slots
        .into_iter()
        .map(|s| s.or_else(|| constants.next()))
        .collect::<Option<Vec<_>>>()
        .expect("every slot is filled")
}

fn coeff_text(c: &CoeffPoly, atoms: &AtomTable) -> String {
    if let Some(v) = c.as_constant() {
        return format_rational(&v);
    }
    let a = c.atoms()[0];
    atoms.by_atom[&a].clone()
}

/// A validated global-residue instance.
#[derive(Clone, Debug)]
pub struct GlobalInstance {
    pub name: String,
    pub variables: Vec<String>,
    pub polys: Vec<AffinePoly>,
    pub recipe: Recipe,
    pub atoms: AtomTable,
    pub roots: Option<Vec<Vec<Rational>>>,
}

impl GlobalInstance {
    pub fn from_file(f: &GlobalFile) -> CliResult<Self> {
        let n = f.polys.len();
        let variables = match &f.variables {
            Some(v) => check_variables(v.clone(), n)?,
            None => default_variables("t", n, 1),
        };
        let mut atoms = AtomTable::default();
        let polys = read_polys(&f.polys, n, &mut atoms)?;
        let recipe = match &f.recipe {
            RecipeSpec::Macaulay => Recipe::Macaulay,
            RecipeSpec::X0Power { k, g } => Recipe::PowerOfX0 {
                k: *k,
                g: Exponent(g.clone()),
            },
        };
        let roots = f
            .roots
            .as_ref()
            .map(|rs| {
                rs.iter()
                    .map(|r| {
                        r.iter()
                            .map(|v| {
                                parse_rational(v).ok_or_else(|| {
                                    CliError::validation(format!("root coordinate `{v}` is not rational"))
                                })
                            })
                            .collect::<CliResult<Vec<_>>>()
                    })
                    .collect::<CliResult<Vec<_>>>()
            })
            .transpose()?;
        Ok(GlobalInstance {
            name: f.name.clone().unwrap_or_else(|| "instance".into()),
            variables,
            polys,
            recipe,
            atoms,
            roots,
        })
    }

    pub fn to_file(&self) -> GlobalFile {
        let polys = self
            .polys
            .iter()
            .map(|f| {
                in_file_order(f)
                    .into_iter()
                    .map(|(m, c)| TermSpec {
                        exp: m.0.clone(),
                        coeff: coeff_text(c, &self.atoms),
                    })
                    .collect()
            })
            .collect();
        GlobalFile {
            name: Some(self.name.clone()),
            variables: Some(self.variables.clone()),
            polys,
            recipe: match &self.recipe {
                Recipe::Macaulay => RecipeSpec::Macaulay,
                Recipe::PowerOfX0 { k, g } => RecipeSpec::X0Power { k: *k, g: g.0.clone() },
            },
            roots: self
                .roots
                .as_ref()
                .map(|rs| rs.iter().map(|r| r.iter().map(format_rational).collect()).collect()),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Instance {
    Toric(Box<ToricInstance>),
    Global(Box<GlobalInstance>),
}

impl Instance {
    pub fn from_file(f: &InstanceFile) -> CliResult<Self> {
        Ok(match f {
            InstanceFile::Toric(t) => Instance::Toric(Box::new(ToricInstance::from_file(t)?)),
            InstanceFile::Global(g) => Instance::Global(Box::new(GlobalInstance::from_file(g)?)),
        })
    }

    pub fn to_file(&self) -> InstanceFile {
        match self {
            Instance::Toric(t) => InstanceFile::Toric(t.to_file()),
            Instance::Global(g) => InstanceFile::Global(g.to_file()),
        }
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        Self::from_file(&InstanceFile::read(path)?)
    }

    pub fn atoms(&self) -> &AtomTable {
        match self {
            Instance::Toric(t) => &t.atoms,
            Instance::Global(g) => &g.atoms,
        }
    }
}
