//! Specializations of the atoms: seeded random draws and JSON files.

use std::collections::BTreeMap;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toric_core::arith::{format_rational, parse_rational, rat, Rational, Specialization};

use crate::error::{CliError, CliResult};
use crate::instance::AtomTable;

pub const NUMERATOR_BOUND: i64 = 10_000;
pub const DENOMINATOR_BOUND: i64 = 100;

/// A seeded stream of specializations.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rational(&mut self) -> Rational {
        let n = self.rng.gen_range(-NUMERATOR_BOUND..=NUMERATOR_BOUND);
        let d = self.rng.gen_range(1..=DENOMINATOR_BOUND);
        rat(n, d)
    }

    pub fn small_int(&mut self, bound: i64) -> i64 {
        self.rng.gen_range(-bound..=bound)
    }

    /// Draws every atom of the table, in atom order.
    pub fn specialization(&mut self, atoms: &AtomTable) -> Specialization {
        let mut s = Specialization::new();
        for a in atoms.by_atom.keys() {
            let v = self.rational();
            s.set(*a, v);
        }
        s
    }
}

/// Reads `{"a0": "3/2", …}`; every atom of the table must be present.
pub fn read_spec(path: &Path, atoms: &AtomTable) -> CliResult<Specialization> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
    parse_spec(&text, atoms)
}

pub fn parse_spec(text: &str, atoms: &AtomTable) -> CliResult<Specialization> {
    let values: BTreeMap<String, String> = serde_json::from_str(text)
        .map_err(|e| CliError::validation(format!("specialization parse error: {e}")))?;
    let mut s = Specialization::new();
    for (name, v) in &values {
        let r = parse_rational(v)
            .ok_or_else(|| CliError::validation(format!("value `{v}` of `{name}` is not rational")))?;
        s.set(atoms.atom(name)?, r);
    }
    for (a, name) in &atoms.by_atom {
        if s.get(a).is_none() {
            return Err(CliError::validation(format!("specialization misses atom `{name}`")));
        }
    }
    Ok(s)
}

pub fn spec_to_json(spec: &Specialization, atoms: &AtomTable) -> String {
    let values: BTreeMap<&str, String> = spec
        .iter()
        .map(|(a, v)| (atoms.by_atom[a].as_str(), format_rational(v)))
        .collect();
    serde_json::to_string(&values).expect("maps of strings serialize")
}
