//! Text forms of monomials, polynomials and atom-ring coefficients.

use std::collections::BTreeMap;

use toric_core::arith::{format_rational, parse_rational, Atom, CoeffPoly, Exponent, Rational};
use toric_core::system::RatCoxPolynomial;
use toric_core::toric::monomial_cmp;

use crate::error::{CliError, CliResult};

/// Parses `x3^2*x4^2` (or `1`) over the named variables.
pub fn parse_monomial(s: &str, vars: &[String]) -> CliResult<Exponent> {
    let mut e = vec![0u32; vars.len()];
    let s = s.trim();
    if s == "1" {
        return Ok(Exponent(e));
    }
    for factor in s.split('*') {
        let (name, power) = split_power(factor)?;
        let k = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| CliError::validation(format!("unknown variable `{name}` in `{s}`")))?;
        e[k] += power;
    }
    Ok(Exponent(e))
}

fn split_power(factor: &str) -> CliResult<(&str, u32)> {
    let factor = factor.trim();
    match factor.split_once('^') {
        None => Ok((factor, 1)),
        Some((name, p)) => {
            let p = p
                .trim()
                .parse()
                .map_err(|_| CliError::validation(format!("bad exponent in `{factor}`")))?;
            Ok((name.trim(), p))
        }
    }
}

/// Parses a rational-coefficient polynomial such as `2*x1*x2 - 3/4*x3^2 + x4`.
pub fn parse_poly(s: &str, vars: &[String]) -> CliResult<RatCoxPolynomial> {
    let mut out = RatCoxPolynomial::zero();
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(CliError::validation("empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    for term in terms {
        let (negative, body) = match term.as_bytes().first() {
            Some(b'-') => (true, &term[1..]),
            Some(b'+') => (false, &term[1..]),
            _ => (false, term),
        };
        let mut coeff = Rational::from_integer(1.into());
        let mut vars_part = Vec::new();
        for factor in body.split('*') {
            match parse_rational(factor) {
                Some(r) => coeff *= r,
                None => vars_part.push(factor),
            }
        }
        if negative {
            coeff = -coeff;
        }
        let mono = if vars_part.is_empty() {
            Exponent(vec![0; vars.len()])
        } else {
            parse_monomial(&vars_part.join("*"), vars)?
        };
        out.add_term(mono, coeff);
    }
    Ok(out)
}

pub fn format_monomial(e: &Exponent, vars: &[String]) -> String {
    let parts: Vec<String> = e
        .0
        .iter()
        .zip(vars)
        .filter(|(p, _)| **p > 0)
        .map(|(p, v)| if *p == 1 { v.clone() } else { format!("{v}^{p}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn format_rat_poly(p: &RatCoxPolynomial, vars: &[String]) -> String {
    let mut terms: Vec<(&Exponent, &Rational)> = p.terms().collect();
    terms.sort_by(|a, b| monomial_cmp(a.0, b.0));
    join_signed(terms.into_iter().map(|(m, c)| (c.clone(), format_monomial(m, vars))))
}

/// Prints `∑ c·word` with leading signs folded in and unit coefficients dropped.
fn join_signed<I: IntoIterator<Item = (Rational, String)>>(terms: I) -> String {
    let mut out = String::new();
    for (c, word) in terms {
        let negative = c < Rational::from_integer(0.into());
        let abs = if negative { -c } else { c };
        let body = if word == "1" {
            format_rational(&abs)
        } else if abs == Rational::from_integer(1.into()) {
            word
        } else {
            format!("{}*{}", format_rational(&abs), word)
        };
        if out.is_empty() {
            out = if negative { format!("-{body}") } else { body };
        } else {
            out.push_str(if negative { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn format_coeff(c: &CoeffPoly, names: &BTreeMap<Atom, String>) -> String {
    join_signed(c.terms().map(|(m, v)| {
        let word: Vec<String> = m
            .factors()
            .iter()
            .map(|(a, p)| {
                let n = names.get(a).cloned().unwrap_or_else(|| format!("u{}_{}", a.eq, a.index));
                if *p == 1 {
                    n
                } else {
                    format!("{n}^{p}")
                }
            })
            .collect();
        (
            v.clone(),
            if word.is_empty() { "1".into() } else { word.join("*") },
        )
    }))
}
