//! Problem files: a `key: value` header, a blank line, then one generator
//! per line. `#` starts a comment anywhere.
//!
//! ```text
//! mode: sigma
//! ordering: lex
//! letters: x
//! degree_bound: 6
//!
//! x(2)*x(0) - x(1)
//! ```

use std::path::Path;

use skewgb::endo::MonomialEndomorphism;
use skewgb::engine::{Criteria, GbConfig, Mode};
use skewgb::field::Field;
use skewgb::letterplace::{parse_free_polynomial, FreePolynomial};
use skewgb::poly::{MonomialOrder, Polynomial};
use skewgb::skew::{SkewElement, SkewRing};
use skewgb::text::{parse_polynomial, Alphabet, ParseError};

use crate::CliError;

/// Generators, typed by mode.
#[derive(Debug, Clone)]
pub enum Generators {
    Commutative(Vec<Polynomial>),
    Skew(Vec<SkewElement>),
    Free(Vec<FreePolynomial>),
}

impl Generators {
    #[cfg(test)]
    pub fn len(&self) -> usize {
        match self {
            Generators::Commutative(g) => g.len(),
            Generators::Skew(g) => g.len(),
            Generators::Free(g) => g.len(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Problem {
    pub config: GbConfig,
    pub generators: Generators,
}

const KEYS: [&str; 10] = [
    "mode",
    "field",
    "letters",
    "ordering",
    "endo",
    "degree_bound",
    "criteria",
    "interreduce",
    "trace",
    "places",
];

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head).trim_end()
}

fn parse_bool(line: usize, key: &str, value: &str) -> Result<bool, CliError> {
    match value {
        "true" | "yes" | "on" => Ok(true),
        "false" | "no" | "off" => Ok(false),
        _ => Err(CliError::parse(line, 1, format!("`{key}` expects true or false, got `{value}`"))),
    }
}

fn parse_criteria(line: usize, value: &str) -> Result<Criteria, CliError> {
    let mut c = Criteria { product: false, chain: false };
    match value {
        "all" => return Ok(Criteria::default()),
        "none" => return Ok(c),
        _ => {}
    }
    for item in value.split(',').map(str::trim) {
        match item {
            "product" => c.product = true,
            "chain" => c.chain = true,
            other => {
                return Err(CliError::parse(
                    line,
                    1,
                    format!("unknown criterion `{other}` (expected product, chain, all or none)"),
                ))
            }
        }
    }
    Ok(c)
}

/// First place index used by a mode: letterplace places start at 1.
fn first_place(mode: Mode) -> u32 {
    match mode {
        Mode::Free | Mode::Free2 => 1,
        _ => 0,
    }
}

impl Problem {
    /// Parses a problem file. `base` resolves relative `endo: table:<file>`
    /// paths.
    pub fn parse(src: &str, base: Option<&Path>) -> Result<Problem, CliError> {
        let lines: Vec<&str> = src.lines().collect();
        let mut header: Vec<(usize, &str, &str)> = Vec::new();
        let mut body_start = lines.len();
        for (k, raw) in lines.iter().enumerate() {
            let line_no = k + 1;
            if raw.trim().is_empty() {
                body_start = k + 1;
                break;
            }
            let line = strip_comment(raw);
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| CliError::parse(line_no, 1, "expected `key: value`"))?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(CliError::parse(line_no, 1, format!("unknown key `{key}`")));
            }
            if header.iter().any(|(_, k, _)| *k == key) {
                return Err(CliError::parse(line_no, 1, format!("`{key}` given twice")));
            }
            header.push((line_no, key, value.trim()));
        }
        let get = |key: &str| header.iter().find(|(_, k, _)| *k == key).map(|&(l, _, v)| (l, v));

        let mode: Mode = match get("mode") {
            Some((l, v)) => v.parse().map_err(|e: String| CliError::parse(l, 1, e))?,
            None => return Err(CliError::Usage("the header needs a `mode`".into())),
        };
        let degree_bound: u32 = match get("degree_bound") {
            Some((l, v)) => match v.parse() {
                Ok(d) if d >= 1 => d,
                _ => return Err(CliError::parse(l, 1, format!("`degree_bound` must be a positive integer, got `{v}`"))),
            },
            None => return Err(CliError::Usage("the header needs a `degree_bound`".into())),
        };
        let mut cfg = GbConfig::new(mode, degree_bound);
        if let Some((l, v)) = get("field") {
            cfg.field = v.parse::<Field>().map_err(|e| CliError::parse(l, 1, e.to_string()))?;
        }
        if let Some((l, v)) = get("letters") {
            cfg.alphabet = Alphabet::from_spec(v).map_err(|e| CliError::parse(l, 1, e))?;
        }
        if let Some((l, v)) = get("ordering") {
            cfg.order = v.parse::<MonomialOrder>().map_err(|e| CliError::parse(l, 1, e))?;
        }
        if let Some((l, v)) = get("endo") {
            cfg.endo = match v.strip_prefix("table:") {
                Some(file) => {
                    let path = base.map_or_else(|| file.trim().into(), |b| b.join(file.trim()));
                    let table = std::fs::read_to_string(&path).map_err(|e| {
                        CliError::parse(l, 1, format!("cannot read {}: {e}", path.display()))
                    })?;
                    MonomialEndomorphism::parse_table(&table, &cfg.alphabet)
                        .map_err(|e| CliError::parse(l, 1, format!("{}: {e}", path.display())))?
                }
                None => MonomialEndomorphism::from_spec(v).map_err(|e| CliError::parse(l, 1, e.to_string()))?,
            };
        }
        if let Some((l, v)) = get("criteria") {
            cfg.criteria = parse_criteria(l, v)?;
        }
        if let Some((l, v)) = get("interreduce") {
            cfg.interreduce = parse_bool(l, "interreduce", v)?;
        }
        if let Some((l, v)) = get("trace") {
            cfg.trace = parse_bool(l, "trace", v)?;
        }
        if let Some((l, v)) = get("places") {
            let expected = first_place(mode);
            if v.parse::<u32>().ok() != Some(expected) {
                return Err(CliError::parse(
                    l,
                    1,
                    format!("mode {mode} numbers places from {expected}, got `places: {v}`"),
                ));
            }
        }
        if matches!(mode, Mode::Free | Mode::Free2) && !cfg.endo.is_shift() {
            return Err(CliError::Usage(format!("mode {mode} needs `endo: shift`")));
        }

        let mut generators = match mode {
            Mode::Sigma => Generators::Commutative(Vec::new()),
            Mode::TwoSidedSkew | Mode::LeftSkew => Generators::Skew(Vec::new()),
            Mode::Free | Mode::Free2 => Generators::Free(Vec::new()),
        };
        let ring = SkewRing::new(cfg.order, cfg.endo.clone());
        for (k, raw) in lines.iter().enumerate().skip(body_start) {
            let line = strip_comment(raw);
            if line.trim().is_empty() {
                continue;
            }
            let at = |e: ParseError| CliError::parse(k + 1, e.column, e.message);
            match &mut generators {
                Generators::Commutative(g) => {
                    g.push(parse_polynomial(line, &cfg.alphabet, cfg.field, cfg.order).map_err(at)?)
                }
                Generators::Skew(g) => g.push(ring.parse(line, &cfg.alphabet, cfg.field).map_err(at)?),
                Generators::Free(g) => {
                    g.push(parse_free_polynomial(line, &cfg.alphabet, cfg.field).map_err(at)?)
                }
            }
        }
        Ok(Problem { config: cfg, generators })
    }
}
