//! Job documents: one job per file, `key = value` per line, `#` comments.
//!
//! ```text
//! mode = twist
//! n = 2
//! J = [1, 2]
//! ```
//!
//! Numbers are exact: `-1`, `5/4` and `0.25` are all accepted.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::rational::{int, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::families::{default_refine_width, ProductFamilySpec, TwistFamilySpec};
use crate::invariants::SymplecticInvariants;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Check,
    Twist,
    Product,
    VerifyOracle,
    Sweep,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Check => "check",
            Mode::Twist => "twist",
            Mode::Product => "product",
            Mode::VerifyOracle => "verify-oracle",
            Mode::Sweep => "sweep",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "check" => Mode::Check,
            "twist" => Mode::Twist,
            "product" => Mode::Product,
            "verify-oracle" => Mode::VerifyOracle,
            "sweep" => Mode::Sweep,
            other => return Err(format!("unknown mode `{other}`")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleParams {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    /// Permit n above the default limit.
    pub allow_large: bool,
}

impl Default for OracleParams {
    fn default() -> Self {
        OracleParams {
            n: 2,
            samples: 100,
            seed: 1,
            allow_large: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepFamily {
    Twist,
    Product,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepParams {
    pub family: SweepFamily,
    /// Inclusive range of n for the twist grid.
    pub twist_n: (usize, usize),
    /// Inclusive range used for both n1 and n2 in the product grid.
    pub product_n: (usize, usize),
}

impl Default for SweepParams {
    fn default() -> Self {
        SweepParams {
            family: SweepFamily::Both,
            twist_n: (4, 12),
            product_n: (2, 8),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "mode", content = "spec")]
pub enum Payload {
    Check(SymplecticInvariants),
    Twist(TwistFamilySpec),
    Product(ProductFamilySpec),
    VerifyOracle(OracleParams),
    Sweep(SweepParams),
}

impl Payload {
    pub fn mode(&self) -> Mode {
        match self {
            Payload::Check(_) => Mode::Check,
            Payload::Twist(_) => Mode::Twist,
            Payload::Product(_) => Mode::Product,
            Payload::VerifyOracle(_) => Mode::VerifyOracle,
            Payload::Sweep(_) => Mode::Sweep,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportFormat {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvOptions {
    pub path: std::path::PathBuf,
    pub t_min: Rational,
    pub t_max: Rational,
    pub steps: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputOptions {
    pub format: ReportFormat,
    pub csv: Option<CsvOptions>,
    pub refine_width: Rational,
    pub lebrun_k2: bool,
}

impl Default for OutputOptions {
    fn default() -> Self {
        OutputOptions {
            format: ReportFormat::Text,
            csv: None,
            refine_width: default_refine_width(),
            lebrun_k2: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub payload: Payload,
    pub output: OutputOptions,
}

impl JobSpec {
    pub fn new(payload: Payload) -> Self {
        JobSpec {
            payload,
            output: OutputOptions::default(),
        }
    }

    pub fn mode(&self) -> Mode {
        self.payload.mode()
    }
}

struct Field {
    line: usize,
    value: String,
}

struct Document {
    fields: BTreeMap<String, Field>,
}

impl Document {
    fn parse(text: &str) -> Result<Self> {
        let mut fields = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| Error::parse(line, content, "expected `key = value`"))?;
            let key = key.trim().to_string();
            if key.is_empty() {
                return Err(Error::parse(line, "", "missing key before `=`"));
            }
            if fields.contains_key(&key) {
                return Err(Error::parse(line, key, "duplicate field"));
            }
            fields.insert(
                key,
                Field {
                    line,
                    value: value.trim().to_string(),
                },
            );
        }
        Ok(Document { fields })
    }

    fn take(&mut self, key: &str) -> Option<Field> {
        self.fields.remove(key)
    }

    fn require(&mut self, key: &str) -> Result<Field> {
        self.take(key)
            .ok_or_else(|| Error::parse(0, key, "required field is missing"))
    }

    fn finish(self) -> Result<()> {
        match self.fields.into_iter().next() {
            Some((key, field)) => Err(Error::parse(field.line, key, "unknown field for this mode")),
            None => Ok(()),
        }
    }
}

fn rational(key: &str, f: &Field) -> Result<Rational> {
    parse_rational(&f.value).map_err(|m| Error::parse(f.line, key, m))
}

fn unsigned<T: FromStr>(key: &str, f: &Field) -> Result<T> {
    f.value
        .parse()
        .map_err(|_| Error::parse(f.line, key, format!("expected a non-negative integer, got `{}`", f.value)))
}

fn boolean(key: &str, f: &Field) -> Result<bool> {
    match f.value.as_str() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        other => Err(Error::parse(f.line, key, format!("expected true/false, got `{other}`"))),
    }
}

fn rational_list(key: &str, f: &Field) -> Result<Vec<Rational>> {
    let inner = f
        .value
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::parse(f.line, key, "expected a list like [1, 2]"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|item| parse_rational(item).map_err(|m| Error::parse(f.line, key, m)))
        .collect()
}

fn range(key: &str, f: &Field) -> Result<(usize, usize)> {
    let bad = || Error::parse(f.line, key, format!("expected a range like 4..12, got `{}`", f.value));
    let (lo, hi) = f.value.split_once("..").ok_or_else(bad)?;
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Parses a job document. `expected` is the mode selected on the command
/// line; a `mode` line in the document must agree with it.
pub fn parse_job(text: &str, expected: Option<Mode>) -> Result<Payload> {
    let mut doc = Document::parse(text)?;
    let mode = match (doc.take("mode"), expected) {
        (Some(f), expected) => {
            let mode: Mode = f.value.parse().map_err(|m| Error::parse(f.line, "mode", m))?;
            if let Some(e) = expected.filter(|e| *e != mode) {
                return Err(Error::parse(
                    f.line,
                    "mode",
                    format!("document is a `{mode}` job but `{e}` was requested"),
                ));
            }
            mode
        }
        (None, Some(e)) => e,
        (None, None) => return Err(Error::parse(0, "mode", "required field is missing")),
    };

    let payload = match mode {
        Mode::Check => {
            let n = unsigned("n", &doc.require("n")?)?;
            let v = rational("v", &doc.require("v")?)?;
            let a = rational("a", &doc.require("a")?)?;
            let b = rational("b", &doc.require("b")?)?;
            Payload::Check(SymplecticInvariants::new(n, v, a, b))
        }
        Mode::Twist => {
            let n = unsigned("n", &doc.require("n")?)?;
            let j = rational_list("J", &doc.require("J")?)?;
            Payload::Twist(TwistFamilySpec::new(n, j))
        }
        Mode::Product => {
            let n1 = unsigned("n1", &doc.require("n1")?)?;
            let n2 = unsigned("n2", &doc.require("n2")?)?;
            let e = match doc.take("E") {
                Some(f) => rational("E", &f)?,
                None => int(1),
            };
            Payload::Product(ProductFamilySpec::new(n1, n2, e))
        }
        Mode::VerifyOracle => {
            let mut p = OracleParams::default();
            if let Some(f) = doc.take("n") {
                p.n = unsigned("n", &f)?;
            }
            if let Some(f) = doc.take("samples") {
                p.samples = unsigned("samples", &f)?;
            }
            if let Some(f) = doc.take("seed") {
                p.seed = unsigned("seed", &f)?;
            }
            if let Some(f) = doc.take("allow_large") {
                p.allow_large = boolean("allow_large", &f)?;
            }
            Payload::VerifyOracle(p)
        }
        Mode::Sweep => {
            let mut p = SweepParams::default();
            if let Some(f) = doc.take("family") {
                p.family = match f.value.as_str() {
                    "twist" => SweepFamily::Twist,
                    "product" => SweepFamily::Product,
                    "both" => SweepFamily::Both,
                    other => {
                        return Err(Error::parse(f.line, "family", format!("unknown family `{other}`")))
                    }
                };
            }
            if let Some(f) = doc.take("twist_n") {
                p.twist_n = range("twist_n", &f)?;
            }
            if let Some(f) = doc.take("product_n") {
                p.product_n = range("product_n", &f)?;
            }
            Payload::Sweep(p)
        }
    };
    doc.finish()?;
    Ok(payload)
}
