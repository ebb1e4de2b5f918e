//! Run configuration: JSON file defaults merged under explicit flags,
//! grid parsing, digit-override parsing, and validation.

use std::path::{Path, PathBuf};

use betashift::beta::DigitSequence;
use betashift::BetaSpec;
use serde::Deserialize;

use crate::cli::JobArgs;
use crate::error::{CliError, Result};

/// Environment variable naming a default config file.
pub const CONFIG_ENV: &str = "BETASHIFT_CONFIG";

/// Tolerance floor from the run-configuration contract.
pub const MIN_TOL: f64 = 1e-13;

const DEFAULT_TOL: f64 = 1e-12;
const DEFAULT_DEPTH: usize = 256;

/// JSON counterpart of the flag set; every field optional.
#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub beta: Option<f64>,
    pub poly: Option<Vec<i64>>,
    pub family: Option<String>,
    pub digits: Option<String>,
    pub t: Option<f64>,
    pub t_grid: Option<String>,
    pub alpha_grid: Option<String>,
    pub p: Option<f64>,
    pub x_grid: Option<String>,
    pub tol: Option<f64>,
    pub depth: Option<usize>,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    /// Resolve the file to use: an explicit --config path, else the
    /// environment variable, else empty defaults.
    pub fn resolve(explicit: Option<&Path>) -> Result<FileConfig> {
        if let Some(p) = explicit {
            return FileConfig::load(p);
        }
        match std::env::var_os(CONFIG_ENV) {
            Some(p) => FileConfig::load(Path::new(&p)),
            None => Ok(FileConfig::default()),
        }
    }
}

/// Fully resolved run parameters.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub spec: BetaSpec,
    pub t: Option<f64>,
    pub t_grid: Option<Vec<f64>>,
    pub alpha_grid: Option<Vec<f64>>,
    pub p: Option<f64>,
    pub x_grid: Option<Vec<f64>>,
    pub tol: f64,
    pub depth: usize,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

impl RunConfig {
    /// Merge flags over file values and validate.
    pub fn build(args: &JobArgs, file: &FileConfig) -> Result<RunConfig> {
        let beta = args.beta.or(file.beta);
        let poly = args.poly.clone().or_else(|| file.poly.clone());
        let family = args.family.clone().or_else(|| file.family.clone());
        let digits = args.digits.clone().or_else(|| file.digits.clone());

        let mut spec = resolve_spec(beta, poly.as_deref(), family.as_deref())?;
        if let Some(d) = digits.as_deref() {
            spec = spec.with_digits(parse_digits(d)?);
        }

        let tol = args.tol.or(file.tol).unwrap_or(DEFAULT_TOL);
        if tol.is_nan() || tol < MIN_TOL {
            return Err(CliError::Config(format!(
                "tolerance {tol} is below the floor {MIN_TOL}"
            )));
        }
        let depth = args.depth.or(file.depth).unwrap_or(DEFAULT_DEPTH);
        if depth == 0 {
            return Err(CliError::Config("depth must be at least 1".into()));
        }

        let t_grid = args
            .t_grid
            .as_deref()
            .or(file.t_grid.as_deref())
            .map(|s| parse_grid(s, "t-grid", -betashift::T_CAP, betashift::T_CAP))
            .transpose()?;
        let alpha_grid = args
            .alpha_grid
            .as_deref()
            .or(file.alpha_grid.as_deref())
            .map(|s| parse_grid(s, "alpha-grid", 0.0, 1.0))
            .transpose()?;
        let x_grid = args
            .x_grid
            .as_deref()
            .or(file.x_grid.as_deref())
            .map(|s| parse_grid(s, "x-grid", 0.0, 1.0))
            .transpose()?;

        let t = args.t.or(file.t);
        if let Some(tv) = t {
            if tv.is_nan() || tv.abs() > betashift::T_CAP {
                return Err(CliError::Config(format!(
                    "t = {tv} outside the supported range [-{0}, {0}]",
                    betashift::T_CAP
                )));
            }
        }
        let p = args.p.or(file.p);
        if let Some(pv) = p {
            if pv.is_nan() || pv <= 0.0 || pv >= 1.0 {
                return Err(CliError::Config(format!("p = {pv} must lie in (0, 1)")));
            }
        }

        Ok(RunConfig {
            spec,
            t,
            t_grid,
            alpha_grid,
            p,
            x_grid,
            tol,
            depth,
            out: args.out.clone().or_else(|| file.out.clone()),
            svg: args.svg.clone().or_else(|| file.svg.clone()),
        })
    }

    /// t values for sweep commands: single --t, else --t-grid, else the
    /// default geometric grid.
    pub fn t_values(&self) -> Vec<f64> {
        if let Some(t) = self.t {
            return vec![t];
        }
        if let Some(g) = &self.t_grid {
            return g.clone();
        }
        betashift::spectrum::t_grid(257, 12.0)
    }

    /// x values for grid commands, default 257 points on [0, 1].
    pub fn x_values(&self) -> Vec<f64> {
        match &self.x_grid {
            Some(g) => g.clone(),
            None => linear(0.0, 1.0, 257),
        }
    }
}

fn resolve_spec(beta: Option<f64>, poly: Option<&[i64]>, family: Option<&str>) -> Result<BetaSpec> {
    let given = beta.is_some() as u8 + poly.is_some() as u8 + family.is_some() as u8;
    if given == 0 {
        return Err(CliError::Config(
            "no beta specified: give --beta, --poly, or --family".into(),
        ));
    }
    if given > 1 {
        return Err(CliError::Config(
            "--beta, --poly, and --family are mutually exclusive".into(),
        ));
    }
    if let Some(b) = beta {
        return Ok(BetaSpec::numeric(b));
    }
    if let Some(c) = poly {
        return Ok(BetaSpec::polynomial(c));
    }
    parse_family(family.unwrap())
}

fn parse_family(name: &str) -> Result<BetaSpec> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "dyadic" => return Ok(BetaSpec::dyadic()),
        "golden" => return Ok(BetaSpec::golden()),
        "tribonacci" => return Ok(BetaSpec::tribonacci()),
        _ => {}
    }
    for (prefix, make) in [
        ("multinacci-", BetaSpec::multinacci as fn(u32) -> BetaSpec),
        ("parry-", BetaSpec::parry as fn(u32) -> BetaSpec),
    ] {
        if let Some(rest) = lower.strip_prefix(prefix) {
            let n: u32 = rest
                .parse()
                .map_err(|_| CliError::Config(format!("bad family index in {name:?}")))?;
            return Ok(make(n));
        }
    }
    Err(CliError::Config(format!(
        "unknown family {name:?}: expected dyadic, golden, tribonacci, multinacci-N, or parry-M"
    )))
}

/// "PRE(PERIOD)" for an eventually periodic sequence, or a plain 0/1 word
/// meaning the word followed by zeros.
pub fn parse_digits(text: &str) -> Result<DigitSequence> {
    let bad = |msg: &str| CliError::Config(format!("digit override {text:?}: {msg}"));
    let to_bits = |s: &str| -> Result<Vec<u8>> {
        s.bytes()
            .map(|b| match b {
                b'0' => Ok(0u8),
                b'1' => Ok(1u8),
                _ => Err(bad("digits must be 0 or 1")),
            })
            .collect()
    };
    if let Some(open) = text.find('(') {
        if !text.ends_with(')') {
            return Err(bad("expected closing ')'"));
        }
        let pre = to_bits(&text[..open])?;
        let period = to_bits(&text[open + 1..text.len() - 1])?;
        if period.is_empty() {
            return Err(bad("period must be nonempty"));
        }
        Ok(DigitSequence::periodic(&pre, &period))
    } else {
        let word = to_bits(text)?;
        if word.is_empty() {
            return Err(bad("word must be nonempty"));
        }
        Ok(DigitSequence::zero_extended(&word))
    }
}

/// "LO:HI:N" linear grid, validated against [dom_lo, dom_hi].
pub fn parse_grid(text: &str, what: &str, dom_lo: f64, dom_hi: f64) -> Result<Vec<f64>> {
    let bad = |msg: String| CliError::Config(format!("{what} {text:?}: {msg}"));
    let parts: Vec<&str> = text.split(':').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(bad("expected LO:HI:N".into()));
    }
    let lo: f64 = parts[0]
        .parse()
        .map_err(|_| bad(format!("bad number {:?}", parts[0])))?;
    let hi: f64 = parts[1]
        .parse()
        .map_err(|_| bad(format!("bad number {:?}", parts[1])))?;
    let n: usize = parts[2]
        .parse()
        .map_err(|_| bad(format!("bad count {:?}", parts[2])))?;
    if n == 0 {
        return Err(bad("grid must be nonempty".into()));
    }
    if lo.is_nan() || hi.is_nan() || lo > hi {
        return Err(bad("grid bounds must be ordered".into()));
    }
    if n == 1 && lo != hi {
        return Err(bad("a 1-point grid needs LO = HI".into()));
    }
    if lo < dom_lo || hi > dom_hi {
        return Err(bad(format!("outside the domain [{dom_lo}, {dom_hi}]")));
    }
    Ok(linear(lo, hi, n))
}

pub fn linear(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}
