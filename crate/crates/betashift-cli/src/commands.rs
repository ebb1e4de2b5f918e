//! Implementations of the subcommands. Each command resolves a context,
//! evaluates its grid, writes CSV to the configured destination (file or
//! the provided sink), and optionally renders the curve as SVG.

use std::io::Write;

use betashift::beta::{self, BetaContext, DigitSequence};
use betashift::oracle::EigenOracle;
use betashift::singular::{DistFn, TakagiSeries};
use betashift::{eigen, oracle, singular, spectrum};

use crate::config::RunConfig;
use crate::error::{CliError, Result};
use crate::svg::polyline_chart;
use crate::table::{fmt_f64, Table};

fn context(cfg: &RunConfig) -> Result<BetaContext> {
    Ok(cfg.spec.clone().context()?)
}

/// Write the table to `--out` when set, else to the sink.
fn emit(cfg: &RunConfig, table: &Table, sink: &mut dyn Write) -> Result<()> {
    match &cfg.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            table.write(&mut f)
        }
        None => table.write(sink),
    }
}

fn emit_svg(cfg: &RunConfig, points: &[(f64, f64)], title: &str, x: &str, y: &str) -> Result<()> {
    if let Some(path) = &cfg.svg {
        std::fs::write(path, polyline_chart(points, title, x, y))?;
    }
    Ok(())
}

fn beta_label(ctx: &BetaContext) -> String {
    format!("beta = {:.12}", ctx.beta)
}

/// λ_t, pressure, and the certified error bound over the t-grid.
pub fn cmd_lambda(cfg: &RunConfig, sink: &mut dyn Write) -> Result<()> {
    let ctx = context(cfg)?;
    let mut table = Table::new(&["t", "lambda", "pressure", "err_bound"]);
    let mut curve = Vec::new();
    for t in cfg.t_values() {
        let eig = eigen::leading_lambda(&ctx, t, cfg.tol)?;
        curve.push((t, eig.lambda));
        table.push(vec![
            fmt_f64(t),
            fmt_f64(eig.lambda),
            fmt_f64(eig.lambda.ln()),
            fmt_f64(eig.err_bound),
        ]);
    }
    emit(cfg, &table, sink)?;
    emit_svg(cfg, &curve, &format!("leading eigenvalue, {}", beta_label(&ctx)), "t", "lambda")
}

/// Dimension spectrum: a t-sweep of (t, λ, P, α, dim), or with
/// --alpha-grid the inverted rows (α, dim, t, extrapolated).
pub fn cmd_dim_sweep(cfg: &RunConfig, sink: &mut dyn Write) -> Result<()> {
    let ctx = context(cfg)?;
    let mut curve = Vec::new();
    let table = if let Some(alphas) = &cfg.alpha_grid {
        let mut table = Table::new(&["alpha", "dim", "t", "extrapolated"]);
        for &alpha in alphas {
            let row = spectrum::dim_of_alpha(&ctx, alpha)?;
            curve.push((alpha, row.dim));
            table.push(vec![
                fmt_f64(alpha),
                fmt_f64(row.dim),
                row.t.map(fmt_f64).unwrap_or_default(),
                (row.extrapolated as u8).to_string(),
            ]);
        }
        table
    } else {
        let mut table = Table::new(&["t", "lambda", "pressure", "alpha", "dim"]);
        for t in cfg.t_values() {
            let pt = spectrum::dim_at_t(&ctx, t)?;
            curve.push((pt.alpha, pt.dim));
            table.push(vec![
                fmt_f64(pt.t),
                fmt_f64(pt.lambda),
                fmt_f64(pt.pressure),
                fmt_f64(pt.alpha),
                fmt_f64(pt.dim),
            ]);
        }
        table
    };
    emit(cfg, &table, sink)?;
    emit_svg(cfg, &curve, &format!("dimension spectrum, {}", beta_label(&ctx)), "alpha", "dim")
}

/// Distribution function D_t (--t) or F_p (--p) on the x-grid.
pub fn cmd_distfn(cfg: &RunConfig, sink: &mut dyn Write) -> Result<()> {
    let ctx = context(cfg)?;
    let t = match (cfg.t, cfg.p) {
        (Some(_), Some(_)) => {
            return Err(CliError::Config("give exactly one of --t or --p".into()))
        }
        (None, None) => {
            return Err(CliError::Config(
                "distfn needs --t (for D_t) or --p (for F_p)".into(),
            ))
        }
        (Some(t), None) => t,
        (None, Some(p)) => singular::f_of_p(&ctx, p, cfg.tol)?,
    };
    let dist = DistFn::new(&ctx, t)?;
    let mut table = Table::new(&["x", "value", "err_bound"]);
    let mut curve = Vec::new();
    for x in cfg.x_values() {
        let v = dist.eval(x, cfg.depth)?;
        curve.push((x, v.value));
        table.push(vec![fmt_f64(x), fmt_f64(v.value), fmt_f64(v.err_bound)]);
    }
    emit(cfg, &table, sink)?;
    let title = match cfg.p {
        Some(p) => format!("F_p, p = {p}, {}", beta_label(&ctx)),
        None => format!("D_t, t = {t}, {}", beta_label(&ctx)),
    };
    emit_svg(cfg, &curve, &title, "x", "value")
}

/// Generalized Takagi function G on the x-grid.
pub fn cmd_takagi(cfg: &RunConfig, sink: &mut dyn Write) -> Result<()> {
    let ctx = context(cfg)?;
    let series = TakagiSeries::new(&ctx)?;
    let mut table = Table::new(&["x", "value", "err_bound"]);
    let mut curve = Vec::new();
    for x in cfg.x_values() {
        let v = series.eval(x, cfg.depth)?;
        curve.push((x, v.value));
        table.push(vec![fmt_f64(x), fmt_f64(v.value), fmt_f64(v.err_bound)]);
    }
    emit(cfg, &table, sink)?;
    emit_svg(cfg, &curve, &format!("generalized Takagi, {}", beta_label(&ctx)), "x", "G")
}

/// Maximal digit-1 frequency report.
pub fn cmd_cbeta(cfg: &RunConfig, sink: &mut dyn Write) -> Result<()> {
    let ctx = context(cfg)?;
    let r = spectrum::c_beta_report(&ctx)?;
    let mut table = Table::new(&[
        "n_ones",
        "m_zeros",
        "lower",
        "upper",
        "exact",
        "numeric_estimate",
    ]);
    table.push(vec![
        r.n_ones.to_string(),
        r.m_zeros.to_string(),
        fmt_f64(r.lower),
        fmt_f64(r.upper),
        r.exact.map(fmt_f64).unwrap_or_default(),
        fmt_f64(r.numeric_estimate),
    ]);
    emit(cfg, &table, sink)
}

/// Subleading zeros of the eigenvalue series plus the mixing-rate bound.
/// Zero rows carry kind "zero"; the final row carries kind "mixing_rate"
/// with the bound in the "re" column.
pub fn cmd_zeros(cfg: &RunConfig, sink: &mut dyn Write) -> Result<()> {
    let ctx = context(cfg)?;
    let t = cfg.t.unwrap_or(0.0);
    let zeros = eigen::subleading_zeros(&ctx, t, 8.0)?;
    let rate = eigen::mixing_rate_bound(&ctx, t)?;
    let mut table = Table::new(&["kind", "re", "im", "modulus"]);
    for z in &zeros {
        table.push(vec![
            "zero".into(),
            fmt_f64(z.re),
            fmt_f64(z.im),
            fmt_f64(z.norm()),
        ]);
    }
    table.push(vec!["mixing_rate".into(), fmt_f64(rate), String::new(), String::new()]);
    emit(cfg, &table, sink)
}

/// Deterministic generator for reproducible random inputs.
struct Lcg(u64);

impl Lcg {
    fn next_f64(&mut self) -> f64 {
        loop {
            self.0 = self
                .0
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let u = (self.0 >> 11) as f64 / (1u64 << 53) as f64;
            if u > 0.0 && u < 1.0 {
                return u;
            }
        }
    }
}

/// Cross-validation suite. Prints one line per check; returns an error
/// carrying the failure count when any check fails.
pub fn cmd_oracle(cfg: &RunConfig, sink: &mut dyn Write) -> Result<()> {
    let ctx = context(cfg)?;
    let mut failures = 0usize;
    let mut check = |sink: &mut dyn Write, name: &str, result: std::result::Result<String, String>| -> Result<()> {
        match result {
            Ok(detail) => writeln!(sink, "check {name}: PASS ({detail})")?,
            Err(detail) => {
                failures += 1;
                writeln!(sink, "check {name}: FAIL ({detail})")?;
            }
        }
        Ok(())
    };

    // enumeration agrees with direct filtering of all words
    check(sink, "enumeration-vs-filter", {
        (|| {
            let n = 10usize;
            let set = oracle::enumerate_admissible(&ctx, n).map_err(|e| e.to_string())?;
            let mut direct = 0usize;
            for w in 0..(1u32 << n) {
                let word: Vec<u8> = (0..n).map(|i| ((w >> (n - 1 - i)) & 1) as u8).collect();
                direct += beta::is_admissible(&ctx, &word) as usize;
            }
            if set.words.len() == direct {
                Ok(format!("{direct} admissible words of length {n}"))
            } else {
                Err(format!("enumerated {} vs filtered {direct}", set.words.len()))
            }
        })()
    })?;

    // brute-force pressure approaches ln lambda
    for &t in &[-2.0, 0.0, 2.0] {
        check(sink, &format!("brute-pressure t={t}"), {
            (|| {
                let target = eigen::leading_lambda(&ctx, t, cfg.tol)
                    .map_err(|e| e.to_string())?
                    .lambda
                    .ln();
                let mut gaps = Vec::new();
                for n in [12usize, 18, 24] {
                    let p = oracle::brute_pressure(&ctx, t, n).map_err(|e| e.to_string())?;
                    let gap = (p - target).abs();
                    if gap > 3.0 / n as f64 {
                        return Err(format!("gap {gap:.3e} at n={n} exceeds 3/n"));
                    }
                    gaps.push(gap);
                }
                if gaps[2] <= gaps[0] + 1e-12 {
                    Ok(format!("gaps {:.2e} -> {:.2e}", gaps[0], gaps[2]))
                } else {
                    Err(format!("gap grew: {gaps:?}"))
                }
            })()
        })?;
    }

    // eigenmeasure normalization, recursion, and the eigen-equation
    let mut rng = Lcg(0x0C0FFEE5);
    let mut seqs: Vec<DigitSequence> = Vec::new();
    while seqs.len() < 100 {
        let word = beta::greedy_digits(&ctx, rng.next_f64(), 40).map_err(CliError::Lib)?;
        let seq = DigitSequence::zero_extended(&word);
        if seq.check_self_admissible().is_ok() {
            seqs.push(seq);
        }
    }
    for &t in &[-2.0, 0.0, 2.0] {
        let orc = EigenOracle::new(&ctx, t)?;
        check(sink, &format!("normalization t={t}"), {
            (|| {
                let v = orc.nu_value(&ctx.one_digits, 4096).map_err(|e| e.to_string())?;
                let gap = (v.value - 1.0).abs();
                if gap <= 1e-10 {
                    Ok(format!("|nu(1) - 1| = {gap:.2e}"))
                } else {
                    Err(format!("|nu(1) - 1| = {gap:.2e} exceeds 1e-10"))
                }
            })()
        })?;
        let mut max_rec = 0.0f64;
        let mut max_eig = 0.0f64;
        let mut failed = None;
        for (i, seq) in seqs.iter().enumerate() {
            let rec = orc.nu_recursion_check(seq, 1024).map_err(CliError::Lib)?;
            let eig = orc.eigen_equation_check(seq, 1024).map_err(CliError::Lib)?;
            max_rec = max_rec.max(rec.value);
            max_eig = max_eig.max(eig.value);
            if (rec.value > 1e-8 || eig.value > 1e-8) && failed.is_none() {
                failed = Some(i);
            }
        }
        check(sink, &format!("recursion-and-eigen t={t}"), {
            match failed {
                None => Ok(format!(
                    "100 sequences, max residuals {max_rec:.2e} / {max_eig:.2e}"
                )),
                Some(i) => Err(format!(
                    "sequence {i}: residuals exceed 1e-8 (max {max_rec:.2e} / {max_eig:.2e})"
                )),
            }
        })?;
    }

    if failures > 0 {
        Err(CliError::ChecksFailed(failures))
    } else {
        writeln!(sink, "oracle suite: all checks passed")?;
        Ok(())
    }
}
