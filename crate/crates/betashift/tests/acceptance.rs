//! Acceptance gate: fifteen end-to-end checks with fixed tolerances and
//! time budgets. Each check prints one line; the process exits nonzero
//! if any check fails, so `cargo test` reports the target as failed.

use std::time::Instant;

use betashift::beta::{self, BetaContext, BetaSpec, DigitSequence};
use betashift::eigen::{self, Complex64, RationalPhi};
use betashift::oracle::{self, EigenOracle};
use betashift::singular::{self, TakagiSeries};
use betashift::spectrum::{self, Baseline};

type Check = fn() -> Result<String, String>;

fn main() {
    let checks: [(&str, f64, Check); 15] = [
        ("dyadic lambda closed form", 1.0, c01_dyadic_lambda),
        ("lambda at t=0 equals beta", 1.0, c02_lambda_zero),
        ("parry polynomial identity", 1.0, c03_parry_identity),
        ("besicovitch dimension", 10.0, c04_besicovitch),
        ("fan-zhu dimension and support", 10.0, c05_fan_zhu),
        ("parry-family dimension", 30.0, c06_parry_family),
        ("alpha vs finite difference", 30.0, c07_alpha_fd),
        ("brute-force pressure", 120.0, c08_brute_pressure),
        ("maximal frequency bounds", 10.0, c09_c_beta),
        ("eigenmeasure and eigenfunction", 30.0, c10_eigen_checks),
        ("takagi series vs tent oracle", 5.0, c11_takagi_oracle),
        ("finite-difference derivative", 60.0, c12_fd_derivative),
        ("lebesgue singular closed form", 5.0, c13_lebesgue_singular),
        ("takagi lattice identity", 1.0, c14_takagi_lattice),
        ("subleading zeros", 1.0, c15_subleading_zeros),
    ];

    let mut failures = 0usize;
    for (i, (name, budget, run)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) if elapsed <= *budget => {
                println!(
                    "criterion {:02} {:<34} PASS  ({detail}; {elapsed:.3}s)",
                    i + 1,
                    name
                );
            }
            Ok(detail) => {
                failures += 1;
                println!(
                    "criterion {:02} {:<34} FAIL  (over {budget:.0}s budget: {elapsed:.3}s; {detail})",
                    i + 1,
                    name
                );
            }
            Err(detail) => {
                failures += 1;
                println!(
                    "criterion {:02} {:<34} FAIL  ({detail}; {elapsed:.3}s)",
                    i + 1,
                    name
                );
            }
        }
    }
    if failures > 0 {
        println!("{failures} of 15 acceptance checks failed");
        std::process::exit(1);
    }
    println!("all 15 acceptance checks passed");
}

fn ctx(spec: BetaSpec) -> Result<BetaContext, String> {
    spec.context().map_err(|e| format!("context: {e:?}"))
}

fn standard_contexts() -> Result<Vec<(&'static str, BetaContext)>, String> {
    Ok(vec![
        ("dyadic", ctx(BetaSpec::dyadic())?),
        ("golden", ctx(BetaSpec::golden())?),
        ("tribonacci", ctx(BetaSpec::tribonacci())?),
        ("parry-2", ctx(BetaSpec::parry(2))?),
        ("beta-1.8", ctx(BetaSpec::numeric(1.8))?),
    ])
}

fn lambda(c: &BetaContext, t: f64) -> Result<f64, String> {
    eigen::leading_lambda(c, t, eigen::DEFAULT_TOL)
        .map(|e| e.lambda)
        .map_err(|e| format!("lambda(t={t}): {e:?}"))
}

/// Deterministic 64-bit LCG for reproducible sample points.
struct Lcg(u64);

impl Lcg {
    fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    /// Uniform in (0, 1).
    fn next_f64(&mut self) -> f64 {
        loop {
            let u = (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
            if u > 0.0 && u < 1.0 {
                return u;
            }
        }
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

// 1. β = 2 at integer t ∈ [−10, 10]: λ_t = 1 + e^t to 1e−10.
fn c01_dyadic_lambda() -> Result<String, String> {
    let c = ctx(BetaSpec::dyadic())?;
    let mut worst = 0.0f64;
    for k in -10..=10 {
        let t = k as f64;
        let err = (lambda(&c, t)? - (1.0 + t.exp())).abs();
        worst = worst.max(err);
        if err > 1e-10 {
            return Err(format!("t={t}: |lambda - (1+e^t)| = {err:.3e} > 1e-10"));
        }
    }
    Ok(format!("max deviation {worst:.2e} over 21 points"))
}

// 2. λ_0 = β for all five standard contexts, to 1e−9.
fn c02_lambda_zero() -> Result<String, String> {
    let mut worst = 0.0f64;
    for (name, c) in standard_contexts()? {
        let err = (lambda(&c, 0.0)? - c.beta).abs();
        worst = worst.max(err);
        if err > 1e-9 {
            return Err(format!("{name}: |lambda_0 - beta| = {err:.3e} > 1e-9"));
        }
    }
    Ok(format!("max deviation {worst:.2e} across 5 betas"))
}

// 3. Parry family N ∈ {1,2,3}: λ^{N+1} − λ^N = e^t at t ∈ {−3, 0, 3}.
fn c03_parry_identity() -> Result<String, String> {
    let mut worst = 0.0f64;
    for n in 1u32..=3 {
        let c = ctx(BetaSpec::parry(n))?;
        for &t in &[-3.0, 0.0, 3.0] {
            let l = lambda(&c, t)?;
            let res = (l.powi(n as i32 + 1) - l.powi(n as i32) - t.exp()).abs();
            worst = worst.max(res);
            if res > 1e-9 {
                return Err(format!(
                    "N={n} t={t}: |lambda^{}-lambda^{}-e^t| = {res:.3e} > 1e-9",
                    n + 1,
                    n
                ));
            }
        }
    }
    Ok(format!("max residual {worst:.2e} over 9 cases"))
}

// 4. β = 2 dimension spectrum matches the Besicovitch entropy formula on
//    a 101-point frequency grid in (0.01, 0.99), to 1e−8.
fn c04_besicovitch() -> Result<String, String> {
    let c = ctx(BetaSpec::dyadic())?;
    let mut worst = 0.0f64;
    for alpha in linspace(0.01, 0.99, 101) {
        let got = spectrum::dim_of_alpha(&c, alpha)
            .map_err(|e| format!("dim_of_alpha({alpha}): {e:?}"))?;
        let want = spectrum::closed_form_baseline(Baseline::Besicovitch, alpha)
            .map_err(|e| format!("baseline({alpha}): {e:?}"))?;
        let err = (got.dim - want).abs();
        worst = worst.max(err);
        if err > 1e-8 {
            return Err(format!("alpha={alpha}: |dim - closed form| = {err:.3e} > 1e-8"));
        }
    }
    Ok(format!("max deviation {worst:.2e} over 101 frequencies"))
}

// 5. Golden ratio matches the Fan–Zhu formula on (0.01, 0.49) and the
//    spectrum vanishes at frequencies 0.5, 0.6, 0.9 beyond c_β = 1/2.
fn c05_fan_zhu() -> Result<String, String> {
    let c = ctx(BetaSpec::golden())?;
    let mut worst = 0.0f64;
    for alpha in linspace(0.01, 0.49, 101) {
        let got = spectrum::dim_of_alpha(&c, alpha)
            .map_err(|e| format!("dim_of_alpha({alpha}): {e:?}"))?;
        let want = spectrum::closed_form_baseline(Baseline::FanZhu, alpha)
            .map_err(|e| format!("baseline({alpha}): {e:?}"))?;
        let err = (got.dim - want).abs();
        worst = worst.max(err);
        if err > 1e-8 {
            return Err(format!("alpha={alpha}: |dim - closed form| = {err:.3e} > 1e-8"));
        }
    }
    for &alpha in &[0.5, 0.6, 0.9] {
        let got = spectrum::dim_of_alpha(&c, alpha)
            .map_err(|e| format!("dim_of_alpha({alpha}): {e:?}"))?;
        if got.dim.abs() > 1e-12 {
            return Err(format!("alpha={alpha}: expected dim 0, got {}", got.dim));
        }
    }
    Ok(format!(
        "max deviation {worst:.2e} over 101 frequencies; zero beyond c"
    ))
}

// 6. Parry family N ∈ {1,2,3}: spectrum matches the closed form on
//    51-point grids in (0.01, 1/(N+1) − 0.01), to 1e−8.
fn c06_parry_family() -> Result<String, String> {
    let mut worst = 0.0f64;
    for n in 1u32..=3 {
        let c = ctx(BetaSpec::parry(n))?;
        let hi = 1.0 / (n as f64 + 1.0) - 0.01;
        for alpha in linspace(0.01, hi, 51) {
            let got = spectrum::dim_of_alpha(&c, alpha)
                .map_err(|e| format!("N={n} dim_of_alpha({alpha}): {e:?}"))?;
            let want = spectrum::closed_form_baseline(Baseline::ParryFamily(n), alpha)
                .map_err(|e| format!("N={n} baseline({alpha}): {e:?}"))?;
            let err = (got.dim - want).abs();
            worst = worst.max(err);
            if err > 1e-8 {
                return Err(format!(
                    "N={n} alpha={alpha}: |dim - closed form| = {err:.3e} > 1e-8"
                ));
            }
        }
    }
    Ok(format!("max deviation {worst:.2e} over 3 families"))
}

// 7. Analytic α(t) agrees with the central pressure difference at
//    h = 1e−4 to 1e−6 on 41 points of [−5, 5], all five betas.
fn c07_alpha_fd() -> Result<String, String> {
    let mut worst = 0.0f64;
    for (name, c) in standard_contexts()? {
        for t in linspace(-5.0, 5.0, 41) {
            let a = spectrum::alpha_of_t(&c, t)
                .map_err(|e| format!("{name} alpha({t}): {e:?}"))?;
            let fd = spectrum::alpha_fd(&c, t, 1e-4)
                .map_err(|e| format!("{name} alpha_fd({t}): {e:?}"))?;
            let err = (a - fd).abs();
            worst = worst.max(err);
            if err > 1e-6 {
                return Err(format!(
                    "{name} t={t}: |alpha - finite difference| = {err:.3e} > 1e-6"
                ));
            }
        }
    }
    Ok(format!("max deviation {worst:.2e} over 205 points"))
}

// 8. Cylinder-count pressure: the gap to ln λ_t shrinks over
//    n ∈ {12, 18, 24} and stays under 3/n for golden and tribonacci;
//    at β = 2 the count is exact (gap ≤ 1e−12 at n = 24).
fn c08_brute_pressure() -> Result<String, String> {
    let mut worst_ratio = 0.0f64;
    for (name, c) in [
        ("golden", ctx(BetaSpec::golden())?),
        ("tribonacci", ctx(BetaSpec::tribonacci())?),
    ] {
        for &t in &[-2.0, 0.0, 2.0] {
            let target = lambda(&c, t)?.ln();
            let mut gaps = Vec::new();
            for n in [12usize, 18, 24] {
                let p = oracle::brute_pressure(&c, t, n)
                    .map_err(|e| format!("{name} brute({t},{n}): {e:?}"))?;
                let gap = (p - target).abs();
                if gap > 3.0 / n as f64 {
                    return Err(format!(
                        "{name} t={t} n={n}: gap {gap:.3e} exceeds 3/n = {:.3e}",
                        3.0 / n as f64
                    ));
                }
                worst_ratio = worst_ratio.max(gap * n as f64 / 3.0);
                gaps.push(gap);
            }
            if !(gaps[1] <= gaps[0] + 1e-15 && gaps[2] <= gaps[1] + 1e-15) {
                return Err(format!(
                    "{name} t={t}: gaps {gaps:?} not decreasing over n = 12, 18, 24"
                ));
            }
        }
    }
    let c2 = ctx(BetaSpec::dyadic())?;
    for &t in &[-2.0, 0.0, 2.0] {
        let p = oracle::brute_pressure(&c2, t, 24)
            .map_err(|e| format!("dyadic brute({t},24): {e:?}"))?;
        let gap = (p - (1.0 + t.exp()).ln()).abs();
        if gap > 1e-12 {
            return Err(format!("dyadic t={t}: gap {gap:.3e} > 1e-12"));
        }
    }
    Ok(format!(
        "gaps decreasing, worst gap/(3/n) = {worst_ratio:.2}, dyadic exact"
    ))
}

// 9. Maximal-frequency reports: exact 2/3 (tribonacci) and 1/3
//    (parry-2) with the numeric stand-in α(30) within 1e−4; run-length
//    bounds bracket the numeric estimate for β ∈ {1.7, 1.8, 1.9}.
fn c09_c_beta() -> Result<String, String> {
    let cases = [
        (BetaSpec::tribonacci(), "tribonacci", 2.0 / 3.0),
        (BetaSpec::parry(2), "parry-2", 1.0 / 3.0),
    ];
    for (spec, name, want) in cases {
        let report = spectrum::c_beta_report(&ctx(spec)?)
            .map_err(|e| format!("{name} report: {e:?}"))?;
        match report.exact {
            Some(got) if (got - want).abs() <= 1e-12 => {}
            other => return Err(format!("{name}: exact value {other:?}, want {want}")),
        }
        let gap = (report.numeric_estimate - want).abs();
        if gap > 1e-4 {
            return Err(format!(
                "{name}: |alpha(30) - exact| = {gap:.3e} > 1e-4"
            ));
        }
    }
    // The estimate α(30) approaches c_β from below, so it is granted the
    // same 1e−4 accuracy the exact-family comparison above uses. A
    // tighter slack is unattainable at t = 30: for β = 1.9 the lower
    // bound 2/3 is attained exactly (the orbit of 110 repeating), and
    // α(30) still sits about 1e−5 under it.
    for b in [1.7, 1.8, 1.9] {
        let report = spectrum::c_beta_report(&ctx(BetaSpec::numeric(b))?)
            .map_err(|e| format!("beta={b} report: {e:?}"))?;
        let est = report.numeric_estimate;
        if !(report.lower <= est + 1e-4 && est <= report.upper + 1e-4) {
            return Err(format!(
                "beta={b}: estimate {est} outside [{}, {}]",
                report.lower, report.upper
            ));
        }
    }
    Ok("exact values, estimates, and run-length bounds consistent".to_string())
}

// 10. Eigenmeasure normalization ν(1̄) = 1, the measure recursion, and
//     the eigenfunction equation on 100 random admissible sequences per
//     beta at t ∈ {−2, 0, 2}, residuals within 1e−8.
fn c10_eigen_checks() -> Result<String, String> {
    let mut worst = 0.0f64;
    for (fi, (name, c)) in standard_contexts()?.into_iter().enumerate() {
        let mut rng = Lcg(0x5EED_0001 + fi as u64);
        let mut seqs = Vec::with_capacity(100);
        while seqs.len() < 100 {
            let word = beta::greedy_digits(&c, rng.next_f64(), 40)
                .map_err(|e| format!("{name} digits: {e:?}"))?;
            let seq = DigitSequence::zero_extended(&word);
            if seq.check_self_admissible().is_ok() {
                seqs.push(seq);
            }
        }
        for &t in &[-2.0, 0.0, 2.0] {
            let orc = EigenOracle::new(&c, t).map_err(|e| format!("{name} t={t}: {e:?}"))?;
            let norm = orc
                .nu_value(&c.one_digits, 4096)
                .map_err(|e| format!("{name} t={t} nu(1): {e:?}"))?;
            let gap = (norm.value - 1.0).abs();
            if gap > 1e-10 {
                return Err(format!("{name} t={t}: |nu(1) - 1| = {gap:.3e} > 1e-10"));
            }
            for (si, seq) in seqs.iter().enumerate() {
                let rec = orc
                    .nu_recursion_check(seq, 1024)
                    .map_err(|e| format!("{name} t={t} seq {si} recursion: {e:?}"))?;
                let eig = orc
                    .eigen_equation_check(seq, 1024)
                    .map_err(|e| format!("{name} t={t} seq {si} eigen: {e:?}"))?;
                worst = worst.max(rec.value).max(eig.value);
                if rec.value > 1e-8 || eig.value > 1e-8 {
                    return Err(format!(
                        "{name} t={t} seq {si}: residuals {:.3e} / {:.3e} exceed 1e-8",
                        rec.value, eig.value
                    ));
                }
            }
        }
    }
    Ok(format!("max residual {worst:.2e} over 1500 random checks"))
}

// 11. β = 2: series evaluation of the Takagi function matches the tent
//     iteration oracle to 1e−9 on 1024 grid points at depth 64.
fn c11_takagi_oracle() -> Result<String, String> {
    let c = ctx(BetaSpec::dyadic())?;
    let series = TakagiSeries::new(&c).map_err(|e| format!("series: {e:?}"))?;
    let mut worst = 0.0f64;
    for i in 0..1024u32 {
        let x = i as f64 / 1023.0;
        let got = series
            .eval(x, 64)
            .map_err(|e| format!("series({x}): {e:?}"))?;
        let want = singular::takagi_oracle(x, 64).map_err(|e| format!("oracle({x}): {e:?}"))?;
        let err = (got.value - want.value).abs();
        worst = worst.max(err);
        if err > 1e-9 {
            return Err(format!("x={x}: |series - oracle| = {err:.3e} > 1e-9"));
        }
    }
    Ok(format!("max deviation {worst:.2e} over 1024 points"))
}

// 12. The symmetric difference quotient of p ↦ F_p at p = 1/β with step
//     1e−4 reproduces the generalized Takagi function within 5e−4 on 64
//     random points for golden, tribonacci, and parry-2.
fn c12_fd_derivative() -> Result<String, String> {
    let mut worst = 0.0f64;
    for (name, c) in [
        ("golden", ctx(BetaSpec::golden())?),
        ("tribonacci", ctx(BetaSpec::tribonacci())?),
        ("parry-2", ctx(BetaSpec::parry(2))?),
    ] {
        let series = TakagiSeries::new(&c).map_err(|e| format!("{name} series: {e:?}"))?;
        let mut rng = Lcg(0xD1FF_0001);
        for _ in 0..64 {
            let x = rng.next_f64();
            let fd = singular::fd_hata_yamaguchi(&c, x, 1e-4)
                .map_err(|e| format!("{name} fd({x}): {e:?}"))?;
            let g = series
                .eval(x, 512)
                .map_err(|e| format!("{name} series({x}): {e:?}"))?;
            let err = (fd - g.value).abs();
            worst = worst.max(err);
            if err > 5e-4 {
                return Err(format!(
                    "{name} x={x}: |difference quotient - series| = {err:.3e} > 5e-4"
                ));
            }
        }
    }
    Ok(format!("max deviation {worst:.2e} over 192 points"))
}

// 13. β = 2: the eigenmeasure distribution at t = ln((1−p)/p) matches
//     the classical Lebesgue singular function on a 21×21 (p, x) grid,
//     to 1e−10.
fn c13_lebesgue_singular() -> Result<String, String> {
    let c = ctx(BetaSpec::dyadic())?;
    let mut worst = 0.0f64;
    for i in 1..=21u32 {
        let p = i as f64 / 22.0;
        for j in 0..=20u32 {
            let x = j as f64 / 20.0;
            let got = singular::f_p(&c, p, x, 1024)
                .map_err(|e| format!("F_p({p},{x}): {e:?}"))?;
            let want = singular::lebesgue_singular(p, x, 1024)
                .map_err(|e| format!("closed({p},{x}): {e:?}"))?;
            let err = (got.value - want.value).abs();
            worst = worst.max(err);
            if err > 1e-10 {
                return Err(format!(
                    "p={p} x={x}: |F_p - closed form| = {err:.3e} > 1e-10"
                ));
            }
        }
    }
    Ok(format!("max deviation {worst:.2e} over 441 grid points"))
}

// 14. Lattice identity G(β^{−M}) = M·β^{−M} for M ∈ {1..10} on all five
//     standard betas, to 1e−9.
fn c14_takagi_lattice() -> Result<String, String> {
    let mut worst = 0.0f64;
    for (name, c) in standard_contexts()? {
        let series = TakagiSeries::new(&c).map_err(|e| format!("{name} series: {e:?}"))?;
        for m in 1..=10i32 {
            let x = c.beta.powi(-m);
            let got = series
                .eval(x, 256)
                .map_err(|e| format!("{name} M={m}: {e:?}"))?;
            let err = (got.value - m as f64 * x).abs();
            worst = worst.max(err);
            if err > 1e-9 {
                return Err(format!(
                    "{name} M={m}: |G(beta^-M) - M*beta^-M| = {err:.3e} > 1e-9"
                ));
            }
        }
    }
    Ok(format!("max deviation {worst:.2e} over 50 lattice points"))
}

fn phi_continuation(rat: &RationalPhi, t: f64, z: Complex64) -> Complex64 {
    let zero = Complex64::new(0.0, 0.0);
    let a = rat
        .a_terms
        .iter()
        .fold(zero, |acc, &(j, s)| acc + z.powi(j as i32) * (t * s as f64).exp());
    let b = rat
        .b_terms
        .iter()
        .fold(zero, |acc, &(j, s)| acc + z.powi(j as i32) * (t * s as f64).exp());
    let r = z.powi(rat.period_len as i32) * (t * rat.period_ones as f64).exp();
    a + b / (Complex64::new(1.0, 0.0) - r)
}

// 15. Subleading zeros of 1 − φ_t: none for β = 2; for the golden ratio
//     at t = 0 the single zero is the second root of z² + z − 1 with
//     modulus above η_0 and residual within 1e−8.
fn c15_subleading_zeros() -> Result<String, String> {
    let c2 = ctx(BetaSpec::dyadic())?;
    let zs = eigen::subleading_zeros(&c2, 0.0, 4.0).map_err(|e| format!("dyadic: {e:?}"))?;
    if !zs.is_empty() {
        return Err(format!("dyadic: expected no subleading zeros, got {zs:?}"));
    }
    let cg = ctx(BetaSpec::golden())?;
    let eig = eigen::leading_lambda(&cg, 0.0, eigen::DEFAULT_TOL)
        .map_err(|e| format!("golden eigen: {e:?}"))?;
    let zs = eigen::subleading_zeros(&cg, 0.0, 3.0).map_err(|e| format!("golden: {e:?}"))?;
    let want = -(1.0 + 5f64.sqrt()) / 2.0;
    let z = zs
        .iter()
        .find(|z| (z.re - want).abs() <= 1e-8 && z.im.abs() <= 1e-8)
        .ok_or_else(|| format!("golden: no zero near {want}, got {zs:?}"))?;
    if z.norm() <= eig.eta {
        return Err(format!(
            "golden: zero modulus {} not above eta_0 = {}",
            z.norm(),
            eig.eta
        ));
    }
    let rat = eigen::rationalize_phi(&cg).map_err(|e| format!("golden rational: {e:?}"))?;
    let residual = (Complex64::new(1.0, 0.0) - phi_continuation(&rat, 0.0, *z)).norm();
    if residual > 1e-8 {
        return Err(format!("golden: |1 - phi(z)| = {residual:.3e} > 1e-8"));
    }
    Ok(format!(
        "dyadic clean, golden zero at {:.10} with residual {residual:.2e}",
        z.re
    ))
}
