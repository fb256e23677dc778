//! Per-claim numeric verdicts at finite truncation.
//!
//! Each [`ClaimId`] names one step of the argument around the factorised
//! L-series. [`run_audit`] evaluates every claim for one character and point
//! `s` over a list of truncations and reports what the numbers show:
//! identities that hold to rounding, sums that grow linearly, sums that stay
//! positive, and whether a grid scan of `L(σ, χ)` on `(0, 1)` changed sign.
//! Divergent sums are never reported as numbers; they are reported as
//! linear-growth fits over the truncations.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{euler_phi, gcd, CharValue, DirichletCharacter};
use crate::complex::real_pow_neg;
use crate::error::{LabError, Result};
use crate::lseries::{scan_zeros_with, HurwitzConfig, LPoint};
use crate::resolution::{
    build_vectors, factorize_product, phase_series_sums, reconstruct_identity, Variant,
};
use crate::rotation::{pappus_check, transformed_equation_residual};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClaimId {
    Eq2Reconstruct,
    Eq3Reconstruct,
    Eq45Factorization,
    PhaseSumDivergesT0,
    Chi4PhaseSumDiverges,
    PappusIdentity,
    TransformedEqPositivity,
    NonvanishingScan,
}

impl ClaimId {
    pub const ALL: [ClaimId; 8] = [
        ClaimId::Eq2Reconstruct,
        ClaimId::Eq3Reconstruct,
        ClaimId::Eq45Factorization,
        ClaimId::PhaseSumDivergesT0,
        ClaimId::Chi4PhaseSumDiverges,
        ClaimId::PappusIdentity,
        ClaimId::TransformedEqPositivity,
        ClaimId::NonvanishingScan,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Eq2Reconstruct => "EQ2_RECONSTRUCT",
            ClaimId::Eq3Reconstruct => "EQ3_RECONSTRUCT",
            ClaimId::Eq45Factorization => "EQ45_FACTORIZATION",
            ClaimId::PhaseSumDivergesT0 => "PHASE_SUM_DIVERGES_T0",
            ClaimId::Chi4PhaseSumDiverges => "CHI4_PHASE_SUM_DIVERGES",
            ClaimId::PappusIdentity => "PAPPUS_IDENTITY",
            ClaimId::TransformedEqPositivity => "TRANSFORMED_EQ_POSITIVITY",
            ClaimId::NonvanishingScan => "NONVANISHING_SCAN",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    IdentityExact,
    HoldsAtTruncation,
    DivergesLinear,
    PositiveDefinite,
    NoZeroFound,
    /// A sign change of `L(σ, χ)` was bracketed.
    ZeroFound,
    /// The numbers did not support the claim at the requested tolerance.
    NotConfirmed,
    /// The claim does not apply to this input (e.g. a non-real character).
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::IdentityExact => "identity-exact",
            Verdict::HoldsAtTruncation => "holds-at-truncation",
            Verdict::DivergesLinear => "diverges-linear",
            Verdict::PositiveDefinite => "positive-definite",
            Verdict::NoZeroFound => "no-zero-found",
            Verdict::ZeroFound => "zero-found",
            Verdict::NotConfirmed => "not-confirmed",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditInputs {
    pub q: u64,
    pub char_index: Option<usize>,
    pub s: LPoint,
    pub truncations: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvidencePoint {
    #[serde(rename = "N")]
    pub n: u64,
    pub label: String,
    #[serde(with = "crate::complex::serde_complex")]
    pub value: Complex64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub sigma_lo: f64,
    pub sigma_hi: f64,
    pub grid_points: usize,
    pub min_abs: f64,
    pub argmin_sigma: f64,
    pub sign_changes: usize,
    pub roots: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Evidence {
    Points(Vec<EvidencePoint>),
    Scan(ScanSummary),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: ClaimId,
    pub inputs: AuditInputs,
    pub evidence: Evidence,
    pub verdict: Verdict,
    pub note: String,
}

/// Thresholds used by the verdicts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuditConfig {
    /// Relative residual accepted for the reconstruction and factorisation
    /// identities.
    pub identity_tol: f64,
    /// Relative residual accepted for `V = 2π η S`.
    pub pappus_tol: f64,
    /// Largest relative misfit of a linear fit that still counts as linear.
    pub fit_misfit: f64,
    /// Largest deviation of the fitted slope from the analytic slope.
    pub slope_tol: f64,
    /// Minimum number of truncations behind a growth classification.
    pub min_growth_points: usize,
    pub grid_step: f64,
    pub scan_tol: f64,
    pub hurwitz: HurwitzConfig,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            identity_tol: 1e-12,
            pappus_tol: 1e-9,
            fit_misfit: 1e-6,
            slope_tol: 1e-6,
            min_growth_points: 3,
            grid_step: 0.01,
            scan_tol: 1e-9,
            hurwitz: HurwitzConfig::default(),
        }
    }
}

/// Least-squares line through `(x, y)` points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    /// `max |y − fit| / max |y|`.
    pub rel_misfit: f64,
}

pub fn linear_fit(points: &[(f64, f64)]) -> Option<LinearFit> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let scale = points.iter().map(|p| p.1.abs()).fold(0.0, f64::max);
    let worst = points
        .iter()
        .map(|p| (p.1 - (slope * p.0 + intercept)).abs())
        .fold(0.0, f64::max);
    let rel_misfit = if scale > 0.0 { worst / scale } else { worst };
    Some(LinearFit {
        slope,
        intercept,
        rel_misfit,
    })
}

fn point(n: u64, label: &str, value: Complex64) -> EvidencePoint {
    EvidencePoint {
        n,
        label: label.to_string(),
        value,
    }
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

struct Ctx<'a> {
    chi: &'a DirichletCharacter,
    s: LPoint,
    truncations: &'a [u64],
    cfg: &'a AuditConfig,
}

type Outcome = (Evidence, Verdict, String);

/// Runs every claim in [`ClaimId::ALL`] order. Errors inside a claim become
/// its note and verdict, never a failure of the whole audit.
pub fn run_audit(
    chi: &DirichletCharacter,
    char_index: Option<usize>,
    s: LPoint,
    truncations: &[u64],
    cfg: &AuditConfig,
) -> Result<Vec<ClaimResult>> {
    if truncations.is_empty() {
        return Err(LabError::InvalidArgument("at least one truncation is required".into()));
    }
    if truncations.first() == Some(&0) || truncations.windows(2).any(|w| w[0] >= w[1]) {
        return Err(LabError::InvalidArgument(
            "truncations must be positive and strictly increasing".into(),
        ));
    }
    let ctx = Ctx {
        chi,
        s,
        truncations,
        cfg,
    };
    let inputs = AuditInputs {
        q: chi.modulus(),
        char_index,
        s,
        truncations: truncations.to_vec(),
    };
    Ok(ClaimId::ALL
        .par_iter()
        .map(|&id| {
            let (evidence, verdict, note) = match id {
                ClaimId::Eq2Reconstruct => reconstruct_claim(&ctx, Variant::AmplitudeChi),
                ClaimId::Eq3Reconstruct => reconstruct_claim(&ctx, Variant::PhaseChi),
                ClaimId::Eq45Factorization => factorization_claim(&ctx),
                ClaimId::PhaseSumDivergesT0 => phase_sum_claim(&ctx),
                ClaimId::Chi4PhaseSumDiverges => chi4_claim(&ctx),
                ClaimId::PappusIdentity => pappus_claim(&ctx),
                ClaimId::TransformedEqPositivity => positivity_claim(&ctx),
                ClaimId::NonvanishingScan => scan_claim(&ctx),
            };
            ClaimResult {
                claim_id: id,
                inputs: inputs.clone(),
                evidence,
                verdict,
                note,
            }
        })
        .collect())
}

fn reconstruct_claim(ctx: &Ctx, variant: Variant) -> Outcome {
    let evidence: Vec<EvidencePoint> = ctx
        .truncations
        .iter()
        .map(|&n| {
            let r = reconstruct_identity(ctx.chi, ctx.s, n, variant);
            point(n, "rel_residual", real(r.relative()))
        })
        .collect();
    let worst = evidence.iter().map(|e| e.value.re).fold(0.0, f64::max);
    let verdict = if worst <= ctx.cfg.identity_tol {
        Verdict::IdentityExact
    } else {
        Verdict::NotConfirmed
    };
    let note = format!(
        "Σ a_n p_n vs partial sum, worst relative residual {worst:e} (tolerance {:e})",
        ctx.cfg.identity_tol
    );
    (Evidence::Points(evidence), verdict, note)
}

fn factorization_claim(ctx: &Ctx) -> Outcome {
    let mut evidence = Vec::new();
    let mut worst: f64 = 0.0;
    let mut problems = Vec::new();
    let mut last_cos = (None, None);
    for &n in ctx.truncations {
        for (variant, tag) in [(Variant::AmplitudeChi, "amplitude_chi"), (Variant::PhaseChi, "phase_chi")] {
            let v = build_vectors(ctx.chi, ctx.s, n, variant);
            match factorize_product(&v.a_vec, &v.p_vec) {
                Ok(f) => {
                    worst = worst.max(f.residual);
                    evidence.push(point(n, &format!("residual_{tag}"), real(f.residual)));
                    evidence.push(point(n, &format!("cos_{tag}"), f.cosine));
                    if tag == "amplitude_chi" {
                        last_cos.0 = Some(f.cosine);
                    } else {
                        last_cos.1 = Some(f.cosine);
                    }
                }
                Err(e) => problems.push(format!("N = {n}, {tag}: {e}")),
            }
        }
    }
    let verdict = if problems.is_empty() && worst <= ctx.cfg.identity_tol {
        Verdict::IdentityExact
    } else {
        Verdict::NotConfirmed
    };
    let mut note = format!(
        "dot = ‖u‖‖v‖cos(u, v) with formal norms, worst relative residual {worst:e}"
    );
    if let (Some(ca), Some(cp)) = last_cos {
        note.push_str(&format!(
            "; formal cosines at N = {}: amplitude_chi {}, phase_chi {}",
            ctx.truncations.last().unwrap(),
            crate::complex::format_complex(ca),
            crate::complex::format_complex(cp)
        ));
    }
    if !problems.is_empty() {
        note.push_str("; ");
        note.push_str(&problems.join("; "));
    }
    (Evidence::Points(evidence), verdict, note)
}

/// Classifies `(N, S_N)` as linear growth with the given analytic slope.
fn growth_verdict(
    points: &[(f64, f64)],
    analytic_slope: Option<f64>,
    cfg: &AuditConfig,
) -> (Verdict, String) {
    if points.len() < cfg.min_growth_points {
        return (
            Verdict::NotConfirmed,
            format!(
                "growth classification needs at least {} truncations, got {}",
                cfg.min_growth_points,
                points.len()
            ),
        );
    }
    let fit = linear_fit(points).expect("at least two distinct truncations");
    let mut note = format!(
        "linear fit slope {}, intercept {}, relative misfit {:e}",
        fit.slope, fit.intercept, fit.rel_misfit
    );
    let linear = fit.rel_misfit < cfg.fit_misfit;
    let slope_ok = match analytic_slope {
        Some(want) => {
            note.push_str(&format!("; analytic slope {want}"));
            (fit.slope - want).abs() <= cfg.slope_tol
        }
        None => fit.slope.abs() > cfg.slope_tol,
    };
    if linear && slope_ok {
        (Verdict::DivergesLinear, note)
    } else {
        (Verdict::NotConfirmed, note)
    }
}

/// `Σ_{n≤N} n^{-i·k·t}` for the exponent multiplier `k`.
fn complex_phase_sum(t: f64, k: f64, n_max: u64) -> Complex64 {
    let exponent = Complex64::new(0.0, k * t);
    (1..=n_max).map(|n| real_pow_neg(n as f64, exponent)).sum()
}

fn phase_sum_claim(ctx: &Ctx) -> Outcome {
    let mut evidence = Vec::new();
    let mut points = Vec::new();
    for &n in ctx.truncations {
        let (cos_sum, sin_sum) = phase_series_sums(0.0, n);
        points.push((n as f64, cos_sum));
        evidence.push(point(n, "cos_sum_t0", real(cos_sum)));
        evidence.push(point(n, "sin_sum_t0", real(sin_sum)));
        evidence.push(point(n, "sum_n^-2it_t0", complex_phase_sum(0.0, 2.0, n)));
        evidence.push(point(n, "sum_n^-4it_t0", complex_phase_sum(0.0, 4.0, n)));
        if ctx.s.t != 0.0 {
            evidence.push(point(n, "sum_n^-2it", complex_phase_sum(ctx.s.t, 2.0, n)));
            evidence.push(point(n, "sum_n^-4it", complex_phase_sum(ctx.s.t, 4.0, n)));
        }
    }
    let (verdict, mut note) = growth_verdict(&points, Some(1.0), ctx.cfg);
    note.insert_str(0, "Σ cos(0·ln n) = N; ");
    (Evidence::Points(evidence), verdict, note)
}

/// Largest multiple of `q` not above `n`, or `n` itself below one period.
fn period_aligned(n: u64, q: u64) -> u64 {
    if n >= q {
        n / q * q
    } else {
        n
    }
}

fn chi4_claim(ctx: &Ctx) -> Outcome {
    let q = ctx.chi.modulus();
    let chi4_principal = (0..q).all(|n| {
        let v = ctx.chi.value_u64(n).pow(4);
        v.is_zero() || v == CharValue::ONE
    });
    let mut evidence = Vec::new();
    let mut points = Vec::new();
    for &n in ctx.truncations {
        let aligned = period_aligned(n, q);
        let sum_pow = |k: u32, from: f64| -> Complex64 {
            (1..=aligned)
                .map(|m| {
                    let c = ctx.chi.value_u64(m).pow(k);
                    if c.is_zero() {
                        Complex64::new(0.0, 0.0)
                    } else {
                        c.to_complex() * real_pow_neg(m as f64, Complex64::new(0.0, from))
                    }
                })
                .sum()
        };
        let s4 = sum_pow(4, 0.0);
        points.push((aligned as f64, s4.re));
        evidence.push(point(aligned, "sum_chi4_n^-4it_t0", s4));
        evidence.push(point(aligned, "sum_chi2_n^-2it_t0", sum_pow(2, 0.0)));
        if ctx.s.t != 0.0 {
            evidence.push(point(aligned, "sum_chi4_n^-4it", sum_pow(4, 4.0 * ctx.s.t)));
        }
    }
    let analytic = chi4_principal.then(|| euler_phi(q) as f64 / q as f64);
    let (verdict, mut note) = growth_verdict(&points, analytic, ctx.cfg);
    note.insert_str(
        0,
        &format!("Σ χ⁴(n) at t = 0 over complete periods of q = {q} (N rounded down to a multiple of q); "),
    );
    if !chi4_principal {
        note.push_str("; χ⁴ is not principal, so no linear growth is expected");
    }
    (Evidence::Points(evidence), verdict, note)
}

fn pappus_claim(ctx: &Ctx) -> Outcome {
    let mut evidence = Vec::new();
    let mut problems = Vec::new();
    let mut worst: f64 = 0.0;
    for &n in ctx.truncations {
        match pappus_check(ctx.chi, ctx.s, n) {
            Ok(r) => {
                worst = worst.max(r.rel_residual);
                evidence.push(point(n, "rel_residual", real(r.rel_residual)));
                evidence.push(point(n, "eta", r.eta));
            }
            Err(e) => problems.push(format!("N = {n}: {e}")),
        }
    }
    let verdict = if problems.is_empty() && worst <= ctx.cfg.pappus_tol {
        Verdict::HoldsAtTruncation
    } else {
        Verdict::NotConfirmed
    };
    let mut note = format!(
        "|V − 2πηS| / |V| on the finite step profile, worst {worst:e} (tolerance {:e})",
        ctx.cfg.pappus_tol
    );
    if !problems.is_empty() {
        note.push_str("; ");
        note.push_str(&problems.join("; "));
    }
    (Evidence::Points(evidence), verdict, note)
}

fn positivity_claim(ctx: &Ctx) -> Outcome {
    if !ctx.chi.is_real() {
        return (
            Evidence::Points(Vec::new()),
            Verdict::NotApplicable,
            "positivity of Σ χ²(n) n^{-2σ} needs a real character".into(),
        );
    }
    let s0 = LPoint::real(ctx.s.sigma);
    let mut evidence = Vec::new();
    let mut ws = Vec::new();
    for &n in ctx.truncations {
        let (sn, wn) = transformed_equation_residual(ctx.chi, s0, n);
        evidence.push(point(n, "S_N", sn));
        evidence.push(point(n, "W_N", wn));
        ws.push((n, wn));
    }
    let q = ctx.chi.modulus();
    let positive = ws.iter().all(|(_, w)| w.re > 0.0 && w.im == 0.0);
    let increasing = ws.windows(2).all(|w| {
        let new_terms = (w[0].0 + 1..=w[1].0).any(|m| gcd(m, q) == 1);
        if new_terms {
            w[1].1.re > w[0].1.re
        } else {
            w[1].1.re >= w[0].1.re
        }
    });
    let verdict = if positive && increasing {
        Verdict::PositiveDefinite
    } else {
        Verdict::NotConfirmed
    };
    let note = format!(
        "W_N = Σ χ²(n) n^{{-2σ}} at σ = {}, t = 0: every W_N > 0: {positive}, increasing in N: {increasing}",
        ctx.s.sigma
    );
    (Evidence::Points(evidence), verdict, note)
}

/// Grid `step, 2·step, …, 1 − step` as `(lo, hi, points)`.
pub fn unit_interval_grid(step: f64) -> Result<(f64, f64, usize)> {
    if !(step > 0.0 && step < 0.5) {
        return Err(LabError::InvalidArgument(format!(
            "grid step must lie in (0, 0.5), got {step}"
        )));
    }
    let intervals = (1.0 / step).round() as usize;
    if intervals < 3 {
        return Err(LabError::InvalidArgument(format!("grid step {step} leaves fewer than 2 points")));
    }
    Ok((step, 1.0 - step, intervals - 1))
}

fn scan_summary(
    chi: &DirichletCharacter,
    step: f64,
    tol: f64,
    hurwitz: &HurwitzConfig,
) -> Result<ScanSummary> {
    let (lo, hi, points) = unit_interval_grid(step)?;
    let scan = scan_zeros_with(chi, lo, hi, points, tol, hurwitz)?;
    Ok(ScanSummary {
        sigma_lo: lo,
        sigma_hi: hi,
        grid_points: points,
        min_abs: scan.min_abs,
        argmin_sigma: scan.argmin_sigma,
        sign_changes: scan.sign_changes(),
        roots: scan.brackets.iter().filter_map(|b| b.root).collect(),
    })
}

fn scan_claim(ctx: &Ctx) -> Outcome {
    if !ctx.chi.is_real() {
        return (
            Evidence::Points(Vec::new()),
            Verdict::NotApplicable,
            "real-axis zero scans need a real character".into(),
        );
    }
    match scan_summary(ctx.chi, ctx.cfg.grid_step, ctx.cfg.scan_tol, &ctx.cfg.hurwitz) {
        Ok(summary) => {
            let verdict = if summary.sign_changes == 0 {
                Verdict::NoZeroFound
            } else {
                Verdict::ZeroFound
            };
            let note = format!(
                "L(σ, χ) on {} grid points of [{}, {}]: min |L| = {:e} at σ = {}, {} sign change(s)",
                summary.grid_points,
                summary.sigma_lo,
                summary.sigma_hi,
                summary.min_abs,
                summary.argmin_sigma,
                summary.sign_changes
            );
            (Evidence::Scan(summary), verdict, note)
        }
        Err(e) => (
            Evidence::Points(Vec::new()),
            Verdict::NotConfirmed,
            format!("scan failed: {e}"),
        ),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub q: u64,
    pub char_index: usize,
    pub conductor: u64,
    pub primitive: bool,
    pub min_abs: f64,
    pub argmin_sigma: f64,
    pub sign_changes: usize,
    pub roots: Vec<f64>,
}

/// Scans every real non-principal character of modulus `q ≤ q_max` on the
/// grid `grid_step, …, 1 − grid_step`. Rows are ordered by `(q, index)`,
/// where the index refers to
/// [`enumerate_real_characters`](crate::characters::enumerate_real_characters).
pub fn nonvanishing_survey(q_max: u64, grid_step: f64, tol: f64) -> Result<Vec<SurveyRow>> {
    nonvanishing_survey_with(q_max, grid_step, tol, &HurwitzConfig::default())
}

pub fn nonvanishing_survey_with(
    q_max: u64,
    grid_step: f64,
    tol: f64,
    hurwitz: &HurwitzConfig,
) -> Result<Vec<SurveyRow>> {
    unit_interval_grid(grid_step)?;
    let cells: Vec<(u64, usize, DirichletCharacter)> = (1..=q_max)
        .flat_map(|q| {
            crate::characters::enumerate_real_characters(q)
                .into_iter()
                .enumerate()
                .filter(|(_, chi)| !chi.is_principal())
                .map(move |(idx, chi)| (q, idx, chi))
        })
        .collect();
    cells
        .par_iter()
        .map(|(q, idx, chi)| {
            let summary = scan_summary(chi, grid_step, tol, hurwitz)?;
            Ok(SurveyRow {
                q: *q,
                char_index: *idx,
                conductor: chi.conductor(),
                primitive: chi.is_primitive(),
                min_abs: summary.min_abs,
                argmin_sigma: summary.argmin_sigma,
                sign_changes: summary.sign_changes,
                roots: summary.roots,
            })
        })
        .collect()
}

pub fn survey_csv(rows: &[SurveyRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "q",
        "char_index",
        "conductor",
        "primitive",
        "min_abs_L",
        "argmin_sigma",
        "sign_changes",
    ])
    .expect("in-memory write");
    for r in rows {
        w.write_record([
            r.q.to_string(),
            r.char_index.to_string(),
            r.conductor.to_string(),
            r.primitive.to_string(),
            r.min_abs.to_string(),
            r.argmin_sigma.to_string(),
            r.sign_changes.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{enumerate_characters, enumerate_real_characters};

    fn chi4() -> DirichletCharacter {
        enumerate_real_characters(4).remove(1)
    }

    fn find(results: &[ClaimResult], id: ClaimId) -> &ClaimResult {
        results.iter().find(|r| r.claim_id == id).unwrap()
    }

    fn points(r: &ClaimResult, label: &str) -> Vec<(u64, Complex64)> {
        match &r.evidence {
            Evidence::Points(p) => p.iter().filter(|e| e.label == label).map(|e| (e.n, e.value)).collect(),
            Evidence::Scan(_) => panic!("scan evidence"),
        }
    }

    #[test]
    fn fit_basics() {
        let f = linear_fit(&[(1.0, 3.0), (2.0, 5.0), (4.0, 9.0)]).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-15 && (f.intercept - 1.0).abs() < 1e-14);
        assert!(f.rel_misfit < 1e-15);
        assert!(linear_fit(&[(1.0, 1.0)]).is_none());
        assert!(linear_fit(&[(1.0, 1.0), (1.0, 2.0)]).is_none());
    }

    #[test]
    fn audit_chi4_half() {
        let cfg = AuditConfig::default();
        let res = run_audit(&chi4(), Some(1), LPoint::real(0.5), &[100, 1000, 10_000], &cfg).unwrap();
        assert_eq!(res.len(), 8);
        let ids: Vec<_> = res.iter().map(|r| r.claim_id).collect();
        assert_eq!(ids, ClaimId::ALL.to_vec());

        let phase = find(&res, ClaimId::PhaseSumDivergesT0);
        assert_eq!(phase.verdict, Verdict::DivergesLinear);
        assert_eq!(
            points(phase, "cos_sum_t0"),
            vec![(100, real(100.0)), (1000, real(1000.0)), (10_000, real(10_000.0))]
        );

        let pos = find(&res, ClaimId::TransformedEqPositivity);
        assert_eq!(pos.verdict, Verdict::PositiveDefinite);
        let w = points(pos, "W_N");
        assert!(w.windows(2).all(|p| p[1].1.re > p[0].1.re));
        // direct summation oracle for W_100: Σ over odd n ≤ 100 of 1/n
        let oracle: f64 = (1..=100).filter(|n| n % 2 == 1).map(|n| 1.0 / n as f64).sum();
        assert!((w[0].1.re - oracle).abs() < 1e-13);

        for id in [ClaimId::Eq2Reconstruct, ClaimId::Eq3Reconstruct, ClaimId::Eq45Factorization] {
            assert_eq!(find(&res, id).verdict, Verdict::IdentityExact, "{id:?}");
        }
        assert_eq!(find(&res, ClaimId::PappusIdentity).verdict, Verdict::HoldsAtTruncation);
        assert_eq!(find(&res, ClaimId::Chi4PhaseSumDiverges).verdict, Verdict::DivergesLinear);
        assert_eq!(find(&res, ClaimId::NonvanishingScan).verdict, Verdict::NoZeroFound);
    }

    #[test]
    fn audit_zeta_two_truncations() {
        let zeta = enumerate_real_characters(1).remove(0);
        let res = run_audit(&zeta, Some(0), LPoint::new(2.0, 1.0), &[10, 100], &AuditConfig::default()).unwrap();
        let eq2 = find(&res, ClaimId::Eq2Reconstruct);
        assert_eq!(eq2.verdict, Verdict::IdentityExact);
        assert!(points(eq2, "rel_residual").iter().all(|(_, r)| r.re < 1e-12));
        // too few points for a growth verdict
        assert_eq!(find(&res, ClaimId::PhaseSumDivergesT0).verdict, Verdict::NotConfirmed);
        // evidence at the requested t is carried too
        assert_eq!(points(find(&res, ClaimId::PhaseSumDivergesT0), "sum_n^-2it").len(), 2);
    }

    #[test]
    fn chi4_slope_is_phi_over_q() {
        for q in [3u64, 4, 5, 8, 12] {
            for chi in enumerate_real_characters(q) {
                let res = run_audit(&chi, None, LPoint::real(0.5), &[100, 1000, 10_000], &AuditConfig::default()).unwrap();
                let r = find(&res, ClaimId::Chi4PhaseSumDiverges);
                assert_eq!(r.verdict, Verdict::DivergesLinear, "q = {q}: {}", r.note);
            }
        }
    }

    #[test]
    fn complex_character_claims() {
        let chi = enumerate_characters(5).remove(1); // order 4
        let res = run_audit(&chi, None, LPoint::new(0.5, 1.0), &[50, 500, 5000], &AuditConfig::default()).unwrap();
        assert_eq!(find(&res, ClaimId::NonvanishingScan).verdict, Verdict::NotApplicable);
        assert_eq!(find(&res, ClaimId::TransformedEqPositivity).verdict, Verdict::NotApplicable);
        // χ⁴ is principal for an order-4 character mod 5
        assert_eq!(find(&res, ClaimId::Chi4PhaseSumDiverges).verdict, Verdict::DivergesLinear);
        let chi = enumerate_characters(7).remove(1); // order 6
        let res = run_audit(&chi, None, LPoint::real(0.5), &[70, 700, 7000], &AuditConfig::default()).unwrap();
        assert_eq!(find(&res, ClaimId::Chi4PhaseSumDiverges).verdict, Verdict::NotConfirmed);
    }

    #[test]
    fn bad_truncations() {
        let cfg = AuditConfig::default();
        assert!(run_audit(&chi4(), None, LPoint::real(0.5), &[], &cfg).is_err());
        assert!(run_audit(&chi4(), None, LPoint::real(0.5), &[10, 10], &cfg).is_err());
        assert!(run_audit(&chi4(), None, LPoint::real(0.5), &[0, 10], &cfg).is_err());
    }

    #[test]
    fn zero_area_is_a_note() {
        // χ mod 3 at s = 0: every complete period sums to 0
        let chi3 = enumerate_real_characters(3).remove(1);
        let res = run_audit(&chi3, None, LPoint::real(0.0), &[2, 5, 8], &AuditConfig::default()).unwrap();
        let p = find(&res, ClaimId::PappusIdentity);
        assert_eq!(p.verdict, Verdict::NotConfirmed);
        assert!(p.note.contains("zero cross-section area"));
    }

    #[test]
    fn survey_small() {
        assert!(nonvanishing_survey(1, 0.01, 1e-9).unwrap().is_empty());
        let rows = nonvanishing_survey(4, 0.01, 1e-9).unwrap();
        assert_eq!(rows.iter().map(|r| (r.q, r.char_index)).collect::<Vec<_>>(), vec![(3, 1), (4, 1)]);
        assert!(rows.iter().all(|r| r.sign_changes == 0 && r.min_abs > 0.0));
        let csv = survey_csv(&rows);
        assert_eq!(csv.lines().count(), 3);
    }

    #[test]
    fn grid_shape() {
        assert_eq!(unit_interval_grid(0.01).unwrap().2, 99);
        assert_eq!(unit_interval_grid(0.25).unwrap(), (0.25, 0.75, 3));
        assert!(unit_interval_grid(0.5).is_err());
        assert!(unit_interval_grid(0.0).is_err());
    }

    #[test]
    fn json_schema_keys() {
        let res = run_audit(&chi4(), Some(1), LPoint::real(0.5), &[10, 20, 30], &AuditConfig::default()).unwrap();
        let v = serde_json::to_value(&res).unwrap();
        let first = &v[0];
        for key in ["claim_id", "inputs", "evidence", "verdict", "note"] {
            assert!(first.get(key).is_some(), "{key}");
        }
        assert_eq!(first["claim_id"], "EQ2_RECONSTRUCT");
        assert_eq!(v[3]["verdict"], "diverges-linear");
        let back: Vec<ClaimResult> = serde_json::from_value(v).unwrap();
        assert_eq!(back.len(), 8);
        assert_eq!(back[7].verdict, res[7].verdict);
    }
}
