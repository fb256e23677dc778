//! Evaluation of `L(s, χ)`.
//!
//! Three routes are available:
//!
//! * [`partial_sum`]: the truncated Dirichlet series `Σ_{n≤N} χ(n) n^{-s}`;
//! * [`evaluate`]: the Hurwitz decomposition
//!   `L(s, χ) = q^{-s} Σ_{a=1}^{q} χ(a) ζ(s, a/q)`, with `ζ(s, x)` computed by
//!   Euler–Maclaurin summation and hence valid for `σ > −1`, `s ≠ 1`;
//! * at `s = 1` with non-principal `χ`, the series grouped into complete
//!   periods, whose tail is summed by Euler–Maclaurin as well.
//!
//! [`scan_zeros`] brackets sign changes of `L(σ, χ)` on the real segment for
//! real characters.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{euler_phi, DirichletCharacter};
use crate::complex::real_pow_neg;
use crate::error::{LabError, Result};

/// A point `s = σ + it`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LPoint {
    pub sigma: f64,
    pub t: f64,
}

impl LPoint {
    pub fn new(sigma: f64, t: f64) -> Self {
        LPoint { sigma, t }
    }

    pub fn real(sigma: f64) -> Self {
        LPoint { sigma, t: 0.0 }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.sigma, self.t)
    }

    pub fn is_finite(self) -> bool {
        self.sigma.is_finite() && self.t.is_finite()
    }
}

impl From<Complex64> for LPoint {
    fn from(z: Complex64) -> Self {
        LPoint::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    PartialSum,
    Hurwitz,
    Grouped,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LEvaluation {
    #[serde(with = "crate::complex::serde_complex")]
    pub value: Complex64,
    pub method: Method,
    /// Truncation `N` for partial sums, otherwise the Euler–Maclaurin shift.
    pub n_used: u64,
    pub err_estimate: f64,
}

/// Euler–Maclaurin settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurwitzConfig {
    /// Number of terms summed directly before the asymptotic tail.
    pub shift: u64,
    /// Target truncation error; the shift is doubled until it is met.
    pub tol: f64,
    /// Upper limit for the adaptive shift.
    pub max_shift: u64,
}

impl Default for HurwitzConfig {
    fn default() -> Self {
        HurwitzConfig {
            shift: 20,
            tol: 1e-10,
            max_shift: 1 << 16,
        }
    }
}

/// `B_2, B_4, …, B_14`. Corrections use the first six; `B_14` bounds the
/// remainder.
const BERNOULLI_EVEN: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
];
const CORRECTION_TERMS: usize = 6;

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// `Σ_{n=1}^{N} χ(n) n^{-s}`, summed in order `n = 1, …, N`.
pub fn partial_sum(chi: &DirichletCharacter, s: LPoint, n_max: u64) -> Complex64 {
    let s = s.to_complex();
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..=n_max {
        let c = chi.value_u64(n);
        if c.is_zero() {
            continue;
        }
        acc += term(c.to_complex(), n, s);
    }
    acc
}

/// One series term `χ(n) n^{-s}`; for real `χ(n) = ±1` the product is exact.
pub(crate) fn term(chi_n: Complex64, n: u64, s: Complex64) -> Complex64 {
    chi_n * real_pow_neg(n as f64, s)
}

/// The truncated series tagged with a tail bound: `N^{1−σ}/(σ−1)` when
/// `σ > 1`, the partial-summation bound `φ(q)|s| N^{-σ}/σ` for non-principal
/// `χ` and `σ > 0`, and `+∞` where the series does not converge.
pub fn evaluate_partial(chi: &DirichletCharacter, s: LPoint, n_max: u64) -> LEvaluation {
    let value = partial_sum(chi, s, n_max);
    let n = n_max as f64;
    let err_estimate = if s.sigma > 1.0 {
        n.powf(1.0 - s.sigma) / (s.sigma - 1.0)
    } else if !chi.is_principal() && s.sigma > 0.0 {
        euler_phi(chi.modulus()) as f64 * s.to_complex().norm() * n.powf(-s.sigma) / s.sigma
    } else {
        f64::INFINITY
    };
    LEvaluation {
        value,
        method: Method::PartialSum,
        n_used: n_max,
        err_estimate,
    }
}

/// `ζ(s, x) = Σ_{k≥0} (k + x)^{-s}` with the default configuration.
pub fn hurwitz_zeta(s: LPoint, x: f64) -> Result<LEvaluation> {
    hurwitz_zeta_with(s, x, &HurwitzConfig::default())
}

pub fn hurwitz_zeta_with(s: LPoint, x: f64, cfg: &HurwitzConfig) -> Result<LEvaluation> {
    if !s.is_finite() {
        return Err(LabError::Domain(format!("non-finite s = {s:?}")));
    }
    if s.sigma == 1.0 && s.t == 0.0 {
        return Err(LabError::Pole("ζ(s, x) has a pole at s = 1".into()));
    }
    if s.sigma <= -1.0 {
        return Err(LabError::Domain(format!(
            "Re(s) = {} is outside the supported range Re(s) > -1",
            s.sigma
        )));
    }
    if !(x > 0.0 && x <= 1.0) {
        return Err(LabError::Domain(format!("ζ(s, x) needs 0 < x ≤ 1, got {x}")));
    }
    let mut shift = cfg.shift.max(1);
    loop {
        let (value, trunc_err, rounding) = euler_maclaurin(s.to_complex(), x, shift);
        if trunc_err <= cfg.tol || shift >= cfg.max_shift {
            return Ok(LEvaluation {
                value,
                method: Method::Hurwitz,
                n_used: shift,
                err_estimate: trunc_err + rounding,
            });
        }
        shift = (shift * 2).min(cfg.max_shift);
    }
}

/// Returns `(value, first omitted Bernoulli term, rounding estimate)`.
fn euler_maclaurin(s: Complex64, x: f64, shift: u64) -> (Complex64, f64, f64) {
    let mut head = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    for k in 0..shift {
        let v = real_pow_neg(k as f64 + x, s);
        magnitude += v.norm();
        head += v;
    }
    let base = shift as f64 + x;
    let base_pow = real_pow_neg(base, s);
    let integral = base_pow * base / (s - 1.0);
    let mut tail = integral + 0.5 * base_pow;
    magnitude += integral.norm() + 0.5 * base_pow.norm();

    // (s)_{2j-1} · base^{-s-2j+1}
    let mut poch = s;
    let mut power = base_pow / base;
    let inv_sq = 1.0 / (base * base);
    let mut omitted = 0.0;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        let two_j = 2 * (j as u32 + 1);
        let piece = poch * power * (b / factorial(two_j));
        if j < CORRECTION_TERMS {
            tail += piece;
            magnitude += piece.norm();
        } else {
            omitted = piece.norm();
        }
        poch *= (s + f64::from(two_j - 1)) * (s + f64::from(two_j));
        power *= inv_sq;
    }
    let rounding = 4.0 * f64::EPSILON * magnitude;
    (head + tail, omitted, rounding)
}

/// `L(s, χ)` with the default Euler–Maclaurin configuration.
pub fn evaluate(chi: &DirichletCharacter, s: LPoint) -> Result<LEvaluation> {
    evaluate_with(chi, s, &HurwitzConfig::default())
}

pub fn evaluate_with(
    chi: &DirichletCharacter,
    s: LPoint,
    cfg: &HurwitzConfig,
) -> Result<LEvaluation> {
    if !s.is_finite() {
        return Err(LabError::Domain(format!("non-finite s = {s:?}")));
    }
    if s.sigma <= -1.0 {
        return Err(LabError::Domain(format!(
            "Re(s) = {} is outside the supported range Re(s) > -1",
            s.sigma
        )));
    }
    let at_one = s.sigma == 1.0 && s.t == 0.0;
    if at_one {
        if chi.is_principal() {
            return Err(LabError::Pole(format!(
                "L(s, χ₀) mod {} has a pole at s = 1",
                chi.modulus()
            )));
        }
        return Ok(grouped_at_one(chi, cfg));
    }
    let q = chi.modulus();
    let sc = s.to_complex();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut shift = 0;
    for a in 1..=q {
        let c = chi.value_u64(a);
        if c.is_zero() {
            continue;
        }
        let z = hurwitz_zeta_with(s, a as f64 / q as f64, cfg)?;
        acc += c.to_complex() * z.value;
        err += z.err_estimate;
        shift = shift.max(z.n_used);
    }
    let scale = real_pow_neg(q as f64, sc);
    Ok(LEvaluation {
        value: scale * acc,
        method: Method::Hurwitz,
        n_used: shift,
        err_estimate: scale.norm() * err,
    })
}

/// `L(1, χ)` for non-principal `χ`: complete periods `m < M` are summed
/// directly, the rest through the Euler–Maclaurin expansion of
/// `Σ_{m≥M} Σ_a χ(a)/(mq + a)`. The logarithmic terms stay finite because
/// `Σ_a χ(a) = 0`.
fn grouped_at_one(chi: &DirichletCharacter, cfg: &HurwitzConfig) -> LEvaluation {
    let q = chi.modulus();
    let qf = q as f64;
    let mut periods = cfg.shift.max(1);
    loop {
        let mut head = Complex64::new(0.0, 0.0);
        let mut magnitude = 0.0;
        for m in 0..periods {
            let mut block = Complex64::new(0.0, 0.0);
            for a in 1..=q {
                let c = chi.value_u64(a);
                if !c.is_zero() {
                    block += c.to_complex() / (m * q + a) as f64;
                }
            }
            magnitude += block.norm();
            head += block;
        }
        let mut tail = Complex64::new(0.0, 0.0);
        let mut omitted = 0.0;
        for a in 1..=q {
            let c = chi.value_u64(a);
            if c.is_zero() {
                continue;
            }
            let y = periods as f64 + a as f64 / qf;
            let mut piece = -y.ln() + 0.5 / y;
            let mut power = 1.0 / (y * y);
            for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
                let two_j = 2.0 * (j as f64 + 1.0);
                if j < CORRECTION_TERMS {
                    piece += b / two_j * power;
                } else {
                    omitted += (b / two_j * power).abs() / qf;
                }
                power /= y * y;
            }
            magnitude += piece.abs() / qf;
            tail += c.to_complex() * piece / qf;
        }
        if omitted <= cfg.tol || periods >= cfg.max_shift {
            return LEvaluation {
                value: head + tail,
                method: Method::Grouped,
                n_used: periods * q,
                err_estimate: omitted + 4.0 * f64::EPSILON * magnitude,
            };
        }
        periods = (periods * 2).min(cfg.max_shift);
    }
}

/// A sign change of `L(σ, χ)` between adjacent grid points, refined by
/// bisection. An exact zero on the grid gives `lo = hi = root`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroBracket {
    pub lo: f64,
    pub hi: f64,
    pub root: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanSample {
    pub sigma: f64,
    pub value: f64,
    pub err_estimate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    pub samples: Vec<ScanSample>,
    pub brackets: Vec<ZeroBracket>,
    pub min_abs: f64,
    pub argmin_sigma: f64,
}

impl ScanResult {
    pub fn sign_changes(&self) -> usize {
        self.brackets.len()
    }

    pub fn found_zero(&self) -> bool {
        !self.brackets.is_empty()
    }
}

/// Samples `L(σ, χ)` on `grid_points` equally spaced points of
/// `[sigma_lo, sigma_hi] ⊂ (0, 1)` and bisects every sign change down to
/// width `tol`.
pub fn scan_zeros(
    chi: &DirichletCharacter,
    sigma_lo: f64,
    sigma_hi: f64,
    grid_points: usize,
    tol: f64,
) -> Result<ScanResult> {
    scan_zeros_with(chi, sigma_lo, sigma_hi, grid_points, tol, &HurwitzConfig::default())
}

pub fn scan_zeros_with(
    chi: &DirichletCharacter,
    sigma_lo: f64,
    sigma_hi: f64,
    grid_points: usize,
    tol: f64,
    cfg: &HurwitzConfig,
) -> Result<ScanResult> {
    if grid_points < 2 {
        return Err(LabError::EmptyGrid(grid_points));
    }
    if !chi.is_real() {
        return Err(LabError::Domain(
            "zero scans on the real axis need a real character".into(),
        ));
    }
    if !(0.0 < sigma_lo && sigma_lo < sigma_hi && sigma_hi < 1.0) {
        return Err(LabError::Domain(format!(
            "scan interval must satisfy 0 < lo < hi < 1, got [{sigma_lo}, {sigma_hi}]"
        )));
    }
    scan_real_function(
        |sigma| {
            let e = evaluate_with(chi, LPoint::real(sigma), cfg)?;
            Ok((e.value.re, e.err_estimate))
        },
        sigma_lo,
        sigma_hi,
        grid_points,
        tol,
    )
}

/// Grid scan and bisection for any real function returning
/// `(value, err_estimate)`. Samples are evaluated in parallel but returned in
/// grid order.
pub fn scan_real_function<F>(
    f: F,
    lo: f64,
    hi: f64,
    grid_points: usize,
    tol: f64,
) -> Result<ScanResult>
where
    F: Fn(f64) -> Result<(f64, f64)> + Sync,
{
    if grid_points < 2 {
        return Err(LabError::EmptyGrid(grid_points));
    }
    if !(tol > 0.0) {
        return Err(LabError::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let step = (hi - lo) / (grid_points - 1) as f64;
    let samples = (0..grid_points)
        .into_par_iter()
        .map(|k| {
            let sigma = if k + 1 == grid_points { hi } else { lo + step * k as f64 };
            f(sigma).map(|(value, err_estimate)| ScanSample {
                sigma,
                value,
                err_estimate,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut brackets = Vec::new();
    for (k, sample) in samples.iter().enumerate() {
        if sample.value == 0.0 {
            brackets.push(ZeroBracket {
                lo: sample.sigma,
                hi: sample.sigma,
                root: Some(sample.sigma),
            });
            continue;
        }
        if let Some(next) = samples.get(k + 1) {
            if next.value != 0.0 && sample.value.signum() != next.value.signum() {
                let root = bisect(&f, sample.sigma, next.sigma, sample.value, tol);
                brackets.push(ZeroBracket {
                    lo: sample.sigma,
                    hi: next.sigma,
                    root,
                });
            }
        }
    }
    let (min_abs, argmin_sigma) = samples
        .iter()
        .map(|s| (s.value.abs(), s.sigma))
        .fold((f64::INFINITY, f64::NAN), |best, cur| if cur.0 < best.0 { cur } else { best });
    Ok(ScanResult {
        samples,
        brackets,
        min_abs,
        argmin_sigma,
    })
}

fn bisect<F>(f: &F, mut lo: f64, mut hi: f64, f_lo: f64, tol: f64) -> Option<f64>
where
    F: Fn(f64) -> Result<(f64, f64)>,
{
    let lo_sign = f_lo.signum();
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let (v, _) = f(mid).ok()?;
        if v == 0.0 {
            return Some(mid);
        }
        if v.signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// One CSV row per scan sample: `q, char_index, sigma, L_value, err_estimate`.
pub fn scan_csv<'a, I>(rows: I) -> String
where
    I: IntoIterator<Item = (u64, usize, &'a ScanResult)>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["q", "char_index", "sigma", "L_value", "err_estimate"])
        .expect("in-memory write");
    for (q, idx, scan) in rows {
        for s in &scan.samples {
            w.write_record([
                q.to_string(),
                idx.to_string(),
                s.sigma.to_string(),
                s.value.to_string(),
                s.err_estimate.to_string(),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
}
