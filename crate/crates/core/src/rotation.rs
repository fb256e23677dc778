//! Rectangle step profiles and their solids of revolution.
//!
//! Term `n` of the series is a rectangle of width 1 on `[n−1, n]` with
//! height `f_n = χ(n) n^{-s}`. Rotating the profile about the `z` axis gives
//! a stack of cylinders with volumes `π f_n²`. For the finite profile the
//! centroid relation `V = 2π η S` holds exactly, with `S = Σ f_n` and
//! `η = (½ Σ f_n²) / S`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::characters::DirichletCharacter;
use crate::complex::{real_pow_neg, rel_diff};
use crate::error::{LabError, Result};
use crate::lseries::{term, LPoint};

/// Piecewise-constant upper boundary `f(z) = f_n` on `(n−1, n]`, lower
/// boundary `g = 0`, over `[0, N]`.
#[derive(Debug, Clone, PartialEq)]
pub struct StepProfile {
    pub n: u64,
    pub heights: Vec<Complex64>,
    pub s: LPoint,
    pub q: u64,
}

impl StepProfile {
    pub fn new(chi: &DirichletCharacter, s: LPoint, n_max: u64) -> Self {
        let heights = (1..=n_max).map(|n| rect_area(chi, s, n)).collect();
        StepProfile {
            n: n_max,
            heights,
            s,
            q: chi.modulus(),
        }
    }

    /// A profile from arbitrary heights (`q = 1`, `s = 0`).
    pub fn from_heights(heights: Vec<Complex64>) -> Self {
        StepProfile {
            n: heights.len() as u64,
            heights,
            s: LPoint::real(0.0),
            q: 1,
        }
    }

    pub fn lower(&self) -> f64 {
        0.0
    }

    pub fn a(&self) -> f64 {
        0.0
    }

    pub fn b(&self) -> f64 {
        self.n as f64
    }

    /// `f(z)`; zero outside `(0, N]`.
    pub fn eval(&self, z: f64) -> Complex64 {
        if z <= 0.0 || z > self.b() {
            return Complex64::new(0.0, 0.0);
        }
        let idx = (z.ceil() as usize).saturating_sub(1);
        self.heights[idx.min(self.heights.len() - 1)]
    }

    /// Cross-section area `Σ f_n`.
    pub fn area(&self) -> Complex64 {
        self.heights.iter().sum()
    }

    /// Rotation volume `π Σ f_n²`.
    pub fn volume(&self) -> Complex64 {
        PI * self.heights.iter().map(|h| h * h).sum::<Complex64>()
    }
}

/// `χ(n) n^{-s}`, the area of the width-1 rectangle.
pub fn rect_area(chi: &DirichletCharacter, s: LPoint, n: u64) -> Complex64 {
    let c = chi.value_u64(n);
    if c.is_zero() {
        return Complex64::new(0.0, 0.0);
    }
    term(c.to_complex(), n, s.to_complex())
}

/// `π χ(n)² n^{-2s}`.
pub fn cylinder_volume(chi: &DirichletCharacter, s: LPoint, n: u64) -> Complex64 {
    let c = chi.value_complex(n);
    PI * c * c * real_pow_neg(n as f64, 2.0 * s.to_complex())
}

/// Centroid `(ξ, η)` of the profile from the closed forms
/// `ξ = Σ (n − ½) f_n / Σ f_n`, `η = ½ Σ f_n² / Σ f_n`.
pub fn barycenter(profile: &StepProfile) -> Result<(Complex64, Complex64)> {
    let area = profile.area();
    if area == Complex64::new(0.0, 0.0) {
        return Err(LabError::ZeroArea);
    }
    let moment_z: Complex64 = profile
        .heights
        .iter()
        .enumerate()
        .map(|(k, h)| (k as f64 + 0.5) * h)
        .sum();
    let moment_f: Complex64 = 0.5 * profile.heights.iter().map(|h| h * h).sum::<Complex64>();
    Ok((moment_z / area, moment_f / area))
}

// 3-point Gauss–Legendre on [-1, 1]
const GL_NODES: [f64; 3] = [-0.774_596_669_241_483_4, 0.0, 0.774_596_669_241_483_4];
const GL_WEIGHTS: [f64; 3] = [5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0];

/// Composite Gauss–Legendre over unit panels of `[a, b]` (integer ends).
fn integrate<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64) -> Complex64 {
    let panels = (b - a).round() as u64;
    let mut acc = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let mid = a + p as f64 + 0.5;
        let panel: Complex64 = GL_NODES
            .iter()
            .zip(GL_WEIGHTS)
            .map(|(x, w)| w * f(mid + 0.5 * x))
            .sum();
        acc += 0.5 * panel;
    }
    acc
}

/// Centroid by numerical quadrature of the lamina integrals
/// `∫ z (f − g) dz`, `½ ∫ (f² − g²) dz` and `∫ (f − g) dz` over `[a, b]`.
pub fn barycenter_by_quadrature(profile: &StepProfile) -> Result<(Complex64, Complex64)> {
    let (a, b) = (profile.a(), profile.b());
    let g = profile.lower();
    let area = integrate(|z| profile.eval(z) - g, a, b);
    if area == Complex64::new(0.0, 0.0) {
        return Err(LabError::ZeroArea);
    }
    let moment_z = integrate(|z| z * (profile.eval(z) - g), a, b);
    let moment_f = 0.5 * integrate(|z| profile.eval(z).powi(2) - g * g, a, b);
    Ok((moment_z / area, moment_f / area))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PappusReport {
    pub q: u64,
    pub n: u64,
    pub s: LPoint,
    #[serde(rename = "S", with = "crate::complex::serde_complex")]
    pub area: Complex64,
    #[serde(rename = "V", with = "crate::complex::serde_complex")]
    pub volume: Complex64,
    #[serde(with = "crate::complex::serde_complex")]
    pub xi: Complex64,
    #[serde(with = "crate::complex::serde_complex")]
    pub eta: Complex64,
    /// `|V − 2π η S|`.
    pub residual: f64,
    /// `residual / |V|`.
    pub rel_residual: f64,
}

pub fn pappus_check_profile(profile: &StepProfile) -> Result<PappusReport> {
    let (xi, eta) = barycenter(profile)?;
    let area = profile.area();
    let volume = profile.volume();
    let rebuilt = 2.0 * PI * eta * area;
    Ok(PappusReport {
        q: profile.q,
        n: profile.n,
        s: profile.s,
        area,
        volume,
        xi,
        eta,
        residual: (volume - rebuilt).norm(),
        rel_residual: rel_diff(rebuilt, volume),
    })
}

pub fn pappus_check(chi: &DirichletCharacter, s: LPoint, n_max: u64) -> Result<PappusReport> {
    pappus_check_profile(&StepProfile::new(chi, s, n_max))
}

/// `(S_N, W_N) = (Σ χ(n) n^{-s}, Σ χ(n)² n^{-2s})` over `n ≤ N`.
pub fn transformed_equation_residual(
    chi: &DirichletCharacter,
    s: LPoint,
    n_max: u64,
) -> (Complex64, Complex64) {
    let two_s = 2.0 * s.to_complex();
    (1..=n_max).fold(
        (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)),
        |(sn, wn), n| {
            let c = chi.value_u64(n);
            if c.is_zero() {
                return (sn, wn);
            }
            let cz = c.to_complex();
            (sn + term(cz, n, s.to_complex()), wn + term(cz * cz, n, two_s))
        },
    )
}

pub fn pappus_csv(reports: &[PappusReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "q", "N", "sigma", "t", "S_re", "S_im", "V_re", "V_im", "xi_re", "xi_im", "eta_re",
        "eta_im", "residual", "rel_residual",
    ])
    .expect("in-memory write");
    for r in reports {
        w.write_record(
            [
                r.q.to_string(),
                r.n.to_string(),
                r.s.sigma.to_string(),
                r.s.t.to_string(),
            ]
            .into_iter()
            .chain(
                [r.area, r.volume, r.xi, r.eta]
                    .iter()
                    .flat_map(|z| [z.re.to_string(), z.im.to_string()]),
            )
            .chain([r.residual.to_string(), r.rel_residual.to_string()]),
        )
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
}
