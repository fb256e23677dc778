//! Amplitude/phase factorisation of the truncated L-series.
//!
//! Each term `χ(n) n^{-s}` splits as `(χ(n) n^{-σ}) · n^{-it}` or as
//! `n^{-σ} · (χ(n) n^{-it})`. Collecting the factors into two length-`N`
//! vectors writes the partial sum as their bilinear (unconjugated) product.
//! The formal norm is the principal square root of the bilinear self-product;
//! it is complex in general and vanishes on isotropic vectors.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::characters::DirichletCharacter;
use crate::complex::{principal_sqrt, real_pow_neg, rel_diff};
use crate::error::{LabError, Result};
use crate::lseries::{partial_sum, LPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// `a_n = χ(n)/n^σ`, `p_n = n^{-it}`.
    AmplitudeChi,
    /// `a_n = 1/n^σ`, `p_n = χ(n) n^{-it}`.
    PhaseChi,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResolutionVectors {
    pub n: u64,
    pub variant: Variant,
    pub a_vec: Vec<Complex64>,
    pub p_vec: Vec<Complex64>,
    pub s: LPoint,
}

pub fn build_vectors(
    chi: &DirichletCharacter,
    s: LPoint,
    n_max: u64,
    variant: Variant,
) -> ResolutionVectors {
    let amplitude = LPoint::real(s.sigma).to_complex();
    let phase = Complex64::new(0.0, s.t);
    let (a_vec, p_vec) = (1..=n_max)
        .map(|n| {
            let c = chi.value_complex(n);
            let a = real_pow_neg(n as f64, amplitude);
            let p = real_pow_neg(n as f64, phase);
            match variant {
                Variant::AmplitudeChi => (c * a, p),
                Variant::PhaseChi => (a, c * p),
            }
        })
        .unzip();
    ResolutionVectors {
        n: n_max,
        variant,
        a_vec,
        p_vec,
        s,
    }
}

pub fn bilinear(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// `principal_sqrt(Σ v_k²)`.
pub fn formal_norm(v: &[Complex64]) -> Complex64 {
    principal_sqrt(bilinear(v, v))
}

/// `(Σ u_k v_k) / (‖u‖ ‖v‖)` with formal norms.
pub fn formal_cosine(u: &[Complex64], v: &[Complex64]) -> Result<Complex64> {
    if u.len() != v.len() {
        return Err(LabError::DimensionMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let nu = formal_norm(u);
    let nv = formal_norm(v);
    if nu == Complex64::new(0.0, 0.0) || nv == Complex64::new(0.0, 0.0) {
        return Err(LabError::IsotropicVector);
    }
    Ok(bilinear(u, v) / (nu * nv))
}

/// The factorisation `Σ u_k v_k = ‖u‖·‖v‖·cos(u, v)` for a pair of vectors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Factorization {
    #[serde(with = "crate::complex::serde_complex")]
    pub dot: Complex64,
    #[serde(with = "crate::complex::serde_complex")]
    pub norm_u: Complex64,
    #[serde(with = "crate::complex::serde_complex")]
    pub norm_v: Complex64,
    #[serde(with = "crate::complex::serde_complex")]
    pub cosine: Complex64,
    /// `|dot − norm_u·norm_v·cosine| / |dot|`.
    pub residual: f64,
}

pub fn factorize_product(u: &[Complex64], v: &[Complex64]) -> Result<Factorization> {
    let cosine = formal_cosine(u, v)?;
    let dot = bilinear(u, v);
    let norm_u = formal_norm(u);
    let norm_v = formal_norm(v);
    Ok(Factorization {
        dot,
        norm_u,
        norm_v,
        cosine,
        residual: rel_diff(norm_u * norm_v * cosine, dot),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Reconstruction {
    #[serde(with = "crate::complex::serde_complex")]
    pub lhs: Complex64,
    #[serde(with = "crate::complex::serde_complex")]
    pub rhs: Complex64,
    pub residual: f64,
}

impl Reconstruction {
    /// `residual / |rhs|`, or the absolute residual when `rhs = 0`.
    pub fn relative(&self) -> f64 {
        rel_diff(self.lhs, self.rhs)
    }
}

/// `Σ a_k p_k` against the partial sum of the series.
pub fn reconstruct_identity(
    chi: &DirichletCharacter,
    s: LPoint,
    n_max: u64,
    variant: Variant,
) -> Reconstruction {
    let vecs = build_vectors(chi, s, n_max, variant);
    let lhs = bilinear(&vecs.a_vec, &vecs.p_vec);
    let rhs = partial_sum(chi, s, n_max);
    Reconstruction {
        lhs,
        rhs,
        residual: (lhs - rhs).norm(),
    }
}

/// `(Σ_{n≤N} cos(t ln n), Σ_{n≤N} sin(t ln n))`. At `t = 0` the cosine sum
/// is the integer count `N`.
pub fn phase_series_sums(t: f64, n_max: u64) -> (f64, f64) {
    if t == 0.0 {
        return (n_max as f64, 0.0);
    }
    (1..=n_max).fold((0.0, 0.0), |(c, s), n| {
        let theta = t * (n as f64).ln();
        (c + theta.cos(), s + theta.sin())
    })
}
