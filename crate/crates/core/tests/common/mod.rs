//! Oracles shared by the integration suites. Nothing here calls the crate's
//! L-function code; the values come from alternating-series acceleration or
//! from tables produced offline at 30 significant digits.

#![allow(dead_code)]

use lseries_lab::characters::{enumerate_real_characters, kronecker_symbol, DirichletCharacter};
use lseries_lab::Complex64;
use rand::Rng;

pub const CATALAN: f64 = 0.915_965_594_177_219_015_054_603_514_932_384_110_774;

/// Cohen–Villegas–Zagier acceleration of `Σ_{k≥0} (-1)^k a(k)` for a totally
/// monotone sequence. The error after `n` terms is about `5.83^{-n}`.
pub fn alternating_sum(a: impl Fn(u64) -> f64, n: u64) -> f64 {
    let mut d = (3.0 + 8f64.sqrt()).powi(n as i32);
    d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for k in 0..n {
        c = b - c;
        s += c * a(k);
        let (kf, nf) = (k as f64, n as f64);
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// Dirichlet beta `Σ (-1)^k (2k+1)^{-s}`.
pub fn beta(s: f64) -> f64 {
    alternating_sum(|k| (2.0 * k as f64 + 1.0).powf(-s), 40)
}

/// Riemann zeta through the alternating eta function.
pub fn zeta(s: f64) -> f64 {
    let eta = alternating_sum(|k| (k as f64 + 1.0).powf(-s), 40);
    eta / (1.0 - 2f64.powf(1.0 - s))
}

/// `(d, σ, L(σ, (d/·)))` for primitive quadratic characters.
pub const FROZEN_L: &[(i64, f64, f64)] = &[
    (-3, 0.1, 0.36455820271423834891),
    (-3, 0.5, 0.48086755769682862618),
    (-3, 0.9, 0.58183989575129935722),
    (-4, 0.1, 0.53800060231720056295),
    (-4, 0.5, 0.66769145718960917666),
    (-4, 0.9, 0.7653214567558726203),
    (5, 0.1, 0.047956396382367056988),
    (5, 0.5, 0.23175094750401575588),
    (5, 0.9, 0.39394096943112575346),
    (-7, 0.1, 1.0416198865600539837),
    (-7, 0.5, 1.1465856669037083337),
    (-7, 0.9, 1.1845548383881007724),
    (8, 0.1, 0.085490969722565788729),
    (8, 0.5, 0.37369171291254730738),
    (8, 0.9, 0.58191139060866981066),
    (-8, 0.1, 1.0318455658831426318),
    (-8, 0.5, 1.1004214095255483776),
    (-8, 0.9, 1.1124073035558195804),
    (12, 0.1, 0.12464370419197628374),
    (12, 0.5, 0.49855700245781543616),
    (12, 0.9, 0.72139056583568459069),
    (13, 0.1, 0.11228800359789959257),
    (13, 0.5, 0.43959297350900522525),
    (13, 0.9, 0.62940274025094054997),
    (-15, 0.1, 1.9869330581054167594),
    (-15, 0.5, 1.847029343067510823),
    (-15, 0.9, 1.6658345146062094947),
    (-20, 0.1, 1.9426536198703167772),
    (-20, 0.5, 1.6796711115441842578),
    (-20, 0.9, 1.451671991209767427),
    (21, 0.1, 0.14235046569359751339),
    (21, 0.5, 0.49726238048811166525),
    (21, 0.9, 0.65863345118957942499),
    (-23, 0.1, 2.9029185350146080649),
    (-23, 0.5, 2.4553625139742586221),
    (-23, 0.9, 2.0512983848886067987),
    (24, 0.1, 0.20748100175440970247),
    (24, 0.5, 0.7094580614652300427),
    (24, 0.9, 0.91005250481363550581),
];

/// `ζ(σ)` at `σ = 0.1, 0.5, 0.9`.
pub const FROZEN_ZETA: &[(f64, f64)] = &[
    (0.1, -0.60303751985624172166),
    (0.5, -1.4603545088095868129),
    (0.9, -9.4301140194022545911),
];

/// The enumerated character mod `|d|` that agrees with `n ↦ (d/n)`.
pub fn kronecker_character(d: i64) -> DirichletCharacter {
    let q = d.unsigned_abs();
    enumerate_real_characters(q)
        .into_iter()
        .find(|c| (0..q).all(|n| c.real_value(n) == Some(kronecker_symbol(d, n as i64))))
        .unwrap_or_else(|| panic!("no character mod {q} matches the Kronecker symbol for {d}"))
}

pub fn random_complex(rng: &mut impl Rng, scale: f64) -> Complex64 {
    Complex64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
}

pub fn random_point(rng: &mut impl Rng, dim: usize) -> Vec<Complex64> {
    (0..dim).map(|_| random_complex(rng, 10.0)).collect()
}

pub fn rel(a: Complex64, b: Complex64) -> f64 {
    let scale = b.norm();
    if scale == 0.0 {
        (a - b).norm()
    } else {
        (a - b).norm() / scale
    }
}
