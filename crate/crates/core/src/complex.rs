//! Complex helpers shared by the numeric modules: real-base powers, the
//! principal square root, and the `a+bi` text form used by the CLI.

use num_complex::Complex64;

use crate::error::{LabError, Result};

/// `base^(-s)` for a positive real base, computed as
/// `base^(-σ) · (cos(t ln base) − i sin(t ln base))`.
///
/// With `t = 0` the imaginary part is exactly zero.
pub fn real_pow_neg(base: f64, s: Complex64) -> Complex64 {
    debug_assert!(base > 0.0);
    let ln = base.ln();
    let modulus = (-s.re * ln).exp();
    if s.im == 0.0 {
        return Complex64::new(modulus, 0.0);
    }
    let phase = s.im * ln;
    Complex64::new(modulus * phase.cos(), -modulus * phase.sin())
}

/// Square root with argument in `(−π/2, π/2]`.
///
/// The negative real axis maps to the positive imaginary axis regardless of
/// the sign of a zero imaginary part, so `principal_sqrt(-1) = i`.
pub fn principal_sqrt(z: Complex64) -> Complex64 {
    let (x, y) = (z.re, if z.im == 0.0 { 0.0 } else { z.im });
    if x == 0.0 && y == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let r = x.hypot(y);
    let w = ((r + x.abs()) / 2.0).sqrt();
    if x >= 0.0 {
        Complex64::new(w, y / (2.0 * w))
    } else {
        Complex64::new(y.abs() / (2.0 * w), w.copysign(y))
    }
}

/// `|a − b| / |b|`, falling back to the absolute difference when `b = 0`.
pub fn rel_diff(a: Complex64, b: Complex64) -> f64 {
    let d = (a - b).norm();
    let scale = b.norm();
    if scale > 0.0 {
        d / scale
    } else {
        d
    }
}

/// Formats as `a+bi` / `a-bi` using the shortest round-trip representation.
pub fn format_complex(z: Complex64) -> String {
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    if im.is_sign_negative() {
        format!("{}-{}i", z.re, -im)
    } else {
        format!("{}+{}i", z.re, im)
    }
}

/// Parses `σ`, `σ+ti`, `σ-ti`, `ti`, `i`, `-i`, with optional spaces.
///
/// Exponent notation (`1e-3+2.5e1i`) is accepted on both parts.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || LabError::Parse(format!("not a complex number: {text:?}"));
    if s.is_empty() {
        return Err(err());
    }
    if let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('j')) {
        // Find the sign that separates the real and imaginary parts: the last
        // '+' or '-' that is not the leading sign and not part of an exponent.
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx];
            if (c == b'+' || c == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
                break;
            }
        }
        let (re_part, im_part) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() {
            0.0
        } else {
            re_part.parse::<f64>().map_err(|_| err())?
        };
        let im = match im_part {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other.parse::<f64>().map_err(|_| err())?,
        };
        if !re.is_finite() || !im.is_finite() {
            return Err(err());
        }
        Ok(Complex64::new(re, im))
    } else {
        let re = s.parse::<f64>().map_err(|_| err())?;
        if !re.is_finite() {
            return Err(err());
        }
        Ok(Complex64::new(re, 0.0))
    }
}

/// Serde adapter writing a complex number as `{"re": .., "im": ..}`.
pub mod serde_complex {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Repr {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(z: &Complex64, ser: S) -> Result<S::Ok, S::Error> {
        Repr { re: z.re, im: z.im }.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Complex64, D::Error> {
        let r = Repr::deserialize(de)?;
        Ok(Complex64::new(r.re, r.im))
    }
}
