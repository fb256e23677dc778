//! Bilinear geometry of finite complex vectors.
//!
//! The "dot product" here is `Σ u_k v_k` with no conjugation, so squared
//! lengths are complex and can vanish on non-zero vectors. This is not the
//! Hermitian inner product. Lengths are principal square roots of the
//! bilinear self-product. Under these conventions the cosine theorem
//! `|AB|² + |AC|² − |BC|² = 2 AB·AC` is a polynomial identity, and the
//! triangle area is `½ √(|AB|²|AC|² − (AB·AC)²)`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complex::{format_complex, parse_complex, rel_diff};
use crate::error::{LabError, Result};

pub use crate::complex::principal_sqrt;

/// A vector in `C^dim`, `dim ≥ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CVector(Vec<Complex64>);

impl CVector {
    pub fn new(components: Vec<Complex64>) -> Result<Self> {
        if components.is_empty() {
            return Err(LabError::InvalidArgument("vector needs at least one component".into()));
        }
        Ok(CVector(components))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Complex64] {
        &self.0
    }

    /// `other − self`, the vector from `self` to `other`.
    pub fn to(&self, other: &CVector) -> Result<CVector> {
        check_dims(self, other)?;
        Ok(CVector(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }
}

impl fmt::Display for CVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|z| format_complex(*z)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Parses `{1+i, 3}` or a labelled point `A{1+i, 3}`.
impl FromStr for CVector {
    type Err = LabError;

    fn from_str(text: &str) -> Result<Self> {
        let err = || LabError::Parse(format!("not a coordinate set: {text:?}"));
        let open = text.find('{').ok_or_else(err)?;
        let label = text[..open].trim();
        if !label.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(err());
        }
        let body = text[open + 1..].trim_end().strip_suffix('}').ok_or_else(err)?;
        let comps = body
            .split(',')
            .map(parse_complex)
            .collect::<Result<Vec<_>>>()?;
        CVector::new(comps)
    }
}

fn check_dims(u: &CVector, v: &CVector) -> Result<()> {
    if u.dim() != v.dim() {
        return Err(LabError::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    Ok(())
}

/// `Σ u_k v_k`, unconjugated.
pub fn bilinear_dot(u: &CVector, v: &CVector) -> Result<Complex64> {
    check_dims(u, v)?;
    Ok(u.0.iter().zip(&v.0).map(|(a, b)| a * b).sum())
}

pub fn formal_norm_sq(u: &CVector) -> Complex64 {
    u.0.iter().map(|a| a * a).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CosineCheck {
    #[serde(with = "crate::complex::serde_complex")]
    pub lhs_half: Complex64,
    #[serde(with = "crate::complex::serde_complex")]
    pub dot: Complex64,
    pub residual: f64,
}

/// `(|AB|² + |AC|² − |BC|²)/2` against `AB·AC`.
pub fn cosine_theorem_check(a: &CVector, b: &CVector, c: &CVector) -> Result<CosineCheck> {
    let (ab, ac, bc) = sides(a, b, c)?;
    let lhs_half = (formal_norm_sq(&ab) + formal_norm_sq(&ac) - formal_norm_sq(&bc)) / 2.0;
    let dot = bilinear_dot(&ab, &ac)?;
    Ok(CosineCheck {
        lhs_half,
        dot,
        residual: (lhs_half - dot).norm(),
    })
}

/// The same theorem written for the sides `AC`, `BC`:
/// `(|AC|² + |BC|² − |AB|²)/2 = AC·BC`.
pub fn cosine_theorem_check_ac_bc(a: &CVector, b: &CVector, c: &CVector) -> Result<CosineCheck> {
    let (ab, ac, bc) = sides(a, b, c)?;
    let lhs_half = (formal_norm_sq(&ac) + formal_norm_sq(&bc) - formal_norm_sq(&ab)) / 2.0;
    let dot = bilinear_dot(&ac, &bc)?;
    Ok(CosineCheck {
        lhs_half,
        dot,
        residual: (lhs_half - dot).norm(),
    })
}

fn sides(a: &CVector, b: &CVector, c: &CVector) -> Result<(CVector, CVector, CVector)> {
    check_dims(a, b)?;
    check_dims(a, c)?;
    Ok((a.to(b)?, a.to(c)?, b.to(c)?))
}

/// `½ √(|AB|²|AC|² − (AB·AC)²)`.
pub fn triangle_area(a: &CVector, b: &CVector, c: &CVector) -> Result<Complex64> {
    let (ab, ac, _) = sides(a, b, c)?;
    Ok(area_from(&ab, &ac))
}

/// The area from the `(AC, BC)` pair of sides.
pub fn triangle_area_ac_bc(a: &CVector, b: &CVector, c: &CVector) -> Result<Complex64> {
    let (_, ac, bc) = sides(a, b, c)?;
    Ok(area_from(&ac, &bc))
}

/// `|u|²|v|² − (u·v)²` in Lagrange's form `Σ_{j<k} (u_j v_k − u_k v_j)²`,
/// which does not subtract the two large products.
fn gram(u: &CVector, v: &CVector) -> Complex64 {
    let (u, v) = (&u.0, &v.0);
    let mut g = Complex64::new(0.0, 0.0);
    for j in 0..u.len() {
        for k in j + 1..u.len() {
            let m = u[j] * v[k] - u[k] * v[j];
            g += m * m;
        }
    }
    g
}

fn area_from(u: &CVector, v: &CVector) -> Complex64 {
    0.5 * principal_sqrt(gram(u, v))
}

/// The cosine-theorem and area bundle for a triangle `ABC`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangleReport {
    #[serde(with = "crate::complex::serde_complex")]
    pub ab_sq: Complex64,
    #[serde(with = "crate::complex::serde_complex")]
    pub ac_sq: Complex64,
    #[serde(with = "crate::complex::serde_complex")]
    pub bc_sq: Complex64,
    #[serde(with = "crate::complex::serde_complex")]
    pub dot_ab_ac: Complex64,
    #[serde(with = "crate::complex::serde_complex")]
    pub dot_ac_bc: Complex64,
    /// `None` when a side is isotropic.
    #[serde(with = "opt_complex")]
    pub cos_ab_ac: Option<Complex64>,
    #[serde(with = "opt_complex")]
    pub cos_ac_bc: Option<Complex64>,
    #[serde(with = "crate::complex::serde_complex")]
    pub area: Complex64,
}

mod opt_complex {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Repr {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(z: &Option<Complex64>, ser: S) -> Result<S::Ok, S::Error> {
        z.map(|z| Repr { re: z.re, im: z.im }).serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Complex64>, D::Error> {
        Ok(Option::<Repr>::deserialize(de)?.map(|r| Complex64::new(r.re, r.im)))
    }
}

pub fn triangle_report(a: &CVector, b: &CVector, c: &CVector) -> Result<TriangleReport> {
    let (ab, ac, bc) = sides(a, b, c)?;
    let dot_ab_ac = bilinear_dot(&ab, &ac)?;
    let dot_ac_bc = bilinear_dot(&ac, &bc)?;
    let cosine = |u: &CVector, v: &CVector, dot: Complex64| {
        let denom = principal_sqrt(formal_norm_sq(u)) * principal_sqrt(formal_norm_sq(v));
        (denom != Complex64::new(0.0, 0.0)).then(|| dot / denom)
    };
    Ok(TriangleReport {
        ab_sq: formal_norm_sq(&ab),
        ac_sq: formal_norm_sq(&ac),
        bc_sq: formal_norm_sq(&bc),
        dot_ab_ac,
        dot_ac_bc,
        cos_ab_ac: cosine(&ab, &ac, dot_ab_ac),
        cos_ac_bc: cosine(&ac, &bc, dot_ac_bc),
        area: area_from(&ab, &ac),
    })
}

/// The three worked triangles, as printed coordinate sets.
pub const APPENDIX_TRIANGLES: [[&str; 3]; 3] = [
    ["A{1+i, 3}", "B{-i, 2i}", "C{1, -i}"],
    ["A{1+i, 1-i, 2i}", "B{1-i, 1+i, -2i}", "C{1, 0, i}"],
    ["A{8i, 14, 8-i, 1}", "B{6, 15i, 17, -8}", "C{3-i, 10+7i, 11, 3i}"],
];

/// An expected printed value: a plain complex number, a vector, or
/// `coeff · √radicand`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum Expected {
    Value {
        re: f64,
        im: f64,
    },
    Vector {
        components: Vec<[f64; 2]>,
    },
    Radical {
        coeff: f64,
        re: f64,
        im: f64,
    },
}

impl Expected {
    fn value(re: f64, im: f64) -> Self {
        Expected::Value { re, im }
    }

    fn radical(coeff: f64, re: f64, im: f64) -> Self {
        Expected::Radical { coeff, re, im }
    }

    fn vector(components: &[(f64, f64)]) -> Self {
        Expected::Vector {
            components: components.iter().map(|&(re, im)| [re, im]).collect(),
        }
    }

    fn describe(&self) -> String {
        match self {
            Expected::Value { re, im } => format_complex(Complex64::new(*re, *im)),
            Expected::Vector { components } => {
                let parts: Vec<String> = components
                    .iter()
                    .map(|c| format_complex(Complex64::new(c[0], c[1])))
                    .collect();
                format!("{{{}}}", parts.join(", "))
            }
            Expected::Radical { coeff, re, im } => {
                format!("{coeff}*sqrt({})", format_complex(Complex64::new(*re, *im)))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpectedCheck {
    pub example: usize,
    pub quantity: String,
    pub expected: Expected,
}

fn check(example: usize, quantity: &str, expected: Expected) -> ExpectedCheck {
    ExpectedCheck {
        example,
        quantity: quantity.to_string(),
        expected,
    }
}

/// Every quantity printed for the three worked triangles.
pub fn appendix_expectations() -> Vec<ExpectedCheck> {
    use Expected as E;
    vec![
        check(1, "vec_ab", E::vector(&[(-1.0, -2.0), (-3.0, 2.0)])),
        check(1, "vec_ac", E::vector(&[(0.0, -1.0), (-3.0, -1.0)])),
        check(1, "vec_bc", E::vector(&[(1.0, 1.0), (0.0, -3.0)])),
        check(1, "ab_sq", E::value(2.0, -8.0)),
        check(1, "ac_sq", E::value(7.0, 6.0)),
        check(1, "bc_sq", E::value(-9.0, 2.0)),
        check(1, "cos_thm_ab_ac", E::value(9.0, -2.0)),
        check(1, "dot_ab_ac", E::value(9.0, -2.0)),
        check(1, "cos_thm_ac_bc", E::value(-2.0, 8.0)),
        check(1, "dot_ac_bc", E::value(-2.0, 8.0)),
        check(1, "norm_product_ab_ac", E::value(62.0, -44.0)),
        check(1, "norm_product_ac_bc", E::value(-75.0, -40.0)),
        check(1, "area_ab_ac", E::radical(0.5, -15.0, -8.0)),
        check(1, "area_ac_bc", E::radical(0.5, -15.0, -8.0)),
        check(2, "vec_ab", E::vector(&[(0.0, -2.0), (0.0, 2.0), (0.0, -4.0)])),
        check(2, "vec_ac", E::vector(&[(0.0, -1.0), (-1.0, 1.0), (0.0, -1.0)])),
        check(2, "vec_bc", E::vector(&[(0.0, 1.0), (-1.0, -1.0), (0.0, 3.0)])),
        check(2, "ab_sq", E::value(-24.0, 0.0)),
        check(2, "ac_sq", E::value(-2.0, -2.0)),
        check(2, "bc_sq", E::value(-10.0, 2.0)),
        check(2, "cos_thm_ab_ac", E::value(-8.0, -2.0)),
        check(2, "dot_ab_ac", E::value(-8.0, -2.0)),
        check(2, "cos_thm_ac_bc", E::value(6.0, 0.0)),
        check(2, "dot_ac_bc", E::value(6.0, 0.0)),
        check(2, "norm_product_ab_ac", E::value(48.0, 48.0)),
        check(2, "norm_product_ac_bc", E::value(24.0, 16.0)),
        check(2, "area_ab_ac", E::radical(1.0, -3.0, 4.0)),
        check(2, "area_ac_bc", E::radical(1.0, -3.0, 4.0)),
        check(3, "vec_ab", E::vector(&[(6.0, -8.0), (-14.0, 15.0), (9.0, 1.0), (-9.0, 0.0)])),
        check(3, "vec_ac", E::vector(&[(3.0, -9.0), (-4.0, 7.0), (3.0, 1.0), (-1.0, 3.0)])),
        check(3, "vec_bc", E::vector(&[(-3.0, -1.0), (10.0, -8.0), (-6.0, 0.0), (8.0, 3.0)])),
        check(3, "ab_sq", E::value(104.0, -498.0)),
        check(3, "ac_sq", E::value(-105.0, -110.0)),
        check(3, "bc_sq", E::value(135.0, -106.0)),
        check(3, "cos_thm_ab_ac", E::value(-68.0, -251.0)),
        check(3, "dot_ab_ac", E::value(-68.0, -251.0)),
        check(3, "cos_thm_ac_bc", E::value(-37.0, 141.0)),
        check(3, "dot_ac_bc", E::value(-37.0, 141.0)),
        check(3, "norm_product_ab_ac", E::value(-65700.0, 40850.0)),
        check(3, "norm_product_ac_bc", E::value(-25835.0, -3720.0)),
        check(3, "area_ab_ac", E::radical(0.5, -7323.0, 6714.0)),
        check(3, "area_ac_bc", E::radical(0.5, -7323.0, 6714.0)),
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub example: usize,
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    pub residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AppendixReport {
    pub checks: Vec<CheckOutcome>,
}

impl AppendixReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Relative tolerance for the appendix comparisons.
pub const APPENDIX_TOL: f64 = 1e-12;

enum Computed {
    Scalar(Complex64),
    Vector(CVector),
}

fn parse_triangle(example: usize) -> Result<[CVector; 3]> {
    let pts = APPENDIX_TRIANGLES
        .get(example.wrapping_sub(1))
        .ok_or_else(|| LabError::InvalidArgument(format!("no worked example {example}")))?;
    Ok([pts[0].parse()?, pts[1].parse()?, pts[2].parse()?])
}

fn compute_quantity(example: usize, quantity: &str) -> Result<Computed> {
    let [a, b, c] = parse_triangle(example)?;
    let (ab, ac, bc) = sides(&a, &b, &c)?;
    let scalar = |z| Ok(Computed::Scalar(z));
    match quantity {
        "vec_ab" => Ok(Computed::Vector(ab)),
        "vec_ac" => Ok(Computed::Vector(ac)),
        "vec_bc" => Ok(Computed::Vector(bc)),
        "ab_sq" => scalar(formal_norm_sq(&ab)),
        "ac_sq" => scalar(formal_norm_sq(&ac)),
        "bc_sq" => scalar(formal_norm_sq(&bc)),
        "cos_thm_ab_ac" => scalar(cosine_theorem_check(&a, &b, &c)?.lhs_half),
        "dot_ab_ac" => scalar(bilinear_dot(&ab, &ac)?),
        "cos_thm_ac_bc" => scalar(cosine_theorem_check_ac_bc(&a, &b, &c)?.lhs_half),
        "dot_ac_bc" => scalar(bilinear_dot(&ac, &bc)?),
        "norm_product_ab_ac" => scalar(formal_norm_sq(&ab) * formal_norm_sq(&ac)),
        "norm_product_ac_bc" => scalar(formal_norm_sq(&ac) * formal_norm_sq(&bc)),
        "area_ab_ac" => scalar(triangle_area(&a, &b, &c)?),
        "area_ac_bc" => scalar(triangle_area_ac_bc(&a, &b, &c)?),
        other => Err(LabError::InvalidArgument(format!("unknown quantity {other:?}"))),
    }
}

fn compare(expected: &Expected, computed: &Computed) -> (f64, String) {
    match (expected, computed) {
        (Expected::Value { re, im }, Computed::Scalar(z)) => {
            (rel_diff(*z, Complex64::new(*re, *im)), format_complex(*z))
        }
        (Expected::Radical { coeff, re, im }, Computed::Scalar(z)) => {
            let want = *coeff * principal_sqrt(Complex64::new(*re, *im));
            (rel_diff(*z, want), format_complex(*z))
        }
        (Expected::Vector { components }, Computed::Vector(v)) => {
            let text = v.to_string();
            if components.len() != v.dim() {
                return (f64::INFINITY, text);
            }
            let worst = components
                .iter()
                .zip(v.components())
                .map(|(w, z)| rel_diff(*z, Complex64::new(w[0], w[1])))
                .fold(0.0, f64::max);
            (worst, text)
        }
        (_, Computed::Scalar(z)) => (f64::INFINITY, format_complex(*z)),
        (_, Computed::Vector(v)) => (f64::INFINITY, v.to_string()),
    }
}

/// Recomputes every expected quantity and compares within [`APPENDIX_TOL`].
pub fn verify_appendix_against(expected: &[ExpectedCheck]) -> AppendixReport {
    let checks = expected
        .iter()
        .map(|e| match compute_quantity(e.example, &e.quantity) {
            Ok(computed) => {
                let (residual, text) = compare(&e.expected, &computed);
                CheckOutcome {
                    example: e.example,
                    quantity: e.quantity.clone(),
                    expected: e.expected.describe(),
                    computed: text,
                    residual,
                    pass: residual <= APPENDIX_TOL,
                }
            }
            Err(err) => CheckOutcome {
                example: e.example,
                quantity: e.quantity.clone(),
                expected: e.expected.describe(),
                computed: format!("error: {err}"),
                residual: f64::INFINITY,
                pass: false,
            },
        })
        .collect();
    AppendixReport { checks }
}

pub fn verify_appendix() -> AppendixReport {
    verify_appendix_against(&appendix_expectations())
}
