//! Dirichlet characters with exact value tables.
//!
//! Characters mod `q` are built from a presentation of `(Z/qZ)*` as a direct
//! product of cyclic groups: a primitive root for every odd prime power, `3`
//! for `4`, and `{−1, 5}` for `2^k` with `k ≥ 3`, lifted to residues mod `q`
//! by the CRT. A character is then a choice of root of unity per generator.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};

/// An exact character value: zero or the root of unity `e^{2πi·exp/order}`.
///
/// Roots are kept in lowest terms, so `1` is always `Root { order: 1, exp: 0 }`
/// and `−1` is always `Root { order: 2, exp: 1 }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharValue {
    Zero,
    Root { order: u64, exp: u64 },
}

impl CharValue {
    pub const ONE: CharValue = CharValue::Root { order: 1, exp: 0 };
    pub const MINUS_ONE: CharValue = CharValue::Root { order: 2, exp: 1 };

    pub fn root(order: u64, exp: u64) -> Self {
        assert!(order > 0, "root of unity needs a positive order");
        let exp = exp % order;
        let g = gcd(exp, order);
        CharValue::Root {
            order: order / g,
            exp: exp / g,
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, CharValue::Zero)
    }

    /// The value as an integer when it lies in `{−1, 0, 1}`.
    pub fn as_real(self) -> Option<i8> {
        match self {
            CharValue::Zero => Some(0),
            CharValue::Root { order: 1, .. } => Some(1),
            CharValue::Root { order: 2, .. } => Some(-1),
            CharValue::Root { .. } => None,
        }
    }

    pub fn to_complex(self) -> Complex64 {
        match self.as_real() {
            Some(v) => Complex64::new(f64::from(v), 0.0),
            None => {
                let CharValue::Root { order, exp } = self else {
                    unreachable!()
                };
                let angle = std::f64::consts::TAU * exp as f64 / order as f64;
                Complex64::new(angle.cos(), angle.sin())
            }
        }
    }

    pub fn mul(self, other: CharValue) -> CharValue {
        match (self, other) {
            (CharValue::Root { order: d1, exp: k1 }, CharValue::Root { order: d2, exp: k2 }) => {
                let d = lcm(d1, d2);
                CharValue::root(d, k1 * (d / d1) + k2 * (d / d2))
            }
            _ => CharValue::Zero,
        }
    }

    pub fn pow(self, e: u32) -> CharValue {
        match self {
            CharValue::Zero if e == 0 => CharValue::ONE,
            CharValue::Zero => CharValue::Zero,
            CharValue::Root { order, exp } => {
                CharValue::root(order, ((exp as u128 * e as u128) % order as u128) as u64)
            }
        }
    }
}

/// One cyclic factor of `(Z/qZ)*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitGenerator {
    pub generator: u64,
    pub order: u64,
}

/// A Dirichlet character mod `q`, stored as its exact value table on
/// `0..q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    values: Vec<CharValue>,
    is_principal: bool,
    is_real: bool,
    conductor: u64,
}

impl DirichletCharacter {
    fn from_table(modulus: u64, values: Vec<CharValue>) -> Self {
        let is_principal = values
            .iter()
            .all(|v| v.is_zero() || *v == CharValue::ONE);
        let is_real = values.iter().all(|v| v.as_real().is_some());
        let conductor = conductor_of(modulus, &values);
        DirichletCharacter {
            modulus,
            values,
            is_principal,
            is_real,
            conductor,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[CharValue] {
        &self.values
    }

    pub fn is_principal(&self) -> bool {
        self.is_principal
    }

    pub fn is_real(&self) -> bool {
        self.is_real
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.modulus
    }

    /// `χ(n)` for any integer `n`, read periodically.
    pub fn value(&self, n: i64) -> CharValue {
        self.values[n.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn value_u64(&self, n: u64) -> CharValue {
        self.values[(n % self.modulus) as usize]
    }

    /// `χ(n)` as `−1/0/1`; `None` for a non-real character.
    pub fn real_value(&self, n: u64) -> Option<i8> {
        self.value_u64(n).as_real()
    }

    /// `χ(n)` as a floating complex number. Real characters give exact `±1`.
    pub fn value_complex(&self, n: u64) -> Complex64 {
        self.value_u64(n).to_complex()
    }

    /// The real value table, or `None` for non-real characters.
    pub fn real_table(&self) -> Option<Vec<i8>> {
        self.values.iter().map(|v| v.as_real()).collect()
    }

    pub fn to_json(&self) -> CharacterJson {
        let values = self
            .values
            .iter()
            .map(|v| match (self.is_real, *v) {
                (_, CharValue::Zero) => JsonCharValue::Int(0),
                (true, v) => JsonCharValue::Int(v.as_real().expect("real character")),
                (false, CharValue::Root { order, exp }) => JsonCharValue::Root([order, exp]),
            })
            .collect();
        CharacterJson {
            q: self.modulus,
            real: self.is_real,
            principal: self.is_principal,
            conductor: self.conductor,
            values,
        }
    }
}

/// `χ(n)` for any integer `n`, reduced mod `q`.
pub fn char_value(chi: &DirichletCharacter, n: i64) -> CharValue {
    chi.value(n)
}

/// Conductor of a character.
pub fn conductor(chi: &DirichletCharacter) -> u64 {
    chi.conductor
}

/// JSON form: `{"q", "real", "principal", "conductor", "values"}` where each
/// value is an integer in `{−1, 0, 1}` or an `[order, exp]` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterJson {
    pub q: u64,
    pub real: bool,
    pub principal: bool,
    pub conductor: u64,
    pub values: Vec<JsonCharValue>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonCharValue {
    Int(i8),
    Root([u64; 2]),
}

impl TryFrom<CharacterJson> for DirichletCharacter {
    type Error = LabError;

    /// Rebuilds a character from its table, checking that the table really is
    /// a Dirichlet character and that the flags agree with it.
    fn try_from(json: CharacterJson) -> Result<Self> {
        let q = json.q;
        if q == 0 || json.values.len() as u64 != q {
            return Err(LabError::InvalidArgument(format!(
                "character table for q = {q} has {} entries",
                json.values.len()
            )));
        }
        let values = json
            .values
            .iter()
            .map(|v| match *v {
                JsonCharValue::Int(0) => Ok(CharValue::Zero),
                JsonCharValue::Int(1) => Ok(CharValue::ONE),
                JsonCharValue::Int(-1) => Ok(CharValue::MINUS_ONE),
                JsonCharValue::Int(other) => Err(LabError::InvalidArgument(format!(
                    "character value {other} is not in {{-1, 0, 1}}"
                ))),
                JsonCharValue::Root([d, k]) if d > 0 => Ok(CharValue::root(d, k)),
                JsonCharValue::Root(_) => Err(LabError::InvalidArgument(
                    "root of unity with order 0".into(),
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        for n in 0..q {
            let coprime = gcd(n, q) == 1;
            if coprime == values[n as usize].is_zero() {
                return Err(LabError::InvalidArgument(format!(
                    "χ({n}) must be zero exactly when gcd({n}, {q}) > 1"
                )));
            }
        }
        for m in 0..q {
            for n in m..q {
                let prod = ((m as u128 * n as u128) % q as u128) as usize;
                if values[prod] != values[m as usize].mul(values[n as usize]) {
                    return Err(LabError::InvalidArgument(format!(
                        "table is not multiplicative at ({m}, {n})"
                    )));
                }
            }
        }
        let chi = DirichletCharacter::from_table(q, values);
        if chi.is_real != json.real
            || chi.is_principal != json.principal
            || chi.conductor != json.conductor
        {
            return Err(LabError::InvalidArgument(
                "character flags disagree with the value table".into(),
            ));
        }
        Ok(chi)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m as i128) as u64
}

/// Prime factorisation as `(p, e)` pairs in increasing `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

fn multiplicative_order(a: u64, m: u64) -> u64 {
    let mut x = a % m;
    let mut k = 1;
    while x != 1 % m {
        x = mul_mod(x, a, m);
        k += 1;
    }
    k
}

/// Cyclic decomposition of `(Z/qZ)*`.
///
/// Factors follow the prime powers of `q` in increasing prime order. The
/// `2^k` part, `k ≥ 3`, contributes `−1` then `5`. Each local generator is
/// lifted to the unique residue mod `q` that is `≡ 1` modulo the other prime
/// powers. The product of the orders is `φ(q)`; `q = 1` and `q = 2` give the
/// empty list.
pub fn unit_group_structure(q: u64) -> Vec<UnitGenerator> {
    assert!(q >= 1, "modulus must be positive");
    let mut gens = Vec::new();
    for (p, e) in factorize(q) {
        let pe = p.pow(e);
        let rest = q / pe;
        let lift = |g: u64| -> u64 {
            if rest == 1 {
                return g % pe;
            }
            // x = 1 + rest·k with rest·k ≡ g − 1 (mod pe)
            let k = mul_mod((g + pe - 1) % pe, mod_inverse(rest % pe, pe), pe);
            (1 + rest as u128 * k as u128) as u64 % q
        };
        if p == 2 {
            match e {
                1 => {}
                2 => gens.push(UnitGenerator {
                    generator: lift(3),
                    order: 2,
                }),
                _ => {
                    gens.push(UnitGenerator {
                        generator: lift(pe - 1),
                        order: 2,
                    });
                    gens.push(UnitGenerator {
                        generator: lift(5),
                        order: pe / 4,
                    });
                }
            }
        } else {
            let phi = pe / p * (p - 1);
            let g = (2..pe)
                .find(|&g| gcd(g, p) == 1 && multiplicative_order(g, pe) == phi)
                .expect("odd prime powers have primitive roots");
            gens.push(UnitGenerator {
                generator: lift(g),
                order: phi,
            });
        }
    }
    gens
}

/// Discrete-log table: for each residue, its exponent vector with respect to
/// the generators (None for non-units).
fn discrete_logs(q: u64, gens: &[UnitGenerator]) -> Vec<Option<Vec<u64>>> {
    let mut table: Vec<Option<Vec<u64>>> = vec![None; q as usize];
    let mut idx = vec![0u64; gens.len()];
    loop {
        let residue = gens
            .iter()
            .zip(&idx)
            .fold(1 % q, |acc, (g, &e)| mul_mod(acc, pow_mod(g.generator, e, q), q));
        debug_assert!(table[residue as usize].is_none());
        table[residue as usize] = Some(idx.clone());
        // odometer increment
        let mut pos = gens.len();
        loop {
            if pos == 0 {
                return table;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < gens[pos].order {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn build_character(
    q: u64,
    gens: &[UnitGenerator],
    logs: &[Option<Vec<u64>>],
    choice: &[u64],
) -> DirichletCharacter {
    let exponent = gens.iter().fold(1, |acc, g| lcm(acc, g.order));
    let values = logs
        .iter()
        .map(|log| match log {
            None => CharValue::Zero,
            Some(log) => {
                let k = gens.iter().zip(log).zip(choice).fold(0u128, |acc, ((g, &e), &c)| {
                    (acc + e as u128 * c as u128 * (exponent / g.order) as u128) % exponent as u128
                });
                CharValue::root(exponent, k as u64)
            }
        })
        .collect();
    DirichletCharacter::from_table(q, values)
}

fn choices(orders: &[Vec<u64>]) -> Vec<Vec<u64>> {
    orders.iter().fold(vec![Vec::new()], |acc, opts| {
        acc.into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect()
    })
}

/// All `φ(q)` characters mod `q`, ordered lexicographically by the exponent
/// assigned to each generator of [`unit_group_structure`]. The principal
/// character comes first.
pub fn enumerate_characters(q: u64) -> Vec<DirichletCharacter> {
    assert!(q >= 1, "modulus must be positive");
    let gens = unit_group_structure(q);
    let logs = discrete_logs(q, &gens);
    let opts: Vec<Vec<u64>> = gens.iter().map(|g| (0..g.order).collect()).collect();
    choices(&opts)
        .iter()
        .map(|c| build_character(q, &gens, &logs, c))
        .collect()
}

/// The characters mod `q` with values in `{−1, 0, 1}`: principal first, the
/// rest in lexicographic order of their value tables.
pub fn enumerate_real_characters(q: u64) -> Vec<DirichletCharacter> {
    assert!(q >= 1, "modulus must be positive");
    let gens = unit_group_structure(q);
    let logs = discrete_logs(q, &gens);
    let opts: Vec<Vec<u64>> = gens
        .iter()
        .map(|g| {
            if g.order % 2 == 0 {
                vec![0, g.order / 2]
            } else {
                vec![0]
            }
        })
        .collect();
    let mut chars: Vec<DirichletCharacter> = choices(&opts)
        .iter()
        .map(|c| build_character(q, &gens, &logs, c))
        .collect();
    chars.sort_by_key(|chi| {
        (
            !chi.is_principal,
            chi.real_table().expect("real characters only"),
        )
    });
    chars
}

fn conductor_of(q: u64, values: &[CharValue]) -> u64 {
    let mut divisors: Vec<u64> = (1..=q).filter(|d| q % d == 0).collect();
    divisors.sort_unstable();
    for f in divisors {
        let induced = (1..q)
            .step_by(f as usize)
            .chain(std::iter::once(1 % q))
            .filter(|&n| gcd(n, q) == 1)
            .all(|n| values[n as usize] == CharValue::ONE);
        if induced {
            return f;
        }
    }
    q
}

/// The Kronecker symbol `(d / n)`.
///
/// Jacobi symbol for odd positive `n`, extended by `(d/2)` (zero for even
/// `d`, otherwise `+1` when `d ≡ ±1 mod 8` and `−1` when `d ≡ ±3 mod 8`), by
/// `(d/−1) = sign(d)`, and `(d/0) = [|d| = 1]`.
pub fn kronecker_symbol(d: i64, n: i64) -> i8 {
    if n == 0 {
        return i8::from(d.unsigned_abs() == 1);
    }
    let mut acc: i8 = 1;
    let mut m = n.unsigned_abs();
    if n < 0 && d < 0 {
        acc = -acc;
    }
    let tz = m.trailing_zeros();
    if tz > 0 {
        if d % 2 == 0 {
            return 0;
        }
        if tz % 2 == 1 && matches!(d.rem_euclid(8), 3 | 5) {
            acc = -acc;
        }
        m >>= tz;
    }
    // Jacobi (d / m) for odd m
    let mut a = d.rem_euclid(m as i64) as u64;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && matches!(m % 8, 3 | 5) {
            acc = -acc;
        }
        if a % 4 == 3 && m % 4 == 3 {
            acc = -acc;
        }
        (a, m) = (m % a, a);
    }
    if m == 1 {
        acc
    } else {
        0
    }
}

/// Fundamental discriminants `d` with `|d| ≤ bound` and `d ≠ 1`.
pub fn fundamental_discriminants(bound: u64) -> Vec<i64> {
    let squarefree = |n: u64| factorize(n).iter().all(|&(_, e)| e == 1);
    let mut out = Vec::new();
    for abs in 2..=bound as i64 {
        for d in [-abs, abs] {
            let r = d.rem_euclid(4);
            let fundamental = (r == 1 && squarefree(abs as u64))
                || (r == 0 && {
                    let m = d / 4;
                    matches!(m.rem_euclid(4), 2 | 3) && squarefree(m.unsigned_abs())
                });
            if fundamental {
                out.push(d);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_group_order(q: u64) -> u64 {
        (0..q).filter(|&n| gcd(n, q) == 1).count() as u64
    }

    #[test]
    fn unit_group_small_moduli() {
        assert!(unit_group_structure(1).is_empty());
        assert!(unit_group_structure(2).is_empty());
        // smallest primitive root mod 7 by brute force: 3
        let brute = (2..7)
            .find(|&g| (1..6).all(|k| pow_mod(g, k, 7) != 1))
            .unwrap();
        assert_eq!(
            unit_group_structure(7),
            vec![UnitGenerator {
                generator: brute,
                order: 6
            }]
        );
        let eight = unit_group_structure(8);
        assert_eq!(eight.len(), 2);
        assert!(eight.iter().all(|g| g.order == 2));
        assert_eq!(eight[0].generator, 7);
        assert_eq!(eight[1].generator, 5);
    }

    #[test]
    fn unit_group_orders_multiply_to_phi() {
        for q in 1..=300 {
            let gens = unit_group_structure(q);
            let prod: u64 = gens.iter().map(|g| g.order).product();
            assert_eq!(prod, brute_group_order(q).max(1), "q = {q}");
            for g in &gens {
                assert_eq!(multiplicative_order(g.generator, q), g.order, "q = {q}");
            }
            // the generated residues are all distinct units
            let logs = discrete_logs(q, &gens);
            let hits = logs.iter().filter(|l| l.is_some()).count() as u64;
            assert_eq!(hits, brute_group_order(q).max(1));
        }
    }

    #[test]
    fn real_characters_mod_1_and_4() {
        let one = enumerate_real_characters(1);
        assert_eq!(one.len(), 1);
        assert!(one[0].is_principal());
        assert_eq!(char_value(&one[0], 12345), CharValue::ONE);

        let four = enumerate_real_characters(4);
        assert_eq!(four.len(), 2);
        assert!(four[0].is_principal());
        assert_eq!(four[1].value(3), CharValue::MINUS_ONE);
        assert_eq!(four[1].value(6), CharValue::Zero);
        assert_eq!(four[1].value(-1), CharValue::MINUS_ONE);
    }

    fn brute_real_homomorphisms(q: u64) -> usize {
        // every map from units to ±1, filtered by multiplicativity
        let units: Vec<u64> = (0..q).filter(|&n| gcd(n, q) == 1).collect();
        let k = units.len();
        (0u64..(1 << k))
            .filter(|mask| {
                let val = |n: u64| -> i8 {
                    let i = units.iter().position(|&u| u == n).unwrap();
                    if mask >> i & 1 == 1 {
                        -1
                    } else {
                        1
                    }
                };
                units.iter().all(|&a| {
                    units
                        .iter()
                        .all(|&b| val(mul_mod(a, b, q)) == val(a) * val(b))
                })
            })
            .count()
    }

    #[test]
    fn real_character_counts_match_brute_force() {
        assert_eq!(brute_real_homomorphisms(8), 4);
        assert_eq!(enumerate_real_characters(8).len(), 4);
        for q in 1..=16 {
            assert_eq!(
                enumerate_real_characters(q).len(),
                brute_real_homomorphisms(q),
                "q = {q}"
            );
        }
        // a finite abelian group and its dual have equally many elements of order ≤ 2
        for q in 1..=300 {
            let involutions = (1..=q.max(1))
                .filter(|&n| gcd(n, q) == 1 && mul_mod(n, n, q) == 1 % q)
                .count();
            assert_eq!(enumerate_real_characters(q).len(), involutions, "q = {q}");
        }
    }

    #[test]
    fn real_enumeration_order() {
        for q in 1..=60 {
            let chars = enumerate_real_characters(q);
            assert!(chars[0].is_principal());
            let tables: Vec<_> = chars[1..].iter().map(|c| c.real_table().unwrap()).collect();
            assert!(tables.windows(2).all(|w| w[0] < w[1]), "q = {q}");
        }
    }

    #[test]
    fn conductors() {
        for q in 1..=30 {
            assert_eq!(enumerate_characters(q)[0].conductor(), 1);
        }
        let four = enumerate_real_characters(4);
        assert_eq!(four[1].conductor(), 4);
        // the mod-8 character with the same values as χ₄ on odd residues
        let chi4 = &four[1];
        let induced = enumerate_real_characters(8)
            .into_iter()
            .find(|c| (0..8).all(|n| c.value(n) == if n % 2 == 0 { CharValue::Zero } else { chi4.value(n) }))
            .unwrap();
        assert_eq!(induced.conductor(), 4);
        assert!(!induced.is_primitive());
    }

    #[test]
    fn conductor_brute_force() {
        // f is a valid inducing modulus iff χ is constant on classes mod f
        // among units; the conductor is the smallest such divisor.
        for q in 1..=48 {
            for chi in enumerate_characters(q) {
                let brute = (1..=q)
                    .filter(|f| q % f == 0)
                    .find(|&f| {
                        (0..q).filter(|&a| gcd(a, q) == 1).all(|a| {
                            (0..q)
                                .filter(|&b| gcd(b, q) == 1 && b % f == a % f)
                                .all(|b| chi.value_u64(a) == chi.value_u64(b))
                        })
                    })
                    .unwrap();
                assert_eq!(chi.conductor(), brute, "q = {q}");
            }
        }
    }

    #[test]
    fn kronecker_examples() {
        for n in -20..20 {
            assert_eq!(kronecker_symbol(1, n), 1);
        }
        // Euler's criterion: (−1)^((3−1)/2) = −1
        assert_eq!(kronecker_symbol(-4, 3), -1);
        let squares: Vec<i64> = (1..11).map(|x| x * x % 11).collect();
        assert!(squares.contains(&5));
        assert_eq!(kronecker_symbol(5, 11), 1);
        assert_eq!(kronecker_symbol(5, 2), -1);
        assert_eq!(kronecker_symbol(8, 3), -1);
        assert_eq!(kronecker_symbol(-3, -1), -1);
        assert_eq!(kronecker_symbol(12, 4), 0);
    }

    #[test]
    fn kronecker_matches_euler_criterion_for_odd_primes() {
        for p in [3i64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            for a in -40i64..40 {
                let euler = pow_mod(a.rem_euclid(p) as u64, ((p - 1) / 2) as u64, p as u64);
                let want = match euler {
                    0 => 0,
                    1 => 1,
                    _ => -1,
                };
                assert_eq!(kronecker_symbol(a, p), want, "({a}/{p})");
            }
        }
    }

    #[test]
    fn kronecker_is_multiplicative_in_n() {
        for d in [-8i64, -7, -4, -3, 5, 8, 12, 13] {
            for m in -15..15 {
                for n in -15..15 {
                    assert_eq!(
                        kronecker_symbol(d, m * n),
                        kronecker_symbol(d, m) * kronecker_symbol(d, n),
                        "d = {d}, m = {m}, n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let chi = &enumerate_real_characters(4)[1];
        let text = serde_json::to_string(&chi.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"q":4,"real":true,"principal":false,"conductor":4,"values":[0,1,0,-1]}"#
        );
        let cplx = &enumerate_characters(5)[1];
        let json = serde_json::to_value(cplx.to_json()).unwrap();
        assert_eq!(json["values"][2], serde_json::json!([4, 1]));
    }

    #[test]
    fn json_rejects_broken_tables() {
        let mut j = enumerate_real_characters(5)[1].to_json();
        j.values[2] = JsonCharValue::Int(1);
        assert!(DirichletCharacter::try_from(j).is_err());
        let mut j = enumerate_real_characters(5)[1].to_json();
        j.conductor = 1;
        assert!(DirichletCharacter::try_from(j).is_err());
    }

    #[test]
    fn fundamental_discriminant_list() {
        let small: Vec<i64> = fundamental_discriminants(13);
        assert_eq!(small, vec![-3, -4, 5, -7, -8, 8, -11, 12, 13]);
    }
}
