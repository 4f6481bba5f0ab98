use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::SymbolError;

/// A root of unity `λ = exp(2πi·p/q)` with `p/q` in lowest terms and `0 ≤ p < q`.
///
/// Powers are looked up in a table of the `q` roots of unity, so `λ^q` is
/// exactly `1` and rotating a symbol `q` times reproduces it bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalRotation {
    p: u64,
    q: u64,
    roots: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct RotationJson {
    p: i64,
    q: i64,
}

impl RationalRotation {
    pub fn new(p: i64, q: i64) -> Result<Self, SymbolError> {
        if q < 1 {
            return Err(SymbolError::InvalidRotation(format!("q must be positive, got {q}")));
        }
        let p_red = p.rem_euclid(q);
        if gcd(p_red as u64, q as u64) != 1 {
            return Err(SymbolError::InvalidRotation(format!(
                "{p}/{q} is not in lowest terms"
            )));
        }
        let q = q as u64;
        let roots = (0..q)
            .map(|m| root_of_unity(m, q))
            .collect::<Vec<_>>();
        Ok(Self { p: p_red as u64, q, roots })
    }

    /// The trivial rotation `λ = 1`.
    pub fn identity() -> Self {
        Self::new(0, 1).expect("0/1 is a valid rotation")
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Multiplicative order of `λ`.
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn lambda(&self) -> Complex64 {
        self.roots[self.p as usize % self.roots.len()]
    }

    /// `λ^k` for any integer `k`, negative powers included.
    pub fn power(&self, k: i64) -> Complex64 {
        let q = self.q as i128;
        let m = (self.p as i128 * k as i128).rem_euclid(q);
        self.roots[m as usize]
    }

    /// `λ̄^k`.
    pub fn conj_power(&self, k: i64) -> Complex64 {
        self.power(-k)
    }

    /// The rotation by `λ̄`.
    pub fn conjugate(&self) -> Self {
        let p = (self.q - self.p) % self.q;
        Self::new(p as i64, self.q as i64).expect("conjugate of a reduced rotation is reduced")
    }
}

impl Serialize for RationalRotation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RotationJson { p: self.p as i64, q: self.q as i64 }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalRotation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RotationJson::deserialize(deserializer)?;
        RationalRotation::new(raw.p, raw.q).map_err(serde::de::Error::custom)
    }
}

fn root_of_unity(m: u64, q: u64) -> Complex64 {
    if m == 0 {
        return Complex64::new(1.0, 0.0);
    }
    // quarter turns exactly
    if 4 * m == q {
        return Complex64::new(0.0, 1.0);
    }
    if 2 * m == q {
        return Complex64::new(-1.0, 0.0);
    }
    if 4 * m == 3 * q {
        return Complex64::new(0.0, -1.0);
    }
    Complex64::from_polar(1.0, TAU * m as f64 / q as f64)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
