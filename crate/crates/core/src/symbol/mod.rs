//! Symbols of λ-Toeplitz operators as trigonometric polynomials.
//!
//! A [`FourierSymbol`] stores the finitely many Fourier coefficients
//! `a_n` of `φ(e^{iθ}) = Σ a_n e^{inθ}`. Everything the spectral code
//! needs is closed under this representation: the analytic projection,
//! the λ-twist `φ_{λ̄,+}`, composition with the rotation `τ̄`, products,
//! and the Taylor polynomial of an analytic symbol.

mod curve;
mod rotation;

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use curve::{Bracket, SymbolCurve};
pub use rotation::RationalRotation;

/// Coefficients below this modulus are dropped after every operation.
pub const CLEANUP_THRESHOLD: f64 = 1e-15;
/// Coefficient-wise tolerance for symbol equality.
pub const COMPARE_TOL: f64 = 1e-12;
/// Target width of certified sup-norm and distance brackets.
pub const CERTIFICATION_WIDTH: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SymbolError {
    #[error("coefficient at index {0} is not finite")]
    NonFinite(i64),
    #[error("invalid rotation: {0}")]
    InvalidRotation(String),
    #[error("symbol is not analytic: coefficient at index {index} has modulus {modulus:e}")]
    NotAnalytic { index: i64, modulus: f64 },
    #[error("point {0} is outside the open unit disc")]
    OutOfDomain(Complex64),
    #[error("product length must be positive")]
    EmptyProduct,
}

/// A trigonometric polynomial `Σ_{n=lo}^{hi} a_n e^{inθ}`.
///
/// Stored densely from the lowest nonzero index. The representation is
/// normalized: entries with modulus below [`CLEANUP_THRESHOLD`] are zeroed
/// and the table is trimmed so both ends are nonzero. The zero symbol has an
/// empty table.
#[derive(Clone, PartialEq)]
pub struct FourierSymbol {
    lo: i64,
    coeffs: Vec<Complex64>,
}

impl FourierSymbol {
    /// Builds a symbol from `(n, a_n)` pairs. Repeated indices are summed.
    pub fn new<I>(pairs: I) -> Result<Self, SymbolError>
    where
        I: IntoIterator<Item = (i64, Complex64)>,
    {
        let pairs: Vec<_> = pairs.into_iter().collect();
        if let Some(&(n, _)) = pairs.iter().find(|(_, a)| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(SymbolError::NonFinite(n));
        }
        let Some(lo) = pairs.iter().map(|p| p.0).min() else {
            return Ok(Self::zero());
        };
        let hi = pairs.iter().map(|p| p.0).max().unwrap();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (hi - lo + 1) as usize];
        for (n, a) in pairs {
            coeffs[(n - lo) as usize] += a;
        }
        Ok(Self::from_dense(lo, coeffs))
    }

    /// Convenience constructor from `(n, re, im)` triples, the JSON layout.
    pub fn from_triples(triples: &[(i64, f64, f64)]) -> Result<Self, SymbolError> {
        Self::new(triples.iter().map(|&(n, re, im)| (n, Complex64::new(re, im))))
    }

    pub fn zero() -> Self {
        Self { lo: 0, coeffs: Vec::new() }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::from_dense(0, vec![c])
    }

    /// `c·e^{inθ}`.
    pub fn monomial(n: i64, c: Complex64) -> Self {
        Self::from_dense(n, vec![c])
    }

    /// Builds from a dense table starting at index `lo`, then normalizes.
    pub(crate) fn from_dense(lo: i64, mut coeffs: Vec<Complex64>) -> Self {
        for a in coeffs.iter_mut() {
            if a.norm() < CLEANUP_THRESHOLD {
                *a = Complex64::new(0.0, 0.0);
            }
        }
        let is_zero = |a: &Complex64| a.re == 0.0 && a.im == 0.0;
        let Some(first) = coeffs.iter().position(|a| !is_zero(a)) else {
            return Self::zero();
        };
        let last = coeffs.iter().rposition(|a| !is_zero(a)).unwrap();
        coeffs.truncate(last + 1);
        coeffs.drain(..first);
        Self { lo: lo + first as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest index with a nonzero coefficient.
    pub fn min_index(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lo)
    }

    /// Highest index with a nonzero coefficient.
    pub fn max_index(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    /// The degree bound `M = max |n|` over the support.
    pub fn degree(&self) -> u64 {
        match (self.min_index(), self.max_index()) {
            (Some(lo), Some(hi)) => lo.unsigned_abs().max(hi.unsigned_abs()),
            _ => 0,
        }
    }

    pub fn coeff(&self, n: i64) -> Complex64 {
        let k = n - self.lo;
        if k < 0 || k as usize >= self.coeffs.len() {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[k as usize]
        }
    }

    /// Nonzero coefficients in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| a.re != 0.0 || a.im != 0.0)
            .map(move |(k, &a)| (self.lo + k as i64, a))
    }

    /// `Σ |a_n|`, an upper bound for the sup norm.
    pub fn abs_sum(&self) -> f64 {
        self.coeffs.iter().map(|a| a.norm()).sum()
    }

    /// `Σ |n|·|a_n|`, a Lipschitz constant of `θ ↦ φ(e^{iθ})`.
    pub fn lipschitz_bound(&self) -> f64 {
        self.iter().map(|(n, a)| n.unsigned_abs() as f64 * a.norm()).sum()
    }

    /// `φ(e^{iθ})`, summed over the finite support.
    pub fn eval(&self, theta: f64) -> Complex64 {
        self.eval_with_derivative(theta).0
    }

    /// `φ(e^{iθ})` and `dφ/dθ` at the same point.
    pub fn eval_with_derivative(&self, theta: f64) -> (Complex64, Complex64) {
        if self.coeffs.is_empty() {
            return (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        }
        let z = Complex64::from_polar(1.0, theta);
        let mut value = Complex64::new(0.0, 0.0);
        let mut weighted = Complex64::new(0.0, 0.0);
        for (k, &a) in self.coeffs.iter().enumerate().rev() {
            let n = (self.lo + k as i64) as f64;
            value = value * z + a;
            weighted = weighted * z + a * n;
        }
        let shift = Complex64::from_polar(1.0, self.lo as f64 * theta);
        (value * shift, Complex64::new(0.0, 1.0) * weighted * shift)
    }

    /// Projection `P` onto the nonnegative modes.
    pub fn analytic_part(&self) -> Self {
        Self::new(self.iter().filter(|&(n, _)| n >= 0)).expect("finite input")
    }

    /// `(I − P)φ`, the strictly negative modes.
    pub fn coanalytic_part(&self) -> Self {
        Self::new(self.iter().filter(|&(n, _)| n < 0)).expect("finite input")
    }

    /// Errors with the offending index if any negative mode exceeds [`COMPARE_TOL`].
    pub fn check_analytic(&self) -> Result<(), SymbolError> {
        match self.iter().find(|&(n, a)| n < 0 && a.norm() > COMPARE_TOL) {
            Some((index, a)) => Err(SymbolError::NotAnalytic { index, modulus: a.norm() }),
            None => Ok(()),
        }
    }

    pub fn is_analytic(&self) -> bool {
        self.check_analytic().is_ok()
    }

    /// The twisted symbol `φ_{λ̄,+}`: `b_n = λ̄^n a_n` for `n ≥ 0`, `b_n = a_n` for `n < 0`.
    ///
    /// With this symbol `T_{λ,φ} = U_λ T_{φ_{λ̄,+}}`.
    pub fn twist(&self, r: &RationalRotation) -> Self {
        self.map_coeffs(|n, a| if n >= 0 { a * r.conj_power(n) } else { a })
    }

    /// `φ∘τ̄^j` with `τ̄(e^{iθ}) = λ̄e^{iθ}`: the coefficient at `n` picks up `λ̄^{jn}`.
    pub fn rotate(&self, r: &RationalRotation, j: u64) -> Self {
        let j = (j % r.q()) as i64;
        self.map_coeffs(|n, a| a * r.conj_power(j * n))
    }

    fn map_coeffs(&self, f: impl Fn(i64, Complex64) -> Complex64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &a)| f(self.lo + k as i64, a))
            .collect();
        Self::from_dense(self.lo, coeffs)
    }

    /// Pointwise product, i.e. convolution of coefficient tables.
    pub fn multiply(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.re == 0.0 && a.im == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_dense(self.lo + other.lo, out)
    }

    /// `φ^{(k)} = ∏_{j=0}^{k−1} φ∘τ̄^j`. With `k = q` this is the product
    /// symbol governing `T_{λ,φ}^q` modulo compacts, once applied to the
    /// twisted symbol.
    pub fn product_symbol(&self, r: &RationalRotation, k: u64) -> Result<Self, SymbolError> {
        if k == 0 {
            return Err(SymbolError::EmptyProduct);
        }
        let mut acc = self.clone();
        for j in 1..k {
            acc = acc.multiply(&self.rotate(r, j));
        }
        Ok(acc)
    }

    /// Gelfand (Cauchy) transform of an analytic symbol at `|z| < 1`, which
    /// for a trigonometric polynomial is its Taylor polynomial `Σ a_n z^n`.
    pub fn gelfand_eval(&self, z: Complex64) -> Result<Complex64, SymbolError> {
        self.check_analytic()?;
        if !(z.norm() < 1.0) {
            return Err(SymbolError::OutOfDomain(z));
        }
        Ok(self.taylor_eval(z))
    }

    /// `Σ_{n≥0} a_n z^n` for any `z`; negative modes are ignored.
    pub(crate) fn taylor_eval(&self, z: Complex64) -> Complex64 {
        let Some(hi) = self.max_index() else {
            return Complex64::new(0.0, 0.0);
        };
        let mut acc = Complex64::new(0.0, 0.0);
        for n in (0..=hi.max(0)).rev() {
            acc = acc * z + self.coeff(n);
        }
        acc
    }

    /// `‖φ‖_∞` with certified absolute error below [`CERTIFICATION_WIDTH`].
    pub fn sup_norm(&self) -> f64 {
        self.sup_norm_bracket().lower
    }

    /// Certified enclosure of `‖φ‖_∞`; `lower` is attained at a sample point.
    pub fn sup_norm_bracket(&self) -> Bracket {
        SymbolCurve::new(self).sup_bracket()
    }

    /// `φ̄`: the symbol of `θ ↦ conj(φ(e^{iθ}))`.
    pub fn reflect_conj(&self) -> Self {
        Self::new(self.iter().map(|(n, a)| (-n, a.conj()))).expect("finite input")
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map_coeffs(|_, a| a * c)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.iter().chain(other.iter())).expect("finite input")
    }

    /// `φ − c`.
    pub fn sub_constant(&self, c: Complex64) -> Self {
        Self::new(self.iter().chain(std::iter::once((0, -c)))).expect("finite input")
    }

    /// Largest coefficient-wise difference.
    pub fn max_coeff_diff(&self, other: &Self) -> f64 {
        let lo = self.min_index().unwrap_or(0).min(other.min_index().unwrap_or(0));
        let hi = self.max_index().unwrap_or(0).max(other.max_index().unwrap_or(0));
        (lo..=hi)
            .map(|n| (self.coeff(n) - other.coeff(n)).norm())
            .fold(0.0, f64::max)
    }

    /// Coefficient-wise equality within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_coeff_diff(other) <= tol
    }
}

impl Mul for &FourierSymbol {
    type Output = FourierSymbol;

    fn mul(self, rhs: &FourierSymbol) -> FourierSymbol {
        self.multiply(rhs)
    }
}

impl fmt::Debug for FourierSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct SymbolJson {
    coeffs: Vec<(i64, f64, f64)>,
}

impl Serialize for FourierSymbol {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SymbolJson { coeffs: self.iter().map(|(n, a)| (n, a.re, a.im)).collect() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FourierSymbol {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SymbolJson::deserialize(deserializer)?;
        FourierSymbol::from_triples(&raw.coeffs).map_err(serde::de::Error::custom)
    }
}
