//! Essential spectra, Fredholm indices and spectra of `T_{λ,φ}` for
//! `λ = e^{2πip/q}`.
//!
//! Every decision is made from the product symbol
//! `prod = φ_{λ̄+} = ∏_{j<q} φ_{λ̄,+}∘τ̄^j` and the point `μ^q`:
//!
//! * `T_{λ,φ} − μ` is Fredholm iff `μ^q` is off the curve `prod(T)`;
//! * then `ind(T_{λ,φ} − μ) = −wn(prod − μ^q)/q`;
//! * for analytic `φ`, `σ(T_{λ,φ}) = {μ : μ^q ∈ cl prod^(D)}`, which the
//!   argument principle turns into "on the curve or nonzero index".
//!
//! `μ` is raised to the `q`-th power once per query, so every answer is
//! invariant under `μ ↦ ημ` for `η^q = 1`.

mod jury;
mod region;
mod winding;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::symbol::{FourierSymbol, RationalRotation, SymbolCurve, SymbolError, CERTIFICATION_WIDTH};

pub use jury::{jury_determinant, jury_fredholm_index, jury_index, shifted_operator_coefficients};
pub use region::{region_grid, RegionBox, SpectralRaster, MAX_RESOLUTION};
pub use winding::{symbol_winding_number, winding_number, CurveSamples};

/// Default curve-proximity tolerance in the `w = μ^q` plane.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Proximity below which a Fredholm index is refused.
pub const FREDHOLM_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error("point lies on the curve (distance {distance:e}); winding number undefined")]
    OnCurve { distance: f64 },
    #[error("winding number {winding} is not divisible by q = {q}")]
    NonIntegralIndex { winding: i64, q: u64 },
    #[error("curve with {samples} samples turns by π/2 or more in one step")]
    Undersampled { samples: usize },
    #[error("argument sum {0} turns is not an integer")]
    WindingUnresolved(f64),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("Jury determinant needs {expected} coefficient symbols, got {got}")]
    JuryArity { expected: usize, got: usize },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("trichotomy violated: {0}")]
    TrichotomyViolation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpectralKind {
    /// `T − μ` invertible.
    Resolvent,
    /// `μ^q` on the symbol curve: `T − μ` is not Fredholm.
    EssentialSpectrum,
    /// Fredholm with nonzero index, hence in the spectrum.
    FredholmHole,
    /// `μ^q` within the caller's tolerance of the curve but not on it to
    /// certification precision.
    NearBoundary,
}

impl SpectralKind {
    pub fn in_spectrum(self) -> bool {
        matches!(self, Self::EssentialSpectrum | Self::FredholmHole)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralClassification {
    pub kind: SpectralKind,
    /// Present exactly for `FredholmHole`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub index: Option<i64>,
    /// Certified `min_θ |prod(e^{iθ}) − μ^q|`.
    pub distance: f64,
}

/// Outcome of [`ess_membership`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Membership {
    pub member: bool,
    pub distance: f64,
}

/// A product symbol together with its rotation and precomputed curve;
/// reuse it when asking many questions about the same operator.
#[derive(Debug, Clone)]
pub struct SpectralProblem {
    rotation: RationalRotation,
    curve: SymbolCurve,
}

impl SpectralProblem {
    /// `prod` must already be `product_symbol(twist(φ, r), r, q)`.
    pub fn new(prod: &FourierSymbol, rotation: &RationalRotation) -> Self {
        Self { rotation: rotation.clone(), curve: SymbolCurve::new(prod) }
    }

    /// Builds the product symbol from `φ`.
    pub fn from_symbol(phi: &FourierSymbol, rotation: &RationalRotation) -> Self {
        let prod = phi
            .twist(rotation)
            .product_symbol(rotation, rotation.q())
            .expect("q ≥ 1");
        Self::new(&prod, rotation)
    }

    pub fn product(&self) -> &FourierSymbol {
        self.curve.symbol()
    }

    pub fn rotation(&self) -> &RationalRotation {
        &self.rotation
    }

    pub fn curve(&self) -> &SymbolCurve {
        &self.curve
    }

    fn power(&self, mu: Complex64) -> Complex64 {
        mu.powu(self.rotation.q() as u32)
    }

    /// Certified distance from `μ^q` to the curve.
    pub fn distance(&self, mu: Complex64) -> f64 {
        self.curve.distance_bracket(self.power(mu)).upper
    }

    pub fn membership(&self, mu: Complex64, tol: f64) -> Membership {
        let distance = self.distance(mu);
        Membership { member: distance <= tol, distance }
    }

    fn index_at_power(&self, w: Complex64) -> Result<i64, SpectraError> {
        let wn = winding::certified_winding(&self.curve, w)?;
        let q = self.rotation.q() as i64;
        if wn % q != 0 {
            return Err(SpectraError::NonIntegralIndex { winding: wn, q: self.rotation.q() });
        }
        Ok(-wn / q)
    }

    /// `ind(T_{λ,φ} − μ) = −wn(prod − μ^q)/q`.
    pub fn fredholm_index(&self, mu: Complex64) -> Result<i64, SpectraError> {
        let w = self.power(mu);
        let distance = self.curve.distance_bracket(w).upper;
        if distance <= FREDHOLM_TOL {
            return Err(SpectraError::OnCurve { distance });
        }
        self.index_at_power(w)
    }

    /// Spectral classification of `μ`; requires an analytic product symbol.
    pub fn classify(&self, mu: Complex64, tol: f64) -> Result<SpectralClassification, SpectraError> {
        let prod = self.product();
        prod.check_analytic()?;
        let w = self.power(mu);
        let distance = self.curve.distance_bracket(w).upper;
        if distance <= tol.min(CERTIFICATION_WIDTH) {
            return Ok(SpectralClassification { kind: SpectralKind::EssentialSpectrum, index: None, distance });
        }
        if distance <= tol {
            return Ok(SpectralClassification { kind: SpectralKind::NearBoundary, index: None, distance });
        }
        let index = self.index_at_power(w)?;
        // Zeros of prod^ − w in the disc are counted by −q·index ≥ 0; a
        // positive index, or index 0 with prod^(0) = w, would be a Fredholm
        // operator of index 0 that is not invertible.
        if index > 0 {
            return Err(SpectraError::TrichotomyViolation(format!(
                "analytic symbol produced positive index {index} at μ = {mu}"
            )));
        }
        if index == 0 {
            if (prod.coeff(0) - w).norm() == 0.0 {
                return Err(SpectraError::TrichotomyViolation(format!(
                    "index 0 but prod^(0) = μ^q at μ = {mu}"
                )));
            }
            return Ok(SpectralClassification { kind: SpectralKind::Resolvent, index: None, distance });
        }
        Ok(SpectralClassification { kind: SpectralKind::FredholmHole, index: Some(index), distance })
    }

    /// `r_e(T_{λ,φ}) = ‖prod‖_∞^{1/q}`.
    pub fn ess_radius(&self) -> f64 {
        self.curve.sup_bracket().lower.powf(1.0 / self.rotation.q() as f64)
    }
}

/// `μ ∈ σ_e(T_{λ,φ})` iff `μ^q` lies on `prod(T)`, decided to absolute tolerance `tol`.
pub fn ess_membership(prod: &FourierSymbol, r: &RationalRotation, mu: Complex64, tol: f64) -> Membership {
    SpectralProblem::new(prod, r).membership(mu, tol)
}

pub fn fredholm_index(prod: &FourierSymbol, r: &RationalRotation, mu: Complex64) -> Result<i64, SpectraError> {
    SpectralProblem::new(prod, r).fredholm_index(mu)
}

pub fn classify(prod: &FourierSymbol, r: &RationalRotation, mu: Complex64, tol: f64) -> Result<SpectralClassification, SpectraError> {
    SpectralProblem::new(prod, r).classify(mu, tol)
}

pub fn ess_radius(prod: &FourierSymbol, r: &RationalRotation) -> f64 {
    SpectralProblem::new(prod, r).ess_radius()
}
