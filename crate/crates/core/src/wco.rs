//! Weighted composition operators `W_{φ,ρ} f = φ·(f∘ρ)` with `ρ` a
//! finite-order elliptic automorphism of the disc.
//!
//! If `ζ(0) = z0` is the interior fixed point of `ρ`, then `ζ^{-1}∘ρ∘ζ` is
//! the rotation `z ↦ λz` with `λ = ρ'(z0)`, and `C_ζ W_{φ,ρ} C_ζ^{-1}` is
//! `W_{φ∘ζ, λz}`, which for analytic weights is the λ-Toeplitz operator
//! `T_{λ, φ∘ζ}`. The spectrum is then read off the product symbol as in
//! [`crate::spectra`].

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::spectra::{SpectraError, SpectralClassification, SpectralProblem};
use crate::symbol::{FourierSymbol, RationalRotation, SymbolError};

/// Default bound on the order search.
pub const DEFAULT_MAX_ORDER: u64 = 64;
const INTERIOR_MARGIN: f64 = 1e-10;
const ORDER_TOL: f64 = 1e-9;
const UNIMODULAR_TOL: f64 = 1e-10;
const SNAP_TOL: f64 = 1e-9;
const TAIL_TOL: f64 = 1e-8;
const START_DEGREE: usize = 64;
const MAX_DEGREE: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WcoError {
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("automorphism has no fixed point inside the disc")]
    NotElliptic,
    #[error("multiplier λ = {lambda} has no order up to {max_order}")]
    NotFiniteOrder { lambda: Complex64, max_order: u64 },
    #[error("multiplier modulus {0} is not 1")]
    NotUnimodular(f64),
    #[error("arg(λ) is {error:e} away from 2πp/q")]
    SnapFailed { error: f64 },
    #[error("pulled-back symbol needs more than {degree} modes (residual {residual:e})")]
    TailTooLarge { degree: usize, residual: f64 },
    #[error("conjugator sends 0 to {got}, expected the fixed point {expected}")]
    ConjugatorMismatch { expected: Complex64, got: Complex64 },
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

/// `ρ(z) = e^{iα}(w − z)/(1 − w̄z)` with `α ∈ [0, 2π)` and `|w| < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusAutomorphism {
    alpha: f64,
    w: Complex64,
}

#[derive(Serialize, Deserialize)]
struct AutomorphismJson {
    alpha: f64,
    w: [f64; 2],
}

impl MoebiusAutomorphism {
    pub fn new(alpha: f64, w: Complex64) -> Result<Self, WcoError> {
        if !alpha.is_finite() || !w.re.is_finite() || !w.im.is_finite() {
            return Err(WcoError::InvalidAutomorphism("non-finite parameter".into()));
        }
        if !(w.norm() < 1.0) {
            return Err(WcoError::InvalidAutomorphism(format!("|w| = {} must be < 1", w.norm())));
        }
        Ok(Self { alpha: alpha.rem_euclid(TAU), w })
    }

    pub fn identity() -> Self {
        Self { alpha: PI, w: Complex64::new(0.0, 0.0) }
    }

    /// `z ↦ λz` for unimodular `λ`.
    pub fn rotation(lambda: Complex64) -> Result<Self, WcoError> {
        Self::new((-lambda).arg(), Complex64::new(0.0, 0.0))
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn w(&self) -> Complex64 {
        self.w
    }

    fn phase(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.alpha)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.phase() * (self.w - z) / (1.0 - self.w.conj() * z)
    }

    /// `ρ'(z) = e^{iα}(|w|² − 1)/(1 − w̄z)²`.
    pub fn derivative(&self, z: Complex64) -> Complex64 {
        let d = 1.0 - self.w.conj() * z;
        self.phase() * (self.w.norm_sqr() - 1.0) / (d * d)
    }

    /// Coefficients `[a, b, c, d]` of `z ↦ (az + b)/(cz + d)`.
    fn matrix(&self) -> [Complex64; 4] {
        let e = self.phase();
        [-e, e * self.w, -self.w.conj(), Complex64::new(1.0, 0.0)]
    }

    fn from_matrix([a, _b, c, d]: [Complex64; 4]) -> Result<Self, WcoError> {
        let a = a / d;
        let c = c / d;
        let e = -a / a.norm();
        Self::new(e.arg(), -c.conj())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self, WcoError> {
        let [a1, b1, c1, d1] = self.matrix();
        let [a2, b2, c2, d2] = other.matrix();
        Self::from_matrix([a1 * a2 + b1 * c2, a1 * b2 + b1 * d2, c1 * a2 + d1 * c2, c1 * b2 + d1 * d2])
    }

    pub fn inverse(&self) -> Result<Self, WcoError> {
        let [a, b, c, d] = self.matrix();
        Self::from_matrix([d, -b, -c, a])
    }

    fn is_identity(&self) -> bool {
        self.w.norm() < 1e-15 && (self.phase() + 1.0).norm() < 1e-15
    }
}

impl Serialize for MoebiusAutomorphism {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        AutomorphismJson { alpha: self.alpha, w: [self.w.re, self.w.im] }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MoebiusAutomorphism {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = AutomorphismJson::deserialize(deserializer)?;
        MoebiusAutomorphism::new(raw.alpha, Complex64::new(raw.w[0], raw.w[1])).map_err(serde::de::Error::custom)
    }
}

/// The interior fixed point of an elliptic automorphism.
///
/// Solves `w̄z² − (1 + e^{iα})z + e^{iα}w = 0`; the two roots are `z0` and
/// its reflection `1/z̄0`.
pub fn fixed_point(rho: &MoebiusAutomorphism) -> Result<Complex64, WcoError> {
    if rho.is_identity() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let e = rho.phase();
    let a = rho.w.conj();
    let b = -(1.0 + e);
    let c = e * rho.w;
    let candidates: Vec<Complex64> = if a.norm() == 0.0 {
        if b.norm() == 0.0 {
            return Err(WcoError::NotElliptic);
        }
        vec![-c / b]
    } else {
        let disc = (b * b - 4.0 * a * c).sqrt();
        let plus = b + disc;
        let minus = b - disc;
        let big = if plus.norm() >= minus.norm() { plus } else { minus };
        let q = -0.5 * big;
        if q.norm() == 0.0 {
            vec![Complex64::new(0.0, 0.0)]
        } else {
            vec![q / a, c / q]
        }
    };
    candidates
        .into_iter()
        .filter(|z| z.norm() < 1.0 - INTERIOR_MARGIN)
        .min_by(|x, y| x.norm().total_cmp(&y.norm()))
        .ok_or(WcoError::NotElliptic)
}

/// `λ = ρ'(z0)` and its multiplicative order `q ≤ max_order`.
pub fn multiplier_and_order(rho: &MoebiusAutomorphism, max_order: u64) -> Result<(Complex64, u64), WcoError> {
    let z0 = fixed_point(rho)?;
    let lambda = rho.derivative(z0);
    if (lambda.norm() - 1.0).abs() > UNIMODULAR_TOL {
        return Err(WcoError::NotUnimodular(lambda.norm()));
    }
    let mut power = Complex64::new(1.0, 0.0);
    for q in 1..=max_order {
        power *= lambda;
        if (power - 1.0).norm() < ORDER_TOL {
            return Ok((lambda, q));
        }
    }
    Err(WcoError::NotFiniteOrder { lambda, max_order })
}

/// The involution `ζ(z) = (z0 − z)/(1 − z̄0 z)` exchanging `0` and `z0`.
pub fn conjugator(z0: Complex64) -> Result<MoebiusAutomorphism, WcoError> {
    MoebiusAutomorphism::new(0.0, z0)
}

/// Taylor coefficients of `φ∘ζ^{-1}` up to `degree`, recovered from
/// `2^m ≥ max(1024, 8·degree)` boundary samples by FFT. Fails with
/// `TailTooLarge` unless the truncated series reproduces every sample to
/// `1e−8`.
pub fn pullback_symbol(phi: &FourierSymbol, zeta: &MoebiusAutomorphism, degree: usize) -> Result<FourierSymbol, WcoError> {
    phi.check_analytic()?;
    let inv = zeta.inverse()?;
    let n = 1024.max(8 * degree).next_power_of_two();
    let samples: Vec<Complex64> = (0..n)
        .map(|k| {
            let u = inv.eval(Complex64::from_polar(1.0, TAU * k as f64 / n as f64));
            phi.taylor_eval(u)
        })
        .collect();

    let mut planner = FftPlanner::new();
    let mut spectrum = samples.clone();
    planner.plan_fft_forward(n).process(&mut spectrum);
    let scale = 1.0 / n as f64;
    let coeffs: Vec<Complex64> = spectrum[..=degree].iter().map(|c| c * scale).collect();

    let mut resynth = vec![Complex64::new(0.0, 0.0); n];
    resynth[..=degree].copy_from_slice(&coeffs);
    planner.plan_fft_inverse(n).process(&mut resynth);
    let residual = resynth
        .iter()
        .zip(&samples)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    if residual >= TAIL_TOL {
        return Err(WcoError::TailTooLarge { degree, residual });
    }
    Ok(FourierSymbol::new(coeffs.into_iter().enumerate().map(|(k, c)| (k as i64, c)))?)
}

/// [`pullback_symbol`] with the degree doubled from 64 until the tail
/// certificate passes, up to 4096.
pub fn pullback_adaptive(phi: &FourierSymbol, zeta: &MoebiusAutomorphism) -> Result<FourierSymbol, WcoError> {
    let mut degree = START_DEGREE.max(phi.degree() as usize);
    loop {
        match pullback_symbol(phi, zeta, degree) {
            Err(WcoError::TailTooLarge { .. }) if degree < MAX_DEGREE => degree = (2 * degree).min(MAX_DEGREE),
            other => return other,
        }
    }
}

/// Snaps `λ` (of order `q`) to the exact rotation `e^{2πip/q}`.
pub fn snap_rotation(lambda: Complex64, q: u64) -> Result<RationalRotation, WcoError> {
    let theta = lambda.arg().rem_euclid(TAU);
    let p = (theta * q as f64 / TAU).round() as i64;
    let error = (theta - TAU * p as f64 / q as f64).abs();
    if error >= SNAP_TOL {
        return Err(WcoError::SnapFailed { error });
    }
    Ok(RationalRotation::new(p, q as i64)?)
}

/// `W_{φ,ρ}` reduced to `T_{λ, φ∘ζ}`.
#[derive(Debug, Clone)]
pub struct WcoReduction {
    pub fixed_point: Complex64,
    pub multiplier: Complex64,
    pub rotation: RationalRotation,
    pub conjugator: MoebiusAutomorphism,
    /// `φ∘ζ`, the weight after conjugation.
    pub weight: FourierSymbol,
    pub problem: SpectralProblem,
}

impl WcoReduction {
    /// Reduction with the standard involution at the fixed point.
    pub fn new(phi: &FourierSymbol, rho: &MoebiusAutomorphism, max_order: u64) -> Result<Self, WcoError> {
        let z0 = fixed_point(rho)?;
        Self::with_conjugator(phi, rho, &conjugator(z0)?, max_order)
    }

    /// Reduction through any automorphism `ζ` with `ζ(0)` the fixed point of `ρ`.
    pub fn with_conjugator(
        phi: &FourierSymbol,
        rho: &MoebiusAutomorphism,
        zeta: &MoebiusAutomorphism,
        max_order: u64,
    ) -> Result<Self, WcoError> {
        phi.check_analytic()?;
        let z0 = fixed_point(rho)?;
        let got = zeta.eval(Complex64::new(0.0, 0.0));
        if (got - z0).norm() > ORDER_TOL {
            return Err(WcoError::ConjugatorMismatch { expected: z0, got });
        }
        let (multiplier, q) = multiplier_and_order(rho, max_order)?;
        let rotation = snap_rotation(multiplier, q)?;
        // φ∘ζ = φ∘(ζ^{-1})^{-1}
        let weight = pullback_adaptive(phi, &zeta.inverse()?)?;
        let problem = SpectralProblem::from_symbol(&weight, &rotation);
        Ok(Self { fixed_point: z0, multiplier, rotation, conjugator: *zeta, weight, problem })
    }

    pub fn classify(&self, mu: Complex64, tol: f64) -> Result<SpectralClassification, WcoError> {
        Ok(self.problem.classify(mu, tol)?)
    }
}

/// Spectral classification of `μ` for `W_{φ,ρ}`.
pub fn wco_classify(
    phi: &FourierSymbol,
    rho: &MoebiusAutomorphism,
    mu: Complex64,
    tol: f64,
) -> Result<SpectralClassification, WcoError> {
    WcoReduction::new(phi, rho, DEFAULT_MAX_ORDER)?.classify(mu, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn disc_samples(count: usize) -> Vec<Complex64> {
        (0..count)
            .map(|k| Complex64::from_polar(0.95 * ((k % 5) as f64 + 1.0) / 5.0, 2.399 * k as f64))
            .collect()
    }

    fn conjugated_rotation(z0: Complex64, lambda: Complex64) -> MoebiusAutomorphism {
        let zeta = conjugator(z0).unwrap();
        let rot = MoebiusAutomorphism::rotation(lambda).unwrap();
        zeta.compose(&rot).unwrap().compose(&zeta.inverse().unwrap()).unwrap()
    }

    #[test]
    fn eval_examples() {
        let id = MoebiusAutomorphism::new(PI, c(0.0, 0.0)).unwrap();
        let neg = MoebiusAutomorphism::new(0.0, c(0.0, 0.0)).unwrap();
        let m = MoebiusAutomorphism::new(1.1, c(0.3, -0.5)).unwrap();
        for z in disc_samples(8) {
            assert!((id.eval(z) - z).norm() < 1e-15);
            assert_eq!(neg.eval(z), -z);
        }
        assert!(m.eval(c(0.3, -0.5)).norm() < 1e-15);
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(MoebiusAutomorphism::new(0.0, c(1.0, 0.0)).is_err());
        assert!(MoebiusAutomorphism::new(f64::NAN, c(0.0, 0.0)).is_err());
        assert!(serde_json::from_str::<MoebiusAutomorphism>(r#"{"alpha": 0.0, "w": [0.8, 0.8]}"#).is_err());
    }

    #[test]
    fn preserves_the_circle() {
        let m = MoebiusAutomorphism::new(2.0, c(-0.6, 0.7)).unwrap();
        for k in 0..64 {
            let z = Complex64::from_polar(1.0, TAU * k as f64 / 64.0);
            assert!((m.eval(z).norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn group_laws() {
        let m1 = MoebiusAutomorphism::new(0.4, c(0.2, 0.5)).unwrap();
        let m2 = MoebiusAutomorphism::new(5.1, c(-0.7, 0.1)).unwrap();
        let neg = MoebiusAutomorphism::new(0.0, c(0.0, 0.0)).unwrap();
        assert_eq!(neg.inverse().unwrap().eval(c(0.3, 0.2)), neg.eval(c(0.3, 0.2)));
        let lhs = m1.compose(&m2).unwrap().inverse().unwrap();
        let rhs = m2.inverse().unwrap().compose(&m1.inverse().unwrap()).unwrap();
        let round = m1.compose(&m1.inverse().unwrap()).unwrap();
        let with_id = m1.compose(&MoebiusAutomorphism::identity()).unwrap();
        for z in disc_samples(16) {
            assert!((m1.compose(&m2).unwrap().eval(z) - m1.eval(m2.eval(z))).norm() < 1e-12);
            assert!((lhs.eval(z) - rhs.eval(z)).norm() < 1e-10);
            assert!((round.eval(z) - z).norm() < 1e-12);
            assert!((with_id.eval(z) - m1.eval(z)).norm() < 1e-12);
        }
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let m = MoebiusAutomorphism::new(0.9, c(0.1, 0.6)).unwrap();
        let z = c(-0.2, 0.3);
        let h = 1e-6;
        let fd = (m.eval(z + h) - m.eval(z - h)) / (2.0 * h);
        assert!((m.derivative(z) - fd).norm() < 1e-8);
    }

    #[test]
    fn fixed_point_examples() {
        let neg = MoebiusAutomorphism::new(0.0, c(0.0, 0.0)).unwrap();
        assert_eq!(fixed_point(&neg).unwrap(), c(0.0, 0.0));
        let z0 = c(0.3, 0.1);
        let rho = conjugated_rotation(z0, RationalRotation::new(1, 3).unwrap().lambda());
        assert!((fixed_point(&rho).unwrap() - z0).norm() < 1e-10);
        assert_eq!(fixed_point(&MoebiusAutomorphism::identity()).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn hyperbolic_map_is_rejected() {
        // ψ(z) = (z + 1/2)/(1 + z/2) fixes ±1, both on the circle. In canonical
        // form, (z + 1/2)/(1 + z/2) = e^{iπ}(−1/2 − z)/(1 + z/2), so α = π, w = −1/2.
        let hyper = MoebiusAutomorphism::new(PI, c(-0.5, 0.0)).unwrap();
        for z in [c(1.0, 0.0), c(-1.0, 0.0)] {
            assert!((hyper.eval(z) - z).norm() < 1e-15);
        }
        assert_eq!(fixed_point(&hyper), Err(WcoError::NotElliptic));
        // parabolic: conjugate of a translation, single boundary fixed point
        let para = MoebiusAutomorphism::new(PI, c(0.0, 0.0))
            .unwrap()
            .compose(&hyper)
            .unwrap();
        assert_eq!(fixed_point(&para), Err(WcoError::NotElliptic));
    }

    #[test]
    fn multiplier_examples() {
        let neg = MoebiusAutomorphism::new(0.0, c(0.0, 0.0)).unwrap();
        let (lam, q) = multiplier_and_order(&neg, DEFAULT_MAX_ORDER).unwrap();
        assert!((lam + 1.0).norm() < 1e-15);
        assert_eq!(q, 2);

        let target = RationalRotation::new(1, 3).unwrap().lambda();
        let rho = conjugated_rotation(c(0.3, 0.1), target);
        let (lam, q) = multiplier_and_order(&rho, DEFAULT_MAX_ORDER).unwrap();
        assert!((lam - target).norm() < 1e-9);
        assert_eq!(q, 3);

        let irrational = conjugated_rotation(c(0.3, 0.1), Complex64::from_polar(1.0, 1.0));
        assert!(matches!(multiplier_and_order(&irrational, 64), Err(WcoError::NotFiniteOrder { .. })));

        let (lam, q) = multiplier_and_order(&MoebiusAutomorphism::identity(), 64).unwrap();
        assert!((lam - 1.0).norm() < 1e-15);
        assert_eq!(q, 1);
    }

    #[test]
    fn conjugator_is_an_involution() {
        assert_eq!(conjugator(c(0.0, 0.0)).unwrap(), MoebiusAutomorphism::new(0.0, c(0.0, 0.0)).unwrap());
        let z0 = c(-0.4, 0.25);
        let zeta = conjugator(z0).unwrap();
        assert!((zeta.eval(c(0.0, 0.0)) - z0).norm() < 1e-15);
        assert!(zeta.eval(z0).norm() < 1e-15);
        for z in disc_samples(16) {
            assert!((zeta.eval(zeta.eval(z)) - z).norm() < 1e-12);
        }
    }

    #[test]
    fn conjugation_identity() {
        let z0 = c(0.3, 0.1);
        let target = RationalRotation::new(2, 5).unwrap().lambda();
        let rho = conjugated_rotation(z0, target);
        let zeta = conjugator(fixed_point(&rho).unwrap()).unwrap();
        let (lam, _) = multiplier_and_order(&rho, 64).unwrap();
        let inv = zeta.inverse().unwrap();
        for z in disc_samples(32) {
            assert!((inv.eval(rho.eval(zeta.eval(z))) - lam * z).norm() < 1e-10);
        }
    }

    #[test]
    fn pullback_examples() {
        let phi = FourierSymbol::new([(0, c(0.5, 0.0)), (1, c(-1.0, 0.3)), (3, c(0.2, 0.0))]).unwrap();
        let neg = conjugator(c(0.0, 0.0)).unwrap();
        let identity = neg.compose(&neg).unwrap();
        assert!(pullback_symbol(&phi, &identity, 64).unwrap().approx_eq(&phi, 1e-10));

        let k = FourierSymbol::constant(c(2.0, -1.0));
        let zeta = conjugator(c(0.3, 0.1)).unwrap();
        assert!(pullback_symbol(&k, &zeta, 64).unwrap().approx_eq(&k, 1e-12));

        assert!(matches!(
            pullback_symbol(&FourierSymbol::monomial(-1, c(1.0, 0.0)), &zeta, 64),
            Err(WcoError::Symbol(SymbolError::NotAnalytic { .. }))
        ));
    }

    #[test]
    fn pullback_of_z_matches_geometric_series() {
        let z0 = c(0.3, 0.1);
        let zeta = conjugator(z0).unwrap();
        let got = pullback_symbol(&FourierSymbol::monomial(1, c(1.0, 0.0)), &zeta, 64).unwrap();
        // (z0 − z)/(1 − z̄0 z) = z0 − (1 − |z0|²) Σ_{n≥1} z̄0^{n−1} z^n
        let scale = 1.0 - z0.norm_sqr();
        let mut expected = vec![(0, z0)];
        let mut pow = c(1.0, 0.0);
        for n in 1..=64 {
            expected.push((n, -scale * pow));
            pow *= z0.conj();
        }
        let expected = FourierSymbol::new(expected).unwrap();
        assert!(got.approx_eq(&expected, 1e-12));
    }

    #[test]
    fn pullback_tail_is_certified() {
        // z0 close to the circle: coefficients decay like 0.99^n
        let zeta = conjugator(c(0.99, 0.0)).unwrap();
        let phi = FourierSymbol::monomial(1, c(1.0, 0.0));
        assert!(matches!(pullback_symbol(&phi, &zeta, 64), Err(WcoError::TailTooLarge { degree: 64, .. })));
        let f = pullback_adaptive(&phi, &zeta).unwrap();
        assert!(f.degree() > 64);
    }

    #[test]
    fn snapping() {
        let r = snap_rotation(Complex64::from_polar(1.0, TAU * 2.0 / 5.0), 5).unwrap();
        assert_eq!((r.p(), r.q()), (2, 5));
        assert!(matches!(snap_rotation(Complex64::from_polar(1.0, 1.0), 5), Err(WcoError::SnapFailed { .. })));
    }

    #[test]
    fn conjugator_must_hit_fixed_point() {
        let rho = conjugated_rotation(c(0.3, 0.1), c(-1.0, 0.0));
        let wrong = conjugator(c(0.0, 0.2)).unwrap();
        let phi = FourierSymbol::monomial(1, c(1.0, 0.0));
        assert!(matches!(
            WcoReduction::with_conjugator(&phi, &rho, &wrong, 64),
            Err(WcoError::ConjugatorMismatch { .. })
        ));
    }

    #[test]
    fn constant_weight_spectrum_is_roots_of_c_to_the_q() {
        let cst = c(0.8, 0.3);
        let rho = conjugated_rotation(c(-0.2, 0.4), RationalRotation::new(1, 4).unwrap().lambda());
        let red = WcoReduction::new(&FourierSymbol::constant(cst), &rho, 64).unwrap();
        assert_eq!(red.rotation.q(), 4);
        let eta = red.rotation.lambda();
        for k in 0..4 {
            let root = cst * eta.powu(k);
            assert!(red.classify(root, 1e-8).unwrap().kind.in_spectrum());
            assert!(!red.classify(root * 1.01, 1e-8).unwrap().kind.in_spectrum());
        }
    }
}
