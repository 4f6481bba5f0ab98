use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;

use super::SpectraError;
use crate::symbol::{FourierSymbol, SymbolCurve};

const MIN_SAMPLES: usize = 16;
const BASE_INTERVALS: usize = 256;
const MAX_DEPTH: u32 = 64;

/// Samples `w_i = f(e^{iθ_i})` of a closed curve, `θ` strictly increasing in `[0, 2π)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSamples {
    thetas: Vec<f64>,
    values: Vec<Complex64>,
}

impl CurveSamples {
    pub fn new(thetas: Vec<f64>, values: Vec<Complex64>) -> Result<Self, SpectraError> {
        if thetas.len() != values.len() {
            return Err(SpectraError::InvalidCurve(format!(
                "{} angles but {} values",
                thetas.len(),
                values.len()
            )));
        }
        if thetas.len() < MIN_SAMPLES {
            return Err(SpectraError::InvalidCurve(format!(
                "need at least {MIN_SAMPLES} samples, got {}",
                thetas.len()
            )));
        }
        if thetas.iter().any(|t| !(0.0..TAU).contains(t)) || thetas.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SpectraError::InvalidCurve("angles must increase strictly within [0, 2π)".into()));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(SpectraError::InvalidCurve("non-finite sample".into()));
        }
        Ok(Self { thetas, values })
    }

    /// `count` equispaced samples of `f`.
    pub fn from_fn(count: usize, mut f: impl FnMut(f64) -> Complex64) -> Result<Self, SpectraError> {
        let thetas: Vec<f64> = (0..count).map(|k| TAU * k as f64 / count as f64).collect();
        let values = thetas.iter().map(|&t| f(t)).collect();
        Self::new(thetas, values)
    }

    pub fn from_symbol(s: &FourierSymbol, count: usize) -> Result<Self, SpectraError> {
        Self::from_fn(count, |t| s.eval(t))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// `min_i |w_i − w|`.
    pub fn min_distance(&self, w: Complex64) -> f64 {
        self.values.iter().map(|v| (v - w).norm()).fold(f64::INFINITY, f64::min)
    }
}

/// Winding number of a sampled closed curve about `w` by summing principal
/// argument increments. Every step must turn by less than `π/2`, otherwise
/// the sampling is too coarse to be trusted and `Undersampled` is returned.
pub fn winding_number(c: &CurveSamples, w: Complex64, tol: f64) -> Result<i64, SpectraError> {
    let distance = c.min_distance(w);
    if distance < tol {
        return Err(SpectraError::OnCurve { distance });
    }
    let n = c.len();
    let mut total = 0.0;
    for i in 0..n {
        let a = c.values[i] - w;
        let b = c.values[(i + 1) % n] - w;
        let step = (b * a.conj()).arg();
        if step.abs() >= FRAC_PI_2 {
            return Err(SpectraError::Undersampled { samples: n });
        }
        total += step;
    }
    round_turns(total)
}

/// Certified winding number of `θ ↦ φ(e^{iθ})` about `w`.
///
/// Starts from 256 equispaced intervals and bisects any interval `[a, b]`
/// on which `L·(b − a) ≥ max(|φ(a) − w|, |φ(b) − w|)`, with `L` the Lipschitz
/// constant of the curve. Once the inequality fails the arc lies in a disc
/// that excludes `w`, so its argument increment is the principal one.
pub fn symbol_winding_number(curve: &SymbolCurve, w: Complex64, tol: f64) -> Result<i64, SpectraError> {
    let distance = curve.distance_bracket(w).upper;
    if distance < tol {
        return Err(SpectraError::OnCurve { distance });
    }
    certified_winding(curve, w)
}

/// [`symbol_winding_number`] without the proximity check; the caller has
/// already established that the curve avoids `w`.
pub(crate) fn certified_winding(curve: &SymbolCurve, w: Complex64) -> Result<i64, SpectraError> {
    let lip = curve.lipschitz();
    let stride = curve.grid_len() / BASE_INTERVALS;
    let node = |k: usize| {
        let k = k % BASE_INTERVALS;
        (curve.grid_theta(k * stride), curve.grid_value(k * stride) - w)
    };

    let mut total = 0.0;
    let mut stack = Vec::new();
    for k in (0..BASE_INTERVALS).rev() {
        let (a, ga) = node(k);
        let (_, gb) = node(k + 1);
        let b = a + TAU / BASE_INTERVALS as f64;
        stack.push((a, ga, b, gb, 0u32));
    }
    while let Some((a, ga, b, gb, depth)) = stack.pop() {
        if lip * (b - a) < ga.norm().max(gb.norm()) {
            total += (gb * ga.conj()).arg();
            continue;
        }
        if depth >= MAX_DEPTH {
            return Err(SpectraError::OnCurve { distance: ga.norm().min(gb.norm()) });
        }
        let m = 0.5 * (a + b);
        let gm = curve.eval(m) - w;
        stack.push((m, gm, b, gb, depth + 1));
        stack.push((a, ga, m, gm, depth + 1));
    }
    round_turns(total)
}

fn round_turns(total: f64) -> Result<i64, SpectraError> {
    let turns = total / (2.0 * PI);
    let rounded = turns.round();
    if (turns - rounded).abs() > 1e-6 {
        return Err(SpectraError::WindingUnresolved(turns));
    }
    Ok(rounded as i64)
}
