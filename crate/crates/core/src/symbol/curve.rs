use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::{FourierSymbol, CERTIFICATION_WIDTH};

const MIN_GRID: usize = 4096;
const GRID_PER_DEGREE: usize = 64;
const MAX_LEVELS: usize = 60;
const MAX_ACTIVE: usize = 1 << 16;
/// Above this support width the exact second-derivative bound is replaced by
/// Bernstein's inequality to keep setup cost linear.
const EXACT_BOUND_WIDTH: usize = 4096;

/// Certified enclosure `lower ≤ x ≤ upper`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lower: f64,
    pub upper: f64,
}

impl Bracket {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Goal {
    Max,
    Min,
}

/// The closed curve `θ ↦ φ(e^{iθ})` sampled on a fixed equispaced grid,
/// with the bounds needed to turn grid extrema into certified ones.
///
/// The grid has `K = 2^m ≥ max(4096, 64·M)` points and is computed once by
/// FFT, so repeated queries against different centers (every pixel of a
/// region raster, say) only pay for the grid scan and a short
/// branch-and-bound refinement.
#[derive(Debug, Clone)]
pub struct SymbolCurve {
    symbol: FourierSymbol,
    values: Vec<Complex64>,
    derivs: Vec<Complex64>,
    /// Coefficients of `|φ|²` when the support is narrow enough.
    autocorr: Option<FourierSymbol>,
    lipschitz: f64,
}

impl SymbolCurve {
    pub fn new(symbol: &FourierSymbol) -> Self {
        let m = symbol.degree() as usize;
        let k = MIN_GRID.max(GRID_PER_DEGREE * m).next_power_of_two();
        let mut planner = FftPlanner::new();
        let ifft = planner.plan_fft_inverse(k);

        let mut values = vec![Complex64::new(0.0, 0.0); k];
        let mut derivs = vec![Complex64::new(0.0, 0.0); k];
        for (n, a) in symbol.iter() {
            let slot = n.rem_euclid(k as i64) as usize;
            values[slot] += a;
            derivs[slot] += Complex64::new(0.0, n as f64) * a;
        }
        ifft.process(&mut values);
        ifft.process(&mut derivs);

        let width = match (symbol.min_index(), symbol.max_index()) {
            (Some(lo), Some(hi)) => (hi - lo + 1) as usize,
            _ => 0,
        };
        let autocorr = (width <= EXACT_BOUND_WIDTH).then(|| symbol.multiply(&symbol.reflect_conj()));

        Self {
            symbol: symbol.clone(),
            values,
            derivs,
            autocorr,
            lipschitz: symbol.lipschitz_bound(),
        }
    }

    pub fn symbol(&self) -> &FourierSymbol {
        &self.symbol
    }

    pub fn grid_len(&self) -> usize {
        self.values.len()
    }

    pub fn grid_theta(&self, k: usize) -> f64 {
        2.0 * PI * k as f64 / self.values.len() as f64
    }

    pub fn grid_value(&self, k: usize) -> Complex64 {
        self.values[k]
    }

    pub fn eval(&self, theta: f64) -> Complex64 {
        self.symbol.eval(theta)
    }

    /// Lipschitz constant of `θ ↦ φ(e^{iθ})`.
    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    /// Certified `‖φ‖_∞`.
    pub fn sup_bracket(&self) -> Bracket {
        self.refine(Complex64::new(0.0, 0.0), Goal::Max)
    }

    /// Certified `min_θ |φ(e^{iθ}) − c|`.
    pub fn distance_bracket(&self, c: Complex64) -> Bracket {
        self.refine(c, Goal::Min)
    }

    /// Bound on `|h''|` for `h(θ) = |φ(e^{iθ}) − c|²`.
    fn second_derivative_bound(&self, c: Complex64) -> f64 {
        match &self.autocorr {
            Some(r) => {
                // h = |φ|² − c̄φ − c·conj(φ) + |c|²; only n ≠ 0 modes matter.
                let lo = r.min_index().unwrap_or(0);
                let hi = r.max_index().unwrap_or(0);
                (lo..=hi)
                    .filter(|&n| n != 0)
                    .map(|n| {
                        let h_n = r.coeff(n) - c.conj() * self.symbol.coeff(n) - c * self.symbol.coeff(-n).conj();
                        (n * n) as f64 * h_n.norm()
                    })
                    .sum()
            }
            None => {
                let lo = self.symbol.min_index().unwrap_or(0).min(0);
                let hi = self.symbol.max_index().unwrap_or(0).max(0);
                let width = (hi - lo) as f64;
                let amp = self.symbol.abs_sum() + c.norm();
                width * width * amp * amp
            }
        }
    }

    fn h_and_slope(value: Complex64, deriv: Complex64, c: Complex64) -> (f64, f64) {
        let g = value - c;
        (g.norm_sqr(), 2.0 * (deriv * g.conj()).re)
    }

    /// Branch and bound on `h = |φ − c|²` over the grid cells. Each cell of
    /// half-width `r` around `m` satisfies `|h(θ) − h(m) − h'(m)(θ−m)| ≤ B r²/2`.
    fn refine(&self, c: Complex64, goal: Goal) -> Bracket {
        let b2 = self.second_derivative_bound(c);
        let k = self.values.len();
        let mut half = PI / k as f64;

        let bound = |h: f64, dh: f64, r: f64| match goal {
            Goal::Max => h + dh.abs() * r + 0.5 * b2 * r * r,
            Goal::Min => h - dh.abs() * r - 0.5 * b2 * r * r,
        };
        let better = |a: f64, b: f64| match goal {
            Goal::Max => a > b,
            Goal::Min => a < b,
        };

        let mut cells: Vec<(f64, f64, f64)> = (0..k)
            .map(|i| {
                let (h, dh) = Self::h_and_slope(self.values[i], self.derivs[i], c);
                (self.grid_theta(i), h, dh)
            })
            .collect();
        let mut best = cells
            .iter()
            .map(|cell| cell.1)
            .reduce(|a, b| if better(b, a) { b } else { a })
            .unwrap_or(0.0);

        let mut level = 0;
        loop {
            cells.retain(|&(_, h, dh)| better(bound(h, dh, half), best));
            let frontier = cells
                .iter()
                .map(|&(_, h, dh)| bound(h, dh, half))
                .fold(best, |a, b| if better(b, a) { b } else { a });
            let bracket = match goal {
                Goal::Max => Bracket { lower: best.sqrt(), upper: frontier.sqrt() },
                Goal::Min => Bracket { lower: frontier.max(0.0).sqrt(), upper: best.sqrt() },
            };
            if bracket.width() < 0.5 * CERTIFICATION_WIDTH
                || cells.is_empty()
                || level >= MAX_LEVELS
                || cells.len() > MAX_ACTIVE
            {
                return bracket;
            }

            half *= 0.5;
            let mut next = Vec::with_capacity(2 * cells.len());
            for &(mid, _, _) in &cells {
                for t in [mid - half, mid + half] {
                    let (v, d) = self.symbol.eval_with_derivative(t);
                    let (h, dh) = Self::h_and_slope(v, d, c);
                    if better(h, best) {
                        best = h;
                    }
                    next.push((t, h, dh));
                }
            }
            cells = next;
            level += 1;
        }
    }
}
