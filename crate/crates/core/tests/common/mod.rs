#![allow(dead_code)]

use lambda_toeplitz::{Complex64, FourierSymbol, RationalRotation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn cbrt2() -> f64 {
    2f64.cbrt()
}

/// `φ(e^{iθ}) = e^{iθ} − 2^{1/3}` with `λ = e^{2πi/3}`.
pub fn cube_root() -> (FourierSymbol, RationalRotation) {
    let phi = FourierSymbol::new([(1, c(1.0, 0.0)), (0, c(-cbrt2(), 0.0))]).unwrap();
    (phi, RationalRotation::new(1, 3).unwrap())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_point(rng: &mut ChaCha8Rng, half_width: f64) -> Complex64 {
    c(rng.random_range(-half_width..half_width), rng.random_range(-half_width..half_width))
}

pub fn random_analytic(rng: &mut ChaCha8Rng, max_degree: i64) -> FourierSymbol {
    let degree = rng.random_range(0..=max_degree);
    FourierSymbol::new((0..=degree).map(|n| (n, random_point(rng, 1.0)))).unwrap()
}

/// A rotation of order `q` with a random admissible numerator.
pub fn random_rotation(rng: &mut ChaCha8Rng, q: u64) -> RationalRotation {
    loop {
        let p = rng.random_range(0..q);
        if let Ok(r) = RationalRotation::new(p as i64, q as i64) {
            return r;
        }
    }
}

/// All roots of `Σ c_k z^k` (ascending coefficients, nonzero leading term)
/// by Weierstrass iteration followed by Newton polishing.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs.iter().map(|a| a / lead).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(c(0.0, 0.0), |acc, a| acc * z + a);
    let deriv = |z: Complex64| {
        (1..=deg).rev().fold(c(0.0, 0.0), |acc, k| acc * z + monic[k] * k as f64)
    };
    let radius = 1.0 + monic[..deg].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let mut roots: Vec<Complex64> =
        (0..deg).map(|k| Complex64::from_polar(radius, 0.4 + std::f64::consts::TAU * k as f64 / deg as f64)).collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..deg {
            let mut denom = c(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }
    for z in roots.iter_mut() {
        for _ in 0..5 {
            let d = deriv(*z);
            if d.norm() > 0.0 {
                *z -= eval(*z) / d;
            }
        }
    }
    roots
}
