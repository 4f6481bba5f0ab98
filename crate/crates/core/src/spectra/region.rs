use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{SpectraError, SpectralClassification, SpectralKind, SpectralProblem};

/// Largest raster side accepted by [`region_grid`].
pub const MAX_RESOLUTION: usize = 4096;

/// Axis-aligned box `[re_min, re_max] × [im_min, im_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegionBox {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl RegionBox {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self, SpectraError> {
        let b = Self { re_min, re_max, im_min, im_max };
        if [re_min, re_max, im_min, im_max].iter().any(|v| !v.is_finite()) {
            return Err(SpectraError::InvalidGrid("box bounds must be finite".into()));
        }
        if re_min >= re_max || im_min >= im_max {
            return Err(SpectraError::InvalidGrid("box bounds must satisfy min < max".into()));
        }
        Ok(b)
    }
}

/// Classifications on a `resolution × resolution` grid of pixel centers.
/// Row 0 is the top edge (`im_max`), column 0 the left edge (`re_min`).
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralRaster {
    pub bounds: RegionBox,
    pub resolution: usize,
    pub cells: Vec<SpectralClassification>,
}

impl SpectralRaster {
    pub fn node(&self, row: usize, col: usize) -> Complex64 {
        node(&self.bounds, self.resolution, row, col)
    }

    pub fn get(&self, row: usize, col: usize) -> &SpectralClassification {
        &self.cells[row * self.resolution + col]
    }

    /// Number of 4-connected components of cells satisfying `pred`.
    pub fn count_components(&self, pred: impl Fn(&SpectralClassification) -> bool) -> usize {
        let n = self.resolution;
        let mut seen = vec![false; n * n];
        let mut components = 0;
        let mut stack = Vec::new();
        for start in 0..n * n {
            if seen[start] || !pred(&self.cells[start]) {
                continue;
            }
            components += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(idx) = stack.pop() {
                let (r, c) = (idx / n, idx % n);
                let neighbours = [
                    (r > 0).then(|| idx - n),
                    (r + 1 < n).then(|| idx + n),
                    (c > 0).then(|| idx - 1),
                    (c + 1 < n).then(|| idx + 1),
                ];
                for nb in neighbours.into_iter().flatten() {
                    if !seen[nb] && pred(&self.cells[nb]) {
                        seen[nb] = true;
                        stack.push(nb);
                    }
                }
            }
        }
        components
    }

    /// Components of the non-resolvent set.
    pub fn spectrum_components(&self) -> usize {
        self.count_components(|c| c.kind != SpectralKind::Resolvent)
    }
}

fn node(b: &RegionBox, resolution: usize, row: usize, col: usize) -> Complex64 {
    let dx = (b.re_max - b.re_min) / resolution as f64;
    let dy = (b.im_max - b.im_min) / resolution as f64;
    Complex64::new(b.re_min + (col as f64 + 0.5) * dx, b.im_max - (row as f64 + 0.5) * dy)
}

/// Classifies every pixel center of the box. Per-node failures become
/// `NearBoundary` markers; the grid itself never aborts once validated.
pub fn region_grid(
    problem: &SpectralProblem,
    bounds: RegionBox,
    resolution: usize,
    tol: f64,
) -> Result<SpectralRaster, SpectraError> {
    if resolution == 0 || resolution > MAX_RESOLUTION {
        return Err(SpectraError::InvalidGrid(format!(
            "resolution must be in 1..={MAX_RESOLUTION}, got {resolution}"
        )));
    }
    problem.product().check_analytic()?;
    let cells = (0..resolution * resolution)
        .into_par_iter()
        .map(|idx| {
            let mu = node(&bounds, resolution, idx / resolution, idx % resolution);
            problem.classify(mu, tol).unwrap_or_else(|_| SpectralClassification {
                kind: SpectralKind::NearBoundary,
                index: None,
                distance: problem.distance(mu),
            })
        })
        .collect();
    Ok(SpectralRaster { bounds, resolution, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::DEFAULT_TOL;
    use crate::symbol::{FourierSymbol, RationalRotation};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn square() -> RegionBox {
        RegionBox::new(-2.0, 2.0, -2.0, 2.0).unwrap()
    }

    #[test]
    fn cube_root_spectrum_has_three_components() {
        let phi = FourierSymbol::new([(1, c(1.0, 0.0)), (0, c(-2f64.cbrt(), 0.0))]).unwrap();
        let p = SpectralProblem::from_symbol(&phi, &RationalRotation::new(1, 3).unwrap());
        let raster = region_grid(&p, square(), 64, DEFAULT_TOL).unwrap();
        assert_eq!(raster.spectrum_components(), 3);
    }

    #[test]
    fn shift_spectrum_is_one_disc() {
        let p = SpectralProblem::from_symbol(&FourierSymbol::monomial(1, c(1.0, 0.0)), &RationalRotation::identity());
        let raster = region_grid(&p, square(), 48, DEFAULT_TOL).unwrap();
        assert_eq!(raster.spectrum_components(), 1);
        for row in 0..48 {
            for col in 0..48 {
                let inside = raster.node(row, col).norm() < 1.0;
                assert_eq!(raster.get(row, col).kind.in_spectrum(), inside);
            }
        }
    }

    #[test]
    fn zero_symbol_is_all_resolvent() {
        let p = SpectralProblem::from_symbol(&FourierSymbol::zero(), &RationalRotation::new(1, 2).unwrap());
        let raster = region_grid(&p, square(), 16, DEFAULT_TOL).unwrap();
        assert!(raster.cells.iter().all(|c| c.kind == SpectralKind::Resolvent));
    }

    #[test]
    fn validation() {
        let p = SpectralProblem::from_symbol(&FourierSymbol::zero(), &RationalRotation::identity());
        assert!(region_grid(&p, square(), 0, DEFAULT_TOL).is_err());
        assert!(region_grid(&p, square(), MAX_RESOLUTION + 1, DEFAULT_TOL).is_err());
        assert!(RegionBox::new(1.0, -1.0, 0.0, 1.0).is_err());
        assert!(RegionBox::new(0.0, f64::NAN, 0.0, 1.0).is_err());
    }

    #[test]
    fn node_layout() {
        let b = RegionBox::new(0.0, 4.0, -1.0, 1.0).unwrap();
        assert_eq!(node(&b, 4, 0, 0), c(0.5, 0.75));
        assert_eq!(node(&b, 4, 3, 3), c(3.5, -0.75));
    }
}
