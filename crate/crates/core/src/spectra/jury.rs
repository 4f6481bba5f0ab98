use num_complex::Complex64;

use super::{winding_number, CurveSamples, SpectraError, FREDHOLM_TOL};
use crate::symbol::{FourierSymbol, RationalRotation};

/// Samples of the `C(T)`-valued determinant `h_T` for
/// `T = Σ_j T_{f_j} C_ρ^j` with `ρ = τ̄`: at each `θ` the `q×q` matrix has
/// entry `(k, j) = f_{(j−k) mod q}(τ̄^k(e^{iθ}))`.
pub fn jury_determinant(fs: &[FourierSymbol], r: &RationalRotation, samples: usize) -> Result<CurveSamples, SpectraError> {
    let q = r.q() as usize;
    if fs.len() != q {
        return Err(SpectraError::JuryArity { expected: q, got: fs.len() });
    }
    // rotated[k][m] = f_m ∘ τ̄^k
    let rotated: Vec<Vec<FourierSymbol>> = (0..q)
        .map(|k| fs.iter().map(|f| f.rotate(r, k as u64)).collect())
        .collect();
    let mut matrix = vec![Complex64::new(0.0, 0.0); q * q];
    CurveSamples::from_fn(samples, |theta| {
        for k in 0..q {
            for j in 0..q {
                matrix[k * q + j] = rotated[k][(j + q - k) % q].eval(theta);
            }
        }
        determinant(&mut matrix, q)
    })
}

/// Fredholm index `−wn(h_T)/q` of `Σ_j T_{f_j} C_ρ^j` from samples of its
/// determinant; the standard winding number is divided by `q` exactly once.
pub fn jury_index(c: &CurveSamples, r: &RationalRotation) -> Result<i64, SpectraError> {
    let wn = winding_number(c, Complex64::new(0.0, 0.0), FREDHOLM_TOL)?;
    let q = r.q() as i64;
    if wn % q != 0 {
        return Err(SpectraError::NonIntegralIndex { winding: wn, q: r.q() });
    }
    Ok(-wn / q)
}

/// [`jury_index`] with the determinant resampled from 256 points, doubling
/// until the index is unchanged across two doublings (at most `2^18`
/// samples).
pub fn jury_fredholm_index(fs: &[FourierSymbol], r: &RationalRotation) -> Result<i64, SpectraError> {
    const MAX_SAMPLES: usize = 1 << 18;
    let mut samples = 256;
    let mut history: Vec<i64> = Vec::new();
    loop {
        match jury_index(&jury_determinant(fs, r, samples)?, r) {
            Ok(index) => {
                history.push(index);
                if let [.., a, b, c] = history[..] {
                    if a == b && b == c {
                        return Ok(index);
                    }
                }
            }
            Err(SpectraError::Undersampled { .. }) => history.clear(),
            Err(e) => return Err(e),
        }
        if samples >= MAX_SAMPLES {
            return Err(SpectraError::Undersampled { samples });
        }
        samples *= 2;
    }
}

/// The coefficient list for `T_{φ_{λ̄,+}} − μ C_{τ̄}`, whose Fredholmness is
/// that of `T_{λ,φ} − μ`: `f_0 = ψ`, `f_{q−1} = −μ`, all others zero (for
/// `q = 1` the two collapse into `f_0 = ψ − μ`).
pub fn shifted_operator_coefficients(psi: &FourierSymbol, r: &RationalRotation, mu: Complex64) -> Vec<FourierSymbol> {
    let q = r.q() as usize;
    let mut fs = vec![FourierSymbol::zero(); q];
    if q == 1 {
        fs[0] = psi.sub_constant(mu);
    } else {
        fs[0] = psi.clone();
        fs[q - 1] = FourierSymbol::constant(-mu);
    }
    fs
}

/// Determinant by Gaussian elimination with partial pivoting; `a` is
/// overwritten.
fn determinant(a: &mut [Complex64], n: usize) -> Complex64 {
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x * n + col].norm().total_cmp(&a[y * n + col].norm()))
            .expect("nonempty range");
        if a[pivot * n + col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            for j in 0..n {
                a.swap(pivot * n + j, col * n + j);
            }
            det = -det;
        }
        let p = a[col * n + col];
        det *= p;
        for row in col + 1..n {
            let factor = a[row * n + col] / p;
            if factor.re == 0.0 && factor.im == 0.0 {
                continue;
            }
            for j in col..n {
                let v = a[col * n + j];
                a[row * n + j] -= factor * v;
            }
        }
    }
    det
}
