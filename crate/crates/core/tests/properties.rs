mod common;

use common::*;
use lambda_toeplitz::matrix::{build_lambda_toeplitz, build_rotation_unitary, build_toeplitz};
use lambda_toeplitz::spectra::{
    self, jury_determinant, jury_fredholm_index, shifted_operator_coefficients, SpectraError, SpectralProblem, DEFAULT_TOL,
};
use lambda_toeplitz::wco::{conjugator, fixed_point, multiplier_and_order, MoebiusAutomorphism};
use lambda_toeplitz::{Complex64, FourierSymbol, RationalRotation, SpectralKind};
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

/// Trig polynomial supported in `[lo, lo + len)` with `-max_degree ≤ lo`.
fn symbol(max_degree: i64) -> impl Strategy<Value = FourierSymbol> {
    (-max_degree..=0i64, 1..=(max_degree as usize + 1)).prop_flat_map(|(lo, len)| {
        prop::collection::vec(coeff(), len)
            .prop_map(move |cs| FourierSymbol::new(cs.into_iter().enumerate().map(|(k, a)| (lo + k as i64, a))).unwrap())
    })
}

fn analytic(max_degree: usize) -> impl Strategy<Value = FourierSymbol> {
    prop::collection::vec(coeff(), 1..=max_degree + 1)
        .prop_map(|cs| FourierSymbol::new(cs.into_iter().enumerate().map(|(k, a)| (k as i64, a))).unwrap())
}

fn rotation() -> impl Strategy<Value = RationalRotation> {
    (1..=8u64, 0..8u64).prop_filter_map("not in lowest terms", |(q, p)| RationalRotation::new(p as i64, q as i64).ok())
}

fn rotation_of_order(orders: &'static [u64]) -> impl Strategy<Value = RationalRotation> {
    (prop::sample::select(orders), 0..6u64)
        .prop_filter_map("not in lowest terms", |(q, p)| RationalRotation::new(p as i64, q as i64).ok())
}

fn point(half_width: f64) -> impl Strategy<Value = Complex64> {
    (-half_width..half_width, -half_width..half_width).prop_map(|(re, im)| Complex64::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn twist_is_undone_by_conjugate_twist(s in symbol(8), r in rotation()) {
        prop_assert!(s.twist(&r).twist(&r.conjugate()).approx_eq(&s, 1e-12));
    }

    #[test]
    fn rotation_is_a_homomorphism(s in symbol(8), r in rotation(), j in 0..10u64, k in 0..10u64) {
        prop_assert!(s.rotate(&r, j + k).approx_eq(&s.rotate(&r, j).rotate(&r, k), 1e-12));
    }

    #[test]
    fn product_symbol_is_rotation_invariant(s in symbol(6), r in rotation()) {
        let q = r.q();
        let prod = s.product_symbol(&r, q).unwrap();
        prop_assert!(prod.rotate(&r, 1).approx_eq(&prod, 1e-10));
        for (n, a) in prod.iter() {
            if n.rem_euclid(q as i64) != 0 {
                prop_assert!(a.norm() < 1e-10, "coefficient {} = {}", n, a);
            }
        }
    }

    #[test]
    fn multiply_is_commutative_and_associative(a in symbol(8), b in symbol(8), c in symbol(8)) {
        prop_assert!(a.multiply(&b).approx_eq(&b.multiply(&a), 1e-10));
        prop_assert!(a.multiply(&b).multiply(&c).approx_eq(&a.multiply(&b.multiply(&c)), 1e-10));
    }

    #[test]
    fn sup_norm_of_modulus_squared(s in symbol(8)) {
        let sq = s.multiply(&s.reflect_conj());
        let norm = s.sup_norm();
        prop_assert!((sq.sup_norm() - norm * norm).abs() < 1e-8, "{} vs {}", sq.sup_norm(), norm * norm);
    }

    #[test]
    fn spectral_mapping_symmetry(phi in analytic(4), r in rotation(), mu in point(3.0)) {
        let problem = SpectralProblem::from_symbol(&phi, &r);
        let base = problem.classify(mu, DEFAULT_TOL);
        for k in 1..r.q() {
            let eta = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / r.q() as f64);
            let other = problem.classify(mu * eta, DEFAULT_TOL);
            match (&base, &other) {
                (Ok(a), Ok(b)) => {
                    // μ·η and μ share μ^q up to rounding; the band decision is stable away from its edges
                    if (a.distance - DEFAULT_TOL).abs() > 1e-9 && (a.distance - 1e-9).abs() > 1e-9 {
                        prop_assert_eq!(a.kind, b.kind);
                        prop_assert_eq!(a.index, b.index);
                    }
                }
                _ => prop_assert!(base.is_err() && other.is_err()),
            }
        }
    }

    #[test]
    fn jury_reproduces_product_symbol(
        phi in analytic(6),
        r in rotation_of_order(&[1, 2, 3, 4, 6]),
        mu in point(2.0),
    ) {
        let psi = phi.twist(&r);
        let prod = psi.product_symbol(&r, r.q()).unwrap();
        let mu_q = mu.powu(r.q() as u32);
        let fs = shifted_operator_coefficients(&psi, &r, mu);
        let h = jury_determinant(&fs, &r, 512).unwrap();
        for (t, v) in h.thetas().iter().zip(h.values()) {
            let expected = prod.eval(*t) - mu_q;
            prop_assert!((v - expected).norm() < 1e-9 * (1.0 + expected.norm()));
        }
        let problem = SpectralProblem::from_symbol(&phi, &r);
        if problem.distance(mu) > 1e-3 {
            prop_assert_eq!(jury_fredholm_index(&fs, &r).unwrap(), problem.fredholm_index(mu).unwrap());
        }
    }

    #[test]
    fn index_is_locally_constant(
        phi in analytic(4),
        r in rotation_of_order(&[1, 2, 3]),
        mu in point(2.5),
        dir in 0..4usize,
    ) {
        let h = 0.01;
        let step = [Complex64::new(h, 0.0), Complex64::new(-h, 0.0), Complex64::new(0.0, h), Complex64::new(0.0, -h)][dir];
        let problem = SpectralProblem::from_symbol(&phi, &r);
        let along: Vec<Complex64> = (0..=16).map(|k| mu + step * (k as f64 / 16.0)).collect();
        // keep segments whose samples are comfortably clear of the curve
        // relative to how far μ^q moves between samples
        let q = r.q() as i32;
        let speed = q as f64 * (mu.norm() + h).powi(q - 1) * h / 16.0;
        prop_assume!(along.iter().all(|&z| problem.distance(z) > 4.0 * speed + DEFAULT_TOL));
        let first = problem.classify(mu, DEFAULT_TOL).unwrap();
        for z in along {
            let c = problem.classify(z, DEFAULT_TOL).unwrap();
            prop_assert_eq!(c.kind, first.kind);
            prop_assert_eq!(c.index, first.index);
        }
    }

    #[test]
    fn moebius_preserves_the_circle(alpha in 0.0..std::f64::consts::TAU, w in point(0.7)) {
        let m = MoebiusAutomorphism::new(alpha, w).unwrap();
        for k in 0..64 {
            let z = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / 64.0);
            prop_assert!((m.eval(z).norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn elliptic_round_trip(z0 in point(0.6), r in rotation_of_order(&[2, 3, 4, 5, 6, 7, 8, 12])) {
        let zeta = conjugator(z0).unwrap();
        let rot = MoebiusAutomorphism::rotation(r.lambda()).unwrap();
        let rho = zeta.compose(&rot).unwrap().compose(&zeta.inverse().unwrap()).unwrap();
        prop_assert!((fixed_point(&rho).unwrap() - z0).norm() < 1e-9);
        let (lambda, q) = multiplier_and_order(&rho, 64).unwrap();
        prop_assert!((lambda - r.lambda()).norm() < 1e-9);
        prop_assert_eq!(q, r.q());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn factorization_and_power_identity(phi in analytic(6), r in rotation_of_order(&[1, 2, 3, 4, 6]), n in 1..96usize) {
        let t = build_lambda_toeplitz(&phi, &r, n).unwrap();
        let twisted = phi.twist(&r);
        let factored = build_rotation_unitary(&r, n).unwrap().matmul(&build_toeplitz(&twisted, n).unwrap()).unwrap();
        prop_assert!(t.max_abs_diff(&factored).unwrap() < 1e-14);
        let prod = twisted.product_symbol(&r, r.q()).unwrap();
        let power = t.pow(r.q() as u32).unwrap();
        prop_assert!(power.max_abs_diff(&build_toeplitz(&prod, n).unwrap()).unwrap() < 1e-10);
    }

    #[test]
    fn factorization_holds_for_general_symbols(s in symbol(5), r in rotation(), n in 1..64usize) {
        let t = build_lambda_toeplitz(&s, &r, n).unwrap();
        let factored = build_rotation_unitary(&r, n).unwrap().matmul(&build_toeplitz(&s.twist(&r), n).unwrap()).unwrap();
        prop_assert!(t.max_abs_diff(&factored).unwrap() < 1e-14);
    }

    #[test]
    fn norm_is_monotone_and_bounded(s in symbol(4), r in rotation()) {
        let bound = s.twist(&r).sup_norm() + 1e-9;
        let mut previous = 0.0;
        for n in [8, 16, 32, 64] {
            let norm = build_lambda_toeplitz(&s, &r, n).unwrap().op_norm().unwrap();
            prop_assert!(norm >= previous - 1e-12, "n = {}: {} < {}", n, norm, previous);
            prop_assert!(norm <= bound, "n = {}: {} > {}", n, norm, bound);
            previous = norm;
        }
    }

    #[test]
    fn rotation_unitary_preserves_norm(s in symbol(4), r in rotation(), n in 1..48usize) {
        let a = build_toeplitz(&s, n).unwrap();
        let ua = build_rotation_unitary(&r, n).unwrap().matmul(&a).unwrap();
        prop_assert!((ua.op_norm().unwrap() - a.op_norm().unwrap()).abs() < 1e-10);
    }

    #[test]
    fn roots_inside_the_disc_count_the_index(
        phi in analytic(4),
        r in rotation_of_order(&[1, 2, 3]),
        mu in point(2.0),
    ) {
        let problem = SpectralProblem::from_symbol(&phi, &r);
        let class = problem.classify(mu, DEFAULT_TOL).unwrap();
        prop_assume!(class.kind == SpectralKind::FredholmHole);
        let prod = problem.product();
        let degree = prod.max_index().unwrap() as usize;
        prop_assume!(degree >= 1 && degree <= 12);
        let mut coeffs: Vec<Complex64> = (0..=degree as i64).map(|n| prod.coeff(n)).collect();
        coeffs[0] -= mu.powu(r.q() as u32);
        prop_assume!(coeffs[degree].norm() > 1e-6);
        let roots = polynomial_roots(&coeffs);
        prop_assume!(roots.iter().all(|z| (z.norm() - 1.0).abs() > 1e-6));
        let inside = roots.iter().filter(|z| z.norm() < 1.0).count() as i64;
        prop_assert!(inside >= 1);
        prop_assert_eq!(inside, -(r.q() as i64) * class.index.unwrap());
    }
}

#[test]
fn index_integrality_never_fails() {
    let mut g = rng(500);
    for _ in 0..200 {
        let q = [1, 2, 3, 4, 6][rand::Rng::random_range(&mut g, 0..5)];
        let r = random_rotation(&mut g, q);
        let phi = random_analytic(&mut g, 5);
        let mu = random_point(&mut g, 2.5);
        let prod = phi.twist(&r).product_symbol(&r, q).unwrap();
        match spectra::fredholm_index(&prod, &r, mu) {
            Ok(_) | Err(SpectraError::OnCurve { .. }) => {}
            Err(e) => panic!("{e}"),
        }
    }
}
