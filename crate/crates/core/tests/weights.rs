//! Weight tables: identities, sign patterns, asymptotics and frozen
//! high-precision references.

#[path = "common/weights_values.rs"]
#[allow(dead_code)]
mod weights_values;

use mlstab::special::gamma;
use mlstab::weights::{
    alpha_diff_weights, conv_inverse, fadams2_weights, fbdf1_mu_recursion, fbdf_weights, generating_fn_eval,
    l1_weights, miller_power, scheme_weights, PowerSeries, SchemeId, Sequence,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn convolve_head(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    (0..n).map(|k| (0..=k).map(|i| a[i] * b[k - i]).sum()).collect()
}

#[test]
fn miller_bdf2_polynomial_power() {
    let f = PowerSeries::from_real(&[1.5, -2.0, 0.5]).unwrap();
    let g = miller_power(&f, 0.7, 6).unwrap().real();
    for (got, want) in g.iter().zip(weights_values::BDF2_POW07) {
        assert!((got - want).abs() < 1e-15 * want.abs().max(1.0), "{got} vs {want}");
    }
}

#[test]
fn adams2_omega_against_binomial_product() {
    let w = fadams2_weights(0.5, 8).unwrap();
    for (got, want) in w.omega().unwrap().iter().zip(weights_values::ADAMS2_OMEGA05) {
        assert!((got - want).abs() < 1e-15, "{got} vs {want}");
    }
}

#[test]
fn l1_mu_against_high_precision() {
    for &(alpha, j, want) in weights_values::L1_MU {
        let w = l1_weights(alpha, j + 1).unwrap();
        let got = w.mu().unwrap()[j];
        assert!(((got - want) / want).abs() < 1e-13, "alpha={alpha} j={j}: {got} vs {want}");
    }
}

#[test]
fn l1_generating_function_against_polylog() {
    let w = l1_weights(0.5, 4000).unwrap();
    let v = generating_fn_eval(&w, Sequence::Mu, Complex64::new(0.9, 0.0)).unwrap();
    assert!(v.tail_bound.unwrap() < 1e-12);
    assert!((v.value.re - weights_values::L1_GF_09_ALPHA05).abs() < 1e-12);
}

#[test]
fn product_with_inverse_is_delta() {
    for scheme in [SchemeId::FBdf1, SchemeId::FBdf2, SchemeId::FAdams2, SchemeId::L1] {
        for &alpha in &[0.1, 0.5, 0.9] {
            let w = scheme_weights(scheme, alpha, 2000).unwrap();
            let d = convolve_head(w.mu().unwrap(), w.omega().unwrap(), 2000);
            assert!((d[0] - 1.0).abs() < 1e-12);
            let worst = d[1..].iter().fold(0.0f64, |m, x| m.max(x.abs()));
            assert!(worst < 1e-12, "{scheme} alpha={alpha}: {worst:e}");
        }
    }
}

#[test]
fn miller_omega_equals_convolution_inverse() {
    for (k, alpha) in [(1, 0.5), (2, 0.3), (2, 0.8)] {
        let w = fbdf_weights(k, alpha, 1500).unwrap();
        let mu = PowerSeries::from_real(w.mu().unwrap()).unwrap();
        let inv = conv_inverse(&mu, 1500).unwrap().real();
        for (a, b) in inv.iter().zip(w.omega().unwrap()) {
            assert!((a - b).abs() < 1e-12 * b.abs().max(1e-3));
        }
    }
    let f = PowerSeries::from_real(&[1.0, -1.0]).unwrap();
    let m = miller_power(&f, -0.5, 500).unwrap().real();
    let w = fbdf_weights(1, 0.5, 500).unwrap();
    let inv = conv_inverse(&PowerSeries::from_real(w.mu().unwrap()).unwrap(), 500).unwrap().real();
    for (a, b) in inv.iter().zip(&m) {
        assert!((a - b).abs() < 1e-13);
    }
}

#[test]
fn fbdf1_miller_equals_recursion() {
    for &alpha in &[0.05, 0.3, 0.5, 0.77, 0.99] {
        let miller = fbdf_weights(1, alpha, 1000).unwrap();
        let rec = fbdf1_mu_recursion(alpha, 1000);
        for (a, b) in miller.mu().unwrap().iter().zip(&rec) {
            assert!((a - b).abs() <= 1e-13 * b.abs().max(1e-300) + 1e-300, "alpha={alpha}");
        }
    }
}

#[test]
fn fbdf1_sign_pattern() {
    let w = fbdf_weights(1, 0.4, 5000).unwrap();
    let mu = w.mu().unwrap();
    assert!(mu[0] == 1.0);
    assert!(mu[1..].iter().all(|&m| m < 0.0));
    let mut partial = 0.0;
    let mut prev = f64::INFINITY;
    for &m in mu {
        partial += m;
        assert!(partial > 0.0 && partial < prev);
        prev = partial;
    }
}

#[test]
fn fbdf2_sign_pattern_and_vanishing_sum() {
    for &alpha in &[0.3, 0.5, 0.7, 0.9] {
        let w = fbdf_weights(2, alpha, 10_001).unwrap();
        let mu = w.mu().unwrap();
        assert!(mu[0] > 0.0 && mu[1] < 0.0);
        assert!(mu[4..].iter().all(|&m| m < 0.0), "alpha={alpha}");
        let mut partial: f64 = mu[..4].iter().sum();
        let mut prev = partial.abs();
        for &m in &mu[4..] {
            partial += m;
            assert!(partial.abs() <= prev);
            prev = partial.abs();
        }
        if alpha >= 0.5 {
            assert!(partial.abs() < 1e-2, "alpha={alpha}: {partial}");
        }
        // The partial sums behave like N^(-alpha)/Gamma(1-alpha).
        let lead = 10_000f64.powf(-alpha) / gamma(1.0 - alpha).unwrap();
        assert!((partial / lead - 1.0).abs() < 0.01, "alpha={alpha}: {partial} vs {lead}");
    }
}

#[test]
fn omega_asymptotics() {
    for &alpha in &[0.3, 0.5, 0.8] {
        let w = fbdf_weights(1, alpha, 10_001).unwrap();
        let n = 10_000f64;
        let want = n.powf(alpha - 1.0) / gamma(alpha).unwrap();
        assert!((w.omega().unwrap()[10_000] / want - 1.0).abs() < 0.01);
    }
}

#[test]
fn l1_telescoping() {
    for &alpha in &[0.1, 0.5, 0.9] {
        let w = l1_weights(alpha, 5000).unwrap();
        let sigma = w.sigma.as_ref().unwrap();
        let mut partial = 0.0;
        for (n, &m) in w.mu().unwrap().iter().enumerate() {
            partial += m;
            let s = sigma[n + 1];
            assert!(((partial - s) / s).abs() < 1e-12, "alpha={alpha} n={n}: {partial} vs {s}");
        }
    }
}

#[test]
fn alpha_diff_stores_kernel() {
    let w = alpha_diff_weights(0.5, 6).unwrap();
    assert!(w.omega.is_none());
    let k = w.mu().unwrap();
    assert_eq!(k[0], 1.0);
    assert!((k[1] - 0.5).abs() < 1e-16);
    assert!((k[2] - 0.375).abs() < 1e-16);
}

#[test]
fn invalid_alpha_rejected() {
    for scheme in SchemeId::ALL {
        assert!(scheme_weights(scheme, 0.0, 4).is_err());
        assert!(scheme_weights(scheme, 1.5, 4).is_err());
        assert!(scheme_weights(scheme, 0.5, 0).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inverse_roundtrip(head in 0.2f64..3.0, tail in proptest::collection::vec(-1.0f64..1.0, 1..40), n in 5usize..120) {
        let mut c = vec![head];
        // Decaying coefficients keep the inverse bounded so that the
        // roundtrip error is measured on O(1) numbers.
        c.extend(tail.iter().enumerate().map(|(i, &t)| t * head * 0.5f64.powi(i as i32 + 1)));
        let u = PowerSeries::from_real(&c).unwrap();
        let back = conv_inverse(&conv_inverse(&u, n).unwrap(), n).unwrap().real();
        for k in 0..n {
            let want = if k < c.len() { c[k] } else { 0.0 };
            prop_assert!((back[k] - want).abs() < 1e-12 * head.max(1.0));
        }
    }

    #[test]
    fn miller_power_composes(alpha in -0.95f64..0.95, beta in -0.95f64..0.95) {
        // (f^a)^b = f^(ab) for f = (1 - z)(1 - z/3)
        let f = PowerSeries::from_real(&[1.0, -4.0 / 3.0, 1.0 / 3.0]).unwrap();
        let lhs = miller_power(&miller_power(&f, alpha, 60).unwrap(), beta, 60).unwrap().real();
        let rhs = miller_power(&f, alpha * beta, 60).unwrap().real();
        for (a, b) in lhs.iter().zip(&rhs) {
            prop_assert!((a - b).abs() < 1e-11 * b.abs().max(1.0));
        }
    }

    #[test]
    fn truncated_gf_matches_closed_form_inside_disk(alpha in 0.05f64..0.99, r in 0.0f64..0.8, th in -3.1f64..3.1) {
        let z = Complex64::from_polar(r, th);
        for scheme in [SchemeId::FBdf1, SchemeId::FBdf2, SchemeId::FAdams2] {
            let w = scheme_weights(scheme, alpha, 300).unwrap();
            let v = generating_fn_eval(&w, Sequence::Mu, z).unwrap();
            let exact = mlstab::weights::closed_form_mu(scheme, alpha, z).unwrap();
            prop_assert!((v.value - exact).norm() < 1e-12 + v.tail_bound.unwrap());
        }
    }
}
