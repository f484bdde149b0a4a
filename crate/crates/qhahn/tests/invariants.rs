//! Cross-module invariants: boundary conditions of the verified weights,
//! degree orthogonality, positivity on supports, the behaviour of the
//! weight at the origin, and classification scale invariance.

use proptest::prelude::*;
use qhahn::classify::{case_invariants, classify, enumerate_scenarios};
use qhahn::eht::{make_eht, monic_solution};
use qhahn::fixtures::positive_fixtures;
use qhahn::orth::{enumerate_support, gram_matrix, Thresholds};
use qhahn::qcore::{QParam, RealPolynomial};
use qhahn::weight::{closed_form_weight, eval_weight, zero_limit_class, ZeroLimit};

fn qp() -> QParam {
    QParam::new(0.5).unwrap()
}

/// For the finite-interval kinds, sigma1 rho x^k vanishes at the interval
/// endpoints (exactly, at sigma-root endpoints) and the boundary quantity
/// decays along the support towards an interior limit point.
#[test]
fn boundary_conditions_hold_for_finite_interval_kinds() {
    for fx in positive_fixtures().iter().filter(|f| f.expected_kind <= 3) {
        let spec = fx.spec(qp());
        let s = enumerate_scenarios(&spec)
            .into_iter()
            .find(|s| s.rule_id == fx.rule_id)
            .unwrap();
        let wf = closed_form_weight(&spec, classify(&spec), &s).unwrap();
        let n_max = fx.expected_n.map(|n| n as u32).unwrap_or(6);
        let support = enumerate_support(&s, &spec, &wf, n_max, spec.params()).unwrap();
        for k in 0..=6i32 {
            let bq = |x: f64| {
                let rho = eval_weight(&wf, x, spec.params()).unwrap_or(0.0);
                (spec.sigma1().eval(x) * rho * x.powi(k)).abs()
            };
            let max = support
                .points
                .iter()
                .map(|p| bq(p.value))
                .fold(0.0f64, f64::max)
                .max(1e-300);
            match s.kind {
                1 | 2 => {
                    // endpoints are sigma1 roots; the boundary quantity is
                    // exactly zero there.
                    if let qhahn::classify::Endpoint::Finite(b) = s.interval.1 {
                        assert!(bq(b) < 1e-8 * max, "{} k={k} at b", fx.name);
                    }
                    if let qhahn::classify::Endpoint::Finite(a) = s.interval.0 {
                        if a != 0.0 {
                            assert!(bq(a) < 1e-8 * max, "{} k={k} at a", fx.name);
                        } else {
                            // limit along the support: 30 lattice steps in
                            let gen = s.support[0].generator;
                            let deep = spec.q().powi(30) * gen;
                            assert!(bq(deep) < 1e-8 * max, "{} k={k} deep", fx.name);
                        }
                    }
                }
                3 => {
                    // the mirrored boundary pair: sigma2 rho x^k at the lower
                    // endpoint, sigma1(qx) rho(qx) x^k at the upper.
                    let (qhahn::classify::Endpoint::Finite(a), qhahn::classify::Endpoint::Finite(b)) =
                        s.interval
                    else {
                        panic!("finite chain has finite endpoints")
                    };
                    let rho_a = eval_weight(&wf, a, spec.params()).unwrap();
                    let lower = (spec.sigma2().eval(a) * rho_a * a.powi(k)).abs();
                    assert!(lower < 1e-8 * max, "{} k={k} lower", fx.name);
                    let q = spec.q();
                    let rho_qb = eval_weight(&wf, q * b, spec.params()).unwrap();
                    let upper = (spec.sigma1().eval(q * b) * rho_qb * b.powi(k)).abs();
                    assert!(upper < 1e-8 * max, "{} k={k} upper", fx.name);
                }
                _ => unreachable!(),
            }
        }
    }
}

/// I(x^m P_n) = 0 for m < n: orthogonality against the raw monomial ladder,
/// not just against other solutions.
#[test]
fn degree_orthogonality_against_monomials() {
    for fx in positive_fixtures().iter().filter(|f| f.orthogonality.is_some()) {
        let spec = fx.spec(qp());
        let s = enumerate_scenarios(&spec)
            .into_iter()
            .find(|s| s.rule_id == fx.rule_id)
            .unwrap();
        let wf = closed_form_weight(&spec, classify(&spec), &s).unwrap();
        let n_max = fx.expected_n.map(|n| (n as u32).min(6)).unwrap_or(6);
        let support = enumerate_support(&s, &spec, &wf, n_max, spec.params()).unwrap();
        let report = gram_matrix(&spec, &wf, &support, &s, n_max, Thresholds::default()).unwrap();
        for n in 1..=n_max {
            let poly = monic_solution(&spec, n).unwrap();
            for m in 0..n {
                let mut acc = 0.0;
                let mut moment2m = 0.0;
                for (p, w) in support.points.iter().zip(&support.weights) {
                    acc += w * (p.value.powi(m as i32) * poly.eval(p.value));
                    moment2m += w * p.value.powi(2 * m as i32);
                }
                // normalized against the Cauchy-Schwarz bound
                let scale = (moment2m * report.gram[n as usize][n as usize])
                    .sqrt()
                    .max(1e-300);
                assert!(
                    acc.abs() / scale < 1e-8,
                    "{}: <x^{m}, P_{n}> = {acc} (scale {scale})",
                    fx.name
                );
            }
        }
    }
}

/// The instantiated weight is strictly positive at every support point of
/// every positive-theorem scenario.
#[test]
fn weight_positive_on_every_support() {
    for fx in &positive_fixtures() {
        let spec = fx.spec(qp());
        let s = enumerate_scenarios(&spec)
            .into_iter()
            .find(|s| s.rule_id == fx.rule_id)
            .unwrap();
        let wf = closed_form_weight(&spec, classify(&spec), &s).unwrap();
        let n_max = fx.expected_n.map(|n| n as u32).unwrap_or(6);
        let support = enumerate_support(&s, &spec, &wf, n_max, spec.params()).unwrap();
        for p in &support.points {
            let rho = eval_weight(&wf, p.value, spec.params()).unwrap();
            assert!(rho > 0.0, "{}: rho({}) = {rho}", fx.name, p.value);
        }
        assert!(support.weights.iter().all(|&w| w > 0.0), "{}", fx.name);
    }
}

/// The origin-limit verdict agrees with the actual decay of the weight
/// along the one-sided support for the zero classes.
#[test]
fn zero_limit_matches_observed_decay() {
    // little q-Jacobi classic: y0 = a = 0.5 inside (0,1) -> vanishes.
    let fx = positive_fixtures()
        .into_iter()
        .find(|f| f.name == "little-q-jacobi/classic")
        .unwrap();
    let spec = fx.spec(qp());
    let inv = case_invariants(&spec).unwrap();
    assert_eq!(zero_limit_class(&inv).unwrap(), ZeroLimit::Vanishes);
    let s = enumerate_scenarios(&spec).into_iter().next().unwrap();
    let wf = closed_form_weight(&spec, classify(&spec), &s).unwrap();
    let near = eval_weight(&wf, 0.5f64.powi(40), spec.params()).unwrap();
    let at_gen = eval_weight(&wf, 1.0, spec.params()).unwrap();
    assert!(near < 1e-8 * at_gen);
}

proptest! {
    // The equation is homogeneous: a common positive rescaling of
    // (sigma1, tau) never moves the class tag.
    #[test]
    fn classification_invariant_under_rescaling(
        scale in 1e-6f64..1e6,
        idx in 0usize..26,
    ) {
        let fixtures = positive_fixtures();
        let fx = &fixtures[idx % fixtures.len()];
        let spec = fx.spec(qp());
        let scaled = make_eht(
            spec.sigma1().scale(scale),
            spec.tau().scale(scale),
            *spec.params(),
        )
        .unwrap();
        prop_assert_eq!(classify(&spec), classify(&scaled));
    }

    // Monic solutions are insensitive to the same rescaling.
    #[test]
    fn monic_solutions_invariant_under_rescaling(scale in 1e-3f64..1e3) {
        let s1 = RealPolynomial::new(vec![-2.0, 2.0, 4.0]);
        let tau = RealPolynomial::new(vec![2.0, 6.0]);
        let base = make_eht(s1.clone(), tau.clone(), qp()).unwrap();
        let scaled = make_eht(s1.scale(scale), tau.scale(scale), qp()).unwrap();
        for n in 0..=5u32 {
            let a = monic_solution(&base, n).unwrap();
            let b = monic_solution(&scaled, n).unwrap();
            for k in 0..=n as usize {
                prop_assert!((a.coeff(k) - b.coeff(k)).abs() <= 1e-10 * a.coeff_scale().max(1.0));
            }
        }
    }
}
