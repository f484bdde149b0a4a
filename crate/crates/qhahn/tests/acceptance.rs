//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measured figure. Thresholds are pinned in the constants below.
//!
//!  1. classification of all 17 families at classic parameters (10 classes)
//!  2. scenario kinds/supports for every positive rule; empty lists for
//!     every rejected configuration
//!  3. Pearson residual of every instantiated weight on its support
//!  4. closed-form weight against the Pearson-recursion oracle
//!  5. Gram off-diagonals for the infinite and finite family lists
//!  6. norm-ratio constancy against the printed squared norms
//!  7. the extended-parameter regions re-run through criteria 3-5
//!  8. difference-operator solver against the Gram-Schmidt oracle
//!  9. general eigenvalue formula against every family display
//! 10. q-arithmetic operator identities and integral additivity

use qhahn::classify::{classify, enumerate_scenarios, rules::enumerate_scenarios_detailed};
use qhahn::eht::{lambda_n, monic_solution, EHTSpec};
use qhahn::families::{lambda_display, make_family};
use qhahn::fixtures::{
    negative_fixtures, norm_fixtures, positive_fixtures, Fixture, OFF_DIAG_FINITE,
};
use qhahn::orth::{enumerate_support, gram_schmidt_monic, verify_orthogonality, Thresholds};
use qhahn::qcore::{qderivative, qintegral, QFlavor, QInterval, QParam, RealPolynomial};
use qhahn::weight::{closed_form_weight, eval_weight, pearson_residual, weight_by_recursion};
use std::time::Instant;

const PEARSON_RESIDUAL_MAX: f64 = 1e-10;
const ORACLE_AGREEMENT_REL: f64 = 1e-9;
const NORM_SPREAD_MAX: f64 = 1e-6;
const SOLVER_ORACLE_COEFF: f64 = 1e-9;
const LAMBDA_AGREEMENT_REL: f64 = 1e-12;

fn qp() -> QParam {
    QParam::new(0.5).unwrap()
}

fn run_n_max(fx: &Fixture) -> u32 {
    match fx.expected_n {
        Some(n) => (n as u32).min(6),
        None => 6,
    }
}

fn weight_for(spec: &EHTSpec, fx: &Fixture) -> (qhahn::classify::OrthScenario, qhahn::weight::WeightForm) {
    let scenarios = enumerate_scenarios(spec);
    let s = scenarios
        .into_iter()
        .find(|s| s.rule_id == fx.rule_id)
        .unwrap_or_else(|| panic!("{}: rule {} did not fire", fx.name, fx.rule_id));
    let wf = closed_form_weight(spec, classify(spec), &s).expect("weight instantiation");
    (s, wf)
}

#[test]
fn criterion_01_classification_suite() {
    let started = Instant::now();
    let fixtures = positive_fixtures();
    let mut classes_seen = std::collections::HashSet::new();
    let mut families_seen = std::collections::HashSet::new();
    for fx in fixtures.iter().filter(|f| f.name.ends_with("/classic")) {
        let Some(family) = fx.family else { continue };
        let fs = make_family(family, &fx.params, qp()).expect(fx.name);
        let got = classify(&fs.spec);
        assert_eq!(got, fs.expected_class, "{}", fx.name);
        classes_seen.insert(got);
        families_seen.insert(family);
    }
    assert_eq!(families_seen.len(), 17, "all families classified");
    assert_eq!(classes_seen.len(), 10, "all ten classes exercised");
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "criterion 1 (classification, 17 families / 10 classes, {:?}): PASS",
        elapsed
    );
}

#[test]
fn criterion_02_scenario_suite() {
    let started = Instant::now();
    let positives = positive_fixtures();
    for fx in &positives {
        let spec = fx.spec(qp());
        let scenarios = enumerate_scenarios(&spec);
        let s = scenarios
            .iter()
            .find(|s| s.rule_id == fx.rule_id)
            .unwrap_or_else(|| {
                panic!(
                    "{}: expected rule {}, fired {:?}",
                    fx.name,
                    fx.rule_id,
                    scenarios.iter().map(|s| s.rule_id).collect::<Vec<_>>()
                )
            });
        assert_eq!(s.kind, fx.expected_kind, "{}", fx.name);
        assert_eq!(s.n_points, fx.expected_n, "{}", fx.name);
        let mut got: Vec<f64> = s.support.iter().map(|b| b.generator).collect();
        let mut want = fx.expected_generators.clone();
        got.sort_by(|a, b| a.partial_cmp(b).unwrap());
        want.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(got.len(), want.len(), "{}", fx.name);
        for (g, w) in got.iter().zip(&want) {
            assert!(
                (g - w).abs() <= 1e-12 * w.abs().max(1.0),
                "{}: generator {g} vs {w}",
                fx.name
            );
        }
    }
    let negatives = negative_fixtures();
    assert!(negatives.len() >= 20);
    for nf in &negatives {
        let e = enumerate_scenarios_detailed(&nf.spec);
        assert!(
            e.scenarios.is_empty(),
            "{}: unexpectedly fired {:?}",
            nf.name,
            e.scenarios.iter().map(|s| s.rule_id).collect::<Vec<_>>()
        );
        assert!(
            e.rejected.contains(&nf.rule_id),
            "{}: rejection {} not named (got {:?})",
            nf.name,
            nf.rule_id,
            e.rejected
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    println!(
        "criterion 2 (scenarios, {} positive + {} rejected, {:?}): PASS",
        positives.len(),
        negatives.len(),
        elapsed
    );
}

#[test]
fn criterion_03_pearson_residual() {
    let mut worst: (f64, &str) = (0.0, "");
    for fx in &positive_fixtures() {
        let spec = fx.spec(qp());
        let (s, wf) = weight_for(&spec, fx);
        let support = enumerate_support(&s, &spec, &wf, run_n_max(fx), spec.params())
            .unwrap_or_else(|e| panic!("{}: {e}", fx.name));
        let step = (support.points.len() / 30).max(1);
        for p in support.points.iter().step_by(step).take(30) {
            let r = pearson_residual(&spec, &wf, p.value)
                .unwrap_or_else(|e| panic!("{} at {}: {e}", fx.name, p.value));
            if r > worst.0 {
                worst = (r, fx.name);
            }
            assert!(
                r < PEARSON_RESIDUAL_MAX,
                "{}: residual {r} at x = {}",
                fx.name,
                p.value
            );
        }
    }
    println!(
        "criterion 3 (Pearson residual < {PEARSON_RESIDUAL_MAX:.0e}, worst {:.2e} at {}): PASS",
        worst.0, worst.1
    );
}

#[test]
fn criterion_04_weight_oracle_equivalence() {
    let mut worst: (f64, &str) = (0.0, "");
    for fx in &positive_fixtures() {
        let spec = fx.spec(qp());
        let (s, wf) = weight_for(&spec, fx);
        for branch in &s.support {
            let x0 = branch.generator;
            let anchor = eval_weight(&wf, x0, spec.params()).expect(fx.name);
            assert!(anchor > 0.0, "{}: anchor weight must be positive", fx.name);
            // 20 lattice points per branch: descending for q-power branches,
            // ascending for 1/q chains, both directions for bilateral ones.
            let exponents: Vec<i64> = match branch.direction {
                qhahn::classify::Direction::QPower => (0..20).collect(),
                qhahn::classify::Direction::QInversePower => {
                    let hi = fx.expected_n.map(|n| -n).unwrap_or(-19);
                    (hi..=0).collect()
                }
                qhahn::classify::Direction::BilateralPower => (-10..10).collect(),
            };
            for &k in &exponents {
                let x = spec.q().powi(k as i32) * x0;
                let closed = eval_weight(&wf, x, spec.params()).expect(fx.name);
                let rec = weight_by_recursion(&spec, x0, anchor, k).expect(fx.name);
                let rel = (closed - rec).abs() / closed.abs().max(rec.abs()).max(1e-300);
                if rel > worst.0 {
                    worst = (rel, fx.name);
                }
                assert!(
                    rel <= ORACLE_AGREEMENT_REL,
                    "{}: closed {closed} vs recursion {rec} at k = {k}",
                    fx.name
                );
            }
        }
    }
    println!(
        "criterion 4 (weight oracle, ratio drift < {ORACLE_AGREEMENT_REL:.0e}, worst {:.2e} at {}): PASS",
        worst.0, worst.1
    );
}

#[test]
fn criterion_05_orthogonality() {
    let mut checked = 0;
    for fx in &positive_fixtures() {
        let Some(threshold) = fx.orthogonality else {
            continue;
        };
        let started = Instant::now();
        let spec = fx.spec(qp());
        let (s, wf) = weight_for(&spec, fx);
        let n_max = run_n_max(fx);
        let thresholds = Thresholds {
            off_diag: threshold,
            ..Thresholds::default()
        };
        let report = verify_orthogonality(&spec, &wf, &s, None, n_max, spec.params(), thresholds)
            .unwrap_or_else(|e| panic!("{}: {e}", fx.name));
        assert!(
            report.verdict,
            "{}: off_diag_max = {} over threshold {threshold}",
            fx.name, report.off_diag_max
        );
        if fx.is_finite() {
            assert!(report.off_diag_max < OFF_DIAG_FINITE, "{}", fx.name);
        }
        let elapsed = started.elapsed();
        assert!(elapsed.as_secs_f64() < 2.0, "{}: took {elapsed:?}", fx.name);
        checked += 1;
    }
    assert!(checked >= 14, "expected at least 14 orthogonality runs");
    println!("criterion 5 (orthogonality, {checked} scenarios): PASS");
}

#[test]
fn criterion_06_norm_ratio_constancy() {
    let mut worst: (f64, &str) = (0.0, "");
    let fixtures = norm_fixtures();
    assert_eq!(fixtures.len(), 14);
    for (family, params) in &fixtures {
        let fs = make_family(*family, params, qp()).expect("norm fixture");
        let scenarios = enumerate_scenarios(&fs.spec);
        let s = scenarios.first().expect("scenario for norm fixture");
        let wf = closed_form_weight(&fs.spec, classify(&fs.spec), s).expect("weight");
        let n_max = match s.n_points {
            Some(n) => (n as u32).min(6),
            None => 6,
        };
        let report = verify_orthogonality(
            &fs.spec,
            &wf,
            s,
            Some((*family, params)),
            n_max,
            fs.spec.params(),
            Thresholds::default(),
        )
        .unwrap_or_else(|e| panic!("{family}: {e}"));
        let spread = report.ratio_spread.expect("ratios filled");
        if spread > worst.0 {
            worst = (spread, family.slug());
        }
        assert!(
            spread < NORM_SPREAD_MAX,
            "{family}: ratio spread {spread} (ratios {:?})",
            report.norm_ratios
        );
    }
    println!(
        "criterion 6 (norm ratios, 14 families, worst spread {:.2e} at {}): PASS",
        worst.0, worst.1
    );
}

#[test]
fn criterion_07_extended_parameter_claims() {
    let mut names = Vec::new();
    for fx in positive_fixtures().iter().filter(|f| f.extended_claim) {
        let spec = fx.spec(qp());
        let (s, wf) = weight_for(&spec, fx);
        let n_max = run_n_max(fx);
        // criterion 3 at this sample
        let support = enumerate_support(&s, &spec, &wf, n_max, spec.params()).expect(fx.name);
        let step = (support.points.len() / 30).max(1);
        for p in support.points.iter().step_by(step).take(30) {
            let r = pearson_residual(&spec, &wf, p.value).expect(fx.name);
            assert!(r < PEARSON_RESIDUAL_MAX, "{}: residual {r}", fx.name);
        }
        // criterion 4 along the first branch
        let x0 = s.support[0].generator;
        let anchor = eval_weight(&wf, x0, spec.params()).expect(fx.name);
        let ks: Vec<i64> = match s.support[0].direction {
            qhahn::classify::Direction::QInversePower => {
                (fx.expected_n.map(|n| -n).unwrap_or(-19)..=0).collect()
            }
            _ => (0..20).collect(),
        };
        for &k in &ks {
            let x = spec.q().powi(k as i32) * x0;
            let closed = eval_weight(&wf, x, spec.params()).expect(fx.name);
            let rec = weight_by_recursion(&spec, x0, anchor, k).expect(fx.name);
            assert!(
                (closed - rec).abs() <= ORACLE_AGREEMENT_REL * closed.abs().max(rec.abs()),
                "{}",
                fx.name
            );
        }
        // criterion 5 verdict
        let thresholds = Thresholds {
            off_diag: fx.orthogonality.expect("extended fixtures carry thresholds"),
            ..Thresholds::default()
        };
        let report =
            verify_orthogonality(&spec, &wf, &s, None, n_max, spec.params(), thresholds)
                .expect(fx.name);
        assert!(report.verdict, "{}: {}", fx.name, report.off_diag_max);
        names.push(fx.name);
    }
    assert!(names.len() >= 7, "expected 7 extended-region samples, got {names:?}");
    println!(
        "criterion 7 (extended regions: {}): PASS",
        names.join(", ")
    );
}

#[test]
fn criterion_08_solver_oracle_equivalence() {
    let mut count = 0;
    for fx in &positive_fixtures() {
        let spec = fx.spec(qp());
        let (s, wf) = weight_for(&spec, fx);
        let n_max = run_n_max(fx);
        let support = enumerate_support(&s, &spec, &wf, n_max, spec.params()).expect(fx.name);
        let gs = gram_schmidt_monic(&support, n_max).expect(fx.name);
        for n in 0..=n_max {
            let direct = monic_solution(&spec, n).expect(fx.name);
            let scale = direct.coeff_scale().max(1.0);
            for k in 0..=n as usize {
                let delta = (gs[n as usize].coeff(k) - direct.coeff(k)).abs();
                assert!(
                    delta <= SOLVER_ORACLE_COEFF * scale,
                    "{}: n = {n}, coeff {k}: {} vs {}",
                    fx.name,
                    gs[n as usize].coeff(k),
                    direct.coeff(k)
                );
            }
        }
        count += 1;
    }
    assert!(count >= 10);
    println!("criterion 8 (solver vs Gram-Schmidt, {count} fixtures): PASS");
}

#[test]
fn criterion_09_lambda_agreement() {
    let mut checked = 0;
    for fx in &positive_fixtures() {
        let Some(family) = fx.family else { continue };
        let fs = make_family(family, &fx.params, qp()).expect(fx.name);
        for n in 0..=10u32 {
            let display = lambda_display(family, &fx.params, 0.5, n).expect(fx.name);
            let general = lambda_n(&fs.spec, n);
            assert!(
                (display - general).abs() <= LAMBDA_AGREEMENT_REL * display.abs().max(1e-30),
                "{}: n = {n}, display {display} vs general {general}",
                fx.name
            );
        }
        checked += 1;
    }
    println!("criterion 9 (eigenvalue displays, {checked} fixtures, n <= 10): PASS");
}

#[test]
fn criterion_10_qcore_identities() {
    let started = Instant::now();
    let samples = [
        RealPolynomial::new(vec![1.0, -0.5, 0.25, 2.0, 0.0, 1.5, -3.0, 0.75, 0.125]),
        RealPolynomial::new(vec![0.0, 1.0, 0.0, -1.0, 0.0, 1.0]),
        RealPolynomial::new(vec![2.0, 3.0]),
        RealPolynomial::monomial(8),
    ];
    for q in [0.3, 0.5, 0.9] {
        for p in &samples {
            // D_q p = D_{1/q} p + (q-1) x D_q D_{1/q} p
            let dq = qderivative(p, q).unwrap();
            let dqi = qderivative(p, 1.0 / q).unwrap();
            let cross = qderivative(&dqi, q).unwrap().mul_linear(0.0).scale(q - 1.0);
            let rhs = dqi.add(&cross);
            let scale = dqi.coeff_scale().max(cross.coeff_scale()).max(1.0);
            for k in 0..=dq.degree().max(rhs.degree()) {
                assert!((dq.coeff(k) - rhs.coeff(k)).abs() <= 1e-13 * scale);
            }
            // D_q D_{1/q} p = q^{-1} D_{1/q} D_q p
            let a = qderivative(&qderivative(p, 1.0 / q).unwrap(), q).unwrap();
            let b = qderivative(&qderivative(p, q).unwrap(), 1.0 / q)
                .unwrap()
                .scale(1.0 / q);
            let sc = a.coeff_scale().max(b.coeff_scale()).max(1.0);
            for k in 0..=a.degree().max(b.degree()) {
                assert!((a.coeff(k) - b.coeff(k)).abs() <= 1e-13 * sc);
            }
        }
        // integral additivity on (a, b) with 0 < a < b
        let qparam = QParam::new(q).unwrap();
        let f = |x: f64| 1.25 * x * x - 0.5 * x + 2.0;
        let whole = qintegral(f, QInterval::PositivePair(0.25, 1.75), QFlavor::Q, &qparam)
            .unwrap()
            .value;
        let upper = qintegral(f, QInterval::ZeroTo(1.75), QFlavor::Q, &qparam)
            .unwrap()
            .value;
        let lower = qintegral(f, QInterval::ZeroTo(0.25), QFlavor::Q, &qparam)
            .unwrap()
            .value;
        let expect = upper - lower;
        assert!((whole - expect).abs() <= 1e-12 * expect.abs().max(1.0));
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 0.1, "took {elapsed:?}");
    println!("criterion 10 (q-arithmetic identities, {elapsed:?}): PASS");
}
