//! Ready-made parameter fixtures for the verification suites: one sample per
//! positive orthogonality rule (family-based where a named family realizes
//! the rule, raw coefficients otherwise) and one sample per explicitly
//! rejected configuration. Samples sit interior to their regions, away from
//! every other rule's inequalities, so a fixture exercises exactly the rule
//! it names.

use crate::eht::{make_eht, EHTSpec};
use crate::families::{make_family, FamilyId, Params};
use crate::qcore::{QParam, RealPolynomial};

/// One positive-scenario fixture at q = 1/2.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    /// The rule expected to fire.
    pub rule_id: &'static str,
    pub family: Option<FamilyId>,
    pub params: Params,
    /// Raw (sigma1, tau) coefficient lists for fixtures no family reaches.
    pub raw: Option<(Vec<f64>, Vec<f64>)>,
    pub expected_kind: u8,
    /// Support branch generators, unordered.
    pub expected_generators: Vec<f64>,
    pub expected_n: Option<i64>,
    /// Member of the extended-parameter claims suite.
    pub extended_claim: bool,
    /// Member of the orthogonality acceptance list with its threshold.
    pub orthogonality: Option<f64>,
}

impl Fixture {
    pub fn spec(&self, qp: QParam) -> EHTSpec {
        match (&self.family, &self.raw) {
            (Some(id), _) => make_family(*id, &self.params, qp).expect("fixture params").spec,
            (None, Some((s1, tau))) => make_eht(
                RealPolynomial::new(s1.clone()),
                RealPolynomial::new(tau.clone()),
                qp,
            )
            .expect("fixture coefficients"),
            _ => unreachable!("fixture carries a family or raw coefficients"),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.expected_n.is_some()
    }
}

fn pmap(kv: &[(&str, f64)]) -> Params {
    kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Tolerance for the normalized off-diagonal Gram entries of the infinite
/// supports.
pub const OFF_DIAG_INFINITE: f64 = 1e-8;
/// Tolerance for the finite (exact-sum) supports.
pub const OFF_DIAG_FINITE: f64 = 1e-10;

/// The positive fixtures: every positive rule of the table appears at least
/// once (the two-sided constant-sigma2 rule twice, through both families
/// that realize it).
pub fn positive_fixtures() -> Vec<Fixture> {
    let mut v = Vec::new();
    v.push(Fixture {
        name: "big-q-jacobi/classic",
        rule_id: "jj-two-sided",
        family: Some(FamilyId::BigQJacobi),
        params: pmap(&[("a", 0.5), ("b", 0.5), ("c", -0.5)]),
        raw: None,
        expected_kind: 1,
        expected_generators: vec![-0.25, 0.25],
        expected_n: None,
        extended_claim: false,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    v.push(Fixture {
        name: "big-q-jacobi/neg-b",
        rule_id: "jj-two-sided-neg",
        family: Some(FamilyId::BigQJacobi),
        params: pmap(&[("a", 0.5), ("b", -0.25), ("c", -0.5)]),
        raw: None,
        expected_kind: 1,
        expected_generators: vec![-0.25, 0.25],
        expected_n: None,
        extended_claim: true,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    v.push(Fixture {
        name: "q-hahn/classic",
        rule_id: "jj-finite-inner",
        family: Some(FamilyId::QHahn),
        params: pmap(&[("alpha", 0.5), ("beta", 0.5), ("N", 5.0)]),
        raw: None,
        expected_kind: 3,
        expected_generators: vec![1.0],
        expected_n: Some(5),
        extended_claim: false,
        orthogonality: Some(OFF_DIAG_FINITE),
    });
    v.push(Fixture {
        name: "q-hahn/wide",
        rule_id: "jj-finite-outer",
        family: Some(FamilyId::QHahn),
        params: pmap(&[("alpha", 24.0), ("beta", 40.0), ("N", 3.0)]),
        raw: None,
        expected_kind: 3,
        expected_generators: vec![1.0],
        expected_n: Some(3),
        extended_claim: false,
        orthogonality: None,
    });
    v.push(Fixture {
        name: "q-hahn/neg-alpha",
        rule_id: "jj-finite-neg-asym",
        family: Some(FamilyId::QHahn),
        params: pmap(&[("alpha", -1.0), ("beta", 96.0), ("N", 5.0)]),
        raw: None,
        expected_kind: 3,
        expected_generators: vec![1.0],
        expected_n: Some(5),
        extended_claim: true,
        orthogonality: Some(OFF_DIAG_FINITE),
    });
    v.push(Fixture {
        name: "q-hahn/neg-beta",
        rule_id: "jj-finite-neg-root",
        family: Some(FamilyId::QHahn),
        params: pmap(&[("alpha", 0.5), ("beta", -1.0), ("N", 5.0)]),
        raw: None,
        expected_kind: 3,
        expected_generators: vec![1.0],
        expected_n: Some(5),
        extended_claim: true,
        orthogonality: Some(OFF_DIAG_FINITE),
    });
    v.push(Fixture {
        name: "little-q-jacobi/classic",
        rule_id: "zjj-one-sided",
        family: Some(FamilyId::LittleQJacobi),
        params: pmap(&[("a", 0.5), ("b", 0.5)]),
        raw: None,
        expected_kind: 2,
        expected_generators: vec![1.0],
        expected_n: None,
        extended_claim: false,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    v.push(Fixture {
        name: "little-q-jacobi/neg-b",
        rule_id: "zjj-one-sided-neg-root",
        family: Some(FamilyId::LittleQJacobi),
        params: pmap(&[("a", 0.5), ("b", -0.5)]),
        raw: None,
        expected_kind: 2,
        expected_generators: vec![1.0],
        expected_n: None,
        extended_claim: true,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    v.push(Fixture {
        name: "q-kravchuk/classic",
        rule_id: "zjj-finite",
        family: Some(FamilyId::QKravchuk),
        params: pmap(&[("p", 1.0), ("N", 5.0)]),
        raw: None,
        expected_kind: 3,
        expected_generators: vec![1.0],
        expected_n: Some(5),
        extended_claim: true,
        orthogonality: Some(OFF_DIAG_FINITE),
    });
    v.push(Fixture {
        name: "quantum-q-kravchuk/classic",
        rule_id: "jl-finite",
        family: Some(FamilyId::QuantumQKravchuk),
        params: pmap(&[("p", 128.0), ("N", 5.0)]),
        raw: None,
        expected_kind: 3,
        expected_generators: vec![1.0],
        expected_n: Some(5),
        extended_claim: false,
        orthogonality: Some(OFF_DIAG_FINITE),
    });
    v.push(Fixture {
        name: "affine-q-kravchuk/classic",
        rule_id: "lj-finite",
        family: Some(FamilyId::AffineQKravchuk),
        params: pmap(&[("p", 0.6), ("N", 5.0)]),
        raw: None,
        expected_kind: 3,
        expected_generators: vec![1.0],
        expected_n: Some(5),
        extended_claim: false,
        orthogonality: Some(OFF_DIAG_FINITE),
    });
    v.push(Fixture {
        name: "big-q-laguerre/classic",
        rule_id: "lj-two-sided",
        family: Some(FamilyId::BigQLaguerre),
        params: pmap(&[("a", 0.5), ("b", -0.5)]),
        raw: None,
        expected_kind: 1,
        expected_generators: vec![-0.25, 0.25],
        expected_n: None,
        extended_claim: false,
        orthogonality: None,
    });
    v.push(Fixture {
        name: "q-meixner/classic",
        rule_id: "jl-half-line",
        family: Some(FamilyId::QMeixner),
        params: pmap(&[("b", 0.5), ("c", 1.0)]),
        raw: None,
        expected_kind: 5,
        expected_generators: vec![1.0],
        expected_n: None,
        extended_claim: false,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    v.push(Fixture {
        name: "q-meixner/neg-b",
        rule_id: "jl-half-line-ext",
        family: Some(FamilyId::QMeixner),
        params: pmap(&[("b", -1.0), ("c", 0.5)]),
        raw: None,
        expected_kind: 5,
        expected_generators: vec![1.0],
        expected_n: None,
        extended_claim: true,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    v.push(Fixture {
        name: "al-salam-carlitz-1/classic",
        rule_id: "hj-two-sided",
        family: Some(FamilyId::AlSalamCarlitz1),
        params: pmap(&[("a", -1.0)]),
        raw: None,
        expected_kind: 1,
        expected_generators: vec![-1.0, 1.0],
        expected_n: None,
        extended_claim: false,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    v.push(Fixture {
        name: "al-salam-carlitz-2/classic",
        rule_id: "jh-half-line",
        family: Some(FamilyId::AlSalamCarlitz2),
        params: pmap(&[("a", 0.5)]),
        raw: None,
        expected_kind: 5,
        expected_generators: vec![1.0],
        expected_n: None,
        extended_claim: false,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    v.push(Fixture {
        name: "discrete-q-hermite-1/classic",
        rule_id: "hj-two-sided",
        family: Some(FamilyId::DiscreteQHermite1),
        params: pmap(&[]),
        raw: None,
        expected_kind: 1,
        expected_generators: vec![-1.0, 1.0],
        expected_n: None,
        extended_claim: false,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    v.push(Fixture {
        name: "discrete-q-hermite-2/classic",
        rule_id: "jh-full-line",
        family: Some(FamilyId::DiscreteQHermite2),
        params: pmap(&[]),
        raw: None,
        expected_kind: 7,
        expected_generators: vec![1.0, -1.0],
        expected_n: None,
        extended_claim: false,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    v.push(Fixture {
        name: "q-laguerre/classic",
        rule_id: "zjl-positive-lattice",
        family: Some(FamilyId::QLaguerre),
        params: pmap(&[("alpha", 0.5)]),
        raw: None,
        expected_kind: 6,
        expected_generators: vec![1.0],
        expected_n: None,
        extended_claim: false,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    v.push(Fixture {
        name: "q-charlier/classic",
        rule_id: "zjl-half-line",
        family: Some(FamilyId::QCharlier),
        params: pmap(&[("a", 1.0)]),
        raw: None,
        expected_kind: 5,
        expected_generators: vec![1.0],
        expected_n: None,
        extended_claim: false,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    v.push(Fixture {
        name: "alternative-q-charlier/classic",
        rule_id: "zbj-one-sided",
        family: Some(FamilyId::AlternativeQCharlier),
        params: pmap(&[("a", 1.0)]),
        raw: None,
        expected_kind: 2,
        expected_generators: vec![1.0],
        expected_n: None,
        extended_claim: false,
        orthogonality: None,
    });
    v.push(Fixture {
        name: "stieltjes-wigert/classic",
        rule_id: "zbl-positive-lattice",
        family: Some(FamilyId::StieltjesWigert),
        params: pmap(&[]),
        raw: None,
        expected_kind: 6,
        expected_generators: vec![1.0],
        expected_n: None,
        extended_claim: false,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    v.push(Fixture {
        name: "little-q-laguerre/classic",
        rule_id: "zlj-one-sided",
        family: Some(FamilyId::LittleQLaguerre),
        params: pmap(&[("a", 0.5)]),
        raw: None,
        expected_kind: 2,
        expected_generators: vec![1.0],
        expected_n: None,
        extended_claim: false,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    // Raw fixtures for the rules no registered family reaches.
    // Two-sided with a conjugate sigma2 pair: sigma1 = 4(x+1)(x-1/2),
    // tau = 6x + 2, giving sigma2 = -(x^2+1).
    v.push(Fixture {
        name: "raw/jj-complex",
        rule_id: "jj-two-sided-complex",
        family: None,
        params: pmap(&[]),
        raw: Some((vec![-2.0, 2.0, 4.0], vec![2.0, 6.0])),
        expected_kind: 1,
        expected_generators: vec![-1.0, 0.5],
        expected_n: None,
        extended_claim: true,
        orthogonality: Some(OFF_DIAG_INFINITE),
    });
    // Negative-axis branch plus the bilateral positive lattice:
    // sigma1 = x + 1/2, tau = -x/4 + 1/4, sigma2 = (x+1)(x+2)/8.
    v.push(Fixture {
        name: "raw/jl-neg-axis",
        rule_id: "jl-neg-axis-bilateral",
        family: None,
        params: pmap(&[]),
        raw: Some((vec![0.5, 1.0], vec![0.25, -0.25])),
        expected_kind: 4,
        expected_generators: vec![-0.5, 1.0],
        expected_n: None,
        extended_claim: false,
        orthogonality: None,
    });
    // Same shape with a conjugate sigma2 pair: sigma1 = x + 1/2,
    // tau = -x/2 + 1, sigma2 = (x^2+1)/4.
    v.push(Fixture {
        name: "raw/jl-complex",
        rule_id: "jl-bilateral-complex",
        family: None,
        params: pmap(&[]),
        raw: Some((vec![0.5, 1.0], vec![1.0, -0.5])),
        expected_kind: 4,
        expected_generators: vec![-0.5, 1.0],
        expected_n: None,
        extended_claim: false,
        orthogonality: None,
    });
    v
}

/// The norm-check fixtures: families with a printed squared norm, at
/// parameters keeping every factor of the display finite and nonzero.
pub fn norm_fixtures() -> Vec<(FamilyId, Params)> {
    vec![
        (
            FamilyId::BigQJacobi,
            pmap(&[("a", 0.5), ("b", 0.5), ("c", -0.5)]),
        ),
        (
            FamilyId::QHahn,
            pmap(&[("alpha", 0.6), ("beta", 0.7), ("N", 5.0)]),
        ),
        (FamilyId::LittleQJacobi, pmap(&[("a", 0.5), ("b", 0.5)])),
        (FamilyId::QMeixner, pmap(&[("b", 0.5), ("c", 1.0)])),
        (
            FamilyId::QuantumQKravchuk,
            pmap(&[("p", 128.0), ("N", 5.0)]),
        ),
        (FamilyId::QKravchuk, pmap(&[("p", 1.0), ("N", 5.0)])),
        (FamilyId::AffineQKravchuk, pmap(&[("p", 0.6), ("N", 5.0)])),
        (FamilyId::BigQLaguerre, pmap(&[("a", 0.5), ("b", -0.5)])),
        (FamilyId::AlSalamCarlitz1, pmap(&[("a", -1.0)])),
        (FamilyId::AlSalamCarlitz2, pmap(&[("a", 0.5)])),
        (FamilyId::QLaguerre, pmap(&[("alpha", 0.5)])),
        (FamilyId::QCharlier, pmap(&[("a", 1.0)])),
        (FamilyId::AlternativeQCharlier, pmap(&[("a", 1.0)])),
        (FamilyId::LittleQLaguerre, pmap(&[("a", 0.5)])),
    ]
}

/// A rejected configuration: concrete coefficients satisfying the stated
/// inequalities of one "fails to exist" case and no positive rule.
#[derive(Clone, Debug)]
pub struct NegativeFixture {
    pub name: &'static str,
    /// The rejection rule expected to match.
    pub rule_id: &'static str,
    pub spec: EHTSpec,
}

fn qp_half() -> QParam {
    QParam::new(0.5).unwrap()
}

/// Quadratic/quadratic nonzero-class equation with prescribed sigma1 roots
/// and sigma2 roots (q = 1/2). The shared constant term pins the sigma2
/// leading coefficient; the remaining tau data follows from the two
/// coefficient identities.
pub fn jj_from_roots(q: f64, a1: f64, b1: f64, r2a: f64, r2b: f64) -> EHTSpec {
    let h1 = 1.0 / (q * q);
    let sigma1 = RealPolynomial::new(vec![h1 * a1 * b1, -h1 * (a1 + b1), h1]);
    let h2 = a1 * b1 * h1 * q / (r2a * r2b);
    let c = 1.0 - 1.0 / q;
    let tau_d = (h2 / q - h1) / c;
    let sigma2_d = -h2 * (r2a + r2b);
    let tau_0 = (sigma2_d / q - sigma1.coeff(1)) / c;
    let tau = RealPolynomial::new(vec![tau_0, tau_d]);
    make_eht(sigma1, tau, qp_half()).expect("fixture equation")
}

/// Zero-class quadratic/quadratic equation with prescribed nonzero sigma1
/// root, asymptote and y-intercept (q = 1/2).
pub fn zjj_from_invariants(a1: f64, lambda: f64, y0: f64) -> EHTSpec {
    let q = 0.5;
    let h1 = 1.0 / (q * q);
    let sigma1 = RealPolynomial::new(vec![0.0, -h1 * a1, h1]);
    let c = 1.0 - 1.0 / q;
    // y0 = [1 - c tau0 / (a1 h1)] / q  and  q^2 lambda = h2 / (q h1).
    let tau_0 = a1 * h1 * (1.0 - q * y0) / c;
    let h2 = lambda * q * q * q * h1;
    let tau_d = (h2 / q - h1) / c;
    let tau = RealPolynomial::new(vec![tau_0, tau_d]);
    make_eht(sigma1, tau, qp_half()).expect("fixture equation")
}

/// Quadratic/linear nonzero-class equation with prescribed sigma1 root and
/// sigma2 roots (q = 1/2, sigma1'(0) = 1).
pub fn jl_from_roots(a1: f64, r2a: f64, r2b: f64) -> EHTSpec {
    let q = 0.5;
    let sigma1 = RealPolynomial::new(vec![-a1, 1.0]);
    let c = 1.0 - 1.0 / q;
    // sigma2(0) = q sigma1(0) fixes the leading coefficient.
    let h2 = -q * a1 / (r2a * r2b);
    let tau_d = h2 / (q * c);
    let sigma2_d = -h2 * (r2a + r2b);
    let tau_0 = (sigma2_d / q - 1.0) / c;
    let tau = RealPolynomial::new(vec![tau_0, tau_d]);
    make_eht(sigma1, tau, qp_half()).expect("fixture equation")
}

/// Constant-sigma1 equation with prescribed sigma2 roots and leading
/// coefficient (q = 1/2).
pub fn jh_from_roots(lead2: f64, r2a: f64, r2b: f64) -> EHTSpec {
    let q = 0.5;
    let s0 = lead2 * r2a * r2b / q;
    let sigma1 = RealPolynomial::constant(s0);
    let tau_d = lead2 / (q - 1.0);
    let tau_0 = lead2 * (r2a + r2b) / (1.0 - q);
    let tau = RealPolynomial::new(vec![tau_0, tau_d]);
    make_eht(sigma1, tau, qp_half()).expect("fixture equation")
}

/// Linear-sigma2 nonzero-class equation with prescribed sigma1 roots and
/// asymptote (q = 1/2, sigma1''(0)/2 = 1).
pub fn lj_from_roots(a1: f64, b1: f64, lambda: f64) -> EHTSpec {
    let q: f64 = 0.5;
    let sigma1 = RealPolynomial::new(vec![a1 * b1, -(a1 + b1), 1.0]);
    let c = 1.0 - 1.0 / q;
    let tau_d = -1.0 / c;
    let tau_0 = (a1 + b1 - lambda) / c;
    let tau = RealPolynomial::new(vec![tau_0, tau_d]);
    make_eht(sigma1, tau, qp_half()).expect("fixture equation")
}

/// Zero-class quadratic/linear equation with prescribed asymptote and
/// y-intercept (q = 1/2, sigma1 = x).
pub fn zjl_from_invariants(lambda: f64, y0: f64) -> EHTSpec {
    let q = 0.5;
    let sigma1 = RealPolynomial::new(vec![0.0, 1.0]);
    let c = 1.0 - 1.0 / q;
    let tau_0 = (q * y0 - 1.0) / c;
    let tau = RealPolynomial::new(vec![tau_0, lambda]);
    make_eht(sigma1, tau, qp_half()).expect("fixture equation")
}

/// Zero-class Bessel-sigma2 equation with prescribed sigma1 root and
/// asymptote (q = 1/2, sigma1''(0)/2 = 1).
pub fn zbj_from_invariants(a1: f64, lambda: f64) -> EHTSpec {
    let q = 0.5;
    let sigma1 = RealPolynomial::new(vec![0.0, -a1, 1.0]);
    let c = 1.0 - 1.0 / q;
    let tau_0 = a1 / c;
    let h2 = lambda * q * q * q;
    let tau_d = (h2 / q - 1.0) / c;
    let tau = RealPolynomial::new(vec![tau_0, tau_d]);
    make_eht(sigma1, tau, qp_half()).expect("fixture equation")
}

/// Zero-class linear-sigma2 equation with prescribed sigma1 root and
/// y-intercept (q = 1/2, sigma1''(0)/2 = 1).
pub fn zlj_from_invariants(a1: f64, y0: f64) -> EHTSpec {
    let q = 0.5;
    let sigma1 = RealPolynomial::new(vec![0.0, -a1, 1.0]);
    let c = 1.0 - 1.0 / q;
    let tau_d = -1.0 / c;
    let tau_0 = a1 * (1.0 - q * y0) / c;
    let tau = RealPolynomial::new(vec![tau_0, tau_d]);
    make_eht(sigma1, tau, qp_half()).expect("fixture equation")
}

/// The explicitly rejected configurations, one concrete sample each.
pub fn negative_fixtures() -> Vec<NegativeFixture> {
    let fx = |name, rule_id, spec| NegativeFixture { name, rule_id, spec };
    vec![
        fx("jj/reject-01", "jj-neg-01", jj_from_roots(0.5, 1.0, 4.0, 1.5, 3.0)),
        fx("jj/reject-02", "jj-neg-02", jj_from_roots(0.5, 1.0, 2.0, 0.8, 5.0)),
        fx("jj/reject-03", "jj-neg-03", jj_from_roots(0.5, 1.0, 16.0, 4.0, 8.0)),
        fx("jj/reject-04", "jj-neg-04", jj_from_roots(0.5, 1.0, 4.0, -5.0, -1.0)),
        fx("jj/reject-05", "jj-neg-05", jj_from_roots(0.5, 1.0, 16.0, 7.0, 24.0)),
        fx("jj/reject-06", "jj-neg-06", jj_from_roots(0.5, 1.0, 2.0, 0.9, 18.0)),
        fx("jj/reject-07", "jj-neg-07", jj_from_roots(0.5, 1.0, 2.0, 5.0, 8.0)),
        fx("jj/reject-08", "jj-neg-08", jj_from_roots(0.5, 1.0, 2.0, -8.0, -2.0)),
        fx("jj/reject-09", "jj-neg-09", jj_from_roots(0.5, 1.0, 2.0, -1.0, 8.0)),
        fx("jj/reject-10", "jj-neg-10", jj_from_roots(0.5, 1.0, 2.0, -1.0, 0.9)),
        fx("zjj/reject-01", "zjj-neg-01", zjj_from_invariants(1.0, 0.5, 0.1)),
        fx("zjj/reject-02", "zjj-neg-02", zjj_from_invariants(1.0, 2.0, 3.0)),
        fx("zjj/reject-03", "zjj-neg-03", zjj_from_invariants(-1.0, 2.0, -1.0)),
        fx("zjj/reject-04", "zjj-neg-04", zjj_from_invariants(1.0, 0.5, -1.0)),
        fx("jl/reject-01", "jl-neg-01", jl_from_roots(-1.0, -0.5, 2.0)),
        fx("jl/reject-02", "jl-neg-02", jl_from_roots(1.0, 0.8, 4.0)),
        fx("lj/reject-01", "lj-neg-01", lj_from_roots(-1.0, 1.0, -2.0)),
        fx("lj/reject-02", "lj-neg-02", lj_from_roots(1.0, 2.0, 0.25)),
        fx("lj/reject-03", "lj-neg-03", lj_from_roots(1.0, 2.0, 4.0)),
        fx("lj/reject-04", "lj-neg-04", lj_from_roots(1.0, 2.0, -1.0)),
        fx("hj/reject-01", "hj-neg-01", jh_hermite_jacobi_reject()),
        fx("zbj/reject-01", "zbj-neg-01", zbj_from_invariants(1.0, 1.0)),
    ]
}

/// Constant-sigma2 equation with both sigma1 roots positive (q = 1/2).
fn jh_hermite_jacobi_reject() -> EHTSpec {
    let q: f64 = 0.5;
    let (a1, b1) = (1.0, 2.0);
    let sigma1 = RealPolynomial::new(vec![a1 * b1, -(a1 + b1), 1.0]);
    let c = 1.0 - 1.0 / q;
    // sigma2 constant: c tau' = -sigma1''(0)/2 and c tau0 = (a1+b1) sigma1''(0)/2.
    let tau = RealPolynomial::new(vec![(a1 + b1) / c, -1.0 / c]);
    make_eht(sigma1, tau, qp_half()).expect("fixture equation")
}

/// Further named rejections (outside the acceptance list, unit-tested):
/// constant-sigma1 case with mixed-sign roots, the zero-class linear Case 1,
/// and the zero-class one-sided cases with a bad y-intercept.
pub fn extra_negative_fixtures() -> Vec<NegativeFixture> {
    let fx = |name, rule_id, spec| NegativeFixture { name, rule_id, spec };
    vec![
        fx("jh/reject-01", "jh-neg-01", jh_from_roots(-0.5, -1.0, 1.0)),
        fx("zjl/reject-01", "zjl-neg-01", zjl_from_invariants(1.0, 3.0)),
        fx("zlj/reject-01", "zlj-neg-01", zlj_from_invariants(1.0, 3.0)),
        fx("zlj/reject-02", "zlj-neg-02", zlj_from_invariants(1.0, -1.0)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::rules::enumerate_scenarios_detailed;

    #[test]
    fn positive_fixtures_cover_every_positive_rule() {
        use crate::classify::rules::{rule_table, Outcome};
        let fixtures = positive_fixtures();
        for rule in rule_table() {
            if matches!(rule.outcome, Outcome::Scenario(_)) {
                assert!(
                    fixtures.iter().any(|f| f.rule_id == rule.id),
                    "no fixture for rule {}",
                    rule.id
                );
            }
        }
    }

    #[test]
    fn negative_fixtures_match_their_rule_and_nothing_positive() {
        let qp = qp_half();
        let _ = qp;
        for nf in negative_fixtures().iter().chain(extra_negative_fixtures().iter()) {
            let e = enumerate_scenarios_detailed(&nf.spec);
            assert!(
                e.scenarios.is_empty(),
                "{}: unexpected scenarios {:?}",
                nf.name,
                e.scenarios.iter().map(|s| s.rule_id).collect::<Vec<_>>()
            );
            assert!(
                e.rejected.contains(&nf.rule_id),
                "{}: expected rejection rule {}, matched {:?}",
                nf.name,
                nf.rule_id,
                e.rejected
            );
        }
    }

    #[test]
    fn positive_fixtures_fire_their_rule() {
        let qp = qp_half();
        for f in positive_fixtures() {
            let spec = f.spec(qp);
            let scenarios = crate::classify::enumerate_scenarios(&spec);
            assert!(
                scenarios.iter().any(|s| s.rule_id == f.rule_id),
                "{}: rules fired: {:?}",
                f.name,
                scenarios.iter().map(|s| s.rule_id).collect::<Vec<_>>()
            );
        }
    }
}
