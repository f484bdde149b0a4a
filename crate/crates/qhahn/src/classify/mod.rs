//! Ten-way classification of the equation, the per-class case invariants
//! (asymptote, discriminant, y-intercept, root ordering), the rule table
//! that turns a classified equation into orthogonality scenarios, and the
//! boundary-condition-at-infinity test.

pub mod rules;

pub use rules::{enumerate_scenarios, enumerate_scenarios_detailed, rule_table, Enumeration};

use crate::eht::{extended_ratio, EHTSpec, Roots};
use crate::qcore::LatticeBranch;
use std::fmt;

/// Absolute tolerance factor (times the coefficient scale) below which a
/// Taylor coefficient counts as zero during classification.
pub const CLASSIFY_ZERO_ABS: f64 = 1e-13;
/// Relative guard band for strict rule inequalities; values inside the band
/// match with a boundary warning instead of silently flipping.
pub const RULE_GUARD_BAND: f64 = 1e-10;
/// Finite supports must reconstruct `q^{-N-1} a = b` to this relative error.
pub const FINITE_N_REL: f64 = 1e-9;
/// Cap on the finite-support length N.
pub const FINITE_N_MAX: i64 = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The class defines this invariant but its denominator vanishes.
    InvariantUndefined { symbol: &'static str },
    Eht(crate::eht::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvariantUndefined { symbol } => {
                write!(f, "case invariant undefined: denominator of {symbol} vanishes")
            }
            Error::Eht(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<crate::eht::Error> for Error {
    fn from(e: crate::eht::Error) -> Self {
        Error::Eht(e)
    }
}

/// The ten-class taxonomy. The first name is the degree shape of sigma2,
/// the second of sigma1; `Empty`/`Zero` record whether the shared constant
/// term sigma1(0) (= sigma2(0)/q) is nonzero or zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HahnClass {
    EmptyJacobiJacobi,
    EmptyJacobiLaguerre,
    EmptyJacobiHermite,
    EmptyLaguerreJacobi,
    EmptyHermiteJacobi,
    ZeroJacobiJacobi,
    ZeroJacobiLaguerre,
    ZeroBesselJacobi,
    ZeroBesselLaguerre,
    ZeroLaguerreJacobi,
}

impl HahnClass {
    pub const ALL: [HahnClass; 10] = [
        HahnClass::EmptyJacobiJacobi,
        HahnClass::EmptyJacobiLaguerre,
        HahnClass::EmptyJacobiHermite,
        HahnClass::EmptyLaguerreJacobi,
        HahnClass::EmptyHermiteJacobi,
        HahnClass::ZeroJacobiJacobi,
        HahnClass::ZeroJacobiLaguerre,
        HahnClass::ZeroBesselJacobi,
        HahnClass::ZeroBesselLaguerre,
        HahnClass::ZeroLaguerreJacobi,
    ];

    pub fn slug(&self) -> &'static str {
        match self {
            HahnClass::EmptyJacobiJacobi => "empty-jacobi-jacobi",
            HahnClass::EmptyJacobiLaguerre => "empty-jacobi-laguerre",
            HahnClass::EmptyJacobiHermite => "empty-jacobi-hermite",
            HahnClass::EmptyLaguerreJacobi => "empty-laguerre-jacobi",
            HahnClass::EmptyHermiteJacobi => "empty-hermite-jacobi",
            HahnClass::ZeroJacobiJacobi => "zero-jacobi-jacobi",
            HahnClass::ZeroJacobiLaguerre => "zero-jacobi-laguerre",
            HahnClass::ZeroBesselJacobi => "zero-bessel-jacobi",
            HahnClass::ZeroBesselLaguerre => "zero-bessel-laguerre",
            HahnClass::ZeroLaguerreJacobi => "zero-laguerre-jacobi",
        }
    }

    pub fn is_zero_class(&self) -> bool {
        matches!(
            self,
            HahnClass::ZeroJacobiJacobi
                | HahnClass::ZeroJacobiLaguerre
                | HahnClass::ZeroBesselJacobi
                | HahnClass::ZeroBesselLaguerre
                | HahnClass::ZeroLaguerreJacobi
        )
    }
}

impl fmt::Display for HahnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

/// Classifies a valid spec into its unique class tag. Zero-vs-nonzero
/// decisions use an absolute tolerance scaled by the coefficient magnitude;
/// the itemization is total for deg tau = 1 with tau'(0) != 0.
pub fn classify(spec: &EHTSpec) -> HahnClass {
    let t = spec.taylor();
    let scale1 = spec.sigma1().coeff_scale().max(f64::MIN_POSITIVE);
    let scale2 = spec.sigma2().coeff_scale().max(f64::MIN_POSITIVE);
    let z1 = |v: f64| v.abs() <= CLASSIFY_ZERO_ABS * scale1;
    let z2 = |v: f64| v.abs() <= CLASSIFY_ZERO_ABS * scale2;
    let zero_class = z1(t.sigma1_0); // sigma2(0) = q sigma1(0) shares the verdict
    let s2_quad = !z2(t.sigma2_dd);
    let s2_lin = !z2(t.sigma2_d);
    let s1_quad = !z1(t.sigma1_dd);
    if zero_class {
        match (s2_quad, s2_lin, s1_quad) {
            (true, true, true) => HahnClass::ZeroJacobiJacobi,
            (true, true, false) => HahnClass::ZeroJacobiLaguerre,
            (true, false, true) => HahnClass::ZeroBesselJacobi,
            (true, false, false) => HahnClass::ZeroBesselLaguerre,
            (false, _, _) => HahnClass::ZeroLaguerreJacobi,
        }
    } else {
        let s1_lin = !z1(t.sigma1_d);
        match (s2_quad, s2_lin, s1_quad, s1_lin) {
            (true, _, true, _) => HahnClass::EmptyJacobiJacobi,
            (true, _, false, true) => HahnClass::EmptyJacobiLaguerre,
            (true, _, false, false) => HahnClass::EmptyJacobiHermite,
            (false, true, _, _) => HahnClass::EmptyLaguerreJacobi,
            (false, false, _, _) => HahnClass::EmptyHermiteJacobi,
        }
    }
}

/// A labelled root value in the sorted ordering.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrderedRoot {
    pub label: &'static str,
    pub value: f64,
}

/// Class-specific geometric invariants of the Pearson ratio.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseInvariants {
    pub class: HahnClass,
    /// Horizontal asymptote (class-specific definition); absent where the
    /// class defines none.
    pub lambda_q: Option<f64>,
    /// Discriminant of the numerator quadratic; absent where undefined.
    pub delta_q: Option<f64>,
    /// y-intercept of the ratio in the zero/linear classes.
    pub y0: Option<f64>,
    /// The fixed point of the ratio: x0 = -tau(0)/tau'(0).
    pub x0: f64,
    /// Present root symbols sorted ascending by value.
    pub root_order: Vec<OrderedRoot>,
    /// Labels of root pairs that tie within the guard band.
    pub ties: Vec<(&'static str, &'static str)>,
}

/// The nonzero root of a zero-class quadratic x (c2 x + c1); `None` when the
/// polynomial is a pure square c x^2.
pub(crate) fn nonzero_root(roots: &Roots, scale: f64) -> Option<f64> {
    match *roots {
        Roots::Linear(r) => Some(r),
        Roots::RealPair { lo, hi, .. } => {
            let pick = if lo.abs() >= hi.abs() { lo } else { hi };
            if pick.abs() <= CLASSIFY_ZERO_ABS * scale.max(1.0) {
                None
            } else {
                Some(pick)
            }
        }
        _ => None,
    }
}

/// Computes the class-appropriate invariants. Errors only when a defined
/// invariant's denominator vanishes.
pub fn case_invariants(spec: &EHTSpec) -> Result<CaseInvariants, Error> {
    let cls = classify(spec);
    let t = spec.taylor();
    let q = spec.q();
    let c = 1.0 - 1.0 / q;
    let h1 = 0.5 * t.sigma1_dd;
    let x0 = -t.tau_0 / t.tau_d;

    let lambda_q = match cls {
        HahnClass::EmptyJacobiJacobi | HahnClass::ZeroJacobiJacobi | HahnClass::ZeroBesselJacobi => {
            if h1 == 0.0 {
                return Err(Error::InvariantUndefined { symbol: "Lambda_q" });
            }
            Some((1.0 + c * t.tau_d / h1) / (q * q))
        }
        HahnClass::EmptyJacobiLaguerre
        | HahnClass::ZeroJacobiLaguerre
        | HahnClass::ZeroBesselLaguerre => {
            if t.sigma1_d == 0.0 {
                return Err(Error::InvariantUndefined { symbol: "Lambda_q" });
            }
            Some(t.tau_d / t.sigma1_d)
        }
        HahnClass::EmptyJacobiHermite => {
            if t.sigma1_0 == 0.0 {
                return Err(Error::InvariantUndefined { symbol: "Lambda_q" });
            }
            Some(t.tau_d / t.sigma1_0)
        }
        HahnClass::EmptyLaguerreJacobi => {
            if h1 == 0.0 {
                return Err(Error::InvariantUndefined { symbol: "Lambda_q" });
            }
            let (a1, b1) = match *spec.roots1() {
                Roots::RealPair { lo, hi, .. } => (lo, hi),
                _ => return Err(Error::InvariantUndefined { symbol: "Lambda_q" }),
            };
            Some(a1 + b1 - c * t.tau_0 / h1)
        }
        HahnClass::EmptyHermiteJacobi | HahnClass::ZeroLaguerreJacobi => None,
    };

    let delta_q = match cls {
        HahnClass::EmptyJacobiJacobi => {
            let (a1, b1) = match *spec.roots1() {
                Roots::RealPair { lo, hi, .. } => (lo, hi),
                _ => (f64::NAN, f64::NAN),
            };
            if a1.is_nan() {
                None
            } else {
                let s = a1 + b1 - c * t.tau_0 / h1;
                Some(s * s - 4.0 * a1 * b1 * (1.0 + c * t.tau_d / h1))
            }
        }
        HahnClass::EmptyJacobiLaguerre => {
            let a1 = match *spec.roots1() {
                Roots::Linear(r) => r,
                _ => f64::NAN,
            };
            if a1.is_nan() {
                None
            } else {
                let u = 1.0 + c * t.tau_0 / t.sigma1_d;
                Some(u * u + 4.0 * a1 * c * t.tau_d / t.sigma1_d)
            }
        }
        HahnClass::EmptyJacobiHermite => {
            let u = c * t.tau_0 / t.sigma1_0;
            Some(u * u - 4.0 * c * t.tau_d / t.sigma1_0)
        }
        _ => None,
    };

    let y0 = match cls {
        HahnClass::ZeroJacobiJacobi | HahnClass::ZeroBesselJacobi | HahnClass::ZeroLaguerreJacobi => {
            let a1 = nonzero_root(spec.roots1(), spec.sigma1().coeff_scale())
                .ok_or(Error::InvariantUndefined { symbol: "y0" })?;
            if h1 == 0.0 {
                return Err(Error::InvariantUndefined { symbol: "y0" });
            }
            Some((1.0 - c * t.tau_0 / (a1 * h1)) / q)
        }
        HahnClass::ZeroJacobiLaguerre | HahnClass::ZeroBesselLaguerre => {
            if t.sigma1_d == 0.0 {
                return Err(Error::InvariantUndefined { symbol: "y0" });
            }
            Some((1.0 + c * t.tau_0 / t.sigma1_d) / q)
        }
        _ => None,
    };

    // Sorted listing of whichever root symbols the class possesses,
    // including the shifted sigma1 roots.
    let mut roots: Vec<OrderedRoot> = vec![OrderedRoot {
        label: "0",
        value: 0.0,
    }];
    match *spec.roots1() {
        Roots::RealPair { lo, hi, .. } => {
            roots.push(OrderedRoot { label: "a1", value: lo });
            roots.push(OrderedRoot { label: "b1", value: hi });
            roots.push(OrderedRoot { label: "a1/q", value: lo / q });
            roots.push(OrderedRoot { label: "b1/q", value: hi / q });
        }
        Roots::Linear(r) => {
            roots.push(OrderedRoot { label: "a1", value: r });
            roots.push(OrderedRoot { label: "a1/q", value: r / q });
        }
        _ => {}
    }
    match *spec.roots2() {
        Roots::RealPair { lo, hi, .. } => {
            roots.push(OrderedRoot { label: "a2", value: lo });
            roots.push(OrderedRoot { label: "b2", value: hi });
        }
        Roots::Linear(r) => roots.push(OrderedRoot { label: "a2", value: r }),
        _ => {}
    }
    roots.sort_by(|a, b| a.value.partial_cmp(&b.value).unwrap());
    let mut ties = Vec::new();
    for w in roots.windows(2) {
        let band = RULE_GUARD_BAND * w[0].value.abs().max(w[1].value.abs()).max(1.0);
        if (w[1].value - w[0].value).abs() <= band {
            ties.push((w[0].label, w[1].label));
        }
    }

    Ok(CaseInvariants {
        class: cls,
        lambda_q,
        delta_q,
        y0,
        x0,
        root_order: roots,
        ties,
    })
}

/// Tail direction for the boundary condition at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tail {
    PlusInfinity,
    MinusInfinity,
}

/// True iff `sigma1 rho x^k -> 0` along the tail for every `k <= k_max`,
/// which holds exactly when the extended Pearson ratio grows without bound
/// there, i.e. when deg sigma2 > deg sigma1. A finite limit means some power
/// fails the boundary condition.
pub fn bc_at_infinity(spec: &EHTSpec, tail: Tail, k_max: u32) -> bool {
    let scale1 = spec.sigma1().coeff_scale().max(f64::MIN_POSITIVE);
    let scale2 = spec.sigma2().coeff_scale().max(f64::MIN_POSITIVE);
    let deg = |p: &crate::qcore::RealPolynomial, scale: f64| -> usize {
        let mut d = 0;
        for k in 0..=p.degree() {
            if p.coeff(k).abs() > CLASSIFY_ZERO_ABS * scale {
                d = k;
            }
        }
        d
    };
    let structural = deg(spec.sigma2(), scale2) > deg(spec.sigma1(), scale1);
    // Numeric confirmation at a far point on the requested tail.
    let x = match tail {
        Tail::PlusInfinity => 1e9,
        Tail::MinusInfinity => -1e9,
    };
    match extended_ratio(spec, x, k_max) {
        Ok(g) => structural && g.abs() > 1e3,
        Err(_) => structural,
    }
}

/// Integration flavor attached to a scenario.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegralFlavor {
    Q,
    QInverse,
    Bilateral,
}

impl IntegralFlavor {
    pub fn label(&self) -> &'static str {
        match self {
            IntegralFlavor::Q => "q",
            IntegralFlavor::QInverse => "q-inverse",
            IntegralFlavor::Bilateral => "bilateral",
        }
    }
}

/// An interval endpoint, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Endpoint {
    Finite(f64),
    NegInfinity,
    Infinity,
}

/// How a support branch walks its lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// generator * q^k, k = 0, 1, 2, ...
    QPower,
    /// generator * q^{-k}, k = 0, 1, ..., possibly capped at N.
    QInversePower,
    /// generator * q^j over all integers j.
    BilateralPower,
}

impl Direction {
    pub fn label(&self) -> &'static str {
        match self {
            Direction::QPower => "q-power",
            Direction::QInversePower => "q-inverse-power",
            Direction::BilateralPower => "bilateral-power",
        }
    }
}

/// One branch of a scenario's support.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SupportBranch {
    pub generator: f64,
    pub direction: Direction,
    pub branch: LatticeBranch,
}

/// Identifier of a closed-form weight template.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightFormId {
    /// Ascending sigma1 factors over sigma2 factors (two-sided supports).
    JjRatio,
    /// Power factor with mixed ascending/descending factors (finite chains).
    JjPowerMixed,
    /// Power factor with one ascending over one descending-in-x factor.
    ZjjPowerRatio,
    /// Power and half-log factors with one ascending and one inverse factor.
    ZjjHalfLog,
    /// Ascending sigma1 factor over both sigma2 factors.
    JlRatio,
    /// Power/half-log with both sigma2 roots inverse over sigma1 inverse.
    JlHalfLog,
    /// Power/x^log factor with ascending sigma1 and both sigma2 inverse.
    JlXLog,
    /// Reciprocal of both sigma2 factors (constant sigma1).
    JhReciprocal,
    /// Power/x^{log-1} with both sigma2 roots inverse.
    JhXLogMinus1,
    /// Both sigma1 factors ascending over the linear sigma2 factor.
    LjRatio,
    /// Power with inverse sigma2 and ascending sigma1 over inverse sigma1.
    LjPower,
    /// Plain product of both ascending sigma1 factors (constant sigma2).
    HjProduct,
    /// Power over a single sigma2 factor.
    ZjlPowerReciprocal,
    /// Power/half-log with the sigma2 root inverse.
    ZjlHalfLog,
    /// Power/half-log with the sigma1 root ascending.
    ZbjHalfLog,
    /// Pure power/half-log factor.
    ZblHalfLog,
    /// Power with the sigma1 root ascending.
    ZljPower,
}

impl WeightFormId {
    pub fn slug(&self) -> &'static str {
        match self {
            WeightFormId::JjRatio => "jj-ratio",
            WeightFormId::JjPowerMixed => "jj-power-mixed",
            WeightFormId::ZjjPowerRatio => "zjj-power-ratio",
            WeightFormId::ZjjHalfLog => "zjj-half-log",
            WeightFormId::JlRatio => "jl-ratio",
            WeightFormId::JlHalfLog => "jl-half-log",
            WeightFormId::JlXLog => "jl-x-log",
            WeightFormId::JhReciprocal => "jh-reciprocal",
            WeightFormId::JhXLogMinus1 => "jh-x-log-minus-1",
            WeightFormId::LjRatio => "lj-ratio",
            WeightFormId::LjPower => "lj-power",
            WeightFormId::HjProduct => "hj-product",
            WeightFormId::ZjlPowerReciprocal => "zjl-power-reciprocal",
            WeightFormId::ZjlHalfLog => "zjl-half-log",
            WeightFormId::ZbjHalfLog => "zbj-half-log",
            WeightFormId::ZblHalfLog => "zbl-half-log",
            WeightFormId::ZljPower => "zlj-power",
        }
    }
}

/// One of the seven support scenarios, fully instantiated for a spec.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthScenario {
    /// Scenario kind 1..7: two-sided, one-sided from b, finite 1/q chain,
    /// negative branch plus bilateral axis, 1/q ray, positive bilateral
    /// lattice, full bilateral lattice.
    pub kind: u8,
    pub interval: (Endpoint, Endpoint),
    pub flavor: IntegralFlavor,
    pub support: Vec<SupportBranch>,
    /// Finite chain length N (kind 3 only): N+1 support points.
    pub n_points: Option<i64>,
    pub rule_id: &'static str,
    pub weight_form_id: WeightFormId,
    /// True when the rule matched the x -> -x reflection of the spec.
    pub reflected: bool,
    pub warnings: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eht::make_eht;
    use crate::families::{make_family, FamilyId};
    use crate::qcore::{QParam, RealPolynomial};
    use std::collections::BTreeMap;

    fn qp() -> QParam {
        QParam::new(0.5).unwrap()
    }

    fn family(id: FamilyId, kv: &[(&str, f64)]) -> EHTSpec {
        let mut p = BTreeMap::new();
        for (k, v) in kv {
            p.insert(k.to_string(), *v);
        }
        make_family(id, &p, qp()).unwrap().spec
    }

    #[test]
    fn classify_named_families() {
        let bqj = family(FamilyId::BigQJacobi, &[("a", 0.5), ("b", 0.5), ("c", -0.5)]);
        assert_eq!(classify(&bqj), HahnClass::EmptyJacobiJacobi);
        let lqj = family(FamilyId::LittleQJacobi, &[("a", 0.5), ("b", 0.5)]);
        assert_eq!(classify(&lqj), HahnClass::ZeroJacobiJacobi);
        let sw = family(FamilyId::StieltjesWigert, &[]);
        assert_eq!(classify(&sw), HahnClass::ZeroBesselLaguerre);
    }

    #[test]
    fn case_invariants_big_q_jacobi() {
        let spec = family(FamilyId::BigQJacobi, &[("a", 0.5), ("b", 0.5), ("c", -0.5)]);
        let inv = case_invariants(&spec).unwrap();
        // q^2 Lambda_q = a b q^2 = 0.0625 for these parameters.
        let q2l = inv.lambda_q.unwrap() * 0.25;
        assert!((q2l - 0.0625).abs() < 1e-13);
        assert!(q2l > 0.0 && q2l < 1.0);
        // x0 solves f(x0) = 1.
        let f = crate::eht::pearson_ratio(&spec, inv.x0).unwrap();
        assert!((f - 1.0).abs() < 1e-10);
    }

    #[test]
    fn case_invariants_little_q_jacobi_y0() {
        let spec = family(FamilyId::LittleQJacobi, &[("a", 0.5), ("b", 0.5)]);
        let inv = case_invariants(&spec).unwrap();
        // y0 = a for this family; q y0 inside (0,1) in the classic region.
        let y0 = inv.y0.unwrap();
        assert!((y0 - 0.5).abs() < 1e-13);
        let qy0 = 0.5 * y0;
        assert!(qy0 > 0.0 && qy0 < 1.0);
    }

    #[test]
    fn case_invariants_absent_for_hermite_jacobi() {
        let spec = family(FamilyId::AlSalamCarlitz1, &[("a", -1.0)]);
        assert_eq!(classify(&spec), HahnClass::EmptyHermiteJacobi);
        let inv = case_invariants(&spec).unwrap();
        assert!(inv.lambda_q.is_none());
        assert!(inv.delta_q.is_none());
        assert!(inv.y0.is_none());
    }

    #[test]
    fn bc_at_infinity_by_degree_gap() {
        let bqj = family(FamilyId::BigQJacobi, &[("a", 0.5), ("b", 0.5), ("c", -0.5)]);
        assert!(!bc_at_infinity(&bqj, Tail::PlusInfinity, 6));
        let qm = family(FamilyId::QMeixner, &[("b", 0.5), ("c", 1.0)]);
        assert!(bc_at_infinity(&qm, Tail::PlusInfinity, 6));
        let dqh2 = family(FamilyId::DiscreteQHermite2, &[]);
        assert!(bc_at_infinity(&dqh2, Tail::PlusInfinity, 6));
        assert!(bc_at_infinity(&dqh2, Tail::MinusInfinity, 6));
    }

    #[test]
    fn classification_is_scale_invariant() {
        // The equation is homogeneous: scaling (sigma1, tau) by a common
        // positive constant must not change the tag.
        let s1 = RealPolynomial::new(vec![0.5, -0.25, 1.0]);
        let tau = RealPolynomial::new(vec![0.125, -2.0]);
        let base = classify(&make_eht(s1.clone(), tau.clone(), qp()).unwrap());
        for scale in [1e-6, 0.37, 42.0, 1e8] {
            let spec = make_eht(s1.scale(scale), tau.scale(scale), qp()).unwrap();
            assert_eq!(classify(&spec), base, "scale {scale}");
        }
    }
}
