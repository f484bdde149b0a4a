//! The scenario rule table. Each rule is data: a class tag, a predicate list
//! over root positions and case invariants, and either a scenario skeleton
//! or an explicit rejection. Keeping the conditions as data makes the table
//! auditable row by row and serializable for reports.

use super::{
    case_invariants, classify, Direction, Endpoint, HahnClass, IntegralFlavor, OrthScenario,
    SupportBranch, WeightFormId, FINITE_N_MAX, FINITE_N_REL, RULE_GUARD_BAND,
};
use crate::eht::{EHTSpec, Roots};
use crate::json::Doc;
use crate::qcore::LatticeBranch;
use std::fmt;
use std::sync::OnceLock;

/// A root symbol of the classified equation, by polynomial and position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootRef {
    /// Smaller real root of sigma1.
    S1Lo,
    /// Larger real root of sigma1.
    S1Hi,
    /// The single root of a linear sigma1.
    S1Single,
    /// The nonzero root of a zero-class sigma1 = c x (x - a1).
    S1Nonzero,
    S2Lo,
    S2Hi,
    S2Single,
    S2Nonzero,
}

impl RootRef {
    fn label(&self) -> &'static str {
        match self {
            RootRef::S1Lo => "a1",
            RootRef::S1Hi => "b1",
            RootRef::S1Single => "a1",
            RootRef::S1Nonzero => "a1",
            RootRef::S2Lo => "a2",
            RootRef::S2Hi => "b2",
            RootRef::S2Single => "a2",
            RootRef::S2Nonzero => "a2",
        }
    }
}

/// A quantity a predicate can mention.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Expr {
    Zero,
    One,
    Root(RootRef),
    /// root / q (the shifted vertical-asymptote position).
    QInvRoot(RootRef),
    /// The class's horizontal asymptote.
    Lambda,
    /// q^2 times the asymptote (the scaled form used by two-degree classes).
    Q2Lambda,
    /// The ratio's y-intercept.
    Y0,
    /// q times the y-intercept.
    QY0,
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Zero => write!(f, "0"),
            Expr::One => write!(f, "1"),
            Expr::Root(r) => write!(f, "{}", r.label()),
            Expr::QInvRoot(r) => write!(f, "{}/q", r.label()),
            Expr::Lambda => write!(f, "Lambda_q"),
            Expr::Q2Lambda => write!(f, "q^2*Lambda_q"),
            Expr::Y0 => write!(f, "y0"),
            Expr::QY0 => write!(f, "q*y0"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Lt,
    Le,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Predicate {
    pub lhs: Expr,
    pub cmp: Cmp,
    pub rhs: Expr,
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.cmp {
            Cmp::Lt => "<",
            Cmp::Le => "<=",
        };
        write!(f, "{} {} {}", self.lhs, op, self.rhs)
    }
}

/// Scenario skeleton a positive rule instantiates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Skeleton {
    pub kind: u8,
    /// Support generator for kinds 2..5 (kind 1 uses both sigma1 roots).
    pub generator: Option<RootRef>,
    /// Kind 3 only: the root whose /q shift is the upper endpoint.
    pub upper_from: Option<RootRef>,
    pub weight: WeightFormId,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Outcome {
    Scenario(Skeleton),
    Reject,
}

/// One row of the rule table.
#[derive(Clone, Debug)]
pub struct Rule {
    pub id: &'static str,
    pub class: HahnClass,
    /// True: sigma2 must have a conjugate root pair; false: don't care
    /// (rules mentioning real sigma2 roots fail on complex pairs anyway).
    pub requires_complex_sigma2: bool,
    pub predicates: Vec<Predicate>,
    pub outcome: Outcome,
}

fn pred(lhs: Expr, cmp: Cmp, rhs: Expr) -> Predicate {
    Predicate { lhs, cmp, rhs }
}

macro_rules! lt {
    ($a:expr, $b:expr) => {
        pred($a, Cmp::Lt, $b)
    };
}

use Expr::*;
use RootRef::*;

fn positive(
    id: &'static str,
    class: HahnClass,
    complex: bool,
    predicates: Vec<Predicate>,
    kind: u8,
    generator: Option<RootRef>,
    upper_from: Option<RootRef>,
    weight: WeightFormId,
) -> Rule {
    Rule {
        id,
        class,
        requires_complex_sigma2: complex,
        predicates,
        outcome: Outcome::Scenario(Skeleton {
            kind,
            generator,
            upper_from,
            weight,
        }),
    }
}

fn negative(id: &'static str, class: HahnClass, predicates: Vec<Predicate>) -> Rule {
    Rule {
        id,
        class,
        requires_complex_sigma2: false,
        predicates,
        outcome: Outcome::Reject,
    }
}

fn build_table() -> Vec<Rule> {
    use HahnClass::*;
    use WeightFormId::*;
    let mut t = Vec::new();

    // --- quadratic/quadratic, nonzero constant term -------------------
    t.push(positive(
        "jj-two-sided",
        EmptyJacobiJacobi,
        false,
        vec![
            lt!(Root(S2Lo), Root(S1Lo)),
            lt!(Root(S1Lo), Zero),
            lt!(Zero, Root(S1Hi)),
            lt!(Root(S1Hi), Root(S2Hi)),
            lt!(Zero, Q2Lambda),
            lt!(Q2Lambda, One),
        ],
        1,
        None,
        None,
        JjRatio,
    ));
    t.push(positive(
        "jj-finite-inner",
        EmptyJacobiJacobi,
        false,
        vec![
            lt!(Zero, Root(S1Lo)),
            lt!(Root(S1Lo), Root(S2Lo)),
            lt!(Root(S2Lo), Root(S1Hi)),
            lt!(Root(S1Hi), Root(S2Hi)),
            lt!(Zero, Q2Lambda),
            lt!(Q2Lambda, One),
        ],
        3,
        Some(S2Lo),
        Some(S1Hi),
        JjPowerMixed,
    ));
    t.push(positive(
        "jj-finite-outer",
        EmptyJacobiJacobi,
        false,
        vec![
            lt!(Zero, Root(S2Lo)),
            pred(Root(S2Hi), Cmp::Lt, Root(S1Lo)),
            lt!(One, Q2Lambda),
        ],
        3,
        Some(S2Hi),
        Some(S1Lo),
        JjPowerMixed,
    ));
    t.push(positive(
        "jj-two-sided-neg",
        EmptyJacobiJacobi,
        false,
        vec![
            lt!(Root(S1Lo), Zero),
            lt!(Zero, Root(S1Hi)),
            lt!(Root(S1Hi), Root(S2Lo)),
            lt!(Q2Lambda, Zero),
        ],
        1,
        None,
        None,
        JjRatio,
    ));
    t.push(positive(
        "jj-finite-neg-asym",
        EmptyJacobiJacobi,
        false,
        vec![
            lt!(Root(S1Lo), Zero),
            lt!(Zero, Root(S2Lo)),
            lt!(Root(S2Hi), Root(S1Hi)),
            lt!(Q2Lambda, Zero),
        ],
        3,
        Some(S2Hi),
        Some(S1Hi),
        JjPowerMixed,
    ));
    t.push(positive(
        "jj-two-sided-complex",
        EmptyJacobiJacobi,
        true,
        vec![
            lt!(Root(S1Lo), Zero),
            lt!(Zero, Root(S1Hi)),
            lt!(Q2Lambda, Zero),
        ],
        1,
        None,
        None,
        JjRatio,
    ));
    t.push(positive(
        "jj-finite-neg-root",
        EmptyJacobiJacobi,
        false,
        vec![
            lt!(Root(S2Lo), Zero),
            lt!(Zero, Root(S1Lo)),
            lt!(Root(S1Lo), Root(S2Hi)),
            lt!(Root(S2Hi), Root(S1Hi)),
            lt!(Q2Lambda, Zero),
        ],
        3,
        Some(S2Hi),
        Some(S1Hi),
        JjPowerMixed,
    ));

    // --- quadratic/quadratic, zero constant term ----------------------
    t.push(positive(
        "zjj-one-sided",
        ZeroJacobiJacobi,
        false,
        vec![
            lt!(Zero, Root(S1Nonzero)),
            lt!(Root(S1Nonzero), Root(S2Nonzero)),
            lt!(Zero, QY0),
            lt!(QY0, One),
            lt!(Zero, Q2Lambda),
            lt!(Q2Lambda, One),
        ],
        2,
        Some(S1Nonzero),
        None,
        ZjjPowerRatio,
    ));
    t.push(positive(
        "zjj-one-sided-neg-root",
        ZeroJacobiJacobi,
        false,
        vec![
            lt!(Root(S2Nonzero), Zero),
            lt!(Zero, Root(S1Nonzero)),
            lt!(Zero, QY0),
            lt!(QY0, One),
            lt!(Q2Lambda, Zero),
        ],
        2,
        Some(S1Nonzero),
        None,
        ZjjPowerRatio,
    ));
    t.push(positive(
        "zjj-finite",
        ZeroJacobiJacobi,
        false,
        vec![
            lt!(Zero, Root(S2Nonzero)),
            lt!(Root(S2Nonzero), Root(S1Nonzero)),
            lt!(QY0, Zero),
            lt!(Q2Lambda, Zero),
        ],
        3,
        Some(S2Nonzero),
        Some(S1Nonzero),
        ZjjHalfLog,
    ));

    // --- quadratic/linear, nonzero constant term ----------------------
    t.push(positive(
        "jl-half-line",
        EmptyJacobiLaguerre,
        false,
        vec![
            lt!(Root(S2Lo), Zero),
            lt!(Zero, Root(S1Single)),
            lt!(Root(S1Single), Root(S2Hi)),
            lt!(Lambda, Zero),
        ],
        5,
        Some(S2Hi),
        None,
        JlHalfLog,
    ));
    t.push(positive(
        "jl-neg-axis-bilateral",
        EmptyJacobiLaguerre,
        false,
        vec![
            pred(Root(S2Hi), Cmp::Lt, Root(S1Single)),
            lt!(Root(S1Single), Zero),
            lt!(Lambda, Zero),
        ],
        4,
        Some(S1Single),
        None,
        JlRatio,
    ));
    t.push(positive(
        "jl-half-line-ext",
        EmptyJacobiLaguerre,
        false,
        vec![
            lt!(Root(S1Single), Zero),
            lt!(Zero, Root(S2Lo)),
            lt!(Lambda, Zero),
        ],
        5,
        Some(S2Hi),
        None,
        JlHalfLog,
    ));
    t.push(positive(
        "jl-finite",
        EmptyJacobiLaguerre,
        false,
        vec![
            lt!(Zero, Root(S2Lo)),
            pred(Root(S2Hi), Cmp::Lt, Root(S1Single)),
            lt!(Zero, Lambda),
        ],
        3,
        Some(S2Hi),
        Some(S1Single),
        JlXLog,
    ));
    t.push(positive(
        "jl-bilateral-complex",
        EmptyJacobiLaguerre,
        true,
        vec![lt!(Root(S1Single), Zero), lt!(Lambda, Zero)],
        4,
        Some(S1Single),
        None,
        JlRatio,
    ));

    // --- quadratic/constant, nonzero constant term --------------------
    t.push(positive(
        "jh-half-line",
        EmptyJacobiHermite,
        false,
        vec![lt!(Zero, Root(S2Lo)), lt!(Lambda, Zero)],
        5,
        Some(S2Hi),
        None,
        JhXLogMinus1,
    ));
    t.push(positive(
        "jh-full-line",
        EmptyJacobiHermite,
        true,
        vec![lt!(Lambda, Zero)],
        7,
        None,
        None,
        JhReciprocal,
    ));

    // --- linear/quadratic, nonzero constant term ----------------------
    t.push(positive(
        "lj-two-sided",
        EmptyLaguerreJacobi,
        false,
        vec![
            lt!(Root(S1Lo), Zero),
            lt!(Zero, Root(S1Hi)),
            lt!(Root(S1Hi), Root(S2Single)),
            lt!(Lambda, Zero),
        ],
        1,
        None,
        None,
        LjRatio,
    ));
    t.push(positive(
        "lj-finite",
        EmptyLaguerreJacobi,
        false,
        vec![
            lt!(Zero, Root(S1Lo)),
            lt!(Root(S1Lo), Root(S2Single)),
            lt!(Root(S2Single), Root(S1Hi)),
            lt!(Zero, Lambda),
        ],
        3,
        Some(S2Single),
        Some(S1Hi),
        LjPower,
    ));

    // --- constant/quadratic, nonzero constant term --------------------
    t.push(positive(
        "hj-two-sided",
        EmptyHermiteJacobi,
        false,
        vec![lt!(Root(S1Lo), Zero), lt!(Zero, Root(S1Hi))],
        1,
        None,
        None,
        HjProduct,
    ));

    // --- quadratic/linear, zero constant term -------------------------
    t.push(positive(
        "zjl-positive-lattice",
        ZeroJacobiLaguerre,
        false,
        vec![
            lt!(Lambda, Zero),
            lt!(Root(S2Nonzero), Zero),
            lt!(Zero, QY0),
            lt!(QY0, One),
        ],
        6,
        None,
        None,
        ZjlPowerReciprocal,
    ));
    t.push(positive(
        "zjl-half-line",
        ZeroJacobiLaguerre,
        false,
        vec![
            lt!(Lambda, Zero),
            lt!(Zero, Root(S2Nonzero)),
            lt!(QY0, Zero),
        ],
        5,
        Some(S2Nonzero),
        None,
        ZjlHalfLog,
    ));

    // --- Bessel-type sigma2, zero constant term -----------------------
    t.push(positive(
        "zbj-one-sided",
        ZeroBesselJacobi,
        false,
        vec![lt!(Q2Lambda, Zero), lt!(Zero, Root(S1Nonzero))],
        2,
        Some(S1Nonzero),
        None,
        ZbjHalfLog,
    ));
    t.push(positive(
        "zbl-positive-lattice",
        ZeroBesselLaguerre,
        false,
        vec![lt!(Lambda, Zero)],
        6,
        None,
        None,
        ZblHalfLog,
    ));

    // --- linear/quadratic, zero constant term --------------------------
    t.push(positive(
        "zlj-one-sided",
        ZeroLaguerreJacobi,
        false,
        vec![lt!(Zero, Root(S1Nonzero)), lt!(Zero, QY0), lt!(QY0, One)],
        2,
        Some(S1Nonzero),
        None,
        ZljPower,
    ));

    // --- rejected configurations ----------------------------------------
    // quadratic/quadratic, nonzero constant term
    t.push(negative(
        "jj-neg-01",
        EmptyJacobiJacobi,
        vec![
            lt!(Zero, Root(S2Lo)),
            lt!(Root(S2Lo), QInvRoot(S1Lo)),
            lt!(QInvRoot(S1Lo), Root(S2Hi)),
            lt!(Root(S2Hi), QInvRoot(S1Hi)),
            lt!(One, Lambda),
        ],
    ));
    t.push(negative(
        "jj-neg-02",
        EmptyJacobiJacobi,
        vec![
            lt!(Zero, Root(S2Lo)),
            lt!(Root(S2Lo), QInvRoot(S1Lo)),
            lt!(QInvRoot(S1Hi), Root(S2Hi)),
            lt!(One, Lambda),
        ],
    ));
    t.push(negative(
        "jj-neg-03",
        EmptyJacobiJacobi,
        vec![
            lt!(Zero, QInvRoot(S1Lo)),
            lt!(QInvRoot(S1Lo), Root(S2Lo)),
            lt!(Root(S2Hi), QInvRoot(S1Hi)),
            lt!(One, Lambda),
        ],
    ));
    t.push(negative(
        "jj-neg-04",
        EmptyJacobiJacobi,
        vec![
            lt!(Root(S2Hi), Zero),
            lt!(Zero, QInvRoot(S1Lo)),
            lt!(One, Lambda),
        ],
    ));
    t.push(negative(
        "jj-neg-05",
        EmptyJacobiJacobi,
        vec![
            lt!(Zero, QInvRoot(S1Lo)),
            lt!(QInvRoot(S1Lo), Root(S2Lo)),
            lt!(Root(S2Hi), QInvRoot(S1Hi)),
            lt!(Zero, Lambda),
            lt!(Lambda, One),
        ],
    ));
    t.push(negative(
        "jj-neg-06",
        EmptyJacobiJacobi,
        vec![
            lt!(Zero, Root(S2Lo)),
            lt!(Root(S2Lo), QInvRoot(S1Lo)),
            lt!(QInvRoot(S1Hi), Root(S2Hi)),
            lt!(Zero, Lambda),
            lt!(Lambda, One),
        ],
    ));
    t.push(negative(
        "jj-neg-07",
        EmptyJacobiJacobi,
        vec![
            lt!(Zero, QInvRoot(S1Lo)),
            lt!(QInvRoot(S1Hi), Root(S2Lo)),
            lt!(Zero, Lambda),
            lt!(Lambda, One),
        ],
    ));
    t.push(negative(
        "jj-neg-08",
        EmptyJacobiJacobi,
        vec![
            lt!(Root(S2Hi), Zero),
            lt!(Zero, QInvRoot(S1Lo)),
            lt!(Zero, Lambda),
            lt!(Lambda, One),
        ],
    ));
    t.push(negative(
        "jj-neg-09",
        EmptyJacobiJacobi,
        vec![
            lt!(Root(S2Lo), Zero),
            lt!(Zero, Root(S1Lo)),
            lt!(QInvRoot(S1Hi), Root(S2Hi)),
            lt!(Lambda, Zero),
        ],
    ));
    t.push(negative(
        "jj-neg-10",
        EmptyJacobiJacobi,
        vec![
            lt!(Root(S2Lo), Zero),
            lt!(Zero, Root(S2Hi)),
            lt!(Root(S2Hi), QInvRoot(S1Lo)),
            lt!(Lambda, Zero),
        ],
    ));
    // quadratic/quadratic, zero constant term
    t.push(negative(
        "zjj-neg-01",
        ZeroJacobiJacobi,
        vec![
            lt!(Zero, Lambda),
            lt!(Lambda, One),
            lt!(Zero, Y0),
            lt!(Y0, One),
            lt!(Zero, Root(S2Nonzero)),
            lt!(Root(S2Nonzero), QInvRoot(S1Nonzero)),
        ],
    ));
    t.push(negative(
        "zjj-neg-02",
        ZeroJacobiJacobi,
        vec![
            lt!(One, Lambda),
            lt!(One, Y0),
            lt!(Zero, QInvRoot(S1Nonzero)),
            lt!(QInvRoot(S1Nonzero), Root(S2Nonzero)),
        ],
    ));
    t.push(negative(
        "zjj-neg-03",
        ZeroJacobiJacobi,
        vec![
            lt!(One, Lambda),
            lt!(Y0, Zero),
            lt!(Root(S1Nonzero), Zero),
            lt!(Zero, Root(S2Nonzero)),
        ],
    ));
    t.push(negative(
        "zjj-neg-04",
        ZeroJacobiJacobi,
        vec![
            lt!(Zero, Lambda),
            lt!(Lambda, One),
            lt!(Y0, Zero),
            lt!(Root(S2Nonzero), Zero),
            lt!(Zero, Root(S1Nonzero)),
        ],
    ));
    // quadratic/linear, nonzero constant term
    t.push(negative(
        "jl-neg-01",
        EmptyJacobiLaguerre,
        vec![
            lt!(Zero, Lambda),
            lt!(QInvRoot(S1Single), Root(S2Lo)),
            lt!(Root(S2Lo), Zero),
            lt!(Zero, Root(S2Hi)),
        ],
    ));
    t.push(negative(
        "jl-neg-02",
        EmptyJacobiLaguerre,
        vec![
            lt!(Zero, Lambda),
            lt!(Zero, Root(S2Lo)),
            lt!(Root(S2Lo), QInvRoot(S1Single)),
            lt!(QInvRoot(S1Single), Root(S2Hi)),
        ],
    ));
    // quadratic/constant, nonzero constant term
    t.push(negative(
        "jh-neg-01",
        EmptyJacobiHermite,
        vec![
            lt!(Zero, Lambda),
            lt!(Root(S2Lo), Zero),
            lt!(Zero, Root(S2Hi)),
        ],
    ));
    // linear/quadratic, nonzero constant term
    t.push(negative(
        "lj-neg-01",
        EmptyLaguerreJacobi,
        vec![
            lt!(Lambda, Zero),
            lt!(QInvRoot(S1Lo), Zero),
            lt!(Zero, Root(S2Single)),
            lt!(Root(S2Single), QInvRoot(S1Hi)),
        ],
    ));
    t.push(negative(
        "lj-neg-02",
        EmptyLaguerreJacobi,
        vec![
            lt!(Zero, Lambda),
            lt!(Zero, QInvRoot(S1Lo)),
            lt!(QInvRoot(S1Hi), Root(S2Single)),
        ],
    ));
    t.push(negative(
        "lj-neg-03",
        EmptyLaguerreJacobi,
        vec![
            lt!(Zero, Lambda),
            lt!(Zero, Root(S2Single)),
            lt!(Root(S2Single), QInvRoot(S1Lo)),
        ],
    ));
    t.push(negative(
        "lj-neg-04",
        EmptyLaguerreJacobi,
        vec![
            lt!(Lambda, Zero),
            lt!(Root(S2Single), Zero),
            lt!(Zero, QInvRoot(S1Lo)),
        ],
    ));
    // constant/quadratic, nonzero constant term
    t.push(negative(
        "hj-neg-01",
        EmptyHermiteJacobi,
        vec![lt!(Zero, Root(S1Lo))],
    ));
    // quadratic/linear, zero constant term
    t.push(negative(
        "zjl-neg-01",
        ZeroJacobiLaguerre,
        vec![lt!(Zero, Lambda), lt!(Zero, Root(S2Nonzero)), lt!(One, Y0)],
    ));
    // Bessel/quadratic sigma1, zero constant term
    t.push(negative(
        "zbj-neg-01",
        ZeroBesselJacobi,
        vec![lt!(Zero, Lambda), lt!(Zero, Root(S1Nonzero))],
    ));
    // linear/quadratic, zero constant term
    t.push(negative(
        "zlj-neg-01",
        ZeroLaguerreJacobi,
        vec![lt!(Zero, Root(S1Nonzero)), lt!(One, Y0)],
    ));
    t.push(negative(
        "zlj-neg-02",
        ZeroLaguerreJacobi,
        vec![lt!(Zero, Root(S1Nonzero)), lt!(Y0, Zero)],
    ));

    t
}

/// The immutable rule table, built once at first use.
pub fn rule_table() -> &'static [Rule] {
    static TABLE: OnceLock<Vec<Rule>> = OnceLock::new();
    TABLE.get_or_init(build_table)
}

/// Serializes the table (rule id, class, predicates, scenario skeleton) for
/// audit.
pub fn rule_table_json() -> Doc {
    let rules = rule_table()
        .iter()
        .map(|r| {
            let mut fields: Vec<(String, Doc)> = vec![
                ("id".into(), Doc::Str(r.id.into())),
                ("class".into(), Doc::Str(r.class.slug().into())),
                (
                    "requires_complex_sigma2".into(),
                    Doc::Bool(r.requires_complex_sigma2),
                ),
                (
                    "predicates".into(),
                    Doc::Arr(
                        r.predicates
                            .iter()
                            .map(|p| Doc::Str(p.to_string()))
                            .collect(),
                    ),
                ),
            ];
            match r.outcome {
                Outcome::Reject => fields.push(("outcome".into(), Doc::Str("reject".into()))),
                Outcome::Scenario(sk) => {
                    let mut s: Vec<(String, Doc)> =
                        vec![("kind".into(), Doc::Int(sk.kind as i64))];
                    if let Some(g) = sk.generator {
                        s.push(("generator".into(), Doc::Str(g.label().into())));
                    }
                    if let Some(u) = sk.upper_from {
                        s.push(("upper".into(), Doc::Str(format!("{}/q", u.label()))));
                    }
                    s.push(("weight_form".into(), Doc::Str(sk.weight.slug().into())));
                    fields.push(("outcome".into(), Doc::Obj(s)));
                }
            }
            Doc::Obj(fields)
        })
        .collect();
    Doc::Obj(vec![
        ("schema_version".into(), Doc::Str("1".into())),
        ("rules".into(), Doc::Arr(rules)),
    ])
}

/// Lenient per-spec view of the quantities rules may mention.
struct SymbolView {
    lambda: Option<f64>,
    y0: Option<f64>,
    q: f64,
    roots1: Roots,
    roots2: Roots,
    s1_scale: f64,
    s2_scale: f64,
}

impl SymbolView {
    fn new(spec: &EHTSpec) -> Self {
        let (lambda, y0) = match case_invariants(spec) {
            Ok(inv) => (inv.lambda_q, inv.y0),
            Err(_) => (None, None),
        };
        SymbolView {
            lambda,
            y0,
            q: spec.q(),
            roots1: *spec.roots1(),
            roots2: *spec.roots2(),
            s1_scale: spec.sigma1().coeff_scale(),
            s2_scale: spec.sigma2().coeff_scale(),
        }
    }

    fn root(&self, r: RootRef) -> Option<f64> {
        let nonzero = |roots: &Roots, scale: f64| super::nonzero_root(roots, scale);
        match r {
            RootRef::S1Lo => match self.roots1 {
                Roots::RealPair { lo, .. } => Some(lo),
                _ => None,
            },
            RootRef::S1Hi => match self.roots1 {
                Roots::RealPair { hi, .. } => Some(hi),
                _ => None,
            },
            RootRef::S1Single => match self.roots1 {
                Roots::Linear(r) => Some(r),
                _ => None,
            },
            RootRef::S1Nonzero => nonzero(&self.roots1, self.s1_scale),
            RootRef::S2Lo => match self.roots2 {
                Roots::RealPair { lo, .. } => Some(lo),
                _ => None,
            },
            RootRef::S2Hi => match self.roots2 {
                Roots::RealPair { hi, .. } => Some(hi),
                _ => None,
            },
            RootRef::S2Single => match self.roots2 {
                Roots::Linear(r) => Some(r),
                _ => None,
            },
            RootRef::S2Nonzero => nonzero(&self.roots2, self.s2_scale),
        }
    }

    fn eval(&self, e: Expr) -> Option<f64> {
        match e {
            Expr::Zero => Some(0.0),
            Expr::One => Some(1.0),
            Expr::Root(r) => self.root(r),
            Expr::QInvRoot(r) => self.root(r).map(|v| v / self.q),
            Expr::Lambda => self.lambda,
            Expr::Q2Lambda => self.lambda.map(|l| l * self.q * self.q),
            Expr::Y0 => self.y0,
            Expr::QY0 => self.y0.map(|v| v * self.q),
        }
    }
}

enum PredVerdict {
    Pass,
    Boundary,
    Fail,
}

fn eval_predicate(view: &SymbolView, p: &Predicate) -> PredVerdict {
    let (Some(l), Some(r)) = (view.eval(p.lhs), view.eval(p.rhs)) else {
        return PredVerdict::Fail;
    };
    let band = RULE_GUARD_BAND * l.abs().max(r.abs()).max(1.0);
    let diff = r - l;
    match p.cmp {
        Cmp::Lt => {
            if diff > band {
                PredVerdict::Pass
            } else if diff >= -band {
                PredVerdict::Boundary
            } else {
                PredVerdict::Fail
            }
        }
        Cmp::Le => {
            if diff >= -band {
                PredVerdict::Pass
            } else {
                PredVerdict::Fail
            }
        }
    }
}

/// Outcome of enumerating the table over a spec (direct and reflected).
#[derive(Clone, Debug, Default)]
pub struct Enumeration {
    pub scenarios: Vec<OrthScenario>,
    /// Ids of matched rejection rules (named "fails to exist" cases).
    pub rejected: Vec<&'static str>,
}

fn instantiate(
    rule: &Rule,
    sk: &Skeleton,
    view: &SymbolView,
    warnings: Vec<String>,
) -> Option<OrthScenario> {
    let q = view.q;
    let scenario = match sk.kind {
        1 => {
            let (a, b) = match view.roots1 {
                Roots::RealPair { lo, hi, .. } => (lo, hi),
                _ => return None,
            };
            OrthScenario {
                kind: 1,
                interval: (Endpoint::Finite(a), Endpoint::Finite(b)),
                flavor: IntegralFlavor::Q,
                support: vec![
                    SupportBranch {
                        generator: a,
                        direction: Direction::QPower,
                        branch: LatticeBranch::FromA,
                    },
                    SupportBranch {
                        generator: b,
                        direction: Direction::QPower,
                        branch: LatticeBranch::FromB,
                    },
                ],
                n_points: None,
                rule_id: rule.id,
                weight_form_id: sk.weight,
                reflected: false,
                warnings,
            }
        }
        2 => {
            let g = view.root(sk.generator?)?;
            OrthScenario {
                kind: 2,
                interval: (Endpoint::Finite(0.0), Endpoint::Finite(g)),
                flavor: IntegralFlavor::Q,
                support: vec![SupportBranch {
                    generator: g,
                    direction: Direction::QPower,
                    branch: LatticeBranch::FromB,
                }],
                n_points: None,
                rule_id: rule.id,
                weight_form_id: sk.weight,
                reflected: false,
                warnings,
            }
        }
        3 => {
            let g = view.root(sk.generator?)?;
            let u = view.root(sk.upper_from?)?;
            // The chain q^{-k} g must land exactly on u: q^{-N} g = u.
            if !(g > 0.0 && u > g) {
                return None;
            }
            let n_est = (g / u).ln() / q.ln();
            let n = n_est.round();
            if !(0.0..=FINITE_N_MAX as f64).contains(&n) {
                return None;
            }
            let rebuilt = q.powi(-(n as i32)) * g;
            if (rebuilt - u).abs() > FINITE_N_REL * u.abs() {
                return None;
            }
            OrthScenario {
                kind: 3,
                interval: (Endpoint::Finite(g), Endpoint::Finite(u / q)),
                flavor: IntegralFlavor::QInverse,
                support: vec![SupportBranch {
                    generator: g,
                    direction: Direction::QInversePower,
                    branch: LatticeBranch::FromA,
                }],
                n_points: Some(n as i64),
                rule_id: rule.id,
                weight_form_id: sk.weight,
                reflected: false,
                warnings,
            }
        }
        4 => {
            let g = view.root(sk.generator?)?;
            OrthScenario {
                kind: 4,
                interval: (Endpoint::Finite(g), Endpoint::Infinity),
                flavor: IntegralFlavor::Q,
                support: vec![
                    SupportBranch {
                        generator: g,
                        direction: Direction::QPower,
                        branch: LatticeBranch::FromA,
                    },
                    SupportBranch {
                        generator: 1.0,
                        direction: Direction::BilateralPower,
                        branch: LatticeBranch::PositiveAxis,
                    },
                ],
                n_points: None,
                rule_id: rule.id,
                weight_form_id: sk.weight,
                reflected: false,
                warnings,
            }
        }
        5 => {
            let g = view.root(sk.generator?)?;
            OrthScenario {
                kind: 5,
                interval: (Endpoint::Finite(g), Endpoint::Infinity),
                flavor: IntegralFlavor::QInverse,
                support: vec![SupportBranch {
                    generator: g,
                    direction: Direction::QInversePower,
                    branch: LatticeBranch::FromA,
                }],
                n_points: None,
                rule_id: rule.id,
                weight_form_id: sk.weight,
                reflected: false,
                warnings,
            }
        }
        6 => OrthScenario {
            kind: 6,
            interval: (Endpoint::Finite(0.0), Endpoint::Infinity),
            flavor: IntegralFlavor::Q,
            support: vec![SupportBranch {
                generator: 1.0,
                direction: Direction::BilateralPower,
                branch: LatticeBranch::PositiveAxis,
            }],
            n_points: None,
            rule_id: rule.id,
            weight_form_id: sk.weight,
            reflected: false,
            warnings,
        },
        7 => OrthScenario {
            kind: 7,
            interval: (Endpoint::NegInfinity, Endpoint::Infinity),
            flavor: IntegralFlavor::Bilateral,
            support: vec![
                SupportBranch {
                    generator: 1.0,
                    direction: Direction::BilateralPower,
                    branch: LatticeBranch::PositiveAxis,
                },
                SupportBranch {
                    generator: -1.0,
                    direction: Direction::BilateralPower,
                    branch: LatticeBranch::NegativeAxis,
                },
            ],
            n_points: None,
            rule_id: rule.id,
            weight_form_id: sk.weight,
            reflected: false,
            warnings,
        },
        _ => unreachable!("kinds run 1..7"),
    };
    Some(scenario)
}

fn run_table(spec: &EHTSpec) -> Enumeration {
    let cls = classify(spec);
    let view = SymbolView::new(spec);
    let mut out = Enumeration::default();
    for rule in rule_table() {
        if rule.class != cls {
            continue;
        }
        if rule.requires_complex_sigma2 != view.roots2.is_complex() {
            // Complex rules need the pair; real-root rules mentioning S2
            // symbols fail resolution on complex pairs anyway, but rules not
            // mentioning them must not fire on a complex sigma2 either way.
            if rule.requires_complex_sigma2 {
                continue;
            }
        }
        let mut warnings = Vec::new();
        let mut matched = true;
        for p in &rule.predicates {
            match eval_predicate(&view, p) {
                PredVerdict::Pass => {}
                PredVerdict::Boundary => {
                    warnings.push(format!("condition '{p}' holds only within the guard band"))
                }
                PredVerdict::Fail => {
                    matched = false;
                    break;
                }
            }
        }
        if !matched {
            continue;
        }
        match rule.outcome {
            Outcome::Reject => out.rejected.push(rule.id),
            Outcome::Scenario(sk) => {
                if let Some(s) = instantiate(rule, &sk, &view, warnings) {
                    out.scenarios.push(s);
                }
            }
        }
    }
    out
}

fn negate_endpoint(e: Endpoint) -> Endpoint {
    match e {
        Endpoint::Finite(v) => Endpoint::Finite(-v),
        Endpoint::Infinity => Endpoint::NegInfinity,
        Endpoint::NegInfinity => Endpoint::Infinity,
    }
}

/// Maps a scenario found on the reflected equation back to the original
/// coordinates: supports and endpoints negate, axis branches swap sides.
fn reflect_back(mut s: OrthScenario) -> OrthScenario {
    let (lo, hi) = s.interval;
    s.interval = (negate_endpoint(hi), negate_endpoint(lo));
    for b in &mut s.support {
        b.generator = -b.generator;
        b.branch = match (b.branch, b.direction) {
            (LatticeBranch::PositiveAxis, _) => LatticeBranch::NegativeAxis,
            (LatticeBranch::NegativeAxis, _) => LatticeBranch::PositiveAxis,
            (LatticeBranch::FromA, _) => LatticeBranch::FromB,
            (LatticeBranch::FromB, _) => LatticeBranch::FromA,
        };
    }
    s.reflected = true;
    s
}

fn same_support(a: &OrthScenario, b: &OrthScenario) -> bool {
    if a.kind != b.kind || a.support.len() != b.support.len() {
        return false;
    }
    let mut ga: Vec<f64> = a.support.iter().map(|s| s.generator).collect();
    let mut gb: Vec<f64> = b.support.iter().map(|s| s.generator).collect();
    ga.sort_by(|x, y| x.partial_cmp(y).unwrap());
    gb.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ga.iter()
        .zip(gb.iter())
        .all(|(x, y)| (x - y).abs() <= 1e-12 * x.abs().max(y.abs()).max(1e-300))
}

/// Runs the rule table over the spec and over its x -> -x reflection
/// (negative-axis configurations are handled by reflection rather than by
/// duplicated rules), returning scenarios and matched rejection rules.
pub fn enumerate_scenarios_detailed(spec: &EHTSpec) -> Enumeration {
    let mut out = run_table(spec);
    let reflected_spec = spec.reflected();
    let mirrored = run_table(&reflected_spec);
    for s in mirrored.scenarios {
        let mapped = reflect_back(s);
        if !out.scenarios.iter().any(|d| same_support(d, &mapped)) {
            out.scenarios.push(mapped);
        }
    }
    for id in mirrored.rejected {
        if !out.rejected.contains(&id) {
            out.rejected.push(id);
        }
    }
    out
}

/// The scenario list alone; empty when only rejected configurations match.
pub fn enumerate_scenarios(spec: &EHTSpec) -> Vec<OrthScenario> {
    enumerate_scenarios_detailed(spec).scenarios
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_family, FamilyId};
    use crate::qcore::QParam;
    use std::collections::BTreeMap;

    fn family(id: FamilyId, kv: &[(&str, f64)]) -> EHTSpec {
        let mut p = BTreeMap::new();
        for (k, v) in kv {
            p.insert(k.to_string(), *v);
        }
        make_family(id, &p, QParam::new(0.5).unwrap()).unwrap().spec
    }

    #[test]
    fn big_q_jacobi_two_sided_scenario() {
        let spec = family(FamilyId::BigQJacobi, &[("a", 0.5), ("b", 0.5), ("c", -0.5)]);
        let list = enumerate_scenarios(&spec);
        assert_eq!(list.len(), 1);
        let s = &list[0];
        assert_eq!(s.kind, 1);
        assert_eq!(s.rule_id, "jj-two-sided");
        // branches start at c q = -0.25 and a q = 0.25
        let gens: Vec<f64> = s.support.iter().map(|b| b.generator).collect();
        assert!(gens.contains(&-0.25) && gens.contains(&0.25));
    }

    #[test]
    fn q_hahn_finite_scenario() {
        let spec = family(
            FamilyId::QHahn,
            &[("alpha", 0.5), ("beta", 0.5), ("N", 5.0)],
        );
        let list = enumerate_scenarios(&spec);
        assert_eq!(list.len(), 1);
        let s = &list[0];
        assert_eq!(s.kind, 3);
        assert_eq!(s.n_points, Some(5));
        assert!((s.support[0].generator - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejected_case_yields_empty_list() {
        // Ordering a2 < b2 < 0 < a1/q < b1/q with Lambda_q > 1.
        let spec = crate::fixtures::jj_from_roots(0.5, 1.0, 4.0, -5.0, -1.0);
        let e = enumerate_scenarios_detailed(&spec);
        assert!(e.scenarios.is_empty());
        assert!(e.rejected.contains(&"jj-neg-04"));
    }

    #[test]
    fn reflection_handles_negative_axis_configuration() {
        // Constant sigma1 with both sigma2 roots negative (the mirror image
        // of an Al-Salam-Carlitz-II-type equation): only the reflected run
        // of the table matches.
        let qp = QParam::new(0.5).unwrap();
        let s1 = crate::qcore::RealPolynomial::constant(1.0);
        let tau = crate::qcore::RealPolynomial::new(vec![-3.0, -2.0]);
        let spec = crate::eht::make_eht(s1, tau, qp).unwrap();
        let list = enumerate_scenarios(&spec);
        assert_eq!(list.len(), 1);
        let s = &list[0];
        assert_eq!(s.kind, 5);
        assert!(s.reflected);
        assert!(s.support[0].generator < 0.0);
    }

    #[test]
    fn rule_table_serializes() {
        let doc = rule_table_json();
        let text = doc.emit();
        assert!(text.contains("jj-two-sided"));
        assert!(text.contains("reject"));
    }
}
