//! Support enumeration, Gram matrices of the monic solutions against the
//! weight under the scenario's integral flavor, the Stieltjes/Gram-Schmidt
//! generation path (the independent oracle for the difference-operator
//! solver), and norm-ratio verification against the printed closed forms.

use crate::classify::{Direction, IntegralFlavor, OrthScenario};
use crate::eht::{monic_solution, EHTSpec};
use crate::families::{dn2, FamilyId, Params};
use crate::json::{opt_num, Doc};
use crate::qcore::{LatticeBranch, LatticePoint, QParam, RealPolynomial, TAIL_WINDOW};
use crate::weight::{eval_weight, WeightForm};
use std::fmt;

/// Hard magnitude cap: a monitored summand beyond this is divergence.
const SUMMAND_CAP: f64 = 1e200;
/// A monitored summand growing this many consecutive steps is divergence.
const GROW_WINDOW: usize = 128;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A support branch's moment-weighted summand keeps growing.
    Divergence { at: f64 },
    /// Finite support of N+1 points cannot host degrees above N.
    DegreeExceedsSupport { n_max: u32, points: usize },
    /// Gram-Schmidt hit a vanishing norm (degenerate discrete measure).
    DegenerateMeasure { degree: u32 },
    /// The printed norm evaluates to 0, infinity or NaN at these parameters
    /// (a factor of the display hits an exact lattice point).
    NormUndefined { n: u32 },
    Weight(crate::weight::Error),
    Eht(crate::eht::Error),
    Family(crate::families::Error),
    Qcore(crate::qcore::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Divergence { at } => write!(f, "support branch diverges near x = {at}"),
            Error::DegreeExceedsSupport { n_max, points } => {
                write!(f, "degree {n_max} needs more than {points} support points")
            }
            Error::DegenerateMeasure { degree } => {
                write!(f, "vanishing norm at degree {degree}")
            }
            Error::NormUndefined { n } => {
                write!(f, "printed norm degenerates at n = {n} for these parameters")
            }
            Error::Weight(e) => write!(f, "{e}"),
            Error::Eht(e) => write!(f, "{e}"),
            Error::Family(e) => write!(f, "{e}"),
            Error::Qcore(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<crate::weight::Error> for Error {
    fn from(e: crate::weight::Error) -> Self {
        Error::Weight(e)
    }
}

impl From<crate::eht::Error> for Error {
    fn from(e: crate::eht::Error) -> Self {
        Error::Eht(e)
    }
}

impl From<crate::families::Error> for Error {
    fn from(e: crate::families::Error) -> Self {
        Error::Family(e)
    }
}

impl From<crate::qcore::Error> for Error {
    fn from(e: crate::qcore::Error) -> Self {
        Error::Qcore(e)
    }
}

/// Truncation record for one support branch.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchReport {
    pub branch: LatticeBranch,
    pub terms: usize,
    pub tail_bound: f64,
}

/// An enumerated, truncated support with its measure masses.
#[derive(Clone, Debug)]
pub struct Support {
    /// Points ordered ascending by value.
    pub points: Vec<LatticePoint>,
    /// Measure mass at each point: the Jackson coefficient times the weight.
    pub weights: Vec<f64>,
    pub truncation: Vec<BranchReport>,
    pub finite: bool,
    pub n: Option<i64>,
}

struct BranchAccum {
    entries: Vec<(LatticePoint, f64)>,
    terms: usize,
    tail: f64,
}

/// Walks one lattice direction, stopping by the relative-tail rule on the
/// moment-weighted summand mass * rho * max(1,|x|)^{2 n_max}, which bounds
/// every Gram summand of degree m + n <= 2 n_max.
fn walk(
    spec_params: &QParam,
    wf: &WeightForm,
    generator: f64,
    exponents: impl Iterator<Item = i64>,
    flavor_const: f64,
    branch: LatticeBranch,
    n_max: u32,
    cap: Option<i64>,
) -> Result<BranchAccum, Error> {
    let q = spec_params.q();
    let mut entries = Vec::new();
    let mut running = 0.0f64;
    let mut small_run = 0usize;
    let mut grow_run = 0usize;
    let mut prev = f64::INFINITY;
    let mut terms = 0usize;
    let mut tail = 0.0f64;
    for k in exponents {
        let x = generator * q.powi(k as i32);
        let rho = eval_weight(wf, x, spec_params)?;
        let mass = flavor_const * x.abs() * rho;
        let monitored = mass * x.abs().max(1.0).powi(2 * n_max as i32);
        if !monitored.is_finite() || monitored > SUMMAND_CAP {
            return Err(Error::Divergence { at: x });
        }
        entries.push((
            LatticePoint {
                value: x,
                exponent: k,
                branch,
            },
            mass,
        ));
        terms += 1;
        running += monitored;
        if cap.is_none() {
            if monitored > prev {
                grow_run += 1;
                if grow_run >= GROW_WINDOW {
                    return Err(Error::Divergence { at: x });
                }
            } else {
                grow_run = 0;
            }
            prev = monitored;
            if monitored < spec_params.eps_tail() * running.max(f64::MIN_POSITIVE) {
                small_run += 1;
                if small_run >= TAIL_WINDOW {
                    tail = monitored * TAIL_WINDOW as f64;
                    break;
                }
            } else {
                small_run = 0;
            }
            if terms > spec_params.max_terms() {
                return Err(Error::Qcore(crate::qcore::Error::Nonconvergence {
                    terms: spec_params.max_terms(),
                }));
            }
        }
    }
    Ok(BranchAccum {
        entries,
        terms,
        tail,
    })
}

/// Enumerates the scenario's support lattice: finite chains exactly,
/// infinite branches truncated by the moment-weighted tail rule.
pub fn enumerate_support(
    scenario: &OrthScenario,
    spec: &EHTSpec,
    wf: &WeightForm,
    n_max: u32,
    params: &QParam,
) -> Result<Support, Error> {
    debug_assert_eq!(spec.q(), params.q(), "spec and truncation policy disagree on q");
    let q = params.q();
    let flavor_const = match scenario.flavor {
        IntegralFlavor::Q | IntegralFlavor::Bilateral => 1.0 - q,
        IntegralFlavor::QInverse => 1.0 / q - 1.0,
    };
    let mut all: Vec<(LatticePoint, f64)> = Vec::new();
    let mut truncation = Vec::new();
    for b in &scenario.support {
        match b.direction {
            Direction::QPower => {
                let acc = walk(
                    params,
                    wf,
                    b.generator,
                    0i64..,
                    flavor_const,
                    b.branch,
                    n_max,
                    None,
                )?;
                truncation.push(BranchReport {
                    branch: b.branch,
                    terms: acc.terms,
                    tail_bound: acc.tail,
                });
                all.extend(acc.entries);
            }
            Direction::QInversePower => {
                let cap = scenario.n_points;
                let acc = match cap {
                    Some(n) => walk(
                        params,
                        wf,
                        b.generator,
                        (0..=n).map(|k| -k),
                        flavor_const,
                        b.branch,
                        n_max,
                        Some(n),
                    )?,
                    None => walk(
                        params,
                        wf,
                        b.generator,
                        (0i64..).map(|k| -k),
                        flavor_const,
                        b.branch,
                        n_max,
                        None,
                    )?,
                };
                truncation.push(BranchReport {
                    branch: b.branch,
                    terms: acc.terms,
                    tail_bound: acc.tail,
                });
                all.extend(acc.entries);
            }
            Direction::BilateralPower => {
                let down = walk(
                    params,
                    wf,
                    b.generator,
                    0i64..,
                    flavor_const,
                    b.branch,
                    n_max,
                    None,
                )?;
                let up = walk(
                    params,
                    wf,
                    b.generator,
                    (1i64..).map(|k| -k),
                    flavor_const,
                    b.branch,
                    n_max,
                    None,
                )?;
                truncation.push(BranchReport {
                    branch: b.branch,
                    terms: down.terms + up.terms,
                    tail_bound: down.tail + up.tail,
                });
                all.extend(down.entries);
                all.extend(up.entries);
            }
        }
    }
    all.sort_by(|a, b| a.0.value.partial_cmp(&b.0.value).unwrap());
    let finite = scenario.kind == 3;
    let support = Support {
        points: all.iter().map(|e| e.0).collect(),
        weights: all.iter().map(|e| e.1).collect(),
        truncation,
        finite,
        n: scenario.n_points,
    };
    if finite {
        debug_assert_eq!(
            support.points.len() as i64,
            scenario.n_points.unwrap_or(-1) + 1
        );
    }
    Ok(support)
}

/// Discrete inner product against the support measure. The product
/// f(x) g(x) is formed before the mass factor so I(f, g) and I(g, f) are
/// the same floating-point sum, term by term.
fn inner(support: &Support, f: impl Fn(f64) -> f64, g: impl Fn(f64) -> f64) -> f64 {
    let mut acc = crate::qcore::jackson::Accumulator::default();
    for (p, w) in support.points.iter().zip(&support.weights) {
        acc.add(w * (f(p.value) * g(p.value)));
    }
    acc.total()
}

/// Monic orthogonal polynomials on the discrete measure via the Stieltjes
/// three-term recurrence (Gram-Schmidt on the monomial ladder). Independent
/// of the difference-equation solver: only inner products enter.
pub fn gram_schmidt_monic(support: &Support, n_max: u32) -> Result<Vec<RealPolynomial>, Error> {
    if (n_max as usize) >= support.points.len() {
        return Err(Error::DegreeExceedsSupport {
            n_max,
            points: support.points.len(),
        });
    }
    let mut polys = vec![RealPolynomial::constant(1.0)];
    let mut norms = vec![inner(support, |_| 1.0, |_| 1.0)];
    for k in 0..n_max {
        let pk = polys[k as usize].clone();
        let nk = norms[k as usize];
        if nk == 0.0 {
            return Err(Error::DegenerateMeasure { degree: k });
        }
        let alpha = inner(support, |x| x * pk.eval(x), |x| pk.eval(x)) / nk;
        let mut next = pk.mul_linear(alpha);
        if k > 0 {
            let beta = nk / norms[k as usize - 1];
            next = next.sub(&polys[k as usize - 1].scale(beta));
        }
        let nn = inner(support, |x| next.eval(x), |x| next.eval(x));
        polys.push(next);
        norms.push(nn);
    }
    Ok(polys)
}

/// Three-term recurrence data extracted from the discrete measure:
/// x P_k = P_{k+1} + alpha_k P_k + beta_k P_{k-1}.
pub fn recurrence_coefficients(
    support: &Support,
    n_max: u32,
) -> Result<(Vec<f64>, Vec<f64>), Error> {
    let polys = gram_schmidt_monic(support, n_max)?;
    let mut alphas = Vec::new();
    let mut betas = Vec::new();
    for k in 0..n_max as usize {
        let nk = inner(support, |x| polys[k].eval(x), |x| polys[k].eval(x));
        let alpha = inner(support, |x| x * polys[k].eval(x), |x| polys[k].eval(x)) / nk;
        alphas.push(alpha);
        if k > 0 {
            let nk1 = inner(support, |x| polys[k - 1].eval(x), |x| polys[k - 1].eval(x));
            betas.push(nk / nk1);
        }
    }
    Ok((alphas, betas))
}

/// Configurable verification thresholds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Thresholds {
    /// Cap on |I_mn| / sqrt(I_mm I_nn) for m != n.
    pub off_diag: f64,
    /// Cap on max/min - 1 of the |Gram diagonal / printed norm| ratios.
    pub ratio_spread: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            off_diag: 1e-8,
            ratio_spread: 1e-6,
        }
    }
}

/// Numerical orthogonality verdict.
#[derive(Clone, Debug)]
pub struct GramReport {
    pub n_max: u32,
    pub gram: Vec<Vec<f64>>,
    /// max |I_mn| / sqrt(I_mm I_nn) over m != n.
    pub off_diag_max: f64,
    /// |I_nn / d_n^2| when a printed norm is available.
    pub norm_ratios: Option<Vec<f64>>,
    /// max/min - 1 over the ratios.
    pub ratio_spread: Option<f64>,
    pub verdict: bool,
    pub thresholds: Thresholds,
}

/// Gram matrix of the monic solutions P_0..P_{n_max} under the scenario's
/// integral flavor. The verdict is true iff the normalized off-diagonal
/// maximum stays under the threshold.
pub fn gram_matrix(
    spec: &EHTSpec,
    _wf: &WeightForm,
    support: &Support,
    _scenario: &OrthScenario,
    n_max: u32,
    thresholds: Thresholds,
) -> Result<GramReport, Error> {
    if (n_max as usize) >= support.points.len() {
        return Err(Error::DegreeExceedsSupport {
            n_max,
            points: support.points.len(),
        });
    }
    let mut polys = Vec::new();
    for n in 0..=n_max {
        polys.push(monic_solution(spec, n)?);
    }
    let dim = n_max as usize + 1;
    let mut gram = vec![vec![0.0f64; dim]; dim];
    for m in 0..dim {
        for n in 0..dim {
            gram[m][n] = inner(support, |x| polys[m].eval(x), |x| polys[n].eval(x));
        }
    }
    let mut off = 0.0f64;
    for m in 0..dim {
        for n in 0..dim {
            if m != n {
                let denom = (gram[m][m].abs() * gram[n][n].abs()).sqrt().max(1e-300);
                off = off.max(gram[m][n].abs() / denom);
            }
        }
    }
    Ok(GramReport {
        n_max,
        gram,
        off_diag_max: off,
        norm_ratios: None,
        ratio_spread: None,
        verdict: off < thresholds.off_diag,
        thresholds,
    })
}

/// Evaluates the family's printed squared norm (all Pochhammer machinery
/// routed through the shared q-arithmetic).
pub fn norm_formula(id: FamilyId, params: &Params, p: &QParam, n: u32) -> Result<f64, Error> {
    Ok(dn2::norm_formula(id, params, p, n)?)
}

/// Runs the Gram check; with a family attached, also fills the norm ratios
/// |I_nn / d_n^2| and requires their spread (a normalization-independent
/// check) to stay under the threshold.
pub fn verify_orthogonality(
    spec: &EHTSpec,
    wf: &WeightForm,
    scenario: &OrthScenario,
    family: Option<(FamilyId, &Params)>,
    n_max: u32,
    params: &QParam,
    thresholds: Thresholds,
) -> Result<GramReport, Error> {
    let support = enumerate_support(scenario, spec, wf, n_max, params)?;
    let mut report = gram_matrix(spec, wf, &support, scenario, n_max, thresholds)?;
    if let Some((id, fam_params)) = family {
        let mut ratios = Vec::new();
        for n in 0..=n_max {
            let dn2 = norm_formula(id, fam_params, params, n)?;
            if !dn2.is_finite() || dn2 == 0.0 {
                return Err(Error::NormUndefined { n });
            }
            ratios.push((report.gram[n as usize][n as usize] / dn2).abs());
        }
        let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
        let min = ratios.iter().cloned().fold(f64::MAX, f64::min);
        let spread = max / min - 1.0;
        report.verdict = report.verdict && spread < thresholds.ratio_spread;
        report.norm_ratios = Some(ratios);
        report.ratio_spread = Some(spread);
    }
    Ok(report)
}

impl Support {
    pub fn to_json(&self) -> Doc {
        Doc::Obj(vec![
            ("points".into(), Doc::Int(self.points.len() as i64)),
            ("finite".into(), Doc::Bool(self.finite)),
            (
                "n".into(),
                match self.n {
                    Some(n) => Doc::Int(n),
                    None => Doc::Null,
                },
            ),
            (
                "branches".into(),
                Doc::Arr(
                    self.truncation
                        .iter()
                        .map(|b| {
                            Doc::Obj(vec![
                                ("branch".into(), Doc::Str(b.branch.label().into())),
                                ("terms".into(), Doc::Int(b.terms as i64)),
                                ("tail_bound".into(), Doc::Num(b.tail_bound)),
                            ])
                        })
                        .collect(),
                ),
            ),
        ])
    }
}

impl GramReport {
    pub fn to_json(&self) -> Doc {
        Doc::Obj(vec![
            ("n_max".into(), Doc::Int(self.n_max as i64)),
            ("off_diag_max".into(), Doc::Num(self.off_diag_max)),
            (
                "norm_ratios".into(),
                match &self.norm_ratios {
                    Some(r) => Doc::Arr(r.iter().map(|&v| Doc::Num(v)).collect()),
                    None => Doc::Null,
                },
            ),
            ("ratio_spread".into(), opt_num(self.ratio_spread)),
            ("verdict".into(), Doc::Bool(self.verdict)),
            (
                "thresholds".into(),
                Doc::Obj(vec![
                    ("off_diag".into(), Doc::Num(self.thresholds.off_diag)),
                    (
                        "ratio_spread".into(),
                        Doc::Num(self.thresholds.ratio_spread),
                    ),
                ]),
            ),
            (
                "gram".into(),
                Doc::Arr(
                    self.gram
                        .iter()
                        .map(|row| Doc::Arr(row.iter().map(|&v| Doc::Num(v)).collect()))
                        .collect(),
                ),
            ),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, enumerate_scenarios};
    use crate::families::{make_family, FamilyId};
    use crate::weight::closed_form_weight;
    use std::collections::BTreeMap;

    fn qp() -> QParam {
        QParam::new(0.5).unwrap()
    }

    fn pipeline(id: FamilyId, kv: &[(&str, f64)]) -> (EHTSpec, OrthScenario, WeightForm) {
        let mut p = BTreeMap::new();
        for (k, v) in kv {
            p.insert(k.to_string(), *v);
        }
        let spec = make_family(id, &p, qp()).unwrap().spec;
        let s = enumerate_scenarios(&spec).into_iter().next().expect("scenario");
        let wf = closed_form_weight(&spec, classify(&spec), &s).unwrap();
        (spec, s, wf)
    }

    #[test]
    fn q_hahn_support_is_exactly_six_points() {
        let (spec, s, wf) = pipeline(
            FamilyId::QHahn,
            &[("alpha", 0.5), ("beta", 0.5), ("N", 5.0)],
        );
        let sup = enumerate_support(&s, &spec, &wf, 5, spec.params()).unwrap();
        assert!(sup.finite);
        assert_eq!(sup.points.len(), 6);
        let xs: Vec<f64> = sup.points.iter().map(|p| p.value).collect();
        assert_eq!(xs, vec![1.0, 2.0, 4.0, 8.0, 16.0, 32.0]);
        assert!(sup.weights.iter().all(|&w| w > 0.0));
    }

    #[test]
    fn big_q_jacobi_support_has_two_branches() {
        let (spec, s, wf) = pipeline(
            FamilyId::BigQJacobi,
            &[("a", 0.5), ("b", 0.5), ("c", -0.5)],
        );
        let sup = enumerate_support(&s, &spec, &wf, 6, spec.params()).unwrap();
        assert!(!sup.finite);
        assert_eq!(sup.truncation.len(), 2);
        assert!(sup.points.iter().any(|p| p.value < 0.0));
        assert!(sup.points.iter().any(|p| p.value > 0.0));
        // value = generator * q^exponent within rounding
        for p in &sup.points {
            let gen = if p.value < 0.0 { -0.25 } else { 0.25 };
            let expect = gen * 0.5f64.powi(p.exponent as i32);
            assert!((p.value - expect).abs() <= 1e-15 * expect.abs());
        }
    }

    #[test]
    fn q_laguerre_bilateral_support() {
        let (spec, s, wf) = pipeline(FamilyId::QLaguerre, &[("alpha", 0.5)]);
        assert_eq!(s.kind, 6);
        let sup = enumerate_support(&s, &spec, &wf, 6, spec.params()).unwrap();
        // lattice points on both sides of 1
        assert!(sup.points.iter().any(|p| p.value > 1.5));
        assert!(sup.points.iter().any(|p| p.value < 0.5));
    }

    #[test]
    fn gram_diagonal_positive_and_off_diag_small() {
        let (spec, s, wf) = pipeline(
            FamilyId::LittleQJacobi,
            &[("a", 0.5), ("b", 0.5)],
        );
        let sup = enumerate_support(&s, &spec, &wf, 6, spec.params()).unwrap();
        let report = gram_matrix(&spec, &wf, &sup, &s, 6, Thresholds::default()).unwrap();
        assert!(report.verdict, "off_diag_max = {}", report.off_diag_max);
        for n in 0..=6 {
            assert!(report.gram[n][n] > 0.0);
        }
        // exact symmetry: same summands in the same order
        for m in 0..=6 {
            for n in 0..=6 {
                assert_eq!(report.gram[m][n], report.gram[n][m]);
            }
        }
    }

    #[test]
    fn gram_schmidt_matches_monic_solutions() {
        let (spec, s, wf) = pipeline(
            FamilyId::BigQJacobi,
            &[("a", 0.5), ("b", 0.5), ("c", -0.5)],
        );
        let sup = enumerate_support(&s, &spec, &wf, 6, spec.params()).unwrap();
        let gs = gram_schmidt_monic(&sup, 6).unwrap();
        for n in 0..=6u32 {
            let direct = monic_solution(&spec, n).unwrap();
            let scale = direct.coeff_scale().max(1.0);
            for k in 0..=n as usize {
                assert!(
                    (gs[n as usize].coeff(k) - direct.coeff(k)).abs() <= 1e-9 * scale,
                    "n={n} k={k}: {} vs {}",
                    gs[n as usize].coeff(k),
                    direct.coeff(k)
                );
            }
        }
    }

    #[test]
    fn three_term_recurrence_consistency() {
        let (spec, s, wf) = pipeline(
            FamilyId::LittleQJacobi,
            &[("a", 0.5), ("b", 0.5)],
        );
        let sup = enumerate_support(&s, &spec, &wf, 6, spec.params()).unwrap();
        let (_, betas) = recurrence_coefficients(&sup, 6).unwrap();
        let report = gram_matrix(&spec, &wf, &sup, &s, 6, Thresholds::default()).unwrap();
        for (k, beta) in betas.iter().enumerate() {
            assert!(*beta > 0.0);
            let expect = report.gram[k + 1][k + 1] / report.gram[k][k];
            assert!(
                (beta - expect).abs() <= 1e-8 * expect.abs(),
                "beta_{k} = {beta} vs diagonal ratio {expect}"
            );
        }
    }

    #[test]
    fn norm_ratio_constancy_for_little_q_jacobi() {
        let mut p = BTreeMap::new();
        p.insert("a".to_string(), 0.5);
        p.insert("b".to_string(), 0.5);
        let spec = make_family(FamilyId::LittleQJacobi, &p, qp()).unwrap().spec;
        let s = enumerate_scenarios(&spec).into_iter().next().unwrap();
        let wf = closed_form_weight(&spec, classify(&spec), &s).unwrap();
        let report = verify_orthogonality(
            &spec,
            &wf,
            &s,
            Some((FamilyId::LittleQJacobi, &p)),
            6,
            spec.params(),
            Thresholds::default(),
        )
        .unwrap();
        assert!(report.verdict);
        assert!(report.ratio_spread.unwrap() < 1e-7);
    }

    #[test]
    fn kind3_gram_is_reproducible_bit_for_bit() {
        let (spec, s, wf) = pipeline(
            FamilyId::QHahn,
            &[("alpha", 0.5), ("beta", 0.5), ("N", 5.0)],
        );
        let sup = enumerate_support(&s, &spec, &wf, 5, spec.params()).unwrap();
        let a = gram_matrix(&spec, &wf, &sup, &s, 5, Thresholds::default()).unwrap();
        let b = gram_matrix(&spec, &wf, &sup, &s, 5, Thresholds::default()).unwrap();
        assert_eq!(a.gram, b.gram);
    }

    #[test]
    fn divergent_moment_is_reported_during_truncation() {
        // Shifting the power exponent down makes the summand grow towards
        // the origin side of the bilateral lattice.
        let (spec, s, wf) = pipeline(FamilyId::QLaguerre, &[("alpha", 0.5)]);
        let mut bad = wf.clone();
        bad.power_alpha = bad.power_alpha.map(|a| a - 3.0);
        assert!(matches!(
            enumerate_support(&s, &spec, &bad, 6, spec.params()),
            Err(Error::Divergence { .. }) | Err(Error::Qcore(_))
        ));
    }

    #[test]
    fn degree_beyond_finite_support_is_an_error() {
        let (spec, s, wf) = pipeline(
            FamilyId::QHahn,
            &[("alpha", 0.5), ("beta", 0.5), ("N", 5.0)],
        );
        let sup = enumerate_support(&s, &spec, &wf, 6, spec.params()).unwrap();
        assert!(matches!(
            gram_matrix(&spec, &wf, &sup, &s, 6, Thresholds::default()),
            Err(Error::DegreeExceedsSupport { .. })
        ));
    }
}
