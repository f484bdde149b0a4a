//! Construction and evaluation of the closed-form q-weight functions, the
//! Pearson-recursion evaluator that serves as their independent oracle, and
//! the behaviour of the weight at the origin for the zero classes.
//!
//! A weight form is a product of infinite q-Pochhammer factors in `x` or
//! `1/x`, an optional power `|x|^alpha` whose exponent is pinned by a
//! coefficient ratio `q^alpha = r`, and an optional `x^{log_q x}`-type
//! factor. The instantiated form satisfies the Pearson step
//! `rho(qx)/rho(x) = sigma2(x) / (q sigma1(qx))` on its support; when the
//! pinning ratio `r` is negative the exponent uses `|r|` and the sign is
//! recorded as absorbed (the evaluator returns magnitudes, which on a valid
//! support is the positive weight itself).

use crate::classify::{
    CaseInvariants, Endpoint, HahnClass, OrthScenario, WeightFormId, RULE_GUARD_BAND,
};
use crate::eht::{pearson_ratio, EHTSpec, Roots};
use crate::json::{opt_num, Doc};
use crate::qcore::QParam;
use std::fmt;

/// A factor distance below this (relative) flags a pole of the weight.
const POLE_REL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The table row cannot represent this scenario (vanishing pinning
    /// ratio or missing roots).
    RowInapplicable { reason: &'static str },
    /// Evaluation at a pole of the weight.
    Pole { at: f64 },
    /// Nonpositive argument where a fractional power or log-power factor
    /// is present.
    Domain { x: f64 },
    /// The Pearson recursion crossed a zero or pole of the ratio.
    Propagation { step: i64, at: f64 },
    /// The class does not define the requested invariant.
    InvariantUndefined,
    Eht(crate::eht::Error),
    Qcore(crate::qcore::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RowInapplicable { reason } => write!(f, "weight row inapplicable: {reason}"),
            Error::Pole { at } => write!(f, "weight pole at x = {at}"),
            Error::Domain { x } => write!(f, "weight undefined at x = {x}"),
            Error::Propagation { step, at } => {
                write!(f, "Pearson recursion blocked at step {step} (x = {at})")
            }
            Error::InvariantUndefined => write!(f, "class defines no y-intercept"),
            Error::Eht(e) => write!(f, "{e}"),
            Error::Qcore(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<crate::eht::Error> for Error {
    fn from(e: crate::eht::Error) -> Self {
        Error::Eht(e)
    }
}

impl From<crate::qcore::Error> for Error {
    fn from(e: crate::qcore::Error) -> Self {
        Error::Qcore(e)
    }
}

/// Logarithmic lattice factors appearing in the one-sided rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HFactor {
    /// sqrt(x^{log_q x - 1}); decays like q^{k(k+1)/2} along x = q^{-k} g.
    HalfLog,
    /// x^{log_q x}.
    XLog,
    /// x^{log_q x - 1}.
    XLogMinus1,
}

impl HFactor {
    fn eval(&self, y: f64, q: f64) -> f64 {
        let ly = y.ln();
        let lq = q.ln();
        match self {
            HFactor::HalfLog => (0.5 * (ly / lq - 1.0) * ly).exp(),
            HFactor::XLog => ((ly / lq) * ly).exp(),
            HFactor::XLogMinus1 => ((ly / lq - 1.0) * ly).exp(),
        }
    }

    pub fn slug(&self) -> &'static str {
        match self {
            HFactor::HalfLog => "sqrt-x-log-minus-1",
            HFactor::XLog => "x-log",
            HFactor::XLogMinus1 => "x-log-minus-1",
        }
    }
}

/// One infinite q-Pochhammer factor template.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PochFactor {
    /// (c x; q)_inf.
    Ascending(f64),
    /// The conjugate-pair product of (z x; q)_inf (conj(z) x; q)_inf,
    /// stored through 2 Re z and |z|^2 so arithmetic stays real.
    AscendingConj { two_re: f64, abs2: f64 },
    /// (c / x; q)_inf.
    Descending(f64),
}

/// An instantiated closed-form weight.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightForm {
    pub form_id: WeightFormId,
    /// Exponent of |x|^alpha; `None` when the row carries no power factor.
    pub power_alpha: Option<f64>,
    /// True when the pinning ratio was negative and |ratio| was used.
    pub alpha_sign_absorbed: bool,
    pub h_factor: Option<HFactor>,
    pub numerators: Vec<PochFactor>,
    pub denominators: Vec<PochFactor>,
    /// (x_ref, value): the weight is scaled so that it takes `value` at
    /// `x_ref` (in original coordinates).
    pub normalization_point: (f64, f64),
    /// Evaluate the template at -x (scenario found on the reflected axis).
    pub reflect_input: bool,
    norm_constant: f64,
    q: f64,
}

fn roots_pair(r: &Roots) -> Option<(f64, f64)> {
    match *r {
        Roots::RealPair { lo, hi, .. } => Some((lo, hi)),
        _ => None,
    }
}

fn single_root(r: &Roots) -> Option<f64> {
    match *r {
        Roots::Linear(v) => Some(v),
        _ => None,
    }
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1e-300)
}

/// Splits a real root pair into (the one matching `g`, the other one).
fn split_pair(pair: (f64, f64), g: f64) -> Option<(f64, f64)> {
    if close(pair.0, g) {
        Some((pair.0, pair.1))
    } else if close(pair.1, g) {
        Some((pair.1, pair.0))
    } else {
        None
    }
}

struct RowData {
    alpha_ratio: Option<f64>,
    h_factor: Option<HFactor>,
    numerators: Vec<PochFactor>,
    denominators: Vec<PochFactor>,
}

fn sigma2_denominators(spec: &EHTSpec) -> Result<Vec<PochFactor>, Error> {
    match *spec.roots2() {
        Roots::RealPair { lo, hi, .. } => {
            Ok(vec![PochFactor::Ascending(1.0 / lo), PochFactor::Ascending(1.0 / hi)])
        }
        Roots::ComplexPair { re, im } => {
            // 1/z for z = re + i im: (re - i im)/|z|^2; the pair template
            // needs 2 Re(1/z) and |1/z|^2.
            let abs2 = re * re + im * im;
            Ok(vec![PochFactor::AscendingConj {
                two_re: 2.0 * re / abs2,
                abs2: 1.0 / abs2,
            }])
        }
        _ => Err(Error::RowInapplicable {
            reason: "sigma2 must be quadratic here",
        }),
    }
}

fn build_row(
    spec: &EHTSpec,
    scenario: &OrthScenario,
) -> Result<RowData, Error> {
    let q = spec.q();
    let t = spec.taylor();
    let h1 = 0.5 * t.sigma1_dd;
    let h2 = 0.5 * t.sigma2_dd;
    let missing = || Error::RowInapplicable {
        reason: "scenario roots do not match the row template",
    };
    // Kind-3 rows anchor on the chain generator (a sigma2 root) and on the
    // sigma1 root whose /q shift is the upper endpoint.
    let generator = scenario.support.first().map(|b| b.generator);
    let upper_root = match scenario.interval.1 {
        Endpoint::Finite(u) => Some(q * u),
        _ => None,
    };
    match scenario.weight_form_id {
        WeightFormId::JjRatio => {
            let (a1, b1) = roots_pair(spec.roots1()).ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: None,
                h_factor: None,
                numerators: vec![
                    PochFactor::Ascending(q / a1),
                    PochFactor::Ascending(q / b1),
                ],
                denominators: sigma2_denominators(spec)?,
            })
        }
        WeightFormId::JjPowerMixed => {
            let g = generator.ok_or_else(missing)?;
            let u = upper_root.ok_or_else(missing)?;
            let (s1, o1) = split_pair(roots_pair(spec.roots1()).ok_or_else(missing)?, u).ok_or_else(missing)?;
            let (s2, o2) = split_pair(roots_pair(spec.roots2()).ok_or_else(missing)?, g).ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: Some(h2 * o2 / (q * q * h1 * s1)),
                h_factor: None,
                numerators: vec![
                    PochFactor::Ascending(q / s1),
                    PochFactor::Descending(q * s2),
                ],
                denominators: vec![
                    PochFactor::Descending(o1),
                    PochFactor::Ascending(1.0 / o2),
                ],
            })
        }
        WeightFormId::ZjjPowerRatio => {
            let a1 = generator.ok_or_else(missing)?;
            let a2 = crate::classify::nonzero_root(spec.roots2(), spec.sigma2().coeff_scale())
                .ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: Some(h2 * a2 / (q * q * h1 * a1)),
                h_factor: None,
                numerators: vec![PochFactor::Ascending(q / a1)],
                denominators: vec![PochFactor::Ascending(1.0 / a2)],
            })
        }
        WeightFormId::ZjjHalfLog => {
            let g = generator.ok_or_else(missing)?;
            let u = upper_root.ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: Some(-h2 / (q * q * h1 * u)),
                h_factor: Some(HFactor::HalfLog),
                numerators: vec![
                    PochFactor::Ascending(q / u),
                    PochFactor::Descending(q * g),
                ],
                denominators: vec![],
            })
        }
        WeightFormId::JlRatio => {
            let a1 = single_root(spec.roots1()).ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: None,
                h_factor: None,
                numerators: vec![PochFactor::Ascending(q / a1)],
                denominators: sigma2_denominators(spec)?,
            })
        }
        WeightFormId::JlHalfLog => {
            let (a2, b2) = roots_pair(spec.roots2()).ok_or_else(missing)?;
            let a1 = single_root(spec.roots1()).ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: Some(h2 / (q * q * t.sigma1_d)),
                h_factor: Some(HFactor::HalfLog),
                numerators: vec![
                    PochFactor::Descending(q * a2),
                    PochFactor::Descending(q * b2),
                ],
                denominators: vec![PochFactor::Descending(a1)],
            })
        }
        WeightFormId::JlXLog => {
            let u = upper_root.ok_or_else(missing)?;
            let (a2, b2) = roots_pair(spec.roots2()).ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: Some(-h2 / (q * q * t.sigma1_d * u)),
                h_factor: Some(HFactor::XLog),
                numerators: vec![
                    PochFactor::Ascending(q / u),
                    PochFactor::Descending(q * a2),
                    PochFactor::Descending(q * b2),
                ],
                denominators: vec![],
            })
        }
        WeightFormId::JhReciprocal => Ok(RowData {
            alpha_ratio: None,
            h_factor: None,
            numerators: vec![],
            denominators: sigma2_denominators(spec)?,
        }),
        WeightFormId::JhXLogMinus1 => {
            let (a2, b2) = roots_pair(spec.roots2()).ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: Some(h2 / (q * t.sigma1_0)),
                h_factor: Some(HFactor::XLogMinus1),
                numerators: vec![
                    PochFactor::Descending(q * a2),
                    PochFactor::Descending(q * b2),
                ],
                denominators: vec![],
            })
        }
        WeightFormId::LjRatio => {
            let (a1, b1) = roots_pair(spec.roots1()).ok_or_else(missing)?;
            let a2 = single_root(spec.roots2()).ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: None,
                h_factor: None,
                numerators: vec![
                    PochFactor::Ascending(q / a1),
                    PochFactor::Ascending(q / b1),
                ],
                denominators: vec![PochFactor::Ascending(1.0 / a2)],
            })
        }
        WeightFormId::LjPower => {
            let g = generator.ok_or_else(missing)?;
            let u = upper_root.ok_or_else(missing)?;
            let (_, o1) = split_pair(roots_pair(spec.roots1()).ok_or_else(missing)?, u).ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: Some(-t.sigma2_d / (q * q * h1 * u)),
                h_factor: None,
                numerators: vec![
                    PochFactor::Descending(q * g),
                    PochFactor::Ascending(q / u),
                ],
                denominators: vec![PochFactor::Descending(o1)],
            })
        }
        WeightFormId::HjProduct => {
            let (a1, b1) = roots_pair(spec.roots1()).ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: None,
                h_factor: None,
                numerators: vec![
                    PochFactor::Ascending(q / a1),
                    PochFactor::Ascending(q / b1),
                ],
                denominators: vec![],
            })
        }
        WeightFormId::ZjlPowerReciprocal => {
            let a2 = crate::classify::nonzero_root(spec.roots2(), spec.sigma2().coeff_scale())
                .ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: Some(-h2 * a2 / (q * q * t.sigma1_d)),
                h_factor: None,
                numerators: vec![],
                denominators: vec![PochFactor::Ascending(1.0 / a2)],
            })
        }
        WeightFormId::ZjlHalfLog => {
            let g = generator.ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: Some(h2 / (q * q * t.sigma1_d)),
                h_factor: Some(HFactor::HalfLog),
                numerators: vec![PochFactor::Descending(q * g)],
                denominators: vec![],
            })
        }
        WeightFormId::ZbjHalfLog => {
            let g = generator.ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: Some(-h2 / (q * q * h1 * g)),
                h_factor: Some(HFactor::HalfLog),
                numerators: vec![PochFactor::Ascending(q / g)],
                denominators: vec![],
            })
        }
        WeightFormId::ZblHalfLog => Ok(RowData {
            alpha_ratio: Some(h2 / (q * q * t.sigma1_d)),
            h_factor: Some(HFactor::HalfLog),
            numerators: vec![],
            denominators: vec![],
        }),
        WeightFormId::ZljPower => {
            let g = generator.ok_or_else(missing)?;
            Ok(RowData {
                alpha_ratio: Some(-t.sigma2_d / (q * q * h1 * g)),
                h_factor: None,
                numerators: vec![PochFactor::Ascending(q / g)],
                denominators: vec![],
            })
        }
    }
}

/// Instantiates the table row named by the scenario: all constants resolved
/// from the spec's roots and Taylor data, the power exponent pinned by its
/// coefficient ratio, and the normalization point fixed (the origin for the
/// pure-Pochhammer rows, the support generator otherwise).
pub fn closed_form_weight(
    spec: &EHTSpec,
    _cls: HahnClass,
    scenario: &OrthScenario,
) -> Result<WeightForm, Error> {
    // Reflected scenarios instantiate on the mirrored equation; evaluation
    // maps x -> -x back.
    if scenario.reflected {
        let mirrored_spec = spec.reflected();
        let mirrored_scenario = unreflect_scenario(scenario);
        let mut wf = closed_form_weight(&mirrored_spec, _cls, &mirrored_scenario)?;
        wf.reflect_input = true;
        wf.normalization_point.0 = -wf.normalization_point.0;
        return Ok(wf);
    }
    let q = spec.q();
    let row = build_row(spec, scenario)?;
    let (power_alpha, sign_absorbed) = match row.alpha_ratio {
        None => (None, false),
        Some(r) => {
            if r == 0.0 || !r.is_finite() {
                return Err(Error::RowInapplicable {
                    reason: "vanishing power-pinning ratio",
                });
            }
            (Some(r.abs().ln() / q.ln()), r < 0.0)
        }
    };
    // Normalize at the origin when no power/log factor blocks it, otherwise
    // at the support generator.
    let norm_x = if power_alpha.is_none()
        && row.h_factor.is_none()
        && !row
            .numerators
            .iter()
            .chain(row.denominators.iter())
            .any(|f| matches!(f, PochFactor::Descending(_)))
    {
        0.0
    } else {
        scenario
            .support
            .iter()
            .map(|b| b.generator)
            .fold(0.0f64, |m, g| if g.abs() > m.abs() { g } else { m })
    };
    let mut wf = WeightForm {
        form_id: scenario.weight_form_id,
        power_alpha,
        alpha_sign_absorbed: sign_absorbed,
        h_factor: row.h_factor,
        numerators: row.numerators,
        denominators: row.denominators,
        normalization_point: (norm_x, 1.0),
        reflect_input: false,
        norm_constant: 1.0,
        q,
    };
    let raw = eval_raw(&wf, norm_x, spec.params())?;
    if raw == 0.0 || !raw.is_finite() {
        return Err(Error::RowInapplicable {
            reason: "weight vanishes at its normalization point",
        });
    }
    wf.norm_constant = 1.0 / raw;
    Ok(wf)
}

fn unreflect_scenario(s: &OrthScenario) -> OrthScenario {
    let mut inner = s.clone();
    inner.reflected = false;
    let (lo, hi) = inner.interval;
    let neg = |e: Endpoint| match e {
        Endpoint::Finite(v) => Endpoint::Finite(-v),
        Endpoint::Infinity => Endpoint::NegInfinity,
        Endpoint::NegInfinity => Endpoint::Infinity,
    };
    inner.interval = (neg(hi), neg(lo));
    for b in &mut inner.support {
        b.generator = -b.generator;
    }
    inner
}

/// One ascending infinite product with a pole check: `(c y; q)_inf` vanishes
/// only at y = q^{-k}/c, which for denominator factors is a pole of the
/// weight.
fn asc_product(c: f64, y: f64, p: &QParam, check_pole: bool) -> Result<f64, Error> {
    let q = p.q();
    let arg = c * y;
    if check_pole && arg > 0.0 {
        let k_star = (1.0 / arg).ln() / q.ln();
        let k = k_star.round();
        if k >= 0.0 {
            let factor = 1.0 - arg * q.powi(k as i32);
            if factor.abs() <= POLE_REL * (1.0 + arg.abs()) {
                return Err(Error::Pole { at: y });
            }
        }
    }
    let mut prod = 1.0;
    let mut k = 0i32;
    while arg.abs() * q.powi(k) >= p.eps_product() {
        prod *= 1.0 - arg * q.powi(k);
        k += 1;
        if k as usize > p.max_terms() {
            return Err(Error::Qcore(crate::qcore::Error::Nonconvergence {
                terms: p.max_terms(),
            }));
        }
    }
    Ok(prod)
}

fn conj_product(two_re: f64, abs2: f64, y: f64, p: &QParam) -> f64 {
    let q = p.q();
    let modulus = abs2.sqrt() * y.abs();
    let mut prod = 1.0;
    let mut k = 0i32;
    while modulus * q.powi(k) >= p.eps_product() {
        let qk = q.powi(k);
        prod *= 1.0 - two_re * y * qk + abs2 * y * y * qk * qk;
        k += 1;
        if k as usize > p.max_terms() {
            break;
        }
    }
    prod
}

fn eval_raw(wf: &WeightForm, x: f64, p: &QParam) -> Result<f64, Error> {
    let y = if wf.reflect_input { -x } else { x };
    let fractional_alpha = wf
        .power_alpha
        .map(|a| (a - a.round()).abs() > 1e-12)
        .unwrap_or(false);
    if y <= 0.0 && (wf.h_factor.is_some() || fractional_alpha) && !(y == 0.0 && wf.h_factor.is_none())
    {
        return Err(Error::Domain { x });
    }
    let mut value = 1.0f64;
    if let Some(alpha) = wf.power_alpha {
        if y == 0.0 {
            // |0|^alpha: 0 for positive alpha, pole otherwise.
            if alpha > 0.0 {
                return Ok(0.0);
            }
            return Err(Error::Domain { x });
        }
        value *= y.abs().powf(alpha);
    }
    if let Some(h) = wf.h_factor {
        value *= h.eval(y, wf.q);
    }
    for f in &wf.numerators {
        value *= match *f {
            PochFactor::Ascending(c) => asc_product(c, y, p, false)?,
            PochFactor::AscendingConj { two_re, abs2 } => conj_product(two_re, abs2, y, p),
            PochFactor::Descending(c) => {
                if y == 0.0 {
                    return Err(Error::Domain { x });
                }
                asc_product(c, 1.0 / y, p, false)?
            }
        };
    }
    for f in &wf.denominators {
        let d = match *f {
            PochFactor::Ascending(c) => asc_product(c, y, p, true)?,
            PochFactor::AscendingConj { two_re, abs2 } => conj_product(two_re, abs2, y, p),
            PochFactor::Descending(c) => {
                if y == 0.0 {
                    return Err(Error::Domain { x });
                }
                asc_product(c, 1.0 / y, p, true)?
            }
        };
        if d == 0.0 {
            return Err(Error::Pole { at: x });
        }
        value /= d;
    }
    Ok(value)
}

/// Evaluates the instantiated weight at `x`. The result is the magnitude of
/// the factor product, scaled so the normalization point takes its stated
/// value; finite and positive at every interior support point of a valid
/// scenario.
pub fn eval_weight(wf: &WeightForm, x: f64, p: &QParam) -> Result<f64, Error> {
    let raw = eval_raw(wf, x, p)?;
    Ok((raw * wf.norm_constant).abs() * wf.normalization_point.1)
}

/// Propagates `rho` from `x_start` by `k` Pearson steps along the lattice:
/// positive `k` walks down (x, qx, ...), negative `k` walks up by 1/q.
pub fn weight_by_recursion(
    spec: &EHTSpec,
    x_start: f64,
    rho_start: f64,
    k: i64,
) -> Result<f64, Error> {
    let q = spec.q();
    let mut rho = rho_start;
    if k >= 0 {
        for i in 0..k {
            let x = q.powi(i as i32) * x_start;
            let f = pearson_ratio(spec, x).map_err(|_| Error::Propagation { step: i, at: x })?;
            if f == 0.0 {
                return Err(Error::Propagation { step: i, at: x });
            }
            rho *= f;
        }
    } else {
        for i in 1..=(-k) {
            let x = q.powi(-(i as i32)) * x_start;
            let f = pearson_ratio(spec, x).map_err(|_| Error::Propagation { step: -i, at: x })?;
            if f == 0.0 {
                return Err(Error::Propagation { step: -i, at: x });
            }
            rho /= f;
        }
    }
    Ok(rho)
}

/// Relative residual of the self-adjoint Pearson identity
/// `sigma2(x) rho(x) = q sigma1(qx) rho(qx)` at `x`.
pub fn pearson_residual(spec: &EHTSpec, wf: &WeightForm, x: f64) -> Result<f64, Error> {
    let p = spec.params();
    let q = spec.q();
    let lhs = spec.sigma2().eval(x) * eval_weight(wf, x, p)?;
    let rhs = q * spec.sigma1().eval(q * x) * eval_weight(wf, q * x, p)?;
    let floor = 1e-300;
    Ok((lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(floor))
}

/// Behaviour of the weight at the origin in the zero/linear classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroLimit {
    Vanishes,
    Diverges,
    Indeterminate,
}

/// Classifies `rho(z) as z -> 0` from the y-intercept: it vanishes for
/// `0 < y0 < 1` and diverges outside `[0, 1]`; inside a guard band around
/// 0 or 1 the limit is reported indeterminate rather than guessed.
pub fn zero_limit_class(invariants: &CaseInvariants) -> Result<ZeroLimit, Error> {
    let y0 = invariants.y0.ok_or(Error::InvariantUndefined)?;
    let band = RULE_GUARD_BAND * y0.abs().max(1.0);
    if (y0 - 1.0).abs() <= band || y0.abs() <= band {
        return Ok(ZeroLimit::Indeterminate);
    }
    if y0 > 0.0 && y0 < 1.0 {
        Ok(ZeroLimit::Vanishes)
    } else {
        Ok(ZeroLimit::Diverges)
    }
}

impl WeightForm {
    pub fn to_json(&self) -> Doc {
        let factor = |f: &PochFactor| match *f {
            PochFactor::Ascending(c) => Doc::Obj(vec![
                ("kind".into(), Doc::Str("ascending".into())),
                ("coefficient".into(), Doc::Num(c)),
            ]),
            PochFactor::AscendingConj { two_re, abs2 } => Doc::Obj(vec![
                ("kind".into(), Doc::Str("ascending-conjugate-pair".into())),
                ("two_re".into(), Doc::Num(two_re)),
                ("abs2".into(), Doc::Num(abs2)),
            ]),
            PochFactor::Descending(c) => Doc::Obj(vec![
                ("kind".into(), Doc::Str("descending".into())),
                ("coefficient".into(), Doc::Num(c)),
            ]),
        };
        Doc::Obj(vec![
            ("form".into(), Doc::Str(self.form_id.slug().into())),
            ("alpha".into(), opt_num(self.power_alpha)),
            (
                "alpha_sign_absorbed".into(),
                Doc::Bool(self.alpha_sign_absorbed),
            ),
            (
                "h_factor".into(),
                match self.h_factor {
                    Some(h) => Doc::Str(h.slug().into()),
                    None => Doc::Null,
                },
            ),
            (
                "numerators".into(),
                Doc::Arr(self.numerators.iter().map(factor).collect()),
            ),
            (
                "denominators".into(),
                Doc::Arr(self.denominators.iter().map(factor).collect()),
            ),
            (
                "normalization".into(),
                Doc::Obj(vec![
                    ("x".into(), Doc::Num(self.normalization_point.0)),
                    ("value".into(), Doc::Num(self.normalization_point.1)),
                ]),
            ),
            ("reflected".into(), Doc::Bool(self.reflect_input)),
        ])
    }
}
