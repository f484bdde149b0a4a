//! Registry of the named families on the q-linear lattice: coefficient
//! recipes mapping user-facing parameters to the equation, the documented
//! parameter regions (classic and the extended ranges), the displayed
//! eigenvalue closed forms, and hooks for the printed squared norms.

pub mod dn2;

use crate::classify::HahnClass;
use crate::eht::{make_eht, EHTSpec};
use crate::json::Doc;
use crate::qcore::{qbracket, QParam, RealPolynomial};
use std::collections::BTreeMap;
use std::fmt;

pub type Params = BTreeMap<String, f64>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    UnknownFamily(String),
    MissingParam(&'static str),
    UnexpectedParam(String),
    /// N must be a nonnegative integer.
    BadN(f64),
    /// No printed norm formula is registered for this family.
    UnsupportedNorm(FamilyId),
    Eht(crate::eht::Error),
    Qcore(crate::qcore::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownFamily(s) => write!(f, "unknown family '{s}'"),
            Error::MissingParam(p) => write!(f, "missing parameter '{p}'"),
            Error::UnexpectedParam(p) => write!(f, "unexpected parameter '{p}'"),
            Error::BadN(v) => write!(f, "N must be a nonnegative integer, got {v}"),
            Error::UnsupportedNorm(id) => {
                write!(f, "no printed norm formula registered for {}", id.slug())
            }
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

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    BigQJacobi,
    QHahn,
    LittleQJacobi,
    QKravchuk,
    QuantumQKravchuk,
    AffineQKravchuk,
    BigQLaguerre,
    QMeixner,
    AlSalamCarlitz1,
    AlSalamCarlitz2,
    DiscreteQHermite1,
    DiscreteQHermite2,
    QLaguerre,
    QCharlier,
    AlternativeQCharlier,
    StieltjesWigert,
    LittleQLaguerre,
}

impl FamilyId {
    pub const ALL: [FamilyId; 17] = [
        FamilyId::BigQJacobi,
        FamilyId::QHahn,
        FamilyId::LittleQJacobi,
        FamilyId::QKravchuk,
        FamilyId::QuantumQKravchuk,
        FamilyId::AffineQKravchuk,
        FamilyId::BigQLaguerre,
        FamilyId::QMeixner,
        FamilyId::AlSalamCarlitz1,
        FamilyId::AlSalamCarlitz2,
        FamilyId::DiscreteQHermite1,
        FamilyId::DiscreteQHermite2,
        FamilyId::QLaguerre,
        FamilyId::QCharlier,
        FamilyId::AlternativeQCharlier,
        FamilyId::StieltjesWigert,
        FamilyId::LittleQLaguerre,
    ];

    pub fn slug(&self) -> &'static str {
        match self {
            FamilyId::BigQJacobi => "big-q-jacobi",
            FamilyId::QHahn => "q-hahn",
            FamilyId::LittleQJacobi => "little-q-jacobi",
            FamilyId::QKravchuk => "q-kravchuk",
            FamilyId::QuantumQKravchuk => "quantum-q-kravchuk",
            FamilyId::AffineQKravchuk => "affine-q-kravchuk",
            FamilyId::BigQLaguerre => "big-q-laguerre",
            FamilyId::QMeixner => "q-meixner",
            FamilyId::AlSalamCarlitz1 => "al-salam-carlitz-1",
            FamilyId::AlSalamCarlitz2 => "al-salam-carlitz-2",
            FamilyId::DiscreteQHermite1 => "discrete-q-hermite-1",
            FamilyId::DiscreteQHermite2 => "discrete-q-hermite-2",
            FamilyId::QLaguerre => "q-laguerre",
            FamilyId::QCharlier => "q-charlier",
            FamilyId::AlternativeQCharlier => "alternative-q-charlier",
            FamilyId::StieltjesWigert => "stieltjes-wigert",
            FamilyId::LittleQLaguerre => "little-q-laguerre",
        }
    }

    pub fn parse(s: &str) -> Result<FamilyId, Error> {
        FamilyId::ALL
            .iter()
            .copied()
            .find(|f| f.slug() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

/// How a parameter point relates to the documented regions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Classic,
    /// Name of the matched extended region.
    Extended(&'static str),
    /// Outside every documented region; the equation is still built and the
    /// scenario rule table decides.
    Invalid,
}

impl Region {
    pub fn label(&self) -> String {
        match self {
            Region::Classic => "classic".to_string(),
            Region::Extended(name) => format!("extended-{name}"),
            Region::Invalid => "invalid".to_string(),
        }
    }
}

/// A family instance: resolved parameters, region tag, the built equation,
/// and the expectations recorded for it.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub family_id: FamilyId,
    pub params: Params,
    pub region: Region,
    pub spec: EHTSpec,
    pub expected_class: HahnClass,
    pub expected_kind: u8,
    pub has_norm_formula: bool,
}

/// Static description of one registered family.
#[derive(Clone, Debug)]
pub struct FamilyInfo {
    pub id: FamilyId,
    pub parameters: &'static [&'static str],
    pub requires_n: bool,
    pub expected_class: HahnClass,
    pub expected_kind: u8,
    /// (region name, human-readable constraints).
    pub regions: &'static [(&'static str, &'static str)],
    pub has_norm_formula: bool,
}

fn info(id: FamilyId) -> FamilyInfo {
    use FamilyId::*;
    use HahnClass::*;
    match id {
        BigQJacobi => FamilyInfo {
            id,
            parameters: &["a", "b", "c"],
            requires_n: false,
            expected_class: EmptyJacobiJacobi,
            expected_kind: 1,
            regions: &[
                ("classic", "c < 0, 0 < a < 1/q, 0 < b < 1/q"),
                ("neg-b", "c < 0, b < 0, a*b*q/c <= 1, 0 < a < 1/q"),
            ],
            has_norm_formula: true,
        },
        QHahn => FamilyInfo {
            id,
            parameters: &["alpha", "beta"],
            requires_n: true,
            expected_class: EmptyJacobiJacobi,
            expected_kind: 3,
            regions: &[
                ("classic", "0 < alpha < 1/q, 0 < beta < 1/q"),
                ("neg-alpha", "alpha < 0, beta >= q^(-N-1)"),
                ("neg-beta", "0 < alpha < 1/q, beta < 0"),
            ],
            has_norm_formula: true,
        },
        LittleQJacobi => FamilyInfo {
            id,
            parameters: &["a", "b"],
            requires_n: false,
            expected_class: ZeroJacobiJacobi,
            expected_kind: 2,
            regions: &[
                ("classic", "0 < a < 1/q, 0 < b < 1/q"),
                ("neg-b", "0 < a < 1/q, b < 0"),
            ],
            has_norm_formula: true,
        },
        QKravchuk => FamilyInfo {
            id,
            parameters: &["p"],
            requires_n: true,
            expected_class: ZeroJacobiJacobi,
            expected_kind: 3,
            regions: &[("classic", "p > 0")],
            has_norm_formula: true,
        },
        QuantumQKravchuk => FamilyInfo {
            id,
            parameters: &["p"],
            requires_n: true,
            expected_class: EmptyJacobiLaguerre,
            expected_kind: 3,
            regions: &[("classic", "p >= q^(-N-1)")],
            has_norm_formula: true,
        },
        AffineQKravchuk => FamilyInfo {
            id,
            parameters: &["p"],
            requires_n: true,
            expected_class: EmptyLaguerreJacobi,
            expected_kind: 3,
            regions: &[("classic", "0 < p < 1/q")],
            has_norm_formula: true,
        },
        BigQLaguerre => FamilyInfo {
            id,
            parameters: &["a", "b"],
            requires_n: false,
            expected_class: EmptyLaguerreJacobi,
            expected_kind: 1,
            regions: &[("classic", "b < 0, 0 < a < 1/q")],
            has_norm_formula: true,
        },
        QMeixner => FamilyInfo {
            id,
            parameters: &["b", "c"],
            requires_n: false,
            expected_class: EmptyJacobiLaguerre,
            expected_kind: 5,
            regions: &[
                ("classic", "c > 0, 0 < b < 1/q"),
                ("neg-b", "c > 0, b < 0, 0 < -b*c <= 1"),
            ],
            has_norm_formula: true,
        },
        AlSalamCarlitz1 => FamilyInfo {
            id,
            parameters: &["a"],
            requires_n: false,
            expected_class: EmptyHermiteJacobi,
            expected_kind: 1,
            regions: &[("classic", "a < 0")],
            has_norm_formula: true,
        },
        AlSalamCarlitz2 => FamilyInfo {
            id,
            parameters: &["a"],
            requires_n: false,
            expected_class: EmptyJacobiHermite,
            expected_kind: 5,
            regions: &[("classic", "0 < a <= 1")],
            has_norm_formula: true,
        },
        DiscreteQHermite1 => FamilyInfo {
            id,
            parameters: &[],
            requires_n: false,
            expected_class: EmptyHermiteJacobi,
            expected_kind: 1,
            regions: &[("classic", "no parameters")],
            has_norm_formula: true,
        },
        DiscreteQHermite2 => FamilyInfo {
            id,
            parameters: &[],
            requires_n: false,
            expected_class: EmptyJacobiHermite,
            expected_kind: 7,
            regions: &[("classic", "no parameters")],
            has_norm_formula: true,
        },
        QLaguerre => FamilyInfo {
            id,
            parameters: &["alpha"],
            requires_n: false,
            expected_class: ZeroJacobiLaguerre,
            expected_kind: 6,
            regions: &[("classic", "alpha > -1")],
            has_norm_formula: true,
        },
        QCharlier => FamilyInfo {
            id,
            parameters: &["a"],
            requires_n: false,
            expected_class: ZeroJacobiLaguerre,
            expected_kind: 5,
            regions: &[("classic", "a > 0")],
            has_norm_formula: true,
        },
        AlternativeQCharlier => FamilyInfo {
            id,
            parameters: &["a"],
            requires_n: false,
            expected_class: ZeroBesselJacobi,
            expected_kind: 2,
            regions: &[("classic", "a > 0")],
            has_norm_formula: true,
        },
        StieltjesWigert => FamilyInfo {
            id,
            parameters: &[],
            requires_n: false,
            expected_class: ZeroBesselLaguerre,
            expected_kind: 6,
            regions: &[("classic", "no parameters")],
            has_norm_formula: true,
        },
        LittleQLaguerre => FamilyInfo {
            id,
            parameters: &["a"],
            requires_n: false,
            expected_class: ZeroLaguerreJacobi,
            expected_kind: 2,
            regions: &[("classic", "0 < a < 1/q")],
            has_norm_formula: true,
        },
    }
}

/// Stable listing of every registered family.
pub fn list_families() -> Vec<FamilyInfo> {
    FamilyId::ALL.iter().map(|&id| info(id)).collect()
}

pub(crate) fn get(params: &Params, key: &'static str) -> Result<f64, Error> {
    params.get(key).copied().ok_or(Error::MissingParam(key))
}

pub(crate) fn get_n(params: &Params) -> Result<i32, Error> {
    let v = get(params, "N")?;
    if v < 0.0 || v.fract() != 0.0 || v > 1e6 {
        return Err(Error::BadN(v));
    }
    Ok(v as i32)
}

/// Explicit quadratic (x - r1)(x - r2) scaled by `lead`.
fn quadratic(lead: f64, r1: f64, r2: f64) -> RealPolynomial {
    RealPolynomial::new(vec![lead * r1 * r2, -lead * (r1 + r2), lead])
}

fn linear(c0: f64, c1: f64) -> RealPolynomial {
    RealPolynomial::new(vec![c0, c1])
}

struct Recipe {
    sigma1: RealPolynomial,
    tau: RealPolynomial,
    region: Region,
}

fn recipe(id: FamilyId, params: &Params, q: f64) -> Result<Recipe, Error> {
    use FamilyId::*;
    let qi = 1.0 / q;
    Ok(match id {
        BigQJacobi => {
            let (a, b, c) = (get(params, "a")?, get(params, "b")?, get(params, "c")?);
            let sigma1 = quadratic(qi * qi, c * q, a * q);
            let tau = linear(
                (a * (b * q - 1.0) + c * (a * q - 1.0)) / (1.0 - q),
                (1.0 - a * b * q * q) / ((1.0 - q) * q),
            );
            let region = if c < 0.0 && a > 0.0 && a < qi && b > 0.0 && b < qi {
                Region::Classic
            } else if c < 0.0 && b < 0.0 && a * b * q / c <= 1.0 && a > 0.0 && a < qi {
                Region::Extended("neg-b")
            } else {
                Region::Invalid
            };
            Recipe { sigma1, tau, region }
        }
        QHahn => {
            let (al, be) = (get(params, "alpha")?, get(params, "beta")?);
            let n = get_n(params)?;
            let qn = q.powi(-n);
            let sigma1 = quadratic(qi * qi, al * q, qn);
            let tau = linear(
                (al * qn + al * be * q - al - qn * qi) / (1.0 - q),
                (1.0 - al * be * q * q) / ((1.0 - q) * q),
            );
            let region = if al > 0.0 && al < qi && be > 0.0 && be < qi {
                Region::Classic
            } else if al < 0.0 && be >= qn * qi {
                Region::Extended("neg-alpha")
            } else if al > 0.0 && al < qi && be < 0.0 {
                Region::Extended("neg-beta")
            } else {
                Region::Invalid
            };
            Recipe { sigma1, tau, region }
        }
        LittleQJacobi => {
            let (a, b) = (get(params, "a")?, get(params, "b")?);
            let sigma1 = quadratic(qi * qi, 0.0, 1.0);
            let tau = linear(
                (a * q - 1.0) / ((1.0 - q) * q),
                (1.0 - a * b * q * q) / ((1.0 - q) * q),
            );
            let region = if a > 0.0 && a < qi && b > 0.0 && b < qi {
                Region::Classic
            } else if a > 0.0 && a < qi && b < 0.0 {
                Region::Extended("neg-b")
            } else {
                Region::Invalid
            };
            Recipe { sigma1, tau, region }
        }
        QKravchuk => {
            let p = get(params, "p")?;
            let n = get_n(params)?;
            let qn = q.powi(-n);
            let sigma1 = quadratic(qi * qi, 0.0, qn);
            let tau = linear(
                -(p + qn * qi) / (1.0 - q),
                (1.0 + p * q) / ((1.0 - q) * q),
            );
            let region = if p > 0.0 { Region::Classic } else { Region::Invalid };
            Recipe { sigma1, tau, region }
        }
        QuantumQKravchuk => {
            let p = get(params, "p")?;
            let n = get_n(params)?;
            let qn = q.powi(-n);
            let sigma1 = linear(qi * qi * qn, -qi * qi);
            let tau = linear((p - qi + qn * qi) / (1.0 - q), -p / (1.0 - q));
            let region = if p >= qn * qi { Region::Classic } else { Region::Invalid };
            Recipe { sigma1, tau, region }
        }
        AffineQKravchuk => {
            let p = get(params, "p")?;
            let n = get_n(params)?;
            let qn = q.powi(-n);
            let sigma1 = quadratic(qi, p * q, qn);
            let tau = linear(
                -(p * q + qn - p * q * qn) / (1.0 - q),
                1.0 / (1.0 - q),
            );
            let region = if p > 0.0 && p < qi { Region::Classic } else { Region::Invalid };
            Recipe { sigma1, tau, region }
        }
        BigQLaguerre => {
            let (a, b) = (get(params, "a")?, get(params, "b")?);
            let sigma1 = quadratic(qi * qi, b * q, a * q);
            let tau = linear((a + b - a * b * q) / (q - 1.0), -qi / (q - 1.0));
            let region = if b < 0.0 && a > 0.0 && a < qi {
                Region::Classic
            } else {
                Region::Invalid
            };
            Recipe { sigma1, tau, region }
        }
        QMeixner => {
            let (b, c) = (get(params, "b")?, get(params, "c")?);
            let sigma1 = linear(-c * qi * qi * b * q, c * qi * qi);
            let tau = linear((c * qi - b * c + 1.0) / (1.0 - q), -1.0 / (1.0 - q));
            let region = if c > 0.0 && b > 0.0 && b < qi {
                Region::Classic
            } else if c > 0.0 && b < 0.0 && -b * c > 0.0 && -b * c <= 1.0 {
                Region::Extended("neg-b")
            } else {
                Region::Invalid
            };
            Recipe { sigma1, tau, region }
        }
        AlSalamCarlitz1 => {
            let a = get(params, "a")?;
            let sigma1 = quadratic(qi, a, 1.0);
            let tau = linear(-(1.0 + a) / (1.0 - q), 1.0 / (1.0 - q));
            let region = if a < 0.0 { Region::Classic } else { Region::Invalid };
            Recipe { sigma1, tau, region }
        }
        AlSalamCarlitz2 => {
            let a = get(params, "a")?;
            let sigma1 = RealPolynomial::constant(a * qi);
            let tau = linear(-(1.0 + a) / (q - 1.0), 1.0 / (q - 1.0));
            let region = if a > 0.0 && a <= 1.0 { Region::Classic } else { Region::Invalid };
            Recipe { sigma1, tau, region }
        }
        DiscreteQHermite1 => {
            let sigma1 = quadratic(qi, -1.0, 1.0);
            let tau = linear(0.0, 1.0 / (1.0 - q));
            Recipe { sigma1, tau, region: Region::Classic }
        }
        DiscreteQHermite2 => {
            let sigma1 = RealPolynomial::constant(qi);
            let tau = linear(0.0, 1.0 / (q - 1.0));
            Recipe { sigma1, tau, region: Region::Classic }
        }
        QLaguerre => {
            let alpha = get(params, "alpha")?;
            let qa = q.powf(alpha);
            let sigma1 = linear(0.0, qi * qi);
            let tau = linear((qi - qa) / (1.0 - q), -qa / (1.0 - q));
            let region = if alpha > -1.0 { Region::Classic } else { Region::Invalid };
            Recipe { sigma1, tau, region }
        }
        QCharlier => {
            let a = get(params, "a")?;
            let sigma1 = linear(0.0, a * qi * qi);
            let tau = linear((a + q) / ((1.0 - q) * q), -1.0 / (1.0 - q));
            let region = if a > 0.0 { Region::Classic } else { Region::Invalid };
            Recipe { sigma1, tau, region }
        }
        AlternativeQCharlier => {
            let a = get(params, "a")?;
            let sigma1 = quadratic(-qi * qi, 0.0, 1.0);
            let tau = linear(
                1.0 / ((1.0 - q) * q),
                -(1.0 + a * q) / ((1.0 - q) * q),
            );
            let region = if a > 0.0 { Region::Classic } else { Region::Invalid };
            Recipe { sigma1, tau, region }
        }
        StieltjesWigert => {
            let sigma1 = linear(0.0, qi * qi);
            let tau = linear(1.0 / ((1.0 - q) * q), -1.0 / (1.0 - q));
            Recipe { sigma1, tau, region: Region::Classic }
        }
        LittleQLaguerre => {
            let a = get(params, "a")?;
            let sigma1 = quadratic(-qi * qi, 0.0, 1.0);
            let tau = linear(
                (1.0 - a * q) / ((1.0 - q) * q),
                -1.0 / ((1.0 - q) * q),
            );
            let region = if a > 0.0 && a < qi { Region::Classic } else { Region::Invalid };
            Recipe { sigma1, tau, region }
        }
    })
}

fn validate_keys(id: FamilyId, params: &Params) -> Result<(), Error> {
    let inf = info(id);
    for key in params.keys() {
        let ok = inf.parameters.contains(&key.as_str()) || (inf.requires_n && key == "N");
        if !ok {
            return Err(Error::UnexpectedParam(key.clone()));
        }
    }
    for p in inf.parameters {
        if !params.contains_key(*p) {
            return Err(Error::MissingParam(p));
        }
    }
    if inf.requires_n && !params.contains_key("N") {
        return Err(Error::MissingParam("N"));
    }
    Ok(())
}

/// Builds the family instance: coefficients per the family's displayed
/// recipe, the derived equation, and the region tag. Parameters outside the
/// documented regions still build (region = invalid); the scenario rule
/// table decides whether an orthogonal system exists there.
pub fn make_family(id: FamilyId, params: &Params, qp: QParam) -> Result<FamilySpec, Error> {
    validate_keys(id, params)?;
    let r = recipe(id, params, qp.q())?;
    let spec = make_eht(r.sigma1, r.tau, qp)?;
    let inf = info(id);
    Ok(FamilySpec {
        family_id: id,
        params: params.clone(),
        region: r.region,
        spec,
        expected_class: inf.expected_class,
        expected_kind: inf.expected_kind,
        has_norm_formula: inf.has_norm_formula,
    })
}

/// The family's displayed eigenvalue closed form, used as a cross-check of
/// the general formula.
pub fn lambda_display(id: FamilyId, params: &Params, q: f64, n: u32) -> Result<f64, Error> {
    use FamilyId::*;
    let bn = qbracket(n as i64, q)?;
    let ni = n as i32;
    Ok(match id {
        BigQJacobi => {
            let (a, b) = (get(params, "a")?, get(params, "b")?);
            q.powi(-ni) * bn * (1.0 - a * b * q.powi(ni + 1)) / (q - 1.0)
        }
        QHahn => {
            let (al, be) = (get(params, "alpha")?, get(params, "beta")?);
            -q.powi(-ni) * bn * (1.0 - al * be * q.powi(ni + 1)) / (1.0 - q)
        }
        LittleQJacobi => {
            let (a, b) = (get(params, "a")?, get(params, "b")?);
            -q.powi(-ni) * bn * (1.0 - a * b * q.powi(ni + 1)) / (1.0 - q)
        }
        QKravchuk => {
            let p = get(params, "p")?;
            -q.powi(-ni) * bn * (1.0 + p * q.powi(ni)) / (1.0 - q)
        }
        QuantumQKravchuk => {
            let p = get(params, "p")?;
            p * bn / (1.0 - q)
        }
        AffineQKravchuk => qbracket(n as i64, 1.0 / q)? / (q - 1.0),
        BigQLaguerre => q.powi(-ni) * bn / (q - 1.0),
        QMeixner => bn / (1.0 - q),
        AlSalamCarlitz1 | DiscreteQHermite1 => q.powi(1 - ni) * bn / (q - 1.0),
        AlSalamCarlitz2 | DiscreteQHermite2 => bn / (1.0 - q),
        QLaguerre => {
            let alpha = get(params, "alpha")?;
            bn * q.powf(alpha) / (1.0 - q)
        }
        QCharlier => bn / (1.0 - q),
        AlternativeQCharlier => {
            let a = get(params, "a")?;
            q.powi(-ni) * bn * (1.0 + a * q.powi(ni)) / (1.0 - q)
        }
        StieltjesWigert => bn / (1.0 - q),
        LittleQLaguerre => q.powi(-ni) * bn / (1.0 - q),
    })
}

/// Registry dump for documentation / the CLI `families` command.
pub fn registry_json() -> Doc {
    let entries = list_families()
        .into_iter()
        .map(|f| {
            Doc::Obj(vec![
                ("id".into(), Doc::Str(f.id.slug().into())),
                (
                    "parameters".into(),
                    Doc::Arr(
                        f.parameters
                            .iter()
                            .map(|p| Doc::Str((*p).into()))
                            .collect(),
                    ),
                ),
                ("requires_n".into(), Doc::Bool(f.requires_n)),
                (
                    "expected_class".into(),
                    Doc::Str(f.expected_class.slug().into()),
                ),
                ("expected_kind".into(), Doc::Int(f.expected_kind as i64)),
                (
                    "regions".into(),
                    Doc::Arr(
                        f.regions
                            .iter()
                            .map(|(name, cons)| {
                                Doc::Obj(vec![
                                    ("name".into(), Doc::Str((*name).into())),
                                    ("constraints".into(), Doc::Str((*cons).into())),
                                ])
                            })
                            .collect(),
                    ),
                ),
                ("norm_formula".into(), Doc::Bool(f.has_norm_formula)),
            ])
        })
        .collect();
    Doc::Obj(vec![
        ("schema_version".into(), Doc::Str("1".into())),
        ("families".into(), Doc::Arr(entries)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eht::lambda_n;

    fn qp() -> QParam {
        QParam::new(0.5).unwrap()
    }

    fn pmap(kv: &[(&str, f64)]) -> Params {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn registry_has_seventeen_families_each_with_a_classic_region() {
        let listing = list_families();
        assert_eq!(listing.len(), 17);
        for f in &listing {
            assert!(
                f.regions.iter().any(|(n, _)| *n == "classic"),
                "{} lacks a classic region",
                f.id
            );
        }
        let qhahn = listing.iter().find(|f| f.id == FamilyId::QHahn).unwrap();
        assert_eq!(qhahn.regions.len(), 3);
    }

    #[test]
    fn region_tags() {
        let f = make_family(
            FamilyId::BigQJacobi,
            &pmap(&[("a", 0.5), ("b", 0.5), ("c", -0.5)]),
            qp(),
        )
        .unwrap();
        assert_eq!(f.region, Region::Classic);
        let f = make_family(
            FamilyId::BigQJacobi,
            &pmap(&[("a", 0.5), ("b", -0.25), ("c", -0.5)]),
            qp(),
        )
        .unwrap();
        assert_eq!(f.region, Region::Extended("neg-b"));
        // The boundary beta = q^{-N-1} sits inside the neg-alpha region.
        let f = make_family(
            FamilyId::QHahn,
            &pmap(&[("alpha", -1.0), ("beta", 32.0), ("N", 4.0)]),
            qp(),
        )
        .unwrap();
        assert_eq!(f.region, Region::Extended("neg-alpha"));
        let f = make_family(
            FamilyId::AlSalamCarlitz1,
            &pmap(&[("a", -1.0)]),
            qp(),
        )
        .unwrap();
        assert_eq!(f.region, Region::Classic);
        assert_eq!(f.expected_class, HahnClass::EmptyHermiteJacobi);
        assert_eq!(f.expected_kind, 1);
    }

    #[test]
    fn out_of_region_still_builds() {
        let f = make_family(
            FamilyId::QHahn,
            &pmap(&[("alpha", 32.0), ("beta", 32.0), ("N", 3.0)]),
            qp(),
        )
        .unwrap();
        assert_eq!(f.region, Region::Invalid);
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            make_family(FamilyId::QHahn, &pmap(&[("alpha", 0.5)]), qp()),
            Err(Error::MissingParam(_))
        ));
        assert!(matches!(
            make_family(FamilyId::StieltjesWigert, &pmap(&[("z", 1.0)]), qp()),
            Err(Error::UnexpectedParam(_))
        ));
        assert!(matches!(
            make_family(
                FamilyId::QKravchuk,
                &pmap(&[("p", 1.0), ("N", 2.5)]),
                qp()
            ),
            Err(Error::BadN(_))
        ));
    }

    #[test]
    fn lambda_displays_match_general_formula_everywhere() {
        let fixtures = crate::fixtures::positive_fixtures();
        for fx in &fixtures {
            let Some(family) = fx.family else { continue };
            let fs = make_family(family, &fx.params, qp()).unwrap();
            for n in 0..=10u32 {
                let display = lambda_display(family, &fx.params, 0.5, n).unwrap();
                let general = lambda_n(&fs.spec, n);
                assert!(
                    (display - general).abs() <= 1e-12 * display.abs().max(1e-30),
                    "{family} n={n}: display {display} vs general {general}"
                );
            }
        }
    }
}
