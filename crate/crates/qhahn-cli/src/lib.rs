//! Command-line front end: classification reports, scenario and
//! orthogonality verification runs, norm tables, plot-data emission, and the
//! family registry listing, in human, JSON or CSV form.
//!
//! Exit-code contract: 0 on success (an empty scenario list is a correct
//! scientific answer, not an error), 2 on precondition violations, 3 on
//! numerical failures (divergence, poles, nonconvergence).

use clap::{Args, Parser, Subcommand, ValueEnum};
use qhahn::classify::{
    bc_at_infinity, case_invariants, classify, rules::rule_table_json, Endpoint, HahnClass,
    OrthScenario, Tail,
};
use qhahn::classify::rules::enumerate_scenarios_detailed;
use qhahn::eht::{make_eht, pearson_ratio, EHTSpec};
use qhahn::families::{make_family, registry_json, FamilyId, FamilySpec, Params};
use qhahn::json::{fmt_g17, opt_num, Doc};
use qhahn::orth::{norm_formula, verify_orthogonality, Thresholds};
use qhahn::qcore::{QParam, RealPolynomial};
use qhahn::weight::{closed_form_weight, eval_weight};
use std::collections::BTreeMap;
use std::fmt;

pub const SCHEMA_VERSION: &str = "1";
/// Plot grids keep this distance from poles.
pub const POLE_CLEARANCE: f64 = 1e-6;

#[derive(Parser, Debug)]
#[command(
    name = "qhahn",
    about = "Classify q-hypergeometric difference equations, construct their \
             q-weight functions, and verify orthogonality on geometric lattices",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify the equation and report its case invariants.
    Classify(InputArgs),
    /// Enumerate orthogonality scenarios (empty list = no system exists).
    Scenarios(InputArgs),
    /// Emit the instantiated closed-form weight for each scenario.
    Weight(InputArgs),
    /// Run the Gram-matrix orthogonality verification.
    Orth(OrthArgs),
    /// Table of Gram diagonals against the printed norm closed form.
    Norms(OrthArgs),
    /// Plot data for the Pearson ratio f(x) = sigma2(x)/(q sigma1(qx)).
    PlotF(PlotArgs),
    /// Plot data for the weight function on its support interval.
    PlotRho(PlotArgs),
    /// List the registered families, parameters and regions.
    Families(FormatArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct FormatArgs {
    #[arg(long, value_enum, default_value = "human")]
    pub output: OutputFormat,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Family shorthand, e.g. big-q-jacobi (see `families`).
    #[arg(long)]
    pub family: Option<String>,

    /// Family parameters as comma-separated pairs, e.g. a=0.5,b=0.5,c=-0.5.
    #[arg(short = 'p', long = "params", allow_hyphen_values = true)]
    pub params: Option<String>,

    /// Raw sigma1 coefficients, ascending degree: c0,c1[,c2].
    #[arg(long, allow_hyphen_values = true)]
    pub sigma1: Option<String>,

    /// Raw tau coefficients, ascending degree: c0,c1.
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<String>,

    /// The base q, strictly inside (0,1).
    #[arg(long)]
    pub q: f64,

    /// Highest polynomial degree for orthogonality runs.
    #[arg(long, default_value_t = 6)]
    pub n_max: u32,

    /// Infinite-product truncation threshold override.
    #[arg(long)]
    pub eps_product: Option<f64>,

    /// Lattice-sum relative tail threshold override.
    #[arg(long)]
    pub eps_tail: Option<f64>,

    /// Normalized off-diagonal verdict threshold override.
    #[arg(long)]
    pub off_diag: Option<f64>,

    /// Norm-ratio spread verdict threshold override.
    #[arg(long)]
    pub ratio_spread: Option<f64>,

    #[arg(long, value_enum, default_value = "human")]
    pub output: OutputFormat,
}

#[derive(Args, Debug)]
pub struct OrthArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Scenario index when the equation admits several (default: first).
    #[arg(long, default_value_t = 0)]
    pub scenario: usize,
}

#[derive(Args, Debug)]
pub struct PlotArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[arg(long, allow_negative_numbers = true)]
    pub x_min: Option<f64>,

    #[arg(long, allow_negative_numbers = true)]
    pub x_max: Option<f64>,

    /// Number of grid points.
    #[arg(long, default_value_t = 400)]
    pub points: usize,
}

/// Errors split by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Exit 2: unusable request.
    Precondition(String),
    /// Exit 3: numerical failure.
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Precondition(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Precondition(m) => write!(f, "error: {m}"),
            CliError::Numerical(m) => write!(f, "numerical failure: {m}"),
        }
    }
}

impl From<qhahn::families::Error> for CliError {
    fn from(e: qhahn::families::Error) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<qhahn::eht::Error> for CliError {
    fn from(e: qhahn::eht::Error) -> Self {
        use qhahn::eht::Error::*;
        match e {
            Pole { .. } | EigenvalueCollision { .. } | Qcore(_) => {
                CliError::Numerical(e.to_string())
            }
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<qhahn::weight::Error> for CliError {
    fn from(e: qhahn::weight::Error) -> Self {
        use qhahn::weight::Error::*;
        match e {
            RowInapplicable { .. } | InvariantUndefined => CliError::Precondition(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<qhahn::orth::Error> for CliError {
    fn from(e: qhahn::orth::Error) -> Self {
        use qhahn::orth::Error::*;
        match e {
            DegreeExceedsSupport { .. } => CliError::Precondition(e.to_string()),
            Family(f) => CliError::Precondition(f.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<qhahn::qcore::Error> for CliError {
    fn from(e: qhahn::qcore::Error) -> Self {
        use qhahn::qcore::Error::*;
        match e {
            Nonconvergence { .. } | Divergence { .. } => CliError::Numerical(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

fn parse_params(s: &str) -> Result<Params, CliError> {
    let mut map = BTreeMap::new();
    for piece in s.split(',').filter(|p| !p.is_empty()) {
        let (k, v) = piece
            .split_once('=')
            .ok_or_else(|| CliError::Precondition(format!("bad parameter '{piece}'")))?;
        let value: f64 = v
            .parse()
            .map_err(|_| CliError::Precondition(format!("bad value in '{piece}'")))?;
        map.insert(k.trim().to_string(), value);
    }
    Ok(map)
}

fn parse_coeffs(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|c| {
            c.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Precondition(format!("bad coefficient '{c}'")))
        })
        .collect()
}

/// The resolved problem: an equation plus (optionally) the family it came
/// from, and the numeric policy.
pub struct Problem {
    pub spec: EHTSpec,
    pub family: Option<FamilySpec>,
    pub qp: QParam,
    pub thresholds: Thresholds,
    pub n_max: u32,
    pub output: OutputFormat,
}

impl InputArgs {
    pub fn resolve(&self) -> Result<Problem, CliError> {
        let mut qp = QParam::new(self.q)?;
        if let Some(e) = self.eps_product {
            qp = qp.with_eps_product(e)?;
        }
        if let Some(e) = self.eps_tail {
            qp = qp.with_eps_tail(e)?;
        }
        if let Ok(v) = std::env::var("QHAHN_MAX_TERMS") {
            let n: usize = v.parse().map_err(|_| {
                CliError::Precondition(format!("QHAHN_MAX_TERMS must be an integer, got '{v}'"))
            })?;
            qp = qp.with_max_terms(n)?;
        }
        let mut thresholds = Thresholds::default();
        if let Some(t) = self.off_diag {
            thresholds.off_diag = t;
        }
        if let Some(t) = self.ratio_spread {
            thresholds.ratio_spread = t;
        }
        let family_mode = self.family.is_some();
        let raw_mode = self.sigma1.is_some() || self.tau.is_some();
        if family_mode == raw_mode {
            return Err(CliError::Precondition(
                "give exactly one of --family or --sigma1/--tau".into(),
            ));
        }
        let (spec, family) = if family_mode {
            let id = FamilyId::parse(self.family.as_deref().unwrap())?;
            let params = match &self.params {
                Some(s) => parse_params(s)?,
                None => Params::new(),
            };
            let fs = make_family(id, &params, qp)?;
            (fs.spec.clone(), Some(fs))
        } else {
            let s1 = self
                .sigma1
                .as_deref()
                .ok_or_else(|| CliError::Precondition("--sigma1 required with --tau".into()))?;
            let t = self
                .tau
                .as_deref()
                .ok_or_else(|| CliError::Precondition("--tau required with --sigma1".into()))?;
            let spec = make_eht(
                RealPolynomial::new(parse_coeffs(s1)?),
                RealPolynomial::new(parse_coeffs(t)?),
                qp,
            )?;
            (spec, None)
        };
        Ok(Problem {
            spec,
            family,
            qp,
            thresholds,
            n_max: self.n_max,
            output: self.output,
        })
    }
}

/// A finished command: the document to print and the exit status.
pub struct Output {
    pub text: String,
    pub code: i32,
}

fn endpoint_doc(e: Endpoint) -> Doc {
    match e {
        Endpoint::Finite(v) => Doc::Num(v),
        Endpoint::Infinity => Doc::Str("inf".into()),
        Endpoint::NegInfinity => Doc::Str("-inf".into()),
    }
}

fn scenario_doc(s: &OrthScenario) -> Doc {
    Doc::Obj(vec![
        ("kind".into(), Doc::Int(s.kind as i64)),
        ("rule".into(), Doc::Str(s.rule_id.into())),
        ("flavor".into(), Doc::Str(s.flavor.label().into())),
        (
            "interval".into(),
            Doc::Obj(vec![
                ("lower".into(), endpoint_doc(s.interval.0)),
                ("upper".into(), endpoint_doc(s.interval.1)),
            ]),
        ),
        (
            "n".into(),
            match s.n_points {
                Some(n) => Doc::Int(n),
                None => Doc::Null,
            },
        ),
        (
            "weight_form".into(),
            Doc::Str(s.weight_form_id.slug().into()),
        ),
        ("reflected".into(), Doc::Bool(s.reflected)),
        (
            "support".into(),
            Doc::Arr(
                s.support
                    .iter()
                    .map(|b| {
                        Doc::Obj(vec![
                            ("branch".into(), Doc::Str(b.branch.label().into())),
                            ("generator".into(), Doc::Num(b.generator)),
                            ("direction".into(), Doc::Str(b.direction.label().into())),
                        ])
                    })
                    .collect(),
            ),
        ),
        (
            "warnings".into(),
            Doc::Arr(s.warnings.iter().map(|w| Doc::Str(w.clone())).collect()),
        ),
    ])
}

fn header(command: &str, problem: &Problem) -> Vec<(String, Doc)> {
    let mut fields = vec![
        ("schema_version".into(), Doc::Str(SCHEMA_VERSION.into())),
        ("command".into(), Doc::Str(command.into())),
        ("q".into(), Doc::Num(problem.qp.q())),
    ];
    if let Some(f) = &problem.family {
        fields.push(("family".into(), Doc::Str(f.family_id.slug().into())));
        fields.push(("region".into(), Doc::Str(f.region.label())));
    }
    fields
}

fn no_csv(output: OutputFormat) -> Result<(), CliError> {
    if output == OutputFormat::Csv {
        return Err(CliError::Precondition(
            "csv output applies to plot data only".into(),
        ));
    }
    Ok(())
}

fn run_classify(args: &InputArgs) -> Result<Output, CliError> {
    no_csv(args.output)?;
    let problem = args.resolve()?;
    let spec = &problem.spec;
    let cls = classify(spec);
    let inv = case_invariants(spec).map_err(|e| CliError::Precondition(e.to_string()))?;
    let t = spec.taylor();
    let mut fields = header("classify", &problem);
    fields.push(("class".into(), Doc::Str(cls.slug().into())));
    fields.push((
        "taylor".into(),
        Doc::Obj(vec![
            ("sigma1_0".into(), Doc::Num(t.sigma1_0)),
            ("sigma1_d".into(), Doc::Num(t.sigma1_d)),
            ("sigma1_dd".into(), Doc::Num(t.sigma1_dd)),
            ("sigma2_0".into(), Doc::Num(t.sigma2_0)),
            ("sigma2_d".into(), Doc::Num(t.sigma2_d)),
            ("sigma2_dd".into(), Doc::Num(t.sigma2_dd)),
            ("tau_0".into(), Doc::Num(t.tau_0)),
            ("tau_d".into(), Doc::Num(t.tau_d)),
        ]),
    ));
    fields.push((
        "invariants".into(),
        Doc::Obj(vec![
            ("lambda_q".into(), opt_num(inv.lambda_q)),
            (
                "q2_lambda_q".into(),
                opt_num(inv.lambda_q.map(|l| l * problem.qp.q() * problem.qp.q())),
            ),
            ("delta_q".into(), opt_num(inv.delta_q)),
            ("y0".into(), opt_num(inv.y0)),
            ("q_y0".into(), opt_num(inv.y0.map(|v| v * problem.qp.q()))),
            ("x0".into(), Doc::Num(inv.x0)),
            (
                "root_order".into(),
                Doc::Arr(
                    inv.root_order
                        .iter()
                        .map(|r| {
                            Doc::Obj(vec![
                                ("label".into(), Doc::Str(r.label.into())),
                                ("value".into(), Doc::Num(r.value)),
                            ])
                        })
                        .collect(),
                ),
            ),
            (
                "bc_vanishes_at_infinity".into(),
                Doc::Bool(bc_at_infinity(spec, Tail::PlusInfinity, 6)),
            ),
        ]),
    ));
    let doc = Doc::Obj(fields);
    let text = match args.output {
        OutputFormat::Json => doc.emit(),
        _ => {
            let mut s = format!("class: {}\n", cls.slug());
            if let Some(l) = inv.lambda_q {
                s.push_str(&format!("Lambda_q = {}\n", fmt_g17(l)));
            }
            if let Some(d) = inv.delta_q {
                s.push_str(&format!("Delta_q = {}\n", fmt_g17(d)));
            }
            if let Some(y) = inv.y0 {
                s.push_str(&format!("y0 = {}\n", fmt_g17(y)));
            }
            s.push_str(&format!("x0 = {}\n", fmt_g17(inv.x0)));
            s.push_str("root order:");
            for r in &inv.root_order {
                s.push_str(&format!(" {}={}", r.label, fmt_g17(r.value)));
            }
            s.push('\n');
            s
        }
    };
    Ok(Output { text, code: 0 })
}

fn run_scenarios(args: &InputArgs) -> Result<Output, CliError> {
    no_csv(args.output)?;
    let problem = args.resolve()?;
    let e = enumerate_scenarios_detailed(&problem.spec);
    let mut fields = header("scenarios", &problem);
    fields.push((
        "class".into(),
        Doc::Str(classify(&problem.spec).slug().into()),
    ));
    fields.push((
        "scenarios".into(),
        Doc::Arr(e.scenarios.iter().map(scenario_doc).collect()),
    ));
    fields.push((
        "rejected_rules".into(),
        Doc::Arr(e.rejected.iter().map(|r| Doc::Str((*r).into())).collect()),
    ));
    let doc = Doc::Obj(fields);
    let text = match args.output {
        OutputFormat::Json => doc.emit(),
        _ => {
            let mut s = String::new();
            if e.scenarios.is_empty() {
                s.push_str("no orthogonal polynomial system exists\n");
            }
            for sc in &e.scenarios {
                s.push_str(&format!(
                    "kind {} via rule {} (weight {})",
                    sc.kind,
                    sc.rule_id,
                    sc.weight_form_id.slug()
                ));
                if let Some(n) = sc.n_points {
                    s.push_str(&format!(", N = {n}"));
                }
                s.push('\n');
                for b in &sc.support {
                    s.push_str(&format!(
                        "  branch {} from {} ({})\n",
                        b.branch.label(),
                        fmt_g17(b.generator),
                        b.direction.label()
                    ));
                }
                for w in &sc.warnings {
                    s.push_str(&format!("  warning: {w}\n"));
                }
            }
            for r in &e.rejected {
                s.push_str(&format!("matched rejected configuration: {r}\n"));
            }
            s
        }
    };
    Ok(Output { text, code: 0 })
}

fn run_weight(args: &InputArgs) -> Result<Output, CliError> {
    no_csv(args.output)?;
    let problem = args.resolve()?;
    let cls = classify(&problem.spec);
    let scenarios = qhahn::classify::enumerate_scenarios(&problem.spec);
    let mut forms = Vec::new();
    let mut human = String::new();
    for s in &scenarios {
        let wf = closed_form_weight(&problem.spec, cls, s)?;
        human.push_str(&format!(
            "rule {}: form {}",
            s.rule_id,
            s.weight_form_id.slug()
        ));
        if let Some(a) = wf.power_alpha {
            human.push_str(&format!(", alpha = {}", fmt_g17(a)));
        }
        human.push('\n');
        forms.push(Doc::Obj(vec![
            ("rule".into(), Doc::Str(s.rule_id.into())),
            ("weight".into(), wf.to_json()),
        ]));
    }
    let mut fields = header("weight", &problem);
    fields.push(("forms".into(), Doc::Arr(forms)));
    let doc = Doc::Obj(fields);
    let text = match args.output {
        OutputFormat::Json => doc.emit(),
        _ => {
            if human.is_empty() {
                "no orthogonal polynomial system exists\n".to_string()
            } else {
                human
            }
        }
    };
    Ok(Output { text, code: 0 })
}

fn pick_scenario(problem: &Problem, index: usize) -> Result<(OrthScenario, HahnClass), CliError> {
    let scenarios = qhahn::classify::enumerate_scenarios(&problem.spec);
    if scenarios.is_empty() {
        return Err(CliError::Precondition(
            "no orthogonality scenario exists for this equation".into(),
        ));
    }
    let s = scenarios
        .into_iter()
        .nth(index)
        .ok_or_else(|| CliError::Precondition(format!("scenario index {index} out of range")))?;
    Ok((s, classify(&problem.spec)))
}

fn effective_n_max(problem: &Problem, s: &OrthScenario) -> u32 {
    match s.n_points {
        Some(n) if (n as u32) < problem.n_max => n as u32,
        _ => problem.n_max,
    }
}

fn run_orth(args: &OrthArgs) -> Result<Output, CliError> {
    no_csv(args.input.output)?;
    let problem = args.input.resolve()?;
    let (s, cls) = pick_scenario(&problem, args.scenario)?;
    let wf = closed_form_weight(&problem.spec, cls, &s)?;
    let n_max = effective_n_max(&problem, &s);
    // Norm-ratio checks belong to `norms`; orth reports the Gram verdict.
    let report = verify_orthogonality(
        &problem.spec,
        &wf,
        &s,
        None,
        n_max,
        &problem.qp,
        problem.thresholds,
    )?;
    let mut fields = header("orth", &problem);
    fields.push(("class".into(), Doc::Str(cls.slug().into())));
    fields.push(("rule".into(), Doc::Str(s.rule_id.into())));
    fields.push(("report".into(), report.to_json()));
    let doc = Doc::Obj(fields);
    let text = match args.input.output {
        OutputFormat::Json => doc.emit(),
        _ => {
            let mut out = format!(
                "rule {}: off_diag_max = {} -> verdict {}\n",
                s.rule_id,
                fmt_g17(report.off_diag_max),
                if report.verdict { "true" } else { "false" }
            );
            if let Some(spread) = report.ratio_spread {
                out.push_str(&format!("norm ratio spread = {}\n", fmt_g17(spread)));
            }
            out
        }
    };
    Ok(Output { text, code: 0 })
}

fn run_norms(args: &OrthArgs) -> Result<Output, CliError> {
    no_csv(args.input.output)?;
    let problem = args.input.resolve()?;
    let family = match &problem.family {
        Some(f) => f.clone(),
        None => {
            return Err(CliError::Precondition(
                "norms requires --family (printed norms are per-family)".into(),
            ))
        }
    };
    let (s, cls) = pick_scenario(&problem, args.scenario)?;
    let wf = closed_form_weight(&problem.spec, cls, &s)?;
    let n_max = effective_n_max(&problem, &s);
    let report = verify_orthogonality(
        &problem.spec,
        &wf,
        &s,
        Some((family.family_id, &family.params)),
        n_max,
        &problem.qp,
        problem.thresholds,
    )?;
    let mut rows = Vec::new();
    let mut human = String::from("n, gram_diagonal, printed_norm, |ratio|\n");
    for n in 0..=n_max {
        let diag = report.gram[n as usize][n as usize];
        let formula = norm_formula(family.family_id, &family.params, &problem.qp, n)?;
        if !formula.is_finite() || formula == 0.0 {
            return Err(CliError::Numerical(format!(
                "printed norm degenerates at n = {n} for these parameters"
            )));
        }
        let ratio = (diag / formula).abs();
        human.push_str(&format!(
            "{n}, {}, {}, {}\n",
            fmt_g17(diag),
            fmt_g17(formula),
            fmt_g17(ratio)
        ));
        rows.push(Doc::Obj(vec![
            ("n".into(), Doc::Int(n as i64)),
            ("gram_diagonal".into(), Doc::Num(diag)),
            ("printed_norm".into(), Doc::Num(formula)),
            ("abs_ratio".into(), Doc::Num(ratio)),
        ]));
    }
    let mut fields = header("norms", &problem);
    fields.push(("rows".into(), Doc::Arr(rows)));
    fields.push(("ratio_spread".into(), opt_num(report.ratio_spread)));
    let doc = Doc::Obj(fields);
    let text = match args.input.output {
        OutputFormat::Json => doc.emit(),
        _ => {
            if let Some(spread) = report.ratio_spread {
                human.push_str(&format!("spread = {}\n", fmt_g17(spread)));
            }
            human
        }
    };
    Ok(Output { text, code: 0 })
}

/// Poles of the Pearson ratio: zeros of sigma1(q x).
fn pearson_poles(spec: &EHTSpec) -> Vec<f64> {
    spec.roots1()
        .real_values()
        .iter()
        .map(|r| r / spec.q())
        .collect()
}

fn default_plot_range(spec: &EHTSpec) -> (f64, f64) {
    let mut landmarks: Vec<f64> = spec.roots1().real_values();
    landmarks.extend(spec.roots2().real_values());
    landmarks.extend(pearson_poles(spec));
    let span = landmarks.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    (-1.2 * span, 1.2 * span)
}

fn emit_plot(
    problem: &Problem,
    command: &str,
    points: Vec<(f64, f64)>,
    poles: Vec<f64>,
    zeros: Vec<f64>,
    asymptote: Option<f64>,
    output: OutputFormat,
) -> Output {
    match output {
        OutputFormat::Json => {
            let mut fields = header(command, problem);
            fields.push((
                "poles".into(),
                Doc::Arr(poles.iter().map(|&p| Doc::Num(p)).collect()),
            ));
            fields.push((
                "zeros".into(),
                Doc::Arr(zeros.iter().map(|&z| Doc::Num(z)).collect()),
            ));
            fields.push(("asymptote".into(), opt_num(asymptote)));
            fields.push((
                "points".into(),
                Doc::Arr(
                    points
                        .iter()
                        .map(|&(x, v)| {
                            Doc::Obj(vec![
                                ("x".into(), Doc::Num(x)),
                                ("value".into(), Doc::Num(v)),
                            ])
                        })
                        .collect(),
                ),
            ));
            Output {
                text: Doc::Obj(fields).emit(),
                code: 0,
            }
        }
        _ => {
            let mut text = String::from("x,value\n");
            for (x, v) in points {
                text.push_str(&format!("{},{}\n", fmt_g17(x), fmt_g17(v)));
            }
            Output { text, code: 0 }
        }
    }
}

fn run_plot_f(args: &PlotArgs) -> Result<Output, CliError> {
    let problem = args.input.resolve()?;
    let spec = &problem.spec;
    let (lo, hi) = match (args.x_min, args.x_max) {
        (Some(a), Some(b)) if a < b => (a, b),
        (None, None) => default_plot_range(spec),
        _ => {
            return Err(CliError::Precondition(
                "give both --x-min and --x-max with x-min < x-max".into(),
            ))
        }
    };
    if args.points < 2 {
        return Err(CliError::Precondition("need at least 2 grid points".into()));
    }
    let poles = pearson_poles(spec);
    let mut pts = Vec::new();
    for i in 0..args.points {
        let x = lo + (hi - lo) * (i as f64) / (args.points as f64 - 1.0);
        if poles.iter().any(|p| (x - p).abs() < POLE_CLEARANCE) {
            continue;
        }
        if let Ok(v) = pearson_ratio(spec, x) {
            pts.push((x, v));
        }
    }
    let zeros = spec.roots2().real_values();
    let asymptote = case_invariants(spec).ok().and_then(|i| i.lambda_q);
    Ok(emit_plot(
        &problem,
        "plot-f",
        pts,
        poles,
        zeros,
        asymptote,
        args.input.output,
    ))
}

fn run_plot_rho(args: &PlotArgs) -> Result<Output, CliError> {
    let problem = args.input.resolve()?;
    let (s, cls) = pick_scenario(&problem, 0)?;
    let wf = closed_form_weight(&problem.spec, cls, &s)?;
    let (lo, hi) = match (args.x_min, args.x_max) {
        (Some(a), Some(b)) if a < b => (a, b),
        (None, None) => {
            let lo = match s.interval.0 {
                Endpoint::Finite(v) => v,
                _ => -4.0,
            };
            let hi = match s.interval.1 {
                Endpoint::Finite(v) => v,
                _ => 4.0,
            };
            (lo, hi)
        }
        _ => {
            return Err(CliError::Precondition(
                "give both --x-min and --x-max with x-min < x-max".into(),
            ))
        }
    };
    if args.points < 2 {
        return Err(CliError::Precondition("need at least 2 grid points".into()));
    }
    let poles = weight_poles(&wf, problem.qp.q(), lo, hi);
    let mut pts = Vec::new();
    for i in 0..args.points {
        let x = lo + (hi - lo) * (i as f64) / (args.points as f64 - 1.0);
        if poles.iter().any(|p| (x - p).abs() < POLE_CLEARANCE) {
            continue;
        }
        if let Ok(v) = eval_weight(&wf, x, &problem.qp) {
            pts.push((x, v));
        }
    }
    Ok(emit_plot(
        &problem,
        "plot-rho",
        pts,
        poles,
        vec![],
        None,
        args.input.output,
    ))
}

/// Pole positions of an instantiated weight inside [lo, hi]: the lattice
/// points where a denominator Pochhammer factor vanishes.
fn weight_poles(wf: &qhahn::weight::WeightForm, q: f64, lo: f64, hi: f64) -> Vec<f64> {
    use qhahn::weight::PochFactor;
    let sign = if wf.reflect_input { -1.0 } else { 1.0 };
    let mut poles = Vec::new();
    let bound = lo.abs().max(hi.abs());
    for f in &wf.denominators {
        match *f {
            PochFactor::Ascending(c) if c != 0.0 => {
                // (c x; q)_inf = 0 at x = q^{-m} / c, m >= 0.
                let mut x = 1.0 / c;
                while x.abs() <= bound {
                    let mapped = sign * x;
                    if mapped >= lo && mapped <= hi {
                        poles.push(mapped);
                    }
                    x /= q;
                    if !x.is_finite() {
                        break;
                    }
                }
            }
            PochFactor::Descending(c) if c != 0.0 => {
                // (c / x; q)_inf = 0 at x = c q^m, m >= 0; the positions
                // accumulate at the origin.
                let mut x = c;
                while x.abs() > 1e-300 {
                    let mapped = sign * x;
                    if mapped >= lo && mapped <= hi {
                        poles.push(mapped);
                    }
                    x *= q;
                }
            }
            _ => {}
        }
    }
    poles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    poles
}

fn run_families(args: &FormatArgs) -> Result<Output, CliError> {
    let text = match args.output {
        OutputFormat::Json => registry_json().emit(),
        OutputFormat::Csv => {
            return Err(CliError::Precondition(
                "csv output applies to plot data only".into(),
            ))
        }
        OutputFormat::Human => {
            let mut s = String::new();
            for f in qhahn::families::list_families() {
                s.push_str(&format!(
                    "{} (params {:?}{}) class {} kind {}\n",
                    f.id.slug(),
                    f.parameters,
                    if f.requires_n { " + N" } else { "" },
                    f.expected_class.slug(),
                    f.expected_kind
                ));
                for (name, cons) in f.regions {
                    s.push_str(&format!("  region {name}: {cons}\n"));
                }
            }
            s
        }
    };
    Ok(Output { text, code: 0 })
}

/// Executes a parsed command.
pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Classify(a) => run_classify(a),
        Command::Scenarios(a) => run_scenarios(a),
        Command::Weight(a) => run_weight(a),
        Command::Orth(a) => run_orth(a),
        Command::Norms(a) => run_norms(a),
        Command::PlotF(a) => run_plot_f(a),
        Command::PlotRho(a) => run_plot_rho(a),
        Command::Families(a) => run_families(a),
    }
}

/// Parses an argument vector and runs it; used by both `main` and tests.
pub fn run_args<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => return (e.to_string(), 2),
    };
    match execute(&cli) {
        Ok(out) => (out.text, out.code),
        Err(e) => (format!("{e}\n"), e.exit_code()),
    }
}

/// Serialized rule table (for documentation and audit tooling).
pub fn rules_document() -> String {
    rule_table_json().emit()
}
