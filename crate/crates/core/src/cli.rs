//! Command-line driver. `run` does all the work and returns the exit code
//! and both streams, so tests can drive it without spawning a process.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::berkovich::{BerkError, BerkPoint};
use crate::crucial_measure::{crucial_measure, weight_sum, CrucialError, CrucialMeasure, WeightedPoint};
use crate::dynamics_reports::{
    bounds_report, equidist_table_of, lyapunov_of, spherical_derivative_log, Check, ReportError,
};
use crate::ordres_minresloc::{
    containment_check, green_diag_approx, min_res_loc_with_cap, ord_res_at, ray_profile, OrdResError,
    DEFAULT_DIRECTION_CAP,
};
use crate::rational_map::{MapError, Poly, RationalMap};
use crate::tree_potential::{barycenter, green, green_constant, TreeError};
use crate::valued_field::{fmt_rat, parse_rat, rat_to_f64, ExtRat, Rat};

#[derive(Parser, Debug)]
#[command(name = "berkdyn", version, about = "Exact p-adic dynamics on the Berkovich line")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// ordRes of φⁿ along the ray ζ(center, t)
    Ordres(RunArgs),
    /// the minimal resultant locus of φⁿ
    Minresloc(RunArgs),
    /// the crucial measure of φⁿ with its weight-sum certificate
    Crucial(RunArgs),
    /// Lipschitz, root-pole, radius, coefficient and multiplier checks
    Bounds(RunArgs),
    /// log-integrals against ν_φᵏ for k = 1..n and their differences
    Equidist(RunArgs),
    /// the Green function of ν_φⁿ and the diagonal approximation
    Green(RunArgs),
    /// the Lyapunov estimate against ν_φⁿ
    Lyapunov(RunArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// JSON map spec: {"p", "numerator", "denominator", "label"}
    #[arg(long)]
    spec: Option<String>,
    #[arg(long)]
    p: Option<u64>,
    /// numerator coefficients, ascending, comma separated
    #[arg(long, allow_hyphen_values = true)]
    num: Option<String>,
    /// denominator coefficients, ascending, comma separated
    #[arg(long, allow_hyphen_values = true)]
    den: Option<String>,
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// ray center for ordres; a point ("inf", "a/b", "disk:a/b:t") elsewhere
    #[arg(long, allow_hyphen_values = true)]
    center: Option<String>,
    /// second point for green
    #[arg(long, allow_hyphen_values = true)]
    other: Option<String>,
    /// t0:t1 for ordres
    #[arg(long, allow_hyphen_values = true, default_value = "0:2")]
    trange: String,
    /// number of sample rows for ordres
    #[arg(long, default_value_t = 9)]
    grid: usize,
    /// largest prime for which residue directions are enumerated
    #[arg(long, default_value_t = DEFAULT_DIRECTION_CAP)]
    cap: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Cap(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Cap(_) => 4,
        }
    }
}

impl From<MapError> for CliError {
    fn from(e: MapError) -> Self {
        match e {
            MapError::PrecisionCap => CliError::Cap(e.to_string()),
            MapError::NotPrime(_) => CliError::Input(e.to_string()),
            e => CliError::Domain(e.to_string()),
        }
    }
}

impl From<BerkError> for CliError {
    fn from(e: BerkError) -> Self {
        match e {
            BerkError::Map(m) => m.into(),
            e => CliError::Domain(e.to_string()),
        }
    }
}

impl From<OrdResError> for CliError {
    fn from(e: OrdResError) -> Self {
        match e {
            OrdResError::DescentCap | OrdResError::DirectionEnumerationInfeasible(_) => CliError::Cap(e.to_string()),
            OrdResError::Berk(b) => b.into(),
            e => CliError::Domain(e.to_string()),
        }
    }
}

impl From<TreeError> for CliError {
    fn from(e: TreeError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<CrucialError> for CliError {
    fn from(e: CrucialError) -> Self {
        match e {
            CrucialError::Map(m) => m.into(),
            CrucialError::OrdRes(o) => o.into(),
            e => CliError::Domain(e.to_string()),
        }
    }
}

impl From<ReportError> for CliError {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::Crucial(c) => c.into(),
            ReportError::Map(m) => m.into(),
            ReportError::OrdRes(o) => o.into(),
            e => CliError::Domain(e.to_string()),
        }
    }
}

/// Exit code and the two output streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse argv (program name first) and execute.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CliOutput { code: 0, stdout: text, stderr: String::new() }
                }
                _ => CliOutput { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    match execute(&cli.cmd) {
        Ok(out) => CliOutput { code: 0, stdout: out, stderr: String::new() },
        Err(e) => CliOutput { code: e.code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// A report: its JSON form and a TSV table.
struct Report {
    json: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Report {
    fn render(&self, f: Format) -> String {
        match f {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json values serialize") + "\n",
            Format::Tsv => {
                let mut s = self.header.join("\t") + "\n";
                for r in &self.rows {
                    s += &r.join("\t");
                    s.push('\n');
                }
                s
            }
        }
    }
}

fn execute(cmd: &Cmd) -> Result<String, CliError> {
    let (args, f): (&RunArgs, fn(&Ctx) -> Result<Report, CliError>) = match cmd {
        Cmd::Ordres(a) => (a, cmd_ordres),
        Cmd::Minresloc(a) => (a, cmd_minresloc),
        Cmd::Crucial(a) => (a, cmd_crucial),
        Cmd::Bounds(a) => (a, cmd_bounds),
        Cmd::Equidist(a) => (a, cmd_equidist),
        Cmd::Green(a) => (a, cmd_green),
        Cmd::Lyapunov(a) => (a, cmd_lyapunov),
    };
    if args.n == 0 {
        return Err(CliError::Input("InvalidConfig: n must be at least 1".into()));
    }
    let (phi, label) = load_map(args)?;
    if !matches!(cmd, Cmd::Ordres(_)) && phi.degree() < 2 {
        return Err(CliError::Domain(format!("DegreeTooSmall: degree {} map given to a dynamical command", phi.degree())));
    }
    let ctx = Ctx { phi, label, args };
    let mut rep = f(&ctx)?;
    if let Value::Object(m) = &mut rep.json {
        m.insert("map".into(), map_json(&ctx.phi, ctx.label.as_deref()));
        m.insert("n".into(), json!(args.n));
    }
    Ok(rep.render(args.format))
}

struct Ctx<'a> {
    phi: RationalMap,
    label: Option<String>,
    args: &'a RunArgs,
}

fn coeff_list(v: &[Value], what: &str) -> Result<Vec<Rat>, CliError> {
    v.iter()
        .map(|c| {
            let s = match c {
                Value::String(s) => s.clone(),
                Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                _ => return Err(CliError::Input(format!("ParseError: {what} coefficient {c} is not a rational string"))),
            };
            parse_rat(&s).ok_or_else(|| CliError::Input(format!("ParseError: bad {what} coefficient {s:?}")))
        })
        .collect()
}

fn split_coeffs(s: &str, what: &str) -> Result<Vec<Rat>, CliError> {
    let v: Vec<Value> = s.split(',').map(|x| Value::String(x.trim().to_string())).collect();
    coeff_list(&v, what)
}

fn load_map(a: &RunArgs) -> Result<(RationalMap, Option<String>), CliError> {
    let (p, num, den, label) = match &a.spec {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("ParseError: cannot read {path}: {e}")))?;
            let v: Value =
                serde_json::from_str(&text).map_err(|e| CliError::Input(format!("ParseError: {path}: {e}")))?;
            let p = v.get("p").and_then(Value::as_u64).ok_or_else(|| CliError::Input("ParseError: spec needs an integer \"p\"".into()))?;
            let list = |key: &str| -> Result<Vec<Rat>, CliError> {
                match v.get(key) {
                    Some(Value::Array(xs)) => coeff_list(xs, key),
                    _ => Err(CliError::Input(format!("ParseError: spec needs a \"{key}\" list"))),
                }
            };
            let label = v.get("label").and_then(Value::as_str).map(str::to_string);
            (p, list("numerator")?, list("denominator")?, label)
        }
        None => {
            let (Some(p), Some(num)) = (a.p, &a.num) else {
                return Err(CliError::Input("ParseError: give --spec or --p with --num".into()));
            };
            let den = match &a.den {
                Some(d) => split_coeffs(d, "denominator")?,
                None => vec![Rat::one()],
            };
            (p, split_coeffs(num, "numerator")?, den, None)
        }
    };
    let phi = RationalMap::new(&Poly::new(num), &Poly::new(den), p)?;
    Ok((phi, label))
}

fn r(x: &Rat) -> Value {
    Value::String(fmt_rat(x))
}

fn ext(x: &ExtRat) -> Value {
    Value::String(match x {
        ExtRat::NegInf => "-inf".into(),
        ExtRat::PosInf => "inf".into(),
        ExtRat::Fin(q) => fmt_rat(q),
    })
}

fn pt(x: &BerkPoint) -> Value {
    Value::String(x.to_string())
}

fn map_json(phi: &RationalMap, label: Option<&str>) -> Value {
    let f: Vec<Value> = phi.f.iter().map(|c| Value::String(c.to_string())).collect();
    let g: Vec<Value> = phi.g.iter().map(|c| Value::String(c.to_string())).collect();
    let mut m = json!({
        "p": phi.p,
        "degree": phi.degree(),
        "lift": {"f": f, "g": g},
        "ord_res": phi.ord_res(),
    });
    if let Some(l) = label {
        m["label"] = json!(l);
    }
    m
}

fn parse_point(s: Option<&str>, p: u64) -> Result<BerkPoint, CliError> {
    match s {
        None => Ok(BerkPoint::gauss()),
        Some(s) => BerkPoint::parse(s, p).ok_or_else(|| CliError::Input(format!("ParseError: bad point {s:?}"))),
    }
}

fn weight_cert(cm: &CrucialMeasure) -> Value {
    json!({
        "sum": cm.certificate.weight_sum,
        "expected": cm.certificate.expected,
        "pass": cm.certificate.weight_sum == cm.certificate.expected,
    })
}

fn atom_json(w: &WeightedPoint, degree: u64) -> Value {
    let mass = Rat::new(w.weight.into(), (degree - 1).into());
    json!({
        "point": pt(&w.point),
        "weight": w.weight,
        "mass": r(&mass),
        "tag": w.tag.name(),
        "class": w.class.name(),
        "reduction_degree": w.reduction_degree,
        "shearing": w.shearing,
        "fixed_valence": w.fixed_valence,
    })
}

/// A certified crucial measure, or the JSON describing why there is none.
fn crucial_or_incomplete(phi: &RationalMap, n: usize) -> Result<Result<CrucialMeasure, Value>, CliError> {
    match crucial_measure(phi, n) {
        Ok(cm) => Ok(Ok(cm)),
        Err(CrucialError::IncompleteEnumeration { found, deficit, fixed_points_split }) => {
            let d = (phi.degree() as u64).pow(n as u32);
            Ok(Err(json!({
                "n": n,
                "complete": false,
                "found": found.iter().map(|w| atom_json(w, d)).collect::<Vec<_>>(),
                "weight_sum": {"sum": weight_sum(&found), "expected": d - 1, "deficit": deficit, "pass": false},
                "fixed_points_split": fixed_points_split,
            })))
        }
        Err(e) => Err(e.into()),
    }
}

fn parse_trange(s: &str) -> Result<(Rat, Rat), CliError> {
    let bad = || CliError::Input(format!("ParseError: bad t-range {s:?}, expected t0:t1"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let (a, b) = (parse_rat(a).ok_or_else(bad)?, parse_rat(b).ok_or_else(bad)?);
    if a > b {
        return Err(CliError::Input(format!("InvalidConfig: empty t-range {s}")));
    }
    Ok((a, b))
}

fn cmd_ordres(c: &Ctx) -> Result<Report, CliError> {
    let a = c.args;
    let psi = c.phi.iterate(a.n);
    let center = match &a.center {
        None => Rat::zero(),
        Some(s) => parse_rat(s).ok_or_else(|| CliError::Input(format!("ParseError: bad ray center {s:?}")))?,
    };
    let (t0, t1) = parse_trange(&a.trange)?;
    if a.grid < 2 {
        return Err(CliError::Input("InvalidConfig: grid needs at least 2 rows".into()));
    }
    let prof = ray_profile(&psi, &center, &t0, &t1);
    let steps = Rat::from_integer((a.grid as i64 - 1).into());
    let mut rows = vec![];
    let mut tsv = vec![];
    for i in 0..a.grid {
        let t = &t0 + (&t1 - &t0) * Rat::from_integer((i as i64).into()) / &steps;
        let v = prof.value(&t).expect("grid lies in the range");
        rows.push(json!({"t": r(&t), "value": r(&v), "display": {"t": rat_to_f64(&t), "value": rat_to_f64(&v)}}));
        tsv.push(vec![fmt_rat(&t), fmt_rat(&v), rat_to_f64(&t).to_string(), rat_to_f64(&v).to_string()]);
    }
    let pieces: Vec<Value> = prof
        .pieces
        .iter()
        .zip(prof.breakpoints.windows(2))
        .map(|(pc, w)| json!({"from": r(&w[0]), "to": r(&w[1]), "slope": r(&pc.slope), "value": r(&pc.value_at_left)}))
        .collect();
    let at_g = ord_res_at(&psi, &BerkPoint::gauss())?;
    Ok(Report {
        json: json!({
            "command": "ordres",
            "center": r(&center),
            "trange": [r(&t0), r(&t1)],
            "breakpoints": prof.breakpoints.iter().map(r).collect::<Vec<_>>(),
            "pieces": pieces,
            "rows": rows,
            "certificates": {
                "convexity": {"convex": prof.is_convex(), "continuous": prof.is_continuous()},
                "gauss_value": {"ord_res_at_gauss": r(&at_g), "ord_res": psi.ord_res(), "pass": at_g == Rat::from_integer(psi.ord_res().into())},
            },
        }),
        header: vec!["t", "value", "t_display", "value_display"],
        rows: tsv,
    })
}

fn cmd_minresloc(c: &Ctx) -> Result<Report, CliError> {
    let psi = c.phi.iterate(c.args.n);
    let p = psi.p;
    let loc = min_res_loc_with_cap(&psi, c.args.cap)?;
    let cont = containment_check(&c.phi, c.args.n)?;
    // convexity along each end's ray, two units either side
    let mut convex = true;
    for e in loc.endpoints() {
        let (a, t) = (e.center().unwrap(), e.log_radius().unwrap());
        let two = Rat::from_integer(2.into());
        convex &= ray_profile(&psi, a, &(t - &two), &(t + &two)).is_convex();
    }
    let probe = |pr: &crate::ordres_minresloc::Probe| json!({"at": pr.at, "direction": pr.direction, "slope": r(&pr.slope)});
    let cert = &loc.certificate;
    let ends = loc.endpoints();
    Ok(Report {
        json: json!({
            "command": "minresloc",
            "locus": {
                "kind": if loc.is_point() { "point" } else { "segment" },
                "ends": ends.iter().map(pt).collect::<Vec<_>>(),
                "value": r(&loc.value),
            },
            "descent": {
                "path": cert.path,
                "explored": cert.explored.iter().map(probe).collect::<Vec<_>>(),
                "irrational_descents": cert.irrational_descents.iter().map(probe).collect::<Vec<_>>(),
                "direction_cap": c.args.cap,
            },
            "certificates": {
                "certified_rational_scope": cert.certified_rational_scope,
                "potential_good_reduction": cert.potential_good_reduction,
                "convexity": {"convex_through_ends": convex},
                "containment": {
                    "radius_bound": r(&cont.radius_bound),
                    "distances": cont.distances.iter().map(r).collect::<Vec<_>>(),
                    "contained": cont.contained,
                    "rays_sampled": cont.rays_sampled,
                    "monotone_outside": cont.monotone_outside,
                    "pass": cont.pass,
                },
            },
        }),
        header: vec!["end", "value", "rho_to_gauss"],
        rows: ends
            .iter()
            .map(|e| {
                let d = crate::berkovich::rho(e, &BerkPoint::gauss(), p).expect("ends are hyperbolic");
                vec![e.to_string(), fmt_rat(&loc.value), fmt_rat(&d)]
            })
            .collect(),
    })
}

fn incomplete_report(command: &str, v: Value) -> Report {
    let rows = vec![vec!["complete".into(), "false".into()]];
    Report {
        json: json!({"command": command, "complete": false, "certificates": {"weight_sum": v["weight_sum"].clone()}, "incomplete": v}),
        header: vec!["key", "value"],
        rows,
    }
}

fn cmd_crucial(c: &Ctx) -> Result<Report, CliError> {
    let (phi, n) = (&c.phi, c.args.n);
    let cm = match crucial_or_incomplete(phi, n)? {
        Ok(cm) => cm,
        Err(v) => return Ok(incomplete_report("crucial", v)),
    };
    let bc = barycenter(&cm.measure(), phi.p)?;
    let loc = min_res_loc_with_cap(&phi.iterate(n), c.args.cap)?;
    let key = |v: Vec<BerkPoint>| {
        let mut s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        s.sort();
        s.dedup();
        s
    };
    let (kb, kl) = (key(bc.endpoints()), key(loc.endpoints()));
    let rows = cm
        .atoms
        .iter()
        .map(|w| {
            let m = Rat::new(w.weight.into(), (cm.degree - 1).into());
            vec![w.point.to_string(), w.weight.to_string(), fmt_rat(&m), w.tag.name().into()]
        })
        .collect();
    Ok(Report {
        json: json!({
            "command": "crucial",
            "complete": cm.complete,
            "atoms": cm.atoms.iter().map(|w| atom_json(w, cm.degree)).collect::<Vec<_>>(),
            "certificates": {
                "weight_sum": weight_cert(&cm),
                "fixed_points_split": cm.certificate.fixed_points_split,
                "candidates": cm.certificate.candidates,
                "digits": cm.certificate.digits,
                "barycenter_cross_check": {"barycenter": kb, "min_res_loc": kl, "equal": kb == kl},
            },
        }),
        header: vec!["point", "weight", "mass", "tag"],
        rows,
    })
}

fn check_json(ch: &Check) -> Value {
    serde_json::to_value(ch).expect("checks serialize")
}

fn cmd_bounds(c: &Ctx) -> Result<Report, CliError> {
    let (phi, n) = (&c.phi, c.args.n);
    let b = bounds_report(phi, n)?;
    let rp: Vec<Value> = b
        .rp
        .iter()
        .map(|(k, v)| match v {
            Ok(x) => json!({"n": k, "value": r(x)}),
            Err(e) => json!({"n": k, "error": e.to_string()}),
        })
        .collect();
    let prz = match &b.przytycki {
        Ok(z) => json!({
            "exponent": z.exponent,
            "a": r(&z.a),
            "b": r(&z.b),
            "critical_points": z.per_point.iter().map(|cc| json!({
                "point": cc.point.to_string(), "k": cc.k, "a_k": r(&cc.a_k), "exponent": cc.exponent,
            })).collect::<Vec<_>>(),
        }),
        Err(e) => json!({"error": e.to_string()}),
    };
    let rad = &b.radius;
    let rows = b
        .checks
        .iter()
        .map(|ch| vec![ch.check.clone(), ch.lhs.clone(), ch.rhs.clone(), ch.pass.to_string()])
        .collect();
    let failed = b.checks.iter().filter(|ch| !ch.pass).count();
    Ok(Report {
        json: json!({
            "command": "bounds",
            "ord_res": b.ord_res,
            "lipschitz": {"value": r(&b.lipschitz.value), "log": b.lipschitz.log.to_string(), "display": {"value": rat_to_f64(&b.lipschitz.value)}},
            "root_pole": rp,
            "przytycki": prz,
            "gamma_exponent": r(&b.gamma_exponent),
            "radius": {
                "potential_good_reduction": rad.potential_good_reduction,
                "branch_a": r(&rad.branch_a),
                "branch_b": rad.branch_b.as_ref().map(|x| x.to_string()),
                "branch_b_without_b": rad.branch_b_without_b.to_string(),
                "simplified": rad.simplified.to_string(),
                "atom_distances": rad.atom_distances.iter().map(|(x, d)| json!({"point": pt(x), "rho": r(d)})).collect::<Vec<_>>(),
            },
            "checks": b.checks.iter().map(check_json).collect::<Vec<_>>(),
            "certificates": {"checks": {"count": b.checks.len(), "failed": failed, "pass": failed == 0}},
        }),
        header: vec!["check", "lhs", "rhs", "pass"],
        rows,
    })
}

fn cmd_equidist(c: &Ctx) -> Result<Report, CliError> {
    let (phi, n) = (&c.phi, c.args.n);
    let z = parse_point(c.args.center.as_deref(), phi.p)?;
    if z.is_type_i() {
        return Err(CliError::Domain("TypeIPoint: the base point must be a disc".into()));
    }
    let mut cms = vec![];
    for k in 1..=n {
        match crucial_or_incomplete(phi, k)? {
            Ok(cm) => cms.push(cm),
            Err(v) => return Ok(incomplete_report("equidist", v)),
        }
    }
    let tb = equidist_table_of(phi, &cms, &z);
    let opt = |x: &Option<Rat>| x.as_ref().map(r).unwrap_or(Value::Null);
    let rows: Vec<Value> = tb
        .rows
        .iter()
        .map(|row| {
            json!({
                "n": row.n,
                "integral": r(&row.integral),
                "difference": opt(&row.difference),
                "scaled": opt(&row.scaled),
                "display": {"envelope": row.envelope},
            })
        })
        .collect();
    let tsv = tb
        .rows
        .iter()
        .map(|row| {
            let o = |x: &Option<Rat>| x.as_ref().map(fmt_rat).unwrap_or_else(|| "-".into());
            vec![row.n.to_string(), fmt_rat(&row.integral), o(&row.difference), o(&row.scaled), row.envelope.to_string()]
        })
        .collect();
    Ok(Report {
        json: json!({
            "command": "equidist",
            "complete": true,
            "base": pt(&tb.base),
            "rows": rows,
            "fitted": r(&tb.fitted),
            "certificates": {"weight_sum": cms.iter().map(weight_cert).collect::<Vec<_>>()},
        }),
        header: vec!["n", "integral", "difference", "scaled", "envelope_display"],
        rows: tsv,
    })
}

fn cmd_green(c: &Ctx) -> Result<Report, CliError> {
    let (phi, n) = (&c.phi, c.args.n);
    let x = parse_point(c.args.center.as_deref(), phi.p)?;
    let y = match &c.args.other {
        Some(_) => parse_point(c.args.other.as_deref(), phi.p)?,
        None => x.clone(),
    };
    let diag = if x.is_hyperbolic() { Some(green_diag_approx(phi, &x, n)?) } else { None };
    let cm = match crucial_or_incomplete(phi, n)? {
        Ok(cm) => cm,
        Err(v) => {
            let mut rep = incomplete_report("green", v);
            rep.json["green_diag_approx"] = diag.as_ref().map(r).unwrap_or(Value::Null);
            return Ok(rep);
        }
    };
    let nu = cm.measure();
    let g = green(&nu, &x, &y, phi.p)?;
    let k = green_constant(&nu, phi.p)?;
    let mut s = Rat::zero();
    for (a, ma) in &nu.atoms {
        for (b, mb) in &nu.atoms {
            s += ma * mb * green(&nu, a, b, phi.p)?.fin().expect("atoms are hyperbolic").clone();
        }
    }
    let mut rows = vec![
        vec!["green".into(), match &g {
            ExtRat::Fin(q) => fmt_rat(q),
            ExtRat::PosInf => "inf".into(),
            ExtRat::NegInf => "-inf".into(),
        }],
        vec!["constant".into(), fmt_rat(&k)],
    ];
    if let Some(d) = &diag {
        rows.push(vec!["green_diag_approx".into(), fmt_rat(d)]);
    }
    Ok(Report {
        json: json!({
            "command": "green",
            "complete": true,
            "x": pt(&x),
            "y": pt(&y),
            "green": ext(&g),
            "constant": r(&k),
            "green_diag_approx": diag.as_ref().map(r).unwrap_or(Value::Null),
            "certificates": {
                "weight_sum": weight_cert(&cm),
                "normalization": {"double_sum": r(&s), "pass": s.is_zero()},
            },
        }),
        header: vec!["key", "value"],
        rows,
    })
}

fn cmd_lyapunov(c: &Ctx) -> Result<Report, CliError> {
    let (phi, n) = (&c.phi, c.args.n);
    let cm = match crucial_or_incomplete(phi, n)? {
        Ok(cm) => cm,
        Err(v) => return Ok(incomplete_report("lyapunov", v)),
    };
    let est = lyapunov_of(phi, &cm)?;
    let mut atoms = vec![];
    let mut rows = vec![];
    for (x, m) in cm.measure().atoms {
        let v = spherical_derivative_log(phi, &x)?;
        atoms.push(json!({"point": pt(&x), "mass": r(&m), "log_spherical_derivative": r(&v)}));
        rows.push(vec![x.to_string(), fmt_rat(&m), fmt_rat(&v)]);
    }
    rows.push(vec!["total".into(), "1".into(), fmt_rat(&est)]);
    Ok(Report {
        json: json!({
            "command": "lyapunov",
            "complete": true,
            "estimate": r(&est),
            "display": {"estimate": rat_to_f64(&est)},
            "atoms": atoms,
            "certificates": {"weight_sum": weight_cert(&cm)},
        }),
        header: vec!["point", "mass", "log_spherical_derivative"],
        rows,
    })
}
