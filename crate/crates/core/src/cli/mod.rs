//! Batch front end: `sextic <area> <command> [input]`, JSON on stdout.
//!
//! Every invocation prints one [`CommandResult`]. Exit code 0 on success,
//! 1 on a domain error, 2 on a usage error. Inputs are taken from the
//! named flag, the positional argument, or stdin, in that order.

mod report;

use std::io::Read;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::algebraic::rational_field;
use crate::arith::intmat::{smith_normal_form, IntMatrix};
use crate::arith::numfield::{Nf, NumberField};
use crate::arith::poly::{Poly, QPoly};
use crate::arith::rational::parse_q;
use crate::arith::Q;
use crate::groups::{
    self, alternating, catalogue, count_epis, count_homs, cyclic, dihedral, direct_product, hom_count_spectrum,
    local_presentation, monodromy, semidirect_cyclic, symmetric, Convention, FiberType, FiniteGroup, GroupError,
    Presentation, CATALOGUE_MAX_ORDER,
};
use crate::lattice::{discriminant_group, GramLattice};
use crate::roots::{
    classify_by_predicate, classify_odd_torsion, dihedral_quotient_count, find_embedding, verify_lemma_e8, Budget,
    RootSystemSpec, RootsError, SearchError, BUDGET_ENV, DEFAULT_BUDGET,
};
use crate::torus::{detect_torus_curve, expected_torus_count, inner_outer_split, verify_torus, TorusStructure};
use crate::trigonal::{
    associated_cubic, associated_quartic, classify_singular_points, genus, parse_bipoly, sextic_singularities,
    sigma_from_fibers, singular_fibers, FiberChoice, TrigonalCurve, TrigonalError,
};

pub use report::{
    fiber_point_json, fiber_point_rows, minimal_fiber_euler, no_e12_verdicts, no_j10_verdicts, report_tables,
    NON_EMBEDDABLE,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandResult {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

impl CommandResult {
    pub fn ok(payload: Value) -> Self {
        CommandResult { status: Status::Ok, reason: None, payload, diagnostics: Vec::new() }
    }

    pub fn error(reason: &str, message: String) -> Self {
        CommandResult {
            status: Status::Error,
            reason: Some(reason.to_string()),
            payload: json!({ "message": message }),
            diagnostics: Vec::new(),
        }
    }
}

/// What the process should emit.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub result: Option<CommandResult>,
}

/// A domain failure with a reason code.
#[derive(Debug)]
pub struct Failure {
    reason: &'static str,
    message: String,
}

impl Failure {
    fn new(reason: &'static str, message: impl Into<String>) -> Self {
        Failure { reason, message: message.into() }
    }
}

impl From<TrigonalError> for Failure {
    fn from(e: TrigonalError) -> Self {
        let reason = match e {
            TrigonalError::Degree { .. } | TrigonalError::NotTrigonal(_) => "invalid_curve",
            TrigonalError::Degenerate => "degenerate",
            TrigonalError::Parse(_) | TrigonalError::Json(_) => "parse",
            TrigonalError::NonMinimal(_) => "non_minimal",
            TrigonalError::NonSimple(_) => "non_simple",
            TrigonalError::NotTriplePoint(_) => "not_triple_point",
            TrigonalError::NotDoublePoint(_) => "not_double_point",
            TrigonalError::InvalidFiber(_) => "invalid_fiber",
            _ => "trigonal",
        };
        Failure::new(reason, e.to_string())
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        Failure::new("budget_exceeded", e.to_string())
    }
}

impl From<RootsError> for Failure {
    fn from(e: RootsError) -> Self {
        let reason = match e {
            RootsError::Search(_) => "budget_exceeded",
            RootsError::NotEmbeddable(_) => "not_embeddable",
            RootsError::NotPrime(_) => "not_prime",
            RootsError::AmbiguousTorsion(..) => "ambiguous_torsion",
        };
        Failure::new(reason, e.to_string())
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        let reason = match e {
            GroupError::Parse(_) => "parse",
            GroupError::UnknownFiber(_) => "unknown_fiber",
            GroupError::Bound(_) => "bound",
            GroupError::Augmentation(_) => "augmentation",
            GroupError::InvalidGroup(_) => "invalid_group",
        };
        Failure::new(reason, e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "sextic", version, about = "Exact computations for plane sextics of torus type")]
struct Cli {
    /// Compact JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    area: Area,
}

#[derive(Subcommand, Debug)]
enum Area {
    /// Integer lattices and root systems in E8.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Trigonal curves y^3 + a y^2 + b y + c.
    #[command(subcommand)]
    Trigonal(TrigonalCmd),
    /// Torus structures p^3 + q^2.
    #[command(subcommand)]
    Torus(TorusCmd),
    /// Monodromy, presentations and finite quotients.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Fiber types against sextic singular points, and the non-existence verdicts.
    Report,
}

#[derive(Args, Debug)]
struct Input {
    /// Input text; read from stdin when absent.
    value: Option<String>,
    #[arg(long = "input")]
    flag: Option<String>,
}

#[derive(Args, Debug)]
struct CurveInput {
    /// Polynomial in x, y or `{"a": [...], "b": [...], "c": [...]}`.
    value: Option<String>,
    #[arg(long = "curve")]
    flag: Option<String>,
}

#[derive(Args, Debug)]
struct SpecInput {
    /// ADE spec such as `3A2+A1`.
    value: Option<String>,
    #[arg(long = "spec")]
    flag: Option<String>,
}

#[derive(Args, Debug)]
struct PresentationInput {
    /// `<a, b | aba = bab>` or `{"generators": [...], "relators": [...]}`.
    value: Option<String>,
    #[arg(long = "presentation")]
    flag: Option<String>,
}

#[derive(Subcommand, Debug)]
enum LatticeCmd {
    /// Smith normal form of an integer matrix given as JSON rows.
    Snf(Input),
    /// Discriminant group of a Gram matrix given as JSON rows.
    Discr(Input),
    /// Search for an embedding of a root system into E8.
    Embed(SpecInput),
    /// Root systems in E8 with nontrivial odd quotient torsion.
    ClassifyOddTorsion,
    /// Root systems in E8 whose quotient torsion has the given primes.
    ClassifyPred {
        /// Require p-torsion (repeatable).
        #[arg(long = "has")]
        has: Vec<u64>,
        /// Require nontrivial torsion of odd order.
        #[arg(long)]
        odd: bool,
    },
    /// Number of dihedral quotients D_{2n} predicted by the quotient torsion.
    DihedralCount {
        #[command(flatten)]
        spec: SpecInput,
        #[arg(long, default_value_t = 3)]
        n: u64,
    },
    /// The complement of (e0, f) in the odd unimodular lattice of rank 10.
    VerifyLemmaE8,
}

#[derive(Subcommand, Debug)]
enum TrigonalCmd {
    /// Eliminate the y^2 term.
    Reduce(CurveInput),
    /// Singular fibers with Kodaira types and Euler numbers.
    Fibers(CurveInput),
    /// Singular points with ADE types.
    Singularities(CurveInput),
    Genus(CurveInput),
    /// Singularities of the sextic for a chosen fiber.
    Sextic {
        #[command(flatten)]
        curve: CurveInput,
        /// `1/2`, `inf` or `{"minpoly": [...]}`.
        #[arg(long, allow_hyphen_values = true)]
        fiber: String,
    },
    /// Associated cubic at a triple point on the fiber x = x0.
    Cubic {
        #[command(flatten)]
        curve: CurveInput,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        x0: String,
    },
    /// Associated quartic at a double point on the fiber x = x0.
    Quartic {
        #[command(flatten)]
        curve: CurveInput,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        x0: String,
    },
}

#[derive(Subcommand, Debug)]
enum TorusCmd {
    /// All torus structures of a curve.
    Detect(CurveInput),
    /// Check a structure `{"b": [...], "l": [...], "e": [...], "minpoly": [...]}`.
    Verify {
        #[command(flatten)]
        curve: CurveInput,
        #[arg(long)]
        structure: String,
    },
    /// Torus structures predicted by the 3-torsion of the quotient.
    Expected(SpecInput),
    /// Inner and outer singular points for each detected structure.
    InnerOuter(CurveInput),
}

#[derive(Args, Debug)]
struct FiberArg {
    /// `A0**`, `A1*` or `A2*`.
    fiber: String,
    /// Use the automorphism convention x -> w^-1 x w.
    #[arg(long)]
    reversed: bool,
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    /// Braid monodromy of a singular fiber on the free group of rank 3.
    Monodromy(FiberArg),
    /// Local fundamental group presentation of a singular fiber.
    Present(FiberArg),
    /// Abelianization as (rank, torsion).
    Abelianize(PresentationInput),
    /// Homomorphisms into a named finite group.
    Homs {
        #[command(flatten)]
        presentation: PresentationInput,
        /// Catalogue name, `Cn`, `Dn` (order n), `Sn`, `An`, `Cm:Ck(u)`, or products `GxH`.
        #[arg(long)]
        group: String,
    },
    /// Hom counts into every catalogue group of bounded order.
    Spectrum {
        #[command(flatten)]
        presentation: PresentationInput,
        #[arg(long, default_value_t = CATALOGUE_MAX_ORDER)]
        bound: usize,
    },
    /// Alexander polynomial through an augmentation onto Z.
    Alexander {
        #[command(flatten)]
        presentation: PresentationInput,
        /// Images of the generators, comma separated; all ones by default.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        aug: Option<Vec<i64>>,
    },
    /// Isomorphism test for two named finite groups.
    Iso { left: String, right: String },
}

struct Env<'a> {
    stdin: &'a mut dyn Read,
    budget: Budget,
    diagnostics: Vec<String>,
}

impl Env<'_> {
    fn input(&mut self, flag: &Option<String>, value: &Option<String>) -> Result<String, Failure> {
        if let Some(v) = flag.as_ref().or(value.as_ref()) {
            return Ok(v.clone());
        }
        let mut s = String::new();
        self.stdin.read_to_string(&mut s).map_err(|e| Failure::new("io", e.to_string()))?;
        if s.trim().is_empty() {
            return Err(Failure::new("missing_input", "no input given"));
        }
        Ok(s.trim().to_string())
    }

    fn curve(&mut self, c: &CurveInput) -> Result<TrigonalCurve, Failure> {
        let text = self.input(&c.flag, &c.value)?;
        Ok(TrigonalCurve::parse_any(&text)?)
    }

    fn spec(&mut self, s: &SpecInput) -> Result<RootSystemSpec, Failure> {
        let text = self.input(&s.flag, &s.value)?;
        text.parse().map_err(|e| Failure::new("parse", format!("{e}")))
    }

    fn presentation(&mut self, p: &PresentationInput) -> Result<Presentation, Failure> {
        let text = self.input(&p.flag, &p.value)?;
        if text.trim_start().starts_with('{') {
            let j = serde_json::from_str(&text).map_err(|e| Failure::new("parse", e.to_string()))?;
            Ok(Presentation::from_json(&j)?)
        } else {
            Ok(Presentation::parse(&text)?)
        }
    }
}

/// Budget from [`BUDGET_ENV`], falling back to [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> Result<u64, String> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{BUDGET_ENV} must be a nonnegative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { code: 0, stdout: text, stderr: String::new(), result: None };
            }
            let r = CommandResult::error("usage", text.lines().next().unwrap_or("").to_string());
            return emit(r, 2, false, text);
        }
    };
    let limit = match budget_from_env() {
        Ok(b) => b,
        Err(m) => return emit(CommandResult::error("usage", m.clone()), 2, cli.pretty, m),
    };
    let mut env = Env { stdin, budget: Budget::new(limit), diagnostics: Vec::new() };
    match dispatch(&cli.area, &mut env) {
        Ok(payload) => {
            let mut r = CommandResult::ok(payload);
            r.diagnostics = env.diagnostics;
            emit(r, 0, cli.pretty, String::new())
        }
        Err(f) => {
            let mut r = CommandResult::error(f.reason, f.message.clone());
            r.diagnostics = env.diagnostics;
            emit(r, 1, cli.pretty, format!("error: {}\n", f.message))
        }
    }
}

fn emit(r: CommandResult, code: i32, pretty: bool, stderr: String) -> Outcome {
    let mut stdout =
        if pretty { serde_json::to_string_pretty(&r) } else { serde_json::to_string(&r) }.expect("results serialize");
    stdout.push('\n');
    Outcome { code, stdout, stderr, result: Some(r) }
}

fn to_value<T: Serialize>(v: T) -> Value {
    serde_json::to_value(v).expect("payload serializes")
}

fn dispatch(area: &Area, env: &mut Env) -> Result<Value, Failure> {
    match area {
        Area::Lattice(c) => lattice(c, env),
        Area::Trigonal(c) => trigonal(c, env),
        Area::Torus(c) => torus(c, env),
        Area::Group(c) => group(c, env),
        Area::Report => Ok(report_tables(&mut env.budget)?),
    }
}

fn int_rows(text: &str) -> Result<Vec<Vec<i64>>, Failure> {
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(text).map_err(|e| Failure::new("parse", format!("expected JSON integer rows: {e}")))?;
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Failure::new("parse", "rows have different lengths"));
    }
    Ok(rows)
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn lattice(c: &LatticeCmd, env: &mut Env) -> Result<Value, Failure> {
    match c {
        LatticeCmd::Snf(i) => {
            let rows = int_rows(&env.input(&i.flag, &i.value)?)?;
            if rows.is_empty() {
                return Err(Failure::new("parse", "empty matrix"));
            }
            let s = smith_normal_form(&IntMatrix::from_rows(&rows));
            Ok(json!({
                "diagonal": strings(&s.diagonal()),
                "rank": s.rank(),
                "torsion": strings(&s.torsion_factors()),
            }))
        }
        LatticeCmd::Discr(i) => {
            let rows = int_rows(&env.input(&i.flag, &i.value)?)?;
            let l = GramLattice::from_rows(&rows).map_err(|e| Failure::new("invalid_lattice", e.to_string()))?;
            let d = discriminant_group(&l).map_err(|e| Failure::new("invalid_lattice", e.to_string()))?;
            Ok(
                json!({ "determinant": l.determinant().to_string(), "group": d.to_string(), "factors": d.to_json().factors }),
            )
        }
        LatticeCmd::Embed(s) => {
            let spec = env.spec(s)?;
            Ok(match find_embedding(&spec) {
                Some(w) => json!({
                    "spec": spec.to_string(),
                    "embeds": true,
                    "verified": w.verify(),
                    "torsion": w.quotient_torsion().to_json().factors,
                    "witness": to_value(w.to_json()),
                }),
                None => json!({ "spec": spec.to_string(), "embeds": false }),
            })
        }
        LatticeCmd::ClassifyOddTorsion => {
            let rows = classify_odd_torsion(&mut env.budget)?;
            Ok(to_value(rows.iter().map(|r| r.to_json()).collect::<Vec<_>>()))
        }
        LatticeCmd::ClassifyPred { has, odd } => {
            let rows = classify_by_predicate(
                |t| has.iter().all(|&p| t.has_p_torsion(p)) && (!odd || (!t.is_trivial() && t.is_odd())),
                &mut env.budget,
            )?;
            Ok(to_value(rows.iter().map(|r| r.to_json()).collect::<Vec<_>>()))
        }
        LatticeCmd::DihedralCount { spec, n } => {
            let spec = env.spec(spec)?;
            let k = dihedral_quotient_count(&spec, *n, &mut env.budget)?;
            Ok(json!({ "spec": spec.to_string(), "n": n, "count": k }))
        }
        LatticeCmd::VerifyLemmaE8 => {
            let r = verify_lemma_e8();
            let mut v = to_value(&r);
            v["certified"] = json!(r.certified());
            Ok(v)
        }
    }
}

fn rational_arg(s: &str) -> Result<Q, Failure> {
    parse_q(s).ok_or_else(|| Failure::new("parse", format!("not a rational number: {s:?}")))
}

fn trigonal(c: &TrigonalCmd, env: &mut Env) -> Result<Value, Failure> {
    match c {
        TrigonalCmd::Reduce(i) => Ok(to_value(env.curve(i)?.reduce().to_json())),
        TrigonalCmd::Fibers(i) => {
            let m = env.curve(i)?.reduce();
            let fibers = singular_fibers(&m);
            let total: u64 = fibers.iter().map(|f| f.euler as u64 * f.orbit_size() as u64).sum();
            let sigma = match sigma_from_fibers(&m) {
                Ok(s) => Value::String(s.to_string()),
                Err(e) => {
                    env.diagnostics.push(e.to_string());
                    Value::Null
                }
            };
            Ok(json!({
                "fibers": fibers.iter().map(|f| f.to_json()).collect::<Vec<_>>(),
                "euler_total": total,
                "sigma": sigma,
            }))
        }
        TrigonalCmd::Singularities(i) => {
            let pts = classify_singular_points(&env.curve(i)?);
            Ok(Value::Array(pts.iter().map(|p| p.to_json()).collect()))
        }
        TrigonalCmd::Genus(i) => Ok(json!({ "genus": genus(&env.curve(i)?)? })),
        TrigonalCmd::Sextic { curve, fiber } => {
            let m = env.curve(curve)?.reduce();
            let f0 = FiberChoice::parse(fiber)?;
            Ok(sextic_singularities(&m, &f0)?.to_json())
        }
        TrigonalCmd::Cubic { curve, x0 } => {
            let b = env.curve(curve)?;
            Ok(associated_cubic(&b, &rational_arg(x0)?)?.to_json())
        }
        TrigonalCmd::Quartic { curve, x0 } => {
            let b = env.curve(curve)?;
            Ok(associated_quartic(&b, &rational_arg(x0)?)?.to_json())
        }
    }
}

/// A polynomial in `var` with rational coefficients.
fn parse_univariate(text: &str, var: char) -> Result<QPoly, Failure> {
    let bad = |m: String| Failure::new("parse", m);
    if text.contains(['x', 'y']) && var != 'x' {
        return Err(bad(format!("{text:?}: only {var} may appear")));
    }
    let f = parse_bipoly(&text.replace(var, "x")).map_err(|e| bad(e.to_string()))?;
    let mut ys = f.y_coeffs();
    match ys.len() {
        0 => Ok(QPoly::zero(&())),
        1 => Ok(ys.remove(0)),
        _ => Err(bad(format!("{text:?}: only {var} may appear"))),
    }
}

fn json_str(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

/// `{"b": [...], "l": [...], "e": [...], "minpoly": [...]}`: coefficient
/// lists in ascending degree of x, each entry a polynomial in `t`.
pub fn parse_structure(text: &str) -> Result<TorusStructure, Failure> {
    let bad = |m: &str| Failure::new("parse", m.to_string());
    let v: Value = serde_json::from_str(text).map_err(|e| Failure::new("parse", e.to_string()))?;
    let field = match v.get("minpoly") {
        None | Some(Value::Null) => rational_field(),
        Some(Value::Array(cs)) => {
            let qs = cs
                .iter()
                .map(|c| json_str(c).and_then(|s| parse_q(&s)))
                .collect::<Option<Vec<Q>>>()
                .ok_or_else(|| bad("minpoly coefficients must be rationals"))?;
            let m = QPoly::new(qs, ());
            if m.degree().unwrap_or(0) < 1 {
                return Err(bad("minpoly must be nonconstant"));
            }
            let f = crate::arith::factor::factor_rational(&m);
            if f.len() != 1 || f[0].1 != 1 {
                return Err(bad("minpoly must be irreducible"));
            }
            NumberField::new(&m)
        }
        _ => return Err(bad("minpoly must be an array")),
    };
    let poly = |key: &str| -> Result<Poly<Nf>, Failure> {
        let arr = match v.get(key) {
            None => return Ok(Poly::new(Vec::new(), field.clone())),
            Some(Value::Array(a)) => a,
            _ => return Err(bad("coefficient lists must be arrays")),
        };
        let mut cs = Vec::new();
        for c in arr {
            let s = json_str(c).ok_or_else(|| bad("coefficients must be strings"))?;
            cs.push(Nf::from_poly(&field, &parse_univariate(&s, 't')?));
        }
        Ok(Poly::new(cs, field.clone()))
    };
    let (b, l, e) = (poly("b")?, poly("l")?, poly("e")?);
    let s = TorusStructure { field: field.clone(), b, l, e, orbit_size: field.degree() };
    s.check_degrees().map_err(|e| Failure::new("invalid_structure", e.to_string()))?;
    Ok(s)
}

fn torus(c: &TorusCmd, env: &mut Env) -> Result<Value, Failure> {
    match c {
        TorusCmd::Detect(i) => Ok(detect_torus_curve(&env.curve(i)?).to_json()),
        TorusCmd::Verify { curve, structure } => {
            let b = env.curve(curve)?;
            let s = parse_structure(structure)?;
            let ok = verify_torus(&b, &s).map_err(|e| Failure::new("invalid_structure", e.to_string()))?;
            Ok(json!({ "holds": ok }))
        }
        TorusCmd::Expected(s) => {
            let spec = env.spec(s)?;
            let k = expected_torus_count(&spec, &mut env.budget)?;
            Ok(json!({ "spec": spec.to_string(), "count": k }))
        }
        TorusCmd::InnerOuter(i) => {
            let b = env.curve(i)?;
            let report = detect_torus_curve(&b);
            let rows: Vec<Value> = report
                .structures
                .iter()
                .map(|s| {
                    let split = inner_outer_split(&b, s);
                    json!({
                        "structure": s.to_json(),
                        "points": split.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(json!({ "count": report.count_over_closure, "structures": rows }))
        }
    }
}

fn fiber_type(s: &str) -> Result<FiberType, Failure> {
    s.parse::<FiberType>().map_err(Failure::from)
}

fn convention(reversed: bool) -> Convention {
    if reversed {
        Convention::Reversed
    } else {
        Convention::Literal
    }
}

fn number_after(s: &str, prefix: char) -> Option<usize> {
    s.strip_prefix(prefix).and_then(|r| r.parse().ok())
}

/// Resolves a group name: catalogue entries first, then `Cn`, `Dn` (order
/// `n`), `Sn`, `An`, `Cm:Ck(u)`, and direct products joined by `x`.
pub fn resolve_group(name: &str) -> Result<FiniteGroup, Failure> {
    let name = name.trim();
    let unknown = || Failure::new("unknown_group", format!("unknown group {name:?}"));
    if let Ok(cat) = catalogue(CATALOGUE_MAX_ORDER) {
        if let Some(g) = cat.into_iter().find(|g| g.name() == name) {
            return Ok(g);
        }
    }
    if name.contains('x') {
        let mut parts = name.split('x');
        let mut g = resolve_group(parts.next().ok_or_else(unknown)?)?;
        for p in parts {
            g = direct_product(&g, &resolve_group(p)?);
        }
        return Ok(g.with_name(name));
    }
    if let Some((left, right)) = name.split_once(':') {
        let m = number_after(left, 'C').ok_or_else(unknown)?;
        let (k, u) = right.strip_suffix(')').and_then(|r| r.split_once('(')).ok_or_else(unknown)?;
        let k = number_after(k, 'C').ok_or_else(unknown)?;
        let u: i64 = u.parse().map_err(|_| unknown())?;
        return Ok(semidirect_cyclic(m, k, u)?.with_name(name));
    }
    let g = if let Some(n) = number_after(name, 'C') {
        (n >= 1).then(|| cyclic(n))
    } else if let Some(n) = number_after(name, 'D') {
        (n >= 2 && n % 2 == 0).then(|| dihedral(n / 2))
    } else if let Some(n) = number_after(name, 'S') {
        (1..=5).contains(&n).then(|| symmetric(n))
    } else if let Some(n) = number_after(name, 'A') {
        (1..=5).contains(&n).then(|| alternating(n))
    } else {
        None
    };
    g.map(|g| g.with_name(name)).ok_or_else(unknown)
}

fn group(c: &GroupCmd, env: &mut Env) -> Result<Value, Failure> {
    match c {
        GroupCmd::Monodromy(f) => {
            let t = fiber_type(&f.fiber)?;
            let m = monodromy(t, convention(f.reversed));
            let names = groups::default_names(m.rank());
            Ok(json!({
                "fiber": t.name(),
                "convention": if f.reversed { "reversed" } else { "literal" },
                "images": m.format(&names),
                "automorphism": m.is_surjective(),
            }))
        }
        GroupCmd::Present(f) => {
            let t = fiber_type(&f.fiber)?;
            let p = local_presentation(t, convention(f.reversed));
            let (rank, torsion) = p.abelianization();
            Ok(json!({
                "fiber": t.name(),
                "presentation": p.to_string(),
                "json": to_value(p.to_json()),
                "abelianization": { "rank": rank, "torsion": torsion.to_json().factors },
            }))
        }
        GroupCmd::Abelianize(i) => {
            let p = env.presentation(i)?;
            let (rank, torsion) = p.abelianization();
            Ok(
                json!({ "rank": rank, "torsion": torsion.to_json().factors, "group": abelian_text(rank, &torsion.to_string()) }),
            )
        }
        GroupCmd::Homs { presentation, group } => {
            let p = env.presentation(presentation)?;
            let g = resolve_group(group)?;
            Ok(json!({
                "group": g.name(),
                "order": g.order(),
                "homs": count_homs(&p, &g)?,
                "epis": count_epis(&p, &g)?,
            }))
        }
        GroupCmd::Spectrum { presentation, bound } => {
            let p = env.presentation(presentation)?;
            let rows = hom_count_spectrum(&p, *bound)?;
            Ok(Value::Array(rows.into_iter().map(|(g, k)| json!({ "group": g, "homs": k })).collect()))
        }
        GroupCmd::Alexander { presentation, aug } => {
            let p = env.presentation(presentation)?;
            let aug = aug.clone().unwrap_or_else(|| vec![1; p.ngens()]);
            let a = p.fox_alexander(&aug)?;
            Ok(json!({ "polynomial": a.to_string(), "coefficients": to_value(&a) }))
        }
        GroupCmd::Iso { left, right } => {
            let (g, h) = (resolve_group(left)?, resolve_group(right)?);
            Ok(json!({
                "left": { "name": g.name(), "order": g.order() },
                "right": { "name": h.name(), "order": h.order() },
                "isomorphic": groups::is_isomorphic_small(&g, &h)?,
            }))
        }
    }
}

fn abelian_text(rank: usize, torsion: &str) -> String {
    let free = match rank {
        0 => None,
        1 => Some("Z".to_string()),
        r => Some(format!("Z^{r}")),
    };
    match (free, torsion) {
        (None, t) => t.to_string(),
        (Some(f), "0") => f,
        (Some(f), t) => format!("{f} + {t}"),
    }
}
