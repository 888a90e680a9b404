//! Trigonal curves `y^3 + a(x) y^2 + b(x) y + c(x) = 0` in the ruled
//! surface with an exceptional section of square -2: reduction, singular
//! fibers, singular points, and the plane curves obtained by elementary
//! transformations.

mod fibers;
mod parse;
mod points;
mod sextic;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::bipoly::BiPoly;
use crate::arith::poly::QPoly;
use crate::arith::rational::{format_q, parse_q};
use crate::arith::{q, Field, Q};

pub use fibers::{fiber_at, sigma_from_fibers, singular_fibers, FiberLocation, FiberReport, Kodaira, Orders};
pub use parse::{format_bipoly, format_poly, parse_bipoly, ParseError};
pub use points::{
    classify_at_origin, classify_singular_points, genus, local_intersection_index, LocalType, PlaneCurve, PlanePoint,
    PlaneSingularPoint, PointType, SingularPointReport,
};
pub use sextic::{
    associated_cubic, associated_quartic, distinguished_label, sextic_singularities, FiberChoice, QuarticReport,
    SexticSpec,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TrigonalError {
    #[error("deg {which} = {degree} exceeds {bound}")]
    Degree { which: char, degree: usize, bound: usize },
    #[error("discriminant vanishes identically (repeated component)")]
    Degenerate,
    #[error("not of the form y^3 + a y^2 + b y + c: {0}")]
    NotTrigonal(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("bad curve JSON: {0}")]
    Json(String),
    #[error("non-minimal fiber at {0}")]
    NonMinimal(String),
    #[error("non-simple singular point {0}")]
    NonSimple(String),
    #[error("no triple point on the fiber x = {0}")]
    NotTriplePoint(String),
    #[error("no double point (or a triple point) on the fiber x = {0}")]
    NotDoublePoint(String),
    #[error("invalid fiber choice: {0}")]
    InvalidFiber(String),
    #[error("curves share a component through the point")]
    CommonComponent,
}

/// `F(x, y) = y^3 + a y^2 + b y + c` with `deg a <= 2`, `deg b <= 4`,
/// `deg c <= 6`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigonalCurve {
    a: QPoly,
    b: QPoly,
    c: QPoly,
}

/// `y^3 + P y + Q` with `deg P <= 4`, `deg Q <= 6`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedModel {
    p: QPoly,
    q: QPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    pub a: Vec<Value>,
    pub b: Vec<Value>,
    pub c: Vec<Value>,
}

fn check_degree(which: char, p: &QPoly, bound: usize) -> Result<(), TrigonalError> {
    match p.degree() {
        Some(d) if d > bound => Err(TrigonalError::Degree { which, degree: d, bound }),
        _ => Ok(()),
    }
}

/// `x^w f(1/x)`: the chart at infinity for a coefficient of weight `w`.
pub(crate) fn reverse(f: &QPoly, w: usize) -> QPoly {
    let mut v = vec![q(0, 1); w + 1];
    for (k, c) in f.coeffs().iter().enumerate() {
        v[w - k] = c.clone();
    }
    QPoly::new(v, ())
}

fn json_coeffs(v: &[Value]) -> Result<QPoly, TrigonalError> {
    let mut out = Vec::with_capacity(v.len());
    for c in v {
        let parsed = match c {
            Value::Number(n) => n.as_i64().map(|i| q(i, 1)),
            Value::String(s) => parse_q(s),
            _ => None,
        };
        out.push(parsed.ok_or_else(|| TrigonalError::Json(format!("coefficient {c}")))?);
    }
    Ok(QPoly::new(out, ()))
}

fn coeffs_json(p: &QPoly) -> Vec<Value> {
    p.coeffs().iter().map(|c| Value::String(format_q(c))).collect()
}

impl TrigonalCurve {
    pub fn new(a: QPoly, b: QPoly, c: QPoly) -> Result<Self, TrigonalError> {
        check_degree('a', &a, 2)?;
        check_degree('b', &b, 4)?;
        check_degree('c', &c, 6)?;
        let curve = TrigonalCurve { a, b, c };
        if curve.reduce_unchecked().delta().is_zero() {
            return Err(TrigonalError::Degenerate);
        }
        Ok(curve)
    }

    pub fn a(&self) -> &QPoly {
        &self.a
    }

    pub fn b(&self) -> &QPoly {
        &self.b
    }

    pub fn c(&self) -> &QPoly {
        &self.c
    }

    /// From a polynomial whose y-degree is 3 with constant leading
    /// coefficient.
    pub fn from_bipoly(f: &BiPoly<Q>) -> Result<Self, TrigonalError> {
        if f.y_degree() != Some(3) {
            return Err(TrigonalError::NotTrigonal("y-degree must be 3".into()));
        }
        let cols = f.y_coeffs();
        if cols[3].degree() != Some(0) {
            return Err(TrigonalError::NotTrigonal("coefficient of y^3 must be constant".into()));
        }
        let inv = Field::inv(&cols[3].coeff(0)).unwrap();
        Self::new(cols[2].scale(&inv), cols[1].scale(&inv), cols[0].scale(&inv))
    }

    pub fn parse(text: &str) -> Result<Self, TrigonalError> {
        Self::from_bipoly(&parse_bipoly(text)?)
    }

    pub fn from_json(j: &CurveJson) -> Result<Self, TrigonalError> {
        Self::new(json_coeffs(&j.a)?, json_coeffs(&j.b)?, json_coeffs(&j.c)?)
    }

    /// Reads either JSON coefficient arrays or a plain-text polynomial.
    pub fn parse_any(input: &str) -> Result<Self, TrigonalError> {
        let t = input.trim();
        if t.starts_with('{') {
            let j: CurveJson = serde_json::from_str(t).map_err(|e| TrigonalError::Json(e.to_string()))?;
            Self::from_json(&j)
        } else {
            Self::parse(t)
        }
    }

    pub fn to_json(&self) -> CurveJson {
        CurveJson { a: coeffs_json(&self.a), b: coeffs_json(&self.b), c: coeffs_json(&self.c) }
    }

    pub fn to_bipoly(&self) -> BiPoly<Q> {
        BiPoly::from_y_coeffs(&[self.c.clone(), self.b.clone(), self.a.clone(), QPoly::one(&())], &())
    }

    /// The same curve in the chart `x' = 1/x`, `y' = y / x^2`.
    pub fn at_infinity(&self) -> TrigonalCurve {
        TrigonalCurve { a: reverse(&self.a, 2), b: reverse(&self.b, 4), c: reverse(&self.c, 6) }
    }

    /// The curve after `x -> alpha x + beta`.
    pub fn reparametrize(&self, alpha: &Q, beta: &Q) -> TrigonalCurve {
        let s = QPoly::new(vec![beta.clone(), alpha.clone()], ());
        TrigonalCurve { a: self.a.compose(&s), b: self.b.compose(&s), c: self.c.compose(&s) }
    }

    /// The curve after `x -> (alpha s + beta) / (gamma s + delta)`, with
    /// coefficients of weight 2, 4, 6 cleared by powers of
    /// `gamma s + delta`.
    pub fn mobius(&self, m: [[Q; 2]; 2]) -> TrigonalCurve {
        let num = QPoly::new(vec![m[0][1].clone(), m[0][0].clone()], ());
        let den = QPoly::new(vec![m[1][1].clone(), m[1][0].clone()], ());
        let tr = |f: &QPoly, w: usize| {
            let mut acc = QPoly::zero(&());
            for (k, c) in f.coeffs().iter().enumerate() {
                acc = &acc + &(&num.pow(k as u32) * &den.pow((w - k) as u32)).scale(c);
            }
            acc
        };
        TrigonalCurve { a: tr(&self.a, 2), b: tr(&self.b, 4), c: tr(&self.c, 6) }
    }

    fn reduce_unchecked(&self) -> ReducedModel {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let a2 = a * a;
        let p = b - &a2.scale(&q(1, 3));
        let a3 = &a2 * a;
        let qq = &(&a3.scale(&q(2, 1)) - &(a * b).scale(&q(9, 1))) + &c.scale(&q(27, 1));
        ReducedModel { p, q: qq.scale(&q(1, 27)) }
    }

    /// Removes the `y^2` term by `y -> y - a/3`.
    pub fn reduce(&self) -> ReducedModel {
        self.reduce_unchecked()
    }

    pub fn to_text(&self) -> String {
        format_bipoly(&self.to_bipoly())
    }
}

impl std::fmt::Display for TrigonalCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn reduce(curve: &TrigonalCurve) -> ReducedModel {
    curve.reduce()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedJson {
    pub p: Vec<Value>,
    pub q: Vec<Value>,
    pub delta: Vec<Value>,
}

impl ReducedModel {
    pub fn new(p: QPoly, q: QPoly) -> Result<Self, TrigonalError> {
        check_degree('P', &p, 4)?;
        check_degree('Q', &q, 6)?;
        let m = ReducedModel { p, q };
        if m.delta().is_zero() {
            return Err(TrigonalError::Degenerate);
        }
        Ok(m)
    }

    pub fn p(&self) -> &QPoly {
        &self.p
    }

    pub fn q(&self) -> &QPoly {
        &self.q
    }

    /// `-4 P^3 - 27 Q^2`.
    pub fn delta(&self) -> QPoly {
        let p3 = self.p.pow(3).scale(&q(-4, 1));
        let q2 = self.q.pow(2).scale(&q(27, 1));
        &p3 - &q2
    }

    pub fn at_infinity(&self) -> ReducedModel {
        ReducedModel { p: reverse(&self.p, 4), q: reverse(&self.q, 6) }
    }

    pub fn curve(&self) -> TrigonalCurve {
        TrigonalCurve { a: QPoly::zero(&()), b: self.p.clone(), c: self.q.clone() }
    }

    pub fn to_json(&self) -> ReducedJson {
        ReducedJson { p: coeffs_json(&self.p), q: coeffs_json(&self.q), delta: coeffs_json(&self.delta()) }
    }
}
