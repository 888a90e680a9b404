//! Singularities of the sextic obtained from a trigonal curve and a
//! chosen fiber, and the associated plane cubic and quartic.

use serde_json::{json, Value};

use super::fibers::{fiber_at, sigma_from_fibers, singular_fibers, FiberLocation, FiberReport, Kodaira};
use super::points::{LocalType, PlaneCurve, PlanePoint, PlaneSingularPoint};
use super::{ReducedModel, TrigonalCurve, TrigonalError};
use crate::arith::bipoly::BiPoly;
use crate::arith::factor::factor_rational;
use crate::arith::numfield::{Nf, NumberField};
use crate::arith::poly::QPoly;
use crate::arith::rational::{format_q, parse_q};
use crate::arith::{Field, Q};
use crate::roots::RootSystemSpec;

/// A fiber: `{"x": "1/2"}`, `{"x": "inf"}` or `{"x": {"minpoly": [...]}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberChoice {
    pub location: FiberLocation,
}

impl FiberChoice {
    pub fn rational(x: Q) -> Self {
        FiberChoice { location: FiberLocation::Rational(x) }
    }

    pub fn infinity() -> Self {
        FiberChoice { location: FiberLocation::Infinity }
    }

    /// One fiber over a root of an irreducible polynomial.
    pub fn orbit(minpoly: &QPoly) -> Result<Self, TrigonalError> {
        let f = factor_rational(minpoly);
        if f.len() != 1 || f[0].1 != 1 {
            return Err(TrigonalError::InvalidFiber("minimal polynomial must be irreducible".into()));
        }
        let g = f[0].0.clone();
        Ok(if g.degree() == Some(1) {
            Self::rational(-g.coeff(0))
        } else {
            FiberChoice { location: FiberLocation::Orbit(g) }
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, TrigonalError> {
        let bad = |m: &str| TrigonalError::InvalidFiber(m.to_string());
        let x = v.get("x").unwrap_or(v);
        match x {
            Value::String(s) if s == "inf" => Ok(Self::infinity()),
            Value::String(s) => parse_q(s).map(Self::rational).ok_or_else(|| bad("rational expected")),
            Value::Number(n) => {
                n.as_i64().map(|i| Self::rational(Q::from_integer(i.into()))).ok_or_else(|| bad("integer"))
            }
            Value::Object(o) => {
                let arr = o.get("minpoly").and_then(|m| m.as_array()).ok_or_else(|| bad("minpoly array expected"))?;
                let mut cs = Vec::new();
                for c in arr {
                    let q = match c {
                        Value::Number(n) => n.as_i64().map(|i| Q::from_integer(i.into())),
                        Value::String(s) => parse_q(s),
                        _ => None,
                    };
                    cs.push(q.ok_or_else(|| bad("minpoly coefficient"))?);
                }
                Self::orbit(&QPoly::new(cs, ()))
            }
            _ => Err(bad("unrecognized fiber")),
        }
    }

    /// Accepts JSON, `inf`, or a rational number.
    pub fn parse(text: &str) -> Result<Self, TrigonalError> {
        let t = text.trim();
        if t.starts_with('{') {
            let v: Value = serde_json::from_str(t).map_err(|e| TrigonalError::InvalidFiber(e.to_string()))?;
            return Self::from_json(&v);
        }
        Self::from_json(&Value::String(t.to_string()))
    }
}

/// Singularities of the sextic: the distinguished non-simple point coming
/// from the chosen fiber plus the singular points of the trigonal curve
/// away from it. `non_simple` holds the `J10` point of a trigonal curve
/// with a non-minimal fiber, when `f0` is elsewhere.
#[derive(Debug, Clone, PartialEq)]
pub struct SexticSpec {
    pub sigma_b: RootSystemSpec,
    pub f0: FiberReport,
    pub distinguished: String,
    pub non_simple: Vec<String>,
    pub remaining: RootSystemSpec,
}

impl SexticSpec {
    pub fn sigma_c(&self) -> Vec<String> {
        std::iter::once(self.distinguished.clone())
            .chain(self.non_simple.iter().cloned())
            .chain(self.remaining.summands().iter().map(|s| s.to_string()))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "sigma_B": self.sigma_b.to_string(),
            "f0": self.f0.to_json(),
            "sigma_C": self.sigma_c(),
            "sigma_C_text": self.to_string(),
        })
    }
}

impl std::fmt::Display for SexticSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut head = vec![self.distinguished.clone()];
        head.extend(self.non_simple.iter().cloned());
        if head.len() > 1 && head.iter().all(|h| h == &head[0]) {
            write!(f, "{}{}", head.len(), head[0])?;
        } else {
            f.write_str(&head.join("+"))?;
        }
        if !self.remaining.is_empty() {
            write!(f, "+{}", self.remaining)?;
        }
        Ok(())
    }
}

/// Label of the sextic's singular point produced by a fiber of the given
/// type.
pub fn distinguished_label(k: Kodaira) -> Option<String> {
    Some(match k {
        Kodaira::I(0) => "J_{2,0}".into(),
        Kodaira::I(n) => format!("J_{{2,{n}}}"),
        Kodaira::II => "E12".into(),
        Kodaira::III => "E13".into(),
        Kodaira::IV => "E14".into(),
        Kodaira::IStar(n) => format!("J_{{3,{n}}}"),
        Kodaira::IVStar => "E18".into(),
        Kodaira::IIIStar => "E19".into(),
        Kodaira::IIStar => "E20".into(),
        Kodaira::NonMinimal => return None,
    })
}

/// With a non-minimal fiber (a `J10` point of the trigonal curve) every
/// other fiber is smooth; the sextic is `J_{4,0}` when `f0` is the
/// non-minimal fiber and `2J10` otherwise.
pub fn sextic_singularities(m: &ReducedModel, f0: &FiberChoice) -> Result<SexticSpec, TrigonalError> {
    let fiber = fiber_at(m, &f0.location);
    if let Some(j) = singular_fibers(m).into_iter().find(|f| f.kodaira == Kodaira::NonMinimal) {
        let (distinguished, non_simple) = if j.location == fiber.location {
            ("J_{4,0}".to_string(), Vec::new())
        } else {
            ("J10".to_string(), vec!["J10".to_string()])
        };
        let empty = RootSystemSpec::empty();
        return Ok(SexticSpec { sigma_b: empty.clone(), f0: fiber, distinguished, non_simple, remaining: empty });
    }
    let distinguished =
        distinguished_label(fiber.kodaira).ok_or_else(|| TrigonalError::NonMinimal(fiber.location.to_string()))?;
    let sigma_b = sigma_from_fibers(m)?;
    let remaining = match fiber.kodaira.ade() {
        Some(s) => sigma_b.without(s).expect("the fiber's point is among the singularities"),
        None => sigma_b.clone(),
    };
    Ok(SexticSpec { sigma_b, f0: fiber, distinguished, non_simple: Vec::new(), remaining })
}

/// `sum c_ij x^(i+j-k) y^j` for a polynomial of order at least `k` at the
/// origin: the transform `F(x, x y) / x^k`.
fn blow_down(f: &BiPoly<Q>, k: u32) -> BiPoly<Q> {
    let mut out = BiPoly::zero(&());
    for (&(i, j), c) in f.terms() {
        out.add_term(i + j - k, j, c.clone());
    }
    out
}

/// The plane cubic `F(x, x y') / x^3` after moving the triple point on the
/// fiber `x = x0` to the origin.
pub fn associated_cubic(curve: &TrigonalCurve, x0: &Q) -> Result<PlaneCurve, TrigonalError> {
    let y0 = -curve.a().eval(x0) / Q::from_integer(3.into());
    let t = curve.to_bipoly().translate(x0, &y0);
    if t.order() != Some(3) {
        return Err(TrigonalError::NotTriplePoint(format_q(x0)));
    }
    Ok(PlaneCurve::new(3, blow_down(&t, 3)))
}

/// Intersection of the quartic with the line `x = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LineMeet {
    pub point: PlanePoint,
    pub multiplicity: usize,
    pub singular: Option<LocalType>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuarticReport {
    pub quartic: PlaneCurve,
    pub singular_points: Vec<PlaneSingularPoint>,
    /// The line `x = 0`, image of the fiber through the double point.
    pub line: Vec<LineMeet>,
}

impl QuarticReport {
    pub fn to_json(&self) -> Value {
        json!({
            "quartic": self.quartic.to_json(),
            "singular_points": self.singular_points.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
            "line_x0": self.line.iter().map(|m| json!({
                "point": m.point.to_json(),
                "multiplicity": m.multiplicity,
                "singular": m.singular.as_ref().map(|l| l.kind.to_string()),
            })).collect::<Vec<_>>(),
        })
    }
}

/// The plane quartic `F(x, x y') / x^2` after moving the double point on
/// the fiber `x = x0` to the origin, with the incidence of the line
/// `x = 0`.
pub fn associated_quartic(curve: &TrigonalCurve, x0: &Q) -> Result<QuarticReport, TrigonalError> {
    let f = curve.to_bipoly();
    let h = f.at_x(x0).gcd(&f.partial_x().at_x(x0)).gcd(&f.partial_y().at_x(x0)).squarefree_part();
    if h.degree() != Some(1) {
        return Err(TrigonalError::NotDoublePoint(format_q(x0)));
    }
    let y0 = -h.coeff(0) / h.coeff(1);
    let t = f.translate(x0, &y0);
    if t.order() != Some(2) {
        return Err(TrigonalError::NotDoublePoint(format_q(x0)));
    }
    let quartic = PlaneCurve::new(4, blow_down(&t, 2));
    let singular_points = quartic.singular_points()?;
    let mut line = Vec::new();
    let zero_q = Q::from_integer(0.into());
    let on_line = quartic.affine.at_x(&zero_q);
    for (g, mult) in factor_rational(&on_line) {
        let k = NumberField::new(&g);
        let theta = Nf::generator(&k);
        let zero = Nf::zero(&k);
        let one = Nf::one(&k);
        let point = PlanePoint::from_nf([&zero, &theta, &one]);
        line.push(LineMeet { singular: find_singular(&singular_points, &point), point, multiplicity: mult });
    }
    let at_inf = 4 - on_line.degree().unwrap_or(0);
    if at_inf > 0 {
        let k = NumberField::new(&QPoly::x(&()));
        let (zero, one) = (Nf::zero(&k), Nf::one(&k));
        let point = PlanePoint::from_nf([&zero, &one, &zero]);
        line.push(LineMeet { singular: find_singular(&singular_points, &point), point, multiplicity: at_inf });
    }
    Ok(QuarticReport { quartic, singular_points, line })
}

fn find_singular(pts: &[PlaneSingularPoint], p: &PlanePoint) -> Option<LocalType> {
    pts.iter().find(|s| s.point.same_orbit(p)).map(|s| s.local.clone())
}
