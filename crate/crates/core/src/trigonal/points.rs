//! Singular points: local classification at the origin, the singular
//! points of a trigonal curve (one per singular fiber at most), and the
//! singular points of a plane projective curve.

use serde_json::{json, Value};

use super::fibers::FiberLocation;
use super::{format_poly, TrigonalCurve, TrigonalError};
use crate::arith::bipoly::{intersection_at_origin, BiPoly, IntersectionError};
use crate::arith::factor::factor_rational;
use crate::arith::numfield::{Nf, NumberField};
use crate::arith::poly::{Poly, QPoly};
use crate::arith::{Field, Q};
use crate::roots::AdeSymbol;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum PointType {
    Simple(AdeSymbol),
    NonSimple(String),
}

impl std::fmt::Display for PointType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PointType::Simple(s) => write!(f, "{s}"),
            PointType::NonSimple(l) => f.write_str(l),
        }
    }
}

/// Analytic type of a singular point with its Milnor number (`None` for
/// a non-isolated singularity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalType {
    pub kind: PointType,
    pub milnor: Option<usize>,
}

impl LocalType {
    pub fn delta(&self) -> Option<usize> {
        match &self.kind {
            PointType::Simple(s) => Some(s.delta()),
            PointType::NonSimple(_) => None,
        }
    }

    pub fn branches(&self) -> Option<usize> {
        match &self.kind {
            PointType::Simple(s) => Some(s.branches()),
            PointType::NonSimple(_) => None,
        }
    }
}

/// Classifies `f = 0` at the origin, assumed to be a singular point.
/// Milnor number from the intersection of the partials; Hessian corank;
/// for corank 2 the factorization pattern of the cubic part.
pub fn classify_at_origin<F: Field>(f: &BiPoly<F>) -> LocalType {
    let mu = match intersection_at_origin(&f.partial_x(), &f.partial_y()) {
        Ok(m) => m,
        Err(IntersectionError::CommonComponent) => {
            return LocalType { kind: PointType::NonSimple("non-isolated".into()), milnor: None }
        }
    };
    let h = f.homogeneous_part(2);
    let four = F::from_q(f.ctx(), &Q::from_integer(4.into()));
    let disc2 = h[1].mul(&h[1]).sub(&four.mul(&h[0]).mul(&h[2]));
    let simple = |s| LocalType { kind: PointType::Simple(s), milnor: Some(mu) };
    if !disc2.is_zero() {
        return simple(AdeSymbol::a(1));
    }
    if h.iter().any(|c| !c.is_zero()) {
        return simple(AdeSymbol::a(mu as u32));
    }
    let c = f.homogeneous_part(3);
    if c.iter().all(|v| v.is_zero()) {
        return LocalType { kind: PointType::NonSimple(format!("corank 2, order >= 4, mu = {mu}")), milnor: Some(mu) };
    }
    let k = |n: i64| F::from_q(f.ctx(), &Q::from_integer(n.into()));
    let (a, b, cc, d) = (&c[0], &c[1], &c[2], &c[3]);
    // discriminant of a x^3 + b x^2 y + c x y^2 + d y^3
    let disc3 = b
        .mul(b)
        .mul(cc)
        .mul(cc)
        .sub(&k(4).mul(a).mul(&cc.pow(3)))
        .sub(&k(4).mul(&b.pow(3)).mul(d))
        .sub(&k(27).mul(a).mul(a).mul(d).mul(d))
        .add(&k(18).mul(a).mul(b).mul(cc).mul(d));
    if !disc3.is_zero() {
        return simple(AdeSymbol::d(4));
    }
    // the Hessian covariant vanishes exactly for a cube
    let hess =
        [b.mul(b).sub(&k(3).mul(a).mul(cc)), b.mul(cc).sub(&k(9).mul(a).mul(d)), cc.mul(cc).sub(&k(3).mul(b).mul(d))];
    if hess.iter().any(|v| !v.is_zero()) {
        return simple(AdeSymbol::d(mu as u32));
    }
    match mu {
        6..=8 => simple(AdeSymbol::e(mu as u32)),
        10 => LocalType { kind: PointType::NonSimple("J10".into()), milnor: Some(mu) },
        _ => LocalType { kind: PointType::NonSimple(format!("triple point, mu = {mu}")), milnor: Some(mu) },
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SingularPointReport {
    pub fiber: FiberLocation,
    /// y-coordinate as a polynomial in a root `t` of the fiber's minimal
    /// polynomial; at infinity, in the chart `y / x^2`.
    pub y: QPoly,
    pub local: LocalType,
}

impl SingularPointReport {
    pub fn orbit_size(&self) -> usize {
        self.fiber.orbit_size()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "location": { "x": self.fiber.to_json(), "y": format_poly(&self.y, 't') },
            "type": self.local.kind.to_string(),
            "milnor": self.local.milnor,
            "delta": self.local.delta(),
            "branches": self.local.branches(),
            "orbit_size": self.orbit_size(),
        })
    }
}

fn gcd_all<F: Field>(polys: &[Poly<F>]) -> Poly<F> {
    let mut g = Poly::zero(polys[0].ctx());
    for p in polys {
        g = g.gcd(p);
    }
    g
}

/// Singular points of `f` on the vertical line over the roots of `g`,
/// provided there is at most one per line. `Err(())` if some line carries
/// several.
fn points_over(f: &BiPoly<Q>, g: &QPoly) -> Result<Vec<(Nf, Nf, LocalType)>, ()> {
    let k = NumberField::new(g);
    let theta = Nf::generator(&k);
    let fk: BiPoly<Nf> = f.lift(&k);
    let h = gcd_all(&[fk.at_x(&theta), fk.partial_x().at_x(&theta), fk.partial_y().at_x(&theta)]);
    if h.is_zero() {
        return Err(());
    }
    let h = h.squarefree_part();
    match h.degree() {
        Some(0) => Ok(Vec::new()),
        Some(1) => {
            let y0 = h.coeff(0).neg().div(&h.coeff(1)).unwrap();
            let local = classify_at_origin(&fk.translate(&theta, &y0));
            Ok(vec![(theta, y0, local)])
        }
        _ => Err(()),
    }
}

/// Singular points of a trigonal curve, one report per Galois orbit,
/// ordered by fiber.
pub fn classify_singular_points(curve: &TrigonalCurve) -> Vec<SingularPointReport> {
    let m = curve.reduce();
    let f = curve.to_bipoly();
    let mut out = Vec::new();
    for (g, mult) in factor_rational(&m.delta()) {
        if mult < 2 {
            continue;
        }
        let loc = if g.degree() == Some(1) {
            FiberLocation::Rational(g.coeff(0).neg())
        } else {
            FiberLocation::Orbit(g.clone())
        };
        let pts = points_over(&f, &g).expect("a fiber carries at most one singular point");
        for (_, y0, local) in pts {
            out.push(SingularPointReport { fiber: loc.clone(), y: y0.value().clone(), local });
        }
    }
    if 12 - m.delta().degree().unwrap_or(0) >= 2 {
        let finf = curve.at_infinity().to_bipoly();
        let pts = points_over(&finf, &QPoly::x(&())).expect("a fiber carries at most one singular point");
        for (_, y0, local) in pts {
            out.push(SingularPointReport { fiber: FiberLocation::Infinity, y: y0.value().clone(), local });
        }
    }
    out.sort_by(|a, b| a.fiber.cmp(&b.fiber));
    out
}

/// `4 - sum of delta invariants`; a smooth curve has genus 4.
pub fn genus(curve: &TrigonalCurve) -> Result<i64, TrigonalError> {
    let mut g = 4i64;
    for p in classify_singular_points(curve) {
        match p.local.delta() {
            Some(d) => g -= (d * p.orbit_size()) as i64,
            None => {
                return Err(TrigonalError::NonSimple(format!(
                    "{} over x = {}: the genus drops by at least 6",
                    p.local.kind, p.fiber
                )))
            }
        }
    }
    Ok(g)
}

/// Local intersection index of `f = 0` and `g = 0` at a rational point.
pub fn local_intersection_index(f: &BiPoly<Q>, g: &BiPoly<Q>, point: (&Q, &Q)) -> Result<usize, TrigonalError> {
    intersection_at_origin(&f.translate(point.0, point.1), &g.translate(point.0, point.1))
        .map_err(|_| TrigonalError::CommonComponent)
}

/// Plane projective curve of the given degree, stored through its affine
/// part in the chart `z = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneCurve {
    pub degree: u32,
    pub affine: BiPoly<Q>,
}

/// Point of the projective plane over the field `Q[t]/(minpoly)`, with
/// homogeneous coordinates `[x : y : z]` given as polynomials in `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanePoint {
    pub minpoly: QPoly,
    pub coords: [QPoly; 3],
}

impl PlanePoint {
    fn new(k: &Nf, coords: [&Nf; 3]) -> PlanePoint {
        Self::from_nf(coords).with_field(k)
    }

    fn with_field(mut self, k: &Nf) -> PlanePoint {
        self.minpoly = k.ctx().modulus().clone();
        self
    }

    pub(crate) fn from_nf(coords: [&Nf; 3]) -> PlanePoint {
        let minpoly = coords[0].ctx().modulus().clone();
        PlanePoint { minpoly, coords: coords.map(|c| c.value().clone()) }
    }

    /// Index of the last nonzero coordinate and the coordinates divided
    /// by it.
    fn normalized(&self) -> (usize, [Nf; 3]) {
        let k = NumberField::new(&self.minpoly);
        let c = self.coords.clone().map(|p| Nf::from_poly(&k, &p));
        let i = (0..3).rev().find(|&i| !c[i].is_zero()).expect("a projective point");
        let inv = c[i].inv().unwrap();
        (i, c.map(|v| v.mul(&inv)))
    }

    /// Whether two points are Galois conjugate: the characteristic
    /// polynomials of `u + lambda v` over the affine coordinates agree for
    /// `orbit size + 1` values of lambda.
    pub fn same_orbit(&self, other: &PlanePoint) -> bool {
        let d = self.orbit_size();
        if d != other.orbit_size() {
            return false;
        }
        let (i, a) = self.normalized();
        let (j, b) = other.normalized();
        if i != j {
            return false;
        }
        let charpoly = |c: &[Nf; 3], lambda: i64| {
            let k = c[0].ctx();
            let u = c[(i + 1) % 3].add(&c[(i + 2) % 3].mul(&Nf::from_q(&k, &Q::from_integer(lambda.into()))));
            // Res_t(g(t), z - u(t)) in the variables (z, t)
            let mut g = BiPoly::zero(&());
            for (e, cf) in k.modulus().coeffs().iter().enumerate() {
                g.add_term(0, e as u32, cf.clone());
            }
            let mut h = BiPoly::monomial(Q::from_integer(1.into()), 1, 0, &());
            for (e, cf) in u.value().coeffs().iter().enumerate() {
                h.add_term(0, e as u32, -cf.clone());
            }
            g.resultant_y(&h).monic()
        };
        (0..=d as i64).all(|l| charpoly(&a, l) == charpoly(&b, l))
    }

    pub fn orbit_size(&self) -> usize {
        self.minpoly.degree().unwrap_or(1)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "minpoly": format_poly(&self.minpoly, 't'),
            "coords": self.coords.iter().map(|c| format_poly(c, 't')).collect::<Vec<_>>(),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlaneSingularPoint {
    pub point: PlanePoint,
    pub local: LocalType,
}

impl PlaneSingularPoint {
    pub fn to_json(&self) -> Value {
        json!({
            "point": self.point.to_json(),
            "type": self.local.kind.to_string(),
            "milnor": self.local.milnor,
            "delta": self.local.delta(),
            "branches": self.local.branches(),
            "orbit_size": self.point.orbit_size(),
        })
    }
}

const MAX_SHEAR: i64 = 24;

impl PlaneCurve {
    pub fn new(degree: u32, affine: BiPoly<Q>) -> PlaneCurve {
        debug_assert!(affine.total_degree().unwrap_or(0) <= degree);
        PlaneCurve { degree, affine }
    }

    /// Coefficient of `x^i y^j z^(d-i-j)`.
    pub fn coeff(&self, i: u32, j: u32) -> Q {
        self.affine.coeff(i, j)
    }

    /// Nonzero coefficients as `((i, j, k), c)` for `x^i y^j z^k`.
    pub fn homogeneous_terms(&self) -> Vec<((u32, u32, u32), Q)> {
        self.affine.terms().map(|(&(i, j), c)| ((i, j, self.degree - i - j), c.clone())).collect()
    }

    /// The form in the chart `y = 1`, in the variables `(x, z)`.
    fn chart_y(&self) -> BiPoly<Q> {
        let mut out = BiPoly::zero(&());
        for ((i, _, k), c) in self.homogeneous_terms() {
            out.add_term(i, k, c);
        }
        out
    }

    /// The form in the chart `x = 1`, in the variables `(y, z)`.
    fn chart_x(&self) -> BiPoly<Q> {
        let mut out = BiPoly::zero(&());
        for ((_, j, k), c) in self.homogeneous_terms() {
            out.add_term(j, k, c);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut terms = self.homogeneous_terms();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        json!({
            "degree": self.degree,
            "affine": super::format_bipoly(&self.affine),
            "terms": terms
                .iter()
                .map(|((i, j, k), c)| json!({ "x": i, "y": j, "z": k, "c": crate::arith::rational::format_q(c) }))
                .collect::<Vec<_>>(),
        })
    }

    /// All singular points, as Galois orbits.
    pub fn singular_points(&self) -> Result<Vec<PlaneSingularPoint>, TrigonalError> {
        let mut out = self.affine_singular_points()?;
        // the line z = 0 away from [1 : 0 : 0]
        let gy = self.chart_y();
        let on_line = |p: &BiPoly<Q>| p.swap_xy().at_x(&Q::from_integer(0.into()));
        let h = gcd_all(&[on_line(&gy), on_line(&gy.partial_x()), on_line(&gy.partial_y())]);
        if h.is_zero() {
            return Err(TrigonalError::NonSimple("the line at infinity is a multiple component".into()));
        }
        for (g, _) in factor_rational(&h) {
            let k = NumberField::new(&g);
            let theta = Nf::generator(&k);
            let zero = Nf::zero(&k);
            let local = classify_at_origin(&gy.lift(&k).translate(&theta, &zero));
            let one = Nf::one(&k);
            out.push(PlaneSingularPoint { point: PlanePoint::new(&theta, [&theta, &one, &zero]), local });
        }
        let gx = self.chart_x();
        let z = Q::from_integer(0.into());
        if Field::is_zero(&gx.eval(&z, &z))
            && Field::is_zero(&gx.partial_x().eval(&z, &z))
            && Field::is_zero(&gx.partial_y().eval(&z, &z))
        {
            let k = NumberField::new(&QPoly::x(&()));
            let (zero, one) = (Nf::zero(&k), Nf::one(&k));
            let local = classify_at_origin(&gx.lift::<Nf>(&k));
            out.push(PlaneSingularPoint { point: PlanePoint::new(&zero, [&one, &zero, &zero]), local });
        }
        Ok(out)
    }

    fn affine_singular_points(&self) -> Result<Vec<PlaneSingularPoint>, TrigonalError> {
        let f = &self.affine;
        'shear: for lambda in 0..MAX_SHEAR {
            let lam = Q::from_integer(lambda.into());
            let sx = BiPoly::x(&()).add(&BiPoly::y(&()).scale(&lam));
            let fs = f.substitute(&sx, &BiPoly::y(&()));
            let r = fs.resultant_y(&fs.partial_y());
            if r.is_zero() {
                continue;
            }
            let mut out = Vec::new();
            for (g, _) in factor_rational(&r) {
                let Ok(pts) = points_over(&fs, &g) else { continue 'shear };
                for (xs, y0, local) in pts {
                    let x0 = xs.add(&y0.mul(&Nf::from_q(&xs.ctx(), &lam)));
                    let one = Nf::one(&xs.ctx());
                    out.push(PlaneSingularPoint { point: PlanePoint::new(&xs, [&x0, &y0, &one]), local });
                }
            }
            return Ok(out);
        }
        Err(TrigonalError::NonSimple("curve is not reduced".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trigonal::parse_bipoly;

    fn local(t: &str) -> LocalType {
        classify_at_origin(&parse_bipoly(t).unwrap())
    }

    #[test]
    fn normal_forms() {
        for (t, name, mu) in [
            ("x^2 + y^2", "A1", 1),
            ("y^2 - x^5", "A4", 4),
            ("(y - x^2)^2 - x^7", "A6", 6),
            ("x^2 y + y^3", "D4", 4),
            ("x^2 y + y^5", "D6", 6),
            ("y^3 + x^4", "E6", 6),
            ("y^3 + x^3 y", "E7", 7),
            ("y^3 + x^5", "E8", 8),
            ("y^3 + x^4 y", "J10", 10),
        ] {
            let l = local(t);
            assert_eq!(l.kind.to_string(), name, "{t}");
            assert_eq!(l.milnor, Some(mu), "{t}");
        }
        assert!(matches!(local("x^4 + y^4").kind, PointType::NonSimple(_)));
        assert_eq!(local("y^2").milnor, None);
    }

    #[test]
    fn three_cusps_and_genus() {
        let c = TrigonalCurve::parse("y^3 + (x^3 + 1)^2").unwrap();
        let pts = classify_singular_points(&c);
        let total: usize = pts.iter().map(|p| p.orbit_size()).sum();
        assert_eq!(total, 3);
        assert!(pts.iter().all(|p| p.local.kind == PointType::Simple(AdeSymbol::a(2))));
        assert_eq!(genus(&c), Ok(1));
        assert_eq!(genus(&TrigonalCurve::parse("y^3 + x^6 + 1").unwrap()), Ok(4));
    }

    #[test]
    fn j10_blocks_genus() {
        let c = TrigonalCurve::parse("y^3 + x^4 y").unwrap();
        let pts = classify_singular_points(&c);
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].local.kind, PointType::NonSimple("J10".into()));
        assert!(matches!(genus(&c), Err(TrigonalError::NonSimple(_))));
    }

    #[test]
    fn intersection_indices() {
        let o = Q::from_integer(0.into());
        let p = |t: &str| parse_bipoly(t).unwrap();
        assert_eq!(local_intersection_index(&p("y"), &p("x"), (&o, &o)), Ok(1));
        assert_eq!(local_intersection_index(&p("y^2 - x^3"), &p("y"), (&o, &o)), Ok(3));
        // the ideal is (y^2, x^3); Res_y = 4 x^6
        let (f, g) = (p("y^2 - x^3"), p("y^2 + x^3"));
        assert_eq!(f.resultant_y(&g).low_order(), Some(6));
        assert_eq!(local_intersection_index(&f, &g, (&o, &o)), Ok(6));
        assert_eq!(local_intersection_index(&p("x y"), &p("x"), (&o, &o)), Err(TrigonalError::CommonComponent));
    }

    #[test]
    fn plane_nodal_cubic_and_line_pair_at_infinity() {
        // y^2 z = x^3 + x^2 z: a node at the origin
        let c = PlaneCurve::new(3, parse_bipoly("y^2 - x^3 - x^2").unwrap());
        let s = c.singular_points().unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].local.kind, PointType::Simple(AdeSymbol::a(1)));
        // the conic x y + z^2 meets the line y = z at (-1, 1) and at [1 : 0 : 0]
        let d = PlaneCurve::new(3, parse_bipoly("(x y + 1)(y - 1)").unwrap());
        let s = d.singular_points().unwrap();
        assert_eq!(s.iter().map(|p| p.point.orbit_size()).sum::<usize>(), 2);
        // parallel lines y = 0, y = 1 meet at [1 : 0 : 0]
        let e = PlaneCurve::new(2, parse_bipoly("y (y - 1)").unwrap());
        let s = e.singular_points().unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].point.coords[1], QPoly::zero(&()));
        assert_eq!(s[0].point.coords[2], QPoly::zero(&()));
    }

    #[test]
    fn conjugate_points_are_recognized() {
        let k = NumberField::new(&QPoly::from_ints(&[-2, 0, 1]));
        let t = Nf::generator(&k);
        let one = Nf::one(&k);
        let p = PlanePoint::from_nf([&t, &one, &one]);
        let q = PlanePoint::from_nf([&t.neg(), &one, &one]);
        let r = PlanePoint::from_nf([&t, &t, &one]);
        let two = Nf::from_q(&k, &Q::from_integer(2.into()));
        let scaled = PlanePoint::from_nf([&t.mul(&two), &two, &two]);
        assert!(p.same_orbit(&q));
        assert!(p.same_orbit(&scaled));
        assert!(!p.same_orbit(&r));
    }
}
