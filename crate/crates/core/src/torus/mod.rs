//! Torus structures `F = (y + b)^3 + (l y + e)^2` of trigonal curves:
//! exact detection over number fields, verification, inner and outer
//! singular points.

mod newton;

use serde_json::{json, Value};

use crate::arith::algebraic::{adjoin_root, factor_over_nf, rational_field, Extension};
use crate::arith::bipoly::BiPoly;
use crate::arith::factor::factor_rational;
use crate::arith::numfield::{Nf, NfCtx, NumberField};
use crate::arith::poly::{Poly, QPoly};
use crate::arith::rational::format_q;
use crate::arith::{Field, Q};
use crate::roots::{dihedral_quotient_count, Budget, RootSystemSpec, RootsError};
use crate::trigonal::{classify_singular_points, format_poly, FiberLocation, PointType, ReducedModel, TrigonalCurve};

pub use newton::{
    bound as newton_bound, newton_divisibility_check, sample_instance, Cascade, GermInstance, GermKind, NewtonError,
    NewtonReport, Perturbation,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TorusError {
    #[error("deg {which} = {degree} exceeds {bound}")]
    Degree { which: char, degree: usize, bound: usize },
}

/// `p = y + b(x)`, `q = l(x) y + e(x)` with coefficients in a number field
/// (degree one for the rationals). `orbit_size` is the number of Galois
/// conjugate structures.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusStructure {
    pub field: NfCtx,
    pub b: Poly<Nf>,
    pub l: Poly<Nf>,
    pub e: Poly<Nf>,
    pub orbit_size: usize,
}

fn nf_coeffs_text(p: &Poly<Nf>) -> Vec<String> {
    p.coeffs().iter().map(|c| format_poly(c.value(), 't')).collect()
}

impl TorusStructure {
    pub fn rational(b: &QPoly, l: &QPoly, e: &QPoly) -> TorusStructure {
        let k = rational_field();
        TorusStructure { b: b.lift(&k), l: l.lift(&k), e: e.lift(&k), field: k, orbit_size: 1 }
    }

    pub fn is_rational(&self) -> bool {
        self.field.degree() == 1
    }

    pub fn check_degrees(&self) -> Result<(), TorusError> {
        for (which, p, bound) in [('b', &self.b, 2), ('l', &self.l, 1), ('e', &self.e, 3)] {
            if let Some(d) = p.degree() {
                if d > bound {
                    return Err(TorusError::Degree { which, degree: d, bound });
                }
            }
        }
        Ok(())
    }

    /// `(y + b)^3 + (l y + e)^2`.
    pub fn compose(&self) -> BiPoly<Nf> {
        let k = &self.field;
        let lift = |p: &Poly<Nf>| BiPoly::from_y_coeffs(std::slice::from_ref(p), k);
        let p = BiPoly::y(k).add(&lift(&self.b));
        let q = BiPoly::y(k).mul(&lift(&self.l)).add(&lift(&self.e));
        p.pow(3).add(&q.pow(2))
    }

    /// The same structure for the curve before removing its `y^2` term.
    fn shifted(&self, a: &QPoly) -> TorusStructure {
        let mut s = self.clone();
        let third = a.scale(&Q::new(1.into(), 3.into())).lift::<Nf>(&self.field);
        s.b = &s.b + &third;
        s.e = &s.e + &(&s.l * &third);
        s
    }

    /// `e - l b`: its roots are the x-coordinates of the points with
    /// `p = q = 0`; a missing `x^3` term puts one at infinity.
    pub fn inner_polynomial(&self) -> Poly<Nf> {
        &self.e - &(&self.l * &self.b)
    }

    /// Rational coefficients up to the sign of q, if the structure is
    /// defined over Q.
    pub fn same_as_rational(&self, b: &QPoly, l: &QPoly, e: &QPoly) -> bool {
        if !self.is_rational() {
            return false;
        }
        let k = &self.field;
        let (b, l, e) = (b.lift::<Nf>(k), l.lift::<Nf>(k), e.lift::<Nf>(k));
        self.b == b && ((self.l == l && self.e == e) || (self.l == -&l && self.e == -&e))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "b": nf_coeffs_text(&self.b),
            "l": nf_coeffs_text(&self.l),
            "e": nf_coeffs_text(&self.e),
            "minpoly": self.field.modulus().coeffs().iter().map(format_q).collect::<Vec<_>>(),
            "orbit_size": self.orbit_size,
        })
    }

    fn sort_key(&self) -> (usize, usize, Vec<String>) {
        let mut k = nf_coeffs_text(&self.b);
        k.extend(nf_coeffs_text(&self.l));
        k.extend(nf_coeffs_text(&self.e));
        (self.orbit_size, self.field.degree(), k)
    }
}

/// Exact polynomial identity `F = p^3 + q^2` over the structure's field.
pub fn verify_torus(curve: &TrigonalCurve, s: &TorusStructure) -> Result<bool, TorusError> {
    s.check_degrees()?;
    let f: BiPoly<Nf> = curve.to_bipoly().lift(&s.field);
    Ok(f == s.compose())
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetectionReport {
    pub structures: Vec<TorusStructure>,
    pub count_over_closure: usize,
}

impl DetectionReport {
    pub fn to_json(&self) -> Value {
        json!({
            "count": self.count_over_closure,
            "warning": "irreducibility of the curve is not checked",
            "structures": self.structures.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// The structure with `l = 0`: `P = 0` and `Q = c g^2`, `e = sqrt(c) g`.
fn structure_with_l_zero(m: &ReducedModel) -> Option<TorusStructure> {
    if !m.p().is_zero() {
        return None;
    }
    let qq = m.q();
    let mut half = QPoly::one(&());
    for (f, mult) in qq.squarefree_decomposition() {
        if mult % 2 == 1 {
            return None;
        }
        half = &half * &f.pow(mult as u32 / 2);
    }
    let c = qq.lc();
    let q0 = rational_field();
    let sq: Poly<Nf> = Poly::new(vec![Nf::from_q(&q0, &-c), Nf::zero(&q0), Nf::one(&q0)], q0.clone());
    let ext = adjoin_root(&factor_over_nf(&sq)[0].0);
    let k = ext.field.clone();
    let e = half.lift::<Nf>(&k).scale(&ext.root);
    Some(TorusStructure { b: Poly::zero(&k), l: Poly::zero(&k), e, field: k, orbit_size: 1 })
}

/// Structures with `l^2 = mu u^2`, `u = x - theta` (or `u = 1`), `theta`
/// the generator of `k`.
fn structures_with_l(m: &ReducedModel, k: &NfCtx, linear: bool) -> Vec<TorusStructure> {
    // variables: mu is "x", the base coordinate is "y"
    let lift_x = |p: &QPoly| {
        let mut out = BiPoly::zero(k);
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(0, i as u32, Nf::from_q(k, c));
        }
        out
    };
    let theta = Nf::generator(k);
    let u = if linear { BiPoly::y(k).sub(&BiPoly::constant(theta.clone())) } else { BiPoly::constant(Nf::one(k)) };
    let mu = BiPoly::x(k);
    let c = |n: i64, d: i64| Nf::from_q(k, &Q::new(n.into(), d.into()));
    let u2 = u.pow(2);
    let inner = lift_x(m.p()).sub(&mu.pow(2).mul(&u2.pow(2)).scale(&c(1, 3)));
    let eq = mu
        .mul(&u2)
        .mul(&lift_x(m.q()))
        .scale(&c(4, 1))
        .sub(&inner.pow(2))
        .add(&mu.pow(4).mul(&u2.pow(4)).scale(&c(4, 27)));
    let mut g = Poly::zero(k);
    for col in eq.y_coeffs() {
        g = g.gcd(&col);
    }
    if g.is_zero() {
        unreachable!("the x^8 coefficient is -mu^4/27 + 4 mu Q_6, not identically zero");
    }
    while g.degree().unwrap_or(0) > 0 && g.coeff(0).is_zero() {
        g = g.exact_div(&Poly::x(k)).unwrap();
    }
    if g.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (f, _) in factor_over_nf(&g) {
        let f1 = adjoin_root(&f);
        let mu1 = f1.root.clone();
        let theta1 = f1.base_generator.clone();
        let k1 = f1.field.clone();
        let sq: Poly<Nf> = Poly::new(vec![mu1.neg(), Nf::zero(&k1), Nf::one(&k1)], k1.clone());
        let f2: Extension = adjoin_root(&factor_over_nf(&sq)[0].0);
        let km = f2.field.clone();
        let (mu_m, theta_m, alpha) = (f2.embed(&mu1), f2.embed(&theta1), f2.root.clone());
        let um = if linear { Poly::new(vec![theta_m.neg(), Nf::one(&km)], km.clone()) } else { Poly::one(&km) };
        let cm = |n: i64, d: i64| Nf::from_q(&km, &Q::new(n.into(), d.into()));
        let l = um.scale(&alpha);
        let b = um.pow(2).scale(&mu_m.mul(&cm(-1, 3)));
        let num = &m.p().lift::<Nf>(&km) - &um.pow(4).scale(&mu_m.pow(2).mul(&cm(1, 3)));
        let e = num.exact_div(&l.scale(&cm(2, 1))).expect("u divides P - l^4/3");
        out.push(TorusStructure { field: km, b, l, e, orbit_size: f1.degree() });
    }
    out
}

/// All torus structures of `y^3 + P y + Q`, one per Galois orbit, with
/// the number of structures over the algebraic closure.
pub fn detect_torus(m: &ReducedModel) -> DetectionReport {
    let mut structures: Vec<TorusStructure> = structure_with_l_zero(m).into_iter().collect();
    structures.extend(structures_with_l(m, &rational_field(), false));
    let anchors = if m.p().is_zero() { m.q() } else { m.p() };
    for (g, _) in factor_rational(anchors) {
        structures.extend(structures_with_l(m, &NumberField::new(&g), true));
    }
    structures.sort_by_key(|a| a.sort_key());
    let count_over_closure = structures.iter().map(|s| s.orbit_size).sum();
    DetectionReport { structures, count_over_closure }
}

/// Torus structures of a curve with a possible `y^2` term.
pub fn detect_torus_curve(curve: &TrigonalCurve) -> DetectionReport {
    let mut r = detect_torus(&curve.reduce());
    for s in &mut r.structures {
        *s = s.shifted(curve.a());
    }
    r
}

/// Number of subgroups of order 3 in the quotient torsion of the lattice
/// embedding of `spec` into E8.
pub fn expected_torus_count(spec: &RootSystemSpec, budget: &mut Budget) -> Result<u64, RootsError> {
    dihedral_quotient_count(spec, 3, budget)
}

#[derive(Debug, Clone, PartialEq)]
pub struct InnerOuter {
    pub fiber: FiberLocation,
    pub kind: PointType,
    pub inner: usize,
    pub outer: usize,
}

impl InnerOuter {
    pub fn to_json(&self) -> Value {
        json!({
            "fiber": self.fiber.to_json(),
            "type": self.kind.to_string(),
            "inner": self.inner,
            "outer": self.outer,
        })
    }
}

/// Counts, per Galois orbit of singular points, the points on
/// `p = q = 0` (inner) and the others (outer).
pub fn inner_outer_split(curve: &TrigonalCurve, s: &TorusStructure) -> Vec<InnerOuter> {
    let r = s.inner_polynomial();
    let k = &s.field;
    classify_singular_points(curve)
        .into_iter()
        .map(|p| {
            let size = p.orbit_size();
            let inner = match p.fiber.minpoly() {
                Some(g) => g.lift::<Nf>(k).gcd(&r).degree().unwrap_or(0),
                None => usize::from(r.coeff(3).is_zero()),
            };
            InnerOuter { fiber: p.fiber.clone(), kind: p.local.kind.clone(), inner, outer: size - inner }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(t: &str) -> TrigonalCurve {
        TrigonalCurve::parse(t).unwrap()
    }

    #[test]
    fn three_cusps_structure() {
        let c = curve("y^3 + (x^3 + 1)^2");
        let zero = QPoly::zero(&());
        let e = QPoly::from_ints(&[1, 0, 0, 1]);
        let s = TorusStructure::rational(&zero, &zero, &e);
        assert_eq!(verify_torus(&c, &s), Ok(true));
        let bad = TorusStructure::rational(&zero, &zero, &QPoly::from_ints(&[2, 0, 0, 1]));
        assert_eq!(verify_torus(&c, &bad), Ok(false));
        let r = detect_torus(&c.reduce());
        assert!(r.count_over_closure >= 1);
        assert!(r.structures.iter().any(|t| t.same_as_rational(&zero, &zero, &e)));
        for t in &r.structures {
            assert_eq!(verify_torus(&c, t), Ok(true));
        }
        let split = inner_outer_split(&c, &s);
        assert!(split.iter().all(|p| p.outer == 0));
        assert_eq!(split.iter().map(|p| p.inner).sum::<usize>(), 3);
    }

    #[test]
    fn degree_violation() {
        let s = TorusStructure::rational(&QPoly::from_ints(&[0, 0, 0, 1]), &QPoly::zero(&()), &QPoly::zero(&()));
        assert!(matches!(verify_torus(&curve("y^3 + x"), &s), Err(TorusError::Degree { which: 'b', .. })));
    }
}
