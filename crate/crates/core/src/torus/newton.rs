//! Divisibility of `phi - q^2` by `p` or `p^2` at a singular point of
//! type `A_{3k-1}` (`phi = x^{3k} + y^2`) or `E6` (`phi = x^4 + y^3`), and
//! the lower bounds on the local intersection index of the cofactor with
//! `p`. Instances are truncated power series.

use serde::Serialize;

use crate::arith::bipoly::{intersection_at_origin, BiPoly};
use crate::arith::poly::QPoly;
use crate::arith::{Field, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GermKind {
    /// `A_{3k-1}`.
    A {
        k: u32,
    },
    E6,
}

/// `phi - q^2 = p h` or `phi - q^2 = p^2 h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Cascade {
    H1,
    H2,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GermInstance {
    pub kind: GermKind,
    pub cascade: Cascade,
    /// For `A2` only: `q` is only assumed to vanish at the point.
    pub weak_q: bool,
    pub p: BiPoly<Q>,
    pub q: BiPoly<Q>,
    pub h: BiPoly<Q>,
    /// The identity is required in total degrees up to `order`.
    pub order: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NewtonReport {
    pub bound: usize,
    /// `None` when `h` and `p` share a component.
    pub index: Option<usize>,
    /// The index is not affected by the truncation.
    pub determined: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NewtonError {
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

fn qn(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn germ(kind: GermKind) -> BiPoly<Q> {
    let one = qn(1);
    match kind {
        GermKind::A { k } => BiPoly::monomial(one.clone(), 3 * k, 0, &()).add(&BiPoly::monomial(one, 0, 2, &())),
        GermKind::E6 => BiPoly::monomial(one.clone(), 4, 0, &()).add(&BiPoly::monomial(one, 0, 3, &())),
    }
}

/// `(w, m)`: `p` has type `(w, 1)`; `q` is adjacent to `(m, 1)`, or for
/// E6 to `(2, 2)`.
fn weights(kind: GermKind) -> (u32, u32) {
    match kind {
        GermKind::A { k } => (k, (3 * k + 1) / 2),
        GermKind::E6 => (2, 2),
    }
}

fn adjacent(f: &BiPoly<Q>, kind: GermKind, weak: bool) -> bool {
    let (_, m) = weights(kind);
    f.terms().all(|(&(i, j), _)| match (kind, weak) {
        (_, true) => i + j >= 1,
        (GermKind::E6, _) => i + j >= 2,
        (GermKind::A { .. }, _) => i + m * j >= m,
    })
}

fn truncate(f: &BiPoly<Q>, n: u32) -> BiPoly<Q> {
    let mut out = BiPoly::zero(&());
    for (&(i, j), c) in f.terms() {
        if i + j <= n {
            out.add_term(i, j, c.clone());
        }
    }
    out
}

/// The lower bound on `(h . p)`. For `A_{3k-1}` and `H1` it is
/// `[(3k + 1) / 2]`; for even `k` the rounded-up value can fail.
pub fn bound(kind: GermKind, cascade: Cascade, weak: bool) -> usize {
    if weak {
        return 1;
    }
    match (kind, cascade) {
        (GermKind::A { k }, Cascade::H1) => (3 * k as usize + 1) / 2,
        (GermKind::A { k }, Cascade::H2) => k as usize,
        (GermKind::E6, Cascade::H1) => 3,
        (GermKind::E6, Cascade::H2) => 2,
    }
}

pub fn newton_divisibility_check(inst: &GermInstance) -> Result<NewtonReport, NewtonError> {
    let hyp = |m: &str| Err(NewtonError::Hypothesis(m.to_string()));
    if inst.weak_q && inst.kind != (GermKind::A { k: 1 }) {
        return hyp("the weak hypothesis on q applies to A2 only");
    }
    if let GermKind::A { k: 0 } = inst.kind {
        return hyp("k must be positive");
    }
    let (w, _) = weights(inst.kind);
    if inst.p.coeff(0, 1).is_zero() || !inst.p.terms().all(|(&(i, j), _)| i + w * j >= w) {
        return hyp("p is not semiquasihomogeneous of the required type");
    }
    if !adjacent(&inst.q, inst.kind, inst.weak_q) {
        return hyp("q is not adjacent to the required type");
    }
    let c = if inst.cascade == Cascade::H1 { 1 } else { 2 };
    let rest = germ(inst.kind).sub(&inst.q.pow(2)).sub(&inst.p.pow(c).mul(&inst.h));
    if !truncate(&rest, inst.order).is_zero() {
        return hyp("phi - q^2 differs from the product in low degree");
    }
    let b = bound(inst.kind, inst.cascade, inst.weak_q);
    let index = intersection_at_origin(&truncate(&inst.h, inst.order), &truncate(&inst.p, inst.order)).ok();
    let determined = index.is_some_and(|i| i <= inst.order as usize);
    let holds = index.is_none_or(|i| i >= b);
    Ok(NewtonReport { bound: b, index, determined, holds })
}

fn series_trunc(f: &QPoly, n: u32) -> QPoly {
    QPoly::new(f.coeffs().iter().take(n as usize + 1).cloned().collect(), ())
}

fn series_mul(a: &QPoly, b: &QPoly, n: u32) -> QPoly {
    series_trunc(&(a * b), n)
}

/// `(1 + f)^r` for `f(0) = 0` and rational `r`, to degree `n`.
fn series_binomial(f: &QPoly, r: &Q, n: u32) -> QPoly {
    let mut acc = QPoly::one(&());
    let mut term = QPoly::one(&());
    let mut coef = qn(1);
    for j in 1..=n as i64 {
        coef = coef * (r - qn(j - 1)) / qn(j);
        term = series_mul(&term, f, n);
        if term.is_zero() {
            break;
        }
        acc = &acc + &term.scale(&coef);
    }
    acc
}

fn x_series(f: &QPoly) -> BiPoly<Q> {
    BiPoly::from_y_coeffs(std::slice::from_ref(f), &())
}

/// Perturbation data: `g = x^w (c + d x)` defines `p0 = y - g`; `r` and
/// the unit `u` move the instance off its normal form.
#[derive(Debug, Clone, PartialEq)]
pub struct Perturbation {
    pub c: Q,
    pub d: Q,
    pub r: BiPoly<Q>,
    pub unit: BiPoly<Q>,
}

/// An instance satisfying the hypotheses, built from the closed-form
/// solutions of `phi(x, g) = q(x, g)^2` (and, for `H2`, of the tangency
/// condition) followed by `q -> q + p0^c r`, `p -> u p0`.
pub fn sample_instance(
    kind: GermKind,
    cascade: Cascade,
    weak_q: bool,
    pert: &Perturbation,
    order: u32,
) -> GermInstance {
    let n = order + 4;
    let (w, _) = weights(kind);
    let half = Q::new(1.into(), 2.into());
    let x = QPoly::x(&());
    let xw = x.pow(w);
    let cd = QPoly::new(vec![pert.c.clone(), pert.d.clone()], ());
    let g = &xw * &cd;
    let cd_inv = series_binomial(&cd.scale(&Field::inv(&pert.c).unwrap()).sub_poly(&QPoly::one(&())), &qn(-1), n)
        .scale(&Field::inv(&pert.c).unwrap());
    let y = BiPoly::y(&());
    let p0 = y.sub(&x_series(&g));
    // s = sqrt(phi(x, g)) as a series
    let (q0, h0) = match kind {
        GermKind::A { k } => {
            // phi(x, g) = g^2 D, D = 1 + x^k / (c + d x)^2
            let dm1 = series_mul(&x.pow(k), &series_mul(&cd_inv, &cd_inv, n), n);
            let sqrt_d = series_binomial(&dm1, &half, n);
            if weak_q && cascade == Cascade::H1 {
                let s = series_mul(&g, &sqrt_d, n);
                (x_series(&s), y.add(&x_series(&g)))
            } else if cascade == Cascade::H1 {
                let beta = series_mul(&g, &(&sqrt_d - &QPoly::one(&())), n);
                (y.add(&x_series(&beta)), x_series(&beta.scale(&qn(-2))))
            } else {
                let inv_sqrt_d = series_binomial(&dm1, &-half.clone(), n);
                let beta = series_mul(&series_mul(&g, &dm1, n), &inv_sqrt_d, n);
                let h = series_mul(&dm1, &series_mul(&inv_sqrt_d, &inv_sqrt_d, n), n);
                (y.mul(&x_series(&inv_sqrt_d)).add(&x_series(&beta)), x_series(&h))
            }
        }
        GermKind::E6 => {
            // phi(x, g) = x^4 (1 + x^2 (c + d x)^3)
            let s = series_mul(&x.pow(2), &series_binomial(&series_mul(&x.pow(2), &cd.pow(3), n), &half, n), n);
            if cascade == Cascade::H1 {
                let h = y.pow(2).add(&y.mul(&x_series(&g))).add(&x_series(&(&g * &g)));
                (x_series(&s), h)
            } else {
                // alpha = 3 g^2 / (2 s), with s / x^2 a unit
                let s_unit = s.exact_div(&x.pow(2)).unwrap();
                let s_unit_inv = series_binomial(&s_unit.sub_poly(&QPoly::one(&())), &qn(-1), n);
                let alpha = series_mul(
                    &series_mul(&(&g * &g), &s_unit_inv, n),
                    &QPoly::constant(Q::new(3.into(), 2.into())),
                    n,
                )
                .exact_div(&x.pow(2))
                .unwrap();
                let beta = &s - &series_mul(&alpha, &g, n);
                let h = y.add(&x_series(&(&g.scale(&qn(2)) - &series_mul(&alpha, &alpha, n))));
                (y.mul(&x_series(&alpha)).add(&x_series(&beta)), h)
            }
        }
    };
    let c = if cascade == Cascade::H1 { 1 } else { 2 };
    let p0c = p0.pow(c);
    let mut r = pert.r.clone();
    let mut shifted = q0.add(&p0c.mul(&r));
    while !adjacent(&truncate(&shifted, n), kind, weak_q) {
        r = r.mul(&BiPoly::x(&()));
        shifted = q0.add(&p0c.mul(&r));
    }
    let h_inner = h0.sub(&q0.mul(&r).scale(&qn(2))).sub(&p0c.mul(&r.pow(2)));
    // u^{-c} as a truncated series
    let u0 = pert.unit.coeff(0, 0);
    let u0_inv = Field::inv(&u0).unwrap();
    let v = pert.unit.scale(&u0_inv).sub(&BiPoly::constant(qn(1)));
    let mut inv = BiPoly::constant(qn(1));
    let mut power = BiPoly::constant(qn(1));
    for _ in 0..n {
        power = truncate(&power.mul(&v), n).scale(&qn(-1));
        inv = inv.add(&power);
    }
    let inv = inv.scale(&u0_inv);
    let inv_c = truncate(&inv.pow(c), n);
    GermInstance {
        kind,
        cascade,
        weak_q,
        p: truncate(&pert.unit.mul(&p0), n),
        q: truncate(&shifted, n),
        h: truncate(&h_inner.mul(&inv_c), n),
        order,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain() -> Perturbation {
        Perturbation { c: qn(1), d: qn(0), r: BiPoly::zero(&()), unit: BiPoly::constant(qn(1)) }
    }

    #[test]
    fn normal_form_instances() {
        for (kind, cascade, weak, expected) in [
            (GermKind::A { k: 1 }, Cascade::H1, false, 2),
            (GermKind::A { k: 2 }, Cascade::H1, false, 4),
            (GermKind::A { k: 1 }, Cascade::H2, false, 1),
            (GermKind::A { k: 3 }, Cascade::H2, false, 3),
            (GermKind::E6, Cascade::H1, false, 4),
            (GermKind::E6, Cascade::H2, false, 2),
            (GermKind::A { k: 1 }, Cascade::H1, true, 1),
        ] {
            let inst = sample_instance(kind, cascade, weak, &plain(), 12);
            let r = newton_divisibility_check(&inst).unwrap();
            assert_eq!(r.index, Some(expected), "{kind:?} {cascade:?}");
            assert!(r.holds && r.determined);
        }
    }

    #[test]
    fn hypothesis_violations_are_reported() {
        let mut inst = sample_instance(GermKind::A { k: 1 }, Cascade::H1, false, &plain(), 10);
        inst.q = inst.q.add(&BiPoly::x(&()));
        assert!(newton_divisibility_check(&inst).is_err());
        let mut inst = sample_instance(GermKind::E6, Cascade::H1, false, &plain(), 10);
        inst.h = inst.h.add(&BiPoly::constant(qn(1)));
        assert!(newton_divisibility_check(&inst).is_err());
    }
}
