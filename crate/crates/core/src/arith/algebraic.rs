//! Factorization over a number field (Trager's norm method) and
//! adjunction of roots, producing absolute fields by primitive elements.

use super::bipoly::BiPoly;
use super::factor::factor_rational;
use super::numfield::{Nf, NfCtx, NumberField};
use super::poly::{Poly, QPoly};
use super::{Field, Q};

/// `Norm_{K/Q} h(z + s theta)` as a polynomial in z.
fn shifted_norm(h: &Poly<Nf>, s: i64) -> QPoly {
    let k = h.ctx();
    // variables (z, t): z is "x", t is "y"
    let mut g = BiPoly::zero(&());
    for (e, c) in k.modulus().coeffs().iter().enumerate() {
        g.add_term(0, e as u32, c.clone());
    }
    let shift = BiPoly::x(&()).add(&BiPoly::y(&()).scale(&Q::from_integer(s.into())));
    let mut hh = BiPoly::zero(&());
    let mut power = BiPoly::constant(Q::from_integer(1.into()));
    for c in h.coeffs() {
        let mut ct = BiPoly::zero(&());
        for (e, v) in c.value().coeffs().iter().enumerate() {
            ct.add_term(0, e as u32, v.clone());
        }
        hh = hh.add(&ct.mul(&power));
        power = power.mul(&shift);
    }
    g.resultant_y(&hh)
}

fn is_squarefree(p: &QPoly) -> bool {
    p.gcd(&p.derivative()).degree() == Some(0)
}

/// `h(z + c)` for `c` in the field.
fn translate(h: &Poly<Nf>, c: &Nf) -> Poly<Nf> {
    h.compose(&Poly::new(vec![c.clone(), Nf::one(&h.ctx().clone())], h.ctx().clone()))
}

fn shift_value(k: &NfCtx, s: i64) -> Nf {
    Nf::generator(k).mul(&Nf::from_q(k, &Q::from_integer(s.into())))
}

fn shifts() -> impl Iterator<Item = i64> {
    (0..).flat_map(|n: i64| if n == 0 { vec![0] } else { vec![n, -n] })
}

/// Monic irreducible factors of a squarefree polynomial over its field.
fn factor_squarefree_nf(h: &Poly<Nf>) -> Vec<Poly<Nf>> {
    let k = h.ctx().clone();
    if h.degree().unwrap_or(0) <= 1 {
        return vec![h.monic()];
    }
    for s in shifts() {
        let n = shifted_norm(h, s);
        if !is_squarefree(&n) {
            continue;
        }
        let hs = translate(h, &shift_value(&k, s));
        let back = shift_value(&k, s).neg();
        return factor_rational(&n)
            .into_iter()
            .map(|(ni, _)| {
                let g = hs.gcd(&ni.lift::<Nf>(&k));
                translate(&g, &back).monic()
            })
            .filter(|g| g.degree().unwrap_or(0) >= 1)
            .collect();
    }
    unreachable!("some shift gives a squarefree norm")
}

/// Monic irreducible factors with multiplicities.
pub fn factor_over_nf(h: &Poly<Nf>) -> Vec<(Poly<Nf>, usize)> {
    let mut out = Vec::new();
    for (part, mult) in h.squarefree_decomposition() {
        for f in factor_squarefree_nf(&part) {
            out.push((f, mult));
        }
    }
    out
}

/// An absolute field `M = K(root)` with the image of the generator of K.
#[derive(Debug, Clone)]
pub struct Extension {
    pub field: NfCtx,
    pub base_generator: Nf,
    pub root: Nf,
}

impl Extension {
    /// Image in M of an element of K.
    pub fn embed(&self, a: &Nf) -> Nf {
        a.value().lift::<Nf>(&self.field).eval(&self.base_generator)
    }

    pub fn embed_poly(&self, p: &Poly<Nf>) -> Poly<Nf> {
        p.map(&self.field, |c| self.embed(c))
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }
}

/// Adjoins a root of an irreducible `f` over K. Linear factors stay in K.
pub fn adjoin_root(f: &Poly<Nf>) -> Extension {
    let k = f.ctx().clone();
    if f.degree() == Some(1) {
        let root = f.coeff(0).neg().div(&f.coeff(1)).unwrap();
        return Extension { field: k.clone(), base_generator: Nf::generator(&k), root };
    }
    for s in shifts() {
        let n = shifted_norm(f, s);
        if !is_squarefree(&n) {
            continue;
        }
        // gamma = zeta - s theta generates M, and n is its minimal polynomial
        let m = NumberField::new(&n);
        let w = Nf::generator(&m);
        let sq = Nf::from_q(&m, &Q::from_integer(s.into()));
        // theta is the common root of k's modulus and f(w + s t) in t
        let g: Poly<Nf> = k.modulus().lift(&m);
        let t_lin = Poly::new(vec![w.clone(), sq.clone()], m.clone());
        let mut ft = Poly::zero(&m);
        for c in f.coeffs().iter().rev() {
            let ct = c.value().lift::<Nf>(&m);
            ft = &(&ft * &t_lin) + &ct;
        }
        let common = g.gcd(&ft);
        assert_eq!(common.degree(), Some(1), "primitive element separates conjugates");
        let theta = common.coeff(0).neg();
        let root = w.add(&sq.mul(&theta));
        return Extension { field: m, base_generator: theta, root };
    }
    unreachable!()
}

/// All roots of `h` over the algebraic closure, one entry per Galois
/// orbit over K, each in an absolute field containing K.
pub fn roots_by_orbit(h: &Poly<Nf>) -> Vec<Extension> {
    factor_over_nf(h).into_iter().map(|(f, _)| adjoin_root(&f)).collect()
}

/// The rationals as a number field of degree 1.
pub fn rational_field() -> NfCtx {
    NumberField::new(&QPoly::x(&()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qi;

    #[test]
    fn x2_minus_2_splits_over_sqrt2() {
        let k = NumberField::new(&QPoly::from_ints(&[-2, 0, 1]));
        let h: Poly<Nf> = QPoly::from_ints(&[-2, 0, 1]).lift(&k);
        let f = factor_over_nf(&h);
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|(g, m)| g.degree() == Some(1) && *m == 1));
    }

    #[test]
    fn x2_minus_3_stays_irreducible_over_sqrt2() {
        let k = NumberField::new(&QPoly::from_ints(&[-2, 0, 1]));
        let h: Poly<Nf> = QPoly::from_ints(&[-3, 0, 1]).lift(&k);
        let f = factor_over_nf(&h);
        assert_eq!(f.len(), 1);
        let ext = adjoin_root(&f[0].0);
        assert_eq!(ext.degree(), 4);
        let r = &ext.root;
        assert_eq!(r.mul(r), Nf::from_q(&ext.field, &qi(3)));
        let th = &ext.base_generator;
        assert_eq!(th.mul(th), Nf::from_q(&ext.field, &qi(2)));
    }

    #[test]
    fn cube_roots_of_two() {
        let q = rational_field();
        let h: Poly<Nf> = QPoly::from_ints(&[-2, 0, 0, 1]).lift(&q);
        let orbits = roots_by_orbit(&h);
        assert_eq!(orbits.len(), 1);
        let e = &orbits[0];
        assert_eq!(e.degree(), 3);
        assert_eq!(e.root.pow(3), Nf::from_q(&e.field, &qi(2)));
        // over Q(cbrt 2), x^3 - 2 = (x - r)(x^2 + r x + r^2)
        let k = e.field.clone();
        let h2: Poly<Nf> = QPoly::from_ints(&[-2, 0, 0, 1]).lift(&k);
        let mut degs: Vec<usize> = factor_over_nf(&h2).iter().map(|(g, _)| g.degree().unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 2]);
    }
}
