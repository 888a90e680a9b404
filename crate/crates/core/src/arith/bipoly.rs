//! Sparse bivariate polynomials over a [`Field`] and local intersection
//! multiplicities at the origin.

use std::collections::BTreeMap;
use std::fmt;

use super::poly::Poly;
use super::{Field, Q};

/// `sum c_{ij} x^i y^j`, keyed by `(i, j)`, zero terms never stored.
#[derive(Clone, PartialEq)]
pub struct BiPoly<F: Field> {
    terms: BTreeMap<(u32, u32), F>,
    ctx: F::Ctx,
}

impl<F: Field> fmt::Debug for BiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntersectionError {
    #[error("curves share a component through the point")]
    CommonComponent,
}

impl<F: Field> BiPoly<F> {
    pub fn zero(ctx: &F::Ctx) -> Self {
        BiPoly { terms: BTreeMap::new(), ctx: ctx.clone() }
    }

    pub fn constant(c: F) -> Self {
        let ctx = c.ctx();
        Self::monomial(c, 0, 0, &ctx)
    }

    pub fn monomial(c: F, i: u32, j: u32, ctx: &F::Ctx) -> Self {
        let mut p = Self::zero(ctx);
        p.add_term(i, j, c);
        p
    }

    pub fn x(ctx: &F::Ctx) -> Self {
        Self::monomial(F::one(ctx), 1, 0, ctx)
    }

    pub fn y(ctx: &F::Ctx) -> Self {
        Self::monomial(F::one(ctx), 0, 1, ctx)
    }

    /// `sum_j coeffs[j](x) y^j`
    pub fn from_y_coeffs(coeffs: &[Poly<F>], ctx: &F::Ctx) -> Self {
        let mut p = Self::zero(ctx);
        for (j, c) in coeffs.iter().enumerate() {
            for (i, a) in c.coeffs().iter().enumerate() {
                p.add_term(i as u32, j as u32, a.clone());
            }
        }
        p
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> F {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: F) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.remove(&(i, j));
        let v = match entry {
            Some(old) => old.add(&c),
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert((i, j), v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    /// Lowest total degree of a nonzero term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).min()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&(i, j), c) in &o.terms {
            r.add_term(i, j, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&(i, j), c) in &o.terms {
            r.add_term(i, j, c.neg());
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(&self.ctx);
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &o.terms {
                r.add_term(i + k, j + l, a.mul(b));
            }
        }
        r
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut r = Self::zero(&self.ctx);
        for (&(i, j), a) in &self.terms {
            r.add_term(i, j, a.mul(c));
        }
        r
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(F::one(&self.ctx));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by `x^a y^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((i + a, j + b), c.clone())).collect(),
            ctx: self.ctx.clone(),
        }
    }

    pub fn partial_x(&self) -> Self {
        let mut r = Self::zero(&self.ctx);
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                r.add_term(i - 1, j, c.mul(&F::from_q(&self.ctx, &Q::from_integer(i.into()))));
            }
        }
        r
    }

    pub fn partial_y(&self) -> Self {
        let mut r = Self::zero(&self.ctx);
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                r.add_term(i, j - 1, c.mul(&F::from_q(&self.ctx, &Q::from_integer(j.into()))));
            }
        }
        r
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        let mut acc = F::zero(&self.ctx);
        for (&(i, j), c) in &self.terms {
            acc = acc.add(&c.mul(&x.pow(i)).mul(&y.pow(j)));
        }
        acc
    }

    /// Substitutes `x -> sx`, `y -> sy` for bivariate `sx`, `sy`.
    pub fn substitute(&self, sx: &Self, sy: &Self) -> Self {
        let maxi = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let maxj = self.terms.keys().map(|k| k.1).max().unwrap_or(0);
        let mut px = vec![Self::constant(F::one(&self.ctx))];
        for _ in 0..maxi {
            px.push(px.last().unwrap().mul(sx));
        }
        let mut py = vec![Self::constant(F::one(&self.ctx))];
        for _ in 0..maxj {
            py.push(py.last().unwrap().mul(sy));
        }
        let mut r = Self::zero(&self.ctx);
        for (&(i, j), c) in &self.terms {
            r = r.add(&px[i as usize].mul(&py[j as usize]).scale(c));
        }
        r
    }

    /// `f(x + x0, y + y0)`: moves the point `(x0, y0)` to the origin.
    pub fn translate(&self, x0: &F, y0: &F) -> Self {
        let one = F::one(&self.ctx);
        let sx = Self::monomial(one.clone(), 1, 0, &self.ctx).add(&Self::constant(x0.clone()));
        let sy = Self::monomial(one, 0, 1, &self.ctx).add(&Self::constant(y0.clone()));
        self.substitute(&sx, &sy)
    }

    /// Homogeneous part of degree `d`, as coefficients of `x^{d-k} y^k`.
    pub fn homogeneous_part(&self, d: u32) -> Vec<F> {
        (0..=d).map(|k| self.coeff(d - k, k)).collect()
    }

    /// `f(x, 0)` as a univariate polynomial in x.
    pub fn at_y_zero(&self) -> Poly<F> {
        self.column(0)
    }

    /// Coefficient of `y^j` as a polynomial in x.
    pub fn column(&self, j: u32) -> Poly<F> {
        let maxi = self.terms.keys().filter(|k| k.1 == j).map(|k| k.0).max();
        let Some(maxi) = maxi else { return Poly::zero(&self.ctx) };
        let v = (0..=maxi).map(|i| self.coeff(i, j)).collect();
        Poly::new(v, self.ctx.clone())
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// Coefficients in y as polynomials in x.
    pub fn y_coeffs(&self) -> Vec<Poly<F>> {
        match self.y_degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|j| self.column(j)).collect(),
        }
    }

    /// Exact division by `x^a y^b`; `None` if some term is not divisible.
    pub fn divide_monomial(&self, a: u32, b: u32) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            if i < a || j < b {
                return None;
            }
            terms.insert((i - a, j - b), c.clone());
        }
        Some(BiPoly { terms, ctx: self.ctx.clone() })
    }

    /// `f(x0, y)` as a polynomial in y.
    pub fn at_x(&self, x0: &F) -> Poly<F> {
        let cols: Vec<F> = self.y_coeffs().iter().map(|c| c.eval(x0)).collect();
        Poly::new(cols, self.ctx.clone())
    }

    pub fn map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> BiPoly<G> {
        let mut out = BiPoly::zero(ctx);
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, f(c));
        }
        out
    }

    pub fn swap_xy(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(), ctx: self.ctx.clone() }
    }
}

impl BiPoly<Q> {
    pub fn lift<G: Field>(&self, ctx: &G::Ctx) -> BiPoly<G> {
        self.map(ctx, |c| G::from_q(ctx, c))
    }

    /// Resultant with respect to y, as a polynomial in x, from the
    /// Sylvester matrix of the formal y-degrees (evaluation at integer
    /// points and interpolation).
    pub fn resultant_y(&self, other: &Self) -> Poly<Q> {
        let (Some(m), Some(n)) = (self.y_degree(), other.y_degree()) else {
            return Poly::zero(&());
        };
        let (m, n) = (m as usize, n as usize);
        if m == 0 && n == 0 {
            return Poly::one(&());
        }
        let dx = |p: &Self| p.terms.keys().map(|k| k.0 as usize).max().unwrap_or(0);
        let bound = dx(self) * n + dx(other) * m;
        let fc = self.y_coeffs();
        let gc = other.y_coeffs();
        let pts: Vec<(Q, Q)> = (0..=bound as i64)
            .map(|k| {
                let x = Q::from_integer(k.into());
                let fv: Vec<Q> = fc.iter().map(|c| c.eval(&x)).collect();
                let gv: Vec<Q> = gc.iter().map(|c| c.eval(&x)).collect();
                (x, sylvester_det(&fv, &gv, m, n))
            })
            .collect();
        Poly::interpolate(&pts)
    }
}

/// Determinant of the Sylvester matrix of `f` (formal degree m) and `g`
/// (formal degree n), coefficients ascending.
fn sylvester_det(f: &[Q], g: &[Q], m: usize, n: usize) -> Q {
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut r = vec![Q::from_integer(0.into()); size];
        for k in 0..=m {
            r[i + k] = f.get(m - k).cloned().unwrap_or_else(|| Q::from_integer(0.into()));
        }
        rows.push(r);
    }
    for i in 0..m {
        let mut r = vec![Q::from_integer(0.into()); size];
        for k in 0..=n {
            r[i + k] = g.get(n - k).cloned().unwrap_or_else(|| Q::from_integer(0.into()));
        }
        rows.push(r);
    }
    det_q(rows)
}

/// Determinant over Q by Gaussian elimination.
pub fn det_q(mut a: Vec<Vec<Q>>) -> Q {
    let n = a.len();
    let mut det = Q::from_integer(1.into());
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !Field::is_zero(&a[r][col])) else {
            return Q::from_integer(0.into());
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let piv = a[col][col].clone();
        det *= &piv;
        for r in col + 1..n {
            if Field::is_zero(&a[r][col]) {
                continue;
            }
            let f = &a[r][col] / &piv;
            for c in col..n {
                let v = &f * &a[col][c];
                a[r][c] -= v;
            }
        }
    }
    det
}

/// Intersection multiplicity of `f = 0` and `g = 0` at the origin
/// (Fulton's algorithm). Errors if the curves share a component through
/// the origin.
pub fn intersection_at_origin<F: Field>(f: &BiPoly<F>, g: &BiPoly<F>) -> Result<usize, IntersectionError> {
    let ctx = f.ctx().clone();
    let zero = F::zero(&ctx);
    let (mut f, mut g) = (f.clone(), g.clone());
    let mut total = 0usize;
    loop {
        if !f.eval(&zero, &zero).is_zero() || !g.eval(&zero, &zero).is_zero() {
            return Ok(total);
        }
        let f0 = f.at_y_zero();
        let g0 = g.at_y_zero();
        if f0.is_zero() && g0.is_zero() {
            return Err(IntersectionError::CommonComponent);
        }
        if g0.is_zero() {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        if f0.is_zero() {
            // f = y h: I(y, g) + I(h, g)
            total += g0.low_order().unwrap();
            let h = f.divide_monomial(0, 1).expect("y divides f");
            f = h;
            continue;
        }
        let (r, s) = (f0.degree().unwrap(), g0.degree().unwrap());
        if r > s {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        let (lf, lg) = (f0.lc(), g0.lc());
        g = g.scale(&lf).sub(&f.shift((s - r) as u32, 0).scale(&lg));
        if g.is_zero() {
            return Err(IntersectionError::CommonComponent);
        }
    }
}
