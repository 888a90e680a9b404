use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Q};

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
    ctx: F::Ctx,
}

pub type QPoly = Poly<Q>;

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>, ctx: F::Ctx) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, ctx }
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        Poly { coeffs: Vec::new(), ctx: ctx.clone() }
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Self::constant(F::one(ctx))
    }

    pub fn constant(c: F) -> Self {
        let ctx = c.ctx();
        Self::new(vec![c], ctx)
    }

    /// `c * x^k`
    pub fn monomial(c: F, k: usize) -> Self {
        let ctx = c.ctx();
        let mut v = vec![F::zero(&ctx); k];
        v.push(c);
        Self::new(v, ctx)
    }

    pub fn x(ctx: &F::Ctx) -> Self {
        Self::monomial(F::one(ctx), 1)
    }

    /// `x - r`
    pub fn linear_root(r: &F) -> Self {
        let ctx = r.ctx();
        Self::new(vec![r.neg(), F::one(&ctx)], ctx)
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1.
    pub fn deg_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.ctx.clone())
    }

    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Some(i) => self.scale(&i),
            None => self.clone(),
        }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![F::zero(&self.ctx); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v, self.ctx.clone())
    }

    pub fn add_poly(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        Self::new(v, self.ctx.clone())
    }

    pub fn sub_poly(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        Self::new(v, self.ctx.clone())
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut v = vec![F::zero(&self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Self::new(v, self.ctx.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..e {
            acc = acc.mul_poly(self);
        }
        acc
    }

    /// Euclidean division. Panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        let inv = d.lc().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return (Self::zero(&self.ctx), self.clone());
        }
        let mut quo = vec![F::zero(&self.ctx); n - dd];
        for k in (0..n - dd).rev() {
            let c = rem[k + dd].mul(&inv);
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].sub(&c.mul(dc));
                }
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quo, self.ctx.clone()), Self::new(rem, self.ctx.clone()))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Quotient if `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (qu, r) = self.div_rem(d);
        r.is_zero().then_some(qu)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, g monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let ctx = &self.ctx;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(ctx), Self::zero(ctx));
        let (mut t0, mut t1) = (Self::zero(ctx), Self::one(ctx));
        while !r1.is_zero() {
            let (qu, r) = r0.div_rem(&r1);
            let s = s0.sub_poly(&qu.mul_poly(&s1));
            let t = t0.sub_poly(&qu.mul_poly(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.lc().inv() {
            Some(i) => (r0.scale(&i), s0.scale(&i), t0.scale(&i)),
            None => (r0, s0, t0),
        }
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&F::from_q(&self.ctx, &Q::from_integer((i as i64).into()))))
            .collect();
        Self::new(v, self.ctx.clone())
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// `self(inner(x))`
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_poly(inner).add_poly(&Self::constant(c.clone()));
        }
        acc
    }

    /// Multiplicity of `x = r` as a root.
    pub fn root_multiplicity(&self, r: &F) -> Option<usize> {
        self.valuation(&Self::linear_root(r))
    }

    /// Largest `k` with `g^k | self`; `None` for the zero polynomial.
    pub fn valuation(&self, g: &Self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut k = 0;
        let mut cur = self.clone();
        while let Some(qu) = cur.exact_div(g) {
            cur = qu;
            k += 1;
        }
        Some(k)
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Yun's squarefree decomposition: `[(g_i, i)]` with each `g_i` monic
    /// squarefree, pairwise coprime, and `self = lc * prod g_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let d = f.derivative();
        let a0 = f.gcd(&d);
        let mut b = f.div_rem(&a0).0;
        let mut c = d.div_rem(&a0).0;
        let mut dd = c.sub_poly(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = dd.div_rem(&a).0;
            dd = c.sub_poly(&b.derivative());
            i += 1;
        }
        out
    }

    /// Monic squarefree part.
    pub fn squarefree_part(&self) -> Self {
        let mut acc = Self::one(&self.ctx);
        for (g, _) in self.squarefree_decomposition() {
            acc = acc.mul_poly(&g);
        }
        acc
    }

    /// Resultant via the Euclidean algorithm over the field.
    pub fn resultant(&self, other: &Self) -> F {
        let ctx = self.ctx.clone();
        let (Some(mut m), Some(mut n)) = (self.degree(), other.degree()) else {
            return F::zero(&ctx);
        };
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = F::one(&ctx);
        loop {
            if n == 0 {
                return acc.mul(&b.lc().pow(m as u32));
            }
            let r = a.rem(&b);
            let Some(k) = r.degree() else {
                return F::zero(&ctx);
            };
            // res(a, b) = (-1)^{mn} lc(b)^{m-k} res(b, r)
            if (m * n) % 2 == 1 {
                acc = acc.neg();
            }
            acc = acc.mul(&b.lc().pow((m - k) as u32));
            a = b;
            b = r;
            m = n;
            n = k;
        }
    }

    pub fn map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect(), ctx.clone())
    }
}

impl Eq for QPoly {}

impl QPoly {
    pub fn from_ints(v: &[i64]) -> Self {
        Poly::new(v.iter().map(|&c| super::qi(c)).collect(), ())
    }

    /// Newton interpolation through points with distinct abscissae.
    pub fn interpolate(points: &[(Q, Q)]) -> Self {
        let n = points.len();
        let mut coef: Vec<Q> = points.iter().map(|p| p.1.clone()).collect();
        for j in 1..n {
            for i in (j..n).rev() {
                coef[i] = (&coef[i] - &coef[i - 1]) / (&points[i].0 - &points[i - j].0);
            }
        }
        let mut acc = QPoly::zero(&());
        for i in (0..n).rev() {
            acc = &(&acc * &QPoly::linear_root(&points[i].0)) + &QPoly::constant(coef[i].clone());
        }
        acc
    }

    /// Lift into a field carrying context `ctx`.
    pub fn lift<G: Field>(&self, ctx: &G::Ctx) -> Poly<G> {
        self.map(ctx, |c| G::from_q(ctx, c))
    }
}

impl<'a, F: Field> Add for &'a Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Poly<F> {
        self.add_poly(rhs)
    }
}

impl<'a, F: Field> Sub for &'a Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Poly<F> {
        self.sub_poly(rhs)
    }
}

impl<'a, F: Field> Mul for &'a Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Poly<F> {
        self.mul_poly(rhs)
    }
}

impl<'a, F: Field> Neg for &'a Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| c.neg()).collect(), self.ctx.clone())
    }
}
