//! Factorization of rational univariate polynomials into irreducibles:
//! squarefree decomposition, Berlekamp splitting modulo a small prime,
//! Hensel lifting and exhaustive factor recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::QPoly;
use super::Q;

/// Integer polynomial, ascending coefficients, no trailing zeros.
type ZPoly = Vec<BigInt>;

fn trim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Clears denominators and content: `f = c * prim` with `prim` primitive
/// in Z[x] and positive leading coefficient.
pub fn primitive_integer_part(f: &QPoly) -> ZPoly {
    let mut den = BigInt::one();
    for c in f.coeffs() {
        den = den.lcm(c.denom());
    }
    let ints: ZPoly = f.coeffs().iter().map(|c| (c * Q::from_integer(den.clone())).to_integer()).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if content.is_zero() {
        return Vec::new();
    }
    if ints.last().unwrap().is_negative() {
        content = -content;
    }
    trim(ints.into_iter().map(|c| c / &content).collect())
}

fn zpoly_to_q(f: &ZPoly) -> QPoly {
    QPoly::new(f.iter().map(|c| Q::from_integer(c.clone())).collect(), ())
}

/// Monic irreducible factors over Q with multiplicities, sorted by
/// (degree, coefficients). Constants yield an empty list.
pub fn factor_rational(f: &QPoly) -> Vec<(QPoly, usize)> {
    let mut out = Vec::new();
    for (g, mult) in f.squarefree_decomposition() {
        for h in factor_squarefree(&g) {
            out.push((h, mult));
        }
    }
    out.sort_by(|a, b| poly_order(&a.0, &b.0));
    out
}

/// Irreducible monic factors of a squarefree polynomial.
pub fn factor_squarefree(f: &QPoly) -> Vec<QPoly> {
    let Some(n) = f.degree() else { return Vec::new() };
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![f.monic()];
    }
    let z = primitive_integer_part(f);
    // pull out x factors
    let mut out = Vec::new();
    let shift = z.iter().position(|c| !c.is_zero()).unwrap();
    if shift > 0 {
        out.push(QPoly::x(&()));
    }
    let z: ZPoly = z[shift..].to_vec();
    if z.len() >= 2 {
        for g in zassenhaus(&z) {
            out.push(zpoly_to_q(&g).monic());
        }
    }
    out.sort_by(poly_order);
    out
}

/// Canonical ordering used throughout: by degree, then coefficients
/// from the top down.
pub fn poly_order(a: &QPoly, b: &QPoly) -> std::cmp::Ordering {
    a.deg_i().cmp(&b.deg_i()).then_with(|| {
        for k in (0..a.coeffs().len()).rev() {
            let o = a.coeff(k).cmp(&b.coeff(k));
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    })
}

// ---------------------------------------------------------------- mod p

#[derive(Clone, Copy)]
struct Fp(u64);

impl Fp {
    fn red(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.0)).to_u64().unwrap()
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }
    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.0 - 2)
    }
    fn trim(&self, mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }
    fn reduce_poly(&self, f: &ZPoly) -> Vec<u64> {
        self.trim(f.iter().map(|c| self.red(c)).collect())
    }
    fn mulp(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut v = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                v[i + j] = self.add(v[i + j], self.mul(x, y));
            }
        }
        self.trim(v)
    }
    fn subp(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        let v = (0..n).map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect();
        self.trim(v)
    }
    fn addp(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        let v = (0..n).map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect();
        self.trim(v)
    }
    fn divrem(&self, a: &[u64], d: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let dd = d.len() - 1;
        let inv = self.inv(*d.last().unwrap());
        let mut rem = a.to_vec();
        if rem.len() <= dd {
            return (Vec::new(), self.trim(rem));
        }
        let mut quo = vec![0; rem.len() - dd];
        for k in (0..rem.len() - dd).rev() {
            let c = self.mul(rem[k + dd], inv);
            if c != 0 {
                for (j, &x) in d.iter().enumerate() {
                    rem[k + j] = self.sub(rem[k + j], self.mul(c, x));
                }
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        (self.trim(quo), self.trim(rem))
    }
    fn monic(&self, a: &[u64]) -> Vec<u64> {
        match a.last() {
            None => Vec::new(),
            Some(&l) => {
                let i = self.inv(l);
                a.iter().map(|&c| self.mul(c, i)).collect()
            }
        }
    }
    fn gcd(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.divrem(&a, &b).1;
            a = b;
            b = r;
        }
        self.monic(&a)
    }
    /// `(g, s, t)` with `s a + t b = g` monic.
    fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (qq, r) = self.divrem(&r0, &r1);
            let s = self.subp(&s0, &self.mulp(&qq, &s1));
            let t = self.subp(&t0, &self.mulp(&qq, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        let i = self.inv(*r0.last().unwrap());
        let sc = |v: &[u64]| self.trim(v.iter().map(|&c| self.mul(c, i)).collect());
        (sc(&r0), sc(&s0), sc(&t0))
    }
    /// Berlekamp factorization of a monic squarefree polynomial.
    fn berlekamp(&self, f: &[u64]) -> Vec<Vec<u64>> {
        let n = f.len() - 1;
        if n <= 1 {
            return vec![f.to_vec()];
        }
        let p = self.0;
        // rows: x^{ip} mod f
        let mut xp = vec![1u64];
        let x = vec![0, 1];
        {
            // x^p mod f by square and multiply
            let mut base = x.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    xp = self.divrem(&self.mulp(&xp, &base), f).1;
                }
                base = self.divrem(&self.mulp(&base, &base), f).1;
                e >>= 1;
            }
        }
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
        let mut cur = vec![1u64];
        for _ in 0..n {
            let mut r = cur.clone();
            r.resize(n, 0);
            rows.push(r);
            cur = self.divrem(&self.mulp(&cur, &xp), f).1;
        }
        // solve w (Q - I) = 0, i.e. (Q - I)^T w^T = 0
        let mut m: Vec<Vec<u64>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        let v = rows[i][j];
                        if i == j {
                            self.sub(v, 1)
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        let basis = self.nullspace(&mut m, n);
        let r = basis.len();
        let mut factors = vec![f.to_vec()];
        for b in basis.iter() {
            if factors.len() == r {
                break;
            }
            let b = self.trim(b.clone());
            if b.len() <= 1 {
                continue;
            }
            let mut next = Vec::new();
            for u in factors {
                if u.len() <= 2 {
                    next.push(u);
                    continue;
                }
                let mut pieces = vec![u];
                for s in 0..p {
                    let mut split = Vec::new();
                    let mut changed = false;
                    for piece in pieces {
                        if piece.len() <= 2 {
                            split.push(piece);
                            continue;
                        }
                        let g = self.gcd(&piece, &self.subp(&b, &[s]));
                        if g.len() > 1 && g.len() < piece.len() {
                            let other = self.divrem(&piece, &g).0;
                            split.push(g);
                            split.push(self.monic(&other));
                            changed = true;
                        } else {
                            split.push(piece);
                        }
                    }
                    pieces = split;
                    let _ = changed;
                }
                next.extend(pieces);
            }
            factors = next;
        }
        factors
    }

    fn nullspace(&self, m: &mut [Vec<u64>], n: usize) -> Vec<Vec<u64>> {
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| m[r][col] != 0) else { continue };
            m.swap(row, p);
            let inv = self.inv(m[row][col]);
            for c in 0..n {
                m[row][c] = self.mul(m[row][c], inv);
            }
            for r in 0..n {
                if r != row && m[r][col] != 0 {
                    let k = m[r][col];
                    for c in 0..n {
                        let v = self.mul(k, m[row][c]);
                        m[r][c] = self.sub(m[r][c], v);
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u64; n];
                v[fc] = 1;
                for (r, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = self.sub(0, m[r][fc]);
                }
                v
            })
            .collect()
    }
}

const PRIMES: [u64; 40] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
    113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

fn symmetric_mod(v: &BigInt, m: &BigInt) -> BigInt {
    let r = v.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    trim(v)
}

/// Exact division in Z[x]; `None` if not divisible.
fn zdiv_exact(a: &ZPoly, d: &ZPoly) -> Option<ZPoly> {
    let (qq, r) = zpoly_to_q(a).div_rem(&zpoly_to_q(d));
    if !r.is_zero() || qq.coeffs().iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(qq.coeffs().iter().map(|c| c.to_integer()).collect())
}

/// Factors a primitive squarefree integer polynomial of degree >= 1 with
/// nonzero constant term.
fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.clone()];
    }
    let lc = f.last().unwrap().clone();
    let df = {
        let d: ZPoly = f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
        d
    };
    // choose the good prime with the fewest modular factors among the first few
    let mut best: Option<(Fp, Vec<Vec<u64>>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        let fp = Fp(p);
        if fp.red(&lc) == 0 {
            continue;
        }
        let fm = fp.reduce_poly(f);
        let g = fp.gcd(&fm, &fp.reduce_poly(&df));
        if g.len() != 1 {
            continue;
        }
        let facs = fp.berlekamp(&fp.monic(&fm));
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((fp, facs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (fp, modular) = best.expect("no good prime found for factorization");
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    // coefficient bound for factors of f times |lc|
    let maxc = f.iter().map(|c| c.abs()).max().unwrap();
    let bound = BigInt::from(2).pow(n as u32) * BigInt::from(n + 1) * &maxc * lc.abs() * 2 + 1;
    let p = BigInt::from(fp.0);
    let mut pk = p.clone();
    let mut k = 1u32;
    while pk <= bound {
        pk *= &p;
        k += 1;
    }

    let lifted = hensel_lift(f, &modular, fp, k);

    // recombination
    let mut remaining: Vec<ZPoly> = lifted;
    let mut g = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = false;
        let idx: Vec<usize> = (0..remaining.len()).collect();
        for subset in combinations(&idx, size) {
            let glc = g.last().unwrap().clone();
            let mut cand: ZPoly = vec![glc.clone()];
            for &i in &subset {
                cand = zmul(&cand, &remaining[i]);
            }
            let cand: ZPoly = trim(cand.iter().map(|c| symmetric_mod(c, &pk)).collect());
            let cand = primitive_integer_part(&zpoly_to_q(&cand));
            if cand.len() < 2 {
                continue;
            }
            if let Some(qq) = zdiv_exact(&g, &cand) {
                out.push(cand);
                g = primitive_integer_part(&zpoly_to_q(&qq));
                remaining =
                    remaining.into_iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|(_, v)| v).collect();
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if g.len() > 1 {
        out.push(g);
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// Lifts `f = lc * prod g_i (mod p)` with monic `g_i` to monic factors
/// modulo `p^k`.
fn hensel_lift(f: &ZPoly, modular: &[Vec<u64>], fp: Fp, k: u32) -> Vec<ZPoly> {
    let p = BigInt::from(fp.0);
    let pk = p.pow(k);
    let mut out = Vec::new();
    let mut target = f.clone();
    let mut rest_mod: Vec<Vec<u64>> = modular.to_vec();
    while rest_mod.len() > 1 {
        let g0 = rest_mod.remove(0);
        let mut h0 = vec![fp.red(target.last().unwrap())];
        for r in &rest_mod {
            h0 = fp.mulp(&h0, r);
        }
        let (g, h) = lift_pair(&target, &g0, &h0, fp, k);
        out.push(g);
        // continue by lifting the remaining factors against h (mod p^k)
        target = h.iter().map(|c| symmetric_mod(c, &pk)).collect();
    }
    let last = rest_mod.remove(0);
    let _ = last;
    // the final cofactor, made monic modulo p^k
    let lcinv = target.last().unwrap().modinv(&pk).expect("leading coefficient invertible mod p^k");
    out.push(target.iter().map(|c| (c * &lcinv).mod_floor(&pk)).collect());
    out
}

/// Linear Hensel lifting of `f = g * h (mod p)` with `g` monic to
/// modulus `p^k`. Returns `(g, h)` as integer polynomials.
fn lift_pair(f: &ZPoly, g0: &[u64], h0: &[u64], fp: Fp, k: u32) -> (ZPoly, ZPoly) {
    let p = BigInt::from(fp.0);
    let (_, s, t) = fp.ext_gcd(g0, h0);
    let to_z = |v: &[u64]| -> ZPoly { v.iter().map(|&c| BigInt::from(c)).collect() };
    let mut g = to_z(g0);
    let mut h = to_z(h0);
    let mut pj = p.clone();
    for _ in 1..k {
        // e = (f - g h) / p^j mod p
        let gh = zmul(&g, &h);
        let n = f.len().max(gh.len());
        let diff: ZPoly =
            (0..n).map(|i| f.get(i).cloned().unwrap_or_default() - gh.get(i).cloned().unwrap_or_default()).collect();
        let e: Vec<u64> = fp.trim(diff.iter().map(|c| fp.red(&(c / &pj))).collect());
        if !e.is_empty() {
            let te = fp.mulp(&t, &e);
            let (qq, r) = fp.divrem(&te, g0);
            let dg = r;
            let dh = fp.addp(&fp.mulp(&s, &e), &fp.mulp(&qq, h0));
            let add = |a: &mut ZPoly, d: &[u64]| {
                if a.len() < d.len() {
                    a.resize(d.len(), BigInt::zero());
                }
                for (i, &c) in d.iter().enumerate() {
                    a[i] += BigInt::from(c) * &pj;
                }
            };
            add(&mut g, &dg);
            add(&mut h, &dh);
        }
        pj *= &p;
    }
    let g = g.iter().map(|c| c.mod_floor(&pj)).collect();
    let h = h.iter().map(|c| symmetric_mod(c, &pj)).collect();
    (trim(g), trim(h))
}
