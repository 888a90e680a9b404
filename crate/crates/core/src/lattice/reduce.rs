use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::GramLattice;
use crate::arith::intmat::IntMatrix;
use crate::arith::Q;

/// Gram-Schmidt data of a Gram matrix: `mu[i][j]` for `j < i` and the
/// squared lengths `b[i]` of the orthogonalized vectors.
fn gram_schmidt(g: &IntMatrix) -> (Vec<Vec<Q>>, Vec<Q>) {
    let n = g.rows();
    let mut mu = vec![vec![Q::zero(); n]; n];
    let mut b = vec![Q::zero(); n];
    for i in 0..n {
        for j in 0..i {
            let mut s = Q::from_integer(g[(i, j)].clone());
            for k in 0..j {
                s -= &mu[j][k] * &mu[i][k] * &b[k];
            }
            mu[i][j] = s / &b[j];
        }
        let mut s = Q::from_integer(g[(i, i)].clone());
        for k in 0..i {
            s -= &mu[i][k] * &mu[i][k] * &b[k];
        }
        b[i] = s;
    }
    (mu, b)
}

/// LLL reduction (delta = 3/4) of a positive definite lattice. Returns
/// the reduced Gram matrix and the transformation whose rows express the
/// new basis in the old one.
pub fn lll_reduce(l: &GramLattice) -> (IntMatrix, IntMatrix) {
    let n = l.rank();
    let mut g = l.gram().clone();
    let mut t = IntMatrix::identity(n);
    if n < 2 {
        return (g, t);
    }
    let three_quarters = Q::new(3.into(), 4.into());
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let (mu, _) = gram_schmidt(&g);
            let r = mu[k][j].round().to_integer();
            if r.is_zero() {
                continue;
            }
            // b_k -= r b_j
            for c in 0..n {
                let v = &r * &t[(j, c)];
                t[(k, c)] -= v;
            }
            for c in 0..n {
                let v = &r * &g[(j, c)];
                g[(k, c)] -= v;
            }
            for c in 0..n {
                let v = &r * &g[(c, j)];
                g[(c, k)] -= v;
            }
        }
        let (mu, b) = gram_schmidt(&g);
        let m = &mu[k][k - 1];
        if b[k] >= (&three_quarters - m * m) * &b[k - 1] {
            k += 1;
        } else {
            g.swap_rows(k, k - 1);
            g.swap_cols(k, k - 1);
            t.swap_rows(k, k - 1);
            k = (k - 1).max(1);
        }
    }
    (g, t)
}

/// All vectors `x` (both signs, original coordinates) with `x . x = norm`
/// in a positive definite lattice, by Fincke-Pohst enumeration on the
/// LLL-reduced basis with exact rational bounds.
pub fn vectors_of_norm(l: &GramLattice, norm: u64) -> Vec<Vec<BigInt>> {
    let n = l.rank();
    if n == 0 {
        return Vec::new();
    }
    let (g, t) = lll_reduce(l);
    let (mu, b) = gram_schmidt(&g);
    let target = Q::from_integer(norm.into());
    let mut found = Vec::new();
    let mut x = vec![BigInt::zero(); n];
    enumerate(n - 1, &target, &mu, &b, &mut x, &target, &mut found);
    found
        .into_iter()
        .map(|coords| (0..n).map(|c| (0..n).map(|i| &coords[i] * &t[(i, c)]).sum::<BigInt>()).collect())
        .collect()
}

fn enumerate(
    j: usize,
    budget: &Q,
    mu: &[Vec<Q>],
    b: &[Q],
    x: &mut Vec<BigInt>,
    target: &Q,
    out: &mut Vec<Vec<BigInt>>,
) {
    let n = x.len();
    let mut c = Q::zero();
    for i in j + 1..n {
        c += &mu[i][j] * Q::from_integer(x[i].clone());
    }
    let ratio = budget / &b[j];
    let s = ratio.to_f64().unwrap_or(f64::MAX).max(0.0).sqrt();
    let cf = c.to_f64().unwrap_or(0.0);
    let lo = (-cf - s).floor() as i64 - 1;
    let hi = (-cf + s).ceil() as i64 + 1;
    for v in lo..=hi {
        let xv = Q::from_integer(v.into());
        let shifted = &xv + &c;
        let used = &b[j] * &shifted * &shifted;
        if used > *budget {
            continue;
        }
        x[j] = BigInt::from(v);
        let rest = budget - &used;
        if j == 0 {
            if rest.is_zero() && x.iter().any(|v| !v.is_zero()) && target.is_positive() {
                out.push(x.clone());
            }
        } else {
            enumerate(j - 1, &rest, mu, b, x, target, out);
        }
    }
    x[j] = BigInt::zero();
}
