//! The 240 roots of E8 in the even coordinate model, with precomputed
//! product tables and bitsets for the backtracking searches.
//!
//! Coordinates are stored doubled: integer roots `±e_i ± e_j` become
//! entries `±2`, half-integer roots become entries `±1`. Products use the
//! negative definite convention, `u . v = -(sum u_i v_i) / 4` on doubled
//! coordinates, so every root squares to -2.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arith::intmat::IntMatrix;
use crate::arith::Q;
use crate::lattice::GramLattice;

pub const ROOT_COUNT: usize = 240;

/// 240-bit set of root indices.
pub type Bits = [u64; 4];

pub const ALL: Bits = [u64::MAX, u64::MAX, u64::MAX, (1u64 << 48) - 1];

pub fn bits_and(a: &Bits, b: &Bits) -> Bits {
    [a[0] & b[0], a[1] & b[1], a[2] & b[2], a[3] & b[3]]
}

pub fn bits_iter(b: Bits) -> impl Iterator<Item = usize> {
    (0..4).flat_map(move |w| {
        let mut word = b[w];
        std::iter::from_fn(move || {
            if word == 0 {
                None
            } else {
                let t = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + t)
            }
        })
    })
}

pub fn bits_is_empty(b: &Bits) -> bool {
    b.iter().all(|&w| w == 0)
}

pub struct E8Data {
    pub roots: Vec<[i8; 8]>,
    pub basis_coords: Vec<[i64; 8]>,
    dot: Vec<i8>,
    masks: Vec<[Bits; 5]>,
    /// Root indices of the simple roots (Bourbaki labels 1..8).
    pub simple: [usize; 8],
}

/// Bourbaki simple roots, doubled coordinates.
const SIMPLE: [[i8; 8]; 8] = [
    [1, -1, -1, -1, -1, -1, -1, 1],
    [2, 2, 0, 0, 0, 0, 0, 0],
    [-2, 2, 0, 0, 0, 0, 0, 0],
    [0, -2, 2, 0, 0, 0, 0, 0],
    [0, 0, -2, 2, 0, 0, 0, 0],
    [0, 0, 0, -2, 2, 0, 0, 0],
    [0, 0, 0, 0, -2, 2, 0, 0],
    [0, 0, 0, 0, 0, -2, 2, 0],
];

pub fn doubled_product(a: &[i8; 8], b: &[i8; 8]) -> i64 {
    let s: i64 = a.iter().zip(b).map(|(&x, &y)| x as i64 * y as i64).sum();
    -s / 4
}

fn generate_roots() -> Vec<[i8; 8]> {
    let mut v = Vec::with_capacity(ROOT_COUNT);
    for i in 0..8 {
        for j in i + 1..8 {
            for si in [2i8, -2] {
                for sj in [2i8, -2] {
                    let mut r = [0i8; 8];
                    r[i] = si;
                    r[j] = sj;
                    v.push(r);
                }
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            let mut r = [1i8; 8];
            for (k, c) in r.iter_mut().enumerate() {
                if mask & (1 << k) != 0 {
                    *c = -1;
                }
            }
            v.push(r);
        }
    }
    v.sort_by(|a, b| b.cmp(a));
    v
}

/// Inverse of the simple-root matrix over Q (columns = simple roots).
fn inverse_simple() -> Vec<Vec<Q>> {
    let n = 8;
    let mut a: Vec<Vec<Q>> = (0..n)
        .map(|r| {
            let mut row: Vec<Q> = (0..n).map(|c| Q::from_integer(SIMPLE[c][r].into())).collect();
            row.extend((0..n).map(|c| Q::from_integer(BigInt::from((r == c) as i64))));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("simple roots are independent");
        a.swap(col, p);
        let inv = a[col][col].recip();
        for c in 0..2 * n {
            let v = &a[col][c] * &inv;
            a[col][c] = v;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let v = &f * &a[col][c];
                    a[r][c] -= v;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn build() -> E8Data {
    let roots = generate_roots();
    assert_eq!(roots.len(), ROOT_COUNT);
    let inv = inverse_simple();
    let basis_coords: Vec<[i64; 8]> = roots
        .iter()
        .map(|r| {
            let mut c = [0i64; 8];
            for (i, ci) in c.iter_mut().enumerate() {
                let v: Q = (0..8).map(|k| &inv[i][k] * Q::from_integer(r[k].into())).sum();
                assert!(v.is_integer(), "E8 root outside the lattice spanned by simple roots");
                *ci = v.to_integer().to_i64().unwrap();
            }
            c
        })
        .collect();
    let mut dot = vec![0i8; ROOT_COUNT * ROOT_COUNT];
    let mut masks = vec![[[0u64; 4]; 5]; ROOT_COUNT];
    for i in 0..ROOT_COUNT {
        for j in 0..ROOT_COUNT {
            let d = doubled_product(&roots[i], &roots[j]);
            dot[i * ROOT_COUNT + j] = d as i8;
            masks[i][(d + 2) as usize][j / 64] |= 1 << (j % 64);
        }
    }
    let index = |r: &[i8; 8]| roots.iter().position(|x| x == r).unwrap();
    let simple = std::array::from_fn(|k| index(&SIMPLE[k]));
    E8Data { roots, basis_coords, dot, masks, simple }
}

pub fn data() -> &'static E8Data {
    static DATA: OnceLock<E8Data> = OnceLock::new();
    DATA.get_or_init(build)
}

impl E8Data {
    #[inline]
    pub fn dot(&self, i: usize, j: usize) -> i8 {
        self.dot[i * ROOT_COUNT + j]
    }

    /// Roots `r` with `r . i = value` (value in -2..=2).
    #[inline]
    pub fn mask(&self, i: usize, value: i8) -> &Bits {
        &self.masks[i][(value + 2) as usize]
    }
}

/// E8 as a Gram lattice in the basis of Bourbaki simple roots (negative
/// definite).
pub fn e8_lattice() -> GramLattice {
    let rows: Vec<Vec<i64>> =
        (0..8).map(|i| (0..8).map(|j| doubled_product(&SIMPLE[i], &SIMPLE[j])).collect()).collect();
    GramLattice::new(IntMatrix::from_rows(&rows)).unwrap()
}

/// The 240 roots as coordinate vectors in the basis of [`e8_lattice`],
/// in canonical order.
pub fn e8_roots() -> Vec<Vec<BigInt>> {
    data().basis_coords.iter().map(|c| c.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// The 240 roots in even coordinates (halves of the stored doubled
/// coordinates), canonical order.
pub fn e8_roots_even() -> Vec<Vec<Q>> {
    data().roots.iter().map(|r| r.iter().map(|&c| Q::new(c.into(), 2.into())).collect()).collect()
}
