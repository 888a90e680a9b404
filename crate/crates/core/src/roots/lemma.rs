//! The orthogonal complement of a hyperbolic plane spanned by `e0` and a
//! characteristic isotropic `f` in the odd unimodular lattice of
//! signature (1, 9) is a copy of E8.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::arith::intmat::IntMatrix;
use crate::lattice::{GramLattice, SublatticeEmbedding};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaE8Report {
    pub e0: Vec<i64>,
    pub f: Vec<i64>,
    /// Gram matrix of `(e0, f)`.
    pub plane_gram: [[i64; 2]; 2],
    pub f_characteristic: bool,
    pub complement_rank: usize,
    pub complement_even: bool,
    pub complement_unimodular: bool,
    pub complement_negative_definite: bool,
    pub complement_root_count: usize,
    pub complement_gram: Vec<Vec<i64>>,
}

impl LemmaE8Report {
    pub fn certified(&self) -> bool {
        self.plane_gram == [[-1, 1], [1, 0]]
            && self.f_characteristic
            && self.complement_rank == 8
            && self.complement_even
            && self.complement_unimodular
            && self.complement_negative_definite
            && self.complement_root_count == 240
    }
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Builds `diag(1, -1, ..., -1)` of rank 10, takes the characteristic
/// isotropic vector `f = (3, 1, ..., 1)`, searches the box `{-1, 0, 1}^10`
/// for the first `e0` with `e0^2 = -1` and `e0 . f = 1`, and certifies the
/// complement of their span.
pub fn verify_lemma_e8() -> LemmaE8Report {
    let mut diag = vec![-1i64; 10];
    diag[0] = 1;
    let h = GramLattice::diagonal(&diag);
    let f: Vec<i64> = std::iter::once(3).chain(std::iter::repeat_n(1, 9)).collect();
    let fb = big(&f);
    let mut e0 = None;
    for code in 0..3usize.pow(10) {
        let mut c = code;
        let v: Vec<i64> = (0..10)
            .map(|_| {
                let d = (c % 3) as i64 - 1;
                c /= 3;
                d
            })
            .collect();
        let vb = big(&v);
        if h.square(&vb) == BigInt::from(-1) && h.product(&vb, &fb).is_one() {
            e0 = Some(v);
            break;
        }
    }
    let e0 = e0.expect("a vector e0 exists in the box");
    let eb = big(&e0);
    let plane_gram = [
        [h.square(&eb).to_i64().unwrap(), h.product(&eb, &fb).to_i64().unwrap()],
        [h.product(&fb, &eb).to_i64().unwrap(), h.square(&fb).to_i64().unwrap()],
    ];
    let plane = SublatticeEmbedding::new(h.clone(), IntMatrix::from_columns(10, &[eb, fb.clone()])).unwrap();
    let comp = plane.orthogonal_complement().induced();
    let root_count = comp.vectors_with_square(-2).map(|v| v.len()).unwrap_or(0);
    let gram = comp.to_json().map(|j| j.gram).unwrap_or_default();
    LemmaE8Report {
        e0,
        f,
        plane_gram,
        f_characteristic: h.is_characteristic(&fb),
        complement_rank: comp.rank(),
        complement_even: comp.is_even(),
        complement_unimodular: comp.is_unimodular(),
        complement_negative_definite: comp.is_negative_definite(),
        complement_root_count: root_count,
        complement_gram: gram,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_certificates() {
        let r = verify_lemma_e8();
        assert!(r.f_characteristic);
        assert_eq!(r.plane_gram, [[-1, 1], [1, 0]]);
        assert_eq!(r.complement_rank, 8);
        assert!(r.complement_even && r.complement_unimodular && r.complement_negative_definite);
        assert_eq!(r.complement_root_count, 240);
        assert!(r.certified());
    }
}
