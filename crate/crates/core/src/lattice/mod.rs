//! Integer lattices given by Gram matrices: discriminant groups, quotient
//! torsion of sublattices, orthogonal complements, parity and signature.
//!
//! Root lattices are kept negative definite (roots square to -2), the
//! convention of resolution lattices. [`GramLattice::negated`] is the
//! bridge to positive definite Cartan matrices.

mod reduce;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::intmat::{smith_normal_form, IntMatrix};
use crate::arith::Q;

pub use reduce::{lll_reduce, vectors_of_norm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("lattice is degenerate")]
    Degenerate,
    #[error("sublattice basis has {got} coordinates, ambient rank is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("sublattice basis vectors are linearly dependent")]
    DependentBasis,
    #[error("lattice is not definite")]
    NotDefinite,
    #[error("entry does not fit in a 64-bit integer")]
    Overflow,
}

/// Integer symmetric bilinear form on `Z^rank`.
#[derive(Clone, PartialEq)]
pub struct GramLattice {
    gram: IntMatrix,
}

impl fmt::Debug for GramLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GramLattice{:?}", self.gram)
    }
}

/// JSON shape `{"rank": n, "gram": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub rank: usize,
    pub gram: Vec<Vec<i64>>,
}

impl GramLattice {
    pub fn new(gram: IntMatrix) -> Result<Self, LatticeError> {
        if gram.rows() != gram.cols() {
            return Err(LatticeError::NotSquare(gram.rows(), gram.cols()));
        }
        if !gram.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        Ok(GramLattice { gram })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, LatticeError> {
        if rows.iter().any(|r| r.len() != rows.len()) {
            let c = rows.first().map_or(0, |r| r.len());
            return Err(LatticeError::NotSquare(rows.len(), c));
        }
        Self::new(IntMatrix::from_rows(rows))
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let d: Vec<BigInt> = entries.iter().map(|&e| BigInt::from(e)).collect();
        GramLattice { gram: IntMatrix::diagonal(&d) }
    }

    /// The rank-0 lattice.
    pub fn zero() -> Self {
        GramLattice { gram: IntMatrix::zeros(0, 0) }
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.gram[(i, j)]
    }

    pub fn negated(&self) -> Self {
        GramLattice { gram: self.gram.neg() }
    }

    /// `u . v` for coordinate vectors.
    pub fn product(&self, u: &[BigInt], v: &[BigInt]) -> BigInt {
        let n = self.rank();
        let mut acc = BigInt::zero();
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !v[j].is_zero() {
                    acc += &u[i] * &self.gram[(i, j)] * &v[j];
                }
            }
        }
        acc
    }

    pub fn square(&self, v: &[BigInt]) -> BigInt {
        self.product(v, v)
    }

    pub fn determinant(&self) -> BigInt {
        self.gram.det()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.determinant().is_zero()
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[(i, i)].is_even())
    }

    /// `(positive, negative, null)` inertia, by exact congruence
    /// diagonalization over Q.
    pub fn signature(&self) -> (usize, usize, usize) {
        let n = self.rank();
        let mut a: Vec<Vec<Q>> =
            (0..n).map(|i| (0..n).map(|j| Q::from_integer(self.gram[(i, j)].clone())).collect()).collect();
        let (mut pos, mut neg, mut null) = (0, 0, 0);
        let mut active: Vec<usize> = (0..n).collect();
        while !active.is_empty() {
            // find a nonzero diagonal pivot, creating one if needed
            let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
            let p = match pivot {
                Some(p) => p,
                None => {
                    let pair = active
                        .iter()
                        .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i != j && !a[i][j].is_zero());
                    match pair {
                        None => {
                            null += active.len();
                            break;
                        }
                        Some((i, j)) => {
                            // e_i <- e_i + e_j gives a_ii = 2 a_ij != 0
                            for k in 0..n {
                                let v = a[j][k].clone();
                                a[i][k] += v;
                            }
                            for k in 0..n {
                                let v = a[k][j].clone();
                                a[k][i] += v;
                            }
                            i
                        }
                    }
                }
            };
            let d = a[p][p].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            active.retain(|&i| i != p);
            for &i in &active {
                let f = &a[i][p] / &d;
                if f.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let v = &f * &a[p][k];
                    a[i][k] -= v;
                }
                for k in 0..n {
                    let v = &f * &a[k][p];
                    a[k][i] -= v;
                }
            }
        }
        (pos, neg, null)
    }

    pub fn is_negative_definite(&self) -> bool {
        self.signature() == (0, self.rank(), 0)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature() == (self.rank(), 0, 0)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        GramLattice { gram: self.gram.block_sum(&other.gram) }
    }

    /// `v . x = x . x (mod 2)` for every basis vector `x`.
    pub fn is_characteristic(&self, v: &[BigInt]) -> bool {
        let n = self.rank();
        (0..n).all(|i| {
            let vi: BigInt = (0..n).map(|j| &v[j] * &self.gram[(j, i)]).sum();
            (vi - &self.gram[(i, i)]).is_even()
        })
    }

    /// All vectors of the given square in a definite lattice.
    pub fn vectors_with_square(&self, norm: i64) -> Result<Vec<Vec<BigInt>>, LatticeError> {
        let (p, m, z) = self.signature();
        let n = self.rank();
        let (form, target) = if p == n && z == 0 {
            (self.clone(), norm)
        } else if m == n && z == 0 {
            (self.negated(), -norm)
        } else {
            return Err(LatticeError::NotDefinite);
        };
        if target <= 0 {
            return Ok(if target == 0 { vec![vec![BigInt::zero(); n]] } else { Vec::new() });
        }
        Ok(vectors_of_norm(&form, target as u64))
    }

    pub fn to_json(&self) -> Result<LatticeJson, LatticeError> {
        let gram = self
            .gram
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_i64().ok_or(LatticeError::Overflow)).collect())
            .collect::<Result<_, _>>()?;
        Ok(LatticeJson { rank: self.rank(), gram })
    }

    pub fn from_json(j: &LatticeJson) -> Result<Self, LatticeError> {
        if j.gram.len() != j.rank {
            return Err(LatticeError::NotSquare(j.gram.len(), j.rank));
        }
        Self::from_rows(&j.gram)
    }
}

/// Finite abelian group `Z/d1 + ... + Z/dk` with `d1 | d2 | ...`, all `>= 2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionGroup {
    invariant_factors: Vec<BigInt>,
}

impl fmt::Debug for TorsionGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TorsionGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.invariant_factors.len() {
            let d = &self.invariant_factors[i];
            let mut k = 1;
            while i + k < self.invariant_factors.len() && &self.invariant_factors[i + k] == d {
                k += 1;
            }
            parts.push(if k == 1 { format!("Z/{d}") } else { format!("(Z/{d})^{k}") });
            i += k;
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// JSON shape `{"factors": [d1, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionJson {
    pub factors: Vec<u64>,
}

impl TorsionGroup {
    pub fn trivial() -> Self {
        TorsionGroup { invariant_factors: Vec::new() }
    }

    /// From any list of diagonal entries of a diagonal presentation
    /// matrix; zeros (free part) and units are dropped and the rest is
    /// brought into invariant-factor form.
    pub fn from_diagonal(entries: &[BigInt]) -> Self {
        let mut ds: Vec<BigInt> = entries.iter().map(|d| d.abs()).filter(|d| !d.is_zero() && !d.is_one()).collect();
        let k = ds.len();
        let m = IntMatrix::diagonal(&ds);
        ds = smith_normal_form(&m).torsion_factors();
        debug_assert!(ds.len() <= k);
        TorsionGroup { invariant_factors: ds }
    }

    /// Checked constructor from an invariant-factor chain.
    pub fn from_factors(factors: &[u64]) -> Option<Self> {
        if factors.iter().any(|&d| d < 2) || factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return None;
        }
        Some(TorsionGroup { invariant_factors: factors.iter().map(|&d| BigInt::from(d)).collect() })
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Number of cyclic factors divisible by the prime `p`, i.e. the
    /// dimension of the `p`-torsion over `F_p`.
    pub fn p_rank(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.invariant_factors.iter().filter(|d| d.is_multiple_of(&p)).count()
    }

    pub fn has_p_torsion(&self, p: u64) -> bool {
        self.p_rank(p) > 0
    }

    pub fn is_odd(&self) -> bool {
        self.order().is_odd()
    }

    pub fn to_json(&self) -> TorsionJson {
        TorsionJson {
            factors: self.invariant_factors.iter().map(|d| d.to_u64().expect("torsion factor fits u64")).collect(),
        }
    }
}

/// Torsion of the dual quotient `L^* / L` (nonunit invariant factors of
/// the Gram matrix).
pub fn discriminant_group(l: &GramLattice) -> Result<TorsionGroup, LatticeError> {
    if !l.is_nondegenerate() {
        return Err(LatticeError::Degenerate);
    }
    Ok(TorsionGroup { invariant_factors: smith_normal_form(l.gram()).torsion_factors() })
}

/// A sublattice given by the coordinates of its basis vectors (columns)
/// in the ambient basis.
#[derive(Clone, PartialEq, Debug)]
pub struct SublatticeEmbedding {
    ambient: GramLattice,
    basis: IntMatrix,
}

impl SublatticeEmbedding {
    pub fn new(ambient: GramLattice, basis: IntMatrix) -> Result<Self, LatticeError> {
        if basis.rows() != ambient.rank() {
            return Err(LatticeError::DimensionMismatch { expected: ambient.rank(), got: basis.rows() });
        }
        if basis.cols() > 0 && basis.rank() != basis.cols() {
            return Err(LatticeError::DependentBasis);
        }
        Ok(SublatticeEmbedding { ambient, basis })
    }

    pub fn from_vectors(ambient: GramLattice, vectors: &[Vec<BigInt>]) -> Result<Self, LatticeError> {
        let n = ambient.rank();
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(LatticeError::DimensionMismatch { expected: n, got: v.len() });
        }
        Self::new(ambient, IntMatrix::from_columns(n, vectors))
    }

    pub fn ambient(&self) -> &GramLattice {
        &self.ambient
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Gram matrix of the sublattice, `B^T G B`.
    pub fn induced(&self) -> GramLattice {
        let g = self.basis.transpose().mul(self.ambient.gram()).mul(&self.basis);
        GramLattice { gram: g }
    }

    /// Torsion of `ambient / span(basis)`.
    pub fn quotient_torsion(&self) -> TorsionGroup {
        if self.rank() == 0 {
            return TorsionGroup::trivial();
        }
        TorsionGroup { invariant_factors: smith_normal_form(&self.basis).torsion_factors() }
    }

    pub fn is_primitive(&self) -> bool {
        self.quotient_torsion().is_trivial()
    }

    /// `{x in ambient : x . s = 0 for all s in the sublattice}`; always
    /// primitive.
    pub fn orthogonal_complement(&self) -> SublatticeEmbedding {
        let n = self.ambient.rank();
        let basis = if self.rank() == 0 {
            IntMatrix::identity(n)
        } else {
            let constraints = self.basis.transpose().mul(self.ambient.gram());
            constraints.integer_kernel()
        };
        SublatticeEmbedding { ambient: self.ambient.clone(), basis }
    }

    /// `(span(basis) (x) Q) ∩ ambient`.
    pub fn saturation(&self) -> SublatticeEmbedding {
        let n = self.ambient.rank();
        if self.rank() == 0 {
            return self.clone();
        }
        // integer linear forms vanishing on the span, then their common kernel
        let forms = self.basis.transpose().integer_kernel();
        let basis = if forms.cols() == 0 { IntMatrix::identity(n) } else { forms.transpose().integer_kernel() };
        SublatticeEmbedding { ambient: self.ambient.clone(), basis }
    }

    /// The columns as coordinate vectors.
    pub fn vectors(&self) -> Vec<Vec<BigInt>> {
        (0..self.rank()).map(|c| self.basis.column(c)).collect()
    }

    /// Re-expresses the sublattice in the basis `basis * v` for a
    /// unimodular `v`.
    pub fn with_basis_change(&self, v: &IntMatrix) -> SublatticeEmbedding {
        SublatticeEmbedding { ambient: self.ambient.clone(), basis: self.basis.mul(v) }
    }
}

/// Free rank and torsion of `Z^cols / rows(m)`, i.e. the cokernel of `m^T`.
pub fn cokernel_of_relations(m: &IntMatrix) -> (usize, TorsionGroup) {
    let snf = smith_normal_form(m);
    let free = m.cols() - snf.rank();
    (free, TorsionGroup { invariant_factors: snf.torsion_factors() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> GramLattice {
        GramLattice::from_rows(&[vec![-2, 1], vec![1, -2]]).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn discriminant_of_small_lattices() {
        assert_eq!(discriminant_group(&a2()).unwrap(), TorsionGroup::from_factors(&[3]).unwrap());
        let h = GramLattice::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(discriminant_group(&h).unwrap().is_trivial());
        let deg = GramLattice::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(discriminant_group(&deg), Err(LatticeError::Degenerate));
    }

    #[test]
    fn signature_by_congruence() {
        assert_eq!(GramLattice::diagonal(&[1, -1, -1, -1, -1, -1, -1, -1, -1, -1]).signature(), (1, 9, 0));
        let h = GramLattice::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(h.signature(), (1, 1, 0));
        assert_eq!(a2().signature(), (0, 2, 0));
        let deg = GramLattice::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(deg.signature(), (1, 0, 1));
    }

    #[test]
    fn characteristic_vector_all_odd() {
        let l = GramLattice::diagonal(&[1, -1, -1, -1, -1, -1, -1, -1, -1, -1]);
        assert!(l.is_characteristic(&big(&[3, 1, 1, 1, 1, 1, 1, 1, 1, 1])));
        assert!(!l.is_characteristic(&big(&[2, 1, 1, 1, 1, 1, 1, 1, 1, 1])));
    }

    #[test]
    fn complement_of_vector_in_diagonal_lattice() {
        let l = GramLattice::diagonal(&[-1, -1, -1]);
        let e = SublatticeEmbedding::from_vectors(l, &[big(&[1, 1, 0])]).unwrap();
        let c = e.orthogonal_complement();
        assert_eq!(c.rank(), 2);
        assert!(c.is_primitive());
        for v in c.vectors() {
            assert!(c.ambient().product(&v, &big(&[1, 1, 0])).is_zero());
        }
    }

    #[test]
    fn saturation_of_doubled_vector() {
        let l = GramLattice::diagonal(&[1, 1]);
        let e = SublatticeEmbedding::from_vectors(l, &[big(&[2, 4])]).unwrap();
        assert_eq!(e.quotient_torsion(), TorsionGroup::from_factors(&[2]).unwrap());
        let s = e.saturation();
        assert!(s.is_primitive());
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn torsion_display_and_json() {
        let t = TorsionGroup::from_diagonal(&big(&[3, 0, 1, 3]));
        assert_eq!(t.to_string(), "(Z/3)^2");
        assert_eq!(t.to_json().factors, vec![3, 3]);
        let u = TorsionGroup::from_diagonal(&big(&[2, 3]));
        assert_eq!(u.to_string(), "Z/6");
    }

    #[test]
    fn lattice_json_round_trip() {
        let j = a2().to_json().unwrap();
        assert_eq!(serde_json::to_string(&j).unwrap(), r#"{"rank":2,"gram":[[-2,1],[1,-2]]}"#);
        assert_eq!(GramLattice::from_json(&j).unwrap(), a2());
    }
}
