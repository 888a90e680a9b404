use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use sextic_toolkit::arith::intmat::{smith_normal_form, IntMatrix};
use sextic_toolkit::lattice::{discriminant_group, GramLattice, SublatticeEmbedding, TorsionGroup};

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, cols), rows)
}

fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    // product of elementary column operations
    prop::collection::vec((0..n, 0..n, -3i64..=3), 0..12).prop_map(move |ops| {
        let mut m = IntMatrix::identity(n);
        for (i, j, k) in ops {
            if i != j {
                for r in 0..n {
                    let v = &m[(r, j)] * BigInt::from(k);
                    m[(r, i)] += v;
                }
            }
        }
        m
    })
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

proptest! {
    #[test]
    fn snf_identity_holds(rows in matrix(3, 4)) {
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert_eq!(s.u.det().abs(), BigInt::from(1));
        prop_assert_eq!(s.v.det().abs(), BigInt::from(1));
        let d = s.diagonal();
        for w in d.windows(2) {
            if !w[1].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero());
            } else {
                prop_assert!(w[1].is_zero());
            }
        }
    }

    #[test]
    fn snf_invariant_under_permutations(rows in matrix(3, 3), perm in Just(vec![2usize, 0, 1])) {
        let m = IntMatrix::from_rows(&rows);
        let permuted: Vec<Vec<i64>> = perm.iter().map(|&i| {
            let r = &rows[i];
            vec![r[1], r[2], r[0]]
        }).collect();
        let p = IntMatrix::from_rows(&permuted);
        prop_assert_eq!(smith_normal_form(&m).d, smith_normal_form(&p).d);
    }

    #[test]
    fn quotient_torsion_invariant_under_basis_change(
        cols in prop::collection::vec(prop::collection::vec(-5i64..=5, 4), 2),
        v in unimodular(2),
    ) {
        let ambient = GramLattice::diagonal(&[1, 1, -1, -1]);
        let vecs: Vec<Vec<BigInt>> = cols.iter().map(|c| big(c)).collect();
        let Ok(e) = SublatticeEmbedding::from_vectors(ambient, &vecs) else { return Ok(()); };
        prop_assert_eq!(e.quotient_torsion(), e.with_basis_change(&v).quotient_torsion());
    }

    #[test]
    fn complement_is_primitive_and_double_complement_saturates(
        cols in prop::collection::vec(prop::collection::vec(-4i64..=4, 4), 1..3),
    ) {
        let ambient = GramLattice::diagonal(&[-1, -1, -1, -1]);
        let vecs: Vec<Vec<BigInt>> = cols.iter().map(|c| big(c)).collect();
        let Ok(e) = SublatticeEmbedding::from_vectors(ambient, &vecs) else { return Ok(()); };
        let c = e.orthogonal_complement();
        prop_assert!(c.is_primitive());
        let cc = c.orthogonal_complement();
        let sat = e.saturation();
        // same primitive sublattice: each basis lies in the other's span
        prop_assert_eq!(cc.rank(), sat.rank());
        let both = IntMatrix::from_columns(4, &[cc.vectors(), sat.vectors()].concat());
        prop_assert_eq!(both.rank(), sat.rank());
        prop_assert!(SublatticeEmbedding::new(cc.ambient().clone(), cc.basis().clone()).unwrap().is_primitive());
    }

    #[test]
    fn nikulin_duality_in_unimodular_lattice(
        cols in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..4),
    ) {
        let ambient = GramLattice::diagonal(&[1, 1, -1, -1, -1]);
        let vecs: Vec<Vec<BigInt>> = cols.iter().map(|c| big(c)).collect();
        let Ok(e) = SublatticeEmbedding::from_vectors(ambient, &vecs) else { return Ok(()); };
        let s = e.saturation();
        let c = s.orthogonal_complement();
        let (gs, gc) = (s.induced(), c.induced());
        if !gs.is_nondegenerate() || !gc.is_nondegenerate() {
            return Ok(());
        }
        prop_assert_eq!(discriminant_group(&gs).unwrap().order(), discriminant_group(&gc).unwrap().order());
    }
}

#[test]
fn single_root_complement_in_e8_is_e7() {
    let e8 = sextic_toolkit::roots::e8_lattice();
    let root = sextic_toolkit::roots::e8_roots()[0].clone();
    let e = SublatticeEmbedding::from_vectors(e8, &[root]).unwrap();
    assert!(e.quotient_torsion().is_trivial());
    let c = e.orthogonal_complement();
    assert_eq!(c.rank(), 7);
    assert_eq!(discriminant_group(&c.induced()).unwrap(), TorsionGroup::from_factors(&[2]).unwrap());
}

#[test]
fn full_rank_sublattice_has_zero_complement() {
    let l = GramLattice::diagonal(&[-1, -1, -1]);
    let e = SublatticeEmbedding::new(l, IntMatrix::identity(3)).unwrap();
    assert_eq!(e.orthogonal_complement().rank(), 0);
}
