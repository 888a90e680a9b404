use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sextic_toolkit::groups::{
    braid_group_3, catalogue, count_epis, count_homs, cyclic, dihedral, direct_product, enumerate_homs,
    epimorphism_exists, hom_count_spectrum, is_isomorphic_small, local_presentation, local_presentation_of, monodromy,
    pi_word, reduced_braid_group, semidirect_cyclic, symmetric3, Convention, Endomorphism, FiberType, FiniteGroup,
    LaurentPoly, Presentation, Word,
};

fn names(n: usize) -> Vec<String> {
    ["a", "b", "c"][..n].iter().map(|s| s.to_string()).collect()
}

#[test]
fn literal_monodromy_images() {
    let n = names(3);
    let show = |t| monodromy(t, Convention::Literal).format(&n);
    // Π = abc
    assert_eq!(show(FiberType::A0StarStar), ["b", "c", "abcac^-1b^-1a^-1"]);
    assert_eq!(show(FiberType::A1Star), ["c", "cbc^-1", "abcac^-1b^-1a^-1"]);
    assert_eq!(show(FiberType::A2Star), ["c", "abcac^-1b^-1a^-1", "abcbc^-1b^-1a^-1"]);
}

#[test]
fn reversed_monodromies_are_automorphisms() {
    for t in FiberType::ALL {
        let m = monodromy(t, Convention::Reversed);
        let inv = m.inverse().expect("automorphism");
        assert!(m.compose(&inv).is_identity() && inv.compose(&m).is_identity());
        assert_eq!(m.apply(&pi_word()), pi_word());
        let lit = monodromy(t, Convention::Literal);
        assert!(lit.inverse().is_none());
        assert!(!lit.is_surjective());
    }
}

#[test]
fn local_abelianizations() {
    for conv in [Convention::Literal, Convention::Reversed] {
        let a0 = local_presentation(FiberType::A0StarStar, conv);
        assert_eq!(a0.relators().len(), 3);
        for (t, rank) in [(FiberType::A0StarStar, 1), (FiberType::A1Star, 2), (FiberType::A2Star, 1)] {
            let (r, tors) = local_presentation(t, conv).abelianization();
            assert_eq!(r, rank, "{t}");
            assert!(tors.is_trivial());
        }
    }
    assert!(local_presentation_of(&Endomorphism::identity(3)).relators().is_empty());
    let (r, tors) = reduced_braid_group().abelianization();
    assert_eq!(r, 0);
    assert_eq!(tors.to_string(), "Z/6");
}

/// Independent oracle: permutations of 0..3 as arrays, "x then y".
fn s3_hom_count_trefoil() -> usize {
    let mut perms = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    perms.push([a, b, c]);
                }
            }
        }
    }
    let mul = |x: [usize; 3], y: [usize; 3]| [y[x[0]], y[x[1]], y[x[2]]];
    let mut count = 0;
    for &x in &perms {
        for &y in &perms {
            if mul(mul(x, y), x) == mul(mul(y, x), y) {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn trefoil_onto_s3() {
    let b3 = braid_group_3();
    let s3 = symmetric3();
    assert!(epimorphism_exists(&b3, &s3).unwrap());
    assert_eq!(count_homs(&b3, &s3).unwrap() as usize, s3_hom_count_trefoil());
    // 6 epimorphisms: transposition pairs (a, b) with a != b
    assert_eq!(count_epis(&b3, &s3).unwrap(), 6);
}

#[test]
fn first_special_fiber_has_abelian_images() {
    for conv in [Convention::Literal, Convention::Reversed] {
        let p = local_presentation(FiberType::A0StarStar, conv);
        for g in catalogue(24).unwrap().iter().filter(|g| !g.is_abelian()) {
            for im in enumerate_homs(&p, g).unwrap() {
                assert!(g.is_abelian_subset(&g.generated(&im)), "{}", g.name());
            }
        }
    }
}

#[test]
fn trivial_and_free_cases() {
    let trivial = cyclic(1);
    for p in [braid_group_3(), reduced_braid_group(), local_presentation(FiberType::A1Star, Convention::Literal)] {
        assert_eq!(count_homs(&p, &trivial).unwrap(), 1);
    }
    let free = Presentation::free(1);
    for (name, k) in hom_count_spectrum(&free, 12).unwrap() {
        let g = catalogue(12).unwrap().into_iter().find(|g| g.name() == name).unwrap();
        assert_eq!(k as usize, g.order());
    }
    let killed = Presentation::parse("<a, b | a>").unwrap();
    for g in catalogue(8).unwrap() {
        for im in enumerate_homs(&killed, &g).unwrap() {
            assert_eq!(im[0], 0);
        }
    }
}

#[test]
fn third_special_fiber_matches_b3_spectrum() {
    let b3 = hom_count_spectrum(&braid_group_3(), 24).unwrap();
    for conv in [Convention::Literal, Convention::Reversed] {
        let local = hom_count_spectrum(&local_presentation(FiberType::A2Star, conv), 24).unwrap();
        assert_eq!(local, b3, "{conv:?}");
    }
}

#[test]
fn reduced_braid_group_is_modular_group_on_finite_quotients() {
    // C2 * C3: homs are independent choices of an involution and an element of order dividing 3
    for g in catalogue(24).unwrap() {
        let inv = (0..g.order()).filter(|&x| g.mul(x, x) == 0).count();
        let cube = (0..g.order()).filter(|&x| g.mul(g.mul(x, x), x) == 0).count();
        assert_eq!(count_homs(&reduced_braid_group(), &g).unwrap() as usize, inv * cube, "{}", g.name());
    }
}

#[test]
fn alexander_polynomials() {
    let tre = braid_group_3().fox_alexander(&[1, 1]).unwrap();
    assert_eq!(tre, LaurentPoly::from_ints(&[1, -1, 1]));
    let p = Presentation::parse("<a, b, c | aba = bab, bcb = cbc, abcb^-1a = bcb^-1abcb^-1>").unwrap();
    assert_eq!(p.fox_alexander(&[1, 1, 1]).unwrap(), LaurentPoly::from_ints(&[1, -1, 1]).pow(2));
    assert_eq!(Presentation::free(1).fox_alexander(&[1]).unwrap(), LaurentPoly::one());
    assert!(reduced_braid_group().fox_alexander(&[1, 1]).is_err());
}

fn tietze_shuffle(p: &Presentation, rng: &mut ChaCha8Rng) -> Presentation {
    let mut rels = p.relators().to_vec();
    for _ in 0..4 {
        let i = rng.gen_range(0..rels.len());
        match rng.gen_range(0..3) {
            0 => {
                let by = Word::from_letters(
                    (0..3).map(|_| rng.gen_range(1..=p.ngens() as i32) * [1, -1][rng.gen_range(0..2)]),
                );
                rels[i] = rels[i].conjugate(&by);
            }
            1 => rels[i] = rels[i].inverse(),
            _ => {
                let j = rng.gen_range(0..rels.len());
                rels[i] = rels[i].mul(&rels[j].conjugate(&Word::generator(rng.gen_range(0..p.ngens()))));
                if i == j {
                    rels.push(p.relators()[i].clone());
                }
            }
        }
    }
    rels.shuffle(rng);
    p.with_relators(rels)
}

#[test]
fn alexander_polynomial_is_tietze_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let p = Presentation::parse("<a, b, c | aba = bab, bcb = cbc, abcb^-1a = bcb^-1abcb^-1>").unwrap();
    let base = p.fox_alexander(&[1, 1, 1]).unwrap();
    for _ in 0..30 {
        let q = tietze_shuffle(&p, &mut rng);
        assert_eq!(q.fox_alexander(&[1, 1, 1]).unwrap(), base, "{q}");
    }
}

#[test]
fn epimorphism_counts_ignore_relator_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let groups = catalogue(12).unwrap();
    for t in FiberType::ALL {
        let p = local_presentation(t, Convention::Reversed);
        for _ in 0..3 {
            let mut rels = p.relators().to_vec();
            rels.shuffle(&mut rng);
            let q = p.with_relators(rels);
            for g in &groups {
                assert_eq!(count_epis(&p, g).unwrap(), count_epis(&q, g).unwrap());
            }
        }
    }
}

#[test]
fn small_group_identifications() {
    let d10c3 = direct_product(&dihedral(5), &cyclic(3));
    assert!(is_isomorphic_small(&semidirect_cyclic(5, 6, -1).unwrap(), &d10c3).unwrap());
    assert!(is_isomorphic_small(&dihedral(3), &symmetric3()).unwrap());
    assert!(is_isomorphic_small(&cyclic(6), &direct_product(&cyclic(2), &cyclic(3))).unwrap());
    // F5 ⋊ Z with t = -1, made abelianization Z/6 by s^6 = 1
    let quotient = Presentation::parse("<a, s | a^5, sas^-1 = a^-1, s^6>").unwrap();
    let (r, tors) = quotient.abelianization();
    assert_eq!((r, tors.to_string()), (0, "Z/6".to_string()));
    let g = FiniteGroup::from_presentation("q", &quotient).unwrap();
    assert!(is_isomorphic_small(&g, &d10c3).unwrap());
}

#[test]
fn catalogue_is_complete_up_to_24() {
    // number of groups of each order 1..=24
    let known = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15];
    let groups = catalogue(24).unwrap();
    assert_eq!(groups.len(), 74);
    let mut by_order: BTreeMap<usize, Vec<&FiniteGroup>> = BTreeMap::new();
    for g in &groups {
        by_order.entry(g.order()).or_default().push(g);
    }
    for (n, &k) in known.iter().enumerate() {
        let list = &by_order[&(n + 1)];
        assert_eq!(list.len(), k, "order {}", n + 1);
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                assert!(!is_isomorphic_small(list[i], list[j]).unwrap(), "{} ~ {}", list[i].name(), list[j].name());
            }
        }
    }
}
