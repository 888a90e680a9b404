use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sextic_toolkit::arith::bipoly::BiPoly;
use sextic_toolkit::arith::poly::QPoly;
use sextic_toolkit::arith::{q, qi, Q};
use sextic_toolkit::roots::{Budget, RootSystemSpec};
use sextic_toolkit::torus::{
    detect_torus_curve, expected_torus_count, inner_outer_split, newton_divisibility_check, sample_instance,
    verify_torus, Cascade, GermKind, Perturbation, TorusStructure,
};
use sextic_toolkit::trigonal::{classify_singular_points, TrigonalCurve};

const FOUR_CUSPS: &str = "y^3 - (24x^3 + 3) y + 16x^6 + 40x^3 - 2";
const TWO_A4: &str = "y^3 + (-48x^4 + 24x^3 + 48x^2 - 24x - 3) y + 304x^6 - 768x^5 + 720x^4 - 280x^3 + 24x + 2";

fn curve(t: &str) -> TrigonalCurve {
    TrigonalCurve::parse(t).unwrap()
}

fn expected(spec: &str) -> u64 {
    expected_torus_count(&spec.parse::<RootSystemSpec>().unwrap(), &mut Budget::new(50_000_000)).unwrap()
}

fn rand_poly(rng: &mut ChaCha8Rng, deg: usize) -> QPoly {
    QPoly::new((0..=deg).map(|_| qi(rng.gen_range(-4..=4))).collect(), ())
}

#[test]
fn four_cusps_have_four_structures() {
    let c = curve(FOUR_CUSPS);
    let r = detect_torus_curve(&c);
    assert_eq!(r.count_over_closure, 4);
    assert_eq!(expected("4A2"), 4);
    for s in &r.structures {
        assert_eq!(verify_torus(&c, s), Ok(true));
        let split = inner_outer_split(&c, s);
        assert!(split.iter().all(|p| p.kind.to_string() == "A2"));
        assert_eq!(split.iter().map(|p| p.inner).sum::<usize>(), 3);
        assert_eq!(split.iter().map(|p| p.outer).sum::<usize>(), 1);
    }
}

#[test]
fn two_a4_has_no_structure() {
    assert_eq!(detect_torus_curve(&curve(TWO_A4)).count_over_closure, 0);
    assert_eq!(expected("2A4"), 0);
}

#[test]
fn counts_match_lattice_prediction() {
    for (t, spec) in [
        ("y^3 + (x^3 + 1)^2", "3A2"),
        ("y^3 + (y + x^2 (x - 1))^2", "A5+A2"),
        ("y^3 + (y + x^3)^2", "A8"),
        ("y^3 + x^4 (x - 1)^2", "E6+A2"),
        (FOUR_CUSPS, "4A2"),
    ] {
        let c = curve(t);
        let r = detect_torus_curve(&c);
        assert_eq!(r.count_over_closure as u64, expected(spec), "{t}");
        for s in &r.structures {
            assert_eq!(verify_torus(&c, s), Ok(true));
        }
    }
}

#[test]
fn three_cusps_all_inner() {
    let c = curve("y^3 + (x^3 + 1)^2");
    let zero = QPoly::zero(&());
    let s = TorusStructure::rational(&zero, &zero, &QPoly::from_ints(&[1, 0, 0, 1]));
    let split = inner_outer_split(&c, &s);
    assert_eq!(split.iter().map(|p| p.inner).sum::<usize>(), 3);
    assert!(split.iter().all(|p| p.outer == 0));
}

#[test]
fn torus_curves_are_never_smooth() {
    // p = 0 and q = 0 always meet, and every meeting point is singular
    let b = QPoly::from_ints(&[0, 0, 1]);
    let l = QPoly::from_ints(&[1]);
    let e = QPoly::from_ints(&[1, 0, 0, 1]);
    let s = TorusStructure::rational(&b, &l, &e);
    let f: BiPoly<Q> = s.compose().map(&(), |c| c.as_rational().unwrap());
    let c = TrigonalCurve::from_bipoly(&f).unwrap();
    assert!(!classify_singular_points(&c).is_empty());
    assert_eq!(inner_outer_split(&c, &s).iter().map(|p| p.inner).sum::<usize>(), 3);
}

#[test]
fn random_structures_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut checked = 0;
    while checked < 100 {
        let b = rand_poly(&mut rng, 2);
        let l = rand_poly(&mut rng, 1);
        let e = rand_poly(&mut rng, 3);
        let s = TorusStructure::rational(&b, &l, &e);
        let f: BiPoly<Q> = s.compose().map(&(), |c| c.as_rational().unwrap());
        let Ok(c) = TrigonalCurve::from_bipoly(&f) else { continue };
        assert_eq!(verify_torus(&c, &s), Ok(true));
        let r = detect_torus_curve(&c);
        assert!(r.structures.iter().any(|t| t.same_as_rational(&b, &l, &e)), "{c}");
        for t in &r.structures {
            assert_eq!(verify_torus(&c, t), Ok(true));
        }
        // inner points are singular: one per root of e - l b, or at infinity
        let split = inner_outer_split(&c, &s);
        let r = s.inner_polynomial();
        let roots = r.map(&(), |c| c.as_rational().unwrap());
        let finite = if roots.is_zero() { 0 } else { roots.squarefree_part().degree().unwrap_or(0) };
        let at_inf = usize::from(roots.coeff(3) == qi(0));
        assert_eq!(split.iter().map(|p| p.inner).sum::<usize>(), finite + at_inf, "{c}");
        checked += 1;
    }
}

fn perturbation(rng: &mut ChaCha8Rng) -> Perturbation {
    let mut r = BiPoly::zero(&());
    let mut unit = BiPoly::constant(qi(rng.gen_range(1..=3)));
    for i in 0..3u32 {
        for j in 0..2u32 {
            r.add_term(i, j, qi(rng.gen_range(-2..=2)));
            if i + j > 0 {
                unit.add_term(i, j, qi(rng.gen_range(-2..=2)));
            }
        }
    }
    let c = q(rng.gen_range(1..=4), rng.gen_range(1..=3));
    Perturbation { c, d: qi(rng.gen_range(-2..=2)), r, unit }
}

#[test]
fn newton_bounds_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cases = [
        (GermKind::A { k: 1 }, Cascade::H1, false),
        (GermKind::A { k: 1 }, Cascade::H2, false),
        (GermKind::A { k: 1 }, Cascade::H1, true),
        (GermKind::A { k: 1 }, Cascade::H2, true),
        (GermKind::A { k: 2 }, Cascade::H1, false),
        (GermKind::A { k: 2 }, Cascade::H2, false),
        (GermKind::A { k: 3 }, Cascade::H1, false),
        (GermKind::E6, Cascade::H1, false),
        (GermKind::E6, Cascade::H2, false),
    ];
    let mut lowest_a5 = usize::MAX;
    for (kind, cascade, weak) in cases {
        for _ in 0..8 {
            let pert = perturbation(&mut rng);
            let inst = sample_instance(kind, cascade, weak, &pert, 12);
            let rep = newton_divisibility_check(&inst).unwrap();
            assert!(rep.holds, "{kind:?} {cascade:?} {rep:?}");
            // p is a unit times y - g, so (h . p) is the order of h(x, g(x))
            let w = match kind {
                GermKind::A { k } => k,
                GermKind::E6 => 2,
            };
            let g = &QPoly::x(&()).pow(w) * &QPoly::new(vec![pert.c.clone(), pert.d.clone()], ());
            let along = inst
                .h
                .substitute(&BiPoly::x(&()), &BiPoly::from_y_coeffs(&[g], &()))
                .y_coeffs()
                .into_iter()
                .next()
                .unwrap_or_else(|| QPoly::zero(&()));
            let order = along.coeffs().iter().position(|c| *c != qi(0));
            if let Some(o) = order.filter(|&o| o <= 12) {
                assert_eq!(rep.index, Some(o), "{kind:?} {cascade:?}");
                assert!(o >= rep.bound);
            }
            if (kind, cascade, weak) == (GermKind::A { k: 2 }, Cascade::H1, false) {
                lowest_a5 = lowest_a5.min(rep.index.unwrap_or(usize::MAX));
            }
        }
    }
    // the bound [(3k + 1) / 2] = 3 is attained for k = 2
    assert_eq!(lowest_a5, 3);
}
