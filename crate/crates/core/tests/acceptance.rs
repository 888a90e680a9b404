//! One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sextic_toolkit::arith::bipoly::BiPoly;
use sextic_toolkit::arith::poly::QPoly;
use sextic_toolkit::arith::{qi, Q};
use sextic_toolkit::groups::{
    braid_group_3, catalogue, cyclic, dihedral, direct_product, enumerate_homs, hom_count_spectrum,
    is_isomorphic_small, local_presentation, reduced_braid_group, semidirect_cyclic, symmetric3, Convention, FiberType,
    LaurentPoly, Presentation,
};
use sextic_toolkit::roots::{
    classify_by_predicate, classify_odd_torsion, find_embedding, verify_lemma_e8, Budget, RootSystemSpec,
    DEFAULT_BUDGET,
};
use sextic_toolkit::torus::{
    detect_torus_curve, expected_torus_count, inner_outer_split, verify_torus, TorusStructure,
};
use sextic_toolkit::trigonal::{
    classify_singular_points, genus, sextic_singularities, sigma_from_fibers, singular_fibers, FiberChoice, Kodaira,
    PointType, TrigonalCurve,
};

const FOUR_CUSPS: &str = "y^3 - (24x^3 + 3) y + 16x^6 + 40x^3 - 2";
const TWO_A4: &str = "y^3 + (-48x^4 + 24x^3 + 48x^2 - 24x - 3) y + 304x^6 - 768x^5 + 720x^4 - 280x^3 + 24x + 2";
const SHIFTED_CUSP: &str = "y^3 - y^2 - x^3 y + x^3";

const CORPUS: [(&str, &str); 9] = [
    (FOUR_CUSPS, "4A2"),
    (TWO_A4, "2A4"),
    ("y^3 + (x^3 + 1)^2", "3A2"),
    ("y^3 + (y + x^2 (x - 1))^2", "A5+A2"),
    ("y^3 + (y + x^3)^2", "A8"),
    ("y^3 + x^4 (x - 1)^2", "E6+A2"),
    ("y^3 + x y^2 - x^3 (x - 1)^2", "D4+A1"),
    (SHIFTED_CUSP, "A2+4A1"),
    ("y^3 - 3(x^4 + 6x^3 + 5x^2 + 1) y + 2x^6 + 18x^5 + 42x^4 + 18x^3 + 15x^2 + 2", "A4+A3"),
];

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn spec(s: &str) -> RootSystemSpec {
    s.parse().unwrap()
}

fn curve(s: &str) -> TrigonalCurve {
    TrigonalCurve::parse(s).unwrap()
}

fn random_curve(rng: &mut ChaCha8Rng) -> Option<TrigonalCurve> {
    let density = [0.3, 0.6, 1.0][rng.gen_range(0..3)];
    let mut poly = |deg: usize| {
        let v = (0..=deg).map(|_| if rng.gen_bool(density) { qi(rng.gen_range(-3..=3)) } else { qi(0) }).collect();
        QPoly::new(v, ())
    };
    let (a, b, c) = (poly(2), poly(4), poly(6));
    TrigonalCurve::new(a, b, c).ok()
}

fn random_corpus(n: usize, seed: u64) -> Vec<TrigonalCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < n {
        if let Some(c) = random_curve(&mut rng) {
            out.push(c);
        }
    }
    out
}

fn euler_total(c: &TrigonalCurve) -> usize {
    singular_fibers(&c.reduce()).iter().map(|f| f.euler as usize * f.orbit_size()).sum()
}

/// Simple singular points counted over the closure, or `None` if one is not simple.
fn point_multiset(c: &TrigonalCurve) -> Option<BTreeMap<String, usize>> {
    let mut m = BTreeMap::new();
    for p in classify_singular_points(c) {
        match p.local.kind {
            PointType::Simple(s) => *m.entry(s.to_string()).or_default() += p.orbit_size(),
            PointType::NonSimple(_) => return None,
        }
    }
    Some(m)
}

fn spec_multiset(s: &RootSystemSpec) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for x in s.summands() {
        *m.entry(x.to_string()).or_default() += 1;
    }
    m
}

fn odd_torsion_table() -> Check {
    let start = Instant::now();
    let rows = classify_odd_torsion(&mut Budget::new(DEFAULT_BUDGET)).map_err(|e| e.to_string())?;
    let got: BTreeMap<String, (Vec<u64>, usize)> =
        rows.iter().map(|r| (r.spec.to_string(), (r.torsion.to_json().factors, r.classes))).collect();
    let want: BTreeMap<String, (Vec<u64>, usize)> = [
        ("4A2", vec![3, 3]),
        ("3A2", vec![3]),
        ("3A2+A1", vec![3]),
        ("A5+A2", vec![3]),
        ("A8", vec![3]),
        ("E6+A2", vec![3]),
        ("2A4", vec![5]),
    ]
    .into_iter()
    .map(|(s, t)| (s.to_string(), (t, 1)))
    .collect();
    ensure(got == want, format!("got {got:?}"))?;
    let t = start.elapsed();
    ensure(t.as_secs() <= 300, format!("took {t:?}"))?;
    Ok(format!("7 rows, {t:.1?}"))
}

fn embeddings() -> Check {
    for s in ["A3+2A2", "A4+2A2", "A6+A2"] {
        ensure(find_embedding(&spec(s)).is_none(), format!("{s} embeds"))?;
    }
    for s in ["4A2", "3A2", "3A2+A1", "A5+A2", "A8", "E6+A2", "2A4", "8A1"] {
        let w = find_embedding(&spec(s)).ok_or(format!("{s}: no witness"))?;
        ensure(w.verify() && w.spec() == &spec(s), format!("{s}: witness fails"))?;
    }
    Ok("3 absent, 8 verified witnesses".into())
}

fn two_and_three_torsion() -> Check {
    let rows = classify_by_predicate(|t| t.has_p_torsion(2) && t.has_p_torsion(3), &mut Budget::new(DEFAULT_BUDGET))
        .map_err(|e| e.to_string())?;
    let names: Vec<String> = rows.iter().map(|r| r.spec.to_string()).collect();
    ensure(names == ["A5+A2+A1"], format!("got {names:?}"))?;
    Ok("A5+A2+A1 only".into())
}

fn lemma_e8() -> Check {
    let r = verify_lemma_e8();
    ensure(r.certified(), "not certified")?;
    ensure(
        r.complement_rank == 8
            && r.complement_even
            && r.complement_unimodular
            && r.complement_negative_definite
            && r.complement_root_count == 240,
        format!("{r:?}"),
    )?;
    Ok("even, unimodular, negative definite, rank 8, 240 roots".into())
}

fn fiber_budget() -> Check {
    for s in ["y^3 + (x^3 + 1)^2", SHIFTED_CUSP] {
        ensure(euler_total(&curve(s)) == 12, format!("{s}: budget {}", euler_total(&curve(s))))?;
    }
    let randoms = random_corpus(120, 5);
    for c in &randoms {
        ensure(euler_total(c) == 12, format!("{c}: budget {}", euler_total(c)))?;
    }
    // the cusp over x = 0 is transverse to the fiber
    let f = singular_fibers(&curve(SHIFTED_CUSP).reduce());
    let cusp = f.iter().find(|r| r.location.to_string() == "0").ok_or("no fiber over 0")?;
    ensure(
        cusp.kodaira == Kodaira::I(3) && cusp.euler == 3,
        format!("cusp fiber {} euler {}", cusp.kodaira, cusp.euler),
    )?;
    let at_zero: Vec<_> = classify_singular_points(&curve(SHIFTED_CUSP))
        .into_iter()
        .filter(|p| p.fiber.to_string() == "0")
        .map(|p| p.local.kind.to_string())
        .collect();
    ensure(at_zero == ["A2"], format!("points over 0: {at_zero:?}"))?;
    Ok(format!("2 named + {} random curves at 12, transverse cusp fiber I3 with euler 3", randoms.len()))
}

fn dictionary() -> Check {
    let mut corpus: Vec<TrigonalCurve> = CORPUS.iter().map(|(t, _)| curve(t)).collect();
    corpus.extend(random_corpus(120, 9));
    let mut compared = 0;
    for c in &corpus {
        let Ok(sigma) = sigma_from_fibers(&c.reduce()) else { continue };
        let pts = point_multiset(c).ok_or(format!("{c}: non-simple point with minimal fibers"))?;
        ensure(spec_multiset(&sigma) == pts, format!("{c}: fibers {sigma}, points {pts:?}"))?;
        compared += 1;
    }
    for (t, s) in CORPUS {
        ensure(sigma_from_fibers(&curve(t).reduce()).unwrap().to_string() == s, format!("{t} is not {s}"))?;
    }
    Ok(format!("{compared} curves"))
}

fn torus_detection() -> Check {
    let four = curve(FOUR_CUSPS);
    let r = detect_torus_curve(&four);
    ensure(r.count_over_closure == 4, format!("4A2 count {}", r.count_over_closure))?;
    for s in &r.structures {
        ensure(verify_torus(&four, s) == Ok(true), "4A2 structure does not verify")?;
        let split = inner_outer_split(&four, s);
        let inner: usize = split.iter().map(|p| p.inner).sum();
        let outer: usize = split.iter().map(|p| p.outer).sum();
        ensure((inner, outer) == (3, 1), format!("split {inner}+{outer}"))?;
    }
    let two = detect_torus_curve(&curve(TWO_A4)).count_over_closure;
    ensure(two == 0, format!("2A4 count {two}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut trips = 0;
    let poly =
        |rng: &mut ChaCha8Rng, deg: usize| QPoly::new((0..=deg).map(|_| qi(rng.gen_range(-4..=4))).collect(), ());
    while trips < 100 {
        let (b, l, e) = (poly(&mut rng, 2), poly(&mut rng, 1), poly(&mut rng, 3));
        let s = TorusStructure::rational(&b, &l, &e);
        let f: BiPoly<Q> = s.compose().map(&(), |c| c.as_rational().unwrap());
        let Ok(c) = TrigonalCurve::from_bipoly(&f) else { continue };
        let found = detect_torus_curve(&c);
        ensure(
            found.structures.iter().any(|t| t.same_as_rational(&b, &l, &e)),
            format!("{c}: lost ({b:?}, {l:?}, {e:?})"),
        )?;
        trips += 1;
    }
    Ok(format!("4A2 -> 4 with 3+1 splits, 2A4 -> 0, {trips} round trips"))
}

fn torus_lattice_cross_check() -> Check {
    let mut budget = Budget::new(DEFAULT_BUDGET);
    let mut parts = Vec::new();
    for (t, s) in CORPUS.iter().filter(|(_, s)| ["3A2", "A5+A2", "A8", "E6+A2", "4A2"].contains(s)) {
        let got = detect_torus_curve(&curve(t)).count_over_closure as u64;
        let want = expected_torus_count(&spec(s), &mut budget).map_err(|e| e.to_string())?;
        let known = if *s == "4A2" { 4 } else { 1 };
        ensure(got == want && want == known, format!("{s}: detected {got}, expected {want}"))?;
        parts.push(format!("{s}={got}"));
    }
    Ok(parts.join(" "))
}

fn group_suite() -> Check {
    let start = Instant::now();
    for (t, rank) in [(FiberType::A0StarStar, 1), (FiberType::A1Star, 2), (FiberType::A2Star, 1)] {
        for conv in [Convention::Literal, Convention::Reversed] {
            let (r, tor) = local_presentation(t, conv).abelianization();
            ensure(r == rank && tor.is_trivial(), format!("{t} {conv:?}: rank {r} torsion {tor}"))?;
        }
    }
    let groups = catalogue(24).map_err(|e| e.to_string())?;
    for t in [FiberType::A0StarStar, FiberType::A1Star] {
        for conv in [Convention::Literal, Convention::Reversed] {
            let p = local_presentation(t, conv);
            for g in groups.iter().filter(|g| !g.is_abelian()) {
                for im in enumerate_homs(&p, g).map_err(|e| e.to_string())? {
                    ensure(
                        g.is_abelian_subset(&g.generated(&im)),
                        format!("{t} {conv:?}: nonabelian image in {}", g.name()),
                    )?;
                }
            }
        }
    }
    let b3 = hom_count_spectrum(&braid_group_3(), 24).map_err(|e| e.to_string())?;
    for conv in [Convention::Literal, Convention::Reversed] {
        let local = hom_count_spectrum(&local_presentation(FiberType::A2Star, conv), 24).map_err(|e| e.to_string())?;
        ensure(local == b3, format!("A2* {conv:?} spectrum differs from B3"))?;
    }
    let (r, tor) = reduced_braid_group().abelianization();
    ensure(r == 0 && tor.to_json().factors == [6], format!("B3/D^2: rank {r} torsion {tor}"))?;
    let t = start.elapsed();
    ensure(t.as_secs() <= 600, format!("took {t:?}"))?;
    Ok(format!("{} groups, {t:.1?}", groups.len()))
}

fn alexander() -> Check {
    let trefoil = LaurentPoly::from_ints(&[1, -1, 1]);
    let got = braid_group_3().fox_alexander(&[1, 1]).map_err(|e| e.to_string())?;
    ensure(got == trefoil, format!("trefoil: {got}"))?;
    let p =
        Presentation::parse("<a, b, c | aba = bab, bcb = cbc, abcb^-1a = bcb^-1abcb^-1>").map_err(|e| e.to_string())?;
    let got = p.fox_alexander(&[1, 1, 1]).map_err(|e| e.to_string())?;
    // (t^2 - t + 1)^2 expanded by hand
    ensure(got == LaurentPoly::from_ints(&[1, -2, 3, -2, 1]), format!("three generators: {got}"))?;
    Ok(format!("{trefoil}; {got}"))
}

fn isomorphisms() -> Check {
    let g = semidirect_cyclic(5, 6, -1).map_err(|e| e.to_string())?;
    let h = direct_product(&dihedral(5), &cyclic(3));
    ensure(g.order() == 30 && h.order() == 30, "orders")?;
    ensure(is_isomorphic_small(&g, &h).map_err(|e| e.to_string())?, "C5:C6 not ~ D10 x C3")?;
    ensure(is_isomorphic_small(&dihedral(3), &symmetric3()).map_err(|e| e.to_string())?, "D6 not ~ S3")?;
    ensure(!is_isomorphic_small(&cyclic(6), &symmetric3()).map_err(|e| e.to_string())?, "C6 ~ S3")?;
    Ok("C5:C6(-1) ~ D10 x C3, D6 ~ S3".into())
}

fn sextic_sets_on_two_a4() -> Check {
    let m = curve(TWO_A4).reduce();
    let fibers = singular_fibers(&m);
    let i1 = fibers.iter().find(|f| f.kodaira == Kodaira::I(1)).ok_or("no I1 fiber")?;
    let i5 = fibers.iter().find(|f| f.kodaira == Kodaira::I(5)).ok_or("no I5 fiber")?;
    let smooth =
        (0..).map(|k| FiberChoice::rational(qi(k))).find(|f| fibers.iter().all(|r| r.location != f.location)).unwrap();
    let mut got = Vec::new();
    for f0 in [smooth, FiberChoice { location: i1.location.clone() }, FiberChoice { location: i5.location.clone() }] {
        got.push(sextic_singularities(&m, &f0).map_err(|e| e.to_string())?.to_string());
    }
    ensure(got == ["J_{2,0}+2A4", "J_{2,1}+2A4", "J_{2,5}+A4"], format!("got {got:?}"))?;
    Ok(got.join(", "))
}

fn genus_bookkeeping() -> Check {
    let mut smooth = 0;
    for c in random_corpus(60, 23) {
        if classify_singular_points(&c).is_empty() {
            ensure(genus(&c) == Ok(4), format!("{c}: genus {:?}", genus(&c)))?;
            smooth += 1;
        }
    }
    ensure(smooth >= 10, format!("only {smooth} smooth curves"))?;
    for (t, s) in CORPUS {
        // delta from the fiber side: (mu + r - 1) / 2 per summand
        let delta: usize = spec(s).summands().iter().map(|x| (x.milnor() + x.branches() - 1) / 2).sum();
        let g = genus(&curve(t)).map_err(|e| e.to_string())?;
        ensure(g == 4 - delta as i64, format!("{s}: genus {g}, delta {delta}"))?;
    }
    Ok(format!("{smooth} smooth curves at 4, {} singular curves at 4 - delta", CORPUS.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 13] = [
        ("odd quotient torsion table", odd_torsion_table),
        ("embeddings and witnesses", embeddings),
        ("2- and 3-torsion", two_and_three_torsion),
        ("E8 as a complement", lemma_e8),
        ("twelve-fiber budget", fiber_budget),
        ("fiber/point dictionary", dictionary),
        ("torus detection", torus_detection),
        ("torus count vs lattice", torus_lattice_cross_check),
        ("local groups and quotients", group_suite),
        ("Alexander polynomials", alexander),
        ("small isomorphisms", isomorphisms),
        ("sextic singularities on a 2A4 model", sextic_sets_on_two_a4),
        ("genus bookkeeping", genus_bookkeeping),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
