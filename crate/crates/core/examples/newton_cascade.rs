//! Intersection index of p with the cofactor h in phi - q^2 = p^c h for
//! germs of type A_{3k-1} and E6, against the lower bounds.

use sextic_toolkit::arith::{q, qi};
use sextic_toolkit::torus::{newton_divisibility_check, sample_instance, Cascade, GermKind, Perturbation};
use sextic_toolkit::trigonal::parse_bipoly;

fn main() {
    let poly = |s: &str| parse_bipoly(s).unwrap();
    let plain = Perturbation { c: qi(1), d: qi(0), r: poly("0"), unit: poly("1") };
    let bent = Perturbation { c: q(2, 3), d: qi(-1), r: poly("x + y"), unit: poly("1 + x - 2y^2") };
    let kinds = [GermKind::A { k: 1 }, GermKind::A { k: 2 }, GermKind::A { k: 3 }, GermKind::E6];
    for kind in kinds {
        for cascade in [Cascade::H1, Cascade::H2] {
            for (label, pert) in [("normal form", &plain), ("perturbed", &bent)] {
                let inst = sample_instance(kind, cascade, false, pert, 12);
                let r = newton_divisibility_check(&inst).unwrap();
                println!(
                    "{:?} {:?} {label:<12} index {:?} bound {} holds {}",
                    kind, cascade, r.index, r.bound, r.holds
                );
            }
        }
    }
    let weak = sample_instance(GermKind::A { k: 1 }, Cascade::H1, true, &plain, 12);
    println!("A2, q only vanishing: {:?}", newton_divisibility_check(&weak).unwrap());
}
