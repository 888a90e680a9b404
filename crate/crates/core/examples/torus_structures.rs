//! Torus structures p^3 + q^2 of trigonal curves, compared with the count
//! predicted by the 3-torsion of E8 modulo the singular lattice, and the
//! inner/outer split of the cusps.

use sextic_toolkit::roots::{Budget, DEFAULT_BUDGET};
use sextic_toolkit::torus::{detect_torus_curve, expected_torus_count, inner_outer_split, verify_torus};
use sextic_toolkit::trigonal::{sigma_from_fibers, TrigonalCurve};

fn main() {
    let mut budget = Budget::new(DEFAULT_BUDGET);
    for text in [
        "y^3 + (x^3 + 1)^2",
        "y^3 + (y + x^2 (x - 1))^2",
        "y^3 + (y + x^3)^2",
        "y^3 + x^4 (x - 1)^2",
        "y^3 - (24x^3 + 3) y + 16x^6 + 40x^3 - 2",
        "y^3 + (-48x^4 + 24x^3 + 48x^2 - 24x - 3) y + 304x^6 - 768x^5 + 720x^4 - 280x^3 + 24x + 2",
    ] {
        let c = TrigonalCurve::parse(text).unwrap();
        let spec = sigma_from_fibers(&c.reduce()).unwrap();
        let report = detect_torus_curve(&c);
        let expected = expected_torus_count(&spec, &mut budget).unwrap();
        println!("{spec}: {} structure(s), expected {expected}", report.count_over_closure);
        for s in &report.structures {
            let split = inner_outer_split(&c, s);
            let inner: usize = split.iter().map(|p| p.inner).sum();
            let outer: usize = split.iter().map(|p| p.outer).sum();
            println!("  {}  verified {}  inner {inner} outer {outer}", s.to_json(), verify_torus(&c, s).unwrap());
        }
    }
}
