//! Singularities of the sextic obtained from a trigonal curve and a chosen
//! fiber, on a curve with two A4 points.

use sextic_toolkit::arith::poly::QPoly;
use sextic_toolkit::arith::qi;
use sextic_toolkit::trigonal::{sextic_singularities, singular_fibers, FiberChoice, TrigonalCurve};

const TWO_A4: &str = "y^3 + (-48x^4 + 24x^3 + 48x^2 - 24x - 3) y + 304x^6 - 768x^5 + 720x^4 - 280x^3 + 24x + 2";

fn main() {
    let c = TrigonalCurve::parse(TWO_A4).unwrap();
    let m = c.reduce();
    for f in singular_fibers(&m) {
        println!("{:<28} {}", f.location.to_string(), f.kodaira);
    }
    println!();
    let choices = [
        ("smooth fiber x = 5", FiberChoice::rational(qi(5))),
        ("I1 fiber", FiberChoice::orbit(&QPoly::from_ints(&[-1, -9, 11])).unwrap()),
        ("I5 fiber x = 0", FiberChoice::rational(qi(0))),
    ];
    for (label, f0) in choices {
        let s = sextic_singularities(&m, &f0).unwrap();
        println!("{label:<20} {s}");
    }
}
