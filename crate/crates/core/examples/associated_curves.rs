//! Associated cubic at a triple point and associated quartic at a double
//! point.

use sextic_toolkit::arith::qi;
use sextic_toolkit::trigonal::{associated_cubic, associated_quartic, TrigonalCurve};

fn main() {
    let c = TrigonalCurve::parse("y^3 + x^2 y + x^3").unwrap();
    let cubic = associated_cubic(&c, &qi(0)).unwrap();
    println!("cubic: {}", cubic.to_json()["affine"]);

    let d4 = TrigonalCurve::parse("y^3 + x y^2 - x^3 (x - 1)^2").unwrap();
    let cubic = associated_cubic(&d4, &qi(0)).unwrap();
    println!("cubic at D4: {}", cubic.to_json()["affine"]);
    for p in cubic.singular_points().unwrap() {
        println!("  {}", p.to_json());
    }

    let two_a4 = TrigonalCurve::parse(
        "y^3 + (-48x^4 + 24x^3 + 48x^2 - 24x - 3) y + 304x^6 - 768x^5 + 720x^4 - 280x^3 + 24x + 2",
    )
    .unwrap();
    let q = associated_quartic(&two_a4, &qi(0)).unwrap();
    println!("\nquartic at an A4 point:");
    println!("{}", serde_json::to_string_pretty(&q.to_json()).unwrap());
}
