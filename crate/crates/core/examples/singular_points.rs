//! ADE types of singular points, delta invariants and the genus.

use sextic_toolkit::trigonal::{classify_singular_points, genus, TrigonalCurve};

fn main() {
    for text in [
        "y^3 + x^6 - 1",
        "y^3 + (x^3 + 1)^2",
        "y^3 + (y + x^3)^2",
        "y^3 + (-48x^4 + 24x^3 + 48x^2 - 24x - 3) y + 304x^6 - 768x^5 + 720x^4 - 280x^3 + 24x + 2",
        "y^3 + x^4 y",
    ] {
        let c = TrigonalCurve::parse(text).unwrap();
        println!("{c}");
        for p in classify_singular_points(&c) {
            let delta = p.local.delta().map(|d| d.to_string()).unwrap_or("?".into());
            println!(
                "  x = {:<20} {:<28} mu {:?} delta {delta}",
                p.fiber.to_string(),
                p.local.kind.to_string(),
                p.local.milnor
            );
        }
        match genus(&c) {
            Ok(g) => println!("  genus {g}\n"),
            Err(e) => println!("  genus: {e}\n"),
        }
    }
}
