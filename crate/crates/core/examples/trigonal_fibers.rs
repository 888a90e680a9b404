//! Kodaira types of the singular fibers of a few trigonal curves and the
//! twelve-fiber budget.

use sextic_toolkit::trigonal::{sigma_from_fibers, singular_fibers, TrigonalCurve};

fn main() {
    let curves = [
        "y^3 + (x^3 + 1)^2",
        "y^3 - y^2 - x^3 y + x^3",
        "y^3 - (24x^3 + 3) y + 16x^6 + 40x^3 - 2",
        "y^3 + x^4 (x - 1)^2",
        "y^3 + x y^2 - x^3 (x - 1)^2",
        "y^3 + (x^2 + 1) y + x^6 - 2x + 3",
    ];
    for text in curves {
        let c = TrigonalCurve::parse(text).unwrap();
        let m = c.reduce();
        println!("{c}");
        let mut total = 0;
        for f in singular_fibers(&m) {
            total += f.euler as usize * f.orbit_size();
            println!(
                "  {:<24} {:<5} euler {} x {}",
                f.location.to_string(),
                f.kodaira.to_string(),
                f.euler,
                f.orbit_size()
            );
        }
        let sigma = sigma_from_fibers(&m).map(|s| s.to_string()).unwrap_or_else(|e| e.to_string());
        println!("  total {total}, singular points {sigma}\n");
    }
}
