//! Scans every root system of rank at most 8, embeds it into E8 in all
//! possible ways up to isometry, and prints the rows whose quotient
//! torsion is odd, then the rows with both 2- and 3-torsion.

use sextic_toolkit::roots::{classify_all, Budget, DEFAULT_BUDGET};

fn main() {
    let mut budget = Budget::new(DEFAULT_BUDGET);
    let start = std::time::Instant::now();
    let rows = classify_all(&mut budget).expect("classification fits the budget");
    println!("{} rows, {} search nodes, {:.1?}", rows.len(), budget.used(), start.elapsed());

    println!("\nodd quotient torsion:");
    for r in rows.iter().filter(|r| !r.torsion.is_trivial() && r.torsion.is_odd()) {
        println!("  {:<10} {:<10} classes: {}", r.spec.to_string(), r.torsion.to_string(), r.classes);
    }
    println!("\n2- and 3-torsion:");
    for r in rows.iter().filter(|r| r.torsion.has_p_torsion(2) && r.torsion.has_p_torsion(3)) {
        println!("  {:<10} {:<10} classes: {}", r.spec.to_string(), r.torsion.to_string(), r.classes);
    }
}
