//! Smith normal form of a relation matrix and discriminant groups of the
//! root lattices A_n, D_n, E_n.

use sextic_toolkit::arith::intmat::{smith_normal_form, IntMatrix};
use sextic_toolkit::lattice::{cokernel_of_relations, discriminant_group};
use sextic_toolkit::roots::RootSystemSpec;

fn main() {
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = smith_normal_form(&m);
    let diag: Vec<String> = s.diagonal().iter().map(|d| d.to_string()).collect();
    println!("diagonal {:?}, rank {}", diag, s.rank());
    let (free, torsion) = cokernel_of_relations(&m);
    println!("cokernel: Z^{free} + {torsion}\n");

    for name in ["A1", "A2", "A4", "A8", "D4", "D5", "E6", "E7", "E8", "4A2", "2A4", "A5+A2+A1"] {
        let spec: RootSystemSpec = name.parse().unwrap();
        let l = spec.lattice();
        let d = discriminant_group(&l).unwrap();
        println!("{:<10} det {:>4}  discr {}", name, l.determinant().to_string(), d);
    }
}
