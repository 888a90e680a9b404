//! Braid monodromy of the fibers of type A0**, A1*, A2* on the free group
//! of rank 3 and the resulting local presentations.

use sextic_toolkit::groups::{local_presentation, monodromy, pi_word, Convention, FiberType};

fn main() {
    println!("pi = {}", pi_word());
    for conv in [Convention::Literal, Convention::Reversed] {
        println!("\n{conv:?}");
        for t in FiberType::ALL {
            let m = monodromy(t, conv);
            let names = sextic_toolkit::groups::default_names(3);
            println!("  {t}: {:?}  automorphism {}", m.format(&names), m.is_surjective());
            let p = local_presentation(t, conv);
            let (rank, torsion) = p.abelianization();
            println!("    {p}\n    abelianization rank {rank}, torsion {torsion}");
        }
    }
}
