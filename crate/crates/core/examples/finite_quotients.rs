//! Homomorphisms from finitely presented groups into small finite groups.

use sextic_toolkit::groups::{
    braid_group_3, catalogue, count_epis, count_homs, cyclic, dihedral, direct_product, hom_count_spectrum,
    is_isomorphic_small, local_presentation, reduced_braid_group, semidirect_cyclic, symmetric3, Convention, FiberType,
};

fn main() {
    let b3 = braid_group_3();
    for g in catalogue(12).unwrap() {
        println!("{:<8} homs {:>4} epis {:>4}", g.name(), count_homs(&b3, &g).unwrap(), count_epis(&b3, &g).unwrap());
    }

    let p = local_presentation(FiberType::A2Star, Convention::Reversed);
    let same = hom_count_spectrum(&p, 24).unwrap() == hom_count_spectrum(&b3, 24).unwrap();
    println!("\nA2* and B3 have the same spectrum up to order 24: {same}");
    let (rank, torsion) = reduced_braid_group().abelianization();
    println!("B3 modulo the full twist: rank {rank}, torsion {torsion}");

    let a0 = local_presentation(FiberType::A0StarStar, Convention::Literal);
    let nonabelian = catalogue(24).unwrap().into_iter().filter(|g| !g.is_abelian());
    let mut epis = 0;
    for g in nonabelian {
        epis += count_epis(&a0, &g).unwrap();
    }
    println!("epimorphisms from A0** onto nonabelian groups of order <= 24: {epis}");

    let g = semidirect_cyclic(5, 6, -1).unwrap();
    let h = direct_product(&dihedral(5), &cyclic(3));
    println!("\nC5:C6 ~ D10 x C3: {}", is_isomorphic_small(&g, &h).unwrap());
    println!("D6 ~ S3: {}", is_isomorphic_small(&dihedral(3), &symmetric3()).unwrap());
}
