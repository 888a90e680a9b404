//! The E8 lattice as the complement of (e0, f) in the odd unimodular
//! lattice of rank 10, explicit root embeddings, and dihedral quotient
//! counts read off the quotient torsion.

use sextic_toolkit::roots::{
    all_embeddings_up_to_isometry, dihedral_quotient_count, find_embedding, verify_lemma_e8, Budget, RootSystemSpec,
    DEFAULT_BUDGET,
};

fn main() {
    let r = verify_lemma_e8();
    println!(
        "complement: rank {}, even {}, unimodular {}, negative definite {}, {} roots",
        r.complement_rank,
        r.complement_even,
        r.complement_unimodular,
        r.complement_negative_definite,
        r.complement_root_count
    );
    println!("certified: {}\n", r.certified());

    for name in ["A3+2A2", "A4+2A2", "A6+A2", "8A1", "E6+A2"] {
        let spec: RootSystemSpec = name.parse().unwrap();
        match find_embedding(&spec) {
            Some(w) => println!(
                "{name}: embeds, witness verified {}, E8/sublattice torsion {}",
                w.verify(),
                w.quotient_torsion()
            ),
            None => println!("{name}: no embedding"),
        }
    }

    let mut budget = Budget::new(DEFAULT_BUDGET);
    println!();
    for (name, n) in [("4A2", 3), ("3A2", 3), ("2A4", 5), ("A5+A2+A1", 3), ("A5+A2+A1", 2)] {
        let spec: RootSystemSpec = name.parse().unwrap();
        let classes = all_embeddings_up_to_isometry(&spec, &mut budget).unwrap();
        let k = dihedral_quotient_count(&spec, n, &mut budget).unwrap();
        println!("{name}: {} class(es), {k} quotient(s) onto D{}", classes.len(), 2 * n);
    }
}
