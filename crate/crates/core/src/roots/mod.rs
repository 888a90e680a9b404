//! ADE root systems and their embeddings into E8: witnesses, classes up
//! to isometry of E8, the quotient torsion `Tors(E8 / Σ)` and the
//! classification tables built from it.

mod ade;
mod e8;
mod lemma;
mod search;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::intmat::IntMatrix;
use crate::arith::Q;
use crate::lattice::{SublatticeEmbedding, TorsionGroup};

pub use ade::{all_symbols, AdeSymbol, Family, RootSystemSpec, SpecParseError};
pub use e8::{e8_lattice, e8_roots, e8_roots_even};
pub use lemma::{verify_lemma_e8, LemmaE8Report};
pub use search::{Budget, SearchError};

use search::{find_tuple, merge_by_automorphisms, ordered_orbits, OrbitSet};

/// Default node budget for isometry-class searches.
pub const DEFAULT_BUDGET: u64 = 2_000_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`] in the CLI.
pub const BUDGET_ENV: &str = "SEXTIC_SEARCH_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootsError {
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("{0} does not embed into E8")]
    NotEmbeddable(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("embeddings of {0} differ in their {1}-torsion")]
    AmbiguousTorsion(String, u64),
}

/// Simple roots of a spec realized as E8 roots, in the order of
/// [`RootSystemSpec::cartan`].
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingWitness {
    spec: RootSystemSpec,
    roots: Vec<usize>,
}

/// JSON shape of a witness: even coordinates as rational strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub spec: String,
    pub roots: Vec<Vec<String>>,
}

impl EmbeddingWitness {
    pub fn spec(&self) -> &RootSystemSpec {
        &self.spec
    }

    /// Even-model coordinates of each root.
    pub fn even_coordinates(&self) -> Vec<Vec<Q>> {
        let d = e8::data();
        self.roots.iter().map(|&r| d.roots[r].iter().map(|&c| Q::new(c.into(), 2.into())).collect()).collect()
    }

    /// Coordinates of each root in the basis of [`e8_lattice`].
    pub fn basis_coordinates(&self) -> Vec<Vec<BigInt>> {
        let d = e8::data();
        self.roots.iter().map(|&r| d.basis_coords[r].iter().map(|&c| BigInt::from(c)).collect()).collect()
    }

    pub fn embedding(&self) -> SublatticeEmbedding {
        let cols = self.basis_coordinates();
        SublatticeEmbedding::new(e8_lattice(), IntMatrix::from_columns(8, &cols))
            .expect("roots of a nondegenerate Gram are independent")
    }

    pub fn quotient_torsion(&self) -> TorsionGroup {
        self.embedding().quotient_torsion()
    }

    /// Recomputes every product from the even coordinates and compares
    /// with the Cartan matrix of the spec.
    pub fn verify(&self) -> bool {
        let d = e8::data();
        let c = self.spec.cartan();
        if c.len() != self.roots.len() {
            return false;
        }
        (0..c.len()).all(|i| {
            (0..c.len()).all(|j| e8::doubled_product(&d.roots[self.roots[i]], &d.roots[self.roots[j]]) == c[i][j])
        })
    }

    pub fn to_json(&self) -> WitnessJson {
        WitnessJson {
            spec: self.spec.to_string(),
            roots: self
                .even_coordinates()
                .iter()
                .map(|v| v.iter().map(crate::arith::rational::format_q).collect())
                .collect(),
        }
    }
}

/// One line of a classification table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRow {
    pub spec: RootSystemSpec,
    pub torsion: TorsionGroup,
    pub classes: usize,
}

/// JSON shape `{"spec": "...", "torsion": [..], "classes": k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub spec: String,
    pub torsion: Vec<u64>,
    pub classes: usize,
}

impl ClassificationRow {
    pub fn to_json(&self) -> RowJson {
        RowJson { spec: self.spec.to_string(), torsion: self.torsion.to_json().factors, classes: self.classes }
    }
}

/// Some embedding of `spec` into E8, or `None` after exhaustive search.
pub fn find_embedding(spec: &RootSystemSpec) -> Option<EmbeddingWitness> {
    if spec.rank() > 8 {
        return None;
    }
    find_tuple(&spec.cartan()).map(|roots| EmbeddingWitness { spec: spec.clone(), roots })
}

fn classes_from_orbits(
    spec: &RootSystemSpec,
    orbits: &OrbitSet,
    budget: &mut Budget,
) -> Result<Vec<EmbeddingWitness>, SearchError> {
    let classes = merge_by_automorphisms(orbits, &spec.diagram_automorphisms(), budget)?;
    Ok(classes
        .into_iter()
        .map(|members| EmbeddingWitness { spec: spec.clone(), roots: orbits.reps()[members[0]].clone() })
        .collect())
}

/// One witness per class of embeddings up to isometry of E8.
pub fn all_embeddings_up_to_isometry(
    spec: &RootSystemSpec,
    budget: &mut Budget,
) -> Result<Vec<EmbeddingWitness>, SearchError> {
    if spec.rank() > 8 {
        return Ok(Vec::new());
    }
    let orbits = ordered_orbits(&spec.cartan(), budget)?;
    if spec.is_empty() {
        return Ok(vec![EmbeddingWitness { spec: spec.clone(), roots: Vec::new() }]);
    }
    classes_from_orbits(spec, &orbits, budget)
}

fn rows_for(spec: &RootSystemSpec, classes: &[EmbeddingWitness]) -> Vec<ClassificationRow> {
    let mut rows: Vec<ClassificationRow> = Vec::new();
    for w in classes {
        let t = w.quotient_torsion();
        match rows.iter_mut().find(|r| r.torsion == t) {
            Some(r) => r.classes += 1,
            None => rows.push(ClassificationRow { spec: spec.clone(), torsion: t, classes: 1 }),
        }
    }
    rows
}

/// Every nonempty root system embeddable in E8, with one row per
/// quotient-torsion group that occurs among its classes. Orbit lists are
/// shared between specs with a common prefix of summands.
pub fn classify_all(budget: &mut Budget) -> Result<Vec<ClassificationRow>, SearchError> {
    let symbols = all_symbols(8);
    let mut rows = Vec::new();
    fn rec(
        symbols: &[AdeSymbol],
        start: usize,
        prefix: &[AdeSymbol],
        orbits: &OrbitSet,
        budget: &mut Budget,
        rows: &mut Vec<ClassificationRow>,
    ) -> Result<(), SearchError> {
        let rank: usize = prefix.iter().map(|s| s.rank()).sum();
        for (k, s) in symbols.iter().enumerate().skip(start) {
            if rank + s.rank() > 8 {
                continue;
            }
            let mut next: Vec<AdeSymbol> = prefix.to_vec();
            next.push(*s);
            let spec = RootSystemSpec::new(next.clone());
            let cartan = spec.cartan();
            let mut o = orbits.clone();
            for (i, row) in cartan.iter().enumerate().skip(rank) {
                let row: Vec<i8> = row[..i].iter().map(|&v| v as i8).collect();
                o = o.extend(&row, budget)?;
                if o.is_empty() {
                    break;
                }
            }
            if o.is_empty() {
                continue;
            }
            let classes = classes_from_orbits(&spec, &o, budget)?;
            rows.extend(rows_for(&spec, &classes));
            rec(symbols, k, &next, &o, budget, rows)?;
        }
        Ok(())
    }
    rec(&symbols, 0, &[], &OrbitSet::empty_tuple(), budget, &mut rows)?;
    sort_rows(&mut rows);
    Ok(rows)
}

fn sort_rows(rows: &mut [ClassificationRow]) {
    rows.sort_by(|a, b| a.torsion.cmp(&b.torsion).then_with(|| a.spec.summands().cmp(b.spec.summands())));
}

/// Rows of [`classify_all`] whose torsion satisfies `pred`.
pub fn classify_by_predicate(
    pred: impl Fn(&TorsionGroup) -> bool,
    budget: &mut Budget,
) -> Result<Vec<ClassificationRow>, SearchError> {
    Ok(classify_all(budget)?.into_iter().filter(|r| pred(&r.torsion)).collect())
}

/// Rows with nontrivial torsion of odd order.
pub fn classify_odd_torsion(budget: &mut Budget) -> Result<Vec<ClassificationRow>, SearchError> {
    classify_by_predicate(|t| !t.is_trivial() && t.is_odd(), budget)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Number of subgroups of order `n` (prime) in the `n`-torsion of the
/// quotient torsion, `(n^r - 1)/(n - 1)`.
pub fn dihedral_quotient_count(spec: &RootSystemSpec, n: u64, budget: &mut Budget) -> Result<u64, RootsError> {
    if !is_prime(n) {
        return Err(RootsError::NotPrime(n));
    }
    let classes = all_embeddings_up_to_isometry(spec, budget)?;
    if classes.is_empty() {
        return Err(RootsError::NotEmbeddable(spec.to_string()));
    }
    let ranks: Vec<usize> = classes.iter().map(|w| w.quotient_torsion().p_rank(n)).collect();
    if ranks.iter().any(|&r| r != ranks[0]) {
        return Err(RootsError::AmbiguousTorsion(spec.to_string(), n));
    }
    let r = ranks[0] as u32;
    Ok((n.pow(r) - 1) / (n - 1))
}

/// Torsion order as a machine integer (for display and counting).
pub fn torsion_order(t: &TorsionGroup) -> u64 {
    t.order().to_u64().expect("torsion of a sublattice of E8 is small")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> RootSystemSpec {
        s.parse().unwrap()
    }

    #[test]
    fn witnesses_verify() {
        for s in ["2A4", "4A2", "8A1", "E8", "D8", "A8", "E6+A2"] {
            let w = find_embedding(&spec(s)).unwrap_or_else(|| panic!("{s} embeds"));
            assert!(w.verify(), "{s}");
        }
        for s in ["A3+2A2", "A4+2A2", "A6+A2", "9A1", "D5+A4"] {
            assert!(find_embedding(&spec(s)).is_none(), "{s}");
        }
    }

    #[test]
    fn known_torsion() {
        let w = find_embedding(&spec("4A2")).unwrap();
        assert_eq!(w.quotient_torsion(), TorsionGroup::from_factors(&[3, 3]).unwrap());
        let w = find_embedding(&spec("2A4")).unwrap();
        assert_eq!(w.quotient_torsion(), TorsionGroup::from_factors(&[5]).unwrap());
        let w = find_embedding(&spec("A1")).unwrap();
        assert!(w.quotient_torsion().is_trivial());
    }

    #[test]
    fn unique_classes() {
        let mut b = Budget::new(DEFAULT_BUDGET);
        assert_eq!(all_embeddings_up_to_isometry(&spec("2A4"), &mut b).unwrap().len(), 1);
        assert_eq!(all_embeddings_up_to_isometry(&spec("4A2"), &mut b).unwrap().len(), 1);
        assert_eq!(all_embeddings_up_to_isometry(&RootSystemSpec::empty(), &mut b).unwrap().len(), 1);
    }

    #[test]
    fn dihedral_counts() {
        let mut b = Budget::new(DEFAULT_BUDGET);
        assert_eq!(dihedral_quotient_count(&spec("4A2"), 3, &mut b), Ok(4));
        assert_eq!(dihedral_quotient_count(&spec("2A4"), 5, &mut b), Ok(1));
        assert_eq!(dihedral_quotient_count(&spec("A8"), 3, &mut b), Ok(1));
        assert_eq!(dihedral_quotient_count(&spec("2A4"), 3, &mut b), Ok(0));
        assert_eq!(dihedral_quotient_count(&spec("A8"), 4, &mut b), Err(RootsError::NotPrime(4)));
        assert!(matches!(dihedral_quotient_count(&spec("A6+A2"), 3, &mut b), Err(RootsError::NotEmbeddable(_))));
    }
}
