//! Free groups, braid monodromy, presentations, finite quotients and
//! Alexander polynomials.

mod finite;
mod homs;
mod presentation;
mod word;

pub use finite::{
    alternating, cyclic, dihedral, direct_product, semidirect_cyclic, symmetric, symmetric3, todd_coxeter, FiniteGroup,
    MAX_ISO_ORDER, MAX_TABLE_ORDER,
};
pub use homs::{
    catalogue, count_epis, count_homs, enumerate_homs, epimorphism_exists, hom_count_spectrum, CATALOGUE,
    CATALOGUE_MAX_ORDER, MAX_ASSIGNMENTS,
};
pub use presentation::{local_presentation_of, LaurentPoly, Presentation, PresentationJson};
pub use word::{default_names, monodromy, pi_word, Convention, Endomorphism, FiberType, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported fiber type {0:?}")]
    UnknownFiber(String),
    #[error("bound exceeded: {0}")]
    Bound(String),
    #[error("augmentation: {0}")]
    Augmentation(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
}

/// `<α1, α2, α3 | m(α_i) = α_i>` for the monodromy about a fiber.
pub fn local_presentation(t: FiberType, conv: Convention) -> Presentation {
    local_presentation_of(&monodromy(t, conv))
}

/// Isomorphism test for groups of order at most `MAX_ISO_ORDER`.
pub fn is_isomorphic_small(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool, GroupError> {
    g.is_isomorphic(h)
}

/// `B3 / Δ^2 = <a, b | aba = bab, (ab)^3>`.
pub fn reduced_braid_group() -> Presentation {
    Presentation::parse("<a, b | aba = bab, (ab)^3>").expect("fixed presentation")
}

/// `B3 = <a, b | aba = bab>`, the trefoil group.
pub fn braid_group_3() -> Presentation {
    Presentation::parse("<a, b | aba = bab>").expect("fixed presentation")
}
