//! Exact computational toolkit for plane sextics of torus type: even
//! lattices and root-system embeddings into E8, trigonal curves and their
//! singular fibers, torus structures, and finitely presented groups.

pub mod arith;
pub mod cli;
pub mod groups;
pub mod lattice;
pub mod roots;
pub mod torus;
pub mod trigonal;
