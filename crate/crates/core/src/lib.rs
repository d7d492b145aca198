//! Binomial edge ideals of finite simple graphs: construction of J_G and its
//! lex initial ideal, Groebner machinery over a prime field, graded Betti
//! numbers through two independent engines (Koszul homology and simplicial
//! homology of Stanley-Reisner complexes), proper interval graph recognition,
//! and exhaustive verification sweeps over small graph corpora.

pub mod error;
pub mod field;
pub mod linalg;

pub mod graphs;
pub mod pigraph;

pub mod algebra;
pub mod betti;
pub mod verify;

pub use error::{Error, Result};
