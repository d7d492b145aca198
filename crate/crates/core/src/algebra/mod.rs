//! Polynomial arithmetic in K[x_1..x_n, y_1..y_n] under pure lex, ideal
//! generating sets, Buchberger's algorithm, and Hilbert function counts.

pub mod groebner;
pub mod hilbert;
pub mod ideals;
pub mod poly;

pub use groebner::{buchberger, is_groebner, poly_reduce, s_poly, GroebnerBasis};
pub use hilbert::{
    binomial_coeff, hilbert_function, monomials_of_degree, quotient_dim_by_rank,
    standard_monomials,
};
pub use ideals::{
    bipartite_initial_graph, clique_split, edge_binomials, initial_edge_monomials,
    monomial_min_gens, BipartiteInitialGraph, CliqueSplit, IdealBasis, Provenance,
};
pub use poly::{Monomial, Poly};
