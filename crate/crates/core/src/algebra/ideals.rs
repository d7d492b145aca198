//! Generating sets for the ideals attached to a graph: the binomial edge
//! ideal, its lex initial ideal for identity-closed graphs, and the
//! complete-graph decomposition pieces used by the exact-sequence checks.

use super::poly::{Monomial, Poly};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::graphs::SimpleGraph;
use crate::pigraph;

/// How a generating set was produced; surfaced in dumps and reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// f_ij = x_i*y_j - x_j*y_i over the edges of a graph.
    EdgeBinomials,
    /// x_i*y_j over the edges of an identity-closed graph.
    InitialEdgeMonomials,
    /// Output of Buchberger's algorithm.
    GroebnerBasis,
    /// One of the pieces P, Q, P+Q of the complete-graph splitting.
    Decomposition(String),
    /// Read back from a dump.
    Parsed,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::EdgeBinomials => write!(f, "edge binomials"),
            Provenance::InitialEdgeMonomials => write!(f, "initial edge monomials"),
            Provenance::GroebnerBasis => write!(f, "reduced Groebner basis"),
            Provenance::Decomposition(which) => write!(f, "decomposition piece {which}"),
            Provenance::Parsed => write!(f, "parsed input"),
        }
    }
}

/// A finite generating set in S = K[x_1..x_n, y_1..y_n]; nvars = 2n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    pub nvars: usize,
    pub gens: Vec<Poly>,
    pub provenance: Provenance,
}

impl IdealBasis {
    pub fn pair_count(&self) -> usize {
        self.nvars / 2
    }

    pub fn is_monomial_basis(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    /// The generators as monomials, when every generator is a single term.
    pub fn as_monomials(&self) -> Option<Vec<Monomial>> {
        self.gens
            .iter()
            .map(|g| {
                if g.num_terms() == 1 {
                    Some(g.leading_monomial().unwrap().clone())
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn max_gen_degree(&self) -> usize {
        self.gens
            .iter()
            .filter_map(|g| g.degree())
            .max()
            .unwrap_or(0)
    }
}

fn binomial(field: &PrimeField, n: usize, i: usize, j: usize) -> Poly {
    debug_assert!(i < j && 1 <= i && j <= n);
    let mut lead = vec![0u8; 2 * n];
    lead[i - 1] = 1;
    lead[n + j - 1] = 1;
    let mut trail = vec![0u8; 2 * n];
    trail[j - 1] = 1;
    trail[n + i - 1] = 1;
    Poly::from_terms(
        field,
        vec![
            (1, Monomial::from_exps(lead)),
            (field.p() - 1, Monomial::from_exps(trail)),
        ],
    )
}

fn edge_monomial(field: &PrimeField, n: usize, i: usize, j: usize) -> Poly {
    debug_assert!(i < j && 1 <= i && j <= n);
    let mut exps = vec![0u8; 2 * n];
    exps[i - 1] = 1;
    exps[n + j - 1] = 1;
    Poly::from_terms(field, vec![(1, Monomial::from_exps(exps))])
}

fn variable(field: &PrimeField, nvars: usize, slot: usize) -> Poly {
    Poly::from_terms(field, vec![(1, Monomial::var(nvars, slot))])
}

/// The binomial edge ideal: f_ij = x_i*y_j - x_j*y_i for each edge {i,j}, i<j.
///
/// Isolated vertices are rejected: they contribute nothing to the ideal and
/// every downstream statement assumes each vertex meets an edge.
pub fn edge_binomials(field: &PrimeField, g: &SimpleGraph) -> Result<IdealBasis> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let n = g.n();
    let gens = g
        .edges()
        .into_iter()
        .map(|(i, j)| binomial(field, n, i, j))
        .collect();
    Ok(IdealBasis {
        nvars: 2 * n,
        gens,
        provenance: Provenance::EdgeBinomials,
    })
}

/// The lex initial ideal of the edge binomials, valid exactly when the graph
/// is closed under its given labeling: generated by x_i*y_j over edges i < j.
pub fn initial_edge_monomials(field: &PrimeField, g: &SimpleGraph) -> Result<IdealBasis> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    if !pigraph::is_closed_identity(g) {
        return Err(Error::NotClosed(
            "graph is not closed under its labeling; the initial ideal is not generated by the \
             edge monomials — compute a Groebner basis instead"
                .into(),
        ));
    }
    let n = g.n();
    let gens = g
        .edges()
        .into_iter()
        .map(|(i, j)| edge_monomial(field, n, i, j))
        .collect();
    Ok(IdealBasis {
        nvars: 2 * n,
        gens,
        provenance: Provenance::InitialEdgeMonomials,
    })
}

/// The bipartite graph carrying the initial edge monomials: vertices 1..n are
/// the x-variables, n+1..2n the y-variables, and each edge {i,j} of G with
/// i < j becomes the edge {x_i, y_j}.
#[derive(Debug, Clone)]
pub struct BipartiteInitialGraph {
    pub graph: SimpleGraph,
    /// Number of x-vertices; graph vertex v <= n is x_v, v > n is y_{v-n}.
    pub n: usize,
}

pub fn bipartite_initial_graph(g: &SimpleGraph) -> Result<BipartiteInitialGraph> {
    if !pigraph::is_closed_identity(g) {
        return Err(Error::NotClosed(
            "bipartite initial graph is only defined for identity-closed graphs".into(),
        ));
    }
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(i, j)| (i, n + j)).collect();
    Ok(BipartiteInitialGraph {
        graph: SimpleGraph::new(2 * n, &edges)?,
        n,
    })
}

/// The three ideals in the splitting of a complete graph along an interval.
#[derive(Debug, Clone)]
pub struct CliqueSplit {
    /// J of the complete graph on n vertices.
    pub p: IdealBasis,
    /// Variables x_i, y_i for a <= i <= b, plus J of the cliques on
    /// [1, a-1] and [b+1, n] separately.
    pub q: IdealBasis,
    /// P + Q, simplified: the same variables plus J of the complete graph on
    /// all labels outside [a, b].
    pub p_plus_q: IdealBasis,
}

/// Build P, Q, and P+Q for the splitting of K_n at the interval [a, b],
/// requiring 1 < a <= b < n.
pub fn clique_split(field: &PrimeField, n: usize, a: usize, b: usize) -> Result<CliqueSplit> {
    if n < 3 || a <= 1 || a > b || b >= n {
        return Err(Error::InvalidParams(format!(
            "need 1 < a <= b < n, got n={n}, a={a}, b={b}"
        )));
    }
    if n > crate::graphs::MAX_VERTICES {
        return Err(Error::InvalidParams(format!(
            "n={n} exceeds the supported maximum {}",
            crate::graphs::MAX_VERTICES
        )));
    }
    let nvars = 2 * n;

    let mut p_gens = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            p_gens.push(binomial(field, n, i, j));
        }
    }

    let mut q_gens = Vec::new();
    let mut sum_gens = Vec::new();
    for i in a..=b {
        q_gens.push(variable(field, nvars, i - 1));
        q_gens.push(variable(field, nvars, n + i - 1));
        sum_gens.push(variable(field, nvars, i - 1));
        sum_gens.push(variable(field, nvars, n + i - 1));
    }
    let outside: Vec<usize> = (1..a).chain((b + 1)..=n).collect();
    for (s, &i) in outside.iter().enumerate() {
        for &j in &outside[s + 1..] {
            // Q keeps only within-block pairs; the sum gets every pair.
            if (i < a) == (j < a) {
                q_gens.push(binomial(field, n, i, j));
            }
            sum_gens.push(binomial(field, n, i, j));
        }
    }

    Ok(CliqueSplit {
        p: IdealBasis {
            nvars,
            gens: p_gens,
            provenance: Provenance::Decomposition("P".into()),
        },
        q: IdealBasis {
            nvars,
            gens: q_gens,
            provenance: Provenance::Decomposition("Q".into()),
        },
        p_plus_q: IdealBasis {
            nvars,
            gens: sum_gens,
            provenance: Provenance::Decomposition("P+Q".into()),
        },
    })
}

/// Minimal generating set of a monomial ideal: drop duplicates and any
/// monomial divisible by another generator. Output is sorted ascending.
pub fn monomial_min_gens(mut monos: Vec<Monomial>) -> Vec<Monomial> {
    monos.sort();
    monos.dedup();
    let keep: Vec<Monomial> = monos
        .iter()
        .filter(|m| {
            !monos
                .iter()
                .any(|d| *d != **m && d.divides(m))
        })
        .cloned()
        .collect();
    keep
}
