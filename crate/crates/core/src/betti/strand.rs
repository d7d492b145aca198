//! Closed-form counts for the linear strand β_{i,i+1} and the explicit
//! subset-to-(position, clique) bijection behind the strand equality for
//! identity-closed graphs.

use crate::algebra::ideals::{bipartite_initial_graph, BipartiteInitialGraph};
use crate::error::{Error, Result};
use crate::graphs::{next_same_popcount, SimpleGraph};
use std::collections::HashMap;

/// The sequence β_{1,2}, β_{2,3}, ... with trailing zeros trimmed, so equal
/// strands compare equal regardless of how far each side was computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearStrand(Vec<u64>);

impl LinearStrand {
    pub fn new(mut values: Vec<u64>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        LinearStrand(values)
    }

    /// β_{i,i+1} for i >= 1.
    pub fn get(&self, i: usize) -> u64 {
        assert!(i >= 1);
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }
}

/// β_{i,i+1}(S/J) for the edge binomials of a graph: i times the number of
/// cliques on i+1 vertices.
pub fn linear_strand_clique(g: &SimpleGraph) -> Result<LinearStrand> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let f = g.f_vector();
    let top = g.n().saturating_sub(1).max(1);
    let values: Vec<u64> = (1..=top).map(|i| i as u64 * f.get(i as isize)).collect();
    Ok(LinearStrand::new(values))
}

/// Number of connected components of the complement of g restricted to the
/// vertex mask `s` (bits are vertex-1).
fn complement_components(g: &SimpleGraph, s: u64) -> usize {
    let mut remaining = s;
    let mut count = 0;
    while remaining != 0 {
        count += 1;
        let mut stack = remaining & remaining.wrapping_neg();
        remaining ^= stack;
        while stack != 0 {
            let v = stack.trailing_zeros() as usize;
            stack &= stack - 1;
            let nbrs = !(g.adj_mask(v) as u64) & remaining & !(1u64 << v);
            stack |= nbrs;
            remaining &= !nbrs;
        }
    }
    count
}

/// β_{i,i+1}(R/I(H)) for the edge ideal of any graph H, by the component
/// count: sum over vertex subsets S of size i+1 of (#components of the
/// complement of H restricted to S) − 1. Exhaustive over subsets.
pub fn linear_strand_rvt(h: &SimpleGraph) -> LinearStrand {
    let n = h.n();
    assert!(n <= 20, "subset enumeration supports at most 20 vertices");
    let mut values = vec![0u64; n.saturating_sub(1)];
    for size in 2..=n {
        let limit = 1u64 << n;
        let mut s = (1u64 << size) - 1;
        let mut total = 0u64;
        while s < limit {
            total += complement_components(h, s) as u64 - 1;
            s = next_same_popcount(s);
        }
        values[size - 2] = total;
    }
    LinearStrand::new(values)
}

/// β_{i,i+1}(R/I(H)) for a bipartite graph with declared sides: the number
/// of subsets of size i+1 that meet both sides and induce a complete
/// bipartite subgraph.
pub fn linear_strand_bipartite(h: &BipartiteInitialGraph) -> Result<LinearStrand> {
    let g = &h.graph;
    let nv = g.n();
    let nx = h.n;
    for (u, v) in g.edges() {
        if !(u <= nx && v > nx) {
            return Err(Error::InvalidGraph(format!(
                "edge {{{u},{v}}} does not cross the declared bipartition at {nx}"
            )));
        }
    }
    assert!(nv <= 20, "subset enumeration supports at most 20 vertices");
    let x_mask: u64 = (1u64 << nx) - 1;
    let mut values = vec![0u64; nv.saturating_sub(1)];
    for size in 2..=nv {
        let limit = 1u64 << nv;
        let mut s = (1u64 << size) - 1;
        let mut total = 0u64;
        while s < limit {
            let a = s & x_mask;
            let b = s & !x_mask;
            if a != 0 && b != 0 {
                let complete = {
                    let mut ok = true;
                    let mut m = a;
                    while m != 0 {
                        let v = m.trailing_zeros() as usize;
                        m &= m - 1;
                        if g.adj_mask(v) as u64 & b != b {
                            ok = false;
                            break;
                        }
                    }
                    ok
                };
                if complete {
                    total += 1;
                }
            }
            s = next_same_popcount(s);
        }
        values[size - 2] = total;
    }
    Ok(LinearStrand::new(values))
}

/// The explicit bijection between the strand subsets of the bipartite
/// initial graph and pairs (j, clique): the subset splits into x-indices
/// k_1 < .. < k_j and y-indices k_{j+1} < .. < k_{i+1}, whose union is a
/// clique of G; conversely a clique {k_1 < .. < k_{i+1}} and a cut position
/// j produce the subset {x_{k_1}, .., x_{k_j}, y_{k_{j+1}}, .., y_{k_{i+1}}}.
#[derive(Debug, Clone)]
pub struct StrandBijection {
    pub i: usize,
    /// Subsets S of V(H) with |S| = i+1 whose restricted complement has two
    /// components; vertex labels 1..=n are x's, n+1..=2n are y's.
    pub subsets: Vec<Vec<usize>>,
    /// All (j, C) with 1 <= j <= i and C a clique on i+1 vertices.
    pub pairs: Vec<(usize, Vec<usize>)>,
    /// subsets[k] maps to pairs[forward[k]].
    pub forward: Vec<usize>,
    /// pairs[k] maps to subsets[backward[k]].
    pub backward: Vec<usize>,
}

impl StrandBijection {
    pub fn roundtrip_is_identity(&self) -> bool {
        self.forward.len() == self.subsets.len()
            && self.backward.len() == self.pairs.len()
            && self.forward.len() == self.backward.len()
            && self
                .forward
                .iter()
                .enumerate()
                .all(|(k, &p)| self.backward[p] == k)
            && self
                .backward
                .iter()
                .enumerate()
                .all(|(k, &s)| self.forward[s] == k)
    }
}

pub fn strand_bijection_witness(g: &SimpleGraph, i: usize) -> Result<StrandBijection> {
    let h = bipartite_initial_graph(g)?;
    let n = h.n;
    let nv = h.graph.n();
    assert!(nv <= 20, "subset enumeration supports at most 20 vertices");
    if i < 1 {
        return Err(Error::InvalidParams(
            "the strand bijection needs i >= 1".into(),
        ));
    }

    let mut subsets: Vec<Vec<usize>> = Vec::new();
    if i < nv {
        let limit = 1u64 << nv;
        let mut s = (1u64 << (i + 1)) - 1;
        while s < limit {
            if complement_components(&h.graph, s) == 2 {
                subsets.push((0..nv).filter(|&v| s >> v & 1 == 1).map(|v| v + 1).collect());
            }
            s = next_same_popcount(s);
        }
    }

    let mut pairs: Vec<(usize, Vec<usize>)> = Vec::new();
    for c in g.cliques(i + 1) {
        for j in 1..=i {
            pairs.push((j, c.clone()));
        }
    }

    let pair_index: HashMap<(usize, Vec<usize>), usize> = pairs
        .iter()
        .cloned()
        .zip(0..)
        .collect();
    let subset_index: HashMap<Vec<usize>, usize> = subsets
        .iter()
        .cloned()
        .zip(0..)
        .collect();

    let mut forward = Vec::with_capacity(subsets.len());
    for s in &subsets {
        let xs: Vec<usize> = s.iter().copied().filter(|&v| v <= n).collect();
        let ys: Vec<usize> = s.iter().copied().filter(|&v| v > n).map(|v| v - n).collect();
        let j = xs.len();
        let mut labels = xs;
        labels.extend(ys);
        let target = pair_index.get(&(j, labels.clone())).copied().ok_or_else(|| {
            Error::InvalidGraph(format!(
                "subset {s:?} maps to ({j}, {labels:?}), which is not a cut clique pair"
            ))
        })?;
        forward.push(target);
    }

    let mut backward = Vec::with_capacity(pairs.len());
    for (j, c) in &pairs {
        let mut s: Vec<usize> = c[..*j].to_vec();
        s.extend(c[*j..].iter().map(|&k| k + n));
        let target = subset_index.get(&s).copied().ok_or_else(|| {
            Error::InvalidGraph(format!(
                "pair ({j}, {c:?}) maps to {s:?}, which is not a two-component subset"
            ))
        })?;
        backward.push(target);
    }

    Ok(StrandBijection {
        i,
        subsets,
        pairs,
        forward,
        backward,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_strand_small_graphs() {
        assert_eq!(
            linear_strand_clique(&SimpleGraph::complete(2)).unwrap().values(),
            &[1]
        );
        assert_eq!(
            linear_strand_clique(&SimpleGraph::complete(3)).unwrap().values(),
            &[3, 2]
        );
        assert_eq!(
            linear_strand_clique(&SimpleGraph::path(3)).unwrap().values(),
            &[2]
        );
        assert!(linear_strand_clique(&SimpleGraph::new(3, &[(1, 2)]).unwrap()).is_err());
    }

    #[test]
    fn rvt_strand_on_tiny_graphs() {
        assert_eq!(linear_strand_rvt(&SimpleGraph::complete(2)).values(), &[1]);
        let two_edges = SimpleGraph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(linear_strand_rvt(&two_edges).values(), &[2]);
        // The 4-cycle is complete bipartite on {1,3} vs {2,4}, so every
        // larger subset keeps a split complement too: strand (4, 4, 1).
        assert_eq!(linear_strand_rvt(&SimpleGraph::cycle(4)).values(), &[4, 4, 1]);
    }

    #[test]
    fn bipartite_strand_on_complete_bipartite() {
        let k22 = BipartiteInitialGraph {
            graph: SimpleGraph::new(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap(),
            n: 2,
        };
        assert_eq!(linear_strand_bipartite(&k22).unwrap().values(), &[4, 4, 1]);
        assert_eq!(
            linear_strand_rvt(&k22.graph).values(),
            linear_strand_bipartite(&k22).unwrap().values()
        );
    }

    #[test]
    fn bipartite_strand_rejects_edges_within_a_side() {
        let bad = BipartiteInitialGraph {
            graph: SimpleGraph::new(4, &[(1, 2)]).unwrap(),
            n: 2,
        };
        assert!(linear_strand_bipartite(&bad).is_err());
    }

    #[test]
    fn strand_routes_agree_through_the_initial_graph() {
        for g in [
            SimpleGraph::path(4),
            SimpleGraph::complete(4),
            SimpleGraph::new(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap(),
        ] {
            let h = bipartite_initial_graph(&g).unwrap();
            let by_clique = linear_strand_clique(&g).unwrap();
            let by_rvt = linear_strand_rvt(&h.graph);
            let by_split = linear_strand_bipartite(&h).unwrap();
            assert_eq!(by_clique, by_rvt, "graph {g:?}");
            assert_eq!(by_clique, by_split, "graph {g:?}");
        }
    }

    #[test]
    fn bijection_for_one_edge() {
        let b = strand_bijection_witness(&SimpleGraph::complete(2), 1).unwrap();
        assert_eq!(b.subsets, vec![vec![1, 4]]); // {x_1, y_2}
        assert_eq!(b.pairs, vec![(1, vec![1, 2])]);
        assert!(b.roundtrip_is_identity());
    }

    #[test]
    fn bijection_for_the_triangle() {
        let b = strand_bijection_witness(&SimpleGraph::complete(3), 2).unwrap();
        assert_eq!(b.pairs.len(), 2); // (1,{1,2,3}), (2,{1,2,3})
        assert_eq!(b.subsets.len(), 2);
        assert!(b.subsets.contains(&vec![1, 5, 6])); // {x1, y2, y3}
        assert!(b.subsets.contains(&vec![1, 2, 6])); // {x1, x2, y3}
        assert!(b.roundtrip_is_identity());
    }

    #[test]
    fn bijection_length_matches_the_clique_count() {
        let g = SimpleGraph::path(4);
        for i in 1..=3 {
            let b = strand_bijection_witness(&g, i).unwrap();
            let expected = i as u64 * g.f_vector().get(i as isize);
            assert_eq!(b.subsets.len() as u64, expected, "i = {i}");
            assert_eq!(b.pairs.len() as u64, expected, "i = {i}");
            assert!(b.roundtrip_is_identity());
        }
    }
}
