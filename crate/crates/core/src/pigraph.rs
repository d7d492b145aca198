//! Closed labelings and proper interval (PI) graphs.
//!
//! A labeling of G is closed when {i,k} in E with i < j < k forces {i,j} and
//! {j,k} into E. A graph admitting a closed labeling is exactly a proper
//! interval graph, and under a closed labeling every facet of the clique
//! complex is an interval [a_t, b_t] of consecutive labels.
//!
//! Recognition walks consecutive arrangements of the maximal cliques and
//! derives the vertex order from each vertex's run of cliques; every valid
//! closed labeling arises this way, so taking the lexicographically smallest
//! surviving permutation is a canonical choice.

use crate::error::{Error, Result};
use crate::graphs::{check_bijection, full_mask, mask_vertices, SimpleGraph};
use std::collections::HashMap;
use std::sync::OnceLock;

/// Bijection {1..n} -> {1..n}; perm[u-1] is the new label of original vertex u.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedLabeling {
    perm: Vec<usize>,
}

impl ClosedLabeling {
    pub fn identity(n: usize) -> Self {
        ClosedLabeling {
            perm: (1..=n).collect(),
        }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    pub fn apply(&self, g: &SimpleGraph) -> SimpleGraph {
        g.relabel(&self.perm).expect("labeling validated at construction")
    }
}

/// Facets of the clique complex as label intervals, sorted by left endpoint.
/// For a connected graph: a_1 = 1 < a_2 < ... < a_r and b_1 < ... < b_r = n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetIntervals {
    pub intervals: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reg2Class {
    /// Two connected components, both complete: K_m joined with K_p, m + p = n.
    DisjointTwoCliques { m: usize, p: usize },
    /// Connected with exactly two facets [1,b] and [a,n], 1 < a <= b < n.
    TwoOverlappingIntervalCliques { a: usize, b: usize },
    NotRegTwo,
}

/// Closedness of the identity labeling, by bitmask: for each edge {i,k} every
/// j strictly between must be adjacent to both ends.
pub fn is_closed_identity(g: &SimpleGraph) -> bool {
    for (i, k) in g.edges() {
        if k - i >= 2 {
            let between = (full_mask(k - 1) >> i) << i; // bits i..k-1 = vertices i+1..k-1
            let both = g.adj_mask(i - 1) & g.adj_mask(k - 1);
            if between & !both != 0 {
                return false;
            }
        }
    }
    true
}

pub fn validate_closed_labeling(g: &SimpleGraph, perm: &[usize]) -> Result<bool> {
    check_bijection(g.n(), perm)?;
    Ok(is_closed_identity(&g.relabel(perm)?))
}

/// Canonical closed labeling, if one exists: the lexicographically smallest
/// valid permutation, components labeled in blocks ordered by smallest
/// original vertex.
pub fn find_closed_labeling(g: &SimpleGraph) -> Option<ClosedLabeling> {
    assert!(g.n() <= 20, "closed labeling search intended for n <= 20");
    let mut perm = vec![0usize; g.n()];
    let mut offset = 0usize;
    for comp in g.connected_components() {
        let (h, map) = g.induced_subgraph(&comp).expect("component subset");
        let sub = find_closed_connected(&h)?;
        for (i0, &old) in map.iter().enumerate() {
            perm[old - 1] = offset + sub[i0];
        }
        offset += h.n();
    }
    debug_assert!(validate_closed_labeling(g, &perm).unwrap());
    Some(ClosedLabeling { perm })
}

/// Connected case worker; returns the labeling as perm over h's vertices.
fn find_closed_connected(h: &SimpleGraph) -> Option<Vec<usize>> {
    let n = h.n();
    if n == 1 {
        return Some(vec![1]);
    }
    if has_claw(h) {
        return None; // induced K_{1,3} rules out proper interval immediately
    }
    let facets: Vec<u32> = h
        .maximal_cliques()
        .facets
        .iter()
        .map(|f| f.iter().fold(0u32, |m, &v| m | 1 << (v - 1)))
        .collect();
    let r = facets.len();
    assert!(r <= 64, "facet arrangement search supports at most 64 facets");

    // Backtracking over consecutive arrangements of the facets: once a vertex
    // leaves the running facet it may not reappear.
    struct Search<'a> {
        h: &'a SimpleGraph,
        facets: &'a [u32],
        order: Vec<usize>,
        used: u64,
        seen: u32,
        best: Option<Vec<usize>>,
    }
    impl Search<'_> {
        fn go(&mut self) {
            if self.order.len() == self.facets.len() {
                if let Some(perm) = derive_labels(self.h, self.facets, &self.order) {
                    if self.best.as_ref().is_none_or(|b| perm < *b) {
                        self.best = Some(perm);
                    }
                }
                return;
            }
            let last = self.order.last().map(|&f| self.facets[f]).unwrap_or(0);
            for f in 0..self.facets.len() {
                if self.used >> f & 1 == 1 {
                    continue;
                }
                // broken run: facet reuses a vertex that has already retired
                if self.facets[f] & self.seen & !last != 0 {
                    continue;
                }
                self.order.push(f);
                self.used |= 1 << f;
                let old_seen = self.seen;
                self.seen |= self.facets[f];
                self.go();
                self.seen = old_seen;
                self.used &= !(1u64 << f);
                self.order.pop();
            }
        }
    }
    let mut s = Search {
        h,
        facets: &facets,
        order: Vec::with_capacity(r),
        used: 0,
        seen: 0,
        best: None,
    };
    s.go();
    s.best
}

/// Sort vertices by (first facet, last facet, index) along the arrangement and
/// validate the induced labeling.
fn derive_labels(h: &SimpleGraph, facets: &[u32], order: &[usize]) -> Option<Vec<usize>> {
    let n = h.n();
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0usize; n];
    for (pos, &f) in order.iter().enumerate() {
        for v in mask_vertices(facets[f]) {
            if first[v - 1] == usize::MAX {
                first[v - 1] = pos;
            }
            last[v - 1] = pos;
        }
    }
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| (first[v], last[v], v));
    let mut perm = vec![0usize; n];
    for (rank, &v) in verts.iter().enumerate() {
        perm[v] = rank + 1;
    }
    if is_closed_identity(&h.relabel(&perm).ok()?) {
        Some(perm)
    } else {
        None
    }
}

fn has_claw(g: &SimpleGraph) -> bool {
    let n = g.n();
    for c in 0..n {
        let nb = mask_vertices(g.adj_mask(c));
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    continue;
                }
                for k in j + 1..nb.len() {
                    if !g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Reference search: smallest valid permutation over all n!, intended for
/// certifying `find_closed_labeling` at small n.
pub fn find_closed_labeling_exhaustive(g: &SimpleGraph) -> Option<ClosedLabeling> {
    assert!(g.n() <= 8, "exhaustive labeling search is n! work");
    for perm in perms_of(g.n()) {
        if validate_closed_labeling(g, perm).unwrap() {
            return Some(ClosedLabeling { perm: perm.clone() });
        }
    }
    None
}

/// All permutations of 1..=n in lexicographic order, cached.
pub(crate) fn perms_of(n: usize) -> &'static [Vec<usize>] {
    static CACHE: OnceLock<Vec<Vec<Vec<usize>>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        (0..=8usize)
            .map(|k| {
                let mut out = Vec::new();
                let mut cur: Vec<usize> = Vec::with_capacity(k);
                let mut used = vec![false; k];
                gen_perms(k, &mut cur, &mut used, &mut out);
                out
            })
            .collect()
    });
    &all[n]
}

fn gen_perms(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for v in 1..=n {
        if !used[v - 1] {
            used[v - 1] = true;
            cur.push(v);
            gen_perms(n, cur, used, out);
            cur.pop();
            used[v - 1] = false;
        }
    }
}

/// Facets of the clique complex as label intervals under `labeling`.
pub fn facet_intervals(g: &SimpleGraph, labeling: &ClosedLabeling) -> Result<FacetIntervals> {
    if !validate_closed_labeling(g, labeling.perm())? {
        return Err(Error::NotClosed(
            "facet intervals require a closed labeling".into(),
        ));
    }
    let relabeled = labeling.apply(g);
    let mut intervals = Vec::new();
    for facet in relabeled.maximal_cliques().facets {
        let a = *facet.first().expect("nonempty facet");
        let b = *facet.last().expect("nonempty facet");
        // closedness makes every facet an interval of labels
        debug_assert_eq!(facet.len(), b - a + 1);
        intervals.push((a, b));
    }
    intervals.sort_unstable();
    Ok(FacetIntervals { intervals })
}

/// Classification of PI graphs with regularity exactly 2.
pub fn classify_reg2(g: &SimpleGraph) -> Result<Reg2Class> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let labeling = find_closed_labeling(g).ok_or(Error::NotProperInterval)?;
    let comps = g.connected_components();
    match comps.len() {
        1 => {
            let fi = facet_intervals(g, &labeling)?;
            if fi.intervals.len() == 2 {
                let (a1, b1) = fi.intervals[0];
                let (a2, b2) = fi.intervals[1];
                debug_assert!(a1 == 1 && b2 == g.n() && 1 < a2 && a2 <= b1 && b1 < g.n());
                let _ = (a1, b2);
                Ok(Reg2Class::TwoOverlappingIntervalCliques { a: a2, b: b1 })
            } else {
                Ok(Reg2Class::NotRegTwo)
            }
        }
        2 => {
            let complete = comps.iter().all(|c| {
                let (h, _) = g.induced_subgraph(c).expect("component subset");
                h.edge_count() == h.n() * (h.n() - 1) / 2
            });
            if complete {
                Ok(Reg2Class::DisjointTwoCliques {
                    m: comps[0].len(),
                    p: comps[1].len(),
                })
            } else {
                Ok(Reg2Class::NotRegTwo)
            }
        }
        _ => Ok(Reg2Class::NotRegTwo),
    }
}

/// One representative per isomorphism class of isolated-vertex-free PI graphs
/// on n vertices, each already carrying a closed identity labeling. Candidates
/// are generated through monotone reach sequences r_1 <= ... <= r_n (edges
/// {i,j} for i < j <= r_i), which are precisely the identity-closed graphs.
pub fn enumerate_pi_graphs(n: usize) -> Result<Vec<SimpleGraph>> {
    if !(1..=8).contains(&n) {
        return Err(Error::InvalidParams(format!(
            "enumeration supports 1 <= n <= 8, got {n}"
        )));
    }
    let mut reach = vec![0usize; n];
    let mut best: HashMap<u128, u128> = HashMap::new(); // canonical key -> min edge bitmask
    collect_reach(n, 0, 1, &mut reach, &mut best);
    let mut picks: Vec<u128> = best.into_values().collect();
    picks.sort_by_key(|&bits| (bits.count_ones(), bits));
    Ok(picks
        .into_iter()
        .map(|bits| graph_from_bitmask(n, bits))
        .collect())
}

fn collect_reach(
    n: usize,
    idx: usize,
    lo: usize,
    reach: &mut Vec<usize>,
    best: &mut HashMap<u128, u128>,
) {
    if idx == n {
        if reach[n - 1] != n {
            return;
        }
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=reach[i - 1] {
                edges.push((i, j));
            }
        }
        let g = SimpleGraph::new(n, &edges).expect("reach graph");
        if g.isolated_vertex().is_some() {
            return;
        }
        debug_assert!(is_closed_identity(&g));
        let key = canonical_key(&g);
        let bits = g.edge_bitmask();
        best.entry(key)
            .and_modify(|b| {
                if bits < *b {
                    *b = bits;
                }
            })
            .or_insert(bits);
        return;
    }
    for r in lo.max(idx + 1)..=n {
        reach[idx] = r;
        collect_reach(n, idx + 1, r, reach, best);
    }
}

/// Inverse of [`SimpleGraph::edge_bitmask`]: bit index runs over pairs
/// (1,2), (1,3), ..., (1,n), (2,3), ... in order.
pub fn graph_from_bitmask(n: usize, bits: u128) -> SimpleGraph {
    let mut edges = Vec::new();
    let mut idx = 0;
    for u in 1..=n {
        for v in u + 1..=n {
            if bits >> idx & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    SimpleGraph::new(n, &edges).expect("bitmask graph")
}

/// Isomorphism invariant: minimum edge bitmask over all relabelings. n <= 8.
pub fn canonical_key(g: &SimpleGraph) -> u128 {
    let n = g.n();
    assert!(n <= 8, "canonical key minimizes over n! relabelings");
    // pair -> bit index table
    let mut pair_idx = [[0usize; 9]; 9];
    let mut idx = 0;
    for u in 1..=n {
        for slot in &mut pair_idx[u][u + 1..=n] {
            *slot = idx;
            idx += 1;
        }
    }
    let edges = g.edges();
    let mut min_bits = u128::MAX;
    for perm in perms_of(n) {
        let mut bits = 0u128;
        for &(u, v) in &edges {
            let (a, b) = {
                let (x, y) = (perm[u - 1], perm[v - 1]);
                if x < y {
                    (x, y)
                } else {
                    (y, x)
                }
            };
            bits |= 1 << pair_idx[a][b];
        }
        if bits < min_bits {
            min_bits = bits;
        }
    }
    min_bits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closedness_of_small_labelings() {
        assert!(is_closed_identity(&SimpleGraph::path(3)));
        assert!(is_closed_identity(&SimpleGraph::complete(5)));
        let center3 = SimpleGraph::new(3, &[(1, 3), (2, 3)]).unwrap();
        assert!(!is_closed_identity(&center3));
        assert!(validate_closed_labeling(&center3, &[1, 3, 2]).unwrap());
        assert!(validate_closed_labeling(&center3, &[2, 3, 1]).is_ok());
        assert!(validate_closed_labeling(&center3, &[1, 1, 2]).is_err());
    }

    #[test]
    fn star_and_cycle_admit_no_closed_labeling() {
        let star = SimpleGraph::star(4);
        let c4 = SimpleGraph::cycle(4);
        for perm in perms_of(4) {
            assert!(!validate_closed_labeling(&star, perm).unwrap());
            assert!(!validate_closed_labeling(&c4, perm).unwrap());
        }
        assert!(find_closed_labeling(&star).is_none());
        assert!(find_closed_labeling(&c4).is_none());
        assert!(find_closed_labeling(&SimpleGraph::cycle(5)).is_none());
    }

    #[test]
    fn complete_graph_gets_identity() {
        for n in 1..=6 {
            let lab = find_closed_labeling(&SimpleGraph::complete(n)).unwrap();
            assert!(lab.is_identity(), "K_{n}");
        }
    }

    #[test]
    fn scrambled_path_is_recognized() {
        // path 1-3-2-4 presented out of order
        let g = SimpleGraph::new(4, &[(1, 3), (3, 2), (2, 4)]).unwrap();
        let lab = find_closed_labeling(&g).expect("path is PI");
        assert!(validate_closed_labeling(&g, lab.perm()).unwrap());
        assert_eq!(lab.apply(&g), SimpleGraph::path(4));
    }

    #[test]
    fn fast_search_matches_exhaustive_reference() {
        // all labeled graphs on up to 5 vertices
        for n in 1..=5usize {
            let m = n * (n - 1) / 2;
            for bits in 0u128..(1 << m) {
                let g = graph_from_bitmask(n, bits);
                let fast = find_closed_labeling(&g);
                let slow = find_closed_labeling_exhaustive(&g);
                assert_eq!(fast.is_some(), slow.is_some(), "{g:?}");
                if g.is_connected() {
                    // on connected graphs both normalize to the lex-least perm
                    assert_eq!(
                        fast.map(|l| l.perm().to_vec()),
                        slow.map(|l| l.perm().to_vec()),
                        "{g:?}"
                    );
                }
            }
        }
        // deterministic sample at n = 6
        let mut s: u64 = 0xDEADBEEFCAFE;
        for _ in 0..400 {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            let g = graph_from_bitmask(6, (s % (1 << 15)) as u128);
            let fast = find_closed_labeling(&g);
            let slow = find_closed_labeling_exhaustive(&g);
            assert_eq!(fast.is_some(), slow.is_some(), "{g:?}");
            if let Some(l) = fast {
                assert!(validate_closed_labeling(&g, l.perm()).unwrap());
            }
        }
    }

    #[test]
    fn pi_recognition_is_isomorphism_invariant() {
        let mut s: u64 = 0x1234567;
        for g in enumerate_pi_graphs(6).unwrap() {
            for _ in 0..5 {
                s ^= s << 13;
                s ^= s >> 7;
                s ^= s << 17;
                let perm = &perms_of(6)[(s % 720) as usize];
                let h = g.relabel(perm).unwrap();
                assert!(find_closed_labeling(&h).is_some(), "{h:?}");
            }
        }
        assert!(find_closed_labeling(&SimpleGraph::star(4).relabel(&[2, 1, 3, 4]).unwrap()).is_none());
    }

    #[test]
    fn facet_intervals_of_paths_and_overlaps() {
        let p3 = SimpleGraph::path(3);
        let fi = facet_intervals(&p3, &ClosedLabeling::identity(3)).unwrap();
        assert_eq!(fi.intervals, vec![(1, 2), (2, 3)]);

        let bad = SimpleGraph::new(3, &[(1, 3), (2, 3)]).unwrap();
        assert!(facet_intervals(&bad, &ClosedLabeling::identity(3)).is_err());

        // two overlapping cliques [1,4], [3,6]
        let mut edges = Vec::new();
        for u in 1..=4usize {
            for v in u + 1..=4 {
                edges.push((u, v));
            }
        }
        for u in 3..=6usize {
            for v in u + 1..=6 {
                if !edges.contains(&(u, v)) {
                    edges.push((u, v));
                }
            }
        }
        let g = SimpleGraph::new(6, &edges).unwrap();
        let fi = facet_intervals(&g, &ClosedLabeling::identity(6)).unwrap();
        assert_eq!(fi.intervals, vec![(1, 4), (3, 6)]);
    }

    #[test]
    fn reg2_classification_examples() {
        assert_eq!(
            classify_reg2(&SimpleGraph::path(3)).unwrap(),
            Reg2Class::TwoOverlappingIntervalCliques { a: 2, b: 2 }
        );
        let k2k3 = SimpleGraph::complete(2)
            .disjoint_union(&SimpleGraph::complete(3))
            .unwrap();
        assert_eq!(
            classify_reg2(&k2k3).unwrap(),
            Reg2Class::DisjointTwoCliques { m: 2, p: 3 }
        );
        assert_eq!(classify_reg2(&SimpleGraph::path(4)).unwrap(), Reg2Class::NotRegTwo);
        assert_eq!(classify_reg2(&SimpleGraph::complete(4)).unwrap(), Reg2Class::NotRegTwo);
        // diamond = K_4 minus one edge: facets [1,3], [2,4]
        let diamond = SimpleGraph::new(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(
            classify_reg2(&diamond).unwrap(),
            Reg2Class::TwoOverlappingIntervalCliques { a: 2, b: 3 }
        );
        let k2p3 = SimpleGraph::complete(2).disjoint_union(&SimpleGraph::path(3)).unwrap();
        assert_eq!(classify_reg2(&k2p3).unwrap(), Reg2Class::NotRegTwo);
        let three = SimpleGraph::complete(2)
            .disjoint_union(&SimpleGraph::complete(2))
            .unwrap()
            .disjoint_union(&SimpleGraph::complete(2))
            .unwrap();
        assert_eq!(classify_reg2(&three).unwrap(), Reg2Class::NotRegTwo);
        assert!(matches!(
            classify_reg2(&SimpleGraph::cycle(4)),
            Err(Error::NotProperInterval)
        ));
        assert!(matches!(
            classify_reg2(&SimpleGraph::new(3, &[(1, 2)]).unwrap()),
            Err(Error::IsolatedVertex(3))
        ));
    }

    #[test]
    fn enumeration_small_counts() {
        let n2 = enumerate_pi_graphs(2).unwrap();
        assert_eq!(n2.len(), 1);
        assert_eq!(n2[0], SimpleGraph::complete(2));

        let n3 = enumerate_pi_graphs(3).unwrap();
        let keys: Vec<u128> = n3.iter().map(canonical_key).collect();
        assert_eq!(n3.len(), 2);
        assert!(keys.contains(&canonical_key(&SimpleGraph::path(3))));
        assert!(keys.contains(&canonical_key(&SimpleGraph::complete(3))));

        let n4 = enumerate_pi_graphs(4).unwrap();
        let keys: Vec<u128> = n4.iter().map(canonical_key).collect();
        let two_k2 = SimpleGraph::complete(2)
            .disjoint_union(&SimpleGraph::complete(2))
            .unwrap();
        assert!(keys.contains(&canonical_key(&two_k2)));
        assert!(!keys.contains(&canonical_key(&SimpleGraph::cycle(4))));
        assert!(!keys.contains(&canonical_key(&SimpleGraph::star(4))));
        assert_eq!(n4.len(), 5); // 2K_2, P_4, paw, diamond, K_4

        assert!(enumerate_pi_graphs(0).is_err());
        assert!(enumerate_pi_graphs(9).is_err());
    }

    #[test]
    fn enumeration_matches_naive_filter_up_to_5() {
        use std::collections::BTreeSet;
        for n in 1..=5usize {
            let fast: BTreeSet<u128> = enumerate_pi_graphs(n)
                .unwrap()
                .iter()
                .map(canonical_key)
                .collect();
            let mut slow = BTreeSet::new();
            let m = n * (n - 1) / 2;
            for bits in 0u128..(1 << m) {
                let g = graph_from_bitmask(n, bits);
                if g.isolated_vertex().is_none() && find_closed_labeling(&g).is_some() {
                    slow.insert(canonical_key(&g));
                }
            }
            assert_eq!(fast, slow, "n = {n}");
        }
    }

    #[test]
    fn enumerated_graphs_are_identity_closed_and_distinct() {
        for n in 1..=7usize {
            let gs = enumerate_pi_graphs(n).unwrap();
            let mut keys = std::collections::HashSet::new();
            for g in &gs {
                assert!(is_closed_identity(g), "{g:?}");
                assert!(g.isolated_vertex().is_none());
                assert!(keys.insert(canonical_key(g)), "duplicate class {g:?}");
            }
        }
    }
}
