//! Finite simple graphs on vertex set {1, ..., n}, n <= 32, stored as
//! adjacency bitmasks. All public APIs speak 1-based vertex labels; bit
//! positions are 0-based internally.
//!
//! Edge-list text format, used by the CLI and the test corpus:
//!
//! ```text
//! n 4        first line: vertex count
//! 1 2        one edge per line, 1-based endpoints
//! 2 3        '#' starts a comment, blank lines are skipped
//! ```

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u32>,
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// f_i = number of i-dimensional faces of the clique complex, i.e. cliques on
/// i+1 vertices. Index 0 is the vertex count; the empty face is not recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// f_i, with f_{-1} = 1 and 0 beyond the dimension.
    pub fn get(&self, i: isize) -> u64 {
        if i < 0 {
            1
        } else {
            self.0.get(i as usize).copied().unwrap_or(0)
        }
    }
}

/// Facets (maximal cliques) of the clique complex, each sorted ascending,
/// listed in (size, lexicographic) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueComplex {
    pub facets: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "vertex count {n} exceeds supported maximum {MAX_VERTICES}"
            )));
        }
        let mut g = SimpleGraph { n, adj: vec![0; n] };
        for &(u, v) in edges {
            if u < 1 || u > n || v < 1 || v > n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u},{v})")));
            }
            g.adj[u - 1] |= 1 << (v - 1);
            g.adj[v - 1] |= 1 << (u - 1);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edges.push((u, v));
            }
        }
        SimpleGraph::new(n, &edges).expect("complete graph")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        SimpleGraph::new(n, &edges).expect("path graph")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        edges.push((1, n));
        SimpleGraph::new(n, &edges).expect("cycle graph")
    }

    /// Star with center 1 and leaves 2..=n.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (2..=n).map(|v| (1, v)).collect();
        SimpleGraph::new(n, &edges).expect("star graph")
    }

    /// Union of cliques on closed label intervals: each (a, b) with
    /// 1 <= a <= b <= n contributes all edges inside {a, ..., b}.
    pub fn interval_cliques(n: usize, intervals: &[(usize, usize)]) -> Result<SimpleGraph> {
        let mut edges = Vec::new();
        for &(a, b) in intervals {
            if a < 1 || b > n || a > b {
                return Err(Error::InvalidParams(format!(
                    "interval [{a},{b}] does not fit inside [1,{n}]"
                )));
            }
            for u in a..b {
                for v in (u + 1)..=b {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        SimpleGraph::new(n, &edges)
    }

    /// Disjoint union; vertices of `other` are shifted by self.n.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let mut edges = self.edges();
        for (u, v) in other.edges() {
            edges.push((u + self.n, v + self.n));
        }
        SimpleGraph::new(self.n + other.n, &edges)
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut declared: usize = 0;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let toks: Vec<&str> = content.split_whitespace().collect();
            match n {
                None => {
                    if toks.len() != 2 || toks[0] != "n" {
                        return Err(Error::Parse {
                            line,
                            msg: format!("expected header `n <count>`, got `{content}`"),
                        });
                    }
                    declared = toks[1].parse().map_err(|_| Error::Parse {
                        line,
                        msg: format!("bad vertex count `{}`", toks[1]),
                    })?;
                    n = Some(declared);
                }
                Some(_) => {
                    if toks.len() != 2 {
                        return Err(Error::Parse {
                            line,
                            msg: format!("expected `u v`, got `{content}`"),
                        });
                    }
                    let u: usize = toks[0].parse().map_err(|_| Error::Parse {
                        line,
                        msg: format!("bad vertex `{}`", toks[0]),
                    })?;
                    let v: usize = toks[1].parse().map_err(|_| Error::Parse {
                        line,
                        msg: format!("bad vertex `{}`", toks[1]),
                    })?;
                    edges.push(((u, v), line));
                }
            }
        }
        let Some(n) = n else {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                msg: "missing `n <count>` header".into(),
            });
        };
        let _ = declared;
        let mut g = SimpleGraph { n: 0, adj: vec![] };
        // rebuild through `new` one edge at a time so errors carry line numbers
        let mut acc: Vec<(usize, usize)> = Vec::new();
        for ((u, v), line) in edges {
            acc.push((u, v));
            match SimpleGraph::new(n, &acc) {
                Ok(built) => g = built,
                Err(Error::InvalidGraph(msg)) => return Err(Error::Parse { line, msg }),
                Err(e) => return Err(e),
            }
        }
        if acc.is_empty() {
            g = SimpleGraph::new(n, &[])?;
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.adj[u - 1] >> (v - 1)) & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u - 1].count_ones() as usize
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        mask_vertices(self.adj[u - 1])
    }

    #[inline]
    pub(crate) fn adj_mask(&self, u0: usize) -> u32 {
        self.adj[u0]
    }

    /// First isolated vertex, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        (1..=self.n).find(|&u| self.adj[u - 1] == 0)
    }

    pub fn complement(&self) -> SimpleGraph {
        let full = full_mask(self.n);
        let adj = (0..self.n)
            .map(|u| (!self.adj[u] & full) & !(1u32 << u))
            .collect();
        SimpleGraph { n: self.n, adj }
    }

    /// Subgraph induced on `verts` (1-based, need not be sorted). Returns the
    /// graph on {1..k} plus the map new -> old as a vector: map[i-1] is the
    /// original label of new vertex i. Vertices are taken in ascending order.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<(SimpleGraph, Vec<usize>)> {
        let mut vs: Vec<usize> = verts.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != verts.len() {
            return Err(Error::InvalidGraph("duplicate vertex in subset".into()));
        }
        if vs.iter().any(|&v| v < 1 || v > self.n) {
            return Err(Error::InvalidGraph("subset vertex out of range".into()));
        }
        let mut edges = Vec::new();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if self.has_edge(vs[i], vs[j]) {
                    edges.push((i + 1, j + 1));
                }
            }
        }
        Ok((SimpleGraph::new(vs.len(), &edges)?, vs))
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u32;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u32 << s;
            loop {
                let mut next = comp;
                let mut m = comp;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    next |= self.adj[v];
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen |= comp;
            comps.push(mask_vertices(comp));
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Maximal cliques via Bron-Kerbosch with pivoting.
    pub fn maximal_cliques(&self) -> CliqueComplex {
        let mut found: Vec<u32> = Vec::new();
        if self.n > 0 {
            self.bron_kerbosch(0, full_mask(self.n), 0, &mut found);
        }
        let mut facets: Vec<Vec<usize>> = found.into_iter().map(mask_vertices).collect();
        facets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        CliqueComplex { facets }
    }

    fn bron_kerbosch(&self, r: u32, p: u32, x: u32, out: &mut Vec<u32>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        // pivot: vertex of p|x with most neighbors inside p
        let mut pivot = 0usize;
        let mut best = -1i32;
        let mut m = p | x;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            let c = (p & self.adj[u]).count_ones() as i32;
            if c > best {
                best = c;
                pivot = u;
            }
        }
        let mut cand = p & !self.adj[pivot];
        let mut p = p;
        let mut x = x;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let bit = 1u32 << v;
            self.bron_kerbosch(r | bit, p & self.adj[v], x & self.adj[v], out);
            p &= !bit;
            x |= bit;
        }
    }

    /// Face counts of the clique complex by dimension.
    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; self.n];
        // extend cliques by vertices above the current maximum
        fn extend(g: &SimpleGraph, size: usize, cand: u32, counts: &mut [u64]) {
            let mut m = cand;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                counts[size] += 1;
                let higher = !0u32 << (v + 1);
                extend(g, size + 1, cand & g.adj[v] & higher, counts);
            }
        }
        if self.n > 0 {
            extend(self, 0, full_mask(self.n), &mut counts);
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        FVector(counts)
    }

    /// All cliques with exactly `size` vertices, as ascending label lists in
    /// lexicographic order.
    pub fn cliques(&self, size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if size == 0 {
            out.push(Vec::new());
            return out;
        }
        fn extend(
            g: &SimpleGraph,
            cur: &mut Vec<usize>,
            cand: u32,
            want: usize,
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == want {
                out.push(cur.clone());
                return;
            }
            let mut m = cand;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                cur.push(v + 1);
                let higher = !0u32 << (v + 1);
                extend(g, cur, cand & g.adj[v] & higher, want, out);
                cur.pop();
            }
        }
        if self.n > 0 {
            extend(self, &mut Vec::new(), full_mask(self.n), size, &mut out);
        }
        out
    }

    /// Length (edge count) of a longest induced path. Exhaustive over vertex
    /// subsets: a subset carries an induced path visiting all of it exactly
    /// when the induced subgraph is a path graph.
    pub fn longest_induced_path_length(&self) -> usize {
        assert!(self.n <= 20, "induced path search is exhaustive, n <= 20");
        if self.n == 0 {
            return 0;
        }
        let mut best = 0usize;
        for s in 1u32..(1 << self.n) {
            let k = s.count_ones() as usize;
            if k < 2 || k - 1 <= best {
                continue;
            }
            if self.is_induced_path_set(s) {
                best = k - 1;
            }
        }
        best
    }

    /// True iff the subgraph induced on mask `s` is a path graph: connected,
    /// |E| = |S| - 1, max degree 2.
    fn is_induced_path_set(&self, s: u32) -> bool {
        let k = s.count_ones() as usize;
        let mut edge2 = 0usize; // twice the edge count
        let mut m = s;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let d = (self.adj[v] & s).count_ones() as usize;
            if d > 2 {
                return false;
            }
            edge2 += d;
        }
        if edge2 != 2 * (k - 1) {
            return false;
        }
        // connectivity on the mask
        let start = s.trailing_zeros() as usize;
        let mut comp = 1u32 << start;
        loop {
            let mut next = comp;
            let mut mm = comp;
            while mm != 0 {
                let v = mm.trailing_zeros() as usize;
                mm &= mm - 1;
                next |= self.adj[v] & s;
            }
            if next == comp {
                break;
            }
            comp = next;
        }
        comp == s
    }

    /// Sum over connected components of the longest induced path length.
    pub fn induced_path_length_sum(&self) -> usize {
        self.connected_components()
            .iter()
            .map(|c| {
                let (h, _) = self.induced_subgraph(c).expect("component subset");
                h.longest_induced_path_length()
            })
            .sum()
    }

    /// Relabel by `perm`, where perm[u-1] is the new label of vertex u.
    pub fn relabel(&self, perm: &[usize]) -> Result<SimpleGraph> {
        check_bijection(self.n, perm)?;
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u - 1], perm[v - 1]))
            .collect();
        SimpleGraph::new(self.n, &edges)
    }

    /// Edge indicator packed into a u128 in (1,2),(1,3),...,(2,3),... order.
    pub fn edge_bitmask(&self) -> u128 {
        assert!(self.n <= 16, "edge bitmask packing supports n <= 16");
        let mut bits = 0u128;
        let mut idx = 0;
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if self.has_edge(u, v) {
                    bits |= 1u128 << idx;
                }
                idx += 1;
            }
        }
        bits
    }
}

pub(crate) fn check_bijection(n: usize, perm: &[usize]) -> Result<()> {
    if perm.len() != n {
        return Err(Error::NotBijection);
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p < 1 || p > n || seen[p - 1] {
            return Err(Error::NotBijection);
        }
        seen[p - 1] = true;
    }
    Ok(())
}

/// Next bitmask with the same popcount (Gosper's hack); input must be
/// nonzero. Stepping past the top of the range overflows above it, so loops
/// bound the result against a limit.
#[inline]
pub(crate) fn next_same_popcount(v: u64) -> u64 {
    let c = v & v.wrapping_neg();
    let r = v + c;
    (((r ^ v) >> 2) / c) | r
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) fn mask_vertices(mut m: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}
