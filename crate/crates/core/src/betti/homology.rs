//! Reduced simplicial homology over F_p via boundary-matrix ranks.
//!
//! Conventions: the complex {∅} (the empty face and nothing else) has
//! H̃_{-1} of rank 1; the void complex (no faces at all) has every reduced
//! homology group zero. Both fall out of including the empty face as the
//! single cell in cardinality 0.

use crate::field::PrimeField;
use crate::linalg::{sparse_rank, SparseCol};

/// A simplicial complex on ground set {0, .., n_vertices-1}, given by facet
/// bitmasks. No facets at all means the void complex; a single facet 0 means
/// the complex {∅}.
#[derive(Debug, Clone)]
pub struct SimplicialComplexRepr {
    pub n_vertices: usize,
    pub facets: Vec<u64>,
}

impl SimplicialComplexRepr {
    pub fn void(n_vertices: usize) -> Self {
        SimplicialComplexRepr {
            n_vertices,
            facets: Vec::new(),
        }
    }

    pub fn from_facets(n_vertices: usize, facets: Vec<u64>) -> Self {
        assert!(n_vertices <= 64);
        let mut facets: Vec<u64> = facets
            .into_iter()
            .inspect(|&f| assert!(n_vertices == 64 || f < (1u64 << n_vertices)))
            .collect();
        // drop facets contained in others, and duplicates
        facets.sort_by_key(|f| std::cmp::Reverse(f.count_ones()));
        let mut kept: Vec<u64> = Vec::new();
        for f in facets {
            if !kept.iter().any(|&k| k & f == f) {
                kept.push(f);
            }
        }
        kept.sort_unstable();
        SimplicialComplexRepr {
            n_vertices,
            facets: kept,
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// All faces grouped by cardinality: result[c] lists the masks with c
    /// bits, each sorted. Void complex gives an empty vector.
    pub fn faces_by_card(&self) -> Vec<Vec<u64>> {
        if self.is_void() {
            return Vec::new();
        }
        let mut seen = std::collections::HashSet::new();
        for &f in &self.facets {
            // enumerate submasks of f
            let mut sub = f;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let maxc = seen.iter().map(|m| m.count_ones() as usize).max().unwrap();
        let mut out = vec![Vec::new(); maxc + 1];
        for m in seen {
            out[m.count_ones() as usize].push(m);
        }
        for level in &mut out {
            level.sort_unstable();
        }
        out
    }
}

/// Rank of the boundary map from cardinality-c faces to cardinality-(c-1)
/// faces; `sources` are the c-faces. Row keys are the target masks.
fn boundary_rank(field: &PrimeField, sources: &[u64]) -> usize {
    let mut cols: Vec<SparseCol> = Vec::with_capacity(sources.len());
    for &face in sources {
        let mut col: SparseCol = Vec::with_capacity(face.count_ones() as usize);
        let mut rest = face;
        let mut pos = 0u32;
        while rest != 0 {
            let v = rest.trailing_zeros();
            let target = face & !(1u64 << v);
            let coeff = if pos.is_multiple_of(2) { 1 } else { field.p() - 1 };
            col.push((target, coeff));
            rest &= rest - 1;
            pos += 1;
        }
        cols.push(col);
    }
    sparse_rank(field, cols)
}

/// Reduced homology ranks from faces grouped by cardinality (as produced by
/// `faces_by_card`): result[k] = rank of H̃_{k-1}, so index 0 is H̃_{-1}.
/// An empty input (void complex) yields an empty vector.
pub fn homology_ranks_from_faces(field: &PrimeField, faces: &[Vec<u64>]) -> Vec<u64> {
    if faces.is_empty() {
        return Vec::new();
    }
    debug_assert_eq!(faces[0], vec![0], "nonvoid complex must contain the empty face");
    let top = faces.len() - 1;
    // ranks[c] = rank of the boundary map out of cardinality c
    let mut ranks = vec![0usize; top + 2];
    for c in 1..=top {
        ranks[c] = boundary_rank(field, &faces[c]);
    }
    let out: Vec<u64> = (0..=top)
        .map(|c| (faces[c].len() - ranks[c] - ranks[c + 1]) as u64)
        .collect();

    // Euler characteristic consistency: the alternating sums of homology
    // ranks and face counts agree (both equal the reduced Euler
    // characteristic); catches any miscounted boundary rank.
    debug_assert_eq!(
        out.iter()
            .enumerate()
            .map(|(c, &h)| if c % 2 == 0 { h as i64 } else { -(h as i64) })
            .sum::<i64>(),
        faces
            .iter()
            .enumerate()
            .map(|(c, fs)| if c % 2 == 0 { fs.len() as i64 } else { -(fs.len() as i64) })
            .sum::<i64>()
    );
    out
}

/// Reduced homology of a facet-presented complex; result[k] = rank H̃_{k-1}.
pub fn simplicial_reduced_homology(field: &PrimeField, c: &SimplicialComplexRepr) -> Vec<u64> {
    homology_ranks_from_faces(field, &c.faces_by_card())
}
