//! Rank computation over F_p for the sparse matrices produced by the Koszul
//! and simplicial boundary constructions.
//!
//! Matrices arrive column by column; a column is a list of (row key, value)
//! pairs with arbitrary u64 row keys, so callers never materialize a row
//! index space. Elimination keeps one pivot column per row key. Columns whose
//! supports never meet (e.g. distinct multidegree blocks) cannot interact,
//! so block structure in the input is exploited automatically.

use crate::field::PrimeField;
use std::collections::HashMap;

/// Sparse column: (row key, nonzero value), unordered on input.
pub type SparseCol = Vec<(u64, u32)>;

pub struct SparseRank<'a> {
    field: &'a PrimeField,
    /// pivot row key -> column normalized to value 1 at that key, stored
    /// sorted descending by row key with the pivot key first.
    pivots: HashMap<u64, Vec<(u64, u32)>>,
    rank: usize,
}

impl<'a> SparseRank<'a> {
    pub fn new(field: &'a PrimeField) -> Self {
        SparseRank {
            field,
            pivots: HashMap::new(),
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduce a column against the current pivots and, if a nonzero remainder
    /// survives, keep it as a new pivot. Pivot row choice: largest row key,
    /// which is deterministic and cheap (columns are kept sorted descending).
    pub fn add_col(&mut self, mut col: SparseCol) {
        let f = self.field;
        col.retain(|&(_, v)| v != 0);
        col.sort_unstable_by_key(|&(r, _)| std::cmp::Reverse(r));
        debug_assert!(col.windows(2).all(|w| w[0].0 != w[1].0), "duplicate row key");
        loop {
            let Some(&(top, c)) = col.first() else {
                return; // reduced to zero
            };
            match self.pivots.get(&top) {
                None => {
                    // normalize so the pivot entry is 1
                    let inv = f.inv(c);
                    for e in col.iter_mut() {
                        e.1 = f.mul(e.1, inv);
                    }
                    self.pivots.insert(top, col);
                    self.rank += 1;
                    return;
                }
                Some(piv) => {
                    col = sub_scaled(f, &col, piv, c);
                }
            }
        }
    }
}

/// a - c * b for sorted-descending sparse columns.
fn sub_scaled(f: &PrimeField, a: &[(u64, u32)], b: &[(u64, u32)], c: u32) -> Vec<(u64, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 > b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 > a[i].0 {
            let v = f.neg(f.mul(c, b[j].1));
            if v != 0 {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = f.sub_mul(a[i].1, c, b[j].1);
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a matrix given as sparse columns.
pub fn sparse_rank(field: &PrimeField, cols: impl IntoIterator<Item = SparseCol>) -> usize {
    let mut acc = SparseRank::new(field);
    // Short columns first keeps early pivots sparse (Markowitz-flavored).
    let mut cols: Vec<SparseCol> = cols.into_iter().collect();
    cols.sort_by_key(|c| c.len());
    for col in cols {
        acc.add_col(col);
    }
    acc.rank()
}

/// Dense row-reduction rank, used as an oracle in tests.
pub fn dense_rank(field: &PrimeField, mut rows: Vec<Vec<u32>>) -> usize {
    let ncols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    for r in rows.iter_mut() {
        r.resize(ncols, 0);
    }
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = field.inv(rows[rank][col]);
        for v in &mut rows[rank][col..ncols] {
            *v = field.mul(*v, inv);
        }
        let pivot = std::mem::take(&mut rows[rank]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let c = row[col];
                for (v, &pv) in row[col..ncols].iter_mut().zip(&pivot[col..ncols]) {
                    *v = field.sub_mul(*v, c, pv);
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn sparse_matches_dense_on_small_matrices() {
        let field = f();
        // 4x4 with rank 3: row3 = row0 + row1
        let rows = vec![
            vec![1, 2, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 5, 7],
            vec![1, 3, 1, 0],
        ];
        let mut cols: Vec<SparseCol> = vec![Vec::new(); 4];
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    cols[j].push((i as u64, v));
                }
            }
        }
        assert_eq!(dense_rank(&field, rows), 3);
        assert_eq!(sparse_rank(&field, cols), 3);
    }

    #[test]
    fn disjoint_blocks_accumulate_ranks() {
        let field = f();
        // two 1x1 blocks under distant row keys
        let cols = vec![vec![(5u64, 3u32)], vec![(1u64 << 40, 9u32)], vec![(5u64, 6u32)]];
        assert_eq!(sparse_rank(&field, cols), 2);
    }

    #[test]
    fn zero_and_cancelling_columns() {
        let field = f();
        let cols = vec![
            vec![(0u64, 1u32), (1, 1)],
            vec![(0u64, 2u32), (1, 2)], // multiple of the first
            vec![],
        ];
        assert_eq!(sparse_rank(&field, cols), 1);
    }

    #[test]
    fn randomized_sparse_vs_dense() {
        let field = PrimeField::new(101).unwrap();
        // deterministic xorshift, no external RNG dependency needed here
        let mut s: u64 = 0x9E3779B97F4A7C15;
        let mut next = move || {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            s
        };
        for _ in 0..50 {
            let nr = 1 + (next() % 8) as usize;
            let nc = 1 + (next() % 8) as usize;
            let mut rows = vec![vec![0u32; nc]; nr];
            for r in rows.iter_mut() {
                for v in r.iter_mut() {
                    if next() % 3 == 0 {
                        *v = (next() % 101) as u32;
                    }
                }
            }
            let mut cols: Vec<SparseCol> = vec![Vec::new(); nc];
            for (i, row) in rows.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if v != 0 {
                        cols[j].push((i as u64, v));
                    }
                }
            }
            assert_eq!(sparse_rank(&field, cols), dense_rank(&field, rows));
        }
    }
}
