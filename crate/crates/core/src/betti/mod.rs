//! Graded Betti numbers β_{i,j}(S/I) by two independent engines — Koszul
//! homology and Stanley-Reisner simplicial homology — plus closed-form
//! linear-strand counts and the table arithmetic connecting them.

pub mod hochster;
pub mod homology;
pub mod koszul;
pub mod strand;

pub use hochster::hochster_betti;
pub use homology::{simplicial_reduced_homology, SimplicialComplexRepr};
pub use koszul::koszul_betti;
pub use strand::{
    linear_strand_bipartite, linear_strand_clique, linear_strand_rvt, strand_bijection_witness,
    LinearStrand, StrandBijection,
};

use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Caps for a Betti computation. `None` means the engine's own default:
/// homological degree up to the number of variables, rows grown until a zero
/// row certifies the regularity.
#[derive(Debug, Clone, Copy, Default)]
pub struct BettiBounds {
    pub max_i: Option<usize>,
    pub max_row: Option<usize>,
    /// The caller guarantees every row beyond `max_row` vanishes (e.g. from a
    /// regularity bound obtained elsewhere); the result is then complete.
    pub row_bound_certified: bool,
}

/// Graded Betti numbers of a quotient S/I over F_p. Only nonzero entries are
/// stored; `max_i` and `max_row` describe the window that was actually
/// computed, and `truncated` records whether nonzero entries could exist
/// outside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub characteristic: u32,
    pub entries: BTreeMap<(usize, usize), u64>,
    pub truncated: bool,
    pub max_i: usize,
    pub max_row: usize,
}

impl BettiTable {
    pub fn new(characteristic: u32) -> Self {
        BettiTable {
            characteristic,
            entries: BTreeMap::new(),
            truncated: false,
            max_i: 0,
            max_row: 0,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, beta: u64) {
        if beta != 0 {
            self.entries.insert((i, j), beta);
        } else {
            self.entries.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological degree with a nonzero entry.
    pub fn nonzero_max_i(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Largest j - i with a nonzero entry.
    pub fn nonzero_max_row(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// The Castelnuovo-Mumford regularity, max{j - i : β_{i,j} ≠ 0}. A
    /// truncated table still answers when its top computed row is zero;
    /// otherwise the answer could lie beyond the window.
    pub fn regularity(&self) -> Result<usize> {
        let top_nonzero = self
            .entries
            .keys()
            .any(|&(i, j)| j - i == self.max_row);
        if self.truncated && top_nonzero {
            return Err(Error::Inconclusive(format!(
                "table truncated at row {} and that row is nonzero; regularity may be larger",
                self.max_row
            )));
        }
        Ok(self.nonzero_max_row())
    }

    /// Entrywise comparison: a_{i,j} <= b_{i,j} everywhere.
    pub fn dominated_by(&self, other: &BettiTable) -> bool {
        self.entries
            .iter()
            .all(|(&(i, j), &b)| b <= other.get(i, j))
    }

    /// The strand of entries β_{i,i+1}, reported for i = 1..=nonzero_max_i.
    pub fn linear_strand(&self) -> strand::LinearStrand {
        let hi = self.nonzero_max_i();
        strand::LinearStrand::new((1..=hi).map(|i| self.get(i, i + 1)).collect())
    }

    /// Tables of a tensor product: the 2D convolution of the entries.
    pub fn tensor(&self, other: &BettiTable) -> Result<BettiTable> {
        if self.characteristic != other.characteristic {
            return Err(Error::CharMismatch(self.characteristic, other.characteristic));
        }
        let mut out = BettiTable::new(self.characteristic);
        out.truncated = self.truncated || other.truncated;
        out.max_i = self.max_i + other.max_i;
        out.max_row = self.max_row + other.max_row;
        for (&(i1, j1), &b1) in &self.entries {
            for (&(i2, j2), &b2) in &other.entries {
                let key = (i1 + i2, j1 + j2);
                *out.entries.entry(key).or_insert(0) += b1 * b2;
            }
        }
        Ok(out)
    }

    /// Text diagram with rows j - i and columns i; zero rows above the last
    /// nonzero one are suppressed.
    pub fn diagram(&self) -> String {
        if self.entries.is_empty() {
            return if self.truncated {
                format!(
                    "(no nonzero entries in the computed window i <= {}, j-i <= {}; truncated)\n",
                    self.max_i, self.max_row
                )
            } else {
                "(zero table)\n".into()
            };
        }
        let imax = self.nonzero_max_i();
        let rmax = self.nonzero_max_row();
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=imax).map(|i| i.to_string()));
        cells.push(header);
        let mut totals = vec!["total:".to_string()];
        for i in 0..=imax {
            let t: u64 = (0..=rmax).map(|r| self.get(i, i + r)).sum();
            totals.push(t.to_string());
        }
        cells.push(totals);
        for r in 0..=rmax {
            let mut row = vec![format!("{r}:")];
            for i in 0..=imax {
                let b = self.get(i, i + r);
                row.push(if b == 0 { ".".into() } else { b.to_string() });
            }
            cells.push(row);
        }
        let ncols = imax + 2;
        let widths: Vec<usize> = (0..ncols)
            .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &cells {
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    out.push_str("  ");
                }
                out.push_str(&" ".repeat(widths[c] - cell.len()));
                out.push_str(cell);
            }
            out.push('\n');
        }
        if self.truncated {
            out.push_str(&format!(
                "(truncated: window i <= {}, j-i <= {})\n",
                self.max_i, self.max_row
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(&(i, j), &beta)| {
                serde_json::json!({ "i": i, "j": j, "beta": beta })
            })
            .collect();
        serde_json::json!({
            "char": self.characteristic,
            "truncated": self.truncated,
            "entries": entries,
        })
    }
}
