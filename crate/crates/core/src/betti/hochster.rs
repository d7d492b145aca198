//! Betti numbers of squarefree monomial quotients by summing reduced
//! homology ranks of vertex-restricted Stanley-Reisner complexes:
//!
//!   β_{i,j}(S/I) = Σ over W with |W| = j of rank H̃_{j-i-1}(Δ restricted to W)
//!
//! Restrictions that are cones contribute nothing and are skipped; everything
//! else goes through the generic homology routine, fully independent of the
//! Koszul engine.

use super::homology::homology_ranks_from_faces;
use super::{BettiBounds, BettiTable};
use crate::algebra::ideals::{monomial_min_gens, IdealBasis};
use crate::algebra::poly::Monomial;
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Largest variable count for the 2^nvars subset loop.
pub const MAX_HOCHSTER_VARS: usize = 22;

fn support_mask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (v, &e) in m.exps().iter().enumerate() {
        if e > 0 {
            mask |= 1u64 << v;
        }
    }
    mask
}

/// Faces of the restriction to `w`: subsets of `w` containing no generator
/// support, grouped by cardinality.
fn restricted_faces(w: u64, supports: &[u64]) -> Vec<Vec<u64>> {
    let mut levels: Vec<Vec<u64>> = vec![vec![0]];
    let verts: Vec<u64> = (0..64)
        .filter(|&v| w >> v & 1 == 1)
        .map(|v| 1u64 << v)
        .collect();
    let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
    while let Some((face, next)) = stack.pop() {
        for (k, &vbit) in verts.iter().enumerate().skip(next) {
            let cand = face | vbit;
            if supports.iter().any(|&s| s & !cand == 0) {
                continue;
            }
            let card = cand.count_ones() as usize;
            if levels.len() <= card {
                levels.resize(card + 1, Vec::new());
            }
            levels[card].push(cand);
            stack.push((cand, k + 1));
        }
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    levels
}

/// β_{i,j}(S/I) for a squarefree monomial ideal, as a complete table; bounds
/// only narrow the reported window.
pub fn hochster_betti(
    field: &PrimeField,
    basis: &IdealBasis,
    bounds: &BettiBounds,
) -> Result<BettiTable> {
    let nvars = basis.nvars;
    if nvars > MAX_HOCHSTER_VARS {
        return Err(Error::InvalidParams(format!(
            "{nvars} variables exceed the subset-enumeration limit {MAX_HOCHSTER_VARS}"
        )));
    }
    let Some(monos) = basis.as_monomials() else {
        return Err(Error::InvalidParams(
            "Hochster route requires a monomial generating set".into(),
        ));
    };
    for m in &monos {
        if !m.is_squarefree() {
            return Err(Error::NotSquarefree(m.to_string_xy(nvars / 2)));
        }
        if m.is_one() {
            return Err(Error::InvalidParams(
                "unit ideal: a generator is constant".into(),
            ));
        }
    }
    let supports: Vec<u64> = monomial_min_gens(monos).iter().map(support_mask).collect();

    let mut full = BettiTable::new(field.p());
    for w in 0u64..(1u64 << nvars) {
        // A vertex of w lying in no generator support inside w makes the
        // restriction a cone over it: homology vanishes, skip.
        let mut covered = 0u64;
        for &s in &supports {
            if s & w == s {
                covered |= s;
            }
        }
        if covered != w {
            continue;
        }
        let j = w.count_ones() as usize;
        let faces = restricted_faces(w, &supports);
        let ranks = homology_ranks_from_faces(field, &faces);
        for (c, &h) in ranks.iter().enumerate() {
            if h > 0 {
                debug_assert!(j >= c);
                let key = (j - c, j);
                *full.entries.entry(key).or_insert(0) += h;
            }
        }
    }
    full.max_i = nvars;
    full.max_row = full.nonzero_max_row();

    // A requested window narrower than the support of the table marks it
    // truncated; otherwise the table stays complete.
    let wi = bounds.max_i.unwrap_or(nvars);
    let wr = bounds.max_row.unwrap_or(usize::MAX);
    let mut out = BettiTable::new(field.p());
    let mut dropped = false;
    for (&(i, j), &b) in &full.entries {
        if i <= wi && j - i <= wr {
            out.entries.insert((i, j), b);
        } else {
            dropped = true;
        }
    }
    if dropped {
        out.max_i = wi;
        out.max_row = wr.min(full.max_row);
        out.truncated = true;
    } else {
        out.max_i = nvars;
        out.max_row = full.max_row;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::groebner::buchberger;
    use crate::algebra::ideals::{edge_binomials, initial_edge_monomials};
    use crate::algebra::poly::Poly;
    use crate::algebra::Provenance;
    use crate::graphs::SimpleGraph;

    fn f() -> PrimeField {
        PrimeField::default_field()
    }

    fn monomial_basis(field: &PrimeField, n: usize, gens: &[&str]) -> IdealBasis {
        IdealBasis {
            nvars: 2 * n,
            gens: gens
                .iter()
                .map(|s| Poly::parse_xy(field, n, s).unwrap())
                .collect(),
            provenance: Provenance::Parsed,
        }
    }

    #[test]
    fn principal_quadric() {
        let field = f();
        let basis = monomial_basis(&field, 2, &["x1*y2"]);
        let t = hochster_betti(&field, &basis, &BettiBounds::default()).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.entries.len(), 2);
        assert!(!t.truncated);
    }

    #[test]
    fn coprime_complete_intersection() {
        let field = f();
        // initial ideal of the 3-path: two coprime quadrics
        let basis = monomial_basis(&field, 3, &["x1*y2", "x2*y3"]);
        let t = hochster_betti(&field, &basis, &BettiBounds::default()).unwrap();
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 3), 0);
        assert_eq!(t.get(2, 4), 1);
        assert_eq!(t.regularity().unwrap(), 2);
    }

    #[test]
    fn star_initial_ideal_has_the_counterexample_entries() {
        let field = f();
        let gb = buchberger(
            &field,
            &edge_binomials(&field, &SimpleGraph::star(4)).unwrap(),
        );
        let t = hochster_betti(&field, &gb.initial_ideal(&field), &BettiBounds::default()).unwrap();
        assert_eq!(t.get(2, 3), 3);
        assert_eq!(t.get(3, 4), 1);
        assert_eq!(t.get(1, 2), 3);
        assert_eq!(t.get(1, 3), 3);
    }

    #[test]
    fn triangle_initial_ideal_table() {
        let field = f();
        let basis = initial_edge_monomials(&field, &SimpleGraph::complete(3)).unwrap();
        let t = hochster_betti(&field, &basis, &BettiBounds::default()).unwrap();
        let entries: Vec<((usize, usize), u64)> =
            t.entries.iter().map(|(&k, &v)| (k, v)).collect();
        assert_eq!(entries, vec![((0, 0), 1), ((1, 2), 3), ((2, 3), 2)]);
        assert_eq!(t.regularity().unwrap(), 1);
    }

    #[test]
    fn window_narrowing_sets_the_truncation_flag() {
        let field = f();
        let basis = monomial_basis(&field, 3, &["x1*y2", "x2*y3"]);
        let capped = hochster_betti(
            &field,
            &basis,
            &BettiBounds {
                max_row: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(capped.truncated);
        assert_eq!(capped.get(2, 4), 0);
        assert!(capped.regularity().is_err());
    }

    #[test]
    fn input_validation() {
        let field = f();
        let sq = monomial_basis(&field, 1, &["x1^2"]);
        assert!(matches!(
            hochster_betti(&field, &sq, &BettiBounds::default()),
            Err(Error::NotSquarefree(_))
        ));
        let not_mono = monomial_basis(&field, 1, &["x1 - y1"]);
        assert!(hochster_betti(&field, &not_mono, &BettiBounds::default()).is_err());
    }
}
