//! Dimension counts for graded pieces of S/I, by two independent routes:
//! counting standard monomials of a Groebner basis, and a direct rank
//! computation on the degree-d slice of the ideal that never touches a
//! Groebner basis.

use super::groebner::GroebnerBasis;
use super::poly::{Monomial, Poly};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{sparse_rank, SparseCol};
use std::collections::HashMap;

/// Binomial coefficient as u64; panics on overflow, which the vertex bounds
/// keep far out of reach.
pub fn binomial_coeff(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u64)
            .expect("binomial coefficient overflow")
            / (i as u64 + 1);
    }
    acc
}

/// All monomials of total degree d in nvars variables, descending lex.
pub fn monomials_of_degree(nvars: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(binomial_coeff(nvars + d - (d.min(1)), d) as usize);
    let mut exps = vec![0u8; nvars];
    fn rec(exps: &mut Vec<u8>, slot: usize, left: usize, out: &mut Vec<Monomial>) {
        if slot + 1 == exps.len() {
            exps[slot] = left as u8;
            out.push(Monomial::from_exps(exps.clone()));
            exps[slot] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[slot] = e as u8;
            rec(exps, slot + 1, left - e, out);
        }
        exps[slot] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::from_exps(Vec::new()));
        }
        return out;
    }
    rec(&mut exps, 0, d, &mut out);
    out
}

/// Degree-d monomials outside the initial ideal, i.e. divisible by no leading
/// monomial of the basis; they form a K-basis of (S/I)_d.
pub fn standard_monomials(gb: &GroebnerBasis, d: usize) -> Vec<Monomial> {
    let lts = gb.leading_monomials();
    monomials_of_degree(gb.nvars, d)
        .into_iter()
        .filter(|m| !lts.iter().any(|lt| lt.divides(m)))
        .collect()
}

/// dim_K (S/I)_d for d = 0..=dmax, from standard monomial counts.
pub fn hilbert_function(gb: &GroebnerBasis, dmax: usize) -> Vec<u64> {
    (0..=dmax)
        .map(|d| standard_monomials(gb, d).len() as u64)
        .collect()
}

/// dim_K (S/I)_d computed directly: the rank of the span of { m * g } over
/// generators g and monomials m with deg(m g) = d, subtracted from the full
/// dimension of S_d. Requires homogeneous generators; independent of any
/// Groebner computation.
pub fn quotient_dim_by_rank(
    field: &PrimeField,
    nvars: usize,
    gens: &[Poly],
    d: usize,
) -> Result<u64> {
    for g in gens {
        let degs: Vec<usize> = g.terms().iter().map(|(_, m)| m.degree()).collect();
        if degs.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::InvalidParams(
                "rank-based dimension count requires homogeneous generators".into(),
            ));
        }
    }
    let all = monomials_of_degree(nvars, d);
    let index: HashMap<&Monomial, u64> = all.iter().zip(0u64..).collect();
    let mut cols: Vec<SparseCol> = Vec::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > d {
            continue;
        }
        for m in monomials_of_degree(nvars, d - dg) {
            let col: SparseCol = g
                .terms()
                .iter()
                .map(|(c, t)| (index[&t.mul(&m)], *c))
                .collect();
            cols.push(col);
        }
    }
    let rank = sparse_rank(field, cols);
    Ok(all.len() as u64 - rank as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::groebner::buchberger;
    use crate::algebra::ideals::{edge_binomials, IdealBasis, Provenance};
    use crate::graphs::SimpleGraph;

    fn f() -> PrimeField {
        PrimeField::default_field()
    }

    fn gb_of(field: &PrimeField, g: &SimpleGraph) -> GroebnerBasis {
        buchberger(field, &edge_binomials(field, g).unwrap())
    }

    #[test]
    fn binomial_coefficients() {
        assert_eq!(binomial_coeff(5, 2), 10);
        assert_eq!(binomial_coeff(12, 6), 924);
        assert_eq!(binomial_coeff(3, 5), 0);
        assert_eq!(binomial_coeff(7, 0), 1);
    }

    #[test]
    fn degree_enumeration_is_complete_and_sorted() {
        let ms = monomials_of_degree(2, 2);
        let strs: Vec<String> = ms.iter().map(|m| m.to_string_xy(1)).collect();
        assert_eq!(strs, vec!["x1^2", "x1*y1", "y1^2"]);
        for d in 0..=4 {
            let ms = monomials_of_degree(4, d);
            assert_eq!(ms.len() as u64, binomial_coeff(3 + d, d));
            assert!(ms.windows(2).all(|w| w[0] > w[1]));
        }
        assert_eq!(monomials_of_degree(3, 0).len(), 1);
    }

    #[test]
    fn standard_monomials_of_one_edge() {
        let field = f();
        let gb = gb_of(&field, &SimpleGraph::complete(2));
        // Only x1*y2 is excluded in degree 2.
        assert_eq!(standard_monomials(&gb, 2).len(), 9);
        // S/J for a single edge has Hilbert function (d+1)^2.
        let hf = hilbert_function(&gb, 6);
        let expected: Vec<u64> = (0..=6u64).map(|d| (d + 1) * (d + 1)).collect();
        assert_eq!(hf, expected);
    }

    #[test]
    fn standard_monomials_of_a_single_variable() {
        let field = f();
        let basis = IdealBasis {
            nvars: 2,
            gens: vec![Poly::parse_xy(&field, 1, "x1").unwrap()],
            provenance: Provenance::Parsed,
        };
        let gb = buchberger(&field, &basis);
        let std2 = standard_monomials(&gb, 2);
        assert_eq!(std2.len(), 1);
        assert_eq!(std2[0].to_string_xy(1), "y1^2");
    }

    #[test]
    fn rank_route_agrees_with_standard_monomial_counts() {
        let field = f();
        for g in [
            SimpleGraph::path(3),
            SimpleGraph::complete(3),
            SimpleGraph::star(4),
        ] {
            let basis = edge_binomials(&field, &g).unwrap();
            let gb = buchberger(&field, &basis);
            for d in 0..=4 {
                let by_rank = quotient_dim_by_rank(&field, basis.nvars, &basis.gens, d).unwrap();
                assert_eq!(
                    by_rank,
                    standard_monomials(&gb, d).len() as u64,
                    "graph {g:?}, degree {d}"
                );
            }
        }
    }

    #[test]
    fn rank_route_rejects_inhomogeneous_input() {
        let field = f();
        let gens = vec![Poly::parse_xy(&field, 1, "x1 - 1").unwrap()];
        assert!(quotient_dim_by_rank(&field, 2, &gens, 2).is_err());
    }
}
