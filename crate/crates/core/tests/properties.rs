//! Randomized structural properties, run with small case counts so the
//! whole file stays fast. Deterministic versions of several of these live
//! next to the implementations; the randomized forms cover shapes nobody
//! thought to write down.

use std::collections::BTreeMap;

use proptest::prelude::*;

use bei_core::algebra::{buchberger, edge_binomials, poly_reduce, Monomial, Poly};
use bei_core::betti::{koszul_betti, BettiBounds, BettiTable};
use bei_core::field::PrimeField;
use bei_core::graphs::SimpleGraph;
use bei_core::pigraph::{canonical_key, graph_from_bitmask};

fn arb_monomial(nvars: usize) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u8..3, nvars).prop_map(Monomial::from_exps)
}

fn arb_poly(nvars: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec((1u32..100, arb_monomial(nvars)), 1..5)
        .prop_map(|terms| Poly::from_terms(&PrimeField::default_field(), terms))
}

/// A graph on n vertices with at least one edge, possibly with isolated
/// vertices, as (n, edge bitmask).
fn arb_graph(n_range: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = SimpleGraph> {
    n_range.prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), 1u64..(1u64 << pairs))
            .prop_map(|(n, bits)| graph_from_bitmask(n, bits as u128))
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
}

fn arb_betti_table(characteristic: u32) -> impl Strategy<Value = BettiTable> {
    proptest::collection::btree_map((0usize..4, 0usize..3), 1u64..5, 1..6).prop_map(move |raw| {
        let entries: BTreeMap<(usize, usize), u64> =
            raw.into_iter().map(|((i, r), v)| ((i, i + r), v)).collect();
        let max_i = entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let max_row = entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        BettiTable {
            characteristic,
            entries,
            truncated: false,
            max_i,
            max_row,
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lex_order_is_multiplicative_randomized(
        m in arb_monomial(6),
        a in arb_monomial(6),
        b in arb_monomial(6),
    ) {
        prop_assume!(a != b);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assert!(m.mul(&lo) < m.mul(&hi));
    }

    #[test]
    fn poly_reduce_is_idempotent(
        f in arb_poly(6),
        basis in proptest::collection::vec(arb_poly(6), 1..4),
    ) {
        let field = PrimeField::default_field();
        let once = poly_reduce(&field, &f, &basis);
        let twice = poly_reduce(&field, &once, &basis);
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn poly_display_parse_roundtrip(f in arb_poly(6)) {
        let field = PrimeField::default_field();
        let back = Poly::parse_xy(&field, 3, &f.to_string_xy(&field, 3)).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn canonical_key_is_relabeling_invariant(g in arb_graph(2..=6)) {
        let key = canonical_key(&g);
        let reversal: Vec<usize> = (1..=g.n()).rev().collect();
        prop_assert_eq!(canonical_key(&g.relabel(&reversal).unwrap()), key);
    }

    #[test]
    fn canonical_key_survives_random_permutation(
        (g, perm) in arb_graph(2..=5).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_permutation(n))
        }),
    ) {
        prop_assert_eq!(canonical_key(&g.relabel(&perm).unwrap()), canonical_key(&g));
    }

    #[test]
    fn tensor_of_tables_commutes(
        s in arb_betti_table(32003),
        t in arb_betti_table(32003),
    ) {
        let st = s.tensor(&t).unwrap();
        let ts = t.tensor(&s).unwrap();
        prop_assert_eq!(st.entries, ts.entries);
    }

    #[test]
    fn tensor_with_unit_table_is_identity(t in arb_betti_table(32003)) {
        // the table of S itself: a single 1 at (0,0)
        let unit = BettiTable {
            characteristic: 32003,
            entries: [((0usize, 0usize), 1u64)].into_iter().collect(),
            truncated: false,
            max_i: 0,
            max_row: 0,
        };
        prop_assert_eq!(t.tensor(&unit).unwrap().entries, t.entries.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn betti_numbers_never_drop_when_passing_to_leading_terms(g in arb_graph(2..=4)) {
        prop_assume!(g.isolated_vertex().is_none());
        let field = PrimeField::default_field();
        let gb = buchberger(&field, &edge_binomials(&field, &g).unwrap());
        let bounds = BettiBounds::default();
        let t_binomial = koszul_betti(&field, &gb, &bounds).unwrap();
        let ini = buchberger(&field, &gb.initial_ideal(&field));
        let t_initial = koszul_betti(&field, &ini, &bounds).unwrap();
        prop_assert!(
            t_binomial.dominated_by(&t_initial),
            "J table:\n{}\nini table:\n{}",
            t_binomial.diagram(),
            t_initial.diagram()
        );
    }
}
