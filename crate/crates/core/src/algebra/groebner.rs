//! Buchberger's algorithm and polynomial division under pure lex.

use super::ideals::{IdealBasis, Provenance};
use super::poly::{Monomial, Poly};
use crate::field::PrimeField;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// Full normal form of `f` against `basis`: cancel the leading term by any
/// element whose leading monomial divides it, otherwise move it to the
/// remainder; repeat until nothing is left.
pub fn poly_reduce(field: &PrimeField, f: &Poly, basis: &[Poly]) -> Poly {
    let mut work = f.clone();
    let mut remainder: Vec<(u32, Monomial)> = Vec::new();
    'term: while let Some((c, m)) = work.leading() {
        let m = m.clone();
        for g in basis {
            let Some((gc, gm)) = g.leading() else { continue };
            if let Some(q) = gm.quotient_into(&m) {
                let scale = field.mul(c, field.inv(gc));
                work = work.sub(field, &g.term_mul(field, scale, &q));
                continue 'term;
            }
        }
        remainder.push((c, m));
        work = work.tail();
    }
    // Leading monomials strictly decrease through the loop, so the remainder
    // is already sorted.
    Poly::from_sorted_terms(remainder)
}

/// S(f, g) = lcm/lt(f) * f - lcm/lt(g) * g, with both parts made monic.
pub fn s_poly(field: &PrimeField, f: &Poly, g: &Poly) -> Poly {
    let (fc, fm) = f.leading().expect("s_poly of zero");
    let (gc, gm) = g.leading().expect("s_poly of zero");
    let l = fm.lcm(gm);
    let uf = fm.quotient_into(&l).unwrap();
    let ug = gm.quotient_into(&l).unwrap();
    f.term_mul(field, field.inv(fc), &uf)
        .sub(field, &g.term_mul(field, field.inv(gc), &ug))
}

/// A reduced Groebner basis: monic generators, pairwise non-divisible leading
/// monomials, every tail in normal form; sorted by leading monomial, largest
/// first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub nvars: usize,
    pub gens: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    pub fn normal_form(&self, field: &PrimeField, f: &Poly) -> Poly {
        poly_reduce(field, f, &self.gens)
    }

    pub fn contains(&self, field: &PrimeField, f: &Poly) -> bool {
        self.normal_form(field, f).is_zero()
    }

    /// Whether every generator is a single term, i.e. the ideal is monomial.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    /// The initial ideal as a monomial generating set. For a reduced basis
    /// the leading monomials are already minimal generators.
    pub fn initial_ideal(&self, field: &PrimeField) -> IdealBasis {
        IdealBasis {
            nvars: self.nvars,
            gens: self
                .leading_monomials()
                .into_iter()
                .map(|m| Poly::from_terms(field, vec![(1, m)]))
                .collect(),
            provenance: Provenance::GroebnerBasis,
        }
    }
}

/// Buchberger with normal selection (smallest lcm degree first, ties by lex)
/// and the coprime-leading-term skip, followed by minimalization and full
/// inter-reduction. Deterministic for a fixed input.
pub fn buchberger(field: &PrimeField, basis: &IdealBasis) -> GroebnerBasis {
    let mut gens: Vec<Poly> = basis
        .gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(field))
        .collect();

    // (lcm degree, lcm, i, j) with Reverse: smallest degree first, then
    // smallest lcm in lex, then oldest pair.
    let mut queue: BinaryHeap<Reverse<(usize, Monomial, usize, usize)>> = BinaryHeap::new();
    let push_pairs = |queue: &mut BinaryHeap<_>, gens: &[Poly], j: usize| {
        let gm = gens[j].leading_monomial().unwrap();
        for (i, h) in gens.iter().enumerate().take(j) {
            let hm = h.leading_monomial().unwrap();
            let l = hm.lcm(gm);
            queue.push(Reverse((l.degree(), l, i, j)));
        }
    };
    for j in 0..gens.len() {
        push_pairs(&mut queue, &gens, j);
    }

    while let Some(Reverse((_, _, i, j))) = queue.pop() {
        let (fi, fj) = (&gens[i], &gens[j]);
        if fi
            .leading_monomial()
            .unwrap()
            .coprime(fj.leading_monomial().unwrap())
        {
            continue;
        }
        let nf = poly_reduce(field, &s_poly(field, fi, fj), &gens);
        if !nf.is_zero() {
            gens.push(nf.monic(field));
            push_pairs(&mut queue, &gens, gens.len() - 1);
        }
    }

    // Minimalize: keep only generators whose leading monomial is not a
    // multiple of another kept one. Scanning by ascending leading monomial
    // keeps the divisor before the multiple and drops duplicates.
    gens.sort_by(|a, b| a.leading_monomial().unwrap().cmp(b.leading_monomial().unwrap()));
    let mut minimal: Vec<Poly> = Vec::new();
    for g in gens {
        let gm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(gm))
        {
            minimal.push(g);
        }
    }

    // Inter-reduce tails. Leading monomials are pairwise non-divisible, so
    // each survives its own reduction and one pass reaches the reduced basis.
    for i in 0..minimal.len() {
        let g = minimal[i].clone();
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, h)| h.clone())
            .collect();
        minimal[i] = poly_reduce(field, &g, &others).monic(field);
    }

    minimal.sort_by(|a, b| b.leading_monomial().unwrap().cmp(a.leading_monomial().unwrap()));
    GroebnerBasis {
        nvars: basis.nvars,
        gens: minimal,
    }
}

/// Direct Buchberger criterion, used as the independent checker: every
/// S-polynomial of the list must reduce to zero against it. No pair is
/// skipped.
pub fn is_groebner(field: &PrimeField, gens: &[Poly]) -> bool {
    let gens: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let s = s_poly(field, &gens[i], &gens[j]);
            if !poly_reduce(field, &s, &gens).is_zero() {
                return false;
            }
        }
    }
    true
}
