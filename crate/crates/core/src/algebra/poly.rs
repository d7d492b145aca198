//! Monomials and polynomials in S = K[x_1..x_n, y_1..y_n] over F_p.
//!
//! Variable slots 0..n-1 are x_1..x_n and slots n..2n-1 are y_1..y_n, so the
//! derived ordering on exponent vectors is exactly the lexicographic order
//! induced by x_1 > ... > x_n > y_1 > ... > y_n.

use crate::error::{Error, Result};
use crate::field::PrimeField;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u8>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u8>) -> Self {
        Monomial { exps }
    }

    #[inline]
    pub fn exps(&self) -> &[u8] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// other / self, when self divides other.
    pub fn quotient_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(&b, &a)| b - a)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Render with x/y names split at `n` (nvars = 2n).
    pub fn to_string_xy(&self, n: usize) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = if i < n {
                format!("x{}", i + 1)
            } else {
                format!("y{}", i - n + 1)
            };
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        parts.join("*")
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_string_xy(self.nvars() / 2))
    }
}

/// Terms sorted strictly descending in lex; zero is the empty list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: Vec<(u32, Monomial)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn from_terms(field: &PrimeField, raw: Vec<(u32, Monomial)>) -> Self {
        let mut terms: Vec<(u32, Monomial)> = raw
            .into_iter()
            .map(|(c, m)| (c % field.p(), m))
            .filter(|&(c, _)| c != 0)
            .collect();
        terms.sort_by(|a, b| b.1.cmp(&a.1));
        let mut merged: Vec<(u32, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match merged.last_mut() {
                Some((mc, mm)) if *mm == m => *mc = field.add(*mc, c),
                _ => merged.push((c, m)),
            }
        }
        merged.retain(|&(c, _)| c != 0);
        Poly { terms: merged }
    }

    /// Build from terms already sorted strictly descending with nonzero
    /// coefficients; used where the caller guarantees the invariant.
    pub(crate) fn from_sorted_terms(terms: Vec<(u32, Monomial)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].1 > w[1].1));
        debug_assert!(terms.iter().all(|&(c, _)| c != 0));
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The polynomial minus its leading term.
    pub fn tail(&self) -> Poly {
        Poly {
            terms: self.terms.get(1..).map(<[_]>::to_vec).unwrap_or_default(),
        }
    }

    pub fn terms(&self) -> &[(u32, Monomial)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(u32, &Monomial)> {
        self.terms.first().map(|(c, m)| (*c, m))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    pub fn add(&self, field: &PrimeField, other: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_self = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => {
                    if a.1 == b.1 {
                        let c = field.add(a.0, b.0);
                        if c != 0 {
                            out.push((c, a.1.clone()));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                    a.1 > b.1
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if take_self {
                out.push(self.terms[i].clone());
                i += 1;
            } else {
                out.push(other.terms[j].clone());
                j += 1;
            }
        }
        Poly { terms: out }
    }

    pub fn neg(&self, field: &PrimeField) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (field.neg(*c), m.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, field: &PrimeField, other: &Poly) -> Poly {
        self.add(field, &other.neg(field))
    }

    /// Multiply by the term c * m.
    pub fn term_mul(&self, field: &PrimeField, c: u32, m: &Monomial) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(tc, tm)| (field.mul(*tc, c), tm.mul(m)))
                .collect(),
        }
    }

    pub fn monic(&self, field: &PrimeField) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((1, _)) => self.clone(),
            Some((c, _)) => {
                let inv = field.inv(c);
                Poly {
                    terms: self
                        .terms
                        .iter()
                        .map(|(tc, tm)| (field.mul(*tc, inv), tm.clone()))
                        .collect(),
                }
            }
        }
    }

    /// Render in the dump format, e.g. `x1*y2 - x2*y1`.
    pub fn to_string_xy(&self, field: &PrimeField, n: usize) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let v = field.signed(*c);
            let mag = v.unsigned_abs();
            if k == 0 {
                if v < 0 {
                    s.push('-');
                }
            } else if v < 0 {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            if m.is_one() {
                s.push_str(&mag.to_string());
            } else if mag == 1 {
                s.push_str(&m.to_string_xy(n));
            } else {
                s.push_str(&format!("{}*{}", mag, m.to_string_xy(n)));
            }
        }
        s
    }

    /// Parse the dump format back. `n` is the pair count (nvars = 2n).
    pub fn parse_xy(field: &PrimeField, n: usize, text: &str) -> Result<Poly> {
        let nvars = 2 * n;
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "0" {
            return Ok(Poly::zero());
        }
        let bytes = compact.as_bytes();
        let mut terms: Vec<(u32, Monomial)> = Vec::new();
        let mut pos = 0usize;
        let err = |pos: usize, msg: &str| Error::Parse {
            line: 1,
            msg: format!("polynomial column {}: {msg}", pos + 1),
        };
        while pos < bytes.len() {
            let mut sign = 1i64;
            match bytes[pos] {
                b'+' => pos += 1,
                b'-' => {
                    sign = -1;
                    pos += 1;
                }
                _ if pos == 0 => {}
                other => return Err(err(pos, &format!("expected + or -, found `{}`", other as char))),
            }
            let mut coeff: i64 = 1;
            let mut exps = vec![0u8; nvars];
            // Every iteration below either consumes a factor or errors out,
            // so a term is never empty when the loop exits.
            loop {
                if pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let num: i64 = compact[start..pos]
                        .parse()
                        .map_err(|_| err(start, "integer overflow"))?;
                    coeff = coeff
                        .checked_mul(num)
                        .ok_or_else(|| err(start, "coefficient overflow"))?;
                } else if pos < bytes.len() && (bytes[pos] == b'x' || bytes[pos] == b'y') {
                    let is_x = bytes[pos] == b'x';
                    pos += 1;
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if start == pos {
                        return Err(err(start, "missing variable index"));
                    }
                    let idx: usize = compact[start..pos]
                        .parse()
                        .map_err(|_| err(start, "bad variable index"))?;
                    if idx < 1 || idx > n {
                        return Err(err(start, &format!("variable index out of range 1..={n}")));
                    }
                    let slot = if is_x { idx - 1 } else { n + idx - 1 };
                    let mut e: u32 = 1;
                    if pos < bytes.len() && bytes[pos] == b'^' {
                        pos += 1;
                        let es = pos;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        e = compact[es..pos].parse().map_err(|_| err(es, "bad exponent"))?;
                    }
                    let total = exps[slot] as u32 + e;
                    if total > 255 {
                        return Err(err(start, "exponent too large"));
                    }
                    exps[slot] = total as u8;
                } else {
                    return Err(err(pos, "expected coefficient or variable"));
                }
                if pos < bytes.len() && bytes[pos] == b'*' {
                    pos += 1;
                    continue;
                }
                break;
            }
            terms.push((field.from_i64(sign * coeff), Monomial::from_exps(exps)));
        }
        Ok(Poly::from_terms(field, terms))
    }
}

impl std::fmt::Debug for Poly {
    // Debug renders with the default field; it is display-only, so the exact
    // signed representatives do not matter for other moduli.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.terms.first().map(|(_, m)| m.nvars() / 2).unwrap_or(0);
        write!(f, "{}", self.to_string_xy(&PrimeField::default_field(), n))
    }
}
