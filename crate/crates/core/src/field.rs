//! Arithmetic in the prime field F_p for odd primes p < 2^31.
//!
//! Elements are plain `u32` values in `0..p`; all operations go through a
//! `PrimeField` carrying the modulus, so polynomials and matrices store raw
//! residues without tagging each one.

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u32 = 32003;
pub const CROSSCHECK_PRIME: u32 = 101;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !(3..1u32 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidParams(format!(
                "characteristic must be an odd prime below 2^31, got {p}"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn default_field() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// a - b*c in one pass, the inner op of Gaussian elimination.
    #[inline]
    pub fn sub_mul(&self, a: u32, b: u32, c: u32) -> u32 {
        let t = (b as u64 * c as u64) % self.p as u64;
        let a = a as u64;
        (if a >= t { a - t } else { a + self.p as u64 - t }) as u32
    }

    pub fn pow(&self, mut base: u32, mut e: u64) -> u32 {
        let mut acc: u64 = 1;
        let p = self.p as u64;
        let mut b = base as u64 % p;
        base = 0;
        let _ = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc as u32
    }

    /// Multiplicative inverse by Fermat; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "division by zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// Reduce a signed integer into 0..p.
    pub fn from_i64(&self, v: i64) -> u32 {
        let p = self.p as i64;
        (((v % p) + p) % p) as u32
    }

    /// Print a residue as the signed representative closest to zero.
    pub fn signed(&self, a: u32) -> i64 {
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    let n64 = n as u64;
    while d * d <= n64 {
        if n64.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
