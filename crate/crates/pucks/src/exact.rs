//! Exact integer arithmetic and bounded-composition combinatorics.
//!
//! Everything downstream (tableau counting, lattice-path counting, both
//! sides of the identity) reduces to binomial coefficients and compositions
//! with parts in a bounded range, so those live here.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Arbitrary-precision signed integer used for every count in the crate.
pub type ExactInt = num_bigint::BigInt;

/// Binomial coefficient `C(n, k)`, exactly.
///
/// Out-of-range `k` (negative or above `n`) yields 0 rather than an error so
/// that alternating sums with shifted indices evaluate uniformly.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return ExactInt::from(0u8);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = ExactInt::from(1u8);
    // Multiply numerator factors in order; each intermediate division is
    // exact because the running product is itself a binomial coefficient.
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A finite sequence of positive integers, possibly empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    /// Builds a composition, rejecting zero parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ZeroPart { index });
        }
        Ok(Self { parts })
    }

    /// The empty composition.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    /// `(-1)` to the power (size minus length); the empty composition has
    /// sign `+1`.
    pub fn sign(&self) -> i32 {
        if (self.size() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Adds 1 to the first part. Needs a first part to exist.
    pub fn extend_first(&self) -> Result<Self> {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(first) => {
                *first += 1;
                Ok(Self { parts })
            }
            None => Err(Error::EmptyComposition),
        }
    }

    /// Prefixes a new part equal to 2.
    pub fn prepend_two(&self) -> Self {
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(2);
        parts.extend_from_slice(&self.parts);
        Self { parts }
    }

    /// Removes the whole first part when it is at most 2, otherwise
    /// decrements it by 1.
    pub fn shrink_first(&self) -> Result<Self> {
        match self.parts.split_first() {
            Some((&first, rest)) => {
                let mut parts = Vec::with_capacity(self.parts.len());
                if first > 2 {
                    parts.push(first - 1);
                }
                parts.extend_from_slice(rest);
                Ok(Self { parts })
            }
            None => Err(Error::EmptyComposition),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

/// Every composition of every `j <= k` whose parts all lie in `[2, r + 1]`,
/// ordered by size, then length, then lexicographically on the parts.
///
/// The empty composition (size 0) is always first. For `r = 0` the part
/// range is empty, so the universe is just the empty composition.
pub fn composition_universe(k: usize, r: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    for total in 0..=k {
        let mut batch = Vec::new();
        collect_bounded(total, r, &mut Vec::new(), &mut batch);
        batch.sort_by(|a, b| (a.len(), a.parts()).cmp(&(b.len(), b.parts())));
        out.extend(batch);
    }
    out
}

fn collect_bounded(remaining: usize, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if remaining == 0 {
        out.push(Composition {
            parts: prefix.clone(),
        });
        return;
    }
    for part in 2..=(r + 1).min(remaining) {
        prefix.push(part);
        collect_bounded(remaining - part, r, prefix, out);
        prefix.pop();
    }
}

/// Number of elements of [`composition_universe`], computed by recurrence
/// without enumerating.
pub fn composition_universe_size(k: usize, r: usize) -> ExactInt {
    // ways[j] = compositions of exactly j with parts in [2, r + 1].
    let mut ways = vec![ExactInt::from(0u8); k + 1];
    ways[0] = ExactInt::from(1u8);
    for j in 1..=k {
        for part in 2..=(r + 1).min(j) {
            ways[j] = &ways[j] + &ways[j - part];
        }
    }
    ways.into_iter().sum()
}
