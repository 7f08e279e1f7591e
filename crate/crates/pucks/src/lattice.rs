//! Lattice sequences: weakly increasing nonnegative integer sequences
//! starting at 0, read as monotone lattice paths. Entry `i` (excluding the
//! first and last) is the height of the `i`th horizontal step.
//!
//! Raw slice/shift/concat helpers work on plain `&[i64]` because the
//! involution's case formulas shift slices below zero or away from a zero
//! start before reassembling; only the final sequence is re-validated.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SequenceRepr")]
pub struct LatticeSequence {
    entries: Vec<i64>,
}

#[derive(Deserialize)]
struct SequenceRepr {
    entries: Vec<i64>,
}

impl TryFrom<SequenceRepr> for LatticeSequence {
    type Error = Error;

    fn try_from(repr: SequenceRepr) -> Result<Self> {
        Self::new(repr.entries)
    }
}

impl LatticeSequence {
    /// Builds a sequence, checking it has at least two entries, starts at 0
    /// and is weakly increasing (which also forces nonnegativity).
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::SequenceTooShort { len: entries.len() });
        }
        if entries[0] != 0 {
            return Err(Error::SequenceStart { first: entries[0] });
        }
        if let Some(index) = (1..entries.len()).find(|&i| entries[i - 1] > entries[i]) {
            return Err(Error::SequenceDecreasing { index });
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Number of entries minus 2.
    pub fn width(&self) -> usize {
        self.entries.len() - 2
    }

    /// The last entry.
    pub fn height(&self) -> i64 {
        *self.entries.last().expect("at least two entries")
    }
}

impl fmt::Display for LatticeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Path statistics of a sequence at a column `eta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathStats {
    /// The column the statistics were taken at.
    pub eta: usize,
    /// Vertical rise at `eta`: `L[eta + 1] - L[eta]`.
    pub omega: i64,
    /// Rightmost ascent strictly west of `eta`, or -1 when the prefix
    /// through `eta` is constant.
    pub gamma: i64,
    /// Distance `eta - 1 - gamma`.
    pub mu: i64,
}

/// Indices `i` with `s[i] < s[i + 1]`; the columns holding vertical steps.
pub fn ascent_set(s: &[i64]) -> Vec<usize> {
    (0..s.len().saturating_sub(1))
        .filter(|&i| s[i] < s[i + 1])
        .collect()
}

/// Inclusive subsequence `s[lo..=hi]`.
pub fn slice(s: &[i64], lo: usize, hi: usize) -> Result<Vec<i64>> {
    if lo > hi || hi >= s.len() {
        return Err(Error::SliceOutOfRange {
            lo,
            hi,
            len: s.len(),
        });
    }
    Ok(s[lo..=hi].to_vec())
}

/// Pointwise shift by `a` (may be negative).
pub fn shift(s: &[i64], a: i64) -> Vec<i64> {
    s.iter().map(|&e| e + a).collect()
}

/// Concatenation of two raw sequences.
pub fn concat(s: &[i64], t: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(s.len() + t.len());
    out.extend_from_slice(s);
    out.extend_from_slice(t);
    out
}

/// Statistics of `l` at column `eta`: the vertical rise there, the rightmost
/// ascent west of it, and the gap between the two.
pub fn path_stats(l: &LatticeSequence, eta: usize) -> Result<PathStats> {
    if eta > l.width() {
        return Err(Error::EtaOutOfRange {
            eta,
            width: l.width(),
        });
    }
    let entries = l.entries();
    let omega = entries[eta + 1] - entries[eta];
    let gamma = ascent_set(&entries[..=eta])
        .last()
        .map_or(-1, |&i| i as i64);
    let mu = eta as i64 - 1 - gamma;
    Ok(PathStats {
        eta,
        omega,
        gamma,
        mu,
    })
}

/// All sequences of the given width and height, in lexicographic order on
/// the entries. There are `C(width + height, width)` of them.
pub fn enumerate_sequences(width: usize, height: usize) -> Vec<LatticeSequence> {
    let mut out = Vec::new();
    let mut inner = Vec::with_capacity(width);
    fill(&mut inner, 0, width, height as i64, &mut out);
    out
}

fn fill(
    inner: &mut Vec<i64>,
    min: i64,
    width: usize,
    height: i64,
    out: &mut Vec<LatticeSequence>,
) {
    if inner.len() == width {
        let mut entries = Vec::with_capacity(width + 2);
        entries.push(0);
        entries.extend_from_slice(inner);
        entries.push(height);
        out.push(LatticeSequence { entries });
        return;
    }
    for v in min..=height {
        inner.push(v);
        fill(inner, v, width, height, out);
        inner.pop();
    }
}

/// Extends a sequence of height `i` into the fixed-point class at height
/// `k`: appends `r * (k - i)` copies of `i` followed by a single `k`.
pub fn psi(l: &LatticeSequence, k: usize, r: usize, i: usize) -> Result<LatticeSequence> {
    if l.height() != i as i64 {
        return Err(Error::Precondition(format!(
            "psi needs height {i}, sequence {l} has height {}",
            l.height()
        )));
    }
    if i > k {
        return Err(Error::Precondition(format!("psi needs i <= k, got i={i} k={k}")));
    }
    if l.width() < r * i {
        return Err(Error::Precondition(format!(
            "psi needs width >= r*i = {}, sequence {l} has width {}",
            r * i,
            l.width()
        )));
    }
    let mut entries = l.entries().to_vec();
    entries.extend(std::iter::repeat(i as i64).take(r * (k - i)));
    entries.push(k as i64);
    LatticeSequence::new(entries)
}

/// Inverse of [`psi`]: truncates a fixed-point-class sequence back to the
/// prefix of length `r*i + n + 2`.
pub fn phi(l: &LatticeSequence, r: usize, i: usize, n: usize) -> Result<LatticeSequence> {
    let k = l.height();
    if k < 0 || l.width() != r * (k as usize) + n + 1 {
        return Err(Error::Precondition(format!(
            "phi needs width r*k + n + 1 = {}, sequence {l} has width {}",
            r * (k.max(0) as usize) + n + 1,
            l.width()
        )));
    }
    let k = k as usize;
    if i > k {
        return Err(Error::Precondition(format!("phi needs i <= k, got i={i} k={k}")));
    }
    let stats = path_stats(l, l.width())?;
    if stats.omega != (k - i) as i64 {
        return Err(Error::Precondition(format!(
            "phi needs omega = k - i = {}, sequence {l} has omega {}",
            k - i,
            stats.omega
        )));
    }
    if stats.mu < r as i64 * stats.omega {
        return Err(Error::Precondition(format!(
            "phi needs mu >= r*omega, sequence {l} has mu {} < {}",
            stats.mu,
            r as i64 * stats.omega
        )));
    }
    LatticeSequence::new(slice(l.entries(), 0, r * i + n + 1)?)
}
