//! Both closed forms of the identity, the two classical specializations,
//! verification reports, and OEIS-style sequence emission.
//!
//! The left side is the partial sum of `C((r+1)i + n, i)`. The right side
//! sums one signed term per bounded composition: the tableau count of the
//! shape times the lattice-sequence count of the complementary dimensions.

use serde_json::json;

use crate::exact::{binomial, composition_universe, Composition, ExactInt};
use crate::involution::{enumerate_universe, universe_size};
use crate::{par, Error, Result};

/// Default ceiling on how many universe elements an audit may enumerate.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Left side: the partial sum of `C((r+1)i + n, i)` for `i = 0..=k`.
pub fn lhs(k: usize, n: usize, r: usize) -> ExactInt {
    (0..=k)
        .map(|i| binomial(((r + 1) * i + n) as u64, i as i64))
        .sum()
}

/// One signed right-side term, attributed to its shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermRow {
    pub shape: Composition,
    pub sign: i32,
    /// Number of labelings of the shape.
    pub tableau_count: ExactInt,
    /// Lattice-sequence count for the complementary dimensions.
    pub binomial_factor: ExactInt,
    /// `sign * tableau_count * binomial_factor`.
    pub term: ExactInt,
}

/// The per-shape term table of the right side, in composition-universe
/// order.
pub fn rhs_terms(k: usize, n: usize, r: usize) -> Vec<TermRow> {
    composition_universe(k, r)
        .into_iter()
        .map(|shape| {
            let sign = shape.sign();
            let tableau_count = crate::tableau::count_tableaux(&shape, r);
            let binomial_factor = binomial(
                ((r + 1) * k + n + 1 - shape.size() + shape.len()) as u64,
                (k - shape.size()) as i64,
            );
            let term = ExactInt::from(sign) * &tableau_count * &binomial_factor;
            TermRow {
                shape,
                sign,
                tableau_count,
                binomial_factor,
                term,
            }
        })
        .collect()
}

/// Right side: the signed sum over all bounded compositions.
pub fn rhs(k: usize, n: usize, r: usize) -> ExactInt {
    rhs_terms(k, n, r).into_iter().map(|row| row.term).sum()
}

/// The `r = 1` specialization in its classical alternating form:
/// the sum of `(-1)^i * C(2k + 1 + n - i, k - 2i)` for `i = 0..=k/2`.
pub fn rhs_pucks(k: usize, n: usize) -> ExactInt {
    (0..=k / 2)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            ExactInt::from(sign) * binomial((2 * k + 1 + n - i) as u64, (k - 2 * i) as i64)
        })
        .sum()
}

/// First `count` left-side values at fixed `(r, n)`, for `k = 0..count`.
pub fn oeis_terms(r: usize, n: usize, count: usize) -> Vec<ExactInt> {
    (0..count).map(|k| lhs(k, n, r)).collect()
}

/// OEIS id associated with a fixed `(r, n)` row, where one is known.
/// Recorded as metadata only; nothing in this crate fetches or checks the
/// sequences remotely.
pub fn oeis_id(r: usize, n: usize) -> Option<&'static str> {
    Some(match (r, n) {
        (0, 0) => "A000027",
        (0, 1) => "A000217",
        (0, 2) => "A000292",
        (0, 3) => "A000332",
        (0, 4) => "A000389",
        (0, 5) => "A000579",
        (1, 0) => "A006134",
        (1, 1) => "A079309",
        (1, 2) => "A057552",
        (1, 3) => "A371965",
        (1, 4) => "A371964",
        (1, 5) => "A371963",
        (2, 0) => "A188675",
        (2, 1) => "A263134",
        (2, 2) => "A087413",
        (3, 0) => "A225612",
        (4, 0) => "A225615",
        _ => return None,
    })
}

/// Outcome of checking one `(k, n, r)` instance.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub k: usize,
    pub n: usize,
    pub r: usize,
    pub lhs: ExactInt,
    pub rhs: ExactInt,
    /// Brute-force weight sum over the enumerated universe; present when
    /// the audit ran.
    pub weight_sum: Option<ExactInt>,
    /// Enumerated universe size; present when the audit ran.
    pub universe_size: Option<u64>,
    /// Per-shape breakdown of the right side.
    pub terms: Vec<TermRow>,
}

impl VerificationReport {
    /// Both sides agree, and so does the weight sum when it was computed.
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
            && self
                .weight_sum
                .as_ref()
                .map_or(true, |w| *w == self.lhs)
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    /// Full report as one JSON object; counts rendered as decimal strings
    /// so exactness survives any consumer.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|row| {
                json!({
                    "shape": row.shape,
                    "sign": row.sign,
                    "tableau_count": row.tableau_count.to_string(),
                    "binomial_factor": row.binomial_factor.to_string(),
                    "term": row.term.to_string(),
                })
            })
            .collect();
        json!({
            "k": self.k,
            "n": self.n,
            "r": self.r,
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "weight_sum": self.weight_sum.as_ref().map(|w| w.to_string()),
            "universe": self.universe_size,
            "status": self.status(),
            "terms": terms,
        })
    }

    pub fn csv_header() -> &'static str {
        "k,n,r,lhs,rhs,weight_sum,universe,status"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.k,
            self.n,
            self.r,
            self.lhs,
            self.rhs,
            self.weight_sum
                .as_ref()
                .map_or(String::new(), |w| w.to_string()),
            self.universe_size
                .map_or(String::new(), |u| u.to_string()),
            self.status()
        )
    }
}

/// Evaluates both sides of the identity at `(k, n, r)`.
///
/// With `with_audit` the universe is enumerated and its weight sum recorded
/// alongside, provided its size fits within `budget`; otherwise the call
/// refuses outright rather than silently downgrading.
pub fn verify(
    k: usize,
    n: usize,
    r: usize,
    with_audit: bool,
    budget: u64,
) -> Result<VerificationReport> {
    let weight_sum;
    let enumerated;
    if with_audit {
        let size = universe_size(k, n, r);
        if size > ExactInt::from(budget) {
            return Err(Error::BudgetExceeded { size, budget });
        }
        let universe = enumerate_universe(k, n, r);
        let sum: i64 = universe.iter().map(|x| i64::from(x.weight())).sum();
        weight_sum = Some(ExactInt::from(sum));
        enumerated = Some(universe.len() as u64);
    } else {
        weight_sum = None;
        enumerated = None;
    }
    let terms = rhs_terms(k, n, r);
    let rhs_value: ExactInt = terms.iter().map(|row| row.term.clone()).sum();
    Ok(VerificationReport {
        k,
        n,
        r,
        lhs: lhs(k, n, r),
        rhs: rhs_value,
        weight_sum,
        universe_size: enumerated,
        terms,
    })
}

/// Runs [`verify`] for every `k = 0..=k_max` at fixed `(r, n)`.
///
/// Reports come back in `k` order; the instances are checked in parallel
/// when the `parallel` feature is enabled. When auditing, the whole grid is
/// refused if its largest instance would blow the budget.
pub fn verify_grid(
    r: usize,
    n: usize,
    k_max: usize,
    with_audit: bool,
    budget: u64,
) -> Result<Vec<VerificationReport>> {
    if with_audit {
        // Universe sizes grow with k, so checking the top of the grid first
        // gives one refusal naming the worst offender.
        let size = universe_size(k_max, n, r);
        if size > ExactInt::from(budget) {
            return Err(Error::BudgetExceeded { size, budget });
        }
    }
    par::try_map_collect((0..=k_max).collect(), |k| {
        verify(k, n, r, with_audit, budget)
    })
}
