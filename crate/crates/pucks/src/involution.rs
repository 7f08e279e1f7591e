//! Labeled lattice sequences of type `(k, n, r)` and the sign-reversing
//! involution over them.
//!
//! An element pairs a labeled tableau whose shape has all parts in
//! `[2, r + 1]` and size at most `k` with a lattice sequence whose width and
//! height are coupled to the shape. The involution `tau` pairs elements of
//! opposite sign and fixes exactly the empty-shape elements whose path stays
//! flat long enough west of the column `eta = r*k + n + 1`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{binomial, composition_universe, ExactInt};
use crate::lattice::{enumerate_sequences, path_stats, shift, slice, LatticeSequence};
use crate::tableau::{count_tableaux, enumerate_tableaux, LabeledTableau};
use crate::{par, Error, Result};

/// The type parameters `(k, n, r)` of a universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub k: usize,
    pub n: usize,
    pub r: usize,
}

impl Params {
    pub fn new(k: usize, n: usize, r: usize) -> Self {
        Self { k, n, r }
    }

    /// The distinguished column `r*k + n + 1` all statistics are taken at.
    pub fn eta(&self) -> usize {
        self.r * self.k + self.n + 1
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} n={} r={}", self.k, self.n, self.r)
    }
}

/// A tableau/sequence pair whose dimensions are coupled through `(k, n, r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PairRepr")]
pub struct LabeledLatticeSequence {
    tableau: LabeledTableau,
    sequence: LatticeSequence,
    params: Params,
}

#[derive(Deserialize)]
struct PairRepr {
    tableau: LabeledTableau,
    sequence: LatticeSequence,
    params: Params,
}

impl TryFrom<PairRepr> for LabeledLatticeSequence {
    type Error = Error;

    fn try_from(repr: PairRepr) -> Result<Self> {
        Self::new(repr.tableau, repr.sequence, repr.params)
    }
}

impl LabeledLatticeSequence {
    /// Builds a pair, checking all coupling invariants:
    /// the tableau bound is `r`, its shape has parts in `[2, r + 1]` and
    /// size at most `k`, the sequence width is `r*k + n + 1 + len(shape)`
    /// and its height is `k - size(shape)`.
    pub fn new(
        tableau: LabeledTableau,
        sequence: LatticeSequence,
        params: Params,
    ) -> Result<Self> {
        let shape = tableau.shape();
        if tableau.bound() != params.r {
            return Err(Error::PairInvariant(format!(
                "tableau bound {} differs from r = {}",
                tableau.bound(),
                params.r
            )));
        }
        if let Some(&part) = shape
            .parts()
            .iter()
            .find(|&&p| p < 2 || p > params.r + 1)
        {
            return Err(Error::PairInvariant(format!(
                "shape part {part} outside [2, {}]",
                params.r + 1
            )));
        }
        if shape.size() > params.k {
            return Err(Error::PairInvariant(format!(
                "shape size {} exceeds k = {}",
                shape.size(),
                params.k
            )));
        }
        let want_width = params.eta() + shape.len();
        if sequence.width() != want_width {
            return Err(Error::PairInvariant(format!(
                "sequence width {} differs from {want_width}",
                sequence.width()
            )));
        }
        let want_height = (params.k - shape.size()) as i64;
        if sequence.height() != want_height {
            return Err(Error::PairInvariant(format!(
                "sequence height {} differs from {want_height}",
                sequence.height()
            )));
        }
        Ok(Self {
            tableau,
            sequence,
            params,
        })
    }

    pub fn tableau(&self) -> &LabeledTableau {
        &self.tableau
    }

    pub fn sequence(&self) -> &LatticeSequence {
        &self.sequence
    }

    pub fn params(&self) -> Params {
        self.params
    }

    /// Re-checks every invariant of an already-built value.
    pub fn check_invariants(&self) -> Result<()> {
        Self::new(self.tableau.clone(), self.sequence.clone(), self.params).map(|_| ())
    }

    /// Weight of the element: the sign of its tableau's shape.
    pub fn weight(&self) -> i32 {
        self.tableau.sign()
    }

    /// Derives the statistics at `eta` and selects the unique involution
    /// case whose guard holds.
    pub fn classify(&self) -> InvolutionContext {
        let eta = self.params.eta();
        let stats =
            path_stats(&self.sequence, eta).expect("eta is within the width by construction");
        let r = self.params.r as i64;
        let nu = if self.tableau.is_empty() {
            None
        } else {
            let first = self
                .tableau
                .first_label()
                .expect("nonempty tableau has a first label") as i64;
            Some(eta as i64 - 1 - r * stats.omega - first)
        };
        let case = if stats.mu < r * stats.omega {
            TauCase::Case1
        } else if self.tableau.is_empty() {
            TauCase::Fixed
        } else {
            let nu = nu.expect("nu is present for nonempty tableaux");
            assert!(nu >= 0, "nu must be nonnegative for nonempty shapes");
            if stats.gamma <= nu {
                if self.tableau.shape().first() == Some(2) {
                    TauCase::Case3
                } else {
                    TauCase::Case4
                }
            } else {
                TauCase::Case5
            }
        };
        InvolutionContext {
            eta,
            omega: stats.omega,
            gamma: stats.gamma,
            mu: stats.mu,
            nu,
            case,
        }
    }

    /// Applies the involution once.
    ///
    /// Total on valid elements; the output is re-validated against the type
    /// invariants and a violation aborts rather than propagating a corrupt
    /// value.
    pub fn tau(&self) -> Self {
        let ctx = self.classify();
        let entries = self.sequence.entries();
        let eta = ctx.eta;
        let last = entries.len() - 1;
        let r = self.params.r as i64;
        match ctx.case {
            TauCase::Fixed => self.clone(),
            TauCase::Case1 => {
                // mu < r*omega forces r >= 1 and at least one ascent west
                // of eta.
                assert!(r >= 1, "case 1 is unreachable for r = 0");
                assert!(ctx.gamma >= 0, "case 1 needs an ascent west of eta");
                let gamma = ctx.gamma as usize;
                let label = (ctx.mu % r) as usize;
                let tableau = self
                    .tableau
                    .oplus(label)
                    .expect("mu mod r is below the bound");
                let entries = [
                    slice(entries, 0, gamma).expect("gamma < eta <= width"),
                    shift(&slice(entries, gamma + 1, eta).expect("gamma < eta"), -1),
                    vec![entries[eta] - 1 + ctx.mu / r],
                    shift(&slice(entries, eta + 1, last).expect("eta < len - 1"), -2),
                ]
                .concat();
                self.rebuild(tableau, entries)
            }
            TauCase::Case3 => {
                let nu = ctx.nu.expect("nonempty shape") as usize;
                let tableau = self.tableau.shrink().expect("nonempty tableau");
                let entries = [
                    slice(entries, 0, nu).expect("nu < eta"),
                    shift(&slice(entries, nu + 1, eta).expect("nu < eta"), 1),
                    shift(&slice(entries, eta + 2, last).expect("eta + 2 <= len - 1"), 2),
                ]
                .concat();
                self.rebuild(tableau, entries)
            }
            TauCase::Case4 => {
                let nu = ctx.nu.expect("nonempty shape") as usize;
                let tableau = self.tableau.shrink().expect("nonempty tableau");
                let entries = [
                    slice(entries, 0, nu).expect("nu < eta"),
                    shift(&slice(entries, nu + 1, last).expect("nu < len - 1"), 1),
                ]
                .concat();
                self.rebuild(tableau, entries)
            }
            TauCase::Case5 => {
                assert!(r >= 1, "case 5 is unreachable for r = 0");
                assert!(ctx.gamma >= 0, "case 5 needs an ascent west of eta");
                let gamma = ctx.gamma as usize;
                let label = (ctx.mu % r) as usize;
                let tableau = self
                    .tableau
                    .plus(label)
                    .expect("mu mod r is below the smallest first-row label");
                let entries = [
                    slice(entries, 0, gamma).expect("gamma < len - 1"),
                    shift(&slice(entries, gamma + 1, last).expect("gamma < len - 1"), -1),
                ]
                .concat();
                self.rebuild(tableau, entries)
            }
        }
    }

    fn rebuild(&self, tableau: LabeledTableau, entries: Vec<i64>) -> Self {
        let sequence =
            LatticeSequence::new(entries).expect("tau produced an invalid lattice sequence");
        Self::new(tableau, sequence, self.params)
            .expect("tau produced an invalid labeled lattice sequence")
    }
}

/// Which branch of the involution applies to an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TauCase {
    #[serde(rename = "FIXED")]
    Fixed,
    #[serde(rename = "CASE1")]
    Case1,
    #[serde(rename = "CASE3")]
    Case3,
    #[serde(rename = "CASE4")]
    Case4,
    #[serde(rename = "CASE5")]
    Case5,
}

impl fmt::Display for TauCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TauCase::Fixed => "FIXED",
            TauCase::Case1 => "CASE1",
            TauCase::Case3 => "CASE3",
            TauCase::Case4 => "CASE4",
            TauCase::Case5 => "CASE5",
        };
        f.write_str(name)
    }
}

/// The statistics `tau` derives from an element before acting on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvolutionContext {
    pub eta: usize,
    pub omega: i64,
    pub gamma: i64,
    pub mu: i64,
    /// `eta - 1 - r*omega - (smallest first-row label)`; absent exactly when
    /// the tableau is empty.
    pub nu: Option<i64>,
    pub case: TauCase,
}

/// The full universe of type `(k, n, r)`: for each shape in the composition
/// universe (its documented order), every tableau labeling (tableau order),
/// paired with every compatible sequence (lexicographic order).
pub fn enumerate_universe(k: usize, n: usize, r: usize) -> Vec<LabeledLatticeSequence> {
    let params = Params::new(k, n, r);
    let mut out = Vec::new();
    for shape in composition_universe(k, r) {
        let tableaux =
            enumerate_tableaux(&shape, r).expect("universe shapes fit within the bound");
        let sequences = enumerate_sequences(params.eta() + shape.len(), k - shape.size());
        for tableau in &tableaux {
            for sequence in &sequences {
                out.push(LabeledLatticeSequence {
                    tableau: tableau.clone(),
                    sequence: sequence.clone(),
                    params,
                });
            }
        }
    }
    out
}

/// Number of elements of the universe of type `(k, n, r)`, computed from
/// the per-shape product formula without enumerating.
pub fn universe_size(k: usize, n: usize, r: usize) -> ExactInt {
    let params = Params::new(k, n, r);
    composition_universe(k, r)
        .iter()
        .map(|shape| {
            count_tableaux(shape, r)
                * binomial(
                    (params.eta() + shape.len() + k - shape.size()) as u64,
                    (k - shape.size()) as i64,
                )
        })
        .sum()
}

/// All fixed points of `tau`: empty-shape elements whose statistics at
/// `eta = r*k + n + 1` satisfy `mu >= r * omega`.
pub fn fixed_points(k: usize, n: usize, r: usize) -> Vec<LabeledLatticeSequence> {
    let params = Params::new(k, n, r);
    enumerate_sequences(params.eta(), k)
        .into_iter()
        .filter(|l| {
            let s = path_stats(l, l.width()).expect("eta equals the width here");
            s.mu >= r as i64 * s.omega
        })
        .map(|sequence| LabeledLatticeSequence {
            tableau: LabeledTableau::empty(r),
            sequence,
            params,
        })
        .collect()
}

/// One class of fixed points, grouped by the vertical rise at `eta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OmegaClass {
    /// Class index: `omega = k - i`.
    pub i: usize,
    /// Vertical rise at `eta` shared by the class.
    pub omega: usize,
    /// Number of fixed points in the class.
    pub count: usize,
}

/// Census of the fixed points by their rise at `eta`, for `i = 0..=k`.
/// Class `i` counts `C((r+1)*i + n, i)` members.
pub fn fixed_point_census(k: usize, n: usize, r: usize) -> Vec<OmegaClass> {
    let mut counts = vec![0usize; k + 1];
    for x in fixed_points(k, n, r) {
        let s = path_stats(x.sequence(), x.sequence().width()).expect("eta equals width");
        let omega = s.omega as usize;
        counts[k - omega] += 1;
    }
    counts
        .into_iter()
        .enumerate()
        .map(|(i, count)| OmegaClass {
            i,
            omega: k - i,
            count,
        })
        .collect()
}

/// Outcome of applying `tau` to one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuditRecord {
    /// Position of the element in universe order.
    pub index: usize,
    /// Case that applied to the element.
    pub case: TauCase,
    /// Position of `tau(x)` in universe order (equals `index` for fixed
    /// points).
    pub mate_index: usize,
    /// Weight of the element.
    pub weight: i32,
}

/// Result of an exhaustive involution audit over one universe.
#[derive(Clone, Debug)]
pub struct AuditReport {
    pub params: Params,
    pub universe_size: usize,
    pub fixed_count: usize,
    pub weight_sum: i64,
    /// `tau(tau(x)) = x` for every element.
    pub involution_ok: bool,
    /// Moved elements swap sign; fixed elements have weight +1.
    pub sign_ok: bool,
    /// The fixed points are exactly the empty-shape, `mu >= r*omega`
    /// elements.
    pub fixed_set_ok: bool,
    /// Case 1 pairs with case 3, case 4 with case 5.
    pub case_pairing_ok: bool,
    /// Outputs re-validated against the type invariants.
    pub type_ok: bool,
    pub elements: Vec<LabeledLatticeSequence>,
    pub records: Vec<AuditRecord>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.involution_ok
            && self.sign_ok
            && self.fixed_set_ok
            && self.case_pairing_ok
            && self.type_ok
    }

    /// JSON array of per-element records: the element itself plus the case
    /// that applied and the universe index of its mate.
    pub fn records_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .records
            .iter()
            .map(|rec| {
                let mut value = serde_json::to_value(&self.elements[rec.index])
                    .expect("elements serialize");
                let map = value.as_object_mut().expect("element is a JSON object");
                map.insert("case".into(), serde_json::to_value(rec.case).expect("case"));
                map.insert("mate_index".into(), rec.mate_index.into());
                value
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

struct ElementCheck {
    record: AuditRecord,
    involution_ok: bool,
    sign_ok: bool,
    fixed_set_ok: bool,
    case_pairing_ok: bool,
    type_ok: bool,
}

fn check_element(
    index: usize,
    x: &LabeledLatticeSequence,
    positions: &HashMap<&LabeledLatticeSequence, usize>,
) -> ElementCheck {
    let ctx = x.classify();
    let y = x.tau();
    let y_ctx = y.classify();
    let fixed = y == *x;

    let mate_index = *positions.get(&y).expect("tau stays inside the universe");
    let involution_ok = y.tau() == *x;
    let sign_ok = if fixed {
        x.weight() == 1
    } else {
        y.weight() == -x.weight()
    };
    let fixed_set_ok = {
        let eta = x.params().eta();
        let s = path_stats(x.sequence(), eta).expect("eta within width");
        let should_fix = x.tableau().is_empty() && s.mu >= x.params().r as i64 * s.omega;
        fixed == should_fix && (ctx.case == TauCase::Fixed) == fixed
    };
    let case_pairing_ok = matches!(
        (ctx.case, y_ctx.case),
        (TauCase::Fixed, TauCase::Fixed)
            | (TauCase::Case1, TauCase::Case3)
            | (TauCase::Case3, TauCase::Case1)
            | (TauCase::Case4, TauCase::Case5)
            | (TauCase::Case5, TauCase::Case4)
    );
    let type_ok = y.check_invariants().is_ok() && y.params() == x.params();

    ElementCheck {
        record: AuditRecord {
            index,
            case: ctx.case,
            mate_index,
            weight: x.weight(),
        },
        involution_ok,
        sign_ok,
        fixed_set_ok,
        case_pairing_ok,
        type_ok,
    }
}

fn audit_on(params: Params, universe: Vec<LabeledLatticeSequence>, parallel: bool) -> AuditReport {
    let positions: HashMap<&LabeledLatticeSequence, usize> = universe
        .iter()
        .enumerate()
        .map(|(i, x)| (x, i))
        .collect();

    let run = |(index, x): (usize, &LabeledLatticeSequence)| check_element(index, x, &positions);
    let checks: Vec<ElementCheck> = if parallel {
        par::indexed_map_collect(&universe, run)
    } else {
        universe.iter().enumerate().map(run).collect()
    };

    let mut report = AuditReport {
        params,
        universe_size: universe.len(),
        fixed_count: 0,
        weight_sum: 0,
        involution_ok: true,
        sign_ok: true,
        fixed_set_ok: true,
        case_pairing_ok: true,
        type_ok: true,
        elements: Vec::new(),
        records: Vec::with_capacity(checks.len()),
    };
    for check in checks {
        if check.record.mate_index == check.record.index {
            report.fixed_count += 1;
        }
        report.weight_sum += i64::from(check.record.weight);
        report.involution_ok &= check.involution_ok;
        report.sign_ok &= check.sign_ok;
        report.fixed_set_ok &= check.fixed_set_ok;
        report.case_pairing_ok &= check.case_pairing_ok;
        report.type_ok &= check.type_ok;
        report.records.push(check.record);
    }
    report.elements = universe;
    report
}

/// Exhaustive audit of `tau` over the universe of type `(k, n, r)`:
/// involution, sign reversal, fixed-point characterization, case pairing
/// and type preservation. Parallel when the `parallel` feature is enabled.
pub fn audit(k: usize, n: usize, r: usize) -> AuditReport {
    let params = Params::new(k, n, r);
    audit_on(params, enumerate_universe(k, n, r), cfg!(feature = "parallel"))
}

/// Sequential variant of [`audit`], available regardless of features; used
/// as the baseline in benchmarks.
pub fn audit_seq(k: usize, n: usize, r: usize) -> AuditReport {
    let params = Params::new(k, n, r);
    audit_on(params, enumerate_universe(k, n, r), false)
}
