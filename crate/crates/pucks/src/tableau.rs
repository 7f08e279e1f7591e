//! Labeled tableaux: left-justified rows of boxes where the first box of
//! each row is empty and the remaining boxes hold strictly increasing labels
//! below a bound.
//!
//! The empty leading box carries no data, so a row with `p` boxes is stored
//! as its `p - 1` labels. The bound travels with the tableau so validation
//! is self-contained.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::exact::{binomial, Composition, ExactInt};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr")]
pub struct LabeledTableau {
    shape: Composition,
    rows: Vec<Vec<usize>>,
    bound: usize,
}

/// Raw wire form; converted through `LabeledTableau::new` so deserialized
/// values always satisfy the invariants.
#[derive(Deserialize)]
struct TableauRepr {
    shape: Composition,
    rows: Vec<Vec<usize>>,
    bound: usize,
}

impl TryFrom<TableauRepr> for LabeledTableau {
    type Error = Error;

    fn try_from(repr: TableauRepr) -> Result<Self> {
        Self::new(repr.shape, repr.rows, repr.bound)
    }
}

impl LabeledTableau {
    /// Builds a tableau, checking every invariant: one label row per shape
    /// part, row `i` holding exactly `shape[i] - 1` strictly increasing
    /// labels, all labels below `bound`.
    pub fn new(shape: Composition, rows: Vec<Vec<usize>>, bound: usize) -> Result<Self> {
        if rows.len() != shape.len() {
            return Err(Error::TableauShape(format!(
                "shape {shape} has {} rows but {} label rows were given",
                shape.len(),
                rows.len()
            )));
        }
        for (i, (part, row)) in shape.parts().iter().zip(&rows).enumerate() {
            if row.len() + 1 != *part {
                return Err(Error::TableauShape(format!(
                    "row {i} has {} labels, expected {} for part {part}",
                    row.len(),
                    part - 1
                )));
            }
            for (j, &label) in row.iter().enumerate() {
                if label >= bound {
                    return Err(Error::LabelOutOfRange { label, bound });
                }
                if j > 0 && row[j - 1] >= label {
                    return Err(Error::TableauShape(format!(
                        "row {i} is not strictly increasing at position {j}"
                    )));
                }
            }
        }
        Ok(Self { shape, rows, bound })
    }

    /// The tableau of empty shape.
    pub fn empty(bound: usize) -> Self {
        Self {
            shape: Composition::empty(),
            rows: Vec::new(),
            bound,
        }
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Exclusive upper bound on labels.
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Sign of the tableau = sign of its shape.
    pub fn sign(&self) -> i32 {
        self.shape.sign()
    }

    /// Smallest label of the first row.
    pub fn first_label(&self) -> Result<usize> {
        self.rows
            .first()
            .and_then(|row| row.first())
            .copied()
            .ok_or(Error::EmptyTableau)
    }

    /// Prefixes a new first row holding the single label `a`; the shape
    /// gains a leading part 2.
    pub fn oplus(&self, a: usize) -> Result<Self> {
        if a >= self.bound {
            return Err(Error::LabelOutOfRange {
                label: a,
                bound: self.bound,
            });
        }
        let mut rows = Vec::with_capacity(self.rows.len() + 1);
        rows.push(vec![a]);
        rows.extend(self.rows.iter().cloned());
        Ok(Self {
            shape: self.shape.prepend_two(),
            rows,
            bound: self.bound,
        })
    }

    /// Inserts `a` into the first row, keeping it strictly increasing; the
    /// first shape part grows by 1.
    pub fn plus(&self, a: usize) -> Result<Self> {
        if a >= self.bound {
            return Err(Error::LabelOutOfRange {
                label: a,
                bound: self.bound,
            });
        }
        if self.rows.is_empty() {
            return Err(Error::EmptyTableau);
        }
        let mut rows = self.rows.clone();
        let first = &mut rows[0];
        match first.binary_search(&a) {
            Ok(_) => return Err(Error::DuplicateLabel { label: a }),
            Err(pos) => first.insert(pos, a),
        }
        Ok(Self {
            shape: self.shape.extend_first()?,
            rows,
            bound: self.bound,
        })
    }

    /// Removes the smallest first-row label when the first row has more than
    /// two boxes, otherwise removes the entire first row.
    pub fn shrink(&self) -> Result<Self> {
        if self.rows.is_empty() {
            return Err(Error::EmptyTableau);
        }
        let mut rows = self.rows.clone();
        if rows[0].len() >= 2 {
            rows[0].remove(0);
        } else {
            rows.remove(0);
        }
        Ok(Self {
            shape: self.shape.shrink_first()?,
            rows,
            bound: self.bound,
        })
    }
}

impl fmt::Display for LabeledTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "[]");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "[{}]", row.iter().join(","))?;
        }
        Ok(())
    }
}

/// All labelings of `shape` with labels below `bound`.
///
/// Ordered as an odometer over rows: the first row's label set is the
/// slowest-varying, each row running through its `(part - 1)`-subsets of
/// `{0, .., bound - 1}` in lexicographic order. A shape part above
/// `bound + 1` admits no labeling and is rejected.
pub fn enumerate_tableaux(shape: &Composition, bound: usize) -> Result<Vec<LabeledTableau>> {
    if let Some(&part) = shape.parts().iter().find(|&&p| p > bound + 1) {
        return Err(Error::ShapeTooWide { part, bound });
    }
    if shape.is_empty() {
        return Ok(vec![LabeledTableau::empty(bound)]);
    }
    let row_choices: Vec<Vec<Vec<usize>>> = shape
        .parts()
        .iter()
        .map(|&part| (0..bound).combinations(part - 1).collect())
        .collect();
    let out = row_choices
        .into_iter()
        .multi_cartesian_product()
        .map(|rows| LabeledTableau {
            shape: shape.clone(),
            rows,
            bound,
        })
        .collect();
    Ok(out)
}

/// Number of labelings of `shape` with labels below `bound`: the product of
/// `C(bound, part - 1)` over the parts. The empty shape counts 1; a part
/// above `bound + 1` contributes a zero factor.
pub fn count_tableaux(shape: &Composition, bound: usize) -> ExactInt {
    shape
        .parts()
        .iter()
        .map(|&part| binomial(bound as u64, part as i64 - 1))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::composition_universe;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    /// Running example: a tableau of shape (4,5,3) with labels below 4.
    fn sample() -> LabeledTableau {
        LabeledTableau::new(
            comp(&[4, 5, 3]),
            vec![vec![0, 2, 3], vec![0, 1, 2, 3], vec![1, 3]],
            4,
        )
        .unwrap()
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            LabeledTableau::new(comp(&[2]), vec![], 1),
            Err(Error::TableauShape(_))
        ));
        assert!(matches!(
            LabeledTableau::new(comp(&[3]), vec![vec![0]], 1),
            Err(Error::TableauShape(_))
        ));
        assert!(matches!(
            LabeledTableau::new(comp(&[2]), vec![vec![5]], 4),
            Err(Error::LabelOutOfRange { label: 5, bound: 4 })
        ));
        assert!(matches!(
            LabeledTableau::new(comp(&[3]), vec![vec![1, 1]], 4),
            Err(Error::TableauShape(_))
        ));
    }

    #[test]
    fn sample_properties() {
        let t = sample();
        assert_eq!(t.first_label().unwrap(), 0);
        assert_eq!(t.sign(), -1);
        assert_eq!(t.to_string(), "[0,2,3] [0,1,2,3] [1,3]");
    }

    #[test]
    fn edit_operations_on_sample() {
        let t = sample();

        let up = t.oplus(1).unwrap();
        assert_eq!(up.shape(), &comp(&[2, 4, 5, 3]));
        assert_eq!(
            up.rows(),
            &[vec![1], vec![0, 2, 3], vec![0, 1, 2, 3], vec![1, 3]]
        );
        assert_eq!(up.first_label().unwrap(), 1);

        let right = t.plus(1).unwrap();
        assert_eq!(right.shape(), &comp(&[5, 5, 3]));
        assert_eq!(right.rows()[0], vec![0, 1, 2, 3]);

        let down = t.shrink().unwrap();
        assert_eq!(down.shape(), &comp(&[3, 5, 3]));
        assert_eq!(down.rows()[0], vec![2, 3]);
        assert_eq!(down.first_label().unwrap(), 2);
    }

    #[test]
    fn edit_operation_errors() {
        let t = sample();
        assert!(matches!(t.plus(0), Err(Error::DuplicateLabel { label: 0 })));
        assert!(matches!(
            t.plus(9),
            Err(Error::LabelOutOfRange { label: 9, bound: 4 })
        ));
        let e = LabeledTableau::empty(3);
        assert!(matches!(e.shrink(), Err(Error::EmptyTableau)));
        assert!(matches!(e.first_label(), Err(Error::EmptyTableau)));
        assert!(matches!(e.plus(0), Err(Error::EmptyTableau)));
        // oplus is fine on the empty tableau: it creates the first row.
        let up = e.oplus(1).unwrap();
        assert_eq!(up.shape(), &comp(&[2]));
        assert_eq!(up.rows(), &[vec![1]]);
    }

    #[test]
    fn shrink_removes_two_box_first_row() {
        let t = LabeledTableau::new(comp(&[2, 3]), vec![vec![1], vec![0, 2]], 3).unwrap();
        let down = t.shrink().unwrap();
        assert_eq!(down.shape(), &comp(&[3]));
        assert_eq!(down.rows(), &[vec![0, 2]]);
    }

    #[test]
    fn enumeration_examples() {
        let empty = enumerate_tableaux(&Composition::empty(), 3).unwrap();
        assert_eq!(empty, vec![LabeledTableau::empty(3)]);

        let single = enumerate_tableaux(&comp(&[2]), 1).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].rows(), &[vec![0]]);

        let many = enumerate_tableaux(&comp(&[4, 5, 3]), 4).unwrap();
        assert_eq!(many.len(), 24);
        assert_eq!(count_tableaux(&comp(&[4, 5, 3]), 4), ExactInt::from(24));
    }

    #[test]
    fn enumeration_rejects_too_wide_shapes() {
        assert!(matches!(
            enumerate_tableaux(&comp(&[6]), 4),
            Err(Error::ShapeTooWide { part: 6, bound: 4 })
        ));
        assert!(matches!(
            enumerate_tableaux(&comp(&[2]), 0),
            Err(Error::ShapeTooWide { part: 2, bound: 0 })
        ));
        assert_eq!(count_tableaux(&comp(&[6]), 4), ExactInt::from(0));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_tableaux(&Composition::empty(), 0), ExactInt::from(1));
        assert_eq!(count_tableaux(&comp(&[2, 2]), 1), ExactInt::from(1));
    }

    #[test]
    fn enumeration_matches_count_over_universe() {
        for r in 0..=4usize {
            for alpha in composition_universe(6, r) {
                let listed = enumerate_tableaux(&alpha, r).unwrap();
                assert_eq!(
                    ExactInt::from(listed.len()),
                    count_tableaux(&alpha, r),
                    "alpha={alpha} r={r}"
                );
                // Deterministic order, no duplicates.
                let mut dedup = listed.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), listed.len());
            }
        }
    }

    #[test]
    fn sign_flips_inherited_from_shape() {
        let t = sample();
        assert_eq!(t.oplus(0).unwrap().sign(), -t.sign());
        assert_eq!(t.plus(1).unwrap().sign(), -t.sign());
        assert_eq!(t.shrink().unwrap().sign(), -t.sign());
    }

    #[test]
    fn json_round_trip() {
        let t = sample();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"shape":[4,5,3],"rows":[[0,2,3],[0,1,2,3],[1,3]],"bound":4}"#
        );
        let back: LabeledTableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        // Deserialization re-validates.
        let bad = r#"{"shape":[2],"rows":[[7]],"bound":4}"#;
        assert!(serde_json::from_str::<LabeledTableau>(bad).is_err());
    }
}
