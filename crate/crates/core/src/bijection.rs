//! The bijection `Φ: H(λ) → N(λ) ⊔ C(λ)` for two labels.
//!
//! `Φ` is glued from three maps on the classes of [`classify_h`]:
//!
//! * `φ₁: H1 → N1` deletes the star;
//! * `φ₂: H2 → N2` moves one label off the star's row (or column) to the
//!   north-west corner of a thick rectangle and deletes the star;
//! * `φ₃: H3 → C` exchanges the star with the farthest labeled cell.
//!
//! [`Maps`] carries an optional [`Mutant`], a deliberately corrupted case branch
//! used to check that the verification campaign is not vacuous.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::labeled::{
    classify_h_unchecked, classify_n2_unchecked, enumerate_h, enumerate_targets, validate_c,
    validate_h, validate_n, ContentElement, HClass, HookElement, NClass, TargetElement,
    TupleElement,
};
use crate::partition::{Cell, Partition};

/// A single corrupted case branch of `φ₁`, `φ₂`, `φ₃` or their inverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutant {
    /// `φ₁`, labels in different rows and columns: labels come out swapped.
    Phi1Spread,
    /// `φ₁`, star cell labeled: labels come out swapped.
    Phi1StarLabeled,
    /// `φ₂`, labels in two cells of the star's row: moved label is transposed.
    Phi2Row,
    /// `φ₂`, labels in two cells of the star's column: moved label is transposed.
    Phi2Column,
    /// `φ₂`, both labels in one cell of the star's row: label 1 moves instead of 2.
    Phi2RowStacked,
    /// `φ₂`, both labels in one cell of the star's column: label 2 moves instead of 1.
    Phi2ColumnStacked,
    /// `φ₃`, row case: star swaps with the nearest labeled cell.
    Phi3Row,
    /// `φ₃`, column case: star swaps with the nearest labeled cell.
    Phi3Column,
    /// `φ₁⁻¹`, anti-diagonal pair: labels come out swapped.
    Phi1InvAnti,
    /// `φ₁⁻¹`, same row: star on the rightmost labeled cell.
    Phi1InvRow,
    /// `φ₁⁻¹`, same column: star on the lowest labeled cell.
    Phi1InvColumn,
    /// `φ₁⁻¹`, both labels on one cell: star on `(1,1)`.
    Phi1InvSame,
    /// `φ₂⁻¹`, north-west cell above the diagonal: labels come out swapped.
    Phi2InvAbove,
    /// `φ₂⁻¹`, north-west cell below the diagonal: labels come out swapped.
    Phi2InvBelow,
    /// `φ₂⁻¹`, label 1 on the diagonal: uses the label-2 rule.
    Phi2InvDiagonalOne,
    /// `φ₂⁻¹`, label 2 on the diagonal: uses the label-1 rule.
    Phi2InvDiagonalTwo,
    /// `φ₃⁻¹`, row case: star swaps with the labeled cell nearest to it.
    Phi3InvRow,
    /// `φ₃⁻¹`, column case: star swaps with the labeled cell nearest to it.
    Phi3InvColumn,
}

impl Mutant {
    pub const ALL: [Mutant; 18] = [
        Mutant::Phi1Spread,
        Mutant::Phi1StarLabeled,
        Mutant::Phi2Row,
        Mutant::Phi2Column,
        Mutant::Phi2RowStacked,
        Mutant::Phi2ColumnStacked,
        Mutant::Phi3Row,
        Mutant::Phi3Column,
        Mutant::Phi1InvAnti,
        Mutant::Phi1InvRow,
        Mutant::Phi1InvColumn,
        Mutant::Phi1InvSame,
        Mutant::Phi2InvAbove,
        Mutant::Phi2InvBelow,
        Mutant::Phi2InvDiagonalOne,
        Mutant::Phi2InvDiagonalTwo,
        Mutant::Phi3InvRow,
        Mutant::Phi3InvColumn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutant::Phi1Spread => "phi1-spread",
            Mutant::Phi1StarLabeled => "phi1-star-labeled",
            Mutant::Phi2Row => "phi2-row",
            Mutant::Phi2Column => "phi2-column",
            Mutant::Phi2RowStacked => "phi2-row-stacked",
            Mutant::Phi2ColumnStacked => "phi2-column-stacked",
            Mutant::Phi3Row => "phi3-row",
            Mutant::Phi3Column => "phi3-column",
            Mutant::Phi1InvAnti => "phi1-inv-anti",
            Mutant::Phi1InvRow => "phi1-inv-row",
            Mutant::Phi1InvColumn => "phi1-inv-column",
            Mutant::Phi1InvSame => "phi1-inv-same",
            Mutant::Phi2InvAbove => "phi2-inv-above",
            Mutant::Phi2InvBelow => "phi2-inv-below",
            Mutant::Phi2InvDiagonalOne => "phi2-inv-diagonal-one",
            Mutant::Phi2InvDiagonalTwo => "phi2-inv-diagonal-two",
            Mutant::Phi3InvRow => "phi3-inv-row",
            Mutant::Phi3InvColumn => "phi3-inv-column",
        }
    }
}

impl fmt::Display for Mutant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Mutant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mutant::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown mutant {s:?}")))
    }
}

/// The maps of the bijection, optionally with one corrupted branch.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Maps {
    mutant: Option<Mutant>,
}

fn wrong_class(expected: &'static str, found: &'static str) -> Error {
    Error::WrongClass { expected, found }
}

fn require_two(k: usize) -> Result<()> {
    if k == 2 {
        Ok(())
    } else {
        Err(Error::WrongLabelCount { expected: 2, found: k })
    }
}

fn inside(shape: &Partition, cell: Cell) -> Result<Cell> {
    if shape.contains(cell) {
        Ok(cell)
    } else {
        Err(Error::TargetOutside(cell))
    }
}

fn invalid(err: Error) -> Error {
    match err {
        Error::InvalidElement(_) => err,
        other => Error::InvalidElement(other.to_string()),
    }
}

impl Maps {
    pub const FAITHFUL: Maps = Maps { mutant: None };

    pub fn with_mutant(mutant: Option<Mutant>) -> Self {
        Maps { mutant }
    }

    pub fn mutant(&self) -> Option<Mutant> {
        self.mutant
    }

    fn hit(&self, m: Mutant) -> bool {
        self.mutant == Some(m)
    }

    fn checked_h(&self, shape: &Partition, e: &HookElement) -> Result<HClass> {
        require_two(e.k())?;
        validate_h(shape, e)?;
        Ok(classify_h_unchecked(e))
    }

    fn checked_n(&self, shape: &Partition, e: &TupleElement) -> Result<NClass> {
        require_two(e.k())?;
        validate_n(shape, e)?;
        Ok(classify_n2_unchecked(e.labels[0], e.labels[1]))
    }

    /// `φ₁`: delete the star.
    pub fn phi1(&self, shape: &Partition, e: &HookElement) -> Result<TupleElement> {
        let class = self.checked_h(shape, e)?;
        if class != HClass::H1 {
            return Err(wrong_class("H1", class.name()));
        }
        let mut labels = e.labels.clone();
        let branch = if labels.contains(&e.star) {
            Mutant::Phi1StarLabeled
        } else {
            Mutant::Phi1Spread
        };
        if self.hit(branch) {
            labels.swap(0, 1);
        }
        Ok(TupleElement { labels })
    }

    /// `φ₁⁻¹`: put the star back on the corner cell of the pair.
    pub fn phi1_inv(&self, shape: &Partition, e: &TupleElement) -> Result<HookElement> {
        let class = self.checked_n(shape, e)?;
        if class != NClass::N1 {
            return Err(wrong_class("N1", class.name()));
        }
        let (a, b) = (e.labels[0], e.labels[1]);
        let star = if a == b {
            if self.hit(Mutant::Phi1InvSame) {
                Cell::new(1, 1)
            } else {
                a
            }
        } else if a.row == b.row {
            let col = if self.hit(Mutant::Phi1InvRow) {
                a.col.max(b.col)
            } else {
                a.col.min(b.col)
            };
            Cell { row: a.row, col }
        } else if a.col == b.col {
            let row = if self.hit(Mutant::Phi1InvColumn) {
                a.row.max(b.row)
            } else {
                a.row.min(b.row)
            };
            Cell { row, col: a.col }
        } else {
            Cell { row: a.row.min(b.row), col: a.col.min(b.col) }
        };
        let mut labels = e.labels.clone();
        if a != b && a.row != b.row && a.col != b.col && self.hit(Mutant::Phi1InvAnti) {
            labels.swap(0, 1);
        }
        Ok(HookElement { star, labels })
    }

    /// `φ₂`: the south-east label of the result sits where the farthest label
    /// of the input was.
    pub fn phi2(&self, shape: &Partition, e: &HookElement) -> Result<TupleElement> {
        let class = self.checked_h(shape, e)?;
        if class != HClass::H2 {
            return Err(wrong_class("H2", class.name()));
        }
        let star = e.star;
        let (a, b) = (e.labels[0], e.labels[1]);
        let in_row = a.row == star.row && b.row == star.row;
        let mut labels = e.labels.clone();
        if a == b {
            let corner = inside(shape, Cell { row: corner_index(star, in_row), col: corner_index(star, in_row) })?;
            // row: label 2 moves to the diagonal; column: label 1 does
            let mut moved = if in_row { 1 } else { 0 };
            let mutated = if in_row {
                self.hit(Mutant::Phi2RowStacked)
            } else {
                self.hit(Mutant::Phi2ColumnStacked)
            };
            if mutated {
                moved = 1 - moved;
            }
            labels[moved] = corner;
        } else if in_row {
            // star (i,k), labels at (i,l) and (i,j) with k < l < j: (i,l) -> (k,l)
            let near = if a.col < b.col { 0 } else { 1 };
            let l = labels[near].col;
            let k = star.col;
            labels[near] = if self.hit(Mutant::Phi2Row) {
                Cell { row: l, col: k }
            } else {
                inside(shape, Cell { row: k, col: l })?
            };
        } else {
            // star (k,j), labels at (l,j) and (i,j) with k < l < i: (l,j) -> (l,k)
            let near = if a.row < b.row { 0 } else { 1 };
            let l = labels[near].row;
            let k = star.row;
            labels[near] = if self.hit(Mutant::Phi2Column) {
                Cell { row: k, col: l }
            } else {
                inside(shape, Cell { row: l, col: k })?
            };
        }
        Ok(TupleElement { labels })
    }

    /// `φ₂⁻¹`, by the position of the north-west cell relative to the diagonal.
    pub fn phi2_inv(&self, shape: &Partition, e: &TupleElement) -> Result<HookElement> {
        let class = self.checked_n(shape, e)?;
        if class != NClass::N2 {
            return Err(wrong_class("N2", class.name()));
        }
        let nw_index = if e.labels[0].row < e.labels[1].row { 0 } else { 1 };
        let nw = e.labels[nw_index];
        let se = e.labels[1 - nw_index];
        let (a, b) = (nw.row, nw.col);
        let mut labels = e.labels.clone();
        let star = match a.cmp(&b) {
            std::cmp::Ordering::Less => {
                labels[nw_index] = inside(shape, Cell { row: se.row, col: b })?;
                if self.hit(Mutant::Phi2InvAbove) {
                    labels.swap(0, 1);
                }
                Cell { row: se.row, col: a }
            }
            std::cmp::Ordering::Greater => {
                labels[nw_index] = inside(shape, Cell { row: a, col: se.col })?;
                if self.hit(Mutant::Phi2InvBelow) {
                    labels.swap(0, 1);
                }
                Cell { row: b, col: se.col }
            }
            std::cmp::Ordering::Equal => {
                labels[nw_index] = se;
                let mut label_one = nw_index == 0;
                if (label_one && self.hit(Mutant::Phi2InvDiagonalOne))
                    || (!label_one && self.hit(Mutant::Phi2InvDiagonalTwo))
                {
                    label_one = !label_one;
                }
                if label_one {
                    Cell { row: a, col: se.col }
                } else {
                    Cell { row: se.row, col: a }
                }
            }
        };
        Ok(HookElement { star: inside(shape, star)?, labels })
    }

    /// `φ₃`: exchange the contents of the star cell and of the farthest labeled cell.
    pub fn phi3(&self, shape: &Partition, e: &HookElement) -> Result<ContentElement> {
        let class = self.checked_h(shape, e)?;
        if class != HClass::H3 {
            return Err(wrong_class("H3", class.name()));
        }
        let star = e.star;
        let in_row = e.labels.iter().all(|v| v.row == star.row);
        let key = |v: &Cell| if in_row { v.col } else { v.row };
        let far = if (in_row && self.hit(Mutant::Phi3Row)) || (!in_row && self.hit(Mutant::Phi3Column)) {
            *e.labels.iter().min_by_key(|v| key(v)).expect("two labels")
        } else {
            *e.labels.iter().max_by_key(|v| key(v)).expect("two labels")
        };
        Ok(ContentElement { star: far, labels: swap_cells(&e.labels, far, star) })
    }

    /// `φ₃⁻¹`: exchange the star with the labeled cell nearest the diagonal.
    pub fn phi3_inv(&self, shape: &Partition, e: &ContentElement) -> Result<HookElement> {
        require_two(e.k())?;
        validate_c(shape, e).map_err(invalid)?;
        let star = e.star;
        let in_row = e.labels.iter().all(|v| v.row == star.row);
        let key = |v: &Cell| if in_row { v.col } else { v.row };
        let near = if (in_row && self.hit(Mutant::Phi3InvRow)) || (!in_row && self.hit(Mutant::Phi3InvColumn)) {
            *e.labels.iter().max_by_key(|v| key(v)).expect("two labels")
        } else {
            *e.labels.iter().min_by_key(|v| key(v)).expect("two labels")
        };
        Ok(HookElement { star: near, labels: swap_cells(&e.labels, near, star) })
    }

    /// `Φ`, dispatching on the class of `e`.
    pub fn phi(&self, shape: &Partition, e: &HookElement) -> Result<TargetElement> {
        let class = self.checked_h(shape, e).map_err(invalid)?;
        let target = match class {
            HClass::H1 => TargetElement::N(self.phi1(shape, e)?),
            HClass::H2 => TargetElement::N(self.phi2(shape, e)?),
            HClass::H3 => TargetElement::C(self.phi3(shape, e)?),
        };
        Ok(target)
    }

    /// `Φ⁻¹`, dispatching on the side and, for N, on the class.
    pub fn phi_inv(&self, shape: &Partition, t: &TargetElement) -> Result<HookElement> {
        match t {
            TargetElement::N(e) => match self.checked_n(shape, e).map_err(invalid)? {
                NClass::N1 => self.phi1_inv(shape, e),
                NClass::N2 => self.phi2_inv(shape, e),
            },
            TargetElement::C(e) => self.phi3_inv(shape, e),
        }
    }
}

// Index of the diagonal cell (m,m) receiving a label in the stacked case of φ₂:
// the star's column for a row element, the star's row for a column element.
fn corner_index(star: Cell, in_row: bool) -> usize {
    if in_row {
        star.col
    } else {
        star.row
    }
}

fn swap_cells(labels: &[Cell], x: Cell, y: Cell) -> Vec<Cell> {
    labels
        .iter()
        .map(|&v| {
            if v == x {
                y
            } else if v == y {
                x
            } else {
                v
            }
        })
        .collect()
}

pub fn phi1(shape: &Partition, e: &HookElement) -> Result<TupleElement> {
    Maps::FAITHFUL.phi1(shape, e)
}

pub fn phi1_inv(shape: &Partition, e: &TupleElement) -> Result<HookElement> {
    Maps::FAITHFUL.phi1_inv(shape, e)
}

pub fn phi2(shape: &Partition, e: &HookElement) -> Result<TupleElement> {
    Maps::FAITHFUL.phi2(shape, e)
}

pub fn phi2_inv(shape: &Partition, e: &TupleElement) -> Result<HookElement> {
    Maps::FAITHFUL.phi2_inv(shape, e)
}

pub fn phi3(shape: &Partition, e: &HookElement) -> Result<ContentElement> {
    Maps::FAITHFUL.phi3(shape, e)
}

pub fn phi3_inv(shape: &Partition, e: &ContentElement) -> Result<HookElement> {
    Maps::FAITHFUL.phi3_inv(shape, e)
}

pub fn phi(shape: &Partition, e: &HookElement) -> Result<TargetElement> {
    Maps::FAITHFUL.phi(shape, e)
}

pub fn phi_inv(shape: &Partition, t: &TargetElement) -> Result<HookElement> {
    Maps::FAITHFUL.phi_inv(shape, t)
}

/// Outcome of checking that `Φ` restricts along the deletion of an outside cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionReport {
    pub outside: Cell,
    /// `Φ_λ` maps `H(μ)` onto `N(μ) ∪ C(μ)` and `H(λ)∖H(μ)` onto the complement.
    pub holds: bool,
    pub removed_h: usize,
    pub removed_n: usize,
    pub removed_c: usize,
    /// Elements of `H(μ)` on which `Φ_λ` and `Φ_μ` agree. Reported, not required.
    pub elementwise_agreements: usize,
    pub elementwise_total: usize,
}

/// Checks the set-level restriction of `Φ` to `λ` minus the outside cell `outside`.
pub fn restriction_check(shape: &Partition, outside: Cell) -> Result<RestrictionReport> {
    Maps::FAITHFUL.restriction_check(shape, outside)
}

impl Maps {
    pub fn restriction_check(&self, shape: &Partition, outside: Cell) -> Result<RestrictionReport> {
        let smaller = shape.remove_outside_cell(outside)?;
        let mut holds = true;
        let mut agreements = 0;
        let mut inner_total = 0;
        let mut inner_image = HashSet::new();
        let mut outer_image = HashSet::new();
        for e in enumerate_h(shape, 2) {
            let Ok(t) = self.phi(shape, &e) else {
                holds = false;
                continue;
            };
            if validate_h(&smaller, &e).is_ok() {
                inner_total += 1;
                if self.phi(&smaller, &e).as_ref() == Ok(&t) {
                    agreements += 1;
                }
                holds &= inner_image.insert(t);
            } else {
                holds &= outer_image.insert(t);
            }
        }
        let removed_h = outer_image.len();
        let mut removed_n = 0;
        let mut removed_c = 0;
        let mut inner_targets = 0;
        for t in enumerate_targets(shape, 2) {
            if t.validate(&smaller).is_ok() {
                inner_targets += 1;
                holds &= inner_image.contains(&t);
            } else {
                match t {
                    TargetElement::N(_) => removed_n += 1,
                    TargetElement::C(_) => removed_c += 1,
                }
                holds &= outer_image.contains(&t);
            }
        }
        holds &= inner_image.len() == inner_targets && outer_image.len() == removed_n + removed_c;
        Ok(RestrictionReport {
            outside,
            holds,
            removed_h,
            removed_n,
            removed_c,
            elementwise_agreements: agreements,
            elementwise_total: inner_total,
        })
    }
}
