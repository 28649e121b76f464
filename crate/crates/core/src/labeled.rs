//! The labeled families `H^k(λ)`, `N^k(λ)` and `C^k(λ)`.
//!
//! * an H-element is a starred cell `u` plus `k` labeled cells, each in the hook of `u`;
//! * an N-element is `k` labeled cells anywhere in the diagram;
//! * a C-element is a starred cell `u` plus `k` labeled cells taken from the diagonal
//!   hook of `u`, each strictly left of `u` in its row or strictly above it in its column.
//!
//! Labels are positional: `labels[t]` is the cell carrying label `t + 1`. Several
//! labels may share a cell, and a label may share the star's cell.
//!
//! Their cardinalities are `Σ h(u)^k`, `n^k` and `Σ |c(u)|^k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::count::{self, Count};
use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookElement {
    pub star: Cell,
    pub labels: Vec<Cell>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TupleElement {
    pub labels: Vec<Cell>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContentElement {
    pub star: Cell,
    pub labels: Vec<Cell>,
}

/// The codomain `N ⊔ C` of the hook bijection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TargetElement {
    N(TupleElement),
    C(ContentElement),
}

impl HookElement {
    pub fn new(star: Cell, labels: impl Into<Vec<Cell>>) -> Self {
        HookElement { star, labels: labels.into() }
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }
}

impl TupleElement {
    pub fn new(labels: impl Into<Vec<Cell>>) -> Self {
        TupleElement { labels: labels.into() }
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }
}

impl ContentElement {
    pub fn new(star: Cell, labels: impl Into<Vec<Cell>>) -> Self {
        ContentElement { star, labels: labels.into() }
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }
}

impl TargetElement {
    pub fn k(&self) -> usize {
        match self {
            TargetElement::N(e) => e.k(),
            TargetElement::C(e) => e.k(),
        }
    }

    pub fn validate(&self, shape: &Partition) -> Result<()> {
        match self {
            TargetElement::N(e) => validate_n(shape, e),
            TargetElement::C(e) => validate_c(shape, e),
        }
    }
}

impl From<TupleElement> for TargetElement {
    fn from(e: TupleElement) -> Self {
        TargetElement::N(e)
    }
}

impl From<ContentElement> for TargetElement {
    fn from(e: ContentElement) -> Self {
        TargetElement::C(e)
    }
}

/// Which of the three labeled families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    H,
    N,
    C,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::H => "H",
            Family::N => "N",
            Family::C => "C",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" | "h" => Ok(Family::H),
            "N" | "n" => Ok(Family::N),
            "C" | "c" => Ok(Family::C),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HClass {
    H1,
    H2,
    H3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NClass {
    N1,
    N2,
}

impl HClass {
    pub fn name(self) -> &'static str {
        match self {
            HClass::H1 => "H1",
            HClass::H2 => "H2",
            HClass::H3 => "H3",
        }
    }
}

impl NClass {
    pub fn name(self) -> &'static str {
        match self {
            NClass::N1 => "N1",
            NClass::N2 => "N2",
        }
    }
}

/// Whether `v` may carry a label of a C-element starred at `u`.
pub fn content_admissible(shape: &Partition, u: Cell, v: Cell) -> bool {
    shape.contains(u)
        && shape.contains(v)
        && u.diagonal_index() == v.diagonal_index()
        && ((v.row == u.row && v.col < u.col) || (v.col == u.col && v.row < u.row))
}

pub fn validate_h(shape: &Partition, e: &HookElement) -> Result<()> {
    if !shape.contains(e.star) {
        return Err(Error::StarOutside(e.star));
    }
    if e.labels.is_empty() {
        return Err(Error::NoLabels);
    }
    match e.labels.iter().position(|&v| !shape.in_hook(e.star, v)) {
        Some(t) => Err(Error::LabelNotInHook(t)),
        None => Ok(()),
    }
}

pub fn validate_n(shape: &Partition, e: &TupleElement) -> Result<()> {
    if e.labels.is_empty() {
        return Err(Error::NoLabels);
    }
    match e.labels.iter().find(|&&v| !shape.contains(v)) {
        Some(&v) => Err(Error::CellOutside(v)),
        None => Ok(()),
    }
}

pub fn validate_c(shape: &Partition, e: &ContentElement) -> Result<()> {
    if !shape.contains(e.star) {
        return Err(Error::StarOutside(e.star));
    }
    if e.labels.is_empty() {
        return Err(Error::NoLabels);
    }
    match e.labels.iter().position(|&v| !content_admissible(shape, e.star, v)) {
        Some(t) => Err(Error::LabelNotAdmissible(t)),
        None => Ok(()),
    }
}

/// Partitions `H^k(λ)` into the domains of the three maps.
///
/// `H1`: some label strictly right of the star and some strictly below it, or the star
/// cell carries a label. Otherwise every label is in the star's row (or every label in
/// its column) and the star is unlabeled; then `H3` when star and labels share one
/// diagonal hook, `H2` when they do not.
pub fn classify_h(shape: &Partition, e: &HookElement) -> Result<HClass> {
    validate_h(shape, e).map_err(|err| Error::InvalidElement(err.to_string()))?;
    Ok(classify_h_unchecked(e))
}

pub(crate) fn classify_h_unchecked(e: &HookElement) -> HClass {
    let u = e.star;
    let right = e.labels.iter().any(|v| v.col > u.col);
    let below = e.labels.iter().any(|v| v.row > u.row);
    if (right && below) || e.labels.contains(&u) {
        return HClass::H1;
    }
    let m = u.diagonal_index();
    if e.labels.iter().all(|v| v.diagonal_index() == m) {
        HClass::H3
    } else {
        HClass::H2
    }
}

/// `N2` for a strict north-west/south-east pair (in either label order), `N1` otherwise.
pub fn classify_n2(shape: &Partition, e: &TupleElement) -> Result<NClass> {
    if e.k() != 2 {
        return Err(Error::InvalidElement(format!("N-class needs 2 labels, found {}", e.k())));
    }
    validate_n(shape, e).map_err(|err| Error::InvalidElement(err.to_string()))?;
    Ok(classify_n2_unchecked(e.labels[0], e.labels[1]))
}

pub(crate) fn classify_n2_unchecked(a: Cell, b: Cell) -> NClass {
    let dr = a.row as i64 - b.row as i64;
    let dc = a.col as i64 - b.col as i64;
    if dr * dc > 0 {
        NClass::N2
    } else {
        NClass::N1
    }
}

/// Exact `|H^k|`, `|N^k|` or `|C^k|` from cell statistics.
pub fn set_size<T: Count>(shape: &Partition, family: Family, k: u32) -> Result<T> {
    match family {
        Family::H => count::power_sum(
            shape.cells().map(|u| shape.row_len(u.row) + shape.col_len(u.col) + 1 - u.row - u.col),
            k,
        ),
        Family::N => count::pow(shape.size(), k),
        Family::C => count::power_sum(shape.cells().map(|u| u.content().unsigned_abs() as usize), k),
    }
}

/// Cells that may carry labels for the given star, row-major.
pub fn label_choices(shape: &Partition, family: Family, star: Cell) -> Vec<Cell> {
    match family {
        Family::H => shape.hook_cells(star).unwrap_or_default(),
        Family::N => shape.cells().collect(),
        Family::C => {
            let m = star.diagonal_index();
            if star.col > star.row {
                (m..star.col).map(|c| Cell { row: star.row, col: c }).collect()
            } else {
                (m..star.row).map(|r| Cell { row: r, col: star.col }).collect()
            }
        }
    }
}

/// An element of one of the three families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    H(HookElement),
    N(TupleElement),
    C(ContentElement),
}

impl Element {
    pub fn family(&self) -> Family {
        match self {
            Element::H(_) => Family::H,
            Element::N(_) => Family::N,
            Element::C(_) => Family::C,
        }
    }

    pub fn star(&self) -> Option<Cell> {
        match self {
            Element::H(e) => Some(e.star),
            Element::N(_) => None,
            Element::C(e) => Some(e.star),
        }
    }

    pub fn labels(&self) -> &[Cell] {
        match self {
            Element::H(e) => &e.labels,
            Element::N(e) => &e.labels,
            Element::C(e) => &e.labels,
        }
    }

    pub fn validate(&self, shape: &Partition) -> Result<()> {
        match self {
            Element::H(e) => validate_h(shape, e),
            Element::N(e) => validate_n(shape, e),
            Element::C(e) => validate_c(shape, e),
        }
    }
}

impl From<TargetElement> for Element {
    fn from(t: TargetElement) -> Self {
        match t {
            TargetElement::N(e) => Element::N(e),
            TargetElement::C(e) => Element::C(e),
        }
    }
}

impl From<HookElement> for Element {
    fn from(e: HookElement) -> Self {
        Element::H(e)
    }
}

/// Streams every element of a family in canonical order: stars row-major, then
/// label tuples lexicographically.
pub fn enumerate_set(shape: &Partition, family: Family, k: usize) -> ElementStream<'_> {
    let stars: Vec<Option<Cell>> = match family {
        Family::N if shape.is_empty() => Vec::new(),
        Family::N => vec![None],
        _ => shape.cells().map(Some).collect(),
    };
    ElementStream { shape, family, k, stars, star_index: 0, choices: Vec::new(), odometer: None }
}

pub fn enumerate_h(shape: &Partition, k: usize) -> impl Iterator<Item = HookElement> + '_ {
    enumerate_set(shape, Family::H, k).map(|e| match e {
        Element::H(e) => e,
        _ => unreachable!(),
    })
}

pub fn enumerate_n(shape: &Partition, k: usize) -> impl Iterator<Item = TupleElement> + '_ {
    enumerate_set(shape, Family::N, k).map(|e| match e {
        Element::N(e) => e,
        _ => unreachable!(),
    })
}

pub fn enumerate_c(shape: &Partition, k: usize) -> impl Iterator<Item = ContentElement> + '_ {
    enumerate_set(shape, Family::C, k).map(|e| match e {
        Element::C(e) => e,
        _ => unreachable!(),
    })
}

/// Every element of `N^k ⊔ C^k`, N-side first.
pub fn enumerate_targets(shape: &Partition, k: usize) -> impl Iterator<Item = TargetElement> + '_ {
    enumerate_n(shape, k)
        .map(TargetElement::N)
        .chain(enumerate_c(shape, k).map(TargetElement::C))
}

/// Iterator returned by [`enumerate_set`].
pub struct ElementStream<'a> {
    shape: &'a Partition,
    family: Family,
    k: usize,
    stars: Vec<Option<Cell>>,
    star_index: usize,
    choices: Vec<Cell>,
    // indices into `choices`, one per label; `None` before the first tuple of a star
    odometer: Option<Vec<usize>>,
}

impl ElementStream<'_> {
    fn advance(&mut self) -> bool {
        let Some(digits) = self.odometer.as_mut() else {
            return false;
        };
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < self.choices.len() {
                return true;
            }
            *d = 0;
        }
        false
    }
}

impl Iterator for ElementStream<'_> {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.k == 0 {
            return None;
        }
        loop {
            if !self.advance() {
                let star = *self.stars.get(self.star_index)?;
                self.star_index += 1;
                self.choices = match star {
                    Some(u) => label_choices(self.shape, self.family, u),
                    None => self.shape.cells().collect(),
                };
                if self.choices.is_empty() {
                    self.odometer = None;
                    continue;
                }
                self.odometer = Some(vec![0; self.k]);
            }
            let digits = self.odometer.as_ref()?;
            let labels: Vec<Cell> = digits.iter().map(|&d| self.choices[d]).collect();
            let star = self.stars[self.star_index - 1];
            return Some(match (self.family, star) {
                (Family::H, Some(star)) => Element::H(HookElement { star, labels }),
                (Family::C, Some(star)) => Element::C(ContentElement { star, labels }),
                _ => Element::N(TupleElement { labels }),
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[usize]) -> Partition {
        Partition::from_parts(parts.to_vec()).unwrap()
    }

    fn c(row: usize, col: usize) -> Cell {
        Cell::new(row, col)
    }

    #[test]
    fn validate_hook_elements() {
        let p = shape(&[5, 5, 4, 2]);
        assert_eq!(validate_h(&p, &HookElement::new(c(1, 3), [c(1, 4), c(3, 3)])), Ok(()));
        assert_eq!(validate_h(&p, &HookElement::new(c(1, 3), [c(1, 3), c(1, 3)])), Ok(()));
        assert_eq!(
            validate_h(&p, &HookElement::new(c(1, 3), [c(2, 2), c(1, 4)])),
            Err(Error::LabelNotInHook(0))
        );
        assert_eq!(
            validate_h(&p, &HookElement::new(c(5, 1), [c(1, 1)])),
            Err(Error::StarOutside(c(5, 1)))
        );
        assert_eq!(validate_h(&p, &HookElement::new(c(1, 1), [])), Err(Error::NoLabels));
    }

    #[test]
    fn validate_content_elements() {
        let p = shape(&[5, 5, 4, 2]);
        assert_eq!(validate_c(&p, &ContentElement::new(c(2, 5), [c(2, 4), c(2, 2)])), Ok(()));
        assert_eq!(
            validate_c(&p, &ContentElement::new(c(3, 3), [c(3, 3)])),
            Err(Error::LabelNotAdmissible(0))
        );
        assert_eq!(
            validate_c(&p, &ContentElement::new(c(2, 5), [c(1, 5)])),
            Err(Error::LabelNotAdmissible(0))
        );
        assert_eq!(
            validate_c(&p, &ContentElement::new(c(4, 2), [c(2, 2), c(1, 2)])),
            Err(Error::LabelNotAdmissible(1))
        );
    }

    #[test]
    fn enumeration_counts() {
        let p = shape(&[2, 1]);
        assert_eq!(enumerate_set(&p, Family::H, 2).count(), 11);
        assert_eq!(enumerate_set(&p, Family::N, 2).count(), 9);
        assert_eq!(enumerate_set(&p, Family::C, 2).count(), 2);
        let empty = Partition::empty();
        for family in [Family::H, Family::N, Family::C] {
            assert_eq!(enumerate_set(&empty, family, 2).count(), 0);
        }
        assert_eq!(enumerate_set(&p, Family::H, 0).count(), 0);
    }

    #[test]
    fn enumeration_order() {
        let p = shape(&[2, 1]);
        let h: Vec<_> = enumerate_h(&p, 1).collect();
        assert_eq!(
            h,
            vec![
                HookElement::new(c(1, 1), [c(1, 1)]),
                HookElement::new(c(1, 1), [c(1, 2)]),
                HookElement::new(c(1, 1), [c(2, 1)]),
                HookElement::new(c(1, 2), [c(1, 2)]),
                HookElement::new(c(2, 1), [c(2, 1)]),
            ]
        );
        let n: Vec<_> = enumerate_n(&p, 2).take(4).collect();
        assert_eq!(n[0], TupleElement::new([c(1, 1), c(1, 1)]));
        assert_eq!(n[3], TupleElement::new([c(1, 2), c(1, 1)]));
        let cs: Vec<_> = enumerate_c(&p, 2).collect();
        assert_eq!(
            cs,
            vec![
                ContentElement::new(c(1, 2), [c(1, 1), c(1, 1)]),
                ContentElement::new(c(2, 1), [c(1, 1), c(1, 1)]),
            ]
        );
    }

    #[test]
    fn sizes() {
        let p = shape(&[5, 5, 4, 2]);
        let h: u64 = set_size(&p, Family::H, 2).unwrap();
        let n: u64 = set_size(&p, Family::N, 2).unwrap();
        let cc: u64 = set_size(&p, Family::C, 2).unwrap();
        assert_eq!(n, 256);
        assert_eq!(h, n + cc);
        let one = shape(&[1]);
        assert_eq!(set_size::<u64>(&one, Family::H, 2), Ok(1));
        assert_eq!(set_size::<u64>(&one, Family::N, 2), Ok(1));
        assert_eq!(set_size::<u64>(&one, Family::C, 2), Ok(0));
        let sq = shape(&[2, 2]);
        assert_eq!(set_size::<u64>(&sq, Family::H, 3), Ok(44));
        assert_eq!(set_size::<u64>(&sq, Family::N, 3), Ok(64));
        assert_eq!(set_size::<u64>(&sq, Family::C, 3), Ok(2));
        assert_eq!(set_size::<u8>(&shape(&[20]), Family::H, 2), Err(Error::Overflow));
    }

    #[test]
    fn classes() {
        let p = shape(&[4, 4, 3, 2]);
        let cl = |star, labels: [Cell; 2]| classify_h(&p, &HookElement::new(star, labels)).unwrap();
        assert_eq!(cl(c(1, 3), [c(1, 4), c(3, 3)]), HClass::H1);
        assert_eq!(cl(c(3, 1), [c(3, 2), c(3, 3)]), HClass::H2);
        assert_eq!(cl(c(1, 2), [c(1, 2), c(3, 2)]), HClass::H1);
        let q = shape(&[3, 3, 2, 1, 1]);
        assert_eq!(classify_h(&q, &HookElement::new(c(2, 1), [c(5, 1), c(4, 1)])), Ok(HClass::H3));
        assert!(matches!(
            classify_h(&q, &HookElement::new(c(2, 1), [c(3, 2), c(4, 1)])),
            Err(Error::InvalidElement(_))
        ));

        let big = shape(&[4, 4, 4, 4]);
        let n2 = |a, b| classify_n2(&big, &TupleElement::new([a, b])).unwrap();
        assert_eq!(n2(c(1, 4), c(3, 3)), NClass::N1);
        assert_eq!(n2(c(2, 2), c(2, 2)), NClass::N1);
        assert_eq!(n2(c(1, 2), c(3, 3)), NClass::N2);
        assert_eq!(n2(c(3, 3), c(1, 2)), NClass::N2);
        assert_eq!(n2(c(1, 2), c(1, 3)), NClass::N1);
        assert!(classify_n2(&big, &TupleElement::new([c(1, 1)])).is_err());
    }
}
