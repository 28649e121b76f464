//! Partitions and Young-diagram geometry.
//!
//! Cells are addressed matrix-style and 1-indexed: `(row, col)` with row 1 at
//! the top and column 1 at the left.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell `(row, col)` of a Young diagram, 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    /// Panics if either coordinate is zero.
    pub const fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "cell coordinates are 1-indexed");
        Cell { row, col }
    }

    /// Content `col - row`.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// Index `m` of the diagonal hook `H((m, m))` containing this cell.
    pub fn diagonal_index(self) -> usize {
        self.row.min(self.col)
    }

    pub fn transpose(self) -> Self {
        Cell { row: self.col, col: self.row }
    }
}

impl From<Cell> for [usize; 2] {
    fn from(c: Cell) -> Self {
        [c.row, c.col]
    }
}

impl TryFrom<[usize; 2]> for Cell {
    type Error = Error;

    fn try_from([row, col]: [usize; 2]) -> Result<Self> {
        if row == 0 || col == 0 {
            return Err(Error::Parse(format!("cell ({row},{col}) is not 1-indexed")));
        }
        Ok(Cell { row, col })
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Per-cell statistics of a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStats {
    pub hook_length: usize,
    pub content: i64,
    pub arm: usize,
    pub leg: usize,
    /// 0 on the diagonal, the arm below it, the leg above it.
    pub partial_hook: usize,
    pub diagonal_index: usize,
}

/// A partition of `n`, stored as its weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<i64>")]
pub struct Partition {
    parts: Vec<usize>,
    // column lengths; a function of `parts`, so derived equality stays structural
    columns: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a shape from signed parts, stripping trailing zeros.
    pub fn new(parts: &[i64]) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p < 0) {
            return Err(Error::NegativePart { index });
        }
        Self::from_parts(parts.iter().map(|&p| p as usize).collect())
    }

    pub fn from_parts(mut parts: Vec<usize>) -> Result<Self> {
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing { index });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let size = parts
            .iter()
            .try_fold(0usize, |acc, &p| acc.checked_add(p))
            .ok_or(Error::Overflow)?;
        let columns = conjugate_parts(&parts);
        Ok(Partition { parts, columns, size })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), columns: Vec::new(), size: 0 }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number `n` being partitioned, i.e. the cell count.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn num_cols(&self) -> usize {
        self.columns.len()
    }

    /// `λ_i`, zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        row.checked_sub(1).and_then(|r| self.parts.get(r)).copied().unwrap_or(0)
    }

    /// `λ'_j`, zero past the last column.
    pub fn col_len(&self, col: usize) -> usize {
        col.checked_sub(1).and_then(|c| self.columns.get(c)).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    pub(crate) fn check(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::CellOutside(cell))
        }
    }

    pub fn conjugate(&self) -> Partition {
        Partition { parts: self.columns.clone(), columns: self.parts.clone(), size: self.size }
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell { row: r + 1, col: c }))
    }

    /// The hook of `u` in row-major order: `u`, its arm, then its leg.
    pub fn hook_cells(&self, u: Cell) -> Result<Vec<Cell>> {
        self.check(u)?;
        let arm = (u.col..=self.row_len(u.row)).map(|c| Cell { row: u.row, col: c });
        let leg = (u.row + 1..=self.col_len(u.col)).map(|r| Cell { row: r, col: u.col });
        Ok(arm.chain(leg).collect())
    }

    /// Whether `v` lies in the hook of `u`. Both cells must be in the diagram.
    pub fn in_hook(&self, u: Cell, v: Cell) -> bool {
        self.contains(u)
            && self.contains(v)
            && ((v.row == u.row && v.col >= u.col) || (v.col == u.col && v.row >= u.row))
    }

    pub fn cell_stats(&self, u: Cell) -> Result<CellStats> {
        self.check(u)?;
        let arm = self.row_len(u.row) - u.col;
        let leg = self.col_len(u.col) - u.row;
        let partial_hook = match u.row.cmp(&u.col) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => arm,
            std::cmp::Ordering::Less => leg,
        };
        Ok(CellStats {
            hook_length: arm + leg + 1,
            content: u.content(),
            arm,
            leg,
            partial_hook,
            diagonal_index: u.diagonal_index(),
        })
    }

    /// Number of cells `(m, m)` in the diagram.
    pub fn diagonal_len(&self) -> usize {
        self.parts.iter().enumerate().take_while(|(r, &len)| len > *r).count()
    }

    /// The hook of the diagonal cell `(m, m)`.
    pub fn diagonal_hook_cells(&self, m: usize) -> Result<Vec<Cell>> {
        if m == 0 {
            return Err(Error::Parse("diagonal index is 1-based".into()));
        }
        self.hook_cells(Cell { row: m, col: m })
    }

    /// True for shapes `(a, 1, ..., 1)`, i.e. those without the cell `(2, 2)`.
    pub fn is_hook(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyShape);
        }
        Ok(self.row_len(2) < 2)
    }

    /// Corners: cells with nothing to their right and nothing below, top to bottom.
    pub fn outside_cells(&self) -> Result<Vec<Cell>> {
        if self.is_empty() {
            return Err(Error::EmptyShape);
        }
        Ok(self
            .parts
            .iter()
            .enumerate()
            .filter(|(r, &len)| self.row_len(r + 2) < len)
            .map(|(r, &len)| Cell { row: r + 1, col: len })
            .collect())
    }

    /// The shape left after deleting an outside cell.
    pub fn remove_outside_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.contains(cell)
            || cell.col != self.row_len(cell.row)
            || self.row_len(cell.row + 1) >= cell.col
        {
            return Err(Error::NotOutsideCell(cell));
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        Partition::from_parts(parts)
    }
}

fn conjugate_parts(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width).map(|c| parts.iter().take_while(|&&p| p >= c).count()).collect()
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        Partition::new(&parts)
    }
}

/// Comma-separated parts, e.g. `5,5,4,2`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, p) in self.parts.iter().enumerate() {
            if t > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions(n: usize) -> Partitions {
    Partitions { next: Some(if n == 0 { Vec::new() } else { vec![n] }) }
}

/// Iterator returned by [`partitions`].
#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        let columns = conjugate_parts(&current);
        let size = current.iter().sum();
        Some(Partition { parts: current, columns, size })
    }
}

fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let mut next = parts.to_vec();
    let mut rem = 0;
    while next.last() == Some(&1) {
        next.pop();
        rem += 1;
    }
    let last = next.last_mut()?;
    *last -= 1;
    let fill = *last;
    rem += 1;
    while rem > 0 {
        let p = fill.min(rem);
        next.push(p);
        rem -= p;
    }
    Some(next)
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
    fn construction() {
        let p = Partition::new(&[5, 5, 4, 2]).unwrap();
        assert_eq!(p.size(), 16);
        let p = Partition::new(&[3, 0, 0]).unwrap();
        assert_eq!(p.parts(), &[3]);
        assert_eq!(p.size(), 3);
        assert_eq!(p, shape(&[3]));
        assert_eq!(Partition::new(&[2, 3]), Err(Error::NotWeaklyDecreasing { index: 0 }));
        assert_eq!(Partition::new(&[2, -1]), Err(Error::NegativePart { index: 1 }));
        assert_eq!(Partition::new(&[0, 0]).unwrap(), Partition::empty());
    }

    #[test]
    fn conjugates() {
        assert_eq!(shape(&[5, 5, 4, 2]).conjugate(), shape(&[4, 4, 3, 3, 2]));
        assert_eq!(shape(&[1]).conjugate(), shape(&[1]));
        assert_eq!(shape(&[3, 1]).conjugate(), shape(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn cell_listing() {
        assert_eq!(shape(&[2, 1]).cells().collect::<Vec<_>>(), vec![c(1, 1), c(1, 2), c(2, 1)]);
        assert_eq!(Partition::empty().cells().count(), 0);
        assert_eq!(shape(&[5, 5, 4, 2]).cells().count(), 16);
    }

    #[test]
    fn hooks() {
        let p = shape(&[5, 5, 4, 2]);
        assert_eq!(
            p.hook_cells(c(2, 2)).unwrap(),
            vec![c(2, 2), c(2, 3), c(2, 4), c(2, 5), c(3, 2), c(4, 2)]
        );
        assert_eq!(shape(&[1]).hook_cells(c(1, 1)).unwrap(), vec![c(1, 1)]);
        assert_eq!(shape(&[3, 1]).hook_cells(c(1, 2)).unwrap(), vec![c(1, 2), c(1, 3)]);
        assert_eq!(shape(&[3, 1]).hook_cells(c(2, 2)), Err(Error::CellOutside(c(2, 2))));
    }

    #[test]
    fn stats() {
        let p = shape(&[5, 5, 4, 2]);
        let s = p.cell_stats(c(2, 2)).unwrap();
        assert_eq!((s.hook_length, s.content, s.diagonal_index), (6, 0, 2));
        assert_eq!(p.cell_stats(c(2, 5)).unwrap().content, 3);
        let row1: Vec<_> = (1..=5).map(|j| p.cell_stats(c(1, j)).unwrap().hook_length).collect();
        assert_eq!(row1, vec![8, 7, 5, 4, 2]);
        for u in p.cells() {
            assert_eq!(p.cell_stats(u).unwrap().hook_length, p.hook_cells(u).unwrap().len());
        }
        let s = shape(&[2, 2]).cell_stats(c(1, 2)).unwrap();
        assert_eq!((s.partial_hook, s.leg, s.arm), (1, 1, 0));
        assert_eq!(p.cell_stats(c(5, 1)), Err(Error::CellOutside(c(5, 1))));
    }

    #[test]
    fn diagonal_hooks() {
        let p = shape(&[5, 5, 4, 2]);
        assert_eq!(p.diagonal_hook_cells(3).unwrap(), vec![c(3, 3), c(3, 4)]);
        assert_eq!(p.diagonal_len(), 3);
        assert_eq!(shape(&[1]).diagonal_hook_cells(1).unwrap(), vec![c(1, 1)]);
        assert_eq!(shape(&[2, 2]).diagonal_hook_cells(2).unwrap(), vec![c(2, 2)]);
        assert_eq!(p.diagonal_hook_cells(4), Err(Error::CellOutside(c(4, 4))));
    }

    #[test]
    fn enumeration() {
        let four: Vec<_> = partitions(4).map(|p| p.parts().to_vec()).collect();
        assert_eq!(four, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        let zero: Vec<_> = partitions(0).collect();
        assert_eq!(zero, vec![Partition::empty()]);
        assert_eq!(partitions(10).count(), 42);
    }

    #[test]
    fn hook_shapes() {
        assert_eq!(shape(&[3, 1, 1]).is_hook(), Ok(true));
        assert_eq!(shape(&[2, 2]).is_hook(), Ok(false));
        assert_eq!(shape(&[1]).is_hook(), Ok(true));
        assert_eq!(Partition::empty().is_hook(), Err(Error::EmptyShape));
    }

    #[test]
    fn corners() {
        assert_eq!(shape(&[5, 5, 4, 2]).outside_cells().unwrap(), vec![c(2, 5), c(3, 4), c(4, 2)]);
        assert_eq!(shape(&[1]).outside_cells().unwrap(), vec![c(1, 1)]);
        assert_eq!(shape(&[3, 3, 3]).outside_cells().unwrap(), vec![c(3, 3)]);
        assert_eq!(Partition::empty().outside_cells(), Err(Error::EmptyShape));
        assert_eq!(shape(&[3, 3, 3]).remove_outside_cell(c(3, 3)).unwrap(), shape(&[3, 3, 2]));
        assert_eq!(
            shape(&[3, 3, 3]).remove_outside_cell(c(2, 3)),
            Err(Error::NotOutsideCell(c(2, 3)))
        );
    }

    #[test]
    fn text_and_json() {
        let p: Partition = "5, 5,4,2".parse().unwrap();
        assert_eq!(p.to_string(), "5,5,4,2");
        assert_eq!(serde_json::to_string(&p).unwrap(), "[5,5,4,2]");
        let q: Partition = serde_json::from_str("[3,1,0]").unwrap();
        assert_eq!(q, shape(&[3, 1]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert!(serde_json::from_str::<Cell>("[0,1]").is_err());
    }
}
