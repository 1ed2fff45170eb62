//! Ferrers diagrams encoded by their south-east border word.
//!
//! A diagram of size `n` is a word over `{S, W}` of length `n`. The step at
//! position `k` (1-based, read from north-east to south-west) carries label
//! `k`: an `S` step labels a row, a `W` step labels a column. Cell `(i, j)`
//! exists exactly when `i` is a row label, `j` is a column label and `i < j`.
//! Rows are drawn top to bottom in increasing label order, columns left to
//! right in decreasing label order, so "above" means a smaller row label and
//! "to the left" means a larger column label.
//!
//! Empty rows and columns are allowed here; the families built on top decide
//! whether they may occur.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("invalid character {ch:?} at position {position} of border word (expected S or W)")]
    InvalidCharacter { ch: char, position: usize },
}

/// One unit step of the south-east border.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// South step; its label is a row label.
    S,
    /// West step; its label is a column label.
    W,
}

impl Step {
    pub fn swapped(self) -> Step {
        match self {
            Step::S => Step::W,
            Step::W => Step::S,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::S => 'S',
            Step::W => 'W',
        }
    }
}

/// A cell addressed by labels. Row labels are negative only for the added
/// rows of a [`ShiftedDiagram`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub const fn new(row: i32, col: i32) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl From<(i32, i32)> for Cell {
    fn from((row, col): (i32, i32)) -> Self {
        Cell { row, col }
    }
}

/// Common view over ordinary and shifted diagrams.
pub trait Shape {
    /// Number of border steps.
    fn size(&self) -> usize;

    fn contains(&self, cell: Cell) -> bool;

    /// Row labels, top to bottom.
    fn rows(&self) -> Vec<i32>;

    /// Column labels, left to right.
    fn cols(&self) -> Vec<i32>;

    /// Corner cells in increasing label order.
    fn corners(&self) -> Vec<Cell>;

    /// All cells in reading order: rows top to bottom, each row left to right.
    fn cells(&self) -> Vec<Cell> {
        let cols = self.cols();
        let mut out = Vec::new();
        for row in self.rows() {
            for &col in &cols {
                let cell = Cell::new(row, col);
                if self.contains(cell) {
                    out.push(cell);
                }
            }
        }
        out
    }

    /// Cells of `row`, left to right.
    fn row_cells(&self, row: i32) -> Vec<Cell> {
        self.cols()
            .into_iter()
            .map(|col| Cell::new(row, col))
            .filter(|&c| self.contains(c))
            .collect()
    }

    /// Cells of `col`, top to bottom.
    fn col_cells(&self, col: i32) -> Vec<Cell> {
        self.rows()
            .into_iter()
            .map(|row| Cell::new(row, col))
            .filter(|&c| self.contains(c))
            .collect()
    }
}

/// The border word; the single source of truth for a diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BorderWord(Vec<Step>);

impl BorderWord {
    pub fn new(steps: Vec<Step>) -> Self {
        BorderWord(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Step carrying `label` (1-based).
    pub fn step(&self, label: i32) -> Option<Step> {
        if label < 1 {
            return None;
        }
        self.0.get(label as usize - 1).copied()
    }
}

impl FromStr for BorderWord {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(position, ch)| match ch {
                'S' => Ok(Step::S),
                'W' => Ok(Step::W),
                _ => Err(DiagramError::InvalidCharacter {
                    ch,
                    position: position + 1,
                }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BorderWord)
    }
}

impl fmt::Display for BorderWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.0 {
            write!(f, "{}", step.as_char())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FerrersDiagram {
    word: BorderWord,
}

impl FerrersDiagram {
    pub fn new(word: BorderWord) -> Self {
        FerrersDiagram { word }
    }

    pub fn from_steps(steps: Vec<Step>) -> Self {
        FerrersDiagram::new(BorderWord::new(steps))
    }

    pub fn parse(word: &str) -> Result<Self, DiagramError> {
        word.parse().map(FerrersDiagram::new)
    }

    pub fn empty() -> Self {
        FerrersDiagram::default()
    }

    pub fn word(&self) -> &BorderWord {
        &self.word
    }

    pub fn steps(&self) -> &[Step] {
        self.word.steps()
    }

    pub fn is_row(&self, label: i32) -> bool {
        self.word.step(label) == Some(Step::S)
    }

    pub fn is_col(&self, label: i32) -> bool {
        self.word.step(label) == Some(Step::W)
    }

    /// Row labels in increasing order.
    pub fn row_labels(&self) -> Vec<i32> {
        self.labels_of(Step::S)
    }

    /// Column labels in increasing order (right to left).
    pub fn col_labels(&self) -> Vec<i32> {
        self.labels_of(Step::W)
    }

    fn labels_of(&self, kind: Step) -> Vec<i32> {
        self.steps()
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == kind)
            .map(|(k, _)| k as i32 + 1)
            .collect()
    }

    /// Number of cells in row `i`.
    pub fn row_len(&self, row: i32) -> usize {
        if !self.is_row(row) {
            return 0;
        }
        self.steps()[row as usize..]
            .iter()
            .filter(|&&s| s == Step::W)
            .count()
    }

    /// Number of cells in column `j`.
    pub fn col_len(&self, col: i32) -> usize {
        if !self.is_col(col) {
            return 0;
        }
        self.steps()[..col as usize - 1]
            .iter()
            .filter(|&&s| s == Step::S)
            .count()
    }

    pub fn cell_count(&self) -> usize {
        let mut rows_seen = 0;
        let mut total = 0;
        for step in self.steps() {
            match step {
                Step::S => rows_seen += 1,
                Step::W => total += rows_seen,
            }
        }
        total
    }

    /// True when the word starts with `S` and ends with `W` (or is empty),
    /// i.e. no row and no column is empty.
    pub fn has_no_empty_lines(&self) -> bool {
        matches!(
            (self.steps().first(), self.steps().last()),
            (None, None) | (Some(Step::S), Some(Step::W))
        )
    }

    /// Reflection in the main diagonal.
    pub fn transpose(&self) -> FerrersDiagram {
        FerrersDiagram::from_steps(self.steps().iter().rev().map(|s| s.swapped()).collect())
    }

    /// Image of a cell under [`FerrersDiagram::transpose`].
    pub fn transpose_cell(&self, cell: Cell) -> Cell {
        let m = self.size() as i32;
        Cell::new(m + 1 - cell.col, m + 1 - cell.row)
    }

    pub fn is_self_conjugate(&self) -> bool {
        let steps = self.steps();
        let n = steps.len();
        (0..n).all(|k| steps[k] == steps[n - 1 - k].swapped())
    }

    pub fn shift(&self) -> ShiftedDiagram {
        ShiftedDiagram::new(self.clone())
    }

    /// Zero-based (row index from the top, column index from the left).
    pub fn to_geometric(&self, cell: Cell) -> Option<(usize, usize)> {
        if !self.contains(cell) {
            return None;
        }
        let r = self.row_labels().iter().filter(|&&i| i < cell.row).count();
        let c = self.col_labels().iter().filter(|&&j| j > cell.col).count();
        Some((r, c))
    }

    pub fn from_geometric(&self, row_index: usize, col_index: usize) -> Option<Cell> {
        let rows = self.row_labels();
        let mut cols = self.col_labels();
        cols.reverse();
        let cell = Cell::new(*rows.get(row_index)?, *cols.get(col_index)?);
        self.contains(cell).then_some(cell)
    }

    /// Cells that are last in their row and last in their column.
    pub fn extremal_cells(&self) -> Vec<Cell> {
        self.cells()
            .into_iter()
            .filter(|c| {
                let right = self.row_cells(c.row).last().copied();
                let bottom = self.col_cells(c.col).last().copied();
                right == Some(*c) && bottom == Some(*c)
            })
            .collect()
    }
}

impl Shape for FerrersDiagram {
    fn size(&self) -> usize {
        self.word.len()
    }

    fn contains(&self, cell: Cell) -> bool {
        cell.row < cell.col && self.is_row(cell.row) && self.is_col(cell.col)
    }

    fn rows(&self) -> Vec<i32> {
        self.row_labels()
    }

    fn cols(&self) -> Vec<i32> {
        let mut cols = self.col_labels();
        cols.reverse();
        cols
    }

    fn corners(&self) -> Vec<Cell> {
        self.steps()
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::S && w[1] == Step::W)
            .map(|(k, _)| Cell::new(k as i32 + 1, k as i32 + 2))
            .collect()
    }
}

impl fmt::Display for FerrersDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

/// A Ferrers diagram `F` with one staircase row added above it per column.
///
/// The added row for column `j` is labeled `-j` and holds the cells
/// `(-j, j')` for every column label `j' >= j`; its rightmost cell `(-j, j)`
/// is the diagonal cell.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ShiftedDiagram {
    sub: FerrersDiagram,
}

impl ShiftedDiagram {
    pub fn new(sub: FerrersDiagram) -> Self {
        ShiftedDiagram { sub }
    }

    pub fn sub(&self) -> &FerrersDiagram {
        &self.sub
    }

    pub fn is_diagonal(&self, cell: Cell) -> bool {
        cell.row < 0 && cell.row == -cell.col && self.contains(cell)
    }

    pub fn diagonal_cells(&self) -> Vec<Cell> {
        self.sub
            .col_labels()
            .into_iter()
            .map(|j| Cell::new(-j, j))
            .collect()
    }

    /// The diagonal corner `(-1, 1)`, present iff step 1 of the subdiagram is `W`.
    pub fn diagonal_corner(&self) -> Option<Cell> {
        self.sub.is_col(1).then_some(Cell::new(-1, 1))
    }

    /// Row labels that index a row of this diagram (added rows first).
    pub fn is_row(&self, label: i32) -> bool {
        if label < 0 {
            self.sub.is_col(-label)
        } else {
            self.sub.is_row(label)
        }
    }
}

impl Shape for ShiftedDiagram {
    fn size(&self) -> usize {
        self.sub.size()
    }

    fn contains(&self, cell: Cell) -> bool {
        if cell.row > 0 {
            self.sub.contains(cell)
        } else if cell.row < 0 {
            self.sub.is_col(-cell.row) && self.sub.is_col(cell.col) && cell.col >= -cell.row
        } else {
            false
        }
    }

    fn rows(&self) -> Vec<i32> {
        let mut rows: Vec<i32> = self.sub.col_labels().into_iter().map(|j| -j).collect();
        rows.reverse();
        rows.extend(self.sub.row_labels());
        rows
    }

    fn cols(&self) -> Vec<i32> {
        self.sub.cols()
    }

    fn corners(&self) -> Vec<Cell> {
        let mut corners: Vec<Cell> = self.diagonal_corner().into_iter().collect();
        corners.extend(self.sub.corners());
        corners
    }
}
