//! Tree-like tableaux and symmetric tree-like tableaux.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::diagrams::{Cell, FerrersDiagram, Shape};
use crate::oracle::{self, OracleBounds, SizeTooLargeForOracle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("cell {0} is not a cell of the diagram")]
    NonexistentCell(Cell),
    #[error("invalid tree-like tableau: {0}")]
    InvalidTableau(ValidationReport),
    #[error(transparent)]
    SizeTooLargeForOracle(#[from] SizeTooLargeForOracle),
}

/// A violated tree-like tableau condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The diagram has an empty row or column (word must start with S and end with W).
    EmptyLine,
    EmptyDiagram,
    /// Condition (1): the top-left cell carries no point.
    MissingRoot(Cell),
    /// Condition (2): a non-root point must see a point above or to its left, not both.
    AboveXorLeft { cell: Cell, above: bool, left: bool },
    /// Condition (3).
    RowWithoutPoint(i32),
    /// Condition (3).
    ColumnWithoutPoint(i32),
    PointCount { expected: usize, found: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyLine => write!(f, "diagram has an empty row or column"),
            Violation::EmptyDiagram => write!(f, "diagram is empty"),
            Violation::MissingRoot(c) => write!(f, "condition (1): root cell {c} is not pointed"),
            Violation::AboveXorLeft { cell, above, left } => write!(
                f,
                "condition (2) at {cell}: point above = {above}, point to the left = {left}"
            ),
            Violation::RowWithoutPoint(i) => write!(f, "condition (3): row {i} has no point"),
            Violation::ColumnWithoutPoint(j) => write!(f, "condition (3): column {j} has no point"),
            Violation::PointCount { expected, found } => {
                write!(f, "expected {expected} points (diagram size - 1), found {found}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Checks the tree-like tableau conditions on a diagram and point set.
pub fn validate_tlt(
    diagram: &FerrersDiagram,
    points: &BTreeSet<Cell>,
) -> Result<ValidationReport, TableauError> {
    if let Some(&bad) = points.iter().find(|&&c| !diagram.contains(c)) {
        return Err(TableauError::NonexistentCell(bad));
    }
    let mut report = ValidationReport::default();
    if diagram.size() == 0 {
        report.violations.push(Violation::EmptyDiagram);
        return Ok(report);
    }
    if !diagram.has_no_empty_lines() {
        report.violations.push(Violation::EmptyLine);
    }
    let root = root_cell(diagram);
    if let Some(root) = root {
        if !points.contains(&root) {
            report.violations.push(Violation::MissingRoot(root));
        }
    }
    for &p in points {
        if Some(p) == root {
            continue;
        }
        let above = points.iter().any(|q| q.col == p.col && q.row < p.row);
        let left = points.iter().any(|q| q.row == p.row && q.col > p.col);
        if above == left {
            report.violations.push(Violation::AboveXorLeft { cell: p, above, left });
        }
    }
    for row in diagram.row_labels() {
        if !points.iter().any(|q| q.row == row) {
            report.violations.push(Violation::RowWithoutPoint(row));
        }
    }
    for col in diagram.col_labels() {
        if !points.iter().any(|q| q.col == col) {
            report.violations.push(Violation::ColumnWithoutPoint(col));
        }
    }
    let expected = diagram.size() - 1;
    if points.len() != expected {
        report.violations.push(Violation::PointCount {
            expected,
            found: points.len(),
        });
    }
    Ok(report)
}

/// The top-left cell: smallest row label, largest column label.
fn root_cell(diagram: &FerrersDiagram) -> Option<Cell> {
    let row = *diagram.row_labels().first()?;
    let col = *diagram.col_labels().last()?;
    let cell = Cell::new(row, col);
    diagram.contains(cell).then_some(cell)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TableauStats {
    pub top: usize,
    pub left: usize,
    pub noc: usize,
    pub oc: usize,
}

/// A valid tree-like tableau. Ordering is the canonical order: border word,
/// then the sorted point list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeLikeTableau {
    diagram: FerrersDiagram,
    points: BTreeSet<Cell>,
}

impl TreeLikeTableau {
    pub fn new(diagram: FerrersDiagram, points: BTreeSet<Cell>) -> Result<Self, TableauError> {
        let report = validate_tlt(&diagram, &points)?;
        if !report.is_ok() {
            return Err(TableauError::InvalidTableau(report));
        }
        Ok(TreeLikeTableau { diagram, points })
    }

    pub fn parse(border: &str, points: &[(i32, i32)]) -> Result<Self, crate::Error> {
        let diagram = FerrersDiagram::parse(border)?;
        let points = points.iter().map(|&p| Cell::from(p)).collect();
        Ok(TreeLikeTableau::new(diagram, points)?)
    }

    pub(crate) fn from_parts_unchecked(diagram: FerrersDiagram, points: BTreeSet<Cell>) -> Self {
        debug_assert!(validate_tlt(&diagram, &points).map(|r| r.is_ok()).unwrap_or(false));
        TreeLikeTableau { diagram, points }
    }

    pub fn diagram(&self) -> &FerrersDiagram {
        &self.diagram
    }

    pub fn points(&self) -> &BTreeSet<Cell> {
        &self.points
    }

    /// Number of points, equal to the diagram size minus one.
    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn root(&self) -> Cell {
        Cell::new(1, self.diagram.size() as i32)
    }

    pub fn has_point(&self, cell: Cell) -> bool {
        self.points.contains(&cell)
    }

    pub fn point_above(&self, cell: Cell) -> bool {
        self.points.iter().any(|q| q.col == cell.col && q.row < cell.row)
    }

    pub fn point_left(&self, cell: Cell) -> bool {
        self.points.iter().any(|q| q.row == cell.row && q.col > cell.col)
    }

    pub fn stats(&self) -> TableauStats {
        let root = self.root();
        let top = self.points.iter().filter(|p| p.row == root.row && **p != root).count();
        let left = self.points.iter().filter(|p| p.col == root.col && **p != root).count();
        let corners = self.diagram.corners();
        let oc = corners.iter().filter(|c| self.points.contains(c)).count();
        TableauStats {
            top,
            left,
            noc: corners.len() - oc,
            oc,
        }
    }

    pub fn reflect(&self) -> TreeLikeTableau {
        let points = self
            .points
            .iter()
            .map(|&p| self.diagram.transpose_cell(p))
            .collect();
        TreeLikeTableau {
            diagram: self.diagram.transpose(),
            points,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.diagram.is_self_conjugate()
            && self
                .points
                .iter()
                .all(|&p| self.points.contains(&self.diagram.transpose_cell(p)))
    }
}

/// Brute-force generator of all tree-like tableaux of size `n`, in canonical order.
pub fn enumerate_tlt_oracle(
    n: usize,
    bounds: &OracleBounds,
) -> Result<Vec<TreeLikeTableau>, TableauError> {
    oracle::check("tree-like tableau", n, bounds.tlt)?;
    Ok(generate(n, false))
}

/// Brute-force generator of all symmetric tree-like tableaux of the given
/// (odd) size, in canonical order. Even sizes yield nothing.
pub fn enumerate_sym_tlt_oracle(
    size: usize,
    bounds: &OracleBounds,
) -> Result<Vec<TreeLikeTableau>, TableauError> {
    oracle::check("symmetric tree-like tableau", size, bounds.tlt_sym)?;
    if size.is_multiple_of(2) {
        return Ok(Vec::new());
    }
    Ok(generate(size, true))
}

fn generate(n: usize, symmetric: bool) -> Vec<TreeLikeTableau> {
    if n == 0 {
        return Vec::new();
    }
    let words: Vec<FerrersDiagram> = oracle::border_words(n + 1, true)
        .into_iter()
        .map(FerrersDiagram::from_steps)
        .filter(|d| !symmetric || d.is_self_conjugate())
        .collect();
    let mut out: Vec<TreeLikeTableau> = words
        .par_iter()
        .flat_map_iter(|d| PointSearch::new(d, n, symmetric).run())
        .collect();
    out.sort();
    out
}

/// Backtracking over the cells of one diagram in reading order.
///
/// Every cell above or to the left of the current cell is already decided,
/// so condition (2) is checked when a point is placed. Row and column
/// coverage are checked at the last cell of each row and column.
struct PointSearch<'a> {
    diagram: &'a FerrersDiagram,
    cells: Vec<Cell>,
    target: usize,
    /// Index of the mirror cell when it precedes this one in reading order.
    forced_by: Vec<Option<usize>>,
    ends_row: Vec<bool>,
    ends_col: Vec<bool>,
    chosen: Vec<bool>,
    row_count: HashMap<i32, usize>,
    col_count: HashMap<i32, usize>,
    placed: usize,
    found: Vec<TreeLikeTableau>,
}

impl<'a> PointSearch<'a> {
    fn new(diagram: &'a FerrersDiagram, target: usize, symmetric: bool) -> Self {
        let cells = diagram.cells();
        let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let forced_by = cells
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                if !symmetric {
                    return None;
                }
                let m = index[&diagram.transpose_cell(c)];
                (m < k).then_some(m)
            })
            .collect();
        let ends_row = cells
            .iter()
            .enumerate()
            .map(|(k, c)| cells.get(k + 1).is_none_or(|next| next.row != c.row))
            .collect();
        let ends_col = cells
            .iter()
            .enumerate()
            .map(|(k, c)| cells[k + 1..].iter().all(|later| later.col != c.col))
            .collect();
        let len = cells.len();
        PointSearch {
            diagram,
            cells,
            target,
            forced_by,
            ends_row,
            ends_col,
            chosen: vec![false; len],
            row_count: HashMap::new(),
            col_count: HashMap::new(),
            placed: 0,
            found: Vec::new(),
        }
    }

    fn run(mut self) -> Vec<TreeLikeTableau> {
        if !self.cells.is_empty() {
            self.step(0);
        }
        self.found
    }

    fn step(&mut self, k: usize) {
        if k == self.cells.len() {
            if self.placed == self.target {
                let points = self
                    .cells
                    .iter()
                    .zip(&self.chosen)
                    .filter(|(_, &on)| on)
                    .map(|(&c, _)| c)
                    .collect();
                self.found
                    .push(TreeLikeTableau::from_parts_unchecked(self.diagram.clone(), points));
            }
            return;
        }
        let remaining = self.cells.len() - k;
        if self.placed > self.target || self.placed + remaining < self.target {
            return;
        }
        let options: &[bool] = match (k, self.forced_by[k]) {
            (0, _) => &[true],
            (_, Some(m)) if self.chosen[m] => &[true],
            (_, Some(_)) => &[false],
            (_, None) => &[false, true],
        };
        for &on in options {
            let cell = self.cells[k];
            let above = self.col_count.get(&cell.col).copied().unwrap_or(0) > 0;
            let left = self.row_count.get(&cell.row).copied().unwrap_or(0) > 0;
            if on && k > 0 && above == left {
                continue;
            }
            if on {
                self.place(k, 1);
            }
            let covered = (!self.ends_row[k] || self.row_count.get(&cell.row).copied().unwrap_or(0) > 0)
                && (!self.ends_col[k] || self.col_count.get(&cell.col).copied().unwrap_or(0) > 0);
            if covered {
                self.step(k + 1);
            }
            if on {
                self.place(k, -1);
            }
        }
    }

    fn place(&mut self, k: usize, delta: isize) {
        let cell = self.cells[k];
        let on = delta > 0;
        self.chosen[k] = on;
        let adjust = |v: &mut usize| *v = (*v as isize + delta) as usize;
        adjust(self.row_count.entry(cell.row).or_insert(0));
        adjust(self.col_count.entry(cell.col).or_insert(0));
        self.placed = (self.placed as isize + delta) as usize;
    }
}
