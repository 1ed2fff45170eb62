//! Alternative tableaux: plain, star, symmetric and type B.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::diagrams::{Cell, FerrersDiagram, Shape, ShiftedDiagram};
use crate::oracle::{self, OracleBounds, SizeTooLargeForOracle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlternativeError {
    #[error("cell {0} is not a cell of the diagram")]
    NonexistentCell(Cell),
    #[error("invalid alternative tableau: {0}")]
    InvalidTableau(AtViolation),
    #[error(transparent)]
    SizeTooLargeForOracle(#[from] SizeTooLargeForOracle),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Arrow {
    Left,
    Up,
}

impl Arrow {
    pub fn swapped(self) -> Arrow {
        match self {
            Arrow::Left => Arrow::Up,
            Arrow::Up => Arrow::Left,
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            Arrow::Left => "L",
            Arrow::Up => "U",
        }
    }

    pub fn from_code(code: &str) -> Option<Arrow> {
        match code {
            "L" => Some(Arrow::Left),
            "U" => Some(Arrow::Up),
            _ => None,
        }
    }
}

/// First rule found broken by a filling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AtViolation {
    /// The arrow at `at` points at the non-empty cell `target`.
    PointsAtFilledCell { at: Cell, arrow: Arrow, target: Cell },
    /// Column `col` has an up arrow while row `-col` is not empty.
    UpArrowWithFilledMirrorRow { col: i32, row_cell: Cell },
    DiagonalNotEmpty(Cell),
}

impl fmt::Display for AtViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtViolation::PointsAtFilledCell { at, arrow, target } => {
                let name = match arrow {
                    Arrow::Left => "left arrow",
                    Arrow::Up => "up arrow",
                };
                write!(f, "{name} at {at} points at non-empty cell {target}")
            }
            AtViolation::UpArrowWithFilledMirrorRow { col, row_cell } => write!(
                f,
                "column {col} contains an up arrow but row {} is not empty (cell {row_cell})",
                -col
            ),
            AtViolation::DiagonalNotEmpty(c) => write!(f, "diagonal cell {c} is not empty"),
        }
    }
}

fn check_cells<S: Shape>(shape: &S, arrows: &BTreeMap<Cell, Arrow>) -> Result<(), AlternativeError> {
    match arrows.keys().find(|c| !shape.contains(**c)) {
        Some(&bad) => Err(AlternativeError::NonexistentCell(bad)),
        None => Ok(()),
    }
}

fn first_visibility_violation<S: Shape>(
    shape: &S,
    arrows: &BTreeMap<Cell, Arrow>,
) -> Option<AtViolation> {
    for (&at, &arrow) in arrows {
        let pointed = match arrow {
            Arrow::Left => shape
                .row_cells(at.row)
                .into_iter()
                .find(|c| c.col > at.col && arrows.contains_key(c)),
            Arrow::Up => shape
                .col_cells(at.col)
                .into_iter()
                .find(|c| c.row < at.row && arrows.contains_key(c)),
        };
        if let Some(target) = pointed {
            return Some(AtViolation::PointsAtFilledCell { at, arrow, target });
        }
    }
    None
}

/// Checks the arrow rule on a Ferrers diagram; `Ok(None)` means valid.
pub fn validate_at(
    diagram: &FerrersDiagram,
    arrows: &BTreeMap<Cell, Arrow>,
) -> Result<Option<AtViolation>, AlternativeError> {
    check_cells(diagram, arrows)?;
    Ok(first_visibility_violation(diagram, arrows))
}

/// Checks the three type-B rules on a shifted diagram; `Ok(None)` means valid.
pub fn validate_atb(
    shifted: &ShiftedDiagram,
    arrows: &BTreeMap<Cell, Arrow>,
) -> Result<Option<AtViolation>, AlternativeError> {
    check_cells(shifted, arrows)?;
    if let Some(v) = first_visibility_violation(shifted, arrows) {
        return Ok(Some(v));
    }
    for (&at, &arrow) in arrows {
        if arrow == Arrow::Up {
            if let Some(&row_cell) = arrows.keys().find(|c| c.row == -at.col) {
                return Ok(Some(AtViolation::UpArrowWithFilledMirrorRow {
                    col: at.col,
                    row_cell,
                }));
            }
        }
    }
    if let Some(&diag) = arrows.keys().find(|c| shifted.is_diagonal(**c)) {
        return Ok(Some(AtViolation::DiagonalNotEmpty(diag)));
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AtStats {
    /// Rows without a left arrow.
    pub urr: usize,
    /// Arrows in the topmost row.
    pub top: usize,
    /// Empty corners.
    pub noc: usize,
}

/// A valid alternative tableau. Ordering is canonical: border word, then the
/// sorted arrow list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlternativeTableau {
    diagram: FerrersDiagram,
    arrows: BTreeMap<Cell, Arrow>,
}

impl AlternativeTableau {
    pub fn new(diagram: FerrersDiagram, arrows: BTreeMap<Cell, Arrow>) -> Result<Self, AlternativeError> {
        if let Some(v) = validate_at(&diagram, &arrows)? {
            return Err(AlternativeError::InvalidTableau(v));
        }
        Ok(AlternativeTableau { diagram, arrows })
    }

    pub fn parse(border: &str, arrows: &[(i32, i32, Arrow)]) -> Result<Self, crate::Error> {
        let diagram = FerrersDiagram::parse(border)?;
        let arrows = arrows.iter().map(|&(i, j, a)| (Cell::new(i, j), a)).collect();
        Ok(AlternativeTableau::new(diagram, arrows)?)
    }

    pub fn empty(diagram: FerrersDiagram) -> Self {
        AlternativeTableau {
            diagram,
            arrows: BTreeMap::new(),
        }
    }

    pub(crate) fn from_parts_unchecked(diagram: FerrersDiagram, arrows: BTreeMap<Cell, Arrow>) -> Self {
        debug_assert!(matches!(validate_at(&diagram, &arrows), Ok(None)));
        AlternativeTableau { diagram, arrows }
    }

    pub fn diagram(&self) -> &FerrersDiagram {
        &self.diagram
    }

    pub fn arrows(&self) -> &BTreeMap<Cell, Arrow> {
        &self.arrows
    }

    pub fn arrow(&self, cell: Cell) -> Option<Arrow> {
        self.arrows.get(&cell).copied()
    }

    pub fn size(&self) -> usize {
        self.diagram.size()
    }

    pub fn row_has_left(&self, row: i32) -> bool {
        self.arrows.iter().any(|(c, a)| c.row == row && *a == Arrow::Left)
    }

    pub fn col_has_up(&self, col: i32) -> bool {
        self.arrows.iter().any(|(c, a)| c.col == col && *a == Arrow::Up)
    }

    /// Labels of rows without a left arrow.
    pub fn unrestricted_rows(&self) -> Vec<i32> {
        self.diagram
            .row_labels()
            .into_iter()
            .filter(|&r| !self.row_has_left(r))
            .collect()
    }

    pub fn stats(&self) -> AtStats {
        let top = match self.diagram.row_labels().first() {
            Some(&r) => self.arrows.keys().filter(|c| c.row == r).count(),
            None => 0,
        };
        AtStats {
            urr: self.unrestricted_rows().len(),
            top,
            noc: self.non_occupied_corners().len(),
        }
    }

    pub fn non_occupied_corners(&self) -> Vec<Cell> {
        self.diagram
            .corners()
            .into_iter()
            .filter(|c| !self.arrows.contains_key(c))
            .collect()
    }

    /// Every column contains an up arrow.
    pub fn is_star(&self) -> bool {
        self.diagram.col_labels().into_iter().all(|j| self.col_has_up(j))
    }

    pub fn reflect(&self) -> AlternativeTableau {
        let arrows = self
            .arrows
            .iter()
            .map(|(&c, &a)| (self.diagram.transpose_cell(c), a.swapped()))
            .collect();
        AlternativeTableau {
            diagram: self.diagram.transpose(),
            arrows,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.diagram.is_self_conjugate()
            && self.arrows.iter().all(|(&c, &a)| {
                self.arrows.get(&self.diagram.transpose_cell(c)) == Some(&a.swapped())
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TypeBStats {
    pub urr: usize,
    /// 1 when the diagonal corner `(-1, 1)` exists and is empty.
    pub noc_diag: usize,
    /// Empty corners off the diagonal.
    pub noc_off: usize,
}

impl TypeBStats {
    pub fn noc(&self) -> usize {
        self.noc_diag + self.noc_off
    }

    /// `noc' + 2 noc''`, the corner count of the symmetric preimage.
    pub fn doubled_noc(&self) -> usize {
        self.noc_diag + 2 * self.noc_off
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeBAlternativeTableau {
    shifted: ShiftedDiagram,
    arrows: BTreeMap<Cell, Arrow>,
}

impl TypeBAlternativeTableau {
    pub fn new(shifted: ShiftedDiagram, arrows: BTreeMap<Cell, Arrow>) -> Result<Self, AlternativeError> {
        if let Some(v) = validate_atb(&shifted, &arrows)? {
            return Err(AlternativeError::InvalidTableau(v));
        }
        Ok(TypeBAlternativeTableau { shifted, arrows })
    }

    /// `border` is the word of the subdiagram.
    pub fn parse(border: &str, arrows: &[(i32, i32, Arrow)]) -> Result<Self, crate::Error> {
        let shifted = FerrersDiagram::parse(border)?.shift();
        let arrows = arrows.iter().map(|&(i, j, a)| (Cell::new(i, j), a)).collect();
        Ok(TypeBAlternativeTableau::new(shifted, arrows)?)
    }

    pub(crate) fn from_parts_unchecked(shifted: ShiftedDiagram, arrows: BTreeMap<Cell, Arrow>) -> Self {
        debug_assert!(matches!(validate_atb(&shifted, &arrows), Ok(None)));
        TypeBAlternativeTableau { shifted, arrows }
    }

    pub fn shifted(&self) -> &ShiftedDiagram {
        &self.shifted
    }

    pub fn sub(&self) -> &FerrersDiagram {
        self.shifted.sub()
    }

    pub fn arrows(&self) -> &BTreeMap<Cell, Arrow> {
        &self.arrows
    }

    pub fn arrow(&self, cell: Cell) -> Option<Arrow> {
        self.arrows.get(&cell).copied()
    }

    pub fn size(&self) -> usize {
        self.shifted.size()
    }

    pub fn row_has_left(&self, row: i32) -> bool {
        self.arrows.iter().any(|(c, a)| c.row == row && *a == Arrow::Left)
    }

    pub fn col_has_up(&self, col: i32) -> bool {
        self.arrows.iter().any(|(c, a)| c.col == col && *a == Arrow::Up)
    }

    /// Rows `i` (either sign) with no left arrow whose column `|i|`, when it
    /// exists, has no up arrow. Cell-less rows of the subdiagram count.
    pub fn unrestricted_rows(&self) -> Vec<i32> {
        self.shifted
            .rows()
            .into_iter()
            .filter(|&r| {
                let col = r.abs();
                !self.row_has_left(r) && !(self.sub().is_col(col) && self.col_has_up(col))
            })
            .collect()
    }

    pub fn stats(&self) -> TypeBStats {
        let noc_diag = self
            .shifted
            .diagonal_corner()
            .filter(|c| !self.arrows.contains_key(c))
            .map_or(0, |_| 1);
        let noc_off = self
            .sub()
            .corners()
            .into_iter()
            .filter(|c| !self.arrows.contains_key(c))
            .count();
        TypeBStats {
            urr: self.unrestricted_rows().len(),
            noc_diag,
            noc_off,
        }
    }
}

/// Which plain-diagram family an oracle run produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtVariant {
    Plain,
    Star,
    Symmetric,
}

/// Brute-force generator of alternative tableaux of size `size`, canonical order.
pub fn enumerate_at_oracle(
    size: usize,
    variant: AtVariant,
    bounds: &OracleBounds,
) -> Result<Vec<AlternativeTableau>, AlternativeError> {
    let (family, bound) = match variant {
        AtVariant::Plain => ("alternative tableau", bounds.at),
        AtVariant::Star => ("star alternative tableau", bounds.at_star),
        AtVariant::Symmetric => ("symmetric alternative tableau", bounds.at_sym),
    };
    oracle::check(family, size, bound)?;
    if variant == AtVariant::Symmetric && size % 2 == 1 {
        return Ok(Vec::new());
    }
    let diagrams: Vec<FerrersDiagram> = oracle::border_words(size, false)
        .into_iter()
        .map(FerrersDiagram::from_steps)
        .filter(|d| match variant {
            AtVariant::Symmetric => d.is_self_conjugate(),
            // a cell-less column can never hold an up arrow
            AtVariant::Star => d.col_labels().into_iter().all(|j| d.col_len(j) > 0),
            AtVariant::Plain => true,
        })
        .collect();
    let mut out: Vec<AlternativeTableau> = diagrams
        .par_iter()
        .flat_map_iter(|d| {
            let rules = ArrowRules {
                symmetric: variant == AtVariant::Symmetric,
                star: variant == AtVariant::Star,
                type_b: false,
            };
            ArrowSearch::new(d, d, rules)
                .run()
                .into_iter()
                .map(|arrows| AlternativeTableau::from_parts_unchecked(d.clone(), arrows))
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Brute-force generator of type-B alternative tableaux of size `n`, canonical order.
pub fn enumerate_atb_oracle(
    n: usize,
    bounds: &OracleBounds,
) -> Result<Vec<TypeBAlternativeTableau>, AlternativeError> {
    oracle::check("type-B alternative tableau", n, bounds.at_b)?;
    let shapes: Vec<ShiftedDiagram> = oracle::border_words(n, false)
        .into_iter()
        .map(|w| FerrersDiagram::from_steps(w).shift())
        .collect();
    let mut out: Vec<TypeBAlternativeTableau> = shapes
        .par_iter()
        .flat_map_iter(|s| {
            let rules = ArrowRules {
                symmetric: false,
                star: false,
                type_b: true,
            };
            ArrowSearch::new(s, s.sub(), rules)
                .run()
                .into_iter()
                .map(|arrows| TypeBAlternativeTableau::from_parts_unchecked(s.clone(), arrows))
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    Ok(out)
}

#[derive(Clone, Copy)]
struct ArrowRules {
    symmetric: bool,
    star: bool,
    type_b: bool,
}

/// Backtracking over cells in reading order. Every cell an arrow points at
/// precedes it in reading order, so each placement is checked immediately.
struct ArrowSearch {
    cells: Vec<Cell>,
    rules: ArrowRules,
    mirror_of: Vec<Option<usize>>,
    diagonal: Vec<bool>,
    ends_col: Vec<bool>,
    filling: Vec<Option<Arrow>>,
    row_filled: HashMap<i32, usize>,
    col_filled: HashMap<i32, usize>,
    col_up: HashSet<i32>,
    found: Vec<BTreeMap<Cell, Arrow>>,
}

impl ArrowSearch {
    fn new<S: Shape>(shape: &S, sub: &FerrersDiagram, rules: ArrowRules) -> Self {
        let cells = shape.cells();
        let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mirror_of = cells
            .iter()
            .map(|&c| {
                if rules.symmetric {
                    index.get(&sub.transpose_cell(c)).copied()
                } else {
                    None
                }
            })
            .collect();
        let diagonal = cells
            .iter()
            .map(|c| rules.type_b && c.row == -c.col)
            .collect();
        let ends_col = cells
            .iter()
            .enumerate()
            .map(|(k, c)| cells[k + 1..].iter().all(|later| later.col != c.col))
            .collect();
        let len = cells.len();
        ArrowSearch {
            cells,
            rules,
            mirror_of,
            diagonal,
            ends_col,
            filling: vec![None; len],
            row_filled: HashMap::new(),
            col_filled: HashMap::new(),
            col_up: HashSet::new(),
            found: Vec::new(),
        }
    }

    fn run(mut self) -> Vec<BTreeMap<Cell, Arrow>> {
        self.step(0);
        self.found
    }

    fn allowed(&self, k: usize, choice: Option<Arrow>) -> bool {
        let cell = self.cells[k];
        if let Some(m) = self.mirror_of[k] {
            if m < k && self.filling[m].map(Arrow::swapped) != choice {
                return false;
            }
            if m == k && choice.is_some() {
                return false;
            }
        }
        let Some(arrow) = choice else { return true };
        if self.diagonal[k] {
            return false;
        }
        let filled = |map: &HashMap<i32, usize>, key| map.get(&key).copied().unwrap_or(0) > 0;
        match arrow {
            Arrow::Left => !filled(&self.row_filled, cell.row),
            Arrow::Up => {
                !filled(&self.col_filled, cell.col)
                    && !(self.rules.type_b && filled(&self.row_filled, -cell.col))
            }
        }
    }

    fn step(&mut self, k: usize) {
        if k == self.cells.len() {
            let arrows = self
                .cells
                .iter()
                .zip(&self.filling)
                .filter_map(|(&c, a)| a.map(|a| (c, a)))
                .collect();
            self.found.push(arrows);
            return;
        }
        for choice in [None, Some(Arrow::Left), Some(Arrow::Up)] {
            if !self.allowed(k, choice) {
                continue;
            }
            let cell = self.cells[k];
            self.set(k, choice, 1);
            let star_ok = !(self.rules.star && self.ends_col[k] && !self.col_up.contains(&cell.col));
            if star_ok {
                self.step(k + 1);
            }
            self.set(k, choice, -1);
        }
    }

    fn set(&mut self, k: usize, choice: Option<Arrow>, delta: isize) {
        let Some(arrow) = choice else { return };
        let cell = self.cells[k];
        self.filling[k] = if delta > 0 { Some(arrow) } else { None };
        for (map, key) in [(&mut self.row_filled, cell.row), (&mut self.col_filled, cell.col)] {
            let v = map.entry(key).or_insert(0);
            *v = (*v as isize + delta) as usize;
        }
        if arrow == Arrow::Up {
            if delta > 0 {
                self.col_up.insert(cell.col);
            } else {
                self.col_up.remove(&cell.col);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Arrow::{Left as L, Up as U};

    fn at(border: &str, arrows: &[(i32, i32, Arrow)]) -> AlternativeTableau {
        AlternativeTableau::parse(border, arrows).unwrap()
    }

    pub(crate) fn fig6() -> TypeBAlternativeTableau {
        TypeBAlternativeTableau::parse(
            "WWSWSWWSWS",
            &[
                (-7, 9, U), (-2, 6, U), (-2, 9, L), (-4, 7, L),
                (-1, 4, L), (3, 6, L), (5, 7, L), (8, 9, L),
            ],
        )
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        let empty = FerrersDiagram::empty();
        assert_eq!(validate_at(&empty, &BTreeMap::new()), Ok(None));
        let fig3 = at("WWSWSSWSWS", &[(3, 4, U), (5, 7, L), (6, 9, U), (8, 9, L)]);
        assert_eq!(fig3.size(), 10);
        let d = FerrersDiagram::parse("SSWW").unwrap();
        let arrows = [(Cell::new(1, 3), L), (Cell::new(2, 3), U)].into_iter().collect();
        assert_eq!(
            validate_at(&d, &arrows),
            Ok(Some(AtViolation::PointsAtFilledCell {
                at: Cell::new(2, 3),
                arrow: U,
                target: Cell::new(1, 3)
            }))
        );
    }

    #[test]
    fn validate_rejects_missing_cell() {
        let d = FerrersDiagram::parse("SW").unwrap();
        let arrows = [(Cell::new(1, 3), L)].into_iter().collect();
        assert_eq!(
            validate_at(&d, &arrows),
            Err(AlternativeError::NonexistentCell(Cell::new(1, 3)))
        );
    }

    #[test]
    fn type_b_rules() {
        let s = FerrersDiagram::parse("SW").unwrap().shift();
        // up arrow in column 2 with row -2 filled: row -2 is only the diagonal
        let diag = [(Cell::new(-2, 2), L)].into_iter().collect();
        assert_eq!(
            validate_atb(&s, &diag),
            Ok(Some(AtViolation::DiagonalNotEmpty(Cell::new(-2, 2))))
        );
        let s = FerrersDiagram::parse("SWW").unwrap().shift();
        // row -2 holds (-2,3) and (-2,2); up arrow at (1,2)
        let arrows = [(Cell::new(-2, 3), L), (Cell::new(1, 2), U)].into_iter().collect();
        assert_eq!(
            validate_atb(&s, &arrows),
            Ok(Some(AtViolation::UpArrowWithFilledMirrorRow {
                col: 2,
                row_cell: Cell::new(-2, 3)
            }))
        );
    }

    #[test]
    fn stats_examples() {
        let fig5 = at(
            "SWWSWSSWSWS",
            &[(1, 8, U), (1, 3, U), (1, 2, U), (4, 5, U), (6, 8, L), (7, 10, U), (9, 10, L)],
        );
        assert_eq!(fig5.stats(), AtStats { urr: 4, top: 3, noc: 1 });
        assert_eq!(fig5.non_occupied_corners(), vec![Cell::new(7, 8)]);
        assert_eq!(fig5.unrestricted_rows(), vec![1, 4, 7, 11]);
        assert!(fig5.is_star());

        let f6 = fig6();
        assert_eq!(f6.stats().urr, 2);
        assert_eq!(f6.unrestricted_rows(), vec![-7, 10]);

        let empty = AlternativeTableau::empty(FerrersDiagram::empty());
        assert_eq!(empty.stats(), AtStats::default());
        assert!(empty.is_star());
    }

    #[test]
    fn star_examples() {
        let fig3 = at("WWSWSSWSWS", &[(3, 4, U), (5, 7, L), (6, 9, U), (8, 9, L)]);
        assert!(!fig3.is_star());
    }

    #[test]
    fn reflection_examples() {
        assert!(AlternativeTableau::empty(FerrersDiagram::empty()).is_symmetric());
        let t = at("SSWW", &[(1, 3, L)]);
        assert_eq!(t.reflect(), at("SSWW", &[(2, 4, U)]));
        assert!(!t.is_symmetric());
        assert!(at("SSWW", &[(1, 3, L), (2, 4, U)]).is_symmetric());
    }

    #[test]
    fn oracle_counts() {
        let b = OracleBounds::default();
        let count = |n, v| enumerate_at_oracle(n, v, &b).unwrap().len();
        assert_eq!(count(3, AtVariant::Star), 6);
        assert_eq!(count(4, AtVariant::Star), 24);
        assert_eq!(count(5, AtVariant::Star), 120);
        assert_eq!(count(2, AtVariant::Plain), 6);
        assert_eq!(count(4, AtVariant::Plain), 120);
        assert_eq!(count(2, AtVariant::Symmetric), 2);
        assert_eq!(count(6, AtVariant::Symmetric), 48);
        assert_eq!(count(10, AtVariant::Symmetric), 3840);
        assert_eq!(enumerate_atb_oracle(1, &b).unwrap().len(), 2);
        assert_eq!(enumerate_atb_oracle(3, &b).unwrap().len(), 48);
        assert_eq!(enumerate_atb_oracle(5, &b).unwrap().len(), 3840);
    }

    #[test]
    fn oracle_filters_agree_with_plain_oracle() {
        let b = OracleBounds::default();
        for n in 0..=4 {
            let plain = enumerate_at_oracle(n, AtVariant::Plain, &b).unwrap();
            let star: Vec<_> = plain.iter().filter(|t| t.is_star()).cloned().collect();
            let sym: Vec<_> = plain.iter().filter(|t| t.is_symmetric()).cloned().collect();
            assert_eq!(star, enumerate_at_oracle(n, AtVariant::Star, &b).unwrap());
            assert_eq!(sym, enumerate_at_oracle(n, AtVariant::Symmetric, &b).unwrap());
        }
    }

    #[test]
    fn star_tableaux_have_no_left_arrow_in_top_row() {
        for t in enumerate_at_oracle(5, AtVariant::Star, &OracleBounds::default()).unwrap() {
            let top = t.diagram().row_labels()[0];
            assert!(!t.row_has_left(top));
        }
    }

    #[test]
    fn type_b_diagonal_corner_needs_leading_w() {
        for t in enumerate_atb_oracle(4, &OracleBounds::default()).unwrap() {
            if t.stats().noc_diag == 1 {
                assert!(t.sub().is_col(1));
            }
            assert!(t.stats().noc_diag <= 1);
        }
    }

    #[test]
    fn oracle_bound_is_enforced() {
        assert!(matches!(
            enumerate_atb_oracle(6, &OracleBounds::default()),
            Err(AlternativeError::SizeTooLargeForOracle(_))
        ));
    }
}
