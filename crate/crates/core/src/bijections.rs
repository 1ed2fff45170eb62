//! Bijections between tree-like tableaux, alternative tableaux and linked
//! partitions, with checkers for the statistics each one carries across.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::alternative::{AlternativeTableau, Arrow, TypeBAlternativeTableau};
use crate::diagrams::{Cell, FerrersDiagram, Shape, ShiftedDiagram, Step};
use crate::linked::{LinkedPartition, TypeBLinkedPartition, VertexClass};
use crate::tableaux::TreeLikeTableau;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("alternative tableau is not a star tableau")]
    NotStar,
    #[error("alternative tableau is not symmetric")]
    NotSymmetric,
    #[error("malformed type-B linked partition: residual arc ({0},{1})")]
    ResidualArc(i32, i32),
    #[error("statistic contract violated: {0}")]
    Contract(String),
}

fn arrow_for(t: &TreeLikeTableau, p: Cell) -> Arrow {
    if t.point_above(p) {
        Arrow::Left
    } else {
        Arrow::Up
    }
}

/// Deletes the top row and the left column; the remaining points become arrows.
pub fn alpha(t: &TreeLikeTableau) -> AlternativeTableau {
    let m = t.diagram().size() as i32;
    let steps = t.diagram().steps();
    let word = steps[1..steps.len() - 1].to_vec();
    let arrows = t
        .points()
        .iter()
        .filter(|p| p.row != 1 && p.col != m)
        .map(|&p| (Cell::new(p.row - 1, p.col - 1), arrow_for(t, p)))
        .collect();
    AlternativeTableau::from_parts_unchecked(FerrersDiagram::from_steps(word), arrows)
}

pub fn alpha_inv(t: &AlternativeTableau) -> TreeLikeTableau {
    let k = t.size() as i32;
    let mut word = Vec::with_capacity(t.size() + 2);
    word.push(Step::S);
    word.extend_from_slice(t.diagram().steps());
    word.push(Step::W);
    let left = k + 2;
    let mut points: BTreeSet<Cell> = t.arrows().keys().map(|c| Cell::new(c.row + 1, c.col + 1)).collect();
    points.insert(Cell::new(1, left));
    for r in t.diagram().row_labels() {
        if !t.row_has_left(r) {
            points.insert(Cell::new(r + 1, left));
        }
    }
    for c in t.diagram().col_labels() {
        if !t.col_has_up(c) {
            points.insert(Cell::new(1, c + 1));
        }
    }
    TreeLikeTableau::from_parts_unchecked(FerrersDiagram::from_steps(word), points)
}

/// Deletes only the left column; labels are unchanged.
pub fn beta(t: &TreeLikeTableau) -> AlternativeTableau {
    let m = t.diagram().size() as i32;
    let steps = t.diagram().steps();
    let word = steps[..steps.len() - 1].to_vec();
    let arrows = t
        .points()
        .iter()
        .filter(|p| p.col != m)
        .map(|&p| (p, arrow_for(t, p)))
        .collect();
    AlternativeTableau::from_parts_unchecked(FerrersDiagram::from_steps(word), arrows)
}

pub fn beta_inv(t: &AlternativeTableau) -> Result<TreeLikeTableau, BijectionError> {
    if !t.is_star() {
        return Err(BijectionError::NotStar);
    }
    if t.size() == 0 || t.diagram().steps()[0] != Step::S {
        return Err(BijectionError::InvalidInput(
            "a star tableau in the image must start with a row".into(),
        ));
    }
    let mut word = t.diagram().steps().to_vec();
    word.push(Step::W);
    let left = word.len() as i32;
    let mut points: BTreeSet<Cell> = t.arrows().keys().copied().collect();
    for r in t.diagram().row_labels() {
        if !t.row_has_left(r) {
            points.insert(Cell::new(r, left));
        }
    }
    Ok(TreeLikeTableau::from_parts_unchecked(FerrersDiagram::from_steps(word), points))
}

/// Keeps the cells on or below the main diagonal and reads them as a
/// filling of a shifted diagram.
pub fn gamma(t: &AlternativeTableau) -> Result<TypeBAlternativeTableau, BijectionError> {
    if !t.is_symmetric() {
        return Err(BijectionError::NotSymmetric);
    }
    let n = (t.size() / 2) as i32;
    let sub = FerrersDiagram::from_steps(t.diagram().steps()[n as usize..].to_vec());
    let arrows = t
        .arrows()
        .iter()
        .filter(|(c, _)| c.row + c.col > 2 * n)
        .map(|(&c, &a)| {
            let row = if c.row > n { c.row - n } else { c.row - n - 1 };
            (Cell::new(row, c.col - n), a)
        })
        .collect();
    Ok(TypeBAlternativeTableau::from_parts_unchecked(ShiftedDiagram::new(sub), arrows))
}

pub fn gamma_inv(t: &TypeBAlternativeTableau) -> AlternativeTableau {
    let n = t.size() as i32;
    let sub = t.sub().steps();
    let mut word: Vec<Step> = sub.iter().rev().map(|s| s.swapped()).collect();
    word.extend_from_slice(sub);
    let diagram = FerrersDiagram::from_steps(word);
    let mut arrows = BTreeMap::new();
    for (&c, &a) in t.arrows() {
        let row = if c.row > 0 { c.row + n } else { c.row + n + 1 };
        let cell = Cell::new(row, c.col + n);
        arrows.insert(cell, a);
        let mirror = diagram.transpose_cell(cell);
        if mirror != cell {
            arrows.insert(mirror, a.swapped());
        }
    }
    AlternativeTableau::from_parts_unchecked(diagram, arrows)
}

/// Arrows of column `col`: the up-arrow row (if any) and the left-arrow rows, increasing.
fn column_arrows(arrows: &BTreeMap<Cell, Arrow>, col: i32) -> (Option<i32>, Vec<i32>) {
    let mut up = None;
    let mut lefts = Vec::new();
    for (c, a) in arrows.iter().filter(|(c, _)| c.col == col) {
        match a {
            Arrow::Up => up = Some(c.row),
            Arrow::Left => lefts.push(c.row),
        }
    }
    (up, lefts)
}

fn chain(up: i32, lefts: &[i32], dest: i32) -> Vec<(i32, i32)> {
    let mut path = vec![up];
    path.extend_from_slice(lefts);
    path.push(dest);
    path.windows(2).map(|w| (w[0], w[1])).collect()
}

/// Each column becomes the destination of the path through its arrows.
pub fn phi(t: &AlternativeTableau) -> Result<LinkedPartition, BijectionError> {
    if !t.is_star() {
        return Err(BijectionError::NotStar);
    }
    let mut arcs = Vec::new();
    for j in t.diagram().col_labels() {
        let (up, lefts) = column_arrows(t.arrows(), j);
        arcs.extend(chain(up.expect("star column"), &lefts, j));
    }
    LinkedPartition::new(t.size(), &arcs).map_err(|e| BijectionError::InvalidInput(e.to_string()))
}

/// Peels maximal paths off the destinations in decreasing order.
pub fn psi(tau: &LinkedPartition) -> AlternativeTableau {
    let n = tau.n() as i32;
    let word = (1..=n)
        .map(|v| if tau.is_destination(v) { Step::W } else { Step::S })
        .collect();
    let mut parent: BTreeMap<i32, i32> = tau.arcs().into_iter().map(|(u, v)| (v, u)).collect();
    let mut arrows = BTreeMap::new();
    for dest in (1..=n).rev().filter(|&v| tau.is_destination(v)) {
        let mut path = Vec::new();
        let mut current = dest;
        while let Some(p) = parent.remove(&current) {
            path.push(p);
            current = p;
        }
        path.reverse();
        for (k, &row) in path.iter().enumerate() {
            let arrow = if k == 0 { Arrow::Up } else { Arrow::Left };
            arrows.insert(Cell::new(row, dest), arrow);
        }
    }
    AlternativeTableau::from_parts_unchecked(FerrersDiagram::from_steps(word), arrows)
}

/// Columns with an up arrow become chains ending at `j`; the others become
/// the vertex `-j` with an arc to every left-arrow row.
pub fn phi_b(t: &TypeBAlternativeTableau) -> TypeBLinkedPartition {
    let sub = t.sub();
    let mut vertices: Vec<i32> = sub.row_labels();
    let mut arcs = Vec::new();
    for j in sub.col_labels() {
        let (up, lefts) = column_arrows(t.arrows(), j);
        match up {
            Some(up) => {
                vertices.push(j);
                arcs.extend(chain(up, &lefts, j));
            }
            None => {
                vertices.push(-j);
                arcs.extend(lefts.into_iter().map(|r| (-j, r)));
            }
        }
    }
    TypeBLinkedPartition::new(t.size(), &vertices, &arcs).expect("image of a valid type-B tableau")
}

pub fn psi_b(tau: &TypeBLinkedPartition) -> Result<TypeBAlternativeTableau, BijectionError> {
    let n = tau.n() as i32;
    let legal: BTreeSet<i32> = tau.legal_destinations().into_iter().collect();
    let word = (1..=n)
        .map(|k| if legal.contains(&k) || tau.contains(-k) { Step::W } else { Step::S })
        .collect();
    let mut parent: BTreeMap<i32, i32> = tau.arcs().into_iter().map(|(u, v)| (v, u)).collect();
    let mut arrows = BTreeMap::new();
    for &dest in legal.iter().rev() {
        let mut path = Vec::new();
        let mut current = dest;
        while let Some(&p) = parent.get(&current) {
            if p.abs() >= dest {
                break;
            }
            parent.remove(&current);
            path.push(p);
            current = p;
        }
        path.reverse();
        for (k, &row) in path.iter().enumerate() {
            let arrow = if k == 0 { Arrow::Up } else { Arrow::Left };
            arrows.insert(Cell::new(row, dest), arrow);
        }
    }
    for (&j, &i) in &parent {
        if i >= 0 || j.abs() >= i.abs() {
            return Err(BijectionError::ResidualArc(i, j));
        }
        arrows.insert(Cell::new(j, -i), Arrow::Left);
    }
    let sub = FerrersDiagram::from_steps(word);
    Ok(TypeBAlternativeTableau::from_parts_unchecked(ShiftedDiagram::new(sub), arrows))
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), BijectionError> {
    if ok {
        Ok(())
    } else {
        Err(BijectionError::Contract(what()))
    }
}

/// `left(T) = urr(α(T))`, `noc(T) = noc(α(T))`, and point rows shift down by one.
pub fn check_alpha(t: &TreeLikeTableau, image: &AlternativeTableau) -> Result<(), BijectionError> {
    let (s, s2) = (t.stats(), image.stats());
    ensure(s.left == s2.urr, || format!("left {} != urr {}", s.left, s2.urr))?;
    ensure(s.noc == s2.noc, || format!("noc {} != noc {}", s.noc, s2.noc))?;
    let rows: Vec<i32> = t.diagram().row_labels().into_iter().skip(1).map(|r| r - 1).collect();
    ensure(rows == image.diagram().row_labels(), || "row labels do not shift by one".into())?;
    ensure(
        !t.is_symmetric() || image.is_symmetric(),
        || "symmetric input has a non-symmetric image".into(),
    )
}

/// `left(T) = urr(β(T)) - 1`, `noc` and `top` preserved, image is a star tableau.
pub fn check_beta(t: &TreeLikeTableau, image: &AlternativeTableau) -> Result<(), BijectionError> {
    let (s, s2) = (t.stats(), image.stats());
    ensure(s.left + 1 == s2.urr, || format!("left {} + 1 != urr {}", s.left, s2.urr))?;
    ensure(s.noc == s2.noc, || format!("noc {} != noc {}", s.noc, s2.noc))?;
    ensure(s.top == s2.top, || format!("top {} != top {}", s.top, s2.top))?;
    ensure(image.is_star(), || "image is not a star tableau".into())
}

/// `urr(T) = urr(γ(T))` and `noc(T) = noc'(γ(T)) + 2 noc''(γ(T))`.
pub fn check_gamma(t: &AlternativeTableau, image: &TypeBAlternativeTableau) -> Result<(), BijectionError> {
    let (s, s2) = (t.stats(), image.stats());
    ensure(s.urr == s2.urr, || format!("urr {} != urr {}", s.urr, s2.urr))?;
    ensure(s.noc == s2.doubled_noc(), || {
        format!("noc {} != noc' + 2 noc'' = {}", s.noc, s2.doubled_noc())
    })
}

fn labels_with(classes: &BTreeMap<i32, VertexClass>, wanted: &[VertexClass]) -> Vec<i32> {
    classes
        .iter()
        .filter(|(_, c)| wanted.contains(c))
        .map(|(v, _)| *v)
        .collect()
}

/// Columns are destinations, rows are the other vertices, unrestricted rows
/// are origins and singletons, and top-row arrows are arcs out of vertex 1.
pub fn check_phi(t: &AlternativeTableau, tau: &LinkedPartition) -> Result<(), BijectionError> {
    use VertexClass::*;
    let classes = tau.classify();
    ensure(t.diagram().col_labels() == labels_with(&classes, &[Destination]), || {
        "columns are not the destinations".into()
    })?;
    ensure(
        t.diagram().row_labels() == labels_with(&classes, &[Origin, Singleton, Transient]),
        || "rows are not the non-destinations".into(),
    )?;
    ensure(t.unrestricted_rows() == labels_with(&classes, &[Origin, Singleton]), || {
        "unrestricted rows are not the origins and singletons".into()
    })?;
    let (s, ls) = (t.stats(), tau.stats());
    ensure(s.top == ls.one, || format!("top {} != one {}", s.top, ls.one))?;
    ensure(s.urr == ls.os, || format!("urr {} != os {}", s.urr, ls.os))
}

/// Columns are legal destinations or negated vertices, rows are the other
/// positive vertices, unrestricted rows are origins and singletons.
pub fn check_phi_b(t: &TypeBAlternativeTableau, tau: &TypeBLinkedPartition) -> Result<(), BijectionError> {
    use VertexClass::*;
    let mut cols: Vec<i32> = tau
        .vertices()
        .iter()
        .filter(|&&v| v < 0 || tau.is_legal_destination(v))
        .map(|v| v.abs())
        .collect();
    cols.sort();
    ensure(t.sub().col_labels() == cols, || {
        "columns are not the legal destinations and negated vertices".into()
    })?;
    let rows: Vec<i32> = tau
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v > 0 && !tau.is_legal_destination(v))
        .collect();
    ensure(t.sub().row_labels() == rows, || "rows are not the remaining positive vertices".into())?;
    ensure(
        t.unrestricted_rows().into_iter().collect::<BTreeSet<_>>()
            == labels_with(&tau.classify(), &[Origin, Singleton]).into_iter().collect(),
        || "unrestricted rows are not the origins and singletons".into(),
    )?;
    ensure(t.stats().urr == tau.os(), || format!("urr {} != os {}", t.stats().urr, tau.os()))
}
