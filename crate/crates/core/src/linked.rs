//! Linked partitions and type-B linked partitions in linear representation.
//!
//! Both are stored as a strictly increasing vertex list plus, for every
//! vertex, the index of the left endpoint of its unique incoming arc (if
//! any). In-degree at most one is therefore structural.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkedError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("blocks are not nearly disjoint: {0:?} and {1:?}")]
    NotNearlyDisjoint(Vec<u32>, Vec<u32>),
    #[error("blocks do not cover [n]: {0} is missing")]
    CoverageGap(u32),
    #[error("vertex {0} is not a destination")]
    NotADestination(i32),
    #[error("vertex {0} is not a legal destination")]
    NotALegalDestination(i32),
    #[error("unknown subset predicate {0:?}")]
    UnknownPredicate(String),
    #[error("index {i} out of range for predicate {predicate} at n = {n}")]
    IndexOutOfRange { predicate: SubsetPredicate, n: usize, i: usize },
    #[error("predicate {0} does not apply to this kind of partition")]
    WrongFamily(SubsetPredicate),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexClass {
    /// Only a left-hand endpoint.
    Origin,
    /// Both a left-hand and a right-hand endpoint.
    Transient,
    /// Isolated.
    Singleton,
    /// Only a right-hand endpoint.
    Destination,
}

/// Vertices in increasing order with an optional parent index per vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Arcs {
    vertices: Vec<i32>,
    parent: Vec<Option<usize>>,
}

impl Arcs {
    fn build(vertices: Vec<i32>, arcs: &[(i32, i32)]) -> Result<Self, LinkedError> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LinkedError::InvalidPartition(
                "vertices must be strictly increasing".into(),
            ));
        }
        let index: BTreeMap<i32, usize> = vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut parent = vec![None; vertices.len()];
        for &(u, v) in arcs {
            let (Some(&iu), Some(&iv)) = (index.get(&u), index.get(&v)) else {
                return Err(LinkedError::InvalidPartition(format!(
                    "arc ({u},{v}) uses a missing vertex"
                )));
            };
            if iu >= iv {
                return Err(LinkedError::InvalidPartition(format!(
                    "arc ({u},{v}) must go from a smaller to a larger vertex"
                )));
            }
            if parent[iv].replace(iu).is_some() {
                return Err(LinkedError::InvalidPartition(format!(
                    "vertex {v} is the right-hand endpoint of two arcs"
                )));
            }
        }
        Ok(Arcs { vertices, parent })
    }

    fn position(&self, v: i32) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    fn arcs(&self) -> Vec<(i32, i32)> {
        let mut out: Vec<(i32, i32)> = self
            .parent
            .iter()
            .enumerate()
            .filter_map(|(k, p)| p.map(|p| (self.vertices[p], self.vertices[k])))
            .collect();
        out.sort();
        out
    }

    fn has_arc(&self, u: i32, v: i32) -> bool {
        match (self.position(u), self.position(v)) {
            (Some(iu), Some(iv)) => self.parent[iv] == Some(iu),
            _ => false,
        }
    }

    fn predecessor(&self, v: i32) -> Option<i32> {
        self.parent[self.position(v)?].map(|p| self.vertices[p])
    }

    fn out_degrees(&self) -> Vec<usize> {
        let mut out = vec![0; self.vertices.len()];
        for p in self.parent.iter().flatten() {
            out[*p] += 1;
        }
        out
    }

    fn classes(&self) -> Vec<VertexClass> {
        self.out_degrees()
            .into_iter()
            .zip(&self.parent)
            .map(|(out, parent)| match (out > 0, parent.is_some()) {
                (true, false) => VertexClass::Origin,
                (true, true) => VertexClass::Transient,
                (false, false) => VertexClass::Singleton,
                (false, true) => VertexClass::Destination,
            })
            .collect()
    }

    fn class_of(&self, v: i32) -> Option<VertexClass> {
        let k = self.position(v)?;
        let has_out = self.parent.contains(&Some(k));
        Some(match (has_out, self.parent[k].is_some()) {
            (true, false) => VertexClass::Origin,
            (true, true) => VertexClass::Transient,
            (false, false) => VertexClass::Singleton,
            (false, true) => VertexClass::Destination,
        })
    }

    fn os(&self) -> usize {
        self.classes()
            .into_iter()
            .filter(|c| matches!(c, VertexClass::Origin | VertexClass::Singleton))
            .count()
    }
}

/// A linked partition of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinkedPartition {
    inner: Arcs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LpStats {
    /// Origins plus singletons.
    pub os: usize,
    /// Arcs leaving vertex 1.
    pub one: usize,
}

impl LinkedPartition {
    pub fn new(n: usize, arcs: &[(i32, i32)]) -> Result<Self, LinkedError> {
        let vertices = (1..=n as i32).collect();
        Ok(LinkedPartition {
            inner: Arcs::build(vertices, arcs)?,
        })
    }

    /// Builds from `parents[k]`, the left endpoint of the arc into vertex `k + 1`.
    pub fn from_parents(parents: &[Option<u32>]) -> Result<Self, LinkedError> {
        let arcs: Vec<(i32, i32)> = parents
            .iter()
            .enumerate()
            .filter_map(|(k, p)| p.map(|p| (p as i32, k as i32 + 1)))
            .collect();
        LinkedPartition::new(parents.len(), &arcs)
    }

    pub fn n(&self) -> usize {
        self.inner.vertices.len()
    }

    pub fn arcs(&self) -> Vec<(i32, i32)> {
        self.inner.arcs()
    }

    pub fn has_arc(&self, u: i32, v: i32) -> bool {
        self.inner.has_arc(u, v)
    }

    pub fn predecessor(&self, v: i32) -> Option<i32> {
        self.inner.predecessor(v)
    }

    pub fn classify(&self) -> BTreeMap<i32, VertexClass> {
        self.inner.vertices.iter().copied().zip(self.inner.classes()).collect()
    }

    pub fn class_of(&self, v: i32) -> Option<VertexClass> {
        self.inner.class_of(v)
    }

    pub fn is_destination(&self, v: i32) -> bool {
        self.class_of(v) == Some(VertexClass::Destination)
    }

    pub fn stats(&self) -> LpStats {
        LpStats {
            os: self.inner.os(),
            one: self.arcs().iter().filter(|(u, _)| *u == 1).count(),
        }
    }

    /// Each left endpoint with its right endpoints, plus the singletons, sorted.
    pub fn blocks(&self) -> Vec<Vec<u32>> {
        let mut blocks: BTreeMap<i32, Vec<u32>> = BTreeMap::new();
        for (u, v) in self.arcs() {
            blocks.entry(u).or_insert_with(|| vec![u as u32]).push(v as u32);
        }
        for (v, class) in self.classify() {
            if class == VertexClass::Singleton {
                blocks.insert(v, vec![v as u32]);
            }
        }
        let mut out: Vec<Vec<u32>> = blocks.into_values().collect();
        for b in &mut out {
            b.sort();
        }
        out.sort();
        out
    }

    pub fn from_blocks(blocks: &[Vec<u32>], n: usize) -> Result<Self, LinkedError> {
        let sets: Vec<BTreeSet<u32>> = blocks.iter().map(|b| b.iter().copied().collect()).collect();
        if let Some(b) = sets.iter().find(|b| b.is_empty()) {
            return Err(LinkedError::InvalidPartition(format!("empty block {b:?}")));
        }
        for (x, bx) in sets.iter().enumerate() {
            for by in &sets[x + 1..] {
                if !nearly_disjoint(bx, by) {
                    return Err(LinkedError::NotNearlyDisjoint(
                        bx.iter().copied().collect(),
                        by.iter().copied().collect(),
                    ));
                }
            }
        }
        let covered: BTreeSet<u32> = sets.iter().flatten().copied().collect();
        if let Some(missing) = (1..=n as u32).find(|k| !covered.contains(k)) {
            return Err(LinkedError::CoverageGap(missing));
        }
        if let Some(&extra) = covered.iter().find(|&&k| k == 0 || k > n as u32) {
            return Err(LinkedError::InvalidPartition(format!("{extra} is not in [{n}]")));
        }
        let arcs: Vec<(i32, i32)> = sets
            .iter()
            .flat_map(|b| {
                let min = *b.iter().next().unwrap() as i32;
                b.iter().skip(1).map(move |&v| (min, v as i32))
            })
            .collect();
        LinkedPartition::new(n, &arcs)
    }

    /// The chain of in-arcs ending at `dest`, back to an origin.
    pub fn maximal_path(&self, dest: i32) -> Result<Vec<i32>, LinkedError> {
        if !self.is_destination(dest) {
            return Err(LinkedError::NotADestination(dest));
        }
        let mut path = vec![dest];
        let mut current = dest;
        while let Some(p) = self.predecessor(current) {
            path.push(p);
            current = p;
        }
        path.reverse();
        Ok(path)
    }
}

fn nearly_disjoint(bi: &BTreeSet<u32>, bj: &BTreeSet<u32>) -> bool {
    let (min_i, min_j) = (bi.iter().next(), bj.iter().next());
    bi.intersection(bj).all(|k| {
        let first = Some(k) == min_i && bi.len() > 1 && Some(k) != min_j;
        let second = Some(k) == min_j && bj.len() > 1 && Some(k) != min_i;
        first || second
    })
}

/// A linked partition in which each integer may be negated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeBLinkedPartition {
    inner: Arcs,
}

impl TypeBLinkedPartition {
    /// `vertices` must contain exactly one of `k`, `-k` for each `k` in `[n]`.
    pub fn new(n: usize, vertices: &[i32], arcs: &[(i32, i32)]) -> Result<Self, LinkedError> {
        let mut sorted = vertices.to_vec();
        sorted.sort();
        let mut magnitudes: Vec<i32> = sorted.iter().map(|v| v.abs()).collect();
        magnitudes.sort();
        if magnitudes != (1..=n as i32).collect::<Vec<_>>() {
            return Err(LinkedError::InvalidPartition(format!(
                "vertices must contain exactly one of k, -k for each k in [{n}]"
            )));
        }
        Ok(TypeBLinkedPartition {
            inner: Arcs::build(sorted, arcs)?,
        })
    }

    pub fn n(&self) -> usize {
        self.inner.vertices.len()
    }

    pub fn vertices(&self) -> &[i32] {
        &self.inner.vertices
    }

    pub fn contains(&self, v: i32) -> bool {
        self.inner.position(v).is_some()
    }

    pub fn arcs(&self) -> Vec<(i32, i32)> {
        self.inner.arcs()
    }

    pub fn has_arc(&self, u: i32, v: i32) -> bool {
        self.inner.has_arc(u, v)
    }

    pub fn predecessor(&self, v: i32) -> Option<i32> {
        self.inner.predecessor(v)
    }

    pub fn classify(&self) -> BTreeMap<i32, VertexClass> {
        self.inner.vertices.iter().copied().zip(self.inner.classes()).collect()
    }

    pub fn class_of(&self, v: i32) -> Option<VertexClass> {
        self.inner.class_of(v)
    }

    pub fn os(&self) -> usize {
        self.inner.os()
    }

    /// A destination whose incoming arc starts at a smaller absolute value.
    pub fn is_legal_destination(&self, v: i32) -> bool {
        self.class_of(v) == Some(VertexClass::Destination)
            && self.predecessor(v).is_some_and(|p| p.abs() < v.abs())
    }

    pub fn legal_destinations(&self) -> Vec<i32> {
        self.inner
            .vertices
            .iter()
            .copied()
            .filter(|&v| self.is_legal_destination(v))
            .collect()
    }

    /// Follows in-arcs back from `dest` while the left endpoint is smaller in
    /// absolute value than `dest`.
    pub fn maximal_good_path(&self, dest: i32) -> Result<Vec<i32>, LinkedError> {
        if !self.is_legal_destination(dest) {
            return Err(LinkedError::NotALegalDestination(dest));
        }
        Ok(good_path(&self.inner.vertices, &self.inner.parent, dest))
    }
}

/// Maximal good path to `dest` over an explicit parent array.
pub(crate) fn good_path(vertices: &[i32], parent: &[Option<usize>], dest: i32) -> Vec<i32> {
    let bound = dest.abs();
    let mut k = vertices.binary_search(&dest).expect("destination is a vertex");
    let mut path = vec![dest];
    while let Some(p) = parent[k] {
        if vertices[p].abs() >= bound {
            break;
        }
        path.push(vertices[p]);
        k = p;
    }
    path.reverse();
    path
}

/// Every linked partition of `[n]`: vertex `j` picks no predecessor or one of `1..j`.
pub fn enumerate_lp(n: usize) -> Vec<LinkedPartition> {
    let vertices: Vec<i32> = (1..=n as i32).collect();
    parent_assignments(n)
        .into_iter()
        .map(|parent| LinkedPartition {
            inner: Arcs {
                vertices: vertices.clone(),
                parent,
            },
        })
        .collect()
}

/// Every type-B linked partition of `[n]`: a sign per integer times an
/// in-degree-at-most-one arc set on the sorted signed vertices.
pub fn enumerate_lpb(n: usize) -> Vec<TypeBLinkedPartition> {
    let assignments = parent_assignments(n);
    let mut out = Vec::with_capacity(assignments.len() << n);
    for mask in 0u32..(1u32 << n) {
        let mut vertices: Vec<i32> = (1..=n as i32)
            .map(|k| if mask >> (k - 1) & 1 == 1 { -k } else { k })
            .collect();
        vertices.sort();
        for parent in &assignments {
            out.push(TypeBLinkedPartition {
                inner: Arcs {
                    vertices: vertices.clone(),
                    parent: parent.clone(),
                },
            });
        }
    }
    out
}

fn parent_assignments(n: usize) -> Vec<Vec<Option<usize>>> {
    let mut all = vec![Vec::with_capacity(n)];
    for k in 0..n {
        let mut next = Vec::with_capacity(all.len() * (k + 1));
        for prefix in &all {
            for choice in std::iter::once(None).chain((0..k).map(Some)) {
                let mut p: Vec<Option<usize>> = prefix.clone();
                p.push(choice);
                next.push(p);
            }
        }
        all = next;
    }
    all
}

/// Named subsets of linked partitions indexed by `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubsetPredicate {
    /// `i` a destination, `i-1` not a destination, `(i-1,i)` not an arc.
    L,
    /// `i` a destination and `(i-1,i)` not an arc.
    M,
    /// `i-1` and `i` both destinations.
    N,
    /// Union of X and Y.
    LB,
    /// `-i` a vertex, plus the shared conditions on `i-1`.
    X,
    /// `i` a legal destination, plus the shared conditions on `i-1`.
    Y,
    /// `-i` a vertex.
    Z,
    /// `-i` and `i-1` vertices.
    X1,
    /// X1 and `i-1` a legal destination.
    X2,
    /// X1, `(-i, i-1)` an arc and `i-1` a destination.
    X3,
    /// `i-1` a vertex, `i` a legal destination, `(i-1,i)` not an arc.
    Y1,
    /// Y1 and `i-1` a legal destination.
    Y2,
    /// `-1` a vertex; takes no index.
    LB1,
}

impl SubsetPredicate {
    pub const ALL: [SubsetPredicate; 13] = [
        SubsetPredicate::L,
        SubsetPredicate::M,
        SubsetPredicate::N,
        SubsetPredicate::LB,
        SubsetPredicate::X,
        SubsetPredicate::Y,
        SubsetPredicate::Z,
        SubsetPredicate::X1,
        SubsetPredicate::X2,
        SubsetPredicate::X3,
        SubsetPredicate::Y1,
        SubsetPredicate::Y2,
        SubsetPredicate::LB1,
    ];

    pub fn id(self) -> &'static str {
        match self {
            SubsetPredicate::L => "L_ni",
            SubsetPredicate::M => "M_ni",
            SubsetPredicate::N => "N_ni",
            SubsetPredicate::LB => "LB_ni",
            SubsetPredicate::X => "X_ni",
            SubsetPredicate::Y => "Y_ni",
            SubsetPredicate::Z => "Z_ni",
            SubsetPredicate::X1 => "X1",
            SubsetPredicate::X2 => "X2",
            SubsetPredicate::X3 => "X3",
            SubsetPredicate::Y1 => "Y1",
            SubsetPredicate::Y2 => "Y2",
            SubsetPredicate::LB1 => "LB_n1",
        }
    }

    pub fn is_type_b(self) -> bool {
        !matches!(self, SubsetPredicate::L | SubsetPredicate::M | SubsetPredicate::N)
    }

    /// Admissible indices at size `n`; `LB1` yields the single placeholder 1.
    pub fn index_range(self, n: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            SubsetPredicate::L | SubsetPredicate::M | SubsetPredicate::N => 3..=n,
            SubsetPredicate::Z => 1..=n,
            SubsetPredicate::LB1 => 1..=1,
            _ => 2..=n,
        }
    }

    fn check_index(self, n: usize, i: usize) -> Result<(), LinkedError> {
        if self.index_range(n).contains(&i) && (self != SubsetPredicate::LB1 || n >= 1) {
            Ok(())
        } else {
            Err(LinkedError::IndexOutOfRange { predicate: self, n, i })
        }
    }
}

impl fmt::Display for SubsetPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for SubsetPredicate {
    type Err = LinkedError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SubsetPredicate::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| LinkedError::UnknownPredicate(s.to_string()))
    }
}

/// Membership of a plain linked partition in `L_{n,i}`, `M_{n,i}` or `N_{n,i}`.
pub fn plain_member(tau: &LinkedPartition, predicate: SubsetPredicate, i: usize) -> Result<bool, LinkedError> {
    if predicate.is_type_b() {
        return Err(LinkedError::WrongFamily(predicate));
    }
    predicate.check_index(tau.n(), i)?;
    let i = i as i32;
    let dest = |v| tau.is_destination(v);
    Ok(match predicate {
        SubsetPredicate::L => dest(i) && !dest(i - 1) && !tau.has_arc(i - 1, i),
        SubsetPredicate::M => dest(i) && !tau.has_arc(i - 1, i),
        SubsetPredicate::N => dest(i - 1) && dest(i),
        _ => unreachable!(),
    })
}

/// Membership of a type-B linked partition in one of the type-B subsets.
pub fn type_b_member(
    tau: &TypeBLinkedPartition,
    predicate: SubsetPredicate,
    i: usize,
) -> Result<bool, LinkedError> {
    if !predicate.is_type_b() {
        return Err(LinkedError::WrongFamily(predicate));
    }
    predicate.check_index(tau.n(), i)?;
    let i = i as i32;
    let legal = |v| tau.is_legal_destination(v);
    // an arc (-i, i-1) only rules out the corner when i-1 ends there
    let closing = || tau.has_arc(-i, i - 1) && tau.class_of(i - 1) == Some(VertexClass::Destination);
    // conditions on i-1 and the excluded arcs shared by X and Y
    let shared = || tau.contains(i - 1) && !legal(i - 1) && !tau.has_arc(i - 1, i) && !closing();
    Ok(match predicate {
        SubsetPredicate::LB => (legal(i) || tau.contains(-i)) && shared(),
        SubsetPredicate::X => tau.contains(-i) && shared(),
        SubsetPredicate::Y => legal(i) && shared(),
        SubsetPredicate::Z => tau.contains(-i),
        SubsetPredicate::X1 => tau.contains(-i) && tau.contains(i - 1),
        SubsetPredicate::X2 => tau.contains(-i) && tau.contains(i - 1) && legal(i - 1),
        SubsetPredicate::X3 => tau.contains(-i) && closing(),
        SubsetPredicate::Y1 => tau.contains(i - 1) && legal(i) && !tau.has_arc(i - 1, i),
        SubsetPredicate::Y2 => tau.contains(i - 1) && legal(i) && !tau.has_arc(i - 1, i) && legal(i - 1),
        SubsetPredicate::LB1 => tau.contains(-1),
        _ => unreachable!(),
    })
}
