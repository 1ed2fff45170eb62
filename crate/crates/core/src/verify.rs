//! Generates families, sums weighted statistics into polynomials and checks
//! the identity catalog exactly.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::alternative::{enumerate_at_oracle, enumerate_atb_oracle, AtVariant};
use crate::bijections::{alpha, alpha_inv, beta_inv, gamma_inv, psi, psi_b, BijectionError};
use crate::diagrams::Cell;
use crate::linked::{enumerate_lp, enumerate_lpb, plain_member, type_b_member, LinkedError, SubsetPredicate};
use crate::oracle::{OracleBounds, SizeTooLargeForOracle};
use crate::polynomials::{closed_form, BivariatePolynomial, ClosedFormId, Coefficient, PolyError};
use crate::serial::Object;
use crate::tableaux::{enumerate_sym_tlt_oracle, enumerate_tlt_oracle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("multiplier {multiplier} does not apply to family {family}")]
    Unsupported { family: FamilyId, multiplier: Multiplier },
    #[error("negative exponent in the weight of a {0} object")]
    NegativeExponent(FamilyId),
    #[error("{family} has no objects of size {size}")]
    NoSuchSize { family: FamilyId, size: usize },
    #[error(transparent)]
    Oracle(#[from] SizeTooLargeForOracle),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
    #[error(transparent)]
    Linked(#[from] LinkedError),
}

// The enumerators fail only on the size bound.
impl From<crate::tableaux::TableauError> for VerifyError {
    fn from(e: crate::tableaux::TableauError) -> Self {
        match e {
            crate::tableaux::TableauError::SizeTooLargeForOracle(e) => VerifyError::Oracle(e),
            other => unreachable!("enumerator failed: {other}"),
        }
    }
}

impl From<crate::alternative::AlternativeError> for VerifyError {
    fn from(e: crate::alternative::AlternativeError) -> Self {
        match e {
            crate::alternative::AlternativeError::SizeTooLargeForOracle(e) => VerifyError::Oracle(e),
            other => unreachable!("enumerator failed: {other}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    Tlt,
    TltSym,
    At,
    AtStar,
    AtSym,
    AtB,
    Lp,
    LpB,
}

impl FamilyId {
    pub const ALL: [FamilyId; 8] = [
        FamilyId::Tlt,
        FamilyId::TltSym,
        FamilyId::At,
        FamilyId::AtStar,
        FamilyId::AtSym,
        FamilyId::AtB,
        FamilyId::Lp,
        FamilyId::LpB,
    ];

    pub fn id(self) -> &'static str {
        match self {
            FamilyId::Tlt => "tlt",
            FamilyId::TltSym => "tlt-sym",
            FamilyId::At => "at",
            FamilyId::AtStar => "at-star",
            FamilyId::AtSym => "at-sym",
            FamilyId::AtB => "at-b",
            FamilyId::Lp => "lp",
            FamilyId::LpB => "lp-b",
        }
    }

    /// Object size for family index `n`: `2n+1` for tlt-sym, `2n` for at-sym.
    pub fn object_size(self, n: usize) -> usize {
        match self {
            FamilyId::TltSym => 2 * n + 1,
            FamilyId::AtSym => 2 * n,
            _ => n,
        }
    }

    /// Inverse of [`FamilyId::object_size`].
    pub fn index_of_size(self, size: usize) -> Result<usize, VerifyError> {
        let n = match self {
            FamilyId::TltSym if size % 2 == 1 => Some(size / 2),
            FamilyId::AtSym if size.is_multiple_of(2) => Some(size / 2),
            FamilyId::TltSym | FamilyId::AtSym => None,
            _ => Some(size),
        };
        n.ok_or(VerifyError::NoSuchSize { family: self, size })
    }

    /// Whether the weight is a polynomial in `x` alone.
    pub fn is_univariate(self) -> bool {
        matches!(self, FamilyId::TltSym | FamilyId::AtSym | FamilyId::AtB | FamilyId::LpB | FamilyId::At)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for FamilyId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| VerifyError::UnknownFamily(s.to_string()))
    }
}

/// Which generator produces a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    /// Brute-force search, bounded by [`OracleBounds`].
    Oracle,
    /// Linked partitions pushed through the bijections.
    Transport,
}

/// Per-object factor multiplied into the weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Multiplier {
    Unit,
    /// Empty corners.
    Noc,
    /// Pointed corners.
    Oc,
    /// Empty diagonal corner plus twice the other empty corners.
    NocTypeB,
    /// Membership of a linked partition in a named subset at index `i`.
    Subset(SubsetPredicate, usize),
    /// Number of indices at which the partition lies in the subset.
    SubsetCount(SubsetPredicate),
    /// Cell `(i-1, i)` (or `(-1, 1)` for `i = 1` in type B) is an empty corner.
    CornerAt(usize),
}

impl fmt::Display for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplier::Unit => f.write_str("unit"),
            Multiplier::Noc => f.write_str("noc"),
            Multiplier::Oc => f.write_str("oc"),
            Multiplier::NocTypeB => f.write_str("noc'+2noc''"),
            Multiplier::Subset(p, i) => write!(f, "{p}[i={i}]"),
            Multiplier::SubsetCount(p) => write!(f, "sum of {p}"),
            Multiplier::CornerAt(i) => write!(f, "corner[i={i}]"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weighting {
    /// The family's statistic weight.
    Family,
    /// Every object weighs 1.
    Count,
}

type FamilyCache = Mutex<HashMap<(FamilyId, usize, Source), Arc<Vec<Object>>>>;

/// Generates families on demand and keeps them for reuse.
pub struct Verifier {
    bounds: OracleBounds,
    source: Source,
    chunk: usize,
    cache: FamilyCache,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier::new(Source::Transport)
    }
}

fn wrap<T: Ord>(mut items: Vec<T>, f: impl Fn(T) -> Object) -> Vec<Object> {
    items.sort();
    items.into_iter().map(f).collect()
}

impl Verifier {
    pub fn new(source: Source) -> Self {
        Verifier {
            bounds: OracleBounds::default(),
            source,
            chunk: 1024,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_bounds(mut self, bounds: OracleBounds) -> Self {
        self.bounds = bounds;
        self
    }

    /// Objects summed per parallel task.
    pub fn with_chunk_size(mut self, chunk: usize) -> Self {
        self.chunk = chunk.max(1);
        self
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn bounds(&self) -> &OracleBounds {
        &self.bounds
    }

    /// All objects of the family at index `n`, in canonical order.
    pub fn generate(&self, family: FamilyId, n: usize) -> Result<Arc<Vec<Object>>, VerifyError> {
        self.generate_from(family, n, self.source)
    }

    pub fn generate_from(&self, family: FamilyId, n: usize, source: Source) -> Result<Arc<Vec<Object>>, VerifyError> {
        let key = (family, n, source);
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let made = Arc::new(match source {
            Source::Oracle => self.oracle(family, n)?,
            Source::Transport => self.transport(family, n)?,
        });
        self.cache.lock().expect("cache lock").insert(key, made.clone());
        Ok(made)
    }

    fn oracle(&self, family: FamilyId, n: usize) -> Result<Vec<Object>, VerifyError> {
        let b = &self.bounds;
        Ok(match family {
            FamilyId::Tlt => wrap(enumerate_tlt_oracle(n, b)?, Object::Tlt),
            FamilyId::TltSym => wrap(enumerate_sym_tlt_oracle(2 * n + 1, b)?, Object::Tlt),
            FamilyId::At => wrap(enumerate_at_oracle(n, AtVariant::Plain, b)?, Object::At),
            FamilyId::AtStar => wrap(enumerate_at_oracle(n, AtVariant::Star, b)?, Object::At),
            FamilyId::AtSym => wrap(enumerate_at_oracle(2 * n, AtVariant::Symmetric, b)?, Object::At),
            FamilyId::AtB => wrap(enumerate_atb_oracle(n, b)?, Object::AtB),
            FamilyId::Lp => wrap(enumerate_lp(n), Object::Lp),
            FamilyId::LpB => wrap(enumerate_lpb(n), Object::LpB),
        })
    }

    fn transport(&self, family: FamilyId, n: usize) -> Result<Vec<Object>, VerifyError> {
        let lp = || enumerate_lp(n);
        let atb = || -> Result<Vec<_>, VerifyError> {
            Ok(enumerate_lpb(n).par_iter().map(psi_b).collect::<Result<Vec<_>, _>>()?)
        };
        Ok(match family {
            FamilyId::Lp => wrap(lp(), Object::Lp),
            FamilyId::LpB => wrap(enumerate_lpb(n), Object::LpB),
            FamilyId::AtStar => wrap(lp().par_iter().map(psi).collect(), Object::At),
            FamilyId::Tlt if n == 0 => Vec::new(),
            FamilyId::Tlt => {
                let all = lp()
                    .par_iter()
                    .map(|tau| beta_inv(&psi(tau)))
                    .collect::<Result<Vec<_>, _>>()?;
                wrap(all, Object::Tlt)
            }
            FamilyId::At => {
                let tlt = self.generate_from(FamilyId::Tlt, n + 1, Source::Transport)?;
                let all = tlt
                    .par_iter()
                    .map(|o| match o {
                        Object::Tlt(t) => alpha(t),
                        _ => unreachable!("tlt family holds tree-like tableaux"),
                    })
                    .collect();
                wrap(all, Object::At)
            }
            FamilyId::AtB => wrap(atb()?, Object::AtB),
            FamilyId::AtSym => wrap(atb()?.par_iter().map(gamma_inv).collect(), Object::At),
            FamilyId::TltSym => {
                let all = atb()?.par_iter().map(|t| alpha_inv(&gamma_inv(t))).collect();
                wrap(all, Object::Tlt)
            }
        })
    }

    /// True when the brute-force and transported families coincide as sets.
    pub fn generators_agree(&self, family: FamilyId, n: usize) -> Result<bool, VerifyError> {
        let oracle = self.generate_from(family, n, Source::Oracle)?;
        let transport = self.generate_from(family, n, Source::Transport)?;
        Ok(oracle == transport)
    }

    /// Σ multiplier(obj) · weight(obj) over the family at index `n`.
    pub fn aggregate<C: Coefficient>(
        &self,
        family: FamilyId,
        n: usize,
        multiplier: Multiplier,
        weighting: Weighting,
    ) -> Result<BivariatePolynomial<C>, VerifyError> {
        self.aggregate_chunked(family, n, multiplier, weighting, self.chunk)
    }

    /// As [`Verifier::aggregate`] with an explicit work partition.
    pub fn aggregate_chunked<C: Coefficient>(
        &self,
        family: FamilyId,
        n: usize,
        multiplier: Multiplier,
        weighting: Weighting,
        chunk: usize,
    ) -> Result<BivariatePolynomial<C>, VerifyError> {
        check_multiplier(family, n, multiplier)?;
        let objects = self.generate(family, n)?;
        let partials = objects
            .par_chunks(chunk.max(1))
            .map(|part| {
                let mut acc = BivariatePolynomial::<C>::zero();
                for obj in part {
                    let k = multiplier_value(obj, multiplier)?;
                    if k == 0 {
                        continue;
                    }
                    let (da, db) = match weighting {
                        Weighting::Family => weight(family, obj)?,
                        Weighting::Count => (0, 0),
                    };
                    let coef = C::from_i64(k).ok_or(PolyError::Overflow)?;
                    acc.add_term(&coef, da, db)?;
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>, VerifyError>>()?;
        partials
            .iter()
            .try_fold(BivariatePolynomial::zero(), |acc, p| Ok(acc.checked_add(p)?))
    }

    /// Checks `id` at size `n`, once per admissible index when it takes one.
    pub fn verify<C: Coefficient>(&self, id: &str, n: usize) -> Result<Vec<IdentityReport<C>>, VerifyError> {
        let spec = identity(id)?;
        match spec.index_range(n) {
            Some(range) => range.map(|i| self.verify_one(spec, n, Some(i))).collect(),
            None => Ok(vec![self.verify_one(spec, n, None)?]),
        }
    }

    fn verify_one<C: Coefficient>(
        &self,
        spec: &IdentitySpec,
        n: usize,
        i: Option<usize>,
    ) -> Result<IdentityReport<C>, VerifyError> {
        let start = Instant::now();
        let lhs = self.side(&spec.lhs, n, i)?;
        let rhs = self.side(&spec.rhs, n, i)?;
        let first_difference = lhs.first_difference(&rhs);
        Ok(IdentityReport {
            id: spec.id,
            n,
            i,
            equal: first_difference.is_none(),
            first_difference,
            lhs,
            rhs,
            millis: start.elapsed().as_millis(),
        })
    }

    fn side<C: Coefficient>(&self, side: &Side, n: usize, i: Option<usize>) -> Result<BivariatePolynomial<C>, VerifyError> {
        match *side {
            Side::Closed(id) => Ok(closed_form(id, n, i)?),
            Side::Sum { family, multiplier, weighting } => {
                let m = match (multiplier, i) {
                    (IndexedMultiplier::Fixed(m), _) => m,
                    (IndexedMultiplier::Subset(p), Some(i)) => Multiplier::Subset(p, i),
                    (IndexedMultiplier::CornerAt, Some(i)) => Multiplier::CornerAt(i),
                    (_, None) => unreachable!("indexed side without an index"),
                };
                self.aggregate(family, n, m, weighting)
            }
        }
    }

    /// For each index, how the transported tableaux with an empty corner at
    /// `(i-1, i)` line up with the matching subset of linked partitions.
    pub fn corner_correspondence(&self, n: usize, type_b: bool) -> Result<Vec<CrossTab>, VerifyError> {
        let mut tables = Vec::new();
        if type_b {
            let lpb = self.generate_from(FamilyId::LpB, n, Source::Transport)?;
            for i in 1..=n {
                let pred = if i == 1 { SubsetPredicate::LB1 } else { SubsetPredicate::LB };
                let mut tab = CrossTab::new(i);
                for o in lpb.iter() {
                    let Object::LpB(tau) = o else { unreachable!() };
                    let t = psi_b(tau)?;
                    let in_corner = typeb_corner(&t, i);
                    tab.record(in_corner, type_b_member(tau, pred, if i == 1 { 1 } else { i })?);
                }
                tables.push(tab);
            }
        } else {
            let lp = self.generate_from(FamilyId::Lp, n, Source::Transport)?;
            for i in 2..=n {
                let mut tab = CrossTab::new(i);
                for o in lp.iter() {
                    let Object::Lp(tau) = o else { unreachable!() };
                    let in_corner = plain_corner(&psi(tau), i);
                    let in_subset = i >= 3 && plain_member(tau, SubsetPredicate::L, i)?;
                    tab.record(in_corner, in_subset);
                }
                tables.push(tab);
            }
        }
        Ok(tables)
    }
}

/// Membership counts for one index of a corner correspondence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossTab {
    pub i: usize,
    pub both: usize,
    pub tableau_only: usize,
    pub partition_only: usize,
    pub neither: usize,
}

impl CrossTab {
    fn new(i: usize) -> Self {
        CrossTab { i, both: 0, tableau_only: 0, partition_only: 0, neither: 0 }
    }

    fn record(&mut self, tableau: bool, partition: bool) {
        match (tableau, partition) {
            (true, true) => self.both += 1,
            (true, false) => self.tableau_only += 1,
            (false, true) => self.partition_only += 1,
            (false, false) => self.neither += 1,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.tableau_only == 0 && self.partition_only == 0
    }
}

fn plain_corner(t: &crate::alternative::AlternativeTableau, i: usize) -> bool {
    let cell = Cell::new(i as i32 - 1, i as i32);
    t.diagram().is_row(cell.row) && t.diagram().is_col(cell.col) && t.arrow(cell).is_none()
}

fn typeb_corner(t: &crate::alternative::TypeBAlternativeTableau, i: usize) -> bool {
    if i == 1 {
        return t.shifted().diagonal_corner().is_some_and(|c| t.arrow(c).is_none());
    }
    let cell = Cell::new(i as i32 - 1, i as i32);
    t.sub().is_row(cell.row) && t.sub().is_col(cell.col) && t.arrow(cell).is_none()
}

fn check_multiplier(family: FamilyId, n: usize, m: Multiplier) -> Result<(), VerifyError> {
    use FamilyId::*;
    let ok = match m {
        Multiplier::Unit => true,
        Multiplier::Noc => matches!(family, Tlt | TltSym | At | AtStar | AtSym),
        Multiplier::Oc => matches!(family, Tlt | TltSym),
        Multiplier::NocTypeB => family == AtB,
        Multiplier::Subset(p, i) => {
            let fits = if p.is_type_b() { family == LpB } else { family == Lp };
            fits && p.index_range(n).contains(&i)
        }
        Multiplier::SubsetCount(p) => if p.is_type_b() { family == LpB } else { family == Lp },
        Multiplier::CornerAt(i) => match family {
            AtStar => (2..=n).contains(&i),
            AtB => (1..=n).contains(&i),
            _ => false,
        },
    };
    if ok {
        Ok(())
    } else {
        Err(VerifyError::Unsupported { family, multiplier: m })
    }
}

fn multiplier_value(obj: &Object, m: Multiplier) -> Result<i64, VerifyError> {
    Ok(match (m, obj) {
        (Multiplier::Unit, _) => 1,
        (Multiplier::Noc, Object::Tlt(t)) => t.stats().noc as i64,
        (Multiplier::Noc, Object::At(t)) => t.stats().noc as i64,
        (Multiplier::Oc, Object::Tlt(t)) => t.stats().oc as i64,
        (Multiplier::NocTypeB, Object::AtB(t)) => t.stats().doubled_noc() as i64,
        (Multiplier::Subset(p, i), Object::Lp(t)) => plain_member(t, p, i)? as i64,
        (Multiplier::Subset(p, i), Object::LpB(t)) => type_b_member(t, p, i)? as i64,
        (Multiplier::SubsetCount(p), Object::Lp(t)) => {
            let mut k = 0;
            for i in p.index_range(t.n()) {
                k += plain_member(t, p, i)? as i64;
            }
            k
        }
        (Multiplier::SubsetCount(p), Object::LpB(t)) => {
            let mut k = 0;
            for i in p.index_range(t.n()) {
                k += type_b_member(t, p, i)? as i64;
            }
            k
        }
        (Multiplier::CornerAt(i), Object::At(t)) => plain_corner(t, i) as i64,
        (Multiplier::CornerAt(i), Object::AtB(t)) => typeb_corner(t, i) as i64,
        _ => unreachable!("multiplier checked against the family"),
    })
}

fn minus_one(family: FamilyId, v: usize) -> Result<u32, VerifyError> {
    v.checked_sub(1).map(|d| d as u32).ok_or(VerifyError::NegativeExponent(family))
}

/// Exponents `(deg_a, deg_b)` of the family weight; `x` is `b`.
pub fn weight(family: FamilyId, obj: &Object) -> Result<(u32, u32), VerifyError> {
    Ok(match (family, obj) {
        (FamilyId::Tlt, Object::Tlt(t)) => {
            let s = t.stats();
            (s.top as u32, s.left as u32)
        }
        (FamilyId::TltSym, Object::Tlt(t)) => (0, minus_one(family, t.stats().left)?),
        (FamilyId::At, Object::At(t)) => (0, t.stats().urr as u32),
        (FamilyId::AtStar, Object::At(t)) => {
            let s = t.stats();
            (s.top as u32, minus_one(family, s.urr)?)
        }
        (FamilyId::AtSym, Object::At(t)) => (0, minus_one(family, t.stats().urr)?),
        (FamilyId::AtB, Object::AtB(t)) => (0, minus_one(family, t.stats().urr)?),
        (FamilyId::Lp, Object::Lp(t)) => {
            let s = t.stats();
            (s.one as u32, minus_one(family, s.os)?)
        }
        (FamilyId::LpB, Object::LpB(t)) => (0, minus_one(family, t.os())?),
        _ => unreachable!("object does not belong to family {family}"),
    })
}

/// How the multiplier of an identity side depends on the index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexedMultiplier {
    Fixed(Multiplier),
    Subset(SubsetPredicate),
    CornerAt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Sum { family: FamilyId, multiplier: IndexedMultiplier, weighting: Weighting },
    Closed(ClosedFormId),
}

/// One entry of the identity catalog.
#[derive(Debug, Clone)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub lhs: Side,
    pub rhs: Side,
    /// Sizes checked by default.
    pub default_range: std::ops::RangeInclusive<usize>,
    /// Index range source for indexed identities.
    pub index: Option<IndexSource>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexSource {
    Closed(ClosedFormId),
    Predicate(SubsetPredicate),
}

impl IdentitySpec {
    pub fn index_range(&self, n: usize) -> Option<std::ops::RangeInclusive<usize>> {
        self.index.map(|src| match src {
            IndexSource::Closed(id) => id.index_range(n),
            IndexSource::Predicate(p) => p.index_range(n),
        })
    }

    pub fn min_n(&self) -> usize {
        *self.default_range.start()
    }
}

fn sum(family: FamilyId, m: Multiplier) -> Side {
    Side::Sum { family, multiplier: IndexedMultiplier::Fixed(m), weighting: Weighting::Family }
}

fn subset(family: FamilyId, p: SubsetPredicate) -> Side {
    Side::Sum { family, multiplier: IndexedMultiplier::Subset(p), weighting: Weighting::Family }
}

fn closed(id: &'static str, lhs: Side, rhs: ClosedFormId, range: std::ops::RangeInclusive<usize>) -> IdentitySpec {
    let index = rhs.takes_index().then_some(IndexSource::Closed(rhs));
    IdentitySpec { id, lhs, rhs: Side::Closed(rhs), default_range: range, index }
}

fn transfer(id: &'static str, lhs: Side, rhs: Side, range: std::ops::RangeInclusive<usize>, index: Option<SubsetPredicate>) -> IdentitySpec {
    IdentitySpec { id, lhs, rhs, default_range: range, index: index.map(IndexSource::Predicate) }
}

/// Every checkable identity, closed forms first, then family-to-family transfers.
pub fn catalog() -> &'static [IdentitySpec] {
    use std::sync::OnceLock;
    use ClosedFormId as C;
    use FamilyId::*;
    use Multiplier::*;
    use SubsetPredicate as P;
    static CATALOG: OnceLock<Vec<IdentitySpec>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let count = |family, m| Side::Sum { family, multiplier: IndexedMultiplier::Fixed(m), weighting: Weighting::Count };
        vec![
            closed("eqT", sum(Tlt, Unit), C::EqT, 1..=8),
            closed("eqsT", sum(TltSym, Unit), C::EqsT, 1..=6),
            closed("conj1", sum(Tlt, Noc), C::Conj1, 3..=8),
            closed("conj2", sum(TltSym, Noc), C::Conj2, 3..=6),
            closed("eq23", sum(AtStar, Unit), C::Eq23, 1..=8),
            closed("eqLn", sum(Lp, Unit), C::EqLn, 1..=8),
            closed("eq26", sum(AtB, Unit), C::Eq26, 1..=6),
            closed("eqLB", sum(LpB, Unit), C::EqLB, 1..=6),
            closed("lem-weightp", sum(Lp, SubsetCount(P::L)), C::LemWeightp, 3..=8),
            closed("lem-M", subset(Lp, P::M), C::LemM, 3..=8),
            closed("lem-N", subset(Lp, P::N), C::LemN, 3..=8),
            closed("lem-L", subset(Lp, P::L), C::LemL, 3..=8),
            closed("lem-X", subset(LpB, P::X), C::LemX, 2..=6),
            closed("lem-Y", subset(LpB, P::Y), C::LemY, 2..=6),
            closed("lem-LB", subset(LpB, P::LB), C::LemLB, 2..=6),
            closed("lem-X1", subset(LpB, P::X1), C::LemX1, 2..=6),
            closed("lem-Z", subset(LpB, P::Z), C::LemZ, 1..=6),
            closed("lem-X2", subset(LpB, P::X2), C::LemX2, 2..=6),
            closed("lem-X3", subset(LpB, P::X3), C::LemX3, 2..=6),
            closed("lem-Y1", subset(LpB, P::Y1), C::LemY1, 2..=6),
            closed("lem-Y2", subset(LpB, P::Y2), C::LemY2, 2..=6),
            closed("lem-L1", sum(LpB, Subset(P::LB1, 1)), C::LemL1, 1..=6),
            closed("oc-count", count(Tlt, Oc), C::OcCount, 1..=8),
            closed("oc-sym-count", count(TltSym, Oc), C::OcSymCount, 1..=6),
            closed("oc-poly", sum(Tlt, Oc), C::OcPoly, 1..=8),
            closed("oc-sym-poly", sum(TltSym, Oc), C::OcSymPoly, 1..=6),
            transfer("eq2.1", sum(Tlt, Unit), sum(AtStar, Unit), 1..=8, None),
            transfer("eq2.2", sum(Tlt, Noc), sum(AtStar, Noc), 1..=8, None),
            transfer("eq2.4-sym", sum(TltSym, Unit), sum(AtSym, Unit), 1..=6, None),
            transfer("eq2.4", sum(AtSym, Unit), sum(AtB, Unit), 1..=6, None),
            transfer("eq2.5-sym", sum(TltSym, Noc), sum(AtSym, Noc), 1..=6, None),
            transfer("eq2.5", sum(AtSym, Noc), sum(AtB, NocTypeB), 1..=6, None),
            transfer(
                "tau8",
                Side::Sum { family: AtStar, multiplier: IndexedMultiplier::CornerAt, weighting: Weighting::Family },
                subset(Lp, P::L),
                3..=8,
                Some(P::L),
            ),
            transfer(
                "beq1",
                Side::Sum { family: AtB, multiplier: IndexedMultiplier::CornerAt, weighting: Weighting::Family },
                subset(LpB, P::LB),
                2..=6,
                Some(P::LB),
            ),
            transfer(
                "Bn1",
                Side::Sum { family: AtB, multiplier: IndexedMultiplier::Fixed(CornerAt(1)), weighting: Weighting::Family },
                sum(LpB, Subset(P::LB1, 1)),
                1..=6,
                None,
            ),
        ]
    })
}

pub fn identity(id: &str) -> Result<&'static IdentitySpec, VerifyError> {
    catalog()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| VerifyError::UnknownIdentity(id.to_string()))
}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport<C> {
    pub id: &'static str,
    pub n: usize,
    pub i: Option<usize>,
    pub lhs: BivariatePolynomial<C>,
    pub rhs: BivariatePolynomial<C>,
    pub equal: bool,
    /// First disagreeing term: exponents, lhs coefficient, rhs coefficient.
    pub first_difference: Option<((u32, u32), C, C)>,
    pub millis: u128,
}

impl<C: Coefficient> IdentityReport<C> {
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        let mut v = serde_json::Map::new();
        v.insert("id".into(), json!(self.id));
        v.insert("n".into(), json!(self.n));
        if let Some(i) = self.i {
            v.insert("i".into(), json!(i));
        }
        v.insert("equal".into(), json!(self.equal));
        v.insert("lhs".into(), self.lhs.to_json());
        v.insert("rhs".into(), self.rhs.to_json());
        if let Some(((da, db), l, r)) = &self.first_difference {
            v.insert(
                "first_difference".into(),
                json!({"deg_a": da, "deg_b": db, "lhs": l.to_json(), "rhs": r.to_json()}),
            );
        }
        serde_json::Value::Object(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;

    fn poly(terms: &[(i64, u32, u32)]) -> Poly {
        let mut p = Poly::zero();
        for &(c, da, db) in terms {
            p.add_term(&c, da, db).unwrap();
        }
        p
    }

    #[test]
    fn aggregate_examples() {
        let v = Verifier::default();
        let t3 = poly(&[(1, 2, 0), (2, 1, 1), (1, 0, 2), (1, 1, 0), (1, 0, 1)]);
        assert_eq!(v.aggregate::<i64>(FamilyId::Tlt, 3, Multiplier::Unit, Weighting::Family).unwrap(), t3);
        assert_eq!(
            v.aggregate::<i64>(FamilyId::Tlt, 3, Multiplier::Noc, Weighting::Family).unwrap(),
            poly(&[(1, 1, 1)])
        );
        assert_eq!(v.aggregate::<i64>(FamilyId::Tlt, 3, Multiplier::Oc, Weighting::Family).unwrap(), t3);
    }

    #[test]
    fn transport_examples() {
        let v = Verifier::default();
        assert_eq!(v.generate(FamilyId::Tlt, 3).unwrap().len(), 6);
        assert!(v.generators_agree(FamilyId::Tlt, 3).unwrap());
        assert_eq!(v.generate(FamilyId::AtB, 1).unwrap().len(), 2);
        assert_eq!(v.generate(FamilyId::TltSym, 2).unwrap().len(), 8);
    }

    #[test]
    fn verify_examples() {
        let v = Verifier::default();
        for n in 1..=6 {
            assert!(v.verify::<i64>("eqT", n).unwrap().iter().all(|r| r.equal));
        }
        let r = &v.verify::<i64>("conj2", 3).unwrap()[0];
        assert!(r.equal);
        assert_eq!(r.lhs, poly(&[(12, 0, 2), (28, 0, 1), (12, 0, 0)]));
        let l1 = &v.verify::<i64>("lem-L1", 1).unwrap()[0];
        assert!(l1.equal);
        assert_eq!(l1.lhs, Poly::one());
        assert_eq!(v.verify::<i64>("lem-M", 5).unwrap().len(), 3);
        assert!(matches!(v.verify::<i64>("nope", 3), Err(VerifyError::UnknownIdentity(_))));
    }

    #[test]
    fn unsupported_multiplier_is_an_error() {
        let v = Verifier::default();
        assert!(matches!(
            v.aggregate::<i64>(FamilyId::Lp, 3, Multiplier::Noc, Weighting::Family),
            Err(VerifyError::Unsupported { .. })
        ));
        assert!(matches!(
            v.aggregate::<i64>(FamilyId::Lp, 3, Multiplier::Subset(SubsetPredicate::X, 2), Weighting::Family),
            Err(VerifyError::Unsupported { .. })
        ));
    }

    #[test]
    fn oracle_bound_applies() {
        let v = Verifier::new(Source::Oracle);
        assert!(matches!(v.generate(FamilyId::Tlt, 6), Err(VerifyError::Oracle(_))));
    }

    #[test]
    fn report_json_shape() {
        let v = Verifier::default();
        let r = &v.verify::<i64>("conj1", 3).unwrap()[0];
        let j = r.to_json();
        assert_eq!(j["id"], "conj1");
        assert_eq!(j["equal"], true);
        assert_eq!(j["lhs"], serde_json::json!({"terms": [[1, 1, 1]]}));
    }

    #[test]
    fn sizes() {
        assert_eq!(FamilyId::TltSym.object_size(3), 7);
        assert_eq!(FamilyId::TltSym.index_of_size(7).unwrap(), 3);
        assert!(FamilyId::TltSym.index_of_size(6).is_err());
        assert_eq!(FamilyId::AtSym.index_of_size(6).unwrap(), 3);
        assert_eq!("at-b".parse::<FamilyId>().unwrap(), FamilyId::AtB);
    }
}
