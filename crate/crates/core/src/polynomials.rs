//! Exact bivariate polynomials in `a` and `b` with checked arithmetic, and
//! the catalog of closed forms. Univariate polynomials in `x` reuse `b`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("coefficient overflow")]
    Overflow,
    #[error("{id} is not defined at n = {n}{}", .i.map(|i| format!(", i = {i}")).unwrap_or_default())]
    OutOfRange { id: ClosedFormId, n: usize, i: Option<usize> },
    #[error("unknown closed form {0:?}")]
    UnknownClosedForm(String),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

/// Exact integer scalar usable as a polynomial coefficient.
pub trait Coefficient:
    Clone
    + Ord
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + Send
    + Sync
{
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Option<Self>;
}

impl Coefficient for i64 {
    fn to_json(&self) -> Value {
        json!(self)
    }
    fn from_json(value: &Value) -> Option<Self> {
        value.as_i64()
    }
}

impl Coefficient for i128 {
    fn to_json(&self) -> Value {
        match i64::try_from(*self) {
            Ok(v) => json!(v),
            Err(_) => json!(self.to_string()),
        }
    }
    fn from_json(value: &Value) -> Option<Self> {
        match value {
            Value::Number(n) => n.as_i64().map(i128::from),
            Value::String(s) => s.parse().ok(),
            _ => None,
        }
    }
}

impl Coefficient for BigInt {
    fn to_json(&self) -> Value {
        match self.to_i64() {
            Some(v) => json!(v),
            None => json!(self.to_string()),
        }
    }
    fn from_json(value: &Value) -> Option<Self> {
        match value {
            Value::Number(n) => n.as_i64().map(BigInt::from),
            Value::String(s) => s.parse().ok(),
            _ => None,
        }
    }
}

fn lift<C: Coefficient>(v: i64) -> Result<C, PolyError> {
    C::from_i64(v).ok_or(PolyError::Overflow)
}

/// Sparse map from `(deg_a, deg_b)` to a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BivariatePolynomial<C> {
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: Coefficient> Default for BivariatePolynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> BivariatePolynomial<C> {
    pub fn zero() -> Self {
        BivariatePolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0, 0)
    }

    pub fn monomial(coef: C, deg_a: u32, deg_b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert((deg_a, deg_b), coef);
        }
        BivariatePolynomial { terms }
    }

    pub fn constant(coef: C) -> Self {
        Self::monomial(coef, 0, 0)
    }

    pub fn from_i64(v: i64) -> Result<Self, PolyError> {
        Ok(Self::constant(lift(v)?))
    }

    pub fn a() -> Self {
        Self::monomial(C::one(), 1, 0)
    }

    pub fn b() -> Self {
        Self::monomial(C::one(), 0, 1)
    }

    /// The univariate variable, identified with `b`.
    pub fn x() -> Self {
        Self::b()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_univariate(&self) -> bool {
        self.terms.keys().all(|&(da, _)| da == 0)
    }

    pub fn coefficient(&self, deg_a: u32, deg_b: u32) -> C {
        self.terms.get(&(deg_a, deg_b)).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &C)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Terms by total degree descending, then `deg_a` descending.
    pub fn graded_terms(&self) -> Vec<((u32, u32), &C)> {
        let mut out: Vec<_> = self.terms().collect();
        out.sort_by(|((a1, b1), _), ((a2, b2), _)| (a2 + b2, a2).cmp(&(a1 + b1, a1)));
        out
    }

    pub fn add_term(&mut self, coef: &C, deg_a: u32, deg_b: u32) -> Result<(), PolyError> {
        if coef.is_zero() {
            return Ok(());
        }
        let key = (deg_a, deg_b);
        let sum = match self.terms.get(&key) {
            Some(c) => c.checked_add(coef).ok_or(PolyError::Overflow)?,
            None => coef.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = self.clone();
        for ((da, db), c) in other.terms() {
            out.add_term(c, da, db)?;
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<Self, PolyError> {
        let mut out = Self::zero();
        for (k, c) in self.terms() {
            let neg = C::zero().checked_sub(c).ok_or(PolyError::Overflow)?;
            out.terms.insert(k, neg);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = Self::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in other.terms() {
                let c = c1.checked_mul(c2).ok_or(PolyError::Overflow)?;
                out.add_term(&c, a1 + a2, b1 + b2)?;
            }
        }
        Ok(out)
    }

    pub fn checked_scale(&self, k: &C) -> Result<Self, PolyError> {
        self.checked_mul(&Self::constant(k.clone()))
    }

    pub fn scale_i64(&self, k: i64) -> Result<Self, PolyError> {
        self.checked_scale(&lift(k)?)
    }

    pub fn checked_pow(&self, k: u32) -> Result<Self, PolyError> {
        (0..k).try_fold(Self::one(), |acc, _| acc.checked_mul(self))
    }

    pub fn eval(&self, a: &C, b: &C) -> Result<C, PolyError> {
        let mut total = C::zero();
        for ((da, db), c) in self.terms() {
            let mut term = c.clone();
            for _ in 0..da {
                term = term.checked_mul(a).ok_or(PolyError::Overflow)?;
            }
            for _ in 0..db {
                term = term.checked_mul(b).ok_or(PolyError::Overflow)?;
            }
            total = total.checked_add(&term).ok_or(PolyError::Overflow)?;
        }
        Ok(total)
    }

    /// First term (in graded order) where the two polynomials disagree.
    pub fn first_difference(&self, other: &Self) -> Option<((u32, u32), C, C)> {
        let mut keys: Vec<(u32, u32)> = self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.sort_by(|(a1, b1), (a2, b2)| (a2 + b2, a2).cmp(&(a1 + b1, a1)));
        keys.dedup();
        keys.into_iter().find_map(|(da, db)| {
            let (l, r) = (self.coefficient(da, db), other.coefficient(da, db));
            (l != r).then_some(((da, db), l, r))
        })
    }

    /// `{"terms": [[coef, deg_a, deg_b], ...]}` in graded order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .graded_terms()
            .into_iter()
            .map(|((da, db), c)| json!([c.to_json(), da, db]))
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(value: &Value) -> Result<Self, PolyError> {
        let bad = |m: &str| PolyError::Json(m.to_string());
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"terms\" array"))?;
        let mut out = Self::zero();
        for t in terms {
            let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(|| bad("term must be [coef, deg_a, deg_b]"))?;
            let c = C::from_json(&t[0]).ok_or_else(|| bad("bad coefficient"))?;
            let deg = |v: &Value| v.as_u64().and_then(|d| u32::try_from(d).ok()).ok_or_else(|| bad("bad degree"));
            out.add_term(&c, deg(&t[1])?, deg(&t[2])?)?;
        }
        Ok(out)
    }

    pub fn convert<D: Coefficient>(&self) -> Result<BivariatePolynomial<D>, PolyError> {
        let mut out = BivariatePolynomial::<D>::zero();
        for ((da, db), c) in self.terms() {
            let d = D::from_json(&c.to_json()).ok_or(PolyError::Overflow)?;
            out.add_term(&d, da, db)?;
        }
        Ok(out)
    }

    /// Renders with variable `x` in place of `b`; meaningful for univariate values.
    pub fn display_x(&self) -> String {
        render(self, "a", "x")
    }
}

fn render<C: Coefficient>(p: &BivariatePolynomial<C>, va: &str, vb: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, ((da, db), c)) in p.graded_terms().into_iter().enumerate() {
        let negative = *c < C::zero();
        let magnitude = if negative { C::zero().checked_sub(c).map(|m| m.to_string()).unwrap_or_else(|| c.to_string()) } else { c.to_string() };
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut vars = String::new();
        for (v, d) in [(va, da), (vb, db)] {
            match d {
                0 => {}
                1 => vars.push_str(v),
                d => vars.push_str(&format!("{v}^{d}")),
            }
        }
        if vars.is_empty() || magnitude != "1" {
            out.push_str(&magnitude);
        }
        out.push_str(&vars);
    }
    out
}

impl<C: Coefficient> fmt::Display for BivariatePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, "a", "b"))
    }
}

/// `base (base + 1) ... (base + k - 1)`; the empty product is 1.
pub fn rising_factorial<C: Coefficient>(
    base: &BivariatePolynomial<C>,
    k: usize,
) -> Result<BivariatePolynomial<C>, PolyError> {
    let mut out = BivariatePolynomial::one();
    for j in 0..k {
        let factor = base.checked_add(&BivariatePolynomial::from_i64(j as i64)?)?;
        out = out.checked_mul(&factor)?;
    }
    Ok(out)
}

/// `(a + b)_{n-1}`, with the value 1 at `n = 0`.
pub fn plain_total<C: Coefficient>(n: usize) -> Result<BivariatePolynomial<C>, PolyError> {
    let base = BivariatePolynomial::a().checked_add(&BivariatePolynomial::b())?;
    rising_factorial(&base, n.saturating_sub(1))
}

/// `(x + 1)_{n-1}`, with the value 1 at `n = 0`.
pub fn univariate_total<C: Coefficient>(n: usize) -> Result<BivariatePolynomial<C>, PolyError> {
    let base = BivariatePolynomial::x().checked_add(&BivariatePolynomial::one())?;
    rising_factorial(&base, n.saturating_sub(1))
}

/// `2^n (x + 1)_{n-1}`.
pub fn signed_total<C: Coefficient>(n: usize) -> Result<BivariatePolynomial<C>, PolyError> {
    univariate_total(n)?.checked_mul(&power_of_two(n as u32)?)
}

fn power_of_two<C: Coefficient>(k: u32) -> Result<BivariatePolynomial<C>, PolyError> {
    BivariatePolynomial::from_i64(2)?.checked_pow(k)
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn factorial<C: Coefficient>(n: usize) -> Result<BivariatePolynomial<C>, PolyError> {
    (1..=n as i64).try_fold(BivariatePolynomial::one(), |acc, k| acc.scale_i64(k))
}

macro_rules! closed_forms {
    ($($variant:ident => $id:literal,)*) => {
        /// Named right-hand sides.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum ClosedFormId { $($variant,)* }

        impl ClosedFormId {
            pub const ALL: &'static [ClosedFormId] = &[$(ClosedFormId::$variant,)*];

            pub fn id(self) -> &'static str {
                match self { $(ClosedFormId::$variant => $id,)* }
            }
        }
    };
}

closed_forms! {
    EqT => "eqT",
    EqsT => "eqsT",
    Conj1 => "conj1",
    Conj2 => "conj2",
    Eq23 => "eq23",
    EqLn => "eqLn",
    Eq26 => "eq26",
    EqLB => "eqLB",
    LemWeightp => "lem-weightp",
    LemM => "lem-M",
    LemN => "lem-N",
    LemL => "lem-L",
    LemX => "lem-X",
    LemY => "lem-Y",
    LemLB => "lem-LB",
    LemX1 => "lem-X1",
    LemZ => "lem-Z",
    LemX2 => "lem-X2",
    LemX3 => "lem-X3",
    LemY1 => "lem-Y1",
    LemY2 => "lem-Y2",
    LemL1 => "lem-L1",
    OcCount => "oc-count",
    OcSymCount => "oc-sym-count",
    OcPoly => "oc-poly",
    OcSymPoly => "oc-sym-poly",
}

impl ClosedFormId {
    /// Whether the closed form takes the index `i`.
    pub fn takes_index(self) -> bool {
        use ClosedFormId::*;
        matches!(self, LemM | LemN | LemL | LemX | LemY | LemLB | LemX1 | LemZ | LemX2 | LemX3 | LemY1 | LemY2)
    }

    pub fn min_n(self) -> usize {
        use ClosedFormId::*;
        match self {
            Conj1 | Conj2 | LemWeightp | LemM | LemN | LemL => 3,
            LemX | LemY | LemLB | LemX1 | LemX2 | LemX3 | LemY1 | LemY2 => 2,
            _ => 1,
        }
    }

    /// Admissible indices at size `n`; empty for closed forms without one.
    pub fn index_range(self, n: usize) -> std::ops::RangeInclusive<usize> {
        use ClosedFormId::*;
        match self {
            LemM | LemN | LemL => 3..=n,
            LemZ => 1..=n,
            _ if self.takes_index() => 2..=n,
            #[allow(clippy::reversed_empty_ranges)]
            _ => 1..=0,
        }
    }

    /// True for forms in `x` alone.
    pub fn is_univariate(self) -> bool {
        use ClosedFormId::*;
        matches!(
            self,
            EqsT | Conj2 | Eq26 | EqLB | LemX | LemY | LemLB | LemX1 | LemZ | LemX2 | LemX3 | LemY1 | LemY2 | LemL1
                | OcSymPoly
        )
    }

    fn check(self, n: usize, i: Option<usize>) -> Result<(), PolyError> {
        let ok = n >= self.min_n()
            && match i {
                Some(i) => self.takes_index() && self.index_range(n).contains(&i),
                None => !self.takes_index(),
            };
        if ok {
            Ok(())
        } else {
            Err(PolyError::OutOfRange { id: self, n, i })
        }
    }
}

impl fmt::Display for ClosedFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ClosedFormId {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClosedFormId::ALL
            .iter()
            .copied()
            .find(|c| c.id() == s)
            .ok_or_else(|| PolyError::UnknownClosedForm(s.to_string()))
    }
}

/// `((n-2)ab + C(n-2,2)(a+b) + C(n-2,3)) (a+b)_{n-3}`.
fn corner_form<C: Coefficient>(n: usize) -> Result<BivariatePolynomial<C>, PolyError> {
    type P<C> = BivariatePolynomial<C>;
    let m = n as i64 - 2;
    let ab = P::<C>::a().checked_mul(&P::b())?.scale_i64(m)?;
    let apb = P::<C>::a().checked_add(&P::b())?.scale_i64(binomial(m, 2))?;
    let factor = ab.checked_add(&apb)?.checked_add(&P::from_i64(binomial(m, 3))?)?;
    factor.checked_mul(&plain_total(n - 2)?)
}

fn symmetric_corner_form<C: Coefficient>(n: usize) -> Result<BivariatePolynomial<C>, PolyError> {
    type P<C> = BivariatePolynomial<C>;
    let k = n as i64;
    let x = P::<C>::x();
    let quadratic = x.checked_pow(2)?.scale_i64(2 * k)?;
    let linear = x.scale_i64(2 * (2 * k * k - 4 * k + 1))?;
    let constant = P::from_i64((k - 2) * (k - 1) * (4 * k - 3) / 3)?;
    let factor = quadratic.checked_add(&linear)?.checked_add(&constant)?;
    factor.checked_mul(&signed_total(n - 2)?)
}

/// Exact value of the closed form `id` at `n` (and `i` where it takes one).
pub fn closed_form<C: Coefficient>(
    id: ClosedFormId,
    n: usize,
    i: Option<usize>,
) -> Result<BivariatePolynomial<C>, PolyError> {
    use ClosedFormId::*;
    type P<C> = BivariatePolynomial<C>;
    id.check(n, i)?;
    let i = i.unwrap_or(0) as i64;
    let l = univariate_total::<C>;
    let pow2 = |k: usize| power_of_two::<C>(k as u32);
    match id {
        EqT | Eq23 | EqLn | OcPoly => plain_total(n),
        EqsT | Eq26 | EqLB | OcSymPoly => signed_total(n),
        Conj1 | LemWeightp => corner_form(n),
        Conj2 => symmetric_corner_form(n),
        LemM => P::<C>::a().checked_add(&P::from_i64(i - 3)?)?.checked_mul(&plain_total(n - 1)?),
        LemN => {
            let shifted = P::<C>::a().checked_add(&P::from_i64(i - 3)?)?;
            shifted.checked_pow(2)?.checked_mul(&plain_total(n - 2)?)
        }
        LemL => closed_form::<C>(LemM, n, Some(i as usize))?
            .checked_sub(&closed_form(LemN, n, Some(i as usize))?),
        LemX => {
            let first = l(n)?;
            let second = l(n - 1)?.scale_i64(i - 1)?;
            first.checked_sub(&second)?.checked_mul(&pow2(n - 2)?)
        }
        LemY => {
            let first = l(n - 1)?.scale_i64(i - 2)?;
            let second = l(n - 2)?.scale_i64((i - 2) * (i - 2))?;
            first.checked_sub(&second)?.checked_mul(&pow2(n - 2)?)
        }
        LemLB => closed_form::<C>(LemX, n, Some(i as usize))?
            .checked_add(&closed_form(LemY, n, Some(i as usize))?),
        LemX1 => l(n)?.checked_mul(&pow2(n - 2)?),
        LemZ | LemL1 => l(n)?.checked_mul(&pow2(n - 1)?),
        LemX2 | LemY1 => l(n - 1)?.scale_i64(i - 2)?.checked_mul(&pow2(n - 2)?),
        LemX3 => l(n - 1)?.checked_mul(&pow2(n - 2)?),
        LemY2 => l(n - 2)?.scale_i64((i - 2) * (i - 2))?.checked_mul(&pow2(n - 2)?),
        OcCount => factorial(n),
        OcSymCount => factorial(n)?.checked_mul(&pow2(n)?),
    }
}
