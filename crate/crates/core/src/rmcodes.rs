//! Reed–Muller code parameters, codeword enumeration and weight distributions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bfcore::{monomials_up_to, AnfMonomialSet, TruthTable, MAX_VARS};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::span::Span;

/// Identifies `RM(k, m)`, or the zero code `{0}` of length `2^m`.
///
/// The zero code is the dual of `RM(m, m)` and has no order of its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RmParams {
    k: u32,
    m: u32,
    zero_code: bool,
}

impl RmParams {
    pub fn new(k: u32, m: u32) -> Result<Self> {
        if !(1..=MAX_VARS).contains(&m) {
            return Err(Error::InvalidParams(format!(
                "m = {m} outside 1..={MAX_VARS}"
            )));
        }
        if k > m {
            return Err(Error::InvalidParams(format!(
                "order k = {k} exceeds m = {m}"
            )));
        }
        Ok(Self {
            k,
            m,
            zero_code: false,
        })
    }

    /// The zero-dimensional code `{0}` of length `2^m`.
    pub fn zero_code(m: u32) -> Result<Self> {
        let mut p = Self::new(0, m)?;
        p.zero_code = true;
        Ok(p)
    }

    /// The order `k`; `None` for the zero code.
    pub fn order(&self) -> Option<u32> {
        (!self.zero_code).then_some(self.k)
    }

    pub fn vars(&self) -> u32 {
        self.m
    }

    pub fn is_zero_code(&self) -> bool {
        self.zero_code
    }

    /// Code length `n = 2^m`.
    pub fn length(&self) -> u64 {
        1 << self.m
    }

    /// `K = Σ_{j ≤ k} C(m, j)`.
    pub fn dimension(&self) -> u64 {
        if self.zero_code {
            return 0;
        }
        let mut total = 0u64;
        let mut c = 1u64;
        for j in 0..=u64::from(self.k) {
            total += c;
            c = c * (u64::from(self.m) - j) / (j + 1);
        }
        total
    }

    /// `RM(m - k - 1, m)`; the dual of `RM(m, m)` is the zero code and vice versa.
    pub fn dual(&self) -> Self {
        match self.order() {
            None => Self::new(self.m, self.m).expect("valid m"),
            Some(k) if k == self.m => Self::zero_code(self.m).expect("valid m"),
            Some(k) => Self::new(self.m - k - 1, self.m).expect("valid order"),
        }
    }

    /// Monomial basis of degree ≤ k in graded-lex order.
    pub fn basis(&self) -> Vec<TruthTable> {
        let Some(k) = self.order() else {
            return Vec::new();
        };
        monomials_up_to(self.m, k)
            .into_iter()
            .map(|mono| {
                let anf = AnfMonomialSet::new(self.m, [mono]).expect("monomial within m");
                TruthTable::from_anf(&anf).expect("valid m")
            })
            .collect()
    }

    pub(crate) fn span(&self) -> Span {
        Span::new(self.m, self.basis())
    }
}

impl fmt::Display for RmParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order() {
            Some(k) => write!(f, "RM({k},{})", self.m),
            None => write!(f, "{{0}} of length {}", self.length()),
        }
    }
}

/// Exact number of words of each weight `0..=n`.
///
/// Stored sparsely; the dense form appears only in serialization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightDistribution {
    n: u64,
    counts: BTreeMap<u64, BigUint>,
}

impl WeightDistribution {
    pub fn empty(n: u64) -> Self {
        Self {
            n,
            counts: BTreeMap::new(),
        }
    }

    pub fn from_dense<T: Into<BigUint> + Clone>(counts: &[T]) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidParams(
                "distribution needs n + 1 entries".into(),
            ));
        }
        let mut d = Self::empty(counts.len() as u64 - 1);
        for (i, c) in counts.iter().enumerate() {
            d.add(i as u64, c.clone().into())?;
        }
        Ok(d)
    }

    /// From `(weight, count)` pairs; repeated weights accumulate.
    pub fn from_pairs(n: u64, pairs: impl IntoIterator<Item = (u64, BigUint)>) -> Result<Self> {
        let mut d = Self::empty(n);
        for (w, c) in pairs {
            d.add(w, c)?;
        }
        Ok(d)
    }

    pub(crate) fn from_histogram(hist: &[u64]) -> Self {
        let mut d = Self::empty(hist.len() as u64 - 1);
        for (i, &c) in hist.iter().enumerate() {
            if c != 0 {
                d.counts.insert(i as u64, BigUint::from(c));
            }
        }
        d
    }

    pub fn add(&mut self, weight: u64, count: BigUint) -> Result<()> {
        if weight > self.n {
            return Err(Error::InvalidParams(format!(
                "weight {weight} exceeds length {}",
                self.n
            )));
        }
        if !count.is_zero() {
            *self.counts.entry(weight).or_default() += count;
        }
        Ok(())
    }

    /// Componentwise sum; used to merge partial distributions.
    pub fn merge(&mut self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Inconsistent(format!(
                "merging lengths {} and {}",
                self.n, other.n
            )));
        }
        for (&w, c) in &other.counts {
            *self.counts.entry(w).or_default() += c;
        }
        Ok(())
    }

    pub fn length(&self) -> u64 {
        self.n
    }

    pub fn count(&self, weight: u64) -> BigUint {
        self.counts.get(&weight).cloned().unwrap_or_default()
    }

    /// Nonzero entries in increasing weight.
    pub fn nonzero(&self) -> impl Iterator<Item = (u64, &BigUint)> {
        self.counts.iter().map(|(&w, c)| (w, c))
    }

    pub fn dense(&self) -> Vec<BigUint> {
        (0..=self.n).map(|w| self.count(w)).collect()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Words of weight `n / 2`.
    pub fn balanced(&self) -> BigUint {
        self.count(self.n / 2)
    }

    pub fn is_symmetric(&self) -> bool {
        self.counts
            .iter()
            .all(|(&w, c)| self.count(self.n - w) == *c)
    }
}

#[derive(Serialize, Deserialize)]
struct DistributionJson {
    n: u64,
    counts: Vec<String>,
}

impl Serialize for WeightDistribution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DistributionJson {
            n: self.n,
            counts: self.dense().iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightDistribution {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DistributionJson::deserialize(d)?;
        if raw.counts.len() as u64 != raw.n + 1 {
            return Err(D::Error::custom(format!(
                "expected {} counts, got {}",
                raw.n + 1,
                raw.counts.len()
            )));
        }
        let mut out = Self::empty(raw.n);
        for (w, c) in raw.counts.iter().enumerate() {
            let value: BigUint = c
                .parse()
                .map_err(|_| D::Error::custom(format!("count {c:?} is not a decimal integer")))?;
            out.add(w as u64, value).map_err(D::Error::custom)?;
        }
        Ok(out)
    }
}

pub fn rm_dimension(p: &RmParams) -> u64 {
    p.dimension()
}

pub fn dual_params(p: &RmParams) -> RmParams {
    p.dual()
}

/// Iterator over all `2^K` codewords in Gray-code order over the monomial
/// basis: consecutive codewords differ by exactly one basis vector.
pub struct RmIter {
    basis: Vec<TruthTable>,
    current: TruthTable,
    step: u64,
    total: u64,
}

impl Iterator for RmIter {
    type Item = TruthTable;

    fn next(&mut self) -> Option<TruthTable> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            let row = &self.basis[self.step.trailing_zeros() as usize];
            self.current.xor_assign(row).expect("basis shares m");
        }
        self.step += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.total - self.step).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

pub fn rm_iterate(p: &RmParams, limits: &Limits) -> Result<RmIter> {
    limits.check_dim("codeword enumeration", p.dimension())?;
    let basis = p.basis();
    Ok(RmIter {
        total: 1u64 << basis.len(),
        basis,
        current: TruthTable::zero(p.vars())?,
        step: 0,
    })
}

/// Weight distribution by exhaustive, sharded enumeration.
pub fn rm_weight_distribution(p: &RmParams, limits: &Limits) -> Result<WeightDistribution> {
    coset_weight_distribution(p, &TruthTable::zero(p.vars())?, limits)
}

/// Weight distribution of `code + rep` by exhaustive enumeration.
pub fn coset_weight_distribution(
    code: &RmParams,
    rep: &TruthTable,
    limits: &Limits,
) -> Result<WeightDistribution> {
    if rep.vars() != code.vars() {
        return Err(Error::VarMismatch(rep.vars(), code.vars()));
    }
    limits.check_dim("codeword enumeration", code.dimension())?;
    Ok(WeightDistribution::from_histogram(
        &code.span().weight_histogram(rep),
    ))
}

/// `⌊(m - 1) / k⌋`: every weight in `RM(k, m)` is divisible by `2^` this.
pub fn mceliece_exponent(p: &RmParams) -> Result<u32> {
    match p.order() {
        Some(k) if k >= 1 => Ok((p.vars() - 1) / k),
        _ => Err(Error::InvalidParams(
            "divisibility exponent needs order k ≥ 1".into(),
        )),
    }
}

/// Enumerates the code and checks every weight against the divisibility bound.
pub fn mceliece_check(p: &RmParams, limits: &Limits) -> Result<bool> {
    let modulus = 1u64 << mceliece_exponent(p)?;
    let dist = rm_weight_distribution(p, limits)?;
    let divisible = dist.nonzero().all(|(w, _)| w % modulus == 0);
    Ok(divisible)
}

pub fn is_doubly_even(d: &WeightDistribution) -> bool {
    d.nonzero().all(|(w, _)| w % 4 == 0)
}

/// Membership by algebraic degree of the table.
pub fn rm_membership(t: &TruthTable, p: &RmParams) -> bool {
    if t.vars() != p.vars() {
        return false;
    }
    match (t.degree(), p.order()) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(d), Some(k)) => d <= k,
    }
}

/// `2^exp` as a big integer.
pub(crate) fn pow2(exp: u64) -> BigUint {
    BigUint::one() << exp
}
