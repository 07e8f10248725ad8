//! Weight distributions of codes and cosets from the dual code.
//!
//! With `P_j(i; n)` the Krawtchouk values, a code of dimension `K` whose dual
//! has distribution `B` has
//!
//! ```text
//! A_j = 2^(K-n) Σ_i B_i P_j(i; n)
//! ```
//!
//! and its coset `A + a` has `d_j = 2^(K-n) Σ_i (2 b_i - B_i) P_j(i; n)`, where
//! `b_i` counts dual words of weight `i` orthogonal to `a`. Every division by
//! `2^(n-K)` is checked to be exact.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bfcore::TruthTable;
use crate::error::{Error, Result};
use crate::krawtchouk::{binomial, cached_row, central_k};
use crate::limits::Limits;
use crate::rmcodes::{pow2, rm_membership, rm_weight_distribution, RmParams, WeightDistribution};

/// A coset `code + rep` with `rep` outside the code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSpec {
    code: RmParams,
    rep: TruthTable,
}

impl CosetSpec {
    pub fn new(code: RmParams, rep: TruthTable) -> Result<Self> {
        if rep.vars() != code.vars() {
            return Err(Error::VarMismatch(rep.vars(), code.vars()));
        }
        if rm_membership(&rep, &code) {
            return Err(Error::RepInCode);
        }
        Ok(Self { code, rep })
    }

    pub fn code(&self) -> &RmParams {
        &self.code
    }

    pub fn rep(&self) -> &TruthTable {
        &self.rep
    }
}

/// JSON input form `{"k": .., "m": .., "rep_hex": ".."}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CosetSpecJson {
    pub k: u32,
    pub m: u32,
    pub rep_hex: String,
}

impl TryFrom<CosetSpecJson> for CosetSpec {
    type Error = Error;

    fn try_from(raw: CosetSpecJson) -> Result<Self> {
        let code = RmParams::new(raw.k, raw.m)?;
        CosetSpec::new(code, TruthTable::from_hex(raw.m, &raw.rep_hex)?)
    }
}

impl From<&CosetSpec> for CosetSpecJson {
    fn from(spec: &CosetSpec) -> Self {
        Self {
            k: spec.code.order().unwrap_or(0),
            m: spec.code.vars(),
            rep_hex: spec.rep.to_hex(),
        }
    }
}

/// Weight distribution `b` of the dual words orthogonal to a representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CosetDualProfile {
    b: WeightDistribution,
}

impl CosetDualProfile {
    pub fn new(b: WeightDistribution) -> Self {
        Self { b }
    }

    pub fn length(&self) -> u64 {
        self.b.length()
    }

    pub fn count(&self, weight: u64) -> BigUint {
        self.b.count(weight)
    }

    pub fn as_distribution(&self) -> &WeightDistribution {
        &self.b
    }
}

/// Counts, by weight, the dual codewords with even intersection with the
/// representative.
pub fn coset_dual_profile(spec: &CosetSpec, limits: &Limits) -> Result<CosetDualProfile> {
    let dual = spec.code.dual();
    limits.check_dim("dual enumeration", dual.dimension())?;
    let hist = dual.span().orthogonal_histogram(&spec.rep);
    let b = WeightDistribution::from_histogram(&hist);
    // rep ∉ code, so exactly half of the dual is orthogonal to it.
    let expected = pow2(dual.dimension() - 1);
    if b.total() != expected {
        return Err(Error::Inconsistent(format!(
            "orthogonal dual words total {}, expected {expected}",
            b.total()
        )));
    }
    Ok(CosetDualProfile { b })
}

fn check_dual_total(dual: &WeightDistribution, dim: u64, n: u64) -> Result<()> {
    if dual.length() != n {
        return Err(Error::Inconsistent(format!(
            "dual distribution has length {}, expected {n}",
            dual.length()
        )));
    }
    if dim > n {
        return Err(Error::InvalidParams(format!(
            "dimension {dim} exceeds length {n}"
        )));
    }
    if dual.total() != pow2(n - dim) {
        return Err(Error::Inconsistent(format!(
            "dual distribution sums to {}, expected 2^{}",
            dual.total(),
            n - dim
        )));
    }
    Ok(())
}

/// `Σ_i c_i P_j(i; n) / 2^(n - dim)` for every `j`.
fn krawtchouk_transform(
    coeffs: impl IntoIterator<Item = (u64, BigInt)>,
    dim: u64,
    n: u64,
) -> Result<WeightDistribution> {
    let mut sums = vec![BigInt::zero(); n as usize + 1];
    for (i, c) in coeffs {
        if c.is_zero() {
            continue;
        }
        let row = cached_row(i, n)?;
        for (s, p) in sums.iter_mut().zip(row.iter()) {
            if !p.is_zero() {
                *s += &c * p;
            }
        }
    }
    let shift = n - dim;
    let mut out = WeightDistribution::empty(n);
    for (j, s) in sums.into_iter().enumerate() {
        if s.is_negative() {
            return Err(Error::Inconsistent(format!(
                "negative count {s} at weight {j}"
            )));
        }
        let value = s.magnitude();
        if value.trailing_zeros().is_some_and(|tz| tz < shift) {
            return Err(Error::Inexact(format!(
                "weight {j}: {value} is not divisible by 2^{shift}"
            )));
        }
        out.add(j as u64, value >> shift)?;
    }
    Ok(out)
}

/// The code's distribution from its dual's distribution `dual`, where `dim`
/// is the code's own dimension and `n` the length.
pub fn macwilliams(dual: &WeightDistribution, dim: u64, n: u64) -> Result<WeightDistribution> {
    check_dual_total(dual, dim, n)?;
    krawtchouk_transform(
        dual.nonzero().map(|(i, c)| (i, BigInt::from(c.clone()))),
        dim,
        n,
    )
}

fn check_profile(profile: &CosetDualProfile, dual: &WeightDistribution) -> Result<()> {
    if profile.length() != dual.length() {
        return Err(Error::Inconsistent(
            "profile and dual lengths differ".into(),
        ));
    }
    for (i, b) in profile.b.nonzero() {
        if *b > dual.count(i) {
            return Err(Error::Inconsistent(format!(
                "b[{i}] = {b} exceeds B[{i}] = {}",
                dual.count(i)
            )));
        }
    }
    Ok(())
}

/// The coset's distribution from the orthogonal profile `b` and the dual's
/// distribution `dual`; `dim` is the code's dimension.
pub fn assmus_mattson(
    profile: &CosetDualProfile,
    dual: &WeightDistribution,
    dim: u64,
    n: u64,
) -> Result<WeightDistribution> {
    check_dual_total(dual, dim, n)?;
    check_profile(profile, dual)?;
    let coeffs = dual.nonzero().map(|(i, big_b)| {
        let b = BigInt::from(profile.count(i));
        (i, 2 * b - BigInt::from(big_b.clone()))
    });
    krawtchouk_transform(coeffs, dim, n)
}

/// `B(k, m) - d_{n/2} = 2^(K - n + 1) Σ_i (B_i - b_i) K(i, n)`, evaluated with
/// the central Krawtchouk values directly.
pub fn balanced_gap(
    dual: &WeightDistribution,
    profile: &CosetDualProfile,
    dim: u64,
    n: u64,
) -> Result<BigInt> {
    if !n.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("length {n} must be even")));
    }
    check_dual_total(dual, dim, n)?;
    check_profile(profile, dual)?;
    let mut sum = BigInt::zero();
    for (i, big_b) in dual.nonzero() {
        let diff = BigInt::from(big_b.clone()) - BigInt::from(profile.count(i));
        if !diff.is_zero() {
            sum += diff * central_k(i, n)?;
        }
    }
    // exponent K - n + 1
    let exp = dim as i64 - n as i64 + 1;
    if exp >= 0 {
        return Ok(sum << exp as u64);
    }
    let shift = exp.unsigned_abs();
    if sum
        .magnitude()
        .trailing_zeros()
        .is_some_and(|tz| tz < shift)
    {
        return Err(Error::Inexact(format!(
            "gap sum {sum} is not divisible by 2^{shift}"
        )));
    }
    let magnitude = sum.magnitude() >> shift;
    Ok(BigInt::from_biguint(
        if sum.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        },
        magnitude,
    ))
}

/// `(B(m-2, m), d_{n/2})` for the extended Hamming code `RM(m-2, m)` and its
/// cosets inside `RM(m-1, m)`:
/// `((C(n, n/2) + (n-1) C(n/2, n/4)) / n, (C(n, n/2) - C(n/2, n/4)) / n)`.
pub fn hamming_closed_forms(m: u32) -> Result<(BigUint, BigUint)> {
    if !(3..=crate::bfcore::MAX_VARS).contains(&m) {
        return Err(Error::InvalidParams(format!(
            "closed forms need 3 ≤ m ≤ 28, got {m}"
        )));
    }
    let n = 1u64 << m;
    let middle = binomial(n, (n / 2) as i64);
    let quarter = binomial(n / 2, (n / 4) as i64);
    let code = (&middle + (n - 1) * &quarter) >> m;
    let coset = (middle - quarter) >> m;
    Ok((code, coset))
}

/// `RM(k, m)`'s distribution via the identity applied to its enumerated dual.
pub fn rm_distribution_via_dual(p: &RmParams, limits: &Limits) -> Result<WeightDistribution> {
    let dual = rm_weight_distribution(&p.dual(), limits)?;
    macwilliams(&dual, p.dimension(), p.length())
}

/// Coset distribution via the enumerated dual and the orthogonal profile.
pub fn coset_distribution_via_dual(
    spec: &CosetSpec,
    limits: &Limits,
) -> Result<WeightDistribution> {
    let dual = rm_weight_distribution(&spec.code.dual(), limits)?;
    let profile = coset_dual_profile(spec, limits)?;
    assmus_mattson(&profile, &dual, spec.code.dimension(), spec.code.length())
}
