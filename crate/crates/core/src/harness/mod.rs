//! Verification workflows over whole families of cosets.
//!
//! Each `verify_*` function checks one statement about balanced words by
//! exhaustive enumeration of cosets (or seeded sampling, labelled as such)
//! and returns a [`Verdict`]. On failure the witness is the first failing
//! representative in the deterministic enumeration order.

mod census;

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bfcore::TruthTable;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rmcodes::{is_doubly_even, rm_membership, RmParams, WeightDistribution};
use crate::spectral::rm1_coset_balanced_count;
use crate::transforms::hamming_closed_forms;

pub use census::{
    balanced_count_of_coset, coset_census, coset_representatives, CensusEntry, CensusOptions,
    CosetCensus, CosetEngine, Method, Representatives, Scope,
};

/// The statements the harness can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    /// `RM(k, m)` with `k ≥ ⌈(m-1)/2⌉` has strictly more balanced words than
    /// any of its nontrivial cosets.
    Theorem5,
    /// `RM(k, m)` has more balanced words than any other coset in
    /// `RM(k+1, m) / RM(k, m)`.
    Conjecture,
    /// Nontrivial cosets of `RM(1, m)` have fewer than `2^(m+1) - 2` balanced words.
    Rm1,
    /// Cosets of `RM(m-2, m)` outside `RM(m-1, m)` have no balanced words.
    Oddweight,
    /// Nontrivial cosets of `RM(m-2, m)` inside `RM(m-1, m)` share one distribution.
    Equidist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

/// Whether a claim is a theorem being re-checked or an open statement
/// tested only on the given parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Label {
    Theorem,
    Empirical,
}

/// Machine-readable outcome of one verification run.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub claim: Claim,
    pub params: BTreeMap<String, Value>,
    pub mode: Mode,
    pub label: Label,
    pub method: Method,
    pub pass: bool,
    /// Balanced words in the code itself (or the bound being compared against).
    pub code_count: String,
    /// Largest balanced count among the tested cosets.
    pub max_other: String,
    pub witness_hex: Option<String>,
    pub details: BTreeMap<String, String>,
    pub elapsed_ms: u64,
}

impl Verdict {
    /// Zeroes the timing so reports compare byte for byte.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = 0;
        self
    }
}

struct VerdictBuilder {
    claim: Claim,
    params: BTreeMap<String, Value>,
    started: Instant,
}

impl VerdictBuilder {
    fn new(claim: Claim, params: Value) -> Self {
        let params = match params {
            Value::Object(map) => map.into_iter().collect(),
            _ => BTreeMap::new(),
        };
        Self {
            claim,
            params,
            started: Instant::now(),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn finish(
        self,
        mode: Mode,
        label: Label,
        method: Method,
        code_count: &BigUint,
        max_other: &BigUint,
        witness: Option<&TruthTable>,
        details: BTreeMap<String, String>,
    ) -> Verdict {
        Verdict {
            claim: self.claim,
            params: self.params,
            mode,
            label,
            method,
            pass: witness.is_none(),
            code_count: code_count.to_string(),
            max_other: max_other.to_string(),
            witness_hex: witness.map(TruthTable::to_hex),
            details,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

fn max_of(census: &CosetCensus) -> BigUint {
    census
        .max_other()
        .map(|e| e.balanced.clone())
        .unwrap_or_default()
}

/// Smallest order covered by the strict-maximum theorem: `⌈(m-1)/2⌉`.
pub fn theorem_min_order(m: u32) -> u32 {
    m / 2
}

/// Checks that `RM(k, m)` has strictly more balanced words than each of its
/// `2^(n-K) - 1` nontrivial cosets.
///
/// With the transform method every coset's gap is also evaluated by the
/// closed gap formula and must equal the difference of the two counts and be
/// positive.
pub fn verify_theorem_basic(
    k: u32,
    m: u32,
    options: &CensusOptions,
    limits: &Limits,
) -> Result<Verdict> {
    let builder = VerdictBuilder::new(Claim::Theorem5, json!({ "k": k, "m": m }));
    let code = RmParams::new(k, m)?;
    if k >= m {
        return Err(Error::InvalidParams(format!(
            "{code} has no nontrivial cosets"
        )));
    }
    if k < theorem_min_order(m) {
        return Err(Error::Hypothesis(format!(
            "k ≥ ⌈(m-1)/2⌉ = {} required, got k = {k}",
            theorem_min_order(m)
        )));
    }
    let census = coset_census(&code, Scope::FullSpace, options, limits)?;
    let code_count = census.code_balanced_count.clone();
    let mut details = BTreeMap::new();
    details.insert("cosets".into(), census.entries.len().to_string());

    let mut witness = None;
    if census.method == Method::Transform {
        let engine = CosetEngine::new(&code, Method::Transform, limits)?;
        let dual = engine.dual_distribution().expect("transform engine");
        details.insert("dual_doubly_even".into(), is_doubly_even(dual).to_string());
        let code_big = BigInt::from(code_count.clone());
        let mut consistent = true;
        let mut min_gap: Option<BigInt> = None;
        for e in &census.entries {
            let gap = e.gap.as_ref().expect("transform census records gaps");
            if *gap != &code_big - BigInt::from(e.balanced.clone()) {
                consistent = false;
                witness.get_or_insert_with(|| e.rep.clone());
            }
            if min_gap.as_ref().is_none_or(|g| gap < g) {
                min_gap = Some(gap.clone());
            }
        }
        details.insert("gap_formula_consistent".into(), consistent.to_string());
        if let Some(g) = min_gap {
            details.insert("min_gap".into(), g.to_string());
        }
    }
    if let Some(e) = census.entries.iter().find(|e| e.balanced >= code_count) {
        witness = Some(match witness {
            Some(w) => w,
            None => e.rep.clone(),
        });
    }
    let max_other = max_of(&census);
    Ok(builder.finish(
        Mode::Exhaustive,
        Label::Theorem,
        census.method,
        &code_count,
        &max_other,
        witness.as_ref(),
        details,
    ))
}

/// Checks that `RM(k, m)` strictly beats every other coset in
/// `RM(k+1, m) / RM(k, m)`. The verdict is labelled empirical: it covers only
/// the parameters tested.
pub fn verify_quotient_conjecture(
    k: u32,
    m: u32,
    options: &CensusOptions,
    limits: &Limits,
) -> Result<Verdict> {
    let builder = VerdictBuilder::new(Claim::Conjecture, json!({ "k": k, "m": m }));
    if k == 0 {
        return Err(Error::InvalidParams(
            "the quotient statement needs k > 0".into(),
        ));
    }
    let code = RmParams::new(k, m)?;
    let census = coset_census(&code, Scope::WithinNextOrder, options, limits)?;
    let code_count = census.code_balanced_count.clone();
    let witness = census
        .entries
        .iter()
        .find(|e| e.balanced >= code_count)
        .map(|e| e.rep.clone());
    let mut details = BTreeMap::new();
    details.insert("cosets".into(), census.entries.len().to_string());
    Ok(builder.finish(
        Mode::Exhaustive,
        Label::Empirical,
        census.method,
        &code_count,
        &max_of(&census),
        witness.as_ref(),
        details,
    ))
}

/// How `verify_rm1_proposition` chooses functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampling {
    /// Every function for `m ≤ 3`, one representative per coset for `m = 4`.
    Exhaustive,
    /// Seeded random non-affine functions.
    Sampled { count: u64, seed: u64 },
}

fn random_table(m: u32, rng: &mut ChaCha8Rng) -> TruthTable {
    let words = (1usize << m).div_ceil(64);
    TruthTable::from_words(m, (0..words).map(|_| rng.next_u64()).collect())
}

/// Checks that every tested non-affine `f` has fewer than `2^(m+1) - 2`
/// balanced words in `RM(1, m) + f`, counting by Walsh spectrum zeros.
/// Exhaustive runs cross-check each count against enumeration.
pub fn verify_rm1_proposition(m: u32, sampling: Sampling, limits: &Limits) -> Result<Verdict> {
    let params = match sampling {
        Sampling::Exhaustive => json!({ "m": m }),
        Sampling::Sampled { count, seed } => json!({ "m": m, "samples": count, "seed": seed }),
    };
    let builder = VerdictBuilder::new(Claim::Rm1, params);
    if m < 2 {
        return Err(Error::InvalidParams(
            "every function of one variable is affine".into(),
        ));
    }
    let code = RmParams::new(1, m)?;
    let bound = BigUint::from((1u64 << (m + 1)) - 2);
    let mut max_other = 0u64;
    let mut witness = None;
    let mut tested = 0u64;
    let mut cross_checked = 0u64;
    let mut disagreements = 0u64;
    let mut consider = |f: &TruthTable, cross_check: bool| -> Result<()> {
        let count = rm1_coset_balanced_count(f);
        tested += 1;
        if cross_check {
            cross_checked += 1;
            if balanced_count_of_coset(&code, f, limits)? != BigUint::from(count) {
                disagreements += 1;
                witness.get_or_insert_with(|| f.clone());
            }
        }
        max_other = max_other.max(count);
        if BigUint::from(count) >= bound {
            witness.get_or_insert_with(|| f.clone());
        }
        Ok(())
    };
    let mode = match sampling {
        Sampling::Exhaustive => {
            match m {
                2 | 3 => {
                    for code_bits in 0u64..1 << (1u32 << m) {
                        let f = TruthTable::from_fn(m, |i| code_bits >> i & 1 == 1)?;
                        if !rm_membership(&f, &code) {
                            consider(&f, true)?;
                        }
                    }
                }
                4 => {
                    for (_, f) in Representatives::new(&code, Scope::FullSpace, limits)?.iter() {
                        consider(&f, true)?;
                    }
                }
                _ => {
                    return Err(Error::InvalidParams(format!(
                        "exhaustive mode covers m ≤ 4, got {m}"
                    )))
                }
            }
            Mode::Exhaustive
        }
        Sampling::Sampled { count, seed } => {
            if m > 16 {
                return Err(Error::InvalidParams(format!(
                    "sampled mode covers m ≤ 16, got {m}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut drawn = 0;
            while drawn < count {
                let f = random_table(m, &mut rng);
                if rm_membership(&f, &code) {
                    continue;
                }
                drawn += 1;
                consider(&f, m <= 3)?;
            }
            Mode::Sampled
        }
    };
    let mut details = BTreeMap::new();
    details.insert("functions".into(), tested.to_string());
    details.insert("cross_checked".into(), cross_checked.to_string());
    details.insert(
        "cross_check_disagreements".into(),
        disagreements.to_string(),
    );
    Ok(builder.finish(
        mode,
        Label::Theorem,
        Method::Spectral,
        &bound,
        &BigUint::from(max_other),
        witness.as_ref(),
        details,
    ))
}

fn hamming_code(m: u32) -> Result<RmParams> {
    if !(3..=5).contains(&m) {
        return Err(Error::InvalidParams(format!("m must be in 3..=5, got {m}")));
    }
    RmParams::new(m - 2, m)
}

/// Checks that each coset of `RM(m-2, m)` with an odd-weight representative
/// (exactly the cosets outside `RM(m-1, m)`) has only odd-weight words.
pub fn verify_oddweight_cosets(m: u32, method: Method, limits: &Limits) -> Result<Verdict> {
    let builder = VerdictBuilder::new(Claim::Oddweight, json!({ "m": m }));
    let code = hamming_code(m)?;
    let engine = CosetEngine::new(&code, method, limits)?;
    let reps = Representatives::new(&code, Scope::FullSpace, limits)?;
    let mut tested = 0u64;
    let mut max_other = BigUint::zero();
    let mut witness = None;
    for (_, rep) in reps.iter().filter(|(_, r)| r.weight() % 2 == 1) {
        tested += 1;
        let d = engine.distribution(&rep)?;
        max_other = max_other.max(d.balanced());
        if d.nonzero().any(|(w, _)| w % 2 == 0) {
            witness.get_or_insert(rep);
        }
    }
    let code_count = engine.balanced(&TruthTable::zero(m)?)?;
    let mut details = BTreeMap::new();
    details.insert("cosets".into(), tested.to_string());
    Ok(builder.finish(
        Mode::Exhaustive,
        Label::Theorem,
        engine.method(),
        &code_count,
        &max_other,
        witness.as_ref(),
        details,
    ))
}

/// Checks that all nontrivial cosets of `RM(m-2, m)` inside `RM(m-1, m)` have
/// the same full weight distribution.
pub fn verify_hamming_coset_equidistribution(
    m: u32,
    method: Method,
    limits: &Limits,
) -> Result<Verdict> {
    let builder = VerdictBuilder::new(Claim::Equidist, json!({ "m": m }));
    let code = hamming_code(m)?;
    let engine = CosetEngine::new(&code, method, limits)?;
    let reps = Representatives::new(&code, Scope::WithinNextOrder, limits)?;
    let mut common: Option<WeightDistribution> = None;
    let mut witness = None;
    for (_, rep) in reps.iter() {
        let d = engine.distribution(&rep)?;
        match &common {
            None => common = Some(d),
            Some(c) if *c != d => {
                witness.get_or_insert(rep);
            }
            Some(_) => {}
        }
    }
    let common = common.expect("at least one coset");
    let code_count = engine.balanced(&TruthTable::zero(m)?)?;
    let (closed_code, closed_coset) = hamming_closed_forms(m)?;
    let mut details = BTreeMap::new();
    details.insert("cosets".into(), reps.count().to_string());
    details.insert(
        "common_distribution".into(),
        serde_json::to_string(&common)?,
    );
    details.insert(
        "closed_form_agrees".into(),
        (closed_code == code_count && closed_coset == common.balanced()).to_string(),
    );
    Ok(builder.finish(
        Mode::Exhaustive,
        Label::Theorem,
        engine.method(),
        &code_count,
        &common.balanced(),
        witness.as_ref(),
        details,
    ))
}
