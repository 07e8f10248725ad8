use std::collections::{BTreeMap, HashMap};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bfcore::{monomials_of_degree, AnfMonomialSet, TruthTable};
use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::rmcodes::{rm_weight_distribution, RmParams, WeightDistribution};
use crate::span::Span;
use crate::spectral::rm1_coset_balanced_count;
use crate::transforms::{assmus_mattson, balanced_gap, macwilliams, CosetDualProfile};

/// How coset distributions are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    /// Enumerate every word of the coset.
    Brute,
    /// Enumerate the dual and apply the coset identity.
    Transform,
    /// Walsh spectrum zeros; first-order codes only.
    Spectral,
    /// Whichever of `Brute` and `Transform` enumerates fewer words.
    Auto,
}

impl Method {
    pub fn resolve(self, code: &RmParams) -> Method {
        match self {
            Method::Auto if code.dimension() <= code.dual().dimension() => Method::Brute,
            Method::Auto => Method::Transform,
            other => other,
        }
    }
}

/// Which cosets a census covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Scope {
    /// All cosets of the code in `F_2^n`.
    FullSpace,
    /// Cosets of `RM(k, m)` inside `RM(k + 1, m)`.
    WithinNextOrder,
}

/// Nontrivial coset representatives, addressed by id `1..=count`.
///
/// Id `t` is the XOR of the generators selected by the bits of `t`, so
/// distinct ids give distinct cosets.
#[derive(Clone, Debug)]
pub struct Representatives {
    generators: Vec<TruthTable>,
}

impl Representatives {
    pub fn new(code: &RmParams, scope: Scope, limits: &Limits) -> Result<Self> {
        let generators = match scope {
            Scope::FullSpace => {
                limits::check(
                    "full-space cosets",
                    code.length() - code.dimension(),
                    limits.max_full_space_cosets,
                )?;
                complement_generators(code)?
            }
            Scope::WithinNextOrder => {
                let k = code.order().ok_or_else(|| {
                    Error::InvalidParams("the zero code has no next order".into())
                })?;
                if k >= code.vars() {
                    return Err(Error::InvalidParams(format!(
                        "RM({k},{m}) has no next order",
                        m = code.vars()
                    )));
                }
                let monos = monomials_of_degree(code.vars(), k + 1);
                limits::check(
                    "next-order cosets",
                    monos.len() as u64,
                    limits.max_next_order_cosets,
                )?;
                monos
                    .into_iter()
                    .map(|mono| TruthTable::from_anf(&AnfMonomialSet::new(code.vars(), [mono])?))
                    .collect::<Result<_>>()?
            }
        };
        Ok(Self { generators })
    }

    /// Number of nontrivial cosets.
    pub fn count(&self) -> u64 {
        (1u64 << self.generators.len()) - 1
    }

    pub fn get(&self, id: u64) -> TruthTable {
        assert!(
            (1..=self.count()).contains(&id),
            "representative id {id} out of range"
        );
        let mut rep = TruthTable::zero(self.generators[0].vars()).expect("valid m");
        for (b, g) in self.generators.iter().enumerate() {
            if id >> b & 1 == 1 {
                rep.xor_assign(g).expect("same m");
            }
        }
        rep
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, TruthTable)> + '_ {
        (1..=self.count()).map(|id| (id, self.get(id)))
    }
}

/// Unit vectors at the non-pivot columns of the code's generator matrix in
/// reduced row-echelon form. Their span meets the code only in zero and
/// together they reach every coset.
fn complement_generators(code: &RmParams) -> Result<Vec<TruthTable>> {
    let mut rows = code.basis();
    let n = code.length() as usize;
    let mut pivots = Vec::with_capacity(rows.len());
    let mut rank = 0;
    for col in 0..n {
        if rank == rows.len() {
            break;
        }
        let Some(r) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, r);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                row.xor_assign(&pivot)?;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let m = code.vars();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|c| TruthTable::from_fn(m, |i| i == c))
        .collect()
}

/// One representative per nontrivial coset, in id order.
pub fn coset_representatives(
    code: &RmParams,
    scope: Scope,
    limits: &Limits,
) -> Result<impl Iterator<Item = TruthTable>> {
    let reps = Representatives::new(code, scope, limits)?;
    Ok((1..=reps.count()).map(move |id| reps.get(id)))
}

/// Balanced words in `code + rep`, by enumeration of the code.
pub fn balanced_count_of_coset(
    code: &RmParams,
    rep: &TruthTable,
    limits: &Limits,
) -> Result<BigUint> {
    if rep.vars() != code.vars() {
        return Err(Error::VarMismatch(rep.vars(), code.vars()));
    }
    limits.check_dim("codeword enumeration", code.dimension())?;
    let hist = code.span().weight_histogram(rep);
    Ok(BigUint::from(hist[hist.len() / 2]))
}

/// Per-code state for computing many coset distributions by one method.
pub struct CosetEngine {
    code: RmParams,
    method: Method,
    code_span: Option<Span>,
    dual_span: Option<Span>,
    dual_dist: Option<WeightDistribution>,
}

impl CosetEngine {
    pub fn new(code: &RmParams, method: Method, limits: &Limits) -> Result<Self> {
        let method = method.resolve(code);
        let mut engine = Self {
            code: *code,
            method,
            code_span: None,
            dual_span: None,
            dual_dist: None,
        };
        match method {
            Method::Brute => {
                limits.check_dim("codeword enumeration", code.dimension())?;
                engine.code_span = Some(code.span());
            }
            Method::Transform => {
                let dual = code.dual();
                limits.check_dim("dual enumeration", dual.dimension())?;
                engine.dual_dist = Some(rm_weight_distribution(&dual, limits)?);
                engine.dual_span = Some(dual.span());
            }
            Method::Spectral => {
                if code.order() != Some(1) {
                    return Err(Error::InvalidParams(format!(
                        "spectral counting applies to first-order codes, not {code}"
                    )));
                }
            }
            Method::Auto => unreachable!("resolved above"),
        }
        Ok(engine)
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn code(&self) -> &RmParams {
        &self.code
    }

    /// The dual's distribution (transform engines only).
    pub fn dual_distribution(&self) -> Option<&WeightDistribution> {
        self.dual_dist.as_ref()
    }

    pub fn profile(&self, rep: &TruthTable) -> Result<CosetDualProfile> {
        let span = self
            .dual_span
            .as_ref()
            .ok_or_else(|| Error::InvalidParams("profiles need the transform method".into()))?;
        Ok(CosetDualProfile::new(WeightDistribution::from_histogram(
            &span.orthogonal_histogram(rep),
        )))
    }

    /// Full distribution of `code + rep`. Spectral engines are limited to the
    /// balanced count and return an error here.
    pub fn distribution(&self, rep: &TruthTable) -> Result<WeightDistribution> {
        match self.method {
            Method::Brute => Ok(WeightDistribution::from_histogram(
                &self
                    .code_span
                    .as_ref()
                    .expect("brute engine")
                    .weight_histogram(rep),
            )),
            Method::Transform => {
                let dual = self.dual_dist.as_ref().expect("transform engine");
                if rep.is_zero() {
                    return macwilliams(dual, self.code.dimension(), self.code.length());
                }
                assmus_mattson(
                    &self.profile(rep)?,
                    dual,
                    self.code.dimension(),
                    self.code.length(),
                )
            }
            _ => Err(Error::InvalidParams(
                "spectral counting yields balanced counts only".into(),
            )),
        }
    }

    /// Balanced words in `code + rep`.
    pub fn balanced(&self, rep: &TruthTable) -> Result<BigUint> {
        match self.method {
            Method::Spectral => Ok(BigUint::from(rm1_coset_balanced_count(rep))),
            _ => Ok(self.distribution(rep)?.balanced()),
        }
    }
}

/// Balanced count of one nontrivial coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub id: u64,
    pub rep: TruthTable,
    pub balanced: BigUint,
    /// The code's balanced count minus this one, evaluated by the gap
    /// formula (transform censuses only).
    pub gap: Option<BigInt>,
}

/// Balanced-word counts of a code and of its nontrivial cosets in a scope.
#[derive(Clone, Debug)]
pub struct CosetCensus {
    pub code: RmParams,
    pub scope: Scope,
    pub method: Method,
    pub code_balanced_count: BigUint,
    pub entries: Vec<CensusEntry>,
}

impl CosetCensus {
    /// The entry with the largest count; the earliest id wins ties.
    pub fn max_other(&self) -> Option<&CensusEntry> {
        self.entries
            .iter()
            .fold(None, |best: Option<&CensusEntry>, e| match best {
                Some(b) if b.balanced >= e.balanced => Some(b),
                _ => Some(e),
            })
    }

    /// CSV with columns `rep_hex,balanced_count`; the code itself is not listed.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["rep_hex", "balanced_count"])
            .map_err(csv_error)?;
        for e in &self.entries {
            w.write_record([e.rep.to_hex(), e.balanced.to_string()])
                .map_err(csv_error)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

#[derive(Clone, Debug, Default)]
pub struct CensusOptions {
    pub method: Option<Method>,
    /// Progress file; completed chunks found there are not recomputed.
    pub checkpoint: Option<PathBuf>,
}

const CHUNK: u64 = 4096;

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct CheckpointHeader {
    k: Option<u32>,
    m: u32,
    scope: Scope,
    method: Method,
    cosets: u64,
}

#[derive(Serialize, Deserialize)]
struct CheckpointChunk {
    chunk: u64,
    balanced: Vec<String>,
    gaps: Vec<Option<String>>,
}

type ChunkResult = Vec<(BigUint, Option<BigInt>)>;

fn load_checkpoint(path: &Path, header: &CheckpointHeader) -> Result<BTreeMap<u64, ChunkResult>> {
    let mut done = BTreeMap::new();
    if !path.exists() {
        let mut f = File::create(path)?;
        writeln!(f, "{}", serde_json::to_string(header)?)?;
        return Ok(done);
    }
    let reader = BufReader::new(File::open(path)?);
    let mut lines = reader.lines();
    let first = lines
        .next()
        .transpose()?
        .ok_or_else(|| Error::Parse("empty checkpoint file".into()))?;
    let found: CheckpointHeader = serde_json::from_str(&first)?;
    if &found != header {
        return Err(Error::InvalidParams(format!(
            "checkpoint {} belongs to a different census",
            path.display()
        )));
    }
    for line in lines {
        let line = line?;
        // a torn final line from an interrupted write is ignored
        let Ok(chunk) = serde_json::from_str::<CheckpointChunk>(&line) else {
            continue;
        };
        let parsed: Option<ChunkResult> = chunk
            .balanced
            .iter()
            .zip(&chunk.gaps)
            .map(|(b, g)| {
                let b = b.parse().ok()?;
                let g = match g {
                    Some(g) => Some(g.parse().ok()?),
                    None => None,
                };
                Some((b, g))
            })
            .collect();
        if let Some(parsed) = parsed {
            done.insert(chunk.chunk, parsed);
        }
    }
    Ok(done)
}

/// Balanced counts for every nontrivial coset in the scope.
///
/// Representatives are processed in fixed chunks of ids; results are
/// assembled in id order, so the census does not depend on worker count.
pub fn coset_census(
    code: &RmParams,
    scope: Scope,
    options: &CensusOptions,
    limits: &Limits,
) -> Result<CosetCensus> {
    let reps = Representatives::new(code, scope, limits)?;
    let engine = CosetEngine::new(code, options.method.unwrap_or(Method::Auto), limits)?;
    let zero = TruthTable::zero(code.vars())?;
    let code_balanced_count = engine.balanced(&zero)?;

    let total = reps.count();
    let chunks = total.div_ceil(CHUNK);
    let header = CheckpointHeader {
        k: code.order(),
        m: code.vars(),
        scope,
        method: engine.method(),
        cosets: total,
    };
    let mut done = match &options.checkpoint {
        Some(path) => load_checkpoint(path, &header)?,
        None => BTreeMap::new(),
    };
    let mut sink = match &options.checkpoint {
        Some(path) => {
            let mut f = OpenOptions::new().read(true).append(true).open(path)?;
            if !std::fs::read(path)?.ends_with(b"\n") {
                writeln!(f)?;
            }
            Some(f)
        }
        None => None,
    };

    // transform results depend only on the orthogonal profile
    let mut by_profile: HashMap<CosetDualProfile, (BigUint, BigInt)> = HashMap::new();
    for c in 0..chunks {
        if done.contains_key(&c) {
            continue;
        }
        let ids: Vec<u64> = (c * CHUNK + 1..=((c + 1) * CHUNK).min(total)).collect();
        let result: ChunkResult = if engine.method() == Method::Transform {
            transform_chunk(&engine, &reps, &ids, &mut by_profile)?
        } else {
            ids.par_iter()
                .map(|&id| Ok((engine.balanced(&reps.get(id))?, None)))
                .collect::<Result<_>>()?
        };
        if let Some(f) = sink.as_mut() {
            let line = CheckpointChunk {
                chunk: c,
                balanced: result.iter().map(|(b, _)| b.to_string()).collect(),
                gaps: result
                    .iter()
                    .map(|(_, g)| g.as_ref().map(ToString::to_string))
                    .collect(),
            };
            writeln!(f, "{}", serde_json::to_string(&line)?)?;
            f.flush()?;
        }
        done.insert(c, result);
    }

    let mut entries = Vec::with_capacity(total as usize);
    for (c, results) in done {
        for (offset, (balanced, gap)) in results.into_iter().enumerate() {
            let id = c * CHUNK + 1 + offset as u64;
            entries.push(CensusEntry {
                id,
                rep: reps.get(id),
                balanced,
                gap,
            });
        }
    }
    if entries.len() as u64 != total {
        return Err(Error::Inconsistent(format!(
            "census has {} entries, expected {total}",
            entries.len()
        )));
    }
    Ok(CosetCensus {
        code: *code,
        scope,
        method: engine.method(),
        code_balanced_count,
        entries,
    })
}

fn transform_chunk(
    engine: &CosetEngine,
    reps: &Representatives,
    ids: &[u64],
    by_profile: &mut HashMap<CosetDualProfile, (BigUint, BigInt)>,
) -> Result<ChunkResult> {
    let profiles: Vec<CosetDualProfile> = ids
        .par_iter()
        .map(|&id| engine.profile(&reps.get(id)))
        .collect::<Result<_>>()?;
    let dual = engine.dual_distribution().expect("transform engine");
    let (dim, n) = (engine.code().dimension(), engine.code().length());
    let mut fresh: Vec<&CosetDualProfile> = profiles
        .iter()
        .filter(|p| !by_profile.contains_key(*p))
        .collect();
    fresh.sort_by_key(|p| p.as_distribution().dense());
    fresh.dedup();
    let solved: Vec<(CosetDualProfile, (BigUint, BigInt))> = fresh
        .into_par_iter()
        .map(|p| {
            let d = assmus_mattson(p, dual, dim, n)?;
            let gap = balanced_gap(dual, p, dim, n)?;
            Ok((p.clone(), (d.balanced(), gap)))
        })
        .collect::<Result<_>>()?;
    by_profile.extend(solved);
    Ok(profiles
        .iter()
        .map(|p| {
            let (b, g) = &by_profile[p];
            (b.clone(), Some(g.clone()))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmcodes::rm_membership;

    #[test]
    fn representative_counts() {
        let lim = Limits::default();
        let p = |k, m| RmParams::new(k, m).unwrap();
        assert_eq!(
            Representatives::new(&p(1, 3), Scope::FullSpace, &lim)
                .unwrap()
                .count(),
            15
        );
        assert_eq!(
            Representatives::new(&p(1, 4), Scope::WithinNextOrder, &lim)
                .unwrap()
                .count(),
            63
        );
        assert_eq!(
            Representatives::new(&p(2, 5), Scope::FullSpace, &lim)
                .unwrap()
                .count(),
            65535
        );
        assert!(matches!(
            Representatives::new(&p(1, 5), Scope::FullSpace, &lim),
            Err(Error::CapExceeded { .. })
        ));
        assert!(Representatives::new(&p(3, 3), Scope::WithinNextOrder, &lim).is_err());
    }

    #[test]
    fn representatives_hit_distinct_cosets() {
        let lim = Limits::default();
        for (k, m, scope) in [
            (1, 3, Scope::FullSpace),
            (2, 4, Scope::FullSpace),
            (1, 4, Scope::WithinNextOrder),
        ] {
            let code = RmParams::new(k, m).unwrap();
            let reps: Vec<_> = coset_representatives(&code, scope, &lim).unwrap().collect();
            for (a, ra) in reps.iter().enumerate() {
                assert!(!rm_membership(ra, &code));
                for rb in &reps[a + 1..] {
                    assert!(!rm_membership(&(ra ^ rb), &code));
                }
            }
        }
    }

    #[test]
    fn balanced_counts_examples() {
        let lim = Limits::default();
        let r13 = RmParams::new(1, 3).unwrap();
        let zero = TruthTable::zero(3).unwrap();
        assert_eq!(
            balanced_count_of_coset(&r13, &zero, &lim).unwrap(),
            BigUint::from(14u32)
        );
        let y1y2 = TruthTable::from_anf(&AnfMonomialSet::parse(3, "Y1Y2").unwrap()).unwrap();
        assert_eq!(
            balanced_count_of_coset(&r13, &y1y2, &lim).unwrap(),
            BigUint::from(8u32)
        );
        let a1 = TruthTable::from_hex(4, "0003").unwrap();
        let r24 = RmParams::new(2, 4).unwrap();
        assert_eq!(
            balanced_count_of_coset(&r24, &a1, &lim).unwrap(),
            BigUint::from(800u32)
        );
    }

    #[test]
    fn methods_agree_on_small_census() {
        let lim = Limits::default();
        let code = RmParams::new(1, 4).unwrap();
        let run = |method| {
            coset_census(
                &code,
                Scope::WithinNextOrder,
                &CensusOptions {
                    method: Some(method),
                    checkpoint: None,
                },
                &lim,
            )
            .unwrap()
        };
        let brute = run(Method::Brute);
        let transform = run(Method::Transform);
        let spectral = run(Method::Spectral);
        assert_eq!(brute.code_balanced_count, BigUint::from(30u32));
        for ((a, b), c) in brute
            .entries
            .iter()
            .zip(&transform.entries)
            .zip(&spectral.entries)
        {
            assert_eq!(a.balanced, b.balanced);
            assert_eq!(a.balanced, c.balanced);
            let gap = b.gap.clone().unwrap();
            assert_eq!(
                gap,
                BigInt::from(brute.code_balanced_count.clone()) - BigInt::from(b.balanced.clone())
            );
        }
    }

    #[test]
    fn checkpoint_resume_reuses_chunks() {
        let lim = Limits::default();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("census.jsonl");
        let code = RmParams::new(2, 5).unwrap();
        let opts = CensusOptions {
            method: Some(Method::Transform),
            checkpoint: Some(path.clone()),
        };
        let first = coset_census(&code, Scope::WithinNextOrder, &opts, &lim).unwrap();
        let lines = std::fs::read_to_string(&path).unwrap().lines().count();
        assert_eq!(lines, 2);
        let again = coset_census(&code, Scope::WithinNextOrder, &opts, &lim).unwrap();
        assert_eq!(first.entries, again.entries);
        assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 2);

        let other = CensusOptions {
            method: Some(Method::Brute),
            checkpoint: Some(path),
        };
        assert!(coset_census(&code, Scope::WithinNextOrder, &other, &lim).is_err());
    }
}
