//! Gray-code enumeration of `offset + span(rows)`.
//!
//! Consecutive words differ by a single row, so each step is one XOR and one
//! popcount. The information-bit space is split into `2^s` shards: the top
//! `s` rows select a shard's starting word and the remaining rows are walked
//! in Gray order. Shards run on the rayon pool and return partial
//! histograms, which merge by addition, so results do not depend on the
//! number of workers.

use rayon::prelude::*;

use crate::bfcore::TruthTable;

/// Words per shard are kept at or above this many before splitting further.
const MIN_SHARD_LOG2: usize = 12;
const MAX_SHARD_BITS: usize = 10;

pub(crate) struct Span {
    m: u32,
    rows: Vec<TruthTable>,
}

/// What to count for each enumerated word.
#[derive(Clone, Copy)]
enum Filter<'a> {
    All,
    /// Only words with even intersection with the given table.
    OrthogonalTo(&'a TruthTable),
}

impl Span {
    pub(crate) fn new(m: u32, rows: Vec<TruthTable>) -> Self {
        debug_assert!(rows.iter().all(|r| r.vars() == m));
        Self { m, rows }
    }

    pub(crate) fn dim(&self) -> usize {
        self.rows.len()
    }

    fn n(&self) -> usize {
        1 << self.m
    }

    /// Histogram of weights over `offset + span`, indexed `0..=n`.
    pub(crate) fn weight_histogram(&self, offset: &TruthTable) -> Vec<u64> {
        self.histogram(offset, Filter::All)
    }

    /// Weight histogram of the span members with even intersection with `rep`.
    pub(crate) fn orthogonal_histogram(&self, rep: &TruthTable) -> Vec<u64> {
        let zero = TruthTable::zero(self.m).expect("m already validated");
        self.histogram(&zero, Filter::OrthogonalTo(rep))
    }

    fn shard_bits(&self) -> usize {
        self.dim()
            .saturating_sub(MIN_SHARD_LOG2)
            .min(MAX_SHARD_BITS)
    }

    fn histogram(&self, offset: &TruthTable, filter: Filter<'_>) -> Vec<u64> {
        let s = self.shard_bits();
        let low = self.dim() - s;
        let reduce = |mut a: Vec<u64>, b: Vec<u64>| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        };
        if self.m <= 6 {
            let rows: Vec<u64> = self.rows.iter().map(|r| r.words()[0]).collect();
            let base = offset.words()[0];
            let (low_rows, high_rows) = rows.split_at(low);
            let mask = match filter {
                Filter::All => None,
                Filter::OrthogonalTo(rep) => Some(rep.words()[0]),
            };
            (0u64..1 << s)
                .into_par_iter()
                .map(|shard| {
                    let start = high_rows
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| shard >> b & 1 == 1)
                        .fold(base, |acc, (_, r)| acc ^ r);
                    let mut hist = vec![0u64; self.n() + 1];
                    match mask {
                        None => walk_packed(start, low_rows, &mut hist),
                        Some(rep) => walk_packed_orthogonal(start, low_rows, rep, &mut hist),
                    }
                    hist
                })
                .reduce(|| vec![0u64; self.n() + 1], reduce)
        } else {
            let (low_rows, high_rows) = self.rows.split_at(low);
            (0u64..1 << s)
                .into_par_iter()
                .map(|shard| {
                    let mut cur = offset.clone();
                    for (b, r) in high_rows.iter().enumerate() {
                        if shard >> b & 1 == 1 {
                            cur.xor_assign(r).expect("rows share m");
                        }
                    }
                    let mut hist = vec![0u64; self.n() + 1];
                    walk_wide(cur, low_rows, filter, &mut hist);
                    hist
                })
                .reduce(|| vec![0u64; self.n() + 1], reduce)
        }
    }

    /// Sequential visit of every word, in Gray order.
    #[cfg(test)]
    pub(crate) fn for_each(&self, offset: &TruthTable, mut f: impl FnMut(&TruthTable)) {
        let mut cur = offset.clone();
        f(&cur);
        for i in 1u64..1 << self.dim() {
            cur.xor_assign(&self.rows[i.trailing_zeros() as usize])
                .expect("rows share m");
            f(&cur);
        }
    }
}

#[inline]
fn walk_packed(start: u64, rows: &[u64], hist: &mut [u64]) {
    // Two interleaved histograms hide the store-to-load latency on repeats.
    let mut even = [0u64; 65];
    let mut odd = [0u64; 65];
    let mut cur = start;
    even[cur.count_ones() as usize] += 1;
    let total = 1u64 << rows.len();
    let mut i = 1u64;
    while i + 1 < total {
        cur ^= rows[i.trailing_zeros() as usize];
        odd[cur.count_ones() as usize] += 1;
        cur ^= rows[(i + 1).trailing_zeros() as usize];
        even[cur.count_ones() as usize] += 1;
        i += 2;
    }
    if i < total {
        cur ^= rows[i.trailing_zeros() as usize];
        odd[cur.count_ones() as usize] += 1;
    }
    for (h, (a, b)) in hist.iter_mut().zip(even.iter().zip(odd.iter())) {
        *h += a + b;
    }
}

#[inline]
fn walk_packed_orthogonal(start: u64, rows: &[u64], rep: u64, hist: &mut [u64]) {
    let mut local = [0u64; 65];
    let mut cur = start;
    let mut visit = |w: u64| {
        let keep = (w & rep).count_ones() & 1 == 0;
        local[w.count_ones() as usize] += u64::from(keep);
    };
    visit(cur);
    for i in 1u64..1 << rows.len() {
        cur ^= rows[i.trailing_zeros() as usize];
        visit(cur);
    }
    for (h, l) in hist.iter_mut().zip(local.iter()) {
        *h += l;
    }
}

fn walk_wide(mut cur: TruthTable, rows: &[TruthTable], filter: Filter<'_>, hist: &mut [u64]) {
    let mut visit = |t: &TruthTable| {
        let keep = match filter {
            Filter::All => true,
            Filter::OrthogonalTo(rep) => !t.dot(rep).expect("same m"),
        };
        if keep {
            hist[t.weight() as usize] += 1;
        }
    };
    visit(&cur);
    for i in 1u64..1 << rows.len() {
        cur.xor_assign(&rows[i.trailing_zeros() as usize])
            .expect("rows share m");
        visit(&cur);
    }
}
