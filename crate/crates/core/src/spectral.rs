//! Walsh–Hadamard spectra of Boolean functions.

use serde::{Deserialize, Serialize};

use crate::bfcore::TruthTable;
use crate::error::{Error, Result};

/// `W_f(ω) = Σ_x (-1)^(f(x) + x·ω)`, indexed by the table index of `ω`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<i32>", try_from = "Vec<i32>")]
pub struct WalshSpectrum {
    m: u32,
    values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn from_values(values: Vec<i32>) -> Result<Self> {
        let len = values.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidParams(format!(
                "spectrum length {len} is not a power of two ≥ 2"
            )));
        }
        Ok(Self {
            m: len.trailing_zeros(),
            values,
        })
    }

    pub fn vars(&self) -> u32 {
        self.m
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn at(&self, omega: usize) -> i32 {
        self.values[omega]
    }

    /// `Σ W(ω)^2`, accumulated wide.
    pub fn sum_of_squares(&self) -> u128 {
        self.values
            .iter()
            .map(|&v| (i64::from(v) * i64::from(v)) as u128)
            .sum()
    }

    /// Number of `ω` with `W(ω) = 0`.
    pub fn zero_count(&self) -> u64 {
        self.values.iter().filter(|&&v| v == 0).count() as u64
    }

    /// Applies the butterfly again and divides by `2^m`, recovering the
    /// `(-1)^f(x)` sequence.
    pub fn inverse_signs(&self) -> Result<Vec<i32>> {
        let mut buf: Vec<i64> = self.values.iter().map(|&v| i64::from(v)).collect();
        butterfly(&mut buf);
        let n = buf.len() as i64;
        buf.into_iter()
            .map(|v| {
                if v % n != 0 {
                    return Err(Error::Inexact(format!("{v} is not a multiple of {n}")));
                }
                Ok((v / n) as i32)
            })
            .collect()
    }
}

impl From<WalshSpectrum> for Vec<i32> {
    fn from(s: WalshSpectrum) -> Self {
        s.values
    }
}

impl TryFrom<Vec<i32>> for WalshSpectrum {
    type Error = Error;

    fn try_from(values: Vec<i32>) -> Result<Self> {
        Self::from_values(values)
    }
}

/// Unnormalized in-place transform, strides 1, 2, 4, ...
fn butterfly<T>(data: &mut [T])
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    let n = data.len();
    let mut half = 1;
    while half < n {
        for block in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
}

/// Fast Walsh–Hadamard transform in `O(n log n)` additions.
pub fn wht(f: &TruthTable) -> WalshSpectrum {
    let mut values: Vec<i32> = f.bits().map(|b| if b { -1 } else { 1 }).collect();
    butterfly(&mut values);
    WalshSpectrum {
        m: f.vars(),
        values,
    }
}

pub fn parseval_check(s: &WalshSpectrum) -> bool {
    s.sum_of_squares() == 1u128 << (2 * s.m)
}

/// Balanced iff `W_f(0) = 0`.
pub fn is_balanced_spectral(f: &TruthTable) -> bool {
    wht(f).at(0) == 0
}

/// Balanced words in `RM(1, m) + f`.
///
/// The coset is `{f + x·ω, f + x·ω + 1}` over all `ω`, and `f + x·ω` is
/// balanced exactly when `W_f(ω) = 0`; each zero contributes the word and its
/// complement.
pub fn rm1_coset_balanced_count(f: &TruthTable) -> u64 {
    2 * wht(f).zero_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bfcore::{AnfMonomialSet, PointVector};

    fn anf(m: u32, s: &str) -> TruthTable {
        TruthTable::from_anf(&AnfMonomialSet::parse(m, s).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(wht(&TruthTable::zero(2).unwrap()).values(), [4, 0, 0, 0]);
        assert_eq!(wht(&anf(2, "Y1Y2")).values(), [2, 2, 2, -2]);
        for m in 1..=4 {
            for w in 0..1u32 << m {
                let s = wht(&TruthTable::linear(&PointVector::from_index(m, w).unwrap()));
                for (omega, &v) in s.values().iter().enumerate() {
                    assert_eq!(v, if omega == w as usize { 1 << m } else { 0 });
                }
            }
        }
    }

    #[test]
    fn parseval_examples() {
        for code in 0u32..256 {
            let f = TruthTable::from_fn(3, |i| code >> i & 1 == 1).unwrap();
            let s = wht(&f);
            assert_eq!(s.sum_of_squares(), 64);
            assert!(parseval_check(&s));
        }
        assert!(parseval_check(
            &WalshSpectrum::from_values(vec![4, 0, 0, 0]).unwrap()
        ));
        assert!(parseval_check(
            &WalshSpectrum::from_values(vec![2, 2, 2, 2]).unwrap()
        ));
        assert!(!parseval_check(
            &WalshSpectrum::from_values(vec![2, 2, 2, 0]).unwrap()
        ));
        assert!(WalshSpectrum::from_values(vec![1, 2, 3]).is_err());
    }

    #[test]
    fn spectral_balance_agrees_with_weight() {
        for m in 1..=3u32 {
            for code in 0u64..1 << (1 << m) {
                let f = TruthTable::from_fn(m, |i| code >> i & 1 == 1).unwrap();
                assert_eq!(is_balanced_spectral(&f), f.is_balanced());
            }
        }
        let t = |bits: [bool; 4]| TruthTable::from_bits(2, &bits).unwrap();
        assert!(is_balanced_spectral(&t([false, true, true, false])));
        assert!(!is_balanced_spectral(&t([false, true, false, false])));
    }

    #[test]
    fn rm1_counts() {
        for m in 2..=5 {
            let lin = TruthTable::linear(&PointVector::from_index(m, 1).unwrap());
            assert_eq!(rm1_coset_balanced_count(&lin), (1 << (m + 1)) - 2);
        }
        assert_eq!(rm1_coset_balanced_count(&anf(2, "Y1Y2")), 0);
        assert_eq!(rm1_coset_balanced_count(&anf(3, "Y1Y2")), 8);
    }

    #[test]
    fn involution_recovers_signs() {
        let f = anf(5, "Y1Y2Y3+Y4Y5+Y2");
        let signs = wht(&f).inverse_signs().unwrap();
        let expect: Vec<i32> = f.bits().map(|b| if b { -1 } else { 1 }).collect();
        assert_eq!(signs, expect);
    }

    #[test]
    fn json_is_a_plain_array() {
        let s = wht(&anf(2, "Y1Y2"));
        assert_eq!(serde_json::to_string(&s).unwrap(), "[2,2,2,-2]");
        let back: WalshSpectrum = serde_json::from_str("[2,2,2,-2]").unwrap();
        assert_eq!(back, s);
    }
}
