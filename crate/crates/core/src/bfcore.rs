//! Truth tables, algebraic normal form and points of `F_2^m`.
//!
//! Point convention: table index `i` encodes `(Y_1, ..., Y_m)` big-endian, so
//! `Y_1` is the most significant bit of `i` and `Y_m` varies fastest along the
//! table. Under this convention the table of `Y_1 Y_2 ... Y_{m-1}` is
//! `(0, ..., 0, 1, 1)`.
//!
//! Tables are stored packed, 64 positions per word, position `i` at bit
//! `i % 64` of word `i / 64`. Unused high bits of the last word are always
//! zero.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::BitXor;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported number of variables (a table is then 32 MiB).
pub const MAX_VARS: u32 = 28;

fn check_vars(m: u32) -> Result<()> {
    if !(1..=MAX_VARS).contains(&m) {
        return Err(Error::InvalidParams(format!(
            "variable count {m} outside 1..={MAX_VARS}"
        )));
    }
    Ok(())
}

fn word_count(m: u32) -> usize {
    (1usize << m).div_ceil(64)
}

fn tail_mask(m: u32) -> u64 {
    if m >= 6 {
        u64::MAX
    } else {
        (1u64 << (1u32 << m)) - 1
    }
}

/// Masks of in-word positions whose bit `s` is set, for `s < 6`.
const STRIDE_MASKS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// In-place binary Möbius transform over `m` variables: `a[u] <- XOR_{x ⊆ u} a[x]`.
/// It is an involution.
fn moebius_in_place(m: u32, words: &mut [u64]) {
    for s in 0..m.min(6) {
        let shift = 1u32 << s;
        for w in words.iter_mut() {
            *w ^= (*w << shift) & STRIDE_MASKS[s as usize];
        }
    }
    for s in 6..m {
        let stride = 1usize << (s - 6);
        for w in 0..words.len() {
            if w & stride != 0 {
                words[w] ^= words[w ^ stride];
            }
        }
    }
}

/// The truth table of a Boolean function of `m` variables, a vector of length `2^m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    m: u32,
    words: Vec<u64>,
}

impl TruthTable {
    pub fn zero(m: u32) -> Result<Self> {
        check_vars(m)?;
        Ok(Self {
            m,
            words: vec![0; word_count(m)],
        })
    }

    pub fn ones(m: u32) -> Result<Self> {
        let mut t = Self::zero(m)?;
        t.words.fill(u64::MAX);
        t.clear_tail();
        Ok(t)
    }

    /// Builds a table from a predicate on point indices.
    pub fn from_fn(m: u32, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut t = Self::zero(m)?;
        for i in 0..t.len() {
            if f(i) {
                t.words[i / 64] |= 1 << (i % 64);
            }
        }
        Ok(t)
    }

    /// Builds a table from `2^m` bits in index order.
    pub fn from_bits(m: u32, bits: &[bool]) -> Result<Self> {
        check_vars(m)?;
        if bits.len() != 1 << m {
            return Err(Error::InvalidParams(format!(
                "expected {} bits for m = {m}, got {}",
                1usize << m,
                bits.len()
            )));
        }
        Self::from_fn(m, |i| bits[i])
    }

    /// Builds a table of at most 64 positions from the packed word.
    pub fn from_packed(m: u32, word: u64) -> Result<Self> {
        check_vars(m)?;
        if m > 6 {
            return Err(Error::InvalidParams(format!(
                "packed form holds at most 6 variables, got {m}"
            )));
        }
        if word & !tail_mask(m) != 0 {
            return Err(Error::InvalidParams("bits set beyond table length".into()));
        }
        Ok(Self {
            m,
            words: vec![word],
        })
    }

    pub(crate) fn from_words(m: u32, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), word_count(m));
        let mut t = Self { m, words };
        t.clear_tail();
        t
    }

    fn clear_tail(&mut self) {
        if let Some(last) = self.words.last_mut() {
            *last &= tail_mask(self.m);
        }
    }

    pub fn vars(&self) -> u32 {
        self.m
    }

    /// Table length `n = 2^m`.
    pub fn len(&self) -> usize {
        1 << self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len(), "index {i} out of range");
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len(), "index {i} out of range");
        let bit = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= bit;
        } else {
            self.words[i / 64] &= !bit;
        }
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    /// Number of ones in the table.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.weight() == 1 << (self.m - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.xor_assign(other)?;
        Ok(out)
    }

    pub fn xor_assign(&mut self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::VarMismatch(self.m, other.m));
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.clear_tail();
        out
    }

    /// Parity of the intersection of two tables (their `F_2` inner product).
    pub fn dot(&self, other: &Self) -> Result<bool> {
        if self.m != other.m {
            return Err(Error::VarMismatch(self.m, other.m));
        }
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        Ok(ones & 1 == 1)
    }

    /// Table of the linear function `x -> x·ω`.
    pub fn linear(omega: &PointVector) -> Self {
        let w = omega.index() as usize;
        Self::from_fn(omega.dim(), |i| (i & w).count_ones() & 1 == 1)
            .expect("point dimension already validated")
    }

    /// Table of a function given in algebraic normal form.
    pub fn from_anf(anf: &AnfMonomialSet) -> Result<Self> {
        let mut coeffs = Self::zero(anf.m)?;
        for mono in &anf.monomials {
            coeffs.set(mono.point_mask(anf.m), true);
        }
        moebius_in_place(anf.m, &mut coeffs.words);
        Ok(coeffs)
    }

    /// Algebraic normal form by Möbius inversion.
    pub fn anf(&self) -> AnfMonomialSet {
        let mut coeffs = self.words.clone();
        moebius_in_place(self.m, &mut coeffs);
        let mut monomials = BTreeSet::new();
        for (w, &word) in coeffs.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                monomials.insert(Monomial::from_point_mask(self.m, w * 64 + b));
            }
        }
        AnfMonomialSet {
            m: self.m,
            monomials,
        }
    }

    /// Algebraic degree; `None` for the zero function.
    pub fn degree(&self) -> Option<u32> {
        let mut coeffs = self.words.clone();
        moebius_in_place(self.m, &mut coeffs);
        let mut best: Option<u32> = None;
        for (w, &word) in coeffs.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let d = ((w * 64 + b) as u64).count_ones();
                best = Some(best.map_or(d, |x| x.max(d)));
            }
        }
        best
    }

    /// Hex text form: most significant digit first, position 0 is the top bit
    /// of the first digit. Tables shorter than four positions (m = 1) use a
    /// single digit holding the table as a 2-bit number.
    pub fn to_hex(&self) -> String {
        let n = self.len();
        if n < 4 {
            let v = (u8::from(self.get(0)) << 1) | u8::from(self.get(1));
            return format!("{v:x}");
        }
        let mut s = String::with_capacity(n / 4);
        for d in 0..n / 4 {
            let nibble = (self.words[d / 16] >> ((d % 16) * 4)) & 0xF;
            // stored LSB-first; the text form wants position 4d as the top bit
            let rev =
                ((nibble & 1) << 3) | ((nibble & 2) << 1) | ((nibble & 4) >> 1) | (nibble >> 3);
            s.push(char::from_digit(rev as u32, 16).unwrap());
        }
        s
    }

    pub fn from_hex(m: u32, text: &str) -> Result<Self> {
        check_vars(m)?;
        let text = text.trim();
        let digits = text
            .strip_prefix("0x")
            .or_else(|| text.strip_prefix("0X"))
            .unwrap_or(text);
        let n = 1usize << m;
        let expected = (n / 4).max(1);
        if digits.len() != expected {
            return Err(Error::Parse(format!(
                "expected {expected} hex digits for m = {m}, got {}",
                digits.len()
            )));
        }
        let mut t = Self::zero(m)?;
        for (d, ch) in digits.chars().enumerate() {
            let v = ch
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("invalid hex digit {ch:?}")))?;
            if n < 4 {
                if v > 3 {
                    return Err(Error::Parse(format!("digit {ch:?} too large for m = 1")));
                }
                t.set(0, v & 2 != 0);
                t.set(1, v & 1 != 0);
            } else {
                for b in 0..4 {
                    t.set(4 * d + b, v >> (3 - b) & 1 == 1);
                }
            }
        }
        Ok(t)
    }
}

impl BitXor for &TruthTable {
    type Output = TruthTable;

    /// Panics on mismatched variable counts; use [`TruthTable::xor`] otherwise.
    fn bitxor(self, rhs: Self) -> TruthTable {
        self.xor(rhs).expect("xor of tables with different m")
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(m={}, {})", self.m, self.to_hex())
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// A point of `F_2^m`, e.g. the `ω` of a linear function `x·ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PointVector {
    m: u32,
    index: u32,
}

impl PointVector {
    /// The point whose table index is `index`.
    pub fn from_index(m: u32, index: u32) -> Result<Self> {
        check_vars(m)?;
        if u64::from(index) >= 1u64 << m {
            return Err(Error::InvalidParams(format!(
                "point index {index} out of range for m = {m}"
            )));
        }
        Ok(Self { m, index })
    }

    /// From coordinates `(x_1, ..., x_m)`, each 0 or 1.
    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        let m = u32::try_from(coords.len()).unwrap_or(u32::MAX);
        check_vars(m)?;
        let mut index = 0u32;
        for &c in coords {
            if c > 1 {
                return Err(Error::InvalidParams(format!("coordinate {c} is not a bit")));
            }
            index = (index << 1) | u32::from(c);
        }
        Ok(Self { m, index })
    }

    pub fn dim(&self) -> u32 {
        self.m
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn coords(&self) -> Vec<u8> {
        (0..self.m)
            .map(|t| (self.index >> (self.m - 1 - t) & 1) as u8)
            .collect()
    }

    pub fn dot(&self, other: &Self) -> Result<bool> {
        if self.m != other.m {
            return Err(Error::VarMismatch(self.m, other.m));
        }
        Ok((self.index & other.index).count_ones() & 1 == 1)
    }
}

/// A monomial `Y_{v1} Y_{v2} ...`, stored as a set of variable indices
/// (bit `v - 1` for `Y_v`). The empty monomial is the constant 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(u32);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    /// From 1-based variable indices; duplicates are idempotent (`Y1 Y1 = Y1`).
    pub fn new(vars: &[u32]) -> Result<Self> {
        let mut mask = 0u32;
        for &v in vars {
            if !(1..=MAX_VARS).contains(&v) {
                return Err(Error::InvalidParams(format!(
                    "variable index {v} out of range"
                )));
            }
            mask |= 1 << (v - 1);
        }
        Ok(Self(mask))
    }

    pub fn degree(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn vars(&self) -> Vec<u32> {
        (0..32)
            .filter(|b| self.0 >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }

    fn max_var(&self) -> u32 {
        32 - self.0.leading_zeros()
    }

    /// The table indices covered by this monomial form the up-set of this mask.
    pub(crate) fn point_mask(&self, m: u32) -> usize {
        self.vars()
            .into_iter()
            .map(|v| 1usize << (m - v))
            .fold(0, |a, b| a | b)
    }

    fn from_point_mask(m: u32, mask: usize) -> Self {
        let mut vars = 0u32;
        for v in 1..=m {
            if mask >> (m - v) & 1 == 1 {
                vars |= 1 << (v - 1);
            }
        }
        Self(vars)
    }
}

/// Graded-lexicographic: by degree, then by sorted variable lists.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.vars().cmp(&other.vars()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for v in self.vars() {
            write!(f, "Y{v}")?;
        }
        Ok(())
    }
}

/// All monomials of degree `≤ max_degree` in `m` variables, in graded-lex order.
pub fn monomials_up_to(m: u32, max_degree: u32) -> Vec<Monomial> {
    (0..=max_degree.min(m))
        .flat_map(|d| monomials_of_degree(m, d))
        .collect()
}

/// All monomials of degree exactly `degree` in `m` variables, lexicographic.
pub fn monomials_of_degree(m: u32, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if degree > m {
        return out;
    }
    let d = degree as usize;
    let mut combo: Vec<u32> = (1..=degree).collect();
    loop {
        out.push(Monomial(combo.iter().fold(0, |acc, v| acc | 1 << (v - 1))));
        // advance to the next combination of `d` out of `1..=m`
        let mut pos = d;
        while pos > 0 && combo[pos - 1] == m - (d - pos) as u32 {
            pos -= 1;
        }
        if pos == 0 {
            return out;
        }
        combo[pos - 1] += 1;
        for t in pos..d {
            combo[t] = combo[t - 1] + 1;
        }
    }
}

/// A Boolean function as a set of monomials over `F_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnfMonomialSet {
    m: u32,
    monomials: BTreeSet<Monomial>,
}

impl AnfMonomialSet {
    pub fn zero(m: u32) -> Result<Self> {
        check_vars(m)?;
        Ok(Self {
            m,
            monomials: BTreeSet::new(),
        })
    }

    /// Builds the sum of the given monomials; repeated monomials cancel.
    pub fn new(m: u32, monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut anf = Self::zero(m)?;
        for mono in monomials {
            anf.toggle(mono)?;
        }
        Ok(anf)
    }

    /// Adds a monomial over `F_2` (removes it if present).
    pub fn toggle(&mut self, mono: Monomial) -> Result<()> {
        if mono.max_var() > self.m {
            return Err(Error::InvalidParams(format!(
                "monomial {mono} uses a variable beyond Y{}",
                self.m
            )));
        }
        if !self.monomials.remove(&mono) {
            self.monomials.insert(mono);
        }
        Ok(())
    }

    pub fn vars(&self) -> u32 {
        self.m
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// `None` for the zero function.
    pub fn degree(&self) -> Option<u32> {
        self.monomials.iter().map(Monomial::degree).max()
    }

    /// Sum over `F_2`: the symmetric difference of the monomial sets.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::VarMismatch(self.m, other.m));
        }
        Ok(Self {
            m: self.m,
            monomials: self
                .monomials
                .symmetric_difference(&other.monomials)
                .copied()
                .collect(),
        })
    }

    /// Parses `Y1Y2+Y3+1`; `0` is the zero function. Whitespace is ignored.
    pub fn parse(m: u32, text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut anf = Self::zero(m)?;
        if compact.is_empty() {
            return Err(Error::Parse("empty ANF".into()));
        }
        if compact == "0" {
            return Ok(anf);
        }
        for term in compact.split('+') {
            anf.toggle(parse_monomial(term)?)?;
        }
        Ok(anf)
    }
}

fn parse_monomial(term: &str) -> Result<Monomial> {
    if term == "1" {
        return Ok(Monomial::ONE);
    }
    let mut vars = Vec::new();
    let mut rest = term;
    while !rest.is_empty() {
        rest = rest
            .strip_prefix(['Y', 'y'])
            .ok_or_else(|| Error::Parse(format!("bad monomial {term:?}")))?;
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        let v: u32 = rest[..end]
            .parse()
            .map_err(|_| Error::Parse(format!("bad variable index in {term:?}")))?;
        vars.push(v);
        rest = &rest[end..];
    }
    if vars.is_empty() {
        return Err(Error::Parse(format!("empty monomial in {term:?}")));
    }
    Monomial::new(&vars)
}

/// Highest degree first, constant last: `Y1Y2+Y3+1`.
impl fmt::Display for AnfMonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<&Monomial> = self.monomials.iter().collect();
        terms.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| a.cmp(b)));
        for (idx, mono) in terms.iter().enumerate() {
            if idx > 0 {
                f.write_str("+")?;
            }
            write!(f, "{mono}")?;
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_monomial(s.trim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(m: u32, bits: &str) -> TruthTable {
        let v: Vec<bool> = bits.chars().map(|c| c == '1').collect();
        TruthTable::from_bits(m, &v).unwrap()
    }

    fn bit_string(t: &TruthTable) -> String {
        t.bits().map(|b| if b { '1' } else { '0' }).collect()
    }

    #[test]
    fn anf_examples() {
        let full = AnfMonomialSet::parse(3, "Y1Y2Y3").unwrap();
        assert_eq!(
            bit_string(&TruthTable::from_anf(&full).unwrap()),
            "00000001"
        );

        let y1y2 = AnfMonomialSet::parse(3, "Y1Y2").unwrap();
        let t = TruthTable::from_anf(&y1y2).unwrap();
        let ones: Vec<usize> = (0..8).filter(|&i| t.get(i)).collect();
        assert_eq!(ones, vec![6, 7]);

        let zero = AnfMonomialSet::zero(2).unwrap();
        assert_eq!(bit_string(&TruthTable::from_anf(&zero).unwrap()), "0000");
    }

    #[test]
    fn anf_out_of_range() {
        assert!(AnfMonomialSet::zero(0).is_err());
        assert!(AnfMonomialSet::zero(29).is_err());
        assert!(AnfMonomialSet::parse(2, "Y3").is_err());
        assert!(AnfMonomialSet::parse(2, "Y1Z").is_err());
    }

    #[test]
    fn linear_examples() {
        let lin = |c: &[u8]| bit_string(&TruthTable::linear(&PointVector::from_coords(c).unwrap()));
        assert_eq!(lin(&[0, 0]), "0000");
        assert_eq!(lin(&[0, 1]), "0101");
        assert_eq!(lin(&[1, 1]), "0110");
    }

    #[test]
    fn xor_examples() {
        let a = tt(2, "0101");
        let b = tt(2, "0011");
        assert_eq!(bit_string(&(&a ^ &b)), "0110");
        assert!((&a ^ &a).is_zero());
        assert_eq!(&a ^ &TruthTable::zero(2).unwrap(), a);
        assert!(matches!(
            a.xor(&TruthTable::zero(3).unwrap()),
            Err(Error::VarMismatch(2, 3))
        ));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(tt(3, "00000001").weight(), 1);
        assert_eq!(tt(3, "00000011").weight(), 2);
        assert_eq!(TruthTable::ones(3).unwrap().weight(), 8);
        assert!(tt(2, "0110").is_balanced());
        assert!(!tt(2, "0111").is_balanced());
    }

    #[test]
    fn nonzero_linear_functions_are_balanced() {
        for m in 1..=4 {
            for w in 1..(1u32 << m) {
                let p = PointVector::from_index(m, w).unwrap();
                assert!(TruthTable::linear(&p).is_balanced(), "m={m} ω={w}");
            }
        }
    }

    #[test]
    fn anf_round_trip_all_functions_small_m() {
        for m in 1..=3u32 {
            let n = 1usize << m;
            for code in 0u64..(1 << n) {
                let t = TruthTable::from_fn(m, |i| code >> i & 1 == 1).unwrap();
                let back = TruthTable::from_anf(&t.anf()).unwrap();
                assert_eq!(back, t);
            }
        }
    }

    #[test]
    fn moebius_crosses_word_boundaries() {
        // m = 8 exercises the inter-word strides.
        let anf = AnfMonomialSet::parse(8, "Y1Y8+Y2Y3Y7+Y5+1").unwrap();
        let t = TruthTable::from_anf(&anf).unwrap();
        for i in 0..256usize {
            let y = |v: u32| i >> (8 - v) & 1 == 1;
            let expect = (y(1) && y(8)) ^ (y(2) && y(3) && y(7)) ^ y(5) ^ true;
            assert_eq!(t.get(i), expect, "point {i}");
        }
        assert_eq!(t.anf(), anf);
        assert_eq!(t.degree(), Some(3));
    }

    #[test]
    fn hex_format() {
        let a1 = tt(3, "00000011");
        assert_eq!(a1.to_hex(), "03");
        assert_eq!(TruthTable::from_hex(3, "03").unwrap(), a1);
        assert_eq!(TruthTable::from_hex(2, "6").unwrap(), tt(2, "0110"));
        assert_eq!(tt(1, "01").to_hex(), "1");
        assert_eq!(TruthTable::from_hex(1, "2").unwrap(), tt(1, "10"));
        assert!(TruthTable::from_hex(1, "4").is_err());
        assert!(TruthTable::from_hex(3, "003").is_err());
        assert!(TruthTable::from_hex(3, "0g").is_err());
        let big = TruthTable::from_fn(8, |i| i % 3 == 0).unwrap();
        assert_eq!(TruthTable::from_hex(8, &big.to_hex()).unwrap(), big);
        assert_eq!(TruthTable::from_hex(4, "0x8001").unwrap().weight(), 2);
    }

    #[test]
    fn anf_text_format() {
        let anf = AnfMonomialSet::parse(3, "1 + Y3 + Y2Y1").unwrap();
        assert_eq!(anf.to_string(), "Y1Y2+Y3+1");
        assert_eq!(AnfMonomialSet::parse(3, "Y1+Y1").unwrap().to_string(), "0");
        assert_eq!(AnfMonomialSet::parse(3, "0").unwrap().degree(), None);
    }

    #[test]
    fn graded_lex_order() {
        let monos: Vec<String> = monomials_up_to(3, 2)
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(monos, ["1", "Y1", "Y2", "Y3", "Y1Y2", "Y1Y3", "Y2Y3"]);
    }
}
