use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use rmlab::krawtchouk::{kraw_column, kraw_direct, kraw_row};
use rmlab::rmcodes::{coset_weight_distribution, rm_membership, rm_weight_distribution};
use rmlab::spectral::{rm1_coset_balanced_count, wht};
use rmlab::transforms::{coset_distribution_via_dual, macwilliams};
use rmlab::{AnfMonomialSet, CosetSpec, Limits, Monomial, PointVector, RmParams, TruthTable};

fn table(m: u32, seed: &[u64]) -> TruthTable {
    TruthTable::from_fn(m, |i| seed[i / 64] >> (i % 64) & 1 == 1).unwrap()
}

fn arb_table(max_m: u32) -> impl Strategy<Value = TruthTable> {
    (1..=max_m).prop_flat_map(|m| {
        let words = (1usize << m).div_ceil(64);
        prop::collection::vec(any::<u64>(), words).prop_map(move |w| table(m, &w))
    })
}

fn monomial(mask: u32) -> Monomial {
    let vars: Vec<u32> = (1..=32).filter(|v| mask >> (v - 1) & 1 == 1).collect();
    Monomial::new(&vars).unwrap()
}

fn arb_anf(m: u32) -> impl Strategy<Value = AnfMonomialSet> {
    prop::collection::vec(0u32..1 << m, 0..12)
        .prop_map(move |masks| AnfMonomialSet::new(m, masks.into_iter().map(monomial)).unwrap())
}

/// Coefficients of `(1 - z)^i (1 + z)^(n - i)` by repeated multiplication.
fn generating_row(i: u64, n: u64) -> Vec<BigInt> {
    let mut poly = vec![BigInt::from(1)];
    for step in 0..n {
        let sign = if step < i { -1 } else { 1 };
        let mut next = vec![BigInt::from(0); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d] += c;
            next[d + 1] += c * sign;
        }
        poly = next;
    }
    poly
}

proptest! {
    #[test]
    fn anf_is_additive((a, b) in (1u32..=6).prop_flat_map(|m| (arb_anf(m), arb_anf(m)))) {
        let sum = TruthTable::from_anf(&a.add(&b).unwrap()).unwrap();
        let xor = TruthTable::from_anf(&a).unwrap().xor(&TruthTable::from_anf(&b).unwrap()).unwrap();
        prop_assert_eq!(sum, xor);
    }

    #[test]
    fn anf_round_trip(f in arb_table(8)) {
        prop_assert_eq!(TruthTable::from_anf(&f.anf()).unwrap(), f);
    }

    #[test]
    fn odd_weight_iff_full_degree(f in arb_table(8)) {
        prop_assert_eq!(f.weight() % 2 == 1, f.degree() == Some(f.vars()));
    }

    #[test]
    fn hex_round_trip(f in arb_table(9)) {
        prop_assert_eq!(TruthTable::from_hex(f.vars(), &f.to_hex()).unwrap(), f);
    }

    #[test]
    fn walsh_counts_disagreements(f in arb_table(8), pick in any::<u32>()) {
        let m = f.vars();
        let s = wht(&f);
        let omega = PointVector::from_index(m, pick % (1 << m)).unwrap();
        let shifted = f.xor(&TruthTable::linear(&omega)).unwrap();
        let n = 1i64 << m;
        prop_assert_eq!(i64::from(s.at(omega.index() as usize)), n - 2 * shifted.weight() as i64);
        prop_assert_eq!(s.sum_of_squares(), 1u128 << (2 * m));
    }

    #[test]
    fn krawtchouk_matches_generating_function(n in 0u64..=32, i_frac in 0u64..=1000) {
        let i = i_frac * n / 1000;
        let expected = generating_row(i, n);
        prop_assert_eq!(&kraw_row(i, n).unwrap(), &expected);
        for (j, e) in expected.iter().enumerate() {
            prop_assert_eq!(&kraw_direct(j as u64, i, n).unwrap(), e);
            prop_assert_eq!(&kraw_column(j as u64, n).unwrap()[i as usize], e);
        }
    }
}

#[test]
fn macwilliams_is_an_involution() {
    let lim = Limits::default();
    for m in 1..=5u32 {
        for k in 0..=m {
            // start from the smaller side so enumeration stays cheap
            let (small, large) = {
                let p = RmParams::new(k, m).unwrap();
                if p.dimension() <= p.dual().dimension() {
                    (p, p.dual())
                } else {
                    (p.dual(), p)
                }
            };
            let start = rm_weight_distribution(&small, &lim).unwrap();
            let n = small.length();
            let there = macwilliams(&start, large.dimension(), n).unwrap();
            let back = macwilliams(&there, small.dimension(), n).unwrap();
            assert_eq!(back, start, "{small}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn coset_transform_matches_enumeration(m in 3u32..=5, k_pick in any::<u32>(), words in prop::collection::vec(any::<u64>(), 1)) {
        // at m = 5 the orders 0 and 4 put one side beyond the default cap
        let k = if m == 5 { 1 + k_pick % 3 } else { k_pick % m };
        let code = RmParams::new(k, m).unwrap();
        let rep = table(m, &words);
        prop_assume!(!rm_membership(&rep, &code));
        let lim = Limits::default();
        let brute = coset_weight_distribution(&code, &rep, &lim).unwrap();
        let spec = CosetSpec::new(code, rep).unwrap();
        prop_assert_eq!(coset_distribution_via_dual(&spec, &lim).unwrap(), brute);
    }

    #[test]
    fn spectral_count_matches_enumeration(f in arb_table(6)) {
        prop_assume!(f.vars() >= 2);
        let code = RmParams::new(1, f.vars()).unwrap();
        let brute = coset_weight_distribution(&code, &f, &Limits::default()).unwrap();
        prop_assert_eq!(BigUint::from(rm1_coset_balanced_count(&f)), brute.balanced());
    }
}
