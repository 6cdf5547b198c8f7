use proptest::prelude::*;

use sais_lcp::classify::{classify, sstar_positions};
use sais_lcp::lcp::{build_sa_and_lcp_with_stats, seam_lcp, sstar_lcp_sparse_phi};
use sais_lcp::reference::{brute_force_sa, kasai_lcp_counted, naive_lcp, phi_lcp_counted};
use sais_lcp::rmq::{MArrayTracker, MinTracker, ScanTracker, StackTracker};
use sais_lcp::{build_sa_and_lcp, verify, InduceOptions, SuffixArray, Text, ViolationKind};

#[derive(Clone, Debug)]
enum Op {
    Absorb(u32),
    Take(usize),
}

fn ops(sigma: usize) -> impl Strategy<Value = Vec<Op>> {
    prop::collection::vec(
        prop_oneof![
            (0u32..50).prop_map(Op::Absorb),
            (0..sigma).prop_map(Op::Take),
        ],
        0..400,
    )
}

fn text(max_sigma: u8) -> impl Strategy<Value = Vec<u8>> {
    (1..=max_sigma).prop_flat_map(|s| prop::collection::vec(b'a'..b'a' + s, 0..300))
}

fn naive_common(t: &[u8], a: usize, b: usize) -> usize {
    t[a..]
        .iter()
        .zip(&t[b..])
        .take_while(|(x, y)| x == y)
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn trackers_agree((sigma, ops) in (1usize..8).prop_flat_map(|s| (Just(s), ops(s)))) {
        let mut scan = ScanTracker::<u32>::new(sigma);
        let mut marray = MArrayTracker::<u32>::new(sigma);
        let mut stack = StackTracker::<u32>::new(sigma);
        let mut pending: Vec<Option<u32>> = vec![None; sigma];
        for op in &ops {
            match *op {
                Op::Absorb(v) => {
                    scan.absorb(v);
                    marray.absorb(v);
                    stack.absorb(v);
                    for p in pending.iter_mut() {
                        *p = Some(p.map_or(v, |m| m.min(v)));
                    }
                    prop_assert!(stack.is_strictly_increasing());
                }
                Op::Take(c) => {
                    let want = pending[c].take();
                    prop_assert_eq!(scan.take(c), want);
                    prop_assert_eq!(marray.take(c), want);
                    prop_assert_eq!(stack.take(c), want);
                }
            }
        }
        prop_assert!(stack.len() <= sigma);
    }

    #[test]
    fn all_options_match_oracle(t in text(6)) {
        let expect_sa: SuffixArray<u32> = brute_force_sa(&t);
        let expect_lcp = naive_lcp(&t, &expect_sa);
        for options in InduceOptions::all() {
            let (sa, lcp) = build_sa_and_lcp::<u8, u32>(Text::from_bytes(&t), options);
            prop_assert_eq!(&sa, &expect_sa);
            prop_assert_eq!(&lcp, &expect_lcp);
        }
    }

    #[test]
    fn seam_is_shorter_run(t in text(4)) {
        let types = classify(Text::from_bytes(&t));
        for i in 0..t.len() {
            for j in 0..t.len() {
                if t[i] == t[j] && types.is_l(i) && types.is_s(j) {
                    prop_assert_eq!(seam_lcp(Text::from_bytes(&t), i, j), naive_common(&t, i, j));
                }
            }
        }
    }

    #[test]
    fn sparse_phi_matches_naive(t in text(5)) {
        let types = classify(Text::from_bytes(&t));
        let sstar = sstar_positions(&types);
        let mut sorted: Vec<usize> = sstar.into_iter().filter(|&p| p < t.len()).collect();
        sorted.sort_by(|&a, &b| t[a..].cmp(&t[b..]));
        let got = sstar_lcp_sparse_phi(Text::from_bytes(&t), &sorted);
        let mut want = vec![0; sorted.len()];
        for r in 1..sorted.len() {
            want[r] = naive_common(&t, sorted[r - 1], sorted[r]);
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn counters_linear(t in text(4)) {
        let n = t.len();
        for options in InduceOptions::all() {
            let (sa, _, stats) = build_sa_and_lcp_with_stats::<u8, u32>(Text::from_bytes(&t), options);
            prop_assert!(stats.seam_symbols <= 2 * n);
            prop_assert!(stats.sstar_phi_comparisons <= 2 * n + 1);
            prop_assert!(stats.rescale_work <= 2 * n + 1);
            let (_, k) = kasai_lcp_counted(&t, &sa);
            let (_, p) = phi_lcp_counted(&t, &sa);
            prop_assert!(k <= 2 * n && p <= 2 * n);
        }
    }

    #[test]
    fn verify_rejects_lcp_mutation(t in text(3), at in any::<prop::sample::Index>(), delta in prop_oneof![Just(-1i64), Just(1i64), 2i64..5]) {
        prop_assume!(t.len() >= 2);
        let (sa, lcp) = build_sa_and_lcp::<u8, u32>(Text::from_bytes(&t), InduceOptions::default());
        prop_assert!(verify(&t, &sa, &lcp).ok);
        let mut bad = lcp.into_vec();
        let i = at.index(t.len());
        let v = bad[i] as i64 + delta;
        prop_assume!(v >= 0);
        bad[i] = v as u32;
        let r = verify(&t, &sa, &bad);
        prop_assert!(!r.ok);
        let kind = r.first_violation.unwrap().kind;
        if delta < 0 {
            prop_assert_eq!(kind, ViolationKind::LcpTooShort);
        } else {
            prop_assert!(matches!(kind, ViolationKind::LcpTooLong | ViolationKind::LcpTooShort));
        }
    }

    #[test]
    fn verify_rejects_sa_swap(t in text(3), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        prop_assume!(t.len() >= 2);
        let (sa, lcp) = build_sa_and_lcp::<u8, u32>(Text::from_bytes(&t), InduceOptions::default());
        let (i, j) = (a.index(t.len()), b.index(t.len()));
        prop_assume!(i != j);
        let mut bad = sa.into_vec();
        bad.swap(i, j);
        prop_assert!(!verify(&t, &bad, &lcp).ok);
        let mut dup = bad.clone();
        dup[i] = dup[j];
        prop_assert_eq!(verify(&t, &dup, &lcp).first_violation.unwrap().kind, ViolationKind::NotPermutation);
    }
}
