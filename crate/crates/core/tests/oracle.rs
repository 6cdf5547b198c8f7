use sais_lcp::gen::{generate, GenKind, GenParams};
use sais_lcp::lcp::build_sa_and_lcp_with_stats;
use sais_lcp::reference::{brute_force_sa, kasai_lcp, naive_lcp, phi_lcp};
use sais_lcp::{build_sa_and_lcp, verify, InduceOptions, SuffixArray, Text};

fn all_texts(sigma: u8, max_len: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..=max_len).flat_map(move |len| {
        let total = (sigma as usize).pow(len as u32);
        (0..total).map(move |mut code| {
            let mut t = vec![0u8; len];
            for c in t.iter_mut() {
                *c = b'a' + (code % sigma as usize) as u8;
                code /= sigma as usize;
            }
            t
        })
    })
}

fn check(text: &[u8], options: InduceOptions) {
    let (sa, lcp) = build_sa_and_lcp::<u8, u32>(Text::from_bytes(text), options);
    let expect_sa: SuffixArray<u32> = brute_force_sa(text);
    assert_eq!(
        sa.as_slice(),
        expect_sa.as_slice(),
        "sa of {:?} {options:?}",
        String::from_utf8_lossy(text)
    );
    let expect_lcp = naive_lcp(text, &expect_sa);
    assert_eq!(
        lcp.as_slice(),
        expect_lcp.as_slice(),
        "lcp of {:?} {options:?}",
        String::from_utf8_lossy(text)
    );
}

#[test]
fn exhaustive_ternary_all_options() {
    for t in all_texts(3, 8) {
        for options in InduceOptions::all() {
            check(&t, options);
        }
    }
}

#[test]
fn exhaustive_binary_all_options() {
    for t in all_texts(2, 12) {
        for options in InduceOptions::all() {
            check(&t, options);
        }
    }
}

#[test]
fn generated_inputs_match_kasai_and_phi() {
    for kind in GenKind::ALL {
        for sigma in [1, 2, 4, 26, 255] {
            for seed in 0..3 {
                let t = generate(GenParams::new(kind, sigma, 20_000, seed)).unwrap();
                let sa: SuffixArray<u32> = sais_lcp::build_suffix_array(Text::from_bytes(&t));
                let kasai = kasai_lcp(&t, &sa);
                assert_eq!(kasai.as_slice(), phi_lcp(&t, &sa).as_slice());
                for options in InduceOptions::all() {
                    let (sa2, lcp) = build_sa_and_lcp::<u8, u32>(Text::from_bytes(&t), options);
                    assert_eq!(
                        sa2.as_slice(),
                        sa.as_slice(),
                        "{kind} sigma={sigma} {options:?}"
                    );
                    assert_eq!(
                        lcp.as_slice(),
                        kasai.as_slice(),
                        "{kind} sigma={sigma} {options:?}"
                    );
                    assert!(verify(&t, &sa2, &lcp).ok);
                }
            }
        }
    }
}

#[test]
fn widths_agree() {
    let t = generate(GenParams::new(GenKind::Markov, 5, 5000, 7)).unwrap();
    for options in InduceOptions::all() {
        let (sa32, lcp32) = build_sa_and_lcp::<u8, u32>(Text::from_bytes(&t), options);
        let (sa64, lcp64) = build_sa_and_lcp::<u8, u64>(Text::from_bytes(&t), options);
        assert_eq!(sa32.widen::<u64>(), sa64);
        assert_eq!(lcp32.widen::<u64>(), lcp64);
    }
}

#[test]
fn recursion_depth_logarithmic() {
    for kind in GenKind::ALL {
        for n in [10usize, 1000, 50_000] {
            let t = generate(GenParams::new(kind, 3, n, 1)).unwrap();
            let (_, _, stats) = build_sa_and_lcp_with_stats::<u8, u32>(
                Text::from_bytes(&t),
                InduceOptions::new(Default::default(), sais_lcp::SstarLcpMethod::Recursive),
            );
            assert!(
                stats.levels as f64 <= ((n + 1) as f64).log2(),
                "{kind} n={n} levels={}",
                stats.levels
            );
        }
    }
}

#[test]
fn wider_symbols() {
    let t: Vec<u32> = (0..3000u32).map(|i| (i * 7919 % 13) ^ (i / 100)).collect();
    let text = Text::new(&t, 64).unwrap();
    let (sa, lcp) = build_sa_and_lcp::<u32, u32>(text, InduceOptions::default());
    let expect: SuffixArray<u32> = brute_force_sa(&t);
    assert_eq!(sa, expect);
    assert_eq!(lcp, naive_lcp(&t, &expect));
}

fn rescale_work(t: &[u8]) -> usize {
    let options = InduceOptions::new(Default::default(), sais_lcp::SstarLcpMethod::Recursive);
    let (sa, lcp, stats) = build_sa_and_lcp_with_stats::<u8, u32>(Text::from_bytes(t), options);
    assert!(verify(t, &sa, &lcp).ok);
    stats.rescale_work
}

#[test]
fn rescale_linear_on_periodic() {
    for n in [1000usize, 10_000, 100_000] {
        let t: Vec<u8> = b"ab".iter().cycle().take(n).copied().collect();
        assert!(rescale_work(&t) <= 2 * n, "n={n}");
    }
}

#[test]
fn rescale_linear_when_many_ranks_share_a_mismatch() {
    // Every suffix in the (ba)^k prefixes stops matching inside the same
    // long a-run, which a per-rank comparison would rescan k times.
    for k in [500usize, 2000, 8000] {
        let mut t = Vec::new();
        for end in *b"bc" {
            t.extend(b"ba".repeat(k));
            t.extend(std::iter::repeat_n(b'a', 2 * k));
            t.push(end);
        }
        assert!(rescale_work(&t) <= 2 * t.len(), "k={k}");
    }
}
