//! LCP algorithms selectable from the command line.

use std::fmt;
use std::str::FromStr;

use anyhow::Context;
use sais_lcp::reference::{kasai_lcp, naive_lcp, phi_lcp};
use sais_lcp::{build_sa_and_lcp, build_suffix_array, Index, InduceOptions, Text};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Algo {
    /// SA and LCP together by induced sorting.
    #[default]
    Induce,
    Kasai,
    Phi,
    Naive,
}

impl Algo {
    pub const ALL: [Algo; 4] = [Algo::Induce, Algo::Kasai, Algo::Phi, Algo::Naive];

    pub fn label(self) -> &'static str {
        match self {
            Algo::Induce => "induce",
            Algo::Kasai => "kasai",
            Algo::Phi => "phi",
            Algo::Naive => "naive",
        }
    }

    /// Standalone LCP from a finished suffix array. `None` for [`Algo::Induce`].
    pub fn lcp_from_sa<I: Index>(self, text: &[u8], sa: &[I]) -> Option<Vec<I>> {
        match self {
            Algo::Induce => None,
            Algo::Kasai => Some(kasai_lcp(text, sa).into_vec()),
            Algo::Phi => Some(phi_lcp(text, sa).into_vec()),
            Algo::Naive => Some(naive_lcp(text, sa).into_vec()),
        }
    }

    /// SA and LCP of `text`, the standalone algorithms running after SA-IS.
    pub fn run<I: Index>(self, text: &[u8], options: InduceOptions) -> (Vec<I>, Vec<I>) {
        let t = Text::from_bytes(text);
        match self {
            Algo::Induce => {
                let (sa, lcp) = build_sa_and_lcp::<u8, I>(t, options);
                (sa.into_vec(), lcp.into_vec())
            }
            _ => {
                let sa = build_suffix_array::<u8, I>(t).into_vec();
                let lcp = self.lcp_from_sa(text, &sa).expect("standalone algorithm");
                (sa, lcp)
            }
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Algo {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        Algo::ALL
            .into_iter()
            .find(|a| a.label() == s)
            .with_context(|| {
                format!("unknown algorithm `{s}` (expected induce, kasai, phi or naive)")
            })
    }
}
