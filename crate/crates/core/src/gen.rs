//! Deterministic synthetic inputs.

use std::fmt;
use std::str::FromStr;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Geometric;

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    /// Uniform i.i.d. symbols.
    Random,
    /// `c0 c1 .. c(s-1)` repeated.
    Periodic,
    /// Runs of geometric length, each of a uniformly drawn symbol.
    Runs,
    /// Order-1 Markov chain with skewed transitions.
    Markov,
}

impl GenKind {
    pub const ALL: [GenKind; 4] = [
        GenKind::Random,
        GenKind::Periodic,
        GenKind::Runs,
        GenKind::Markov,
    ];

    pub fn label(self) -> &'static str {
        match self {
            GenKind::Random => "random",
            GenKind::Periodic => "periodic",
            GenKind::Runs => "runs",
            GenKind::Markov => "markov",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        GenKind::ALL
            .into_iter()
            .find(|k| k.label() == s)
            .ok_or_else(|| Error::UnknownOption {
                what: "generator",
                value: s.to_owned(),
            })
    }
}

pub const MAX_SIGMA: usize = 255;

/// Byte used for the `i`-th symbol: lowercase letters up to 26 symbols,
/// raw byte values beyond.
pub fn symbol_byte(sigma: usize, i: usize) -> u8 {
    if sigma <= 26 {
        b'a' + i as u8
    } else {
        i as u8
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub kind: GenKind,
    pub sigma: usize,
    pub length: usize,
    pub seed: u64,
}

impl GenParams {
    pub fn new(kind: GenKind, sigma: usize, length: usize, seed: u64) -> Self {
        GenParams {
            kind,
            sigma,
            length,
            seed,
        }
    }
}

/// Mean run length of [`GenKind::Runs`].
const MEAN_RUN: f64 = 4.0;

pub fn generate(params: GenParams) -> Result<Vec<u8>, Error> {
    let GenParams {
        kind,
        sigma,
        length,
        seed,
    } = params;
    if !(1..=MAX_SIGMA).contains(&sigma) {
        return Err(Error::InvalidParameter(format!(
            "sigma must be in 1..={MAX_SIGMA}, got {sigma}"
        )));
    }
    let alphabet: Vec<u8> = (0..sigma).map(|i| symbol_byte(sigma, i)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(length);
    match kind {
        GenKind::Random => {
            out.extend((0..length).map(|_| alphabet[rng.random_range(0..sigma)]));
        }
        GenKind::Periodic => {
            out.extend(alphabet.iter().cycle().take(length));
        }
        GenKind::Runs => {
            let geo = Geometric::new(1.0 / MEAN_RUN).expect("valid probability");
            while out.len() < length {
                let c = alphabet[rng.random_range(0..sigma)];
                let run = (1 + geo.sample(&mut rng) as usize).min(length - out.len());
                out.extend(std::iter::repeat_n(c, run));
            }
        }
        GenKind::Markov => {
            let chain = MarkovChain::new(sigma, &mut rng);
            let mut state = rng.random_range(0..sigma);
            for _ in 0..length {
                out.push(alphabet[state]);
                state = chain.next[state].sample(&mut rng);
            }
        }
    }
    Ok(out)
}

/// Each state draws its successors from a Zipf-shaped distribution over
/// a state-specific permutation of the alphabet.
struct MarkovChain {
    next: Vec<WeightedIndex<f64>>,
}

impl MarkovChain {
    const ZIPF_EXPONENT: f64 = 1.3;

    fn new(sigma: usize, rng: &mut ChaCha8Rng) -> Self {
        let next = (0..sigma)
            .map(|_| {
                let mut order: Vec<usize> = (0..sigma).collect();
                order.shuffle(rng);
                let mut weights = vec![0.0; sigma];
                for (k, &s) in order.iter().enumerate() {
                    weights[s] = 1.0 / ((k + 1) as f64).powf(Self::ZIPF_EXPONENT);
                }
                WeightedIndex::new(weights).expect("positive weights")
            })
            .collect();
        MarkovChain { next }
    }
}
