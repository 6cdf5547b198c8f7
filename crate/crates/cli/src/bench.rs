//! Timing harness.
//!
//! Per input the suffix array is timed alone, the inducing algorithm is
//! timed building SA and LCP together, and each standalone LCP algorithm
//! is timed on the finished suffix array. The LCP cost charged to the
//! inducing algorithm is the combined time minus the SA-only time.

use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::time::Instant;

use anyhow::Context;
use sais_lcp::{
    build_sa_and_lcp, build_suffix_array, verify, Index, IndexWidth, InduceOptions, Text,
};

use crate::commands::read_input;
use crate::{Algo, BenchArgs};

pub const CSV_HEADER: [&str; 7] = [
    "input",
    "size",
    "algorithm",
    "tracker",
    "seconds",
    "peak_bytes",
    "verified",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
    /// The algorithm panicked; no output to check.
    Error,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Failed => "fail",
            Status::Error => "error",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub input: String,
    pub size: usize,
    pub algorithm: Algo,
    /// Only meaningful for [`Algo::Induce`].
    pub tracker: Option<sais_lcp::TrackerKind>,
    /// Median LCP time; for the inducing algorithm the marginal cost.
    pub seconds: Option<f64>,
    /// Median SA-only time of the input.
    pub sa_seconds: Option<f64>,
    /// Median time for SA plus LCP.
    pub total_seconds: Option<f64>,
    pub peak_bytes: usize,
    pub verified: Status,
}

impl BenchRecord {
    pub fn csv_row(&self) -> [String; 7] {
        [
            self.input.clone(),
            self.size.to_string(),
            self.algorithm.to_string(),
            self.tracker
                .map_or_else(|| "-".to_owned(), |t| t.to_string()),
            self.seconds.map_or_else(String::new, |s| format!("{s:.6}")),
            self.peak_bytes.to_string(),
            self.verified.to_string(),
        ]
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub algos: Vec<Algo>,
    pub options: InduceOptions,
    pub repeat: u32,
    pub verify: bool,
}

/// Median of `samples`, the mean of the middle two for an even count.
pub fn median(mut samples: Vec<f64>) -> f64 {
    assert!(!samples.is_empty());
    samples.sort_by(f64::total_cmp);
    let m = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[m]
    } else {
        (samples[m - 1] + samples[m]) / 2.0
    }
}

/// Runs `f` `repeat` times and returns the median wall time and the last
/// result, or `None` if any run panicked.
pub fn time_median<T>(repeat: u32, mut f: impl FnMut() -> T) -> Option<(f64, T)> {
    let mut samples = Vec::with_capacity(repeat as usize);
    let mut last = None;
    for _ in 0..repeat.max(1) {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(&mut f)).ok()?;
        samples.push(start.elapsed().as_secs_f64());
        last = Some(out);
    }
    Some((median(samples), last.expect("at least one run")))
}

/// Estimated peak working memory in bytes for a text of `n` bytes with
/// `width`-byte array entries. Counts the text and the arrays alive in the
/// largest phase; allocator overhead is ignored.
pub fn peak_estimate(algo: Algo, n: usize, width: usize) -> usize {
    match algo {
        // text, SA and LCP workspaces, type flags, and the reduced problem
        // (text, positions, name LCPs) of at most n/2 S*-suffixes.
        Algo::Induce => n + 2 * (n + 1) * width + (n + 1) + n / 2 * (2 * width + 8),
        // text, SA, rank or Φ array, LCP
        Algo::Kasai | Algo::Phi => n + 3 * n * width,
        Algo::Naive => n + 2 * n * width,
    }
}

pub fn bench_text(name: &str, text: &[u8], config: &BenchConfig) -> Vec<BenchRecord> {
    match IndexWidth::for_len(text.len()) {
        IndexWidth::W32 => bench_at::<u32>(name, text, config),
        IndexWidth::W64 => bench_at::<u64>(name, text, config),
    }
}

fn bench_at<I: Index>(name: &str, text: &[u8], config: &BenchConfig) -> Vec<BenchRecord> {
    let n = text.len();
    let t = Text::from_bytes(text);
    let sa_run = time_median(config.repeat, || build_suffix_array::<u8, I>(t).into_vec());
    let sa_seconds = sa_run.as_ref().map(|r| r.0);
    let check = |sa: &[I], lcp: &[I]| {
        if !config.verify {
            Status::Skipped
        } else if verify(text, sa, lcp).ok {
            Status::Ok
        } else {
            Status::Failed
        }
    };
    config
        .algos
        .iter()
        .map(|&algo| {
            let mut record = BenchRecord {
                input: name.to_owned(),
                size: n,
                algorithm: algo,
                tracker: (algo == Algo::Induce).then_some(config.options.tracker),
                seconds: None,
                sa_seconds,
                total_seconds: None,
                peak_bytes: peak_estimate(algo, n, size_of::<I>()),
                verified: Status::Error,
            };
            let run = match (algo, &sa_run) {
                (Algo::Induce, _) => time_median(config.repeat, || {
                    let (sa, lcp) = build_sa_and_lcp::<u8, I>(t, config.options);
                    (sa.into_vec(), lcp.into_vec())
                })
                .map(|(total, (sa, lcp))| {
                    let marginal = sa_seconds.map_or(total, |s| (total - s).max(0.0));
                    (marginal, total, check(&sa, &lcp))
                }),
                (_, Some((sa_time, sa))) => time_median(config.repeat, || {
                    algo.lcp_from_sa(text, sa).expect("standalone algorithm")
                })
                .map(|(secs, lcp)| (secs, sa_time + secs, check(sa, &lcp))),
                (_, None) => None,
            };
            if let Some((secs, total, status)) = run {
                record.seconds = Some(secs);
                record.total_seconds = Some(total);
                record.verified = status;
            }
            record
        })
        .collect()
}

fn opt_secs(s: Option<f64>) -> String {
    s.map_or_else(|| "failed".to_owned(), |s| format!("{s:.3}"))
}

pub fn print_table(records: &[BenchRecord]) {
    println!(
        "{:<24} {:>12} {:<8} {:<8} {:>9} {:>9} {:>9} {:>10}  verified",
        "input", "size", "algo", "tracker", "sa_s", "lcp_s", "total_s", "peak_MiB"
    );
    for r in records {
        println!(
            "{:<24} {:>12} {:<8} {:<8} {:>9} {:>9} {:>9} {:>10.1}  {}",
            r.input,
            r.size,
            r.algorithm.label(),
            r.tracker.map_or("-", |t| t.label()),
            opt_secs(r.sa_seconds),
            opt_secs(r.seconds),
            opt_secs(r.total_seconds),
            r.peak_bytes as f64 / (1 << 20) as f64,
            r.verified
        );
    }
}

pub fn write_csv(path: &Path, records: &[BenchRecord]) -> anyhow::Result<()> {
    let mut w =
        csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record(r.csv_row())?;
    }
    w.flush()?;
    Ok(())
}

pub fn bench(args: &BenchArgs) -> anyhow::Result<u8> {
    let config = BenchConfig {
        algos: args.algos.clone(),
        options: InduceOptions::new(args.rmq, args.sstar),
        repeat: args.repeat,
        verify: args.verify,
    };
    let mut records = Vec::new();
    for path in &args.inputs {
        let text = read_input(path)?;
        let name = path.file_name().map_or_else(
            || path.display().to_string(),
            |f| f.to_string_lossy().into_owned(),
        );
        records.extend(bench_text(&name, &text, &config));
    }
    print_table(&records);
    if let Some(path) = &args.csv {
        write_csv(path, &records)?;
    }
    let failed = records
        .iter()
        .any(|r| matches!(r.verified, Status::Failed | Status::Error));
    Ok(if failed { 1 } else { 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_repeats() {
        assert_eq!(median(vec![5.0, 1.0, 3.0, 9.0, 2.0]), 3.0);
        assert_eq!(median(vec![4.0, 1.0]), 2.5);
        let mut calls = 0;
        let (_, last) = time_median(5, || {
            calls += 1;
            calls
        })
        .unwrap();
        assert_eq!((calls, last), (5, 5));
    }

    #[test]
    fn panics_are_recorded() {
        let prev = std::panic::take_hook();
        std::panic::set_hook(Box::new(|_| {}));
        let r = time_median(3, || -> u32 { panic!("boom") });
        std::panic::set_hook(prev);
        assert!(r.is_none());
    }

    #[test]
    fn records_per_algorithm() {
        let config = BenchConfig {
            algos: Algo::ALL.to_vec(),
            options: InduceOptions::default(),
            repeat: 2,
            verify: true,
        };
        let records = bench_text("t", b"abracadabra abracadabra", &config);
        assert_eq!(records.len(), 4);
        for r in &records {
            assert_eq!(r.verified, Status::Ok);
            assert!(r.seconds.unwrap() >= 0.0);
            assert!(r.total_seconds.unwrap() >= r.seconds.unwrap());
        }
        assert_eq!(records[0].tracker, Some(sais_lcp::TrackerKind::MArray));
        assert_eq!(records[1].tracker, None);
    }
}
