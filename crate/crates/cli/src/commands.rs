//! `build`, `verify` and `gen`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use sais_lcp::gen::{generate, GenParams};
use sais_lcp::reference::kasai_lcp;
use sais_lcp::{build_sa, verify as certify, Index, IndexWidth, InduceOptions};
use sha2::{Digest, Sha256};

use crate::{BuildArgs, GenArgs, VerifyArgs};

pub fn read_input(path: &Path) -> anyhow::Result<Vec<u8>> {
    fs::read(path).with_context(|| format!("reading {}", path.display()))
}

fn write_output(path: &Path, bytes: &[u8]) -> anyhow::Result<()> {
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

fn default_sa_path(input: &Path) -> PathBuf {
    let mut p = input.as_os_str().to_owned();
    p.push(".sa");
    PathBuf::from(p)
}

pub fn build(args: &BuildArgs) -> anyhow::Result<u8> {
    // Reject before reading so oversized inputs are refused cheaply.
    let len = fs::metadata(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))?
        .len();
    args.format.check_len(len)?;
    let text = read_input(&args.input)?;
    let sa_path = args
        .sa
        .clone()
        .unwrap_or_else(|| default_sa_path(&args.input));
    let options = InduceOptions::new(args.rmq, args.sstar);
    match &args.lcp {
        Some(lcp_path) => {
            let arrays = sais_lcp::build(&text, options);
            write_output(&sa_path, &args.format.encode(&arrays.sa())?)?;
            write_output(lcp_path, &args.format.encode(&arrays.lcp())?)?;
        }
        None => write_output(&sa_path, &args.format.encode(&build_sa(&text))?)?,
    }
    Ok(0)
}

/// SHA-256 of the array as little-endian 64-bit values, independent of
/// the index width used to build it.
pub fn digest<I: Index>(values: &[I]) -> String {
    let mut h = Sha256::new();
    for v in values {
        h.update((v.as_usize() as u64).to_le_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub ok: bool,
    pub lcp_digest: String,
    pub message: String,
}

pub fn verify_text(text: &[u8], args: &VerifyArgs) -> VerifyOutcome {
    match IndexWidth::for_len(text.len()) {
        IndexWidth::W32 => verify_at::<u32>(text, args),
        IndexWidth::W64 => verify_at::<u64>(text, args),
    }
}

fn verify_at<I: Index>(text: &[u8], args: &VerifyArgs) -> VerifyOutcome {
    let options = InduceOptions::new(args.rmq, args.sstar);
    let (sa, lcp) = args.algo.run::<I>(text, options);
    let lcp_digest = digest(&lcp);
    let report = certify(text, &sa, &lcp);
    if !report.ok {
        return VerifyOutcome {
            ok: false,
            lcp_digest,
            message: format!("{}: {report}", args.algo),
        };
    }
    let reference = kasai_lcp(text, &sa);
    if let Some(i) = (0..lcp.len()).find(|&i| lcp[i] != reference[i]) {
        return VerifyOutcome {
            ok: false,
            lcp_digest,
            message: format!("{}: differs from kasai at index {i}", args.algo),
        };
    }
    VerifyOutcome {
        ok: true,
        lcp_digest,
        message: format!("{}: ok, n={}", args.algo, text.len()),
    }
}

pub fn verify(args: &VerifyArgs) -> anyhow::Result<u8> {
    let text = read_input(&args.input)?;
    let out = verify_text(&text, args);
    println!("{}", out.message);
    println!("lcp sha256 {}", out.lcp_digest);
    Ok(if out.ok { 0 } else { 1 })
}

pub fn gen(args: &GenArgs) -> anyhow::Result<u8> {
    let bytes = generate(GenParams::new(
        args.kind,
        args.sigma,
        args.length,
        args.seed,
    ))?;
    match &args.out {
        Some(path) => write_output(path, &bytes)?,
        None => std::io::stdout()
            .lock()
            .write_all(&bytes)
            .context("writing stdout")?,
    }
    Ok(0)
}
