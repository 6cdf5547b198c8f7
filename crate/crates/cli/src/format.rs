//! On-disk array encodings.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Context};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Format {
    /// Little-endian `u32`, no header. Only for texts shorter than 2^31.
    Bin32,
    /// Little-endian `u64`, no header.
    #[default]
    Bin64,
    /// One decimal value per line.
    Text,
}

/// Longest text whose arrays can be written as [`Format::Bin32`].
pub const BIN32_MAX_LEN: u64 = (1 << 31) - 1;

impl Format {
    pub const ALL: [Format; 3] = [Format::Bin32, Format::Bin64, Format::Text];

    pub fn label(self) -> &'static str {
        match self {
            Format::Bin32 => "bin32",
            Format::Bin64 => "bin64",
            Format::Text => "text",
        }
    }

    /// Fails when arrays for a text of `n` bytes do not fit this format.
    pub fn check_len(self, n: u64) -> anyhow::Result<()> {
        if self == Format::Bin32 && n > BIN32_MAX_LEN {
            bail!("input has {n} bytes; bin32 holds at most {BIN32_MAX_LEN}, use bin64");
        }
        Ok(())
    }

    pub fn encode(self, values: &[usize]) -> anyhow::Result<Vec<u8>> {
        self.check_len(values.len() as u64)?;
        Ok(match self {
            Format::Bin32 => values
                .iter()
                .flat_map(|&v| (v as u32).to_le_bytes())
                .collect(),
            Format::Bin64 => values
                .iter()
                .flat_map(|&v| (v as u64).to_le_bytes())
                .collect(),
            Format::Text => {
                let mut out = String::with_capacity(values.len() * 8);
                for v in values {
                    out.push_str(&v.to_string());
                    out.push('\n');
                }
                out.into_bytes()
            }
        })
    }

    pub fn decode(self, bytes: &[u8]) -> anyhow::Result<Vec<usize>> {
        match self {
            Format::Bin32 => {
                let chunks = bytes.chunks_exact(4);
                if !chunks.remainder().is_empty() {
                    bail!("bin32 data length {} is not a multiple of 4", bytes.len());
                }
                Ok(chunks
                    .map(|c| u32::from_le_bytes(c.try_into().unwrap()) as usize)
                    .collect())
            }
            Format::Bin64 => {
                let chunks = bytes.chunks_exact(8);
                if !chunks.remainder().is_empty() {
                    bail!("bin64 data length {} is not a multiple of 8", bytes.len());
                }
                chunks
                    .map(|c| {
                        let v = u64::from_le_bytes(c.try_into().unwrap());
                        usize::try_from(v).context("value exceeds the address width")
                    })
                    .collect()
            }
            Format::Text => std::str::from_utf8(bytes)
                .context("text array is not UTF-8")?
                .lines()
                .enumerate()
                .map(|(i, l)| {
                    l.trim()
                        .parse()
                        .with_context(|| format!("line {}: `{l}` is not a number", i + 1))
                })
                .collect(),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Format {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        Format::ALL
            .into_iter()
            .find(|f| f.label() == s)
            .with_context(|| format!("unknown format `{s}` (expected bin32, bin64 or text)"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let v = vec![0, 1, 3, 0, 0, 2, 70000];
        for f in Format::ALL {
            assert_eq!(f.decode(&f.encode(&v).unwrap()).unwrap(), v, "{f}");
        }
        assert_eq!(Format::Text.encode(&[0, 1, 3]).unwrap(), b"0\n1\n3\n");
        assert_eq!(
            Format::Bin32.encode(&[1, 258]).unwrap(),
            [1, 0, 0, 0, 2, 1, 0, 0]
        );
        assert!(Format::Bin64.encode(&[]).unwrap().is_empty());
    }

    #[test]
    fn width_guard() {
        assert!(Format::Bin32.check_len(BIN32_MAX_LEN).is_ok());
        assert!(Format::Bin32.check_len(3 << 30).is_err());
        assert!(Format::Bin64.check_len(3 << 30).is_ok());
    }

    #[test]
    fn bad_input() {
        assert!(Format::Bin32.decode(&[1, 2, 3]).is_err());
        assert!(Format::Text.decode(b"1\nx\n").is_err());
        assert!("bin16".parse::<Format>().is_err());
    }
}
