//! Line-oriented checkpoint of the two retained enumeration levels.
//!
//! ```text
//! kmgrowth-checkpoint 1
//! algebra <fingerprint>
//! rank <n>
//! level <i>
//! coeffs <c_0> ... <c_i>
//! previous <count>
//! <coords of each vector, one per line>
//! current <count>
//! <coords ...>
//! end
//! ```

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use super::{GammaVector, WeylError};

pub const CHECKPOINT_VERSION: u32 = 1;
const MAGIC: &str = "kmgrowth-checkpoint";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelCheckpoint {
    /// Fingerprint of the Cartan matrix.
    pub algebra: String,
    pub rank: usize,
    pub level: usize,
    pub coeffs: Vec<u64>,
    pub previous: Vec<GammaVector>,
    pub current: Vec<GammaVector>,
}

impl LevelCheckpoint {
    pub fn write(&self, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "{MAGIC} {CHECKPOINT_VERSION}")?;
        writeln!(out, "algebra {}", self.algebra)?;
        writeln!(out, "rank {}", self.rank)?;
        writeln!(out, "level {}", self.level)?;
        write!(out, "coeffs")?;
        for c in &self.coeffs {
            write!(out, " {c}")?;
        }
        writeln!(out)?;
        for (name, set) in [("previous", &self.previous), ("current", &self.current)] {
            writeln!(out, "{name} {}", set.len())?;
            for v in set {
                let mut first = true;
                for c in v.coords() {
                    if !first {
                        out.write_all(b" ")?;
                    }
                    first = false;
                    write!(out, "{c}")?;
                }
                out.write_all(b"\n")?;
            }
        }
        writeln!(out, "end")
    }

    /// Writes to a sibling temp file and renames it into place.
    pub fn write_to(&self, path: &Path) -> Result<(), WeylError> {
        let tmp = path.with_extension("tmp");
        {
            let mut out = BufWriter::new(fs::File::create(&tmp)?);
            self.write(&mut out)?;
            out.flush()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn read_from(path: &Path) -> Result<Self, WeylError> {
        Self::read(BufReader::new(fs::File::open(path)?))
    }

    pub fn read(input: impl BufRead) -> Result<Self, WeylError> {
        let mut lines = input.lines();
        let mut next_line = || -> Result<String, WeylError> {
            lines.next().ok_or_else(|| format_err("unexpected end of file"))?.map_err(WeylError::from)
        };

        let header = next_line()?;
        let version = header
            .strip_prefix(MAGIC)
            .map(str::trim)
            .ok_or_else(|| format_err("missing checkpoint header"))?;
        let version: u32 = version.parse().map_err(|_| format_err("bad version"))?;
        if version != CHECKPOINT_VERSION {
            return Err(WeylError::CheckpointVersionMismatch { expected: CHECKPOINT_VERSION, found: version });
        }
        let algebra = field(&next_line()?, "algebra")?.to_string();
        let rank: usize = parse(field(&next_line()?, "rank")?)?;
        let level: usize = parse(field(&next_line()?, "level")?)?;
        let coeffs_line = next_line()?;
        let coeffs = coeffs_line
            .strip_prefix("coeffs")
            .ok_or_else(|| format_err("expected coeffs"))?
            .split_whitespace()
            .map(parse)
            .collect::<Result<Vec<u64>, _>>()?;
        if coeffs.len() != level + 1 {
            return Err(format_err("coefficient count does not match level"));
        }
        let mut sets = Vec::with_capacity(2);
        for name in ["previous", "current"] {
            let count: usize = parse(field(&next_line()?, name)?)?;
            let mut set = Vec::with_capacity(count);
            for _ in 0..count {
                let coords = next_line()?
                    .split_whitespace()
                    .map(parse)
                    .collect::<Result<Vec<i64>, _>>()?;
                if coords.len() != rank {
                    return Err(format_err("vector length does not match rank"));
                }
                set.push(GammaVector::from(coords));
            }
            if !set.windows(2).all(|w| w[0] < w[1]) {
                return Err(format_err("level set is not strictly sorted"));
            }
            sets.push(set);
        }
        if next_line()? != "end" {
            return Err(format_err("missing end marker"));
        }
        let current = sets.pop().expect("two sets");
        let previous = sets.pop().expect("two sets");
        if current.len() as u64 != coeffs[level] {
            return Err(format_err("current level size does not match its coefficient"));
        }
        Ok(LevelCheckpoint { algebra, rank, level, coeffs, previous, current })
    }
}

fn format_err(msg: &str) -> WeylError {
    WeylError::CheckpointFormat(msg.to_string())
}

fn field<'a>(line: &'a str, name: &str) -> Result<&'a str, WeylError> {
    line.strip_prefix(name)
        .and_then(|rest| rest.strip_prefix(' '))
        .ok_or_else(|| WeylError::CheckpointFormat(format!("expected `{name}`")))
}

fn parse<T: std::str::FromStr>(s: &str) -> Result<T, WeylError> {
    s.trim().parse().map_err(|_| WeylError::CheckpointFormat(format!("bad number {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> LevelCheckpoint {
        LevelCheckpoint {
            algebra: "abc123".into(),
            rank: 2,
            level: 1,
            coeffs: vec![1, 2],
            previous: vec![GammaVector::from(vec![0, 0])],
            current: vec![GammaVector::from(vec![0, 1]), GammaVector::from(vec![1, 0])],
        }
    }

    #[test]
    fn bytes_round_trip() {
        let mut first = Vec::new();
        sample().write(&mut first).unwrap();
        let back = LevelCheckpoint::read(&first[..]).unwrap();
        assert_eq!(back, sample());
        let mut second = Vec::new();
        back.write(&mut second).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn rejects_other_versions() {
        let mut bytes = Vec::new();
        sample().write(&mut bytes).unwrap();
        let text = String::from_utf8(bytes).unwrap().replacen("checkpoint 1", "checkpoint 7", 1);
        assert!(matches!(
            LevelCheckpoint::read(text.as_bytes()),
            Err(WeylError::CheckpointVersionMismatch { expected: 1, found: 7 })
        ));
    }

    #[test]
    fn rejects_truncated_and_corrupt() {
        let mut bytes = Vec::new();
        sample().write(&mut bytes).unwrap();
        let text = String::from_utf8(bytes).unwrap();
        let cut = &text[..text.len() - 4];
        assert!(matches!(LevelCheckpoint::read(cut.as_bytes()), Err(WeylError::CheckpointFormat(_))));
        let swapped = text.replace("0 1\n1 0", "1 0\n0 1");
        assert!(matches!(LevelCheckpoint::read(swapped.as_bytes()), Err(WeylError::CheckpointFormat(_))));
    }
}
