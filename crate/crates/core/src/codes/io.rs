use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use super::{fixture, generate_regular_ldpc, hgp, CssCode, RegularLdpcOptions};
use crate::error::{Error, Result};
use crate::gf2::alist::{read_alist, write_alist};

/// Where a code comes from.
///
/// Text form: a fixture name (`hgp_625`), `alist:HX_PATH,HZ_PATH`,
/// `base:A_PATH` (hypergraph product of an alist base matrix) or
/// `gen:m,n,r,s,seed` (product of a random regular base matrix).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CodeSource {
    Fixture(String),
    Alist { hx: PathBuf, hz: PathBuf },
    Base(PathBuf),
    Generated { m: usize, n: usize, r: usize, s: usize, seed: u64 },
}

impl FromStr for CodeSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| Error::config("code", format!("`{s}`: {msg}"));
        if let Some(rest) = s.strip_prefix("alist:") {
            let (hx, hz) = rest.split_once(',').ok_or_else(|| bad("expected alist:HX_PATH,HZ_PATH"))?;
            return Ok(CodeSource::Alist {
                hx: hx.trim().into(),
                hz: hz.trim().into(),
            });
        }
        if let Some(rest) = s.strip_prefix("base:") {
            return Ok(CodeSource::Base(rest.trim().into()));
        }
        if let Some(rest) = s.strip_prefix("gen:") {
            let nums = rest
                .split(',')
                .map(|t| t.trim().parse::<u64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad("expected gen:m,n,r,s,seed"))?;
            let [m, n, r, s, seed] = nums[..] else {
                return Err(bad("expected gen:m,n,r,s,seed"));
            };
            return Ok(CodeSource::Generated {
                m: m as usize,
                n: n as usize,
                r: r as usize,
                s: s as usize,
                seed,
            });
        }
        if s.is_empty() {
            return Err(bad("empty code source"));
        }
        Ok(CodeSource::Fixture(s.to_string()))
    }
}

impl fmt::Display for CodeSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeSource::Fixture(name) => write!(f, "{name}"),
            CodeSource::Alist { hx, hz } => write!(f, "alist:{},{}", hx.display(), hz.display()),
            CodeSource::Base(path) => write!(f, "base:{}", path.display()),
            CodeSource::Generated { m, n, r, s, seed } => write!(f, "gen:{m},{n},{r},{s},{seed}"),
        }
    }
}

/// Builds or loads the code described by `source`.
pub fn load_code(source: &CodeSource) -> Result<CssCode> {
    match source {
        CodeSource::Fixture(name) => fixture(name),
        CodeSource::Alist { hx, hz } => {
            let name = hx
                .file_stem()
                .and_then(|s| s.to_str())
                .map(|s| s.trim_end_matches(".hx").to_string())
                .unwrap_or_else(|| "alist".into());
            CssCode::new(name, read_alist(hx)?, read_alist(hz)?)
        }
        CodeSource::Base(path) => Ok(hgp(&read_alist(path)?)?.with_name(source.to_string())),
        &CodeSource::Generated { m, n, r, s, seed } => {
            let base = generate_regular_ldpc(m, n, r, s, seed, RegularLdpcOptions::default())?;
            Ok(hgp(&base.matrix)?.with_name(source.to_string()))
        }
    }
}

/// Writes `H_X` and `H_Z` as `<dir>/<stem>.hx.alist` and `<dir>/<stem>.hz.alist`;
/// returns the source that loads them back.
pub fn store_code(code: &CssCode, dir: impl AsRef<Path>, stem: &str) -> Result<CodeSource> {
    let dir = dir.as_ref();
    let hx = dir.join(format!("{stem}.hx.alist"));
    let hz = dir.join(format!("{stem}.hz.alist"));
    write_alist(&hx, code.hx())?;
    write_alist(&hz, code.hz())?;
    Ok(CodeSource::Alist { hx, hz })
}
