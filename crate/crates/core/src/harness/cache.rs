use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::polyring::{deserialize, serialize, Polynomial};

pub const CACHE_ENV: &str = "BINV_CACHE_DIR";

/// What a cache entry holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    H,
    K,
    GTilde,
}

impl std::str::FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" => Ok(Target::H),
            "K" => Ok(Target::K),
            "Gt" => Ok(Target::GTilde),
            _ => Err(Error::Parse(format!("unknown target {s:?}, expected H, K or Gt"))),
        }
    }
}

impl std::fmt::Display for Target {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Target::H => "H",
            Target::K => "K",
            Target::GTilde => "Gt",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CacheKey {
    pub target: Target,
    pub genus: usize,
    pub dim: Option<usize>,
}

impl CacheKey {
    pub fn new(target: Target, genus: usize, dim: Option<usize>) -> Self {
        CacheKey { target, genus, dim }
    }

    pub fn file_name(&self) -> String {
        match self.dim {
            Some(d) => format!("{}_g{}_d{}.binv", self.target, self.genus, d),
            None => format!("{}_g{}.binv", self.target, self.genus),
        }
    }
}

/// Directory of immutable `BINV 1` files. Writes go through a temporary
/// file and a rename, so concurrent readers never see partial data.
#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$BINV_CACHE_DIR`, or `.binv-cache` under the working directory.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => Cache::new(d),
            _ => Cache::new(".binv-cache"),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    /// `None` when the entry is absent or written by another format version.
    pub fn load(&self, key: &CacheKey) -> Result<Option<Polynomial>> {
        let text = match fs::read_to_string(self.path(key)) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        match deserialize(&text) {
            Ok(p) => Ok(Some(p)),
            Err(Error::UnsupportedVersion(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    pub fn store(&self, key: &CacheKey, p: &Polynomial) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(key);
        let tmp = self.dir.join(format!(".{}.{}.tmp", key.file_name(), std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serialize(p).as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    pub fn get_or_compute(
        &self,
        key: &CacheKey,
        compute: impl FnOnce() -> Result<Polynomial>,
    ) -> Result<(Polynomial, bool)> {
        if let Some(p) = self.load(key)? {
            return Ok((p, true));
        }
        let p = compute()?;
        self.store(key, &p)?;
        Ok((p, false))
    }
}
