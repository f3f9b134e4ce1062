use std::fs;
use std::io::ErrorKind;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use super::{parse_json, serialize_json, Document, Payload};
use crate::crystal::Lattice;
use crate::error::{Error, Result};
use crate::params::CrystalParams;

pub const CACHE_ENV: &str = "DNBRANCH_CACHE";

/// A directory of serialized lattices, one file per `(e, regime, n)`.
///
/// A file built for level `n` also answers requests for any smaller level.
/// Files that fail to parse or validate are skipped with a warning.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$DNBRANCH_CACHE`, or `dnbranch` under the per-user data directory.
    pub fn from_env() -> Result<Self> {
        if let Some(dir) = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()) {
            return Ok(Cache::new(dir));
        }
        dirs::data_dir()
            .map(|d| Cache::new(d.join("dnbranch")))
            .ok_or_else(|| Error::InvalidArgument(format!("no data directory found; set {CACHE_ENV}")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn stem(params: &CrystalParams) -> String {
        format!("lattice-e{}-{}-l{}-n", params.e(), params.regime(), params.l())
    }

    pub fn path_for(&self, params: &CrystalParams, n: usize) -> PathBuf {
        self.dir.join(format!("{}{n}.json", Cache::stem(params)))
    }

    /// Writes through a temporary file and a rename, so readers never see a
    /// partial file.
    pub fn store(&self, lattice: &Lattice) -> Result<PathBuf> {
        static COUNTER: AtomicU64 = AtomicU64::new(0);
        fs::create_dir_all(&self.dir).map_err(|e| Error::io(&self.dir, e))?;
        let target = self.path_for(lattice.params(), lattice.n());
        let tmp = self.dir.join(format!(
            ".tmp-{}-{}-{}",
            std::process::id(),
            COUNTER.fetch_add(1, Ordering::Relaxed),
            target.file_name().and_then(|s| s.to_str()).unwrap_or("lattice")
        ));
        let text = serialize_json(&Document::new(*lattice.params(), Payload::Lattice(lattice.clone())));
        fs::write(&tmp, text).map_err(|e| Error::io(&tmp, e))?;
        if let Err(e) = fs::rename(&tmp, &target) {
            let _ = fs::remove_file(&tmp);
            return Err(Error::io(&target, e));
        }
        Ok(target)
    }

    /// Levels `0..=n` from the smallest usable file with at least `n` levels.
    pub fn load(&self, params: &CrystalParams, n: usize) -> Result<Lattice> {
        let entries = match fs::read_dir(&self.dir) {
            Ok(entries) => entries,
            Err(e) if e.kind() == ErrorKind::NotFound => return Err(Error::CacheMiss),
            Err(e) => return Err(Error::io(&self.dir, e)),
        };
        let stem = Cache::stem(params);
        let mut candidates: Vec<(usize, PathBuf)> = Vec::new();
        for entry in entries {
            let entry = entry.map_err(|e| Error::io(&self.dir, e))?;
            let name = entry.file_name();
            let Some(level) = name
                .to_str()
                .and_then(|s| s.strip_prefix(&stem))
                .and_then(|s| s.strip_suffix(".json"))
                .and_then(|s| s.parse::<usize>().ok())
            else {
                continue;
            };
            if level >= n {
                candidates.push((level, entry.path()));
            }
        }
        candidates.sort();
        for (level, path) in candidates {
            let text = match fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) if e.kind() == ErrorKind::NotFound => continue,
                Err(e) => return Err(Error::io(&path, e)),
            };
            match parse_json(&text) {
                Ok(Document {
                    params: p,
                    payload: Payload::Lattice(lattice),
                }) if p == *params && lattice.n() == level => {
                    log::debug!("lattice cache hit: {}", path.display());
                    return Ok(lattice.truncated(n));
                }
                Ok(_) => log::warn!("ignoring cache file {} with unexpected contents", path.display()),
                Err(e) => log::warn!("ignoring corrupted cache file {}: {e}", path.display()),
            }
        }
        Err(Error::CacheMiss)
    }

    /// Loads from the cache or builds and stores. A failed store is only
    /// logged, since the lattice itself is still valid.
    pub fn load_or_build(&self, n: usize, params: CrystalParams) -> Result<Lattice> {
        match self.load(&params, n) {
            Ok(lattice) => Ok(lattice),
            Err(Error::CacheMiss) => {
                let lattice = Lattice::build(n, params)?;
                if let Err(e) = self.store(&lattice) {
                    log::warn!("could not write lattice cache: {e}");
                }
                Ok(lattice)
            }
            Err(e) => Err(e),
        }
    }
}
