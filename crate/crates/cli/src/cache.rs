//! On-disk cache of engine summaries, one file per complex hash and field.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use dblhom_core::bigraded::HhSummary;
use dblhom_core::{FieldSpec, SimplicialComplex};
use serde::{Deserialize, Serialize};

const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    summary: HhSummary,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Cache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    /// `<hash>.<field>.cache`, with the `:` of `gfp:<p>` written as `-`.
    pub fn path(&self, hash: &str, field: FieldSpec) -> PathBuf {
        self.dir.join(format!("{hash}.{}.cache", field.to_string().replace(':', "-")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// A stored summary for `k`, or `None` on a miss. Unreadable or mismatched entries
    /// are reported and treated as misses.
    pub fn get(&self, k: &SimplicialComplex, field: FieldSpec) -> Option<HhSummary> {
        let hash = k.hash();
        let path = self.path(&hash, field);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return None,
            Err(e) => {
                log::warn!("ignoring cache entry {}: {e}", path.display());
                return None;
            }
        };
        match serde_json::from_slice::<CacheFile>(&bytes) {
            Ok(c) if c.version == CACHE_VERSION
                && c.summary.hash == hash
                && c.summary.field == field
                && c.summary.m == k.m() =>
            {
                Some(c.summary)
            }
            Ok(_) => {
                log::warn!("ignoring stale cache entry {}; recomputing", path.display());
                None
            }
            Err(e) => {
                log::warn!("ignoring corrupt cache entry {}: {e}; recomputing", path.display());
                None
            }
        }
    }

    /// Writes through a temporary file so readers never see a partial entry.
    pub fn put(&self, summary: &HhSummary) -> io::Result<()> {
        let path = self.path(&summary.hash, summary.field);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let body = serde_json::to_vec(&CacheFile { version: CACHE_VERSION, summary: summary.clone() })
            .map_err(io::Error::other)?;
        fs::write(&tmp, body)?;
        fs::rename(&tmp, &path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dblhom_core::bigraded::{compute, EngineOptions};
    use dblhom_core::complex::cycle;
    use dblhom_core::Gf2;

    #[test]
    fn put_get_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let k = cycle(5).unwrap();
        assert!(cache.get(&k, FieldSpec::Gf2).is_none());
        let (s, _) = compute(&k, &Gf2, &EngineOptions::default()).unwrap();
        cache.put(&s).unwrap();
        assert_eq!(cache.get(&k, FieldSpec::Gf2), Some(s.clone()));
        assert!(cache.get(&k, FieldSpec::Rational).is_none());
        let path = cache.path(&k.hash(), FieldSpec::Gf2);
        let bytes = fs::read(&path).unwrap();
        fs::write(&path, &bytes[..bytes.len() / 2]).unwrap();
        assert!(cache.get(&k, FieldSpec::Gf2).is_none());
        assert!(cache.path("abc", FieldSpec::Gfp(3)).ends_with("abc.gfp-3.cache"));
    }
}
