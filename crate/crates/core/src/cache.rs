//! On-disk result cache: one JSON file per entry, keyed by a canonical hash
//! of (shape, tableau, variant, kind, mode, q0). Entries are write-once with
//! atomic replacement, so concurrent readers never observe partial files and
//! a recomputation must reproduce the stored bytes.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::jsonio::{to_canonical_json, FusionResultJson};

pub const CACHE_DIR_ENV: &str = "FUSIONQ_CACHE_DIR";

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CacheKey {
    pub shape: Vec<usize>,
    pub tableau: Vec<Vec<usize>>,
    pub variant: String,
    pub kind: String,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q0: Option<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CacheEntry {
    pub created: u64,
    pub key: CacheKey,
    pub result: FusionResultJson,
}

impl CacheKey {
    pub fn for_result(r: &FusionResultJson) -> CacheKey {
        CacheKey {
            shape: r.shape.clone(),
            tableau: r.tableau.clone(),
            variant: r.variant.clone(),
            kind: r.kind.clone(),
            mode: r.mode.clone(),
            q0: r.q0.clone(),
        }
    }

    /// Hex digest of the canonical key JSON; the cache file name.
    pub fn digest(&self) -> Result<String> {
        let json = to_canonical_json(self)?;
        let mut hasher = Sha256::new();
        hasher.update(json.as_bytes());
        Ok(hex_string(&hasher.finalize()))
    }
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// Cache at the directory from `FUSIONQ_CACHE_DIR`, defaulting to
    /// `.fusionq-cache` under the working directory.
    pub fn from_env() -> Cache {
        let dir = std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(".fusionq-cache"));
        Cache { dir }
    }

    pub fn at(dir: impl AsRef<Path>) -> Cache {
        Cache {
            dir: dir.as_ref().to_path_buf(),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, key: &CacheKey) -> Result<PathBuf> {
        Ok(self.dir.join(format!("{}.json", key.digest()?)))
    }

    pub fn load(&self, key: &CacheKey) -> Result<Option<CacheEntry>> {
        let path = self.path_for(key)?;
        match std::fs::read_to_string(&path) {
            Ok(s) => Ok(Some(crate::jsonio::from_json_str(&s)?)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    /// Write-once store: an existing entry is left untouched; the new file
    /// appears atomically via rename.
    pub fn store(&self, entry: &CacheEntry) -> Result<PathBuf> {
        std::fs::create_dir_all(&self.dir)?;
        let path = self.path_for(&entry.key)?;
        if path.exists() {
            return Ok(path);
        }
        let json = to_canonical_json(entry)?;
        let tmp = self.dir.join(format!(
            ".tmp-{}-{}",
            std::process::id(),
            entry.key.digest()?
        ));
        std::fs::write(&tmp, json.as_bytes())?;
        std::fs::rename(&tmp, &path)?;
        Ok(path)
    }
}

pub fn unix_timestamp() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

impl std::fmt::Display for CacheKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}/{}/{}/{}",
            self.kind,
            self.variant,
            self.mode,
            self.shape
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}
