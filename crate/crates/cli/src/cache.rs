//! Optional persistent memo file of `key=dim` lines.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};

const FILE_NAME: &str = "weylext-cache.txt";

pub struct DiskCache {
    path: PathBuf,
    entries: BTreeMap<String, u64>,
    dirty: bool,
}

impl DiskCache {
    /// Loads the cache named by `WEYLEXT_CACHE_DIR`, if set.
    pub fn from_env() -> Result<Option<Self>> {
        let Some(dir) = std::env::var_os("WEYLEXT_CACHE_DIR") else { return Ok(None) };
        let dir = PathBuf::from(dir);
        fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
        let path = dir.join(FILE_NAME);
        let mut entries = BTreeMap::new();
        if path.exists() {
            let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            for line in text.lines().filter(|l| !l.trim().is_empty()) {
                // malformed lines are skipped and dropped on the next save
                if let Some((k, v)) = line.rsplit_once('=') {
                    if let Ok(v) = v.trim().parse() {
                        entries.insert(k.trim().to_string(), v);
                    }
                }
            }
        }
        Ok(Some(Self { path, entries, dirty: false }))
    }

    pub fn get(&self, key: &str) -> Option<u64> {
        self.entries.get(key).copied()
    }

    pub fn put(&mut self, key: String, dim: u64) {
        if self.entries.insert(key, dim) != Some(dim) {
            self.dirty = true;
        }
    }

    pub fn save(&self) -> Result<()> {
        if !self.dirty {
            return Ok(());
        }
        let mut text = String::new();
        for (k, v) in &self.entries {
            text.push_str(&format!("{k}={v}\n"));
        }
        let tmp = self.path.with_extension("tmp");
        fs::write(&tmp, text).with_context(|| format!("writing {}", tmp.display()))?;
        fs::rename(&tmp, &self.path).with_context(|| format!("replacing {}", self.path.display()))?;
        Ok(())
    }
}
