//! Content-addressed JSON result cache.
//!
//! A result is stored as `<dir>/<sha256>.json`, where the hash is taken
//! over the canonical JSON of `{tool, version, kind, inputs}`. The file
//! holds the compact JSON of the result exactly as serialized.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::CliError;

/// Environment variable naming the cache directory when `--cache-dir` is
/// not given.
pub const CACHE_ENV: &str = "MACPOLY_CACHE";

/// Counters reported by `--stats`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub hits: usize,
    pub computed: usize,
    pub writes: usize,
}

/// A cache rooted at a directory, or a pass-through when disabled.
#[derive(Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
    hits: AtomicUsize,
    computed: AtomicUsize,
    writes: AtomicUsize,
    write_lock: Mutex<()>,
    log: Mutex<Vec<Value>>,
}

impl Cache {
    /// A cache that never stores anything.
    pub fn disabled() -> Self {
        Cache::with_dir(None)
    }

    /// A cache rooted at `dir`, created on demand.
    pub fn at(dir: impl Into<PathBuf>) -> Result<Self, CliError> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| {
            CliError::Invalid(format!(
                "cache directory {} is not usable: {e}",
                dir.display()
            ))
        })?;
        Ok(Cache::with_dir(Some(dir)))
    }

    fn with_dir(dir: Option<PathBuf>) -> Self {
        Cache {
            dir,
            hits: AtomicUsize::new(0),
            computed: AtomicUsize::new(0),
            writes: AtomicUsize::new(0),
            write_lock: Mutex::new(()),
            log: Mutex::new(Vec::new()),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits.load(Ordering::SeqCst),
            computed: self.computed.load(Ordering::SeqCst),
            writes: self.writes.load(Ordering::SeqCst),
        }
    }

    /// Queue a diagnostic line for stderr. Worker threads never write to
    /// stderr themselves; the caller drains the queue with [`Cache::take_log`].
    pub fn log(&self, line: Value) {
        if let Ok(mut log) = self.log.lock() {
            log.push(line);
        }
    }

    /// Queued diagnostic lines, oldest first.
    pub fn take_log(&self) -> Vec<Value> {
        self.log
            .lock()
            .map(|mut l| std::mem::take(&mut *l))
            .unwrap_or_default()
    }

    /// The hex SHA-256 of the canonical key document.
    pub fn key(kind: &str, inputs: &Value) -> String {
        let doc = json!({
            "tool": "macpoly",
            "version": env!("CARGO_PKG_VERSION"),
            "kind": kind,
            "inputs": inputs,
        });
        let digest = Sha256::digest(doc.to_string().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    /// The stored text for `key`, if present.
    pub fn load_raw(&self, key: &str) -> Option<String> {
        fs::read_to_string(self.path(key)?).ok()
    }

    /// Write `text` under `key`. Writes go through a temporary file and a
    /// rename, one at a time.
    pub fn save_raw(&self, key: &str, text: &str) -> Result<(), CliError> {
        let Some(path) = self.path(key) else {
            return Ok(());
        };
        let _guard = self
            .write_lock
            .lock()
            .map_err(|_| CliError::Internal("cache lock poisoned".into()))?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let io =
            |e: std::io::Error| CliError::Internal(format!("cache write {}: {e}", path.display()));
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(text.as_bytes()).map_err(io)?;
        f.sync_all().map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)?;
        self.writes.fetch_add(1, Ordering::SeqCst);
        Ok(())
    }

    /// Load the value stored under `(kind, inputs)` or compute and store it.
    ///
    /// An unreadable entry is treated as a miss and overwritten.
    pub fn get_or_compute<T, F>(
        &self,
        kind: &str,
        inputs: &Value,
        compute: F,
    ) -> Result<T, CliError>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T, CliError>,
    {
        let key = Cache::key(kind, inputs);
        if let Some(text) = self.load_raw(&key) {
            match serde_json::from_str(&text) {
                Ok(v) => {
                    self.hits.fetch_add(1, Ordering::SeqCst);
                    return Ok(v);
                }
                Err(e) => self.log(json!({"warning": "discarding unreadable cache entry", "key": key, "reason": e.to_string()})),
            }
        }
        let value = compute()?;
        self.computed.fetch_add(1, Ordering::SeqCst);
        if self.dir.is_some() {
            let text =
                serde_json::to_string(&value).map_err(|e| CliError::Internal(e.to_string()))?;
            self.save_raw(&key, &text)?;
        }
        Ok(value)
    }
}
