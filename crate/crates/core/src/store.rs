//! On-disk cache of gate results, one JSON object per line.
//!
//! Records are keyed by `(family, m, t, u)`. Gate evaluation is pure, so a
//! cached record is interchangeable with a fresh computation.

use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use crate::design::{CodeFamily, Family};
use crate::error::{Error, Result};
use crate::gate::{integrality_gate, GateResult};

/// Environment variable naming the store directory.
pub const STORE_DIR_ENV: &str = "SDCHECK_STORE_DIR";
pub const DEFAULT_STORE_DIR: &str = ".sdcheck-store";
pub const STORE_FILE: &str = "gates.jsonl";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GateKey {
    pub family: Family,
    pub m: u32,
    pub t: u32,
    pub u: u64,
}

impl GateKey {
    fn of(result: &GateResult) -> Self {
        Self {
            family: result.family,
            m: result.m,
            t: result.t,
            u: result.u,
        }
    }
}

struct Inner {
    records: BTreeMap<GateKey, GateResult>,
    sink: Option<File>,
}

pub struct GateStore {
    path: Option<PathBuf>,
    inner: Mutex<Inner>,
}

impl GateStore {
    /// A store that never touches the filesystem.
    pub fn in_memory() -> Self {
        Self {
            path: None,
            inner: Mutex::new(Inner {
                records: BTreeMap::new(),
                sink: None,
            }),
        }
    }

    /// Opens (creating if needed) the store in `dir` and loads its records.
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref();
        fs::create_dir_all(dir)?;
        let path = dir.join(STORE_FILE);
        let mut records = BTreeMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for (lineno, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let record: GateResult = serde_json::from_str(&line)
                    .map_err(|e| Error::Store(format!("{}:{}: {e}", path.display(), lineno + 1)))?;
                records.insert(GateKey::of(&record), record);
            }
        }
        let sink = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(Self {
            path: Some(path),
            inner: Mutex::new(Inner {
                records,
                sink: Some(sink),
            }),
        })
    }

    /// Opens the store named by `SDCHECK_STORE_DIR`, defaulting to
    /// `./.sdcheck-store`.
    pub fn from_env() -> Result<Self> {
        let dir = std::env::var_os(STORE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(DEFAULT_STORE_DIR));
        Self::open(dir)
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.inner.lock().expect("store poisoned").records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &GateKey) -> Option<GateResult> {
        self.inner
            .lock()
            .expect("store poisoned")
            .records
            .get(key)
            .cloned()
    }

    /// Cached gate result, computing and persisting it on a miss.
    pub fn gate(&self, f: &CodeFamily, t: u32, u: u64) -> Result<GateResult> {
        let key = GateKey {
            family: f.family(),
            m: f.m(),
            t,
            u,
        };
        if let Some(hit) = self.get(&key) {
            return Ok(hit);
        }
        let result = integrality_gate(f, t, u)?;
        let mut inner = self.inner.lock().expect("store poisoned");
        if inner.records.contains_key(&key) {
            return Ok(result);
        }
        if let Some(sink) = inner.sink.as_mut() {
            let line = serde_json::to_string(&result).map_err(|e| Error::Store(e.to_string()))?;
            writeln!(sink, "{line}")?;
        }
        inner.records.insert(key, result.clone());
        Ok(result)
    }
}
