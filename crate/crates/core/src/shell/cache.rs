//! Append-only JSON-lines verdict cache.
//!
//! Each line holds a key (canonical spec plus decision mode), the budget the
//! verdict was computed under, and the record. A single malformed line makes
//! the whole file untrustworthy: it is ignored with a warning and verdicts
//! are recomputed.

use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::record::VerdictRecord;

#[derive(Debug, Serialize, Deserialize)]
struct Line {
    key: String,
    budget: usize,
    record: VerdictRecord,
}

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    entries: HashMap<String, (usize, VerdictRecord)>,
    /// Set when the file existed but could not be trusted.
    pub warning: Option<String>,
}

impl Cache {
    pub fn open(path: impl AsRef<Path>) -> io::Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut cache = Cache {
            path,
            entries: HashMap::new(),
            warning: None,
        };
        let text = match fs::read_to_string(&cache.path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(e),
        };
        for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            match serde_json::from_str::<Line>(line) {
                Ok(l) => {
                    cache.entries.insert(l.key, (l.budget, l.record));
                }
                Err(e) => {
                    cache.entries.clear();
                    cache.warning = Some(format!(
                        "cache {} is corrupt at line {}: {e}; ignoring it",
                        cache.path.display(),
                        i + 1
                    ));
                    break;
                }
            }
        }
        Ok(cache)
    }

    pub fn key(spec: &str, mode: &str) -> String {
        format!("{spec}|{mode}")
    }

    /// A stored record computed under at least `budget`.
    pub fn lookup(&self, key: &str, budget: usize) -> Option<&VerdictRecord> {
        self.entries
            .get(key)
            .filter(|(stored, _)| *stored >= budget)
            .map(|(_, r)| r)
    }

    pub fn store(&mut self, key: &str, budget: usize, record: VerdictRecord) -> io::Result<()> {
        let line = Line {
            key: key.to_string(),
            budget,
            record,
        };
        let mut text = serde_json::to_string(&line).expect("plain data serializes");
        text.push('\n');
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        // A corrupt file is replaced rather than appended to.
        if self.warning.take().is_some() {
            file = fs::File::create(&self.path)?;
        }
        file.write_all(text.as_bytes())?;
        self.entries.insert(line.key, (line.budget, line.record));
        Ok(())
    }
}
