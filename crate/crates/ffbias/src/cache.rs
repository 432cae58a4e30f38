//! Append-only JSON-lines result cache.
//!
//! Each line is one [`ExperimentRecord`] in normalized JSON (UTF-8, keys
//! sorted).  Records are keyed by `(q, canonical modulus text, tool
//! version)`; lookups scan the whole file and the **last** matching record
//! wins, so storing is a plain append — no rewriting, and a crashed write
//! corrupts at most the final line (which lookups then skip).
//!
//! The cache directory comes from `FFBIAS_CACHE_DIR`, defaulting to
//! `.ffbias-cache/` under the current directory; the file inside it is
//! always `records.jsonl`.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::context::ModulusContext;
use crate::density::DensityReport;
use crate::error::Result;
use crate::lfunc::GshVerdict;

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "FFBIAS_CACHE_DIR";

/// Cache directory used when [`CACHE_DIR_ENV`] is unset.
pub const DEFAULT_CACHE_DIR: &str = ".ffbias-cache";

const CACHE_FILE: &str = "records.jsonl";

/// One cached experiment: the L-polynomial data for a modulus plus any
/// density reports computed so far.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    /// Format version of this record.
    pub schema_version: u32,
    /// Version of the tool that wrote the record (part of the cache key).
    pub tool_version: String,
    /// RFC 3339 creation timestamp (informational, not part of the key).
    pub created_at: String,
    /// Field size (part of the cache key).
    pub q: u32,
    /// Canonical modulus text (part of the cache key).
    pub modulus: String,
    /// L-polynomial coefficients, ascending, as decimal strings.
    pub l_coeffs: Vec<String>,
    /// Inverse-zero angles `θ_j ∈ (0, π)`, ascending.
    pub angles: Vec<f64>,
    /// Numerical Riemann-hypothesis residual of the inverse zeros.
    pub rh_residual: f64,
    /// Angle-independence verdict.
    pub gsh_verdict: GshVerdict,
    /// Central value `𝓛(q^{-1/2})`.
    pub central_value: f64,
    /// Density reports accumulated for this modulus.
    pub density_reports: Vec<DensityReport>,
}

impl ExperimentRecord {
    /// Builds a record (with no density reports yet) from a computed
    /// modulus context.
    pub fn from_context(ctx: &ModulusContext) -> ExperimentRecord {
        ExperimentRecord {
            schema_version: crate::SCHEMA_VERSION,
            tool_version: crate::TOOL_VERSION.to_string(),
            created_at: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            q: ctx.q(),
            modulus: ctx.modulus_text(),
            l_coeffs: ctx.l().to_record().coeffs,
            angles: ctx.zeros().angles.clone(),
            rh_residual: ctx.zeros().rh_residual,
            gsh_verdict: ctx.zeros().gsh.summary,
            central_value: ctx.central_value().value,
            density_reports: Vec::new(),
        }
    }

    /// Merges density reports into the record, replacing any existing report
    /// for the same `(kind, cumulative, source)` slot and keeping the rest.
    pub fn merge_reports(&mut self, new: &[DensityReport]) {
        self.density_reports.retain(|old| {
            !new.iter().any(|r| {
                r.kind == old.kind && r.cumulative == old.cumulative && r.source == old.source
            })
        });
        self.density_reports.extend_from_slice(new);
    }

    /// The normalized (keys-sorted, single-line) JSON form used both for
    /// storage and for loss-free round-trip checks.
    pub fn normalized_json(&self) -> Result<String> {
        let value = serde_json::to_value(self)?;
        Ok(serde_json::to_string(&value)?)
    }
}

/// Handle to the JSON-lines cache file.  With `bypass` set, loads always
/// miss and stores are silently skipped (the `--no-cache` behaviour).
#[derive(Debug, Clone)]
pub struct Cache {
    path: PathBuf,
    bypass: bool,
}

impl Cache {
    /// Resolves the cache location from the environment (see module docs).
    pub fn resolve(bypass: bool) -> Cache {
        let dir = std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR));
        Cache {
            path: dir.join(CACHE_FILE),
            bypass,
        }
    }

    /// Uses an explicit cache file path (tests and embedders).
    pub fn at_path(path: PathBuf, bypass: bool) -> Cache {
        Cache { path, bypass }
    }

    /// File the cache reads and appends to.
    pub fn path(&self) -> &std::path::Path {
        &self.path
    }

    /// Returns the most recent record for `(q, modulus)` written by this
    /// tool version, or `None`.  Unparseable lines (foreign schema versions,
    /// torn writes) are skipped, not errors.
    pub fn load(&self, q: u32, modulus: &str) -> Result<Option<ExperimentRecord>> {
        if self.bypass || !self.path.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(&self.path)?;
        let mut hit = None;
        for line in text.lines() {
            if line.trim().is_empty() {
                continue;
            }
            if let Ok(record) = serde_json::from_str::<ExperimentRecord>(line) {
                if record.q == q
                    && record.modulus == modulus
                    && record.tool_version == crate::TOOL_VERSION
                {
                    hit = Some(record);
                }
            }
        }
        Ok(hit)
    }

    /// Appends one normalized record line, creating the directory and file
    /// as needed.  A no-op under `bypass`.
    pub fn store(&self, record: &ExperimentRecord) -> Result<()> {
        if self.bypass {
            return Ok(());
        }
        if let Some(dir) = self.path.parent() {
            if !dir.as_os_str().is_empty() {
                fs::create_dir_all(dir)?;
            }
        }
        let mut line = record.normalized_json()?;
        line.push('\n');
        let mut file = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        file.write_all(line.as_bytes())?;
        Ok(())
    }
}
