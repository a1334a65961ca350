//! On-disk cache of structure constants, one JSON file per root system.
//!
//! A file stores the constants `N_{a,b}` on pairs of positive roots together
//! with the checksum of the full table they generated when it was built and
//! checked against the Jacobi identity. On load the table is regenerated from
//! the constants and must reproduce that checksum; anything else is treated
//! as a stale or corrupt entry and rebuilt.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use chevalley_core::roots::{Family, RootSystem, RootSystemSpec};
use chevalley_core::structure::ChevalleyStructure;
use serde::{Deserialize, Serialize};

use crate::dto::SCHEMA_VERSION;
use crate::CliError;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "CHEVALLEY_CACHE_DIR";

#[derive(Clone, Debug, Serialize, Deserialize)]
struct CacheFile {
    schema_version: u32,
    family: String,
    rank: usize,
    checksum: String,
    constants: Vec<(usize, usize, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Built,
    /// An existing entry was rejected and replaced.
    Rebuilt(String),
}

impl CacheStatus {
    pub fn describe(&self) -> String {
        match self {
            CacheStatus::Hit => "hit".into(),
            CacheStatus::Built => "built".into(),
            CacheStatus::Rebuilt(why) => format!("rebuilt ({why})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StructureCache {
    dir: PathBuf,
}

pub fn render_checksum(c: u64) -> String {
    format!("{c:016x}")
}

impl StructureCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// The cache named by [`CACHE_ENV`], if set and non-empty.
    pub fn from_env() -> Option<Self> {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => Some(Self::new(d)),
            _ => None,
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, spec: RootSystemSpec) -> PathBuf {
        self.dir.join(format!("{}{}.json", spec.family(), spec.rank()))
    }

    /// Loads an entry: `Ok(None)` when absent, `Err(reason)` when present
    /// but unusable.
    pub fn load(&self, spec: RootSystemSpec) -> Result<Option<ChevalleyStructure>, String> {
        let path = self.path(spec);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.to_string()),
        };
        let file: CacheFile = serde_json::from_str(&text).map_err(|e| format!("unreadable entry: {e}"))?;
        if file.schema_version != SCHEMA_VERSION {
            return Err(format!("schema version {}", file.schema_version));
        }
        if file.family != spec.family().to_string() || file.rank != spec.rank() {
            return Err(format!("entry describes {}{}", file.family, file.rank));
        }
        let cs = ChevalleyStructure::from_positive_constants(RootSystem::new(spec), &file.constants)
            .map_err(|e| e.to_string())?;
        let got = render_checksum(cs.checksum());
        if got != file.checksum {
            return Err(format!("checksum {got} does not match stored {}", file.checksum));
        }
        Ok(Some(cs))
    }

    pub fn store(&self, cs: &ChevalleyStructure) -> io::Result<PathBuf> {
        let spec = cs.root_system().spec();
        let file = CacheFile {
            schema_version: SCHEMA_VERSION,
            family: spec.family().to_string(),
            rank: spec.rank(),
            checksum: render_checksum(cs.checksum()),
            constants: cs.positive_constants(),
        };
        fs::create_dir_all(&self.dir)?;
        let path = self.path(spec);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string(&file).map_err(io::Error::other)?)?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    pub fn get_or_build(&self, spec: RootSystemSpec) -> Result<(Arc<ChevalleyStructure>, CacheStatus), CliError> {
        let status = match self.load(spec) {
            Ok(Some(cs)) => return Ok((Arc::new(cs), CacheStatus::Hit)),
            Ok(None) => CacheStatus::Built,
            Err(why) => CacheStatus::Rebuilt(why),
        };
        let cs = ChevalleyStructure::new(RootSystem::new(spec))?;
        self.store(&cs)
            .map_err(|e| CliError::Io(format!("{}: {e}", self.path(spec).display())))?;
        Ok((Arc::new(cs), status))
    }
}

/// Structure constants for a root system, through the cache when one is
/// configured.
pub fn load_structure(family: Family, rank: usize, cache: Option<&StructureCache>) -> Result<Arc<ChevalleyStructure>, CliError> {
    let spec = RootSystemSpec::new(family, rank)?;
    match cache {
        Some(c) => Ok(c.get_or_build(spec)?.0),
        None => Ok(Arc::new(ChevalleyStructure::new(RootSystem::new(spec))?)),
    }
}
