//! On-disk cache of zero tables, one CSV file per (family, k_max).
//!
//! Floats are written in shortest round-trip form, so a cache hit returns the
//! same bits as a fresh computation.

use std::path::{Path, PathBuf};

use digamma_zeros::zeros::zero_table;
use digamma_zeros::{ZeroFamily, ZeroRecord};

use crate::output::write_atomic;
use crate::CliError;

pub const CACHE_ENV: &str = "DIGAMMA_ZEROS_CACHE";

pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

pub fn cache_path(dir: &Path, family: ZeroFamily, k_max: u64) -> PathBuf {
    dir.join(format!("{family}-{k_max}.csv"))
}

/// Reads a cached table; `None` if the file is missing or does not hold
/// exactly zeros 0..=k_max of `family`.
pub fn load(path: &Path, family: ZeroFamily, k_max: u64) -> Result<Option<Vec<ZeroRecord>>, CliError> {
    let mut rdr = match csv::Reader::from_path(path) {
        Ok(r) => r,
        Err(e) if matches!(e.kind(), csv::ErrorKind::Io(io) if io.kind() == std::io::ErrorKind::NotFound) => {
            return Ok(None)
        }
        Err(e) => return Err(e.into()),
    };
    let records: Vec<ZeroRecord> = match rdr.deserialize().collect() {
        Ok(r) => r,
        Err(_) => return Ok(None),
    };
    let complete = records.len() as u64 == k_max + 1
        && records.iter().enumerate().all(|(i, r)| r.index == i as u64 && r.family == family);
    Ok(complete.then_some(records))
}

pub fn store(path: &Path, records: &[ZeroRecord]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    write_atomic(path, &bytes)?;
    Ok(())
}

/// The zero table, read from `dir` when cached there and written to it
/// otherwise.
pub fn zero_table_cached(family: ZeroFamily, k_max: u64, dir: Option<&Path>) -> Result<Vec<ZeroRecord>, CliError> {
    let Some(dir) = dir else {
        return Ok(zero_table(family, k_max)?);
    };
    let path = cache_path(dir, family, k_max);
    if let Some(hit) = load(&path, family, k_max)? {
        return Ok(hit);
    }
    let table = zero_table(family, k_max)?;
    store(&path, &table)?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hit_equals_recomputation() {
        let dir = tempfile::tempdir().unwrap();
        for family in [ZeroFamily::Psi, ZeroFamily::PsiG] {
            let first = zero_table_cached(family, 300, Some(dir.path())).unwrap();
            assert!(cache_path(dir.path(), family, 300).exists());
            let hit = zero_table_cached(family, 300, Some(dir.path())).unwrap();
            let fresh = zero_table(family, 300).unwrap();
            assert_eq!(hit.len(), 301);
            for ((a, b), c) in hit.iter().zip(&fresh).zip(&first) {
                assert!(a.bit_eq(b) && c.bit_eq(b), "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn mismatched_file_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let table = zero_table(ZeroFamily::Psi, 5).unwrap();
        let path = cache_path(dir.path(), ZeroFamily::Psi, 6);
        store(&path, &table).unwrap();
        assert!(load(&path, ZeroFamily::Psi, 6).unwrap().is_none());
        assert!(load(&path, ZeroFamily::PsiG, 5).unwrap().is_none());
        std::fs::write(&path, "garbage\n1,2\n").unwrap();
        assert!(load(&path, ZeroFamily::Psi, 6).unwrap().is_none());
        assert!(load(&dir.path().join("absent.csv"), ZeroFamily::Psi, 6).unwrap().is_none());
    }
}
