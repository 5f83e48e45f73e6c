use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// 12 significant digits, positional for moderate magnitudes and exponent
/// form otherwise.
pub fn sig12(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return "0".into();
    }
    let rounded: f64 = format!("{v:.11e}").parse().expect("formatted float parses");
    if (1e-4..1e15).contains(&rounded.abs()) {
        rounded.to_string()
    } else {
        format!("{rounded:e}")
    }
}

pub fn opt12(v: Option<f64>) -> String {
    v.map(sig12).unwrap_or_default()
}

pub fn csv_bytes(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.into_inner().map_err(|e| CliError::Io(e.into_error()))
}

/// Pretty JSON; floats use the shortest representation that reads back
/// bit-identically.
pub fn json_bytes<T: Serialize + ?Sized>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut out = serde_json::to_vec_pretty(value)?;
    out.push(b'\n');
    Ok(out)
}

/// Writes `bytes` to `out`, or stdout when absent. Files are replaced
/// atomically through a temporary file in the same directory.
pub fn emit(bytes: &[u8], out: Option<&Path>) -> io::Result<()> {
    let Some(path) = out else {
        let mut stdout = io::stdout().lock();
        stdout.write_all(bytes)?;
        return stdout.flush();
    };
    write_atomic(path, bytes)
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(sig12(-9.702_672_540_001_9), "-9.70267254");
        assert_eq!(sig12(1.461_632_144_968_362_3), "1.46163214497");
        assert_eq!(sig12(2.0), "2");
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(1.234_567_890_123_4e-16), "1.23456789012e-16");
        assert_eq!(sig12(-999.864_141_521_3), "-999.864141521");
        assert_eq!(opt12(None), "");
    }

    #[test]
    fn csv_quotes_nothing_plain() {
        let b = csv_bytes(&["a", "b"], [vec!["1".into(), "x".into()]]).unwrap();
        assert_eq!(String::from_utf8(b).unwrap(), "a,b\n1,x\n");
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("out.txt");
        write_atomic(&p, b"one").unwrap();
        write_atomic(&p, b"two").unwrap();
        assert_eq!(std::fs::read(&p).unwrap(), b"two");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
