//! Golden tables: `J_λ` in the monomial basis and the `B_m` coefficient
//! tables, regenerated and compared byte for byte.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use macdo_core::macdonald::JTable;
use macdo_core::partitions::partitions_bounded;
use macdo_core::raising::RaisingOperator;

use crate::json::{j_table_json, operator_to_json, to_pretty};

/// `J_λ` tables cover `|λ| <= J_MAX_WEIGHT` and `n <= J_MAX_N`.
pub const J_MAX_WEIGHT: u32 = 4;
pub const J_MAX_N: usize = 3;
/// `B_m` tables cover `m <= B_MAX_M` and `n <= B_MAX_N`.
pub const B_MAX_M: u32 = 3;
pub const B_MAX_N: usize = 3;

/// A relative path and its expected contents.
pub struct GoldenFile {
    pub path: PathBuf,
    pub contents: String,
}

fn lambda_stem(s: &str) -> String {
    if s.is_empty() {
        "empty".into()
    } else {
        s.replace(',', "-")
    }
}

/// Every golden file, in a fixed order.
pub fn generate() -> macdo_core::Result<Vec<GoldenFile>> {
    let mut out = Vec::new();
    for n in 1..=J_MAX_N {
        let table = JTable::build(n, J_MAX_WEIGHT)?;
        for d in 0..=J_MAX_WEIGHT {
            for lam in partitions_bounded(d, n, d) {
                let entry = table.get(&lam).expect("table covers the weight");
                let json = j_table_json(n, &lam, &entry.coeffs);
                out.push(GoldenFile {
                    path: Path::new("j").join(format!("n{n}")).join(format!("{}.json", lambda_stem(&json.lambda))),
                    contents: to_pretty(&json),
                });
            }
        }
    }
    for n in 1..=B_MAX_N {
        for m in 0..=B_MAX_M {
            let op = RaisingOperator::build(m, n)?;
            out.push(GoldenFile {
                path: Path::new("b").join(format!("m{m}_n{n}.json")),
                contents: to_pretty(&operator_to_json(&op)),
            });
        }
    }
    Ok(out)
}

pub fn write(dir: &Path, files: &[GoldenFile]) -> io::Result<()> {
    for f in files {
        let p = dir.join(&f.path);
        if let Some(parent) = p.parent() {
            fs::create_dir_all(parent)?;
        }
        fs::write(p, &f.contents)?;
    }
    Ok(())
}

#[derive(Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Match,
    /// Files whose contents differ from a fresh computation.
    Differ(Vec<PathBuf>),
}

/// Compares every expected file; a missing or unreadable file is an I/O error.
pub fn check(dir: &Path, files: &[GoldenFile]) -> io::Result<CheckOutcome> {
    let mut differ = Vec::new();
    for f in files {
        let p = dir.join(&f.path);
        let on_disk = fs::read(&p).map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", p.display())))?;
        if on_disk != f.contents.as_bytes() {
            differ.push(f.path.clone());
        }
    }
    Ok(if differ.is_empty() {
        CheckOutcome::Match
    } else {
        CheckOutcome::Differ(differ)
    })
}
