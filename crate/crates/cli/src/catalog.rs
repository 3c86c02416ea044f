//! The group catalog: every group of order ≤ 24 reachable by the
//! constructor DSL, Cayley-table files for four groups the DSL cannot
//! express (the modular and semidihedral groups of order 16, SL(2,3), and a
//! relabelled C9 used as a nontrivial isomorphic duplicate), and a handful
//! of deliberate duplicate presentations (C2xC3 vs C6, D6 vs S3, ...) so
//! that isomorphism suites have positive pairs to find.

use std::fs;
use std::path::{Path, PathBuf};

use coset_core::dsl::build_group;
use coset_core::{Error, FiniteGroup, Result};

#[derive(Clone, Debug)]
pub enum GroupSpec {
    /// A constructor expression such as "C4xC2".
    Expr(String),
    /// A Cayley-table file on disk.
    File(PathBuf),
    /// A Cayley-table shipped inside the binary.
    Embedded(&'static str),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: GroupSpec,
}

impl CatalogEntry {
    fn expr(name: &str) -> Self {
        CatalogEntry {
            name: name.to_string(),
            spec: GroupSpec::Expr(name.to_string()),
        }
    }

    fn embedded(name: &str, table: &'static str) -> Self {
        CatalogEntry {
            name: name.to_string(),
            spec: GroupSpec::Embedded(table),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        let mut g = match &self.spec {
            GroupSpec::Expr(e) => build_group(e)?,
            GroupSpec::File(p) => {
                let text = fs::read_to_string(p).map_err(|e| {
                    Error::Parse(format!("cannot read {}: {e}", p.display()))
                })?;
                FiniteGroup::from_table_file(self.name.clone(), &text)?
            }
            GroupSpec::Embedded(table) => {
                FiniteGroup::from_table_file(self.name.clone(), table)?
            }
        };
        g.set_name(self.name.clone());
        Ok(g)
    }
}

const MODULAR16: &str = include_str!("../data/modular16.txt");
const SEMIDIHEDRAL16: &str = include_str!("../data/semidihedral16.txt");
const C9_RELABELLED: &str = include_str!("../data/c9relabel.txt");
const SL23: &str = include_str!("../data/sl23.txt");

/// The default catalog: deterministic order (by group order, then by the
/// listing below).
pub fn default_catalog() -> Vec<CatalogEntry> {
    let exprs = [
        "C2",
        "C3",
        "C4",
        "C2xC2",
        "E(2,2)",
        "C5",
        "C6",
        "C2xC3",
        "S3",
        "D6",
        "C7",
        "C8",
        "C4xC2",
        "C2xC2xC2",
        "E(2,3)",
        "D8",
        "Q8",
        "C9",
        "C3xC3",
        "C10",
        "D10",
        "C11",
        "C12",
        "C6xC2",
        "C3xC4",
        "D12",
        "A4",
        "C13",
        "C14",
        "D14",
        "C15",
        "C16",
        "C8xC2",
        "C4xC4",
        "C4xC2xC2",
        "E(2,4)",
        "D16",
        "Q16",
        "D8xC2",
        "Q8xC2",
        "C17",
        "C18",
        "C3xC6",
        "D18",
        "S3xC3",
        "C19",
        "C20",
        "C2xC10",
        "D20",
        "C21",
        "C22",
        "D22",
        "C23",
        "C24",
        "C8xC3",
        "C3xC8",
        "C2xC12",
        "C2xC2xC6",
        "D24",
        "S4",
        "A4xC2",
        "S3xC4",
        "D8xC3",
        "Q8xC3",
    ];
    let mut entries: Vec<CatalogEntry> = exprs.iter().map(|e| CatalogEntry::expr(e)).collect();
    entries.push(CatalogEntry::embedded("C9r", C9_RELABELLED));
    entries.push(CatalogEntry::embedded("M16", MODULAR16));
    entries.push(CatalogEntry::embedded("SD16", SEMIDIHEDRAL16));
    entries.push(CatalogEntry::embedded("SL(2,3)", SL23));
    entries
}

/// Parse a catalog file: one entry per line, `name = spec` where spec is a
/// constructor expression or `file:<path>` (relative paths resolve against
/// the catalog file's directory). Blank lines and `#` comments ignored.
pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let mut entries = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, spec) = line.split_once('=').ok_or_else(|| {
            Error::Parse(format!(
                "{}:{}: expected `name = spec`",
                path.display(),
                lineno + 1
            ))
        })?;
        let name = name.trim().to_string();
        let spec = spec.trim();
        if name.is_empty() || spec.is_empty() {
            return Err(Error::Parse(format!(
                "{}:{}: empty name or spec",
                path.display(),
                lineno + 1
            )));
        }
        if !seen.insert(name.clone()) {
            return Err(Error::Parse(format!(
                "{}:{}: duplicate entry name {name:?}",
                path.display(),
                lineno + 1
            )));
        }
        let spec = if let Some(rel) = spec.strip_prefix("file:") {
            GroupSpec::File(base.join(rel.trim()))
        } else {
            GroupSpec::Expr(spec.to_string())
        };
        entries.push(CatalogEntry { name, spec });
    }
    Ok(entries)
}

/// Resolve a `--group` argument: a constructor expression, or
/// `file:<path>` for a Cayley-table file.
pub fn resolve_group(spec: &str) -> Result<FiniteGroup> {
    if let Some(path) = spec.strip_prefix("file:") {
        let path = Path::new(path.trim());
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "group".to_string());
        FiniteGroup::from_table_file(name, &text)
    } else {
        build_group(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_default_entry_builds_with_unique_names() {
        let entries = default_catalog();
        let mut names = std::collections::BTreeSet::new();
        for e in &entries {
            let g = e.build().unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert!(g.order() >= 2 && g.order() <= 24, "{}", e.name);
            assert!(names.insert(e.name.clone()), "duplicate name {}", e.name);
        }
        assert!(entries.len() >= 60);
    }

    #[test]
    fn embedded_tables_have_expected_shapes() {
        let m16 = CatalogEntry::embedded("M16", MODULAR16).build().unwrap();
        assert_eq!(m16.order(), 16);
        assert!(!m16.is_abelian());
        assert_eq!(m16.exponent(), 8);

        let sd16 = CatalogEntry::embedded("SD16", SEMIDIHEDRAL16).build().unwrap();
        assert_eq!(sd16.order(), 16);
        assert!(!sd16.is_abelian());

        let c9r = CatalogEntry::embedded("C9r", C9_RELABELLED).build().unwrap();
        assert_eq!(c9r.order(), 9);
        assert!(c9r.is_abelian());
        assert_eq!(c9r.exponent(), 9);

        let sl = CatalogEntry::embedded("SL(2,3)", SL23).build().unwrap();
        assert_eq!(sl.order(), 24);
        assert!(!sl.is_abelian());
        // unique involution
        let twos = sl
            .elements()
            .filter(|&x| sl.element_order(x) == 2)
            .count();
        assert_eq!(twos, 1);
    }
}
