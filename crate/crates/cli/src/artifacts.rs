//! Reading codes back from disk: either a bare alist file or a directory
//! written by `construct`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use seqrec::code::alist::parse_alist;
use seqrec::code::SeqRecCode;
use seqrec::graph::io::parse_edge_list;
use seqrec::Graph;

use crate::error::{Category, CliError};

pub const GRAPH_FILE: &str = "graph.txt";
pub const MANIFEST_FILE: &str = "manifest.txt";
pub const ALIST_FILE: &str = "code.alist";
pub const REPORT_FILE: &str = "report.json";
pub const PROVENANCE_FILE: &str = "provenance.txt";

pub struct Loaded {
    pub code: SeqRecCode,
    pub graph: Option<Graph>,
    pub seed: u64,
    /// Whether `t` came from a flag or manifest rather than a default.
    pub t_known: bool,
}

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::new(Category::Io, format!("{}: {e}", path.display())))
}

pub fn parse_manifest(text: &str) -> BTreeMap<String, String> {
    text.lines()
        .filter_map(|l| l.split_once(':'))
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .collect()
}

fn manifest_number<T: std::str::FromStr>(m: &BTreeMap<String, String>, key: &str) -> Result<Option<T>, CliError> {
    match m.get(key) {
        None => Ok(None),
        Some(v) => v
            .parse()
            .map(Some)
            .map_err(|_| CliError::new(Category::Parse, format!("manifest: bad value `{v}` for {key}"))),
    }
}

/// Loads the code at `path`. `r` falls back to the manifest, then to the
/// largest row weight minus one; `t` falls back to the manifest, then 0.
pub fn load(path: &Path, r: Option<usize>, t: Option<usize>) -> Result<Loaded, CliError> {
    let (alist_path, dir): (PathBuf, Option<&Path>) = if path.is_dir() {
        (path.join(ALIST_FILE), Some(path))
    } else {
        (path.to_path_buf(), None)
    };
    let h = parse_alist(&read(&alist_path)?)?;
    let manifest = match dir {
        Some(d) if d.join(MANIFEST_FILE).exists() => parse_manifest(&read(&d.join(MANIFEST_FILE))?),
        _ => BTreeMap::new(),
    };
    let graph = match dir {
        Some(d) if d.join(GRAPH_FILE).exists() => Some(parse_edge_list(&read(&d.join(GRAPH_FILE))?)?),
        _ => None,
    };
    let max_row = h.rows.iter().map(Vec::len).max().unwrap_or(1);
    let r = match r {
        Some(r) => r,
        None => manifest_number(&manifest, "r")?.unwrap_or(max_row.saturating_sub(1)),
    };
    let t_manifest = manifest_number(&manifest, "t")?;
    let t_known = t.is_some() || t_manifest.is_some();
    let t = t.or(t_manifest).unwrap_or(0);
    let seed = manifest_number(&manifest, "seed")?.unwrap_or(0);
    Ok(Loaded {
        code: SeqRecCode {
            h,
            r,
            t,
            symbol_map: None,
        },
        graph,
        seed,
        t_known,
    })
}
