//! Parity-check codes on code graphs: edges are symbols, non-pendant
//! vertices are checks.

pub mod alist;
mod gf2;
mod manifest;
mod peel;
mod rate;
mod verify;

use thiserror::Error;

use crate::construct::CodeGraph;
use crate::graph::{Girth, Graph, Layer, VertexTag};

pub use gf2::{gf2_rank, null_space, BitMatrix};
pub use manifest::{CodeManifest, VerificationSummary};
pub use peel::{peel, sequential_decode, DecodeFailure, RecoverySchedule};
pub use rate::{moore_floor_met, optimal_rate, rate_report, RateReport};
pub use verify::{binomial_prefix_sum, verify_seq_recovery, verify_seq_recovery_with, Report, VerifyMode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("malformed parity-check matrix: {0}")]
    Malformed(String),
}

/// Sparse binary matrix kept both row-wise and column-wise; index lists are
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<Vec<usize>>,
    pub cols: Vec<Vec<usize>>,
}

impl SparseMatrix {
    /// Builds from row supports; duplicates and out-of-range columns are
    /// rejected.
    pub fn from_rows(n: usize, rows: Vec<Vec<usize>>) -> Result<Self, CodeError> {
        let m = rows.len();
        let mut cols = vec![Vec::new(); n];
        let mut sorted_rows = Vec::with_capacity(m);
        for (i, mut row) in rows.into_iter().enumerate() {
            row.sort_unstable();
            if row.windows(2).any(|w| w[0] == w[1]) {
                return Err(CodeError::Malformed(format!("row {i} repeats a column")));
            }
            for &c in &row {
                if c >= n {
                    return Err(CodeError::Malformed(format!("row {i} has column {c} >= {n}")));
                }
                cols[c].push(i);
            }
            sorted_rows.push(row);
        }
        Ok(SparseMatrix {
            n,
            m,
            rows: sorted_rows,
            cols,
        })
    }

    pub fn to_dense(&self) -> BitMatrix {
        BitMatrix::from_rows(self.n, &self.rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqRecCode {
    pub h: SparseMatrix,
    pub r: usize,
    pub t: usize,
    /// Edge of the code graph behind each column, when known.
    pub symbol_map: Option<Vec<(usize, usize)>>,
}

impl SeqRecCode {
    pub fn n(&self) -> usize {
        self.h.n
    }

    pub fn m(&self) -> usize {
        self.h.m
    }

    pub fn dimension(&self) -> usize {
        self.n() - gf2_rank(&self.h.to_dense())
    }

    /// Columns of weight one: the pendant symbols.
    pub fn pendant_symbols(&self) -> Vec<usize> {
        (0..self.n()).filter(|&c| self.h.cols[c].len() == 1).collect()
    }

    /// Checks the locality structure: rows of weight at most `r + 1`,
    /// columns of weight one or two.
    pub fn check_locality(&self) -> Result<(), CodeError> {
        if let Some(i) = (0..self.m()).find(|&i| self.h.rows[i].len() > self.r + 1) {
            return Err(CodeError::Malformed(format!(
                "row {i} has weight {} > r + 1 = {}",
                self.h.rows[i].len(),
                self.r + 1
            )));
        }
        if let Some(c) = (0..self.n()).find(|&c| !matches!(self.h.cols[c].len(), 1 | 2)) {
            return Err(CodeError::Malformed(format!("column {c} has weight {}", self.h.cols[c].len())));
        }
        Ok(())
    }

    /// Girth of the check graph: rows as vertices, weight-two columns as
    /// edges. Two columns on the same pair of rows form a 2-cycle.
    pub fn check_graph_girth(&self) -> Girth {
        let mut pairs: Vec<(usize, usize)> = self
            .h
            .cols
            .iter()
            .filter(|c| c.len() == 2)
            .map(|c| (c[0], c[1]))
            .collect();
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0] == w[1]) {
            return Girth::Finite(2);
        }
        let tags = (0..self.m()).map(VertexTag::identity).collect();
        Graph::from_edges_trusted(self.m(), &pairs, tags).girth()
    }
}

/// Rows are the non-dummy vertices in index order, columns the edges in
/// lexicographic order; `H[v][e] = 1` iff `e` is incident on `v`.
pub fn emit_code(cg: &CodeGraph) -> SeqRecCode {
    let g = &cg.graph;
    let checks: Vec<usize> = (0..g.order())
        .filter(|&v| g.tag(v).layer != Some(Layer::Dummy))
        .collect();
    let mut row_of = vec![usize::MAX; g.order()];
    for (i, &v) in checks.iter().enumerate() {
        row_of[v] = i;
    }
    let edges = g.edge_list();
    let mut rows = vec![Vec::new(); checks.len()];
    for (c, &(u, v)) in edges.iter().enumerate() {
        for x in [u, v] {
            if row_of[x] != usize::MAX {
                rows[row_of[x]].push(c);
            }
        }
    }
    let h = SparseMatrix::from_rows(edges.len(), rows).expect("incidence rows are valid");
    SeqRecCode {
        h,
        r: cg.layered.r,
        t: cg.layered.t,
        symbol_map: Some(edges),
    }
}
