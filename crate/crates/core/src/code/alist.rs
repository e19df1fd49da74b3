//! MacKay alist format:
//!
//! ```text
//! n m
//! max_col_weight max_row_weight
//! <n column weights>
//! <m row weights>
//! <n lines: 1-based rows of each column>
//! <m lines: 1-based columns of each row>
//! ```
//!
//! Writing uses single spaces and no zero padding, except that an empty
//! list is written as a lone `0`. Reading accepts zero padding and
//! cross-checks the column and row lists.

use std::fmt::Write as _;

use super::{CodeError, SparseMatrix};

fn join(items: impl Iterator<Item = usize>) -> String {
    let mut out = String::new();
    for (i, x) in items.enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{x}");
    }
    out
}

pub fn write_alist(h: &SparseMatrix) -> String {
    let mut out = String::new();
    let max_col = h.cols.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = h.rows.iter().map(Vec::len).max().unwrap_or(0);
    let _ = writeln!(out, "{} {}", h.n, h.m);
    let _ = writeln!(out, "{max_col} {max_row}");
    let _ = writeln!(out, "{}", join(h.cols.iter().map(Vec::len)));
    let _ = writeln!(out, "{}", join(h.rows.iter().map(Vec::len)));
    for list in h.cols.iter().chain(&h.rows) {
        if list.is_empty() {
            out.push_str("0\n");
        } else {
            let _ = writeln!(out, "{}", join(list.iter().map(|&i| i + 1)));
        }
    }
    out
}

pub fn parse_alist(text: &str) -> Result<SparseMatrix, CodeError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut next_numbers = |what: &str| -> Result<(usize, Vec<usize>), CodeError> {
        let (line, l) = lines.next().ok_or_else(|| CodeError::Parse {
            line: 0,
            msg: format!("missing {what}"),
        })?;
        let nums = l
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| CodeError::Parse {
                    line,
                    msg: format!("bad number `{tok}` in {what}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((line, nums))
    };
    let expect_len = |line: usize, nums: &[usize], len: usize, what: &str| {
        if nums.len() == len {
            Ok(())
        } else {
            Err(CodeError::Parse {
                line,
                msg: format!("{what}: expected {len} numbers, found {}", nums.len()),
            })
        }
    };

    let (line, dims) = next_numbers("dimensions")?;
    expect_len(line, &dims, 2, "dimensions")?;
    let (n, m) = (dims[0], dims[1]);
    let (line, maxes) = next_numbers("maximum weights")?;
    expect_len(line, &maxes, 2, "maximum weights")?;
    let (line, col_w) = next_numbers("column weights")?;
    expect_len(line, &col_w, n, "column weights")?;
    let (line, row_w) = next_numbers("row weights")?;
    expect_len(line, &row_w, m, "row weights")?;

    let mut cols = Vec::with_capacity(n);
    for (c, &w) in col_w.iter().enumerate() {
        let (line, nums) = next_numbers("column list")?;
        let list: Vec<usize> = nums.into_iter().filter(|&x| x != 0).map(|x| x - 1).collect();
        if list.len() != w || list.iter().any(|&i| i >= m) {
            return Err(CodeError::Parse {
                line,
                msg: format!("column {} does not match its weight {w} or has a row beyond {m}", c + 1),
            });
        }
        cols.push(list);
    }
    let mut rows = Vec::with_capacity(m);
    for (r, &w) in row_w.iter().enumerate() {
        let (line, nums) = next_numbers("row list")?;
        let list: Vec<usize> = nums.into_iter().filter(|&x| x != 0).map(|x| x - 1).collect();
        if list.len() != w {
            return Err(CodeError::Parse {
                line,
                msg: format!("row {} does not match its weight {w}", r + 1),
            });
        }
        rows.push(list);
    }
    if let Some((line, _)) = lines.next() {
        return Err(CodeError::Parse {
            line,
            msg: "trailing data".into(),
        });
    }
    if maxes[0] != col_w.iter().copied().max().unwrap_or(0) || maxes[1] != row_w.iter().copied().max().unwrap_or(0) {
        return Err(CodeError::Malformed("maximum weights disagree with the weight lists".into()));
    }
    let h = SparseMatrix::from_rows(n, rows)?;
    for (c, mut list) in cols.into_iter().enumerate() {
        list.sort_unstable();
        if list != h.cols[c] {
            return Err(CodeError::Malformed(format!("column {} disagrees with the row lists", c + 1)));
        }
    }
    Ok(h)
}
