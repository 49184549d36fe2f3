//! MacKay-style alist reader/writer for the full parity-check matrix
//! `H = [C | M]`. `C` is materialized on write so third-party tools can
//! consume the file; on read the first `m` columns are checked against the
//! circulant convention and stripped back off.
//!
//! Format: line 1 `n m`; line 2 `max_col_weight max_row_weight`; line 3 the
//! n column weights; line 4 the m row weights; then n lines of 1-based row
//! indices per column, zero-padded to `max_col_weight`; then m lines of
//! 1-based column indices per row. ASCII, space-separated, LF endings.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::code::{CodeParams, SparseBinaryMatrix, StructuredCode};
use crate::{Error, Result};

pub fn write_alist(code: &StructuredCode, path: &Path) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    let (n, m) = (code.params.n, code.params.m);
    let cols: Vec<Vec<usize>> = (0..n).map(|j| code.h_column(j)).collect();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (j, sup) in cols.iter().enumerate() {
        for &i in sup {
            rows[i].push(j);
        }
    }
    let max_col = cols.iter().map(|c| c.len()).max().unwrap_or(0);
    let max_row = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    writeln!(out, "{n} {m}")?;
    writeln!(out, "{max_col} {max_row}")?;
    let col_weights: Vec<String> = cols.iter().map(|c| c.len().to_string()).collect();
    writeln!(out, "{}", col_weights.join(" "))?;
    let row_weights: Vec<String> = rows.iter().map(|r| r.len().to_string()).collect();
    writeln!(out, "{}", row_weights.join(" "))?;
    for sup in &cols {
        let mut fields: Vec<String> = sup.iter().map(|&i| (i + 1).to_string()).collect();
        fields.resize(max_col, "0".to_string());
        writeln!(out, "{}", fields.join(" "))?;
    }
    for sup in &rows {
        let fields: Vec<String> = sup.iter().map(|&j| (j + 1).to_string()).collect();
        writeln!(out, "{}", fields.join(" "))?;
    }
    out.flush()?;
    Ok(())
}

fn bad(line: usize, msg: impl Into<String>) -> Error {
    Error::MalformedAlist {
        line,
        msg: msg.into(),
    }
}

fn parse_line(lines: &[String], idx: usize) -> Result<Vec<usize>> {
    let text = lines
        .get(idx)
        .ok_or_else(|| bad(idx + 1, "unexpected end of file"))?;
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| bad(idx + 1, format!("not an integer: {tok:?}")))
        })
        .collect()
}

pub fn read_alist(path: &Path) -> Result<StructuredCode> {
    let reader = BufReader::new(File::open(path)?);
    let lines: Vec<String> = reader.lines().collect::<std::io::Result<_>>()?;
    let header = parse_line(&lines, 0)?;
    if header.len() != 2 {
        return Err(bad(1, "expected \"n m\""));
    }
    let (n, m) = (header[0], header[1]);
    if n == 0 || m == 0 || n <= m {
        return Err(bad(1, format!("invalid dimensions n={n} m={m}")));
    }
    let maxima = parse_line(&lines, 1)?;
    if maxima.len() != 2 {
        return Err(bad(2, "expected \"max_col_weight max_row_weight\""));
    }
    let max_col = maxima[0];
    let col_weights = parse_line(&lines, 2)?;
    if col_weights.len() != n {
        return Err(bad(3, format!("expected {n} column weights")));
    }
    let row_weights = parse_line(&lines, 3)?;
    if row_weights.len() != m {
        return Err(bad(4, format!("expected {m} row weights")));
    }
    let mut cols: Vec<Vec<usize>> = Vec::with_capacity(n);
    for j in 0..n {
        let line_no = 4 + j;
        let mut entries = parse_line(&lines, line_no)?;
        entries.retain(|&x| x != 0);
        if entries.len() != col_weights[j] {
            return Err(bad(
                line_no + 1,
                format!(
                    "column {j} has {} entries but declares weight {}",
                    entries.len(),
                    col_weights[j]
                ),
            ));
        }
        if entries.len() > max_col {
            return Err(bad(line_no + 1, "column exceeds declared maximum weight"));
        }
        let mut sup: Vec<usize> = Vec::with_capacity(entries.len());
        for e in entries {
            if e > m {
                return Err(bad(line_no + 1, format!("row index {e} out of range")));
            }
            sup.push(e - 1);
        }
        sup.sort_unstable();
        sup.dedup();
        if sup.len() != col_weights[j] {
            return Err(bad(line_no + 1, format!("column {j} has duplicate rows")));
        }
        cols.push(sup);
    }
    // Row adjacency lines are redundant; check consistency when present.
    let mut rows_from_cols: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (j, sup) in cols.iter().enumerate() {
        for &i in sup {
            rows_from_cols[i].push(j);
        }
    }
    for i in 0..m {
        let line_no = 4 + n + i;
        if line_no >= lines.len() {
            return Err(bad(line_no + 1, "missing row adjacency line"));
        }
        let mut entries = parse_line(&lines, line_no)?;
        entries.retain(|&x| x != 0);
        let mut from_cols = std::mem::take(&mut rows_from_cols[i]);
        let mut listed: Vec<usize> = entries
            .iter()
            .map(|&e| {
                if e == 0 || e > n {
                    Err(bad(line_no + 1, format!("column index {e} out of range")))
                } else {
                    Ok(e - 1)
                }
            })
            .collect::<Result<_>>()?;
        listed.sort_unstable();
        from_cols.sort_unstable();
        if listed != from_cols {
            return Err(bad(
                line_no + 1,
                format!("row {i} adjacency disagrees with column lists"),
            ));
        }
    }
    // Split H back into the implicit C and explicit M.
    for j in 0..m {
        let expect = {
            let a = j;
            let b = (j + 1) % m;
            if a < b {
                vec![a, b]
            } else {
                vec![b, a]
            }
        };
        if cols[j] != expect {
            return Err(bad(
                5 + j,
                format!("column {j} does not match the circulant convention"),
            ));
        }
    }
    let r = col_weights[m];
    let params = CodeParams::validate(n, m, r)
        .map_err(|e| bad(1, format!("invalid code parameters: {e}")))?;
    let m_cols: Vec<Vec<usize>> = cols[m..].to_vec();
    let m_matrix = SparseBinaryMatrix::new(m, n - m, m_cols)
        .map_err(|e| bad(5 + m, format!("invalid M matrix: {e}")))?;
    StructuredCode::new(params, m_matrix).map_err(|e| bad(5 + m, format!("invalid code: {e}")))
}
