//! Line-oriented text certificates for low-weight codewords. A certificate
//! carries enough provenance (M-column set and C-runs) for a third party to
//! rebuild the codeword from the alist file alone and re-check the claim.

use std::fmt::Write as _;
use std::path::Path;

use crate::code::{ell, BitVector, StructuredCode};
use crate::search::{RunDescriptor, SearchResult};
use crate::{Error, Result};

const MAGIC: &str = "ldpc-forge-certificate v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub k: usize,
    pub t: usize,
    /// 0-based M-column indices (the symmetric difference of the chains).
    pub columns: Vec<usize>,
    pub runs: Vec<RunDescriptor>,
    pub weight: usize,
    /// Support of the codeword in [0, n).
    pub support: Vec<usize>,
}

impl Certificate {
    pub fn from_result(code: &StructuredCode, result: &SearchResult) -> Certificate {
        Certificate {
            n: code.params.n,
            m: code.params.m,
            r: code.params.r,
            k: result.k,
            t: result.t,
            columns: result.m_column_set.clone(),
            runs: result.c_runs.clone(),
            weight: result.weight,
            support: result.codeword.support(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{MAGIC}");
        let _ = writeln!(out, "n {}", self.n);
        let _ = writeln!(out, "m {}", self.m);
        let _ = writeln!(out, "r {}", self.r);
        let _ = writeln!(out, "k {}", self.k);
        let _ = writeln!(out, "t {}", self.t);
        let cols: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "columns {}", cols.join(" "));
        for run in &self.runs {
            let _ = writeln!(out, "run {} {} {} {}", run.i, run.j, run.start, run.len);
        }
        let _ = writeln!(out, "weight {}", self.weight);
        let sup: Vec<String> = self.support.iter().map(|s| s.to_string()).collect();
        let _ = writeln!(out, "support {}", sup.join(" "));
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Certificate> {
        fn bad(line: usize, msg: impl Into<String>) -> Error {
            Error::MalformedCertificate {
                line,
                msg: msg.into(),
            }
        }
        fn ints(fields: &[&str], line: usize) -> Result<Vec<usize>> {
            fields
                .iter()
                .map(|f| {
                    f.parse::<usize>()
                        .map_err(|_| bad(line, format!("not an integer: {f:?}")))
                })
                .collect()
        }
        let mut lines = text.lines().enumerate();
        let (_, magic) = lines.next().ok_or_else(|| bad(1, "empty certificate"))?;
        if magic.trim() != MAGIC {
            return Err(bad(1, "unrecognized certificate header"));
        }
        let mut scalar = |name: &str| -> Result<usize> {
            let (idx, line) = lines
                .next()
                .ok_or_else(|| bad(0, format!("missing field {name}")))?;
            let mut parts = line.split_whitespace();
            if parts.next() != Some(name) {
                return Err(bad(idx + 1, format!("expected field {name}")));
            }
            let value = parts
                .next()
                .ok_or_else(|| bad(idx + 1, format!("missing value for {name}")))?;
            value
                .parse()
                .map_err(|_| bad(idx + 1, format!("bad value for {name}")))
        };
        let n = scalar("n")?;
        let m = scalar("m")?;
        let r = scalar("r")?;
        let k = scalar("k")?;
        let t = scalar("t")?;
        let mut columns = None;
        let mut runs = Vec::new();
        let mut weight = None;
        let mut support = None;
        for (idx, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.first() {
                Some(&"columns") => columns = Some(ints(&fields[1..], idx + 1)?),
                Some(&"run") => {
                    let vals = ints(&fields[1..], idx + 1)?;
                    if vals.len() != 4 {
                        return Err(bad(idx + 1, "run expects \"i j start len\""));
                    }
                    runs.push(RunDescriptor {
                        i: vals[0],
                        j: vals[1],
                        start: vals[2],
                        len: vals[3],
                    });
                }
                Some(&"weight") => {
                    let vals = ints(&fields[1..], idx + 1)?;
                    weight = vals.first().copied();
                }
                Some(&"support") => support = Some(ints(&fields[1..], idx + 1)?),
                Some(other) => return Err(bad(idx + 1, format!("unknown field {other:?}"))),
                None => {}
            }
        }
        Ok(Certificate {
            n,
            m,
            r,
            k,
            t,
            columns: columns.ok_or_else(|| bad(0, "missing columns line"))?,
            runs,
            weight: weight.ok_or_else(|| bad(0, "missing weight line"))?,
            support: support.ok_or_else(|| bad(0, "missing support line"))?,
        })
    }

    pub fn read(path: &Path) -> Result<Certificate> {
        Certificate::parse(&std::fs::read_to_string(path)?)
    }
}

/// Rebuilds the codeword from the certificate's columns and runs and checks
/// every claim. Returns the name of the first failed check.
pub fn verify(code: &StructuredCode, cert: &Certificate) -> std::result::Result<(), String> {
    let (n, m) = (code.params.n, code.params.m);
    if cert.n != n || cert.m != m || cert.r != code.params.r {
        return Err("parameter mismatch".into());
    }
    let width = n - m;
    if cert.columns.iter().any(|&c| c >= width) {
        return Err("column index out of range".into());
    }
    let mut word = BitVector::zeros(n);
    for run in &cert.runs {
        if run.i >= m || run.j >= m || run.start >= m || run.len == 0 || run.len > m / 2 {
            return Err("run out of range".into());
        }
        // The run must telescope to support {i, j}.
        if run.len != ell(run.i as i64 - run.j as i64, m) {
            return Err("run length inconsistent".into());
        }
        let end = (run.start + run.len) % m;
        let endpoints_ok = (run.start == run.i && end == run.j)
            || (run.start == run.j && end == run.i);
        if !endpoints_ok {
            return Err("run endpoints inconsistent".into());
        }
        for d in 0..run.len {
            word.flip((run.start + d) % m);
        }
    }
    for &col in &cert.columns {
        word.flip(m + col);
    }
    if word.is_zero() {
        return Err("zero word".into());
    }
    match crate::code::syndrome(code, &word) {
        Ok(s) if s.is_zero() => {}
        _ => return Err("syndrome nonzero".into()),
    }
    if word.weight() != cert.weight {
        return Err("weight mismatch".into());
    }
    if word.support() != cert.support {
        return Err("support mismatch".into());
    }
    Ok(())
}
