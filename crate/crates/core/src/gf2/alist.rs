//! Reader and writer for the alist sparse-matrix format.
//!
//! Layout: `n m` (columns, rows), the maximum column and row degrees, the
//! column degrees, the row degrees, then one line of 1-based row indices per
//! column followed by one line of 1-based column indices per row. Zeros are
//! padding and are ignored when reading; the writer pads every list to the
//! maximum degree.

use std::fmt::Write as _;
use std::path::Path;

use super::BinaryMatrix;
use crate::error::{Error, Result};

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    /// Next non-blank line as (1-based line number, parsed integers).
    fn next_numbers(&mut self, what: &str) -> Result<(usize, Vec<usize>)> {
        for (idx, line) in self.inner.by_ref() {
            if line.trim().is_empty() {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: idx + 1,
                        msg: format!("`{tok}` is not a non-negative integer"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok((idx + 1, nums));
        }
        Err(Error::Parse {
            line: 0,
            msg: format!("unexpected end of input while reading {what}"),
        })
    }
}

fn expect_len(line: usize, nums: &[usize], want: usize, what: &str) -> Result<()> {
    if nums.len() != want {
        return Err(Error::Parse {
            line,
            msg: format!("{what}: expected {want} values, found {}", nums.len()),
        });
    }
    Ok(())
}

fn read_lists(
    lines: &mut Lines<'_>,
    degrees: &[usize],
    bound: usize,
    what: &str,
) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::with_capacity(degrees.len());
    for (i, &deg) in degrees.iter().enumerate() {
        if deg == 0 && degrees.iter().all(|&d| d == 0) {
            out.push(Vec::new());
            continue;
        }
        let (line, nums) = lines.next_numbers(what)?;
        let mut list = Vec::with_capacity(deg);
        for &x in nums.iter().filter(|&&x| x != 0) {
            if x > bound {
                return Err(Error::Parse {
                    line,
                    msg: format!("{what} {}: index {x} exceeds {bound}", i + 1),
                });
            }
            list.push(x - 1);
        }
        if list.len() != deg {
            return Err(Error::Parse {
                line,
                msg: format!("{what} {}: degree {deg} declared, {} indices listed", i + 1, list.len()),
            });
        }
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse {
                line,
                msg: format!("{what} {}: repeated index", i + 1),
            });
        }
        out.push(list);
    }
    Ok(out)
}

/// Parses an alist document.
pub fn parse_alist(text: &str) -> Result<BinaryMatrix> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
    };
    let (line, dims) = lines.next_numbers("dimensions")?;
    expect_len(line, &dims, 2, "dimensions")?;
    let (n, m) = (dims[0], dims[1]);
    let (line, maxes) = lines.next_numbers("maximum degrees")?;
    expect_len(line, &maxes, 2, "maximum degrees")?;
    let (line, col_deg) = lines.next_numbers("column degrees")?;
    expect_len(line, &col_deg, n, "column degrees")?;
    let (line, row_deg) = lines.next_numbers("row degrees")?;
    expect_len(line, &row_deg, m, "row degrees")?;

    let cols = read_lists(&mut lines, &col_deg, m, "column")?;
    let rows = read_lists(&mut lines, &row_deg, n, "row")?;

    let matrix = BinaryMatrix::new(m, n, rows)?;
    if matrix.column_lists() != cols {
        return Err(Error::Parse {
            line: 0,
            msg: "column lists disagree with row lists".into(),
        });
    }
    Ok(matrix)
}

/// Serialises a matrix as alist text.
pub fn to_alist(m: &BinaryMatrix) -> String {
    let cols = m.column_lists();
    let col_deg: Vec<usize> = cols.iter().map(Vec::len).collect();
    let row_deg = m.row_weights();
    let max_col = col_deg.iter().copied().max().unwrap_or(0);
    let max_row = row_deg.iter().copied().max().unwrap_or(0);

    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let padded = |list: &[usize], width: usize| {
        let mut v: Vec<usize> = list.iter().map(|&x| x + 1).collect();
        v.resize(width, 0);
        join(&v)
    };

    let mut out = String::new();
    let _ = writeln!(out, "{} {}", m.cols(), m.rows());
    let _ = writeln!(out, "{max_col} {max_row}");
    let _ = writeln!(out, "{}", join(&col_deg));
    let _ = writeln!(out, "{}", join(&row_deg));
    if max_col > 0 {
        for c in &cols {
            let _ = writeln!(out, "{}", padded(c, max_col));
        }
    }
    if max_row > 0 {
        for r in m.row_lists() {
            let _ = writeln!(out, "{}", padded(r, max_row));
        }
    }
    out
}

pub fn read_alist(path: impl AsRef<Path>) -> Result<BinaryMatrix> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::File {
        path: path.to_path_buf(),
        source,
    })?;
    parse_alist(&text)
}

pub fn write_alist(path: impl AsRef<Path>, m: &BinaryMatrix) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, to_alist(m)).map_err(|source| Error::File {
        path: path.to_path_buf(),
        source,
    })
}
