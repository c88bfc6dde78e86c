//! Plain-text generator matrices.
//!
//! ```text
//! # any number of comment lines
//! k n
//! <k lines of n characters from {0,1}>
//! ```
//!
//! Lines end in LF. Comments may appear anywhere and are ignored on input.

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// Render `g` with each entry of `comments` on its own `# ` line.
pub fn emit_generator_file(g: &BitMatrix, comments: &[String]) -> String {
    let mut out = String::with_capacity((g.cols() + 1) * (g.rows() + 1) + 64);
    for c in comments {
        for line in c.lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
    }
    out.push_str(&format!("{} {}\n", g.rows(), g.cols()));
    for i in 0..g.rows() {
        out.push_str(&g.row_string(i));
        out.push('\n');
    }
    out
}

/// Comment lines of a generator file, with the `#` and one following space removed.
pub fn generator_file_comments(text: &str) -> Vec<String> {
    text.lines().filter_map(|l| l.strip_prefix('#')).map(|l| l.strip_prefix(' ').unwrap_or(l).to_string()).collect()
}

pub fn parse_generator_file(text: &str) -> Result<BitMatrix> {
    let err = |line: usize, message: String| Error::GeneratorFile { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());

    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing `k n` header".into()))?;
    let mut fields = header.split_whitespace();
    let mut field = |name: &str| -> Result<usize> {
        let f = fields.next().ok_or_else(|| err(hline, format!("header lacks {name}")))?;
        f.parse().map_err(|_| err(hline, format!("{name} is not a number: {f:?}")))
    };
    let k = field("k")?;
    let n = field("n")?;
    if fields.next().is_some() {
        return Err(err(hline, "header has more than two fields".into()));
    }
    if n > crate::gf2::MAX_COLS {
        return Err(err(hline, format!("length {n} exceeds {}", crate::gf2::MAX_COLS)));
    }

    let mut g = BitMatrix::zeros(0, n);
    for (lineno, row) in lines.by_ref().take(k) {
        let row = row.trim();
        if row.len() != n {
            return Err(err(lineno, format!("row has {} characters, expected {n}", row.len())));
        }
        let mut word = 0u128;
        for (j, ch) in row.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => word |= 1 << j,
                other => return Err(err(lineno, format!("unexpected character {other:?} in column {}", j + 1))),
            }
        }
        g.push_row(word);
    }
    if g.rows() < k {
        return Err(err(text.lines().count() + 1, format!("expected {k} rows, found {}", g.rows())));
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(err(lineno, format!("extra content after {k} rows")));
    }
    Ok(g)
}
