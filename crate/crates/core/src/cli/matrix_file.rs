//! Plain-text matrices in the 4ti2 layout: a `rows cols` header followed by
//! `rows * cols` whitespace-separated integers.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::IntMatrix;

pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let mut tokens = text.split_whitespace();
    let mut header = |what: &str| -> Result<usize> {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::MalformedHeader(format!("missing {what}")))?;
        tok.parse::<usize>().map_err(|_| {
            Error::MalformedHeader(format!("{what} {tok:?} is not a nonnegative integer"))
        })
    };
    let rows = header("row count")?;
    let cols = header("column count")?;
    let entries = tokens
        .map(|t| {
            t.parse::<BigInt>()
                .map_err(|_| Error::NonIntegerToken(t.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let expected = rows
        .checked_mul(cols)
        .ok_or_else(|| Error::MalformedHeader("dimensions overflow".into()))?;
    if entries.len() != expected {
        return Err(Error::EntryCountMismatch {
            expected,
            found: entries.len(),
        });
    }
    IntMatrix::from_row_major(rows, cols, entries)
}

/// Canonical text form: single spaces, one line per row, trailing newline.
pub fn write_matrix(m: &IntMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let line: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let m = parse_matrix("2 3\n1 2 3\n4 5 6").unwrap();
        assert_eq!(m, IntMatrix::from_i64_rows(&[[1, 2, 3], [4, 5, 6]]));
        assert_eq!(
            parse_matrix("2 2\n1 2 3"),
            Err(Error::EntryCountMismatch {
                expected: 4,
                found: 3
            })
        );
        let m = parse_matrix("1 2\n-1 2").unwrap();
        assert_eq!(m, IntMatrix::from_i64_rows(&[[-1, 2]]));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_matrix(""), Err(Error::MalformedHeader(_))));
        assert!(matches!(parse_matrix("2"), Err(Error::MalformedHeader(_))));
        assert!(matches!(
            parse_matrix("-1 2"),
            Err(Error::MalformedHeader(_))
        ));
        assert_eq!(
            parse_matrix("1 2\n1 x"),
            Err(Error::NonIntegerToken("x".into()))
        );
        assert_eq!(
            parse_matrix("1 1\n1.5"),
            Err(Error::NonIntegerToken("1.5".into()))
        );
    }

    #[test]
    fn writer_is_canonical() {
        let m = parse_matrix("  2 2 \n\n 1   -20\t3\n 400000000000000000000000 ").unwrap();
        let text = write_matrix(&m);
        assert_eq!(text, "2 2\n1 -20\n3 400000000000000000000000\n");
        assert_eq!(parse_matrix(&text).unwrap(), m);
        assert_eq!(write_matrix(&IntMatrix::zeros(0, 3)), "0 3\n");
    }
}
