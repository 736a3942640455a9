//! The matrix file format: a line holding `n`, then `n` rows of `n` scalars.
//! Blank lines are ignored; scalars are integers or fractions like `-3/4`.

use crate::algebra::{parse_scalar, Scalar};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

pub fn parse_matrix(text: &str) -> Result<SquareMatrix<Scalar>> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::parse("matrix", "empty input"))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::parse("matrix", format!("first line must be the dimension, got {header:?}")))?;
    let mut rows = Vec::with_capacity(n);
    for (i, line) in lines.enumerate() {
        if i >= n {
            return Err(Error::parse("matrix", format!("more than {n} rows")));
        }
        let row = line.split_whitespace().map(parse_scalar).collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::shape(format!("row {i} has {} entries, expected {n}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::parse("matrix", format!("expected {n} rows, found {}", rows.len())));
    }
    SquareMatrix::from_rows(rows)
}

pub fn format_matrix(m: &SquareMatrix<Scalar>) -> String {
    m.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    #[test]
    fn round_trip() {
        let m = parse_matrix("3\n1 -2/4 0\n\n0 0 7\n1/3 2 -1\n").unwrap();
        assert_eq!(m.get(0, 1), &Scalar::new((-1).into(), 2.into()));
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
        assert_eq!(parse_matrix("0\n").unwrap().dim(), 0);
        assert_eq!(parse_matrix("0").unwrap().det(), Scalar::one());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("two\n1 2\n3 4").is_err());
        assert!(parse_matrix("2\n1 2\n3").is_err());
        assert!(parse_matrix("2\n1 2\n3 4\n5 6").is_err());
        assert!(parse_matrix("2\n1 2").is_err());
        assert!(parse_matrix("2\n1 x\n3 4").is_err());
        assert!(parse_matrix("1\n1/0").is_err());
    }
}
