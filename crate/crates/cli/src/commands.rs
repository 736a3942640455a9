use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use pfaff_core::bridge::{det_via_pf, dodgson_condense, BipartiteForm};
use pfaff_core::io::parse_matrix;
use pfaff_core::matrix::det_bareiss;
use pfaff_core::word::matching_count;
use pfaff_core::{enumerate_matchings, pf_elimination, pf_matchings, pf_recursive, Error, MatrixForm, Scalar, SquareMatrix, Word};

use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PfAlgo {
    Matchings,
    Recursive,
    Elimination,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum DetAlgo {
    Condense,
    Elimination,
    PfBridge,
}

pub fn read_matrix(path: &Path) -> CliResult<SquareMatrix<Scalar>> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    Ok(parse_matrix(&text)?)
}

pub fn pfaffian(m: SquareMatrix<Scalar>, algo: PfAlgo) -> CliResult<Scalar> {
    if m.dim() % 2 == 1 {
        return Err(Error::OddDimension(m.dim()).into());
    }
    let form = MatrixForm::new(m)?;
    let value = match algo {
        PfAlgo::Matchings => pf_matchings(&form, &form.full_word())?,
        PfAlgo::Recursive => pf_recursive(&form, &form.full_word())?,
        PfAlgo::Elimination => pf_elimination(form.matrix())?,
    };
    Ok(value)
}

pub fn determinant(m: &SquareMatrix<Scalar>, algo: DetAlgo) -> CliResult<Scalar> {
    let value = match algo {
        DetAlgo::Condense => dodgson_condense(m)?,
        DetAlgo::Elimination => det_bareiss(m),
        DetAlgo::PfBridge => {
            let all: Vec<u32> = (0..m.dim() as u32).collect();
            det_via_pf(&BipartiteForm::from_square(m), &all, &all)?
        }
    };
    Ok(value)
}

/// One line per canonical matching, then a count line.
pub fn matchings_listing(text: &str) -> CliResult<String> {
    let word = Word::parse(text)?;
    let mut out = String::new();
    let mut count = 0u64;
    for m in enumerate_matchings(&word)? {
        writeln!(out, "{m}").unwrap();
        count += 1;
    }
    debug_assert_eq!(count, matching_count(word.len() as u32 / 2));
    writeln!(out, "{count} matchings").unwrap();
    Ok(out)
}
