//! Degree-indexed count tables for populated monomials and normal basis
//! terms.

use std::str::FromStr;

use mnov_core::letter::{coord_letters, gen_set, sym_alphabet};
use mnov_core::{genidx, magnov, spdeidx};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableKind {
    /// Populated general multi-index monomials per degree.
    DimsGen,
    /// Populated SPDE monomials per degree under the given caps.
    DimsSpde,
    /// Normal magmatic basis terms per degree.
    DimsNormal,
}

impl TableKind {
    pub fn name(&self) -> &'static str {
        match self {
            TableKind::DimsGen => "dims-gen",
            TableKind::DimsSpde => "dims-spde",
            TableKind::DimsNormal => "dims-normal",
        }
    }
}

impl FromStr for TableKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dims-gen" => Ok(TableKind::DimsGen),
            "dims-spde" => Ok(TableKind::DimsSpde),
            "dims-normal" => Ok(TableKind::DimsNormal),
            other => Err(format!(
                "unknown table kind `{other}`; expected dims-gen, dims-spde or dims-normal"
            )),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TableParams {
    pub letters: u32,
    pub labels: u32,
    pub dims: usize,
    pub letter_cap: u32,
    pub partial_cap: u32,
}

impl Default for TableParams {
    fn default() -> Self {
        TableParams {
            letters: 1,
            labels: 1,
            dims: 0,
            letter_cap: 1,
            partial_cap: 1,
        }
    }
}

/// Count rows for the degree range, inclusive on both ends.
pub fn counts(kind: TableKind, from: u32, to: u32, params: &TableParams) -> Vec<(u32, u64)> {
    let mut rows = Vec::new();
    for degree in from..=to {
        let count = match kind {
            TableKind::DimsGen => {
                let letters = sym_alphabet(params.letters);
                let labels = gen_set(params.labels);
                genidx::enumerate_populated(degree, &letters, &labels).len() as u64
            }
            TableKind::DimsNormal => {
                let letters = sym_alphabet(params.letters);
                let labels = gen_set(params.labels);
                magnov::enumerate_normal(degree, &letters, &labels).len() as u64
            }
            TableKind::DimsSpde => {
                let letters = coord_letters(params.dims, params.letter_cap);
                let labels = gen_set(params.labels);
                spdeidx::enumerate_populated_capped(
                    degree,
                    &letters,
                    &labels,
                    params.dims,
                    params.partial_cap,
                )
                .len() as u64
            }
        };
        rows.push((degree, count));
    }
    rows
}
