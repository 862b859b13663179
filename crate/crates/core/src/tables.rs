//! Batch sweeps over group orders: rank cross-validation and D_c structure
//! tables. Rows are independent, so with the `parallel` feature they are
//! evaluated on a rayon pool; results are collected in row order either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::classify::{dc_structure, GroupStructure};
use crate::cobordism::{ManifoldFlags, ManifoldProfile};
use crate::error::Result;
use crate::group_ring::CyclicGroupSpec;
use crate::whitehead::{cross_validated_rank, rank, GeneratorRegistry};

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RankRow {
    pub n: usize,
    pub rank: usize,
    pub lattice_rank: usize,
}

fn rank_row(n: usize, precision_digits: u32) -> Result<RankRow> {
    let lattice_rank = cross_validated_rank(n, precision_digits)?;
    Ok(RankRow {
        n,
        rank: rank(n),
        lattice_rank,
    })
}

/// rank(n) for n = 1..=max_n, each row cross-validated against the numeric
/// rank of the Bass-unit log-lattice. A mismatch aborts the whole table.
pub fn rank_table(max_n: usize, precision_digits: u32) -> Result<Vec<RankRow>> {
    #[cfg(feature = "parallel")]
    {
        (1..=max_n)
            .into_par_iter()
            .map(|n| rank_row(n, precision_digits))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        rank_table_seq(max_n, precision_digits)
    }
}

/// Sequential fallback, always available; the bench suite compares the two.
pub fn rank_table_seq(max_n: usize, precision_digits: u32) -> Result<Vec<RankRow>> {
    (1..=max_n).map(|n| rank_row(n, precision_digits)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DcRow {
    pub n: usize,
    pub rank: usize,
    pub odd_dim: GroupStructure,
    pub even_dim: GroupStructure,
}

fn dc_row(n: usize, registry: &GeneratorRegistry, precision_digits: u32) -> Result<DcRow> {
    let pi = CyclicGroupSpec::orientable(n)?;
    let odd = ManifoldProfile::new("M", 5, pi, true, ManifoldFlags::default())?;
    let even = ManifoldProfile::new("M", 6, pi, true, ManifoldFlags::default())?;
    Ok(DcRow {
        n,
        rank: rank(n),
        odd_dim: dc_structure(&odd, registry, precision_digits)?,
        even_dim: dc_structure(&even, registry, precision_digits)?,
    })
}

/// D_c structure for both dimension parities, n = 1..=max_n.
pub fn dc_table(
    max_n: usize,
    registry: &GeneratorRegistry,
    precision_digits: u32,
) -> Result<Vec<DcRow>> {
    #[cfg(feature = "parallel")]
    {
        (1..=max_n)
            .into_par_iter()
            .map(|n| dc_row(n, registry, precision_digits))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        dc_table_seq(max_n, registry, precision_digits)
    }
}

pub fn dc_table_seq(
    max_n: usize,
    registry: &GeneratorRegistry,
    precision_digits: u32,
) -> Result<Vec<DcRow>> {
    (1..=max_n)
        .map(|n| dc_row(n, registry, precision_digits))
        .collect()
}
