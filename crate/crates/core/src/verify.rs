//! Grid comparison of the procedure against the rank oracle on homogeneous
//! systems `L_3(d, m^r)`.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::oracle::{oracle_dimension, OracleConfig};
use crate::speciality::{classify_homogeneous, conjectured_dimension, Verdict};
use crate::system::LinearSystem;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridBounds {
    pub degrees: RangeInclusive<i64>,
    pub mults: RangeInclusive<i64>,
    pub points: RangeInclusive<usize>,
}

impl GridBounds {
    /// `0 <= d <= d_max`, `1 <= m <= m_max`, `1 <= r <= r_max`.
    pub fn up_to(d_max: i64, m_max: i64, r_max: usize) -> Self {
        GridBounds {
            degrees: 0..=d_max,
            mults: 1..=m_max,
            points: 1..=r_max,
        }
    }

    /// Cells in `(d, m, r)` lexicographic order.
    pub fn cells(&self) -> impl Iterator<Item = (i64, i64, usize)> + '_ {
        self.degrees.clone().flat_map(move |d| {
            self.mults
                .clone()
                .flat_map(move |m| self.points.clone().map(move |r| (d, m, r)))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridRow {
    pub d: i64,
    pub m: i64,
    pub r: usize,
    pub conjectured: i64,
    pub oracle: i64,
    pub expected: i64,
    pub verdict: Verdict,
    pub matches: bool,
    /// Oracle seeds disagreed on this cell.
    pub unstable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridReport {
    pub bounds: GridBounds,
    pub prime: u64,
    pub seeds: Vec<u64>,
    pub rows: Vec<GridRow>,
}

impl GridReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &GridRow> {
        self.rows.iter().filter(|r| !r.matches)
    }

    pub fn mismatch_count(&self) -> usize {
        self.mismatches().count()
    }
}

pub fn verify_cell(d: i64, m: i64, r: usize, config: &OracleConfig) -> Result<GridRow> {
    let l = LinearSystem::homogeneous(d, m, r);
    let conjectured = conjectured_dimension(&l).dimension;
    let oracle = oracle_dimension(&l, config)?;
    Ok(GridRow {
        d,
        m,
        r,
        conjectured,
        oracle: oracle.dimension,
        expected: l.expected_dimension(),
        verdict: classify_homogeneous(d, m, r),
        matches: conjectured == oracle.dimension,
        unstable: !oracle.seeds_agree(),
    })
}

/// Compares the procedure with the oracle on every cell, in `(d, m, r)`
/// order.
pub fn verify_grid(bounds: &GridBounds, config: &OracleConfig) -> Result<GridReport> {
    let rows = bounds
        .cells()
        .map(|(d, m, r)| verify_cell(d, m, r, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(GridReport {
        bounds: bounds.clone(),
        prime: config.prime,
        seeds: config.seeds.clone(),
        rows,
    })
}
