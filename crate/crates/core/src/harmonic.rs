//! The decimal multiplication grid `cells[i][j] = i·j` and its
//! diagonal-adjacent doublets `k(k+1)`, which are exactly the integer
//! metallic means.

use crate::quadratic::integer_metallic;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicTable {
    size: usize,
    cells: Vec<Vec<u64>>,
}

impl HarmonicTable {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn cells(&self) -> &[Vec<u64>] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u64> {
        self.cells.get(row)?.get(col).copied()
    }
}

pub fn build_table(size: usize) -> Result<HarmonicTable> {
    if size == 0 {
        return Err(Error::InvalidParameter("table size must be at least 1".into()));
    }
    let cells = (0..size as u64)
        .map(|i| (0..size as u64).map(|j| i * j).collect())
        .collect();
    Ok(HarmonicTable { size, cells })
}

/// Value `q = k(k+1)` found at `(k, k+1)` and `(k+1, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DoubletReport {
    pub q: u64,
    pub k: u64,
    pub positions: [(usize, usize); 2],
}

/// One report per `k` in `0..size−1`, ascending.
pub fn find_doublets(table: &HarmonicTable) -> Vec<DoubletReport> {
    (0..table.size.saturating_sub(1))
        .map(|k| {
            let q = table.cells[k][k + 1];
            debug_assert_eq!(q, table.cells[k + 1][k]);
            DoubletReport { q, k: k as u64, positions: [(k, k + 1), (k + 1, k)] }
        })
        .collect()
}

/// A row of the table key: `k`, `k² + k` and `k·(k+1)`, computed separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KeyRow {
    pub k: u64,
    pub square_plus: u64,
    pub product: u64,
}

pub fn key_rows(k_max: u64) -> Vec<KeyRow> {
    (0..=k_max)
        .map(|k| {
            let row = KeyRow { k, square_plus: k * k + k, product: k * (k + 1) };
            assert_eq!(row.square_plus, row.product);
            row
        })
        .collect()
}

/// Pairs every doublet `q` with `integer_metallic(q)`, which must be
/// `(k, k+1)`.
pub fn cross_check_integer_means(table: &HarmonicTable) -> Result<Vec<(u64, (u64, u64))>> {
    find_doublets(table)
        .into_iter()
        .map(|d| match integer_metallic(d.q) {
            Some(pair) if pair == (d.k, d.k + 1) => Ok((d.q, pair)),
            _ => Err(Error::CrossCheckFailed(d.q)),
        })
        .collect()
}
