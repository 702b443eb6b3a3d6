//! Diophantus triangles, both sides of the generalized-golden-mean table
//! and Fibonacci/Lucas triplet classification.
//!
//! Left rows are the integer case `r = (2N+1)²`, `m = 2N(N+1)`; right rows
//! are the plain sequence `r = 2N+1`, `m = N`. Both satisfy `h² = m² + r`
//! with `h = m + 1`.

use num_bigint::BigUint;

use crate::number::QuadraticSurd;
use crate::quadratic::{generalized_gm, RootPair};
use crate::{Error, Result};

/// Largest row count accepted by [`table_one`].
pub const MAX_TABLE_ROWS: u64 = 10_000;

/// `a² + b² = c²` with odd `a` and `c = b + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PythagoreanTriple {
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
}

impl PythagoreanTriple {
    pub fn is_valid(&self) -> bool {
        &self.a * &self.a + &self.b * &self.b == &self.c * &self.c && self.c == &self.b + 1u32
    }
}

/// Triple with first cathetus `2N + 1`, second cathetus `2N(N+1)` and
/// hypotenuse one above it.
pub fn diophantus_triple(index: u64) -> PythagoreanTriple {
    let n = BigUint::from(index);
    let a = &n * 2u32 + 1u32;
    let b = &n * (&n + 1u32) * 2u32;
    let c = &b + 1u32;
    let triple = PythagoreanTriple { a, b, c };
    debug_assert!(triple.is_valid());
    triple
}

/// `m_0 = 0`, `m_N = m_(N−1) + 4N`.
pub fn four_k_sequence(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut m = 0u64;
    for n in 0..count as u64 {
        m += 4 * n;
        assert_eq!(m, 2 * n * (n + 1), "4k recurrence diverged from 2N(N+1)");
        out.push(m);
    }
    out
}

/// Index of the right-hand row that reproduces left-hand row `index` in
/// `(m, h, r)`. Against the right-hand row of the same index, the left `r`
/// is the square of the right `r`.
pub fn left_to_right_index(index: u64) -> u64 {
    2 * index * (index + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SideSelection {
    Left,
    Right,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowSolutions {
    /// The printed integer pair `(N, N+1)`.
    Integers(u64, u64),
    /// Exact roots of `x² + x = m/2`.
    Surds(Box<RootPair>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableOneRow {
    pub side: Side,
    pub index: u64,
    pub m: u64,
    pub h: u64,
    pub r: u64,
    pub solutions: RowSolutions,
}

impl TableOneRow {
    pub fn left(index: u64) -> Self {
        let m = 2 * index * (index + 1);
        let row = TableOneRow {
            side: Side::Left,
            index,
            m,
            h: m + 1,
            r: (2 * index + 1) * (2 * index + 1),
            solutions: RowSolutions::Integers(index, index + 1),
        };
        debug_assert_eq!(row.h, index * index + (index + 1) * (index + 1));
        row
    }

    /// Builds the row and checks `x1² + x2² = h`, `(|x1| + |x2|)² = r`
    /// exactly.
    pub fn right(index: u64) -> Result<Self> {
        let gm = generalized_gm(index)?;
        let h = index + 1;
        if gm.roots.sum_of_squares() != QuadraticSurd::from_integer(h as i64)
            || gm.roots.abs_sum().square() != QuadraticSurd::from_integer(gm.r as i64)
        {
            return Err(Error::InvalidParameter(format!("row {index} fails its root identities")));
        }
        Ok(TableOneRow {
            side: Side::Right,
            index,
            m: index,
            h,
            r: gm.r,
            solutions: RowSolutions::Surds(Box::new(gm.roots)),
        })
    }

    /// `h² = m² + r`.
    pub fn triangle_holds(&self) -> bool {
        let (m, h, r) = (self.m as u128, self.h as u128, self.r as u128);
        h * h == m * m + r
    }

    /// `(m, h, r)` in table order.
    pub fn triplet(&self) -> (u64, u64, u64) {
        (self.m, self.h, self.r)
    }
}

/// Rows `0..rows` of the requested side(s); with `Both`, left and right rows
/// of the same index are interleaved.
pub fn table_one(rows: u64, side: SideSelection) -> Result<Vec<TableOneRow>> {
    if rows > MAX_TABLE_ROWS {
        return Err(Error::InvalidParameter(format!("at most {MAX_TABLE_ROWS} rows")));
    }
    let mut out = Vec::new();
    for n in 0..rows {
        if matches!(side, SideSelection::Left | SideSelection::Both) {
            out.push(TableOneRow::left(n));
        }
        if matches!(side, SideSelection::Right | SideSelection::Both) {
            out.push(TableOneRow::right(n)?);
        }
    }
    debug_assert!(out.iter().all(TableOneRow::triangle_holds));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripletTag {
    Fibonacci,
    Lucas,
    Neither,
}

impl TripletTag {
    pub fn as_str(self) -> &'static str {
        match self {
            TripletTag::Fibonacci => "fibonacci",
            TripletTag::Lucas => "lucas",
            TripletTag::Neither => "neither",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripletClass {
    pub tag: TripletTag,
    /// Indices `(i, i+1, i+2)` of the first match.
    pub member_indices: Option<(usize, usize, usize)>,
}

/// Terms of `u_0 = first, u_1 = second, u_(k+2) = u_k + u_(k+1)` up to
/// `limit`, plus one term beyond so windows ending past `limit` are seen.
fn sequence_up_to(first: u64, second: u64, limit: u64) -> Vec<u64> {
    let mut seq = vec![first, second];
    while seq[seq.len() - 1] <= limit || seq[seq.len() - 2] <= limit {
        let next = seq[seq.len() - 1].checked_add(seq[seq.len() - 2]);
        match next {
            Some(v) => seq.push(v),
            None => break,
        }
    }
    seq
}

fn consecutive_index(seq: &[u64], t: (u64, u64, u64)) -> Option<usize> {
    seq.windows(3).position(|w| (w[0], w[1], w[2]) == t)
}

/// Fibonacci (`F0 = 0, F1 = 1`) wins over Lucas (`L0 = 2, L1 = 1`) when both
/// match. The triple is taken as ordered.
pub fn classify_triplet(t: (u64, u64, u64)) -> TripletClass {
    let limit = t.0.max(t.1).max(t.2);
    let fib = sequence_up_to(0, 1, limit);
    if let Some(i) = consecutive_index(&fib, t) {
        return TripletClass { tag: TripletTag::Fibonacci, member_indices: Some((i, i + 1, i + 2)) };
    }
    let lucas = sequence_up_to(2, 1, limit);
    if let Some(i) = consecutive_index(&lucas, t) {
        return TripletClass { tag: TripletTag::Lucas, member_indices: Some((i, i + 1, i + 2)) };
    }
    TripletClass { tag: TripletTag::Neither, member_indices: None }
}
