//! A small row-transcription language.
//!
//! Rows are written exactly as segment lists: a run of empty cells is
//! `gap(len)`, everything else is an entry. Row indices are 1-based as in the
//! formulas; storage is 0-based.

use crate::array::PartialArray;
use crate::error::ConstructionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Seg {
    Gap(i64),
    Val(i64),
}

impl From<i64> for Seg {
    fn from(v: i64) -> Self {
        Seg::Val(v)
    }
}

/// `len` consecutive empty cells; a negative length is reported when the row is set.
pub(crate) fn gap(len: i64) -> Seg {
    Seg::Gap(len)
}

macro_rules! row {
    ($($x:expr),* $(,)?) => {
        vec![$($crate::constructions::rows::Seg::from($x)),*]
    };
}
pub(crate) use row;

/// Inclusive index range `0..=hi`, empty when `hi < 0`.
pub(crate) fn upto(hi: i64) -> std::ops::RangeInclusive<i64> {
    0..=hi
}

pub(crate) struct Rows {
    n: usize,
    rows: Vec<Option<Vec<Option<i64>>>>,
}

impl Rows {
    pub(crate) fn new(n: usize) -> Self {
        Rows {
            n,
            rows: vec![None; n],
        }
    }

    /// Defines row `t` (1-based) from its segments.
    pub(crate) fn set(&mut self, t: i64, segs: Vec<Seg>) -> Result<(), ConstructionError> {
        let row = self.index(t)?;
        let mut cells = Vec::with_capacity(self.n);
        for seg in segs {
            match seg {
                Seg::Gap(len) if len < 0 => {
                    return Err(ConstructionError::NegativeGap { row: row + 1, len })
                }
                Seg::Gap(len) => cells.extend(std::iter::repeat_n(None, len as usize)),
                Seg::Val(0) => return Err(ConstructionError::ZeroEntry { row: row + 1 }),
                Seg::Val(v) => cells.push(Some(v)),
            }
        }
        self.put(row, cells)
    }

    /// Defines row `t` (1-based) from ready-made cells.
    pub(crate) fn set_cells(
        &mut self,
        t: i64,
        cells: Vec<Option<i64>>,
    ) -> Result<(), ConstructionError> {
        let row = self.index(t)?;
        self.put(row, cells)
    }

    fn index(&self, t: i64) -> Result<usize, ConstructionError> {
        if t < 1 || t as usize > self.n {
            return Err(ConstructionError::RowIndex { row: t, n: self.n });
        }
        Ok(t as usize - 1)
    }

    fn put(&mut self, row: usize, cells: Vec<Option<i64>>) -> Result<(), ConstructionError> {
        if cells.len() != self.n {
            return Err(ConstructionError::RowLength {
                row: row + 1,
                expected: self.n,
                found: cells.len(),
            });
        }
        if self.rows[row].is_some() {
            return Err(ConstructionError::RowTwice { row: row + 1 });
        }
        self.rows[row] = Some(cells);
        Ok(())
    }

    pub(crate) fn finish(self) -> Result<PartialArray, ConstructionError> {
        let rows = self
            .rows
            .into_iter()
            .enumerate()
            .map(|(i, r)| r.ok_or(ConstructionError::RowMissing { row: i + 1 }))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PartialArray::from_rows(rows).expect("rows are validated"))
    }
}
