//! Partially filled integer arrays and the grid text format.

use std::fmt;
use std::str::FromStr;

use crate::error::{ArrayError, ParseError};

/// A cell coordinate, 0-based `(row, col)`.
pub type Cell = (usize, usize);

/// An `m x n` grid of optional nonzero integers.
///
/// Empty cells are `None`; a filled cell never holds 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialArray {
    rows: usize,
    cols: usize,
    cells: Vec<Option<i64>>,
}

/// Whether a [`LineView`] runs along a row or a column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineKind {
    Row,
    Column,
}

/// The filled cells of one row (left to right) or one column (top to bottom).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineView {
    pub kind: LineKind,
    pub index: usize,
    pub coordinates: Vec<Cell>,
    pub values: Vec<i64>,
}

impl LineView {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Same line with its natural ordering reversed.
    pub fn reversed(&self) -> LineView {
        let mut out = self.clone();
        out.coordinates.reverse();
        out.values.reverse();
        out
    }
}

impl PartialArray {
    /// An array with every cell empty.
    pub fn empty(rows: usize, cols: usize) -> Result<Self, ArrayError> {
        if rows == 0 || cols == 0 {
            return Err(ArrayError::ZeroDimension { rows, cols });
        }
        Ok(PartialArray {
            rows,
            cols,
            cells: vec![None; rows * cols],
        })
    }

    /// Builds an array from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Option<i64>>>) -> Result<Self, ArrayError> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let mut array = PartialArray::empty(m, n)?;
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(ArrayError::RaggedRow {
                    row: i,
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, value) in row.into_iter().enumerate() {
                array.set((i, j), value)?;
            }
        }
        Ok(array)
    }

    /// Convenience for tests and fixtures: `0` in the input means "empty".
    pub fn from_dense(rows: &[&[i64]]) -> Result<Self, ArrayError> {
        PartialArray::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| (x != 0).then_some(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, (i, j): Cell) -> Option<i64> {
        assert!(
            i < self.rows && j < self.cols,
            "cell ({i}, {j}) out of bounds"
        );
        self.cells[i * self.cols + j]
    }

    pub fn set(&mut self, (i, j): Cell, value: Option<i64>) -> Result<(), ArrayError> {
        if i >= self.rows || j >= self.cols {
            return Err(ArrayError::OutOfBounds {
                row: i,
                col: j,
                rows: self.rows,
                cols: self.cols,
            });
        }
        if value == Some(0) {
            return Err(ArrayError::ZeroEntry { row: i, col: j });
        }
        self.cells[i * self.cols + j] = value;
        Ok(())
    }

    /// All filled cells in row-major order.
    pub fn filled(&self) -> impl Iterator<Item = (Cell, i64)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter_map(move |(idx, v)| v.map(|x| ((idx / self.cols, idx % self.cols), x)))
    }

    pub fn filled_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    pub fn row(&self, i: usize) -> LineView {
        let coordinates: Vec<Cell> = (0..self.cols)
            .map(|j| (i, j))
            .filter(|&c| self.get(c).is_some())
            .collect();
        let values = coordinates.iter().map(|&c| self.get(c).unwrap()).collect();
        LineView {
            kind: LineKind::Row,
            index: i,
            coordinates,
            values,
        }
    }

    pub fn column(&self, j: usize) -> LineView {
        let coordinates: Vec<Cell> = (0..self.rows)
            .map(|i| (i, j))
            .filter(|&c| self.get(c).is_some())
            .collect();
        let values = coordinates.iter().map(|&c| self.get(c).unwrap()).collect();
        LineView {
            kind: LineKind::Column,
            index: j,
            coordinates,
            values,
        }
    }

    /// All rows followed by all columns.
    pub fn lines(&self) -> impl Iterator<Item = LineView> + '_ {
        (0..self.rows)
            .map(|i| self.row(i))
            .chain((0..self.cols).map(|j| self.column(j)))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.cells.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.cells.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn transpose(&self) -> PartialArray {
        let mut out = PartialArray::empty(self.cols, self.rows).unwrap();
        for ((i, j), v) in self.filled() {
            out.cells[j * self.rows + i] = Some(v);
        }
        out
    }

    /// Renders the grid text format with `k` as the per-column count.
    pub fn to_grid_text(&self, k: usize) -> String {
        let width = self
            .filled()
            .map(|(_, v)| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = format!("#fmt 1\n{} {} {}\n", self.rows, self.cols, k);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| match self.get((i, j)) {
                    Some(v) => format!("{v:>width$}"),
                    None => format!("{:>width$}", "."),
                })
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for PartialArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PartialArray {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                match self.get((i, j)) {
                    Some(v) => write!(f, "{v:>5}")?,
                    None => write!(f, "{:>5}", ".")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// An array read from the grid text format together with its header `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridFile {
    pub array: PartialArray,
    pub k: usize,
}

impl FromStr for GridFile {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(no, l)| (no + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let mut header = None;
        for (no, line) in lines.by_ref() {
            if let Some(rest) = line.strip_prefix("#fmt") {
                let version = rest.trim();
                if version != "1" {
                    return Err(ParseError::UnsupportedVersion(version.to_string()));
                }
                continue;
            }
            if line.starts_with('#') {
                continue;
            }
            header = Some((no, line));
            break;
        }
        let (no, header) = header.ok_or(ParseError::MissingHeader)?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| ParseError::BadHeader { line: no })?;
        let [m, n, k] = dims[..] else {
            return Err(ParseError::BadHeader { line: no });
        };

        let mut grid = Vec::with_capacity(m);
        for (no, line) in lines.filter(|(_, l)| !l.starts_with('#')) {
            let row: Vec<Option<i64>> = line
                .split_whitespace()
                .map(|tok| match tok {
                    "." => Ok(None),
                    _ => match tok.parse::<i64>() {
                        Ok(0) => Err(ParseError::ZeroEntry { line: no }),
                        Ok(v) => Ok(Some(v)),
                        Err(_) => Err(ParseError::BadToken {
                            line: no,
                            token: tok.to_string(),
                        }),
                    },
                })
                .collect::<Result<_, _>>()?;
            if row.len() != n {
                return Err(ParseError::RowLength {
                    line: no,
                    expected: n,
                    found: row.len(),
                });
            }
            grid.push(row);
        }
        if grid.len() != m {
            return Err(ParseError::RowCount {
                expected: m,
                found: grid.len(),
            });
        }
        let array = PartialArray::from_rows(grid).map_err(ParseError::Array)?;
        Ok(GridFile { array, k })
    }
}
