//! Cyclically diagonal arrays, compatible row/column orderings and the
//! hypotheses that certify a biembedding of the induced decompositions.
//!
//! An ordering assigns each line a cyclic order of its filled cells. The
//! composition sends a cell to its successor in its row, then that cell to
//! its successor in its column; the orderings are compatible when this is a
//! single cycle through all filled cells.

use std::collections::HashMap;

use num_integer::Integer;
use thiserror::Error;

use crate::array::{Cell, PartialArray};
use crate::constructions::standard_form;
use crate::verify::{is_simple_ordering, verify, Classification};

/// Filled cells are exactly the diagonals `D_r..D_{r+k-1}`, where `(i, j)`
/// (1-based) lies on `D_s` iff `j - i = s - 1 (mod n)`. `r` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiagonalProfile {
    pub k: usize,
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiembedError {
    #[error("array is not square")]
    NotSquare,
    #[error("array is not cyclically diagonal")]
    NotDiagonal,
    #[error("array is not in standard form (filled diagonals start at r = {0})")]
    NotStandardForm(usize),
    #[error("{0}")]
    Precondition(String),
    #[error("the two orderings do not cover the same cells")]
    Coverage,
}

pub fn diagonal_profile(h: &PartialArray) -> Option<DiagonalProfile> {
    if !h.is_square() {
        return None;
    }
    let n = h.rows();
    let mut filled = vec![0usize; n];
    for ((i, j), _) in h.filled() {
        filled[(j + n - i) % n] += 1;
    }
    if filled.iter().any(|&c| c != 0 && c != n) {
        return None;
    }
    let k = filled.iter().filter(|&&c| c == n).count();
    if k == 0 {
        return None;
    }
    if k == n {
        return Some(DiagonalProfile { k, r: 1 });
    }
    let starts: Vec<usize> = (0..n)
        .filter(|&d| filled[d] == n && filled[(d + n - 1) % n] == 0)
        .collect();
    match starts[..] {
        [d] => Some(DiagonalProfile { k, r: d + 1 }),
        _ => None,
    }
}

/// One cyclic cell order per line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellOrdering {
    pub lines: Vec<Vec<Cell>>,
}

impl CellOrdering {
    /// All lines concatenated.
    pub fn sequence(&self) -> Vec<Cell> {
        self.lines.concat()
    }

    /// Entries along each line, in order.
    pub fn values(&self, h: &PartialArray) -> Vec<Vec<i64>> {
        self.lines
            .iter()
            .map(|l| l.iter().map(|&c| h.get(c).expect("filled cell")).collect())
            .collect()
    }

    fn successors(&self) -> Result<HashMap<Cell, Cell>, BiembedError> {
        let mut next = HashMap::new();
        for line in &self.lines {
            for (idx, &c) in line.iter().enumerate() {
                if next.insert(c, line[(idx + 1) % line.len()]).is_some() {
                    return Err(BiembedError::Coverage);
                }
            }
        }
        Ok(next)
    }
}

/// Rows left to right.
pub fn natural_rows(h: &PartialArray) -> CellOrdering {
    CellOrdering {
        lines: (0..h.rows()).map(|i| h.row(i).coordinates).collect(),
    }
}

/// Columns top to bottom, except the last `reversed` columns, bottom to top.
pub fn columns_with_reversed_tail(h: &PartialArray, reversed: usize) -> CellOrdering {
    let n = h.cols();
    CellOrdering {
        lines: (0..n)
            .map(|j| {
                let line = h.column(j);
                if j + reversed >= n {
                    line.reversed().coordinates
                } else {
                    line.coordinates
                }
            })
            .collect(),
    }
}

fn standard_profile(h: &PartialArray) -> Result<DiagonalProfile, BiembedError> {
    if !h.is_square() {
        return Err(BiembedError::NotSquare);
    }
    let p = diagonal_profile(h).ok_or(BiembedError::NotDiagonal)?;
    if p.r != 1 {
        return Err(BiembedError::NotStandardForm(p.r));
    }
    Ok(p)
}

/// Orderings for a standard-form, cyclically `k`-diagonal array with `k` odd
/// and `gcd(n, k-1) = 1`: natural rows, natural columns with the last reversed.
pub fn ordering_biembk(h: &PartialArray) -> Result<(CellOrdering, CellOrdering), BiembedError> {
    let DiagonalProfile { k, .. } = standard_profile(h)?;
    let n = h.rows();
    if k % 2 == 0 || n < k || n.gcd(&(k - 1)) != 1 {
        return Err(BiembedError::Precondition(format!(
            "needs k odd, n >= k and gcd(n, k-1) = 1 (n = {n}, k = {k})"
        )));
    }
    Ok((natural_rows(h), columns_with_reversed_tail(h, 1)))
}

/// Orderings for a standard-form, cyclically 7-diagonal array of odd side
/// `n >= 7`: natural rows, natural columns with the last four reversed.
pub fn ordering_biemb7(h: &PartialArray) -> Result<(CellOrdering, CellOrdering), BiembedError> {
    let DiagonalProfile { k, .. } = standard_profile(h)?;
    let n = h.rows();
    if k != 7 || n % 2 == 0 || n < 7 {
        return Err(BiembedError::Precondition(format!(
            "needs a 7-diagonal array of odd side n >= 7 (n = {n}, k = {k})"
        )));
    }
    Ok((natural_rows(h), columns_with_reversed_tail(h, 4)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionResult {
    /// Lengths of the cycles, in the order they are listed in `cycles`.
    pub cycle_lengths: Vec<usize>,
    pub is_single_cycle: bool,
    /// Each cycle starts at its first cell in row-major order.
    pub cycles: Vec<Vec<Cell>>,
}

/// Cycle structure of "row successor, then column successor".
pub fn compose(wr: &CellOrdering, wc: &CellOrdering) -> Result<CompositionResult, BiembedError> {
    let row_next = wr.successors()?;
    let col_next = wc.successors()?;
    if row_next.len() != col_next.len() || row_next.keys().any(|c| !col_next.contains_key(c)) {
        return Err(BiembedError::Coverage);
    }
    let mut cells: Vec<Cell> = row_next.keys().copied().collect();
    cells.sort_unstable();
    let mut seen = std::collections::HashSet::new();
    let mut cycles = Vec::new();
    for &start in &cells {
        if seen.contains(&start) {
            continue;
        }
        let mut cycle = vec![start];
        seen.insert(start);
        let mut x = col_next[&row_next[&start]];
        while x != start {
            seen.insert(x);
            cycle.push(x);
            x = col_next[&row_next[&x]];
        }
        cycles.push(cycle);
    }
    let cycle_lengths: Vec<usize> = cycles.iter().map(Vec::len).collect();
    Ok(CompositionResult {
        is_single_cycle: cycles.len() == 1,
        cycle_lengths,
        cycles,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingKind {
    /// Last column reversed.
    Biembk,
    /// Last four columns reversed.
    Biemb7,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulusReport {
    pub v: u64,
    pub rows_simple: bool,
    pub cols_simple: bool,
    /// All hypotheses hold at this modulus.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiembeddingReport {
    pub n: usize,
    pub k: usize,
    pub heffter: bool,
    pub diagonal: Option<DiagonalProfile>,
    pub ordering: Option<OrderingKind>,
    pub compatible: bool,
    pub moduli: Vec<ModulusReport>,
    /// Why no orderings were produced, if none were.
    pub declined: Option<String>,
}

impl BiembeddingReport {
    pub fn holds_for_all(&self) -> bool {
        !self.moduli.is_empty() && self.moduli.iter().all(|m| m.holds)
    }

    pub fn render(&self, structured: bool) -> String {
        let mut out = String::new();
        let diag = match self.diagonal {
            Some(p) => format!("k={} r={}", p.k, p.r),
            None => "no".to_string(),
        };
        let ordering = match self.ordering {
            Some(OrderingKind::Biembk) => "last-column-reversed",
            Some(OrderingKind::Biemb7) => "last-four-columns-reversed",
            None => "none",
        };
        if structured {
            out.push_str("#fmt 1\n");
            out.push_str(&format!(
                "n={}\nk={}\nheffter={}\n",
                self.n, self.k, self.heffter
            ));
            out.push_str(&format!("diagonal={}\n", self.diagonal.is_some()));
            if let Some(p) = self.diagonal {
                out.push_str(&format!("diagonal_r={}\n", p.r));
            }
            out.push_str(&format!(
                "ordering={ordering}\ncompatible={}\n",
                self.compatible
            ));
            for m in &self.moduli {
                out.push_str(&format!(
                    "mod_{v}_rows_simple={}\nmod_{v}_cols_simple={}\nmod_{v}_holds={}\n",
                    m.rows_simple,
                    m.cols_simple,
                    m.holds,
                    v = m.v
                ));
            }
            if let Some(reason) = &self.declined {
                out.push_str(&format!("declined={reason}\n"));
            }
        } else {
            out.push_str(&format!("array {}x{}, k={}\n", self.n, self.n, self.k));
            out.push_str(&format!("heffter: {}\n", yes(self.heffter)));
            out.push_str(&format!("cyclically diagonal: {diag}\n"));
            out.push_str(&format!("orderings: {ordering}\n"));
            out.push_str(&format!("compatible: {}\n", yes(self.compatible)));
            for m in &self.moduli {
                out.push_str(&format!(
                    "mod {}: rows simple {}, columns simple {}, biembedding hypotheses {}\n",
                    m.v,
                    yes(m.rows_simple),
                    yes(m.cols_simple),
                    if m.holds { "hold" } else { "FAIL" }
                ));
            }
            if let Some(reason) = &self.declined {
                out.push_str(&format!("declined: {reason}\n"));
            }
        }
        out
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// The compatible-ordering construction that applies to a standard-form `b`.
pub fn choose_orderings(
    b: &PartialArray,
    k: usize,
) -> Result<(OrderingKind, CellOrdering, CellOrdering), String> {
    let n = b.rows();
    let (kind, orderings) = if k % 2 == 1 && n >= k && n.gcd(&(k - 1)) == 1 {
        (OrderingKind::Biembk, ordering_biembk(b))
    } else if k == 7 && n % 2 == 1 && n >= 7 {
        (OrderingKind::Biemb7, ordering_biemb7(b))
    } else {
        return Err(format!(
            "no compatible-ordering construction for n = {n}, k = {k}"
        ));
    };
    let (wr, wc) = orderings.map_err(|e| e.to_string())?;
    Ok((kind, wr, wc))
}

/// Standard form of `h` and the composition of its chosen orderings.
pub fn composition_for(
    h: &PartialArray,
    k: usize,
) -> Result<(PartialArray, CompositionResult), String> {
    if diagonal_profile(h).is_none() {
        return Err("not cyclically diagonal".to_string());
    }
    let b = standard_form(h).map_err(|e| e.to_string())?;
    let (_, wr, wc) = choose_orderings(&b, k)?;
    let comp = compose(&wr, &wc).map_err(|e| e.to_string())?;
    Ok((b, comp))
}

/// Checks, at `2nk+1` and `2nk+2`, that `h` is a Heffter array with
/// compatible orderings whose lines are all simple.
pub fn certify_biembedding(h: &PartialArray, k: usize) -> BiembeddingReport {
    let n = h.rows();
    let mut report = BiembeddingReport {
        n,
        k,
        heffter: h.is_square() && verify(h, k).classification >= Classification::Heffter,
        diagonal: diagonal_profile(h),
        ordering: None,
        compatible: false,
        moduli: Vec::new(),
        declined: None,
    };
    if report.diagonal.is_none() {
        report.declined = Some("not cyclically diagonal".to_string());
        return report;
    }
    let b = standard_form(h).expect("diagonal arrays have a standard form");
    let (kind, wr, wc) = match choose_orderings(&b, k) {
        Ok(o) => o,
        Err(reason) => {
            report.declined = Some(reason);
            return report;
        }
    };
    report.ordering = Some(kind);
    report.compatible = compose(&wr, &wc).is_ok_and(|c| c.is_single_cycle);
    let row_values = wr.values(&b);
    let col_values = wc.values(&b);
    let total = (n * k) as u64;
    for v in [2 * total + 1, 2 * total + 2] {
        let rows_simple = row_values.iter().all(|l| is_simple_ordering(l, v));
        let cols_simple = col_values.iter().all(|l| is_simple_ordering(l, v));
        report.moduli.push(ModulusReport {
            v,
            rows_simple,
            cols_simple,
            holds: report.heffter && report.compatible && rows_simple && cols_simple,
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn diagonal_fill(n: usize, k: usize) -> PartialArray {
        let mut h = PartialArray::empty(n, n).unwrap();
        let mut v = 1;
        for i in 0..n {
            for d in 0..k {
                h.set((i, (i + d) % n), Some(v)).unwrap();
                v += 1;
            }
        }
        h
    }

    #[test]
    fn profiles() {
        assert_eq!(
            diagonal_profile(&fixtures::diagonal_9_5()),
            Some(DiagonalProfile { k: 5, r: 8 })
        );
        assert_eq!(
            diagonal_profile(&fixtures::diagonal_9_5_standard()),
            Some(DiagonalProfile { k: 5, r: 1 })
        );
        assert_eq!(diagonal_profile(&fixtures::h8_7()), None);
        assert_eq!(
            diagonal_profile(&diagonal_fill(4, 4)),
            Some(DiagonalProfile { k: 4, r: 1 })
        );
        assert_eq!(diagonal_profile(&PartialArray::empty(3, 3).unwrap()), None);
    }

    #[test]
    fn composition_reproduces_the_printed_cycle() {
        let b = fixtures::diagonal_9_5_standard();
        let (wr, wc) = ordering_biembk(&b).unwrap();
        let c = compose(&wr, &wc).unwrap();
        assert!(c.is_single_cycle);
        let values: Vec<i64> = c.cycles[0].iter().map(|&x| b.get(x).unwrap()).collect();
        let start = values.iter().position(|&v| v == 37).unwrap();
        let rotated: Vec<i64> = values[start..]
            .iter()
            .chain(&values[..start])
            .copied()
            .collect();
        assert_eq!(rotated, fixtures::DIAGONAL_9_5_COMPOSITION);
    }

    #[test]
    fn inverse_orderings_compose_to_the_identity() {
        let h = diagonal_fill(5, 3);
        let wr = natural_rows(&h);
        // Column successor = row predecessor: x -> row_next(x) -> back to x.
        let mut inv = wr.clone();
        for l in &mut inv.lines {
            l.reverse();
        }
        let c = compose(&wr, &inv).unwrap();
        assert!(c.cycle_lengths.iter().all(|&l| l == 1));
        assert_eq!(c.cycle_lengths.len(), 15);
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            ordering_biembk(&fixtures::diagonal_9_5()),
            Err(BiembedError::NotStandardForm(8))
        ));
        // gcd(9, 3 - 1) = 1 but 7 - 1 = 6 shares 3 with 9.
        assert!(ordering_biembk(&diagonal_fill(9, 7)).is_err());
        assert!(ordering_biemb7(&diagonal_fill(8, 7)).is_err());
        assert!(ordering_biemb7(&diagonal_fill(9, 7)).is_ok());
        let wr = natural_rows(&diagonal_fill(4, 3));
        let wc = natural_rows(&diagonal_fill(5, 3));
        assert_eq!(compose(&wr, &wc), Err(BiembedError::Coverage));
    }

    #[test]
    fn fully_filled_odd_square() {
        let h = diagonal_fill(3, 3);
        let (wr, wc) = ordering_biembk(&h).unwrap();
        assert_eq!(compose(&wr, &wc).unwrap().cycle_lengths, vec![9]);
    }

    #[test]
    fn biemb7_single_cycle_for_odd_sides() {
        for n in (7..=31).step_by(2) {
            let (wr, wc) = ordering_biemb7(&diagonal_fill(n, 7)).unwrap();
            assert_eq!(
                compose(&wr, &wc).unwrap().cycle_lengths,
                vec![7 * n],
                "n={n}"
            );
        }
    }

    #[test]
    fn certifier_declines_non_diagonal_arrays() {
        let r = certify_biembedding(&fixtures::h8_7(), 7);
        assert!(r.heffter);
        assert!(r.diagonal.is_none());
        assert!(r.declined.is_some());
        assert!(!r.holds_for_all());
    }

    #[test]
    fn certifier_on_the_nine_by_seven() {
        let r = certify_biembedding(&fixtures::sh_star_9_7(), 7);
        assert_eq!(r.ordering, Some(OrderingKind::Biemb7));
        assert!(r.compatible);
        assert!(r.holds_for_all(), "{}", r.render(false));
        assert_eq!(
            r.moduli.iter().map(|m| m.v).collect::<Vec<_>>(),
            vec![127, 128]
        );
    }
}
