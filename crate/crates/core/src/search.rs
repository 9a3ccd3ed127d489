//! Brute-force oracles: backtracking for small Heffter arrays, simple
//! orderings of zero-sum sets, and orthogonality checked the slow way.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::array::PartialArray;
use crate::decomp::{develop, BaseCycleSet, Edge};
use crate::verify::{is_simple_ordering, residue, verify_shape, ZeroSumMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("budget limits must be positive")]
    EmptyBudget,
    #[error("shape mismatch: {m} x {h} filled cells != {n} x {k}")]
    Shape {
        m: usize,
        n: usize,
        h: usize,
        k: usize,
    },
    #[error("filled counts per line must be at least 3")]
    LineTooShort,
    #[error("0 is not allowed in the set")]
    ZeroElement,
    #[error("{a} and {b} are opposite modulo {v}")]
    OppositePair { a: i64, b: i64, v: u64 },
    #[error("modulus {v} exceeds the oracle limit {limit}")]
    TooLarge { v: u64, limit: u64 },
    #[error("base cycle sets use different moduli")]
    ModulusMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl SearchBudget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Result<Self, SearchError> {
        if node_limit == 0 || time_limit.is_zero() {
            return Err(SearchError::EmptyBudget);
        }
        Ok(SearchBudget {
            node_limit,
            time_limit,
        })
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: 200_000_000,
            time_limit: Duration::from_secs(120),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus<T> {
    Found(T),
    /// The whole (symmetry-reduced) space was exhausted.
    ProvenAbsent,
    /// A budget limit was hit first.
    Unknown,
}

impl<T> SearchStatus<T> {
    pub fn name(&self) -> &'static str {
        match self {
            SearchStatus::Found(_) => "Found",
            SearchStatus::ProvenAbsent => "ProvenAbsent",
            SearchStatus::Unknown => "Unknown",
        }
    }

    pub fn found(self) -> Option<T> {
        match self {
            SearchStatus::Found(t) => Some(t),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome<T> {
    pub status: SearchStatus<T>,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl<T> fmt::Display for SearchOutcome<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "status={} nodes={} elapsed_ms={}",
            self.status.name(),
            self.nodes,
            self.elapsed.as_millis()
        )
    }
}

struct Meter {
    nodes: u64,
    budget: SearchBudget,
    start: Instant,
    exhausted: bool,
}

impl Meter {
    fn new(budget: SearchBudget) -> Self {
        Meter {
            nodes: 0,
            budget,
            start: Instant::now(),
            exhausted: false,
        }
    }

    /// Counts a node; false once either limit is reached.
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.budget.node_limit
            || (self.nodes % 4096 == 0 && self.start.elapsed() > self.budget.time_limit)
        {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn finish<T>(self, found: Option<T>) -> SearchOutcome<T> {
        let status = match found {
            Some(t) => SearchStatus::Found(t),
            None if self.exhausted => SearchStatus::Unknown,
            None => SearchStatus::ProvenAbsent,
        };
        SearchOutcome {
            status,
            nodes: self.nodes,
            elapsed: self.start.elapsed(),
        }
    }
}

/// Searches for an `m x n` array with `h` filled cells per row and `k` per
/// column, entries `+-{1..mh}` with distinct absolute values, all lines
/// summing to zero.
///
/// Symmetry breaking: row patterns are taken in non-increasing order (rows
/// may be permuted freely) and the entry of absolute value 1 is positive
/// (the negated array is also Heffter). An impossible shape (`h > n` or
/// `k > m`) has an empty search space and is reported as proven absent.
pub fn find_heffter(
    m: usize,
    n: usize,
    h: usize,
    k: usize,
    budget: SearchBudget,
) -> Result<SearchOutcome<PartialArray>, SearchError> {
    if m * h != n * k {
        return Err(SearchError::Shape { m, n, h, k });
    }
    if h < 3 || k < 3 {
        return Err(SearchError::LineTooShort);
    }
    let mut meter = Meter::new(budget);
    if h > n || k > m {
        return Ok(meter.finish(None));
    }
    let mut search = HeffterSearch {
        m,
        n,
        h,
        k,
        total: m * h,
        pattern: Vec::with_capacity(m),
        col_counts: vec![0; n],
        row_masks: row_masks(n, h),
        meter: &mut meter,
    };
    let found = search.patterns(0);
    if let Some(array) = &found {
        assert!(
            verify_shape(array, h, k, ZeroSumMode::Exact).is_heffter(),
            "search returned an invalid witness"
        );
    }
    Ok(meter.finish(found))
}

/// All `n`-bit masks with `h` bits set, in decreasing numeric order.
fn row_masks(n: usize, h: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == h)
        .collect();
    masks.reverse();
    masks
}

struct HeffterSearch<'a> {
    m: usize,
    n: usize,
    h: usize,
    k: usize,
    total: usize,
    pattern: Vec<u32>,
    col_counts: Vec<usize>,
    row_masks: Vec<u32>,
    meter: &'a mut Meter,
}

impl HeffterSearch<'_> {
    fn patterns(&mut self, row: usize) -> Option<PartialArray> {
        if !self.meter.tick() {
            return None;
        }
        if row == self.m {
            return self.fill();
        }
        let prev = self.pattern.last().copied().unwrap_or(u32::MAX);
        let rows_left = self.m - row;
        for idx in 0..self.row_masks.len() {
            let mask = self.row_masks[idx];
            if mask > prev {
                continue;
            }
            let fits = (0..self.n).all(|j| {
                let c = self.col_counts[j] + usize::from(mask >> j & 1 == 1);
                // Every column must still be able to reach k.
                c <= self.k && self.k - c < rows_left
            });
            if !fits {
                continue;
            }
            self.apply(mask, true);
            let found = self.patterns(row + 1);
            self.apply(mask, false);
            if found.is_some() || self.meter.exhausted {
                return found;
            }
        }
        None
    }

    fn apply(&mut self, mask: u32, push: bool) {
        for j in 0..self.n {
            if mask >> j & 1 == 1 {
                if push {
                    self.col_counts[j] += 1;
                } else {
                    self.col_counts[j] -= 1;
                }
            }
        }
        if push {
            self.pattern.push(mask);
        } else {
            self.pattern.pop();
        }
    }

    fn fill(&mut self) -> Option<PartialArray> {
        let cells: Vec<(usize, usize)> = (0..self.m)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.pattern[i] >> j & 1 == 1)
            .collect();
        let mut row_left = vec![self.h; self.m];
        let mut col_left = vec![self.k; self.n];
        let mut state = FillState {
            cells,
            values: vec![0; self.m * self.n],
            row_sum: vec![0; self.m],
            col_sum: vec![0; self.n],
            used: vec![false; self.total + 1],
            n: self.n,
            total: self.total as i64,
        };
        let ok = state.dfs(0, &mut row_left, &mut col_left, self.meter);
        if !ok {
            return None;
        }
        let rows: Vec<Vec<Option<i64>>> = (0..self.m)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let x = state.values[i * self.n + j];
                        (x != 0).then_some(x)
                    })
                    .collect()
            })
            .collect();
        PartialArray::from_rows(rows).ok()
    }
}

struct FillState {
    cells: Vec<(usize, usize)>,
    values: Vec<i64>,
    row_sum: Vec<i64>,
    col_sum: Vec<i64>,
    used: Vec<bool>,
    n: usize,
    total: i64,
}

impl FillState {
    fn dfs(
        &mut self,
        idx: usize,
        row_left: &mut [usize],
        col_left: &mut [usize],
        meter: &mut Meter,
    ) -> bool {
        if idx == self.cells.len() {
            return true;
        }
        if !meter.tick() {
            return false;
        }
        let (i, j) = self.cells[idx];
        let row_last = row_left[i] == 1;
        let col_last = col_left[j] == 1;
        let candidates: Vec<i64> = if row_last || col_last {
            let forced = if row_last {
                -self.row_sum[i]
            } else {
                -self.col_sum[j]
            };
            if row_last && col_last && forced != -self.col_sum[j] {
                return false;
            }
            vec![forced]
        } else {
            (1..=self.total).flat_map(|a| [a, -a]).collect()
        };
        for x in candidates {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > self.total as usize || self.used[a] || x == -1 {
                continue;
            }
            self.place(i, j, x, true, row_left, col_left);
            let done = self.feasible(i, j, row_left, col_left)
                && self.dfs(idx + 1, row_left, col_left, meter);
            if done {
                return true;
            }
            self.place(i, j, x, false, row_left, col_left);
            if meter.exhausted {
                return false;
            }
        }
        false
    }

    fn place(
        &mut self,
        i: usize,
        j: usize,
        x: i64,
        on: bool,
        row_left: &mut [usize],
        col_left: &mut [usize],
    ) {
        let a = x.unsigned_abs() as usize;
        if on {
            self.values[i * self.n + j] = x;
            self.row_sum[i] += x;
            self.col_sum[j] += x;
            self.used[a] = true;
            row_left[i] -= 1;
            col_left[j] -= 1;
        } else {
            self.values[i * self.n + j] = 0;
            self.row_sum[i] -= x;
            self.col_sum[j] -= x;
            self.used[a] = false;
            row_left[i] += 1;
            col_left[j] += 1;
        }
    }

    /// The touched lines can still reach zero with the largest unused values.
    fn feasible(&self, i: usize, j: usize, row_left: &[usize], col_left: &[usize]) -> bool {
        let reach = |left: usize| -> i64 {
            (1..=self.total)
                .rev()
                .filter(|&a| !self.used[a as usize])
                .take(left)
                .sum()
        };
        let ok = |sum: i64, left: usize| {
            if left == 0 {
                sum == 0
            } else {
                sum.abs() <= reach(left)
            }
        };
        ok(self.row_sum[i], row_left[i]) && ok(self.col_sum[j], col_left[j])
    }
}

/// Hypotheses of the simple-ordering conjecture, as observed on the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderingHypotheses {
    pub zero_sum: bool,
    pub size: usize,
}

/// Searches for an ordering of `values` whose partial sums are distinct
/// modulo `v`.
///
/// `values` may not contain 0 or a pair `x, -x` modulo `v`; a nonzero total
/// is allowed and reported in the returned hypotheses.
pub fn find_simple_ordering(
    values: &[i64],
    v: u64,
    budget: SearchBudget,
) -> Result<(OrderingHypotheses, SearchOutcome<Vec<i64>>), SearchError> {
    let reduced: Vec<u64> = values.iter().map(|&x| residue(x, v)).collect();
    if reduced.contains(&0) {
        return Err(SearchError::ZeroElement);
    }
    for a in 0..values.len() {
        for b in a + 1..values.len() {
            if (reduced[a] + reduced[b]) % v == 0 {
                return Err(SearchError::OppositePair {
                    a: values[a],
                    b: values[b],
                    v,
                });
            }
        }
    }
    let hypotheses = OrderingHypotheses {
        zero_sum: reduced.iter().fold(0, |s, &x| (s + x) % v) == 0,
        size: values.len(),
    };
    let mut meter = Meter::new(budget);
    let mut search = OrderingSearch {
        values,
        reduced: &reduced,
        v,
        used: vec![false; values.len()],
        sums: HashSet::new(),
        order: Vec::with_capacity(values.len()),
    };
    let found = search.dfs(0, &mut meter).then(|| search.order.clone());
    if let Some(order) = &found {
        assert!(
            is_simple_ordering(order, v),
            "search returned a non-simple ordering"
        );
    }
    Ok((hypotheses, meter.finish(found)))
}

struct OrderingSearch<'a> {
    values: &'a [i64],
    reduced: &'a [u64],
    v: u64,
    used: Vec<bool>,
    sums: HashSet<u64>,
    order: Vec<i64>,
}

impl OrderingSearch<'_> {
    fn dfs(&mut self, sum: u64, meter: &mut Meter) -> bool {
        if self.order.len() == self.values.len() {
            return true;
        }
        if !meter.tick() {
            return false;
        }
        let mut tried = HashSet::new();
        for idx in 0..self.values.len() {
            if self.used[idx] || !tried.insert(self.reduced[idx]) {
                continue;
            }
            let next = (sum + self.reduced[idx]) % self.v;
            if self.sums.contains(&next) {
                continue;
            }
            self.used[idx] = true;
            self.sums.insert(next);
            self.order.push(self.values[idx]);
            if self.dfs(next, meter) {
                return true;
            }
            self.order.pop();
            self.sums.remove(&next);
            self.used[idx] = false;
            if meter.exhausted {
                return false;
            }
        }
        false
    }
}

/// Default modulus limit for [`naive_orthogonality`].
pub const NAIVE_LIMIT: u64 = 500;

/// Develops both base cycle sets over all of `Z_v` and checks that no two
/// cycles, one from each decomposition, share more than one edge.
pub fn naive_orthogonality(
    b: &BaseCycleSet,
    b2: &BaseCycleSet,
    limit: u64,
) -> Result<bool, SearchError> {
    if b.modulus != b2.modulus {
        return Err(SearchError::ModulusMismatch);
    }
    let v = b.modulus;
    if v > limit {
        return Err(SearchError::TooLarge { v, limit });
    }
    let second: Vec<Vec<Edge>> = b2
        .cycles
        .iter()
        .flat_map(|c| (0..v).map(move |g| develop(c, g).edges()))
        .collect();
    let mut owners: HashMap<Edge, Vec<usize>> = HashMap::new();
    for (id, edges) in second.iter().enumerate() {
        for &e in edges {
            owners.entry(e).or_default().push(id);
        }
    }
    for c in &b.cycles {
        for g in 0..v {
            let mut hits: HashMap<usize, usize> = HashMap::new();
            for e in develop(c, g).edges() {
                for &id in owners.get(&e).map_or(&[][..], Vec::as_slice) {
                    let count = hits.entry(id).or_insert(0);
                    *count += 1;
                    if *count > 1 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{decompositions_from_array, GraphKind, ModCycle};
    use crate::fixtures;
    use crate::verify::verify;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn budget_must_be_positive() {
        assert_eq!(
            SearchBudget::new(0, Duration::from_secs(1)),
            Err(SearchError::EmptyBudget)
        );
        assert!(SearchBudget::new(1, Duration::from_secs(1)).is_ok());
    }

    #[test]
    fn three_by_three_is_absent() {
        let out = find_heffter(3, 3, 3, 3, budget()).unwrap();
        assert_eq!(out.status, SearchStatus::ProvenAbsent);
    }

    #[test]
    fn four_by_four_with_three_found() {
        let out = find_heffter(4, 4, 3, 3, budget()).unwrap();
        let h = out.status.found().expect("witness");
        assert!(verify(&h, 3).is_heffter());
    }

    #[test]
    fn four_by_four_full_found() {
        let out = find_heffter(4, 4, 4, 4, budget()).unwrap();
        let h = out.status.found().expect("witness");
        assert!(verify(&h, 4).is_heffter());
    }

    #[test]
    fn tiny_budget_is_unknown() {
        let b = SearchBudget::new(5, Duration::from_secs(10)).unwrap();
        let out = find_heffter(4, 4, 4, 4, b).unwrap();
        assert_eq!(out.status, SearchStatus::Unknown);
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            find_heffter(3, 4, 3, 3, budget()),
            Err(SearchError::Shape { .. })
        ));
        assert_eq!(
            find_heffter(3, 3, 4, 4, budget()).unwrap().status,
            SearchStatus::ProvenAbsent
        );
    }

    #[test]
    fn rectangular_witness() {
        let out = find_heffter(3, 4, 4, 3, budget()).unwrap();
        let h = out.status.found().expect("witness");
        assert!(verify_shape(&h, 4, 3, ZeroSumMode::Exact).is_heffter());
    }

    #[test]
    fn natural_order_already_simple() {
        let (hyp, out) = find_simple_ordering(&[1, 2, 3, -6], 25, budget()).unwrap();
        assert!(hyp.zero_sum);
        assert_eq!(out.status, SearchStatus::Found(vec![1, 2, 3, -6]));
    }

    #[test]
    fn ordering_rejects_bad_sets() {
        assert!(matches!(
            find_simple_ordering(&[1, 3, -1], 25, budget()),
            Err(SearchError::OppositePair { .. })
        ));
        assert_eq!(
            find_simple_ordering(&[1, 25], 25, budget()),
            Err(SearchError::ZeroElement)
        );
    }

    #[test]
    fn orderings_for_every_line_of_the_non_simple_array() {
        let h = fixtures::h8_7();
        for line in h.lines() {
            let (_, out) = find_simple_ordering(&line.values, 113, budget()).unwrap();
            let order = out.status.found().expect("ordering");
            assert!(is_simple_ordering(&order, 113));
            let mut a = order.clone();
            let mut b = line.values.clone();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn naive_oracle_examples() {
        let c = ModCycle::new(&[0, 1, 3], 7).unwrap();
        let b = BaseCycleSet::new(7, GraphKind::Complete, vec![c]).unwrap();
        assert_eq!(naive_orthogonality(&b, &b, NAIVE_LIMIT), Ok(false));

        let (rows, cols) =
            decompositions_from_array(&fixtures::sh_star_10_8(), 8, GraphKind::CocktailParty)
                .unwrap();
        assert_eq!(naive_orthogonality(&rows, &cols, NAIVE_LIMIT), Ok(true));
        assert_eq!(
            naive_orthogonality(&rows, &cols, 100),
            Err(SearchError::TooLarge { v: 162, limit: 100 })
        );
    }
}
