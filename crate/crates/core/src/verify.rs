//! Exact checks for the Heffter conditions and for partial-sum simplicity.
//!
//! All sums are accumulated in checked `i64` arithmetic and only then reduced;
//! residues are canonical in `[0, v)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::array::{LineView, PartialArray};
use crate::error::Overflow;

/// Canonical representative of `x` modulo `v`, in `[0, v)`.
pub fn residue(x: i64, v: u64) -> u64 {
    assert!(v > 0, "modulus must be positive");
    (x as i128).rem_euclid(v as i128) as u64
}

/// Symmetric representative in `(-v/2, v/2]`, for display next to published tables.
pub fn symmetric_residue(x: i64, v: u64) -> i64 {
    let r = residue(x, v);
    if r > v / 2 {
        r as i64 - v as i64
    } else {
        r as i64
    }
}

/// Exact cumulative sums `s_1..s_k` of an ordering, with an optional modulus tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSumSeq {
    pub sums: Vec<i64>,
    pub modulus: Option<u64>,
}

impl PartialSumSeq {
    pub fn last(&self) -> Option<i64> {
        self.sums.last().copied()
    }

    /// The sums reduced modulo `v`.
    pub fn reduced(&self, v: u64) -> Vec<u64> {
        self.sums.iter().map(|&s| residue(s, v)).collect()
    }
}

pub fn partial_sums(values: &[i64]) -> Result<PartialSumSeq, Overflow> {
    let mut acc: i64 = 0;
    let mut sums = Vec::with_capacity(values.len());
    for &a in values {
        acc = acc.checked_add(a).ok_or(Overflow)?;
        sums.push(acc);
    }
    Ok(PartialSumSeq {
        sums,
        modulus: None,
    })
}

/// True iff the partial sums of `values` are pairwise distinct modulo `v`.
///
/// Overflowing input is reported as not simple.
pub fn is_simple_ordering(values: &[i64], v: u64) -> bool {
    let Ok(seq) = partial_sums(values) else {
        return false;
    };
    let mut reduced = seq.reduced(v);
    reduced.sort_unstable();
    reduced.windows(2).all(|w| w[0] != w[1])
}

/// Positions `(b, c)` (0-based, `b < c`) of the first colliding pair of partial sums.
pub fn first_collision(values: &[i64], v: u64) -> Option<(usize, usize)> {
    let reduced = partial_sums(values).ok()?.reduced(v);
    let mut seen: BTreeMap<u64, usize> = BTreeMap::new();
    for (c, r) in reduced.into_iter().enumerate() {
        if let Some(&b) = seen.get(&r) {
            return Some((b, c));
        }
        seen.insert(r, c);
    }
    None
}

/// Exact zero sum, or zero sum modulo `modulus` when given.
pub fn line_sum_zero(line: &LineView, modulus: Option<u64>) -> bool {
    values_sum_zero(&line.values, modulus)
}

fn values_sum_zero(values: &[i64], modulus: Option<u64>) -> bool {
    let total = values.iter().try_fold(0i64, |acc, &x| acc.checked_add(x));
    match (total, modulus) {
        (None, _) => false,
        (Some(t), None) => t == 0,
        (Some(t), Some(v)) => residue(t, v) == 0,
    }
}

/// Absolute values of the filled entries are exactly `{1, .., total}`, no repeats.
pub fn check_support_total(h: &PartialArray, total: usize) -> bool {
    support_defects(h, total).is_clean()
}

/// Square form: absolute values are exactly `{1, .., nk}`.
pub fn check_support(h: &PartialArray, k: usize) -> bool {
    check_support_total(h, h.cols() * k)
}

/// Every row holds `h_count` filled cells and every column `k`.
pub fn check_counts_shape(h: &PartialArray, h_count: usize, k: usize) -> bool {
    (0..h.rows()).all(|i| h.row(i).len() == h_count)
        && (0..h.cols()).all(|j| h.column(j).len() == k)
}

pub fn check_counts(h: &PartialArray, k: usize) -> bool {
    check_counts_shape(h, k, k)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SupportDefects {
    /// Values in `1..=total` that never occur in absolute value.
    pub missing: Vec<u64>,
    /// Absolute values occurring more than once.
    pub repeated: Vec<u64>,
    /// Absolute values outside `1..=total`.
    pub out_of_range: Vec<u64>,
}

impl SupportDefects {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.repeated.is_empty() && self.out_of_range.is_empty()
    }
}

pub fn support_defects(h: &PartialArray, total: usize) -> SupportDefects {
    let mut seen = vec![0u32; total + 1];
    let mut defects = SupportDefects::default();
    for (_, v) in h.filled() {
        let a = v.unsigned_abs();
        if a == 0 || a > total as u64 {
            defects.out_of_range.push(a);
        } else {
            seen[a as usize] += 1;
        }
    }
    for (a, &count) in seen.iter().enumerate().skip(1) {
        match count {
            0 => defects.missing.push(a as u64),
            1 => {}
            _ => defects.repeated.push(a as u64),
        }
    }
    defects.out_of_range.sort_unstable();
    defects
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Classification {
    NotHeffter,
    Heffter,
    GloballySimple,
    GloballySimpleStar,
}

impl Classification {
    pub fn name(self) -> &'static str {
        match self {
            Classification::NotHeffter => "NotHeffter",
            Classification::Heffter => "Heffter",
            Classification::GloballySimple => "GloballySimple",
            Classification::GloballySimpleStar => "GloballySimpleStar",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Classification {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "notheffter" | "none" => Ok(Classification::NotHeffter),
            "heffter" => Ok(Classification::Heffter),
            "globallysimple" | "simple" => Ok(Classification::GloballySimple),
            "globallysimplestar" | "star" => Ok(Classification::GloballySimpleStar),
            other => Err(format!("unknown classification {other:?}")),
        }
    }
}

/// How condition (d) is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZeroSumMode {
    /// Every line sums to exactly 0.
    #[default]
    Exact,
    /// Every line sums to 0 modulo `2N + 1`, `N` the number of filled cells.
    Modular,
}

/// Per-line simplicity flags under one modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineFlags {
    pub rows: Vec<bool>,
    pub cols: Vec<bool>,
}

impl LineFlags {
    pub fn all(&self) -> bool {
        self.rows.iter().chain(&self.cols).all(|&b| b)
    }

    pub fn failing_rows(&self) -> Vec<usize> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, &ok)| (!ok).then_some(i))
            .collect()
    }

    pub fn failing_cols(&self) -> Vec<usize> {
        self.cols
            .iter()
            .enumerate()
            .filter_map(|(i, &ok)| (!ok).then_some(i))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub rows: usize,
    pub cols: usize,
    /// Expected filled cells per row.
    pub h: usize,
    /// Expected filled cells per column.
    pub k: usize,
    pub support_ok: bool,
    pub support: SupportDefects,
    pub counts_ok: bool,
    pub row_counts: Vec<usize>,
    pub col_counts: Vec<usize>,
    pub zero_sums_ok: bool,
    pub zero_sum_modulus: Option<u64>,
    pub nonzero_rows: Vec<usize>,
    pub nonzero_cols: Vec<usize>,
    /// Natural-ordering simplicity per line, keyed by modulus (`2N+1` and `2N+2`).
    pub simple_mod: BTreeMap<u64, LineFlags>,
    pub classification: Classification,
}

impl VerificationReport {
    /// Number of filled cells a valid array of this shape carries.
    pub fn total(&self) -> usize {
        self.rows * self.h
    }

    pub fn complete_modulus(&self) -> u64 {
        2 * self.total() as u64 + 1
    }

    pub fn cocktail_modulus(&self) -> u64 {
        2 * self.total() as u64 + 2
    }

    pub fn is_heffter(&self) -> bool {
        self.classification >= Classification::Heffter
    }

    /// Text form; `structured` selects `key=value` lines.
    pub fn render(&self, structured: bool) -> String {
        let mut out = String::new();
        let list = |v: &[usize]| {
            v.iter()
                .map(|x| (x + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if structured {
            out.push_str("#fmt 1\n");
            out.push_str(&format!(
                "rows={}\ncols={}\nh={}\nk={}\n",
                self.rows, self.cols, self.h, self.k
            ));
            out.push_str(&format!("support_ok={}\n", self.support_ok));
            out.push_str(&format!("counts_ok={}\n", self.counts_ok));
            out.push_str(&format!("zero_sums_ok={}\n", self.zero_sums_ok));
            if let Some(v) = self.zero_sum_modulus {
                out.push_str(&format!("zero_sum_modulus={v}\n"));
            }
            for (v, flags) in &self.simple_mod {
                out.push_str(&format!("simple_mod_{v}={}\n", flags.all()));
                out.push_str(&format!(
                    "simple_mod_{v}_failing_rows={}\n",
                    list(&flags.failing_rows())
                ));
                out.push_str(&format!(
                    "simple_mod_{v}_failing_cols={}\n",
                    list(&flags.failing_cols())
                ));
            }
            out.push_str(&format!("classification={}\n", self.classification));
        } else {
            out.push_str(&format!(
                "array {}x{}, expecting {} per row and {} per column\n",
                self.rows, self.cols, self.h, self.k
            ));
            out.push_str(&format!("support: {}\n", pass(self.support_ok)));
            if !self.support.missing.is_empty() {
                out.push_str(&format!("  missing: {:?}\n", self.support.missing));
            }
            if !self.support.repeated.is_empty() {
                out.push_str(&format!("  repeated: {:?}\n", self.support.repeated));
            }
            if !self.support.out_of_range.is_empty() {
                out.push_str(&format!(
                    "  out of range: {:?}\n",
                    self.support.out_of_range
                ));
            }
            out.push_str(&format!("counts: {}\n", pass(self.counts_ok)));
            let label = match self.zero_sum_modulus {
                Some(v) => format!("zero sums mod {v}"),
                None => "zero sums".to_string(),
            };
            out.push_str(&format!("{label}: {}\n", pass(self.zero_sums_ok)));
            if !self.zero_sums_ok {
                out.push_str(&format!(
                    "  nonzero rows: [{}] cols: [{}]\n",
                    list(&self.nonzero_rows),
                    list(&self.nonzero_cols)
                ));
            }
            for (v, flags) in &self.simple_mod {
                out.push_str(&format!(
                    "natural orderings simple mod {v}: {}\n",
                    pass(flags.all())
                ));
                if !flags.all() {
                    out.push_str(&format!(
                        "  failing rows: [{}] cols: [{}]\n",
                        list(&flags.failing_rows()),
                        list(&flags.failing_cols())
                    ));
                }
            }
            out.push_str(&format!("classification: {}\n", self.classification));
        }
        out
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

/// Full report for a square array with `k` filled cells per line.
pub fn verify(h: &PartialArray, k: usize) -> VerificationReport {
    verify_shape(h, k, k, ZeroSumMode::Exact)
}

/// Full report for an `m x n` array expecting `h_count` per row and `k` per column.
pub fn verify_shape(
    h: &PartialArray,
    h_count: usize,
    k: usize,
    mode: ZeroSumMode,
) -> VerificationReport {
    let total = h.rows() * h_count;
    let shape_consistent = total == h.cols() * k;
    let support = support_defects(h, total);
    let support_ok = shape_consistent && support.is_clean();

    let rows: Vec<LineView> = (0..h.rows()).map(|i| h.row(i)).collect();
    let cols: Vec<LineView> = (0..h.cols()).map(|j| h.column(j)).collect();
    let row_counts: Vec<usize> = rows.iter().map(LineView::len).collect();
    let col_counts: Vec<usize> = cols.iter().map(LineView::len).collect();
    let counts_ok = row_counts.iter().all(|&c| c == h_count) && col_counts.iter().all(|&c| c == k);

    let v1 = 2 * total as u64 + 1;
    let v2 = 2 * total as u64 + 2;
    let zero_sum_modulus = match mode {
        ZeroSumMode::Exact => None,
        ZeroSumMode::Modular => Some(v1),
    };
    let nonzero = |lines: &[LineView]| -> Vec<usize> {
        lines
            .iter()
            .filter(|l| l.is_empty() || !line_sum_zero(l, zero_sum_modulus))
            .map(|l| l.index)
            .collect()
    };
    let nonzero_rows = nonzero(&rows);
    let nonzero_cols = nonzero(&cols);
    let zero_sums_ok = nonzero_rows.is_empty() && nonzero_cols.is_empty();

    let mut simple_mod = BTreeMap::new();
    for v in [v1, v2] {
        simple_mod.insert(
            v,
            LineFlags {
                rows: rows
                    .iter()
                    .map(|l| is_simple_ordering(&l.values, v))
                    .collect(),
                cols: cols
                    .iter()
                    .map(|l| is_simple_ordering(&l.values, v))
                    .collect(),
            },
        );
    }

    let classification = if !(support_ok && counts_ok && zero_sums_ok) {
        Classification::NotHeffter
    } else if !simple_mod[&v1].all() {
        Classification::Heffter
    } else if !simple_mod[&v2].all() {
        Classification::GloballySimple
    } else {
        Classification::GloballySimpleStar
    };

    VerificationReport {
        rows: h.rows(),
        cols: h.cols(),
        h: h_count,
        k,
        support_ok,
        support,
        counts_ok,
        row_counts,
        col_counts,
        zero_sums_ok,
        zero_sum_modulus,
        nonzero_rows,
        nonzero_cols,
        simple_mod,
        classification,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn residues_are_canonical() {
        assert_eq!(residue(-1, 7), 6);
        assert_eq!(residue(14, 7), 0);
        assert_eq!(
            residue(i64::MIN, 3),
            (i64::MIN as i128).rem_euclid(3) as u64
        );
        assert_eq!(symmetric_residue(160, 162), -2);
        assert_eq!(symmetric_residue(81, 162), 81);
    }

    #[test]
    fn partial_sums_match_published_cycles() {
        assert_eq!(
            partial_sums(&[8, 25, 16, -27, -29, 31, -24]).unwrap().sums,
            vec![8, 33, 49, 22, -7, 24, 0]
        );
        assert_eq!(
            partial_sums(&[77, 80, -78, -71, -70, -79, 69, 72])
                .unwrap()
                .sums,
            vec![77, 157, 79, 8, -62, -141, -72, 0]
        );
        assert_eq!(partial_sums(&[-42]).unwrap().sums, vec![-42]);
    }

    #[test]
    fn partial_sums_detect_overflow() {
        assert_eq!(partial_sums(&[i64::MAX, 1]), Err(Overflow));
        assert!(!is_simple_ordering(&[i64::MAX, 1], 5));
    }

    #[test]
    fn simple_orderings_of_the_h87_first_row() {
        // natural order of row 1: s_2 = s_6 = 24
        assert!(!is_simple_ordering(&[8, 16, 25, -27, -29, 31, -24], 113));
        assert_eq!(
            first_collision(&[8, 16, 25, -27, -29, 31, -24], 113),
            Some((1, 5))
        );
        assert!(is_simple_ordering(&[8, 25, 16, -27, -29, 31, -24], 113));
    }

    #[test]
    fn line_sums() {
        let a = PartialArray::from_dense(&[&[4, 35, -45, 46, 0, 20, -36, -24]]).unwrap();
        assert!(line_sum_zero(&a.row(0), None));
        let one = PartialArray::from_dense(&[&[1]]).unwrap();
        assert!(!line_sum_zero(&one.row(0), None));
        assert!(line_sum_zero(&one.row(0), Some(1)));
        let r1 = PartialArray::from_dense(&[&[5, -1, 2, -7, -9, 10, 0, 0]]).unwrap();
        assert!(line_sum_zero(&r1.row(0), None));
    }

    #[test]
    fn support_and_counts_on_h87() {
        let h = fixtures::h8_7();
        assert!(check_support(&h, 7));
        assert!(check_counts(&h, 7));

        let single = PartialArray::from_dense(&[&[5]]).unwrap();
        assert!(!check_support(&single, 1));

        let mut dup = h.clone();
        let pos = dup.filled().find(|&(_, v)| v == 8).unwrap().0;
        dup.set(pos, Some(-16)).unwrap();
        assert!(!check_support(&dup, 7));
        assert_eq!(support_defects(&dup, 56).repeated, vec![16]);
        assert_eq!(support_defects(&dup, 56).missing, vec![8]);

        let mut blank = h.clone();
        blank.set(pos, None).unwrap();
        assert!(!check_counts(&blank, 7));

        let full = PartialArray::from_dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).unwrap();
        assert!(check_counts(&full, 3));
    }

    #[test]
    fn classifications() {
        assert_eq!(
            verify(&fixtures::h8_7(), 7).classification,
            Classification::Heffter
        );
        assert!(verify(&fixtures::sh8_7(), 7).classification >= Classification::GloballySimple);
        assert_eq!(
            verify(&fixtures::sh_star_10_8(), 8).classification,
            Classification::GloballySimpleStar
        );
        let empty = PartialArray::empty(6, 6).unwrap();
        let report = verify(&empty, 6);
        assert_eq!(report.classification, Classification::NotHeffter);
        assert!(!report.support_ok);
        assert_eq!(report.support.missing.len(), 36);
    }

    #[test]
    fn report_lists_failing_lines() {
        let report = verify(&fixtures::h8_7(), 7);
        let flags = &report.simple_mod[&113];
        assert!(flags.failing_rows().contains(&0));
        assert!(report.render(false).contains("classification: Heffter"));
        assert!(report.render(true).contains("classification=Heffter"));
    }

    #[test]
    fn modular_zero_sums() {
        // rows sum to 0 mod 2N+1 but not exactly: a 1x3 toy with N=3, v=7
        let a = PartialArray::from_dense(&[&[1, 2, 4]]).unwrap();
        let exact = verify_shape(&a, 3, 1, ZeroSumMode::Exact);
        assert!(!exact.zero_sums_ok);
        let modular = verify_shape(&a, 3, 1, ZeroSumMode::Modular);
        assert_eq!(modular.zero_sum_modulus, Some(7));
        assert!(modular.nonzero_rows.is_empty());
    }
}
