//! Base cycles from Heffter array lines, the difference method over `Z_v`,
//! and orthogonality of cyclic cycle decompositions.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::array::{LineView, PartialArray};
use crate::error::ParseError;
use crate::verify::{partial_sums, residue, verify, Classification};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("modulus must be at least 3, got {0}")]
    BadModulus(u64),
    #[error("vertex {vertex} repeats modulo {modulus}")]
    RepeatedVertex { vertex: u64, modulus: u64 },
    #[error("partial sums collide modulo {modulus} (positions {first} and {second})")]
    NotSimple {
        modulus: u64,
        first: usize,
        second: usize,
    },
    #[error("sequence sums to {residue} modulo {modulus}, not 0")]
    NonzeroSum { residue: u64, modulus: u64 },
    #[error("cycles use different moduli")]
    ModulusMismatch,
    #[error("array is {found}, {required} is required")]
    Insufficient {
        found: Classification,
        required: Classification,
    },
    #[error("integer overflow in partial sums")]
    Overflow,
}

/// A cycle `(c_1, ..., c_k)` on distinct residues modulo `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModCycle {
    vertices: Vec<u64>,
    modulus: u64,
}

impl ModCycle {
    /// Reduces `vertices` modulo `v`; they must be pairwise distinct there.
    pub fn new(vertices: &[i64], modulus: u64) -> Result<Self, DecompError> {
        if modulus < 3 {
            return Err(DecompError::BadModulus(modulus));
        }
        if vertices.len() < 3 {
            return Err(DecompError::TooShort(vertices.len()));
        }
        let reduced: Vec<u64> = vertices.iter().map(|&x| residue(x, modulus)).collect();
        let mut seen = HashSet::new();
        for &x in &reduced {
            if !seen.insert(x) {
                return Err(DecompError::RepeatedVertex { vertex: x, modulus });
            }
        }
        Ok(ModCycle {
            vertices: reduced,
            modulus,
        })
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let k = self.vertices.len();
        (0..k)
            .map(|h| Edge::new(self.vertices[h], self.vertices[(h + 1) % k]))
            .collect()
    }

    /// Least rotation/reflection, for display and comparison only.
    pub fn canonical(&self) -> Vec<u64> {
        let k = self.vertices.len();
        let mut rev = self.vertices.clone();
        rev.reverse();
        (0..k)
            .flat_map(|s| {
                let fwd: Vec<u64> = (0..k).map(|i| self.vertices[(s + i) % k]).collect();
                let bwd: Vec<u64> = (0..k).map(|i| rev[(s + i) % k]).collect();
                [fwd, bwd]
            })
            .min()
            .expect("nonempty cycle")
    }
}

impl fmt::Display for ModCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// An unordered edge, stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(pub u64, pub u64);

impl Edge {
    pub fn new(x: u64, y: u64) -> Self {
        assert_ne!(x, y, "an edge needs distinct endpoints");
        Edge(x.min(y), x.max(y))
    }
}

/// A multiset of nonzero residues modulo `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffList {
    pub modulus: u64,
    pub counts: BTreeMap<u64, usize>,
}

impl DiffList {
    pub fn empty(modulus: u64) -> Self {
        DiffList {
            modulus,
            counts: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, x: u64) {
        *self.counts.entry(x).or_insert(0) += 1;
    }

    pub fn extend(&mut self, other: &DiffList) {
        for (&x, &c) in &other.counts {
            *self.counts.entry(x).or_insert(0) += c;
        }
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let v = self.modulus;
        self.counts
            .iter()
            .all(|(&x, &c)| self.counts.get(&((v - x) % v)) == Some(&c))
    }
}

/// `{+-(c_{h+1} - c_h)}` over the cyclic edges of `c`.
pub fn delta_cycle(c: &ModCycle) -> DiffList {
    let v = c.modulus;
    let mut d = DiffList::empty(v);
    let k = c.vertices.len();
    for h in 0..k {
        let diff = (c.vertices[(h + 1) % k] + v - c.vertices[h]) % v;
        d.add(diff);
        d.add((v - diff) % v);
    }
    d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// `K_v`.
    Complete,
    /// `K_v - I` for even `v`, `I` the matching `{x, x + v/2}`.
    CocktailParty,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Complete => "complete",
            GraphKind::CocktailParty => "cocktail",
        }
    }

    /// Differences each must occur exactly once in a set of base cycles.
    pub fn required(self, v: u64) -> Vec<u64> {
        match self {
            GraphKind::Complete => (1..v).collect(),
            GraphKind::CocktailParty => (1..v).filter(|&x| 2 * x != v).collect(),
        }
    }

    pub fn edge_count(self, v: u64) -> u64 {
        match self {
            GraphKind::Complete => v * (v - 1) / 2,
            GraphKind::CocktailParty => v * (v - 2) / 2,
        }
    }
}

impl FromStr for GraphKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "complete" => Ok(GraphKind::Complete),
            "cocktail" => Ok(GraphKind::CocktailParty),
            other => Err(format!("unknown graph kind {other:?}")),
        }
    }
}

/// Orbit representatives of a cyclic decomposition under `x -> x + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseCycleSet {
    pub modulus: u64,
    pub kind: GraphKind,
    pub cycles: Vec<ModCycle>,
}

impl BaseCycleSet {
    pub fn new(modulus: u64, kind: GraphKind, cycles: Vec<ModCycle>) -> Result<Self, DecompError> {
        if cycles.iter().any(|c| c.modulus != modulus) {
            return Err(DecompError::ModulusMismatch);
        }
        Ok(BaseCycleSet {
            modulus,
            kind,
            cycles,
        })
    }

    /// Text form: `#fmt 1`, a `v k count kind` header, then one cycle per line.
    pub fn to_text(&self) -> String {
        let k = self.cycles.first().map_or(0, ModCycle::len);
        let mut out = format!(
            "#fmt 1\n{} {} {} {}\n",
            self.modulus,
            k,
            self.cycles.len(),
            self.kind.name()
        );
        for c in &self.cycles {
            let parts: Vec<String> = c.vertices.iter().map(u64::to_string).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }
}

impl FromStr for BaseCycleSet {
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
                if rest.trim() != "1" {
                    return Err(ParseError::UnsupportedVersion(rest.trim().to_string()));
                }
                continue;
            }
            if !line.starts_with('#') {
                header = Some((no, line));
                break;
            }
        }
        let (no, header) = header.ok_or(ParseError::MissingHeader)?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let bad = || ParseError::BadHeader { line: no };
        let [v, k, count, kind] = fields[..] else {
            return Err(bad());
        };
        let v: u64 = v.parse().map_err(|_| bad())?;
        let k: usize = k.parse().map_err(|_| bad())?;
        let count: usize = count.parse().map_err(|_| bad())?;
        let kind: GraphKind = kind.parse().map_err(|_| bad())?;
        let mut cycles = Vec::with_capacity(count);
        for (no, line) in lines.filter(|(_, l)| !l.starts_with('#')) {
            let vertices: Vec<i64> = line
                .split_whitespace()
                .map(|t| {
                    t.parse().map_err(|_| ParseError::BadToken {
                        line: no,
                        token: t.to_string(),
                    })
                })
                .collect::<Result<_, _>>()?;
            if vertices.len() != k {
                return Err(ParseError::RowLength {
                    line: no,
                    expected: k,
                    found: vertices.len(),
                });
            }
            let cycle = ModCycle::new(&vertices, v).map_err(|e| ParseError::Malformed {
                line: no,
                reason: e.to_string(),
            })?;
            cycles.push(cycle);
        }
        if cycles.len() != count {
            return Err(ParseError::RowCount {
                expected: count,
                found: cycles.len(),
            });
        }
        Ok(BaseCycleSet {
            modulus: v,
            kind,
            cycles,
        })
    }
}

/// The cycle whose vertices are the partial sums of `values` modulo `v`.
pub fn sequence_to_cycle(values: &[i64], v: u64) -> Result<ModCycle, DecompError> {
    if v < 3 {
        return Err(DecompError::BadModulus(v));
    }
    let sums = partial_sums(values).map_err(|_| DecompError::Overflow)?;
    let reduced = sums.reduced(v);
    if let Some(&last) = reduced.last() {
        if last != 0 {
            return Err(DecompError::NonzeroSum {
                residue: last,
                modulus: v,
            });
        }
    }
    let mut first_at = HashMap::new();
    for (idx, &s) in reduced.iter().enumerate() {
        if let Some(&first) = first_at.get(&s) {
            return Err(DecompError::NotSimple {
                modulus: v,
                first,
                second: idx,
            });
        }
        first_at.insert(s, idx);
    }
    ModCycle::new(&sums.sums, v)
}

/// The cycle of partial sums of a line's natural ordering.
pub fn line_to_cycle(line: &LineView, v: u64) -> Result<ModCycle, DecompError> {
    sequence_to_cycle(&line.values, v)
}

/// How the combined difference list of a set of cycles departs from the target.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DifferenceCheck {
    pub missing: Vec<u64>,
    /// Required differences seen more than once, with their count.
    pub repeated: Vec<(u64, usize)>,
    /// Differences outside the required set (e.g. `v/2` for a cocktail party graph).
    pub forbidden: Vec<u64>,
}

impl DifferenceCheck {
    pub fn is_ok(&self) -> bool {
        self.missing.is_empty() && self.repeated.is_empty() && self.forbidden.is_empty()
    }
}

pub fn difference_check(b: &BaseCycleSet) -> DifferenceCheck {
    let mut all = DiffList::empty(b.modulus);
    for c in &b.cycles {
        all.extend(&delta_cycle(c));
    }
    let required = b.kind.required(b.modulus);
    let required_set: HashSet<u64> = required.iter().copied().collect();
    let mut check = DifferenceCheck::default();
    for &d in &required {
        match all.counts.get(&d).copied().unwrap_or(0) {
            0 => check.missing.push(d),
            1 => {}
            c => check.repeated.push((d, c)),
        }
    }
    check.forbidden = all
        .counts
        .keys()
        .filter(|d| !required_set.contains(d))
        .copied()
        .collect();
    check
}

/// True iff the differences of `b` cover the required set exactly once.
pub fn certify_base_cycles(b: &BaseCycleSet) -> bool {
    difference_check(b).is_ok()
}

/// `c + g`.
pub fn develop(c: &ModCycle, g: u64) -> ModCycle {
    let v = c.modulus;
    ModCycle {
        vertices: c.vertices.iter().map(|&x| (x + g % v) % v).collect(),
        modulus: v,
    }
}

/// A pair of base cycles and a shift at which they share more than one edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrthogonalityWitness {
    pub first: usize,
    pub second: usize,
    pub shift: u64,
    pub shared: usize,
}

/// First `(C, C', g)` with `|E(C) & E(C' + g)| > 1`, if any.
///
/// Counting is reduced to shifts of the second cycle: the overlap of `C + i`
/// and `C' + j` depends only on `j - i`.
pub fn orthogonality_witness(b: &BaseCycleSet, b2: &BaseCycleSet) -> Option<OrthogonalityWitness> {
    assert_eq!(
        b.modulus, b2.modulus,
        "base cycle sets must share a modulus"
    );
    let v = b.modulus;
    for (si, c2) in b2.cycles.iter().enumerate() {
        // Directed edges of C' keyed by their difference.
        let mut by_diff: HashMap<u64, Vec<u64>> = HashMap::new();
        let k2 = c2.vertices.len();
        for h in 0..k2 {
            let (x, y) = (c2.vertices[h], c2.vertices[(h + 1) % k2]);
            by_diff.entry((y + v - x) % v).or_default().push(x);
            by_diff.entry((x + v - y) % v).or_default().push(y);
        }
        for (fi, c) in b.cycles.iter().enumerate() {
            let mut per_shift: HashMap<u64, usize> = HashMap::new();
            let k = c.vertices.len();
            for h in 0..k {
                let (x, y) = (c.vertices[h], c.vertices[(h + 1) % k]);
                if let Some(starts) = by_diff.get(&((y + v - x) % v)) {
                    for &u in starts {
                        *per_shift.entry((x + v - u) % v).or_insert(0) += 1;
                    }
                }
            }
            if let Some((&shift, &shared)) = per_shift
                .iter()
                .filter(|(_, &c)| c > 1)
                .min_by_key(|(&g, _)| g)
            {
                return Some(OrthogonalityWitness {
                    first: fi,
                    second: si,
                    shift,
                    shared,
                });
            }
        }
    }
    None
}

/// True iff every cycle generated by `b` meets every cycle generated by `b2`
/// in at most one edge.
pub fn certify_orthogonal(b: &BaseCycleSet, b2: &BaseCycleSet) -> bool {
    orthogonality_witness(b, b2).is_none()
}

/// Row-derived and column-derived base cycles of `h` at `2nk+1` (complete)
/// or `2nk+2` (cocktail party).
pub fn decompositions_from_array(
    h: &PartialArray,
    k: usize,
    kind: GraphKind,
) -> Result<(BaseCycleSet, BaseCycleSet), DecompError> {
    let found = verify(h, k).classification;
    let required = match kind {
        GraphKind::Complete => Classification::GloballySimple,
        GraphKind::CocktailParty => Classification::GloballySimpleStar,
    };
    if found < required {
        return Err(DecompError::Insufficient { found, required });
    }
    let total = (h.rows() * k) as u64;
    let v = match kind {
        GraphKind::Complete => 2 * total + 1,
        GraphKind::CocktailParty => 2 * total + 2,
    };
    let rows = (0..h.rows())
        .map(|i| line_to_cycle(&h.row(i), v))
        .collect::<Result<Vec<_>, _>>()?;
    let cols = (0..h.cols())
        .map(|j| line_to_cycle(&h.column(j), v))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((
        BaseCycleSet::new(v, kind, rows)?,
        BaseCycleSet::new(v, kind, cols)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn c(vs: &[i64], v: u64) -> ModCycle {
        ModCycle::new(vs, v).unwrap()
    }

    fn reduce(vs: &[i64], v: u64) -> Vec<u64> {
        vs.iter().map(|&x| residue(x, v)).collect()
    }

    #[test]
    fn cycle_invariants() {
        assert_eq!(ModCycle::new(&[0, 1], 7), Err(DecompError::TooShort(2)));
        assert!(matches!(
            ModCycle::new(&[0, 1, 8], 7),
            Err(DecompError::RepeatedVertex { vertex: 1, .. })
        ));
        assert_eq!(c(&[0, -1, 3], 7).vertices(), &[0, 6, 3]);
    }

    #[test]
    fn differences_of_a_small_cycle() {
        let d = delta_cycle(&c(&[0, 1, 3], 7));
        assert_eq!(
            d.counts.keys().copied().collect::<Vec<_>>(),
            vec![1, 2, 3, 4, 5, 6]
        );
        assert!(d.counts.values().all(|&n| n == 1));
        assert!(d.is_symmetric());
        let b = BaseCycleSet::new(7, GraphKind::Complete, vec![c(&[0, 1, 3], 7)]).unwrap();
        assert!(certify_base_cycles(&b));
        let b = BaseCycleSet::new(7, GraphKind::Complete, vec![c(&[0, 1, 2], 7)]).unwrap();
        let check = difference_check(&b);
        assert_eq!(check.missing, vec![3, 4]);
        assert_eq!(check.repeated, vec![(1, 2), (6, 2)]);
    }

    #[test]
    fn published_cycle_differences() {
        let d = delta_cycle(&c(&[8, 33, 49, 22, -7, 24, 0], 113));
        let mut expected: Vec<u64> = [25i64, 16, 27, 29, 31, 24, 8]
            .iter()
            .flat_map(|&x| [residue(x, 113), residue(-x, 113)])
            .collect();
        expected.sort_unstable();
        let got: Vec<u64> = d.counts.keys().copied().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn develop_shifts_every_vertex() {
        let base = c(&[0, 1, 3], 7);
        assert_eq!(develop(&base, 0), base);
        assert_eq!(develop(&base, 6).vertices(), &[6, 0, 2]);
        let all: HashSet<Edge> = (0..7).flat_map(|g| develop(&base, g).edges()).collect();
        assert_eq!(all.len(), 21);
    }

    #[test]
    fn line_cycles_of_the_ten_by_eight() {
        let h = fixtures::sh_star_10_8();
        let c1 = line_to_cycle(&h.row(0), 162).unwrap();
        assert_eq!(c1.vertices(), &[77, 157, 79, 8, 100, 21, 90, 0]);
        assert_eq!(
            line_to_cycle(&h.row(0), 161).unwrap().vertices(),
            &reduce(&[77, 157, 79, 8, -62, -141, -72, 0], 161)[..]
        );
        assert_eq!(
            line_to_cycle(&h.row(5), 161).unwrap().vertices(),
            &[58, 109, 159, 57, 8, 117, 60, 0]
        );
    }

    #[test]
    fn line_to_cycle_rejects_collisions() {
        let h = fixtures::h8_7();
        assert!(matches!(
            line_to_cycle(&h.row(0), 113),
            Err(DecompError::NotSimple { modulus: 113, .. })
        ));
        assert!(matches!(
            sequence_to_cycle(&[1, 2, 4], 113),
            Err(DecompError::NonzeroSum { residue: 7, .. })
        ));
    }

    #[test]
    fn self_comparison_is_not_orthogonal() {
        let b = BaseCycleSet::new(7, GraphKind::Complete, vec![c(&[0, 1, 3], 7)]).unwrap();
        let w = orthogonality_witness(&b, &b).unwrap();
        assert_eq!((w.shift, w.shared), (0, 3));
    }

    #[test]
    fn ten_by_eight_decompositions() {
        let h = fixtures::sh_star_10_8();
        for (kind, v) in [(GraphKind::CocktailParty, 162), (GraphKind::Complete, 161)] {
            let (rows, cols) = decompositions_from_array(&h, 8, kind).unwrap();
            assert_eq!(rows.modulus, v);
            assert!(certify_base_cycles(&rows) && certify_base_cycles(&cols));
            assert!(certify_orthogonal(&rows, &cols));
            assert!(certify_orthogonal(&cols, &rows));
        }
    }

    #[test]
    fn insufficient_classification() {
        assert!(matches!(
            decompositions_from_array(&fixtures::h8_7(), 7, GraphKind::Complete),
            Err(DecompError::Insufficient { .. })
        ));
    }

    #[test]
    fn text_round_trip() {
        let (rows, _) =
            decompositions_from_array(&fixtures::sh_star_10_8(), 8, GraphKind::CocktailParty)
                .unwrap();
        let text = rows.to_text();
        assert!(text.starts_with("#fmt 1\n162 8 10 cocktail\n"));
        let back: BaseCycleSet = text.parse().unwrap();
        assert_eq!(back, rows);
        assert!("7 3 2 complete\n0 1 3\n".parse::<BaseCycleSet>().is_err());
        assert!("7 3 1 complete\n0 1 1\n".parse::<BaseCycleSet>().is_err());
    }

    #[test]
    fn canonical_form() {
        assert_eq!(c(&[3, 1, 0], 7).canonical(), vec![0, 1, 3]);
        assert_eq!(c(&[1, 3, 0], 7).canonical(), vec![0, 1, 3]);
    }
}
