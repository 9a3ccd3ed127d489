use std::collections::HashSet;

use proptest::prelude::*;

use heffter::biembed::{composition_for, diagonal_profile};
use heffter::constructions::standard_form;
use heffter::decomp::{
    certify_base_cycles, certify_orthogonal, decompositions_from_array, delta_cycle, develop,
    line_to_cycle, BaseCycleSet, GraphKind, ModCycle,
};
use heffter::search::{naive_orthogonality, NAIVE_LIMIT};
use heffter::verify::{is_simple_ordering, residue};
use heffter::{build, verify, BuildOutcome, BuildSpec, PartialArray};

/// `(n, k)` pairs with a closed-form construction and small moduli.
fn buildable() -> impl Strategy<Value = (usize, usize)> {
    (6usize..=10, 6usize..=22).prop_filter_map("no construction", |(k, n)| {
        matches!(build(BuildSpec::new(n, k)), Ok(BuildOutcome::Built(_))).then_some((n, k))
    })
}

fn built(n: usize, k: usize) -> PartialArray {
    build(BuildSpec::new(n, k)).unwrap().built().unwrap().array
}

/// An `n x n` array filled on `k` consecutive cyclic diagonals starting at `start`.
fn diagonal_fill(n: usize, k: usize, start: usize, values: &[i64]) -> PartialArray {
    let mut rows = vec![vec![None; n]; n];
    let mut it = values.iter();
    for (i, row) in rows.iter_mut().enumerate() {
        for t in 0..k {
            row[(i + start + t) % n] = Some(*it.next().unwrap());
        }
    }
    PartialArray::from_rows(rows).unwrap()
}

fn diagonal_case() -> impl Strategy<Value = (usize, usize, usize, Vec<i64>)> {
    prop_oneof![Just(3usize), Just(5), Just(9)]
        .prop_flat_map(|k| {
            let ns: Vec<usize> = (k..=30).filter(|n| num_gcd(*n, k - 1) == 1).collect();
            (Just(k), proptest::sample::select(ns))
        })
        .prop_flat_map(|(k, n)| {
            let values = Just((1..=(n * k) as i64).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_flat_map(|v| {
                    let len = v.len();
                    (Just(v), proptest::collection::vec(any::<bool>(), len))
                })
                .prop_map(|(v, signs)| {
                    v.into_iter()
                        .zip(signs)
                        .map(|(x, s)| if s { -x } else { x })
                        .collect::<Vec<_>>()
                });
            (Just(n), Just(k), 0..n, values)
        })
}

fn num_gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

/// A random cycle on distinct residues modulo `v`.
fn cycle(v: u64, len: usize) -> impl Strategy<Value = ModCycle> {
    proptest::sample::subsequence((0..v).collect::<Vec<_>>(), len)
        .prop_shuffle()
        .prop_map(move |vs| {
            let vs: Vec<i64> = vs.into_iter().map(|x| x as i64).collect();
            ModCycle::new(&vs, v).unwrap()
        })
}

fn cycle_set(v: u64) -> impl Strategy<Value = BaseCycleSet> {
    proptest::collection::vec(cycle(v, 3), 1..4)
        .prop_map(move |cs| BaseCycleSet::new(v, GraphKind::Complete, cs).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn line_and_transpose_moves_keep_classification(
        (n, k) in buildable(),
        a in 0usize..6, b in 0usize..6, c in 0usize..6, d in 0usize..6,
    ) {
        let h = built(n, k);
        let base = verify(&h, k).classification;
        let mut moved = h.clone();
        moved.swap_rows(a % n, b % n);
        moved.swap_columns(c % n, d % n);
        // Line swaps reorder the crossing lines, so only the Heffter conditions survive.
        prop_assert!(verify(&moved, k).is_heffter());
        prop_assert_eq!(verify(&h.transpose(), k).classification, base);
    }

    #[test]
    fn simplicity_is_rotation_invariant((n, k) in buildable(), line in 0usize..22, shift in 0usize..10) {
        let h = built(n, k);
        let values = h.row(line % n).values;
        let mut rotated = values.clone();
        rotated.rotate_left(shift % values.len());
        for v in [2 * (n * k) as u64 + 1, 2 * (n * k) as u64 + 2] {
            prop_assert_eq!(is_simple_ordering(&values, v), is_simple_ordering(&rotated, v));
        }
    }

    #[test]
    fn cycle_differences_telescope_to_entries((n, k) in buildable(), line in 0usize..22) {
        let h = built(n, k);
        let v = 2 * (n * k) as u64 + 1;
        for view in [h.row(line % n), h.column(line % n)] {
            let c = line_to_cycle(&view, v).unwrap();
            let got = delta_cycle(&c);
            let mut want = std::collections::BTreeMap::new();
            for &x in &view.values {
                *want.entry(residue(x, v)).or_insert(0usize) += 1;
                *want.entry(residue(-x, v)).or_insert(0usize) += 1;
            }
            prop_assert_eq!(got.counts, want);
        }
    }

    #[test]
    fn standard_form_is_idempotent((n, k) in buildable(), shift in 0usize..22) {
        let h = built(n, k);
        let mut rolled = h.clone();
        // A cyclic row relabelling keeps the array diagonal when it was.
        for _ in 0..shift % n {
            for i in 0..n - 1 {
                rolled.swap_rows(i, i + 1);
            }
        }
        if diagonal_profile(&rolled).is_some() {
            let once = standard_form(&rolled).unwrap();
            prop_assert_eq!(standard_form(&once).unwrap(), once.clone());
            prop_assert_eq!(diagonal_profile(&once).unwrap().r, 1);
        }
    }

    #[test]
    fn developed_edges_are_conserved((n, k) in buildable(), cocktail in any::<bool>()) {
        let h = built(n, k);
        let kind = if cocktail { GraphKind::CocktailParty } else { GraphKind::Complete };
        let (rows, cols) = decompositions_from_array(&h, k, kind).unwrap();
        for set in [&rows, &cols] {
            prop_assert!(certify_base_cycles(set));
            let v = set.modulus;
            let edges: HashSet<_> = set
                .cycles
                .iter()
                .flat_map(|c| (0..v).flat_map(move |g| develop(c, g).edges()))
                .collect();
            prop_assert_eq!(edges.len() as u64, kind.edge_count(v));
            prop_assert_eq!(set.cycles.len() as u64 * v * k as u64, kind.edge_count(v));
        }
    }

    #[test]
    fn biembk_orderings_compose_to_one_cycle((n, k, start, values) in diagonal_case()) {
        let h = diagonal_fill(n, k, start, &values);
        let (_, comp) = composition_for(&h, k).unwrap();
        prop_assert!(comp.is_single_cycle);
        prop_assert_eq!(comp.cycle_lengths, vec![n * k]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn orthogonality_is_symmetric((a, b) in (7u64..60).prop_flat_map(|v| (cycle_set(v), cycle_set(v)))) {
        prop_assert_eq!(certify_orthogonal(&a, &b), certify_orthogonal(&b, &a));
    }

    #[test]
    fn naive_oracle_agrees((a, b) in (7u64..80).prop_flat_map(|v| (cycle_set(v), cycle_set(v)))) {
        prop_assert_eq!(
            naive_orthogonality(&a, &b, NAIVE_LIMIT).unwrap(),
            certify_orthogonal(&a, &b)
        );
        prop_assert_eq!(
            naive_orthogonality(&b, &a, NAIVE_LIMIT).unwrap(),
            certify_orthogonal(&b, &a)
        );
    }
}
