//! `SH*(n;10)` for even `n >= 12`.
//!
//! The base array is globally simple for every even `n >= 12` and satisfies
//! the `2nk+2` condition when `n = 0 mod 6`. For `n = 6a+4` two columns are
//! interchanged; for `n = 6a+2` two columns and then two rows are.

use super::rows::{gap, row, upto, Rows};
use super::{out_of_range, Swap};
use crate::array::PartialArray;
use crate::error::ConstructionError;

/// The base array, before any repair.
pub fn build_k10_base(n: usize) -> Result<PartialArray, ConstructionError> {
    if n < 12 || n % 2 != 0 {
        return Err(out_of_range(n, 10, "n must be even and at least 12"));
    }
    let mut r = Rows::new(n);
    let m = n as i64;
    let e = 10 * m;
    r.set(
        1,
        row![
            16 - e,
            e - 9,
            12 - e,
            6 - e,
            8 - e,
            1 - e,
            e - 4,
            gap(1),
            e,
            gap(m - 12),
            e - 17,
            gap(1),
            e - 13
        ],
    )?;
    for i in upto((m - 14) / 2) {
        let o = 20 * i;
        r.set(
            2 + 2 * i,
            row![
                gap(2 * i + 1),
                -21 - o,
                gap(1),
                -25 - o,
                22 + o,
                -29 - o,
                26 + o,
                30 + o,
                33 + o,
                37 + o,
                -35 - o,
                gap(1),
                -38 - o,
                gap(m - 13 - 2 * i)
            ],
        )?;
        r.set(
            5 + 2 * i,
            row![
                gap(2 * i + 1),
                23 + o,
                gap(1),
                27 + o,
                -24 - o,
                31 + o,
                -28 - o,
                -34 - o,
                -32 - o,
                -39 - o,
                36 + o,
                gap(1),
                40 + o,
                gap(m - 13 - 2 * i)
            ],
        )?;
    }
    r.set(
        3,
        row![
            gap(1),
            7,
            -4,
            11,
            -8,
            -14,
            -12,
            -19,
            16,
            gap(1),
            20,
            gap(m - 12),
            3
        ],
    )?;
    r.set(
        m - 10,
        row![
            82 - e,
            gap(m - 12),
            99 - e,
            gap(1),
            95 - e,
            -98 + e,
            91 - e,
            -94 + e,
            -90 + e,
            -87 + e,
            -83 + e,
            85 - e,
            gap(1)
        ],
    )?;
    r.set(
        m - 8,
        row![
            65 - e,
            gap(1),
            62 - e,
            gap(m - 12),
            79 - e,
            gap(1),
            75 - e,
            -78 + e,
            71 - e,
            -74 + e,
            -70 + e,
            -67 + e,
            -63 + e
        ],
    )?;
    r.set(
        m - 7,
        row![
            -80 + e,
            gap(m - 12),
            -97 + e,
            gap(1),
            -93 + e,
            96 - e,
            -89 + e,
            92 - e,
            86 - e,
            88 - e,
            81 - e,
            -84 + e,
            gap(1)
        ],
    )?;
    r.set(
        m - 6,
        row![
            -47 + e,
            -43 + e,
            45 - e,
            gap(1),
            42 - e,
            gap(m - 12),
            59 - e,
            gap(1),
            55 - e,
            -58 + e,
            51 - e,
            -54 + e,
            -50 + e
        ],
    )?;
    r.set(
        m - 5,
        row![
            -64 + e,
            gap(1),
            -60 + e,
            gap(m - 12),
            -77 + e,
            gap(1),
            -73 + e,
            76 - e,
            -69 + e,
            72 - e,
            66 - e,
            68 - e,
            61 - e
        ],
    )?;
    r.set(
        m - 4,
        row![
            -34 + e,
            -30 + e,
            -27 + e,
            -23 + e,
            25 - e,
            gap(1),
            22 - e,
            gap(m - 12),
            39 - e,
            gap(1),
            35 - e,
            -38 + e,
            31 - e
        ],
    )?;
    r.set(
        m - 3,
        row![
            48 - e,
            41 - e,
            -44 + e,
            gap(1),
            -40 + e,
            gap(m - 12),
            -57 + e,
            gap(1),
            -53 + e,
            56 - e,
            -49 + e,
            52 - e,
            46 - e
        ],
    )?;
    r.set(
        m - 2,
        row![
            -18 + e,
            11 - e,
            -14 + e,
            -10 + e,
            -7 + e,
            -3 + e,
            5 - e,
            gap(1),
            2 - e,
            gap(m - 12),
            19 - e,
            gap(1),
            15 - e
        ],
    )?;
    r.set(
        m - 1,
        row![
            32 - e,
            26 - e,
            28 - e,
            21 - e,
            -24 + e,
            gap(1),
            -20 + e,
            gap(m - 12),
            -37 + e,
            gap(1),
            -33 + e,
            36 - e,
            -29 + e
        ],
    )?;
    r.set(
        m,
        row![
            gap(1),
            -5,
            2,
            -9,
            6,
            10,
            13,
            17,
            -15,
            gap(1),
            -18,
            gap(m - 12),
            -1
        ],
    )?;
    r.finish()
}

/// Interchanges (1-based) that repair the `2nk+2` condition for this `n`,
/// or `None` when the needed lines do not exist.
pub fn k10_repair(n: usize) -> Option<Vec<Swap>> {
    match n % 6 {
        0 => Some(Vec::new()),
        4 => {
            let a = (n - 4) / 6;
            (4 * a + 11 <= n).then(|| vec![Swap::Columns(4 * a + 9, 4 * a + 11)])
        }
        _ => {
            let a = (n - 2) / 6;
            (4 * a + 9 <= n).then(|| {
                vec![
                    Swap::Columns(4 * a + 7, 4 * a + 9),
                    Swap::Rows(4 * a + 3, 4 * a + 4),
                ]
            })
        }
    }
}

/// Base array with the repair for `n` applied; `None` when no repair fits.
pub fn build_k10(n: usize) -> Result<Option<(PartialArray, Vec<Swap>)>, ConstructionError> {
    let mut h = build_k10_base(n)?;
    let Some(swaps) = k10_repair(n) else {
        return Ok(None);
    };
    for s in &swaps {
        s.apply(&mut h);
    }
    Ok(Some((h, swaps)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::verify::{verify, Classification};

    fn row_of(h: &PartialArray, t: usize) -> Vec<Option<i64>> {
        (0..h.cols()).map(|j| h.get((t - 1, j))).collect()
    }

    fn expand(segs: &[(usize, &[i64])], tail: usize) -> Vec<Option<i64>> {
        let mut out = Vec::new();
        for &(g, vals) in segs {
            out.extend(std::iter::repeat_n(None, g));
            out.extend(vals.iter().map(|&v| Some(v)));
        }
        out.extend(std::iter::repeat_n(None, tail));
        out
    }

    #[test]
    fn matches_printed_n12() {
        let h = build_k10_base(12).unwrap();
        assert_eq!(
            row_of(&h, 3),
            expand(
                &[(1, &[7, -4, 11, -8, -14, -12, -19, 16]), (1, &[20, 3])],
                0
            )
        );
        assert_eq!(h, fixtures::sh_star_12_10());
        assert_eq!(k10_repair(12), Some(vec![]));
    }

    #[test]
    fn base_is_simple_but_fails_the_star_condition_off_zero_mod_six() {
        for n in [50, 52] {
            let c = verify(&build_k10_base(n).unwrap(), 10).classification;
            assert_eq!(c, Classification::GloballySimple, "n={n}");
        }
    }

    #[test]
    fn column_repair_for_four_mod_six() {
        let (n, a) = (52usize, 8i64);
        let (h, swaps) = build_k10(n).unwrap().unwrap();
        assert_eq!(swaps, vec![Swap::Columns(41, 43)]);
        let f = 40 * a;
        let tail = |used: usize| n - used;
        let r = |t: i64| row_of(&h, t as usize);
        let expected_4a2 = expand(
            &[
                (4 * a as usize + 1, &[-21 - f]),
                (
                    1,
                    &[
                        -25 - f,
                        22 + f,
                        -29 - f,
                        26 + f,
                        30 + f,
                        -35 - f,
                        37 + f,
                        33 + f,
                    ],
                ),
                (1, &[-38 - f]),
            ],
            tail(4 * a as usize + 1 + 12),
        );
        assert_eq!(r(4 * a + 2), expected_4a2);
        let expected_4a8 = expand(
            &[
                (4 * a as usize + 7, &[-81 - f, 82 + f, -85 - f]),
                (1, &[-89 - f, 86 + f, 90 + f, 93 + f, 97 + f, -95 - f]),
                (1, &[-98 - f]),
            ],
            tail(4 * a as usize + 7 + 12),
        );
        assert_eq!(r(4 * a + 8), expected_4a8);
        assert_eq!(
            verify(&h, 10).classification,
            Classification::GloballySimpleStar
        );
    }

    #[test]
    fn column_and_row_repair_for_two_mod_six() {
        let (n, a) = (50usize, 8i64);
        let (h, swaps) = build_k10(n).unwrap().unwrap();
        assert_eq!(swaps, vec![Swap::Columns(39, 41), Swap::Rows(35, 36)]);
        let f = 40 * a;
        let au = a as usize;
        // Row 4a+3 of the result is R'_{4a+4} and vice versa.
        let r_4a4 = expand(
            &[
                (4 * au + 3, &[-41 - f]),
                (
                    1,
                    &[
                        -45 - f,
                        46 + f,
                        -49 - f,
                        42 + f,
                        50 + f,
                        53 + f,
                        57 + f,
                        -55 - f,
                    ],
                ),
                (1, &[-58 - f]),
            ],
            n - (4 * au + 3 + 12),
        );
        let r_4a3 = expand(
            &[
                (4 * au - 1, &[3 + f]),
                (
                    1,
                    &[
                        7 + f,
                        -4 - f,
                        11 + f,
                        -8 - f,
                        -14 - f,
                        16 + f,
                        -19 - f,
                        -12 - f,
                    ],
                ),
                (1, &[20 + f]),
            ],
            n - (4 * au - 1 + 12),
        );
        assert_eq!(row_of(&h, 4 * au + 3), r_4a4);
        assert_eq!(row_of(&h, 4 * au + 4), r_4a3);
        assert_eq!(
            verify(&h, 10).classification,
            Classification::GloballySimpleStar
        );
    }

    #[test]
    fn small_sizes_have_no_repair() {
        for n in [14, 16, 20, 22] {
            assert_eq!(k10_repair(n), None, "n={n}");
        }
        assert!(k10_repair(26).is_some());
        assert!(build_k10_base(10).is_err());
    }
}
