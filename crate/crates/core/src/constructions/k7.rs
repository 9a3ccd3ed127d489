//! `SH*(n;7)` for `n = 4a >= 16` and `n = 4a + 1 >= 9`.

use super::out_of_range;
use super::rows::{gap, row, upto, Rows};
use crate::array::PartialArray;
use crate::error::ConstructionError;

pub fn build_k7(n: usize) -> Result<PartialArray, ConstructionError> {
    match n % 4 {
        0 if n >= 16 => k7_even(n),
        1 if n >= 9 => k7_odd(n),
        0 | 1 => Err(out_of_range(
            n,
            7,
            "no closed form below n = 16 (n = 0 mod 4) or n = 9",
        )),
        _ => Err(out_of_range(n, 7, "n must be 0 or 1 mod 4")),
    }
}

fn k7_even(n: usize) -> Result<PartialArray, ConstructionError> {
    let mut r = Rows::new(n);
    let a = n as i64 / 4;
    r.set(
        1,
        row![
            -5 * a,
            gap(2 * a - 8),
            3 - 24 * a,
            gap(1),
            -3 + 16 * a,
            gap(3),
            -1 - 2 * a,
            gap(2 * a - 6),
            -4 + 24 * a,
            gap(1),
            4 - 16 * a,
            gap(1),
            1 + 7 * a,
            gap(1)
        ],
    )?;
    r.set(
        2,
        row![
            gap(1),
            -2 - 6 * a,
            gap(2 * a - 8),
            5 - 28 * a,
            gap(1),
            -5 + 20 * a,
            gap(3),
            2,
            gap(2 * a - 6),
            -6 + 28 * a,
            gap(1),
            6 - 20 * a,
            gap(1),
            6 * a
        ],
    )?;
    r.set(
        3,
        row![
            2 + 7 * a,
            gap(1),
            1 - 5 * a,
            gap(2 * a - 8),
            7 - 24 * a,
            gap(1),
            -7 + 16 * a,
            gap(3),
            -3 - 2 * a,
            gap(2 * a - 6),
            -8 + 24 * a,
            gap(1),
            8 - 16 * a,
            gap(1)
        ],
    )?;
    r.set(
        4,
        row![
            gap(1),
            -1 + 6 * a,
            gap(1),
            -3 - 6 * a,
            gap(2 * a - 8),
            9 - 28 * a,
            gap(1),
            -9 + 20 * a,
            gap(3),
            4,
            gap(2 * a - 6),
            -10 + 28 * a,
            gap(1),
            10 - 20 * a
        ],
    )?;
    r.set(
        5,
        row![
            12 - 16 * a,
            gap(1),
            3 + 7 * a,
            gap(1),
            2 - 5 * a,
            gap(2 * a - 8),
            11 - 24 * a,
            gap(1),
            -11 + 16 * a,
            gap(3),
            -5 - 2 * a,
            gap(2 * a - 6),
            -12 + 24 * a,
            gap(1)
        ],
    )?;
    r.set(
        6,
        row![
            gap(1),
            14 - 20 * a,
            gap(1),
            -2 + 6 * a,
            gap(1),
            -4 - 6 * a,
            gap(2 * a - 8),
            13 - 28 * a,
            gap(1),
            -13 + 20 * a,
            gap(3),
            6,
            gap(2 * a - 6),
            -14 + 28 * a
        ],
    )?;
    for i in upto(a - 5) {
        r.set(
            7 + 2 * i,
            row![
                gap(2 * i),
                -16 + 24 * a - 4 * i,
                gap(1),
                16 - 16 * a + 4 * i,
                gap(1),
                4 + 7 * a + i,
                gap(1),
                3 - 5 * a + i,
                gap(2 * a - 8),
                15 - 24 * a + 4 * i,
                gap(1),
                -15 + 16 * a - 4 * i,
                gap(3),
                -7 - 2 * a - 2 * i,
                gap(2 * a - 6 - 2 * i)
            ],
        )?;
        r.set(
            8 + 2 * i,
            row![
                gap(1 + 2 * i),
                -18 + 28 * a - 4 * i,
                gap(1),
                18 - 20 * a + 4 * i,
                gap(1),
                -3 + 6 * a - i,
                gap(1),
                -5 - 6 * a - i,
                gap(2 * a - 8),
                17 - 28 * a + 4 * i,
                gap(1),
                -17 + 20 * a - 4 * i,
                gap(3),
                8 + 2 * i,
                gap(2 * a - 7 - 2 * i)
            ],
        )?;
    }
    r.set(
        2 * a - 1,
        row![
            gap(2 * a - 8),
            28 * a,
            gap(1),
            -20 * a,
            gap(1),
            8 * a,
            gap(1),
            -12 * a,
            gap(2 * a - 8),
            -1 - 20 * a,
            gap(1),
            1 + 12 * a,
            gap(3),
            4 * a,
            gap(2)
        ],
    )?;
    r.set(
        2 * a,
        row![
            gap(2 * a - 7),
            -2 + 24 * a,
            gap(1),
            2 - 16 * a,
            gap(1),
            1 + 5 * a,
            gap(1),
            -9 * a,
            gap(2 * a - 8),
            1 - 24 * a,
            gap(1),
            -1 + 16 * a,
            gap(3),
            -1 + 4 * a,
            gap(1)
        ],
    )?;
    r.set(
        2 * a + 1,
        row![
            gap(2 * a - 6),
            -4 + 28 * a,
            gap(1),
            4 - 20 * a,
            gap(1),
            10 * a,
            gap(1),
            -1 - 10 * a,
            gap(2 * a - 8),
            3 - 28 * a,
            gap(1),
            -3 + 20 * a,
            gap(3),
            1
        ],
    )?;
    r.set(
        2 * a + 2,
        row![
            -2 - 2 * a,
            gap(2 * a - 6),
            -6 + 24 * a,
            gap(1),
            6 - 16 * a,
            gap(1),
            1 + 11 * a,
            gap(1),
            1 - 9 * a,
            gap(2 * a - 8),
            5 - 24 * a,
            gap(1),
            -5 + 16 * a,
            gap(3)
        ],
    )?;
    r.set(
        2 * a + 3,
        row![
            gap(1),
            3,
            gap(2 * a - 6),
            -8 + 28 * a,
            gap(1),
            8 - 20 * a,
            gap(1),
            -1 + 10 * a,
            gap(1),
            -2 - 10 * a,
            gap(2 * a - 8),
            7 - 28 * a,
            gap(1),
            -7 + 20 * a,
            gap(2)
        ],
    )?;
    r.set(
        2 * a + 4,
        row![
            gap(2),
            -4 - 2 * a,
            gap(2 * a - 6),
            -10 + 24 * a,
            gap(1),
            10 - 16 * a,
            gap(1),
            2 + 11 * a,
            gap(1),
            2 - 9 * a,
            gap(2 * a - 8),
            9 - 24 * a,
            gap(1),
            -9 + 16 * a,
            gap(1)
        ],
    )?;
    r.set(
        2 * a + 5,
        row![
            gap(3),
            5,
            gap(2 * a - 6),
            -12 + 28 * a,
            gap(1),
            12 - 20 * a,
            gap(1),
            -2 + 10 * a,
            gap(1),
            -3 - 10 * a,
            gap(2 * a - 8),
            11 - 28 * a,
            gap(1),
            -11 + 20 * a
        ],
    )?;
    r.set(
        2 * a + 6,
        row![
            -13 + 16 * a,
            gap(3),
            -6 - 2 * a,
            gap(2 * a - 6),
            -14 + 24 * a,
            gap(1),
            14 - 16 * a,
            gap(1),
            3 + 11 * a,
            gap(1),
            3 - 9 * a,
            gap(2 * a - 8),
            13 - 24 * a,
            gap(1)
        ],
    )?;
    r.set(
        2 * a + 7,
        row![
            gap(1),
            -15 + 20 * a,
            gap(3),
            7,
            gap(2 * a - 6),
            -16 + 28 * a,
            gap(1),
            16 - 20 * a,
            gap(1),
            -3 + 10 * a,
            gap(1),
            -4 - 10 * a,
            gap(2 * a - 8),
            15 - 28 * a
        ],
    )?;
    for i in upto(a - 5) {
        r.set(
            2 * a + 8 + 2 * i,
            row![
                gap(2 * i),
                17 - 24 * a + 4 * i,
                gap(1),
                -17 + 16 * a - 4 * i,
                gap(3),
                -8 - 2 * a - 2 * i,
                gap(2 * a - 6),
                -18 + 24 * a - 4 * i,
                gap(1),
                18 - 16 * a + 4 * i,
                gap(1),
                4 + 11 * a + i,
                gap(1),
                4 - 9 * a + i,
                gap(2 * a - 8 - 2 * i)
            ],
        )?;
        r.set(
            2 * a + 9 + 2 * i,
            row![
                gap(1 + 2 * i),
                19 - 28 * a + 4 * i,
                gap(1),
                -19 + 20 * a - 4 * i,
                gap(3),
                9 + 2 * i,
                gap(2 * a - 6),
                -20 + 28 * a - 4 * i,
                gap(1),
                20 - 20 * a + 4 * i,
                gap(1),
                -4 + 10 * a - i,
                gap(1),
                -5 - 10 * a - i,
                gap(2 * a - 9 - 2 * i)
            ],
        )?;
    }
    r.set(
        4 * a,
        row![
            gap(2 * a - 8),
            1 - 28 * a,
            gap(1),
            -1 + 20 * a,
            gap(3),
            2 * a,
            gap(2 * a - 6),
            -2 + 28 * a,
            gap(1),
            2 - 20 * a,
            gap(1),
            1 + 4 * a,
            gap(1),
            -1 - 6 * a
        ],
    )?;
    r.finish()
}

fn k7_odd(n: usize) -> Result<PartialArray, ConstructionError> {
    let mut r = Rows::new(n);
    let a = (n as i64 - 1) / 4;
    r.set(
        1,
        row![
            -1 - 4 * a,
            -5 - 16 * a,
            -2 - 7 * a,
            5 + 12 * a,
            gap(4 * a - 6),
            6 + 28 * a,
            3 + 11 * a,
            -6 - 24 * a
        ],
    )?;
    r.set(
        2,
        row![
            -5 - 18 * a,
            -4 * a,
            -7 - 22 * a,
            -3 - 8 * a,
            6 + 14 * a,
            gap(4 * a - 6),
            6 + 26 * a,
            3 + 12 * a
        ],
    )?;
    r.set(
        3,
        row![
            3 + 9 * a,
            -6 - 20 * a,
            -1 + 2 * a,
            -7 - 20 * a,
            -2 - 11 * a,
            6 + 12 * a,
            gap(4 * a - 6),
            7 + 28 * a
        ],
    )?;
    for i in upto(a - 2) {
        r.set(
            4 + 4 * i,
            row![
                gap(4 * i),
                7 + 26 * a + 2 * i,
                2 + 8 * a - i,
                -6 - 18 * a - 2 * i,
                1 - 4 * a + 2 * i,
                -8 - 22 * a - 2 * i,
                -3 - 4 * a - i,
                7 + 14 * a + 2 * i,
                gap(4 * a - 6 - 4 * i)
            ],
        )?;
        r.set(
            5 + 4 * i,
            row![
                gap(1 + 4 * i),
                7 + 24 * a + 2 * i,
                3 + 5 * a + i,
                -6 - 16 * a - 2 * i,
                -2 + 2 * a - 2 * i,
                -8 - 20 * a - 2 * i,
                -1 - 7 * a + i,
                7 + 12 * a + 2 * i,
                gap(4 * a - 7 - 4 * i)
            ],
        )?;
        r.set(
            6 + 4 * i,
            row![
                gap(2 + 4 * i),
                8 + 26 * a + 2 * i,
                2 + 12 * a - i,
                -7 - 18 * a - 2 * i,
                2 - 4 * a + 2 * i,
                -9 - 22 * a - 2 * i,
                -4 - 8 * a - i,
                8 + 14 * a + 2 * i,
                gap(4 * a - 8 - 4 * i)
            ],
        )?;
    }
    for j in upto(a - 3) {
        r.set(
            7 + 4 * j,
            row![
                gap(3 + 4 * j),
                8 + 24 * a + 2 * j,
                4 + 9 * a + j,
                -7 - 16 * a - 2 * j,
                -3 + 2 * a - 2 * j,
                -9 - 20 * a - 2 * j,
                -1 - 11 * a + j,
                8 + 12 * a + 2 * j,
                gap(4 * a - 9 - 4 * j)
            ],
        )?;
    }
    r.set(
        4 * a - 1,
        row![
            4 + 14 * a,
            gap(4 * a - 6),
            4 + 26 * a,
            2 + 10 * a,
            -3 - 18 * a,
            1,
            -5 - 22 * a,
            -3 - 10 * a
        ],
    )?;
    r.set(
        4 * a,
        row![
            -2 - 5 * a,
            4 + 12 * a,
            gap(4 * a - 6),
            5 + 28 * a,
            3 + 7 * a,
            -4 - 20 * a,
            -1 - 2 * a,
            -5 - 20 * a
        ],
    )?;
    r.set(
        4 * a + 1,
        row![
            -6 - 22 * a,
            -2 - 4 * a,
            5 + 14 * a,
            gap(4 * a - 6),
            5 + 26 * a,
            2 + 6 * a,
            -4 - 18 * a,
            -2 * a
        ],
    )?;
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::verify::partial_sums;

    #[test]
    fn matches_printed_n9() {
        let h = build_k7(9).unwrap();
        assert_eq!(h.row(0).values, vec![-9, -37, -16, 29, 62, 25, -54]);
        assert_eq!(h, fixtures::sh_star_9_7());
    }

    #[test]
    fn even_row_partial_sums_follow_the_closed_forms() {
        for a in [4i64, 5, 7] {
            let h = build_k7(4 * a as usize).unwrap();
            let s = |t: i64| partial_sums(&h.row(t as usize - 1).values).unwrap().sums;
            assert_eq!(
                s(1),
                vec![
                    -5 * a,
                    3 - 29 * a,
                    -13 * a,
                    -1 - 15 * a,
                    -5 + 9 * a,
                    -1 - 7 * a,
                    0
                ]
            );
            assert_eq!(
                s(6),
                vec![
                    14 - 20 * a,
                    12 - 14 * a,
                    8 - 20 * a,
                    21 - 48 * a,
                    8 - 28 * a,
                    14 - 28 * a,
                    0
                ]
            );
            for i in 0..=a - 5 {
                assert_eq!(
                    s(7 + 2 * i),
                    vec![
                        -16 + 24 * a - 4 * i,
                        8 * a,
                        4 + 15 * a + i,
                        7 + 10 * a + 2 * i,
                        22 - 14 * a + 6 * i,
                        7 + 2 * a + 2 * i,
                        0
                    ]
                );
                assert_eq!(
                    s(2 * a + 9 + 2 * i),
                    vec![
                        19 - 28 * a + 4 * i,
                        -8 * a,
                        9 - 8 * a + 2 * i,
                        -11 + 20 * a - 2 * i,
                        9 + 2 * i,
                        5 + 10 * a + i,
                        0
                    ]
                );
            }
            assert_eq!(
                s(2 * a + 7),
                vec![
                    -15 + 20 * a,
                    -8 + 20 * a,
                    -24 + 48 * a,
                    -8 + 28 * a,
                    -11 + 38 * a,
                    -15 + 28 * a,
                    0
                ]
            );
            assert_eq!(
                s(4 * a),
                vec![1 - 28 * a, -8 * a, -6 * a, -2 + 22 * a, 2 * a, 1 + 6 * a, 0]
            );
        }
    }

    #[test]
    fn delegated_sizes_are_rejected() {
        for n in [8, 12, 5, 10, 11] {
            assert!(build_k7(n).is_err(), "n={n}");
        }
    }
}
