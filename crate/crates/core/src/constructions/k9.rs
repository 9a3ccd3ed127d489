//! `SH*(n;9)` for `n = 4a >= 12`, `n = 8a + 3 >= 19` and `n = 8a + 7 >= 15`.

use super::out_of_range;
use super::rows::{gap, row, upto, Rows};
use crate::array::PartialArray;
use crate::error::ConstructionError;

pub fn build_k9(n: usize) -> Result<PartialArray, ConstructionError> {
    match n {
        _ if n % 4 == 0 && n >= 12 => k9_even(n),
        _ if n % 8 == 3 && n >= 19 => k9_odd_3(n),
        _ if n % 8 == 7 && n >= 15 => k9_odd_7(n),
        _ => Err(out_of_range(
            n,
            9,
            "n must be 0 mod 4 with n >= 12, or 3 mod 4 with n >= 15",
        )),
    }
}

fn k9_even(n: usize) -> Result<PartialArray, ConstructionError> {
    let mut r = Rows::new(n);
    let a = n as i64 / 4;
    r.set(
        1,
        row![
            -2 + 12 * a,
            2 - 4 * a,
            -2 + 16 * a,
            -4 + 36 * a,
            2 - 36 * a,
            gap(2 * a - 5),
            -1 - 12 * a,
            3 - 12 * a,
            gap(2 * a - 4),
            5 - 36 * a,
            -3 + 36 * a
        ],
    )?;
    r.set(
        2,
        row![
            1 + 20 * a,
            1 - 16 * a,
            3 - 4 * a,
            -5 + 20 * a,
            36 * a,
            -2 - 20 * a,
            gap(2 * a - 5),
            -4 + 12 * a,
            5 - 12 * a,
            gap(2 * a - 4),
            1 - 36 * a
        ],
    )?;
    for i in upto(a - 2) {
        r.set(
            3 + 2 * i,
            row![
                gap(2 * i),
                -3 - 20 * a - 8 * i,
                5 + 20 * a + 8 * i,
                -2 - 12 * a - i,
                4 - 4 * a + 2 * i,
                -3 + 16 * a - i,
                4 + 20 * a + 8 * i,
                -6 - 20 * a - 8 * i,
                gap(2 * a - 5),
                -6 + 12 * a - 4 * i,
                7 - 12 * a + 4 * i,
                gap(2 * a - 4 - 2 * i)
            ],
        )?;
    }
    for j in upto(a - 3) {
        r.set(
            4 + 2 * j,
            row![
                gap(2 * j + 1),
                -7 - 20 * a - 8 * j,
                9 + 20 * a + 8 * j,
                -16 * a - j,
                5 - 4 * a + 2 * j,
                -6 + 20 * a - j,
                8 + 20 * a + 8 * j,
                -10 - 20 * a - 8 * j,
                gap(2 * a - 5),
                -8 + 12 * a - 4 * j,
                9 - 12 * a + 4 * j,
                gap(2 * a - 5 - 2 * j)
            ],
        )?;
        r.set(
            2 * a + 1 + 2 * j,
            row![
                gap(2 * j),
                -1 + 4 * a + 4 * j,
                -4 * a - 4 * j,
                gap(2 * a - 4),
                5 - 28 * a - 8 * j,
                -3 + 28 * a + 8 * j,
                2 - 15 * a + j,
                -2 + 2 * a - 2 * j,
                1 + 13 * a + j,
                -4 + 28 * a + 8 * j,
                2 - 28 * a - 8 * j,
                gap(2 * a - 5 - 2 * j)
            ],
        )?;
        r.set(
            2 * a + 2 + 2 * j,
            row![
                gap(1 + 2 * j),
                1 + 4 * a + 4 * j,
                -2 - 4 * a - 4 * j,
                gap(2 * a - 4),
                1 - 28 * a - 8 * j,
                1 + 28 * a + 8 * j,
                4 - 19 * a + j,
                -3 + 2 * a - 2 * j,
                17 * a + j,
                28 * a + 8 * j,
                -2 - 28 * a - 8 * j,
                gap(2 * a - 6 - 2 * j)
            ],
        )?;
    }
    r.set(
        2 * a,
        row![
            2 - 8 * a,
            gap(2 * a - 4),
            9 - 28 * a,
            -7 + 28 * a,
            2 - 17 * a,
            -3 + 20 * a,
            -1 + 17 * a,
            -8 + 28 * a,
            6 - 28 * a,
            gap(2 * a - 5),
            -12 * a
        ],
    )?;
    r.set(
        4 * a - 3,
        row![
            18 - 36 * a,
            gap(2 * a - 5),
            -9 + 8 * a,
            8 - 8 * a,
            gap(2 * a - 4),
            21 - 36 * a,
            -19 + 36 * a,
            -14 * a,
            2,
            -1 + 14 * a,
            -20 + 36 * a
        ],
    )?;
    r.set(
        4 * a - 2,
        row![
            -16 + 36 * a,
            14 - 36 * a,
            gap(2 * a - 5),
            -7 + 8 * a,
            6 - 8 * a,
            gap(2 * a - 4),
            17 - 36 * a,
            -15 + 36 * a,
            2 - 18 * a,
            1 - 2 * a,
            -2 + 20 * a
        ],
    )?;
    r.set(
        4 * a - 1,
        row![
            -8 * a,
            -12 + 36 * a,
            10 - 36 * a,
            gap(2 * a - 5),
            -5 + 8 * a,
            20 * a,
            gap(2 * a - 4),
            13 - 36 * a,
            -11 + 36 * a,
            1 - 12 * a,
            4 - 8 * a
        ],
    )?;
    r.set(
        4 * a,
        row![
            1,
            -4 + 20 * a,
            -8 + 36 * a,
            6 - 36 * a,
            gap(2 * a - 5),
            1 - 20 * a,
            3 - 8 * a,
            gap(2 * a - 4),
            9 - 36 * a,
            -7 + 36 * a,
            -1 + 8 * a
        ],
    )?;
    r.finish()
}

fn k9_odd_3(n: usize) -> Result<PartialArray, ConstructionError> {
    let mut r = Rows::new(n);
    let a = (n as i64 - 3) / 8;
    let g = 8 * a - 6;
    r.set(
        1,
        row![
            2 + 8 * a,
            23 + 64 * a,
            -9 - 24 * a,
            -24 - 64 * a,
            13 + 40 * a,
            gap(g),
            -14 - 40 * a,
            -17 - 48 * a,
            8 + 16 * a,
            18 + 48 * a
        ],
    )?;
    r.set(
        2,
        row![
            16 + 40 * a,
            -1 - 6 * a,
            27 + 72 * a,
            -7 - 20 * a,
            -22 - 56 * a,
            12 + 31 * a,
            gap(g),
            -12 - 25 * a,
            -21 - 56 * a,
            8 + 20 * a
        ],
    )?;
    r.set(
        3,
        row![
            4 + 8 * a,
            20 + 48 * a,
            4 * a,
            25 + 64 * a,
            -5 - 8 * a,
            -26 - 64 * a,
            13 + 26 * a,
            gap(g),
            -12 - 30 * a,
            -19 - 48 * a
        ],
    )?;
    r.set(
        4,
        row![
            -17 - 40 * a,
            6 + 12 * a,
            18 + 40 * a,
            -1 + 2 * a,
            23 + 56 * a,
            -7 - 12 * a,
            -24 - 56 * a,
            14 + 35 * a,
            gap(g),
            -12 - 37 * a
        ],
    )?;
    for i in upto(a - 1) {
        let o = 8 * i;
        r.set(
            5 + o,
            row![
                gap(o),
                -12 - 24 * a - i,
                -21 - 48 * a - o,
                8 + 24 * a - 4 * i,
                22 + 48 * a + o,
                -1 - 8 * a + 2 * i,
                27 + 64 * a + o,
                -7 - 24 * a + 4 * i,
                -28 - 64 * a - o,
                12 + 32 * a - i,
                gap(8 * a - 6 - o)
            ],
        )?;
        r.set(
            6 + o,
            row![
                gap(1 + o),
                -13 - 33 * a - i,
                -19 - 40 * a - o,
                6 + 20 * a - 4 * i,
                20 + 40 * a + o,
                -6 * a + 2 * i,
                25 + 56 * a + o,
                -5 - 20 * a + 4 * i,
                -26 - 56 * a - o,
                12 + 39 * a - i,
                gap(8 * a - 7 - o)
            ],
        )?;
        r.set(
            7 + o,
            row![
                gap(2 + o),
                -12 - 38 * a + i,
                -23 - 48 * a - o,
                6 + 8 * a + 4 * i,
                24 + 48 * a + o,
                -1 + 4 * a - 2 * i,
                29 + 64 * a + o,
                -7 - 8 * a - 4 * i,
                -30 - 64 * a - o,
                14 + 34 * a + i,
                gap(8 * a - 8 - o)
            ],
        )?;
    }
    for j in upto(a - 2) {
        let o = 8 * j;
        r.set(
            8 + o,
            row![
                gap(3 + o),
                -11 - 29 * a + j,
                -21 - 40 * a - o,
                8 + 12 * a + 4 * j,
                22 + 40 * a + o,
                -2 + 2 * a - 2 * j,
                27 + 56 * a + o,
                -9 - 12 * a - 4 * j,
                -28 - 56 * a - o,
                14 + 27 * a + j,
                gap(8 * a - 9 - o)
            ],
        )?;
        r.set(
            9 + o,
            row![
                gap(4 + o),
                -13 - 32 * a - j,
                -25 - 48 * a - o,
                6 + 24 * a - 4 * j,
                26 + 48 * a + o,
                -8 * a + 2 * j,
                31 + 64 * a + o,
                -5 - 24 * a + 4 * j,
                -32 - 64 * a - o,
                12 + 40 * a - j,
                gap(8 * a - 10 - o)
            ],
        )?;
        r.set(
            10 + o,
            row![
                gap(5 + o),
                -13 - 25 * a - j,
                -23 - 40 * a - o,
                4 + 20 * a - 4 * j,
                24 + 40 * a + o,
                1 - 6 * a + 2 * j,
                29 + 56 * a + o,
                -3 - 20 * a + 4 * j,
                -30 - 56 * a - o,
                11 + 31 * a - j,
                gap(8 * a - 11 - o)
            ],
        )?;
        r.set(
            11 + o,
            row![
                gap(6 + o),
                -11 - 30 * a + j,
                -27 - 48 * a - o,
                8 + 8 * a + 4 * j,
                28 + 48 * a + o,
                -2 + 4 * a - 2 * j,
                33 + 64 * a + o,
                -9 - 8 * a - 4 * j,
                -34 - 64 * a - o,
                14 + 26 * a + j,
                gap(8 * a - 12 - o)
            ],
        )?;
    }
    for h in upto(a - 3) {
        let o = 8 * h;
        r.set(
            12 + o,
            row![
                gap(7 + o),
                -11 - 37 * a + h,
                -25 - 40 * a - o,
                10 + 12 * a + 4 * h,
                26 + 40 * a + o,
                -3 + 2 * a - 2 * h,
                31 + 56 * a + o,
                -11 - 12 * a - 4 * h,
                -32 - 56 * a - o,
                15 + 35 * a + h,
                gap(8 * a - 13 - o)
            ],
        )?;
    }
    r.set(
        8 * a - 4,
        row![
            gap(8 * a - 9),
            -13 - 36 * a,
            -9 - 48 * a,
            2 + 16 * a,
            10 + 48 * a,
            -1 - 4 * a,
            15 + 64 * a,
            -3 - 16 * a,
            -16 - 64 * a,
            15 + 40 * a,
            gap(3)
        ],
    )?;
    r.set(
        8 * a,
        row![
            11 + 24 * a,
            gap(g),
            -10 - 24 * a,
            -13 - 48 * a,
            4 + 16 * a,
            14 + 48 * a,
            1,
            19 + 64 * a,
            -6 - 16 * a,
            -20 - 64 * a
        ],
    )?;
    r.set(
        8 * a + 1,
        row![
            -24 - 72 * a,
            13 + 39 * a,
            gap(g),
            -12 - 33 * a,
            -17 - 56 * a,
            10 + 20 * a,
            18 + 56 * a,
            -2 - 6 * a,
            23 + 72 * a,
            -9 - 20 * a
        ],
    )?;
    r.set(
        8 * a + 2,
        row![
            -5 - 16 * a,
            -22 - 64 * a,
            13 + 34 * a,
            gap(g),
            -12 - 26 * a,
            -15 - 48 * a,
            7 + 16 * a,
            16 + 48 * a,
            -3 - 8 * a,
            21 + 64 * a
        ],
    )?;
    r.set(
        8 * a + 3,
        row![
            25 + 72 * a,
            -5 - 12 * a,
            -26 - 72 * a,
            13 + 27 * a,
            gap(g),
            -12 - 29 * a,
            -19 - 56 * a,
            4 + 12 * a,
            20 + 56 * a,
            2 * a
        ],
    )?;
    r.finish()
}

fn k9_odd_7(n: usize) -> Result<PartialArray, ConstructionError> {
    let mut r = Rows::new(n);
    let a = (n as i64 - 7) / 8;
    let g = 8 * a - 2;
    r.set(
        1,
        row![
            6 + 8 * a,
            55 + 64 * a,
            -21 - 24 * a,
            -56 - 64 * a,
            33 + 40 * a,
            gap(g),
            -34 - 40 * a,
            -41 - 48 * a,
            16 + 16 * a,
            42 + 48 * a
        ],
    )?;
    r.set(
        2,
        row![
            36 + 40 * a,
            -4 - 6 * a,
            63 + 72 * a,
            -17 - 20 * a,
            -50 - 56 * a,
            32 + 39 * a,
            gap(g),
            -29 - 33 * a,
            -49 - 56 * a,
            18 + 20 * a
        ],
    )?;
    r.set(
        3,
        row![
            8 + 8 * a,
            44 + 48 * a,
            2 + 4 * a,
            57 + 64 * a,
            -9 - 8 * a,
            -58 - 64 * a,
            26 + 26 * a,
            gap(g),
            -27 - 30 * a,
            -43 - 48 * a
        ],
    )?;
    r.set(
        4,
        row![
            -37 - 40 * a,
            12 + 12 * a,
            38 + 40 * a,
            2 * a,
            51 + 56 * a,
            -13 - 12 * a,
            -52 - 56 * a,
            27 + 27 * a,
            gap(g),
            -26 - 29 * a
        ],
    )?;
    for i in upto(a - 1) {
        let o = 8 * i;
        r.set(
            5 + o,
            row![
                gap(o),
                -24 - 24 * a - i,
                -45 - 48 * a - o,
                20 + 24 * a - 4 * i,
                46 + 48 * a + o,
                -5 - 8 * a + 2 * i,
                59 + 64 * a + o,
                -19 - 24 * a + 4 * i,
                -60 - 64 * a - o,
                28 + 32 * a - i,
                gap(8 * a - 2 - o)
            ],
        )?;
        r.set(
            6 + o,
            row![
                gap(1 + o),
                -25 - 25 * a - i,
                -39 - 40 * a - o,
                16 + 20 * a - 4 * i,
                40 + 40 * a + o,
                -3 - 6 * a + 2 * i,
                53 + 56 * a + o,
                -15 - 20 * a + 4 * i,
                -54 - 56 * a - o,
                27 + 31 * a - i,
                gap(8 * a - 3 - o)
            ],
        )?;
        r.set(
            7 + o,
            row![
                gap(2 + o),
                -31 - 38 * a + i,
                -47 - 48 * a - o,
                10 + 8 * a + 4 * i,
                48 + 48 * a + o,
                1 + 4 * a - 2 * i,
                61 + 64 * a + o,
                -11 - 8 * a - 4 * i,
                -62 - 64 * a - o,
                31 + 34 * a + i,
                gap(8 * a - 4 - o)
            ],
        )?;
        r.set(
            9 + o,
            row![
                gap(4 + o),
                -29 - 32 * a - i,
                -49 - 48 * a - o,
                18 + 24 * a - 4 * i,
                50 + 48 * a + o,
                -4 - 8 * a + 2 * i,
                63 + 64 * a + o,
                -17 - 24 * a + 4 * i,
                -64 - 64 * a - o,
                32 + 40 * a - i,
                gap(8 * a - 6 - o)
            ],
        )?;
        r.set(
            10 + o,
            row![
                gap(5 + o),
                -30 - 33 * a - i,
                -43 - 40 * a - o,
                14 + 20 * a - 4 * i,
                44 + 40 * a + o,
                -2 - 6 * a + 2 * i,
                57 + 56 * a + o,
                -13 - 20 * a + 4 * i,
                -58 - 56 * a - o,
                31 + 39 * a - i,
                gap(8 * a - 7 - o)
            ],
        )?;
        r.set(
            11 + o,
            row![
                gap(6 + o),
                -26 - 30 * a + i,
                -51 - 48 * a - o,
                12 + 8 * a + 4 * i,
                52 + 48 * a + o,
                4 * a - 2 * i,
                65 + 64 * a + o,
                -13 - 8 * a - 4 * i,
                -66 - 64 * a - o,
                27 + 26 * a + i,
                gap(8 * a - 8 - o)
            ],
        )?;
    }
    for j in upto(a - 2) {
        let o = 8 * j;
        r.set(
            8 + o,
            row![
                gap(3 + o),
                -30 - 37 * a + j,
                -41 - 40 * a - o,
                14 + 12 * a + 4 * j,
                42 + 40 * a + o,
                -1 + 2 * a - 2 * j,
                55 + 56 * a + o,
                -15 - 12 * a - 4 * j,
                -56 - 56 * a - o,
                32 + 35 * a + j,
                gap(8 * a - 5 - o)
            ],
        )?;
        r.set(
            12 + o,
            row![
                gap(7 + o),
                -25 - 29 * a + j,
                -45 - 40 * a - o,
                16 + 12 * a + 4 * j,
                46 + 40 * a + o,
                -2 + 2 * a - 2 * j,
                59 + 56 * a + o,
                -17 - 12 * a - 4 * j,
                -60 - 56 * a - o,
                28 + 27 * a + j,
                gap(8 * a - 9 - o)
            ],
        )?;
    }
    r.set(
        8 * a,
        row![
            gap(8 * a - 5),
            -31 - 36 * a,
            -33 - 48 * a,
            10 + 16 * a,
            34 + 48 * a,
            -3 - 4 * a,
            47 + 64 * a,
            -11 - 16 * a,
            -48 - 64 * a,
            35 + 40 * a,
            gap(3)
        ],
    )?;
    r.set(
        8 * a + 4,
        row![
            23 + 24 * a,
            gap(g),
            -22 - 24 * a,
            -37 - 48 * a,
            12 + 16 * a,
            38 + 48 * a,
            1,
            51 + 64 * a,
            -14 - 16 * a,
            -52 - 64 * a
        ],
    )?;
    r.set(
        8 * a + 5,
        row![
            -60 - 72 * a,
            28 + 31 * a,
            gap(g),
            -24 - 25 * a,
            -45 - 56 * a,
            20 + 20 * a,
            46 + 56 * a,
            -5 - 6 * a,
            59 + 72 * a,
            -19 - 20 * a
        ],
    )?;
    r.set(
        8 * a + 6,
        row![
            -13 - 16 * a,
            -54 - 64 * a,
            30 + 34 * a,
            gap(g),
            -25 - 26 * a,
            -39 - 48 * a,
            15 + 16 * a,
            40 + 48 * a,
            -7 - 8 * a,
            53 + 64 * a
        ],
    )?;
    r.set(
        8 * a + 7,
        row![
            61 + 72 * a,
            -11 - 12 * a,
            -62 - 72 * a,
            31 + 35 * a,
            gap(g),
            -31 - 37 * a,
            -47 - 56 * a,
            10 + 12 * a,
            48 + 56 * a,
            1 + 2 * a
        ],
    )?;
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn matches_printed_n12() {
        let h = build_k9(12).unwrap();
        assert_eq!(
            h.row(11).values,
            vec![1, 56, 100, -102, -59, -21, -99, 101, 23]
        );
        assert_eq!(h, fixtures::sh_star_12_9());
    }

    #[test]
    fn smallest_odd_cases_build() {
        // 15 = 8 + 7 (a = 1): the `j` families are empty.
        assert!(build_k9(15).is_ok());
        // 19 = 16 + 3 (a = 2): the `h` family is empty.
        assert!(build_k9(19).is_ok());
    }

    #[test]
    fn delegated_sizes_are_rejected() {
        for n in [9, 11, 13, 14] {
            assert!(build_k9(n).is_err(), "n={n}");
        }
    }
}
