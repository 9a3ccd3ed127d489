//! `SH*(n;8)` for even `n >= 10` and odd `n >= 21`.
//!
//! Odd sizes embed the even array of side `n - 9` in the top-left corner and
//! add nine rows over the last nine columns.

use super::out_of_range;
use super::rows::{gap, row, upto, Rows};
use crate::array::PartialArray;
use crate::error::ConstructionError;

pub fn build_k8(n: usize) -> Result<PartialArray, ConstructionError> {
    match n {
        _ if n % 2 == 0 && n >= 10 => k8_even(n),
        _ if n % 2 == 1 && n >= 21 => k8_odd(n),
        _ => Err(out_of_range(
            n,
            8,
            "no closed form below n = 10 (even) or n = 21 (odd)",
        )),
    }
}

fn k8_even(n: usize) -> Result<PartialArray, ConstructionError> {
    let mut r = Rows::new(n);
    let m = n as i64;
    let e = 8 * m;
    if n % 6 == 4 {
        r.set(
            1,
            row![
                -3 + e,
                e,
                2 - e,
                9 - e,
                10 - e,
                1 - e,
                gap(m - 8),
                -11 + e,
                -8 + e
            ],
        )?;
        for i in upto((m - 10) / 2) {
            let o = 16 * i;
            r.set(
                2 + 2 * i,
                row![
                    gap(2 + 2 * i),
                    -17 - o,
                    -20 - o,
                    -25 - o,
                    -28 - o,
                    26 + o,
                    19 + o,
                    18 + o,
                    27 + o,
                    gap(m - 10 - 2 * i)
                ],
            )?;
        }
        for j in upto((m - 8) / 2) {
            let o = 16 * j;
            r.set(
                3 + 2 * j,
                row![
                    gap(2 * j),
                    5 + o,
                    8 + o,
                    13 + o,
                    16 + o,
                    -14 - o,
                    -7 - o,
                    -6 - o,
                    -15 - o,
                    gap(m - 8 - 2 * j)
                ],
            )?;
        }
        r.set(
            m - 6,
            row![
                -46 + e,
                -37 + e,
                gap(m - 8),
                47 - e,
                44 - e,
                39 - e,
                36 - e,
                -38 + e,
                -45 + e
            ],
        )?;
        // Not printed with the others; recovered from its column entries and partial sums.
        r.set(
            m - 4,
            row![
                -22 + e,
                -29 + e,
                -30 + e,
                -21 + e,
                gap(m - 8),
                31 - e,
                28 - e,
                23 - e,
                20 - e
            ],
        )?;
        r.set(
            m - 3,
            row![
                42 - e,
                33 - e,
                gap(m - 8),
                -43 + e,
                -40 + e,
                -35 + e,
                -32 + e,
                34 - e,
                41 - e
            ],
        )?;
        r.set(
            m - 2,
            row![
                7 - e,
                4 - e,
                -6 + e,
                -13 + e,
                -14 + e,
                -5 + e,
                gap(m - 8),
                15 - e,
                12 - e
            ],
        )?;
        r.set(
            m - 1,
            row![
                18 - e,
                25 - e,
                26 - e,
                17 - e,
                gap(m - 8),
                -27 + e,
                -24 + e,
                -19 + e,
                -16 + e
            ],
        )?;
        r.set(m, row![-1, -4, -9, -12, 10, 3, 2, 11, gap(m - 8)])?;
    } else {
        r.set(
            1,
            row![
                -3 + e,
                e,
                1 - e,
                10 - e,
                9 - e,
                2 - e,
                gap(m - 8),
                -11 + e,
                -8 + e
            ],
        )?;
        for i in upto((m - 10) / 2) {
            let o = 16 * i;
            r.set(
                2 + 2 * i,
                row![
                    gap(2 + 2 * i),
                    -17 - o,
                    -20 - o,
                    -25 - o,
                    -28 - o,
                    27 + o,
                    18 + o,
                    19 + o,
                    26 + o,
                    gap(m - 10 - 2 * i)
                ],
            )?;
        }
        for j in upto((m - 8) / 2) {
            let o = 16 * j;
            r.set(
                3 + 2 * j,
                row![
                    gap(2 * j),
                    5 + o,
                    8 + o,
                    13 + o,
                    16 + o,
                    -15 - o,
                    -6 - o,
                    -7 - o,
                    -14 - o,
                    gap(m - 8 - 2 * j)
                ],
            )?;
        }
        r.set(
            m - 6,
            row![
                -45 + e,
                -38 + e,
                gap(m - 8),
                47 - e,
                44 - e,
                39 - e,
                36 - e,
                -37 + e,
                -46 + e
            ],
        )?;
        r.set(
            m - 4,
            row![
                -21 + e,
                -30 + e,
                -29 + e,
                -22 + e,
                gap(m - 8),
                31 - e,
                28 - e,
                23 - e,
                20 - e
            ],
        )?;
        r.set(
            m - 3,
            row![
                41 - e,
                34 - e,
                gap(m - 8),
                -43 + e,
                -40 + e,
                -35 + e,
                -32 + e,
                33 - e,
                42 - e
            ],
        )?;
        r.set(
            m - 2,
            row![
                7 - e,
                4 - e,
                -5 + e,
                -14 + e,
                -13 + e,
                -6 + e,
                gap(m - 8),
                15 - e,
                12 - e
            ],
        )?;
        r.set(
            m - 1,
            row![
                17 - e,
                26 - e,
                25 - e,
                18 - e,
                gap(m - 8),
                -27 + e,
                -24 + e,
                -19 + e,
                -16 + e
            ],
        )?;
        r.set(m, row![-1, -4, -9, -12, 11, 2, 3, 10, gap(m - 8)])?;
    }
    r.finish()
}

fn k8_odd(n: usize) -> Result<PartialArray, ConstructionError> {
    let a = n - 9;
    let inner = k8_even(a)?;
    let mut r = Rows::new(n);
    for t in 0..a {
        let mut cells: Vec<Option<i64>> = (0..a).map(|j| inner.get((t, j))).collect();
        cells.extend([None; 9]);
        r.set_cells(t as i64 + 1, cells)?;
    }
    let a = a as i64;
    let e = 8 * a;
    r.set(
        a + 1,
        row![
            gap(a),
            3 + e,
            -61 - e,
            -20 - e,
            -19 - e,
            68 + e,
            gap(1),
            44 + e,
            36 + e,
            -51 - e
        ],
    )?;
    r.set(
        a + 2,
        row![
            gap(a),
            30 + e,
            gap(1),
            38 + e,
            -46 - e,
            -23 - e,
            -13 - e,
            71 + e,
            -63 - e,
            6 + e
        ],
    )?;
    r.set(
        a + 3,
        row![
            gap(a + 1),
            43 + e,
            2 + e,
            -10 - e,
            -50 - e,
            67 + e,
            35 + e,
            -27 - e,
            -60 - e
        ],
    )?;
    r.set(
        a + 4,
        row![
            gap(a),
            -48 - e,
            -16 - e,
            65 + e,
            gap(1),
            41 + e,
            -58 - e,
            -26 - e,
            9 + e,
            33 + e
        ],
    )?;
    r.set(
        a + 5,
        row![
            gap(a),
            -12 - e,
            70 + e,
            29 + e,
            37 + e,
            5 + e,
            -22 - e,
            -53 - e,
            -54 - e,
            gap(1)
        ],
    )?;
    r.set(
        a + 6,
        row![
            gap(a),
            66 + e,
            34 + e,
            gap(1),
            1 + e,
            -59 - e,
            -49 - e,
            -17 - e,
            -18 - e,
            42 + e
        ],
    )?;
    r.set(
        a + 7,
        row![
            gap(a),
            -21 - e,
            -52 - e,
            -11 - e,
            28 + e,
            gap(1),
            4 + e,
            -62 - e,
            45 + e,
            69 + e
        ],
    )?;
    r.set(
        a + 8,
        row![
            gap(a),
            39 + e,
            7 + e,
            -56 - e,
            -55 - e,
            -14 - e,
            31 + e,
            gap(1),
            72 + e,
            -24 - e
        ],
    )?;
    r.set(
        a + 9,
        row![
            gap(a),
            -57 - e,
            -25 - e,
            -47 - e,
            64 + e,
            32 + e,
            40 + e,
            8 + e,
            gap(1),
            -15 - e
        ],
    )?;
    r.finish()
}
