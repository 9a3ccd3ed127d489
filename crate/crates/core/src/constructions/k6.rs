//! `SH*(n;6)` for even `n >= 6`.

use super::out_of_range;
use super::rows::{gap, row, upto, Rows};
use crate::array::PartialArray;
use crate::error::ConstructionError;

pub fn build_k6(n: usize) -> Result<PartialArray, ConstructionError> {
    if n < 6 || n % 2 != 0 {
        return Err(out_of_range(n, 6, "n must be even and at least 6"));
    }
    let mut r = Rows::new(n);
    let n = n as i64;
    r.set(1, row![5, -1, 2, -7, -9, 10, gap(n - 6)])?;
    r.set(2, row![-4, 3, -6, 8, 11, -12, gap(n - 6)])?;
    for i in upto((n - 8) / 2) {
        r.set(
            3 + 2 * i,
            row![
                gap(2 + 2 * i),
                -13 - 12 * i,
                17 + 12 * i,
                14 + 12 * i,
                -19 - 12 * i,
                -21 - 12 * i,
                22 + 12 * i,
                gap(n - 8 - 2 * i)
            ],
        )?;
        r.set(
            4 + 2 * i,
            row![
                gap(2 + 2 * i),
                15 + 12 * i,
                -16 - 12 * i,
                -18 - 12 * i,
                20 + 12 * i,
                23 + 12 * i,
                -24 - 12 * i,
                gap(n - 8 - 2 * i)
            ],
        )?;
    }
    r.set(
        n - 3,
        row![
            -14 + 6 * n,
            15 - 6 * n,
            gap(n - 6),
            23 - 6 * n,
            -19 + 6 * n,
            -22 + 6 * n,
            17 - 6 * n
        ],
    )?;
    r.set(
        n - 2,
        row![
            12 - 6 * n,
            -13 + 6 * n,
            gap(n - 6),
            -21 + 6 * n,
            20 - 6 * n,
            18 - 6 * n,
            -16 + 6 * n
        ],
    )?;
    r.set(
        n - 1,
        row![
            5 - 6 * n,
            -10 + 6 * n,
            3 - 6 * n,
            -2 + 6 * n,
            gap(n - 6),
            11 - 6 * n,
            -7 + 6 * n
        ],
    )?;
    r.set(
        n,
        row![
            -4 + 6 * n,
            6 - 6 * n,
            -1 + 6 * n,
            -6 * n,
            gap(n - 6),
            -9 + 6 * n,
            8 - 6 * n
        ],
    )?;
    r.finish()
}
