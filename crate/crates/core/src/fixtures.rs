//! Reference arrays used as golden data by tests, the acceptance suite and the CLI.
//!
//! Empty cells are written as `0` and mapped to `None` by [`PartialArray::from_dense`].

use crate::array::PartialArray;

/// An `H(8;7)` whose natural orderings are not all simple; every row and column admits some simple ordering modulo 113.
pub fn h8_7() -> PartialArray {
    PartialArray::from_dense(&[
        &[8, 16, 0, 25, -27, -29, 31, -24],
        &[-17, -6, 23, -28, 26, 32, -30, 0],
        &[39, -10, -5, 15, 0, 33, -35, -37],
        &[-38, 0, -18, 7, 11, -36, 34, 40],
        &[-43, -45, 47, -22, 3, 19, 0, 41],
        &[42, 48, -46, 0, -14, 2, 12, -44],
        &[0, 49, -51, -53, 55, -21, 1, 20],
        &[9, -52, 50, 56, -54, 0, -13, 4],
    ])
    .unwrap()
}

/// A globally simple `H(8;7)`.
pub fn sh8_7() -> PartialArray {
    PartialArray::from_dense(&[
        &[4, 35, -45, 46, 0, 20, -36, -24],
        &[48, -5, 23, -47, -18, 0, 37, -38],
        &[-32, -10, -6, 31, -41, 42, 0, 16],
        &[33, -34, 44, 3, 11, -43, -14, 0],
        &[0, 15, -28, -22, 7, 27, -53, 54],
        &[-13, 0, 29, -30, 56, 1, 12, -55],
        &[-49, 50, 0, 19, -40, -21, 2, 39],
        &[9, -51, -17, 0, 25, -26, 52, 8],
    ])
    .unwrap()
}

/// An `SH*(10;8)`.
pub fn sh_star_10_8() -> PartialArray {
    PartialArray::from_dense(&[
        &[77, 80, -78, -71, -70, -79, 0, 0, 69, 72],
        &[0, 0, -17, -20, -25, -28, 26, 19, 18, 27],
        &[5, 8, 13, 16, -14, -7, -6, -15, 0, 0],
        &[34, 43, 0, 0, -33, -36, -41, -44, 42, 35],
        &[0, 0, 21, 24, 29, 32, -30, -23, -22, -31],
        &[58, 51, 50, 59, 0, 0, -49, -52, -57, -60],
        &[-38, -47, 0, 0, 37, 40, 45, 48, -46, -39],
        &[-73, -76, 74, 67, 66, 75, 0, 0, -65, -68],
        &[-62, -55, -54, -63, 0, 0, 53, 56, 61, 64],
        &[-1, -4, -9, -12, 10, 3, 2, 11, 0, 0],
    ])
    .unwrap()
}

/// A cyclically 5-diagonal `9 x 9` array holding `1..=45`, filled diagonals starting at `r = 8`.
pub fn diagonal_9_5() -> PartialArray {
    PartialArray::from_dense(&[
        &[38, 39, 40, 0, 0, 0, 0, 36, 37],
        &[42, 43, 44, 45, 0, 0, 0, 0, 41],
        &[1, 2, 3, 4, 5, 0, 0, 0, 0],
        &[0, 6, 7, 8, 9, 10, 0, 0, 0],
        &[0, 0, 11, 12, 13, 14, 15, 0, 0],
        &[0, 0, 0, 16, 17, 18, 19, 20, 0],
        &[0, 0, 0, 0, 21, 22, 23, 24, 25],
        &[30, 0, 0, 0, 0, 26, 27, 28, 29],
        &[34, 35, 0, 0, 0, 0, 31, 32, 33],
    ])
    .unwrap()
}

/// Standard form of [`diagonal_9_5`].
pub fn diagonal_9_5_standard() -> PartialArray {
    PartialArray::from_dense(&[
        &[1, 2, 3, 4, 5, 0, 0, 0, 0],
        &[0, 6, 7, 8, 9, 10, 0, 0, 0],
        &[0, 0, 11, 12, 13, 14, 15, 0, 0],
        &[0, 0, 0, 16, 17, 18, 19, 20, 0],
        &[0, 0, 0, 0, 21, 22, 23, 24, 25],
        &[30, 0, 0, 0, 0, 26, 27, 28, 29],
        &[34, 35, 0, 0, 0, 0, 31, 32, 33],
        &[38, 39, 40, 0, 0, 0, 0, 36, 37],
        &[42, 43, 44, 45, 0, 0, 0, 0, 41],
    ])
    .unwrap()
}

/// An `SH*(8;6)`.
pub fn sh_star_8_6() -> PartialArray {
    PartialArray::from_dense(&[
        &[5, -1, 2, -7, -9, 10, 0, 0],
        &[-4, 3, -6, 8, 11, -12, 0, 0],
        &[0, 0, -13, 17, 14, -19, -21, 22],
        &[0, 0, 15, -16, -18, 20, 23, -24],
        &[34, -33, 0, 0, -25, 29, 26, -31],
        &[-36, 35, 0, 0, 27, -28, -30, 32],
        &[-43, 38, -45, 46, 0, 0, -37, 41],
        &[44, -42, 47, -48, 0, 0, 39, -40],
    ])
    .unwrap()
}

/// An `SH*(9;7)`.
pub fn sh_star_9_7() -> PartialArray {
    PartialArray::from_dense(&[
        &[-9, -37, -16, 29, 0, 0, 62, 25, -54],
        &[-41, -8, -51, -19, 34, 0, 0, 58, 27],
        &[21, -46, 3, -47, -24, 30, 0, 0, 63],
        &[59, 18, -42, -7, -52, -11, 35, 0, 0],
        &[0, 55, 13, -38, 2, -48, -15, 31, 0],
        &[0, 0, 60, 26, -43, -6, -53, -20, 36],
        &[32, 0, 0, 56, 22, -39, 1, -49, -23],
        &[-12, 28, 0, 0, 61, 17, -44, -5, -45],
        &[-50, -10, 33, 0, 0, 57, 14, -40, -4],
    ])
    .unwrap()
}

/// An `SH*(12;9)`.
pub fn sh_star_12_9() -> PartialArray {
    PartialArray::from_dense(&[
        &[34, -10, 46, 104, -106, 0, -37, -33, 0, 0, -103, 105],
        &[61, -47, -9, 55, 108, -62, 0, 32, -31, 0, 0, -107],
        &[-63, 65, -38, -8, 45, 64, -66, 0, 30, -29, 0, 0],
        &[0, -67, 69, -48, -7, 54, 68, -70, 0, 28, -27, 0],
        &[0, 0, -71, 73, -39, -6, 44, 72, -74, 0, 26, -25],
        &[-22, 0, 0, -75, 77, -49, 57, 50, 76, -78, 0, -36],
        &[11, -12, 0, 0, -79, 81, -43, 4, 40, 80, -82, 0],
        &[0, 13, -14, 0, 0, -83, 85, -53, 3, 51, 84, -86],
        &[-90, 0, 15, -16, 0, 0, -87, 89, -42, 2, 41, 88],
        &[92, -94, 0, 17, -18, 0, 0, -91, 93, -52, -5, 58],
        &[-24, 96, -98, 0, 19, 60, 0, 0, -95, 97, -35, -20],
        &[1, 56, 100, -102, 0, -59, -21, 0, 0, -99, 101, 23],
    ])
    .unwrap()
}

/// An `SH*(12;10)`.
pub fn sh_star_12_10() -> PartialArray {
    PartialArray::from_dense(&[
        &[-104, 111, -108, -114, -112, -119, 116, 0, 120, 103, 0, 107],
        &[-38, -21, 0, -25, 22, -29, 26, 30, 33, 37, -35, 0],
        &[0, 7, -4, 11, -8, -14, -12, -19, 16, 0, 20, 3],
        &[-55, 0, -58, -41, 0, -45, 42, -49, 46, 50, 53, 57],
        &[40, 23, 0, 27, -24, 31, -28, -34, -32, -39, 36, 0],
        &[73, 77, -75, 0, -78, -61, 0, -65, 62, -69, 66, 70],
        &[56, 0, 60, 43, 0, 47, -44, 51, -48, -54, -52, -59],
        &[86, 90, 93, 97, -95, 0, -98, -81, 0, -85, 82, -89],
        &[-72, -79, 76, 0, 80, 63, 0, 67, -64, 71, -68, -74],
        &[102, -109, 106, 110, 113, 117, -115, 0, -118, -101, 0, -105],
        &[-88, -94, -92, -99, 96, 0, 100, 83, 0, 87, -84, 91],
        &[0, -5, 2, -9, 6, 10, 13, 17, -15, 0, -18, -1],
    ])
    .unwrap()
}

/// Simple orderings (modulo 113) of the rows of [`h8_7`], row by row.
pub const H8_7_ROW_ORDERINGS: [[i64; 7]; 8] = [
    [8, 25, 16, -27, -29, 31, -24],
    [-17, -6, -28, 23, 26, 32, -30],
    [39, -10, -5, 33, 15, -35, -37],
    [-38, -18, 7, -36, 11, 34, 40],
    [-43, -45, 47, -22, 3, 41, 19],
    [42, 48, -46, -14, 2, -44, 12],
    [20, -51, -53, 55, -21, 1, 49],
    [-52, 9, 50, 56, -54, -13, 4],
];

/// Simple orderings (modulo 113) of the columns of [`h8_7`], column by column.
pub const H8_7_COLUMN_ORDERINGS: [[i64; 7]; 8] = [
    [8, 39, -17, -38, -43, 42, 9],
    [16, -6, -45, -10, 48, 49, -52],
    [23, -5, 47, -18, -46, -51, 50],
    [25, -28, 15, 7, -53, -22, 56],
    [-27, 26, 11, 3, 55, -14, -54],
    [-21, 32, 33, -36, 19, 2, -29],
    [-13, -30, -35, 34, 12, 1, 31],
    [-37, -24, 40, 41, -44, 20, 4],
];

/// Base cycles in `Z_113` from [`H8_7_ROW_ORDERINGS`], as published (mixed signs).
pub const H8_7_ROW_CYCLES: [[i64; 7]; 8] = [
    [8, 33, 49, 22, -7, 24, 0],
    [-17, -23, -51, -28, -2, 30, 0],
    [39, 29, 24, 57, 72, 37, 0],
    [-38, -56, -49, -85, -74, -40, 0],
    [-43, -88, -41, -63, -60, -19, 0],
    [42, 90, 44, 30, 32, -12, 0],
    [20, -31, -84, -29, -50, -49, 0],
    [-52, -43, 7, 63, 9, -4, 0],
];

/// Base cycles in `Z_113` from [`H8_7_COLUMN_ORDERINGS`].
pub const H8_7_COLUMN_CYCLES: [[i64; 7]; 8] = [
    [8, 47, 30, -8, -51, -9, 0],
    [16, 10, -35, -45, 3, 52, 0],
    [23, 18, 65, 47, 1, -50, 0],
    [25, -3, 12, 19, -34, -56, 0],
    [-27, -1, 10, 13, 68, 54, 0],
    [-21, 11, 44, 8, 27, 29, 0],
    [-13, -43, -78, -44, -32, -31, 0],
    [-37, -61, -21, 20, -24, -4, 0],
];

/// Row cycles of [`sh_star_10_8`] in `Z_162`.
pub const SH_STAR_10_8_ROW_CYCLES_162: [[i64; 8]; 10] = [
    [77, 157, 79, 8, -62, -141, -72, 0],
    [-17, -37, -62, -90, -64, -45, -27, 0],
    [5, 13, 26, 42, 28, 21, 15, 0],
    [34, 77, 44, 8, -33, -77, -35, 0],
    [21, 45, 74, 106, 76, 53, 31, 0],
    [58, 109, 159, 56, 7, 117, 60, 0],
    [-38, -85, -48, -8, 37, 85, 39, 0],
    [-73, -149, -75, -8, 58, 133, 68, 0],
    [-62, -117, -9, -72, -19, -125, -64, 0],
    [-1, -5, -14, -26, -16, -13, -11, 0],
];

/// Column cycles of [`sh_star_10_8`] in `Z_162`.
pub const SH_STAR_10_8_COLUMN_CYCLES_162: [[i64; 8]; 10] = [
    [77, 82, 116, 12, 136, 63, 1, 0],
    [80, 88, 131, 20, 135, 59, 4, 0],
    [-78, -95, -82, -61, -11, 63, 9, 0],
    [-71, -91, -75, -51, 8, 75, 12, 0],
    [-70, -95, -109, -142, -113, -76, -10, 0],
    [-79, -107, -114, -150, -118, -78, -3, 0],
    [26, 20, -21, -51, -100, -55, -2, 0],
    [19, 4, -40, -63, -115, -67, -11, 0],
    [69, 87, 129, 107, 50, 4, -61, 0],
    [72, 99, 134, 103, 43, 4, -64, 0],
];

/// Row cycles of [`sh_star_10_8`] in `Z_161`: the `Z_162` list except rows 6 and 9.
pub fn sh_star_10_8_row_cycles_161() -> Vec<[i64; 8]> {
    let mut c = SH_STAR_10_8_ROW_CYCLES_162.to_vec();
    c[5] = [58, 109, 159, 57, 8, 117, 60, 0];
    c[8] = [-62, -117, -10, -73, -20, -125, -64, 0];
    c
}

/// Column cycles of [`sh_star_10_8`] in `Z_161`: the `Z_162` list except columns 1 and 2.
pub fn sh_star_10_8_column_cycles_161() -> Vec<[i64; 8]> {
    let mut c = SH_STAR_10_8_COLUMN_CYCLES_162.to_vec();
    c[0] = [77, 82, 116, 13, 136, 63, 1, 0];
    c[1] = [80, 88, 131, 21, 135, 59, 4, 0];
    c
}

/// Entries of [`diagonal_9_5_standard`] along the single cycle of its
/// compatible orderings, starting at 37.
pub const DIAGONAL_9_5_COMPOSITION: [i64; 45] = [
    37, 42, 2, 7, 12, 17, 22, 27, 32, 29, 34, 39, 44, 4, 9, 14, 19, 24, 41, 1, 6, 11, 16, 21, 26,
    31, 36, 33, 38, 43, 3, 8, 13, 18, 23, 28, 25, 5, 30, 10, 35, 15, 40, 20, 45,
];
