//! Closed-form piecewise polynomials for the unweighted genus-1 count.
//!
//! Each entry is `(numerator, denominator, [e1, e2, e3, e4])`, standing for
//! `numerator / denominator * d1^e1 d2^e2 d3^e3 d4^e4` with the orders sorted
//! so that `d1 >= d2 >= d3 >= d4`.

/// Valid when `d1 - d2 >= d3 - d4`.
pub(super) const OUTER_GAP_DOMINANT: &[(i64, i64, [u32; 4])] = &[
    (-1, 3360, [7, 0, 0, 0]),
    (1, 240, [5, 2, 0, 0]),
    (-1, 96, [4, 3, 0, 0]),
    (1, 96, [3, 4, 0, 0]),
    (-1, 240, [2, 5, 0, 0]),
    (1, 3360, [0, 7, 0, 0]),
    (1, 240, [5, 0, 2, 0]),
    (-1, 48, [3, 2, 2, 0]),
    (1, 48, [2, 3, 2, 0]),
    (-1, 240, [0, 5, 2, 0]),
    (-1, 96, [4, 0, 3, 0]),
    (1, 48, [2, 2, 3, 0]),
    (-1, 96, [0, 4, 3, 0]),
    (1, 96, [3, 0, 4, 0]),
    (-1, 96, [0, 3, 4, 0]),
    (-1, 240, [2, 0, 5, 0]),
    (-1, 240, [0, 2, 5, 0]),
    (1, 3360, [0, 0, 7, 0]),
    (1, 240, [5, 0, 0, 2]),
    (-1, 48, [3, 2, 0, 2]),
    (1, 48, [2, 3, 0, 2]),
    (-1, 240, [0, 5, 0, 2]),
    (-1, 48, [3, 0, 2, 2]),
    (1, 48, [0, 3, 2, 2]),
    (1, 48, [2, 0, 3, 2]),
    (1, 48, [0, 2, 3, 2]),
    (-1, 240, [0, 0, 5, 2]),
    (-1, 96, [4, 0, 0, 3]),
    (1, 48, [2, 2, 0, 3]),
    (-1, 96, [0, 4, 0, 3]),
    (1, 48, [2, 0, 2, 3]),
    (1, 48, [0, 2, 2, 3]),
    (-1, 96, [0, 0, 4, 3]),
    (1, 96, [3, 0, 0, 4]),
    (-1, 96, [0, 3, 0, 4]),
    (-1, 96, [0, 0, 3, 4]),
    (-1, 240, [2, 0, 0, 5]),
    (-1, 240, [0, 2, 0, 5]),
    (-1, 240, [0, 0, 2, 5]),
    (1, 3360, [0, 0, 0, 7]),
    (-1, 480, [5, 0, 0, 0]),
    (1, 96, [4, 1, 0, 0]),
    (-1, 48, [3, 2, 0, 0]),
    (1, 48, [2, 3, 0, 0]),
    (-1, 96, [1, 4, 0, 0]),
    (1, 480, [0, 5, 0, 0]),
    (1, 96, [4, 0, 1, 0]),
    (-1, 48, [2, 2, 1, 0]),
    (1, 96, [0, 4, 1, 0]),
    (-1, 48, [3, 0, 2, 0]),
    (-1, 48, [2, 1, 2, 0]),
    (1, 48, [1, 2, 2, 0]),
    (1, 48, [0, 3, 2, 0]),
    (1, 48, [2, 0, 3, 0]),
    (1, 48, [0, 2, 3, 0]),
    (-1, 96, [1, 0, 4, 0]),
    (1, 96, [0, 1, 4, 0]),
    (1, 480, [0, 0, 5, 0]),
    (1, 96, [4, 0, 0, 1]),
    (-1, 48, [2, 2, 0, 1]),
    (1, 96, [0, 4, 0, 1]),
    (-1, 48, [2, 0, 2, 1]),
    (-1, 48, [0, 2, 2, 1]),
    (1, 96, [0, 0, 4, 1]),
    (-1, 48, [3, 0, 0, 2]),
    (-1, 48, [2, 1, 0, 2]),
    (1, 48, [1, 2, 0, 2]),
    (1, 48, [0, 3, 0, 2]),
    (-1, 48, [2, 0, 1, 2]),
    (-1, 48, [0, 2, 1, 2]),
    (1, 48, [1, 0, 2, 2]),
    (-1, 48, [0, 1, 2, 2]),
    (1, 48, [0, 0, 3, 2]),
    (1, 48, [2, 0, 0, 3]),
    (1, 48, [0, 2, 0, 3]),
    (1, 48, [0, 0, 2, 3]),
    (-1, 96, [1, 0, 0, 4]),
    (1, 96, [0, 1, 0, 4]),
    (1, 96, [0, 0, 1, 4]),
    (1, 480, [0, 0, 0, 5]),
    (1, 60, [3, 0, 0, 0]),
    (-1, 60, [2, 1, 0, 0]),
    (1, 60, [1, 2, 0, 0]),
    (-1, 60, [0, 3, 0, 0]),
    (-1, 60, [2, 0, 1, 0]),
    (-1, 60, [0, 2, 1, 0]),
    (1, 60, [1, 0, 2, 0]),
    (-1, 60, [0, 1, 2, 0]),
    (-1, 60, [0, 0, 3, 0]),
    (-1, 60, [2, 0, 0, 1]),
    (-1, 60, [0, 2, 0, 1]),
    (-1, 60, [0, 0, 2, 1]),
    (1, 60, [1, 0, 0, 2]),
    (-1, 60, [0, 1, 0, 2]),
    (-1, 60, [0, 0, 1, 2]),
    (-1, 60, [0, 0, 0, 3]),
    (-1, 70, [1, 0, 0, 0]),
    (1, 70, [0, 1, 0, 0]),
    (1, 70, [0, 0, 1, 0]),
    (1, 70, [0, 0, 0, 1]),
];

/// Valid when `d1 - d2 <= d3 - d4`.
pub(super) const INNER_GAP_DOMINANT: &[(i64, i64, [u32; 4])] = &[
    (-1, 48, [4, 0, 0, 3]),
    (1, 24, [2, 2, 0, 3]),
    (-1, 48, [0, 4, 0, 3]),
    (1, 24, [2, 0, 2, 3]),
    (1, 24, [0, 2, 2, 3]),
    (-1, 48, [0, 0, 4, 3]),
    (-1, 120, [2, 0, 0, 5]),
    (-1, 120, [0, 2, 0, 5]),
    (-1, 120, [0, 0, 2, 5]),
    (1, 1680, [0, 0, 0, 7]),
    (1, 48, [4, 0, 0, 1]),
    (-1, 24, [2, 2, 0, 1]),
    (1, 48, [0, 4, 0, 1]),
    (-1, 24, [2, 0, 2, 1]),
    (-1, 24, [0, 2, 2, 1]),
    (1, 48, [0, 0, 4, 1]),
    (1, 24, [2, 0, 0, 3]),
    (1, 24, [0, 2, 0, 3]),
    (1, 24, [0, 0, 2, 3]),
    (1, 240, [0, 0, 0, 5]),
    (-1, 30, [2, 0, 0, 1]),
    (-1, 30, [0, 2, 0, 1]),
    (-1, 30, [0, 0, 2, 1]),
    (-1, 30, [0, 0, 0, 3]),
    (1, 35, [0, 0, 0, 1]),
];
