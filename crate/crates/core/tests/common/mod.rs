//! Reference values shared by the integration tests and the acceptance run.
#![allow(dead_code)]

use wmfock_core::algebra::{ratio, DensePolynomial};
use wmfock_core::BigRational;

/// Printed moment rows d_0^(m), d_1^(m), ... for m = 2..=10.
pub const MOMENT_ROWS: [(usize, &[u64]); 9] = [
    (2, &[1, 2, 7, 29, 131, 625, 3099, 15818, 82595]),
    (3, &[1, 3, 15, 87, 544, 3566, 24165, 167904]),
    (4, &[1, 4, 26, 194, 1551, 12944, 111313, 979009]),
    (5, &[1, 5, 40, 365, 3555, 36045, 375797, 4000226, 43279506]),
    (6, &[1, 6, 57, 615, 7064, 84307, 1033089, 12909546, 163799094]),
    (7, &[1, 7, 77, 959, 12691, 174265, 2454221, 35215061, 512675782]),
    (8, &[1, 8, 100, 1412, 21154, 328496, 5227522, 84698378, 1391557207]),
    (9, &[1, 9, 126, 1989, 33276, 576564, 10230750, 184733379, 3380878107]),
    (10, &[1, 10, 155, 2705, 49985, 955965, 18713619, 372615462, 7517051642]),
];

/// Coefficients of d_n^(m) in m, constant term first, as (numerator, denominator).
pub fn moment_polynomials() -> Vec<DensePolynomial> {
    let rows: [&[(i64, i64)]; 8] = [
        &[(1, 1)],
        &[(0, 1), (1, 1)],
        &[(0, 1), (1, 2), (3, 2)],
        &[(0, 1), (1, 2), (2, 1), (5, 2)],
        &[(0, 1), (7, 12), (25, 8), (71, 12), (35, 8)],
        &[(0, 1), (2, 3), (5, 1), (311, 24), (31, 2), (63, 8)],
        &[(0, 1), (13, 20), (91, 12), (429, 16), (2135, 48), (3043, 80), (231, 16)],
        &[(0, 1), (9, 20), (51, 5), (2453, 48), (685, 6), (4099, 30), (2689, 30), (429, 16)],
    ];
    rows.iter().map(|r| DensePolynomial::new(r.iter().map(|&(p, q)| ratio(p, q)).collect())).collect()
}

/// Printed r_1, ..., r_20.
pub fn printed_cumulants() -> Vec<BigRational> {
    let even = [(1, 1), (1, 2), (1, 2), (7, 12), (2, 3), (13, 20), (9, 20), (71, 280), (121, 40), (19, 7)];
    even.iter().flat_map(|&(p, q)| [ratio(0, 1), ratio(p, q)]).collect()
}

/// Printed p_1, ..., p_10 for m = 2, constant term first. The printed p_2 is x² − x.
pub fn printed_orthogonal_polys() -> Vec<DensePolynomial> {
    let rows: [&[(i64, i64)]; 10] = [
        &[(0, 1), (1, 1)],
        &[(0, 1), (-1, 1), (1, 1)],
        &[(0, 1), (-7, 2), (0, 1), (1, 1)],
        &[(3, 1), (0, 1), (-5, 1), (0, 1), (1, 1)],
        &[(0, 1), (76, 9), (0, 1), (-59, 9), (0, 1), (1, 1)],
        &[(-100, 21), (0, 1), (344, 21), (0, 1), (-57, 7), (0, 1), (1, 1)],
        &[(0, 1), (-452, 25), (0, 1), (668, 25), (0, 1), (-243, 25), (0, 1), (1, 1)],
        &[(681, 92), (0, 1), (-2003, 46), (0, 1), (14491, 368), (0, 1), (-4149, 368), (0, 1), (1, 1)],
        &[(0, 1), (8039, 227), (0, 1), (-77127, 908), (0, 1), (49429, 908), (0, 1), (-2911, 227), (0, 1), (1, 1)],
        &[
            (-59841, 5177),
            (0, 1),
            (535355, 5177),
            (0, 1),
            (-758082, 5177),
            (0, 1),
            (372967, 5177),
            (0, 1),
            (-74473, 5177),
            (0, 1),
            (1, 1),
        ],
    ];
    rows.iter().map(|r| DensePolynomial::new(r.iter().map(|&(p, q)| ratio(p, q)).collect())).collect()
}
