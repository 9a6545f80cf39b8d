//! Published values the suite compares against, transcribed as printed.

/// Vertical dominoes of `U` with a surrounding of radius 2, `(bottom, top)`.
pub const DOMINOES_U_E2: [(usize, usize); 35] = [
    (0, 8), (1, 8), (1, 9), (1, 11), (2, 16), (3, 16), (4, 13), (5, 13), (6, 14), (6, 17),
    (7, 15), (8, 0), (8, 9), (8, 11), (9, 1), (9, 10), (10, 1), (11, 1), (11, 10), (12, 6),
    (13, 4), (13, 7), (13, 18), (14, 2), (14, 6), (14, 12), (15, 7), (15, 13), (15, 18),
    (16, 3), (16, 14), (16, 17), (17, 3), (17, 14), (18, 5),
];

/// Sizes of the vertical domino sets of `U` for radius 1, 2, 3.
pub const DOMINO_SIZES_U_E2: [usize; 3] = [37, 35, 35];

/// Horizontal dominoes of `V` with a surrounding of radius 1, `(left, right)`.
pub const DOMINOES_V_E1: [(usize, usize); 30] = [
    (0, 4), (1, 5), (2, 3), (3, 6), (4, 1), (4, 2), (5, 1), (5, 2), (5, 7), (6, 1),
    (7, 0), (7, 1), (8, 16), (9, 17), (10, 14), (11, 15), (12, 15), (13, 15), (14, 11),
    (14, 18), (15, 18), (15, 20), (16, 12), (17, 12), (17, 19), (18, 8), (18, 10), (19, 8),
    (20, 9), (20, 13),
];

pub const DOMINO_SIZES_V_E1: [usize; 2] = [30, 30];

pub const MARKERS_U: [usize; 8] = [0, 1, 2, 3, 4, 5, 6, 7];
pub const MARKERS_V: [usize; 7] = [0, 1, 3, 8, 9, 14, 15];

/// Images of `omega` as drawn, one list of columns (bottom to top) per tile.
pub const OMEGA_IMAGES: [&[&[usize]]; 19] = [
    &[&[17]],
    &[&[16]],
    &[&[15], &[11]],
    &[&[13], &[9]],
    &[&[17], &[8]],
    &[&[16], &[8]],
    &[&[15], &[8]],
    &[&[14], &[8]],
    &[&[14, 6]],
    &[&[17, 3]],
    &[&[16, 3]],
    &[&[14, 2]],
    &[&[15, 7], &[11, 1]],
    &[&[14, 6], &[11, 1]],
    &[&[13, 7], &[9, 1]],
    &[&[12, 6], &[9, 1]],
    &[&[18, 5], &[10, 1]],
    &[&[13, 4], &[9, 1]],
    &[&[14, 2], &[8, 0]],
];

/// Incidence matrix of `omega`, row `i` counting tile `i`.
pub const INCIDENCE: [[i64; 19]; 19] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
];

pub const PRIMITIVITY_EXPONENT: u32 = 7;

/// Factors of the characteristic polynomial as `(ascending coefficients, multiplicity)`:
/// `x^3 (x-1)^4 (x+1)^4 (x^2-3x+1) (x^2+x-1)^3`.
pub const CHAR_POLY_FACTORS: [(&[i64], u32); 5] = [
    (&[0, 1], 3),
    (&[-1, 1], 4),
    (&[1, 1], 4),
    (&[1, -3, 1], 1),
    (&[-1, 1, 1], 3),
];

/// Eigenvector entries as sums of `coefficient · φ^power`.
pub type PhiSum = &'static [(i64, i32)];

pub const RIGHT_EIGENVECTOR: [PhiSum; 19] = [
    &[(1, 0)],
    &[(3, 3)],
    &[(1, 2)],
    &[(1, 3)],
    &[(1, 1)],
    &[(1, 2)],
    &[(1, 4)],
    &[(1, 3)],
    &[(1, 4)],
    &[(2, 3)],
    &[(1, 2)],
    &[(1, 3)],
    &[(1, 1)],
    &[(1, 4)],
    &[(1, 4), (1, 2)],
    &[(1, 3)],
    &[(1, 4)],
    &[(1, 3)],
    &[(1, 2)],
];

pub const LEFT_EIGENVECTOR: [PhiSum; 19] = [
    &[(1, 0)],
    &[(1, 0)],
    &[(1, 1)],
    &[(1, 1)],
    &[(1, 1)],
    &[(1, 1)],
    &[(1, 1)],
    &[(1, 1)],
    &[(1, 1)],
    &[(1, 1)],
    &[(1, 1)],
    &[(1, 1)],
    &[(1, 2)],
    &[(1, 2)],
    &[(1, 2)],
    &[(1, 2)],
    &[(1, 2)],
    &[(1, 2)],
    &[(1, 2)],
];

/// Frequencies as sums of `c / (2 φ^k)`, given as `(c, k)`.
pub const FREQUENCIES: [PhiSum; 19] = [
    &[(1, 8)],
    &[(3, 5)],
    &[(1, 6)],
    &[(1, 5)],
    &[(1, 7)],
    &[(1, 6)],
    &[(1, 4)],
    &[(1, 5)],
    &[(1, 4)],
    &[(2, 5)],
    &[(1, 6)],
    &[(1, 5)],
    &[(1, 7)],
    &[(1, 4)],
    &[(1, 4), (1, 6)],
    &[(1, 5)],
    &[(1, 4)],
    &[(1, 5)],
    &[(1, 6)],
];

/// Printed decimal approximations, `(frequency terms, value)`.
pub const FREQUENCY_DECIMALS: [(PhiSum, f64); 8] = [
    (&[(1, 4)], 0.0729),
    (&[(1, 5)], 0.0451),
    (&[(1, 6)], 0.0279),
    (&[(1, 7)], 0.0172),
    (&[(1, 8)], 0.0106),
    (&[(2, 5)], 0.0902),
    (&[(3, 5)], 0.1353),
    (&[(1, 4), (1, 6)], 0.1008),
];

/// The 50 patterns of shape 2x2, each as `[top row, bottom row]`.
pub const PATTERNS_2X2: [[[usize; 2]; 2]; 50] = [
    [[8, 16], [0, 3]], [[8, 16], [1, 2]], [[8, 16], [1, 3]], [[9, 14], [1, 6]],
    [[11, 17], [1, 6]], [[16, 8], [2, 0]], [[16, 13], [2, 4]], [[16, 15], [3, 7]],
    [[13, 9], [4, 1]], [[13, 9], [5, 1]], [[14, 8], [6, 1]], [[14, 11], [6, 1]],
    [[14, 13], [6, 5]], [[17, 8], [6, 1]], [[17, 13], [6, 5]], [[15, 8], [7, 1]],
    [[15, 11], [7, 1]], [[0, 3], [8, 16]], [[9, 14], [8, 16]], [[11, 17], [8, 16]],
    [[1, 2], [9, 14]], [[1, 6], [9, 14]], [[10, 12], [9, 14]], [[1, 6], [10, 12]],
    [[1, 6], [10, 14]], [[1, 3], [11, 17]], [[10, 14], [11, 17]], [[6, 1], [12, 9]],
    [[4, 1], [13, 9]], [[7, 1], [13, 9]], [[18, 10], [13, 9]], [[2, 0], [14, 8]],
    [[2, 4], [14, 13]], [[6, 1], [14, 11]], [[6, 5], [14, 18]], [[12, 9], [14, 8]],
    [[7, 1], [15, 11]], [[13, 9], [15, 8]], [[18, 10], [15, 11]], [[3, 7], [16, 13]],
    [[3, 7], [16, 15]], [[14, 11], [16, 8]], [[14, 18], [16, 13]], [[14, 13], [16, 15]],
    [[14, 18], [16, 15]], [[17, 13], [16, 15]], [[3, 7], [17, 13]], [[14, 11], [17, 8]],
    [[14, 18], [17, 13]], [[5, 1], [18, 10]],
];

/// Bottom edge colors of `omega^5(u4)`, read left to right.
pub const FIXED_POINT_BOTTOM: &str = "KOKPOKOKPOKPO";
/// Top edge written by the transducer from state `G` on that input.
pub const FIXED_POINT_RUN_OUTPUT: &str = "PLKPLPLKPLPPL";
pub const FIXED_POINT_SHAPE: (usize, usize) = (13, 8);

/// Columns (bottom to top) of `omega^2(u16)`, assembled by hand from the images above.
pub const OMEGA2_U16: [&[usize]; 3] = [&[14, 2, 16], &[8, 0, 8], &[16, 3, 16]];

/// Fusion and trimming counts for the 2x2 route through transducers.
pub const TRIMMED_HORIZONTAL: usize = 35;
pub const TRIMMED_SQUARE: usize = 55;
