//! Published values for the 4 × n problem, used as regression targets.
//!
//! Polynomials are listed as ascending coefficient vectors.

/// c_1 ..= c_30.
pub const TERMS: [u64; 30] = [
    1, 3, 5, 14, 22, 54, 84, 197, 305, 696, 1075, 2410, 3716, 8231, 12676, 27844, 42843, 93558,
    143865, 312859, 480868, 1042624, 1602002, 3466064, 5324385, 11501987, 17665729, 38119718,
    58540246, 126217718,
];

/// x (2x^8 - 4x^7 + 8x^6 - 7x^5 + 3x^4 + 2x^3 - 5x^2 + x + 1)
pub const GF_NUMERATOR: [i64; 10] = [0, 1, 1, -5, 2, 3, -7, 8, -4, 2];

/// (x - 1)^2 (x^4 + 3x^2 - 1) (x^4 + 2x^2 - 1), as factors.
pub const GF_DENOMINATOR_FACTORS: [&[i64]; 4] =
    [&[-1, 1], &[-1, 1], &[-1, 0, 3, 0, 1], &[-1, 0, 2, 0, 1]];

/// (x - 1)^2 (x^2 - x + 1) (x^2 + 3x - 1) (x^2 + 2x - 1): the common
/// denominator of the entries of (I - xT)^-1 for the 9-state machine.
pub const RESOLVENT_LCM_FACTORS: [&[i64]; 5] =
    [&[-1, 1], &[-1, 1], &[1, -1, 1], &[-1, 3, 1], &[-1, 2, 1]];

/// Adjacency matrix of the 9-state column machine in its published
/// (arbitrary) state order.
pub const TRANSFER_MATRIX: [[u8; 9]; 9] = [
    [1, 1, 1, 1, 1, 1, 1, 0, 1],
    [0, 1, 0, 1, 0, 1, 1, 0, 0],
    [0, 0, 1, 1, 0, 1, 0, 0, 1],
    [0, 1, 1, 1, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 0, 1],
    [0, 0, 0, 0, 1, 1, 1, 1, 0],
    [0, 0, 0, 0, 1, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 1],
];

/// 1/z where ±z are the smallest poles; equals 2 / sqrt(2 sqrt(13) - 6).
pub const GROWTH: f64 = 1.817354022;

/// c_n ~ A (1 + B (-1)^n) z^-n.
pub const AMPLITUDE_A: f64 = 1.93104;
pub const AMPLITUDE_B: f64 = 0.08417;

/// Closed forms of the two pole amplitudes: (89 z^2 ± 92 z + 218 ± 86/z) / 234,
/// `+` for the pole at z and `-` for the pole at -z.
pub fn amplitude_closed_forms(z: f64) -> (f64, f64) {
    let plus = (89.0 * z * z + 92.0 * z + 218.0 + 86.0 / z) / 234.0;
    let minus = (89.0 * z * z - 92.0 * z + 218.0 - 86.0 / z) / 234.0;
    (plus, minus)
}

/// The twelve displayed cuts of the 3 × 6 rectangle, rows top to bottom.
pub const FIGURES_3X6: [[[u8; 6]; 3]; 12] = [
    [[1, 1, 1, 1, 1, 1], [0, 0, 0, 1, 1, 1], [0, 0, 0, 0, 0, 0]],
    [[1, 1, 1, 1, 1, 1], [1, 0, 0, 1, 1, 0], [0, 0, 0, 0, 0, 0]],
    [[1, 1, 1, 1, 1, 1], [0, 1, 0, 1, 0, 1], [0, 0, 0, 0, 0, 0]],
    [[1, 1, 1, 1, 1, 1], [1, 1, 0, 1, 0, 0], [0, 0, 0, 0, 0, 0]],
    [[1, 1, 1, 1, 1, 1], [0, 0, 1, 0, 1, 1], [0, 0, 0, 0, 0, 0]],
    [[1, 1, 1, 1, 1, 1], [1, 0, 1, 0, 1, 0], [0, 0, 0, 0, 0, 0]],
    [[1, 1, 1, 1, 1, 1], [0, 1, 1, 0, 0, 1], [0, 0, 0, 0, 0, 0]],
    [[1, 1, 1, 1, 1, 1], [1, 1, 1, 0, 0, 0], [0, 0, 0, 0, 0, 0]],
    [[0, 1, 1, 1, 1, 1], [0, 0, 0, 1, 1, 1], [0, 0, 0, 0, 0, 1]],
    [[0, 1, 1, 1, 1, 1], [0, 1, 0, 1, 0, 1], [0, 0, 0, 0, 0, 1]],
    [[0, 1, 1, 1, 1, 1], [0, 0, 1, 0, 1, 1], [0, 0, 0, 0, 0, 1]],
    [[0, 1, 1, 1, 1, 1], [0, 1, 1, 0, 0, 1], [0, 0, 0, 0, 0, 1]],
];

/// Twelve of the 54 canonical 4 × 6 matrices, rows top to bottom.
pub const FIGURES_4X6: [[[u8; 6]; 4]; 12] = [
    [
        [1, 1, 1, 1, 1, 1],
        [0, 0, 0, 0, 0, 1],
        [0, 1, 1, 1, 1, 1],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [1, 1, 1, 1, 1, 1],
        [0, 1, 0, 0, 0, 1],
        [0, 1, 1, 1, 0, 1],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [1, 1, 1, 1, 1, 1],
        [1, 1, 0, 0, 0, 1],
        [0, 1, 1, 1, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [1, 1, 1, 1, 1, 1],
        [0, 0, 1, 0, 0, 1],
        [0, 1, 1, 0, 1, 1],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [1, 1, 1, 1, 1, 1],
        [0, 1, 1, 0, 0, 1],
        [0, 1, 1, 0, 0, 1],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [1, 1, 1, 1, 1, 1],
        [1, 1, 1, 0, 0, 1],
        [0, 1, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [1, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 0, 1],
        [0, 1, 0, 1, 0, 1],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [1, 1, 1, 1, 1, 1],
        [1, 1, 0, 1, 0, 1],
        [0, 1, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 0, 1],
        [0, 1, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 1, 1, 1],
        [0, 0, 0, 1, 1, 1],
        [0, 0, 0, 1, 1, 1],
        [0, 0, 0, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 1, 1],
        [0, 0, 1, 1, 1, 1],
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 1, 1],
        [0, 1, 1, 1, 1, 1],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 1, 1, 1],
    ],
];
