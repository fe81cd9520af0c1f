//! Reference values for the classical range `2|m| ∈ 0..=11`, `i ∈ 0..=5`.
//!
//! `LEGENDRE[2|m|][i]` lists the integer coefficients of `P′(x)` in ascending
//! powers; `NORMS[2|m|][i]` is `N²_θ = (num/den)·π^e` as `(num, den, e)`.

pub const LEGENDRE: [[&[i64]; 6]; 12] = [
    [
        &[1],
        &[0, 1],
        &[1, 0, -3],
        &[0, 3, 0, -5],
        &[3, 0, -30, 0, 35],
        &[0, 15, 0, -70, 0, 63],
    ],
    [
        &[1],
        &[0, 1],
        &[1, 0, -4],
        &[0, 3, 0, -6],
        &[3, 0, -36, 0, 48],
        &[0, 15, 0, -80, 0, 80],
    ],
    [
        &[1],
        &[0, 1],
        &[1, 0, -5],
        &[0, 3, 0, -7],
        &[3, 0, -42, 0, 63],
        &[0, 15, 0, -90, 0, 99],
    ],
    [
        &[1],
        &[0, 1],
        &[1, 0, -6],
        &[0, 3, 0, -8],
        &[3, 0, -48, 0, 80],
        &[0, 15, 0, -100, 0, 120],
    ],
    [
        &[1],
        &[0, 1],
        &[1, 0, -7],
        &[0, 3, 0, -9],
        &[3, 0, -54, 0, 99],
        &[0, 15, 0, -110, 0, 143],
    ],
    [
        &[1],
        &[0, 1],
        &[1, 0, -8],
        &[0, 3, 0, -10],
        &[3, 0, -60, 0, 120],
        &[0, 15, 0, -120, 0, 168],
    ],
    [
        &[1],
        &[0, 1],
        &[1, 0, -9],
        &[0, 3, 0, -11],
        &[3, 0, -66, 0, 143],
        &[0, 15, 0, -130, 0, 195],
    ],
    [
        &[1],
        &[0, 1],
        &[1, 0, -10],
        &[0, 3, 0, -12],
        &[3, 0, -72, 0, 168],
        &[0, 15, 0, -140, 0, 224],
    ],
    [
        &[1],
        &[0, 1],
        &[1, 0, -11],
        &[0, 3, 0, -13],
        &[3, 0, -78, 0, 195],
        &[0, 15, 0, -150, 0, 255],
    ],
    [
        &[1],
        &[0, 1],
        &[1, 0, -12],
        &[0, 3, 0, -14],
        &[3, 0, -84, 0, 224],
        &[0, 15, 0, -160, 0, 288],
    ],
    [
        &[1],
        &[0, 1],
        &[1, 0, -13],
        &[0, 3, 0, -15],
        &[3, 0, -90, 0, 255],
        &[0, 15, 0, -170, 0, 323],
    ],
    [
        &[1],
        &[0, 1],
        &[1, 0, -14],
        &[0, 3, 0, -16],
        &[3, 0, -96, 0, 288],
        &[0, 15, 0, -180, 0, 360],
    ],
];

pub const NORMS: [[(i64, i64, u8); 6]; 12] = [
    [
        (2, 1, 0),
        (2, 3, 0),
        (8, 5, 0),
        (8, 7, 0),
        (128, 9, 0),
        (128, 11, 0),
    ],
    [
        (1, 2, 1),
        (1, 8, 1),
        (1, 2, 1),
        (9, 32, 1),
        (9, 2, 1),
        (25, 8, 1),
    ],
    [
        (4, 3, 0),
        (4, 15, 0),
        (32, 21, 0),
        (32, 45, 0),
        (768, 55, 0),
        (768, 91, 0),
    ],
    [
        (3, 8, 1),
        (1, 16, 1),
        (15, 32, 1),
        (3, 16, 1),
        (35, 8, 1),
        (75, 32, 1),
    ],
    [
        (16, 15, 0),
        (16, 105, 0),
        (64, 45, 0),
        (192, 385, 0),
        (6144, 455, 0),
        (2048, 315, 0),
    ],
    [
        (5, 16, 1),
        (5, 128, 1),
        (7, 16, 1),
        (35, 256, 1),
        (135, 32, 1),
        (945, 512, 1),
    ],
    [
        (32, 35, 0),
        (32, 315, 0),
        (512, 385, 0),
        (512, 1365, 0),
        (4096, 315, 0),
        (20480, 3927, 0),
    ],
    [
        (35, 128, 1),
        (7, 256, 1),
        (105, 256, 1),
        (27, 256, 1),
        (2079, 512, 1),
        (385, 256, 1),
    ],
    [
        (256, 315, 0),
        (256, 3465, 0),
        (1024, 819, 0),
        (1024, 3465, 0),
        (16384, 1309, 0),
        (81920, 19019, 0),
    ],
    [
        (63, 256, 1),
        (21, 1024, 1),
        (99, 256, 1),
        (693, 8192, 1),
        (1001, 256, 1),
        (1287, 1024, 1),
    ],
    [
        (512, 693, 0),
        (512, 9009, 0),
        (4096, 3465, 0),
        (4096, 17017, 0),
        (32768, 2717, 0),
        (32768, 9009, 0),
    ],
    [
        (231, 1024, 1),
        (33, 2048, 1),
        (3003, 8192, 1),
        (143, 2048, 1),
        (3861, 1024, 1),
        (8775, 8192, 1),
    ],
];
