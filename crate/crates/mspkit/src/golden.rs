//! Reference values of `S(n,k)` and `B(n,k)` for generations 1 to 6,
//! transcribed by hand. Used by the `table-golden` check.

/// `(n, k, S(n,k), B(n,k))`.
pub const TABLE: &[(u32, u32, &str, &str)] = &[
    (1, 1, "1", "X1"),
    (2, 1, "-X2", "X2"),
    (2, 2, "X1", "X1^2"),
    (3, 1, "3*X2^2 - X1*X3", "X3"),
    (3, 2, "-3*X1*X2", "3*X1*X2"),
    (3, 3, "X1^2", "X1^3"),
    (4, 1, "-15*X2^3 + 10*X1*X2*X3 - X1^2*X4", "X4"),
    (4, 2, "15*X1*X2^2 - 4*X1^2*X3", "4*X1*X3 + 3*X2^2"),
    (4, 3, "-6*X1^2*X2", "6*X1^2*X2"),
    (4, 4, "X1^3", "X1^4"),
    (
        5,
        1,
        "105*X2^4 - 105*X1*X2^2*X3 + 10*X1^2*X3^2 + 15*X1^2*X2*X4 - X1^3*X5",
        "X5",
    ),
    (
        5,
        2,
        "-105*X1*X2^3 + 60*X1^2*X2*X3 - 5*X1^3*X4",
        "5*X1*X4 + 10*X2*X3",
    ),
    (5, 3, "45*X1^2*X2^2 - 10*X1^3*X3", "15*X1*X2^2 + 10*X1^2*X3"),
    (5, 4, "-10*X1^3*X2", "10*X1^3*X2"),
    (5, 5, "X1^4", "X1^5"),
    (
        6,
        1,
        "-945*X2^5 + 1260*X1*X2^3*X3 - 280*X1^2*X2*X3^2 - 210*X1^2*X2^2*X4 \
         + 35*X1^3*X3*X4 + 21*X1^3*X2*X5 - X1^4*X6",
        "X6",
    ),
    (
        6,
        2,
        "945*X1*X2^4 - 840*X1^2*X2^2*X3 + 70*X1^3*X3^2 + 105*X1^3*X2*X4 - 6*X1^4*X5",
        "10*X3^2 + 15*X2*X4 + 6*X1*X5",
    ),
    (
        6,
        3,
        "-420*X1^2*X2^3 + 210*X1^3*X2*X3 - 15*X1^4*X4",
        "15*X2^3 + 60*X1*X2*X3 + 15*X1^2*X4",
    ),
    (
        6,
        4,
        "105*X1^3*X2^2 - 20*X1^4*X3",
        "45*X1^2*X2^2 + 20*X1^3*X3",
    ),
    (6, 5, "-15*X1^4*X2", "15*X1^4*X2"),
    (6, 6, "X1^5", "X1^6"),
];
