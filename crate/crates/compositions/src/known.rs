//! Published low-order expansions, used as fixed reference data.
//!
//! `M_TABLE` lists the coefficients of `M_2, ..., M_10` in terms of
//! compositions of GJMS operators; `N_TABLE` lists the coefficients of
//! `P_4, ..., P_10` in terms of compositions of the `M` operators.

/// `(composition, numerator)`; every listed coefficient is an integer.
pub type Entry = (&'static [u32], i64);

pub const M_TABLE: &[Entry] = &[
    (&[1], 1),
    (&[2], 1),
    (&[1, 1], -1),
    (&[3], 1),
    (&[1, 2], -2),
    (&[2, 1], -2),
    (&[1, 1, 1], 3),
    (&[4], 1),
    (&[1, 3], -3),
    (&[3, 1], -3),
    (&[2, 2], -9),
    (&[1, 1, 2], 12),
    (&[2, 1, 1], 12),
    (&[1, 2, 1], 8),
    (&[1, 1, 1, 1], -18),
    (&[5], 1),
    (&[1, 4], -4),
    (&[4, 1], -4),
    (&[2, 3], -24),
    (&[3, 2], -24),
    (&[1, 2, 2], 60),
    (&[2, 2, 1], 60),
    (&[1, 1, 3], 30),
    (&[3, 1, 1], 30),
    (&[1, 3, 1], 15),
    (&[2, 1, 2], 80),
    (&[1, 1, 1, 2], -120),
    (&[2, 1, 1, 1], -120),
    (&[1, 1, 2, 1], -80),
    (&[1, 2, 1, 1], -80),
    (&[1, 1, 1, 1, 1], 180),
];

pub const N_TABLE: &[Entry] = &[
    (&[2], 1),
    (&[1, 1], 1),
    (&[3], 1),
    (&[1, 2], 2),
    (&[2, 1], 2),
    (&[1, 1, 1], 1),
    (&[4], 1),
    (&[1, 3], 3),
    (&[3, 1], 3),
    (&[2, 2], 9),
    (&[1, 1, 2], 3),
    (&[2, 1, 1], 3),
    (&[1, 2, 1], 4),
    (&[1, 1, 1, 1], 1),
    (&[5], 1),
    (&[1, 4], 4),
    (&[4, 1], 4),
    (&[2, 3], 24),
    (&[3, 2], 24),
    (&[1, 1, 3], 6),
    (&[3, 1, 1], 6),
    (&[1, 2, 2], 24),
    (&[2, 2, 1], 24),
    (&[1, 3, 1], 9),
    (&[2, 1, 2], 16),
    (&[1, 1, 1, 2], 4),
    (&[2, 1, 1, 1], 4),
    (&[1, 1, 2, 1], 6),
    (&[1, 2, 1, 1], 6),
    (&[1, 1, 1, 1, 1], 1),
];
