//! Inputs shared by the benchmarks.

use walllab_core::Rational;

/// `(R, D)` pairs from small to large enumeration workloads.
pub fn workloads() -> Vec<(i64, Rational)> {
    vec![
        (2, Rational::from_integer(2)),
        (0, Rational::from_integer(3)),
        (3, Rational::from_integer(7)),
        (4, Rational::from_integer(10)),
    ]
}
