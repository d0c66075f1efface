//! Shared inputs for the benchmarks.

/// Catalog entries of increasing size.
pub const CATALOG_CASES: [&str; 5] = [
    "conic:1",
    "extremal-like:1,2",
    "limit:1,3",
    "extremal-like:3,4",
    "presentation:2,4",
];

/// `(d, g)` classes for the formula benchmarks: plane, extremal genus, deep.
pub fn formula_classes() -> Vec<(i64, i64)> {
    vec![(10, 36), (10, 28), (12, -20), (20, 100)]
}
