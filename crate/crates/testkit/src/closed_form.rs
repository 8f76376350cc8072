//! Closed-form Laplacian spectra for standard graph families.
//!
//! The matrix convention is W - D (adjacency minus degree), so every
//! eigenvalue is nonpositive and the largest one is 0. All functions return
//! the spectrum sorted non-increasing.

use std::f64::consts::PI;

use crate::sort_desc;

/// Edgeless graph on `n` nodes: all eigenvalues 0.
pub fn null(n: usize) -> Vec<f64> {
    vec![0.0; n]
}

/// Complete graph K_n: 0 once, -n with multiplicity n-1.
pub fn complete(n: usize) -> Vec<f64> {
    let mut v = vec![-(n as f64); n];
    v[0] = 0.0;
    v
}

/// Star on `n` nodes (one hub): 0, then -1 with multiplicity n-2, then -n.
pub fn star(n: usize) -> Vec<f64> {
    assert!(n >= 2, "a star needs at least two nodes");
    let mut v = vec![-1.0; n];
    v[0] = 0.0;
    v[n - 1] = -(n as f64);
    v
}

/// Cycle C_n: eigenvalues -(2 - 2 cos(2 pi k / n)) for k = 0..n-1.
pub fn cycle(n: usize) -> Vec<f64> {
    assert!(n >= 3, "a cycle needs at least three nodes");
    sort_desc(
        (0..n)
            .map(|k| -(2.0 - 2.0 * (2.0 * PI * k as f64 / n as f64).cos()))
            .collect(),
    )
}

/// Path P_n: eigenvalues -(2 - 2 cos(pi k / n)) for k = 0..n-1.
pub fn path(n: usize) -> Vec<f64> {
    assert!(n >= 2, "a path needs at least two nodes");
    sort_desc(
        (0..n)
            .map(|k| -(2.0 - 2.0 * (PI * k as f64 / n as f64).cos()))
            .collect(),
    )
}

/// Complete split graph CS(n, k): k hubs adjacent to everything, the other
/// n-k nodes independent. Spectrum: 0 once, -k with multiplicity n-k-1,
/// -n with multiplicity k.
pub fn complete_split(n: usize, k: usize) -> Vec<f64> {
    assert!(k < n, "hub count must be below the node count");
    let mut v = Vec::with_capacity(n);
    v.push(0.0);
    v.extend(std::iter::repeat(-(k as f64)).take(n - k - 1));
    v.extend(std::iter::repeat(-(n as f64)).take(k));
    v
}

/// Complexity of CS(n, k) evaluated from the closed-form spectrum:
/// sqrt(k^2 (n-k-1) + n^2 k) * (n-k) * sqrt(n-k-1).
pub fn complete_split_complexity(n: usize, k: usize) -> f64 {
    assert!(k < n);
    let (nf, kf) = (n as f64, k as f64);
    (kf * kf * (nf - kf - 1.0) + nf * nf * kf).sqrt() * (nf - kf) * (nf - kf - 1.0).sqrt()
}
