//! The graph Laplacian, its eigenvalue spectrum, and the spectral
//! complexity measure.
//!
//! The Laplacian here is W - D (adjacency minus degree matrix): symmetric,
//! negative semi-definite, row sums zero. Eigenvalues are therefore
//! nonpositive, the largest being 0, and are reported sorted non-increasing.
//!
//! Complexity of a graph G on n nodes is defined from the reduced spectrum
//! L = (lambda_2, ..., lambda_n) as
//!
//! ```text
//! c(G) = ||L|| * ||n + L||
//! ```
//!
//! with Euclidean norms and n meaning the constant vector (n, ..., n). This
//! equals the product of the spectral distances from G to the edgeless graph
//! and to the complete graph, vanishes exactly on those two extremes, and
//! takes the same value on a graph and its complement.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A dense symmetric real matrix. `set` writes both mirror entries, so a
/// value of this type is symmetric by construction rather than by check.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> SymMatrix {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// First non-finite entry, if any.
    fn non_finite_entry(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|v| !v.is_finite())
            .map(|pos| (pos / self.n, pos % self.n))
    }
}

/// The Laplacian W - D of a graph: +1 at adjacent off-diagonal pairs,
/// negative degree on the diagonal, zero elsewhere. Row sums are zero.
pub fn laplacian(g: &Graph) -> SymMatrix {
    let n = g.node_count();
    let mut a = SymMatrix::zeros(n);
    let mut deg = vec![0usize; n];
    for (i, j) in g.edges() {
        a.set(i, j, 1.0);
        deg[i] += 1;
        deg[j] += 1;
    }
    for (i, d) in deg.into_iter().enumerate() {
        a.set(i, i, -(d as f64));
    }
    a
}

/// Iteration budget for the eigensolver, in full rotation sweeps.
const MAX_SWEEPS: usize = 30;

/// Convergence threshold relative to the Frobenius norm of the input.
const OFF_DIAG_REL_TOL: f64 = 1e-12;

/// All eigenvalues of a symmetric matrix, sorted non-increasing, by cyclic
/// Jacobi rotations.
///
/// Each sweep annihilates every off-diagonal entry once; the iteration stops
/// when the off-diagonal Frobenius norm drops below 1e-12 times the Frobenius
/// norm of the input. Convergence failure within 30 sweeps is reported as an
/// error rather than returning a half-finished spectrum, and non-finite input
/// is rejected up front.
pub fn eig_symmetric(matrix: &SymMatrix) -> Result<Vec<f64>> {
    if let Some((row, col)) = matrix.non_finite_entry() {
        return Err(Error::NonFiniteEntry { row, col });
    }
    let n = matrix.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let tol = OFF_DIAG_REL_TOL * matrix.frobenius_norm();

    let mut a = matrix.clone();
    // d carries the running eigenvalue estimates; b and z implement the
    // accumulate-then-refresh update that keeps rounding error from piling
    // up in d across a sweep.
    let mut d: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    let mut b = d.clone();
    let mut z = vec![0.0f64; n];

    for sweep in 0..=MAX_SWEEPS {
        let mut off_sq = 0.0f64;
        let mut abs_sum = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                let v = a.get(p, q);
                off_sq += v * v;
                abs_sum += v.abs();
            }
        }
        let residual = (2.0 * off_sq).sqrt();
        if residual <= tol {
            d.sort_by(|x, y| y.total_cmp(x));
            return Ok(d);
        }
        if sweep == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps: MAX_SWEEPS,
                residual,
            });
        }

        // Early sweeps skip entries below a coarse threshold; later sweeps
        // rotate everything that is not already negligible.
        let thresh = if sweep < 3 {
            0.2 * abs_sum / (n * n) as f64
        } else {
            0.0
        };

        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a.get(p, q);
                let small = 100.0 * apq.abs();
                if sweep > 3
                    && d[p].abs() + small == d[p].abs()
                    && d[q].abs() + small == d[q].abs()
                {
                    a.set(p, q, 0.0);
                    continue;
                }
                if apq.abs() <= thresh {
                    continue;
                }

                let h = d[q] - d[p];
                let t = if h.abs() + small == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let shift = t * apq;
                z[p] -= shift;
                z[q] += shift;
                d[p] -= shift;
                d[q] += shift;
                a.set(p, q, 0.0);

                let rotate = |a: &mut SymMatrix, i1, j1, i2, j2| {
                    let g = a.get(i1, j1);
                    let h = a.get(i2, j2);
                    a.set(i1, j1, g - s * (h + g * tau));
                    a.set(i2, j2, h + s * (g - h * tau));
                };
                for j in 0..p {
                    rotate(&mut a, j, p, j, q);
                }
                for j in p + 1..q {
                    rotate(&mut a, p, j, j, q);
                }
                for j in q + 1..n {
                    rotate(&mut a, p, j, q, j);
                }
            }
        }

        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    unreachable!("the sweep loop always returns or errors");
}

/// The Laplacian spectrum of a graph, sorted non-increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    lambda: Vec<f64>,
}

impl Spectrum {
    /// Solves for the full spectrum of `g`. Needs n >= 2 because the
    /// reduced spectrum (all eigenvalues but the largest) must be nonempty.
    pub fn of(g: &Graph) -> Result<Spectrum> {
        if g.node_count() < 2 {
            return Err(Error::TooFewNodes {
                n: g.node_count(),
                min: 2,
            });
        }
        Ok(Spectrum {
            lambda: eig_symmetric(&laplacian(g))?,
        })
    }

    /// Wraps eigenvalues obtained elsewhere; sorts them non-increasing.
    pub fn from_eigenvalues(mut lambda: Vec<f64>) -> Result<Spectrum> {
        if lambda.len() < 2 {
            return Err(Error::TooFewNodes {
                n: lambda.len(),
                min: 2,
            });
        }
        if let Some(pos) = lambda.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteEntry { row: 0, col: pos });
        }
        lambda.sort_by(|x, y| y.total_cmp(x));
        Ok(Spectrum { lambda })
    }

    pub fn node_count(&self) -> usize {
        self.lambda.len()
    }

    /// All eigenvalues, non-increasing; the first is 0 up to solver tolerance.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.lambda
    }

    /// The reduced spectrum: everything but the leading zero eigenvalue.
    pub fn reduced(&self) -> &[f64] {
        &self.lambda[1..]
    }

    /// The complexity value ||L|| * ||n + L|| over the reduced spectrum L.
    pub fn complexity(&self) -> f64 {
        let n = self.lambda.len() as f64;
        let mut norm_sq = 0.0;
        let mut shifted_sq = 0.0;
        for &v in self.reduced() {
            norm_sq += v * v;
            shifted_sq += (n + v) * (n + v);
        }
        (norm_sq * shifted_sq).sqrt()
    }

    /// The spectrum of the complement graph, computed directly: the reduced
    /// part maps componentwise to -n - lambda and the leading entry stays 0.
    pub fn complement(&self) -> Spectrum {
        let n = self.lambda.len() as f64;
        let mut lambda: Vec<f64> = std::iter::once(0.0)
            .chain(self.reduced().iter().map(|&v| -n - v))
            .collect();
        lambda.sort_by(|x, y| y.total_cmp(x));
        Spectrum { lambda }
    }
}

/// Euclidean distance between two sorted spectra of equal size.
pub fn spectral_distance(s1: &Spectrum, s2: &Spectrum) -> Result<f64> {
    if s1.node_count() != s2.node_count() {
        return Err(Error::SizeMismatch {
            left: s1.node_count(),
            right: s2.node_count(),
        });
    }
    Ok(s1
        .eigenvalues()
        .iter()
        .zip(s2.eigenvalues())
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt())
}
