//! Eigenvalues via the characteristic polynomial.
//!
//! Coefficients come from the Faddeev-LeVerrier recursion; roots come either
//! from closed-form quadratic/cubic solutions (for the small integer matrices
//! the cross-check suites feed in, where the coefficients are exact and
//! repeated roots can be resolved exactly) or from Durand-Kerner iteration
//! for generic polynomials. Neither route shares code with the Jacobi solver
//! under test.

use num_complex::Complex64;

/// Coefficients of det(xI - A) as a monic polynomial, highest degree first:
/// `[1, c1, ..., cn]` with p(x) = x^n + c1 x^(n-1) + ... + cn.
pub fn char_poly(a: &[Vec<f64>]) -> Vec<f64> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    let mut coeffs = vec![1.0];
    let mut m = vec![vec![0.0; n]; n]; // holds A * M_{k-1}, starting from M_0 = 0
    for k in 1..=n {
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += coeffs[k - 1];
        }
        let mut am = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0.0;
                for (l, ml) in m.iter().enumerate() {
                    s += a[i][l] * ml[j];
                }
                am[i][j] = s;
            }
        }
        let trace: f64 = (0..n).map(|i| am[i][i]).sum();
        coeffs.push(-trace / k as f64);
        m = am;
    }
    coeffs
}

fn eval(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// All roots of a monic real polynomial by Durand-Kerner iteration.
///
/// Simple roots come out near machine precision; repeated roots are only
/// good to roughly sqrt(machine epsilon), which is inherent in solving from
/// coefficients. Use [`integer_matrix_eigenvalues`] when the input is an
/// integer matrix and repeated eigenvalues must be resolved tightly.
pub fn poly_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32 + 1)).collect();
    let scale = coeffs.iter().fold(1.0f64, |m, c| m.max(c.abs()));
    for _ in 0..1000 {
        let mut shift = 0.0f64;
        for i in 0..n {
            let zi = roots[i];
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, &zj) in roots.iter().enumerate() {
                if j != i {
                    denom *= zi - zj;
                }
            }
            let delta = eval(coeffs, zi) / denom;
            roots[i] = zi - delta;
            shift = shift.max(delta.norm());
        }
        if shift < 1e-13 * scale.max(1.0) {
            break;
        }
    }
    roots
}

/// Roots of a monic quadratic x^2 + bx + c with integer coefficients and a
/// real spectrum, exact at repeated roots.
fn quadratic_roots(b: f64, c: f64) -> Vec<f64> {
    let disc = b * b - 4.0 * c; // exact for integer b, c in range
    assert!(disc >= 0.0, "complex quadratic roots (disc {disc})");
    if disc == 0.0 {
        return vec![-b / 2.0, -b / 2.0];
    }
    let s = disc.sqrt();
    // Evaluate the well-conditioned root first, recover the other from the
    // product of roots to dodge cancellation.
    let big = if b >= 0.0 { (-b - s) / 2.0 } else { (-b + s) / 2.0 };
    let small = if big == 0.0 { 0.0 } else { c / big };
    vec![big, small]
}

/// Roots of a monic cubic x^3 + bx^2 + cx + d with integer coefficients and
/// all roots real. The discriminant is computed in exact integer arithmetic,
/// so repeated roots take the exact rational branch instead of the
/// ill-conditioned trigonometric one.
fn cubic_roots(b: f64, c: f64, d: f64) -> Vec<f64> {
    let disc = 18.0 * b * c * d - 4.0 * b * b * b * d + b * b * c * c
        - 4.0 * c * c * c
        - 27.0 * d * d;
    assert!(disc >= 0.0, "complex cubic roots (disc {disc})");
    if disc == 0.0 {
        let p0 = b * b - 3.0 * c; // also exact
        if p0 == 0.0 {
            let r = -b / 3.0;
            return vec![r, r, r];
        }
        let double = (9.0 * d - b * c) / (2.0 * p0);
        let simple = -b - 2.0 * double;
        return vec![double, double, simple];
    }
    // Three distinct real roots: Viete's trigonometric form.
    let p = (3.0 * c - b * b) / 3.0;
    let q = (2.0 * b * b * b - 9.0 * b * c + 27.0 * d) / 27.0;
    let s = (-p / 3.0).sqrt();
    let arg = (3.0 * q / (2.0 * p * s)).clamp(-1.0, 1.0);
    let theta = arg.acos() / 3.0;
    (0..3)
        .map(|k| 2.0 * s * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() - b / 3.0)
        .collect()
}

/// Eigenvalues of a small symmetric integer matrix (n <= 4 after factoring
/// out zero eigenvalues), sorted non-increasing.
///
/// The characteristic polynomial of an integer matrix has exact integer
/// coefficients in f64, so zero eigenvalues strip off exactly and the
/// remaining factor of degree <= 3 is solved in closed form. This stays
/// accurate at repeated eigenvalues, where iterative root finders degrade.
pub fn integer_matrix_eigenvalues(a: &[Vec<f64>]) -> Vec<f64> {
    for row in a {
        for &v in row {
            assert!(
                v.fract() == 0.0 && v.abs() < 1e6,
                "entry {v} is not a small integer"
            );
        }
    }
    let mut coeffs = char_poly(a);
    for c in &mut coeffs {
        let r = c.round();
        assert!((*c - r).abs() < 1e-6, "coefficient {c} drifted from integer");
        *c = r;
    }
    let mut out = Vec::with_capacity(a.len());
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
        out.push(0.0);
        coeffs.pop();
    }
    match coeffs.len() - 1 {
        0 => {}
        1 => out.push(-coeffs[1]),
        2 => out.extend(quadratic_roots(coeffs[1], coeffs[2])),
        3 => out.extend(cubic_roots(coeffs[1], coeffs[2], coeffs[3])),
        deg => panic!("no closed form for residual degree {deg}"),
    }
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_of_diagonal_matrix() {
        // diag(1, 2): x^2 - 3x + 2
        let a = vec![vec![1.0, 0.0], vec![0.0, 2.0]];
        assert_eq!(char_poly(&a), vec![1.0, -3.0, 2.0]);
    }

    #[test]
    fn roots_of_known_cubic() {
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let mut roots: Vec<f64> = poly_roots(&[1.0, -6.0, 11.0, -6.0])
            .into_iter()
            .map(|r| r.re)
            .collect();
        roots.sort_by(f64::total_cmp);
        for (got, want) in roots.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn eigenvalues_of_triangle_laplacian() {
        // W - D for K_3: eigenvalues 0, -3, -3, with -3 repeated.
        let a = vec![
            vec![-2.0, 1.0, 1.0],
            vec![1.0, -2.0, 1.0],
            vec![1.0, 1.0, -2.0],
        ];
        let eig = integer_matrix_eigenvalues(&a);
        let want = [0.0, -3.0, -3.0];
        for (got, want) in eig.iter().zip(want) {
            assert!((got - want).abs() < 1e-12, "{eig:?}");
        }
    }

    #[test]
    fn eigenvalues_of_four_node_complete_laplacian() {
        let a = vec![
            vec![-3.0, 1.0, 1.0, 1.0],
            vec![1.0, -3.0, 1.0, 1.0],
            vec![1.0, 1.0, -3.0, 1.0],
            vec![1.0, 1.0, 1.0, -3.0],
        ];
        let eig = integer_matrix_eigenvalues(&a);
        let want = [0.0, -4.0, -4.0, -4.0];
        for (got, want) in eig.iter().zip(want) {
            assert!((got - want).abs() < 1e-12, "{eig:?}");
        }
    }

    #[test]
    fn distinct_integer_eigenvalues_stay_tight() {
        let a = vec![vec![3.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 2.0]];
        let eig = integer_matrix_eigenvalues(&a);
        for (got, want) in eig.iter().zip([3.0, 2.0, 1.0]) {
            assert!((got - want).abs() < 1e-12, "{eig:?}");
        }
    }

    #[test]
    fn zero_matrix_is_all_zero_eigenvalues() {
        let a = vec![vec![0.0; 4]; 4];
        assert_eq!(integer_matrix_eigenvalues(&a), vec![0.0; 4]);
    }

    #[test]
    fn repeated_roots_converge_loosely_under_durand_kerner() {
        // (x+1)^3: the iterative route only promises sqrt(eps) here.
        let roots = poly_roots(&[1.0, 3.0, 3.0, 1.0]);
        for r in roots {
            assert!((r.re + 1.0).abs() < 1e-4 && r.im.abs() < 1e-4, "{r}");
        }
    }
}
