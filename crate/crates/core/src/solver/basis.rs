//! Orthonormal Legendre basis on the reference cell `[−1/2, 1/2]^d`.
//!
//! `φ_i(ξ) = √(2i+1) · P_i(2ξ)` has unit mean square, so the coefficient of
//! the constant mode is the cell average. In 2D the tensor product
//! `φ_i(ξ)φ_j(η)` is stored at mode index `i + (k+1)·j`.

use crate::quadrature::legendre_and_derivative;

/// Number of modes of the degree-`k` space in `dim` dimensions.
pub fn mode_count(dim: usize, k: usize) -> usize {
    if dim == 1 {
        k + 1
    } else {
        (k + 1) * (k + 1)
    }
}

/// `φ_i(ξ)` for one index.
pub fn legendre(i: usize, xi: f64) -> f64 {
    (2.0 * i as f64 + 1.0).sqrt() * legendre_and_derivative(i, 2.0 * xi).0
}

/// `dφ_i/dξ`.
pub fn legendre_derivative(i: usize, xi: f64) -> f64 {
    2.0 * (2.0 * i as f64 + 1.0).sqrt() * legendre_and_derivative(i, 2.0 * xi).1
}

fn legendre_row(k: usize, xi: f64) -> Vec<f64> {
    (0..=k).map(|i| legendre(i, xi)).collect()
}

fn legendre_derivative_row(k: usize, xi: f64) -> Vec<f64> {
    (0..=k).map(|i| legendre_derivative(i, xi)).collect()
}

/// All basis values at a reference point (the second coordinate is ignored
/// in 1D).
pub fn tabulate(dim: usize, k: usize, r: [f64; 2]) -> Vec<f64> {
    let px = legendre_row(k, r[0]);
    if dim == 1 {
        return px;
    }
    let py = legendre_row(k, r[1]);
    let mut out = Vec::with_capacity(mode_count(2, k));
    for &b in &py {
        for &a in &px {
            out.push(a * b);
        }
    }
    out
}

/// Reference-coordinate gradients of all basis functions.
pub fn tabulate_gradient(dim: usize, k: usize, r: [f64; 2]) -> Vec<[f64; 2]> {
    let px = legendre_row(k, r[0]);
    let dx = legendre_derivative_row(k, r[0]);
    if dim == 1 {
        return dx.into_iter().map(|d| [d, 0.0]).collect();
    }
    let py = legendre_row(k, r[1]);
    let dy = legendre_derivative_row(k, r[1]);
    let mut out = Vec::with_capacity(mode_count(2, k));
    for j in 0..=k {
        for i in 0..=k {
            out.push([dx[i] * py[j], px[i] * dy[j]]);
        }
    }
    out
}

/// Basis values at a fixed list of reference points, row-major by point.
#[derive(Debug, Clone)]
pub struct SampleTable {
    pub dim: usize,
    pub degree: usize,
    pub modes: usize,
    pub points: Vec<[f64; 2]>,
    pub values: Vec<f64>,
}

impl SampleTable {
    pub fn new(dim: usize, degree: usize, points: Vec<[f64; 2]>) -> Self {
        let modes = mode_count(dim, degree);
        let mut values = Vec::with_capacity(points.len() * modes);
        for &p in &points {
            values.extend(tabulate(dim, degree, p));
        }
        Self {
            dim,
            degree,
            modes,
            points,
            values,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn row(&self, point: usize) -> &[f64] {
        &self.values[point * self.modes..(point + 1) * self.modes]
    }

    /// Evaluates a modal expansion at one of the tabulated points.
    #[inline]
    pub fn eval<S: crate::euler::ConservedState>(&self, coeffs: &[S], point: usize) -> S {
        let row = self.row(point);
        let mut acc = coeffs[0] * row[0];
        for m in 1..self.modes {
            acc += coeffs[m] * row[m];
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::gauss_legendre;

    #[test]
    fn orthonormal_1d() {
        let rule = gauss_legendre(8).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let g = rule.mean(|x| legendre(i, x) * legendre(j, x));
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((g - expect).abs() < 1e-13, "({i},{j}) -> {g}");
            }
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let h = 1e-6;
        for i in 0..5 {
            for &x in &[-0.5, -0.31, 0.0, 0.2, 0.5] {
                let fd = (legendre(i, x + h) - legendre(i, x - h)) / (2.0 * h);
                assert!((fd - legendre_derivative(i, x)).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn tensor_layout() {
        let k = 2;
        let r = [0.13, -0.27];
        let v = tabulate(2, k, r);
        let g = tabulate_gradient(2, k, r);
        assert_eq!(v.len(), 9);
        // mode 5 = (i=2, j=1)
        assert!((v[5] - legendre(2, r[0]) * legendre(1, r[1])).abs() < 1e-15);
        assert!((g[5][0] - legendre_derivative(2, r[0]) * legendre(1, r[1])).abs() < 1e-14);
        assert!((g[5][1] - legendre(2, r[0]) * legendre_derivative(1, r[1])).abs() < 1e-14);
        assert_eq!(v[0], 1.0);
    }
}
