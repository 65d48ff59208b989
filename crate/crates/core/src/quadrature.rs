//! Gauss-Legendre and Gauss-Lobatto rules on the reference interval
//! `[−1/2, 1/2]`, and the per-cell test sets on which region membership is
//! enforced.
//!
//! A test set is a point multiset with positive weights that reproduces the
//! cell average of every polynomial in the trial space exactly. The limiter
//! only needs the distinct points; the decomposition needs the multiset.

use crate::error::{IrpError, Result};
use crate::euler::ConservedState;
use crate::solver::basis;
use crate::solver::polynomial::CellPolynomial;

/// Nodes and weights on `[−1/2, 1/2]`; weights sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Approximates the mean of `f` over `[−1/2, 1/2]`.
    pub fn mean<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    fn from_symmetric_unit(nodes: Vec<f64>, weights: Vec<f64>) -> Self {
        // [-1, 1] with total weight 2  ->  [-1/2, 1/2] with total weight 1
        Self {
            nodes: nodes.into_iter().map(|x| 0.5 * x).collect(),
            weights: weights.into_iter().map(|w| 0.5 * w).collect(),
        }
    }
}

/// Legendre polynomial `P_n(x)` and its derivative on `[−1, 1]`.
pub fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let (mut p_prev, mut p) = (1.0, x);
    for j in 2..=n {
        let jf = j as f64;
        let p_next = ((2.0 * jf - 1.0) * x * p - (jf - 1.0) * p_prev) / jf;
        p_prev = p;
        p = p_next;
    }
    // P'_n from the three-term relation; at |x| = 1 use the closed form.
    let nf = n as f64;
    let dp = if (1.0 - x * x).abs() < 1e-300 {
        let sign = if x > 0.0 {
            1.0
        } else {
            (-1.0f64).powi(n as i32 - 1)
        };
        sign * nf * (nf + 1.0) / 2.0
    } else {
        nf * (p_prev - x * p) / (1.0 - x * x)
    };
    (p, dp)
}

/// `L`-point Gauss-Legendre rule, exact to degree `2L − 1`.
pub fn gauss_legendre(points: usize) -> Result<QuadratureRule> {
    let rule = match points {
        0 => {
            return Err(IrpError::InvalidArgument(
                "Gauss rule needs at least one point".into(),
            ))
        }
        1 => QuadratureRule::from_symmetric_unit(vec![0.0], vec![2.0]),
        2 => {
            let a = 1.0 / 3f64.sqrt();
            QuadratureRule::from_symmetric_unit(vec![-a, a], vec![1.0, 1.0])
        }
        3 => {
            let a = (3.0f64 / 5.0).sqrt();
            QuadratureRule::from_symmetric_unit(
                vec![-a, 0.0, a],
                vec![5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0],
            )
        }
        n => {
            let mut nodes = vec![0.0; n];
            let mut weights = vec![0.0; n];
            let nf = n as f64;
            for i in 0..n {
                let mut x = -(std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
                for _ in 0..100 {
                    let (p, dp) = legendre_and_derivative(n, x);
                    let dx = p / dp;
                    x -= dx;
                    if dx.abs() < 1e-16 {
                        break;
                    }
                }
                let (_, dp) = legendre_and_derivative(n, x);
                nodes[i] = x;
                weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
            }
            QuadratureRule::from_symmetric_unit(nodes, weights)
        }
    };
    Ok(rule)
}

/// `N`-point Gauss-Lobatto rule including both endpoints, exact to degree
/// `2N − 3`. The endpoint weights equal `1/(N(N−1))`.
pub fn gauss_lobatto(points: usize) -> Result<QuadratureRule> {
    let rule = match points {
        0 | 1 => {
            return Err(IrpError::InvalidArgument(
                "Gauss-Lobatto rule needs at least two points".into(),
            ))
        }
        2 => QuadratureRule::from_symmetric_unit(vec![-1.0, 1.0], vec![1.0, 1.0]),
        3 => QuadratureRule::from_symmetric_unit(
            vec![-1.0, 0.0, 1.0],
            vec![1.0 / 3.0, 4.0 / 3.0, 1.0 / 3.0],
        ),
        4 => {
            let a = 1.0 / 5f64.sqrt();
            QuadratureRule::from_symmetric_unit(
                vec![-1.0, -a, a, 1.0],
                vec![1.0 / 6.0, 5.0 / 6.0, 5.0 / 6.0, 1.0 / 6.0],
            )
        }
        n => {
            // Interior nodes are the roots of P'_{n-1}.
            let deg = n - 1;
            let df = deg as f64;
            let mut nodes = vec![-1.0; n];
            nodes[n - 1] = 1.0;
            for (i, node) in nodes.iter_mut().enumerate().take(n - 1).skip(1) {
                let mut x = -(std::f64::consts::PI * i as f64 / df).cos();
                for _ in 0..100 {
                    let (p, dp) = legendre_and_derivative(deg, x);
                    // (1 - x^2) P'' = 2x P' - n(n+1) P
                    let d2p = (2.0 * x * dp - df * (df + 1.0) * p) / (1.0 - x * x);
                    let dx = dp / d2p;
                    x -= dx;
                    if dx.abs() < 1e-16 {
                        break;
                    }
                }
                *node = x;
            }
            let weights = nodes
                .iter()
                .map(|&x| {
                    let (p, _) = legendre_and_derivative(deg, x);
                    2.0 / (df * (df + 1.0) * p * p)
                })
                .collect();
            QuadratureRule::from_symmetric_unit(nodes, weights)
        }
    };
    Ok(rule)
}

/// Smallest Lobatto point count with `2N − 3 ≥ k`, i.e. `⌈(k+3)/2⌉`.
pub fn lobatto_count_for_degree(k: usize) -> usize {
    (k + 4) / 2
}

/// Endpoint weight `ŵ₁` of the Lobatto rule used for degree `k`.
pub fn lobatto_endpoint_weight(k: usize) -> f64 {
    let n = lobatto_count_for_degree(k) as f64;
    1.0 / (n * (n - 1.0))
}

/// Whether a test point sits on the cell boundary or strictly inside.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointRole {
    Interface,
    Interior,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestPoint {
    /// Coordinates in the reference cell `[−1/2, 1/2]^d` (unused axes are 0).
    pub reference: [f64; 2],
    /// Physical coordinates.
    pub physical: [f64; 2],
    pub role: PointRole,
    /// Weight in the cell-average decomposition.
    pub weight: f64,
}

/// Test set of one cell, stored as the weighted multiset of the average
/// decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct TestSet {
    pub dim: usize,
    pub degree: usize,
    pub points: Vec<TestPoint>,
}

impl TestSet {
    pub fn weight_sum(&self) -> f64 {
        self.points.iter().map(|p| p.weight).sum()
    }

    /// Distinct reference points; duplicates of the multiset collapse.
    pub fn unique_reference_points(&self) -> Vec<[f64; 2]> {
        let mut out: Vec<[f64; 2]> = Vec::with_capacity(self.points.len());
        for p in &self.points {
            let dup = out.iter().any(|q| {
                (q[0] - p.reference[0]).abs() < 1e-14 && (q[1] - p.reference[1]).abs() < 1e-14
            });
            if !dup {
                out.push(p.reference);
            }
        }
        out
    }

    /// Distinct physical points.
    pub fn unique_physical_points(&self, center: [f64; 2], extent: [f64; 2]) -> Vec<[f64; 2]> {
        self.unique_reference_points()
            .into_iter()
            .map(|r| [center[0] + r[0] * extent[0], center[1] + r[1] * extent[1]])
            .collect()
    }
}

/// Lobatto test set of a 1D cell `[a, b]`.
pub fn test_set_1d(k: usize, cell: [f64; 2]) -> Result<TestSet> {
    let [a, b] = cell;
    if !(b > a) {
        return Err(IrpError::InvalidArgument(format!(
            "degenerate cell [{a}, {b}]"
        )));
    }
    let rule = gauss_lobatto(lobatto_count_for_degree(k))?;
    let n = rule.len();
    let (center, h) = (0.5 * (a + b), b - a);
    let points = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .enumerate()
        .map(|(i, (&x, &w))| {
            let physical = if i == 0 {
                a
            } else if i == n - 1 {
                b
            } else {
                center + x * h
            };
            TestPoint {
                reference: [x, 0.0],
                physical: [physical, 0.0],
                role: if i == 0 || i == n - 1 {
                    PointRole::Interface
                } else {
                    PointRole::Interior
                },
                weight: w,
            }
        })
        .collect();
    Ok(TestSet {
        dim: 1,
        degree: k,
        points,
    })
}

/// Test set `(S^x × Ŝ^y) ∪ (Ŝ^x × S^y)` of a rectangle `[x₀,x₁] × [y₀,y₁]`,
/// with `L = k + 1` Gauss points and `N = ⌈(k+3)/2⌉` Lobatto points.
pub fn test_set_rect(k: usize, x: [f64; 2], y: [f64; 2]) -> Result<TestSet> {
    if !(x[1] > x[0]) || !(y[1] > y[0]) {
        return Err(IrpError::InvalidArgument(format!(
            "degenerate rectangle [{}, {}] x [{}, {}]",
            x[0], x[1], y[0], y[1]
        )));
    }
    let gauss = gauss_legendre(k + 1)?;
    let lobatto = gauss_lobatto(lobatto_count_for_degree(k))?;
    let center = [0.5 * (x[0] + x[1]), 0.5 * (y[0] + y[1])];
    let extent = [x[1] - x[0], y[1] - y[0]];
    let n = lobatto.len();
    let mut points = Vec::with_capacity(2 * gauss.len() * n);
    for transpose in [false, true] {
        for (bi, (&g, &wg)) in gauss.nodes.iter().zip(&gauss.weights).enumerate() {
            let _ = bi;
            for (ai, (&l, &wl)) in lobatto.nodes.iter().zip(&lobatto.weights).enumerate() {
                let reference = if transpose { [l, g] } else { [g, l] };
                let on_edge = ai == 0 || ai == n - 1;
                points.push(TestPoint {
                    reference,
                    physical: [
                        center[0] + reference[0] * extent[0],
                        center[1] + reference[1] * extent[1],
                    ],
                    role: if on_edge {
                        PointRole::Interface
                    } else {
                        PointRole::Interior
                    },
                    weight: 0.5 * wg * wl,
                });
            }
        }
    }
    Ok(TestSet {
        dim: 2,
        degree: k,
        points,
    })
}

/// Barycentric test points of a triangle for degree `k ≥ 1`: `3·N·(k+1)`
/// triples built from Lobatto points `û` and Gauss points `v` on
/// `[−1/2, 1/2]`.
pub fn test_set_triangle(k: usize) -> Result<Vec<[f64; 3]>> {
    if k < 1 {
        return Err(IrpError::InvalidArgument(
            "triangle test set needs k >= 1".into(),
        ));
    }
    let lobatto = gauss_lobatto(lobatto_count_for_degree(k))?;
    let gauss = gauss_legendre(k + 1)?;
    let mut out = Vec::with_capacity(3 * lobatto.len() * gauss.len());
    for rotation in 0..3 {
        for &u in &lobatto.nodes {
            for &v in &gauss.nodes {
                let a = 0.5 + v;
                let b = (0.5 + u) * (0.5 - v);
                let c = (0.5 - u) * (0.5 - v);
                out.push(match rotation {
                    0 => [a, b, c],
                    1 => [c, a, b],
                    _ => [b, c, a],
                });
            }
        }
    }
    Ok(out)
}

/// `|Σ weight · poly(point) − average(poly)|`, maximised over components.
pub fn verify_decomposition<S: ConservedState>(poly: &CellPolynomial<S>, ts: &TestSet) -> f64 {
    let mut sum = S::default();
    for p in &ts.points {
        let phi = basis::tabulate(ts.dim, poly.degree, p.reference);
        sum += poly.eval(&phi) * p.weight;
    }
    (sum - poly.average()).max_abs()
}
