//! Total-degree hyperinterpolation of degree n in the 3-cube for the product
//! Chebyshev measure.
//!
//! The node set lives on the Chebyshev-Lobatto grid C_{n+1} (n+2 points per
//! axis) restricted by a sigma pattern; coefficients of the orthonormal
//! Chebyshev expansion are computed either by the fast cosine-transform
//! pipeline or by direct weighted summation (the oracle path).

use crate::cheb1d::{cheb_t_hat, clamp_unit, lobatto_node, Parity};
use crate::cubature::SigmaPattern;
use crate::transform::{cosine_sum_3d, GridArray};
use crate::{Error, Result};

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Position of a grid point relative to the cube boundary: the number of
/// coordinates equal to +-1 (0 through 3).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryClass {
    Interior,
    Face,
    Edge,
    Vertex,
}

impl BoundaryClass {
    fn from_point(p: &[f64; 3]) -> BoundaryClass {
        // grid coordinates come from cosines; +-1 arise exactly at the
        // endpoint indices, so exact comparison is sound
        match p.iter().filter(|&&x| x == 1.0 || x == -1.0).count() {
            0 => BoundaryClass::Interior,
            1 => BoundaryClass::Face,
            2 => BoundaryClass::Edge,
            _ => BoundaryClass::Vertex,
        }
    }

    /// Weight factor relative to an interior point.
    pub fn weight_factor(self) -> f64 {
        match self {
            BoundaryClass::Interior => 1.0,
            BoundaryClass::Face => 0.5,
            BoundaryClass::Edge => 0.25,
            BoundaryClass::Vertex => 0.125,
        }
    }
}

/// The hyperinterpolation node set X_n with cubature weights and, for each
/// point, its index in the full grid C_{n+1}^3.
#[derive(Debug, Clone)]
pub struct HyperNodeSet {
    pub n: usize,
    pub sigma: SigmaPattern,
    pub points: Vec<[f64; 3]>,
    pub weights: Vec<f64>,
    pub grid_index: Vec<[usize; 3]>,
    pub boundary_class: Vec<BoundaryClass>,
}

impl HyperNodeSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Hyperinterpolation coefficients c_alpha over the simplex |alpha| <= n,
/// stored in graded lexicographic order.
#[derive(Debug, Clone)]
pub struct CoeffTensor {
    n: usize,
    entries: Vec<([usize; 3], f64)>,
}

impl CoeffTensor {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in graded lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&[usize; 3], f64)> {
        self.entries.iter().map(|(a, c)| (a, *c))
    }

    pub fn get(&self, alpha: [usize; 3]) -> Option<f64> {
        self.entries
            .binary_search_by_key(&grlex_key(alpha), |(a, _)| grlex_key(*a))
            .ok()
            .map(|i| self.entries[i].1)
    }

    /// Number of coefficients of a degree-n tensor: dim of the total-degree
    /// space, (n+1)(n+2)(n+3)/6.
    pub fn expected_len(n: usize) -> usize {
        (n + 1) * (n + 2) * (n + 3) / 6
    }
}

fn grlex_key(alpha: [usize; 3]) -> (usize, [usize; 3]) {
    (alpha[0] + alpha[1] + alpha[2], alpha)
}

/// Multi-indices |alpha| <= n in graded lexicographic order.
pub fn simplex_indices(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(CoeffTensor::expected_len(n));
    for deg in 0..=n {
        for a1 in 0..=deg {
            for a2 in 0..=(deg - a1) {
                out.push([a1, a2, deg - a1 - a2]);
            }
        }
    }
    out
}

fn indices_of_parity(nu: usize, parity: Parity) -> Vec<usize> {
    let start = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    (start..=nu).step_by(2).collect()
}

/// Construct the hyperinterpolation point set X_n for degree n and sigma.
///
/// X_n is the disjoint union of the sigma-restricted product grid and the
/// flipped one inside C_{n+1}^3; the weight of a point is 4/(n+1)^3 times
/// 1, 1/2, 1/4 or 1/8 according to its boundary class.
pub fn hyper_node_set(n: usize, sigma: &SigmaPattern) -> Result<HyperNodeSet> {
    if n < 1 {
        return Err(Error::InvalidArgument("hyperinterpolation needs n >= 1".into()));
    }
    if sigma.len() != 3 {
        return Err(Error::InvalidArgument(format!(
            "sigma pattern must have length 3, got {}",
            sigma.len()
        )));
    }
    let nu = n + 1;
    let base = 4.0 / (nu as f64).powi(3);

    let mut set = HyperNodeSet {
        n,
        sigma: sigma.clone(),
        points: Vec::new(),
        weights: Vec::new(),
        grid_index: Vec::new(),
        boundary_class: Vec::new(),
    };
    for pattern in [sigma.clone(), sigma.flip()] {
        let axes: Vec<Vec<usize>> = pattern
            .entries()
            .iter()
            .map(|&p| indices_of_parity(nu, p))
            .collect();
        for &i in &axes[0] {
            for &j in &axes[1] {
                for &k in &axes[2] {
                    let p = [lobatto_node(i, nu), lobatto_node(j, nu), lobatto_node(k, nu)];
                    let class = BoundaryClass::from_point(&p);
                    set.points.push(p);
                    set.weights.push(base * class.weight_factor());
                    set.grid_index.push([i, j, k]);
                    set.boundary_class.push(class);
                }
            }
        }
    }
    Ok(set)
}

/// Evaluate `f` on X_n and scatter w*f into the full (n+2)^3 grid, zero off
/// X_n. `f` is called exactly card(X_n) times.
pub fn build_grid_values(f: impl Fn(&[f64; 3]) -> f64, nodeset: &HyperNodeSet) -> GridArray {
    let nu = nodeset.n + 1;
    let mut grid = GridArray::zeros(nu).expect("nu >= 2 for any valid node set");
    for ((p, &w), idx) in nodeset
        .points
        .iter()
        .zip(&nodeset.weights)
        .zip(&nodeset.grid_index)
    {
        grid.values_mut()[[idx[0], idx[1], idx[2]]] = w * f(p);
    }
    grid
}

fn beta(a: usize) -> f64 {
    if a == 0 {
        1.0
    } else {
        SQRT_2
    }
}

/// Fast hyperinterpolation coefficients: cosine transform of the weighted
/// grid values, scaled by the orthonormal basis factors and truncated to the
/// total-degree simplex.
pub fn hyper_coeffs(f: impl Fn(&[f64; 3]) -> f64, n: usize, sigma: &SigmaPattern) -> Result<CoeffTensor> {
    let nodeset = hyper_node_set(n, sigma)?;
    let grid = build_grid_values(f, &nodeset);
    let raw = cosine_sum_3d(&grid)?;
    let entries = simplex_indices(n)
        .into_iter()
        .map(|a| {
            let scale = beta(a[0]) * beta(a[1]) * beta(a[2]);
            (a, scale * raw[[a[0], a[1], a[2]]])
        })
        .collect();
    Ok(CoeffTensor { n, entries })
}

/// Coefficients by direct weighted summation over X_n. Oracle for
/// [`hyper_coeffs`]; O(card(X_n) n^3) cost.
pub fn hyper_coeffs_direct(
    f: impl Fn(&[f64; 3]) -> f64,
    n: usize,
    sigma: &SigmaPattern,
) -> Result<CoeffTensor> {
    let nodeset = hyper_node_set(n, sigma)?;
    let alphas = simplex_indices(n);
    let mut acc = vec![0.0; alphas.len()];
    for (p, &w) in nodeset.points.iter().zip(&nodeset.weights) {
        let wf = w * f(p);
        let basis: Vec<Vec<f64>> = p
            .iter()
            .map(|&x| (0..=n).map(|k| cheb_t_hat(k as u32, x).unwrap()).collect())
            .collect();
        for (slot, a) in acc.iter_mut().zip(&alphas) {
            *slot += wf * basis[0][a[0]] * basis[1][a[1]] * basis[2][a[2]];
        }
    }
    Ok(CoeffTensor {
        n,
        entries: alphas.into_iter().zip(acc).collect(),
    })
}

/// Evaluate the hyperinterpolant at a point of the cube.
pub fn hyper_eval(coeffs: &CoeffTensor, x: [f64; 3]) -> Result<f64> {
    let n = coeffs.n;
    let mut basis = [const { Vec::new() }; 3];
    for (s, slot) in basis.iter_mut().enumerate() {
        let xs = clamp_unit(x[s])?;
        *slot = (0..=n)
            .map(|k| cheb_t_hat(k as u32, xs).unwrap())
            .collect::<Vec<f64>>();
    }
    Ok(coeffs
        .iter()
        .map(|(a, c)| c * basis[0][a[0]] * basis[1][a[1]] * basis[2][a[2]])
        .sum())
}

/// Error of `approx` against `exact`, relative to the maximum deviation of
/// `exact` from its mean.
pub fn relative_error(approx: &[f64], exact: &[f64]) -> Result<f64> {
    if approx.len() != exact.len() {
        return Err(Error::InvalidArgument("length mismatch in relative_error".into()));
    }
    if exact.is_empty() {
        return Err(Error::InvalidArgument("relative_error needs nonempty input".into()));
    }
    let mean = exact.iter().sum::<f64>() / exact.len() as f64;
    let dev = exact
        .iter()
        .map(|&e| (e - mean).abs())
        .fold(0.0f64, f64::max);
    if dev <= 1e-15 {
        return Err(Error::Degenerate("exact values are constant; relative error undefined".into()));
    }
    let err = approx
        .iter()
        .zip(exact)
        .map(|(&a, &e)| (a - e).abs())
        .fold(0.0f64, f64::max);
    Ok(err / dev)
}

/// Equispaced control grid of `m` points per axis, endpoints included.
pub fn control_grid(m: usize) -> Vec<[f64; 3]> {
    assert!(m >= 2);
    let axis: Vec<f64> = (0..m)
        .map(|i| -1.0 + 2.0 * i as f64 / (m - 1) as f64)
        .collect();
    let mut out = Vec::with_capacity(m * m * m);
    for &x in &axis {
        for &y in &axis {
            for &z in &axis {
                out.push([x, y, z]);
            }
        }
    }
    out
}
