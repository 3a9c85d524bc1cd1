//! Nontensorial Clenshaw-Curtis-like cubature on the 3-cube for the Lebesgue
//! measure, obtained by integrating the Chebyshev-measure hyperinterpolant.
//!
//! With h = 1/w the orthogonal moments m_alpha reduce to plain integrals of
//! the orthonormal Chebyshev basis over the cube, and the rule's weights are
//! lambda_xi = w_xi sum_{|alpha|<=n} p_alpha(xi) m_alpha. Weights may be
//! negative; their absolute sum stays bounded (and tends to the volume 8).

use crate::cheb1d::cheb_t_hat;
use crate::cubature::SigmaPattern;
use crate::hyper3::{hyper_node_set, simplex_indices, CoeffTensor, HyperNodeSet};
use crate::Result;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Integral of the orthonormal Chebyshev polynomial over [-1,1]:
/// 2 for k = 0, 0 for odd k, 2*sqrt(2)/(1-k^2) for even k > 0.
pub fn moment_1d(k: usize) -> f64 {
    if k == 0 {
        2.0
    } else if k % 2 == 1 {
        0.0
    } else {
        SQRT_2 * 2.0 / (1.0 - (k * k) as f64)
    }
}

/// Orthogonal moments m_alpha = prod_s moment_1d(alpha_s) over |alpha| <= n.
#[derive(Debug, Clone)]
pub struct MomentVector {
    n: usize,
    entries: Vec<([usize; 3], f64)>,
}

impl MomentVector {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize; 3], f64)> {
        self.entries.iter().map(|(a, m)| (a, *m))
    }

    pub fn get(&self, alpha: [usize; 3]) -> Option<f64> {
        self.entries
            .iter()
            .find(|(a, _)| *a == alpha)
            .map(|(_, m)| *m)
    }
}

/// Moments of the product basis for the Lebesgue specialization h = 1/w.
pub fn moments(n: usize) -> MomentVector {
    let entries = simplex_indices(n)
        .into_iter()
        .map(|a| (a, moment_1d(a[0]) * moment_1d(a[1]) * moment_1d(a[2])))
        .collect();
    MomentVector { n, entries }
}

/// The Clenshaw-Curtis-like rule: nodes of X_n with Lebesgue weights lambda.
#[derive(Debug, Clone)]
pub struct CCRule {
    pub nodes: HyperNodeSet,
    pub lambda: Vec<f64>,
}

impl CCRule {
    pub fn degree(&self) -> usize {
        self.nodes.n
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Approximate the Lebesgue integral of `f` over [-1,1]^3.
    pub fn integrate(&self, f: impl Fn(&[f64; 3]) -> f64) -> f64 {
        self.nodes
            .points
            .iter()
            .zip(&self.lambda)
            .map(|(p, &l)| l * f(p))
            .sum()
    }

    /// Sum of |lambda|, the stability indicator of the rule.
    pub fn sum_abs_weights(&self) -> f64 {
        self.lambda.iter().map(|l| l.abs()).sum()
    }
}

/// Build the degree-n rule for sigma. Exact for every polynomial of total
/// degree <= n against the Lebesgue measure.
///
/// Per node, the sum over the simplex is evaluated with per-axis moment
/// products and suffix sums over the third index, which regroups the direct
/// double sum into O(n^2) work per node.
pub fn cc_rule(n: usize, sigma: &SigmaPattern) -> Result<CCRule> {
    let nodes = hyper_node_set(n, sigma)?;
    let mut lambda = Vec::with_capacity(nodes.len());
    for (p, &w) in nodes.points.iter().zip(&nodes.weights) {
        let axis: Vec<Vec<f64>> = p
            .iter()
            .map(|&x| {
                (0..=n)
                    .map(|k| cheb_t_hat(k as u32, x).unwrap() * moment_1d(k))
                    .collect()
            })
            .collect();
        // prefix[c] = sum_{k<=c} axis[2][k]
        let mut prefix = Vec::with_capacity(n + 1);
        let mut acc = 0.0;
        for &v in &axis[2] {
            acc += v;
            prefix.push(acc);
        }
        let mut total = 0.0;
        for a1 in 0..=n {
            for a2 in 0..=(n - a1) {
                total += axis[0][a1] * axis[1][a2] * prefix[n - a1 - a2];
            }
        }
        lambda.push(w * total);
    }
    Ok(CCRule { nodes, lambda })
}

/// Direct evaluation of the rule's defining sum, for validation.
pub fn cc_rule_direct(n: usize, sigma: &SigmaPattern) -> Result<CCRule> {
    let nodes = hyper_node_set(n, sigma)?;
    let mom = moments(n);
    let mut lambda = Vec::with_capacity(nodes.len());
    for (p, &w) in nodes.points.iter().zip(&nodes.weights) {
        let mut total = 0.0;
        for (a, m) in mom.iter() {
            let pa = cheb_t_hat(a[0] as u32, p[0]).unwrap()
                * cheb_t_hat(a[1] as u32, p[1]).unwrap()
                * cheb_t_hat(a[2] as u32, p[2]).unwrap();
            total += pa * m;
        }
        lambda.push(w * total);
    }
    Ok(CCRule { nodes, lambda })
}

/// Build the rule and integrate `f` in one call.
pub fn cc_integrate(f: impl Fn(&[f64; 3]) -> f64, n: usize, sigma: &SigmaPattern) -> Result<f64> {
    Ok(cc_rule(n, sigma)?.integrate(f))
}

/// Integral of the hyperinterpolant of `f`: sum of c_alpha m_alpha. Equals
/// the rule's node sum by construction; used as a cross-check.
pub fn integrate_coeffs(coeffs: &CoeffTensor) -> f64 {
    let mom = moments(coeffs.degree());
    coeffs
        .iter()
        .zip(mom.iter())
        .map(|((a1, c), (a2, m))| {
            debug_assert_eq!(a1, a2);
            c * m
        })
        .sum()
}
