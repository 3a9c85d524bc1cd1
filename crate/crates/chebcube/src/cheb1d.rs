//! One-dimensional Chebyshev machinery: polynomial evaluation, Gauss and
//! Gauss-Lobatto rules for the normalized Chebyshev weight, and the even/odd
//! factorization of the Lobatto rule.
//!
//! All rules target the normalized measure w(x) dx = dx / (pi sqrt(1-x^2)),
//! so full-rule weights sum to 1 and each half sums to 1/2.

use std::f64::consts::PI;

use crate::{Error, Result};

/// Tolerance band outside [-1,1] that is snapped back to the endpoint.
pub const CLAMP_TOL: f64 = 1e-12;

/// Index parity selecting one half of the factored Lobatto sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Parity::Even => 'E',
            Parity::Odd => 'O',
        }
    }
}

/// Which quadrature functional a [`Rule1D`] represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleLabel {
    Gauss,
    Lobatto,
    HalfEven,
    HalfOdd,
}

/// Nodes and weights of a one-dimensional quadrature functional.
///
/// Nodes are stored in decreasing abscissa order (index order of the defining
/// cosine), so grids at different parameters nest bit-identically where the
/// defining angles coincide.
#[derive(Debug, Clone)]
pub struct Rule1D {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub label: RuleLabel,
    pub n: usize,
}

impl Rule1D {
    /// Weighted sum of `f` over the rule's nodes, in node order.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Snap `x` into [-1,1], rejecting values beyond the clamping band.
pub fn clamp_unit(x: f64) -> Result<f64> {
    if x.abs() <= 1.0 {
        Ok(x)
    } else if x.abs() <= 1.0 + CLAMP_TOL {
        Ok(x.signum())
    } else {
        Err(Error::Domain(format!("abscissa {x} outside [-1,1]")))
    }
}

/// Chebyshev polynomial of the first kind, T_k(x) = cos(k arccos x).
///
/// The trigonometric form is used directly for uniform accuracy near the
/// endpoints.
pub fn cheb_t(k: u32, x: f64) -> Result<f64> {
    let x = clamp_unit(x)?;
    Ok((k as f64 * x.acos()).cos())
}

/// Orthonormal Chebyshev polynomial for the normalized weight:
/// That is T_k scaled by sqrt(2) for k > 0 and unscaled for k = 0.
pub fn cheb_t_hat(k: u32, x: f64) -> Result<f64> {
    let t = cheb_t(k, x)?;
    Ok(if k == 0 { t } else { std::f64::consts::SQRT_2 * t })
}

/// n-point Gauss-Chebyshev rule: nodes cos((2k-1)pi/2n), uniform weights 1/n.
/// Exact on polynomials of degree 2n-1 for the normalized Chebyshev measure.
pub fn gauss_chebyshev_rule(n: usize) -> Result<Rule1D> {
    if n == 0 {
        return Err(Error::InvalidArgument("gauss rule needs n >= 1".into()));
    }
    let nodes: Vec<f64> = (1..=n)
        .map(|k| ((2 * k - 1) as f64 * PI / (2 * n) as f64).cos())
        .collect();
    let weights = vec![1.0 / n as f64; n];
    Ok(Rule1D {
        nodes,
        weights,
        label: RuleLabel::Gauss,
        n,
    })
}

/// (n+1)-point Gauss-Lobatto rule for the Chebyshev weight: nodes cos(j pi/n),
/// interior weights 1/n, endpoint weights 1/(2n). Exact on degree 2n-1.
pub fn gauss_lobatto_rule(n: usize) -> Result<Rule1D> {
    if n == 0 {
        return Err(Error::InvalidArgument("lobatto rule needs n >= 1".into()));
    }
    let nodes: Vec<f64> = (0..=n).map(|j| lobatto_node(j, n)).collect();
    let mut weights = vec![1.0 / n as f64; n + 1];
    weights[0] = 1.0 / (2 * n) as f64;
    weights[n] = 1.0 / (2 * n) as f64;
    Ok(Rule1D {
        nodes,
        weights,
        label: RuleLabel::Lobatto,
        n,
    })
}

/// j-th Chebyshev-Lobatto point cos(j pi / n). Endpoints are produced exactly.
pub fn lobatto_node(j: usize, n: usize) -> f64 {
    if j == 0 {
        1.0
    } else if j == n {
        -1.0
    } else {
        (j as f64 * PI / n as f64).cos()
    }
}

/// Split the Lobatto rule into its even-index and odd-index halves.
///
/// The halves partition the node set by index parity; each half keeps the
/// Lobatto weight of its nodes, so the two halves recombine to the full rule
/// and each sums to 1/2.
pub fn split_lobatto(n: usize) -> Result<(Rule1D, Rule1D)> {
    if n < 2 {
        return Err(Error::InvalidArgument("split_lobatto needs n >= 2".into()));
    }
    let full = gauss_lobatto_rule(n)?;
    let mut halves = [
        Rule1D {
            nodes: Vec::new(),
            weights: Vec::new(),
            label: RuleLabel::HalfEven,
            n,
        },
        Rule1D {
            nodes: Vec::new(),
            weights: Vec::new(),
            label: RuleLabel::HalfOdd,
            n,
        },
    ];
    for j in 0..=n {
        let h = &mut halves[j % 2];
        h.nodes.push(full.nodes[j]);
        h.weights.push(full.weights[j]);
    }
    let [even, odd] = halves;
    Ok((even, odd))
}

/// The half selected by `parity`.
pub fn lobatto_half(n: usize, parity: Parity) -> Result<Rule1D> {
    let (even, odd) = split_lobatto(n)?;
    Ok(match parity {
        Parity::Even => even,
        Parity::Odd => odd,
    })
}

/// Closed-form value of the half-rule applied to T_k.
///
/// I^E_n T_k is 1/2 when n divides k and 0 otherwise. I^O_n T_k is 1/2 when k
/// is an even multiple of n, -1/2 when k is an odd multiple, and 0 otherwise.
pub fn lemma_value(parity: Parity, n: usize, k: u32) -> f64 {
    assert!(n >= 2, "lemma_value needs n >= 2");
    let k = k as usize;
    if k % n != 0 {
        return 0.0;
    }
    match parity {
        Parity::Even => 0.5,
        Parity::Odd => {
            if (k / n) % 2 == 0 {
                0.5
            } else {
                -0.5
            }
        }
    }
}
