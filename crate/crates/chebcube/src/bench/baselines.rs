//! Baseline tensor-product quadrature families: Gauss-Chebyshev (plain and
//! Lobatto), Gauss-Legendre (plain and Lobatto), and classical
//! Clenshaw-Curtis.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::cheb1d::{gauss_chebyshev_rule, gauss_lobatto_rule, Rule1D, RuleLabel};
use crate::cubature::{tensor_product, CubatureRule, Measure};
use crate::{Error, Result};

const NEWTON_TOL: f64 = 1e-15;
const NEWTON_MAX_ITER: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TensorKind {
    GaussCheb,
    GaussChebLobatto,
    GaussLegendre,
    GaussLegendreLobatto,
    ClenshawCurtis,
}

impl TensorKind {
    pub const ALL: [TensorKind; 5] = [
        TensorKind::GaussCheb,
        TensorKind::GaussChebLobatto,
        TensorKind::GaussLegendre,
        TensorKind::GaussLegendreLobatto,
        TensorKind::ClenshawCurtis,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TensorKind::GaussCheb => "gauss-cheb",
            TensorKind::GaussChebLobatto => "gauss-cheb-lobatto",
            TensorKind::GaussLegendre => "gauss-legendre",
            TensorKind::GaussLegendreLobatto => "gauss-legendre-lobatto",
            TensorKind::ClenshawCurtis => "clenshaw-curtis",
        }
    }

    pub fn measure(self) -> Measure {
        match self {
            TensorKind::GaussCheb | TensorKind::GaussChebLobatto => Measure::ChebyshevNormalized,
            _ => Measure::Lebesgue,
        }
    }
}

impl fmt::Display for TensorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TensorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<TensorKind> {
        TensorKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown tensor rule kind '{s}'")))
    }
}

/// Legendre polynomial value and derivative by the three-term recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = next;
    }
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// n-point Gauss-Legendre rule on [-1,1] by Newton iteration with
/// Chebyshev-angle starting guesses.
pub fn gauss_legendre_1d(n: usize) -> Result<Rule1D> {
    if n == 0 {
        return Err(Error::InvalidArgument("legendre rule needs n >= 1".into()));
    }
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for k in 1..=n {
        let mut x = ((4 * k - 1) as f64 * PI / (4 * n + 2) as f64).cos();
        let mut converged = false;
        let mut dp = 0.0;
        for _ in 0..NEWTON_MAX_ITER {
            let (p, d) = legendre_pair(n, x);
            dp = d;
            let step = p / d;
            x -= step;
            if step.abs() <= NEWTON_TOL {
                converged = true;
                let (_, d) = legendre_pair(n, x);
                dp = d;
                break;
            }
        }
        if !converged {
            return Err(Error::NonConvergence(format!(
                "Legendre root {k}/{n} did not reach {NEWTON_TOL}"
            )));
        }
        nodes.push(x);
        weights.push(2.0 / ((1.0 - x * x) * dp * dp));
    }
    Ok(Rule1D {
        nodes,
        weights,
        label: RuleLabel::Gauss,
        n,
    })
}

/// (n+1)-point Gauss-Legendre-Lobatto rule: endpoints plus the roots of
/// P_n'. Exact on degree 2n-1.
pub fn gauss_legendre_lobatto_1d(n: usize) -> Result<Rule1D> {
    if n == 0 {
        return Err(Error::InvalidArgument("lobatto rule needs n >= 1".into()));
    }
    let nf = n as f64;
    let endpoint_w = 2.0 / (nf * (nf + 1.0));
    let mut nodes = vec![1.0];
    let mut weights = vec![endpoint_w];
    for k in 1..n {
        // interior roots of P_n'; start from the Chebyshev-Lobatto angle
        let mut x = (k as f64 * PI / nf).cos();
        let mut converged = false;
        for _ in 0..NEWTON_MAX_ITER {
            let (p, dp) = legendre_pair(n, x);
            // (1-x^2) P_n'' = 2x P_n' - n(n+1) P_n
            let ddp = (2.0 * x * dp - nf * (nf + 1.0) * p) / (1.0 - x * x);
            let step = dp / ddp;
            x -= step;
            if step.abs() <= NEWTON_TOL {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NonConvergence(format!(
                "Legendre-Lobatto node {k}/{n} did not reach {NEWTON_TOL}"
            )));
        }
        let (p, _) = legendre_pair(n, x);
        nodes.push(x);
        weights.push(endpoint_w / (p * p));
    }
    nodes.push(-1.0);
    weights.push(endpoint_w);
    Ok(Rule1D {
        nodes,
        weights,
        label: RuleLabel::Lobatto,
        n,
    })
}

/// (n+1)-point Clenshaw-Curtis rule on the Chebyshev-Lobatto nodes.
///
/// Interpolatory weights via the cosine sum of the even Chebyshev moments
/// mu_k = 2/(1-k^2): w_j = (2 c_j / n) sum_{k even} e_k mu_k cos(k j pi/n),
/// with c and e halving the boundary terms.
pub fn clenshaw_curtis_1d(n: usize) -> Result<Rule1D> {
    if n == 0 {
        return Err(Error::InvalidArgument("clenshaw-curtis rule needs n >= 1".into()));
    }
    let nodes: Vec<f64> = (0..=n).map(|j| crate::cheb1d::lobatto_node(j, n)).collect();
    let mut weights = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let cj = if j == 0 || j == n { 0.5 } else { 1.0 };
        let mut acc = 0.0;
        for k in (0..=n).step_by(2) {
            let ek = if k == 0 || k == n { 0.5 } else { 1.0 };
            let mu = 2.0 / (1.0 - (k * k) as f64);
            acc += ek * mu * ((k * j) as f64 * PI / n as f64).cos();
        }
        weights.push(2.0 * cj / n as f64 * acc);
    }
    Ok(Rule1D {
        nodes,
        weights,
        label: RuleLabel::Lobatto,
        n,
    })
}

/// The 1-D rule behind a tensor kind.
pub fn rule_1d(kind: TensorKind, n: usize) -> Result<Rule1D> {
    match kind {
        TensorKind::GaussCheb => gauss_chebyshev_rule(n),
        TensorKind::GaussChebLobatto => gauss_lobatto_rule(n),
        TensorKind::GaussLegendre => gauss_legendre_1d(n),
        TensorKind::GaussLegendreLobatto => gauss_legendre_lobatto_1d(n),
        TensorKind::ClenshawCurtis => clenshaw_curtis_1d(n),
    }
}

/// d-fold tensor product of the kind's 1-D rule, with the matching measure.
pub fn tensor_rule(kind: TensorKind, n: usize, d: usize) -> Result<CubatureRule> {
    let base = rule_1d(kind, n)?;
    tensor_product(&base, d, kind.measure())
}
