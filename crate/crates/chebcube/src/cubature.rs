//! d-dimensional degree-(2n-1) cubature rules for the normalized product
//! Chebyshev measure, built from the even/odd halves of the Lobatto rule.
//!
//! A sigma pattern picks one half per coordinate; the rule is the union of
//! the pattern's product grid and the flipped pattern's grid, with each node
//! weight scaled by 2^(d-1).

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::cheb1d::{lobatto_half, Parity, Rule1D};
use crate::{Error, Result};

/// A length-d word over {E, O} selecting one factorized cubature variant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaPattern(Vec<Parity>);

impl SigmaPattern {
    pub fn new(entries: Vec<Parity>) -> Result<SigmaPattern> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("sigma pattern must be nonempty".into()));
        }
        Ok(SigmaPattern(entries))
    }

    /// Uniform pattern, e.g. EEE.
    pub fn uniform(parity: Parity, d: usize) -> Result<SigmaPattern> {
        SigmaPattern::new(vec![parity; d])
    }

    pub fn entries(&self) -> &[Parity] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Exchange E and O in every coordinate.
    pub fn flip(&self) -> SigmaPattern {
        SigmaPattern(self.0.iter().map(|p| p.flip()).collect())
    }
}

impl fmt::Display for SigmaPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.0 {
            write!(f, "{}", p.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SigmaPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<SigmaPattern> {
        let entries = s
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'E' => Ok(Parity::Even),
                'O' => Ok(Parity::Odd),
                other => Err(Error::InvalidArgument(format!(
                    "sigma pattern may contain only E/O, got '{other}'"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        SigmaPattern::new(entries)
    }
}

/// The measure a cubature rule integrates against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    /// Product Chebyshev density 1/(pi^d prod sqrt(1-x_i^2)), total mass 1.
    ChebyshevNormalized,
    /// Plain dx on [-1,1]^d, total mass 2^d.
    Lebesgue,
}

impl Measure {
    pub fn as_str(self) -> &'static str {
        match self {
            Measure::ChebyshevNormalized => "chebyshev",
            Measure::Lebesgue => "lebesgue",
        }
    }
}

/// A d-dimensional node/weight set tagged with its measure and the rule
/// parameter n (degree of exactness 2n-1 for the Chebyshev-measure rules).
#[derive(Debug, Clone)]
pub struct CubatureRule {
    pub dim: usize,
    pub degree_param: usize,
    pub measure: Measure,
    pub nodes: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
    pub sigma: Option<SigmaPattern>,
}

impl CubatureRule {
    /// Weighted sum of `f` over the nodes, sequential in node order.
    pub fn integrate(&self, f: impl Fn(&[f64]) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, &w)| w * f(x))
            .sum()
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }
}

/// One canonical representative (leading entry E) per {sigma, flip(sigma)}
/// class: exactly 2^(d-1) patterns, in lexicographic order with E < O.
pub fn representative_patterns(d: usize) -> Vec<SigmaPattern> {
    assert!(d >= 1, "dimension must be positive");
    let mut out = Vec::with_capacity(1 << (d - 1));
    for bits in 0..(1u64 << (d - 1)) {
        let mut entries = vec![Parity::Even];
        for i in (0..d - 1).rev() {
            entries.push(if bits >> i & 1 == 0 {
                Parity::Even
            } else {
                Parity::Odd
            });
        }
        out.push(SigmaPattern(entries));
    }
    out
}

fn half_rules(n: usize, sigma: &SigmaPattern) -> Result<Vec<Rule1D>> {
    sigma
        .entries()
        .iter()
        .map(|&p| lobatto_half(n, p))
        .collect()
}

/// Cartesian product of the 1-D halves, each node weight scaled by `scale`.
/// Lexicographic in the 1-D node indices, last coordinate fastest.
fn product_grid(halves: &[Rule1D], scale: f64, nodes: &mut Vec<Vec<f64>>, weights: &mut Vec<f64>) {
    let d = halves.len();
    let mut idx = vec![0usize; d];
    loop {
        let mut point = Vec::with_capacity(d);
        let mut w = scale;
        for (s, h) in halves.iter().enumerate() {
            point.push(h.nodes[idx[s]]);
            w *= h.weights[idx[s]];
        }
        nodes.push(point);
        weights.push(w);
        // odometer increment
        let mut s = d;
        loop {
            if s == 0 {
                return;
            }
            s -= 1;
            idx[s] += 1;
            if idx[s] < halves[s].len() {
                break;
            }
            idx[s] = 0;
        }
    }
}

/// Build the degree-(2n-1) rule for the normalized product Chebyshev measure
/// on [-1,1]^d selected by `sigma`.
///
/// The node set is the disjoint union of the sigma product grid and the
/// flipped-sigma grid; each node's weight is 2^(d-1) times the product of its
/// 1-D half weights.
pub fn build_sigma_rule(d: usize, n: usize, sigma: &SigmaPattern) -> Result<CubatureRule> {
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("sigma rules need n >= 2".into()));
    }
    if sigma.len() != d {
        return Err(Error::InvalidArgument(format!(
            "sigma pattern length {} does not match dimension {d}",
            sigma.len()
        )));
    }
    let scale = 2f64.powi(d as i32 - 1);
    let primary = half_rules(n, sigma)?;
    let flipped = half_rules(n, &sigma.flip())?;

    let total = grid_size(&primary) + grid_size(&flipped);
    let mut nodes = Vec::with_capacity(total);
    let mut weights = Vec::with_capacity(total);
    product_grid(&primary, scale, &mut nodes, &mut weights);
    product_grid(&flipped, scale, &mut nodes, &mut weights);

    // The two grids differ by parity in every coordinate, so a collision
    // would signal a construction bug.
    let distinct: HashSet<Vec<u64>> = nodes
        .iter()
        .map(|p| p.iter().map(|x| x.to_bits()).collect())
        .collect();
    assert_eq!(distinct.len(), nodes.len(), "sigma grids must be disjoint");

    Ok(CubatureRule {
        dim: d,
        degree_param: n,
        measure: Measure::ChebyshevNormalized,
        nodes,
        weights,
        sigma: Some(sigma.clone()),
    })
}

fn grid_size(halves: &[Rule1D]) -> usize {
    halves.iter().map(Rule1D::len).product()
}

/// Cardinality of the union grid for `build_sigma_rule(d, n, sigma)`.
pub fn node_count(d: usize, n: usize, sigma: &SigmaPattern) -> Result<usize> {
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("sigma rules need n >= 2".into()));
    }
    if sigma.len() != d {
        return Err(Error::InvalidArgument(format!(
            "sigma pattern length {} does not match dimension {d}",
            sigma.len()
        )));
    }
    let primary = half_rules(n, sigma)?;
    let flipped = half_rules(n, &sigma.flip())?;
    Ok(grid_size(&primary) + grid_size(&flipped))
}

/// Build a tensor-product rule from a 1-D rule, with `measure` tagged on the
/// result. Weight of each node is the product of 1-D weights.
pub fn tensor_product(rule1d: &Rule1D, d: usize, measure: Measure) -> Result<CubatureRule> {
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    let halves: Vec<Rule1D> = vec![rule1d.clone(); d];
    let mut nodes = Vec::with_capacity(rule1d.len().pow(d as u32));
    let mut weights = Vec::with_capacity(rule1d.len().pow(d as u32));
    product_grid(&halves, 1.0, &mut nodes, &mut weights);
    Ok(CubatureRule {
        dim: d,
        degree_param: rule1d.n,
        measure,
        nodes,
        weights,
        sigma: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cheb1d::{cheb_t, gauss_lobatto_rule};

    fn t_multi(k: &[u32], x: &[f64]) -> f64 {
        k.iter()
            .zip(x)
            .map(|(&ki, &xi)| cheb_t(ki, xi).unwrap())
            .product()
    }

    /// All multi-indices of dimension d with |k| <= deg.
    fn multi_indices(d: usize, deg: u32) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..d {
            let mut next = Vec::new();
            for prefix in &out {
                let used: u32 = prefix.iter().sum();
                for k in 0..=(deg - used) {
                    let mut v = prefix.clone();
                    v.push(k);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn flip_examples() {
        let s: SigmaPattern = "EEO".parse().unwrap();
        assert_eq!(s.flip().to_string(), "OOE");
        assert_eq!(s.flip().flip(), s);
        let s: SigmaPattern = "E".parse().unwrap();
        assert_eq!(s.flip().to_string(), "O");
        let s: SigmaPattern = "OOO".parse().unwrap();
        assert_eq!(s.flip().to_string(), "EEE");
    }

    #[test]
    fn sigma_parse_rejects_bad_chars() {
        assert!("EOX".parse::<SigmaPattern>().is_err());
        assert!("".parse::<SigmaPattern>().is_err());
    }

    #[test]
    fn representatives() {
        let d2: Vec<String> = representative_patterns(2)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(d2, vec!["EE", "EO"]);
        let d3: Vec<String> = representative_patterns(3)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(d3, vec!["EEE", "EEO", "EOE", "EOO"]);
        let d1: Vec<String> = representative_patterns(1)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(d1, vec!["E"]);
        assert_eq!(representative_patterns(4).len(), 8);
    }

    #[test]
    fn d1_rule_recombines_to_lobatto() {
        let sigma: SigmaPattern = "E".parse().unwrap();
        let rule = build_sigma_rule(1, 4, &sigma).unwrap();
        let lob = gauss_lobatto_rule(4).unwrap();
        assert_eq!(rule.num_nodes(), lob.len());
        let f = |x: &[f64]| (2.0 * x[0]).cos() + x[0];
        let g = |x: f64| (2.0 * x).cos() + x;
        assert!((rule.integrate(f) - lob.apply(g)).abs() < 1e-15);
    }

    #[test]
    fn invalid_arguments() {
        let sigma: SigmaPattern = "EE".parse().unwrap();
        assert!(build_sigma_rule(0, 4, &sigma).is_err());
        assert!(build_sigma_rule(2, 1, &sigma).is_err());
        assert!(build_sigma_rule(3, 4, &sigma).is_err());
        assert!(node_count(3, 4, &sigma).is_err());
    }

    #[test]
    fn node_counts_match_known_values() {
        let eo: SigmaPattern = "EO".parse().unwrap();
        assert_eq!(node_count(2, 4, &eo).unwrap(), 12);
        let eeo: SigmaPattern = "EEO".parse().unwrap();
        assert_eq!(node_count(3, 4, &eeo).unwrap(), 30);
        let eee: SigmaPattern = "EEE".parse().unwrap();
        assert_eq!(node_count(3, 4, &eee).unwrap(), 35);
    }

    #[test]
    fn node_count_matches_built_rule_and_flip() {
        for d in 1..=3 {
            for n in 2..=7 {
                for sigma in representative_patterns(d) {
                    let rule = build_sigma_rule(d, n, &sigma).unwrap();
                    assert_eq!(rule.num_nodes(), node_count(d, n, &sigma).unwrap());
                    assert_eq!(
                        node_count(d, n, &sigma).unwrap(),
                        node_count(d, n, &sigma.flip()).unwrap()
                    );
                    // building from the flip yields the identical node set
                    let flipped = build_sigma_rule(d, n, &sigma.flip()).unwrap();
                    let mut a: Vec<Vec<u64>> = rule
                        .nodes
                        .iter()
                        .map(|p| p.iter().map(|x| x.to_bits()).collect())
                        .collect();
                    let mut b: Vec<Vec<u64>> = flipped
                        .nodes
                        .iter()
                        .map(|p| p.iter().map(|x| x.to_bits()).collect())
                        .collect();
                    a.sort();
                    b.sort();
                    assert_eq!(a, b, "d={d} n={n} sigma={sigma}");
                }
            }
        }
    }

    #[test]
    fn weights_positive_and_normalized() {
        for d in 1..=3 {
            for n in 2..=10 {
                for sigma in representative_patterns(d) {
                    let rule = build_sigma_rule(d, n, &sigma).unwrap();
                    assert!(rule.weights.iter().all(|&w| w > 0.0));
                    let sum: f64 = rule.weights.iter().sum();
                    assert!((sum - 1.0).abs() <= 1e-13, "d={d} n={n} sigma={sigma}");
                }
            }
        }
    }

    #[test]
    fn exactness_sweep_small() {
        for d in 1..=3usize {
            for n in 2..=6usize {
                let deg = 2 * n as u32 - 1;
                let indices = multi_indices(d, deg);
                for sigma in representative_patterns(d) {
                    let rule = build_sigma_rule(d, n, &sigma).unwrap();
                    for k in &indices {
                        let expect = if k.iter().all(|&ki| ki == 0) { 1.0 } else { 0.0 };
                        let got = rule.integrate(|x| t_multi(k, x));
                        assert!(
                            (got - expect).abs() <= 1e-13,
                            "d={d} n={n} sigma={sigma} k={k:?} got {got}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sigma_ee_degree_orthogonality() {
        let sigma: SigmaPattern = "EE".parse().unwrap();
        let rule = build_sigma_rule(2, 3, &sigma).unwrap();
        let got = rule.integrate(|x| t_multi(&[2, 2], x));
        assert!(got.abs() <= 1e-14);
    }

    #[test]
    fn separable_exponential_matches_1d_oracle() {
        // 1-D reference by high-order Gauss-Chebyshev
        let g = crate::cheb1d::gauss_chebyshev_rule(200).unwrap();
        let i1 = g.apply(f64::exp);
        let sigma: SigmaPattern = "EEE".parse().unwrap();
        // n=6 carries an aliasing contribution from the (6,6,0) coefficient
        // family (total degree 12 > 2n-1), observed near 8e-9 absolute
        let rule = build_sigma_rule(3, 6, &sigma).unwrap();
        let got = rule.integrate(|x| (x[0] + x[1] + x[2]).exp());
        assert!((got - i1.powi(3)).abs() <= 2e-8);
        // by n=8 the alias terms are below the target tolerance
        let rule = build_sigma_rule(3, 8, &sigma).unwrap();
        let got = rule.integrate(|x| (x[0] + x[1] + x[2]).exp());
        assert!((got - i1.powi(3)).abs() <= 1e-12 * i1.powi(3));
    }

    #[test]
    fn count_asymptotics_ratio() {
        let n = 50usize;
        let m = n / 2;
        for d in 1..=3 {
            for sigma in representative_patterns(d) {
                let count = node_count(d, n, &sigma).unwrap() as f64;
                let ratio = count / (2.0 * (m as f64).powi(d as i32));
                assert!((0.9..=1.35).contains(&ratio), "d={d} sigma={sigma} ratio={ratio}");
            }
        }
    }

    #[test]
    fn d2_counts_vs_lower_bound() {
        for n in (2..=20).step_by(2) {
            let nstar = n * (n + 1) / 2 + n / 2;
            let eo: SigmaPattern = "EO".parse().unwrap();
            let ee: SigmaPattern = "EE".parse().unwrap();
            assert_eq!(node_count(2, n, &eo).unwrap(), nstar);
            assert_eq!(node_count(2, n, &ee).unwrap(), nstar + 1);
        }
    }

    #[test]
    fn tensor_product_rule() {
        let g = crate::cheb1d::gauss_chebyshev_rule(3).unwrap();
        let rule = tensor_product(&g, 3, Measure::ChebyshevNormalized).unwrap();
        assert_eq!(rule.num_nodes(), 27);
        assert!((rule.integrate(|_| 1.0) - 1.0).abs() < 1e-14);
    }
}
