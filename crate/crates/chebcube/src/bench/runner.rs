//! Error-vs-cost benchmark runner: evaluates a selection of rules on a
//! selection of test functions over a degree range and emits deterministic
//! CSV records.

use std::fmt;
use std::str::FromStr;

use crate::bench::baselines::{tensor_rule, TensorKind};
use crate::bench::reference::reference_integral;
use crate::bench::testfns::{by_id, FunctionId};
use crate::bench::fmt_g17;
use crate::cc3::cc_rule;
use crate::cubature::{build_sigma_rule, Measure, SigmaPattern};
use crate::{Error, Result};

/// One rule family participating in a benchmark run.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RuleSelection {
    /// Even/odd-factorized Chebyshev-measure rule with the given pattern.
    Sigma(SigmaPattern),
    /// Nontensorial Clenshaw-Curtis-like Lebesgue rule with the given pattern.
    CcLike(SigmaPattern),
    /// Tensor product of a classical 1-D family.
    Tensor(TensorKind),
}

impl RuleSelection {
    pub fn measure(&self) -> Measure {
        match self {
            RuleSelection::Sigma(_) => Measure::ChebyshevNormalized,
            RuleSelection::CcLike(_) => Measure::Lebesgue,
            RuleSelection::Tensor(kind) => kind.measure(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            RuleSelection::Sigma(s) => format!("sigma-{s}"),
            RuleSelection::CcLike(s) => format!("cc-{s}"),
            RuleSelection::Tensor(kind) => kind.to_string(),
        }
    }

    /// Smallest degree parameter the family supports.
    fn min_n(&self) -> usize {
        match self {
            RuleSelection::Sigma(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for RuleSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for RuleSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<RuleSelection> {
        if let Some(pattern) = s.strip_prefix("sigma-") {
            let sigma: SigmaPattern = pattern.parse()?;
            return Ok(RuleSelection::Sigma(sigma));
        }
        if let Some(pattern) = s.strip_prefix("cc-") {
            let sigma: SigmaPattern = pattern.parse()?;
            if sigma.len() != 3 {
                return Err(Error::InvalidArgument(
                    "cc rules need a length-3 sigma pattern".into(),
                ));
            }
            return Ok(RuleSelection::CcLike(sigma));
        }
        Ok(RuleSelection::Tensor(s.parse()?))
    }
}

/// One benchmark cell: a rule at degree n applied to one test function.
#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub rule_name: String,
    pub measure: Measure,
    pub n: usize,
    pub num_nodes: usize,
    pub function_id: FunctionId,
    pub approx_value: f64,
    pub reference_value: f64,
    pub relative_error: f64,
}

/// Benchmark configuration; `functions` and `rules` empty means empty output.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub functions: Vec<FunctionId>,
    pub rules: Vec<RuleSelection>,
    pub n_min: usize,
    pub n_max: usize,
    pub stride: usize,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.stride == 0 {
            return Err(Error::InvalidArgument("stride must be positive".into()));
        }
        if self.n_min == 0 {
            return Err(Error::InvalidArgument("n-min must be positive".into()));
        }
        if self.n_max < self.n_min {
            return Err(Error::InvalidArgument("n-max must be >= n-min".into()));
        }
        Ok(())
    }
}

fn evaluate_cell(rule: &RuleSelection, n: usize, id: FunctionId) -> Result<(usize, f64)> {
    let f = by_id(id);
    match rule {
        RuleSelection::Sigma(sigma) => {
            let r = build_sigma_rule(sigma.len(), n, sigma)?;
            Ok((r.num_nodes(), r.integrate(|x| f.eval(x))))
        }
        RuleSelection::CcLike(sigma) => {
            let r = cc_rule(n, sigma)?;
            Ok((r.len(), r.integrate(|p| f.eval(p))))
        }
        RuleSelection::Tensor(kind) => {
            let r = tensor_rule(*kind, n, 3)?;
            Ok((r.num_nodes(), r.integrate(|x| f.eval(x))))
        }
    }
}

/// Run the configured sweep. One record per (rule, function, n), sorted by
/// (rule name, function, n); deterministic output.
pub fn run_benchmark(config: &RunConfig) -> Result<Vec<BenchRecord>> {
    config.validate()?;
    let mut records = Vec::new();
    for rule in &config.rules {
        let measure = rule.measure();
        for &id in &config.functions {
            let reference = reference_integral(&by_id(id), measure)?;
            for n in (config.n_min..=config.n_max).step_by(config.stride) {
                if n < rule.min_n() {
                    continue;
                }
                let (num_nodes, approx) = evaluate_cell(rule, n, id)?;
                let relative_error =
                    (approx - reference.value).abs() / reference.value.abs().max(1e-300);
                records.push(BenchRecord {
                    rule_name: rule.name(),
                    measure,
                    n,
                    num_nodes,
                    function_id: id,
                    approx_value: approx,
                    reference_value: reference.value,
                    relative_error,
                });
            }
        }
    }
    records.sort_by(|a, b| {
        (&a.rule_name, a.function_id.as_str(), a.n).cmp(&(&b.rule_name, b.function_id.as_str(), b.n))
    });
    Ok(records)
}

/// Render records as CSV with a metadata comment header. LF line endings.
pub fn write_csv(records: &[BenchRecord], config: &RunConfig) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# n range: {}..={} stride {}\n",
        config.n_min, config.n_max, config.stride
    ));
    out.push_str("rule,measure,n,nodes,function,approx,reference,rel_error\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.rule_name,
            r.measure.as_str(),
            r.n,
            r.num_nodes,
            r.function_id,
            fmt_g17(r.approx_value),
            fmt_g17(r.reference_value),
            fmt_g17(r.relative_error),
        ));
    }
    out
}
