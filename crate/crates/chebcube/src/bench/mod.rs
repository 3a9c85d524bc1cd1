//! Benchmark harness: test-function suite, baseline tensor-product rules,
//! reference-value oracles, and the error-vs-cost runner behind the CLI.

mod baselines;
mod reference;
mod runner;
mod testfns;

pub use baselines::{gauss_legendre_1d, rule_1d, tensor_rule, TensorKind};
pub use reference::{reference_integral, Reference};
pub use runner::{run_benchmark, write_csv, BenchRecord, RuleSelection, RunConfig};
pub use testfns::{test_suite, FunctionId, TestFunction};

/// Format a float with 17 significant digits, the precision used by every
/// CSV surface of the crate.
pub fn fmt_g17(x: f64) -> String {
    format!("{x:.16e}")
}
