//! The six test integrands: three entire (polynomial, exponential, gaussian)
//! and three of limited smoothness (Runge-type, C-infinity nonanalytic, C2).

use std::fmt;
use std::str::FromStr;

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionId {
    Poly,
    Exp,
    Gaussian,
    Runge,
    Cinf,
    C2,
}

impl FunctionId {
    pub const ALL: [FunctionId; 6] = [
        FunctionId::Poly,
        FunctionId::Exp,
        FunctionId::Gaussian,
        FunctionId::Runge,
        FunctionId::Cinf,
        FunctionId::C2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FunctionId::Poly => "POLY",
            FunctionId::Exp => "EXP",
            FunctionId::Gaussian => "GAUSSIAN",
            FunctionId::Runge => "RUNGE",
            FunctionId::Cinf => "CINF",
            FunctionId::C2 => "C2",
        }
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FunctionId {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<FunctionId> {
        match s.to_ascii_uppercase().as_str() {
            "POLY" => Ok(FunctionId::Poly),
            "EXP" => Ok(FunctionId::Exp),
            "GAUSSIAN" => Ok(FunctionId::Gaussian),
            "RUNGE" => Ok(FunctionId::Runge),
            "CINF" => Ok(FunctionId::Cinf),
            "C2" => Ok(FunctionId::C2),
            other => Err(Error::InvalidArgument(format!("unknown test function '{other}'"))),
        }
    }
}

/// One member of the suite: identifier, evaluator, smoothness label.
#[derive(Clone, Copy)]
pub struct TestFunction {
    pub id: FunctionId,
    pub smoothness_class: &'static str,
    pub evaluator: fn(&[f64]) -> f64,
}

impl TestFunction {
    pub fn eval(&self, x: &[f64]) -> f64 {
        (self.evaluator)(x)
    }
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("id", &self.id)
            .field("smoothness_class", &self.smoothness_class)
            .finish()
    }
}

fn sum(x: &[f64]) -> f64 {
    x.iter().sum()
}

fn norm_sq(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn f_poly(x: &[f64]) -> f64 {
    (sum(x) / 3.0).powi(20)
}

fn f_exp(x: &[f64]) -> f64 {
    sum(x).exp()
}

fn f_gaussian(x: &[f64]) -> f64 {
    (-norm_sq(x)).exp()
}

fn f_runge(x: &[f64]) -> f64 {
    1.0 / (1.0 + 16.0 * norm_sq(x))
}

fn f_cinf(x: &[f64]) -> f64 {
    let r2 = norm_sq(x);
    // value at the origin set by continuity
    if r2 == 0.0 {
        0.0
    } else {
        (-1.0 / r2).exp()
    }
}

fn f_c2(x: &[f64]) -> f64 {
    norm_sq(x).powf(1.5)
}

/// The fixed six-function suite, in suite order.
pub fn test_suite() -> Vec<TestFunction> {
    vec![
        TestFunction {
            id: FunctionId::Poly,
            smoothness_class: "entire (polynomial of degree 20)",
            evaluator: f_poly,
        },
        TestFunction {
            id: FunctionId::Exp,
            smoothness_class: "entire",
            evaluator: f_exp,
        },
        TestFunction {
            id: FunctionId::Gaussian,
            smoothness_class: "entire",
            evaluator: f_gaussian,
        },
        TestFunction {
            id: FunctionId::Runge,
            smoothness_class: "analytic, not entire",
            evaluator: f_runge,
        },
        TestFunction {
            id: FunctionId::Cinf,
            smoothness_class: "C-infinity, nonanalytic at the origin",
            evaluator: f_cinf,
        },
        TestFunction {
            id: FunctionId::C2,
            smoothness_class: "C2",
            evaluator: f_c2,
        },
    ]
}

/// Look up one suite member by id.
pub fn by_id(id: FunctionId) -> TestFunction {
    test_suite()
        .into_iter()
        .find(|f| f.id == id)
        .expect("suite covers every id")
}
