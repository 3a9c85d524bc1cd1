//! Command-line interface: rule export, integration, hyperinterpolation,
//! the Clenshaw-Curtis-like rule, and the benchmark runner.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bench::{
    fmt_g17, reference_integral, run_benchmark, tensor_rule, write_csv, FunctionId, RuleSelection,
    RunConfig,
};
use crate::cc3::cc_rule;
use crate::cubature::{build_sigma_rule, CubatureRule, Measure, SigmaPattern};
use crate::hyper3::{control_grid, hyper_coeffs, hyper_eval, relative_error};
use crate::Error;

/// Exit code for numerical or I/O failures (2 is argument validation,
/// handled by clap and by explicit checks).
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(name = "chebcube", version, about = "Chebyshev cubature, hyperinterpolation and Clenshaw-Curtis-like rules on the cube")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the nodes and weights of a cubature rule as CSV
    Rule(RuleArgs),
    /// Integrate a test function with one rule and compare to the reference
    Integrate(IntegrateArgs),
    /// Hyperinterpolate a test function; export coefficients, report errors
    Hyper(HyperArgs),
    /// Build the Clenshaw-Curtis-like Lebesgue rule; integrate or export
    Cc(CcArgs),
    /// Run the error-vs-cost benchmark sweep and write CSV
    Bench(BenchArgs),
}

#[derive(Args)]
struct RuleArgs {
    /// Dimension d
    #[arg(long)]
    dim: usize,
    /// Rule parameter n
    #[arg(long)]
    n: usize,
    /// Sigma pattern, e.g. EEE
    #[arg(long)]
    sigma: String,
    /// Measure: chebyshev (sigma rule) or lebesgue (cc rule, dim 3 only)
    #[arg(long, default_value = "chebyshev")]
    measure: String,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct IntegrateArgs {
    /// Test function id (POLY, EXP, GAUSSIAN, RUNGE, CINF, C2)
    #[arg(long = "fn")]
    function: String,
    /// Rule to apply: sigma-<pattern>, cc-<pattern>, or a tensor kind
    #[arg(long, default_value = "sigma-EEE")]
    rule: String,
    /// Rule parameter n
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct HyperArgs {
    /// Hyperinterpolation degree n
    #[arg(long)]
    n: usize,
    /// Sigma pattern of length 3
    #[arg(long, default_value = "EEE")]
    sigma: String,
    /// Test function id
    #[arg(long = "fn")]
    function: String,
    /// Write coefficients CSV here
    #[arg(long)]
    coeffs_out: Option<PathBuf>,
    /// Points per axis of the equispaced control grid for error reporting
    #[arg(long, default_value_t = 30)]
    control_grid: usize,
}

#[derive(Args)]
struct CcArgs {
    /// Rule degree n
    #[arg(long)]
    n: usize,
    /// Sigma pattern of length 3
    #[arg(long, default_value = "EEE")]
    sigma: String,
    /// Test function id; integrates and reports the error when given
    #[arg(long = "fn")]
    function: Option<String>,
    /// Write the rule's nodes and weights CSV here
    #[arg(long)]
    weights_out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated test function ids, or "all"
    #[arg(long, default_value = "all")]
    suite: String,
    /// Comma-separated rule names (sigma-EEE, cc-EEE, gauss-cheb, ...)
    #[arg(long, default_value = "sigma-EEE,gauss-cheb,gauss-cheb-lobatto")]
    rules: String,
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long, default_value_t = 40)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    stride: usize,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
}

/// Run the CLI against the given arguments; returns the process exit code.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        // clap exits 2 on usage errors and 0 on --help/--version
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            EXIT_NUMERICAL
        }
    }
}

enum CliError {
    Usage(String),
    Runtime(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::InvalidArgument(_) | Error::Domain(_) => CliError::Usage(e.to_string()),
            Error::NonConvergence(_) | Error::Degenerate(_) => CliError::Runtime(e.to_string()),
        }
    }
}

type CliResult = std::result::Result<(), CliError>;

fn write_file(path: &PathBuf, contents: &str) -> CliResult {
    fs::write(path, contents)
        .map_err(|e| CliError::Runtime(format!("writing {}: {e}", path.display())))
}

fn parse_function(s: &str) -> std::result::Result<FunctionId, CliError> {
    s.parse::<FunctionId>().map_err(|e| CliError::Usage(e.to_string()))
}

fn rule_csv(rule: &CubatureRule) -> String {
    let mut out = String::new();
    for i in 1..=rule.dim {
        let _ = write!(out, "x{i},");
    }
    out.push_str("weight\n");
    for (node, w) in rule.nodes.iter().zip(&rule.weights) {
        for x in node {
            let _ = write!(out, "{},", fmt_g17(*x));
        }
        out.push_str(&fmt_g17(*w));
        out.push('\n');
    }
    out
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Rule(args) => {
            let sigma: SigmaPattern = args.sigma.parse().map_err(CliError::from)?;
            let rule = match args.measure.as_str() {
                "chebyshev" => build_sigma_rule(args.dim, args.n, &sigma)?,
                "lebesgue" => {
                    if args.dim != 3 {
                        return Err(CliError::Usage(
                            "lebesgue rules are available for --dim 3 only".into(),
                        ));
                    }
                    let cc = cc_rule(args.n, &sigma)?;
                    CubatureRule {
                        dim: 3,
                        degree_param: args.n,
                        measure: Measure::Lebesgue,
                        nodes: cc.nodes.points.iter().map(|p| p.to_vec()).collect(),
                        weights: cc.lambda.clone(),
                        sigma: Some(sigma.clone()),
                    }
                }
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown measure '{other}' (chebyshev or lebesgue)"
                    )))
                }
            };
            write_file(&args.out, &rule_csv(&rule))?;
            println!("wrote {} nodes to {}", rule.num_nodes(), args.out.display());
            Ok(())
        }
        Command::Integrate(args) => {
            let id = parse_function(&args.function)?;
            let selection: RuleSelection = args.rule.parse().map_err(CliError::from)?;
            let f = crate::bench::test_suite()
                .into_iter()
                .find(|t| t.id == id)
                .expect("suite covers every id");
            let (nodes, approx) = match &selection {
                RuleSelection::Sigma(sigma) => {
                    let r = build_sigma_rule(sigma.len(), args.n, sigma)?;
                    (r.num_nodes(), r.integrate(|x| f.eval(x)))
                }
                RuleSelection::CcLike(sigma) => {
                    let r = cc_rule(args.n, sigma)?;
                    (r.len(), r.integrate(|p| f.eval(p)))
                }
                RuleSelection::Tensor(kind) => {
                    let r = tensor_rule(*kind, args.n, 3)?;
                    (r.num_nodes(), r.integrate(|x| f.eval(x)))
                }
            };
            let reference = reference_integral(&f, selection.measure())?;
            let rel = (approx - reference.value).abs() / reference.value.abs().max(1e-300);
            println!("rule: {selection} n={} nodes={nodes}", args.n);
            println!("approx    = {}", fmt_g17(approx));
            println!("reference = {}", fmt_g17(reference.value));
            println!("rel_error = {}", fmt_g17(rel));
            Ok(())
        }
        Command::Hyper(args) => {
            let id = parse_function(&args.function)?;
            let sigma: SigmaPattern = args.sigma.parse().map_err(CliError::from)?;
            if args.control_grid < 2 {
                return Err(CliError::Usage("control grid needs at least 2 points per axis".into()));
            }
            let f = crate::bench::test_suite()
                .into_iter()
                .find(|t| t.id == id)
                .expect("suite covers every id");
            let coeffs = hyper_coeffs(|p| f.eval(p), args.n, &sigma)?;
            if let Some(path) = &args.coeffs_out {
                let mut csv = String::from("alpha1,alpha2,alpha3,c\n");
                for (a, c) in coeffs.iter() {
                    let _ = writeln!(csv, "{},{},{},{}", a[0], a[1], a[2], fmt_g17(c));
                }
                write_file(path, &csv)?;
                println!("wrote {} coefficients to {}", coeffs.len(), path.display());
            }
            let grid = control_grid(args.control_grid);
            let exact: Vec<f64> = grid.iter().map(|p| f.eval(p)).collect();
            let approx: Vec<f64> = grid
                .iter()
                .map(|&p| hyper_eval(&coeffs, p))
                .collect::<crate::Result<_>>()?;
            let err = relative_error(&approx, &exact)?;
            println!(
                "# control grid: {g}^3 equispaced",
                g = args.control_grid
            );
            println!("hyper n={} sigma={sigma} fn={id}", args.n);
            println!("rel_error = {}", fmt_g17(err));
            Ok(())
        }
        Command::Cc(args) => {
            let sigma: SigmaPattern = args.sigma.parse().map_err(CliError::from)?;
            let rule = cc_rule(args.n, &sigma)?;
            if let Some(path) = &args.weights_out {
                let mut csv = String::from("x1,x2,x3,lambda\n");
                for (p, l) in rule.nodes.points.iter().zip(&rule.lambda) {
                    let _ = writeln!(
                        csv,
                        "{},{},{},{}",
                        fmt_g17(p[0]),
                        fmt_g17(p[1]),
                        fmt_g17(p[2]),
                        fmt_g17(*l)
                    );
                }
                write_file(path, &csv)?;
                println!("wrote {} weights to {}", rule.len(), path.display());
            }
            if let Some(name) = &args.function {
                let id = parse_function(name)?;
                let f = crate::bench::test_suite()
                    .into_iter()
                    .find(|t| t.id == id)
                    .expect("suite covers every id");
                let approx = rule.integrate(|p| f.eval(p));
                let reference = reference_integral(&f, Measure::Lebesgue)?;
                let rel = (approx - reference.value).abs() / reference.value.abs().max(1e-300);
                println!("cc n={} sigma={sigma} nodes={}", args.n, rule.len());
                println!("approx    = {}", fmt_g17(approx));
                println!("reference = {}", fmt_g17(reference.value));
                println!("rel_error = {}", fmt_g17(rel));
            }
            Ok(())
        }
        Command::Bench(args) => {
            let functions: Vec<FunctionId> = if args.suite == "all" {
                FunctionId::ALL.to_vec()
            } else {
                args.suite
                    .split(',')
                    .filter(|s| !s.is_empty())
                    .map(parse_function)
                    .collect::<std::result::Result<_, _>>()?
            };
            let rules: Vec<RuleSelection> = args
                .rules
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<RuleSelection>().map_err(CliError::from))
                .collect::<std::result::Result<_, _>>()?;
            let config = RunConfig {
                functions,
                rules,
                n_min: args.n_min,
                n_max: args.n_max,
                stride: args.stride,
            };
            let records = run_benchmark(&config)?;
            write_file(&args.out, &write_csv(&records, &config))?;
            println!("wrote {} records to {}", records.len(), args.out.display());
            Ok(())
        }
    }
}
