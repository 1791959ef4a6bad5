use hsbound_core::{
    check_sample, extremal_z, lemma_pq_terms, majindar_bound, random_search_max, rescale,
    sharp_bound, two_block_sweep, BoundReport, Divisor, ProbabilitySplit, Sample, Sign,
    REPORT_TOLERANCE,
};
use serde_json::{json, Value};

use crate::args::{Cli, Command, DivisorArg, ExtremalArgs, OptimizeArgs, ProbArgs, SweepArgs};
use crate::error::CliError;
use crate::input::{parse_sample, read_source};
use crate::report::ReportDocument;

/// Tolerance between the sweep maximum and the closed-form bound.
pub const SWEEP_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    /// A bound was numerically violated.
    Violation = 1,
    /// Bad input or parameters.
    InputError = 2,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub doc: ReportDocument,
    pub exit: Exit,
}

impl Outcome {
    fn new(doc: ReportDocument, passed: bool) -> Self {
        let exit = if passed { Exit::Ok } else { Exit::Violation };
        Self { doc, exit }
    }
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Stats(_) => "stats",
            Command::Check(_) => "check",
            Command::Extremal(_) => "extremal",
            Command::Sweep(_) => "sweep",
            Command::Optimize(_) => "optimize",
            Command::Prob(_) => "prob",
        }
    }

    pub fn inputs(&self, divisor: DivisorArg) -> Value {
        let divisor = match divisor {
            DivisorArg::N => "n",
            DivisorArg::NMinusOne => "n-1",
        };
        match self {
            Command::Stats(a) | Command::Check(a) => {
                json!({ "input": a.input.display().to_string(), "divisor": divisor })
            }
            Command::Extremal(a) => {
                json!({ "n": a.n, "sign": a.sign, "location": a.location, "scale": a.scale })
            }
            Command::Sweep(a) => json!({ "nmin": a.nmin, "nmax": a.nmax }),
            Command::Optimize(a) => {
                json!({ "n": a.n, "restarts": a.restarts, "iters": a.iters, "seed": a.seed })
            }
            Command::Prob(a) => json!({ "p": a.p, "q": a.q }),
        }
    }
}

/// Runs one invocation. Errors map to exit code 2 at the caller.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let name = cli.command.name();
    if cli.divisor == DivisorArg::NMinusOne && name != "stats" {
        return Err(CliError::DivisorRefused(name));
    }
    let inputs = cli.command.inputs(cli.divisor);
    let (results, passed) = match &cli.command {
        Command::Stats(a) => (
            cmd_stats(&parse_sample(&read_source(&a.input)?)?, cli.divisor),
            true,
        ),
        Command::Check(a) => cmd_check(&parse_sample(&read_source(&a.input)?)?)?,
        Command::Extremal(a) => cmd_extremal(a)?,
        Command::Sweep(a) => cmd_sweep(a)?,
        Command::Optimize(a) => cmd_optimize(a)?,
        Command::Prob(a) => cmd_prob(a)?,
    };
    Ok(Outcome::new(
        ReportDocument::new(name, inputs, results),
        passed,
    ))
}

pub fn cmd_stats(sample: &Sample, divisor: DivisorArg) -> Value {
    let divisor = match divisor {
        DivisorArg::N => Divisor::Population,
        DivisorArg::NMinusOne => Divisor::Unbiased,
    };
    let chain = sample.chain_terms();
    let ratio = sample.skewness_with(divisor).ok();
    json!({
        "n": sample.len(),
        "mean": sample.mean(),
        "sd": sample.stddev_with(divisor),
        "median": sample.median(),
        "ratio": ratio,
        "degenerate": ratio.is_none(),
        "chain_terms": {
            "t1": chain.median_gap,
            "t2": chain.mad_median,
            "t3": chain.mad_mean,
            "t4": chain.sd,
        },
    })
}

fn report_json(r: &BoundReport) -> Value {
    json!({
        "n": r.n,
        "ratio": r.ratio,
        "classical": r.classical,
        "sharp": r.sharp,
        "slack": r.slack,
        "is_extremal": r.is_extremal,
        "case_label": r.case_label.map(|c| c.as_str()),
        "bounds_hold": r.bounds_hold(),
    })
}

pub fn cmd_check(sample: &Sample) -> Result<(Value, bool), CliError> {
    let report = check_sample(sample)?;
    Ok((report_json(&report), report.bounds_hold()))
}

pub fn cmd_extremal(a: &ExtremalArgs) -> Result<(Value, bool), CliError> {
    let sign = Sign::try_from(a.sign)?;
    let sample = rescale(&extremal_z(a.n, sign)?, a.location, a.scale)?;
    let report = check_sample(&sample)?;
    let mut results = report_json(&report);
    results["values"] = json!(sample.values());
    Ok((results, report.bounds_hold()))
}

pub fn cmd_sweep(a: &SweepArgs) -> Result<(Value, bool), CliError> {
    if a.nmin < 3 || a.nmin > a.nmax {
        return Err(CliError::InvalidRange {
            nmin: a.nmin,
            nmax: a.nmax,
        });
    }
    let mut rows = Vec::with_capacity(a.nmax - a.nmin + 1);
    let mut pass = true;
    for n in a.nmin..=a.nmax {
        let bound = sharp_bound(n)?;
        let sweep = two_block_sweep(n)?;
        let difference = (sweep.max_ratio - bound).abs();
        pass &= difference <= SWEEP_TOLERANCE;
        rows.push(json!({
            "n": n,
            "sharp_bound": bound,
            "sweep_max": sweep.max_ratio,
            "j_star": sweep.j_star,
            "difference": difference,
        }));
    }
    Ok((
        json!({ "rows": rows, "tolerance": SWEEP_TOLERANCE, "pass": pass }),
        pass,
    ))
}

pub fn cmd_optimize(a: &OptimizeArgs) -> Result<(Value, bool), CliError> {
    let result = random_search_max(a.n, a.restarts, a.iters, a.seed)?;
    let bound = sharp_bound(a.n)?;
    let gap = bound - result.best_ratio;
    let pass = gap >= -REPORT_TOLERANCE;
    Ok((
        json!({
            "best_ratio": result.best_ratio,
            "sharp_bound": bound,
            "gap": gap,
            "best_restart": result.best_restart,
            "best_z": result.best_z.values(),
            "status": if pass { "PASS" } else { "FAIL" },
        }),
        pass,
    ))
}

pub fn cmd_prob(a: &ProbArgs) -> Result<(Value, bool), CliError> {
    let split = ProbabilitySplit::new(a.p, a.q)?;
    let terms = lemma_pq_terms(split);
    let holds = terms.holds(0.0);
    Ok((
        json!({
            "majindar_bound": majindar_bound(split),
            "lhs": terms.lhs,
            "a1": terms.a1,
            "a2": terms.a2,
            "a3": terms.a3,
            "min_rhs": terms.min_rhs(),
            "lemma_holds": holds,
        }),
        holds,
    ))
}
