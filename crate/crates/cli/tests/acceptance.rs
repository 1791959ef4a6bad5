//! Acceptance criteria, one line per criterion:
//!
//!     cargo test -p hsbound-cli --test acceptance -- --nocapture

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use hsbound_core::corpus::{random_distribution, random_sample, substream};
use hsbound_core::{
    case_classify, check_sample, classical_bound, extremal_z, imbalance_decomposition,
    lemma_pq_terms, majindar_check, order_stat_range, random_search_max, rescale, sharp_bound,
    two_block_sweep, CaseLabel, Error, ProbabilitySplit, Sample, Sign, EPS_STD,
};
use rand::Rng;

const CORPUS_SIZE: usize = 100_000;
const CORPUS_SEED: u64 = 20_240_601;

struct Outcome {
    id: u32,
    name: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
}

fn criterion(
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    f: impl FnOnce() -> Result<String, String>,
) -> Outcome {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if let Some(limit) = limit {
        if elapsed > limit {
            passed = false;
            detail = format!("{detail}; runtime {elapsed:?} exceeds {limit:?}");
        }
    }
    Outcome {
        id,
        name,
        passed,
        detail,
        elapsed,
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn allowed_maximizers(n: usize) -> [usize; 2] {
    let k = n / 2;
    if n % 2 == 1 {
        [k, k + 1]
    } else {
        [k - 1, k + 1]
    }
}

/// Random nondegenerate samples with `n` cycling through 3..=20.
fn corpus() -> Vec<Sample> {
    let mut rng = substream(CORPUS_SEED, 0);
    (0..CORPUS_SIZE)
        .map(|i| random_sample(&mut rng, 3 + i % 18))
        .collect()
}

fn c1_sharp_table() -> Result<String, String> {
    // n = 2k+1 -> k/(k+1), n = 2k -> (k-1)/(k+1), written out by hand
    let table = [
        (3, (1.0f64 / 2.0).sqrt()),
        (4, (1.0f64 / 3.0).sqrt()),
        (5, (2.0f64 / 3.0).sqrt()),
        (6, (2.0f64 / 4.0).sqrt()),
        (7, (3.0f64 / 4.0).sqrt()),
        (8, (3.0f64 / 5.0).sqrt()),
    ];
    let mut worst = 0.0f64;
    for (n, want) in table {
        let err = (sharp_bound(n).map_err(|e| e.to_string())? - want).abs();
        worst = worst.max(err);
        ensure(err <= 1e-15, || format!("n={n}: error {err:e}"))?;
    }
    Ok(format!("max abs error {worst:e}"))
}

fn c2_attainment() -> Result<String, String> {
    let mut worst = 0.0f64;
    for n in 3..=200 {
        for sign in [Sign::Positive, Sign::Negative] {
            let z = extremal_z(n, sign).map_err(|e| e.to_string())?;
            let s = rescale(&z, 0.0, 1.0).map_err(|e| e.to_string())?;
            let r = check_sample(&s).map_err(|e| e.to_string())?;
            let err = (r.ratio.abs() - sharp_bound(n).unwrap()).abs();
            worst = worst.max(err);
            ensure(err <= 1e-12 && r.ratio.signum() == sign.as_f64(), || {
                format!("n={n} {sign:?}: ratio {} error {err:e}", r.ratio)
            })?;
            ensure(r.is_extremal, || {
                format!("n={n} {sign:?} not flagged extremal")
            })?;
        }
    }
    Ok(format!("396 configurations, max |ratio| error {worst:e}"))
}

fn c3_oracle() -> Result<String, String> {
    let mut worst = 0.0f64;
    for n in 3..=200 {
        let sweep = two_block_sweep(n).map_err(|e| e.to_string())?;
        let err = (sweep.max_ratio - sharp_bound(n).unwrap()).abs();
        worst = worst.max(err);
        ensure(err <= 1e-12, || format!("n={n}: sweep max off by {err:e}"))?;
        ensure(allowed_maximizers(n).contains(&sweep.j_star), || {
            format!(
                "n={n}: maximizer j={} not in {:?}",
                sweep.j_star,
                allowed_maximizers(n)
            )
        })?;
    }
    Ok(format!("n in 3..=200, max error {worst:e}"))
}

fn c4_optimizer() -> Result<String, String> {
    let mut worst_gap = 0.0f64;
    let mut worst_excess = f64::NEG_INFINITY;
    for n in 3..=12 {
        let r = random_search_max(n, 200, 2000, 42).map_err(|e| e.to_string())?;
        let bound = sharp_bound(n).unwrap();
        let gap = bound - r.best_ratio;
        worst_gap = worst_gap.max(gap);
        worst_excess = worst_excess.max(-gap);
        ensure(r.best_ratio <= bound + 1e-9, || {
            format!("n={n}: {} exceeds {bound}", r.best_ratio)
        })?;
        ensure(gap <= 1e-3, || format!("n={n}: gap {gap:e} > 1e-3"))?;
    }
    Ok(format!(
        "max gap {worst_gap:e}, max excess {worst_excess:e}"
    ))
}

fn c5_chain(corpus: &[Sample]) -> Result<String, String> {
    for (idx, s) in corpus.iter().enumerate() {
        let t = s.chain_terms().standardized();
        ensure(t.is_monotone(1e-9), || {
            format!("sample {idx}: chain {:?}", t.as_array())
        })?;
        let ratio = s.skewness().map_err(|e| e.to_string())?;
        ensure(ratio.abs() <= classical_bound() + EPS_STD, || {
            format!("sample {idx}: ratio {ratio}")
        })?;
    }
    Ok(format!("{} samples", corpus.len()))
}

fn c6_order_stats(corpus: &[Sample]) -> Result<String, String> {
    let mut checked = 0usize;
    for (idx, s) in corpus.iter().enumerate() {
        let z = s.standardize().map_err(|e| e.to_string())?;
        for (i, zi) in z.values().iter().enumerate() {
            let range = order_stat_range(s.len(), i + 1).unwrap();
            ensure(range.contains(*zi, 1e-9), || {
                format!("sample {idx}: z_{} = {zi} outside {range:?}", i + 1)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} order statistics"))
}

fn c7_cauchy_schwarz(corpus: &[Sample]) -> Result<String, String> {
    let mut tightest = f64::INFINITY;
    for (idx, s) in corpus.iter().enumerate() {
        let z = s.standardize().map_err(|e| e.to_string())?;
        let d = imbalance_decomposition(&z).map_err(|e| format!("sample {idx}: {e}"))?;
        ensure(1 <= d.ell && d.ell <= d.m && d.m < d.n, || {
            format!("sample {idx}: {d:?}")
        })?;
        ensure(d.masses_balance(), || {
            format!("sample {idx}: masses differ {d:?}")
        })?;
        ensure(d.satisfies_cauchy_schwarz(1e-9), || {
            format!("sample {idx}: {d:?}")
        })?;
        tightest = tightest.min(d.cauchy_schwarz_bound() - d.a * d.a);
    }
    Ok(format!("min slack {tightest:e}"))
}

fn c8_even_cases(corpus: &[Sample]) -> Result<String, String> {
    let mut counts = [0usize; 5];
    for (idx, s) in corpus.iter().enumerate().filter(|(_, s)| s.len() % 2 == 0) {
        let z = s.standardize().map_err(|e| e.to_string())?;
        let k = (s.len() / 2) as f64;
        let half = z.median().abs();
        let label = case_classify(&z).map_err(|e| e.to_string())?;
        let bound = match label {
            CaseLabel::Zero => {
                counts[0] += 1;
                continue;
            }
            CaseLabel::I | CaseLabel::II => 0.5,
            CaseLabel::III | CaseLabel::IV => ((k - 1.0) / (k + 1.0)).sqrt(),
        };
        counts[label as usize] += 1;
        ensure(half <= bound + 1e-9, || {
            format!("sample {idx}: case {label:?} median {half} > {bound}")
        })?;
    }
    Ok(format!("Zero/I/II/III/IV counts {counts:?}"))
}

fn c9_lemma_grid() -> Result<String, String> {
    let mut points = 0;
    let steps = 200;
    for i in 1..=steps {
        for j in 1..=steps {
            let (p, q) = (i as f64 / (steps + 1) as f64, j as f64 / (steps + 1) as f64);
            if p + q > 1.0 {
                continue;
            }
            let t = lemma_pq_terms(ProbabilitySplit::new(p, q).map_err(|e| e.to_string())?);
            ensure(t.holds(1e-12), || format!("p={p} q={q}: {t:?}"))?;
            points += 1;
        }
    }
    Ok(format!("{points} grid points"))
}

fn c10_majindar() -> Result<String, String> {
    let mut rng = substream(CORPUS_SEED, 1);
    let (mut checked, mut skipped, mut boundary) = (0, 0, 0);
    for i in 0..10_000 {
        let d = random_distribution(&mut rng, 2 + i % 5);
        match majindar_check(&d) {
            Ok(c) => {
                ensure(c.ok, || format!("distribution {i}: {d:?} -> {c:?}"))?;
                checked += 1;
                if c.boundary {
                    boundary += 1;
                    println!(
                        "    boundary hit: {:?} ratio={} bound={}",
                        d.atoms(),
                        c.ratio,
                        c.bound
                    );
                }
            }
            Err(Error::MeanAtomExhaustive { .. }) => skipped += 1,
            Err(e) => return Err(format!("distribution {i}: {e}")),
        }
    }
    Ok(format!(
        "{checked} checked, {skipped} filtered (p or q = 0), {boundary} boundary hits"
    ))
}

fn c11_argmin() -> Result<String, String> {
    let mut rng = substream(CORPUS_SEED, 2);
    for idx in 0..1_000 {
        let n = rng.random_range(3..=20);
        // judged on the standardized scale, where the tolerance is defined
        let z = random_sample(&mut rng, n)
            .standardize()
            .map_err(|e| e.to_string())?;
        let s = Sample::new(z.into_values()).map_err(|e| e.to_string())?;
        let (lo, hi) = (s.values()[0], s.values()[n - 1]);
        let at_median = s.sum_abs_dev(s.median());
        for g in 0..=100 {
            let mu = lo + (hi - lo) * g as f64 / 100.0;
            let other = s.sum_abs_dev(mu);
            ensure(at_median <= other + 1e-9, || {
                format!("sample {idx}: median gives {at_median}, mu={mu} gives {other}")
            })?;
        }
    }
    Ok("1000 samples x 101 grid points".into())
}

fn run_cli(args: &[&str], stdin: &[u8]) -> (Vec<u8>, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hsbound"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("spawn hsbound");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn strip_version(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes)
        .lines()
        .filter(|l| !l.trim_start().starts_with("\"version\""))
        .collect::<Vec<_>>()
        .join("\n")
}

fn c12_cli_round_trip() -> Result<String, String> {
    for n in 3..=50 {
        for sign in ["1", "-1"] {
            let n_arg = n.to_string();
            let (doc, code) = run_cli(&["extremal", "--n", &n_arg, "--sign", sign, "--json"], b"");
            ensure(code == 0, || {
                format!("extremal n={n} sign={sign} exit {code}")
            })?;
            let (out, code) = run_cli(&["check", "--json"], &doc);
            ensure(code == 0, || format!("check n={n} sign={sign} exit {code}"))?;
            let report: serde_json::Value =
                serde_json::from_slice(&out).map_err(|e| e.to_string())?;
            ensure(report["results"]["is_extremal"] == true, || {
                format!("n={n} sign={sign}: not extremal: {}", report["results"])
            })?;
        }
    }
    let invocations: [&[&str]; 4] = [
        &[
            "extremal",
            "--n",
            "7",
            "--sign",
            "-1",
            "--location",
            "3",
            "--scale",
            "2",
            "--json",
        ],
        &["sweep", "--nmin", "3", "--nmax", "12", "--json"],
        &[
            "optimize",
            "--n",
            "6",
            "--restarts",
            "50",
            "--iters",
            "500",
            "--seed",
            "7",
            "--json",
        ],
        &["prob", "--p", "0.3", "--q", "0.2", "--json"],
    ];
    for args in invocations {
        let (a, _) = run_cli(args, b"");
        let (b, _) = run_cli(args, b"");
        ensure(strip_version(&a) == strip_version(&b), || {
            format!("{args:?} is not deterministic")
        })?;
    }
    let (a, _) = run_cli(&["check", "--json"], b"1 2 3 4 100");
    let (b, _) = run_cli(&["check", "--json"], b"1 2 3 4 100");
    ensure(a == b, || "check output differs between runs".into())?;
    Ok("96 extremal->check pipelines; 5 invocations byte-identical".into())
}

#[test]
fn acceptance_criteria() {
    let suite_start = Instant::now();
    let secs = Duration::from_secs;
    let mut outcomes = vec![
        criterion(1, "sharp-bound table", Some(secs(1)), c1_sharp_table),
        criterion(2, "attainment n in [3, 200]", Some(secs(1)), c2_attainment),
        criterion(3, "two-block oracle tightness", Some(secs(5)), c3_oracle),
        criterion(
            4,
            "optimizer ceiling and near-attainment",
            Some(secs(30)),
            c4_optimizer,
        ),
    ];

    let mut corpus_data = Vec::new();
    let mut c5 = criterion(
        5,
        "deviation chain and |ratio| <= 1",
        Some(secs(10)),
        || {
            corpus_data = corpus();
            c5_chain(&corpus_data)
        },
    );
    c5.detail = format!("{} (corpus generation included)", c5.detail);
    outcomes.push(c5);
    outcomes.push(criterion(
        6,
        "order-statistic ranges",
        Some(secs(10)),
        || c6_order_stats(&corpus_data),
    ));
    outcomes.push(criterion(7, "Cauchy-Schwarz imbalance bound", None, || {
        c7_cauchy_schwarz(&corpus_data)
    }));
    outcomes.push(criterion(8, "even-n case bounds", None, || {
        c8_even_cases(&corpus_data)
    }));
    outcomes.push(criterion(
        9,
        "lemma grid 200x200",
        Some(secs(1)),
        c9_lemma_grid,
    ));
    outcomes.push(criterion(
        10,
        "Majindar conformance",
        Some(secs(10)),
        c10_majindar,
    ));
    outcomes.push(criterion(
        11,
        "median minimizes absolute deviation",
        None,
        c11_argmin,
    ));
    let mut c12 = criterion(
        12,
        "CLI round trip and determinism",
        None,
        c12_cli_round_trip,
    );
    let total = suite_start.elapsed();
    if total > secs(60) {
        c12.passed = false;
    }
    c12.detail = format!("{}; suite total {total:.2?} (limit 60s)", c12.detail);
    outcomes.push(c12);

    println!();
    for o in &outcomes {
        println!(
            "[{}] {:>2}. {} ({:.2?}): {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.id,
            o.name,
            o.elapsed,
            o.detail
        );
    }
    let failed: Vec<u32> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.id)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
