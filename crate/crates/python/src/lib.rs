use hsbound_core as core;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn to_py(err: core::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn sign_from(sign: i64) -> PyResult<core::Sign> {
    core::Sign::try_from(sign).map_err(to_py)
}

/// Sorted sample of at least two finite values.
#[pyclass(name = "Sample", frozen)]
pub struct PySample {
    inner: core::Sample,
}

#[pymethods]
impl PySample {
    #[new]
    fn new(values: Vec<f64>) -> PyResult<Self> {
        Ok(Self {
            inner: core::Sample::new(values).map_err(to_py)?,
        })
    }

    #[getter]
    fn values(&self) -> Vec<f64> {
        self.inner.values().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn mean(&self) -> f64 {
        self.inner.mean()
    }

    /// Population standard deviation (divisor n).
    fn stddev(&self) -> f64 {
        self.inner.stddev()
    }

    fn median(&self) -> f64 {
        self.inner.median()
    }

    /// (median - mean) / sd; raises ValueError on constant data.
    fn skewness(&self) -> PyResult<f64> {
        self.inner.skewness().map_err(to_py)
    }

    fn standardize(&self) -> PyResult<Vec<f64>> {
        Ok(self.inner.standardize().map_err(to_py)?.into_values())
    }

    fn sum_abs_dev(&self, mu: f64) -> f64 {
        self.inner.sum_abs_dev(mu)
    }

    /// (|med - mean|, mean|x - med|, mean|x - mean|, sd)
    fn chain_terms(&self) -> (f64, f64, f64, f64) {
        let t = self.inner.chain_terms();
        (t.median_gap, t.mad_median, t.mad_mean, t.sd)
    }

    fn __repr__(&self) -> String {
        format!("Sample({:?})", self.inner.values())
    }
}

#[pyclass(name = "BoundReport", frozen, get_all)]
pub struct PyBoundReport {
    n: usize,
    ratio: f64,
    classical: f64,
    sharp: f64,
    slack: f64,
    is_extremal: bool,
    case_label: Option<String>,
}

#[pymethods]
impl PyBoundReport {
    fn __repr__(&self) -> String {
        format!(
            "BoundReport(n={}, ratio={}, sharp={}, slack={}, is_extremal={})",
            self.n, self.ratio, self.sharp, self.slack, self.is_extremal
        )
    }
}

#[pyclass(name = "MajindarCheck", frozen, get_all)]
pub struct PyMajindarCheck {
    mean: f64,
    variance: f64,
    median: f64,
    p: f64,
    q: f64,
    ratio: f64,
    bound: f64,
    ok: bool,
    boundary: bool,
}

#[pyfunction]
fn classical_bound() -> f64 {
    core::classical_bound()
}

#[pyfunction]
fn sharp_bound(n: usize) -> PyResult<f64> {
    core::sharp_bound(n).map_err(to_py)
}

/// (lo, hi) for the i-th (1-indexed) standardized order statistic.
#[pyfunction]
fn order_stat_range(n: usize, i: usize) -> PyResult<(f64, f64)> {
    let r = core::order_stat_range(n, i).map_err(to_py)?;
    Ok((r.lo, r.hi))
}

#[pyfunction]
fn majindar_bound(p: f64, q: f64) -> PyResult<f64> {
    Ok(core::majindar_bound(
        core::ProbabilitySplit::new(p, q).map_err(to_py)?,
    ))
}

/// (pq/(p+q), p(1-p), q(1-q), (p+q)/4)
#[pyfunction]
fn lemma_pq_terms(p: f64, q: f64) -> PyResult<(f64, f64, f64, f64)> {
    let t = core::lemma_pq_terms(core::ProbabilitySplit::new(p, q).map_err(to_py)?);
    Ok((t.lhs, t.a1, t.a2, t.a3))
}

/// (low, high) of the two-block configuration with low block size j.
#[pyfunction]
fn two_block_z(n: usize, j: usize) -> PyResult<(f64, f64)> {
    let c = core::two_block_z(n, j).map_err(to_py)?;
    Ok((c.low, c.high))
}

#[pyfunction]
#[pyo3(signature = (n, sign=1))]
fn extremal_z(n: usize, sign: i64) -> PyResult<Vec<f64>> {
    Ok(core::extremal_z(n, sign_from(sign)?)
        .map_err(to_py)?
        .into_values())
}

/// Extremal dataset `location + scale * z`.
#[pyfunction]
#[pyo3(signature = (n, sign=1, location=0.0, scale=1.0))]
fn extremal_sample(n: usize, sign: i64, location: f64, scale: f64) -> PyResult<PySample> {
    let z = core::extremal_z(n, sign_from(sign)?).map_err(to_py)?;
    Ok(PySample {
        inner: core::rescale(&z, location, scale).map_err(to_py)?,
    })
}

#[pyfunction]
fn check_sample(sample: &PySample) -> PyResult<PyBoundReport> {
    let r = core::check_sample(&sample.inner).map_err(to_py)?;
    Ok(PyBoundReport {
        n: r.n,
        ratio: r.ratio,
        classical: r.classical,
        sharp: r.sharp,
        slack: r.slack,
        is_extremal: r.is_extremal,
        case_label: r.case_label.map(|c| c.as_str().to_string()),
    })
}

type SweepTuple = (usize, f64, Vec<(usize, f64)>);

/// (j_star, max_ratio, [(j, ratio), ...])
#[pyfunction]
fn two_block_sweep(n: usize) -> PyResult<SweepTuple> {
    let r = core::two_block_sweep(n).map_err(to_py)?;
    Ok((r.j_star, r.max_ratio, r.per_j))
}

/// (best_ratio, best_z). Releases the GIL while searching.
#[pyfunction]
fn random_search_max(
    py: Python<'_>,
    n: usize,
    restarts: usize,
    iters: usize,
    seed: u64,
) -> PyResult<(f64, Vec<f64>)> {
    let r = py
        .detach(|| core::random_search_max(n, restarts, iters, seed))
        .map_err(to_py)?;
    Ok((r.best_ratio, r.best_z.into_values()))
}

/// Checks Majindar's bound for a distribution given as [(value, prob), ...].
#[pyfunction]
fn majindar_check(atoms: Vec<(f64, f64)>) -> PyResult<PyMajindarCheck> {
    let d = core::DiscreteDistribution::new(atoms).map_err(to_py)?;
    let c = core::majindar_check(&d).map_err(to_py)?;
    Ok(PyMajindarCheck {
        mean: c.mean,
        variance: c.variance,
        median: c.median,
        p: c.p,
        q: c.q,
        ratio: c.ratio,
        bound: c.bound,
        ok: c.ok,
        boundary: c.boundary,
    })
}

#[pymodule]
fn hsbound(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySample>()?;
    m.add_class::<PyBoundReport>()?;
    m.add_class::<PyMajindarCheck>()?;
    m.add_function(wrap_pyfunction!(classical_bound, m)?)?;
    m.add_function(wrap_pyfunction!(sharp_bound, m)?)?;
    m.add_function(wrap_pyfunction!(order_stat_range, m)?)?;
    m.add_function(wrap_pyfunction!(majindar_bound, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_pq_terms, m)?)?;
    m.add_function(wrap_pyfunction!(two_block_z, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_z, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_sample, m)?)?;
    m.add_function(wrap_pyfunction!(check_sample, m)?)?;
    m.add_function(wrap_pyfunction!(two_block_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(random_search_max, m)?)?;
    m.add_function(wrap_pyfunction!(majindar_check, m)?)?;
    Ok(())
}
