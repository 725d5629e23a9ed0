use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use su2_discord::analytic::{self, CorrelationReport};
use su2_discord::oracle::{self, GridSpec};
use su2_discord::{ComplexMatrix, Su2InvariantState, TwiceJ};

fn to_py(e: su2_discord::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn state(two_j: u32, f: f64) -> PyResult<Su2InvariantState> {
    Su2InvariantState::from_two_j(two_j, f).map_err(to_py)
}

fn rows(m: &ComplexMatrix) -> Vec<Vec<Complex64>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)]).collect())
        .collect()
}

/// SU(2)-invariant state of a spin-j and a spin-1/2, labelled by 2j and F.
#[pyclass(name = "State", frozen)]
struct PyState {
    inner: Su2InvariantState,
}

#[pymethods]
impl PyState {
    #[new]
    fn new(two_j: u32, f: f64) -> PyResult<Self> {
        Ok(Self { inner: state(two_j, f)? })
    }

    #[getter]
    fn two_j(&self) -> u32 {
        self.inner.j().get()
    }

    #[getter]
    fn f(&self) -> f64 {
        self.inner.f()
    }

    /// Density matrix as nested lists of complex numbers.
    /// `basis` is "product" (default) or "total".
    #[pyo3(signature = (basis = "product"))]
    fn density_matrix(&self, basis: &str) -> PyResult<Vec<Vec<Complex64>>> {
        let rho = match basis {
            "product" => self.inner.build_product_basis(),
            "total" => self.inner.build_total_basis(),
            other => return Err(PyValueError::new_err(format!("unknown basis {other:?}"))),
        };
        Ok(rows(rho.matrix()))
    }

    fn spectrum(&self) -> Vec<f64> {
        self.inner.spectrum().into_values()
    }

    fn post_measurement_spectrum(&self) -> Vec<f64> {
        analytic::post_measurement_spectrum(&self.inner).to_spectrum().into_values()
    }

    fn report(&self) -> Report {
        Report(CorrelationReport::evaluate(&self.inner))
    }

    fn __repr__(&self) -> String {
        format!("State(two_j={}, f={})", self.two_j(), self.f())
    }
}

#[pyclass(name = "CorrelationReport", frozen)]
struct Report(CorrelationReport);

#[pymethods]
impl Report {
    #[getter]
    fn two_j(&self) -> u32 {
        self.0.two_j
    }
    #[getter]
    fn f(&self) -> f64 {
        self.0.f
    }
    #[getter]
    fn mutual(&self) -> f64 {
        self.0.mutual
    }
    #[getter]
    fn classical(&self) -> f64 {
        self.0.classical
    }
    #[getter]
    fn discord(&self) -> f64 {
        self.0.discord
    }
    #[getter]
    fn eof(&self) -> f64 {
        self.0.eof
    }
    #[getter]
    fn negativity(&self) -> f64 {
        self.0.negativity
    }

    fn __repr__(&self) -> String {
        let r = &self.0;
        format!(
            "CorrelationReport(two_j={}, f={}, mutual={}, classical={}, discord={}, eof={}, negativity={})",
            r.two_j, r.f, r.mutual, r.classical, r.discord, r.eof, r.negativity
        )
    }
}

#[pyfunction]
fn mutual_information(two_j: u32, f: f64) -> PyResult<f64> {
    Ok(analytic::mutual_information(&state(two_j, f)?))
}

#[pyfunction]
fn classical_correlations(two_j: u32, f: f64) -> PyResult<f64> {
    Ok(analytic::classical_correlations(&state(two_j, f)?))
}

#[pyfunction]
fn quantum_discord(two_j: u32, f: f64) -> PyResult<f64> {
    Ok(analytic::quantum_discord(&state(two_j, f)?))
}

#[pyfunction]
fn discord_large_j(two_j: u32, f: f64) -> PyResult<f64> {
    Ok(analytic::discord_large_j(&state(two_j, f)?))
}

#[pyfunction]
fn entanglement_of_formation(two_j: u32, f: f64) -> PyResult<f64> {
    Ok(analytic::entanglement_of_formation(&state(two_j, f)?))
}

#[pyfunction]
fn negativity(two_j: u32, f: f64) -> PyResult<f64> {
    Ok(oracle::negativity(&state(two_j, f)?.build_product_basis()))
}

/// Discord from brute-force minimization over qubit measurements on an
/// `n_theta x 2 n_theta` sphere grid.
#[pyfunction]
#[pyo3(signature = (two_j, f, n_theta = 64))]
fn numeric_discord(py: Python<'_>, two_j: u32, f: f64, n_theta: usize) -> PyResult<f64> {
    let s = state(two_j, f)?;
    let grid = GridSpec::square(n_theta).map_err(to_py)?;
    py.detach(|| oracle::numeric_discord_with(&s.build_product_basis(), grid))
        .map(|n| n.discord)
        .map_err(to_py)
}

#[pyfunction]
fn separability_threshold(two_j: u32) -> PyResult<f64> {
    Ok(analytic::separability_threshold(TwiceJ::new(two_j).map_err(to_py)?))
}

#[pyfunction]
fn discord_zero_point(two_j: u32) -> PyResult<f64> {
    Ok(analytic::discord_zero_point(TwiceJ::new(two_j).map_err(to_py)?))
}

#[pymodule]
fn su2discord(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyState>()?;
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(mutual_information, m)?)?;
    m.add_function(wrap_pyfunction!(classical_correlations, m)?)?;
    m.add_function(wrap_pyfunction!(quantum_discord, m)?)?;
    m.add_function(wrap_pyfunction!(discord_large_j, m)?)?;
    m.add_function(wrap_pyfunction!(entanglement_of_formation, m)?)?;
    m.add_function(wrap_pyfunction!(negativity, m)?)?;
    m.add_function(wrap_pyfunction!(numeric_discord, m)?)?;
    m.add_function(wrap_pyfunction!(separability_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(discord_zero_point, m)?)?;
    Ok(())
}
