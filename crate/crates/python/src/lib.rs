//! Python bindings. Every value crosses the boundary as exact text
//! (`"3/5"`, `"1/2s2"`, `"1/2*x^2 - x"`); floats only appear through `approx`.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qudit_core as core;
use qudit_core::{AmplitudeQ2, Error};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero | Error::ZeroDenominator(_) => {
            PyZeroDivisionError::new_err(e.to_string())
        }
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Accepts an `int` or a rational literal such as `"-3/4"`.
fn rational_arg(v: &Bound<'_, PyAny>) -> PyResult<core::Rational> {
    if let Ok(n) = v.extract::<i64>() {
        return Ok(core::Rational::from(n));
    }
    let s: String = v.extract()?;
    s.parse().map_err(py_err)
}

/// Accepts an `Amplitude`, an `int` or an amplitude literal.
fn amplitude_arg(v: &Bound<'_, PyAny>) -> PyResult<AmplitudeQ2> {
    if let Ok(a) = v.extract::<PyRef<'_, Amplitude>>() {
        return Ok(a.0.clone());
    }
    if let Ok(n) = v.extract::<i64>() {
        return Ok(AmplitudeQ2::from(n));
    }
    let s: String = v.extract()?;
    s.parse().map_err(py_err)
}

/// Exact element of Q(i, sqrt 2).
#[pyclass(
    name = "Amplitude",
    module = "boole_qudit",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct Amplitude(AmplitudeQ2);

#[pymethods]
impl Amplitude {
    #[new]
    #[pyo3(signature = (value = None))]
    fn py_new(value: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        value
            .map_or(Ok(AmplitudeQ2::zero()), amplitude_arg)
            .map(Amplitude)
    }

    #[staticmethod]
    fn sqrt2() -> Self {
        Amplitude(AmplitudeQ2::sqrt2())
    }

    #[staticmethod]
    fn inv_sqrt2() -> Self {
        Amplitude(AmplitudeQ2::inv_sqrt2())
    }

    #[staticmethod]
    fn i() -> Self {
        Amplitude(AmplitudeQ2::i())
    }

    /// `(a, ai, b, bi)` as rational strings.
    fn parts(&self) -> (String, String, String, String) {
        let v = &self.0;
        (
            v.a().to_string(),
            v.ai().to_string(),
            v.b().to_string(),
            v.bi().to_string(),
        )
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn conj(&self) -> Self {
        Amplitude(self.0.conj())
    }

    fn norm_sq(&self) -> Self {
        Amplitude(self.0.norm_sq())
    }

    /// Complex float approximation, for display only.
    fn approx(&self) -> (f64, f64) {
        self.0.approx()
    }

    fn __add__(&self, rhs: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Amplitude(&self.0 + &amplitude_arg(rhs)?))
    }

    fn __radd__(&self, lhs: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Amplitude(&amplitude_arg(lhs)? + &self.0))
    }

    fn __sub__(&self, rhs: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Amplitude(&self.0 - &amplitude_arg(rhs)?))
    }

    fn __rsub__(&self, lhs: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Amplitude(&amplitude_arg(lhs)? - &self.0))
    }

    fn __mul__(&self, rhs: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Amplitude(&self.0 * &amplitude_arg(rhs)?))
    }

    fn __rmul__(&self, lhs: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Amplitude(&amplitude_arg(lhs)? * &self.0))
    }

    fn __neg__(&self) -> Self {
        Amplitude(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Amplitude('{}')", self.0)
    }
}

/// Univariate polynomial with exact rational coefficients.
#[pyclass(
    name = "Polynomial",
    module = "boole_qudit",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct Polynomial(core::Polynomial);

#[pymethods]
impl Polynomial {
    #[new]
    fn py_new(text: &str) -> PyResult<Self> {
        text.parse().map(Polynomial).map_err(py_err)
    }

    /// Coefficients from the constant term upward.
    fn coeffs(&self) -> Vec<String> {
        self.0.coeffs().iter().map(ToString::to_string).collect()
    }

    /// `None` for the zero polynomial.
    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    fn eval(&self, at: &Bound<'_, PyAny>) -> PyResult<String> {
        Ok(self.0.eval(&rational_arg(at)?).to_string())
    }

    fn divmod(&self, divisor: &Polynomial) -> PyResult<(Polynomial, Polynomial)> {
        let (q, r) = self.0.divmod(&divisor.0).map_err(py_err)?;
        Ok((Polynomial(q), Polynomial(r)))
    }

    fn __add__(&self, rhs: &Polynomial) -> Self {
        Polynomial(&self.0 + &rhs.0)
    }

    fn __sub__(&self, rhs: &Polynomial) -> Self {
        Polynomial(&self.0 - &rhs.0)
    }

    fn __mul__(&self, rhs: &Polynomial) -> Self {
        Polynomial(&self.0 * &rhs.0)
    }

    fn __neg__(&self) -> Self {
        Polynomial(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.0)
    }
}

#[pyclass(name = "Ket", module = "boole_qudit", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct Ket(core::Ket);

#[pymethods]
impl Ket {
    #[new]
    fn py_new(entries: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        let amps = entries
            .iter()
            .map(amplitude_arg)
            .collect::<PyResult<Vec<_>>>()?;
        core::Ket::new(amps).map(Ket).map_err(py_err)
    }

    #[getter]
    fn d(&self) -> usize {
        self.0.d()
    }

    fn entries(&self) -> Vec<Amplitude> {
        self.0.entries().iter().cloned().map(Amplitude).collect()
    }

    /// Index of the single unit entry, if this is a computational basis ket.
    fn basis_index(&self) -> Option<usize> {
        self.0.basis_index()
    }

    /// `<self|other>`
    fn inner(&self, other: &Ket) -> PyResult<Amplitude> {
        core::inner_product(&self.0, &other.0)
            .map(Amplitude)
            .map_err(py_err)
    }

    fn tensor(&self, other: &Ket) -> Ket {
        Ket(core::tensor_product(&self.0, &other.0))
    }

    /// `|self><other|` as a nested list.
    fn outer(&self, other: &Ket) -> PyResult<Vec<Vec<Amplitude>>> {
        core::outer_product(&self.0, &other.0)
            .map(|m| matrix_rows(&m))
            .map_err(py_err)
    }

    fn __len__(&self) -> usize {
        self.0.d()
    }

    fn __str__(&self) -> String {
        core::render::vector_text(self.0.entries())
    }

    fn __repr__(&self) -> String {
        format!("Ket{}", self.__str__())
    }
}

fn matrix_rows(m: &core::AmpMatrix) -> Vec<Vec<Amplitude>> {
    m.iter_rows()
        .map(|r| r.iter().cloned().map(Amplitude).collect())
        .collect()
}

#[pyclass(name = "Projector", module = "boole_qudit", frozen)]
pub struct Projector(core::Projector);

#[pymethods]
impl Projector {
    #[getter]
    fn d(&self) -> usize {
        self.0.d()
    }

    #[getter]
    fn x(&self) -> usize {
        self.0.x()
    }

    fn matrix(&self) -> Vec<Vec<Amplitude>> {
        matrix_rows(self.0.matrix())
    }

    fn trace(&self) -> Amplitude {
        Amplitude(self.0.trace())
    }

    fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }

    fn is_hermitian(&self) -> bool {
        self.0.is_hermitian()
    }

    fn __str__(&self) -> String {
        core::render::matrix_text(self.0.matrix(), false)
    }
}

#[pyclass(name = "Superposition", module = "boole_qudit", frozen)]
pub struct Superposition(core::Superposition);

#[pymethods]
impl Superposition {
    #[getter]
    fn d(&self) -> usize {
        self.0.d()
    }

    fn amplitudes(&self) -> Vec<Amplitude> {
        self.0.amplitudes().iter().cloned().map(Amplitude).collect()
    }

    fn norm_sq(&self) -> Amplitude {
        Amplitude(self.0.norm_sq())
    }

    fn is_normalized(&self) -> bool {
        self.0.is_normalized()
    }

    fn to_ket(&self) -> PyResult<Ket> {
        self.0.to_ket().map(Ket).map_err(py_err)
    }

    fn __str__(&self) -> String {
        core::render::superposition_text(&self.0, false)
    }
}

#[pyfunction]
fn basis_ket(d: usize, x: usize) -> PyResult<Ket> {
    core::basis_ket(d, x).map(Ket).map_err(py_err)
}

/// Components of the symbolic ket, one polynomial per level.
#[pyfunction]
fn symbolic_ket(d: usize) -> PyResult<Vec<Polynomial>> {
    let ket = core::symbolic_ket(d).map_err(py_err)?;
    Ok(ket.entries().iter().cloned().map(Polynomial).collect())
}

#[pyfunction]
fn projector(d: usize, x: usize) -> PyResult<Projector> {
    core::projector(d, x).map(Projector).map_err(py_err)
}

/// Diagonal of the symbolic projector.
#[pyfunction]
fn symbolic_projector(d: usize) -> PyResult<Vec<Polynomial>> {
    let p = core::symbolic_projector(d).map_err(py_err)?;
    Ok(p.diagonal().iter().cloned().map(Polynomial).collect())
}

#[pyfunction]
fn lagrange_component(d: usize, k: usize) -> PyResult<Polynomial> {
    core::lagrange_component(d, k)
        .map(Polynomial)
        .map_err(py_err)
}

#[pyfunction]
fn boole_poly(d: usize) -> PyResult<Polynomial> {
    core::boole_poly(d)
        .map(|b| Polynomial(b.poly().clone()))
        .map_err(py_err)
}

#[pyfunction]
fn reduce_mod_boole(p: &Polynomial, d: usize) -> PyResult<Polynomial> {
    core::reduce_mod_boole(&p.0, d)
        .map(Polynomial)
        .map_err(py_err)
}

#[pyfunction]
fn completeness_sum(d: usize) -> PyResult<Vec<Vec<Amplitude>>> {
    core::completeness_sum(d)
        .map(|m| matrix_rows(&m))
        .map_err(py_err)
}

/// Circuit-built Bell ket `CNOT (H x I) |x y>`.
#[pyfunction]
fn bell_state(x: u64, y: u64) -> PyResult<Ket> {
    core::bell_state(x, y)
        .map(|s| Ket(s.ket().clone()))
        .map_err(py_err)
}

#[pyfunction]
fn bell_closed_form(x: u64, y: u64) -> PyResult<Ket> {
    core::bell_closed_form(x, y).map(Ket).map_err(py_err)
}

#[pyfunction]
fn superpose(d: usize, amps: Vec<Bound<'_, PyAny>>) -> PyResult<Superposition> {
    let amps = amps
        .iter()
        .map(amplitude_arg)
        .collect::<PyResult<Vec<_>>>()?;
    core::superpose(d, amps).map(Superposition).map_err(py_err)
}

/// Runs the identity sweep; returns `{"overall": bool, "checks": [...]}`.
#[pyfunction]
#[pyo3(signature = (max_d, cap = core::DEFAULT_D_CAP))]
fn verify<'py>(py: Python<'py>, max_d: usize, cap: usize) -> PyResult<Bound<'py, PyDict>> {
    let report = core::run_verify(max_d, cap).map_err(py_err)?;
    let checks = report
        .checks
        .iter()
        .map(|c| (c.name, c.d, c.passed, c.witness.clone()))
        .collect::<Vec<_>>();
    let out = PyDict::new(py);
    out.set_item("overall", report.overall)?;
    out.set_item("d_range", (*report.d_range.start(), *report.d_range.end()))?;
    out.set_item("checks", checks)?;
    Ok(out)
}

#[pymodule]
pub fn boole_qudit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Amplitude>()?;
    m.add_class::<Polynomial>()?;
    m.add_class::<Ket>()?;
    m.add_class::<Projector>()?;
    m.add_class::<Superposition>()?;
    m.add_function(wrap_pyfunction!(basis_ket, m)?)?;
    m.add_function(wrap_pyfunction!(symbolic_ket, m)?)?;
    m.add_function(wrap_pyfunction!(projector, m)?)?;
    m.add_function(wrap_pyfunction!(symbolic_projector, m)?)?;
    m.add_function(wrap_pyfunction!(lagrange_component, m)?)?;
    m.add_function(wrap_pyfunction!(boole_poly, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_mod_boole, m)?)?;
    m.add_function(wrap_pyfunction!(completeness_sum, m)?)?;
    m.add_function(wrap_pyfunction!(bell_state, m)?)?;
    m.add_function(wrap_pyfunction!(bell_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(superpose, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
