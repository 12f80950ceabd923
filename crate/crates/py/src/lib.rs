//! Python bindings. Complex numbers cross the boundary as Python `complex`;
//! structured reports come back as plain dicts (decoded from their JSON form).

use bocher_grace::affine::{self, ConformalSimilarity};
use bocher_grace::chebyshev::{self, EllipseTraceParams};
use bocher_grace::ellipse;
use bocher_grace::numeric::{self, PointMultiset};
use bocher_grace::regularity::{self, Polygon, Tolerances};
use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

fn value_error(e: bocher_grace::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_python<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// Complex polynomial, coefficients in ascending order.
#[pyclass(name = "Polynomial", module = "bocher_grace", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPolynomial(numeric::Polynomial);

#[pymethods]
impl PyPolynomial {
    #[new]
    fn new(coeffs: Vec<Complex64>) -> PyResult<Self> {
        numeric::Polynomial::new(coeffs).map(Self).map_err(value_error)
    }

    /// Monic polynomial with the given roots.
    #[staticmethod]
    fn from_roots(roots: Vec<Complex64>) -> Self {
        Self(numeric::Polynomial::from_roots(&roots))
    }

    #[getter]
    fn coeffs(&self) -> Vec<Complex64> {
        self.0.coeffs().to_vec()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn __call__(&self, z: Complex64) -> Complex64 {
        self.0.eval(z)
    }

    fn derivative(&self) -> Self {
        Self(self.0.derivative())
    }

    fn roots(&self) -> PyResult<Vec<Complex64>> {
        find_roots(self)
    }

    fn critical_points(&self) -> PyResult<Vec<Complex64>> {
        critical_points(self)
    }

    fn __repr__(&self) -> String {
        let terms: Vec<String> = self.0.coeffs().iter().map(|c| format!("({}{:+}j)", c.re, c.im)).collect();
        format!("Polynomial([{}])", terms.join(", "))
    }
}

/// `z -> alpha z + beta conj(z) + gamma`.
#[pyclass(name = "AffineMap", module = "bocher_grace", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyAffineMap(affine::AffineMap);

#[pymethods]
impl PyAffineMap {
    #[new]
    #[pyo3(signature = (alpha, beta = Complex64::new(0.0, 0.0), gamma = Complex64::new(0.0, 0.0)))]
    fn new(alpha: Complex64, beta: Complex64, gamma: Complex64) -> PyResult<Self> {
        affine::AffineMap::new(alpha, beta, gamma).map(Self).map_err(value_error)
    }

    #[getter]
    fn alpha(&self) -> Complex64 {
        self.0.alpha
    }

    #[getter]
    fn beta(&self) -> Complex64 {
        self.0.beta
    }

    #[getter]
    fn gamma(&self) -> Complex64 {
        self.0.gamma
    }

    fn __call__(&self, z: Complex64) -> Complex64 {
        self.0.apply(z)
    }

    /// `self ∘ inner`.
    fn compose(&self, inner: &PyAffineMap) -> Self {
        Self(self.0.compose(&inner.0))
    }

    fn invert(&self) -> PyResult<Self> {
        self.0.invert().map(Self).map_err(value_error)
    }

    fn determinant(&self) -> f64 {
        self.0.determinant()
    }

    fn decompose<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        decompose(py, self)
    }

    fn unit_circle_image(&self) -> PyResult<PyEllipse> {
        self.0.unit_circle_image().map(PyEllipse).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!("AffineMap(alpha={}, beta={}, gamma={})", self.0.alpha, self.0.beta, self.0.gamma)
    }
}

#[pyclass(name = "Ellipse", module = "bocher_grace", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyEllipse(ellipse::Ellipse);

#[pymethods]
impl PyEllipse {
    #[new]
    #[pyo3(signature = (center, semi_major, semi_minor, rotation = 0.0))]
    fn new(center: Complex64, semi_major: f64, semi_minor: f64, rotation: f64) -> PyResult<Self> {
        ellipse::Ellipse::new(center, semi_major, semi_minor, rotation)
            .map(Self)
            .map_err(value_error)
    }

    /// Member `s > 0` of the family confocal with foci ±1.
    #[staticmethod]
    fn confocal(s: f64) -> PyResult<Self> {
        ellipse::confocal_member(s).map(Self).map_err(value_error)
    }

    #[getter]
    fn center(&self) -> Complex64 {
        self.0.center
    }

    #[getter]
    fn semi_major(&self) -> f64 {
        self.0.semi_major
    }

    #[getter]
    fn semi_minor(&self) -> f64 {
        self.0.semi_minor
    }

    #[getter]
    fn rotation(&self) -> f64 {
        self.0.rotation
    }

    fn foci(&self) -> (Complex64, Complex64) {
        self.0.foci()
    }

    fn eccentricity(&self) -> f64 {
        self.0.eccentricity()
    }

    fn point(&self, t: f64) -> Complex64 {
        self.0.point(t)
    }

    #[pyo3(signature = (z, tol = 1e-12))]
    fn contains_point(&self, z: Complex64, tol: f64) -> bool {
        self.0.contains_point(z, tol)
    }

    fn __repr__(&self) -> String {
        format!(
            "Ellipse(center={}, semi_major={}, semi_minor={}, rotation={})",
            self.0.center, self.0.semi_major, self.0.semi_minor, self.0.rotation
        )
    }
}

#[pyfunction]
fn find_roots(p: &PyPolynomial) -> PyResult<Vec<Complex64>> {
    numeric::find_roots(&p.0).map(PointMultiset::into_points).map_err(value_error)
}

#[pyfunction]
fn critical_points(p: &PyPolynomial) -> PyResult<Vec<Complex64>> {
    numeric::critical_points(&p.0).map(PointMultiset::into_points).map_err(value_error)
}

/// Chebyshev polynomial of the first kind `T_n(z)`.
#[pyfunction]
fn cheb_t(n: usize, z: Complex64) -> Complex64 {
    chebyshev::cheb_t(n, z)
}

/// Chebyshev polynomial of the second kind `U_n(z)`.
#[pyfunction]
fn cheb_u(n: usize, z: Complex64) -> Complex64 {
    chebyshev::cheb_u(n, z)
}

/// Roots `cos(kπ/n)` of `U_{n-1}`, k = 1..n-1.
#[pyfunction]
fn u_roots(n: usize) -> PyResult<Vec<f64>> {
    chebyshev::u_roots(n).map_err(value_error)
}

/// `T_n` at the point `(a/c) cos t + i (b/c) sin t`; the axes must satisfy
/// `(a/c)² - (b/c)² = 1`.
#[pyfunction]
fn cheb_on_ellipse(n: usize, a_over_c: f64, b_over_c: f64, t: f64) -> PyResult<Complex64> {
    let params = EllipseTraceParams::new(a_over_c, b_over_c, 0.0).map_err(value_error)?;
    Ok(chebyshev::cheb_on_ellipse(n, &params, t))
}

/// Rotation, pure stretch and similarity factors of an affine map.
#[pyfunction]
fn decompose<'py>(py: Python<'py>, map: &PyAffineMap) -> PyResult<Bound<'py, PyAny>> {
    let d = map.0.decompose().map_err(value_error)?;
    to_python(py, &d)
}

/// Fourier fit of a closed polygon against the affinely regular model.
#[pyfunction]
#[pyo3(signature = (vertices, tol = 1e-6))]
fn detect_affinely_regular<'py>(py: Python<'py>, vertices: Vec<Complex64>, tol: f64) -> PyResult<Bound<'py, PyAny>> {
    let polygon = Polygon::new(vertices).map_err(value_error)?;
    let check = regularity::detect_affinely_regular(&polygon, tol).map_err(value_error)?;
    to_python(py, &check)
}

/// Ellipse through the edge midpoints of an affinely regular polygon.
#[pyfunction]
#[pyo3(signature = (vertices, tol = 1e-6))]
fn inscribed_midpoint_ellipse(vertices: Vec<Complex64>, tol: f64) -> PyResult<PyEllipse> {
    let polygon = Polygon::new(vertices).map_err(value_error)?;
    let check = regularity::detect_affinely_regular(&polygon, tol).map_err(value_error)?;
    if let Some(rejection) = &check.rejection {
        return Err(PyValueError::new_err(format!("polygon is not affinely regular: {rejection:?}")));
    }
    regularity::inscribed_midpoint_ellipse(&check.fit)
        .map(PyEllipse)
        .map_err(value_error)
}

/// Full check on a polynomial's roots; returns the report as a dict with an
/// `outcome` of "verified", "failed" or "hypothesis-not-satisfied".
#[pyfunction]
#[pyo3(signature = (p, regular = None, critical = None, focus = None, tangency = None, midpoint = None))]
fn verify_bocher_grace<'py>(
    py: Python<'py>,
    p: &PyPolynomial,
    regular: Option<f64>,
    critical: Option<f64>,
    focus: Option<f64>,
    tangency: Option<f64>,
    midpoint: Option<f64>,
) -> PyResult<Bound<'py, PyAny>> {
    let defaults = Tolerances::default();
    let tol = Tolerances {
        regular: regular.unwrap_or(defaults.regular),
        critical: critical.unwrap_or(defaults.critical),
        focus: focus.unwrap_or(defaults.focus),
        tangency: tangency.unwrap_or(defaults.tangency),
        midpoint: midpoint.unwrap_or(defaults.midpoint),
        roots: defaults.roots,
    };
    let report = regularity::verify_bocher_grace(&p.0, &tol).map_err(value_error)?;
    to_python(py, &report)
}

/// Monic polynomial with roots `S(z)` for the roots `z` of
/// `(scale/n) T_n(z) + offset`, `S(z) = translation + multiplier z`.
#[pyfunction]
#[pyo3(signature = (n, scale, offset, translation = Complex64::new(0.0, 0.0), multiplier = Complex64::new(1.0, 0.0)))]
fn synthesize(
    n: usize,
    scale: Complex64,
    offset: Complex64,
    translation: Complex64,
    multiplier: Complex64,
) -> PyResult<PyPolynomial> {
    let similarity = ConformalSimilarity::new(translation, multiplier).map_err(value_error)?;
    regularity::synthesize(n, scale, offset, &similarity)
        .map(PyPolynomial)
        .map_err(value_error)
}

#[pymodule]
#[pyo3(name = "bocher_grace")]
fn init(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyAffineMap>()?;
    m.add_class::<PyEllipse>()?;
    m.add_function(wrap_pyfunction!(find_roots, m)?)?;
    m.add_function(wrap_pyfunction!(critical_points, m)?)?;
    m.add_function(wrap_pyfunction!(cheb_t, m)?)?;
    m.add_function(wrap_pyfunction!(cheb_u, m)?)?;
    m.add_function(wrap_pyfunction!(u_roots, m)?)?;
    m.add_function(wrap_pyfunction!(cheb_on_ellipse, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(detect_affinely_regular, m)?)?;
    m.add_function(wrap_pyfunction!(inscribed_midpoint_ellipse, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bocher_grace, m)?)?;
    m.add_function(wrap_pyfunction!(synthesize, m)?)?;
    Ok(())
}
