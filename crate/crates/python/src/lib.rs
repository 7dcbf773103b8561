//! Python bindings. Scalars cross the boundary as `fractions.Fraction` on the
//! way out and as anything whose `str()` is a rational literal on the way in
//! (`int`, `Fraction`, `"3/2"`).

use nalg::catalog::{self, FamilyId, FamilyTag};
use nalg::deformation::{self, TruncatedDeformation};
use nalg::identity::{self, check_identity_named};
use nalg::polar;
use nalg::scalar::{format_scalar, parse_scalar};
use nalg::structure;
use nalg::{format, Algebra, BilinearMap, Element, IdentityKind, IdentityReport, Scalar};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::sync::PyOnceLock;
use pyo3::types::PyDict;

create_exception!(nalg, NalgError, PyValueError, "Raised for malformed input and failed preconditions.");

fn err(e: nalg::Error) -> PyErr {
    NalgError::new_err(e.to_string())
}

static FRACTION: PyOnceLock<Py<PyAny>> = PyOnceLock::new();

fn fraction<'py>(py: Python<'py>, s: &Scalar) -> PyResult<Bound<'py, PyAny>> {
    let cls = FRACTION.get_or_try_init(py, || -> PyResult<_> {
        Ok(py.import("fractions")?.getattr("Fraction")?.unbind())
    })?;
    cls.bind(py).call1((format_scalar(s),))
}

fn scalar(obj: &Bound<'_, PyAny>) -> PyResult<Scalar> {
    let text: String = obj.str()?.extract()?;
    parse_scalar(&text).map_err(err)
}

fn element(coords: &[Bound<'_, PyAny>]) -> PyResult<Element> {
    Ok(Element::from_coords(coords.iter().map(scalar).collect::<PyResult<_>>()?))
}

fn element_out<'py>(py: Python<'py>, v: &Element) -> PyResult<Vec<Bound<'py, PyAny>>> {
    v.coords().iter().map(|c| fraction(py, c)).collect()
}

/// `table[i][j][k]` is the coefficient of `e_k` in `e_i e_j`.
fn map_from_table(table: Vec<Vec<Vec<Bound<'_, PyAny>>>>) -> PyResult<BilinearMap> {
    let n = table.len();
    let mut data = Vec::with_capacity(n * n * n);
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(NalgError::new_err(format!("table[{i}] has length {}, expected {n}", row.len())));
        }
        for (j, cell) in row.iter().enumerate() {
            if cell.len() != n {
                return Err(NalgError::new_err(format!(
                    "table[{i}][{j}] has length {}, expected {n}",
                    cell.len()
                )));
            }
            for c in cell {
                data.push(scalar(c)?);
            }
        }
    }
    BilinearMap::from_flat(n, data).map_err(err)
}

fn table_out<'py>(py: Python<'py>, m: &BilinearMap) -> PyResult<Vec<Vec<Vec<Bound<'py, PyAny>>>>> {
    let n = m.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| m.product(i, j).iter().map(|c| fraction(py, c)).collect())
                .collect()
        })
        .collect()
}

/// Outcome of an identity check; falsy when the identity fails.
#[pyclass(name = "IdentityReport", module = "nalg", frozen)]
struct PyIdentityReport {
    inner: IdentityReport,
}

#[pymethods]
impl PyIdentityReport {
    #[getter]
    fn identity(&self) -> &str {
        &self.inner.identity
    }

    #[getter]
    fn holds(&self) -> bool {
        self.inner.holds()
    }

    /// Failing basis indices, or `None` when the identity holds.
    #[getter]
    fn indices(&self) -> Option<Vec<usize>> {
        self.inner.witness.as_ref().map(|w| w.indices.clone())
    }

    #[getter]
    fn part(&self) -> Option<&str> {
        self.inner.witness.as_ref().and_then(|w| w.part.as_deref())
    }

    #[getter]
    fn defect<'py>(&self, py: Python<'py>) -> PyResult<Option<Vec<Bound<'py, PyAny>>>> {
        self.inner.witness.as_ref().map(|w| element_out(py, &w.defect)).transpose()
    }

    fn __bool__(&self) -> bool {
        self.inner.holds()
    }

    fn __str__(&self) -> String {
        self.inner.describe(None)
    }

    fn __repr__(&self) -> String {
        format!("<IdentityReport {}>", self.inner.describe(None))
    }
}

fn report(inner: IdentityReport) -> PyIdentityReport {
    PyIdentityReport { inner }
}

/// The four polarization conditions and their conjunction.
#[pyclass(name = "StructureVerdict", module = "nalg", frozen, get_all)]
struct PyStructureVerdict {
    is_symmetric_leibniz: bool,
    bullet_two_step: bool,
    bracket_jacobi: bool,
    bracket_kills_products: bool,
    bullet_kills_brackets: bool,
}

#[pymethods]
impl PyStructureVerdict {
    fn __repr__(&self) -> String {
        format!(
            "StructureVerdict(is_symmetric_leibniz={}, bullet_two_step={}, bracket_jacobi={}, \
             bracket_kills_products={}, bullet_kills_brackets={})",
            self.is_symmetric_leibniz,
            self.bullet_two_step,
            self.bracket_jacobi,
            self.bracket_kills_products,
            self.bullet_kills_brackets
        )
    }
}

/// A finite-dimensional algebra over the rationals.
#[pyclass(name = "Algebra", module = "nalg", frozen)]
struct PyAlgebra {
    inner: Algebra,
}

#[pymethods]
impl PyAlgebra {
    #[new]
    #[pyo3(signature = (table, label = None, names = None))]
    fn new(table: Vec<Vec<Vec<Bound<'_, PyAny>>>>, label: Option<String>, names: Option<Vec<String>>) -> PyResult<Self> {
        let mut inner = Algebra::new(map_from_table(table)?);
        if let Some(names) = names {
            if names.len() != inner.dim() {
                return Err(NalgError::new_err(format!(
                    "{} names given for dimension {}",
                    names.len(),
                    inner.dim()
                )));
            }
            inner = inner.with_names(names);
        }
        if let Some(label) = label {
            inner = inner.with_label(label);
        }
        Ok(PyAlgebra { inner })
    }

    #[staticmethod]
    fn zero(dim: usize) -> Self {
        PyAlgebra {
            inner: Algebra::zero(dim),
        }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyAlgebra {
            inner: format::parse_algebra(text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Ok(PyAlgebra {
            inner: format::read_algebra(path).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        format::algebra_to_json(&self.inner)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn label(&self) -> Option<&str> {
        self.inner.label()
    }

    #[getter]
    fn names(&self) -> Option<Vec<String>> {
        self.inner.names().map(<[String]>::to_vec)
    }

    fn table<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Vec<Bound<'py, PyAny>>>>> {
        table_out(py, self.inner.mult())
    }

    fn mul<'py>(
        &self,
        py: Python<'py>,
        x: Vec<Bound<'py, PyAny>>,
        y: Vec<Bound<'py, PyAny>>,
    ) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let product = self.inner.mul(&element(&x)?, &element(&y)?).map_err(err)?;
        element_out(py, &product)
    }

    /// Checks one identity by name, e.g. `"symmetric_leibniz"`.
    fn check(&self, kind: &str) -> PyResult<PyIdentityReport> {
        Ok(report(check_identity_named(&self.inner, kind).map_err(err)?))
    }

    fn check_all(&self) -> Vec<PyIdentityReport> {
        IdentityKind::ALL
            .into_iter()
            .map(|k| report(nalg::check_identity(&self.inner, k)))
            .collect()
    }

    fn commutator_derivation(&self) -> PyIdentityReport {
        report(identity::check_commutator_derivation(&self.inner))
    }

    fn four_a_bullet(&self) -> PyIdentityReport {
        report(identity::four_a_bullet_identity_check(&self.inner))
    }

    fn structure_verdict(&self) -> PyStructureVerdict {
        let v = structure::structure_verdict(&self.inner);
        PyStructureVerdict {
            is_symmetric_leibniz: v.is_symmetric_leibniz,
            bullet_two_step: v.bullet_two_step,
            bracket_jacobi: v.bracket_jacobi,
            bracket_kills_products: v.bracket_kills_products,
            bullet_kills_brackets: v.bullet_kills_brackets,
        }
    }

    /// Basis of the two-sided annihilator.
    fn center<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        let c = structure::center_of(self.inner.mult());
        c.basis().iter().map(|v| element_out(py, v)).collect()
    }

    fn polarize(&self) -> PyPolarPair {
        PyPolarPair {
            inner: polar::polarize(&self.inner),
        }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner.mult() == other.inner.mult()
    }

    fn __repr__(&self) -> String {
        match self.inner.label() {
            Some(label) => format!("<Algebra {label} dim={}>", self.inner.dim()),
            None => format!("<Algebra dim={}>", self.inner.dim()),
        }
    }
}

/// A symmetric product `bullet` and a skew `bracket` on the same space.
#[pyclass(name = "PolarPair", module = "nalg", frozen)]
struct PyPolarPair {
    inner: polar::PolarPair,
}

#[pymethods]
impl PyPolarPair {
    #[new]
    fn new(bullet: Vec<Vec<Vec<Bound<'_, PyAny>>>>, bracket: Vec<Vec<Vec<Bound<'_, PyAny>>>>) -> PyResult<Self> {
        let inner = polar::PolarPair::new(map_from_table(bullet)?, map_from_table(bracket)?).map_err(err)?;
        Ok(PyPolarPair { inner })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn bullet<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Vec<Bound<'py, PyAny>>>>> {
        table_out(py, self.inner.bullet())
    }

    fn bracket<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Vec<Bound<'py, PyAny>>>>> {
        table_out(py, self.inner.bracket())
    }

    fn depolarize(&self) -> PyAlgebra {
        PyAlgebra {
            inner: polar::depolarize(&self.inner),
        }
    }

    fn is_nonassociative_poisson(&self) -> PyIdentityReport {
        report(polar::is_nonassociative_poisson(&self.inner))
    }

    fn is_poisson(&self) -> PyIdentityReport {
        report(polar::is_poisson(&self.inner))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("<PolarPair dim={}>", self.inner.dim())
    }
}

/// Names of the catalog families.
#[pyfunction]
fn catalog_tags() -> Vec<&'static str> {
    FamilyTag::ALL.iter().map(|t| t.name()).collect()
}

/// Builds a catalog member; unspecified parameters take their defaults.
#[pyfunction]
#[pyo3(signature = (tag, params = None))]
fn catalog_build(tag: &str, params: Option<&Bound<'_, PyDict>>) -> PyResult<PyAlgebra> {
    let tag: FamilyTag = tag.parse().map_err(err)?;
    let mut id = FamilyId::new(tag);
    if let Some(params) = params {
        for (k, v) in params.iter() {
            let name: String = k.extract()?;
            id.set(&name, scalar(&v)?).map_err(err)?;
        }
    }
    Ok(PyAlgebra {
        inner: catalog::build(&id).map_err(err)?,
    })
}

/// Checks the symmetric Leibniz identities for `base + Σ t^k phis[k-1]`
/// modulo `t^(order+1)`. Returns one report per degree `0..=order`.
#[pyfunction]
#[pyo3(signature = (base, phis, order = 2))]
fn deformation_check(base: &PyAlgebra, phis: Vec<PyRef<'_, PyAlgebra>>, order: usize) -> PyResult<Vec<PyIdentityReport>> {
    let maps = phis.iter().map(|p| p.inner.mult().clone()).collect();
    let d = TruncatedDeformation::new(base.inner.clone(), maps, order).map_err(err)?;
    let r = deformation::truncated_identity_check(&d);
    Ok(r.degrees
        .iter()
        .map(|deg| {
            let witness = deg.witness().map(|(_, w)| w);
            report(IdentityReport::new(format!("t^{}", deg.degree), witness))
        })
        .collect())
}

/// The three conclusions for a first-order deformation direction.
#[pyfunction]
fn verify_deformation_theorem(base: &PyAlgebra, phi1: &PyAlgebra) -> PyResult<Vec<PyIdentityReport>> {
    let r = deformation::verify_deformation_theorem(&base.inner, phi1.inner.mult()).map_err(err)?;
    Ok(r.parts().into_iter().map(|p| report(p.clone())).collect())
}

#[pymodule]
#[pyo3(name = "nalg")]
fn nalg_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("NalgError", m.py().get_type::<NalgError>())?;
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyPolarPair>()?;
    m.add_class::<PyIdentityReport>()?;
    m.add_class::<PyStructureVerdict>()?;
    m.add_function(wrap_pyfunction!(catalog_tags, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_build, m)?)?;
    m.add_function(wrap_pyfunction!(deformation_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify_deformation_theorem, m)?)?;
    Ok(())
}
