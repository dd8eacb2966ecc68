//! Python bindings: algebra elements with exact arithmetic, plus the
//! verification suites returning JSON text.

use std::sync::Arc;

use hc::{AlgElem, AlgebraParams, CartanType, Partition, Scalar, SignedPerm};
use hecke_clifford as hc;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn scalar(s: &str) -> PyResult<Scalar> {
    s.parse().map_err(err)
}

fn partition(s: &str) -> PyResult<Partition> {
    s.parse().map_err(err)
}

fn to_json(v: &impl serde::Serialize) -> PyResult<String> {
    serde_json::to_string(v).map_err(err)
}

#[pyclass(name = "Algebra", module = "hecke_clifford_py", frozen)]
struct PyAlgebra {
    inner: Arc<hc::Algebra>,
}

#[pyclass(name = "Element", module = "hecke_clifford_py", frozen)]
struct PyElement {
    alg: Arc<hc::Algebra>,
    elem: AlgElem,
}

impl PyElement {
    fn wrap(alg: &Arc<hc::Algebra>, elem: AlgElem) -> PyElement {
        PyElement {
            alg: Arc::clone(alg),
            elem,
        }
    }

    fn same_algebra(&self, other: &PyElement) -> PyResult<()> {
        if Arc::ptr_eq(&self.alg, &other.alg) || self.alg.params() == other.alg.params() {
            Ok(())
        } else {
            Err(PyValueError::new_err("elements live in different algebras"))
        }
    }
}

#[pymethods]
impl PyAlgebra {
    /// `Algebra("B", 2, k="1", ks="1", big_n=None)`; `big_n` defaults to the Steinberg value.
    #[new]
    #[pyo3(signature = (ty, n, k = "1", ks = "1", big_n = None))]
    fn new(ty: &str, n: usize, k: &str, ks: &str, big_n: Option<&str>) -> PyResult<Self> {
        let ty: CartanType = ty.parse().map_err(err)?;
        let k = scalar(k)?;
        let ks = scalar(ks)?;
        let big_n = big_n.map(scalar).transpose()?;
        let params = match ty {
            CartanType::A => AlgebraParams::type_a(n, k),
            CartanType::B => {
                let bn = big_n.unwrap_or_else(|| AlgebraParams::steinberg_n_b(n, &k, &ks));
                AlgebraParams::type_b(n, k, ks, bn)
            }
            CartanType::D => {
                let bn = big_n.unwrap_or_else(|| AlgebraParams::steinberg_n_d(n, &k));
                AlgebraParams::type_d(n, k, bn)
            }
        };
        Ok(PyAlgebra {
            inner: Arc::new(hc::Algebra::new(params).map_err(err)?),
        })
    }

    #[getter]
    fn params(&self) -> PyResult<String> {
        to_json(self.inner.params())
    }

    fn x(&self, i: usize) -> PyResult<PyElement> {
        let e = self.inner.generator(hc::Generator::X(i)).map_err(err)?;
        Ok(PyElement::wrap(&self.inner, e))
    }

    fn c(&self, i: usize) -> PyResult<PyElement> {
        let e = self.inner.generator(hc::Generator::C(i)).map_err(err)?;
        Ok(PyElement::wrap(&self.inner, e))
    }

    /// Group element in signed window notation, e.g. `[2, -1]`.
    fn w(&self, images: Vec<i32>) -> PyResult<PyElement> {
        let perm = SignedPerm::from_images(images).map_err(err)?;
        let e = self.inner.generator(hc::Generator::W(perm)).map_err(err)?;
        Ok(PyElement::wrap(&self.inner, e))
    }

    fn scalar(&self, value: &str) -> PyResult<PyElement> {
        Ok(PyElement::wrap(
            &self.inner,
            self.inner.scalar(scalar(value)?),
        ))
    }

    fn parse(&self, text: &str) -> PyResult<PyElement> {
        let e = AlgElem::parse(text, self.inner.n()).map_err(err)?;
        Ok(PyElement::wrap(&self.inner, e))
    }

    fn dirac(&self) -> PyResult<PyElement> {
        let b = hc::DiracBundle::new(&self.inner).map_err(err)?;
        Ok(PyElement::wrap(&self.inner, b.d))
    }

    /// `(Omega_H, Omega_Seg)`.
    fn casimirs(&self) -> PyResult<(PyElement, PyElement)> {
        let b = hc::DiracBundle::new(&self.inner).map_err(err)?;
        Ok((
            PyElement::wrap(&self.inner, b.omega_h),
            PyElement::wrap(&self.inner, b.omega_seg),
        ))
    }

    #[pyo3(signature = (trials = 100, seed = 0))]
    fn pbw_check(&self, trials: usize, seed: u64) -> bool {
        self.inner.check_pbw_consistency(trials, 2, seed).ok()
    }

    fn verify_identities(&self) -> PyResult<String> {
        to_json(&hc::verify_identities(&self.inner).map_err(err)?)
    }
}

#[pymethods]
impl PyElement {
    fn __str__(&self) -> String {
        self.elem.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element({})", self.elem)
    }

    fn __add__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.same_algebra(other)?;
        Ok(PyElement::wrap(&self.alg, &self.elem + &other.elem))
    }

    fn __sub__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.same_algebra(other)?;
        Ok(PyElement::wrap(&self.alg, &self.elem - &other.elem))
    }

    fn __mul__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.same_algebra(other)?;
        let e = self.alg.multiply(&self.elem, &other.elem).map_err(err)?;
        Ok(PyElement::wrap(&self.alg, e))
    }

    fn __neg__(&self) -> PyElement {
        PyElement::wrap(&self.alg, -&self.elem)
    }

    fn __eq__(&self, other: &PyElement) -> bool {
        self.elem == other.elem
    }

    fn scale(&self, c: &str) -> PyResult<PyElement> {
        Ok(PyElement::wrap(&self.alg, self.elem.scale(&scalar(c)?)))
    }

    fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    fn parity(&self) -> &'static str {
        match self.elem.parity() {
            hc::Parity::Even => "even",
            hc::Parity::Odd => "odd",
            hc::Parity::Mixed => "mixed",
        }
    }

    fn __len__(&self) -> usize {
        self.elem.len()
    }
}

#[pyfunction]
fn schema_version() -> &'static str {
    hc::report_schema_version()
}

/// `(phi1, norm1_sq, norm2_sq, closed_form)` for a partition such as `"3,1"`.
#[pyfunction]
fn phi_maps(lambda: &str) -> PyResult<(Vec<i64>, i64, i64, i64)> {
    let d = hc::phi_maps(&partition(lambda)?);
    Ok((d.phi1, d.norm1_sq, d.norm2_sq, d.closed_form))
}

#[pyfunction]
fn distinct_partitions(n: usize) -> Vec<Vec<usize>> {
    hc::distinct_partitions(n)
        .iter()
        .map(|p| p.parts().to_vec())
        .collect()
}

/// Whether `D` acts by zero on the Steinberg-type module with its forced `N`.
#[pyfunction]
#[pyo3(signature = (ty, n, k = "1", ks = "1"))]
fn steinberg_vanishes(ty: &str, n: usize, k: &str, ks: &str) -> PyResult<bool> {
    let alg = PyAlgebra::new(ty, n, k, ks, None)?;
    let m = hc::steinberg_module(alg.inner.params()).map_err(err)?;
    let d = hc::DiracBundle::new(m.algebra()).map_err(err)?.d;
    Ok(m.act_matrix(&d).map_err(err)?.is_zero())
}

/// Cohomology summary of `X_lambda` as JSON text.
#[pyfunction]
#[pyo3(signature = (lambda, k = "1"))]
fn cohomology(lambda: &str, k: &str) -> PyResult<String> {
    let m = hc::induced_module(&partition(lambda)?, scalar(k)?).map_err(err)?;
    let c = hc::dirac_cohomology(&m).map_err(err)?;
    to_json(&c.to_json())
}

#[pyfunction]
#[pyo3(signature = (lambda, k = "1"))]
fn verify_vogan(lambda: &str, k: &str) -> PyResult<String> {
    let (rep, _) = hc::verify_vogan(&partition(lambda)?, &scalar(k)?).map_err(err)?;
    to_json(&rep)
}

#[pyfunction]
#[pyo3(signature = (n, k = "1", max_r = None))]
fn center_check(n: usize, k: &str, max_r: Option<u32>) -> PyResult<String> {
    let rep = hc::verify_zeta_surjective(n, &scalar(k)?, max_r.unwrap_or(n as u32)).map_err(err)?;
    to_json(&rep)
}

#[pymodule]
fn hecke_clifford_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyElement>()?;
    m.add_function(wrap_pyfunction!(schema_version, m)?)?;
    m.add_function(wrap_pyfunction!(phi_maps, m)?)?;
    m.add_function(wrap_pyfunction!(distinct_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(steinberg_vanishes, m)?)?;
    m.add_function(wrap_pyfunction!(cohomology, m)?)?;
    m.add_function(wrap_pyfunction!(verify_vogan, m)?)?;
    m.add_function(wrap_pyfunction!(center_check, m)?)?;
    Ok(())
}
