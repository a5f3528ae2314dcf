//! Python bindings. Rationals cross the boundary as "a/b" strings so nothing
//! is rounded; `fractions.Fraction` parses them directly.

use berkdyn::berkovich::BerkPoint;
use berkdyn::crucial_measure::{crucial_measure, CrucialError};
use berkdyn::dynamics_reports::lyapunov_of;
use berkdyn::ordres_minresloc::{min_res_loc, ord_res_at};
use berkdyn::rational_map::{Poly, RationalMap};
use berkdyn::valued_field::{fmt_rat, parse_rat, Rat};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn coeffs(v: &[String]) -> PyResult<Vec<Rat>> {
    v.iter()
        .map(|s| parse_rat(s).ok_or_else(|| PyValueError::new_err(format!("bad coefficient {s:?}"))))
        .collect()
}

/// A rational map over ℚ with the p-adic absolute value.
#[pyclass(name = "RationalMap", module = "berkdyn_py")]
pub struct PyRationalMap {
    inner: RationalMap,
}

#[pymethods]
impl PyRationalMap {
    /// Coefficients ascending in z, as "a/b" strings.
    #[new]
    fn new(p: u64, num: Vec<String>, den: Vec<String>) -> PyResult<Self> {
        let m = RationalMap::new(&Poly::new(coeffs(&num)?), &Poly::new(coeffs(&den)?), p).map_err(err)?;
        Ok(PyRationalMap { inner: m })
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.p
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn ord_res(&self) -> i64 {
        self.inner.ord_res()
    }

    fn iterate(&self, n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("n must be at least 1"));
        }
        Ok(PyRationalMap { inner: self.inner.iterate(n) })
    }

    /// ordRes at a point given as "disk:a/b:t".
    fn ord_res_at(&self, point: &str) -> PyResult<String> {
        let z = BerkPoint::parse(point, self.inner.p).ok_or_else(|| PyValueError::new_err(format!("bad point {point:?}")))?;
        Ok(fmt_rat(&ord_res_at(&self.inner, &z).map_err(err)?))
    }

    /// {"ends": [...], "value": str, "certified_rational_scope": bool}
    fn min_res_loc<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let loc = min_res_loc(&self.inner).map_err(err)?;
        let d = PyDict::new(py);
        let ends: Vec<String> = loc.endpoints().iter().map(|x| x.to_string()).collect();
        d.set_item("ends", PyList::new(py, ends)?)?;
        d.set_item("value", fmt_rat(&loc.value))?;
        d.set_item("certified_rational_scope", loc.certificate.certified_rational_scope)?;
        Ok(d)
    }

    /// {"complete": bool, "atoms": [(point, weight, mass)], "deficit": int}
    fn crucial_measure<'py>(&self, py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        match crucial_measure(&self.inner, n) {
            Ok(cm) => {
                let atoms: Vec<(String, u64, String)> = cm
                    .atoms
                    .iter()
                    .map(|w| {
                        let m = Rat::new(w.weight.into(), (cm.degree - 1).into());
                        (w.point.to_string(), w.weight, fmt_rat(&m))
                    })
                    .collect();
                d.set_item("complete", true)?;
                d.set_item("atoms", atoms)?;
                d.set_item("deficit", 0)?;
            }
            Err(CrucialError::IncompleteEnumeration { found, deficit, .. }) => {
                let atoms: Vec<(String, u64)> = found.iter().map(|w| (w.point.to_string(), w.weight)).collect();
                d.set_item("complete", false)?;
                d.set_item("atoms", atoms)?;
                d.set_item("deficit", deficit)?;
            }
            Err(e) => return Err(err(e)),
        }
        Ok(d)
    }

    /// The Lyapunov estimate against ν_φⁿ; None when the measure is not certified.
    fn lyapunov(&self, n: usize) -> PyResult<Option<String>> {
        match crucial_measure(&self.inner, n) {
            Ok(cm) => Ok(Some(fmt_rat(&lyapunov_of(&self.inner, &cm).map_err(err)?))),
            Err(CrucialError::IncompleteEnumeration { .. }) => Ok(None),
            Err(e) => Err(err(e)),
        }
    }

    fn __repr__(&self) -> String {
        format!("RationalMap({})", self.inner)
    }
}

/// Run the command-line driver in-process: (exit code, stdout, stderr).
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let out = berkdyn::cli::run(std::iter::once("berkdyn".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
pub fn berkdyn_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRationalMap>()?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
