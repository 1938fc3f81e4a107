use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyAny;

use ebr_core::constructions::{construction1, construction2, construction3, construction4};
use ebr_core::enumerate::{catalog_group, classify_report, enumerate_ebr, EnumerateOptions};
use ebr_core::{are_isomorphic, ebr_to_flagmap, regular_catalog, EdgeBiregularMap, FamilySpec, FlagMap};

fn err(e: ebr_core::Error) -> PyErr {
    if e.is_resource_bound() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn json_value<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// An edge-biregular map `(H; r0, r2, rho0, rho2)`.
#[pyclass(name = "Map", frozen)]
struct PyMap {
    inner: EdgeBiregularMap,
}

#[pymethods]
impl PyMap {
    /// Order of the group `H`.
    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    /// Slot elements as group indices, `None` for an absent slot.
    #[getter]
    fn slots(&self) -> [Option<usize>; 4] {
        self.inner.slots()
    }

    #[getter]
    fn degeneracy_class(&self) -> &'static str {
        self.inner.degeneracy_class().as_str()
    }

    fn is_closed(&self) -> bool {
        self.inner.is_closed()
    }

    /// Invariants of a closed map, or the boundary report of a boundary map, as a dict.
    fn invariants<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let text = if self.inner.is_closed() {
            serde_json::to_string(&self.inner.invariants().map_err(err)?)
        } else {
            serde_json::to_string(&self.inner.boundary_report().map_err(err)?)
        };
        json_value(py, &text.expect("serializable"))
    }

    fn twin(&self) -> PyMap {
        PyMap { inner: self.inner.twin() }
    }

    fn dual(&self) -> PyMap {
        PyMap { inner: self.inner.dual() }
    }

    fn is_fully_regular(&self) -> PyResult<bool> {
        self.inner.is_fully_regular().map_err(err)
    }

    fn is_isomorphic(&self, other: &PyMap) -> PyResult<bool> {
        are_isomorphic(&self.inner, &other.inner).map_err(err)
    }

    /// The flag map as a JSON string.
    fn flag_map(&self) -> PyResult<String> {
        let flags = ebr_to_flagmap(&self.inner).map_err(err)?;
        Ok(serde_json::to_string(&flags).expect("serializable"))
    }

    fn __repr__(&self) -> String {
        format!("Map(order={}, slots={:?})", self.inner.order(), self.inner.slots())
    }
}

/// Builds a family map, e.g. `family("torus-rect", "a=4,c=3")`.
#[pyfunction]
#[pyo3(signature = (name, params = ""))]
fn family(name: &str, params: &str) -> PyResult<PyMap> {
    let inner = FamilySpec::parse(name, params).and_then(|s| s.build()).map_err(err)?;
    Ok(PyMap { inner })
}

/// Applies construction 1..=4 to a catalogued regular map.
#[pyfunction]
fn construct(catalog: &str, construction: u8) -> PyResult<PyMap> {
    let r = regular_catalog(catalog).map_err(err)?;
    let inner = match construction {
        1 => construction1(&r),
        2 => construction2(&r),
        3 => construction3(&r),
        4 => construction4(&r),
        _ => return Err(PyValueError::new_err("construction must be 1, 2, 3 or 4")),
    }
    .map_err(err)?;
    Ok(PyMap { inner })
}

/// One map per automorphism class over a catalogued group such as `"Dih(8)"`.
#[pyfunction]
#[pyo3(signature = (group, proper = false, distinct = false, chi_max = None, threads = 1))]
fn enumerate(
    py: Python<'_>,
    group: &str,
    proper: bool,
    distinct: bool,
    chi_max: Option<i64>,
    threads: usize,
) -> PyResult<Vec<PyMap>> {
    let g = Arc::new(catalog_group(group).map_err(err)?);
    let options = EnumerateOptions {
        require_proper: proper,
        require_distinct: distinct,
        chi_max,
        threads,
        ..EnumerateOptions::default()
    };
    let maps = py.detach(|| enumerate_ebr(g, &options)).map_err(err)?;
    Ok(maps.into_iter().map(|inner| PyMap { inner }).collect())
}

/// Twin/dual classes of maps over one group, as a list of dicts.
#[pyfunction]
fn classify<'py>(py: Python<'py>, maps: Vec<PyRef<'py, PyMap>>) -> PyResult<Bound<'py, PyAny>> {
    let maps: Vec<EdgeBiregularMap> = maps.iter().map(|m| m.inner.clone()).collect();
    let report = classify_report(&maps).map_err(err)?;
    json_value(py, &serde_json::to_string(&report).expect("serializable"))
}

/// Colour names per edge for a flag map given as JSON, or `None` if no
/// alternate-edge-colouring exists.
#[pyfunction]
fn colouring(flag_map: &str) -> PyResult<Option<Vec<&'static str>>> {
    let map: FlagMap = serde_json::from_str(flag_map).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let colouring = map.alternate_edge_colouring().map_err(err)?;
    Ok(colouring.map(|c| {
        c.colours
            .iter()
            .map(|&colour| match colour {
                ebr_core::EdgeColour::Shaded => "shaded",
                ebr_core::EdgeColour::Unshaded => "unshaded",
            })
            .collect()
    }))
}

#[pymodule]
fn ebrmaps(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMap>()?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(colouring, m)?)?;
    Ok(())
}
