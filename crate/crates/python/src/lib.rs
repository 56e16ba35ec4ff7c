//! Python bindings: the `assprime` extension module.

use assprime::ass::{ass_module, ass_profile, ass_ring_quotient, irreducible_decomposition};
use assprime::gb::named_example as run_named_example;
use assprime::parse::parse_monomial_ideal;
use assprime::persistence::{persistence_check, ratliff_rush, DEFAULT_RATLIFF_RUSH_CAP};
use assprime::sums;
use assprime::{AssSet, MonomialIdeal, Ring};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

create_exception!(
    assprime,
    AssprimeError,
    PyValueError,
    "Error raised by the assprime library."
);

fn err(e: assprime::Error) -> PyErr {
    AssprimeError::new_err(e.to_string())
}

fn to_json(value: &impl Serialize) -> PyResult<String> {
    serde_json::to_string(value).map_err(|e| AssprimeError::new_err(e.to_string()))
}

fn names(set: &AssSet) -> Vec<Vec<String>> {
    set.iter().map(|p| p.names()).collect()
}

/// A monomial ideal given by its minimal generators.
#[pyclass(
    name = "MonomialIdeal",
    module = "assprime",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyMonomialIdeal {
    inner: MonomialIdeal,
}

impl From<MonomialIdeal> for PyMonomialIdeal {
    fn from(inner: MonomialIdeal) -> Self {
        PyMonomialIdeal { inner }
    }
}

#[pymethods]
impl PyMonomialIdeal {
    /// Parse generators such as `"x^2, x*y"` in the ring with the given variables.
    #[staticmethod]
    fn parse(variables: Vec<String>, generators: &str) -> PyResult<Self> {
        let ring = Ring::new(&variables).map_err(err)?;
        Ok(parse_monomial_ideal(&ring, generators).map_err(err)?.into())
    }

    #[staticmethod]
    fn from_exponents(variables: Vec<String>, exponents: Vec<Vec<u32>>) -> PyResult<Self> {
        let ring = Ring::new(&variables).map_err(err)?;
        Ok(MonomialIdeal::from_exponents(ring, &exponents)
            .map_err(err)?
            .into())
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.inner.ring().vars().to_vec()
    }

    #[getter]
    fn gens(&self) -> Vec<String> {
        let ring = self.inner.ring();
        self.inner
            .gens()
            .iter()
            .map(|g| g.display(ring).to_string())
            .collect()
    }

    fn exponents(&self) -> Vec<Vec<u32>> {
        self.inner
            .gens()
            .iter()
            .map(|g| g.exps().to_vec())
            .collect()
    }

    fn power(&self, n: u32) -> PyResult<Self> {
        Ok(self.inner.power(n).map_err(err)?.into())
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.add(&other.inner).map_err(err)?.into())
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.multiply(&other.inner).map_err(err)?.into())
    }

    fn intersect(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.intersect(&other.inner).map_err(err)?.into())
    }

    fn colon(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.colon_ideal(&other.inner).map_err(err)?.into())
    }

    /// Membership of a single monomial written like `"x^2*y"`.
    fn contains(&self, monomial: &str) -> PyResult<bool> {
        let m = parse_monomial_ideal(self.inner.ring(), monomial).map_err(err)?;
        match m.gens() {
            [g] => self.inner.contains(g).map_err(err),
            _ => Err(AssprimeError::new_err("expected a single monomial")),
        }
    }

    /// `Ass(A/I)` as sorted lists of variable names.
    fn ass(&self) -> PyResult<Vec<Vec<String>>> {
        Ok(names(&ass_ring_quotient(&self.inner).map_err(err)?))
    }

    /// Irreducible components, each as a list of pure-power generators.
    fn irreducible_decomposition(&self) -> PyResult<Vec<Vec<String>>> {
        let comps = irreducible_decomposition(&self.inner).map_err(err)?;
        Ok(comps
            .iter()
            .map(|c| PyMonomialIdeal::from(c.to_ideal()).gens())
            .collect())
    }

    /// JSON profile of `Ass(A/I^n)` and `Ass(I^{n-1}/I^n)` for `n <= max_n`.
    fn profile(&self, max_n: u32) -> PyResult<String> {
        to_json(&ass_profile(&self.inner, max_n).map_err(err)?)
    }

    /// JSON persistence report for `n <= max_n`.
    fn persistence(&self, max_n: u32) -> PyResult<String> {
        to_json(&persistence_check(&self.inner, max_n).map_err(err)?)
    }

    #[pyo3(signature = (cap = DEFAULT_RATLIFF_RUSH_CAP))]
    fn ratliff_rush(&self, cap: u32) -> PyResult<Self> {
        Ok(ratliff_rush(&self.inner, cap).map_err(err)?.closure.into())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("MonomialIdeal({} in {})", self.inner, self.inner.ring())
    }
}

/// `Ass(U/V)` for `V ⊆ U`.
#[pyfunction]
fn ass_of_quotient(upper: &PyMonomialIdeal, lower: &PyMonomialIdeal) -> PyResult<Vec<Vec<String>>> {
    Ok(names(&ass_module(&upper.inner, &lower.inner).map_err(err)?))
}

/// Closed-form `Ass((I+J)^n)` for ideals in disjoint variables.
#[pyfunction]
fn formula_ass_sum(
    left: &PyMonomialIdeal,
    right: &PyMonomialIdeal,
    n: u32,
) -> PyResult<Vec<Vec<String>>> {
    Ok(names(
        &sums::formula_ass_sum(&left.inner, &right.inner, n).map_err(err)?,
    ))
}

/// `Ass((I+J)^n)` computed directly in the joined ring.
#[pyfunction]
fn direct_ass_sum(
    left: &PyMonomialIdeal,
    right: &PyMonomialIdeal,
    n: u32,
) -> PyResult<Vec<Vec<String>>> {
    Ok(names(
        &sums::direct_ass_sum(&left.inner, &right.inner, n).map_err(err)?,
    ))
}

#[pyfunction]
fn verify_sum_formula(left: &PyMonomialIdeal, right: &PyMonomialIdeal, n: u32) -> PyResult<String> {
    to_json(&sums::verify_sum_formula(&left.inner, &right.inner, n).map_err(err)?)
}

#[pyfunction]
fn asymptotic_ass_sum(
    left: &PyMonomialIdeal,
    right: &PyMonomialIdeal,
    window: u32,
) -> PyResult<String> {
    to_json(&sums::asymptotic_ass_sum(&left.inner, &right.inner, window).map_err(err)?)
}

/// JSON report of a registered polynomial example.
#[pyfunction]
#[pyo3(signature = (name, characteristic = None, dmax = None))]
fn named_example(name: &str, characteristic: Option<u64>, dmax: Option<u32>) -> PyResult<String> {
    to_json(&run_named_example(name, characteristic, dmax).map_err(err)?)
}

/// Monomial ideals of an ideal file, by name.
#[pyfunction]
fn parse_ideal_file(text: &str) -> PyResult<Vec<(String, PyMonomialIdeal)>> {
    let file = assprime::parse_ideal_file(text).map_err(err)?;
    file.names()
        .map(|n| Ok((n.to_string(), file.monomial_ideal(n).map_err(err)?.into())))
        .collect()
}

#[pymodule(name = "assprime")]
pub fn assprime_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("AssprimeError", m.py().get_type::<AssprimeError>())?;
    m.add_class::<PyMonomialIdeal>()?;
    m.add_function(wrap_pyfunction!(ass_of_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(formula_ass_sum, m)?)?;
    m.add_function(wrap_pyfunction!(direct_ass_sum, m)?)?;
    m.add_function(wrap_pyfunction!(verify_sum_formula, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotic_ass_sum, m)?)?;
    m.add_function(wrap_pyfunction!(named_example, m)?)?;
    m.add_function(wrap_pyfunction!(parse_ideal_file, m)?)?;
    Ok(())
}
