//! Python bindings. Elements cross the boundary by name, groups print in the
//! same canonical form as the command line.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use grothen::bar;
use grothen::completion::{self, CompletionResult};
use grothen::ku::{self, ElementaryKuModule, HomotopyGroupData};
use grothen::telescope::telescope_pi0;
use grothen::{FgAbelianGroup, FiniteMonoid, Submonoid};

create_exception!(grothen_py, GrothenError, PyValueError);

fn err(e: grothen::Error) -> PyErr {
    GrothenError::new_err(format!("{}: {e}", e.name()))
}

#[pyclass(name = "Monoid", module = "grothen_py", frozen)]
struct PyMonoid(FiniteMonoid);

#[pymethods]
impl PyMonoid {
    /// `table[i][j]` names the product of `elements[i]` and `elements[j]`.
    #[new]
    fn new(elements: Vec<String>, identity: String, table: Vec<Vec<String>>) -> PyResult<Self> {
        let file = grothen::monoid::MonoidFile { elements, identity, table };
        FiniteMonoid::from_file(&file).map(PyMonoid).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        FiniteMonoid::from_json(text).map(PyMonoid).map_err(err)
    }

    #[staticmethod]
    fn cyclic(n: usize) -> Self {
        PyMonoid(FiniteMonoid::cyclic(n))
    }

    #[staticmethod]
    fn saturating(n: usize) -> Self {
        PyMonoid(FiniteMonoid::saturating(n))
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn product(&self, other: &Self) -> PyResult<Self> {
        self.0.product(&other.0).map(PyMonoid).map_err(err)
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.0.names().to_vec()
    }

    #[getter]
    fn identity(&self) -> String {
        self.0.name(self.0.identity()).to_string()
    }

    fn op(&self, a: &str, b: &str) -> PyResult<String> {
        let (a, b) = (self.index(a)?, self.index(b)?);
        Ok(self.0.name(self.0.op(a, b)).to_string())
    }

    fn is_commutative(&self) -> bool {
        self.0.is_commutative()
    }

    fn is_group(&self) -> bool {
        self.0.is_group()
    }

    fn is_stably_group_like(&self, m0: &str) -> PyResult<bool> {
        Ok(self.0.is_stably_group_like(self.index(m0)?))
    }

    fn conjugacy_class_count(&self) -> PyResult<usize> {
        self.0.conjugacy_class_count().map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Monoid(<{} elements>)", self.0.len())
    }
}

impl PyMonoid {
    fn index(&self, name: &str) -> PyResult<usize> {
        self.0.index_of(name).map_err(err)
    }

    fn submonoid(&self, generators: &[String]) -> PyResult<Submonoid> {
        let gens = generators.iter().map(|g| self.index(g)).collect::<PyResult<Vec<_>>>()?;
        Ok(self.0.submonoid_generated(&gens))
    }
}

#[pyclass(name = "AbelianGroup", module = "grothen_py", frozen)]
struct PyGroup(FgAbelianGroup);

#[pymethods]
impl PyGroup {
    /// Builds the canonical form of `Z^rank + Z/n_1 + ...` for arbitrary orders.
    #[new]
    #[pyo3(signature = (rank = 0, orders = Vec::new()))]
    fn new(rank: usize, orders: Vec<BigInt>) -> Self {
        PyGroup(FgAbelianGroup::free(rank).direct_sum(&FgAbelianGroup::from_cyclic_orders(&orders)))
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn invariant_factors(&self) -> Vec<BigInt> {
        self.0.invariant_factors().to_vec()
    }

    /// `None` for infinite groups.
    fn order(&self) -> Option<BigInt> {
        self.0.order()
    }

    fn direct_sum(&self, other: &Self) -> Self {
        PyGroup(self.0.direct_sum(&other.0))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("AbelianGroup({:?})", self.0.to_string())
    }
}

#[pyclass(name = "HomotopyGroup", module = "grothen_py", frozen)]
struct PyHomotopy(HomotopyGroupData);

#[pymethods]
impl PyHomotopy {
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The group when every multiplicity is finite.
    fn group(&self) -> Option<PyGroup> {
        self.0.to_group().map(PyGroup)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("HomotopyGroup({:?})", self.0.to_string())
    }
}

#[pyclass(name = "KuModule", module = "grothen_py", frozen)]
struct PyKuModule(ElementaryKuModule);

#[pymethods]
impl PyKuModule {
    /// Parses an expression such as `"8*ku + S^2(ku)"`.
    #[new]
    #[pyo3(signature = (expr = "0"))]
    fn new(expr: &str) -> PyResult<Self> {
        ku::parse_module(expr).map(PyKuModule).map_err(err)
    }

    fn suspend(&self, by: u32) -> Self {
        PyKuModule(self.0.suspend(by))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn suspension_degree(&self) -> PyResult<u32> {
        ku::suspension_degree(&self.0).map_err(err)
    }

    fn pi(&self, m: i64) -> PyHomotopy {
        PyHomotopy(ku::pi(&self.0, m))
    }

    fn bott_cokernel(&self, m: i64) -> PyHomotopy {
        PyHomotopy(ku::bott_cokernel(&self.0, m))
    }

    fn bott_injective(&self, m: i64) -> bool {
        ku::bott_injective(&self.0, m)
    }

    fn deformation_rho(&self, m: i64) -> PyResult<PyHomotopy> {
        ku::deformation_rho(&self.0, m).map(PyHomotopy).map_err(err)
    }

    fn smash(&self, other: &Self) -> Self {
        PyKuModule(ku::smash(&self.0, &other.0))
    }

    fn free_product(&self, other: &Self) -> PyResult<Self> {
        ku::free_product(&self.0, &other.0).map(PyKuModule).map_err(err)
    }

    fn __add__(&self, other: &Self) -> Self {
        PyKuModule(self.0.wedge(&other.0))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("KuModule({:?})", self.0.to_string())
    }
}

fn completion_pair(r: CompletionResult) -> (PyGroup, Vec<Vec<BigInt>>) {
    (PyGroup(r.group), r.unit)
}

/// Group completion by formal differences; returns the group and the unit in coordinates.
#[pyfunction]
fn gr_pairs(m: &PyMonoid) -> PyResult<(PyGroup, Vec<Vec<BigInt>>)> {
    completion::gr_pairs(&m.0).map(completion_pair).map_err(err)
}

#[pyfunction]
fn gr_presentation(m: &PyMonoid) -> PyResult<(PyGroup, Vec<Vec<BigInt>>)> {
    completion::gr_presentation(&m.0).map(completion_pair).map_err(err)
}

#[pyfunction]
fn pi1_abelianized(m: &PyMonoid) -> PyResult<PyGroup> {
    bar::pi1_abelianized(&m.0).map(PyGroup).map_err(err)
}

#[pyfunction]
fn h1_bar(m: &PyMonoid) -> PyResult<PyGroup> {
    bar::h1_bar(&m.0).map(PyGroup).map_err(err)
}

#[pyfunction]
fn pi1_presentation(m: &PyMonoid) -> String {
    bar::pi1_presentation(&m.0).to_string()
}

/// Colimit of right multiplication by `m0`, as a monoid.
#[pyfunction]
fn telescope(m: &PyMonoid, m0: &str) -> PyResult<PyMonoid> {
    let t = telescope_pi0(&m.0, m.index(m0)?).map_err(err)?;
    Ok(PyMonoid(t.carrier))
}

/// Quotient by the submonoid generated by `sub`: the monoid and its classes by name.
#[pyfunction]
fn quotient(m: &PyMonoid, sub: Vec<String>) -> PyResult<(PyMonoid, Vec<Vec<String>>)> {
    let n = m.submonoid(&sub)?;
    let q = completion::quotient_monoid(&m.0, &n).map_err(err)?;
    let classes = q
        .classes
        .iter()
        .map(|c| c.iter().map(|&x| m.0.name(x).to_string()).collect())
        .collect();
    Ok((PyMonoid(q.monoid), classes))
}

#[pyfunction]
fn rho(m: &PyMonoid, sub: Vec<String>) -> PyResult<PyGroup> {
    let n = m.submonoid(&sub)?;
    completion::rho(&m.0, &n).map(PyGroup).map_err(err)
}

#[pyfunction]
fn finite_abelian_structure(m: &PyMonoid) -> PyResult<PyGroup> {
    grothen::lattice::structure_of_finite_abelian_group(&m.0).map(PyGroup).map_err(err)
}

#[pyfunction]
fn kdef_finite_group(irreducibles: u64) -> PyResult<PyKuModule> {
    ku::kdef_finite_group(irreducibles).map(PyKuModule).map_err(err)
}

#[pymodule]
fn grothen_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("GrothenError", m.py().get_type::<GrothenError>())?;
    m.add_class::<PyMonoid>()?;
    m.add_class::<PyGroup>()?;
    m.add_class::<PyHomotopy>()?;
    m.add_class::<PyKuModule>()?;
    m.add_function(wrap_pyfunction!(gr_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(gr_presentation, m)?)?;
    m.add_function(wrap_pyfunction!(pi1_abelianized, m)?)?;
    m.add_function(wrap_pyfunction!(h1_bar, m)?)?;
    m.add_function(wrap_pyfunction!(pi1_presentation, m)?)?;
    m.add_function(wrap_pyfunction!(telescope, m)?)?;
    m.add_function(wrap_pyfunction!(quotient, m)?)?;
    m.add_function(wrap_pyfunction!(rho, m)?)?;
    m.add_function(wrap_pyfunction!(finite_abelian_structure, m)?)?;
    m.add_function(wrap_pyfunction!(kdef_finite_group, m)?)?;
    Ok(())
}
