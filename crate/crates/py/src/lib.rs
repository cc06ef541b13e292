//! Python bindings for the `dedekind` crate.
//!
//! Polynomials cross the boundary as strings such as `"t^3 - t^2 - 2t - 8"`;
//! integers are Python ints of any size.

use dedekind::criteria::SplittingShape;
use dedekind::examples;
use dedekind::ideals::{self, PrimeFactor};
use dedekind::orders::{self, MaximalOrderBounds};
use dedekind::{Error, FpPoly, PrimeModulus, ZPoly};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn poly(s: &str) -> PyResult<ZPoly> {
    s.parse().map_err(err)
}

fn prime(p: u64) -> PyResult<PrimeModulus> {
    PrimeModulus::new(p).map_err(err)
}

/// An order of a number field, given by a multiplication table on a Z-basis.
#[pyclass(name = "Order", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyOrder(dedekind::Order);

#[pymethods]
impl PyOrder {
    /// `table[i][j]` holds the coordinates of `w_i * w_j`; `w_0` must be 1.
    #[new]
    fn new(labels: Vec<String>, table: Vec<Vec<Vec<BigInt>>>) -> PyResult<Self> {
        dedekind::Order::new(labels, table).map(PyOrder).map_err(err)
    }

    /// The order `Z[θ]` for a root of a monic irreducible polynomial.
    #[staticmethod]
    fn from_polynomial(f: &str) -> PyResult<Self> {
        orders::order_from_polynomial(&poly(f)?).map(PyOrder).map_err(err)
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        dedekind::Order::from_text(text).map(PyOrder).map_err(err)
    }

    /// The maximal cubic order of discriminant -503 with basis 1, a, b.
    #[staticmethod]
    fn example_cubic() -> Self {
        PyOrder(examples::maximal_cubic_order())
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels().to_vec()
    }

    #[getter]
    fn table(&self) -> Vec<Vec<Vec<BigInt>>> {
        self.0.table().to_vec()
    }

    fn discriminant(&self) -> BigInt {
        self.0.discriminant()
    }

    fn element(&self, coords: Vec<BigInt>) -> PyResult<PyElement> {
        self.0.element(coords).map(PyElement).map_err(err)
    }

    fn one(&self) -> PyElement {
        PyElement(self.0.one())
    }

    fn basis_element(&self, i: usize) -> PyResult<PyElement> {
        if i >= self.0.rank() {
            return Err(PyValueError::new_err(format!("basis index {i} out of range")));
        }
        Ok(PyElement(self.0.basis_element(i)))
    }

    /// The basis written in powers of the root, e.g. `(a+a^2)/2`.
    fn basis_in_root(&self) -> Vec<String> {
        self.0.basis_in_root_text()
    }

    fn p_enlarge(&self, p: u64) -> PyResult<Self> {
        Ok(PyOrder(orders::p_enlarge(&self.0, prime(p)?)))
    }

    /// Prime ideals above `p` as `(ideal, e, f)` triples.
    #[pyo3(signature = (p, bound = ideals::DEFAULT_ENUMERATION_BOUND))]
    fn factor_p(&self, p: u64, bound: u64) -> PyResult<Vec<(PyIdeal, usize, usize)>> {
        let factors = ideals::factor_p_in_order_with_bound(&self.0, prime(p)?, bound).map_err(err)?;
        Ok(factors.into_iter().map(|pf| (PyIdeal(pf.ideal), pf.e, pf.f)).collect())
    }

    /// An element whose characteristic polynomial is `Π Pᵢ^eᵢ` mod `p` and
    /// whose index is prime to `p`; `polys` pairs with `factor_p(p)`.
    #[pyo3(signature = (p, polys, bound = ideals::DEFAULT_ENUMERATION_BOUND))]
    fn good_generator(&self, p: u64, polys: Vec<String>, bound: u64) -> PyResult<PyElement> {
        let p = prime(p)?;
        let primes = ideals::factor_p_in_order_with_bound(&self.0, p, bound).map_err(err)?;
        let polys: Vec<FpPoly> =
            polys.iter().map(|s| FpPoly::parse(s, p)).collect::<Result<_, _>>().map_err(err)?;
        ideals::crt_good_generator(&self.0, p, &primes, &polys).map(PyElement).map_err(err)
    }

    fn index_form(&self) -> PyResult<String> {
        dedekind::index_form(&self.0).map(|f| f.to_string()).map_err(err)
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    fn __eq__(&self, other: &PyOrder) -> bool {
        self.0.same_as(&other.0)
    }

    fn __repr__(&self) -> String {
        format!("Order(rank={}, labels={:?})", self.0.rank(), self.0.labels())
    }
}

#[pyclass(name = "Element", frozen)]
struct PyElement(dedekind::OrderElement);

#[pymethods]
impl PyElement {
    #[getter]
    fn coords(&self) -> Vec<BigInt> {
        self.0.coords().to_vec()
    }

    #[getter]
    fn order(&self) -> PyOrder {
        PyOrder(self.0.order().clone())
    }

    fn char_poly(&self) -> String {
        self.0.char_poly().to_string()
    }

    fn trace(&self) -> BigInt {
        self.0.trace()
    }

    fn norm(&self) -> BigInt {
        self.0.norm()
    }

    /// Index of `Z[θ]` in the order; zero when `θ` does not generate the field.
    fn index(&self) -> BigInt {
        self.0.index()
    }

    fn __add__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.0.add(&other.0).map(PyElement).map_err(err)
    }

    fn __sub__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.0.sub(&other.0).map(PyElement).map_err(err)
    }

    fn __mul__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.0.mul(&other.0).map(PyElement).map_err(err)
    }

    fn __pow__(&self, e: usize, _modulo: Option<Py<PyAny>>) -> PyElement {
        PyElement(self.0.pow(e))
    }

    fn __eq__(&self, other: &PyElement) -> bool {
        self.0.order().same_as(other.0.order()) && self.0.coords() == other.0.coords()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element({})", self.0)
    }
}

/// A nonzero ideal of an order, stored as a Hermite-normal-form lattice.
#[pyclass(name = "Ideal", frozen)]
struct PyIdeal(dedekind::LatticeIdeal);

#[pymethods]
impl PyIdeal {
    #[new]
    fn new(order: &PyOrder, rows: Vec<Vec<BigInt>>) -> PyResult<Self> {
        dedekind::LatticeIdeal::from_basis(&order.0, &rows).map(PyIdeal).map_err(err)
    }

    #[staticmethod]
    fn principal(x: &PyElement) -> PyResult<Self> {
        dedekind::LatticeIdeal::principal(&x.0).map(PyIdeal).map_err(err)
    }

    #[staticmethod]
    fn from_generators(order: &PyOrder, gens: Vec<PyRef<'_, PyElement>>) -> PyResult<Self> {
        let gens: Vec<_> = gens.iter().map(|g| g.0.clone()).collect();
        ideals::ideal_from_generators(&order.0, &gens).map(PyIdeal).map_err(err)
    }

    #[getter]
    fn basis(&self) -> Vec<Vec<BigInt>> {
        self.0.basis().to_vec()
    }

    fn norm(&self) -> BigInt {
        self.0.norm()
    }

    fn minimum(&self) -> BigInt {
        self.0.minimum()
    }

    fn is_prime(&self) -> bool {
        self.0.is_prime()
    }

    fn contains(&self, x: &PyElement) -> PyResult<bool> {
        self.0.contains_element(&x.0).map_err(err)
    }

    fn valuation(&self, prime: &PyIdeal) -> PyResult<u32> {
        self.0.valuation(&prime.0).map_err(err)
    }

    fn __mul__(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        self.0.product(&other.0).map(PyIdeal).map_err(err)
    }

    fn __pow__(&self, e: u32, _modulo: Option<Py<PyAny>>) -> PyIdeal {
        PyIdeal(self.0.pow(e))
    }

    fn __eq__(&self, other: &PyIdeal) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ideal({})", self.0)
    }
}

#[pyfunction]
fn discriminant(f: &str) -> PyResult<BigInt> {
    poly(f)?.discriminant().map_err(err)
}

/// Factorization of `f` mod `p` as `(factor, exponent)` pairs.
#[pyfunction]
#[pyo3(signature = (f, p, seed = 0))]
fn factor_mod_p(f: &str, p: u64, seed: u64) -> PyResult<Vec<(String, usize)>> {
    let factors = poly(f)?.reduce_mod(prime(p)?).factor(seed).map_err(err)?;
    Ok(factors.into_iter().map(|(g, e)| (g.to_string(), e)).collect())
}

/// The cofactor `M` with `F = Π Pᵢ^eᵢ - p·M` for the given lifts and exponents.
#[pyfunction]
fn cofactor(f: &str, p: u64, lifts: Vec<(String, usize)>) -> PyResult<String> {
    let lifts: Vec<(ZPoly, usize)> =
        lifts.iter().map(|(g, e)| poly(g).map(|g| (g, *e))).collect::<PyResult<_>>()?;
    poly(f)?.cofactor_m(prime(p)?, &lifts).map(|m| m.to_string()).map_err(err)
}

/// Whether `p` divides the index of a root of `f`.
#[pyfunction]
fn index_divisible(f: &str, p: u64) -> PyResult<bool> {
    dedekind::index_divisible(&poly(f)?, prime(p)?).map(|v| v.divisible).map_err(err)
}

/// Splitting of `p` read off from `f` mod `p` as `(generator, e, f)` triples;
/// each prime is `(p, generator(θ))`.
#[pyfunction]
#[pyo3(signature = (f, p, seed = 0))]
fn split_prime(f: &str, p: u64, seed: u64) -> PyResult<Vec<(String, usize, usize)>> {
    let (_, symbols) = dedekind::factor_prime_via_polynomial(&poly(f)?, prime(p)?, seed).map_err(err)?;
    Ok(symbols.into_iter().map(|s| (s.generator_poly.to_string(), s.e, s.f)).collect())
}

/// Whether `p` is a common index divisor for a field where `p` splits with
/// the given `(f, e)` parts.
#[pyfunction]
fn common_index_divisor(p: u64, parts: Vec<(usize, usize)>) -> PyResult<bool> {
    let p = prime(p)?;
    let shape = SplittingShape::from_pairs(p, &parts).map_err(err)?;
    Ok(dedekind::common_index_divisor(p, &shape).common_index_divisor)
}

/// `(order, field discriminant, index of Z[θ])` for a monic irreducible `f`.
#[pyfunction]
#[pyo3(signature = (f, bound = 1_000_000))]
fn maximal_order(f: &str, bound: u64) -> PyResult<(PyOrder, BigInt, BigInt)> {
    let bounds = MaximalOrderBounds { trial_division: bound, enlarge_candidates: bound };
    let m = orders::maximal_order_with(&poly(f)?, bounds).map_err(err)?;
    Ok((PyOrder(m.order), m.discriminant, m.index))
}

/// Shape of `p·O` in `order` as sorted `(f, e)` pairs.
#[pyfunction]
fn factorization_shape(order: &PyOrder, p: u64) -> PyResult<Vec<(usize, usize)>> {
    let p = prime(p)?;
    let factors: Vec<PrimeFactor> = ideals::factor_p_in_order(&order.0, p).map_err(err)?;
    let shape = ideals::factorization_shape(p, &factors).map_err(err)?;
    Ok(shape.sorted_parts().into_iter().map(|s| (s.f, s.e)).collect())
}

/// Runs the worked examples against `order` (default: the -503 cubic) and
/// returns `(name, passed, expected, got)` rows.
#[pyfunction]
#[pyo3(signature = (order = None))]
fn paper_checks(order: Option<&PyOrder>) -> Vec<(String, bool, String, String)> {
    let cubic = order.map(|o| o.0.clone()).unwrap_or_else(examples::maximal_cubic_order);
    examples::run_paper_checks(&cubic)
        .into_iter()
        .map(|c| (c.name, c.passed, c.expected, c.got))
        .collect()
}

#[pymodule]
pub fn dedekind_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyOrder>()?;
    m.add_class::<PyElement>()?;
    m.add_class::<PyIdeal>()?;
    m.add_function(wrap_pyfunction!(discriminant, m)?)?;
    m.add_function(wrap_pyfunction!(factor_mod_p, m)?)?;
    m.add_function(wrap_pyfunction!(cofactor, m)?)?;
    m.add_function(wrap_pyfunction!(index_divisible, m)?)?;
    m.add_function(wrap_pyfunction!(split_prime, m)?)?;
    m.add_function(wrap_pyfunction!(common_index_divisor, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_order, m)?)?;
    m.add_function(wrap_pyfunction!(factorization_shape, m)?)?;
    m.add_function(wrap_pyfunction!(paper_checks, m)?)?;
    Ok(())
}
