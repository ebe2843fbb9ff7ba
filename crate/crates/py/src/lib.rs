use std::sync::Arc;

use lnd_core::catalog::entry_by_id;
use lnd_core::derivation::{check_lnd, Algebra as CoreAlgebra, Derivation as CoreDerivation, DEFAULT_ITER_BOUND};
use lnd_core::dsl::{parse_base_valuation, parse_model, parse_poly};
use lnd_core::invariants::{kernel_basis_bounded, ml_certificate as core_ml, rank_witness as core_rank, TruncationSpec};
use lnd_core::poly::{Poly as CorePoly, RatFunc, VarTable};
use lnd_core::run::{run, Command, RunOptions};
use lnd_core::valuation::gauss_lex_value as core_value;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py_json<'py, T: serde::Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(value_err)?;
    py.import("json")?.call_method1("loads", (text,))
}

/// Polynomial ring ℚ[params, main].
#[pyclass(frozen)]
struct Ring {
    vars: Arc<VarTable>,
}

#[pymethods]
impl Ring {
    #[new]
    #[pyo3(signature = (main, params = Vec::new()))]
    fn new(main: Vec<String>, params: Vec<String>) -> PyResult<Self> {
        Ok(Ring { vars: VarTable::with_params(&params, &main).map_err(value_err)? })
    }

    fn poly(&self, text: &str) -> PyResult<Poly> {
        Ok(Poly { inner: parse_poly(&self.vars, text).map_err(value_err)? })
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.vars.names().to_vec()
    }

    fn __repr__(&self) -> String {
        format!("Ring({})", self.vars)
    }
}

#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct Poly {
    inner: CorePoly,
}

fn arith(a: &CorePoly, b: &CorePoly, op: lnd_core::poly::ArithOp) -> PyResult<Poly> {
    Ok(Poly { inner: CorePoly::arith(a, b, op).map_err(value_err)? })
}

#[pymethods]
impl Poly {
    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.inner)
    }

    fn __add__(&self, o: &Poly) -> PyResult<Poly> {
        arith(&self.inner, &o.inner, lnd_core::poly::ArithOp::Add)
    }

    fn __sub__(&self, o: &Poly) -> PyResult<Poly> {
        arith(&self.inner, &o.inner, lnd_core::poly::ArithOp::Sub)
    }

    fn __mul__(&self, o: &Poly) -> PyResult<Poly> {
        arith(&self.inner, &o.inner, lnd_core::poly::ArithOp::Mul)
    }

    fn __neg__(&self) -> Poly {
        Poly { inner: -self.inner.clone() }
    }

    fn __pow__(&self, e: u32, _modulo: Option<u32>) -> Poly {
        Poly { inner: self.inner.pow(e) }
    }

    fn __eq__(&self, o: &Poly) -> bool {
        self.inner == o.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn total_degree(&self) -> Option<u32> {
        self.inner.total_degree()
    }
}

#[pyclass(frozen)]
struct Derivation {
    inner: CoreDerivation,
}

#[pymethods]
impl Derivation {
    /// `images` maps variable names to image text; missing variables map to 0.
    #[new]
    fn new(ring: &Ring, images: Vec<(String, String)>) -> PyResult<Self> {
        let parsed = images
            .iter()
            .map(|(v, t)| Ok((v.as_str(), parse_poly(&ring.vars, t).map_err(value_err)?)))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(Derivation { inner: CoreDerivation::from_named(&ring.vars, &parsed).map_err(value_err)? })
    }

    fn apply(&self, f: &Poly) -> PyResult<Poly> {
        Ok(Poly { inner: self.inner.apply(&f.inner).map_err(value_err)? })
    }

    #[pyo3(signature = (f, bound = DEFAULT_ITER_BOUND))]
    fn nilpotency_index(&self, f: &Poly, bound: usize) -> PyResult<Option<usize>> {
        self.inner.nilpotency_index(&f.inner, bound).map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!("Derivation({})", self.inner.describe())
    }
}

#[pyclass(frozen)]
struct Algebra {
    inner: CoreAlgebra,
}

#[pymethods]
impl Algebra {
    #[new]
    fn new(ring: &Ring, generators: Vec<String>) -> PyResult<Self> {
        let gens = generators.iter().map(|g| parse_poly(&ring.vars, g).map_err(value_err)).collect::<PyResult<Vec<_>>>()?;
        Ok(Algebra { inner: CoreAlgebra::new(&ring.vars, gens).map_err(value_err)? })
    }

    #[getter]
    fn generators(&self) -> Vec<Poly> {
        self.inner.generators().iter().map(|p| Poly { inner: p.clone() }).collect()
    }

    /// Exact subalgebra membership.
    fn contains(&self, f: &Poly) -> PyResult<bool> {
        let oracle = self.inner.oracle().map_err(value_err)?;
        Ok(oracle.test(&f.inner).map_err(value_err)?.is_member())
    }

    fn __contains__(&self, f: &Poly) -> PyResult<bool> {
        self.contains(f)
    }
}

fn collect_derivations(ds: &[Bound<'_, Derivation>]) -> Vec<CoreDerivation> {
    ds.iter().map(|d| d.get().inner.clone()).collect()
}

/// Stability and nilpotency record as a dict.
#[pyfunction]
#[pyo3(signature = (derivation, algebra, iter_bound = DEFAULT_ITER_BOUND))]
fn lnd_status<'py>(py: Python<'py>, derivation: &Derivation, algebra: &Algebra, iter_bound: usize) -> PyResult<Bound<'py, PyAny>> {
    let st = check_lnd(&derivation.inner, &algebra.inner, iter_bound).map_err(value_err)?;
    to_py_json(py, &st)
}

#[pyfunction]
fn kernel_basis(derivation: &Derivation, degree: u32) -> PyResult<Vec<Poly>> {
    let k = kernel_basis_bounded(&derivation.inner, TruncationSpec::degree(degree)).map_err(value_err)?;
    Ok(k.basis.into_iter().map(|p| Poly { inner: p }).collect())
}

#[pyfunction]
#[pyo3(signature = (algebra, derivations, word_length = 4, iter_bound = DEFAULT_ITER_BOUND))]
fn ml_certificate<'py>(
    py: Python<'py>,
    algebra: &Algebra,
    derivations: Vec<Bound<'py, Derivation>>,
    word_length: u32,
    iter_bound: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let c = core_ml(&algebra.inner, &collect_derivations(&derivations), TruncationSpec::words(word_length), iter_bound).map_err(value_err)?;
    to_py_json(py, &c)
}

/// `det(Dᵢ(b_j))`, or `None` when it vanishes.
#[pyfunction]
fn rank_witness(derivations: Vec<Bound<'_, Derivation>>, elements: Vec<Poly>) -> PyResult<Option<Poly>> {
    let bs: Vec<CorePoly> = elements.into_iter().map(|p| p.inner).collect();
    let w = core_rank(&collect_derivations(&derivations), &bs).map_err(value_err)?;
    Ok(w.map(|w| Poly { inner: w.determinant }))
}

/// Gauss-lexicographic value of `num/den` as `(main exponents, base)`.
#[pyfunction]
#[pyo3(signature = (ring, valuation, num, den = None))]
fn gauss_lex_value(ring: &Ring, valuation: &str, num: &Poly, den: Option<&Poly>) -> PyResult<(Vec<i64>, i64)> {
    let v = parse_base_valuation(&ring.vars, valuation).map_err(value_err)?;
    let den = den.map_or_else(|| CorePoly::one(&ring.vars), |d| d.inner.clone());
    let f = RatFunc::new(num.inner.clone(), den).map_err(value_err)?;
    let val = core_value(&v, &f).map_err(value_err)?;
    Ok((val.main, val.base))
}

fn command(name: &str) -> PyResult<Command> {
    Ok(match name {
        "run" => Command::Run,
        "check-lnd" => Command::CheckLnd,
        "kernel-basis" => Command::KernelBasis,
        "ml-certificate" => Command::MlCertificate,
        "plinth" => Command::Plinth,
        "lndrank" => Command::Lndrank,
        "chain" => Command::Chain,
        "valuation" => Command::Valuation,
        other => return Err(PyTypeError::new_err(format!("unknown command `{other}`"))),
    })
}

/// Parses model text and runs it; returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (text, command_name = "run"))]
fn run_model<'py>(py: Python<'py>, text: &str, command_name: &str) -> PyResult<Bound<'py, PyAny>> {
    let model = parse_model(text).map_err(value_err)?;
    let report = run(&model, command(command_name)?, &RunOptions::default()).map_err(value_err)?;
    py.import("json")?.call_method1("loads", (report.to_json(),))
}

/// Model text of a catalog entry.
#[pyfunction]
#[pyo3(signature = (entry, m = None))]
fn catalog_model(entry: &str, m: Option<i64>) -> PyResult<String> {
    let args: Vec<(String, i64)> = m.map(|m| ("m".to_string(), m)).into_iter().collect();
    Ok(entry_by_id(entry, &args).map_err(value_err)?.to_dsl())
}

#[pymodule]
fn lndcert(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ring>()?;
    m.add_class::<Poly>()?;
    m.add_class::<Derivation>()?;
    m.add_class::<Algebra>()?;
    m.add_function(wrap_pyfunction!(lnd_status, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_basis, m)?)?;
    m.add_function(wrap_pyfunction!(ml_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(rank_witness, m)?)?;
    m.add_function(wrap_pyfunction!(gauss_lex_value, m)?)?;
    m.add_function(wrap_pyfunction!(run_model, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_model, m)?)?;
    Ok(())
}
