//! Python bindings. Weights are passed as strings like "1/2,-1" or as
//! sequences of ints, strings or `fractions.Fraction`; results come back as
//! plain dicts and lists with rationals rendered as strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyString;
use serde::Serialize;

use supertypical::central::{classify, g0_char_of, g_char_of, weights_of_char};
use supertypical::character::{truncated_character, truncated_induced_character};
use supertypical::flags::{block_decompose, blocks_to_json, induction_flag, restriction_flag};
use supertypical::mates::{construct_mate, verify_mate, verify_perfect};
use supertypical::weight::parse_rational;
use supertypical::weyl::DEFAULT_ORDER_CAP;
use supertypical::{Ambient, BlockContext, Direction, GradedVermaFlag, Parity, Weight};

fn err(e: supertypical::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn weight_arg(obj: &Bound<'_, PyAny>) -> PyResult<Weight> {
    if let Ok(s) = obj.cast::<PyString>() {
        return Weight::parse(s.to_str()?).map_err(err);
    }
    let mut coords = Vec::new();
    for item in obj.try_iter()? {
        let text = item?.str()?.to_string();
        coords.push(parse_rational(&text).map_err(err)?);
    }
    Ok(Weight::new(coords))
}

/// Root data and Weyl group of B(0,l), gl(m,n) or B(m,n).
#[pyclass(name = "Superalgebra", frozen)]
struct PySuperalgebra {
    inner: supertypical::Superalgebra,
}

impl PySuperalgebra {
    fn lambda(&self, weight: &Bound<'_, PyAny>, lambda_plus_rho: bool) -> PyResult<Weight> {
        let w = weight_arg(weight)?;
        self.inner.data.check_rank(&w).map_err(err)?;
        Ok(if lambda_plus_rho { &w - self.inner.data.rho() } else { w })
    }
}

#[pymethods]
impl PySuperalgebra {
    #[new]
    #[pyo3(signature = (family, cap = DEFAULT_ORDER_CAP))]
    fn new(family: &str, cap: usize) -> PyResult<Self> {
        let spec = family.parse().map_err(err)?;
        Ok(PySuperalgebra { inner: supertypical::Superalgebra::with_cap(spec, cap).map_err(err)? })
    }

    #[getter]
    fn family(&self) -> String {
        self.inner.data.spec().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.data.rank()
    }

    #[getter]
    fn weyl_order(&self) -> usize {
        self.inner.weyl.order()
    }

    fn roots(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let d = &self.inner.data;
        let v = serde_json::json!({
            "even_positive_roots": d.delta0_plus(),
            "odd_positive_roots": d.delta1_plus(),
            "isotropic_roots": d.isotropic_roots(),
            "simple_roots": d.simple_roots(),
            "rho": d.rho(),
            "rho0": d.rho0(),
            "rho1": d.rho1(),
        });
        to_py(py, &v)
    }

    #[pyo3(signature = (weight, lambda_plus_rho = false))]
    fn classify(&self, py: Python<'_>, weight: &Bound<'_, PyAny>, lambda_plus_rho: bool) -> PyResult<Py<PyAny>> {
        let lam = self.lambda(weight, lambda_plus_rho)?;
        to_py(py, &classify(&self.inner.data, &lam).map_err(err)?)
    }

    #[pyo3(signature = (weight, lambda_plus_rho = false))]
    fn central_character(
        &self,
        py: Python<'_>,
        weight: &Bound<'_, PyAny>,
        lambda_plus_rho: bool,
    ) -> PyResult<Py<PyAny>> {
        let lam = self.lambda(weight, lambda_plus_rho)?;
        to_py(py, &g_char_of(&self.inner.data, &self.inner.weyl, &lam).map_err(err)?)
    }

    fn g0_character(&self, py: Python<'_>, weight: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
        let mu = self.lambda(weight, false)?;
        to_py(py, &g0_char_of(&self.inner.data, &self.inner.weyl, &mu).map_err(err)?)
    }

    /// Dot orbit of λ, sorted.
    #[pyo3(signature = (weight, lambda_plus_rho = false))]
    fn orbit(&self, py: Python<'_>, weight: &Bound<'_, PyAny>, lambda_plus_rho: bool) -> PyResult<Py<PyAny>> {
        let lam = self.lambda(weight, lambda_plus_rho)?;
        let d = &self.inner.data;
        to_py(py, &self.inner.weyl.orbit(&lam, Some(d.rho()), true).map_err(err)?)
    }

    #[pyo3(signature = (weight, induced = false, lambda_plus_rho = false))]
    fn flag(
        &self,
        py: Python<'_>,
        weight: &Bound<'_, PyAny>,
        induced: bool,
        lambda_plus_rho: bool,
    ) -> PyResult<Py<PyAny>> {
        let lam = self.lambda(weight, lambda_plus_rho)?;
        let d = &self.inner.data;
        let flag = if induced { induction_flag(d, &lam, Parity::Even) } else { restriction_flag(d, &lam) };
        to_py(py, &flag.map_err(err)?)
    }

    /// Truncated character of M̃(λ) (or of Ind M(λ)) and whether it matches
    /// the sum over the corresponding Verma flag.
    #[pyo3(signature = (weight, depth = 4, induced = false))]
    fn character(&self, py: Python<'_>, weight: &Bound<'_, PyAny>, depth: usize, induced: bool) -> PyResult<Py<PyAny>> {
        let lam = self.lambda(weight, false)?;
        let d = &self.inner.data;
        let (direct, flag) = if induced {
            (truncated_induced_character(d, &lam, depth), induction_flag(d, &lam, Parity::Even))
        } else {
            let single = GradedVermaFlag::single(Ambient::G, lam.clone(), Parity::Even);
            (truncated_character(d, &single, depth), restriction_flag(d, &lam))
        };
        let direct = direct.map_err(err)?;
        let summed = truncated_character(d, &flag.map_err(err)?, depth).map_err(err)?;
        to_py(py, &serde_json::json!({ "character": direct, "agrees": direct == summed }))
    }

    #[pyo3(signature = (weight, lambda_plus_rho = false))]
    fn blocks(&self, py: Python<'_>, weight: &Bound<'_, PyAny>, lambda_plus_rho: bool) -> PyResult<Py<PyAny>> {
        let lam = self.lambda(weight, lambda_plus_rho)?;
        let (d, g) = (&self.inner.data, &self.inner.weyl);
        let blocks = block_decompose(d, g, &restriction_flag(d, &lam).map_err(err)?).map_err(err)?;
        to_py(py, &blocks_to_json(&blocks))
    }

    /// Constructs the mate of the g-character of λ and verifies it.
    #[pyo3(signature = (weight, lambda_plus_rho = false))]
    fn mate(&self, py: Python<'_>, weight: &Bound<'_, PyAny>, lambda_plus_rho: bool) -> PyResult<Py<PyAny>> {
        let lam = self.lambda(weight, lambda_plus_rho)?;
        let (d, g) = (&self.inner.data, &self.inner.weyl);
        let chi_tilde = g_char_of(d, g, &lam).map_err(err)?;
        let (mate_lambda, chi) = construct_mate(d, g, &chi_tilde).map_err(err)?;
        to_py(py, &verify_mate(d, g, &mate_lambda, &chi).map_err(err)?)
    }

    #[pyo3(signature = (weight, lambda_plus_rho = false))]
    fn verify_perfect(&self, py: Python<'_>, weight: &Bound<'_, PyAny>, lambda_plus_rho: bool) -> PyResult<Py<PyAny>> {
        let lam = self.lambda(weight, lambda_plus_rho)?;
        let (d, g) = (&self.inner.data, &self.inner.weyl);
        let chi = g0_char_of(d, g, &lam).map_err(err)?;
        to_py(py, &verify_perfect(d, g, &lam, &chi).map_err(err)?)
    }

    /// Round trips of Ψ and Φ on every single-Verma flag of the block of λ.
    #[pyo3(signature = (weight, lambda_plus_rho = false))]
    fn round_trips(&self, py: Python<'_>, weight: &Bound<'_, PyAny>, lambda_plus_rho: bool) -> PyResult<Py<PyAny>> {
        let lam = self.lambda(weight, lambda_plus_rho)?;
        let (d, g) = (&self.inner.data, &self.inner.weyl);
        let chi_tilde = g_char_of(d, g, &lam).map_err(err)?;
        let ctx = BlockContext::for_character(d, g, &chi_tilde).map_err(err)?;
        let mut trips = Vec::new();
        for w in weights_of_char(d, g, &chi_tilde).map_err(err)? {
            for p in [Parity::Even, Parity::Odd] {
                let flag = GradedVermaFlag::single(Ambient::G, w.clone(), p);
                trips.push(ctx.round_trip(&flag, Direction::PhiPsi).map_err(err)?);
            }
        }
        for mu in g.orbit(&ctx.chi().base_weight(), Some(d.rho0()), true).map_err(err)? {
            let flag = GradedVermaFlag::single(Ambient::G0, mu, Parity::Even);
            trips.push(ctx.round_trip(&flag, Direction::PsiPhi).map_err(err)?);
        }
        let v = serde_json::json!({
            "mode": ctx.mode(),
            "chi_tilde": ctx.chi_tilde(),
            "chi": ctx.chi(),
            "all_equal": trips.iter().all(|t| t.equal),
            "round_trips": trips,
        });
        to_py(py, &v)
    }

    fn __repr__(&self) -> String {
        format!("Superalgebra('{}')", self.family())
    }
}

#[pyfunction]
fn selftest(py: Python<'_>) -> PyResult<Py<PyAny>> {
    to_py(py, &supertypical::selftest::run_selftest())
}

#[pymodule]
fn supertypical_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySuperalgebra>()?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
