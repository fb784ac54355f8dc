//! Python bindings: Weyl groups, relative Coxeter systems, spiral pieces and Hecke algebra products.

use alcove_core::ddaha::{DDaha, HeckeParameters};
use alcove_core::rational::{parse_vector, Rational};
use alcove_core::relative::{is_admissible, CoxeterOrder, RelativeCoxeterSystem};
use alcove_core::root_system::parse_type_label;
use alcove_core::spiral::{GradedRootDatum, Member, Spiral};
use alcove_core::{AffineRootSystem, Element, FiniteRootSystem, NodeSet};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: alcove_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn build(label: &str, affine: bool) -> alcove_core::Result<alcove_core::WeylGroup> {
    let (t, n) = parse_type_label(label)?;
    let sys = FiniteRootSystem::build(t, n)?;
    if affine {
        Ok(alcove_core::WeylGroup::affine(AffineRootSystem::affinize(sys)?))
    } else {
        alcove_core::WeylGroup::finite(sys)
    }
}

fn rat_vec(s: &str) -> PyResult<Vec<Rational>> {
    parse_vector(s).map_err(err)
}

/// An affine (or, with `affine=False`, finite) Weyl group given by a type label such as `"C2"`.
#[pyclass(frozen)]
struct WeylGroup {
    inner: alcove_core::WeylGroup,
}

impl WeylGroup {
    fn element(&self, word: &[usize]) -> PyResult<Element> {
        let mut x = self.inner.identity();
        for &i in word {
            x = x.mul(self.inner.generator(i).map_err(err)?);
        }
        Ok(x)
    }
}

#[pymethods]
impl WeylGroup {
    #[new]
    #[pyo3(signature = (label, affine = true))]
    fn new(label: &str, affine: bool) -> PyResult<Self> {
        Ok(Self { inner: build(label, affine).map_err(err)? })
    }

    fn nodes(&self) -> Vec<usize> {
        self.inner.nodes().iter().collect()
    }

    /// Length of the product of the generators in `word`.
    fn length(&self, word: Vec<usize>) -> PyResult<usize> {
        Ok(self.inner.length(&self.element(&word)?))
    }

    /// Canonical reduced word of the product, e.g. `"s1*s0"`.
    fn reduced_word(&self, word: Vec<usize>) -> PyResult<String> {
        Ok(self.inner.format_word(&self.element(&word)?))
    }

    /// Number of elements of each length up to `radius`.
    fn ball_sizes(&self, radius: usize) -> PyResult<Vec<usize>> {
        let mut out = vec![0; radius + 1];
        for x in self.inner.enumerate_ball(radius).map_err(err)? {
            out[self.inner.length(&x)] += 1;
        }
        Ok(out)
    }

    fn __repr__(&self) -> String {
        format!("WeylGroup(nodes={:?})", self.nodes())
    }
}

/// The relative Coxeter system of `sigma`: admissibility, generators and Coxeter matrix
/// (`None` for infinite order).
#[pyfunction]
#[pyo3(signature = (label, sigma, affine = true))]
fn relative<'py>(py: Python<'py>, label: &str, sigma: Vec<usize>, affine: bool) -> PyResult<Bound<'py, PyDict>> {
    let g = build(label, affine).map_err(err)?;
    let sigma: NodeSet = sigma.into_iter().collect();
    let out = PyDict::new(py);
    let rep = is_admissible(&g, sigma).map_err(err)?;
    out.set_item("admissible", rep.admissible)?;
    if !rep.admissible {
        return Ok(out);
    }
    let rel = RelativeCoxeterSystem::new(g.clone(), sigma).map_err(err)?;
    let simples: Vec<(usize, String, usize)> =
        rel.simples().iter().map(|s| (s.node, g.format_word(&s.element), s.length)).collect();
    let matrix: Vec<Vec<Option<u32>>> = rel
        .coxeter_matrix()
        .iter()
        .map(|row| {
            row.iter()
                .map(|o| match o {
                    CoxeterOrder::Finite(k) | CoxeterOrder::ExceedsCap(k) => Some(*k),
                    CoxeterOrder::Infinite => None,
                })
                .collect()
        })
        .collect();
    out.set_item("simples", simples)?;
    out.set_item("coxeter_matrix", matrix)?;
    Ok(out)
}

/// Members of `P_n`, `L_n`, `U_n` for the cocharacter `lam`; roots as coefficient lists, `"h"` for the Cartan part.
#[pyfunction]
#[pyo3(signature = (label, theta, m, d, lam, n))]
fn spiral_degree<'py>(
    py: Python<'py>,
    label: &str,
    theta: &str,
    m: i64,
    d: i64,
    lam: &str,
    n: i64,
) -> PyResult<Bound<'py, PyDict>> {
    let (t, r) = parse_type_label(label).map_err(err)?;
    let sys = FiniteRootSystem::build(t, r).map_err(err)?;
    let datum = GradedRootDatum::new(sys.clone(), rat_vec(theta)?, m, d).map_err(err)?;
    let spiral = Spiral::from_cochar(&datum, rat_vec(lam)?, datum.epsilon());
    let piece = spiral.degree(n);
    let show = |v: &[Member]| -> Vec<String> {
        v.iter()
            .map(|x| match x {
                Member::Cartan => "h".to_string(),
                Member::Root(i) => format!("{:?}", sys.roots()[*i]),
            })
            .collect()
    };
    let out = PyDict::new(py);
    out.set_item("P", show(&piece.p))?;
    out.set_item("L", show(&piece.l))?;
    out.set_item("U", show(&piece.u))?;
    Ok(out)
}

/// Normal form of `x * y` in the degenerate double affine Hecke algebra of an affine Weyl group.
#[pyfunction]
#[pyo3(signature = (label, x, y, m = 1, d = 1, c = 2))]
fn ddaha_multiply(label: &str, x: &str, y: &str, m: i64, d: i64, c: i64) -> PyResult<String> {
    let g = build(label, true).map_err(err)?;
    let p = HeckeParameters::uniform(&g, m, d, c);
    let alg = DDaha::new(g, p).map_err(err)?;
    let prod = alg.multiply(&alg.parse(x).map_err(err)?, &alg.parse(y).map_err(err)?).map_err(err)?;
    Ok(alg.format(&prod))
}

#[pymodule]
#[pyo3(name = "alcove")]
fn alcove(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<WeylGroup>()?;
    m.add_function(wrap_pyfunction!(relative, m)?)?;
    m.add_function(wrap_pyfunction!(spiral_degree, m)?)?;
    m.add_function(wrap_pyfunction!(ddaha_multiply, m)?)?;
    Ok(())
}
