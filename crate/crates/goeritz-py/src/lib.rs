//! Python bindings: an `Element` class wrapping the canonical normal form,
//! free functions for the free-group criteria, tree-ball export, and the
//! verification suite.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use goeritz::{
    build_ball, verify, Color, F2Word, GenWord, Isometry, NormalForm, Order, SubgroupId,
    VerifyConfig,
};

fn value_err(e: goeritz::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn color_name(c: Color) -> &'static str {
    match c {
        Color::Black => "black",
        Color::White => "white",
    }
}

/// A group element in canonical normal form.
///
/// Construct from a word over the letters `e a b g s` (uppercase for
/// inverses; `t` expands to `gbs`). Equality and hashing follow the
/// canonical form, so they decide the word problem.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Element {
    inner: NormalForm,
}

#[pymethods]
impl Element {
    #[new]
    fn new(word: &str) -> PyResult<Self> {
        let parsed: GenWord = word.parse().map_err(value_err)?;
        Ok(Element {
            inner: parsed.normal_form(),
        })
    }

    #[staticmethod]
    fn identity() -> Self {
        Element {
            inner: NormalForm::identity(),
        }
    }

    fn __mul__(&self, other: &Element) -> Element {
        Element {
            inner: self.inner.multiply(&other.inner),
        }
    }

    fn inverse(&self) -> Element {
        Element {
            inner: self.inner.inverse(),
        }
    }

    fn pow(&self, n: i64) -> Element {
        Element {
            inner: self.inner.pow(n),
        }
    }

    fn __pow__(&self, n: i64, _modulo: Option<i64>) -> Element {
        self.pow(n)
    }

    fn __eq__(&self, other: &Element) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut hasher = DefaultHasher::new();
        self.inner.hash(&mut hasher);
        hasher.finish()
    }

    fn __repr__(&self) -> String {
        format!("Element('{}')", self.inner.to_word())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    fn eps_exp(&self) -> i64 {
        self.inner.eps_exp()
    }

    fn alpha_bit(&self) -> u8 {
        self.inner.alpha_bit() as u8
    }

    fn core(&self) -> String {
        self.inner.core().iter().map(|l| l.to_char()).collect()
    }

    /// Order of the element: 1 or 2, or None for infinite order.
    fn order(&self) -> Option<u32> {
        match self.inner.order() {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    /// A word over the published generators representing this element.
    fn word(&self) -> String {
        self.inner.to_word().to_string()
    }

    /// Membership in one of: stab-e, stab-pair-setwise, stab-pair-pointwise,
    /// stab-e-eprime.
    fn is_member(&self, subgroup: &str) -> PyResult<bool> {
        let subgroup: SubgroupId = subgroup.parse().map_err(value_err)?;
        Ok(self.inner.is_member(subgroup))
    }

    /// Britton decomposition: the edge-group prefix and the list of
    /// (side, syllable) pairs.
    fn amalgam(&self) -> (Element, Vec<(String, Element)>) {
        let form = self.inner.amalgam_form();
        let syllables = form
            .syllables
            .iter()
            .map(|s| {
                (
                    color_name(s.side).to_string(),
                    Element {
                        inner: s.element.clone(),
                    },
                )
            })
            .collect();
        (
            Element {
                inner: form.prefix.clone(),
            },
            syllables,
        )
    }

    /// Classification of the induced tree isometry as a dict: either
    /// {"type": "elliptic", "fixes_color": ..., "fixes_rep": ...} or
    /// {"type": "hyperbolic", "translation_length": ...}.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, pyo3::types::PyDict>> {
        let dict = pyo3::types::PyDict::new(py);
        match self.inner.classify_isometry() {
            Isometry::Elliptic { fixed_vertex } => {
                dict.set_item("type", "elliptic")?;
                dict.set_item("fixes_color", color_name(fixed_vertex.color()))?;
                dict.set_item("fixes_rep", fixed_vertex.rep().to_string())?;
            }
            Isometry::Hyperbolic { translation_length } => {
                dict.set_item("type", "hyperbolic")?;
                dict.set_item("translation_length", translation_length)?;
            }
        }
        Ok(dict)
    }
}

/// Decide primitivity of a free-group word over x, y (uppercase for
/// inverses).
#[pyfunction]
fn is_primitive(word: &str) -> PyResult<bool> {
    let w: F2Word = word.parse().map_err(value_err)?;
    Ok(w.is_primitive())
}

/// Classify a disk boundary word: "reducing", "primitive", or
/// "non-primitive".
#[pyfunction]
fn disk_class(word: &str) -> PyResult<String> {
    let w: F2Word = word.parse().map_err(value_err)?;
    Ok(w.disk_class().to_string())
}

/// DOT rendering of the tree ball with the given radius and branch bound.
#[pyfunction]
fn ball_dot(radius: usize, branch_bound: usize) -> PyResult<String> {
    Ok(build_ball(radius, branch_bound).map_err(value_err)?.to_dot())
}

/// The presentation-level checks as (name, passed, detail) triples.
#[pyfunction]
fn verify_presentation() -> Vec<(String, bool, String)> {
    verify::verify_presentation()
        .into_iter()
        .map(|c| (c.name, c.passed, c.detail))
        .collect()
}

/// The full verification suite as (name, passed, detail) triples.
#[pyfunction]
#[pyo3(signature = (radius=4, branch_bound=6, oracle_length=6, samples=100))]
fn verify_all(
    radius: usize,
    branch_bound: usize,
    oracle_length: usize,
    samples: usize,
) -> PyResult<Vec<(String, bool, String)>> {
    let config = VerifyConfig {
        radius,
        branch_bound,
        oracle_len: oracle_length,
        samples,
    };
    let report = verify::verify_all(&config).map_err(value_err)?;
    Ok(report
        .checks
        .into_iter()
        .map(|c| (c.name, c.passed, c.detail))
        .collect())
}

#[pymodule]
fn goeritz_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Element>()?;
    m.add_function(wrap_pyfunction!(is_primitive, m)?)?;
    m.add_function(wrap_pyfunction!(disk_class, m)?)?;
    m.add_function(wrap_pyfunction!(ball_dot, m)?)?;
    m.add_function(wrap_pyfunction!(verify_presentation, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
