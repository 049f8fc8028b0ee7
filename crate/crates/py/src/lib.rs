//! Python module `twochar_py`.
//!
//! ```python
//! import twochar_py as tc
//! s3 = tc.Group.named("symmetric:3")
//! rho = tc.TwoRep.regular(s3).direct_sum(tc.TwoRep.trivial(s3))
//! rho.character(0, 0)          # 7
//! ```

use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use twochar::character::{character_table, character_via_psi, two_character};
use twochar::cohomology::h2_compute;
use twochar::cyclo::Cyclo;
use twochar::io::TwoRepJson;
use twochar::permgrp::{left_coset_reps, NamedGroup, Perm, PermGroup, Subgroup, DEFAULT_ORDER_CAP};
use twochar::tworep::{are_equivalent, decompose, induce};
use twochar::{Error, GSet};

fn err(e: Error) -> PyErr {
    match e {
        Error::Internal(m) => PyRuntimeError::new_err(m),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Integers come back as `int`, anything else as its `E(K)^j` string.
fn cyclo_to_py(py: Python<'_>, v: &Cyclo) -> PyResult<Py<PyAny>> {
    Ok(match v.to_int() {
        Some(n) => n.into_pyobject(py)?.into_any().unbind(),
        None => v.to_string().into_pyobject(py)?.into_any().unbind(),
    })
}

#[pyclass(frozen, name = "Group")]
#[derive(Clone)]
struct PyGroup {
    inner: Arc<PermGroup>,
}

#[pymethods]
impl PyGroup {
    /// `cyclic:4`, `symmetric:3`, `dihedral:4`, `klein4`, `klein4*cyclic:2`.
    #[staticmethod]
    fn named(spec: &str) -> PyResult<Self> {
        let g = NamedGroup::parse(spec).and_then(|n| PermGroup::named(&n)).map_err(err)?;
        Ok(PyGroup { inner: Arc::new(g) })
    }

    /// Generators as image lists on `degree` points.
    #[staticmethod]
    fn from_generators(generators: Vec<Vec<usize>>, degree: usize) -> PyResult<Self> {
        let gens = generators
            .into_iter()
            .map(Perm::new)
            .collect::<twochar::Result<Vec<_>>>()
            .map_err(err)?;
        let g = PermGroup::from_generators_capped(&gens, degree, DEFAULT_ORDER_CAP).map_err(err)?;
        Ok(PyGroup { inner: Arc::new(g) })
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn degree(&self) -> usize {
        self.inner.degree()
    }

    /// Images of element `i`.
    fn element(&self, i: usize) -> PyResult<Vec<usize>> {
        if i >= self.inner.order() {
            return Err(PyValueError::new_err("element index out of range"));
        }
        Ok(self.inner.element(i).images().to_vec())
    }

    /// Index of the element written in cycle notation, e.g. `"(012)"`.
    fn index_of(&self, cycles: &str) -> PyResult<usize> {
        let p = Perm::from_cycles(cycles, self.inner.degree()).map_err(err)?;
        self.inner
            .index_of(&p)
            .ok_or_else(|| PyValueError::new_err(format!("{cycles} is not in the group")))
    }

    fn commuting_pairs(&self) -> Vec<(usize, usize)> {
        self.inner.commuting_pairs()
    }

    /// Representatives of the classes of commuting pairs.
    fn pair_classes(&self) -> Vec<(usize, usize)> {
        self.inner
            .simultaneous_pair_classes()
            .into_iter()
            .map(|c| c.rep)
            .collect()
    }

    /// Elementary divisors of the Schur multiplier.
    fn schur_multiplier(&self) -> PyResult<Vec<u64>> {
        let pt = Arc::new(GSet::point(self.inner.clone()));
        Ok(h2_compute(&pt, None).map_err(err)?.divisors)
    }

    fn __repr__(&self) -> String {
        format!("Group(order={}, degree={})", self.inner.order(), self.inner.degree())
    }
}

#[pyclass(frozen, name = "TwoRep")]
#[derive(Clone)]
struct PyTwoRep {
    inner: twochar::TwoRep,
}

#[pymethods]
impl PyTwoRep {
    /// Untwisted representation on the G-set given by `action[g][s]`.
    #[staticmethod]
    fn untwisted(group: &PyGroup, action: Vec<Vec<usize>>) -> PyResult<Self> {
        let size = action.first().map_or(0, Vec::len);
        let s = GSet::from_action(group.inner.clone(), size, &action).map_err(err)?;
        Ok(PyTwoRep {
            inner: twochar::TwoRep::untwisted(Arc::new(s)),
        })
    }

    #[staticmethod]
    fn trivial(group: &PyGroup) -> Self {
        PyTwoRep {
            inner: twochar::TwoRep::trivial(group.inner.clone()),
        }
    }

    #[staticmethod]
    fn regular(group: &PyGroup) -> Self {
        PyTwoRep {
            inner: twochar::TwoRep::untwisted(Arc::new(GSet::regular(group.inner.clone()))),
        }
    }

    /// The coset set `G/H`, `H` generated by cycle strings joined with `;`.
    #[staticmethod]
    fn cosets(group: &PyGroup, subgroup: &str) -> PyResult<Self> {
        let h = Subgroup::from_cycle_string(group.inner.clone(), subgroup).map_err(err)?;
        let reps = left_coset_reps(&group.inner, &h).map_err(err)?;
        Ok(PyTwoRep {
            inner: twochar::TwoRep::untwisted(Arc::new(GSet::cosets(group.inner.clone(), &reps))),
        })
    }

    /// One-dimensional representations, one per generator of the Schur
    /// multiplier.
    #[staticmethod]
    fn twisted_points(group: &PyGroup) -> PyResult<Vec<Self>> {
        let pt = Arc::new(GSet::point(group.inner.clone()));
        let h = h2_compute(&pt, None).map_err(err)?;
        h.representatives
            .into_iter()
            .map(|c| {
                Ok(PyTwoRep {
                    inner: twochar::TwoRep::new(pt.clone(), c).map_err(err)?,
                })
            })
            .collect()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let j: TwoRepJson =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyTwoRep {
            inner: j.build(None, DEFAULT_ORDER_CAP).map_err(err)?,
        })
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&TwoRepJson::from_rep(&self.inner))
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    fn group(&self) -> PyGroup {
        PyGroup {
            inner: self.inner.group().clone(),
        }
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn direct_sum(&self, other: &PyTwoRep) -> PyResult<Self> {
        Ok(PyTwoRep {
            inner: self.inner.direct_sum(&other.inner).map_err(err)?,
        })
    }

    fn tensor(&self, other: &PyTwoRep) -> PyResult<Self> {
        Ok(PyTwoRep {
            inner: self.inner.tensor(&other.inner).map_err(err)?,
        })
    }

    /// `chi(g, h)` for commuting element indices.
    fn character(&self, py: Python<'_>, g: usize, h: usize) -> PyResult<Py<PyAny>> {
        cyclo_to_py(py, &two_character(&self.inner, g, h).map_err(err)?)
    }

    /// Same value computed as the trace of the conjugation map.
    fn character_via_psi(&self, py: Python<'_>, g: usize, h: usize) -> PyResult<Py<PyAny>> {
        cyclo_to_py(py, &character_via_psi(&self.inner, g, h).map_err(err)?)
    }

    /// `[(g, h, value), ..]`, one entry per class of commuting pairs.
    fn character_table(&self, py: Python<'_>) -> PyResult<Vec<(usize, usize, Py<PyAny>)>> {
        character_table(&self.inner)
            .map_err(err)?
            .entries()
            .iter()
            .map(|e| Ok((e.g, e.h, cyclo_to_py(py, &e.value)?)))
            .collect()
    }

    /// The relabeling `f` of an equivalence onto `other`, or `None`.
    fn equivalence(&self, other: &PyTwoRep) -> PyResult<Option<Vec<usize>>> {
        Ok(are_equivalent(&self.inner, &other.inner)
            .map_err(err)?
            .map(|w| w.f.images().to_vec()))
    }

    fn is_equivalent(&self, other: &PyTwoRep) -> PyResult<bool> {
        Ok(self.equivalence(other)?.is_some())
    }

    /// `[(stabilizer member indices, one-dimensional rep), ..]`.
    fn decompose(&self) -> Vec<(Vec<usize>, PyTwoRep)> {
        decompose(&self.inner)
            .into_iter()
            .map(|f| (f.subgroup.members().to_vec(), PyTwoRep { inner: f.rep }))
            .collect()
    }

    /// Induces `self`, a representation of the subgroup generated by
    /// `subgroup`, up to `group`. Element indices of `self` are read in the
    /// subgroup's own enumeration (ascending index in `group`).
    fn induce(&self, group: &PyGroup, subgroup: &str) -> PyResult<Self> {
        let h = Subgroup::from_cycle_string(group.inner.clone(), subgroup).map_err(err)?;
        let reps = left_coset_reps(&group.inner, &h).map_err(err)?;
        let r_h = self.inner.rebase(h.as_group()).map_err(err)?;
        Ok(PyTwoRep {
            inner: induce(&group.inner, &h, &r_h, &reps).map_err(err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "TwoRep(dim={}, group_order={})",
            self.inner.dim(),
            self.inner.group().order()
        )
    }
}

/// The two 8-dimensional representations of S3 with equal characters.
#[pyfunction]
fn example_pair() -> PyResult<(PyTwoRep, PyTwoRep)> {
    let (a, b) = twochar::cli::example_pair().map_err(err)?;
    Ok((PyTwoRep { inner: a }, PyTwoRep { inner: b }))
}

#[pymodule]
fn twochar_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_class::<PyTwoRep>()?;
    m.add_function(wrap_pyfunction!(example_pair, m)?)?;
    Ok(())
}
