//! Python bindings: a `Profile` class plus enumeration helpers, mirroring
//! the library and CLI surface.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use riemann_profiles::{
    backtracking_cover_oracle, cross_check_theorem, enumerate_constellations, find_exact_covering,
    parse_profile, random_constellation, render_diagram, serialize_profile, surface_report,
    validate::validate_profile_type, Constellation, CoveringOutcome, DiagramStyle, EnumFilter,
    Permutation, ProfileDocument, ProfileGraph, Sheet, SheetSet,
};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A checked profile graph of a surface spread over the sphere.
#[pyclass]
struct Profile {
    inner: ProfileGraph,
}

#[pymethods]
impl Profile {
    /// Parse a `.prof` document and convert it into a profile.
    ///
    /// Raises ValueError with a positioned message on parse errors and on
    /// explicit graphs that are not of profile type.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        let doc = parse_profile(text).map_err(value_err)?;
        let inner = doc.to_profile().map_err(value_err)?;
        Ok(Profile { inner })
    }

    /// Build a finite profile from cycle notation: one list of cycles per
    /// column, e.g. `[[[1, 2]], [[1, 2]]]` for the 2-column square-root
    /// profile on 2 sheets.
    #[staticmethod]
    fn from_cycles(sheets: usize, columns: Vec<Vec<Vec<Sheet>>>) -> PyResult<Self> {
        let sigmas = columns
            .iter()
            .map(|cycles| Permutation::finite_from_cycles(sheets, cycles))
            .collect::<Result<Vec<_>, _>>()
            .map_err(value_err)?;
        let cons = Constellation::new(sigmas).map_err(value_err)?;
        Ok(Profile {
            inner: ProfileGraph::from_constellation(cons),
        })
    }

    /// Build a periodic profile from residue images: one list of `period`
    /// integers per column, extended periodically.
    #[staticmethod]
    fn from_periodic_maps(period: usize, columns: Vec<Vec<Sheet>>) -> PyResult<Self> {
        let sigmas = columns
            .into_iter()
            .map(|image0| Permutation::periodic_from_images(period, image0))
            .collect::<Result<Vec<_>, _>>()
            .map_err(value_err)?;
        let cons = Constellation::new(sigmas).map_err(value_err)?;
        Ok(Profile {
            inner: ProfileGraph::from_constellation(cons),
        })
    }

    /// Number of columns (base points).
    fn columns(&self) -> usize {
        self.inner.columns()
    }

    /// The sheet set as a `(kind, size)` pair: `("finite", n)` or
    /// `("periodic", p)`.
    fn sheets(&self) -> (String, usize) {
        match self.inner.sheet_set() {
            SheetSet::Finite(n) => ("finite".to_string(), n),
            SheetSet::PeriodicIntegers(p) => ("periodic".to_string(), p),
        }
    }

    /// Whether the profile graph is connected (the permutations act
    /// transitively on the sheets).
    fn is_connected(&self) -> bool {
        self.inner.constellation().is_transitive()
    }

    /// Whether an exact covering exists, i.e. the graph is the profile of a
    /// surface.
    fn is_realizable(&self) -> bool {
        find_exact_covering(&self.inner).is_coverable()
    }

    /// The exact covering as line sequences `i_0..i_q` (one per path, one
    /// per residue family for periodic profiles), or None.
    fn covering(&self) -> Option<Vec<Vec<Sheet>>> {
        match find_exact_covering(&self.inner) {
            CoveringOutcome::Covered(c) => Some(
                c.paths()
                    .iter()
                    .map(|p| p.line_sequence().to_vec())
                    .collect(),
            ),
            CoveringOutcome::NotCoverable(_) => None,
        }
    }

    /// The first failing forced-walk trace, or None when coverable.
    fn failure_trace(&self) -> Option<Vec<Sheet>> {
        match find_exact_covering(&self.inner) {
            CoveringOutcome::Covered(_) => None,
            CoveringOutcome::NotCoverable(t) => Some(t.lines),
        }
    }

    /// Re-check realizability with the exhaustive backtracking oracle
    /// (finite sheet sets, n*q <= 24).
    fn oracle_realizable(&self) -> PyResult<bool> {
        Ok(backtracking_cover_oracle(&self.inner)
            .map_err(value_err)?
            .is_some())
    }

    /// The surface report as a JSON string (same shape as
    /// `profiles invariants --json`).
    fn surface_report_json(&self) -> String {
        surface_report(&self.inner).to_json()
    }

    /// Genus of the closed surface, when defined (finite, connected,
    /// realizable).
    fn genus(&self) -> Option<u64> {
        surface_report(&self.inner).genus
    }

    fn euler_characteristic(&self) -> Option<i64> {
        surface_report(&self.inner).euler_characteristic
    }

    /// Violations of the profile-type axioms for the explicit graph view;
    /// empty for valid profiles (always, since profiles are checked on
    /// construction) and periodic profiles.
    fn violations(&self) -> Vec<String> {
        match self.inner.sheet_set() {
            SheetSet::Finite(_) => validate_profile_type(&self.inner.to_explicit())
                .violations
                .iter()
                .map(|v| v.to_string())
                .collect(),
            SheetSet::PeriodicIntegers(_) => Vec::new(),
        }
    }

    /// Canonical `.prof` text (SIGMA form).
    fn canonical_text(&self) -> PyResult<String> {
        let doc = ProfileDocument::from_constellation(self.inner.to_constellation());
        serialize_profile(&doc).map_err(value_err)
    }

    /// Render the profile as `"dot"` or `"svg"`, optionally coloring the
    /// covering paths.
    #[pyo3(signature = (style, overlay_covering = false))]
    fn render(&self, style: &str, overlay_covering: bool) -> PyResult<String> {
        let style: DiagramStyle = style.parse().map_err(value_err)?;
        let covering = if overlay_covering {
            match find_exact_covering(&self.inner) {
                CoveringOutcome::Covered(c) => Some(c),
                CoveringOutcome::NotCoverable(_) => {
                    return Err(value_err("profile is not realizable, nothing to overlay"))
                }
            }
        } else {
            None
        };
        Ok(render_diagram(&self.inner, style, covering.as_ref()))
    }

    fn __repr__(&self) -> String {
        let (kind, size) = self.sheets();
        format!(
            "Profile(sheets={kind}:{size}, columns={}, realizable={})",
            self.columns(),
            self.is_realizable()
        )
    }
}

/// Validate a `.prof` document and return the violation list (empty when the
/// document describes a graph of profile type).
#[pyfunction]
fn validate_text(text: &str) -> PyResult<Vec<String>> {
    let doc = parse_profile(text).map_err(value_err)?;
    Ok(doc
        .validate()
        .violations
        .iter()
        .map(|v| v.to_string())
        .collect())
}

/// Count constellations over `Finite(sheets)` with the given column count
/// and filters.
#[pyfunction]
#[pyo3(signature = (sheets, columns, transitive = false, identity_product = false))]
fn enumerate_count(
    sheets: usize,
    columns: usize,
    transitive: bool,
    identity_product: bool,
) -> PyResult<usize> {
    let stream = enumerate_constellations(
        sheets,
        columns,
        EnumFilter {
            require_transitive: transitive,
            require_identity_product: identity_product,
        },
    )
    .map_err(value_err)?;
    Ok(stream.count())
}

/// Run the covering cross-check over every transitive constellation; returns
/// `(instances, coverable, disagreements)`.
#[pyfunction]
fn cross_check(sheets: usize, columns: usize) -> PyResult<(usize, usize, usize)> {
    let summary = cross_check_theorem(sheets, columns).map_err(value_err)?;
    Ok((
        summary.instances,
        summary.coverable,
        summary.disagreements.len(),
    ))
}

/// A uniformly random profile over `Finite(sheets)`, deterministic in the
/// seed (SplitMix64 + Fisher-Yates, documented in the README).
#[pyfunction]
fn random_profile(sheets: usize, columns: usize, seed: u64) -> Profile {
    Profile {
        inner: ProfileGraph::from_constellation(random_constellation(sheets, columns, seed)),
    }
}

#[pymodule]
fn riemann_profiles_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Profile>()?;
    m.add_function(wrap_pyfunction!(validate_text, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_count, m)?)?;
    m.add_function(wrap_pyfunction!(cross_check, m)?)?;
    m.add_function(wrap_pyfunction!(random_profile, m)?)?;
    Ok(())
}
