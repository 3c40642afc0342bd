//! Profile graphs.
//!
//! A profile places one vertex on line `j` over each of `q` column points,
//! joins consecutive vertices of a line by undirected edges (one extra edge
//! per line runs through infinity, from column `q` back to column 1), and
//! carries one oriented vertical arc per vertex per column. The arcs of
//! column `i` realize the sheet permutation `sigma_i`, so a valid profile
//! and a constellation are two views of the same object.
//!
//! [`ExplicitGraph`] is the raw, possibly invalid form used by validation;
//! [`ProfileGraph`] is the checked form every other operation consumes.

use std::collections::BTreeSet;

use crate::perm::{Constellation, PermError, Permutation, Sheet, SheetSet};
use crate::validate::validate_profile_type;

use thiserror::Error;

/// A vertex `(column, line)` of a profile graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub column: usize,
    pub line: Sheet,
}

impl Vertex {
    pub fn new(column: usize, line: Sheet) -> Self {
        assert!(column >= 1, "columns are 1-based");
        Vertex { column, line }
    }
}

/// The undirected edge of line `line` from `from_column` to the next column.
/// `next(i) = i + 1` for `i < q` and `next(q) = 1`; the `q -> 1` edge is the
/// segment of the line through infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSeg {
    pub line: Sheet,
    pub from_column: usize,
}

impl EdgeSeg {
    pub fn endpoints(&self, q: usize) -> (Vertex, Vertex) {
        let to = if self.from_column < q {
            self.from_column + 1
        } else {
            1
        };
        (
            Vertex::new(self.from_column, self.line),
            Vertex::new(to, self.line),
        )
    }

    pub fn is_infinity(&self, q: usize) -> bool {
        self.from_column == q
    }
}

/// An oriented vertical arc within one column. `from_line == to_line` is a
/// loop, which occupies both arc slots of its vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcSeg {
    pub column: usize,
    pub from_line: Sheet,
    pub to_line: Sheet,
}

impl ArcSeg {
    pub fn source(&self) -> Vertex {
        Vertex::new(self.column, self.from_line)
    }

    pub fn target(&self) -> Vertex {
        Vertex::new(self.column, self.to_line)
    }

    pub fn is_loop(&self) -> bool {
        self.from_line == self.to_line
    }
}

/// An arbitrary partially oriented graph in profile position: a vertex set
/// plus undirected edges and oriented arcs between vertices. Nothing about
/// it is checked on construction; `validate_profile_type` decides whether it
/// is a graph of profile type.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExplicitGraph {
    vertices: BTreeSet<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
    arcs: Vec<(Vertex, Vertex)>,
}

impl ExplicitGraph {
    pub fn new() -> Self {
        ExplicitGraph::default()
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.vertices.insert(v);
    }

    /// Adds an undirected edge; endpoints become vertices.
    pub fn add_edge(&mut self, a: Vertex, b: Vertex) {
        self.vertices.insert(a);
        self.vertices.insert(b);
        self.edges.push((a, b));
    }

    /// Adds an oriented arc; endpoints become vertices.
    pub fn add_arc(&mut self, from: Vertex, to: Vertex) {
        self.vertices.insert(from);
        self.vertices.insert(to);
        self.arcs.push((from, to));
    }

    /// Removes a vertex together with every edge and arc incident to it.
    pub fn remove_vertex_with_items(&mut self, v: Vertex) {
        self.vertices.remove(&v);
        self.edges.retain(|&(a, b)| a != v && b != v);
        self.arcs.retain(|&(a, b)| a != v && b != v);
    }

    pub fn remove_arc(&mut self, from: Vertex, to: Vertex) {
        if let Some(pos) = self.arcs.iter().position(|&(a, b)| a == from && b == to) {
            self.arcs.remove(pos);
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    /// Highest column index among the vertices; 0 for the empty graph.
    pub fn max_column(&self) -> usize {
        self.vertices.iter().map(|v| v.column).max().unwrap_or(0)
    }

    /// Distinct line labels among the vertices, ascending.
    pub fn lines(&self) -> Vec<Sheet> {
        let set: BTreeSet<Sheet> = self.vertices.iter().map(|v| v.line).collect();
        set.into_iter().collect()
    }

    /// Builds the graph of a finite profile from segment form. Edges and
    /// arcs are taken at face value; vertices are implied by the items.
    pub fn from_segments(q: usize, edges: &[EdgeSeg], arcs: &[ArcSeg]) -> Self {
        let mut g = ExplicitGraph::new();
        for e in edges {
            let (a, b) = e.endpoints(q);
            g.add_edge(a, b);
        }
        for a in arcs {
            g.add_arc(a.source(), a.target());
        }
        g
    }
}

#[derive(Debug, Clone, Error)]
pub enum ProfileError {
    #[error("graph is not of profile type: {0} violation(s), first: {1}")]
    NotProfileType(usize, String),
    #[error("sheet labels must be exactly 1..n, found {0:?}")]
    NonContiguousLines(Vec<Sheet>),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A checked profile graph. Construction goes through a constellation or
/// through validation of an explicit graph, so the local profile axioms hold
/// by construction; connectivity remains a query (`Constellation::is_transitive`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileGraph {
    cons: Constellation,
}

impl ProfileGraph {
    /// Realizes a constellation as its profile graph.
    pub fn from_constellation(cons: Constellation) -> Self {
        ProfileGraph { cons }
    }

    /// Validates an explicit graph and converts it. Fails with the first
    /// violation if the graph is not of profile type, or if its line labels
    /// are not `1..n` (profile-type graphs may use arbitrary labels, but the
    /// constellation view requires contiguous ones).
    pub fn from_explicit(g: &ExplicitGraph) -> Result<Self, ProfileError> {
        let report = validate_profile_type(g);
        if !report.ok {
            let first = report.violations[0].to_string();
            return Err(ProfileError::NotProfileType(report.violations.len(), first));
        }
        let lines = g.lines();
        let n = lines.len();
        if lines
            .iter()
            .enumerate()
            .any(|(k, &j)| j != (k + 1) as Sheet)
        {
            return Err(ProfileError::NonContiguousLines(lines));
        }
        let q = g.max_column();
        let mut sigmas = Vec::with_capacity(q);
        for column in 1..=q {
            let mut image = vec![0 as Sheet; n];
            for &(from, to) in g.arcs() {
                if from.column == column {
                    image[(from.line - 1) as usize] = to.line;
                }
            }
            sigmas.push(Permutation::finite_from_images(image)?);
        }
        Ok(ProfileGraph {
            cons: Constellation::new(sigmas)?,
        })
    }

    /// The constellation view: `sigma_i(j)` is the target line of the
    /// outgoing arc at `(i, j)`.
    pub fn to_constellation(&self) -> Constellation {
        self.cons.clone()
    }

    pub fn constellation(&self) -> &Constellation {
        &self.cons
    }

    pub fn sheet_set(&self) -> SheetSet {
        self.cons.sheet_set()
    }

    pub fn columns(&self) -> usize {
        self.cons.columns()
    }

    /// Sheet count of a finite profile. Panics on periodic profiles.
    pub fn sheet_count(&self) -> usize {
        match self.sheet_set() {
            SheetSet::Finite(n) => n,
            SheetSet::PeriodicIntegers(_) => panic!("periodic profile has no finite sheet count"),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.sheet_set().is_finite()
    }

    pub fn next_column(&self, column: usize) -> usize {
        if column < self.columns() {
            column + 1
        } else {
            1
        }
    }

    /// All vertices of a finite profile, ordered by (column, line).
    pub fn vertex_segs(&self) -> Vec<Vertex> {
        let n = self.sheet_count() as Sheet;
        let mut out = Vec::new();
        for column in 1..=self.columns() {
            for line in 1..=n {
                out.push(Vertex::new(column, line));
            }
        }
        out
    }

    /// All edges of a finite profile, ordered by (line, column).
    pub fn edge_segs(&self) -> Vec<EdgeSeg> {
        let n = self.sheet_count() as Sheet;
        let mut out = Vec::new();
        for line in 1..=n {
            for from_column in 1..=self.columns() {
                out.push(EdgeSeg { line, from_column });
            }
        }
        out
    }

    /// All arcs of a finite profile, ordered by (column, from_line).
    pub fn arc_segs(&self) -> Vec<ArcSeg> {
        let n = self.sheet_count() as Sheet;
        let mut out = Vec::new();
        for column in 1..=self.columns() {
            let sigma = self.cons.sigma(column);
            for from_line in 1..=n {
                out.push(ArcSeg {
                    column,
                    from_line,
                    to_line: sigma.apply(from_line),
                });
            }
        }
        out
    }

    /// The outgoing arc at a vertex.
    pub fn arc_at(&self, v: Vertex) -> ArcSeg {
        ArcSeg {
            column: v.column,
            from_line: v.line,
            to_line: self.cons.sigma(v.column).apply(v.line),
        }
    }

    /// Whether the given arc belongs to this profile.
    pub fn has_arc(&self, a: &ArcSeg) -> bool {
        a.column >= 1
            && a.column <= self.columns()
            && self.sheet_set().contains(a.from_line)
            && self.cons.sigma(a.column).apply(a.from_line) == a.to_line
    }

    /// Whether the given edge belongs to this profile.
    pub fn has_edge(&self, e: &EdgeSeg) -> bool {
        e.from_column >= 1 && e.from_column <= self.columns() && self.sheet_set().contains(e.line)
    }

    /// Materializes the explicit vertex/edge/arc sets of a finite profile.
    pub fn to_explicit(&self) -> ExplicitGraph {
        let q = self.columns();
        ExplicitGraph::from_segments(q, &self.edge_segs(), &self.arc_segs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> ProfileGraph {
        let t = Permutation::finite_from_cycles(2, &[vec![1, 2]]).unwrap();
        ProfileGraph::from_constellation(
            Constellation::new(vec![t.clone(), t.clone(), t.clone(), t]).unwrap(),
        )
    }

    #[test]
    fn torus_counts() {
        let p = torus();
        assert_eq!(p.vertex_segs().len(), 8);
        assert_eq!(p.edge_segs().len(), 8);
        assert_eq!(p.arc_segs().len(), 8);
    }

    #[test]
    fn single_sheet_single_column() {
        let c = Constellation::identity(SheetSet::Finite(1), 1).unwrap();
        let p = ProfileGraph::from_constellation(c);
        assert_eq!(p.vertex_segs().len(), 1);
        let edges = p.edge_segs();
        assert_eq!(edges.len(), 1);
        assert!(edges[0].is_infinity(1));
        let arcs = p.arc_segs();
        assert_eq!(arcs.len(), 1);
        assert!(arcs[0].is_loop());
    }

    #[test]
    fn sqrt_counts() {
        let t = Permutation::finite_from_cycles(2, &[vec![1, 2]]).unwrap();
        let p = ProfileGraph::from_constellation(Constellation::new(vec![t.clone(), t]).unwrap());
        assert_eq!(p.vertex_segs().len(), 4);
        assert_eq!(p.edge_segs().len(), 4);
        assert_eq!(p.arc_segs().len(), 4);
    }

    #[test]
    fn explicit_round_trip() {
        let p = torus();
        let g = p.to_explicit();
        let back = ProfileGraph::from_explicit(&g).unwrap();
        assert_eq!(back.to_constellation(), p.to_constellation());
    }

    #[test]
    fn from_explicit_requires_contiguous_lines() {
        // a valid profile-type graph on lines {1, 3}: one column, the two
        // lines swapped by the arcs, each line closed through infinity
        let mut g = ExplicitGraph::new();
        let a = Vertex::new(1, 1);
        let b = Vertex::new(1, 3);
        g.add_edge(a, a);
        g.add_edge(b, b);
        g.add_arc(a, b);
        g.add_arc(b, a);
        assert!(crate::validate::validate_profile_type(&g).ok);
        assert!(matches!(
            ProfileGraph::from_explicit(&g),
            Err(ProfileError::NonContiguousLines(_))
        ));
    }

    #[test]
    fn from_explicit_rejects_broken_graph() {
        let p = torus();
        let mut g = p.to_explicit();
        g.remove_vertex_with_items(Vertex::new(2, 1));
        assert!(matches!(
            ProfileGraph::from_explicit(&g),
            Err(ProfileError::NotProfileType(_, _))
        ));
    }

    #[test]
    fn edge_endpoints_wrap() {
        let e = EdgeSeg {
            line: 3,
            from_column: 4,
        };
        let (a, b) = e.endpoints(4);
        assert_eq!(a, Vertex::new(4, 3));
        assert_eq!(b, Vertex::new(1, 3));
        assert!(e.is_infinity(4));
    }
}
