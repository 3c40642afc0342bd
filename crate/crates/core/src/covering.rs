//! Alternating paths and exact coverings.
//!
//! A covering path sweeps the columns once: starting on line `i_0` it takes
//! the outgoing arc at column 1, the edge to column 2, the arc there, and so
//! on, closing through the infinity edge back to column 1. Its line sequence
//! satisfies `i_k = sigma_k(i_{k-1})` and the path is closed exactly when
//! `i_q = i_0`. A set of such paths covering every arc and edge exactly once
//! is an exact covering; it exists iff every forced walk closes, i.e. iff
//! the monodromy product is the identity.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{ArcSeg, EdgeSeg, ProfileGraph, Vertex};
use crate::perm::{Orbit, Sheet, SheetSet};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CoveringError {
    #[error("operation requires a finite sheet set")]
    PeriodicUnsupported,
    #[error("search budget exceeded: n*q = {0} > {1}")]
    BudgetExceeded(usize, usize),
}

/// A closed covering path, stored as its line sequence `i_0..i_q`
/// (with `i_q == i_0`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoveringPath {
    lines: Vec<Sheet>,
}

impl CoveringPath {
    pub fn start_line(&self) -> Sheet {
        self.lines[0]
    }

    /// Number of columns swept; the path has `q` arcs and `q` edges.
    pub fn columns(&self) -> usize {
        self.lines.len() - 1
    }

    /// The line sequence `i_0, i_1, ..., i_q`.
    pub fn line_sequence(&self) -> &[Sheet] {
        &self.lines
    }

    pub fn arcs(&self) -> impl Iterator<Item = ArcSeg> + '_ {
        (0..self.columns()).map(|k| ArcSeg {
            column: k + 1,
            from_line: self.lines[k],
            to_line: self.lines[k + 1],
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeSeg> + '_ {
        (0..self.columns()).map(|k| EdgeSeg {
            line: self.lines[k + 1],
            from_column: k + 1,
        })
    }

    /// The alternating arc/edge item sequence of the path.
    pub fn items(&self) -> Vec<PathItem> {
        let mut out = Vec::with_capacity(2 * self.columns());
        for k in 0..self.columns() {
            out.push(PathItem::Arc(ArcSeg {
                column: k + 1,
                from_line: self.lines[k],
                to_line: self.lines[k + 1],
            }));
            out.push(PathItem::Edge(EdgeSeg {
                line: self.lines[k + 1],
                from_column: k + 1,
            }));
        }
        out
    }
}

/// Trace of a forced walk that failed to close: the full line sequence,
/// ending at the first return to column 1 on a different line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenWalk {
    pub lines: Vec<Sheet>,
}

impl OpenWalk {
    pub fn start_line(&self) -> Sheet {
        self.lines[0]
    }

    pub fn end_line(&self) -> Sheet {
        *self.lines.last().unwrap()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkResult {
    Closed(CoveringPath),
    Open(OpenWalk),
}

/// Walks from `(1, start_line)`, alternating the outgoing arc of the current
/// column with the edge to the next column, for one full sweep.
pub fn forced_walk(profile: &ProfileGraph, start_line: Sheet) -> WalkResult {
    assert!(
        profile.sheet_set().contains(start_line),
        "start line {start_line} outside the sheet set"
    );
    let q = profile.columns();
    let mut lines = Vec::with_capacity(q + 1);
    lines.push(start_line);
    let mut j = start_line;
    for column in 1..=q {
        j = profile.constellation().sigma(column).apply(j);
        lines.push(j);
    }
    if j == start_line {
        WalkResult::Closed(CoveringPath { lines })
    } else {
        WalkResult::Open(OpenWalk { lines })
    }
}

/// An exact covering: one closed path per line (finite sheet sets) or one
/// path family per residue class (periodic sheet sets, where every path
/// stands for all of its translates). Paths are ordered by starting line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCovering {
    sheet_set: SheetSet,
    paths: Vec<CoveringPath>,
}

impl ExactCovering {
    pub fn sheet_set(&self) -> SheetSet {
        self.sheet_set
    }

    pub fn paths(&self) -> &[CoveringPath] {
        &self.paths
    }

    pub fn item_paths(&self) -> Vec<Vec<PathItem>> {
        self.paths.iter().map(|p| p.items()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoveringOutcome {
    Covered(ExactCovering),
    NotCoverable(OpenWalk),
}

impl CoveringOutcome {
    pub fn covering(&self) -> Option<&ExactCovering> {
        match self {
            CoveringOutcome::Covered(c) => Some(c),
            CoveringOutcome::NotCoverable(_) => None,
        }
    }

    pub fn is_coverable(&self) -> bool {
        matches!(self, CoveringOutcome::Covered(_))
    }
}

/// Decides realizability by running the forced walk from every line at
/// column 1 (residues `0..p-1` for periodic profiles). All walks close iff
/// the monodromy product is the identity; the first open walk is returned
/// as the failure trace.
pub fn find_exact_covering(profile: &ProfileGraph) -> CoveringOutcome {
    let starts: Vec<Sheet> = match profile.sheet_set() {
        SheetSet::Finite(n) => (1..=n as Sheet).collect(),
        SheetSet::PeriodicIntegers(p) => (0..p as Sheet).collect(),
    };
    let mut paths = Vec::with_capacity(starts.len());
    for s in starts {
        match forced_walk(profile, s) {
            WalkResult::Closed(p) => paths.push(p),
            WalkResult::Open(trace) => return CoveringOutcome::NotCoverable(trace),
        }
    }
    CoveringOutcome::Covered(ExactCovering {
        sheet_set: profile.sheet_set(),
        paths,
    })
}

/// One item of an alternating path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PathItem {
    Arc(ArcSeg),
    Edge(EdgeSeg),
}

/// Why an item sequence fails to be a covering path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathViolation {
    /// Empty, odd-length, not alternating, or not starting with the arc at column 1.
    Malformed(String),
    /// An item is not an arc or edge of the profile.
    NotInProfile(String),
    /// An item does not continue from the current vertex.
    Discontinuous(String),
    /// An arc is traversed against its orientation.
    Orientation(String),
    /// The walk does not return to its starting vertex.
    NotClosed(String),
    /// After deleting loops the cycle revisits a vertex.
    NotElementary(String),
    /// Column indices decrease before the final wrap.
    NotMonotone(String),
}

impl fmt::Display for PathViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (kind, msg) = match self {
            PathViolation::Malformed(m) => ("malformed", m),
            PathViolation::NotInProfile(m) => ("not in profile", m),
            PathViolation::Discontinuous(m) => ("discontinuous", m),
            PathViolation::Orientation(m) => ("orientation", m),
            PathViolation::NotClosed(m) => ("not closed", m),
            PathViolation::NotElementary(m) => ("not elementary", m),
            PathViolation::NotMonotone(m) => ("not monotone", m),
        };
        write!(f, "{kind}: {msg}")
    }
}

/// Full covering-path check of an item sequence: alternation, membership,
/// forward arc orientation, closure, loop-deleted elementarity and
/// non-decreasing column indices.
pub fn check_covering_path(
    profile: &ProfileGraph,
    items: &[PathItem],
) -> Result<(), PathViolation> {
    if items.is_empty() {
        return Err(PathViolation::Malformed("empty item sequence".into()));
    }
    if !items.len().is_multiple_of(2) {
        return Err(PathViolation::Malformed(format!(
            "odd item count {}",
            items.len()
        )));
    }
    for (k, item) in items.iter().enumerate() {
        let is_arc = matches!(item, PathItem::Arc(_));
        if (k % 2 == 0) != is_arc {
            return Err(PathViolation::Malformed(format!(
                "items must alternate arc/edge, item {k} breaks the pattern"
            )));
        }
    }
    let first = match items[0] {
        PathItem::Arc(a) => a,
        PathItem::Edge(_) => unreachable!(),
    };
    if first.column != 1 {
        return Err(PathViolation::Malformed(format!(
            "path must start with the arc at column 1, found column {}",
            first.column
        )));
    }

    let q = profile.columns();
    let start = Vertex::new(1, first.from_line);
    let mut current = start;
    let mut visited = vec![start];
    for item in items {
        match item {
            PathItem::Arc(a) => {
                if !profile.has_arc(a) {
                    return Err(PathViolation::NotInProfile(format!(
                        "arc {}:{}->{}",
                        a.column, a.from_line, a.to_line
                    )));
                }
                if a.column != current.column {
                    return Err(PathViolation::Discontinuous(format!(
                        "arc at column {} while at ({},{})",
                        a.column, current.column, current.line
                    )));
                }
                if a.from_line != current.line {
                    if a.to_line == current.line {
                        return Err(PathViolation::Orientation(format!(
                            "arc {}:{}->{} traversed backwards",
                            a.column, a.from_line, a.to_line
                        )));
                    }
                    return Err(PathViolation::Discontinuous(format!(
                        "arc from line {} while at line {}",
                        a.from_line, current.line
                    )));
                }
                current = Vertex::new(current.column, a.to_line);
            }
            PathItem::Edge(e) => {
                if !profile.has_edge(e) {
                    return Err(PathViolation::NotInProfile(format!(
                        "edge line {} column {}",
                        e.line, e.from_column
                    )));
                }
                let (from, to) = e.endpoints(q);
                if current == from {
                    current = to;
                } else if current == to && from != to {
                    return Err(PathViolation::NotMonotone(format!(
                        "edge of line {} traversed from column {} back to column {}",
                        e.line, to.column, from.column
                    )));
                } else {
                    return Err(PathViolation::Discontinuous(format!(
                        "edge of line {} at columns {}-{} while at ({},{})",
                        e.line, from.column, to.column, current.column, current.line
                    )));
                }
            }
        }
        if current != *visited.last().unwrap() {
            visited.push(current);
        }
    }

    if current != start {
        return Err(PathViolation::NotClosed(format!(
            "walk ends at ({},{}), started at ({},{})",
            current.column, current.line, start.column, start.line
        )));
    }

    // loop-deleted elementarity: the closed cycle may not revisit a vertex
    let mut cycle = visited;
    if cycle.len() > 1 && *cycle.last().unwrap() == start {
        cycle.pop();
    }
    let mut sorted = cycle.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != cycle.len() {
        return Err(PathViolation::NotElementary(
            "cycle revisits a vertex after loop deletion".into(),
        ));
    }

    // one monotone sweep: arc columns are exactly 1..=q in order
    let arc_columns: Vec<usize> = items
        .iter()
        .filter_map(|i| match i {
            PathItem::Arc(a) => Some(a.column),
            PathItem::Edge(_) => None,
        })
        .collect();
    if arc_columns != (1..=q).collect::<Vec<_>>() {
        return Err(PathViolation::NotMonotone(format!(
            "arc columns {arc_columns:?} are not a single sweep of 1..={q}"
        )));
    }

    Ok(())
}

pub fn is_covering_path(profile: &ProfileGraph, items: &[PathItem]) -> bool {
    check_covering_path(profile, items).is_ok()
}

/// Diagnostics from checking that a candidate path system covers exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverDiagnostics {
    pub ok: bool,
    /// Paths failing the covering-path check, by index.
    pub invalid_paths: Vec<(usize, PathViolation)>,
    pub missing_arcs: Vec<ArcSeg>,
    pub duplicated_arcs: Vec<ArcSeg>,
    pub missing_edges: Vec<EdgeSeg>,
    pub duplicated_edges: Vec<EdgeSeg>,
}

/// Checks exactness for a finite profile: every candidate is a covering
/// path and together they hit every arc and edge exactly once.
pub fn verify_exact_covering(
    profile: &ProfileGraph,
    candidate: &[Vec<PathItem>],
) -> Result<CoverDiagnostics, CoveringError> {
    if !profile.is_finite() {
        return Err(CoveringError::PeriodicUnsupported);
    }
    let mut invalid_paths = Vec::new();
    for (k, items) in candidate.iter().enumerate() {
        if let Err(v) = check_covering_path(profile, items) {
            invalid_paths.push((k, v));
        }
    }

    let mut arc_count: BTreeMap<ArcSeg, usize> =
        profile.arc_segs().into_iter().map(|a| (a, 0)).collect();
    let mut edge_count: BTreeMap<EdgeSeg, usize> =
        profile.edge_segs().into_iter().map(|e| (e, 0)).collect();
    for items in candidate {
        for item in items {
            match item {
                PathItem::Arc(a) => {
                    if let Some(c) = arc_count.get_mut(a) {
                        *c += 1;
                    }
                }
                PathItem::Edge(e) => {
                    if let Some(c) = edge_count.get_mut(e) {
                        *c += 1;
                    }
                }
            }
        }
    }
    let missing_arcs: Vec<ArcSeg> = arc_count
        .iter()
        .filter(|&(_, &c)| c == 0)
        .map(|(&a, _)| a)
        .collect();
    let duplicated_arcs: Vec<ArcSeg> = arc_count
        .iter()
        .filter(|&(_, &c)| c > 1)
        .map(|(&a, _)| a)
        .collect();
    let missing_edges: Vec<EdgeSeg> = edge_count
        .iter()
        .filter(|&(_, &c)| c == 0)
        .map(|(&e, _)| e)
        .collect();
    let duplicated_edges: Vec<EdgeSeg> = edge_count
        .iter()
        .filter(|&(_, &c)| c > 1)
        .map(|(&e, _)| e)
        .collect();

    let ok = invalid_paths.is_empty()
        && missing_arcs.is_empty()
        && duplicated_arcs.is_empty()
        && missing_edges.is_empty()
        && duplicated_edges.is_empty();
    Ok(CoverDiagnostics {
        ok,
        invalid_paths,
        missing_arcs,
        duplicated_arcs,
        missing_edges,
        duplicated_edges,
    })
}

const ORACLE_BUDGET: usize = 24;

/// Independent realizability oracle: enumerates every covering-path cycle by
/// depth-first search over the explicit item sets, then searches for a
/// subset of cycles partitioning all arcs and edges. Exhaustive, so it never
/// misses a covering; guarded to desk scale.
pub fn backtracking_cover_oracle(
    profile: &ProfileGraph,
) -> Result<Option<ExactCovering>, CoveringError> {
    let n = match profile.sheet_set() {
        SheetSet::Finite(n) => n,
        SheetSet::PeriodicIntegers(_) => return Err(CoveringError::PeriodicUnsupported),
    };
    let q = profile.columns();
    if n * q > ORACLE_BUDGET {
        return Err(CoveringError::BudgetExceeded(n * q, ORACLE_BUDGET));
    }

    let arcs = profile.arc_segs();
    let edges = profile.edge_segs();
    let arc_index: BTreeMap<ArcSeg, usize> =
        arcs.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let edge_index: BTreeMap<EdgeSeg, usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

    // enumerate covering-path cycles from every possible starting line
    let mut cycles: Vec<(CoveringPath, u64)> = Vec::new();
    for start in 1..=n as Sheet {
        let mut lines = vec![start];
        let mut mask = 0u64;
        dfs_cycles(
            profile,
            &arcs,
            &edges,
            &arc_index,
            &edge_index,
            start,
            1,
            &mut lines,
            &mut mask,
            &mut cycles,
        );
    }

    // exact cover over all items
    let total_items = arcs.len() + edges.len();
    let full: u64 = if total_items == 64 {
        u64::MAX
    } else {
        (1u64 << total_items) - 1
    };
    let mut chosen = Vec::new();
    if search_cover(&cycles, full, 0, &mut chosen) {
        let mut paths: Vec<CoveringPath> = chosen.iter().map(|&i| cycles[i].0.clone()).collect();
        paths.sort_by_key(|p| p.start_line());
        Ok(Some(ExactCovering {
            sheet_set: profile.sheet_set(),
            paths,
        }))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn dfs_cycles(
    profile: &ProfileGraph,
    arcs: &[ArcSeg],
    edges: &[EdgeSeg],
    arc_index: &BTreeMap<ArcSeg, usize>,
    edge_index: &BTreeMap<EdgeSeg, usize>,
    start: Sheet,
    column: usize,
    lines: &mut Vec<Sheet>,
    mask: &mut u64,
    out: &mut Vec<(CoveringPath, u64)>,
) {
    let q = profile.columns();
    if column > q {
        if *lines.last().unwrap() == start {
            out.push((
                CoveringPath {
                    lines: lines.clone(),
                },
                *mask,
            ));
        }
        return;
    }
    let at = *lines.last().unwrap();
    // branch over every arc leaving the current vertex, then the edge
    // continuing its target line into the next column
    for arc in arcs
        .iter()
        .filter(|a| a.column == column && a.from_line == at)
    {
        for edge in edges
            .iter()
            .filter(|e| e.from_column == column && e.line == arc.to_line)
        {
            let ai = arc_index[arc];
            let ei = arcs.len() + edge_index[edge];
            let bits = (1u64 << ai) | (1u64 << ei);
            lines.push(arc.to_line);
            *mask |= bits;
            dfs_cycles(
                profile,
                arcs,
                edges,
                arc_index,
                edge_index,
                start,
                column + 1,
                lines,
                mask,
                out,
            );
            *mask &= !bits;
            lines.pop();
        }
    }
}

fn search_cover(
    cycles: &[(CoveringPath, u64)],
    full: u64,
    covered: u64,
    chosen: &mut Vec<usize>,
) -> bool {
    if covered == full {
        return true;
    }
    // first uncovered item
    let pivot = (!covered & full).trailing_zeros();
    let bit = 1u64 << pivot;
    for (i, (_, mask)) in cycles.iter().enumerate() {
        if mask & bit != 0 && mask & covered == 0 {
            chosen.push(i);
            if search_cover(cycles, full, covered | mask, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// The cycle of edges on one line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaCycle {
    pub line: Sheet,
    pub edges: Vec<EdgeSeg>,
}

/// One cycle per line, each of `q` edges, pairwise vertex-disjoint.
pub fn beta_cycles(profile: &ProfileGraph) -> Result<Vec<BetaCycle>, CoveringError> {
    let n = match profile.sheet_set() {
        SheetSet::Finite(n) => n,
        SheetSet::PeriodicIntegers(_) => return Err(CoveringError::PeriodicUnsupported),
    };
    let q = profile.columns();
    Ok((1..=n as Sheet)
        .map(|line| BetaCycle {
            line,
            edges: (1..=q)
                .map(|from_column| EdgeSeg { line, from_column })
                .collect(),
        })
        .collect())
}

/// A branch-point witness over one column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuObject {
    pub column: usize,
    pub kind: MuKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MuKind {
    /// Finite sheet set: a contour of length `lines.len()`, i.e. a branch
    /// point of order `lines.len() - 1` (a loop when the length is 1).
    Contour { lines: Vec<Sheet> },
    /// Periodic: a translation family of contours, one per period.
    ContourFamily { residues: Vec<Sheet> },
    /// Periodic: `count` distinct bi-infinite paths, each a logarithmic
    /// branch point.
    InfinitePaths { residues: Vec<Sheet>, count: usize },
}

impl MuObject {
    /// Branch order `lambda`; `None` means logarithmic (`lambda = infinity`).
    pub fn order(&self) -> Option<usize> {
        match &self.kind {
            MuKind::Contour { lines } => Some(lines.len() - 1),
            MuKind::ContourFamily { residues } => Some(residues.len() - 1),
            MuKind::InfinitePaths { .. } => None,
        }
    }

    /// Lines (or residues) supporting the object.
    pub fn support(&self) -> &[Sheet] {
        match &self.kind {
            MuKind::Contour { lines } => lines,
            MuKind::ContourFamily { residues } => residues,
            MuKind::InfinitePaths { residues, .. } => residues,
        }
    }
}

/// The mu-objects over one column: the cycle structure of its permutation.
/// Fixed points come back as length-1 contours (loops, no branch point).
pub fn mu_objects(profile: &ProfileGraph, column: usize) -> Vec<MuObject> {
    assert!(
        column >= 1 && column <= profile.columns(),
        "column {column} out of range 1..={}",
        profile.columns()
    );
    profile
        .constellation()
        .sigma(column)
        .cycles()
        .into_iter()
        .map(|orbit| MuObject {
            column,
            kind: match orbit {
                Orbit::Cycle { sheets } => MuKind::Contour { lines: sheets },
                Orbit::CycleFamily { residues } => MuKind::ContourFamily { residues },
                Orbit::InfiniteFamily {
                    residues,
                    orbit_count,
                } => MuKind::InfinitePaths {
                    residues,
                    count: orbit_count,
                },
            },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ProfileGraph;
    use crate::perm::{Constellation, Permutation};

    fn profile_from_cycles(n: usize, columns: &[Vec<Vec<Sheet>>]) -> ProfileGraph {
        let sigmas = columns
            .iter()
            .map(|cycles| Permutation::finite_from_cycles(n, cycles).unwrap())
            .collect();
        ProfileGraph::from_constellation(Constellation::new(sigmas).unwrap())
    }

    fn torus() -> ProfileGraph {
        profile_from_cycles(
            2,
            &[
                vec![vec![1, 2]],
                vec![vec![1, 2]],
                vec![vec![1, 2]],
                vec![vec![1, 2]],
            ],
        )
    }

    fn bad3cycle() -> ProfileGraph {
        profile_from_cycles(3, &[vec![vec![1, 2, 3]], vec![vec![1, 2, 3]]])
    }

    fn arcsin() -> ProfileGraph {
        let sigmas = vec![
            Permutation::periodic_from_images(2, vec![1, 0]).unwrap(),
            Permutation::periodic_from_images(2, vec![-1, 2]).unwrap(),
            Permutation::periodic_from_images(2, vec![-2, 3]).unwrap(),
        ];
        ProfileGraph::from_constellation(Constellation::new(sigmas).unwrap())
    }

    #[test]
    fn torus_forced_walk_closes() {
        match forced_walk(&torus(), 1) {
            WalkResult::Closed(p) => {
                assert_eq!(p.line_sequence(), &[1, 2, 1, 2, 1]);
                assert_eq!(p.items().len(), 8);
            }
            WalkResult::Open(_) => panic!("torus walk must close"),
        }
    }

    #[test]
    fn identity_walk_is_loops_and_edges() {
        let p = profile_from_cycles(1, &[vec![], vec![], vec![]]);
        match forced_walk(&p, 1) {
            WalkResult::Closed(path) => {
                assert_eq!(path.line_sequence(), &[1, 1, 1, 1]);
                assert!(path.arcs().all(|a| a.is_loop()));
                assert_eq!(path.edges().count(), 3);
            }
            WalkResult::Open(_) => panic!("single-sheet walk must close"),
        }
    }

    #[test]
    fn three_cycle_walk_opens_at_line_three() {
        match forced_walk(&bad3cycle(), 1) {
            WalkResult::Open(trace) => {
                assert_eq!(trace.lines, vec![1, 2, 3]);
                assert_eq!(trace.end_line(), 3);
            }
            WalkResult::Closed(_) => panic!("walk must fail to close"),
        }
    }

    #[test]
    fn torus_covering_has_two_paths_of_length_eight() {
        let covering = match find_exact_covering(&torus()) {
            CoveringOutcome::Covered(c) => c,
            CoveringOutcome::NotCoverable(_) => panic!("torus is coverable"),
        };
        assert_eq!(covering.paths().len(), 2);
        for p in covering.paths() {
            assert_eq!(p.arcs().count(), 4);
            assert_eq!(p.edges().count(), 4);
        }
    }

    #[test]
    fn three_cycle_profile_not_coverable() {
        assert!(!find_exact_covering(&bad3cycle()).is_coverable());
    }

    #[test]
    fn arcsin_is_coverable() {
        let outcome = find_exact_covering(&arcsin());
        let covering = outcome.covering().expect("arcsin is coverable");
        assert_eq!(covering.paths().len(), 2);
    }

    #[test]
    fn verify_accepts_found_covering() {
        let profile = torus();
        let covering = find_exact_covering(&profile).covering().unwrap().clone();
        let diag = verify_exact_covering(&profile, &covering.item_paths()).unwrap();
        assert!(diag.ok, "{diag:?}");
    }

    #[test]
    fn verify_reports_uncovered_items() {
        let profile = torus();
        let covering = find_exact_covering(&profile).covering().unwrap().clone();
        let one = vec![covering.paths()[0].items()];
        let diag = verify_exact_covering(&profile, &one).unwrap();
        assert!(!diag.ok);
        assert_eq!(diag.missing_arcs.len(), 4);
        assert_eq!(diag.missing_edges.len(), 4);
        assert!(diag.duplicated_arcs.is_empty());
    }

    #[test]
    fn verify_reports_duplicates() {
        let profile = torus();
        let covering = find_exact_covering(&profile).covering().unwrap().clone();
        let mut paths = covering.item_paths();
        paths.push(covering.paths()[0].items());
        let diag = verify_exact_covering(&profile, &paths).unwrap();
        assert!(!diag.ok);
        assert_eq!(diag.duplicated_arcs.len(), 4);
        assert_eq!(diag.duplicated_edges.len(), 4);
    }

    #[test]
    fn covering_path_check_accepts_forced_walk() {
        let profile = torus();
        let path = match forced_walk(&profile, 1) {
            WalkResult::Closed(p) => p,
            WalkResult::Open(_) => unreachable!(),
        };
        assert!(is_covering_path(&profile, &path.items()));
    }

    #[test]
    fn covering_path_check_rejects_reversed_arc() {
        let profile = torus();
        let path = match forced_walk(&profile, 1) {
            WalkResult::Closed(p) => p,
            WalkResult::Open(_) => unreachable!(),
        };
        let mut items = path.items();
        // reverse the arc at column 2
        items[2] = PathItem::Arc(ArcSeg {
            column: 2,
            from_line: 1,
            to_line: 2,
        });
        assert!(matches!(
            check_covering_path(&profile, &items),
            Err(PathViolation::Orientation(_))
        ));
    }

    #[test]
    fn covering_path_check_rejects_double_sweep() {
        let profile = profile_from_cycles(1, &[vec![], vec![], vec![]]);
        let path = match forced_walk(&profile, 1) {
            WalkResult::Closed(p) => p,
            WalkResult::Open(_) => unreachable!(),
        };
        let mut items = path.items();
        items.extend(path.items());
        assert!(matches!(
            check_covering_path(&profile, &items),
            Err(PathViolation::NotElementary(_))
        ));
    }

    #[test]
    fn oracle_agrees_on_torus() {
        let covering = backtracking_cover_oracle(&torus()).unwrap();
        let found = find_exact_covering(&torus()).covering().unwrap().clone();
        assert_eq!(covering.unwrap(), found);
    }

    #[test]
    fn oracle_agrees_on_uncoverable() {
        assert!(backtracking_cover_oracle(&bad3cycle()).unwrap().is_none());
    }

    #[test]
    fn oracle_handles_single_vertex_profile() {
        let p = profile_from_cycles(1, &[vec![]]);
        let covering = backtracking_cover_oracle(&p).unwrap().unwrap();
        assert_eq!(covering.paths().len(), 1);
    }

    #[test]
    fn oracle_respects_budget() {
        let p = profile_from_cycles(5, &[vec![], vec![], vec![], vec![], vec![]]);
        assert!(matches!(
            backtracking_cover_oracle(&p),
            Err(CoveringError::BudgetExceeded(25, _))
        ));
    }

    #[test]
    fn beta_cycles_counts() {
        let cycles = beta_cycles(&torus()).unwrap();
        assert_eq!(cycles.len(), 2);
        assert!(cycles.iter().all(|c| c.edges.len() == 4));

        let single = profile_from_cycles(1, &[vec![], vec![], vec![], vec![], vec![]]);
        let cycles = beta_cycles(&single).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].edges.len(), 5);

        let sqrt = profile_from_cycles(2, &[vec![vec![1, 2]], vec![vec![1, 2]]]);
        let cycles = beta_cycles(&sqrt).unwrap();
        assert_eq!(cycles.len(), 2);
        assert!(cycles.iter().all(|c| c.edges.len() == 2));
    }

    #[test]
    fn mu_objects_of_three_cycle() {
        let p = profile_from_cycles(3, &[vec![vec![1, 2, 3]], vec![vec![1, 3, 2]]]);
        let mu = mu_objects(&p, 1);
        assert_eq!(mu.len(), 1);
        assert_eq!(mu[0].order(), Some(2));
    }

    #[test]
    fn mu_objects_of_identity_are_loops() {
        let p = profile_from_cycles(2, &[vec![], vec![]]);
        let mu = mu_objects(&p, 1);
        assert_eq!(mu.len(), 2);
        assert!(mu.iter().all(|m| m.order() == Some(0)));
    }

    #[test]
    fn arcsin_column_three_has_two_logarithmic_paths() {
        let mu = mu_objects(&arcsin(), 3);
        let log_points: usize = mu
            .iter()
            .filter_map(|m| match &m.kind {
                MuKind::InfinitePaths { count, .. } => Some(*count),
                _ => None,
            })
            .sum();
        assert_eq!(log_points, 2);
        assert!(mu.iter().all(|m| m.order().is_none()));
    }
}
