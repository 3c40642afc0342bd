//! Profile-type validation of arbitrary explicit graphs.
//!
//! A graph of profile type is connected, homogeneous of degree 4 (two edge
//! ends plus two arc slots at every vertex, a loop occupying both of its
//! kind's slots), has vertical arcs realizing a bijection of the lines at
//! every column, a complete vertex grid over the occupied columns and lines,
//! and exactly one edge per line through infinity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::graph::{ExplicitGraph, Vertex};
use crate::perm::Sheet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationCode {
    Degree,
    ArcNotVertical,
    ArcNotBijective,
    ColumnIncomplete,
    EdgeShape,
    Disconnected,
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationCode::Degree => "DEGREE",
            ViolationCode::ArcNotVertical => "ARC_NOT_VERTICAL",
            ViolationCode::ArcNotBijective => "ARC_NOT_BIJECTIVE",
            ViolationCode::ColumnIncomplete => "COLUMN_INCOMPLETE",
            ViolationCode::EdgeShape => "EDGE_SHAPE",
            ViolationCode::Disconnected => "DISCONNECTED",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Location {
    Vertex(Vertex),
    Column(usize),
    Line(Sheet),
    Graph,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Vertex(v) => write!(f, "({},{})", v.column, v.line),
            Location::Column(c) => write!(f, "column {c}"),
            Location::Line(l) => write!(f, "line {l}"),
            Location::Graph => write!(f, "graph"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub code: ViolationCode,
    pub location: Location,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.code, self.location, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn has_code(&self, code: ViolationCode) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }
}

/// Decides whether `g` is a graph of profile type. All failures are report
/// entries, ordered by code and then by location.
pub fn validate_profile_type(g: &ExplicitGraph) -> ValidationReport {
    let mut violations = Vec::new();

    let vertices: Vec<Vertex> = g.vertices().collect();
    if vertices.is_empty() {
        violations.push(Violation {
            code: ViolationCode::Disconnected,
            location: Location::Graph,
            message: "graph is empty".to_string(),
        });
        return ValidationReport {
            ok: false,
            violations,
        };
    }

    let q = g.max_column();
    let lines = g.lines();

    // column completeness over the occupied grid
    let vertex_set: BTreeSet<Vertex> = vertices.iter().copied().collect();
    for column in 1..=q {
        for &line in &lines {
            let v = Vertex::new(column, line);
            if !vertex_set.contains(&v) {
                violations.push(Violation {
                    code: ViolationCode::ColumnIncomplete,
                    location: Location::Vertex(v),
                    message: format!("line {line} has no vertex over column {column}"),
                });
            }
        }
    }

    // degree: two edge ends and two arc slots per vertex
    let mut edge_ends: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut out_deg: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut in_deg: BTreeMap<Vertex, usize> = BTreeMap::new();
    for &(a, b) in g.edges() {
        *edge_ends.entry(a).or_insert(0) += 1;
        *edge_ends.entry(b).or_insert(0) += 1;
    }
    for &(from, to) in g.arcs() {
        *out_deg.entry(from).or_insert(0) += 1;
        *in_deg.entry(to).or_insert(0) += 1;
    }
    for &v in &vertices {
        let e = edge_ends.get(&v).copied().unwrap_or(0);
        let o = out_deg.get(&v).copied().unwrap_or(0);
        let i = in_deg.get(&v).copied().unwrap_or(0);
        if e != 2 || o + i != 2 {
            violations.push(Violation {
                code: ViolationCode::Degree,
                location: Location::Vertex(v),
                message: format!(
                    "expected 2 edge ends and 2 arc slots, found {e} and {}",
                    o + i
                ),
            });
        }
        if o != 1 || i != 1 {
            violations.push(Violation {
                code: ViolationCode::ArcNotBijective,
                location: Location::Vertex(v),
                message: format!("expected out-degree 1 and in-degree 1, found {o} and {i}"),
            });
        }
    }

    // arc verticality
    for &(from, to) in g.arcs() {
        if from.column != to.column {
            violations.push(Violation {
                code: ViolationCode::ArcNotVertical,
                location: Location::Vertex(from),
                message: format!(
                    "arc to ({},{}) leaves column {}",
                    to.column, to.line, from.column
                ),
            });
        }
    }

    // edge shape: consecutive columns on one line, one infinity edge per line
    let mut infinity_count: BTreeMap<Sheet, usize> = lines.iter().map(|&l| (l, 0)).collect();
    for &(a, b) in g.edges() {
        if a.line != b.line {
            violations.push(Violation {
                code: ViolationCode::EdgeShape,
                location: Location::Vertex(a),
                message: format!("edge to ({},{}) changes line", b.column, b.line),
            });
            continue;
        }
        let (lo, hi) = if a.column <= b.column {
            (a.column, b.column)
        } else {
            (b.column, a.column)
        };
        if q == 1 {
            // the only legal edge is the self-segment through infinity
            if lo == 1 && hi == 1 {
                *infinity_count.get_mut(&a.line).unwrap() += 1;
            } else {
                violations.push(Violation {
                    code: ViolationCode::EdgeShape,
                    location: Location::Vertex(a),
                    message: "edge outside the single column".to_string(),
                });
            }
        } else if lo + 1 == hi {
            // interior segment; for q == 2 the pair {1,2} also serves as the
            // infinity slot, counted below
            if q == 2 {
                *infinity_count.get_mut(&a.line).unwrap() += 1;
            }
        } else if lo == 1 && hi == q {
            *infinity_count.get_mut(&a.line).unwrap() += 1;
        } else {
            violations.push(Violation {
                code: ViolationCode::EdgeShape,
                location: Location::Vertex(Vertex::new(lo, a.line)),
                message: format!("edge spans columns {lo} and {hi}"),
            });
        }
    }
    // for q == 2 a line carries two edges between columns 1 and 2, one of
    // them the infinity segment; for other q exactly one edge sits in the
    // infinity slot
    let expected_infinity = if q == 2 { 2 } else { 1 };
    for &line in &lines {
        let c = infinity_count[&line];
        if c != expected_infinity {
            let what = if c < expected_infinity {
                "missing"
            } else {
                "duplicated"
            };
            violations.push(Violation {
                code: ViolationCode::EdgeShape,
                location: Location::Line(line),
                message: format!("infinity edge {what} on line {line}"),
            });
        }
    }

    if !is_connected(g) {
        violations.push(Violation {
            code: ViolationCode::Disconnected,
            location: Location::Graph,
            message: "graph has more than one component".to_string(),
        });
    }

    violations.sort_by_key(|v| (v.code, v.location));
    violations.dedup();
    ValidationReport {
        ok: violations.is_empty(),
        violations,
    }
}

/// Connectivity of the underlying undirected graph (edges plus arcs,
/// orientation ignored). The empty graph counts as disconnected.
pub fn is_connected(g: &ExplicitGraph) -> bool {
    let vertices: Vec<Vertex> = g.vertices().collect();
    if vertices.is_empty() {
        return false;
    }
    let index: BTreeMap<Vertex, usize> =
        vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for &(a, b) in g.edges().iter().chain(g.arcs().iter()) {
        let (ia, ib) = (index[&a], index[&b]);
        adj[ia].push(ib);
        adj[ib].push(ia);
    }
    let mut seen = vec![false; vertices.len()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == vertices.len()
}
