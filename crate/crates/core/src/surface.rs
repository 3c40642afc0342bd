//! Assembling the surface from an exact covering.
//!
//! Every line contributes one inner half-sheet (its beta cycle) and every
//! covering path one outer half-sheet. The edge of line `j` leaving column
//! `i` glues inner sheet `j` to the path containing that edge along the
//! boundary segment `L_i`. A contour of length `lambda + 1` at a column
//! pulls `lambda + 1` inner and `lambda + 1` outer half-sheets together into
//! a branch point of order `lambda`; loops glue a half-sheet pair back onto
//! itself and create no branch point.

use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::covering::{
    find_exact_covering, mu_objects, verify_exact_covering, CoverDiagnostics, ExactCovering, MuKind,
};
use crate::graph::{EdgeSeg, ProfileGraph};
use crate::perm::{Sheet, SheetSet};

#[derive(Debug, Clone, Error)]
pub enum GlueError {
    #[error("gluing requires a finite sheet set")]
    PeriodicUnsupported,
    #[error("candidate covering does not cover this profile exactly")]
    CoveringMismatch(Box<CoverDiagnostics>),
}

/// One gluing: inner half-sheet of `inner_line` meets the outer half-sheet
/// of the path starting at `outer_start`, along boundary segment `L_column`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gluing {
    pub inner_line: Sheet,
    pub outer_start: Sheet,
    pub column: usize,
}

/// Branch order: finite `lambda` or logarithmic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchOrder {
    Finite(usize),
    Logarithmic,
}

/// A branch point produced by the gluing, with the half-sheets meeting it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchPoint {
    pub column: usize,
    pub order: BranchOrder,
    pub inner_sheets: Vec<Sheet>,
    pub outer_sheets: Vec<Sheet>,
}

/// The explicit half-sheet gluing of a finite coverable profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingRecord {
    pub sheet_set: SheetSet,
    /// Inner half-sheets, one per line.
    pub inner_half_sheets: Vec<Sheet>,
    /// Outer half-sheets, one per covering path, keyed by starting line.
    pub outer_half_sheets: Vec<Sheet>,
    pub gluings: Vec<Gluing>,
    pub branch_points: Vec<BranchPoint>,
    /// Per column: number of mu-contours including loops. Each contour
    /// bounds one disk face over its base point.
    pub contour_counts: Vec<usize>,
}

/// Glues half-sheets along the covering. The covering is re-verified first.
pub fn glue(profile: &ProfileGraph, covering: &ExactCovering) -> Result<GluingRecord, GlueError> {
    let n = match profile.sheet_set() {
        SheetSet::Finite(n) => n,
        SheetSet::PeriodicIntegers(_) => return Err(GlueError::PeriodicUnsupported),
    };
    let diag = verify_exact_covering(profile, &covering.item_paths())
        .map_err(|_| GlueError::PeriodicUnsupported)?;
    if !diag.ok {
        return Err(GlueError::CoveringMismatch(Box::new(diag)));
    }

    let q = profile.columns();
    let mut edge_to_path: BTreeMap<EdgeSeg, Sheet> = BTreeMap::new();
    for path in covering.paths() {
        for e in path.edges() {
            edge_to_path.insert(e, path.start_line());
        }
    }

    let mut gluings = Vec::with_capacity(n * q);
    for line in 1..=n as Sheet {
        for column in 1..=q {
            let edge = EdgeSeg {
                line,
                from_column: column,
            };
            gluings.push(Gluing {
                inner_line: line,
                outer_start: edge_to_path[&edge],
                column,
            });
        }
    }

    let mut branch_points = Vec::new();
    let mut contour_counts = vec![0usize; q];
    for column in 1..=q {
        for mu in mu_objects(profile, column) {
            let lines = match mu.kind {
                MuKind::Contour { lines } => lines,
                _ => unreachable!("finite profile"),
            };
            contour_counts[column - 1] += 1;
            if lines.len() < 2 {
                continue;
            }
            // the 2(lambda+1) edges incident to the contour's vertices lie on
            // lambda+1 distinct paths
            let prev = if column == 1 { q } else { column - 1 };
            let mut outer: BTreeSet<Sheet> = BTreeSet::new();
            for &line in &lines {
                outer.insert(
                    edge_to_path[&EdgeSeg {
                        line,
                        from_column: prev,
                    }],
                );
                outer.insert(
                    edge_to_path[&EdgeSeg {
                        line,
                        from_column: column,
                    }],
                );
            }
            branch_points.push(BranchPoint {
                column,
                order: BranchOrder::Finite(lines.len() - 1),
                inner_sheets: lines,
                outer_sheets: outer.into_iter().collect(),
            });
        }
    }

    Ok(GluingRecord {
        sheet_set: profile.sheet_set(),
        inner_half_sheets: (1..=n as Sheet).collect(),
        outer_half_sheets: covering.paths().iter().map(|p| p.start_line()).collect(),
        gluings,
        branch_points,
        contour_counts,
    })
}

/// Euler characteristic from the cell decomposition the gluing induces:
/// `n*q` vertices, `n*q` edges plus `n*q` arcs, and faces given by the inner
/// and outer half-sheets plus one disk per mu-contour.
pub fn euler_from_cells(record: &GluingRecord) -> i64 {
    let n = record.inner_half_sheets.len() as i64;
    let q = record.contour_counts.len() as i64;
    let vertices = n * q;
    let edges = 2 * n * q;
    let faces = n
        + record.outer_half_sheets.len() as i64
        + record.contour_counts.iter().sum::<usize>() as i64;
    vertices - edges + faces
}

/// How many branch points a report entry stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchMultiplicity {
    /// A single branch point (finite sheet sets).
    One,
    /// One branch point per period translate (periodic contour families).
    PerPeriod,
    /// Exactly this many branch points (logarithmic families).
    Points(usize),
}

/// One branch-point entry of a surface report, labeled by the smallest
/// participating line or residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchEntry {
    pub column: usize,
    pub label: Sheet,
    pub order: BranchOrder,
    pub lines: Vec<Sheet>,
    pub multiplicity: BranchMultiplicity,
}

/// Branch data and global invariants of the surface a profile describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceReport {
    pub sheet_set: SheetSet,
    pub columns: usize,
    pub connected: bool,
    /// Whether an exact covering exists, i.e. the graph is the profile of a
    /// surface. When false the report stops at the branch data.
    pub realizable: bool,
    pub closed: bool,
    pub branch_points: Vec<BranchEntry>,
    /// Total branching `B`, the sum of all finite branch orders (finite
    /// sheet sets only).
    pub total_branching: Option<u64>,
    /// `2n - B` for finite realizable profiles.
    pub euler_characteristic: Option<i64>,
    /// `(2 - chi) / 2` for finite, realizable, connected profiles.
    pub genus: Option<u64>,
}

/// Computes the full report for a profile. Non-realizability is a report
/// state, not an error.
pub fn surface_report(profile: &ProfileGraph) -> SurfaceReport {
    let sheet_set = profile.sheet_set();
    let columns = profile.columns();
    let connected = profile.constellation().is_transitive();
    let realizable = find_exact_covering(profile).is_coverable();

    let mut branch_points = Vec::new();
    for column in 1..=columns {
        for mu in mu_objects(profile, column) {
            let entry = match mu.kind {
                MuKind::Contour { lines } => {
                    if lines.len() < 2 {
                        continue;
                    }
                    BranchEntry {
                        column,
                        label: lines[0],
                        order: BranchOrder::Finite(lines.len() - 1),
                        lines,
                        multiplicity: BranchMultiplicity::One,
                    }
                }
                MuKind::ContourFamily { residues } => {
                    if residues.len() < 2 {
                        continue;
                    }
                    BranchEntry {
                        column,
                        label: residues[0],
                        order: BranchOrder::Finite(residues.len() - 1),
                        lines: residues,
                        multiplicity: BranchMultiplicity::PerPeriod,
                    }
                }
                MuKind::InfinitePaths { residues, count } => BranchEntry {
                    column,
                    label: residues[0],
                    order: BranchOrder::Logarithmic,
                    lines: residues,
                    multiplicity: BranchMultiplicity::Points(count),
                },
            };
            branch_points.push(entry);
        }
    }

    match sheet_set {
        SheetSet::Finite(n) => {
            let total: u64 = branch_points
                .iter()
                .map(|b| match b.order {
                    BranchOrder::Finite(l) => l as u64,
                    BranchOrder::Logarithmic => unreachable!("finite sheet set"),
                })
                .sum();
            let euler = if realizable {
                Some(2 * n as i64 - total as i64)
            } else {
                None
            };
            let genus = match euler {
                Some(chi) if connected => {
                    let two_g = 2 - chi;
                    assert!(
                        two_g >= 0 && two_g % 2 == 0,
                        "Riemann-Hurwitz violated: chi = {chi}"
                    );
                    Some((two_g / 2) as u64)
                }
                _ => None,
            };
            SurfaceReport {
                sheet_set,
                columns,
                connected,
                realizable,
                closed: realizable,
                branch_points,
                total_branching: Some(total),
                euler_characteristic: euler,
                genus,
            }
        }
        SheetSet::PeriodicIntegers(_) => SurfaceReport {
            sheet_set,
            columns,
            connected,
            realizable,
            closed: false,
            branch_points,
            total_branching: None,
            euler_characteristic: None,
            genus: None,
        },
    }
}

impl SurfaceReport {
    /// Plain-text rendering with a stable key order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self.sheet_set {
            SheetSet::Finite(n) => writeln!(out, "sheets: {n}").unwrap(),
            SheetSet::PeriodicIntegers(p) => {
                writeln!(out, "sheets: countable (period {p})").unwrap()
            }
        }
        writeln!(out, "columns: {}", self.columns).unwrap();
        writeln!(out, "connected: {}", self.connected).unwrap();
        writeln!(out, "realizable: {}", self.realizable).unwrap();
        writeln!(out, "closed: {}", self.closed).unwrap();
        writeln!(out, "branch points:").unwrap();
        if self.branch_points.is_empty() {
            writeln!(out, "  none").unwrap();
        }
        for b in &self.branch_points {
            let order = match b.order {
                BranchOrder::Finite(l) => format!("order {l}"),
                BranchOrder::Logarithmic => "logarithmic".to_string(),
            };
            let mult = match b.multiplicity {
                BranchMultiplicity::One => String::new(),
                BranchMultiplicity::PerPeriod => " (one per period)".to_string(),
                BranchMultiplicity::Points(k) => format!(" (x{k})"),
            };
            let lines: Vec<String> = b.lines.iter().map(|l| l.to_string()).collect();
            writeln!(
                out,
                "  column {}: at {} {}{} [{}]",
                b.column,
                b.label,
                order,
                mult,
                lines.join(" ")
            )
            .unwrap();
        }
        if let Some(total) = self.total_branching {
            writeln!(out, "total branching: {total}").unwrap();
        }
        if let Some(chi) = self.euler_characteristic {
            writeln!(out, "euler characteristic: {chi}").unwrap();
        }
        if let Some(g) = self.genus {
            writeln!(out, "genus: {g}").unwrap();
        }
        out
    }

    /// Machine-readable rendering. Keys appear in a fixed order; absent
    /// quantities are `null`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct SheetsDto {
            kind: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            count: Option<usize>,
            #[serde(skip_serializing_if = "Option::is_none")]
            period: Option<usize>,
        }
        #[derive(Serialize)]
        struct MultiplicityDto {
            kind: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            count: Option<usize>,
        }
        #[derive(Serialize)]
        struct BranchDto<'a> {
            column: usize,
            label: Sheet,
            order: Option<usize>,
            logarithmic: bool,
            lines: &'a [Sheet],
            multiplicity: MultiplicityDto,
        }
        #[derive(Serialize)]
        struct ReportDto<'a> {
            sheets: SheetsDto,
            columns: usize,
            connected: bool,
            realizable: bool,
            closed: bool,
            branch_points: Vec<BranchDto<'a>>,
            total_branching: Option<u64>,
            euler_characteristic: Option<i64>,
            genus: Option<u64>,
        }

        let sheets = match self.sheet_set {
            SheetSet::Finite(n) => SheetsDto {
                kind: "finite",
                count: Some(n),
                period: None,
            },
            SheetSet::PeriodicIntegers(p) => SheetsDto {
                kind: "periodic",
                count: None,
                period: Some(p),
            },
        };
        let branch_points = self
            .branch_points
            .iter()
            .map(|b| BranchDto {
                column: b.column,
                label: b.label,
                order: match b.order {
                    BranchOrder::Finite(l) => Some(l),
                    BranchOrder::Logarithmic => None,
                },
                logarithmic: matches!(b.order, BranchOrder::Logarithmic),
                lines: &b.lines,
                multiplicity: match b.multiplicity {
                    BranchMultiplicity::One => MultiplicityDto {
                        kind: "one",
                        count: None,
                    },
                    BranchMultiplicity::PerPeriod => MultiplicityDto {
                        kind: "per-period",
                        count: None,
                    },
                    BranchMultiplicity::Points(k) => MultiplicityDto {
                        kind: "points",
                        count: Some(k),
                    },
                },
            })
            .collect();
        let dto = ReportDto {
            sheets,
            columns: self.columns,
            connected: self.connected,
            realizable: self.realizable,
            closed: self.closed,
            branch_points,
            total_branching: self.total_branching,
            euler_characteristic: self.euler_characteristic,
            genus: self.genus,
        };
        serde_json::to_string_pretty(&dto).expect("report serialization")
    }
}
