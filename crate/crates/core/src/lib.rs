//! Profile graphs of surfaces spread over the sphere.
//!
//! A surface branched over `q` base points is encoded by its profile: one
//! horizontal line per sheet, one vertex per (base point, sheet) pair, and a
//! vertical oriented arc per vertex realizing the sheet transition at that
//! base point. Equivalently the surface is a constellation, the tuple
//! `(sigma_1, ..., sigma_q)` of per-column sheet permutations.
//!
//! The crate answers, for finite and period-translation-invariant sheet
//! sets:
//!
//! - whether an arbitrary partially oriented graph is of profile type
//!   ([`validate::validate_profile_type`]);
//! - whether a profile-type graph is realizable as a surface, i.e. admits an
//!   exact covering by alternating closed paths
//!   ([`covering::find_exact_covering`], certified independently by
//!   [`covering::backtracking_cover_oracle`]);
//! - the explicit half-sheet gluing a covering induces ([`surface::glue`])
//!   together with branch data, Euler characteristic and genus
//!   ([`surface::surface_report`]), the latter cross-checked against the
//!   cell decomposition ([`surface::euler_from_cells`]);
//! - desk-scale enumeration and randomized sweeps ([`enumerate`]);
//! - a line-oriented text format ([`mod@format`]) and diagram emission
//!   ([`render`]).

pub mod covering;
pub mod enumerate;
pub mod format;
pub mod graph;
pub mod perm;
pub mod render;
pub mod surface;
pub mod validate;

pub use covering::{
    backtracking_cover_oracle, beta_cycles, check_covering_path, find_exact_covering, forced_walk,
    is_covering_path, mu_objects, verify_exact_covering, BetaCycle, CoverDiagnostics,
    CoveringError, CoveringOutcome, CoveringPath, ExactCovering, MuKind, MuObject, OpenWalk,
    PathItem, PathViolation, WalkResult,
};
pub use enumerate::{
    cross_check_theorem, enumerate_constellations, random_constellation, CrossCheckSummary,
    EnumError, EnumFilter, SplitMix64,
};
pub use format::{
    parse_profile, parse_profile_bytes, serialize_explicit, serialize_profile, DocumentBody,
    ParseError, ProfileDocument, SerializeError,
};
pub use graph::{ArcSeg, EdgeSeg, ExplicitGraph, ProfileError, ProfileGraph, Vertex};
pub use perm::{Constellation, Orbit, PermError, Permutation, Sheet, SheetSet};
pub use render::{render_diagram, DiagramStyle};
pub use surface::{
    euler_from_cells, glue, surface_report, BranchEntry, BranchMultiplicity, BranchOrder,
    BranchPoint, GlueError, Gluing, GluingRecord, SurfaceReport,
};
