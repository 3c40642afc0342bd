//! The `.prof` on-disk format.
//!
//! Line-oriented ASCII, `#` starts a comment, blank lines are skipped:
//!
//! ```text
//! PROFILE v1
//! SHEETS FINITE 2          # or: SHEETS PERIODIC 2
//! COLUMNS 4
//! SIGMA 1 = (1 2)          # cycles; fixed points omitted; identity is ()
//! SIGMA 2 = (1 2)
//! SIGMA 3 = (1 2)
//! SIGMA 4 = (1 2)
//! ```
//!
//! Periodic documents write each column as residue images, extended
//! p-periodically: `SIGMA 1 = MAP 0->1 1->0`. Finite documents may instead
//! carry an explicit item block of `EDGE <line> <column>` and
//! `ARC <column> <from_line> > <to_line>` lines, so that arbitrary graphs
//! can be fed to validation. Parsing is total: any byte sequence yields a
//! document or a positioned error. Serialization is canonical, so
//! `serialize . parse` canonicalizes and `parse . serialize` is identity.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{ArcSeg, EdgeSeg, ExplicitGraph, ProfileError, ProfileGraph};
use crate::perm::{Constellation, Orbit, Permutation, Sheet, SheetSet};
use crate::validate::{
    validate_profile_type, Location, ValidationReport, Violation, ViolationCode,
};

/// Largest accepted sheet count, period or column count.
const SIZE_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

/// A parsed `.prof` document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileDocument {
    pub sheet_set: SheetSet,
    pub columns: usize,
    pub body: DocumentBody,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentBody {
    /// One permutation per column.
    Sigma(Constellation),
    /// Raw item lists of a finite graph, for validation workflows.
    Explicit {
        edges: Vec<EdgeSeg>,
        arcs: Vec<ArcSeg>,
    },
}

impl ProfileDocument {
    pub fn from_constellation(c: Constellation) -> Self {
        ProfileDocument {
            sheet_set: c.sheet_set(),
            columns: c.columns(),
            body: DocumentBody::Sigma(c),
        }
    }

    /// The checked profile this document denotes. Explicit bodies go through
    /// profile-type validation.
    pub fn to_profile(&self) -> Result<ProfileGraph, ProfileError> {
        match &self.body {
            DocumentBody::Sigma(c) => Ok(ProfileGraph::from_constellation(c.clone())),
            DocumentBody::Explicit { .. } => {
                ProfileGraph::from_explicit(&self.explicit_graph().expect("explicit body"))
            }
        }
    }

    /// Checks the profile-type axioms. Finite documents are materialized and
    /// run through the full graph check; periodic documents are structurally
    /// sound by construction, leaving only connectivity to verify.
    pub fn validate(&self) -> ValidationReport {
        match self.explicit_graph() {
            Some(g) => validate_profile_type(&g),
            None => {
                let DocumentBody::Sigma(c) = &self.body else {
                    unreachable!("periodic documents carry a sigma body")
                };
                let mut violations = Vec::new();
                if !c.is_transitive() {
                    violations.push(Violation {
                        code: ViolationCode::Disconnected,
                        location: Location::Graph,
                        message: "the permutations do not act transitively on the sheets"
                            .to_string(),
                    });
                }
                ValidationReport {
                    ok: violations.is_empty(),
                    violations,
                }
            }
        }
    }

    /// The raw graph view of a finite document; `None` for periodic ones.
    pub fn explicit_graph(&self) -> Option<ExplicitGraph> {
        match &self.body {
            DocumentBody::Explicit { edges, arcs } => {
                Some(ExplicitGraph::from_segments(self.columns, edges, arcs))
            }
            DocumentBody::Sigma(c) => match c.sheet_set() {
                SheetSet::Finite(_) => {
                    Some(ProfileGraph::from_constellation(c.clone()).to_explicit())
                }
                SheetSet::PeriodicIntegers(_) => None,
            },
        }
    }
}

/// Tokens of one line with their 1-based starting columns.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_ascii_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_count(lineno: usize, col: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    let v: usize = tok.parse().map_err(|_| {
        ParseError::new(
            lineno,
            col,
            format!("expected a positive {what}, found '{tok}'"),
        )
    })?;
    if v == 0 {
        return Err(ParseError::new(
            lineno,
            col,
            format!("{what} must be positive"),
        ));
    }
    if v > SIZE_LIMIT {
        return Err(ParseError::new(
            lineno,
            col,
            format!("{what} {v} exceeds the limit {SIZE_LIMIT}"),
        ));
    }
    Ok(v)
}

fn parse_int(lineno: usize, col: usize, tok: &str) -> Result<i64, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::new(lineno, col, format!("expected an integer, found '{tok}'")))
}

/// Parses a document from bytes; non-ASCII input is a positioned error.
pub fn parse_profile_bytes(input: &[u8]) -> Result<ProfileDocument, ParseError> {
    let mut line = 1;
    let mut col = 1;
    for &b in input {
        if !b.is_ascii() {
            return Err(ParseError::new(
                line,
                col,
                format!("non-ASCII byte 0x{b:02x}"),
            ));
        }
        if b == b'\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    // all-ASCII input is valid UTF-8
    parse_profile(std::str::from_utf8(input).unwrap())
}

struct SigmaSlot {
    perm: Permutation,
}

/// Parses a `.prof` document.
pub fn parse_profile(text: &str) -> Result<ProfileDocument, ParseError> {
    enum Stage {
        Header,
        Sheets,
        Columns,
        Body,
    }
    enum Body {
        Unknown,
        Sigma(Vec<Option<SigmaSlot>>),
        Explicit {
            edges: Vec<EdgeSeg>,
            arcs: Vec<ArcSeg>,
        },
    }

    let mut stage = Stage::Header;
    let mut sheet_set: Option<SheetSet> = None;
    let mut columns: usize = 0;
    let mut body = Body::Unknown;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let content = content.strip_suffix('\r').unwrap_or(content);
        let tokens = tokenize(content);
        if tokens.is_empty() {
            continue;
        }
        if let Some(&(c, t)) = tokens.iter().find(|(_, t)| !t.is_ascii()) {
            return Err(ParseError::new(lineno, c, format!("non-ASCII token '{t}'")));
        }

        match stage {
            Stage::Header => {
                if tokens.len() != 2 || tokens[0].1 != "PROFILE" {
                    return Err(ParseError::new(
                        lineno,
                        tokens[0].0,
                        "expected header 'PROFILE v1'",
                    ));
                }
                if tokens[1].1 != "v1" {
                    return Err(ParseError::new(
                        lineno,
                        tokens[1].0,
                        format!("unsupported format version '{}'", tokens[1].1),
                    ));
                }
                stage = Stage::Sheets;
            }
            Stage::Sheets => {
                if tokens[0].1 != "SHEETS" {
                    return Err(ParseError::new(lineno, tokens[0].0, "expected 'SHEETS'"));
                }
                if tokens.len() != 3 {
                    return Err(ParseError::new(
                        lineno,
                        tokens[0].0,
                        "expected 'SHEETS FINITE <n>' or 'SHEETS PERIODIC <p>'",
                    ));
                }
                let n = parse_count(lineno, tokens[2].0, tokens[2].1, "sheet count")?;
                sheet_set = Some(match tokens[1].1 {
                    "FINITE" => SheetSet::Finite(n),
                    "PERIODIC" => SheetSet::PeriodicIntegers(n),
                    other => {
                        return Err(ParseError::new(
                            lineno,
                            tokens[1].0,
                            format!("expected FINITE or PERIODIC, found '{other}'"),
                        ))
                    }
                });
                stage = Stage::Columns;
            }
            Stage::Columns => {
                if tokens[0].1 != "COLUMNS" || tokens.len() != 2 {
                    return Err(ParseError::new(
                        lineno,
                        tokens[0].0,
                        "expected 'COLUMNS <q>'",
                    ));
                }
                columns = parse_count(lineno, tokens[1].0, tokens[1].1, "column count")?;
                stage = Stage::Body;
            }
            Stage::Body => {
                let sheets = sheet_set.unwrap();
                match tokens[0].1 {
                    "SIGMA" => {
                        let slots = match &mut body {
                            Body::Unknown => {
                                body = Body::Sigma((0..columns).map(|_| None).collect());
                                match &mut body {
                                    Body::Sigma(s) => s,
                                    _ => unreachable!(),
                                }
                            }
                            Body::Sigma(s) => s,
                            Body::Explicit { .. } => {
                                return Err(ParseError::new(
                                    lineno,
                                    tokens[0].0,
                                    "SIGMA line in an explicit document",
                                ))
                            }
                        };
                        parse_sigma_line(lineno, content, &tokens, sheets, columns, slots)?;
                    }
                    "EDGE" | "ARC" => {
                        let n = match sheets {
                            SheetSet::Finite(n) => n,
                            SheetSet::PeriodicIntegers(_) => {
                                return Err(ParseError::new(
                                    lineno,
                                    tokens[0].0,
                                    "explicit items are only allowed for finite sheet sets",
                                ))
                            }
                        };
                        let (edges, arcs) = match &mut body {
                            Body::Unknown => {
                                body = Body::Explicit {
                                    edges: Vec::new(),
                                    arcs: Vec::new(),
                                };
                                match &mut body {
                                    Body::Explicit { edges, arcs } => (edges, arcs),
                                    _ => unreachable!(),
                                }
                            }
                            Body::Explicit { edges, arcs } => (edges, arcs),
                            Body::Sigma(_) => {
                                return Err(ParseError::new(
                                    lineno,
                                    tokens[0].0,
                                    "explicit item in a SIGMA document",
                                ))
                            }
                        };
                        parse_item_line(lineno, &tokens, n, columns, edges, arcs)?;
                    }
                    other => {
                        return Err(ParseError::new(
                            lineno,
                            tokens[0].0,
                            format!("expected SIGMA, EDGE or ARC, found '{other}'"),
                        ))
                    }
                }
            }
        }
    }

    match stage {
        Stage::Header => Err(ParseError::new(
            1,
            1,
            "empty document, expected 'PROFILE v1'",
        )),
        Stage::Sheets => Err(ParseError::new(last_line + 1, 1, "missing SHEETS line")),
        Stage::Columns => Err(ParseError::new(last_line + 1, 1, "missing COLUMNS line")),
        Stage::Body => {
            let sheet_set = sheet_set.unwrap();
            let body = match body {
                Body::Sigma(slots) => {
                    if let Some(k) = slots.iter().position(|s| s.is_none()) {
                        return Err(ParseError::new(
                            last_line + 1,
                            1,
                            format!("missing SIGMA line for column {}", k + 1),
                        ));
                    }
                    let sigmas = slots.into_iter().map(|s| s.unwrap().perm).collect();
                    DocumentBody::Sigma(Constellation::new(sigmas).expect("checked per line"))
                }
                Body::Explicit { edges, arcs } => DocumentBody::Explicit { edges, arcs },
                Body::Unknown => match sheet_set {
                    // an empty item block is a representable (empty) graph
                    SheetSet::Finite(_) => DocumentBody::Explicit {
                        edges: Vec::new(),
                        arcs: Vec::new(),
                    },
                    SheetSet::PeriodicIntegers(_) => {
                        return Err(ParseError::new(
                            last_line + 1,
                            1,
                            "periodic documents need a SIGMA line per column",
                        ))
                    }
                },
            };
            Ok(ProfileDocument {
                sheet_set,
                columns,
                body,
            })
        }
    }
}

fn parse_sigma_line(
    lineno: usize,
    content: &str,
    tokens: &[(usize, &str)],
    sheets: SheetSet,
    columns: usize,
    slots: &mut [Option<SigmaSlot>],
) -> Result<(), ParseError> {
    if tokens.len() < 3 || tokens[2].1 != "=" {
        return Err(ParseError::new(
            lineno,
            tokens[0].0,
            "expected 'SIGMA <i> = <cycles or MAP>'",
        ));
    }
    let index = parse_count(lineno, tokens[1].0, tokens[1].1, "column index")?;
    if index > columns {
        return Err(ParseError::new(
            lineno,
            tokens[1].0,
            format!("column index {index} out of range 1..{columns}"),
        ));
    }
    if slots[index - 1].is_some() {
        return Err(ParseError::new(
            lineno,
            tokens[1].0,
            format!("duplicate SIGMA line for column {index}"),
        ));
    }
    // rhs starts after the '=' token
    let eq_col = tokens[2].0;
    let rhs_offset = eq_col; // byte index just past '='
    let rhs = &content[rhs_offset..];

    let perm = match sheets {
        SheetSet::Finite(n) => parse_cycles(lineno, rhs_offset, rhs, n)?,
        SheetSet::PeriodicIntegers(p) => parse_map(lineno, &tokens[3..], rhs_offset, p)?,
    };
    slots[index - 1] = Some(SigmaSlot { perm });
    Ok(())
}

fn parse_cycles(
    lineno: usize,
    base: usize,
    rhs: &str,
    n: usize,
) -> Result<Permutation, ParseError> {
    let bytes = rhs.as_bytes();
    let mut i = 0;
    let col = |i: usize| base + i + 1;
    let mut cycles: Vec<Vec<Sheet>> = Vec::new();
    let mut used = vec![false; n];
    let mut any = false;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if b != b'(' {
            return Err(ParseError::new(
                lineno,
                col(i),
                format!("expected '(' in cycle notation, found '{}'", b as char),
            ));
        }
        any = true;
        i += 1;
        let mut cycle: Vec<Sheet> = Vec::new();
        loop {
            while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            if i >= bytes.len() {
                return Err(ParseError::new(lineno, col(i), "unclosed cycle"));
            }
            if bytes[i] == b')' {
                i += 1;
                break;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i == start {
                return Err(ParseError::new(
                    lineno,
                    col(start),
                    format!("expected a sheet label, found '{}'", bytes[start] as char),
                ));
            }
            let label = parse_int(lineno, col(start), &rhs[start..i])?;
            if label < 1 || label > n as Sheet {
                return Err(ParseError::new(
                    lineno,
                    col(start),
                    format!("label {label} out of range 1..{n}"),
                ));
            }
            if used[(label - 1) as usize] {
                return Err(ParseError::new(
                    lineno,
                    col(start),
                    format!("label {label} repeated"),
                ));
            }
            used[(label - 1) as usize] = true;
            cycle.push(label);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    if !any {
        return Err(ParseError::new(
            lineno,
            col(bytes.len()),
            "missing cycle notation (identity is written '()')",
        ));
    }
    Permutation::finite_from_cycles(n, &cycles)
        .map_err(|e| ParseError::new(lineno, base + 1, e.to_string()))
}

fn parse_map(
    lineno: usize,
    tokens: &[(usize, &str)],
    base: usize,
    p: usize,
) -> Result<Permutation, ParseError> {
    if tokens.is_empty() || tokens[0].1 != "MAP" {
        return Err(ParseError::new(
            lineno,
            base + 1,
            format!(
                "periodic permutations use 'MAP 0->a0 ... {}->a{}'",
                p - 1,
                p - 1
            ),
        ));
    }
    let mut image0: Vec<Option<Sheet>> = vec![None; p];
    for &(c, entry) in &tokens[1..] {
        let Some((left, right)) = entry.split_once("->") else {
            return Err(ParseError::new(
                lineno,
                c,
                format!("expected '<residue>-><image>', found '{entry}'"),
            ));
        };
        let r = parse_int(lineno, c, left)?;
        if r < 0 || r >= p as Sheet {
            return Err(ParseError::new(
                lineno,
                c,
                format!("residue {r} out of range 0..{}", p - 1),
            ));
        }
        let v = parse_int(lineno, c + left.len() + 2, right)?;
        if image0[r as usize].is_some() {
            return Err(ParseError::new(
                lineno,
                c,
                format!("residue {r} mapped twice"),
            ));
        }
        image0[r as usize] = Some(v);
    }
    if let Some(r) = image0.iter().position(|x| x.is_none()) {
        return Err(ParseError::new(
            lineno,
            base + 1,
            format!("residue {r} has no image"),
        ));
    }
    Permutation::periodic_from_images(p, image0.into_iter().map(|x| x.unwrap()).collect())
        .map_err(|e| ParseError::new(lineno, base + 1, e.to_string()))
}

fn parse_item_line(
    lineno: usize,
    tokens: &[(usize, &str)],
    n: usize,
    columns: usize,
    edges: &mut Vec<EdgeSeg>,
    arcs: &mut Vec<ArcSeg>,
) -> Result<(), ParseError> {
    let check_line = |c: usize, v: i64| -> Result<Sheet, ParseError> {
        if v < 1 || v > n as Sheet {
            Err(ParseError::new(
                lineno,
                c,
                format!("line {v} out of range 1..{n}"),
            ))
        } else {
            Ok(v)
        }
    };
    let check_column = |c: usize, v: i64| -> Result<usize, ParseError> {
        if v < 1 || v > columns as i64 {
            Err(ParseError::new(
                lineno,
                c,
                format!("column {v} out of range 1..{columns}"),
            ))
        } else {
            Ok(v as usize)
        }
    };
    match tokens[0].1 {
        "EDGE" => {
            if tokens.len() != 3 {
                return Err(ParseError::new(
                    lineno,
                    tokens[0].0,
                    "expected 'EDGE <line> <column>'",
                ));
            }
            let line = check_line(tokens[1].0, parse_int(lineno, tokens[1].0, tokens[1].1)?)?;
            let from_column =
                check_column(tokens[2].0, parse_int(lineno, tokens[2].0, tokens[2].1)?)?;
            edges.push(EdgeSeg { line, from_column });
        }
        "ARC" => {
            if tokens.len() != 5 || tokens[3].1 != ">" {
                return Err(ParseError::new(
                    lineno,
                    tokens[0].0,
                    "expected 'ARC <column> <from_line> > <to_line>'",
                ));
            }
            let column = check_column(tokens[1].0, parse_int(lineno, tokens[1].0, tokens[1].1)?)?;
            let from_line = check_line(tokens[2].0, parse_int(lineno, tokens[2].0, tokens[2].1)?)?;
            let to_line = check_line(tokens[4].0, parse_int(lineno, tokens[4].0, tokens[4].1)?)?;
            arcs.push(ArcSeg {
                column,
                from_line,
                to_line,
            });
        }
        _ => unreachable!(),
    }
    Ok(())
}

#[derive(Debug, Clone, Error)]
pub enum SerializeError {
    #[error("document does not denote a valid profile: {0}")]
    InvalidProfile(#[from] ProfileError),
    #[error("periodic documents have no explicit form")]
    PeriodicExplicit,
}

/// Canonical cycle notation of a finite permutation: cycles sorted by and
/// started at their smallest element, fixed points omitted, identity `()`.
pub fn cycles_string(p: &Permutation) -> String {
    let mut out = String::new();
    for orbit in p.cycles() {
        if let Orbit::Cycle { sheets } = orbit {
            if sheets.len() >= 2 {
                let labels: Vec<String> = sheets.iter().map(|s| s.to_string()).collect();
                write!(out, "({})", labels.join(" ")).unwrap();
            }
        }
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn map_string(p: &Permutation, period: usize) -> String {
    let mut out = String::from("MAP");
    for r in 0..period as Sheet {
        write!(out, " {r}->{}", p.apply(r)).unwrap();
    }
    out
}

/// Canonical serialization: the SIGMA form, which is defined for both sheet
/// kinds. Explicit documents are converted (and therefore validated) first.
pub fn serialize_profile(doc: &ProfileDocument) -> Result<String, SerializeError> {
    let cons = match &doc.body {
        DocumentBody::Sigma(c) => c.clone(),
        DocumentBody::Explicit { .. } => doc.to_profile()?.to_constellation(),
    };
    let mut out = String::from("PROFILE v1\n");
    writeln!(out, "SHEETS {}", cons.sheet_set()).unwrap();
    writeln!(out, "COLUMNS {}", cons.columns()).unwrap();
    for (k, sigma) in cons.sigmas().iter().enumerate() {
        let rhs = match cons.sheet_set() {
            SheetSet::Finite(_) => cycles_string(sigma),
            SheetSet::PeriodicIntegers(p) => map_string(sigma, p),
        };
        writeln!(out, "SIGMA {} = {}", k + 1, rhs).unwrap();
    }
    Ok(out)
}

/// Canonical explicit serialization of a finite document: EDGE lines sorted
/// by (line, column), then ARC lines sorted by (column, from line).
pub fn serialize_explicit(doc: &ProfileDocument) -> Result<String, SerializeError> {
    let (n, mut edges, mut arcs) = match &doc.body {
        DocumentBody::Explicit { edges, arcs } => {
            let n = match doc.sheet_set {
                SheetSet::Finite(n) => n,
                SheetSet::PeriodicIntegers(_) => return Err(SerializeError::PeriodicExplicit),
            };
            (n, edges.clone(), arcs.clone())
        }
        DocumentBody::Sigma(c) => match c.sheet_set() {
            SheetSet::Finite(n) => {
                let p = ProfileGraph::from_constellation(c.clone());
                (n, p.edge_segs(), p.arc_segs())
            }
            SheetSet::PeriodicIntegers(_) => return Err(SerializeError::PeriodicExplicit),
        },
    };
    edges.sort_by_key(|e| (e.line, e.from_column));
    arcs.sort_by_key(|a| (a.column, a.from_line, a.to_line));
    let mut out = String::from("PROFILE v1\n");
    writeln!(out, "SHEETS FINITE {n}").unwrap();
    writeln!(out, "COLUMNS {}", doc.columns).unwrap();
    for e in &edges {
        writeln!(out, "EDGE {} {}", e.line, e.from_column).unwrap();
    }
    for a in &arcs {
        writeln!(out, "ARC {} {} > {}", a.column, a.from_line, a.to_line).unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TORUS: &str = "PROFILE v1\nSHEETS FINITE 2\nCOLUMNS 4\nSIGMA 1 = (1 2)\nSIGMA 2 = (1 2)\nSIGMA 3 = (1 2)\nSIGMA 4 = (1 2)\n";

    const ARCSIN: &str = "PROFILE v1\nSHEETS PERIODIC 2\nCOLUMNS 3\nSIGMA 1 = MAP 0->1 1->0\nSIGMA 2 = MAP 0->-1 1->2\nSIGMA 3 = MAP 0->-2 1->3\n";

    #[test]
    fn torus_round_trip_is_byte_exact() {
        let doc = parse_profile(TORUS).unwrap();
        assert_eq!(serialize_profile(&doc).unwrap(), TORUS);
        let p = doc.to_profile().unwrap();
        assert_eq!(p.columns(), 4);
        assert_eq!(p.sheet_count(), 2);
    }

    #[test]
    fn arcsin_parses_and_round_trips() {
        let doc = parse_profile(ARCSIN).unwrap();
        assert_eq!(serialize_profile(&doc).unwrap(), ARCSIN);
        match &doc.body {
            DocumentBody::Sigma(c) => {
                assert!(c.monodromy_product().is_identity());
            }
            _ => panic!("sigma body expected"),
        }
    }

    #[test]
    fn messy_input_canonicalizes() {
        let messy = "PROFILE v1\n# a torus\nSHEETS  FINITE   2\r\nCOLUMNS 4\nSIGMA 2 = (2 1)  # swapped\nSIGMA 1 = ( 1   2 )\nSIGMA 4 = (1 2)\nSIGMA 3 = (1 2)\n";
        let doc = parse_profile(messy).unwrap();
        assert_eq!(serialize_profile(&doc).unwrap(), TORUS);
    }

    #[test]
    fn repeated_label_is_positioned() {
        let text = "PROFILE v1\nSHEETS FINITE 3\nCOLUMNS 1\nSIGMA 1 = (1 2)(2 3)\n";
        let err = parse_profile(text).unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.message.contains("label 2 repeated"), "{err}");
    }

    #[test]
    fn header_errors_are_positioned() {
        let err = parse_profile("PROFILE v2\n").unwrap_err();
        assert_eq!((err.line, err.col), (1, 9));
        let err = parse_profile("NOPE\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_profile("").unwrap_err();
        assert_eq!((err.line, err.col), (1, 1));
    }

    #[test]
    fn missing_sigma_column_is_reported() {
        let text = "PROFILE v1\nSHEETS FINITE 2\nCOLUMNS 2\nSIGMA 1 = (1 2)\n";
        let err = parse_profile(text).unwrap_err();
        assert!(err.message.contains("missing SIGMA line for column 2"));
    }

    #[test]
    fn duplicate_sigma_is_rejected() {
        let text = "PROFILE v1\nSHEETS FINITE 2\nCOLUMNS 2\nSIGMA 1 = (1 2)\nSIGMA 1 = ()\n";
        let err = parse_profile(text).unwrap_err();
        assert_eq!(err.line, 5);
        assert!(err.message.contains("duplicate SIGMA"));
    }

    #[test]
    fn label_out_of_range() {
        let text = "PROFILE v1\nSHEETS FINITE 2\nCOLUMNS 1\nSIGMA 1 = (1 3)\n";
        let err = parse_profile(text).unwrap_err();
        assert!(err.message.contains("out of range"));
    }

    #[test]
    fn negative_labels_only_in_map_images() {
        let text = "PROFILE v1\nSHEETS FINITE 2\nCOLUMNS 1\nSIGMA 1 = (-1 2)\n";
        assert!(parse_profile(text).is_err());
        let text = "PROFILE v1\nSHEETS PERIODIC 1\nCOLUMNS 1\nSIGMA 1 = MAP 0->-5\n";
        assert!(parse_profile(text).is_ok());
    }

    #[test]
    fn map_residue_checks() {
        let text = "PROFILE v1\nSHEETS PERIODIC 2\nCOLUMNS 1\nSIGMA 1 = MAP 0->0 1->2\n";
        let err = parse_profile(text).unwrap_err();
        assert!(err.message.contains("residue"), "{err}");
        let text = "PROFILE v1\nSHEETS PERIODIC 2\nCOLUMNS 1\nSIGMA 1 = MAP 0->0\n";
        let err = parse_profile(text).unwrap_err();
        assert!(err.message.contains("residue 1 has no image"));
    }

    #[test]
    fn explicit_body_round_trip() {
        let doc = parse_profile(TORUS).unwrap();
        let explicit = serialize_explicit(&doc).unwrap();
        let doc2 = parse_profile(&explicit).unwrap();
        assert_eq!(serialize_explicit(&doc2).unwrap(), explicit);
        // converting back to sigma form recovers the torus
        assert_eq!(serialize_profile(&doc2).unwrap(), TORUS);
    }

    #[test]
    fn explicit_items_rejected_for_periodic() {
        let text = "PROFILE v1\nSHEETS PERIODIC 2\nCOLUMNS 1\nEDGE 1 1\n";
        let err = parse_profile(text).unwrap_err();
        assert!(err.message.contains("finite"));
    }

    #[test]
    fn mixed_bodies_rejected() {
        let text = "PROFILE v1\nSHEETS FINITE 1\nCOLUMNS 1\nSIGMA 1 = ()\nEDGE 1 1\n";
        let err = parse_profile(text).unwrap_err();
        assert_eq!(err.line, 5);
    }

    #[test]
    fn non_ascii_bytes_are_positioned() {
        let err = parse_profile_bytes(b"PROFILE v1\nSHEETS FINITE 1\xc3\xa9\n").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn periodic_validation_checks_connectivity() {
        let doc = parse_profile(ARCSIN).unwrap();
        assert!(doc.validate().ok);
        // identity maps: every integer is its own orbit
        let text = "PROFILE v1\nSHEETS PERIODIC 2\nCOLUMNS 1\nSIGMA 1 = MAP 0->0 1->1\n";
        let report = parse_profile(text).unwrap().validate();
        assert!(!report.ok);
        assert_eq!(
            report.violations[0].code,
            crate::validate::ViolationCode::Disconnected
        );
    }

    #[test]
    fn multi_cycle_columns_round_trip() {
        let text = "PROFILE v1\nSHEETS FINITE 5\nCOLUMNS 2\nSIGMA 1 = (1 2)(3 5 4)\nSIGMA 2 = (1 2)(3 4 5)\n";
        let doc = parse_profile(text).unwrap();
        assert_eq!(serialize_profile(&doc).unwrap(), text);
        match &doc.body {
            DocumentBody::Sigma(c) => {
                assert_eq!(c.sigma(1).apply(3), 5);
                assert_eq!(c.sigma(1).apply(4), 3);
                assert!(c.monodromy_product().is_identity());
            }
            _ => panic!("sigma body expected"),
        }
    }

    #[test]
    fn identity_document() {
        let text =
            "PROFILE v1\nSHEETS FINITE 1\nCOLUMNS 3\nSIGMA 1 = ()\nSIGMA 2 = ()\nSIGMA 3 = ()\n";
        let doc = parse_profile(text).unwrap();
        assert_eq!(serialize_profile(&doc).unwrap(), text);
    }

    #[test]
    fn invalid_explicit_document_fails_serialization() {
        // a single edge is not a profile-type graph
        let text = "PROFILE v1\nSHEETS FINITE 1\nCOLUMNS 2\nEDGE 1 1\n";
        let doc = parse_profile(text).unwrap();
        assert!(serialize_profile(&doc).is_err());
        // its explicit form still serializes
        assert!(serialize_explicit(&doc).is_ok());
    }
}
