//! Diagram emission.
//!
//! Lines run horizontally in label order, columns left to right, arcs are
//! vertical arrows and loops small circles beside their vertex. The segment
//! of each line through infinity is drawn as a dashed stub pair at both
//! margins. Periodic profiles show three periods with ellipsis markers.
//! Output is deterministic: the same profile yields identical bytes.

use std::fmt::Write as _;

use crate::covering::ExactCovering;
use crate::graph::ProfileGraph;
use crate::perm::{Permutation, Sheet, SheetSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramStyle {
    Dot,
    Svg,
}

impl std::str::FromStr for DiagramStyle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(DiagramStyle::Dot),
            "svg" => Ok(DiagramStyle::Svg),
            other => Err(format!("unknown style '{other}', expected dot or svg")),
        }
    }
}

const PALETTE: [&str; 10] = [
    "red", "blue", "green", "orange", "purple", "brown", "magenta", "teal", "olive", "navy",
];

/// Assigns every item the starting line of the sweep covering it, so each
/// covering path gets one color.
struct PathColors {
    inverse_prefixes: Vec<Permutation>,
    modulus: usize,
}

impl PathColors {
    fn new(profile: &ProfileGraph) -> Self {
        let cons = profile.constellation();
        let mut prefix = Permutation::identity(cons.sheet_set());
        let mut inverse_prefixes = vec![prefix.inverse()];
        for k in 1..=cons.columns() {
            prefix = prefix.compose(cons.sigma(k)).expect("same sheet set");
            inverse_prefixes.push(prefix.inverse());
        }
        let modulus = match profile.sheet_set() {
            SheetSet::Finite(n) => n,
            SheetSet::PeriodicIntegers(p) => p,
        };
        PathColors {
            inverse_prefixes,
            modulus,
        }
    }

    /// Color of the arc leaving `(column, from_line)`.
    fn arc(&self, column: usize, from_line: Sheet) -> &'static str {
        self.color(self.inverse_prefixes[column - 1].apply(from_line))
    }

    /// Color of the edge of `line` leaving `column`.
    fn edge(&self, column: usize, line: Sheet) -> &'static str {
        self.color(self.inverse_prefixes[column].apply(line))
    }

    fn color(&self, start: Sheet) -> &'static str {
        let idx = start.rem_euclid(self.modulus as Sheet) as usize;
        PALETTE[idx % PALETTE.len()]
    }
}

/// Lines shown in the diagram: all of them for finite sheet sets, three
/// periods for periodic ones.
fn display_lines(profile: &ProfileGraph) -> (Vec<Sheet>, bool) {
    match profile.sheet_set() {
        SheetSet::Finite(n) => ((1..=n as Sheet).collect(), false),
        SheetSet::PeriodicIntegers(p) => ((0..(3 * p) as Sheet).collect(), true),
    }
}

pub fn render_diagram(
    profile: &ProfileGraph,
    style: DiagramStyle,
    overlay: Option<&ExactCovering>,
) -> String {
    match style {
        DiagramStyle::Dot => render_dot(profile, overlay.is_some()),
        DiagramStyle::Svg => render_svg(profile, overlay.is_some()),
    }
}

fn render_dot(profile: &ProfileGraph, overlay: bool) -> String {
    let q = profile.columns();
    let (lines, periodic) = display_lines(profile);
    let colors = PathColors::new(profile);

    let mut out = String::from("digraph profile {\n");
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  node [shape=point, width=0.1];").unwrap();

    for (row, &line) in lines.iter().enumerate() {
        for column in 1..=q {
            writeln!(
                out,
                "  \"v{column}_{line}\" [pos=\"{},{}!\"];",
                column * 100,
                row as i64 * -60
            )
            .unwrap();
        }
    }
    if periodic {
        writeln!(out, "  \"ellipsis_top\" [shape=plaintext, label=\"...\"];").unwrap();
        writeln!(
            out,
            "  \"ellipsis_bottom\" [shape=plaintext, label=\"...\"];"
        )
        .unwrap();
    }

    // interior edges
    for &line in &lines {
        for column in 1..q {
            let attr = if overlay {
                format!(", color={}", colors.edge(column, line))
            } else {
                String::new()
            };
            writeln!(
                out,
                "  \"v{column}_{line}\" -> \"v{}_{line}\" [dir=none{attr}];",
                column + 1
            )
            .unwrap();
        }
        // the segment through infinity
        let attr = if overlay {
            format!(", color={}", colors.edge(q, line))
        } else {
            String::new()
        };
        writeln!(
            out,
            "  \"v{q}_{line}\" -> \"v1_{line}\" [dir=none, style=dashed, constraint=false{attr}];"
        )
        .unwrap();
    }

    // arcs
    for column in 1..=q {
        let sigma = profile.constellation().sigma(column);
        for &line in &lines {
            let to = sigma.apply(line);
            let attr = if overlay {
                format!(" [color={}]", colors.arc(column, line))
            } else {
                String::new()
            };
            if lines.contains(&to) {
                writeln!(out, "  \"v{column}_{line}\" -> \"v{column}_{to}\"{attr};").unwrap();
            } else {
                // target outside the displayed window
                let exit = if to < lines[0] {
                    "ellipsis_top"
                } else {
                    "ellipsis_bottom"
                };
                writeln!(out, "  \"v{column}_{line}\" -> \"{exit}\" [style=dotted];").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

fn render_svg(profile: &ProfileGraph, overlay: bool) -> String {
    const DX: i64 = 80;
    const DY: i64 = 50;
    const MX: i64 = 60;
    const MY: i64 = 40;

    let q = profile.columns();
    let (lines, periodic) = display_lines(profile);
    let colors = PathColors::new(profile);
    let rows = lines.len() as i64;
    let width = 2 * MX + (q as i64 - 1) * DX;
    let height = 2 * MY + (rows - 1) * DY;
    let x = |column: usize| MX + (column as i64 - 1) * DX;
    let row_of = |line: Sheet| lines.iter().position(|&l| l == line).unwrap() as i64;
    let y = |line: Sheet| MY + row_of(line) * DY;

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    )
    .unwrap();
    out.push_str("  <defs>\n    <marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" orient=\"auto\">\n      <path d=\"M0,0 L6,3 L0,6 z\"/>\n    </marker>\n  </defs>\n");

    // labels
    for &line in &lines {
        writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">{line}</text>",
            MX - 36,
            y(line) + 4
        )
        .unwrap();
    }
    for column in 1..=q {
        writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">a{column}</text>",
            x(column),
            MY - 20
        )
        .unwrap();
    }
    if periodic {
        writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">. . .</text>",
            width / 2,
            MY - 28
        )
        .unwrap();
        writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">. . .</text>",
            width / 2,
            height - 6
        )
        .unwrap();
    }

    // interior edges
    for &line in &lines {
        for column in 1..q {
            let stroke = if overlay {
                colors.edge(column, line)
            } else {
                "black"
            };
            writeln!(
                out,
                "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\"/>",
                x(column),
                y(line),
                x(column + 1),
                y(line)
            )
            .unwrap();
        }
        // infinity stubs
        let stroke = if overlay {
            colors.edge(q, line)
        } else {
            "black"
        };
        writeln!(
            out,
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\" stroke-dasharray=\"4 3\"/>",
            x(q),
            y(line),
            x(q) + 36,
            y(line)
        )
        .unwrap();
        writeln!(
            out,
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\" stroke-dasharray=\"4 3\"/>",
            x(1) - 36,
            y(line),
            x(1),
            y(line)
        )
        .unwrap();
    }

    // arcs and loops
    for column in 1..=q {
        let sigma = profile.constellation().sigma(column);
        for &line in &lines {
            let to = sigma.apply(line);
            let stroke = if overlay {
                colors.arc(column, line)
            } else {
                "black"
            };
            if to == line {
                writeln!(
                    out,
                    "  <circle cx=\"{}\" cy=\"{}\" r=\"8\" fill=\"none\" stroke=\"{stroke}\"/>",
                    x(column),
                    y(line) - 12
                )
                .unwrap();
            } else if lines.contains(&to) {
                let off = if to > line { -4 } else { 4 };
                writeln!(
                    out,
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\" marker-end=\"url(#arrow)\"/>",
                    x(column) + off,
                    y(line),
                    x(column) + off,
                    y(to)
                )
                .unwrap();
            } else {
                // leaves the displayed window
                let (y1, y2) = if to > line {
                    (y(line), height - 10)
                } else {
                    (y(line), 10)
                };
                writeln!(
                    out,
                    "  <line x1=\"{}\" y1=\"{y1}\" x2=\"{}\" y2=\"{y2}\" stroke=\"{stroke}\" stroke-dasharray=\"2 2\" marker-end=\"url(#arrow)\"/>",
                    x(column),
                    x(column)
                )
                .unwrap();
            }
        }
    }

    // vertices on top
    for &line in &lines {
        for column in 1..=q {
            writeln!(
                out,
                "  <circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"black\"/>",
                x(column),
                y(line)
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::find_exact_covering;
    use crate::perm::{Constellation, Permutation};

    fn torus() -> ProfileGraph {
        let t = Permutation::finite_from_cycles(2, &[vec![1, 2]]).unwrap();
        ProfileGraph::from_constellation(
            Constellation::new(vec![t.clone(), t.clone(), t.clone(), t]).unwrap(),
        )
    }

    fn arcsin() -> ProfileGraph {
        ProfileGraph::from_constellation(
            Constellation::new(vec![
                Permutation::periodic_from_images(2, vec![1, 0]).unwrap(),
                Permutation::periodic_from_images(2, vec![-1, 2]).unwrap(),
                Permutation::periodic_from_images(2, vec![-2, 3]).unwrap(),
            ])
            .unwrap(),
        )
    }

    #[test]
    fn dot_output_is_deterministic() {
        let p = torus();
        let a = render_diagram(&p, DiagramStyle::Dot, None);
        let b = render_diagram(&p, DiagramStyle::Dot, None);
        assert_eq!(a, b);
    }

    #[test]
    fn torus_dot_structure() {
        let dot = render_diagram(&torus(), DiagramStyle::Dot, None);
        // 8 vertices, 8 arcs, 6 interior edges + 2 infinity edges
        assert_eq!(dot.matches("[pos=").count(), 8);
        assert_eq!(dot.matches("dir=none").count(), 8);
        let arcs = dot
            .lines()
            .filter(|l| l.contains("->") && !l.contains("dir=none"))
            .count();
        assert_eq!(arcs, 8);
    }

    #[test]
    fn torus_svg_structure() {
        let svg = render_diagram(&torus(), DiagramStyle::Svg, None);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        // 8 vertex dots, no loops
        assert_eq!(svg.matches("r=\"3\"").count(), 8);
        assert_eq!(svg.matches("r=\"8\"").count(), 0);
        assert_eq!(svg.matches("marker-end").count(), 8);
    }

    #[test]
    fn overlay_colors_two_paths() {
        let p = torus();
        let covering = find_exact_covering(&p).covering().unwrap().clone();
        let svg = render_diagram(&p, DiagramStyle::Svg, Some(&covering));
        // two paths, two colors, each on 4 arcs + 4 edge segments
        assert!(svg.contains("stroke=\"red\""));
        assert!(svg.contains("stroke=\"blue\""));
        let reds = svg.matches("stroke=\"red\"").count();
        let blues = svg.matches("stroke=\"blue\"").count();
        assert_eq!(reds + blues, svg.matches("stroke=\"").count());
    }

    #[test]
    fn loops_render_as_circles() {
        let id = ProfileGraph::from_constellation(
            Constellation::identity(crate::perm::SheetSet::Finite(1), 3).unwrap(),
        );
        let svg = render_diagram(&id, DiagramStyle::Svg, None);
        assert_eq!(svg.matches("r=\"8\"").count(), 3);
    }

    #[test]
    fn periodic_renders_three_periods_with_ellipsis() {
        let svg = render_diagram(&arcsin(), DiagramStyle::Svg, None);
        // 6 lines (3 periods of 2) and ellipsis markers
        assert_eq!(svg.matches("r=\"3\"").count(), 6 * 3);
        assert_eq!(svg.matches(". . .").count(), 2);
        let dot = render_diagram(&arcsin(), DiagramStyle::Dot, None);
        assert!(dot.contains("ellipsis_top"));
    }
}
