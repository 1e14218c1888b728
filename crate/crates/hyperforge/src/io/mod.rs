//! Serialisation helpers: DOT output for diagrams and loading of the JSON
//! documents (geometries and presentations) the command-line tool accepts.
//!
//! DOT conventions: one node per type; an edge for every pair of types
//! whose residues are not digons. An edge carries its gonality as the
//! `gonality` attribute. Triangles draw as plain edges without a label;
//! squares draw as a double line (`color="black:black"`, `penwidth=2`) with
//! an explicit `label="4"`; every other label is written out. Output is a
//! pure function of the input, so equal diagrams give identical text.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::Presentation;
use crate::incidence::{BuekenhoutDiagram, DiagramEntry, IncidenceGeometry, RankTwoLabel};

fn fmt_opt(v: Option<u32>) -> String {
    v.map_or_else(|| "inf".to_string(), |x| x.to_string())
}

fn fmt_label(l: &RankTwoLabel) -> String {
    match l.polygon_order() {
        Some(g) => g.to_string(),
        None => format!("({},{},{})", fmt_opt(l.gonality), fmt_opt(l.point_diameter), fmt_opt(l.line_diameter)),
    }
}

fn edge_attrs(gonality: Option<u32>, label: &str) -> String {
    let g = fmt_opt(gonality);
    match label {
        "3" => format!("gonality={g}"),
        "4" => format!("gonality={g}, label=\"4\", color=\"black:black\", penwidth=2"),
        other => format!("gonality={g}, label=\"{other}\""),
    }
}

fn dot(rank: usize, edges: &[(usize, usize, String)]) -> String {
    let mut out = String::from("graph diagram {\n  node [shape=circle];\n");
    for t in 0..rank {
        let _ = writeln!(out, "  {t} [label=\"{t}\"];");
    }
    for (i, j, attrs) in edges {
        let _ = writeln!(out, "  {i} -- {j} [{attrs}];");
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of a Buekenhout diagram. Non-uniform entries list every
/// label with its multiplicity, separated by `|`.
pub fn diagram_to_dot(d: &BuekenhoutDiagram) -> String {
    let edges: Vec<(usize, usize, String)> = d
        .edges()
        .into_iter()
        .map(|((i, j), e)| {
            let attrs = match &e {
                DiagramEntry::Uniform(l) => edge_attrs(l.gonality, &fmt_label(l)),
                DiagramEntry::NonUniform(ls) => {
                    let text: Vec<String> = ls.iter().map(|(l, c)| format!("{}x{c}", fmt_label(l))).collect();
                    format!("gonality=mixed, label=\"{}\"", text.join("|"))
                }
                DiagramEntry::Absent => "gonality=none, label=\"absent\"".to_string(),
            };
            (i, j, attrs)
        })
        .collect();
    dot(d.rank, &edges)
}

/// DOT rendering of a Coxeter matrix; entries equal to 2 are not drawn.
pub fn matrix_to_dot(m: &[Vec<u32>]) -> String {
    let mut edges = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, &v) in row.iter().enumerate().skip(i + 1) {
            if v != 2 {
                edges.push((i, j, edge_attrs(Some(v), &v.to_string())));
            }
        }
    }
    dot(m.len(), &edges)
}

/// Reads the edges back from DOT text produced by this module, as
/// `(i, j, gonality)` with `None` for labels that are not a single number.
pub fn dot_edges(text: &str) -> Vec<(usize, usize, Option<u32>)> {
    text.lines()
        .filter_map(|line| {
            let (lhs, rest) = line.trim().split_once(" -- ")?;
            let (rhs, attrs) = rest.split_once(' ')?;
            let g = attrs.split("gonality=").nth(1)?.split([',', ']']).next()?.trim().parse().ok();
            Some((lhs.parse().ok()?, rhs.parse().ok()?, g))
        })
        .collect()
}

/// A JSON document accepted by the tools.
#[derive(Clone, Debug)]
pub enum Document {
    /// An incidence geometry (`{"elements":…,"incidences":…,"rank":…}`).
    Geometry(IncidenceGeometry),
    /// A presentation (`{"ngens":…,"relators":…}`).
    Presentation(Presentation),
}

/// Parses a document, deciding its kind from its keys.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("ngens").is_some() {
        Ok(Document::Presentation(Presentation::from_json(text)?))
    } else if value.get("elements").is_some() {
        Ok(Document::Geometry(IncidenceGeometry::from_json(text)?))
    } else {
        Err(Error::InvalidGeometry("document is neither a geometry nor a presentation".into()))
    }
}

/// Reads and parses a document from a file.
pub fn read_document(path: &Path) -> Result<Document> {
    parse_document(&std::fs::read_to_string(path)?)
}

/// Reads a geometry from a file.
pub fn read_geometry(path: &Path) -> Result<IncidenceGeometry> {
    IncidenceGeometry::from_json(&std::fs::read_to_string(path)?)
}

/// Writes text to a file, or to standard output when `path` is `None`.
pub fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
