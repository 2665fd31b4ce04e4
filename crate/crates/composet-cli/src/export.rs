//! Graph serialization: JSON documents that round-trip exactly, and
//! deterministic DOT and TikZ renderings.

use std::fmt::Write as _;

use composet::{Composition, GraphFlavor, RankedGraph};
use serde::{Deserialize, Serialize};

/// How multi-edges are rendered in DOT and TikZ.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeStyle {
    /// One line per witness: an edge of multiplicity k appears k times.
    Repeat,
    /// One line per edge, annotated with its multiplicity.
    Label,
    /// One line per edge, multiplicities dropped.
    Simple,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct GraphDoc {
    pub flavor: String,
    pub max_rank: u32,
    pub vertices: Vec<Vec<u32>>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct EdgeDoc {
    pub from: Vec<u32>,
    pub to: Vec<u32>,
    pub mult: u64,
}

fn parts(c: &Composition) -> Vec<u32> {
    c.parts().to_vec()
}

pub fn graph_to_doc(g: &RankedGraph) -> GraphDoc {
    GraphDoc {
        flavor: g.flavor().as_str().to_string(),
        max_rank: g.max_rank(),
        vertices: g.vertices().iter().map(parts).collect(),
        edges: g
            .edges()
            .map(|(from, to, mult)| EdgeDoc {
                from: parts(from),
                to: parts(to),
                mult,
            })
            .collect(),
    }
}

pub fn graph_to_json_string(g: &RankedGraph) -> String {
    let mut text = serde_json::to_string_pretty(&graph_to_doc(g)).expect("graph doc serializes");
    text.push('\n');
    text
}

/// Parse and validate a JSON graph document. The edge list must satisfy
/// the flavor's rank law and the vertex list must be exactly the canonical
/// enumeration for the stated rank bound.
pub fn graph_from_json_str(text: &str) -> Result<RankedGraph, String> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let flavor = match doc.flavor.as_str() {
        "graded" => GraphFlavor::Graded,
        "strong-filtered" => GraphFlavor::StrongFiltered,
        other => return Err(format!("unknown flavor {other:?}")),
    };
    let mut edges = Vec::with_capacity(doc.edges.len());
    for edge in &doc.edges {
        let from = Composition::try_new(edge.from.clone())
            .ok_or_else(|| format!("edge source {:?} has a zero part", edge.from))?;
        let to = Composition::try_new(edge.to.clone())
            .ok_or_else(|| format!("edge target {:?} has a zero part", edge.to))?;
        edges.push((from, to, edge.mult));
    }
    let graph = RankedGraph::from_parts(flavor, doc.max_rank, edges).map_err(|e| e.to_string())?;
    let canonical: Vec<Vec<u32>> = graph.vertices().iter().map(parts).collect();
    if doc.vertices != canonical {
        return Err(format!(
            "vertex list is not the canonical enumeration for rank {}",
            doc.max_rank
        ));
    }
    Ok(graph)
}

fn style_lines(
    g: &RankedGraph,
    style: EdgeStyle,
) -> impl Iterator<Item = (&Composition, &Composition, Option<u64>, u64)> {
    g.edges().map(move |(from, to, mult)| match style {
        EdgeStyle::Repeat => (from, to, None, mult),
        EdgeStyle::Label => (from, to, Some(mult), 1),
        EdgeStyle::Simple => (from, to, None, 1),
    })
}

/// Render as a DOT digraph with ranks growing upward. Node names are the
/// display forms.
pub fn graph_to_dot(g: &RankedGraph, style: EdgeStyle) -> String {
    let mut out = String::from("digraph composet {\n  rankdir=BT;\n  node [shape=none];\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  \"{v}\";");
    }
    for (from, to, label, copies) in style_lines(g, style) {
        for _ in 0..copies {
            match label {
                Some(mult) => {
                    let _ = writeln!(out, "  \"{from}\" -> \"{to}\" [label=\"{mult}\"];");
                }
                None => {
                    let _ = writeln!(out, "  \"{from}\" -> \"{to}\";");
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Render as a TikZ picture with a layered layout: one layer per rank,
/// siblings spaced evenly. Only the edge set is meaningful; coordinates
/// are an artifact of the layout.
pub fn graph_to_tikz(g: &RankedGraph, style: EdgeStyle) -> String {
    let mut out = String::from(
        "\\begin{tikzpicture}[>=latex,line join=bevel, scale=0.75, \
         every node/.style={font=\\small}]\n",
    );
    let mut ids = std::collections::BTreeMap::new();
    let mut index = 0usize;
    for rank in 0..=g.max_rank() {
        let level = g.rank_vertices(rank);
        let width = 64.0 * (level.len() as f64 - 1.0);
        for (j, v) in level.into_iter().enumerate() {
            let x = 64.0 * j as f64 - width / 2.0;
            let y = 7.0 + 50.0 * f64::from(rank);
            let _ = writeln!(
                out,
                "  \\node (node_{index}) at ({x:.1}bp,{y:.1}bp) [draw,draw=none] {{${{{v}}}$}};"
            );
            ids.insert(v, index);
            index += 1;
        }
    }
    for (from, to, label, copies) in style_lines(g, style) {
        let a = ids[from];
        let b = ids[to];
        for _ in 0..copies {
            match label {
                Some(mult) => {
                    let _ = writeln!(
                        out,
                        "  \\draw [black] (node_{a}) to node {{{mult}}} (node_{b});"
                    );
                }
                None => {
                    let _ = writeln!(out, "  \\draw [black] (node_{a}) to (node_{b});");
                }
            }
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
