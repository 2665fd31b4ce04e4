//! Bundled rank-4 edge lists for the three graded graphs, transcribed once
//! from the reference drawings, and comparison of built graphs against
//! them.

use std::collections::BTreeSet;

use composet::{build_lc, build_qc, build_rc, Composition, RankedGraph};
use serde::{Deserialize, Serialize};

pub const RC4_JSON: &str = include_str!("../fixtures/rc4.json");
pub const LC4_JSON: &str = include_str!("../fixtures/lc4.json");
pub const QC4_JSON: &str = include_str!("../fixtures/qc4.json");

/// The three bundled fixtures.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Fixture {
    Rc4,
    Lc4,
    Qc4,
}

impl Fixture {
    pub const ALL: [Fixture; 3] = [Fixture::Rc4, Fixture::Lc4, Fixture::Qc4];

    pub fn name(&self) -> &'static str {
        match self {
            Fixture::Rc4 => "Rc4",
            Fixture::Lc4 => "Lc4",
            Fixture::Qc4 => "Qc4",
        }
    }

    pub fn json(&self) -> &'static str {
        match self {
            Fixture::Rc4 => RC4_JSON,
            Fixture::Lc4 => LC4_JSON,
            Fixture::Qc4 => QC4_JSON,
        }
    }

    /// Build the graph this fixture describes.
    pub fn build(&self) -> RankedGraph {
        match self {
            Fixture::Rc4 => build_rc(4),
            Fixture::Lc4 => build_lc(4),
            Fixture::Qc4 => build_qc(4),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct FixtureDoc {
    name: String,
    flavor: String,
    max_rank: u32,
    edges: Vec<FixtureEdge>,
}

#[derive(Serialize, Deserialize)]
struct FixtureEdge {
    from: Vec<u32>,
    to: Vec<u32>,
}

/// Presence-level symmetric difference between a built graph's edges and a
/// fixture's. Empty both ways means the edge sets agree exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixtureDiff {
    pub name: &'static str,
    pub fixture_edges: usize,
    pub graph_edges: usize,
    pub missing_from_graph: Vec<(Composition, Composition)>,
    pub extra_in_graph: Vec<(Composition, Composition)>,
}

impl FixtureDiff {
    pub fn is_empty(&self) -> bool {
        self.missing_from_graph.is_empty() && self.extra_in_graph.is_empty()
    }
}

/// Compare a graph's edge set (multiplicities collapsed to presence)
/// against a fixture's edge list.
pub fn compare_fixture(g: &RankedGraph, fixture: Fixture) -> Result<FixtureDiff, String> {
    let doc: FixtureDoc = serde_json::from_str(fixture.json()).map_err(|e| e.to_string())?;
    if doc.name != fixture.name() {
        return Err(format!(
            "fixture file names itself {:?}, expected {:?}",
            doc.name,
            fixture.name()
        ));
    }
    let mut wanted = BTreeSet::new();
    for edge in &doc.edges {
        let from = Composition::try_new(edge.from.clone())
            .ok_or_else(|| format!("fixture edge source {:?} has a zero part", edge.from))?;
        let to = Composition::try_new(edge.to.clone())
            .ok_or_else(|| format!("fixture edge target {:?} has a zero part", edge.to))?;
        wanted.insert((from, to));
    }
    let built: BTreeSet<(Composition, Composition)> = g
        .edges()
        .map(|(from, to, _)| (from.clone(), to.clone()))
        .collect();
    Ok(FixtureDiff {
        name: fixture.name(),
        fixture_edges: wanted.len(),
        graph_edges: built.len(),
        missing_from_graph: wanted.difference(&built).cloned().collect(),
        extra_in_graph: built.difference(&wanted).cloned().collect(),
    })
}
