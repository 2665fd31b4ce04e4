//! Ranked graphs on compositions: the right (jdt), left (box-add) and
//! quasisymmetric (box-remove) graded graphs, and the strong filtered graph
//! of set-indexed removals.
//!
//! Vertices at rank `n` are exactly the compositions of `n`; edges point
//! upward, from smaller rank to larger. Graded graphs connect consecutive
//! ranks only; the strong filtered graph connects any rank to any strictly
//! larger one. Edge multiplicities count the number of operator witnesses:
//! one per index `i` for the graded graphs, one per index set `I` for the
//! filtered graph.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::composition::{enumerate_compositions, Composition};
use crate::formal::{down_filtered_images, down_q_images, up_l_images, up_r_images, FormalSum};
use crate::ops::{box_remove_set, IndexSet};

/// How ranks relate across an edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphFlavor {
    /// Every edge joins consecutive ranks.
    Graded,
    /// Every edge strictly increases rank, by any amount.
    StrongFiltered,
}

impl GraphFlavor {
    pub fn as_str(&self) -> &'static str {
        match self {
            GraphFlavor::Graded => "graded",
            GraphFlavor::StrongFiltered => "strong-filtered",
        }
    }
}

/// Errors from [`RankedGraph::up`] and [`RankedGraph::down`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphOpError {
    /// The sum mentions a composition the graph does not store, or an up
    /// move would leave the stored ranks.
    OutOfBounds {
        term: Composition,
        needed_rank: u64,
        max_rank: u32,
    },
}

impl fmt::Display for GraphOpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphOpError::OutOfBounds {
                term,
                needed_rank,
                max_rank,
            } => write!(
                f,
                "term {term} needs rank {needed_rank} but the graph stops at rank {max_rank}"
            ),
        }
    }
}

impl core::error::Error for GraphOpError {}

/// Errors from [`RankedGraph::from_parts`], the validating constructor used
/// by deserialization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphBuildError {
    InvalidVertex(String),
    RankLawViolated(String),
    ZeroMultiplicity(String),
}

impl fmt::Display for GraphBuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphBuildError::InvalidVertex(msg)
            | GraphBuildError::RankLawViolated(msg)
            | GraphBuildError::ZeroMultiplicity(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for GraphBuildError {}

/// A finite ranked graph on compositions with multiplicity-weighted upward
/// edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankedGraph {
    flavor: GraphFlavor,
    max_rank: u32,
    edges: BTreeMap<(Composition, Composition), u64>,
    up_adj: BTreeMap<Composition, Vec<(Composition, u64)>>,
    down_adj: BTreeMap<Composition, Vec<(Composition, u64)>>,
}

impl RankedGraph {
    fn from_edges(
        flavor: GraphFlavor,
        max_rank: u32,
        edges: BTreeMap<(Composition, Composition), u64>,
    ) -> Self {
        let mut up_adj: BTreeMap<Composition, Vec<(Composition, u64)>> = BTreeMap::new();
        let mut down_adj: BTreeMap<Composition, Vec<(Composition, u64)>> = BTreeMap::new();
        for ((from, to), &mult) in &edges {
            up_adj
                .entry(from.clone())
                .or_default()
                .push((to.clone(), mult));
            down_adj
                .entry(to.clone())
                .or_default()
                .push((from.clone(), mult));
        }
        RankedGraph {
            flavor,
            max_rank,
            edges,
            up_adj,
            down_adj,
        }
    }

    /// Rebuild a graph from its edge list, validating every invariant the
    /// builders guarantee: endpoints are compositions of size at most
    /// `max_rank`, ranks move the right way for `flavor`, multiplicities
    /// are positive.
    pub fn from_parts(
        flavor: GraphFlavor,
        max_rank: u32,
        edges: impl IntoIterator<Item = (Composition, Composition, u64)>,
    ) -> Result<Self, GraphBuildError> {
        let mut map = BTreeMap::new();
        for (from, to, mult) in edges {
            if mult == 0 {
                return Err(GraphBuildError::ZeroMultiplicity(alloc::format!(
                    "edge {from} -> {to} has multiplicity 0"
                )));
            }
            if from.size() > u64::from(max_rank) || to.size() > u64::from(max_rank) {
                return Err(GraphBuildError::InvalidVertex(alloc::format!(
                    "edge {from} -> {to} leaves the stored ranks (max rank {max_rank})"
                )));
            }
            let ok = match flavor {
                GraphFlavor::Graded => to.size() == from.size() + 1,
                GraphFlavor::StrongFiltered => to.size() > from.size(),
            };
            if !ok {
                return Err(GraphBuildError::RankLawViolated(alloc::format!(
                    "edge {from} -> {to} violates the {} rank law",
                    flavor.as_str()
                )));
            }
            if map.insert((from.clone(), to.clone()), mult).is_some() {
                return Err(GraphBuildError::ZeroMultiplicity(alloc::format!(
                    "edge {from} -> {to} listed twice"
                )));
            }
        }
        Ok(RankedGraph::from_edges(flavor, max_rank, map))
    }

    pub fn flavor(&self) -> GraphFlavor {
        self.flavor
    }

    pub fn max_rank(&self) -> u32 {
        self.max_rank
    }

    /// Vertices of rank `n`, in canonical order.
    pub fn rank_vertices(&self, n: u32) -> Vec<Composition> {
        if n > self.max_rank {
            return Vec::new();
        }
        enumerate_compositions(n)
    }

    /// All vertices, rank by rank, in canonical order.
    pub fn vertices(&self) -> Vec<Composition> {
        let mut out = Vec::new();
        for n in 0..=self.max_rank {
            out.extend(enumerate_compositions(n));
        }
        out
    }

    pub fn contains_vertex(&self, c: &Composition) -> bool {
        c.size() <= u64::from(self.max_rank)
    }

    /// Edges with multiplicities, ordered by (from, to).
    pub fn edges(&self) -> impl Iterator<Item = (&Composition, &Composition, u64)> {
        self.edges.iter().map(|((f, t), &m)| (f, t, m))
    }

    /// Number of distinct (from, to) pairs.
    pub fn distinct_edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edges.values().sum()
    }

    pub fn multiplicity(&self, from: &Composition, to: &Composition) -> u64 {
        self.edges
            .get(&(from.clone(), to.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// The graph up operator: send each term to the multiplicity-weighted
    /// sum of its upward neighbors.
    ///
    /// Errors when a term is not a stored vertex, or (for graded graphs)
    /// when its covers would exceed `max_rank`, since the result would be
    /// silently truncated. For strong filtered graphs any stored vertex is
    /// accepted; the up sum then ranges over stored ranks only, which is the
    /// usual reason to pair these graphs with [`RankedGraph::down`] instead.
    pub fn up(&self, s: &FormalSum) -> Result<FormalSum, GraphOpError> {
        let mut out = FormalSum::zero();
        for (c, k) in s.iter() {
            let needed = match self.flavor {
                GraphFlavor::Graded => c.size() + 1,
                GraphFlavor::StrongFiltered => c.size(),
            };
            if needed > u64::from(self.max_rank) {
                return Err(GraphOpError::OutOfBounds {
                    term: c.clone(),
                    needed_rank: needed,
                    max_rank: self.max_rank,
                });
            }
            if let Some(nbrs) = self.up_adj.get(c) {
                for (to, mult) in nbrs {
                    out.add_term(to.clone(), k * BigInt::from(*mult));
                }
            }
        }
        Ok(out)
    }

    /// The graph down operator: send each term to the multiplicity-weighted
    /// sum of its downward neighbors. Errors when a term is not a stored
    /// vertex.
    pub fn down(&self, s: &FormalSum) -> Result<FormalSum, GraphOpError> {
        let mut out = FormalSum::zero();
        for (c, k) in s.iter() {
            if c.size() > u64::from(self.max_rank) {
                return Err(GraphOpError::OutOfBounds {
                    term: c.clone(),
                    needed_rank: c.size(),
                    max_rank: self.max_rank,
                });
            }
            if let Some(nbrs) = self.down_adj.get(c) {
                for (from, mult) in nbrs {
                    out.add_term(from.clone(), k * BigInt::from(*mult));
                }
            }
        }
        Ok(out)
    }

    /// Whether `to` is reachable from `from` along upward edges.
    pub fn path_exists(&self, from: &Composition, to: &Composition) -> bool {
        if from == to {
            return true;
        }
        let mut seen = alloc::collections::BTreeSet::new();
        let mut frontier = alloc::vec![from.clone()];
        while let Some(cur) = frontier.pop() {
            if let Some(nbrs) = self.up_adj.get(&cur) {
                for (next, _) in nbrs {
                    if next == to {
                        return true;
                    }
                    if seen.insert(next.clone()) {
                        frontier.push(next.clone());
                    }
                }
            }
        }
        false
    }
}

fn build_from_images(
    flavor: GraphFlavor,
    max_rank: u32,
    from_below: bool,
    images: impl Fn(&Composition) -> Vec<Composition>,
) -> RankedGraph {
    let mut edges: BTreeMap<(Composition, Composition), u64> = BTreeMap::new();
    for n in 0..=max_rank {
        for vertex in enumerate_compositions(n) {
            if from_below && n == max_rank {
                continue;
            }
            for image in images(&vertex) {
                let key = if from_below {
                    (vertex.clone(), image)
                } else {
                    (image, vertex.clone())
                };
                *edges.entry(key).or_insert(0) += 1;
            }
        }
    }
    RankedGraph::from_edges(flavor, max_rank, edges)
}

/// The right composition graph up to rank `max_rank`: covers are jdt
/// additions, `beta -> flatten(u_i(beta))`.
pub fn build_rc(max_rank: u32) -> RankedGraph {
    build_from_images(GraphFlavor::Graded, max_rank, true, up_r_images)
}

/// The left composition graph: covers are box additions,
/// `beta -> flatten(t_i(beta))`.
pub fn build_lc(max_rank: u32) -> RankedGraph {
    build_from_images(GraphFlavor::Graded, max_rank, true, up_l_images)
}

/// The quasisymmetric composition graph: edges are single box removals,
/// `flatten(d_i(alpha)) -> alpha`, generated from each upper vertex.
pub fn build_qc(max_rank: u32) -> RankedGraph {
    build_from_images(GraphFlavor::Graded, max_rank, false, down_q_images)
}

/// The strong filtered quasisymmetric graph: one edge witness
/// `flatten(d_I(alpha)) -> alpha` per nonempty index set `I` with nonzero
/// removal, generated from each upper vertex.
pub fn build_qct(max_rank: u32) -> RankedGraph {
    build_from_images(
        GraphFlavor::StrongFiltered,
        max_rank,
        false,
        down_filtered_images,
    )
}

/// Witness data showing that set-indexed removals do not compose: two
/// removal steps whose composite is not a single set-indexed removal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NontransitivityWitness {
    pub start: Composition,
    pub first_set: IndexSet,
    /// `d_{first_set}(start)`, flattened.
    pub mid: Composition,
    pub second_set: IndexSet,
    /// `d_{second_set}(mid)`, flattened.
    pub end: Composition,
    /// An index set with `flatten(d_I(start)) = end`, if one exists.
    pub direct_witness: Option<IndexSet>,
}

/// Check the standard witness: `d_{1,4}` sends (4,1,4,1) to (4,1,3) and
/// (4,1,3) to (3,3), yet no single `d_I` sends (4,1,4,1) to (3,3). The
/// caller asserts on [`NontransitivityWitness::direct_witness`].
pub fn check_nontransitivity() -> NontransitivityWitness {
    let start = Composition::new(alloc::vec![4, 1, 4, 1]);
    let set = IndexSet::new([1, 4]);
    let mid = box_remove_set(&set, &start.to_weak())
        .into_value()
        .expect("d_{1,4} is nonzero on (4,1,4,1)")
        .flatten();
    let end = box_remove_set(&set, &mid.to_weak())
        .into_value()
        .expect("d_{1,4} is nonzero on (4,1,3)")
        .flatten();
    let mut direct_witness = None;
    for candidate in IndexSet::nonempty_subsets_of(start.largest_part()) {
        if let Some(v) = box_remove_set(&candidate, &start.to_weak()).into_value() {
            if v.flatten() == end {
                direct_witness = Some(candidate);
                break;
            }
        }
    }
    NontransitivityWitness {
        start,
        first_set: set.clone(),
        mid,
        second_set: set,
        end,
        direct_witness,
    }
}

/// Exhaustive survey of edge multiplicities in the strong filtered graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiplicitySurvey {
    pub max_size: u32,
    pub distinct_edges: usize,
    pub max_multiplicity: u64,
    /// Edges with multiplicity above 1, if any exist.
    pub heavy_edges: Vec<(Composition, Composition, u64)>,
}

/// Count, for every composition of size at most `max_size`, how many index
/// sets witness each filtered edge. Whether any edge has more than one
/// witness is reported, not assumed.
pub fn qct_multiplicity_survey(max_size: u32) -> MultiplicitySurvey {
    let graph = build_qct(max_size);
    let mut max_multiplicity = 0;
    let mut heavy_edges = Vec::new();
    for (from, to, mult) in graph.edges() {
        if mult > max_multiplicity {
            max_multiplicity = mult;
        }
        if mult > 1 {
            heavy_edges.push((from.clone(), to.clone(), mult));
        }
    }
    MultiplicitySurvey {
        max_size,
        distinct_edges: graph.distinct_edge_count(),
        max_multiplicity,
        heavy_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn rank_one_graphs_have_the_single_edge() {
        for build in [build_rc, build_lc, build_qc, build_qct] {
            let g = build(1);
            assert_eq!(g.distinct_edge_count(), 1);
            assert_eq!(g.multiplicity(&Composition::empty(), &c(&[1])), 1);
        }
    }

    #[test]
    fn rank_four_edge_counts() {
        assert_eq!(build_rc(4).distinct_edge_count(), 17);
        assert_eq!(build_lc(4).distinct_edge_count(), 17);
        assert_eq!(build_qc(4).distinct_edge_count(), 22);
    }

    #[test]
    fn specific_edges_match_the_operator_definitions() {
        let rc = build_rc(4);
        assert_eq!(rc.multiplicity(&c(&[2, 1]), &c(&[1, 3])), 1); // u_3
        assert_eq!(rc.multiplicity(&c(&[2]), &c(&[3])), 1); // u_3
        assert_eq!(rc.multiplicity(&c(&[2]), &c(&[1, 2])), 0);

        let lc = build_lc(4);
        assert_eq!(lc.multiplicity(&c(&[2]), &c(&[1, 2])), 1); // t_1
        assert_eq!(lc.multiplicity(&c(&[2, 1]), &c(&[3, 1])), 1); // t_3
        assert_eq!(lc.multiplicity(&c(&[2, 1]), &c(&[1, 3])), 0);

        let qc = build_qc(4);
        assert_eq!(qc.multiplicity(&c(&[1, 2]), &c(&[1, 2, 1])), 1); // d_1
        assert_eq!(qc.multiplicity(&c(&[1, 1, 1]), &c(&[1, 2, 1])), 1); // d_2
        assert_eq!(qc.multiplicity(&c(&[3]), &c(&[1, 3])), 1); // d_1 hits (0,3)
    }

    #[test]
    fn filtered_graph_contains_multi_step_edges() {
        let qct = build_qct(6);
        // d_{1,2} on (1,2,1) gives (1,1), a rank 4 -> 2 edge, stored with
        // the lower vertex first.
        assert_eq!(qct.multiplicity(&c(&[1, 1]), &c(&[1, 2, 1])), 1);
        // Graded edges are present too.
        assert_eq!(qct.multiplicity(&c(&[1, 2]), &c(&[1, 2, 1])), 1);
        // Sanity: strictly increasing rank on every edge.
        for (from, to, _) in qct.edges() {
            assert!(from.size() < to.size());
        }
    }

    #[test]
    fn graded_graphs_connect_consecutive_ranks() {
        for build in [build_rc, build_lc, build_qc] {
            let g = build(5);
            for (from, to, _) in g.edges() {
                assert_eq!(from.size() + 1, to.size());
            }
        }
    }

    #[test]
    fn up_and_down_aggregate_edges() {
        let qc = build_qc(5);
        let alpha = FormalSum::unit(c(&[2, 1, 3])); // rank 6 > 5: out of bounds
        assert!(qc.down(&alpha).is_err());

        let beta = FormalSum::unit(c(&[2, 1]));
        let down = qc.down(&beta).unwrap();
        assert_eq!(
            down,
            FormalSum::from_terms(vec![(c(&[2]), 1), (c(&[1, 1]), 1)])
        );
        let up_err = build_rc(3).up(&FormalSum::unit(c(&[2, 1]))).unwrap_err();
        assert!(matches!(up_err, GraphOpError::OutOfBounds { .. }));
    }

    #[test]
    fn nontransitivity_witness_is_reproduced() {
        let w = check_nontransitivity();
        assert_eq!(w.mid, c(&[4, 1, 3]));
        assert_eq!(w.end, c(&[3, 3]));
        assert_eq!(w.direct_witness, None);
        // The two-step target is still reachable through covers.
        let qc = build_qc(10);
        assert!(qc.path_exists(&c(&[3, 3]), &c(&[4, 1, 4, 1])));
    }

    #[test]
    fn multiplicity_survey_reports_rather_than_assumes() {
        let survey = qct_multiplicity_survey(6);
        assert!(survey.max_multiplicity >= 1);
        assert_eq!(survey.heavy_edges.is_empty(), survey.max_multiplicity == 1);
        for (_, _, m) in &survey.heavy_edges {
            assert!(*m > 1 && *m <= survey.max_multiplicity);
        }
    }

    #[test]
    fn from_parts_validates_rank_laws() {
        let good = RankedGraph::from_parts(
            GraphFlavor::Graded,
            2,
            vec![(Composition::empty(), c(&[1]), 1), (c(&[1]), c(&[2]), 1)],
        );
        assert!(good.is_ok());
        let bad_rank = RankedGraph::from_parts(GraphFlavor::Graded, 3, vec![(c(&[1]), c(&[3]), 1)]);
        assert!(matches!(bad_rank, Err(GraphBuildError::RankLawViolated(_))));
        let bad_mult = RankedGraph::from_parts(GraphFlavor::Graded, 2, vec![(c(&[1]), c(&[2]), 0)]);
        assert!(matches!(
            bad_mult,
            Err(GraphBuildError::ZeroMultiplicity(_))
        ));
        let out_of_range =
            RankedGraph::from_parts(GraphFlavor::Graded, 1, vec![(c(&[1]), c(&[2]), 1)]);
        assert!(matches!(
            out_of_range,
            Err(GraphBuildError::InvalidVertex(_))
        ));
    }
}
