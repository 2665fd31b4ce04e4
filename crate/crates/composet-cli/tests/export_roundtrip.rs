//! Serialization properties: JSON round-trips exactly, text formats are
//! byte-stable, and edge styles count edges the way they promise.

use composet::{build_lc, build_qc, build_qct, build_rc, RankedGraph};
use composet_cli::export::{
    graph_from_json_str, graph_to_dot, graph_to_json_string, graph_to_tikz, EdgeStyle,
};

fn all_graphs(max_rank: u32) -> Vec<(&'static str, RankedGraph)> {
    vec![
        ("rc", build_rc(max_rank)),
        ("lc", build_lc(max_rank)),
        ("qc", build_qc(max_rank)),
        ("qct", build_qct(max_rank)),
    ]
}

#[test]
fn json_round_trip_is_exact_for_every_graph() {
    for max_rank in [4, 6] {
        for (name, graph) in all_graphs(max_rank) {
            let text = graph_to_json_string(&graph);
            let back = graph_from_json_str(&text).unwrap();
            assert_eq!(back, graph, "{name} at rank {max_rank}");
        }
    }
}

#[test]
fn text_formats_are_byte_stable() {
    for (name, graph) in all_graphs(5) {
        for style in [EdgeStyle::Repeat, EdgeStyle::Label, EdgeStyle::Simple] {
            assert_eq!(
                graph_to_dot(&graph, style),
                graph_to_dot(&graph, style),
                "dot for {name}"
            );
            assert_eq!(
                graph_to_tikz(&graph, style),
                graph_to_tikz(&graph, style),
                "tikz for {name}"
            );
        }
        assert_eq!(
            graph_to_json_string(&graph),
            graph_to_json_string(&graph),
            "json for {name}"
        );
    }
}

#[test]
fn edge_styles_count_edges_as_documented() {
    let graph = build_qct(4);
    let repeat = graph_to_dot(&graph, EdgeStyle::Repeat);
    let simple = graph_to_dot(&graph, EdgeStyle::Simple);
    let labeled = graph_to_dot(&graph, EdgeStyle::Label);

    let arrows = |text: &str| text.matches(" -> ").count();
    assert_eq!(arrows(&repeat) as u64, graph.edge_count());
    assert_eq!(arrows(&simple), graph.distinct_edge_count());
    assert_eq!(arrows(&labeled), graph.distinct_edge_count());
    assert_eq!(
        labeled.matches("[label=").count(),
        graph.distinct_edge_count()
    );
    assert!(!simple.contains("[label="));
}

#[test]
fn tikz_draws_one_line_per_distinct_edge_in_simple_style() {
    let graph = build_qc(4);
    let text = graph_to_tikz(&graph, EdgeStyle::Simple);
    assert_eq!(text.matches("\\draw").count(), graph.distinct_edge_count());
    assert_eq!(text.matches("\\node").count(), graph.vertices().len());
    assert!(text.ends_with("\\end{tikzpicture}\n"), "{text}");
}
