//! Structural laws of the four graphs and their agreement with the formal
//! sum operators.

use composet::{
    build_lc, build_qc, build_qct, build_rc, down_filtered, down_q, up_l, up_r, Composition,
    FormalSum, OperatorWord, RankedGraph, TWord, WeakComposition,
};

#[test]
fn graph_up_matches_the_formal_up_operators() {
    let rc = build_rc(6);
    let lc = build_lc(6);
    for alpha in rc.vertices() {
        if alpha.size() >= 6 {
            continue;
        }
        let unit = FormalSum::unit(alpha.clone());
        assert_eq!(rc.up(&unit).unwrap(), up_r(&unit), "rc up at {alpha}");
        assert_eq!(lc.up(&unit).unwrap(), up_l(&unit), "lc up at {alpha}");
    }
}

#[test]
fn graph_down_matches_the_formal_down_operators() {
    let qc = build_qc(6);
    let qct = build_qct(6);
    for alpha in qc.vertices() {
        let unit = FormalSum::unit(alpha.clone());
        assert_eq!(qc.down(&unit).unwrap(), down_q(&unit), "qc down at {alpha}");
        assert_eq!(
            qct.down(&unit).unwrap(),
            down_filtered(&unit),
            "qct down at {alpha}"
        );
    }
}

#[test]
fn rank_levels_have_binary_counts() {
    let rc = build_rc(8);
    assert_eq!(rc.rank_vertices(0).len(), 1);
    for n in 1..=8 {
        assert_eq!(rc.rank_vertices(n).len(), 1 << (n - 1));
    }
    assert_eq!(rc.vertices().len(), 256);
}

#[test]
fn graded_edges_connect_consecutive_ranks_and_filtered_edges_climb() {
    for build in [build_rc, build_lc, build_qc] {
        let g = build(7);
        for (from, to, mult) in g.edges() {
            assert_eq!(from.size() + 1, to.size());
            assert!(mult >= 1);
        }
    }
    let qct = build_qct(7);
    for (from, to, mult) in qct.edges() {
        assert!(from.size() < to.size());
        assert!(mult >= 1);
    }
}

#[test]
fn cover_multiplicities_are_one_in_both_graded_up_graphs() {
    for build in [build_rc, build_lc] {
        let g = build(7);
        for (_, _, mult) in g.edges() {
            assert_eq!(mult, 1);
        }
    }
}

#[test]
fn every_vertex_is_reachable_from_the_empty_composition() {
    let empty = Composition::empty();
    for build in [build_rc, build_lc, build_qc, build_qct] {
        let g = build(5);
        for v in g.vertices() {
            assert!(g.path_exists(&empty, &v), "unreachable {v}");
        }
    }
}

#[test]
fn shared_types_are_send_and_sync() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Composition>();
    assert_send_sync::<WeakComposition>();
    assert_send_sync::<FormalSum>();
    assert_send_sync::<RankedGraph>();
    assert_send_sync::<OperatorWord>();
    assert_send_sync::<TWord>();
}
