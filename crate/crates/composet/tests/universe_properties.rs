//! Operator laws checked over the full universe of weak compositions with
//! at most 5 parts, each at most 6.

use composet::{append, box_add, box_remove, enumerate_weak, jdt_add, OpResult, WeakComposition};
use std::collections::BTreeSet;

fn universe() -> Vec<WeakComposition> {
    enumerate_weak(6, 5)
}

#[test]
fn universe_has_the_expected_size() {
    // 1 + 7 + 7^2 + ... + 7^5 lengths 0..=5 with parts in 0..=6
    assert_eq!(universe().len(), 19608);
}

#[test]
fn size_shift_laws() {
    for w in universe() {
        let lp = w.largest_part();
        for i in 1..=lp + 2 {
            if let OpResult::Value(v) = box_remove(i, &w) {
                assert_eq!(v.size() + 1, w.size(), "d_{i} on {w}");
            }
            if let OpResult::Value(v) = jdt_add(i, &w) {
                assert_eq!(v.size(), w.size() + 1, "u_{i} on {w}");
            }
            if let OpResult::Value(v) = box_add(i, &w) {
                assert_eq!(v.size(), w.size() + 1, "t_{i} on {w}");
            }
        }
        for i in 0..=lp + 2 {
            let v = append(i, &w);
            assert_eq!(v.size(), w.size() + u64::from(i), "a_{i} on {w}");
        }
    }
}

#[test]
fn zero_parts_are_inert_for_every_operator() {
    for w in universe() {
        let flat = w.flatten().to_weak();
        for i in 1..=w.largest_part() + 2 {
            let ops: [(&str, OpResult, OpResult); 4] = [
                ("d", box_remove(i, &w), box_remove(i, &flat)),
                ("u", jdt_add(i, &w), jdt_add(i, &flat)),
                ("t", box_add(i, &w), box_add(i, &flat)),
                ("a", append(i, &w).into(), append(i, &flat).into()),
            ];
            for (name, on_w, on_flat) in ops {
                assert_eq!(
                    on_w.is_zero(),
                    on_flat.is_zero(),
                    "{name}_{i} zero status on {w} vs {flat}"
                );
                if let (OpResult::Value(a), OpResult::Value(b)) = (on_w, on_flat) {
                    assert_eq!(a.flatten(), b.flatten(), "{name}_{i} on {w} vs {flat}");
                }
            }
        }
    }
}

#[test]
fn jdt_results_end_with_their_index_and_are_distinct() {
    for w in universe() {
        let mut seen = BTreeSet::new();
        for i in 1..=w.largest_part() + 1 {
            if let OpResult::Value(v) = jdt_add(i, &w) {
                assert_eq!(v.parts().last().copied(), Some(i), "u_{i} on {w}");
                assert!(seen.insert(v.flatten()), "u_{i} duplicate on {w}");
            }
        }
    }
}

#[test]
fn box_add_results_are_distinct() {
    for w in universe() {
        let mut seen = BTreeSet::new();
        for i in 1..=w.largest_part() + 1 {
            if let OpResult::Value(v) = box_add(i, &w) {
                assert!(seen.insert(v.flatten()), "t_{i} duplicate on {w}");
            }
        }
    }
}

#[test]
fn operators_annihilate_beyond_their_bounds() {
    for w in universe() {
        let lp = w.largest_part();
        for extra in 1..=3 {
            assert!(box_remove(lp + extra, &w).is_zero(), "d on {w}");
            assert!(jdt_add(lp + 1 + extra, &w).is_zero(), "u on {w}");
            assert!(box_add(lp + 1 + extra, &w).is_zero(), "t on {w}");
        }
    }
}
