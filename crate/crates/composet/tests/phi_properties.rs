//! The word bijection verified for every composition of size at most 6,
//! together with the cancellation identities it supports.

use composet::{
    build_word_sets, down_filtered, enumerate_compositions, phi, verify_phi, Composition, FormalSum,
};
use std::collections::BTreeSet;

fn all_alphas() -> impl Iterator<Item = Composition> {
    (0..=6).flat_map(enumerate_compositions)
}

#[test]
fn verify_phi_passes_for_every_alpha_up_to_size_6() {
    let mut count = 0;
    for alpha in all_alphas() {
        let report = verify_phi(&alpha);
        assert!(report.passed(), "{report}");
        count += 1;
    }
    assert_eq!(count, 64);
}

#[test]
fn y_and_z_always_have_the_same_size() {
    for alpha in all_alphas() {
        let sets = build_word_sets(&alpha, alpha.largest_part() + 1);
        assert_eq!(sets.y.len(), sets.z.len(), "at {alpha}");
    }
}

#[test]
fn phi_is_structurally_injective() {
    for alpha in all_alphas() {
        let sets = build_word_sets(&alpha, alpha.largest_part() + 1);
        let images: BTreeSet<_> = sets
            .y
            .iter()
            .map(|w| phi(w, &alpha).expect("members of Y are in phi's domain"))
            .collect();
        assert_eq!(images.len(), sets.y.len(), "at {alpha}");
    }
}

#[test]
fn singleton_words_cancel_down_to_alpha() {
    for alpha in all_alphas() {
        let sets = build_word_sets(&alpha, alpha.largest_part() + 1);
        let mut diff = FormalSum::zero();
        for w in &sets.p {
            let v = w
                .apply(&alpha)
                .into_value()
                .expect("members of P are nonzero");
            diff.add_term(v.flatten(), 1);
        }
        for w in &sets.q {
            let v = w
                .apply(&alpha)
                .into_value()
                .expect("members of Q are nonzero");
            diff.add_term(v.flatten(), -1);
        }
        assert_eq!(diff, FormalSum::unit(alpha.clone()), "at {alpha}");
    }
}

#[test]
fn words_outside_z_sum_to_the_filtered_identity_terms() {
    for alpha in all_alphas() {
        let sets = build_word_sets(&alpha, alpha.largest_part() + 1);
        let unit = FormalSum::unit(alpha.clone());
        let mut sum = FormalSum::zero();
        for w in sets.x.difference(&sets.z) {
            let v = w
                .apply(&alpha)
                .into_value()
                .expect("members of X are nonzero");
            sum.add_term(v.flatten(), 1);
        }
        assert_eq!(sum, &down_filtered(&unit) + &unit, "at {alpha}");
    }
}
