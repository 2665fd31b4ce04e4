//! Operators on integer compositions and the ranked graphs they generate.
//!
//! The crate implements four operator families on weak compositions:
//!
//! * [`ops::box_remove`] — subtract 1 from the rightmost part equal to `i`,
//! * [`ops::append`] — append a part `i`,
//! * [`ops::jdt_add`] — remove a staircase of boxes, then append `i`,
//! * [`ops::box_add`] — prepend a 1 or add 1 to the leftmost part equal to
//!   `i - 1`,
//!
//! together with their set-indexed products and a generic word evaluator.
//! On top of these sit integer linear combinations of compositions
//! ([`formal::FormalSum`]) with the linear up/down operators `U`, `D`,
//! `Ũ`, `D̃`, the four ranked graphs on compositions ([`graph`]), an
//! exhaustive verifier for the operator relations and the dual graded /
//! dual filtered graph identities ([`verify`]), and the explicit bijection
//! between left- and right-sided operator words ([`bijection`]).
//!
//! The crate is `no_std` (it requires `alloc`); IO, file formats and the
//! command line front end live in the companion crate `composet-cli`.

#![no_std]

extern crate alloc;

pub mod bijection;
pub mod composition;
pub mod formal;
pub mod graph;
pub mod ops;
pub mod verify;

pub use bijection::{
    build_word_sets, phi, phi_rows, psi, verify_phi, PhiError, PhiReport, PhiRow, TSide, TWord,
    WordSets,
};
pub use composition::{
    enumerate_compositions, enumerate_weak, Composition, OpResult, WeakComposition,
};
pub use formal::{commutator_minus, down_filtered, down_q, up_l, up_r, FormalSum, LinearOp};
pub use graph::{
    build_lc, build_qc, build_qct, build_rc, check_nontransitivity, qct_multiplicity_survey,
    GraphFlavor, GraphOpError, MultiplicitySurvey, NontransitivityWitness, RankedGraph,
};
pub use ops::{
    append, box_add, box_remove, box_remove_set, jdt_add, jdt_add_set, IndexSet, OpAtom,
    OperatorWord,
};
pub use verify::{
    verify_dual_filtered, verify_dual_graded, verify_graded_pointwise, verify_index_inertness,
    verify_relation, verify_zero_contribution, Counterexample, OperatorRelation, RelationCheck,
    UpFamily,
};
