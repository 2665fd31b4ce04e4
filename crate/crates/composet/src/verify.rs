//! Exhaustive empirical checks over bounded universes: the nine operator
//! relations, the zero-contribution case analysis for `t_i` against `d_i`,
//! the dual graded and dual filtered commutator identities, and the
//! pointwise form of the graded commutator.
//!
//! Relation checks compare operator words strictly, as weak compositions
//! with zeros and positions intact. The duality checks compare formal sums,
//! whose terms are flattened. Index variables are capped at
//! `largest_part + 2` per input; [`verify_index_inertness`] asserts
//! separately that everything above that cap is inert, which is what makes
//! the cap sound.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::composition::{
    enumerate_compositions, enumerate_weak, Composition, OpResult, WeakComposition,
};
use crate::formal::{down_filtered, down_q, up_l, up_r, FormalSum};
use crate::ops::{box_add, box_remove, jdt_add, OpAtom, OperatorWord};

/// First input on which a check failed, with full evaluation traces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Counterexample {
    pub input: String,
    pub indices: Vec<u32>,
    pub lhs: String,
    pub rhs: String,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "input:   {}", self.input)?;
        writeln!(f, "indices: {:?}", self.indices)?;
        writeln!(f, "lhs:     {}", self.lhs)?;
        writeln!(f, "rhs:     {}", self.rhs)?;
        write!(f, "{}", self.detail)
    }
}

/// Outcome of one exhaustive check: the universe scanned, how many cases
/// were compared, and the first counterexample if any.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationCheck {
    pub name: &'static str,
    pub universe: String,
    pub cases: u64,
    pub failure: Option<Counterexample>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for RelationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(
                f,
                "{}: pass ({} cases; {})",
                self.name, self.cases, self.universe
            ),
            Some(ce) => write!(
                f,
                "{}: FAIL at case {} ({})\n{}",
                self.name, self.cases, self.universe, ce
            ),
        }
    }
}

/// Evaluate `word` on `w` one atom at a time, rendering each intermediate
/// value. Used in counterexample reports and by the examples replay.
pub fn trace(word: &OperatorWord, w: &WeakComposition) -> String {
    let mut steps = format!("{w}");
    let mut cur = OpResult::Value(w.clone());
    for atom in word.atoms().iter().rev() {
        let next = match &cur {
            OpResult::Zero => OpResult::Zero,
            OpResult::Value(v) => atom.apply(v),
        };
        steps.push_str(&format!(" -{atom}-> {next}"));
        cur = next;
    }
    steps
}

/// The nine operator relations, checked as strict word equalities.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OperatorRelation {
    /// a_i = d_{i+1} a_{i+1}, i >= 0
    AppendShift,
    /// d_j d_{j+1} ... d_i a_i = a_{j-1}, i >= j >= 1
    StaircaseToAppend,
    /// d_i a_j = a_j d_i, i != j, both >= 1
    RemoveAppendDisjoint,
    /// d_i d_j = d_j d_i, j >= i + 2
    RemoveRemoteSwap,
    /// d_i d_i d_{i+1} = d_i d_{i+1} d_i
    RemoveBraidA,
    /// d_i d_{i+1} d_{i+1} = d_{i+1} d_i d_{i+1}
    RemoveBraidB,
    /// u_i d_j = d_j u_i, i != j
    JdtRemoveDisjoint,
    /// u_i d_i = d_{i+1} u_{i+1}
    JdtRemoveShift,
    /// t_i d_j = d_j t_i, i != j
    BoxAddRemoveDisjoint,
}

impl OperatorRelation {
    pub const ALL: [OperatorRelation; 9] = [
        OperatorRelation::AppendShift,
        OperatorRelation::StaircaseToAppend,
        OperatorRelation::RemoveAppendDisjoint,
        OperatorRelation::RemoveRemoteSwap,
        OperatorRelation::RemoveBraidA,
        OperatorRelation::RemoveBraidB,
        OperatorRelation::JdtRemoveDisjoint,
        OperatorRelation::JdtRemoveShift,
        OperatorRelation::BoxAddRemoveDisjoint,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            OperatorRelation::AppendShift => "append-shift",
            OperatorRelation::StaircaseToAppend => "staircase-to-append",
            OperatorRelation::RemoveAppendDisjoint => "remove-append-disjoint",
            OperatorRelation::RemoveRemoteSwap => "remove-remote-swap",
            OperatorRelation::RemoveBraidA => "remove-braid-a",
            OperatorRelation::RemoveBraidB => "remove-braid-b",
            OperatorRelation::JdtRemoveDisjoint => "jdt-remove-disjoint",
            OperatorRelation::JdtRemoveShift => "jdt-remove-shift",
            OperatorRelation::BoxAddRemoveDisjoint => "box-add-remove-disjoint",
        }
    }

    pub fn equation(&self) -> &'static str {
        match self {
            OperatorRelation::AppendShift => "a_i = d_{i+1} a_{i+1}  (i >= 0)",
            OperatorRelation::StaircaseToAppend => {
                "d_j d_{j+1} ... d_i a_i = a_{j-1}  (i >= j >= 1)"
            }
            OperatorRelation::RemoveAppendDisjoint => "d_i a_j = a_j d_i  (i != j)",
            OperatorRelation::RemoveRemoteSwap => "d_i d_j = d_j d_i  (|i - j| >= 2)",
            OperatorRelation::RemoveBraidA => "d_i d_i d_{i+1} = d_i d_{i+1} d_i",
            OperatorRelation::RemoveBraidB => "d_i d_{i+1} d_{i+1} = d_{i+1} d_i d_{i+1}",
            OperatorRelation::JdtRemoveDisjoint => "u_i d_j = d_j u_i  (i != j)",
            OperatorRelation::JdtRemoveShift => "u_i d_i = d_{i+1} u_{i+1}",
            OperatorRelation::BoxAddRemoveDisjoint => "t_i d_j = d_j t_i  (i != j)",
        }
    }

    fn is_two_index(&self) -> bool {
        matches!(
            self,
            OperatorRelation::StaircaseToAppend
                | OperatorRelation::RemoveAppendDisjoint
                | OperatorRelation::RemoveRemoteSwap
                | OperatorRelation::JdtRemoveDisjoint
                | OperatorRelation::BoxAddRemoveDisjoint
        )
    }

    fn min_index(&self) -> u32 {
        match self {
            OperatorRelation::AppendShift => 0,
            _ => 1,
        }
    }

    /// Whether the ordered pair (i, j) is in the relation's quantified
    /// range. One-index relations ignore `j`.
    fn index_ok(&self, i: u32, j: u32) -> bool {
        match self {
            OperatorRelation::AppendShift
            | OperatorRelation::RemoveBraidA
            | OperatorRelation::RemoveBraidB
            | OperatorRelation::JdtRemoveShift => true,
            OperatorRelation::StaircaseToAppend => i >= j,
            OperatorRelation::RemoveAppendDisjoint
            | OperatorRelation::JdtRemoveDisjoint
            | OperatorRelation::BoxAddRemoveDisjoint => i != j,
            // Symmetric in (i, j); the canonical order avoids re-checking
            // the same word pair swapped.
            OperatorRelation::RemoveRemoteSwap => j >= i + 2,
        }
    }

    /// Both sides of the relation as operator words. Words apply rightmost
    /// atom first.
    fn words(&self, i: u32, j: u32) -> (OperatorWord, OperatorWord) {
        use OpAtom::{Append, BoxAdd, BoxRemove, JdtAdd};
        match self {
            OperatorRelation::AppendShift => (
                OperatorWord::new(alloc::vec![Append(i)]),
                OperatorWord::new(alloc::vec![BoxRemove(i + 1), Append(i + 1)]),
            ),
            OperatorRelation::StaircaseToAppend => {
                let mut atoms: Vec<OpAtom> = (j..=i).map(BoxRemove).collect();
                atoms.push(Append(i));
                (
                    OperatorWord::new(atoms),
                    OperatorWord::new(alloc::vec![Append(j - 1)]),
                )
            }
            OperatorRelation::RemoveAppendDisjoint => (
                OperatorWord::new(alloc::vec![BoxRemove(i), Append(j)]),
                OperatorWord::new(alloc::vec![Append(j), BoxRemove(i)]),
            ),
            OperatorRelation::RemoveRemoteSwap => (
                OperatorWord::new(alloc::vec![BoxRemove(i), BoxRemove(j)]),
                OperatorWord::new(alloc::vec![BoxRemove(j), BoxRemove(i)]),
            ),
            OperatorRelation::RemoveBraidA => (
                OperatorWord::new(alloc::vec![BoxRemove(i), BoxRemove(i), BoxRemove(i + 1)]),
                OperatorWord::new(alloc::vec![BoxRemove(i), BoxRemove(i + 1), BoxRemove(i)]),
            ),
            OperatorRelation::RemoveBraidB => (
                OperatorWord::new(alloc::vec![
                    BoxRemove(i),
                    BoxRemove(i + 1),
                    BoxRemove(i + 1)
                ]),
                OperatorWord::new(alloc::vec![
                    BoxRemove(i + 1),
                    BoxRemove(i),
                    BoxRemove(i + 1)
                ]),
            ),
            OperatorRelation::JdtRemoveDisjoint => (
                OperatorWord::new(alloc::vec![JdtAdd(i), BoxRemove(j)]),
                OperatorWord::new(alloc::vec![BoxRemove(j), JdtAdd(i)]),
            ),
            OperatorRelation::JdtRemoveShift => (
                OperatorWord::new(alloc::vec![JdtAdd(i), BoxRemove(i)]),
                OperatorWord::new(alloc::vec![BoxRemove(i + 1), JdtAdd(i + 1)]),
            ),
            OperatorRelation::BoxAddRemoveDisjoint => (
                OperatorWord::new(alloc::vec![BoxAdd(i), BoxRemove(j)]),
                OperatorWord::new(alloc::vec![BoxRemove(j), BoxAdd(i)]),
            ),
        }
    }
}

fn word_counterexample(
    w: &WeakComposition,
    indices: &[u32],
    lhs_word: &OperatorWord,
    rhs_word: &OperatorWord,
    lhs: &OpResult,
    rhs: &OpResult,
) -> Counterexample {
    Counterexample {
        input: format!("{w}"),
        indices: indices.to_vec(),
        lhs: format!("{lhs_word} = {lhs}"),
        rhs: format!("{rhs_word} = {rhs}"),
        detail: format!(
            "lhs trace: {}\nrhs trace: {}",
            trace(lhs_word, w),
            trace(rhs_word, w)
        ),
    }
}

/// Check one relation strictly on every weak composition in
/// `enumerate_weak(max_part, max_len)`, with each index variable running up
/// to `min(max_index, largest_part + 2)`.
pub fn verify_relation(
    rel: OperatorRelation,
    max_part: u32,
    max_len: usize,
    max_index: u32,
) -> RelationCheck {
    let universe = format!(
        "weak compositions with <= {max_len} parts, each <= {max_part}; \
         indices <= min({max_index}, largest part + 2)"
    );
    let mut cases = 0;
    let mut failure = None;
    'outer: for w in enumerate_weak(max_part, max_len) {
        let cap = max_index.min(w.largest_part() + 2);
        let lo = rel.min_index();
        for i in lo..=cap {
            let j_range = if rel.is_two_index() { 1..=cap } else { 0..=0 };
            for j in j_range {
                if !rel.index_ok(i, j) {
                    continue;
                }
                let (lw, rw) = rel.words(i, j);
                let lv = lw.apply(&w);
                let rv = rw.apply(&w);
                cases += 1;
                if lv != rv {
                    let indices: &[u32] = if rel.is_two_index() { &[i, j] } else { &[i] };
                    failure = Some(word_counterexample(&w, indices, &lw, &rw, &lv, &rv));
                    break 'outer;
                }
            }
        }
    }
    RelationCheck {
        name: rel.name(),
        universe,
        cases,
        failure,
    }
}

/// Assert that indices above the `largest_part + 2` cap are inert: the
/// removal, box-add and jdt atoms all give Zero there, and every relation
/// still holds when at least one index lands in `(cap, cap + extra]`. This
/// is the once-asserted justification for capping indices in
/// [`verify_relation`].
pub fn verify_index_inertness(max_part: u32, max_len: usize, extra: u32) -> RelationCheck {
    let universe = format!(
        "weak compositions with <= {max_len} parts, each <= {max_part}; \
         at least one index in (largest part + 2, largest part + 2 + {extra}]"
    );
    let mut cases = 0;
    let mut failure = None;
    'outer: for w in enumerate_weak(max_part, max_len) {
        let cap = w.largest_part() + 2;
        let hi = cap + extra;
        for i in cap + 1..=hi {
            for (atom, result) in [
                (OpAtom::BoxRemove(i), box_remove(i, &w)),
                (OpAtom::BoxAdd(i), box_add(i, &w)),
                (OpAtom::JdtAdd(i), jdt_add(i, &w)),
            ] {
                cases += 1;
                if !result.is_zero() {
                    failure = Some(Counterexample {
                        input: format!("{w}"),
                        indices: alloc::vec![i],
                        lhs: format!("{atom} = {result}"),
                        rhs: String::from("0"),
                        detail: format!(
                            "{atom} must annihilate every input whose largest part is below {}",
                            i - 1
                        ),
                    });
                    break 'outer;
                }
            }
        }
        for rel in OperatorRelation::ALL {
            let lo = rel.min_index();
            for i in lo..=hi {
                let j_range = if rel.is_two_index() { 1..=hi } else { 0..=0 };
                for j in j_range {
                    if !rel.index_ok(i, j) {
                        continue;
                    }
                    let above = i > cap || (rel.is_two_index() && j > cap);
                    if !above {
                        continue;
                    }
                    let (lw, rw) = rel.words(i, j);
                    let lv = lw.apply(&w);
                    let rv = rw.apply(&w);
                    cases += 1;
                    if lv != rv {
                        let indices: &[u32] = if rel.is_two_index() { &[i, j] } else { &[i] };
                        failure = Some(word_counterexample(&w, indices, &lw, &rw, &lv, &rv));
                        break 'outer;
                    }
                }
            }
        }
    }
    RelationCheck {
        name: "index-inertness",
        universe,
        cases,
        failure,
    }
}

fn zero_contribution_failure(
    w: &WeakComposition,
    i: u32,
    case: &str,
    expectation: &str,
    dt: &OpResult,
    td: &OpResult,
) -> Counterexample {
    use OpAtom::{BoxAdd, BoxRemove};
    let dt_word = OperatorWord::new(alloc::vec![BoxRemove(i), BoxAdd(i)]);
    let td_word = OperatorWord::new(alloc::vec![BoxAdd(i), BoxRemove(i)]);
    Counterexample {
        input: format!("{w}"),
        indices: alloc::vec![i],
        lhs: format!("{dt_word} = {dt}"),
        rhs: format!("{td_word} = {td}"),
        detail: format!(
            "case: {case}\nexpected: {expectation}\nlhs trace: {}\nrhs trace: {}",
            trace(&dt_word, w),
            trace(&td_word, w)
        ),
    }
}

/// Case analysis of `d_i t_i` against `t_i d_i`, by which of the parts `i`
/// and `i - 1` are present.
///
/// When `i = 1` and no part equals 1, the raw value of `d_1 t_1` is the
/// input with a zero prepended; the "equals the input" claim holds after
/// flattening, and both facts are asserted. Every other equality here is
/// strict on weak compositions. The closing claim, that the two sides agree
/// whenever both are nonzero, is asserted in every case.
pub fn verify_zero_contribution(max_part: u32, max_len: usize, max_index: u32) -> RelationCheck {
    let universe = format!(
        "weak compositions with <= {max_len} parts, each <= {max_part}; \
         indices <= min({max_index}, largest part + 2)"
    );
    let mut cases = 0;
    let mut failure = None;
    'outer: for w in enumerate_weak(max_part, max_len) {
        let cap = max_index.min(w.largest_part() + 2);
        for i in 1..=cap {
            let dt = match box_add(i, &w) {
                OpResult::Zero => OpResult::Zero,
                OpResult::Value(v) => box_remove(i, &v),
            };
            let td = match box_remove(i, &w) {
                OpResult::Zero => OpResult::Zero,
                OpResult::Value(v) => box_add(i, &v),
            };
            cases += 1;
            let (case, ok, expectation) = if i == 1 {
                if w.has_part(1) {
                    (
                        "i = 1, some part equals 1",
                        dt == td && !dt.is_zero(),
                        "both sides equal and nonzero",
                    )
                } else {
                    let expected = OpResult::Value(w.prepended(0));
                    let flat_ok = dt.value().is_some_and(|v| v.flatten() == w.flatten());
                    (
                        "i = 1, no part equals 1",
                        dt == expected && flat_ok && td.is_zero(),
                        "lhs is the input with a zero prefix (flattening to the input), rhs is 0",
                    )
                }
            } else {
                match (w.has_part(i), w.has_part(i - 1)) {
                    (true, true) => (
                        "parts i and i-1 both present",
                        dt == td && !dt.is_zero(),
                        "both sides equal and nonzero",
                    ),
                    (true, false) => (
                        "part i present, part i-1 absent",
                        dt.is_zero() && td == OpResult::Value(w.clone()),
                        "lhs is 0, rhs is the input unchanged",
                    ),
                    (false, true) => (
                        "part i absent, part i-1 present",
                        dt == OpResult::Value(w.clone()) && td.is_zero(),
                        "lhs is the input unchanged, rhs is 0",
                    ),
                    (false, false) => (
                        "neither part i nor i-1 present",
                        dt.is_zero() && td.is_zero(),
                        "both sides 0",
                    ),
                }
            };
            let closing_claim = dt.is_zero() || td.is_zero() || dt == td;
            if !ok || !closing_claim {
                failure = Some(zero_contribution_failure(
                    &w,
                    i,
                    case,
                    expectation,
                    &dt,
                    &td,
                ));
                break 'outer;
            }
        }
    }
    RelationCheck {
        name: "zero-contribution",
        universe,
        cases,
        failure,
    }
}

/// Which up operator a duality check pairs with the down operators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UpFamily {
    /// jdt additions, the right graph's covers
    Jdt,
    /// box additions, the left graph's covers
    BoxAdd,
}

impl UpFamily {
    pub fn graph_label(&self) -> &'static str {
        match self {
            UpFamily::Jdt => "rc",
            UpFamily::BoxAdd => "lc",
        }
    }

    fn up(&self, s: &FormalSum) -> FormalSum {
        match self {
            UpFamily::Jdt => up_r(s),
            UpFamily::BoxAdd => up_l(s),
        }
    }
}

fn compositions_up_to(max_size: u32) -> impl Iterator<Item = Composition> {
    (0..=max_size).flat_map(enumerate_compositions)
}

/// Check `DU - UD = Id` on the unit sum of every composition of size at
/// most `max_size`, with U the chosen up family and D the single-box
/// removal sum.
pub fn verify_dual_graded(up: UpFamily, max_size: u32) -> RelationCheck {
    let name = match up {
        UpFamily::Jdt => "dual-graded-rc-qc",
        UpFamily::BoxAdd => "dual-graded-lc-qc",
    };
    let universe = format!("compositions of size <= {max_size}");
    let mut cases = 0;
    let mut failure = None;
    for alpha in compositions_up_to(max_size) {
        let unit = FormalSum::unit(alpha.clone());
        let du = down_q(&up.up(&unit));
        let ud = up.up(&down_q(&unit));
        let diff = &du - &ud;
        cases += 1;
        if diff != unit {
            failure = Some(Counterexample {
                input: format!("{alpha}"),
                indices: Vec::new(),
                lhs: format!("DU = {du}"),
                rhs: format!("UD = {ud}"),
                detail: format!("difference = {diff}\nexpected  = {unit}"),
            });
            break;
        }
    }
    RelationCheck {
        name,
        universe,
        cases,
        failure,
    }
}

/// Check `D~U - UD~ = D~ + Id` on the unit sum of every composition of
/// size at most `max_size`, with D~ the set-indexed removal sum.
pub fn verify_dual_filtered(up: UpFamily, max_size: u32) -> RelationCheck {
    let name = match up {
        UpFamily::Jdt => "dual-filtered-rc-qct",
        UpFamily::BoxAdd => "dual-filtered-lc-qct",
    };
    let universe = format!("compositions of size <= {max_size}");
    let mut cases = 0;
    let mut failure = None;
    for alpha in compositions_up_to(max_size) {
        let unit = FormalSum::unit(alpha.clone());
        let dtu = down_filtered(&up.up(&unit));
        let udt = up.up(&down_filtered(&unit));
        let diff = &dtu - &udt;
        let expected = &down_filtered(&unit) + &unit;
        cases += 1;
        if diff != expected {
            failure = Some(Counterexample {
                input: format!("{alpha}"),
                indices: Vec::new(),
                lhs: format!("D~U = {dtu}"),
                rhs: format!("UD~ = {udt}"),
                detail: format!("difference = {diff}\nexpected  = {expected}"),
            });
            break;
        }
    }
    RelationCheck {
        name,
        universe,
        cases,
        failure,
    }
}

/// Check the pointwise form of the graded commutator for the jdt family:
/// `(DU - UD)(alpha)` computed term by term equals the unit sum of
/// `flatten(d_1 u_1 (alpha))`. The left side goes through the formal sum
/// expansion, the right side through a two-atom operator word, so the two
/// routes are independent.
pub fn verify_graded_pointwise(max_size: u32) -> RelationCheck {
    let universe = format!("compositions of size <= {max_size}");
    let word = OperatorWord::new(alloc::vec![OpAtom::BoxRemove(1), OpAtom::JdtAdd(1)]);
    let mut cases = 0;
    let mut failure = None;
    for alpha in compositions_up_to(max_size) {
        let unit = FormalSum::unit(alpha.clone());
        let diff = &down_q(&up_r(&unit)) - &up_r(&down_q(&unit));
        let pointwise = word
            .apply(&alpha.to_weak())
            .into_value()
            .map(|v| FormalSum::unit(v.flatten()))
            .unwrap_or_else(FormalSum::zero);
        cases += 1;
        if diff != pointwise {
            failure = Some(Counterexample {
                input: format!("{alpha}"),
                indices: Vec::new(),
                lhs: format!("DU - UD = {diff}"),
                rhs: format!("{word} pointwise = {pointwise}"),
                detail: trace(&word, &alpha.to_weak()),
            });
            break;
        }
    }
    RelationCheck {
        name: "graded-commutator-pointwise",
        universe,
        cases,
        failure,
    }
}
