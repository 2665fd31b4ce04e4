//! The bijection between the two families of set-indexed words that add
//! one box relative to a fixed composition: left words `t_i d_I` and right
//! words `d_I t_i`, each with `i` in `I`.
//!
//! Relative to a composition `alpha`, `Y` collects the left words that do
//! not annihilate `alpha`, `X` the right words, and `Z` the right words
//! whose box-add index stays weakly below the largest part. `phi` maps `Y`
//! onto `Z` with inverse `psi`, preserving the evaluation on `alpha` up to
//! at most one prepended zero. `verify_phi` checks every claimed property
//! exhaustively for one `alpha`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::composition::{Composition, OpResult, WeakComposition};
use crate::ops::{box_remove_set, IndexSet, OpAtom, OperatorWord};
use crate::verify::{Counterexample, RelationCheck};

/// Which side of a set-indexed word the box-add atom sits on.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TSide {
    /// `t_i d_I`: remove over `I` first, then add.
    Left,
    /// `d_I t_i`: add first, then remove over `I`.
    Right,
}

/// A set-indexed word `t_i d_I` or `d_I t_i` with `i` in `I`.
///
/// Words compare structurally, as (side, index, set) triples, never by
/// their action, so injectivity statements about `phi` are meaningful.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TWord {
    side: TSide,
    index: u32,
    set: IndexSet,
}

impl TWord {
    /// The left word `t_i d_I`. Panics unless `i` is in `set`.
    pub fn left(i: u32, set: IndexSet) -> TWord {
        assert!(set.contains(i), "the box-add index must belong to the set");
        TWord {
            side: TSide::Left,
            index: i,
            set,
        }
    }

    /// The right word `d_I t_i`. Panics unless `i` is in `set`.
    pub fn right(i: u32, set: IndexSet) -> TWord {
        assert!(set.contains(i), "the box-add index must belong to the set");
        TWord {
            side: TSide::Right,
            index: i,
            set,
        }
    }

    pub fn side(&self) -> TSide {
        self.side
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn set(&self) -> &IndexSet {
        &self.set
    }

    /// The elements of the set strictly below the box-add index.
    pub fn lower_set(&self) -> IndexSet {
        self.set.split_at(self.index).0
    }

    /// The elements of the set strictly above the box-add index.
    pub fn upper_set(&self) -> IndexSet {
        self.set.split_at(self.index).1
    }

    /// Expand into an atom word; removal atoms are ordered so the largest
    /// index applies first.
    pub fn to_word(&self) -> OperatorWord {
        let removes = self.set.elements().iter().copied().map(OpAtom::BoxRemove);
        let atoms: Vec<OpAtom> = match self.side {
            TSide::Left => core::iter::once(OpAtom::BoxAdd(self.index))
                .chain(removes)
                .collect(),
            TSide::Right => removes.chain([OpAtom::BoxAdd(self.index)]).collect(),
        };
        OperatorWord::new(atoms)
    }

    pub fn apply(&self, alpha: &Composition) -> OpResult {
        self.to_word().apply(&alpha.to_weak())
    }
}

impl fmt::Display for TWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            TSide::Left => write!(f, "t_{} d_{}", self.index, self.set),
            TSide::Right => write!(f, "d_{} t_{}", self.set, self.index),
        }
    }
}

/// The five word sets relative to one composition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WordSets {
    pub alpha: Composition,
    /// Right words not annihilating alpha.
    pub x: BTreeSet<TWord>,
    /// Left words not annihilating alpha.
    pub y: BTreeSet<TWord>,
    /// Right words in `x` whose box-add index is at most the largest part.
    pub z: BTreeSet<TWord>,
    /// Singleton-set members of `x`.
    pub p: BTreeSet<TWord>,
    /// Singleton-set members of `y`.
    pub q: BTreeSet<TWord>,
}

/// Build the word sets with `I` ranging over nonempty subsets of
/// `[1..index_bound]` and `i` over `I`. The bound must be at least
/// `largest_part(alpha) + 1`; `verify_phi` checks separately that larger
/// bounds add nothing.
pub fn build_word_sets(alpha: &Composition, index_bound: u32) -> WordSets {
    assert!(
        index_bound > alpha.largest_part(),
        "the index bound must exceed the largest part"
    );
    let m = alpha.largest_part();
    let mut sets = WordSets {
        alpha: alpha.clone(),
        x: BTreeSet::new(),
        y: BTreeSet::new(),
        z: BTreeSet::new(),
        p: BTreeSet::new(),
        q: BTreeSet::new(),
    };
    for set in IndexSet::nonempty_subsets_of(index_bound) {
        for &i in set.elements() {
            let right = TWord::right(i, set.clone());
            if !right.apply(alpha).is_zero() {
                if i <= m {
                    sets.z.insert(right.clone());
                }
                if set.len() == 1 {
                    sets.p.insert(right.clone());
                }
                sets.x.insert(right);
            }
            let left = TWord::left(i, set.clone());
            if !left.apply(alpha).is_zero() {
                if set.len() == 1 {
                    sets.q.insert(left.clone());
                }
                sets.y.insert(left);
            }
        }
    }
    sets
}

/// Rejection from [`phi`] or [`psi`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PhiError {
    NotInY(String),
    NotInZ(String),
}

impl fmt::Display for PhiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhiError::NotInY(msg) => write!(f, "word is not in Y: {msg}"),
            PhiError::NotInZ(msg) => write!(f, "word is not in Z: {msg}"),
        }
    }
}

impl core::error::Error for PhiError {}

/// Map a left word `t_i d_I` in `Y` to a right word: with `k` the largest
/// part of `alpha` strictly below `i` (0 if none), the image is
/// `d_{I'} t_{k+1}` where `I'` replaces `i` by `k + 1`.
pub fn phi(w: &TWord, alpha: &Composition) -> Result<TWord, PhiError> {
    if w.side() != TSide::Left {
        return Err(PhiError::NotInY(format!("{w} is a right word")));
    }
    if w.apply(alpha).is_zero() {
        return Err(PhiError::NotInY(format!("{w} annihilates {alpha}")));
    }
    let i = w.index();
    let k = alpha
        .parts()
        .iter()
        .copied()
        .filter(|&p| p < i)
        .max()
        .unwrap_or(0);
    let new_index = k + 1;
    let set = IndexSet::joined(&w.lower_set(), new_index, &w.upper_set());
    Ok(TWord::right(new_index, set))
}

/// Map a right word `d_I t_i` in `Z` back to a left word: with `i''` the
/// smallest part of `d_B(alpha)` weakly above `i` (`B` the set elements
/// above `i`), the image is `t_{i''} d_{I''}` where `I''` replaces `i` by
/// `i''`.
pub fn psi(w: &TWord, alpha: &Composition) -> Result<TWord, PhiError> {
    if w.side() != TSide::Right {
        return Err(PhiError::NotInZ(format!("{w} is a left word")));
    }
    if w.apply(alpha).is_zero() {
        return Err(PhiError::NotInZ(format!("{w} annihilates {alpha}")));
    }
    let i = w.index();
    if i > alpha.largest_part() {
        return Err(PhiError::NotInZ(format!(
            "{w} adds a box above the largest part of {alpha}"
        )));
    }
    let upper = w.upper_set();
    let gamma = box_remove_set(&upper, &alpha.to_weak())
        .into_value()
        .expect("removals above i stay nonzero when the whole word is nonzero");
    let new_index = gamma
        .parts()
        .iter()
        .copied()
        .filter(|&p| p >= i)
        .min()
        .expect("a part weakly above i exists once the word is in Z");
    let set = IndexSet::joined(&w.lower_set(), new_index, &upper);
    Ok(TWord::left(new_index, set))
}

/// One row of the tabulated bijection: a word of `Y`, its image, and both
/// evaluations on `alpha`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PhiRow {
    pub word: TWord,
    pub image: TWord,
    pub word_value: WeakComposition,
    pub image_value: WeakComposition,
}

/// Tabulate `phi` over all of `Y` for `alpha`, in word order.
pub fn phi_rows(alpha: &Composition) -> Vec<PhiRow> {
    let sets = build_word_sets(alpha, alpha.largest_part() + 1);
    sets.y
        .iter()
        .map(|w| {
            let image = phi(w, alpha).expect("members of Y are in phi's domain");
            let word_value = w
                .apply(alpha)
                .into_value()
                .expect("members of Y do not annihilate alpha");
            let image_value = image
                .apply(alpha)
                .into_value()
                .expect("phi images do not annihilate alpha");
            PhiRow {
                word: w.clone(),
                image,
                word_value,
                image_value,
            }
        })
        .collect()
}

/// Outcome of [`verify_phi`]: one check per clause.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PhiReport {
    pub alpha: Composition,
    pub clauses: Vec<RelationCheck>,
}

impl PhiReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(RelationCheck::passed)
    }
}

impl fmt::Display for PhiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "phi report for {}", self.alpha)?;
        for clause in &self.clauses {
            writeln!(f, "  {clause}")?;
        }
        Ok(())
    }
}

fn word_pair_failure(label: &str, w: &TWord, detail: String) -> Counterexample {
    Counterexample {
        input: format!("{w}"),
        indices: alloc::vec![w.index()],
        lhs: String::from(label),
        rhs: String::new(),
        detail,
    }
}

fn check_universe_stability(alpha: &Composition, index_bound: u32) -> RelationCheck {
    let narrow = build_word_sets(alpha, index_bound);
    let wide = build_word_sets(alpha, index_bound + 2);
    let m = u64::from(index_bound) + 2;
    let cases = 2 * m * (1u64 << (m - 1));
    let failure = if narrow.x != wide.x {
        wide.x
            .symmetric_difference(&narrow.x)
            .next()
            .map(|w| word_pair_failure("X changed with the index bound", w, format!("{w}")))
    } else if narrow.y != wide.y {
        wide.y
            .symmetric_difference(&narrow.y)
            .next()
            .map(|w| word_pair_failure("Y changed with the index bound", w, format!("{w}")))
    } else {
        None
    };
    RelationCheck {
        name: "word-universe-stability",
        universe: format!(
            "index sets over [1..{index_bound}] against [1..{}]",
            index_bound + 2
        ),
        cases,
        failure,
    }
}

fn check_phi_into_z(alpha: &Composition, sets: &WordSets) -> RelationCheck {
    let mut cases = 0;
    let mut failure = None;
    for w in &sets.y {
        cases += 1;
        match phi(w, alpha) {
            Err(e) => {
                failure = Some(word_pair_failure(
                    "phi rejected a member of Y",
                    w,
                    format!("{e}"),
                ));
                break;
            }
            Ok(img) => {
                if !sets.z.contains(&img) {
                    failure = Some(word_pair_failure(
                        "phi image left Z",
                        w,
                        format!("phi({w}) = {img} is not in Z"),
                    ));
                    break;
                }
            }
        }
    }
    RelationCheck {
        name: "phi-maps-y-into-z",
        universe: format!("all {} words of Y", sets.y.len()),
        cases,
        failure,
    }
}

fn check_inverse(alpha: &Composition, sets: &WordSets) -> RelationCheck {
    let mut cases = 0;
    let mut failure = None;
    let mut image = BTreeSet::new();
    'outer: {
        for w in &sets.y {
            cases += 1;
            let img = match phi(w, alpha) {
                Ok(img) => img,
                Err(e) => {
                    failure = Some(word_pair_failure(
                        "phi rejected a member of Y",
                        w,
                        format!("{e}"),
                    ));
                    break 'outer;
                }
            };
            match psi(&img, alpha) {
                Ok(back) if back == *w => {}
                Ok(back) => {
                    failure = Some(word_pair_failure(
                        "psi(phi(w)) differs from w",
                        w,
                        format!("phi({w}) = {img}, psi of that = {back}"),
                    ));
                    break 'outer;
                }
                Err(e) => {
                    failure = Some(word_pair_failure(
                        "psi rejected a phi image",
                        w,
                        format!("phi({w}) = {img}: {e}"),
                    ));
                    break 'outer;
                }
            }
            image.insert(img);
        }
        if image != sets.z {
            failure = sets.z.symmetric_difference(&image).next().map(|w| {
                word_pair_failure(
                    "phi(Y) differs from Z",
                    w,
                    format!("{w} is in exactly one of phi(Y) and Z"),
                )
            });
            break 'outer;
        }
        for w in &sets.z {
            cases += 1;
            let pre = match psi(w, alpha) {
                Ok(pre) => pre,
                Err(e) => {
                    failure = Some(word_pair_failure(
                        "psi rejected a member of Z",
                        w,
                        format!("{e}"),
                    ));
                    break 'outer;
                }
            };
            match phi(&pre, alpha) {
                Ok(round) if round == *w => {}
                Ok(round) => {
                    failure = Some(word_pair_failure(
                        "phi(psi(w)) differs from w",
                        w,
                        format!("psi({w}) = {pre}, phi of that = {round}"),
                    ));
                    break 'outer;
                }
                Err(e) => {
                    failure = Some(word_pair_failure(
                        "phi rejected a psi image",
                        w,
                        format!("psi({w}) = {pre}: {e}"),
                    ));
                    break 'outer;
                }
            }
        }
    }
    RelationCheck {
        name: "phi-psi-inverse",
        universe: format!("{} words of Y and {} of Z", sets.y.len(), sets.z.len()),
        cases,
        failure,
    }
}

fn check_action_cases(alpha: &Composition, sets: &WordSets) -> RelationCheck {
    let mut cases = 0;
    let mut failure = None;
    for w in &sets.y {
        cases += 1;
        let wv = match w.apply(alpha).into_value() {
            Some(v) => v,
            None => {
                failure = Some(word_pair_failure(
                    "member of Y annihilates alpha",
                    w,
                    String::new(),
                ));
                break;
            }
        };
        let img = match phi(w, alpha) {
            Ok(img) => img,
            Err(e) => {
                failure = Some(word_pair_failure(
                    "phi rejected a member of Y",
                    w,
                    format!("{e}"),
                ));
                break;
            }
        };
        let iv = match img.apply(alpha).into_value() {
            Some(v) => v,
            None => {
                failure = Some(word_pair_failure(
                    "phi image annihilates alpha",
                    w,
                    format!("phi({w}) = {img}"),
                ));
                break;
            }
        };
        if iv.flatten() != wv.flatten() {
            failure = Some(word_pair_failure(
                "flattened actions differ",
                w,
                format!("{w} gives {wv}, phi({w}) = {img} gives {iv}"),
            ));
            break;
        }
        let i = w.index();
        let (case, ok) = if i == 1 {
            ("index 1: strictly equal", iv == wv)
        } else {
            let gamma = box_remove_set(&w.upper_set(), &alpha.to_weak())
                .into_value()
                .expect("removals above i stay nonzero when the whole word is nonzero");
            let min_part = gamma
                .parts()
                .iter()
                .copied()
                .min()
                .expect("alpha is nonempty whenever Y is");
            if min_part == i {
                (
                    "index is the smallest remaining part: zero prefix",
                    iv == wv.prepended(0),
                )
            } else {
                (
                    "index above the smallest remaining part: strictly equal",
                    iv == wv,
                )
            }
        };
        if !ok {
            failure = Some(word_pair_failure(
                "strict action case failed",
                w,
                format!("case: {case}\n{w} gives {wv}\nphi({w}) = {img} gives {iv}"),
            ));
            break;
        }
    }
    RelationCheck {
        name: "phi-action-three-cases",
        universe: format!("all {} words of Y", sets.y.len()),
        cases,
        failure,
    }
}

fn check_q_onto_p(alpha: &Composition, sets: &WordSets) -> RelationCheck {
    let m = alpha.largest_part();
    let top = TWord::right(m + 1, IndexSet::singleton(m + 1));
    let mut cases = 0;
    let mut failure = None;
    let mut image = BTreeSet::new();
    for w in &sets.q {
        cases += 1;
        match phi(w, alpha) {
            Ok(img) => {
                image.insert(img);
            }
            Err(e) => {
                failure = Some(word_pair_failure(
                    "phi rejected a member of Q",
                    w,
                    format!("{e}"),
                ));
                break;
            }
        }
    }
    if failure.is_none() {
        let mut expected = sets.p.clone();
        if !expected.remove(&top) {
            failure = Some(word_pair_failure(
                "the top word is missing from P",
                &top,
                format!("{top} should always be a nonzero singleton word"),
            ));
        } else if image != expected {
            failure = expected.symmetric_difference(&image).next().map(|w| {
                word_pair_failure(
                    "phi(Q) differs from P minus the top word",
                    w,
                    format!("{w} is in exactly one of phi(Q) and P \\ {{{top}}}"),
                )
            });
        }
        cases += sets.p.len() as u64;
    }
    RelationCheck {
        name: "phi-q-onto-p-minus-top",
        universe: format!("{} words of Q against {} of P", sets.q.len(), sets.p.len()),
        cases,
        failure,
    }
}

fn check_top_word(alpha: &Composition) -> RelationCheck {
    let m = alpha.largest_part();
    let top = TWord::right(m + 1, IndexSet::singleton(m + 1));
    let value = top.apply(alpha);
    let ok = match value.value() {
        None => false,
        Some(v) => v.flatten() == *alpha && (alpha.is_empty() || *v == alpha.to_weak()),
    };
    RelationCheck {
        name: "top-word-fixes-alpha",
        universe: format!("the single word {top}"),
        cases: 1,
        failure: if ok {
            None
        } else {
            Some(word_pair_failure(
                "the top word moved alpha",
                &top,
                format!("{top} on {alpha} gives {value}"),
            ))
        },
    }
}

/// Check every stated property of the bijection for one composition: the
/// index universe is stable, `phi` lands in `Z`, `psi` inverts it both
/// ways with image exactly `Z`, the strict action matches the three-case
/// lemma, `phi(Q)` is `P` minus the top word, and the top word fixes
/// `alpha`.
pub fn verify_phi(alpha: &Composition) -> PhiReport {
    let m = alpha.largest_part();
    let sets = build_word_sets(alpha, m + 1);
    let clauses = alloc::vec![
        check_universe_stability(alpha, m + 1),
        check_phi_into_z(alpha, &sets),
        check_inverse(alpha, &sets),
        check_action_cases(alpha, &sets),
        check_q_onto_p(alpha, &sets),
        check_top_word(alpha),
    ];
    PhiReport {
        alpha: alpha.clone(),
        clauses,
    }
}
