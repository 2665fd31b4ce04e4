//! The four operator families on weak compositions, their set-indexed
//! products, and a generic word evaluator.
//!
//! All operators either return a weak composition or the absorbing value
//! [`OpResult::Zero`], and `Zero` propagates strictly through products:
//! once any factor yields `Zero`, the whole word is `Zero`.
//!
//! Index 0 is accepted everywhere and acts as the identity, with one
//! exception: [`append`]`(0, w)` appends a literal 0 part. That convention
//! makes the relation `d_j … d_i a_i = a_(j-1)` hold on the nose at `j = 1`,
//! where the left side ends in a 0 part.

use alloc::vec::Vec;
use core::fmt;

use crate::composition::{OpResult, WeakComposition};

/// Box removal `d_i`: subtract 1 from the rightmost part equal to `i`.
///
/// Returns [`OpResult::Zero`] when no part equals `i`. The decremented part
/// is retained even when it becomes 0.
pub fn box_remove(i: u32, w: &WeakComposition) -> OpResult {
    if i == 0 {
        return OpResult::Value(w.clone());
    }
    match w.parts().iter().rposition(|&p| p == i) {
        Some(pos) => OpResult::Value(w.replaced(pos, i - 1)),
        None => OpResult::Zero,
    }
}

/// Append `a_i`: add a part `i` at the end. Total, never `Zero`.
///
/// `append(0, w)` appends a literal 0 part.
pub fn append(i: u32, w: &WeakComposition) -> WeakComposition {
    w.appended(i)
}

/// Jeu-de-taquin addition `u_i`: apply `d_(i-1) … d_2 d_1` reading right to
/// left (so `d_(i-1)` acts first), then append a part `i`.
///
/// `u_1` is plain `a_1`; index 0 is the identity.
pub fn jdt_add(i: u32, w: &WeakComposition) -> OpResult {
    if i == 0 {
        return OpResult::Value(w.clone());
    }
    box_remove_set(&IndexSet::range(i - 1), w).map(|v| append(i, &v))
}

/// Box addition `t_i`: prepend a part 1 (`i = 1`), or add 1 to the leftmost
/// part equal to `i - 1` (`i >= 2`, [`OpResult::Zero`] when absent).
///
/// Index 0 is the identity.
pub fn box_add(i: u32, w: &WeakComposition) -> OpResult {
    match i {
        0 => OpResult::Value(w.clone()),
        1 => OpResult::Value(w.prepended(1)),
        _ => match w.parts().iter().position(|&p| p == i - 1) {
            Some(pos) => OpResult::Value(w.replaced(pos, i)),
            None => OpResult::Zero,
        },
    }
}

/// A finite set of positive integers, kept strictly ascending.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    elems: Vec<u32>,
}

impl IndexSet {
    /// Collects, sorts and deduplicates. Panics if any element is 0.
    pub fn new(elems: impl IntoIterator<Item = u32>) -> Self {
        let mut elems: Vec<u32> = elems.into_iter().collect();
        assert!(
            elems.iter().all(|&e| e > 0),
            "index sets hold positive integers"
        );
        elems.sort_unstable();
        elems.dedup();
        IndexSet { elems }
    }

    pub fn empty() -> Self {
        IndexSet { elems: Vec::new() }
    }

    /// The interval `{1, 2, …, i}`; empty for `i = 0`.
    pub fn range(i: u32) -> Self {
        IndexSet {
            elems: (1..=i).collect(),
        }
    }

    pub fn singleton(i: u32) -> Self {
        assert!(i > 0, "index sets hold positive integers");
        IndexSet {
            elems: alloc::vec![i],
        }
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    pub fn min(&self) -> Option<u32> {
        self.elems.first().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.elems.last().copied()
    }

    /// Split into the elements strictly below and strictly above `pivot`.
    /// `pivot` itself, if present, lands in neither half.
    pub fn split_at(&self, pivot: u32) -> (IndexSet, IndexSet) {
        let below = self.elems.iter().copied().filter(|&e| e < pivot).collect();
        let above = self.elems.iter().copied().filter(|&e| e > pivot).collect();
        (IndexSet { elems: below }, IndexSet { elems: above })
    }

    /// The disjoint union `lower ⊎ {pivot} ⊎ upper`.
    ///
    /// Panics unless every element of `lower` is below `pivot` and every
    /// element of `upper` is above it.
    pub fn joined(lower: &IndexSet, pivot: u32, upper: &IndexSet) -> IndexSet {
        assert!(pivot > 0, "index sets hold positive integers");
        assert!(
            lower.max().is_none_or(|m| m < pivot),
            "lower half must sit strictly below the pivot"
        );
        assert!(
            upper.min().is_none_or(|m| m > pivot),
            "upper half must sit strictly above the pivot"
        );
        let mut elems = Vec::with_capacity(lower.len() + upper.len() + 1);
        elems.extend_from_slice(&lower.elems);
        elems.push(pivot);
        elems.extend_from_slice(&upper.elems);
        IndexSet { elems }
    }

    /// All nonempty subsets of `{1, …, max}`, in bitmask order.
    pub fn nonempty_subsets_of(max: u32) -> impl Iterator<Item = IndexSet> {
        assert!(
            max <= 30,
            "subset enumeration is meant for small index ranges"
        );
        (1u32..(1u32 << max)).map(move |mask| IndexSet {
            elems: (1..=max).filter(|i| mask >> (i - 1) & 1 == 1).collect(),
        })
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.elems.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Set-indexed box removal `d_I = d_(i_1) d_(i_2) … d_(i_k)` for
/// `i_1 < i_2 < … < i_k`: the largest index acts first. `Zero` absorbs.
pub fn box_remove_set(set: &IndexSet, w: &WeakComposition) -> OpResult {
    let mut cur = w.clone();
    for &i in set.elements().iter().rev() {
        match box_remove(i, &cur) {
            OpResult::Value(next) => cur = next,
            OpResult::Zero => return OpResult::Zero,
        }
    }
    OpResult::Value(cur)
}

/// Set-indexed jdt addition `u_I = u_(i_k) … u_(i_2) u_(i_1)` for
/// `i_1 < i_2 < … < i_k`: the smallest index acts first. `Zero` absorbs.
pub fn jdt_add_set(set: &IndexSet, w: &WeakComposition) -> OpResult {
    let mut cur = w.clone();
    for &i in set.elements() {
        match jdt_add(i, &cur) {
            OpResult::Value(next) => cur = next,
            OpResult::Zero => return OpResult::Zero,
        }
    }
    OpResult::Value(cur)
}

/// One operator letter in a word.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum OpAtom {
    /// `d_i`
    BoxRemove(u32),
    /// `a_i`
    Append(u32),
    /// `u_i`
    JdtAdd(u32),
    /// `t_i`
    BoxAdd(u32),
}

impl OpAtom {
    pub fn apply(&self, w: &WeakComposition) -> OpResult {
        match *self {
            OpAtom::BoxRemove(i) => box_remove(i, w),
            OpAtom::Append(i) => OpResult::Value(append(i, w)),
            OpAtom::JdtAdd(i) => jdt_add(i, w),
            OpAtom::BoxAdd(i) => box_add(i, w),
        }
    }

    pub fn index(&self) -> u32 {
        match *self {
            OpAtom::BoxRemove(i) | OpAtom::Append(i) | OpAtom::JdtAdd(i) | OpAtom::BoxAdd(i) => i,
        }
    }

    /// Single-letter code, also used by the JSON form of words.
    pub fn symbol(&self) -> char {
        match self {
            OpAtom::BoxRemove(_) => 'd',
            OpAtom::Append(_) => 'a',
            OpAtom::JdtAdd(_) => 'u',
            OpAtom::BoxAdd(_) => 't',
        }
    }
}

impl fmt::Display for OpAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.symbol(), self.index())
    }
}

/// A finite product of operator letters, written leftmost-acts-last and
/// evaluated rightmost first, exactly like operator composition.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OperatorWord {
    atoms: Vec<OpAtom>,
}

impl OperatorWord {
    pub fn new(atoms: Vec<OpAtom>) -> Self {
        OperatorWord { atoms }
    }

    /// The empty word.
    pub fn identity() -> Self {
        OperatorWord { atoms: Vec::new() }
    }

    pub fn atoms(&self) -> &[OpAtom] {
        &self.atoms
    }

    /// Evaluate the word on `w`, rightmost atom first. `Zero` absorbs: as
    /// soon as one atom returns [`OpResult::Zero`] the word does too.
    pub fn apply(&self, w: &WeakComposition) -> OpResult {
        let mut cur = w.clone();
        for atom in self.atoms.iter().rev() {
            match atom.apply(&cur) {
                OpResult::Value(next) => cur = next,
                OpResult::Zero => return OpResult::Zero,
            }
        }
        OpResult::Value(cur)
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return write!(f, "id");
        }
        for (k, atom) in self.atoms.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{atom}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn wc(parts: &[u32]) -> WeakComposition {
        WeakComposition::new(parts.to_vec())
    }

    fn val(parts: &[u32]) -> OpResult {
        OpResult::Value(wc(parts))
    }

    #[test]
    fn box_remove_hits_the_rightmost_matching_part() {
        let a = wc(&[2, 1, 3]);
        assert_eq!(box_remove(1, &a), val(&[2, 0, 3]));
        assert_eq!(box_remove(2, &a), val(&[1, 1, 3]));
        assert_eq!(box_remove(3, &a), val(&[2, 1, 2]));
        assert_eq!(box_remove(4, &a), OpResult::Zero);
        assert_eq!(box_remove(5, &a), OpResult::Zero);
        // Rightmost among several candidates.
        assert_eq!(box_remove(1, &wc(&[1, 2, 1])), val(&[1, 2, 0]));
        // Index 0 is the identity.
        assert_eq!(box_remove(0, &a), val(&[2, 1, 3]));
    }

    #[test]
    fn box_remove_set_applies_the_largest_index_first() {
        let b = wc(&[3, 1, 4, 2, 1]);
        assert_eq!(
            box_remove_set(&IndexSet::range(3), &b),
            val(&[2, 1, 4, 1, 0])
        );
        assert_eq!(
            box_remove_set(&IndexSet::new([2, 4]), &wc(&[4, 1, 4, 2, 1])),
            val(&[4, 1, 3, 1, 1])
        );
        assert_eq!(
            box_remove_set(&IndexSet::empty(), &b),
            val(&[3, 1, 4, 2, 1])
        );
        assert_eq!(box_remove_set(&IndexSet::new([5]), &b), OpResult::Zero);
    }

    #[test]
    fn append_is_total_and_literal_at_zero() {
        assert_eq!(append(2, &wc(&[2, 1, 3])), wc(&[2, 1, 3, 2]));
        assert_eq!(append(0, &wc(&[2, 1])), wc(&[2, 1, 0]));
        assert_eq!(append(1, &WeakComposition::empty()), wc(&[1]));
    }

    #[test]
    fn jdt_add_examples() {
        assert_eq!(jdt_add(4, &wc(&[3, 1, 4, 2, 1])), val(&[2, 1, 4, 1, 0, 4]));
        assert_eq!(jdt_add(1, &wc(&[2, 1])), val(&[2, 1, 1]));
        assert_eq!(jdt_add(2, &wc(&[2, 1, 3])), val(&[2, 0, 3, 2]));
        assert_eq!(jdt_add(5, &wc(&[2, 1, 3])), OpResult::Zero);
        assert_eq!(jdt_add(0, &wc(&[2, 1, 3])), val(&[2, 1, 3]));
        assert_eq!(jdt_add(1, &WeakComposition::empty()), val(&[1]));
        assert_eq!(jdt_add(2, &WeakComposition::empty()), OpResult::Zero);
    }

    #[test]
    fn jdt_add_set_composes_smallest_first() {
        // u_{1,2} on (1): u_1 gives (1,1), then u_2 = a_2 d_1 gives (1,0,2).
        let by_set = jdt_add_set(&IndexSet::new([1, 2]), &wc(&[1]));
        let by_steps = jdt_add(1, &wc(&[1])).and_then(|v| jdt_add(2, &v));
        assert_eq!(by_set, val(&[1, 0, 2]));
        assert_eq!(by_set, by_steps);
    }

    #[test]
    fn box_add_examples() {
        let b = wc(&[3, 1, 4, 2, 1]);
        assert_eq!(box_add(1, &b), val(&[1, 3, 1, 4, 2, 1]));
        assert_eq!(box_add(2, &b), val(&[3, 2, 4, 2, 1]));
        assert_eq!(box_add(3, &b), val(&[3, 1, 4, 3, 1]));
        assert_eq!(box_add(4, &b), val(&[4, 1, 4, 2, 1]));
        assert_eq!(box_add(5, &b), val(&[3, 1, 5, 2, 1]));
        for i in 6..=9 {
            assert_eq!(box_add(i, &b), OpResult::Zero);
        }
        assert_eq!(box_add(0, &b), val(&[3, 1, 4, 2, 1]));
        assert_eq!(box_add(1, &WeakComposition::empty()), val(&[1]));
        assert_eq!(box_add(2, &WeakComposition::empty()), OpResult::Zero);
    }

    #[test]
    fn words_evaluate_rightmost_first_and_zero_absorbs() {
        // a_4 d_1 d_2 d_3 is jdt addition u_4.
        let word = OperatorWord::new(vec![
            OpAtom::Append(4),
            OpAtom::BoxRemove(1),
            OpAtom::BoxRemove(2),
            OpAtom::BoxRemove(3),
        ]);
        assert_eq!(word.apply(&wc(&[3, 1, 4, 2, 1])), val(&[2, 1, 4, 1, 0, 4]));

        // t_4 d_6 d_5 d_4 d_1 on (2, 6, 1, 4).
        let word = OperatorWord::new(vec![
            OpAtom::BoxAdd(4),
            OpAtom::BoxRemove(1),
            OpAtom::BoxRemove(4),
            OpAtom::BoxRemove(5),
            OpAtom::BoxRemove(6),
        ]);
        assert_eq!(word.apply(&wc(&[2, 6, 1, 4])), val(&[2, 4, 0, 4]));

        // Zero absorbs: the trailing d_5 kills everything.
        let word = OperatorWord::new(vec![OpAtom::Append(1), OpAtom::BoxRemove(5)]);
        assert_eq!(word.apply(&wc(&[2, 1, 3])), OpResult::Zero);
        // a_2 d_4 on (2,1,3) is Zero even though a_2 alone is total.
        let word = OperatorWord::new(vec![OpAtom::Append(2), OpAtom::BoxRemove(4)]);
        assert_eq!(word.apply(&wc(&[2, 1, 3])), OpResult::Zero);

        assert_eq!(OperatorWord::identity().apply(&wc(&[2, 1])), val(&[2, 1]));
    }

    #[test]
    fn index_zero_atoms_act_as_the_identity_except_literal_append() {
        let w = wc(&[2, 1]);
        assert_eq!(OpAtom::BoxRemove(0).apply(&w), val(&[2, 1]));
        assert_eq!(OpAtom::JdtAdd(0).apply(&w), val(&[2, 1]));
        assert_eq!(OpAtom::BoxAdd(0).apply(&w), val(&[2, 1]));
        assert_eq!(OpAtom::Append(0).apply(&w), val(&[2, 1, 0]));
    }

    #[test]
    fn index_set_basics() {
        let s = IndexSet::new([4, 1, 6, 5, 4]);
        assert_eq!(s.elements(), &[1, 4, 5, 6]);
        assert_eq!(s.to_string(), "{1, 4, 5, 6}");
        assert_eq!(IndexSet::range(3).elements(), &[1, 2, 3]);
        assert!(IndexSet::range(0).is_empty());
        let (below, above) = s.split_at(4);
        assert_eq!(below.elements(), &[1]);
        assert_eq!(above.elements(), &[5, 6]);
        assert_eq!(
            IndexSet::joined(&below, 3, &above).elements(),
            &[1, 3, 5, 6]
        );
        assert_eq!(IndexSet::nonempty_subsets_of(4).count(), 15);
        assert_eq!(IndexSet::nonempty_subsets_of(0).count(), 0);
    }

    #[test]
    fn word_display() {
        let word = OperatorWord::new(vec![OpAtom::BoxAdd(4), OpAtom::BoxRemove(6)]);
        assert_eq!(word.to_string(), "t_4 d_6");
        assert_eq!(OperatorWord::identity().to_string(), "id");
    }
}
