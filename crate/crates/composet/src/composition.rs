//! Weak compositions, compositions, and enumeration of finite universes.
//!
//! Invariants maintained by this module:
//!
//! * [`Composition`] holds strictly positive parts only; [`WeakComposition`]
//!   allows zeros.
//! * [`OpResult::Zero`] is a distinguished absorbing value, different from
//!   the empty composition `()`.
//! * [`Composition`] orders canonically: by size, then by length, then
//!   lexicographically on parts. Enumeration functions emit exactly that
//!   order, so sorted containers and enumeration agree everywhere.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A finite sequence of nonnegative integers.
///
/// Zero parts are legal and meaningful: the operators act on weak
/// compositions and may create or consume zero parts before a final
/// [`flatten`](WeakComposition::flatten) removes them. The empty sequence is
/// a valid weak composition.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakComposition {
    parts: Vec<u32>,
}

impl WeakComposition {
    pub fn new(parts: Vec<u32>) -> Self {
        WeakComposition { parts }
    }

    pub fn empty() -> Self {
        WeakComposition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Largest part, with `largest_part(()) = 0`.
    pub fn largest_part(&self) -> u32 {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    /// Whether some part equals `v`.
    pub fn has_part(&self, v: u32) -> bool {
        self.parts.contains(&v)
    }

    /// Remove all zero parts, keeping the order of the remaining ones.
    pub fn flatten(&self) -> Composition {
        Composition {
            parts: self.parts.iter().copied().filter(|&p| p != 0).collect(),
        }
    }

    /// Copy with `part` appended at the end.
    pub fn appended(&self, part: u32) -> WeakComposition {
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.extend_from_slice(&self.parts);
        parts.push(part);
        WeakComposition { parts }
    }

    /// Copy with `part` prepended at the front.
    pub fn prepended(&self, part: u32) -> WeakComposition {
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(part);
        parts.extend_from_slice(&self.parts);
        WeakComposition { parts }
    }

    /// Copy with the part at `pos` replaced by `value`.
    pub(crate) fn replaced(&self, pos: usize, value: u32) -> WeakComposition {
        let mut parts = self.parts.clone();
        parts[pos] = value;
        WeakComposition { parts }
    }
}

impl From<Composition> for WeakComposition {
    fn from(c: Composition) -> Self {
        WeakComposition { parts: c.parts }
    }
}

impl From<&Composition> for WeakComposition {
    fn from(c: &Composition) -> Self {
        WeakComposition {
            parts: c.parts.clone(),
        }
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_parts(&self.parts, f)
    }
}

impl fmt::Debug for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_parts(&self.parts, f)
    }
}

/// A finite sequence of strictly positive integers.
///
/// These are the vertices of every graph in [`crate::graph`] and the keys of
/// every [`crate::formal::FormalSum`]. Construct one directly with
/// [`Composition::new`] (which checks positivity) or from a weak composition
/// via [`WeakComposition::flatten`].
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Panics if any part is zero.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.iter().all(|&p| p > 0),
            "composition parts must be positive"
        );
        Composition { parts }
    }

    /// `None` if any part is zero. For validating external data.
    pub fn try_new(parts: Vec<u32>) -> Option<Self> {
        if parts.iter().all(|&p| p > 0) {
            Some(Composition { parts })
        } else {
            None
        }
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Largest part, with `largest_part(()) = 0`.
    pub fn largest_part(&self) -> u32 {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    pub fn to_weak(&self) -> WeakComposition {
        WeakComposition {
            parts: self.parts.clone(),
        }
    }
}

impl Ord for Composition {
    /// Canonical order: ascending size, then ascending length, then
    /// lexicographic on parts.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.len().cmp(&other.parts.len()))
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_parts(&self.parts, f)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_parts(&self.parts, f)
    }
}

fn display_parts(parts: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// Result of applying a box-type operator: a weak composition, or the
/// absorbing value `Zero`.
///
/// `Zero` is not the empty composition: `()` is the rank-0 vertex of every
/// composition graph, while `Zero` annihilates whole operator words.
#[derive(Clone, PartialEq, Eq)]
pub enum OpResult {
    Zero,
    Value(WeakComposition),
}

impl OpResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, OpResult::Zero)
    }

    pub fn value(&self) -> Option<&WeakComposition> {
        match self {
            OpResult::Zero => None,
            OpResult::Value(w) => Some(w),
        }
    }

    pub fn into_value(self) -> Option<WeakComposition> {
        match self {
            OpResult::Zero => None,
            OpResult::Value(w) => Some(w),
        }
    }

    pub fn map(self, f: impl FnOnce(WeakComposition) -> WeakComposition) -> OpResult {
        match self {
            OpResult::Zero => OpResult::Zero,
            OpResult::Value(w) => OpResult::Value(f(w)),
        }
    }

    pub fn and_then(self, f: impl FnOnce(WeakComposition) -> OpResult) -> OpResult {
        match self {
            OpResult::Zero => OpResult::Zero,
            OpResult::Value(w) => f(w),
        }
    }
}

impl From<WeakComposition> for OpResult {
    fn from(w: WeakComposition) -> Self {
        OpResult::Value(w)
    }
}

impl fmt::Display for OpResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpResult::Zero => write!(f, "0"),
            OpResult::Value(w) => write!(f, "{w}"),
        }
    }
}

impl fmt::Debug for OpResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All compositions of `n`, in canonical order (ascending length, then
/// lexicographic). There are `2^(n-1)` of them for `n >= 1`, and exactly
/// `()` for `n = 0`.
pub fn enumerate_compositions(n: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Composition::empty());
        return out;
    }
    let mut prefix = Vec::new();
    for len in 1..=n {
        emit_compositions(n, len, &mut prefix, &mut out);
    }
    out
}

fn emit_compositions(
    remaining: u32,
    slots: u32,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Composition>,
) {
    if slots == 1 {
        prefix.push(remaining);
        out.push(Composition {
            parts: prefix.clone(),
        });
        prefix.pop();
        return;
    }
    // Leave at least 1 per remaining slot.
    for first in 1..=remaining - (slots - 1) {
        prefix.push(first);
        emit_compositions(remaining - first, slots - 1, prefix, out);
        prefix.pop();
    }
}

/// All weak compositions with at most `max_len` parts, each part at most
/// `max_part`, ordered by length and then lexicographically. This is the
/// standard finite universe for the relation checks.
pub fn enumerate_weak(max_part: u32, max_len: usize) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    out.push(WeakComposition::empty());
    for len in 1..=max_len {
        let mut cur = alloc::vec![0u32; len];
        loop {
            out.push(WeakComposition { parts: cur.clone() });
            // Odometer increment on the rightmost digit below max_part.
            match cur.iter().rposition(|&p| p < max_part) {
                Some(pos) => {
                    cur[pos] += 1;
                    for p in cur[pos + 1..].iter_mut() {
                        *p = 0;
                    }
                }
                None => break,
            }
        }
    }
    out
}
