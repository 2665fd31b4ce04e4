//! Integer linear combinations of compositions and the linear up/down
//! operators acting on them.
//!
//! Invariants maintained by [`FormalSum`]:
//!
//! * keys are flattened compositions (no zero parts),
//! * no key maps to a zero coefficient,
//! * iteration order is the canonical composition order.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::composition::Composition;
use crate::ops::{self, IndexSet};

/// A finitely supported map from compositions to integer coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: BTreeMap<Composition, BigInt>,
}

impl FormalSum {
    pub fn zero() -> Self {
        FormalSum {
            terms: BTreeMap::new(),
        }
    }

    /// The single term `1 * c`.
    pub fn unit(c: Composition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(c, BigInt::from(1));
        FormalSum { terms }
    }

    pub fn from_terms<I, K>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Composition, K)>,
        K: Into<BigInt>,
    {
        let mut sum = FormalSum::zero();
        for (c, k) in terms {
            sum.add_term(c, k);
        }
        sum
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `c`, zero when absent.
    pub fn coeff(&self, c: &Composition) -> BigInt {
        self.terms.get(c).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Add `k * c`, dropping the key if the coefficient cancels to zero.
    pub fn add_term<K: Into<BigInt>>(&mut self, c: Composition, k: K) {
        let k = k.into();
        if k.is_zero() {
            return;
        }
        let entry = self.terms.entry(c);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(k);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in canonical composition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Composition, &BigInt)> {
        self.terms.iter()
    }

    /// Number of distinct compositions with nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients (the number of terms counted with
    /// multiplicity, for nonnegative sums).
    pub fn total_weight(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &FormalSum {
    type Output = FormalSum;

    fn add(self, rhs: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        for (c, k) in rhs.iter() {
            out.add_term(c.clone(), k.clone());
        }
        out
    }
}

impl Sub for &FormalSum {
    type Output = FormalSum;

    fn sub(self, rhs: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        for (c, k) in rhs.iter() {
            out.add_term(c.clone(), -k.clone());
        }
        out
    }
}

impl Neg for &FormalSum {
    type Output = FormalSum;

    fn neg(self) -> FormalSum {
        &FormalSum::zero() - self
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.sign() == num_bigint::Sign::Minus;
            let magnitude = coeff.magnitude();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !magnitude.is_zero() && *magnitude != num_bigint::BigUint::from(1u32) {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Images of a single composition under jdt addition, with multiplicity:
/// `flatten(u_i(alpha))` for `i = 1, …, largest_part + 1`. Larger indices
/// give `Zero` (the staircase removal already fails at `largest_part + 1`),
/// which the finiteness tests assert separately.
pub fn up_r_images(alpha: &Composition) -> Vec<Composition> {
    let w = alpha.to_weak();
    let mut out = Vec::new();
    for i in 1..=alpha.largest_part() + 1 {
        if let Some(v) = ops::jdt_add(i, &w).into_value() {
            out.push(v.flatten());
        }
    }
    out
}

/// Images under single box removal: `flatten(d_i(alpha))` for
/// `i = 1, …, largest_part`.
pub fn down_q_images(alpha: &Composition) -> Vec<Composition> {
    let w = alpha.to_weak();
    let mut out = Vec::new();
    for i in 1..=alpha.largest_part() {
        if let Some(v) = ops::box_remove(i, &w).into_value() {
            out.push(v.flatten());
        }
    }
    out
}

/// Images under box addition: `flatten(t_i(alpha))` for
/// `i = 1, …, largest_part + 1`.
pub fn up_l_images(alpha: &Composition) -> Vec<Composition> {
    let w = alpha.to_weak();
    let mut out = Vec::new();
    for i in 1..=alpha.largest_part() + 1 {
        if let Some(v) = ops::box_add(i, &w).into_value() {
            out.push(v.flatten());
        }
    }
    out
}

/// Images under set-indexed box removal, one per nonempty
/// `I ⊆ {1, …, largest_part}` with `d_I(alpha)` nonzero. Distinct index
/// sets count separately even when they produce the same composition.
pub fn down_filtered_images(alpha: &Composition) -> Vec<Composition> {
    let w = alpha.to_weak();
    let mut out = Vec::new();
    for set in IndexSet::nonempty_subsets_of(alpha.largest_part()) {
        if let Some(v) = ops::box_remove_set(&set, &w).into_value() {
            out.push(v.flatten());
        }
    }
    out
}

fn apply_images(s: &FormalSum, images: impl Fn(&Composition) -> Vec<Composition>) -> FormalSum {
    let mut out = FormalSum::zero();
    for (c, k) in s.iter() {
        for image in images(c) {
            out.add_term(image, k.clone());
        }
    }
    out
}

/// The up operator `U = sum_i u_i` of the right composition graph, extended
/// linearly.
pub fn up_r(s: &FormalSum) -> FormalSum {
    apply_images(s, up_r_images)
}

/// The down operator `D = sum_i d_i` of the quasisymmetric composition
/// graph, extended linearly.
pub fn down_q(s: &FormalSum) -> FormalSum {
    apply_images(s, down_q_images)
}

/// The up operator `Ũ = sum_i t_i` of the left composition graph, extended
/// linearly.
pub fn up_l(s: &FormalSum) -> FormalSum {
    apply_images(s, up_l_images)
}

/// The down operator `D̃ = sum_I d_I` over all finite nonempty index sets,
/// extended linearly.
pub fn down_filtered(s: &FormalSum) -> FormalSum {
    apply_images(s, down_filtered_images)
}

/// A linear operator on [`FormalSum`]s: one of the four named operators,
/// the identity, or a sum, difference, or composition of these.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LinearOp {
    /// `U`, jdt additions.
    UpR,
    /// `D`, single box removals.
    DownQ,
    /// `Ũ`, box additions.
    UpL,
    /// `D̃`, box removals over all nonempty index sets.
    DownFiltered,
    Identity,
    Sum(Box<LinearOp>, Box<LinearOp>),
    Diff(Box<LinearOp>, Box<LinearOp>),
    /// `Compose(a, b)` applies `b` first, then `a`.
    Compose(Box<LinearOp>, Box<LinearOp>),
}

impl LinearOp {
    pub fn apply(&self, s: &FormalSum) -> FormalSum {
        match self {
            LinearOp::UpR => up_r(s),
            LinearOp::DownQ => down_q(s),
            LinearOp::UpL => up_l(s),
            LinearOp::DownFiltered => down_filtered(s),
            LinearOp::Identity => s.clone(),
            LinearOp::Sum(a, b) => &a.apply(s) + &b.apply(s),
            LinearOp::Diff(a, b) => &a.apply(s) - &b.apply(s),
            LinearOp::Compose(a, b) => a.apply(&b.apply(s)),
        }
    }

    pub fn sum(a: LinearOp, b: LinearOp) -> LinearOp {
        LinearOp::Sum(Box::new(a), Box::new(b))
    }

    pub fn diff(a: LinearOp, b: LinearOp) -> LinearOp {
        LinearOp::Diff(Box::new(a), Box::new(b))
    }

    /// `a` after `b`.
    pub fn compose(a: LinearOp, b: LinearOp) -> LinearOp {
        LinearOp::Compose(Box::new(a), Box::new(b))
    }
}

/// `a(b(s)) - b(a(s))`.
pub fn commutator_minus(a: &LinearOp, b: &LinearOp, s: &FormalSum) -> FormalSum {
    &a.apply(&b.apply(s)) - &b.apply(&a.apply(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn unit(parts: &[u32]) -> FormalSum {
        FormalSum::unit(c(parts))
    }

    fn sum_of(terms: &[(&[u32], i64)]) -> FormalSum {
        FormalSum::from_terms(terms.iter().map(|&(p, k)| (c(p), k)))
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let mut s = unit(&[2, 1]);
        s.add_term(c(&[2, 1]), -1);
        assert!(s.is_zero());
        assert_eq!(s.support_size(), 0);
        s.add_term(c(&[3]), 0);
        assert!(s.is_zero());
    }

    #[test]
    fn up_r_on_a_single_composition() {
        assert_eq!(
            up_r(&unit(&[2, 1, 3])),
            sum_of(&[
                (&[2, 1, 3, 1], 1),
                (&[2, 3, 2], 1),
                (&[1, 3, 3], 1),
                (&[2, 1, 4], 1)
            ])
        );
        assert_eq!(up_r(&unit(&[])), unit(&[1]));
    }

    #[test]
    fn down_q_on_a_single_composition() {
        assert_eq!(
            down_q(&unit(&[2, 1, 3])),
            sum_of(&[(&[2, 3], 1), (&[1, 1, 3], 1), (&[2, 1, 2], 1)])
        );
        assert_eq!(down_q(&unit(&[])), FormalSum::zero());
        assert_eq!(down_q(&unit(&[1])), unit(&[]));
        // Oracle for (1,2): d_1 -> (0,2) ~ (2); d_2 -> (1,1).
        assert_eq!(down_q(&unit(&[1, 2])), sum_of(&[(&[2], 1), (&[1, 1], 1)]));
    }

    #[test]
    fn up_l_on_a_single_composition() {
        assert_eq!(
            up_l(&unit(&[2, 1, 3])),
            sum_of(&[
                (&[1, 2, 1, 3], 1),
                (&[2, 2, 3], 1),
                (&[3, 1, 3], 1),
                (&[2, 1, 4], 1)
            ])
        );
        assert_eq!(up_l(&unit(&[])), unit(&[1]));
    }

    #[test]
    fn down_filtered_on_a_single_composition() {
        // Oracle by subset enumeration on (1,2): {1} -> (2), {2} -> (1,1),
        // {1,2} -> (1).
        assert_eq!(
            down_filtered(&unit(&[1, 2])),
            sum_of(&[(&[2], 1), (&[1, 1], 1), (&[1], 1)])
        );
        // Oracle on (2,1): {1} -> (2), {2} -> (1,1), {1,2} -> (1).
        assert_eq!(
            down_filtered(&unit(&[2, 1])),
            sum_of(&[(&[2], 1), (&[1, 1], 1), (&[1], 1)])
        );
        assert_eq!(down_filtered(&unit(&[])), FormalSum::zero());
        assert_eq!(down_filtered(&unit(&[1])), unit(&[]));
    }

    #[test]
    fn operators_are_linear_on_small_sums() {
        let s = sum_of(&[(&[2, 1], 3), (&[1, 1, 1], -2), (&[4], 1)]);
        let t = sum_of(&[(&[2, 1], -3), (&[3], 5)]);
        for op in [up_r, down_q, up_l, down_filtered] {
            assert_eq!(op(&(&s + &t)), &op(&s) + &op(&t));
            assert_eq!(op(&(&s - &t)), &op(&s) - &op(&t));
        }
    }

    #[test]
    fn graded_commutator_on_213() {
        // DU(2,1,3) carries (2,1,3) twice; UD carries it once; the
        // difference is exactly (2,1,3).
        let a = unit(&[2, 1, 3]);
        let du = down_q(&up_r(&a));
        let ud = up_r(&down_q(&a));
        assert_eq!(du.total_weight(), BigInt::from(10));
        assert_eq!(ud.total_weight(), BigInt::from(9));
        assert_eq!(&du - &ud, a);
        assert_eq!(
            commutator_minus(&LinearOp::DownQ, &LinearOp::UpR, &unit(&[2, 1, 3])),
            unit(&[2, 1, 3])
        );
    }

    #[test]
    fn left_graded_commutator_on_213_with_multiplicity_witness() {
        let a = unit(&[2, 1, 3]);
        let du = down_q(&up_l(&a));
        let ud = up_l(&down_q(&a));
        assert_eq!(du.coeff(&c(&[2, 1, 3])), BigInt::from(2));
        assert_eq!(ud.coeff(&c(&[2, 1, 3])), BigInt::from(1));
        assert_eq!(du.total_weight(), BigInt::from(10));
        assert_eq!(ud.total_weight(), BigInt::from(9));
        assert_eq!(&du - &ud, a);
    }

    #[test]
    fn filtered_commutators_on_12() {
        let a = unit(&[1, 2]);
        let expected = &down_filtered(&a) + &a;
        assert_eq!(
            expected,
            sum_of(&[(&[2], 1), (&[1, 1], 1), (&[1], 1), (&[1, 2], 1)])
        );

        let dtu = down_filtered(&up_r(&a));
        let udt = up_r(&down_filtered(&a));
        assert_eq!(dtu.total_weight(), BigInt::from(10));
        assert_eq!(udt.total_weight(), BigInt::from(6));
        assert_eq!(&dtu - &udt, expected);

        let dtu = down_filtered(&up_l(&a));
        let udt = up_l(&down_filtered(&a));
        assert_eq!(dtu.total_weight(), BigInt::from(10));
        assert_eq!(udt.total_weight(), BigInt::from(6));
        assert_eq!(&dtu - &udt, expected);
    }

    #[test]
    fn linear_op_expressions_match_direct_evaluation() {
        let s = sum_of(&[(&[2, 1], 1), (&[3], 2)]);
        let du_minus_ud = LinearOp::diff(
            LinearOp::compose(LinearOp::DownQ, LinearOp::UpR),
            LinearOp::compose(LinearOp::UpR, LinearOp::DownQ),
        );
        assert_eq!(
            du_minus_ud.apply(&s),
            commutator_minus(&LinearOp::DownQ, &LinearOp::UpR, &s)
        );
        let dt_plus_id = LinearOp::sum(LinearOp::DownFiltered, LinearOp::Identity);
        assert_eq!(dt_plus_id.apply(&s), &down_filtered(&s) + &s);
    }

    #[test]
    fn display_renders_signs_and_multiplicities() {
        let s = sum_of(&[(&[2, 1, 3], 2), (&[1, 3], -1)]);
        assert_eq!(s.to_string(), "-(1, 3) + 2*(2, 1, 3)");
        assert_eq!(FormalSum::zero().to_string(), "0");
        assert_eq!(unit(&[]).to_string(), "()");
    }
}
