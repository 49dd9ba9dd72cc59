//! Linearly ordered groups with exact elements.
//!
//! The catalog is closed: the integers, the rationals and binary
//! lexicographic products of catalog groups (nestable). All three are
//! written additively internally; the public surface speaks the abstract
//! multiplicative language (`op`, `inverse`, `identity`).
//!
//! An element knows which group it lives in from its shape alone, so
//! `GroupElement::group` recovers the owning group and mismatches are
//! detected structurally.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::sample::{SampleSpec, Sampler};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderedGroup {
    Integers,
    Rationals,
    /// `Lex(A, H)`: pairs ordered by the left component, ties broken by the right.
    Lex(Box<OrderedGroup>, Box<OrderedGroup>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Int(BigInt),
    Rat(BigRational),
    Pair(Box<GroupElement>, Box<GroupElement>),
}

impl OrderedGroup {
    pub fn lex(left: OrderedGroup, right: OrderedGroup) -> Self {
        OrderedGroup::Lex(Box::new(left), Box::new(right))
    }

    pub fn lex_parts(&self) -> Option<(&OrderedGroup, &OrderedGroup)> {
        match self {
            OrderedGroup::Lex(l, r) => Some((l, r)),
            _ => None,
        }
    }

    pub fn is_lex(&self) -> bool {
        matches!(self, OrderedGroup::Lex(..))
    }

    /// Every group in the catalog is abelian.
    pub fn is_commutative(&self) -> bool {
        match self {
            OrderedGroup::Integers | OrderedGroup::Rationals => true,
            OrderedGroup::Lex(l, r) => l.is_commutative() && r.is_commutative(),
        }
    }

    /// Declared metadata. A lex product of two non-singleton groups is never
    /// archimedean, and no catalog group is a singleton.
    pub fn is_archimedean(&self) -> bool {
        !self.is_lex()
    }

    /// Declared metadata: `G⁺ ∖ {e}` has no minimum.
    pub fn is_d_group(&self) -> bool {
        match self {
            OrderedGroup::Integers => false,
            OrderedGroup::Rationals => true,
            OrderedGroup::Lex(_, r) => r.is_d_group(),
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            OrderedGroup::Integers => GroupElement::Int(BigInt::zero()),
            OrderedGroup::Rationals => GroupElement::Rat(BigRational::zero()),
            OrderedGroup::Lex(l, r) => GroupElement::pair(l.identity(), r.identity()),
        }
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        match (self, x) {
            (OrderedGroup::Integers, GroupElement::Int(_)) => true,
            (OrderedGroup::Rationals, GroupElement::Rat(_)) => true,
            (OrderedGroup::Lex(l, r), GroupElement::Pair(a, b)) => l.contains(a) && r.contains(b),
            _ => false,
        }
    }

    pub fn check(&self, x: &GroupElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(AlgebraError::GroupMismatch {
                left: self.to_string(),
                right: x.group().to_string(),
            })
        }
    }

    pub fn op(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.mul(b))
    }

    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(a.inverse())
    }

    pub fn compare(&self, a: &GroupElement, b: &GroupElement) -> Result<Ordering> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.cmp_same(b))
    }

    pub fn join(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.join(b).clone())
    }

    pub fn strictly_greater(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(g.strictly_greater())
    }

    /// For a d-group and `e < eps`, some `x` with `e < x < eps`.
    pub fn smaller_positive(&self, eps: &GroupElement) -> Result<GroupElement> {
        self.check(eps)?;
        if !self.is_d_group() {
            return Err(AlgebraError::NotDGroup(self.to_string()));
        }
        if eps.cmp_same(&self.identity()) != Ordering::Greater {
            return Err(AlgebraError::Precondition(format!(
                "{eps} is not strictly positive"
            )));
        }
        Ok(smaller_positive(self, eps))
    }

    /// First draw of a fresh sampler seeded by `spec`.
    pub fn sample(&self, spec: &SampleSpec) -> Result<GroupElement> {
        let mut sampler = Sampler::new(spec)?;
        Ok(sampler.element(self))
    }
}

fn smaller_positive(group: &OrderedGroup, eps: &GroupElement) -> GroupElement {
    match (group, eps) {
        (OrderedGroup::Rationals, GroupElement::Rat(q)) => {
            GroupElement::Rat(q / BigRational::from_integer(BigInt::from(2)))
        }
        (OrderedGroup::Lex(l, r), GroupElement::Pair(a, b)) => {
            let e_left = l.identity();
            if **a == e_left {
                GroupElement::pair(e_left, smaller_positive(r, b))
            } else {
                // (e, s) < (a, b) whenever e < a, for any s
                GroupElement::pair(e_left, r.identity().strictly_greater())
            }
        }
        _ => unreachable!("smaller_positive on a non-d-group"),
    }
}

impl fmt::Display for OrderedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderedGroup::Integers => f.write_str("Z"),
            OrderedGroup::Rationals => f.write_str("Q"),
            OrderedGroup::Lex(l, r) => write!(f, "lex({l},{r})"),
        }
    }
}

impl GroupElement {
    pub fn int(v: i64) -> Self {
        GroupElement::Int(BigInt::from(v))
    }

    pub fn rat(num: i64, den: i64) -> Self {
        GroupElement::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn pair(a: GroupElement, b: GroupElement) -> Self {
        GroupElement::Pair(Box::new(a), Box::new(b))
    }

    pub fn parts(&self) -> Option<(&GroupElement, &GroupElement)> {
        match self {
            GroupElement::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// The group this element belongs to, recovered from its shape.
    pub fn group(&self) -> OrderedGroup {
        match self {
            GroupElement::Int(_) => OrderedGroup::Integers,
            GroupElement::Rat(_) => OrderedGroup::Rationals,
            GroupElement::Pair(a, b) => OrderedGroup::lex(a.group(), b.group()),
        }
    }

    pub fn same_group(&self, other: &GroupElement) -> bool {
        match (self, other) {
            (GroupElement::Int(_), GroupElement::Int(_)) => true,
            (GroupElement::Rat(_), GroupElement::Rat(_)) => true,
            (GroupElement::Pair(a, b), GroupElement::Pair(c, d)) => {
                a.same_group(c) && b.same_group(d)
            }
            _ => false,
        }
    }

    fn check_same(&self, other: &GroupElement) -> Result<()> {
        if self.same_group(other) {
            Ok(())
        } else {
            Err(AlgebraError::GroupMismatch {
                left: self.group().to_string(),
                right: other.group().to_string(),
            })
        }
    }

    pub fn try_op(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_same(other)?;
        Ok(self.mul(other))
    }

    pub fn try_cmp(&self, other: &GroupElement) -> Result<Ordering> {
        self.check_same(other)?;
        Ok(self.cmp_same(other))
    }

    pub fn try_join(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_same(other)?;
        Ok(self.join(other).clone())
    }

    /// Group operation; both operands must come from the same group.
    pub(crate) fn mul(&self, other: &GroupElement) -> GroupElement {
        match (self, other) {
            (GroupElement::Int(a), GroupElement::Int(b)) => GroupElement::Int(a + b),
            (GroupElement::Rat(a), GroupElement::Rat(b)) => GroupElement::Rat(a + b),
            (GroupElement::Pair(a, b), GroupElement::Pair(c, d)) => {
                GroupElement::pair(a.mul(c), b.mul(d))
            }
            _ => panic!("group operation across distinct groups"),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        match self {
            GroupElement::Int(a) => GroupElement::Int(-a),
            GroupElement::Rat(a) => GroupElement::Rat(-a),
            GroupElement::Pair(a, b) => GroupElement::pair(a.inverse(), b.inverse()),
        }
    }

    pub fn identity_of_group(&self) -> GroupElement {
        match self {
            GroupElement::Int(_) => GroupElement::Int(BigInt::zero()),
            GroupElement::Rat(_) => GroupElement::Rat(BigRational::zero()),
            GroupElement::Pair(a, b) => {
                GroupElement::pair(a.identity_of_group(), b.identity_of_group())
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Int(a) => a.is_zero(),
            GroupElement::Rat(a) => a.is_zero(),
            GroupElement::Pair(a, b) => a.is_identity() && b.is_identity(),
        }
    }

    /// Sign relative to the identity.
    pub fn cmp_identity(&self) -> Ordering {
        match self {
            GroupElement::Int(a) => a.sign_ordering(),
            GroupElement::Rat(a) => a.numer().sign_ordering(),
            GroupElement::Pair(a, b) => a.cmp_identity().then_with(|| b.cmp_identity()),
        }
    }

    /// `e ≤ self`.
    pub fn is_positive(&self) -> bool {
        self.cmp_identity() != Ordering::Less
    }

    pub(crate) fn cmp_same(&self, other: &GroupElement) -> Ordering {
        match (self, other) {
            (GroupElement::Int(a), GroupElement::Int(b)) => a.cmp(b),
            (GroupElement::Rat(a), GroupElement::Rat(b)) => a.cmp(b),
            (GroupElement::Pair(a, b), GroupElement::Pair(c, d)) => {
                a.cmp_same(c).then_with(|| b.cmp_same(d))
            }
            _ => panic!("comparison across distinct groups"),
        }
    }

    pub(crate) fn lt(&self, other: &GroupElement) -> bool {
        self.cmp_same(other) == Ordering::Less
    }

    pub(crate) fn le(&self, other: &GroupElement) -> bool {
        self.cmp_same(other) != Ordering::Greater
    }

    pub(crate) fn join<'a>(&'a self, other: &'a GroupElement) -> &'a GroupElement {
        if self.cmp_same(other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    pub(crate) fn meet<'a>(&'a self, other: &'a GroupElement) -> &'a GroupElement {
        if self.cmp_same(other) == Ordering::Greater {
            other
        } else {
            self
        }
    }

    /// `self · from⁻¹ · to`, the action of the translation sending `from` to `to`.
    pub(crate) fn translate(&self, from: &GroupElement, to: &GroupElement) -> GroupElement {
        self.mul(&from.inverse()).mul(to)
    }

    /// `self⁻¹ · other`.
    pub(crate) fn left_quotient(&self, other: &GroupElement) -> GroupElement {
        self.inverse().mul(other)
    }

    /// Some element strictly above `self`: `+1` in Z and Q, and a bump of
    /// the right component in a lex product.
    pub fn strictly_greater(&self) -> GroupElement {
        match self {
            GroupElement::Int(a) => GroupElement::Int(a + BigInt::one()),
            GroupElement::Rat(a) => GroupElement::Rat(a + BigRational::one()),
            GroupElement::Pair(a, b) => GroupElement::pair((**a).clone(), b.strictly_greater()),
        }
    }

    /// Some element strictly below `self`, mirror of `strictly_greater`.
    pub fn strictly_less(&self) -> GroupElement {
        self.inverse().strictly_greater().inverse()
    }

    /// `self^n` for `n ≥ 0`.
    pub fn pow(&self, n: u32) -> GroupElement {
        let mut acc = self.identity_of_group();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Int(a) => write!(f, "{a}"),
            GroupElement::Rat(a) => {
                if a.denom().is_one() {
                    write!(f, "{}", a.numer())
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())
                }
            }
            GroupElement::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// A cone `G⁺(g)` (closed) or `G̊⁺(g)` (open) on a base element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConeDescriptor {
    pub base: GroupElement,
    pub open: bool,
}

impl ConeDescriptor {
    pub fn closed(base: GroupElement) -> Self {
        ConeDescriptor { base, open: false }
    }

    pub fn open(base: GroupElement) -> Self {
        ConeDescriptor { base, open: true }
    }

    pub fn contains(&self, x: &GroupElement) -> Result<bool> {
        let ord = self.base.try_cmp(x)?;
        Ok(if self.open {
            ord == Ordering::Less
        } else {
            ord != Ordering::Greater
        })
    }
}
