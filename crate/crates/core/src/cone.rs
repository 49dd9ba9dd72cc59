//! The inverse semigroups `B(G)` and `B⁺(G)`.
//!
//! An element is stored as the pair `(g, h)` and stands for the partial
//! translation `x ↦ x·g⁻¹·h` defined on the closed cone `{x : g ≤ x}`.
//! Composition is left to right: in `p·q` the map `p` acts first.

use std::fmt;
use std::str::FromStr;

use crate::error::{AlgebraError, Result};
use crate::group::{GroupElement, OrderedGroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConeElement {
    g: GroupElement,
    h: GroupElement,
    plus_restricted: bool,
}

impl ConeElement {
    pub fn new(g: GroupElement, h: GroupElement) -> Result<Self> {
        if !g.same_group(&h) {
            return Err(AlgebraError::GroupMismatch {
                left: g.group().to_string(),
                right: h.group().to_string(),
            });
        }
        Ok(ConeElement { g, h, plus_restricted: false })
    }

    /// An element of `B⁺(G)`: both bases must lie in the positive cone.
    pub fn new_plus(g: GroupElement, h: GroupElement) -> Result<Self> {
        for x in [&g, &h] {
            if !x.is_positive() {
                return Err(AlgebraError::NotPositive(x.to_string()));
            }
        }
        let mut p = ConeElement::new(g, h)?;
        p.plus_restricted = true;
        Ok(p)
    }

    pub fn with_restriction(g: GroupElement, h: GroupElement, plus: bool) -> Result<Self> {
        if plus {
            ConeElement::new_plus(g, h)
        } else {
            ConeElement::new(g, h)
        }
    }

    pub(crate) fn raw(g: GroupElement, h: GroupElement, plus_restricted: bool) -> Self {
        ConeElement { g, h, plus_restricted }
    }

    pub fn idempotent(g: GroupElement) -> Self {
        ConeElement { h: g.clone(), g, plus_restricted: false }
    }

    /// Domain-cone base.
    pub fn g(&self) -> &GroupElement {
        &self.g
    }

    /// Range-cone base.
    pub fn h(&self) -> &GroupElement {
        &self.h
    }

    pub fn plus_restricted(&self) -> bool {
        self.plus_restricted
    }

    pub fn group(&self) -> OrderedGroup {
        self.g.group()
    }

    pub fn into_parts(self) -> (GroupElement, GroupElement) {
        (self.g, self.h)
    }

    pub fn is_idempotent(&self) -> bool {
        self.g == self.h
    }

    fn check_same_group(&self, other: &ConeElement) -> Result<()> {
        if self.g.same_group(&other.g) {
            Ok(())
        } else {
            Err(AlgebraError::GroupMismatch {
                left: self.group().to_string(),
                right: other.group().to_string(),
            })
        }
    }

    /// `(g,h)·(k,l) = ((h∨k)·h⁻¹·g, (h∨k)·k⁻¹·l)`.
    pub fn multiply(&self, other: &ConeElement) -> Result<ConeElement> {
        self.check_same_group(other)?;
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &ConeElement) -> ConeElement {
        let (g, h) = (&self.g, &self.h);
        let (k, l) = (&other.g, &other.h);
        let top = h.join(k);
        ConeElement {
            g: top.translate(h, g),
            h: top.translate(k, l),
            plus_restricted: self.plus_restricted && other.plus_restricted,
        }
    }

    /// The same product by the three-way split on `h` against `k`.
    pub fn multiply_three_case(&self, other: &ConeElement) -> Result<ConeElement> {
        self.check_same_group(other)?;
        let (a, b) = (&self.g, &self.h);
        let (c, d) = (&other.g, &other.h);
        let (g, h) = match b.cmp_same(c) {
            std::cmp::Ordering::Less => (c.mul(&b.inverse()).mul(a), d.clone()),
            std::cmp::Ordering::Equal => (a.clone(), d.clone()),
            std::cmp::Ordering::Greater => (a.clone(), b.mul(&c.inverse()).mul(d)),
        };
        Ok(ConeElement {
            g,
            h,
            plus_restricted: self.plus_restricted && other.plus_restricted,
        })
    }

    pub fn invert(&self) -> ConeElement {
        ConeElement {
            g: self.h.clone(),
            h: self.g.clone(),
            plus_restricted: self.plus_restricted,
        }
    }

    /// `x·g⁻¹·h` when `g ≤ x`, `None` otherwise.
    pub fn apply_partial(&self, x: &GroupElement) -> Result<Option<GroupElement>> {
        if !x.same_group(&self.g) {
            return Err(AlgebraError::GroupMismatch {
                left: self.group().to_string(),
                right: x.group().to_string(),
            });
        }
        Ok(self.apply(x))
    }

    pub(crate) fn apply(&self, x: &GroupElement) -> Option<GroupElement> {
        if self.g.le(x) {
            Some(x.translate(&self.g, &self.h))
        } else {
            None
        }
    }

    /// `p·p⁻¹ = (g,g)`.
    pub fn left_idempotent(&self) -> ConeElement {
        ConeElement::raw(self.g.clone(), self.g.clone(), self.plus_restricted)
    }

    /// `p⁻¹·p = (h,h)`.
    pub fn right_idempotent(&self) -> ConeElement {
        ConeElement::raw(self.h.clone(), self.h.clone(), self.plus_restricted)
    }
}

impl fmt::Display for ConeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{};{}]", self.g, self.h)
    }
}

/// Product of the idempotents `(a,a)` and `(b,b)`, identified with `a∨b`.
pub fn idempotent_product(a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    a.try_join(b)
}

/// `(a,a) ≼ (b,b)` in the natural order, which holds iff `a ≥ b`.
pub fn natural_order_idem(a: &GroupElement, b: &GroupElement) -> Result<bool> {
    Ok(a.try_cmp(b)? != std::cmp::Ordering::Less)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GreenRelation {
    R,
    L,
    H,
    D,
    J,
}

impl GreenRelation {
    pub const ALL: [GreenRelation; 5] = [
        GreenRelation::R,
        GreenRelation::L,
        GreenRelation::H,
        GreenRelation::D,
        GreenRelation::J,
    ];
}

impl FromStr for GreenRelation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "R" => Ok(GreenRelation::R),
            "L" => Ok(GreenRelation::L),
            "H" => Ok(GreenRelation::H),
            "D" => Ok(GreenRelation::D),
            "J" => Ok(GreenRelation::J),
            other => Err(format!("unknown Green's relation `{other}` (expected R, L, H, D or J)")),
        }
    }
}

impl fmt::Display for GreenRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GreenRelation::R => "R",
            GreenRelation::L => "L",
            GreenRelation::H => "H",
            GreenRelation::D => "D",
            GreenRelation::J => "J",
        };
        f.write_str(s)
    }
}

/// Green's relations in `B(G)` and `B⁺(G)`: `R` compares domain bases,
/// `L` range bases, `H` both; the semigroups are bisimple so `D = J` is
/// universal.
pub fn green(rel: GreenRelation, p: &ConeElement, q: &ConeElement) -> Result<bool> {
    p.check_same_group(q)?;
    if p.plus_restricted != q.plus_restricted {
        return Err(AlgebraError::CarrierMismatch(
            "cannot compare an element of B(G) with one of B+(G)".into(),
        ));
    }
    Ok(match rel {
        GreenRelation::R => p.g == q.g,
        GreenRelation::L => p.h == q.h,
        GreenRelation::H => p.g == q.g && p.h == q.h,
        GreenRelation::D | GreenRelation::J => true,
    })
}

/// `(γ, δ)` with `γ·p·δ = q`: for `p = (g,h)`, `q = (k,l)` these are
/// `(k,g)` and `(h,l)`.
pub fn d_witness(p: &ConeElement, q: &ConeElement) -> Result<(ConeElement, ConeElement)> {
    p.check_same_group(q)?;
    let plus = p.plus_restricted && q.plus_restricted;
    Ok((
        ConeElement::raw(q.g.clone(), p.g.clone(), plus),
        ConeElement::raw(p.h.clone(), q.h.clone(), plus),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(g: i64, h: i64) -> ConeElement {
        ConeElement::new(GroupElement::int(g), GroupElement::int(h)).unwrap()
    }

    fn cp(g: i64, h: i64) -> ConeElement {
        ConeElement::new_plus(GroupElement::int(g), GroupElement::int(h)).unwrap()
    }

    /// Reads the product off the composed maps: the smallest sample point
    /// where both applications are defined is the domain base `a`, and
    /// its image is `b`.
    fn compose_by_points(p: &ConeElement, q: &ConeElement) -> (i64, i64) {
        let mut first = None;
        for x in -40..=40 {
            let x = GroupElement::int(x);
            let y = p.apply(&x).and_then(|y| q.apply(&y));
            if let Some(y) = y {
                first = Some((x, y));
                break;
            }
        }
        let (GroupElement::Int(a), GroupElement::Int(b)) = first.unwrap() else { panic!() };
        (a.try_into().unwrap(), b.try_into().unwrap())
    }

    #[test]
    fn product_examples() {
        // frozen from compose_by_points over x in 3..=20
        assert_eq!(compose_by_points(&c(1, 2), &c(3, 4)), (2, 4));
        assert_eq!(c(1, 2).multiply(&c(3, 4)).unwrap(), c(2, 4));
        assert_eq!(c(5, 5).multiply(&c(5, 5)).unwrap(), c(5, 5));
        assert_eq!(c(-3, 8).multiply(&c(8, 1)).unwrap(), c(-3, 1));
    }

    #[test]
    fn three_case_path_matches_join_formula() {
        for g in -4..=4 {
            for h in -4..=4 {
                for k in -4..=4 {
                    for l in [-2, 0, 3] {
                        let (p, q) = (c(g, h), c(k, l));
                        assert_eq!(p.multiply(&q).unwrap(), p.multiply_three_case(&q).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn invert_examples() {
        assert_eq!(c(0, 3).invert(), c(3, 0));
        assert_eq!(c(4, 4).invert(), c(4, 4));
        assert_eq!(c(2, -7).invert().invert(), c(2, -7));
        let p = c(2, -7);
        assert_eq!(p.mul(&p.invert()).mul(&p), p);
    }

    #[test]
    fn apply_examples() {
        let p = c(1, 2);
        assert_eq!(p.apply_partial(&GroupElement::int(5)).unwrap(), Some(GroupElement::int(6)));
        assert_eq!(p.apply_partial(&GroupElement::int(0)).unwrap(), None);
        assert_eq!(p.apply_partial(&GroupElement::int(1)).unwrap(), Some(GroupElement::int(2)));
        let e = c(3, 3);
        assert_eq!(e.apply_partial(&GroupElement::int(9)).unwrap(), Some(GroupElement::int(9)));
        assert!(p.apply_partial(&GroupElement::rat(1, 2)).is_err());
    }

    #[test]
    fn idempotent_examples() {
        let (two, seven) = (GroupElement::int(2), GroupElement::int(7));
        assert_eq!(idempotent_product(&two, &seven).unwrap(), seven);
        // the same value through composition of the partial maps
        assert_eq!(compose_by_points(&c(2, 2), &c(7, 7)), (7, 7));
        assert_eq!(idempotent_product(&two, &two).unwrap(), two);
        let pa = GroupElement::pair(GroupElement::int(1), GroupElement::int(5));
        let pb = GroupElement::pair(GroupElement::int(2), GroupElement::int(0));
        assert_eq!(idempotent_product(&pa, &pb).unwrap(), pb);
    }

    #[test]
    fn natural_order_examples() {
        let n = |a, b| natural_order_idem(&GroupElement::int(a), &GroupElement::int(b)).unwrap();
        assert!(n(5, 2));
        assert!(n(3, 3));
        assert!(!n(1, 4));
        assert_ne!(c(1, 1).mul(&c(4, 4)), c(1, 1));
    }

    #[test]
    fn green_examples() {
        assert!(green(GreenRelation::R, &c(3, 9), &c(3, -2)).unwrap());
        assert!(!green(GreenRelation::L, &c(3, 9), &c(3, -2)).unwrap());
        assert!(green(GreenRelation::H, &c(3, 9), &c(3, 9)).unwrap());
        assert!(!green(GreenRelation::H, &c(3, 9), &c(3, 8)).unwrap());
        assert!(green(GreenRelation::D, &c(1, 2), &c(-40, 17)).unwrap());
        assert!(green(GreenRelation::J, &c(1, 2), &c(-40, 17)).unwrap());
        assert!(green(GreenRelation::R, &c(1, 2), &cp(1, 2)).is_err());
    }

    #[test]
    fn d_witness_examples() {
        let (p, q) = (c(1, 2), c(3, 4));
        let (gamma, delta) = d_witness(&p, &q).unwrap();
        assert_eq!((gamma.clone(), delta.clone()), (c(3, 1), c(2, 4)));
        assert_eq!(gamma.mul(&p).mul(&delta), q);

        let (gamma, delta) = d_witness(&p, &p).unwrap();
        assert_eq!((gamma.clone(), delta.clone()), (c(1, 1), c(2, 2)));
        assert_eq!(gamma.mul(&p).mul(&delta), p);

        let (p, q) = (cp(0, 1), cp(2, 0));
        let (gamma, delta) = d_witness(&p, &q).unwrap();
        assert_eq!((gamma.clone(), delta.clone()), (cp(2, 0), cp(1, 0)));
        assert!(gamma.plus_restricted() && delta.plus_restricted());
        assert_eq!(gamma.mul(&p).mul(&delta), q);
    }

    #[test]
    fn plus_construction_rejects_negative_bases() {
        assert!(matches!(
            ConeElement::new_plus(GroupElement::int(-1), GroupElement::int(2)),
            Err(AlgebraError::NotPositive(_))
        ));
        assert!(ConeElement::new(GroupElement::int(1), GroupElement::rat(1, 2)).is_err());
    }
}
