//! `B̊(G)`, `B̄(G) = B̊(G) ∪ B(G)` and `B̄⁺(G)` over d-groups.
//!
//! An open element `o[g;h]` acts by the same rule `x ↦ x·g⁻¹·h` as the
//! closed `a[g;h]`, but on the strict cone `{x : g < x}`. The pair part of
//! a product never depends on the tags; only the tag of the result does.

use std::cmp::Ordering;
use std::fmt;

use crate::cone::{ConeElement, GreenRelation};
use crate::error::{AlgebraError, Result};
use crate::group::{GroupElement, OrderedGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConeTag {
    Closed,
    Open,
}

impl fmt::Display for ConeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConeTag::Closed => "closed",
            ConeTag::Open => "open",
        })
    }
}

impl ConeTag {
    pub fn flip(self) -> ConeTag {
        match self {
            ConeTag::Closed => ConeTag::Open,
            ConeTag::Open => ConeTag::Closed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtElement {
    g: GroupElement,
    h: GroupElement,
    tag: ConeTag,
    plus_restricted: bool,
}

fn require_d_group(g: &GroupElement) -> Result<()> {
    let group = g.group();
    if group.is_d_group() {
        Ok(())
    } else {
        Err(AlgebraError::NotDGroup(group.to_string()))
    }
}

impl ExtElement {
    pub fn new(g: GroupElement, h: GroupElement, tag: ConeTag) -> Result<Self> {
        if !g.same_group(&h) {
            return Err(AlgebraError::GroupMismatch {
                left: g.group().to_string(),
                right: h.group().to_string(),
            });
        }
        require_d_group(&g)?;
        Ok(ExtElement { g, h, tag, plus_restricted: false })
    }

    pub fn new_plus(g: GroupElement, h: GroupElement, tag: ConeTag) -> Result<Self> {
        for x in [&g, &h] {
            if !x.is_positive() {
                return Err(AlgebraError::NotPositive(x.to_string()));
            }
        }
        let mut x = ExtElement::new(g, h, tag)?;
        x.plus_restricted = true;
        Ok(x)
    }

    pub fn with_restriction(g: GroupElement, h: GroupElement, tag: ConeTag, plus: bool) -> Result<Self> {
        if plus {
            ExtElement::new_plus(g, h, tag)
        } else {
            ExtElement::new(g, h, tag)
        }
    }

    pub fn closed(g: GroupElement, h: GroupElement) -> Result<Self> {
        ExtElement::new(g, h, ConeTag::Closed)
    }

    pub fn open(g: GroupElement, h: GroupElement) -> Result<Self> {
        ExtElement::new(g, h, ConeTag::Open)
    }

    pub(crate) fn raw(g: GroupElement, h: GroupElement, tag: ConeTag, plus_restricted: bool) -> Self {
        ExtElement { g, h, tag, plus_restricted }
    }

    pub fn g(&self) -> &GroupElement {
        &self.g
    }

    pub fn h(&self) -> &GroupElement {
        &self.h
    }

    pub fn tag(&self) -> ConeTag {
        self.tag
    }

    pub fn is_open(&self) -> bool {
        self.tag == ConeTag::Open
    }

    pub fn plus_restricted(&self) -> bool {
        self.plus_restricted
    }

    pub fn group(&self) -> OrderedGroup {
        self.g.group()
    }

    pub fn is_idempotent(&self) -> bool {
        self.g == self.h
    }

    /// The closed element with the same pair part.
    pub fn underlying(&self) -> ConeElement {
        ConeElement::raw(self.g.clone(), self.h.clone(), self.plus_restricted)
    }

    /// Same pair, other tag.
    pub fn flipped(&self) -> ExtElement {
        ExtElement { tag: self.tag.flip(), ..self.clone() }
    }

    fn check_same_group(&self, other: &ExtElement) -> Result<()> {
        if self.g.same_group(&other.g) {
            Ok(())
        } else {
            Err(AlgebraError::GroupMismatch {
                left: self.group().to_string(),
                right: other.group().to_string(),
            })
        }
    }

    pub fn multiply_ext(&self, other: &ExtElement) -> Result<ExtElement> {
        self.check_same_group(other)?;
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &ExtElement) -> ExtElement {
        let (g, h) = (&self.g, &self.h);
        let (k, l) = (&other.g, &other.h);
        let top = h.join(k);
        let tag = match (self.tag, other.tag) {
            (ConeTag::Closed, ConeTag::Closed) => ConeTag::Closed,
            (ConeTag::Open, ConeTag::Open) => ConeTag::Open,
            (ConeTag::Closed, ConeTag::Open) => {
                if h.le(k) {
                    ConeTag::Open
                } else {
                    ConeTag::Closed
                }
            }
            (ConeTag::Open, ConeTag::Closed) => {
                if h.lt(k) {
                    ConeTag::Closed
                } else {
                    ConeTag::Open
                }
            }
        };
        ExtElement {
            g: top.translate(h, g),
            h: top.translate(k, l),
            tag,
            plus_restricted: self.plus_restricted && other.plus_restricted,
        }
    }

    pub fn invert(&self) -> ExtElement {
        ExtElement {
            g: self.h.clone(),
            h: self.g.clone(),
            tag: self.tag,
            plus_restricted: self.plus_restricted,
        }
    }

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
        let inside = match self.tag {
            ConeTag::Closed => self.g.le(x),
            ConeTag::Open => self.g.lt(x),
        };
        inside.then(|| x.translate(&self.g, &self.h))
    }

    pub fn left_idempotent(&self) -> ExtElement {
        ExtElement::raw(self.g.clone(), self.g.clone(), self.tag, self.plus_restricted)
    }

    pub fn right_idempotent(&self) -> ExtElement {
        ExtElement::raw(self.h.clone(), self.h.clone(), self.tag, self.plus_restricted)
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.tag {
            ConeTag::Closed => 'a',
            ConeTag::Open => 'o',
        };
        write!(f, "{prefix}[{};{}]", self.g, self.h)
    }
}

fn require_idempotent(x: &ExtElement) -> Result<()> {
    if x.is_idempotent() {
        Ok(())
    } else {
        Err(AlgebraError::NotIdempotent(x.to_string()))
    }
}

/// The natural order `a ≼ b` on idempotents of `B̄(G)`. Only a closed
/// idempotent below an open one needs strict inequality.
pub fn natural_order_ext(a: &ExtElement, b: &ExtElement) -> Result<bool> {
    a.check_same_group(b)?;
    require_idempotent(a)?;
    require_idempotent(b)?;
    let ord = a.g.cmp_same(&b.g);
    Ok(match (a.tag, b.tag) {
        (ConeTag::Closed, ConeTag::Open) => ord == Ordering::Greater,
        _ => ord != Ordering::Less,
    })
}

/// Image of an idempotent in `G ×lex {0,1}`: closed ↦ `(g,1)`, open ↦ `(g,0)`.
pub fn semilattice_embed(x: &ExtElement) -> Result<(GroupElement, u8)> {
    require_idempotent(x)?;
    let bit = match x.tag {
        ConeTag::Closed => 1,
        ConeTag::Open => 0,
    };
    Ok((x.g.clone(), bit))
}

/// Green's relations on `B̄(G)`: `R`, `L`, `H` only relate elements of the
/// same component, `D` is exactly "same component", `J` is universal.
pub fn green_ext(rel: GreenRelation, p: &ExtElement, q: &ExtElement) -> Result<bool> {
    p.check_same_group(q)?;
    if p.plus_restricted != q.plus_restricted {
        return Err(AlgebraError::CarrierMismatch(
            "cannot compare an element of B̄(G) with one of B̄+(G)".into(),
        ));
    }
    let same = p.tag == q.tag;
    Ok(match rel {
        GreenRelation::R => same && p.g == q.g,
        GreenRelation::L => same && p.h == q.h,
        GreenRelation::H => same && p.g == q.g && p.h == q.h,
        GreenRelation::D => same,
        GreenRelation::J => true,
    })
}

/// Which of the four tag combinations a pair `(p, q)` falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessCase {
    ClosedClosed,
    ClosedOpen,
    OpenClosed,
    OpenOpen,
}

impl WitnessCase {
    pub const ALL: [WitnessCase; 4] = [
        WitnessCase::ClosedClosed,
        WitnessCase::ClosedOpen,
        WitnessCase::OpenClosed,
        WitnessCase::OpenOpen,
    ];

    pub fn of(p: &ExtElement, q: &ExtElement) -> WitnessCase {
        match (p.tag, q.tag) {
            (ConeTag::Closed, ConeTag::Closed) => WitnessCase::ClosedClosed,
            (ConeTag::Closed, ConeTag::Open) => WitnessCase::ClosedOpen,
            (ConeTag::Open, ConeTag::Closed) => WitnessCase::OpenClosed,
            (ConeTag::Open, ConeTag::Open) => WitnessCase::OpenOpen,
        }
    }

    pub fn tags(self) -> (ConeTag, ConeTag) {
        match self {
            WitnessCase::ClosedClosed => (ConeTag::Closed, ConeTag::Closed),
            WitnessCase::ClosedOpen => (ConeTag::Closed, ConeTag::Open),
            WitnessCase::OpenClosed => (ConeTag::Open, ConeTag::Closed),
            WitnessCase::OpenOpen => (ConeTag::Open, ConeTag::Open),
        }
    }
}

/// `(γ, δ)` with `γ·p·δ = q`. Getting from an open element to a closed one
/// goes through a point `a` strictly above the domain base of `p`.
pub fn simplicity_witness(p: &ExtElement, q: &ExtElement) -> Result<(ExtElement, ExtElement)> {
    p.check_same_group(q)?;
    let plus = p.plus_restricted && q.plus_restricted;
    let (g, h) = (&p.g, &p.h);
    let (k, l) = (&q.g, &q.h);
    let mk = |x: &GroupElement, y: &GroupElement, tag| ExtElement::raw(x.clone(), y.clone(), tag, plus);
    Ok(match WitnessCase::of(p, q) {
        WitnessCase::ClosedClosed => (mk(k, g, ConeTag::Closed), mk(h, l, ConeTag::Closed)),
        WitnessCase::ClosedOpen | WitnessCase::OpenOpen => {
            (mk(k, g, ConeTag::Open), mk(h, l, ConeTag::Open))
        }
        WitnessCase::OpenClosed => {
            let a = g.strictly_greater();
            let shifted = a.translate(g, h);
            (mk(k, &a, ConeTag::Closed), mk(&shifted, l, ConeTag::Closed))
        }
    })
}

/// `a[g;h] ↦ o[g;h]`, an isomorphism `B(G) → B̊(G)` for d-groups.
pub fn iso_open_closed(p: &ConeElement) -> Result<ExtElement> {
    require_d_group(p.g())?;
    Ok(ExtElement::raw(p.g().clone(), p.h().clone(), ConeTag::Open, p.plus_restricted()))
}
