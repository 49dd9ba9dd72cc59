//! The four carriers `B(G)`, `B⁺(G)`, `B̄(G)`, `B̄⁺(G)` behind one element type.

use std::fmt;

use crate::cone::ConeElement;
use crate::error::{AlgebraError, Result};
use crate::extended::{ConeTag, ExtElement};
use crate::group::{GroupElement, OrderedGroup};
use crate::sample::Sampler;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CarrierKind {
    Cone,
    ConePlus,
    Ext,
    ExtPlus,
}

impl CarrierKind {
    pub const ALL: [CarrierKind; 4] =
        [CarrierKind::Cone, CarrierKind::ConePlus, CarrierKind::Ext, CarrierKind::ExtPlus];

    pub fn is_ext(self) -> bool {
        matches!(self, CarrierKind::Ext | CarrierKind::ExtPlus)
    }

    pub fn is_plus(self) -> bool {
        matches!(self, CarrierKind::ConePlus | CarrierKind::ExtPlus)
    }

    pub fn from_flags(ext: bool, plus: bool) -> CarrierKind {
        match (ext, plus) {
            (false, false) => CarrierKind::Cone,
            (false, true) => CarrierKind::ConePlus,
            (true, false) => CarrierKind::Ext,
            (true, true) => CarrierKind::ExtPlus,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Carrier {
    group: OrderedGroup,
    kind: CarrierKind,
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            CarrierKind::Cone => "B",
            CarrierKind::ConePlus => "B+",
            CarrierKind::Ext => "Bbar",
            CarrierKind::ExtPlus => "Bbar+",
        };
        write!(f, "{name}({})", self.group)
    }
}

impl Carrier {
    /// The extended carriers exist only over d-groups.
    pub fn new(group: OrderedGroup, kind: CarrierKind) -> Result<Self> {
        if kind.is_ext() && !group.is_d_group() {
            return Err(AlgebraError::NotDGroup(group.to_string()));
        }
        Ok(Carrier { group, kind })
    }

    pub fn group(&self) -> &OrderedGroup {
        &self.group
    }

    pub fn kind(&self) -> CarrierKind {
        self.kind
    }

    pub fn is_ext(&self) -> bool {
        self.kind.is_ext()
    }

    pub fn is_plus(&self) -> bool {
        self.kind.is_plus()
    }

    pub fn contains(&self, x: &Element) -> bool {
        let shape = match x {
            Element::Cone(_) => !self.is_ext(),
            Element::Ext(_) => self.is_ext(),
        };
        shape
            && x.plus_restricted() == self.is_plus()
            && self.group.contains(x.g())
            && self.group.contains(x.h())
            && (!self.is_plus() || (x.g().is_positive() && x.h().is_positive()))
    }

    pub fn check(&self, x: &Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(AlgebraError::CarrierMismatch(format!("{x} is not an element of {self}")))
        }
    }

    /// Checked construction. An open tag requires an extended carrier.
    pub fn element(&self, g: GroupElement, h: GroupElement, tag: ConeTag) -> Result<Element> {
        for x in [&g, &h] {
            self.group.check(x)?;
        }
        let plus = self.is_plus();
        if self.is_ext() {
            ExtElement::with_restriction(g, h, tag, plus).map(Element::Ext)
        } else if tag == ConeTag::Open {
            Err(AlgebraError::CarrierMismatch(format!(
                "open-cone element in {self}; extended carrier required"
            )))
        } else {
            ConeElement::with_restriction(g, h, plus).map(Element::Cone)
        }
    }

    pub(crate) fn make(&self, g: GroupElement, h: GroupElement, tag: ConeTag) -> Element {
        let plus = self.is_plus();
        if self.is_ext() {
            Element::Ext(ExtElement::raw(g, h, tag, plus))
        } else {
            Element::Cone(ConeElement::raw(g, h, plus))
        }
    }

    pub fn idempotent(&self, g: GroupElement, tag: ConeTag) -> Element {
        self.make(g.clone(), g, tag)
    }

    fn draw_value(&self, s: &mut Sampler) -> GroupElement {
        if self.is_plus() {
            s.positive(&self.group)
        } else {
            s.element(&self.group)
        }
    }

    fn draw_tag(&self, s: &mut Sampler) -> ConeTag {
        if self.is_ext() && s.coin() {
            ConeTag::Open
        } else {
            ConeTag::Closed
        }
    }

    pub fn sample(&self, s: &mut Sampler) -> Element {
        let g = self.draw_value(s);
        // About a quarter of draws put h next to g so boundary cases show up.
        let h = if s.chance(1, 4) {
            let v = s.near(&g);
            if !self.is_plus() || v.is_positive() {
                v
            } else {
                g.clone()
            }
        } else {
            self.draw_value(s)
        };
        let tag = self.draw_tag(s);
        self.make(g, h, tag)
    }

    pub fn sample_idempotent(&self, s: &mut Sampler) -> Element {
        let g = self.draw_value(s);
        let tag = self.draw_tag(s);
        self.idempotent(g, tag)
    }

    /// A value `t` with `x·t` and `y·t` kept inside this carrier's cone, or
    /// the identity if a few draws fail.
    pub(crate) fn shift_for(&self, s: &mut Sampler, bases: &[&GroupElement]) -> GroupElement {
        for _ in 0..8 {
            let t = s.element(&self.group);
            if !self.is_plus() || bases.iter().all(|b| b.mul(&t).is_positive()) {
                return t;
            }
        }
        self.group.identity()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Cone(ConeElement),
    Ext(ExtElement),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Cone(x) => x.fmt(f),
            Element::Ext(x) => x.fmt(f),
        }
    }
}

impl From<ConeElement> for Element {
    fn from(x: ConeElement) -> Self {
        Element::Cone(x)
    }
}

impl From<ExtElement> for Element {
    fn from(x: ExtElement) -> Self {
        Element::Ext(x)
    }
}

impl Element {
    pub fn g(&self) -> &GroupElement {
        match self {
            Element::Cone(x) => x.g(),
            Element::Ext(x) => x.g(),
        }
    }

    pub fn h(&self) -> &GroupElement {
        match self {
            Element::Cone(x) => x.h(),
            Element::Ext(x) => x.h(),
        }
    }

    /// `None` for elements of `B(G)` and `B⁺(G)`.
    pub fn tag(&self) -> Option<ConeTag> {
        match self {
            Element::Cone(_) => None,
            Element::Ext(x) => Some(x.tag()),
        }
    }

    pub fn plus_restricted(&self) -> bool {
        match self {
            Element::Cone(x) => x.plus_restricted(),
            Element::Ext(x) => x.plus_restricted(),
        }
    }

    pub fn group(&self) -> OrderedGroup {
        self.g().group()
    }

    pub fn is_idempotent(&self) -> bool {
        self.g() == self.h()
    }

    /// The pair part as an element of `B(G)` or `B⁺(G)`.
    pub fn underlying(&self) -> ConeElement {
        match self {
            Element::Cone(x) => x.clone(),
            Element::Ext(x) => x.underlying(),
        }
    }

    pub(crate) fn same_carrier(&self, other: &Element) -> Result<()> {
        let shape = matches!(
            (self, other),
            (Element::Cone(_), Element::Cone(_)) | (Element::Ext(_), Element::Ext(_))
        );
        if !shape || self.plus_restricted() != other.plus_restricted() {
            return Err(AlgebraError::CarrierMismatch(format!(
                "{self} and {other} live in different semigroups"
            )));
        }
        if !self.g().same_group(other.g()) {
            return Err(AlgebraError::GroupMismatch {
                left: self.group().to_string(),
                right: other.group().to_string(),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Element) -> Result<Element> {
        self.same_carrier(other)?;
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &Element) -> Element {
        match (self, other) {
            (Element::Cone(x), Element::Cone(y)) => Element::Cone(x.mul(y)),
            (Element::Ext(x), Element::Ext(y)) => Element::Ext(x.mul(y)),
            _ => panic!("product across carriers"),
        }
    }

    pub fn invert(&self) -> Element {
        match self {
            Element::Cone(x) => Element::Cone(x.invert()),
            Element::Ext(x) => Element::Ext(x.invert()),
        }
    }

    pub fn apply_partial(&self, x: &GroupElement) -> Result<Option<GroupElement>> {
        match self {
            Element::Cone(p) => p.apply_partial(x),
            Element::Ext(p) => p.apply_partial(x),
        }
    }

    /// `self·self⁻¹`.
    pub fn left_idempotent(&self) -> Element {
        match self {
            Element::Cone(x) => Element::Cone(x.left_idempotent()),
            Element::Ext(x) => Element::Ext(x.left_idempotent()),
        }
    }

    pub fn right_idempotent(&self) -> Element {
        match self {
            Element::Cone(x) => Element::Cone(x.right_idempotent()),
            Element::Ext(x) => Element::Ext(x.right_idempotent()),
        }
    }
}

/// `e ≼ f` read off the definition `e·f = f·e = e`.
pub fn idempotent_le(e: &Element, f: &Element) -> bool {
    e.mul(f) == *e && f.mul(e) == *e
}
