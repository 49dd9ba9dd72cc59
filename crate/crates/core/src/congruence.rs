//! Congruences on the cone semigroups, their canonical quotient maps, and
//! sample-based checks of the congruence axioms.
//!
//! Quotients are never materialized: a class is named by its
//! [`CanonicalClass`], and two elements are related exactly when their
//! canonical classes agree.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::carrier::{idempotent_le, Carrier, Element};
use crate::cone::ConeElement;
use crate::error::{AlgebraError, Result};
use crate::extended::{ConeTag, ExtElement};
use crate::group::{GroupElement, OrderedGroup};
use crate::report::{Checker, Report, Violation};
use crate::sample::{SampleSpec, Sampler};

/// Base sample size for the quadratic parts of [`check_congruence`].
pub const CLOSURE_BASE: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CongruenceKind {
    /// Equality.
    Delta,
    /// Everything related.
    Omega,
    /// Least group congruence: same `h⁻¹·g`.
    Cmg,
    /// On `B(A ×lex H)`: same left components and same `d⁻¹·b`.
    TildeC,
    /// On `B̄(G)`: same pair, tag ignored.
    TildeId,
    /// On `B̄(A ×lex H)`: `TildeC` on the pairs, tag ignored.
    TildeBar,
    /// Same domain base. Not a congruence; kept to exercise the checker.
    GParts,
}

impl CongruenceKind {
    pub const SHIPPED: [CongruenceKind; 6] = [
        CongruenceKind::Delta,
        CongruenceKind::Omega,
        CongruenceKind::Cmg,
        CongruenceKind::TildeC,
        CongruenceKind::TildeId,
        CongruenceKind::TildeBar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CongruenceKind::Delta => "delta",
            CongruenceKind::Omega => "omega",
            CongruenceKind::Cmg => "cmg",
            CongruenceKind::TildeC => "tilde_c",
            CongruenceKind::TildeId => "tilde_id",
            CongruenceKind::TildeBar => "tilde_bar",
            CongruenceKind::GParts => "g_parts",
        }
    }
}

impl fmt::Display for CongruenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses the six shipped names; the planted relation is not nameable.
impl FromStr for CongruenceKind {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        CongruenceKind::SHIPPED
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| AlgebraError::UnknownCongruence(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalClass {
    GroupElt(GroupElement),
    /// `(a, c, d⁻¹·b)` for the pair `((a,b),(c,d))`.
    Triple(GroupElement, GroupElement, GroupElement),
    ClosedPair(ConeElement),
    Singleton(Element),
    Unit,
    Lifted(Box<CanonicalClass>),
    DomainBase(GroupElement),
}

impl fmt::Display for CanonicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalClass::GroupElt(v) => write!(f, "{v}"),
            CanonicalClass::Triple(a, c, t) => write!(f, "[{a};{c};{t}]"),
            CanonicalClass::ClosedPair(p) => write!(f, "{p}"),
            CanonicalClass::Singleton(x) => write!(f, "{x}"),
            CanonicalClass::Unit => f.write_str("1"),
            CanonicalClass::Lifted(inner) => write!(f, "lift({inner})"),
            CanonicalClass::DomainBase(g) => write!(f, "base({g})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Congruence {
    kind: CongruenceKind,
    carrier: Carrier,
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.kind, self.carrier)
    }
}

impl Congruence {
    pub fn new(kind: CongruenceKind, carrier: Carrier) -> Result<Self> {
        let lex = carrier.group().is_lex();
        let ext = carrier.is_ext();
        match kind {
            CongruenceKind::TildeC | CongruenceKind::TildeBar if !lex => {
                return Err(AlgebraError::NotLexProduct(carrier.group().to_string()))
            }
            CongruenceKind::TildeC if ext => {
                return Err(AlgebraError::CarrierMismatch(format!(
                    "tilde_c lives on B(G) or B+(G), not {carrier}; use tilde_bar"
                )))
            }
            CongruenceKind::TildeId | CongruenceKind::TildeBar if !ext => {
                return Err(AlgebraError::CarrierMismatch(format!(
                    "{kind} lives on an extended carrier, not {carrier}"
                )))
            }
            _ => {}
        }
        Ok(Congruence { kind, carrier })
    }

    /// Every shipped congruence that makes sense on `carrier`.
    pub fn shipped_on(carrier: &Carrier) -> Vec<Congruence> {
        CongruenceKind::SHIPPED
            .into_iter()
            .filter_map(|k| Congruence::new(k, carrier.clone()).ok())
            .collect()
    }

    pub fn kind(&self) -> CongruenceKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    /// Declared: the quotient is a group.
    pub fn is_group_congruence(&self) -> bool {
        matches!(self.kind, CongruenceKind::Omega | CongruenceKind::Cmg)
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self.kind, CongruenceKind::Delta | CongruenceKind::Omega)
    }

    pub fn related(&self, x: &Element, y: &Element) -> Result<bool> {
        self.carrier.check(x)?;
        self.carrier.check(y)?;
        Ok(self.rel(x, y))
    }

    pub fn canonical(&self, x: &Element) -> Result<CanonicalClass> {
        self.carrier.check(x)?;
        Ok(self.canon(x))
    }

    /// Membership, stated directly rather than through `canon`.
    pub(crate) fn rel(&self, x: &Element, y: &Element) -> bool {
        match self.kind {
            CongruenceKind::Delta => x == y,
            CongruenceKind::Omega => true,
            CongruenceKind::Cmg => cmg_rel(x, y),
            CongruenceKind::TildeC | CongruenceKind::TildeBar => tilde_c_rel(x.g(), x.h(), y.g(), y.h()),
            CongruenceKind::TildeId => x.g() == y.g() && x.h() == y.h(),
            CongruenceKind::GParts => x.g() == y.g(),
        }
    }

    pub(crate) fn canon(&self, x: &Element) -> CanonicalClass {
        match self.kind {
            CongruenceKind::Delta => CanonicalClass::Singleton(x.clone()),
            CongruenceKind::Omega => CanonicalClass::Unit,
            CongruenceKind::Cmg => CanonicalClass::GroupElt(cmg_canonical(x)),
            CongruenceKind::TildeC => triple(x),
            CongruenceKind::TildeId => CanonicalClass::ClosedPair(x.underlying()),
            CongruenceKind::TildeBar => CanonicalClass::Lifted(Box::new(triple(x))),
            CongruenceKind::GParts => CanonicalClass::DomainBase(x.g().clone()),
        }
    }

    /// Some element related to `x`, usually different from it.
    pub fn partner(&self, x: &Element, s: &mut Sampler) -> Element {
        let c = &self.carrier;
        match self.kind {
            CongruenceKind::Delta => x.clone(),
            CongruenceKind::Omega => c.sample(s),
            CongruenceKind::Cmg => {
                let t = c.shift_for(s, &[x.g(), x.h()]);
                let tag = self.partner_tag(x, s);
                c.make(t.mul(x.g()), t.mul(x.h()), tag)
            }
            CongruenceKind::TildeC | CongruenceKind::TildeBar => {
                let (a, b) = x.g().parts().expect("lex carrier");
                let (cc, d) = x.h().parts().expect("lex carrier");
                let right = b.group();
                let mut t = right.identity();
                for _ in 0..8 {
                    let cand = s.element(&right);
                    let g = GroupElement::pair(a.clone(), b.mul(&cand));
                    let h = GroupElement::pair(cc.clone(), d.mul(&cand));
                    if !c.is_plus() || (g.is_positive() && h.is_positive()) {
                        t = cand;
                        break;
                    }
                }
                let g = GroupElement::pair(a.clone(), b.mul(&t));
                let h = GroupElement::pair(cc.clone(), d.mul(&t));
                let tag = self.partner_tag(x, s);
                c.make(g, h, tag)
            }
            CongruenceKind::TildeId => {
                let Element::Ext(e) = x else { unreachable!("tilde_id on a cone carrier") };
                Element::Ext(e.flipped())
            }
            CongruenceKind::GParts => {
                let h = c.sample(s).h().clone();
                c.make(x.g().clone(), h, x.tag().unwrap_or(ConeTag::Closed))
            }
        }
    }

    fn partner_tag(&self, x: &Element, s: &mut Sampler) -> ConeTag {
        match x.tag() {
            None => ConeTag::Closed,
            Some(_) if s.coin() => ConeTag::Open,
            Some(_) => ConeTag::Closed,
        }
    }
}

fn triple(x: &Element) -> CanonicalClass {
    let (a, b) = x.g().parts().expect("lex carrier");
    let (c, d) = x.h().parts().expect("lex carrier");
    CanonicalClass::Triple(a.clone(), c.clone(), d.left_quotient(b))
}

fn cmg_rel(x: &Element, y: &Element) -> bool {
    x.h().left_quotient(x.g()) == y.h().left_quotient(y.g())
}

fn tilde_c_rel(g1: &GroupElement, h1: &GroupElement, g2: &GroupElement, h2: &GroupElement) -> bool {
    let (Some((a1, b1)), Some((c1, d1))) = (g1.parts(), h1.parts()) else { return false };
    let (Some((a2, b2)), Some((c2, d2))) = (g2.parts(), h2.parts()) else { return false };
    a1 == a2 && c1 == c2 && d1.left_quotient(b1) == d2.left_quotient(b2)
}

/// Same `h⁻¹·g`; tags are ignored.
pub fn cmg_related(x: &Element, y: &Element) -> Result<bool> {
    x.same_carrier(y)?;
    Ok(cmg_rel(x, y))
}

/// `h⁻¹·g`, an antihomomorphism onto `G`.
pub fn cmg_canonical(x: &Element) -> GroupElement {
    x.h().left_quotient(x.g())
}

/// An idempotent `e` with `x·e = y·e` when `x` and `y` are `C_mg`-related.
/// In `B(G)` the join `w` of the ranges works. In `B̄(G)` the closed
/// idempotent at a point strictly above `w` is used, since at `w` itself an
/// open `x` would keep its tag.
pub fn cmg_witness(x: &Element, y: &Element) -> Result<Option<Element>> {
    x.same_carrier(y)?;
    if !cmg_rel(x, y) {
        return Ok(None);
    }
    let w = x.h().join(y.h()).clone();
    let plus = x.plus_restricted();
    let e = match x {
        Element::Cone(_) => Element::Cone(ConeElement::raw(w.clone(), w, plus)),
        Element::Ext(_) => {
            let w = w.strictly_greater();
            Element::Ext(ExtElement::raw(w.clone(), w, ConeTag::Closed, plus))
        }
    };
    Ok((x.mul(&e) == y.mul(&e)).then_some(e))
}

fn require_lex(g: &OrderedGroup) -> Result<()> {
    if g.is_lex() {
        Ok(())
    } else {
        Err(AlgebraError::NotLexProduct(g.to_string()))
    }
}

pub fn tilde_c_related(x: &ConeElement, y: &ConeElement) -> Result<bool> {
    let (ex, ey) = (Element::Cone(x.clone()), Element::Cone(y.clone()));
    ex.same_carrier(&ey)?;
    require_lex(&x.group())?;
    Ok(tilde_c_rel(x.g(), x.h(), y.g(), y.h()))
}

pub fn tilde_id_related(x: &ExtElement, y: &ExtElement) -> Result<bool> {
    let (ex, ey) = (Element::Ext(x.clone()), Element::Ext(y.clone()));
    ex.same_carrier(&ey)?;
    Ok(x.g() == y.g() && x.h() == y.h())
}

pub fn tilde_bar_related(x: &ExtElement, y: &ExtElement) -> Result<bool> {
    let (ex, ey) = (Element::Ext(x.clone()), Element::Ext(y.clone()));
    ex.same_carrier(&ey)?;
    require_lex(&x.group())?;
    Ok(tilde_c_rel(x.g(), x.h(), y.g(), y.h()))
}

/// Equivalence and compatibility of `c` on a sample and its one-round
/// product closure. Related pairs are planted through [`Congruence::partner`]
/// so that compatibility is exercised for every relation, not only those
/// with large classes.
pub fn check_congruence(c: &Congruence, spec: &SampleSpec) -> Result<Report> {
    let mut s = Sampler::new(spec)?;
    let n = spec.count.clamp(1, CLOSURE_BASE);
    let carrier = c.carrier();
    let mut chk = Checker::new(c.name());
    chk.carrier(carrier);

    // Triples (x, y1, y2) with y1, y2 planted partners of x.
    let mut base = Vec::with_capacity(3 * n);
    for i in 0..n {
        let x = if i % 4 == 0 { carrier.sample_idempotent(&mut s) } else { carrier.sample(&mut s) };
        let y1 = c.partner(&x, &mut s);
        let y2 = c.partner(&x, &mut s);
        base.extend([x, y1, y2]);
    }
    let mut closure = base.clone();
    for _ in 0..n {
        let u = &base[s.index(base.len())];
        let v = &base[s.index(base.len())];
        closure.push(u.mul(v));
    }

    for z in &closure {
        chk.check(c.rel(z, z), || Violation::new(format!("reflexivity at {z}"), "related", "not related"));
    }

    // Pairs for symmetry and canonical agreement: half planted, half arbitrary.
    let mut pairs = Vec::with_capacity(spec.count);
    for i in 0..spec.count {
        let u = closure[s.index(closure.len())].clone();
        let v = if i % 2 == 0 { c.partner(&u, &mut s) } else { closure[s.index(closure.len())].clone() };
        pairs.push((u, v));
    }
    let mut related = Vec::new();
    for t in base.chunks(3) {
        related.extend([(t[0].clone(), t[1].clone()), (t[0].clone(), t[2].clone()), (t[1].clone(), t[2].clone())]);
    }
    for (u, v) in &pairs {
        let r = c.rel(u, v);
        chk.check(r == c.rel(v, u), || Violation::new(format!("symmetry at ({u}, {v})"), r, !r));
        let same = c.canon(u) == c.canon(v);
        chk.check(same == r, || {
            Violation::new(
                format!("canonical classes {} and {} of ({u}, {v})", c.canon(u), c.canon(v)),
                if r { "equal classes" } else { "distinct classes" },
                if same { "equal classes" } else { "distinct classes" },
            )
        });
        if r && related.len() < 4 * n {
            related.push((u.clone(), v.clone()));
        }
    }

    for (u, v) in related.clone() {
        let w = c.partner(&v, &mut s);
        chk.check(c.rel(&u, &w), || {
            Violation::new(format!("transitivity via {u} ~ {v} ~ {w}"), "related", "not related")
        });
    }

    for (u, v) in &related {
        for _ in 0..16 {
            let z = &closure[s.index(closure.len())];
            let (uz, vz) = (u.mul(z), v.mul(z));
            chk.check(c.rel(&uz, &vz), || {
                Violation::new(
                    format!("right compatibility: {u} ~ {v}, z = {z}"),
                    "related",
                    format!("{uz} not related to {vz}"),
                )
            });
            let (zu, zv) = (z.mul(u), z.mul(v));
            chk.check(c.rel(&zu, &zv), || {
                Violation::new(
                    format!("left compatibility: {u} ~ {v}, z = {z}"),
                    "related",
                    format!("{zu} not related to {zv}"),
                )
            });
        }
    }

    for _ in 0..n {
        let (a, b) = &related[s.index(related.len())];
        let (cc, d) = &related[s.index(related.len())];
        let (ac, bd) = (a.mul(cc), b.mul(d));
        chk.check(c.rel(&ac, &bd), || {
            Violation::new(
                format!("{a} ~ {b} and {cc} ~ {d}"),
                "ac ~ bd",
                format!("{ac} not related to {bd}"),
            )
        });
    }

    Ok(chk.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupVerdict {
    Group,
    NonGroup,
}

impl fmt::Display for GroupVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupVerdict::Group => "GROUP",
            GroupVerdict::NonGroup => "NON_GROUP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub verdict: GroupVerdict,
    /// Distinct idempotent classes met, in order of discovery, at most 8.
    pub witness_classes: Vec<CanonicalClass>,
    pub idempotents_sampled: usize,
}

/// A quotient of an inverse semigroup is a group exactly when it has one
/// idempotent, so sampled idempotents spread over two classes refute it.
pub fn classify_group_congruence(c: &Congruence, spec: &SampleSpec) -> Result<Classification> {
    let mut s = Sampler::new(spec)?;
    let m = spec.count.clamp(1, 1000);
    let mut seen = HashSet::new();
    let mut witness_classes = Vec::new();
    for _ in 0..m {
        let e = c.carrier().sample_idempotent(&mut s);
        let class = c.canon(&e);
        if seen.insert(class.clone()) && witness_classes.len() < 8 {
            witness_classes.push(class);
        }
    }
    let verdict = if seen.len() == 1 { GroupVerdict::Group } else { GroupVerdict::NonGroup };
    Ok(Classification { verdict, witness_classes, idempotents_sampled: m })
}

/// Classes meet the idempotent chain in intervals: whenever `x ≼ z ≼ y`
/// with `x` related to `y`, also `x` is related to `z`.
pub fn convexity_check(c: &Congruence, spec: &SampleSpec) -> Result<Report> {
    let mut s = Sampler::new(spec)?;
    let carrier = c.carrier();
    let mut chk = Checker::new("convexity");
    chk.carrier(format!("{} on {carrier}", c.name()));
    let m = spec.count.clamp(1, 2000);
    for _ in 0..m {
        let x = carrier.sample_idempotent(&mut s);
        let y = if s.chance(1, 8) {
            carrier.sample_idempotent(&mut s)
        } else {
            c.partner(&x, &mut s).left_idempotent()
        };
        if !c.rel(&x, &y) {
            continue;
        }
        let (lo, hi) = if idempotent_le(&x, &y) { (x, y) } else { (y, x) };
        // lo ≼ hi puts the base of lo at or above the base of hi.
        let (bot, top) = if hi.g().le(lo.g()) { (hi.g(), lo.g()) } else { (lo.g(), hi.g()) };
        let mut zs = vec![lo.clone(), hi.clone()];
        for _ in 0..4 {
            let v = s.between(bot, top);
            let tag = if carrier.is_ext() && s.coin() { ConeTag::Open } else { ConeTag::Closed };
            zs.push(carrier.idempotent(v, tag));
        }
        for z in zs {
            if idempotent_le(&lo, &z) && idempotent_le(&z, &hi) {
                chk.check(c.rel(&lo, &z), || {
                    Violation::new(format!("{lo} <= {z} <= {hi} with ends related"), "related", "not related")
                });
            }
        }
    }
    Ok(chk.finish())
}

fn check_ladder_pre(a: &GroupElement, c: &GroupElement, n: u32) -> Result<()> {
    if !a.same_group(c) {
        return Err(AlgebraError::GroupMismatch {
            left: a.group().to_string(),
            right: c.group().to_string(),
        });
    }
    if !a.is_positive() {
        return Err(AlgebraError::Precondition(format!("need e <= a, got a = {a}")));
    }
    if !a.lt(c) {
        return Err(AlgebraError::Precondition(format!("need a < c, got a = {a}, c = {c}")));
    }
    if n < 1 {
        return Err(AlgebraError::Precondition("need n >= 1".into()));
    }
    Ok(())
}

/// The idempotents reached by `(c,a)·(w,w)·(a,c)`, starting at `w = a` and
/// feeding each rung back in as the next `w`. Returns `n + 1` bases.
pub fn propagation_ladder(a: &GroupElement, c: &GroupElement, n: u32) -> Result<Vec<GroupElement>> {
    check_ladder_pre(a, c, n)?;
    let down = ConeElement::raw(c.clone(), a.clone(), true);
    let up = ConeElement::raw(a.clone(), c.clone(), true);
    let mut w = a.clone();
    let mut rungs = Vec::with_capacity(n as usize + 1);
    for _ in 0..=n {
        let p = down.mul(&ConeElement::raw(w.clone(), w.clone(), true)).mul(&up);
        rungs.push(p.g().clone());
        if !p.is_idempotent() {
            break;
        }
        w = p.g().clone();
    }
    Ok(rungs)
}

/// Checks every rung of the ladder against `c·(a⁻¹c)^i`.
pub fn propagation_identity(a: &GroupElement, c: &GroupElement, n: u32) -> Result<Report> {
    check_ladder_pre(a, c, n)?;
    let mut chk = Checker::new("propagation");
    chk.carrier(format!("B+({})", a.group()));
    let step = a.left_quotient(c);
    let down = ConeElement::raw(c.clone(), a.clone(), true);
    let up = ConeElement::raw(a.clone(), c.clone(), true);
    let mut w = a.clone();
    for i in 0..=n {
        let expected = c.mul(&step.pow(i));
        let p = down.mul(&ConeElement::raw(w.clone(), w.clone(), true)).mul(&up);
        let want = ConeElement::raw(expected.clone(), expected.clone(), true);
        chk.check_eq(|| format!("a = {a}, c = {c}, w = {w}"), &want, &p);
        w = expected;
    }
    Ok(chk.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::CarrierKind;

    fn z(v: i64) -> GroupElement {
        GroupElement::int(v)
    }

    fn zz(a: i64, b: i64) -> GroupElement {
        GroupElement::pair(z(a), z(b))
    }

    fn lex_zz() -> OrderedGroup {
        OrderedGroup::lex(OrderedGroup::Integers, OrderedGroup::Integers)
    }

    fn cone(g: GroupElement, h: GroupElement) -> Element {
        Element::Cone(ConeElement::new(g, h).unwrap())
    }

    fn qcl(g: i64, h: i64) -> ExtElement {
        ExtElement::closed(GroupElement::rat(g, 1), GroupElement::rat(h, 1)).unwrap()
    }

    fn qop(g: i64, h: i64) -> ExtElement {
        ExtElement::open(GroupElement::rat(g, 1), GroupElement::rat(h, 1)).unwrap()
    }

    fn spec(count: usize) -> SampleSpec {
        SampleSpec::new(1, count, 50)
    }

    #[test]
    fn cmg_examples() {
        assert!(cmg_related(&cone(z(3), z(5)), &cone(z(10), z(12))).unwrap());
        assert!(cmg_related(&cone(z(4), z(4)), &cone(z(-7), z(-7))).unwrap());
        assert!(cmg_related(&qcl(1, 2).into(), &qop(1, 2).into()).unwrap());
        assert!(cmg_related(&cone(z(3), z(5)), &qcl(1, 2).into()).is_err());
        assert_eq!(cmg_canonical(&cone(z(3), z(5))), z(-2));
        assert_eq!(cmg_canonical(&cone(z(9), z(9))), z(0));
        let (x, y) = (cone(z(1), z(2)), cone(z(3), z(4)));
        assert_eq!(cmg_canonical(&x.mul(&y)), cmg_canonical(&y).mul(&cmg_canonical(&x)));
    }

    #[test]
    fn cmg_witness_examples() {
        let (x, y) = (cone(z(3), z(5)), cone(z(10), z(12)));
        let e = cmg_witness(&x, &y).unwrap().unwrap();
        assert_eq!(e, cone(z(12), z(12)));
        assert_eq!(x.mul(&e), y.mul(&e));
        assert_eq!(cmg_witness(&x, &x).unwrap(), Some(cone(z(5), z(5))));
        assert_eq!(cmg_witness(&cone(z(0), z(1)), &cone(z(0), z(2))).unwrap(), None);
        // At the join itself the tags would still differ.
        let (x, y): (Element, Element) = (qcl(1, 2).into(), qop(1, 2).into());
        let at_join: Element = qcl(2, 2).into();
        assert_ne!(x.mul(&at_join), y.mul(&at_join));
        let e = cmg_witness(&x, &y).unwrap().unwrap();
        assert_eq!(x.mul(&e), y.mul(&e));
    }

    #[test]
    fn tilde_examples() {
        let x = ConeElement::new(zz(1, 2), zz(3, 4)).unwrap();
        let y = ConeElement::new(zz(1, 7), zz(3, 9)).unwrap();
        let w = ConeElement::new(zz(2, 2), zz(3, 4)).unwrap();
        assert!(tilde_c_related(&x, &y).unwrap());
        assert!(tilde_c_related(&x, &x).unwrap());
        assert!(!tilde_c_related(&x, &w).unwrap());
        let p = ConeElement::new(z(1), z(2)).unwrap();
        assert!(matches!(tilde_c_related(&p, &p), Err(AlgebraError::NotLexProduct(_))));

        assert!(tilde_id_related(&qcl(1, 2), &qop(1, 2)).unwrap());
        assert!(!tilde_id_related(&qcl(1, 2), &qcl(1, 3)).unwrap());

        let zq = |a, b| GroupElement::pair(z(a), GroupElement::rat(b, 1));
        let o = ExtElement::open(zq(1, 2), zq(3, 4)).unwrap();
        let c = ExtElement::closed(zq(1, 7), zq(3, 9)).unwrap();
        let d = ExtElement::closed(zq(2, 2), zq(3, 4)).unwrap();
        assert!(tilde_bar_related(&o, &c).unwrap());
        assert!(tilde_bar_related(&o, &o).unwrap());
        assert!(!tilde_bar_related(&ExtElement::closed(zq(1, 2), zq(3, 4)).unwrap(), &d).unwrap());
        assert!(tilde_bar_related(&qcl(1, 2), &qcl(1, 2)).is_err());
    }

    #[test]
    fn construction_rules() {
        let b_q = Carrier::new(OrderedGroup::Rationals, CarrierKind::Cone).unwrap();
        let bbar_q = Carrier::new(OrderedGroup::Rationals, CarrierKind::Ext).unwrap();
        let b_zz = Carrier::new(lex_zz(), CarrierKind::Cone).unwrap();
        assert!(Congruence::new(CongruenceKind::TildeC, b_q.clone()).is_err());
        assert!(Congruence::new(CongruenceKind::TildeId, b_q.clone()).is_err());
        assert!(Congruence::new(CongruenceKind::TildeBar, bbar_q.clone()).is_err());
        let names: Vec<_> = Congruence::shipped_on(&b_zz).iter().map(|c| c.name()).collect();
        assert_eq!(names, ["delta", "omega", "cmg", "tilde_c"]);
        let names: Vec<_> = Congruence::shipped_on(&bbar_q).iter().map(|c| c.name()).collect();
        assert_eq!(names, ["delta", "omega", "cmg", "tilde_id"]);
        assert!("g_parts".parse::<CongruenceKind>().is_err());
        assert_eq!("tilde_bar".parse::<CongruenceKind>().unwrap(), CongruenceKind::TildeBar);
    }

    #[test]
    fn checker_accepts_congruences() {
        let b_zz = Carrier::new(lex_zz(), CarrierKind::Cone).unwrap();
        let c = Congruence::new(CongruenceKind::TildeC, b_zz).unwrap();
        let r = check_congruence(&c, &spec(200)).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let b_z = Carrier::new(OrderedGroup::Integers, CarrierKind::Cone).unwrap();
        let d = Congruence::new(CongruenceKind::Delta, b_z).unwrap();
        assert!(check_congruence(&d, &spec(200)).unwrap().passed());
    }

    #[test]
    fn checker_rejects_planted_relation() {
        let b_z = Carrier::new(OrderedGroup::Integers, CarrierKind::Cone).unwrap();
        let bad = Congruence::new(CongruenceKind::GParts, b_z).unwrap();
        let r = check_congruence(&bad, &spec(200)).unwrap();
        assert!(r.failed());
        assert!(r.violations.iter().any(|v| v.inputs.starts_with("right compatibility")));
        // A concrete witness: same base, products with (3,3) differ in base.
        let (x, y, e) = (cone(z(0), z(1)), cone(z(0), z(5)), cone(z(3), z(3)));
        assert!(bad.rel(&x, &y));
        assert!(!bad.rel(&x.mul(&e), &y.mul(&e)));
    }

    #[test]
    fn classification_examples() {
        let b_q = Carrier::new(OrderedGroup::Rationals, CarrierKind::Cone).unwrap();
        let cmg = Congruence::new(CongruenceKind::Cmg, b_q.clone()).unwrap();
        assert_eq!(classify_group_congruence(&cmg, &spec(300)).unwrap().verdict, GroupVerdict::Group);
        let omega = Congruence::new(CongruenceKind::Omega, b_q).unwrap();
        assert_eq!(classify_group_congruence(&omega, &spec(300)).unwrap().verdict, GroupVerdict::Group);
        let b_zz = Carrier::new(lex_zz(), CarrierKind::Cone).unwrap();
        let tc = Congruence::new(CongruenceKind::TildeC, b_zz).unwrap();
        let cls = classify_group_congruence(&tc, &spec(300)).unwrap();
        assert_eq!(cls.verdict, GroupVerdict::NonGroup);
        assert!(cls.witness_classes.len() >= 2);
    }

    #[test]
    fn convexity_examples() {
        let bbar_q = Carrier::new(OrderedGroup::Rationals, CarrierKind::Ext).unwrap();
        for kind in [CongruenceKind::Cmg, CongruenceKind::TildeId, CongruenceKind::Delta] {
            let c = Congruence::new(kind, bbar_q.clone()).unwrap();
            let r = convexity_check(&c, &spec(500)).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
        // OPEN(g,g) and CLOSED(g,g) have nothing strictly between them.
        let (lo, hi): (Element, Element) = (qop(2, 2).into(), qcl(2, 2).into());
        assert!(idempotent_le(&lo, &hi));
        for v in [1, 2, 3] {
            for e in [qcl(v, v), qop(v, v)] {
                let e: Element = e.into();
                if idempotent_le(&lo, &e) && idempotent_le(&e, &hi) {
                    assert!(e == lo || e == hi);
                }
            }
        }
    }

    #[test]
    fn ladder_examples() {
        assert_eq!(propagation_ladder(&z(1), &z(2), 3).unwrap(), [z(2), z(3), z(4), z(5)]);
        assert!(propagation_identity(&z(1), &z(2), 3).unwrap().passed());
        let q = |n, d| GroupElement::rat(n, d);
        assert_eq!(propagation_ladder(&q(1, 2), &q(1, 1), 2).unwrap(), [q(1, 1), q(3, 2), q(2, 1)]);
        assert!(propagation_identity(&q(1, 2), &q(1, 1), 2).unwrap().passed());
        assert!(matches!(propagation_identity(&z(2), &z(2), 3), Err(AlgebraError::Precondition(_))));
        assert!(propagation_identity(&z(-1), &z(2), 3).is_err());
        assert!(propagation_identity(&z(1), &z(2), 0).is_err());
    }
}
