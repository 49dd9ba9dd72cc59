//! Named, seeded property suites. Each suite samples its own stream from
//! the given [`SampleSpec`], so a `(suite, group, spec)` triple always
//! yields the same report apart from the elapsed time.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bicyclic::{
    embedded_copy, iso_to_bplus_z, mult_normal, normalize, transformation_apply, BicyclicNormal,
    BicyclicWord, Letter,
};
use crate::carrier::{idempotent_le, Carrier, CarrierKind, Element};
use crate::cone::{d_witness, green, idempotent_product, natural_order_idem, ConeElement, GreenRelation};
use crate::congruence::{
    check_congruence, classify_group_congruence, cmg_canonical, cmg_related, cmg_witness,
    convexity_check, propagation_identity, propagation_ladder, CanonicalClass, Congruence,
    CongruenceKind, GroupVerdict,
};
use crate::error::{AlgebraError, Result};
use crate::extended::{
    green_ext, natural_order_ext, semilattice_embed, simplicity_witness, ConeTag, ExtElement, WitnessCase,
};
use crate::group::{GroupElement, OrderedGroup};
use crate::report::{Checker, Report, Violation};
use crate::sample::{SampleSpec, Sampler};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    GroupAxioms,
    ConeProductOracle,
    Associativity,
    InverseAxioms,
    GreenRelations,
    IdempotentSemilattice,
    ExtProductOracle,
    ExtGreen,
    ExtSemilatticeLex,
    SimplicityWitnesses,
    BicyclicRewrite,
    BicyclicEmbedding,
    CongAxioms,
    CmgProperties,
    TildeCProperties,
    TildeIdQuotient,
    TildeBarQuotient,
    Convexity,
    Propagation,
}

impl Suite {
    pub const ALL: [Suite; 19] = [
        Suite::GroupAxioms,
        Suite::ConeProductOracle,
        Suite::Associativity,
        Suite::InverseAxioms,
        Suite::GreenRelations,
        Suite::IdempotentSemilattice,
        Suite::ExtProductOracle,
        Suite::ExtGreen,
        Suite::ExtSemilatticeLex,
        Suite::SimplicityWitnesses,
        Suite::BicyclicRewrite,
        Suite::BicyclicEmbedding,
        Suite::CongAxioms,
        Suite::CmgProperties,
        Suite::TildeCProperties,
        Suite::TildeIdQuotient,
        Suite::TildeBarQuotient,
        Suite::Convexity,
        Suite::Propagation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GroupAxioms => "group_axioms",
            Suite::ConeProductOracle => "cone_product_oracle",
            Suite::Associativity => "associativity",
            Suite::InverseAxioms => "inverse_axioms",
            Suite::GreenRelations => "green_relations",
            Suite::IdempotentSemilattice => "idempotent_semilattice",
            Suite::ExtProductOracle => "ext_product_oracle",
            Suite::ExtGreen => "ext_green",
            Suite::ExtSemilatticeLex => "ext_semilattice_lex",
            Suite::SimplicityWitnesses => "simplicity_witnesses",
            Suite::BicyclicRewrite => "bicyclic_rewrite",
            Suite::BicyclicEmbedding => "bicyclic_embedding",
            Suite::CongAxioms => "cong_axioms",
            Suite::CmgProperties => "cmg_properties",
            Suite::TildeCProperties => "tilde_c_properties",
            Suite::TildeIdQuotient => "tilde_id_quotient",
            Suite::TildeBarQuotient => "tilde_bar_quotient",
            Suite::Convexity => "convexity",
            Suite::Propagation => "propagation",
        }
    }

    fn salt(self) -> u64 {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") as u64 + 1
    }

    /// Why the suite cannot run over `group`, if it cannot.
    pub fn incompatibility(self, group: &OrderedGroup) -> Option<String> {
        let needs_d = matches!(
            self,
            Suite::ExtProductOracle
                | Suite::ExtGreen
                | Suite::ExtSemilatticeLex
                | Suite::SimplicityWitnesses
                | Suite::TildeIdQuotient
                | Suite::TildeBarQuotient
        );
        let needs_lex = matches!(self, Suite::TildeCProperties | Suite::TildeBarQuotient);
        if needs_lex && !group.is_lex() {
            return Some(format!("needs a lexicographic product; {group} is not one"));
        }
        if needs_d && !group.is_d_group() {
            return Some(format!("d-group required; {group} is not a d-group"));
        }
        None
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| AlgebraError::UnknownSuite(s.to_string()))
    }
}

/// Groups of the default battery.
pub fn catalog_groups() -> Vec<OrderedGroup> {
    use OrderedGroup::{Integers, Rationals};
    vec![
        Integers,
        Rationals,
        OrderedGroup::lex(Integers, Integers),
        OrderedGroup::lex(Integers, Rationals),
    ]
}

pub fn run_suite_named(name: &str, group: &OrderedGroup, spec: &SampleSpec) -> Result<Report> {
    run_suite(name.parse()?, group, spec)
}

pub fn run_suite(suite: Suite, group: &OrderedGroup, spec: &SampleSpec) -> Result<Report> {
    spec.validate()?;
    if let Some(reason) = suite.incompatibility(group) {
        return Ok(Report::skipped(suite.name(), group.to_string(), reason));
    }
    let spec = spec.derive(suite.salt());
    let mut chk = Checker::new(suite.name());
    match suite {
        Suite::GroupAxioms => group_axioms(&mut chk, group, &spec)?,
        Suite::ConeProductOracle => cone_product_oracle(&mut chk, group, &spec)?,
        Suite::Associativity => associativity(&mut chk, group, &spec)?,
        Suite::InverseAxioms => inverse_axioms(&mut chk, group, &spec)?,
        Suite::GreenRelations => green_relations(&mut chk, group, &spec)?,
        Suite::IdempotentSemilattice => idempotent_semilattice(&mut chk, group, &spec)?,
        Suite::ExtProductOracle => ext_product_oracle(&mut chk, group, &spec)?,
        Suite::ExtGreen => ext_green(&mut chk, group, &spec)?,
        Suite::ExtSemilatticeLex => ext_semilattice_lex(&mut chk, group, &spec)?,
        Suite::SimplicityWitnesses => simplicity_witnesses(&mut chk, group, &spec)?,
        Suite::BicyclicRewrite => bicyclic_rewrite(&mut chk, &spec)?,
        Suite::BicyclicEmbedding => bicyclic_embedding(&mut chk, group, &spec)?,
        Suite::CongAxioms => cong_axioms(&mut chk, group, &spec)?,
        Suite::CmgProperties => cmg_properties(&mut chk, group, &spec)?,
        Suite::TildeCProperties => tilde_c_properties(&mut chk, group, &spec)?,
        Suite::TildeIdQuotient => tilde_id_quotient(&mut chk, group, &spec)?,
        Suite::TildeBarQuotient => tilde_bar_quotient(&mut chk, group, &spec)?,
        Suite::Convexity => convexity(&mut chk, group, &spec)?,
        Suite::Propagation => propagation(&mut chk, group, &spec)?,
    }
    Ok(chk.finish())
}

/// Every suite over every group, in parallel. Reports come back in
/// group-major, catalog order.
pub fn run_battery(groups: &[OrderedGroup], suites: &[Suite], spec: &SampleSpec) -> Result<Vec<Report>> {
    spec.validate()?;
    let jobs: Vec<(&OrderedGroup, Suite)> =
        groups.iter().flat_map(|g| suites.iter().map(move |&s| (g, s))).collect();
    jobs.par_iter().map(|(g, s)| run_suite(*s, g, spec)).collect()
}

fn cone_carriers(group: &OrderedGroup) -> Vec<Carrier> {
    [CarrierKind::Cone, CarrierKind::ConePlus]
        .into_iter()
        .map(|k| Carrier::new(group.clone(), k).expect("cone carriers exist over every group"))
        .collect()
}

fn ext_carriers(group: &OrderedGroup) -> Vec<Carrier> {
    [CarrierKind::Ext, CarrierKind::ExtPlus]
        .into_iter()
        .filter_map(|k| Carrier::new(group.clone(), k).ok())
        .collect()
}

fn all_carriers(group: &OrderedGroup) -> Vec<Carrier> {
    let mut v = cone_carriers(group);
    v.extend(ext_carriers(group));
    v
}

fn cone(x: &Element) -> &ConeElement {
    match x {
        Element::Cone(c) => c,
        Element::Ext(_) => unreachable!("cone carrier produced an extended element"),
    }
}

fn ext(x: &Element) -> &ExtElement {
    match x {
        Element::Ext(e) => e,
        Element::Cone(_) => unreachable!("extended carrier produced a cone element"),
    }
}

fn group_axioms(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    chk.carrier(group);
    let e = group.identity();
    for _ in 0..spec.count {
        let (a, b, g) = (s.element(group), s.element(group), s.element(group));
        let show = || format!("a = {a}, b = {b}, g = {g}");
        chk.check_eq(show, &a.mul(&b).mul(&g), &a.mul(&b.mul(&g)));
        chk.check_eq(show, &a, &a.mul(&e));
        chk.check_eq(show, &a, &e.mul(&a));
        chk.check_eq(show, &e, &a.mul(&a.inverse()));
        chk.check_eq(show, &e, &a.inverse().mul(&a));
        if a.le(&b) {
            chk.check(a.mul(&g).le(&b.mul(&g)) && g.mul(&a).le(&g.mul(&b)), || {
                Violation::new(show(), "translation keeps a <= b", "order broken")
            });
        }
        let trichotomy = [a.lt(&b), a == b, b.lt(&a)].iter().filter(|&&t| t).count();
        chk.check(trichotomy == 1, || Violation::new(show(), "exactly one of <, =, >", trichotomy));
        let j = a.join(&b);
        chk.check((j == &a || j == &b) && a.le(j) && b.le(j), || Violation::new(show(), "join in {a, b} above both", j));
        let up = a.strictly_greater();
        chk.check(a.lt(&up), || Violation::new(show(), format!("above {a}"), &up));
        if group.is_d_group() {
            let eps = s.strictly_positive(group);
            let x = group.smaller_positive(&eps)?;
            chk.check(e.lt(&x) && x.lt(&eps), || Violation::new(format!("eps = {eps}"), "e < x < eps", &x));
        }
    }

    // Metadata against the concrete structure.
    let minimal = minimal_positive(group);
    chk.check(group.is_d_group() == minimal.is_none(), || {
        Violation::new(group.to_string(), "d-group flag matches the cone", group.is_d_group())
    });
    if let Some(m) = &minimal {
        for _ in 0..spec.count.min(1000) {
            let x = s.strictly_positive(group);
            chk.check(m.le(&x), || Violation::new(format!("x = {x}"), format!("minimal positive {m} <= x"), "below"));
        }
    }
    chk.check(group.is_commutative(), || Violation::new(group.to_string(), "commutative", false));
    match group.lex_parts() {
        Some((_, right)) => {
            chk.check(!group.is_archimedean(), || Violation::new(group.to_string(), "not archimedean", true));
            chk.check(group.is_d_group() == right.is_d_group(), || {
                Violation::new(group.to_string(), right.is_d_group(), group.is_d_group())
            });
            // (e, t) stays below (1, e) at every power.
            let (l, r) = group.lex_parts().expect("lex");
            let small = GroupElement::pair(l.identity(), r.identity().strictly_greater());
            let big = GroupElement::pair(l.identity().strictly_greater(), r.identity());
            chk.check(small.pow(1000).lt(&big), || Violation::new(format!("{small}^1000 vs {big}"), "below", "above"));
        }
        None => {
            chk.check(group.is_archimedean(), || Violation::new(group.to_string(), "archimedean", false));
            for _ in 0..spec.count.min(200) {
                let a = s.strictly_positive(group);
                let b = s.strictly_positive(group);
                let mut power = a.clone();
                let mut m = 1u64;
                while power.lt(&b) && m <= 100_000 {
                    power = power.mul(&a);
                    m += 1;
                }
                chk.check(b.le(&power), || Violation::new(format!("a = {a}, b = {b}"), "b <= a^m for some m", "none found"));
            }
        }
    }
    Ok(())
}

fn minimal_positive(group: &OrderedGroup) -> Option<GroupElement> {
    match group {
        OrderedGroup::Integers => Some(GroupElement::int(1)),
        OrderedGroup::Rationals => None,
        OrderedGroup::Lex(l, r) => minimal_positive(r).map(|m| GroupElement::pair(l.identity(), m)),
    }
}

fn oracle_points(s: &mut Sampler, p: &Element, q: &Element, base: &GroupElement) -> Vec<GroupElement> {
    let mut pts = vec![
        p.g().clone(),
        base.clone(),
        base.strictly_greater(),
        base.strictly_less(),
        p.g().strictly_less(),
        q.g().clone(),
        p.g().translate(q.g(), p.h()),
    ];
    while pts.len() < 10 {
        pts.push(s.above(base));
    }
    pts
}

fn cone_product_oracle(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    for c in cone_carriers(group) {
        chk.carrier(&c);
        for _ in 0..spec.count {
            let (p, q) = (c.sample(&mut s), c.sample(&mut s));
            let (cp, cq) = (cone(&p), cone(&q));
            let pq = cp.mul(cq);
            chk.check_eq(|| format!("three-case form of {p} * {q}"), &pq, &cp.multiply_three_case(cq)?);
            if c.is_plus() {
                chk.check(pq.g().is_positive() && pq.h().is_positive(), || {
                    Violation::new(format!("{p} * {q}"), "product in B+", &pq)
                });
            }
            for x in oracle_points(&mut s, &p, &q, pq.g()) {
                let composed = cp.apply(&x).and_then(|y| cq.apply(&y));
                let direct = pq.apply(&x);
                chk.check(composed == direct, || {
                    Violation::new(format!("({p} * {q}) at {x}"), show_opt(&composed), show_opt(&direct))
                });
                chk.check(composed.is_some() == pq.g().le(&x), || {
                    Violation::new(format!("domain of {p} * {q} at {x}"), format!("defined iff {} <= x", pq.g()), show_opt(&composed))
                });
            }
        }
    }
    Ok(())
}

fn show_opt(x: &Option<GroupElement>) -> String {
    x.as_ref().map_or_else(|| "undefined".to_string(), |v| v.to_string())
}

fn associativity(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    for c in cone_carriers(group) {
        chk.carrier(&c);
        for _ in 0..spec.count {
            let (p, q, r) = (c.sample(&mut s), c.sample(&mut s), c.sample(&mut s));
            chk.check_eq(|| format!("p = {p}, q = {q}, r = {r}"), &p.mul(&q).mul(&r), &p.mul(&q.mul(&r)));
        }
    }
    Ok(())
}

fn inverse_axioms(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    for c in all_carriers(group) {
        chk.carrier(&c);
        for _ in 0..spec.count {
            let p = c.sample(&mut s);
            let inv = p.invert();
            let show = || format!("p = {p}");
            chk.check_eq(show, &p, &p.mul(&inv).mul(&p));
            chk.check_eq(show, &inv, &inv.mul(&p).mul(&inv));
            let tag = p.tag().unwrap_or(ConeTag::Closed);
            chk.check_eq(show, &c.idempotent(p.g().clone(), tag), &p.mul(&inv));
            chk.check_eq(show, &c.idempotent(p.h().clone(), tag), &inv.mul(&p));
            let (e, f) = (c.sample_idempotent(&mut s), c.sample_idempotent(&mut s));
            chk.check_eq(|| format!("e = {e}, f = {f}"), &e.mul(&f), &f.mul(&e));
            chk.check(e.mul(&e) == e, || Violation::new(format!("e = {e}"), "e*e = e", e.mul(&e)));
        }
    }
    Ok(())
}

fn green_relations(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    let n = spec.count.min(1000);
    for c in cone_carriers(group) {
        chk.carrier(&c);
        for i in 0..n {
            let p = c.sample(&mut s);
            // Share a base with p now and then so that R, L and H are hit.
            let q = match i % 4 {
                0 => c.make(p.g().clone(), c.sample(&mut s).h().clone(), ConeTag::Closed),
                1 => c.make(c.sample(&mut s).g().clone(), p.h().clone(), ConeTag::Closed),
                _ => c.sample(&mut s),
            };
            let (cp, cq) = (cone(&p), cone(&q));
            let show = || format!("p = {p}, q = {q}");
            let r_def = p.mul(&p.invert()) == q.mul(&q.invert());
            let l_def = p.invert().mul(&p) == q.invert().mul(&q);
            chk.check_eq(show, &r_def, &green(GreenRelation::R, cp, cq)?);
            chk.check_eq(show, &l_def, &green(GreenRelation::L, cp, cq)?);
            chk.check_eq(show, &(r_def && l_def), &green(GreenRelation::H, cp, cq)?);
            // D through the element (g_p, h_q), R-related to p and L-related to q.
            let z = c.make(p.g().clone(), q.h().clone(), ConeTag::Closed);
            let d_def = p.mul(&p.invert()) == z.mul(&z.invert()) && z.invert().mul(&z) == q.invert().mul(&q);
            chk.check_eq(show, &d_def, &green(GreenRelation::D, cp, cq)?);
            // J through explicit two-sided multipliers in both directions.
            let (g1, d1) = d_witness(cp, cq)?;
            let (g2, d2) = d_witness(cq, cp)?;
            let j_def = &g1.mul(cp).mul(&d1) == cq && &g2.mul(cq).mul(&d2) == cp;
            chk.check_eq(show, &j_def, &green(GreenRelation::J, cp, cq)?);
            for w in [&g1, &d1] {
                chk.check(c.contains(&Element::Cone(w.clone())), || Violation::new(show(), format!("witness in {c}"), w));
            }
        }
    }
    Ok(())
}

fn idempotent_semilattice(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    for c in cone_carriers(group) {
        chk.carrier(&c);
        for _ in 0..spec.count.min(1000) {
            let (e, f) = (c.sample_idempotent(&mut s), c.sample_idempotent(&mut s));
            let (a, b) = (e.g(), e.g());
            let b = if s.coin() { f.g() } else { b };
            let f = c.idempotent(b.clone(), ConeTag::Closed);
            let show = || format!("e = {e}, f = {f}");
            chk.check_eq(show, &idempotent_le(&e, &f), &natural_order_idem(a, b)?);
            chk.check(idempotent_le(&e, &f) || idempotent_le(&f, &e), || Violation::new(show(), "comparable", "incomparable"));
            let prod = idempotent_product(a, b)?;
            chk.check_eq(show, &c.idempotent(prod, ConeTag::Closed), &e.mul(&f));
        }
    }
    Ok(())
}

fn tagged(c: &Carrier, s: &mut Sampler, tag: ConeTag) -> Element {
    let x = c.sample(s);
    c.make(x.g().clone(), x.h().clone(), tag)
}

fn tags_of(i: usize) -> [ConeTag; 3] {
    let bit = |k: usize| if (i >> k) & 1 == 1 { ConeTag::Open } else { ConeTag::Closed };
    [bit(0), bit(1), bit(2)]
}

fn ext_product_oracle(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    for c in ext_carriers(group) {
        chk.carrier(&c);
        for i in 0..spec.count {
            let [t0, t1, t2] = tags_of(i);
            let (p, q, r) = (tagged(&c, &mut s, t0), tagged(&c, &mut s, t1), tagged(&c, &mut s, t2));
            let (ep, eq) = (ext(&p), ext(&q));
            let pq = ep.mul(eq);
            chk.check_eq(|| format!("p = {p}, q = {q}, r = {r}"), &p.mul(&q).mul(&r), &p.mul(&q.mul(&r)));
            chk.check_eq(|| format!("underlying pair of {p} * {q}"), &ep.underlying().mul(&eq.underlying()), &pq.underlying());
            // The base itself separates the two tags.
            let at_base = ep.apply(ep.g());
            chk.check(at_base.is_some() == !ep.is_open(), || {
                Violation::new(format!("{p} at its base"), if ep.is_open() { "undefined" } else { "defined" }, show_opt(&at_base))
            });
            for x in oracle_points(&mut s, &p, &q, pq.g()) {
                let composed = ep.apply(&x).and_then(|y| eq.apply(&y));
                let direct = pq.apply(&x);
                chk.check(composed == direct, || {
                    Violation::new(format!("({p} * {q}) at {x}"), show_opt(&composed), show_opt(&direct))
                });
                let inside = if pq.is_open() { pq.g().lt(&x) } else { pq.g().le(&x) };
                chk.check(composed.is_some() == inside, || {
                    Violation::new(format!("domain of {p} * {q} at {x}"), format!("cone of {pq}"), show_opt(&composed))
                });
            }
        }
    }
    Ok(())
}

fn ext_green(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    for c in ext_carriers(group) {
        chk.carrier(&c);
        for i in 0..spec.count.min(1000) {
            let p = c.sample(&mut s);
            let q = match i % 4 {
                0 => c.make(p.g().clone(), c.sample(&mut s).h().clone(), tags_of(i / 4)[0]),
                1 => c.make(c.sample(&mut s).g().clone(), p.h().clone(), tags_of(i / 4)[0]),
                _ => c.sample(&mut s),
            };
            let (ep, eq) = (ext(&p), ext(&q));
            let show = || format!("p = {p}, q = {q}");
            let r_def = p.mul(&p.invert()) == q.mul(&q.invert());
            let l_def = p.invert().mul(&p) == q.invert().mul(&q);
            chk.check_eq(show, &r_def, &green_ext(GreenRelation::R, ep, eq)?);
            chk.check_eq(show, &l_def, &green_ext(GreenRelation::L, ep, eq)?);
            chk.check_eq(show, &(r_def && l_def), &green_ext(GreenRelation::H, ep, eq)?);
            // z·z⁻¹ carries the tag of z, so an R-L path keeps the tag; with
            // equal tags (g_p, h_q) is such a path.
            for x in [&p, &q] {
                chk.check_eq(|| format!("tag of {x} x^-1"), &ext(x).tag(), &ext(&x.mul(&x.invert())).tag());
            }
            let z = c.make(p.g().clone(), q.h().clone(), ep.tag());
            let d_def = ep.tag() == eq.tag()
                && p.mul(&p.invert()) == z.mul(&z.invert())
                && z.invert().mul(&z) == q.invert().mul(&q);
            chk.check_eq(show, &d_def, &green_ext(GreenRelation::D, ep, eq)?);
            let (g1, d1) = simplicity_witness(ep, eq)?;
            let (g2, d2) = simplicity_witness(eq, ep)?;
            let j_def = &g1.mul(ep).mul(&d1) == eq && &g2.mul(eq).mul(&d2) == ep;
            chk.check_eq(show, &j_def, &green_ext(GreenRelation::J, ep, eq)?);
        }
    }
    Ok(())
}

/// Target order on `G ×lex {0,1}` matching `≼`: larger base first, then
/// the open bit below the closed one.
fn embed_le(x: &(GroupElement, u8), y: &(GroupElement, u8)) -> bool {
    y.0.lt(&x.0) || (x.0 == y.0 && x.1 <= y.1)
}

fn ext_semilattice_lex(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    for c in ext_carriers(group) {
        chk.carrier(&c);
        for _ in 0..spec.count.min(1000) {
            let e = c.sample_idempotent(&mut s);
            let f = if s.chance(1, 3) {
                c.idempotent(e.g().clone(), ConeTag::Open)
            } else {
                c.sample_idempotent(&mut s)
            };
            let (ee, ef) = (ext(&e), ext(&f));
            let (ie, jf) = (semilattice_embed(ee)?, semilattice_embed(ef)?);
            let show = || format!("e = {e}, f = {f}");
            let le = natural_order_ext(ee, ef)?;
            chk.check_eq(show, &idempotent_le(&e, &f), &le);
            chk.check_eq(show, &embed_le(&ie, &jf), &le);
            chk.check(le || natural_order_ext(ef, ee)?, || Violation::new(show(), "comparable", "incomparable"));
            chk.check_eq(show, &(e == f), &(ie == jf));
            let meet = if embed_le(&ie, &jf) { ie.clone() } else { jf.clone() };
            let got = semilattice_embed(ext(&e.mul(&f)))?;
            chk.check(got == meet, || Violation::new(show(), format!("({}, {})", meet.0, meet.1), format!("({}, {})", got.0, got.1)));
        }
    }
    Ok(())
}

fn simplicity_witnesses(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    for c in ext_carriers(group) {
        chk.carrier(&c);
        for case in WitnessCase::ALL {
            let (tp, tq) = case.tags();
            for _ in 0..spec.count.min(1000) {
                let (p, q) = (tagged(&c, &mut s, tp), tagged(&c, &mut s, tq));
                let (gamma, delta) = simplicity_witness(ext(&p), ext(&q))?;
                let (gamma, delta) = (Element::Ext(gamma), Element::Ext(delta));
                let show = || format!("{case:?}: p = {p}, q = {q}, witnesses {gamma}, {delta}");
                chk.check_eq(show, &q, &gamma.mul(&p).mul(&delta));
                chk.check(c.contains(&gamma) && c.contains(&delta), || Violation::new(show(), format!("witnesses in {c}"), "outside"));
            }
        }
    }
    Ok(())
}

fn fold_model(word: &BicyclicWord, n: u64) -> Option<u64> {
    transformation_apply(word, n)
}

fn bicyclic_rewrite(chk: &mut Checker, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    chk.carrier("C(p,q)");
    let forms: Vec<BicyclicNormal> = (0..=5).flat_map(|k| (0..=5).map(move |l| BicyclicNormal::new(k, l))).collect();
    for &x in &forms {
        for &y in &forms {
            let word = x.to_word().concat(&y.to_word());
            let nf = normalize(&word);
            let show = || format!("{x} * {y}");
            chk.check_eq(show, &nf, &mult_normal(x, y));
            chk.check_eq(show, &iso_to_bplus_z(nf), &iso_to_bplus_z(x).mul(&iso_to_bplus_z(y)));
            let nf_word = nf.to_word();
            for n in 1..=20 {
                chk.check(fold_model(&word, n) == fold_model(&nf_word, n), || {
                    Violation::new(format!("{} at {n}", show()), format!("{:?}", fold_model(&word, n)), format!("{:?}", fold_model(&nf_word, n)))
                });
            }
        }
    }
    for _ in 0..spec.count.min(1000) {
        let w1 = random_word(&mut s, 20);
        let w2 = random_word(&mut s, 20);
        let nf = normalize(&w1);
        let mut w = w1.clone();
        loop {
            let redexes = w.redexes();
            if redexes.is_empty() {
                break;
            }
            let before = w.len();
            w.rewrite_at(redexes[s.index(redexes.len())]);
            chk.check_eq(|| format!("rewrite step in {w1}"), &(before - 2), &w.len());
        }
        let reached = w.as_normal();
        chk.check(reached == Some(nf), || {
            Violation::new(format!("random rewrite order of {w1}"), nf, format!("{reached:?}"))
        });
        chk.check_eq(|| format!("{w1} ++ {w2}"), &normalize(&w1.concat(&w2)), &mult_normal(nf, normalize(&w2)));
        for n in 1..=20 {
            chk.check(fold_model(&w1, n) == fold_model(&nf.to_word(), n), || {
                Violation::new(format!("{w1} at {n}"), format!("{:?}", fold_model(&w1, n)), format!("{:?}", fold_model(&nf.to_word(), n)))
            });
        }
    }
    Ok(())
}

fn random_word(s: &mut Sampler, max_len: i64) -> BicyclicWord {
    let len = s.int_in(0, max_len);
    BicyclicWord::new((0..len).map(|_| if s.coin() { Letter::P } else { Letter::Q }).collect())
}

fn bicyclic_embedding(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    chk.carrier(format!("C(g,h) in B({group})"));
    let forms: Vec<BicyclicNormal> = (0..=4).flat_map(|k| (0..=4).map(move |l| BicyclicNormal::new(k, l))).collect();
    for i in 0..spec.count.min(20) {
        let g = if i % 2 == 0 { s.positive(group) } else { s.element(group) };
        let h = g.mul(&s.strictly_positive(group));
        let copy = embedded_copy(&g, &h)?;
        let pre = || format!("g = {g}, h = {h}");
        chk.check(embedded_copy(&h, &g).is_err(), || Violation::new(pre(), "h < g rejected", "accepted"));
        chk.check_eq(pre, &copy.unit, &copy.evaluate_normal(BicyclicNormal::ONE));
        let images: Vec<ConeElement> = forms.iter().map(|&x| copy.evaluate_normal(x)).collect();
        for (a, x) in forms.iter().zip(&images) {
            for (b, y) in forms.iter().zip(&images) {
                chk.check((a == b) == (x == y), || Violation::new(format!("{} with {a}, {b}", pre()), "injective", format!("{x} vs {y}")));
                chk.check_eq(|| format!("{} with {a} * {b}", pre()), &copy.evaluate_normal(mult_normal(*a, *b)), &x.mul(y));
            }
        }
        for _ in 0..20 {
            let w = random_word(&mut s, 12);
            chk.check_eq(|| format!("{} with word {w}", pre()), &copy.evaluate_normal(normalize(&w)), &copy.evaluate(&w));
        }
    }
    Ok(())
}

fn cong_axioms(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    for (i, c) in all_carriers(group).into_iter().enumerate() {
        chk.carrier(&c);
        for (j, cong) in Congruence::shipped_on(&c).into_iter().enumerate() {
            chk.absorb(check_congruence(&cong, &spec.derive((i * 16 + j) as u64))?);
        }
        let planted = Congruence::new(CongruenceKind::GParts, c.clone())?;
        let r = check_congruence(&planted, &spec.derive((i * 16 + 15) as u64))?;
        chk.check(r.failed(), || Violation::new(format!("g_parts on {c}"), "refuted", "accepted as a congruence"));
    }
    Ok(())
}

fn cmg_properties(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    let e = group.identity();
    for c in all_carriers(group) {
        chk.carrier(&c);
        let cmg = Congruence::new(CongruenceKind::Cmg, c.clone())?;
        for i in 0..spec.count {
            let x = c.sample(&mut s);
            let y = if i % 2 == 0 { cmg.partner(&x, &mut s) } else { c.sample(&mut s) };
            let show = || format!("x = {x}, y = {y}");
            let related = cmg_related(&x, &y)?;
            let witness = cmg_witness(&x, &y)?;
            let same = cmg_canonical(&x) == cmg_canonical(&y);
            chk.check_eq(show, &related, &witness.is_some());
            chk.check_eq(show, &related, &same);
            if let Some(w) = &witness {
                chk.check(w.is_idempotent() && c.contains(w) && x.mul(w) == y.mul(w), || {
                    Violation::new(show(), "idempotent e with xe = ye", w)
                });
            }
            let (fx, fy, fxy) = (cmg_canonical(&x), cmg_canonical(&y), cmg_canonical(&x.mul(&y)));
            chk.check_eq(show, &fy.mul(&fx), &fxy);
            if group.is_commutative() {
                chk.check_eq(show, &fx.mul(&fy), &fxy);
            }
            // Every v is hit: v = t⁻¹·(v·t) with t chosen to keep both in the cone.
            let v = s.element(group);
            let t = v.inverse().join(&e).clone();
            let rep = c.make(v.mul(&t), t, ConeTag::Closed);
            chk.check(c.contains(&rep), || Violation::new(format!("v = {v}"), format!("preimage in {c}"), &rep));
            chk.check_eq(|| format!("preimage {rep} of {v}"), &v, &cmg_canonical(&rep));
        }
        let cls = classify_group_congruence(&cmg, spec)?;
        chk.check_eq(|| format!("classification of cmg on {c}"), &GroupVerdict::Group, &cls.verdict);
    }
    Ok(())
}

fn tilde_c_properties(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    for c in cone_carriers(group) {
        chk.carrier(&c);
        let tc = Congruence::new(CongruenceKind::TildeC, c.clone())?;
        for _ in 0..spec.count {
            let x1 = c.sample(&mut s);
            let x2 = tc.partner(&x1, &mut s);
            let z = c.sample(&mut s);
            right_clauses(chk, &x1, &x2, &z);
            left_clauses(chk, &x1, &x2, &z);
        }
        let cls = classify_group_congruence(&tc, spec)?;
        chk.check(cls.verdict == GroupVerdict::NonGroup && cls.witness_classes.len() >= 2, || {
            Violation::new(format!("classification of tilde_c on {c}"), "NON_GROUP with two idempotent classes", cls.verdict)
        });
        // Idempotents with different left components stay apart.
        let (a, b) = (s.positive(group), s.strictly_positive(group));
        let (ea, eb) = (c.idempotent(a.clone(), ConeTag::Closed), c.idempotent(a.mul(&b), ConeTag::Closed));
        if a.parts().map(|p| p.0) != a.mul(&b).parts().map(|p| p.0) {
            chk.check(!tc.related(&ea, &eb)?, || Violation::new(format!("{ea}, {eb}"), "distinct classes", "same class"));
        }
    }
    Ok(())
}

type Quad<'a> = (&'a GroupElement, &'a GroupElement, &'a GroupElement, &'a GroupElement);

fn quad(x: &Element) -> Quad<'_> {
    let (a, b) = x.g().parts().expect("lex carrier");
    let (c, d) = x.h().parts().expect("lex carrier");
    (a, b, c, d)
}

/// `x·z` for `x = ((a,b),(c,d))`, `z = ((u,v),(x,y))`: each applicable case
/// predicts the left component `k` of the domain base, the left component
/// `m` of the range base, and `n⁻¹·l` of the product.
fn right_clauses(chk: &mut Checker, x1: &Element, x2: &Element, z: &Element) {
    let (u, v, xx, y) = quad(z);
    let mut predicted = Vec::new();
    for x in [x1, x2] {
        let (a, b, c, d) = quad(x);
        let prod = x.mul(z);
        let (k, l, m, n) = quad(&prod);
        let ratio = y.inverse().mul(v).mul(&d.inverse()).mul(b);
        let cases: [(bool, GroupElement, GroupElement); 4] = [
            (c.lt(u), u.mul(&c.inverse()).mul(a), xx.clone()),
            (c == u && d.le(v), a.clone(), xx.clone()),
            (u.lt(c), a.clone(), c.mul(&u.inverse()).mul(xx)),
            (u == c && v.le(d), a.clone(), xx.clone()),
        ];
        for (i, (applies, pk, pm)) in cases.into_iter().enumerate() {
            if applies {
                let got = (k.clone(), m.clone(), n.inverse().mul(l));
                let want = (pk, pm, ratio.clone());
                chk.check(got == want, || {
                    Violation::new(format!("right case {}: {x} * {z}", i + 1), show3(&want), show3(&got))
                });
                predicted.push(want);
            }
        }
    }
    chk.check(predicted.windows(2).all(|w| w[0] == w[1]), || {
        Violation::new(format!("right cases for {x1} ~ {x2} times {z}"), "one prediction", format!("{} distinct", predicted.len()))
    });
}

/// `z·x`, the mirror of [`right_clauses`], predicting `p`, `r` and `s⁻¹·q`.
fn left_clauses(chk: &mut Checker, x1: &Element, x2: &Element, z: &Element) {
    let (u, v, xx, y) = quad(z);
    let mut predicted = Vec::new();
    for x in [x1, x2] {
        let (a, b, c, d) = quad(x);
        let prod = z.mul(x);
        let (p, q, r, s) = quad(&prod);
        let ratio = d.inverse().mul(b).mul(&y.inverse()).mul(v);
        let cases: [(bool, GroupElement, GroupElement); 4] = [
            (xx.lt(a), a.mul(&xx.inverse()).mul(u), c.clone()),
            (xx == a && y.le(b), u.clone(), c.clone()),
            (a.lt(xx), u.clone(), xx.mul(&a.inverse()).mul(c)),
            (a == xx && b.le(y), u.clone(), c.clone()),
        ];
        for (i, (applies, pp, pr)) in cases.into_iter().enumerate() {
            if applies {
                let got = (p.clone(), r.clone(), s.inverse().mul(q));
                let want = (pp, pr, ratio.clone());
                chk.check(got == want, || {
                    Violation::new(format!("left case {}: {z} * {x}", i + 1), show3(&want), show3(&got))
                });
                predicted.push(want);
            }
        }
    }
    chk.check(predicted.windows(2).all(|w| w[0] == w[1]), || {
        Violation::new(format!("left cases for {z} times {x1} ~ {x2}"), "one prediction", format!("{} distinct", predicted.len()))
    });
}

fn show3(t: &(GroupElement, GroupElement, GroupElement)) -> String {
    format!("[{};{};{}]", t.0, t.1, t.2)
}

fn tilde_id_quotient(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    for c in ext_carriers(group) {
        chk.carrier(&c);
        let tid = Congruence::new(CongruenceKind::TildeId, c.clone())?;
        let base = Carrier::new(group.clone(), CarrierKind::from_flags(false, c.is_plus()))?;
        for _ in 0..spec.count {
            let (x, y) = (c.sample(&mut s), c.sample(&mut s));
            let show = || format!("x = {x}, y = {y}");
            let prod_class = tid.canonical(&x.mul(&y))?;
            let via_b = CanonicalClass::ClosedPair(x.underlying().mul(&y.underlying()));
            chk.check_eq(show, &via_b, &prod_class);
            chk.check_eq(show, &(x.underlying() == y.underlying()), &tid.related(&x, &y)?);
            // Each element of B(G) names exactly one class, hit by both tags.
            let p = base.sample(&mut s);
            for tag in [ConeTag::Closed, ConeTag::Open] {
                let lifted = c.make(p.g().clone(), p.h().clone(), tag);
                chk.check_eq(|| format!("class of {lifted}"), &CanonicalClass::ClosedPair(p.underlying()), &tid.canonical(&lifted)?);
            }
        }
    }
    Ok(())
}

fn tilde_bar_quotient(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    for c in ext_carriers(group) {
        chk.carrier(&c);
        let bar = Congruence::new(CongruenceKind::TildeBar, c.clone())?;
        let base = Carrier::new(group.clone(), CarrierKind::from_flags(false, c.is_plus()))?;
        let tc = Congruence::new(CongruenceKind::TildeC, base)?;
        for _ in 0..spec.count {
            let x = c.sample(&mut s);
            let y = if s.coin() { bar.partner(&x, &mut s) } else { c.sample(&mut s) };
            let show = || format!("x = {x}, y = {y}");
            let (ux, uy) = (Element::Cone(x.underlying()), Element::Cone(y.underlying()));
            let lifted = CanonicalClass::Lifted(Box::new(tc.canonical(&ux.mul(&uy))?));
            chk.check_eq(show, &lifted, &bar.canonical(&x.mul(&y))?);
            chk.check_eq(show, &CanonicalClass::Lifted(Box::new(tc.canonical(&ux)?)), &bar.canonical(&x)?);
            let under = tc.related(&ux, &uy)?;
            for tx in [ConeTag::Closed, ConeTag::Open] {
                for ty in [ConeTag::Closed, ConeTag::Open] {
                    let xt = c.make(x.g().clone(), x.h().clone(), tx);
                    let yt = c.make(y.g().clone(), y.h().clone(), ty);
                    chk.check_eq(|| format!("{xt} vs {yt}"), &under, &bar.related(&xt, &yt)?);
                }
            }
        }
    }
    Ok(())
}

fn convexity(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    for (i, c) in all_carriers(group).into_iter().enumerate() {
        chk.carrier(&c);
        for (j, cong) in Congruence::shipped_on(&c).into_iter().enumerate() {
            chk.absorb(convexity_check(&cong, &spec.derive((i * 16 + j) as u64))?);
        }
    }
    Ok(())
}

fn propagation(chk: &mut Checker, group: &OrderedGroup, spec: &SampleSpec) -> Result<()> {
    let mut s = Sampler::new(spec)?;
    chk.carrier(format!("B+({group})"));
    for _ in 0..spec.count.min(100) {
        let a = s.positive(group);
        let c = a.mul(&s.strictly_positive(group));
        let n = s.int_in(1, 10) as u32;
        chk.absorb(propagation_identity(&a, &c, n)?);
        let ladder = propagation_ladder(&a, &c, n)?;
        let step = a.inverse().mul(&c);
        let expected: Vec<GroupElement> = (0..=n).map(|i| c.mul(&step.pow(i))).collect();
        chk.check(ladder == expected, || {
            Violation::new(format!("a = {a}, c = {c}, n = {n}"), join(&expected), join(&ladder))
        });
        chk.check(propagation_identity(&a, &a, n).is_err(), || Violation::new(format!("a = c = {a}"), "rejected", "accepted"));
    }
    Ok(())
}

fn join(xs: &[GroupElement]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn spec(count: usize) -> SampleSpec {
        SampleSpec::new(1, count, 50)
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("nope".parse::<Suite>(), Err(AlgebraError::UnknownSuite(_))));
    }

    #[test]
    fn incompatible_groups_skip() {
        let r = run_suite(Suite::TildeCProperties, &OrderedGroup::Rationals, &spec(10)).unwrap();
        assert_eq!(r.status, Status::Skipped);
        let r = run_suite(Suite::ExtProductOracle, &OrderedGroup::Integers, &spec(10)).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(r.reason.unwrap().contains("d-group required"));
    }

    #[test]
    fn every_suite_passes_small() {
        for g in catalog_groups() {
            for s in Suite::ALL {
                let r = run_suite(s, &g, &spec(60)).unwrap();
                assert!(!r.failed(), "{}", r.to_text());
            }
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let g = OrderedGroup::lex(OrderedGroup::Integers, OrderedGroup::Rationals);
        for s in [Suite::CongAxioms, Suite::ExtGreen, Suite::Propagation] {
            let a = run_suite(s, &g, &spec(40)).unwrap();
            let b = run_suite(s, &g, &spec(40)).unwrap();
            assert_eq!((a.cases_run, a.violations, a.status), (b.cases_run, b.violations, b.status));
        }
    }
}
