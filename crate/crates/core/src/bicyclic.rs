//! The bicyclic monoid `C(p,q)` with the single relation `pq = 1`.

use std::fmt;

use crate::cone::ConeElement;
use crate::error::{AlgebraError, Result};
use crate::group::GroupElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    P,
    Q,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BicyclicWord {
    pub letters: Vec<Letter>,
}

/// `q^k p^l`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BicyclicNormal {
    pub k: u64,
    pub l: u64,
}

impl BicyclicWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BicyclicWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BicyclicWord) -> BicyclicWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BicyclicWord { letters }
    }

    /// Positions `i` where `letters[i..i+2] == "pq"`.
    pub fn redexes(&self) -> Vec<usize> {
        self.letters
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w == &[Letter::P, Letter::Q])
            .map(|(i, _)| i)
            .collect()
    }

    /// Deletes the redex starting at `pos`.
    pub fn rewrite_at(&mut self, pos: usize) {
        assert_eq!(&self.letters[pos..pos + 2], &[Letter::P, Letter::Q]);
        self.letters.drain(pos..pos + 2);
    }

    /// Read off `(k, l)` from a word of the form `q^k p^l`.
    pub fn as_normal(&self) -> Option<BicyclicNormal> {
        let k = self.letters.iter().take_while(|&&c| c == Letter::Q).count();
        let rest = &self.letters[k..];
        rest.iter()
            .all(|&c| c == Letter::P)
            .then(|| BicyclicNormal::new(k as u64, rest.len() as u64))
    }
}

impl fmt::Display for BicyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            f.write_str(match c {
                Letter::P => "p",
                Letter::Q => "q",
            })?;
        }
        Ok(())
    }
}

impl BicyclicNormal {
    pub const ONE: BicyclicNormal = BicyclicNormal { k: 0, l: 0 };
    pub const P: BicyclicNormal = BicyclicNormal { k: 0, l: 1 };
    pub const Q: BicyclicNormal = BicyclicNormal { k: 1, l: 0 };

    pub fn new(k: u64, l: u64) -> Self {
        BicyclicNormal { k, l }
    }

    pub fn to_word(self) -> BicyclicWord {
        let mut letters = vec![Letter::Q; self.k as usize];
        letters.extend(std::iter::repeat(Letter::P).take(self.l as usize));
        BicyclicWord { letters }
    }
}

impl fmt::Display for BicyclicNormal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{} p^{}", self.k, self.l)
    }
}

/// Deletes `pq` until none remains. A stack pass suffices: a `q` cancels
/// precisely when the letter before it, after earlier cancellations, is `p`.
pub fn normalize(word: &BicyclicWord) -> BicyclicNormal {
    let mut stack: Vec<Letter> = Vec::with_capacity(word.len());
    for &c in &word.letters {
        if c == Letter::Q && stack.last() == Some(&Letter::P) {
            stack.pop();
        } else {
            stack.push(c);
        }
    }
    BicyclicWord { letters: stack }
        .as_normal()
        .expect("a word without pq is q^k p^l")
}

/// `q^k p^l · q^m p^n = q^(k+m−min(l,m)) p^(l+n−min(l,m))`.
pub fn mult_normal(x: BicyclicNormal, y: BicyclicNormal) -> BicyclicNormal {
    let cancel = x.l.min(y.k);
    BicyclicNormal {
        k: x.k + y.k - cancel,
        l: x.l + y.l - cancel,
    }
}

/// Letters acting on the positive integers: `p` is `n ↦ n+1` (all `n ≥ 1`)
/// and `q` is `n ↦ n−1` (for `n > 1`), applied left to right.
pub fn transformation_apply(word: &BicyclicWord, n: u64) -> Option<u64> {
    word.letters.iter().try_fold(n, |n, c| match c {
        Letter::P if n >= 1 => Some(n + 1),
        Letter::Q if n > 1 => Some(n - 1),
        _ => None,
    })
}

/// The isomorphism `C(p,q) → B⁺(Z)`: `q^k p^l ↦ a[k;l]`, so that
/// `p ↦ a[0;1]` and `q ↦ a[1;0]`.
pub fn iso_to_bplus_z(x: BicyclicNormal) -> ConeElement {
    ConeElement::raw(
        GroupElement::int(x.k as i64),
        GroupElement::int(x.l as i64),
        true,
    )
}

/// The copy of `C(p,q)` inside `B(G)` generated by `a[g;h]` (image of `p`)
/// and `a[h;g]` (image of `q`), with unit `a[g;g]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedCopy {
    pub p: ConeElement,
    pub q: ConeElement,
    pub unit: ConeElement,
}

pub fn embedded_copy(g: &GroupElement, h: &GroupElement) -> Result<EmbeddedCopy> {
    if g.try_cmp(h)? != std::cmp::Ordering::Less {
        return Err(AlgebraError::Precondition(format!(
            "embedded copy needs g < h, got g = {g}, h = {h}"
        )));
    }
    let plus = g.is_positive() && h.is_positive();
    Ok(EmbeddedCopy {
        p: ConeElement::raw(g.clone(), h.clone(), plus),
        q: ConeElement::raw(h.clone(), g.clone(), plus),
        unit: ConeElement::raw(g.clone(), g.clone(), plus),
    })
}

impl EmbeddedCopy {
    pub fn evaluate(&self, word: &BicyclicWord) -> ConeElement {
        word.letters.iter().fold(self.unit.clone(), |acc, c| match c {
            Letter::P => acc.mul(&self.p),
            Letter::Q => acc.mul(&self.q),
        })
    }

    pub fn evaluate_normal(&self, x: BicyclicNormal) -> ConeElement {
        self.evaluate(&x.to_word())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BicyclicWord {
        BicyclicWord::new(
            s.chars()
                .map(|c| if c == 'p' { Letter::P } else { Letter::Q })
                .collect(),
        )
    }

    fn fold(word: &BicyclicWord) -> BicyclicNormal {
        word.letters.iter().fold(BicyclicNormal::ONE, |acc, c| {
            mult_normal(acc, if *c == Letter::P { BicyclicNormal::P } else { BicyclicNormal::Q })
        })
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&w("pq")), BicyclicNormal::ONE);
        assert_eq!(normalize(&w("qp")), BicyclicNormal::new(1, 1));
        // q(pq)ppq -> qp(pq) -> qp
        assert_eq!(normalize(&w("qpqppq")), BicyclicNormal::new(1, 1));
        assert_eq!(normalize(&w("qpqppq")), fold(&w("qpqppq")));
        assert_eq!(normalize(&w("")), BicyclicNormal::ONE);
    }

    #[test]
    fn mult_examples() {
        assert_eq!(mult_normal(BicyclicNormal::new(2, 3), BicyclicNormal::new(1, 2)), BicyclicNormal::new(2, 4));
        assert_eq!(mult_normal(BicyclicNormal::P, BicyclicNormal::Q), BicyclicNormal::ONE);
        let x = BicyclicNormal::new(4, 1);
        assert_eq!(mult_normal(BicyclicNormal::ONE, x), x);
    }

    #[test]
    fn mult_example_agrees_with_transformation_model() {
        let (x, y) = (BicyclicNormal::new(2, 3), BicyclicNormal::new(1, 2));
        let joined = x.to_word().concat(&y.to_word());
        let expected = BicyclicNormal::new(2, 4).to_word();
        for n in 1..=20 {
            assert_eq!(transformation_apply(&joined, n), transformation_apply(&expected, n));
        }
    }

    /// The four candidate conventions for the correspondence with `B⁺(Z)`.
    /// Only the ones equal to `(k,l) ↦ a[k;l]` are homomorphisms.
    #[test]
    fn iso_convention_is_pinned_by_search() {
        let pairs = |x: BicyclicNormal, swap: bool| {
            let (a, b) = if swap { (x.l, x.k) } else { (x.k, x.l) };
            ConeElement::raw(GroupElement::int(a as i64), GroupElement::int(b as i64), true)
        };
        let by_generators = |x: BicyclicNormal, swap: bool| {
            let (pi, qi) = if swap { ((1, 0), (0, 1)) } else { ((0, 1), (1, 0)) };
            let img = |(a, b): (i64, i64)| {
                ConeElement::raw(GroupElement::int(a), GroupElement::int(b), true)
            };
            x.to_word().letters.iter().fold(img((0, 0)), |acc, c| {
                acc.mul(&img(if *c == Letter::P { pi } else { qi }))
            })
        };
        let candidates: Vec<Box<dyn Fn(BicyclicNormal) -> ConeElement>> = vec![
            Box::new(move |x| pairs(x, false)),
            Box::new(move |x| pairs(x, true)),
            Box::new(move |x| by_generators(x, false)),
            Box::new(move |x| by_generators(x, true)),
        ];
        let box5: Vec<_> = (0..=5)
            .flat_map(|k| (0..=5).map(move |l| BicyclicNormal::new(k, l)))
            .collect();
        let mut winners = Vec::new();
        for (i, f) in candidates.iter().enumerate() {
            let hom = box5.iter().all(|&x| box5.iter().all(|&y| f(mult_normal(x, y)) == f(x).mul(&f(y))));
            let images: std::collections::HashSet<_> = box5.iter().map(|&x| f(x)).collect();
            if hom && images.len() == box5.len() {
                winners.push(i);
            }
        }
        assert_eq!(winners, vec![0, 2]);
        for &x in &box5 {
            assert_eq!(candidates[0](x), iso_to_bplus_z(x));
            assert_eq!(candidates[2](x), iso_to_bplus_z(x));
        }
    }

    #[test]
    fn iso_examples() {
        assert_eq!(iso_to_bplus_z(BicyclicNormal::ONE), ConeElement::raw(GroupElement::int(0), GroupElement::int(0), true));
        let lhs = iso_to_bplus_z(mult_normal(BicyclicNormal::P, BicyclicNormal::Q));
        let rhs = iso_to_bplus_z(BicyclicNormal::P).mul(&iso_to_bplus_z(BicyclicNormal::Q));
        assert_eq!(lhs, rhs);
        for k in 0..5 {
            assert!(iso_to_bplus_z(BicyclicNormal::new(k, k)).is_idempotent());
        }
    }

    #[test]
    fn embedded_copy_examples() {
        let copy = embedded_copy(&GroupElement::int(0), &GroupElement::int(1)).unwrap();
        assert_eq!(copy.evaluate(&w("pq")), copy.unit);
        assert_eq!(copy.evaluate(&w("")), copy.unit);
        assert_eq!(copy.evaluate(&w("q")), ConeElement::raw(GroupElement::int(1), GroupElement::int(0), true));
        assert!(embedded_copy(&GroupElement::int(1), &GroupElement::int(1)).is_err());
        assert!(embedded_copy(&GroupElement::int(2), &GroupElement::int(1)).is_err());
    }

    #[test]
    fn embedded_copy_factors_through_normal_forms() {
        let copy = embedded_copy(&GroupElement::int(-2), &GroupElement::int(3)).unwrap();
        for len in 0..=6u32 {
            for bits in 0..(1u32 << len) {
                let word = BicyclicWord::new(
                    (0..len)
                        .map(|i| if bits >> i & 1 == 1 { Letter::P } else { Letter::Q })
                        .collect(),
                );
                let nf = normalize(&word);
                assert_eq!(copy.evaluate(&word), copy.evaluate_normal(nf), "{word}");
            }
        }
    }
}
