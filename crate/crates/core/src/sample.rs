//! Seeded generation of group elements and semigroup elements.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::group::{GroupElement, OrderedGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SampleSpec {
    pub seed: u64,
    pub count: usize,
    /// Magnitude cap for every integer coordinate, numerator and denominator.
    pub bound: u64,
}

impl SampleSpec {
    pub fn new(seed: u64, count: usize, bound: u64) -> Self {
        SampleSpec { seed, count, bound }
    }

    pub fn validate(&self) -> Result<()> {
        if self.bound < 1 {
            return Err(AlgebraError::Config("bound must be at least 1".into()));
        }
        if self.count < 1 {
            return Err(AlgebraError::Config("count must be at least 1".into()));
        }
        Ok(())
    }

    /// Same count and bound, seed mixed with `salt` so that independent
    /// suites draw independent streams.
    pub fn derive(&self, salt: u64) -> SampleSpec {
        let mixed = self
            .seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(salt.wrapping_mul(0xD1B5_4A32_D192_ED03))
            .rotate_left(17);
        SampleSpec { seed: mixed, ..*self }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    pub fn new(spec: &SampleSpec) -> Result<Self> {
        if spec.bound < 1 {
            return Err(AlgebraError::Config("bound must be at least 1".into()));
        }
        let bound = i64::try_from(spec.bound)
            .map_err(|_| AlgebraError::Config("bound exceeds i64".into()))?;
        Ok(Sampler {
            rng: ChaCha8Rng::seed_from_u64(spec.seed),
            bound,
        })
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    /// True with probability `num/den`.
    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.rng.gen_ratio(num, den)
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    fn bigint_in(&mut self, lo: &BigInt, hi: &BigInt) -> BigInt {
        let span = hi - lo;
        let span = i64::try_from(&span).unwrap_or(i64::MAX - 1);
        lo + BigInt::from(self.rng.gen_range(0..=span))
    }

    pub fn element(&mut self, group: &OrderedGroup) -> GroupElement {
        let b = self.bound;
        match group {
            OrderedGroup::Integers => GroupElement::int(self.int_in(-b, b)),
            OrderedGroup::Rationals => {
                let num = self.int_in(-b, b);
                let den = self.int_in(1, b);
                GroupElement::rat(num, den)
            }
            OrderedGroup::Lex(l, r) => {
                let left = self.element(l);
                GroupElement::pair(left, self.element(r))
            }
        }
    }

    /// An element of the positive cone `G⁺`.
    pub fn positive(&mut self, group: &OrderedGroup) -> GroupElement {
        let x = self.element(group);
        if x.is_positive() {
            x
        } else {
            x.inverse()
        }
    }

    /// A strictly positive element.
    pub fn strictly_positive(&mut self, group: &OrderedGroup) -> GroupElement {
        loop {
            let x = self.positive(group);
            if !x.is_identity() {
                return x;
            }
        }
    }

    /// An element `z` with `lo ≤ z ≤ hi`; requires `lo ≤ hi`.
    pub fn between(&mut self, lo: &GroupElement, hi: &GroupElement) -> GroupElement {
        debug_assert!(lo.le(hi));
        match (lo, hi) {
            (GroupElement::Int(a), GroupElement::Int(b)) => GroupElement::Int(self.bigint_in(a, b)),
            (GroupElement::Rat(a), GroupElement::Rat(b)) => {
                let den = self.int_in(1, self.bound.max(2));
                let num = self.int_in(0, den);
                let t = BigRational::new(BigInt::from(num), BigInt::from(den));
                GroupElement::Rat(a + (b - a) * t)
            }
            (GroupElement::Pair(a, b), GroupElement::Pair(c, d)) => {
                if a == c {
                    return GroupElement::pair((**a).clone(), self.between(b, d));
                }
                let left = self.between(a, c);
                let free = self.element(&b.group());
                let right = if left == **a {
                    b.join(&free).clone()
                } else if left == **c {
                    d.meet(&free).clone()
                } else {
                    free
                };
                GroupElement::pair(left, right)
            }
            _ => panic!("between across distinct groups"),
        }
    }

    /// An element at or just around `x`: `x`, a strict successor or a
    /// strict predecessor.
    pub fn near(&mut self, x: &GroupElement) -> GroupElement {
        match self.int_in(0, 2) {
            0 => x.clone(),
            1 => x.strictly_greater(),
            _ => x.strictly_less(),
        }
    }

    /// An element `≥ x`, close to `x` with good probability.
    pub fn above(&mut self, x: &GroupElement) -> GroupElement {
        let step = self.positive(&x.group());
        match self.int_in(0, 3) {
            0 => x.clone(),
            1 => x.strictly_greater(),
            _ => x.mul(&step),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_below_one_is_rejected() {
        assert!(matches!(
            Sampler::new(&SampleSpec::new(7, 1, 0)),
            Err(AlgebraError::Config(_))
        ));
        assert!(OrderedGroup::Integers.sample(&SampleSpec::new(7, 1, 0)).is_err());
    }

    #[test]
    fn draws_respect_bound() {
        let spec = SampleSpec::new(7, 1, 5);
        let mut s = Sampler::new(&spec).unwrap();
        let zz = OrderedGroup::lex(OrderedGroup::Integers, OrderedGroup::Integers);
        for _ in 0..1000 {
            let GroupElement::Int(v) = s.element(&OrderedGroup::Integers) else { panic!() };
            assert!(v >= BigInt::from(-5) && v <= BigInt::from(5));
            let GroupElement::Pair(a, b) = s.element(&zz) else { panic!() };
            for c in [a, b] {
                let GroupElement::Int(v) = *c else { panic!() };
                assert!(v.magnitude() <= &5u32.into());
            }
            let GroupElement::Rat(q) = s.element(&OrderedGroup::Rationals) else { panic!() };
            assert!(q.numer().magnitude() <= &5u32.into());
            assert!(q.denom().magnitude() <= &5u32.into());
        }
    }

    #[test]
    fn same_seed_same_sequence() {
        let spec = SampleSpec::new(7, 1, 5);
        let g = OrderedGroup::lex(OrderedGroup::Integers, OrderedGroup::Rationals);
        let mut a = Sampler::new(&spec).unwrap();
        let mut b = Sampler::new(&spec).unwrap();
        let xs: Vec<_> = (0..50).map(|_| a.element(&g)).collect();
        let ys: Vec<_> = (0..50).map(|_| b.element(&g)).collect();
        assert_eq!(xs, ys);
        assert_eq!(g.sample(&spec).unwrap(), xs[0]);
    }

    #[test]
    fn between_stays_between() {
        let spec = SampleSpec::new(3, 1, 20);
        let mut s = Sampler::new(&spec).unwrap();
        let groups = [
            OrderedGroup::Integers,
            OrderedGroup::Rationals,
            OrderedGroup::lex(OrderedGroup::Integers, OrderedGroup::Rationals),
        ];
        for g in &groups {
            for _ in 0..500 {
                let x = s.element(g);
                let y = s.element(g);
                let (lo, hi) = if x.le(&y) { (x, y) } else { (y, x) };
                let z = s.between(&lo, &hi);
                assert!(lo.le(&z) && z.le(&hi), "{lo} <= {z} <= {hi}");
            }
        }
    }
}
