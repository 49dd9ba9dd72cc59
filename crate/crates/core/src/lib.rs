//! Exact arithmetic for inverse semigroups of partial translations of cones
//! in linearly ordered groups, their congruences, and seeded property suites.

pub mod bicyclic;
pub mod carrier;
pub mod cone;
pub mod congruence;
pub mod error;
pub mod extended;
pub mod group;
pub mod harness;
pub mod parse;
pub mod report;
pub mod sample;

pub use error::{AlgebraError, Result};
pub use carrier::{Carrier, CarrierKind, Element};
pub use group::{ConeDescriptor, GroupElement, OrderedGroup};
pub use sample::{SampleSpec, Sampler};
