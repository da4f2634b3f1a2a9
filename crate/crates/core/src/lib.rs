//! Exact arithmetic and brute-force oracles for finite transformation
//! monoids, partition monoids and the shift-map monoid `P(g, h, e)`.
//!
//! ```
//! use coherency::{Element, PartialMap};
//!
//! let a = PartialMap::parse("[2,_,1]").unwrap();
//! let b = PartialMap::parse("[3,3,1]").unwrap();
//! assert_eq!(a.mul(&b).to_string(), "[3,_,3]");
//! ```

pub mod cli;
pub mod congruence;
pub mod elements;
pub mod error;
pub mod ideals;
pub mod order;
pub mod pmonoid;
pub mod random;
pub mod suites;

pub use congruence::{FiniteMonoid, RightCongruence, Side, YSequence, YStep};
pub use elements::{Element, EqRel, Kind, PartialMap, Partition};
pub use error::{Error, ParseError, Result};
pub use ideals::{Meet, Meets};
pub use order::GreenOrder;
pub use pmonoid::Nf;
