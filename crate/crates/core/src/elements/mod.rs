//! Transformations, partial maps, partial bijections and partitions of a
//! finite ground set, with their kernels, images and Green parameters.
//!
//! Points are 0-based internally and printed 1-based. In a partition of
//! degree `n` the primed copy `x'` of `x` is stored as `n + x`.

mod embed;
mod enumerate;
mod eqrel;
mod partial_map;
mod partition;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

pub use embed::{embed_i_into_p, embed_i_into_pt, embed_pt_into_t};
pub use enumerate::{bell, enumerate_maps, enumerate_partitions, DEFAULT_ENUMERATION_CAP};
pub use eqrel::{EqRel, UnionFind};
pub use partial_map::{MapProfile, PartialMap};
pub use partition::{BlockKind, Partition, PartitionProfile};

use crate::error::{Error, ParseError, Result};

/// The four families of monoids on a finite ground set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// Full transformations.
    T,
    /// Partial transformations.
    PT,
    /// Partial bijections (symmetric inverse monoid).
    I,
    /// Set partitions of two copies of the ground set.
    P,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::T, Kind::PT, Kind::I, Kind::P];

    /// Number of elements at degree `n`, or `None` on overflow.
    pub fn order(self, n: usize) -> Option<u128> {
        let n128 = n as u128;
        match self {
            Kind::T => n128.checked_pow(n as u32),
            Kind::PT => (n128 + 1).checked_pow(n as u32),
            Kind::I => {
                let mut total: u128 = 0;
                for k in 0..=n {
                    let c = binomial(n, k)?;
                    let f = (1..=k as u128).try_fold(1u128, |acc, x| acc.checked_mul(x))?;
                    total = total.checked_add(c.checked_mul(c)?.checked_mul(f)?)?;
                }
                Some(total)
            }
            Kind::P => bell(2 * n),
        }
    }

    pub fn is_partition(self) -> bool {
        self == Kind::P
    }
}

fn binomial(n: usize, k: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::T => "T",
            Kind::PT => "PT",
            Kind::I => "I",
            Kind::P => "P",
        })
    }
}

impl FromStr for Kind {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "T" => Ok(Kind::T),
            "PT" => Ok(Kind::PT),
            "I" => Ok(Kind::I),
            "P" => Ok(Kind::P),
            _ => Err(ParseError {
                position: 0,
                expected: "one of T, PT, I, P".into(),
                found: format!("{s:?}"),
            }),
        }
    }
}

/// A monoid element of one of the concrete families.
///
/// Multiplication composes left to right: `x(ab) = (xa)b`.
pub trait Element: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync {
    fn degree(&self) -> usize;

    fn identity(degree: usize) -> Self;

    fn try_mul(&self, rhs: &Self) -> Result<Self>;

    /// Product of two elements of equal degree.
    ///
    /// Panics on a degree mismatch; use [`Element::try_mul`] for unchecked input.
    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("degree mismatch in product")
    }

    fn belongs_to(&self, kind: Kind) -> bool;

    /// Every element of `kind` at degree `n`, in a fixed order.
    fn enumerate(kind: Kind, n: usize, cap: usize) -> Result<Vec<Self>>;

    fn parse(text: &str) -> Result<Self>;

    fn is_idempotent(&self) -> bool {
        &self.mul(self) == self
    }

    fn check_kind(&self, kind: Kind) -> Result<()> {
        if self.belongs_to(kind) {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                kind,
                element: self.to_string(),
            })
        }
    }
}

pub(crate) fn check_degrees(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DegreeMismatch { left, right })
    }
}
