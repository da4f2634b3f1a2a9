//! Green's preorders from their structural characterisations, the natural
//! order on idempotents, and generalised inverses, each with a brute-force
//! counterpart over an enumerated monoid.

use crate::congruence::{FiniteMonoid, Side};
use crate::elements::{check_degrees, Element, Kind, PartialMap, Partition};
use crate::error::{Error, Result};

/// Elements whose Green preorders have a closed-form description.
pub trait GreenOrder: Element {
    /// `self ≤_R other`, i.e. `self ∈ other·S`.
    fn leq_r(&self, other: &Self) -> Result<bool>;
    /// `self ≤_L other`, i.e. `self ∈ S·other`.
    fn leq_l(&self, other: &Self) -> Result<bool>;

    fn leq(&self, other: &Self, side: Side) -> Result<bool> {
        match side {
            Side::Right => self.leq_r(other),
            Side::Left => self.leq_l(other),
        }
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

impl GreenOrder for PartialMap {
    /// `dom α ⊆ dom β` and `ker̂ β ⊆ ker̂ α` (as sets of pairs).
    ///
    /// The same test is valid in `T_n` and `I_n`, which are regular
    /// submonoids of `PT_n`.
    fn leq_r(&self, other: &Self) -> Result<bool> {
        check_degrees(self.degree(), other.degree())?;
        Ok(is_subset(&self.dom(), &other.dom()) && self.kerhat().contains(&other.kerhat()))
    }

    /// `im α ⊆ im β`.
    fn leq_l(&self, other: &Self) -> Result<bool> {
        check_degrees(self.degree(), other.degree())?;
        Ok(is_subset(&self.im(), &other.im()))
    }
}

impl GreenOrder for Partition {
    /// `ker β ⊆ ker α` and `N_U(β) ⊆ N_U(α)`.
    fn leq_r(&self, other: &Self) -> Result<bool> {
        check_degrees(self.degree(), other.degree())?;
        let (a, b) = (self.profile(), other.profile());
        Ok(a.ker.contains(&b.ker)
            && b.upper_blocks
                .iter()
                .all(|blk| a.upper_blocks.contains(blk)))
    }

    /// `coker β ⊆ coker α` and `N_L(β) ⊆ N_L(α)`.
    fn leq_l(&self, other: &Self) -> Result<bool> {
        check_degrees(self.degree(), other.degree())?;
        let (a, b) = (self.profile(), other.profile());
        Ok(a.coker.contains(&b.coker)
            && b.lower_blocks
                .iter()
                .all(|blk| a.lower_blocks.contains(blk)))
    }
}

/// `a ≤_R b` for elements of `kind`.
pub fn leq_r<E: GreenOrder>(kind: Kind, a: &E, b: &E) -> Result<bool> {
    a.check_kind(kind)?;
    b.check_kind(kind)?;
    a.leq_r(b)
}

/// `a ≤_L b` for elements of `kind`.
pub fn leq_l<E: GreenOrder>(kind: Kind, a: &E, b: &E) -> Result<bool> {
    a.check_kind(kind)?;
    b.check_kind(kind)?;
    a.leq_l(b)
}

/// Outcome of a multiplier search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderVerdict<E> {
    pub holds: bool,
    /// The first `s` in enumeration order with `bs = a` (or `sb = a`).
    pub witness: Option<E>,
}

/// Decides `a ≤ b` on the given side by searching every multiplier in `monoid`.
pub fn leq_oracle<E: Element>(
    monoid: &FiniteMonoid<E>,
    a: &E,
    b: &E,
    side: Side,
) -> Result<OrderVerdict<E>> {
    let (ia, ib) = (monoid.require(a)?, monoid.require(b)?);
    let found = (0..monoid.size()).find(|&s| match side {
        Side::Right => monoid.mul(ib, s) == ia,
        Side::Left => monoid.mul(s, ib) == ia,
    });
    Ok(OrderVerdict {
        holds: found.is_some(),
        witness: found.map(|s| monoid.element(s).clone()),
    })
}

/// Natural partial order on idempotents: `e ≤ f` iff `ef = fe = e`.
pub fn natural_leq<E: Element>(e: &E, f: &E) -> Result<bool> {
    check_degrees(e.degree(), f.degree())?;
    for x in [e, f] {
        if !x.is_idempotent() {
            return Err(Error::NotIdempotent(x.to_string()));
        }
    }
    Ok(&e.mul(f) == e && &f.mul(e) == e)
}

/// Every `x` in `monoid` with `axa = a` and `xax = x`.
pub fn generalised_inverses<E: Element>(monoid: &FiniteMonoid<E>, a: &E) -> Result<Vec<E>> {
    let ia = monoid.require(a)?;
    Ok((0..monoid.size())
        .filter(|&x| {
            monoid.mul(monoid.mul(ia, x), ia) == ia && monoid.mul(monoid.mul(x, ia), x) == x
        })
        .map(|x| monoid.element(x).clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(t: &str) -> PartialMap {
        PartialMap::parse(t).unwrap()
    }

    fn part(t: &str) -> Partition {
        Partition::parse(t).unwrap()
    }

    #[test]
    fn partial_map_examples() {
        assert!(leq_r(Kind::PT, &pm("[1,_]"), &pm("[1,2]")).unwrap());
        assert!(!leq_r(Kind::PT, &pm("[1,2]"), &pm("[1,_]")).unwrap());
        assert!(leq_l(Kind::T, &pm("[1,1]"), &pm("[1,2]")).unwrap());
        assert!(!leq_l(Kind::T, &pm("[1,2]"), &pm("[1,1]")).unwrap());
        let a = pm("[2,_,2]");
        assert!(a.leq_r(&a).unwrap() && a.leq_l(&a).unwrap());
    }

    #[test]
    fn partition_examples() {
        let bottom = part("{1}{2}{1'}{2'}");
        let id = Partition::identity(2);
        assert!(leq_r(Kind::P, &bottom, &id).unwrap());
        assert!(!leq_r(Kind::P, &id, &bottom).unwrap());
    }

    #[test]
    fn kind_is_checked() {
        assert!(matches!(
            leq_r(Kind::T, &pm("[1,_]"), &pm("[1,2]")),
            Err(Error::KindMismatch { .. })
        ));
        assert!(leq_r(Kind::I, &pm("[1,1]"), &pm("[1,2]")).is_err());
    }

    #[test]
    fn oracle_witnesses() {
        let m = FiniteMonoid::full(Kind::T, 2, 100).unwrap();
        let v = leq_oracle(&m, &pm("[2,2]"), &pm("[1,1]"), Side::Right).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, Some(pm("[2,1]")));

        let a = pm("[2,1]");
        let v = leq_oracle(&m, &a, &a, Side::Right).unwrap();
        assert_eq!(v.witness, Some(PartialMap::identity(2)));

        let v = leq_oracle(&m, &pm("[1,2]"), &pm("[1,1]"), Side::Right).unwrap();
        assert!(!v.holds && v.witness.is_none());

        assert!(leq_oracle(&m, &pm("[1,_]"), &a, Side::Right).is_err());
    }

    #[test]
    fn natural_order_examples() {
        let e = PartialMap::partial_identity(2, [0]).unwrap();
        assert!(natural_leq(&e, &PartialMap::identity(2)).unwrap());
        assert!(natural_leq(&e, &e).unwrap());
        assert!(natural_leq(&part("{1}{2}{1'}{2'}"), &part("{1 1'}{2}{2'}")).unwrap());
        assert!(matches!(
            natural_leq(&pm("[2,1]"), &PartialMap::identity(2)),
            Err(Error::NotIdempotent(_))
        ));
    }

    #[test]
    fn generalised_inverse_examples() {
        let t2 = FiniteMonoid::full(Kind::T, 2, 100).unwrap();
        let c = pm("[1,1]");
        assert!(generalised_inverses(&t2, &c).unwrap().contains(&c));
        let swap = pm("[2,1]");
        assert!(generalised_inverses(&t2, &swap).unwrap().contains(&swap));

        let i2 = FiniteMonoid::full(Kind::I, 2, 100).unwrap();
        let a = pm("[2,_]");
        let inv = generalised_inverses(&i2, &a).unwrap();
        assert_eq!(inv, vec![pm("[_,1]")]);
    }
}
