//! Generators for intersections of two principal one-sided ideals.
//!
//! For `PT_n`, `T_n`, `I_n` and `P_n` the intersection `aS ∩ bS` is either
//! empty or principal, and the functions here build the generator directly
//! from kernels, domains and block structure. [`verify_meet`] checks a
//! result against the intersection computed by enumeration.

use crate::congruence::{FiniteMonoid, Side};
use crate::elements::{check_degrees, Element, EqRel, Kind, PartialMap, Partition};
use crate::error::Result;

/// `aS ∩ bS` (or `Sa ∩ Sb`): empty, or generated by one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Meet<E> {
    Empty,
    Principal(E),
}

impl<E> Meet<E> {
    pub fn is_empty(&self) -> bool {
        matches!(self, Meet::Empty)
    }

    pub fn generator(&self) -> Option<&E> {
        match self {
            Meet::Empty => None,
            Meet::Principal(g) => Some(g),
        }
    }

    pub fn map<F>(self, f: impl FnOnce(E) -> F) -> Meet<F> {
        match self {
            Meet::Empty => Meet::Empty,
            Meet::Principal(g) => Meet::Principal(f(g)),
        }
    }
}

/// Sends every class of `rel` to its least point; undefined off the carrier.
fn collapse_to_minima(rel: &EqRel) -> PartialMap {
    let images = (0..rel.ground()).map(|x| rel.representative(x)).collect();
    PartialMap::new(images).expect("representatives are in range")
}

/// Generator of `αS ∩ βS` in `PT_n`; also correct in `T_n` and `I_n`.
///
/// Its domain is the union `Y` of the classes of `ker α ∨ ker β` lying inside
/// `dom α ∩ dom β`, its kernel is that join restricted to `Y`, and each class
/// is sent to its least point.
pub fn meet_right_pt(a: &PartialMap, b: &PartialMap) -> Result<Meet<PartialMap>> {
    check_degrees(a.degree(), b.degree())?;
    let join = a.ker().join(&b.ker())?;
    let both: Vec<bool> = (0..a.degree())
        .map(|x| a.apply(x).is_some() && b.apply(x).is_some())
        .collect();
    let inside: Vec<Vec<usize>> = join
        .classes()
        .into_iter()
        .filter(|class| class.iter().all(|&x| both[x]))
        .collect();
    let kernel = EqRel::from_classes(a.degree(), inside)?;
    Ok(Meet::Principal(collapse_to_minima(&kernel)))
}

/// Generator of `Sα ∩ Sβ` in `kind`, determined by `im α ∩ im β`.
///
/// In `PT_n` and `I_n` this is the partial identity on the common image. In
/// `T_n` it is empty when the images are disjoint, and otherwise the map
/// fixing the common image and sending everything else to its least point.
pub fn meet_left_map(kind: Kind, a: &PartialMap, b: &PartialMap) -> Result<Meet<PartialMap>> {
    check_degrees(a.degree(), b.degree())?;
    a.check_kind(kind)?;
    b.check_kind(kind)?;
    let im_b = b.im();
    let common: Vec<usize> = a.im().into_iter().filter(|y| im_b.contains(y)).collect();
    let n = a.degree();
    match kind {
        Kind::T => {
            let Some(&least) = common.first() else {
                return Ok(Meet::Empty);
            };
            let images = (0..n)
                .map(|x| if common.contains(&x) { x } else { least })
                .collect();
            Ok(Meet::Principal(PartialMap::total(images)?))
        }
        _ => Ok(Meet::Principal(PartialMap::partial_identity(n, common)?)),
    }
}

/// Generator of `αP ∩ βP` in the partition monoid, or empty.
///
/// With `Y` the points covered by the upper blocks of `α` and `β`, the
/// intersection is non-empty exactly when
/// 1. any two upper blocks of `α` and `β` are equal or disjoint, and
/// 2. every kernel class of `α` or `β` that meets `Y` lies inside a single
///    one of those upper blocks.
///
/// The generator has those upper blocks, a transversal `Z ∪ {z'}` with
/// `z = min Z` for each class `Z` of `(ker α ∨ ker β)` on `X \ Y`, and
/// singleton lower blocks elsewhere.
pub fn meet_right_partition(a: &Partition, b: &Partition) -> Result<Meet<Partition>> {
    check_degrees(a.degree(), b.degree())?;
    let n = a.degree();
    let (pa, pb) = (a.profile(), b.profile());

    let mut upper: Vec<Vec<usize>> = pa.upper_blocks.clone();
    for blk in &pb.upper_blocks {
        if !upper.contains(blk) {
            upper.push(blk.clone());
        }
    }
    // block of Y containing each point
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (i, blk) in upper.iter().enumerate() {
        for &x in blk {
            if owner[x].is_some() {
                // two distinct upper blocks overlap
                return Ok(Meet::Empty);
            }
            owner[x] = Some(i);
        }
    }
    for class in pa.ker.classes().iter().chain(pb.ker.classes().iter()) {
        let touches_y = class.iter().any(|&x| owner[x].is_some());
        if touches_y && class.iter().any(|&x| owner[x] != owner[class[0]]) {
            return Ok(Meet::Empty);
        }
    }

    let rest = pa.ker.join(&pb.ker)?.restrict(|x| owner[x].is_none());
    let mut blocks = upper;
    let mut hit = vec![false; n];
    for class in rest.classes() {
        let z = class[0];
        hit[z] = true;
        let mut blk = class;
        blk.push(n + z);
        blocks.push(blk);
    }
    blocks.extend((0..n).filter(|&y| !hit[y]).map(|y| vec![n + y]));
    Ok(Meet::Principal(Partition::from_blocks(n, blocks)?))
}

/// Generator of `Pα ∩ Pβ`, transported from the right-hand construction
/// through the star anti-isomorphism.
pub fn meet_left_partition(a: &Partition, b: &Partition) -> Result<Meet<Partition>> {
    Ok(meet_right_partition(&a.star(), &b.star())?.map(|g| g.star()))
}

/// Elements with an explicit generator for principal-ideal intersections.
pub trait Meets: Element {
    fn meet(kind: Kind, side: Side, a: &Self, b: &Self) -> Result<Meet<Self>>;
}

impl Meets for PartialMap {
    fn meet(kind: Kind, side: Side, a: &Self, b: &Self) -> Result<Meet<Self>> {
        match side {
            Side::Right => {
                a.check_kind(kind)?;
                b.check_kind(kind)?;
                meet_right_pt(a, b)
            }
            Side::Left => meet_left_map(kind, a, b),
        }
    }
}

impl Meets for Partition {
    fn meet(kind: Kind, side: Side, a: &Self, b: &Self) -> Result<Meet<Self>> {
        a.check_kind(kind)?;
        b.check_kind(kind)?;
        match side {
            Side::Right => meet_right_partition(a, b),
            Side::Left => meet_left_partition(a, b),
        }
    }
}

/// Compares `result` with `aS ∩ bS` (or `Sa ∩ Sb`) computed by enumeration.
///
/// A generator that is not an element of `monoid` fails the check.
pub fn verify_meet<E: Element>(
    monoid: &FiniteMonoid<E>,
    a: &E,
    b: &E,
    result: &Meet<E>,
    side: Side,
) -> Result<bool> {
    let (ia, ib) = (monoid.require(a)?, monoid.require(b)?);
    let ideal = |x: usize| match side {
        Side::Right => monoid.right_ideal(x),
        Side::Left => monoid.left_ideal(x),
    };
    let (ma, mb) = (ideal(ia), ideal(ib));
    let meet: Vec<bool> = ma.iter().zip(&mb).map(|(x, y)| *x && *y).collect();
    Ok(match result {
        Meet::Empty => meet.iter().all(|x| !x),
        Meet::Principal(g) => match monoid.index_of(g) {
            Some(ig) => ideal(ig) == meet,
            None => false,
        },
    })
}
