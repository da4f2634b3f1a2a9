//! Equivalence relations on subsets of a finite ground set.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns false if they were already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

/// An equivalence relation whose carrier is a subset of `0..ground`.
///
/// Each carrier point stores the minimum of its class, so two relations are
/// equal exactly when they have the same carrier and the same classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EqRel {
    rep: Vec<Option<usize>>,
}

impl EqRel {
    /// The equality relation on the given carrier.
    pub fn equality(ground: usize, carrier: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut rep = vec![None; ground];
        for x in carrier {
            check_point(x, ground)?;
            rep[x] = Some(x);
        }
        Ok(EqRel { rep })
    }

    /// The relation with the whole carrier as a single class.
    pub fn universal(ground: usize, carrier: impl IntoIterator<Item = usize>) -> Result<Self> {
        let points: Vec<usize> = carrier.into_iter().collect();
        Self::from_classes(ground, [points])
    }

    /// Builds a relation from its classes; the carrier is their union.
    pub fn from_classes<C, I>(ground: usize, classes: C) -> Result<Self>
    where
        C: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut rep = vec![None; ground];
        for class in classes {
            let class: Vec<usize> = class.into_iter().collect();
            let Some(&min) = class.iter().min() else {
                continue;
            };
            for &x in &class {
                check_point(x, ground)?;
                if rep[x].is_some() {
                    return Err(Error::RepeatedPoint((x + 1).to_string()));
                }
                rep[x] = Some(min);
            }
        }
        Ok(EqRel { rep })
    }

    /// Reads classes off a union-find structure, restricted to `carrier`.
    pub fn from_union_find(uf: &mut UnionFind, carrier: impl IntoIterator<Item = usize>) -> Self {
        let ground = uf.len();
        let mut rep = vec![None; ground];
        let mut min_of_root: BTreeMap<usize, usize> = BTreeMap::new();
        let mut points: Vec<usize> = carrier.into_iter().collect();
        points.sort_unstable();
        points.dedup();
        for &x in &points {
            let root = uf.find(x);
            let min = *min_of_root.entry(root).or_insert(x);
            rep[x] = Some(min);
        }
        EqRel { rep }
    }

    pub fn ground(&self) -> usize {
        self.rep.len()
    }

    pub fn in_carrier(&self, x: usize) -> bool {
        self.rep.get(x).is_some_and(Option::is_some)
    }

    pub fn carrier(&self) -> Vec<usize> {
        (0..self.ground()).filter(|&x| self.in_carrier(x)).collect()
    }

    /// The least element of the class of `x`, if `x` is in the carrier.
    pub fn representative(&self, x: usize) -> Option<usize> {
        self.rep.get(x).copied().flatten()
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        match (self.representative(x), self.representative(y)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// Classes, each sorted, ordered by least element.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut by_rep: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (x, r) in self.rep.iter().enumerate() {
            if let Some(r) = r {
                by_rep.entry(*r).or_default().push(x);
            }
        }
        by_rep.into_values().collect()
    }

    pub fn class_count(&self) -> usize {
        self.rep
            .iter()
            .enumerate()
            .filter(|(x, r)| **r == Some(*x))
            .count()
    }

    /// The class containing `x`, sorted.
    pub fn class_of(&self, x: usize) -> Option<Vec<usize>> {
        let r = self.representative(x)?;
        Some(
            (0..self.ground())
                .filter(|&y| self.representative(y) == Some(r))
                .collect(),
        )
    }

    /// Smallest equivalence on the union of both carriers containing both relations.
    pub fn join(&self, other: &EqRel) -> Result<EqRel> {
        if self.ground() != other.ground() {
            return Err(Error::DegreeMismatch {
                left: self.ground(),
                right: other.ground(),
            });
        }
        let mut uf = UnionFind::new(self.ground());
        for rel in [self, other] {
            for (x, r) in rel.rep.iter().enumerate() {
                if let Some(r) = r {
                    uf.union(x, *r);
                }
            }
        }
        let carrier = (0..self.ground()).filter(|&x| self.in_carrier(x) || other.in_carrier(x));
        Ok(EqRel::from_union_find(&mut uf, carrier))
    }

    /// Restriction to the carrier points accepted by `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> EqRel {
        let mut rep = vec![None; self.ground()];
        for class in self.classes() {
            let kept: Vec<usize> = class.into_iter().filter(|&x| keep(x)).collect();
            if let Some(&min) = kept.first() {
                for x in kept {
                    rep[x] = Some(min);
                }
            }
        }
        EqRel { rep }
    }

    /// Relation containment as sets of pairs: every pair of `other` is a pair of `self`.
    pub fn contains(&self, other: &EqRel) -> bool {
        self.ground() == other.ground()
            && (0..other.ground()).all(|x| match other.representative(x) {
                Some(r) => self.related(x, r),
                None => true,
            })
    }

    /// Every class of `self` is a union of classes of `finer`, over the same carrier.
    pub fn is_coarsening_of(&self, finer: &EqRel) -> bool {
        self.carrier() == finer.carrier() && self.contains(finer)
    }

    /// All related pairs, including the diagonal.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for class in self.classes() {
            for &x in &class {
                for &y in &class {
                    out.push((x, y));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

fn check_point(x: usize, ground: usize) -> Result<()> {
    if x >= ground {
        return Err(Error::PointOutOfRange {
            point: x + 1,
            degree: ground,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(ground: usize, classes: &[&[usize]]) -> EqRel {
        EqRel::from_classes(ground, classes.iter().map(|c| c.iter().map(|x| x - 1))).unwrap()
    }

    #[test]
    fn join_chains_transitively() {
        let r = rel(4, &[&[1, 2], &[3], &[4]]);
        let s = rel(4, &[&[2, 3], &[1], &[4]]);
        assert_eq!(r.join(&s).unwrap(), rel(4, &[&[1, 2, 3], &[4]]));
    }

    #[test]
    fn join_is_idempotent() {
        let r = rel(5, &[&[1, 4], &[2, 3, 5]]);
        assert_eq!(r.join(&r).unwrap(), r);
    }

    #[test]
    fn join_with_partial_carriers() {
        // ker [1,1,_] on {1,2} and ker [_,2,2] on {2,3}
        let r = rel(3, &[&[1, 2]]);
        let s = rel(3, &[&[2, 3]]);
        assert_eq!(r.join(&s).unwrap(), rel(3, &[&[1, 2, 3]]));
    }

    #[test]
    fn join_keeps_one_sided_points() {
        let r = rel(4, &[&[1]]);
        let s = rel(4, &[&[3, 4]]);
        let j = r.join(&s).unwrap();
        assert_eq!(j.carrier(), vec![0, 2, 3]);
        assert_eq!(j.class_count(), 2);
    }

    #[test]
    fn containment_is_pairwise() {
        let coarse = rel(3, &[&[1, 2, 3]]);
        let fine = rel(3, &[&[1, 2], &[3]]);
        assert!(coarse.contains(&fine));
        assert!(!fine.contains(&coarse));
        assert!(coarse.is_coarsening_of(&fine));
        // a relation on a smaller carrier can still be contained
        assert!(coarse.contains(&rel(3, &[&[1, 3]])));
        assert!(!rel(3, &[&[1, 3]]).contains(&coarse));
    }

    #[test]
    fn restrict_drops_points() {
        let r = rel(4, &[&[1, 3], &[2, 4]]);
        let s = r.restrict(|x| x != 0);
        assert_eq!(s, rel(4, &[&[3], &[2, 4]]));
    }

    #[test]
    fn repeated_point_rejected() {
        assert!(EqRel::from_classes(3, [vec![0, 1], vec![1]]).is_err());
        assert!(EqRel::from_classes(3, [vec![3]]).is_err());
    }
}
