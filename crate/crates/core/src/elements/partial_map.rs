use std::fmt;

use super::{check_degrees, enumerate_maps, Element, EqRel, Kind};
use crate::error::{Error, Result};

/// A partial self-map of `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialMap {
    images: Vec<Option<usize>>,
}

/// Domain, image and kernels of a partial map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapProfile {
    pub dom: Vec<usize>,
    pub im: Vec<usize>,
    /// Fibres of the map over its domain.
    pub ker: EqRel,
    /// `ker` plus one extra class holding every undefined point.
    pub kerhat: EqRel,
}

impl PartialMap {
    pub fn new(images: Vec<Option<usize>>) -> Result<Self> {
        let degree = images.len();
        if let Some(&y) = images.iter().flatten().find(|&&y| y >= degree) {
            return Err(Error::PointOutOfRange {
                point: y + 1,
                degree,
            });
        }
        Ok(PartialMap { images })
    }

    /// A total map from its list of images.
    pub fn total(images: Vec<usize>) -> Result<Self> {
        Self::new(images.into_iter().map(Some).collect())
    }

    pub fn empty(degree: usize) -> Self {
        PartialMap {
            images: vec![None; degree],
        }
    }

    /// The identity restricted to `points`.
    pub fn partial_identity(
        degree: usize,
        points: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut images = vec![None; degree];
        for x in points {
            if x >= degree {
                return Err(Error::PointOutOfRange {
                    point: x + 1,
                    degree,
                });
            }
            images[x] = Some(x);
        }
        Ok(PartialMap { images })
    }

    pub fn constant(degree: usize, value: usize) -> Result<Self> {
        Self::total(vec![value; degree])
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.images.get(x).copied().flatten()
    }

    pub fn is_total(&self) -> bool {
        self.images.iter().all(Option::is_some)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        for &y in self.images.iter().flatten() {
            if std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        true
    }

    /// Left-to-right composition: `x(ab) = (xa)b`.
    pub fn compose(&self, rhs: &PartialMap) -> Result<PartialMap> {
        check_degrees(self.degree(), rhs.degree())?;
        Ok(PartialMap {
            images: self
                .images
                .iter()
                .map(|y| y.and_then(|y| rhs.images[y]))
                .collect(),
        })
    }

    /// The inverse of a partial bijection.
    pub fn inverse(&self) -> Result<PartialMap> {
        self.check_kind(Kind::I)?;
        let mut images = vec![None; self.degree()];
        for (x, y) in self.images.iter().enumerate() {
            if let Some(y) = y {
                images[*y] = Some(x);
            }
        }
        Ok(PartialMap { images })
    }

    pub fn dom(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&x| self.images[x].is_some())
            .collect()
    }

    pub fn im(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.images.iter().flatten().copied().collect();
        im.sort_unstable();
        im.dedup();
        im
    }

    pub fn ker(&self) -> EqRel {
        let n = self.degree();
        let mut fibres = vec![Vec::new(); n];
        for (x, y) in self.images.iter().enumerate() {
            if let Some(y) = y {
                fibres[*y].push(x);
            }
        }
        EqRel::from_classes(n, fibres).expect("fibres are disjoint")
    }

    pub fn kerhat(&self) -> EqRel {
        let n = self.degree();
        let undefined: Vec<usize> = (0..n).filter(|&x| self.images[x].is_none()).collect();
        let mut classes = self.ker().classes();
        classes.push(undefined);
        EqRel::from_classes(n, classes).expect("fibres are disjoint")
    }

    pub fn profile(&self) -> MapProfile {
        MapProfile {
            dom: self.dom(),
            im: self.im(),
            ker: self.ker(),
            kerhat: self.kerhat(),
        }
    }
}

impl Element for PartialMap {
    fn degree(&self) -> usize {
        self.images.len()
    }

    fn identity(degree: usize) -> Self {
        PartialMap {
            images: (0..degree).map(Some).collect(),
        }
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.compose(rhs)
    }

    fn belongs_to(&self, kind: Kind) -> bool {
        match kind {
            Kind::T => self.is_total(),
            Kind::PT => true,
            Kind::I => self.is_injective(),
            Kind::P => false,
        }
    }

    fn enumerate(kind: Kind, n: usize, cap: usize) -> Result<Vec<Self>> {
        enumerate_maps(kind, n, cap)
    }

    fn parse(text: &str) -> Result<Self> {
        crate::cli::parse::parse_partial_map(text)
    }
}

impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, y) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match y {
                Some(y) => write!(f, "{}", y + 1)?,
                None => f.write_str("_")?,
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(spec: &[i32]) -> PartialMap {
        PartialMap::new(
            spec.iter()
                .map(|&y| (y > 0).then(|| y as usize - 1))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn compose_pointwise() {
        assert_eq!(
            pm(&[2, 2, 0]).compose(&pm(&[0, 3, 1])).unwrap(),
            pm(&[3, 3, 0])
        );
    }

    #[test]
    fn compose_with_identity() {
        let a = pm(&[2, 0, 1]);
        assert_eq!(a.compose(&PartialMap::identity(3)).unwrap(), a);
        assert_eq!(PartialMap::identity(3).compose(&a).unwrap(), a);
    }

    #[test]
    fn empty_map_absorbs() {
        let e = PartialMap::empty(3);
        assert_eq!(e.compose(&pm(&[1, 2, 3])).unwrap(), e);
        assert_eq!(pm(&[2, 3, 1]).compose(&e).unwrap(), e);
    }

    #[test]
    fn compose_degree_mismatch() {
        assert!(matches!(
            pm(&[1]).compose(&pm(&[1, 2])),
            Err(Error::DegreeMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn profile_of_partial_constant() {
        let p = pm(&[1, 1, 0]).profile();
        assert_eq!(p.dom, vec![0, 1]);
        assert_eq!(p.im, vec![0]);
        assert_eq!(p.ker.classes(), vec![vec![0, 1]]);
        assert_eq!(p.kerhat.classes(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn profile_of_identity() {
        let p = PartialMap::identity(3).profile();
        let eq = EqRel::equality(3, 0..3).unwrap();
        assert_eq!(p.ker, eq);
        assert_eq!(p.kerhat, eq);
    }

    #[test]
    fn profile_of_empty_map() {
        let p = PartialMap::empty(3).profile();
        assert!(p.dom.is_empty());
        assert!(p.im.is_empty());
        assert_eq!(p.kerhat.classes(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn out_of_range_image_rejected() {
        assert!(PartialMap::new(vec![Some(2), None]).is_err());
    }

    #[test]
    fn inverse_of_partial_bijection() {
        let a = pm(&[2, 0]);
        assert_eq!(a.inverse().unwrap(), pm(&[0, 1]));
        assert!(pm(&[1, 1]).inverse().is_err());
    }

    #[test]
    fn display() {
        assert_eq!(pm(&[2, 0, 1]).to_string(), "[2,_,1]");
    }
}
