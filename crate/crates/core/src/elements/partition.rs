use std::collections::BTreeMap;
use std::fmt;

use super::{check_degrees, enumerate_partitions, Element, EqRel, Kind, UnionFind};
use crate::error::{Error, Result};

/// A set partition of `X ∪ X'` where `X = {0, .., n-1}`.
///
/// Blocks are sorted point lists, ordered by least point. Point `x'` is
/// stored as `n + x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    degree: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Upper,
    Lower,
    Transversal,
}

/// Green parameters of a partition. Lower-row data is reported on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionProfile {
    pub dom: Vec<usize>,
    pub codom: Vec<usize>,
    pub ker: EqRel,
    pub coker: EqRel,
    pub upper_blocks: Vec<Vec<usize>>,
    pub lower_blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn from_blocks(degree: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; 2 * degree];
        let mut out = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            block.sort_unstable();
            for &p in &block {
                if p >= 2 * degree {
                    return Err(Error::PointOutOfRange {
                        point: p + 1,
                        degree,
                    });
                }
                if std::mem::replace(&mut seen[p], true) {
                    return Err(Error::RepeatedPoint(point_label(p, degree)));
                }
            }
            out.push(block);
        }
        if let Some(p) = seen.iter().position(|s| !s) {
            return Err(Error::UncoveredPoint(point_label(p, degree)));
        }
        out.sort_unstable();
        Ok(Partition {
            degree,
            blocks: out,
        })
    }

    /// Groups `0..2n` by a labelling; points with equal labels share a block.
    pub(crate) fn from_labels(degree: usize, labels: impl IntoIterator<Item = usize>) -> Self {
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (p, l) in labels.into_iter().enumerate() {
            groups.entry(l).or_default().push(p);
        }
        let mut blocks: Vec<Vec<usize>> = groups.into_values().collect();
        blocks.sort_unstable();
        Partition { degree, blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Blocks in the 1-based printed notation, primed points suffixed with `'`.
    pub fn labelled_blocks(&self) -> Vec<Vec<String>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&p| point_label(p, self.degree)).collect())
            .collect()
    }

    pub fn block_kind(&self, block: &[usize]) -> BlockKind {
        let upper = block.iter().any(|&p| p < self.degree);
        let lower = block.iter().any(|&p| p >= self.degree);
        match (upper, lower) {
            (true, true) => BlockKind::Transversal,
            (true, false) => BlockKind::Upper,
            _ => BlockKind::Lower,
        }
    }

    pub fn rank(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| self.block_kind(b) == BlockKind::Transversal)
            .count()
    }

    /// Product via connected components of the stacked three-row graph.
    pub fn compose(&self, rhs: &Partition) -> Result<Partition> {
        check_degrees(self.degree, rhs.degree)?;
        let n = self.degree;
        // rows: top 0..n, bottom n..2n, middle 2n..3n
        let mut uf = UnionFind::new(3 * n);
        let lower_to_middle = |p: usize| if p < n { p } else { p + n };
        let upper_to_middle = |p: usize| if p < n { p + 2 * n } else { p };
        for block in &self.blocks {
            for w in block.windows(2) {
                uf.union(lower_to_middle(w[0]), lower_to_middle(w[1]));
            }
        }
        for block in &rhs.blocks {
            for w in block.windows(2) {
                uf.union(upper_to_middle(w[0]), upper_to_middle(w[1]));
            }
        }
        let labels: Vec<usize> = (0..2 * n).map(|p| uf.find(p)).collect();
        Ok(Partition::from_labels(n, labels))
    }

    /// Swap of the top and bottom rows.
    pub fn star(&self) -> Partition {
        let n = self.degree;
        let flip = |p: usize| if p < n { p + n } else { p - n };
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| {
                let mut b: Vec<usize> = b.iter().map(|&p| flip(p)).collect();
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable();
        Partition { degree: n, blocks }
    }

    pub fn profile(&self) -> PartitionProfile {
        let n = self.degree;
        let mut dom = Vec::new();
        let mut codom = Vec::new();
        let mut ker = Vec::new();
        let mut coker = Vec::new();
        let mut upper_blocks = Vec::new();
        let mut lower_blocks = Vec::new();
        for block in &self.blocks {
            let top: Vec<usize> = block.iter().copied().filter(|&p| p < n).collect();
            let bottom: Vec<usize> = block.iter().filter(|&&p| p >= n).map(|&p| p - n).collect();
            match self.block_kind(block) {
                BlockKind::Transversal => {
                    dom.extend(&top);
                    codom.extend(&bottom);
                }
                BlockKind::Upper => upper_blocks.push(top.clone()),
                BlockKind::Lower => lower_blocks.push(bottom.clone()),
            }
            if !top.is_empty() {
                ker.push(top);
            }
            if !bottom.is_empty() {
                coker.push(bottom);
            }
        }
        dom.sort_unstable();
        codom.sort_unstable();
        lower_blocks.sort_unstable();
        PartitionProfile {
            dom,
            codom,
            ker: EqRel::from_classes(n, ker).expect("blocks are disjoint"),
            coker: EqRel::from_classes(n, coker).expect("blocks are disjoint"),
            upper_blocks,
            lower_blocks,
        }
    }
}

pub(crate) fn point_label(p: usize, degree: usize) -> String {
    if p < degree {
        (p + 1).to_string()
    } else {
        format!("{}'", p - degree + 1)
    }
}

impl Element for Partition {
    fn degree(&self) -> usize {
        self.degree
    }

    fn identity(degree: usize) -> Self {
        Partition {
            degree,
            blocks: (0..degree).map(|x| vec![x, x + degree]).collect(),
        }
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.compose(rhs)
    }

    fn belongs_to(&self, kind: Kind) -> bool {
        kind == Kind::P
    }

    fn enumerate(kind: Kind, n: usize, cap: usize) -> Result<Vec<Self>> {
        if kind != Kind::P {
            return Err(Error::KindMismatch {
                kind,
                element: "partition".into(),
            });
        }
        enumerate_partitions(n, cap)
    }

    fn parse(text: &str) -> Result<Self> {
        crate::cli::parse::parse_partition(text)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in self.labelled_blocks() {
            write!(f, "{{{}}}", block.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(text: &str) -> Partition {
        crate::cli::parse::parse_partition(text).unwrap()
    }

    #[test]
    fn square_of_partial_shift() {
        let a = part("{1 2'}{2}{1'}");
        assert_eq!(a.compose(&a).unwrap(), part("{1}{2}{1'}{2'}"));
    }

    #[test]
    fn identity_is_neutral() {
        let a = part("{1 2'}{2}{1'}");
        let id = Partition::identity(2);
        assert_eq!(a.compose(&id).unwrap(), a);
        assert_eq!(id.compose(&a).unwrap(), a);
    }

    #[test]
    fn product_with_star() {
        let a = part("{1 2'}{2}{1'}");
        assert_eq!(a.star(), part("{2 1'}{1}{2'}"));
        assert_eq!(a.compose(&a.star()).unwrap(), part("{1 1'}{2}{2'}"));
    }

    #[test]
    fn star_of_identity() {
        assert_eq!(Partition::identity(3).star(), Partition::identity(3));
    }

    #[test]
    fn profile_with_lower_block() {
        let p = part("{1 2 1'}{2'}").profile();
        assert_eq!(p.dom, vec![0, 1]);
        assert_eq!(p.codom, vec![0]);
        assert_eq!(p.ker.classes(), vec![vec![0, 1]]);
        assert_eq!(p.coker.classes(), vec![vec![0], vec![1]]);
        assert!(p.upper_blocks.is_empty());
        assert_eq!(p.lower_blocks, vec![vec![1]]);
    }

    #[test]
    fn profile_of_identity() {
        let p = Partition::identity(3).profile();
        assert_eq!(p.dom, vec![0, 1, 2]);
        assert!(p.upper_blocks.is_empty() && p.lower_blocks.is_empty());
    }

    #[test]
    fn profile_without_transversals() {
        let p = part("{1}{2}{1'}{2'}").profile();
        assert!(p.dom.is_empty());
        assert_eq!(p.upper_blocks, vec![vec![0], vec![1]]);
    }

    #[test]
    fn invalid_block_sets() {
        assert!(matches!(
            Partition::from_blocks(2, vec![vec![0, 2], vec![1]]),
            Err(Error::UncoveredPoint(_))
        ));
        assert!(matches!(
            Partition::from_blocks(1, vec![vec![0, 1], vec![1]]),
            Err(Error::RepeatedPoint(_))
        ));
        assert!(Partition::from_blocks(1, vec![vec![0, 1], vec![]]).is_err());
    }

    #[test]
    fn degree_mismatch() {
        assert!(Partition::identity(2)
            .compose(&Partition::identity(3))
            .is_err());
    }
}
