//! Monoid embeddings between the families.

use super::{Element, Kind, PartialMap, Partition};
use crate::error::Result;

/// Inclusion of partial bijections into partial transformations.
pub fn embed_i_into_pt(a: &PartialMap) -> Result<PartialMap> {
    a.check_kind(Kind::I)?;
    Ok(a.clone())
}

/// A partial bijection as a partition with trivial kernel and cokernel:
/// transversals `{x, (xa)'}` plus singletons elsewhere.
pub fn embed_i_into_p(a: &PartialMap) -> Result<Partition> {
    a.check_kind(Kind::I)?;
    let n = a.degree();
    let mut hit = vec![false; n];
    let mut blocks = Vec::with_capacity(2 * n);
    for x in 0..n {
        match a.apply(x) {
            Some(y) => {
                hit[y] = true;
                blocks.push(vec![x, n + y]);
            }
            None => blocks.push(vec![x]),
        }
    }
    blocks.extend((0..n).filter(|&y| !hit[y]).map(|y| vec![n + y]));
    Partition::from_blocks(n, blocks)
}

/// A partial map of degree `n` as a full map of degree `n + 1` sending every
/// undefined point, and the new point itself, to the new point.
pub fn embed_pt_into_t(a: &PartialMap) -> PartialMap {
    let sink = a.degree();
    let images = (0..sink)
        .map(|x| a.apply(x).unwrap_or(sink))
        .chain(std::iter::once(sink))
        .collect();
    PartialMap::total(images).expect("images in range")
}
