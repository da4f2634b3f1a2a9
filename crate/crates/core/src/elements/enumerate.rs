//! Exhaustive enumeration of the small monoids used by the oracles.

use super::{Kind, PartialMap, Partition};
use crate::error::{Error, Result};

/// Largest monoid the enumerators build unless told otherwise.
pub const DEFAULT_ENUMERATION_CAP: usize = 1 << 16;

/// Bell number `B(n)`, or `None` on overflow.
pub fn bell(n: usize) -> Option<u128> {
    // Bell triangle
    let mut row: Vec<u128> = vec![1];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last()?);
        for v in &row {
            let last = *next.last()?;
            next.push(last.checked_add(*v)?);
        }
        row = next;
    }
    row.first().copied()
}

fn check_cap(kind: Kind, n: usize, cap: usize) -> Result<()> {
    match kind.order(n) {
        Some(count) if count <= cap as u128 => Ok(()),
        predicted => Err(Error::CapExceeded {
            kind: kind.to_string(),
            degree: n,
            predicted: predicted.unwrap_or(u128::MAX),
            cap,
        }),
    }
}

/// All maps of kind `T`, `PT` or `I` at degree `n`, in lexicographic order of
/// their image lists with "undefined" first.
pub fn enumerate_maps(kind: Kind, n: usize, cap: usize) -> Result<Vec<PartialMap>> {
    if kind == Kind::P {
        return Err(Error::KindMismatch {
            kind,
            element: "partial map".into(),
        });
    }
    check_cap(kind, n, cap)?;
    let choices: Vec<Option<usize>> = match kind {
        Kind::T => (0..n).map(Some).collect(),
        _ => std::iter::once(None).chain((0..n).map(Some)).collect(),
    };
    let mut out = Vec::new();
    let mut digits = vec![0usize; n];
    loop {
        let images: Vec<Option<usize>> = digits.iter().map(|&d| choices[d]).collect();
        let map = PartialMap::new(images).expect("images in range");
        if kind != Kind::I || map.is_injective() {
            out.push(map);
        }
        // odometer, last position fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < choices.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// All set partitions of the `2n` points, via restricted growth strings.
pub fn enumerate_partitions(n: usize, cap: usize) -> Result<Vec<Partition>> {
    check_cap(Kind::P, n, cap)?;
    let len = 2 * n;
    let mut out = Vec::new();
    if len == 0 {
        out.push(Partition::from_labels(0, std::iter::empty()));
        return Ok(out);
    }
    let mut labels = vec![0usize; len];
    // prefix maxima: max_before[i] = max(labels[..i])
    let mut max_before = vec![0usize; len];
    loop {
        out.push(Partition::from_labels(n, labels.iter().copied()));
        let mut i = len - 1;
        loop {
            if i == 0 {
                return Ok(out);
            }
            if labels[i] <= max_before[i] {
                labels[i] += 1;
                break;
            }
            i -= 1;
        }
        for j in i + 1..len {
            labels[j] = 0;
            max_before[j] = max_before[j - 1].max(labels[j - 1]);
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::elements::Element;

    #[test]
    fn bell_numbers() {
        let known = [1u128, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, b) in known.iter().enumerate() {
            assert_eq!(bell(n), Some(*b));
        }
    }

    #[test]
    fn counts_match_orders() {
        for n in 0..=3 {
            for kind in Kind::ALL {
                let count = if kind == Kind::P {
                    enumerate_partitions(n, 1 << 20).unwrap().len()
                } else {
                    enumerate_maps(kind, n, 1 << 20).unwrap().len()
                };
                assert_eq!(Some(count as u128), kind.order(n), "{kind}_{n}");
            }
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(enumerate_maps(Kind::T, 2, 100).unwrap().len(), 4);
        assert_eq!(enumerate_maps(Kind::PT, 3, 100).unwrap().len(), 64);
        assert_eq!(enumerate_partitions(2, 100).unwrap().len(), 15);
    }

    #[test]
    fn enumerations_are_duplicate_free_and_in_kind() {
        for kind in [Kind::T, Kind::PT, Kind::I] {
            let all = enumerate_maps(kind, 3, 1000).unwrap();
            let set: HashSet<_> = all.iter().collect();
            assert_eq!(set.len(), all.len());
            assert!(all.iter().all(|a| a.belongs_to(kind)));
        }
        let parts = enumerate_partitions(3, 1000).unwrap();
        let set: HashSet<_> = parts.iter().collect();
        assert_eq!(set.len(), 203);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_maps(Kind::PT, 5, 1000),
            Err(Error::CapExceeded {
                predicted: 7776,
                ..
            })
        ));
        assert!(enumerate_partitions(4, 1000).is_err());
    }
}
