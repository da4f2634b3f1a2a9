//! Finite monoids, generated right congruences with explicit witnesses,
//! annihilator congruences and right ideals.

mod monoid;
mod sequence;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

pub use monoid::{FiniteMonoid, DEFAULT_MONOID_CAP};
pub use sequence::{YSequence, YStep};

use crate::elements::{EqRel, UnionFind};
use crate::error::{Error, ParseError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Right => "R",
            Side::Left => "L",
        })
    }
}

impl FromStr for Side {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "R" | "RIGHT" => Ok(Side::Right),
            "L" | "LEFT" => Ok(Side::Left),
            _ => Err(ParseError {
                position: 0,
                expected: "R or L".into(),
                found: format!("{s:?}"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Reason {
    /// The edge is the generating pair with this index.
    Generator(usize),
    /// The edge is an earlier edge right-multiplied by a monoid generator.
    Propagated { from: usize, multiplier: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct ProofEdge {
    a: usize,
    b: usize,
    reason: Reason,
}

/// Merge history of a closure run: a spanning forest of every class whose
/// edges each record why they were added.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pairs: Vec<(usize, usize)>,
    edges: Vec<ProofEdge>,
    incident: Vec<Vec<usize>>,
}

impl Trace {
    pub fn generating_pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn merge_count(&self) -> usize {
        self.edges.len()
    }
}

/// A right congruence on a [`FiniteMonoid`], as classes of element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightCongruence {
    classes: EqRel,
    trace: Option<Trace>,
}

impl RightCongruence {
    /// The equality relation.
    pub fn equality(size: usize) -> Self {
        RightCongruence {
            classes: EqRel::equality(size, 0..size).expect("in range"),
            trace: None,
        }
    }

    pub fn universal(size: usize) -> Self {
        RightCongruence {
            classes: EqRel::universal(size, 0..size).expect("in range"),
            trace: None,
        }
    }

    pub fn classes(&self) -> &EqRel {
        &self.classes
    }

    pub fn class_list(&self) -> Vec<Vec<usize>> {
        self.classes.classes()
    }

    pub fn class_count(&self) -> usize {
        self.classes.class_count()
    }

    pub fn trace(&self) -> Option<&Trace> {
        self.trace.as_ref()
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.classes.related(a, b)
    }

    /// Same relation, ignoring how it was computed.
    pub fn same_relation(&self, other: &RightCongruence) -> bool {
        self.classes == other.classes
    }

    pub fn contains(&self, other: &RightCongruence) -> bool {
        self.classes.contains(&other.classes)
    }

    /// `a ρ b ⇒ as ρ bs` for every element `s`, not only generators.
    pub fn is_right_compatible<E>(&self, monoid: &FiniteMonoid<E>) -> bool {
        let n = monoid.size();
        (0..n).all(|a| {
            let r = self.classes.representative(a).expect("total carrier");
            r == a || (0..n).all(|s| self.related(monoid.mul(a, s), monoid.mul(r, s)))
        })
    }

    /// A Y-sequence from `a` to `b` built from the merge trace, or `None`
    /// when `a` and `b` are unrelated.
    pub fn y_sequence<E>(
        &self,
        monoid: &FiniteMonoid<E>,
        a: usize,
        b: usize,
    ) -> Result<Option<YSequence<usize>>> {
        if !self.related(a, b) {
            return Ok(None);
        }
        if a == b {
            return Ok(Some(YSequence::trivial(a)));
        }
        let trace = self.trace.as_ref().ok_or(Error::NoTrace)?;
        let path = forest_path(trace, a, b).expect("related points are joined in the forest");
        let mut memo = HashMap::new();
        let mut seq = YSequence::trivial(a);
        let mut at = a;
        for eid in path {
            let edge = trace.edges[eid];
            let piece = edge_sequence(trace, monoid, eid, &mut memo);
            let piece = if edge.a == at {
                at = edge.b;
                piece
            } else {
                at = edge.a;
                piece.reversed()
            };
            seq = seq.then(piece);
        }
        Ok(Some(seq))
    }

    /// Checks a sequence against this congruence's generating pairs.
    pub fn validates<E>(&self, monoid: &FiniteMonoid<E>, seq: &YSequence<usize>) -> bool {
        let pairs = self
            .trace
            .as_ref()
            .map(|t| t.pairs.as_slice())
            .unwrap_or(&[]);
        seq.validate(|x, y| monoid.mul(*x, *y), |c, d| pairs.contains(&(*c, *d)))
    }
}

/// Path of edge ids from `a` to `b` in the proof forest.
fn forest_path(trace: &Trace, a: usize, b: usize) -> Option<Vec<usize>> {
    let mut via: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::from([a]);
    let mut seen = std::collections::HashSet::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            let mut path = Vec::new();
            let mut cur = b;
            while cur != a {
                let eid = via[&cur];
                let e = trace.edges[eid];
                path.push(eid);
                cur = if e.a == cur { e.b } else { e.a };
            }
            path.reverse();
            return Some(path);
        }
        for &eid in &trace.incident[x] {
            let e = trace.edges[eid];
            let y = if e.a == x { e.b } else { e.a };
            if seen.insert(y) {
                via.insert(y, eid);
                queue.push_back(y);
            }
        }
    }
    None
}

fn edge_sequence<E>(
    trace: &Trace,
    monoid: &FiniteMonoid<E>,
    eid: usize,
    memo: &mut HashMap<usize, YSequence<usize>>,
) -> YSequence<usize> {
    if let Some(seq) = memo.get(&eid) {
        return seq.clone();
    }
    let edge = trace.edges[eid];
    let seq = match edge.reason {
        Reason::Generator(p) => {
            let (c, d) = trace.pairs[p];
            YSequence {
                start: c,
                end: d,
                steps: vec![YStep {
                    left: c,
                    right: d,
                    multiplier: monoid.identity(),
                }],
            }
        }
        Reason::Propagated { from, multiplier } => {
            // `from < eid`, so the recursion terminates
            edge_sequence(trace, monoid, from, memo).times(&multiplier, |x, y| monoid.mul(*x, *y))
        }
    };
    memo.insert(eid, seq.clone());
    seq
}

struct TraceBuilder {
    uf: UnionFind,
    edges: Vec<ProofEdge>,
    incident: Vec<Vec<usize>>,
    worklist: VecDeque<usize>,
}

impl TraceBuilder {
    fn merge(&mut self, a: usize, b: usize, reason: Reason) {
        if self.uf.union(a, b) {
            let eid = self.edges.len();
            self.edges.push(ProofEdge { a, b, reason });
            self.incident[a].push(eid);
            self.incident[b].push(eid);
            self.worklist.push_back(eid);
        }
    }
}

/// Least right congruence containing `pairs`, by union-find with a worklist
/// propagated over the monoid's generators.
pub fn rc_close<E>(monoid: &FiniteMonoid<E>, pairs: &[(usize, usize)]) -> RightCongruence {
    let n = monoid.size();
    let mut tb = TraceBuilder {
        uf: UnionFind::new(n),
        edges: Vec::new(),
        incident: vec![Vec::new(); n],
        worklist: VecDeque::new(),
    };
    for (p, &(c, d)) in pairs.iter().enumerate() {
        tb.merge(c, d, Reason::Generator(p));
    }
    while let Some(eid) = tb.worklist.pop_front() {
        let ProofEdge { a, b, .. } = tb.edges[eid];
        for &s in monoid.generators() {
            let (x, y) = (monoid.mul(a, s), monoid.mul(b, s));
            tb.merge(
                x,
                y,
                Reason::Propagated {
                    from: eid,
                    multiplier: s,
                },
            );
        }
    }
    RightCongruence {
        classes: EqRel::from_union_find(&mut tb.uf, 0..n),
        trace: Some(Trace {
            pairs: pairs.to_vec(),
            edges: tb.edges,
            incident: tb.incident,
        }),
    }
}

/// Least left congruence containing `pairs`: the right closure in the
/// opposite monoid. Witnesses read `a = t₁c₁, t₁d₁ = t₂c₂, …`.
pub fn lc_close<E: Clone>(monoid: &FiniteMonoid<E>, pairs: &[(usize, usize)]) -> RightCongruence {
    rc_close(&monoid.opposite(), pairs)
}

/// The right annihilator `r(aρ) = {(u, v) : au ρ av}`, computed from its definition.
pub fn annihilator<E>(
    monoid: &FiniteMonoid<E>,
    rho: &RightCongruence,
    a: usize,
) -> RightCongruence {
    let n = monoid.size();
    let mut by_class: HashMap<usize, Vec<usize>> = HashMap::new();
    for u in 0..n {
        let key = rho
            .classes
            .representative(monoid.mul(a, u))
            .expect("total carrier");
        by_class.entry(key).or_default().push(u);
    }
    RightCongruence {
        classes: EqRel::from_classes(n, by_class.into_values()).expect("disjoint"),
        trace: None,
    }
}

/// `s^m u = s^n v` for some `m, n ≥ 0`.
pub fn kappa_holds<E>(monoid: &FiniteMonoid<E>, s: usize, u: usize, v: usize) -> bool {
    let powers = monoid.powers(s);
    let left: std::collections::HashSet<usize> = powers.iter().map(|&p| monoid.mul(p, u)).collect();
    powers.iter().any(|&p| left.contains(&monoid.mul(p, v)))
}

/// The relation `{(u, v) : s^m u = s^n v}` on the whole monoid.
///
/// Pairs are collected from the definition and then merged, so a failure of
/// transitivity in the raw relation would show up as a disagreement with
/// [`kappa_holds`].
pub fn kappa<E>(monoid: &FiniteMonoid<E>, s: usize) -> RightCongruence {
    let n = monoid.size();
    let powers = monoid.powers(s);
    let orbit: Vec<Vec<bool>> = (0..n)
        .map(|u| {
            let mut mask = vec![false; n];
            for &p in &powers {
                mask[monoid.mul(p, u)] = true;
            }
            mask
        })
        .collect();
    let mut uf = UnionFind::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if (0..n).any(|x| orbit[u][x] && orbit[v][x]) {
                uf.union(u, v);
            }
        }
    }
    RightCongruence {
        classes: EqRel::from_union_find(&mut uf, 0..n),
        trace: None,
    }
}

/// One representative of each maximal R-class of a right ideal; these
/// generate the ideal as a right act.
pub fn subact_generators<E>(monoid: &FiniteMonoid<E>, ideal: &[usize]) -> Result<Vec<usize>> {
    let n = monoid.size();
    let mut member = vec![false; n];
    for &x in ideal {
        member[x] = true;
    }
    for &x in ideal {
        if (0..n).any(|s| !member[monoid.mul(x, s)]) {
            return Err(Error::NotASubact);
        }
    }
    let mut elems: Vec<usize> = ideal.to_vec();
    elems.sort_unstable();
    elems.dedup();
    let principal: HashMap<usize, Vec<bool>> =
        elems.iter().map(|&x| (x, monoid.right_ideal(x))).collect();
    let below = |x: usize, y: usize| principal[&y][x];
    let mut gens: Vec<usize> = Vec::new();
    for &x in &elems {
        let maximal = elems.iter().all(|&y| !below(x, y) || below(y, x));
        let fresh = gens.iter().all(|&g| !(below(x, g) && below(g, x)));
        if maximal && fresh {
            gens.push(x);
        }
    }
    let mut covered = vec![false; n];
    for &g in &gens {
        for (x, inside) in principal[&g].iter().enumerate() {
            if *inside {
                covered[x] = true;
            }
        }
    }
    assert!(
        elems.iter().all(|&x| covered[x]),
        "maximal R-classes generate a finite right ideal"
    );
    Ok(gens)
}
