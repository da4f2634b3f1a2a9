//! Exact arithmetic in the inverse monoid `P = ⟨g, h, e⟩` of integer
//! shift maps with finitely many excluded points.
//!
//! Every element is `x ↦ x + k` restricted to `ℤ \ E` for a finite set `E`;
//! `g` is the shift by `+1`, `h` the shift by `-1` and `e` the identity with
//! `0` removed. Products read left to right: `ab` applies `a` first.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand::Rng;

use crate::congruence::{YSequence, YStep};
use crate::elements::PartialMap;
use crate::error::{Error, Result};

/// Normal form `(E, k)`: the partial bijection `x ↦ x + k` on `ℤ \ E`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Nf {
    excluded: Vec<i64>,
    shift: i64,
}

impl Nf {
    pub fn new(excluded: impl IntoIterator<Item = i64>, shift: i64) -> Self {
        let mut excluded: Vec<i64> = excluded.into_iter().collect();
        excluded.sort_unstable();
        excluded.dedup();
        Nf { excluded, shift }
    }

    pub fn identity() -> Self {
        Nf::new([], 0)
    }

    pub fn g() -> Self {
        Nf::new([], 1)
    }

    pub fn h() -> Self {
        Nf::new([], -1)
    }

    pub fn e() -> Self {
        Nf::new([0], 0)
    }

    /// `g^k` for `k ≥ 0`, `h^{-k}` otherwise.
    pub fn shift_by(k: i64) -> Self {
        Nf::new([], k)
    }

    /// Evaluates a word over `g`, `h`, `e`; the empty word is the identity.
    pub fn from_word(word: &str) -> Result<Self> {
        let mut acc = Nf::identity();
        for c in word.chars() {
            let atom = match c {
                'g' => Nf::g(),
                'h' => Nf::h(),
                'e' => Nf::e(),
                other => return Err(Error::BadSymbol(other)),
            };
            acc = acc.mul(&atom);
        }
        Ok(acc)
    }

    pub fn excluded(&self) -> &[i64] {
        &self.excluded
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// `E = E_a ∪ (E_b - k_a)`, `k = k_a + k_b`.
    pub fn mul(&self, rhs: &Nf) -> Nf {
        let moved = rhs.excluded.iter().map(|x| x - self.shift);
        Nf::new(
            self.excluded.iter().copied().chain(moved),
            self.shift + rhs.shift,
        )
    }

    pub fn pow(&self, n: u32) -> Nf {
        (0..n).fold(Nf::identity(), |acc, _| acc.mul(self))
    }

    pub fn apply(&self, x: i64) -> Option<i64> {
        if self.excluded.binary_search(&x).is_ok() {
            None
        } else {
            Some(x + self.shift)
        }
    }

    /// The unique inverse `(E + k, -k)`.
    pub fn inverse(&self) -> Nf {
        Nf::new(self.excluded.iter().map(|x| x + self.shift), -self.shift)
    }

    /// Idempotents are exactly the elements with shift 0.
    pub fn is_idempotent(&self) -> bool {
        self.shift == 0
    }

    /// Natural partial order: same shift, and the smaller element excludes more.
    pub fn natural_leq(&self, other: &Nf) -> bool {
        self.shift == other.shift && is_subset(&other.excluded, &self.excluded)
    }

    /// `u ≤_R v` iff `dom u ⊆ dom v`, i.e. `E_v ⊆ E_u`.
    pub fn leq_r(&self, other: &Nf) -> bool {
        is_subset(&other.excluded, &self.excluded)
    }

    /// `u ≤_L v` iff `im u ⊆ im v`.
    pub fn leq_l(&self, other: &Nf) -> bool {
        self.inverse().leq_r(&other.inverse())
    }

    /// Largest absolute value among the excluded points, 0 if there are none.
    pub fn magnitude(&self) -> i64 {
        self.excluded.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    /// Restriction to `{-radius, …, radius}`, with `x` stored at index `x + radius`.
    pub fn window(&self, radius: i64) -> Result<PartialMap> {
        let needed = self.magnitude() + self.shift.abs();
        if radius < needed.max(1) {
            return Err(Error::WindowTooSmall {
                radius,
                needed: needed.max(1),
            });
        }
        let images = (-radius..=radius)
            .map(|x| {
                self.apply(x)
                    .filter(|y| y.abs() <= radius)
                    .map(|y| (y + radius) as usize)
            })
            .collect();
        PartialMap::new(images)
    }

    /// Every `t` with `self · t = u`.
    pub fn left_divisions(&self, u: &Nf) -> Vec<Nf> {
        if !is_subset(&self.excluded, &u.excluded) {
            return Vec::new();
        }
        let rest: Vec<i64> = u
            .excluded
            .iter()
            .copied()
            .filter(|x| self.excluded.binary_search(x).is_err())
            .collect();
        let mut out = Vec::new();
        for mask in 0u64..(1 << self.excluded.len()) {
            let chosen = self
                .excluded
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x);
            let t = Nf::new(
                rest.iter().copied().chain(chosen).map(|x| x + self.shift),
                u.shift - self.shift,
            );
            debug_assert_eq!(&self.mul(&t), u);
            out.push(t);
        }
        out
    }
}

impl fmt::Display for Nf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let points: Vec<String> = self.excluded.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}};{:+}", points.join(","), self.shift)
    }
}

fn is_subset(small: &[i64], big: &[i64]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

/// `g^k e h^k`, the conjugate of `e` with excluded point `-k`.
fn conj_g(k: i64) -> Nf {
    Nf::shift_by(k).mul(&Nf::e()).mul(&Nf::shift_by(-k))
}

/// `h^k e g^k`, the conjugate of `e` with excluded point `k`.
fn conj_h(k: i64) -> Nf {
    conj_g(-k)
}

/// A defining relation `lhs = rhs` with both sides already evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub lhs: Nf,
    pub rhs: Nf,
}

impl Relation {
    fn new(name: impl Into<String>, lhs: &str, rhs: &str) -> Relation {
        Relation {
            name: name.into(),
            lhs: Nf::from_word(lhs).expect("relation words use g, h, e"),
            rhs: Nf::from_word(rhs).expect("relation words use g, h, e"),
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The defining relations of `P`, with the two families instantiated for
/// `1 ≤ k ≤ max_k`.
pub fn presentation_relations(max_k: usize) -> Vec<Relation> {
    let mut out = vec![
        Relation::new("hg=gh", "hg", "gh"),
        Relation::new("ghg=g", "ghg", "g"),
        Relation::new("hgh=h", "hgh", "h"),
        Relation::new("ghe=e", "ghe", "e"),
        Relation::new("egh=e", "egh", "e"),
        Relation::new("e=ee", "e", "ee"),
    ];
    for k in 1..=max_k {
        let (gk, hk) = ("g".repeat(k), "h".repeat(k));
        out.push(Relation::new(
            format!("eg^{k}eh^{k}=g^{k}eh^{k}e"),
            &format!("e{gk}e{hk}"),
            &format!("{gk}e{hk}e"),
        ));
        out.push(Relation::new(
            format!("eh^{k}eg^{k}=h^{k}eg^{k}e"),
            &format!("e{hk}e{gk}"),
            &format!("{hk}e{gk}e"),
        ));
    }
    out
}

pub fn check_relations(relations: &[Relation]) -> bool {
    relations.iter().all(Relation::holds)
}

pub fn check_presentation(max_k: usize) -> bool {
    check_relations(&presentation_relations(max_k))
}

/// Natural order on idempotents from its definition `ef = fe = e`.
fn idempotent_leq(e: &Nf, f: &Nf) -> bool {
    debug_assert!(e.is_idempotent() && f.is_idempotent());
    &e.mul(f) == e && &f.mul(e) == e
}

/// Outcome of each non-coherency condition up to some bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcReport {
    pub bound: usize,
    pub nc1: bool,
    pub nc2: bool,
    pub nc3: bool,
    pub nc4: bool,
}

impl NcReport {
    pub fn holds(&self) -> bool {
        self.nc1 && self.nc2 && self.nc3 && self.nc4
    }
}

/// Checks the four non-coherency conditions for `g, h, e` at all indices up to `bound`.
pub fn check_nc(bound: usize) -> NcReport {
    let (g, h, e) = (Nf::g(), Nf::h(), Nf::e());
    let nc1 = h.mul(&g).mul(&e) == e && e.mul(&h).mul(&g) == e;

    let n_max = bound as i64;
    let nc2 = (1..=n_max).all(|n| [conj_g(n), conj_h(n)].iter().all(|c| e.mul(c) == c.mul(&e)));

    let mut nc3 = true;
    for m in 1..=n_max {
        for n in 1..=n_max {
            nc3 &= !idempotent_leq(&conj_g(m), &conj_h(n));
            nc3 &= !idempotent_leq(&conj_h(n), &conj_g(m));
            if m != n {
                nc3 &= !idempotent_leq(&conj_g(m), &conj_g(n));
                nc3 &= !idempotent_leq(&conj_h(m), &conj_h(n));
            }
        }
    }

    let mut nc4 = true;
    for n in 1..=n_max {
        let below = e.mul(&conj_g(n));
        nc4 &= (1..n).all(|k| !idempotent_leq(&below, &conj_g(k)));
        nc4 &= (1..=n).all(|k| !idempotent_leq(&below, &conj_h(k)));
    }

    NcReport {
        bound,
        nc1,
        nc2,
        nc3,
        nc4,
    }
}

/// Which power conjugates `eu` to `ev` in the annihilator test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conjugator {
    /// `g^n e u = e v`
    G,
    /// `h^n e u = e v`
    H,
}

impl fmt::Display for Conjugator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conjugator::G => "g",
            Conjugator::H => "h",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnnVerdict {
    Yes { n: u64, side: Conjugator },
    No,
}

impl AnnVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, AnnVerdict::Yes { .. })
    }
}

/// The equation that `(u, v)` would have to satisfy: shifts force the
/// exponent and side. Returns `(n, side, x^n·eu, ev)`.
fn forced_candidate(u: &Nf, v: &Nf) -> (u64, Conjugator, Nf, Nf) {
    let (eu, ev) = (Nf::e().mul(u), Nf::e().mul(v));
    let diff = v.shift - u.shift;
    let side = if diff >= 0 {
        Conjugator::G
    } else {
        Conjugator::H
    };
    let lhs = Nf::shift_by(diff).mul(&eu);
    (diff.unsigned_abs(), side, lhs, ev)
}

/// Decides whether `(u, v)` lies in the right annihilator of `e` modulo the
/// right congruence generated by `(1, g)`.
pub fn in_annihilator(u: &Nf, v: &Nf) -> AnnVerdict {
    let (n, side, lhs, ev) = forced_candidate(u, v);
    if lhs == ev {
        AnnVerdict::Yes { n, side }
    } else {
        AnnVerdict::No
    }
}

/// The candidate equality tested by [`in_annihilator`], as `(lhs, rhs)`.
pub fn annihilator_candidate(u: &Nf, v: &Nf) -> (Nf, Nf) {
    let (_, _, lhs, ev) = forced_candidate(u, v);
    (lhs, ev)
}

/// The generating set `Y_n`: `(1, e)`, `(g^k e, h^k e g^k)` and
/// `(h^k e, g^k e h^k)` for `0 < k ≤ n`.
pub fn y_n(n: usize) -> Vec<(Nf, Nf)> {
    let e = Nf::e();
    let mut out = vec![(Nf::identity(), e.clone())];
    for k in 1..=n as i64 {
        out.push((Nf::shift_by(k).mul(&e), conj_h(k)));
        out.push((Nf::shift_by(-k).mul(&e), conj_g(k)));
    }
    out
}

/// Smallest `n` with `(c, d) ∈ Y_n`, taking `(1, e)` as index 0.
pub fn y_generator_index(c: &Nf, d: &Nf) -> Option<u64> {
    if *c == Nf::identity() && *d == Nf::e() {
        return Some(0);
    }
    let k = c.shift;
    if k == 0 {
        return None;
    }
    let expected = (Nf::shift_by(k).mul(&Nf::e()), conj_g(-k));
    (*c == expected.0 && *d == expected.1).then(|| k.unsigned_abs())
}

/// A Y-sequence from `u` to `v` over `Y_n ∪ Y_n⁻¹`, through `eu`.
///
/// Steps are `u → eu` by `(1, e)`, `eu → ev` by the inverse of the
/// generator for `n`, and `ev → v` by `(e, 1)`; steps that do not move are
/// dropped. Every junction is checked before returning.
pub fn annihilator_witness(u: &Nf, v: &Nf) -> Result<YSequence<Nf>> {
    let AnnVerdict::Yes { n, side } = in_annihilator(u, v) else {
        return Err(Error::NotInAnnihilator);
    };
    let (one, e) = (Nf::identity(), Nf::e());
    let eu = e.mul(u);
    let mut steps = vec![YStep {
        left: one.clone(),
        right: e.clone(),
        multiplier: u.clone(),
    }];
    if n > 0 {
        let k = n as i64;
        let (c, d) = match side {
            Conjugator::G => (conj_h(k), Nf::shift_by(k).mul(&e)),
            Conjugator::H => (conj_g(k), Nf::shift_by(-k).mul(&e)),
        };
        steps.push(YStep {
            left: c,
            right: d,
            multiplier: eu,
        });
    }
    steps.push(YStep {
        left: e,
        right: one,
        multiplier: v.clone(),
    });
    let seq = YSequence {
        start: u.clone(),
        end: v.clone(),
        steps,
    }
    .without_idle_steps(Nf::mul);
    assert!(
        seq.validate(Nf::mul, |c, d| y_generator_index(c, d).is_some()),
        "annihilator witness failed to validate for ({u}, {v})"
    );
    Ok(seq)
}

/// Limits on the states explored by [`chain_search`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainBounds {
    pub max_excluded: usize,
    pub magnitude: i64,
    pub max_length: usize,
}

impl ChainBounds {
    /// `|E| ≤ n + 2`, coordinates and shift within `3n`, at most 8 steps.
    pub fn default_for(n: usize) -> Self {
        ChainBounds {
            max_excluded: n + 2,
            magnitude: 3 * n as i64,
            max_length: 8,
        }
    }

    fn admits(&self, x: &Nf) -> bool {
        x.excluded.len() <= self.max_excluded
            && x.magnitude() <= self.magnitude
            && x.shift.abs() <= self.magnitude
    }
}

/// Result of a bounded search for `(g^n e, h^n e g^n)` in `⟨Y_m⟩`.
///
/// `reached = false` only certifies that no sequence exists inside the
/// bounds; it is not a proof of non-membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub n: usize,
    pub generators: usize,
    pub reached: bool,
    pub explored: usize,
    /// Successor states discarded for exceeding the size bounds.
    pub pruned: usize,
    /// States at the length limit that were not expanded.
    pub unexpanded: usize,
    pub bounds: ChainBounds,
    pub witness: Option<YSequence<Nf>>,
}

impl ChainReport {
    /// No state was pruned or left unexpanded, so the whole class of `g^n e`
    /// was enumerated and `reached` is exact rather than bounded.
    pub fn exhaustive(&self) -> bool {
        self.pruned == 0 && self.unexpanded == 0
    }
}

/// Bounded search for `(g^n e, h^n e g^n)` in the right congruence generated by `Y_{n-1}`.
pub fn chain_search(n: usize, bounds: ChainBounds) -> ChainReport {
    chain_search_with(n, n.saturating_sub(1), bounds)
}

/// As [`chain_search`], with `Y_m` as the generating set.
///
/// Breadth-first from `g^n e`: a state `u` moves to `d t` for each pair
/// `(c, d)` of `Y_m ∪ Y_m⁻¹` and each `t` with `c t = u`.
pub fn chain_search_with(n: usize, m: usize, bounds: ChainBounds) -> ChainReport {
    let k = n as i64;
    let start = Nf::shift_by(k).mul(&Nf::e());
    let target = conj_h(k);
    let pairs: Vec<(Nf, Nf)> = y_n(m)
        .into_iter()
        .flat_map(|(c, d)| [(c.clone(), d.clone()), (d, c)])
        .collect();

    let mut parent: HashMap<Nf, Option<(Nf, YStep<Nf>)>> = HashMap::from([(start.clone(), None)]);
    let mut queue = VecDeque::from([(start.clone(), 0usize)]);
    let (mut pruned, mut unexpanded) = (0, 0);
    let mut reached = start == target;

    'search: while let Some((u, depth)) = queue.pop_front() {
        if depth == bounds.max_length {
            unexpanded += 1;
            continue;
        }
        for (c, d) in &pairs {
            for t in c.left_divisions(&u) {
                let next = d.mul(&t);
                if parent.contains_key(&next) {
                    continue;
                }
                if !bounds.admits(&next) {
                    pruned += 1;
                    continue;
                }
                let step = YStep {
                    left: c.clone(),
                    right: d.clone(),
                    multiplier: t,
                };
                parent.insert(next.clone(), Some((u.clone(), step)));
                if next == target {
                    reached = true;
                    break 'search;
                }
                queue.push_back((next, depth + 1));
            }
        }
    }

    let witness = reached.then(|| {
        let mut steps = Vec::new();
        let mut at = target.clone();
        while let Some(Some((prev, step))) = parent.get(&at) {
            steps.push(step.clone());
            at = prev.clone();
        }
        steps.reverse();
        YSequence {
            start: start.clone(),
            end: target.clone(),
            steps,
        }
    });

    ChainReport {
        n,
        generators: m,
        reached,
        explored: parent.len(),
        pruned,
        unexpanded,
        bounds,
        witness,
    }
}

/// A random normal form with at most `max_excluded` excluded points and
/// coordinates and shift in `[-magnitude, magnitude]`.
pub fn random_nf<R: Rng + ?Sized>(rng: &mut R, max_excluded: usize, magnitude: i64) -> Nf {
    let size = rng.random_range(0..=max_excluded);
    let points: Vec<i64> = (0..size)
        .map(|_| rng.random_range(-magnitude..=magnitude))
        .collect();
    Nf::new(points, rng.random_range(-magnitude..=magnitude))
}

/// A random word over `g`, `h`, `e` of length at most `max_len`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> String {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| ['g', 'h', 'e'][rng.random_range(0..3)])
        .collect()
}

/// A random pair accepted by [`in_annihilator`].
///
/// Draws the exponent and side first, plants the point that makes
/// `x^n e u` divisible by `e`, then picks `v` among the solutions of
/// `e v = x^n e u`.
pub fn random_annihilator_pair<R: Rng + ?Sized>(
    rng: &mut R,
    max_excluded: usize,
    magnitude: i64,
) -> (Nf, Nf) {
    let n = rng.random_range(0..=magnitude.min(max_excluded as i64 * 3));
    let sign = if rng.random_bool(0.5) { 1 } else { -1 };
    let mut u = random_nf(rng, max_excluded.saturating_sub(1), magnitude);
    if n > 0 {
        u = Nf::new(u.excluded.iter().copied().chain([sign * n]), u.shift);
    }
    let target = Nf::shift_by(sign * n).mul(&Nf::e()).mul(&u);
    let choices = Nf::e().left_divisions(&target);
    let v = choices[rng.random_range(0..choices.len())].clone();
    (u, v)
}
