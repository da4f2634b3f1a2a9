//! The verification suites behind `coherency verify`, each comparing a
//! construction against an independent computation.

use std::fmt;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::congruence::{annihilator, kappa, rc_close, FiniteMonoid, RightCongruence, Side};
use crate::elements::{
    embed_i_into_p, embed_i_into_pt, embed_pt_into_t, Element, Kind, PartialMap, Partition,
};
use crate::ideals::{verify_meet, Meets};
use crate::order::{leq_oracle, GreenOrder};
use crate::pmonoid::{self, ChainBounds, Nf};
use crate::random::random_partition;

/// Monoids in the suites are small; this only guards against typos.
const CAP: usize = 4096;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Index bound for the presentation and NC suites.
    pub bound: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, bound: 50 }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {:>2} {:<16} {:.3}s",
            self.id,
            self.name,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(limit) = self.limit {
            write!(f, " (limit {}s)", limit.as_secs())?;
        }
        write!(f, "  {}", self.detail)
    }
}

type Check = fn(&SuiteConfig) -> (bool, String);

/// `(id, name, time limit in seconds, check)`.
const SUITES: [(usize, &str, Option<u64>, Check); 12] = [
    (1, "presentation", Some(1), presentation),
    (2, "nc", Some(1), nc),
    (3, "nf-oracle", Some(5), nf_oracle),
    (4, "meet-right", Some(60), meet_right),
    (5, "meet-left", None, meet_left),
    (6, "kappa", None, kappa_suite),
    (7, "annihilator", None, idempotent_annihilators),
    (8, "green", None, green),
    (9, "ann-witness", None, ann_witness),
    (10, "chain", Some(30), chain),
    (11, "embed", None, embed),
    (12, "star", None, star),
];

pub fn names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.1).collect()
}

/// Runs one suite by name, or `None` if there is no such suite.
pub fn run(name: &str, config: &SuiteConfig) -> Option<Outcome> {
    let &(id, name, limit, check) = SUITES.iter().find(|s| s.1 == name)?;
    let start = Instant::now();
    let (ok, detail) = check(config);
    let elapsed = start.elapsed();
    let limit = limit.map(Duration::from_secs);
    Some(Outcome {
        id,
        name,
        passed: ok && limit.is_none_or(|l| elapsed < l),
        detail,
        elapsed,
        limit,
    })
}

pub fn run_all(config: &SuiteConfig) -> Vec<Outcome> {
    names()
        .into_iter()
        .map(|n| run(n, config).expect("listed suite"))
        .collect()
}

fn rng(config: &SuiteConfig) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(config.seed)
}

fn presentation(config: &SuiteConfig) -> (bool, String) {
    let relations = pmonoid::presentation_relations(config.bound);
    let failed: Vec<&str> = relations
        .iter()
        .filter(|r| !r.holds())
        .map(|r| r.name.as_str())
        .collect();
    (
        failed.is_empty(),
        format!(
            "{} relations, k <= {}, failed: {:?}",
            relations.len(),
            config.bound,
            failed
        ),
    )
}

fn nc(config: &SuiteConfig) -> (bool, String) {
    let r = pmonoid::check_nc(config.bound);
    (
        r.holds(),
        format!(
            "bound {}: NC1 {} NC2 {} NC3 {} NC4 {}",
            r.bound, r.nc1, r.nc2, r.nc3, r.nc4
        ),
    )
}

fn nf_oracle(config: &SuiteConfig) -> (bool, String) {
    const RADIUS: i64 = 100;
    let mut rng = rng(config);
    let mut bad = 0;
    for _ in 0..10_000 {
        let a = pmonoid::random_nf(&mut rng, 4, 20);
        let b = pmonoid::random_nf(&mut rng, 4, 20);
        let (wa, wb) = (a.window(RADIUS).unwrap(), b.window(RADIUS).unwrap());
        let composed = wa.compose(&wb).unwrap();
        let direct = a.mul(&b).window(RADIUS).unwrap();
        let interior = RADIUS - a.shift().abs() - b.shift().abs();
        let agree = (-interior..=interior).all(|x| {
            let i = (x + RADIUS) as usize;
            composed.apply(i) == direct.apply(i)
        });
        if !agree {
            bad += 1;
        }
    }
    (bad == 0, format!("10000 pairs, {bad} disagreements"))
}

/// Every pair of `kind` at degree `n` against the enumerated intersection.
fn meet_sweep<E: Meets>(kind: Kind, n: usize, side: Side) -> (usize, usize, usize) {
    let m = FiniteMonoid::<E>::full(kind, n, CAP).expect("small monoid");
    let (mut pairs, mut empty, mut bad) = (0, 0, 0);
    for a in m.elements() {
        for b in m.elements() {
            pairs += 1;
            let result = E::meet(kind, side, a, b).expect("elements of the right kind");
            empty += usize::from(result.is_empty());
            if !verify_meet(&m, a, b, &result, side).expect("members") {
                bad += 1;
            }
        }
    }
    (pairs, empty, bad)
}

fn meet_suite(side: Side) -> (bool, Vec<String>, usize) {
    let runs = [
        ("PT3", meet_sweep::<PartialMap>(Kind::PT, 3, side)),
        ("T3", meet_sweep::<PartialMap>(Kind::T, 3, side)),
        ("I3", meet_sweep::<PartialMap>(Kind::I, 3, side)),
        ("P2", meet_sweep::<Partition>(Kind::P, 2, side)),
    ];
    let ok = runs.iter().all(|(_, (_, _, bad))| *bad == 0);
    let parts = runs
        .iter()
        .map(|(name, (pairs, empty, bad))| {
            format!("{name}: {pairs} pairs, {empty} empty, {bad} bad")
        })
        .collect();
    let t_empty = runs[1].1 .1;
    (ok, parts, t_empty)
}

fn meet_right(_: &SuiteConfig) -> (bool, String) {
    let (ok, parts, _) = meet_suite(Side::Right);
    (ok, parts.join("; "))
}

fn meet_left(_: &SuiteConfig) -> (bool, String) {
    let (ok, parts, t_empty) = meet_suite(Side::Left);
    (ok && t_empty > 0, parts.join("; "))
}

fn kappa_suite(_: &SuiteConfig) -> (bool, String) {
    fn sweep(kind: Kind, n: usize) -> (usize, usize) {
        let m = FiniteMonoid::<PartialMap>::full(kind, n, CAP).expect("small monoid");
        let bad = (0..m.size())
            .filter(|&s| !rc_close(&m, &[(m.identity(), s)]).same_relation(&kappa(&m, s)))
            .count();
        (m.size(), bad)
    }
    let (t3, t3_bad) = sweep(Kind::T, 3);
    let (pt2, pt2_bad) = sweep(Kind::PT, 2);
    (
        t3_bad + pt2_bad == 0,
        format!("T3: {t3} elements, {t3_bad} bad; PT2: {pt2} elements, {pt2_bad} bad"),
    )
}

fn idempotent_annihilators(_: &SuiteConfig) -> (bool, String) {
    fn sweep<E: Element>(kind: Kind, n: usize) -> (usize, usize) {
        let m = FiniteMonoid::<E>::full(kind, n, CAP).expect("small monoid");
        let delta = RightCongruence::equality(m.size());
        let idem = m.idempotents();
        let bad = idem
            .iter()
            .filter(|&&e| {
                !annihilator(&m, &delta, e).same_relation(&rc_close(&m, &[(m.identity(), e)]))
            })
            .count();
        (idem.len(), bad)
    }
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, (count, bad)) in [
        ("T3", sweep::<PartialMap>(Kind::T, 3)),
        ("PT2", sweep::<PartialMap>(Kind::PT, 2)),
        ("P2", sweep::<Partition>(Kind::P, 2)),
    ] {
        ok &= bad == 0;
        parts.push(format!("{name}: {count} idempotents, {bad} bad"));
    }

    let m = FiniteMonoid::<PartialMap>::full(Kind::PT, 3, CAP).expect("small monoid");
    let delta = RightCongruence::equality(m.size());
    let (mut checked, mut bad, mut irregular) = (0, 0, 0);
    for a in 0..m.size() {
        let ra = annihilator(&m, &delta, a);
        let mut regular = false;
        for b in 0..m.size() {
            if m.mul(m.mul(a, b), a) != a {
                continue;
            }
            regular = true;
            checked += 1;
            if !ra.same_relation(&annihilator(&m, &delta, m.mul(b, a))) {
                bad += 1;
            }
        }
        irregular += usize::from(!regular);
    }
    ok &= bad == 0 && irregular == 0;
    parts.push(format!(
        "PT3: {checked} pairs (a, b) with aba = a, {bad} bad, {irregular} irregular"
    ));
    (ok, parts.join("; "))
}

fn green(_: &SuiteConfig) -> (bool, String) {
    fn sweep<E: GreenOrder>(kind: Kind, n: usize) -> (usize, usize) {
        let m = FiniteMonoid::<E>::full(kind, n, CAP).expect("small monoid");
        let mut bad = 0;
        for a in m.elements() {
            for b in m.elements() {
                for side in [Side::Right, Side::Left] {
                    let fast = a.leq(b, side).expect("same degree");
                    let slow = leq_oracle(&m, a, b, side).expect("members").holds;
                    bad += usize::from(fast != slow);
                }
            }
        }
        (m.size() * m.size(), bad)
    }
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, (pairs, bad)) in [
        ("PT2", sweep::<PartialMap>(Kind::PT, 2)),
        ("T3", sweep::<PartialMap>(Kind::T, 3)),
        ("I2", sweep::<PartialMap>(Kind::I, 2)),
        ("P2", sweep::<Partition>(Kind::P, 2)),
    ] {
        ok &= bad == 0;
        parts.push(format!("{name}: {pairs} pairs, {bad} bad"));
    }
    (ok, parts.join("; "))
}

fn ann_witness(config: &SuiteConfig) -> (bool, String) {
    let mut rng = rng(config);
    let mut bad_accept = 0;
    for _ in 0..1000 {
        let (u, v) = pmonoid::random_annihilator_pair(&mut rng, 3, 10);
        let ok = pmonoid::annihilator_witness(&u, &v).is_ok_and(|w| {
            w.start == u
                && w.end == v
                && w.validate(Nf::mul, |c, d| pmonoid::y_generator_index(c, d).is_some())
        });
        bad_accept += usize::from(!ok);
    }

    // rejected pairs: the forced candidate fails, and so does every other
    // exponent on either side
    let (mut rejected, mut bad_reject, mut drawn) = (0, 0, 0);
    while rejected < 1000 {
        drawn += 1;
        let u = pmonoid::random_nf(&mut rng, 3, 10);
        let v = pmonoid::random_nf(&mut rng, 3, 10);
        if pmonoid::in_annihilator(&u, &v).is_yes() {
            continue;
        }
        rejected += 1;
        let (lhs, rhs) = pmonoid::annihilator_candidate(&u, &v);
        let (eu, ev) = (Nf::e().mul(&u), Nf::e().mul(&v));
        let any = (-40..=40).any(|k| Nf::shift_by(k).mul(&eu) == ev);
        if lhs == rhs || any {
            bad_reject += 1;
        }
    }
    (
        bad_accept + bad_reject == 0,
        format!(
            "1000 accepted, {bad_accept} bad witnesses; 1000 rejected of {drawn} drawn, {bad_reject} bad"
        ),
    )
}

fn chain(_: &SuiteConfig) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 2..=5 {
        let bounds = ChainBounds::default_for(n);
        let below = pmonoid::chain_search(n, bounds);
        let at = pmonoid::chain_search_with(n, n, bounds);
        let one_step = at.witness.as_ref().is_some_and(|w| w.len() == 1);
        ok &= !below.reached && at.reached && one_step;
        parts.push(format!(
            "n={n}: Y_{} reached={} explored={} exhaustive={}, Y_{n} reached={} steps={}",
            n - 1,
            below.reached,
            below.explored,
            below.exhaustive(),
            at.reached,
            at.witness.as_ref().map_or(0, |w| w.len()),
        ));
    }
    (ok, parts.join("; "))
}

fn embed(_: &SuiteConfig) -> (bool, String) {
    let pt2 = FiniteMonoid::<PartialMap>::full(Kind::PT, 2, CAP).expect("small monoid");
    let i2 = FiniteMonoid::<PartialMap>::full(Kind::I, 2, CAP).expect("small monoid");
    let mut bad = 0;
    for a in pt2.elements() {
        let ea = embed_pt_into_t(a);
        bad += usize::from(!ea.belongs_to(Kind::T));
        for b in pt2.elements() {
            bad += usize::from(embed_pt_into_t(&a.mul(b)) != ea.mul(&embed_pt_into_t(b)));
        }
    }
    let images: std::collections::HashSet<_> = pt2.elements().iter().map(embed_pt_into_t).collect();
    bad += usize::from(images.len() != pt2.size());

    for a in i2.elements() {
        let (pa, qa) = (embed_i_into_p(a).unwrap(), embed_i_into_pt(a).unwrap());
        for b in i2.elements() {
            let ab = a.mul(b);
            bad += usize::from(embed_i_into_p(&ab).unwrap() != pa.mul(&embed_i_into_p(b).unwrap()));
            bad +=
                usize::from(embed_i_into_pt(&ab).unwrap() != qa.mul(&embed_i_into_pt(b).unwrap()));
        }
    }
    (
        bad == 0,
        format!(
            "PT2 -> T3: {} pairs; I2 -> P2, I2 -> PT2: {} pairs; {bad} bad",
            pt2.size() * pt2.size(),
            i2.size() * i2.size()
        ),
    )
}

fn star_laws(a: &Partition, b: &Partition) -> bool {
    a.star().star() == *a
        && a.mul(b).star() == b.star().mul(&a.star())
        && a.mul(&a.star()).mul(a) == *a
}

fn star(config: &SuiteConfig) -> (bool, String) {
    let p2 = FiniteMonoid::<Partition>::full(Kind::P, 2, CAP).expect("small monoid");
    let mut bad = 0;
    for a in p2.elements() {
        for b in p2.elements() {
            bad += usize::from(!star_laws(a, b));
        }
    }
    let mut rng = rng(config);
    for _ in 0..1000 {
        let (a, b) = (random_partition(&mut rng, 3), random_partition(&mut rng, 3));
        bad += usize::from(!star_laws(&a, &b));
    }
    (
        bad == 0,
        format!("P2: 225 pairs, P3: 1000 random pairs, {bad} bad"),
    )
}
