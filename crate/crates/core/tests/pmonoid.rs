use coherency::pmonoid::{
    annihilator_witness, chain_search, chain_search_with, check_nc, in_annihilator,
    random_annihilator_pair, random_nf, random_word, y_generator_index, y_n, AnnVerdict,
    ChainBounds, Nf,
};
use coherency::PartialMap;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const R: i64 = 40;

/// Symbol-by-symbol evaluation of a word on the window `[-R, R]`.
fn word_window(word: &str) -> PartialMap {
    let images = (-R..=R)
        .map(|x| {
            let mut y = Some(x);
            for c in word.chars() {
                y = y.and_then(|y| match c {
                    'g' => Some(y + 1),
                    'h' => Some(y - 1),
                    _ => (y != 0).then_some(y),
                });
            }
            y.filter(|y| y.abs() <= R).map(|y| (y + R) as usize)
        })
        .collect();
    PartialMap::new(images).unwrap()
}

fn nf_strategy() -> impl Strategy<Value = Nf> {
    (prop::collection::vec(-10i64..=10, 0..4), -10i64..=10).prop_map(|(e, k)| Nf::new(e, k))
}

#[test]
fn words_agree_with_direct_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..10_000 {
        let w = random_word(&mut rng, 12);
        let nf = Nf::from_word(&w).unwrap();
        let (lhs, rhs) = (nf.window(R).unwrap(), word_window(&w));
        let interior = R - 12;
        for x in -interior..=interior {
            let i = (x + R) as usize;
            assert_eq!(lhs.apply(i), rhs.apply(i), "{w} at {x}");
        }
    }
}

#[test]
fn antichain_of_conjugates() {
    let conj: Vec<Nf> = (1..=50).map(|n| Nf::new([-n], 0)).collect();
    for (i, a) in conj.iter().enumerate() {
        assert_eq!(
            *a,
            Nf::from_word(&format!("{}e{}", "g".repeat(i + 1), "h".repeat(i + 1))).unwrap()
        );
        for (j, b) in conj.iter().enumerate() {
            assert_eq!(a.natural_leq(b), i == j);
        }
    }
}

#[test]
fn nc_at_larger_bound() {
    assert!(check_nc(120).holds());
}

#[test]
fn chain_searches_for_small_n() {
    for n in 2..=6 {
        let r = chain_search(n, ChainBounds::default_for(n));
        assert!(!r.reached && r.witness.is_none());
        let r = chain_search_with(n, n, ChainBounds::default_for(n));
        let w = r.witness.unwrap();
        assert_eq!(w.len(), 1);
        assert!(w.validate(Nf::mul, |c, d| y_generator_index(c, d)
            .is_some_and(|k| k as usize <= n)));
    }
    let r = chain_search(
        3,
        ChainBounds {
            max_excluded: 3,
            magnitude: 8,
            max_length: 8,
        },
    );
    assert!(!r.reached);
}

#[test]
fn witnesses_use_generators_up_to_the_forced_exponent() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..200 {
        let (u, v) = random_annihilator_pair(&mut rng, 2, 3);
        let AnnVerdict::Yes { n, .. } = in_annihilator(&u, &v) else {
            panic!("sampled pair rejected: {u} {v}");
        };
        let allowed = y_n(n as usize);
        for s in &annihilator_witness(&u, &v).unwrap().steps {
            let pair = (s.left.clone(), s.right.clone());
            let flipped = (s.right.clone(), s.left.clone());
            assert!(allowed.contains(&pair) || allowed.contains(&flipped));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn mul_is_associative(a in nf_strategy(), b in nf_strategy(), c in nf_strategy()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn mul_matches_window_composition(a in nf_strategy(), b in nf_strategy()) {
        let (wa, wb) = (a.window(R).unwrap(), b.window(R).unwrap());
        let composed = wa.compose(&wb).unwrap();
        let direct = a.mul(&b).window(R).unwrap();
        let interior = R - a.shift().abs() - b.shift().abs();
        for x in -interior..=interior {
            let i = (x + R) as usize;
            prop_assert_eq!(composed.apply(i), direct.apply(i));
        }
    }

    #[test]
    fn idempotents_have_zero_shift(a in nf_strategy()) {
        prop_assert_eq!(a.mul(&a) == a, a.shift() == 0);
        prop_assert_eq!(a.is_idempotent(), a.shift() == 0);
    }

    #[test]
    fn inverse_is_the_unique_inverse(a in nf_strategy()) {
        let b = a.inverse();
        prop_assert_eq!(a.mul(&b).mul(&a), a.clone());
        prop_assert_eq!(b.mul(&a).mul(&b), b.clone());
        prop_assert_eq!(b.inverse(), a);
    }

    #[test]
    fn natural_order_matches_idempotent_multiplier(a in nf_strategy(), b in nf_strategy()) {
        // a ≤ b iff a = (a a*) b
        let expected = a.mul(&a.inverse()).mul(&b) == a;
        prop_assert_eq!(a.natural_leq(&b), expected);
    }

    #[test]
    fn left_divisions_match_brute_force(c in nf_strategy(), u in nf_strategy()) {
        let mut expected = Vec::new();
        let k = u.shift() - c.shift();
        // any solution t has excluded points inside (E_u ∪ E_c) + k_c
        let pool: Vec<i64> = u.excluded().iter().chain(c.excluded()).map(|x| x + c.shift()).collect();
        for mask in 0u32..(1 << pool.len()) {
            let t = Nf::new(pool.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x), k);
            if c.mul(&t) == u && !expected.contains(&t) {
                expected.push(t);
            }
        }
        let mut got = c.left_divisions(&u);
        got.sort();
        expected.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn annihilator_closed_under_right_multiplication(seed in any::<u64>(), w in nf_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v) = random_annihilator_pair(&mut rng, 3, 10);
        prop_assert!(in_annihilator(&u, &v).is_yes());
        prop_assert!(in_annihilator(&u.mul(&w), &v.mul(&w)).is_yes());
        let seq = annihilator_witness(&u, &v).unwrap();
        prop_assert!(seq.validate(Nf::mul, |c, d| y_generator_index(c, d).is_some()));
        prop_assert!(seq.len() <= 3);
    }

    #[test]
    fn rejection_is_exact(u in nf_strategy(), v in nf_strategy()) {
        let (eu, ev) = (Nf::e().mul(&u), Nf::e().mul(&v));
        let any = (-30..=30).any(|k| Nf::shift_by(k).mul(&eu) == ev);
        prop_assert_eq!(in_annihilator(&u, &v).is_yes(), any);
    }
}

#[test]
fn leq_r_agrees_with_multiplier_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..1000 {
        let u = random_nf(&mut rng, 3, 5);
        let v = random_nf(&mut rng, 3, 5);
        // u = v t forces shift(t); search excluded sets within [-12, 12] of size ≤ 3
        let k = u.shift() - v.shift();
        let mut found = false;
        'outer: for a in -12i64..=12 {
            for b in a..=12 {
                for c in b..=12 {
                    for t in [
                        Nf::new([], k),
                        Nf::new([a], k),
                        Nf::new([a, b], k),
                        Nf::new([a, b, c], k),
                    ] {
                        if v.mul(&t) == u {
                            found = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
        assert_eq!(u.leq_r(&v), found, "{u} {v}");
    }
}

#[test]
fn leq_l_is_dual() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..1000 {
        let u = random_nf(&mut rng, 3, 5);
        let v = random_nf(&mut rng, 3, 5);
        // u ≤_L v iff u = (u u*)... dually u = u (v* v)... i.e. u v* v = u
        assert_eq!(u.leq_l(&v), u.mul(&v.inverse()).mul(&v) == u);
    }
}
