use coherency::elements::{bell, embed_i_into_p, embed_pt_into_t, EqRel};
use coherency::random::{random_map, random_partition};
use coherency::{Element, Kind, PartialMap, Partition};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn all<E: Element>(kind: Kind, n: usize) -> Vec<E> {
    E::enumerate(kind, n, 1 << 16).unwrap()
}

#[test]
fn enumeration_sizes() {
    for n in 1..=4 {
        let t = all::<PartialMap>(Kind::T, n).len() as u128;
        let pt = all::<PartialMap>(Kind::PT, n).len() as u128;
        assert_eq!(t, (n as u128).pow(n as u32));
        assert_eq!(pt, (n as u128 + 1).pow(n as u32));
        assert_eq!(Some(t), Kind::T.order(n));
    }
    // |I_n| = sum C(n,k)^2 k!
    assert_eq!(all::<PartialMap>(Kind::I, 3).len(), 34);
    assert_eq!(all::<PartialMap>(Kind::I, 4).len(), 209);
    assert_eq!(all::<Partition>(Kind::P, 2).len() as u128, bell(4).unwrap());
    assert_eq!(all::<Partition>(Kind::P, 3).len(), 203);
}

fn associative<E: Element>(elems: &[E]) {
    for a in elems {
        for b in elems {
            let ab = a.mul(b);
            for c in elems {
                assert_eq!(ab.mul(c), a.mul(&b.mul(c)), "{a} {b} {c}");
            }
        }
    }
}

#[test]
fn products_are_associative() {
    associative(&all::<PartialMap>(Kind::PT, 2));
    associative(&all::<PartialMap>(Kind::PT, 3));
    associative(&all::<Partition>(Kind::P, 2));
}

#[test]
fn products_stay_in_family() {
    for kind in [Kind::T, Kind::PT, Kind::I] {
        let elems = all::<PartialMap>(kind, 3);
        for a in &elems {
            for b in &elems {
                assert!(a.mul(b).belongs_to(kind));
            }
        }
    }
}

#[test]
fn composition_matches_pointwise_application() {
    let elems = all::<PartialMap>(Kind::PT, 3);
    for a in &elems {
        for b in &elems {
            let ab = a.mul(b);
            for x in 0..3 {
                assert_eq!(ab.apply(x), a.apply(x).and_then(|y| b.apply(y)));
            }
        }
    }
}

#[test]
fn star_is_an_involutive_anti_isomorphism_on_p2() {
    let elems = all::<Partition>(Kind::P, 2);
    for a in &elems {
        assert_eq!(a.star().star(), *a);
        assert_eq!(a.mul(&a.star()).mul(a), *a);
        for b in &elems {
            assert_eq!(a.mul(b).star(), b.star().mul(&a.star()));
        }
    }
}

#[test]
fn random_p3_star_and_associativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let (a, b, c) = (
            random_partition(&mut rng, 3),
            random_partition(&mut rng, 3),
            random_partition(&mut rng, 3),
        );
        assert_eq!(a.mul(&b).star(), b.star().mul(&a.star()));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }
}

#[test]
fn partition_profile_reassembles_blocks() {
    for a in all::<Partition>(Kind::P, 3) {
        let p = a.profile();
        // upper blocks are ker classes not meeting dom
        let uppers = p
            .ker
            .classes()
            .into_iter()
            .filter(|c| c.iter().all(|x| !p.dom.contains(x)))
            .count();
        assert_eq!(uppers, p.upper_blocks.len());
        assert!(p.dom.len() >= a.rank());
        assert_eq!(a.star().profile().dom, p.codom);
    }
}

#[test]
fn i_into_p_is_an_injective_morphism() {
    let elems = all::<PartialMap>(Kind::I, 3);
    let images: std::collections::HashSet<_> =
        elems.iter().map(|a| embed_i_into_p(a).unwrap()).collect();
    assert_eq!(images.len(), elems.len());
    for a in &elems {
        for b in &elems {
            let lhs = embed_i_into_p(&a.mul(b)).unwrap();
            assert_eq!(
                lhs,
                embed_i_into_p(a).unwrap().mul(&embed_i_into_p(b).unwrap())
            );
        }
    }
}

#[test]
fn pt_into_t_on_pt3() {
    let elems = all::<PartialMap>(Kind::PT, 3);
    for a in &elems {
        for b in &elems {
            assert_eq!(
                embed_pt_into_t(&a.mul(b)),
                embed_pt_into_t(a).mul(&embed_pt_into_t(b))
            );
        }
    }
}

fn classes_strategy(n: usize) -> impl Strategy<Value = EqRel> {
    prop::collection::vec(0..n, n).prop_map(move |labels| {
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (x, l) in labels.into_iter().enumerate() {
            groups.entry(l).or_default().push(x);
        }
        EqRel::from_classes(n, groups.into_values()).unwrap()
    })
}

proptest! {
    #[test]
    fn join_is_least_upper_bound(r in classes_strategy(6), s in classes_strategy(6)) {
        let j = r.join(&s).unwrap();
        prop_assert!(j.contains(&r) && j.contains(&s));
        // transitive closure of r ∪ s by brute force
        let mut rel = vec![vec![false; 6]; 6];
        for x in 0..6 {
            for y in 0..6 {
                rel[x][y] = r.related(x, y) || s.related(x, y);
            }
        }
        for k in 0..6 {
            for x in 0..6 {
                for y in 0..6 {
                    if rel[x][k] && rel[k][y] {
                        rel[x][y] = true;
                    }
                }
            }
        }
        for x in 0..6 {
            for y in 0..6 {
                prop_assert_eq!(j.related(x, y), rel[x][y]);
            }
        }
    }

    #[test]
    fn parse_print_round_trip_random_maps(seed in any::<u64>(), n in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for kind in [Kind::T, Kind::PT, Kind::I] {
            let a = random_map(&mut rng, kind, n);
            prop_assert!(a.belongs_to(kind));
            prop_assert_eq!(PartialMap::parse(&a.to_string()).unwrap(), a);
        }
        let p = random_partition(&mut rng, n);
        prop_assert_eq!(Partition::parse(&p.to_string()).unwrap(), p);
    }
}
