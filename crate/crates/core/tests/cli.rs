use coherency::cli::{parse_nf, render_partition, run};
use coherency::pmonoid::random_nf;
use coherency::{Element, Kind, PartialMap, Partition};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cli(args: &[&str]) -> (String, u8) {
    run(std::iter::once("coherency").chain(args.iter().copied()))
}

#[test]
fn round_trip_pt3_and_p2() {
    for a in PartialMap::enumerate(Kind::PT, 3, 1 << 16).unwrap() {
        assert_eq!(PartialMap::parse(&a.to_string()).unwrap(), a);
    }
    for a in Partition::enumerate(Kind::P, 2, 1 << 16).unwrap() {
        let text = a.to_string();
        assert_eq!(Partition::parse(&text).unwrap(), a);
        assert_eq!(Partition::parse(&text).unwrap().to_string(), text);
    }
}

#[test]
fn round_trip_random_nfs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..1000 {
        let a = random_nf(&mut rng, 5, 30);
        assert_eq!(parse_nf(&a.to_string()).unwrap(), a);
    }
}

#[test]
fn documented_examples() {
    assert_eq!(cli(&["verify", "presentation", "--k", "50"]).1, 0);
    assert_eq!(
        cli(&["meet", "--kind", "P", "{1 2}{1'}{2'}", "{1}{2 2'}{1'}"]),
        ("EMPTY\n".into(), 0)
    );
    assert_eq!(
        cli(&["green", "--kind", "PT", "--side", "R", "[1,_]", "[1,2]"]),
        ("true\n".into(), 0)
    );
    assert_eq!(
        cli(&["green", "--kind", "PT", "--side", "R", "[1,2]", "[1,_]"]),
        ("false\n".into(), 1)
    );
    assert_eq!(cli(&["pmonoid", "nf", "gege"]), ("{-2,-1};+2\n".into(), 0));
    assert_eq!(cli(&["pmonoid", "nf", "{0};+0"]), ("{0};+0\n".into(), 0));
    assert_eq!(
        cli(&["mul", "--kind", "T", "[2,1]", "[1,1]"]),
        ("[1,1]\n".into(), 0)
    );
}

#[test]
fn queries_and_exit_codes() {
    let (out, code) = cli(&["meet", "--kind", "PT", "--verify", "[1,2]", "[1,_]"]);
    assert_eq!((out.as_str(), code), ("[1,_]\nverified: true\n", 0));
    let (out, code) = cli(&["meet", "--kind", "T", "--side", "L", "[1,1]", "[2,2]"]);
    assert_eq!((out.as_str(), code), ("EMPTY\n", 0));

    let (out, code) = cli(&["green", "--kind", "T", "--oracle", "[2,2]", "[1,1]"]);
    assert_eq!(code, 0);
    assert!(out.contains("oracle: true witness [2,1]"));

    let (out, code) = cli(&[
        "cong-close",
        "--kind",
        "T",
        "--pair",
        "[1,2]",
        "[1,1]",
        "--witness",
        "[2,1]",
        "[2,2]",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("classes: 2\n"));
    assert!(out.contains("sequence: [2,1] -> [2,2] in 1 steps"));
    let (_, code) = cli(&[
        "cong-close",
        "--kind",
        "T",
        "--pair",
        "[1,2]",
        "[1,1]",
        "--witness",
        "[1,2]",
        "[2,1]",
    ]);
    assert_eq!(code, 1);

    let (out, code) = cli(&["annihilator", "--kind", "T", "--of", "[1,1]"]);
    assert_eq!((out.lines().next().unwrap(), code), ("classes: 2", 0));

    let (out, code) = cli(&["pmonoid", "ann", "ge", "heg"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("yes n=1 side=h\n") && out.contains("in 3 steps"));
    let (out, code) = cli(&["pmonoid", "ann", "g", "1"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("no"));

    assert_eq!(cli(&["pmonoid", "relations", "--k", "5"]).1, 0);
    assert_eq!(cli(&["pmonoid", "nc", "--n", "20"]).1, 0);
    assert_eq!(cli(&["pmonoid", "chain", "--n", "2"]).1, 0);
    assert_eq!(
        cli(&["pmonoid", "mul", "ge", "{1};+0"]),
        ("{-1,0};+1\n".into(), 0)
    );
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(cli(&["mul", "--kind", "T", "[2,1", "[1,1]"]).1, 2);
    assert_eq!(cli(&["mul", "--kind", "I", "[1,1]", "[1,2]"]).1, 2);
    assert_eq!(cli(&["mul", "--kind", "X", "[1]", "[1]"]).1, 2);
    assert_eq!(cli(&["render", "{1 1'}{1}"]).1, 2);
    assert_eq!(cli(&["pmonoid", "nf", "gxe"]).1, 2);
    assert_eq!(cli(&["verify", "nonsense"]).1, 2);
    assert_eq!(cli(&["frobnicate"]).1, 2);
    let (out, code) = cli(&["mul", "--kind", "T", "[2,1", "[1,1]"]);
    assert_eq!(code, 2);
    assert!(out.contains("position"));
}

#[test]
fn verify_all_aggregates() {
    let (out, code) = cli(&["verify", "all", "--seed", "3"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().count(), 12);
    assert!(out.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn seeded_suites_are_deterministic() {
    use coherency::suites::{run as run_suite, SuiteConfig};
    let config = SuiteConfig { seed: 5, bound: 10 };
    for name in ["nf-oracle", "ann-witness", "star"] {
        let (a, b) = (
            run_suite(name, &config).unwrap(),
            run_suite(name, &config).unwrap(),
        );
        assert_eq!((a.passed, a.detail), (b.passed, b.detail));
    }
}

fn p2_dot() -> String {
    Partition::enumerate(Kind::P, 2, 1 << 16)
        .unwrap()
        .iter()
        .map(|a| format!("// {a}\n{}", render_partition(a)))
        .collect()
}

#[test]
fn p2_rendering_matches_golden_file() {
    let golden = include_str!("fixtures/p2.dot");
    assert_eq!(p2_dot(), golden);
}

#[test]
fn render_via_cli() {
    let (out, code) = cli(&["render", "{1 1'}{2 2'}"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches(" -- ").count(), 2);
    assert_eq!(out, render_partition(&Partition::identity(2)));
}
