//! Command-line front end. [`run`] returns the report text and exit code so
//! the binary and the tests share one code path.

pub mod parse;
pub mod render;

use std::ffi::OsString;
use std::fmt::Write;

use clap::{Args, Parser, Subcommand};

use crate::congruence::{
    annihilator, lc_close, rc_close, FiniteMonoid, RightCongruence, Side, YSequence,
};
use crate::elements::{Element, Kind, PartialMap, Partition};
use crate::error::{Error, Result};
use crate::ideals::{verify_meet, Meet, Meets};
use crate::order::{leq_oracle, GreenOrder};
use crate::pmonoid::{self, AnnVerdict, ChainBounds, Nf};
use crate::suites::{self, SuiteConfig};

pub use parse::{parse_nf, parse_nf_or_word, parse_partial_map, parse_partition, parse_word};
pub use render::render_partition;

/// Exit status when the queried property holds or the command succeeded.
pub const EXIT_OK: u8 = 0;
/// Exit status when the queried property fails.
pub const EXIT_FALSE: u8 = 1;
/// Exit status for usage and parse errors.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "coherency",
    version,
    about = "Transformation, partition and shift-map monoid toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply two or more elements left to right.
    Mul {
        #[arg(long)]
        kind: Kind,
        #[arg(num_args = 2.., required = true)]
        elements: Vec<String>,
    },
    /// Decide a ≤_R b or a ≤_L b; exits 1 when it fails.
    Green {
        #[arg(long)]
        kind: Kind,
        #[arg(long, default_value = "R")]
        side: Side,
        /// Also search every multiplier and print the first witness.
        #[arg(long)]
        oracle: bool,
        a: String,
        b: String,
    },
    /// Generator of aS ∩ bS (side R) or Sa ∩ Sb (side L), or EMPTY.
    Meet {
        #[arg(long)]
        kind: Kind,
        #[arg(long, default_value = "R")]
        side: Side,
        /// Compare against the intersection computed by enumeration.
        #[arg(long)]
        verify: bool,
        a: String,
        b: String,
    },
    /// Classes of the one-sided congruence generated by the given pairs.
    CongClose {
        #[command(flatten)]
        pairs: PairArgs,
        #[arg(long, default_value = "R")]
        side: Side,
        /// Print a Y-sequence relating these two elements.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        witness: Option<Vec<String>>,
    },
    /// Classes of the right annihilator r(aρ), with ρ generated by the pairs.
    Annihilator {
        #[command(flatten)]
        pairs: PairArgs,
        #[arg(long = "of")]
        of: String,
    },
    /// Queries in the shift-map monoid P(g, h, e).
    Pmonoid {
        #[command(subcommand)]
        query: PmonoidQuery,
    },
    /// DOT drawing of a partition.
    Render { partition: String },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Index bound for the presentation and nc suites.
        #[arg(long = "k", default_value_t = 50)]
        bound: usize,
    },
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    kind: Kind,
    /// Ground-set size; defaults to the degree of the first element given.
    #[arg(long)]
    degree: Option<usize>,
    /// A generating pair; repeat for more.
    #[arg(long = "pair", num_args = 2, value_names = ["A", "B"])]
    pair: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum PmonoidQuery {
    /// Check the defining relations for k = 1..K.
    Relations {
        #[arg(long, default_value_t = 50)]
        k: usize,
    },
    /// Check NC1 to NC4 at all indices up to N.
    Nc {
        #[arg(long, default_value_t = 50)]
        n: usize,
    },
    /// Decide (u, v) ∈ r(eρ) for ρ = ⟨(1, g)⟩ and print a witness.
    Ann { u: String, v: String },
    /// Bounded search for (g^n e, h^n e g^n) in ⟨Y_m⟩, m = n - 1 by default.
    Chain {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        generators: Option<usize>,
        #[arg(long)]
        max_excluded: Option<usize>,
        #[arg(long)]
        magnitude: Option<i64>,
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Multiply normal forms or words left to right.
    Mul {
        #[arg(num_args = 1.., required = true)]
        elements: Vec<String>,
    },
    /// Normal form of a word or normal form.
    Nf { element: String },
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> (String, u8)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (e.render().to_string(), code);
        }
    };
    match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => (format!("error: {e}\n"), EXIT_USAGE),
    }
}

fn verdict(holds: bool) -> u8 {
    if holds {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

/// Operations on elements of one of the finite families.
trait Family: GreenOrder + Meets {}
impl<E: GreenOrder + Meets> Family for E {}

fn parse_in<E: Element>(kind: Kind, text: &str) -> Result<E> {
    let x = E::parse(text)?;
    x.check_kind(kind)?;
    Ok(x)
}

fn execute(command: &Command) -> Result<(String, u8)> {
    match command {
        Command::Mul { kind, elements } => dispatch(
            *kind,
            |k| mul::<PartialMap>(k, elements),
            |k| mul::<Partition>(k, elements),
        ),
        Command::Green {
            kind,
            side,
            oracle,
            a,
            b,
        } => dispatch(
            *kind,
            |k| green::<PartialMap>(k, *side, *oracle, a, b),
            |k| green::<Partition>(k, *side, *oracle, a, b),
        ),
        Command::Meet {
            kind,
            side,
            verify,
            a,
            b,
        } => dispatch(
            *kind,
            |k| meet::<PartialMap>(k, *side, *verify, a, b),
            |k| meet::<Partition>(k, *side, *verify, a, b),
        ),
        Command::CongClose {
            pairs,
            side,
            witness,
        } => dispatch(
            pairs.kind,
            |_| cong_close::<PartialMap>(pairs, *side, witness.as_deref()),
            |_| cong_close::<Partition>(pairs, *side, witness.as_deref()),
        ),
        Command::Annihilator { pairs, of } => dispatch(
            pairs.kind,
            |_| annihilator_cmd::<PartialMap>(pairs, of),
            |_| annihilator_cmd::<Partition>(pairs, of),
        ),
        Command::Pmonoid { query } => pmonoid_cmd(query),
        Command::Render { partition } => {
            let a = parse_partition(partition)?;
            Ok((render_partition(&a), EXIT_OK))
        }
        Command::Verify { suite, seed, bound } => verify(suite, *seed, *bound),
    }
}

fn dispatch(
    kind: Kind,
    maps: impl FnOnce(Kind) -> Result<(String, u8)>,
    partitions: impl FnOnce(Kind) -> Result<(String, u8)>,
) -> Result<(String, u8)> {
    if kind.is_partition() {
        partitions(kind)
    } else {
        maps(kind)
    }
}

fn mul<E: Family>(kind: Kind, elements: &[String]) -> Result<(String, u8)> {
    let mut acc = parse_in::<E>(kind, &elements[0])?;
    for text in &elements[1..] {
        acc = acc.try_mul(&parse_in::<E>(kind, text)?)?;
    }
    Ok((format!("{acc}\n"), EXIT_OK))
}

fn green<E: Family>(
    kind: Kind,
    side: Side,
    oracle: bool,
    a: &str,
    b: &str,
) -> Result<(String, u8)> {
    let (a, b) = (parse_in::<E>(kind, a)?, parse_in::<E>(kind, b)?);
    let holds = a.leq(&b, side)?;
    let mut out = format!("{holds}\n");
    if oracle {
        let m = FiniteMonoid::<E>::full(kind, a.degree(), crate::congruence::DEFAULT_MONOID_CAP)?;
        let v = leq_oracle(&m, &a, &b, side)?;
        match v.witness {
            Some(s) => writeln!(out, "oracle: {} witness {s}", v.holds).unwrap(),
            None => writeln!(out, "oracle: {}", v.holds).unwrap(),
        }
    }
    Ok((out, verdict(holds)))
}

fn meet<E: Family>(kind: Kind, side: Side, check: bool, a: &str, b: &str) -> Result<(String, u8)> {
    let (a, b) = (parse_in::<E>(kind, a)?, parse_in::<E>(kind, b)?);
    let result = E::meet(kind, side, &a, &b)?;
    let mut out = match &result {
        Meet::Empty => "EMPTY\n".to_string(),
        Meet::Principal(g) => format!("{g}\n"),
    };
    let mut code = EXIT_OK;
    if check {
        let m = FiniteMonoid::<E>::full(kind, a.degree(), crate::congruence::DEFAULT_MONOID_CAP)?;
        let ok = verify_meet(&m, &a, &b, &result, side)?;
        writeln!(out, "verified: {ok}").unwrap();
        code = verdict(ok);
    }
    Ok((out, code))
}

type IndexedPairs<E> = (FiniteMonoid<E>, Vec<(usize, usize)>);

/// The full monoid and the index pairs named on the command line.
fn monoid_and_pairs<E: Family>(args: &PairArgs, first: Option<&str>) -> Result<IndexedPairs<E>> {
    let degree = match (args.degree, args.pair.first().map(String::as_str).or(first)) {
        (Some(n), _) => n,
        (None, Some(text)) => E::parse(text)?.degree(),
        (None, None) => {
            return Err(Error::Parse(crate::error::ParseError {
                position: 0,
                expected: "--degree or at least one element".into(),
                found: "nothing".into(),
            }))
        }
    };
    let m = FiniteMonoid::<E>::full(args.kind, degree, crate::congruence::DEFAULT_MONOID_CAP)?;
    let index = |text: &str| -> Result<usize> { m.require(&parse_in::<E>(args.kind, text)?) };
    let pairs = args
        .pair
        .chunks(2)
        .map(|p| Ok((index(&p[0])?, index(&p[1])?)))
        .collect::<Result<Vec<_>>>()?;
    Ok((m, pairs))
}

fn write_classes<E: Element>(out: &mut String, m: &FiniteMonoid<E>, rho: &RightCongruence) {
    writeln!(out, "classes: {}", rho.class_count()).unwrap();
    for class in rho.class_list() {
        let names: Vec<String> = class.iter().map(|&i| m.element(i).to_string()).collect();
        writeln!(out, "  {}", names.join(" ")).unwrap();
    }
}

fn write_sequence<T: std::fmt::Display>(out: &mut String, seq: &YSequence<T>) {
    writeln!(
        out,
        "sequence: {} -> {} in {} steps",
        seq.start,
        seq.end,
        seq.steps.len()
    )
    .unwrap();
    for (i, s) in seq.steps.iter().enumerate() {
        writeln!(
            out,
            "  {}: ({}, {}) t = {}",
            i + 1,
            s.left,
            s.right,
            s.multiplier
        )
        .unwrap();
    }
}

fn cong_close<E: Family>(
    args: &PairArgs,
    side: Side,
    witness: Option<&[String]>,
) -> Result<(String, u8)> {
    let (m, pairs) =
        monoid_and_pairs::<E>(args, witness.and_then(|w| w.first()).map(String::as_str))?;
    let rho = match side {
        Side::Right => rc_close(&m, &pairs),
        Side::Left => lc_close(&m, &pairs),
    };
    let mut out = String::new();
    write_classes(&mut out, &m, &rho);
    let mut code = EXIT_OK;
    if let Some(w) = witness {
        let (a, b) = (
            m.require(&parse_in::<E>(args.kind, &w[0])?)?,
            m.require(&parse_in::<E>(args.kind, &w[1])?)?,
        );
        let ctx = if side == Side::Left {
            m.opposite()
        } else {
            m.clone()
        };
        match rho.y_sequence(&ctx, a, b)? {
            Some(seq) => write_sequence(&mut out, &seq.map(|&i| m.element(i).clone())),
            None => {
                writeln!(out, "unrelated").unwrap();
                code = EXIT_FALSE;
            }
        }
    }
    Ok((out, code))
}

fn annihilator_cmd<E: Family>(args: &PairArgs, of: &str) -> Result<(String, u8)> {
    let (m, pairs) = monoid_and_pairs::<E>(args, Some(of))?;
    let a = m.require(&parse_in::<E>(args.kind, of)?)?;
    let rho = rc_close(&m, &pairs);
    let mut out = String::new();
    write_classes(&mut out, &m, &annihilator(&m, &rho, a));
    Ok((out, EXIT_OK))
}

fn pmonoid_cmd(query: &PmonoidQuery) -> Result<(String, u8)> {
    match query {
        PmonoidQuery::Relations { k } => {
            let relations = pmonoid::presentation_relations(*k);
            let mut out = String::new();
            for r in relations.iter().filter(|r| !r.holds()) {
                writeln!(out, "fails: {}: {} vs {}", r.name, r.lhs, r.rhs).unwrap();
            }
            let ok = pmonoid::check_relations(&relations);
            writeln!(out, "{} relations checked: {ok}", relations.len()).unwrap();
            Ok((out, verdict(ok)))
        }
        PmonoidQuery::Nc { n } => {
            let r = pmonoid::check_nc(*n);
            let out = format!(
                "NC1 {}\nNC2 {}\nNC3 {}\nNC4 {}\nbound {}: {}\n",
                r.nc1,
                r.nc2,
                r.nc3,
                r.nc4,
                r.bound,
                r.holds()
            );
            Ok((out, verdict(r.holds())))
        }
        PmonoidQuery::Ann { u, v } => {
            let (u, v) = (parse_nf_or_word(u)?, parse_nf_or_word(v)?);
            match pmonoid::in_annihilator(&u, &v) {
                AnnVerdict::Yes { n, side } => {
                    let mut out = format!("yes n={n} side={side}\n");
                    write_sequence(&mut out, &pmonoid::annihilator_witness(&u, &v)?);
                    Ok((out, EXIT_OK))
                }
                AnnVerdict::No => {
                    let (lhs, rhs) = pmonoid::annihilator_candidate(&u, &v);
                    Ok((format!("no: candidate {lhs} != {rhs}\n"), EXIT_FALSE))
                }
            }
        }
        PmonoidQuery::Chain {
            n,
            generators,
            max_excluded,
            magnitude,
            max_length,
        } => {
            let defaults = ChainBounds::default_for(*n);
            let bounds = ChainBounds {
                max_excluded: max_excluded.unwrap_or(defaults.max_excluded),
                magnitude: magnitude.unwrap_or(defaults.magnitude),
                max_length: max_length.unwrap_or(defaults.max_length),
            };
            let m = generators.unwrap_or(n.saturating_sub(1));
            let r = pmonoid::chain_search_with(*n, m, bounds);
            let mut out = format!(
                "target ({}, {}) under Y_{m}\nreached: {}\nexplored: {}\npruned: {}\nunexpanded: {}\nexhaustive: {}\nbounds: |E| <= {}, magnitude <= {}, length <= {}\n",
                Nf::shift_by(*n as i64).mul(&Nf::e()),
                Nf::shift_by(-(*n as i64)).mul(&Nf::e()).mul(&Nf::shift_by(*n as i64)),
                r.reached,
                r.explored,
                r.pruned,
                r.unexpanded,
                r.exhaustive(),
                bounds.max_excluded,
                bounds.magnitude,
                bounds.max_length,
            );
            if let Some(w) = &r.witness {
                write_sequence(&mut out, w);
            }
            // reaching the target is expected exactly when it is a generator
            Ok((out, verdict(r.reached == (m >= *n))))
        }
        PmonoidQuery::Mul { elements } => {
            let mut acc = Nf::identity();
            for text in elements {
                acc = acc.mul(&parse_nf_or_word(text)?);
            }
            Ok((format!("{acc}\n"), EXIT_OK))
        }
        PmonoidQuery::Nf { element } => Ok((format!("{}\n", parse_nf_or_word(element)?), EXIT_OK)),
    }
}

fn verify(suite: &str, seed: u64, bound: usize) -> Result<(String, u8)> {
    let config = SuiteConfig { seed, bound };
    let outcomes = if suite == "all" {
        suites::run_all(&config)
    } else {
        match suites::run(suite, &config) {
            Some(o) => vec![o],
            None => {
                return Err(Error::Parse(crate::error::ParseError {
                    position: 0,
                    expected: format!("one of all, {}", suites::names().join(", ")),
                    found: format!("{suite:?}"),
                }))
            }
        }
    };
    let mut out = String::new();
    for o in &outcomes {
        writeln!(out, "{o}").unwrap();
    }
    Ok((out, verdict(outcomes.iter().all(|o| o.passed))))
}
