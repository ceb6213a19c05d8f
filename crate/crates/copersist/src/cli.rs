//! Command-line interface: input resolution (fixture id, file, or inline
//! expression), dispatch to the library, and deterministic text/JSON
//! reporting.
//!
//! Exit codes: 0 on success, 1 when a property check reports a violation
//! (so CI scripts can assert on verdicts), 2 on usage or computation errors.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::closure;
use crate::decompose;
use crate::error::{Error, Result};
use crate::fixtures::{self, FixtureKind};
use crate::graphs::{Bipartiteness, SimpleGraph, DEFAULT_ENUMERATION_BUDGET};
use crate::ideal::MonomialIdeal;
use crate::parse::{parse_graph_text, parse_ideal_text, render_ideal};
use crate::properties::{self, PropertyReport};
use crate::ring::{Monomial, MonomialPrime};
use crate::transforms;

#[derive(Parser)]
#[command(
    name = "copersist",
    about = "Monomial ideal calculator: associated primes of powers, decomposition, integral closure, and bounded persistence/copersistence checks",
    version
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Point budget for brute-force oracles and closure boxes
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget: u64,
    /// Cross-check results against independent brute-force routes
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Associated primes of I^k
    Ass {
        #[arg(short = 'i', long = "input")]
        input: String,
        /// Power k
        #[arg(long, default_value_t = 1)]
        power: u64,
        /// Report the whole sequence k = 1..N instead of one power
        #[arg(long = "max-power")]
        max_power: Option<u64>,
    },
    /// Primary (default) or irreducible decomposition
    Decompose {
        #[arg(short = 'i', long = "input")]
        input: String,
        #[arg(long)]
        irreducible: bool,
    },
    /// Minimal primes
    Min {
        #[arg(short = 'i', long = "input")]
        input: String,
    },
    /// Generators of I^k
    Power {
        #[arg(short = 'i', long = "input")]
        input: String,
        #[arg(short = 'k', long = "exponent")]
        exponent: u64,
    },
    /// Intersection of two ideals
    Intersect {
        #[arg(short = 'i', long = "input")]
        input: String,
        #[arg(short = 'j', long = "with")]
        with: String,
    },
    /// Colon ideal (I : J) or (I : m)
    Colon {
        #[arg(short = 'i', long = "input")]
        input: String,
        #[arg(short = 'j', long = "with")]
        with: Option<String>,
        /// Colon by a single monomial, e.g. "x^2*y"
        #[arg(long = "mono", conflicts_with = "with")]
        monomial: Option<String>,
    },
    /// Radical
    Radical {
        #[arg(short = 'i', long = "input")]
        input: String,
    },
    /// Integral closure
    Closure {
        #[arg(short = 'i', long = "input")]
        input: String,
    },
    /// Normality via integrally closed powers
    Normal {
        #[arg(short = 'i', long = "input")]
        input: String,
    },
    /// Ring expansion by a tuple of copy counts
    Expand {
        #[arg(short = 'i', long = "input")]
        input: String,
        #[arg(long, value_delimiter = ',', required = true)]
        tuple: Vec<u64>,
    },
    /// Weight substitution x_i -> x_i^{w_i}
    Weight {
        #[arg(short = 'i', long = "input")]
        input: String,
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u64>,
    },
    /// Polarization into squarefree shadows
    Polarize {
        #[arg(short = 'i', long = "input")]
        input: String,
    },
    /// Depolarization (shadow names follow the `base_k` grammar)
    Depolarize {
        #[arg(short = 'i', long = "input")]
        input: String,
    },
    /// Monomial localization at a prime
    Localize {
        #[arg(short = 'i', long = "input")]
        input: String,
        /// Variables generating the prime, e.g. x1,x2,x4
        #[arg(long, value_delimiter = ',', required = true)]
        prime: Vec<String>,
    },
    /// Contraction: set one variable to 1
    Contract {
        #[arg(short = 'i', long = "input")]
        input: String,
        #[arg(long)]
        var: String,
    },
    /// Deletion: set one variable to 0
    Delete {
        #[arg(short = 'i', long = "input")]
        input: String,
        #[arg(long)]
        var: String,
    },
    /// Relabel a squarefree ideal by a support permutation
    Permute {
        #[arg(short = 'i', long = "input")]
        input: String,
        /// Mapping pairs from:to, e.g. x1:x2,x2:x1
        #[arg(long, value_delimiter = ',', required = true)]
        map: Vec<String>,
    },
    /// Multiply every generator by a monomial
    Scale {
        #[arg(short = 'i', long = "input")]
        input: String,
        #[arg(long = "mono")]
        monomial: String,
    },
    /// Bounded property checks (exit 1 on violation)
    Check {
        #[arg(value_enum)]
        property: PropertyArg,
        #[arg(short = 'i', long = "input")]
        input: String,
        #[arg(long = "max-power", default_value_t = properties::DEFAULT_POWER_BOUND)]
        max_power: u64,
        /// Augmenting-prime limit for generalized-nearly-copersistence
        #[arg(long = "max-augmentation", default_value_t = 1)]
        max_augmentation: u64,
    },
    /// Graph predicates and graph ideals
    Graph {
        #[command(subcommand)]
        cmd: GraphCommand,
    },
    /// The built-in fixture corpus
    Fixtures {
        #[command(subcommand)]
        cmd: FixturesCommand,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PropertyArg {
    Copersistence,
    Persistence,
    StrongPersistence,
    NormallyTorsionFree,
    NearlyCopersistence,
    GeneralizedNearlyCopersistence,
    Stabilization,
}

#[derive(clap::Args)]
struct GraphSource {
    /// Graph fixture id, file, or inline `graph ...; edges (...)` text
    #[arg(short = 'g', long = "input")]
    input: Option<String>,
    /// Cycle graph on n vertices
    #[arg(long, conflicts_with = "input")]
    cycle: Option<usize>,
    /// Path graph on n vertices
    #[arg(long, conflicts_with_all = ["input", "cycle"])]
    path: Option<usize>,
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Edge ideal of the graph
    EdgeIdeal {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Cover ideal of the graph
    CoverIdeal {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Two-coloring or odd-cycle witness
    Bipartite {
        #[command(flatten)]
        source: GraphSource,
    },
    /// All induced odd cycles
    OddCycles {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Connected with exactly one induced odd cycle
    AlmostBipartite {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Pairs of distant induced odd cycles of a given order
    Hochster {
        #[command(flatten)]
        source: GraphSource,
        #[arg(short = 'k', long = "order")]
        order: u64,
    },
}

#[derive(Subcommand)]
enum FixturesCommand {
    /// Ids and descriptions
    List,
    /// One fixture in full
    Show { id: String },
    /// Dump the whole corpus as parseable text
    Export,
}

struct Outcome {
    json: Value,
    text: String,
    violated: bool,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Outcome {
            json,
            text,
            violated: false,
        }
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with status 0
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let format = cli.format;
    match dispatch(cli) {
        Ok(out) => {
            match format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string(&out.json).unwrap()),
            }
            if out.violated {
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Resolves `-i` arguments: fixture id, then file path, then inline text.
fn resolve_ideal(input: &str) -> Result<MonomialIdeal> {
    if let Some(f) = fixtures::find(input) {
        if f.kind == FixtureKind::Ideal {
            return fixtures::ideal(input);
        }
        return Err(Error::Invalid(format!(
            "fixture {input} is a graph; use the graph subcommands"
        )));
    }
    let trimmed = input.trim_start();
    if trimmed.starts_with("ring") || trimmed.starts_with("ideal") {
        return Ok(parse_ideal_text(input)?.ideal);
    }
    match std::fs::read_to_string(input) {
        Ok(text) => Ok(parse_ideal_text(&text)?.ideal),
        Err(_) => Err(Error::UnknownFixture(input.to_string())),
    }
}

fn resolve_graph(source: &GraphSource) -> Result<SimpleGraph> {
    if let Some(n) = source.cycle {
        return SimpleGraph::cycle(n);
    }
    if let Some(n) = source.path {
        return SimpleGraph::path(n);
    }
    let Some(input) = &source.input else {
        return Err(Error::Invalid(
            "give a graph with -g <fixture|file|text>, --cycle n, or --path n".into(),
        ));
    };
    if let Some(f) = fixtures::find(input) {
        if f.kind == FixtureKind::Graph {
            return fixtures::graph(input);
        }
        return Err(Error::Invalid(format!("fixture {input} is an ideal")));
    }
    let trimmed = input.trim_start();
    if trimmed.starts_with("graph") {
        return parse_graph_text(input);
    }
    match std::fs::read_to_string(input) {
        Ok(text) => parse_graph_text(&text),
        Err(_) => Err(Error::UnknownFixture(input.to_string())),
    }
}

fn parse_monomial_arg(ideal: &MonomialIdeal, text: &str) -> Result<Monomial> {
    // Reuse the ideal grammar for a single monomial over the same ring.
    let wrapped = format!(
        "ring {}; ideal ({})",
        ideal.ring().vars().join(","),
        text
    );
    let parsed = parse_ideal_text(&wrapped)?;
    if parsed.ideal.num_gens() != 1 {
        return Err(Error::Invalid(format!("`{text}` is not a single monomial")));
    }
    Ok(parsed.ideal.gens()[0].clone())
}

fn prime_from_names(ideal: &MonomialIdeal, names: &[String]) -> Result<MonomialPrime> {
    ideal.ring().prime(names)
}

fn primes_json(primes: &[MonomialPrime]) -> Value {
    json!(primes.iter().map(|p| p.names()).collect::<Vec<_>>())
}

fn primes_text(primes: &[MonomialPrime]) -> String {
    primes
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn ideal_outcome(ideal: &MonomialIdeal) -> Outcome {
    let generators: Vec<String> = ideal.gens().iter().map(|g| g.to_string()).collect();
    Outcome::ok(
        json!({
            "ring": ideal.ring().vars(),
            "generators": generators,
        }),
        render_ideal(ideal),
    )
}

fn check_ass_against_oracle(ideal: &MonomialIdeal, ass: &[MonomialPrime], budget: u64) -> Result<()> {
    let oracle = decompose::ass_witness_oracle(ideal, budget)?;
    if oracle != ass {
        return Err(Error::Invalid(format!(
            "oracle disagreement: decomposition gives {} but witness enumeration gives {}",
            primes_text(ass),
            primes_text(&oracle)
        )));
    }
    Ok(())
}

fn property_outcome(report: PropertyReport) -> Outcome {
    let violated = !report.holds();
    Outcome {
        json: serde_json::to_value(&report).unwrap(),
        text: report.text(),
        violated,
    }
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    let budget = cli.budget;
    let oracle = cli.oracle;
    match cli.command {
        Command::Ass {
            input,
            power,
            max_power,
        } => {
            let ideal = resolve_ideal(&input)?;
            match max_power {
                Some(n) => {
                    let seq = properties::ass_sequence(&ideal, n)?;
                    if oracle {
                        let mut pw = ideal.clone();
                        for k in 1..=n {
                            if k > 1 {
                                pw = pw.product(&ideal)?;
                            }
                            check_ass_against_oracle(&pw, seq.ass(k), budget)?;
                        }
                    }
                    let text = (1..=n)
                        .map(|k| format!("k={k}: {}", primes_text(seq.ass(k))))
                        .collect::<Vec<_>>()
                        .join("\n");
                    Ok(Outcome::ok(
                        json!({"max_power": n, "per_power": seq.names()}),
                        text,
                    ))
                }
                None => {
                    let pw = ideal.pow(power)?;
                    let ass = decompose::associated_primes(&pw)?;
                    if oracle {
                        check_ass_against_oracle(&pw, &ass, budget)?;
                    }
                    Ok(Outcome::ok(primes_json(&ass), primes_text(&ass)))
                }
            }
        }
        Command::Decompose { input, irreducible } => {
            let ideal = resolve_ideal(&input)?;
            if irreducible {
                let comps = decompose::irreducible_decomposition(&ideal)?;
                let rendered: Vec<String> = comps.iter().map(|c| c.render()).collect();
                Ok(Outcome::ok(json!(rendered), rendered.join(" ∩ ")))
            } else {
                let comps = decompose::primary_decomposition(&ideal)?;
                if oracle {
                    let ass: Vec<MonomialPrime> =
                        comps.iter().map(|c| c.radical.clone()).collect();
                    check_ass_against_oracle(&ideal, &ass, budget)?;
                }
                let parts: Vec<Value> = comps
                    .iter()
                    .map(|c| {
                        json!({
                            "radical": c.radical.names(),
                            "component": c.ideal.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                let text = comps
                    .iter()
                    .map(|c| format!("{} {}", c.radical, c.ideal.render()))
                    .collect::<Vec<_>>()
                    .join("\n");
                Ok(Outcome::ok(json!(parts), text))
            }
        }
        Command::Min { input } => {
            let ideal = resolve_ideal(&input)?;
            let min = decompose::minimal_primes(&ideal)?;
            Ok(Outcome::ok(primes_json(&min), primes_text(&min)))
        }
        Command::Power { input, exponent } => {
            let ideal = resolve_ideal(&input)?;
            Ok(ideal_outcome(&ideal.pow(exponent)?))
        }
        Command::Intersect { input, with } => {
            let a = resolve_ideal(&input)?;
            let b = resolve_ideal(&with)?;
            Ok(ideal_outcome(&a.intersect(&b)?))
        }
        Command::Colon {
            input,
            with,
            monomial,
        } => {
            let a = resolve_ideal(&input)?;
            let result = match (with, monomial) {
                (Some(j), None) => a.colon(&resolve_ideal(&j)?)?,
                (None, Some(m)) => a.colon_monomial(&parse_monomial_arg(&a, &m)?)?,
                _ => {
                    return Err(Error::Invalid(
                        "colon needs exactly one of -j <ideal> or --mono <monomial>".into(),
                    ))
                }
            };
            Ok(ideal_outcome(&result))
        }
        Command::Radical { input } => {
            let ideal = resolve_ideal(&input)?;
            Ok(ideal_outcome(&ideal.radical()))
        }
        Command::Closure { input } => {
            let ideal = resolve_ideal(&input)?;
            let c = closure::integral_closure(&ideal, budget)?;
            if oracle {
                for g in c.gens() {
                    if !closure::closure_power_oracle(
                        &ideal,
                        g.exps(),
                        closure::DEFAULT_POWER_ORACLE_BOUND,
                    )? {
                        return Err(Error::Invalid(format!(
                            "oracle disagreement: {g} not confirmed integral within {} powers",
                            closure::DEFAULT_POWER_ORACLE_BOUND
                        )));
                    }
                }
            }
            Ok(ideal_outcome(&c))
        }
        Command::Normal { input } => {
            let ideal = resolve_ideal(&input)?;
            let cert = closure::is_normal(&ideal, budget)?;
            let text = if cert.normal {
                format!(
                    "normal: closures agree for powers {:?}",
                    cert.powers_checked
                )
            } else {
                let f = cert.failure.as_ref().unwrap();
                format!(
                    "not normal: {} is integral over power {} but lies outside it",
                    f.witness, f.power
                )
            };
            Ok(Outcome::ok(serde_json::to_value(&cert).unwrap(), text))
        }
        Command::Expand { input, tuple } => {
            let ideal = resolve_ideal(&input)?;
            let spec = transforms::ExpansionSpec::new(ideal.ring(), tuple)?;
            Ok(ideal_outcome(&transforms::expand(&ideal, &spec)?))
        }
        Command::Weight { input, weights } => {
            let ideal = resolve_ideal(&input)?;
            Ok(ideal_outcome(&transforms::weight(&ideal, &weights)?))
        }
        Command::Polarize { input } => {
            let ideal = resolve_ideal(&input)?;
            let (p, _) = transforms::polarize(&ideal)?;
            Ok(ideal_outcome(&p))
        }
        Command::Depolarize { input } => {
            let ideal = resolve_ideal(&input)?;
            let map = transforms::derive_polarization_map(ideal.ring())?;
            Ok(ideal_outcome(&transforms::depolarize(&ideal, &map)?))
        }
        Command::Localize { input, prime } => {
            let ideal = resolve_ideal(&input)?;
            let p = prime_from_names(&ideal, &prime)?;
            let localized = transforms::localize(&ideal, &p)?;
            let mut out = ideal_outcome(&localized);
            if localized.is_unit() {
                out.json["collapsed_to_unit"] = json!(true);
                out.text.push_str("  (collapsed to the unit ideal)");
            }
            Ok(out)
        }
        Command::Contract { input, var } => {
            let ideal = resolve_ideal(&input)?;
            let i = ideal
                .ring()
                .index_of(&var)
                .ok_or_else(|| Error::UnknownVariable(var))?;
            Ok(ideal_outcome(&transforms::contract(&ideal, i)?))
        }
        Command::Delete { input, var } => {
            let ideal = resolve_ideal(&input)?;
            let i = ideal
                .ring()
                .index_of(&var)
                .ok_or_else(|| Error::UnknownVariable(var))?;
            Ok(ideal_outcome(&transforms::delete(&ideal, i)?))
        }
        Command::Permute { input, map } => {
            let ideal = resolve_ideal(&input)?;
            let mut pairs = Vec::new();
            for entry in &map {
                let Some((from, to)) = entry.split_once(':') else {
                    return Err(Error::InvalidPermutation(format!(
                        "`{entry}` is not of the form from:to"
                    )));
                };
                let fi = ideal
                    .ring()
                    .index_of(from.trim())
                    .ok_or_else(|| Error::UnknownVariable(from.trim().to_string()))?;
                let ti = ideal
                    .ring()
                    .index_of(to.trim())
                    .ok_or_else(|| Error::UnknownVariable(to.trim().to_string()))?;
                pairs.push((fi, ti));
            }
            let sigma = transforms::PermutationSpec::new(&ideal, &pairs)?;
            Ok(ideal_outcome(&transforms::permute(&ideal, &sigma)?))
        }
        Command::Scale { input, monomial } => {
            let ideal = resolve_ideal(&input)?;
            let h = parse_monomial_arg(&ideal, &monomial)?;
            Ok(ideal_outcome(&transforms::scale_by_monomial(&ideal, &h)?))
        }
        Command::Check {
            property,
            input,
            max_power,
            max_augmentation,
        } => {
            let ideal = resolve_ideal(&input)?;
            if oracle {
                let seq = properties::ass_sequence(&ideal, max_power)?;
                let mut pw = ideal.clone();
                for k in 1..=max_power {
                    if k > 1 {
                        pw = pw.product(&ideal)?;
                    }
                    check_ass_against_oracle(&pw, seq.ass(k), budget)?;
                }
            }
            let report = match property {
                PropertyArg::Copersistence => properties::check_copersistence(&ideal, max_power)?,
                PropertyArg::Persistence => properties::check_persistence(&ideal, max_power)?,
                PropertyArg::StrongPersistence => {
                    properties::check_strong_persistence(&ideal, max_power)?
                }
                PropertyArg::NormallyTorsionFree => {
                    properties::check_normally_torsion_free(&ideal, max_power)?
                }
                PropertyArg::NearlyCopersistence => {
                    properties::check_nearly_copersistence(&ideal, max_power)?
                }
                PropertyArg::GeneralizedNearlyCopersistence => {
                    properties::check_generalized_nearly_copersistence(
                        &ideal,
                        max_power,
                        max_augmentation,
                    )?
                }
                PropertyArg::Stabilization => {
                    properties::stabilization_estimate(&ideal, max_power)?
                }
            };
            Ok(property_outcome(report))
        }
        Command::Graph { cmd } => graph_command(cmd, budget, oracle),
        Command::Fixtures { cmd } => fixtures_command(cmd),
    }
}

fn graph_command(cmd: GraphCommand, budget: u64, oracle: bool) -> Result<Outcome> {
    match cmd {
        GraphCommand::EdgeIdeal { source } => {
            let g = resolve_graph(&source)?;
            Ok(ideal_outcome(&g.edge_ideal()?))
        }
        GraphCommand::CoverIdeal { source } => {
            let g = resolve_graph(&source)?;
            let ideal = g.cover_ideal()?;
            if oracle {
                let covers = g.minimal_vertex_covers(DEFAULT_ENUMERATION_BUDGET)?;
                let ring = g.ring();
                let gens: Vec<Monomial> = covers
                    .iter()
                    .map(|c| {
                        let mut exps = vec![0u64; ring.len()];
                        for &i in c {
                            exps[i] = 1;
                        }
                        ring.monomial(exps).unwrap()
                    })
                    .collect();
                let rebuilt = MonomialIdeal::new(ring, gens)?;
                if rebuilt != ideal {
                    return Err(Error::Invalid(
                        "oracle disagreement: edge-prime intersection differs from cover enumeration"
                            .into(),
                    ));
                }
            }
            Ok(ideal_outcome(&ideal))
        }
        GraphCommand::Bipartite { source } => {
            let g = resolve_graph(&source)?;
            match g.bipartition() {
                Bipartiteness::TwoColoring(sides) => {
                    let (left, right): (Vec<_>, Vec<_>) =
                        sides.iter().partition(|(_, s)| !*s);
                    let left: Vec<String> = left.into_iter().map(|(v, _)| v.clone()).collect();
                    let right: Vec<String> = right.into_iter().map(|(v, _)| v.clone()).collect();
                    Ok(Outcome::ok(
                        json!({"bipartite": true, "sides": [left, right]}),
                        format!("bipartite: [{}] / [{}]", left.join(","), right.join(",")),
                    ))
                }
                Bipartiteness::OddCycle(cycle) => Ok(Outcome::ok(
                    json!({"bipartite": false, "odd_cycle": cycle}),
                    format!("not bipartite: odd cycle {}", cycle.join("-")),
                )),
            }
        }
        GraphCommand::OddCycles { source } => {
            let g = resolve_graph(&source)?;
            let cycles = g.induced_odd_cycles(DEFAULT_ENUMERATION_BUDGET)?;
            let named: Vec<Vec<String>> = cycles
                .iter()
                .map(|c| c.iter().map(|&i| g.vertices()[i].clone()).collect())
                .collect();
            let text = if named.is_empty() {
                "no induced odd cycles".to_string()
            } else {
                named
                    .iter()
                    .map(|c| format!("{{{}}}", c.join(",")))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            Ok(Outcome::ok(json!(named), text))
        }
        GraphCommand::AlmostBipartite { source } => {
            let g = resolve_graph(&source)?;
            let res = g.is_almost_bipartite(DEFAULT_ENUMERATION_BUDGET)?;
            let text = match (&res.verdict, &res.note) {
                (true, _) => "almost bipartite".to_string(),
                (false, Some(n)) => format!("not almost bipartite: {n}"),
                (false, None) => format!(
                    "not almost bipartite: {} induced odd cycles",
                    res.induced_odd_cycles
                ),
            };
            Ok(Outcome::ok(serde_json::to_value(&res).unwrap(), text))
        }
        GraphCommand::Hochster { source, order } => {
            let g = resolve_graph(&source)?;
            let configs = g.hochster_configurations(order, DEFAULT_ENUMERATION_BUDGET)?;
            let named: Vec<(Vec<String>, Vec<String>)> = configs
                .iter()
                .map(|(a, b)| {
                    (
                        a.iter().map(|&i| g.vertices()[i].clone()).collect(),
                        b.iter().map(|&i| g.vertices()[i].clone()).collect(),
                    )
                })
                .collect();
            let _ = budget;
            let text = if named.is_empty() {
                format!("no configurations of order {order}")
            } else {
                named
                    .iter()
                    .map(|(a, b)| format!("({{{}}}, {{{}}})", a.join(","), b.join(",")))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            Ok(Outcome::ok(json!(named), text))
        }
    }
}

fn fixtures_command(cmd: FixturesCommand) -> Result<Outcome> {
    match cmd {
        FixturesCommand::List => {
            let rows: Vec<Value> = fixtures::all()
                .iter()
                .map(|f| {
                    json!({
                        "id": f.id,
                        "kind": match f.kind { FixtureKind::Ideal => "ideal", FixtureKind::Graph => "graph" },
                        "description": f.description,
                    })
                })
                .collect();
            let text = fixtures::all()
                .iter()
                .map(|f| format!("{:28} {}", f.id, f.description))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::ok(json!(rows), text))
        }
        FixturesCommand::Show { id } => {
            let f = fixtures::find(&id).ok_or_else(|| Error::UnknownFixture(id.clone()))?;
            Ok(Outcome::ok(
                json!({"id": f.id, "text": f.text, "description": f.description}),
                format!("{}\n{}\n{}", f.id, f.description, f.text),
            ))
        }
        FixturesCommand::Export => {
            let rows: Vec<Value> = fixtures::all()
                .iter()
                .map(|f| json!({"id": f.id, "text": f.text}))
                .collect();
            let text = fixtures::all()
                .iter()
                .map(|f| format!("# {}\n{}", f.id, f.text))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::ok(json!(rows), text))
        }
    }
}
