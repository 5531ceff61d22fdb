//! Command-line surface over the fuzzy soft topology engine.
//!
//! Exit codes: 0 on success / all checks passing, 1 when a property check
//! fails or a counterexample is found, 2 on input errors.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use fss::explorer::{
    self, FuzzConfig, GridSpec, SearchConfig, SearchProperty, SearchStatus, Transcript,
};
use fss::io::{self, GradeMap, ParsedSpace};
use fss::semi;
use fss::topology;
use fss::FuzzySoftSet;

#[derive(Parser)]
#[command(name = "fss", version, about = "Finite fuzzy soft topological spaces")]
struct Cli {
    /// Emit machine-readable JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the topology axioms on the family in FILE.
    Validate { file: String },
    /// Classify a named set as semiopen/semiclosed by both routes.
    Classify { file: String, set: String },
    /// Interior of a named set.
    Int { file: String, set: String },
    /// Closure of a named set.
    Cl { file: String, set: String },
    /// Semi-interior of a named set.
    Sint { file: String, set: String },
    /// Semi-closure of a named set.
    Scl { file: String, set: String },
    /// Run the fourteen semi-closure/semi-interior identities on a pair.
    Properties { file: String, g: String, k: String },
    /// Point decomposition and the point characterization verdict.
    Points { file: String, set: String },
    /// Hunt for a counterexample to a known non-theorem.
    Search {
        property: String,
        #[arg(long, default_value_t = 100)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Grade grid denominator for sampled spaces.
        #[arg(long, default_value_t = 1)]
        grid: u32,
        #[arg(long, default_value_t = 3)]
        universe: usize,
        #[arg(long, default_value_t = 1)]
        parameters: usize,
        #[arg(long, default_value_t = 3)]
        subbasis: usize,
    },
    /// Fuzz every theorem over randomly generated spaces.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 3)]
        max_universe: usize,
        #[arg(long, default_value_t = 2)]
        max_parameters: usize,
        #[arg(long, default_value_t = 4)]
        max_denominator: u32,
        #[arg(long, default_value_t = 3)]
        max_subbasis: usize,
    },
    /// Generate a random space document.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        universe: usize,
        #[arg(long, default_value_t = 2)]
        parameters: usize,
        #[arg(long, default_value_t = 4)]
        grid: u32,
        #[arg(long, default_value_t = 3)]
        subbasis: usize,
    },
    /// Close the file's member family into a topology and emit it.
    Repair { file: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn load(file: &str) -> Result<ParsedSpace, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))?;
    let (_, space) = io::parse(&text).map_err(|e| format!("{file}: {e}"))?;
    Ok(space)
}

fn map_of(set: &FuzzySoftSet) -> GradeMap {
    io::set_to_map(set)
}

#[derive(Serialize)]
struct ViolationOut {
    axiom: &'static str,
    witnesses: Vec<GradeMap>,
    computed: Option<GradeMap>,
}

#[derive(Serialize)]
struct ValidateOut {
    command: &'static str,
    file: String,
    member_count: usize,
    passed: bool,
    axioms: BTreeMap<&'static str, bool>,
    violations: Vec<ViolationOut>,
}

#[derive(Serialize)]
struct RouteOut {
    definition: bool,
    witness: Option<GradeMap>,
    characterization: bool,
}

#[derive(Serialize)]
struct ClassifyOut {
    command: &'static str,
    set: String,
    semiopen: RouteOut,
    semiclosed: RouteOut,
    open: bool,
    closed: bool,
    routes_agree: bool,
    interior: GradeMap,
    closure: GradeMap,
    topology_valid: bool,
    note: Option<String>,
}

#[derive(Serialize)]
struct SetOut {
    command: &'static str,
    set: String,
    result: GradeMap,
}

#[derive(Serialize)]
struct PropertyOut {
    item: usize,
    name: &'static str,
    applicable: bool,
    holds: bool,
    lhs: Option<GradeMap>,
    rhs: Option<GradeMap>,
}

#[derive(Serialize)]
struct PropertiesOut {
    command: &'static str,
    g: String,
    k: String,
    passed: bool,
    verdicts: Vec<PropertyOut>,
}

#[derive(Serialize)]
struct PointOut {
    parameter: String,
    membership: BTreeMap<String, String>,
}

#[derive(Serialize)]
struct PointsOut {
    command: &'static str,
    set: String,
    points: Vec<PointOut>,
    characterization_holds: bool,
}

#[derive(Serialize)]
struct TranscriptOut {
    role: String,
    set: GradeMap,
    interior: GradeMap,
    closure: GradeMap,
    semiopen_def: bool,
    semiopen_char: bool,
    semiclosed_def: bool,
    semiclosed_char: bool,
    open: bool,
    closed: bool,
}

#[derive(Serialize)]
struct WitnessOut {
    space_seed: u64,
    space: io::SpaceDocument,
    transcripts: Vec<TranscriptOut>,
}

#[derive(Serialize)]
struct SearchOut {
    command: &'static str,
    property: &'static str,
    status: &'static str,
    spaces_sampled: u64,
    witness: Option<WitnessOut>,
}

#[derive(Serialize)]
struct FuzzFailureOut {
    sample: u64,
    space_seed: u64,
    check: String,
    space: io::SpaceDocument,
    sets: BTreeMap<String, GradeMap>,
}

#[derive(Serialize)]
struct FuzzOut {
    command: &'static str,
    seed: u64,
    samples: u64,
    max_universe: usize,
    max_parameters: usize,
    max_denominator: u32,
    max_subbasis: usize,
    passed: bool,
    checks: BTreeMap<String, u64>,
    failures: Vec<FuzzFailureOut>,
}

fn transcript_out(t: &Transcript) -> TranscriptOut {
    TranscriptOut {
        role: t.role.clone(),
        set: map_of(&t.set),
        interior: map_of(&t.interior),
        closure: map_of(&t.closure),
        semiopen_def: t.semiopen_def,
        semiopen_char: t.semiopen_char,
        semiclosed_def: t.semiclosed_def,
        semiclosed_char: t.semiclosed_char,
        open: t.open,
        closed: t.closed,
    }
}

/// Prints a line to stdout, exiting quietly if the pipe is closed.
fn print_line(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{text}").is_err() {
        std::process::exit(0);
    }
}

fn emit<T: Serialize>(json: bool, value: &T, human: String) {
    if json {
        print_line(&serde_json::to_string_pretty(value).expect("serializable report"));
    } else {
        print_line(&human);
    }
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Validate { file } => {
            let space = load(file)?;
            let members: Vec<FuzzySoftSet> = space.topology_members.values().cloned().collect();
            let report =
                topology::validate(&members, &space.signature).map_err(|e| e.to_string())?;
            let mut axioms = BTreeMap::new();
            for axiom in [
                topology::Axiom::ContainsEmpty,
                topology::Axiom::ContainsAmbient,
                topology::Axiom::BinaryIntersection,
                topology::Axiom::BinaryUnion,
            ] {
                axioms.insert(
                    axiom.id(),
                    !report.violations.iter().any(|v| v.axiom == axiom),
                );
            }
            let out = ValidateOut {
                command: "validate",
                file: file.clone(),
                member_count: members.len(),
                passed: report.passed,
                axioms: axioms.clone(),
                violations: report
                    .violations
                    .iter()
                    .map(|v| ViolationOut {
                        axiom: v.axiom.id(),
                        witnesses: v.witnesses.iter().map(map_of).collect(),
                        computed: v.computed.as_ref().map(map_of),
                    })
                    .collect(),
            };
            let mut human = format!(
                "validate {file}: {} ({} members)\n",
                pass_fail(report.passed),
                members.len()
            );
            for (id, ok) in &axioms {
                human.push_str(&format!("  axiom {id}: {}\n", pass_fail(*ok)));
            }
            for v in &report.violations {
                human.push_str(&format!(
                    "  violation {}: witnesses {}, computed set missing from the family: {}\n",
                    v.axiom.id(),
                    v.witnesses
                        .iter()
                        .map(|w| compact(&map_of(w)))
                        .collect::<Vec<_>>()
                        .join(" , "),
                    v.computed.as_ref().map(|c| compact(&map_of(c))).unwrap_or_default(),
                ));
            }
            emit(cli.json, &out, human.trim_end().to_string());
            Ok(exit_pass(report.passed))
        }
        Command::Classify { file, set } => {
            let space = load(file)?;
            let topo = space.printed_topology().map_err(|e| e.to_string())?;
            let subject = space.resolve(set).map_err(|e| e.to_string())?;
            let report = semi::classify(&topo, &subject).map_err(|e| e.to_string())?;
            let valid = topology::validate(topo.opens(), &space.signature)
                .map_err(|e| e.to_string())?
                .passed;
            let note = (!valid).then(|| {
                "the file's family fails the topology axioms; verdicts are computed \
                 against the family as printed"
                    .to_string()
            });
            let out = ClassifyOut {
                command: "classify",
                set: set.clone(),
                semiopen: RouteOut {
                    definition: report.semiopen_def,
                    witness: report.semiopen_witness.as_ref().map(map_of),
                    characterization: report.semiopen_char,
                },
                semiclosed: RouteOut {
                    definition: report.semiclosed_def,
                    witness: report.semiclosed_witness.as_ref().map(map_of),
                    characterization: report.semiclosed_char,
                },
                open: report.open,
                closed: report.closed,
                routes_agree: report.routes_agree(),
                interior: map_of(&topo.interior(&subject).map_err(|e| e.to_string())?),
                closure: map_of(&topo.closure(&subject).map_err(|e| e.to_string())?),
                topology_valid: valid,
                note: note.clone(),
            };
            let mut human = format!(
                "classify {set}: semiopen def={} char={}, semiclosed def={} char={}, open={}, closed={}",
                report.semiopen_def,
                report.semiopen_char,
                report.semiclosed_def,
                report.semiclosed_char,
                report.open,
                report.closed
            );
            if let Some(w) = &report.semiopen_witness {
                human.push_str(&format!("\n  semiopen witness: {}", compact(&map_of(w))));
            }
            if let Some(w) = &report.semiclosed_witness {
                human.push_str(&format!("\n  semiclosed witness: {}", compact(&map_of(w))));
            }
            human.push_str(&format!("\n  interior: {}", compact(&out.interior)));
            human.push_str(&format!("\n  closure: {}", compact(&out.closure)));
            if let Some(n) = &note {
                human.push_str(&format!("\n  note: {n}"));
            }
            emit(cli.json, &out, human);
            Ok(ExitCode::SUCCESS)
        }
        Command::Int { file, set } | Command::Cl { file, set }
        | Command::Sint { file, set } | Command::Scl { file, set } => {
            let space = load(file)?;
            let topo = space.printed_topology().map_err(|e| e.to_string())?;
            let subject = space.resolve(set).map_err(|e| e.to_string())?;
            let (name, result): (&'static str, FuzzySoftSet) = match &cli.command {
                Command::Int { .. } => ("int", topo.interior(&subject).map_err(|e| e.to_string())?),
                Command::Cl { .. } => ("cl", topo.closure(&subject).map_err(|e| e.to_string())?),
                Command::Sint { .. } => {
                    ("sint", semi::fssint(&topo, &subject).map_err(|e| e.to_string())?)
                }
                Command::Scl { .. } => {
                    ("scl", semi::fsscl(&topo, &subject).map_err(|e| e.to_string())?)
                }
                _ => unreachable!(),
            };
            let out = SetOut {
                command: name,
                set: set.clone(),
                result: map_of(&result),
            };
            emit(cli.json, &out, format!("{name} {set}: {}", compact(&out.result)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Properties { file, g, k } => {
            let space = load(file)?;
            let topo = space.printed_topology().map_err(|e| e.to_string())?;
            let g_set = space.resolve(g).map_err(|e| e.to_string())?;
            let k_set = space.resolve(k).map_err(|e| e.to_string())?;
            let verdicts = semi::property_suite(&topo, &g_set, &k_set).map_err(|e| e.to_string())?;
            let passed = verdicts.iter().all(|v| v.holds);
            let out = PropertiesOut {
                command: "properties",
                g: g.clone(),
                k: k.clone(),
                passed,
                verdicts: verdicts
                    .iter()
                    .map(|v| PropertyOut {
                        item: v.item,
                        name: v.name,
                        applicable: v.applicable,
                        holds: v.holds,
                        lhs: v.sides.as_ref().map(|(l, _)| map_of(l)),
                        rhs: v.sides.as_ref().map(|(_, r)| map_of(r)),
                    })
                    .collect(),
            };
            let mut human = format!("properties {g} {k}: {}", pass_fail(passed));
            for v in &verdicts {
                human.push_str(&format!(
                    "\n  ({:>2}) {}: {}{}",
                    v.item,
                    v.name,
                    pass_fail(v.holds),
                    if v.applicable { "" } else { " (vacuous)" }
                ));
            }
            emit(cli.json, &out, human);
            Ok(exit_pass(passed))
        }
        Command::Points { file, set } => {
            let space = load(file)?;
            let topo = space.printed_topology().map_err(|e| e.to_string())?;
            let subject = space.resolve(set).map_err(|e| e.to_string())?;
            let holds =
                semi::point_characterization_check(&topo, &subject).map_err(|e| e.to_string())?;
            let points: Vec<PointOut> = subject
                .decompose_points()
                .iter()
                .map(|p| PointOut {
                    parameter: p.parameter().to_string(),
                    membership: space
                        .signature
                        .universe()
                        .iter()
                        .zip(p.membership())
                        .map(|(x, g)| (x.clone(), io::grade_to_string(g)))
                        .collect(),
                })
                .collect();
            let out = PointsOut {
                command: "points",
                set: set.clone(),
                points,
                characterization_holds: holds,
            };
            let mut human = format!(
                "points {set}: {} point(s), characterization {}",
                out.points.len(),
                pass_fail(holds)
            );
            for p in &out.points {
                human.push_str(&format!("\n  {}: {:?}", p.parameter, p.membership));
            }
            emit(cli.json, &out, human);
            Ok(exit_pass(holds))
        }
        Command::Search {
            property,
            budget,
            seed,
            grid,
            universe,
            parameters,
            subbasis,
        } => {
            let property = SearchProperty::parse(property).map_err(|e| e.to_string())?;
            let config = SearchConfig {
                universe_size: *universe,
                parameter_count: *parameters,
                grid: GridSpec::new(*grid).map_err(|e| e.to_string())?,
                max_subbasis: *subbasis,
                ..SearchConfig::default()
            };
            let outcome = explorer::search_counterexample(property, *budget, *seed, config)
                .map_err(|e| e.to_string())?;
            let status = match outcome.status {
                SearchStatus::Found => "found",
                SearchStatus::Exhausted => "exhausted",
                SearchStatus::BudgetSpent => "budget-spent",
            };
            let witness = outcome.witness.as_ref().map(|w| WitnessOut {
                space_seed: w.space_seed,
                space: io::document_from_topology(&w.topology),
                transcripts: w.transcripts.iter().map(transcript_out).collect(),
            });
            let out = SearchOut {
                command: "search",
                property: property.id(),
                status,
                spaces_sampled: outcome.spaces_sampled,
                witness,
            };
            let mut human = format!(
                "search {}: {status} after {} space(s)",
                property.id(),
                outcome.spaces_sampled
            );
            if let Some(w) = &outcome.witness {
                human.push_str(&format!("\n  space seed {}", w.space_seed));
                for t in &w.transcripts {
                    human.push_str(&format!(
                        "\n  {}: {} semiopen(def {}, char {}) semiclosed(def {}, char {}) open {} closed {}",
                        t.role,
                        compact(&map_of(&t.set)),
                        t.semiopen_def,
                        t.semiopen_char,
                        t.semiclosed_def,
                        t.semiclosed_char,
                        t.open,
                        t.closed
                    ));
                }
            }
            emit(cli.json, &out, human);
            Ok(if outcome.status == SearchStatus::Found {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Fuzz {
            seed,
            samples,
            max_universe,
            max_parameters,
            max_denominator,
            max_subbasis,
        } => {
            let config = FuzzConfig {
                seed: *seed,
                samples: *samples,
                max_universe: *max_universe,
                max_parameters: *max_parameters,
                max_denominator: *max_denominator,
                max_subbasis: *max_subbasis,
            };
            let report = explorer::fuzz_theorems(config).map_err(|e| e.to_string())?;
            let out = FuzzOut {
                command: "fuzz",
                seed: config.seed,
                samples: config.samples,
                max_universe: config.max_universe,
                max_parameters: config.max_parameters,
                max_denominator: config.max_denominator,
                max_subbasis: config.max_subbasis,
                passed: report.passed(),
                checks: report.checks.clone(),
                failures: report
                    .failures
                    .iter()
                    .map(|f| FuzzFailureOut {
                        sample: f.sample,
                        space_seed: f.space_seed,
                        check: f.check.clone(),
                        space: io::document_from_topology(&f.topology),
                        sets: f
                            .sets
                            .iter()
                            .map(|(n, s)| (n.clone(), map_of(s)))
                            .collect(),
                    })
                    .collect(),
            };
            let mut human = format!(
                "fuzz seed={} samples={}: {}",
                config.seed,
                config.samples,
                pass_fail(report.passed())
            );
            for (check, count) in &report.checks {
                human.push_str(&format!("\n  {check}: {count} checked"));
            }
            for f in &report.failures {
                human.push_str(&format!(
                    "\n  FAILURE {} at sample {} (space seed {})",
                    f.check, f.sample, f.space_seed
                ));
            }
            emit(cli.json, &out, human);
            Ok(exit_pass(report.passed()))
        }
        Command::Gen {
            seed,
            universe,
            parameters,
            grid,
            subbasis,
        } => {
            let (_, topo) = explorer::gen_space(
                *seed,
                *universe,
                *parameters,
                GridSpec::new(*grid).map_err(|e| e.to_string())?,
                *subbasis,
            )
            .map_err(|e| e.to_string())?;
            let document = io::document_from_topology(&topo);
            // `gen` always emits the document itself.
            print_line(io::serialize(&document).map_err(|e| e.to_string())?.trim_end());
            Ok(ExitCode::SUCCESS)
        }
        Command::Repair { file } => {
            let space = load(file)?;
            let members: Vec<FuzzySoftSet> = space.topology_members.values().cloned().collect();
            let topo = topology::generate_from_subbasis(&members, &space.signature)
                .map_err(|e| e.to_string())?;
            let document = io::document_from_topology(&topo);
            print_line(io::serialize(&document).map_err(|e| e.to_string())?.trim_end());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_pass(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// One-line rendering of a grade map for human output.
fn compact(map: &GradeMap) -> String {
    let rows: Vec<String> = map
        .iter()
        .map(|(p, row)| {
            let cells: Vec<String> =
                row.iter().map(|(x, g)| format!("{x}:{g}")).collect();
            format!("{p}({})", cells.join(","))
        })
        .collect();
    rows.join(" ")
}
