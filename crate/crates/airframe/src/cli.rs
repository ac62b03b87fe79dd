//! The `airframe` command line. [`run`] does all the work and returns the
//! exit status with the text to print, so it can be driven from tests.

use std::fmt::Write as _;

use airframe_core::airplane::ComponentId;
use airframe_core::analysis::{abelianization_image, derivative_table, is_in_commutator, log2_global_derivative, semidirect_split};
use airframe_core::circularize::phi_diagram;
use airframe_core::components::{
    components_up_to, orbit_search, parse_component, show_component, transitive_to_center, two_transitive_to, SearchSpace,
};
use airframe_core::systems::{builtin_generators, BUILTIN_NAMES};
use airframe_core::tree::{intertwine_check, CANONICAL_PAIRING, SHUFFLED_PAIRING};
use airframe_core::{Diagram, Expansion, GeneratorTable, GroupWord};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::acceptance::{self, commutator_generators, DEFAULT_SEED};
use crate::error::{AirframeError, Result};
use crate::formats::{diagram_from_json, diagram_to_dot, diagram_to_json, expansion_to_dot, resolve_system, system_to_json, DiagramFile, SYSTEM_PATH_VAR};
use crate::word::parse_word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVARIANT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "airframe", version, about = "Rearrangement groups of edge replacement systems")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DiagramFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GeneratorSet {
    /// α, β, γ, δ, ε
    Five,
    /// α, β, γ, δ, [δ,ε], [ε⁻¹, ε⁻¹α]
    Commutator,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Pairing {
    Canonical,
    Shuffled,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a word to its reduced diagram.
    Eval {
        word: String,
        #[arg(long, default_value = "airplane")]
        system: String,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Json)]
        format: DiagramFormat,
    },
    /// Reduce a diagram read from a JSON file.
    Reduce {
        file: std::path::PathBuf,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Json)]
        format: DiagramFormat,
    },
    /// Global derivative and per-extreme table of an Airplane element.
    D { word: String },
    /// Commutator-subgroup membership and the split f = c ∘ ε^k.
    Commutator { word: String },
    /// Shortest word sending one component to another.
    Orbit {
        src: String,
        tgt: String,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = SearchSpace::default().max_depth)]
        max_depth: usize,
        #[arg(long, default_value_t = SearchSpace::default().max_exponent)]
        max_exponent: u32,
    },
    /// Map small components to Central, and random pairs to a fixed pair.
    Transitivity {
        /// Largest component depth.
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Largest coordinate denominator.
        #[arg(long, default_value_t = 8)]
        denominator: u32,
        #[arg(long, default_value_t = 30)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = GeneratorSet::Five)]
        generators: GeneratorSet,
        /// Number of random ordered pairs to map onto (Central, ((0,1/2))).
        #[arg(long, default_value_t = 0)]
        pairs: usize,
    },
    /// Image of an Airplane element in the circular Airplane group.
    Circularize {
        word: String,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Json)]
        format: DiagramFormat,
    },
    /// Compare the Airplane and Basilica actions on the truncated trees.
    Intertwine {
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value_t = 8)]
        bound: u32,
        #[arg(long, value_enum, default_value_t = Pairing::Canonical)]
        pairing: Pairing,
    },
    /// Built-in and search-path replacement systems.
    Systems {
        #[command(subcommand)]
        action: SystemsAction,
    },
    /// Run the acceptance suite.
    Check {
        #[arg(long, default_value = "core")]
        suite: String,
        /// Run a single criterion.
        #[arg(long)]
        only: Option<u8>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SystemsAction {
    List,
    Show {
        name: String,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Json)]
        format: DiagramFormat,
    },
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn verdict(passed: bool, stdout: String) -> Output {
        Output { code: if passed { EXIT_OK } else { EXIT_INVARIANT }, stdout, stderr: String::new() }
    }
}

/// Parses the arguments (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Output::ok(text)
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => Output { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn generators_for(system: &str) -> Result<GeneratorTable> {
    builtin_generators(system).ok_or_else(|| {
        if resolve_system(system).is_ok() {
            AirframeError::NoGenerators(system.to_string())
        } else {
            AirframeError::UnknownSystem(system.to_string())
        }
    })
}

fn evaluate(t: &GeneratorTable, src: &str) -> Result<(GroupWord, Diagram)> {
    let w = parse_word(src)?.to_word();
    let f = t.evaluate(&w)?;
    Ok((w, f))
}

fn diagram_json(f: &Diagram) -> Value {
    serde_json::to_value(DiagramFile::from_diagram(f)).expect("plain data")
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data");
    s.push('\n');
    s
}

fn show_diagram(f: &Diagram, format: DiagramFormat) -> String {
    match format {
        DiagramFormat::Json => diagram_to_json(f) + "\n",
        DiagramFormat::Dot => diagram_to_dot(f),
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Eval { word, system, format } => {
            let t = generators_for(system)?;
            let (_, f) = evaluate(&t, word)?;
            Ok(Output::ok(show_diagram(&f, *format)))
        }
        Command::Reduce { file, format } => {
            let f = diagram_from_json(&std::fs::read_to_string(file)?)?;
            Ok(Output::ok(show_diagram(&f.reduce(), *format)))
        }
        Command::D { word } => derivative(cli, word),
        Command::Commutator { word } => commutator(word),
        Command::Orbit { src, tgt, max_len, max_depth, max_exponent } => {
            let t = generators_for("airplane")?;
            let (a, b) = (parse_component(src)?, parse_component(tgt)?);
            let space = SearchSpace { max_depth: *max_depth, max_exponent: *max_exponent };
            let found = orbit_search(&t, &a, &b, *max_len, space)?;
            let text = if cli.json {
                pretty(&json!({
                    "source": show_component(&a),
                    "target": show_component(&b),
                    "found": found.is_some(),
                    "word": found.as_ref().map(|w| w.to_string()),
                    "length": found.as_ref().map(|w| w.length()),
                }))
            } else {
                match &found {
                    Some(w) => format!("{w}\n"),
                    None => format!("no word of length at most {max_len}\n"),
                }
            };
            Ok(Output::verdict(found.is_some(), text))
        }
        Command::Transitivity { depth, denominator, max_len, generators, pairs } => {
            transitivity(cli, *depth, *denominator, *max_len, *generators, *pairs)
        }
        Command::Circularize { word, format } => {
            let t = generators_for("airplane")?;
            let (_, f) = evaluate(&t, word)?;
            Ok(Output::ok(show_diagram(&phi_diagram(&f)?, *format)))
        }
        Command::Intertwine { depth, bound, pairing } => {
            let pairs: &[(&str, &str)] = match pairing {
                Pairing::Canonical => &CANONICAL_PAIRING,
                Pairing::Shuffled => &SHUFFLED_PAIRING,
            };
            let a = generators_for("airplane")?;
            let b = generators_for("basilica")?;
            let report = intertwine_check(&a, &b, pairs, *depth, *bound)?;
            let angles = |s: &[airframe_core::Dyadic]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>();
            let v = json!({
                "depth": depth,
                "bound": bound,
                "vertices": report.vertices,
                "checks": report.checks,
                "passed": report.passed(),
                "mismatches": report.mismatches.iter().map(|m| json!({
                    "airplane": m.pair.0,
                    "basilica": m.pair.1,
                    "vertex": angles(&m.vertex),
                    "airplane_image": angles(&m.airplane_image),
                    "basilica_image": angles(&m.basilica_image),
                })).collect::<Vec<_>>(),
            });
            Ok(Output::verdict(report.passed(), pretty(&v)))
        }
        Command::Systems { action } => systems(cli, action),
        Command::Check { suite, only } => check(cli, suite, *only),
    }
}

fn derivative(cli: &Cli, word: &str) -> Result<Output> {
    let t = generators_for("airplane")?;
    let (w, f) = evaluate(&t, word)?;
    let total = log2_global_derivative(&f)?;
    let table = derivative_table(&f)?;
    let sys = f.system();
    let rows: Vec<(String, i32)> = table.iter().filter(|(_, &d)| d != 0).map(|(p, &d)| (sys.format_address(&p.0), d)).collect();
    let text = if cli.json {
        pretty(&json!({
            "word": w.to_string(),
            "log2_d": total,
            "extremes": rows.iter().map(|(p, d)| json!({"extreme": p, "log2_d": d})).collect::<Vec<_>>(),
        }))
    } else {
        let mut s = format!("log2 D = {total}\n");
        for (p, d) in &rows {
            writeln!(s, "  {p}: {d}").unwrap();
        }
        s
    };
    Ok(Output::ok(text))
}

fn commutator(word: &str) -> Result<Output> {
    let t = generators_for("airplane")?;
    let (w, f) = evaluate(&t, word)?;
    let (c, k) = semidirect_split(&f, &t)?;
    let v = json!({
        "word": w.to_string(),
        "in_commutator": is_in_commutator(&f)?,
        "abelianization": abelianization_image(&f)?,
        "split": { "c": diagram_json(&c), "k": k },
    });
    Ok(Output::ok(pretty(&v)))
}

fn random_pairs(seed: u64, from: &[ComponentId], n: usize) -> Vec<(ComponentId, ComponentId)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let a = from[rng.gen_range(0..from.len())].clone();
            let mut b = a.clone();
            while b == a {
                b = from[rng.gen_range(0..from.len())].clone();
            }
            (a, b)
        })
        .collect()
}

fn transitivity(cli: &Cli, depth: usize, denominator: u32, max_len: usize, generators: GeneratorSet, pairs: usize) -> Result<Output> {
    let t = match generators {
        GeneratorSet::Five => generators_for("airplane")?,
        GeneratorSet::Commutator => commutator_generators(),
    };
    let exponent = denominator.max(1).ilog2();
    let targets = components_up_to(depth, exponent);
    let space = SearchSpace { max_depth: depth.max(SearchSpace::default().max_depth), max_exponent: exponent.max(SearchSpace::default().max_exponent) };
    let single = transitive_to_center(&t, &targets, max_len, space)?;
    let reference = (ComponentId::Central, parse_component("((0,1/2))")?);
    let double = if pairs > 0 && targets.len() > 1 {
        Some(two_transitive_to(&generators_for("airplane")?, &random_pairs(cli.seed, &targets, pairs), &reference, 200_000)?)
    } else {
        None
    };
    let passed = single.passed() && double.as_ref().is_none_or(|r| r.passed());
    let text = if cli.json {
        let failures = |r: &airframe_core::components::TransitivityReport| {
            r.failures.iter().map(|f| f.iter().map(show_component).collect::<Vec<_>>()).collect::<Vec<_>>()
        };
        pretty(&json!({
            "components": single.checked,
            "longest": single.longest,
            "failures": failures(&single),
            "pairs": double.as_ref().map(|r| json!({
                "checked": r.checked,
                "longest": r.longest,
                "reference": [show_component(&reference.0), show_component(&reference.1)],
                "failures": failures(r),
            })),
            "passed": passed,
        }))
    } else {
        let mut s = format!(
            "{} components sent to Central, longest word {}, {} failures\n",
            single.checked,
            single.longest,
            single.failures.len()
        );
        if let Some(r) = &double {
            writeln!(s, "{} pairs sent to (Central, ((0,1/2))), longest word {}, {} failures", r.checked, r.longest, r.failures.len()).unwrap();
        }
        s
    };
    Ok(Output::verdict(passed, text))
}

fn systems(cli: &Cli, action: &SystemsAction) -> Result<Output> {
    match action {
        SystemsAction::List => {
            let mut names: Vec<String> = BUILTIN_NAMES.iter().map(|s| s.to_string()).collect();
            if let Some(v) = std::env::var_os(SYSTEM_PATH_VAR) {
                let mut extra = Vec::new();
                for dir in std::env::split_paths(&v) {
                    for entry in std::fs::read_dir(dir).into_iter().flatten().flatten() {
                        let p = entry.path();
                        if p.extension().is_some_and(|e| e == "json") {
                            if let Some(stem) = p.file_stem().and_then(|s| s.to_str()) {
                                extra.push(stem.to_string());
                            }
                        }
                    }
                }
                extra.sort();
                extra.retain(|n| !names.contains(n));
                extra.dedup();
                names.extend(extra);
            }
            let text = if cli.json { pretty(&json!(names)) } else { names.join("\n") + "\n" };
            Ok(Output::ok(text))
        }
        SystemsAction::Show { name, format } => {
            let sys = resolve_system(name)?;
            Ok(Output::ok(match format {
                DiagramFormat::Json => system_to_json(&sys) + "\n",
                DiagramFormat::Dot => expansion_to_dot(&sys, &Expansion::base(&sys)),
            }))
        }
    }
}

fn check(cli: &Cli, suite: &str, only: Option<u8>) -> Result<Output> {
    if suite != "core" {
        return Err(AirframeError::Format(format!("unknown suite {suite:?}; the only suite is \"core\"")));
    }
    let results = match only {
        Some(n) => vec![acceptance::run_criterion(n, cli.seed).ok_or_else(|| AirframeError::Format(format!("no criterion {n}")))?],
        None => acceptance::run_all(cli.seed),
    };
    let passed = results.iter().all(|r| r.passed);
    let text = if cli.json {
        pretty(&json!({
            "seed": cli.seed,
            "passed": passed,
            "criteria": results.iter().map(|r| json!({
                "number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail,
            })).collect::<Vec<_>>(),
        }))
    } else {
        let mut s: String = results.iter().map(|r| format!("{r}\n")).collect();
        writeln!(s, "{} of {} criteria passed", results.iter().filter(|r| r.passed).count(), results.len()).unwrap();
        s
    };
    Ok(Output::verdict(passed, text))
}
