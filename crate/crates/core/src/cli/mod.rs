//! The `pogs` command line: subcommands, deterministic reports, and the
//! exit-code contract (0 pass, 1 property or equivalence failed, 2 input or
//! usage error).

pub mod format;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::automorphisms::is_characteristic_interior_ideal;
use crate::error::Error;
use crate::fuzzy::{
    image_levels, is_fuzzy_characteristic_interior_ideal, is_fuzzy_interior_ideal,
    is_fuzzy_subsemigroup, t_cut, FuzzySubset, Grade,
};
use crate::generator::{normalize_grade_set, Ceiling, GeneratorConfig, OrderMode};
use crate::ideals::{enumerate_interior_ideals, is_interior_ideal, is_subsemigroup, CrispSubset};
use crate::structures::PoGammaSemigroup;
use crate::theorems::{extract_midpoint_witness, sweep_with, FuzzySelection, SweepConfig, Theorem};
use crate::verdict::Verdict;

pub use format::{parse_structure, Diagnostic, DiagnosticKind, FuzzyFile, StructureFile};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pogs",
    version,
    about = "Check ideals, fuzzy ideals and automorphisms of finite partially ordered Gamma-semigroups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a structure file
    Validate {
        structure: PathBuf,
        /// Print the canonical form of the file
        #[arg(long)]
        canonical: bool,
    },
    /// List the automorphism group
    Auts { structure: PathBuf },
    /// List interior ideals (default) and/or characteristic interior ideals
    Ideals {
        structure: PathBuf,
        #[arg(long)]
        interior: bool,
        #[arg(long)]
        characteristic: bool,
    },
    /// List the cuts of a fuzzy subset at each of its levels
    Cuts {
        fuzzy: PathBuf,
        /// Only print the distinct levels
        #[arg(long)]
        levels: bool,
    },
    /// Evaluate one predicate. Crisp predicates take a comma-separated
    /// element list (e.g. `0,2`), fuzzy predicates a fuzzy-subset file.
    Check {
        predicate: Predicate,
        structure: PathBuf,
        subject: String,
    },
    /// Build the midpoint cut witnessing a failed fuzzy inequality
    Witness { structure: PathBuf, fuzzy: PathBuf },
    /// Exhaustively verify the equivalences over small structures
    Verify {
        target: VerifyTarget,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        max_m: usize,
        /// Comma-separated grade set; must contain 0 and 1
        #[arg(long, default_value = "0,1/2,1")]
        grades: String,
        #[arg(long, value_enum, default_value_t = OrdersArg::All)]
        orders: OrdersArg,
        /// Seed for `--sample`
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample this many fuzzy subsets per structure instead of
        /// enumerating all of them
        #[arg(long)]
        sample: Option<usize>,
        /// Worker threads (0 = one per core); does not affect the report
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Ignore the enumeration ceiling
        #[arg(long)]
        force: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    Subsemigroup,
    Interior,
    Characteristic,
    FuzzySubsemigroup,
    FuzzyInterior,
    FuzzyCharacteristic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Thm33,
    Thm34,
    Lemma1,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrdersArg {
    Discrete,
    All,
}

/// Exit code and report text. Reports for codes 0 and 1 go to stdout,
/// diagnostics for code 2 to stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
}

impl Outcome {
    fn new(code: i32, text: String) -> Self {
        Outcome { code, text }
    }

    fn input(msg: impl std::fmt::Display) -> Self {
        Outcome::new(EXIT_INPUT, format!("{msg}\n"))
    }
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_INPUT,
            };
            return Outcome::new(code, e.render().to_string());
        }
    };
    match run(cli.command) {
        Ok(outcome) => outcome,
        Err(outcome) => outcome,
    }
}

type Run = std::result::Result<Outcome, Outcome>;

fn read(path: &Path) -> std::result::Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome::input(format!("{}: {e}", path.display())))
}

fn load_structure(path: &Path) -> std::result::Result<PoGammaSemigroup, Outcome> {
    parse_structure(&read(path)?).map_err(|d| Outcome::input(format!("{}: {d}", path.display())))
}

fn load_fuzzy(path: &Path) -> std::result::Result<FuzzySubset, Outcome> {
    FuzzyFile::parse(&read(path)?)
        .map(|f| f.to_subset())
        .map_err(|d| Outcome::input(format!("{}: {d}", path.display())))
}

fn input_err(e: Error) -> Outcome {
    Outcome::input(format!("error: {e}"))
}

fn run(command: Command) -> Run {
    match command {
        Command::Validate {
            structure,
            canonical,
        } => validate(&structure, canonical),
        Command::Auts { structure } => {
            let s = load_structure(&structure)?;
            let auts = s.automorphisms();
            let mut out = format!("automorphisms: {}\n", auts.len());
            for f in auts {
                writeln!(out, "{f}").unwrap();
            }
            Ok(Outcome::new(EXIT_PASS, out))
        }
        Command::Ideals {
            structure,
            interior,
            characteristic,
        } => {
            let s = load_structure(&structure)?;
            let ideals = enumerate_interior_ideals(&s);
            let mut out = String::new();
            if interior || !characteristic {
                writeln!(out, "interior ideals: {}", ideals.len()).unwrap();
                for a in &ideals {
                    writeln!(out, "{a}").unwrap();
                }
            }
            if characteristic {
                let chars: Vec<&CrispSubset> = ideals
                    .iter()
                    .filter(|a| {
                        is_characteristic_interior_ideal(&s, a)
                            .map(|v| v.passed())
                            .unwrap_or(false)
                    })
                    .collect();
                writeln!(out, "characteristic interior ideals: {}", chars.len()).unwrap();
                for a in chars {
                    writeln!(out, "{a}").unwrap();
                }
            }
            Ok(Outcome::new(EXIT_PASS, out))
        }
        Command::Cuts { fuzzy, levels } => {
            let mu = load_fuzzy(&fuzzy)?;
            let image = image_levels(&mu);
            let mut out = String::new();
            if levels {
                let joined: Vec<String> = image.iter().map(Grade::to_string).collect();
                writeln!(out, "levels: {}", joined.join(" ")).unwrap();
            } else {
                for t in image {
                    writeln!(out, "cut at {t}: {}", t_cut(&mu, t)).unwrap();
                }
            }
            Ok(Outcome::new(EXIT_PASS, out))
        }
        Command::Check {
            predicate,
            structure,
            subject,
        } => check(predicate, &structure, &subject),
        Command::Witness { structure, fuzzy } => {
            let s = load_structure(&structure)?;
            let file = FuzzyFile::parse(&read(&fuzzy)?)
                .map_err(|d| Outcome::input(format!("{}: {d}", fuzzy.display())))?;
            let mu = file.for_structure(&s).map_err(Outcome::input)?;
            Ok(match extract_midpoint_witness(&s, &mu) {
                Some(w) => Outcome::new(EXIT_FAIL, format!("mu = {mu}\nwitness: {w}\n")),
                None => Outcome::new(
                    EXIT_PASS,
                    format!(
                        "mu = {mu}\nno violation: subsemigroup and interior inequalities hold\n"
                    ),
                ),
            })
        }
        Command::Verify {
            target,
            max_n,
            max_m,
            grades,
            orders,
            seed,
            sample,
            workers,
            force,
        } => verify(VerifyArgs {
            target,
            max_n,
            max_m,
            grades,
            orders,
            seed,
            sample,
            workers,
            force,
        }),
    }
}

fn validate(path: &Path, canonical: bool) -> Run {
    let text = read(path)?;
    let file = StructureFile::parse(&text)
        .map_err(|d| Outcome::input(format!("{}: {d}", path.display())))?;
    match parse_structure(&text) {
        Ok(s) => {
            let mut out = format!(
                "valid: n = {}, m = {}, order pairs = {}\n",
                s.n(),
                s.m(),
                s.order().strict_pairs().count()
            );
            if canonical {
                out.push_str(&file.render());
            }
            Ok(Outcome::new(EXIT_PASS, out))
        }
        Err(d) if d.kind.is_validation_failure() => {
            Ok(Outcome::new(EXIT_FAIL, format!("invalid: {}\n", d)))
        }
        Err(d) => Err(Outcome::input(format!("{}: {d}", path.display()))),
    }
}

fn parse_subset(s: &PoGammaSemigroup, spec: &str) -> std::result::Result<CrispSubset, Outcome> {
    let spec = spec.trim().trim_start_matches('{').trim_end_matches('}');
    let mut ids = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        ids.push(
            part.parse::<usize>()
                .map_err(|_| Outcome::input(format!("error: bad element id {part:?}")))?,
        );
    }
    CrispSubset::from_elements(s.n(), ids).map_err(input_err)
}

fn verdict_report(header: String, verdict: Verdict) -> Outcome {
    match verdict {
        Verdict::Pass => Outcome::new(EXIT_PASS, format!("{header}result: PASS\n")),
        Verdict::Fail(w) => Outcome::new(
            EXIT_FAIL,
            format!(
                "{header}result: FAIL\nclause: {}\nwitness: {w}\n",
                w.clause()
            ),
        ),
    }
}

fn check(predicate: Predicate, structure: &Path, subject: &str) -> Run {
    let s = load_structure(structure)?;
    let name = predicate
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let (header, verdict) = match predicate {
        Predicate::Subsemigroup | Predicate::Interior | Predicate::Characteristic => {
            let a = parse_subset(&s, subject)?;
            let v = match predicate {
                Predicate::Subsemigroup => is_subsemigroup(&s, &a),
                Predicate::Interior => is_interior_ideal(&s, &a),
                _ => is_characteristic_interior_ideal(&s, &a),
            }
            .map_err(input_err)?;
            (format!("predicate: {name}\nsubject: A = {a}\n"), v)
        }
        _ => {
            let path = Path::new(subject);
            let file = FuzzyFile::parse(&read(path)?)
                .map_err(|d| Outcome::input(format!("{}: {d}", path.display())))?;
            let mu = file.for_structure(&s).map_err(Outcome::input)?;
            let v = match predicate {
                Predicate::FuzzySubsemigroup => is_fuzzy_subsemigroup(&s, &mu),
                Predicate::FuzzyInterior => is_fuzzy_interior_ideal(&s, &mu),
                _ => is_fuzzy_characteristic_interior_ideal(&s, &mu),
            }
            .map_err(input_err)?;
            (format!("predicate: {name}\nsubject: mu = {mu}\n"), v)
        }
    };
    Ok(verdict_report(header, verdict))
}

struct VerifyArgs {
    target: VerifyTarget,
    max_n: usize,
    max_m: usize,
    grades: String,
    orders: OrdersArg,
    seed: u64,
    sample: Option<usize>,
    workers: usize,
    force: bool,
}

fn verify(args: VerifyArgs) -> Run {
    let grade_set = args
        .grades
        .split(',')
        .map(|g| g.parse::<Grade>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(input_err)?;
    let grade_set = normalize_grade_set(&grade_set).map_err(input_err)?;
    let ceiling = if args.force {
        Ceiling::unbounded()
    } else {
        Ceiling::from_env().map_err(input_err)?
    };
    let config = GeneratorConfig {
        max_n: args.max_n,
        max_m: args.max_m,
        orders: match args.orders {
            OrdersArg::Discrete => OrderMode::DiscreteOnly,
            OrdersArg::All => OrderMode::AllCompatible,
        },
        grade_set: grade_set.clone(),
        seed: args.seed,
    };
    let corpus = config.corpus(&ceiling).map_err(input_err)?;
    let theorems = match args.target {
        VerifyTarget::Thm33 => vec![Theorem::LevelCriterion],
        VerifyTarget::Thm34 => vec![Theorem::CharFunction],
        VerifyTarget::Lemma1 => vec![Theorem::Lemma],
        VerifyTarget::All => vec![
            Theorem::LevelCriterion,
            Theorem::CharFunction,
            Theorem::Lemma,
        ],
    };
    let fuzzy = match args.sample {
        Some(per_structure) => FuzzySelection::Sampled {
            per_structure,
            seed: args.seed,
        },
        None => FuzzySelection::Exhaustive,
    };
    let sweep_config = SweepConfig {
        theorems: theorems.clone(),
        fuzzy,
        workers: args.workers,
        ceiling,
    };
    let summary = sweep_with(corpus, &grade_set, &sweep_config).map_err(input_err)?;

    let target = args
        .target
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let mut out = String::new();
    writeln!(out, "verify {target}").unwrap();
    writeln!(
        out,
        "corpus: n <= {}, m <= {}, orders {}",
        args.max_n,
        args.max_m,
        match args.orders {
            OrdersArg::Discrete => "discrete",
            OrdersArg::All => "all",
        }
    )
    .unwrap();
    let grades: Vec<String> = grade_set.iter().map(Grade::to_string).collect();
    writeln!(out, "grades: {}", grades.join(" ")).unwrap();
    if theorems.contains(&Theorem::LevelCriterion) {
        match fuzzy {
            FuzzySelection::Exhaustive => writeln!(out, "fuzzy subsets: exhaustive").unwrap(),
            FuzzySelection::Sampled {
                per_structure,
                seed,
            } => writeln!(
                out,
                "fuzzy subsets: {per_structure} sampled per structure, seed {seed}"
            )
            .unwrap(),
        }
    }
    writeln!(out, "structures: {}", summary.structures).unwrap();
    if theorems.contains(&Theorem::LevelCriterion) {
        writeln!(
            out,
            "{} checks: {}",
            Theorem::LevelCriterion,
            summary.level_checks
        )
        .unwrap();
        writeln!(out, "midpoint witnesses: {}", summary.midpoint_witnesses).unwrap();
    }
    if theorems.contains(&Theorem::CharFunction) {
        writeln!(
            out,
            "{} checks: {}",
            Theorem::CharFunction,
            summary.char_function_checks
        )
        .unwrap();
    }
    if theorems.contains(&Theorem::Lemma) {
        writeln!(out, "{} checks: {}", Theorem::Lemma, summary.lemma_checks).unwrap();
    }
    writeln!(out, "refutations: {}", summary.refutations.len()).unwrap();
    for r in &summary.refutations {
        let file = StructureFile::from_structure(&r.structure);
        writeln!(
            out,
            "refutation: {} on structure #{} (n = {}, m = {}, table {:?}, order {:?}), {}: forward = {}, backward = {}",
            r.theorem,
            r.structure_index,
            file.n,
            file.m,
            file.table,
            file.order_pairs,
            r.subject,
            r.report.forward,
            r.report.backward
        )
        .unwrap();
        if let Some(w) = &r.report.witness {
            writeln!(out, "  witness: {w}").unwrap();
        }
    }
    let consistent = summary.refutations.is_empty();
    writeln!(
        out,
        "result: {}",
        if consistent { "CONSISTENT" } else { "REFUTED" }
    )
    .unwrap();
    Ok(Outcome::new(
        if consistent { EXIT_PASS } else { EXIT_FAIL },
        out,
    ))
}
