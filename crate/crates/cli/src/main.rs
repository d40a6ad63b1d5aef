//! `dmposet`: property checks, completions and residuation reports for
//! finite posets with an antitone involution.
//!
//! Exit status is 0 when every requested check passes, 1 when a check (or
//! its precondition) fails, 2 on usage errors and 3 when an input document
//! cannot be parsed.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand};

use dmposet::checks;
use dmposet::closure::{check_join_meet_density, complete_with_cap};
use dmposet::constructors::generate::{random, Constraint, RANDOM_CAP};
use dmposet::constructors::hsum::{completion_isomorphism, horizontal_sum};
use dmposet::corpus;
use dmposet::dot::{export_completion_dot, export_dot};
use dmposet::format::{self, PosetDocument};
use dmposet::residuation::{
    bdm_transform, operator_pair, verify_left_residuated_lattice, verify_operator_left_residuation,
};
use dmposet::suite::{check_expectations, corpus_report, not_applicable, Evaluator, PROPERTIES};
use dmposet::{CheckReport, Error, FinitePoset, OperatorKind, RunReport, DEFAULT_MAX_CLOSED_SETS};

#[derive(Parser)]
#[command(
    name = "dmposet",
    version,
    about = "Verify properties of finite posets with an antitone involution"
)]
struct Cli {
    /// Abort a completion once it has this many closed sets.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CLOSED_SETS)]
    max_closed_sets: usize,

    /// Seed for generated populations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Also write the JSON report here (for commands whose primary output is
    /// a document or a graph).
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    /// Leave phase timings out of the report.
    #[arg(long, global = true)]
    no_timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run named property checks, or every check against the document's
    /// recorded expectations.
    Check {
        /// Bundled corpus name or path to a poset/Greechie document.
        input: String,
        #[command(flatten)]
        selection: Selection,
    },
    /// Write the completion as a poset document.
    Complete { input: String },
    /// Verify an operator pair on the poset and, optionally, the lattice
    /// laws of its transform on the completion.
    Residuate {
        input: String,
        #[arg(long, value_parser = PossibleValuesParser::new(["boolean", "relpseudo", "pseudo_om"]))]
        kind: String,
        #[arg(long)]
        on_completion: bool,
    },
    /// Validate a Greechie diagram and paste its blocks.
    Greechie {
        input: String,
        /// Write the pasted orthomodular poset to this file.
        #[arg(long)]
        omp: Option<PathBuf>,
    },
    /// Horizontal sum of two or more posets.
    Hsum {
        #[arg(required = true, num_args = 2..)]
        inputs: Vec<String>,
    },
    /// Run every bundled document against its expectations plus the figure
    /// claims.
    Corpus {
        /// Print the bundled names and exit.
        #[arg(long)]
        list: bool,
        /// Also cross-check this many random complemented posets.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
    /// Hasse diagram in DOT.
    Export {
        input: String,
        /// Export the completion instead of the poset.
        #[arg(long)]
        completion: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Selection {
    #[arg(long, value_parser = PossibleValuesParser::new(PROPERTIES))]
    property: Vec<String>,
    #[arg(long)]
    all: bool,
}

/// Failures that end the run before a report exists.
enum Fatal {
    Usage(String),
    Parse(String),
    Io(String),
}

impl Fatal {
    fn code(&self) -> u8 {
        match self {
            Fatal::Usage(_) | Fatal::Io(_) => 2,
            Fatal::Parse(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Fatal::Usage(m) | Fatal::Parse(m) | Fatal::Io(m) => m,
        }
    }
}

struct Input {
    label: String,
    text: String,
}

impl Input {
    fn load(source: &str) -> Result<Input, Fatal> {
        let path = Path::new(source);
        if path.is_file() {
            let text = fs::read_to_string(path).map_err(|e| Fatal::Io(format!("{source}: {e}")))?;
            return Ok(Input {
                label: source.to_string(),
                text,
            });
        }
        match corpus::text(source) {
            Some(text) => Ok(Input {
                label: source.to_string(),
                text: text.to_string(),
            }),
            None => Err(Fatal::Usage(format!(
                "`{source}` is neither a file nor a bundled name"
            ))),
        }
    }

    fn digest(&self) -> String {
        format::digest(&self.text)
    }

    fn is_greechie(&self) -> bool {
        format::is_greechie_text(&self.text)
    }

    /// The poset with the document's recorded expectations.
    fn poset(&self) -> Result<(FinitePoset, Vec<(String, bool)>), Fatal> {
        let parse = |e: Error| Fatal::Parse(format!("{}: {e}", self.label));
        if self.is_greechie() {
            let doc = format::parse_greechie_document(&self.text).map_err(parse)?;
            Ok((doc.diagram.to_omp().map_err(parse)?, doc.expect))
        } else {
            let doc = format::parse_poset_document(&self.text).map_err(parse)?;
            Ok((doc.to_poset().map_err(parse)?, doc.expect))
        }
    }
}

struct Timer {
    enabled: bool,
    phases: Vec<(String, f64)>,
    last: Instant,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Timer {
            enabled,
            phases: Vec::new(),
            last: Instant::now(),
        }
    }

    fn lap(&mut self, phase: &str) {
        let now = Instant::now();
        self.phases
            .push((phase.to_string(), (now - self.last).as_secs_f64() * 1e3));
        self.last = now;
    }

    fn attach(self, run: &mut RunReport) {
        if self.enabled {
            run.timings_ms = Some(self.phases);
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Fatal> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Fatal::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report_text(run: &RunReport) -> String {
    let mut s = run.to_json();
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<bool, Fatal> {
    let cap = cli.max_closed_sets;
    let mut timer = Timer::new(!cli.no_timings);
    let out = cli.out.as_deref();
    // (report, artifact) where the artifact, if any, is the primary output
    let (mut run, artifact): (RunReport, Option<String>) = match &cli.command {
        Command::Check { input, selection } => {
            let input = Input::load(input)?;
            let (p, expect) = input.poset()?;
            timer.lap("parse");
            let mut run = RunReport::new("check", input.digest());
            let ev = Evaluator::new(&p, cap);
            if selection.all {
                check_expectations(&mut run, &ev, &expect, true, "");
            } else {
                for name in &selection.property {
                    run.push(
                        ev.evaluate(name)
                            .unwrap_or_else(|e| not_applicable(name, &e)),
                        None,
                    );
                }
            }
            timer.lap("checks");
            (run, None)
        }
        Command::Complete { input } => {
            let input = Input::load(input)?;
            let (p, _) = input.poset()?;
            timer.lap("parse");
            let mut run = RunReport::new("complete", input.digest());
            let artifact = match complete_with_cap(&p, cap) {
                Ok(d) => {
                    timer.lap("completion");
                    let lat = d.to_poset();
                    run.push(check_join_meet_density(&p, &d), None);
                    run.push(lat.is_lattice(), None);
                    if p.involution().is_some() {
                        run.push(
                            lat.is_antitone_involution()
                                .unwrap_or_else(|e| not_applicable("antitone-involution", &e)),
                            None,
                        );
                    }
                    let mut doc = PosetDocument::from_poset(&lat);
                    doc.title = Some(format!("completion of {}", input.label));
                    eprintln!(
                        "completion of {}: {} closed sets from {} elements",
                        input.label,
                        d.len(),
                        p.len()
                    );
                    Some(format::serialize_document(&doc))
                }
                Err(e) => {
                    run.push(not_applicable("completion", &e), None);
                    None
                }
            };
            (run, artifact)
        }
        Command::Residuate {
            input,
            kind,
            on_completion,
        } => {
            let kind: OperatorKind = kind
                .parse()
                .map_err(|_| Fatal::Usage(format!("unknown kind `{kind}`")))?;
            let input = Input::load(input)?;
            let (p, _) = input.poset()?;
            timer.lap("parse");
            let mut run = RunReport::new("residuate", input.digest());
            let name = format!("operator-residuation[{kind}]");
            run.push(
                operator_pair(&p, kind)
                    .and_then(|pair| verify_operator_left_residuation(&p, &pair))
                    .unwrap_or_else(|e| not_applicable(&name, &e)),
                None,
            );
            timer.lap("poset-axioms");
            if *on_completion {
                let name = format!("completion-residuation[{kind}]");
                let verdict = complete_with_cap(&p, cap).and_then(|d| {
                    let ops = bdm_transform(&d, kind)?;
                    verify_left_residuated_lattice(&d.to_poset(), &ops)
                });
                match verdict {
                    Ok(r) => {
                        let summary = r.summary();
                        let mut head = r.left_residuated.clone();
                        head.property = name;
                        head.details = if head.details.is_empty() {
                            summary.to_string()
                        } else {
                            format!("{summary}: {}", head.details)
                        };
                        run.push(head, None);
                        run.push_info(r.commutative);
                        run.push_info(r.associative);
                    }
                    Err(e) => run.push(not_applicable(&name, &e), None),
                }
                timer.lap("completion-laws");
            }
            (run, None)
        }
        Command::Greechie { input, omp } => {
            let input = Input::load(input)?;
            if !input.is_greechie() {
                return Err(Fatal::Usage(format!(
                    "{} is not a Greechie document",
                    input.label
                )));
            }
            let doc = format::parse_greechie_document(&input.text)
                .map_err(|e| Fatal::Parse(format!("{}: {e}", input.label)))?;
            timer.lap("parse");
            let mut run = RunReport::new("greechie", input.digest());
            match doc.diagram.validate() {
                Ok(v) => {
                    let valid = v.report.holds;
                    run.push(v.report, None);
                    if valid {
                        match doc.diagram.to_omp() {
                            Ok(p) => {
                                run.push(
                                    checks::is_orthomodular_poset(&p).unwrap_or_else(|e| {
                                        not_applicable("orthomodular-poset", &e)
                                    }),
                                    None,
                                );
                                run.push_info(
                                    CheckReport::pass("pasted")
                                        .with_details(format!("{} elements", p.len())),
                                );
                                if let Some(path) = omp {
                                    write_output(Some(path), &format::serialize_poset(&p))?;
                                }
                            }
                            Err(e) => run.push(not_applicable("pasted", &e), None),
                        }
                    }
                }
                Err(e) => run.push(not_applicable("greechie-diagram", &e), None),
            }
            timer.lap("validate");
            (run, None)
        }
        Command::Hsum { inputs } => {
            let mut parts = Vec::new();
            let mut digests = String::new();
            for source in inputs {
                let input = Input::load(source)?;
                digests.push_str(&input.digest());
                parts.push(input.poset()?.0);
            }
            timer.lap("parse");
            let mut run = RunReport::new("hsum", format::digest(&digests));
            let artifact = match horizontal_sum(&parts) {
                Ok(sum) => {
                    run.push(
                        completion_isomorphism(&parts, cap)
                            .map(|iso| {
                                CheckReport::pass("completion-of-sum")
                                    .with_details(format!("{} closed sets", iso.map.len()))
                            })
                            .unwrap_or_else(|e| not_applicable("completion-of-sum", &e)),
                        None,
                    );
                    eprintln!(
                        "horizontal sum of {} parts: {} elements",
                        parts.len(),
                        sum.len()
                    );
                    Some(format::serialize_poset(&sum))
                }
                Err(e) => {
                    run.push(not_applicable("horizontal-sum", &e), None);
                    None
                }
            };
            timer.lap("sum");
            (run, artifact)
        }
        Command::Corpus {
            list,
            random: count,
        } => {
            if *list {
                let names: Vec<&str> = corpus::names().collect();
                write_output(out, &format!("{}\n", names.join("\n")))?;
                return Ok(true);
            }
            let mut run = corpus_report(cap);
            timer.lap("corpus");
            if *count > 0 {
                cross_check_random(&mut run, cli.seed, *count, cap);
                timer.lap("random");
            }
            (run, None)
        }
        Command::Export { input, completion } => {
            let input = Input::load(input)?;
            let (p, _) = input.poset()?;
            let mut run = RunReport::new("export", input.digest());
            let artifact = if *completion {
                match complete_with_cap(&p, cap) {
                    Ok(d) => Some(export_completion_dot(&d)),
                    Err(e) => {
                        run.push(not_applicable("completion", &e), None);
                        None
                    }
                }
            } else {
                Some(export_dot(&p))
            };
            timer.lap("export");
            (run, artifact)
        }
    };
    timer.attach(&mut run);
    match artifact {
        Some(text) => {
            write_output(out, &text)?;
            if let Some(path) = &cli.report {
                write_output(Some(path), &report_text(&run))?;
            }
        }
        // commands without an artifact, or whose artifact failed, emit the report
        None => write_output(out, &report_text(&run))?,
    }
    Ok(run.passed)
}

/// Both completion criteria against a direct orthomodularity check of the
/// completion, over seeded random complemented posets.
fn cross_check_random(run: &mut RunReport, seed: u64, count: usize, cap: usize) {
    let population = match random(seed, count, 4, RANDOM_CAP.min(10), Constraint::Complemented) {
        Ok(v) => v,
        Err(e) => return run.push(not_applicable("random", &e), None),
    };
    let mut disagreements = Vec::new();
    for (i, p) in population.iter().enumerate() {
        let verdict = complete_with_cap(p, cap).and_then(|d| {
            let oml = checks::completion_is_orthomodular(&d)?.holds;
            let sdc = checks::strongly_d_continuous_on(p, &d)?.holds
                && checks::is_pseudo_orthomodular(p)?.holds;
            let finch = checks::finch_criterion_on(p, &d)?.holds;
            Ok((oml, sdc, finch))
        });
        match verdict {
            Ok((oml, sdc, finch)) if oml == sdc && oml == finch => {}
            Ok(_) => disagreements.push(format!("#{i}")),
            Err(e) => disagreements.push(format!("#{i} ({e})")),
        }
    }
    let name = format!("random[seed={seed},count={count}]/completion-criteria");
    run.push(
        if disagreements.is_empty() {
            CheckReport::pass(name).with_details(format!("{} posets agree", population.len()))
        } else {
            CheckReport::fail(name, disagreements, "criteria disagree with the completion")
        },
        None,
    );
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("dmposet: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
