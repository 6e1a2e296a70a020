//! `upto`: stratified bisimilarity, the largest respectful function, and
//! up-to proof checking from the command line.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on parse or validation
//! errors.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use upto::companion::trusted_by_name;
use upto::gallery::{build_t, verify_gallery};
use upto::io::{
    parse_aut, parse_lattice, parse_relation_document, render_aut, render_dot, render_pairs,
};
use upto::lattice::{companion_table, z_chain, LatticeProgression};
use upto::suite::{run_suite, SuiteConfig};
use upto::{catalog, compute_strata, lrf_index, Conclusion, Direction, Lts, ProofReport};

#[derive(Parser)]
#[command(name = "upto", version, about = "Bisimulation up-to toolkit for finite LTSs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every stratum ∼_k and the convergence index.
    Strata {
        /// `.aut` file, or `-` for stdin
        lts: String,
    },
    /// Print bisimilarity ∼_ε.
    Bisim { lts: String },
    /// Print LRF(R) and the index of that stratum.
    Companion { lts: String, relation: String },
    /// Check that a relation progresses to F(R) for a trusted up-to function F.
    CheckUpto {
        lts: String,
        relation: String,
        /// Up-to function; `lrf` or any catalog name (see `upto functions`)
        #[arg(long = "fn", default_value = "lrf")]
        function: String,
    },
    /// List the trusted up-to function names.
    Functions,
    /// Emit the ordinal system T_n as `.aut`, or check its strata.
    Gallery {
        n: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Print the z-chain and companion table of a lattice progression.
    LatticeCompanion { lattice: String, progression: String },
    /// Run the seeded property suite and print a JSON summary.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Render the transition graph in Graphviz DOT.
    ExportDot { lts: String },
}

#[derive(Debug)]
enum CliError {
    Io(String, io::Error),
    Core(upto::Error),
    Usage(String),
}

impl From<upto::Error> for CliError {
    fn from(e: upto::Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io("<stdin>".into(), e))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(path.into(), e))
    }
}

fn load_lts(path: &str) -> Result<Lts, CliError> {
    Ok(parse_aut(&read_input(path)?)?)
}

fn render_report(lts: &Lts, r: &ProofReport) -> String {
    let mut out = String::new();
    writeln!(out, "relation: {}", r.relation_name).unwrap();
    writeln!(
        out,
        "function: {}{}",
        r.function_name,
        if r.trusted { "" } else { " (untrusted)" }
    )
    .unwrap();
    writeln!(out, "progression: {}", if r.progression_holds { "holds" } else { "fails" }).unwrap();
    for v in &r.diagnosis.violations {
        let side = match v.direction {
            Direction::Left => "left",
            Direction::Right => "right",
        };
        writeln!(
            out,
            "  ({},{}) {side}: {} -{}-> {} unmatched",
            lts.state_name(v.pair.0),
            lts.state_name(v.pair.1),
            lts.state_name(v.transition.source),
            lts.label(v.transition.label).as_str(),
            lts.state_name(v.transition.target),
        )
        .unwrap();
    }
    let conclusion = match r.conclusion {
        Conclusion::ContainedInBisimilarity => "contained_in_bisimilarity",
        Conclusion::Inconclusive => "inconclusive",
    };
    writeln!(out, "conclusion: {conclusion}").unwrap();
    writeln!(out, "cross_check: {}", r.cross_check).unwrap();
    out
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Strata { lts } => {
            let lts = load_lts(&lts)?;
            let seq = compute_strata(&lts);
            println!("epsilon: {}", seq.epsilon());
            for (k, s) in seq.strata().iter().enumerate() {
                println!("~{k}: {}", render_pairs(s, lts.state_names()));
            }
        }
        Command::Bisim { lts } => {
            let lts = load_lts(&lts)?;
            let seq = compute_strata(&lts);
            let b = upto::bisimilarity(&lts, &seq)?;
            println!("{}", render_pairs(&b, lts.state_names()));
        }
        Command::Companion { lts, relation } => {
            let lts = load_lts(&lts)?;
            let r = parse_relation_document(&read_input(&relation)?)?.resolve(lts.state_names())?;
            let seq = compute_strata(&lts);
            let m = lrf_index(&seq, &r)?;
            println!("stratum: {m}");
            println!("lrf: {}", render_pairs(seq.stratum(m), lts.state_names()));
        }
        Command::CheckUpto {
            lts,
            relation,
            function,
        } => {
            let lts = load_lts(&lts)?;
            let doc = parse_relation_document(&read_input(&relation)?)?;
            let r = doc.resolve(lts.state_names())?;
            let seq = Arc::new(compute_strata(&lts));
            let f = trusted_by_name(seq, &function).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown up-to function {function:?}; run `upto functions` for the list"
                ))
            })?;
            let name = doc.name.as_deref().unwrap_or(&relation);
            let report = upto::upto::check_upto_named(&lts, name, &r, &f)?;
            print!("{}", render_report(&lts, &report));
            if report.conclusion != Conclusion::ContainedInBisimilarity {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Functions => {
            println!("lrf");
            let seq = Arc::new(compute_strata(&build_t(0).lts));
            for f in catalog(seq) {
                println!("{}", f.name());
            }
        }
        Command::Gallery { n, verify: false } => print!("{}", render_aut(&build_t(n).lts)),
        Command::Gallery { n, verify: true } => {
            let v = verify_gallery(n);
            println!("T_{n}: epsilon = {}", v.epsilon);
            match v.first_discrepancy {
                None => println!("pass"),
                Some(d) => {
                    println!("fail: {d}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::LatticeCompanion {
            lattice,
            progression,
        } => {
            let l = parse_lattice(&read_input(&lattice)?)?;
            let rel = parse_relation_document(&read_input(&progression)?)?.resolve(l.names())?;
            let p = LatticeProgression::new(&l, rel)?;
            let chain = z_chain(&l, &p);
            println!("stable_index: {}", chain.stable_index);
            for (k, &z) in chain.zs.iter().enumerate() {
                println!("z{k}: {}", l.name(z));
            }
            println!("companion:");
            for (x, c) in companion_table(&l, &chain).into_iter().enumerate() {
                println!("  {} -> {}", l.name(x), l.name(c));
            }
        }
        Command::Verify { seed, samples } => {
            let report = run_suite(SuiteConfig { seed, samples })?;
            println!("{}", report.to_json());
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::ExportDot { lts } => print!("{}", render_dot(&load_lts(&lts)?)),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("upto: {e}");
            ExitCode::from(2)
        }
    }
}
