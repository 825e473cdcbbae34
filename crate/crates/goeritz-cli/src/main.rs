//! Command-line front end: normalization, equality, orders, membership,
//! amalgam decompositions, isometry classification, primitivity of disk
//! boundary words, tree-ball export, and the verification suite.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use goeritz::{
    build_ball, verify, F2Word, GenWord, Isometry, NormalForm, SubgroupId, VerifyConfig,
};

#[derive(Parser)]
#[command(name = "goeritz", version, about = "Exact computation in the genus-2 Goeritz group of S2 x S1", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical normal form of a word (letters e a b g s, uppercase for inverses, t = gbs)
    Normalize { word: String },
    /// Decide whether two words represent the same element
    Equal { left: String, right: String },
    /// Print the order of an element: 1, 2, or infinite
    Order { word: String },
    /// Decide membership in a stabilizer subgroup
    Member {
        word: String,
        /// One of: stab-e, stab-pair-setwise, stab-pair-pointwise, stab-e-eprime
        subgroup: String,
    },
    /// Print the amalgam (Britton) decomposition over the splitting
    Amalgam { word: String },
    /// Classify the induced tree isometry: elliptic or hyperbolic
    Classify { word: String },
    /// Decide primitivity of a free-group word (letters x y, uppercase for inverses)
    Primitive { word: String },
    /// Classify a disk boundary word: reducing, primitive, or non-primitive
    DiskClass { word: String },
    /// Export a finite ball of the Bass-Serre tree as DOT
    Ball {
        #[arg(long, default_value_t = 4)]
        radius: usize,
        #[arg(long, default_value_t = 6)]
        branch_bound: usize,
        /// Write DOT here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite and report one line per check
    Verify {
        #[arg(long, default_value_t = 4)]
        radius: usize,
        #[arg(long, default_value_t = 6)]
        branch_bound: usize,
        #[arg(long, default_value_t = 6)]
        oracle_length: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Emit one JSON record per check instead of text lines
        #[arg(long)]
        json: bool,
    },
}

fn parse_element(word: &str) -> Result<NormalForm, goeritz::Error> {
    Ok(word.parse::<GenWord>()?.normal_form())
}

fn run() -> Result<ExitCode, goeritz::Error> {
    match Cli::parse().command {
        Command::Normalize { word } => {
            println!("{}", parse_element(&word)?);
        }
        Command::Equal { left, right } => {
            println!("{}", parse_element(&left)? == parse_element(&right)?);
        }
        Command::Order { word } => {
            println!("{}", parse_element(&word)?.order());
        }
        Command::Member { word, subgroup } => {
            let subgroup: SubgroupId = subgroup.parse()?;
            println!("{}", parse_element(&word)?.is_member(subgroup));
        }
        Command::Amalgam { word } => {
            let form = parse_element(&word)?.amalgam_form();
            println!("prefix: {}", form.prefix);
            println!("syllables: {}", form.syllable_count());
            for (i, s) in form.syllables.iter().enumerate() {
                let side = match s.side {
                    goeritz::Color::Black => "black",
                    goeritz::Color::White => "white",
                };
                println!("  {} {} {}", i + 1, side, s.element);
            }
        }
        Command::Classify { word } => match parse_element(&word)?.classify_isometry() {
            Isometry::Elliptic { fixed_vertex } => {
                let color = match fixed_vertex.color() {
                    goeritz::Color::Black => "black",
                    goeritz::Color::White => "white",
                };
                println!("elliptic fixed-vertex {} {}", color, fixed_vertex.rep());
            }
            Isometry::Hyperbolic { translation_length } => {
                println!("hyperbolic translation-length {translation_length}");
            }
        },
        Command::Primitive { word } => {
            println!("{}", word.parse::<F2Word>()?.is_primitive());
        }
        Command::DiskClass { word } => {
            println!("{}", word.parse::<F2Word>()?.disk_class());
        }
        Command::Ball {
            radius,
            branch_bound,
            out,
        } => {
            let dot = build_ball(radius, branch_bound)?.to_dot();
            match out {
                Some(path) => fs::write(path, dot).map_err(|e| {
                    goeritz::Error::ResourceCap(format!("cannot write output: {e}"))
                })?,
                None => print!("{dot}"),
            }
        }
        Command::Verify {
            radius,
            branch_bound,
            oracle_length,
            samples,
            json,
        } => {
            let config = VerifyConfig {
                radius,
                branch_bound,
                oracle_len: oracle_length,
                samples,
            };
            let report = verify::verify_all(&config)?;
            for check in &report.checks {
                if json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "check": check.name,
                            "passed": check.passed,
                            "detail": check.detail,
                        })
                    );
                } else {
                    let status = if check.passed { "PASS" } else { "FAIL" };
                    if check.detail.is_empty() {
                        println!("[{status}] {}", check.name);
                    } else {
                        println!("[{status}] {}: {}", check.name, check.detail);
                    }
                }
            }
            let (passed, total) = report.counts();
            if !json {
                println!("verification: {passed}/{total} checks passed");
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
