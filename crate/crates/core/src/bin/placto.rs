use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use placto::algebra::{
    free_schur, lr_expand, p_schur_poly, schur_poly, shifted_free_schur, PolyContext,
};
use placto::json::{
    class_json, coeff_value, cpoly_json, poly_json, shifted_tableau_json, tableau_json,
};
use placto::rewrite::RelationSet;
use placto::tableau::{mixed_insert_word, p_tableau, Partition, StrictPartition};
use placto::verify::{
    hook_representative, verify_axioms, verify_case_analysis, verify_section5, verify_tables,
    write_jsonl, AxiomSystem, Check, TableFamily,
};
use placto::word::Word;

#[derive(Parser)]
#[command(name = "placto")]
#[command(
    about = "Plactic and shifted plactic monoids: insertion, free Schur functions and axiom checks"
)]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Run a verification and print JSON lines ending in a summary
    Verify {
        check: VerifyCheck,

        /// Alphabet size
        #[arg(long)]
        n: Option<u8>,

        /// Degree bound
        #[arg(long)]
        degree: Option<usize>,

        /// knuth | shifted-knuth | custom:<file.json>
        #[arg(long)]
        relations: Option<String>,

        /// Axiom system for `axioms`: plac | splac
        #[arg(long)]
        system: Option<String>,

        /// Table family for `tables`
        #[arg(long)]
        family: Option<String>,

        /// Also write the report lines to this file
        #[arg(long)]
        json: Option<PathBuf>,
    },

    /// Insert a word and print the tableau with its canonical word
    Insert {
        #[arg(long, value_enum, default_value = "plactic")]
        mode: InsertMode,

        #[arg(long, default_value_t = 9)]
        n: u8,

        word: String,
    },

    /// Print the congruence class of a word
    Class {
        #[arg(long, default_value = "knuth")]
        relations: String,

        #[arg(long, default_value_t = 9)]
        n: u8,

        word: String,
    },

    /// Print a free Schur function and its commutative image
    Schur {
        /// Comma-separated parts, e.g. 2,1
        #[arg(long)]
        shape: String,

        #[arg(long)]
        shifted: bool,

        #[arg(long)]
        n: u8,
    },

    /// Expand S_nu * S_mu in the Schur basis
    Lr {
        #[arg(long)]
        nu: String,

        #[arg(long)]
        mu: String,

        #[arg(long)]
        n: u8,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyCheck {
    Tables,
    Cases,
    PlacCases,
    SplacCases,
    Axioms,
    Section5,
}

#[derive(Clone, Copy, ValueEnum)]
enum InsertMode {
    Plactic,
    Mixed,
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<placto::Error> for Failure {
    fn from(e: placto::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn relations_arg(spec: &str) -> Result<RelationSet, Failure> {
    match spec {
        "knuth" => Ok(RelationSet::knuth()),
        "shifted-knuth" => Ok(RelationSet::shifted_knuth()),
        _ => match spec.strip_prefix("custom:") {
            Some(path) => {
                let text =
                    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
                Ok(RelationSet::from_json(&text)?)
            }
            None => Err(Failure::Usage(format!("unknown relation set {spec:?}"))),
        },
    }
}

fn emit<C: Check>(
    check: &str,
    reports: &[C],
    extra: &[Value],
    json_out: Option<&PathBuf>,
) -> Result<bool, Failure> {
    let mut buf = Vec::new();
    let ok = write_jsonl(&mut buf, check, reports, extra)?;
    io::stdout().write_all(&buf)?;
    if let Some(path) = json_out {
        fs::write(path, &buf)?;
    }
    Ok(ok)
}

fn print(v: Value) -> Result<bool, Failure> {
    println!("{v}");
    Ok(true)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Commands::Verify {
            check,
            n,
            degree,
            relations,
            system,
            family,
            json,
        } => {
            let rels = relations.as_deref().map(relations_arg).transpose()?;
            let json = json.as_ref();
            match check {
                VerifyCheck::Tables => {
                    let family = family
                        .as_deref()
                        .map(str::parse::<TableFamily>)
                        .transpose()?;
                    emit("tables", &verify_tables(family)?, &[], json)
                }
                VerifyCheck::Cases | VerifyCheck::PlacCases | VerifyCheck::SplacCases => {
                    let rels = match check {
                        VerifyCheck::PlacCases => RelationSet::knuth(),
                        VerifyCheck::SplacCases => RelationSet::shifted_knuth(),
                        _ => rels.unwrap_or_else(RelationSet::shifted_knuth),
                    };
                    emit("cases", &verify_case_analysis(&rels)?, &[], json)
                }
                VerifyCheck::Axioms => {
                    let system = system.as_deref().unwrap_or("plac").parse::<AxiomSystem>()?;
                    let rels = rels.unwrap_or_else(|| system.default_relations());
                    let (reports, info) =
                        verify_axioms(system, &rels, n.unwrap_or(3), degree.unwrap_or(5))?;
                    let info: Vec<Value> = info.iter().map(|r| r.to_json()).collect();
                    emit("axioms", &reports, &info, json)
                }
                VerifyCheck::Section5 => emit(
                    "section5",
                    &verify_section5(n.unwrap_or(4), degree.unwrap_or(4))?,
                    &[],
                    json,
                ),
            }
        }
        Commands::Insert { mode, n, word } => {
            let w = Word::parse(&word, n)?;
            match mode {
                InsertMode::Plactic => {
                    let t = p_tableau(&w);
                    let canonical = t.reading_word(n)?;
                    print(
                        json!({ "word": w.to_string(), "tableau": tableau_json(&t), "canonical": canonical.to_string() }),
                    )
                }
                InsertMode::Mixed => {
                    let t = mixed_insert_word(&w);
                    let canonical = hook_representative(&w).map(|c| c.to_string());
                    print(
                        json!({ "word": w.to_string(), "tableau": shifted_tableau_json(&t), "canonical": canonical }),
                    )
                }
            }
        }
        Commands::Class { relations, n, word } => {
            let rels = relations_arg(&relations)?;
            let w = Word::parse(&word, n)?;
            print(class_json(&w, &rels, &rels.equiv_class(&w)))
        }
        Commands::Schur { shape, shifted, n } => {
            let (free, commutative, size) = if shifted {
                let nu: StrictPartition = shape.parse()?;
                let ctx = PolyContext::new(n, nu.size())?;
                (
                    shifted_free_schur(&nu, ctx)?,
                    p_schur_poly(&nu, n),
                    nu.size(),
                )
            } else {
                let nu: Partition = shape.parse()?;
                let ctx = PolyContext::new(n, nu.size())?;
                (free_schur(&nu, ctx)?, schur_poly(&nu, n), nu.size())
            };
            print(json!({
                "shape": shape,
                "shifted": shifted,
                "n": n,
                "degree": size,
                "free": poly_json(&free),
                "commutative": cpoly_json(&commutative),
            }))
        }
        Commands::Lr { nu, mu, n } => {
            let (nu, mu): (Partition, Partition) = (nu.parse()?, mu.parse()?);
            let expansion = lr_expand(&nu, &mu, n)?;
            let terms: Vec<Value> = expansion
                .iter()
                .rev()
                .map(|(s, c)| json!({ "shape": s.parts(), "coeff": coeff_value(c) }))
                .collect();
            print(json!({ "nu": nu.parts(), "mu": mu.parts(), "n": n, "terms": terms }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
