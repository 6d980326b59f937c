//! Command-line front end: every library operation behind stable JSON
//! output for batch exploration and golden tests.
//!
//! Exit codes: 0 success, 2 invalid input (malformed partition, bad prime,
//! size mismatch), 3 bounded-search failure in `chain`.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use spechtcalc::abacus::{self, Abacus};
use spechtcalc::jm;
use spechtcalc::labels::{self, SignedLabel};
use spechtcalc::partition::{partitions_of, Partition, PartitionPair};
use spechtcalc::specht;
use spechtcalc::tableaux;
use spechtcalc::{Error, OddPrime};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "spechtcalc",
    version = concat!(env!("CARGO_PKG_VERSION"), " (schema v1)"),
    about = "Partition/abacus combinatorics, signed Young labels, and simple Specht modules"
)]
struct Cli {
    /// Emit one JSON object per invocation instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    /// Reserved for randomized verification subroutines; the shipped
    /// subcommands are deterministic and ignore it.
    #[arg(long, global = true, default_value_t = 0, hide_short_help = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// p-core and p-weight of a partition.
    Core {
        #[arg(long)]
        p: u32,
        /// Override the canonical bead count.
        #[arg(long)]
        beads: Option<usize>,
        partition: String,
    },
    /// p-core, p-weight and p-quotient.
    Quotient {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        beads: Option<usize>,
        partition: String,
    },
    /// p-adic expansion λ = Σ p^i·λ(i).
    Padic {
        #[arg(long)]
        p: u32,
        partition: String,
    },
    /// Mullineux map on p-restricted (m) or p-regular (M) partitions.
    Mullineux {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum)]
        side: Side,
        partition: String,
    },
    /// JM test with the abacus witness.
    Jm {
        #[arg(long)]
        p: u32,
        partition: String,
    },
    /// Φ(λ) = ((λ'(0))' | λ' - λ'(0)).
    Phi {
        #[arg(long)]
        p: u32,
        partition: String,
    },
    /// Signed-Young label of a simple Specht module.
    Label {
        #[arg(long)]
        p: u32,
        partition: String,
    },
    /// Full invariant report for S^λ.
    Report {
        #[arg(long)]
        p: u32,
        partition: String,
    },
    /// Sign-twist of a signed label (λ|pμ); MU is the un-scaled μ.
    Twist {
        #[arg(long)]
        p: u32,
        lambda: String,
        #[arg(default_value = "[]")]
        mu: String,
    },
    /// Vertex composition Ρ(λ|pμ) and the normalizer shape.
    Rho {
        #[arg(long)]
        p: u32,
        lambda: String,
        #[arg(default_value = "[]")]
        mu: String,
    },
    /// Complexity of Y(λ|pμ).
    Complexity {
        #[arg(long)]
        p: u32,
        lambda: String,
        #[arg(default_value = "[]")]
        mu: String,
    },
    /// Projective / periodic / aperiodic classification.
    Classify {
        #[arg(long)]
        p: u32,
        lambda: String,
        #[arg(default_value = "[]")]
        mu: String,
    },
    /// Weight-1 labels, resolution period, and Heller table over a p-core.
    Resolution {
        #[arg(long)]
        p: u32,
        core: String,
    },
    /// Chain of adjacent JM-partitions into a Rouquier block.
    Chain {
        #[arg(long)]
        p: u32,
        partition: String,
    },
    /// Count (or list) semistandard tableaux of a signed type '(α|β)'.
    SsytCount {
        shape: String,
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        list: bool,
    },
    /// Littlewood-Richardson coefficient c^λ_{γ,ξ}.
    Lr {
        gamma: String,
        xi: String,
        lambda: String,
    },
    /// All JM-partitions of n.
    EnumerateJm {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Restricted,
    Regular,
}

enum CliError {
    Input(String),
    SearchBound(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ChainNotFoundWithinBound => CliError::SearchBound(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn parse_partition(text: &str) -> Result<Partition, CliError> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "[]" {
        return Ok(Partition::empty());
    }
    let parts: Vec<u32> = if trimmed.starts_with('[') {
        serde_json::from_str(trimmed)
            .map_err(|e| CliError::Input(format!("malformed partition {trimmed:?}: {e}")))?
    } else {
        trimmed
            .split(',')
            .map(|tok| tok.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|e| CliError::Input(format!("malformed partition {trimmed:?}: {e}")))?
    };
    Partition::new(parts).map_err(|e| CliError::Input(e.to_string()))
}

/// Accepts '(α|β)', '[..]|[..]' or 'a,b|c,d'.
fn parse_type_pair(text: &str) -> Result<PartitionPair, CliError> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|rest| rest.strip_suffix(')'))
        .unwrap_or(trimmed);
    let (a, b) = inner
        .split_once('|')
        .ok_or_else(|| CliError::Input(format!("type {text:?} must look like '(α|β)'")))?;
    Ok(PartitionPair::new(parse_partition(a)?, parse_partition(b)?))
}

fn parse_prime(p: u32) -> Result<OddPrime, CliError> {
    OddPrime::new(p).map_err(CliError::from)
}

fn parse_label(lambda: &str, mu: &str, p: u32) -> Result<SignedLabel, CliError> {
    Ok(SignedLabel::new(
        parse_partition(lambda)?,
        parse_partition(mu)?,
        parse_prime(p)?,
    ))
}

fn display_for(lambda: &Partition, p: OddPrime, beads: Option<usize>) -> Result<Abacus, CliError> {
    match beads {
        Some(s) => Abacus::from_partition(lambda, p, s).map_err(CliError::from),
        None => Ok(Abacus::canonical(lambda, p)),
    }
}

fn label_json(label: &SignedLabel) -> serde_json::Value {
    json!({
        "lambda": label.lambda(),
        "mu": label.mu(),
        "mu_times_p": label.scaled_mu(),
        "p": label.prime().get(),
    })
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Core {
            p,
            beads,
            partition,
        } => {
            let p = parse_prime(*p)?;
            let lambda = parse_partition(partition)?;
            let display = display_for(&lambda, p, *beads)?;
            let core = display.pushed_up().to_partition();
            let weight = display.push_up_moves();
            if cli.json {
                println!("{}", json!({"core": core, "weight": weight}));
            } else {
                println!("core: {core}");
                println!("weight: {weight}");
            }
        }
        Command::Quotient {
            p,
            beads,
            partition,
        } => {
            let p = parse_prime(*p)?;
            let lambda = parse_partition(partition)?;
            let display = display_for(&lambda, p, *beads)?;
            let core = display.pushed_up().to_partition();
            let weight = display.push_up_moves();
            let quotient = display.quotient();
            if cli.json {
                println!(
                    "{}",
                    json!({"core": core, "weight": weight, "quotient": quotient})
                );
            } else {
                println!("core: {core}");
                println!("weight: {weight}");
                let rendered: Vec<String> = quotient.iter().map(|q| q.to_string()).collect();
                println!("quotient: ({})", rendered.join(", "));
            }
        }
        Command::Padic { p, partition } => {
            let p = parse_prime(*p)?;
            let lambda = parse_partition(partition)?;
            let expansion = spechtcalc::padic::expand(&lambda, p);
            if cli.json {
                println!("{}", json!({"parts": expansion.components()}));
            } else {
                for (i, part) in expansion.components().iter().enumerate() {
                    println!("lambda({i}) = {part}");
                }
            }
        }
        Command::Mullineux { p, side, partition } => {
            let p = parse_prime(*p)?;
            let lambda = parse_partition(partition)?;
            let image = match side {
                Side::Restricted => spechtcalc::mullineux::mullineux_restricted(&lambda, p)?,
                Side::Regular => spechtcalc::mullineux::mullineux_regular(&lambda, p)?,
            };
            if cli.json {
                println!("{}", json!({"image": image}));
            } else {
                println!("image: {image}");
            }
        }
        Command::Jm { p, partition } => {
            let p = parse_prime(*p)?;
            let lambda = parse_partition(partition)?;
            let witness = jm::is_jm_abacus(&lambda, p);
            if cli.json {
                println!("{}", serde_json::to_string(&witness).expect("serializable"));
            } else if witness.is_jm {
                println!(
                    "JM: yes (i={}, j={}, quotient_i={}, quotient_j={}, beads={})",
                    witness.i.unwrap(),
                    witness.j.unwrap(),
                    witness.quotient_i,
                    witness.quotient_j,
                    witness.beads
                );
            } else {
                println!("JM: no");
            }
        }
        Command::Phi { p, partition } => {
            let p = parse_prime(*p)?;
            let lambda = parse_partition(partition)?;
            let pair = jm::phi(&lambda, p);
            let mu = pair.right.divide(p.get()).expect("pβ is divisible by p");
            if cli.json {
                println!(
                    "{}",
                    json!({"left": pair.left, "right_times_p": pair.right, "mu": mu})
                );
            } else {
                println!("phi: ({}|{})", pair.left, pair.right);
            }
        }
        Command::Label { p, partition } => {
            let p = parse_prime(*p)?;
            let lambda = parse_partition(partition)?;
            let label = specht::signed_label(&lambda, p)?;
            if cli.json {
                println!("{}", label_json(&label));
            } else {
                println!("label: {label}");
            }
        }
        Command::Report { p, partition } => {
            let p = parse_prime(*p)?;
            let lambda = parse_partition(partition)?;
            let report = specht::report(&lambda, p);
            if cli.json {
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                println!("simple: {}", report.simple);
                println!("regularization: {}", report.regularization);
                println!(
                    "block: core {} weight {}",
                    report.block.core, report.block.weight
                );
                if let Some(label) = &report.label {
                    println!("label: {label}");
                }
                if let Some(vertex) = &report.vertex {
                    println!("rho: {:?}", vertex.rho.parts());
                    println!("normalizer: {}", vertex.normalizer_display());
                }
                if let Some(cx) = report.complexity {
                    println!("complexity: {cx}");
                }
                if let Some(class) = report.classification {
                    println!("class: {class}");
                }
                if let Some(period) = report.period {
                    println!("period: {period}");
                }
            }
        }
        Command::Twist { p, lambda, mu } => {
            let label = parse_label(lambda, mu, *p)?;
            let twisted = labels::twist(&label);
            if cli.json {
                println!("{}", label_json(&twisted));
            } else {
                println!("twist: {twisted}");
            }
        }
        Command::Rho { p, lambda, mu } => {
            let label = parse_label(lambda, mu, *p)?;
            let vertex = labels::rho(&label);
            if cli.json {
                println!("{}", serde_json::to_string(&vertex).expect("serializable"));
            } else {
                println!("rho: {:?}", vertex.rho.parts());
                println!("normalizer: {}", vertex.normalizer_display());
            }
        }
        Command::Complexity { p, lambda, mu } => {
            let label = parse_label(lambda, mu, *p)?;
            let complexity = labels::complexity(&label);
            if cli.json {
                println!("{}", json!({"complexity": complexity}));
            } else {
                println!("complexity: {complexity}");
            }
        }
        Command::Classify { p, lambda, mu } => {
            let label = parse_label(lambda, mu, *p)?;
            let class = labels::classify(&label);
            let period = labels::period(&label);
            if cli.json {
                println!("{}", json!({"class": class, "period": period}));
            } else {
                match period {
                    Some(d) => println!("class: {class} (period {d})"),
                    None => println!("class: {class}"),
                }
            }
        }
        Command::Resolution { p, core } => {
            let p = parse_prime(*p)?;
            let core = parse_partition(core)?;
            let descriptor = labels::weight1_resolution(&core, p)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string(&descriptor).expect("serializable")
                );
            } else {
                let rendered: Vec<String> =
                    descriptor.labels.iter().map(|l| l.to_string()).collect();
                println!("labels: {}", rendered.join(" > "));
                let rendered: Vec<String> = descriptor
                    .resolution
                    .iter()
                    .map(|l| l.to_string())
                    .collect();
                println!("resolution period: {}", rendered.join(" <- "));
                for (i, entry) in &descriptor.heller {
                    match entry {
                        labels::HellerEntry::Simple(l) => println!("Omega^{i}: D_{l}"),
                        labels::HellerEntry::Layered { top, bottom } => {
                            println!("Omega^{i}: [D_{top} / D_{bottom}]")
                        }
                        labels::HellerEntry::SelfModule => println!("Omega^{i}: self"),
                    }
                }
            }
        }
        Command::Chain { p, partition } => {
            let p = parse_prime(*p)?;
            let lambda = parse_partition(partition)?;
            let chain = jm::rouquier_chain(&lambda, p)?;
            let terminal = chain.last().map_or(lambda.clone(), |s| s.target.clone());
            let core = abacus::p_core(&terminal, p);
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "steps": chain,
                        "final": terminal,
                        "final_core": core,
                        "rouquier": true,
                    })
                );
            } else {
                for step in &chain {
                    println!(
                        "{} -> {} (runner {}, +{} nodes of residue {}, beads {})",
                        step.source, step.target, step.runner, step.added, step.residue, step.beads
                    );
                }
                println!("terminal: {terminal} in Rouquier block of core {core}");
            }
        }
        Command::SsytCount { shape, kind, list } => {
            let shape = parse_partition(shape)?;
            let kind = parse_type_pair(kind)?;
            let found = tableaux::enumerate_signed(&shape, &kind)?;
            if cli.json {
                if *list {
                    let rendered: Vec<serde_json::Value> = found
                        .iter()
                        .map(|t| {
                            let cells: Vec<serde_json::Value> = t
                                .node_entries()
                                .into_iter()
                                .map(|((i, j), e)| json!({"node": [i, j], "entry": e}))
                                .collect();
                            json!(cells)
                        })
                        .collect();
                    println!("{}", json!({"count": found.len(), "tableaux": rendered}));
                } else {
                    println!("{}", json!({"count": found.len()}));
                }
            } else {
                println!("count: {}", found.len());
                if *list {
                    for (idx, t) in found.iter().enumerate() {
                        println!("--- {}", idx + 1);
                        println!("{t}");
                    }
                }
            }
        }
        Command::Lr { gamma, xi, lambda } => {
            let gamma = parse_partition(gamma)?;
            let xi = parse_partition(xi)?;
            let lambda = parse_partition(lambda)?;
            let coefficient = tableaux::lr_coefficient(&gamma, &xi, &lambda);
            if cli.json {
                println!("{}", json!({"coefficient": coefficient}));
            } else {
                println!("coefficient: {coefficient}");
            }
        }
        Command::EnumerateJm { n, p } => {
            let p = parse_prime(*p)?;
            let all: Vec<Partition> = partitions_of(*n)
                .map_err(CliError::from)?
                .into_iter()
                .filter(|l| jm::is_jm_hook(l, p))
                .collect();
            if cli.json {
                println!("{}", json!({"n": n, "p": p.get(), "jm": all}));
            } else {
                for l in &all {
                    println!("{l}");
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::SearchBound(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
    }
}
