use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fockdec::abacus::{e_core, e_quotient, e_weight, relative_e_sign};
use fockdec::blocks::{adjustment_matrix, canonical_beads, core_and_weight, BlockDescriptor, Provenance};
use fockdec::fock::v_decomposition;
use fockdec::jantzen::FieldSpec;
use fockdec::notation::{parse_block_label, RunnerNotation};
use fockdec::orders::{jantzen_leq, product_leq};
use fockdec::Partition;
use fockdec_cli::cache::Cache;
use fockdec_cli::report::SCHEMA_VERSION;
use fockdec_cli::verify::{all_targets, run_targets, VerifyOptions, TARGETS};
use fockdec_cli::{CliError, CliResult};
use serde_json::json;

#[derive(Parser)]
#[command(name = "fockdec", version, about = "Decomposition numbers of Hecke and q-Schur algebras")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// A partition given directly, in runner notation, or as entries against a block.
#[derive(Args, Clone)]
struct Input {
    #[arg(short = 'e', long = "e")]
    e: Option<usize>,
    /// Partition, e.g. `10,6,5,2,1,1` (repeat for pairs).
    #[arg(short = 'p', long = "partition")]
    partitions: Vec<String>,
    /// Runner notation `<entries|counts>`, or just `<entries>` with --block (repeat for pairs).
    #[arg(long)]
    notation: Vec<String>,
    /// Block label `<b_0,…,b_{e-1}>`; supplies the bead counts for --notation.
    #[arg(long)]
    block: Option<String>,
    /// Bead count of the abacus display.
    #[arg(long)]
    beads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// The e-core.
    Core(Input),
    /// The e-weight.
    Weight(Input),
    /// The relative e-sign σ_e.
    Sign(Input),
    /// The e-quotient in runner notation.
    Quot(Input),
    /// The v-decomposition number d_{λμ}(v) of two partitions.
    Dvm(Input),
    /// Dominance, product and Jantzen order between two partitions.
    Order(Input),
    /// The adjustment matrix of a block with provenance flags.
    Adjust {
        /// Block label `<b_0,…,b_{e-1}>`.
        #[arg(long)]
        block: String,
        #[arg(short = 'w', long)]
        weight: usize,
        /// Characteristic: 0 or a prime.
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    /// Recompute a table or run a property suite.
    Verify {
        /// all, or one of the targets listed by `verify --list`.
        target: Option<String>,
        #[arg(short = 'e', long = "e")]
        e: Option<usize>,
        /// Reduced ranges for a quick run.
        #[arg(long)]
        small: bool,
        /// Skip blocks of S_n with n above this.
        #[arg(long)]
        max_n: Option<usize>,
        /// Directory for cached LLT columns.
        #[arg(long)]
        cache: Option<String>,
        /// Show matching rows too.
        #[arg(short, long)]
        verbose: bool,
        /// List the targets.
        #[arg(long)]
        list: bool,
    },
}

/// A failed check, as opposed to bad input.
struct Mismatch;

enum Failure {
    Mismatch,
    Error(CliError),
}

impl From<CliError> for Failure {
    fn from(err: CliError) -> Self {
        Failure::Error(err)
    }
}

impl From<fockdec::Error> for Failure {
    fn from(err: fockdec::Error) -> Self {
        Failure::Error(err.into())
    }
}

impl From<Mismatch> for Failure {
    fn from(_: Mismatch) -> Self {
        Failure::Mismatch
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl Input {
    /// The partitions given, with the e they are read at.
    fn read(&self) -> CliResult<(Vec<Partition>, usize)> {
        let counts = self.block.as_deref().map(parse_block_label).transpose()?;
        let mut e = self.e.or(counts.as_ref().map(Vec::len));
        let mut out = Vec::new();
        for text in &self.partitions {
            out.push(text.parse::<Partition>()?);
        }
        for text in &self.notation {
            let notation = match (&counts, text.contains('|')) {
                (_, true) => text.parse::<RunnerNotation>()?,
                (Some(c), false) => RunnerNotation::with_counts(text, c)?,
                (None, false) => return Err(usage(format!("{text} needs bead counts: use <entries|counts> or --block"))),
            };
            match e {
                Some(e) if e != notation.e() => return Err(usage(format!("{text} has {} runners but e = {e}", notation.e()))),
                _ => e = Some(notation.e()),
            }
            out.push(notation.to_partition()?);
        }
        let e = e.ok_or_else(|| usage("give -e, --block, or a notation with bead counts"))?;
        Ok((out, e))
    }

    fn one(&self) -> CliResult<(Partition, usize)> {
        let (parts, e) = self.read()?;
        match parts.as_slice() {
            [p] => Ok((p.clone(), e)),
            _ => Err(usage(format!("expected one partition, got {}", parts.len()))),
        }
    }

    fn two(&self) -> CliResult<(Partition, Partition, usize)> {
        let (parts, e) = self.read()?;
        match parts.as_slice() {
            [a, b] => Ok((a.clone(), b.clone(), e)),
            _ => Err(usage(format!("expected two partitions, got {}", parts.len()))),
        }
    }
}

fn emit(json_mode: bool, command: &str, value: serde_json::Value, text: String) {
    if json_mode {
        println!("{}", json!({ "version": SCHEMA_VERSION, "command": command, "value": value }));
    } else {
        println!("{text}");
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json_mode = cli.json;
    match cli.command {
        Command::Core(input) => {
            let (p, e) = input.one()?;
            let core = e_core(&p, e)?;
            emit(json_mode, "core", json!(core.to_string()), core.to_string());
        }
        Command::Weight(input) => {
            let (p, e) = input.one()?;
            let w = e_weight(&p, e)?;
            emit(json_mode, "weight", json!(w), w.to_string());
        }
        Command::Sign(input) => {
            let (p, e) = input.one()?;
            let s = relative_e_sign(&p, e)?;
            emit(json_mode, "sign", json!(s), s.to_string());
        }
        Command::Quot(input) => {
            let (p, e) = input.one()?;
            let r = match input.beads {
                Some(r) => r,
                None => {
                    let (core, w) = core_and_weight(&p, e)?;
                    canonical_beads(&core, e, w)
                }
            };
            let q = e_quotient(&p, e, r)?;
            emit(json_mode, "quot", json!(q.to_string()), q.to_string());
        }
        Command::Dvm(input) => {
            let (lambda, mu, e) = input.two()?;
            let d = v_decomposition(&lambda, &mu, e)?;
            emit(json_mode, "dvm", json!(d.to_string()), d.to_string());
        }
        Command::Order(input) => {
            let (lambda, mu, e) = input.two()?;
            let dom = mu.dominates(&lambda)?;
            let prod = product_leq(&lambda, &mu, e)?;
            let jan = jantzen_leq(&lambda, &mu, e)?;
            emit(
                json_mode,
                "order",
                json!({ "dominance": dom, "product": prod, "jantzen": jan }),
                format!("dominance: {dom}\nproduct: {prod}\njantzen: {jan}"),
            );
        }
        Command::Adjust { block, weight, characteristic } => {
            let counts = parse_block_label(&block)?;
            let block = BlockDescriptor::from_counts(&counts, weight)?;
            let field = FieldSpec::new(characteristic)?;
            let adj = adjustment_matrix(&block, field)?;
            let violations = adj.delta_violations();
            let checked = characteristic == 0 || (weight as u64) < characteristic;
            if json_mode {
                let cells: Vec<Vec<serde_json::Value>> = adj
                    .entries
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|c| json!({ "value": c.value, "provenance": format!("{:?}", c.provenance) }))
                            .collect()
                    })
                    .collect();
                let parts: Vec<String> = adj.partitions.iter().map(ToString::to_string).collect();
                emit(true, "adjust", json!({ "block": block.label(), "weight": weight, "p": characteristic,
                    "partitions": parts, "entries": cells, "delta_violations": violations.len() }), String::new());
            } else {
                println!("{} at p={characteristic}", block);
                for (lambda, row) in adj.partitions.iter().zip(&adj.entries) {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|c| match (c.provenance, c.value) {
                            (Provenance::Determined, Some(v)) => format!("{v:>2}"),
                            (Provenance::AssumedConjecture, Some(v)) => format!("{v:>1}*"),
                            _ => " ?".to_string(),
                        })
                        .collect();
                    println!("{} | {lambda}", cells.join(" "));
                }
                let assumed = adj.count(Provenance::AssumedConjecture);
                let unknown = adj.count(Provenance::Unknown);
                println!(
                    "{} Determined, {assumed} assumed (*), {unknown} unknown (?)",
                    adj.count(Provenance::Determined)
                );
                if assumed > 0 {
                    println!("* conjecture not machine-checkable here; shown as the conjectured value");
                }
                for (l, m, v) in &violations {
                    println!("Determined adj({l}, {m}) = {v} differs from delta");
                }
            }
            if checked && !violations.is_empty() {
                return Err(Mismatch.into());
            }
        }
        Command::Verify { target, e, small, max_n, cache, verbose, list } => {
            if list {
                println!("all");
                for t in TARGETS {
                    println!("{t}");
                }
                return Ok(());
            }
            let target = target.ok_or_else(|| usage("verify needs a target; see --list"))?;
            let cache = cache.map(Cache::new).transpose()?;
            let opts = VerifyOptions { e, small, max_n, cache };
            let targets: Vec<&str> = if target == "all" {
                all_targets(&opts)
            } else if let Some(t) = TARGETS.iter().find(|t| **t == target) {
                vec![*t]
            } else {
                return Err(CliError::UnknownTarget(target).into());
            };
            let reports = run_targets(&targets, &opts)?;
            let ok = reports.iter().all(|r| r.passed());
            if json_mode {
                println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
            } else {
                for r in &reports {
                    print!("{}", r.render(verbose));
                }
                let rows: usize = reports.iter().map(|r| r.rows.len()).sum();
                let failed: usize = reports.iter().map(|r| r.summary.failed).sum();
                println!("{} reports, {rows} rows, {failed} mismatches", reports.len());
            }
            if !ok {
                return Err(Mismatch.into());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Error(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
