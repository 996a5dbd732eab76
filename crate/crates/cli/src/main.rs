use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use scopegram::focused::{parse_brackets, Bracketing, DEFAULT_LIMIT};
use scopegram::oracle::Model;
use scopegram::pipeline::{readings, run_eval, scope_lexicon, RunReport};
use scopegram::suites::{run_suite, Fault, SuiteConfig, SUITE_NAMES};
use scopegram::types::{print_type, Lexicon};

/// Focused Lambek parsing with vector semantics for quantifier scope.
#[derive(Parser)]
#[command(name = "scopegram", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every focused derivation of a sentence.
    Parse(SentenceArgs),
    /// Evaluate every reading of a sentence on a model.
    Eval {
        #[command(flatten)]
        sentence: SentenceArgs,
        #[arg(long)]
        model: PathBuf,
        /// Compare each reading with the first-order oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Run the invariant suites.
    Check {
        /// Run only this suite.
        #[arg(long)]
        suite: Option<String>,
        /// Largest universe size for exhaustive suites.
        #[arg(long, default_value_t = 3)]
        universe: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true, value_enum)]
        inject_fault: Option<FaultArg>,
    },
    /// Print derivations together with their compiled terms.
    Render {
        #[command(flatten)]
        sentence: SentenceArgs,
        /// Only the proof with this 0-based index.
        #[arg(long)]
        index: Option<usize>,
    },
}

#[derive(Args)]
struct SentenceArgs {
    /// Lexicon file; the bundled lexicon when omitted.
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Antecedent bracketing over 1-based word positions, e.g. "((1 2)(3 (4 5)))".
    #[arg(long)]
    brackets: Option<String>,
    /// Proof enumeration cap.
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
    #[arg(long)]
    json: bool,
    /// The sentence, as one argument or several.
    #[arg(required = true)]
    words: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    MuUnion,
}

impl SentenceArgs {
    fn tokens(&self) -> Vec<String> {
        self.words.iter().flat_map(|w| w.split_whitespace()).map(str::to_string).collect()
    }

    fn lexicon(&self) -> Result<Lexicon> {
        match &self.lexicon {
            Some(p) => Ok(Lexicon::parse(&read(p)?).with_context(|| format!("parsing {}", p.display()))?),
            None => Ok(scope_lexicon()),
        }
    }

    fn bracketing(&self, n: usize) -> Result<Option<Bracketing>> {
        let Some(spec) = &self.brackets else { return Ok(None) };
        let b = parse_brackets(spec).context("parsing --brackets")?;
        b.validate(n).context("checking --brackets")?;
        Ok(Some(b))
    }
}

fn read(p: &Path) -> Result<String> {
    fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
}

fn seed() -> Result<u64> {
    match std::env::var("SCOPE_SEED") {
        Ok(s) => s.trim().parse().with_context(|| format!("SCOPE_SEED must be an unsigned integer, got `{s}`")),
        Err(_) => Ok(0),
    }
}

fn parse_cmd(args: &SentenceArgs, with_terms: bool, index: Option<usize>) -> Result<ExitCode> {
    let lex = args.lexicon()?;
    let words = args.tokens();
    let rs = readings(&lex, &words, args.bracketing(words.len())?.as_ref(), args.limit)?;
    if let Some(i) = index {
        if i >= rs.len() {
            bail!("proof index {i} out of range ({} proofs)", rs.len());
        }
    }
    let selected: Vec<_> = rs.iter().enumerate().filter(|(i, _)| index.is_none_or(|k| k == *i)).collect();
    if args.json {
        let proofs: Vec<_> = selected
            .iter()
            .map(|(i, r)| {
                json!({
                    "index": i,
                    "types": r.root.entries.iter().map(|e| print_type(&e.ty)).collect::<Vec<_>>(),
                    "derivation": r.rendered,
                    "term": r.term.to_string(),
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&json!({ "tokens": words, "count": rs.len(), "proofs": proofs }))?);
    } else {
        println!("{} proof(s)", rs.len());
        for (i, r) in selected {
            println!("\nproof {i}: {}", r.root.sequent);
            println!("{}", r.rendered);
            if with_terms {
                println!("term: {}", r.term);
                println!("inserted: {}", r.inserted());
            }
        }
    }
    Ok(if rs.is_empty() { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn print_report(report: &RunReport, json: bool) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(report)?);
        return Ok(());
    }
    println!("{} proof(s) for: {}", report.proofs.len(), report.tokens.join(" "));
    for p in &report.proofs {
        println!("\nproof {} [{}]", p.index, p.types.join(", "));
        println!("term: {}", p.term);
        match (&p.value, &p.error) {
            (Some(v), _) => println!("value: {v}"),
            (None, Some(e)) => println!("error: {e}"),
            (None, None) => {}
        }
        if let Some(o) = p.oracle {
            let verdict = match p.agree {
                Some(true) => "AGREE",
                Some(false) => "DISAGREE",
                None => "UNDECIDED",
            };
            println!("oracle: {} {verdict}", u8::from(o));
        }
    }
    Ok(())
}

fn eval_cmd(args: &SentenceArgs, model: &Path, oracle: bool) -> Result<ExitCode> {
    let lex = args.lexicon()?;
    let model = Model::parse(&read(model)?).with_context(|| format!("parsing {}", model.display()))?;
    let words = args.tokens();
    let report = run_eval(&lex, &model, &words, args.bracketing(words.len())?.as_ref(), args.limit, oracle)?;
    print_report(&report, args.json)?;
    Ok(if report.proofs.is_empty() { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn check_cmd(suite: Option<&str>, universe: usize, json: bool, fault: Option<FaultArg>) -> Result<ExitCode> {
    let cfg = SuiteConfig {
        universe,
        seed: seed()?,
        fault: fault.map(|FaultArg::MuUnion| Fault::MuUnion),
        ..SuiteConfig::default()
    };
    let names: Vec<&str> = match suite {
        Some(s) => vec![s],
        None => SUITE_NAMES.to_vec(),
    };
    let mut results = Vec::new();
    for name in names {
        results.extend(run_suite(name, &cfg)?);
    }
    let failed = results.iter().filter(|c| !c.passed).count();
    if json {
        let checks: Vec<_> =
            results.iter().map(|c| json!({ "suite": c.suite, "name": c.name, "passed": c.passed })).collect();
        let doc = json!({ "seed": cfg.seed, "passed": results.len() - failed, "failed": failed, "checks": checks });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        for c in &results {
            println!("{c}");
        }
        println!("{} passed, {failed} failed (seed {})", results.len() - failed, cfg.seed);
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Parse(args) => parse_cmd(args, false, None),
        Command::Render { sentence, index } => parse_cmd(sentence, true, *index),
        Command::Eval { sentence, model, oracle } => eval_cmd(sentence, model, *oracle),
        Command::Check { suite, universe, json, inject_fault } => {
            check_cmd(suite.as_deref(), *universe, *json, *inject_fault)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
