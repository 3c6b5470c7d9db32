use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use loewy_core::bounds::{conjecture_bound, ll_abelian, upper_bound_p2};
use loewy_core::{AbelianShape, Status};
use loewy_cli::record::{append_jsonl, write_report};
use loewy_cli::suite::{load_suite, run_check};
use loewy_cli::{CliError, CliResult, Expectation, ResultRecord, Session};
use serde::Serialize;

/// Blocks, defect groups and Loewy lengths of modular group algebras.
#[derive(Parser)]
#[command(name = "loewy", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Append JSON Lines records here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write a CSV verdict report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse every block of one group and check the bounds.
    Analyze {
        /// Builtin name, `x`-product such as "C4 x A5", or @file[#name].
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: u32,
        /// Field degree; defaults to the splitting degree.
        #[arg(long)]
        m: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Run a suite: `paper` or a suite file.
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
        #[command(flatten)]
        output: Output,
    },
    /// Print the closed-form bounds for an abelian shape `a1,a2,...:s`.
    Bounds {
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Check a normal subgroup of index p.
    Extension {
        #[arg(long)]
        group: String,
        /// A group spec matched among the normal subgroups, or generators "(1 2)(3 4),(1 3)(2 4)".
        #[arg(long)]
        normal: String,
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Check Loewy lengths of blocks of a direct product.
    Product {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        output: Output,
    },
}

fn print_records(records: &[ResultRecord]) {
    let mut last = None;
    for r in records {
        let key = (&r.group, r.p, r.m);
        if last != Some(key) {
            println!("{} |G|={} p={} GF({}^{})", r.group, r.order, r.p, r.p, r.m);
            last = Some(key);
        }
        let layers: Vec<String> = r.layers.iter().map(|l| l.to_string()).collect();
        println!(
            "  block {:<3} dim {:<4} d={} D={:<10} LL={:<3} e={:<3} layers {}{}",
            r.block,
            r.dim,
            r.defect,
            r.shape,
            r.ll,
            r.e,
            layers.join(","),
            if r.principal { "  principal" } else { "" }
        );
    }
}

fn print_verdicts(session: &Session) {
    for v in session.verdicts() {
        let bound = if v.bound_string().is_empty() { v.note.clone() } else { v.bound_string() };
        println!(
            "  {:<4} {:<20} {:<22} LL={:<3} {}{}",
            v.status.as_str(),
            v.claim.tag(),
            v.instance,
            v.ll,
            bound,
            if v.tight { " tight" } else { "" }
        );
    }
}

fn print_summary(session: &Session) {
    let mut by_claim: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
    for v in session.verdicts() {
        let slot = match v.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::NotApplicable => 2,
        };
        by_claim.entry(v.claim.tag()).or_default()[slot] += 1;
    }
    println!("{:<22} {:>5} {:>5} {:>5}", "claim", "pass", "fail", "na");
    for (claim, [pass, fail, na]) in by_claim {
        println!("{claim:<22} {pass:>5} {fail:>5} {na:>5}");
    }
    for v in session.verdicts().iter().filter(|v| v.status == Status::Fail) {
        println!("FAIL {} {}: LL={} {} {}", v.claim, v.instance, v.ll, v.bound_string(), v.note);
    }
}

fn finish(session: &Session, records: &[ResultRecord], output: &Output) -> CliResult<u8> {
    if let Some(path) = &output.out {
        append_jsonl(path, records)?;
    }
    if let Some(path) = &output.report {
        write_report(path, session.verdicts())?;
    }
    let failures = session.failures();
    println!("{} verdicts, {failures} failed", session.verdicts().len());
    Ok(u8::from(failures > 0))
}

#[derive(Serialize)]
struct BoundsRecord {
    shape: String,
    p: u32,
    ll_abelian: u64,
    upper_bound_p2: Option<u64>,
    conjecture_bound: u64,
}

fn bounds(shape_text: &str, p: u32, output: &Output) -> CliResult<u8> {
    loewy_core::group::check_prime(p)?;
    let shape = AbelianShape::parse(shape_text, p)?;
    let record = BoundsRecord {
        shape: shape.to_string(),
        p,
        ll_abelian: ll_abelian(&shape),
        upper_bound_p2: upper_bound_p2(&shape).ok(),
        conjecture_bound: conjecture_bound(&shape),
    };
    println!("D = {} (p={p}, r={}, s={}, d={}, |D|={})", record.shape, shape.r(), shape.s, shape.d(), shape.order());
    println!("ll_abelian        {}", record.ll_abelian);
    match record.upper_bound_p2 {
        Some(u) => println!("upper_bound_p2    {u}"),
        None => println!("upper_bound_p2    -"),
    }
    println!("conjecture_bound  {}", record.conjecture_bound);
    if let Some(path) = &output.out {
        let mut line = serde_json::to_string(&record)?;
        line.push('\n');
        use std::io::Write;
        std::fs::OpenOptions::new().create(true).append(true).open(path)?.write_all(line.as_bytes())?;
    }
    if let Some(path) = &output.report {
        let mut w = csv::Writer::from_path(path)?;
        w.serialize(&record)?;
        w.flush()?;
    }
    Ok(0)
}

fn run(cli: Cli) -> CliResult<u8> {
    let mut session = Session::new();
    match cli.command {
        Command::Analyze { group, p, m, output } => {
            let key = session.run_block(&group, p, m, &Expectation::default())?;
            let records = session.records_for(&key);
            print_records(&records);
            print_verdicts(&session);
            finish(&session, &records, &output)
        }
        Command::Verify { suite, output } => {
            let checks = load_suite(&suite)?;
            for check in &checks {
                run_check(&mut session, check)?;
            }
            let records = session.records();
            print_records(&records.iter().filter(|r| r.principal).cloned().collect::<Vec<_>>());
            print_summary(&session);
            finish(&session, &records, &output)
        }
        Command::Bounds { shape, p, output } => bounds(&shape, p, &output),
        Command::Extension { group, normal, p, output } => {
            let key = session.run_extension(&group, &normal, p)?;
            let records = session.records_for(&key);
            print_records(&records);
            print_verdicts(&session);
            finish(&session, &records, &output)
        }
        Command::Product { g1, g2, p, output } => {
            let key = session.run_product(&g1, &g2, p)?;
            let records = session.records_for(&key);
            print_records(&records);
            print_verdicts(&session);
            finish(&session, &records, &output)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(CliError::exit_code(&e))
        }
    }
}
