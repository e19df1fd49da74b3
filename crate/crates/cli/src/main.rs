//! `seqrec`: build and check binary codes with sequential recovery.
//!
//! Exit codes: 0 success, 1 I/O error, 2 invariant violation or failed
//! check, 3 parse error, 4 infeasible parameters. Errors are reported on
//! stderr as `error[<category>]: <message>`.

mod artifacts;
mod error;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use seqrec::code::alist::write_alist;
use seqrec::code::{
    emit_code, moore_floor_met, optimal_rate, rate_report, sequential_decode, verify_seq_recovery, SeqRecCode,
};
use seqrec::construct::{run_pipeline, BaseSpec, CodeGraph, PipelineConfig};
use seqrec::graph::io::{parse_edge_list, write_edge_list};
use seqrec::group::parse_group_spec;
use seqrec::lift::Strategy;
use seqrec::{Graph, Layer};

use artifacts::{load, read, ALIST_FILE, GRAPH_FILE, MANIFEST_FILE, PROVENANCE_FILE, REPORT_FILE};
use error::{Category, CliError};

#[derive(Parser)]
#[command(name = "seqrec", version, about = "Rate-optimal binary codes with sequential erasure recovery")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and write its artifacts to a directory.
    Construct(ConstructArgs),
    /// Check girth, layers, locality, rate and erasure recovery.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Recover erased symbols by peeling.
    Decode {
        #[arg(long = "in")]
        input: PathBuf,
        /// Comma-separated 0-based symbol indices.
        #[arg(long, default_value = "")]
        erase: String,
        /// Received word of `0`/`1`; `?` or `x` also marks an erasure.
        #[arg(long)]
        word: Option<String>,
    },
    /// Print the code in another format.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Summarise a code.
    Info {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(clap::Args)]
struct ConstructArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    t: usize,
    /// Build for this smaller t first and extend.
    #[arg(long = "from-t")]
    from_t: Option<usize>,
    /// auto, petersen, k43, complete, complete-bipartite, circulant or random.
    #[arg(long, default_value = "auto")]
    base: BaseSpec,
    /// auto, stepwise, cayley or matching.
    #[arg(long, default_value = "auto")]
    strategy: Strategy,
    /// Group for the Cayley strategy, e.g. `symmetric 7` or `cyclic 31`.
    #[arg(long)]
    group: Option<String>,
    /// Edge-list file of the companion graph for the matching strategy.
    #[arg(long)]
    companion: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "size-hint", default_value_t = 0)]
    size_hint: usize,
    /// Erasure patterns to check; 0 skips the check.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
    /// Draws allowed when searching for a Cayley generator set.
    #[arg(long = "search-budget", default_value_t = 200_000)]
    search_budget: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Alist,
    Json,
    Edges,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                Category::Parse.exit_code()
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Ok(v) = std::env::var("SEQREC_THREADS") {
        match v.parse::<usize>() {
            Ok(n) if n > 0 => {
                seqrec::par::configure_threads(n);
            }
            _ => {
                eprintln!("error[parse]: SEQREC_THREADS must be a positive integer, got `{v}`");
                return Category::Parse.exit_code();
            }
        }
    }
    let result = match cli.command {
        Command::Construct(args) => construct(args),
        Command::Verify {
            input,
            t,
            r,
            budget,
            seed,
        } => verify(&input, t, r, budget, seed),
        Command::Decode { input, erase, word } => decode(&input, &erase, word.as_deref()),
        Command::Export { input, format, t, out } => export(&input, format, t, out.as_deref()),
        Command::Info { input } => info(&input),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {}", e.category, e.message);
            e.category.exit_code()
        }
    }
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::new(Category::Io, format!("{}: {e}", path.display())))
}

fn construct(args: ConstructArgs) -> Result<(), CliError> {
    let group = args.group.as_deref().map(parse_group_spec).transpose()?;
    let companion = match &args.companion {
        Some(p) => Some(parse_edge_list(&read(p)?)?),
        None => None,
    };
    let cfg = PipelineConfig {
        r: args.r,
        t: args.t,
        from_t: args.from_t,
        base: args.base,
        strategy: args.strategy,
        group,
        companion,
        seed: args.seed,
        size_hint: args.size_hint,
        budget: args.budget,
        search_budget: args.search_budget,
    };
    let out = run_pipeline(&cfg)?;
    fs::create_dir_all(&args.out).map_err(|e| CliError::new(Category::Io, format!("{}: {e}", args.out.display())))?;
    write(&args.out.join(GRAPH_FILE), &write_edge_list(&out.code_graph.graph))?;
    write(&args.out.join(MANIFEST_FILE), &out.manifest_text())?;
    write(&args.out.join(ALIST_FILE), &write_alist(&out.code.h))?;
    write(&args.out.join(REPORT_FILE), &out.code_manifest().to_json())?;
    write(&args.out.join(PROVENANCE_FILE), &out.lifted.lift.provenance_table())?;

    println!(
        "n={} k={} rate={} optimal={} girth={} multiplier={}",
        out.rate.n, out.rate.k, out.rate.rate, out.rate.optimal, out.girth, out.lifted.lift.multiplier
    );
    if let Some(rep) = &out.report {
        println!("erasures: {rep}");
    }
    let failures = out.invariant_failures();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::new(Category::Invariant, failures.join("; ")))
    }
}

fn verify(input: &Path, t: Option<usize>, r: Option<usize>, budget: u64, seed: Option<u64>) -> Result<(), CliError> {
    let loaded = load(input, r, t)?;
    if !loaded.t_known {
        return Err(CliError::new(Category::Parse, "--t is required when no manifest is present"));
    }
    let code = &loaded.code;
    let t = code.t;
    let mut failed = Vec::new();
    let mut line = |name: &str, ok: bool, detail: String| {
        println!("{name}: {} ({detail})", if ok { "ok" } else { "FAIL" });
        if !ok {
            failed.push(name.to_string());
        }
    };

    let locality = code.check_locality();
    line("locality", locality.is_ok(), locality.err().map_or(format!("r={}", code.r), |e| e.to_string()));

    let girth = code.check_graph_girth();
    line("girth", girth.at_least(t + 1), format!("girth {girth}, need >= {}", t + 1));

    match &loaded.graph {
        None => println!("layers: skipped (no graph file)"),
        Some(g) => match CodeGraph::from_graph(g.clone(), code.r, t) {
            Ok(cg) => {
                let same = emit_code(&cg).h == code.h;
                line("layers", same, if same { "graph matches H".into() } else { "graph does not match H".into() });
            }
            Err(e) => line("layers", false, e.to_string()),
        },
    }

    let rate = rate_report(code);
    line(
        "rate",
        rate.meets_optimal,
        format!("k/n = {}/{} = {}, optimal {}", rate.k, rate.n, rate.rate, rate.optimal),
    );
    line(
        "block length",
        rate.meets_moore_floor,
        format!("n = {} vs r^((t+1)/2) = {:.3}", rate.n, rate.moore_floor),
    );

    let report = verify_seq_recovery(code, t, budget, seed.unwrap_or(loaded.seed));
    line("erasures", report.passed(), report.to_string());
    for f in report.failures.iter().take(10) {
        println!("  stuck pattern: {f:?}");
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::new(Category::Invariant, format!("failed checks: {}", failed.join(", "))))
    }
}

fn parse_erasures(list: &str, word: Option<&str>, n: usize) -> Result<(Vec<usize>, Vec<u8>), CliError> {
    let mut erased = Vec::new();
    for tok in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let i: usize = tok
            .parse()
            .map_err(|_| CliError::new(Category::Parse, format!("bad erasure index `{tok}`")))?;
        if i >= n {
            return Err(CliError::new(Category::Parse, format!("erasure index {i} is out of range for n = {n}")));
        }
        erased.push(i);
    }
    let mut bits = vec![0u8; n];
    if let Some(w) = word {
        if w.chars().count() != n {
            return Err(CliError::new(Category::Parse, format!("word has {} symbols, expected {n}", w.chars().count())));
        }
        for (i, ch) in w.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits[i] = 1,
                '?' | 'x' => erased.push(i),
                other => return Err(CliError::new(Category::Parse, format!("bad symbol `{other}` in word"))),
            }
        }
    }
    erased.sort_unstable();
    erased.dedup();
    Ok((erased, bits))
}

fn bit_string(bits: &[u8]) -> String {
    bits.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect()
}

fn decode(input: &Path, erase: &str, word: Option<&str>) -> Result<(), CliError> {
    let loaded = load(input, None, None)?;
    let code = &loaded.code;
    let (erased, bits) = parse_erasures(erase, word, code.n())?;
    match sequential_decode(code, &erased, &bits) {
        Ok((schedule, out)) => {
            println!("schedule: {} steps", schedule.len());
            for (i, (sym, row)) in schedule.steps.iter().enumerate() {
                println!("step {}: symbol {sym} from check {row}", i + 1);
            }
            println!("recovered: {}", bit_string(&out));
            Ok(())
        }
        Err(fail) => {
            for (i, (sym, row)) in fail.partial.steps.iter().enumerate() {
                println!("step {}: symbol {sym} from check {row}", i + 1);
            }
            Err(CliError::new(
                Category::Invariant,
                format!("peeling stuck on stopping set {:?}", fail.residual),
            ))
        }
    }
}

#[derive(Serialize)]
struct ExportJson {
    n: usize,
    m: usize,
    k: usize,
    r: usize,
    t: Option<usize>,
    rate: String,
    optimal_rate: Option<String>,
    girth: Option<usize>,
    /// 0-based column indices of each row.
    rows: Vec<Vec<usize>>,
}

/// The code graph read off `H`: checks first, then one pendant vertex per
/// weight-one column.
fn graph_from_code(code: &SeqRecCode) -> Graph {
    let mut g = Graph::empty(code.m());
    for col in &code.h.cols {
        match *col.as_slice() {
            [a, b] => {
                // parallel columns cannot be represented; they are reported by `info`
                let _ = g.add_edge(a, b);
            }
            [a] => {
                let w = g.add_vertex(Some(Layer::Dummy));
                g.add_edge(a, w).expect("fresh pendant");
            }
            _ => {}
        }
    }
    g
}

fn export(input: &Path, format: ExportFormat, t: Option<usize>, out: Option<&Path>) -> Result<(), CliError> {
    let loaded = load(input, None, t)?;
    let code = &loaded.code;
    let text = match format {
        ExportFormat::Alist => write_alist(&code.h),
        ExportFormat::Json => {
            let rate = rate_report(code);
            let doc = ExportJson {
                n: code.n(),
                m: code.m(),
                k: rate.k,
                r: code.r,
                t: loaded.t_known.then_some(code.t),
                rate: rate.rate.to_string(),
                optimal_rate: loaded
                    .t_known
                    .then(|| optimal_rate(code.r as u64, code.t as u64).to_string()),
                girth: code.check_graph_girth().finite(),
                rows: code.h.rows.clone(),
            };
            serde_json::to_string_pretty(&doc).expect("export serialises") + "\n"
        }
        ExportFormat::Edges => match &loaded.graph {
            Some(g) => write_edge_list(g),
            None => write_edge_list(&graph_from_code(code)),
        },
    };
    match out {
        Some(p) => write(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn info(input: &Path) -> Result<(), CliError> {
    let loaded = load(input, None, None)?;
    let code = &loaded.code;
    let rate = rate_report(code);
    let value = rate.k as f64 / rate.n.max(1) as f64;
    println!("n={} k={} rate={} girth={}", rate.n, rate.k, value, code.check_graph_girth());
    if let Some(g) = &loaded.graph {
        let mut sizes: BTreeMap<Layer, usize> = BTreeMap::new();
        for tag in g.tags() {
            if let Some(l) = tag.layer {
                *sizes.entry(l).or_default() += 1;
            }
        }
        let parts: Vec<String> = sizes.iter().map(|(l, c)| format!("{l}={c}")).collect();
        println!("layers: {}", parts.join(" "));
    }
    if loaded.t_known {
        println!(
            "r={} t={} optimal={} moore_floor_met={}",
            code.r,
            code.t,
            optimal_rate(code.r as u64, code.t as u64),
            moore_floor_met(code.n(), code.r, code.t)
        );
    }
    Ok(())
}
