use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use clstrata::cl_structures::catalog_entry;
use clstrata::realizability::{oracle, realizable, screen_loop_deg3, screen_odd_q, KnownBad};
use clstrata::verify::{self, Options};
use clstrata::{catalog, classify, enumerate_strips, io, EdgeSet, Generators, Multigraph, RibbonStructure, Verdict};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "clstrata", version, about = "Strip structures and orientable realizability on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basic invariants, decompositions and screens of a graph.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List every strip over the file's rotation (the default rotation for a graph file).
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Orientable strip classes under the chosen equivalence generators.
    Classify {
        file: PathBuf,
        /// Comma-separated subset of flips,auto,complement, or `none`.
        #[arg(long, default_value = "flips,auto,complement")]
        generators: String,
        /// Print a human summary instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Decide whether the graph carries an orientable strip.
    Realizable {
        file: PathBuf,
        /// Fall back to exhaustive search when no criterion applies.
        #[arg(long)]
        oracle: bool,
        /// Directory of graph files known not to be realizable.
        #[arg(long, value_name = "DIR")]
        known_bad: Option<PathBuf>,
        /// Store graphs found non-realizable by exhaustive search in the known-bad directory.
        #[arg(long, requires = "known_bad")]
        record_bad: bool,
        #[arg(long)]
        json: bool,
    },
    /// List the bundled graphs, or print one as a ribbon file.
    Catalog { name: Option<String> },
    /// Run the reproducibility checks and print one row per check.
    VerifyPaper {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Convert a ribbon file to DOT or JSON.
    Export {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Write to a file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Dot,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var("CLSTRATA_THREADS") else { return Ok(()) };
    let n: usize = v.trim().parse().with_context(|| format!("CLSTRATA_THREADS must be a number, got `{v}`"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn label(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

/// A ribbon file as is, or a graph file with the default rotation and no twists.
fn load_structure(path: &Path) -> Result<RibbonStructure> {
    let text = read(path)?;
    let has_rotation = text.lines().any(|l| l.trim_start().starts_with("rotation"));
    let r = if has_rotation {
        io::parse_ribbon(&text)
    } else {
        io::parse_graph(&text).and_then(|g| RibbonStructure::with_default_rotation(g, EdgeSet::EMPTY))
    };
    r.with_context(|| path.display().to_string())
}

fn load_graph(path: &Path) -> Result<Multigraph> {
    Ok(load_structure(path)?.graph)
}

fn edge_list(s: EdgeSet) -> Vec<usize> {
    s.iter().collect()
}

fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Analyze { file, json } => analyze(&load_graph(&file)?, json)?,
        Command::Enumerate { file, json } => enumerate(&load_structure(&file)?, json)?,
        Command::Classify { file, generators, text } => {
            let r = load_structure(&file)?;
            let gens = Generators::parse(&generators)?;
            let report = classify(&label(&file), &r.graph, &r.rotation, gens)?;
            if text {
                print!("{report}");
            } else {
                print!("{}", report.to_json());
            }
        }
        Command::Realizable { file, oracle: use_oracle, known_bad, record_bad, json } => {
            let g = load_graph(&file)?;
            realizable_cmd(&g, use_oracle, known_bad.as_deref(), record_bad, json)?;
        }
        Command::Catalog { name: None } => {
            for e in catalog() {
                println!("{:<24} {:<28} {}", e.name, e.tags.join(","), e.description);
            }
        }
        Command::Catalog { name: Some(name) } => match catalog_entry(&name) {
            Some(e) => print!("{}", io::write_ribbon(&e.structure)),
            None => bail!("no catalog entry named `{name}`"),
        },
        Command::VerifyPaper { seed } => return verify_paper(seed),
        Command::Export { file, format, output } => {
            let r = load_structure(&file)?;
            let out = match format {
                Format::Dot => io::to_dot(&r, &label(&file)),
                Format::Json => io::ribbon_to_json(&r),
            };
            match output {
                Some(p) => std::fs::write(&p, out).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{out}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn analyze(g: &Multigraph, as_json: bool) -> Result<()> {
    g.require_connected()?;
    let q = g.cycle_rank()?;
    let bridges = g.bridges();
    let blocks = g.two_connected_components();
    let cp = g.cyclic_part()?;
    let odd_q = screen_odd_q(g)?.is_some();
    let loop3 = screen_loop_deg3(g)?.is_some();
    if as_json {
        let j = json!({
            "n": g.n(),
            "m": g.m(),
            "q": q,
            "bridges": edge_list(bridges),
            "two_connected_components": blocks.iter().map(|b| edge_list(*b)).collect::<Vec<_>>(),
            "cyclic_part": {
                "n": cp.graph.n(),
                "m": cp.graph.m(),
                "edges": cp.graph.edge_list(),
                "vertex_origin": cp.vertex_origin,
            },
            "screens": { "odd_q": odd_q, "loop_at_degree_3": loop3 },
        });
        println!("{}", serde_json::to_string_pretty(&j)?);
        return Ok(());
    }
    println!("n = {}, m = {}, q = {q}", g.n(), g.m());
    if bridges.is_empty() {
        println!("bridges: none");
    } else {
        println!("bridges: {:?}", edge_list(bridges));
    }
    println!("2-connected components: {}", blocks.len());
    for b in &blocks {
        println!("  edges {:?}", edge_list(*b));
    }
    println!("cyclic part: n = {}, m = {}, edges {:?}", cp.graph.n(), cp.graph.m(), cp.graph.edge_list());
    println!("screen odd q: {}", if odd_q { "NO (not orientably realizable)" } else { "pass" });
    println!("screen loop at degree 3: {}", if loop3 { "NO (not orientably realizable)" } else { "pass" });
    Ok(())
}

fn enumerate(r: &RibbonStructure, as_json: bool) -> Result<()> {
    let g = &r.graph;
    let strips = enumerate_strips(g, &r.rotation)?;
    let mut rows = Vec::with_capacity(strips.len());
    for t in strips {
        let s = RibbonStructure::new(g.clone(), r.rotation.clone(), t)?;
        rows.push((t.to_bitstring(g.m()), s.closed_euler()?));
    }
    if as_json {
        let j: Vec<_> = rows
            .iter()
            .map(|(t, s)| json!({ "twists": t, "orientable": s.orientable, "genus_or_crosscap": s.genus_or_crosscap }))
            .collect();
        println!("{}", serde_json::to_string_pretty(&j)?);
    } else {
        println!("{} strips", rows.len());
        for (t, s) in rows {
            println!("  {t}  {s}");
        }
    }
    Ok(())
}

fn realizable_cmd(g: &Multigraph, use_oracle: bool, dir: Option<&Path>, record: bool, as_json: bool) -> Result<()> {
    let mut kb = match dir {
        Some(d) => KnownBad::load_dir(d)?,
        None => KnownBad::seeded(),
    };
    let mut report = realizable(g, &kb, false)?;
    let mut by_oracle = false;
    let mut recorded = None;
    if report.verdict == Verdict::Unknown && use_oracle {
        report = oracle(g)?;
        by_oracle = true;
        if report.verdict == Verdict::No && record {
            recorded = kb.record(dir.expect("clap requires the directory"), &g.cyclic_part()?.graph)?;
        }
    }
    if as_json {
        let j = json!({
            "verdict": report.verdict.to_string(),
            "criterion": report.criterion,
            "witness": report.witness.as_ref().map(io::write_ribbon),
            "recorded": recorded.as_ref().map(|p| p.display().to_string()),
        });
        println!("{}", serde_json::to_string_pretty(&j)?);
        return Ok(());
    }
    let how = if by_oracle { format!("{} (fallback)", report.criterion) } else { report.criterion.to_string() };
    println!("{} by {how}", report.verdict);
    if let Some(w) = &report.witness {
        println!();
        print!("{}", io::write_ribbon(w));
    }
    if let Some(p) = recorded {
        eprintln!("recorded {}", p.display());
    }
    Ok(())
}

fn verify_paper(seed: u64) -> Result<ExitCode> {
    let opts = Options { seed, ..Options::default() };
    let outcome = verify::run_all(&opts)?;
    for c in &outcome.checks {
        println!("{c}");
    }
    println!();
    println!("orientable class counts by generator regime:");
    for r in &outcome.regimes {
        let cells: Vec<String> = r.counts.iter().map(|(n, c)| format!("{n}={c}")).collect();
        println!("  {:<24} total {:>2}  {}", r.generators.to_string(), r.total(), cells.join(" "));
    }
    let failed = outcome.checks.iter().filter(|c| !c.passed).count();
    println!();
    println!("{} of {} checks passed", outcome.checks.len() - failed, outcome.checks.len());
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
