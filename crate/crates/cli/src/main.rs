mod config;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use sdcirc::catalog::{Catalog, Depth, Filter, VerifyOptions};
use sdcirc::construct::{orthogonal_circulant_census, GeneratorOverRing, CENSUS_BUDGET};
use sdcirc::genfile::{emit_generator_file, parse_generator_file};
use sdcirc::gf2::{
    binary_generator, classify_type, default_workers, full_weight_distribution_with, is_self_dual,
    low_weight_distribution_with, min_distance_with, BitMatrix, WeightDistribution, FULL_ENUMERATION_LIMIT,
};
use sdcirc::search::{search_building_up, search_four_circulant, SearchConfig, SearchHit, SearchOutcome};
use sdcirc::{RingElement, RingId, RingVector};

/// Self-dual codes from circulant constructions.
#[derive(Parser, Debug)]
#[command(name = "sdcirc", version, about, args_override_self = true)]
struct Cli {
    /// One JSON object per line instead of text.
    #[arg(long, global = true)]
    jsonl: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rebuild and check catalog records.
    Verify(VerifyArgs),
    /// Random four-circulant search.
    Search(SearchArgs),
    /// Random building-up search on a parent code.
    BuildUp(BuildUpArgs),
    /// Minimum distance and low-weight counts of a generator file.
    Mindist(MindistArgs),
    /// Binary Gray image of a ring vector.
    Graymap(GraymapArgs),
    /// Count orthogonal μ-circulant matrices.
    Census(CensusArgs),
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("which").args(["id", "length", "all"]))]
struct VerifyArgs {
    /// Record id, e.g. C_56,1.
    #[arg(long)]
    id: Option<String>,
    /// Every record of this binary length.
    #[arg(long)]
    length: Option<usize>,
    /// Every published record (the default).
    #[arg(long)]
    all: bool,
    /// Count up to d + 2 even where that needs the slow two-sided pass.
    #[arg(long, conflicts_with = "structure")]
    extended: bool,
    /// Only construction conditions and self-duality.
    #[arg(long)]
    structure: bool,
    #[arg(long)]
    workers: Option<usize>,
    /// Write a generator file per record into this directory.
    #[arg(long)]
    emit: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SearchLimits {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    max_candidates: u64,
    #[arg(long)]
    max_hits: Option<usize>,
    /// Seconds; output then depends on timing.
    #[arg(long)]
    time_limit: Option<f64>,
    #[arg(long)]
    workers: Option<usize>,
    /// Drop hits with smaller minimum distance.
    #[arg(long)]
    min_distance: Option<usize>,
    /// Write a generator file per hit into this directory.
    #[arg(long)]
    emit: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    ring: RingId,
    /// Block size; the binary length is 4n times the Gray expansion.
    #[arg(long)]
    n: usize,
    /// Allowed λ as hex digits, e.g. 139B; default all involutory units.
    #[arg(long)]
    lambda: Option<String>,
    /// Allowed μ as hex digits; default all involutory units.
    #[arg(long)]
    mu: Option<String>,
    /// Draw c directly instead of from the orthogonal-circulant pool.
    #[arg(long)]
    no_pool: bool,
    #[command(flatten)]
    limits: SearchLimits,
}

#[derive(Args, Debug)]
struct BuildUpArgs {
    /// Catalog id or generator file (taken as a binary code).
    #[arg(long)]
    parent: String,
    /// Allowed ε as hex digits; default all with ε² = -1.
    #[arg(long)]
    eps: Option<String>,
    #[command(flatten)]
    limits: SearchLimits,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("mode").args(["full", "lowweight"]))]
struct MindistArgs {
    file: PathBuf,
    /// Enumerate every codeword.
    #[arg(long)]
    full: bool,
    /// Two-sided count of all weights up to 2P (self-dual codes only).
    #[arg(long, value_name = "P")]
    lowweight: Option<usize>,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args, Debug)]
struct GraymapArgs {
    #[arg(long)]
    ring: RingId,
    /// Hex vector, parentheses optional.
    #[arg(long)]
    vector: String,
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[arg(long)]
    ring: RingId,
    #[arg(long)]
    n: usize,
    /// Largest order^n · |units| to scan.
    #[arg(long, default_value_t = CENSUS_BUDGET)]
    budget: u128,
}

struct Out {
    jsonl: bool,
}

impl Out {
    fn record<T: Serialize>(&self, kind: &str, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        if self.jsonl {
            let mut v = serde_json::to_value(value)?;
            if let Value::Object(map) = &mut v {
                map.insert("kind".into(), Value::String(kind.into()));
            }
            println!("{}", serde_json::to_string(&v)?);
        } else {
            println!("{}", text());
        }
        Ok(())
    }
}

fn unit_list(ring: RingId, digits: &Option<String>) -> Result<Vec<RingElement>> {
    let Some(s) = digits else { return Ok(Vec::new()) };
    s.chars()
        .filter(|c| !matches!(c, ',' | ' ' | '{' | '}'))
        .map(|c| RingElement::from_symbol(ring, c).map_err(Into::into))
        .collect()
}

fn file_stem(id: &str) -> String {
    id.chars()
        .map(|c| match c {
            '\'' => 'p',
            c if c.is_ascii_alphanumeric() => c,
            _ => '_',
        })
        .collect()
}

fn write_generator(dir: &Path, id: &str, g: &BitMatrix, comments: &[String]) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(format!("{}.txt", file_stem(id)));
    std::fs::write(&path, emit_generator_file(g, comments)).with_context(|| format!("writing {}", path.display()))
}

fn verify(args: &VerifyArgs, out: &Out) -> Result<bool> {
    let cat = Catalog::embedded();
    let filter = match (&args.id, args.length) {
        (Some(id), _) => Filter::Id(id.clone()),
        (None, Some(n)) => Filter::Length(n),
        (None, None) => Filter::All,
    };
    let depth = if args.structure {
        Depth::Structure
    } else if args.extended {
        Depth::Extended
    } else {
        Depth::Weights
    };
    let opts =
        VerifyOptions { depth, workers: args.workers.unwrap_or_else(default_workers), ..VerifyOptions::default() };
    let records = cat.select(&filter)?;
    if records.is_empty() {
        bail!("no records match");
    }
    let (mut passed, mut failed) = (0usize, 0usize);
    for rec in records {
        let rep = sdcirc::catalog::verify_record(cat, rec, &opts);
        if rep.pass {
            passed += 1;
        } else {
            failed += 1;
        }
        out.record("record", &rep, || rep.summary())?;
        if let Some(dir) = &args.emit {
            let g = binary_generator(&cat.build(rec)?.generator)?;
            let mut comments = vec![rec.to_line()];
            if let Some(fit) = &rep.fit {
                comments.push(format!("measured {}", fit.params));
            }
            write_generator(dir, &rec.id, &g, &comments)?;
        }
    }
    out.record("summary", &json!({ "passed": passed, "failed": failed }), || {
        format!("{passed}/{} passed", passed + failed)
    })?;
    Ok(failed == 0)
}

fn search_config(ring: RingId, n: usize, limits: &SearchLimits) -> SearchConfig {
    let mut cfg = SearchConfig::new(ring, n, limits.seed);
    cfg.workers = limits.workers.unwrap_or_else(default_workers);
    cfg.max_candidates = limits.max_candidates;
    cfg.max_hits = limits.max_hits;
    cfg.time_limit = limits.time_limit.map(Duration::from_secs_f64);
    cfg.min_distance = limits.min_distance;
    cfg
}

fn hit_text(h: &SearchHit) -> String {
    let mut s = format!("hit [{},{},{}]", h.n, h.k, h.d);
    if let Some(f) = &h.family {
        s.push_str(&format!(" {f}"));
    }
    for (w, c) in &h.counts {
        s.push_str(&format!(" A{w}={c}"));
    }
    s.push_str(&format!(" | {}", h.record.to_line()));
    s
}

fn report_search(
    outcome: &SearchOutcome,
    emit: &Option<PathBuf>,
    out: &Out,
    parent: Option<&GeneratorOverRing>,
) -> Result<()> {
    for h in &outcome.hits {
        out.record("hit", h, || hit_text(h))?;
        if let Some(dir) = emit {
            let built = h.record.build_with_parent(parent)?;
            let g = binary_generator(&built.generator)?;
            write_generator(dir, &h.record.id, &g, &[h.record.to_line()])?;
        }
    }
    let s = &outcome.stats;
    out.record("stats", s, || {
        format!(
            "{} candidates, {} passed the conditions, {} hits, {} after deduplication",
            s.candidates,
            s.survivors,
            s.hits,
            outcome.hits.len()
        )
    })
}

fn search(args: &SearchArgs, out: &Out) -> Result<()> {
    let mut cfg = search_config(args.ring, args.n, &args.limits);
    cfg.lambdas = unit_list(args.ring, &args.lambda)?;
    cfg.mus = unit_list(args.ring, &args.mu)?;
    cfg.use_pool = !args.no_pool;
    let outcome = search_four_circulant(&cfg)?;
    report_search(&outcome, &args.limits.emit, out, None)
}

fn build_up(args: &BuildUpArgs, out: &Out) -> Result<()> {
    let cat = Catalog::embedded();
    let (parent, label) = match cat.get(&args.parent) {
        Some(rec) => (cat.build(rec)?.generator, rec.id.clone()),
        None => {
            let text = std::fs::read_to_string(&args.parent)
                .with_context(|| format!("{} is neither a catalog id nor a readable file", args.parent))?;
            (GeneratorOverRing::from_bits(&parse_generator_file(&text)?), args.parent.clone())
        }
    };
    let ring = parent.ring();
    let mut cfg = search_config(ring, parent.rows(), &args.limits);
    cfg.lambdas = unit_list(ring, &args.eps)?;
    let outcome = search_building_up(&cfg, &parent, &label)?;
    report_search(&outcome, &args.limits.emit, out, Some(&parent))
}

#[derive(Serialize)]
struct MindistReport {
    n: usize,
    k: usize,
    self_dual: bool,
    d: usize,
    code_type: Option<sdcirc::gf2::CodeType>,
    complete: bool,
    w_max: Option<usize>,
    counts: Vec<(usize, u64)>,
}

fn mindist(args: &MindistArgs, out: &Out) -> Result<()> {
    let text = std::fs::read_to_string(&args.file).with_context(|| format!("reading {}", args.file.display()))?;
    let g = parse_generator_file(&text)?.basis();
    let workers = args.workers.unwrap_or_else(default_workers);
    let self_dual = is_self_dual(&g);
    let dist: Option<WeightDistribution> = if args.full {
        Some(full_weight_distribution_with(&g, FULL_ENUMERATION_LIMIT, workers)?)
    } else if let Some(p) = args.lowweight {
        Some(low_weight_distribution_with(&g, 2 * p, workers)?)
    } else {
        None
    };
    let d = match dist.as_ref().and_then(|d| d.min_distance()) {
        Some(d) => d,
        None => min_distance_with(&g, 28, workers)?,
    };
    let rep = MindistReport {
        n: g.cols(),
        k: g.rows(),
        self_dual,
        d,
        code_type: dist.as_ref().and_then(|d| classify_type(d).ok()),
        complete: dist.as_ref().is_some_and(|d| d.complete),
        w_max: dist.as_ref().map(|d| d.w_max),
        counts: dist.as_ref().map(|d| d.nonzero().collect()).unwrap_or_default(),
    };
    out.record("mindist", &rep, || {
        let mut s = format!("[{},{},{}] self-dual={}", rep.n, rep.k, rep.d, rep.self_dual);
        for (w, c) in &rep.counts {
            s.push_str(&format!(" A{w}={c}"));
        }
        s
    })
}

fn graymap(args: &GraymapArgs, out: &Out) -> Result<()> {
    let v = RingVector::parse(args.ring, &args.vector)?;
    let bits: String = v.gray_image().iter().map(|&b| char::from(b'0' + b)).collect();
    let value = json!({ "ring": args.ring.tag(), "vector": v.to_hex(), "image": bits, "lee_weight": v.lee_weight() });
    out.record("graymap", &value, || bits.clone())
}

fn census(args: &CensusArgs, out: &Out) -> Result<()> {
    let c = orthogonal_circulant_census(args.ring, args.n, args.budget)?;
    let value =
        json!({ "ring": args.ring.tag(), "n": args.n, "pairs": c.pairs, "distinct_matrices": c.distinct_matrices });
    out.record("census", &value, || {
        format!("N_C({}, {}) = {} pairs, {} distinct matrices", args.ring, args.n, c.pairs, c.distinct_matrices)
    })
}

fn run(cli: &Cli) -> Result<bool> {
    let out = Out { jsonl: cli.jsonl };
    match &cli.command {
        Command::Verify(a) => verify(a, &out),
        Command::Search(a) => search(a, &out).map(|_| true),
        Command::BuildUp(a) => build_up(a, &out).map(|_| true),
        Command::Mindist(a) => mindist(a, &out).map(|_| true),
        Command::Graymap(a) => graymap(a, &out).map(|_| true),
        Command::Census(a) => census(a, &out).map(|_| true),
    }
}

fn main() -> ExitCode {
    let args = match config::expand_config(std::env::args().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let cli = Cli::parse_from(args);
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
