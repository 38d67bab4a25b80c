use std::collections::hash_map::{Entry, HashMap};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::anyhow;
use serde_json::json;

use vrel_core::evaluation::{
    evaluate_dataset, summarize, timing_benchmark, to_f64, EvaluationError, GraphInput, ReportFiles, ReportHeader,
    WilcoxonMode,
};
use vrel_core::generators::{build_dataset, load_dataset, write_dataset, DatasetError, DatasetSpec, LoadedDataset, Quotas};
use vrel_core::graph::io::{parse_edge_list, parse_graph6};
use vrel_core::heuristics::{apply, derive_post_hoc, HeuristicError, HeuristicId, HeuristicResult};
use vrel_core::reliability::{classify_subsets, count_connected, recount_for_insertion, ReliabilityError};
use vrel_core::SimpleGraph;

use crate::{BenchArgs, EvaluateArgs, Failure, GenerateArgs, RecommendArgs, ReportFormat, TestMode, TextFormat};

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(anyhow!(msg.into()))
}

fn io(context: String) -> impl FnOnce(std::io::Error) -> Failure {
    move |e| Failure::Data(anyhow!(e).context(context))
}

fn dataset_failure(e: DatasetError) -> Failure {
    match e {
        DatasetError::Quota { .. } => Failure::Budget(e.into()),
        DatasetError::Parameter(_) => Failure::Usage(e.into()),
        _ => Failure::Data(e.into()),
    }
}

fn evaluation_failure(e: EvaluationError) -> Failure {
    if e.is_budget() {
        Failure::Budget(e.into())
    } else {
        Failure::Data(e.into())
    }
}

fn reliability_failure(e: ReliabilityError) -> Failure {
    match e {
        ReliabilityError::OverBudget(_) => Failure::Budget(e.into()),
        _ => Failure::Data(e.into()),
    }
}

fn require_seed(seed: Option<u64>, command: &str) -> Result<u64, Failure> {
    seed.ok_or_else(|| usage(format!("{command} needs an explicit --seed so the run can be reproduced")))
}

fn needs_scores(h: HeuristicId) -> bool {
    matches!(h, HeuristicId::BPostHoc | HeuristicId::GammaPostHoc)
}

fn parse_heuristics(ids: &[String], default: &[HeuristicId]) -> Result<Vec<HeuristicId>, Failure> {
    if ids.is_empty() {
        return Ok(default.to_vec());
    }
    ids.iter().map(|s| s.trim().parse().map_err(|e: HeuristicError| usage(e.to_string()))).collect()
}

fn write_reports(files: &ReportFiles, format: ReportFormat, dir: &Path) -> Result<(), Failure> {
    let keep = |name: &str| match format {
        ReportFormat::All => true,
        ReportFormat::Csv => name.ends_with(".csv"),
        ReportFormat::Json => name.ends_with(".json"),
    };
    let selected = ReportFiles { files: files.files.iter().filter(|(n, _)| keep(n)).cloned().collect() };
    for path in selected.write_all(dir).map_err(io(format!("writing reports to {}", dir.display())))? {
        println!("wrote {}", path.display());
    }
    Ok(())
}

pub fn generate(args: &GenerateArgs) -> Outcome {
    let seed = require_seed(args.seed, "generate")?;
    let spec = DatasetSpec {
        orders: args.orders.clone(),
        quotas: Quotas { er: args.er, ba: args.ba, ws: args.ws },
        er_p: args.er_p,
        ba_m: args.ba_m,
        ws_k: args.ws_k,
        ws_beta: args.ws_beta,
        master_seed: seed,
        max_attempts: args.max_attempts,
    };
    let dataset = build_dataset(&spec).map_err(dataset_failure)?;
    let manifest = write_dataset(&dataset, &args.out).map_err(dataset_failure)?;
    for s in &dataset.stats {
        println!(
            "{} n={}: {}/{} accepted in {} attempts ({} filtered, {} isomorphic), rate {:.4}",
            s.model,
            s.order,
            s.accepted,
            s.quota,
            s.attempts,
            s.rejected_filter,
            s.rejected_duplicate,
            s.acceptance_rate()
        );
    }
    println!("{} graphs written to {} (manifest {})", dataset.graphs.len(), args.out.display(), manifest.manifest_hash);
    Ok(())
}

fn read_graph(path: &Path) -> Result<SimpleGraph, Failure> {
    let text = fs::read_to_string(path).map_err(io(format!("reading {}", path.display())))?;
    let parsed = match path.extension().and_then(|e| e.to_str()) {
        Some("el") => parse_edge_list(&text),
        Some("g6") => parse_graph6(text.lines().next().unwrap_or("")),
        _ => return Err(Failure::Data(anyhow!("{}: expected a .el or .g6 file", path.display()))),
    };
    parsed.map_err(|e| Failure::Data(anyhow!(e).context(format!("parsing {}", path.display()))))
}

/// Score (and reliability at `p`) of one supergraph.
struct Exact {
    f: String,
    f_value: f64,
    r: Option<f64>,
}

pub fn recommend(args: &RecommendArgs) -> Outcome {
    if let Some(p) = args.p {
        if !(0.0..=1.0).contains(&p) {
            return Err(usage(format!("--p {p} outside [0, 1]")));
        }
    }
    let mut default: Vec<HeuristicId> = HeuristicId::OPERATIONAL.to_vec();
    if args.seed.is_none() {
        default.retain(|&h| h != HeuristicId::Random);
    }
    let ids = parse_heuristics(&args.heuristics, &default)?;
    if ids.contains(&HeuristicId::Random) && args.seed.is_none() {
        return Err(usage("the random heuristic needs an explicit --seed"));
    }
    if !args.exact && ids.iter().copied().any(needs_scores) {
        return Err(usage("post-hoc heuristics need scores; pass --exact"));
    }
    let g = read_graph(&args.graph)?;
    let data = |e: HeuristicError| Failure::Data(e.into());

    let mut results: Vec<HeuristicResult> = Vec::with_capacity(ids.len());
    for &id in &ids {
        let base = match id {
            HeuristicId::BPostHoc => HeuristicId::Beta,
            HeuristicId::GammaPostHoc => HeuristicId::Gamma,
            other => other,
        };
        results.push(apply(base, &g, args.seed.unwrap_or(0)).map_err(data)?);
    }

    let mut exact: HashMap<_, Exact> = HashMap::new();
    let mut base_exact = None;
    if args.exact {
        let cls = classify_subsets(&g).map_err(reliability_failure)?;
        let score = |prof: &vrel_core::reliability::ReliabilityProfile| Exact {
            f: prof.score().to_string(),
            f_value: to_f64(&prof.score()),
            r: args.p.map(|p| prof.evaluate(p).expect("p checked above")),
        };
        base_exact = Some(score(&count_connected(&cls)));
        let mut scores = HashMap::new();
        for r in &results {
            for e in r.edges() {
                if let Entry::Vacant(slot) = exact.entry(e) {
                    let prof = recount_for_insertion(&g, &cls, e).map_err(reliability_failure)?;
                    scores.insert(e, prof.score());
                    slot.insert(score(&prof));
                }
            }
        }
        for (r, &id) in results.iter_mut().zip(&ids) {
            if id != r.id {
                *r = derive_post_hoc(r, &scores).map_err(data)?;
            }
        }
    }

    match args.format {
        TextFormat::Text => {
            let mut out = format!("graph: n={} m={}\n", g.n(), g.m());
            if let Some(b) = &base_exact {
                let _ = write!(out, "  F={} ({:.6})", b.f, b.f_value);
                if let (Some(r), Some(p)) = (b.r, args.p) {
                    let _ = write!(out, " R({p})={r:.5}");
                }
                out.push('\n');
            }
            for r in &results {
                let _ = writeln!(out, "{} [{}]: {} candidate(s)", r.id, r.id.symbol(), r.len());
                for c in &r.candidates {
                    let _ = write!(out, "  {}  {}", c.edge, c.criterion);
                    if let Some(x) = exact.get(&c.edge) {
                        let _ = write!(out, "  F={} ({:.6})", x.f, x.f_value);
                        if let (Some(v), Some(p)) = (x.r, args.p) {
                            let _ = write!(out, "  R({p})={v:.5}");
                        }
                    }
                    out.push('\n');
                }
            }
            emit(&out);
        }
        TextFormat::Json => {
            let doc = json!({
                "n": g.n(),
                "m": g.m(),
                "seed": args.seed,
                "p": args.p,
                "graph": base_exact.as_ref().map(|b| json!({ "F": b.f, "R": b.r })),
                "heuristics": results.iter().map(|r| json!({
                    "id": r.id,
                    "candidates": r.candidates.iter().map(|c| {
                        let x = exact.get(&c.edge);
                        json!({
                            "i": c.edge.i,
                            "j": c.edge.j,
                            "criterion": c.criterion.to_string(),
                            "F": x.map(|x| x.f.clone()),
                            "R": x.and_then(|x| x.r),
                        })
                    }).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("JSON values serialize")));
        }
    }
    Ok(())
}

/// Writes to stdout, treating a closed pipe (e.g. `| head`) as success.
fn emit(text: &str) {
    use std::io::Write as _;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run_header(command: &str, seed: u64, loaded: &LoadedDataset) -> ReportHeader {
    ReportHeader::new()
        .with("tool", concat!("vrel ", env!("CARGO_PKG_VERSION")))
        .with("command", command)
        .with("seed", seed)
        .with("manifest_hash", loaded.manifest_hash())
        .with("dataset_spec", serde_json::to_string(&loaded.manifest.body.spec).expect("spec serializes"))
        .with("graphs", loaded.graphs.len())
}

fn load(dir: &Path) -> Result<LoadedDataset, Failure> {
    let loaded = load_dataset(dir).map_err(|e| match e {
        DatasetError::Io(_) | DatasetError::Json(_) => {
            Failure::Data(anyhow!(e).context(format!("reading dataset at {}", dir.display())))
        }
        other => dataset_failure(other),
    })?;
    if loaded.graphs.is_empty() {
        return Err(Failure::Data(anyhow!("dataset at {} has no graphs", dir.display())));
    }
    Ok(loaded)
}

pub fn evaluate(args: &EvaluateArgs) -> Outcome {
    let seed = require_seed(args.seed, "evaluate")?;
    let loaded = load(&args.dataset)?;
    let inputs: Vec<GraphInput> = loaded
        .graphs
        .iter()
        .map(|(entry, g)| GraphInput { id: entry.id.clone(), model: entry.model.to_string(), graph: g.clone() })
        .collect();
    let mode = match args.wilcoxon {
        TestMode::Auto => WilcoxonMode::Auto,
        TestMode::Exact => WilcoxonMode::Exact,
        TestMode::Normal => WilcoxonMode::Normal,
    };
    let evals = evaluate_dataset(&inputs, seed, args.jobs).map_err(evaluation_failure)?;
    let summary = summarize(&evals, mode).map_err(evaluation_failure)?;
    let header = run_header("evaluate", seed, &loaded).with("wilcoxon", format!("{:?}", args.wilcoxon).to_lowercase());
    let files = ReportFiles::evaluation(&header, &evals, &summary);

    let best = summary.best();
    println!("{:<14} {:>10} {:>14} {:>10} {:>10}", "heuristic", "insertions", "best (unique)", "MRDI", "SD RDI");
    for r in &summary.rows {
        println!(
            "{:<14} {:>10} {:>14} {:>10.6} {:>10.6}{}",
            format!("{} {}", r.heuristic.symbol(), r.heuristic),
            r.insertions,
            format!("{} ({})", r.best, r.unique),
            to_f64(&r.mrdi),
            r.sd_rdi,
            if best.contains(&r.heuristic) { "  best" } else { "" }
        );
    }
    for t in &summary.tests {
        match (&t.result, t.p_bonferroni) {
            (Some(r), Some(p)) => println!(
                "({}, {}): r={:.4} T*={:.4} p={:.3e} (Bonferroni)",
                t.first.symbol(),
                t.second.symbol(),
                r.r,
                r.t_star,
                p
            ),
            _ => println!("({}, {}): skipped, not enough graphs", t.first.symbol(), t.second.symbol()),
        }
    }
    write_reports(&files, args.format, &args.out)
}

pub fn bench(args: &BenchArgs) -> Outcome {
    let seed = require_seed(args.seed, "bench")?;
    if args.repetitions == 0 {
        return Err(usage("--repetitions must be at least 1"));
    }
    let ids = parse_heuristics(&args.heuristics, &HeuristicId::OPERATIONAL)?;
    if let Some(h) = ids.iter().find(|&&h| needs_scores(h)) {
        return Err(usage(format!("{h} needs scores and cannot be timed on its own")));
    }
    let loaded = load(&args.dataset)?;
    let graphs: Vec<SimpleGraph> = loaded.graphs.iter().map(|(_, g)| g.clone()).collect();
    let table = timing_benchmark(&graphs, &ids, args.repetitions, seed).map_err(evaluation_failure)?;
    println!("{:<12} {:>5} {:>10} {:>10} {:>10} {:>20}", "heuristic", "order", "min ms", "max ms", "median ms", "mean ± SD ms");
    for r in &table.rows {
        println!(
            "{:<12} {:>5} {:>10.4} {:>10.4} {:>10.4} {:>20}",
            format!("{} {}", r.heuristic.symbol(), r.heuristic),
            r.order,
            r.min_ms,
            r.max_ms,
            r.median_ms,
            format!("{:.4} ± {:.4}", r.mean_ms, r.sd_ms)
        );
    }
    let files = ReportFiles::timing(&run_header("bench", seed, &loaded), &table);
    write_reports(&files, args.format, &args.out)
}
