//! CSV and JSON report files.
//!
//! Every file opens with `# key: value` lines carrying the run
//! configuration, so a table can be traced back to its inputs.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use super::{to_f64, GraphEvaluation, Summary, TimingTable};

/// Ordered configuration lines shared by all files of one run.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ReportHeader {
    entries: Vec<(String, String)>,
}

impl ReportHeader {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn render(&self) -> String {
        self.entries.iter().map(|(k, v)| format!("# {k}: {}\n", v.replace('\n', " "))).collect()
    }

    fn to_json(&self) -> Value {
        Value::Object(self.entries.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect())
    }
}

fn table(header: &ReportHeader, columns: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(header.render().into_bytes());
    w.write_record(columns).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
}

/// Named file contents, written together into one directory.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ReportFiles {
    pub files: Vec<(String, String)>,
}

impl ReportFiles {
    pub fn get(&self, name: &str) -> Option<&str> {
        self.files.iter().find(|(n, _)| n == name).map(|(_, c)| c.as_str())
    }

    pub fn write_all(&self, dir: &Path) -> std::io::Result<Vec<PathBuf>> {
        fs::create_dir_all(dir)?;
        self.files
            .iter()
            .map(|(name, contents)| {
                let path = dir.join(name);
                fs::write(&path, contents)?;
                Ok(path)
            })
            .collect()
    }

    /// Summary, per-insertion RDI, tests, and a JSON bundle of all three.
    pub fn evaluation(header: &ReportHeader, evals: &[GraphEvaluation], summary: &Summary) -> Self {
        let header = header.clone().with(
            "sd_note",
            "sd_rdi is the population SD over per-insertion RDIs; sd_graph_rdi is over per-graph heuristic RDIs",
        );
        let best = summary.best();
        let summary_rows: Vec<Vec<String>> = summary
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.heuristic.to_string(),
                    r.heuristic.symbol().to_string(),
                    r.insertions.to_string(),
                    r.best.to_string(),
                    r.unique.to_string(),
                    format!("{:.6}", to_f64(&r.mrdi)),
                    r.mrdi.to_string(),
                    format!("{:.6}", r.sd_rdi),
                    format!("{:.6}", r.sd_graph_rdi),
                    if best.contains(&r.heuristic) { "best".into() } else { String::new() },
                ]
            })
            .collect();
        let summary_csv = table(
            &header,
            &["heuristic", "symbol", "insertions", "best", "unique", "mrdi", "mrdi_exact", "sd_rdi", "sd_graph_rdi", "flag"],
            summary_rows,
        );

        let mut rdi_rows = Vec::new();
        for e in evals {
            for rec in &e.records {
                for s in &rec.insertions {
                    rdi_rows.push(vec![
                        e.id.clone(),
                        e.model.clone(),
                        e.order.to_string(),
                        rec.heuristic.to_string(),
                        s.edge.i.to_string(),
                        s.edge.j.to_string(),
                        s.f.to_string(),
                        e.f_best.to_string(),
                        e.f_worst.to_string(),
                        s.rdi.to_string(),
                        format!("{:.6}", to_f64(&s.rdi)),
                        rec.rdi.to_string(),
                    ]);
                }
            }
        }
        let rdi_csv = table(
            &header,
            &["graph", "model", "order", "heuristic", "i", "j", "F", "F_B", "F_W", "rdi", "rdi_float", "heuristic_rdi"],
            rdi_rows,
        );

        let test_rows = summary
            .tests
            .iter()
            .map(|t| {
                let mut row = vec![t.first.to_string(), t.second.to_string()];
                match (&t.result, t.p_bonferroni) {
                    (Some(r), Some(adj)) => row.extend([
                        r.n.to_string(),
                        r.w_plus.to_string(),
                        format!("{:.4}", r.t_star),
                        format!("{:e}", r.p),
                        format!("{:e}", adj),
                        format!("{:.4}", r.r),
                        if r.exact { "exact" } else { "normal" }.to_string(),
                    ]),
                    _ => row.extend(["0", "", "", "", "", "", "skipped"].map(String::from)),
                }
                row
            })
            .collect();
        let tests_csv = table(
            &header.clone().with("alternative", "per-graph RDI of the second heuristic exceeds that of the first"),
            &["first", "second", "n", "w_plus", "t_star", "p", "p_bonferroni", "r", "method"],
            test_rows,
        );

        let bundle = json!({
            "config": header.to_json(),
            "graphs": summary.graphs,
            "summary": summary.rows.iter().map(|r| json!({
                "heuristic": r.heuristic,
                "insertions": r.insertions,
                "best": r.best,
                "unique": r.unique,
                "mrdi": r.mrdi.to_string(),
                "mrdi_float": to_f64(&r.mrdi),
                "sd_rdi": r.sd_rdi,
                "sd_graph_rdi": r.sd_graph_rdi,
                "flag_best": best.contains(&r.heuristic),
            })).collect::<Vec<_>>(),
            "tests": summary.tests.iter().map(|t| json!({
                "first": t.first,
                "second": t.second,
                "result": t.result,
                "p_bonferroni": t.p_bonferroni,
            })).collect::<Vec<_>>(),
        });

        ReportFiles {
            files: vec![
                ("summary.csv".into(), summary_csv),
                ("rdi.csv".into(), rdi_csv),
                ("tests.csv".into(), tests_csv),
                ("report.json".into(), pretty(&bundle)),
            ],
        }
    }

    /// Timing table plus its JSON form.
    pub fn timing(header: &ReportHeader, timing: &TimingTable) -> Self {
        let header = header.clone().with("repetitions", timing.repetitions);
        let rows = timing
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.heuristic.to_string(),
                    r.heuristic.symbol().to_string(),
                    r.order.to_string(),
                    r.graphs.to_string(),
                    format!("{:.6}", r.min_ms),
                    format!("{:.6}", r.max_ms),
                    format!("{:.6}", r.median_ms),
                    format!("{:.6}", r.mean_ms),
                    format!("{:.6}", r.sd_ms),
                ]
            })
            .collect();
        let csv = table(
            &header,
            &["heuristic", "symbol", "order", "graphs", "min_ms", "max_ms", "median_ms", "mean_ms", "sd_ms"],
            rows,
        );
        let bundle = json!({ "config": header.to_json(), "timing": timing });
        ReportFiles { files: vec![("timing.csv".into(), csv), ("timing.json".into(), pretty(&bundle))] }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evaluation::{evaluate_dataset, summarize, timing_benchmark, GraphInput, WilcoxonMode};
    use crate::graph::fixtures::*;
    use crate::heuristics::HeuristicId;

    fn header() -> ReportHeader {
        ReportHeader::new().with("seed", 7).with("manifest_hash", "abc")
    }

    #[test]
    fn evaluation_files() {
        let inputs: Vec<GraphInput> = [p(5), star(4), petersen()]
            .into_iter()
            .enumerate()
            .map(|(k, graph)| GraphInput { id: format!("g{k}"), model: "er".into(), graph })
            .collect();
        let evals = evaluate_dataset(&inputs, 7, 0).unwrap();
        let summary = summarize(&evals, WilcoxonMode::Auto).unwrap();
        let files = ReportFiles::evaluation(&header(), &evals, &summary);
        let s = files.get("summary.csv").unwrap();
        assert!(s.starts_with("# seed: 7\n# manifest_hash: abc\n"));
        let body: Vec<&str> = s.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(body.len(), 1 + HeuristicId::ALL.len());
        assert!(body[0].starts_with("heuristic,symbol,insertions"));
        assert!(body.iter().any(|l| l.ends_with(",best")));
        let rdi = files.get("rdi.csv").unwrap();
        assert!(rdi.lines().any(|l| l.starts_with("g0,er,5,alpha,")));
        assert_eq!(files.get("tests.csv").unwrap().lines().filter(|l| l.starts_with("phi-cap,")).count(), 2);
        let json: Value = serde_json::from_str(files.get("report.json").unwrap()).unwrap();
        assert_eq!(json["config"]["seed"], "7");
        assert_eq!(json["summary"].as_array().unwrap().len(), HeuristicId::ALL.len());

        // Rebuilding from the same inputs gives identical bytes.
        let again = ReportFiles::evaluation(&header(), &evaluate_dataset(&inputs, 7, 2).unwrap(), &summary);
        assert_eq!(again, files);

        let dir = tempfile::tempdir().unwrap();
        let written = files.write_all(dir.path()).unwrap();
        assert_eq!(written.len(), 4);
        assert_eq!(fs::read_to_string(&written[0]).unwrap(), s);
    }

    #[test]
    fn timing_files() {
        let t = timing_benchmark(&[c5(), petersen()], &[HeuristicId::Gamma], 1, 0).unwrap();
        let files = ReportFiles::timing(&header(), &t);
        let csv = files.get("timing.csv").unwrap();
        assert!(csv.contains("# repetitions: 1\n"));
        assert_eq!(csv.lines().filter(|l| l.starts_with("gamma,")).count(), 2);
        assert!(files.get("timing.json").is_some());
    }
}
