//! Subcommand bodies. Each writes its whole result to one writer.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use hurwitz_core::graph::{bfs_distance, bfs_path, build_graph, path_moves, GraphHandle};
use hurwitz_core::verify::{verify_with, MetricsFn, Theorem, TheoremReport};
use hurwitz_core::word::is_fn_word;
use hurwitz_core::{GeometricTree, GraphKind, TranspositionWord};
use serde_json::json;

use crate::cache::load_or_enumerate;
use crate::config::{resolve_cap, Format, ItemKind, RunConfig, Workload};
use crate::export::{eccentricity_csv, graph_dot, tree_dot};
use crate::sweep::{par_metrics, MetricsSummary};

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// A theorem check found a counterexample.
    Fail,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
        }
    }
}

pub fn enumerate(cfg: &RunConfig, kind: ItemKind, out: &mut dyn Write) -> Result<Outcome> {
    let (items, _) = load_or_enumerate(cfg.cache_dir.as_deref(), kind, cfg.n, cfg.cap)?;
    match cfg.format {
        Format::Text => {
            for item in &items {
                writeln!(out, "{item}")?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string(&items)?)?,
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record([match kind {
                ItemKind::Words => "word",
                ItemKind::Trees => "tree",
            }])?;
            for item in &items {
                w.write_record([item])?;
            }
            out.write_all(&w.into_inner()?)?;
        }
        Format::Dot => bail!("enumerate supports text, json and csv output"),
    }
    Ok(Outcome::Pass)
}

pub fn metrics(cfg: &RunConfig, out: &mut dyn Write) -> Result<Outcome> {
    let g = build_graph(cfg.graph, cfg.n, cfg.cap)?;
    let m = par_metrics(&g)?;
    match cfg.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&MetricsSummary::from(&m))?)?,
        Format::Csv => out.write_all(eccentricity_csv(&g, &m)?.as_bytes())?,
        Format::Text => {
            let s = MetricsSummary::from(&m);
            writeln!(out, "kind: {}", s.kind)?;
            writeln!(out, "n: {}", s.n)?;
            writeln!(out, "vertices: {}", g.vertex_count())?;
            writeln!(out, "edges: {}", g.edge_count())?;
            writeln!(out, "radius: {}", s.radius)?;
            writeln!(out, "diameter: {}", s.diameter)?;
            writeln!(out, "center_size: {}", s.center_size)?;
            let hist: Vec<String> = s.ecc_histogram.iter().map(|(e, c)| format!("{e}:{c}")).collect();
            writeln!(out, "ecc_histogram: {}", hist.join(" "))?;
        }
        Format::Dot => bail!("metrics supports json, csv and text output; use `export` for DOT"),
    }
    Ok(Outcome::Pass)
}

/// `all` or one registered name.
pub fn parse_theorems(name: &str) -> Result<Vec<Theorem>> {
    if name == "all" {
        return Ok(Theorem::ALL.to_vec());
    }
    let known: Vec<&str> = Theorem::ALL.iter().map(|t| t.name()).collect();
    match name.parse::<Theorem>() {
        Ok(t) => Ok(vec![t]),
        Err(e) => bail!("{e}; registered names: all, {}", known.join(", ")),
    }
}

pub fn verify(theorems: &[Theorem], n: usize, cap: usize, format: Format, out: &mut dyn Write) -> Result<Outcome> {
    verify_using(theorems, n, cap, format, &par_metrics, out)
}

/// [`verify`] with an explicit eccentricity routine.
pub fn verify_using(
    theorems: &[Theorem],
    n: usize,
    cap: usize,
    format: Format,
    metrics_fn: MetricsFn<'_>,
    out: &mut dyn Write,
) -> Result<Outcome> {
    let mut outcome = Outcome::Pass;
    for &t in theorems {
        let report: TheoremReport = verify_with(t, n, cap, metrics_fn)?;
        if !report.passed {
            outcome = Outcome::Fail;
        }
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
            Format::Text => {
                let facts: Vec<String> = report.facts.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let verdict = if report.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict} {} n={} {}", report.theorem, report.n, facts.join(" "))?;
                if let Some(c) = &report.counterexample {
                    writeln!(out, "  counterexample: {c}")?;
                }
            }
            Format::Csv | Format::Dot => bail!("verify supports json and text output"),
        }
    }
    Ok(outcome)
}

/// The cap a verification run needs by default.
pub fn verify_workload(theorems: &[Theorem]) -> Workload {
    if theorems.iter().any(|t| t.needs_metrics()) {
        Workload::Metrics
    } else {
        Workload::Enumeration
    }
}

fn parse_word(text: &str, n: Option<usize>, flag: &str) -> Result<TranspositionWord> {
    let w = match n {
        Some(n) => TranspositionWord::parse(text, n),
        None => TranspositionWord::parse_infer(text),
    }
    .with_context(|| format!("{flag}: cannot parse `{text}`"))?;
    if !is_fn_word(&w) {
        bail!(
            "{flag}: `{text}` is not a factorization of the long cycle on {} points (product {})",
            w.n(),
            w.product()
        );
    }
    Ok(w)
}

fn parse_tree(text: &str, n: Option<usize>, flag: &str) -> Result<GeometricTree> {
    let t = match n {
        Some(n) => GeometricTree::parse(text, n),
        None => GeometricTree::parse_infer(text),
    }
    .with_context(|| format!("{flag}: cannot parse `{text}`"))?;
    if !t.spans_ground_set() {
        bail!("{flag}: `{text}` does not span all {} points", t.n());
    }
    Ok(t)
}

/// A parsed endpoint of a distance query.
enum Endpoint {
    Word(TranspositionWord),
    Tree(GeometricTree),
}

impl Endpoint {
    fn parse(kind: GraphKind, text: &str, n: Option<usize>, flag: &str) -> Result<Self> {
        Ok(if kind.has_word_vertices() {
            Endpoint::Word(parse_word(text, n, flag)?)
        } else {
            Endpoint::Tree(parse_tree(text, n, flag)?)
        })
    }

    fn n(&self) -> usize {
        match self {
            Endpoint::Word(w) => w.n(),
            Endpoint::Tree(t) => t.n(),
        }
    }

    fn id(&self, g: &GraphHandle) -> Result<usize> {
        Ok(match self {
            Endpoint::Word(w) => g.id_of_word(w)?,
            Endpoint::Tree(t) => g.id_of_tree(t)?,
        })
    }
}

#[allow(clippy::too_many_arguments)]
pub fn distance(
    kind: GraphKind,
    n: Option<usize>,
    from: &str,
    to: &str,
    with_path: bool,
    format: Format,
    cap: Option<usize>,
    out: &mut dyn Write,
) -> Result<Outcome> {
    let a = Endpoint::parse(kind, from, n, "--from")?;
    let b = Endpoint::parse(kind, to, n, "--to")?;
    if a.n() != b.n() {
        bail!("--from has {} points but --to has {}", a.n(), b.n());
    }
    let cfg = RunConfig::new(a.n(), kind, format, None, resolve_cap(cap, Workload::Enumeration))?;
    let g = build_graph(kind, cfg.n, cfg.cap)?;
    let (u, v) = (a.id(&g)?, b.id(&g)?);
    let d = bfs_distance(&g, u, v)?;
    let steps: Vec<serde_json::Value> = if with_path {
        let path = bfs_path(&g, u, v)?;
        if kind.has_word_vertices() {
            path_moves(&g, &path)?
                .iter()
                .map(serde_json::to_value)
                .collect::<Result<_, _>>()?
        } else {
            path.iter().map(|&id| json!(g.label(id))).collect()
        }
    } else {
        Vec::new()
    };
    match format {
        Format::Text => {
            writeln!(out, "{d}")?;
            for s in &steps {
                match s.as_str() {
                    Some(tree) => writeln!(out, "{tree}")?,
                    None => writeln!(out, "{}", serde_json::to_string(s)?)?,
                }
            }
        }
        Format::Json => {
            let mut doc = json!({ "graph": kind, "n": cfg.n, "distance": d });
            if with_path {
                doc["path"] = serde_json::Value::Array(steps);
            }
            writeln!(out, "{}", serde_json::to_string(&doc)?)?;
        }
        Format::Csv | Format::Dot => bail!("distance supports text and json output"),
    }
    Ok(Outcome::Pass)
}

/// What `export` renders.
pub enum ExportSource {
    Graph(GraphKind, usize),
    Tree(String),
}

pub fn export(
    source: &ExportSource,
    format: Format,
    cap: Option<usize>,
    dest: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<Outcome> {
    let body = match (source, format) {
        (ExportSource::Tree(text), Format::Dot) => tree_dot(&parse_tree(text, None, "--tree")?),
        (ExportSource::Tree(_), _) => bail!("trees export as dot only"),
        (ExportSource::Graph(kind, n), Format::Dot) => {
            let cfg = RunConfig::new(*n, *kind, format, None, resolve_cap(cap, Workload::Enumeration))?;
            graph_dot(&build_graph(*kind, cfg.n, cfg.cap)?)
        }
        (ExportSource::Graph(kind, n), Format::Csv) => {
            let cfg = RunConfig::new(*n, *kind, format, None, resolve_cap(cap, Workload::Metrics))?;
            let g = build_graph(*kind, cfg.n, cfg.cap)?;
            eccentricity_csv(&g, &par_metrics(&g)?)?
        }
        (ExportSource::Graph(..), _) => bail!("graphs export as dot or csv"),
    };
    match dest {
        Some(path) => fs::write(path, body).with_context(|| format!("cannot write {}", path.display()))?,
        None => stdout.write_all(body.as_bytes())?,
    }
    Ok(Outcome::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hurwitz_core::graph::MetricsReport;

    #[test]
    fn failing_check_maps_to_exit_one() {
        // a sweep that reports every eccentricity one too large
        let lying = |g: &GraphHandle| -> hurwitz_core::Result<MetricsReport> {
            let m = hurwitz_core::metrics(g)?;
            let ecc = m.eccentricities.iter().map(|e| e + 1).collect();
            Ok(MetricsReport::from_eccentricities(m.kind, m.n, ecc))
        };
        let mut out = Vec::new();
        let outcome = verify_using(&[Theorem::HurwitzRadius], 4, 7, Format::Json, &lying, &mut out).unwrap();
        assert_eq!(outcome, Outcome::Fail);
        assert_eq!(outcome.exit_code(), 1);
        let report: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(report["passed"], false);
        assert_eq!(report["counterexample"], "radius 4");
    }

    #[test]
    fn theorem_names() {
        assert_eq!(parse_theorems("all").unwrap().len(), Theorem::ALL.len());
        assert!(parse_theorems("bogus")
            .unwrap_err()
            .to_string()
            .contains("unknown theorem"));
    }
}
