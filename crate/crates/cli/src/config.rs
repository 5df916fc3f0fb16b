use std::fmt;
use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::ValueEnum;
use hurwitz_core::graph::DEFAULT_METRICS_CAP;
use hurwitz_core::word::DEFAULT_ENUMERATION_CAP;
use hurwitz_core::GraphKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
            Format::Text => "text",
        })
    }
}

/// What `enumerate` lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ItemKind {
    Words,
    Trees,
}

impl ItemKind {
    pub fn name(self) -> &'static str {
        match self {
            ItemKind::Words => "words",
            ItemKind::Trees => "trees",
        }
    }
}

/// Graph selector for the command line; mirrors [`GraphKind`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphArg {
    Hurwitz,
    Extended,
    Treegraph,
}

impl From<GraphArg> for GraphKind {
    fn from(g: GraphArg) -> Self {
        match g {
            GraphArg::Hurwitz => GraphKind::Hurwitz,
            GraphArg::Extended => GraphKind::Extended,
            GraphArg::Treegraph => GraphKind::TreeGraph,
        }
    }
}

/// Normalized settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub graph: GraphKind,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub cap: usize,
}

/// Which default cap applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Workload {
    Enumeration,
    Metrics,
}

impl Workload {
    pub fn default_cap(self) -> usize {
        match self {
            Workload::Enumeration => DEFAULT_ENUMERATION_CAP,
            Workload::Metrics => DEFAULT_METRICS_CAP,
        }
    }
}

/// Resolves `--cap`, warning on stderr when it exceeds the default.
pub fn resolve_cap(requested: Option<usize>, workload: Workload) -> usize {
    let default = workload.default_cap();
    match requested {
        Some(cap) if cap > default => {
            eprintln!(
                "warning: cap raised to {cap} (default {default}); F_n has n^(n-2) elements and memory grows accordingly"
            );
            cap
        }
        Some(cap) => cap,
        None => default,
    }
}

impl RunConfig {
    pub fn new(n: usize, graph: GraphKind, format: Format, cache_dir: Option<PathBuf>, cap: usize) -> Result<Self> {
        if n == 0 {
            bail!("--n must be at least 1");
        }
        if n > cap {
            bail!("n = {n} exceeds the cap {cap}; pass --cap {n} to override");
        }
        Ok(Self {
            n,
            graph,
            format,
            cache_dir,
            cap,
        })
    }
}
