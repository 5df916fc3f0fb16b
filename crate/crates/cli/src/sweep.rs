//! All-eccentricity sweeps with one BFS per source spread over a thread pool.

use std::collections::BTreeMap;

use hurwitz_core::graph::{eccentricity, GraphHandle, MetricsReport};
use hurwitz_core::{GraphKind, Result};
use rayon::prelude::*;
use serde::Serialize;

/// Same result as [`hurwitz_core::metrics`], computed in parallel. Output
/// order does not depend on scheduling.
pub fn par_metrics(g: &GraphHandle) -> Result<MetricsReport> {
    let ecc = (0..g.vertex_count())
        .into_par_iter()
        .map(|v| eccentricity(g, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(MetricsReport::from_eccentricities(g.kind(), g.n(), ecc))
}

/// The JSON shape printed by `metrics`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricsSummary {
    pub kind: GraphKind,
    pub n: usize,
    pub radius: u32,
    pub diameter: u32,
    pub center_size: usize,
    pub ecc_histogram: BTreeMap<u32, usize>,
}

impl From<&MetricsReport> for MetricsSummary {
    fn from(m: &MetricsReport) -> Self {
        Self {
            kind: m.kind,
            n: m.n,
            radius: m.radius,
            diameter: m.diameter,
            center_size: m.center.len(),
            ecc_histogram: m.ecc_histogram(),
        }
    }
}
