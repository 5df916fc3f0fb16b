//! The Hurwitz graph, the extended Hurwitz graph and the geometric tree
//! graph, with exact BFS metrics.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moves::{elementary_moves, extended_moves, MoveRecord};
use crate::perm::{Label, Transposition};
use crate::tree::{edges_cross, enumerate_noncrossing_trees, gamma, GeometricTree};
use crate::word::{enumerate_fn, TranspositionWord};

/// Default largest `n` for full metric sweeps.
pub const DEFAULT_METRICS_CAP: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Hurwitz,
    Extended,
    #[serde(rename = "treegraph")]
    TreeGraph,
}

impl GraphKind {
    pub const ALL: [GraphKind; 3] = [Self::Hurwitz, Self::Extended, Self::TreeGraph];

    pub fn name(self) -> &'static str {
        match self {
            Self::Hurwitz => "hurwitz",
            Self::Extended => "extended",
            Self::TreeGraph => "treegraph",
        }
    }

    pub fn has_word_vertices(self) -> bool {
        !matches!(self, Self::TreeGraph)
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse {
                item: 1,
                reason: format!("unknown graph kind `{s}`"),
            })
    }
}

/// A materialized graph with dense vertex ids.
///
/// Word vertices are keyed by their exact letter sequence, tree vertices by
/// their sorted edge list. Ids follow the canonical enumeration order.
#[derive(Debug, Clone)]
pub struct GraphHandle {
    kind: GraphKind,
    n: usize,
    keys: Vec<Vec<Transposition>>,
    index: BTreeMap<Vec<Transposition>, usize>,
    adjacency: Vec<Vec<usize>>,
}

impl GraphHandle {
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.keys.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adjacency[id]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    /// Letters of a word vertex, or sorted edges of a tree vertex.
    pub fn key(&self, id: usize) -> &[Transposition] {
        &self.keys[id]
    }

    pub fn word(&self, id: usize) -> Option<TranspositionWord> {
        (self.kind.has_word_vertices() && id < self.keys.len())
            .then(|| TranspositionWord::from_trusted(self.n, self.keys[id].clone()))
    }

    pub fn tree(&self, id: usize) -> Option<GeometricTree> {
        if self.kind.has_word_vertices() || id >= self.keys.len() {
            return None;
        }
        GeometricTree::spanning(self.n, self.keys[id].clone()).ok()
    }

    /// Text form of a vertex, `"a-b,c-d"`.
    pub fn label(&self, id: usize) -> alloc::string::String {
        let mut s = alloc::string::String::new();
        for (i, t) in self.keys[id].iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&t.to_string());
        }
        s
    }

    pub fn id_of_key(&self, key: &[Transposition]) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn id_of_word(&self, w: &TranspositionWord) -> Result<usize> {
        if !self.kind.has_word_vertices() || w.n() != self.n {
            return Err(Error::UnknownVertex(w.to_string()));
        }
        self.id_of_key(w.letters())
            .ok_or_else(|| Error::UnknownVertex(w.to_string()))
    }

    pub fn id_of_tree(&self, t: &GeometricTree) -> Result<usize> {
        if self.kind.has_word_vertices() || t.n() != self.n {
            return Err(Error::UnknownVertex(t.to_string()));
        }
        self.id_of_key(t.edges())
            .ok_or_else(|| Error::UnknownVertex(t.to_string()))
    }

    fn check_id(&self, id: usize) -> Result<()> {
        if id < self.keys.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{id}")))
        }
    }
}

/// Builds one of the three graphs on all of its vertices.
pub fn build_graph(kind: GraphKind, n: usize, cap: usize) -> Result<GraphHandle> {
    let keys: Vec<Vec<Transposition>> = match kind {
        GraphKind::Hurwitz | GraphKind::Extended => enumerate_fn(n, cap)?
            .into_iter()
            .map(TranspositionWord::into_letters)
            .collect(),
        GraphKind::TreeGraph => enumerate_noncrossing_trees(n, cap)?
            .into_iter()
            .map(|t| t.edges().to_vec())
            .collect(),
    };
    let index: BTreeMap<Vec<Transposition>, usize> = keys.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();

    let mut adjacency = Vec::with_capacity(keys.len());
    for (id, key) in keys.iter().enumerate() {
        let images: Vec<Vec<Transposition>> = match kind {
            GraphKind::Hurwitz => {
                let w = TranspositionWord::from_trusted(n, key.clone());
                elementary_moves(&w).into_iter().map(|m| m.3.into_letters()).collect()
            }
            GraphKind::Extended => {
                let w = TranspositionWord::from_trusted(n, key.clone());
                extended_moves(&w).into_iter().map(|m| m.3.into_letters()).collect()
            }
            GraphKind::TreeGraph => edge_swaps(n, key),
        };
        let mut nbrs = Vec::with_capacity(images.len());
        for image in images {
            let other = *index
                .get(&image)
                .ok_or_else(|| Error::Internal(format!("move left the vertex set: {image:?}")))?;
            if other != id {
                nbrs.push(other);
            }
        }
        nbrs.sort_unstable();
        nbrs.dedup();
        adjacency.push(nbrs);
    }
    Ok(GraphHandle {
        kind,
        n,
        keys,
        index,
        adjacency,
    })
}

/// Every non-crossing spanning tree `T - e + f` with `f ≠ e`, as sorted edge
/// lists.
pub fn edge_swaps(n: usize, edges: &[Transposition]) -> Vec<Vec<Transposition>> {
    let mut out = Vec::new();
    for (skip, &removed) in edges.iter().enumerate() {
        let rest: Vec<Transposition> = edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &e)| e)
            .collect();
        // side[v] is true for the component holding removed.a()
        let mut side = vec![false; n + 1];
        side[removed.a() as usize] = true;
        let mut queue = VecDeque::from([removed.a()]);
        while let Some(v) = queue.pop_front() {
            for u in rest.iter().filter_map(|e| e.other(v)) {
                if !side[u as usize] {
                    side[u as usize] = true;
                    queue.push_back(u);
                }
            }
        }
        for x in 1..=n as Label {
            for y in x + 1..=n as Label {
                if side[x as usize] == side[y as usize] {
                    continue;
                }
                let added = Transposition::of(x, y);
                if added == removed || rest.iter().any(|&e| edges_cross(e, added)) {
                    continue;
                }
                let mut swapped = rest.clone();
                let at = swapped.partition_point(|&e| e < added);
                swapped.insert(at, added);
                out.push(swapped);
            }
        }
    }
    out
}

/// Sentinel for unreachable vertices in [`bfs_distances`].
pub const UNREACHABLE: u32 = u32::MAX;

/// Distances from `source` to every vertex.
pub fn bfs_distances(g: &GraphHandle, source: usize) -> Result<Vec<u32>> {
    g.check_id(source)?;
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v] + 1;
        for &u in &g.adjacency[v] {
            if dist[u] == UNREACHABLE {
                dist[u] = d;
                queue.push_back(u);
            }
        }
    }
    Ok(dist)
}

pub fn bfs_distance(g: &GraphHandle, u: usize, v: usize) -> Result<u32> {
    g.check_id(v)?;
    let d = bfs_distances(g, u)?[v];
    if d == UNREACHABLE {
        Err(Error::Disconnected)
    } else {
        Ok(d)
    }
}

/// A shortest path `u = p_0, ..., p_d = v`; ties go to the smaller id.
pub fn bfs_path(g: &GraphHandle, u: usize, v: usize) -> Result<Vec<usize>> {
    g.check_id(u)?;
    g.check_id(v)?;
    let mut parent = vec![usize::MAX; g.vertex_count()];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &y in &g.adjacency[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if parent[v] == usize::MAX {
        return Err(Error::Disconnected);
    }
    let mut path = vec![v];
    let mut x = v;
    while x != u {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    Ok(path)
}

/// Largest distance from `source`; fails on a disconnected graph.
pub fn eccentricity(g: &GraphHandle, source: usize) -> Result<u32> {
    let dist = bfs_distances(g, source)?;
    let max = dist.iter().copied().max().unwrap_or(0);
    if max == UNREACHABLE {
        Err(Error::Disconnected)
    } else {
        Ok(max)
    }
}

/// Exact eccentricities with the derived radius, diameter and center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub kind: GraphKind,
    pub n: usize,
    pub radius: u32,
    pub diameter: u32,
    pub center: Vec<usize>,
    pub eccentricities: Vec<u32>,
}

impl MetricsReport {
    /// Assembles a report from per-vertex eccentricities, however computed.
    pub fn from_eccentricities(kind: GraphKind, n: usize, eccentricities: Vec<u32>) -> Self {
        let radius = eccentricities.iter().copied().min().unwrap_or(0);
        let diameter = eccentricities.iter().copied().max().unwrap_or(0);
        let center = eccentricities
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e == radius)
            .map(|(i, _)| i)
            .collect();
        Self {
            kind,
            n,
            radius,
            diameter,
            center,
            eccentricities,
        }
    }

    pub fn is_central(&self, id: usize) -> Result<bool> {
        self.eccentricities
            .get(id)
            .map(|&e| e == self.radius)
            .ok_or_else(|| Error::UnknownVertex(format!("#{id}")))
    }

    /// Eccentricity value to number of vertices attaining it.
    pub fn ecc_histogram(&self) -> BTreeMap<u32, usize> {
        let mut hist = BTreeMap::new();
        for &e in &self.eccentricities {
            *hist.entry(e).or_insert(0) += 1;
        }
        hist
    }
}

/// Eccentricities by one BFS per vertex.
pub fn metrics(g: &GraphHandle) -> Result<MetricsReport> {
    let ecc = (0..g.vertex_count())
        .map(|v| eccentricity(g, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(MetricsReport::from_eccentricities(g.kind, g.n, ecc))
}

pub fn is_central(g: &GraphHandle, v: usize) -> Result<bool> {
    g.check_id(v)?;
    metrics(g)?.is_central(v)
}

/// The move of the given graph kind taking `from` to `to`, if any.
pub fn find_move(kind: GraphKind, from: &TranspositionWord, to: &TranspositionWord) -> Option<MoveRecord> {
    let candidates = match kind {
        GraphKind::Hurwitz => elementary_moves(from),
        GraphKind::Extended => extended_moves(from),
        GraphKind::TreeGraph => return None,
    };
    candidates
        .into_iter()
        .find(|(_, _, _, image)| image == to)
        .map(|(kind, i, j, after)| MoveRecord {
            kind,
            i,
            j,
            before: from.clone(),
            after,
        })
}

/// Replayable moves along a word path of a Hurwitz-type graph.
pub fn path_moves(g: &GraphHandle, path: &[usize]) -> Result<Vec<MoveRecord>> {
    let kind = g.kind();
    path.windows(2)
        .enumerate()
        .map(|(step, pair)| {
            let (a, b) = (
                g.word(pair[0]).ok_or(Error::UnknownVertex(format!("#{}", pair[0])))?,
                g.word(pair[1]).ok_or(Error::UnknownVertex(format!("#{}", pair[1])))?,
            );
            find_move(kind, &a, &b).ok_or(Error::NotAdjacent {
                step: step + 1,
                next: step + 2,
            })
        })
        .collect()
}

/// Images under `Γ` of a path in the extended Hurwitz graph, with repeated
/// consecutive trees collapsed. Consecutive trees are equal-or-adjacent.
pub fn project_path_to_treegraph(path: &[TranspositionWord]) -> Result<Vec<GeometricTree>> {
    for (step, pair) in path.windows(2).enumerate() {
        if find_move(GraphKind::Extended, &pair[0], &pair[1]).is_none() || pair[0] == pair[1] {
            return Err(Error::NotAdjacent {
                step: step + 1,
                next: step + 2,
            });
        }
    }
    let mut out: Vec<GeometricTree> = Vec::with_capacity(path.len());
    for w in path {
        let t = gamma(w).into_tree()?;
        if out.last() != Some(&t) {
            out.push(t);
        }
    }
    Ok(out)
}

/// Whether two spanning trees differ by exactly one edge swap.
pub fn trees_adjacent(a: &GeometricTree, b: &GeometricTree) -> bool {
    a.n() == b.n() && a.edges().len() == b.edges().len() && a.edges().iter().filter(|e| !b.has_edge(**e)).count() == 1
}
