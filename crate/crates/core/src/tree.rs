//! Geometric graphs on points labelled clockwise around a circle.
//!
//! Vertices are a subset of `[n]` in convex position; an edge is stored as a
//! [`Transposition`]. Crossing, boundary adjacency and the cyclic orders
//! `<_k` are all computed from labels alone.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::{Label, Transposition, MAX_N};
use crate::word::{all_transpositions, parse_letters, TranspositionWord};

/// Position of `x` in the rotation of `[n]` that starts at `k`.
#[inline]
pub fn cyclic_rank(n: usize, k: Label, x: Label) -> usize {
    (x as usize + n - k as usize) % n
}

/// `a <_k b`: `a` comes strictly before `b` in `k, k+1, ..., n, 1, ..., k-1`.
#[inline]
pub fn cyclic_less(n: usize, k: Label, a: Label, b: Label) -> bool {
    cyclic_rank(n, k, a) < cyclic_rank(n, k, b)
}

/// Two chords cross iff they are disjoint and their endpoints interleave.
pub fn edges_cross(e: Transposition, f: Transposition) -> bool {
    if e.moves(f.a()) || e.moves(f.b()) {
        return false;
    }
    let inside = |x: Label| e.a() < x && x < e.b();
    inside(f.a()) != inside(f.b())
}

/// A graph whose vertices are a subset of `[n]` drawn clockwise on a circle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeometricGraph {
    n: usize,
    vertices: Vec<Label>,
    edges: Vec<Transposition>,
}

impl GeometricGraph {
    pub fn new(n: usize, mut vertices: Vec<Label>, mut edges: Vec<Transposition>) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::InvalidSize(n));
        }
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(&v) = vertices.iter().find(|&&v| v == 0 || v as usize > n) {
            return Err(Error::LabelOutOfRange { label: v as usize, n });
        }
        edges.sort_unstable();
        edges.dedup();
        for e in &edges {
            for x in [e.a(), e.b()] {
                if vertices.binary_search(&x).is_err() {
                    return Err(Error::NotATree(format!("edge {e} leaves the vertex set")));
                }
            }
        }
        Ok(Self { n, vertices, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Transposition] {
        &self.edges
    }

    pub fn has_edge(&self, e: Transposition) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degree(&self, v: Label) -> usize {
        self.edges.iter().filter(|e| e.moves(v)).count()
    }

    pub fn neighbors(&self, v: Label) -> Vec<Label> {
        self.edges.iter().filter_map(|e| e.other(v)).collect()
    }

    pub fn is_noncrossing(&self) -> bool {
        self.edges
            .iter()
            .enumerate()
            .all(|(i, &e)| self.edges[i + 1..].iter().all(|&f| !edges_cross(e, f)))
    }

    pub fn is_connected(&self) -> bool {
        let Some(&root) = self.vertices.first() else {
            return true;
        };
        let mut seen = vec![false; self.n + 1];
        seen[root as usize] = true;
        let mut queue = VecDeque::from([root]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        reached == self.vertices.len()
    }

    pub fn is_noncrossing_tree(&self) -> bool {
        !self.vertices.is_empty()
            && self.edges.len() + 1 == self.vertices.len()
            && self.is_connected()
            && self.is_noncrossing()
    }

    pub fn into_tree(self) -> Result<GeometricTree> {
        GeometricTree::from_graph(self)
    }
}

/// The geometric tree map: the graph on `[n]` whose edges are the letters
/// of `w`. Letter order and repetitions are forgotten.
pub fn gamma(w: &TranspositionWord) -> GeometricGraph {
    let n = w.n();
    let mut edges = w.letters().to_vec();
    edges.sort_unstable();
    edges.dedup();
    GeometricGraph {
        n,
        vertices: (1..=n as Label).collect(),
        edges,
    }
}

/// A non-crossing spanning tree of its vertex set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeometricTree {
    graph: GeometricGraph,
}

impl GeometricTree {
    pub fn from_graph(graph: GeometricGraph) -> Result<Self> {
        if graph.vertices.is_empty() {
            return Err(Error::NotATree(String::from("empty vertex set")));
        }
        if graph.edges.len() + 1 != graph.vertices.len() {
            return Err(Error::NotATree(format!(
                "{} edges on {} vertices",
                graph.edges.len(),
                graph.vertices.len()
            )));
        }
        if !graph.is_connected() {
            return Err(Error::NotATree(String::from("disconnected")));
        }
        for (i, &e) in graph.edges.iter().enumerate() {
            if let Some(&f) = graph.edges[i + 1..].iter().find(|&&f| edges_cross(e, f)) {
                return Err(Error::NotATree(format!("edges {e} and {f} cross")));
            }
        }
        Ok(Self { graph })
    }

    /// A tree spanning all of `[n]`.
    pub fn spanning(n: usize, edges: Vec<Transposition>) -> Result<Self> {
        GeometricGraph::new(n, (1..=n as Label).collect(), edges)?.into_tree()
    }

    /// Parses the edge list `"a-b,c-d"` (any order) as a tree spanning `[n]`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let edges = parse_letters(s)?;
        for (item, e) in edges.iter().enumerate() {
            if e.b() as usize > n {
                return Err(Error::Parse {
                    item: item + 1,
                    reason: format!("label {} is outside [1, {n}]", e.b()),
                });
            }
        }
        Self::spanning(n, edges)
    }

    /// Parses a spanning tree, taking `n` as one more than the edge count.
    pub fn parse_infer(s: &str) -> Result<Self> {
        let n = parse_letters(s)?.len() + 1;
        Self::parse(s, n)
    }

    /// Trusted constructor used by the enumerator.
    fn from_parts(n: usize, vertices: Vec<Label>, edges: Vec<Transposition>) -> Self {
        Self {
            graph: GeometricGraph { n, vertices, edges },
        }
    }

    pub fn graph(&self) -> &GeometricGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n
    }

    pub fn vertices(&self) -> &[Label] {
        &self.graph.vertices
    }

    pub fn edges(&self) -> &[Transposition] {
        &self.graph.edges
    }

    pub fn has_edge(&self, e: Transposition) -> bool {
        self.graph.has_edge(e)
    }

    pub fn degree(&self, v: Label) -> usize {
        self.graph.degree(v)
    }

    pub fn neighbors(&self, v: Label) -> Vec<Label> {
        self.graph.neighbors(v)
    }

    pub fn is_leaf(&self, v: Label) -> bool {
        self.degree(v) == 1
    }

    pub fn leaves(&self) -> Vec<Label> {
        self.vertices().iter().copied().filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn spans_ground_set(&self) -> bool {
        self.vertices().len() == self.n()
    }

    fn index_of(&self, v: Label) -> Option<usize> {
        self.vertices().binary_search(&v).ok()
    }

    /// Next vertex clockwise within the vertex set.
    pub fn successor(&self, v: Label) -> Option<Label> {
        let vs = self.vertices();
        self.index_of(v).map(|i| vs[(i + 1) % vs.len()])
    }

    /// Previous vertex clockwise within the vertex set.
    pub fn predecessor(&self, v: Label) -> Option<Label> {
        let vs = self.vertices();
        self.index_of(v).map(|i| vs[(i + vs.len() - 1) % vs.len()])
    }

    /// Whether `e` joins two cyclically consecutive vertices.
    pub fn is_boundary_edge(&self, e: Transposition) -> bool {
        self.successor(e.a()) == Some(e.b()) || self.successor(e.b()) == Some(e.a())
    }

    /// The tree with leaf `v` and its edge removed.
    pub fn without_leaf(&self, v: Label) -> Result<Self> {
        if !self.is_leaf(v) {
            return Err(Error::NotATree(format!("{v} is not a leaf")));
        }
        let vertices = self.vertices().iter().copied().filter(|&x| x != v).collect();
        let edges = self.edges().iter().copied().filter(|e| !e.moves(v)).collect();
        Ok(Self::from_parts(self.n(), vertices, edges))
    }

    /// Vertex sequence of the unique path from `from` to `to`.
    pub fn path(&self, from: Label, to: Label) -> Vec<Label> {
        let mut parent = vec![0 as Label; self.n() + 1];
        let mut seen = vec![false; self.n() + 1];
        seen[from as usize] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for u in self.neighbors(v) {
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    parent[u as usize] = v;
                    queue.push_back(u);
                }
            }
        }
        let mut path = vec![to];
        let mut v = to;
        while v != from {
            v = parent[v as usize];
            path.push(v);
        }
        path.reverse();
        path
    }

    /// Edge sequence `e = e_1, ..., e_m = f` of the unique path joining two
    /// distinct edges.
    pub fn edge_path(&self, e: Transposition, f: Transposition) -> Vec<Transposition> {
        let mut vpath = self.path(e.a(), f.a());
        if vpath.len() >= 2 && vpath[1] == e.b() {
            vpath.remove(0);
        }
        if vpath.len() >= 2 && vpath[vpath.len() - 2] == f.b() {
            vpath.pop();
        }
        let mut out = vec![e];
        out.extend(vpath.windows(2).map(|p| Transposition::of(p[0], p[1])));
        out.push(f);
        out
    }
}

impl fmt::Display for GeometricTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Every word `w` must respect: if `t_i = (a c)` and `t_j = (a b)` with
/// `i < j`, then `b <_a c`.
pub fn has_cyclically_decreasing_neighbors(w: &TranspositionWord) -> bool {
    let n = w.n();
    let letters = w.letters();
    for (i, &earlier) in letters.iter().enumerate() {
        for &later in &letters[i + 1..] {
            for a in [earlier.a(), earlier.b()] {
                if let (Some(c), Some(b)) = (earlier.other(a), later.other(a)) {
                    if !cyclic_less(n, a, b, c) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The relation `≺_T` and its transitive closure `<_T` on the edges of a tree.
#[derive(Debug, Clone)]
pub struct EdgeOrder {
    tree: GeometricTree,
    covers: Vec<(Transposition, Transposition)>,
}

impl EdgeOrder {
    pub fn tree(&self) -> &GeometricTree {
        &self.tree
    }

    /// All pairs `(e, f)` with `e ≺_T f`.
    pub fn covers(&self) -> &[(Transposition, Transposition)] {
        &self.covers
    }

    /// `e ≺_T f`: for adjacent `(i j)`, `(i k)`, `(i j) ≺_T (i k)` iff `k <_i j`.
    pub fn precedes(&self, e: Transposition, f: Transposition) -> bool {
        precedes(self.tree.n(), e, f)
    }

    /// `e <_T f`, by walking the unique path from `e` to `f`.
    pub fn less(&self, e: Transposition, f: Transposition) -> bool {
        if e == f || !self.tree.has_edge(e) || !self.tree.has_edge(f) {
            return false;
        }
        let path = self.tree.edge_path(e, f);
        path.windows(2).all(|p| self.precedes(p[0], p[1]))
    }

    pub fn comparable(&self, e: Transposition, f: Transposition) -> bool {
        e == f || self.less(e, f) || self.less(f, e)
    }

    /// Whether `<_T` is a total order on the edges.
    pub fn is_linear(&self) -> bool {
        let edges = self.tree.edges();
        edges
            .iter()
            .enumerate()
            .all(|(i, &e)| edges[i + 1..].iter().all(|&f| self.comparable(e, f)))
    }

    /// Edges sorted by `<_T`, when the order is linear.
    pub fn linear_sequence(&self) -> Option<Vec<Transposition>> {
        if !self.is_linear() {
            return None;
        }
        let mut edges = self.tree.edges().to_vec();
        edges.sort_by(|&e, &f| {
            if e == f {
                core::cmp::Ordering::Equal
            } else if self.less(e, f) {
                core::cmp::Ordering::Less
            } else {
                core::cmp::Ordering::Greater
            }
        });
        Some(edges)
    }
}

fn precedes(n: usize, e: Transposition, f: Transposition) -> bool {
    match e.common_label(f) {
        Some(i) => {
            let j = e.other(i).expect("shared endpoint");
            let k = f.other(i).expect("shared endpoint");
            cyclic_less(n, i, k, j)
        }
        None => false,
    }
}

pub fn tree_order(tree: &GeometricTree) -> EdgeOrder {
    let n = tree.n();
    let edges = tree.edges();
    let mut covers = Vec::new();
    for &e in edges {
        for &f in edges {
            if precedes(n, e, f) {
                covers.push((e, f));
            }
        }
    }
    EdgeOrder {
        tree: tree.clone(),
        covers,
    }
}

pub fn is_linear(tree: &GeometricTree) -> bool {
    tree_order(tree).is_linear()
}

/// Spine of a caterpillar: the tree with its leaves deleted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Spine {
    Vertex(Label),
    /// Vertices in path order and the edges joining them.
    Path {
        vertices: Vec<Label>,
        edges: Vec<Transposition>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarWitness {
    pub is_boundary_caterpillar: bool,
    /// `None` when the tree is not a caterpillar at all.
    pub spine: Option<Spine>,
    /// Edges off the spine.
    pub legs: Vec<Transposition>,
}

/// Decides whether the tree is a caterpillar whose spine is a single vertex
/// or a run of boundary edges `(i i+1), ..., (i+k-1 i+k)`.
///
/// Deleting the leaves of a single edge leaves nothing; that spine is the
/// smaller endpoint.
pub fn caterpillar_witness(tree: &GeometricTree) -> CaterpillarWitness {
    let vertices = tree.vertices();
    if vertices.len() == 1 {
        return CaterpillarWitness {
            is_boundary_caterpillar: true,
            spine: Some(Spine::Vertex(vertices[0])),
            legs: Vec::new(),
        };
    }
    let inner: Vec<Label> = vertices.iter().copied().filter(|&v| !tree.is_leaf(v)).collect();
    let spine_edges: Vec<Transposition> = tree
        .edges()
        .iter()
        .copied()
        .filter(|e| inner.contains(&e.a()) && inner.contains(&e.b()))
        .collect();
    let legs: Vec<Transposition> = tree
        .edges()
        .iter()
        .copied()
        .filter(|e| !spine_edges.contains(e))
        .collect();

    match inner.len() {
        0 => {
            let e = tree.edges()[0];
            return CaterpillarWitness {
                is_boundary_caterpillar: tree.is_boundary_edge(e),
                spine: Some(Spine::Vertex(e.a())),
                legs,
            };
        }
        1 => {
            return CaterpillarWitness {
                is_boundary_caterpillar: true,
                spine: Some(Spine::Vertex(inner[0])),
                legs,
            };
        }
        _ => {}
    }

    let spine_degree = |v: Label| spine_edges.iter().filter(|e| e.moves(v)).count();
    if inner.iter().any(|&v| spine_degree(v) > 2) {
        return CaterpillarWitness {
            is_boundary_caterpillar: false,
            spine: None,
            legs,
        };
    }
    // walk the path from one end
    let start = *inner
        .iter()
        .find(|&&v| spine_degree(v) == 1)
        .expect("a path has an end");
    let mut ordered = vec![start];
    let mut prev = None;
    let mut cur = start;
    while let Some(next) = spine_edges
        .iter()
        .filter_map(|e| e.other(cur))
        .find(|&u| Some(u) != prev)
    {
        ordered.push(next);
        prev = Some(cur);
        cur = next;
    }
    let is_boundary = spine_edges.iter().all(|&e| tree.is_boundary_edge(e));
    CaterpillarWitness {
        is_boundary_caterpillar: is_boundary,
        spine: Some(Spine::Path {
            vertices: ordered,
            edges: spine_edges,
        }),
        legs,
    }
}

/// All words `w ∈ F_n` with `Γ(w) = tree`: the linear extensions of `<_T`,
/// in lexicographic order.
pub fn linear_extensions(tree: &GeometricTree) -> Result<Vec<TranspositionWord>> {
    let mut out = Vec::new();
    visit_linear_extensions(tree, |letters| {
        out.push(TranspositionWord::from_trusted(tree.n(), letters.to_vec()))
    })?;
    Ok(out)
}

/// Calls `visit` on every linear extension of `<_T`.
pub fn visit_linear_extensions(tree: &GeometricTree, mut visit: impl FnMut(&[Transposition])) -> Result<()> {
    if !tree.spans_ground_set() {
        return Err(Error::NotATree(String::from(
            "linear extensions need a tree spanning [n]",
        )));
    }
    let edges = tree.edges();
    let m = edges.len();
    let n = tree.n();
    let mut succs = vec![Vec::new(); m];
    let mut indegree = vec![0usize; m];
    for (i, &e) in edges.iter().enumerate() {
        for (j, &f) in edges.iter().enumerate() {
            if precedes(n, e, f) {
                succs[i].push(j);
                indegree[j] += 1;
            }
        }
    }
    let mut placed = vec![false; m];
    let mut word = Vec::with_capacity(m);

    fn rec(
        edges: &[Transposition],
        succs: &[Vec<usize>],
        indegree: &mut [usize],
        placed: &mut [bool],
        word: &mut Vec<Transposition>,
        visit: &mut dyn FnMut(&[Transposition]),
    ) {
        if word.len() == edges.len() {
            visit(word);
            return;
        }
        for i in 0..edges.len() {
            if placed[i] || indegree[i] != 0 {
                continue;
            }
            placed[i] = true;
            word.push(edges[i]);
            for &j in &succs[i] {
                indegree[j] -= 1;
            }
            rec(edges, succs, indegree, placed, word, visit);
            for &j in &succs[i] {
                indegree[j] += 1;
            }
            word.pop();
            placed[i] = false;
        }
    }
    rec(edges, &succs, &mut indegree, &mut placed, &mut word, &mut visit);
    Ok(())
}

/// Every non-crossing spanning tree on `[n]`, sorted by edge list.
pub fn enumerate_noncrossing_trees(n: usize, cap: usize) -> Result<Vec<GeometricTree>> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidSize(n));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let candidates = all_transpositions(n);
    let vertices: Vec<Label> = (1..=n as Label).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n - 1);
    // component id per label, index 0 unused
    let component: Vec<Label> = (0..=n as Label).collect();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        n: usize,
        start: usize,
        candidates: &[Transposition],
        component: &[Label],
        chosen: &mut Vec<Transposition>,
        vertices: &[Label],
        out: &mut Vec<GeometricTree>,
    ) {
        if chosen.len() == n - 1 {
            out.push(GeometricTree::from_parts(n, vertices.to_vec(), chosen.clone()));
            return;
        }
        let needed = n - 1 - chosen.len();
        for idx in start..candidates.len() {
            if candidates.len() - idx < needed {
                break;
            }
            let e = candidates[idx];
            let (ca, cb) = (component[e.a() as usize], component[e.b() as usize]);
            if ca == cb || chosen.iter().any(|&f| edges_cross(e, f)) {
                continue;
            }
            let merged: Vec<Label> = component.iter().map(|&c| if c == cb { ca } else { c }).collect();
            chosen.push(e);
            rec(n, idx + 1, candidates, &merged, chosen, vertices, out);
            chosen.pop();
        }
    }
    rec(n, 0, &candidates, &component, &mut chosen, &vertices, &mut out);
    Ok(out)
}

/// Which boundary edge a boundary leaf hangs from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundarySide {
    /// The edge is `(i i+1)`.
    Next,
    /// The edge is `(i-1 i)`.
    Previous,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryLeaf {
    pub leaf: Label,
    pub edge: Transposition,
    pub side: BoundarySide,
}

/// Every leaf `i` whose edge is `(i i+1)` or `(i-1 i)`, in label order.
/// A leaf satisfying both is reported once, as [`BoundarySide::Next`].
pub fn boundary_leaves(tree: &GeometricTree) -> Vec<BoundaryLeaf> {
    let mut out = Vec::new();
    for leaf in tree.leaves() {
        let nb = tree.neighbors(leaf)[0];
        let edge = Transposition::of(leaf, nb);
        if tree.successor(leaf) == Some(nb) {
            out.push(BoundaryLeaf {
                leaf,
                edge,
                side: BoundarySide::Next,
            });
        } else if tree.predecessor(leaf) == Some(nb) {
            out.push(BoundaryLeaf {
                leaf,
                edge,
                side: BoundarySide::Previous,
            });
        }
    }
    out
}

/// The smallest leaf hanging from a boundary edge. Such a leaf always exists
/// in a tree with at least two vertices.
pub fn find_boundary_leaf(tree: &GeometricTree) -> Result<(Label, Transposition)> {
    if tree.vertices().len() < 2 {
        return Err(Error::NotATree(String::from("needs at least two vertices")));
    }
    boundary_leaves(tree)
        .first()
        .map(|b| (b.leaf, b.edge))
        .ok_or_else(|| Error::Internal(format!("tree {tree} has no boundary leaf")))
}

impl GeometricTree {
    /// Convenience for display in reports.
    pub fn text(&self) -> String {
        self.to_string()
    }
}
