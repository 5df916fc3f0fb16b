//! Exhaustive checks of the structural results at a fixed `n`.
//!
//! Each [`Theorem`] runs one sweep and reports pass/fail, a few numeric facts
//! observed along the way, and the first counterexample found.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, build_graph, metrics, trees_adjacent, GraphHandle, GraphKind, MetricsReport};
use crate::moves::{build_central_word, extended_left, extended_right, left_move, right_move, walk_to_star};
use crate::perm::{Label, Transposition};
use crate::tree::{
    caterpillar_witness, cyclic_less, enumerate_noncrossing_trees, gamma, has_cyclically_decreasing_neighbors,
    linear_extensions, tree_order, GeometricTree,
};
use crate::word::{all_transpositions, enumerate_fn, is_fn_word, phi, TranspositionWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Theorem {
    /// `|F_n| = n^{n-2}`, and `F_n` is the union of the linear extensions of
    /// every `<_T`.
    Cardinality,
    /// `w ∈ F_n` iff `Γ(w)` is a non-crossing tree with cyclically
    /// decreasing neighbors.
    GouldenYong,
    /// `<_T` is a strict partial order; monotone paths are chains.
    TreeOrder,
    /// `<_T` is linear iff `T` is a boundary caterpillar.
    LinearityCaterpillar,
    /// In a linear `<_T` the ends are boundary edges at leaves and
    /// consecutive edges touch.
    LinearOrderEnds,
    /// A leaf's letter at either end of a word is the boundary edge on the
    /// matching side.
    LeafLetter,
    /// Radius of the Hurwitz graph is `C(n-1, 2)`.
    HurwitzRadius,
    /// Words whose image is a boundary caterpillar are central.
    CenterCaterpillar,
    /// Every tree is the image of a central word, found constructively.
    CenterPerTree,
    /// Radius of the extended graph is `n - 2`; stars are central, with
    /// `d(w, S_i) = (n - 1) - deg_{Γ(w)}(i)`.
    ExtendedRadius,
    /// `ceil(3n/2 - 5) ≤ diam E ≤ 2n - 4` and `diam G_n ≤ diam E`.
    ExtendedDiameter,
    /// Extended moves project to equal-or-adjacent trees.
    ExtendedProjection,
    /// `Γ` maps `F_n` onto the non-crossing trees.
    GammaOnto,
    /// `|A_j| = 1` for every position of every word.
    Phi,
    /// Closure, inverse pairs, single-edge change and star-walk lengths.
    MoveAlgebra,
}

impl Theorem {
    pub const ALL: [Theorem; 15] = [
        Self::Cardinality,
        Self::GouldenYong,
        Self::TreeOrder,
        Self::LinearityCaterpillar,
        Self::LinearOrderEnds,
        Self::LeafLetter,
        Self::HurwitzRadius,
        Self::CenterCaterpillar,
        Self::CenterPerTree,
        Self::ExtendedRadius,
        Self::ExtendedDiameter,
        Self::ExtendedProjection,
        Self::GammaOnto,
        Self::Phi,
        Self::MoveAlgebra,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Cardinality => "cardinality",
            Self::GouldenYong => "goulden-yong",
            Self::TreeOrder => "tree-order",
            Self::LinearityCaterpillar => "linearity-caterpillar",
            Self::LinearOrderEnds => "linear-order-ends",
            Self::LeafLetter => "leaf-letter",
            Self::HurwitzRadius => "hurwitz-radius",
            Self::CenterCaterpillar => "center-caterpillar",
            Self::CenterPerTree => "center-per-tree",
            Self::ExtendedRadius => "extended-radius",
            Self::ExtendedDiameter => "extended-diameter",
            Self::ExtendedProjection => "extended-projection",
            Self::GammaOnto => "gamma-onto",
            Self::Phi => "phi",
            Self::MoveAlgebra => "move-algebra",
        }
    }

    /// Whether the check builds a graph and computes all eccentricities.
    pub fn needs_metrics(self) -> bool {
        matches!(
            self,
            Self::HurwitzRadius
                | Self::CenterCaterpillar
                | Self::CenterPerTree
                | Self::ExtendedRadius
                | Self::ExtendedDiameter
        )
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub n: usize,
    pub passed: bool,
    /// Observed quantities; informational unless the check says otherwise.
    pub facts: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

struct Sweep {
    report: TheoremReport,
}

impl Sweep {
    fn new(theorem: Theorem, n: usize) -> Self {
        Self {
            report: TheoremReport {
                theorem: theorem.name().to_string(),
                n,
                passed: true,
                facts: BTreeMap::new(),
                counterexample: None,
            },
        }
    }

    fn fact(&mut self, key: &str, value: impl TryInto<i64>) {
        let value = value.try_into().unwrap_or(i64::MAX);
        self.report.facts.insert(key.to_string(), value);
    }

    /// Records a failure; keeps the first counterexample only.
    fn fail(&mut self, what: impl FnOnce() -> String) {
        if self.report.passed {
            self.report.counterexample = Some(what());
        }
        self.report.passed = false;
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.fail(what);
        }
    }

    fn done(self) -> TheoremReport {
        self.report
    }
}

/// Signature of an all-eccentricities routine, so callers can swap in a
/// parallel sweep.
pub type MetricsFn<'a> = &'a dyn Fn(&GraphHandle) -> Result<MetricsReport>;

/// Runs the named check with the sequential metrics routine.
pub fn verify_theorem(name: &str, n: usize, cap: usize) -> Result<TheoremReport> {
    let theorem: Theorem = name.parse()?;
    verify_with(theorem, n, cap, &metrics)
}

/// Runs one check.
pub fn verify_with(theorem: Theorem, n: usize, cap: usize, metrics_fn: MetricsFn<'_>) -> Result<TheoremReport> {
    if n == 0 {
        return Err(Error::InvalidSize(0));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut s = Sweep::new(theorem, n);
    match theorem {
        Theorem::Cardinality => cardinality(&mut s, n, cap)?,
        Theorem::GouldenYong => goulden_yong(&mut s, n, cap)?,
        Theorem::TreeOrder => tree_order_check(&mut s, n, cap)?,
        Theorem::LinearityCaterpillar => linearity(&mut s, n, cap)?,
        Theorem::LinearOrderEnds => linear_ends(&mut s, n, cap)?,
        Theorem::LeafLetter => leaf_letter(&mut s, n, cap)?,
        Theorem::HurwitzRadius => hurwitz_radius(&mut s, n, cap, metrics_fn)?,
        Theorem::CenterCaterpillar => center_caterpillar(&mut s, n, cap, metrics_fn)?,
        Theorem::CenterPerTree => center_per_tree(&mut s, n, cap, metrics_fn)?,
        Theorem::ExtendedRadius => extended_radius(&mut s, n, cap, metrics_fn)?,
        Theorem::ExtendedDiameter => extended_diameter(&mut s, n, cap, metrics_fn)?,
        Theorem::ExtendedProjection => extended_projection(&mut s, n, cap)?,
        Theorem::GammaOnto => gamma_onto(&mut s, n, cap)?,
        Theorem::Phi => phi_check(&mut s, n, cap)?,
        Theorem::MoveAlgebra => move_algebra(&mut s, n, cap)?,
    }
    Ok(s.done())
}

fn cardinality(s: &mut Sweep, n: usize, cap: usize) -> Result<()> {
    let words = enumerate_fn(n, cap)?;
    let expected = if n == 1 { 1 } else { n.pow(n as u32 - 2) };
    let mut union = Vec::with_capacity(words.len());
    for t in enumerate_noncrossing_trees(n, cap)? {
        union.extend(linear_extensions(&t)?);
    }
    union.sort();
    s.fact("fn_count", words.len());
    s.fact("expected", expected);
    s.fact("extension_union", union.len());
    s.check(words.len() == expected, || format!("|F_n| = {}", words.len()));
    if union != words {
        let diff = union
            .iter()
            .find(|w| words.binary_search(w).is_err())
            .or_else(|| words.iter().find(|w| union.binary_search(w).is_err()));
        s.fail(|| {
            format!(
                "extension union differs at {}",
                diff.map(|w| w.to_string()).unwrap_or_default()
            )
        });
    }
    Ok(())
}

fn goulden_yong_condition(w: &TranspositionWord) -> bool {
    gamma(w).is_noncrossing_tree() && has_cyclically_decreasing_neighbors(w)
}

/// Full tuple sweeps stop here; larger `n` use `F_n` plus every ordering of
/// every non-crossing tree's edges.
const GY_EXHAUSTIVE_LIMIT: u64 = 2_000_000;

fn goulden_yong(s: &mut Sweep, n: usize, cap: usize) -> Result<()> {
    let alphabet = all_transpositions(n);
    let len = n - 1;
    let total = (alphabet.len() as u64).checked_pow(len as u32);
    let mut checked: u64 = 0;
    let mut members: u64 = 0;
    if n <= 2 || total.is_some_and(|t| t <= GY_EXHAUSTIVE_LIMIT) {
        s.fact("mode_exhaustive", 1);
        let mut idx = alloc::vec![0usize; len];
        loop {
            let w = TranspositionWord::from_trusted(n, idx.iter().map(|&i| alphabet[i]).collect());
            let member = is_fn_word(&w);
            members += member as u64;
            checked += 1;
            s.check(member == goulden_yong_condition(&w), || w.to_string());
            if !advance(&mut idx, alphabet.len()) {
                break;
            }
        }
    } else {
        s.fact("mode_exhaustive", 0);
        for w in enumerate_fn(n, cap)? {
            checked += 1;
            members += 1;
            s.check(goulden_yong_condition(&w), || w.to_string());
        }
        for t in enumerate_noncrossing_trees(n, cap)? {
            let mut edges = t.edges().to_vec();
            for_each_permutation(&mut edges, &mut |letters| {
                let w = TranspositionWord::from_trusted(n, letters.to_vec());
                checked += 1;
                s.check(is_fn_word(&w) == has_cyclically_decreasing_neighbors(&w), || {
                    w.to_string()
                });
            });
        }
    }
    s.fact("words_checked", checked);
    s.fact("members", members);
    Ok(())
}

/// Odometer increment; false once every tuple has been produced.
fn advance(idx: &mut [usize], base: usize) -> bool {
    for d in idx.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn for_each_permutation<T: Copy>(items: &mut [T], visit: &mut dyn FnMut(&[T])) {
    fn rec<T: Copy>(items: &mut [T], k: usize, visit: &mut dyn FnMut(&[T])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, visit);
            items.swap(k, i);
        }
    }
    rec(items, 0, visit);
}

fn tree_order_check(s: &mut Sweep, n: usize, cap: usize) -> Result<()> {
    let trees = enumerate_noncrossing_trees(n, cap)?;
    let mut monotone_paths = 0u64;
    for t in &trees {
        let order = tree_order(t);
        let edges = t.edges();
        for &e in edges {
            s.check(!order.less(e, e), || format!("{t}: {e} < {e}"));
            for &f in edges {
                if order.less(e, f) {
                    s.check(!order.less(f, e), || format!("{t}: {e} and {f} both ways"));
                    for &g in edges {
                        if order.less(f, g) {
                            s.check(order.less(e, g), || format!("{t}: {e} < {f} < {g} not transitive"));
                        }
                    }
                }
            }
        }
        // paths j_1, ..., j_m increasing in <_{j_1} are chains
        for &from in t.vertices() {
            for &to in t.vertices() {
                let path = t.path(from, to);
                if path.len() < 3 {
                    continue;
                }
                let monotone = path.windows(2).all(|p| cyclic_less(n, from, p[0], p[1]));
                if !monotone {
                    continue;
                }
                monotone_paths += 1;
                let edges: Vec<Transposition> = path.windows(2).map(|p| Transposition::of(p[0], p[1])).collect();
                s.check(edges.windows(2).all(|p| order.less(p[0], p[1])), || {
                    format!("{t}: path {path:?} is not a chain")
                });
            }
        }
    }
    s.fact("trees", trees.len());
    s.fact("monotone_paths", monotone_paths);
    Ok(())
}

fn linearity(s: &mut Sweep, n: usize, cap: usize) -> Result<()> {
    let trees = enumerate_noncrossing_trees(n, cap)?;
    let mut linear = 0usize;
    for t in &trees {
        let lin = tree_order(t).is_linear();
        let cat = caterpillar_witness(t).is_boundary_caterpillar;
        linear += lin as usize;
        s.check(lin == cat, || format!("{t}: linear={lin} boundary_caterpillar={cat}"));
    }
    s.fact("trees", trees.len());
    s.fact("linear", linear);
    Ok(())
}

fn linear_ends(s: &mut Sweep, n: usize, cap: usize) -> Result<()> {
    let mut linear = 0usize;
    for t in enumerate_noncrossing_trees(n, cap)? {
        if t.edges().is_empty() {
            continue;
        }
        let order = tree_order(&t);
        let Some(seq) = order.linear_sequence() else {
            continue;
        };
        linear += 1;
        let first = seq[0];
        let last = *seq.last().expect("non-empty");
        let starts_at_leaf = [first.a(), first.b()]
            .into_iter()
            .any(|i| t.is_leaf(i) && t.successor(i) == first.other(i));
        let ends_at_leaf = [last.a(), last.b()]
            .into_iter()
            .any(|j| t.is_leaf(j) && t.predecessor(j) == last.other(j));
        s.check(starts_at_leaf, || format!("{t}: minimum {first}"));
        s.check(ends_at_leaf, || format!("{t}: maximum {last}"));
        s.check(seq.windows(2).all(|p| p[0].common_label(p[1]).is_some()), || {
            format!("{t}: consecutive edges not adjacent")
        });
        // the single linear extension is the sorted sequence
        let ext = linear_extensions(&t)?;
        s.check(ext.len() == 1 && ext[0].letters() == seq.as_slice(), || {
            format!("{t}: extensions")
        });
    }
    s.fact("linear_trees", linear);
    Ok(())
}

fn leaf_letter(s: &mut Sweep, n: usize, cap: usize) -> Result<()> {
    let words = enumerate_fn(n, cap)?;
    for w in &words {
        let t = gamma(w).into_tree()?;
        let (Some(first), Some(last)) = (w.letter(1), w.letter(w.len())) else {
            continue;
        };
        for k in t.leaves() {
            if last.moves(k) {
                s.check(t.predecessor(k) == last.other(k), || {
                    format!("{w}: leaf {k}, last {last}")
                });
            }
            if first.moves(k) {
                s.check(t.successor(k) == first.other(k), || {
                    format!("{w}: leaf {k}, first {first}")
                });
            }
        }
    }
    s.fact("words", words.len());
    Ok(())
}

fn binomial2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

fn hurwitz_radius(s: &mut Sweep, n: usize, cap: usize, metrics_fn: MetricsFn<'_>) -> Result<()> {
    let g = build_graph(GraphKind::Hurwitz, n, cap)?;
    let m = metrics_fn(&g)?;
    let expected = binomial2(n - 1);
    s.fact("vertices", g.vertex_count());
    s.fact("radius", m.radius);
    s.fact("diameter", m.diameter);
    s.fact("expected_radius", expected);
    s.fact("center_size", m.center.len());
    s.check(m.radius as usize == expected, || format!("radius {}", m.radius));
    Ok(())
}

fn center_caterpillar(s: &mut Sweep, n: usize, cap: usize, metrics_fn: MetricsFn<'_>) -> Result<()> {
    let g = build_graph(GraphKind::Hurwitz, n, cap)?;
    let m = metrics_fn(&g)?;
    let mut caterpillar_words = 0usize;
    for id in 0..g.vertex_count() {
        let w = g.word(id).expect("word vertex");
        let t = gamma(&w).into_tree()?;
        if caterpillar_witness(&t).is_boundary_caterpillar {
            caterpillar_words += 1;
            s.check(m.eccentricities[id] == m.radius, || {
                format!("{w}: eccentricity {} vs radius {}", m.eccentricities[id], m.radius)
            });
        }
    }
    s.fact("radius", m.radius);
    s.fact("caterpillar_words", caterpillar_words);
    s.fact("center_size", m.center.len());
    s.fact(
        "center_beyond_caterpillars",
        m.center.len().saturating_sub(caterpillar_words),
    );
    Ok(())
}

fn center_per_tree(s: &mut Sweep, n: usize, cap: usize, metrics_fn: MetricsFn<'_>) -> Result<()> {
    let g = build_graph(GraphKind::Hurwitz, n, cap)?;
    let m = metrics_fn(&g)?;
    let trees = enumerate_noncrossing_trees(n, cap)?;
    let mut covered = BTreeSet::new();
    for t in &trees {
        let w = build_central_word(t)?;
        let id = g.id_of_word(&w)?;
        covered.insert(id);
        s.check(gamma(&w).edges() == t.edges(), || format!("{t}: built {w}"));
        s.check(m.eccentricities[id] == m.radius, || {
            format!("{t}: built {w} with eccentricity {}", m.eccentricities[id])
        });
    }
    s.fact("trees", trees.len());
    s.fact("radius", m.radius);
    s.fact("center_size", m.center.len());
    Ok(())
}

/// The unique word whose image is the star centered at `center`.
pub fn star_word(n: usize, center: Label) -> Result<TranspositionWord> {
    let edges = (1..=n as Label)
        .filter(|&x| x != center)
        .map(|x| Transposition::of(center, x))
        .collect();
    let star = GeometricTree::spanning(n, edges)?;
    let mut ext = linear_extensions(&star)?;
    if ext.len() != 1 {
        return Err(Error::Internal(format!("star at {center} has {} words", ext.len())));
    }
    Ok(ext.remove(0))
}

fn check_extended_size(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidSize(n));
    }
    Ok(())
}

fn extended_radius(s: &mut Sweep, n: usize, cap: usize, metrics_fn: MetricsFn<'_>) -> Result<()> {
    check_extended_size(n)?;
    let g = build_graph(GraphKind::Extended, n, cap)?;
    let m = metrics_fn(&g)?;
    let expected = (n - 2) as u32;
    s.fact("radius", m.radius);
    s.fact("diameter", m.diameter);
    s.fact("center_size", m.center.len());
    s.check(m.radius == expected, || format!("radius {}", m.radius));
    let degrees: Vec<GeometricTree> = (0..g.vertex_count())
        .map(|id| gamma(&g.word(id).expect("word vertex")).into_tree())
        .collect::<Result<_>>()?;
    for center in 1..=n as Label {
        let star = star_word(n, center)?;
        let id = g.id_of_word(&star)?;
        s.check(m.eccentricities[id] == expected, || {
            format!("star {star}: eccentricity {}", m.eccentricities[id])
        });
        let dist = bfs_distances(&g, id)?;
        for (v, t) in degrees.iter().enumerate() {
            let predicted = (n - 1 - t.degree(center)) as u32;
            s.check(dist[v] == predicted, || {
                format!(
                    "d({}, S_{center}) = {} but formula gives {predicted}",
                    g.label(v),
                    dist[v]
                )
            });
        }
    }
    Ok(())
}

fn extended_diameter(s: &mut Sweep, n: usize, cap: usize, metrics_fn: MetricsFn<'_>) -> Result<()> {
    check_extended_size(n)?;
    let e = metrics_fn(&build_graph(GraphKind::Extended, n, cap)?)?;
    let t = metrics_fn(&build_graph(GraphKind::TreeGraph, n, cap)?)?;
    let lower = ceil_half(3 * n as i64 - 10).max(0);
    let upper = 2 * n as i64 - 4;
    let diam = e.diameter as i64;
    s.fact("diameter", diam);
    s.fact("lower_bound", lower);
    s.fact("upper_bound", upper);
    s.fact("treegraph_diameter", t.diameter);
    s.fact("treegraph_meets_lower_bound", (t.diameter as i64 >= lower) as i64);
    s.check(lower <= diam && diam <= upper, || {
        format!("diameter {diam} outside [{lower}, {upper}]")
    });
    s.check(t.diameter <= e.diameter, || {
        format!("tree graph diameter {} exceeds {diam}", t.diameter)
    });
    Ok(())
}

/// `ceil(x / 2)` for signed `x`.
pub fn ceil_half(x: i64) -> i64 {
    (x + 1).div_euclid(2)
}

fn extended_projection(s: &mut Sweep, n: usize, cap: usize) -> Result<()> {
    let g = build_graph(GraphKind::Extended, n, cap)?;
    let trees: Vec<GeometricTree> = (0..g.vertex_count())
        .map(|id| gamma(&g.word(id).expect("word vertex")).into_tree())
        .collect::<Result<_>>()?;
    let mut same = 0usize;
    for v in 0..g.vertex_count() {
        for &u in g.neighbors(v) {
            if u < v {
                continue;
            }
            let (a, b) = (&trees[v], &trees[u]);
            same += (a == b) as usize;
            s.check(a == b || trees_adjacent(a, b), || {
                format!("{} -- {}", g.label(v), g.label(u))
            });
        }
    }
    s.fact("edges", g.edge_count());
    s.fact("edges_with_equal_trees", same);
    Ok(())
}

fn gamma_onto(s: &mut Sweep, n: usize, cap: usize) -> Result<()> {
    let trees = enumerate_noncrossing_trees(n, cap)?;
    let image: BTreeSet<GeometricTree> = enumerate_fn(n, cap)?
        .iter()
        .map(|w| gamma(w).into_tree())
        .collect::<Result<_>>()?;
    s.fact("trees", trees.len());
    s.fact("image", image.len());
    if let Some(missing) = trees.iter().find(|t| !image.contains(t)) {
        s.fail(|| format!("{missing} is not an image"));
    }
    s.check(image.len() == trees.len(), || {
        String::from("image contains extra trees")
    });
    Ok(())
}

fn phi_check(s: &mut Sweep, n: usize, cap: usize) -> Result<()> {
    let words = enumerate_fn(n, cap)?;
    let mut image = BTreeSet::new();
    for w in &words {
        match phi(w) {
            Ok(r) => {
                s.check(r.pi.n() == n - 1, || format!("{w}: π on wrong ground set"));
                image.insert(r.pi);
            }
            Err(e) => s.fail(|| format!("{w}: {e}")),
        }
    }
    s.fact("words", words.len());
    s.fact("image_size", image.len());
    Ok(())
}

fn move_algebra(s: &mut Sweep, n: usize, cap: usize) -> Result<()> {
    let words = enumerate_fn(n, cap)?;
    let len = n - 1;
    let mut moves_checked = 0u64;
    for w in &words {
        let edges = gamma(w);
        for i in 1..len {
            let r = right_move(w, i)?;
            let l = left_move(w, i)?;
            s.check(is_fn_word(&r) && is_fn_word(&l), || format!("{w}: R/L_{i} leaves F_n"));
            s.check(&left_move(&r, i)? == w && &right_move(&l, i)? == w, || {
                format!("{w}: L_{i}R_{i}")
            });
            moves_checked += 2;
        }
        for i in 1..=len {
            for j in i + 1..=len {
                let r = extended_right(w, i, j)?;
                let l = extended_left(w, i, j)?;
                s.check(is_fn_word(&r) && is_fn_word(&l), || {
                    format!("{w}: ({i},{j}) leaves F_n")
                });
                s.check(
                    &extended_left(&r, i, j)? == w && &extended_right(&l, i, j)? == w,
                    || format!("{w}: L_{{{i}{j}}}R_{{{i}{j}}}"),
                );
                for image in [&r, &l] {
                    let other = gamma(image);
                    let changed = edges.edges().iter().filter(|e| !other.has_edge(**e)).count()
                        + other.edges().iter().filter(|e| !edges.has_edge(**e)).count();
                    s.check(changed <= 2, || format!("{w} -> {image}: {changed} edges changed"));
                }
                moves_checked += 2;
            }
        }
        if n >= 2 {
            let tree = edges.clone().into_tree()?;
            for center in 1..=n as Label {
                let walk = walk_to_star(w, center)?;
                let expected = n - 1 - tree.degree(center);
                s.check(walk.len() - 1 == expected, || {
                    format!("{w}: {} star steps to S_{center}, expected {expected}", walk.len() - 1)
                });
                s.check(walk.len() - 1 <= n.saturating_sub(2), || format!("{w}: walk too long"));
            }
        }
    }
    s.fact("words", words.len());
    s.fact("moves_checked", moves_checked);
    Ok(())
}
