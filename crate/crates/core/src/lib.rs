//! Transposition factorizations of the long cycle, their geometric trees,
//! Hurwitz moves, and the graphs those moves generate.
//!
//! Permutations act on `{1, ..., n}` and compose right to left:
//! `p.compose(&q)` maps `i` to `p(q(i))`. A word `t_1 ... t_{n-1}` is a
//! factorization when `t_1 t_2 ... t_{n-1} = (1 2 ... n)`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod graph;
pub mod moves;
pub mod perm;
pub mod tree;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use graph::{
    bfs_distance, bfs_distances, bfs_path, build_graph, eccentricity, is_central, metrics, GraphHandle, GraphKind,
    MetricsReport,
};
pub use moves::{
    build_central_word, extended_left, extended_right, left_move, push_preserving, right_move, star_step, walk_to_star,
    MoveKind, MoveRecord,
};
pub use perm::{conjugate, Label, Permutation, Transposition, MAX_N};
pub use tree::{
    caterpillar_witness, enumerate_noncrossing_trees, gamma, is_linear, linear_extensions, tree_order,
    CaterpillarWitness, EdgeOrder, GeometricGraph, GeometricTree, Spine,
};
pub use verify::{verify_theorem, verify_with, Theorem, TheoremReport};
pub use word::{enumerate_fn, is_fn_word, phi, PhiResult, TranspositionWord, DEFAULT_ENUMERATION_CAP};
