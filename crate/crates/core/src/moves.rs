//! Hurwitz moves on words and the constructive procedures built from them.
//!
//! Positions are 1-based throughout, matching the usual `R_i` / `L_i`
//! indexing: `R_i` and `L_i` act on letters `i` and `i + 1`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Label, Transposition};
use crate::tree::{boundary_leaves, cyclic_rank, gamma, BoundarySide, GeometricTree};
use crate::word::{is_fn_word, TranspositionWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    #[serde(rename = "R")]
    Right,
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R_ext")]
    ExtendedRight,
    #[serde(rename = "L_ext")]
    ExtendedLeft,
}

/// One applied move, as written to path dumps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub i: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    pub before: TranspositionWord,
    pub after: TranspositionWord,
}

impl MoveRecord {
    /// Re-applies the move to `before`.
    pub fn replay(&self) -> Result<TranspositionWord> {
        apply_move(&self.before, self.kind, self.i, self.j)
    }
}

fn check_pair(w: &TranspositionWord, i: usize) -> Result<()> {
    if i == 0 || i + 1 > w.len() {
        return Err(Error::IndexOutOfRange { index: i, len: w.len() });
    }
    Ok(())
}

fn check_block(w: &TranspositionWord, i: usize, j: usize) -> Result<()> {
    if i == 0 || j <= i || j > w.len() {
        return Err(Error::IndexOutOfRange {
            index: if i == 0 { i } else { j },
            len: w.len(),
        });
    }
    Ok(())
}

fn right_in_place(letters: &mut [Transposition], i: usize) {
    let (x, y) = (letters[i - 1], letters[i]);
    letters[i - 1] = y.conjugate_by(x);
    letters[i] = x;
}

fn left_in_place(letters: &mut [Transposition], i: usize) {
    let (x, y) = (letters[i - 1], letters[i]);
    letters[i - 1] = y;
    letters[i] = x.conjugate_by(y);
}

/// `R_i`: `(.., t_i, t_{i+1}, ..) ↦ (.., t_{i+1}^{t_i}, t_i, ..)`.
pub fn right_move(w: &TranspositionWord, i: usize) -> Result<TranspositionWord> {
    check_pair(w, i)?;
    let mut letters = w.letters().to_vec();
    right_in_place(&mut letters, i);
    Ok(TranspositionWord::from_trusted(w.n(), letters))
}

/// `L_i`: `(.., t_i, t_{i+1}, ..) ↦ (.., t_{i+1}, t_i^{t_{i+1}}, ..)`.
pub fn left_move(w: &TranspositionWord, i: usize) -> Result<TranspositionWord> {
    check_pair(w, i)?;
    let mut letters = w.letters().to_vec();
    left_in_place(&mut letters, i);
    Ok(TranspositionWord::from_trusted(w.n(), letters))
}

/// `L_{ij} = L_{j-1} ⋯ L_i`: letter `i` is pulled right to position `j`.
pub fn extended_left(w: &TranspositionWord, i: usize, j: usize) -> Result<TranspositionWord> {
    check_block(w, i, j)?;
    let mut letters = w.letters().to_vec();
    for m in i..j {
        left_in_place(&mut letters, m);
    }
    Ok(TranspositionWord::from_trusted(w.n(), letters))
}

/// `R_{ij} = R_i ⋯ R_{j-1}`: letter `j` is pulled left to position `i`.
pub fn extended_right(w: &TranspositionWord, i: usize, j: usize) -> Result<TranspositionWord> {
    check_block(w, i, j)?;
    let mut letters = w.letters().to_vec();
    for m in (i..j).rev() {
        right_in_place(&mut letters, m);
    }
    Ok(TranspositionWord::from_trusted(w.n(), letters))
}

/// Dispatches on `kind`; `j` is required for the extended moves only.
pub fn apply_move(w: &TranspositionWord, kind: MoveKind, i: usize, j: Option<usize>) -> Result<TranspositionWord> {
    let need_j = || j.ok_or(Error::IndexOutOfRange { index: 0, len: w.len() });
    match kind {
        MoveKind::Right => right_move(w, i),
        MoveKind::Left => left_move(w, i),
        MoveKind::ExtendedRight => extended_right(w, i, need_j()?),
        MoveKind::ExtendedLeft => extended_left(w, i, need_j()?),
    }
}

/// Every `R_i` and `L_i` image of `w`, with the move that produced it.
pub fn elementary_moves(w: &TranspositionWord) -> Vec<(MoveKind, usize, Option<usize>, TranspositionWord)> {
    let mut out = Vec::new();
    for i in 1..w.len() {
        out.push((MoveKind::Right, i, None, right_move(w, i).expect("in range")));
        out.push((MoveKind::Left, i, None, left_move(w, i).expect("in range")));
    }
    out
}

/// Every `R_{ij}` and `L_{ij}` image of `w`, `i < j`.
pub fn extended_moves(w: &TranspositionWord) -> Vec<(MoveKind, usize, Option<usize>, TranspositionWord)> {
    let len = w.len();
    let mut out = Vec::new();
    for i in 1..=len {
        for j in i + 1..=len {
            out.push((
                MoveKind::ExtendedRight,
                i,
                Some(j),
                extended_right(w, i, j).expect("in range"),
            ));
            out.push((
                MoveKind::ExtendedLeft,
                i,
                Some(j),
                extended_left(w, i, j).expect("in range"),
            ));
        }
    }
    out
}

/// Pushes letter `k` to position `l` while keeping a letter that moves
/// `label` in front.
///
/// Going left, each step is `R_m` when the letter being passed fixes
/// `label` and `L_m` otherwise; going right, `L_m` when the passed letter
/// fixes `label` and `R_m` otherwise. Returns the word and the number of
/// elementary moves, which is always `|k - l|`.
pub fn push_preserving(w: &TranspositionWord, k: usize, l: usize, label: Label) -> Result<(TranspositionWord, usize)> {
    let len = w.len();
    for idx in [k, l] {
        if idx == 0 || idx > len {
            return Err(Error::IndexOutOfRange { index: idx, len });
        }
    }
    if !w.letter(k).is_some_and(|t| t.moves(label)) {
        return Err(Error::LetterFixesLabel {
            position: k,
            label: label as usize,
        });
    }
    let mut letters = w.letters().to_vec();
    if l < k {
        for m in (l..k).rev() {
            if letters[m - 1].moves(label) {
                left_in_place(&mut letters, m);
            } else {
                right_in_place(&mut letters, m);
            }
        }
    } else {
        for m in k..l {
            if letters[m].moves(label) {
                right_in_place(&mut letters, m);
            } else {
                left_in_place(&mut letters, m);
            }
        }
    }
    Ok((TranspositionWord::from_trusted(w.n(), letters), k.abs_diff(l)))
}

/// One extended move towards the star centered at `center`.
///
/// Picks the first non-leaf neighbor `i` of `center` in the order
/// `<_center`. If `i` has neighbors after it in that order, the largest such
/// `j` is chosen and `(i j)` is pulled left onto the position of
/// `(center i)`; otherwise the smallest `j` before `i` is pulled right onto
/// it. The pulled letter leaves as `(center k)`, which is new to the word.
pub fn star_step(w: &TranspositionWord, center: Label) -> Result<(TranspositionWord, Transposition)> {
    let n = w.n();
    if center == 0 || center as usize > n {
        return Err(Error::LabelOutOfRange {
            label: center as usize,
            n,
        });
    }
    if !is_fn_word(w) {
        return Err(Error::NotInFn(format!("{w}")));
    }
    let tree = gamma(w).into_tree()?;
    if tree.degree(center) + 1 == n {
        return Err(Error::AlreadyStar(center as usize));
    }
    let rank = |x: Label| cyclic_rank(n, center, x);

    let mut spokes = tree.neighbors(center);
    spokes.sort_by_key(|&x| rank(x));
    let i = spokes
        .into_iter()
        .find(|&x| !tree.is_leaf(x))
        .ok_or_else(|| Error::Internal(String::from("non-star tree without inner spoke")))?;
    let position_of = |t: Transposition| {
        w.position(t)
            .ok_or_else(|| Error::Internal(format!("letter {t} missing")))
    };
    let hub = position_of(Transposition::of(center, i))?;
    let others: Vec<Label> = tree.neighbors(i).into_iter().filter(|&x| x != center).collect();

    let after = others
        .iter()
        .copied()
        .filter(|&j| rank(j) > rank(i))
        .max_by_key(|&j| rank(j));
    let (next, landing) = match after {
        Some(j) => {
            let q = position_of(Transposition::of(i, j))?;
            if q <= hub {
                return Err(Error::Internal(format!("({i} {j}) precedes ({center} {i})")));
            }
            (extended_right(w, hub, q)?, hub)
        }
        None => {
            let j = others
                .iter()
                .copied()
                .min_by_key(|&j| rank(j))
                .ok_or_else(|| Error::Internal(format!("{i} is a leaf")))?;
            let q = position_of(Transposition::of(i, j))?;
            if q >= hub {
                return Err(Error::Internal(format!("({i} {j}) follows ({center} {i})")));
            }
            (extended_left(w, q, hub)?, hub)
        }
    };
    let gained = next.letter(landing).expect("landing in range");
    if !gained.moves(center) || w.contains(gained) {
        return Err(Error::Internal(format!(
            "pull in {w} produced {gained}, not a new letter at {center}"
        )));
    }
    Ok((next, gained))
}

/// Repeats [`star_step`] until the word is the star at `center`; returns the
/// visited words, `w` first.
pub fn walk_to_star(w: &TranspositionWord, center: Label) -> Result<Vec<TranspositionWord>> {
    let mut walk = vec![w.clone()];
    loop {
        let cur = walk.last().expect("non-empty");
        match star_step(cur, center) {
            Ok((next, _)) => walk.push(next),
            Err(Error::AlreadyStar(_)) => return Ok(walk),
            Err(e) => return Err(e),
        }
    }
}

/// A word with image `tree` that is central in the Hurwitz graph.
///
/// Recursively removes a leaf hanging from a boundary edge: a leaf `i` with
/// edge `(i i+1)` contributes the first letter, otherwise a leaf with edge
/// `(i-1 i)` contributes the last one. Labels are read cyclically within
/// the current vertex set.
pub fn build_central_word(tree: &GeometricTree) -> Result<TranspositionWord> {
    if !tree.spans_ground_set() {
        return Err(Error::NotATree(String::from("tree must span [n]")));
    }
    let letters = central_letters(tree)?;
    let w = TranspositionWord::new(tree.n(), letters)?;
    if !is_fn_word(&w) || gamma(&w).edges() != tree.edges() {
        return Err(Error::Internal(format!("built {w} for tree {tree}")));
    }
    Ok(w)
}

fn central_letters(tree: &GeometricTree) -> Result<Vec<Transposition>> {
    if tree.edges().is_empty() {
        return Ok(Vec::new());
    }
    let leaves = boundary_leaves(tree);
    if let Some(b) = leaves.iter().find(|b| b.side == BoundarySide::Next) {
        let mut letters = vec![b.edge];
        letters.extend(central_letters(&tree.without_leaf(b.leaf)?)?);
        return Ok(letters);
    }
    let b = leaves
        .first()
        .ok_or_else(|| Error::Internal(format!("tree {tree} has no boundary leaf")))?;
    let mut letters = central_letters(&tree.without_leaf(b.leaf)?)?;
    letters.push(b.edge);
    Ok(letters)
}
