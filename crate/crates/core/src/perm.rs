//! Permutations of `[n]` and transpositions.
//!
//! Products follow the functional convention: `p.compose(&q)` maps `i` to
//! `p(q(i))`, so the right factor acts first. A word `t_1 ... t_k` therefore
//! evaluates `t_k` first.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A point of the ground set. Labels are 1-based.
pub type Label = u8;

/// Largest supported ground set.
pub const MAX_N: usize = Label::MAX as usize;

/// A bijection of `[n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<Label>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_N, "ground set too large");
        Self {
            images: (1..=n).map(|i| i as Label).collect(),
        }
    }

    /// The long cycle `1 -> 2 -> ... -> n -> 1`.
    pub fn long_cycle(n: usize) -> Self {
        assert!(n <= MAX_N, "ground set too large");
        Self {
            images: (1..=n).map(|i| (i % n + 1) as Label).collect(),
        }
    }

    /// Builds a permutation from its one-line images, checking bijectivity.
    pub fn from_images(images: Vec<Label>) -> Result<Self> {
        let n = images.len();
        if n > MAX_N {
            return Err(Error::InvalidSize(n));
        }
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > n {
                return Err(Error::LabelOutOfRange { label: x, n });
            }
            if seen[x - 1] {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("label {x} appears twice"),
                });
            }
            seen[x - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Label] {
        &self.images
    }

    /// Image of a 1-based label.
    #[inline]
    pub fn apply(&self, label: Label) -> Label {
        self.images[label as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = (i + 1) as Label;
        }
        Self { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::GroundSetMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Self {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    /// In-place `self ← self ∘ t`.
    #[inline]
    pub(crate) fn mul_transposition_right(&mut self, t: Transposition) {
        self.images.swap(t.a as usize - 1, t.b as usize - 1);
    }

    /// In-place `self ← t ∘ self`.
    #[inline]
    pub(crate) fn mul_transposition_left(&mut self, t: Transposition) {
        for x in self.images.iter_mut() {
            *x = t.apply(*x);
        }
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.n();
        let mut seen = alloc::vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize - 1;
            }
        }
        cycles
    }

    /// Minimal number of transpositions whose product is `self`.
    pub fn absolute_length(&self) -> usize {
        self.n() - self.cycle_count()
    }

    /// True when `a` and `b` lie on the same cycle.
    pub fn same_cycle(&self, a: Label, b: Label) -> bool {
        let mut x = self.apply(a);
        loop {
            if x == b {
                return true;
            }
            if x == a {
                return false;
            }
            x = self.apply(x);
        }
    }

    /// Membership in NC(n): `l(p) + l(p⁻¹c) = l(c)`.
    pub fn is_nc_element(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let c = Self::long_cycle(n);
        let rest = self.inverse().compose(&c).expect("same ground set");
        self.absolute_length() + rest.absolute_length() == n - 1
    }

    /// Order of NC(n): `l(self) + l(self⁻¹ other) = l(other)`.
    pub fn nc_leq(&self, other: &Self) -> Result<bool> {
        let gap = self.inverse().compose(other)?;
        Ok(self.absolute_length() + gap.absolute_length() == other.absolute_length())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::identity(0));
        }
        let images = s
            .split(',')
            .enumerate()
            .map(|(item, tok)| {
                tok.trim().parse::<Label>().map_err(|e| Error::Parse {
                    item: item + 1,
                    reason: format!("`{}`: {e}", tok.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(images)
    }
}

/// A transposition `(a b)`, stored with `a < b`.
///
/// Orientation is forgotten on construction, so `(2 1) == (1 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transposition {
    a: Label,
    b: Label,
}

impl Transposition {
    pub fn new(x: Label, y: Label) -> Result<Self> {
        if x == y {
            return Err(Error::DegenerateTransposition(x as usize));
        }
        if x == 0 || y == 0 {
            return Err(Error::LabelOutOfRange { label: 0, n: MAX_N });
        }
        Ok(Self {
            a: x.min(y),
            b: x.max(y),
        })
    }

    /// Unchecked constructor for internal use where `x != y` is known.
    #[inline]
    pub(crate) fn of(x: Label, y: Label) -> Self {
        debug_assert!(x != y && x != 0 && y != 0);
        Self {
            a: x.min(y),
            b: x.max(y),
        }
    }

    #[inline]
    pub fn a(self) -> Label {
        self.a
    }

    #[inline]
    pub fn b(self) -> Label {
        self.b
    }

    #[inline]
    pub fn moves(self, label: Label) -> bool {
        self.a == label || self.b == label
    }

    /// The endpoint opposite `label`, if `label` is an endpoint.
    #[inline]
    pub fn other(self, label: Label) -> Option<Label> {
        if self.a == label {
            Some(self.b)
        } else if self.b == label {
            Some(self.a)
        } else {
            None
        }
    }

    /// Shared endpoint of two distinct transpositions.
    pub fn common_label(self, other: Self) -> Option<Label> {
        if self == other {
            return None;
        }
        if other.moves(self.a) {
            Some(self.a)
        } else if other.moves(self.b) {
            Some(self.b)
        } else {
            None
        }
    }

    #[inline]
    pub fn apply(self, x: Label) -> Label {
        if x == self.a {
            self.b
        } else if x == self.b {
            self.a
        } else {
            x
        }
    }

    pub fn commutes_with(self, other: Self) -> bool {
        self == other || (!other.moves(self.a) && !other.moves(self.b))
    }

    /// `h⁻¹ self h` for a transposition `h` (which is its own inverse).
    #[inline]
    pub fn conjugate_by(self, h: Self) -> Self {
        Self::of(h.apply(self.a), h.apply(self.b))
    }

    pub fn to_permutation(self, n: usize) -> Result<Permutation> {
        if self.b as usize > n {
            return Err(Error::LabelOutOfRange {
                label: self.b as usize,
                n,
            });
        }
        let mut p = Permutation::identity(n);
        p.mul_transposition_right(self);
        Ok(p)
    }
}

/// `t^s = s⁻¹ t s`, the transposition swapping `s⁻¹(a)` and `s⁻¹(b)`.
pub fn conjugate(t: Transposition, s: &Permutation) -> Result<Transposition> {
    let n = s.n();
    if t.b as usize > n {
        return Err(Error::LabelOutOfRange { label: t.b as usize, n });
    }
    let inv = s.inverse();
    Ok(Transposition::of(inv.apply(t.a), inv.apply(t.b)))
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

impl FromStr for Transposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_transposition(s, 1)
    }
}

pub(crate) fn parse_transposition(s: &str, item: usize) -> Result<Transposition> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (x, y) = cleaned.split_once('-').ok_or_else(|| Error::Parse {
        item,
        reason: format!("expected `a-b`, got `{cleaned}`"),
    })?;
    let parse = |tok: &str| {
        tok.parse::<Label>().map_err(|e| Error::Parse {
            item,
            reason: format!("bad label `{tok}`: {e}"),
        })
    };
    let (x, y) = (parse(x)?, parse(y)?);
    if x == 0 || y == 0 {
        return Err(Error::Parse {
            item,
            reason: String::from("labels are 1-based"),
        });
    }
    if x == y {
        return Err(Error::Parse {
            item,
            reason: format!("duplicate label {x}"),
        });
    }
    Ok(Transposition::of(x, y))
}
