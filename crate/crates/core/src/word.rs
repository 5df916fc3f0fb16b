//! Words in transpositions and the set `F_n` of minimal factorizations of
//! the long cycle `c = (1 2 ... n)`.
//!
//! A word `(t_1, ..., t_{n-1})` belongs to `F_n` when `t_1 t_2 ... t_{n-1} = c`
//! under the product convention of [`crate::perm`]. Prefix products of such a
//! word form a maximal chain of NC(n), which is the identification used
//! throughout the crate.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{parse_transposition, Label, Permutation, Transposition, MAX_N};

/// Default largest `n` accepted by the enumerators.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

/// An ordered sequence of transpositions on `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TranspositionWord {
    n: usize,
    letters: Vec<Transposition>,
}

impl TranspositionWord {
    pub fn new(n: usize, letters: Vec<Transposition>) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::InvalidSize(n));
        }
        if let Some(bad) = letters.iter().find(|t| t.b() as usize > n) {
            return Err(Error::LabelOutOfRange {
                label: bad.b() as usize,
                n,
            });
        }
        Ok(Self { n, letters })
    }

    /// Caller guarantees every label is in `[n]`.
    pub(crate) fn from_trusted(n: usize, letters: Vec<Transposition>) -> Self {
        debug_assert!(letters.iter().all(|t| t.b() as usize <= n));
        Self { n, letters }
    }

    /// Parses `"a-b,c-d"`. An empty string is the empty word.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let letters = parse_letters(s)?;
        for (item, t) in letters.iter().enumerate() {
            if t.b() as usize > n {
                return Err(Error::Parse {
                    item: item + 1,
                    reason: format!("label {} is outside [1, {n}]", t.b()),
                });
            }
        }
        Self::new(n, letters)
    }

    /// Parses a candidate element of `F_n`, taking `n` as one more than the
    /// number of letters.
    pub fn parse_infer(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        let n = letters.len() + 1;
        Self::parse(s, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Transposition] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn into_letters(self) -> Vec<Transposition> {
        self.letters
    }

    /// 1-based letter access.
    pub fn letter(&self, position: usize) -> Option<Transposition> {
        position.checked_sub(1).and_then(|i| self.letters.get(i)).copied()
    }

    /// `t_1 t_2 ... t_k`, with `t_k` acting first.
    pub fn product(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for &t in &self.letters {
            p.mul_transposition_right(t);
        }
        p
    }

    pub fn contains(&self, t: Transposition) -> bool {
        self.letters.contains(&t)
    }

    /// 1-based position of the first occurrence of `t`.
    pub fn position(&self, t: Transposition) -> Option<usize> {
        self.letters.iter().position(|&x| x == t).map(|i| i + 1)
    }
}

/// Parses a comma-separated list of `a-b` letters.
pub fn parse_letters(s: &str) -> Result<Vec<Transposition>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .enumerate()
        .map(|(i, tok)| parse_transposition(tok, i + 1))
        .collect()
}

impl fmt::Display for TranspositionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl Serialize for TranspositionWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TranspositionWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> core::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Self::parse_infer(&s).map_err(serde::de::Error::custom)
    }
}

/// True iff `w` has `n - 1` letters and multiplies out to the long cycle.
pub fn is_fn_word(w: &TranspositionWord) -> bool {
    let n = w.n();
    if n == 0 || w.len() != n - 1 {
        return false;
    }
    w.product() == Permutation::long_cycle(n)
}

fn check_size(n: usize, cap: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidSize(n));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

/// All transpositions of `[n]` in lexicographic `(a, b)` order.
pub fn all_transpositions(n: usize) -> Vec<Transposition> {
    let n = n as Label;
    (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| Transposition::of(a, b)))
        .collect()
}

/// Calls `visit` on every element of `F_n`, in lexicographic order of letters.
///
/// Depth-first over prefixes. With prefix product `p`, the remaining target
/// is `r = p⁻¹ c`; the next letter `t` is kept only when `l(t r) = l(r) - 1`,
/// i.e. when both endpoints of `t` lie on one cycle of `r`.
pub fn visit_fn(n: usize, cap: usize, mut visit: impl FnMut(&[Transposition])) -> Result<()> {
    check_size(n, cap)?;
    let alphabet = all_transpositions(n);
    let mut remaining = Permutation::long_cycle(n);
    let mut letters = Vec::with_capacity(n - 1);
    fn rec(
        alphabet: &[Transposition],
        remaining: &mut Permutation,
        letters: &mut Vec<Transposition>,
        target_len: usize,
        visit: &mut dyn FnMut(&[Transposition]),
    ) {
        if letters.len() == target_len {
            debug_assert!(remaining.is_identity());
            visit(letters);
            return;
        }
        for &t in alphabet {
            if !remaining.same_cycle(t.a(), t.b()) {
                continue;
            }
            remaining.mul_transposition_left(t);
            letters.push(t);
            rec(alphabet, remaining, letters, target_len, visit);
            letters.pop();
            remaining.mul_transposition_left(t);
        }
    }
    rec(&alphabet, &mut remaining, &mut letters, n - 1, &mut visit);
    Ok(())
}

/// Every element of `F_n` exactly once, lexicographically ordered.
pub fn enumerate_fn(n: usize, cap: usize) -> Result<Vec<TranspositionWord>> {
    let mut out = Vec::new();
    visit_fn(n, cap, |letters| {
        out.push(TranspositionWord::from_trusted(n, letters.to_vec()))
    })?;
    Ok(out)
}

/// `σ_1, ..., σ_n` with `σ_n = id` and `σ_j = t_j σ_{j+1}`.
///
/// Index `0` of the result holds `σ_1`.
pub fn partial_products(w: &TranspositionWord) -> Result<Vec<Permutation>> {
    let n = w.n();
    if n == 0 || w.len() != n - 1 {
        return Err(Error::NotInFn(format!(
            "expected {} letters, got {}",
            n.saturating_sub(1),
            w.len()
        )));
    }
    let mut sigmas = Vec::with_capacity(n);
    let mut sigma = Permutation::identity(n);
    sigmas.push(sigma.clone());
    for &t in w.letters().iter().rev() {
        sigma.mul_transposition_left(t);
        sigmas.push(sigma.clone());
    }
    sigmas.reverse();
    if sigmas[0] != Permutation::long_cycle(n) {
        return Err(Error::NotInFn(format!("product is {}", sigmas[0])));
    }
    Ok(sigmas)
}

/// Output of [`phi`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiResult {
    /// `π_w`, a permutation of `[n - 1]`.
    pub pi: Permutation,
    /// `σ_1, ..., σ_n`.
    pub partials: Vec<Permutation>,
    /// `A_1, ..., A_{n-1}`.
    pub witness_sets: Vec<Vec<Label>>,
}

/// The map `F_n → S_{n-1}` sending `w` to `π_w`, where `π_w(j)` is the unique
/// `i ≤ n - 1` with `σ_j(i) > σ_{j+1}(i)`.
pub fn phi(w: &TranspositionWord) -> Result<PhiResult> {
    let partials = partial_products(w)?;
    let n = w.n();
    let mut witness_sets = Vec::with_capacity(n - 1);
    let mut images = Vec::with_capacity(n - 1);
    for j in 0..n - 1 {
        let (cur, next) = (&partials[j], &partials[j + 1]);
        let set: Vec<Label> = (1..n as Label).filter(|&i| cur.apply(i) > next.apply(i)).collect();
        if set.len() != 1 {
            return Err(Error::PhiViolation {
                position: j + 1,
                size: set.len(),
            });
        }
        images.push(set[0]);
        witness_sets.push(set);
    }
    let pi = Permutation::from_images(images).map_err(|e| Error::Internal(format!("π_w is not a bijection: {e}")))?;
    Ok(PhiResult {
        pi,
        partials,
        witness_sets,
    })
}

/// Prefix products `id = p_0 < p_1 < ... < p_{n-1} = c` as a maximal chain
/// of NC(n).
pub fn word_to_chain(w: &TranspositionWord) -> Result<Vec<Permutation>> {
    let n = w.n();
    if n == 0 {
        return Err(Error::InvalidSize(0));
    }
    let mut chain = Vec::with_capacity(w.len() + 1);
    let mut p = Permutation::identity(n);
    chain.push(p.clone());
    for (j, &t) in w.letters().iter().enumerate() {
        p.mul_transposition_right(t);
        if !p.is_nc_element() {
            return Err(Error::NotNcElement { position: j + 1 });
        }
        let prev = &chain[j];
        if !prev.nc_leq(&p)? || p.absolute_length() != prev.absolute_length() + 1 {
            return Err(Error::NotNcElement { position: j + 1 });
        }
        chain.push(p.clone());
    }
    if !is_fn_word(w) {
        return Err(Error::NotInFn(w.to_string()));
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(s: &str, n: usize) -> TranspositionWord {
        TranspositionWord::parse(s, n).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(is_fn_word(&w("1-2,2-3", 3)));
        assert!(!is_fn_word(&w("2-3,1-2", 3)));
        assert!(!is_fn_word(&w("1-2,1-2", 3)));
        assert!(is_fn_word(&w("", 1)));
        assert!(!is_fn_word(&w("1-2", 3)));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_fn(1, 8).unwrap(), vec![w("", 1)]);
        assert_eq!(enumerate_fn(2, 8).unwrap(), vec![w("1-2", 2)]);
        assert_eq!(
            enumerate_fn(3, 8).unwrap(),
            vec![w("1-2,2-3", 3), w("1-3,1-2", 3), w("2-3,1-3", 3)]
        );
    }

    /// Unpruned oracle: every (n-1)-tuple of transpositions, filtered by product.
    fn brute_force_fn(n: usize) -> Vec<TranspositionWord> {
        let alphabet = all_transpositions(n);
        let mut out = Vec::new();
        let mut idx = vec![0usize; n - 1];
        loop {
            let word = TranspositionWord::from_trusted(n, idx.iter().map(|&i| alphabet[i]).collect());
            if word.product() == Permutation::long_cycle(n) {
                out.push(word);
            }
            let mut k = n - 1;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < alphabet.len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 2..=5 {
            let fast = enumerate_fn(n, 8).unwrap();
            assert_eq!(fast, brute_force_fn(n), "n = {n}");
        }
        assert_eq!(enumerate_fn(5, 8).unwrap().len(), 125);
    }

    #[test]
    fn enumeration_is_sorted_and_counted() {
        for n in 2..=7 {
            let words = enumerate_fn(n, 8).unwrap();
            assert_eq!(words.len(), n.pow(n as u32 - 2), "n = {n}");
            assert!(words.windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn cap_and_size_guards() {
        assert_eq!(
            enumerate_fn(9, DEFAULT_ENUMERATION_CAP),
            Err(Error::CapExceeded { n: 9, cap: 8 })
        );
        assert_eq!(enumerate_fn(0, 8), Err(Error::InvalidSize(0)));
    }

    #[test]
    fn partial_product_examples() {
        let s = partial_products(&w("1-2,2-3", 3)).unwrap();
        assert_eq!(s[2], Permutation::identity(3));
        assert_eq!(s[1], "1,3,2".parse().unwrap());
        assert_eq!(s[0], Permutation::long_cycle(3));
        let s = partial_products(&w("1-3,1-2", 3)).unwrap();
        assert_eq!(s[1], "2,1,3".parse().unwrap());
        assert!(partial_products(&w("2-3,1-2", 3)).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&w("1-2,2-3", 3)).unwrap().pi, Permutation::identity(2));
        let r = phi(&w("1-3,1-2", 3)).unwrap();
        assert_eq!(r.pi, "2,1".parse().unwrap());
        assert_eq!(r.witness_sets, vec![vec![2], vec![1]]);
        assert_eq!(phi(&w("1-2", 2)).unwrap().pi, Permutation::identity(1));
        assert!(phi(&w("1-2,1-2", 3)).is_err());
    }

    #[test]
    fn phi_is_well_defined_up_to_six() {
        for n in 2..=6 {
            for word in enumerate_fn(n, 8).unwrap() {
                let r = phi(&word).unwrap();
                assert_eq!(r.pi.n(), n - 1);
                assert_eq!(r.partials.len(), n);
            }
        }
    }

    #[test]
    fn chain_examples() {
        let chain = word_to_chain(&w("1-2,2-3", 3)).unwrap();
        assert_eq!(
            chain,
            vec![
                Permutation::identity(3),
                "2,1,3".parse().unwrap(),
                Permutation::long_cycle(3)
            ]
        );
        let chain = word_to_chain(&w("1-3,1-2", 3)).unwrap();
        assert_eq!(chain[1], "3,2,1".parse().unwrap());
        assert_eq!(word_to_chain(&w("", 1)).unwrap(), vec![Permutation::identity(1)]);
        assert!(word_to_chain(&w("1-3,2-4,1-2", 4)).is_err());
    }

    #[test]
    fn chains_are_maximal_up_to_five() {
        for n in 1..=5 {
            for word in enumerate_fn(n, 8).unwrap() {
                let chain = word_to_chain(&word).unwrap();
                assert_eq!(chain.len(), n);
                for pair in chain.windows(2) {
                    assert!(pair[0].nc_leq(&pair[1]).unwrap());
                    assert_ne!(pair[0], pair[1]);
                }
            }
        }
    }

    #[test]
    fn parse_errors_name_the_item() {
        let err = TranspositionWord::parse("1-2, 3-3", 3).unwrap_err();
        assert!(matches!(err, Error::Parse { item: 2, .. }));
        let err = TranspositionWord::parse("1-2,2-5", 3).unwrap_err();
        assert!(matches!(err, Error::Parse { item: 2, .. }));
        assert_eq!(w(" 1 - 2 , 2-3 ", 3), w("1-2,2-3", 3));
    }
}
