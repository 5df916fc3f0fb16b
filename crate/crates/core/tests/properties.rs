use std::sync::OnceLock;

use proptest::prelude::*;

use hurwitz_core::moves::{
    apply_move, extended_left, extended_right, left_move, push_preserving, right_move, star_step, walk_to_star,
    MoveKind, MoveRecord,
};
use hurwitz_core::perm::Permutation;
use hurwitz_core::tree::{gamma, tree_order, GeometricTree};
use hurwitz_core::word::{enumerate_fn, is_fn_word, phi, word_to_chain};
use hurwitz_core::TranspositionWord;

const MAX_N: usize = 7;

fn words(n: usize) -> &'static [TranspositionWord] {
    static CACHE: OnceLock<Vec<Vec<TranspositionWord>>> = OnceLock::new();
    &CACHE.get_or_init(|| {
        (0..=MAX_N)
            .map(|n| {
                if n == 0 {
                    Vec::new()
                } else {
                    enumerate_fn(n, MAX_N).unwrap()
                }
            })
            .collect()
    })[n]
}

fn any_word(min_n: usize) -> impl Strategy<Value = TranspositionWord> {
    (min_n..=MAX_N).prop_flat_map(|n| (0..words(n).len()).prop_map(move |i| words(n)[i].clone()))
}

fn edge_change(a: &TranspositionWord, b: &TranspositionWord) -> usize {
    let (x, y) = (gamma(a), gamma(b));
    x.edges().iter().filter(|e| !y.has_edge(**e)).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn elementary_moves_stay_in_fn_and_invert(w in any_word(3), pick in any::<prop::sample::Index>()) {
        let i = pick.index(w.len() - 1) + 1;
        let r = right_move(&w, i).unwrap();
        let l = left_move(&w, i).unwrap();
        prop_assert!(is_fn_word(&r) && is_fn_word(&l));
        prop_assert_eq!(&left_move(&r, i).unwrap(), &w);
        prop_assert_eq!(&right_move(&l, i).unwrap(), &w);
        prop_assert_eq!(r.product(), Permutation::long_cycle(w.n()));
    }

    #[test]
    fn extended_moves_stay_in_fn_and_invert(w in any_word(3), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let len = w.len();
        let (mut i, mut j) = (a.index(len) + 1, b.index(len) + 1);
        if i == j {
            prop_assume!(len >= 2);
            j = if j == len { j - 1 } else { j + 1 };
        }
        if i > j {
            std::mem::swap(&mut i, &mut j);
        }
        let r = extended_right(&w, i, j).unwrap();
        let l = extended_left(&w, i, j).unwrap();
        prop_assert!(is_fn_word(&r) && is_fn_word(&l));
        prop_assert_eq!(&extended_left(&r, i, j).unwrap(), &w);
        prop_assert_eq!(&extended_right(&l, i, j).unwrap(), &w);
        prop_assert!(edge_change(&w, &r) <= 1);
        prop_assert!(edge_change(&w, &l) <= 1);
        // only one letter may leave the word
        prop_assert!(w.letters().iter().filter(|t| !l.contains(**t)).count() <= 1);
    }

    #[test]
    fn move_records_replay(w in any_word(3), a in any::<prop::sample::Index>()) {
        let i = a.index(w.len() - 1) + 1;
        for (kind, j) in [(MoveKind::Right, None), (MoveKind::Left, None), (MoveKind::ExtendedRight, Some(w.len())), (MoveKind::ExtendedLeft, Some(w.len()))] {
            if j == Some(i) {
                continue;
            }
            let after = apply_move(&w, kind, i, j).unwrap();
            let rec = MoveRecord { kind, i, j, before: w.clone(), after: after.clone() };
            prop_assert_eq!(rec.replay().unwrap(), after);
        }
    }

    #[test]
    fn text_forms_roundtrip(w in any_word(1)) {
        let text = w.to_string();
        prop_assert_eq!(&TranspositionWord::parse(&text, w.n()).unwrap(), &w);
        let t = gamma(&w).into_tree().unwrap();
        prop_assert_eq!(GeometricTree::parse(&t.to_string(), w.n()).unwrap(), t);
        prop_assert_eq!(w.product().to_string().parse::<Permutation>().unwrap(), w.product());
    }

    #[test]
    fn pushes_keep_label_in_front(w in any_word(3), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), side in any::<bool>()) {
        let (k, l) = (a.index(w.len()) + 1, b.index(w.len()) + 1);
        let t = w.letter(k).unwrap();
        let label = if side { t.a() } else { t.b() };
        let (v, cost) = push_preserving(&w, k, l, label).unwrap();
        prop_assert!(is_fn_word(&v));
        prop_assert_eq!(cost, k.abs_diff(l));
        prop_assert!(v.letter(l).unwrap().moves(label));
        // letters outside the swept range are untouched
        let (lo, hi) = (k.min(l), k.max(l));
        for m in (1..lo).chain(hi + 1..=w.len()) {
            prop_assert_eq!(v.letter(m), w.letter(m));
        }
    }

    #[test]
    fn star_steps_gain_one_spoke(w in any_word(2), c in any::<prop::sample::Index>()) {
        let n = w.n();
        let center = (c.index(n) + 1) as u8;
        let before = gamma(&w).degree(center);
        match star_step(&w, center) {
            Ok((next, gained)) => {
                prop_assert!(before < n - 1);
                prop_assert!(is_fn_word(&next));
                prop_assert!(gained.moves(center) && !w.contains(gained));
                prop_assert_eq!(gamma(&next).degree(center), before + 1);
            }
            Err(e) => prop_assert_eq!(e, hurwitz_core::Error::AlreadyStar(center as usize)),
        }
        let walk = walk_to_star(&w, center).unwrap();
        prop_assert_eq!(walk.len() - 1, n - 1 - before);
        prop_assert_eq!(gamma(walk.last().unwrap()).degree(center), n - 1);
    }

    #[test]
    fn words_are_linear_extensions_of_their_tree(w in any_word(2)) {
        let t = gamma(&w).into_tree().unwrap();
        let order = tree_order(&t);
        let letters = w.letters();
        for x in 0..letters.len() {
            for y in x + 1..letters.len() {
                prop_assert!(!order.less(letters[y], letters[x]));
            }
        }
    }

    #[test]
    fn phi_and_chains(w in any_word(2)) {
        let n = w.n();
        let r = phi(&w).unwrap();
        prop_assert_eq!(r.pi.n(), n - 1);
        prop_assert!(r.witness_sets.iter().all(|a| a.len() == 1));
        let chain = word_to_chain(&w).unwrap();
        prop_assert_eq!(chain.len(), n);
        for (k, p) in chain.iter().enumerate() {
            prop_assert!(p.is_nc_element());
            prop_assert_eq!(p.absolute_length(), k);
        }
        for pair in chain.windows(2) {
            prop_assert!(pair[0].nc_leq(&pair[1]).unwrap());
        }
    }
}
