//! Brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::VecDeque;

use hurwitz_core::{Transposition, TranspositionWord};

pub type Edge = (u8, u8);

pub fn tr(e: Edge) -> Transposition {
    Transposition::new(e.0, e.1).unwrap()
}

pub fn pair(t: Transposition) -> Edge {
    (t.a(), t.b())
}

pub fn pairs(n: u8) -> Vec<Edge> {
    let mut v = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            v.push((a, b));
        }
    }
    v
}

/// Product of the letters, rightmost acting first, as an image table.
pub fn product(n: u8, letters: &[Edge]) -> Vec<u8> {
    (1..=n)
        .map(|x| {
            letters.iter().rev().fold(x, |y, &(a, b)| {
                if y == a {
                    b
                } else if y == b {
                    a
                } else {
                    y
                }
            })
        })
        .collect()
}

pub fn is_long_cycle(n: u8, images: &[u8]) -> bool {
    images
        .iter()
        .enumerate()
        .all(|(i, &y)| y as usize == (i + 1) % n as usize + 1)
}

pub fn rank(n: u8, k: u8, x: u8) -> u8 {
    (x + n - k) % n
}

pub fn cross(e: Edge, f: Edge) -> bool {
    let (a, b) = e;
    let (c, d) = f;
    if a == c || a == d || b == c || b == d {
        return false;
    }
    (a < c && c < b) != (a < d && d < b)
}

pub fn is_noncrossing_spanning_tree(n: u8, edges: &[Edge]) -> bool {
    if edges.len() + 1 != n as usize {
        return false;
    }
    let mut parent: Vec<u8> = (0..=n).collect();
    fn find(p: &mut [u8], x: u8) -> u8 {
        let mut r = x;
        while p[r as usize] != r {
            r = p[r as usize];
        }
        p[x as usize] = r;
        r
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra as usize] = rb;
    }
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if cross(e, f) {
                return false;
            }
        }
    }
    true
}

pub fn decreasing_neighbors(n: u8, letters: &[Edge]) -> bool {
    for i in 0..letters.len() {
        for j in i + 1..letters.len() {
            let (x, y) = (letters[i], letters[j]);
            for a in [x.0, x.1] {
                if a != y.0 && a != y.1 {
                    continue;
                }
                let c = if x.0 == a { x.1 } else { x.0 };
                let b = if y.0 == a { y.1 } else { y.0 };
                if rank(n, a, b) >= rank(n, a, c) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn word_of(n: u8, letters: &[Edge]) -> TranspositionWord {
    TranspositionWord::new(n as usize, letters.iter().map(|&e| tr(e)).collect()).unwrap()
}

pub fn letters_of(w: &TranspositionWord) -> Vec<Edge> {
    w.letters().iter().map(|&t| pair(t)).collect()
}

pub fn tuples(alphabet: &[Edge], len: usize, visit: &mut dyn FnMut(&[Edge])) {
    let mut cur = Vec::with_capacity(len);
    fn rec(alphabet: &[Edge], len: usize, cur: &mut Vec<Edge>, visit: &mut dyn FnMut(&[Edge])) {
        if cur.len() == len {
            visit(cur);
            return;
        }
        for &e in alphabet {
            cur.push(e);
            rec(alphabet, len, cur, visit);
            cur.pop();
        }
    }
    rec(alphabet, len, &mut cur, visit);
}

/// Decodes every Prüfer sequence into a labelled tree.
pub fn pruefer_trees(n: u8) -> Vec<Vec<Edge>> {
    if n == 1 {
        return vec![Vec::new()];
    }
    if n == 2 {
        return vec![vec![(1, 2)]];
    }
    let mut out = Vec::new();
    let seqs = (n as usize).pow(n as u32 - 2);
    for code in 0..seqs {
        let mut seq = Vec::new();
        let mut c = code;
        for _ in 0..n - 2 {
            seq.push((c % n as usize) as u8 + 1);
            c /= n as usize;
        }
        let mut degree = vec![1u8; n as usize + 1];
        for &s in &seq {
            degree[s as usize] += 1;
        }
        let mut edges = Vec::new();
        for &s in &seq {
            let leaf = (1..=n).find(|&v| degree[v as usize] == 1).unwrap();
            edges.push((leaf.min(s), leaf.max(s)));
            degree[leaf as usize] -= 1;
            degree[s as usize] -= 1;
        }
        let rest: Vec<u8> = (1..=n).filter(|&v| degree[v as usize] == 1).collect();
        edges.push((rest[0], rest[1]));
        edges.sort();
        out.push(edges);
    }
    out
}

/// `<_T` as the transitive closure of the covering relation, by matrix.
pub fn closure(n: u8, edges: &[Edge]) -> Vec<Vec<bool>> {
    let m = edges.len();
    let mut rel = vec![vec![false; m]; m];
    for (x, &e) in edges.iter().enumerate() {
        for (y, &f) in edges.iter().enumerate() {
            if x == y {
                continue;
            }
            for i in [e.0, e.1] {
                if i != f.0 && i != f.1 {
                    continue;
                }
                let j = if e.0 == i { e.1 } else { e.0 };
                let k = if f.0 == i { f.1 } else { f.0 };
                // (i j) ≺ (i k) iff k <_i j
                if rank(n, i, k) < rank(n, i, j) {
                    rel[x][y] = true;
                }
            }
        }
    }
    for k in 0..m {
        for i in 0..m {
            for j in 0..m {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    rel
}

/// Plain BFS distances; `u32::MAX` marks unreachable vertices.
pub fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<u32> {
    let mut d = vec![u32::MAX; adj.len()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        for &u in &adj[v] {
            if d[u] == u32::MAX {
                d[u] = d[v] + 1;
                q.push_back(u);
            }
        }
    }
    d
}
