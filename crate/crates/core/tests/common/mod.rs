//! Independent reference implementations: adjacency built from scratch,
//! plain BFS, and naive subset enumeration with hashing.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

/// Adjacency lists with c1 = 0, c2 = 1, then path vertices in order.
pub fn adjacency(lengths: &[usize]) -> Vec<Vec<usize>> {
    let n = 2 + lengths.iter().sum::<usize>();
    let mut adj = vec![Vec::new(); n];
    let link = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(b);
        adj[b].push(a);
    };
    let mut next = 2;
    for &s in lengths {
        let mut prev = 0;
        for _ in 0..s {
            link(prev, next, &mut adj);
            prev = next;
            next += 1;
        }
        link(prev, 1, &mut adj);
    }
    adj
}

pub fn all_pairs(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    (0..adj.len())
        .map(|src| {
            let mut d = vec![usize::MAX; adj.len()];
            d[src] = 0;
            let mut q = VecDeque::from([src]);
            while let Some(x) = q.pop_front() {
                for &y in &adj[x] {
                    if d[y] == usize::MAX {
                        d[y] = d[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn resolves(d: &[Vec<usize>], w: &[usize]) -> bool {
    let mut seen = HashSet::new();
    (0..d.len()).all(|v| seen.insert(w.iter().map(|&x| d[x][v]).collect::<Vec<_>>()))
}

fn subsets(
    n: usize,
    k: usize,
    start: usize,
    cur: &mut Vec<usize>,
    out: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if cur.len() == k {
        return out(cur);
    }
    for x in start..n {
        cur.push(x);
        if subsets(n, k, x + 1, cur, out) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Brute-force metric dimension and the number of minimum resolving sets.
pub fn brute_beta(lengths: &[usize]) -> (usize, u64) {
    let d = all_pairs(&adjacency(lengths));
    let n = d.len();
    for k in 1..=n {
        let mut count = 0u64;
        subsets(n, k, 0, &mut Vec::new(), &mut |w| {
            if resolves(&d, w) {
                count += 1;
            }
            false
        });
        if count > 0 {
            return (k, count);
        }
    }
    unreachable!()
}

/// Every sorted length vector with `m` entries in `1..=max_s`.
pub fn multisets(m: usize, max_s: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, lo: usize, max_s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for s in lo..=max_s {
            cur.push(s);
            rec(m, s, max_s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, 1, max_s, &mut Vec::new(), &mut out);
    out
}
