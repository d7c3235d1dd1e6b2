//! Brute-force references for small graphs: Kuratowski subdivisions by path
//! search, `K_4` minors by branch-set assignment, and the corpus of all
//! connected graphs on up to six vertices.

#![allow(dead_code)]

use std::collections::HashSet;

use critical_planarity::simulator::MultiGraph;

/// Adjacency bitmasks of the underlying simple graph (loops and repeated
/// edges dropped).
pub fn simple_masks(g: &MultiGraph) -> Vec<u32> {
    assert!(g.n_vertices() <= 32);
    let mut adj = vec![0u32; g.n_vertices()];
    for &(u, v) in g.edges() {
        if u != v {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Routes every pair in `pairs` by internally disjoint paths whose interior
/// avoids `used`.
fn route(adj: &[u32], pairs: &[(usize, usize)], used: u32) -> bool {
    let Some((&(a, b), rest)) = pairs.split_first() else {
        return true;
    };
    fn extend(adj: &[u32], at: usize, target: usize, used: u32, rest: &[(usize, usize)]) -> bool {
        if adj[at] >> target & 1 == 1 && route(adj, rest, used) {
            return true;
        }
        let mut free = adj[at] & !used;
        while free != 0 {
            let w = free.trailing_zeros() as usize;
            free &= free - 1;
            if extend(adj, w, target, used | 1 << w, rest) {
                return true;
            }
        }
        false
    }
    extend(adj, a, b, used, rest)
}

fn contains_subdivision(adj: &[u32], branch: &[usize], pairs: &[(usize, usize)]) -> bool {
    let used = branch.iter().fold(0u32, |m, &v| m | 1 << v);
    let pairs: Vec<(usize, usize)> = pairs.iter().map(|&(i, j)| (branch[i], branch[j])).collect();
    route(adj, &pairs, used)
}

/// Exhaustive search for a subdivision of `K_5` or `K_{3,3}`.
pub fn has_kuratowski_subdivision(g: &MultiGraph) -> bool {
    let adj = simple_masks(g);
    let n = adj.len();
    let deg = |v: usize| adj[v].count_ones();
    let k5_pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    for set in subsets(n, 5) {
        if set.iter().all(|&v| deg(v) >= 4) && contains_subdivision(&adj, &set, &k5_pairs) {
            return true;
        }
    }
    let k33_pairs: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    for set in subsets(n, 6) {
        if !set.iter().all(|&v| deg(v) >= 3) {
            continue;
        }
        // set[0] on side A; choose its two partners
        for pair in subsets(5, 2) {
            let side_a = [set[0], set[1 + pair[0]], set[1 + pair[1]]];
            let side_b: Vec<usize> = set.iter().copied().filter(|v| !side_a.contains(v)).collect();
            let branch = [side_a[0], side_a[1], side_a[2], side_b[0], side_b[1], side_b[2]];
            if contains_subdivision(&adj, &branch, &k33_pairs) {
                return true;
            }
        }
    }
    false
}

/// True iff the graph has a `K_4` minor: four disjoint connected branch
/// sets, pairwise adjacent.
pub fn has_k4_minor(g: &MultiGraph) -> bool {
    let adj = simple_masks(g);
    let n = adj.len();
    if n < 4 {
        return false;
    }
    fn connected(adj: &[u32], set: u32) -> bool {
        let start = set.trailing_zeros();
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & set & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == set
    }
    // label 4 = deleted; labels 0..3 appear first in increasing order
    let mut labels = vec![0usize; n];
    fn search(adj: &[u32], labels: &mut Vec<usize>, i: usize, max_used: usize) -> bool {
        if i == labels.len() {
            if max_used != 3 {
                return false;
            }
            let mut sets = [0u32; 4];
            for (v, &l) in labels.iter().enumerate() {
                if l < 4 {
                    sets[l] |= 1 << v;
                }
            }
            if !sets.iter().all(|&s| connected(adj, s)) {
                return false;
            }
            let touches = |a: u32, b: u32| (0..adj.len()).any(|v| a >> v & 1 == 1 && adj[v] & b != 0);
            return (0..4).all(|x| (x + 1..4).all(|y| touches(sets[x], sets[y])));
        }
        let next_new = if max_used == usize::MAX { 0 } else { max_used + 1 };
        for l in 0..=4 {
            if l < 4 && l > next_new {
                continue;
            }
            labels[i] = l;
            let used = if l < 4 && (max_used == usize::MAX || l > max_used) { l } else { max_used };
            if search(adj, labels, i + 1, used) {
                return true;
            }
        }
        false
    }
    search(&adj, &mut labels, 0, usize::MAX)
}

fn connected_mask(n: usize, adj: &[u32]) -> bool {
    if n == 0 {
        return false;
    }
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == (1 << n) - 1
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative of every isomorphism class of connected simple graphs
/// on `1..=max_n` vertices (1, 1, 2, 6, 21, 112 of them for `n = 1..6`).
pub fn connected_graphs_up_to(max_n: usize) -> Vec<MultiGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
        let perms = permutations(n);
        let mut seen = HashSet::new();
        for code in 0u32..1 << pairs.len() {
            let mut adj = vec![0u32; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if code >> i & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
            if !connected_mask(n, &adj) {
                continue;
            }
            let canonical = perms
                .iter()
                .map(|p| {
                    pairs.iter().enumerate().fold(0u32, |c, (i, &(u, v))| {
                        if code >> i & 1 == 1 {
                            c | 1 << index(p[u], p[v])
                        } else {
                            c
                        }
                    })
                })
                .min()
                .unwrap();
            if seen.insert(canonical) {
                let edges = pairs.iter().enumerate().filter(|&(i, _)| code >> i & 1 == 1).map(|(_, &e)| e);
                out.push(MultiGraph::from_edges(n, edges).unwrap());
            }
        }
    }
    out
}

/// `g` with a loop and a repeated edge added at deterministic places.
pub fn with_multi_edges(g: &MultiGraph, salt: usize) -> MultiGraph {
    let mut h = g.clone();
    let n = g.n_vertices();
    h.add_edge(salt % n, salt % n).unwrap();
    if let Some(&(u, v)) = g.edges().get(salt % g.n_edges().max(1)) {
        h.add_edge(u, v).unwrap();
        h.add_edge(v, u).unwrap();
    }
    h
}
