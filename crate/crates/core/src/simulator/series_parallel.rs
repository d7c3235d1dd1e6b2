use std::collections::BTreeSet;

use super::MultiGraph;

/// True iff `g` has no `K_4` minor. Loops are deleted, parallel edges merged,
/// vertices of degree at most 1 deleted and vertices of degree 2 suppressed
/// until nothing applies; the graph is series-parallel iff no vertex is left.
pub fn is_series_parallel(g: &MultiGraph) -> bool {
    let n = g.n_vertices();
    let mut nbrs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in g.edges() {
        if u != v {
            nbrs[u].insert(v);
            nbrs[v].insert(u);
        }
    }
    let mut alive = vec![true; n];
    let mut work: Vec<usize> = (0..n).collect();
    while let Some(v) = work.pop() {
        if !alive[v] || nbrs[v].len() > 2 {
            continue;
        }
        alive[v] = false;
        let around: Vec<usize> = std::mem::take(&mut nbrs[v]).into_iter().collect();
        for &w in &around {
            nbrs[w].remove(&v);
        }
        if let [a, b] = around[..] {
            nbrs[a].insert(b);
            nbrs[b].insert(a);
        }
        work.extend(around);
    }
    alive.iter().all(|a| !a)
}
