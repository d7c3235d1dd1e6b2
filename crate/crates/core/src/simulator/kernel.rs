use super::{MultiGraph, SimulatorError};

/// The 2-core: repeatedly delete vertices of degree at most 1. Survivors are
/// relabelled `0..` in their original order.
pub fn two_core(g: &MultiGraph) -> MultiGraph {
    g.induced(&two_core_mask(g))
}

/// `mask[v]` is true iff `v` survives in the 2-core.
pub fn two_core_mask(g: &MultiGraph) -> Vec<bool> {
    let adj = g.adjacency();
    let mut degree = g.degrees().to_vec();
    let mut alive = vec![true; g.n_vertices()];
    let mut stack: Vec<usize> = (0..g.n_vertices()).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &(w, _) in adj.neighbours(v) {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

/// A core split into its kernel and the cycles that contain no kernel
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelDecomposition {
    /// Vertices of degree at least 3, relabelled in order, with every maximal
    /// path through degree-2 vertices contracted to one edge.
    pub kernel: MultiGraph,
    /// Components of the core that are plain cycles (unicyclic components of
    /// the original graph).
    pub isolated_cycles: usize,
}

impl KernelDecomposition {
    /// `edges - vertices` of the kernel: the total excess of the complex
    /// components.
    pub fn excess(&self) -> i64 {
        self.kernel.n_edges() as i64 - self.kernel.n_vertices() as i64
    }
}

/// Contracts a graph of minimum degree 2 to its kernel.
pub fn kernel(core: &MultiGraph) -> Result<KernelDecomposition, SimulatorError> {
    if let Some(v) = (0..core.n_vertices()).find(|&v| core.degree(v) < 2) {
        return Err(SimulatorError::DegreeBelowTwo {
            vertex: v,
            degree: core.degree(v),
        });
    }
    let adj = core.adjacency();
    let is_branch: Vec<bool> = core.degrees().iter().map(|&d| d >= 3).collect();
    let mut label = vec![usize::MAX; core.n_vertices()];
    let mut n_branch = 0;
    for v in 0..core.n_vertices() {
        if is_branch[v] {
            label[v] = n_branch;
            n_branch += 1;
        }
    }

    let mut used = vec![false; core.n_edges()];
    let mut k = MultiGraph::new(n_branch);
    for start in 0..core.n_vertices() {
        if !is_branch[start] {
            continue;
        }
        for &(first, first_edge) in adj.neighbours(start) {
            if used[first_edge] {
                continue;
            }
            used[first_edge] = true;
            let (mut at, mut via) = (first, first_edge);
            while !is_branch[at] {
                let &(next, edge) = adj
                    .neighbours(at)
                    .iter()
                    .find(|&&(_, e)| e != via)
                    .expect("degree-2 vertex has a second edge");
                used[edge] = true;
                at = next;
                via = edge;
            }
            k.add_edge(label[start], label[at]).expect("relabelled in range");
        }
    }

    // whatever is left is a union of cycles through degree-2 vertices
    let mut isolated_cycles = 0;
    for e in 0..core.n_edges() {
        if used[e] {
            continue;
        }
        isolated_cycles += 1;
        let (start, mut at) = core.edges()[e];
        used[e] = true;
        let mut via = e;
        while at != start {
            let &(next, edge) = adj
                .neighbours(at)
                .iter()
                .find(|&&(_, id)| id != via)
                .expect("degree-2 vertex has a second edge");
            used[edge] = true;
            at = next;
            via = edge;
        }
    }
    Ok(KernelDecomposition {
        kernel: k,
        isolated_cycles,
    })
}
