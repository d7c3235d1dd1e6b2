use super::SimulatorError;

/// An undirected multigraph on vertices `0..n`; loops and parallel edges
/// allowed. A loop adds 2 to its vertex's degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    degree: Vec<usize>,
}

/// Compressed adjacency: the neighbours of `v` are
/// `entries[offsets[v]..offsets[v + 1]]`, each as `(neighbour, edge id)`.
/// A loop is listed twice at its vertex.
#[derive(Debug, Clone)]
pub struct Adjacency {
    pub offsets: Vec<usize>,
    pub entries: Vec<(usize, usize)>,
}

impl Adjacency {
    pub fn neighbours(&self, v: usize) -> &[(usize, usize)] {
        &self.entries[self.offsets[v]..self.offsets[v + 1]]
    }
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            degree: vec![0; n],
        }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, SimulatorError> {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize, SimulatorError> {
        if u >= self.n || v >= self.n {
            return Err(SimulatorError::VertexOutOfRange {
                vertex: u.max(v),
                n: self.n,
            });
        }
        self.edges.push((u.min(v), u.max(v)));
        self.degree[u] += 1;
        self.degree[v] += 1;
        Ok(self.edges.len() - 1)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.edges.len());
        self.edges.iter().all(|&(u, v)| u != v && seen.insert((u, v)))
    }

    pub fn is_cubic(&self) -> bool {
        self.degree.iter().all(|&d| d == 3)
    }

    pub fn adjacency(&self) -> Adjacency {
        let mut offsets = vec![0; self.n + 1];
        for &(u, v) in &self.edges {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for i in 0..self.n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut entries = vec![(0, 0); 2 * self.edges.len()];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            entries[fill[u]] = (v, id);
            fill[u] += 1;
            entries[fill[v]] = (u, id);
            fill[v] += 1;
        }
        Adjacency { offsets, entries }
    }

    /// The subgraph induced by `keep`, relabelled `0..` in increasing order of
    /// the old labels.
    pub fn induced(&self, keep: &[bool]) -> MultiGraph {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                label[v] = next;
                next += 1;
            }
        }
        let mut g = MultiGraph::new(next);
        for &(u, v) in &self.edges {
            if keep[u] && keep[v] {
                g.add_edge(label[u], label[v]).expect("relabelled in range");
            }
        }
        g
    }

    /// Connected component index of every vertex, and the component count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &(w, _) in adj.neighbours(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("in range")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)));
        Self::from_edges(a + b, edges).expect("in range")
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("in range")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::from_edges(10, outer.chain(spokes).chain(inner)).expect("in range")
    }

    /// Two vertices joined by three internally disjoint paths with the given
    /// numbers of interior vertices.
    pub fn theta(interior: [usize; 3]) -> Self {
        let n = 2 + interior.iter().sum::<usize>();
        let mut g = Self::new(n);
        let mut next = 2;
        for len in interior {
            let mut prev = 0;
            for _ in 0..len {
                g.add_edge(prev, next).expect("in range");
                prev = next;
                next += 1;
            }
            g.add_edge(prev, 1).expect("in range");
        }
        g
    }
}
