//! Planarity of multigraphs by the Demoucron–Malgrange–Pertuiset path
//! embedding algorithm, run on each biconnected block.
//!
//! Inputs here are kernels (tens of vertices) or at most a few thousand
//! vertices for cross-checks, so the quadratic algorithm is plenty.

use std::collections::HashSet;

use super::kernel::two_core;
use super::MultiGraph;

/// Exact planarity. Loops are subdivided twice and repeated edges once, which
/// leaves a simple graph with the same planarity.
pub fn is_planar(g: &MultiGraph) -> bool {
    let simple = two_core(&subdivide_to_simple(g));
    let adj = simple_adjacency(&simple);
    biconnected_blocks(&adj)
        .into_iter()
        .all(|block| block_is_planar(&block))
}

/// Replaces each loop by a triangle through two new vertices and each repeat
/// of an edge by a path through one new vertex.
pub fn subdivide_to_simple(g: &MultiGraph) -> MultiGraph {
    let mut seen = HashSet::new();
    let mut extra = Vec::new();
    let mut next = g.n_vertices();
    for &(u, v) in g.edges() {
        if u == v {
            extra.extend([(u, next), (next, next + 1), (next + 1, u)]);
            next += 2;
        } else if !seen.insert((u, v)) {
            extra.extend([(u, next), (next, v)]);
            next += 1;
        } else {
            extra.push((u, v));
        }
    }
    MultiGraph::from_edges(next, extra).expect("new vertices allocated above")
}

fn simple_adjacency(g: &MultiGraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n_vertices()];
    for &(u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Edge sets of the biconnected blocks of a simple graph.
fn biconnected_blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
            if *i < adj[v].len() {
                let w = adj[v][*i];
                *i += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (parent, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

fn block_is_planar(edges: &[(usize, usize)]) -> bool {
    if edges.len() < 9 {
        // K_{3,3} has 9 edges and K_5 has 10
        return true;
    }
    let mut label = std::collections::HashMap::new();
    for &(u, v) in edges {
        let next = label.len();
        label.entry(u).or_insert(next);
        let next = label.len();
        label.entry(v).or_insert(next);
    }
    let n = label.len();
    if edges.len() > 3 * n - 6 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        let (a, b) = (label[&u], label[&v]);
        adj[a].push(b);
        adj[b].push(a);
    }
    Embedding::new(adj).run()
}

struct Fragment {
    attachments: Vec<usize>,
    /// Component id for a bridge through unembedded vertices; `None` for a
    /// single edge between embedded vertices.
    component: Option<usize>,
}

struct Embedding {
    adj: Vec<Vec<usize>>,
    embedded: Vec<bool>,
    embedded_edges: HashSet<(usize, usize)>,
    faces: Vec<Vec<usize>>,
    face_sets: Vec<HashSet<usize>>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl Embedding {
    fn new(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        Self {
            adj,
            embedded: vec![false; n],
            embedded_edges: HashSet::new(),
            faces: Vec::new(),
            face_sets: Vec::new(),
        }
    }

    fn run(mut self) -> bool {
        let cycle = self.find_cycle();
        for (i, &v) in cycle.iter().enumerate() {
            self.embedded[v] = true;
            self.embedded_edges.insert(key(v, cycle[(i + 1) % cycle.len()]));
        }
        let mut reversed = cycle.clone();
        reversed.reverse();
        self.push_face(cycle);
        self.push_face(reversed);

        loop {
            let (fragments, component) = self.fragments();
            if fragments.is_empty() {
                return true;
            }
            let mut choice = None;
            for (fi, frag) in fragments.iter().enumerate() {
                let admissible: Vec<usize> = (0..self.faces.len())
                    .filter(|&f| frag.attachments.iter().all(|a| self.face_sets[f].contains(a)))
                    .collect();
                match admissible.len() {
                    0 => return false,
                    1 => {
                        choice = Some((fi, admissible[0]));
                        break;
                    }
                    _ => {
                        if choice.is_none() {
                            choice = Some((fi, admissible[0]));
                        }
                    }
                }
            }
            let (fi, face) = choice.expect("at least one fragment");
            let path = self.fragment_path(&fragments[fi], &component);
            self.embed_path(face, &path);
        }
    }

    fn push_face(&mut self, face: Vec<usize>) {
        self.face_sets.push(face.iter().copied().collect());
        self.faces.push(face);
    }

    fn find_cycle(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        let mut stack = vec![(0usize, 0usize)];
        depth[0] = 0;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i == self.adj[v].len() {
                stack.pop();
                continue;
            }
            let w = self.adj[v][*i];
            *i += 1;
            if depth[w] == usize::MAX {
                parent[w] = v;
                depth[w] = depth[v] + 1;
                stack.push((w, 0));
            } else if w != parent[v] && depth[w] < depth[v] {
                let mut cycle = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
        }
        unreachable!("a biconnected block with 9 or more edges has a cycle")
    }

    /// The bridges of the graph relative to the embedded part, and the
    /// component label of every unembedded vertex.
    fn fragments(&self) -> (Vec<Fragment>, Vec<usize>) {
        let n = self.adj.len();
        let mut component = vec![usize::MAX; n];
        let mut fragments = Vec::new();
        for s in 0..n {
            if self.embedded[s] || component[s] != usize::MAX {
                continue;
            }
            let id = fragments.len();
            let mut attachments = HashSet::new();
            let mut stack = vec![s];
            component[s] = id;
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if self.embedded[w] {
                        attachments.insert(w);
                    } else if component[w] == usize::MAX {
                        component[w] = id;
                        stack.push(w);
                    }
                }
            }
            let mut attachments: Vec<usize> = attachments.into_iter().collect();
            attachments.sort_unstable();
            fragments.push(Fragment {
                attachments,
                component: Some(id),
            });
        }
        for u in 0..n {
            if !self.embedded[u] {
                continue;
            }
            for &v in &self.adj[u] {
                if u < v && self.embedded[v] && !self.embedded_edges.contains(&(u, v)) {
                    fragments.push(Fragment {
                        attachments: vec![u, v],
                        component: None,
                    });
                }
            }
        }
        (fragments, component)
    }

    /// A path through the fragment between two distinct attachments.
    fn fragment_path(&self, frag: &Fragment, component: &[usize]) -> Vec<usize> {
        let Some(id) = frag.component else {
            return frag.attachments.clone();
        };
        let a = frag.attachments[0];
        let start = *self.adj[a]
            .iter()
            .find(|&&c| !self.embedded[c] && component[c] == id)
            .expect("attachment touches its fragment");
        let mut parent = std::collections::HashMap::new();
        parent.insert(start, a);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if self.embedded[y] {
                    if y != a {
                        let mut path = vec![y, x];
                        let mut z = x;
                        while z != start {
                            z = parent[&z];
                            path.push(z);
                        }
                        path.push(a);
                        path.reverse();
                        return path;
                    }
                } else if !parent.contains_key(&y) {
                    parent.insert(y, x);
                    queue.push_back(y);
                }
            }
        }
        unreachable!("fragments of a biconnected graph have two attachments")
    }

    fn embed_path(&mut self, face: usize, path: &[usize]) {
        let (a, b) = (path[0], *path.last().expect("path has two ends"));
        let interior = &path[1..path.len() - 1];
        let old = std::mem::take(&mut self.faces[face]);
        let len = old.len();
        let ia = old.iter().position(|&v| v == a).expect("a on face");
        let ib = old.iter().position(|&v| v == b).expect("b on face");
        let walk = |from: usize, to: usize| {
            let mut out = Vec::new();
            let mut i = from;
            loop {
                out.push(old[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % len;
            }
            out
        };
        let mut first = walk(ia, ib);
        first.extend(interior.iter().rev());
        let mut second = walk(ib, ia);
        second.extend(interior.iter());

        self.face_sets[face] = first.iter().copied().collect();
        self.faces[face] = first;
        self.push_face(second);
        for &v in interior {
            self.embedded[v] = true;
        }
        for w in path.windows(2) {
            self.embedded_edges.insert(key(w[0], w[1]));
        }
    }
}
