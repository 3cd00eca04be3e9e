//! Immutable simple graphs over dense vertex indices `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex so that the solvers can
//! take neighborhood intersections a word at a time. Graphs never change
//! after construction; every "modification" builds a new graph.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Builds a simple graph from an edge list. Rejects loops and out-of-range
    /// endpoints; parallel edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges as ordered pairs (u, v) with u < v.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_iter(self.n, (0..self.n).filter(|&v| self.degree(v) == 0))
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == 0)
    }

    /// (δ(G), Δ(G)). The graph must be nonempty.
    pub fn degree_stats(&self) -> (usize, usize) {
        assert!(self.n >= 1, "degree_stats on empty graph");
        let mut min = usize::MAX;
        let mut max = 0;
        for v in 0..self.n {
            let d = self.degree(v);
            min = min.min(d);
            max = max.max(d);
        }
        (min, max)
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) == self.n - 1
    }

    pub fn universal_vertices(&self) -> VertexSet {
        VertexSet::from_iter(self.n, (0..self.n).filter(|&v| self.is_universal(v)))
    }

    /// BFS distance; `None` when `v` is unreachable from `u`.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        assert!(u < self.n && v < self.n);
        if u == v {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in self.adj[x].iter() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    if y == v {
                        return Some(dist[y]);
                    }
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Max distance over all pairs; errors on disconnected input.
    pub fn diameter(&self) -> Result<usize> {
        assert!(self.n >= 1);
        let mut best = 0;
        for u in 0..self.n {
            for &d in &self.bfs_distances(u) {
                if d == usize::MAX {
                    return Err(Error::Disconnected);
                }
                best = best.max(d);
            }
        }
        Ok(best)
    }

    fn bfs_distances(&self, u: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in self.adj[x].iter() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() == self.n - 1 && self.is_connected()
    }

    /// Induced subgraph on `V \ s`, relabeled contiguously. The returned map
    /// sends each new index to the vertex it came from.
    pub fn delete_vertices(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.n).filter(|&v| !s.contains(v)).collect();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            new_index[v] = i;
        }
        let mut adj = vec![VertexSet::empty(kept.len()); kept.len()];
        for (i, &v) in kept.iter().enumerate() {
            for w in self.adj[v].iter() {
                if new_index[w] != usize::MAX {
                    adj[i].insert(new_index[w]);
                }
            }
        }
        (Graph { n: kept.len(), adj }, kept)
    }

    pub fn delete_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        self.delete_vertices(&VertexSet::from_iter(self.n, [v]))
    }

    /// New graph with `extra` fresh isolated vertices appended, plus `edges`
    /// added (may touch old and new vertices alike).
    pub fn extend_with(&self, extra: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let n = self.n + extra;
        let mut all: Vec<(usize, usize)> = self.edges().collect();
        all.extend_from_slice(edges);
        Graph::new(n, &all)
    }

    /// Leaf/support/semi-support classification of every vertex.
    pub fn vertex_classes(&self) -> VertexClasses {
        let n = self.n;
        let leaves = VertexSet::from_iter(n, (0..n).filter(|&v| self.degree(v) == 1));
        let supports =
            VertexSet::from_iter(n, (0..n).filter(|&v| self.adj[v].intersects(&leaves)));
        let strong_supports = VertexSet::from_iter(
            n,
            supports.iter().filter(|&v| self.adj[v].intersection_len(&leaves) >= 2),
        );
        let strong_leaves = VertexSet::from_iter(
            n,
            leaves.iter().filter(|&v| self.adj[v].intersects(&strong_supports)),
        );
        // A semi-support is a non-leaf vertex adjacent to a support.
        let semi_supports = VertexSet::from_iter(
            n,
            (0..n).filter(|&v| !leaves.contains(v) && self.adj[v].intersects(&supports)),
        );
        // Supports that are not isolated within the subgraph induced by supports.
        let adjacent_supports = VertexSet::from_iter(
            n,
            supports.iter().filter(|&v| self.adj[v].intersects(&supports)),
        );
        let universal = self.universal_vertices();
        VertexClasses {
            leaves,
            supports,
            strong_supports,
            strong_leaves,
            semi_supports,
            adjacent_supports,
            universal,
        }
    }

    /// True iff the bijection `mapping` (h-vertex -> g-vertex) sends every
    /// edge of `h` onto an edge of `g`, i.e. `h` is a spanning subgraph of `g`
    /// under that identification.
    pub fn is_spanning_subgraph(h: &Graph, g: &Graph, mapping: &[usize]) -> Result<bool> {
        if h.n != g.n || mapping.len() != h.n {
            return Err(Error::BadMapping);
        }
        let mut seen = vec![false; g.n];
        for &img in mapping {
            if img >= g.n || seen[img] {
                return Err(Error::BadMapping);
            }
            seen[img] = true;
        }
        Ok(h.edges().all(|(u, v)| g.has_edge(mapping[u], mapping[v])))
    }

    /// Exact Hamiltonicity classification by subset dynamic programming.
    pub fn hamiltonian(&self, limit: usize) -> Result<Hamiltonicity> {
        if self.n > limit {
            return Err(Error::SizeLimit { order: self.n, limit });
        }
        let n = self.n;
        if n == 0 {
            return Ok(Hamiltonicity::Neither);
        }
        if n == 1 {
            // A single vertex carries a trivial Hamiltonian path and no cycle.
            return Ok(Hamiltonicity::PathOnly);
        }
        let masks: Vec<u32> = (0..n)
            .map(|v| self.adj[v].iter().fold(0u32, |m, w| m | 1 << w))
            .collect();
        let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
        // dp[mask] = set of endpoints of paths that start at vertex 0 and cover mask.
        let mut dp = vec![0u32; 1 << n];
        dp[1] = 1;
        let mut cycle = false;
        for mask in 1u32..=full {
            if mask & 1 == 0 || dp[mask as usize] == 0 {
                continue;
            }
            let ends = dp[mask as usize];
            if mask == full && ends & masks[0] != 0 && n >= 3 {
                cycle = true;
                break;
            }
            let mut e = ends;
            while e != 0 {
                let u = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut cand = masks[u] & !mask;
                while cand != 0 {
                    let w = cand.trailing_zeros() as usize;
                    cand &= cand - 1;
                    dp[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
        if cycle {
            return Ok(Hamiltonicity::Cycle);
        }
        // Paths may start anywhere, so rerun the DP seeded with all vertices.
        let mut dp = vec![0u32; 1 << n];
        for v in 0..n {
            dp[1 << v] = 1 << v;
        }
        for mask in 1u32..=full {
            if dp[mask as usize] == 0 {
                continue;
            }
            if mask == full {
                return Ok(Hamiltonicity::PathOnly);
            }
            let mut e = dp[mask as usize];
            while e != 0 {
                let u = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut cand = masks[u] & !mask;
                while cand != 0 {
                    let w = cand.trailing_zeros() as usize;
                    cand &= cand - 1;
                    dp[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
        if dp[full as usize] != 0 {
            Ok(Hamiltonicity::PathOnly)
        } else {
            Ok(Hamiltonicity::Neither)
        }
    }

    /// BFS two-coloring.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![2u8; self.n];
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in self.adj[x].iter() {
                    if color[y] == 2 {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Chordality via maximum cardinality search: the reverse MCS order is a
    /// perfect elimination ordering iff the graph is chordal.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        if n == 0 {
            return true;
        }
        let mut weight = vec![0usize; n];
        let mut picked = vec![false; n];
        let mut mcs = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !picked[v])
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .unwrap();
            picked[v] = true;
            mcs.push(v);
            for w in self.adj[v].iter() {
                if !picked[w] {
                    weight[w] += 1;
                }
            }
        }
        // Elimination order = reverse MCS; check each vertex's later
        // neighbors form a clique through the earliest of them.
        let mut pos = vec![0usize; n];
        for (i, &v) in mcs.iter().rev().enumerate() {
            pos[v] = i;
        }
        for v in 0..n {
            let later: Vec<usize> = self.adj[v].iter().filter(|&w| pos[w] > pos[v]).collect();
            let Some(&first) = later.iter().min_by_key(|&&w| pos[w]) else { continue };
            for &w in &later {
                if w != first && !self.has_edge(first, w) {
                    return false;
                }
            }
        }
        true
    }

    /// Roots a tree at `r`, computing the parent relation by BFS.
    pub fn root_at(&self, r: usize) -> Result<RootedTree> {
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        if r >= self.n {
            return Err(Error::VertexOutOfRange { vertex: r, order: self.n });
        }
        let mut parent = vec![None; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut seen = VertexSet::empty(self.n);
        seen.insert(r);
        let mut queue = std::collections::VecDeque::from([r]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for y in self.adj[x].iter() {
                if !seen.contains(y) {
                    seen.insert(y);
                    parent[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        Ok(RootedTree {
            graph: self.clone(),
            root: r,
            parent,
            bfs_order: order,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClasses {
    pub leaves: VertexSet,
    pub supports: VertexSet,
    pub strong_supports: VertexSet,
    pub strong_leaves: VertexSet,
    pub semi_supports: VertexSet,
    pub adjacent_supports: VertexSet,
    pub universal: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hamiltonicity {
    Cycle,
    PathOnly,
    Neither,
}

/// A tree with a distinguished root and the induced parent relation.
#[derive(Debug, Clone)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
    parent: Vec<Option<usize>>,
    bfs_order: Vec<usize>,
}

impl RootedTree {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        self.graph.neighbors(v).iter().filter(|&w| self.parent[w] == Some(v)).collect()
    }

    /// Proper descendants of `v` (excludes `v`).
    pub fn descendants(&self, v: usize) -> VertexSet {
        let mut d = VertexSet::empty(self.graph.order());
        // bfs_order lists parents before children, so one sweep suffices.
        for &x in &self.bfs_order {
            if let Some(p) = self.parent[x] {
                if p == v || d.contains(p) {
                    d.insert(x);
                }
            }
        }
        d
    }

    /// Subtree induced by `v` and its descendants, plus the index map
    /// (new index -> vertex of the original tree).
    pub fn maximal_subtree(&self, v: usize) -> (Graph, Vec<usize>) {
        let mut keep = self.descendants(v);
        keep.insert(v);
        let drop = self.graph.vertex_set().difference(&keep);
        self.graph.delete_vertices(&drop)
    }
}

/// Corona product: one copy of `h` per vertex of `g`, each copy fully joined
/// to its base vertex. Vertex `i` of `g` keeps index `i`; copy `i` occupies
/// the block `n + i*|V(h)| ..`.
pub fn corona(g: &Graph, h: &Graph) -> Graph {
    assert!(g.order() >= 1, "corona base must be nonempty");
    let n = g.order();
    let k = h.order();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 0..n {
        let base = n + i * k;
        for (u, v) in h.edges() {
            edges.push((base + u, base + v));
        }
        for u in 0..k {
            edges.push((i, base + u));
        }
    }
    Graph::new(n + n * k, &edges).expect("corona construction is always valid")
}

/// Cartesian product; vertex (u, v) gets index `u * |V(h)| + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    assert!(g.order() >= 1 && h.order() >= 1);
    let k = h.order();
    let mut edges = Vec::new();
    for u in 0..g.order() {
        for (v, w) in h.edges() {
            edges.push((u * k + v, u * k + w));
        }
    }
    for (u, w) in g.edges() {
        for v in 0..k {
            edges.push((u * k + v, w * k + v));
        }
    }
    Graph::new(g.order() * k, &edges).expect("product construction is always valid")
}
