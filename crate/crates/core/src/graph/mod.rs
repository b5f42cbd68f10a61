//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! [`Graph`] is an immutable value: every transform returns a fresh graph,
//! and transforms that add or drop vertices also return the index mapping
//! so witnesses built on the result can be replayed on the input.

mod blocks;
pub mod io;
pub mod named;

pub use blocks::{BlockCutNode, BlockDecomposition};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

/// Role of a vertex in a subdivided graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexTag {
    Original(Vertex),
    /// `index`-th internal vertex (1-based) on the path replacing edge `{from, to}`,
    /// counted from `from` (the smaller endpoint).
    Subdivision { from: Vertex, to: Vertex, index: usize },
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Builds from neighbor lists that are already symmetric, sorted and loop-free.
    fn from_sorted_adj(adj: Vec<Vec<Vertex>>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(u, l)| l.windows(2).all(|w| w[0] < w[1])
            && l.iter().all(|&v| v != u)));
        Graph { adj }
    }

    /// Builds from arbitrary (possibly unsorted, duplicated) symmetric lists.
    fn from_adj_lists(mut adj: Vec<Vec<Vertex>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph::from_sorted_adj(adj)
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_sorted_adj((0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect())
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        Graph::from_sorted_adj(
            (0..n).map(|u| (0..n).filter(|&v| part_of[v] != part_of[u]).collect()).collect(),
        )
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| {
                let mut out = Vec::with_capacity(n - 1 - self.degree(u));
                let mut it = self.adj[u].iter().peekable();
                for v in 0..n {
                    if it.peek() == Some(&&v) {
                        it.next();
                    } else if v != u {
                        out.push(v);
                    }
                }
                out
            })
            .collect();
        Graph::from_sorted_adj(adj)
    }

    /// Subgraph induced by `vertices` (in the given order). Returns the graph and
    /// the map new index -> old index.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| pos[w] != usize::MAX).map(|&w| pos[w]).collect())
            .collect();
        (Graph::from_adj_lists(adj), vertices.to_vec())
    }

    /// `G - S`; returns the graph and the map new index -> old index.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&v| v + off).collect()));
        Graph::from_sorted_adj(adj)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![Vec::new(); self.n()];
        for (u, l) in self.adj.iter().enumerate() {
            adj[perm[u]] = l.iter().map(|&v| perm[v]).collect();
        }
        Graph::from_adj_lists(adj)
    }

    /// Replaces every edge by a path with `k` internal vertices. Original
    /// vertices keep their indices; the internal vertices of the `i`-th edge
    /// (in [`Graph::edges`] order) are `n + i*k .. n + (i+1)*k`, numbered from
    /// the smaller endpoint.
    pub fn subdivide_edges(&self, k: usize) -> (Graph, Vec<VertexTag>) {
        let n = self.n();
        let edges: Vec<_> = self.edges().collect();
        let total = n + k * edges.len();
        let mut tags: Vec<VertexTag> = (0..n).map(VertexTag::Original).collect();
        let mut adj = vec![Vec::new(); total];
        if k == 0 {
            return (self.clone(), tags);
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            let base = n + i * k;
            let mut prev = u;
            for j in 0..k {
                let x = base + j;
                tags.push(VertexTag::Subdivision { from: u, to: v, index: j + 1 });
                adj[prev].push(x);
                adj[x].push(prev);
                prev = x;
            }
            adj[prev].push(v);
            adj[v].push(prev);
        }
        (Graph::from_adj_lists(adj), tags)
    }

    /// Complements the edges inside `N(v)`.
    pub fn local_complement(&self, v: Vertex) -> Result<Graph> {
        self.check_vertex(v)?;
        let nb = &self.adj[v];
        let mut in_nb = vec![false; self.n()];
        for &u in nb {
            in_nb[u] = true;
        }
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, l)| {
                if !in_nb[u] {
                    return l.clone();
                }
                let mut out: Vec<Vertex> = l.iter().copied().filter(|&w| !in_nb[w]).collect();
                out.extend(nb.iter().copied().filter(|&w| w != u && !self.has_edge(u, w)));
                out
            })
            .collect();
        Ok(Graph::from_adj_lists(adj))
    }

    /// Contracts edge `{u, v}` into a single vertex. The merged vertex takes
    /// index `min(u, v)`; returns the graph and the map old index -> new index.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<(Graph, Vec<Vertex>)> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (keep, drop) = if u < v { (u, v) } else { (v, u) };
        let map: Vec<Vertex> = self
            .vertices()
            .map(|x| match x.cmp(&drop) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => x - 1,
            })
            .collect();
        let mut adj = vec![Vec::new(); self.n() - 1];
        for (x, l) in self.adj.iter().enumerate() {
            let mx = map[x];
            for &y in l {
                let my = map[y];
                if mx != my {
                    adj[mx].push(my);
                }
            }
        }
        Ok((Graph::from_adj_lists(adj), map))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_within(&vec![true; self.n()])
    }

    /// Components of the subgraph induced by `{v : allowed[v]}`.
    pub fn components_within(&self, allowed: &[bool]) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if seen[s] || !allowed[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &y in &self.adj[x] {
                    if allowed[y] && !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Connected, at least three vertices, no cut vertex.
    pub fn is_2connected(&self) -> bool {
        self.n() >= 3 && self.is_connected() && self.blocks().cut_vertices.is_empty()
    }

    pub fn blocks(&self) -> BlockDecomposition {
        BlockDecomposition::compute(self)
    }

    /// Union of neighborhoods of `set`, minus `set`.
    pub fn neighborhood_of_set(&self, set: &[Vertex]) -> Vec<Vertex> {
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let mut mark = vec![false; self.n()];
        for &v in set {
            for &w in &self.adj[v] {
                if !inside[w] {
                    mark[w] = true;
                }
            }
        }
        self.vertices().filter(|&v| mark[v]).collect()
    }

    /// Whether the subgraph induced by `set` is connected (empty sets are not).
    pub fn is_connected_set(&self, set: &[Vertex]) -> bool {
        if set.is_empty() {
            return false;
        }
        let mut allowed = vec![false; self.n()];
        for &v in set {
            allowed[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![set[0]];
        seen[set[0]] = true;
        let mut count = 0;
        while let Some(x) = stack.pop() {
            count += 1;
            for &y in &self.adj[x] {
                if allowed[y] && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        count == set.len()
    }
}

/// A graph with a color id on every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    pub graph: Graph,
    pub colors: Vec<usize>,
}

impl ColoredGraph {
    pub fn new(graph: Graph, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != graph.n() {
            return Err(Error::Precondition(format!(
                "{} colors for {} vertices",
                colors.len(),
                graph.n()
            )));
        }
        Ok(ColoredGraph { graph, colors })
    }

    pub fn uncolored(graph: Graph) -> Self {
        let colors = vec![0; graph.n()];
        ColoredGraph { graph, colors }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Renumbers colors to `0..c` preserving their relative order.
    pub fn normalized(&self) -> ColoredGraph {
        let mut distinct = self.colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = self
            .colors
            .iter()
            .map(|c| distinct.binary_search(c).expect("present"))
            .collect();
        ColoredGraph { graph: self.graph.clone(), colors }
    }

    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (ColoredGraph, Vec<Vertex>) {
        let (graph, map) = self.graph.induced_subgraph(vertices);
        let colors = map.iter().map(|&v| self.colors[v]).collect();
        (ColoredGraph { graph, colors }, map)
    }

    pub fn permute(&self, perm: &[Vertex]) -> ColoredGraph {
        let graph = self.graph.permute(perm);
        let mut colors = vec![0; self.n()];
        for (v, &c) in self.colors.iter().enumerate() {
            colors[perm[v]] = c;
        }
        ColoredGraph { graph, colors }
    }

    pub fn sorted_colors(&self) -> Vec<usize> {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c
    }
}

impl From<Graph> for ColoredGraph {
    fn from(g: Graph) -> Self {
        ColoredGraph::uncolored(g)
    }
}

impl From<&Graph> for ColoredGraph {
    fn from(g: &Graph) -> Self {
        ColoredGraph::uncolored(g.clone())
    }
}
