//! Cotrees of P4-free graphs and canonical certificates for colored cographs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoNode {
    Leaf(Vertex),
    /// Disjoint union; every child is connected.
    Union(Vec<CoNode>),
    /// Complete join; every child has a connected complement.
    Join(Vec<CoNode>),
}

impl CoNode {
    pub fn leaves(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Vertex>) {
        match self {
            CoNode::Leaf(v) => out.push(*v),
            CoNode::Union(ch) | CoNode::Join(ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoTree {
    pub n: usize,
    /// `None` for the graph with no vertices.
    pub root: Option<CoNode>,
}

impl CoTree {
    /// Builds the cotree by alternately splitting into components and
    /// co-components; fails with [`Error::NotP4Free`] when a vertex set is
    /// both connected and co-connected.
    pub fn build(g: &Graph) -> Result<CoTree> {
        let all: Vec<Vertex> = g.vertices().collect();
        let root = if all.is_empty() { None } else { Some(build_node(g, all)?) };
        Ok(CoTree { n: g.n(), root })
    }

    /// The graph the cotree denotes.
    pub fn evaluate(&self) -> Graph {
        let mut edges = Vec::new();
        if let Some(root) = &self.root {
            add_edges(root, &mut edges);
        }
        Graph::from_edges(self.n, edges).expect("cotree leaves are in range")
    }
}

fn add_edges(node: &CoNode, edges: &mut Vec<(Vertex, Vertex)>) {
    match node {
        CoNode::Leaf(_) => {}
        CoNode::Union(ch) => ch.iter().for_each(|c| add_edges(c, edges)),
        CoNode::Join(ch) => {
            let sides: Vec<Vec<Vertex>> = ch.iter().map(CoNode::leaves).collect();
            for i in 0..sides.len() {
                for j in (i + 1)..sides.len() {
                    for &a in &sides[i] {
                        for &b in &sides[j] {
                            edges.push((a, b));
                        }
                    }
                }
            }
            ch.iter().for_each(|c| add_edges(c, edges));
        }
    }
}

fn build_node(g: &Graph, set: Vec<Vertex>) -> Result<CoNode> {
    if set.len() == 1 {
        return Ok(CoNode::Leaf(set[0]));
    }
    let comps = split(g, &set, false);
    if comps.len() > 1 {
        return Ok(CoNode::Union(comps.into_iter().map(|c| build_node(g, c)).collect::<Result<_>>()?));
    }
    let co = split(g, &set, true);
    if co.len() > 1 {
        return Ok(CoNode::Join(co.into_iter().map(|c| build_node(g, c)).collect::<Result<_>>()?));
    }
    Err(Error::NotP4Free)
}

/// Components of `g[set]`, or of its complement when `complement` is set.
fn split(g: &Graph, set: &[Vertex], complement: bool) -> Vec<Vec<Vertex>> {
    let mut remaining: Vec<Vertex> = set.to_vec();
    let mut out = Vec::new();
    while let Some(start) = remaining.pop() {
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            let (take, keep): (Vec<Vertex>, Vec<Vertex>) =
                remaining.iter().partition(|&&y| g.has_edge(x, y) != complement);
            comp.extend(take);
            remaining = keep;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort();
    out
}

/// Canonical string of a colored cograph. Within P4-free graphs, equal
/// certificates mean color-preserving isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Certificate(pub String);

pub fn cograph_certificate(g: &ColoredGraph) -> Result<Certificate> {
    let tree = CoTree::build(&g.graph)?;
    Ok(certificate_of(&tree, &g.colors))
}

pub(crate) fn certificate_of(tree: &CoTree, colors: &[usize]) -> Certificate {
    fn enc(node: &CoNode, colors: &[usize]) -> String {
        match node {
            CoNode::Leaf(v) => format!("L{}", colors[*v]),
            CoNode::Union(ch) | CoNode::Join(ch) => {
                let mut parts: Vec<String> = ch.iter().map(|c| enc(c, colors)).collect();
                parts.sort_unstable();
                let tag = if matches!(node, CoNode::Union(_)) { 'U' } else { 'J' };
                format!("{tag}({})", parts.join(","))
            }
        }
    }
    Certificate(match &tree.root {
        None => "E".to_string(),
        Some(r) => enc(r, colors),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cert(g: &Graph) -> Certificate {
        cograph_certificate(&g.into()).unwrap()
    }

    #[test]
    fn cotree_round_trip() {
        for g in [Graph::complete(4), Graph::cycle(4), Graph::complete_multipartite(&[1, 2, 3]), Graph::empty(3)] {
            let t = CoTree::build(&g).unwrap();
            assert_eq!(t.evaluate(), g);
        }
        assert_eq!(CoTree::build(&Graph::path(4)), Err(Error::NotP4Free));
    }

    #[test]
    fn alternation() {
        fn check(node: &CoNode, parent_union: Option<bool>) {
            match node {
                CoNode::Leaf(_) => {}
                CoNode::Union(ch) | CoNode::Join(ch) => {
                    let is_union = matches!(node, CoNode::Union(_));
                    assert!(ch.len() >= 2);
                    assert_ne!(Some(is_union), parent_union);
                    ch.iter().for_each(|c| check(c, Some(is_union)));
                }
            }
        }
        let g = Graph::complete_multipartite(&[2, 3]).disjoint_union(&Graph::complete(3));
        check(CoTree::build(&g).unwrap().root.as_ref().unwrap(), None);
    }

    #[test]
    fn certificates() {
        let a = ColoredGraph::new(Graph::empty(2), vec![0, 1]).unwrap();
        let b = ColoredGraph::new(Graph::empty(2), vec![1, 0]).unwrap();
        assert_eq!(cograph_certificate(&a).unwrap(), cograph_certificate(&b).unwrap());
        assert_ne!(cert(&Graph::complete(2)), cert(&Graph::empty(2)));
        assert_eq!(cert(&Graph::empty(0)), Certificate("E".into()));
        let c4 = Graph::cycle(4);
        assert_eq!(cert(&c4), cert(&c4.permute(&[0, 2, 1, 3])));
        assert_ne!(cert(&c4), cert(&named_paw_free()));
    }

    fn named_paw_free() -> Graph {
        crate::graph::named::diamond()
    }
}
