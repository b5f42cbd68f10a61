//! Isomorphism-preserving constructions into restricted graph classes.
//!
//! Each output keeps the original vertices at their indices; `tags` says
//! which output vertex subdivides which input edge.

use crate::dichotomy::SplitPartition;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexTag};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub graph: Graph,
    pub tags: Vec<VertexTag>,
}

impl Reduction {
    pub fn originals(&self) -> Vec<Vertex> {
        self.tags
            .iter()
            .enumerate()
            .filter(|(_, t)| matches!(t, VertexTag::Original(_)))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn subdivisions(&self) -> Vec<Vertex> {
        self.tags
            .iter()
            .enumerate()
            .filter(|(_, t)| matches!(t, VertexTag::Subdivision { .. }))
            .map(|(i, _)| i)
            .collect()
    }
}

fn require_edge(g: &Graph) -> Result<()> {
    if g.m() == 0 {
        return Err(Error::Precondition("input has no edges".into()));
    }
    Ok(())
}

/// Adds every missing edge inside `class`.
fn make_clique(g: &Graph, class: &[Vertex]) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    for (i, &a) in class.iter().enumerate() {
        for &b in &class[i + 1..] {
            if !g.has_edge(a, b) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(g.n(), edges).expect("same vertex set")
}

/// Subdivides every edge once and turns the original vertices into a
/// clique. Subdivision vertices form the independent side, each with
/// exactly two clique neighbors.
pub fn reduce_to_restricted_split(g: &Graph) -> Result<Reduction> {
    require_edge(g)?;
    let (sub, tags) = g.subdivide_edges(1);
    let originals: Vec<Vertex> = g.vertices().collect();
    Ok(Reduction { graph: make_clique(&sub, &originals), tags })
}

/// Subdivides every edge once and turns both the original and the
/// subdivision vertices into cliques.
pub fn reduce_to_cobipartite(g: &Graph) -> Result<Reduction> {
    require_edge(g)?;
    let (sub, tags) = g.subdivide_edges(1);
    let originals: Vec<Vertex> = g.vertices().collect();
    let subdivisions: Vec<Vertex> = (g.n()..sub.n()).collect();
    let once = make_clique(&sub, &originals);
    Ok(Reduction { graph: make_clique(&once, &subdivisions), tags })
}

/// Subdivides every edge three times, locally complements at every
/// original vertex (ascending), and complements the result.
///
/// Requires minimum degree three.
pub fn reduce_to_k3uk1_free(g: &Graph) -> Result<Reduction> {
    if g.n() == 0 || g.min_degree() < 3 {
        return Err(Error::Precondition(format!("minimum degree {} below 3", if g.n() == 0 { 0 } else { g.min_degree() })));
    }
    let (mut h, tags) = g.subdivide_edges(3);
    for v in g.vertices() {
        h = h.local_complement(v)?;
    }
    Ok(Reduction { graph: h.complement(), tags })
}

/// The split partition the restricted-split reduction guarantees.
pub fn restricted_split_certificate(r: &Reduction) -> SplitPartition {
    SplitPartition { clique: r.originals(), independent: r.subdivisions() }
}

/// Checks a split partition has every independent vertex of degree ≤ 2.
pub fn check_restricted_split(g: &Graph, p: &SplitPartition) -> bool {
    let mut seen = vec![0u8; g.n()];
    for &v in p.clique.iter().chain(&p.independent) {
        if v >= g.n() {
            return false;
        }
        seen[v] += 1;
    }
    seen.iter().all(|&s| s == 1)
        && p.clique.iter().enumerate().all(|(i, &a)| p.clique[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        && p.independent.iter().all(|&v| g.degree(v) <= 2 && g.neighbors(v).iter().all(|w| p.clique.contains(w)))
}

/// Checks two vertex classes are cliques covering the graph.
pub fn check_two_cliques(g: &Graph, a: &[Vertex], b: &[Vertex]) -> bool {
    let clique = |s: &[Vertex]| s.iter().enumerate().all(|(i, &x)| s[i + 1..].iter().all(|&y| g.has_edge(x, y)));
    let mut all: Vec<Vertex> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all == g.vertices().collect::<Vec<_>>() && clique(a) && clique(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dichotomy::is_cobipartite;
    use crate::graph::named;
    use crate::structure::k3uk1_induced_minor_free;

    #[test]
    fn split_examples() {
        let r = reduce_to_restricted_split(&Graph::complete(2)).unwrap();
        assert_eq!(r.graph, Graph::complete(3));
        assert!(check_restricted_split(&r.graph, &restricted_split_certificate(&r)));
        let r = reduce_to_restricted_split(&Graph::cycle(3)).unwrap();
        assert_eq!(r.graph.n(), 6);
        let (clique, _) = r.graph.induced_subgraph(&r.originals());
        assert!(clique.is_complete());
        assert!(check_restricted_split(&r.graph, &restricted_split_certificate(&r)));
        assert!(reduce_to_restricted_split(&Graph::empty(3)).is_err());
    }

    #[test]
    fn cobipartite_examples() {
        let r = reduce_to_cobipartite(&Graph::complete(2)).unwrap();
        assert_eq!(r.graph.n(), 3);
        assert!(check_two_cliques(&r.graph, &r.originals(), &r.subdivisions()));
        let r = reduce_to_cobipartite(&named::petersen()).unwrap();
        assert_eq!(r.graph.n(), 25);
        assert!(is_cobipartite(&r.graph));
    }

    #[test]
    fn k3uk1_examples() {
        let r = reduce_to_k3uk1_free(&Graph::complete(4)).unwrap();
        assert_eq!(r.graph.n(), 22);
        assert!(k3uk1_induced_minor_free(&r.graph));
        assert!(reduce_to_k3uk1_free(&Graph::cycle(5)).is_err());
    }

    #[test]
    fn local_complement_order_is_irrelevant() {
        let g = named::petersen();
        let (mut a, _) = g.subdivide_edges(3);
        let mut b = a.clone();
        for v in g.vertices() {
            a = a.local_complement(v).unwrap();
        }
        for v in g.vertices().rev() {
            b = b.local_complement(v).unwrap();
        }
        assert_eq!(a, b);
    }
}
