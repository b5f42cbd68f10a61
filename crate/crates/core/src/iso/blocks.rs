//! Reduction of colored isomorphism to colored isomorphism of blocks.
//!
//! Each connected component's block-cut tree is rooted at its center (the
//! cut vertex when there are two centers). Rooted subtrees are classified
//! bottom-up in a registry shared by both inputs: a cut vertex's class is
//! its color plus the multiset of its child block classes; a block's class
//! is decided by the block tester on the block colored with the classes of
//! its child cut vertices and a marker on its parent cut vertex.

use std::collections::{BTreeMap, VecDeque};

use crate::error::Result;
use crate::graph::{BlockDecomposition, ColoredGraph, Graph, Vertex};

/// Decides colored isomorphism of two blocks (2-connected, `K2` or `K1`).
pub type BlockTester<'a> = dyn FnMut(&ColoredGraph, &ColoredGraph) -> Result<bool> + 'a;

pub fn iso_via_blocks(g1: &ColoredGraph, g2: &ColoredGraph, tester: &mut BlockTester<'_>) -> Result<bool> {
    if g1.n() != g2.n() || g1.graph.m() != g2.graph.m() || g1.sorted_colors() != g2.sorted_colors() {
        return Ok(false);
    }
    let mut reg = Registry {
        tester,
        cut_classes: BTreeMap::new(),
        block_reps: BTreeMap::new(),
        block_count: 0,
        colors: BTreeMap::new(),
    };
    let mut classes = [Vec::new(), Vec::new()];
    for (side, g) in [g1, g2].into_iter().enumerate() {
        for comp in g.graph.components() {
            let (sub, _) = g.induced_subgraph(&comp);
            classes[side].push(reg.component_class(&sub)?);
        }
        classes[side].sort_unstable();
        if side == 1 && classes[0] != classes[1] {
            return Ok(false);
        }
    }
    Ok(classes[0] == classes[1])
}

struct Registry<'t, 'a> {
    tester: &'t mut BlockTester<'a>,
    cut_classes: BTreeMap<(usize, Vec<usize>), usize>,
    /// Representatives of block classes, bucketed by cheap invariants.
    block_reps: BTreeMap<(usize, usize, Vec<usize>), Vec<(ColoredGraph, usize)>>,
    block_count: usize,
    colors: BTreeMap<(u8, usize), usize>,
}

impl<'t, 'a> Registry<'t, 'a> {
    fn color(&mut self, kind: u8, value: usize) -> usize {
        let next = self.colors.len();
        *self.colors.entry((kind, value)).or_insert(next)
    }

    /// Class of a connected colored graph, tagged by root kind.
    fn component_class(&mut self, g: &ColoredGraph) -> Result<(u8, usize)> {
        let dec = g.graph.blocks();
        let tree = Tree::new(&g.graph, &dec);
        match tree.center() {
            Node::Cut(c) => Ok((0, self.cut_class(g, &dec, &tree, c, None)?)),
            Node::Block(b) => Ok((1, self.block_class(g, &dec, &tree, b, None)?)),
        }
    }

    fn cut_class(
        &mut self,
        g: &ColoredGraph,
        dec: &BlockDecomposition,
        tree: &Tree,
        c: Vertex,
        parent: Option<usize>,
    ) -> Result<usize> {
        let mut children = Vec::new();
        for &b in &tree.blocks_of[c] {
            if Some(b) != parent {
                children.push(self.block_class(g, dec, tree, b, Some(c))?);
            }
        }
        children.sort_unstable();
        let key = (g.colors[c], children);
        let next = self.cut_classes.len();
        Ok(*self.cut_classes.entry(key).or_insert(next))
    }

    fn block_class(
        &mut self,
        g: &ColoredGraph,
        dec: &BlockDecomposition,
        tree: &Tree,
        b: usize,
        parent: Option<Vertex>,
    ) -> Result<usize> {
        let verts = &dec.blocks[b];
        let mut colors = Vec::with_capacity(verts.len());
        for &v in verts {
            let c = if Some(v) == parent {
                self.color(2, 0)
            } else if tree.is_cut[v] {
                let class = self.cut_class(g, dec, tree, v, Some(b))?;
                self.color(1, class)
            } else {
                self.color(0, g.colors[v])
            };
            colors.push(c);
        }
        let (sub, _) = g.graph.induced_subgraph(verts);
        let block = ColoredGraph::new(sub, colors).expect("one color per vertex");
        let key = (block.n(), block.graph.m(), block.sorted_colors());
        let bucket = self.block_reps.entry(key.clone()).or_default();
        for (rep, class) in bucket.iter() {
            if (self.tester)(&block, rep)? {
                return Ok(*class);
            }
        }
        let class = self.block_count;
        self.block_count += 1;
        self.block_reps.get_mut(&key).expect("bucket created").push((block, class));
        Ok(class)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    Block(usize),
    Cut(Vertex),
}

/// Block-cut tree of a connected graph as an explicit adjacency structure.
struct Tree {
    blocks_of: Vec<Vec<usize>>,
    is_cut: Vec<bool>,
    block_vertices: Vec<Vec<Vertex>>,
}

impl Tree {
    fn new(g: &Graph, dec: &BlockDecomposition) -> Self {
        let mut blocks_of = vec![Vec::new(); g.n()];
        for (i, b) in dec.blocks.iter().enumerate() {
            for &v in b {
                blocks_of[v].push(i);
            }
        }
        let is_cut = blocks_of.iter().map(|b| b.len() >= 2).collect();
        Tree { blocks_of, is_cut, block_vertices: dec.blocks.clone() }
    }

    fn neighbors(&self, x: Node) -> Vec<Node> {
        match x {
            Node::Block(b) => self.block_vertices[b]
                .iter()
                .filter(|&&v| self.is_cut[v])
                .map(|&v| Node::Cut(v))
                .collect(),
            Node::Cut(c) => self.blocks_of[c].iter().map(|&b| Node::Block(b)).collect(),
        }
    }

    fn index(&self, x: Node) -> usize {
        match x {
            Node::Block(b) => b,
            Node::Cut(c) => self.block_vertices.len() + c,
        }
    }

    /// Farthest node from `start` and the BFS parent links.
    fn farthest(&self, start: Node) -> (Node, Vec<Option<Node>>) {
        let size = self.block_vertices.len() + self.blocks_of.len();
        let mut parent: Vec<Option<Node>> = vec![None; size];
        let mut seen = vec![false; size];
        seen[self.index(start)] = true;
        let mut last = start;
        let mut q = VecDeque::from([start]);
        while let Some(x) = q.pop_front() {
            last = x;
            for y in self.neighbors(x) {
                let iy = self.index(y);
                if !seen[iy] {
                    seen[iy] = true;
                    parent[iy] = Some(x);
                    q.push_back(y);
                }
            }
        }
        (last, parent)
    }

    fn center(&self) -> Node {
        let (a, _) = self.farthest(Node::Block(0));
        let (b, parent) = self.farthest(a);
        let mut path = vec![b];
        while let Some(p) = parent[self.index(*path.last().expect("nonempty"))] {
            path.push(p);
        }
        let len = path.len() - 1;
        if len % 2 == 0 {
            path[len / 2]
        } else {
            let (x, y) = (path[len / 2], path[len / 2 + 1]);
            if matches!(x, Node::Cut(_)) {
                x
            } else {
                y
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::oracles::iso_bruteforce;

    fn oracle_tester(a: &ColoredGraph, b: &ColoredGraph) -> Result<bool> {
        Ok(iso_bruteforce(a, b)?.is_some())
    }

    fn decide(a: &Graph, b: &Graph) -> bool {
        iso_via_blocks(&a.into(), &b.into(), &mut oracle_tester).unwrap()
    }

    #[test]
    fn trees() {
        // Spiders with legs 1,2,3 built two ways.
        let a = Graph::from_edges(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
        let b = a.permute(&[6, 5, 4, 3, 2, 1, 0]);
        assert!(decide(&a, &b));
        let c = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(!decide(&a, &c));
    }

    #[test]
    fn bowtie_versus_bridged_triangles() {
        let bridged = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        assert!(!decide(&named::bowtie(), &bridged));
        assert!(decide(&bridged, &bridged.permute(&[5, 4, 3, 2, 1, 0])));
    }

    #[test]
    fn disconnected() {
        let a = Graph::cycle(3).disjoint_union(&Graph::path(3));
        let b = Graph::path(3).disjoint_union(&Graph::cycle(3));
        assert!(decide(&a, &b));
        assert!(!decide(&a, &Graph::cycle(3).disjoint_union(&Graph::cycle(3))));
    }
}
