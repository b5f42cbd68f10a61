use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};

/// Maximal 2-connected pieces of a graph. Bridges form two-vertex blocks and
/// isolated vertices one-vertex blocks, so every vertex lies in some block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Each block sorted; blocks in lexicographic order.
    pub blocks: Vec<Vec<Vertex>>,
    /// Sorted.
    pub cut_vertices: Vec<Vertex>,
    /// Block-cut tree edges `(block index, cut vertex)`.
    pub tree_edges: Vec<(usize, Vertex)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockCutNode {
    Block(usize),
    Cut(Vertex),
}

impl BlockDecomposition {
    pub(super) fn compute(g: &Graph) -> Self {
        const UNSET: usize = usize::MAX;
        let n = g.n();
        let mut disc = vec![UNSET; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut blocks: Vec<Vec<Vertex>> = Vec::new();
        let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
        // (vertex, parent, next neighbor index)
        let mut frames: Vec<(Vertex, Vertex, usize)> = Vec::new();

        for root in 0..n {
            if disc[root] != UNSET {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            if g.degree(root) == 0 {
                blocks.push(vec![root]);
                continue;
            }
            frames.push((root, UNSET, 0));
            while let Some(top) = frames.last_mut() {
                let (v, parent, next) = *top;
                if next < g.degree(v) {
                    top.2 += 1;
                    let w = g.neighbors(v)[next];
                    if disc[w] == UNSET {
                        edge_stack.push((v, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        frames.push((w, v, 0));
                    } else if w != parent && disc[w] < disc[v] {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    frames.pop();
                    if parent == UNSET {
                        continue;
                    }
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (parent, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
        }

        blocks.sort();
        let mut count = vec![0usize; n];
        for b in &blocks {
            for &v in b {
                count[v] += 1;
            }
        }
        let cut_vertices: Vec<Vertex> = (0..n).filter(|&v| count[v] >= 2).collect();
        let mut tree_edges = Vec::new();
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                if count[v] >= 2 {
                    tree_edges.push((i, v));
                }
            }
        }
        BlockDecomposition { blocks, cut_vertices, tree_edges }
    }

    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: Vertex) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.binary_search(&v).is_ok())
            .map(|(i, _)| i)
            .collect()
    }

    /// Adjacency of the block-cut forest.
    pub fn tree_neighbors(&self, node: BlockCutNode) -> Vec<BlockCutNode> {
        match node {
            BlockCutNode::Block(b) => self
                .tree_edges
                .iter()
                .filter(|&&(bb, _)| bb == b)
                .map(|&(_, c)| BlockCutNode::Cut(c))
                .collect(),
            BlockCutNode::Cut(c) => self
                .tree_edges
                .iter()
                .filter(|&&(_, cc)| cc == c)
                .map(|&(b, _)| BlockCutNode::Block(b))
                .collect(),
        }
    }
}
