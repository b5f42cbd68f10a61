//! Exhaustive catalogs of small graphs up to isomorphism.
//!
//! Graphs on `n + 1` vertices are obtained from the catalog on `n` vertices
//! by adding a vertex with every possible neighborhood and keeping one
//! graph per canonical form. Restricting to a property closed under vertex
//! deletion during the augmentation still reaches every member.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest order [`canonical_form`] packs into its 64-bit code.
pub const MAX_CANONICAL_N: usize = 11;
/// Largest order [`catalog`] builds.
pub const MAX_CATALOG_N: usize = 9;

/// Number of graphs on `n` vertices up to isomorphism, `n = 0..=9`.
pub const GRAPH_COUNTS: [usize; 10] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

/// Isomorphism-invariant code: `(n, upper-triangle bits)` minimised over
/// the vertex orders compatible with an invariant ordered partition.
pub fn canonical_form(g: &Graph) -> Result<(usize, u64)> {
    let n = g.n();
    if n > MAX_CANONICAL_N {
        return Err(Error::TooLarge { n, limit: MAX_CANONICAL_N });
    }
    let cells = ordered_partition(g);
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut best = u64::MAX;
    search(g, &cells, 0, &mut order, &mut used, &mut best);
    Ok((n, best))
}

/// Cells of the coarsest equitable refinement of the degree partition,
/// ordered by invariant signatures.
fn ordered_partition(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut color: Vec<usize> = vec![0; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        let distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(&s).expect("present")).collect();
        let count = distinct.len();
        color = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

fn code(g: &Graph, order: &[Vertex]) -> u64 {
    let mut bits = 0u64;
    let mut k = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if g.has_edge(order[i], order[j]) {
                bits |= 1 << k;
            }
            k += 1;
        }
    }
    bits
}

fn search(g: &Graph, cells: &[Vec<Vertex>], cell: usize, order: &mut Vec<Vertex>, used: &mut [bool], best: &mut u64) {
    if cell == cells.len() {
        *best = (*best).min(code(g, order));
        return;
    }
    let members = &cells[cell];
    let placed = order.len() - cells[..cell].iter().map(Vec::len).sum::<usize>();
    if placed == members.len() {
        search(g, cells, cell + 1, order, used, best);
        return;
    }
    for &v in members {
        if !used[v] {
            used[v] = true;
            order.push(v);
            search(g, cells, cell, order, used, best);
            order.pop();
            used[v] = false;
        }
    }
}

/// One graph per isomorphism type on `0..=max_n` vertices with `keep`,
/// which must be closed under vertex deletion. Ordered by vertex count.
pub fn catalog_filtered(max_n: usize, keep: &dyn Fn(&Graph) -> bool) -> Result<Vec<Graph>> {
    if max_n > MAX_CATALOG_N {
        return Err(Error::TooLarge { n: max_n, limit: MAX_CATALOG_N });
    }
    let mut all = Vec::new();
    let mut level = vec![Graph::empty(0)];
    if !keep(&level[0]) {
        return Ok(all);
    }
    for n in 1..=max_n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << (n - 1)) {
                let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
                edges.extend((0..n - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, n - 1)));
                let h = Graph::from_edges(n, edges).expect("valid edges");
                if seen.insert(canonical_form(&h)?) && keep(&h) {
                    next.push(h);
                }
            }
        }
        all.append(&mut level);
        level = next;
    }
    all.append(&mut level);
    Ok(all)
}

/// All graphs on `0..=max_n` vertices up to isomorphism.
pub fn catalog(max_n: usize) -> Result<Vec<Graph>> {
    catalog_filtered(max_n, &|_| true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_six() {
        let all = catalog(6).unwrap();
        for n in 0..=6 {
            assert_eq!(all.iter().filter(|g| g.n() == n).count(), GRAPH_COUNTS[n]);
        }
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let h = g.permute(&[5, 2, 4, 0, 1, 3]);
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        assert_ne!(canonical_form(&Graph::path(4)).unwrap(), canonical_form(&Graph::cycle(4)).unwrap());
    }

    #[test]
    fn cograph_counts() {
        let cographs = catalog_filtered(7, &crate::oracles::is_p4_free).unwrap();
        let by_n: Vec<usize> = (0..=7).map(|n| cographs.iter().filter(|g| g.n() == n).count()).collect();
        assert_eq!(by_n, vec![1, 1, 2, 4, 10, 24, 66, 180]);
    }
}
