//! General isomorphism by color refinement and individualization.
//!
//! Each graph is refined on its own; the sequence of signature tables seen
//! during refinement (the trace) makes color ids comparable across graphs.
//! Exponential in the worst case, bounded by a work budget.

use std::collections::BTreeMap;

use crate::error::{Budget, Result};
use crate::graph::{ColoredGraph, Vertex};
use crate::oracles::Mapping;

pub const GENERAL_BUDGET: u64 = 50_000_000;

type Signature = (usize, Vec<usize>);
type Trace = Vec<Vec<(Signature, usize)>>;

/// Refines `colors` to the coarsest equitable partition, returning the trace.
fn refine(g: &ColoredGraph, colors: &mut Vec<usize>, budget: &mut Budget) -> Result<Trace> {
    let mut trace = Vec::new();
    let mut classes = {
        let mut c = colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        budget.charge(g.n() as u64 + 2 * g.graph.m() as u64)?;
        let sigs: Vec<Signature> = (0..g.n())
            .map(|v| {
                let mut s: Vec<usize> = g.graph.neighbors(v).iter().map(|&w| colors[w]).collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let mut table: BTreeMap<&Signature, usize> = BTreeMap::new();
        for s in &sigs {
            *table.entry(s).or_default() += 1;
        }
        let ids: BTreeMap<&Signature, usize> = table.keys().enumerate().map(|(i, &s)| (s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| ids[s]).collect();
        trace.push(table.iter().map(|(&s, &c)| (s.clone(), c)).collect());
        let count = table.len();
        *colors = next;
        if count == classes {
            return Ok(trace);
        }
        classes = count;
    }
}

/// Initial colors as ranks of the input colors, so that the two graphs
/// agree on ids exactly when their color multisets agree.
fn initial(g: &ColoredGraph) -> Vec<usize> {
    let mut distinct = g.colors.clone();
    distinct.sort_unstable();
    distinct.dedup();
    g.colors.iter().map(|c| distinct.binary_search(c).expect("present")).collect()
}

pub fn general_iso(g1: &ColoredGraph, g2: &ColoredGraph) -> Result<bool> {
    Ok(general_iso_mapping(g1, g2)?.is_some())
}

pub fn general_iso_mapping(g1: &ColoredGraph, g2: &ColoredGraph) -> Result<Option<Mapping>> {
    general_iso_with(g1, g2, &mut Budget::from_env(GENERAL_BUDGET))
}

pub fn general_iso_with(g1: &ColoredGraph, g2: &ColoredGraph, budget: &mut Budget) -> Result<Option<Mapping>> {
    if g1.n() != g2.n() || g1.graph.m() != g2.graph.m() || g1.sorted_colors() != g2.sorted_colors() {
        return Ok(None);
    }
    search(g1, g2, initial(g1), initial(g2), budget)
}

fn search(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    mut c1: Vec<usize>,
    mut c2: Vec<usize>,
    budget: &mut Budget,
) -> Result<Option<Mapping>> {
    budget.tick()?;
    if refine(g1, &mut c1, budget)? != refine(g2, &mut c2, budget)? {
        return Ok(None);
    }
    let n = g1.n();
    let mut cells: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(c1[v]).or_default().push(v);
    }
    let target = cells.iter().filter(|(_, c)| c.len() > 1).min_by_key(|(&col, c)| (c.len(), col));
    let Some((&col, cell)) = target else {
        let mut where2 = vec![0; n];
        for (u, &c) in c2.iter().enumerate() {
            where2[c] = u;
        }
        let m = Mapping { image: (0..n).map(|v| where2[c1[v]]).collect() };
        return Ok(m.is_isomorphism(g1, g2).then_some(m));
    };
    let v = cell[0];
    let fresh = cells.len();
    for u in (0..n).filter(|&u| c2[u] == col) {
        let mut d1 = c1.clone();
        let mut d2 = c2.clone();
        d1[v] = fresh;
        d2[u] = fresh;
        if let Some(m) = search(g1, g2, d1, d2, budget)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, Graph};

    fn iso(a: &Graph, b: &Graph) -> bool {
        general_iso(&a.into(), &b.into()).unwrap()
    }

    #[test]
    fn permuted_copies() {
        let p = named::petersen();
        let perm = [3, 1, 4, 0, 5, 9, 2, 6, 8, 7];
        assert!(iso(&p, &p.permute(&perm)));
        let m = general_iso_mapping(&(&p).into(), &p.permute(&perm).into()).unwrap().unwrap();
        assert!(m.is_isomorphism(&(&p).into(), &p.permute(&perm).into()));
    }

    #[test]
    fn regular_non_isomorphic() {
        assert!(!iso(&named::k33(), &named::prism()));
        assert!(!iso(&Graph::cycle(6), &Graph::cycle(3).disjoint_union(&Graph::cycle(3))));
    }

    #[test]
    fn colors_matter() {
        let a = ColoredGraph::new(Graph::path(3), vec![0, 1, 0]).unwrap();
        let b = ColoredGraph::new(Graph::path(3), vec![1, 0, 0]).unwrap();
        assert!(!general_iso(&a, &b).unwrap());
        assert!(general_iso(&a, &a.permute(&[2, 1, 0])).unwrap());
    }
}
