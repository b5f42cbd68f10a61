//! Isomorphism of graphs that become P4-free after deleting a few apices.

use std::collections::BTreeMap;

use super::cotree::{certificate_of, CoTree};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Vertex};

pub const MAX_APICES: usize = 4;

/// Whether some color-preserving isomorphism `g1 -> g2` maps `a1` onto `a2`.
///
/// Tries every bijection `a1 -> a2`; for each, the adjacency of a residual
/// vertex to the apices is folded into its color and the colored residual
/// cographs are compared by certificate.
pub fn iso_apexed_cograph(g1: &ColoredGraph, a1: &[Vertex], g2: &ColoredGraph, a2: &[Vertex]) -> Result<bool> {
    if a1.len() != a2.len() {
        return Err(Error::Precondition(format!("apex sets of sizes {} and {}", a1.len(), a2.len())));
    }
    if a1.len() > MAX_APICES {
        return Err(Error::Precondition(format!("{} apices, at most {MAX_APICES} supported", a1.len())));
    }
    let r1 = Residual::new(g1, a1)?;
    let r2 = Residual::new(g2, a2)?;
    if g1.n() != g2.n() || g1.graph.m() != g2.graph.m() {
        return Ok(false);
    }
    let mut perm: Vec<usize> = (0..a2.len()).collect();
    loop {
        let image: Vec<Vertex> = perm.iter().map(|&i| a2[i]).collect();
        if fixed_bijection(g1, a1, &r1, g2, &image, &r2) {
            return Ok(true);
        }
        if !next_permutation(&mut perm) {
            return Ok(false);
        }
    }
}

/// Same question with the apex bijection fixed to `a1[i] -> a2[i]`.
pub fn iso_apexed_cograph_fixed(
    g1: &ColoredGraph,
    a1: &[Vertex],
    g2: &ColoredGraph,
    a2: &[Vertex],
) -> Result<bool> {
    if a1.len() != a2.len() {
        return Err(Error::Precondition(format!("apex sets of sizes {} and {}", a1.len(), a2.len())));
    }
    let r1 = Residual::new(g1, a1)?;
    let r2 = Residual::new(g2, a2)?;
    if g1.n() != g2.n() || g1.graph.m() != g2.graph.m() {
        return Ok(false);
    }
    Ok(fixed_bijection(g1, a1, &r1, g2, a2, &r2))
}

struct Residual {
    tree: CoTree,
    old: Vec<Vertex>,
}

impl Residual {
    fn new(g: &ColoredGraph, apices: &[Vertex]) -> Result<Self> {
        let mut sorted = apices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != apices.len() || sorted.iter().any(|&a| a >= g.n()) {
            return Err(Error::Precondition("apices must be distinct vertices".into()));
        }
        let (rest, old) = g.graph.remove_vertices(apices);
        Ok(Residual { tree: CoTree::build(&rest)?, old })
    }
}

fn fixed_bijection(
    g1: &ColoredGraph,
    a1: &[Vertex],
    r1: &Residual,
    g2: &ColoredGraph,
    a2: &[Vertex],
    r2: &Residual,
) -> bool {
    let k = a1.len();
    for i in 0..k {
        if g1.colors[a1[i]] != g2.colors[a2[i]] {
            return false;
        }
        for j in (i + 1)..k {
            if g1.graph.has_edge(a1[i], a1[j]) != g2.graph.has_edge(a2[i], a2[j]) {
                return false;
            }
        }
    }
    let mut intern: BTreeMap<(usize, u32), usize> = BTreeMap::new();
    let mut fold = |g: &ColoredGraph, apices: &[Vertex], r: &Residual| -> Vec<usize> {
        r.old
            .iter()
            .map(|&v| {
                let mask = apices
                    .iter()
                    .enumerate()
                    .fold(0u32, |m, (i, &a)| m | (g.graph.has_edge(v, a) as u32) << i);
                let next = intern.len();
                *intern.entry((g.colors[v], mask)).or_insert(next)
            })
            .collect()
    };
    let c1 = fold(g1, a1, r1);
    let c2 = fold(g2, a2, r2);
    certificate_of(&r1.tree, &c1) == certificate_of(&r2.tree, &c2)
}

/// Lexicographic successor; `false` once the last permutation is reached.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, Graph};

    #[test]
    fn no_apices_is_certificate_equality() {
        let g = Graph::cycle(4);
        assert!(iso_apexed_cograph(&(&g).into(), &[], &g.permute(&[1, 2, 3, 0]).into(), &[]).unwrap());
        assert!(!iso_apexed_cograph(&(&g).into(), &[], &named::diamond().into(), &[]).unwrap());
    }

    #[test]
    fn k4_with_one_apex() {
        let k4 = Graph::complete(4);
        assert!(iso_apexed_cograph(&(&k4).into(), &[0], &(&k4).into(), &[3]).unwrap());
    }

    #[test]
    fn path_through_apices() {
        // P5 minus its middle vertex is 2K2, a cograph.
        let p5 = Graph::path(5);
        assert!(iso_apexed_cograph(&(&p5).into(), &[2], &p5.permute(&[4, 3, 2, 1, 0]).into(), &[2]).unwrap());
        // Apex mapped to an end vertex: the residual P4 is rejected.
        assert_eq!(iso_apexed_cograph(&(&p5).into(), &[2], &(&p5).into(), &[0]), Err(Error::NotP4Free));
    }

    #[test]
    fn apex_bijection_matters() {
        // C5 with apices {0,1}: residual P3. Mapping the apex pair onto a
        // non-adjacent pair must fail.
        let c5 = Graph::cycle(5);
        assert!(iso_apexed_cograph(&(&c5).into(), &[0, 1], &(&c5).into(), &[2, 3]).unwrap());
        assert!(!iso_apexed_cograph(&(&c5).into(), &[0, 1], &(&c5).into(), &[1, 3]).unwrap());
    }

    #[test]
    fn permutations() {
        let mut p = vec![0, 1, 2];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 6);
    }
}
