//! Isomorphism of gem-induced-minor-free graphs.
//!
//! Blocks are compared as follows. P4-free blocks by cograph certificate.
//! Otherwise a suture witness `H1` is computed for the first block, and
//! every induced copy `H2` of `H1` in the second block (with matching colors
//! and degrees) together with the correspondence `φ: H1 -> H2` is tried.
//! `φ` forces the images of the exclusive-attachment chains; what remains
//! of each component is a P4-free graph hanging off at most four vertices
//! whose images are known, which the apexed cograph test settles.

use super::apexed::iso_apexed_cograph_fixed;
use super::blocks::iso_via_blocks;
use super::cotree::cograph_certificate;
use super::general::general_iso;
use super::IsoOutcome;
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Graph, Vertex};
use crate::oracles;
use crate::structure::{find_suture_structure, SutureComponent, SutureWitness};

pub const ALGORITHM: &str = "gem";

/// Decides isomorphism assuming both graphs are gem-induced-minor-free.
///
/// The answer is exact for any input; when a block has no suture witness
/// the general engine decides it and `fallback` is set.
pub fn gem_free_iso(g1: &ColoredGraph, g2: &ColoredGraph) -> Result<IsoOutcome> {
    let mut out = IsoOutcome::new(ALGORITHM);
    let isomorphic = iso_via_blocks(g1, g2, &mut |b1, b2| {
        out.blocks_tested += 1;
        block_iso(b1, b2, &mut out)
    })?;
    out.isomorphic = isomorphic;
    Ok(out)
}

fn block_iso(b1: &ColoredGraph, b2: &ColoredGraph, out: &mut IsoOutcome) -> Result<bool> {
    if b1.n() != b2.n()
        || b1.graph.m() != b2.graph.m()
        || b1.sorted_colors() != b2.sorted_colors()
        || b1.graph.degree_sequence() != b2.graph.degree_sequence()
    {
        return Ok(false);
    }
    let p4_free_1 = oracles::is_p4_free(&b1.graph);
    if p4_free_1 != oracles::is_p4_free(&b2.graph) {
        return Ok(false);
    }
    if p4_free_1 {
        return Ok(cograph_certificate(b1)? == cograph_certificate(b2)?);
    }
    let witness = match find_suture_structure(&b1.graph) {
        Ok(Some(w)) => w,
        Ok(None) | Err(Error::BudgetExhausted(_)) => {
            out.fallback = true;
            return general_iso(b1, b2);
        }
        Err(e) => return Err(e),
    };
    let h = &witness.h_vertices;
    let mut image = vec![usize::MAX; h.len()];
    let mut used = vec![false; b2.n()];
    find_images(b1, b2, &witness, 0, &mut image, &mut used, out)
}

/// Extends `image` (images of `h[..pos]`) in all induced, color- and
/// degree-preserving ways, testing each complete correspondence.
fn find_images(
    b1: &ColoredGraph,
    b2: &ColoredGraph,
    w: &SutureWitness,
    pos: usize,
    image: &mut Vec<Vertex>,
    used: &mut Vec<bool>,
    out: &mut IsoOutcome,
) -> Result<bool> {
    let h = &w.h_vertices;
    if pos == h.len() {
        out.enumerated += 1;
        return extends(b1, b2, w, image);
    }
    let v = h[pos];
    let cands: Vec<Vertex> = if pos == 0 {
        b2.graph.vertices().collect()
    } else {
        b2.graph.neighbors(image[pos - 1]).to_vec()
    };
    for x in cands {
        if used[x] || b2.colors[x] != b1.colors[v] || b2.graph.degree(x) != b1.graph.degree(v) {
            continue;
        }
        if (0..pos).any(|j| b1.graph.has_edge(v, h[j]) != b2.graph.has_edge(x, image[j])) {
            continue;
        }
        image[pos] = x;
        used[x] = true;
        let found = find_images(b1, b2, w, pos + 1, image, used, out)?;
        used[x] = false;
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether `h[i] -> image[i]` extends to an isomorphism of the blocks.
fn extends(b1: &ColoredGraph, b2: &ColoredGraph, w: &SutureWitness, image: &[Vertex]) -> Result<bool> {
    let n = b1.n();
    let mut psi = vec![usize::MAX; n];
    for (&a, &b) in w.h_vertices.iter().zip(image) {
        psi[a] = b;
    }
    let mut in_image = vec![false; n];
    for &x in image {
        in_image[x] = true;
    }
    let outside: Vec<bool> = in_image.iter().map(|&x| !x).collect();
    let comps2 = b2.graph.components_within(&outside);
    if comps2.len() != w.components.len() {
        return Ok(false);
    }
    let mut taken = vec![false; comps2.len()];
    for comp in &w.components {
        let mut matched = false;
        for (j, m2) in comps2.iter().enumerate() {
            if taken[j] || m2.len() != comp.vertices.len() {
                continue;
            }
            if component_extends(b1, b2, w, comp, m2, &psi)? {
                taken[j] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `φ` extends to an isomorphism `b1[V(H1) ∪ M1] -> b2[V(H2) ∪ M2]`.
fn component_extends(
    b1: &ColoredGraph,
    b2: &ColoredGraph,
    w: &SutureWitness,
    comp: &SutureComponent,
    m2: &[Vertex],
    base: &[Vertex],
) -> Result<bool> {
    let (g1, g2) = (&b1.graph, &b2.graph);
    let mut psi = base.to_vec();
    let mut in_rest2 = vec![false; b2.n()];
    for &x in m2 {
        in_rest2[x] = true;
    }
    let mut mapped: Vec<Vertex> = w.h_vertices.clone();
    for chain in &comp.chains {
        let mut level = Vec::with_capacity(chain.len());
        for &v in chain {
            let anchor = g1
                .neighbors(v)
                .iter()
                .copied()
                .find(|&c| psi[c] != usize::MAX)
                .expect("chain vertices touch an anchored vertex");
            let mut hits = g2.neighbors(psi[anchor]).iter().copied().filter(|&u| in_rest2[u]);
            let (Some(u), None) = (hits.next(), hits.next()) else {
                return Ok(false);
            };
            if b2.colors[u] != b1.colors[v] || g2.degree(u) != g1.degree(v) || level.iter().any(|&(_, x)| x == u) {
                return Ok(false);
            }
            level.push((v, u));
        }
        for &(v, u) in &level {
            psi[v] = u;
            in_rest2[u] = false;
            mapped.push(v);
        }
    }
    // Adjacency among H and chain vertices.
    let chain_start = w.h_vertices.len();
    for i in chain_start..mapped.len() {
        for j in 0..i {
            let (a, b) = (mapped[i], mapped[j]);
            if g1.has_edge(a, b) != g2.has_edge(psi[a], psi[b]) {
                return Ok(false);
            }
        }
    }
    let r2: Vec<Vertex> = m2.iter().copied().filter(|&x| in_rest2[x]).collect();
    if r2.len() != comp.residual.len() {
        return Ok(false);
    }
    let mut att2: Vec<Vertex> = g2.neighborhood_of_set(&r2);
    att2.sort_unstable();
    let mut want: Vec<Vertex> = comp.attachments.iter().map(|&a| psi[a]).collect();
    want.sort_unstable();
    if att2 != want {
        return Ok(false);
    }
    let a2: Vec<Vertex> = comp.attachments.iter().map(|&a| psi[a]).collect();
    let (s1, a1_local) = with_apices(b1, &comp.residual, &comp.attachments);
    let (s2, a2_local) = with_apices(b2, &r2, &a2);
    match iso_apexed_cograph_fixed(&s1, &a1_local, &s2, &a2_local) {
        Ok(b) => Ok(b),
        Err(Error::NotP4Free) => Ok(false),
        Err(e) => Err(e),
    }
}

/// `b[residual ∪ apices]` with apices recolored to a shared fresh color,
/// and the apex positions in the new graph.
fn with_apices(b: &ColoredGraph, residual: &[Vertex], apices: &[Vertex]) -> (ColoredGraph, Vec<Vertex>) {
    let mut keep: Vec<Vertex> = residual.iter().chain(apices).copied().collect();
    keep.sort_unstable();
    let (sub, old): (Graph, Vec<Vertex>) = b.graph.induced_subgraph(&keep);
    let mut colors: Vec<usize> = old.iter().map(|&v| b.colors[v] + 1).collect();
    let local: Vec<Vertex> = apices
        .iter()
        .map(|a| old.binary_search(a).expect("apex kept"))
        .collect();
    for &i in &local {
        colors[i] = 0;
    }
    (ColoredGraph::new(sub, colors).expect("one color per vertex"), local)
}
