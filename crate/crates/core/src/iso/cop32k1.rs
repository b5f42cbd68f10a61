//! Isomorphism of co-(P3 ∪ 2K1)-induced-minor-free graphs.
//!
//! In this class a block with a `K8` minor has a compact one and is
//! `(K2 ∪ K1)`-free, that is, complete multipartite; such blocks are
//! compared by cograph certificate. Blocks without a compact `K8` minor go
//! to the general engine and the outcome is flagged as fallback.

use super::blocks::iso_via_blocks;
use super::cotree::cograph_certificate;
use super::general::general_iso;
use super::IsoOutcome;
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Graph};
use crate::structure::find_compact_clique_minor;

pub const ALGORITHM: &str = "cop32k1";
/// Clique order whose compact minor switches to the multipartite branch.
pub const CLIQUE_ORDER: usize = 8;

pub fn cop32k1_free_iso(g1: &ColoredGraph, g2: &ColoredGraph) -> Result<IsoOutcome> {
    let mut out = IsoOutcome::new(ALGORITHM);
    let isomorphic = iso_via_blocks(g1, g2, &mut |b1, b2| {
        out.blocks_tested += 1;
        block_iso(b1, b2, &mut out)
    })?;
    out.isomorphic = isomorphic;
    Ok(out)
}

fn block_iso(b1: &ColoredGraph, b2: &ColoredGraph, out: &mut IsoOutcome) -> Result<bool> {
    if b1.n() != b2.n() || b1.graph.m() != b2.graph.m() || b1.sorted_colors() != b2.sorted_colors() {
        return Ok(false);
    }
    let k1 = b1.n() >= CLIQUE_ORDER && find_compact_clique_minor(&b1.graph, CLIQUE_ORDER)?.is_some();
    let k2 = b2.n() >= CLIQUE_ORDER && find_compact_clique_minor(&b2.graph, CLIQUE_ORDER)?.is_some();
    if k1 != k2 {
        // Compact clique minors map to compact clique minors.
        return Ok(false);
    }
    if !k1 {
        out.fallback = true;
        return general_iso(b1, b2);
    }
    out.clique_branch += 1;
    for b in [b1, b2] {
        if !is_k2uk1_free(&b.graph) {
            return Err(Error::ClassAssumptionViolated(
                "block with a compact K8 minor has an induced K2 ∪ K1".into(),
            ));
        }
    }
    Ok(cograph_certificate(b1)? == cograph_certificate(b2)?)
}

/// `(K2 ∪ K1)`-free: non-adjacent vertices always have equal neighborhoods.
pub fn is_k2uk1_free(g: &Graph) -> bool {
    g.vertices().all(|u| {
        g.vertices()
            .filter(|&v| v > u && !g.has_edge(u, v))
            .all(|v| g.neighbors(u) == g.neighbors(v))
    })
}
