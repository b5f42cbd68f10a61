//! Isomorphism and clique-width status of `H`-induced-minor-free graphs.
//!
//! The isomorphism problem is polynomial exactly when `H` is complete or an
//! induced subgraph of the gem or of co-(P3 ∪ 2K1), and GI-complete
//! otherwise. Clique-width is bounded exactly in the two induced-subgraph
//! cases. The verdict records which checks established it.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{named, Graph, Vertex};
use crate::oracles::find_induced_subgraph;

/// Patterns up to this order get a full justification chain.
pub const CLASSIFY_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SplitPartition {
    pub clique: Vec<Vertex>,
    pub independent: Vec<Vertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GiStatus {
    PolynomialTime,
    #[serde(rename = "GIComplete")]
    GiComplete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CwStatus {
    Bounded,
    Unbounded,
}

/// One step of a justification, with its witness where there is one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Rule {
    Complete { order: usize },
    /// Clique-width of complete graphs is bounded only up to order four.
    LargeClique { order: usize },
    /// `embedding[v]` is the gem vertex playing `v`.
    InducedSubgraphOfGem { embedding: Vec<Vertex> },
    InducedSubgraphOfCoP32k1 { embedding: Vec<Vertex> },
    NotRestrictedSplit { split_partitions: usize },
    /// An odd cycle of the complement.
    NotCobipartite { odd_cycle: Vec<Vertex> },
    /// `embedding` lists the pattern vertices playing the triangle, then the
    /// isolated vertex.
    ContainsK3uK1 { embedding: Vec<Vertex> },
    SixPlusVertexCase { sub_case: String },
    /// Above the size cap only the closed form is evaluated.
    ClosedForm { order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVerdict {
    pub gi: GiStatus,
    pub cw: CwStatus,
    pub rules: Vec<Rule>,
}

fn check_cap(h: &Graph) -> Result<()> {
    if h.n() > CLASSIFY_CAP {
        return Err(Error::TooLarge { n: h.n(), limit: CLASSIFY_CAP });
    }
    Ok(())
}

/// Every partition of `V(h)` into a clique and an independent set.
pub fn enumerate_split_partitions(h: &Graph) -> Result<Vec<SplitPartition>> {
    check_cap(h)?;
    let n = h.n();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let (clique, independent): (Vec<Vertex>, Vec<Vertex>) = (0..n).partition(|&v| mask >> v & 1 == 1);
        let is_clique = clique.iter().enumerate().all(|(i, &a)| clique[i + 1..].iter().all(|&b| h.has_edge(a, b)));
        let is_indep =
            independent.iter().enumerate().all(|(i, &a)| independent[i + 1..].iter().all(|&b| !h.has_edge(a, b)));
        if is_clique && is_indep {
            out.push(SplitPartition { clique, independent });
        }
    }
    Ok(out)
}

/// Every split partition, without a size cap. A maximum clique is read
/// off the degree sequence; any other split partition differs from it by
/// moving one vertex across, or by exchanging one vertex from each side.
pub fn split_partitions(h: &Graph) -> Vec<SplitPartition> {
    let n = h.n();
    let mut order: Vec<Vertex> = h.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    let m = (0..n).filter(|&i| h.degree(order[i]) >= i).max().map_or(0, |i| i + 1);
    let mut in_k = vec![false; n];
    for &v in &order[..m] {
        in_k[v] = true;
    }
    let valid = |in_k: &[bool]| {
        h.edges().all(|(a, b)| in_k[a] || in_k[b])
            && (0..n).all(|a| !in_k[a] || (a + 1..n).all(|b| !in_k[b] || h.has_edge(a, b)))
    };
    if !valid(&in_k) {
        return Vec::new();
    }
    let mut found = std::collections::BTreeSet::new();
    found.insert(in_k.clone());
    for u in (0..n).map(Some).chain([None]) {
        for v in (0..n).map(Some).chain([None]) {
            let mut k = in_k.clone();
            if let Some(u) = u {
                if !k[u] {
                    continue;
                }
                k[u] = false;
            }
            if let Some(v) = v {
                if in_k[v] {
                    continue;
                }
                k[v] = true;
            }
            if valid(&k) {
                found.insert(k);
            }
        }
    }
    found
        .into_iter()
        .map(|k| {
            let (clique, independent) = (0..n).partition(|&v| k[v]);
            SplitPartition { clique, independent }
        })
        .collect()
}

/// A split partition whose independent vertices have at most two neighbors.
pub fn restricted_split_partition(h: &Graph) -> Option<SplitPartition> {
    split_partitions(h).into_iter().find(|p| p.independent.iter().all(|&v| h.degree(v) <= 2))
}

pub fn is_restricted_split_type(h: &Graph) -> bool {
    restricted_split_partition(h).is_some()
}

/// Two-coloring of the complement (`true` side, `false` side), or an odd
/// cycle of the complement.
pub fn cobipartition(h: &Graph) -> std::result::Result<Vec<bool>, Vec<Vertex>> {
    let n = h.n();
    let co = h.complement();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(true);
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &y in co.neighbors(x) {
                match side[y] {
                    None => {
                        side[y] = Some(!side[x].expect("set"));
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        q.push_back(y);
                    }
                    Some(sy) if sy == side[x].expect("set") => {
                        // Walk both ends up to their common ancestor.
                        let (mut a, mut b) = (x, y);
                        let (mut left, mut right) = (vec![a], vec![b]);
                        while a != b {
                            if depth[a] >= depth[b] {
                                a = parent[a];
                                left.push(a);
                            } else {
                                b = parent[b];
                                right.push(b);
                            }
                        }
                        right.pop();
                        right.reverse();
                        left.extend(right);
                        return Err(left);
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(side.into_iter().map(|s| s.expect("all colored")).collect())
}

/// `h` splits into two cliques.
pub fn is_cobipartite(h: &Graph) -> bool {
    cobipartition(h).is_ok()
}

fn clique_number_at_least(h: &Graph, k: usize) -> bool {
    fn rec(h: &Graph, chosen: &mut Vec<Vertex>, start: Vertex, k: usize) -> bool {
        if chosen.len() == k {
            return true;
        }
        for v in start..h.n() {
            if chosen.iter().all(|&c| h.has_edge(c, v)) {
                chosen.push(v);
                if rec(h, chosen, v + 1, k) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(h, &mut Vec::new(), 0, k)
}

/// Sub-case of the analysis for non-complete patterns on six or more
/// vertices that are co-bipartite and of restricted split type.
fn six_plus_sub_case(h: &Graph) -> String {
    if clique_number_at_least(h, 5) {
        "clique of order five forces minimum degree three".into()
    } else if h.n() >= 7 {
        "split graph on seven or more vertices without K5 has three independent vertices".into()
    } else {
        "K4 plus two degree-2 vertices without common neighbor (co-H)".into()
    }
}

pub fn classify(h: &Graph) -> Result<ClassVerdict> {
    let n = h.n();
    if n == 0 {
        return Err(Error::Precondition("pattern has no vertices".into()));
    }
    let complete = h.is_complete();
    if n > CLASSIFY_CAP {
        let mut rules = Vec::new();
        let gi = if complete {
            rules.push(Rule::Complete { order: n });
            GiStatus::PolynomialTime
        } else {
            GiStatus::GiComplete
        };
        rules.push(Rule::ClosedForm { order: n });
        return Ok(ClassVerdict { gi, cw: CwStatus::Unbounded, rules });
    }

    let mut rules = Vec::new();
    if complete {
        rules.push(Rule::Complete { order: n });
    }
    let gem = find_induced_subgraph(&named::gem(), h)?;
    let cop = find_induced_subgraph(&named::co_p3_2k1(), h)?;
    if let Some(embedding) = gem.clone() {
        rules.push(Rule::InducedSubgraphOfGem { embedding });
    }
    if let Some(embedding) = cop.clone() {
        rules.push(Rule::InducedSubgraphOfCoP32k1 { embedding });
    }
    let bounded = gem.is_some() || cop.is_some();
    let poly = complete || bounded;
    if complete && !bounded {
        rules.push(Rule::LargeClique { order: n });
    }
    if !poly {
        let partitions = enumerate_split_partitions(h)?;
        let restricted = partitions.iter().any(|p| p.independent.iter().all(|&v| h.degree(v) <= 2));
        if !restricted {
            rules.push(Rule::NotRestrictedSplit { split_partitions: partitions.len() });
        } else if let Err(odd_cycle) = cobipartition(h) {
            rules.push(Rule::NotCobipartite { odd_cycle });
        } else if let Some(emb) = find_induced_subgraph(h, &named::k3_k1())? {
            rules.push(Rule::ContainsK3uK1 { embedding: emb });
        }
        if n >= 6 {
            rules.push(Rule::SixPlusVertexCase { sub_case: six_plus_sub_case(h) });
        }
    }
    Ok(ClassVerdict {
        gi: if poly { GiStatus::PolynomialTime } else { GiStatus::GiComplete },
        cw: if bounded { CwStatus::Bounded } else { CwStatus::Unbounded },
        rules,
    })
}

/// Replays every witness in a verdict against `h`.
pub fn check_verdict(h: &Graph, v: &ClassVerdict) -> std::result::Result<(), String> {
    if v.rules.is_empty() {
        return Err("empty justification".into());
    }
    let embeds = |target: &Graph, emb: &[Vertex]| {
        emb.len() == h.n()
            && emb.iter().all(|&x| x < target.n())
            && (0..h.n()).all(|a| (0..a).all(|b| emb[a] != emb[b] && h.has_edge(a, b) == target.has_edge(emb[a], emb[b])))
    };
    for rule in &v.rules {
        let ok = match rule {
            Rule::Complete { order } => *order == h.n() && h.is_complete(),
            Rule::LargeClique { order } => h.is_complete() && *order >= 5,
            Rule::InducedSubgraphOfGem { embedding } => embeds(&named::gem(), embedding),
            Rule::InducedSubgraphOfCoP32k1 { embedding } => embeds(&named::co_p3_2k1(), embedding),
            Rule::NotRestrictedSplit { .. } => !is_restricted_split_type(h),
            Rule::NotCobipartite { odd_cycle } => {
                let k = odd_cycle.len();
                k % 2 == 1
                    && (0..k).all(|i| {
                        let (a, b) = (odd_cycle[i], odd_cycle[(i + 1) % k]);
                        a != b && !h.has_edge(a, b)
                    })
            }
            Rule::ContainsK3uK1 { embedding } => {
                let e = embedding;
                e.len() == 4
                    && h.has_edge(e[0], e[1])
                    && h.has_edge(e[1], e[2])
                    && h.has_edge(e[0], e[2])
                    && (0..3).all(|i| !h.has_edge(e[i], e[3]))
            }
            Rule::SixPlusVertexCase { .. } => h.n() >= 6 && !h.is_complete(),
            Rule::ClosedForm { order } => *order == h.n() && h.n() > CLASSIFY_CAP,
        };
        if !ok {
            return Err(format!("rule {rule:?} does not hold"));
        }
    }
    Ok(())
}
