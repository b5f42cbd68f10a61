//! Polynomial membership tests and structural witnesses.

use serde::{Deserialize, Serialize};

use crate::error::{Budget, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::iso::cotree::CoTree;
use crate::oracles::{self, MinorModel};

/// Default step budget for the compact clique minor search.
pub const COMPACT_MINOR_BUDGET: u64 = 50_000_000;
/// Default step budget for enumerating suture candidates.
pub const SUTURE_BUDGET: u64 = 20_000_000;
/// Largest clique order accepted by [`complete_induced_minor`].
pub const MAX_CLIQUE_ORDER: usize = 8;
/// Most branching vertices a suture path or cycle may contain.
pub const MAX_BRANCHING: usize = 4;
/// Most attachment vertices of a suture residual.
pub const MAX_ATTACHMENTS: usize = 4;

// ---------------------------------------------------------------------------
// Forest characterization

/// A cycle of `g[allowed]` as a closed vertex sequence, if there is one.
pub fn find_cycle_within(g: &Graph, allowed: &[bool]) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    let mut forest: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for (a, b) in g.edges() {
        if !allowed[a] || !allowed[b] {
            continue;
        }
        let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
        if ra != rb {
            uf[ra] = rb;
            forest[a].push(b);
            forest[b].push(a);
            continue;
        }
        // Tree path a -> b closes a cycle with the edge b-a.
        let mut parent = vec![usize::MAX; n];
        parent[a] = a;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            if x == b {
                break;
            }
            for &y in &forest[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut cycle = vec![b];
        while *cycle.last().expect("nonempty") != a {
            cycle.push(parent[*cycle.last().expect("nonempty")]);
        }
        return Some(cycle);
    }
    None
}

/// A vertex `u` and a cycle in `g - N[u]`, when one exists.
pub fn k3uk1_certificate(g: &Graph) -> Option<(Vertex, Vec<Vertex>)> {
    for u in g.vertices() {
        let mut allowed = vec![true; g.n()];
        allowed[u] = false;
        for &w in g.neighbors(u) {
            allowed[w] = false;
        }
        if let Some(c) = find_cycle_within(g, &allowed) {
            return Some((u, c));
        }
    }
    None
}

/// `K3 ∪ K1` is an induced minor of `g` exactly when some `g - N[u]` has a cycle.
pub fn k3uk1_induced_minor_free(g: &Graph) -> bool {
    k3uk1_certificate(g).is_none()
}

// ---------------------------------------------------------------------------
// Exclusive attachment

/// Vertices of `m` with a neighbor in `c` that no other vertex of `m`
/// shares.
pub fn exclusive_attachment_set(g: &Graph, c: &[Vertex], m: &[Vertex]) -> Vec<Vertex> {
    let n = g.n();
    let mut in_c = vec![false; n];
    for &x in c {
        in_c[x] = true;
    }
    let mut count = vec![0usize; n];
    for &v in m {
        for &w in g.neighbors(v) {
            if in_c[w] {
                count[w] += 1;
            }
        }
    }
    let mut out: Vec<Vertex> = m
        .iter()
        .copied()
        .filter(|&v| {
            let mut attached = false;
            for &w in g.neighbors(v) {
                if in_c[w] {
                    if count[w] > 1 {
                        return false;
                    }
                    attached = true;
                }
            }
            attached
        })
        .collect();
    out.sort_unstable();
    out
}

// ---------------------------------------------------------------------------
// Compact clique minors

/// A `K_t` minor whose bags are single vertices or adjacent pairs.
///
/// `None` only says no compact model exists; `Err(BudgetExhausted)` says
/// the search gave up.
pub fn find_compact_clique_minor(g: &Graph, t: usize) -> Result<Option<MinorModel>> {
    find_compact_clique_minor_with(g, t, &mut Budget::from_env(COMPACT_MINOR_BUDGET))
}

pub fn find_compact_clique_minor_with(g: &Graph, t: usize, budget: &mut Budget) -> Result<Option<MinorModel>> {
    if t < 3 {
        return Err(Error::Precondition(format!("clique order {t} below 3")));
    }
    let n = g.n();
    let mut cands: Vec<Vec<Vertex>> = g.vertices().map(|v| vec![v]).collect();
    cands.extend(g.edges().map(|(u, v)| vec![u, v]));
    cands.retain(|b| g.neighborhood_of_set(b).len() + 1 >= t);
    let deg_sum = |b: &Vec<Vertex>| b.iter().map(|&v| g.degree(v)).sum::<usize>();
    cands.sort_by(|a, b| deg_sum(b).cmp(&deg_sum(a)).then_with(|| a.cmp(b)));

    let nbr: Vec<Vec<bool>> = cands
        .iter()
        .map(|b| {
            let mut mask = vec![false; n];
            for v in g.neighborhood_of_set(b) {
                mask[v] = true;
            }
            mask
        })
        .collect();
    let compatible = |i: usize, j: usize| {
        let (a, b) = (&cands[i], &cands[j]);
        a.iter().all(|x| !b.contains(x)) && b.iter().any(|&y| nbr[i][y])
    };

    fn rec(
        chosen: &mut Vec<usize>,
        pool: &[usize],
        t: usize,
        compatible: &dyn Fn(usize, usize) -> bool,
        budget: &mut Budget,
    ) -> Result<bool> {
        budget.tick()?;
        if chosen.len() == t {
            return Ok(true);
        }
        for (k, &c) in pool.iter().enumerate() {
            if pool.len() - k < t - chosen.len() {
                break;
            }
            let next: Vec<usize> = pool[k + 1..].iter().copied().filter(|&d| compatible(c, d)).collect();
            if next.len() + 1 < t - chosen.len() {
                continue;
            }
            chosen.push(c);
            if rec(chosen, &next, t, compatible, budget)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    let pool: Vec<usize> = (0..cands.len()).collect();
    let mut chosen = Vec::new();
    if rec(&mut chosen, &pool, t, &compatible, budget)? {
        let bags = chosen.iter().map(|&i| cands[i].clone()).collect();
        Ok(Some(MinorModel { bags, induced: true }))
    } else {
        Ok(None)
    }
}

/// Whether `K_k` is an induced minor (equivalently a minor) of `g`.
pub fn complete_induced_minor(g: &Graph, k: usize) -> Result<bool> {
    if k > MAX_CLIQUE_ORDER {
        return Err(Error::Precondition(format!("clique order {k} above {MAX_CLIQUE_ORDER}")));
    }
    match k {
        0 => return Ok(true),
        1 => return Ok(g.n() >= 1),
        2 => return Ok(g.m() >= 1),
        _ => {}
    }
    if find_compact_clique_minor(g, k)?.is_some() {
        return Ok(true);
    }
    Ok(oracles::minor_bruteforce(g, &Graph::complete(k))?.is_some())
}

// ---------------------------------------------------------------------------
// Sutures

/// One component `M` of `G - V(H)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SutureComponent {
    pub vertices: Vec<Vertex>,
    /// `chains[i]` has exclusive attachment with respect to `V(H)` and all
    /// earlier chains, among the vertices of `M` not in earlier chains.
    pub chains: Vec<Vec<Vertex>>,
    /// What remains of `M`; induces a P4-free graph.
    pub residual: Vec<Vertex>,
    /// Neighbors of the residual in `V(H)` and the chains.
    pub attachments: Vec<Vertex>,
}

/// An induced path or cycle `H` with few branching vertices such that
/// every component of `G - V(H)` peels down to a P4-free residual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SutureWitness {
    /// In path or cycle order; empty when the graph itself is P4-free.
    pub h_vertices: Vec<Vertex>,
    pub is_cycle: bool,
    pub branch_vertices: Vec<Vertex>,
    pub components: Vec<SutureComponent>,
}

impl SutureWitness {
    /// Every chain vertex of every component, sorted.
    pub fn chain_vertices(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> =
            self.components.iter().flat_map(|c| c.chains.iter().flatten().copied()).collect();
        out.sort_unstable();
        out
    }
}

/// Induced paths and cycles with at most [`MAX_BRANCHING`] branching
/// vertices, deduplicated by vertex set, as `(order, is_cycle)`.
pub fn suture_candidates(g: &Graph, budget: &mut Budget) -> Result<Vec<(Vec<Vertex>, bool)>> {
    let n = g.n();
    let branching = |v: Vertex| g.degree(v) >= 3;
    let mut found: std::collections::BTreeMap<(Vec<Vertex>, bool), Vec<Vertex>> = Default::default();
    let mut in_path = vec![false; n];
    // Number of path vertices adjacent to each vertex.
    let mut touch = vec![0usize; n];

    #[allow(clippy::too_many_arguments)]
    fn extend(
        g: &Graph,
        path: &mut Vec<Vertex>,
        in_path: &mut [bool],
        touch: &mut [usize],
        branches: usize,
        branching: &dyn Fn(Vertex) -> bool,
        found: &mut std::collections::BTreeMap<(Vec<Vertex>, bool), Vec<Vertex>>,
        budget: &mut Budget,
    ) -> Result<()> {
        budget.tick()?;
        let mut key = path.clone();
        key.sort_unstable();
        found.entry((key, false)).or_insert_with(|| path.clone());
        let last = *path.last().expect("nonempty");
        let first = path[0];
        for &y in g.neighbors(last) {
            if in_path[y] {
                continue;
            }
            let b = branches + branching(y) as usize;
            if b > MAX_BRANCHING {
                continue;
            }
            // y sees `last`, and possibly `first` (closing a cycle), nothing else.
            let closes = path.len() >= 2 && g.has_edge(y, first);
            if touch[y] != 1 + closes as usize {
                continue;
            }
            if closes {
                let mut cyc = path.clone();
                cyc.push(y);
                let mut key = cyc.clone();
                key.sort_unstable();
                found.entry((key, true)).or_insert(cyc);
                continue;
            }
            path.push(y);
            in_path[y] = true;
            for &w in g.neighbors(y) {
                touch[w] += 1;
            }
            extend(g, path, in_path, touch, b, branching, found, budget)?;
            for &w in g.neighbors(y) {
                touch[w] -= 1;
            }
            in_path[y] = false;
            path.pop();
        }
        Ok(())
    }

    for s in 0..n {
        let mut path = vec![s];
        in_path[s] = true;
        for &w in g.neighbors(s) {
            touch[w] += 1;
        }
        extend(g, &mut path, &mut in_path, &mut touch, branching(s) as usize, &branching, &mut found, budget)?;
        for &w in g.neighbors(s) {
            touch[w] -= 1;
        }
        in_path[s] = false;
    }
    Ok(found.into_iter().map(|((_, cyc), order)| (order, cyc)).collect())
}

/// Checks one candidate `H`; returns its witness when every component of
/// `G - V(H)` peels to a P4-free residual with few attachments.
pub fn suture_witness_for(g: &Graph, order: &[Vertex], is_cycle: bool) -> Option<SutureWitness> {
    let n = g.n();
    let mut in_h = vec![false; n];
    for &h in order {
        in_h[h] = true;
    }
    let branch_vertices: Vec<Vertex> = {
        let mut b: Vec<Vertex> = order.iter().copied().filter(|&v| g.degree(v) >= 3).collect();
        b.sort_unstable();
        b
    };
    if branch_vertices.len() > MAX_BRANCHING {
        return None;
    }
    let outside: Vec<bool> = in_h.iter().map(|&x| !x).collect();
    let mut components = Vec::new();
    for m in g.components_within(&outside) {
        if is_cycle {
            let touched = g.neighborhood_of_set(&m).into_iter().filter(|&v| in_h[v]).count();
            if touched == order.len() {
                return None;
            }
        }
        let mut anchor: Vec<Vertex> = order.to_vec();
        let mut rest = m.clone();
        let mut chains = Vec::new();
        loop {
            let a = exclusive_attachment_set(g, &anchor, &rest);
            if a.is_empty() {
                break;
            }
            rest.retain(|v| a.binary_search(v).is_err());
            anchor.extend(&a);
            chains.push(a);
        }
        let (res_graph, _) = g.induced_subgraph(&rest);
        if CoTree::build(&res_graph).is_err() {
            return None;
        }
        let mut attachments: Vec<Vertex> = g
            .neighborhood_of_set(&rest)
            .into_iter()
            .filter(|v| rest.binary_search(v).is_err())
            .collect();
        attachments.sort_unstable();
        if attachments.len() > MAX_ATTACHMENTS {
            return None;
        }
        components.push(SutureComponent { vertices: m, chains, residual: rest, attachments });
    }
    Some(SutureWitness { h_vertices: order.to_vec(), is_cycle, branch_vertices, components })
}

/// Lexicographically least (by sorted vertex set) valid suture witness.
///
/// Meant for 2-connected gem-induced-minor-free graphs, where one always
/// exists; `None` signals that assumption failed.
pub fn find_suture_structure(g: &Graph) -> Result<Option<SutureWitness>> {
    find_suture_structure_with(g, &mut Budget::from_env(SUTURE_BUDGET))
}

pub fn find_suture_structure_with(g: &Graph, budget: &mut Budget) -> Result<Option<SutureWitness>> {
    if CoTree::build(g).is_ok() {
        let all: Vec<Vertex> = g.vertices().collect();
        let components = if all.is_empty() {
            Vec::new()
        } else {
            vec![SutureComponent { vertices: all.clone(), chains: Vec::new(), residual: all, attachments: Vec::new() }]
        };
        return Ok(Some(SutureWitness { h_vertices: Vec::new(), is_cycle: false, branch_vertices: Vec::new(), components }));
    }
    for (order, is_cycle) in suture_candidates(g, budget)? {
        budget.charge(g.n() as u64)?;
        if let Some(w) = suture_witness_for(g, &order, is_cycle) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Independent check of every witness invariant, including a replay of
/// the chain contractions.
pub fn check_suture_witness(g: &Graph, w: &SutureWitness) -> std::result::Result<(), String> {
    let n = g.n();
    let h = &w.h_vertices;
    let mut role = vec![0u8; n]; // 0 unseen, 1 in H, 2 in a component
    for &v in h {
        if v >= n || role[v] != 0 {
            return Err(format!("H vertex {v} repeated or out of range"));
        }
        role[v] = 1;
    }
    // H is an induced path or cycle in the given order.
    for i in 0..h.len() {
        for j in (i + 1)..h.len() {
            let consecutive = j == i + 1 || (w.is_cycle && i == 0 && j == h.len() - 1);
            if g.has_edge(h[i], h[j]) != consecutive {
                return Err(format!("H is not induced at positions {i}, {j}"));
            }
        }
    }
    if w.is_cycle && h.len() < 3 {
        return Err("cycle with fewer than three vertices".into());
    }
    if h.is_empty() && oracles::find_induced_p4_bruteforce(g).is_some() {
        return Err("empty H but the graph has an induced P4".into());
    }
    let mut branch: Vec<Vertex> = h.iter().copied().filter(|&v| g.degree(v) >= 3).collect();
    branch.sort_unstable();
    if branch != w.branch_vertices {
        return Err("branch vertices do not match degrees".into());
    }
    if branch.len() > MAX_BRANCHING {
        return Err(format!("{} branching vertices", branch.len()));
    }
    for comp in &w.components {
        for &v in &comp.vertices {
            if v >= n || role[v] != 0 {
                return Err(format!("component vertex {v} repeated, in H, or out of range"));
            }
            role[v] = 2;
        }
    }
    if role.contains(&0) {
        return Err("components do not cover G - V(H)".into());
    }
    let mut comp_of = vec![usize::MAX; n];
    for (i, comp) in w.components.iter().enumerate() {
        for &v in &comp.vertices {
            comp_of[v] = i;
        }
        if !g.is_connected_set(&comp.vertices) {
            return Err(format!("component {i} is not connected"));
        }
    }
    for (a, b) in g.edges() {
        if comp_of[a] != usize::MAX && comp_of[b] != usize::MAX && comp_of[a] != comp_of[b] {
            return Err(format!("edge {a}-{b} joins two components"));
        }
    }
    for (i, comp) in w.components.iter().enumerate() {
        let inside = |set: &[Vertex], v: Vertex| set.contains(&v);
        if w.is_cycle {
            let all_touched = h.iter().all(|&x| g.neighbors(x).iter().any(|&y| comp_of[y] == i));
            if all_touched {
                return Err(format!("component {i} attaches to every cycle vertex"));
            }
        }
        // Replay the peeling with the definition spelled out.
        let mut anchor: Vec<Vertex> = h.clone();
        let mut rest: Vec<Vertex> = comp.vertices.clone();
        for (k, chain) in comp.chains.iter().chain(std::iter::once(&Vec::new())).enumerate() {
            let expected: Vec<Vertex> = rest
                .iter()
                .copied()
                .filter(|&v| {
                    let nv: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&x| inside(&anchor, x)).collect();
                    !nv.is_empty()
                        && rest.iter().all(|&u| u == v || !nv.iter().any(|&x| g.has_edge(u, x)))
                })
                .collect();
            let mut got = chain.clone();
            got.sort_unstable();
            let mut exp = expected;
            exp.sort_unstable();
            if got != exp {
                return Err(format!("component {i}: chain {k} is not the exclusive-attachment set"));
            }
            rest.retain(|v| !inside(&got, *v));
            anchor.extend(&got);
        }
        let mut res = comp.residual.clone();
        res.sort_unstable();
        rest.sort_unstable();
        if res != rest {
            return Err(format!("component {i}: residual is not what remains after the chains"));
        }
        let (rg, _) = g.induced_subgraph(&res);
        if oracles::find_induced_p4_bruteforce(&rg).is_some() {
            return Err(format!("component {i}: residual has an induced P4"));
        }
        let mut att: Vec<Vertex> =
            (0..n).filter(|&v| !inside(&res, v) && res.iter().any(|&r| g.has_edge(r, v))).collect();
        att.sort_unstable();
        if att != comp.attachments || att.len() > MAX_ATTACHMENTS {
            return Err(format!("component {i}: attachments wrong or more than {MAX_ATTACHMENTS}"));
        }
        replay_contraction(g, h, comp).map_err(|e| format!("component {i}: {e}"))?;
    }
    Ok(())
}

/// Contracts every chain vertex into an already-anchored neighbor, then
/// checks the residual is P4-free and touches at most four vertices.
fn replay_contraction(g: &Graph, h: &[Vertex], comp: &SutureComponent) -> std::result::Result<(), String> {
    let mut keep: Vec<Vertex> = h.to_vec();
    keep.extend(&comp.vertices);
    keep.sort_unstable();
    let (mut cur, old) = g.induced_subgraph(&keep);
    // where_[v] = current index of original vertex v
    let mut where_: Vec<Option<usize>> = vec![None; g.n()];
    for (i, &v) in old.iter().enumerate() {
        where_[v] = Some(i);
    }
    let mut anchored: Vec<Vertex> = h.to_vec();
    for chain in &comp.chains {
        for &v in chain {
            let cv = where_[v].ok_or("chain vertex lost")?;
            let target = anchored
                .iter()
                .filter_map(|&a| where_[a])
                .find(|&ca| cur.has_edge(cv, ca))
                .ok_or_else(|| format!("chain vertex {v} has no anchored neighbor"))?;
            let (next, map) = cur.contract_edge(cv, target).map_err(|e| e.to_string())?;
            for slot in where_.iter_mut() {
                if let Some(x) = *slot {
                    *slot = Some(map[x]);
                }
            }
            cur = next;
        }
        anchored.extend(chain);
    }
    let res: Vec<Vertex> = comp.residual.iter().map(|&v| where_[v].expect("residual kept")).collect();
    let (rg, _) = cur.induced_subgraph(&res);
    if oracles::find_induced_p4_bruteforce(&rg).is_some() {
        return Err("contracted residual has an induced P4".into());
    }
    let outside = cur.neighborhood_of_set(&res);
    if outside.len() > MAX_ATTACHMENTS {
        return Err(format!("contracted residual touches {} vertices", outside.len()));
    }
    Ok(())
}
