//! Brute-force reference implementations.
//!
//! These are correctness oracles, not fast algorithms: exhaustive searches
//! with pruning and a work budget. Witness validators live next to the
//! searches but never call them, so any module's witnesses can be checked.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Budget, Error, Result};
use crate::graph::{ColoredGraph, Graph, Vertex};

/// Default step budget for oracle searches (override with `INDMINOR_BUDGET`).
pub const ORACLE_BUDGET: u64 = 200_000_000;
/// Minor searches pack vertex sets into `u64`.
pub const MINOR_ORACLE_MAX_N: usize = 64;
/// Soft cap for [`iso_bruteforce`]; larger inputs work but may exhaust the budget.
pub const ISO_ORACLE_SOFT_N: usize = 40;

/// Vertex bijection `G1 -> G2`: `image[v]` is the image of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mapping {
    pub image: Vec<Vertex>,
}

impl Mapping {
    /// Whether this is a color-preserving isomorphism `g1 -> g2`.
    pub fn is_isomorphism(&self, g1: &ColoredGraph, g2: &ColoredGraph) -> bool {
        let n = g1.n();
        if g2.n() != n || self.image.len() != n || g1.graph.m() != g2.graph.m() {
            return false;
        }
        let mut hit = vec![false; n];
        for &u in &self.image {
            if u >= n || hit[u] {
                return false;
            }
            hit[u] = true;
        }
        (0..n).all(|v| g1.colors[v] == g2.colors[self.image[v]])
            && g1.graph.edges().all(|(a, b)| g2.graph.has_edge(self.image[a], self.image[b]))
    }
}

/// Bags realizing pattern vertex `i` by `bags[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub bags: Vec<Vec<Vertex>>,
    pub induced: bool,
}

impl MinorModel {
    /// Every bag has at most two vertices.
    pub fn is_compact(&self) -> bool {
        self.bags.iter().all(|b| b.len() <= 2)
    }

    /// For each bag vertex, the number of other bags it has a neighbor in.
    pub fn mdeg(&self, g: &Graph) -> BTreeMap<Vertex, usize> {
        let mut owner = vec![usize::MAX; g.n()];
        for (i, b) in self.bags.iter().enumerate() {
            for &v in b {
                owner[v] = i;
            }
        }
        let mut out = BTreeMap::new();
        for (i, b) in self.bags.iter().enumerate() {
            for &v in b {
                let mut touched: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .map(|&w| owner[w])
                    .filter(|&o| o != usize::MAX && o != i)
                    .collect();
                touched.sort_unstable();
                touched.dedup();
                out.insert(v, touched.len());
            }
        }
        out
    }
}

/// Checks that `model` witnesses `h` as a minor (induced if flagged) of `g`.
pub fn validate_model(g: &Graph, h: &Graph, model: &MinorModel) -> std::result::Result<(), String> {
    if model.bags.len() != h.n() {
        return Err(format!("{} bags for a pattern on {} vertices", model.bags.len(), h.n()));
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (i, bag) in model.bags.iter().enumerate() {
        if bag.is_empty() {
            return Err(format!("bag {i} is empty"));
        }
        for &v in bag {
            if v >= g.n() {
                return Err(format!("bag {i} holds out-of-range vertex {v}"));
            }
            if owner[v] != usize::MAX {
                return Err(format!("vertex {v} in bags {} and {i}", owner[v]));
            }
            owner[v] = i;
        }
        if !g.is_connected_set(bag) {
            return Err(format!("bag {i} is not connected"));
        }
    }
    let k = h.n();
    let mut touch = vec![vec![false; k]; k];
    for (a, b) in g.edges() {
        let (i, j) = (owner[a], owner[b]);
        if i != usize::MAX && j != usize::MAX && i != j {
            touch[i][j] = true;
            touch[j][i] = true;
        }
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if h.has_edge(i, j) && !touch[i][j] {
                return Err(format!("pattern edge {{{i},{j}}} has no edge between its bags"));
            }
            if model.induced && !h.has_edge(i, j) && touch[i][j] {
                return Err(format!("pattern non-edge {{{i},{j}}} is realized by an edge"));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Isomorphism

/// Jointly refined colors of two graphs; ids are comparable across both.
fn joint_refinement(g1: &ColoredGraph, g2: &ColoredGraph) -> (Vec<usize>, Vec<usize>) {
    let n1 = g1.n();
    let graphs = [&g1.graph, &g2.graph];
    let mut color: Vec<usize> = g1.colors.iter().chain(g2.colors.iter()).copied().collect();
    let nbrs = |x: usize| -> &[Vertex] {
        if x < n1 {
            graphs[0].neighbors(x)
        } else {
            graphs[1].neighbors(x - n1)
        }
    };
    let offset = |x: usize| if x < n1 { 0 } else { n1 };
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..color.len())
            .map(|x| {
                let mut s: Vec<usize> = nbrs(x).iter().map(|&w| color[w + offset(x)]).collect();
                s.sort_unstable();
                (color[x], s)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| sorted.binary_search(&s).expect("present")).collect();
        let count = sorted.len();
        color = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let c2 = color.split_off(n1);
    (color, c2)
}

/// Exhaustive color-preserving isomorphism search.
///
/// Colors are first refined jointly; vertices of `g1` are then mapped one at
/// a time in BFS order of the sparser of the graph and its complement, each
/// candidate checked against every vertex already mapped.
pub fn iso_bruteforce(g1: &ColoredGraph, g2: &ColoredGraph) -> Result<Option<Mapping>> {
    iso_bruteforce_with(g1, g2, &mut Budget::from_env(ORACLE_BUDGET))
}

pub fn iso_bruteforce_with(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    budget: &mut Budget,
) -> Result<Option<Mapping>> {
    let n = g1.n();
    if g2.n() != n
        || g1.graph.m() != g2.graph.m()
        || g1.sorted_colors() != g2.sorted_colors()
        || g1.graph.degree_sequence() != g2.graph.degree_sequence()
    {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Mapping { image: Vec::new() }));
    }
    let (c1, c2) = joint_refinement(g1, g2);
    let hist = |c: &[usize]| {
        let mut h = c.to_vec();
        h.sort_unstable();
        h
    };
    if hist(&c1) != hist(&c2) {
        return Ok(None);
    }

    let adj1 = dense(&g1.graph);
    let adj2 = dense(&g2.graph);
    let order = search_order(&g1.graph, &c1);
    let mut by_color: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for (u, &c) in c2.iter().enumerate() {
        by_color.entry(c).or_default().push(u);
    }

    struct St<'a> {
        n: usize,
        adj1: &'a [bool],
        adj2: &'a [bool],
        order: &'a [Vertex],
        c1: &'a [usize],
        by_color: &'a BTreeMap<usize, Vec<Vertex>>,
        image: Vec<Vertex>,
        used: Vec<bool>,
    }
    fn rec(st: &mut St<'_>, depth: usize, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        if depth == st.n {
            return Ok(true);
        }
        let v = st.order[depth];
        let n = st.n;
        for &u in &st.by_color[&st.c1[v]] {
            if st.used[u] {
                continue;
            }
            let ok = st.order[..depth]
                .iter()
                .all(|&w| st.adj1[v * n + w] == st.adj2[u * n + st.image[w]]);
            if !ok {
                continue;
            }
            st.image[v] = u;
            st.used[u] = true;
            if rec(st, depth + 1, budget)? {
                return Ok(true);
            }
            st.used[u] = false;
        }
        Ok(false)
    }
    let mut st = St {
        n,
        adj1: &adj1,
        adj2: &adj2,
        order: &order,
        c1: &c1,
        by_color: &by_color,
        image: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if rec(&mut st, 0, budget)? {
        let m = Mapping { image: st.image };
        debug_assert!(m.is_isomorphism(g1, g2));
        Ok(Some(m))
    } else {
        Ok(None)
    }
}

fn dense(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut a = vec![false; n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = true;
        a[v * n + u] = true;
    }
    a
}

/// BFS order over the sparser of `g` and its complement, each component
/// started from a vertex in the rarest color class.
fn search_order(g: &Graph, colors: &[usize]) -> Vec<Vertex> {
    let n = g.n();
    let sparse = if 4 * g.m() > n * n.saturating_sub(1) { g.complement() } else { g.clone() };
    let mut freq: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in colors {
        *freq.entry(c).or_default() += 1;
    }
    let mut starts: Vec<Vertex> = (0..n).collect();
    starts.sort_by_key(|&v| (freq[&colors[v]], std::cmp::Reverse(sparse.degree(v)), v));
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            let mut next: Vec<Vertex> = sparse.neighbors(x).iter().copied().filter(|&y| !seen[y]).collect();
            next.sort_by_key(|&y| (freq[&colors[y]], y));
            for y in next {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    order
}

// ---------------------------------------------------------------------------
// Minors

/// Exhaustive search for an induced-minor model of `h` in `g`.
pub fn induced_minor_bruteforce(g: &Graph, h: &Graph) -> Result<Option<MinorModel>> {
    MinorSearch::run(g, h, true, &mut Budget::from_env(ORACLE_BUDGET))
}

/// Exhaustive search for a (not necessarily induced) minor model of `h` in `g`.
pub fn minor_bruteforce(g: &Graph, h: &Graph) -> Result<Option<MinorModel>> {
    MinorSearch::run(g, h, false, &mut Budget::from_env(ORACLE_BUDGET))
}

pub fn minor_search_with(
    g: &Graph,
    h: &Graph,
    induced: bool,
    budget: &mut Budget,
) -> Result<Option<MinorModel>> {
    MinorSearch::run(g, h, induced, budget)
}

/// `true` iff `h` is not an induced minor of `g`.
pub fn is_induced_minor_free(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(induced_minor_bruteforce(g, h)?.is_none())
}

#[inline]
fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Assigns vertices of `g` one at a time to a bag or to the deleted set.
///
/// Pruning: bags may only grow through unassigned vertices not adjacent to
/// bags of non-neighboring pattern vertices (induced mode), so each bag must
/// stay connectable and every pattern edge must stay realizable within
/// those reach sets. Bags of twin pattern vertices are opened in index order.
struct MinorSearch {
    n: usize,
    k: usize,
    gadj: Vec<u64>,
    hadj: Vec<u64>,
    induced: bool,
    order: Vec<usize>,
    bag: Vec<u64>,
    unassigned: u64,
    twin_prev: Vec<Option<usize>>,
    non_nbr: Vec<u64>,
}

impl MinorSearch {
    fn run(g: &Graph, h: &Graph, induced: bool, budget: &mut Budget) -> Result<Option<MinorModel>> {
        let (n, k) = (g.n(), h.n());
        if n > MINOR_ORACLE_MAX_N {
            return Err(Error::TooLarge { n, limit: MINOR_ORACLE_MAX_N });
        }
        if k == 0 {
            return Ok(Some(MinorModel { bags: Vec::new(), induced }));
        }
        if k > n || h.m() > g.m() {
            return Ok(None);
        }
        let mask = |gr: &Graph| -> Vec<u64> {
            gr.vertices()
                .map(|v| gr.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
                .collect()
        };
        let gadj = mask(g);
        let hadj = mask(h);
        let twin = |a: usize, b: usize| hadj[a] & !(1 << b) == hadj[b] & !(1 << a);
        let twin_prev = (0..k).map(|i| (0..i).rev().find(|&j| twin(i, j))).collect();
        let all_h = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        let non_nbr = (0..k)
            .map(|i| if induced { all_h & !hadj[i] & !(1 << i) } else { 0 })
            .collect();

        // BFS order, components by decreasing max degree.
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut starts: Vec<usize> = (0..n).collect();
        starts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        for s in starts {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                order.push(x);
                let mut nb: Vec<usize> = g.neighbors(x).iter().copied().filter(|&y| !seen[y]).collect();
                nb.sort_by_key(|&y| (std::cmp::Reverse(g.degree(y)), y));
                for y in nb {
                    seen[y] = true;
                    q.push_back(y);
                }
            }
        }

        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut st = MinorSearch {
            n,
            k,
            gadj,
            hadj,
            induced,
            order,
            bag: vec![0; k],
            unassigned: full,
            twin_prev,
            non_nbr,
        };
        if st.rec(0, budget)? {
            let bags = st
                .bag
                .iter()
                .map(|&b| bits(b).collect::<Vec<_>>())
                .collect();
            Ok(Some(MinorModel { bags, induced }))
        } else {
            Ok(None)
        }
    }

    #[inline]
    fn nbr(&self, set: u64) -> u64 {
        bits(set).fold(0, |m, v| m | self.gadj[v]) & !set
    }

    /// Closure of `seed` inside `within`.
    #[inline]
    fn reach(&self, seed: u64, within: u64) -> u64 {
        let mut r = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let grown = self.nbr(frontier) & within & !r;
            r |= grown;
            frontier = grown;
        }
        r
    }

    fn is_model(&self) -> bool {
        if self.bag.contains(&0) {
            return false;
        }
        for i in 0..self.k {
            let b = self.bag[i];
            if self.reach(b & b.wrapping_neg(), b) != b {
                return false;
            }
        }
        for i in 0..self.k {
            let nb = self.nbr(self.bag[i]);
            for j in bits(self.hadj[i]) {
                if j > i && nb & self.bag[j] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn viable(&self) -> bool {
        let u = self.unassigned;
        let empty = self.bag.iter().filter(|&&b| b == 0).count();
        if empty > u.count_ones() as usize {
            return false;
        }
        let mut reach = vec![0u64; self.k];
        for i in 0..self.k {
            let b = self.bag[i];
            if b == 0 {
                continue;
            }
            let mut allowed = u;
            for j in bits(self.non_nbr[i]) {
                allowed &= !self.nbr(self.bag[j]);
            }
            let r = self.reach(b & b.wrapping_neg(), b | allowed);
            if b & !r != 0 {
                return false;
            }
            reach[i] = r;
        }
        for i in 0..self.k {
            for j in bits(self.hadj[i]) {
                if j <= i {
                    continue;
                }
                let (bi, bj) = (self.bag[i], self.bag[j]);
                match (bi != 0, bj != 0) {
                    (true, true) => {
                        if (self.nbr(reach[i]) | reach[i]) & reach[j] == 0 {
                            return false;
                        }
                    }
                    (true, false) => {
                        if (self.nbr(reach[i]) | reach[i]) & u == 0 {
                            return false;
                        }
                    }
                    (false, true) => {
                        if (self.nbr(reach[j]) | reach[j]) & u == 0 {
                            return false;
                        }
                    }
                    (false, false) => {}
                }
            }
        }
        true
    }

    fn rec(&mut self, pos: usize, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        if self.is_model() {
            return Ok(true);
        }
        if pos == self.n {
            return Ok(false);
        }
        let v = self.order[pos];
        let vb = 1u64 << v;
        self.unassigned &= !vb;
        for i in 0..self.k {
            if self.bag[i] == 0 && self.twin_prev[i].is_some_and(|p| self.bag[p] == 0) {
                continue;
            }
            if self.induced && bits(self.non_nbr[i]).any(|j| self.gadj[v] & self.bag[j] != 0) {
                continue;
            }
            self.bag[i] |= vb;
            if self.viable() && self.rec(pos + 1, budget)? {
                return Ok(true);
            }
            self.bag[i] &= !vb;
        }
        if self.viable() && self.rec(pos + 1, budget)? {
            return Ok(true);
        }
        self.unassigned |= vb;
        Ok(false)
    }
}

// ---------------------------------------------------------------------------
// Induced subgraphs

/// Embedding `h -> g` as an induced subgraph, if one exists.
pub fn find_induced_subgraph(g: &Graph, h: &Graph) -> Result<Option<Vec<Vertex>>> {
    let k = h.n();
    if k > g.n() {
        return Ok(None);
    }
    let mut order: Vec<Vertex> = Vec::with_capacity(k);
    let mut seen = vec![false; k];
    let mut starts: Vec<Vertex> = h.vertices().collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            order.push(x);
            for &y in h.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    q.push_back(y);
                }
            }
        }
    }
    fn rec(
        g: &Graph,
        h: &Graph,
        order: &[Vertex],
        depth: usize,
        image: &mut Vec<Vertex>,
        used: &mut Vec<bool>,
        budget: &mut Budget,
    ) -> Result<bool> {
        budget.tick()?;
        if depth == order.len() {
            return Ok(true);
        }
        let x = order[depth];
        for u in g.vertices() {
            if used[u] || g.degree(u) < h.degree(x) {
                continue;
            }
            if order[..depth].iter().any(|&y| h.has_edge(x, y) != g.has_edge(u, image[y])) {
                continue;
            }
            image[x] = u;
            used[u] = true;
            if rec(g, h, order, depth + 1, image, used, budget)? {
                return Ok(true);
            }
            used[u] = false;
        }
        Ok(false)
    }
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; g.n()];
    let mut budget = Budget::from_env(ORACLE_BUDGET);
    if rec(g, h, &order, 0, &mut image, &mut used, &mut budget)? {
        Ok(Some(image))
    } else {
        Ok(None)
    }
}

/// Whether some vertex subset of `g` induces a copy of `h`.
pub fn has_induced_subgraph(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_induced_subgraph(g, h)?.is_some())
}

/// Four vertices `a-b-c-d` inducing a path, scanning all 4-subsets.
pub fn find_induced_p4_bruteforce(g: &Graph) -> Option<[Vertex; 4]> {
    let n = g.n();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    let s = [a, b, c, d];
                    let mut deg = [0usize; 4];
                    let mut edges = 0;
                    for i in 0..4 {
                        for j in (i + 1)..4 {
                            if g.has_edge(s[i], s[j]) {
                                deg[i] += 1;
                                deg[j] += 1;
                                edges += 1;
                            }
                        }
                    }
                    let mut sorted = deg;
                    sorted.sort_unstable();
                    if edges == 3 && sorted == [1, 1, 2, 2] {
                        // Order along the path: start at a degree-1 end.
                        let start = (0..4).find(|&i| deg[i] == 1).expect("end");
                        let mut path = vec![start];
                        while path.len() < 4 {
                            let last = *path.last().expect("nonempty");
                            let next = (0..4)
                                .find(|&j| !path.contains(&j) && g.has_edge(s[last], s[j]))
                                .expect("path continues");
                            path.push(next);
                        }
                        return Some([s[path[0]], s[path[1]], s[path[2]], s[path[3]]]);
                    }
                }
            }
        }
    }
    None
}

/// P4-freeness: exhaustive 4-subset scan up to 64 vertices, cotree
/// construction above that.
pub fn is_p4_free(g: &Graph) -> bool {
    if g.n() <= 64 {
        find_induced_p4_bruteforce(g).is_none()
    } else {
        crate::iso::cotree::CoTree::build(g).is_ok()
    }
}
