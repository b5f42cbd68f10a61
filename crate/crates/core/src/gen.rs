//! Seeded random instance generators.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{named, Graph, Vertex};
use crate::oracles;
use crate::reductions::reduce_to_k3uk1_free;

pub const DEFAULT_SEED: u64 = 20_240_601;
/// Largest order accepted by [`generate`].
pub const MAX_GEN_N: usize = 512;
/// Gem-free sutures up to this order are certified by the brute-force oracle.
pub const SUTURE_CERTIFY_N: usize = 14;
const SUTURE_ATTEMPTS: usize = 200;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `G(n, p)`.
    Random { p: f64 },
    Cograph,
    /// Blocks that are cycles, cographs or a cycle sewn to a small cograph,
    /// glued along cut vertices.
    GemfreeSuture,
    /// A random graph of minimum degree 3 on `n` vertices, pushed through
    /// the reduction to `(K3 ∪ K1)`-induced-minor-free graphs.
    K3uk1FreeViaReduction,
    /// Complete multipartite with the given part sizes; `n` is ignored.
    Multipartite { parts: Vec<usize> },
}

impl Family {
    /// Parses `random[:p]`, `cograph`, `gemfree-suture`,
    /// `k3uk1-free-via-reduction`, `multipartite:AxB` or `multipartite:a,b,...`.
    pub fn parse(s: &str) -> Result<Family> {
        let (name, arg) = s.split_once(':').map_or((s, None), |(a, b)| (a, Some(b)));
        let bad = || Error::Parse(format!("unknown family '{s}'"));
        match (name, arg) {
            ("random", None) => Ok(Family::Random { p: 0.5 }),
            ("random", Some(p)) => {
                let p: f64 = p.parse().map_err(|_| bad())?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(bad());
                }
                Ok(Family::Random { p })
            }
            ("cograph", None) => Ok(Family::Cograph),
            ("gemfree-suture", None) => Ok(Family::GemfreeSuture),
            ("k3uk1-free-via-reduction", None) => Ok(Family::K3uk1FreeViaReduction),
            ("multipartite", Some(sizes)) => Ok(Family::Multipartite { parts: parse_parts(sizes)? }),
            _ => Err(bad()),
        }
    }
}

/// `AxB` is `B` parts of size `A`; otherwise a comma-separated list.
pub fn parse_parts(sizes: &str) -> Result<Vec<usize>> {
    let bad = || Error::Parse(format!("bad part sizes '{sizes}'"));
    let parts: Vec<usize> = if let Some((size, count)) = sizes.split_once('x') {
        let size: usize = size.parse().map_err(|_| bad())?;
        let count: usize = count.parse().map_err(|_| bad())?;
        vec![size; count]
    } else {
        sizes.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
    };
    if parts.is_empty() || parts.contains(&0) {
        return Err(bad());
    }
    Ok(parts)
}

pub fn generate(family: &Family, n: usize, rng: &mut Rng64) -> Result<Graph> {
    let order = match family {
        Family::Multipartite { parts } => parts.iter().sum(),
        _ => n,
    };
    if order > MAX_GEN_N {
        return Err(Error::TooLarge { n: order, limit: MAX_GEN_N });
    }
    if order == 0 {
        return Err(Error::Precondition("order must be positive".into()));
    }
    match family {
        Family::Random { p } => Ok(random_gnp(n, *p, rng)),
        Family::Cograph => Ok(random_cograph(n, rng)),
        Family::GemfreeSuture => gemfree_suture(n, rng),
        Family::K3uk1FreeViaReduction => {
            if n < 4 {
                return Err(Error::Precondition("minimum degree 3 needs at least 4 vertices".into()));
            }
            let g = random_min_degree(n, 3, rng);
            Ok(reduce_to_k3uk1_free(&g)?.graph)
        }
        Family::Multipartite { parts } => {
            let g = Graph::complete_multipartite(parts);
            Ok(g.permute(&random_permutation(g.n(), rng)))
        }
    }
}

pub fn random_permutation(n: usize, rng: &mut Rng64) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn random_gnp(n: usize, p: f64, rng: &mut Rng64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid edges")
}

/// Adds random edges to a random graph until every degree is at least `d`.
pub fn random_min_degree(n: usize, d: usize, rng: &mut Rng64) -> Graph {
    assert!(n > d, "minimum degree {d} needs more than {d} vertices");
    let mut adj = vec![vec![false; n]; n];
    let mut deg = vec![0; n];
    for u in 0..n {
        while deg[u] < d {
            let v = rng.gen_range(0..n);
            if v != u && !adj[u][v] {
                adj[u][v] = true;
                adj[v][u] = true;
                deg[u] += 1;
                deg[v] += 1;
            }
        }
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u][v]);
    Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("valid edges")
}

/// Random cograph: split the vertices in two and take union or join, recursively.
pub fn random_cograph(n: usize, rng: &mut Rng64) -> Graph {
    fn build(vs: &[Vertex], edges: &mut Vec<(Vertex, Vertex)>, rng: &mut Rng64) {
        if vs.len() < 2 {
            return;
        }
        let cut = rng.gen_range(1..vs.len());
        let (a, b) = vs.split_at(cut);
        build(a, edges, rng);
        build(b, edges, rng);
        if rng.gen_bool(0.5) {
            for &x in a {
                for &y in b {
                    edges.push((x, y));
                }
            }
        }
    }
    let mut vs: Vec<Vertex> = (0..n).collect();
    vs.shuffle(rng);
    let mut edges = Vec::new();
    build(&vs, &mut edges, rng);
    Graph::from_edges(n, edges).expect("valid edges")
}

fn connected_cograph_2connected(n: usize, rng: &mut Rng64) -> Graph {
    loop {
        let g = random_cograph(n, rng);
        if g.is_2connected() {
            return g;
        }
    }
}

fn connected_cograph(n: usize, rng: &mut Rng64) -> Graph {
    loop {
        let g = random_cograph(n, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// A cycle with small connected cographs attached at a few cycle
/// vertices, each directly or through one subdivision vertex.
fn suture_block(n: usize, rng: &mut Rng64) -> Graph {
    loop {
        let cycle_len = rng.gen_range(4..n);
        let mut edges: Vec<(Vertex, Vertex)> = (0..cycle_len).map(|i| (i, (i + 1) % cycle_len)).collect();
        let mut free: Vec<Vertex> = (0..cycle_len).collect();
        free.shuffle(rng);
        let mut next = cycle_len;
        while next < n && !free.is_empty() {
            let k_size = rng.gen_range(1..=(n - next).min(4));
            let k = connected_cograph(k_size, rng);
            let base = next;
            edges.extend(k.edges().map(|(a, b)| (base + a, base + b)));
            next += k_size;
            for _ in 0..rng.gen_range(1..=3usize).min(free.len()) {
                let c = free.pop().expect("nonempty");
                let target = base + rng.gen_range(0..k_size);
                if next < n && rng.gen_bool(0.5) {
                    edges.extend([(c, next), (next, target)]);
                    next += 1;
                } else {
                    edges.push((c, target));
                }
            }
        }
        if next == n {
            return Graph::from_edges(n, edges).expect("valid edges");
        }
    }
}

fn random_block(n: usize, rng: &mut Rng64) -> Graph {
    match (n, rng.gen_range(0..3)) {
        (1, _) => Graph::empty(1),
        (2, _) => Graph::complete(2),
        (_, 0) => Graph::cycle(n),
        (_, 1) => connected_cograph(n, rng),
        (n, _) if n >= 5 => suture_block(n, rng),
        _ => Graph::cycle(n),
    }
}

/// Glues random blocks along cut vertices until `n` vertices are used.
fn glued_blocks(n: usize, rng: &mut Rng64) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut used = 1;
    while used < n {
        let size = rng.gen_range(2..=(n - used + 1).min(9));
        let block = random_block(size, rng);
        let anchor = rng.gen_range(0..used);
        // Block vertex 0 becomes the anchor; the rest are fresh.
        let map = |v: Vertex| if v == 0 { anchor } else { used + v - 1 };
        edges.extend(block.edges().map(|(a, b)| (map(a), map(b))));
        used += size - 1;
    }
    Graph::from_edges(n, edges).expect("valid edges")
}

/// Random gem-induced-minor-free graph. Up to [`SUTURE_CERTIFY_N`] vertices
/// candidates are checked against the oracle and rejected until one passes.
pub fn gemfree_suture(n: usize, rng: &mut Rng64) -> Result<Graph> {
    if n > SUTURE_CERTIFY_N {
        return Ok(glued_blocks(n, rng));
    }
    let gem = named::gem();
    for _ in 0..SUTURE_ATTEMPTS {
        let g = glued_blocks(n, rng);
        if oracles::is_induced_minor_free(&g, &gem)? {
            return Ok(g);
        }
    }
    Err(Error::StructureNotFound)
}

/// Random 2-connected gem-induced-minor-free graph on `n >= 3` vertices,
/// oracle-certified up to [`SUTURE_CERTIFY_N`] vertices.
pub fn gemfree_block(n: usize, rng: &mut Rng64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition("2-connected graphs need three vertices".into()));
    }
    let gem = named::gem();
    for _ in 0..SUTURE_ATTEMPTS {
        // Cycles and cographs keep their class under induced minors, and the
        // gem is neither, so only sutures need the oracle.
        let g = match (n, rng.gen_range(0..8)) {
            (_, 0) | (3 | 4, _) => return Ok(Graph::cycle(n)),
            (_, 1) => connected_cograph_2connected(n, rng),
            _ => suture_block(n, rng),
        };
        if g.is_2connected() && (n > SUTURE_CERTIFY_N || oracles::is_induced_minor_free(&g, &gem)?) {
            return Ok(g);
        }
    }
    Err(Error::StructureNotFound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        for family in [Family::Random { p: 0.4 }, Family::Cograph, Family::GemfreeSuture] {
            let a = generate(&family, 9, &mut rng(7)).unwrap();
            let b = generate(&family, 9, &mut rng(7)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn families() {
        let mut r = rng(1);
        assert!(oracles::is_p4_free(&generate(&Family::Cograph, 6, &mut r).unwrap()));
        let m = generate(&Family::parse("multipartite:2x8").unwrap(), 0, &mut r).unwrap();
        assert_eq!((m.n(), m.m()), (16, 112));
        assert!(random_min_degree(6, 3, &mut r).min_degree() >= 3);
        assert!(generate(&Family::Cograph, MAX_GEN_N + 1, &mut r).is_err());
        assert!(Family::parse("random:2").is_err());
        assert_eq!(parse_parts("1,2,3").unwrap(), vec![1, 2, 3]);
    }
}
