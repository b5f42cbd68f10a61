//! Small named graphs used as patterns and fixtures.

use super::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).expect("static edge list")
}

/// P4 `0-1-2-3` plus vertex 4 adjacent to all of it.
pub fn gem() -> Graph {
    build(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
}

/// K5 minus the edges `0-1` and `0-2`; vertex 0 has degree two.
pub fn co_p3_2k1() -> Graph {
    build(5, &[(0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
}

/// Triangle `0,1,2` plus isolated vertex 3.
pub fn k3_k1() -> Graph {
    build(4, &[(0, 1), (1, 2), (0, 2)])
}

/// Edge `0-1` plus isolated vertex 2.
pub fn k2_k1() -> Graph {
    build(3, &[(0, 1)])
}

/// Triangle with a pendant vertex 3 at vertex 0.
pub fn paw() -> Graph {
    build(4, &[(0, 1), (1, 2), (0, 2), (0, 3)])
}

/// K4 minus edge `2-3`.
pub fn diamond() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Diamond with pendant vertex 4 at degree-2 vertex 2. Triangle `0,1,3`
/// plus vertex 4 is an induced `K3 ∪ K1`.
pub fn kite() -> Graph {
    build(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)])
}

/// K4 on `0..4` plus vertices 4 (adjacent to 0, 1) and 5 (adjacent to 2, 3).
pub fn co_h() -> Graph {
    build(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1), (5, 2), (5, 3)])
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    build(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
}

/// Triangular prism: triangles `0,1,2` and `3,4,5` joined by a matching.
pub fn prism() -> Graph {
    build(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
}

pub fn k33() -> Graph {
    Graph::complete_multipartite(&[3, 3])
}

pub fn petersen() -> Graph {
    build(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )
}

/// Wheel: cycle `0..k` plus hub `k` adjacent to all rim vertices.
pub fn wheel(k: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((0..k).map(|i| (i, k)));
    build(k + 1, &edges)
}

/// Looks up a graph by its common name.
pub fn by_name(name: &str) -> Option<Graph> {
    let lower = name.to_ascii_lowercase();
    let g = match lower.as_str() {
        "gem" => gem(),
        "co-p3-2k1" | "co_p3_2k1" | "cop32k1" => co_p3_2k1(),
        "k3uk1" | "k3-k1" | "k3_k1" => k3_k1(),
        "k2uk1" | "k2-k1" | "k2_k1" => k2_k1(),
        "paw" => paw(),
        "diamond" => diamond(),
        "kite" => kite(),
        "co-h" | "coh" => co_h(),
        "bowtie" => bowtie(),
        "prism" => prism(),
        "k33" | "k3,3" => k33(),
        "petersen" => petersen(),
        _ => {
            let (kind, rest) = lower.split_at(1);
            let k: usize = rest.parse().ok()?;
            match kind {
                "k" => Graph::complete(k),
                "p" => Graph::path(k),
                "c" if k >= 3 => Graph::cycle(k),
                "w" if k >= 3 => wheel(k),
                _ => return None,
            }
        }
    };
    Some(g)
}
