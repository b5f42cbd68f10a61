//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. Every expected answer comes from a
//! brute-force oracle or an independent comparison written here.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;

use indminor::catalog::{canonical_form, catalog, catalog_filtered};
use indminor::cwx::{self, CwExpression, W_GEM};
use indminor::dichotomy::{self, CwStatus, GiStatus};
use indminor::gen::{self, Rng64};
use indminor::graph::named;
use indminor::iso::{cop32k1_free_iso, gem_free_iso};
use indminor::oracles::{self, has_induced_subgraph, iso_bruteforce};
use indminor::reductions::{self, Reduction};
use indminor::structure::{self, check_suture_witness, find_suture_structure};
use indminor::{ColoredGraph, Graph, Vertex};

/// Tolerances. Every criterion demands an exact match, so the allowed
/// mismatch counts are zero; the sample sizes are floors.
const MAX_MISMATCHES: usize = 0;
const REDUCTION_PAIRS: usize = 200;
const GEM_RANDOM_PAIRS: usize = 500;
const MULTIPARTITE_PAIRS: usize = 60;
const COP_MEMBER_PAIRS: usize = 120;
const K5_SAMPLES: usize = 100;
const COGRAPH_SAMPLES: usize = 200;
const APEX_SAMPLES: usize = 150;
const BLOCK_SAMPLES: usize = 100;
const GEM_CW_SAMPLES: usize = 100;
const SUTURE_GENERATED: usize = 200;

/// Zero today; kept as a single switch so the tolerance is stated once.
#[allow(clippy::absurd_extreme_comparisons)]
fn within_tolerance(mismatches: usize) -> bool {
    mismatches <= MAX_MISMATCHES
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn colored(g: &Graph) -> ColoredGraph {
    g.into()
}

fn oracle_iso(a: &Graph, b: &Graph) -> bool {
    iso_bruteforce(&colored(a), &colored(b)).expect("oracle within budget").is_some()
}

fn permuted(g: &Graph, rng: &mut Rng64) -> Graph {
    g.permute(&gen::random_permutation(g.n(), rng))
}

/// Degree-preserving switch `ab, cd -> ad, cb`, if some pair of edges allows it.
fn edge_switch(g: &Graph, rng: &mut Rng64) -> Option<Graph> {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    for _ in 0..200 {
        let (a, b) = edges[rng.gen_range(0..edges.len())];
        let (c, d) = edges[rng.gen_range(0..edges.len())];
        let (c, d) = if rng.gen_bool(0.5) { (c, d) } else { (d, c) };
        let distinct = [a, b, c, d].iter().collect::<BTreeSet<_>>().len() == 4;
        if distinct && !g.has_edge(a, d) && !g.has_edge(c, b) {
            let mut next: Vec<(Vertex, Vertex)> =
                edges.iter().copied().filter(|&e| e != (a, b) && e != (c.min(d), c.max(d))).collect();
            next.extend([(a, d), (c, b)]);
            return Some(Graph::from_edges(g.n(), next).expect("valid edges"));
        }
    }
    None
}

fn gem_free_catalog() -> &'static Vec<Graph> {
    static CELL: OnceLock<Vec<Graph>> = OnceLock::new();
    CELL.get_or_init(|| {
        let gem = named::gem();
        catalog_filtered(8, &|g| oracles::is_induced_minor_free(g, &gem).expect("oracle within budget"))
            .expect("catalog")
    })
}

fn is_clique(g: &Graph, s: &[Vertex]) -> bool {
    s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

fn is_independent(g: &Graph, s: &[Vertex]) -> bool {
    s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

fn subsets(n: usize) -> impl Iterator<Item = (Vec<Vertex>, Vec<Vertex>)> {
    (0u32..1 << n).map(move |mask| (0..n).partition(|&v| mask >> v & 1 == 1))
}

fn brute_split(g: &Graph) -> bool {
    subsets(g.n()).any(|(c, i)| is_clique(g, &c) && is_independent(g, &i))
}

fn brute_cobipartite(g: &Graph) -> bool {
    subsets(g.n()).any(|(a, b)| is_clique(g, &a) && is_clique(g, &b))
}

/// Proper 2-colouring of the complement by breadth-first search.
fn complement_bipartite(g: &Graph) -> bool {
    let c = g.complement();
    let mut side = vec![None; c.n()];
    for s in c.vertices() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = vec![s];
        while let Some(u) = queue.pop() {
            for &w in c.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!side[u].unwrap());
                        queue.push(w);
                    }
                    Some(x) if x == side[u].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------

fn forest_characterization() -> Outcome {
    let all = catalog(7).expect("catalog");
    let k3k1 = named::k3_k1();
    let on_seven = all.iter().filter(|g| g.n() == 7).count();
    let results: Vec<(bool, bool)> = all
        .par_iter()
        .map(|g| {
            let fast = structure::k3uk1_induced_minor_free(g);
            let model = oracles::induced_minor_bruteforce(g, &k3k1).expect("oracle within budget");
            let model_ok = model.as_ref().is_none_or(|m| oracles::validate_model(g, &k3k1, m).is_ok());
            (fast == model.is_none(), model_ok)
        })
        .collect();
    let mismatches = results.iter().filter(|r| !r.0).count();
    let bad_models = results.iter().filter(|r| !r.1).count();
    let free = all.iter().filter(|g| structure::k3uk1_induced_minor_free(g)).count();
    outcome(
        within_tolerance(mismatches) && bad_models == 0 && all.len() == 1253 && on_seven == 1044,
        format!(
            "{} graphs on <=7 vertices ({on_seven} on exactly 7), {free} free, {mismatches} mismatches, {bad_models} invalid oracle models",
            all.len()
        ),
    )
}

fn classifier_dichotomy() -> Outcome {
    let all: Vec<Graph> = catalog(5).expect("catalog").into_iter().filter(|g| g.n() > 0).collect();
    let gem = named::gem();
    let cop = named::co_p3_2k1();
    let mut exceptions = Vec::new();
    for g in &all {
        let v = dichotomy::classify(g).expect("classify");
        let in_gem = has_induced_subgraph(&gem, g).unwrap();
        let in_cop = has_induced_subgraph(&cop, g).unwrap();
        let gi_poly = g.is_complete() || in_gem || in_cop;
        let cw_bounded = in_gem || in_cop;
        let replay = dichotomy::check_verdict(g, &v);
        let predicates_agree = dichotomy::is_cobipartite(g) == brute_cobipartite(g)
            && !dichotomy::split_partitions(g).is_empty() == brute_split(g);
        if (v.gi == GiStatus::PolynomialTime) != gi_poly
            || (v.cw == CwStatus::Bounded) != cw_bounded
            || replay.is_err()
            || !predicates_agree
        {
            exceptions.push(g.edges().collect::<Vec<_>>());
        }
    }
    let canon = |g: &Graph| canonical_form(g).unwrap();
    let four: Vec<&Graph> = all.iter().filter(|g| g.n() == 4).collect();
    let poly: BTreeSet<_> = four
        .iter()
        .filter(|g| dichotomy::classify(g).unwrap().gi == GiStatus::PolynomialTime)
        .map(|g| canon(g))
        .collect();
    let expected_poly: BTreeSet<_> =
        [Graph::complete(4), named::diamond(), named::paw(), Graph::path(4)].iter().map(canon).collect();
    let cobip_split: BTreeSet<_> =
        four.iter().filter(|g| brute_cobipartite(g) && brute_split(g)).map(|g| canon(g)).collect();
    let expected_cs: BTreeSet<_> =
        [named::k3_k1(), Graph::path(4), Graph::complete(4), named::diamond(), named::paw()].iter().map(canon).collect();
    outcome(
        within_tolerance(exceptions.len()) && four.len() == 11 && poly == expected_poly && cobip_split == expected_cs,
        format!(
            "{} types on 1..=5 vertices, {} exceptions; on 4 vertices {} polynomial (want K4, diamond, paw, P4), {} co-bipartite and split",
            all.len(),
            exceptions.len(),
            poly.len(),
            cobip_split.len()
        ),
    )
}

fn reduction_soundness() -> Outcome {
    let mut rng = gen::rng(3);
    let pairs: Vec<(Graph, Graph)> = (0..REDUCTION_PAIRS)
        .map(|i| {
            let n = 4 + i % 4;
            let g = gen::random_min_degree(n, 3, &mut rng);
            let h = match i % 3 {
                0 => permuted(&g, &mut rng),
                1 => edge_switch(&g, &mut rng).unwrap_or_else(|| permuted(&g, &mut rng)),
                _ => gen::random_min_degree(n, 3, &mut rng),
            };
            let h = permuted(&h, &mut rng);
            (g, h)
        })
        .collect();
    type Reduce = fn(&Graph) -> indminor::Result<Reduction>;
    let targets: [(&str, Reduce); 3] = [
        ("k3uk1-free", reductions::reduce_to_k3uk1_free),
        ("split", reductions::reduce_to_restricted_split),
        ("cobipartite", reductions::reduce_to_cobipartite),
    ];
    let rows: Vec<(bool, [bool; 3], [bool; 3])> = pairs
        .par_iter()
        .map(|(g, h)| {
            let input_iso = oracle_iso(g, h);
            let mut iso_ok = [false; 3];
            let mut cert_ok = [false; 3];
            for (t, (name, reduce)) in targets.iter().enumerate() {
                let rg = reduce(g).expect("reduction");
                let rh = reduce(h).expect("reduction");
                iso_ok[t] = oracle_iso(&rg.graph, &rh.graph) == input_iso;
                cert_ok[t] = [&rg, &rh].iter().all(|r| match *name {
                    "k3uk1-free" => structure::k3uk1_induced_minor_free(&r.graph),
                    "split" => {
                        reductions::check_restricted_split(&r.graph, &reductions::restricted_split_certificate(r))
                    }
                    _ => {
                        reductions::check_two_cliques(&r.graph, &r.originals(), &r.subdivisions())
                            && complement_bipartite(&r.graph)
                    }
                });
            }
            (input_iso, iso_ok, cert_ok)
        })
        .collect();
    let isomorphic = rows.iter().filter(|r| r.0).count();
    let iso_fail: Vec<usize> = (0..3).map(|t| rows.iter().filter(|r| !r.1[t]).count()).collect();
    let cert_fail: Vec<usize> = (0..3).map(|t| rows.iter().filter(|r| !r.2[t]).count()).collect();
    outcome(
        rows.len() >= REDUCTION_PAIRS && iso_fail.iter().chain(&cert_fail).all(|&c| within_tolerance(c)),
        format!(
            "{} pairs ({isomorphic} isomorphic); iso mismatches k3uk1/split/cobip {:?}; certificate failures {:?}",
            rows.len(),
            iso_fail,
            cert_fail
        ),
    )
}

fn gem_agreement() -> Outcome {
    let cat: Vec<&Graph> = gem_free_catalog().iter().filter(|g| g.n() > 0).collect();
    // Exhaustive part: every type against a permuted copy, and every pair of
    // distinct types sharing a degree sequence.
    let mut rng = gen::rng(4);
    let copies: Vec<(Graph, Graph)> = cat.iter().map(|g| ((*g).clone(), permuted(g, &mut rng))).collect();
    let mut by_degrees: BTreeMap<(usize, Vec<usize>), Vec<&Graph>> = BTreeMap::new();
    for g in &cat {
        by_degrees.entry((g.n(), g.degree_sequence())).or_default().push(g);
    }
    let mut hard: Vec<(Graph, Graph)> = Vec::new();
    for group in by_degrees.values() {
        for (i, a) in group.iter().enumerate() {
            for b in &group[i + 1..] {
                hard.push(((*a).clone(), permuted(b, &mut rng)));
            }
        }
    }
    // Randomised part on up to 12 vertices.
    let gem = named::gem();
    let mut random_pairs: Vec<(Graph, Graph, bool)> = Vec::new();
    for i in 0..GEM_RANDOM_PAIRS {
        let n = 5 + i % 8;
        let g = if i % 2 == 0 { gen::gemfree_suture(n, &mut rng) } else { gen::gemfree_block(n, &mut rng) }
            .expect("generator");
        let (h, copy) = match i % 3 {
            0 => (permuted(&g, &mut rng), true),
            1 => (gen::gemfree_suture(n, &mut rng).expect("generator"), false),
            _ => {
                let mutated = edge_switch(&g, &mut rng)
                    .filter(|h| oracles::is_induced_minor_free(h, &gem).expect("oracle within budget"));
                match mutated {
                    Some(h) => (h, false),
                    None => (permuted(&g, &mut rng), true),
                }
            }
        };
        random_pairs.push((g, permuted(&h, &mut rng), copy));
    }
    let check = |a: &Graph, b: &Graph| {
        let out = gem_free_iso(&colored(a), &colored(b)).expect("gem decider");
        (out.isomorphic == oracle_iso(a, b), out.fallback)
    };
    let copy_rows: Vec<(bool, bool)> = copies.par_iter().map(|(a, b)| check(a, b)).collect();
    let hard_rows: Vec<(bool, bool)> = hard.par_iter().map(|(a, b)| check(a, b)).collect();
    let random_rows: Vec<(bool, bool, bool)> = random_pairs
        .par_iter()
        .map(|(a, b, copy)| {
            let (agree, fallback) = check(a, b);
            (agree, fallback, *copy)
        })
        .collect();
    let disagree = copy_rows.iter().chain(&hard_rows).filter(|r| !r.0).count()
        + random_rows.iter().filter(|r| !r.0).count();
    let copy_fallbacks =
        copy_rows.iter().filter(|r| r.1).count() + random_rows.iter().filter(|r| r.2 && r.1).count();
    let random_copies = random_rows.iter().filter(|r| r.2).count();
    outcome(
        within_tolerance(disagree) && copy_fallbacks == 0 && random_rows.len() >= GEM_RANDOM_PAIRS,
        format!(
            "{} certified types (n<=8): {} permuted-copy pairs + {} same-degree-sequence pairs; {} random pairs n<=12 ({random_copies} copies); {disagree} disagreements, {copy_fallbacks} fallbacks on copies",
            cat.len(),
            copies.len(),
            hard.len(),
            random_rows.len()
        ),
    )
}

fn cop32k1_algorithm() -> Outcome {
    let mut rng = gen::rng(5);
    let mut instances: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for i in 0..MULTIPARTITE_PAIRS {
        let base_parts = rng.gen_range(5..=11);
        let base: Vec<usize> = (0..base_parts).map(|_| rng.gen_range(1..=2)).collect();
        // {1,4,4} and {2,2,5} share order and sum of squares, so the two
        // graphs agree on vertex and edge counts.
        let (a, b) = match i % 3 {
            0 => (vec![1, 4, 4], vec![4, 1, 4]),
            1 => (vec![1, 4, 4], vec![2, 2, 5]),
            _ => {
                let mut x: Vec<usize> = (0..3).map(|_| rng.gen_range(1..=3)).collect();
                let y = x.clone();
                x.reverse();
                (x, y)
            }
        };
        let mut p1: Vec<usize> = base.iter().copied().chain(a).collect();
        let mut p2: Vec<usize> = base.iter().copied().chain(b).collect();
        p1.reverse();
        p2.rotate_left(1);
        instances.push((p1, p2));
    }
    let multipartite: Vec<(bool, bool, bool, usize)> = instances
        .par_iter()
        .enumerate()
        .map(|(i, (p1, p2))| {
            let mut r = gen::rng(500 + i as u64);
            let g1 = permuted(&Graph::complete_multipartite(p1), &mut r);
            let g2 = permuted(&Graph::complete_multipartite(p2), &mut r);
            let mut s1 = p1.clone();
            let mut s2 = p2.clone();
            s1.sort_unstable();
            s2.sort_unstable();
            let degrees_match = g1.degree_sequence() == g2.degree_sequence();
            match cop32k1_free_iso(&colored(&g1), &colored(&g2)) {
                Ok(out) => (
                    out.isomorphic == (s1 == s2) && degrees_match == (s1 == s2),
                    out.clique_branch > 0,
                    true,
                    g1.n().max(g2.n()),
                ),
                Err(_) => (false, false, false, 0),
            }
        })
        .collect();
    let wrong = multipartite.iter().filter(|r| !r.0).count();
    let not_fired = multipartite.iter().filter(|r| !r.1).count();
    let assertion_errors = multipartite.iter().filter(|r| !r.2).count();
    let max_n = multipartite.iter().map(|r| r.3).max().unwrap_or(0);

    // Oracle-certified class members on up to 10 vertices.
    let cop = named::co_p3_2k1();
    let mut members: Vec<Graph> = Vec::new();
    while members.len() < COP_MEMBER_PAIRS {
        let n = rng.gen_range(6..=10);
        let p = rng.gen_range(0.3..0.85);
        let g = gen::random_gnp(n, p, &mut rng);
        if oracles::is_induced_minor_free(&g, &cop).expect("oracle within budget") {
            members.push(g);
        }
    }
    let member_pairs: Vec<(Graph, Graph)> = members
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let h = if i % 2 == 0 {
                permuted(g, &mut rng)
            } else {
                members
                    .iter()
                    .find(|h| *h != g && h.n() == g.n() && h.m() == g.m())
                    .cloned()
                    .unwrap_or_else(|| members[(i + 1) % members.len()].clone())
            };
            (g.clone(), h)
        })
        .collect();
    let member_wrong = member_pairs
        .par_iter()
        .filter(|(a, b)| {
            cop32k1_free_iso(&colored(a), &colored(b)).map_or(true, |o| o.isomorphic != oracle_iso(a, b))
        })
        .count();
    outcome(
        within_tolerance(wrong + member_wrong) && not_fired == 0 && assertion_errors == 0 && max_n <= 32,
        format!(
            "{} multipartite pairs (>=8 parts, n<={max_n}): {wrong} wrong, clique branch missed {not_fired}, assertion errors {assertion_errors}; {} member pairs n<=10: {member_wrong} disagreements",
            multipartite.len(),
            member_pairs.len()
        ),
    )
}

fn compact_minor() -> Outcome {
    let cop = named::co_p3_2k1();
    let k5 = Graph::complete(5);
    let mut rng = gen::rng(6);
    let mut samples = Vec::new();
    let mut tries = 0;
    while samples.len() < K5_SAMPLES {
        tries += 1;
        let n = rng.gen_range(6..=10);
        let p = rng.gen_range(0.4..0.8);
        let g = gen::random_gnp(n, p, &mut rng);
        if oracles::is_induced_minor_free(&g, &cop).expect("oracle within budget")
            && oracles::minor_bruteforce(&g, &k5).expect("oracle within budget").is_some()
        {
            samples.push(g);
        }
    }
    let failures = samples
        .par_iter()
        .filter(|g| match structure::find_compact_clique_minor(g, 5) {
            Ok(Some(m)) => !m.is_compact() || oracles::validate_model(g, &k5, &m).is_err(),
            _ => true,
        })
        .count();
    outcome(
        within_tolerance(failures),
        format!("{} certified graphs with a K5 minor ({tries} drawn): {failures} without a valid compact model", samples.len()),
    )
}

/// Vertices of a cycle graph in cyclic order.
fn cycle_order(g: &Graph, vertices: &[Vertex]) -> Vec<Vertex> {
    let mut order = vec![vertices[0]];
    let mut prev = usize::MAX;
    let mut cur = vertices[0];
    while order.len() < vertices.len() {
        let next = *g.neighbors(cur).iter().find(|&&w| w != prev && vertices.contains(&w)).unwrap();
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

fn random_two_connected_cograph(n: usize, rng: &mut Rng64) -> Graph {
    loop {
        let g = gen::random_cograph(n, rng);
        if g.is_2connected() {
            return g;
        }
    }
}

/// Blocks that are 2-connected cographs, cycles or bridges, glued at random
/// cut vertices.
fn glued_cograph_cycle_blocks(blocks: usize, rng: &mut Rng64) -> Graph {
    let mut edges = Vec::new();
    let mut used = 1;
    for _ in 0..blocks {
        let block = match rng.gen_range(0..3) {
            0 => Graph::complete(2),
            1 => Graph::cycle(rng.gen_range(3..=8)),
            _ => random_two_connected_cograph(rng.gen_range(3..=6), rng),
        };
        let anchor = rng.gen_range(0..used);
        let map = |v: Vertex| if v == 0 { anchor } else { used + v - 1 };
        edges.extend(block.edges().map(|(a, b)| (map(a), map(b))));
        used += block.n() - 1;
    }
    Graph::from_edges(used, edges).expect("valid edges")
}

fn clique_width_witnesses() -> Outcome {
    let mut rng = gen::rng(7);
    let mut notes = Vec::new();
    let mut pass = true;

    let cographs: Vec<Graph> =
        (0..COGRAPH_SAMPLES).map(|_| gen::random_cograph(rng.gen_range(1..=40), &mut rng)).collect();
    let cograph_bad = cographs
        .par_iter()
        .filter(|g| {
            oracles::find_induced_p4_bruteforce(g).is_some()
                || cwx::cograph_expression(g).map_or(true, |e| !cwx::verify(&e, g) || e.width() > 2)
        })
        .count();
    pass &= cograph_bad == 0;
    notes.push(format!("cographs {}/{} at width<=2", cographs.len() - cograph_bad, cographs.len()));

    // Apex: a cograph or a cycle on the remaining vertices plus up to six
    // apices with random neighbourhoods.
    let mut apex_bad = 0;
    let mut apex_max = (0, 0);
    for i in 0..APEX_SAMPLES {
        let t = i % 7;
        let rest = rng.gen_range(3..=10);
        let n = rest + t;
        let slots = gen::random_permutation(n, &mut rng);
        let (s, keep) = slots.split_at(t);
        let mut s = s.to_vec();
        s.sort_unstable();
        let base = if i % 3 == 0 { Graph::cycle(rest) } else { gen::random_cograph(rest, &mut rng) };
        let mut edges: Vec<(Vertex, Vertex)> = base.edges().map(|(a, b)| (keep[a], keep[b])).collect();
        for &a in &s {
            for v in 0..n {
                if v != a && (!s.contains(&v) || v > a) && rng.gen_bool(0.5) {
                    edges.push((a, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("valid edges");
        let e: CwExpression = if i % 3 == 0 {
            cwx::cycle_expression(keep).expect("cycle expression")
        } else {
            let mut kept = keep.to_vec();
            kept.sort_unstable();
            cwx::cograph_expression_on(&g, &kept).expect("cograph expression")
        };
        let bound = (1 << t) * (e.width() + 1) - 1;
        match cwx::compose_apex(&e, &g, &s) {
            Ok(out) if cwx::verify(&out, &g) && out.width() <= bound && (t > 0 || out == e) => {
                apex_max = apex_max.max((out.width(), bound));
            }
            _ => apex_bad += 1,
        }
    }
    pass &= apex_bad == 0;
    notes.push(format!("apex {}/{APEX_SAMPLES} within 2^|S|(k+1)-1", APEX_SAMPLES - apex_bad));

    let mut block_bad = 0;
    for _ in 0..BLOCK_SAMPLES {
        let g = glued_cograph_cycle_blocks(rng.gen_range(1..=8), &mut rng);
        let mut exprs = BTreeMap::new();
        for b in g.blocks().blocks {
            let (sub, _) = g.induced_subgraph(&b);
            let e = if oracles::is_p4_free(&sub) {
                cwx::cograph_expression_on(&g, &b).expect("cograph block")
            } else {
                cwx::cycle_expression(&cycle_order(&g, &b)).expect("cycle block")
            };
            exprs.insert(b, e);
        }
        let max = exprs.values().map(CwExpression::width).max().unwrap_or(0);
        match cwx::compose_blocks(&exprs, &g) {
            Ok(out) if cwx::verify(&out, &g) && out.width() <= max + 2 => {}
            _ => block_bad += 1,
        }
    }
    pass &= block_bad == 0;
    notes.push(format!("blocks {}/{BLOCK_SAMPLES} within max+2", BLOCK_SAMPLES - block_bad));

    let gem = named::gem();
    let gem_graphs: Vec<Graph> = (0..GEM_CW_SAMPLES)
        .map(|i| gen::gemfree_suture(5 + i % 10, &mut rng).expect("generator"))
        .collect();
    let gem_rows: Vec<(bool, usize)> = gem_graphs
        .par_iter()
        .map(|g| {
            let certified = oracles::is_induced_minor_free(g, &gem).expect("oracle within budget");
            match cwx::gem_free_expression(g) {
                Ok(e) => (certified && cwx::verify(&e, g) && e.width() <= W_GEM, e.width()),
                Err(_) => (false, 0),
            }
        })
        .collect();
    let gem_bad = gem_rows.iter().filter(|r| !r.0).count();
    let gem_max = gem_rows.iter().map(|r| r.1).max().unwrap_or(0);
    pass &= gem_bad == 0;
    notes.push(format!(
        "gem-free n<=14 {}/{GEM_CW_SAMPLES} within W_gem={W_GEM} (max width {gem_max})",
        GEM_CW_SAMPLES - gem_bad
    ));
    outcome(pass, notes.join("; "))
}

fn suture_structure() -> Outcome {
    let from_catalog: Vec<Graph> =
        gem_free_catalog().iter().filter(|g| g.n() >= 3 && g.is_2connected()).cloned().collect();
    let mut rng = gen::rng(8);
    let generated: Vec<Graph> = (0..SUTURE_GENERATED)
        .map(|i| gen::gemfree_block(5 + i % 8, &mut rng).expect("generator"))
        .collect();
    let gem = named::gem();
    let rows: Vec<bool> = from_catalog
        .par_iter()
        .chain(generated.par_iter())
        .map(|g| {
            oracles::is_induced_minor_free(g, &gem).expect("oracle within budget")
                && match find_suture_structure(g) {
                    Ok(Some(w)) => check_suture_witness(g, &w).is_ok(),
                    _ => false,
                }
        })
        .collect();
    let failures = rows.iter().filter(|ok| !**ok).count();
    outcome(
        within_tolerance(failures),
        format!(
            "{} catalog blocks (n<=8) + {} generated blocks (n<=12): {failures} failures",
            from_catalog.len(),
            generated.len()
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("forest characterization", forest_characterization),
        ("classifier dichotomy", classifier_dichotomy),
        ("reduction soundness", reduction_soundness),
        ("gem isomorphism agreement", gem_agreement),
        ("co-(P3+2K1) isomorphism", cop32k1_algorithm),
        ("compact K5 minors", compact_minor),
        ("clique-width witnesses", clique_width_witnesses),
        ("suture structure", suture_structure),
    ];
    let start = Instant::now();
    let results: Vec<(Outcome, f64)> = criteria
        .par_iter()
        .map(|(_, run)| {
            let t = Instant::now();
            let o = run();
            (o, t.elapsed().as_secs_f64())
        })
        .collect();
    let mut failed = 0;
    for (i, ((name, _), (o, secs))) in criteria.iter().zip(&results).enumerate() {
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("acceptance {} {name}: {verdict} ({}) [{secs:.1}s]", i + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!(
        "acceptance: {}/{} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
