//! Clique-width expressions: evaluation, verification and constructions.
//!
//! An expression builds a vertex-labeled graph with four operations:
//! create a labeled vertex, disjoint union, join all `i`-labeled to all
//! `j`-labeled vertices, and rename label `i` to `j`. Its width is the
//! number of distinct labels it mentions.
//!
//! Text format: `c(v,i)`, `u(e,e)`, `j(e,i,j)`, `r(e,i,j)`.
//!
//! [`gem_free_expression`] stays within [`W_GEM`] labels:
//! pieces of width at most 3 (cograph 2, path 3) are combined under at most
//! four apices into components of width at most `2^4 (3 + 1) - 1 = 63`;
//! a block is those components and paths under at most six apices (the
//! branching vertices and path ends of the suture), width at most
//! `2^6 (63 + 1) - 1 = 4095`; gluing blocks adds two labels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::iso::cotree::{CoNode, CoTree};
use crate::structure::find_suture_structure;

pub type Label = usize;

/// Width bound of [`gem_free_expression`].
pub const W_GEM: usize = 4097;
/// Most apices [`compose_apex`] accepts.
pub const MAX_APEX_SET: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CwExpression {
    Create(Vertex, Label),
    Union(Box<CwExpression>, Box<CwExpression>),
    Join(Box<CwExpression>, Label, Label),
    Rename(Box<CwExpression>, Label, Label),
}

use CwExpression::*;

pub fn create(v: Vertex, l: Label) -> CwExpression {
    Create(v, l)
}

pub fn union(a: CwExpression, b: CwExpression) -> CwExpression {
    Union(Box::new(a), Box::new(b))
}

pub fn join(e: CwExpression, i: Label, j: Label) -> CwExpression {
    Join(Box::new(e), i, j)
}

pub fn rename(e: CwExpression, i: Label, j: Label) -> CwExpression {
    Rename(Box::new(e), i, j)
}

impl CwExpression {
    /// Distinct labels mentioned anywhere in the expression.
    pub fn labels(&self) -> BTreeSet<Label> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            match e {
                Create(_, l) => {
                    out.insert(*l);
                }
                Union(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
                Join(a, i, j) | Rename(a, i, j) => {
                    out.insert(*i);
                    out.insert(*j);
                    stack.push(a);
                }
            }
        }
        out
    }

    pub fn width(&self) -> usize {
        self.labels().len()
    }

    pub fn size(&self) -> usize {
        match self {
            Create(..) => 1,
            Union(a, b) => 1 + a.size() + b.size(),
            Join(a, ..) | Rename(a, ..) => 1 + a.size(),
        }
    }

    /// Vertex ids of the `Create` leaves.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            match e {
                Create(v, _) => out.push(*v),
                Union(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
                Join(a, ..) | Rename(a, ..) => stack.push(a),
            }
        }
        out.sort_unstable();
        out
    }

    /// Applies `f` to every label.
    pub fn map_labels(&self, f: &dyn Fn(Label) -> Label) -> CwExpression {
        match self {
            Create(v, l) => Create(*v, f(*l)),
            Union(a, b) => union(a.map_labels(f), b.map_labels(f)),
            Join(a, i, j) => join(a.map_labels(f), f(*i), f(*j)),
            Rename(a, i, j) => rename(a.map_labels(f), f(*i), f(*j)),
        }
    }

    /// Relabels to `1..=width`, preserving order.
    pub fn normalized(&self) -> CwExpression {
        let index: BTreeMap<Label, Label> = self.labels().into_iter().zip(1..).collect();
        self.map_labels(&|l| index[&l])
    }
}

impl fmt::Display for CwExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Create(v, l) => write!(f, "c({v},{l})"),
            Union(a, b) => write!(f, "u({a},{b})"),
            Join(a, i, j) => write!(f, "j({a},{i},{j})"),
            Rename(a, i, j) => write!(f, "r({a},{i},{j})"),
        }
    }
}

impl std::str::FromStr for CwExpression {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut p = Parser { s: &compact, pos: 0 };
        let e = p.expr()?;
        if p.pos != compact.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| self.error("expected a number"))
    }

    fn expr(&mut self) -> Result<CwExpression> {
        let op = *self.s.get(self.pos).ok_or_else(|| self.error("unexpected end"))?;
        self.pos += 1;
        self.eat(b'(')?;
        let e = match op {
            b'c' => {
                let v = self.number()?;
                self.eat(b',')?;
                Create(v, self.number()?)
            }
            b'u' => {
                let a = self.expr()?;
                self.eat(b',')?;
                union(a, self.expr()?)
            }
            b'j' | b'r' => {
                let a = self.expr()?;
                self.eat(b',')?;
                let i = self.number()?;
                self.eat(b',')?;
                let j = self.number()?;
                if op == b'j' {
                    join(a, i, j)
                } else {
                    rename(a, i, j)
                }
            }
            _ => return Err(Error::Parse(format!("unknown operation '{}' at offset {}", op as char, self.pos - 1))),
        };
        self.eat(b')')?;
        Ok(e)
    }
}

/// Result of evaluating an expression: vertex ids with final labels, and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub labels: BTreeMap<Vertex, Label>,
    pub edges: BTreeSet<(Vertex, Vertex)>,
}

impl LabeledGraph {
    /// The graph on `0..n` if the vertex ids are exactly `0..n`.
    pub fn to_graph(&self) -> Option<Graph> {
        let n = self.labels.len();
        if self.labels.keys().copied().ne(0..n) {
            return None;
        }
        Graph::from_edges(n, self.edges.iter().copied()).ok()
    }
}

/// Evaluates `e`; fails on duplicate vertex ids or a join of a label with itself.
pub fn eval(e: &CwExpression) -> Result<LabeledGraph> {
    let mut edges = BTreeSet::new();
    let mut seen = BTreeSet::new();
    let groups = eval_into(e, &mut edges, &mut seen)?;
    let labels = groups.into_iter().flat_map(|(l, vs)| vs.into_iter().map(move |v| (v, l))).collect();
    Ok(LabeledGraph { labels, edges })
}

fn eval_into(
    e: &CwExpression,
    edges: &mut BTreeSet<(Vertex, Vertex)>,
    seen: &mut BTreeSet<Vertex>,
) -> Result<BTreeMap<Label, Vec<Vertex>>> {
    Ok(match e {
        Create(v, l) => {
            if !seen.insert(*v) {
                return Err(Error::Expression(format!("vertex {v} created twice")));
            }
            BTreeMap::from([(*l, vec![*v])])
        }
        Union(a, b) => {
            let mut ga = eval_into(a, edges, seen)?;
            for (l, vs) in eval_into(b, edges, seen)? {
                ga.entry(l).or_default().extend(vs);
            }
            ga
        }
        Join(a, i, j) => {
            if i == j {
                return Err(Error::Expression(format!("join of label {i} with itself")));
            }
            let g = eval_into(a, edges, seen)?;
            if let (Some(x), Some(y)) = (g.get(i), g.get(j)) {
                for &u in x {
                    for &v in y {
                        edges.insert((u.min(v), u.max(v)));
                    }
                }
            }
            g
        }
        Rename(a, i, j) => {
            let mut g = eval_into(a, edges, seen)?;
            if i != j {
                if let Some(vs) = g.remove(i) {
                    g.entry(*j).or_default().extend(vs);
                }
            }
            g
        }
    })
}

/// Whether `e` builds exactly `g[vertices]`, vertex ids being those of `g`.
pub fn verify_on(e: &CwExpression, g: &Graph, vertices: &[Vertex]) -> bool {
    let Ok(lg) = eval(e) else {
        return false;
    };
    let mut want: Vec<Vertex> = vertices.to_vec();
    want.sort_unstable();
    if lg.labels.keys().copied().ne(want.iter().copied()) {
        return false;
    }
    let mut count = 0;
    for (i, &a) in want.iter().enumerate() {
        for &b in &want[i + 1..] {
            if g.has_edge(a, b) {
                if !lg.edges.contains(&(a, b)) {
                    return false;
                }
                count += 1;
            }
        }
    }
    count == lg.edges.len()
}

/// Whether `e` builds exactly `g` under the identity on vertex ids.
pub fn verify(e: &CwExpression, g: &Graph) -> bool {
    let all: Vec<Vertex> = g.vertices().collect();
    verify_on(e, g, &all)
}

// ---------------------------------------------------------------------------
// Base constructions. All end with every vertex labeled 1.

/// Width at most 2, from the cotree.
pub fn cograph_expression(g: &Graph) -> Result<CwExpression> {
    let all: Vec<Vertex> = g.vertices().collect();
    cograph_expression_on(g, &all)
}

/// Width at most 2 expression for the P4-free graph `g[vertices]`.
pub fn cograph_expression_on(g: &Graph, vertices: &[Vertex]) -> Result<CwExpression> {
    let (sub, old) = g.induced_subgraph(vertices);
    let tree = CoTree::build(&sub)?;
    let root = tree.root.ok_or_else(|| Error::Precondition("graph has no vertices".into()))?;
    fn go(node: &CoNode, old: &[Vertex]) -> CwExpression {
        match node {
            CoNode::Leaf(v) => Create(old[*v], 1),
            CoNode::Union(ch) => {
                let mut it = ch.iter().map(|c| go(c, old));
                let first = it.next().expect("two or more children");
                it.fold(first, union)
            }
            CoNode::Join(ch) => {
                let mut it = ch.iter().map(|c| go(c, old));
                let first = it.next().expect("two or more children");
                it.fold(first, |acc, c| rename(join(union(acc, rename(c, 1, 2)), 1, 2), 2, 1))
            }
        }
    }
    Ok(go(&root, &old))
}

/// Width at most 3 for the induced path `order[0] - order[1] - ...`.
pub fn path_expression(order: &[Vertex]) -> Result<CwExpression> {
    let (&first, rest) = order.split_first().ok_or_else(|| Error::Precondition("empty path".into()))?;
    if rest.is_empty() {
        return Ok(Create(first, 1));
    }
    // Label 2 marks the current end, 1 finished vertices, 3 the newcomer.
    let mut e = Create(first, 2);
    for &v in rest {
        e = rename(rename(join(union(e, Create(v, 3)), 2, 3), 2, 1), 3, 2);
    }
    Ok(rename(e, 2, 1))
}

/// Width at most 4 for the induced cycle through `order` (at least 3 vertices).
pub fn cycle_expression(order: &[Vertex]) -> Result<CwExpression> {
    if order.len() < 3 {
        return Err(Error::Precondition("cycle needs three vertices".into()));
    }
    // Label 4 keeps the first vertex, 2 the current end, 1 finished vertices.
    let mut e = rename(join(union(Create(order[0], 4), Create(order[1], 3)), 4, 3), 3, 2);
    for &v in &order[2..] {
        e = rename(rename(join(union(e, Create(v, 3)), 2, 3), 2, 1), 3, 2);
    }
    Ok(rename(rename(join(e, 2, 4), 2, 1), 4, 1))
}

/// Order of `g[vertices]` along a path, if it induces one.
fn as_path(g: &Graph, vertices: &[Vertex]) -> Option<Vec<Vertex>> {
    let inside = |v: &Vertex| vertices.binary_search(v).is_ok();
    let deg = |v: Vertex| g.neighbors(v).iter().filter(|w| inside(w)).count();
    let edges: usize = vertices.iter().map(|&v| deg(v)).sum::<usize>() / 2;
    if edges + 1 != vertices.len() || vertices.iter().any(|&v| deg(v) > 2) {
        return None;
    }
    let start = *vertices.iter().find(|&&v| deg(v) <= 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| inside(&w) && w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    (order.len() == vertices.len()).then_some(order)
}

// ---------------------------------------------------------------------------
// Composition

/// Extends an expression for `g - s` to one for `g`.
///
/// Labels become pairs (old label, adjacency profile to `s`); every join
/// and rename is repeated for each profile present below it. Afterwards
/// all vertices of a profile share one label, and the vertices of `s` are
/// added one at a time under a spare label and joined to the profiles that
/// contain them. Width at most `2^|s| (width(e) + 1) - 1`.
pub fn compose_apex(e: &CwExpression, g: &Graph, s: &[Vertex]) -> Result<CwExpression> {
    if s.is_empty() {
        return Ok(e.clone());
    }
    if s.len() > MAX_APEX_SET {
        return Err(Error::Precondition(format!("{} apices, at most {MAX_APEX_SET}", s.len())));
    }
    let rest: Vec<Vertex> = g.vertices().filter(|v| !s.contains(v)).collect();
    if !verify_on(e, g, &rest) {
        return Err(Error::Precondition("expression does not build g - s".into()));
    }
    compose_apex_on(e, g, s)
}

/// [`compose_apex`] without the check that `e` builds the rest.
fn compose_apex_on(e: &CwExpression, g: &Graph, s: &[Vertex]) -> Result<CwExpression> {
    let e = e.normalized();
    let k = e.width();
    let profile = |v: Vertex| -> usize {
        s.iter().enumerate().fold(0, |p, (i, &a)| p | (g.has_edge(v, a) as usize) << i)
    };
    let pair = |l: Label, p: usize| p * k + l;
    let spare = k * (1 << s.len()) + 1;

    fn lift(
        e: &CwExpression,
        profile: &dyn Fn(Vertex) -> usize,
        pair: &dyn Fn(Label, usize) -> Label,
    ) -> (CwExpression, BTreeSet<usize>) {
        match e {
            Create(v, l) => {
                let p = profile(*v);
                (Create(*v, pair(*l, p)), BTreeSet::from([p]))
            }
            Union(a, b) => {
                let (ea, mut pa) = lift(a, profile, pair);
                let (eb, pb) = lift(b, profile, pair);
                pa.extend(pb);
                (union(ea, eb), pa)
            }
            Join(a, i, j) => {
                let (mut out, ps) = lift(a, profile, pair);
                for &p in &ps {
                    for &q in &ps {
                        out = join(out, pair(*i, p), pair(*j, q));
                    }
                }
                (out, ps)
            }
            Rename(a, i, j) => {
                let (mut out, ps) = lift(a, profile, pair);
                for &p in &ps {
                    out = rename(out, pair(*i, p), pair(*j, p));
                }
                (out, ps)
            }
        }
    }

    let (mut out, present) = lift(&e, &profile, &pair);
    for &p in &present {
        for l in 2..=k {
            out = rename(out, pair(l, p), pair(1, p));
        }
    }
    let mut profiles: BTreeSet<usize> = present;
    for (t, &a) in s.iter().enumerate() {
        out = union(out, Create(a, spare));
        for &p in &profiles {
            if p >> t & 1 == 1 {
                out = join(out, spare, pair(1, p));
            }
        }
        let p = profile(a);
        out = rename(out, spare, pair(1, p));
        profiles.insert(p);
    }
    Ok(out)
}

/// Glues block expressions along the block-cut forest of `g`.
///
/// Every block expression must build its block with the vertex ids of
/// `g`. Width at most the largest block width plus 2: one label follows
/// the cut vertex shared with the parent block, one holds finished
/// vertices.
pub fn compose_blocks(block_exprs: &BTreeMap<Vec<Vertex>, CwExpression>, g: &Graph) -> Result<CwExpression> {
    let dec = g.blocks();
    let mut exprs = Vec::with_capacity(dec.blocks.len());
    for b in &dec.blocks {
        let e = block_exprs
            .get(b)
            .ok_or_else(|| Error::Precondition(format!("no expression for block {b:?}")))?;
        if !verify_on(e, g, b) {
            return Err(Error::Precondition(format!("expression does not build block {b:?}")));
        }
        exprs.push(e.normalized());
    }
    let t = exprs.iter().map(CwExpression::width).max().unwrap_or(0);
    let ctx = BlockGlue { dec: &dec, exprs: &exprs, x: t + 1, dead: t + 2 };

    let mut blocks_of: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, b) in dec.blocks.iter().enumerate() {
        for &v in b {
            blocks_of[v].push(i);
        }
    }
    let mut done = vec![false; dec.blocks.len()];
    let mut parts = Vec::new();
    for root in 0..dec.blocks.len() {
        if done[root] {
            continue;
        }
        parts.push(ctx.block(root, None, &blocks_of, &mut done));
    }
    let mut it = parts.into_iter();
    let first = it.next().ok_or_else(|| Error::Precondition("graph has no vertices".into()))?;
    Ok(it.fold(first, union))
}

struct BlockGlue<'a> {
    dec: &'a crate::graph::BlockDecomposition,
    exprs: &'a [CwExpression],
    x: Label,
    dead: Label,
}

impl BlockGlue<'_> {
    /// Block `b` and everything below it. With a parent cut vertex `p`,
    /// `below_p` builds `p` (labeled X) and what already hangs at `p`; the
    /// result labels `p` with X and everything else dead.
    fn block(
        &self,
        b: usize,
        parent: Option<(Vertex, CwExpression)>,
        blocks_of: &[Vec<usize>],
        done: &mut Vec<bool>,
    ) -> CwExpression {
        done[b] = true;
        let p = parent.as_ref().map(|(v, _)| *v);
        let mut hanging: BTreeMap<Vertex, CwExpression> = BTreeMap::new();
        for &c in &self.dec.blocks[b] {
            if Some(c) == p || blocks_of[c].len() < 2 {
                continue;
            }
            // Everything hanging at c: chain through c's other blocks.
            let mut w = Create(c, self.x);
            for &child in &blocks_of[c] {
                if child != b && !done[child] {
                    w = self.block(child, Some((c, w)), blocks_of, done);
                }
            }
            hanging.insert(c, w);
        }
        let (mut e, _) = self.track(&self.exprs[b], p, parent.map(|(_, w)| w), &mut hanging);
        if p.is_some() {
            for l in 1..self.x {
                e = rename(e, l, self.dead);
            }
        }
        e
    }

    /// Rewrites a block expression: the tracked vertex is created as `below`
    /// and kept on label X while joins involving its original label are
    /// repeated for X; child cut vertices are replaced by what hangs there.
    fn track(
        &self,
        e: &CwExpression,
        tracked: Option<Vertex>,
        below: Option<CwExpression>,
        hanging: &mut BTreeMap<Vertex, CwExpression>,
    ) -> (CwExpression, Option<Label>) {
        match e {
            Create(v, l) => {
                if Some(*v) == tracked {
                    (below.expect("tracked vertex has an expression"), Some(*l))
                } else if let Some(w) = hanging.remove(v) {
                    (rename(w, self.x, *l), None)
                } else {
                    (Create(*v, *l), None)
                }
            }
            Union(a, b) => {
                let in_a = tracked.is_some_and(|t| a.vertices().binary_search(&t).is_ok());
                let (below_a, below_b) = if in_a { (below, None) } else { (None, below) };
                let (ea, la) = self.track(a, tracked, below_a, hanging);
                let (eb, lb) = self.track(b, tracked, below_b, hanging);
                (union(ea, eb), la.or(lb))
            }
            Join(a, i, j) => {
                let (mut ea, lam) = self.track(a, tracked, below, hanging);
                ea = join(ea, *i, *j);
                if lam == Some(*i) {
                    ea = join(ea, self.x, *j);
                } else if lam == Some(*j) {
                    ea = join(ea, self.x, *i);
                }
                (ea, lam)
            }
            Rename(a, i, j) => {
                let (ea, lam) = self.track(a, tracked, below, hanging);
                let lam = if lam == Some(*i) { Some(*j) } else { lam };
                (rename(ea, *i, *j), lam)
            }
        }
    }
}

/// Expression for a gem-induced-minor-free graph of width at most [`W_GEM`].
///
/// Fails with [`Error::StructureNotFound`] when a block has no usable
/// suture witness, which means the graph is not gem-induced-minor-free.
pub fn gem_free_expression(g: &Graph) -> Result<CwExpression> {
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let mut exprs = BTreeMap::new();
    for b in g.blocks().blocks {
        let e = block_expression(g, &b)?;
        exprs.insert(b, e);
    }
    compose_blocks(&exprs, g)
}

fn block_expression(g: &Graph, block: &[Vertex]) -> Result<CwExpression> {
    if let Ok(e) = cograph_expression_on(g, block) {
        return Ok(e);
    }
    let (sub, old) = g.induced_subgraph(block);
    if sub.vertices().all(|v| sub.degree(v) == 2) {
        // A 2-connected graph with all degrees two is a cycle.
        let mut order = vec![0];
        let mut prev = usize::MAX;
        while order.len() < sub.n() {
            let cur = *order.last().expect("nonempty");
            let next = *sub.neighbors(cur).iter().find(|&&w| w != prev).expect("degree two");
            prev = cur;
            order.push(next);
        }
        return cycle_expression(&order.iter().map(|&v| old[v]).collect::<Vec<_>>());
    }
    let w = find_suture_structure(&sub)?.ok_or(Error::StructureNotFound)?;
    let h = &w.h_vertices;
    let mut apices: BTreeSet<Vertex> = w.branch_vertices.iter().copied().collect();
    if !w.is_cycle {
        apices.extend([h[0], h[h.len() - 1]]);
    }
    let mut pieces: Vec<CwExpression> = Vec::new();
    // Runs of H between apices are induced paths with no other neighbors.
    let mut runs: Vec<Vec<Vertex>> = vec![Vec::new()];
    for &v in h {
        if apices.contains(&v) {
            runs.push(Vec::new());
        } else {
            runs.last_mut().expect("nonempty").push(v);
        }
    }
    if w.is_cycle && runs.len() > 1 {
        // Rejoin the run that wraps around the start of the cycle.
        let first = runs.remove(0);
        runs.last_mut().expect("nonempty").extend(first);
    }
    for run in runs.into_iter().filter(|r| !r.is_empty()) {
        if apices.is_empty() {
            // Cycle without branching vertices: it is the whole block.
            return cycle_expression(&run.iter().map(|&v| old[v]).collect::<Vec<_>>());
        }
        pieces.push(path_expression(&run)?);
    }
    for comp in &w.components {
        pieces.push(component_expression(&sub, comp)?);
    }
    let s: Vec<Vertex> = apices.into_iter().collect();
    let mut it = pieces.into_iter();
    let first = it.next().ok_or(Error::StructureNotFound)?;
    let base = it.fold(first, union);
    let e = compose_apex_on(&base, &sub, &s)?;
    Ok(e.map_vertices(&|v| old[v]))
}

/// Expression for `g[M]`: at most four vertices of `M` over a disjoint
/// union of cographs and paths. The attachments of the residual are tried
/// first, then sets of chain and attachment vertices by increasing size.
fn component_expression(g: &Graph, comp: &crate::structure::SutureComponent) -> Result<CwExpression> {
    let in_m = |v: &Vertex| comp.vertices.binary_search(v).is_ok();
    let attached: Vec<Vertex> = comp.attachments.iter().copied().filter(|v| in_m(v)).collect();
    if attached.len() <= MAX_COMPONENT_APICES {
        if let Some(e) = apexed_pieces(g, &comp.vertices, &attached)? {
            return Ok(e);
        }
    }
    let mut cands: Vec<Vertex> = comp.chains.iter().flatten().chain(&attached).copied().collect();
    cands.sort_unstable();
    cands.dedup();
    let mut tried = 0;
    for size in 0..=MAX_COMPONENT_APICES.min(cands.len()) {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            tried += 1;
            if tried > MAX_APEX_SUBSETS {
                return Err(Error::StructureNotFound);
            }
            let apices: Vec<Vertex> = pick.iter().map(|&i| cands[i]).collect();
            if let Some(e) = apexed_pieces(g, &comp.vertices, &apices)? {
                return Ok(e);
            }
            if !next_combination(&mut pick, cands.len()) {
                break;
            }
        }
    }
    Err(Error::StructureNotFound)
}

/// Most apices removed from one component.
const MAX_COMPONENT_APICES: usize = 4;
/// Apex sets tried per component before giving up.
const MAX_APEX_SUBSETS: usize = 200_000;

/// Advances `pick` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Expression for `g[vertices]` if removing `apices` leaves only cographs and paths.
fn apexed_pieces(g: &Graph, vertices: &[Vertex], apices: &[Vertex]) -> Result<Option<CwExpression>> {
    let mut mask = vec![false; g.n()];
    for &v in vertices {
        mask[v] = !apices.contains(&v);
    }
    let mut base: Option<CwExpression> = None;
    for piece in g.components_within(&mask) {
        let e = match cograph_expression_on(g, &piece) {
            Ok(e) => e,
            Err(_) => match as_path(g, &piece) {
                Some(order) => path_expression(&order)?,
                None => return Ok(None),
            },
        };
        base = Some(match base {
            None => e,
            Some(b) => union(b, e),
        });
    }
    match base {
        Some(b) => compose_apex_on(&b, g, apices).map(Some),
        // At most four vertices: always a cograph or a path.
        None => Ok(cograph_expression_on(g, vertices)
            .ok()
            .or_else(|| as_path(g, vertices).and_then(|o| path_expression(&o).ok()))),
    }
}

impl CwExpression {
    /// Renames vertex ids.
    pub fn map_vertices(&self, f: &dyn Fn(Vertex) -> Vertex) -> CwExpression {
        match self {
            Create(v, l) => Create(f(*v), *l),
            Union(a, b) => union(a.map_vertices(f), b.map_vertices(f)),
            Join(a, i, j) => join(a.map_vertices(f), *i, *j),
            Rename(a, i, j) => rename(a.map_vertices(f), *i, *j),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn eval_basics() {
        let k1 = eval(&Create(0, 1)).unwrap();
        assert_eq!(k1.to_graph().unwrap(), Graph::empty(1));
        let k2 = join(union(Create(0, 1), Create(1, 2)), 1, 2);
        assert!(verify(&k2, &Graph::complete(2)));
        assert!(eval(&join(Create(0, 1), 1, 1)).is_err());
        assert!(eval(&union(Create(0, 1), Create(0, 2))).is_err());
    }

    #[test]
    fn text_round_trip() {
        let e = path_expression(&[0, 1, 2, 3]).unwrap();
        let text = e.to_string();
        assert_eq!(text.parse::<CwExpression>().unwrap(), e);
        assert_eq!("u( c(0,1) , c(1,1) )".parse::<CwExpression>().unwrap(), union(Create(0, 1), Create(1, 1)));
        assert!("x(0,1)".parse::<CwExpression>().is_err());
        assert!("c(0,1)c".parse::<CwExpression>().is_err());
    }

    #[test]
    fn paths_and_cycles() {
        let p4 = path_expression(&[0, 1, 2, 3]).unwrap();
        assert!(verify(&p4, &Graph::path(4)));
        assert!(p4.width() <= 3);
        assert!(verify(&join(p4.clone(), 1, 4), &Graph::path(4)));
        assert!(!verify(&join(union(p4, Create(4, 2)), 1, 2), &Graph::path(5)));
        for n in 3..9 {
            let order: Vec<usize> = (0..n).collect();
            let c = cycle_expression(&order).unwrap();
            assert!(verify(&c, &Graph::cycle(n)));
            assert!(c.width() <= 4);
        }
    }

    #[test]
    fn cographs() {
        assert_eq!(cograph_expression(&Graph::empty(1)).unwrap().width(), 1);
        let k4 = cograph_expression(&Graph::complete(4)).unwrap();
        assert!(verify(&k4, &Graph::complete(4)) && k4.width() <= 2);
        assert!(cograph_expression(&Graph::path(4)).is_err());
    }

    #[test]
    fn apex_examples() {
        let c5 = Graph::cycle(5);
        let p4 = path_expression(&[1, 2, 3, 4]).unwrap();
        assert_eq!(compose_apex(&p4, &c5, &[]).unwrap(), p4);
        let e = compose_apex(&p4, &c5, &[0]).unwrap();
        assert!(verify(&e, &c5));
        assert!(e.width() <= 2 * (p4.width() + 1) - 1);
        let w5 = named::wheel(5);
        let rim = cycle_expression(&[0, 1, 2, 3, 4]).unwrap();
        let e = compose_apex(&rim, &w5, &[5]).unwrap();
        assert!(verify(&e, &w5));
        assert!(e.width() <= 9);
        assert!(compose_apex(&rim, &w5, &[0]).is_err());
    }

    #[test]
    fn block_examples() {
        let single = BTreeMap::from([(vec![0, 1, 2], cograph_expression(&Graph::complete(3)).unwrap())]);
        let e = compose_blocks(&single, &Graph::complete(3)).unwrap();
        assert_eq!(e.width(), 2);
        let bowtie = named::bowtie();
        let mut exprs = BTreeMap::new();
        for b in bowtie.blocks().blocks {
            exprs.insert(b.clone(), cograph_expression_on(&bowtie, &b).unwrap());
        }
        let e = compose_blocks(&exprs, &bowtie).unwrap();
        assert!(verify(&e, &bowtie));
        assert!(e.width() <= 4);
    }

    #[test]
    fn gem_free_small() {
        for g in [Graph::cycle(7), Graph::complete(4), Graph::path(5), named::bowtie(), Graph::cycle(3)] {
            let e = gem_free_expression(&g).unwrap();
            assert!(verify(&e, &g));
            assert!(e.width() <= W_GEM);
        }
        assert!(gem_free_expression(&Graph::cycle(9)).unwrap().width() <= 4);
    }
}
