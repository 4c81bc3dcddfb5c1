//! Quotient graphs and forbidden contraction patterns.
//!
//! A graph `G` contracts to `H` when `V(G)` can be partitioned into bags,
//! one per vertex of `H`, such that two bags are joined by an edge of `G`
//! exactly when the corresponding vertices of `H` are adjacent.
//!
//! The patterns searched for here are the three 5-vertex subgraphs of
//! `K_{2,3}` (sides `{u2,u4}` and `{u1,u3,u5}`) that are not in the stable
//! class, plus unbalanced complete bipartite graphs `K_{m,n}`:
//!
//! * `H1`: the path `u1 u2 u3 u4 u5`;
//! * `H2`: the 4-cycle `u1 u2 u3 u4` plus the pendant `u5` on `u4`;
//! * `H3`: `K_{2,3}` itself.
//!
//! Bags are indexed from zero, so bag `i` corresponds to `u_{i+1}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::WeightFn;

/// Default number of search nodes a pattern search may visit.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BagSide {
    InS,
    OutS,
}

/// The graph obtained by contracting each bag of a partition to a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    pub quotient: Graph,
    pub bags: Vec<VertexSet>,
    /// `bag_of[v]` is the quotient vertex holding `v`.
    pub bag_of: Vec<usize>,
    /// Present for quotients built by [`beta`].
    pub bag_side: Option<Vec<BagSide>>,
}

/// Contracts an arbitrary partition of `V(G)` given as a list of bags.
/// Quotient vertex `i` is `bags[i]`.
pub fn contract(g: &Graph, bags: &[VertexSet]) -> Result<QuotientGraph> {
    let bag_of = check_partition(g, bags)?;
    let k = bags.len();
    let mut edges = Vec::new();
    for (i, &bag) in bags.iter().enumerate() {
        let reach = g.neighborhood_of(bag);
        for (j, &other) in bags.iter().enumerate().skip(i + 1) {
            if !reach.is_disjoint(other) {
                edges.push((i, j));
            }
        }
    }
    Ok(QuotientGraph { quotient: Graph::from_edges(k, &edges)?, bags: bags.to_vec(), bag_of, bag_side: None })
}

fn check_partition(g: &Graph, bags: &[VertexSet]) -> Result<Vec<usize>> {
    let mut seen = VertexSet::EMPTY;
    let mut bag_of = vec![usize::MAX; g.order()];
    for (i, &bag) in bags.iter().enumerate() {
        if bag.is_empty() {
            return Err(Error::InvalidPartition(format!("bag {i} is empty")));
        }
        if !bag.is_subset(g.vertices()) {
            return Err(Error::InvalidPartition(format!("bag {i} has vertices outside the graph")));
        }
        if !bag.is_disjoint(seen) {
            return Err(Error::InvalidPartition(format!("bag {i} overlaps an earlier bag")));
        }
        seen = seen.union(bag);
        for v in bag.iter() {
            bag_of[v] = i;
        }
    }
    if seen != g.vertices() {
        return Err(Error::InvalidPartition("bags do not cover every vertex".into()));
    }
    Ok(bag_of)
}

/// `β(G,S)`: one vertex per component of `G[S]` and of `G − S`, adjacent
/// when an edge of `G` joins them. Components of `G[S]` come first, each
/// group in ascending order of minimum vertex id.
pub fn beta(g: &Graph, s: VertexSet) -> Result<QuotientGraph> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if !s.is_subset(g.vertices()) || s == g.vertices() {
        return Err(Error::NotProperSubset);
    }
    let inside = g.components(s);
    let outside = g.components(g.vertices().difference(s));
    let mut sides = vec![BagSide::InS; inside.len()];
    sides.resize(inside.len() + outside.len(), BagSide::OutS);
    let bags: Vec<VertexSet> = inside.into_iter().chain(outside).collect();
    let mut q = contract(g, &bags)?;
    q.bag_side = Some(sides);
    Ok(q)
}

/// Weight of each bag is the sum of its members' weights.
pub fn lift_weights(q: &QuotientGraph, w: &WeightFn) -> Result<WeightFn> {
    w.check_order(q.bag_of.len())?;
    WeightFn::new(q.bags.iter().map(|&b| w.weight_of(b)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    H1,
    H2,
    H3,
    #[serde(rename = "KMN")]
    Kmn,
}

impl Pattern {
    pub const ALL: [Pattern; 4] = [Pattern::H1, Pattern::H2, Pattern::H3, Pattern::Kmn];

    /// Edge table of the 5-vertex patterns; `None` for `K_{m,n}`.
    pub fn edges(self) -> Option<&'static [(usize, usize)]> {
        match self {
            Pattern::H1 => Some(&[(0, 1), (1, 2), (2, 3), (3, 4)]),
            Pattern::H2 => Some(&[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]),
            Pattern::H3 => Some(&[(1, 0), (1, 2), (1, 4), (3, 0), (3, 2), (3, 4)]),
            Pattern::Kmn => None,
        }
    }

    /// The pattern graph itself (5-vertex patterns only).
    pub fn graph(self) -> Option<Graph> {
        self.edges().map(|e| Graph::from_edges(5, e).expect("pattern table"))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::H1 => "H1",
            Pattern::H2 => "H2",
            Pattern::H3 => "H3",
            Pattern::Kmn => "KMN",
        })
    }
}

impl std::str::FromStr for Pattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Pattern> {
        match s.to_ascii_uppercase().as_str() {
            "H1" => Ok(Pattern::H1),
            "H2" => Ok(Pattern::H2),
            "H3" => Ok(Pattern::H3),
            "KMN" => Ok(Pattern::Kmn),
            other => Err(Error::PatternMismatch { expected: "H1|H2|H3|KMN".into(), got: other.into() }),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MatchParams {
    /// `K_{m,n}` side sizes; the first `m` bags form one side.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    /// Index of the only bag with two or more vertices, if any.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub big_bag: Option<usize>,
    /// `H3` only: the vertex of bag 4 carrying every edge towards bag 5.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub v4: Option<usize>,
}

/// A partition of `V(G)` realising one of the patterns together with the
/// side conditions the corresponding weight construction relies on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternMatch {
    pub pattern: Pattern,
    pub bags: Vec<VertexSet>,
    #[serde(default)]
    pub params: MatchParams,
}

impl PatternMatch {
    /// Re-derives every invariant of the match on `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidPartition(format!("{}: {msg}", self.pattern)));
        let q = contract(g, &self.bags)?;
        match self.pattern {
            Pattern::Kmn => {
                let (Some(m), Some(n)) = (self.params.m, self.params.n) else {
                    return bad("missing side sizes");
                };
                if m == n || m < 2 || n < 2 {
                    return bad("needs m != n and m, n >= 2");
                }
                if self.bags.len() != m + n || q.quotient != Graph::complete_bipartite(m, n) {
                    return bad("quotient is not the complete bipartite graph");
                }
                let big: Vec<usize> = (0..self.bags.len()).filter(|&i| self.bags[i].len() >= 2).collect();
                if big.len() > 1 {
                    return bad("more than one bag has two or more vertices");
                }
                if big.first().copied() != self.params.big_bag {
                    return bad("big bag index does not match the bags");
                }
                if let Some(&z) = big.first() {
                    if !g.is_connected_set(self.bags[z]) {
                        return bad("big bag is not connected");
                    }
                }
                Ok(())
            }
            p => {
                if self.bags.len() != 5 || Some(q.quotient) != p.graph() {
                    return bad("quotient differs from the pattern");
                }
                let b = &self.bags;
                if !g.is_connected_set(b[1]) || !g.is_connected_set(b[3]) {
                    return bad("bags 2 and 4 must be connected");
                }
                if p == Pattern::H2 {
                    if g.edge_count_between(b[0], b[1]) != 1 || g.edge_count_between(b[1], b[2]) != 1 {
                        return bad("bag 2 must meet bags 1 and 3 in exactly one edge each");
                    }
                    if !g.is_connected_set(b[0]) || !g.is_connected_set(b[2]) {
                        return bad("bags 1 and 3 must be connected");
                    }
                }
                if p == Pattern::H3 {
                    if b[0].len() != 1 || b[1].len() != 1 || !g.is_connected_set(b[2]) {
                        return bad("bags 1, 2 must be singletons and bag 3 connected");
                    }
                    match self.params.v4 {
                        Some(v4) if h3_anchor_ok(g, b, v4) => {}
                        _ => return bad("v4 must touch bag 3 and carry every edge from bag 4 to bag 5"),
                    }
                }
                Ok(())
            }
        }
    }
}

fn h3_anchor_ok(g: &Graph, b: &[VertexSet], v4: usize) -> bool {
    b[3].contains(v4) && !g.neighbors(v4).is_disjoint(b[2]) && g.neighborhood_of(b[3].without(v4)).is_disjoint(b[4])
}

/// Outcome of a bounded pattern search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSearch {
    pub found: Option<PatternMatch>,
    /// Search nodes visited.
    pub examined: u64,
    /// True when the search space was exhausted without hitting the budget.
    /// A `None` result with `exhausted == false` means "unknown".
    pub exhausted: bool,
}

/// First match of `pattern` in the search order, or `None` when none was
/// found within `budget` search nodes. Absence is not a proof that the
/// graph does not contract to the pattern.
pub fn find_pattern(g: &Graph, pattern: Pattern, budget: u64) -> Option<PatternMatch> {
    search_pattern(g, pattern, budget).found
}

pub fn search_pattern(g: &Graph, pattern: Pattern, budget: u64) -> PatternSearch {
    if !g.is_connected() {
        return PatternSearch { found: None, examined: 0, exhausted: true };
    }
    match pattern {
        Pattern::Kmn => search_kmn(g, budget),
        p => {
            let mut s = FiveBagSearch::new(g, p, budget);
            let found = s.place(0);
            PatternSearch { found, examined: s.examined, exhausted: !s.out_of_budget }
        }
    }
}

/// Backtracking over assignments of vertices (in id order) to the five
/// bags. Cross-bag edges that the pattern forbids are rejected as soon as
/// both endpoints are placed, so the first complete assignment found is the
/// lexicographically least valid one.
struct FiveBagSearch<'g> {
    g: &'g Graph,
    pattern: Pattern,
    allowed: [[bool; 5]; 5],
    bags: [VertexSet; 5],
    bag_of: Vec<usize>,
    budget: u64,
    examined: u64,
    out_of_budget: bool,
}

impl<'g> FiveBagSearch<'g> {
    fn new(g: &'g Graph, pattern: Pattern, budget: u64) -> Self {
        let mut allowed = [[false; 5]; 5];
        for (i, row) in allowed.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in pattern.edges().unwrap() {
            allowed[a][b] = true;
            allowed[b][a] = true;
        }
        FiveBagSearch {
            g,
            pattern,
            allowed,
            bags: [VertexSet::EMPTY; 5],
            bag_of: vec![usize::MAX; g.order()],
            budget,
            examined: 0,
            out_of_budget: false,
        }
    }

    fn place(&mut self, v: usize) -> Option<PatternMatch> {
        if self.examined >= self.budget {
            self.out_of_budget = true;
            return None;
        }
        self.examined += 1;
        let n = self.g.order();
        if v == n {
            return self.finish();
        }
        let empty = self.bags.iter().filter(|b| b.is_empty()).count();
        if empty > n - v {
            return None;
        }
        let placed = VertexSet::full(v);
        let earlier = self.g.neighbors(v).intersection(placed);
        for b in 0..5 {
            if self.pattern == Pattern::H3 && b < 2 && !self.bags[b].is_empty() {
                continue;
            }
            if earlier.iter().any(|u| !self.allowed[b][self.bag_of[u]]) {
                continue;
            }
            if self.pattern == Pattern::H2 && !self.h2_counts_ok(v, b) {
                continue;
            }
            self.bags[b].insert(v);
            self.bag_of[v] = b;
            let found = self.place(v + 1);
            self.bags[b].remove(v);
            self.bag_of[v] = usize::MAX;
            if found.is_some() || self.out_of_budget {
                return found;
            }
        }
        None
    }

    /// At most one edge between bags 1-2 and between bags 2-3 (0-based 0-1, 1-2).
    fn h2_counts_ok(&self, v: usize, b: usize) -> bool {
        let nb = self.g.neighbors(v);
        let between = |x: usize, y: usize| self.g.edge_count_between(self.bags[x], self.bags[y]);
        match b {
            0 => between(0, 1) + nb.intersection(self.bags[1]).len() <= 1,
            2 => between(1, 2) + nb.intersection(self.bags[1]).len() <= 1,
            1 => {
                between(0, 1) + nb.intersection(self.bags[0]).len() <= 1
                    && between(1, 2) + nb.intersection(self.bags[2]).len() <= 1
            }
            _ => true,
        }
    }

    fn finish(&self) -> Option<PatternMatch> {
        let b = &self.bags;
        if b.iter().any(|x| x.is_empty()) {
            return None;
        }
        if !self.pattern.edges().unwrap().iter().all(|&(x, y)| self.g.sets_adjacent(b[x], b[y])) {
            return None;
        }
        if !self.g.is_connected_set(b[1]) || !self.g.is_connected_set(b[3]) {
            return None;
        }
        let mut params = MatchParams::default();
        match self.pattern {
            Pattern::H2 => {
                if self.g.edge_count_between(b[0], b[1]) != 1
                    || self.g.edge_count_between(b[1], b[2]) != 1
                    || !self.g.is_connected_set(b[0])
                    || !self.g.is_connected_set(b[2])
                {
                    return None;
                }
            }
            Pattern::H3 => {
                if !self.g.is_connected_set(b[2]) {
                    return None;
                }
                params.v4 = Some(b[3].iter().find(|&v| h3_anchor_ok(self.g, b, v))?);
            }
            _ => {}
        }
        Some(PatternMatch { pattern: self.pattern, bags: b.to_vec(), params })
    }
}

/// `K_{m,n}` contractions with at most one non-singleton bag `Z`, which must
/// be connected. Candidates for `Z`, in order: none (the graph itself),
/// `V ∖ N[v]` for each vertex `v`, then every connected set of two or more
/// vertices in ascending bitmask order.
fn search_kmn(g: &Graph, budget: u64) -> PatternSearch {
    let mut examined = 0u64;
    let n = g.order();
    let full = g.vertices().bits();
    let mut tried = std::collections::HashSet::new();
    let mut candidates: Box<dyn Iterator<Item = u64>> = Box::new(
        std::iter::once(0u64).chain((0..n).map(|v| g.vertices().difference(g.closed_neighborhood(v)).bits())).chain(
            if n < 63 { Box::new(3u64..=full) as Box<dyn Iterator<Item = u64>> } else { Box::new(std::iter::empty()) },
        ),
    );
    for z in candidates.by_ref() {
        if z != 0 && (z.count_ones() < 2 || !tried.insert(z)) {
            continue;
        }
        if examined >= budget {
            return PatternSearch { found: None, examined, exhausted: false };
        }
        examined += 1;
        if z != 0 && !g.is_connected_set(VertexSet::from_bits(z)) {
            continue;
        }
        if let Some(found) = kmn_with_bag(g, VertexSet::from_bits(z)) {
            return PatternSearch { found: Some(found), examined, exhausted: false };
        }
    }
    PatternSearch { found: None, examined, exhausted: true }
}

fn kmn_with_bag(g: &Graph, z: VertexSet) -> Option<PatternMatch> {
    let mut bags: Vec<VertexSet> = Vec::new();
    if !z.is_empty() {
        bags.push(z);
    }
    bags.extend(g.vertices().difference(z).iter().map(VertexSet::singleton));
    bags.sort();
    let q = contract(g, &bags).ok()?;
    let h = &q.quotient;
    let (a, b) = h.bipartition()?;
    if !h.is_connected() || h.edge_count() != a.len() * b.len() {
        return None;
    }
    // the first side holds Z, or vertex 0 when every bag is a singleton
    let anchor = if z.is_empty() { 0 } else { q.bag_of[z.min().unwrap()] };
    let (first, second) = if a.contains(anchor) { (a, b) } else { (b, a) };
    let (m, n) = (first.len(), second.len());
    if m == n || m < 2 || n < 2 {
        return None;
    }
    let ordered: Vec<VertexSet> = first.iter().chain(second.iter()).map(|i| bags[i]).collect();
    let big_bag = ordered.iter().position(|x| x.len() >= 2);
    Some(PatternMatch {
        pattern: Pattern::Kmn,
        bags: ordered,
        params: MatchParams { m: Some(m), n: Some(n), big_bag, v4: None },
    })
}

/// `deg(v) >= 3`, `N(v)` independent, every neighbour of `v` has degree at
/// least two and `G − N[v]` is connected: then contracting `V ∖ N[v]` gives
/// `K_{2,deg(v)}`.
pub fn check_corollary35(g: &Graph, v: usize) -> bool {
    let nb = g.neighbors(v);
    nb.len() >= 3 && g.is_independent(nb) && nb.iter().all(|u| g.degree(u) >= 2) && {
        let rest = g.vertices().difference(g.closed_neighborhood(v));
        !rest.is_empty() && g.is_connected_set(rest)
    }
}
