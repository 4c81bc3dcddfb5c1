//! Simple undirected graphs on at most 64 vertices, stored as adjacency
//! bitrows, plus the structural queries the rest of the crate consumes.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest order representable by a [`VertexSet`].
pub const MAX_ORDER: usize = 64;

/// A set of vertex ids drawn from `0..64`, stored as a bitmask.
///
/// Ordering is lexicographic on the ascending id sequence, so `{0,3} < {1,2}`
/// and `{0} < {0,1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = ids.iter().find(|&&v| v >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("vertex id {v} out of range")));
        }
        Ok(ids.into_iter().collect())
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Self-loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::MultiEdge(u.min(v), u.max(v)));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency bitrows, checking symmetry and loops.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let range = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !range != 0 {
                let bad = (row & !range).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: bad, order: n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in VertexSet(row).iter() {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::InvalidPartition(format!("asymmetric adjacency {v}-{u}")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v]).with(v)
    }

    /// Union of the open neighborhoods of the members of `s`.
    pub fn neighborhood_of(&self, s: VertexSet) -> VertexSet {
        VertexSet(s.iter().fold(0, |acc, v| acc | self.adj[v]))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |u| VertexSet(self.adj[u] & !((1u64 << u << 1).wrapping_sub(1))).iter().map(move |v| (u, v)))
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    /// Maximal connected pieces of `g[s]`, in ascending order of minimum id.
    pub fn components(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s.bits();
        let mut out = Vec::new();
        while rest != 0 {
            let comp = self.reach(rest & rest.wrapping_neg(), rest);
            out.push(VertexSet(comp));
            rest &= !comp;
        }
        out
    }

    /// Vertices of `within` reachable from `start` inside `g[within]`.
    pub(crate) fn reach(&self, start: u64, within: u64) -> u64 {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & within & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen
    }

    /// True when `g[s]` is connected. The empty set counts as connected.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        let b = s.bits();
        b == 0 || self.reach(b & b.wrapping_neg(), b) == b
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.is_connected_set(self.vertices())
    }

    /// Edges `(u, v)` with `u ∈ a`, `v ∈ b`, ordered by `u` then `v`.
    pub fn edge_set_between(&self, a: VertexSet, b: VertexSet) -> Result<Vec<(usize, usize)>> {
        if !a.is_disjoint(b) {
            return Err(Error::OverlappingSets);
        }
        Ok(a.iter().flat_map(|u| VertexSet(self.adj[u] & b.bits()).iter().map(move |v| (u, v))).collect())
    }

    /// Number of edges joining two disjoint sets.
    pub fn edge_count_between(&self, a: VertexSet, b: VertexSet) -> usize {
        a.iter().map(|u| (self.adj[u] & b.bits()).count_ones() as usize).sum()
    }

    /// `E_G(A, B) ≠ ∅` for disjoint sets.
    pub fn sets_adjacent(&self, a: VertexSet, b: VertexSet) -> bool {
        a.iter().any(|u| self.adj[u] & b.bits() != 0)
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for u in self.neighbors(v).iter() {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    pub fn eccentricity(&self, v: usize) -> Result<usize> {
        self.distances_from(v)
            .into_iter()
            .map(|d| d.ok_or(Error::Disconnected))
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    /// Largest shortest-path distance. Errors on empty or disconnected input.
    pub fn diameter(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        (0..self.n).map(|v| self.eccentricity(v)).try_fold(0, |acc, e| e.map(|e| acc.max(e)))
    }

    /// Two-colouring. The class holding vertex 0 comes first; every other
    /// component's smallest vertex is placed in the first class as well.
    /// `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for u in self.neighbors(v).iter() {
                    match color[u] {
                        None => {
                            color[u] = Some(!c);
                            queue.push_back(u);
                        }
                        Some(cu) if cu == c => return None,
                        _ => {}
                    }
                }
            }
        }
        let first = (0..self.n).filter(|&v| color[v] == Some(false)).collect();
        let second = (0..self.n).filter(|&v| color[v] == Some(true)).collect();
        Some((first, second))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    /// Every vertex outside `s` has a neighbour in `s`.
    pub fn is_dominating(&self, s: VertexSet) -> bool {
        self.neighborhood_of(s).union(s) == self.vertices()
    }

    /// All cliques of size at most `max_size` that dominate the graph,
    /// ordered by size and then lexicographically.
    pub fn dominating_cliques(&self, max_size: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.extend_cliques(VertexSet::EMPTY, self.vertices(), max_size, &mut stack, &mut out);
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    fn extend_cliques(
        &self,
        clique: VertexSet,
        candidates: VertexSet,
        max_size: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<VertexSet>,
    ) {
        if !clique.is_empty() && self.is_dominating(clique) {
            out.push(clique);
        }
        if clique.len() == max_size {
            return;
        }
        for v in candidates.iter() {
            // only extend with vertices above the current maximum so each clique is seen once
            let next = VertexSet(candidates.bits() & self.adj[v] & !((1u64 << v << 1).wrapping_sub(1)));
            stack.push(v);
            self.extend_cliques(clique.with(v), next, max_size, stack, out);
            stack.pop();
        }
    }

    pub fn has_dominating_clique(&self) -> bool {
        !self.dominating_cliques(self.n).is_empty()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    /// A perfect elimination ordering if the graph is chordal.
    ///
    /// Maximum cardinality search numbers vertices so that, read in reverse,
    /// the order is a perfect elimination ordering exactly when the graph is
    /// chordal; the candidate is then verified directly.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut numbered = 0u64;
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| numbered >> v & 1 == 0)
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .unwrap();
            numbered |= 1 << v;
            visit.push(v);
            for u in VertexSet(self.adj[v] & !numbered).iter() {
                weight[u] += 1;
            }
        }
        visit.reverse();
        self.is_perfect_elimination_ordering(&visit).then_some(visit)
    }

    /// Checks that for each vertex its neighbours later in `order` form a clique.
    pub fn is_perfect_elimination_ordering(&self, order: &[usize]) -> bool {
        if order.len() != self.n || order.iter().copied().collect::<VertexSet>() != self.vertices() {
            return false;
        }
        let mut later = self.vertices();
        for &v in order {
            later.remove(v);
            if !self.is_clique(self.neighbors(v).intersection(later)) {
                return false;
            }
        }
        true
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// Connected, every vertex of degree 2, at least 3 vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.is_connected() && (0..self.n).all(|v| self.degree(v) == 2)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// The subgraph induced by `s`, relabelled in ascending id order, with
    /// the map from new ids to old ids.
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.to_vec();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| VertexSet(self.adj[v] & s.bits()).iter().fold(0u64, |acc, u| acc | 1 << index[u]))
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// Copy of the graph with a new vertex `n` joined to `v`.
    pub fn with_pendant(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        if self.n + 1 > MAX_ORDER {
            return Err(Error::OrderTooLarge(self.n + 1));
        }
        let mut adj = self.adj.clone();
        adj[v] |= 1 << self.n;
        adj.push(1 << v);
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, adj }
    }

    // Named constructors used throughout tests, examples and the CLI.

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges).expect("complete")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::from_edges(a + b, &edges).expect("complete bipartite")
    }

    /// `K_{1,k}` centred at vertex 0.
    pub fn star(k: usize) -> Graph {
        Graph::complete_bipartite(1, k)
    }

    /// The `m`-page book `K_{1,m} □ P_2`: spine `0-1`, page `i` is the
    /// 4-cycle `0, 2+2i, 3+2i, 1`.
    pub fn book(m: usize) -> Graph {
        let mut edges = vec![(0, 1)];
        for i in 0..m {
            let a = 2 + 2 * i;
            edges.extend([(0, a), (a, a + 1), (a + 1, 1)]);
        }
        Graph::from_edges(2 + 2 * m, &edges).expect("book")
    }

    /// Hub 0 joined to every vertex of the cycle `1..=k`.
    pub fn wheel(k: usize) -> Graph {
        let mut edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        edges.extend((1..=k).map(|i| (i, i % k + 1)));
        Graph::from_edges(k + 1, &edges).expect("wheel")
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[usize]) -> VertexSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn components_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(c4.components(set(&[0, 1])), vec![set(&[0, 1])]);
        assert_eq!(c4.components(set(&[0, 2])), vec![set(&[0]), set(&[2])]);
        let p5 = Graph::path(5);
        assert_eq!(p5.components(set(&[0, 2, 3])), vec![set(&[0]), set(&[2, 3])]);
        assert!(p5.components(VertexSet::EMPTY).is_empty());
    }

    #[test]
    fn edge_sets_between() {
        let c4 = Graph::cycle(4);
        assert_eq!(c4.edge_set_between(set(&[0]), set(&[2])).unwrap(), vec![]);
        assert_eq!(c4.edge_set_between(set(&[0]), set(&[1, 3])).unwrap(), vec![(0, 1), (0, 3)]);
        let p5 = Graph::path(5);
        assert_eq!(p5.edge_set_between(set(&[1]), set(&[0, 2])).unwrap(), vec![(1, 0), (1, 2)]);
        assert_eq!(c4.edge_set_between(set(&[0, 1]), set(&[1])), Err(Error::OverlappingSets));
    }

    #[test]
    fn diameters() {
        assert_eq!(Graph::path(5).diameter(), Ok(4));
        assert_eq!(Graph::complete_bipartite(3, 3).diameter(), Ok(2));
        assert_eq!(Graph::book(2).diameter(), Ok(3));
        assert_eq!(Graph::complete(1).diameter(), Ok(0));
        let two = Graph::empty(2).unwrap();
        assert_eq!(two.diameter(), Err(Error::Disconnected));
        assert_eq!(Graph::empty(0).unwrap().diameter(), Err(Error::EmptyGraph));
    }

    #[test]
    fn chordality() {
        assert!(!Graph::cycle(4).is_chordal());
        assert!(Graph::path(6).is_chordal());
        assert!(Graph::star(5).is_chordal());
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let peo = diamond.perfect_elimination_ordering().unwrap();
        assert!(diamond.is_perfect_elimination_ordering(&peo));
        assert!(!Graph::cycle(5).is_chordal());
        assert!(Graph::complete(5).is_chordal());
    }

    #[test]
    fn bipartitions() {
        assert_eq!(Graph::cycle(6).bipartition(), Some((set(&[0, 2, 4]), set(&[1, 3, 5]))));
        assert_eq!(Graph::cycle(5).bipartition(), None);
        let (a, b) = Graph::complete_bipartite(2, 3).bipartition().unwrap();
        assert_eq!((a.len(), b.len()), (2, 3));
    }

    #[test]
    fn dominating_clique_examples() {
        assert_eq!(Graph::star(4).dominating_cliques(1), vec![set(&[0])]);
        assert_eq!(Graph::path(4).dominating_cliques(2), vec![set(&[1, 2])]);
        assert!(Graph::cycle(6).dominating_cliques(3).is_empty());
    }

    #[test]
    fn triangle_freeness() {
        assert!(Graph::cycle(5).is_triangle_free());
        assert!(!Graph::complete(4).is_triangle_free());
        assert!(Graph::book(3).is_triangle_free());
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::from_edges(3, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::from_edges(3, &[(0, 1), (1, 0)]), Err(Error::MultiEdge(0, 1)));
        assert_eq!(Graph::from_edges(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, order: 3 }));
        assert_eq!(Graph::empty(65), Err(Error::OrderTooLarge(65)));
    }

    #[test]
    fn vertex_set_order_is_lexicographic_on_ids() {
        assert!(set(&[0, 3]) < set(&[1, 2]));
        assert!(set(&[0]) < set(&[0, 1]));
        assert!(set(&[1, 3]) < set(&[2]));
    }

    #[test]
    fn induced_relabels() {
        let (h, map) = Graph::path(5).induced(set(&[1, 2, 4]));
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn named_graphs() {
        assert_eq!(Graph::book(1), Graph::from_edges(4, &[(0, 1), (0, 2), (2, 3), (3, 1)]).unwrap());
        assert!(Graph::book(1).is_cycle());
        assert_eq!(Graph::book(3).order(), 8);
        let p = Graph::petersen();
        assert_eq!((p.edge_count(), p.max_degree(), p.min_degree()), (15, 3, 3));
        assert_eq!(Graph::wheel(5).max_degree(), 5);
    }
}
