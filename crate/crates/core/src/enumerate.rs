//! Connected graphs of small order, one per isomorphism class.
//!
//! Every connected graph on `n >= 2` vertices has a vertex whose removal
//! leaves it connected, so all graphs of order `n` arise by joining a new
//! vertex to a nonempty subset of some connected graph of order `n - 1`.
//! Bipartite, chordal and triangle-free graphs are closed under deleting
//! vertices, so the same holds inside each filtered class. Duplicates are
//! removed with an exact canonical form.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFilter {
    All,
    Bipartite,
    Chordal,
    TriangleFree,
}

impl GraphFilter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            GraphFilter::All => true,
            GraphFilter::Bipartite => g.is_bipartite(),
            GraphFilter::Chordal => g.is_chordal(),
            GraphFilter::TriangleFree => g.is_triangle_free(),
        }
    }
}

impl fmt::Display for GraphFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFilter::All => "all",
            GraphFilter::Bipartite => "bipartite",
            GraphFilter::Chordal => "chordal",
            GraphFilter::TriangleFree => "triangle-free",
        })
    }
}

impl FromStr for GraphFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<GraphFilter> {
        match s {
            "all" => Ok(GraphFilter::All),
            "bipartite" => Ok(GraphFilter::Bipartite),
            "chordal" => Ok(GraphFilter::Chordal),
            "triangle-free" => Ok(GraphFilter::TriangleFree),
            other => Err(Error::InvalidParams(format!(
                "unknown filter {other:?} (expected all, bipartite, chordal or triangle-free)"
            ))),
        }
    }
}

/// Canonical code and relabelled graph. The code packs the upper triangle
/// of the adjacency matrix in graph6 order (`(0,1) (0,2) (1,2) (0,3) ...`)
/// and is minimised over all orderings compatible with the stable colour
/// refinement of the degree partition. Supports orders up to 11.
pub fn canonical_form(g: &Graph) -> (u64, Graph) {
    let n = g.order();
    assert!(n <= 11, "canonical form supports at most 11 vertices");
    let colors = refine(g);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let max = colors.iter().copied().max().map_or(0, |c| c + 1);
    for c in 0..max {
        cells.push((0..n).filter(|&v| colors[v] == c).collect());
    }
    let slots: Vec<usize> = cells.iter().enumerate().flat_map(|(i, c)| std::iter::repeat_n(i, c.len())).collect();
    let mut search = Canon { g, cells, slots, order: Vec::with_capacity(n), used: 0, best: None };
    search.run(0);
    let (code, order) = search.best.unwrap_or((0, Vec::new()));
    let mut perm = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    (code, g.permuted(&perm))
}

/// Iterated colour refinement starting from degrees; colours are ranks of
/// sorted signatures, so the result does not depend on vertex labels.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colors = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

struct Canon<'g> {
    g: &'g Graph,
    cells: Vec<Vec<usize>>,
    /// `slots[i]` is the cell that position `i` must be filled from.
    slots: Vec<usize>,
    order: Vec<usize>,
    used: u64,
    best: Option<(u64, Vec<usize>)>,
}

impl Canon<'_> {
    /// Places a vertex of the next cell at position `j`, appending its `j`
    /// adjacency bits; prefixes already above the best code are cut.
    fn run(&mut self, code: u64) {
        let j = self.order.len();
        let n = self.g.order();
        if j == n {
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        let cell = self.slots[j];
        for k in 0..self.cells[cell].len() {
            let v = self.cells[cell][k];
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut next = code;
            for &u in &self.order {
                next = next << 1 | self.g.has_edge(u, v) as u64;
            }
            if let Some((best, _)) = &self.best {
                let shift = total_bits(n) - total_bits(j + 1);
                if next > best >> shift {
                    continue;
                }
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.run(next);
            self.used &= !(1 << v);
            self.order.pop();
        }
    }
}

fn total_bits(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// All connected graphs of the given order (1..=8) accepted by `filter`,
/// canonically labelled and sorted by canonical code.
pub fn enumerate_connected_graphs(order: usize, filter: GraphFilter) -> Result<Vec<Graph>> {
    Ok(enumerate_up_to(order, filter)?.pop().unwrap_or_default())
}

/// Element `k` holds the graphs of order `k + 1`.
pub fn enumerate_up_to(max_order: usize, filter: GraphFilter) -> Result<Vec<Vec<Graph>>> {
    if max_order == 0 || max_order > MAX_ENUMERATION_ORDER {
        return Err(Error::EnumerationOrder(max_order));
    }
    let mut levels = vec![vec![Graph::complete(1)]];
    for n in 2..=max_order {
        let mut seen = HashSet::new();
        let mut next: Vec<(u64, Graph)> = Vec::new();
        for parent in levels.last().unwrap() {
            let rows = parent.adjacency_rows();
            for subset in 1u64..(1 << (n - 1)) {
                let mut adj: Vec<u64> =
                    rows.iter().enumerate().map(|(v, &r)| r | ((subset >> v & 1) << (n - 1))).collect();
                adj.push(subset);
                let child = Graph::from_adjacency(adj).expect("valid extension");
                if !filter.accepts(&child) {
                    continue;
                }
                let (code, canon) = canonical_form(&child);
                if seen.insert(code) {
                    next.push((code, canon));
                }
            }
        }
        next.sort_by_key(|(code, _)| *code);
        levels.push(next.into_iter().map(|(_, g)| g).collect());
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_label_independent() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let (code, canon) = canonical_form(&g);
        for perm in [[5, 4, 3, 2, 1, 0], [2, 0, 4, 1, 5, 3], [1, 2, 3, 4, 5, 0]] {
            let h = g.permuted(&perm);
            assert_eq!(canonical_form(&h), (code, canon.clone()));
        }
        assert_ne!(canonical_form(&Graph::path(6)).0, code);
    }

    #[test]
    fn tiny_orders() {
        assert_eq!(enumerate_connected_graphs(1, GraphFilter::All).unwrap(), vec![Graph::complete(1)]);
        let three = enumerate_connected_graphs(3, GraphFilter::All).unwrap();
        assert_eq!(three.len(), 2);
        assert!(three.iter().any(|g| g.edge_count() == 2) && three.iter().any(|g| g.edge_count() == 3));
        assert_eq!(enumerate_connected_graphs(0, GraphFilter::All), Err(Error::EnumerationOrder(0)));
        assert_eq!(enumerate_connected_graphs(9, GraphFilter::All), Err(Error::EnumerationOrder(9)));
    }

    #[test]
    fn order_four_bipartite_graphs() {
        // P4, K_{1,3} and C4
        let four = enumerate_connected_graphs(4, GraphFilter::Bipartite).unwrap();
        let mut edges: Vec<usize> = four.iter().map(Graph::edge_count).collect();
        edges.sort();
        assert_eq!(edges, vec![3, 3, 4]);
        assert!(four.iter().any(|g| g.is_cycle()));
        assert!(four.iter().any(|g| g.max_degree() == 3));
    }

    #[test]
    fn counts_up_to_seven() {
        let counts = |f| enumerate_up_to(7, f).unwrap().iter().map(Vec::len).collect::<Vec<_>>();
        assert_eq!(counts(GraphFilter::All), vec![1, 1, 2, 6, 21, 112, 853]);
        assert_eq!(counts(GraphFilter::Bipartite), vec![1, 1, 1, 3, 5, 17, 44]);
        assert_eq!(counts(GraphFilter::Chordal), vec![1, 1, 2, 5, 15, 58, 272]);
        assert_eq!(counts(GraphFilter::TriangleFree), vec![1, 1, 1, 3, 6, 19, 59]);
    }

    #[test]
    fn filter_names_round_trip() {
        for f in [GraphFilter::All, GraphFilter::Bipartite, GraphFilter::Chordal, GraphFilter::TriangleFree] {
            assert_eq!(f.to_string().parse::<GraphFilter>().unwrap(), f);
        }
        assert!("planar".parse::<GraphFilter>().is_err());
    }
}
