//! Membership in the class of graphs whose safe number equals the connected
//! safe number for every weight function.
//!
//! For connected bipartite graphs the class is exactly: even cycles, double
//! stars, books `B_m`, `K_{3,3}` minus an edge, and the two-block families
//! `D(m,n;p,q)` / `D*(m,n;p,q)` under the parameter conditions checked by
//! [`d_params_member`]. For connected chordal graphs membership is
//! equivalent to `diam(G) <= 3`, and also to having a dominating clique.
//! Outside those two classes only cycles and graphs with a universal vertex
//! are decided.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Member,
    NonMember,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    EvenCycle,
    DoubleStar,
    Book,
    K33MinusEdge,
    DFamily,
    DStarFamily,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FamilyParams {
    /// `D(m,n;p,q)` / `D*(m,n;p,q)` parameters, normalized. Double stars
    /// use their `D(0,0;p,q)` reading.
    D {
        m: usize,
        n: usize,
        p: usize,
        q: usize,
    },
    Book {
        pages: usize,
    },
    Cycle {
        length: usize,
    },
    Chordal {
        diameter: usize,
        #[serde(rename = "dominatingClique")]
        dominating_clique: Option<VertexSet>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyClassification {
    pub graph6: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<Family>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<FamilyParams>,
    /// Rule that decided the verdict, e.g. `"even-cycle"`.
    pub reason: String,
}

impl FamilyClassification {
    fn new(g: &Graph, verdict: Verdict, family: Option<Family>, params: Option<FamilyParams>, reason: &str) -> Self {
        FamilyClassification {
            graph6: graph6::encode(g).unwrap_or_default(),
            verdict,
            family,
            params,
            reason: reason.to_string(),
        }
    }
}

/// A tree of diameter at most three; `K1` and `K2` qualify.
pub fn is_double_star(g: &Graph) -> bool {
    g.order() > 0 && g.is_tree() && g.diameter().is_ok_and(|d| d <= 3)
}

/// Number of pages `m` when `g` is the book `B_m = K_{1,m} □ P_2`: an edge
/// `ab` (the spine) plus `m` disjoint 4-cycles `a a_i b_i b` through it.
pub fn is_book(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 4 || n % 2 == 1 {
        return None;
    }
    let m = (n - 2) / 2;
    if g.edge_count() != 3 * m + 1 || !g.is_connected() {
        return None;
    }
    let spine = g.edges().find(|&(a, b)| {
        if g.degree(a) != m + 1 || g.degree(b) != m + 1 {
            return false;
        }
        let left = g.neighbors(a).without(b);
        let right = g.neighbors(b).without(a);
        left.is_disjoint(right)
            && g.is_independent(left)
            && g.is_independent(right)
            && left.iter().all(|u| g.degree(u) == 2 && g.neighbors(u).intersection(right).len() == 1)
            && right.iter().all(|u| g.degree(u) == 2 && g.neighbors(u).intersection(left).len() == 1)
    });
    spine.map(|_| m)
}

fn is_k33_minus_edge(g: &Graph) -> bool {
    g.order() == 6
        && g.edge_count() == 8
        && g.is_connected()
        && g.bipartition().is_some_and(|(a, b)| a.len() == 3 && b.len() == 3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DVariant {
    D,
    #[serde(rename = "D*")]
    DStar,
}

impl fmt::Display for DVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DVariant::D => "D",
            DVariant::DStar => "D*",
        })
    }
}

/// A labelled reading of a graph as `D(m,n;p,q)` or `D*(m,n;p,q)`.
///
/// `X1 ∪ Y1` and `X2 ∪ Y2` are complete bipartite, `|X1| = m`,
/// `|Y1| = m+1`, `|X2| = n+1`, `|Y2| = n`; `P` hangs off `y ∈ Y1` and `Q`
/// off `x ∈ X2`; there are no `X1`-`Y2` edges; `X2 ∪ Y1` is complete
/// bipartite (`D`) or the double star with central edge `xy` (`D*`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DDecomposition {
    pub variant: DVariant,
    pub x1: VertexSet,
    pub x2: VertexSet,
    pub p: VertexSet,
    pub y1: VertexSet,
    pub y2: VertexSet,
    pub q: VertexSet,
    pub x: usize,
    pub y: usize,
}

impl DDecomposition {
    /// Raw `(m, n, p, q)` of this labelling.
    pub fn params(&self) -> (usize, usize, usize, usize) {
        (self.x1.len(), self.y2.len(), self.p.len(), self.q.len())
    }

    /// Exact check of the defining conditions against `g`: the parts
    /// partition `V(G)` and the edge set is precisely the one prescribed.
    pub fn check(&self, g: &Graph) -> bool {
        let parts = [self.x1, self.x2, self.p, self.y1, self.y2, self.q];
        let mut seen = VertexSet::EMPTY;
        for part in parts {
            if !part.is_disjoint(seen) {
                return false;
            }
            seen = seen.union(part);
        }
        let (m, n, _, _) = self.params();
        if seen != g.vertices()
            || self.y1.len() != m + 1
            || self.x2.len() != n + 1
            || !self.x2.contains(self.x)
            || !self.y1.contains(self.y)
        {
            return false;
        }
        let expected = self.expected_graph(g.order());
        expected.as_ref() == Some(g)
    }

    fn expected_graph(&self, order: usize) -> Option<Graph> {
        let mut edges = Vec::new();
        let mut join = |a: VertexSet, b: VertexSet| {
            for u in a.iter() {
                for v in b.iter() {
                    edges.push((u, v));
                }
            }
        };
        join(self.x1, self.y1);
        join(self.x2, self.y2);
        join(self.p, VertexSet::singleton(self.y));
        join(self.q, VertexSet::singleton(self.x));
        match self.variant {
            DVariant::D => join(self.x2, self.y1),
            DVariant::DStar => {
                join(VertexSet::singleton(self.x), self.y1);
                join(self.x2.without(self.x), VertexSet::singleton(self.y));
            }
        }
        Graph::from_edges(order, &edges).ok()
    }
}

/// Builds `D(m,n;p,q)` or `D*(m,n;p,q)` with vertices numbered
/// `X1, X2, P, Y1, Y2, Q` in that order; `x` is the first vertex of `X2`
/// and `y` the first of `Y1`.
pub fn construct_d(variant: DVariant, m: usize, n: usize, p: usize, q: usize) -> (Graph, DDecomposition) {
    let mut next = 0;
    let mut block = |k: usize| {
        let s = VertexSet::from_bits(((1u64 << k) - 1) << next);
        next += k;
        s
    };
    let (x1, x2, pp, y1, y2, qq) = (block(m), block(n + 1), block(p), block(m + 1), block(n), block(q));
    let d = DDecomposition { variant, x1, x2, p: pp, y1, y2, q: qq, x: x2.min().unwrap(), y: y1.min().unwrap() };
    let g = d.expected_graph(next).expect("construction is a simple graph");
    (g, d)
}

/// Canonical parameters. `D(m,n;p,q) ≅ D(n,m;q,p)`, and for `n = 0` or
/// `m = n` also `≅ D(m,n;q,p)`; `D*` is symmetric in `(m,n)` and in
/// `(p,q)` separately; `D = D*` whenever `m = 0` or `n = 0`. The result
/// has `m >= n`, and `p <= q` wherever a symmetry allows it.
pub fn normalize_d(
    variant: DVariant,
    m: usize,
    n: usize,
    p: usize,
    q: usize,
) -> (DVariant, usize, usize, usize, usize) {
    let variant = if m == 0 || n == 0 { DVariant::D } else { variant };
    match variant {
        DVariant::DStar => (variant, m.max(n), m.min(n), p.min(q), p.max(q)),
        DVariant::D => {
            let (m, n, p, q) = if m < n { (n, m, q, p) } else { (m, n, p, q) };
            if n == 0 || m == n {
                (variant, m, n, p.min(q), p.max(q))
            } else {
                (variant, m, n, p, q)
            }
        }
    }
}

/// Membership for normalized parameters (`m >= n`): `m, n >= 2`; or
/// `m != 1` and `n = 0`; or `(1,1;0,0)`; or `(1,0;0,0)`.
pub fn d_params_member(m: usize, n: usize, p: usize, q: usize) -> bool {
    debug_assert!(m >= n);
    (m >= 2 && n >= 2) || (m != 1 && n == 0) || (m, n, p, q) == (1, 1, 0, 0) || (m, n, p, q) == (1, 0, 0, 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DFamilyMatch {
    pub variant: DVariant,
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub dominating_edge: (usize, usize),
    pub decomposition: DDecomposition,
}

/// Every distinct labelling of `g` as a `D`/`D*` graph found by trying each
/// dominating edge `xy` in both orientations. Each one passes
/// [`DDecomposition::check`].
pub fn d_family_readings(g: &Graph) -> Vec<DDecomposition> {
    let mut out: Vec<DDecomposition> = Vec::new();
    if g.order() < 2 || !g.is_connected() {
        return out;
    }
    let Some((side_a, _)) = g.bipartition() else { return out };
    let all = g.vertices();
    for (a, b) in g.edges() {
        for (x, y) in [(a, b), (b, a)] {
            if g.closed_neighborhood(x).union(g.closed_neighborhood(y)) != all {
                continue;
            }
            let pendants = |v: usize, other: usize| {
                g.neighbors(v).without(other).iter().filter(|&u| g.degree(u) == 1).collect::<VertexSet>()
            };
            let q = pendants(x, y);
            let p = pendants(y, x);
            let core = all.difference(p).difference(q);
            let x_side = if side_a.contains(x) { side_a } else { all.difference(side_a) };
            let xs = core.intersection(x_side);
            let ys = core.difference(x_side);
            let universal = |from: VertexSet, to: VertexSet| {
                from.iter().filter(|&u| to.is_subset(g.neighbors(u))).collect::<VertexSet>()
            };
            let ux = universal(xs, ys);
            let uy = universal(ys, xs);
            let mut candidates = vec![
                // n = 0: X2 = {x}, Y2 empty
                (DVariant::D, xs.without(x), VertexSet::singleton(x), ys, VertexSet::EMPTY),
                // m = 0: X1 empty, Y1 = {y}
                (DVariant::D, VertexSet::EMPTY, xs, VertexSet::singleton(y), ys.without(y)),
                (DVariant::D, xs.difference(ux), ux, uy, ys.difference(uy)),
            ];
            let mut blocks = g.components(core.without(x).without(y));
            if blocks.len() <= 2 {
                blocks.resize(2, VertexSet::EMPTY);
                for (b1, b2) in [(blocks[0], blocks[1]), (blocks[1], blocks[0])] {
                    candidates.push((
                        DVariant::DStar,
                        b1.intersection(xs),
                        b2.intersection(xs).with(x),
                        b1.intersection(ys).with(y),
                        b2.intersection(ys),
                    ));
                }
            }
            for (variant, x1, x2, y1, y2) in candidates {
                let d = DDecomposition { variant, x1, x2, p, y1, y2, q, x, y };
                if d.check(g) && !out.contains(&d) {
                    out.push(d);
                }
            }
        }
    }
    out
}

/// The reading with the least normalized `(variant, m, n, p, q)`.
pub fn recognize_d_family(g: &Graph) -> Option<DFamilyMatch> {
    d_family_readings(g)
        .into_iter()
        .map(|d| {
            let (m, n, p, q) = d.params();
            (normalize_d(d.variant, m, n, p, q), d)
        })
        .min_by(|a, b| a.0.cmp(&b.0))
        .map(|((variant, m, n, p, q), d)| DFamilyMatch {
            variant,
            m,
            n,
            p,
            q,
            dominating_edge: (d.x, d.y),
            decomposition: d,
        })
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

pub fn classify_bipartite(g: &Graph) -> Result<FamilyClassification> {
    require_connected(g)?;
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let member =
        |family, params, reason| Ok(FamilyClassification::new(g, Verdict::Member, Some(family), params, reason));
    let d_params = |m: &DFamilyMatch| FamilyParams::D { m: m.m, n: m.n, p: m.p, q: m.q };
    let n = g.order();
    if g.is_cycle() && n >= 4 {
        return member(Family::EvenCycle, Some(FamilyParams::Cycle { length: n }), "even-cycle");
    }
    if is_double_star(g) {
        let params = recognize_d_family(g).map(|m| d_params(&m));
        return member(Family::DoubleStar, params, "double-star");
    }
    if let Some(pages) = is_book(g) {
        return member(Family::Book, Some(FamilyParams::Book { pages }), "book");
    }
    if is_k33_minus_edge(g) {
        return member(Family::K33MinusEdge, Some(FamilyParams::D { m: 1, n: 1, p: 0, q: 0 }), "k33-minus-edge");
    }
    if let Some(m) = recognize_d_family(g) {
        let family = match m.variant {
            DVariant::D => Family::DFamily,
            DVariant::DStar => Family::DStarFamily,
        };
        let (verdict, reason) = if d_params_member(m.m, m.n, m.p, m.q) {
            (Verdict::Member, "d-family-member")
        } else {
            (Verdict::NonMember, "d-family-parameters-excluded")
        };
        return Ok(FamilyClassification::new(g, verdict, Some(family), Some(d_params(&m)), reason));
    }
    Ok(FamilyClassification::new(g, Verdict::NonMember, None, None, "bipartite-not-listed"))
}

/// Decides by diameter and cross-checks against the existence of a
/// dominating clique; if the two ever disagree the verdict is `UNDECIDED`
/// with reason `"chordal-criteria-disagree"`.
pub fn classify_chordal(g: &Graph) -> Result<FamilyClassification> {
    require_connected(g)?;
    if !g.is_chordal() {
        return Err(Error::NotChordal);
    }
    let diameter = g.diameter()?;
    let clique = g.dominating_cliques(g.order()).into_iter().next();
    let params = Some(FamilyParams::Chordal { diameter, dominating_clique: clique });
    let (verdict, reason) = match (diameter <= 3, clique.is_some()) {
        (true, true) => (Verdict::Member, "chordal-diameter-le-3"),
        (false, false) => (Verdict::NonMember, "chordal-diameter-ge-4"),
        _ => (Verdict::Undecided, "chordal-criteria-disagree"),
    };
    Ok(FamilyClassification::new(g, verdict, None, params, reason))
}

pub fn classify(g: &Graph) -> Result<FamilyClassification> {
    require_connected(g)?;
    if g.is_bipartite() {
        return classify_bipartite(g);
    }
    if g.is_chordal() {
        return classify_chordal(g);
    }
    if g.is_cycle() {
        let params = Some(FamilyParams::Cycle { length: g.order() });
        return Ok(FamilyClassification::new(g, Verdict::Member, None, params, "cycle"));
    }
    if g.max_degree() + 1 == g.order() {
        return Ok(FamilyClassification::new(g, Verdict::Member, None, None, "universal-vertex"));
    }
    Ok(FamilyClassification::new(g, Verdict::Undecided, None, None, "undecided"))
}
