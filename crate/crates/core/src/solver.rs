//! Exact weighted safe numbers.
//!
//! A nonempty `S ⊆ V(G)` is safe when every component `C` of `G[S]`
//! weighs at least as much as every component `D` of `G − S` it touches.
//! `s(G,w)` minimises `w(S)` over safe sets, `cs(G,w)` over safe sets that
//! induce a connected subgraph.
//!
//! The search rescales the rational weights to integers sharing one
//! denominator (comparisons are invariant under positive scaling), walks
//! subsets by increasing popcount and skips any subset heavier than the
//! incumbent before evaluating the predicate.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::{Rational, WeightFn};

/// Largest order the exhaustive solver accepts.
pub const SOLVER_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SafeSetSolution {
    pub optimum: Rational,
    /// Lexicographically smallest optimal set.
    pub witness_set: VertexSet,
    pub connected_required: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_optima: Option<Vec<VertexSet>>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    pub connected: bool,
    pub collect_all: bool,
}

/// The safe-set predicate evaluated directly on rational weights.
/// `S = V(G)` is vacuously safe.
pub fn is_safe_set(g: &Graph, w: &WeightFn, s: VertexSet) -> Result<bool> {
    w.check_order(g.order())?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if !s.is_subset(g.vertices()) {
        return Err(Error::VertexOutOfRange { vertex: s.difference(g.vertices()).min().unwrap(), order: g.order() });
    }
    let inside: Vec<(VertexSet, Rational)> = g.components(s).into_iter().map(|c| (c, w.weight_of(c))).collect();
    for d in g.components(g.vertices().difference(s)) {
        let wd = w.weight_of(d);
        let touching = g.neighborhood_of(d);
        if inside.iter().any(|(c, wc)| !c.is_disjoint(touching) && *wc < wd) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `s(G,w)` with one optimal set.
pub fn safe_number(g: &Graph, w: &WeightFn) -> Result<SafeSetSolution> {
    solve(g, w, SolveOptions { connected: false, collect_all: false })
}

/// `cs(G,w)` with one optimal connected set.
pub fn connected_safe_number(g: &Graph, w: &WeightFn) -> Result<SafeSetSolution> {
    solve(g, w, SolveOptions { connected: true, collect_all: false })
}

/// Every safe set of weight exactly `s(G,w)`, sorted lexicographically.
pub fn all_minimum_safe_sets(g: &Graph, w: &WeightFn) -> Result<Vec<VertexSet>> {
    let sol = solve(g, w, SolveOptions { connected: false, collect_all: true })?;
    Ok(sol.all_optima.unwrap_or_default())
}

/// Both numbers at once.
pub fn safe_numbers(g: &Graph, w: &WeightFn) -> Result<(SafeSetSolution, SafeSetSolution)> {
    Ok((safe_number(g, w)?, connected_safe_number(g, w)?))
}

pub fn solve(g: &Graph, w: &WeightFn, opts: SolveOptions) -> Result<SafeSetSolution> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > SOLVER_LIMIT {
        return Err(Error::SolverLimit { order: n, limit: SOLVER_LIMIT });
    }
    w.check_order(n)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (witness, all) = match scale_to_integers(w) {
        Scaled::Narrow(iw) => Search::new(g, iw).run(opts),
        Scaled::Wide(iw) => Search::new(g, iw).run(opts),
        Scaled::Big(iw) => Search::new(g, iw).run(opts),
    };
    Ok(SafeSetSolution {
        optimum: w.weight_of(witness),
        witness_set: witness,
        connected_required: opts.connected,
        all_optima: all,
    })
}

enum Scaled {
    Narrow(Vec<u64>),
    Wide(Vec<u128>),
    Big(Vec<BigUint>),
}

/// Multiplies every weight by the lcm of the denominators, picking the
/// narrowest integer type whose range holds the total.
fn scale_to_integers(w: &WeightFn) -> Scaled {
    let lcm = w.as_slice().iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigUint> = w
        .as_slice()
        .iter()
        .map(|r| (r.numer() * (&lcm / r.denom())).to_biguint().expect("weights are nonnegative"))
        .collect();
    let total: BigUint = ints.iter().sum();
    if total.to_u64().is_some() {
        Scaled::Narrow(ints.iter().map(|x| x.to_u64().unwrap()).collect())
    } else if total.to_u128().is_some() {
        Scaled::Wide(ints.iter().map(|x| x.to_u128().unwrap()).collect())
    } else {
        Scaled::Big(ints)
    }
}

trait Weight: Clone + Ord + Zero + for<'a> std::ops::AddAssign<&'a Self> {}
impl<T: Clone + Ord + Zero + for<'a> std::ops::AddAssign<&'a T>> Weight for T {}

struct Search<'g, W> {
    g: &'g Graph,
    w: Vec<W>,
    full: u64,
    inside: Vec<(u64, W)>,
}

impl<'g, W: Weight> Search<'g, W> {
    fn new(g: &'g Graph, w: Vec<W>) -> Self {
        Search { g, w, full: g.vertices().bits(), inside: Vec::with_capacity(g.order()) }
    }

    fn weight(&self, s: u64) -> W {
        let mut acc = W::zero();
        for v in VertexSet::from_bits(s).iter() {
            acc += &self.w[v];
        }
        acc
    }

    fn is_safe(&mut self, s: u64) -> bool {
        self.inside.clear();
        let mut rest = s;
        while rest != 0 {
            let c = self.g.reach(rest & rest.wrapping_neg(), rest);
            rest &= !c;
            let wc = self.weight(c);
            self.inside.push((c, wc));
        }
        let mut rest = self.full & !s;
        while rest != 0 {
            let d = self.g.reach(rest & rest.wrapping_neg(), rest);
            rest &= !d;
            let wd = self.weight(d);
            let touching = self.g.neighborhood_of(VertexSet::from_bits(d)).bits();
            if self.inside.iter().any(|(c, wc)| c & touching != 0 && *wc < wd) {
                return false;
            }
        }
        true
    }

    /// For connected `S` every component of `G − S` touches `S`.
    fn is_connected_safe(&self, s: u64, ws: &W) -> bool {
        if self.g.reach(s & s.wrapping_neg(), s) != s {
            return false;
        }
        let mut rest = self.full & !s;
        while rest != 0 {
            let d = self.g.reach(rest & rest.wrapping_neg(), rest);
            rest &= !d;
            if self.weight(d) > *ws {
                return false;
            }
        }
        true
    }

    fn run(mut self, opts: SolveOptions) -> (VertexSet, Option<Vec<VertexSet>>) {
        let n = self.g.order();
        // S = V(G) is always (connected-)safe, so its weight bounds the optimum.
        let mut best = self.weight(self.full);
        let mut witness = VertexSet::from_bits(self.full);
        let mut optima: Vec<VertexSet> = Vec::new();
        for k in 1..=n {
            let mut s: u64 = (1u64 << k) - 1;
            while s <= self.full {
                let ws = self.weight(s);
                if ws <= best {
                    let ok = if opts.connected { self.is_connected_safe(s, &ws) } else { self.is_safe(s) };
                    if ok {
                        let set = VertexSet::from_bits(s);
                        if ws < best {
                            best = ws;
                            witness = set;
                            optima.clear();
                        } else if set < witness {
                            witness = set;
                        }
                        if opts.collect_all {
                            optima.push(set);
                        }
                    }
                }
                // Gosper's hack: next subset with the same popcount.
                let c = s & s.wrapping_neg();
                let r = s + c;
                s = (((r ^ s) >> 2) / c) | r;
            }
        }
        if opts.collect_all {
            optima.sort();
            (witness, Some(optima))
        } else {
            (witness, None)
        }
    }
}
