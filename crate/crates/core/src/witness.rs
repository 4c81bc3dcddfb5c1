//! Weightings with `s(G,w) < cs(G,w)` built from contraction patterns.
//!
//! Each pattern comes with an explicit weight function that separates the
//! two parameters once its free parameter `α` is large enough. Rather than
//! trusting an asymptotic bound, every candidate is checked with the exact
//! solver and `α` is doubled until the check passes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::contraction::{find_pattern, MatchParams, Pattern, PatternMatch, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::{Rational, WeightFn};
use crate::solver::{is_safe_set, safe_numbers, SOLVER_LIMIT};

pub const CERTIFICATE_SCHEMA_VERSION: u32 = 1;

/// Free parameters of the constructions. Unused fields are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessParams {
    pub alpha: Rational,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps3: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps4: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps5: Option<Rational>,
}

impl WitnessParams {
    pub fn with_alpha(alpha: Rational) -> WitnessParams {
        WitnessParams { alpha, eps: None, eps3: None, eps4: None, eps5: None }
    }

    /// Default parameters for `m` on a graph of order `n`:
    /// `ε = 1/4` for `H2`; for `K_{m,n}`, `ε = 1/4` when `|Z| <= 4` and
    /// `1/|Z|` otherwise; for `H3`, `ε3 = 1/(2n)`, `ε5 = 1/(8n²)`,
    /// `ε4 = 1/(16n³)`.
    pub fn defaults(m: &PatternMatch, n: usize, alpha: Rational) -> WitnessParams {
        let mut p = WitnessParams::with_alpha(alpha);
        let n = n as i64;
        match m.pattern {
            Pattern::H1 => {}
            Pattern::H2 => p.eps = Some(Rational::new(1, 4)),
            Pattern::H3 => {
                p.eps3 = Some(Rational::new(1, 2 * n));
                p.eps5 = Some(Rational::new(1, 8 * n * n));
                p.eps4 = Some(Rational::new(1, 16 * n * n * n));
            }
            Pattern::Kmn => {
                let z = m.params.big_bag.map_or(1, |i| m.bags[i].len()) as i64;
                p.eps = Some(if z <= 4 { Rational::new(1, 4) } else { Rational::new(1, z) });
            }
        }
        p
    }

    /// Checks the constraints each construction places on its parameters.
    pub fn validate(&self, m: &PatternMatch, n: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        let one = Rational::one();
        if self.alpha <= one {
            return bad(format!("alpha must exceed 1, got {}", self.alpha));
        }
        let need = |x: &Option<Rational>, name: &str| {
            x.clone().ok_or_else(|| Error::InvalidParams(format!("{} needs {name}", m.pattern)))
        };
        match m.pattern {
            Pattern::H1 => Ok(()),
            Pattern::H2 => {
                let eps = need(&self.eps, "eps")?;
                if !eps.is_positive() || eps >= one {
                    return bad(format!("H2 needs 0 < eps < 1, got {eps}"));
                }
                Ok(())
            }
            Pattern::H3 => {
                let (e3, e4, e5) = (need(&self.eps3, "eps3")?, need(&self.eps4, "eps4")?, need(&self.eps5, "eps5")?);
                let nn = Rational::from_integer(n as i64);
                let chain = [
                    Rational::one() / &nn,
                    e3.clone(),
                    Rational::from_integer(2) * &nn * &e5,
                    Rational::from_integer(2) * &nn * &nn * &e4,
                    Rational::zero(),
                ];
                if chain.windows(2).any(|w| w[0] <= w[1]) {
                    return bad(format!("H3 needs 1/n > eps3 > 2n*eps5 > 2n^2*eps4 > 0 (n = {n})"));
                }
                Ok(())
            }
            Pattern::Kmn => {
                if let Some(i) = m.params.big_bag {
                    let eps = need(&self.eps, "eps")?;
                    let spread = &eps * &Rational::from_integer(m.bags[i].len() as i64 - 1);
                    if !spread.is_positive() || spread >= one {
                        return bad(format!("KMN needs 0 < eps(|Z|-1) < 1, got {spread}"));
                    }
                }
                Ok(())
            }
        }
    }
}

fn expect(m: &PatternMatch, p: Pattern) -> Result<()> {
    if m.pattern != p {
        return Err(Error::PatternMismatch { expected: p.to_string(), got: m.pattern.to_string() });
    }
    Ok(())
}

/// Least `(a, b)` with `a ∈ x`, `b ∈ y` and `ab` an edge.
fn first_edge(g: &Graph, x: VertexSet, y: VertexSet) -> Result<(usize, usize)> {
    x.iter()
        .find_map(|a| g.neighbors(a).intersection(y).min().map(|b| (a, b)))
        .ok_or_else(|| Error::InvalidPartition("bags that must be adjacent are not".into()))
}

/// `w(v1) = w(v2) = α+1`, `w(v4) = w(v5) = α`, `1/|V3|` on `V3`, 0 elsewhere.
pub fn weights_for_h1(g: &Graph, m: &PatternMatch, params: &WitnessParams) -> Result<WeightFn> {
    expect(m, Pattern::H1)?;
    params.validate(m, g.order())?;
    let b = &m.bags;
    let (v1, v2) = first_edge(g, b[0], b[1])?;
    let (v4, v5) = first_edge(g, b[3], b[4])?;
    let a = &params.alpha;
    let mut w = vec![Rational::zero(); g.order()];
    w[v1] = a + &Rational::one();
    w[v2] = w[v1].clone();
    w[v4] = a.clone();
    w[v5] = a.clone();
    let share = Rational::new(1, b[2].len() as i64);
    for v in b[2].iter() {
        w[v] = share.clone();
    }
    WeightFn::new(w)
}

/// `w(v1) = w(v3) = w(v5) = α`, `w(v2) = α+1`, `w(v4) = α − (1+ε)(|V4|−1)`,
/// `1+ε` on the rest of `V4`, 0 elsewhere. `v1 v2` and the `V2`-`V3` edge
/// are the unique edges between those bags.
pub fn weights_for_h2(g: &Graph, m: &PatternMatch, params: &WitnessParams) -> Result<WeightFn> {
    expect(m, Pattern::H2)?;
    params.validate(m, g.order())?;
    let b = &m.bags;
    let (v1, v2) = first_edge(g, b[0], b[1])?;
    let (v3, _) = first_edge(g, b[2], b[1])?;
    let (v4, v5) = first_edge(g, b[3], b[4])?;
    let a = &params.alpha;
    let eps = params.eps.clone().unwrap();
    let heavy = &Rational::one() + &eps;
    let top = a - &(&heavy * &Rational::from_integer(b[3].len() as i64 - 1));
    if !top.is_positive() {
        return Err(Error::InvalidParams(format!("w(v4) = {top} is not positive")));
    }
    let mut w = vec![Rational::zero(); g.order()];
    for v in b[3].iter() {
        w[v] = heavy.clone();
    }
    w[v1] = a.clone();
    w[v3] = a.clone();
    w[v5] = a.clone();
    w[v2] = a + &Rational::one();
    w[v4] = top;
    WeightFn::new(w)
}

/// `w(v1) = α`, `w(v2) = α+1`, `1+ε3` on `V3∖{v3}`, `ε4` on `V4∖{v4}`,
/// `ε5` on `V5∖{v5}`, with `v3`, `v4`, `v5` topped up so that
/// `w(V3) = w(V4) = w(D) = α` for a component `D` of `G[V5]` touching both
/// `V2` and `v4`.
pub fn weights_for_h3(g: &Graph, m: &PatternMatch, params: &WitnessParams) -> Result<WeightFn> {
    expect(m, Pattern::H3)?;
    params.validate(m, g.order())?;
    let b = &m.bags;
    let v4 = m.params.v4.ok_or_else(|| Error::InvalidPartition("H3 match without v4".into()))?;
    let v1 = b[0].min().unwrap();
    let v2 = b[1].min().unwrap();
    let v3 = g
        .neighbors(v4)
        .intersection(b[2])
        .min()
        .ok_or_else(|| Error::InvalidPartition("v4 has no neighbour in bag 3".into()))?;
    let d = h3_component(g, m)
        .ok_or_else(|| Error::InvalidPartition("no component of bag 5 touches both bag 2 and v4".into()))?;
    let v5 = g.neighbors(v4).intersection(d).min().unwrap();

    let a = &params.alpha;
    let (e3, e4, e5) = (params.eps3.clone().unwrap(), params.eps4.clone().unwrap(), params.eps5.clone().unwrap());
    let mut w = vec![Rational::zero(); g.order()];
    w[v1] = a.clone();
    w[v2] = a + &Rational::one();
    for (bag, x) in [(b[2], &Rational::one() + &e3), (b[3], e4), (b[4], e5)] {
        for v in bag.iter() {
            w[v] = x.clone();
        }
    }
    for (v, target) in [(v3, b[2]), (v4, b[3]), (v5, d)] {
        let rest: Rational = target.without(v).iter().map(|u| &w[u]).sum();
        let top = a - &rest;
        if !top.is_positive() {
            return Err(Error::InvalidParams(format!("top-up weight {top} of vertex {v} is not positive")));
        }
        w[v] = top;
    }
    WeightFn::new(w)
}

/// First component of `G[V5]` adjacent to both `V2` and `v4`.
fn h3_component(g: &Graph, m: &PatternMatch) -> Option<VertexSet> {
    let v4 = m.params.v4?;
    let b = m.bags.get(4).zip(m.bags.get(1))?;
    g.components(*b.0).into_iter().find(|&d| g.sets_adjacent(d, *b.1) && !g.neighbors(v4).is_disjoint(d))
}

/// When no component of `G[V5]` meets both `V2` and `V4`, the components
/// touching only `V2` (`W`) and only `V4` (`U`) give an `H1` contraction
/// `W, V2, V1 ∪ V3, V4, U`.
pub fn h1_from_h3(g: &Graph, m: &PatternMatch) -> Option<PatternMatch> {
    if m.pattern != Pattern::H3 || m.bags.len() != 5 {
        return None;
    }
    let b = &m.bags;
    let (mut w, mut u) = (VertexSet::EMPTY, VertexSet::EMPTY);
    for d in g.components(b[4]) {
        match (g.sets_adjacent(d, b[1]), g.sets_adjacent(d, b[3])) {
            (true, false) => w = w.union(d),
            (false, true) => u = u.union(d),
            _ => return None,
        }
    }
    let h1 = PatternMatch {
        pattern: Pattern::H1,
        bags: vec![w, b[1], b[0].union(b[2]), b[3], u],
        params: MatchParams::default(),
    };
    h1.validate(g).ok().map(|()| h1)
}

/// All ones when every bag is a singleton. Otherwise the least vertex `z`
/// of the big bag `Z` gets `α − ε(|Z|−1)`, the rest of `Z` gets `ε`, and
/// every other vertex gets `α`.
pub fn weights_for_kmn(g: &Graph, m: &PatternMatch, params: &WitnessParams) -> Result<WeightFn> {
    expect(m, Pattern::Kmn)?;
    let Some(i) = m.params.big_bag else {
        return Ok(WeightFn::ones(g.order()));
    };
    params.validate(m, g.order())?;
    let z = m.bags[i];
    let a = &params.alpha;
    let eps = params.eps.clone().unwrap();
    let mut w = vec![a.clone(); g.order()];
    for v in z.iter() {
        w[v] = eps.clone();
    }
    let least = z.min().unwrap();
    w[least] = a - &(&eps * &Rational::from_integer(z.len() as i64 - 1));
    WeightFn::new(w)
}

pub fn weights_for(g: &Graph, m: &PatternMatch, params: &WitnessParams) -> Result<WeightFn> {
    match m.pattern {
        Pattern::H1 => weights_for_h1(g, m, params),
        Pattern::H2 => weights_for_h2(g, m, params),
        Pattern::H3 => weights_for_h3(g, m, params),
        Pattern::Kmn => weights_for_kmn(g, m, params),
    }
}

/// The safe set the construction is designed around: `V2 ∪ V4` for the
/// five-bag patterns, and the union of the first side's bags for `K_{m,n}`.
pub fn designed_safe_set(m: &PatternMatch) -> VertexSet {
    match m.pattern {
        Pattern::Kmn => m.bags[..m.params.m.unwrap_or(0)].iter().fold(VertexSet::EMPTY, |a, &b| a.union(b)),
        _ => m.bags[1].union(m.bags[3]),
    }
}

/// A weighting with `s(G,w) < cs(G,w)`, checkable without trusting how it
/// was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessCertificate {
    pub schema_version: u32,
    #[serde(rename = "graph6", with = "crate::graph6::as_string")]
    pub graph: Graph,
    /// `None` when the weights came from random sampling.
    pub pattern: Option<Pattern>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none", default)]
    pub source_match: Option<PatternMatch>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<WitnessParams>,
    pub weights: WeightFn,
    pub s: Rational,
    pub cs: Rational,
    pub minimum_safe_set: VertexSet,
    /// Seed of the random trial that produced the weights.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

impl WitnessCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<WitnessCertificate> {
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
    }

    /// Recomputes `s` and `cs` from the weights and checks every field.
    pub fn verify(&self) -> Result<()> {
        let reject = |msg: String| Err(Error::CertificateRejected(msg));
        let g = &self.graph;
        self.weights.check_order(g.order())?;
        let (s, cs) = safe_numbers(g, &self.weights)?;
        if s.optimum != self.s || cs.optimum != self.cs {
            return reject(format!(
                "recomputed s = {}, cs = {}; certificate claims s = {}, cs = {}",
                s.optimum, cs.optimum, self.s, self.cs
            ));
        }
        if self.s >= self.cs {
            return reject(format!("s = {} is not below cs = {}", self.s, self.cs));
        }
        if self.minimum_safe_set.is_empty() || !is_safe_set(g, &self.weights, self.minimum_safe_set)? {
            return reject("minimumSafeSet is not a safe set".into());
        }
        if self.weights.weight_of(self.minimum_safe_set) != self.s {
            return reject("minimumSafeSet does not have weight s".into());
        }
        if g.is_connected_set(self.minimum_safe_set) {
            return reject("minimumSafeSet is connected".into());
        }
        if let Some(m) = &self.source_match {
            m.validate(g)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Search nodes per pattern.
    pub budget: u64,
    /// `α` starts at 2 and is doubled at most this many times.
    pub max_doublings: u32,
    pub random_trials: u32,
    pub seed: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { budget: DEFAULT_BUDGET, max_doublings: 10, random_trials: 256, seed: 0x5afe_5e75 }
    }
}

/// Searches for a certificate that `g` is outside the stable class.
/// `None` means nothing was found within the budget; it never means that
/// `g` belongs to the class.
pub fn certify_non_membership(g: &Graph, budget: u64) -> Option<WitnessCertificate> {
    certify_with(g, &CertifyOptions { budget, ..CertifyOptions::default() })
}

pub fn certify_with(g: &Graph, opts: &CertifyOptions) -> Option<WitnessCertificate> {
    if g.order() == 0 || g.order() > SOLVER_LIMIT || !g.is_connected() {
        return None;
    }
    for pattern in Pattern::ALL {
        let Some(m) = find_pattern(g, pattern, opts.budget) else { continue };
        if let Some(cert) = certify_match(g, &m, opts.max_doublings) {
            return Some(cert);
        }
    }
    random_certificate(g, opts.seed, opts.random_trials)
}

/// Runs the construction for one match, doubling `α` from 2 until the
/// solver confirms `s < cs`. An `H3` match without a component of bag 5
/// touching both bag 2 and `v4` is certified through [`h1_from_h3`].
pub fn certify_match(g: &Graph, m: &PatternMatch, max_doublings: u32) -> Option<WitnessCertificate> {
    if m.pattern == Pattern::H3 && h3_component(g, m).is_none() {
        return certify_match(g, &h1_from_h3(g, m)?, max_doublings);
    }
    let mut alpha = Rational::from_integer(2);
    for _ in 0..=max_doublings {
        let params = WitnessParams::defaults(m, g.order(), alpha.clone());
        if let Ok(w) = weights_for(g, m, &params) {
            if let Some(mut cert) = separate(g, w) {
                cert.pattern = Some(m.pattern);
                cert.source_match = Some(m.clone());
                cert.params = Some(params);
                return Some(cert);
            }
        }
        // the all-ones K_{m,n} weighting does not depend on alpha
        if m.pattern == Pattern::Kmn && m.params.big_bag.is_none() {
            return None;
        }
        alpha = &alpha * &Rational::from_integer(2);
    }
    None
}

/// Integer weights drawn uniformly from `1..=n²`, one seeded generator per
/// trial so a hit can be replayed from the recorded seed alone.
pub fn random_certificate(g: &Graph, seed: u64, trials: u32) -> Option<WitnessCertificate> {
    (0..trials as u64).find_map(|t| {
        let trial_seed = seed.wrapping_add(t.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let w = random_weights(g.order(), trial_seed);
        separate(g, w).map(|mut cert| {
            cert.seed = Some(trial_seed);
            cert
        })
    })
}

pub fn random_weights(n: usize, seed: u64) -> WeightFn {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = (n * n).max(1) as i64;
    WeightFn::new((0..n).map(|_| Rational::from_integer(rng.gen_range(1..=top))).collect()).expect("positive weights")
}

fn separate(g: &Graph, w: WeightFn) -> Option<WitnessCertificate> {
    let (s, cs) = safe_numbers(g, &w).ok()?;
    (s.optimum < cs.optimum).then(|| WitnessCertificate {
        schema_version: CERTIFICATE_SCHEMA_VERSION,
        graph: g.clone(),
        pattern: None,
        source_match: None,
        params: None,
        weights: w,
        s: s.optimum,
        cs: cs.optimum,
        minimum_safe_set: s.witness_set,
        seed: None,
    })
}
