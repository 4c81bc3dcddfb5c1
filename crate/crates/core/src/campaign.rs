//! Verification campaigns over all small connected graphs of a class.
//!
//! Each sweep classifies every graph, then backs the verdict with solver
//! evidence: members are sampled with random weights (every sample must
//! give `s = cs`), non-members must receive a verified certificate. Every
//! certificate additionally goes through the quotient check: for each
//! minimum safe set `S`, `G − S` is disconnected and the bipartite quotient
//! `β(G,S)` is itself a classified non-member. Problems are collected as
//! failures; a campaign never aborts halfway.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::contraction::{beta, lift_weights, Pattern, DEFAULT_BUDGET};
use crate::enumerate::{enumerate_up_to, GraphFilter};
use crate::error::{Error, Result};
use crate::family::{classify, classify_bipartite, classify_chordal, FamilyClassification, Verdict};
use crate::graph::Graph;
use crate::graph6;
use crate::rational::{Rational, WeightFn};
use crate::solver::{all_minimum_safe_sets, safe_numbers};
use crate::witness::{certify_with, random_weights, CertifyOptions, WitnessCertificate};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sweep {
    Bipartite,
    Chordal,
    TriangleFree,
}

impl Sweep {
    pub const ALL: [Sweep; 3] = [Sweep::Bipartite, Sweep::Chordal, Sweep::TriangleFree];

    pub fn filter(self) -> GraphFilter {
        match self {
            Sweep::Bipartite => GraphFilter::Bipartite,
            Sweep::Chordal => GraphFilter::Chordal,
            Sweep::TriangleFree => GraphFilter::TriangleFree,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CampaignConfig {
    pub max_order: usize,
    pub samples: usize,
    pub seed: u64,
    pub sweeps: Vec<Sweep>,
    pub budget: u64,
    /// Attach a pendant to non-members up to this order and re-classify.
    pub pendant_check_order: usize,
    /// Include wall-clock timings; off by default so reports replay
    /// byte-for-byte.
    pub timings: bool,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            max_order: 7,
            samples: 50,
            seed: 20_240_601,
            sweeps: Sweep::ALL.to_vec(),
            budget: DEFAULT_BUDGET,
            pendant_check_order: 6,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Sample {
    pub weights: WeightFn,
    pub s: Rational,
    pub cs: Rational,
}

/// Random-weight evidence for a member. Sample `k` uses
/// `random_weights(n, sample_seed(seed, k))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SamplingEvidence {
    pub seed: u64,
    pub sample_count: usize,
    pub samples: Vec<Sample>,
    pub all_equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct QuotientCheck {
    pub minimum_safe_sets: usize,
    pub complements_disconnected: bool,
    pub quotients_non_member: bool,
    pub quotients_separate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphRecord {
    pub graph6: String,
    pub order: usize,
    pub diameter: usize,
    pub classification: FamilyClassification,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<WitnessCertificate>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sampling: Option<SamplingEvidence>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub quotient_check: Option<QuotientCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Failure {
    pub sweep: Sweep,
    pub graph6: String,
    pub kind: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepCounts {
    pub total: usize,
    pub bipartite: usize,
    pub chordal: usize,
    pub members: usize,
    pub non_members: usize,
    pub undecided: usize,
    pub certified: usize,
    pub sampled: usize,
    /// Certificates that went through the quotient check.
    pub quotient_checked: usize,
    pub pendant_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepReport {
    pub sweep: Sweep,
    pub orders: Vec<usize>,
    pub counts: SweepCounts,
    pub records: Vec<GraphRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seconds: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CampaignReport {
    pub schema_version: u32,
    pub config: CampaignConfig,
    pub sweeps: Vec<SweepReport>,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seconds: Option<f64>,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn sweep(&self, sweep: Sweep) -> Option<&SweepReport> {
        self.sweeps.iter().find(|s| s.sweep == sweep)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per graph record.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let err = |e: csv::Error| Error::Json(e.to_string());
        w.write_record([
            "sweep",
            "graph6",
            "order",
            "diameter",
            "verdict",
            "family",
            "reason",
            "pattern",
            "s",
            "cs",
            "samples",
            "all_equal",
        ])
        .map_err(err)?;
        for sweep in &self.sweeps {
            for r in &sweep.records {
                let c = &r.classification;
                let cert = r.certificate.as_ref();
                w.write_record([
                    variant_name(&sweep.sweep),
                    r.graph6.clone(),
                    r.order.to_string(),
                    r.diameter.to_string(),
                    variant_name(&c.verdict),
                    c.family.as_ref().map(variant_name).unwrap_or_default(),
                    c.reason.clone(),
                    cert.map(|c| c.pattern.map_or("RANDOM".to_string(), |p| p.to_string())).unwrap_or_default(),
                    cert.map(|c| c.s.to_string()).unwrap_or_default(),
                    cert.map(|c| c.cs.to_string()).unwrap_or_default(),
                    r.sampling.as_ref().map(|s| s.sample_count.to_string()).unwrap_or_default(),
                    r.sampling.as_ref().map(|s| s.all_equal.to_string()).unwrap_or_default(),
                ])
                .map_err(err)?;
            }
        }
        w.flush().map_err(|e| Error::Json(e.to_string()))
    }
}

/// Serialized name of a unit enum variant.
fn variant_name<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        _ => String::new(),
    }
}

/// SplitMix64 step, used to derive independent seeds.
pub fn mix_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed.wrapping_add(salt.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn sample_seed(seed: u64, k: usize) -> u64 {
    mix_seed(seed, k as u64)
}

/// Draws `count` integer weightings from `1..=n²` and compares `s` with `cs`.
pub fn sample_equality(g: &Graph, seed: u64, count: usize) -> Result<SamplingEvidence> {
    let mut samples = Vec::with_capacity(count);
    for k in 0..count {
        let weights = random_weights(g.order(), sample_seed(seed, k));
        let (s, cs) = safe_numbers(g, &weights)?;
        samples.push(Sample { weights, s: s.optimum, cs: cs.optimum });
    }
    let all_equal = samples.iter().all(|x| x.s == x.cs);
    Ok(SamplingEvidence { seed, sample_count: count, samples, all_equal })
}

/// For every minimum safe set `S` of the certificate's weighting: `G − S`
/// is disconnected, and `β(G,S)` with lifted weights separates `s` from
/// `cs` and is classified as a bipartite non-member.
pub fn check_quotients(cert: &WitnessCertificate) -> Result<QuotientCheck> {
    let g = &cert.graph;
    let sets = all_minimum_safe_sets(g, &cert.weights)?;
    let mut check = QuotientCheck {
        minimum_safe_sets: sets.len(),
        complements_disconnected: true,
        quotients_non_member: true,
        quotients_separate: true,
    };
    for s in sets {
        let rest = g.vertices().difference(s);
        check.complements_disconnected &= !g.is_connected_set(rest);
        let q = beta(g, s)?;
        check.quotients_non_member &= classify_bipartite(&q.quotient)?.verdict == Verdict::NonMember;
        let wq = lift_weights(&q, &cert.weights)?;
        let (sq, csq) = safe_numbers(&q.quotient, &wq)?;
        check.quotients_separate &= sq.optimum < csq.optimum;
    }
    Ok(check)
}

/// Classifies by sweep: the bipartite and chordal sweeps use their exact
/// deciders, the triangle-free sweep the general dispatcher.
fn classify_for(sweep: Sweep, g: &Graph) -> Result<FamilyClassification> {
    match sweep {
        Sweep::Bipartite => classify_bipartite(g),
        Sweep::Chordal => classify_chordal(g),
        Sweep::TriangleFree => classify(g),
    }
}

struct Outcome {
    record: GraphRecord,
    failures: Vec<Failure>,
    pendant_checked: usize,
}

fn examine(sweep: Sweep, g: &Graph, seed: u64, config: &CampaignConfig) -> Outcome {
    let code = graph6::encode(g).unwrap_or_default();
    let mut failures = Vec::new();
    let mut fail =
        |kind: &str, detail: String| failures.push(Failure { sweep, graph6: code.clone(), kind: kind.into(), detail });
    let diameter = g.diameter().unwrap_or(0);
    let classification = match classify_for(sweep, g) {
        Ok(c) => c,
        Err(e) => {
            fail("classification-error", e.to_string());
            FamilyClassification {
                graph6: code.clone(),
                verdict: Verdict::Undecided,
                family: None,
                params: None,
                reason: "error".into(),
            }
        }
    };
    if classification.verdict == Verdict::Undecided && sweep != Sweep::TriangleFree {
        fail("undecided", classification.reason.clone());
    }
    let long_non_cycle = diameter >= 4 && !g.is_cycle();
    if sweep == Sweep::TriangleFree && long_non_cycle && classification.verdict == Verdict::Member {
        fail("member-with-diameter-ge-4", format!("diameter {diameter}"));
    }

    let mut record = GraphRecord {
        graph6: code.clone(),
        order: g.order(),
        diameter,
        classification,
        certificate: None,
        sampling: None,
        quotient_check: None,
    };
    let opts = CertifyOptions { budget: config.budget, seed, ..CertifyOptions::default() };
    match record.classification.verdict {
        Verdict::Member => match sample_equality(g, seed, config.samples) {
            Ok(ev) => {
                if let Some(bad) = ev.samples.iter().find(|x| x.s != x.cs) {
                    fail(
                        "member-sample-separates",
                        format!("weights {:?}: s = {} < cs = {}", bad.weights, bad.s, bad.cs),
                    );
                }
                record.sampling = Some(ev);
            }
            Err(e) => fail("sampling-error", e.to_string()),
        },
        Verdict::NonMember | Verdict::Undecided => {
            let required =
                record.classification.verdict == Verdict::NonMember || (sweep == Sweep::TriangleFree && long_non_cycle);
            match certify_with(g, &opts) {
                Some(cert) => {
                    if let Err(e) = cert.verify() {
                        fail("certificate-rejected", e.to_string());
                    }
                    if sweep == Sweep::Chordal && cert.pattern != Some(Pattern::H1) {
                        fail("chordal-certificate-not-path", format!("certified via {:?}", cert.pattern));
                    }
                    record.certificate = Some(cert);
                }
                None if required => fail("no-certificate", "no certificate within budget".into()),
                None => {}
            }
        }
    }
    if let Some(cert) = &record.certificate {
        match check_quotients(cert) {
            Ok(q) => {
                if !q.complements_disconnected {
                    fail("quotient-chain", "a minimum safe set leaves G - S connected".into());
                }
                if !q.quotients_non_member || !q.quotients_separate {
                    fail("quotient-chain", "a quotient graph is not a certified non-member".into());
                }
                record.quotient_check = Some(q);
            }
            Err(e) => fail("quotient-chain", e.to_string()),
        }
    }
    let mut pendant_checked = 0;
    if record.classification.verdict == Verdict::NonMember && g.order() <= config.pendant_check_order {
        for v in 0..g.order() {
            let h = g.with_pendant(v).expect("order below the limit");
            pendant_checked += 1;
            if let Ok(c) = classify(&h) {
                if c.verdict == Verdict::Member {
                    fail("pendant-became-member", format!("pendant on vertex {v}"));
                }
            }
        }
    }
    Outcome { record, failures, pendant_checked }
}

/// Runs the configured sweeps over every connected graph of order
/// `1..=max_order` in each class.
pub fn run_characterization_campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    let mut inputs = Vec::new();
    for &sweep in &config.sweeps {
        let levels = enumerate_up_to(config.max_order, sweep.filter())?;
        inputs.push((sweep, levels.into_iter().flatten().collect::<Vec<_>>()));
    }
    Ok(run_sweeps(config, inputs))
}

/// Runs the configured sweeps over externally supplied graphs; each sweep
/// takes the connected input graphs that belong to its class.
pub fn run_campaign_on_graphs(config: &CampaignConfig, graphs: &[Graph]) -> CampaignReport {
    let inputs = config
        .sweeps
        .iter()
        .map(|&sweep| {
            let mine = graphs
                .iter()
                .filter(|g| g.order() > 0 && g.is_connected() && sweep.filter().accepts(g))
                .cloned()
                .collect();
            (sweep, mine)
        })
        .collect();
    run_sweeps(config, inputs)
}

fn run_sweeps(config: &CampaignConfig, inputs: Vec<(Sweep, Vec<Graph>)>) -> CampaignReport {
    let start = Instant::now();
    let mut sweeps = Vec::new();
    let mut failures = Vec::new();
    for (index, (sweep, graphs)) in inputs.into_iter().enumerate() {
        let sweep_start = Instant::now();
        let sweep_seed = mix_seed(config.seed, index as u64);
        let outcomes: Vec<Outcome> = graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| examine(sweep, g, mix_seed(sweep_seed, i as u64), config))
            .collect();
        let mut counts = SweepCounts { total: graphs.len(), ..SweepCounts::default() };
        let mut orders: Vec<usize> = graphs.iter().map(Graph::order).collect();
        orders.dedup();
        let mut records = Vec::with_capacity(outcomes.len());
        for (g, o) in graphs.iter().zip(outcomes) {
            counts.bipartite += g.is_bipartite() as usize;
            counts.chordal += g.is_chordal() as usize;
            match o.record.classification.verdict {
                Verdict::Member => counts.members += 1,
                Verdict::NonMember => counts.non_members += 1,
                Verdict::Undecided => counts.undecided += 1,
            }
            counts.certified += o.record.certificate.is_some() as usize;
            counts.sampled += o.record.sampling.is_some() as usize;
            counts.quotient_checked += o.record.quotient_check.is_some() as usize;
            counts.pendant_checked += o.pendant_checked;
            failures.extend(o.failures);
            records.push(o.record);
        }
        let seconds = config.timings.then(|| sweep_start.elapsed().as_secs_f64());
        sweeps.push(SweepReport { sweep, orders, counts, records, seconds });
    }
    CampaignReport {
        schema_version: REPORT_SCHEMA_VERSION,
        config: config.clone(),
        sweeps,
        failures,
        seconds: config.timings.then(|| start.elapsed().as_secs_f64()),
    }
}

/// Reads graph6 lines, skipping blank lines and `#` comments. Errors name
/// the offending line.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| graph6::decode(l.trim()).map_err(|e| Error::Graph6(format!("line {}: {e}", i + 1))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(max_order: usize, samples: usize) -> CampaignConfig {
        CampaignConfig { max_order, samples, ..CampaignConfig::default() }
    }

    #[test]
    fn order_five_bipartite_sweep() {
        let config = CampaignConfig { sweeps: vec![Sweep::Bipartite], ..small(5, 10) };
        let report = run_characterization_campaign(&config).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        let sweep = report.sweep(Sweep::Bipartite).unwrap();
        let c = &sweep.counts;
        assert_eq!(c.total, 1 + 1 + 1 + 3 + 5);
        assert_eq!(c.members + c.non_members + c.undecided, c.total);

        let k23 = graph6::encode(&Graph::complete_bipartite(2, 3)).unwrap();
        let p5 = graph6::encode(&Graph::path(5)).unwrap();
        let find = |code: &str| {
            let canon = crate::enumerate::canonical_form(&graph6::decode(code).unwrap()).1;
            let code = graph6::encode(&canon).unwrap();
            sweep.records.iter().find(|r| r.graph6 == code).unwrap().clone()
        };
        let r = find(&k23);
        assert_eq!(r.classification.verdict, Verdict::NonMember);
        let cert = r.certificate.unwrap();
        assert!(cert.s < cert.cs);
        let r = find(&p5);
        assert_eq!(r.certificate.unwrap().pattern, Some(Pattern::H1));
    }

    #[test]
    fn replay_is_byte_identical() {
        let config = small(5, 5);
        let a = run_characterization_campaign(&config).unwrap().to_json();
        let b = run_characterization_campaign(&config).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn sampling_replays_from_seed() {
        let ev = sample_equality(&Graph::cycle(6), 99, 5).unwrap();
        assert!(ev.all_equal);
        assert_eq!(ev.samples[3].weights, random_weights(6, sample_seed(99, 3)));
    }

    #[test]
    fn external_input_and_csv() {
        let graphs = read_graph6_lines("# comment\nCl\n\nDQc\n").unwrap();
        assert_eq!(graphs.len(), 2);
        let config = CampaignConfig { sweeps: vec![Sweep::Bipartite], ..small(7, 5) };
        let report = run_campaign_on_graphs(&config, &graphs);
        assert_eq!(
            report.sweep(Sweep::Bipartite).unwrap().counts.total,
            graphs.iter().filter(|g| g.is_bipartite()).count()
        );
        let mut csv = Vec::new();
        report.write_csv(&mut csv).unwrap();
        let text = String::from_utf8(csv).unwrap();
        assert!(text.starts_with("sweep,graph6,order"));
        assert!(matches!(read_graph6_lines("Cl\nC\n"), Err(Error::Graph6(m)) if m.starts_with("line 2")));
    }
}
