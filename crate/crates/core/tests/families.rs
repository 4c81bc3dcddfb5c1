mod common;

use safeset_core::contraction::{search_pattern, DEFAULT_BUDGET};
use safeset_core::enumerate::{enumerate_up_to, GraphFilter};
use safeset_core::family::{
    construct_d, d_family_readings, d_params_member, is_book, is_double_star, normalize_d, recognize_d_family, DVariant,
};
use safeset_core::witness::random_weights;
use safeset_core::{certify_non_membership, classify, Graph, Pattern, Verdict};

#[test]
fn d_family_round_trip() {
    for variant in [DVariant::D, DVariant::DStar] {
        for m in 0..=3 {
            for n in 0..=3 {
                for p in 0..=2 {
                    for q in 0..=2 {
                        let (g, decomposition) = construct_d(variant, m, n, p, q);
                        assert!(decomposition.check(&g));
                        let want = normalize_d(variant, m, n, p, q);
                        let readings = d_family_readings(&g);
                        let normalized: Vec<_> = readings
                            .iter()
                            .map(|d| {
                                let (a, b, c, e) = d.params();
                                normalize_d(d.variant, a, b, c, e)
                            })
                            .collect();
                        assert!(normalized.contains(&want), "{variant}({m},{n};{p},{q}) not recovered: {normalized:?}");
                        // every reading of the same graph must agree on membership
                        let member = d_params_member(want.1, want.2, want.3, want.4);
                        for r in &normalized {
                            assert_eq!(d_params_member(r.1, r.2, r.3, r.4), member, "{variant}({m},{n};{p},{q})");
                        }
                        let c = classify(&g).unwrap();
                        let expected = if member { Verdict::Member } else { Verdict::NonMember };
                        assert_eq!(c.verdict, expected, "{variant}({m},{n};{p},{q}) classified {c:?}");
                        assert!(recognize_d_family(&g).is_some());
                    }
                }
            }
        }
    }
}

#[test]
fn excluded_parameters_get_verified_certificates() {
    for (m, n, p, q) in [(2, 1, 0, 0), (1, 1, 0, 1), (3, 1, 2, 0), (1, 0, 1, 0)] {
        let (g, _) = construct_d(DVariant::D, m, n, p, q);
        assert_eq!(classify(&g).unwrap().verdict, Verdict::NonMember);
        let cert = certify_non_membership(&g, DEFAULT_BUDGET).expect("certificate");
        cert.verify().unwrap();
        let o = common::oracle(&g, &cert.weights);
        assert!(o.s < o.cs);
    }
}

#[test]
fn normalization_is_idempotent_and_respects_isomorphism() {
    for variant in [DVariant::D, DVariant::DStar] {
        for (m, n, p, q) in [(2, 1, 1, 0), (1, 2, 0, 1), (2, 2, 0, 1), (0, 2, 1, 2), (3, 0, 2, 1)] {
            let (v, a, b, c, d) = normalize_d(variant, m, n, p, q);
            assert_eq!(normalize_d(v, a, b, c, d), (v, a, b, c, d));
            assert!(a >= b);
            let (g1, _) = construct_d(variant, m, n, p, q);
            let (g2, _) = construct_d(v, a, b, c, d);
            assert_eq!(safeset_core::enumerate::canonical_form(&g1).0, safeset_core::enumerate::canonical_form(&g2).0);
        }
    }
}

#[test]
fn books_are_members_with_clean_samples() {
    for pages in 1..=5 {
        let g = Graph::book(pages);
        assert_eq!(is_book(&g), Some(pages));
        assert_eq!(classify(&g).unwrap().verdict, Verdict::Member);
        for k in 0..10 {
            let o = common::oracle(&g, &random_weights(g.order(), 1000 * pages as u64 + k));
            assert_eq!(o.s, o.cs, "B{pages} sample {k}");
        }
    }
}

/// Members never contract to a forbidden pattern, and s = cs on the
/// brute-force oracle for a handful of weightings.
#[test]
fn members_have_no_forbidden_contraction() {
    for filter in [GraphFilter::Bipartite, GraphFilter::Chordal] {
        for g in enumerate_up_to(6, filter).unwrap().into_iter().flatten() {
            if classify(&g).unwrap().verdict != Verdict::Member {
                continue;
            }
            for p in [Pattern::H1, Pattern::H2, Pattern::H3, Pattern::Kmn] {
                let search = search_pattern(&g, p, DEFAULT_BUDGET);
                assert!(search.found.is_none(), "member {g:?} contracts to {p}");
                assert!(search.exhausted);
            }
            for k in 0..5 {
                let o = common::oracle(&g, &random_weights(g.order(), k));
                assert_eq!(o.s, o.cs);
            }
        }
    }
}

#[test]
fn pendants_on_small_non_members_stay_excluded() {
    for g in enumerate_up_to(5, GraphFilter::Bipartite).unwrap().into_iter().flatten() {
        if classify(&g).unwrap().verdict != Verdict::NonMember {
            continue;
        }
        for v in 0..g.order() {
            let h = g.with_pendant(v).unwrap();
            assert_eq!(classify(&h).unwrap().verdict, Verdict::NonMember);
        }
    }
}

/// Membership read off the listed families (even cycles, double stars,
/// books, `K_{3,3} − e`, and `D`/`D*` with `m >= 2`, `n != 1`) against the
/// parameter conditions, on every bipartite graph up to order 7 that has a
/// `D`/`D*` reading.
#[test]
fn listed_families_agree_with_parameter_conditions() {
    let mut disagreements = Vec::new();
    for g in enumerate_up_to(7, GraphFilter::Bipartite).unwrap().into_iter().flatten() {
        let readings: Vec<_> = d_family_readings(&g)
            .iter()
            .map(|d| {
                let (m, n, p, q) = d.params();
                normalize_d(d.variant, m, n, p, q)
            })
            .collect();
        if readings.is_empty() {
            continue;
        }
        let by_conditions = readings.iter().any(|r| d_params_member(r.1, r.2, r.3, r.4));
        let k33_minus_edge = g.edge_count() == 8 && g.bipartition().is_some_and(|(a, b)| a.len() == 3 && b.len() == 3);
        let by_list = (g.is_cycle() && g.order() >= 4)
            || is_double_star(&g)
            || is_book(&g).is_some()
            || k33_minus_edge
            || readings.iter().any(|r| r.1 >= 2 && r.2 != 1);
        if by_conditions != by_list {
            disagreements.push((safeset_core::graph6::encode(&g).unwrap(), readings));
        }
    }
    for d in &disagreements {
        eprintln!("membership readings disagree: {d:?}");
    }
    assert!(disagreements.is_empty());
}
