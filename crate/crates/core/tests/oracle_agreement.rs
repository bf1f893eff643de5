use std::collections::BTreeSet;

use richardson_ss::bruhat::{
    covers, covers_in_quotient, interval_min_reps, is_min_rep, leq, quotient_elements,
};
use richardson_ss::classify::Classification;
use richardson_ss::criteria::{check_pair, necessary_condition, RichardsonPair};
use richardson_ss::oracle::{brute_bruhat, brute_semistable, group_order, QuotientOracle};
use richardson_ss::verify::{check_semistable_extremal, sample_pairs, GroupData};
use richardson_ss::{CosetContext, LieType, RootSystem, SignedPerm};

fn small_groups() -> Vec<GroupData> {
    [(LieType::B, 3), (LieType::C, 3), (LieType::D, 4)]
        .into_iter()
        .map(|(t, n)| GroupData::new(&RootSystem::new(t, n).unwrap(), 10_000).unwrap())
        .collect()
}

#[test]
fn lengths_match_bfs_distance() {
    for gd in small_groups() {
        assert_eq!(gd.g.len(), group_order(&gd.g.rs));
        for (i, u) in gd.g.elements.iter().enumerate() {
            assert_eq!(u.length(&gd.g.rs).unwrap(), gd.g.dist[i], "{u}");
            assert_eq!(u.reduced_word(&gd.g.rs).len(), gd.g.dist[i]);
        }
    }
}

#[test]
fn order_criterion_matches_subword_order() {
    for gd in small_groups() {
        let rs = &gd.g.rs;
        for (i, a) in gd.g.elements.iter().enumerate() {
            for (j, b) in gd.g.elements.iter().enumerate() {
                assert_eq!(leq(rs, a, b).unwrap(), gd.ord.leq(i, j), "{rs}: {a} <= {b}");
            }
        }
    }
}

#[test]
fn single_pair_subword_check_matches_table() {
    let gd = GroupData::new(&RootSystem::new(LieType::B, 3).unwrap(), 1000).unwrap();
    let el = &gd.g.elements;
    for i in (0..el.len()).step_by(7) {
        for j in (0..el.len()).step_by(5) {
            assert_eq!(brute_bruhat(&gd.g, &el[i], &el[j]), gd.ord.leq(i, j));
        }
    }
}

#[test]
fn quotient_sizes_and_elements() {
    for gd in small_groups() {
        let rs = &gd.g.rs;
        for r in 1..=rs.rank() {
            let ctx = CosetContext::new(rs.clone(), r).unwrap();
            let q = QuotientOracle::new(&gd.g, &ctx);
            let stab =
                gd.g.elements
                    .iter()
                    .filter(|u| ctx.weight_of(u) == ctx.omega())
                    .count();
            assert_eq!(q.min_reps.len() * stab, gd.g.len());
            let brute: BTreeSet<SignedPerm> = q
                .min_reps
                .iter()
                .map(|&i| gd.g.elements[i].clone())
                .collect();
            let lib: BTreeSet<SignedPerm> = quotient_elements(&ctx).into_iter().collect();
            assert_eq!(brute, lib, "{rs} r={r}");
            for (i, u) in gd.g.elements.iter().enumerate() {
                assert_eq!(is_min_rep(&ctx, u), q.is_min_rep(i));
            }
        }
    }
}

#[test]
fn intervals_match_filtered_enumeration() {
    for (t, n) in [
        (LieType::B, 4),
        (LieType::C, 3),
        (LieType::D, 4),
        (LieType::D, 5),
    ] {
        let rs = RootSystem::new(t, n).unwrap();
        let gd = GroupData::new(&rs, 10_000).unwrap();
        for r in [1, n / 2 + 1, n] {
            let ctx = CosetContext::new(rs.clone(), r).unwrap();
            let q = QuotientOracle::new(&gd.g, &ctx);
            let pairs = sample_pairs(&gd, &q, 40, 7 + r as u64);
            for (v, w) in pairs {
                let (vi, wi) = (gd.g.idx(&v), gd.g.idx(&w));
                let expect: BTreeSet<SignedPerm> = q
                    .min_reps
                    .iter()
                    .filter(|&&u| gd.ord.leq(vi, u) && gd.ord.leq(u, wi))
                    .map(|&u| gd.g.elements[u].clone())
                    .collect();
                let got: BTreeSet<SignedPerm> = interval_min_reps(&ctx, &v, &w)
                    .unwrap()
                    .into_iter()
                    .collect();
                assert_eq!(got, expect, "{rs} r={r} [{v}, {w}]");
            }
        }
    }
}

#[test]
fn lifting_property() {
    for gd in small_groups() {
        let rs = &gd.g.rs;
        let el = &gd.g.elements;
        for i in 0..el.len() {
            for j in 0..el.len() {
                if !gd.ord.leq(i, j) {
                    continue;
                }
                for s in 1..=rs.rank() {
                    if el[j].has_left_descent(rs, s) && !el[i].has_left_descent(rs, s) {
                        let sw = gd.g.idx(&(&SignedPerm::generator(rs, s).unwrap() * &el[j]));
                        let si = gd.g.idx(&(&SignedPerm::generator(rs, s).unwrap() * &el[i]));
                        assert!(
                            gd.ord.leq(i, sw) && gd.ord.leq(si, j),
                            "{rs}: {} {} s{s}",
                            el[i],
                            el[j]
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn order_is_antisymmetric_and_graded_by_length() {
    for gd in small_groups() {
        let n = gd.g.len();
        for i in 0..n {
            for j in 0..n {
                if i != j && gd.ord.leq(i, j) {
                    assert!(!gd.ord.leq(j, i));
                    assert!(gd.g.dist[i] < gd.g.dist[j]);
                }
            }
        }
    }
}

#[test]
fn covers_match_oracle_and_invert() {
    for gd in small_groups() {
        let rs = &gd.g.rs;
        for u in &gd.g.elements {
            let lib: BTreeSet<SignedPerm> = covers(rs, u).unwrap().into_iter().collect();
            let brute: BTreeSet<SignedPerm> =
                richardson_ss::oracle::brute_covers(&gd.g, &gd.ord, &gd.refl, u)
                    .into_iter()
                    .collect();
            assert_eq!(lib, brute, "{rs}: {u}");
            assert_eq!(covers(rs, &u.inverse()).unwrap().len(), lib.len());
        }
    }
}

#[test]
fn quotient_covers_are_covers_of_min_reps() {
    let rs = RootSystem::new(LieType::D, 5).unwrap();
    let gd = GroupData::new(&rs, 10_000).unwrap();
    let ctx = CosetContext::new(rs.clone(), 3).unwrap();
    let q = QuotientOracle::new(&gd.g, &ctx);
    for &i in q.min_reps.iter().step_by(3) {
        let u = &gd.g.elements[i];
        let lib: BTreeSet<SignedPerm> = covers_in_quotient(&ctx, u).unwrap().into_iter().collect();
        let brute: BTreeSet<SignedPerm> =
            richardson_ss::oracle::brute_covers(&gd.g, &gd.ord, &gd.refl, u)
                .into_iter()
                .filter(|x| q.is_min_rep(gd.g.idx(x)))
                .collect();
        assert_eq!(lib, brute, "{u}");
    }
}

#[test]
fn dominant_weights_decrease_along_the_order() {
    for gd in small_groups() {
        let rs = &gd.g.rs;
        for r in 1..=rs.rank() {
            let ctx = CosetContext::new(rs.clone(), r).unwrap();
            let q = QuotientOracle::new(&gd.g, &ctx);
            for &a in &q.min_reps {
                for &b in &q.min_reps {
                    if gd.ord.leq(a, b) {
                        let d = &q.weight[&a] - &q.weight[&b];
                        assert!(d.coeffs().iter().all(|c| *c >= 0.into()), "{rs} r={r}");
                    }
                }
            }
        }
    }
}

#[test]
fn failing_the_necessary_condition_rules_out_chains() {
    for (t, n) in [(LieType::B, 3), (LieType::C, 4), (LieType::D, 4)] {
        let rs = RootSystem::new(t, n).unwrap();
        let gd = GroupData::new(&rs, 10_000).unwrap();
        for r in 1..=n {
            let ctx = CosetContext::new(rs.clone(), r).unwrap();
            let q = QuotientOracle::new(&gd.g, &ctx);
            for (v, w) in sample_pairs(&gd, &q, 120, 11) {
                let pair = RichardsonPair::new(&ctx, v.clone(), w.clone()).unwrap();
                if !necessary_condition(&pair) {
                    assert!(
                        !brute_semistable(&gd.g, &gd.ord, &q, &v, &w, 6).found(),
                        "{rs} r={r} {v} {w}"
                    );
                }
            }
        }
    }
}

#[test]
fn verdicts_are_monotone_in_the_interval() {
    let rs = RootSystem::new(LieType::C, 4).unwrap();
    let gd = GroupData::new(&rs, 10_000).unwrap();
    for r in 1..=4 {
        let ctx = CosetContext::new(rs.clone(), r).unwrap();
        let cls = Classification::new(&ctx).unwrap();
        let q = QuotientOracle::new(&gd.g, &ctx);
        let pairs = sample_pairs(&gd, &q, 60, 3);
        let yes = |v: &SignedPerm, w: &SignedPerm| {
            check_pair(
                &cls,
                &RichardsonPair::new(&ctx, v.clone(), w.clone()).unwrap(),
            )
            .unwrap()
            .is_yes()
        };
        for (v, w) in &pairs {
            if !yes(v, w) {
                continue;
            }
            for &x in &q.min_reps {
                let (xi, vi, wi) = (x, gd.g.idx(v), gd.g.idx(w));
                if gd.ord.leq(xi, vi) {
                    assert!(yes(&gd.g.elements[xi], w));
                }
                if gd.ord.leq(wi, xi) {
                    assert!(yes(v, &gd.g.elements[xi]));
                }
            }
        }
    }
}

#[test]
fn matched_bc_pairs_certify_with_two_element_chains() {
    for t in [LieType::B, LieType::C] {
        for n in 2..=4 {
            let rs = RootSystem::new(t, n).unwrap();
            let gd = GroupData::new(&rs, 10_000).unwrap();
            for r in 1..=n {
                let ctx = CosetContext::new(rs.clone(), r).unwrap();
                let cls = Classification::new(&ctx).unwrap();
                let q = QuotientOracle::new(&gd.g, &ctx);
                for p in &cls.pairs {
                    let out = brute_semistable(&gd.g, &gd.ord, &q, &p.v.element, &p.w.element, 2);
                    assert!(out.found(), "{rs} r={r} {}", p.v.label);
                }
            }
        }
    }
}

#[test]
fn extremal_verdicts_match_oracle_on_d5() {
    let rs = RootSystem::new(LieType::D, 5).unwrap();
    let gd = GroupData::new(&rs, 10_000).unwrap();
    for r in 1..=5 {
        let ctx = CosetContext::new(rs.clone(), r).unwrap();
        let cls = Classification::new(&ctx).unwrap();
        let q = QuotientOracle::new(&gd.g, &ctx);
        let out = check_semistable_extremal(&gd, &cls, &q, 6).unwrap();
        assert_eq!(out.failed, 0, "{:?}", out.witness);
    }
}
