//! Sweeps comparing closed forms with the brute-force oracle.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bruhat::{leq, CosetContext};
use crate::classify::{predicted_covers, Classification};
use crate::criteria::{check_pair, extremal_richardson_nonempty, RichardsonPair};
use crate::error::Result;
use crate::oracle::{
    brute_covers, brute_extremal_v, brute_extremal_w, brute_semistable, enumerate_weyl,
    reflections, OrderTable, QuotientOracle, WeylGroup,
};
use crate::rootsys::{LieType, RootSystem};
use crate::weyl::SignedPerm;

pub const DEFAULT_SEED: u64 = 20_240_517;

#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Largest rank for the oracle comparisons.
    pub max_n: usize,
    /// Largest rank for the label-only nonemptiness check.
    pub nonempty_max_n: usize,
    /// Largest rank for random pair sampling.
    pub sample_max_n: usize,
    /// Largest group on which lengths and order are compared on all pairs.
    pub foundations_max_size: usize,
    pub k_max: usize,
    pub samples: usize,
    pub seed: u64,
    pub budget: usize,
    pub types: Vec<LieType>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 5,
            nonempty_max_n: 6,
            sample_max_n: 4,
            foundations_max_size: 400,
            k_max: 6,
            samples: 200,
            seed: DEFAULT_SEED,
            budget: crate::oracle::DEFAULT_BUDGET,
            types: vec![LieType::B, LieType::C, LieType::D],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub scope: String,
    pub passed: usize,
    pub failed: usize,
    pub witness: Option<String>,
}

impl CheckOutcome {
    fn new(check: &'static str, scope: String) -> Self {
        CheckOutcome {
            check,
            scope,
            passed: 0,
            failed: 0,
            witness: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }
}

pub struct GroupData {
    pub g: WeylGroup,
    pub ord: OrderTable,
    pub refl: Vec<usize>,
}

impl GroupData {
    pub fn new(rs: &RootSystem, budget: usize) -> Result<Self> {
        let g = enumerate_weyl(rs, budget)?;
        let ord = OrderTable::new(&g)?;
        let refl = reflections(&g);
        Ok(GroupData { g, ord, refl })
    }
}

/// Formula lengths against BFS distance, and the order criteria against the subword order.
pub fn check_foundations(gd: &GroupData) -> Result<Vec<CheckOutcome>> {
    let rs = &gd.g.rs;
    let mut len = CheckOutcome::new("length", rs.to_string());
    for (i, u) in gd.g.elements.iter().enumerate() {
        let l = u.length(rs)?;
        len.record(l == gd.g.dist[i], || {
            format!("{u}: formula {l}, bfs {}", gd.g.dist[i])
        });
    }
    let mut ord = CheckOutcome::new("order", rs.to_string());
    for (i, a) in gd.g.elements.iter().enumerate() {
        for (j, b) in gd.g.elements.iter().enumerate() {
            let x = leq(rs, a, b)?;
            ord.record(x == gd.ord.leq(i, j), || {
                format!("{a} <= {b}: criterion {x}")
            });
        }
    }
    Ok(vec![len, ord])
}

fn window_set(v: impl IntoIterator<Item = SignedPerm>) -> BTreeSet<SignedPerm> {
    v.into_iter().collect()
}

pub fn check_classification(
    gd: &GroupData,
    cls: &Classification,
    q: &QuotientOracle,
) -> CheckOutcome {
    let mut out = CheckOutcome::new("classification", scope(&cls.ctx));
    let fv = window_set(cls.pairs.iter().map(|p| p.v.element.clone()));
    let fw = window_set(cls.pairs.iter().map(|p| p.w.element.clone()));
    let bv = window_set(brute_extremal_v(&gd.g, &gd.ord, q));
    let bw = window_set(brute_extremal_w(&gd.g, &gd.ord, q));
    out.record(fv == bv, || {
        format!(
            "{}: maximal v differ: closed {fv:?} brute {bv:?}",
            scope(&cls.ctx)
        )
    });
    out.record(fw == bw, || {
        format!(
            "{}: minimal w differ: closed {fw:?} brute {bw:?}",
            scope(&cls.ctx)
        )
    });
    out
}

pub fn check_covers(
    gd: &GroupData,
    cls: &Classification,
    q: &QuotientOracle,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("covers", scope(&cls.ctx));
    for p in &cls.pairs {
        let pred = window_set(predicted_covers(&cls.ctx, &p.v)?);
        let brute = window_set(
            brute_covers(&gd.g, &gd.ord, &gd.refl, &p.v.element)
                .into_iter()
                .filter(|u| q.is_min_rep(gd.g.idx(u))),
        );
        out.record(pred == brute, || {
            format!(
                "{} v {}: predicted {pred:?} brute {brute:?}",
                scope(&cls.ctx),
                p.v.label
            )
        });
    }
    Ok(out)
}

pub fn check_nonempty(cls: &Classification) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("nonempty", scope(&cls.ctx));
    let rs = &cls.ctx.rs;
    for a in &cls.pairs {
        for b in &cls.pairs {
            let pred = extremal_richardson_nonempty(cls, &a.v.label, &b.w.label)?;
            let actual = leq(rs, &a.v.element, &b.w.element)?;
            out.record(pred == actual, || {
                format!(
                    "{} (v {}, w {}): rule {pred}, order {actual}",
                    scope(&cls.ctx),
                    a.v.label,
                    b.w.label
                )
            });
        }
    }
    Ok(out)
}

fn compare_verdict(
    out: &mut CheckOutcome,
    gd: &GroupData,
    cls: &Classification,
    q: &QuotientOracle,
    v: &SignedPerm,
    w: &SignedPerm,
    k_max: usize,
) -> Result<()> {
    let pair = RichardsonPair::new(&cls.ctx, v.clone(), w.clone())?;
    let verdict = check_pair(cls, &pair)?;
    let brute = brute_semistable(&gd.g, &gd.ord, q, v, w, k_max);
    let cert_ok = match verdict.certificate() {
        Some(c) => c.validate(&cls.ctx, v, w).is_ok(),
        None => true,
    };
    let brute_ok = match &brute {
        crate::oracle::SemistableOutcome::Found(c) => c.validate(&cls.ctx, v, w).is_ok(),
        _ => true,
    };
    out.record(
        verdict.is_yes() == brute.found() && cert_ok && brute_ok,
        || {
            format!(
                "{} v={v} w={w}: criterion {}, oracle {}",
                scope(&cls.ctx),
                if verdict.is_yes() { "yes" } else { "no" },
                if brute.found() {
                    "chain found"
                } else {
                    "no chain"
                }
            )
        },
    );
    Ok(())
}

/// All comparable pairs of matched extremal elements.
pub fn check_semistable_extremal(
    gd: &GroupData,
    cls: &Classification,
    q: &QuotientOracle,
    k_max: usize,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("semistable-extremal", scope(&cls.ctx));
    for a in &cls.pairs {
        for b in &cls.pairs {
            let (v, w) = (&a.v.element, &b.w.element);
            if gd.ord.leq(gd.g.idx(v), gd.g.idx(w)) {
                compare_verdict(&mut out, gd, cls, q, v, w, k_max)?;
            }
        }
    }
    Ok(out)
}

/// Comparable pairs of minimal representatives: all of them when there are at
/// most `samples`, otherwise a seeded uniform sample of size `samples`.
pub fn sample_pairs(
    gd: &GroupData,
    q: &QuotientOracle,
    samples: usize,
    seed: u64,
) -> Vec<(SignedPerm, SignedPerm)> {
    let mut all = Vec::new();
    for &a in &q.min_reps {
        for &b in &q.min_reps {
            if gd.ord.leq(a, b) {
                all.push((a, b));
            }
        }
    }
    if all.len() > samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        all = all.choose_multiple(&mut rng, samples).copied().collect();
        all.sort();
    }
    all.into_iter()
        .map(|(a, b)| (gd.g.elements[a].clone(), gd.g.elements[b].clone()))
        .collect()
}

pub fn check_semistable_sampled(
    gd: &GroupData,
    cls: &Classification,
    q: &QuotientOracle,
    samples: usize,
    seed: u64,
    k_max: usize,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("semistable-sampled", scope(&cls.ctx));
    for (v, w) in sample_pairs(gd, q, samples, seed) {
        compare_verdict(&mut out, gd, cls, q, &v, &w, k_max)?;
    }
    Ok(out)
}

pub fn scope(ctx: &CosetContext) -> String {
    format!("{} r={}", ctx.rs, ctx.r)
}

fn pair_seed(seed: u64, t: LieType, n: usize, r: usize) -> u64 {
    seed ^ ((t as u64) << 48) ^ ((n as u64) << 32) ^ r as u64
}

fn sweep_group(cfg: &SweepConfig, t: LieType, n: usize) -> Result<Vec<CheckOutcome>> {
    let rs = RootSystem::new(t, n)?;
    let mut out = Vec::new();
    let gd = if n <= cfg.max_n {
        Some(GroupData::new(&rs, cfg.budget)?)
    } else {
        None
    };
    if let Some(gd) = &gd {
        if gd.g.len() <= cfg.foundations_max_size {
            out.extend(check_foundations(gd)?);
        }
    }
    for r in 1..=n {
        let ctx = CosetContext::new(rs.clone(), r)?;
        let cls = Classification::new(&ctx)?;
        out.push(check_nonempty(&cls)?);
        if let Some(gd) = &gd {
            let q = QuotientOracle::new(&gd.g, &ctx);
            out.push(check_classification(gd, &cls, &q));
            out.push(check_covers(gd, &cls, &q)?);
            out.push(check_semistable_extremal(gd, &cls, &q, cfg.k_max)?);
            if n <= cfg.sample_max_n {
                let seed = pair_seed(cfg.seed, t, n, r);
                out.push(check_semistable_sampled(
                    gd,
                    &cls,
                    &q,
                    cfg.samples,
                    seed,
                    cfg.k_max,
                )?);
            }
        }
    }
    Ok(out)
}

/// Runs every check over all types and ranks in scope, in parallel over groups.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<CheckOutcome>> {
    let top = cfg.max_n.max(cfg.nonempty_max_n);
    let items: Vec<(LieType, usize)> = cfg
        .types
        .iter()
        .flat_map(|&t| (t.min_rank()..=top).map(move |n| (t, n)))
        .collect();
    let results: Vec<Result<Vec<CheckOutcome>>> = items
        .par_iter()
        .map(|&(t, n)| sweep_group(cfg, t, n))
        .collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}
