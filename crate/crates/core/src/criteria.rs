//! Decision procedures for Richardson varieties `X_w^v` in `G/P_r`:
//! nonemptiness, the sign test on weights, and torus-semistability with a
//! zero-weight-sum multichain as certificate.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::bruhat::{interval_min_reps, is_min_rep, leq, CosetContext};
use crate::classify::{Classification, ExtremalEntry, ExtremalLabel, Family};
use crate::error::{Error, Result};
use crate::rootsys::{LieType, SignProfile, Weight};
use crate::weyl::SignedPerm;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RichardsonPair {
    pub ctx: CosetContext,
    pub v: SignedPerm,
    pub w: SignedPerm,
}

impl RichardsonPair {
    pub fn new(ctx: &CosetContext, v: SignedPerm, w: SignedPerm) -> Result<Self> {
        for x in [&v, &w] {
            if x.rank() != ctx.n() {
                return Err(Error::RankMismatch(x.rank(), ctx.n()));
            }
            x.check_parity(&ctx.rs)?;
            if !is_min_rep(ctx, x) {
                return Err(Error::NotMinRep(x.window().to_vec(), ctx.r));
            }
        }
        Ok(RichardsonPair {
            ctx: ctx.clone(),
            v,
            w,
        })
    }

    pub fn is_comparable(&self) -> Result<bool> {
        leq(&self.ctx.rs, &self.v, &self.w)
    }
}

/// A multichain `u_1 ≤ ... ≤ u_k` of minimal representatives with `Σ u_l(ω_r) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCertificate {
    pub chain: Vec<SignedPerm>,
    pub weights: Vec<Weight>,
}

impl ChainCertificate {
    pub fn new(ctx: &CosetContext, chain: Vec<SignedPerm>) -> Self {
        let weights = chain.iter().map(|u| ctx.weight_of(u)).collect();
        ChainCertificate { chain, weights }
    }

    /// Checks `v ≤ u_1 ≤ ... ≤ u_k ≤ w`, minimality and the zero sum.
    pub fn validate(&self, ctx: &CosetContext, v: &SignedPerm, w: &SignedPerm) -> Result<()> {
        let fail = |m: &str| Err(Error::Construction(format!("certificate invalid: {m}")));
        let (Some(first), Some(last)) = (self.chain.first(), self.chain.last()) else {
            return fail("empty chain");
        };
        if !leq(&ctx.rs, v, first)? || !leq(&ctx.rs, last, w)? {
            return fail("chain leaves the interval");
        }
        for p in self.chain.windows(2) {
            if !leq(&ctx.rs, &p[0], &p[1])? {
                return fail("chain is not monotone");
            }
        }
        if self.chain.iter().any(|u| !is_min_rep(ctx, u)) {
            return fail("chain element is not a minimal representative");
        }
        let fresh: Vec<Weight> = self.chain.iter().map(|u| ctx.weight_of(u)).collect();
        if fresh != self.weights {
            return fail("stored weights are stale");
        }
        let total = fresh.iter().fold(Weight::zero(ctx.n()), |a, b| &a + b);
        if !total.is_zero() {
            return fail("weights do not sum to zero");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoReason {
    NecessaryFails,
    NoZeroSumChain,
    RichardsonEmpty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Semistability {
    Yes(ChainCertificate),
    No(NoReason),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairVerdict {
    pub richardson_nonempty: bool,
    pub semistable: Semistability,
    /// The matched extremal pair sandwiching `(v, w)`, when there is one.
    pub witness: Option<(ExtremalLabel, ExtremalLabel)>,
    /// Set when the sandwich rule is applied to a non-extremal pair in type B or C.
    pub monotone_extension: bool,
}

impl PairVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self.semistable, Semistability::Yes(_))
    }

    pub fn certificate(&self) -> Option<&ChainCertificate> {
        match &self.semistable {
            Semistability::Yes(c) => Some(c),
            Semistability::No(_) => None,
        }
    }
}

pub fn necessary_condition(pair: &RichardsonPair) -> bool {
    let vp = pair.ctx.weight_of(&pair.v).sign_profile();
    let wp = pair.ctx.weight_of(&pair.w).sign_profile();
    matches!(vp, SignProfile::AllNonneg | SignProfile::Zero)
        && matches!(wp, SignProfile::AllNonpos | SignProfile::Zero)
}

fn close(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.abs_diff(*y) <= 1)
}

/// Nonemptiness of `X_w^v` for a maximal `v` and a minimal `w`, from the labels alone.
pub fn extremal_richardson_nonempty(
    cls: &Classification,
    vlabel: &ExtremalLabel,
    wlabel: &ExtremalLabel,
) -> Result<bool> {
    if cls.v_entry(vlabel).is_none() || cls.w_entry(wlabel).is_none() {
        return Err(Error::MismatchedContext);
    }
    use Family::*;
    let (i, j) = (&vlabel.tuple.entries, &wlabel.tuple.entries);
    let ctx = &cls.ctx;
    let odd = (ctx.n() + 1 - ctx.r) % 2 == 1;
    Ok(match (vlabel.family, wlabel.family) {
        (RankOne | RankTwo | RankN, _) => true,
        (Plain, Plain) => close(i, j),
        _ if ctx.rs.lie_type() != LieType::D => {
            unreachable!("B/C labels are plain or rank families")
        }
        (Plain, OnePrefixed | TwoPrefixed) if !odd => i.first() == Some(&3) && close(&i[1..], j),
        (OnePrefixed | TwoPrefixed, Plain) if !odd => j.first() == Some(&3) && close(i, &j[1..]),
        (OnePrefixed, OnePrefixed) | (TwoPrefixed, TwoPrefixed) => close(i, j),
        (Plain, SuffixOne | SuffixTwo) => i.first() == Some(&4) && close(&i[1..], j),
        (SuffixOne | SuffixTwo, Plain) => j.first() == Some(&4) && close(i, &j[1..]),
        (SuffixOne, SuffixTwo) | (SuffixTwo, SuffixOne) => close(i, j),
        _ => false,
    })
}

/// A chain from `v*` to `w*` with zero weight sum for a matched pair.
pub fn build_certificate(
    cls: &Classification,
    v: &ExtremalEntry,
    w: &ExtremalEntry,
) -> Result<ChainCertificate> {
    let ctx = &cls.ctx;
    let rs = &ctx.rs;
    let chain = if (&v.weight + &w.weight).is_zero() {
        vec![v.element.clone(), w.element.clone()]
    } else if matches!(v.label.family, Family::SuffixOne | Family::SuffixTwo) {
        let (k, other) = if v.label.family == Family::SuffixOne {
            (1, 2)
        } else {
            (2, 1)
        };
        let sk = SignedPerm::generator(rs, k)?;
        let u2 = &sk * &v.element;
        let mut word = v.label.tuple.entries.clone();
        word.push(3);
        let u3 = &SignedPerm::from_word(rs, &word)? * &u2;
        debug_assert_eq!(&SignedPerm::generator(rs, other)? * &u3, w.element);
        vec![v.element.clone(), u2, u3, w.element.clone()]
    } else {
        search_chain(ctx, &v.element, &w.element, 6)?
            .ok_or_else(|| Error::Construction(format!("no chain found for {}", v.label)))?
    };
    let cert = ChainCertificate::new(ctx, chain);
    cert.validate(ctx, &v.element, &w.element)?;
    Ok(cert)
}

/// Breadth-first search for a zero-sum multichain from `v` to `w` of length at most `k_max`.
fn search_chain(
    ctx: &CosetContext,
    v: &SignedPerm,
    w: &SignedPerm,
    k_max: usize,
) -> Result<Option<Vec<SignedPerm>>> {
    let rs = &ctx.rs;
    let interval = interval_min_reps(ctx, v, w)?;
    let weights: HashMap<&SignedPerm, Weight> =
        interval.iter().map(|u| (u, ctx.weight_of(u))).collect();
    let mut up: HashMap<&SignedPerm, Vec<&SignedPerm>> = HashMap::new();
    for a in &interval {
        let mut above = Vec::new();
        for b in &interval {
            if leq(rs, a, b)? {
                above.push(b);
            }
        }
        up.insert(a, above);
    }
    let target = &-&weights[w];
    let mut layer: Vec<(Vec<&SignedPerm>, Weight)> = vec![(vec![v], weights[v].clone())];
    for _ in 2..=k_max {
        let mut seen: HashSet<(&SignedPerm, Weight)> = HashSet::new();
        let mut next = Vec::new();
        for (path, acc) in &layer {
            let last = *path.last().expect("nonempty path");
            if up[last].contains(&w) && acc == target {
                let mut chain: Vec<SignedPerm> = path.iter().map(|&u| u.clone()).collect();
                chain.push(w.clone());
                return Ok(Some(chain));
            }
            for &b in &up[last] {
                let a2 = acc + &weights[b];
                if seen.insert((b, a2.clone())) {
                    let mut p = path.clone();
                    p.push(b);
                    next.push((p, a2));
                }
            }
        }
        layer = next;
    }
    Ok(None)
}

/// Whether the pair is exactly one of the matched extremal pairs.
pub fn is_extremal_pair(cls: &Classification, v: &SignedPerm, w: &SignedPerm) -> bool {
    cls.pairs
        .iter()
        .any(|p| &p.v.element == v && &p.w.element == w)
}

/// Semistability of a comparable pair by the sandwich rule.
pub fn semistable_nonempty(cls: &Classification, pair: &RichardsonPair) -> Result<PairVerdict> {
    let rs = &cls.ctx.rs;
    if cls.ctx != pair.ctx {
        return Err(Error::MismatchedContext);
    }
    if !pair.is_comparable()? {
        return Err(Error::NotComparable);
    }
    let monotone_extension =
        rs.lie_type() != LieType::D && !is_extremal_pair(cls, &pair.v, &pair.w);
    for p in &cls.pairs {
        if leq(rs, &pair.v, &p.v.element)? && leq(rs, &p.w.element, &pair.w)? {
            let cert = build_certificate(cls, &p.v, &p.w)?;
            cert.validate(&cls.ctx, &pair.v, &pair.w)?;
            return Ok(PairVerdict {
                richardson_nonempty: true,
                semistable: Semistability::Yes(cert),
                witness: Some((p.v.label.clone(), p.w.label.clone())),
                monotone_extension,
            });
        }
    }
    let reason = if necessary_condition(pair) {
        NoReason::NoZeroSumChain
    } else {
        NoReason::NecessaryFails
    };
    Ok(PairVerdict {
        richardson_nonempty: true,
        semistable: Semistability::No(reason),
        witness: None,
        monotone_extension,
    })
}

/// Full verdict for any pair of minimal representatives.
pub fn check_pair(cls: &Classification, pair: &RichardsonPair) -> Result<PairVerdict> {
    if !pair.is_comparable()? {
        return Ok(PairVerdict {
            richardson_nonempty: false,
            semistable: Semistability::No(NoReason::RichardsonEmpty),
            witness: None,
            monotone_extension: false,
        });
    }
    semistable_nonempty(cls, pair)
}
