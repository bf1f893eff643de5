//! Bruhat order, covers and minimal coset representatives.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::rootsys::{LieType, RootSystem, SignProfile, Weight};
use crate::weyl::{positive_roots, reflection, SignedPerm};

/// A root system together with the maximal parabolic `P_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetContext {
    pub rs: RootSystem,
    pub r: usize,
}

impl CosetContext {
    pub fn new(rs: RootSystem, r: usize) -> Result<Self> {
        rs.check_node(r)?;
        Ok(CosetContext { rs, r })
    }

    pub fn n(&self) -> usize {
        self.rs.rank()
    }

    pub fn omega(&self) -> Weight {
        self.rs.fundamental_weight(self.r).expect("node checked")
    }

    pub fn weight_of(&self, s: &SignedPerm) -> Weight {
        s.apply_to_weight(&self.rs, &self.omega())
    }
}

fn same_rank(a: &SignedPerm, b: &SignedPerm) -> Result<()> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch(a.rank(), b.rank()));
    }
    Ok(())
}

/// Type-A dominance on the extended window.
pub fn leq_b(s: &SignedPerm, t: &SignedPerm) -> bool {
    let n = s.rank() as i32;
    let (e1, e2) = (s.extended(), t.extended());
    let size = (2 * n + 1) as usize;
    let mut c1 = vec![0i32; size];
    let mut c2 = vec![0i32; size];
    for (&x, &y) in e1.iter().zip(&e2) {
        c1[..=(x + n) as usize].iter_mut().for_each(|c| *c += 1);
        c2[..=(y + n) as usize].iter_mut().for_each(|c| *c += 1);
        if c1.iter().zip(&c2).any(|(p, q)| p > q) {
            return false;
        }
    }
    true
}

/// `σ[i, j] = #{a ∈ [-n, n] \ {0} : a ≤ i, σ(a) ≥ j}`.
fn rank_count(s: &SignedPerm, i: i32, j: i32) -> usize {
    let n = s.rank() as i32;
    (-n..=n)
        .filter(|&a| a != 0 && a <= i && s.value(a) >= j)
        .count()
}

/// No position in `[-a, a] \ {0}` is sent into `[-b, b]`.
fn empty_rectangle(s: &SignedPerm, a: i32, b: i32) -> bool {
    (-a..=a).all(|x| x == 0 || s.value(x).abs() > b)
}

pub fn leq_d(s: &SignedPerm, t: &SignedPerm) -> Result<bool> {
    for x in [s, t] {
        if x.neg_count() % 2 == 1 {
            return Err(Error::ParityViolation(x.window().to_vec()));
        }
    }
    if !leq_b(s, t) {
        return Ok(false);
    }
    let n = s.rank() as i32;
    for a in 1..=n {
        for b in 1..=n {
            if empty_rectangle(s, a, b)
                && empty_rectangle(t, a, b)
                && rank_count(s, -a - 1, b + 1) == rank_count(t, -a - 1, b + 1)
                && (rank_count(s, -1, b + 1) + rank_count(t, -1, b + 1)) % 2 == 1
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn leq(rs: &RootSystem, s: &SignedPerm, t: &SignedPerm) -> Result<bool> {
    same_rank(s, t)?;
    same_rank(s, &SignedPerm::identity(rs.rank()))?;
    match rs.lie_type() {
        LieType::B | LieType::C => Ok(leq_b(s, t)),
        LieType::D => leq_d(s, t),
    }
}

/// `σ(α_j)` is a positive root for every `j ≠ r`.
pub fn is_min_rep(ctx: &CosetContext, s: &SignedPerm) -> bool {
    let rs = &ctx.rs;
    (1..=rs.rank()).filter(|&j| j != ctx.r).all(|j| {
        let img = s.apply_eps(&rs.simple_root_eps(j));
        rs.epsilon_to_root_basis(&img).sign_profile() == SignProfile::AllNonneg
    })
}

/// The minimal representative of the coset `σ W_{I_r}`.
pub fn min_coset_rep(ctx: &CosetContext, s: &SignedPerm) -> SignedPerm {
    let rs = &ctx.rs;
    let mut cur = s.clone();
    'outer: loop {
        for j in (1..=rs.rank()).filter(|&j| j != ctx.r) {
            if cur.has_right_descent(rs, j) {
                cur = &cur * &SignedPerm::generator(rs, j).expect("index in range");
                continue 'outer;
            }
        }
        return cur;
    }
}

/// All Bruhat covers of `σ` in `W`.
pub fn covers(rs: &RootSystem, s: &SignedPerm) -> Result<Vec<SignedPerm>> {
    let l = s.length(rs)?;
    let mut out = Vec::new();
    for beta in positive_roots(rs) {
        let t = &reflection(rs, &beta)? * s;
        if t.length(rs)? == l + 1 && leq(rs, s, &t)? {
            out.push(t);
        }
    }
    out.sort();
    Ok(out)
}

/// Covers of `σ` that are again minimal representatives.
pub fn covers_in_quotient(ctx: &CosetContext, s: &SignedPerm) -> Result<Vec<SignedPerm>> {
    Ok(covers(&ctx.rs, s)?
        .into_iter()
        .filter(|t| is_min_rep(ctx, t))
        .collect())
}

/// All minimal representatives, by upward search from the identity.
pub fn quotient_elements(ctx: &CosetContext) -> Vec<SignedPerm> {
    let rs = &ctx.rs;
    let gens: Vec<SignedPerm> = (1..=rs.rank())
        .map(|i| SignedPerm::generator(rs, i).expect("index in range"))
        .collect();
    let id = SignedPerm::identity(rs.rank());
    let mut seen: HashSet<SignedPerm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(u) = queue.pop_front() {
        for g in &gens {
            let x = g * &u;
            if !seen.contains(&x) && is_min_rep(ctx, &x) {
                seen.insert(x.clone());
                queue.push_back(x);
            }
        }
        out.push(u);
    }
    out
}

/// Minimal representatives `u` with `v ≤ u ≤ w`.
pub fn interval_min_reps(
    ctx: &CosetContext,
    v: &SignedPerm,
    w: &SignedPerm,
) -> Result<Vec<SignedPerm>> {
    let rs = &ctx.rs;
    for x in [v, w] {
        if !is_min_rep(ctx, x) {
            return Err(Error::NotMinRep(x.window().to_vec(), ctx.r));
        }
    }
    if !leq(rs, v, w)? {
        return Ok(Vec::new());
    }
    let mut seen: HashSet<SignedPerm> = HashSet::from([v.clone()]);
    let mut queue = VecDeque::from([v.clone()]);
    while let Some(u) = queue.pop_front() {
        for t in covers_in_quotient(ctx, &u)? {
            if !seen.contains(&t) && leq(rs, &t, w)? {
                seen.insert(t.clone());
                queue.push_back(t);
            }
        }
    }
    let mut out: Vec<SignedPerm> = seen.into_iter().collect();
    out.sort_by_cached_key(|u| (u.length(rs).unwrap_or(0), u.clone()));
    Ok(out)
}
