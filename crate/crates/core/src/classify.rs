//! Extremal minimal representatives: the Bruhat-maximal `v` with
//! `v(ω_r) ≥ 0` and the Bruhat-minimal `w` with `w(ω_r) ≤ 0`.
//!
//! Windows are assembled block by block from index tuples and then checked
//! against the closed-form weights; a disagreement is a construction error.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bruhat::{is_min_rep, CosetContext};
use crate::error::{Error, Result};
use crate::rootsys::{LieType, SignProfile, Weight, Q};
use crate::weyl::{reflection, SignedPerm};

/// A tuple `i_1 < ... < i_p` in `[s, t]` with gaps at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexTuple {
    pub entries: Vec<usize>,
    pub s: usize,
    pub t: usize,
}

impl IndexTuple {
    pub fn new(entries: Vec<usize>, s: usize, t: usize) -> Option<Self> {
        let ok = entries.iter().all(|&x| s <= x && x <= t)
            && entries.windows(2).all(|p| p[1] >= p[0] + 2);
        ok.then_some(IndexTuple { entries, s, t })
    }

    pub fn empty() -> Self {
        IndexTuple {
            entries: Vec::new(),
            s: 1,
            t: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn primed(&self) -> Vec<usize> {
        self.entries.iter().map(|x| x - 1).collect()
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `J_{m,[s,t]}` in lexicographic order.
pub fn enumerate_index_tuples(m: usize, s: usize, t: usize) -> Vec<IndexTuple> {
    fn rec(m: usize, start: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in start..=t {
            cur.push(x);
            rec(m, x + 2, t, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(m, s, t, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|e| IndexTuple { entries: e, s, t })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Plain,
    OnePrefixed,
    TwoPrefixed,
    SuffixOne,
    SuffixTwo,
    RankOne,
    RankTwo,
    RankN,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtremalLabel {
    pub family: Family,
    pub tuple: IndexTuple,
}

impl ExtremalLabel {
    fn new(family: Family, tuple: IndexTuple) -> Self {
        ExtremalLabel { family, tuple }
    }

    fn single(family: Family) -> Self {
        ExtremalLabel::new(family, IndexTuple::empty())
    }

    /// The label of the minimal `w` that pairs with this maximal `v`.
    pub fn partner(&self) -> ExtremalLabel {
        let family = match self.family {
            Family::SuffixOne => Family::SuffixTwo,
            Family::SuffixTwo => Family::SuffixOne,
            f => f,
        };
        ExtremalLabel::new(family, self.tuple.clone())
    }
}

impl fmt::Display for ExtremalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.tuple;
        match self.family {
            Family::Plain => write!(f, "{t}"),
            Family::OnePrefixed | Family::TwoPrefixed => {
                let k = if self.family == Family::OnePrefixed {
                    1
                } else {
                    2
                };
                if t.is_empty() {
                    write!(f, "{k}")
                } else {
                    write!(f, "{k},{t}")
                }
            }
            Family::SuffixOne | Family::SuffixTwo => {
                let k = if self.family == Family::SuffixOne {
                    1
                } else {
                    2
                };
                if t.is_empty() {
                    write!(f, "{k}")
                } else {
                    write!(f, "{t},{k}")
                }
            }
            Family::RankOne | Family::RankTwo | Family::RankN => write!(f, "-"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    MaximalV,
    MinimalW,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalEntry {
    pub label: ExtremalLabel,
    pub side: Side,
    pub element: SignedPerm,
    pub weight: Weight,
}

/// One row of the classification: a maximal `v` and its matched minimal `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalPair {
    pub v: ExtremalEntry,
    pub w: ExtremalEntry,
}

struct Row {
    label: ExtremalLabel,
    v: Vec<i32>,
    w: Vec<i32>,
    /// `w = s_{word} v` where the product is stated in closed form.
    word: Option<Vec<usize>>,
    /// Closed form of `k · v(ω_r)` as `(k, weight)`.
    v_weight: Option<(i64, Weight)>,
}

fn neg_rev(t: &[usize]) -> Vec<i32> {
    t.iter().rev().map(|&x| -(x as i32)).collect()
}

fn pos(t: &[usize]) -> Vec<i32> {
    t.iter().map(|&x| x as i32).collect()
}

fn rest(lo: usize, n: usize, excl: &[usize]) -> Vec<i32> {
    (lo..=n)
        .filter(|x| !excl.contains(x))
        .map(|x| x as i32)
        .collect()
}

fn cat(parts: &[&[i32]]) -> Vec<i32> {
    parts.concat()
}

fn simple_sum(n: usize, idx: &[usize], extra: &[(usize, Q)]) -> Weight {
    let mut c = vec![Q::from_integer(0); n];
    for &i in idx {
        c[i - 1] += Q::from_integer(1);
    }
    for &(i, q) in extra {
        c[i - 1] += q;
    }
    Weight(c)
}

fn rows_bc(ty: LieType, n: usize, r: usize) -> Vec<Row> {
    let ni = n as i32;
    if r == 1 {
        let (v, w) = if n.is_multiple_of(2) {
            let v = cat(&[
                &(1..ni).rev().step_by(2).map(|x| -x).collect::<Vec<_>>(),
                &(2..=ni).step_by(2).collect::<Vec<_>>(),
            ]);
            let w = cat(&[
                &(1..=ni).rev().step_by(2).map(|x| -x).collect::<Vec<_>>(),
                &(1..ni).step_by(2).collect::<Vec<_>>(),
            ]);
            (v, w)
        } else {
            let v = cat(&[
                &(1..ni).rev().step_by(2).map(|x| -x).collect::<Vec<_>>(),
                &(1..=ni).step_by(2).collect::<Vec<_>>(),
            ]);
            let w = cat(&[
                &(1..=ni).rev().step_by(2).map(|x| -x).collect::<Vec<_>>(),
                &(2..ni).step_by(2).collect::<Vec<_>>(),
            ]);
            (v, w)
        };
        let v = v.into_iter().filter(|&x| x != 0).collect();
        let w = w.into_iter().filter(|&x| x != 0).collect();
        return vec![Row {
            label: ExtremalLabel::single(Family::RankOne),
            v,
            w,
            word: None,
            v_weight: None,
        }];
    }
    if r == n {
        let mut v: Vec<i32> = (2..=ni).collect();
        let mut w = v.clone();
        v.push(1);
        w.push(-1);
        return vec![Row {
            label: ExtremalLabel::single(Family::RankN),
            v,
            w,
            word: Some(vec![1]),
            v_weight: None,
        }];
    }
    let k = n + 1 - r;
    let m = k / 2;
    let mut out = Vec::new();
    if k.is_multiple_of(2) {
        for t in enumerate_index_tuples(m, 2, n) {
            let i = &t.entries;
            let ip = t.primed();
            let excl: Vec<usize> = i.iter().chain(&ip).copied().collect();
            let rst = rest(1, n, &excl);
            out.push(Row {
                v: cat(&[&rst, &neg_rev(&ip), &pos(i)]),
                w: cat(&[&rst, &neg_rev(i), &pos(&ip)]),
                word: Some(i.clone()),
                v_weight: Some((1, simple_sum(n, i, &[]))),
                label: ExtremalLabel::new(Family::Plain, t),
            });
        }
    } else {
        let a1 = if ty == LieType::B {
            Q::from_integer(1)
        } else {
            Q::new(1, 2)
        };
        for t in enumerate_index_tuples(m, 3, n) {
            let i = &t.entries;
            let ip = t.primed();
            let mut excl: Vec<usize> = i.iter().chain(&ip).copied().collect();
            excl.push(1);
            let rst = rest(1, n, &excl);
            let mut word = vec![1];
            word.extend(i);
            out.push(Row {
                v: cat(&[&rst, &neg_rev(&ip), &[1], &pos(i)]),
                w: cat(&[&rst, &neg_rev(i), &[-1], &pos(&ip)]),
                word: Some(word),
                v_weight: Some((1, simple_sum(n, i, &[(1, a1)]))),
                label: ExtremalLabel::new(Family::Plain, t),
            });
        }
    }
    out
}

fn rows_d(n: usize, r: usize) -> Vec<Row> {
    let ni = n as i32;
    if r == 1 || r == 2 {
        let (v, w);
        if n.is_multiple_of(2) {
            let odds: Vec<i32> = (3..ni).rev().step_by(2).collect();
            let evens: Vec<i32> = (2..=ni).step_by(2).collect();
            let one = if n.is_multiple_of(4) == (r == 1) {
                -1
            } else {
                1
            };
            let head: Vec<i32> = if r == 1 {
                odds.iter().map(|x| -x).collect()
            } else {
                std::iter::once(odds[0])
                    .chain(odds[1..].iter().map(|x| -x))
                    .collect()
            };
            v = cat(&[&head, &[one], &evens]);
            let evs: Vec<i32> = (2..=ni).rev().step_by(2).collect();
            let odd: Vec<i32> = (3..ni).step_by(2).collect();
            let whead: Vec<i32> = if r == 1 {
                evs.iter().map(|x| -x).collect()
            } else {
                std::iter::once(evs[0])
                    .chain(evs[1..].iter().map(|x| -x))
                    .collect()
            };
            w = cat(&[&whead, &[-one], &odd]);
        } else {
            let evs: Vec<i32> = (4..ni).rev().step_by(2).collect();
            let odds: Vec<i32> = (3..=ni).step_by(2).collect();
            let one = if (n % 4 == 1) == (r == 1) { -1 } else { 1 };
            let head: Vec<i32> = if r == 1 {
                evs.iter().map(|x| -x).collect()
            } else {
                std::iter::once(evs[0])
                    .chain(evs[1..].iter().map(|x| -x))
                    .collect()
            };
            v = cat(&[&head, &[one, 2], &odds]);
            let od: Vec<i32> = (3..=ni).rev().step_by(2).collect();
            let evn: Vec<i32> = (4..ni).step_by(2).collect();
            let whead: Vec<i32> = if r == 1 {
                od.iter().map(|x| -x).collect()
            } else {
                std::iter::once(od[0])
                    .chain(od[1..].iter().map(|x| -x))
                    .collect()
            };
            w = cat(&[&whead, &[-2, one], &evn]);
        }
        let tail: Vec<usize> = if n.is_multiple_of(2) {
            (4..=n).step_by(2).collect()
        } else {
            (5..=n).step_by(2).collect()
        };
        let two = Q::from_integer(2);
        let mut extra: Vec<(usize, Q)> = tail.iter().map(|&i| (i, two)).collect();
        // Which of α_1, α_2 carries the larger coefficient flips with n mod 4 and with r.
        let first_heavy = matches!((n % 4, r), (2, 1) | (0, 2) | (3, 1) | (1, 2));
        if n.is_multiple_of(2) {
            extra.push((if first_heavy { 1 } else { 2 }, two));
        } else {
            let (a, b) = if first_heavy { (3, 1) } else { (1, 3) };
            extra.push((1, Q::from_integer(a)));
            extra.push((2, Q::from_integer(b)));
            extra.push((3, two));
        }
        let family = if r == 1 {
            Family::RankOne
        } else {
            Family::RankTwo
        };
        return vec![Row {
            label: ExtremalLabel::single(family),
            v,
            w,
            word: None,
            v_weight: Some((4, simple_sum(n, &[], &extra))),
        }];
    }
    if r == n {
        let mut v = vec![1];
        v.extend(3..=ni);
        v.push(2);
        let sv = SignedPerm::new(v.clone()).expect("valid window");
        let s = |i: usize| {
            let mut g: Vec<i32> = (1..=ni).collect();
            if i == 1 {
                g[0] = -2;
                g[1] = -1;
            } else {
                g.swap(i - 2, i - 1);
            }
            SignedPerm::new(g).expect("valid generator")
        };
        let w = &s(1) * &(&s(2) * &sv);
        let half = Q::new(1, 2);
        return vec![Row {
            label: ExtremalLabel::single(Family::RankN),
            v,
            w: w.window().to_vec(),
            word: Some(vec![1, 2]),
            v_weight: Some((1, simple_sum(n, &[], &[(1, half), (2, half)]))),
        }];
    }
    let k = n + 1 - r;
    let m = k / 2;
    let mut out = Vec::new();
    if k.is_multiple_of(2) {
        let sg: i32 = if m % 2 == 1 { -1 } else { 1 };
        for t in enumerate_index_tuples(m, 3, n) {
            let i = &t.entries;
            let ip = t.primed();
            let excl: Vec<usize> = i.iter().chain(&ip).copied().collect();
            let rst = rest(2, n, &excl);
            out.push(Row {
                v: cat(&[&[sg], &rst, &neg_rev(&ip), &pos(i)]),
                w: cat(&[&[sg], &rst, &neg_rev(i), &pos(&ip)]),
                word: Some(i.clone()),
                v_weight: Some((1, simple_sum(n, i, &[]))),
                label: ExtremalLabel::new(Family::Plain, t),
            });
        }
        for t in enumerate_index_tuples(m - 1, 4, n) {
            let i = &t.entries;
            let ip = t.primed();
            let excl: Vec<usize> = i.iter().chain(&ip).copied().collect();
            let rst = rest(3, n, &excl);
            let (head, rt): (Vec<i32>, Vec<i32>) = match rst.split_first() {
                Some((&tt, more)) => (vec![-tt], more.to_vec()),
                None => (Vec::new(), Vec::new()),
            };
            let (v1, w1, v2, w2) = if m % 2 == 1 {
                (
                    cat(&[&rst, &neg_rev(&ip), &[1, 2], &pos(i)]),
                    cat(&[&rst, &neg_rev(i), &[-2, -1], &pos(&ip)]),
                    cat(&[&head, &rt, &neg_rev(&ip), &[-1, 2], &pos(i)]),
                    cat(&[&head, &rt, &neg_rev(i), &[-2, 1], &pos(&ip)]),
                )
            } else {
                (
                    cat(&[&head, &rt, &neg_rev(&ip), &[1, 2], &pos(i)]),
                    cat(&[&head, &rt, &neg_rev(i), &[-2, -1], &pos(&ip)]),
                    cat(&[&rst, &neg_rev(&ip), &[-1, 2], &pos(i)]),
                    cat(&[&rst, &neg_rev(i), &[-2, 1], &pos(&ip)]),
                )
            };
            for (fam, first, v, w) in [
                (Family::OnePrefixed, 1, v1, w1),
                (Family::TwoPrefixed, 2, v2, w2),
            ] {
                let mut word = vec![first];
                word.extend(i);
                let mut idx = vec![first];
                idx.extend(i);
                out.push(Row {
                    label: ExtremalLabel::new(fam, t.clone()),
                    v,
                    w,
                    word: Some(word),
                    v_weight: Some((1, simple_sum(n, &idx, &[]))),
                });
            }
        }
    } else {
        let sg: i32 = if m % 2 == 1 { -1 } else { 1 };
        let half = Q::new(1, 2);
        let three_half = Q::new(3, 2);
        for t in enumerate_index_tuples(m, 4, n) {
            let i = &t.entries;
            let ip = t.primed();
            let excl: Vec<usize> = i.iter().chain(&ip).copied().collect();
            let rst = rest(3, n, &excl);
            let mut word = vec![1, 2];
            word.extend(i);
            out.push(Row {
                v: cat(&[&[sg], &rst, &neg_rev(&ip), &[2], &pos(i)]),
                w: cat(&[&[-sg], &rst, &neg_rev(i), &[-2], &pos(&ip)]),
                word: Some(word),
                v_weight: Some((1, simple_sum(n, i, &[(1, half), (2, half)]))),
                label: ExtremalLabel::new(Family::Plain, t),
            });
        }
        for t in enumerate_index_tuples(m - 1, 5, n) {
            let i = &t.entries;
            let ip = t.primed();
            let excl: Vec<usize> = i.iter().chain(&ip).copied().collect();
            // Leading entry is t = min([4,n] \ {i, i'}); t = 4 when the tuple is empty.
            let tt = (4..=n).find(|x| !excl.contains(x)).expect("room for t") as i32;
            let mut excl_t = excl.clone();
            excl_t.push(tt as usize);
            let rst = rest(4, n, &excl_t);
            let f: i32 = if m % 2 == 1 { tt } else { -tt };
            let mut idx = vec![3];
            idx.extend(i);
            // Row for v_{i,1} carries w_{i,2} and vice versa.
            let mut word1 = vec![2, 3, 1];
            word1.extend(i);
            out.push(Row {
                label: ExtremalLabel::new(Family::SuffixOne, t.clone()),
                v: cat(&[&[f], &rst, &neg_rev(&ip), &[1, 2, 3], &pos(i)]),
                w: cat(&[&[f], &rst, &neg_rev(i), &[-3, -2, 1], &pos(&ip)]),
                word: Some(word1),
                v_weight: Some((1, simple_sum(n, &idx, &[(1, three_half), (2, half)]))),
            });
            let mut word2 = vec![1, 3, 2];
            word2.extend(i);
            out.push(Row {
                label: ExtremalLabel::new(Family::SuffixTwo, t.clone()),
                v: cat(&[&[-f], &rst, &neg_rev(&ip), &[-1, 2, 3], &pos(i)]),
                w: cat(&[&[-f], &rst, &neg_rev(i), &[-3, -2, -1], &pos(&ip)]),
                word: Some(word2),
                v_weight: Some((1, simple_sum(n, &idx, &[(1, half), (2, three_half)]))),
            });
        }
    }
    out
}

fn construction(ctx: &CosetContext, what: &str, window: Vec<i32>) -> Result<SignedPerm> {
    let s = SignedPerm::for_system(&ctx.rs, window)
        .map_err(|e| Error::Construction(format!("{what}: {e}")))?;
    if !is_min_rep(ctx, &s) {
        return Err(Error::Construction(format!(
            "{what} {s} is not a minimal representative"
        )));
    }
    Ok(s)
}

/// All matched extremal pairs, validated against their closed forms.
pub fn extremal_pairs(ctx: &CosetContext) -> Result<Vec<ExtremalPair>> {
    let rs = &ctx.rs;
    let (n, r) = (rs.rank(), ctx.r);
    let rows = match rs.lie_type() {
        LieType::B | LieType::C => rows_bc(rs.lie_type(), n, r),
        LieType::D => rows_d(n, r),
    };
    let mut pairs = Vec::with_capacity(rows.len());
    for row in rows {
        let v = construction(ctx, &format!("v {}", row.label), row.v)?;
        let w = construction(ctx, &format!("w {}", row.label.partner()), row.w)?;
        let vw = ctx.weight_of(&v);
        let ww = ctx.weight_of(&w);
        if let Some((k, expected)) = &row.v_weight {
            if vw.scale(Q::from_integer(*k)) != *expected {
                return Err(Error::Construction(format!(
                    "weight of v {} is {vw}, closed form {expected}/{k}",
                    row.label
                )));
            }
        }
        if let Some(word) = &row.word {
            let prod = &SignedPerm::from_word(rs, word)? * &v;
            if prod != w {
                return Err(Error::Construction(format!(
                    "w {} = {w} but reflection product gives {prod}",
                    row.label.partner()
                )));
            }
        }
        if vw.sign_profile() != SignProfile::AllNonneg
            || ww.sign_profile() != SignProfile::AllNonpos
        {
            return Err(Error::Construction(format!(
                "sign profile failure at {}",
                row.label
            )));
        }
        pairs.push(ExtremalPair {
            v: ExtremalEntry {
                label: row.label.clone(),
                side: Side::MaximalV,
                element: v,
                weight: vw,
            },
            w: ExtremalEntry {
                label: row.label.partner(),
                side: Side::MinimalW,
                element: w,
                weight: ww,
            },
        });
    }
    let spin_odd = rs.lie_type() == LieType::D && n % 2 == 1 && r <= 2;
    if !spin_odd {
        let vmap: BTreeMap<&ExtremalLabel, &Weight> =
            pairs.iter().map(|p| (&p.v.label, &p.v.weight)).collect();
        for p in &pairs {
            let vw = vmap
                .get(&p.w.label)
                .ok_or(Error::Construction("unmatched label".into()))?;
            if p.w.weight != -*vw {
                return Err(Error::Construction(format!(
                    "w {} is not the negative of v",
                    p.w.label
                )));
            }
        }
    }
    pairs.sort_by(|a, b| a.v.label.cmp(&b.v.label));
    Ok(pairs)
}

/// The matched pairs of a context, built once.
#[derive(Debug, Clone)]
pub struct Classification {
    pub ctx: CosetContext,
    pub pairs: Vec<ExtremalPair>,
}

impl Classification {
    pub fn new(ctx: &CosetContext) -> Result<Self> {
        Ok(Classification {
            ctx: ctx.clone(),
            pairs: extremal_pairs(ctx)?,
        })
    }

    pub fn v_entry(&self, label: &ExtremalLabel) -> Option<&ExtremalEntry> {
        self.pairs.iter().map(|p| &p.v).find(|e| &e.label == label)
    }

    pub fn w_entry(&self, label: &ExtremalLabel) -> Option<&ExtremalEntry> {
        self.pairs.iter().map(|p| &p.w).find(|e| &e.label == label)
    }
}

pub fn maximal_v(ctx: &CosetContext) -> Result<Vec<ExtremalEntry>> {
    Ok(extremal_pairs(ctx)?.into_iter().map(|p| p.v).collect())
}

pub fn minimal_w(ctx: &CosetContext) -> Result<Vec<ExtremalEntry>> {
    let mut out: Vec<ExtremalEntry> = extremal_pairs(ctx)?.into_iter().map(|p| p.w).collect();
    out.sort_by(|a, b| a.label.cmp(&b.label));
    Ok(out)
}

fn tuple_cover_roots(entries: &[usize], left: usize, n: usize, out: &mut Vec<Vec<usize>>) {
    for (t, &it) in entries.iter().enumerate() {
        out.push(vec![it]);
        let next_ok = entries.get(t + 1).is_none_or(|&nx| nx >= it + 3);
        if it < n && next_ok {
            out.push(vec![it, it + 1]);
        }
        let prev = if t == 0 { left } else { entries[t - 1] };
        if it >= prev + 3 {
            out.push(vec![it - 1, it]);
        }
    }
}

/// Roots `β` (as lists of simple indices) with `s_β v` covering `v` in the quotient.
pub fn predicted_cover_roots(ctx: &CosetContext, label: &ExtremalLabel) -> Vec<Vec<usize>> {
    let rs = &ctx.rs;
    let n = rs.rank();
    let i = &label.tuple.entries;
    let mut out = Vec::new();
    let d = rs.lie_type() == LieType::D;
    match label.family {
        Family::RankOne | Family::RankTwo if d => {
            let first_two =
                (n.is_multiple_of(4) || n % 4 == 1) == (label.family == Family::RankOne);
            out.push(vec![if first_two { 2 } else { 1 }]);
            let start = if n.is_multiple_of(2) { 4 } else { 5 };
            out.extend((start..=n).step_by(2).map(|k| vec![k]));
        }
        Family::RankOne => {
            let start = if n.is_multiple_of(2) { 2 } else { 1 };
            out.extend((start..=n).step_by(2).map(|k| vec![k]));
        }
        Family::RankN if d => {
            out.push(vec![1]);
            out.push(vec![2]);
        }
        Family::RankN => out.push(vec![1]),
        Family::Plain if !d => {
            if (n + 1 - ctx.r).is_multiple_of(2) {
                tuple_cover_roots(i, 0, n, &mut out);
            } else {
                out.push(vec![1]);
                tuple_cover_roots(i, 1, n, &mut out);
            }
        }
        Family::Plain => {
            if (n + 1 - ctx.r).is_multiple_of(2) {
                tuple_cover_roots(i, 0, n, &mut out);
                if i.first() == Some(&3) {
                    out.push(vec![1, 3]);
                }
            } else {
                out.push(vec![1]);
                out.push(vec![2]);
                tuple_cover_roots(i, 2, n, &mut out);
            }
        }
        Family::OnePrefixed | Family::TwoPrefixed => {
            let k = if label.family == Family::OnePrefixed {
                1
            } else {
                2
            };
            out.push(vec![k]);
            tuple_cover_roots(i, 2, n, &mut out);
            if i.first().is_none_or(|&x| x >= 5) {
                out.push(vec![k, 3]);
            }
        }
        Family::SuffixOne | Family::SuffixTwo => {
            let k = if label.family == Family::SuffixOne {
                1
            } else {
                2
            };
            out.push(vec![k]);
            tuple_cover_roots(i, 3, n, &mut out);
            if i.first().is_none_or(|&x| x >= 6) {
                out.push(vec![k, 3, 4]);
            }
        }
        Family::RankTwo => unreachable!("rank-two family only exists in type D"),
    }
    out
}

/// Covers of an extremal `v` inside the quotient, from the closed-form case analysis.
pub fn predicted_covers(ctx: &CosetContext, entry: &ExtremalEntry) -> Result<Vec<SignedPerm>> {
    let known = maximal_v(ctx)?;
    if entry.side != Side::MaximalV || !known.iter().any(|e| e == entry) {
        return Err(Error::NotExtremal);
    }
    let mut out = Vec::new();
    for idx in predicted_cover_roots(ctx, &entry.label) {
        let beta = ctx.rs.root_from_indices(&idx);
        out.push(&reflection(&ctx.rs, &beta)? * &entry.element);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    fn ctx(t: LieType, n: usize, r: usize) -> CosetContext {
        CosetContext::new(RootSystem::new(t, n).unwrap(), r).unwrap()
    }

    fn windows(es: &[ExtremalEntry]) -> Vec<String> {
        es.iter().map(|e| e.element.to_string()).collect()
    }

    #[test]
    fn tuples() {
        let j: Vec<Vec<usize>> = enumerate_index_tuples(1, 2, 5)
            .into_iter()
            .map(|t| t.entries)
            .collect();
        assert_eq!(j, vec![vec![2], vec![3], vec![4], vec![5]]);
        assert_eq!(enumerate_index_tuples(0, 3, 7).len(), 1);
        assert!(IndexTuple::new(vec![2, 3], 1, 5).is_none());
    }

    #[test]
    fn b5_table() {
        let c = ctx(LieType::B, 5, 4);
        assert_eq!(
            windows(&maximal_v(&c).unwrap()),
            [
                "(3,4,5,-1,2)",
                "(1,4,5,-2,3)",
                "(1,2,5,-3,4)",
                "(1,2,3,-4,5)"
            ]
        );
        assert_eq!(
            windows(&minimal_w(&c).unwrap()),
            [
                "(3,4,5,-2,1)",
                "(1,4,5,-3,2)",
                "(1,2,5,-4,3)",
                "(1,2,3,-5,4)"
            ]
        );
    }

    #[test]
    fn d5_table() {
        let c = ctx(LieType::D, 5, 3);
        assert_eq!(
            windows(&maximal_v(&c).unwrap()),
            [
                "(-1,5,-3,2,4)",
                "(-1,3,-4,2,5)",
                "(4,5,1,2,3)",
                "(-4,5,-1,2,3)"
            ]
        );
        let pairs = extremal_pairs(&c).unwrap();
        let ws: Vec<String> = pairs.iter().map(|p| p.w.element.to_string()).collect();
        assert_eq!(
            ws,
            [
                "(1,5,-4,-2,3)",
                "(1,3,-5,-2,4)",
                "(4,5,-3,-2,1)",
                "(-4,5,-3,-2,-1)"
            ]
        );
    }

    #[test]
    fn rank_one_and_n() {
        let c = ctx(LieType::B, 4, 1);
        assert_eq!(windows(&maximal_v(&c).unwrap()), ["(-3,-1,2,4)"]);
        for t in [LieType::B, LieType::C] {
            let c = ctx(t, 5, 5);
            assert_eq!(windows(&minimal_w(&c).unwrap()), ["(2,3,4,5,-1)"]);
        }
    }

    #[test]
    fn every_context_constructs() {
        for t in [LieType::B, LieType::C, LieType::D] {
            for n in t.min_rank()..=9 {
                for r in 1..=n {
                    extremal_pairs(&ctx(t, n, r)).unwrap_or_else(|e| panic!("{t}{n} r={r}: {e}"));
                }
            }
        }
    }

    #[test]
    fn d_rank_n_covers() {
        let c = ctx(LieType::D, 5, 5);
        let v = &maximal_v(&c).unwrap()[0];
        assert_eq!(predicted_cover_roots(&c, &v.label), vec![vec![1], vec![2]]);
    }
}
