//! Brute-force ground truth at small rank.
//!
//! Nothing here calls the combinatorial criteria of [`crate::bruhat`] or the
//! closed forms of [`crate::classify`]: lengths are BFS distances, the order is
//! the subword property of a BFS reduced word, minimal representatives are the
//! shortest elements of each orbit class of `ω_r`, and weights come from the
//! action on orthogonal coordinates.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::bruhat::CosetContext;
use crate::criteria::ChainCertificate;
use crate::error::{Error, Result};
use crate::rootsys::{LieType, RootSystem, Weight, Q};
use crate::weyl::SignedPerm;

pub const DEFAULT_BUDGET: usize = 100_000;

/// Largest group for which the full order table is built.
pub const ORDER_TABLE_LIMIT: usize = 25_000;

pub fn group_order(rs: &RootSystem) -> usize {
    let n = rs.rank();
    let fact: usize = (1..=n).product();
    let signs = 1usize << n;
    match rs.lie_type() {
        LieType::B | LieType::C => signs * fact,
        LieType::D => signs / 2 * fact,
    }
}

/// The group listed in BFS order from the identity.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub rs: RootSystem,
    pub elements: Vec<SignedPerm>,
    pub dist: Vec<usize>,
    /// `elements[i] = elements[p] · s_g` for `parent[i] = Some((p, g))`.
    pub parent: Vec<Option<(usize, usize)>>,
    /// `right[i][g-1]` is the index of `elements[i] · s_g`.
    pub right: Vec<Vec<usize>>,
    pub index: HashMap<SignedPerm, usize>,
}

pub fn enumerate_weyl(rs: &RootSystem, budget: usize) -> Result<WeylGroup> {
    let size = group_order(rs);
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    let n = rs.rank();
    let gens: Vec<SignedPerm> = (1..=n)
        .map(|i| SignedPerm::generator(rs, i))
        .collect::<Result<_>>()?;
    let id = SignedPerm::identity(n);
    let mut g = WeylGroup {
        rs: rs.clone(),
        elements: vec![id.clone()],
        dist: vec![0],
        parent: vec![None],
        right: Vec::new(),
        index: HashMap::from([(id, 0)]),
    };
    let mut head = 0;
    while head < g.elements.len() {
        let mut row = Vec::with_capacity(n);
        for (k, s) in gens.iter().enumerate() {
            let x = &g.elements[head] * s;
            let idx = match g.index.get(&x) {
                Some(&i) => i,
                None => {
                    let i = g.elements.len();
                    g.index.insert(x.clone(), i);
                    g.elements.push(x);
                    g.dist.push(g.dist[head] + 1);
                    g.parent.push(Some((head, k + 1)));
                    i
                }
            };
            row.push(idx);
        }
        g.right.push(row);
        head += 1;
    }
    Ok(g)
}

impl WeylGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn idx(&self, s: &SignedPerm) -> usize {
        self.index[s]
    }

    /// The BFS word of an element, which is reduced.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((p, g)) = self.parent[i] {
            w.push(g);
            i = p;
        }
        w.reverse();
        w
    }
}

/// Subword order: `below[t]` holds every `s` obtainable as a subword of the
/// BFS word of `t`.
#[derive(Debug, Clone)]
pub struct OrderTable {
    words: usize,
    below: Vec<Vec<u64>>,
}

impl OrderTable {
    pub fn new(g: &WeylGroup) -> Result<Self> {
        if g.len() > ORDER_TABLE_LIMIT {
            return Err(Error::BudgetExceeded {
                size: g.len(),
                budget: ORDER_TABLE_LIMIT,
            });
        }
        let words = g.len().div_ceil(64);
        let mut below: Vec<Vec<u64>> = vec![Vec::new(); g.len()];
        let mut id_set = vec![0u64; words];
        id_set[0] |= 1;
        below[0] = id_set;
        // BFS order guarantees the parent is done first; t = p · s gives
        // below(t) = below(p) ∪ below(p) · s.
        for i in 1..g.len() {
            let (p, s) = g.parent[i].expect("non-identity has a parent");
            let mut set = below[p].clone();
            for (wi, &bits) in below[p].iter().enumerate() {
                let mut b = bits;
                while b != 0 {
                    let x = wi * 64 + b.trailing_zeros() as usize;
                    b &= b - 1;
                    let y = g.right[x][s - 1];
                    set[y / 64] |= 1 << (y % 64);
                }
            }
            below[i] = set;
        }
        Ok(OrderTable { words, below })
    }

    pub fn leq(&self, s: usize, t: usize) -> bool {
        debug_assert!(self.words > s / 64);
        self.below[t][s / 64] >> (s % 64) & 1 == 1
    }
}

/// Direct subword test for a single pair, without a table.
pub fn brute_bruhat(g: &WeylGroup, s: &SignedPerm, t: &SignedPerm) -> bool {
    let target = g.idx(s);
    let mut set: HashSet<usize> = HashSet::from([0]);
    for letter in g.word(g.idx(t)) {
        let moved: Vec<usize> = set.iter().map(|&x| g.right[x][letter - 1]).collect();
        set.extend(moved);
    }
    set.contains(&target)
}

/// Brute-force view of a parabolic quotient.
#[derive(Debug, Clone)]
pub struct QuotientOracle {
    pub ctx: CosetContext,
    /// Indices of the shortest element in each class, sorted by index.
    pub min_reps: Vec<usize>,
    pub weight: HashMap<usize, Weight>,
}

fn omega_eps(ctx: &CosetContext) -> Vec<Q> {
    ctx.rs.root_basis_to_epsilon(&ctx.omega())
}

impl QuotientOracle {
    pub fn new(g: &WeylGroup, ctx: &CosetContext) -> Self {
        let om = omega_eps(ctx);
        let mut best: BTreeMap<Vec<Q>, usize> = BTreeMap::new();
        for (i, u) in g.elements.iter().enumerate() {
            let key = u.apply_eps(&om);
            match best.get(&key) {
                Some(&j) if g.dist[j] <= g.dist[i] => {}
                _ => {
                    best.insert(key, i);
                }
            }
        }
        let mut weight = HashMap::new();
        let mut min_reps = Vec::new();
        for (key, i) in best {
            weight.insert(i, ctx.rs.epsilon_to_root_basis(&key));
            min_reps.push(i);
        }
        min_reps.sort();
        QuotientOracle {
            ctx: ctx.clone(),
            min_reps,
            weight,
        }
    }

    pub fn is_min_rep(&self, i: usize) -> bool {
        self.weight.contains_key(&i)
    }
}

fn extremal(g: &WeylGroup, ord: &OrderTable, q: &QuotientOracle, maximal: bool) -> Vec<SignedPerm> {
    use crate::rootsys::SignProfile::*;
    let want = if maximal { AllNonneg } else { AllNonpos };
    let cands: Vec<usize> = q
        .min_reps
        .iter()
        .copied()
        .filter(|i| q.weight[i].sign_profile() == want)
        .collect();
    let mut out: Vec<SignedPerm> = cands
        .iter()
        .filter(|&&a| {
            !cands.iter().any(|&b| {
                b != a
                    && if maximal {
                        ord.leq(a, b)
                    } else {
                        ord.leq(b, a)
                    }
            })
        })
        .map(|&a| g.elements[a].clone())
        .collect();
    out.sort();
    out
}

pub fn brute_extremal_v(g: &WeylGroup, ord: &OrderTable, q: &QuotientOracle) -> Vec<SignedPerm> {
    extremal(g, ord, q, true)
}

pub fn brute_extremal_w(g: &WeylGroup, ord: &OrderTable, q: &QuotientOracle) -> Vec<SignedPerm> {
    extremal(g, ord, q, false)
}

/// Every reflection of the group, as conjugates of simple reflections.
pub fn reflections(g: &WeylGroup) -> Vec<usize> {
    let n = g.rs.rank();
    let mut set = HashSet::new();
    for x in &g.elements {
        let xi = x.inverse();
        for i in 1..=n {
            let s = SignedPerm::generator(&g.rs, i).expect("index in range");
            set.insert(g.idx(&(&(x * &s) * &xi)));
        }
    }
    let mut v: Vec<usize> = set.into_iter().collect();
    v.sort();
    v
}

/// Covers of `σ` in the whole group.
pub fn brute_covers(
    g: &WeylGroup,
    ord: &OrderTable,
    refl: &[usize],
    s: &SignedPerm,
) -> Vec<SignedPerm> {
    let si = g.idx(s);
    let mut out: Vec<SignedPerm> = refl
        .iter()
        .map(|&t| g.idx(&(&g.elements[t] * s)))
        .filter(|&x| g.dist[x] == g.dist[si] + 1 && ord.leq(si, x))
        .map(|x| g.elements[x].clone())
        .collect();
    out.sort();
    out.dedup();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemistableOutcome {
    Found(ChainCertificate),
    /// No zero-sum multichain of length at most `k_max`.
    NotFoundWithinBound {
        k_max: usize,
    },
}

impl SemistableOutcome {
    pub fn found(&self) -> bool {
        matches!(self, SemistableOutcome::Found(_))
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Search for `v ≤ u_1 ≤ ... ≤ u_k ≤ w` (repeats allowed, `k ≤ k_max`) with
/// `Σ u_l(ω_r) = 0`, by dynamic programming over (last element, running sum).
pub fn brute_semistable(
    g: &WeylGroup,
    ord: &OrderTable,
    q: &QuotientOracle,
    v: &SignedPerm,
    w: &SignedPerm,
    k_max: usize,
) -> SemistableOutcome {
    let (vi, wi) = (g.idx(v), g.idx(w));
    let interval: Vec<usize> = q
        .min_reps
        .iter()
        .copied()
        .filter(|&u| ord.leq(vi, u) && ord.leq(u, wi))
        .collect();
    if interval.is_empty() {
        return SemistableOutcome::NotFoundWithinBound { k_max };
    }
    let n = q.ctx.n();
    let denom = interval
        .iter()
        .flat_map(|u| q.weight[u].coeffs().iter().map(|c| *c.denom()))
        .fold(1, lcm);
    let iw: HashMap<usize, Vec<i64>> = interval
        .iter()
        .map(|&u| {
            let c = q.weight[&u]
                .coeffs()
                .iter()
                .map(|c| (*c * Q::from_integer(denom)).to_integer())
                .collect();
            (u, c)
        })
        .collect();
    let maxabs: Vec<i64> = (0..n)
        .map(|k| interval.iter().map(|u| iw[u][k].abs()).max().unwrap_or(0))
        .collect();
    let up: HashMap<usize, Vec<usize>> = interval
        .iter()
        .map(|&a| {
            (
                a,
                interval
                    .iter()
                    .copied()
                    .filter(|&b| ord.leq(a, b))
                    .collect(),
            )
        })
        .collect();

    type State = (usize, Vec<i64>);
    let mut parents: Vec<HashMap<State, Option<State>>> = Vec::new();
    let mut layer: HashMap<State, Option<State>> = HashMap::new();
    for &u in &interval {
        layer.insert((u, iw[&u].clone()), None);
    }
    for k in 1..=k_max {
        if let Some(end) = layer
            .keys()
            .find(|(_, acc)| acc.iter().all(|&x| x == 0))
            .cloned()
        {
            parents.push(layer);
            let mut chain = Vec::new();
            let mut cur = Some(end);
            for lvl in (0..parents.len()).rev() {
                let st = cur.expect("parent chain intact");
                chain.push(g.elements[st.0].clone());
                cur = parents[lvl][&st].clone();
            }
            chain.reverse();
            return SemistableOutcome::Found(ChainCertificate::new(&q.ctx, chain));
        }
        if k == k_max {
            break;
        }
        let remaining = (k_max - k) as i64;
        let mut next: HashMap<State, Option<State>> = HashMap::new();
        for st in layer.keys() {
            for &b in &up[&st.0] {
                let acc: Vec<i64> = st.1.iter().zip(&iw[&b]).map(|(x, y)| x + y).collect();
                if acc
                    .iter()
                    .zip(&maxabs)
                    .any(|(a, m)| a.abs() > remaining * m)
                {
                    continue;
                }
                next.entry((b, acc)).or_insert_with(|| Some(st.clone()));
            }
        }
        parents.push(layer);
        layer = next;
    }
    SemistableOutcome::NotFoundWithinBound { k_max }
}
