//! Signed permutations as elements of `W(B_n) = W(C_n)` and `W(D_n)`.
//!
//! A signed permutation is stored by its window `(σ(1), ..., σ(n))`. It acts on
//! orthogonal coordinates by `e_i ↦ sign(σ(i)) e_{|σ(i)|}`, and products
//! compose as functions: `(στ)(i) = σ(τ(i))`.

use std::collections::HashSet;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{LieType, RootSystem, Weight, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignedPerm {
    window: Vec<i32>,
}

impl SignedPerm {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidWindow(window));
            }
            seen[a] = true;
        }
        Ok(SignedPerm { window })
    }

    /// Validates the window and, in type D, the sign parity.
    pub fn for_system(rs: &RootSystem, window: Vec<i32>) -> Result<Self> {
        if window.len() != rs.rank() {
            return Err(Error::RankMismatch(window.len(), rs.rank()));
        }
        let s = SignedPerm::new(window)?;
        s.check_parity(rs)?;
        Ok(s)
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn generator(rs: &RootSystem, i: usize) -> Result<Self> {
        let n = rs.rank();
        if i == 0 || i > n {
            return Err(Error::GeneratorOutOfRange(i));
        }
        let mut w: Vec<i32> = (1..=n as i32).collect();
        if i == 1 {
            match rs.lie_type() {
                LieType::B | LieType::C => w[0] = -1,
                LieType::D => {
                    w[0] = -2;
                    w[1] = -1;
                }
            }
        } else {
            w.swap(i - 2, i - 1);
        }
        Ok(SignedPerm { window: w })
    }

    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut w = SignedPerm::identity(rs.rank());
        for &i in word {
            w = &w * &SignedPerm::generator(rs, i)?;
        }
        Ok(w)
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    /// `σ(i)` for `i` in `[-n, n] \ {0}`.
    pub fn value(&self, i: i32) -> i32 {
        if i > 0 {
            self.window[i as usize - 1]
        } else {
            -self.window[(-i) as usize - 1]
        }
    }

    /// Images of positions `-n, ..., -1, 1, ..., n`.
    pub fn extended(&self) -> Vec<i32> {
        let n = self.rank() as i32;
        (-n..=n)
            .filter(|&i| i != 0)
            .map(|i| self.value(i))
            .collect()
    }

    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        Ok(SignedPerm {
            window: other.window.iter().map(|&x| self.value(x)).collect(),
        })
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut out = vec![0; self.rank()];
        for (i, &x) in self.window.iter().enumerate() {
            let pos = i as i32 + 1;
            out[x.unsigned_abs() as usize - 1] = if x > 0 { pos } else { -pos };
        }
        SignedPerm { window: out }
    }

    pub fn inv_count(&self) -> usize {
        let e = self.extended();
        let mut c = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    c += 1;
                }
            }
        }
        c
    }

    pub fn neg_count(&self) -> usize {
        self.window.iter().filter(|&&x| x < 0).count()
    }

    pub fn check_parity(&self, rs: &RootSystem) -> Result<()> {
        if rs.lie_type() == LieType::D && self.neg_count() % 2 == 1 {
            return Err(Error::ParityViolation(self.window.clone()));
        }
        Ok(())
    }

    pub fn length(&self, rs: &RootSystem) -> Result<usize> {
        self.check_parity(rs)?;
        let (inv, neg) = (self.inv_count(), self.neg_count());
        Ok(match rs.lie_type() {
            LieType::B | LieType::C => (inv + neg) / 2,
            LieType::D => (inv - neg) / 2,
        })
    }

    /// Whether `l(σ s_i) < l(σ)`, read off the window.
    pub fn has_right_descent(&self, rs: &RootSystem, i: usize) -> bool {
        let w = &self.window;
        if i >= 2 {
            return w[i - 2] > w[i - 1];
        }
        match rs.lie_type() {
            LieType::B | LieType::C => w[0] < 0,
            LieType::D => w[0] + w[1] < 0,
        }
    }

    /// Whether `l(s_i σ) < l(σ)`.
    pub fn has_left_descent(&self, rs: &RootSystem, i: usize) -> bool {
        self.inverse().has_right_descent(rs, i)
    }

    /// A reduced word `[i_1, ..., i_k]` with `σ = s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let n = rs.rank();
        let mut word = Vec::new();
        let mut cur = self.clone();
        'outer: loop {
            for i in 1..=n {
                if cur.has_right_descent(rs, i) {
                    cur = &cur * &SignedPerm::generator(rs, i).expect("index in range");
                    word.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    /// Action on orthogonal coordinates.
    pub fn apply_eps(&self, x: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); x.len()];
        for (i, &s) in self.window.iter().enumerate() {
            let k = s.unsigned_abs() as usize - 1;
            out[k] += if s > 0 { x[i] } else { -x[i] };
        }
        out
    }

    /// `σ(χ)` computed with the simple-reflection formula along a reduced word.
    pub fn apply_to_weight(&self, rs: &RootSystem, chi: &Weight) -> Weight {
        let mut cur = chi.clone();
        for &j in self.reduced_word(rs).iter().rev() {
            let p = rs.pairing(&cur, j);
            cur.0[j - 1] -= p;
        }
        cur
    }

    pub fn parse_word(rs: &RootSystem, s: &str) -> Result<Self> {
        let word = parse_word(s)?;
        SignedPerm::from_word(rs, &word)
    }
}

impl Mul for &SignedPerm {
    type Output = SignedPerm;
    /// Panics on rank mismatch; use [`SignedPerm::compose`] for checked products.
    fn mul(self, o: &SignedPerm) -> SignedPerm {
        self.compose(o).expect("rank mismatch in product")
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for SignedPerm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let w = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad window entry {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPerm::new(w)
    }
}

/// Parses `"s3 s2 s1"` or `"3,2,1"`.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.trim_start_matches(['s', 'S'])
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad generator {p:?}")))
        })
        .collect()
}

fn positive_roots_eps(rs: &RootSystem) -> Vec<Vec<Q>> {
    let n = rs.rank();
    let one = Q::from_integer(1);
    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..j {
            for sign in [one, -one] {
                let mut v = vec![Q::zero(); n];
                v[j] = one;
                v[i] = sign;
                out.push(v);
            }
        }
        match rs.lie_type() {
            LieType::B => {
                let mut v = vec![Q::zero(); n];
                v[j] = one;
                out.push(v);
            }
            LieType::C => {
                let mut v = vec![Q::zero(); n];
                v[j] = Q::from_integer(2);
                out.push(v);
            }
            LieType::D => {}
        }
    }
    out
}

pub fn positive_roots(rs: &RootSystem) -> Vec<Weight> {
    positive_roots_eps(rs)
        .iter()
        .map(|v| rs.epsilon_to_root_basis(v))
        .collect()
}

/// The reflection `s_β` for a positive root `β` given in the root basis.
pub fn reflection(rs: &RootSystem, beta: &Weight) -> Result<SignedPerm> {
    let roots: HashSet<Weight> = positive_roots(rs).into_iter().collect();
    if !roots.contains(beta) {
        return Err(Error::NotARoot(beta.to_string()));
    }
    let b = rs.root_basis_to_epsilon(beta);
    let bb: Q = b.iter().map(|x| *x * *x).sum();
    let n = rs.rank();
    let mut window = Vec::with_capacity(n);
    for i in 0..n {
        let c = Q::from_integer(2) * b[i] / bb;
        let img: Vec<Q> = (0..n)
            .map(|k| Q::from_integer((k == i) as i64) - c * b[k])
            .collect();
        let k = img
            .iter()
            .position(|x| !x.is_zero())
            .expect("nonzero image");
        let sign = if img[k] > Q::zero() { 1 } else { -1 };
        window.push(sign * (k as i32 + 1));
    }
    SignedPerm::new(window)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: LieType, n: usize) -> RootSystem {
        RootSystem::new(t, n).unwrap()
    }

    #[test]
    fn counterexample_words() {
        let b4 = rs(LieType::B, 4);
        assert_eq!(
            SignedPerm::from_word(&b4, &[3, 2, 1, 2, 3])
                .unwrap()
                .window(),
            &[1, 2, -3, 4]
        );
        assert_eq!(
            SignedPerm::from_word(&b4, &[3, 4, 2, 1, 2, 3])
                .unwrap()
                .window(),
            &[1, 4, -3, 2]
        );
        let d4 = rs(LieType::D, 4);
        assert_eq!(
            SignedPerm::from_word(&d4, &[4, 1, 2, 3]).unwrap().window(),
            &[-1, 4, -2, 3]
        );
        assert_eq!(
            SignedPerm::from_word(&d4, &[4, 3, 1, 2, 3])
                .unwrap()
                .window(),
            &[-1, 2, -4, 3]
        );
        assert_eq!(
            SignedPerm::from_word(&d4, &[]).unwrap(),
            SignedPerm::identity(4)
        );
        assert!(SignedPerm::from_word(&d4, &[5]).is_err());
    }

    #[test]
    fn counts_in_b2() {
        let b2 = rs(LieType::B, 2);
        let s = SignedPerm::new(vec![-1, 2]).unwrap();
        assert_eq!((s.inv_count(), s.neg_count()), (1, 1));
        assert_eq!(s.length(&b2).unwrap(), 1);
        assert_eq!(SignedPerm::identity(2).length(&b2).unwrap(), 0);
    }

    #[test]
    fn d_parity_error() {
        let d4 = rs(LieType::D, 4);
        let s = SignedPerm::new(vec![-1, 2, 3, 4]).unwrap();
        assert!(matches!(s.length(&d4), Err(Error::ParityViolation(_))));
    }

    #[test]
    fn invalid_windows() {
        assert!(SignedPerm::new(vec![1, 1]).is_err());
        assert!(SignedPerm::new(vec![0, 1]).is_err());
        assert!(SignedPerm::new(vec![3, 1]).is_err());
        assert!(SignedPerm::identity(3)
            .compose(&SignedPerm::identity(4))
            .is_err());
    }

    #[test]
    fn counterexample_weights() {
        let b4 = rs(LieType::B, 4);
        let v: SignedPerm = "1,2,-3,4".parse().unwrap();
        let w3 = b4.fundamental_weight(3).unwrap();
        assert_eq!(
            v.apply_to_weight(&b4, &w3),
            Weight::from_ints(&[0, 0, 0, 1])
        );
        let b5 = rs(LieType::B, 5);
        let v: SignedPerm = "3,4,5,-1,2".parse().unwrap();
        let w4 = b5.fundamental_weight(4).unwrap();
        assert_eq!(
            v.apply_to_weight(&b5, &w4),
            Weight::from_ints(&[0, 1, 0, 0, 0])
        );
        let d5 = rs(LieType::D, 5);
        let v: SignedPerm = "4,5,1,2,3".parse().unwrap();
        let w3 = d5.fundamental_weight(3).unwrap();
        assert_eq!(
            v.apply_to_weight(&d5, &w3),
            "3/2,1/2,1,0,0".parse().unwrap()
        );
    }

    #[test]
    fn root_counts() {
        assert_eq!(positive_roots(&rs(LieType::B, 4)).len(), 16);
        assert_eq!(positive_roots(&rs(LieType::C, 4)).len(), 16);
        assert_eq!(positive_roots(&rs(LieType::D, 4)).len(), 12);
        for t in [LieType::B, LieType::C, LieType::D] {
            let r = rs(t, 5);
            let roots = positive_roots(&r);
            for i in 1..=5 {
                assert!(roots.contains(&r.simple_root(i)));
                assert_eq!(
                    reflection(&r, &r.simple_root(i)).unwrap(),
                    SignedPerm::generator(&r, i).unwrap()
                );
            }
            assert!(roots
                .iter()
                .all(|b| b.sign_profile() == crate::SignProfile::AllNonneg));
        }
    }

    #[test]
    fn reflection_rejects_non_roots() {
        let b3 = rs(LieType::B, 3);
        assert!(reflection(&b3, &Weight::from_ints(&[2, 0, 0])).is_err());
    }

    #[test]
    fn b5_reflection_cover() {
        let b5 = rs(LieType::B, 5);
        let v: SignedPerm = "3,4,5,-1,2".parse().unwrap();
        let s = reflection(&b5, &b5.root_from_indices(&[2, 3])).unwrap();
        assert_eq!((&s * &v).length(&b5).unwrap(), v.length(&b5).unwrap() + 1);
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("s3 s2 s1").unwrap(), vec![3, 2, 1]);
        assert_eq!(parse_word("3,2,1").unwrap(), vec![3, 2, 1]);
        assert!(parse_word("x").is_err());
    }
}
