//! Root systems of types B, C and D with the special node labelled 1.
//!
//! Simple roots in orthogonal coordinates `e_1, ..., e_n`:
//!
//! | type | `α_1`       | `α_i` (i ≥ 2)   |
//! |------|-------------|-----------------|
//! | B    | `e_1`       | `e_i - e_{i-1}` |
//! | C    | `2e_1`      | `e_i - e_{i-1}` |
//! | D    | `e_1 + e_2` | `e_i - e_{i-1}` |
//!
//! Relabelling against Bourbaki: node `i` here is Bourbaki node `n + 1 - i`,
//! and `e_i` here is Bourbaki `ε_{n+1-i}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Q = Rational64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    B,
    C,
    D,
}

impl LieType {
    pub fn min_rank(self) -> usize {
        match self {
            LieType::B | LieType::C => 2,
            LieType::D => 4,
        }
    }

    pub fn letter(self) -> char {
        match self {
            LieType::B => 'B',
            LieType::C => 'C',
            LieType::D => 'D',
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            other => Err(Error::Parse(format!("unknown type {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootSystem {
    lie_type: LieType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(lie_type, rank)?;
        Ok(RootSystem {
            lie_type,
            rank,
            cartan,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn check_node(&self, r: usize) -> Result<()> {
        if r == 0 || r > self.rank {
            return Err(Error::NodeOutOfRange { r, n: self.rank });
        }
        Ok(())
    }

    /// Simple root `α_i` in orthogonal coordinates.
    pub fn simple_root_eps(&self, i: usize) -> Vec<Q> {
        simple_root_eps(self.lie_type, self.rank, i)
    }

    /// `α_i` as a weight in the root basis.
    pub fn simple_root(&self, i: usize) -> Weight {
        let mut c = vec![Q::zero(); self.rank];
        c[i - 1] = Q::from_integer(1);
        Weight(c)
    }

    /// Sum of simple roots with the given indices (repeats add up).
    pub fn root_from_indices(&self, idx: &[usize]) -> Weight {
        let mut c = vec![Q::zero(); self.rank];
        for &i in idx {
            c[i - 1] += Q::from_integer(1);
        }
        Weight(c)
    }

    /// `⟨χ, α̌_j⟩`.
    pub fn pairing(&self, chi: &Weight, j: usize) -> Q {
        chi.0
            .iter()
            .enumerate()
            .map(|(i, c)| *c * Q::from_integer(self.cartan[i][j - 1]))
            .sum()
    }

    pub fn fundamental_weight(&self, r: usize) -> Result<Weight> {
        self.check_node(r)?;
        let inv = invert(&self.cartan);
        // ω_r = Σ_i c_i α_i with Σ_i c_i A[i][j] = δ_rj, so c is row r of A^{-1}.
        Ok(Weight(inv[r - 1].clone()))
    }

    pub fn root_basis_to_epsilon(&self, chi: &Weight) -> Vec<Q> {
        let n = self.rank;
        let mut out = vec![Q::zero(); n];
        for (i, c) in chi.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, e) in self.simple_root_eps(i + 1).into_iter().enumerate() {
                out[k] += *c * e;
            }
        }
        out
    }

    pub fn epsilon_to_root_basis(&self, x: &[Q]) -> Weight {
        let n = self.rank;
        let half = Q::new(1, 2);
        let mut tail = vec![Q::zero(); n + 1];
        for k in (0..n).rev() {
            tail[k] = tail[k + 1] + x[k];
        }
        let mut c: Vec<Q> = tail[..n].to_vec();
        match self.lie_type {
            LieType::B => {}
            LieType::C => c[0] = tail[0] * half,
            LieType::D => {
                let rest = tail[1];
                c[0] = (rest + x[0]) * half;
                c[1] = (rest - x[0]) * half;
            }
        }
        Weight(c)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let t = chars
            .next()
            .ok_or_else(|| Error::Parse("empty type/rank".into()))?;
        let lie_type: LieType = t.to_string().parse()?;
        let n: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        RootSystem::new(lie_type, n)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.lie_type, self.rank)
    }
}

fn simple_root_eps(t: LieType, n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    if i == 1 {
        match t {
            LieType::B => v[0] = Q::from_integer(1),
            LieType::C => v[0] = Q::from_integer(2),
            LieType::D => {
                v[0] = Q::from_integer(1);
                v[1] = Q::from_integer(1);
            }
        }
    } else {
        v[i - 1] = Q::from_integer(1);
        v[i - 2] = Q::from_integer(-1);
    }
    v
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| *x * *y).sum()
}

pub fn cartan_matrix(lie_type: LieType, n: usize) -> Result<Vec<Vec<i64>>> {
    if n < lie_type.min_rank() {
        return Err(Error::RankOutOfRange {
            ty: lie_type.letter(),
            n,
            min: lie_type.min_rank(),
        });
    }
    let roots: Vec<Vec<Q>> = (1..=n).map(|i| simple_root_eps(lie_type, n, i)).collect();
    let two = Q::from_integer(2);
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = two * dot(&roots[i], &roots[j]) / dot(&roots[j], &roots[j]);
                    debug_assert!(v.is_integer());
                    v.to_integer()
                })
                .collect()
        })
        .collect())
}

fn invert(a: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x)).collect();
            r.extend((0..n).map(|j| Q::from_integer((i == j) as i64)));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&r| !m[r][c].is_zero())
            .expect("Cartan matrix is invertible");
        m.swap(c, p);
        let piv = m[c][c];
        for x in m[c].iter_mut() {
            *x /= piv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c];
                let pivot_row = m[c].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignProfile {
    AllNonneg,
    AllNonpos,
    Mixed,
    Zero,
}

/// A weight written in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![Q::zero(); n])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Weight(c.iter().map(|&x| Q::from_integer(x)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn sign_profile(&self) -> SignProfile {
        let pos = self.0.iter().any(|c| c.is_positive());
        let neg = self.0.iter().any(|c| c.is_negative());
        match (pos, neg) {
            (false, false) => SignProfile::Zero,
            (true, false) => SignProfile::AllNonneg,
            (false, true) => SignProfile::AllNonpos,
            (true, true) => SignProfile::Mixed,
        }
    }

    pub fn scale(&self, k: Q) -> Weight {
        Weight(self.0.iter().map(|c| *c * k).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<Q>()
                    .map_err(|_| Error::Parse(format!("bad rational {p:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        v.join(",").parse().map_err(serde::de::Error::custom)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| *a + *b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| *a - *b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -*a).collect())
    }
}

impl Mul<&Weight> for Q {
    type Output = Weight;
    fn mul(self, w: &Weight) -> Weight {
        w.scale(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Q {
        Q::new(a, b)
    }

    #[test]
    fn b2_cartan() {
        assert_eq!(
            cartan_matrix(LieType::B, 2).unwrap(),
            vec![vec![2, -1], vec![-2, 2]]
        );
    }

    #[test]
    fn d4_node_three_is_the_branch() {
        let a = cartan_matrix(LieType::D, 4).unwrap();
        let nbrs: Vec<usize> = (0..4)
            .filter(|&j| j != 2 && a[2][j] != 0)
            .map(|j| j + 1)
            .collect();
        assert_eq!(nbrs, vec![1, 2, 4]);
        assert_eq!(a[0][1], 0);
    }

    #[test]
    fn rank_bounds() {
        assert!(RootSystem::new(LieType::B, 1).is_err());
        assert!(RootSystem::new(LieType::D, 3).is_err());
        assert!(RootSystem::new(LieType::C, 2).is_ok());
    }

    #[test]
    fn table_fundamental_weights() {
        let b5 = RootSystem::new(LieType::B, 5).unwrap();
        assert_eq!(
            b5.fundamental_weight(4).unwrap(),
            Weight::from_ints(&[2, 2, 2, 2, 1])
        );
        let d5 = RootSystem::new(LieType::D, 5).unwrap();
        assert_eq!(
            d5.fundamental_weight(3).unwrap(),
            Weight(vec![q(3, 2), q(3, 2), q(3, 1), q(2, 1), q(1, 1)])
        );
    }

    #[test]
    fn epsilon_images() {
        let b = RootSystem::new(LieType::B, 3).unwrap();
        let e = b.root_basis_to_epsilon(&b.simple_root(1));
        assert_eq!(e, vec![q(1, 1), q(0, 1), q(0, 1)]);
        let d = RootSystem::new(LieType::D, 4).unwrap();
        let e = d.root_basis_to_epsilon(&d.simple_root(1));
        assert_eq!(e, vec![q(1, 1), q(1, 1), q(0, 1), q(0, 1)]);
    }

    #[test]
    fn sign_profiles() {
        assert_eq!(Weight::zero(3).sign_profile(), SignProfile::Zero);
        assert_eq!(
            Weight::from_ints(&[0, 0, 0, 1]).sign_profile(),
            SignProfile::AllNonneg
        );
        assert_eq!(
            Weight::from_ints(&[0, 0, -1, 0]).sign_profile(),
            SignProfile::AllNonpos
        );
        assert_eq!(
            Weight::from_ints(&[1, -1]).sign_profile(),
            SignProfile::Mixed
        );
    }

    #[test]
    fn parsing() {
        let w: Weight = "3/2,3/2,3,2,1".parse().unwrap();
        assert_eq!(w.0[0], q(3, 2));
        assert_eq!(w.to_string(), "(3/2,3/2,3,2,1)");
        let rs = RootSystem::parse("D5").unwrap();
        assert_eq!((rs.lie_type(), rs.rank()), (LieType::D, 5));
        assert!(RootSystem::parse("E8").is_err());
    }
}
