//! Root data of type A_infinity: vertices, positive roots, weights, words,
//! divided power words, the lexicographic convex order and Kostant partitions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = i32;

/// Default cap on the height of weights whose words are enumerated.
pub const DEFAULT_HEIGHT_CAP: usize = 12;

pub fn cartan(i: Vertex, j: Vertex) -> i32 {
    if i == j {
        2
    } else if (i - j).abs() == 1 {
        -1
    } else {
        0
    }
}

/// The orientation sign `eps_{i,j} = j - i`, defined only for neighbours.
pub fn epsilon(i: Vertex, j: Vertex) -> Result<i32> {
    if (i - j).abs() == 1 {
        Ok(j - i)
    } else {
        Err(Error::EpsilonUndefined(i, j))
    }
}

/// The positive root `alpha_lo + ... + alpha_hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(i32, i32)", into = "(i32, i32)")]
pub struct Root {
    pub lo: Vertex,
    pub hi: Vertex,
}

impl TryFrom<(i32, i32)> for Root {
    type Error = Error;
    fn try_from((lo, hi): (i32, i32)) -> Result<Self> {
        Root::new(lo, hi)
    }
}

impl From<Root> for (i32, i32) {
    fn from(r: Root) -> Self {
        (r.lo, r.hi)
    }
}

impl Root {
    pub fn new(lo: Vertex, hi: Vertex) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidRoot(lo, hi));
        }
        Ok(Root { lo, hi })
    }

    pub fn simple(i: Vertex) -> Self {
        Root { lo: i, hi: i }
    }

    pub fn height(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    /// The cuspidal word `lo (lo+1) ... hi`.
    pub fn word(&self) -> Vec<Vertex> {
        (self.lo..=self.hi).collect()
    }

    pub fn weight(&self) -> Weight {
        Weight::from_word(&self.word())
    }

    /// Lexicographic convex order.
    pub fn convex_cmp(&self, other: &Root) -> Ordering {
        (self.lo, self.hi).cmp(&(other.lo, other.hi))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

pub fn i_alpha(alpha: &Root) -> Vec<Vertex> {
    alpha.word()
}

pub fn convex_compare(a: &Root, b: &Root) -> Ordering {
    a.convex_cmp(b)
}

/// An element of the positive root lattice, stored sparsely.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<(i32, u32)>", into = "Vec<(i32, u32)>")]
pub struct Weight(BTreeMap<Vertex, u32>);

impl From<Vec<(i32, u32)>> for Weight {
    fn from(v: Vec<(i32, u32)>) -> Self {
        let mut w = Weight::default();
        for (i, m) in v {
            w.add_vertex(i, m);
        }
        w
    }
}

impl From<Weight> for Vec<(i32, u32)> {
    fn from(w: Weight) -> Self {
        w.0.into_iter().collect()
    }
}

impl Weight {
    pub fn zero() -> Self {
        Weight::default()
    }

    pub fn from_word(word: &[Vertex]) -> Self {
        let mut w = Weight::default();
        for &i in word {
            w.add_vertex(i, 1);
        }
        w
    }

    pub fn add_vertex(&mut self, i: Vertex, m: u32) {
        if m > 0 {
            *self.0.entry(i).or_insert(0) += m;
        }
    }

    pub fn mult(&self, i: Vertex) -> u32 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn height(&self) -> usize {
        self.0.values().map(|&m| m as usize).sum()
    }

    pub fn scaled(&self, k: u32) -> Self {
        Weight(self.0.iter().map(|(&i, &m)| (i, m * k)).filter(|&(_, m)| m > 0).collect())
    }

    pub fn plus(&self, other: &Weight) -> Self {
        let mut w = self.clone();
        for (&i, &m) in &other.0 {
            w.add_vertex(i, m);
        }
        w
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, u32)> + '_ {
        self.0.iter().map(|(&i, &m)| (i, m))
    }

    pub fn support(&self) -> Vec<Vertex> {
        self.0.keys().copied().collect()
    }

    /// `self - other` if it stays in the positive cone.
    pub fn minus(&self, other: &Weight) -> Option<Weight> {
        let mut w = self.clone();
        for (&i, &m) in &other.0 {
            let e = w.0.get_mut(&i)?;
            if *e < m {
                return None;
            }
            *e -= m;
            if *e == 0 {
                w.0.remove(&i);
            }
        }
        Some(w)
    }
}

pub fn height(theta: &Weight) -> usize {
    theta.height()
}

/// All arrangements of the letter multiset of `theta`, in lexicographic order.
pub fn words_of(theta: &Weight, cap: usize) -> Result<Vec<Vec<Vertex>>> {
    if theta.height() > cap {
        return Err(Error::SizeGuard(format!("height {} exceeds cap {}", theta.height(), cap)));
    }
    let mut counts: Vec<(Vertex, u32)> = theta.iter().collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(theta.height());
    fn rec(counts: &mut [(Vertex, u32)], cur: &mut Vec<Vertex>, n: usize, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..counts.len() {
            if counts[k].1 > 0 {
                counts[k].1 -= 1;
                cur.push(counts[k].0);
                rec(counts, cur, n, out);
                cur.pop();
                counts[k].1 += 1;
            }
        }
    }
    let n = theta.height();
    rec(&mut counts, &mut cur, n, &mut out);
    Ok(out)
}

/// A word whose letters carry divided power exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DividedPowerWord {
    pub parts: Vec<(Vertex, usize)>,
}

impl DividedPowerWord {
    /// Drops zero exponents.
    pub fn new(parts: Vec<(Vertex, usize)>) -> Self {
        DividedPowerWord { parts: parts.into_iter().filter(|&(_, k)| k > 0).collect() }
    }

    pub fn plain(word: &[Vertex]) -> Self {
        DividedPowerWord::new(word.iter().map(|&i| (i, 1)).collect())
    }

    pub fn expand(&self) -> Vec<Vertex> {
        self.parts.iter().flat_map(|&(i, k)| std::iter::repeat(i).take(k)).collect()
    }

    pub fn blocks(&self) -> Vec<usize> {
        self.parts.iter().map(|&(_, k)| k).collect()
    }

    pub fn len(&self) -> usize {
        self.parts.iter().map(|&(_, k)| k).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn weight(&self) -> Weight {
        Weight::from_word(&self.expand())
    }

    pub fn concat(&self, other: &DividedPowerWord) -> DividedPowerWord {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        DividedPowerWord { parts }
    }
}

impl fmt::Display for DividedPowerWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, &(i, k)) in self.parts.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            if k == 1 {
                write!(f, "{i}")?;
            } else {
                write!(f, "{i}^({k})")?;
            }
        }
        Ok(())
    }
}

/// A sequence of roots with multiplicities, strictly decreasing in the convex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(Root, usize)>", into = "Vec<(Root, usize)>")]
pub struct KostantPartition {
    parts: Vec<(Root, usize)>,
}

impl TryFrom<Vec<(Root, usize)>> for KostantPartition {
    type Error = Error;
    fn try_from(parts: Vec<(Root, usize)>) -> Result<Self> {
        KostantPartition::new(parts)
    }
}

impl From<KostantPartition> for Vec<(Root, usize)> {
    fn from(p: KostantPartition) -> Self {
        p.parts
    }
}

impl KostantPartition {
    pub fn new(parts: Vec<(Root, usize)>) -> Result<Self> {
        if let Some(&(r, _)) = parts.iter().find(|&&(_, m)| m == 0) {
            return Err(Error::InvalidPartition(format!("zero multiplicity on {r}")));
        }
        for pair in parts.windows(2) {
            if pair[0].0.convex_cmp(&pair[1].0) != Ordering::Greater {
                return Err(Error::InvalidPartition(format!(
                    "roots {} and {} are not strictly decreasing",
                    pair[0].0, pair[1].0
                )));
            }
        }
        Ok(KostantPartition { parts })
    }

    pub fn parts(&self) -> &[(Root, usize)] {
        &self.parts
    }

    pub fn weight(&self) -> Weight {
        self.parts.iter().fold(Weight::zero(), |acc, (r, m)| acc.plus(&r.weight().scaled(*m as u32)))
    }
}

impl fmt::Display for KostantPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, (r, m)) in self.parts.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}^{m}")?;
        }
        write!(f, ")")
    }
}

/// Positive roots all of whose simple constituents occur in `theta`.
pub fn roots_below(theta: &Weight) -> Vec<Root> {
    let mut out = Vec::new();
    for lo in theta.support() {
        let mut hi = lo;
        while theta.mult(hi) > 0 {
            out.push(Root { lo, hi });
            hi += 1;
        }
    }
    out
}

/// All Kostant partitions of `theta`, sorted lexicographically on their part sequences.
pub fn kostant_partitions(theta: &Weight) -> Vec<KostantPartition> {
    let mut roots = roots_below(theta);
    roots.sort_by(|a, b| b.convex_cmp(a));
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        roots: &[Root],
        rest: &Weight,
        cur: &mut Vec<(Root, usize)>,
        out: &mut Vec<Vec<(Root, usize)>>,
    ) {
        if rest.height() == 0 {
            out.push(cur.clone());
            return;
        }
        for (k, r) in roots.iter().enumerate() {
            let rw = r.weight();
            let mut m = 1;
            while let Some(next) = rest.minus(&rw.scaled(m as u32)) {
                cur.push((*r, m));
                rec(&roots[k + 1..], &next, cur, out);
                cur.pop();
                m += 1;
            }
        }
    }
    rec(&roots, theta, &mut cur, &mut out);
    let key = |p: &Vec<(Root, usize)>| p.iter().map(|(r, m)| (r.lo, r.hi, *m)).collect::<Vec<_>>();
    out.sort_by_key(key);
    out.into_iter().map(|parts| KostantPartition { parts }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_entries() {
        assert_eq!(cartan(1, 1), 2);
        assert_eq!(cartan(1, 2), -1);
        assert_eq!(cartan(1, 5), 0);
        assert_eq!(epsilon(1, 2), Ok(1));
        assert_eq!(epsilon(2, 1), Ok(-1));
        assert!(epsilon(1, 3).is_err());
    }

    #[test]
    fn heights_and_words() {
        let t = Weight::from(vec![(1, 2), (2, 3)]);
        assert_eq!(t.height(), 5);
        assert_eq!(Root::new(1, 3).unwrap().weight().scaled(2).height(), 6);
        assert_eq!(i_alpha(&Root::new(-1, 1).unwrap()), vec![-1, 0, 1]);
        assert_eq!(words_of(&Weight::from_word(&[1, 2]), 12).unwrap(), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(words_of(&Weight::from_word(&[1, 1]), 12).unwrap().len(), 1);
        assert_eq!(words_of(&Weight::from_word(&[1, 2, 3]), 12).unwrap().len(), 6);
        assert!(words_of(&Weight::from_word(&[1; 13]), 12).is_err());
    }

    #[test]
    fn convex_order() {
        let a1 = Root::simple(1);
        let a12 = Root::new(1, 2).unwrap();
        let a2 = Root::simple(2);
        assert_eq!(convex_compare(&a1, &a12), Ordering::Less);
        assert_eq!(convex_compare(&a12, &a2), Ordering::Less);
        assert_eq!(convex_compare(&a12, &a12), Ordering::Equal);
    }

    #[test]
    fn partition_validation() {
        let a1 = Root::simple(1);
        let a2 = Root::simple(2);
        assert!(KostantPartition::new(vec![(a2, 1), (a1, 1)]).is_ok());
        assert!(KostantPartition::new(vec![(a1, 1), (a2, 1)]).is_err());
        assert!(KostantPartition::new(vec![(a1, 1), (a1, 1)]).is_err());
        let json = serde_json::to_string(&KostantPartition::new(vec![(a2, 1), (a1, 2)]).unwrap()).unwrap();
        assert_eq!(json, "[[[2,2],1],[[1,1],2]]");
    }
}
