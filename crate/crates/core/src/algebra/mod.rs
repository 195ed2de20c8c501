//! The KLR algebra `R_theta` of type A in its normal-form basis `psi_w y^k 1_i`.

mod engine;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::lie::{cartan, DividedPowerWord, Vertex, Weight};
use crate::symgroup::{is_reduced, parabolic_longest, Perm};

pub use engine::clear_caches;
pub(crate) use engine::{canon, eval_word, mul_monos, prune, Terms};

pub type Exps = SmallVec<[u8; 16]>;
pub type Idem = SmallVec<[Vertex; 16]>;

/// `psi_w y_1^{k_1} ... y_d^{k_d} 1_i`, with `psi_w` taken along the lexmin reduced word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub w: Perm,
    pub y: Exps,
    pub idem: Idem,
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = canon(&self.w);
        for g in word.iter() {
            write!(f, "psi{} ", g + 1)?;
        }
        for (t, &k) in self.y.iter().enumerate() {
            match k {
                0 => {}
                1 => write!(f, "y{} ", t + 1)?,
                _ => write!(f, "y{}^{} ", t + 1, k)?,
            }
        }
        write!(f, "1_")?;
        for (n, i) in self.idem.iter().enumerate() {
            if n > 0 {
                write!(f, ".")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl Mono {
    pub fn idempotent(word: &[Vertex]) -> Self {
        Mono {
            w: Perm::identity(word.len()),
            y: SmallVec::from_elem(0, word.len()),
            idem: word.iter().copied().collect(),
        }
    }

    pub fn new(w: Perm, y: &[u8], idem: &[Vertex]) -> Self {
        assert_eq!(w.degree(), y.len());
        assert_eq!(w.degree(), idem.len());
        Mono { w, y: y.iter().copied().collect(), idem: idem.iter().copied().collect() }
    }

    pub fn d(&self) -> usize {
        self.idem.len()
    }

    /// Idempotent on the left: `w · i`.
    pub fn top(&self) -> Idem {
        let mut out = self.idem.clone();
        for (p, &x) in self.w.images().iter().enumerate() {
            out[x as usize] = self.idem[p];
        }
        out
    }

    pub fn degree(&self) -> i32 {
        let d = self.d();
        let mut deg: i32 = self.y.iter().map(|&k| 2 * k as i32).sum();
        for a in 0..d {
            for b in a + 1..d {
                if self.w.apply(a) > self.w.apply(b) {
                    deg -= cartan(self.idem[a], self.idem[b]);
                }
            }
        }
        deg
    }

    /// Horizontal concatenation.
    pub fn concat(&self, other: &Mono) -> Mono {
        let mut y = self.y.clone();
        y.extend_from_slice(&other.y);
        let mut idem = self.idem.clone();
        idem.extend_from_slice(&other.idem);
        Mono { w: self.w.direct_sum(&other.w), y, idem }
    }

    pub fn weight(&self) -> Weight {
        Weight::from_word(&self.idem)
    }
}

/// Degree information of an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(i32),
    Mixed,
}

/// A finite integral combination of normal monomials in a fixed `R_theta`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    weight: Weight,
    terms: BTreeMap<Mono, i64>,
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {m}")?;
        }
        Ok(())
    }
}

impl AlgebraElement {
    pub fn zero(weight: Weight) -> Self {
        AlgebraElement { weight, terms: BTreeMap::new() }
    }

    pub fn from_mono(m: Mono) -> Self {
        AlgebraElement { weight: m.weight(), terms: BTreeMap::from([(m, 1)]) }
    }

    pub(crate) fn from_terms(weight: Weight, terms: Terms) -> Self {
        AlgebraElement { weight, terms: terms.into_iter().filter(|(_, c)| *c != 0).collect() }
    }

    pub fn from_pairs(weight: Weight, pairs: impl IntoIterator<Item = (Mono, i64)>) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in pairs {
            *terms.entry(m).or_insert(0) += c;
        }
        terms.retain(|_, c| *c != 0);
        AlgebraElement { weight, terms }
    }

    /// `1_i`.
    pub fn idempotent(word: &[Vertex]) -> Self {
        AlgebraElement::from_mono(Mono::idempotent(word))
    }

    /// `1_theta`, the sum of all `1_i`; `words` must list `I^theta`.
    pub fn unit(weight: Weight, words: &[Vec<Vertex>]) -> Self {
        AlgebraElement::from_pairs(weight, words.iter().map(|w| (Mono::idempotent(w), 1)))
    }

    /// `y_t 1_i` (0-based `t`).
    pub fn dot(t: usize, word: &[Vertex]) -> Self {
        let mut m = Mono::idempotent(word);
        m.y[t] += 1;
        AlgebraElement::from_mono(m)
    }

    /// `y^k 1_i`.
    pub fn dots(k: &[u8], word: &[Vertex]) -> Self {
        let mut m = Mono::idempotent(word);
        m.y = k.iter().copied().collect();
        AlgebraElement::from_mono(m)
    }

    /// `psi_{g_1} ... psi_{g_l} 1_i` for a reduced word of 0-based generators.
    pub fn psi_word(word: &[u8], idem: &[Vertex]) -> Result<Self> {
        let d = idem.len();
        if word.iter().any(|&g| g as usize + 1 >= d) || !is_reduced(word, d) {
            return Err(Error::NotReduced(word.iter().map(|&g| g as usize + 1).collect()));
        }
        Ok(Self::word_product(word, idem))
    }

    /// `psi_{g_1} ... psi_{g_l} 1_i` for any word of 0-based generators.
    pub fn word_product(word: &[u8], idem: &[Vertex]) -> Self {
        let idem: Idem = idem.iter().copied().collect();
        let y: Exps = SmallVec::from_elem(0, idem.len());
        AlgebraElement::from_terms(Weight::from_word(&idem), eval_word(word, &y, &idem))
    }

    /// `psi_w 1_i` along the lexmin reduced word of `w`.
    pub fn psi_perm(w: &Perm, idem: &[Vertex]) -> Self {
        AlgebraElement::from_mono(Mono::new(w.clone(), &vec![0; idem.len()], idem))
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn terms(&self) -> &BTreeMap<Mono, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Degree {
        let mut it = self.terms.keys().map(Mono::degree);
        match it.next() {
            None => Degree::Zero,
            Some(d0) => {
                if it.all(|d| d == d0) {
                    Degree::Homogeneous(d0)
                } else {
                    Degree::Mixed
                }
            }
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return AlgebraElement::zero(self.weight.clone());
        }
        AlgebraElement {
            weight: self.weight.clone(),
            terms: self.terms.iter().map(|(m, &x)| (m.clone(), x * c)).collect(),
        }
    }

    fn check_weight(&self, other: &AlgebraElement) -> Result<()> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch(format!("{:?} vs {:?}", self.weight, other.weight)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &AlgebraElement) -> Result<Self> {
        self.check_weight(other)?;
        let mut terms = self.terms.clone();
        for (m, &c) in &other.terms {
            let e = terms.entry(m.clone()).or_insert(0);
            *e += c;
            if *e == 0 {
                terms.remove(m);
            }
        }
        Ok(AlgebraElement { weight: self.weight.clone(), terms })
    }

    pub fn add_assign_scaled(&mut self, other: &AlgebraElement, c: i64) {
        assert_eq!(self.weight, other.weight, "weight mismatch");
        for (m, &x) in &other.terms {
            let e = self.terms.entry(m.clone()).or_insert(0);
            *e += c * x;
            if *e == 0 {
                self.terms.remove(m);
            }
        }
    }

    /// Product in normal form.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<Self> {
        self.check_weight(other)?;
        let mut acc = Terms::default();
        let tops: Vec<(Idem, &Mono, i64)> = other.terms.iter().map(|(m, &c)| (m.top(), m, c)).collect();
        for (a, &ca) in &self.terms {
            for (top, b, cb) in &tops {
                if a.idem == *top {
                    mul_monos(a, b, ca * cb, &mut acc);
                }
            }
        }
        prune(&mut acc);
        Ok(AlgebraElement::from_terms(self.weight.clone(), acc))
    }

    /// Horizontal concatenation `self ∘ other`.
    pub fn concat(&self, other: &AlgebraElement) -> Self {
        let mut terms = BTreeMap::new();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                *terms.entry(a.concat(b)).or_insert(0) += ca * cb;
            }
        }
        terms.retain(|_, c| *c != 0);
        AlgebraElement { weight: self.weight.plus(&other.weight), terms }
    }

    /// `1_i * self`.
    pub fn left_idem(&self, word: &[Vertex]) -> Self {
        AlgebraElement {
            weight: self.weight.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.top().as_slice() == word).map(|(m, &c)| (m.clone(), c)).collect(),
        }
    }

    /// `self * 1_i`.
    pub fn right_idem(&self, word: &[Vertex]) -> Self {
        AlgebraElement {
            weight: self.weight.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.idem.as_slice() == word).map(|(m, &c)| (m.clone(), c)).collect(),
        }
    }

    /// Whether all terms have these left/right idempotents.
    pub fn in_corner(&self, left: &[Vertex], right: &[Vertex]) -> bool {
        self.terms.keys().all(|m| m.top().as_slice() == left && m.idem.as_slice() == right)
    }

    pub fn coefficient(&self, m: &Mono) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SerElement::from(self)).expect("serializable")
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("weight mismatch")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(&rhs.scale(-1)).expect("weight mismatch")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(-1)
    }
}

impl std::ops::Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.multiply(rhs).expect("weight mismatch")
    }
}

/// Serialized term.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SerTerm {
    pub coeff: i64,
    pub perm: Vec<usize>,
    pub y: Vec<u8>,
    pub idem: Vec<Vertex>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(transparent)]
pub struct SerElement(pub Vec<SerTerm>);

impl From<&AlgebraElement> for SerElement {
    fn from(a: &AlgebraElement) -> Self {
        SerElement(
            a.terms
                .iter()
                .map(|(m, &c)| SerTerm { coeff: c, perm: m.w.images1(), y: m.y.to_vec(), idem: m.idem.to_vec() })
                .collect(),
        )
    }
}

impl TryFrom<SerElement> for AlgebraElement {
    type Error = Error;
    fn try_from(s: SerElement) -> Result<Self> {
        let first = s.0.first().ok_or_else(|| Error::InvalidData("empty element has no weight".into()))?;
        let weight = Weight::from_word(&first.idem);
        let mut pairs = Vec::new();
        for t in s.0 {
            let w = Perm::from_images1(&t.perm)?;
            if t.y.len() != w.degree() || t.idem.len() != w.degree() {
                return Err(Error::InvalidData("term lengths differ".into()));
            }
            if Weight::from_word(&t.idem) != weight {
                return Err(Error::WeightMismatch("terms of different weight".into()));
            }
            pairs.push((Mono::new(w, &t.y, &t.idem), t.coeff));
        }
        Ok(AlgebraElement::from_pairs(weight, pairs))
    }
}

/// `y_{0,d} = y_1^0 y_2^1 ... y_d^{d-1}` exponents.
pub fn y0_exponents(d: usize) -> Vec<u8> {
    (0..d as u8).collect()
}

/// A divided power idempotent together with its defining word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DividedIdempotent {
    pub word: DividedPowerWord,
    pub element: AlgebraElement,
}

/// The monomial `1_{i_1^{(d_1)}} ∘ ... ∘ 1_{i_r^{(d_r)}}`.
pub fn divided_mono(word: &DividedPowerWord) -> Mono {
    let plain = word.expand();
    let w = parabolic_longest(&word.blocks());
    let y: Vec<u8> = word.parts.iter().flat_map(|&(_, k)| y0_exponents(k)).collect();
    Mono::new(w, &y, &plain)
}

pub fn divided_power_idempotent(word: &DividedPowerWord) -> DividedIdempotent {
    DividedIdempotent { word: word.clone(), element: AlgebraElement::from_mono(divided_mono(word)) }
}

/// `1'_{i^{(d)}} = y_{0,d} psi_{w_{0,d}}` in normal form.
pub fn divided_power_dual(i: Vertex, d: usize) -> AlgebraElement {
    let word = vec![i; d];
    let y0 = AlgebraElement::dots(&y0_exponents(d), &word);
    let w0 = AlgebraElement::psi_perm(&crate::symgroup::longest(d), &word);
    &y0 * &w0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn psi(word: &[u8], idem: &[i32]) -> AlgebraElement {
        AlgebraElement::psi_word(word, idem).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let p = psi(&[0], &[1, 2]);
        let sq = &psi(&[0], &[2, 1]) * &p;
        let expect = &AlgebraElement::dot(0, &[1, 2]) - &AlgebraElement::dot(1, &[1, 2]);
        assert_eq!(sq, expect);
        let p = psi(&[0], &[1, 1]);
        assert!((&p * &p).is_zero());
        let p = psi(&[0], &[1, 3]);
        assert_eq!(&psi(&[0], &[3, 1]) * &p, AlgebraElement::idempotent(&[1, 3]));
    }

    #[test]
    fn dot_slide() {
        // psi_1 y_1 1_{11} is a basis element; y_2 psi_1 1_{11} = psi_1 y_1 1_{11} + 1_{11}
        let e = AlgebraElement::idempotent(&[1, 1]);
        let lhs = &AlgebraElement::dot(1, &[1, 1]) * &psi(&[0], &[1, 1]);
        let basis = &psi(&[0], &[1, 1]) * &AlgebraElement::dot(0, &[1, 1]);
        assert_eq!(basis.len(), 1);
        assert_eq!(lhs, &basis + &e);
        // psi_1 y_1 = y_2 psi_1 - 1
        let rhs = &lhs - &e;
        assert_eq!(basis, &rhs - &AlgebraElement::zero(e.weight().clone()));
    }

    #[test]
    fn degrees() {
        assert_eq!(AlgebraElement::dot(2, &[1, 2, 1]).degree(), Degree::Homogeneous(2));
        assert_eq!(psi(&[0], &[1, 1]).degree(), Degree::Homogeneous(-2));
        assert_eq!(psi(&[0], &[1, 2]).degree(), Degree::Homogeneous(1));
        let mixed = &AlgebraElement::idempotent(&[1, 2]) + &AlgebraElement::dot(0, &[1, 2]);
        assert_eq!(mixed.degree(), Degree::Mixed);
    }

    #[test]
    fn non_reduced_rejected() {
        assert!(AlgebraElement::psi_word(&[0, 0], &[1, 2]).is_err());
        assert_eq!(psi(&[], &[1, 2]), AlgebraElement::idempotent(&[1, 2]));
    }

    #[test]
    fn divided_idempotents() {
        for d in 1..=4 {
            let w = DividedPowerWord::new(vec![(1, d)]);
            let e = divided_power_idempotent(&w).element;
            assert_eq!(&e * &e, e, "d = {d}");
            let e2 = divided_power_dual(1, d);
            assert_eq!(&e2 * &e2, e2, "d = {d}");
        }
        let e = divided_power_idempotent(&DividedPowerWord::new(vec![(1, 2)])).element;
        assert_eq!(e.len(), 1);
        let m = e.terms().keys().next().unwrap();
        assert_eq!(format!("{m}"), "psi1 y2 1_1.1");
        let w = DividedPowerWord::new(vec![(1, 2), (2, 2)]);
        let e = divided_power_idempotent(&w).element;
        assert_eq!(&e * &e, e);
        let a = divided_power_idempotent(&DividedPowerWord::new(vec![(1, 2)])).element;
        let b = divided_power_idempotent(&DividedPowerWord::new(vec![(2, 2)])).element;
        assert_eq!(a.concat(&b), e);
    }

    #[test]
    fn serialization_round_trip() {
        let x = &psi(&[1, 0], &[1, 2, 1]) * &AlgebraElement::dot(0, &[1, 2, 1]);
        let s = SerElement::from(&x);
        let back = AlgebraElement::try_from(s).unwrap();
        assert_eq!(back, x);
    }
}
