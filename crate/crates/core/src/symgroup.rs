//! Symmetric groups: permutations as image arrays, reduced words, parabolic
//! subgroups and minimal length coset representatives.
//!
//! Internally positions and generators are 0-based: generator `g` swaps
//! positions `g` and `g + 1`. Serialized forms are 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Images = SmallVec<[u8; 16]>;

/// A permutation of `{0, .., d-1}` stored by its images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Perm(Images);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images1())
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images1().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Perm::from_images1(&v).map_err(serde::de::Error::custom)
    }
}

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm((0..d as u8).collect())
    }

    /// From 0-based images; panics if not a bijection.
    pub fn from_images(images: &[usize]) -> Self {
        Perm::try_from_images(images).expect("not a permutation")
    }

    pub fn try_from_images(images: &[usize]) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in images {
            if x >= d || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm(images.iter().map(|&x| x as u8).collect()))
    }

    /// From 1-based images.
    pub fn from_images1(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{images:?}")));
        }
        Perm::try_from_images(&images.iter().map(|&x| x - 1).collect::<Vec<_>>())
    }

    pub fn images1(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv: Images = SmallVec::from_elem(0, self.0.len());
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn length(&self) -> usize {
        let n = self.0.len();
        let mut l = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[i] > self.0[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `s_g ∘ self`.
    pub fn left_mul_s(&self, g: usize) -> Perm {
        let mut v = self.0.clone();
        for x in v.iter_mut() {
            if *x as usize == g {
                *x = g as u8 + 1;
            } else if *x as usize == g + 1 {
                *x = g as u8;
            }
        }
        Perm(v)
    }

    /// `self ∘ s_g`.
    pub fn right_mul_s(&self, g: usize) -> Perm {
        let mut v = self.0.clone();
        v.swap(g, g + 1);
        Perm(v)
    }

    /// `l(s_g w) < l(w)`.
    pub fn has_left_descent(&self, g: usize) -> bool {
        let mut pg = 0;
        let mut pg1 = 0;
        for (i, &x) in self.0.iter().enumerate() {
            if x as usize == g {
                pg = i;
            } else if x as usize == g + 1 {
                pg1 = i;
            }
        }
        pg > pg1
    }

    /// `l(w s_g) < l(w)`.
    pub fn has_right_descent(&self, g: usize) -> bool {
        self.0[g] > self.0[g + 1]
    }

    /// Lexicographically smallest reduced word (0-based generators).
    pub fn lexmin_word(&self) -> Vec<u8> {
        let d = self.0.len();
        let mut inv = self.inverse().0;
        let mut word = Vec::new();
        loop {
            // left descents of w are the g with w^{-1}(g) > w^{-1}(g+1)
            let g = (0..d.saturating_sub(1)).find(|&g| inv[g] > inv[g + 1]);
            match g {
                Some(g) => {
                    word.push(g as u8);
                    inv.swap(g, g + 1);
                }
                None => return word,
            }
        }
    }

    /// Reduced word obtained by always removing the largest left descent.
    pub fn lexmax_word(&self) -> Vec<u8> {
        let d = self.0.len();
        let mut inv = self.inverse().0;
        let mut word = Vec::new();
        loop {
            let g = (0..d.saturating_sub(1)).rev().find(|&g| inv[g] > inv[g + 1]);
            match g {
                Some(g) => {
                    word.push(g as u8);
                    inv.swap(g, g + 1);
                }
                None => return word,
            }
        }
    }

    /// Reduced word built from the right, always peeling the smallest right descent.
    pub fn right_greedy_word(&self) -> Vec<u8> {
        let d = self.0.len();
        let mut w = self.0.clone();
        let mut word = Vec::new();
        while let Some(g) = (0..d.saturating_sub(1)).find(|&g| w[g] > w[g + 1]) {
            word.push(g as u8);
            w.swap(g, g + 1);
        }
        word.reverse();
        word
    }

    /// `w · i`: the word whose letter at position `w(p)` is `i_p`.
    pub fn act_on_word<T: Copy>(&self, word: &[T]) -> Vec<T> {
        let mut out = word.to_vec();
        for (p, &x) in self.0.iter().enumerate() {
            out[x as usize] = word[p];
        }
        out
    }

    /// Block sum `self × other`.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let d = self.0.len() as u8;
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&x| x + d));
        Perm(v)
    }

    /// Embeds into `S_total` acting on positions `offset..offset+d`.
    pub fn embed(&self, offset: usize, total: usize) -> Perm {
        let mut v: Images = (0..total as u8).collect();
        for (i, &x) in self.0.iter().enumerate() {
            v[offset + i] = x + offset as u8;
        }
        Perm(v)
    }
}

/// Permutation of a (0-based) word of generators.
pub fn word_to_perm(word: &[u8], d: usize) -> Perm {
    let mut p = Perm::identity(d);
    for &g in word.iter().rev() {
        p = p.left_mul_s(g as usize);
    }
    p
}

pub fn is_reduced(word: &[u8], d: usize) -> bool {
    word_to_perm(word, d).length() == word.len()
}

/// Lexicographically smallest reduced word, 1-based generator indices.
pub fn canonical_reduced_word(w: &Perm) -> Vec<usize> {
    w.lexmin_word().into_iter().map(|g| g as usize + 1).collect()
}

/// Half-open blocks of a composition.
pub fn blocks(comp: &[usize]) -> Vec<std::ops::Range<usize>> {
    let mut out = Vec::with_capacity(comp.len());
    let mut start = 0;
    for &c in comp {
        out.push(start..start + c);
        start += c;
    }
    out
}

pub fn longest(d: usize) -> Perm {
    Perm((0..d as u8).rev().collect())
}

/// Longest element of the parabolic subgroup of a composition.
pub fn parabolic_longest(comp: &[usize]) -> Perm {
    let d: usize = comp.iter().sum();
    let mut v: Images = SmallVec::with_capacity(d);
    for b in blocks(comp) {
        v.extend(b.clone().rev().map(|x| x as u8));
    }
    Perm(v)
}

/// `w` is minimal in `w S_comp`, i.e. increasing on each block.
pub fn is_min_left_rep(w: &Perm, comp: &[usize]) -> bool {
    blocks(comp).into_iter().all(|b| b.clone().zip(b.skip(1)).all(|(i, j)| w.apply(i) < w.apply(j)))
}

/// `w` is minimal in `S_comp w`.
pub fn is_min_right_rep(w: &Perm, comp: &[usize]) -> bool {
    is_min_left_rep(&w.inverse(), comp)
}

pub fn in_parabolic(w: &Perm, comp: &[usize]) -> bool {
    blocks(comp).into_iter().all(|b| b.clone().all(|i| b.contains(&w.apply(i))))
}

/// All permutations of `d` letters in lexicographic order of images.
pub fn all_perms(d: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..d).collect();
    loop {
        out.push(Perm::from_images(&cur));
        // next permutation
        let Some(i) = (0..d.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..d).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// Minimal length coset representatives: `D^right` (increasing on the blocks of
/// `right`), `^left D` (inverse increasing on the blocks of `left`) or both.
pub fn coset_min_reps(left: Option<&[usize]>, right: Option<&[usize]>, d: usize) -> Vec<Perm> {
    if let Some(r) = right {
        let mut reps = shuffles(r);
        if let Some(l) = left {
            reps.retain(|w| is_min_right_rep(w, l));
        }
        reps.sort();
        return reps;
    }
    match left {
        Some(l) => {
            let mut reps: Vec<Perm> = shuffles(l).into_iter().map(|w| w.inverse()).collect();
            reps.sort();
            reps
        }
        None => all_perms(d),
    }
}

/// Elements of `D^comp`: assignments of the block contents to increasing position sets.
fn shuffles(comp: &[usize]) -> Vec<Perm> {
    let d: usize = comp.iter().sum();
    let mut out = Vec::new();
    let mut images = vec![0usize; d];
    let mut used = vec![false; d];
    let bl = blocks(comp);
    fn rec(
        k: usize,
        bl: &[std::ops::Range<usize>],
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Perm>,
    ) {
        if k == bl.len() {
            out.push(Perm::from_images(images));
            return;
        }
        let size = bl[k].len();
        let free: Vec<usize> = (0..used.len()).filter(|&i| !used[i]).collect();
        choose(&free, size, &mut |subset: &[usize]| {
            for (off, &p) in subset.iter().enumerate() {
                images[bl[k].start + off] = p;
                used[p] = true;
            }
            rec(k + 1, bl, images, used, out);
            for &p in subset {
                used[p] = false;
            }
        });
    }
    rec(0, &bl, &mut images, &mut used, &mut out);
    out
}

/// Calls `f` on every `k`-subset of `items` (in lexicographic order).
pub fn choose<F: FnMut(&[usize])>(items: &[usize], k: usize, f: &mut F) {
    fn rec<F: FnMut(&[usize])>(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut F) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f);
}

/// Factorization `w = x y` with `x ∈ ^mu D^lambda`, `y ∈ S_lambda` and lengths adding.
pub fn parabolic_decompose(w: &Perm, mu: &[usize], lambda: &[usize]) -> Result<(Perm, Perm)> {
    let d = w.degree();
    if mu.iter().sum::<usize>() != d || lambda.iter().sum::<usize>() != d {
        return Err(Error::InvalidData("composition sizes differ from the degree".into()));
    }
    if !is_min_right_rep(w, mu) {
        return Err(Error::NotMinimalCosetRep);
    }
    let (x, y) = split_right(w, lambda);
    Ok((x, y))
}

/// `w = x y` with `x ∈ D^lambda` and `y ∈ S_lambda`.
pub fn split_right(w: &Perm, lambda: &[usize]) -> (Perm, Perm) {
    let mut images: Vec<usize> = (0..w.degree()).map(|i| w.apply(i)).collect();
    for b in blocks(lambda) {
        images[b].sort_unstable();
    }
    let x = Perm::from_images(&images);
    let y = x.inverse().compose(w);
    (x, y)
}

/// The cycle `(t -> r)` on `d` letters (1-based `r < t`), i.e. `s_{t-1} ... s_r`.
pub fn cycle_perm(t: usize, r: usize, d: usize) -> Result<Perm> {
    if r == 0 || r >= t || t > d {
        return Err(Error::InvalidCycle(t, r));
    }
    Ok(word_to_perm(&cycle_word(t, r), d))
}

/// 0-based generator word of `(t -> r)`, 1-based `r < t`.
pub fn cycle_word(t: usize, r: usize) -> Vec<u8> {
    (r..t).rev().map(|g| (g - 1) as u8).collect()
}

/// Permutation sending each `sources[k]` increasingly onto `targets[k]`, 0-based positions.
pub fn increasing_bijection(pairs: &[(Vec<usize>, Vec<usize>)], d: usize) -> Result<Perm> {
    let mut images = vec![usize::MAX; d];
    for (src, tgt) in pairs {
        if src.len() != tgt.len() {
            return Err(Error::InvalidData(format!("sizes differ: {src:?} vs {tgt:?}")));
        }
        let mut s = src.clone();
        let mut t = tgt.clone();
        s.sort_unstable();
        t.sort_unstable();
        for (a, b) in s.into_iter().zip(t) {
            if a >= d || images[a] != usize::MAX {
                return Err(Error::InvalidData(format!("position {a} assigned twice")));
            }
            images[a] = b;
        }
    }
    Perm::try_from_images(&images)
}

/// Block transposition `z_r` swapping blocks `r-1` and `r` (1-based `r`) of size `l` in `S_{lm}`.
pub fn block_transposition(r: usize, l: usize, m: usize) -> Perm {
    let d = l * m;
    let mut images: Vec<usize> = (0..d).collect();
    for k in 0..l {
        images.swap((r - 1) * l + k, r * l + k);
    }
    Perm::from_images(&images)
}

/// The longest element of `D^{(l^m)}` together with the block transpositions
/// (1-based indices) read off the lexmin reduced word of `w_{0,m}`.
pub fn big_w0(l: usize, m: usize) -> (Perm, Vec<usize>) {
    let rs: Vec<usize> = longest(m).lexmin_word().into_iter().map(|g| g as usize + 1).collect();
    let mut w = Perm::identity(l * m);
    for &r in &rs {
        w = w.compose(&block_transposition(r, l, m));
    }
    (w, rs)
}

/// Every reduced word of `w` (0-based); only for small lengths.
pub fn all_reduced_words(w: &Perm) -> Vec<Vec<u8>> {
    if w.is_identity() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for g in 0..w.degree() - 1 {
        if w.has_left_descent(g) {
            for mut rest in all_reduced_words(&w.left_mul_s(g)) {
                rest.insert(0, g as u8);
                out.push(rest);
            }
        }
    }
    out
}

/// No reduced word contains a factor `g, g±1, g`.
pub fn is_fully_commutative(w: &Perm) -> bool {
    all_reduced_words(w).iter().all(|word| {
        word.windows(3).all(|t| !(t[0] == t[2] && (t[0] as i32 - t[1] as i32).abs() == 1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexmin_examples() {
        assert_eq!(canonical_reduced_word(&longest(3)), vec![1, 2, 1]);
        assert_eq!(canonical_reduced_word(&Perm::identity(4)), Vec::<usize>::new());
        let s2 = Perm::identity(4).left_mul_s(1);
        assert_eq!(canonical_reduced_word(&s2), vec![2]);
    }

    #[test]
    fn lexmin_is_min_over_all_reduced_words() {
        for w in all_perms(5) {
            let all = all_reduced_words(&w);
            let min = all.iter().min().unwrap();
            assert_eq!(&w.lexmin_word(), min);
            assert_eq!(w.lexmin_word().len(), w.length());
            assert!(all.contains(&w.lexmax_word()));
            assert!(all.contains(&w.right_greedy_word()));
        }
    }

    #[test]
    fn word_round_trip() {
        for w in all_perms(4) {
            assert_eq!(word_to_perm(&w.lexmin_word(), 4), w);
        }
    }

    #[test]
    fn parabolic_longest_lengths() {
        assert_eq!(parabolic_longest(&[2, 2]), Perm::from_images(&[1, 0, 3, 2]));
        assert_eq!(parabolic_longest(&[2, 2]).length(), 2);
        assert!(parabolic_longest(&[1, 1, 1]).is_identity());
        assert_eq!(parabolic_longest(&[4]).length(), 6);
    }

    #[test]
    fn coset_counts() {
        assert_eq!(coset_min_reps(None, Some(&[1, 1]), 2).len(), 2);
        assert_eq!(coset_min_reps(None, Some(&[2, 2]), 4).len(), 6);
        assert_eq!(coset_min_reps(Some(&[4]), None, 4), vec![Perm::identity(4)]);
        assert_eq!(coset_min_reps(Some(&[2, 1]), Some(&[1, 2]), 3).len(), 2);
    }

    #[test]
    fn cycles() {
        assert_eq!(cycle_word(3, 1), vec![1, 0]);
        assert_eq!(cycle_word(2, 1), vec![0]);
        let c = cycle_perm(5, 2, 6).unwrap();
        assert_eq!(c.length(), 3);
        // r goes to t, everything in (r, t] moves down by one
        assert_eq!(c.apply(1), 4);
        assert_eq!(c.apply(4), 3);
        assert!(cycle_perm(2, 2, 3).is_err());
    }

    #[test]
    fn w0_blocks() {
        let (w, rs) = big_w0(2, 2);
        assert_eq!(w, Perm::from_images(&[2, 3, 0, 1]));
        assert_eq!(rs, vec![1]);
        assert_eq!(w.length(), 4);
        assert!(big_w0(3, 1).0.is_identity());
        assert_eq!(big_w0(2, 3).0.length(), 12);
        let z = block_transposition(1, 3, 2);
        assert_eq!(z.length(), 9);
        assert!(is_fully_commutative(&z));
    }

    #[test]
    fn action_on_words() {
        // s_1 · (1 2) = (2 1); w · i puts i_p at w(p)
        let w = Perm::from_images(&[1, 2, 0]);
        assert_eq!(w.act_on_word(&[7, 8, 9]), vec![9, 7, 8]);
    }
}
