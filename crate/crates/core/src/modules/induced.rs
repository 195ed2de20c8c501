//! Induction products `Delta(beta_1) ∘ ... ∘ Delta(beta_N)` of cuspidal modules.
//!
//! The module is free with basis `psi_w y^K v` where `w` runs over the minimal length
//! representatives `D^{(l_1, ..., l_N)}` (increasing on blocks), `K` over `N^N`, and
//! `y^K` places `K_s` dots on the first strand of block `s`. Any `psi_w` with `w`
//! outside `D` is rewritten using that crossings inside a cuspidal factor act by zero.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::rc::Rc;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::algebra::{canon, eval_word, mul_monos, prune, AlgebraElement, Mono, Terms};
use crate::error::{Error, Result};
use crate::lie::{Root, Vertex, Weight};
use crate::symgroup::{blocks, coset_min_reps, is_min_left_rep, split_right, Perm};

/// A basis vector `psi_w y^K v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisVec {
    pub w: Perm,
    pub k: SmallVec<[u8; 8]>,
}

/// A vector in coordinates of the standard basis of an induced module.
pub type Vector = BTreeMap<BasisVec, i64>;

pub fn add_scaled(acc: &mut Vector, v: &Vector, c: i64) {
    if c == 0 {
        return;
    }
    for (b, &x) in v {
        let e = acc.entry(b.clone()).or_insert(0);
        *e += c * x;
        if *e == 0 {
            acc.remove(b);
        }
    }
}

pub fn scaled(v: &Vector, c: i64) -> Vector {
    if c == 0 {
        return Vector::new();
    }
    v.iter().map(|(b, &x)| (b.clone(), c * x)).collect()
}

/// `Delta(beta_1) ∘ ... ∘ Delta(beta_N)`.
pub struct InducedModule {
    roots: Vec<Root>,
    heights: Vec<usize>,
    word: Vec<Vertex>,
    weight: Weight,
    starts: Vec<usize>,
    by_top: BTreeMap<Vec<Vertex>, Vec<(Perm, i32)>>,
    reduce_cache: RefCell<FxHashMap<Mono, Rc<Vector>>>,
}

impl InducedModule {
    pub fn new(roots: &[Root]) -> Self {
        let heights: Vec<usize> = roots.iter().map(Root::height).collect();
        let word: Vec<Vertex> = roots.iter().flat_map(|r| r.word()).collect();
        let weight = Weight::from_word(&word);
        let d = word.len();
        let starts = blocks(&heights).into_iter().map(|b| b.start).collect();
        let mut by_top: BTreeMap<Vec<Vertex>, Vec<(Perm, i32)>> = BTreeMap::new();
        for w in coset_min_reps(None, Some(&heights), d) {
            let m = Mono::new(w.clone(), &vec![0; d], &word);
            by_top.entry(m.top().to_vec()).or_default().push((w, m.degree()));
        }
        InducedModule { roots: roots.to_vec(), heights, word, weight, starts, by_top, reduce_cache: RefCell::default() }
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// The word `i_{beta_1} ... i_{beta_N}` of the generator.
    pub fn word(&self) -> &[Vertex] {
        &self.word
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn d(&self) -> usize {
        self.word.len()
    }

    pub fn factors(&self) -> usize {
        self.heights.len()
    }

    /// Words `j` with `1_j M != 0`.
    pub fn words(&self) -> impl Iterator<Item = &Vec<Vertex>> {
        self.by_top.keys()
    }

    /// The generator `v = v_{beta_1} ∘ ... ∘ v_{beta_N}`.
    pub fn generator(&self) -> Vector {
        let b = BasisVec { w: Perm::identity(self.d()), k: SmallVec::from_elem(0, self.factors()) };
        Vector::from([(b, 1)])
    }

    pub fn mono_of(&self, b: &BasisVec) -> Mono {
        let mut y = vec![0u8; self.d()];
        for (s, &k) in b.k.iter().enumerate() {
            y[self.starts[s]] = k;
        }
        Mono::new(b.w.clone(), &y, &self.word)
    }

    pub fn degree_of(&self, b: &BasisVec) -> i32 {
        self.mono_of(b).degree()
    }

    pub fn top_of(&self, b: &BasisVec) -> Vec<Vertex> {
        b.w.act_on_word(&self.word)
    }

    /// Lowest degree of a nonzero homogeneous vector.
    pub fn min_degree(&self) -> i32 {
        self.by_top.values().flatten().map(|(_, d)| *d).min().unwrap_or(0)
    }

    /// Basis of `(1_j M)_t` in canonical order.
    pub fn basis(&self, j: &[Vertex], t: i32) -> Vec<BasisVec> {
        let mut out = Vec::new();
        let Some(reps) = self.by_top.get(j) else { return out };
        for (w, deg) in reps {
            let rest = t - deg;
            if rest < 0 || rest % 2 != 0 {
                continue;
            }
            for k in compositions((rest / 2) as usize, self.factors()) {
                out.push(BasisVec { w: w.clone(), k: k.into_iter().map(|x| x as u8).collect() });
            }
        }
        out.sort();
        out
    }

    /// Graded dimension of `1_j M` in degree `t`.
    pub fn dim(&self, j: &[Vertex], t: i32) -> usize {
        let Some(reps) = self.by_top.get(j) else { return 0 };
        reps.iter()
            .filter(|(_, deg)| t >= *deg && (t - deg) % 2 == 0)
            .map(|(_, deg)| binomial(((t - deg) / 2) as usize + self.factors() - 1, self.factors() - 1))
            .sum()
    }

    /// `psi_w y^k v` for a normal monomial with right idempotent the generator word.
    pub fn reduce(&self, m: &Mono) -> Rc<Vector> {
        if let Some(v) = self.reduce_cache.borrow().get(m) {
            return v.clone();
        }
        let v = Rc::new(self.reduce_raw(m));
        self.reduce_cache.borrow_mut().insert(m.clone(), v.clone());
        v
    }

    fn reduce_raw(&self, m: &Mono) -> Vector {
        if m.idem.as_slice() != self.word.as_slice() {
            return Vector::new();
        }
        if is_min_left_rep(&m.w, &self.heights) {
            let k = self
                .heights
                .iter()
                .zip(&self.starts)
                .map(|(&h, &s)| m.y[s..s + h].iter().map(|&x| x as u32).sum::<u32>() as u8)
                .collect();
            return Vector::from([(BasisVec { w: m.w.clone(), k }, 1)]);
        }
        // psi_{lexmin x} psi_{lexmin y} y^k v = 0 for y != 1, and it equals
        // psi_w y^k v plus shorter terms
        let (x, y) = split_right(&m.w, &self.heights);
        let mut word = canon(&x).to_vec();
        word.extend_from_slice(&canon(&y));
        let terms = eval_word(&word, &m.y, &m.idem);
        let mut out = Vector::new();
        let mut lead = 0;
        for (t, c) in terms {
            if t == *m {
                lead = c;
            } else {
                add_scaled(&mut out, &self.reduce(&t), -c);
            }
        }
        assert_eq!(lead, 1, "leading coefficient of a reduced word");
        out
    }

    /// Left action of an algebra element.
    pub fn act(&self, a: &AlgebraElement, v: &Vector) -> Vector {
        let mut acc = Terms::default();
        for (b, &c) in v {
            let bm = self.mono_of(b);
            let top = bm.top();
            for (am, &ca) in a.terms() {
                if am.idem == top {
                    mul_monos(am, &bm, ca * c, &mut acc);
                }
            }
        }
        prune(&mut acc);
        self.reduce_terms(acc)
    }

    pub(crate) fn reduce_terms(&self, terms: Terms) -> Vector {
        let mut out = Vector::new();
        for (t, c) in terms {
            add_scaled(&mut out, &self.reduce(&t), c);
        }
        out
    }

    /// An algebra element `a` with `a v = x`.
    pub fn lift(&self, x: &Vector) -> AlgebraElement {
        AlgebraElement::from_pairs(self.weight.clone(), x.iter().map(|(b, &c)| (self.mono_of(b), c)))
    }

    /// Right action of `x` on the factor `s` (0-based).
    pub fn right_x(&self, v: &Vector, s: usize) -> Vector {
        v.iter()
            .map(|(b, &c)| {
                let mut b = b.clone();
                b.k[s] += 1;
                (b, c)
            })
            .collect()
    }

    /// Right action swapping the equal-height factors `s` and `s+1` (0-based):
    /// `v τ = psi_z v` with `z` the block transposition, extended by the bimodule law.
    pub fn right_tau(&self, v: &Vector, s: usize) -> Result<Vector> {
        if s + 1 >= self.factors() || self.roots[s] != self.roots[s + 1] {
            return Err(Error::InvalidData(format!("factors {s} and {} are not equal roots", s + 1)));
        }
        let l = self.heights[s];
        let d = self.d();
        let mut images: Vec<usize> = (0..d).collect();
        for k in 0..l {
            images.swap(self.starts[s] + k, self.starts[s + 1] + k);
        }
        let z = Mono::new(Perm::from_images(&images), &vec![0; d], &self.word);
        let mut acc = Terms::default();
        for (b, &c) in v {
            mul_monos(&self.mono_of(b), &z, c, &mut acc);
        }
        prune(&mut acc);
        Ok(self.reduce_terms(acc))
    }
}

/// Weak compositions of `n` into `parts` parts, lexicographic.
pub fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    if parts == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
