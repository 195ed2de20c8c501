//! The basis theorem checked against the faithful polynomial representation.
//!
//! `R_theta` acts on `sum_i Z[y_1..y_d] 1_i`: dots multiply, and `psi_r 1_i` acts by
//! `(f - s_r f) / (y_{r+1} - y_r)` if `i_r = i_{r+1}`, by `(y_{r+1} - y_r) s_r` if
//! `i_{r+1} = i_r + 1`, and by `s_r` otherwise. Normal-form monomials whose images are
//! linearly independent give a lower bound for `dim 1_i R 1_j` that meets the count
//! of pairs `(w, k)`, and products computed by straightening must act as compositions.

use std::collections::BTreeMap;

use serde::Serialize;
use smallvec::SmallVec;

use crate::algebra::{canon, AlgebraElement, Mono};
use crate::error::Result;
use crate::lie::{cartan, words_of, Vertex, Weight};
use crate::linalg::{rank_q, SparseRow};
use crate::modules::induced::compositions;
use crate::symgroup::{all_perms, Perm};

type Exps = SmallVec<[u8; 8]>;

/// A polynomial in `y_1, ..., y_d`.
pub type Poly = BTreeMap<Exps, i64>;

/// A vector of the polynomial representation: word -> polynomial.
pub type PolyVec = BTreeMap<Vec<Vertex>, Poly>;

fn add_term(p: &mut Poly, e: Exps, c: i64) {
    if c == 0 {
        return;
    }
    let x = p.entry(e.clone()).or_insert(0);
    *x += c;
    if *x == 0 {
        p.remove(&e);
    }
}

fn swap_vars(p: &Poly, r: usize) -> Poly {
    p.iter()
        .map(|(e, &c)| {
            let mut e = e.clone();
            e.swap(r, r + 1);
            (e, c)
        })
        .collect()
}

/// `(f - s_r f) / (y_{r+1} - y_r)`.
fn divided_difference(p: &Poly, r: usize) -> Poly {
    let mut out = Poly::new();
    for (e, &c) in p {
        // y_r^a y_{r+1}^b: (y_r^a y_{r+1}^b - y_r^b y_{r+1}^a) / (y_{r+1} - y_r)
        let (a, b) = (e[r], e[r + 1]);
        if a == b {
            continue;
        }
        // for a > b: -(y_r^{a-1} y_{r+1}^b + ... + y_r^b y_{r+1}^{a-1})
        let (hi, lo, sign) = if a > b { (a, b, -1) } else { (b, a, 1) };
        for k in lo..hi {
            let mut f = e.clone();
            f[r] = k;
            f[r + 1] = hi - 1 - k + lo;
            add_term(&mut out, f, sign * c);
        }
    }
    out
}

fn mul_linear(p: &Poly, r: usize) -> Poly {
    // (y_{r+1} - y_r) p
    let mut out = Poly::new();
    for (e, &c) in p {
        let mut f = e.clone();
        f[r + 1] += 1;
        add_term(&mut out, f, c);
        let mut f = e.clone();
        f[r] += 1;
        add_term(&mut out, f, -c);
    }
    out
}

/// `psi_r` on `f 1_i`, returning the new word and polynomial.
pub fn apply_psi(r: usize, word: &[Vertex], p: &Poly) -> (Vec<Vertex>, Poly) {
    let mut w = word.to_vec();
    let (a, b) = (word[r], word[r + 1]);
    if a == b {
        return (w, divided_difference(p, r));
    }
    w.swap(r, r + 1);
    let s = swap_vars(p, r);
    if b == a + 1 {
        (w, mul_linear(&s, r))
    } else {
        (w, s)
    }
}

/// A normal-form monomial `psi_w y^k 1_i` applied to `f 1_i`.
pub fn apply_mono(m: &Mono, p: &Poly) -> (Vec<Vertex>, Poly) {
    let mut cur: Poly = p
        .iter()
        .map(|(e, &c)| {
            let mut e = e.clone();
            for (x, &k) in e.iter_mut().zip(m.y.iter()) {
                *x += k;
            }
            (e, c)
        })
        .collect();
    let mut word: Vec<Vertex> = m.idem.to_vec();
    for &g in canon(&m.w).iter().rev() {
        let (w, q) = apply_psi(g as usize, &word, &cur);
        word = w;
        cur = q;
    }
    (word, cur)
}

/// An algebra element applied to `f 1_j`.
pub fn apply_element(a: &AlgebraElement, j: &[Vertex], p: &Poly) -> PolyVec {
    let mut out = PolyVec::new();
    for (m, &c) in a.terms() {
        if m.idem.as_slice() != j {
            continue;
        }
        let (w, q) = apply_mono(m, p);
        let dst = out.entry(w).or_default();
        for (e, x) in q {
            add_term(dst, e, c * x);
        }
    }
    out.retain(|_, p| !p.is_empty());
    out
}

/// Monomials of total degree `<= n` in `d` variables.
pub fn test_monomials(d: usize, n: usize) -> Vec<Poly> {
    (0..=n)
        .flat_map(|k| compositions(k, d))
        .map(|e| Poly::from([(e.into_iter().map(|x| x as u8).collect::<Exps>(), 1)]))
        .collect()
}

/// Number of pairs `(w, k)` with `w . j = i` and `deg psi_w 1_j + 2|k| = t`.
pub fn basis_count(i: &[Vertex], j: &[Vertex], t: i32) -> usize {
    let d = j.len();
    let mut total = 0;
    for w in all_perms(d) {
        if w.act_on_word(j) != i {
            continue;
        }
        let mut deg = 0;
        for a in 0..d {
            for b in a + 1..d {
                if w.apply(a) > w.apply(b) {
                    deg -= cartan(j[a], j[b]);
                }
            }
        }
        let rest = t - deg;
        if rest >= 0 && rest % 2 == 0 {
            total += crate::modules::induced::binomial((rest / 2) as usize + d - 1, d - 1);
        }
    }
    total
}

/// Normal-form monomials `psi_w y^k 1_j` with `w . j = i` in degree `t`.
pub fn normal_monomials(i: &[Vertex], j: &[Vertex], t: i32) -> Vec<Mono> {
    let d = j.len();
    let mut out = Vec::new();
    for w in all_perms(d) {
        let base = Mono::new(w.clone(), &vec![0; d], j);
        if base.top().as_slice() != i {
            continue;
        }
        let rest = t - base.degree();
        if rest < 0 || rest % 2 != 0 {
            continue;
        }
        for k in compositions((rest / 2) as usize, d) {
            let k: Vec<u8> = k.into_iter().map(|x| x as u8).collect();
            out.push(Mono::new(w.clone(), &k, j));
        }
    }
    out
}

/// Rank over Q of the operators of `monos` on the test polynomials, bounded above by
/// `monos.len()`. A rank mod a large prime is a lower bound for it, so the exact
/// elimination over Q runs only when that bound falls short.
pub fn operator_rank(monos: &[Mono], tests: &[Poly]) -> usize {
    // psi_w y^k applied to y^a only depends on w and k + a
    let mut cache: rustc_hash::FxHashMap<(Perm, Exps), (Vec<Vertex>, Poly)> = rustc_hash::FxHashMap::default();
    let mut index: BTreeMap<(usize, Vec<Vertex>, Exps), usize> = BTreeMap::new();
    let rows: Vec<SparseRow> = monos
        .iter()
        .map(|m| {
            let mut row: BTreeMap<usize, i64> = BTreeMap::new();
            for (k, f) in tests.iter().enumerate() {
                for (a, &fc) in f {
                    let e: Exps = a.iter().zip(m.y.iter()).map(|(x, y)| x + y).collect();
                    let (w, q) = cache
                        .entry((m.w.clone(), e.clone()))
                        .or_insert_with(|| {
                            let bare = Mono::new(m.w.clone(), &vec![0; e.len()], &m.idem);
                            apply_mono(&bare, &Poly::from([(e, 1)]))
                        })
                        .clone();
                    for (e, c) in q {
                        let n = index.len();
                        let col = *index.entry((k, w.clone(), e)).or_insert(n);
                        *row.entry(col).or_insert(0) += fc * c;
                    }
                }
            }
            row.into_iter().filter(|&(_, c)| c != 0).collect()
        })
        .collect();
    let r = crate::linalg::rank_mod_p(&rows, LARGE_PRIME);
    if r == monos.len() {
        r
    } else {
        rank_q(&rows)
    }
}

const LARGE_PRIME: u64 = 2_147_483_647;

/// One graded piece of the comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisCell {
    pub i: Vec<Vertex>,
    pub j: Vec<Vertex>,
    pub degree: i32,
    pub count: usize,
    pub engine: usize,
}

/// Compares `dim (1_i R 1_j)_t` from normal forms acting on polynomials with the count,
/// for all words of `theta` and degrees up to `max_degree`; returns the mismatching cells.
pub fn check_basis_weight(theta: &Weight, max_degree: i32) -> Result<Vec<BasisCell>> {
    let words = words_of(theta, crate::lie::DEFAULT_HEIGHT_CAP)?;
    let d = theta.height();
    let tests = test_monomials(d, d * (d.saturating_sub(1)) / 2);
    let lo = -(d as i32) * (d as i32 - 1);
    let mut bad = Vec::new();
    for i in &words {
        for j in &words {
            for t in lo..=max_degree {
                let count = basis_count(i, j, t);
                let monos = normal_monomials(i, j, t);
                let engine = if monos.is_empty() { 0 } else { operator_rank(&monos, &tests) };
                if engine != count || monos.len() != count {
                    bad.push(BasisCell { i: i.clone(), j: j.clone(), degree: t, count, engine });
                }
            }
        }
    }
    Ok(bad)
}

/// Straightened products act as compositions: `rep(g b) = rep(g) rep(b)` and
/// `rep(b g) = rep(b) rep(g)` for generators `g` and normal monomials `b` of degree `<= max_degree`.
pub fn check_homomorphism(theta: &Weight, max_degree: i32) -> Result<Vec<String>> {
    let words = words_of(theta, crate::lie::DEFAULT_HEIGHT_CAP)?;
    let d = theta.height();
    let tests = test_monomials(d, 2);
    let lo = -(d as i32) * (d as i32 - 1);
    let mut bad = Vec::new();
    // generators with left word `word` when `left`, right word `word` otherwise
    let gens = |word: &[Vertex], left: bool| -> Vec<(AlgebraElement, Vec<Vertex>)> {
        let mut g: Vec<(AlgebraElement, Vec<Vertex>)> =
            (0..d).map(|t| (AlgebraElement::dot(t, word), word.to_vec())).collect();
        for r in 0..d.saturating_sub(1) {
            let s = Perm::identity(d).left_mul_s(r);
            let src = if left { word.to_vec() } else { s.act_on_word(word) };
            g.push((AlgebraElement::psi_perm(&s, &src), src));
        }
        g
    };
    let compose = |a: &AlgebraElement, b: &AlgebraElement, j: &[Vertex], f: &Poly| -> PolyVec {
        let mut out = PolyVec::new();
        for (w, p) in apply_element(b, j, f) {
            for (w2, q) in apply_element(a, &w, &p) {
                let dst = out.entry(w2).or_default();
                for (e, c) in q {
                    add_term(dst, e, c);
                }
            }
        }
        out.retain(|_, p| !p.is_empty());
        out
    };
    for j in &words {
        for i in &words {
            for t in lo..=max_degree {
                for m in normal_monomials(i, j, t) {
                    let b = AlgebraElement::from_mono(m);
                    for (g, _) in gens(i, true) {
                        let prod = &g * &b;
                        for f in &tests {
                            if apply_element(&prod, j, f) != compose(&g, &b, j, f) {
                                bad.push(format!("{g} * {b} on {f:?}"));
                            }
                        }
                    }
                    for (g, src) in gens(j, false) {
                        let prod = &b * &g;
                        for f in &tests {
                            if apply_element(&prod, &src, f) != compose(&b, &g, &src, f) {
                                bad.push(format!("{b} * {g} on {f:?}"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(bad)
}

/// Weights of height `1..=max_height` up to relabelling: supports start at vertex 1 and
/// consecutive support vertices differ by 1 or 2 (any larger gap gives the same algebra).
pub fn small_weights(max_height: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    fn rec(start: Vertex, left: usize, cur: &mut Vec<Vertex>, max_v: Vertex, out: &mut Vec<Weight>) {
        if !cur.is_empty() && cur[0] == 1 && cur.windows(2).all(|w| w[1] - w[0] <= 2) {
            out.push(Weight::from_word(cur));
        }
        if left == 0 {
            return;
        }
        for v in start..=max_v {
            cur.push(v);
            rec(v, left - 1, cur, max_v, out);
            cur.pop();
        }
    }
    rec(1, max_height, &mut Vec::new(), max_height as Vertex, &mut out);
    out.sort();
    out.dedup();
    out
}
