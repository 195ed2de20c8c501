//! Left multiplication of normal monomials by single generators.
//!
//! A normal monomial `psi_w y^k 1_i` always uses the lexmin reduced word of `w`.
//! Whenever a product produces a different reduced word, it is converted to the
//! lexmin one by explicit braid moves; every braid move contributes the error
//! term of the braid relation, which is evaluated recursively. All recursion is
//! on strictly shorter permutations, so it terminates.

use std::cell::RefCell;
use std::rc::Rc;

use rustc_hash::FxHashMap;

use super::{Idem, Mono};
use crate::symgroup::Perm;

pub(crate) type Terms = FxHashMap<Mono, i64>;
type Shared = Rc<[(Mono, i64)]>;

const CACHE_LIMIT: usize = 4_000_000;

#[derive(Default)]
struct Engine {
    canon: FxHashMap<Perm, Rc<[u8]>>,
    psi: FxHashMap<(u8, Mono), Shared>,
    dot: FxHashMap<(u8, Mono), Shared>,
    conv: FxHashMap<(Perm, u8, bool, Idem), Rc<[(Vec<u8>, i64)]>>,
}

impl Engine {
    fn size(&self) -> usize {
        self.psi.len() + self.dot.len() + self.conv.len() + self.canon.len()
    }
}

thread_local! {
    static ENGINE: RefCell<Engine> = RefCell::new(Engine::default());
}

/// Drops all memoized products on the current thread.
pub fn clear_caches() {
    ENGINE.with(|e| *e.borrow_mut() = Engine::default());
}

fn maybe_trim() {
    ENGINE.with(|e| {
        let big = e.borrow().size() > CACHE_LIMIT;
        if big {
            let mut e = e.borrow_mut();
            e.psi.clear();
            e.dot.clear();
            e.conv.clear();
        }
    });
}

pub(crate) fn canon(w: &Perm) -> Rc<[u8]> {
    if let Some(c) = ENGINE.with(|e| e.borrow().canon.get(w).cloned()) {
        return c;
    }
    let c: Rc<[u8]> = w.lexmin_word().into();
    ENGINE.with(|e| e.borrow_mut().canon.insert(w.clone(), c.clone()));
    c
}

#[inline]
pub(crate) fn add_to(acc: &mut Terms, m: Mono, c: i64) {
    if c == 0 {
        return;
    }
    let e = acc.entry(m).or_insert(0);
    *e += c;
}

pub(crate) fn prune(acc: &mut Terms) {
    acc.retain(|_, c| *c != 0);
}

/// `psi_g * m`.
pub(crate) fn mul_psi(g: u8, m: &Mono) -> Shared {
    let key = (g, m.clone());
    if let Some(r) = ENGINE.with(|e| e.borrow().psi.get(&key).cloned()) {
        return r;
    }
    let r: Shared = mul_psi_raw(g, m).into_iter().filter(|(_, c)| *c != 0).collect();
    maybe_trim();
    ENGINE.with(|e| e.borrow_mut().psi.insert(key, r.clone()));
    r
}

/// `y_t * m`.
pub(crate) fn mul_y(t: u8, m: &Mono) -> Shared {
    let key = (t, m.clone());
    if let Some(r) = ENGINE.with(|e| e.borrow().dot.get(&key).cloned()) {
        return r;
    }
    let r: Shared = mul_y_raw(t, m).into_iter().filter(|(_, c)| *c != 0).collect();
    maybe_trim();
    ENGINE.with(|e| e.borrow_mut().dot.insert(key, r.clone()));
    r
}

fn mul_psi_raw(g: u8, m: &Mono) -> Terms {
    let gu = g as usize;
    let w2 = m.w.left_mul_s(gu);
    let n = Mono { w: w2, y: m.y.clone(), idem: m.idem.clone() };
    let mut acc = Terms::default();
    if m.w.has_left_descent(gu) {
        // psi_g psi_w = psi_g (psi_g psi_{s_g w} + errors)
        quad_into(g, &n, 1, &mut acc);
        let c = canon(&m.w);
        if c[0] != g {
            for (err, e) in conversion(&m.w, g, true, &m.idem).iter() {
                for (t, c) in eval_word(err, &m.y, &m.idem) {
                    for (t2, c2) in mul_psi(g, &t).iter() {
                        add_to(&mut acc, t2.clone(), e * c * c2);
                    }
                }
            }
        }
    } else {
        let c2 = canon(&n.w);
        if c2[0] == g {
            acc.insert(n, 1);
            return acc;
        }
        for (err, e) in conversion(&m.w, g, false, &m.idem).iter() {
            for (t, c) in eval_word(err, &m.y, &m.idem) {
                add_to(&mut acc, t, e * c);
            }
        }
        add_to(&mut acc, n, 1);
    }
    acc
}

/// Adds `coef * psi_g psi_g n` to `acc`.
fn quad_into(g: u8, n: &Mono, coef: i64, acc: &mut Terms) {
    let gu = g as usize;
    let top = n.top();
    let (a, b) = (top[gu], top[gu + 1]);
    if a == b {
        return;
    }
    if (a - b).abs() == 1 {
        let eps = (b - a) as i64;
        for (t, c) in mul_y(g, n).iter() {
            add_to(acc, t.clone(), coef * eps * c);
        }
        for (t, c) in mul_y(g + 1, n).iter() {
            add_to(acc, t.clone(), -coef * eps * c);
        }
    } else {
        add_to(acc, n.clone(), coef);
    }
}

fn mul_y_raw(t: u8, m: &Mono) -> Terms {
    let mut acc = Terms::default();
    if m.w.is_identity() {
        let mut n = m.clone();
        n.y[t as usize] += 1;
        acc.insert(n, 1);
        return acc;
    }
    let c = canon(&m.w);
    let g = c[0];
    let n = Mono { w: m.w.left_mul_s(g as usize), y: m.y.clone(), idem: m.idem.clone() };
    let t2 = if t == g {
        g + 1
    } else if t == g + 1 {
        g
    } else {
        t
    };
    for (inner, ci) in mul_y(t2, &n).iter() {
        for (r, cr) in mul_psi(g, inner).iter() {
            add_to(&mut acc, r.clone(), ci * cr);
        }
    }
    let top = n.top();
    if top[g as usize] == top[g as usize + 1] {
        if t == g {
            add_to(&mut acc, n, -1);
        } else if t == g + 1 {
            add_to(&mut acc, n, 1);
        }
    }
    acc
}

/// `psi_{word} y^k 1_i` for an arbitrary (possibly non-reduced) word.
pub(crate) fn eval_word(word: &[u8], y: &super::Exps, idem: &Idem) -> Terms {
    let d = idem.len();
    let mut cur = Terms::default();
    cur.insert(Mono { w: Perm::identity(d), y: y.clone(), idem: idem.clone() }, 1);
    for &g in word.iter().rev() {
        let mut next = Terms::default();
        for (t, c) in cur {
            for (r, cr) in mul_psi(g, &t).iter() {
                add_to(&mut next, r.clone(), c * cr);
            }
        }
        prune(&mut next);
        cur = next;
    }
    cur
}

/// Error terms relating two reduced words of the same permutation.
///
/// With `descent`, converts `lexmin(w)` into `g . lexmin(s_g w)`; otherwise
/// converts `g . lexmin(w)` into `lexmin(s_g w)`. Returns `(word, c)` with
/// `psi_from X = psi_to X + sum c psi_word X` for every `X = y^k 1_idem`.
fn conversion(w: &Perm, g: u8, descent: bool, idem: &Idem) -> Rc<[(Vec<u8>, i64)]> {
    let key = (w.clone(), g, descent, idem.clone());
    if let Some(r) = ENGINE.with(|e| e.borrow().conv.get(&key).cloned()) {
        return r;
    }
    let w2 = w.left_mul_s(g as usize);
    let (from, to): (Vec<u8>, Vec<u8>) = if descent {
        let mut t = vec![g];
        t.extend_from_slice(&canon(&w2));
        (canon(w).to_vec(), t)
    } else {
        let mut f = vec![g];
        f.extend_from_slice(&canon(w));
        (f, canon(&w2).to_vec())
    };
    let r: Rc<[(Vec<u8>, i64)]> = convert_words(from, &to, idem).into();
    ENGINE.with(|e| e.borrow_mut().conv.insert(key, r.clone()));
    r
}

/// Rewrites the reduced word `from` into the reduced word `to` (same
/// permutation) by commutations and braid moves, recording braid errors.
pub(crate) fn convert_words(from: Vec<u8>, to: &[u8], idem: &Idem) -> Vec<(Vec<u8>, i64)> {
    let mut cur = from;
    let mut errors = Vec::new();
    for p in 0..to.len() {
        bring_front(&mut cur, p, to[p], idem, &mut errors);
    }
    debug_assert_eq!(cur, to);
    errors
}

/// Makes `cur[p] == s`, touching only `cur[p..]`; `s` must be a left descent of `cur[p..]`.
fn bring_front(cur: &mut Vec<u8>, p: usize, s: u8, idem: &Idem, errors: &mut Vec<(Vec<u8>, i64)>) {
    let t = cur[p];
    if t == s {
        return;
    }
    if (t as i32 - s as i32).abs() > 1 {
        bring_front(cur, p + 1, s, idem, errors);
        cur.swap(p, p + 1);
        return;
    }
    bring_front(cur, p + 1, s, idem, errors);
    bring_front(cur, p + 2, t, idem, errors);
    // cur[p..p+3] = t s t  ->  s t s
    let r0 = s.min(t) as usize;
    let j = word_top(&cur[p + 3..], idem);
    let (a, b, c) = (j[r0], j[r0 + 1], j[r0 + 2]);
    if (a - b).abs() == 1 && a == c {
        let e = (b - a) as i64;
        // (psi_{r+1} psi_r psi_{r+1} - psi_r psi_{r+1} psi_r) 1_j = e 1_j
        let coef = if t as usize == r0 + 1 { e } else { -e };
        let mut err = cur[..p].to_vec();
        err.extend_from_slice(&cur[p + 3..]);
        errors.push((err, coef));
    }
    cur[p] = s;
    cur[p + 1] = t;
    cur[p + 2] = s;
}

/// Idempotent on top of `psi_word 1_idem`.
pub(crate) fn word_top(word: &[u8], idem: &Idem) -> Idem {
    let mut j = idem.clone();
    for &g in word.iter().rev() {
        j.swap(g as usize, g as usize + 1);
    }
    j
}

/// `a * b` for two normal monomials.
pub(crate) fn mul_monos(a: &Mono, b: &Mono, coef: i64, acc: &mut Terms) {
    if a.idem != b.top() {
        return;
    }
    let mut cur = Terms::default();
    cur.insert(b.clone(), coef);
    for (t, &k) in a.y.iter().enumerate() {
        for _ in 0..k {
            let mut next = Terms::default();
            for (m, c) in cur {
                for (r, cr) in mul_y(t as u8, &m).iter() {
                    add_to(&mut next, r.clone(), c * cr);
                }
            }
            prune(&mut next);
            cur = next;
        }
    }
    for &g in canon(&a.w).iter().rev() {
        let mut next = Terms::default();
        for (m, c) in cur {
            for (r, cr) in mul_psi(g, &m).iter() {
                add_to(&mut next, r.clone(), c * cr);
            }
        }
        prune(&mut next);
        cur = next;
    }
    for (m, c) in cur {
        add_to(acc, m, c);
    }
}
