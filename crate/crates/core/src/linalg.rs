//! Exact linear algebra over Z, Q and F_p for the verifier.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient ring of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    Z,
    Q,
    Fp(u64),
}

impl Ring {
    pub fn fp(p: u64) -> Result<Ring> {
        if p < 2 || (2..p).take_while(|k| k * k <= p).any(|k| p % k == 0) {
            return Err(Error::Ring(format!("{p} is not prime")));
        }
        Ok(Ring::Fp(p))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Z => write!(f, "Z"),
            Ring::Q => write!(f, "Q"),
            Ring::Fp(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Ring> {
        match s {
            "Z" | "z" => Ok(Ring::Z),
            "Q" | "q" => Ok(Ring::Q),
            _ => {
                let t = s.trim_start_matches(['F', 'f']).trim_start_matches('_');
                t.parse::<u64>().map_err(|_| Error::Ring(format!("unknown ring {s}"))).and_then(Ring::fp)
            }
        }
    }
}

/// A sparse integer row: sorted `(column, value)` pairs without zeros.
pub type SparseRow = Vec<(usize, i64)>;

/// Rank over Q (equivalently over Z) by fraction-free elimination with content removal.
pub fn rank_q(rows: &[SparseRow]) -> usize {
    let mut pivots: BTreeMap<usize, Vec<(usize, BigInt)>> = BTreeMap::new();
    for row in rows {
        let mut r: Vec<(usize, BigInt)> = row.iter().map(|&(c, v)| (c, BigInt::from(v))).collect();
        while let Some((lead, a)) = r.first().cloned() {
            match pivots.get(&lead) {
                None => {
                    pivots.insert(lead, r);
                    break;
                }
                Some(p) => {
                    let b = p[0].1.clone();
                    let g = a.gcd(&b);
                    let (fa, fb) = (&b / &g, &a / &g);
                    r = combine_big(&r, &fa, p, &(-fb));
                    remove_content(&mut r);
                }
            }
        }
    }
    pivots.len()
}

fn combine_big(x: &[(usize, BigInt)], cx: &BigInt, y: &[(usize, BigInt)], cy: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (c, v) = if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
            i += 1;
            (x[i - 1].0, &x[i - 1].1 * cx)
        } else if i >= x.len() || y[j].0 < x[i].0 {
            j += 1;
            (y[j - 1].0, &y[j - 1].1 * cy)
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, &x[i - 1].1 * cx + &y[j - 1].1 * cy)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

fn remove_content(r: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, v) in r.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() {
        for (_, v) in r.iter_mut() {
            *v /= &g;
        }
    }
}

/// Rank over F_p.
pub fn rank_mod_p(rows: &[SparseRow], p: u64) -> usize {
    let p = p as i128;
    let red = |v: i64| (v as i128).rem_euclid(p) as u64;
    let mut pivots: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    for row in rows {
        let mut r: Vec<(usize, u64)> = row.iter().map(|&(c, v)| (c, red(v))).filter(|&(_, v)| v != 0).collect();
        while let Some(&(lead, a)) = r.first() {
            match pivots.get(&lead) {
                None => {
                    let inv = mod_inv(a, p as u64);
                    for (_, v) in r.iter_mut() {
                        *v = ((*v as u128 * inv as u128) % p as u128) as u64;
                    }
                    pivots.insert(lead, r);
                    break;
                }
                Some(piv) => {
                    // r -= a * piv (piv has leading 1)
                    let neg = (p as u64 - a) % p as u64;
                    r = combine_mod(&r, piv, neg, p as u64);
                }
            }
        }
    }
    pivots.len()
}

fn combine_mod(x: &[(usize, u64)], y: &[(usize, u64)], cy: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let mul = |a: u64| ((a as u128 * cy as u128) % p as u128) as u64;
    while i < x.len() || j < y.len() {
        let (c, v) = if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
            i += 1;
            x[i - 1]
        } else if i >= x.len() || y[j].0 < x[i].0 {
            j += 1;
            (y[j - 1].0, mul(y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, (x[i - 1].1 + mul(y[j - 1].1)) % p)
        };
        if v != 0 {
            out.push((c, v));
        }
    }
    out
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t, mut r, mut new_r) = (0i128, 1i128, p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i128) as u64
}

/// Rank over the given ring (Z and Q agree).
pub fn rank(rows: &[SparseRow], ring: Ring) -> usize {
    match ring {
        Ring::Z | Ring::Q => rank_q(rows),
        Ring::Fp(p) => rank_mod_p(rows, p),
    }
}

/// Row Hermite normal form of the Z-span of `rows`: nonzero rows only, positive pivots,
/// entries above each pivot reduced into `[0, pivot)`.
pub fn hnf_rows(rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    // incremental echelon form on sparse rows; unimodular 2x2 steps keep the lattice
    let mut pivots: BTreeMap<usize, Vec<(usize, BigInt)>> = BTreeMap::new();
    for row in rows {
        let mut r: Vec<(usize, BigInt)> =
            row.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        while let Some((lead, a)) = r.first().cloned() {
            let Some(p) = pivots.get_mut(&lead) else {
                if a.is_negative() {
                    r.iter_mut().for_each(|(_, x)| *x = -x.clone());
                }
                pivots.insert(lead, r);
                break;
            };
            let b = p[0].1.clone();
            if (&a % &b).is_zero() {
                r = combine_big(&r, &BigInt::one(), p, &(-(&a / &b)));
            } else {
                let e = b.extended_gcd(&a);
                let (g, s, t) = (e.gcd, e.x, e.y);
                let new_p = combine_big(p, &s, &r, &t);
                r = combine_big(&r, &(&b / &g), p, &(-(&a / &g)));
                *p = new_p;
                if p[0].1.is_negative() {
                    p.iter_mut().for_each(|(_, x)| *x = -x.clone());
                }
            }
        }
    }
    let mut out: Vec<Vec<BigInt>> = pivots
        .into_values()
        .map(|r| {
            let mut d = vec![BigInt::zero(); ncols];
            for (c, v) in r {
                d[c] = v;
            }
            d
        })
        .collect();
    // reduce above pivots
    for i in 0..out.len() {
        let pc = out[i].iter().position(|x| !x.is_zero()).unwrap();
        let pv = out[i][pc].clone();
        for k in 0..i {
            let q = out[k][pc].div_floor(&pv);
            if !q.is_zero() {
                let (head, tail) = out.split_at_mut(i);
                for (a, b) in head[k].iter_mut().zip(&tail[0]) {
                    if !b.is_zero() {
                        *a -= &q * b;
                    }
                }
            }
        }
    }
    out
}

/// Integer coordinates of `target` against rows in echelon form, if it lies in their span.
pub fn solve_hnf(rows: &[Vec<BigInt>], target: &mut [BigInt]) -> Option<Vec<BigInt>> {
    let mut coeffs = Vec::with_capacity(rows.len());
    for r in rows {
        let pc = r.iter().position(|x| !x.is_zero())?;
        let (q, rem) = target[pc].div_rem(&r[pc]);
        if !rem.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (t, x) in target.iter_mut().zip(r) {
                *t -= &q * x;
            }
        }
        coeffs.push(q);
    }
    target.iter().all(Zero::is_zero).then_some(coeffs)
}

/// Nonzero invariant factors of an integer matrix, each dividing the next.
pub fn smith_invariants(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let nr = a.len();
    let nc = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // smallest nonzero entry in the remaining block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..nr {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..nc {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                    if !a[i][t].is_zero() {
                        a.swap(t, i);
                        changed = true;
                    }
                }
            }
            for j in t + 1..nc {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let v = &q * &row[t];
                        row[j] -= v;
                    }
                    if !a[t][j].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        changed = true;
                    }
                }
            }
            if changed {
                continue;
            }
            // divisibility: pivot must divide the remaining block
            let bad = (t + 1..nr).flat_map(|i| (t + 1..nc).map(move |j| (i, j))).find(|&(i, j)| {
                let r: BigInt = &a[i][j] % &a[t][t];
                !r.is_zero()
            });
            match bad {
                Some((i, _)) => {
                    for j in t..nc {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

pub fn to_big(rows: &[SparseRow], ncols: usize) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let mut d = vec![BigInt::zero(); ncols];
            for &(c, v) in r {
                d[c] = BigInt::from(v);
            }
            d
        })
        .collect()
}
