//! Compositions `lambda`, multicompositions `delta`, their words, position sets,
//! signs and the special permutations `w(delta)`, `u(delta)` with their factorizations.
//!
//! Positions in this module are 1-based, as in the formulas; conversion to the
//! 0-based permutations of [`crate::symgroup`] happens at the constructors.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{DividedPowerWord, Root, Vertex};
use crate::symgroup::{increasing_bijection, Perm};

/// The data `(a, b, m)` of the semicuspidal weight `m (alpha_a + ... + alpha_{b+1})`.
///
/// `b = a - 1` is allowed and describes the simple root `alpha_a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    pub a: Vertex,
    pub b: Vertex,
    pub m: usize,
}

impl Params {
    pub fn new(a: Vertex, b: Vertex, m: usize) -> Result<Self> {
        if b < a - 1 || m == 0 {
            return Err(Error::InvalidData(format!("need b >= a - 1 and m >= 1, got a={a}, b={b}, m={m}")));
        }
        Ok(Params { a, b, m })
    }

    pub fn from_root(root: &Root, m: usize) -> Result<Self> {
        Params::new(root.lo, root.hi - 1, m)
    }

    pub fn root(&self) -> Root {
        Root { lo: self.a, hi: self.b + 1 }
    }

    /// Height of the root.
    pub fn l(&self) -> usize {
        (self.b + 2 - self.a) as usize
    }

    pub fn d(&self) -> usize {
        self.l() * self.m
    }

    /// Number of entries `b - a + 1` of a composition.
    pub fn k(&self) -> usize {
        (self.b + 1 - self.a) as usize
    }

    pub fn colors(&self) -> RangeInclusive<Vertex> {
        self.a..=self.b
    }

    pub fn with_m(&self, m: usize) -> Params {
        Params { m, ..*self }
    }

    /// Length of the resolution: `m (b - a + 1)`.
    pub fn top_level(&self) -> usize {
        self.m * self.k()
    }

    /// `Lambda(n)` in lexicographic order.
    pub fn lambdas(&self, n: usize) -> Vec<Lambda> {
        let mut out = Vec::new();
        let mut cur = vec![0usize; self.k()];
        loop {
            if cur.iter().sum::<usize>() == n {
                out.push(Lambda { p: *self, parts: cur.clone() });
            }
            let mut i = self.k();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < self.m {
                    cur[i] += 1;
                    for c in cur.iter_mut().skip(i + 1) {
                        *c = 0;
                    }
                    break;
                }
            }
        }
    }

    pub fn all_lambdas(&self) -> Vec<Lambda> {
        (0..=self.top_level()).flat_map(|n| self.lambdas(n)).collect()
    }

    /// `bold Lambda(n)` in lexicographic order.
    pub fn multicomps(&self, n: usize) -> Vec<MultiComp> {
        let k = self.k();
        let total = k * self.m;
        let mut out = Vec::new();
        for bits in 0u64..(1u64 << total) {
            if bits.count_ones() as usize != n {
                continue;
            }
            let comps: Vec<Vec<u8>> = (0..self.m)
                .map(|r| (0..k).map(|i| ((bits >> (total - 1 - (r * k + i))) & 1) as u8).collect())
                .collect();
            out.push(MultiComp { p: *self, comps });
        }
        out
    }

    pub fn all_multicomps(&self) -> Vec<MultiComp> {
        (0..=self.top_level()).flat_map(|n| self.multicomps(n)).collect()
    }
}

/// `lambda = (lambda_a, ..., lambda_b)` with entries in `[0, m]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lambda {
    pub p: Params,
    pub parts: Vec<usize>,
}

impl Lambda {
    pub fn new(p: Params, parts: Vec<usize>) -> Result<Self> {
        if parts.len() != p.k() || parts.iter().any(|&x| x > p.m) {
            return Err(Error::InvalidData(format!("composition {parts:?} out of range for {p:?}")));
        }
        Ok(Lambda { p, parts })
    }

    fn idx(&self, i: Vertex) -> usize {
        (i - self.p.a) as usize
    }

    /// `lambda_i` for `i` in `[a, b]`.
    pub fn part(&self, i: Vertex) -> usize {
        self.parts[self.idx(i)]
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn m(&self) -> usize {
        self.p.m
    }

    pub fn d(&self) -> usize {
        self.p.d()
    }

    pub fn sum_sq(&self) -> i64 {
        self.parts.iter().map(|&x| (x * x) as i64).sum()
    }

    /// The grading shift `s_lambda`.
    pub fn shift(&self) -> i32 {
        let (l, m, n) = (self.p.l() as i64, self.p.m as i64, self.n() as i64);
        (-l * m * (m - 1) / 2 + (m + 1) * n - self.sum_sq()) as i32
    }

    /// `omega_lambda`, block sizes of `i^lambda` (zero parts kept).
    pub fn omega(&self) -> Vec<usize> {
        let m = self.p.m;
        let mut out: Vec<usize> = self.parts.iter().map(|&x| m - x).collect();
        out.push(m);
        out.extend(self.parts.iter().rev());
        out
    }

    fn block_colors(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.p.colors().collect();
        out.push(self.p.b + 1);
        out.extend(self.p.colors().rev());
        out
    }

    /// The divided power word `i^lambda`.
    pub fn i_word(&self) -> DividedPowerWord {
        DividedPowerWord::new(self.block_colors().into_iter().zip(self.omega()).collect())
    }

    /// The word `j^lambda`.
    pub fn j_word(&self) -> Vec<Vertex> {
        self.i_word().expand()
    }

    /// `r_i^-(lambda)` for `i` in `[a-1, b]`.
    pub fn r_minus(&self, i: Vertex) -> usize {
        (self.p.a..=i).map(|s| self.p.m - self.part(s)).sum()
    }

    /// `r_i^+(lambda)` for `i` in `[a, b+1]`.
    pub fn r_plus(&self, i: Vertex) -> usize {
        self.d() - (self.p.a..i).map(|s| self.part(s)).sum::<usize>()
    }

    pub fn l_minus(&self, i: Vertex) -> usize {
        self.r_minus(i - 1) + 1
    }

    pub fn l_plus(&self, i: Vertex) -> usize {
        self.r_plus(i + 1) + 1
    }

    /// `r_{b+1}(lambda)`.
    pub fn r_top(&self) -> usize {
        self.d() - self.n()
    }

    pub fn l_top(&self) -> usize {
        self.r_top() + 1 - self.p.m
    }

    pub fn u_minus(&self, i: Vertex) -> Vec<usize> {
        (self.l_minus(i)..=self.r_minus(i)).collect()
    }

    pub fn u_plus(&self, i: Vertex) -> Vec<usize> {
        (self.l_plus(i)..=self.r_plus(i)).collect()
    }

    pub fn u_top(&self) -> Vec<usize> {
        (self.l_top()..=self.r_top()).collect()
    }

    /// `sgn_{lambda;i}`.
    pub fn sgn(&self, i: Vertex) -> i64 {
        sign((self.p.a..i).map(|j| self.part(j)).sum::<usize>())
    }

    /// `tau_lambda`.
    pub fn tau(&self) -> i64 {
        sign(self.parts.iter().map(|&x| x * x.saturating_sub(1) / 2).sum())
    }

    pub fn plus_e(&self, i: Vertex) -> Option<Lambda> {
        let k = self.idx(i);
        if self.parts[k] >= self.p.m {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[k] += 1;
        Some(Lambda { p: self.p, parts })
    }

    pub fn minus_e(&self, i: Vertex) -> Option<Lambda> {
        let k = self.idx(i);
        if self.parts[k] == 0 {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[k] -= 1;
        Some(Lambda { p: self.p, parts })
    }

    /// The `i` with `other = self + e_i`, if any.
    pub fn step_to(&self, other: &Lambda) -> Option<Vertex> {
        self.p.colors().find(|&i| self.plus_e(i).as_ref() == Some(other))
    }

    /// `(t, r)` of the cycle `psi_{lambda;i} = psi_{t -> r}`.
    pub fn psi_cycle(&self, i: Vertex) -> Result<(usize, usize)> {
        let up = self.plus_e(i).ok_or_else(|| Error::InvalidData(format!("lambda_{i} = m in {:?}", self.parts)))?;
        Ok((up.r_plus(i), self.r_minus(i)))
    }

    /// Longest element `w_0^lambda` of the parabolic subgroup of `omega_lambda`.
    pub fn w0(&self) -> Perm {
        crate::symgroup::parabolic_longest(&self.omega())
    }

    /// Exponents of `y^lambda`: `y_{0,m}` on the `(b+1)`-block.
    pub fn y_exponents(&self) -> Vec<u8> {
        let mut y = vec![0u8; self.d()];
        for k in 0..self.p.m {
            y[self.l_top() - 1 + k] = k as u8;
        }
        y
    }

    /// `delta_lambda`: `delta_i^{(r)} = 1` iff `r > m - lambda_i`.
    pub fn initial_multicomp(&self) -> MultiComp {
        let m = self.p.m;
        let comps = (1..=m).map(|r| self.parts.iter().map(|&x| u8::from(r > m - x)).collect()).collect();
        MultiComp { p: self.p, comps }
    }
}

/// A multicomposition `(delta^(1), ..., delta^(m))` with 0/1 entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiComp {
    pub p: Params,
    pub comps: Vec<Vec<u8>>,
}

impl MultiComp {
    pub fn new(p: Params, comps: Vec<Vec<u8>>) -> Result<Self> {
        if comps.len() != p.m || comps.iter().any(|c| c.len() != p.k() || c.iter().any(|&x| x > 1)) {
            return Err(Error::InvalidData(format!("malformed multicomposition {comps:?} for {p:?}")));
        }
        Ok(MultiComp { p, comps })
    }

    fn idx(&self, i: Vertex) -> usize {
        (i - self.p.a) as usize
    }

    /// `delta_i^{(r)}`, 1-based `r`.
    pub fn entry(&self, r: usize, i: Vertex) -> u8 {
        self.comps[r - 1][self.idx(i)]
    }

    pub fn n(&self) -> usize {
        self.comps.iter().flatten().map(|&x| x as usize).sum()
    }

    /// The `m = 1` composition `delta^(r)`, 1-based `r`.
    pub fn component(&self, r: usize) -> Lambda {
        Lambda { p: self.p.with_m(1), parts: self.comps[r - 1].iter().map(|&x| x as usize).collect() }
    }

    /// `lambda^delta`.
    pub fn lambda(&self) -> Lambda {
        self.partial_sum(1..=self.p.m)
    }

    /// `sum_{r in range} delta^(r)` as a composition with `m` equal to the number of summands.
    pub fn partial_sum(&self, range: RangeInclusive<usize>) -> Lambda {
        let count = range.clone().count();
        let mut parts = vec![0usize; self.p.k()];
        for r in range {
            for (k, &x) in self.comps[r - 1].iter().enumerate() {
                parts[k] += x as usize;
            }
        }
        Lambda { p: self.p.with_m(count), parts }
    }

    pub fn j_word(&self) -> Vec<Vertex> {
        (1..=self.p.m).flat_map(|r| self.component(r).j_word()).collect()
    }

    fn shifted(&self, f: impl Fn(&Lambda) -> Vec<usize>) -> Vec<usize> {
        let l = self.p.l();
        (1..=self.p.m).flat_map(|r| f(&self.component(r)).into_iter().map(move |u| l * (r - 1) + u)).collect()
    }

    pub fn u_minus(&self, i: Vertex) -> Vec<usize> {
        self.shifted(|c| c.u_minus(i))
    }

    pub fn u_plus(&self, i: Vertex) -> Vec<usize> {
        self.shifted(|c| c.u_plus(i))
    }

    pub fn u_top(&self) -> Vec<usize> {
        self.shifted(|c| c.u_top())
    }

    /// `sgn_{delta;r,i}`.
    pub fn sgn(&self, r: usize, i: Vertex) -> i64 {
        let before: usize = (1..r).map(|s| self.component(s).n()).sum();
        sign(before + (self.p.a..i).map(|j| self.entry(r, j) as usize).sum::<usize>())
    }

    /// `t_delta = sum_{r<s, j<i} delta_i^(r) delta_j^(s)`.
    pub fn t(&self) -> usize {
        let mut t = 0;
        for r in 1..=self.p.m {
            for s in r + 1..=self.p.m {
                for i in self.p.colors() {
                    for j in self.p.a..i {
                        t += (self.entry(r, i) * self.entry(s, j)) as usize;
                    }
                }
            }
        }
        t
    }

    pub fn sigma(&self) -> i64 {
        sign(self.t())
    }

    pub fn tau(&self) -> i64 {
        self.sigma() * self.lambda().tau()
    }

    /// `delta + e_i^r`, 1-based `r`.
    pub fn plus_e(&self, r: usize, i: Vertex) -> Option<MultiComp> {
        if self.entry(r, i) == 1 {
            return None;
        }
        let mut comps = self.comps.clone();
        comps[r - 1][self.idx(i)] = 1;
        Some(MultiComp { p: self.p, comps })
    }

    pub fn minus_e(&self, r: usize, i: Vertex) -> Option<MultiComp> {
        if self.entry(r, i) == 0 {
            return None;
        }
        let mut comps = self.comps.clone();
        comps[r - 1][self.idx(i)] = 0;
        Some(MultiComp { p: self.p, comps })
    }

    pub fn step_to(&self, other: &MultiComp) -> Option<(usize, Vertex)> {
        for r in 1..=self.p.m {
            for i in self.p.colors() {
                if self.plus_e(r, i).as_ref() == Some(other) {
                    return Some((r, i));
                }
            }
        }
        None
    }

    /// `(t, r)` of `psi_{delta;r,i}` as a cycle in `S_d`.
    pub fn psi_cycle(&self, r: usize, i: Vertex) -> Result<(usize, usize)> {
        let (t, s) = self.component(r).psi_cycle(i)?;
        let off = self.p.l() * (r - 1);
        Ok((t + off, s + off))
    }

    pub fn is_initial(&self) -> bool {
        self.lambda().initial_multicomp() == *self
    }

    /// `w(delta)` by its defining increasing bijections.
    pub fn w(&self) -> Perm {
        let lam = self.lambda();
        let mut pairs = Vec::new();
        for i in self.p.colors() {
            pairs.push((zero_based(&self.u_minus(i)), zero_based(&lam.u_minus(i))));
            pairs.push((zero_based(&self.u_plus(i)), zero_based(&lam.u_plus(i))));
        }
        pairs.push((zero_based(&self.u_top()), zero_based(&lam.u_top())));
        increasing_bijection(&pairs, self.p.d()).expect("position sets partition [1, d]")
    }

    pub fn u(&self) -> Perm {
        self.w().inverse()
    }

    /// `lambda^{>= r} = sum_{s >= r} delta^(s)`.
    pub fn tail(&self, r: usize) -> Lambda {
        self.partial_sum(r..=self.p.m)
    }

    /// `mu^{<= r} = sum_{s <= r} delta^(s)`.
    pub fn head(&self, r: usize) -> Lambda {
        self.partial_sum(1..=r)
    }

    /// The factors `x(delta, r)`, `r = 1..m-1`, each in `S_d`.
    pub fn x_factors(&self) -> Vec<Perm> {
        let (l, d) = (self.p.l(), self.p.d());
        (1..self.p.m).map(|r| x_single(&self.component(r), &self.tail(r)).embed(l * (r - 1), d)).collect()
    }

    /// The factors `z(gamma, r)`, `r = 2..m`, each in `S_d`.
    pub fn z_factors(&self) -> Vec<Perm> {
        let d = self.p.d();
        (2..=self.p.m).map(|r| z_single(&self.component(r), &self.head(r)).embed(0, d)).collect()
    }

    /// Reduced word of `w(delta)` through its `x`-factorization (0-based generators).
    pub fn w_word(&self) -> Vec<u8> {
        self.x_factors().iter().flat_map(|x| x.lexmin_word()).collect()
    }

    /// Reduced word of `u(delta)` through its `z`-factorization (0-based generators).
    pub fn u_word(&self) -> Vec<u8> {
        self.z_factors().iter().flat_map(|z| z.lexmin_word()).collect()
    }
}

fn zero_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|&x| x - 1).collect()
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Position (1-based) of the letter `i` in the `m = 1` word `j^delta`.
fn pos_in(delta: &Lambda, i: Vertex) -> usize {
    delta.j_word().iter().position(|&x| x == i).expect("letter present") + 1
}

/// `x_delta^lambda`: sends `p_i` to `q_i` and `[l+1, d]` increasingly onto the rest.
pub fn x_single(delta: &Lambda, lambda: &Lambda) -> Perm {
    let (l, d) = (delta.p.l(), lambda.d());
    let mut images = vec![0usize; d];
    let mut taken = vec![false; d + 1];
    for i in delta.p.colors() {
        let q = if delta.part(i) == 0 { lambda.l_minus(i) } else { lambda.l_plus(i) };
        images[pos_in(delta, i) - 1] = q;
        taken[q] = true;
    }
    let top = delta.p.b + 1;
    images[pos_in(delta, top) - 1] = lambda.l_top();
    taken[lambda.l_top()] = true;
    let rest: Vec<usize> = (1..=d).filter(|&x| !taken[x]).collect();
    for (k, &q) in rest.iter().enumerate() {
        images[l + k] = q;
    }
    Perm::from_images(&images.iter().map(|&x| x - 1).collect::<Vec<_>>())
}

/// `z_mu^gamma`: sends `q^i` to `p^i` and the rest increasingly onto `[1, d - l]`.
pub fn z_single(gamma: &Lambda, mu: &Lambda) -> Perm {
    let (l, d) = (gamma.p.l(), mu.d());
    let mut images = vec![0usize; d + 1];
    let mut taken = vec![false; d + 1];
    for i in gamma.p.colors() {
        let q = if gamma.part(i) == 0 { mu.r_minus(i) } else { mu.r_plus(i) };
        images[q] = d - l + pos_in(gamma, i);
        taken[q] = true;
    }
    let top = gamma.p.b + 1;
    images[mu.r_top()] = d - l + pos_in(gamma, top);
    taken[mu.r_top()] = true;
    let rest: Vec<usize> = (1..=d).filter(|&x| !taken[x]).collect();
    for (k, &q) in rest.iter().enumerate() {
        images[q] = k + 1;
    }
    Perm::from_images(&images[1..].iter().map(|&x| x - 1).collect::<Vec<_>>())
}
