//! Brute-force verification of the algebraic identities the resolutions rest on: nil-Hecke
//! identities, pull-through rules, sign and degree bookkeeping, factorizations of `w(delta)`
//! and `u(gamma)`, and the commutation and expansion identities behind the chain maps.

use serde_json::json;

use crate::algebra::{divided_power_dual, divided_power_idempotent, y0_exponents, AlgebraElement, Mono};
use crate::error::Result;
use crate::lie::{DividedPowerWord, Vertex};
use crate::modules::induced::{binomial, compositions};
use crate::resolution::builder::{e_lambda, f_entry, g_entry, psi_lambda_i, psi_u_delta, psi_w_delta, y_lambda};
use crate::resolution::comb::{x_single, z_single, Lambda, MultiComp, Params};
use crate::symgroup::{
    all_perms, big_w0, block_transposition, coset_min_reps, cycle_word, is_fully_commutative, longest, word_to_perm,
    Perm,
};
use crate::verify::checks::Report;

/// Ranges of the lemma suite.
#[derive(Clone, Copy, Debug)]
pub struct LemmaConfig {
    /// Largest nil-Hecke rank for the divided power identities.
    pub max_d: usize,
    /// Largest `m` for the resolution identities.
    pub max_m: usize,
    /// Largest `l = ht(alpha) + 1` for the resolution identities.
    pub max_l: usize,
    /// Longest word for the pull-through rules.
    pub pull_len: usize,
    /// Include the large worked instances (`a = 1, b = 2, m = 4`).
    pub examples: bool,
}

impl Default for LemmaConfig {
    fn default() -> Self {
        LemmaConfig { max_d: 4, max_m: 3, max_l: 3, pull_len: 5, examples: true }
    }
}

/// The suite with default ranges and nil-Hecke rank up to `max_d`.
pub fn lemma_suite(max_d: usize) -> Result<Vec<Report>> {
    lemma_suite_with(&LemmaConfig { max_d, ..LemmaConfig::default() })
}

pub fn lemma_suite_with(cfg: &LemmaConfig) -> Result<Vec<Report>> {
    let params = json!({"max_d": cfg.max_d, "max_m": cfg.max_m, "max_l": cfg.max_l, "pull_len": cfg.pull_len});
    let small = param_range(cfg.max_l, cfg.max_m);
    let signs = param_range(cfg.max_l + 1, cfg.max_m);
    let mut out = vec![
        Report::new("nil_hecke_idempotents", params.clone(), nil_hecke_idempotents(cfg.max_d)),
        Report::new("w0_kills_low_degree", params.clone(), w0_kills_low_degree(cfg.max_d)?),
        Report::new("w0_y0_w0", params.clone(), w0_y0_w0(cfg.max_d)?),
        Report::new("divided_power_absorption", params.clone(), divided_power_absorption(cfg.max_d)?),
        Report::new("divided_power_cycle", params.clone(), divided_power_cycle(cfg.max_d)?),
        Report::new("pull_through_crossing", params.clone(), pull_crossing(cfg.pull_len)),
        Report::new("pull_through_dot", params.clone(), pull_dot(cfg.pull_len)),
        Report::new("sign_identity_f", params.clone(), sign_identity_f(&signs)),
        Report::new("sign_identity_g", params.clone(), sign_identity_g(&signs)),
        Report::new("degree_formulas", params.clone(), degree_formulas(&small)?),
        Report::new("unique_double_coset_rep", params.clone(), unique_rep(&small)),
        Report::new("positive_degree", params.clone(), positive_degree(cfg.max_l + 1)),
        Report::new("minimal_degree_rep", params.clone(), minimal_degree(&small)),
        Report::new("longest_block_rep", params.clone(), longest_block_rep(&small)),
        Report::new("x_factorization", params.clone(), x_factorization(&small)),
        Report::new("z_factorization", params.clone(), z_factorization(&small)),
        Report::new("reduced_word_independence", params.clone(), reduced_word_independence(&small)?),
        Report::new("f_after_g", params.clone(), f_after_g(&small)?),
        Report::new("commutation_f", params.clone(), commutation_f(&small, None)?),
        Report::new("commutation_g", params.clone(), commutation_g(&small, None)?),
        Report::new("first_row_expansion_f", params.clone(), first_row_f(&small, None)?),
        Report::new("first_row_expansion_g", params.clone(), last_row_g(&small, None)?),
        Report::new("expansion_f", params.clone(), expansion_f(&small)?),
        Report::new("expansion_g", params.clone(), expansion_g(&small)?),
    ];
    if cfg.examples {
        let p = Params::new(1, 2, 4)?;
        let mu = Lambda::new(p, vec![2, 3])?;
        out.push(Report::new(
            "commutation_f_example",
            json!({"a": 1, "b": 2, "m": 4, "mu": [2, 3]}),
            commutation_f(&[p], Some(&mu))?,
        ));
        let lam = Lambda::new(p, vec![1, 3])?;
        out.push(Report::new(
            "commutation_g_example",
            json!({"a": 1, "b": 2, "m": 4, "lambda": [1, 3], "i": 1}),
            commutation_g(&[p], Some((&lam, 1)))?,
        ));
        let first = vec![1u8, 0];
        out.push(Report::new(
            "first_row_expansion_f_example",
            json!({"a": 1, "b": 2, "m": 4, "mu": [2, 3], "delta1": [1, 0]}),
            first_row_f(&[p], Some((&mu, &first)))?,
        ));
        let lam = Lambda::new(p, vec![1, 2])?;
        let gammas = vec![
            MultiComp::new(p, vec![vec![1, 0], vec![1, 1], vec![0, 1], vec![0, 0]])?,
            MultiComp::new(p, vec![vec![0, 0], vec![1, 1], vec![0, 1], vec![1, 0]])?,
        ];
        out.push(Report::new(
            "first_row_expansion_g_example",
            json!({"a": 1, "b": 2, "m": 4, "lambda": [1, 2], "i": 1}),
            last_row_g(&[p], Some((&lam, 1, &gammas)))?,
        ));
    }
    Ok(out)
}

/// `(a, b, m)` with `a = 1`, `1 <= l <= max_l`, `1 <= m <= max_m`.
fn param_range(max_l: usize, max_m: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for l in 1..=max_l {
        for m in 1..=max_m {
            out.push(Params::new(1, l as Vertex - 1, m).expect("valid parameters"));
        }
    }
    out
}

fn tag(p: &Params) -> String {
    format!("a={} b={} m={}", p.a, p.b, p.m)
}

fn parity(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The word `i` with `w · i = top`.
fn bottom(w: &Perm, top: &[Vertex]) -> Vec<Vertex> {
    (0..top.len()).map(|p| top[w.apply(p)]).collect()
}

/// `psi_w` with left idempotent `top`.
fn psi_top(w: &Perm, top: &[Vertex]) -> AlgebraElement {
    AlgebraElement::psi_perm(w, &bottom(w, top))
}

/// `psi_{g_1} ... psi_{g_k}` with left idempotent `top`, and its right idempotent.
fn word_top(word: &[u8], top: &[Vertex]) -> (AlgebraElement, Vec<Vertex>) {
    let mut bottom = top.to_vec();
    for &g in word {
        bottom.swap(g as usize, g as usize + 1);
    }
    (AlgebraElement::word_product(word, &bottom), bottom)
}

fn mul(factors: &[&AlgebraElement]) -> Result<AlgebraElement> {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = acc.multiply(f)?;
    }
    Ok(acc)
}

fn div_idem(parts: &[(Vertex, usize)]) -> AlgebraElement {
    divided_power_idempotent(&DividedPowerWord::new(parts.to_vec())).element
}

fn nil_hecke_idempotents(max_d: usize) -> Vec<String> {
    let mut w = Vec::new();
    for d in 1..=max_d {
        let e = div_idem(&[(1, d)]);
        if &e * &e != e {
            w.push(format!("d={d}: psi_w0 y_0 is not idempotent"));
        }
        let e = divided_power_dual(1, d);
        // beyond rank 4 the square is associated as y_0 (psi_w0 y_0 psi_w0), which avoids
        // straightening the large normal form of y_0 psi_w0 twice
        let square = if d <= 4 {
            &e * &e
        } else {
            let word = vec![1; d];
            let y0 = AlgebraElement::dots(&y0_exponents(d), &word);
            let w0 = AlgebraElement::psi_perm(&longest(d), &word);
            match mul(&[&w0, &y0, &w0]) {
                Ok(x) => &y0 * &x,
                Err(err) => {
                    w.push(format!("d={d}: {err}"));
                    continue;
                }
            }
        };
        if square != e {
            w.push(format!("d={d}: y_0 psi_w0 is not idempotent"));
        }
    }
    w
}

/// Largest rank for which every monomial is tried; above it only the staircase monomials
/// `y^k`, `k_r < r`, which span the polynomials over the symmetric ones (central here).
const ALL_MONOMIALS_UP_TO: usize = 5;

/// `psi_w0 f psi_w0 = 0` for every monomial `f` of degree below `d(d-1)/2`.
fn w0_kills_low_degree(max_d: usize) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for d in 1..=max_d {
        let word = vec![1; d];
        let w0 = AlgebraElement::psi_perm(&longest(d), &word);
        for deg in 0..binomial(d, 2) {
            for k in compositions(deg, d) {
                if d > ALL_MONOMIALS_UP_TO && k.iter().enumerate().any(|(r, &e)| e > r) {
                    continue;
                }
                let k: Vec<u8> = k.into_iter().map(|x| x as u8).collect();
                let x = mul(&[&w0, &AlgebraElement::dots(&k, &word), &w0])?;
                if !x.is_zero() {
                    w.push(format!("d={d} y^{k:?}: {x}"));
                }
            }
        }
    }
    Ok(w)
}

fn w0_y0_w0(max_d: usize) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for d in 1..=max_d {
        let word = vec![1; d];
        let w0 = AlgebraElement::psi_perm(&longest(d), &word);
        let x = mul(&[&w0, &AlgebraElement::dots(&y0_exponents(d), &word), &w0])?;
        if x != w0 {
            w.push(format!("d={d}: {x}"));
        }
    }
    Ok(w)
}

/// `1_{i^(r_1) ... i^(r_t)} psi_w0 = psi_w0` and `1_{i^(r_1) ... i^(r_t)} 1_{i^(d)} = 1_{i^(d)}`.
fn divided_power_absorption(max_d: usize) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for d in 1..=max_d {
        let word = vec![1; d];
        let w0 = AlgebraElement::psi_perm(&longest(d), &word);
        let top = div_idem(&[(1, d)]);
        // compositions of d into positive parts are those of d into d parts with trailing zeros
        let positive = compositions(d, d).into_iter().filter(|c| c.iter().skip_while(|&&x| x > 0).all(|&x| x == 0));
        for parts in positive.map(|c| c.into_iter().filter(|&x| x > 0).collect::<Vec<_>>()) {
            let e = div_idem(&parts.iter().map(|&r| (1, r)).collect::<Vec<_>>());
            if e.multiply(&w0)? != w0 {
                w.push(format!("d={d} parts={parts:?}: psi_w0 not absorbed"));
            }
            if e.multiply(&top)? != top {
                w.push(format!("d={d} parts={parts:?}: 1_(i^(d)) not absorbed"));
            }
        }
    }
    Ok(w)
}

/// `1_{i^(d)} psi_{d->1} 1_{i i^(d-1)} = psi_{d->1} 1_{i i^(d-1)}`.
fn divided_power_cycle(max_d: usize) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for d in 2..=max_d {
        let word = vec![1; d];
        let cyc = AlgebraElement::word_product(&cycle_word(d, 1), &word);
        let right = div_idem(&[(1, 1), (1, d - 1)]);
        let rhs = cyc.multiply(&right)?;
        let lhs = div_idem(&[(1, d)]).multiply(&rhs)?;
        if lhs != rhs {
            w.push(format!("d={d}: {lhs} vs {rhs}"));
        }
    }
    Ok(w)
}

/// All words of length `2..=max_len` over `{1, 2, 3}`.
fn words(max_len: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Vertex>> = vec![vec![]];
    for len in 1..=max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (1..=3).map(move |c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
        if len >= 2 {
            out.extend(layer.iter().cloned());
        }
    }
    out
}

/// `1_i psi_{s->r} psi_t = 1_i psi_{t-1} psi_{s->r}` unless `i_s = i_{t-1} = i_t ± 1`.
fn pull_crossing(max_len: usize) -> Vec<String> {
    let mut w = Vec::new();
    for i in words(max_len) {
        let d = i.len();
        for r in 1..d {
            for s in r + 1..=d {
                for t in r + 1..s {
                    let (is, it1, it) = (i[s - 1], i[t - 2], i[t - 1]);
                    if is == it1 && (it - is).abs() == 1 {
                        continue;
                    }
                    let mut lw = cycle_word(s, r);
                    lw.push((t - 1) as u8);
                    let mut rw = vec![(t - 2) as u8];
                    rw.extend(cycle_word(s, r));
                    let (lhs, _) = word_top(&lw, &i);
                    let (rhs, _) = word_top(&rw, &i);
                    if lhs != rhs {
                        w.push(format!("i={i:?} r={r} s={s} t={t}: {lhs} vs {rhs}"));
                    }
                }
            }
        }
    }
    w
}

/// `1_i psi_{s->r} y_{u+1} = 1_i y_u psi_{s->r}` unless `i_s = i_u`.
fn pull_dot(max_len: usize) -> Vec<String> {
    let mut w = Vec::new();
    for i in words(max_len) {
        let d = i.len();
        for r in 1..d {
            for s in r + 1..=d {
                let (cyc, bottom) = word_top(&cycle_word(s, r), &i);
                for u in r..s {
                    if i[s - 1] == i[u - 1] {
                        continue;
                    }
                    let lhs = &cyc * &AlgebraElement::dot(u, &bottom);
                    let rhs = &AlgebraElement::dot(u - 1, &i) * &cyc;
                    if lhs != rhs {
                        w.push(format!("i={i:?} r={r} s={s} u={u}: {lhs} vs {rhs}"));
                    }
                }
            }
        }
    }
    w
}

fn sign_identity_f(ps: &[Params]) -> Vec<String> {
    let mut w = Vec::new();
    for p in ps {
        for delta in p.all_multicomps() {
            let lam = delta.lambda();
            for i in p.colors() {
                for r in 1..=p.m {
                    let Some(gamma) = delta.plus_e(r, i) else { continue };
                    let before: usize = (1..r).map(|s| delta.entry(s, i) as usize).sum();
                    let lhs = lam.sgn(i) * delta.sigma();
                    let rhs = gamma.sigma() * delta.sgn(r, i) * parity(before);
                    if lhs != rhs {
                        w.push(format!("{} delta={:?} i={i} r={r}", tag(p), delta.comps));
                    }
                }
            }
        }
    }
    w
}

fn sign_identity_g(ps: &[Params]) -> Vec<String> {
    let mut w = Vec::new();
    for p in ps {
        for gamma in p.all_multicomps() {
            let mu = gamma.lambda();
            for i in p.colors() {
                for r in 1..=p.m {
                    let Some(delta) = gamma.minus_e(r, i) else { continue };
                    let after: usize = (r + 1..=p.m).map(|s| gamma.entry(s, i) as usize).sum();
                    let lhs = gamma.tau() * mu.sgn(i);
                    let rhs = delta.sgn(r, i) * delta.tau() * parity(after);
                    if lhs != rhs {
                        w.push(format!("{} gamma={:?} i={i} r={r}", tag(p), gamma.comps));
                    }
                }
            }
        }
    }
    w
}

fn homogeneous_degree(x: &AlgebraElement) -> Option<i32> {
    match x.degree() {
        crate::algebra::Degree::Homogeneous(d) => Some(d),
        _ => None,
    }
}

/// Degrees of `psi_{w(delta)} e_delta`, `f^{lambda,delta}`, `g^{delta,lambda}`, and the shift
/// balance `s_lambda = n + m(m-1)/2 + deg f`.
pub fn degree_formulas(ps: &[Params]) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for p in ps {
        let (l, m) = (p.l() as i64, p.m as i64);
        for delta in p.all_multicomps() {
            let lam = delta.lambda();
            let n = delta.n() as i64;
            let sq = lam.sum_sq();
            let want = [
                m * (m - 1) * (l - 1) / 2 - m * n + sq,
                -m * (m - 1) * (l + 1) / 2 + m * n - sq,
                m * (m - 1) * (l + 1) / 2 - m * n + sq,
            ];
            let got = [
                homogeneous_degree(&psi_w_delta(&delta)),
                homogeneous_degree(&f_entry(&lam, &delta)?),
                homogeneous_degree(&g_entry(&delta, &lam)?),
            ];
            for (k, (g, want)) in got.iter().zip(want).enumerate() {
                if *g != Some(want as i32) {
                    w.push(format!("{} delta={:?} part {}: degree {g:?}, expected {want}", tag(p), delta.comps, k + 1));
                }
            }
            if let Some(df) = got[1] {
                if lam.shift() as i64 != n + m * (m - 1) / 2 + df as i64 {
                    w.push(format!("{} delta={:?}: shift {} unbalanced", tag(p), delta.comps, lam.shift()));
                }
            }
        }
        if let Some(zero) = p.lambdas(0).first() {
            if zero.shift() as i64 != -l * m * (m - 1) / 2 {
                w.push(format!("{}: s_0 = {}", tag(p), zero.shift()));
            }
        }
    }
    Ok(w)
}

fn block_comp(p: &Params) -> Vec<usize> {
    vec![p.l(); p.m]
}

/// `w(delta)` is the only element of `^{omega_lambda} D^{(l^m)}` with `w · j^delta = j^lambda`.
fn unique_rep(ps: &[Params]) -> Vec<String> {
    let mut w = Vec::new();
    for p in ps {
        for lam in p.all_lambdas() {
            let reps = coset_min_reps(Some(&lam.omega()), Some(&block_comp(p)), p.d());
            let target = lam.j_word();
            for delta in p.all_multicomps().into_iter().filter(|x| x.lambda() == lam) {
                let j = delta.j_word();
                let found: Vec<&Perm> = reps.iter().filter(|x| x.act_on_word(&j) == target).collect();
                if found.len() != 1 || *found[0] != delta.w() {
                    w.push(format!("{} delta={:?}: {} candidates", tag(p), delta.comps, found.len()));
                }
            }
        }
    }
    w
}

/// For single compositions, `w · j^delta = j^eps` forces `w = 1` or a positive-degree crossing.
fn positive_degree(max_l: usize) -> Vec<String> {
    let mut w = Vec::new();
    for p in param_range(max_l, 1) {
        let lams = p.all_lambdas();
        let perms = all_perms(p.l());
        for delta in &lams {
            let j = delta.j_word();
            for eps in &lams {
                let target = eps.j_word();
                for x in perms.iter().filter(|x| x.act_on_word(&j) == target) {
                    let deg = Mono::new(x.clone(), &vec![0; j.len()], &j).degree();
                    let ok = if delta == eps { x.is_identity() } else { deg > 0 };
                    if !ok {
                        w.push(format!(
                            "{} delta={:?} eps={:?} w={:?}: degree {deg}",
                            tag(&p),
                            delta.parts,
                            eps.parts,
                            x.images1()
                        ));
                    }
                }
            }
        }
    }
    w
}

/// `w(delta)` has strictly minimal degree among `w ∈ ^{omega_lambda} D` with `w · j^delta = j^lambda`.
fn minimal_degree(ps: &[Params]) -> Vec<String> {
    let mut w = Vec::new();
    for p in ps {
        for lam in p.all_lambdas() {
            let reps = coset_min_reps(Some(&lam.omega()), None, p.d());
            let target = lam.j_word();
            for delta in p.all_multicomps().into_iter().filter(|x| x.lambda() == lam) {
                let j = delta.j_word();
                let wd = delta.w();
                let zero = vec![0; j.len()];
                let base = Mono::new(wd.clone(), &zero, &j).degree();
                let mut seen = false;
                for x in reps.iter().filter(|x| x.act_on_word(&j) == target) {
                    if *x == wd {
                        seen = true;
                    } else if Mono::new(x.clone(), &zero, &j).degree() <= base {
                        w.push(format!("{} delta={:?}: {:?} has degree <= {base}", tag(p), delta.comps, x.images1()));
                    }
                }
                if !seen {
                    w.push(format!("{} delta={:?}: w(delta) not among the candidates", tag(p), delta.comps));
                }
            }
        }
    }
    w
}

/// `W_0` has strictly minimal degree among `w ∈ D^{(l^m)}` fixing `j^0`, and its block
/// transposition word is reduced.
fn longest_block_rep(ps: &[Params]) -> Vec<String> {
    let mut w = Vec::new();
    for p in ps {
        let (big, rs) = big_w0(p.l(), p.m);
        let word: Vec<u8> = rs.iter().flat_map(|&r| block_transposition(r, p.l(), p.m).lexmin_word()).collect();
        if word_to_perm(&word, p.d()) != big || word.len() != big.length() {
            w.push(format!("{}: block transposition word is not a reduced word of W_0", tag(p)));
        }
        let j0 = zero_multicomp(p).j_word();
        let zero = vec![0; j0.len()];
        let base = Mono::new(big.clone(), &zero, &j0).degree();
        let mut seen = false;
        for x in coset_min_reps(None, Some(&block_comp(p)), p.d()).iter().filter(|x| x.act_on_word(&j0) == j0) {
            if *x == big {
                seen = true;
            } else if Mono::new(x.clone(), &zero, &j0).degree() <= base {
                w.push(format!("{}: {:?} has degree <= {base}", tag(p), x.images1()));
            }
        }
        if !seen {
            w.push(format!("{}: W_0 does not fix j^0", tag(p)));
        }
    }
    w
}

fn zero_multicomp(p: &Params) -> MultiComp {
    MultiComp::new(*p, vec![vec![0; p.k()]; p.m]).expect("zero multicomposition")
}

/// `w(delta) = x(delta,1) ... x(delta,m-1)` with lengths adding; each factor is fully
/// commutative and carries `j^{delta^(r)} j^{lambda^{>r}}` to `j^{lambda^{>=r}}`.
fn x_factorization(ps: &[Params]) -> Vec<String> {
    let mut w = Vec::new();
    for p in ps {
        for delta in p.all_multicomps() {
            let wd = delta.w();
            let word = delta.w_word();
            if word_to_perm(&word, p.d()) != wd || word.len() != wd.length() {
                w.push(format!("{} delta={:?}: x-factor word is not a reduced word of w(delta)", tag(p), delta.comps));
            }
            for r in 1..p.m {
                let x = x_single(&delta.component(r), &delta.tail(r));
                let mut src = delta.component(r).j_word();
                src.extend(delta.tail(r + 1).j_word());
                if x.act_on_word(&src) != delta.tail(r).j_word() || !is_fully_commutative(&x) {
                    w.push(format!("{} delta={:?} r={r}: bad x factor", tag(p), delta.comps));
                }
            }
        }
    }
    w
}

/// `u(gamma) = z(gamma,2) ... z(gamma,m)` with lengths adding, `u = w^{-1}`; each factor is
/// fully commutative and carries `j^{mu^{<=r}}` to `j^{mu^{<r}} j^{gamma^(r)}`.
fn z_factorization(ps: &[Params]) -> Vec<String> {
    let mut w = Vec::new();
    for p in ps {
        for gamma in p.all_multicomps() {
            let u = gamma.u();
            let word = gamma.u_word();
            if word_to_perm(&word, p.d()) != u || word.len() != u.length() || u != gamma.w().inverse() {
                w.push(format!("{} gamma={:?}: z-factor word is not a reduced word of u(gamma)", tag(p), gamma.comps));
            }
            for r in 2..=p.m {
                let z = z_single(&gamma.component(r), &gamma.head(r));
                let mut tgt = gamma.head(r - 1).j_word();
                tgt.extend(gamma.component(r).j_word());
                if z.act_on_word(&gamma.head(r).j_word()) != tgt || !is_fully_commutative(&z) {
                    w.push(format!("{} gamma={:?} r={r}: bad z factor", tag(p), gamma.comps));
                }
            }
        }
    }
    w
}

fn distinct_words(x: &Perm, preferred: Vec<u8>) -> Vec<Vec<u8>> {
    let mut out = vec![preferred, x.lexmin_word(), x.lexmax_word(), x.right_greedy_word()];
    out.sort();
    out.dedup();
    out
}

/// `f^{lambda,delta}` and `g^{delta,lambda}` do not depend on the reduced words of `w(delta)`, `u(delta)`.
fn reduced_word_independence(ps: &[Params]) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for p in ps {
        for delta in p.all_multicomps() {
            let lam = delta.lambda();
            let f = f_entry(&lam, &delta)?;
            let head = e_lambda(&lam).multiply(&AlgebraElement::psi_perm(&lam.w0(), &lam.j_word()))?;
            for word in distinct_words(&delta.w(), delta.w_word()) {
                let alt = head.multiply(&AlgebraElement::word_product(&word, &delta.j_word()))?.scale(delta.sigma());
                if alt != f {
                    w.push(format!("{} delta={:?}: f differs for word {word:?}", tag(p), delta.comps));
                }
            }
            let g = g_entry(&delta, &lam)?;
            let tail = y_lambda(&lam).multiply(&e_lambda(&lam))?;
            for word in distinct_words(&delta.u(), delta.u_word()) {
                let alt = AlgebraElement::word_product(&word, &lam.j_word()).multiply(&tail)?.scale(delta.tau());
                if alt != g {
                    w.push(format!("{} delta={:?}: g differs for word {word:?}", tag(p), delta.comps));
                }
            }
        }
    }
    Ok(w)
}

/// `g_0 f_0 = e_0 Y_0 psi_{W_0} e_0` along the block transposition word, and
/// `f_0 = psi_g 1_{j^0}` for the longest `g` with `g · j^0 = j^{lambda=0}`.
fn f_after_g(ps: &[Params]) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for p in ps {
        let (l, m, d) = (p.l(), p.m, p.d());
        let delta = zero_multicomp(p);
        let lam = delta.lambda();
        let j0 = delta.j_word();
        let lhs = g_entry(&delta, &lam)?.multiply(&f_entry(&lam, &delta)?)?;
        let (_, rs) = big_w0(l, m);
        let word: Vec<u8> = rs.iter().flat_map(|&r| block_transposition(r, l, m).lexmin_word()).collect();
        let mut y = vec![0u8; d];
        for k in 1..=m {
            y[k * l - 1] = (k - 1) as u8;
        }
        let rhs = AlgebraElement::dots(&y, &j0).multiply(&AlgebraElement::word_product(&word, &j0))?;
        if lhs != rhs {
            w.push(format!("{}: g_0 f_0 = {lhs}, expected {rhs}", tag(p)));
        }
        if d <= 9 {
            let target = lam.j_word();
            let g = all_perms(d).into_iter().filter(|x| x.act_on_word(&j0) == target).max_by_key(Perm::length);
            match g {
                Some(g) if AlgebraElement::psi_perm(&g, &j0) == f_entry(&lam, &delta)? => {}
                _ => w.push(format!("{}: f_0 is not psi_g 1_(j^0)", tag(p))),
            }
        }
    }
    Ok(w)
}

/// `1_{j^mu} psi_{lambda;i} psi_{w_0^lambda} = 1_{j^mu} psi_{w_0^mu} psi_{l_i^+(mu) -> l_i^-(lambda)}`.
fn commutation_f(ps: &[Params], only: Option<&Lambda>) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for p in ps {
        let mus: Vec<Lambda> = match only {
            Some(mu) => vec![mu.clone()],
            None => p.all_lambdas(),
        };
        for mu in &mus {
            for i in p.colors() {
                let Some(lam) = mu.minus_e(i) else { continue };
                let top = mu.j_word();
                let lhs = psi_lambda_i(&lam, i)?.multiply(&AlgebraElement::psi_perm(&lam.w0(), &lam.j_word()))?;
                let (cyc, _) = word_top(&cycle_word(mu.l_plus(i), lam.l_minus(i)), &top);
                let rhs = psi_top(&mu.w0(), &top).multiply(&cyc)?;
                if lhs != rhs || lhs.is_zero() {
                    w.push(format!("{} mu={:?} i={i}: {lhs} vs {rhs}", tag(p), mu.parts));
                }
            }
        }
    }
    Ok(w)
}

/// `y^mu e_mu psi_{lambda;i} e_lambda = psi_{lambda;i} y^lambda e_lambda`.
fn commutation_g(ps: &[Params], only: Option<(&Lambda, Vertex)>) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for p in ps {
        let cases: Vec<(Lambda, Vertex)> = match only {
            Some((lam, i)) => vec![(lam.clone(), i)],
            None => p.all_lambdas().into_iter().flat_map(|l| p.colors().map(move |i| (l.clone(), i))).collect(),
        };
        for (lam, i) in cases {
            let Some(mu) = lam.plus_e(i) else { continue };
            let psi = psi_lambda_i(&lam, i)?;
            let lhs = mul(&[&y_lambda(&mu), &e_lambda(&mu), &psi, &e_lambda(&lam)])?;
            let rhs = mul(&[&psi, &y_lambda(&lam), &e_lambda(&lam)])?;
            if lhs != rhs || lhs.is_zero() {
                w.push(format!("{} lambda={:?} i={i}: {lhs} vs {rhs}", tag(p), lam.parts));
            }
        }
    }
    Ok(w)
}

/// `lam - comp` as a composition for `m - 1`, if nonnegative.
fn reduce(lam: &Lambda, comp: &[u8]) -> Option<Lambda> {
    let parts: Option<Vec<usize>> = lam.parts.iter().zip(comp).map(|(&x, &c)| x.checked_sub(c as usize)).collect();
    Lambda::new(lam.p.with_m(lam.p.m - 1), parts?).ok()
}

/// `m = 1` composition from 0/1 entries.
fn single(p: &Params, comp: &[u8]) -> Lambda {
    Lambda::new(p.with_m(1), comp.iter().map(|&x| x as usize).collect()).expect("0/1 composition")
}

/// `1_{j^mu} psi_{lambda;i} e_lambda psi_{w_0^lambda} psi_{x(delta,1)}` expanded as the
/// leading term plus the term recursing into the last `m - 1` components.
fn first_row_f(ps: &[Params], only: Option<(&Lambda, &[u8])>) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for p in ps.iter().filter(|p| p.m >= 2) {
        let mus: Vec<Lambda> = match only {
            Some((mu, _)) => vec![mu.clone()],
            None => p.all_lambdas(),
        };
        for mu in &mus {
            let top = mu.j_word();
            for i in p.colors() {
                let Some(lam) = mu.minus_e(i) else { continue };
                let deltas = p.all_multicomps().into_iter().filter(|x| x.lambda() == lam);
                for delta in deltas {
                    if let Some((_, first)) = only {
                        if delta.comps[0] != first {
                            continue;
                        }
                    }
                    let d1 = delta.comps[0].clone();
                    let x1 = x_single(&delta.component(1), &lam);
                    let head = mul(&[
                        &psi_lambda_i(&lam, i)?,
                        &e_lambda(&lam),
                        &AlgebraElement::psi_perm(&lam.w0(), &lam.j_word()),
                    ])?;
                    let lhs = head.multiply(&psi_top(&x1, &lam.j_word()))?;
                    // recursive term, empty unless mu - delta^(1) is a composition for m - 1
                    let rec = match (reduce(mu, &d1), reduce(&lam, &d1)) {
                        (Some(_), Some(lam_bar)) => {
                            let mut cword = Vec::new();
                            for j in p.colors() {
                                let (hi, lo) = if delta.entry(1, j) == 0 {
                                    (mu.r_minus(j), mu.l_minus(j))
                                } else {
                                    (mu.r_plus(j), mu.l_plus(j))
                                };
                                if lo < hi {
                                    cword.extend(cycle_word(hi, lo));
                                }
                            }
                            if mu.l_top() < mu.r_top() {
                                cword.extend(cycle_word(mu.r_top(), mu.l_top()));
                            }
                            let (psi_c, below) = word_top(&cword, &top);
                            let xm = psi_top(&x_single(&single(p, &d1), mu), &below);
                            let inner = mul(&[
                                &psi_lambda_i(&lam_bar, i)?,
                                &e_lambda(&lam_bar),
                                &AlgebraElement::psi_perm(&lam_bar.w0(), &lam_bar.j_word()),
                            ])?;
                            let inner = AlgebraElement::idempotent(&single(p, &d1).j_word()).concat(&inner);
                            mul(&[&psi_c, &xm, &inner])?
                        }
                        _ => AlgebraElement::zero(lhs.weight().clone()),
                    };
                    let rhs = if d1[(i - p.a) as usize] == 0 {
                        let gamma = delta.plus_e(1, i).expect("entry is zero");
                        let xg = gamma.x_factors().into_iter().next().expect("m >= 2");
                        let (s, t) = delta.psi_cycle(1, i)?;
                        let (cyc, _) = word_top(&cycle_word(s, t), &bottom(&xg, &top));
                        let lead = mul(&[&psi_top(&mu.w0(), &top), &psi_top(&xg, &top), &cyc])?;
                        &lead + &rec
                    } else {
                        -&rec
                    };
                    if lhs != rhs || lhs.is_zero() {
                        w.push(format!("{} mu={:?} i={i} delta={:?}: {lhs} vs {rhs}", tag(p), mu.parts, delta.comps));
                    }
                }
            }
        }
    }
    Ok(w)
}

/// `psi_{z(gamma,m)} y^mu e_mu psi_{lambda;i} e_lambda` expanded as the leading term plus the
/// term recursing into the first `m - 1` components.
fn last_row_g(ps: &[Params], only: Option<(&Lambda, Vertex, &[MultiComp])>) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for p in ps.iter().filter(|p| p.m >= 2) {
        let cases: Vec<(Lambda, Vertex)> = match only {
            Some((lam, i, _)) => vec![(lam.clone(), i)],
            None => p.all_lambdas().into_iter().flat_map(|l| p.colors().map(move |i| (l.clone(), i))).collect(),
        };
        for (lam, i) in cases {
            let Some(mu) = lam.plus_e(i) else { continue };
            let gammas: Vec<MultiComp> = match only {
                Some((_, _, gs)) => gs.to_vec(),
                None => p.all_multicomps().into_iter().filter(|x| x.lambda() == mu).collect(),
            };
            let tail = mul(&[&y_lambda(&mu), &e_lambda(&mu), &psi_lambda_i(&lam, i)?, &e_lambda(&lam)])?;
            for gamma in gammas {
                if gamma.lambda() != mu {
                    w.push(format!("{} gamma={:?}: weight is not mu={:?}", tag(p), gamma.comps, mu.parts));
                    continue;
                }
                let zm = gamma.z_factors().pop().expect("m >= 2");
                let lhs = AlgebraElement::psi_perm(&zm, &mu.j_word()).multiply(&tail)?;
                let gm = gamma.comps[p.m - 1].clone();
                let rec = match (reduce(&mu, &gm), reduce(&lam, &gm)) {
                    (Some(mu_bar), Some(lam_bar)) => {
                        let inner = mul(&[
                            &y_lambda(&mu_bar),
                            &e_lambda(&mu_bar),
                            &psi_lambda_i(&lam_bar, i)?,
                            &e_lambda(&lam_bar),
                        ])?;
                        let inner = inner.concat(&AlgebraElement::idempotent(&single(p, &gm).j_word()));
                        let z = z_single(&single(p, &gm), &lam);
                        let mut y = vec![0u8; p.d()];
                        y[lam.r_top() - 1] = (p.m - 1) as u8;
                        mul(&[
                            &inner,
                            &AlgebraElement::psi_perm(&z, &lam.j_word()),
                            &AlgebraElement::dots(&y, &lam.j_word()),
                            &e_lambda(&lam),
                        ])?
                    }
                    _ => AlgebraElement::zero(lhs.weight().clone()),
                };
                let rhs = if gm[(i - p.a) as usize] == 1 {
                    let delta = gamma.minus_e(p.m, i).expect("entry is one");
                    let zd = delta.z_factors().pop().expect("m >= 2");
                    let (s, t) = delta.psi_cycle(p.m, i)?;
                    let body = mul(&[&AlgebraElement::psi_perm(&zd, &lam.j_word()), &y_lambda(&lam), &e_lambda(&lam)])?;
                    let mid = zd.act_on_word(&lam.j_word());
                    let lead = AlgebraElement::word_product(&cycle_word(s, t), &mid).multiply(&body)?;
                    &lead - &rec
                } else {
                    rec
                };
                if lhs != rhs || lhs.is_zero() {
                    w.push(format!("{} lambda={:?} i={i} gamma={:?}: {lhs} vs {rhs}", tag(p), lam.parts, gamma.comps));
                }
            }
        }
    }
    Ok(w)
}

/// `1_{j^mu} psi_{lambda;i} e_lambda psi_{w_0^lambda} psi_{w(delta)}` as a signed sum over
/// the components of `delta` that can absorb `e_i`.
fn expansion_f(ps: &[Params]) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for p in ps {
        for mu in p.all_lambdas() {
            let top = mu.j_word();
            let w0mu = psi_top(&mu.w0(), &top);
            for i in p.colors() {
                let Some(lam) = mu.minus_e(i) else { continue };
                let head = mul(&[
                    &psi_lambda_i(&lam, i)?,
                    &e_lambda(&lam),
                    &AlgebraElement::psi_perm(&lam.w0(), &lam.j_word()),
                ])?;
                for delta in p.all_multicomps().into_iter().filter(|x| x.lambda() == lam) {
                    let lhs = head.multiply(&psi_w_delta(&delta))?;
                    let mut rhs = AlgebraElement::zero(lhs.weight().clone());
                    for r in 1..=p.m {
                        let Some(gamma) = delta.plus_e(r, i) else { continue };
                        let before: usize = (1..r).map(|s| delta.entry(s, i) as usize).sum();
                        let (s, t) = delta.psi_cycle(r, i)?;
                        let cyc = AlgebraElement::word_product(&cycle_word(s, t), &delta.j_word());
                        let term = mul(&[&w0mu, &psi_w_delta(&gamma), &cyc])?;
                        rhs.add_assign_scaled(&term, parity(before));
                    }
                    if lhs != rhs {
                        w.push(format!("{} mu={:?} i={i} delta={:?}: {lhs} vs {rhs}", tag(p), mu.parts, delta.comps));
                    }
                }
            }
        }
    }
    Ok(w)
}

/// `psi_{u(gamma)} y^mu e_mu psi_{lambda;i} e_lambda` as a signed sum over the components of
/// `gamma` that contain `e_i`.
fn expansion_g(ps: &[Params]) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for p in ps {
        for lam in p.all_lambdas() {
            for i in p.colors() {
                let Some(mu) = lam.plus_e(i) else { continue };
                let tail = mul(&[&y_lambda(&mu), &e_lambda(&mu), &psi_lambda_i(&lam, i)?, &e_lambda(&lam)])?;
                let base = mul(&[&y_lambda(&lam), &e_lambda(&lam)])?;
                for gamma in p.all_multicomps().into_iter().filter(|x| x.lambda() == mu) {
                    let lhs = psi_u_delta(&gamma).multiply(&tail)?;
                    let mut rhs = AlgebraElement::zero(lhs.weight().clone());
                    for r in 1..=p.m {
                        let Some(delta) = gamma.minus_e(r, i) else { continue };
                        let after: usize = (r + 1..=p.m).map(|s| gamma.entry(s, i) as usize).sum();
                        let (s, t) = delta.psi_cycle(r, i)?;
                        let cyc = AlgebraElement::word_product(&cycle_word(s, t), &delta.j_word());
                        let term = mul(&[&cyc, &psi_u_delta(&delta), &base])?;
                        rhs.add_assign_scaled(&term, parity(after));
                    }
                    if lhs != rhs {
                        w.push(format!(
                            "{} lambda={:?} i={i} gamma={:?}: {lhs} vs {rhs}",
                            tag(p),
                            lam.parts,
                            gamma.comps
                        ));
                    }
                }
            }
        }
    }
    Ok(w)
}
