//! Symbolic checks on complexes and chain maps.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::resolution::comb::Params;
use crate::resolution::complex::{check_matrix, Matrix, ProjComplex};
use crate::resolution::{build_p_power, build_q, chain_maps};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one check, with the failing instances as witnesses.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub params: serde_json::Value,
    pub status: Status,
    pub witnesses: Vec<String>,
}

impl Report {
    pub fn new(check: &str, params: serde_json::Value, witnesses: Vec<String>) -> Self {
        let status = if witnesses.is_empty() { Status::Pass } else { Status::Fail };
        Report { check: check.into(), params, status, witnesses }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn nonzero_witnesses(m: &Matrix, label: &str, out: &mut Vec<String>) {
    for (&(r, c), x) in &m.entries {
        out.push(format!("{label} ({r},{c}): {x}"));
    }
}

/// Every composite `d_n d_{n+1}` vanishes entrywise.
pub fn check_d_squared(c: &ProjComplex) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for n in 1..c.boundaries.len() {
        let dd = c.boundaries[n].multiply(&c.boundaries[n - 1])?;
        nonzero_witnesses(&dd, &format!("d_{} d_{}", n - 1, n), &mut w);
    }
    Ok(w)
}

/// Entries lie in the right idempotent corners and have degree zero against the shifts.
pub fn check_homogeneity(c: &ProjComplex) -> Vec<String> {
    let mut w = Vec::new();
    for (n, d) in c.boundaries.iter().enumerate() {
        if let Err(e) = check_matrix(d, &c.levels[n + 1], &c.levels[n]) {
            w.push(format!("d_{n}: {e}"));
        }
    }
    w
}

/// `d_n F_n = F_{n+1} c_n` and `G_{n+1} d_n = c_n G_n` for all `n`.
pub fn check_chain_maps(p: &ProjComplex, q: &ProjComplex, f: &[Matrix], g: &[Matrix]) -> Result<Vec<String>> {
    if p.levels.len() != q.levels.len() || f.len() != p.levels.len() || g.len() != p.levels.len() {
        return Err(Error::ShapeMismatch("complexes and chain maps have different lengths".into()));
    }
    let mut w = Vec::new();
    for n in 0..p.boundaries.len() {
        let lhs = p.boundaries[n].multiply(&f[n])?;
        let rhs = f[n + 1].multiply(&q.boundaries[n])?;
        nonzero_witnesses(&lhs.sub(&rhs)?, &format!("d F - F c at n={n}"), &mut w);
        let lhs = g[n + 1].multiply(&p.boundaries[n])?;
        let rhs = q.boundaries[n].multiply(&g[n])?;
        nonzero_witnesses(&lhs.sub(&rhs)?, &format!("G d - c G at n={n}"), &mut w);
    }
    for n in 0..p.levels.len() {
        if let Err(e) = check_matrix(&f[n], &p.levels[n], &q.levels[n]) {
            w.push(format!("F_{n}: {e}"));
        }
        if let Err(e) = check_matrix(&g[n], &q.levels[n], &p.levels[n]) {
            w.push(format!("G_{n}: {e}"));
        }
    }
    Ok(w)
}

/// `F_n G_n = 1`, and each product `f^{lambda,delta} g^{delta,lambda}` is `e_lambda` for the
/// initial `delta = delta_lambda` and zero otherwise.
pub fn check_splitting(params: Params, p: &ProjComplex, f: &[Matrix], g: &[Matrix]) -> Result<Vec<String>> {
    let mut w = Vec::new();
    for n in 0..p.levels.len() {
        let fg = f[n].multiply(&g[n])?;
        let id = Matrix::identity(&p.levels[n], p.weight.clone());
        nonzero_witnesses(&fg.sub(&id)?, &format!("F G - 1 at n={n}"), &mut w);
        let lams = params.lambdas(n);
        let deltas = params.multicomps(n);
        for (r, lam) in lams.iter().enumerate() {
            let initial = lam.initial_multicomp();
            for (c, delta) in deltas.iter().enumerate() {
                let (Some(x), Some(y)) = (f[n].get(r, c), g[n].get(c, r)) else { continue };
                let prod = x.multiply(y)?;
                let want = if *delta == initial { p.levels[n][r].element() } else { prod.scale(0) };
                if prod != want {
                    w.push(format!("f g at lambda={:?}, delta={:?}: {prod}", lam.parts, delta.comps));
                }
            }
        }
    }
    Ok(w)
}

/// All symbolic checks for `P(alpha^m)` and `Q`.
pub fn verify_resolution(params: Params) -> Result<Vec<Report>> {
    let pj = serde_json::json!({"a": params.a, "b": params.b, "m": params.m});
    let p = build_p_power(params)?;
    let q = build_q(params)?;
    let (f, g) = chain_maps(params)?;
    let mut homog = check_homogeneity(&p);
    homog.extend(check_homogeneity(&q).into_iter().map(|s| format!("Q {s}")));
    let mut dd = check_d_squared(&p)?;
    dd.extend(check_d_squared(&q)?.into_iter().map(|s| format!("Q {s}")));
    Ok(vec![
        Report::new("homogeneity", pj.clone(), homog),
        Report::new("d_squared", pj.clone(), dd),
        Report::new("chain_maps", pj.clone(), check_chain_maps(&p, &q, &f, &g)?),
        Report::new("splitting", pj, check_splitting(params, &p, &f, &g)?),
    ])
}

/// `q^{m(m-1)/2} P(alpha)^{∘m}` agrees with `Q` summand by summand, and entrywise up to
/// a diagonal change of basis by signs (the two constructions use opposite Koszul conventions).
pub fn check_q_is_power(params: Params) -> Result<Vec<String>> {
    let single = build_p_power(params.with_m(1))?;
    let mut prod = single.clone();
    for _ in 1..params.m {
        prod = prod.product(&single);
    }
    let q = build_q(params)?;
    let mut w = Vec::new();
    if prod.levels.len() != q.levels.len() {
        w.push(format!("{} levels in the product, {} in Q", prod.levels.len(), q.levels.len()));
        return Ok(w);
    }
    let shift = (params.m * (params.m - 1) / 2) as i32;
    // perm[n][k]: index in the product of the k-th summand of Q_n
    let mut perm = Vec::new();
    for (n, level) in q.levels.iter().enumerate() {
        let mut map = Vec::new();
        for s in level {
            match prod.levels[n].iter().position(|t| t.idem == s.idem) {
                Some(k) if prod.levels[n][k].shift + shift == s.shift => map.push(k),
                _ => w.push(format!("summand {} at level {n} has no partner", s.idem)),
            }
        }
        perm.push(map);
    }
    if !w.is_empty() {
        return Ok(w);
    }
    // propagate signs eps with Q[r][c] = eps_r eps_c P[r][c]
    let mut eps: Vec<Vec<Option<i64>>> = q.levels.iter().map(|l| vec![None; l.len()]).collect();
    for n in 0..q.levels.len() {
        for k in 0..q.levels[n].len() {
            if eps[n][k].is_none() {
                eps[n][k] = Some(1);
                let mut stack = vec![(n, k)];
                while let Some((lv, idx)) = stack.pop() {
                    let e = eps[lv][idx].unwrap();
                    let mut neigh = Vec::new();
                    if lv + 1 < q.levels.len() {
                        for (&(r, c), x) in &q.boundaries[lv].entries {
                            if c == idx {
                                neigh.push((lv + 1, r, x.clone(), prod.boundaries[lv].get(perm[lv + 1][r], perm[lv][c]).cloned()));
                            }
                        }
                    }
                    if lv > 0 {
                        for (&(r, c), x) in &q.boundaries[lv - 1].entries {
                            if r == idx {
                                neigh.push((lv - 1, c, x.clone(), prod.boundaries[lv - 1].get(perm[lv][r], perm[lv - 1][c]).cloned()));
                            }
                        }
                    }
                    for (l2, i2, x, y) in neigh {
                        let s = match y {
                            Some(y) if y == x => 1,
                            Some(y) if y.scale(-1) == x => -1,
                            _ => {
                                w.push(format!("entry between level {lv} #{idx} and level {l2} #{i2} differs beyond sign"));
                                continue;
                            }
                        };
                        match eps[l2][i2] {
                            None => {
                                eps[l2][i2] = Some(e * s);
                                stack.push((l2, i2));
                            }
                            Some(f) if f == e * s => {}
                            Some(_) => w.push(format!("inconsistent signs at level {l2} #{i2}")),
                        }
                    }
                }
            }
        }
    }
    // the product has no entries missing from Q
    for (n, d) in prod.boundaries.iter().enumerate() {
        let nonzero_q = q.boundaries[n].entries.len();
        if d.entries.len() != nonzero_q {
            w.push(format!("d_{n} has {} entries in the product, {nonzero_q} in Q", d.entries.len()));
        }
    }
    Ok(w)
}
