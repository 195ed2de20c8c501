//! The complexes `P(alpha^m)`, `Q`, their products, and the chain maps `F`, `G`.

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::lie::{DividedPowerWord, KostantPartition, Root};
use crate::resolution::comb::{Lambda, MultiComp, Params};
use crate::resolution::complex::{Matrix, ProjComplex, Summand};

pub fn summand_of(lam: &Lambda) -> Summand {
    Summand::new(lam.shift(), lam.i_word())
}

pub fn e_lambda(lam: &Lambda) -> AlgebraElement {
    summand_of(lam).element()
}

/// `q^{n + m(m-1)/2} R e_delta`.
pub fn summand_of_multi(delta: &MultiComp) -> Summand {
    let m = delta.p.m as i32;
    Summand::new(delta.n() as i32 + m * (m - 1) / 2, DividedPowerWord::plain(&delta.j_word()))
}

/// `psi_{lambda;i} 1_{j^lambda}`.
pub fn psi_lambda_i(lam: &Lambda, i: i32) -> Result<AlgebraElement> {
    let (t, r) = lam.psi_cycle(i)?;
    AlgebraElement::psi_word(&crate::symgroup::cycle_word(t, r), &lam.j_word())
}

/// `d^{mu,lambda}`: `sgn_{lambda;i} e_mu psi_{lambda;i} e_lambda` when `mu = lambda + e_i`, else zero.
pub fn boundary_d(mu: &Lambda, lam: &Lambda) -> Result<AlgebraElement> {
    if mu.n() != lam.n() + 1 || mu.p != lam.p {
        return Err(Error::ShapeMismatch(format!("{:?} is not one level above {:?}", mu.parts, lam.parts)));
    }
    let weight = lam.i_word().weight();
    match lam.step_to(mu) {
        None => Ok(AlgebraElement::zero(weight)),
        Some(i) => {
            let x = psi_lambda_i(lam, i)?;
            Ok(e_lambda(mu).multiply(&x)?.multiply(&e_lambda(lam))?.scale(lam.sgn(i)))
        }
    }
}

/// `c^{gamma,delta}`: `sgn_{delta;r,i} psi_{delta;r,i} 1_{j^delta}` when `gamma = delta + e_i^r`, else zero.
pub fn boundary_c(gamma: &MultiComp, delta: &MultiComp) -> Result<AlgebraElement> {
    if gamma.n() != delta.n() + 1 || gamma.p != delta.p {
        return Err(Error::ShapeMismatch("multicompositions not on adjacent levels".into()));
    }
    let j = delta.j_word();
    match delta.step_to(gamma) {
        None => Ok(AlgebraElement::zero(crate::lie::Weight::from_word(&j))),
        Some((r, i)) => {
            let (t, s) = delta.psi_cycle(r, i)?;
            Ok(AlgebraElement::psi_word(&crate::symgroup::cycle_word(t, s), &j)?.scale(delta.sgn(r, i)))
        }
    }
}

/// The resolution `P(alpha^m)` with levels `Lambda(n)` in lexicographic order.
pub fn build_p_power(p: Params) -> Result<ProjComplex> {
    let levels: Vec<Vec<Lambda>> = (0..=p.top_level()).map(|n| p.lambdas(n)).collect();
    let weight = p.root().weight().scaled(p.m as u32);
    let mut boundaries = Vec::new();
    for n in 0..p.top_level() {
        let mut d = Matrix::zero(levels[n + 1].len(), levels[n].len(), weight.clone());
        for (r, mu) in levels[n + 1].iter().enumerate() {
            for (c, lam) in levels[n].iter().enumerate() {
                if lam.step_to(mu).is_some() {
                    d.set(r, c, boundary_d(mu, lam)?);
                }
            }
        }
        boundaries.push(d);
    }
    let levels = levels.iter().map(|l| l.iter().map(summand_of).collect()).collect();
    Ok(ProjComplex { weight, levels, boundaries })
}

/// The complex `Q` with levels `bold Lambda(n)` in lexicographic order.
pub fn build_q(p: Params) -> Result<ProjComplex> {
    let levels: Vec<Vec<MultiComp>> = (0..=p.top_level()).map(|n| p.multicomps(n)).collect();
    let weight = p.root().weight().scaled(p.m as u32);
    let mut boundaries = Vec::new();
    for n in 0..p.top_level() {
        let mut d = Matrix::zero(levels[n + 1].len(), levels[n].len(), weight.clone());
        for (r, gamma) in levels[n + 1].iter().enumerate() {
            for (c, delta) in levels[n].iter().enumerate() {
                if delta.step_to(gamma).is_some() {
                    d.set(r, c, boundary_c(gamma, delta)?);
                }
            }
        }
        boundaries.push(d);
    }
    let levels = levels.iter().map(|l| l.iter().map(summand_of_multi).collect()).collect();
    Ok(ProjComplex { weight, levels, boundaries })
}

/// `P(pi)`: the product of the semicuspidal resolutions of the parts.
pub fn build_p_pi(pi: &KostantPartition) -> Result<ProjComplex> {
    let mut acc: Option<ProjComplex> = None;
    for (root, m) in pi.parts() {
        let c = build_p_power(Params::from_root(root, *m)?)?;
        acc = Some(match acc {
            None => c,
            Some(a) => a.product(&c),
        });
    }
    acc.ok_or_else(|| Error::InvalidPartition("empty Kostant partition".into()))
}

/// `P(alpha^m)` for a root given as `[lo, hi]`.
pub fn build_p_root(root: &Root, m: usize) -> Result<ProjComplex> {
    build_p_power(Params::from_root(root, m)?)
}

/// `psi_{w(delta)} 1_{j^delta}` along the reduced word from the `x`-factorization.
pub fn psi_w_delta(delta: &MultiComp) -> AlgebraElement {
    AlgebraElement::word_product(&delta.w_word(), &delta.j_word())
}

/// `psi_{u(delta)} 1_{j^lambda}` along the reduced word from the `z`-factorization.
pub fn psi_u_delta(delta: &MultiComp) -> AlgebraElement {
    AlgebraElement::word_product(&delta.u_word(), &delta.lambda().j_word())
}

/// `y^lambda 1_{j^lambda}`.
pub fn y_lambda(lam: &Lambda) -> AlgebraElement {
    AlgebraElement::dots(&lam.y_exponents(), &lam.j_word())
}

/// `e_lambda psi_{w_0^lambda} 1_{j^lambda}`.
fn e_w0(lam: &Lambda) -> Result<AlgebraElement> {
    e_lambda(lam).multiply(&AlgebraElement::psi_perm(&lam.w0(), &lam.j_word()))
}

/// `f^{lambda,delta} = sigma_delta e_lambda psi_{w_0^lambda} psi_{w(delta)} e_delta`, zero unless `lambda = lambda^delta`.
pub fn f_entry(lam: &Lambda, delta: &MultiComp) -> Result<AlgebraElement> {
    if delta.lambda() != *lam {
        return Ok(AlgebraElement::zero(lam.i_word().weight()));
    }
    Ok(e_w0(lam)?.multiply(&psi_w_delta(delta))?.scale(delta.sigma()))
}

/// `g^{delta,lambda} = tau_delta e_delta psi_{u(delta)} y^lambda e_lambda`, zero unless `lambda = lambda^delta`.
pub fn g_entry(delta: &MultiComp, lam: &Lambda) -> Result<AlgebraElement> {
    if delta.lambda() != *lam {
        return Ok(AlgebraElement::zero(lam.i_word().weight()));
    }
    psi_u_delta(delta).multiply(&y_lambda(lam))?.multiply(&e_lambda(lam)).map(|x| x.scale(delta.tau()))
}

/// `F_n`: rows `Lambda(n)`, columns `bold Lambda(n)`.
pub fn f_matrix(p: Params, n: usize) -> Result<Matrix> {
    let (lams, deltas) = (p.lambdas(n), p.multicomps(n));
    let mut f = Matrix::zero(lams.len(), deltas.len(), p.root().weight().scaled(p.m as u32));
    for (r, lam) in lams.iter().enumerate() {
        for (c, delta) in deltas.iter().enumerate() {
            if delta.lambda() == *lam {
                f.set(r, c, f_entry(lam, delta)?);
            }
        }
    }
    Ok(f)
}

/// `G_n`: rows `bold Lambda(n)`, columns `Lambda(n)`.
pub fn g_matrix(p: Params, n: usize) -> Result<Matrix> {
    let (lams, deltas) = (p.lambdas(n), p.multicomps(n));
    let mut g = Matrix::zero(deltas.len(), lams.len(), p.root().weight().scaled(p.m as u32));
    for (r, delta) in deltas.iter().enumerate() {
        for (c, lam) in lams.iter().enumerate() {
            if delta.lambda() == *lam {
                g.set(r, c, g_entry(delta, lam)?);
            }
        }
    }
    Ok(g)
}

/// All `F_n` and `G_n`.
pub fn chain_maps(p: Params) -> Result<(Vec<Matrix>, Vec<Matrix>)> {
    let f = (0..=p.top_level()).map(|n| f_matrix(p, n)).collect::<Result<_>>()?;
    let g = (0..=p.top_level()).map(|n| g_matrix(p, n)).collect::<Result<_>>()?;
    Ok((f, g))
}
