//! Worked examples for `alpha_1 + alpha_2` with `m = 1, 2`, built by hand from the
//! defining relations and compared against the constructed complexes.

use klr::algebra::{divided_mono, AlgebraElement};
use klr::lie::{DividedPowerWord, Root};
use klr::resolution::*;
use klr::symgroup::Perm;
use klr::verify::check_q_is_power;

fn dpw(parts: &[(i32, usize)]) -> DividedPowerWord {
    DividedPowerWord::new(parts.to_vec())
}

fn e(parts: &[(i32, usize)]) -> AlgebraElement {
    AlgebraElement::from_mono(divided_mono(&dpw(parts)))
}

fn psi(word1: &[u8], idem: &[i32]) -> AlgebraElement {
    let w: Vec<u8> = word1.iter().map(|g| g - 1).collect();
    AlgebraElement::psi_word(&w, idem).unwrap()
}

fn perm1(images: &[usize], idem: &[i32]) -> AlgebraElement {
    AlgebraElement::psi_perm(&Perm::from_images1(images).unwrap(), idem)
}

fn p112() -> Params {
    Params::new(1, 1, 2).unwrap()
}

#[test]
fn semicuspidal_resolution_for_m_two() {
    let c = build_p_root(&Root::new(1, 2).unwrap(), 2).unwrap();
    assert_eq!(c.levels.len(), 3);
    let shifts: Vec<i32> = c.levels.iter().map(|l| l[0].shift).collect();
    assert_eq!(shifts, vec![-2, 0, 0]);
    assert_eq!(c.levels[0][0].idem, dpw(&[(1, 2), (2, 2)]));
    assert_eq!(c.levels[1][0].idem, dpw(&[(1, 1), (2, 2), (1, 1)]));
    assert_eq!(c.levels[2][0].idem, dpw(&[(2, 2), (1, 2)]));

    let e0 = e(&[(1, 2), (2, 2)]);
    let e1 = e(&[(1, 1), (2, 2), (1, 1)]);
    let e2 = e(&[(2, 2), (1, 2)]);
    let d0 = &(&e1 * &psi(&[3, 2], &[1, 1, 2, 2])) * &e0;
    let d1 = &(&e2 * &psi(&[3, 2, 1], &[1, 2, 2, 1])) * &e1;
    assert!(!d0.is_zero() && !d1.is_zero());
    assert_eq!(c.boundaries[0].get(0, 0), Some(&d0));
    assert_eq!(c.boundaries[1].get(0, 0), Some(&d1));
    assert_eq!(c.boundaries[0].entries.len(), 1);
    assert_eq!(c.boundaries[1].entries.len(), 1);
    c.check_entries().unwrap();
}

#[test]
fn cycles_psi_lambda_i() {
    let p = p112();
    let l0 = Lambda::new(p, vec![0]).unwrap();
    let l1 = Lambda::new(p, vec![1]).unwrap();
    assert_eq!(psi_lambda_i(&l0, 1).unwrap(), psi(&[3, 2], &[1, 1, 2, 2]));
    assert_eq!(psi_lambda_i(&l1, 1).unwrap(), psi(&[3, 2, 1], &[1, 2, 2, 1]));
    assert!(psi_lambda_i(&Lambda::new(p, vec![2]).unwrap(), 1).is_err());
    // intertwining: psi 1_{j^lambda} = 1_{j^{lambda+e}} psi
    let x = psi_lambda_i(&l0, 1).unwrap();
    assert_eq!(x.left_idem(&l1.j_word()), x);
    assert!(boundary_d(&l0, &l1).is_err());
}

#[test]
fn semicuspidal_resolution_for_m_one() {
    let c = build_p_root(&Root::new(1, 2).unwrap(), 1).unwrap();
    assert_eq!(c.levels.len(), 2);
    assert_eq!(c.levels[0][0], Summand::new(0, dpw(&[(1, 1), (2, 1)])));
    assert_eq!(c.levels[1][0], Summand::new(1, dpw(&[(2, 1), (1, 1)])));
    assert_eq!(c.boundaries[0].get(0, 0), Some(&psi(&[1], &[1, 2])));
}

#[test]
fn complex_q_for_m_two() {
    let q = build_q(p112()).unwrap();
    let shifts: Vec<Vec<i32>> = q.levels.iter().map(|l| l.iter().map(|s| s.shift).collect()).collect();
    assert_eq!(shifts, vec![vec![1], vec![2, 2], vec![3]]);
    let words: Vec<Vec<i32>> = q.levels[1].iter().map(|s| s.idem.expand()).collect();
    assert_eq!(words, vec![vec![1, 2, 2, 1], vec![2, 1, 1, 2]]);
    let (i1221, i2112) = (0, 1);
    // c_1: row 2121, entries -psi_3 into 2112 and psi_1 into 1221
    assert_eq!(q.boundaries[1].get(0, i2112), Some(&psi(&[3], &[2, 1, 1, 2]).scale(-1)));
    assert_eq!(q.boundaries[1].get(0, i1221), Some(&psi(&[1], &[1, 2, 2, 1])));
    // c_0: column into 1212
    assert_eq!(q.boundaries[0].get(i2112, 0), Some(&psi(&[1], &[1, 2, 1, 2])));
    assert_eq!(q.boundaries[0].get(i1221, 0), Some(&psi(&[3], &[1, 2, 1, 2])));
    assert_eq!(psi(&[1], &[1, 2, 1, 2]).left_idem(&[2, 1, 1, 2]), psi(&[1], &[1, 2, 1, 2]));
}

#[test]
fn chain_map_entries_for_m_two() {
    let p = p112();
    let (f, g) = chain_maps(p).unwrap();
    let e0 = e(&[(1, 2), (2, 2)]);
    let e1 = e(&[(1, 1), (2, 2), (1, 1)]);
    // F_0: e_0 psi_w 1_{1212}, w sending 1,2,3,4 to 2,4,1,3
    assert_eq!(f[0].get(0, 0), Some(&(&e0 * &perm1(&[2, 4, 1, 3], &[1, 2, 1, 2]))));
    // G_0: psi_2 y_4 e_0
    let g0 = &(&psi(&[2], &[1, 1, 2, 2]) * &AlgebraElement::dot(3, &[1, 1, 2, 2])) * &e0;
    assert_eq!(g[0].get(0, 0), Some(&g0));
    // G_1: rows 1221 and 2112
    let y3 = AlgebraElement::dot(2, &[1, 2, 2, 1]);
    assert_eq!(g[1].get(0, 0), Some(&(&y3 * &e1)));
    let row2 = &(&perm1(&[3, 1, 4, 2], &[1, 2, 2, 1]) * &y3) * &e1;
    assert_eq!(g[1].get(1, 0), Some(&row2));
    // F_1: e_1 psi_{w_0} and e_1 psi_{w_0} psi_w
    assert_eq!(f[1].get(0, 0), Some(&(&e1 * &perm1(&[1, 3, 2, 4], &[1, 2, 2, 1]))));
    let f1b = &(&e1 * &perm1(&[1, 3, 2, 4], &[1, 2, 2, 1])) * &perm1(&[2, 4, 1, 3], &[2, 1, 1, 2]);
    assert_eq!(f[1].get(0, 1), Some(&f1b));
    // G_2 carries the sign tau_(2) = -1
    let e2 = e(&[(2, 2), (1, 2)]);
    let y = AlgebraElement::dot(1, &[2, 2, 1, 1]);
    let g2 = &(&psi(&[2], &[2, 2, 1, 1]) * &y) * &e2;
    assert_eq!(g[2].get(0, 0), Some(&g2.scale(-1)));
}

#[test]
fn q_is_the_shifted_power_up_to_signs() {
    for (a, b, m) in [(1, 1, 2), (1, 2, 2), (1, 1, 3), (1, 2, 3), (1, 3, 2), (2, 1, 3)] {
        let w = check_q_is_power(Params::new(a, b, m).unwrap()).unwrap();
        assert!(w.is_empty(), "{a} {b} {m}: {w:?}");
    }
}

#[test]
fn product_with_single_level_complex_relabels() {
    let c = build_p_root(&Root::new(1, 2).unwrap(), 1).unwrap();
    let s = build_p_root(&Root::new(3, 3).unwrap(), 1).unwrap();
    let cs = c.product(&s);
    assert_eq!(cs.levels.len(), 2);
    for (n, level) in cs.levels.iter().enumerate() {
        assert_eq!(level[0].shift, c.levels[n][0].shift);
        assert_eq!(level[0].idem, c.levels[n][0].idem.concat(&dpw(&[(3, 1)])));
    }
    let want = psi(&[1], &[1, 2]).concat(&AlgebraElement::idempotent(&[3]));
    assert_eq!(cs.boundaries[0].get(0, 0), Some(&want));
}

#[test]
fn koszul_sign_on_left_differential() {
    let c = build_p_root(&Root::new(1, 2).unwrap(), 1).unwrap();
    let d = build_p_root(&Root::new(3, 4).unwrap(), 1).unwrap();
    let cd = c.product(&d);
    // level 2 is the single summand x1 ∘ y1; its map to x0 ∘ y1 carries (-1)^1
    assert_eq!(cd.levels[2].len(), 1);
    let idx = cd.levels[1].iter().position(|s| s.idem.expand() == vec![1, 2, 4, 3]).unwrap();
    let want = psi(&[1], &[1, 2]).concat(&AlgebraElement::idempotent(&[4, 3])).scale(-1);
    assert_eq!(cd.boundaries[1].get(0, idx), Some(&want));
    let idx = cd.levels[1].iter().position(|s| s.idem.expand() == vec![2, 1, 3, 4]).unwrap();
    let want = AlgebraElement::idempotent(&[2, 1]).concat(&psi(&[1], &[3, 4]));
    assert_eq!(cd.boundaries[1].get(0, idx), Some(&want));
    assert!(klr::verify::check_d_squared(&cd).unwrap().is_empty());
}
