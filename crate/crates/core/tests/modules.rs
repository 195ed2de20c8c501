//! Standard modules: action laws, the nil-Hecke idempotent, characters against
//! enumeration and shuffle oracles.

use klr::algebra::AlgebraElement;
use klr::lie::{cartan, KostantPartition, Root, Vertex};
use klr::modules::*;
use klr::symgroup::all_perms;

fn root(lo: i32, hi: i32) -> Root {
    Root::new(lo, hi).unwrap()
}

/// Generators of `R_theta` acting nontrivially on words of `m`.
fn generators(words: &[Vec<Vertex>]) -> Vec<AlgebraElement> {
    let mut out = Vec::new();
    for j in words {
        for t in 0..j.len() {
            out.push(AlgebraElement::dot(t, j));
            if t + 1 < j.len() {
                out.push(AlgebraElement::psi_word(&[t as u8], j).unwrap());
            }
        }
    }
    out
}

fn basis_vectors(m: &InducedModule, max_deg: i32) -> Vec<Vector> {
    let mut out = Vec::new();
    for j in m.words() {
        for t in m.min_degree()..=max_deg {
            for b in m.basis(j, t) {
                out.push(Vector::from([(b, 1)]));
            }
        }
    }
    out
}

#[test]
fn cuspidal_character() {
    let m = StandardModule::delta_root(root(1, 2));
    let ch = Character::of_standard(&m, 8);
    for t in 0..=8 {
        assert_eq!(ch.get(&[1, 2], t), if t % 2 == 0 { 1 } else { 0 });
        assert_eq!(ch.get(&[2, 1], t), 0);
    }
    // psi kills v x^k, every dot acts as x
    let ind = m.induced();
    let v = ind.generator();
    let x = ind.right_x(&v, 0);
    for k in 0..3 {
        let mut vk = v.clone();
        for _ in 0..k {
            vk = ind.right_x(&vk, 0);
        }
        assert!(m.act(&AlgebraElement::psi_word(&[0], &[1, 2]).unwrap(), &vk).is_empty());
        assert!(m.act(&AlgebraElement::idempotent(&[2, 1]), &vk).is_empty());
        let _ = k;
    }
    assert_eq!(m.act(&AlgebraElement::dot(0, &[1, 2]), &v), x);
    assert_eq!(m.act(&AlgebraElement::dot(1, &[1, 2]), &v), x);
}

#[test]
fn action_is_associative() {
    for roots in [vec![root(1, 2), root(1, 2)], vec![root(2, 2), root(1, 2)], vec![root(1, 2), root(2, 3)]] {
        let m = InducedModule::new(&roots);
        let words: Vec<Vec<Vertex>> = m.words().cloned().collect();
        let gens = generators(&words);
        let vs = basis_vectors(&m, m.min_degree() + 3);
        for a in &gens {
            for b in &gens {
                let Ok(ab) = a.multiply(b) else { continue };
                for v in &vs {
                    assert_eq!(m.act(&ab, v), m.act(a, &m.act(b, v)), "{roots:?} {a} {b} {v:?}");
                }
            }
        }
    }
}

#[test]
fn right_action_commutes_with_left_and_is_nil_hecke() {
    let m = InducedModule::new(&[root(1, 2), root(1, 2)]);
    let words: Vec<Vec<Vertex>> = m.words().cloned().collect();
    let gens = generators(&words);
    let vs = basis_vectors(&m, m.min_degree() + 4);
    for v in &vs {
        let t = m.right_tau(v, 0).unwrap();
        assert!(m.right_tau(&t, 0).unwrap().is_empty(), "tau^2 on {v:?}");
        for a in &gens {
            assert_eq!(m.act(a, &t), m.right_tau(&m.act(a, v), 0).unwrap());
            assert_eq!(m.act(a, &m.right_x(v, 1)), m.right_x(&m.act(a, v), 1));
        }
        // x_1 tau - tau x_2 is +-1
        let lhs = {
            let mut acc = m.right_tau(&m.right_x(v, 0), 0).unwrap();
            let other = m.right_x(&t, 1);
            for (b, c) in other {
                let e = acc.entry(b.clone()).or_insert(0);
                *e -= c;
                if *e == 0 {
                    acc.remove(&b);
                }
            }
            acc
        };
        assert!(lhs == *v || lhs == v.iter().map(|(b, c)| (b.clone(), -c)).collect::<Vector>(), "{v:?} -> {lhs:?}");
    }
    // v∘v tau = psi_z (v∘v), z the longest element of D^{(2,2)}
    let z = klr::symgroup::Perm::from_images1(&[3, 4, 1, 2]).unwrap();
    let img = m.act(&AlgebraElement::psi_perm(&z, &[1, 2, 1, 2]), &m.generator());
    assert_eq!(m.right_tau(&m.generator(), 0).unwrap(), img);
}

#[test]
fn nil_hecke_idempotent() {
    for (alpha, mult) in [(root(1, 2), 2), (root(1, 1), 3), (root(1, 2), 3)] {
        let s = StandardModule::delta_power(alpha, mult);
        for v in basis_vectors(s.induced(), s.induced().min_degree() + 4) {
            let e = s.apply_e(&v);
            assert_eq!(s.apply_e(&e), e);
        }
    }
}

#[test]
fn induced_character_matches_enumeration() {
    let m = InducedModule::new(&[root(1, 2), root(1, 2)]);
    let word = [1, 2, 1, 2];
    let ch = Character::of_induced(&m, 6);
    // w increasing on both blocks with w.word = target; degree from inverted pairs
    for target in [[1, 2, 1, 2], [1, 1, 2, 2], [2, 1, 1, 2]] {
        let mut want = [0i64; 16];
        for w in all_perms(4) {
            let im = w.images1();
            if im[0] > im[1] || im[2] > im[3] {
                continue;
            }
            let mut top = [0; 4];
            for p in 0..4 {
                top[im[p] - 1] = word[p];
            }
            if top != target {
                continue;
            }
            let mut deg = 0;
            for a in 0..4 {
                for b in a + 1..4 {
                    if im[a] > im[b] {
                        deg -= cartan(word[a], word[b]);
                    }
                }
            }
            // two free dot exponents
            for k in 0..=6 {
                let t = deg + 2 * k;
                if (-4..=6).contains(&t) {
                    want[(t + 4) as usize] += k as i64 + 1;
                }
            }
        }
        for t in -4..=6 {
            assert_eq!(ch.get(&target, t), want[(t + 4) as usize], "{target:?} degree {t}");
        }
    }
}

#[test]
fn power_character_is_quantum_factorial_multiple() {
    for (alpha, mult) in [(root(1, 2), 2), (root(1, 1), 2), (root(1, 1), 3), (root(2, 3), 2), (root(1, 3), 2)] {
        let cutoff = 8;
        let s = StandardModule::delta_power(alpha, mult);
        let full = Character::of_induced(s.induced(), cutoff);
        let std = Character::of_standard(&s, cutoff + 4);
        let diff = std.times(&quantum_factorial(mult)).differences(&full);
        assert!(diff.is_empty(), "{alpha} ^ {mult}: {diff:?}");
    }
}

#[test]
fn standard_character_is_shuffle_of_factors() {
    let cases = [
        vec![(root(2, 2), 1), (root(1, 1), 1)],
        vec![(root(1, 2), 1), (root(1, 1), 1)],
        vec![(root(2, 2), 1), (root(1, 2), 1)],
        vec![(root(2, 2), 2), (root(1, 1), 1)],
        vec![(root(1, 2), 1), (root(1, 1), 2)],
    ];
    for parts in cases {
        let pi = KostantPartition::new(parts.clone()).unwrap();
        let cutoff = 6;
        let m = StandardModule::delta_pi(&pi);
        let got = Character::of_standard(&m, cutoff);
        let mut want: Option<Character> = None;
        for &(r, k) in &parts {
            let c = Character::of_standard(&StandardModule::delta_power(r, k), cutoff + 8);
            want = Some(match want {
                None => c,
                Some(w) => w.shuffle(&c),
            });
        }
        let want = want.unwrap();
        assert!(want.cutoff() >= cutoff, "{pi}");
        let diff = got.differences(&want);
        assert!(diff.is_empty(), "{pi}: {diff:?}");
    }
}

#[test]
fn two_simple_roots_in_opposite_order() {
    let pi = KostantPartition::new(vec![(root(2, 2), 1), (root(1, 1), 1)]).unwrap();
    let ch = Character::of_standard(&StandardModule::delta_pi(&pi), 6);
    // 1_{21}: psi-free basis y^k v, 1_{12}: psi_1 y^k v in degree 1 + 2|k|
    for t in 0..=6 {
        let even = if t % 2 == 0 { t as i64 / 2 + 1 } else { 0 };
        let odd = if t % 2 == 1 { (t as i64 - 1) / 2 + 1 } else { 0 };
        assert_eq!(ch.get(&[2, 1], t), even);
        assert_eq!(ch.get(&[1, 2], t), odd);
    }
}

#[test]
fn standard_generator_is_fixed_by_e() {
    for (alpha, mult) in [(root(1, 2), 2), (root(1, 3), 2), (root(1, 2), 3)] {
        let s = StandardModule::delta_power(alpha, mult);
        let v = s.standard_generator().unwrap();
        assert!(!v.is_empty());
        assert_eq!(s.apply_e(&v), v);
    }
}
