//! The engine's left action of generators on normal monomials satisfies the
//! defining relations, and multiplication is associative.

use klr::algebra::{AlgebraElement, Mono};
use klr::lie::Vertex;
use klr::symgroup::all_perms;
use proptest::prelude::*;

fn psi(g: usize, top_right: &[Vertex]) -> AlgebraElement {
    AlgebraElement::psi_word(&[g as u8], top_right).unwrap()
}

fn top(x: &AlgebraElement) -> Vec<Vertex> {
    x.terms().keys().next().unwrap().top().to_vec()
}

fn swap(j: &[Vertex], g: usize) -> Vec<Vertex> {
    let mut v = j.to_vec();
    v.swap(g, g + 1);
    v
}

/// Left-multiplies `x` (all terms with left idempotent `j`) by `psi_g`.
fn lpsi(g: usize, j: &[Vertex], x: &AlgebraElement) -> AlgebraElement {
    &psi(g, j) * x
}

fn ldot(t: usize, j: &[Vertex], x: &AlgebraElement) -> AlgebraElement {
    &AlgebraElement::dot(t, j) * x
}

fn monomials(words: &[Vec<Vertex>], max_dots: u8) -> Vec<AlgebraElement> {
    let mut out = Vec::new();
    for word in words {
        let d = word.len();
        for w in all_perms(d) {
            let mut exps = vec![vec![]];
            for _ in 0..d {
                exps = exps
                    .into_iter()
                    .flat_map(|e: Vec<u8>| (0..=max_dots).map(move |k| [e.clone(), vec![k]].concat()))
                    .collect();
            }
            for y in exps.into_iter().filter(|e| e.iter().sum::<u8>() <= max_dots) {
                out.push(AlgebraElement::from_mono(Mono::new(w.clone(), &y, word)));
            }
        }
    }
    out
}

fn check_relations(x: &AlgebraElement) {
    let j = top(x);
    let d = j.len();
    let ident = |e: &AlgebraElement| e.clone();
    for g in 0..d - 1 {
        let sj = swap(&j, g);
        // quadratic
        let lhs = lpsi(g, &sj, &lpsi(g, &j, x));
        let rhs = if j[g] == j[g + 1] {
            AlgebraElement::zero(x.weight().clone())
        } else if (j[g] - j[g + 1]).abs() == 1 {
            let e = (j[g + 1] - j[g]) as i64;
            (&ldot(g, &j, x) - &ldot(g + 1, &j, x)).scale(e)
        } else {
            ident(x)
        };
        assert_eq!(lhs, rhs, "quadratic g={g} on {x}");
        // dot slides
        for t in 0..d {
            let st = if t == g { g + 1 } else if t == g + 1 { g } else { t };
            let a = lpsi(g, &j, &ldot(t, &j, x));
            let b = ldot(st, &sj, &lpsi(g, &j, x));
            let mut expect = AlgebraElement::zero(x.weight().clone());
            if j[g] == j[g + 1] {
                if t == g + 1 {
                    expect = x.clone();
                } else if t == g {
                    expect = x.scale(-1);
                }
            }
            assert_eq!(&a - &b, expect, "dot slide g={g} t={t} on {x}");
        }
        // distant commutation
        for h in g + 2..d - 1 {
            let a = lpsi(g, &swap(&j, h), &lpsi(h, &j, x));
            let b = lpsi(h, &swap(&j, g), &lpsi(g, &j, x));
            assert_eq!(a, b, "commutation {g},{h} on {x}");
        }
        // braid
        if g + 2 < d {
            let r = g;
            let j1 = swap(&j, r + 1);
            let j2 = swap(&j1, r);
            let a = lpsi(r + 1, &j2, &lpsi(r, &j1, &lpsi(r + 1, &j, x)));
            let k1 = swap(&j, r);
            let k2 = swap(&k1, r + 1);
            let b = lpsi(r, &k2, &lpsi(r + 1, &k1, &lpsi(r, &j, x)));
            let expect = if (j[r] - j[r + 1]).abs() == 1 && j[r] == j[r + 2] {
                x.scale((j[r + 1] - j[r]) as i64)
            } else {
                AlgebraElement::zero(x.weight().clone())
            };
            assert_eq!(&a - &b, expect, "braid r={r} on {x}");
        }
    }
    for t in 0..d {
        for u in 0..d {
            assert_eq!(ldot(t, &j, &ldot(u, &j, x)), ldot(u, &j, &ldot(t, &j, x)));
        }
    }
}

#[test]
fn relations_on_all_monomials_of_height_three() {
    let words: Vec<Vec<Vertex>> = vec![
        vec![1, 1, 1],
        vec![1, 1, 2],
        vec![1, 2, 1],
        vec![2, 1, 1],
        vec![1, 2, 3],
        vec![2, 1, 3],
        vec![1, 3, 2],
        vec![2, 3, 1],
        vec![1, 2, 2],
        vec![2, 1, 2],
        vec![1, 3, 1],
    ];
    for x in monomials(&words, 2) {
        check_relations(&x);
    }
}

#[test]
fn relations_on_monomials_of_height_four() {
    let words: Vec<Vec<Vertex>> = vec![
        vec![1, 2, 1, 2],
        vec![2, 1, 1, 2],
        vec![1, 1, 2, 2],
        vec![1, 2, 2, 1],
        vec![1, 2, 3, 2],
        vec![2, 1, 2, 3],
        vec![1, 1, 1, 2],
        vec![1, 1, 1, 1],
        vec![2, 1, 3, 2],
    ];
    for x in monomials(&words, 1) {
        check_relations(&x);
    }
}

fn arb_dense() -> impl Strategy<Value = AlgebraElement> {
    let words: Vec<Vec<Vertex>> = klr::lie::words_of(&klr::lie::Weight::from_word(&[1, 1, 2, 2]), 12).unwrap();
    let perms = all_perms(4);
    let n = words.len();
    prop::collection::vec((0..perms.len(), prop::collection::vec(0u8..2, 4), -2i64..3), n).prop_map(
        move |terms| {
            let mut acc = AlgebraElement::zero(klr::lie::Weight::from_word(&[1, 1, 2, 2]));
            for ((p, y, c), word) in terms.into_iter().zip(&words) {
                let m = Mono::new(perms[p].clone(), &y, word);
                acc.add_assign_scaled(&AlgebraElement::from_mono(m), c);
            }
            acc
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn multiplication_is_associative(a in arb_dense(), b in arb_dense(), c in arb_dense()) {
        let ab_c = &(&a * &b) * &c;
        let a_bc = &a * &(&b * &c);
        prop_assert_eq!(ab_c, a_bc);
    }
}
