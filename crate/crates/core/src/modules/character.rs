//! Graded characters truncated at a cutoff degree, quantum integers, and the quantum
//! shuffle product.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::lie::{cartan, Vertex};
use crate::modules::induced::InducedModule;
use crate::modules::standard::StandardModule;
use crate::symgroup::choose;

/// A Laurent polynomial in `q`, as degree -> coefficient without zeros.
pub type Laurent = BTreeMap<i32, i64>;

/// `[n] = q^{n-1} + q^{n-3} + ... + q^{1-n}`.
pub fn quantum_integer(n: usize) -> Laurent {
    (0..n).map(|k| (n as i32 - 1 - 2 * k as i32, 1)).collect()
}

/// `[n]! = [1][2]...[n]`.
pub fn quantum_factorial(n: usize) -> Laurent {
    (1..=n).fold(Laurent::from([(0, 1)]), |acc, k| laurent_mul(&acc, &quantum_integer(k)))
}

pub fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (&i, &x) in a {
        for (&j, &y) in b {
            *out.entry(i + j).or_insert(0) += x * y;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Per-word graded dimensions, known exactly in degrees `<= cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    cutoff: i32,
    coeffs: BTreeMap<Vec<Vertex>, Laurent>,
}

#[derive(Serialize)]
struct SerWord<'a> {
    word: &'a [Vertex],
    coeffs: &'a Laurent,
}

impl Character {
    pub fn new(cutoff: i32) -> Self {
        Character { cutoff, coeffs: BTreeMap::new() }
    }

    pub fn cutoff(&self) -> i32 {
        self.cutoff
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<Vertex>, Laurent> {
        &self.coeffs
    }

    /// Adds `c q^deg [word]`; terms above the cutoff are dropped.
    pub fn add(&mut self, word: &[Vertex], deg: i32, c: i64) {
        if c == 0 || deg > self.cutoff {
            return;
        }
        let poly = self.coeffs.entry(word.to_vec()).or_default();
        let e = poly.entry(deg).or_insert(0);
        *e += c;
        if *e == 0 {
            poly.remove(&deg);
            if poly.is_empty() {
                self.coeffs.remove(word);
            }
        }
    }

    pub fn get(&self, word: &[Vertex], deg: i32) -> i64 {
        self.coeffs.get(word).and_then(|p| p.get(&deg)).copied().unwrap_or(0)
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<i32> {
        self.coeffs.values().filter_map(|p| p.keys().next().copied()).min()
    }

    pub fn truncate(&self, cutoff: i32) -> Character {
        let mut out = Character::new(cutoff.min(self.cutoff));
        for (w, p) in &self.coeffs {
            for (&d, &c) in p {
                out.add(w, d, c);
            }
        }
        out
    }

    /// Multiplication by a Laurent polynomial.
    pub fn times(&self, poly: &Laurent) -> Character {
        let lo = poly.keys().next().copied().unwrap_or(0);
        let mut out = Character::new(self.cutoff + lo);
        for (w, p) in &self.coeffs {
            for (d, c) in laurent_mul(p, poly) {
                out.add(w, d, c);
            }
        }
        out
    }

    /// The quantum shuffle product, the character of the induction product.
    pub fn shuffle(&self, other: &Character) -> Character {
        let lo1 = self.min_degree().unwrap_or(0);
        let lo2 = other.min_degree().unwrap_or(0);
        let smin = self
            .coeffs
            .keys()
            .flat_map(|u| other.coeffs.keys().map(move |v| min_shuffle_degree(u, v)))
            .min()
            .unwrap_or(0);
        let mut out = Character::new((self.cutoff + lo2).min(other.cutoff + lo1) + smin);
        for (u, pu) in &self.coeffs {
            for (v, pv) in &other.coeffs {
                let prod = laurent_mul(pu, pv);
                for_each_shuffle(u, v, &mut |word, s| {
                    for (&d, &c) in &prod {
                        out.add(word, d + s, c);
                    }
                });
            }
        }
        out
    }

    /// Degrees `<= min cutoff` where the two characters differ, as `(word, degree, mine, theirs)`.
    pub fn differences(&self, other: &Character) -> Vec<(Vec<Vertex>, i32, i64, i64)> {
        let c = self.cutoff.min(other.cutoff);
        let (a, b) = (self.truncate(c), other.truncate(c));
        let mut out = Vec::new();
        let words: std::collections::BTreeSet<&Vec<Vertex>> = a.coeffs.keys().chain(b.coeffs.keys()).collect();
        for w in words {
            let degs: std::collections::BTreeSet<i32> = a
                .coeffs
                .get(w)
                .into_iter()
                .chain(b.coeffs.get(w))
                .flat_map(|p| p.keys().copied())
                .collect();
            for d in degs {
                let (x, y) = (a.get(w, d), b.get(w, d));
                if x != y {
                    out.push((w.clone(), d, x, y));
                }
            }
        }
        out
    }

    pub fn of_induced(m: &InducedModule, cutoff: i32) -> Character {
        let mut out = Character::new(cutoff);
        let lo = m.min_degree();
        for j in m.words() {
            for t in lo..=cutoff {
                out.add(j, t, m.dim(j, t) as i64);
            }
        }
        out
    }

    pub fn of_standard(m: &StandardModule, cutoff: i32) -> Character {
        let mut out = Character::new(cutoff);
        let lo = m.min_degree();
        for j in m.words() {
            for t in lo..=cutoff {
                out.add(&j, t, m.piece(&j, t).dim() as i64);
            }
        }
        out
    }

    /// `[{word, coeffs: {degree: dim}}]`.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<SerWord> = self.coeffs.iter().map(|(w, p)| SerWord { word: w, coeffs: p }).collect();
        serde_json::json!({ "cutoff": self.cutoff, "words": rows })
    }
}

fn shuffle_degree(u: &[Vertex], v: &[Vertex], pos_u: &[usize]) -> i32 {
    // a letter of u placed after a letter of v crosses it
    let mut deg = 0;
    let total = u.len() + v.len();
    let mut vi = 0;
    let mut seen_v: Vec<Vertex> = Vec::with_capacity(v.len());
    let mut ui = 0;
    for p in 0..total {
        if ui < pos_u.len() && pos_u[ui] == p {
            deg -= seen_v.iter().map(|&j| cartan(u[ui], j)).sum::<i32>();
            ui += 1;
        } else {
            seen_v.push(v[vi]);
            vi += 1;
        }
    }
    deg
}

fn for_each_shuffle(u: &[Vertex], v: &[Vertex], f: &mut dyn FnMut(&[Vertex], i32)) {
    let total = u.len() + v.len();
    let items: Vec<usize> = (0..total).collect();
    choose(&items, u.len(), &mut |pos: &[usize]| {
        let mut word = Vec::with_capacity(total);
        let (mut ui, mut vi) = (0, 0);
        for p in 0..total {
            if ui < pos.len() && pos[ui] == p {
                word.push(u[ui]);
                ui += 1;
            } else {
                word.push(v[vi]);
                vi += 1;
            }
        }
        f(&word, shuffle_degree(u, v, pos));
    });
}

fn min_shuffle_degree(u: &[Vertex], v: &[Vertex]) -> i32 {
    let mut best = i32::MAX;
    for_each_shuffle(u, v, &mut |_, s| best = best.min(s));
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_numbers() {
        assert_eq!(quantum_integer(3), Laurent::from([(-2, 1), (0, 1), (2, 1)]));
        assert_eq!(quantum_factorial(2), Laurent::from([(-1, 1), (1, 1)]));
        let f3 = quantum_factorial(3);
        assert_eq!(f3.values().sum::<i64>(), 6);
        assert_eq!(f3.get(&-3), Some(&1));
    }

    #[test]
    fn shuffle_of_two_letters() {
        let mut a = Character::new(4);
        a.add(&[1], 0, 1);
        let mut b = Character::new(4);
        b.add(&[2], 0, 1);
        let s = a.shuffle(&b);
        assert_eq!(s.get(&[1, 2], 0), 1);
        assert_eq!(s.get(&[2, 1], 1), 1);
        let s = a.shuffle(&a);
        assert_eq!(s.get(&[1, 1], 0), 1);
        assert_eq!(s.get(&[1, 1], -2), 1);
    }
}
