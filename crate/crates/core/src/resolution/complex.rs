//! Complexes of graded projective modules `q^s R e` and matrices of algebra elements.
//!
//! Homomorphisms act by right multiplication: a map `sum_x q^{s_x} R e_x -> sum_y q^{s_y} R e_y`
//! is a matrix with entries `e_x A e_y`, rows indexed by the source and columns by the target.
//! So composing `f` then `g` is the matrix product `F G`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{divided_mono, AlgebraElement, Degree, Mono};
use crate::error::{Error, Result};
use crate::lie::{DividedPowerWord, Weight};

/// A summand `q^shift R e_idem`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub shift: i32,
    pub idem: DividedPowerWord,
}

impl Summand {
    pub fn new(shift: i32, idem: DividedPowerWord) -> Self {
        Summand { shift, idem }
    }

    /// The idempotent `e` as an algebra element.
    pub fn element(&self) -> AlgebraElement {
        AlgebraElement::from_mono(self.mono())
    }

    pub fn mono(&self) -> Mono {
        divided_mono(&self.idem)
    }
}

/// A sparse matrix over `R_theta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub weight: Weight,
    pub entries: BTreeMap<(usize, usize), AlgebraElement>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, weight: Weight) -> Self {
        Matrix { rows, cols, weight, entries: BTreeMap::new() }
    }

    pub fn identity(summands: &[Summand], weight: Weight) -> Self {
        let mut m = Matrix::zero(summands.len(), summands.len(), weight);
        for (k, s) in summands.iter().enumerate() {
            m.set(k, k, s.element());
        }
        m
    }

    pub fn set(&mut self, r: usize, c: usize, x: AlgebraElement) {
        if x.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), x);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&AlgebraElement> {
        self.entries.get(&(r, c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiply(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, &AlgebraElement)>> = BTreeMap::new();
        for (&(r, c), x) in &other.entries {
            by_row.entry(r).or_default().push((c, x));
        }
        let mut acc: BTreeMap<(usize, usize), AlgebraElement> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    let p = a.multiply(b)?;
                    match acc.get_mut(&(i, j)) {
                        Some(e) => e.add_assign_scaled(&p, 1),
                        None => {
                            acc.insert((i, j), p);
                        }
                    }
                }
            }
        }
        acc.retain(|_, x| !x.is_zero());
        Ok(Matrix { rows: self.rows, cols: other.cols, weight: self.weight.clone(), entries: acc })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch("matrix difference".into()));
        }
        let mut out = self.clone();
        for (&(r, c), x) in &other.entries {
            let mut e = out.entries.remove(&(r, c)).unwrap_or_else(|| AlgebraElement::zero(self.weight.clone()));
            e.add_assign_scaled(x, -1);
            out.set(r, c, e);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|(&(r, c), x)| serde_json::json!({"row": r, "col": c, "element": x.to_json()}))
                .collect(),
        )
    }
}

/// A bounded complex `P_N -> ... -> P_0`; `boundaries[n]` is `d_n: P_{n+1} -> P_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjComplex {
    pub weight: Weight,
    pub levels: Vec<Vec<Summand>>,
    pub boundaries: Vec<Matrix>,
}

impl ProjComplex {
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn top_level(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    /// Total number of summands.
    pub fn rank(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Graded rank `sum_n (-1)^n sum q^{s}` as a map from exponent to coefficient.
    pub fn euler_shifts(&self) -> BTreeMap<i32, i64> {
        let mut out = BTreeMap::new();
        for (n, level) in self.levels.iter().enumerate() {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            for s in level {
                *out.entry(s.shift).or_insert(0) += sign;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Checks that every entry lies in `e_row R e_col` with degree `shift_row - shift_col`.
    pub fn check_entries(&self) -> Result<()> {
        for (n, d) in self.boundaries.iter().enumerate() {
            check_matrix(d, &self.levels[n + 1], &self.levels[n])?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "weight": self.weight,
            "levels": self.levels,
            "boundaries": self.boundaries.iter().map(Matrix::to_json).collect::<Vec<_>>(),
        })
    }

    /// Tensor product `self ∘ other` with `d(x∘y) = x∘dy + (-1)^q dx∘y`, `q` the level of `y`.
    ///
    /// Level `n` lists pairs `(x, y)` with `x` at level `p`, `y` at level `n - p`, by `p`, then `x`, then `y`.
    pub fn product(&self, other: &ProjComplex) -> ProjComplex {
        let weight = self.weight.plus(&other.weight);
        let top = self.top_level() + other.top_level();
        let mut index: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); top + 1];
        let mut levels: Vec<Vec<Summand>> = vec![Vec::new(); top + 1];
        for n in 0..=top {
            for p in 0..=n.min(self.top_level()) {
                let q = n - p;
                if q > other.top_level() {
                    continue;
                }
                for (x, sx) in self.levels[p].iter().enumerate() {
                    for (y, sy) in other.levels[q].iter().enumerate() {
                        index[n].push((p, x, y));
                        levels[n].push(Summand::new(sx.shift + sy.shift, sx.idem.concat(&sy.idem)));
                    }
                }
            }
        }
        let pos = |n: usize, key: (usize, usize, usize)| index[n].iter().position(|&k| k == key).expect("summand");
        let mut boundaries = Vec::new();
        for n in 0..top {
            let mut d = Matrix::zero(levels[n + 1].len(), levels[n].len(), weight.clone());
            for (row, &(p, x, y)) in index[n + 1].iter().enumerate() {
                let q = n + 1 - p;
                if q >= 1 {
                    let ex = self.levels[p][x].element();
                    for (&(r, c), e) in &other.boundaries[q - 1].entries {
                        if r == y {
                            d.set(row, pos(n, (p, x, c)), ex.concat(e));
                        }
                    }
                }
                if p >= 1 {
                    let ey = other.levels[q][y].element();
                    let sign = if q % 2 == 0 { 1 } else { -1 };
                    for (&(r, c), e) in &self.boundaries[p - 1].entries {
                        if r == x {
                            d.set(row, pos(n, (p - 1, c, y)), e.concat(&ey).scale(sign));
                        }
                    }
                }
            }
            boundaries.push(d);
        }
        ProjComplex { weight, levels, boundaries }
    }
}

/// Entries of `m` lie in `e_row R e_col` and are homogeneous of degree `shift_row - shift_col`.
pub fn check_matrix(m: &Matrix, rows: &[Summand], cols: &[Summand]) -> Result<()> {
    for (&(r, c), x) in &m.entries {
        let (er, ec) = (rows[r].element(), cols[c].element());
        let sandwiched = er.multiply(x)?.multiply(&ec)?;
        if sandwiched != *x {
            return Err(Error::InvalidData(format!("entry ({r},{c}) is not in e R e'")));
        }
        let want = rows[r].shift - cols[c].shift;
        match x.degree() {
            Degree::Homogeneous(g) if g == want => {}
            other => {
                return Err(Error::InvalidData(format!("entry ({r},{c}) has degree {other:?}, expected {want}")));
            }
        }
    }
    Ok(())
}
