//! `Ext^n(Delta(pi), Delta(sigma))` from the projective resolution of `Delta(pi)`, and a
//! direct computation of `Hom` from generators and relations as an independent oracle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::lie::{DividedPowerWord, KostantPartition};
use crate::linalg::{hnf_rows, rank, smith_invariants, Ring, SparseRow};
use crate::modules::induced::{add_scaled, Vector};
use crate::modules::standard::{coordinates, Piece, StandardModule};
use crate::resolution::build_p_pi;
use crate::resolution::complex::ProjComplex;

/// One nonzero entry of an Ext table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtRow {
    pub n: usize,
    pub degree: i32,
    pub rank: usize,
    pub torsion: Vec<u64>,
}

/// Nonzero `Ext^n` in internal degrees `<= cutoff`; everything not listed vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtReport {
    pub pi: String,
    pub sigma: String,
    pub ring: String,
    pub cutoff: i32,
    pub length: usize,
    pub rows: Vec<ExtRow>,
}

impl ExtReport {
    pub fn rank(&self, n: usize, degree: i32) -> usize {
        self.row(n, degree).map_or(0, |r| r.rank)
    }

    pub fn torsion(&self, n: usize, degree: i32) -> Vec<u64> {
        self.row(n, degree).map_or_else(Vec::new, |r| r.torsion.clone())
    }

    fn row(&self, n: usize, degree: i32) -> Option<&ExtRow> {
        self.rows.iter().find(|r| r.n == n && r.degree == degree)
    }

    /// The report restricted to degrees `<= cutoff`.
    pub fn truncate(&self, cutoff: i32) -> ExtReport {
        let rows = self.rows.iter().filter(|r| r.degree <= cutoff).cloned().collect();
        ExtReport { cutoff: cutoff.min(self.cutoff), rows, ..self.clone() }
    }
}

/// `Ext^n(Delta(pi), Delta(sigma))` over `ring` in internal degrees up to `cutoff`.
pub fn ext_compute(pi: &KostantPartition, sigma: &KostantPartition, cutoff: i32, ring: Ring) -> Result<ExtReport> {
    if pi.weight() != sigma.weight() {
        return Err(Error::WeightMismatch(format!("{pi} and {sigma} have different weights")));
    }
    let p = build_p_pi(pi)?;
    let m = StandardModule::delta_pi(sigma);
    let mut hom = HomComplex::new(&p, &m);
    let lo = p.levels.iter().flatten().map(|s| m.min_degree() - s.shift).min().unwrap_or(0);
    let mut rows = Vec::new();
    for d in lo..=cutoff {
        let dims: Vec<usize> = (0..p.len()).map(|n| hom.dim(n, d)).collect();
        let mats: Vec<Vec<Vec<BigInt>>> = (0..p.len().saturating_sub(1)).map(|n| hom.differential(n, d)).collect::<Result<_>>()?;
        let ranks: Vec<usize> = mats.iter().map(|a| matrix_rank(a, ring)).collect();
        for n in 0..p.len() {
            let out = if n < ranks.len() { ranks[n] } else { 0 };
            let inc = if n > 0 { ranks[n - 1] } else { 0 };
            let free = dims[n] - out - inc;
            let torsion = if ring == Ring::Z && n > 0 && inc > 0 {
                smith_invariants(&mats[n - 1])
                    .into_iter()
                    .filter(|x| !x.is_one())
                    .map(|x| x.to_u64().expect("torsion coefficient fits in u64"))
                    .collect()
            } else {
                Vec::new()
            };
            if free > 0 || !torsion.is_empty() {
                rows.push(ExtRow { n, degree: d, rank: free, torsion });
            }
        }
    }
    Ok(ExtReport {
        pi: pi.to_string(),
        sigma: sigma.to_string(),
        ring: ring.to_string(),
        cutoff,
        length: p.top_level(),
        rows,
    })
}

fn matrix_rank(a: &[Vec<BigInt>], ring: Ring) -> usize {
    let rows: Vec<SparseRow> = a
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(c, x)| (c, x.to_i64().expect("differential entry fits in i64")))
                .collect()
        })
        .collect();
    rank(&rows, ring)
}

/// `Hom(P_n, M)` in internal degree `d` is `sum_X (e_X M)_{s_X + d}`.
struct HomComplex<'a> {
    p: &'a ProjComplex,
    m: &'a StandardModule,
    pieces: BTreeMap<(DividedPowerWord, i32), Piece>,
}

impl<'a> HomComplex<'a> {
    fn new(p: &'a ProjComplex, m: &'a StandardModule) -> Self {
        HomComplex { p, m, pieces: BTreeMap::new() }
    }

    /// The lattice `(e M)_t` in the coordinates of `(1_word M)_t`.
    fn truncated(&mut self, idem: &DividedPowerWord, t: i32) -> &Piece {
        let key = (idem.clone(), t);
        if !self.pieces.contains_key(&key) {
            let word = idem.expand();
            let full = self.m.piece(&word, t);
            let e = AlgebraElement::from_mono(crate::algebra::divided_mono(idem));
            let gens: Vec<Vec<BigInt>> = full
                .vectors()
                .iter()
                .map(|v| {
                    let img = self.m.act(&e, v);
                    full.coords.iter().map(|c| BigInt::from(img.get(c).copied().unwrap_or(0))).collect()
                })
                .collect();
            let rows = hnf_rows(gens);
            self.pieces.insert(key.clone(), Piece { rows, ..full });
        }
        &self.pieces[&key]
    }

    fn dim(&mut self, n: usize, d: i32) -> usize {
        let level = self.p.levels[n].clone();
        level.iter().map(|s| self.truncated(&s.idem, s.shift + d).dim()).sum()
    }

    /// The matrix of `Hom(P_n, M) -> Hom(P_{n+1}, M)`, `(m_Y) -> (sum_Y d_XY m_Y)_X`.
    fn differential(&mut self, n: usize, d: i32) -> Result<Vec<Vec<BigInt>>> {
        let src = self.p.levels[n].clone();
        let tgt = self.p.levels[n + 1].clone();
        let tgt_pieces: Vec<Piece> = tgt.iter().map(|s| self.truncated(&s.idem, s.shift + d).clone()).collect();
        let offsets: Vec<usize> = tgt_pieces
            .iter()
            .scan(0, |acc, p| {
                let o = *acc;
                *acc += p.dim();
                Some(o)
            })
            .collect();
        let width: usize = tgt_pieces.iter().map(Piece::dim).sum();
        let bd = &self.p.boundaries[n];
        let mut out = Vec::new();
        for (y, sy) in src.iter().enumerate() {
            let vs = self.truncated(&sy.idem, sy.shift + d).vectors();
            for v in vs {
                let mut row = vec![BigInt::zero(); width];
                for (x, piece) in tgt_pieces.iter().enumerate() {
                    let Some(entry) = bd.get(x, y) else { continue };
                    let img = self.m.act(entry, &v);
                    if img.is_empty() {
                        continue;
                    }
                    let c = coordinates(piece, &img).ok_or_else(|| {
                        Error::InvalidData(format!("image of d_{n} ({x},{y}) leaves the truncated lattice"))
                    })?;
                    for (k, c) in c.into_iter().enumerate() {
                        row[offsets[x] + k] = c;
                    }
                }
                out.push(row);
            }
        }
        Ok(out)
    }
}

/// `dim_Q Hom(Delta(pi), Delta(sigma))_d` computed from the presentation of `Delta(pi)`:
/// vectors `x` of weight `i_pi` killed by crossings and dot differences inside each
/// cuspidal block and fixed by the element `a` with `v E = a v`.
pub fn hom_direct(pi: &KostantPartition, sigma: &KostantPartition, d: i32) -> Result<usize> {
    Ok(hom_direct_range(pi, sigma, d, d)?[0])
}

/// `hom_direct` for every degree in `lo..=hi`.
pub fn hom_direct_range(pi: &KostantPartition, sigma: &KostantPartition, lo: i32, hi: i32) -> Result<Vec<usize>> {
    if pi.weight() != sigma.weight() {
        return Err(Error::WeightMismatch(format!("{pi} and {sigma} have different weights")));
    }
    let src = StandardModule::delta_pi(pi);
    let m = StandardModule::delta_pi(sigma);
    let word = src.induced().word().to_vec();
    let a = src.induced().lift(src.generator_e());
    let mut relations: Vec<AlgebraElement> = Vec::new();
    let mut start = 0;
    for &h in src.induced().heights() {
        for t in start..start + h - 1 {
            relations.push(AlgebraElement::psi_word(&[t as u8], &word)?);
            relations.push(&AlgebraElement::dot(t, &word) - &AlgebraElement::dot(t + 1, &word));
        }
        start += h;
    }
    relations.push(&a - &AlgebraElement::idempotent(&word));
    (lo..=hi).map(|d| Ok(hom_nullity(&m, &relations, &word, src.shift() + d))).collect()
}

fn hom_nullity(m: &StandardModule, relations: &[AlgebraElement], word: &[crate::lie::Vertex], t: i32) -> usize {
    let piece = m.piece(word, t);
    let vs = piece.vectors();
    // columns: (relation, basis vector of the ambient induced module)
    let mut index: BTreeMap<(usize, crate::modules::induced::BasisVec), usize> = BTreeMap::new();
    let mut rows = Vec::new();
    for v in &vs {
        let mut row: BTreeMap<usize, i64> = BTreeMap::new();
        for (r, rel) in relations.iter().enumerate() {
            let mut img = Vector::new();
            add_scaled(&mut img, &m.act(rel, v), 1);
            for (b, c) in img {
                let n = index.len();
                let col = *index.entry((r, b)).or_insert(n);
                *row.entry(col).or_insert(0) += c;
            }
        }
        rows.push(row.into_iter().filter(|&(_, c)| c != 0).collect::<SparseRow>());
    }
    vs.len() - rank(&rows, Ring::Q)
}
