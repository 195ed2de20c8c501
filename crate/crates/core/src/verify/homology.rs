//! Homology of complexes of projectives on graded pieces, computed on the monomial
//! basis `psi_u y^k e` of each summand `q^s R e`.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::algebra::{mul_monos, prune, Mono, Terms};
use crate::error::{Error, Result};
use crate::lie::Vertex;
use crate::linalg::{rank, Ring, SparseRow};
use crate::modules::character::Character;
use crate::modules::induced::compositions;
use crate::resolution::complex::{ProjComplex, Summand};
use crate::symgroup::{coset_min_reps, Perm};

/// Default largest basis of a single graded piece.
pub const SIZE_GUARD: usize = 20_000;

/// Default internal-degree cutoff.
pub const DEFAULT_CUTOFF: i32 = 12;

/// The basis `psi_u y^k e` of `q^s R e`, `u` minimal in `u S_e`, organized by left word.
/// Since `e d = d` for boundary entries, images are computed from `psi_u y^k` alone.
pub struct SummandBasis {
    shift: i32,
    word: Vec<Vertex>,
    by_top: BTreeMap<Vec<Vertex>, Vec<(Perm, i32)>>,
}

impl SummandBasis {
    pub fn new(s: &Summand) -> Self {
        let word = s.idem.expand();
        let mut by_top: BTreeMap<Vec<Vertex>, Vec<(Perm, i32)>> = BTreeMap::new();
        for u in coset_min_reps(None, Some(&s.idem.blocks()), word.len()) {
            let m = Mono::new(u.clone(), &vec![0; word.len()], &word);
            by_top.entry(m.top().to_vec()).or_default().push((u, m.degree()));
        }
        SummandBasis { shift: s.shift, word, by_top }
    }

    pub fn words(&self) -> impl Iterator<Item = &Vec<Vertex>> {
        self.by_top.keys()
    }

    /// Monomials `psi_u y^k` whose products with `e` form a basis of `(1_j q^s R e)_t`.
    pub fn basis(&self, j: &[Vertex], t: i32) -> Vec<Mono> {
        let mut out = Vec::new();
        let Some(reps) = self.by_top.get(j) else { return out };
        for (u, deg) in reps {
            let rest = t - self.shift - deg;
            if rest < 0 || rest % 2 != 0 {
                continue;
            }
            for k in compositions((rest / 2) as usize, self.word.len()) {
                let k: Vec<u8> = k.into_iter().map(|x| x as u8).collect();
                out.push(Mono::new(u.clone(), &k, &self.word));
            }
        }
        out
    }

    /// Graded dimension of `1_j q^s R e` in degree `t`.
    pub fn dim(&self, j: &[Vertex], t: i32) -> usize {
        let Some(reps) = self.by_top.get(j) else { return 0 };
        let d = self.word.len();
        reps.iter()
            .filter(|(_, deg)| t - self.shift >= *deg && (t - self.shift - deg) % 2 == 0)
            .map(|(_, deg)| crate::modules::induced::binomial(((t - self.shift - deg) / 2) as usize + d - 1, d - 1))
            .sum()
    }

    /// Lowest degree in which the summand is nonzero.
    pub fn min_degree(&self) -> i32 {
        self.shift + self.by_top.values().flatten().map(|(_, d)| *d).min().unwrap_or(0)
    }
}

/// Homology dimensions `H_n` of one graded piece `(1_j -)_t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyCell {
    pub word: Vec<Vertex>,
    pub degree: i32,
    pub chain_dims: Vec<usize>,
    pub homology: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub ring: String,
    pub cutoff: i32,
    pub cells: Vec<HomologyCell>,
}

impl HomologyTable {
    /// Positions `(word, degree, n)` with nonzero homology in positive homological degree.
    pub fn higher_homology(&self) -> Vec<(Vec<Vertex>, i32, usize, usize)> {
        let mut out = Vec::new();
        for c in &self.cells {
            for (n, &h) in c.homology.iter().enumerate().skip(1) {
                if h != 0 {
                    out.push((c.word.clone(), c.degree, n, h));
                }
            }
        }
        out
    }

    /// The character of `H_0`.
    pub fn h0(&self) -> Character {
        let mut ch = Character::new(self.cutoff);
        for c in &self.cells {
            ch.add(&c.word, c.degree, c.homology[0] as i64);
        }
        ch
    }

    /// `sum_n (-1)^n ch P_n`.
    pub fn euler(&self) -> Character {
        let mut ch = Character::new(self.cutoff);
        for c in &self.cells {
            let x: i64 = c.chain_dims.iter().enumerate().map(|(n, &d)| if n % 2 == 0 { d as i64 } else { -(d as i64) }).sum();
            ch.add(&c.word, c.degree, x);
        }
        ch
    }
}

/// Homology of `c` on every graded piece of internal degree `<= cutoff`, over Q or F_p.
pub fn homology_dims(c: &ProjComplex, cutoff: i32, ring: Ring) -> Result<HomologyTable> {
    Ok(homology_dims_multi(c, cutoff, &[ring], SIZE_GUARD)?.remove(0))
}

pub fn homology_dims_guarded(c: &ProjComplex, cutoff: i32, ring: Ring, guard: usize) -> Result<HomologyTable> {
    Ok(homology_dims_multi(c, cutoff, &[ring], guard)?.remove(0))
}

/// Number of worker threads: `KLR_THREADS` if set, else the available parallelism.
pub fn thread_count() -> usize {
    std::env::var("KLR_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Homology over several fields at once; the boundary matrices of each piece are built once.
/// Pieces are independent and are distributed over worker threads.
pub fn homology_dims_multi(c: &ProjComplex, cutoff: i32, rings: &[Ring], guard: usize) -> Result<Vec<HomologyTable>> {
    if let Some(r) = rings.iter().find(|&&r| r == Ring::Z) {
        return Err(Error::Ring(format!("homology dimensions need a field (Q or Fp), got {r}")));
    }
    let bases: Vec<Vec<SummandBasis>> = c.levels.iter().map(|l| l.iter().map(SummandBasis::new).collect()).collect();
    let lo = bases.iter().flatten().map(SummandBasis::min_degree).min().unwrap_or(0);
    let mut words: Vec<Vec<Vertex>> = bases.iter().flatten().flat_map(|b| b.words().cloned()).collect();
    words.sort();
    words.dedup();
    let mut jobs = Vec::new();
    for j in &words {
        for t in lo..=cutoff {
            let chain_dims: Vec<usize> = bases.iter().map(|level| level.iter().map(|b| b.dim(j, t)).sum()).collect();
            if chain_dims.iter().all(|&d| d == 0) {
                continue;
            }
            if let Some(&big) = chain_dims.iter().find(|&&d| d > guard) {
                return Err(Error::SizeGuard(format!("piece {j:?} degree {t} has {big} basis vectors")));
            }
            jobs.push((j, t, chain_dims));
        }
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results: Vec<Vec<(usize, Vec<HomologyCell>)>> = std::thread::scope(|scope| {
        let workers: Vec<_> = (0..thread_count().min(jobs.len()).max(1))
            .map(|_| {
                scope.spawn(|| {
                    let mut out = Vec::new();
                    loop {
                        let k = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        let Some((j, t, chain_dims)) = jobs.get(k) else { break };
                        out.push((k, cell(c, &bases, j, *t, chain_dims, rings)));
                    }
                    out
                })
            })
            .collect();
        workers.into_iter().map(|w| w.join().expect("homology worker panicked")).collect()
    });
    let mut ordered: Vec<(usize, Vec<HomologyCell>)> = results.into_iter().flatten().collect();
    ordered.sort_by_key(|(k, _)| *k);
    let mut tables: Vec<HomologyTable> =
        rings.iter().map(|r| HomologyTable { ring: r.to_string(), cutoff, cells: Vec::new() }).collect();
    for (_, cells) in ordered {
        for (table, cell) in tables.iter_mut().zip(cells) {
            table.cells.push(cell);
        }
    }
    Ok(tables)
}

fn cell(c: &ProjComplex, bases: &[Vec<SummandBasis>], j: &[Vertex], t: i32, chain_dims: &[usize], rings: &[Ring]) -> Vec<HomologyCell> {
    // ranks of d_n: level n+1 -> level n, per ring
    let mut ranks = vec![vec![0usize; c.levels.len()]; rings.len()];
    for (n, d) in c.boundaries.iter().enumerate() {
        if chain_dims[n] == 0 || chain_dims[n + 1] == 0 || d.entries.is_empty() {
            continue;
        }
        let rows = boundary_rows(&bases[n + 1], d, j, t);
        for (r, &ring) in rings.iter().enumerate() {
            ranks[r][n] = rank(&rows, ring);
        }
    }
    ranks
        .into_iter()
        .map(|rk| {
            let homology =
                (0..c.levels.len()).map(|n| chain_dims[n] - rk[n] - if n > 0 { rk[n - 1] } else { 0 }).collect();
            HomologyCell { word: j.to_vec(), degree: t, chain_dims: chain_dims.to_vec(), homology }
        })
        .collect()
}

/// Images of the basis of `(1_j P_{n+1})_t` under `d_n`, in normal-form coordinates.
fn boundary_rows(
    sources: &[SummandBasis],
    d: &crate::resolution::complex::Matrix,
    j: &[Vertex],
    t: i32,
) -> Vec<SparseRow> {
    let mut index: FxHashMap<(usize, Mono), usize> = FxHashMap::default();
    let mut rows = Vec::new();
    for (x, src) in sources.iter().enumerate() {
        let entries: Vec<(usize, &crate::algebra::AlgebraElement)> =
            d.entries.range((x, 0)..(x + 1, 0)).map(|(&(_, y), e)| (y, e)).collect();
        if entries.is_empty() {
            rows.extend(src.basis(j, t).iter().map(|_| SparseRow::new()));
            continue;
        }
        for b in src.basis(j, t) {
            let mut row: BTreeMap<usize, i64> = BTreeMap::new();
            for &(y, e) in &entries {
                let mut acc = Terms::default();
                for (m, &c) in e.terms() {
                    if m.top() == b.idem {
                        mul_monos(&b, m, c, &mut acc);
                    }
                }
                prune(&mut acc);
                for (m, c) in acc {
                    let n = index.len();
                    let col = *index.entry((y, m)).or_insert(n);
                    *row.entry(col).or_insert(0) += c;
                }
            }
            rows.push(row.into_iter().filter(|&(_, v)| v != 0).collect());
        }
    }
    rows
}
