//! Standard modules `Delta(pi) = q^{sum binom(m_i, 2)} (Delta(beta_1)^{∘m_1} ∘ ...) E`,
//! realized inside the induced module by the idempotent `E = e_{m_1} ⊗ ... ⊗ e_{m_t}`
//! of the right nil-Hecke action.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::lie::{KostantPartition, Root, Vertex, Weight};
use crate::linalg::hnf_rows;
use crate::modules::induced::{add_scaled, BasisVec, InducedModule, Vector};
use crate::resolution::{f_entry, Lambda, MultiComp, Params};
use crate::symgroup::longest;

/// A graded piece `(1_j Delta)_t` as a lattice in the coordinates of the induced module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub word: Vec<Vertex>,
    pub degree: i32,
    /// Coordinates: the basis of the induced module in this word and degree.
    pub coords: Vec<BasisVec>,
    /// Rows spanning the lattice, in Hermite normal form.
    pub rows: Vec<Vec<BigInt>>,
}

impl Piece {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(&self.coords)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, b)| (b.clone(), c.to_i64().expect("coordinate fits in i64")))
                    .collect()
            })
            .collect()
    }
}

/// `Delta(pi)`, or `Delta(alpha^m)` for a single part.
pub struct StandardModule {
    parts: Vec<(Root, usize)>,
    induced: InducedModule,
    shift: i32,
    /// `v E` for the generator `v`.
    ve: Vector,
}

impl StandardModule {
    pub fn new(parts: &[(Root, usize)]) -> Self {
        let roots: Vec<Root> = parts.iter().flat_map(|(r, m)| std::iter::repeat(*r).take(*m)).collect();
        let shift = parts.iter().map(|(_, m)| (m * m.saturating_sub(1) / 2) as i32).sum();
        let mut m = StandardModule { parts: parts.to_vec(), induced: InducedModule::new(&roots), shift, ve: Vector::new() };
        m.ve = m.apply_e(&m.induced.generator());
        m
    }

    pub fn delta_root(alpha: Root) -> Self {
        StandardModule::new(&[(alpha, 1)])
    }

    pub fn delta_power(alpha: Root, m: usize) -> Self {
        StandardModule::new(&[(alpha, m)])
    }

    pub fn delta_pi(pi: &KostantPartition) -> Self {
        StandardModule::new(pi.parts())
    }

    pub fn parts(&self) -> &[(Root, usize)] {
        &self.parts
    }

    pub fn induced(&self) -> &InducedModule {
        &self.induced
    }

    pub fn weight(&self) -> &Weight {
        self.induced.weight()
    }

    /// The grading shift `sum binom(m_i, 2)`.
    pub fn shift(&self) -> i32 {
        self.shift
    }

    /// `v E` for the generator `v`.
    pub fn generator_e(&self) -> &Vector {
        &self.ve
    }

    /// Right action of `E`.
    pub fn apply_e(&self, v: &Vector) -> Vector {
        let mut cur = v.clone();
        let mut first = 0;
        for (_, m) in &self.parts {
            let m = *m;
            for s in 0..m {
                for _ in 0..s {
                    cur = self.induced.right_x(&cur, first + s);
                }
            }
            for g in longest(m).lexmin_word() {
                cur = self.induced.right_tau(&cur, first + g as usize).expect("equal factors");
            }
            first += m;
        }
        cur
    }

    /// The piece `(1_j Delta)_t`.
    pub fn piece(&self, j: &[Vertex], t: i32) -> Piece {
        let coords = self.induced.basis(j, t - self.shift);
        // b E = b' (v E) where b = b' v, since the two actions commute
        let gens: Vec<Vec<BigInt>> = coords
            .iter()
            .map(|b| {
                let img = self.induced.act(&AlgebraElement::from_mono(self.induced.mono_of(b)), &self.ve);
                coords.iter().map(|c| BigInt::from(img.get(c).copied().unwrap_or(0))).collect()
            })
            .collect();
        let rows = hnf_rows(gens);
        Piece { word: j.to_vec(), degree: t, coords, rows }
    }

    /// Lowest degree in which the module can be nonzero.
    pub fn min_degree(&self) -> i32 {
        self.induced.min_degree() + self.shift
    }

    pub fn words(&self) -> Vec<Vec<Vertex>> {
        self.induced.words().cloned().collect()
    }

    /// Left action of an algebra element on vectors of the ambient induced module.
    pub fn act(&self, a: &AlgebraElement, v: &Vector) -> Vector {
        self.induced.act(a, v)
    }

    /// The standard generator `psi_g v^{∘m} E` for a single part `alpha^m`.
    pub fn standard_generator(&self) -> Result<Vector> {
        let [(alpha, m)] = self.parts.as_slice() else {
            return Err(Error::InvalidData("standard generator is defined for a single part".into()));
        };
        let p = Params::from_root(alpha, *m)?;
        let zero = MultiComp::new(p, vec![vec![0; p.k()]; *m])?;
        let lam0 = Lambda::new(p, vec![0; p.k()])?;
        let f = f_entry(&lam0, &zero)?;
        Ok(self.induced.act(&f, &self.ve))
    }
}

/// `x = sum c_b b` with coordinates against `piece`, if `x` lies in the lattice.
pub fn coordinates(piece: &Piece, x: &Vector) -> Option<Vec<BigInt>> {
    let mut target: Vec<BigInt> =
        piece.coords.iter().map(|b| BigInt::from(x.get(b).copied().unwrap_or(0))).collect();
    if x.keys().any(|b| piece.coords.binary_search(b).is_err()) {
        return None;
    }
    crate::linalg::solve_hnf(&piece.rows, &mut target)
}

/// `sum c_k v_k`.
pub fn combine(vs: &[Vector], cs: &[i64]) -> Vector {
    let mut out = Vector::new();
    for (v, &c) in vs.iter().zip(cs) {
        add_scaled(&mut out, v, c);
    }
    out
}
