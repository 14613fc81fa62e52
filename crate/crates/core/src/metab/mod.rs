//! Collection in the metabelian groups
//!
//! ```text
//! K(p^n, p^m) = < x, y | [[x,y], x^{p^n}], [[x,y], y^{p^m}],
//!                 (x^{p^n})^{Psi_{p^m}(y)}, (y^{p^m})^{Psi_{p^n}(x)} >_metab
//! ```
//!
//! Elements are kept in the normal form `x^alpha y^beta c^v` with
//! `c = [x, y] = x^-1 y^-1 x y`, `0 <= alpha, beta < N = p^{n+m}` and `v` a
//! canonical representative in the module `M = R / S`, where
//! `R = Z[C_{p^n} x C_{p^m}]` and `S` is the submodule forced by consistency
//! of the power relations `x^N = c^{g3}`, `y^N = c^{g4}`.
//!
//! Conjugation acts on `c`-exponents on the right: `c^x = c^X`, `c^y = c^Y`.
//! The commutator identity `[x^a, y^b] = c^{Psi_a(X) Psi_b(Y)}` drives every
//! product: `y^b x^a = x^a y^b c^{-Psi_a(X) Psi_b(Y)}`.

mod backend;
mod raw;
pub mod ring;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{GentorError, Result};
use crate::group::Labeled;
use crate::intlin::{cokernel_structure, row_lattice_basis, AbelianStructure, IntMatrix};

pub use raw::RawElem;
use ring::{RingElem, RingShape};

/// Limits for [`build_k`].
#[derive(Clone, Copy, Debug)]
pub struct MetabConfig {
    /// Largest allowed `p^{n+m}`.
    pub size_cap: u64,
}

impl Default for MetabConfig {
    fn default() -> Self {
        MetabConfig { size_cap: 256 }
    }
}

/// Normal form `x^alpha y^beta c^v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MetabElement {
    pub alpha: u64,
    pub beta: u64,
    /// Canonical representative in `Z^d` of the class of `v` in `M`.
    pub v: Vec<BigInt>,
}

/// The module `M = R / S` of `c`-exponents.
#[derive(Clone, Debug)]
pub struct ModuleStructure {
    pub shape: RingShape,
    /// Z-basis of `S` as rows.
    pub submodule: IntMatrix,
    pub quotient: AbelianStructure,
}

impl ModuleStructure {
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.quotient.representative(v).expect("vector has ring dimension")
    }

    pub fn rank(&self) -> usize {
        self.quotient.free_rank
    }
}

/// A built group `K(p^n, p^m)`.
#[derive(Clone, Debug)]
pub struct KGroup {
    pub p: u64,
    pub n: u32,
    pub m: u32,
    big_n: i64,
    shape: RingShape,
    g3: RingElem,
    g4: RingElem,
    module: ModuleStructure,
    abelian: AbelianStructure,
    transversal: Vec<Labeled<MetabElement>>,
    torsion_free: bool,
    center_rank: usize,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Builds `K(p^n, p^m)`.
pub fn build_k(p: u64, n: u32, m: u32, config: MetabConfig) -> Result<KGroup> {
    if !is_prime(p) {
        return Err(GentorError::InvalidInput(format!("{p} is not prime")));
    }
    if n == 0 || m == 0 {
        return Err(GentorError::InvalidInput("n and m must be positive".into()));
    }
    let big_n = p
        .checked_pow(n + m)
        .filter(|&v| v <= config.size_cap)
        .ok_or_else(|| {
            GentorError::SizeCap(format!(
                "p^(n+m) = {p}^{} exceeds the cap {}",
                n + m,
                config.size_cap
            ))
        })?;
    let shape = RingShape {
        x_order: p.pow(n) as usize,
        y_order: p.pow(m) as usize,
    };
    let big_n = big_n as i64;
    let (g3, g4) = raw::power_relations(&shape, big_n);
    let consistency = raw::consistency_vectors(&shape, big_n, &g3, &g4);

    let d = shape.dim();
    let mut rows = Vec::new();
    for s in &consistency {
        for i in 0..shape.x_order as i64 {
            for j in 0..shape.y_order as i64 {
                let r = shape.shift(s, i, j);
                if r.iter().any(|x| !x.is_zero()) {
                    rows.push(r);
                }
            }
        }
    }
    let generators = IntMatrix::from_rows_with_cols(rows, d).expect("ring vectors have length d");
    let submodule = row_lattice_basis(&generators);
    let quotient = cokernel_structure(&submodule);
    let module = ModuleStructure {
        shape,
        submodule,
        quotient,
    };
    let abelian = cokernel_structure(
        &IntMatrix::from_rows(&[vec![big_n, 0], vec![0, big_n]]).expect("2x2 literal"),
    );

    let mut group = KGroup {
        p,
        n,
        m,
        big_n,
        shape,
        g3,
        g4,
        module,
        abelian,
        transversal: Vec::new(),
        torsion_free: false,
        center_rank: 0,
    };
    group.transversal = group.build_transversal();
    group.torsion_free = group.decide_torsion_free();
    group.center_rank = group.compute_center_rank();
    Ok(group)
}

impl KGroup {
    pub fn label(&self) -> String {
        format!("K:{},{},{}", self.p, self.n, self.m)
    }

    pub fn shape(&self) -> RingShape {
        self.shape
    }

    /// `p^{n+m}`, the exponent of the abelianization and the index `|G/A|`.
    pub fn big_n(&self) -> u64 {
        self.big_n as u64
    }

    /// `g3` with `x^N = c^{g3}`.
    pub fn g3(&self) -> &RingElem {
        &self.g3
    }

    /// `g4` with `y^N = c^{g4}`.
    pub fn g4(&self) -> &RingElem {
        &self.g4
    }

    pub fn module(&self) -> &ModuleStructure {
        &self.module
    }

    pub fn x(&self) -> MetabElement {
        self.normalize(RawElem::new(1, 0, self.shape.zero()))
    }

    pub fn y(&self) -> MetabElement {
        self.normalize(RawElem::new(0, 1, self.shape.zero()))
    }

    /// `c^r` for a ring element `r`.
    pub fn c_pow(&self, r: &[BigInt]) -> MetabElement {
        self.normalize(RawElem::new(0, 0, r.to_vec()))
    }

    pub fn identity(&self) -> MetabElement {
        MetabElement {
            alpha: 0,
            beta: 0,
            v: self.shape.zero(),
        }
    }

    fn to_raw(&self, g: &MetabElement) -> RawElem<RingElem> {
        RawElem::new(g.alpha as i64, g.beta as i64, g.v.clone())
    }

    /// Folds exponents into `[0, N)` through the power relations and reduces
    /// the `c`-exponent modulo `S`.
    pub fn normalize(&self, raw: RawElem<RingElem>) -> MetabElement {
        let folded = raw::fold(&self.shape, self.big_n, &self.g3, &self.g4, raw);
        MetabElement {
            alpha: folded.alpha as u64,
            beta: folded.beta as u64,
            v: self.module.reduce(&folded.c),
        }
    }

    pub fn mul(&self, g: &MetabElement, h: &MetabElement) -> MetabElement {
        self.normalize(raw::mul(&self.shape, &self.to_raw(g), &self.to_raw(h)))
    }

    pub fn inv(&self, g: &MetabElement) -> MetabElement {
        self.normalize(raw::inv(&self.shape, &self.to_raw(g)))
    }

    /// Collects a word given as `(generator, exponent)` pairs over `x`, `y`, `c`.
    pub fn collect(&self, word: &[(&str, i64)]) -> Result<MetabElement> {
        let mut acc = self.identity();
        for &(gen, e) in word {
            let raw = match gen {
                "x" => RawElem::new(e, 0, self.shape.zero()),
                "y" => RawElem::new(0, e, self.shape.zero()),
                "c" => RawElem::new(0, 0, ring::scale(&self.shape.one(), &BigInt::from(e))),
                other => return Err(GentorError::UnknownIdentifier(other.to_string())),
            };
            acc = self.mul(&acc, &self.normalize(raw));
        }
        Ok(acc)
    }

    /// `pi(g) = (alpha, beta)` in `C_N x C_N`.
    pub fn abelianization_map(&self, g: &MetabElement) -> Vec<BigInt> {
        vec![BigInt::from(g.alpha), BigInt::from(g.beta)]
    }

    pub fn in_translation_subgroup(&self, g: &MetabElement) -> bool {
        g.alpha.is_multiple_of(self.shape.x_order as u64) && g.beta.is_multiple_of(self.shape.y_order as u64)
    }

    pub fn abelian(&self) -> &AbelianStructure {
        &self.abelian
    }

    pub fn coset_label(&self, g: &MetabElement) -> usize {
        (g.alpha as usize % self.shape.x_order) * self.shape.y_order + g.beta as usize % self.shape.y_order
    }

    fn build_transversal(&self) -> Vec<Labeled<MetabElement>> {
        let (x, y) = (self.x(), self.y());
        let mut out = Vec::with_capacity(self.shape.dim());
        for i in 0..self.shape.x_order as i64 {
            for j in 0..self.shape.y_order as i64 {
                let xi = crate::group::ComputableGroup::pow(self, &x, i);
                let yj = crate::group::ComputableGroup::pow(self, &y, j);
                let word = crate::word::Word::gen("x").power(i).times(&crate::word::Word::gen("y").power(j));
                out.push(Labeled::new(self.mul(&xi, &yj), word));
            }
        }
        out
    }

    pub fn transversal_elements(&self) -> &[Labeled<MetabElement>] {
        &self.transversal
    }

    /// A torsion element has a power of prime order, whose image in
    /// `C_N x C_N` has order 1 or `p`. Image order 1 means torsion in `M`;
    /// otherwise `(alpha, beta) = (N/p)(i, j)` and the `p`-th power is
    /// `c^{L v + c0}`, which vanishes for some `v` iff `L v + c0 in S` is solvable.
    fn decide_torsion_free(&self) -> bool {
        if !self.module.quotient.invariant_factors.is_empty() {
            return false;
        }
        let step = self.big_n / self.p as i64;
        let d = self.shape.dim();
        let s_t = self.module.submodule.transpose();
        for i in 0..self.p as i64 {
            for j in 0..self.p as i64 {
                if i == 0 && j == 0 {
                    continue;
                }
                let (lin, cst) = raw::symbolic_power(
                    &self.shape,
                    self.big_n,
                    &self.g3,
                    &self.g4,
                    i * step,
                    j * step,
                    self.p,
                );
                let system = if s_t.cols() == 0 {
                    lin
                } else {
                    lin.hstack(&s_t).expect("both have d rows")
                };
                let rhs: Vec<BigInt> = cst.iter().map(|c| -c).collect();
                debug_assert_eq!(rhs.len(), d);
                if crate::intlin::solve_integer_linear(&system, &rhs)
                    .expect("dimensions match")
                    .is_some()
                {
                    return false;
                }
            }
        }
        true
    }

    /// Rank of the fixed points of `X` and `Y` on `M (x) Q`.
    fn compute_center_rank(&self) -> usize {
        let q = &self.module.quotient;
        let t = q.invariant_factors.len();
        let free_rows: Vec<usize> = (t..t + q.free_rank).collect();
        let f = q.to_canonical.select_rows(&free_rows);
        let id = IntMatrix::identity(self.shape.dim());
        let xm = self.shape.shift_matrix(1, 0).sub(&id).expect("square");
        let ym = self.shape.shift_matrix(0, 1).sub(&id).expect("square");
        let stacked = f
            .mul(&xm)
            .and_then(|a| f.mul(&ym).and_then(|b| a.vstack(&b)))
            .expect("dimensions match");
        q.free_rank - stacked.rank()
    }

    pub fn torsion_free(&self) -> bool {
        self.torsion_free
    }

    pub fn center_rank(&self) -> usize {
        self.center_rank
    }
}

#[cfg(test)]
mod tests;
