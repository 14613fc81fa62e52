//! Abelian-by-finite groups given as a finite point group `Q` acting on a
//! lattice `Z^n` with a normalized factor set.
//!
//! An element `(q, a)` stands for `r_q * t^a`, where `r_q` is the chosen
//! coset representative of `q` and `t^a` a translation. Multiplication is
//!
//! ```text
//! (q, a) * (q', a') = (q q', coc(q, q') + phi(q') a + a')
//! ```
//!
//! which makes `phi` an anti-homomorphism and conjugation of translations
//! read `t^a -> t^(phi(q) a)`.

mod analysis;
mod backend;
mod schema;
mod symbolic;
mod validate;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{GentorError, Result};
use crate::intlin::IntMatrix;

pub use analysis::{
    abelianization_relations, center_rank, direct_product, is_torsion_free, transversal, transversal_mod,
    TorsionReport,
};
pub use backend::ExtGroup;
pub use schema::SpecFile;
pub use symbolic::SymbolicElement;
pub use validate::{validate_extension, ValidationReport, Violation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExtElement {
    pub q: usize,
    pub a: Vec<BigInt>,
}

impl ExtElement {
    pub fn new(q: usize, a: Vec<BigInt>) -> Self {
        ExtElement { q, a }
    }

    pub fn translation(a: Vec<BigInt>) -> Self {
        ExtElement { q: 0, a }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub q_size: usize,
    /// `q_table[i][j]` is the index of `q_i q_j`; index 0 is the identity.
    pub q_table: Vec<Vec<usize>>,
    pub n: usize,
    pub phi: Vec<IntMatrix>,
    pub coc: Vec<Vec<Vec<BigInt>>>,
    pub generators: Vec<(String, ExtElement)>,
}

impl ExtensionSpec {
    /// `Z^n` with trivial point group; generators are named by `names`.
    pub fn free_abelian(names: &[&str]) -> Self {
        let n = names.len();
        let generators = names
            .iter()
            .enumerate()
            .map(|(i, name)| {
                let mut a = vec![BigInt::zero(); n];
                a[i] = 1.into();
                (name.to_string(), ExtElement::translation(a))
            })
            .collect();
        ExtensionSpec {
            q_size: 1,
            q_table: vec![vec![0]],
            n,
            phi: vec![IntMatrix::identity(n)],
            coc: vec![vec![vec![BigInt::zero(); n]]],
            generators,
        }
    }

    pub fn identity(&self) -> ExtElement {
        ExtElement::translation(vec![BigInt::zero(); self.n])
    }

    pub fn q_mul(&self, a: usize, b: usize) -> usize {
        self.q_table[a][b]
    }

    pub fn q_inv(&self, a: usize) -> usize {
        self.q_table[a]
            .iter()
            .position(|&x| x == 0)
            .expect("validated point group has inverses")
    }

    pub fn q_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.q_mul(x, a);
            k += 1;
        }
        k
    }

    fn check_dim(&self, g: &ExtElement) -> Result<()> {
        if g.a.len() != self.n || g.q >= self.q_size {
            return Err(GentorError::Dimension(format!(
                "element ({}, len {}) does not belong to a rank-{} spec with |Q| = {}",
                g.q,
                g.a.len(),
                self.n,
                self.q_size
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, g: &ExtElement, h: &ExtElement) -> Result<ExtElement> {
        self.check_dim(g)?;
        self.check_dim(h)?;
        Ok(self.mul(g, h))
    }

    pub fn mul(&self, g: &ExtElement, h: &ExtElement) -> ExtElement {
        let q = self.q_mul(g.q, h.q);
        let moved = self.phi[h.q]
            .mul_vec(&g.a)
            .expect("element dimension matches spec");
        let a = self.coc[g.q][h.q]
            .iter()
            .zip(moved)
            .zip(&h.a)
            .map(|((c, m), b)| c + m + b)
            .collect();
        ExtElement { q, a }
    }

    /// `(q, a)^-1 = (q^-1, -coc(q, q^-1) - phi(q^-1) a)`
    pub fn inv(&self, g: &ExtElement) -> ExtElement {
        let qi = self.q_inv(g.q);
        let moved = self.phi[qi].mul_vec(&g.a).expect("element dimension matches spec");
        let a = self.coc[g.q][qi].iter().zip(moved).map(|(c, m)| -c - m).collect();
        ExtElement { q: qi, a }
    }

    pub fn conj(&self, g: &ExtElement, x: &ExtElement) -> ExtElement {
        self.mul(&self.mul(&self.inv(x), g), x)
    }

    pub fn pow(&self, g: &ExtElement, k: i64) -> ExtElement {
        let mut base = if k < 0 { self.inv(g) } else { g.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn generator(&self, name: &str) -> Option<&ExtElement> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    /// `lcm` of the element orders of `Q`.
    pub fn point_group_exponent(&self) -> u64 {
        use num_integer::Integer;
        (0..self.q_size).fold(1u64, |acc, q| acc.lcm(&(self.q_order(q) as u64)))
    }
}

#[cfg(test)]
mod tests;
