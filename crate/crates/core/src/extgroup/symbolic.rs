use num_bigint::BigInt;
use num_traits::Zero;

use super::{ExtElement, ExtensionSpec};
use crate::intlin::IntMatrix;

/// An element `(q, L a + c)` whose lattice part is affine in a formal vector `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicElement {
    pub q: usize,
    pub lin: IntMatrix,
    pub cst: Vec<BigInt>,
}

impl SymbolicElement {
    /// The generic element `(q, a)`.
    pub fn generic(spec: &ExtensionSpec, q: usize) -> Self {
        SymbolicElement {
            q,
            lin: IntMatrix::identity(spec.n),
            cst: vec![BigInt::zero(); spec.n],
        }
    }

    pub fn constant(spec: &ExtensionSpec, g: &ExtElement) -> Self {
        SymbolicElement {
            q: g.q,
            lin: IntMatrix::zeros(spec.n, spec.n),
            cst: g.a.clone(),
        }
    }

    /// True when this is the identity for every value of the formal vector.
    pub fn is_identically_trivial(&self) -> bool {
        self.q == 0 && self.lin.is_zero() && self.cst.iter().all(Zero::is_zero)
    }
}

impl ExtensionSpec {
    pub fn sym_mul(&self, g: &SymbolicElement, h: &SymbolicElement) -> SymbolicElement {
        let p = &self.phi[h.q];
        let lin = p
            .mul(&g.lin)
            .and_then(|m| m.add(&h.lin))
            .expect("symbolic dimensions match spec");
        let moved = p.mul_vec(&g.cst).expect("symbolic dimensions match spec");
        let cst = self.coc[g.q][h.q]
            .iter()
            .zip(moved)
            .zip(&h.cst)
            .map(|((c, m), b)| c + m + b)
            .collect();
        SymbolicElement {
            q: self.q_mul(g.q, h.q),
            lin,
            cst,
        }
    }

    /// `g^k` for `k >= 0`.
    pub fn sym_pow(&self, g: &SymbolicElement, k: u64) -> SymbolicElement {
        let mut acc = SymbolicElement::constant(self, &self.identity());
        for _ in 0..k {
            acc = self.sym_mul(&acc, g);
        }
        acc
    }

    pub fn sym_conj(&self, g: &SymbolicElement, x: &ExtElement) -> SymbolicElement {
        let left = SymbolicElement::constant(self, &self.inv(x));
        let right = SymbolicElement::constant(self, x);
        self.sym_mul(&self.sym_mul(&left, g), &right)
    }
}
