use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;

use super::analysis::{fixed_rank, relations_unchecked, require_valid, torsion_report};
use super::symbolic::SymbolicElement;
use super::{ExtElement, ExtensionSpec, TorsionReport};
use crate::error::{GentorError, Result};
use crate::group::{bfs_transversal, ComputableGroup, Labeled};
use crate::intlin::{cokernel_structure, AbelianStructure};
use crate::json::bigint_json;

/// A validated extension spec with its derived data cached.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    name: String,
    spec: ExtensionSpec,
    abelian: AbelianStructure,
    transversal: Option<Vec<Labeled<ExtElement>>>,
    torsion: TorsionReport,
    center_rank: usize,
}

impl ExtGroup {
    pub fn new(name: impl Into<String>, spec: ExtensionSpec) -> Result<Self> {
        require_valid(&spec)?;
        let abelian = cokernel_structure(&relations_unchecked(&spec));
        let torsion = torsion_report(&spec);
        let center_rank = fixed_rank(&spec);
        let mut group = ExtGroup {
            name: name.into(),
            spec,
            abelian,
            transversal: None,
            torsion,
            center_rank,
        };
        group.transversal = bfs_transversal(&group, group.spec.q_size, |e| e.q);
        Ok(group)
    }

    pub fn spec(&self) -> &ExtensionSpec {
        &self.spec
    }

    pub fn torsion_report(&self) -> &TorsionReport {
        &self.torsion
    }
}

impl ComputableGroup for ExtGroup {
    type Elem = ExtElement;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn identity(&self) -> ExtElement {
        self.spec.identity()
    }

    fn mul(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        self.spec.mul(a, b)
    }

    fn inv(&self, a: &ExtElement) -> ExtElement {
        self.spec.inv(a)
    }

    fn pow(&self, g: &ExtElement, k: i64) -> ExtElement {
        self.spec.pow(g, k)
    }

    fn generators(&self) -> Vec<(String, ExtElement)> {
        self.spec.generators.clone()
    }

    fn abelianization(&self) -> Result<&AbelianStructure> {
        Ok(&self.abelian)
    }

    fn pi(&self, g: &ExtElement) -> Result<Vec<BigInt>> {
        let mut v = g.a.clone();
        v.extend((0..self.spec.q_size).map(|q| BigInt::from(u8::from(q == g.q))));
        Ok(v)
    }

    fn transversal(&self) -> Result<Vec<Labeled<ExtElement>>> {
        self.transversal.clone().ok_or_else(|| {
            GentorError::InvalidSpec(format!(
                "the generators of `{}` do not map onto the point group, so no word transversal exists",
                self.name
            ))
        })
    }

    fn coset_index(&self, g: &ExtElement) -> Result<usize> {
        Ok(g.q)
    }

    fn torsion_free(&self) -> Option<bool> {
        Some(self.torsion.torsion_free)
    }

    fn center_rank(&self) -> Option<usize> {
        Some(self.center_rank)
    }

    fn hirsch_length(&self) -> Option<usize> {
        Some(self.spec.n)
    }

    fn element_json(&self, g: &ExtElement) -> serde_json::Value {
        json!({ "q": g.q, "a": g.a.iter().map(bigint_json).collect::<Vec<_>>() })
    }

    /// For every point-group index `q`, multiplies out `prod_j ((q, a)^k)^{x_j}`
    /// with `a` formal and checks that the result vanishes identically.
    fn verify_identity_symbolic(&self, k: i64, conjugators: &[ExtElement]) -> Result<bool> {
        if k < 0 {
            return Err(GentorError::InvalidInput("inner exponent must be nonnegative".into()));
        }
        for q in 0..self.spec.q_size {
            let g = SymbolicElement::generic(&self.spec, q);
            let h = self.spec.sym_pow(&g, k as u64);
            let mut acc = SymbolicElement::constant(&self.spec, &self.spec.identity());
            for x in conjugators {
                acc = self.spec.sym_mul(&acc, &self.spec.sym_conj(&h, x));
            }
            if !acc.is_identically_trivial() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl ExtElement {
    pub fn is_translation(&self) -> bool {
        self.q == 0
    }

    pub fn is_identity(&self) -> bool {
        self.q == 0 && self.a.iter().all(Zero::is_zero)
    }
}
