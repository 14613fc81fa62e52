use num_bigint::BigInt;
use serde_json::json;

use super::{KGroup, MetabElement};
use crate::error::Result;
use crate::group::{ComputableGroup, Labeled};
use crate::intlin::AbelianStructure;
use crate::json::bigvec_json;

impl ComputableGroup for KGroup {
    type Elem = MetabElement;

    fn name(&self) -> String {
        self.label()
    }

    fn identity(&self) -> MetabElement {
        KGroup::identity(self)
    }

    fn mul(&self, a: &MetabElement, b: &MetabElement) -> MetabElement {
        KGroup::mul(self, a, b)
    }

    fn inv(&self, a: &MetabElement) -> MetabElement {
        KGroup::inv(self, a)
    }

    fn generators(&self) -> Vec<(String, MetabElement)> {
        vec![
            ("x".into(), self.x()),
            ("y".into(), self.y()),
            ("c".into(), self.c_pow(&self.shape().one())),
        ]
    }

    fn abelianization(&self) -> Result<&AbelianStructure> {
        Ok(self.abelian())
    }

    fn pi(&self, g: &MetabElement) -> Result<Vec<BigInt>> {
        Ok(self.abelianization_map(g))
    }

    fn transversal(&self) -> Result<Vec<Labeled<MetabElement>>> {
        Ok(self.transversal_elements().to_vec())
    }

    fn coset_index(&self, g: &MetabElement) -> Result<usize> {
        Ok(self.coset_label(g))
    }

    fn torsion_free(&self) -> Option<bool> {
        Some(KGroup::torsion_free(self))
    }

    fn center_rank(&self) -> Option<usize> {
        Some(KGroup::center_rank(self))
    }

    /// `G' = M` has finite index, so the Hirsch length is the rank of `M`.
    fn hirsch_length(&self) -> Option<usize> {
        Some(self.module().rank())
    }

    fn element_json(&self, g: &MetabElement) -> serde_json::Value {
        json!({ "alpha": g.alpha, "beta": g.beta, "v": bigvec_json(&g.v) })
    }
}
