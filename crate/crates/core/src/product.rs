//! Direct products of arbitrary backends.
//!
//! The lattice of `G_1 x G_2` is `A_1 x A_2`, the abelianization is the
//! product of the two abelianizations and a positive identity holds on the
//! product iff it holds on each factor with the component conjugators.

use num_bigint::BigInt;
use serde_json::json;

use crate::error::{GentorError, Result};
use crate::group::{ComputableGroup, Labeled};
use crate::intlin::{cokernel_structure, AbelianStructure, IntMatrix};
use crate::word::Word;

pub struct ProductGroup<A: ComputableGroup, B: ComputableGroup> {
    a: A,
    b: B,
    clash: bool,
    abelian: Option<AbelianStructure>,
    a_cols: usize,
}

impl<A: ComputableGroup, B: ComputableGroup> ProductGroup<A, B> {
    pub fn new(a: A, b: B) -> Self {
        let names_a: Vec<String> = a.generators().into_iter().map(|(n, _)| n).collect();
        let clash = b.generators().iter().any(|(n, _)| names_a.contains(n));
        let (abelian, a_cols) = match (a.abelianization(), b.abelianization()) {
            (Ok(x), Ok(y)) => {
                let r = IntMatrix::block_diagonal(&x.relations, &y.relations);
                (Some(cokernel_structure(&r)), x.num_generators())
            }
            _ => (None, 0),
        };
        ProductGroup {
            a,
            b,
            clash,
            abelian,
            a_cols,
        }
    }

    pub fn first(&self) -> &A {
        &self.a
    }

    pub fn second(&self) -> &B {
        &self.b
    }

    fn rename(&self, w: &Word, side: &str) -> Word {
        if self.clash {
            w.rename(&|n: &str| format!("{n}_{side}"))
        } else {
            w.clone()
        }
    }

    /// Embeds a word of the first factor.
    pub fn left_word(&self, w: &Word) -> Word {
        self.rename(w, "1")
    }

    /// Embeds a word of the second factor.
    pub fn right_word(&self, w: &Word) -> Word {
        self.rename(w, "2")
    }
}

impl<A: ComputableGroup, B: ComputableGroup> ComputableGroup for ProductGroup<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn name(&self) -> String {
        format!("{}*{}", self.a.name(), self.b.name())
    }

    fn identity(&self) -> Self::Elem {
        (self.a.identity(), self.b.identity())
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        (self.a.mul(&x.0, &y.0), self.b.mul(&x.1, &y.1))
    }

    fn inv(&self, x: &Self::Elem) -> Self::Elem {
        (self.a.inv(&x.0), self.b.inv(&x.1))
    }

    fn pow(&self, g: &Self::Elem, k: i64) -> Self::Elem {
        (self.a.pow(&g.0, k), self.b.pow(&g.1, k))
    }

    fn generators(&self) -> Vec<(String, Self::Elem)> {
        let suffix = |n: String, side: &str| if self.clash { format!("{n}_{side}") } else { n };
        let mut out = Vec::new();
        for (n, g) in self.a.generators() {
            out.push((suffix(n, "1"), (g, self.b.identity())));
        }
        for (n, g) in self.b.generators() {
            out.push((suffix(n, "2"), (self.a.identity(), g)));
        }
        out
    }

    fn abelianization(&self) -> Result<&AbelianStructure> {
        self.abelian.as_ref().ok_or_else(|| {
            GentorError::Unsupported(format!("`{}` has a factor without an abelianization", self.name()))
        })
    }

    fn pi(&self, g: &Self::Elem) -> Result<Vec<BigInt>> {
        let mut v = self.a.pi(&g.0)?;
        debug_assert_eq!(v.len(), self.a_cols);
        v.extend(self.b.pi(&g.1)?);
        Ok(v)
    }

    fn transversal(&self) -> Result<Vec<Labeled<Self::Elem>>> {
        let ta = self.a.transversal()?;
        let tb = self.b.transversal()?;
        let mut out = Vec::with_capacity(ta.len() * tb.len());
        for x in &ta {
            for y in &tb {
                let word = self.left_word(&x.word).times(&self.right_word(&y.word));
                out.push(Labeled::new((x.elem.clone(), y.elem.clone()), word));
            }
        }
        Ok(out)
    }

    fn coset_index(&self, g: &Self::Elem) -> Result<usize> {
        let nb = self.b.transversal()?.len();
        Ok(self.a.coset_index(&g.0)? * nb + self.b.coset_index(&g.1)?)
    }

    fn torsion_free(&self) -> Option<bool> {
        Some(self.a.torsion_free()? && self.b.torsion_free()?)
    }

    fn center_rank(&self) -> Option<usize> {
        Some(self.a.center_rank()? + self.b.center_rank()?)
    }

    fn hirsch_length(&self) -> Option<usize> {
        Some(self.a.hirsch_length()? + self.b.hirsch_length()?)
    }

    fn element_json(&self, g: &Self::Elem) -> serde_json::Value {
        json!([self.a.element_json(&g.0), self.b.element_json(&g.1)])
    }

    fn verify_identity_symbolic(&self, k: i64, conjugators: &[Self::Elem]) -> Result<bool> {
        let first: Vec<A::Elem> = conjugators.iter().map(|c| c.0.clone()).collect();
        let second: Vec<B::Elem> = conjugators.iter().map(|c| c.1.clone()).collect();
        Ok(self.a.verify_identity_symbolic(k, &first)? && self.b.verify_identity_symbolic(k, &second)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::classic::{klein_bottle, promislow};
    use crate::intlin::bigvec;
    use crate::metab::{build_k, MetabConfig};
    use crate::word::{eval_word, parse_word};

    #[test]
    fn promislow_times_k311() {
        let g = ProductGroup::new(promislow(), build_k(3, 1, 1, MetabConfig::default()).unwrap());
        let ab = g.abelianization().unwrap();
        assert_eq!(ab.invariant_factors, bigvec(&[36, 36]));
        assert_eq!(g.transversal().unwrap().len(), 36);
        assert_eq!(g.torsion_free(), Some(true));
        let x = eval_word(&g, &parse_word("x_1*y_2").unwrap()).unwrap();
        assert_eq!(g.coset_index(&x).unwrap(), 9 + 1);
    }

    #[test]
    fn transversal_words_evaluate() {
        let g = ProductGroup::new(klein_bottle(), promislow());
        for (i, t) in g.transversal().unwrap().iter().enumerate() {
            assert_eq!(eval_word(&g, &t.word).unwrap(), t.elem);
            assert_eq!(g.coset_index(&t.elem).unwrap(), i);
        }
    }
}
