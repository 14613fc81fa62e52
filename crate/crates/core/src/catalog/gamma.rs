//! The group `Gamma_P = (ZP) x| (P x P)` over the Promislow group `P`: the
//! first copy of `P` acts on `ZP` by left translation, the second by the
//! sign `P -> {+1, -1}` (first `C_4` coordinate of `P^ab`, mod 2).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::classic::promislow;
use crate::error::{GentorError, Result};
use crate::extgroup::{ExtElement, ExtGroup};
use crate::group::{ComputableGroup, Labeled};
use crate::intlin::AbelianStructure;
use crate::word::{eval_word, parse_word};

/// A finitely supported `Z`-valued function on `P`, without zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupRingElement(BTreeMap<ExtElement, BigInt>);

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement(BTreeMap::new())
    }

    pub fn basis(g: ExtElement) -> Self {
        GroupRingElement(BTreeMap::from([(g, BigInt::one())]))
    }

    pub fn support(&self) -> impl Iterator<Item = (&ExtElement, &BigInt)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `epsilon`, the coefficient sum.
    pub fn augmentation(&self) -> BigInt {
        self.0.values().sum()
    }

    fn add_term(&mut self, g: ExtElement, c: BigInt) {
        match self.0.entry(g) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaElement {
    pub r: GroupRingElement,
    pub g: ExtElement,
    pub h: ExtElement,
}

pub struct GammaGroup {
    p: ExtGroup,
}

pub fn build_casolo_gamma() -> GammaGroup {
    GammaGroup { p: promislow() }
}

impl GammaGroup {
    pub fn base(&self) -> &ExtGroup {
        &self.p
    }

    /// `+1` or `-1`.
    pub fn sign(&self, h: &ExtElement) -> i8 {
        let ab = self.p.abelianization().expect("P has an abelianization");
        let c = ab
            .canonical(&self.p.pi(h).expect("P has pi"))
            .expect("pi has generator length");
        if c[0].is_even() {
            1
        } else {
            -1
        }
    }

    /// `s * (g . r)`
    fn act(&self, g: &ExtElement, s: i8, r: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (k, c) in r.support() {
            let coeff = if s < 0 { -c.clone() } else { c.clone() };
            out.add_term(self.p.mul(g, k), coeff);
        }
        out
    }

    fn p_elem(&self, word: &str) -> ExtElement {
        eval_word(&self.p, &parse_word(word).expect("literal word")).expect("generator of P")
    }

    /// `(0, (g, h))`
    pub fn pair(&self, g: ExtElement, h: ExtElement) -> GammaElement {
        GammaElement {
            r: GroupRingElement::zero(),
            g,
            h,
        }
    }

    /// The conjugators `y_i = (0, (x_i, x_i))` for `x_i` running over
    /// `1, 1, x, x, y, y, xy, xy`: the degree-8 identity of `P` with each
    /// conjugator repeated for the inner square.
    pub fn promislow_witnesses(&self) -> Vec<Labeled<GammaElement>> {
        ["1", "1", "x", "x", "y", "y", "x*y", "x*y"]
            .iter()
            .map(|w| {
                let e = self.p_elem(w);
                let word = parse_word(w)
                    .expect("literal word")
                    .rename(&|n: &str| format!("{n}1"))
                    .times(&parse_word(w).expect("literal word").rename(&|n: &str| format!("{n}2")));
                Labeled::new(self.pair(e.clone(), e), word)
            })
            .collect()
    }

    /// Three elements `sigma = (0, (1, h))` with `sign(h) = -1`.
    pub fn sign_reversers(&self) -> Vec<Labeled<GammaElement>> {
        ["x", "y", "x*y", "x^-1", "y^-1", "x^3", "y^3", "x*y^2", "y*x^2"]
            .iter()
            .filter(|w| self.sign(&self.p_elem(w)) < 0)
            .take(3)
            .map(|w| {
                let h = self.p_elem(w);
                let word = parse_word(w).expect("literal word").rename(&|n: &str| format!("{n}2"));
                Labeled::new(self.pair(self.p.identity(), h), word)
            })
            .collect()
    }

    /// `y_1, ..., y_m, y_1 sigma, ..., y_m sigma`, a positive identity of
    /// degree 16 with inner exponent 1.
    pub fn degree16_conjugators(&self, sigma: &GammaElement) -> Vec<GammaElement> {
        let ys: Vec<GammaElement> = self.promislow_witnesses().into_iter().map(|l| l.elem).collect();
        let shifted: Vec<GammaElement> = ys.iter().map(|y| self.mul(y, sigma)).collect();
        ys.into_iter().chain(shifted).collect()
    }
}

impl ComputableGroup for GammaGroup {
    type Elem = GammaElement;

    fn name(&self) -> String {
        "gamma".into()
    }

    fn identity(&self) -> GammaElement {
        self.pair(self.p.identity(), self.p.identity())
    }

    /// `(r1, (g1, h1)) (r2, (g2, h2)) = (r1 + sign(h1) g1 . r2, (g1 g2, h1 h2))`
    fn mul(&self, a: &GammaElement, b: &GammaElement) -> GammaElement {
        let mut r = a.r.clone();
        for (k, c) in self.act(&a.g, self.sign(&a.h), &b.r).0 {
            r.add_term(k, c);
        }
        GammaElement {
            r,
            g: self.p.mul(&a.g, &b.g),
            h: self.p.mul(&a.h, &b.h),
        }
    }

    fn inv(&self, a: &GammaElement) -> GammaElement {
        let gi = self.p.inv(&a.g);
        GammaElement {
            r: self.act(&gi, -self.sign(&a.h), &a.r),
            g: gi,
            h: self.p.inv(&a.h),
        }
    }

    fn generators(&self) -> Vec<(String, GammaElement)> {
        let id = self.p.identity();
        let (x, y) = (self.p_elem("x"), self.p_elem("y"));
        vec![
            (
                "t".into(),
                GammaElement {
                    r: GroupRingElement::basis(id.clone()),
                    g: id.clone(),
                    h: id.clone(),
                },
            ),
            ("x1".into(), self.pair(x.clone(), id.clone())),
            ("y1".into(), self.pair(y.clone(), id.clone())),
            ("x2".into(), self.pair(id.clone(), x)),
            ("y2".into(), self.pair(id, y)),
        ]
    }

    fn abelianization(&self) -> Result<&AbelianStructure> {
        Err(unsupported("the abelianization"))
    }

    fn pi(&self, _g: &GammaElement) -> Result<Vec<BigInt>> {
        Err(unsupported("the abelianization map"))
    }

    fn transversal(&self) -> Result<Vec<Labeled<GammaElement>>> {
        Err(unsupported("a lattice transversal"))
    }

    fn coset_index(&self, _g: &GammaElement) -> Result<usize> {
        Err(unsupported("a lattice transversal"))
    }

    fn torsion_free(&self) -> Option<bool> {
        None
    }

    fn element_json(&self, e: &GammaElement) -> Value {
        let r: Vec<Value> = e
            .r
            .support()
            .map(|(k, c)| json!([self.p.element_json(k), crate::json::bigint_json(c)]))
            .collect();
        json!({ "r": r, "g": self.p.element_json(&e.g), "h": self.p.element_json(&e.h) })
    }
}

fn unsupported(what: &str) -> GentorError {
    GentorError::Unsupported(format!("the group-ring backend `gamma` does not provide {what}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::verify_identity_sampled;
    use crate::group::random_element;
    use crate::rng::SplitMix64;

    #[test]
    fn sign_is_a_surjective_homomorphism() {
        let g = build_casolo_gamma();
        let p = g.base();
        let (x, y) = (g.p_elem("x"), g.p_elem("y"));
        assert!(g.sign(&x) < 0 || g.sign(&y) < 0);
        let mut rng = SplitMix64::new(4);
        for _ in 0..50 {
            let a = random_element(p, &mut rng, 8).elem;
            let b = random_element(p, &mut rng, 8).elem;
            assert_eq!(g.sign(&p.mul(&a, &b)), g.sign(&a) * g.sign(&b));
        }
        assert_eq!(g.sign_reversers().len(), 3);
    }

    #[test]
    fn action_case_and_identity() {
        let g = build_casolo_gamma();
        let mut rng = SplitMix64::new(8);
        for _ in 0..20 {
            let a = random_element(&g, &mut rng, 8).elem;
            assert_eq!(g.mul(&g.identity(), &a), a);
            assert_eq!(g.mul(&a, &g.inv(&a)), g.identity());
            let r = GammaElement {
                r: a.r.clone(),
                g: g.base().identity(),
                h: g.base().identity(),
            };
            let gh = g.pair(a.g.clone(), a.h.clone());
            let prod = g.mul(&gh, &r);
            assert_eq!(prod.r, g.act(&a.g, g.sign(&a.h), &a.r));
            assert_eq!((prod.g, prod.h), (a.g.clone(), a.h.clone()));
        }
    }

    #[test]
    fn degree16_identity() {
        let g = build_casolo_gamma();
        for sigma in g.sign_reversers() {
            let conj = g.degree16_conjugators(&sigma.elem);
            assert_eq!(conj.len(), 16);
            assert!(verify_identity_sampled(&g, 1, &conj, 100, 21).holds());
        }
        let ys: Vec<GammaElement> = g.promislow_witnesses().into_iter().map(|l| l.elem).collect();
        assert!(!verify_identity_sampled(&g, 1, &ys, 100, 21).holds());
    }

    #[test]
    fn witness_words_evaluate() {
        let g = build_casolo_gamma();
        for l in g.promislow_witnesses().into_iter().chain(g.sign_reversers()) {
            assert_eq!(eval_word(&g, &l.word).unwrap(), l.elem);
        }
    }
}
