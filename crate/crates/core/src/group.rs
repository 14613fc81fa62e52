//! The capability contract every backend implements, plus the generic
//! machinery derived from it (cosets of the lattice, random elements).

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{GentorError, Result};
use crate::intlin::{AbelianStructure, Order};
use crate::rng::SplitMix64;
use crate::word::Word;

/// A group element paired with a word over the group's generators that
/// evaluates to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeled<E> {
    pub elem: E,
    pub word: Word,
}

impl<E> Labeled<E> {
    pub fn new(elem: E, word: Word) -> Self {
        Labeled { elem, word }
    }
}

/// An abelian-by-finite group `G` with a free abelian normal subgroup `A` of
/// finite index, exposed through exact arithmetic.
///
/// Backends that cannot supply the abelianization or the lattice (the Casolo
/// group) return [`GentorError::Unsupported`] from those methods.
pub trait ComputableGroup {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn name(&self) -> String;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// `x^-1 g x`
    fn conj(&self, g: &Self::Elem, x: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(&self.inv(x), g), x)
    }

    fn pow(&self, g: &Self::Elem, k: i64) -> Self::Elem {
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

    fn generators(&self) -> Vec<(String, Self::Elem)>;

    /// Structure of `G^ab`, as a cokernel over the coordinates returned by [`Self::pi`].
    fn abelianization(&self) -> Result<&AbelianStructure>;

    /// Abelianization map, as a vector in the generator coordinates of [`Self::abelianization`].
    fn pi(&self, g: &Self::Elem) -> Result<Vec<BigInt>>;

    /// Representatives of `G/A`. Entry 0 is the identity and entry `i` lies
    /// in the coset with [`Self::coset_index`] `i`.
    fn transversal(&self) -> Result<Vec<Labeled<Self::Elem>>>;

    /// Index of the coset `gA` in [`Self::transversal`].
    fn coset_index(&self, g: &Self::Elem) -> Result<usize>;

    /// `None` when the backend has no decision procedure.
    fn torsion_free(&self) -> Option<bool>;

    fn center_rank(&self) -> Option<usize> {
        None
    }

    fn hirsch_length(&self) -> Option<usize> {
        None
    }

    /// Raw canonical coordinates, for certificates.
    fn element_json(&self, g: &Self::Elem) -> serde_json::Value;

    /// Symbolic verification of a positive identity on all elements.
    /// Backends without a symbolic model return `Unsupported`.
    fn verify_identity_symbolic(&self, _k: i64, _conjugators: &[Self::Elem]) -> Result<bool> {
        Err(GentorError::Unsupported(format!(
            "universal identity verification needs an extension backend, `{}` is not one",
            self.name()
        )))
    }
}

/// `|G/A|`
pub fn lattice_index<G: ComputableGroup + ?Sized>(g: &G) -> Result<usize> {
    Ok(g.transversal()?.len())
}

pub fn in_lattice<G: ComputableGroup + ?Sized>(group: &G, g: &G::Elem) -> Result<bool> {
    Ok(group.coset_index(g)? == 0)
}

/// Order of `gA` in `G/A`.
pub fn coset_order<G: ComputableGroup + ?Sized>(group: &G, g: &G::Elem) -> Result<u64> {
    let index = lattice_index(group)? as u64;
    let mut acc = g.clone();
    for k in 1..=index {
        if group.coset_index(&acc)? == 0 {
            return Ok(k);
        }
        acc = group.mul(&acc, g);
    }
    Err(GentorError::TheoremViolation(
        "coset order exceeds the index of the lattice".into(),
    ))
}

/// `exp(G/A)`: the lcm of the orders of the transversal elements modulo `A`.
pub fn holonomy_exponent<G: ComputableGroup + ?Sized>(group: &G) -> Result<u64> {
    let mut e = 1u64;
    for t in group.transversal()? {
        e = e.lcm(&coset_order(group, &t.elem)?);
    }
    Ok(e)
}

/// Right coset representatives `S` of `A<g>` in `G`, so that
/// `{g^i s : 0 <= i < n, s in S}` is a transversal of `A` (`n` the order of `gA`).
pub fn transversal_mod<G: ComputableGroup + ?Sized>(
    group: &G,
    g: &G::Elem,
) -> Result<Vec<Labeled<G::Elem>>> {
    let transversal = group.transversal()?;
    let n = coset_order(group, g)?;
    let mut covered = HashSet::new();
    let mut reps = Vec::new();
    for t in transversal {
        let idx = group.coset_index(&t.elem)?;
        if covered.contains(&idx) {
            continue;
        }
        let mut h = t.elem.clone();
        for _ in 0..n {
            covered.insert(group.coset_index(&h)?);
            h = group.mul(g, &h);
        }
        reps.push(t);
    }
    Ok(reps)
}

/// Order of `pi(g)` in `G^ab`.
pub fn abelian_order<G: ComputableGroup + ?Sized>(group: &G, g: &G::Elem) -> Result<Order> {
    let v = group.pi(g)?;
    group.abelianization()?.element_order(&v)
}

/// A pseudorandom word of length at most `max_len` over the generators and
/// their inverses, together with its value.
pub fn random_element<G: ComputableGroup + ?Sized>(
    group: &G,
    rng: &mut SplitMix64,
    max_len: usize,
) -> Labeled<G::Elem> {
    let gens = group.generators();
    let len = rng.below(max_len as u64 + 1) as usize;
    let mut elem = group.identity();
    let mut word = Word::Identity;
    for _ in 0..len {
        let i = rng.below(2 * gens.len() as u64) as usize;
        let (name, g) = &gens[i / 2];
        if i.is_multiple_of(2) {
            elem = group.mul(&elem, g);
            word = word.times(&Word::gen(name.clone()));
        } else {
            elem = group.mul(&elem, &group.inv(g));
            word = word.times(&Word::gen(name.clone()).power(-1));
        }
    }
    Labeled { elem, word }
}

/// Breadth-first word transversal of a finite quotient, given as a map from
/// elements to coset labels in `0..size`. Returns one shortest word per
/// label, with the identity first.
pub(crate) fn bfs_transversal<G: ComputableGroup + ?Sized>(
    group: &G,
    size: usize,
    label: impl Fn(&G::Elem) -> usize,
) -> Option<Vec<Labeled<G::Elem>>> {
    let gens = group.generators();
    let mut found: Vec<Option<Labeled<G::Elem>>> = vec![None; size];
    let id = group.identity();
    let start = label(&id);
    found[start] = Some(Labeled::new(id, Word::Identity));
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for c in frontier {
            let cur = found[c].clone().expect("frontier entries are filled");
            for (name, g) in &gens {
                let e = group.mul(&cur.elem, g);
                let l = label(&e);
                if found[l].is_none() {
                    found[l] = Some(Labeled::new(e, cur.word.times(&Word::gen(name.clone()))));
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    found.into_iter().collect()
}
