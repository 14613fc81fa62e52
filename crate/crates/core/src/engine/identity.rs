use serde::Serialize;

use crate::error::{GentorError, Result};
use crate::group::{holonomy_exponent, random_element, ComputableGroup, Labeled};
use crate::rng::SplitMix64;
use crate::word::Word;

/// Maximal word length of sampled elements.
pub const SAMPLE_WORD_LENGTH: usize = 12;

/// A positive identity `(g^k)^{x_1} ... (g^k)^{x_m} = 1` of degree `k m`.
#[derive(Clone, Debug)]
pub struct PositiveIdentity<E> {
    pub k: u64,
    pub conjugators: Vec<Labeled<E>>,
}

impl<E> PositiveIdentity<E> {
    pub fn degree(&self) -> u64 {
        self.k * self.conjugators.len() as u64
    }
}

/// `k = exp(G/A)` and the transversal of `A`: every `g^k` lies in `A`, and the
/// norm of a generalized torsion element of `A` vanishes.
pub fn positive_identity_witnesses<G: ComputableGroup + ?Sized>(
    group: &G,
) -> Result<PositiveIdentity<G::Elem>> {
    if !group.abelianization()?.is_finite() {
        return Err(GentorError::InfiniteAbelianization);
    }
    Ok(PositiveIdentity {
        k: holonomy_exponent(group)?,
        conjugators: group.transversal()?,
    })
}

/// Checks the identity for all elements at once. Only backends with a
/// symbolic model support this.
pub fn verify_identity_universal<G: ComputableGroup + ?Sized>(
    group: &G,
    k: u64,
    conjugators: &[G::Elem],
) -> Result<bool> {
    let k = i64::try_from(k).map_err(|_| GentorError::InvalidInput("exponent too large".into()))?;
    group.verify_identity_symbolic(k, conjugators)
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleReport {
    pub seed: u64,
    pub samples: usize,
    pub failures: usize,
    /// Word of the first element violating the identity.
    pub counterexample: Option<String>,
}

impl SampleReport {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

/// Evaluates the identity on `samples` random words of length at most
/// [`SAMPLE_WORD_LENGTH`] drawn from a [`SplitMix64`] stream seeded with `seed`.
pub fn verify_identity_sampled<G: ComputableGroup + ?Sized>(
    group: &G,
    k: u64,
    conjugators: &[G::Elem],
    samples: usize,
    seed: u64,
) -> SampleReport {
    let mut rng = SplitMix64::new(seed);
    let id = group.identity();
    let mut failures = 0;
    let mut counterexample: Option<Word> = None;
    for _ in 0..samples {
        let g = random_element(group, &mut rng, SAMPLE_WORD_LENGTH);
        let h = group.pow(&g.elem, k as i64);
        let product = conjugators
            .iter()
            .fold(id.clone(), |acc, x| group.mul(&acc, &group.conj(&h, x)));
        if product != id {
            failures += 1;
            counterexample.get_or_insert(g.word);
        }
    }
    SampleReport {
        seed,
        samples,
        failures,
        counterexample: counterexample.map(|w| w.to_string()),
    }
}
