//! Generalized torsion over any [`ComputableGroup`].
//!
//! In an abelian-by-finite group with free abelian normal subgroup `A` of
//! finite index, `g` is generalized torsion iff `pi(g)` has finite order in
//! `G^ab`. When `G^ab` is finite every element is, and
//! `exp(G^ab) <= exp*(G) <= |G/A|`.

mod identity;
mod search;
mod witness;

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{GentorError, Result};
use crate::group::{abelian_order, lattice_index, ComputableGroup};
use crate::intlin::Order;

pub use identity::{
    positive_identity_witnesses, verify_identity_sampled, verify_identity_universal, PositiveIdentity,
    SampleReport, SAMPLE_WORD_LENGTH,
};
pub use search::{gen_order_search, gen_order_search_with, SearchResult};
pub use witness::{certificate_json, verify_certificate_json, witness_construct, WitnessCertificate};

pub fn is_generalized_torsion<G: ComputableGroup + ?Sized>(group: &G, g: &G::Elem) -> Result<bool> {
    Ok(abelian_order(group, g)?.is_finite())
}

/// `T*(G) = G`, i.e. `G^ab` is finite.
pub fn is_fully_generalized_torsion<G: ComputableGroup + ?Sized>(group: &G) -> Result<bool> {
    Ok(group.abelianization()?.is_finite())
}

/// The order of `pi(g)`, which divides the generalized order of `g`.
pub fn gen_order_lower_bound<G: ComputableGroup + ?Sized>(group: &G, g: &G::Elem) -> Result<BigInt> {
    match abelian_order(group, g)? {
        Order::Finite(k) => Ok(k),
        Order::Infinite => Err(GentorError::NotGeneralizedTorsion(
            "pi(g) has infinite order".into(),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentBounds {
    pub lower: BigInt,
    pub upper: BigInt,
    pub exact: bool,
}

impl fmt::Display for ExponentBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lower={} upper={} exact={}", self.lower, self.upper, self.exact)
    }
}

/// `(exp(G^ab), |G/A|)`. Exactness is only claimed when the two agree.
pub fn gen_exponent_bounds<G: ComputableGroup + ?Sized>(group: &G) -> Result<ExponentBounds> {
    let ab = group.abelianization()?;
    if !ab.is_finite() {
        return Err(GentorError::InfiniteAbelianization);
    }
    let lower = ab.torsion_exponent();
    let upper = BigInt::from(lattice_index(group)?);
    if lower > upper {
        return Err(GentorError::TheoremViolation(format!(
            "exp(G^ab) = {lower} exceeds |G/A| = {upper}"
        )));
    }
    Ok(ExponentBounds {
        exact: lower == upper,
        lower,
        upper,
    })
}
