use serde_json::{json, Value};

use super::is_generalized_torsion;
use crate::error::{GentorError, Result};
use crate::group::{coset_order, in_lattice, transversal_mod, ComputableGroup, Labeled};
use crate::word::{eval_word, parse_word};

/// Conjugators `x_1, ..., x_k` with `g^{x_1} ... g^{x_k} = 1`.
#[derive(Clone, Debug)]
pub struct WitnessCertificate<E> {
    pub base: Labeled<E>,
    pub conjugators: Vec<Labeled<E>>,
    pub length: usize,
    pub verified: bool,
}

fn product_of_conjugates<G: ComputableGroup + ?Sized>(
    group: &G,
    g: &G::Elem,
    conjugators: impl IntoIterator<Item = G::Elem>,
) -> G::Elem {
    conjugators
        .into_iter()
        .fold(group.identity(), |acc, x| group.mul(&acc, &group.conj(g, &x)))
}

/// Builds a certificate of length `|G/A|` (or `k |G/A|` with `k` the order
/// of `gA` when `G^ab` is infinite) and checks it by multiplication.
///
/// * `g` in `A`: the transversal of `A`; the norm of `g` is a central
///   generalized torsion element of `A`, hence trivial.
/// * otherwise, with `n` the order of `gA` and `S` a transversal of `A<g>`:
///   the conjugators `g^i s`, so that the product is `prod_s (g^n)^s`.
/// * `G^ab` infinite: each conjugator of the certificate for `g^k` repeated
///   `k` times, since `(g^k)^x = (g^x)^k`.
pub fn witness_construct<G: ComputableGroup + ?Sized>(
    group: &G,
    base: &Labeled<G::Elem>,
) -> Result<WitnessCertificate<G::Elem>> {
    let g = &base.elem;
    if !is_generalized_torsion(group, g)? {
        return Err(GentorError::NotGeneralizedTorsion(format!(
            "{} has image of infinite order in G^ab",
            base.word
        )));
    }
    let conjugators = if in_lattice(group, g)? {
        group.transversal()?
    } else if group.abelianization()?.is_finite() {
        let n = coset_order(group, g)?;
        let mut out = Vec::new();
        for s in transversal_mod(group, g)? {
            for i in 0..n as i64 {
                let elem = group.mul(&group.pow(g, i), &s.elem);
                out.push(Labeled::new(elem, base.word.power(i).times(&s.word)));
            }
        }
        out
    } else {
        let k = coset_order(group, g)?;
        let mut out = Vec::new();
        for t in group.transversal()? {
            out.extend(std::iter::repeat_n(t, k as usize));
        }
        out
    };
    let product = product_of_conjugates(group, g, conjugators.iter().map(|c| c.elem.clone()));
    if product != group.identity() {
        return Err(GentorError::TheoremViolation(format!(
            "constructed certificate for {} does not multiply to the identity",
            base.word
        )));
    }
    Ok(WitnessCertificate {
        base: base.clone(),
        length: conjugators.len(),
        conjugators,
        verified: true,
    })
}

pub fn certificate_json<G: ComputableGroup + ?Sized>(
    group: &G,
    cert: &WitnessCertificate<G::Elem>,
) -> Value {
    json!({
        "group": group.name(),
        "base_word": cert.base.word.to_string(),
        "conjugator_words": cert.conjugators.iter().map(|c| c.word.to_string()).collect::<Vec<_>>(),
        "length": cert.length,
        "verified": cert.verified,
        "base_coordinates": group.element_json(&cert.base.elem),
        "conjugator_coordinates": cert.conjugators.iter().map(|c| group.element_json(&c.elem)).collect::<Vec<_>>(),
    })
}

/// Re-evaluates a certificate read back from JSON: parses the words,
/// multiplies out the conjugates and compares with the identity.
pub fn verify_certificate_json<G: ComputableGroup + ?Sized>(group: &G, cert: &Value) -> Result<bool> {
    let field = |name: &str| {
        cert.get(name)
            .ok_or_else(|| GentorError::InvalidInput(format!("certificate lacks `{name}`")))
    };
    let base_word = field("base_word")?
        .as_str()
        .ok_or_else(|| GentorError::InvalidInput("`base_word` must be a string".into()))?;
    let words = field("conjugator_words")?
        .as_array()
        .ok_or_else(|| GentorError::InvalidInput("`conjugator_words` must be an array".into()))?;
    let length = field("length")?
        .as_u64()
        .ok_or_else(|| GentorError::InvalidInput("`length` must be a nonnegative integer".into()))?;
    if length as usize != words.len() || words.is_empty() {
        return Ok(false);
    }
    let g = eval_word(group, &parse_word(base_word)?)?;
    let mut conjugators = Vec::with_capacity(words.len());
    for w in words {
        let text = w
            .as_str()
            .ok_or_else(|| GentorError::InvalidInput("conjugator words must be strings".into()))?;
        conjugators.push(eval_word(group, &parse_word(text)?)?);
    }
    Ok(product_of_conjugates(group, &g, conjugators) == group.identity())
}
