use std::collections::{HashMap, HashSet};

use num_traits::ToPrimitive;

use super::gen_order_lower_bound;
use crate::error::{GentorError, Result};
use crate::group::{ComputableGroup, Labeled};
use crate::word::Word;

#[derive(Clone, Debug)]
pub struct SearchResult<E> {
    pub k: usize,
    pub conjugators: Vec<Labeled<E>>,
}

/// Elements of word length at most `radius`, each with its first word in
/// breadth-first order over `g_1, g_1^-1, g_2, g_2^-1, ...`.
fn ball<G: ComputableGroup + ?Sized>(group: &G, radius: usize) -> Vec<Labeled<G::Elem>> {
    let mut steps = Vec::new();
    for (name, g) in group.generators() {
        steps.push((Word::gen(name.clone()), g.clone()));
        steps.push((Word::gen(name).power(-1), group.inv(&g)));
    }
    let mut seen = HashSet::new();
    let id = group.identity();
    seen.insert(id.clone());
    let mut out = vec![Labeled::new(id, Word::Identity)];
    let mut frontier = 0..1;
    for _ in 0..radius {
        let start = out.len();
        for i in frontier.clone() {
            for (w, s) in &steps {
                let e = group.mul(&out[i].elem, s);
                if seen.insert(e.clone()) {
                    let word = out[i].word.times(w);
                    out.push(Labeled::new(e, word));
                }
            }
        }
        frontier = start..out.len();
    }
    out
}

/// Searches for the least `k <= max_k` such that a product of `k` conjugates
/// `g^x`, `x` in the ball of radius `radius`, is trivial.
///
/// Levels are deduplicated by element and only levels divisible by the order
/// of `pi(g)` may terminate. Ties are broken toward the lexicographically
/// least sequence of conjugate indices, so the answer is deterministic.
/// Absence does not bound the generalized order unless the conjugacy class
/// of `g` is inside the ball.
pub fn gen_order_search<G: ComputableGroup + ?Sized>(
    group: &G,
    g: &Labeled<G::Elem>,
    max_k: usize,
    radius: usize,
) -> Result<Option<SearchResult<G::Elem>>> {
    gen_order_search_with(group, g, max_k, radius, true)
}

/// [`gen_order_search`] with the divisibility pruning switchable.
pub fn gen_order_search_with<G: ComputableGroup + ?Sized>(
    group: &G,
    g: &Labeled<G::Elem>,
    max_k: usize,
    radius: usize,
    prune: bool,
) -> Result<Option<SearchResult<G::Elem>>> {
    let step = if prune {
        match gen_order_lower_bound(group, &g.elem) {
            Ok(l) => l.to_usize().unwrap_or(usize::MAX),
            Err(GentorError::NotGeneralizedTorsion(_)) => return Ok(None),
            Err(GentorError::Unsupported(_)) => 1,
            Err(e) => return Err(e),
        }
    } else {
        1
    };

    let mut conjugates: Vec<(G::Elem, Labeled<G::Elem>)> = Vec::new();
    let mut seen = HashSet::new();
    for x in ball(group, radius) {
        let c = group.conj(&g.elem, &x.elem);
        if seen.insert(c.clone()) {
            conjugates.push((c, x));
        }
    }

    let id = group.identity();
    // level[j] holds (product, parent index in level j-1, conjugate index)
    let mut levels: Vec<Vec<(G::Elem, usize, usize)>> = vec![vec![(id.clone(), 0, 0)]];
    for k in 1..=max_k {
        let prev = &levels[k - 1];
        let mut index: HashMap<G::Elem, usize> = HashMap::new();
        let mut next = Vec::new();
        for (pi, (p, _, _)) in prev.iter().enumerate() {
            for (ci, (c, _)) in conjugates.iter().enumerate() {
                let e = group.mul(p, c);
                if !index.contains_key(&e) {
                    index.insert(e.clone(), next.len());
                    next.push((e, pi, ci));
                }
            }
        }
        let hit = (k % step == 0).then(|| index.get(&id).copied()).flatten();
        levels.push(next);
        if let Some(mut at) = hit {
            let mut chosen = Vec::with_capacity(k);
            for j in (1..=k).rev() {
                let (_, parent, ci) = &levels[j][at];
                chosen.push(conjugates[*ci].1.clone());
                at = *parent;
            }
            chosen.reverse();
            return Ok(Some(SearchResult { k, conjugators: chosen }));
        }
    }
    Ok(None)
}
