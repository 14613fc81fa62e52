use num_bigint::BigInt;
use num_traits::Zero;
use serde::Deserialize;

use crate::error::{GentorError, Result};
use crate::extgroup::{validate_extension, ExtElement, ExtGroup, ExtensionSpec};
use crate::intlin::IntMatrix;

/// JSON input `{"q_table": [[...], ...]}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub q_table: Vec<Vec<usize>>,
}

pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// Checks that `table` is a group table with identity 0, reusing the
/// extension validator on the trivial lattice.
pub(crate) fn check_table(table: &[Vec<usize>]) -> Result<()> {
    let s = table.len();
    let spec = ExtensionSpec {
        q_size: s,
        q_table: table.to_vec(),
        n: 0,
        phi: vec![IntMatrix::zeros(0, 0); s],
        coc: vec![vec![Vec::new(); s]; s],
        generators: Vec::new(),
    };
    match validate_extension(&spec).violations.first() {
        None if s > 0 => Ok(()),
        None => Err(GentorError::InvalidInput("empty multiplication table".into())),
        Some(v) => Err(GentorError::InvalidInput(format!("not a group table: {v}"))),
    }
}

/// Greedy generating set: scan `1..|Q|` and keep each element outside the
/// subgroup generated so far.
pub(crate) fn greedy_generators(table: &[Vec<usize>]) -> Vec<usize> {
    let s = table.len();
    let mut inside = vec![false; s];
    inside[0] = true;
    let mut gens = Vec::new();
    for q in 1..s {
        if inside[q] {
            continue;
        }
        gens.push(q);
        let mut stack: Vec<usize> = (0..s).filter(|&i| inside[i]).collect();
        while let Some(a) = stack.pop() {
            for &g in &gens {
                let b = table[a][g];
                if !inside[b] {
                    inside[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    gens
}

/// `Z wr Q = ZQ x| Q`, with `Q` acting by right translation of the basis
/// `e_s`. Generators: `t = e_0` and `s1, s2, ...` for a greedy generating set of `Q`.
pub fn build_wreath(table: &[Vec<usize>]) -> Result<ExtensionSpec> {
    check_table(table)?;
    let s = table.len();
    let phi = (0..s)
        .map(|q| IntMatrix::from_fn(s, s, |r, c| BigInt::from(u8::from(table[c][q] == r))))
        .collect();
    let zero = vec![BigInt::zero(); s];
    let mut t = zero.clone();
    t[0] = BigInt::from(1);
    let mut generators = vec![("t".to_string(), ExtElement::translation(t))];
    for (i, q) in greedy_generators(table).into_iter().enumerate() {
        generators.push((format!("s{}", i + 1), ExtElement::new(q, zero.clone())));
    }
    Ok(ExtensionSpec {
        q_size: s,
        q_table: table.to_vec(),
        n: s,
        phi,
        coc: vec![vec![zero; s]; s],
        generators,
    })
}

pub fn wreath(name: impl Into<String>, table: &[Vec<usize>]) -> Result<ExtGroup> {
    ExtGroup::new(name, build_wreath(table)?)
}

/// `epsilon(a)`, the coefficient sum.
pub fn augmentation(a: &[BigInt]) -> BigInt {
    a.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::is_generalized_torsion;
    use crate::group::ComputableGroup;
    use crate::intlin::bigvec;

    #[test]
    fn z_wr_c2() {
        let g = wreath("wreath", &cyclic_table(2)).unwrap();
        let ab = g.abelianization().unwrap();
        assert_eq!((ab.invariant_factors.clone(), ab.free_rank), (bigvec(&[2]), 1));
        let tor = ExtElement::new(1, bigvec(&[3, -3]));
        assert!(is_generalized_torsion(&g, &tor).unwrap());
        let not = ExtElement::new(1, bigvec(&[1, 1]));
        assert!(!is_generalized_torsion(&g, &not).unwrap());
        assert_eq!(augmentation(&not.a), BigInt::from(2));
    }

    #[test]
    fn klein_four_generators() {
        let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        assert_eq!(greedy_generators(&table), vec![1, 2]);
        let g = wreath("w", &table).unwrap();
        assert_eq!(g.abelianization().unwrap().free_rank, 1);
        assert!(check_table(&[vec![0, 1], vec![0, 1]]).is_err());
    }
}
