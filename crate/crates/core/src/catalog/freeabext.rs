//! `F / [R, R]` for a free group `F` of rank `r` mapping onto a finite group
//! `Q` with kernel `R`, via abelianized Reidemeister-Schreier rewriting.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Deserialize;

use super::wreath::check_table;
use crate::error::{GentorError, Result};
use crate::extgroup::{ExtElement, ExtGroup, ExtensionSpec};
use crate::intlin::IntMatrix;

/// JSON input `{"rank": r, "q_table": [...], "images": [...], "names": [...]}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FreeAbelExtInput {
    pub rank: usize,
    pub q_table: Vec<Vec<usize>>,
    pub images: Vec<usize>,
    #[serde(default)]
    pub names: Option<Vec<String>>,
}

/// A letter `x_j^{+-1}` of a word in `F`.
type Letter = (usize, bool);

struct Schreier<'a> {
    table: &'a [Vec<usize>],
    images: &'a [usize],
    inverse: Vec<usize>,
    /// `u_q`, the tree word reaching coset `q`.
    reps: Vec<Vec<Letter>>,
    /// Lattice coordinate of the Schreier generator `(q, j)`, `None` on tree edges.
    basis: Vec<Vec<Option<usize>>>,
    rank: usize,
}

impl<'a> Schreier<'a> {
    fn new(table: &'a [Vec<usize>], images: &'a [usize]) -> Result<Self> {
        let s = table.len();
        let inverse = (0..s)
            .map(|q| (0..s).find(|&r| table[q][r] == 0).expect("validated table"))
            .collect();
        let mut reps: Vec<Option<Vec<Letter>>> = vec![None; s];
        let mut tree = vec![vec![false; images.len()]; s];
        reps[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0]);
        while let Some(q) = queue.pop_front() {
            for (j, &img) in images.iter().enumerate() {
                let t = table[q][img];
                if reps[t].is_none() {
                    let mut w = reps[q].clone().expect("queued cosets are reached");
                    w.push((j, true));
                    reps[t] = Some(w);
                    tree[q][j] = true;
                    queue.push_back(t);
                }
            }
        }
        let reps: Vec<Vec<Letter>> = reps
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| GentorError::InvalidInput("the images do not generate Q".into()))?;
        let mut rank = 0;
        let basis = tree
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&on_tree| {
                        (!on_tree).then(|| {
                            rank += 1;
                            rank - 1
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(Schreier {
            table,
            images,
            inverse,
            reps,
            basis,
            rank,
        })
    }

    fn image(&self, w: &[Letter]) -> usize {
        w.iter().fold(0, |q, &(j, pos)| {
            let g = if pos { self.images[j] } else { self.inverse[self.images[j]] };
            self.table[q][g]
        })
    }

    /// Abelianized rewriting of a word in `R` into Schreier generators.
    fn rewrite(&self, w: &[Letter]) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.rank];
        let mut q = 0;
        for &(j, pos) in w {
            if pos {
                if let Some(k) = self.basis[q][j] {
                    v[k] += 1;
                }
                q = self.table[q][self.images[j]];
            } else {
                q = self.table[q][self.inverse[self.images[j]]];
                if let Some(k) = self.basis[q][j] {
                    v[k] -= 1;
                }
            }
        }
        debug_assert_eq!(q, 0, "rewritten word must lie in R");
        v
    }
}

fn inverse_word(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|&(j, pos)| (j, !pos)).collect()
}

fn concat(parts: &[&[Letter]]) -> Vec<Letter> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// Element `(q, a)` stands for `u_q t^a`, so
/// `phi(q) e_k = ab(u_q^-1 s_k u_q)` and `coc(q, q') = ab(u_{qq'}^-1 u_q u_q')`.
pub fn build_free_abelianized_extension(input: &FreeAbelExtInput) -> Result<ExtensionSpec> {
    check_table(&input.q_table)?;
    let s = input.q_table.len();
    let r = input.rank;
    if input.images.len() != r {
        return Err(GentorError::InvalidInput(format!(
            "{} images given for rank {r}",
            input.images.len()
        )));
    }
    if let Some(&bad) = input.images.iter().find(|&&q| q >= s) {
        return Err(GentorError::InvalidInput(format!("image {bad} is not in Q")));
    }
    let names = match &input.names {
        Some(n) if n.len() != r => {
            return Err(GentorError::InvalidInput("one name per free generator is required".into()))
        }
        Some(n) => n.clone(),
        None => (1..=r).map(|i| format!("x{i}")).collect(),
    };
    let sch = Schreier::new(&input.q_table, &input.images)?;
    let n = sch.rank;
    if n != s * r.saturating_sub(1) + 1 && r > 0 {
        return Err(GentorError::TheoremViolation(format!(
            "Schreier rank {n} differs from |Q|(r - 1) + 1"
        )));
    }

    // Schreier generator words, in lattice-coordinate order.
    let mut gens: Vec<Vec<Letter>> = vec![Vec::new(); n];
    for q in 0..s {
        for j in 0..r {
            if let Some(k) = sch.basis[q][j] {
                let t = input.q_table[q][input.images[j]];
                gens[k] = concat(&[&sch.reps[q], &[(j, true)], &inverse_word(&sch.reps[t])]);
            }
        }
    }

    let mut phi = Vec::with_capacity(s);
    for q in 0..s {
        let u = &sch.reps[q];
        let uinv = inverse_word(u);
        let mut m = IntMatrix::zeros(n, n);
        for (k, g) in gens.iter().enumerate() {
            let col = sch.rewrite(&concat(&[&uinv, g, u]));
            for (i, c) in col.into_iter().enumerate() {
                m[(i, k)] = c;
            }
        }
        phi.push(m);
    }
    let coc = (0..s)
        .map(|q| {
            (0..s)
                .map(|p| {
                    let qp = input.q_table[q][p];
                    sch.rewrite(&concat(&[&inverse_word(&sch.reps[qp]), &sch.reps[q], &sch.reps[p]]))
                })
                .collect()
        })
        .collect();
    let generators = (0..r)
        .map(|j| {
            let q = input.images[j];
            let w = concat(&[&inverse_word(&sch.reps[q]), &[(j, true)]]);
            debug_assert_eq!(sch.image(&w), 0);
            (names[j].clone(), ExtElement::new(q, sch.rewrite(&w)))
        })
        .collect();
    Ok(ExtensionSpec {
        q_size: s,
        q_table: input.q_table.clone(),
        n,
        phi,
        coc,
        generators,
    })
}

pub fn free_abelianized_extension(name: impl Into<String>, input: &FreeAbelExtInput) -> Result<ExtGroup> {
    ExtGroup::new(name, build_free_abelianized_extension(input)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::wreath::cyclic_table;
    use crate::engine::is_generalized_torsion;
    use crate::extgroup::validate_extension;
    use crate::group::ComputableGroup;
    use crate::word::{eval_word, parse_word};

    fn input(rank: usize, table: Vec<Vec<usize>>, images: Vec<usize>) -> FreeAbelExtInput {
        FreeAbelExtInput {
            rank,
            q_table: table,
            images,
            names: None,
        }
    }

    fn klein_four() -> Vec<Vec<usize>> {
        (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect()
    }

    #[test]
    fn ranks() {
        let one = build_free_abelianized_extension(&input(1, cyclic_table(2), vec![1])).unwrap();
        assert_eq!(one.n, 1);
        let two = build_free_abelianized_extension(&input(2, cyclic_table(2), vec![1, 1])).unwrap();
        assert_eq!(two.n, 3);
        let v4 = build_free_abelianized_extension(&input(2, klein_four(), vec![1, 2])).unwrap();
        assert_eq!(v4.n, 5);
        assert!(validate_extension(&v4).is_valid());
        let c3 = build_free_abelianized_extension(&input(3, cyclic_table(3), vec![1, 0, 2])).unwrap();
        assert_eq!(c3.n, 7);
        assert!(validate_extension(&c3).is_valid());
    }

    #[test]
    fn abelianization_is_free_of_rank_r() {
        for (r, table, images) in [
            (1, cyclic_table(2), vec![1]),
            (2, cyclic_table(2), vec![1, 1]),
            (2, klein_four(), vec![1, 2]),
            (3, cyclic_table(3), vec![1, 0, 2]),
        ] {
            let g = free_abelianized_extension("f", &input(r, table, images)).unwrap();
            let ab = g.abelianization().unwrap();
            assert!(ab.invariant_factors.is_empty());
            assert_eq!(ab.free_rank, r);
        }
    }

    #[test]
    fn commutators_are_generalized_torsion() {
        let g = free_abelianized_extension("f", &input(2, cyclic_table(2), vec![1, 1])).unwrap();
        let c = eval_word(&g, &parse_word("[x1,x2]*[x2,x1^3]^x1").unwrap()).unwrap();
        assert!(is_generalized_torsion(&g, &c).unwrap());
        let x = eval_word(&g, &parse_word("x1*x2^-1").unwrap()).unwrap();
        assert!(!is_generalized_torsion(&g, &x).unwrap());
        assert_eq!(g.torsion_free(), Some(true));
    }

    #[test]
    fn bad_inputs() {
        assert!(build_free_abelianized_extension(&input(1, klein_four(), vec![1])).is_err());
        assert!(build_free_abelianized_extension(&input(2, klein_four(), vec![1])).is_err());
        assert!(build_free_abelianized_extension(&input(1, cyclic_table(2), vec![5])).is_err());
    }
}
