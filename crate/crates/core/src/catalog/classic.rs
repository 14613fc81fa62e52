//! The small crystallographic examples: the infinite dihedral group, the
//! Klein bottle group and the Promislow (Hantzsche-Wendt) group.

use num_bigint::BigInt;

use crate::extgroup::{ExtElement, ExtGroup, ExtensionSpec};
use crate::intlin::{bigvec, IntMatrix};

fn c2_table() -> Vec<Vec<usize>> {
    vec![vec![0, 1], vec![1, 0]]
}

fn v(xs: &[i64]) -> Vec<BigInt> {
    bigvec(xs)
}

fn diag(xs: &[i64]) -> IntMatrix {
    IntMatrix::diagonal(&bigvec(xs))
}

/// `D_inf = Z x| C_2`: the reflection `s = (1, 0)` and the translation `t = (0, 1)`.
pub fn build_dihedral_infinite() -> ExtensionSpec {
    ExtensionSpec {
        q_size: 2,
        q_table: c2_table(),
        n: 1,
        phi: vec![diag(&[1]), diag(&[-1])],
        coc: vec![vec![v(&[0]), v(&[0])], vec![v(&[0]), v(&[0])]],
        generators: vec![
            ("s".into(), ExtElement::new(1, v(&[0]))),
            ("t".into(), ExtElement::new(0, v(&[1]))),
        ],
    }
}

/// `<x, y | x^y = x^-1>`: `x = (0, e_1)`, `y = (1, 0)` with `y^2 = t_2`.
pub fn build_klein_bottle() -> ExtensionSpec {
    ExtensionSpec {
        q_size: 2,
        q_table: c2_table(),
        n: 2,
        phi: vec![diag(&[1, 1]), diag(&[-1, 1])],
        coc: vec![vec![v(&[0, 0]), v(&[0, 0])], vec![v(&[0, 0]), v(&[0, 1])]],
        generators: vec![
            ("x".into(), ExtElement::new(0, v(&[1, 0]))),
            ("y".into(), ExtElement::new(1, v(&[0, 0]))),
        ],
    }
}

/// `P = <x, y | (x^2)^y = x^-2, (y^2)^x = y^-2>` as an extension of the
/// lattice `<x^2, y^2, (xy)^2>` by `C_2 x C_2 = {1, a, b, ab}`.
///
/// Coset representatives are `r_a = x`, `r_b = y`, `r_ab = xy`; the factor
/// set was read off the affine model `x = (diag(1,-1,-1), (1/2,1/2,0))`,
/// `y = (diag(-1,1,-1), (0,1/2,1/2))` in the lattice basis
/// `x^2, y^2, (xy)^2`.
pub fn build_promislow() -> ExtensionSpec {
    let z = v(&[0, 0, 0]);
    let coc = vec![
        vec![z.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), v(&[1, 0, 0]), z.clone(), v(&[-1, 0, 0])],
        vec![z.clone(), v(&[1, -1, -1]), v(&[0, 1, 0]), v(&[-1, 0, 1])],
        vec![z.clone(), v(&[0, -1, -1]), v(&[0, 1, 0]), v(&[0, 0, 1])],
    ];
    ExtensionSpec {
        q_size: 4,
        q_table: (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect(),
        n: 3,
        phi: vec![
            diag(&[1, 1, 1]),
            diag(&[1, -1, -1]),
            diag(&[-1, 1, -1]),
            diag(&[-1, -1, 1]),
        ],
        coc,
        generators: vec![
            ("x".into(), ExtElement::new(1, z.clone())),
            ("y".into(), ExtElement::new(2, z)),
        ],
    }
}

pub fn dihedral_infinite() -> ExtGroup {
    ExtGroup::new("dinf", build_dihedral_infinite()).expect("catalog spec is valid")
}

pub fn klein_bottle() -> ExtGroup {
    ExtGroup::new("klein", build_klein_bottle()).expect("catalog spec is valid")
}

pub fn promislow() -> ExtGroup {
    ExtGroup::new("promislow", build_promislow()).expect("catalog spec is valid")
}
