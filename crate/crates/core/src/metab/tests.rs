use num_bigint::BigInt;
use num_traits::Zero;

use super::*;
use crate::group::{random_element, ComputableGroup};
use crate::intlin::{bigvec, solve_integer_linear};
use crate::rng::SplitMix64;

fn k(p: u64, n: u32, m: u32) -> KGroup {
    build_k(p, n, m, MetabConfig::default()).unwrap()
}

#[test]
fn k211_power_relation_and_module() {
    let g = k(2, 1, 1);
    // index i * 2 + j for X^i Y^j
    assert_eq!(g.g3(), &bigvec(&[-1, 0, -1, 0]));
    let s_t = g.module().submodule.transpose();
    let target = bigvec(&[1, 1, 1, 1]);
    assert!(solve_integer_linear(&s_t, &target).unwrap().is_some());
    assert_eq!(g.module().quotient.free_rank, 3);
    assert!(g.module().quotient.invariant_factors.is_empty());
    assert_eq!(g.hirsch_length(), Some(3));
}

#[test]
fn g4_is_symmetric_to_g3() {
    let g = k(3, 1, 1);
    let s = g.shape();
    // g4 = sum_i Psi_i(X) Psi_{p^m}(Y)
    let mut expect = s.zero();
    for i in 0..s.x_order as i64 {
        expect = ring::add(&expect, &s.outer(&s.psi_x(i), &s.psi_y(s.y_order as i64)));
    }
    assert_eq!(g.g4(), &expect);
}

#[test]
fn abelianizations() {
    for (p, n, m, e) in [(2, 1, 1, 4), (3, 1, 1, 9), (2, 1, 2, 8), (2, 2, 1, 8)] {
        let g = k(p, n, m);
        assert_eq!(g.abelian().invariant_factors, bigvec(&[e, e]), "K({p},{n},{m})");
        assert_eq!(g.abelian().free_rank, 0);
    }
}

#[test]
fn size_cap_and_bad_input() {
    assert!(matches!(
        build_k(2, 5, 4, MetabConfig::default()),
        Err(GentorError::SizeCap(_))
    ));
    assert!(build_k(4, 1, 1, MetabConfig::default()).is_err());
    assert!(build_k(2, 0, 1, MetabConfig::default()).is_err());
    assert!(build_k(2, 2, 2, MetabConfig { size_cap: 8 }).is_err());
    assert!(build_k(2, 2, 2, MetabConfig { size_cap: 16 }).is_ok());
}

#[test]
fn collect_examples() {
    let g = k(2, 1, 1);
    assert_eq!(g.collect(&[("x", 1), ("x", -1)]).unwrap(), g.identity());
    let yx = g.collect(&[("y", -1), ("x", -1), ("y", 1), ("x", 1)]).unwrap();
    assert_eq!(yx, g.c_pow(&bigvec(&[-1, 0, 0, 0])));
    let x4 = g.collect(&[("x", 4)]).unwrap();
    assert_eq!(x4, g.c_pow(&bigvec(&[-1, 0, -1, 0])));
    assert!(g.collect(&[("z", 1)]).is_err());
}

#[test]
fn defining_relation_of_p() {
    let g = k(2, 1, 1);
    let x2 = g.pow(&g.x(), 2);
    let y2 = g.pow(&g.y(), 2);
    assert_eq!(g.conj(&x2, &g.y()), g.pow(&g.x(), -2));
    assert_eq!(g.conj(&y2, &g.x()), g.pow(&g.y(), -2));
}

#[test]
fn group_laws_on_samples() {
    for g in [k(2, 1, 1), k(3, 1, 1), k(2, 1, 2)] {
        let mut rng = SplitMix64::new(7);
        for _ in 0..100 {
            let a = random_element(&g, &mut rng, 10).elem;
            let b = random_element(&g, &mut rng, 10).elem;
            let c = random_element(&g, &mut rng, 10).elem;
            assert_eq!(g.mul(&a, &g.inv(&a)), g.identity());
            assert_eq!(g.mul(&g.mul(&a, &b), &c), g.mul(&a, &g.mul(&b, &c)));
        }
    }
}

#[test]
fn collection_is_a_homomorphism_on_words() {
    let g = k(2, 1, 2);
    let mut rng = SplitMix64::new(11);
    let names = ["x", "y", "c"];
    for _ in 0..50 {
        let mut word = |len: u64| -> Vec<(&str, i64)> {
            (0..rng.below(len))
                .map(|_| (names[rng.below(3) as usize], rng.range_i64(-9, 9)))
                .collect()
        };
        let (w1, w2) = (word(6), word(6));
        let joined: Vec<_> = w1.iter().chain(&w2).copied().collect();
        let lhs = g.mul(&g.collect(&w1).unwrap(), &g.collect(&w2).unwrap());
        assert_eq!(lhs, g.collect(&joined).unwrap());
    }
}

#[test]
fn translation_data() {
    let g = k(2, 1, 1);
    assert_eq!(g.pi(&g.identity()).unwrap(), bigvec(&[0, 0]));
    let px = g.pi(&g.x()).unwrap();
    assert_eq!(g.abelian().element_order(&px).unwrap().to_string(), "4");
    assert_eq!(k(2, 1, 2).transversal().unwrap().len(), 8);
    let t = g.transversal().unwrap();
    for (i, l) in t.iter().enumerate() {
        assert_eq!(g.coset_index(&l.elem).unwrap(), i);
        assert_eq!(crate::word::eval_word(&g, &l.word).unwrap(), l.elem);
    }
}

#[test]
fn k_groups_are_bieberbach_and_centerless() {
    for (p, n, m) in [(2, 1, 1), (3, 1, 1), (2, 1, 2), (2, 2, 1), (5, 1, 1)] {
        let g = k(p, n, m);
        assert_eq!(ComputableGroup::torsion_free(&g), Some(true), "K({p},{n},{m})");
        assert_eq!(ComputableGroup::center_rank(&g), Some(0), "K({p},{n},{m})");
    }
}

#[test]
fn random_powers_are_nontrivial() {
    let g = k(3, 1, 1);
    let mut rng = SplitMix64::new(3);
    for _ in 0..50 {
        let a = random_element(&g, &mut rng, 12).elem;
        if a == g.identity() {
            continue;
        }
        for j in 1..=12 {
            assert_ne!(g.pow(&a, j), g.identity());
        }
    }
}

/// Magnus-style model over `R = Z/8[C_2 x C_2]`: the element `(u, w)` is the
/// matrix `[[u, w], [0, 1]]` with `u` a monomial and `w` in `R^2`.
mod oracle {
    pub type Vec8 = [[i64; 4]; 2];

    #[derive(Clone, Copy, PartialEq, Eq, Debug)]
    pub struct M {
        pub u: (i64, i64),
        pub w: Vec8,
    }

    fn shift(r: [i64; 4], (a, b): (i64, i64)) -> [i64; 4] {
        let mut out = [0; 4];
        for i in 0..2 {
            for j in 0..2 {
                let t = ((i + a).rem_euclid(2) * 2 + (j + b).rem_euclid(2)) as usize;
                out[t] = r[(i * 2 + j) as usize];
            }
        }
        out
    }

    pub fn mul(g: M, h: M) -> M {
        let mut w = [[0; 4]; 2];
        for (k, wk) in w.iter_mut().enumerate() {
            let s = shift(h.w[k], g.u);
            for t in 0..4 {
                wk[t] = (s[t] + g.w[k][t]).rem_euclid(8);
            }
        }
        M {
            u: (g.u.0 + h.u.0, g.u.1 + h.u.1),
            w,
        }
    }

    pub fn one() -> M {
        M { u: (0, 0), w: [[0; 4]; 2] }
    }

    pub fn inv(g: M) -> M {
        let u = (-g.u.0, -g.u.1);
        let mut w = [[0; 4]; 2];
        for k in 0..2 {
            let s = shift(g.w[k], u);
            for t in 0..4 {
                w[k][t] = (-s[t]).rem_euclid(8);
            }
        }
        M { u, w }
    }

    pub fn pow(g: M, e: i64) -> M {
        let b = if e < 0 { inv(g) } else { g };
        (0..e.abs()).fold(one(), |acc, _| mul(acc, b))
    }

    pub fn comm(a: M, b: M) -> M {
        mul(mul(inv(a), inv(b)), mul(a, b))
    }

    pub fn x() -> M {
        M { u: (1, 0), w: [[1, 0, 0, 0], [0; 4]] }
    }

    pub fn y() -> M {
        M { u: (0, 1), w: [[0; 4], [1, 0, 0, 0]] }
    }

    /// The product of `(c^{x^i y^j})^{f_ij}`.
    pub fn c_power(f: &[i64; 4]) -> M {
        let c = comm(x(), y());
        let mut acc = one();
        for i in 0..2 {
            for j in 0..2 {
                let h = mul(pow(x(), i), pow(y(), j));
                let cij = mul(mul(inv(h), c), h);
                acc = mul(acc, pow(cij, f[(i * 2 + j) as usize]));
            }
        }
        acc
    }

    /// Coefficients of `Psi_a(T)` modulo `T^2 = 1`, by counting exponents.
    pub fn psi2(a: i64) -> [i64; 2] {
        let mut out = [0; 2];
        if a >= 0 {
            for k in 0..a {
                out[k.rem_euclid(2) as usize] += 1;
            }
        } else {
            for k in a..0 {
                out[k.rem_euclid(2) as usize] -= 1;
            }
        }
        out
    }
}

#[test]
fn commutator_formula_against_magnus_model() {
    let g = k(2, 1, 1);
    for a in -6..=6i64 {
        for b in -6..=6i64 {
            let (pa, pb) = (oracle::psi2(a), oracle::psi2(b));
            let f = [pa[0] * pb[0], pa[0] * pb[1], pa[1] * pb[0], pa[1] * pb[1]];
            let lhs = oracle::comm(oracle::pow(oracle::x(), a), oracle::pow(oracle::y(), b));
            assert_eq!(lhs, oracle::c_power(&f), "Magnus model, a = {a}, b = {b}");

            let xa = g.pow(&g.x(), a);
            let yb = g.pow(&g.y(), b);
            let comm = g.mul(&g.mul(&g.inv(&xa), &g.inv(&yb)), &g.mul(&xa, &yb));
            let fv: Vec<BigInt> = f.iter().map(|&v| BigInt::from(v)).collect();
            assert_eq!(comm, g.c_pow(&fv), "K(2,1,1), a = {a}, b = {b}");
        }
    }
}

#[test]
fn consistency_vectors_lie_in_submodule() {
    let g = k(2, 2, 1);
    let s_t = g.module().submodule.transpose();
    let v = raw::consistency_vectors(&g.shape(), g.big_n() as i64, g.g3(), g.g4());
    for c in v {
        if c.iter().all(Zero::is_zero) {
            continue;
        }
        assert!(solve_integer_linear(&s_t, &c).unwrap().is_some());
    }
}
