//! Collection with unreduced integer exponents.
//!
//! A raw element `x^alpha y^beta c^u` has arbitrary integer `alpha`, `beta`
//! and a `c`-exponent that is either a concrete ring element or an affine
//! function of formal variables (for symbolic powers).

use num_bigint::BigInt;
use num_traits::Zero;

use super::ring::{self, RingElem, RingShape};
use crate::intlin::IntMatrix;

/// A `c`-exponent that can be shifted by ring monomials and translated.
pub(crate) trait CPart: Clone {
    fn shifted(&self, shape: &RingShape, a: i64, b: i64) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn plus_const(&self, r: &[BigInt]) -> Self;
    fn negated(&self) -> Self;
    fn zero_like(&self) -> Self;
}

impl CPart for RingElem {
    fn shifted(&self, shape: &RingShape, a: i64, b: i64) -> Self {
        shape.shift(self, a, b)
    }

    fn plus(&self, other: &Self) -> Self {
        ring::add(self, other)
    }

    fn plus_const(&self, r: &[BigInt]) -> Self {
        ring::add(self, r)
    }

    fn negated(&self) -> Self {
        self.iter().map(|x| -x).collect()
    }

    fn zero_like(&self) -> Self {
        vec![BigInt::zero(); self.len()]
    }
}

/// `L v + c0` for a formal vector `v`.
#[derive(Clone, Debug)]
pub(crate) struct Affine {
    pub lin: IntMatrix,
    pub cst: RingElem,
}

impl CPart for Affine {
    fn shifted(&self, shape: &RingShape, a: i64, b: i64) -> Self {
        let map = shape.shift_map(a, b);
        let mut lin = IntMatrix::zeros(self.lin.rows(), self.lin.cols());
        for (k, &t) in map.iter().enumerate() {
            for j in 0..self.lin.cols() {
                lin[(t, j)] = self.lin[(k, j)].clone();
            }
        }
        Affine {
            lin,
            cst: shape.shift(&self.cst, a, b),
        }
    }

    fn plus(&self, other: &Self) -> Self {
        Affine {
            lin: self.lin.add(&other.lin).expect("same shape"),
            cst: ring::add(&self.cst, &other.cst),
        }
    }

    fn plus_const(&self, r: &[BigInt]) -> Self {
        Affine {
            lin: self.lin.clone(),
            cst: ring::add(&self.cst, r),
        }
    }

    fn negated(&self) -> Self {
        Affine {
            lin: self.lin.neg(),
            cst: self.cst.iter().map(|x| -x).collect(),
        }
    }

    fn zero_like(&self) -> Self {
        Affine {
            lin: IntMatrix::zeros(self.lin.rows(), self.lin.cols()),
            cst: vec![BigInt::zero(); self.cst.len()],
        }
    }
}

/// `x^alpha y^beta c^c` with unreduced exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawElem<C> {
    pub alpha: i64,
    pub beta: i64,
    pub c: C,
}

impl<C> RawElem<C> {
    pub fn new(alpha: i64, beta: i64, c: C) -> Self {
        RawElem { alpha, beta, c }
    }
}

/// `(x^a y^b c^v)(x^g y^d c^w) = x^{a+g} y^{b+d} c^{Y^d (X^g v - Psi_g(X) Psi_b(Y)) + w}`
pub(crate) fn mul<C: CPart>(shape: &RingShape, g: &RawElem<C>, h: &RawElem<C>) -> RawElem<C> {
    let swap = shape.outer(&shape.psi_x(h.alpha), &shape.psi_y(g.beta));
    let swap: RingElem = swap.iter().map(|x| -x).collect();
    let c = g
        .c
        .shifted(shape, h.alpha, 0)
        .plus_const(&swap)
        .shifted(shape, 0, h.beta)
        .plus(&h.c);
    RawElem::new(g.alpha + h.alpha, g.beta + h.beta, c)
}

/// `c^-v y^-b x^-a`
pub(crate) fn inv<C: CPart>(shape: &RingShape, g: &RawElem<C>) -> RawElem<C> {
    let zero = g.c.zero_like();
    let cv = RawElem::new(0, 0, g.c.negated());
    let yb = RawElem::new(0, -g.beta, zero.clone());
    let xa = RawElem::new(-g.alpha, 0, zero);
    mul(shape, &mul(shape, &cv, &yb), &xa)
}

/// `h^-1 g h`
pub(crate) fn conj<C: CPart>(shape: &RingShape, g: &RawElem<C>, h: &RawElem<C>) -> RawElem<C> {
    mul(shape, &mul(shape, &inv(shape, h), g), h)
}

/// Rewrites `x^A y^B c^u` as `x^r y^s c^{u'}` with `0 <= r, s < N`, using
/// `x^N = c^{g3}` and `y^N = c^{g4}`.
pub(crate) fn fold<C: CPart>(
    shape: &RingShape,
    big_n: i64,
    g3: &[BigInt],
    g4: &[BigInt],
    raw: RawElem<C>,
) -> RawElem<C> {
    let (qa, ra) = (raw.alpha.div_euclid(big_n), raw.alpha.rem_euclid(big_n));
    let (qb, rb) = (raw.beta.div_euclid(big_n), raw.beta.rem_euclid(big_n));
    let mut c = raw.c;
    if qa != 0 {
        let t = ring::scale(&shape.shift(g3, 0, raw.beta), &BigInt::from(qa));
        c = c.plus_const(&t);
    }
    if qb != 0 {
        c = c.plus_const(&ring::scale(g4, &BigInt::from(qb)));
    }
    RawElem::new(ra, rb, c)
}

fn product(shape: &RingShape, factors: impl IntoIterator<Item = RawElem<RingElem>>) -> RawElem<RingElem> {
    factors
        .into_iter()
        .fold(RawElem::new(0, 0, shape.zero()), |acc, f| mul(shape, &acc, &f))
}

/// Collects the relators `prod_j (x^{p^n})^{y^j}` and `prod_i (y^{p^m})^{x^i}`
/// to read off `g3` and `g4`.
pub(crate) fn power_relations(shape: &RingShape, big_n: i64) -> (RingElem, RingElem) {
    let (px, py) = (shape.x_order as i64, shape.y_order as i64);
    let xp = RawElem::new(px, 0, shape.zero());
    let yp = RawElem::new(0, py, shape.zero());
    let r1 = product(
        shape,
        (0..py).map(|j| conj(shape, &xp, &RawElem::new(0, j, shape.zero()))),
    );
    let r2 = product(
        shape,
        (0..px).map(|i| conj(shape, &yp, &RawElem::new(i, 0, shape.zero()))),
    );
    debug_assert_eq!((r1.alpha, r1.beta), (big_n, 0));
    debug_assert_eq!((r2.alpha, r2.beta), (0, big_n));
    (r1.c.negated(), r2.c.negated())
}

/// For `z^N = c^g` (`z` in `{x, y}`) and `h` in `{x, y}`, collecting
/// `(z^N)^h = z^N c^u` and substituting gives `c^{g + u}`, while `(c^g)^h = c^{h g}`.
/// The differences must vanish in `M`.
pub(crate) fn consistency_vectors(
    shape: &RingShape,
    big_n: i64,
    g3: &[BigInt],
    g4: &[BigInt],
) -> Vec<RingElem> {
    let x = RawElem::new(1, 0, shape.zero());
    let y = RawElem::new(0, 1, shape.zero());
    let powers = [
        (RawElem::new(big_n, 0, shape.zero()), g3),
        (RawElem::new(0, big_n, shape.zero()), g4),
    ];
    let mut out = Vec::new();
    for (zn, g) in &powers {
        for h in [&x, &y] {
            let lhs = conj(shape, zn, h);
            debug_assert_eq!((lhs.alpha, lhs.beta), (zn.alpha, zn.beta));
            let rhs = conj(shape, &RawElem::new(0, 0, g.to_vec()), h);
            out.push(ring::sub(&ring::add(g, &lhs.c), &rhs.c));
        }
    }
    out
}

/// `(x^a y^b c^v)^k` for formal `v`, folded: returns `(L, c0)` with the power
/// equal to `x^{a k mod N} y^{b k mod N} c^{L v + c0}`. Callers choose `a k`,
/// `b k` divisible by `N`.
pub(crate) fn symbolic_power(
    shape: &RingShape,
    big_n: i64,
    g3: &[BigInt],
    g4: &[BigInt],
    alpha: i64,
    beta: i64,
    k: u64,
) -> (IntMatrix, RingElem) {
    let d = shape.dim();
    let g = RawElem::new(
        alpha,
        beta,
        Affine {
            lin: IntMatrix::identity(d),
            cst: shape.zero(),
        },
    );
    let mut acc = RawElem::new(0, 0, g.c.zero_like());
    for _ in 0..k {
        acc = mul(shape, &acc, &g);
    }
    let folded = fold(shape, big_n, g3, g4, acc);
    debug_assert_eq!((folded.alpha, folded.beta), (0, 0));
    (folded.c.lin, folded.c.cst)
}
