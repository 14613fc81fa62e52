//! The group ring `Z[C_{p^n} x C_{p^m}]`, with `X^i Y^j` stored at index
//! `i * p^m + j`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::intlin::IntMatrix;

/// Shapes of the two cyclic factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingShape {
    pub x_order: usize,
    pub y_order: usize,
}

pub type RingElem = Vec<BigInt>;

impl RingShape {
    pub fn dim(&self) -> usize {
        self.x_order * self.y_order
    }

    pub fn index(&self, i: i64, j: i64) -> usize {
        let i = i.rem_euclid(self.x_order as i64) as usize;
        let j = j.rem_euclid(self.y_order as i64) as usize;
        i * self.y_order + j
    }

    pub fn zero(&self) -> RingElem {
        vec![BigInt::zero(); self.dim()]
    }

    pub fn one(&self) -> RingElem {
        self.monomial(0, 0)
    }

    pub fn monomial(&self, i: i64, j: i64) -> RingElem {
        let mut r = self.zero();
        r[self.index(i, j)] = 1.into();
        r
    }

    /// Target index of each basis element under multiplication by `X^a Y^b`.
    pub fn shift_map(&self, a: i64, b: i64) -> Vec<usize> {
        (0..self.dim())
            .map(|k| {
                let (i, j) = ((k / self.y_order) as i64, (k % self.y_order) as i64);
                self.index(i + a, j + b)
            })
            .collect()
    }

    /// `X^a Y^b r`
    pub fn shift(&self, r: &[BigInt], a: i64, b: i64) -> RingElem {
        let map = self.shift_map(a, b);
        let mut out = self.zero();
        for (k, c) in r.iter().enumerate() {
            out[map[k]] = c.clone();
        }
        out
    }

    /// `Psi_a(X) = 1 + X + ... + X^{a-1}`, extended to `a < 0` by
    /// `Psi_a(X) = -(X^a + ... + X^{-1})`. Returned as coefficients per power of X.
    pub fn psi_x(&self, a: i64) -> Vec<BigInt> {
        psi(self.x_order, a)
    }

    pub fn psi_y(&self, b: i64) -> Vec<BigInt> {
        psi(self.y_order, b)
    }

    /// `f(X) g(Y)` for univariate coefficient vectors.
    pub fn outer(&self, fx: &[BigInt], gy: &[BigInt]) -> RingElem {
        let mut out = self.zero();
        for (i, a) in fx.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in gy.iter().enumerate() {
                if !b.is_zero() {
                    out[i * self.y_order + j] = a * b;
                }
            }
        }
        out
    }

    pub fn mul(&self, r: &[BigInt], s: &[BigInt]) -> RingElem {
        let mut out = self.zero();
        for (k, a) in r.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (i, j) = ((k / self.y_order) as i64, (k % self.y_order) as i64);
            let map = self.shift_map(i, j);
            for (l, b) in s.iter().enumerate() {
                if !b.is_zero() {
                    out[map[l]] += a * b;
                }
            }
        }
        out
    }

    /// Matrix of multiplication by `X^a Y^b` acting on column vectors.
    pub fn shift_matrix(&self, a: i64, b: i64) -> IntMatrix {
        let map = self.shift_map(a, b);
        let mut m = IntMatrix::zeros(self.dim(), self.dim());
        for (k, &t) in map.iter().enumerate() {
            m[(t, k)] = 1.into();
        }
        m
    }
}

fn psi(order: usize, a: i64) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order];
    let o = order as i64;
    if a >= 0 {
        let full = a / o;
        let rest = a % o;
        for (k, c) in out.iter_mut().enumerate() {
            *c = BigInt::from(full + i64::from((k as i64) < rest));
        }
    } else {
        // -(X^a + ... + X^-1)
        for k in a..0 {
            out[k.rem_euclid(o) as usize] -= 1;
        }
    }
    out
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> RingElem {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> RingElem {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[BigInt], k: &BigInt) -> RingElem {
    a.iter().map(|x| x * k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlin::bigvec;

    #[test]
    fn psi_values() {
        let r = RingShape { x_order: 2, y_order: 2 };
        assert_eq!(r.psi_x(0), bigvec(&[0, 0]));
        assert_eq!(r.psi_x(2), bigvec(&[1, 1]));
        assert_eq!(r.psi_x(3), bigvec(&[2, 1]));
        assert_eq!(r.psi_x(-1), bigvec(&[0, -1]));
        assert_eq!(r.psi_x(-2), bigvec(&[-1, -1]));
    }

    #[test]
    fn psi_of_negative_matches_identity() {
        // Psi_{-a}(X) = -X^{-a} Psi_a(X)
        let r = RingShape { x_order: 3, y_order: 1 };
        for a in 0..7 {
            let lhs = r.psi_x(-a);
            let rhs: Vec<BigInt> = r.shift(&r.outer(&r.psi_x(a), &bigvec(&[1])), -a, 0)
                .iter()
                .map(|c| -c)
                .collect();
            assert_eq!(lhs, rhs, "a = {a}");
        }
    }

    #[test]
    fn shifts_are_permutations() {
        let r = RingShape { x_order: 2, y_order: 4 };
        let m = r.shift_matrix(1, 3);
        let mut map = r.shift_map(1, 3);
        map.sort_unstable();
        assert_eq!(map, (0..8).collect::<Vec<_>>());
        assert_eq!(m.determinant().unwrap().magnitude(), &1u32.into());
        let v = r.monomial(1, 1);
        assert_eq!(r.shift(&v, 1, 3), r.monomial(0, 0));
        assert_eq!(r.mul(&r.monomial(1, 0), &r.monomial(0, 1)), r.monomial(1, 1));
    }
}
