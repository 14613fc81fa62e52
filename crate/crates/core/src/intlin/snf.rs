use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `U * M * V = D` with `U`, `V` unimodular and `D` diagonal with a
/// nonnegative divisibility chain. `v_inv` is carried along so callers can
/// map canonical coordinates back without a second inversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries `d_1, ..., d_min(rows, cols)`.
    pub fn invariant_diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form with transforms.
///
/// Pivot choice is the nonzero entry of least absolute value in the active
/// submatrix, first in row-major order. Negative diagonal entries are fixed
/// by negating rows, so the sign flips land in `U`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_pivot(&d, t) else {
                return finish(u, d, v, v_inv);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let p = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&p);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&p);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                // V <- V E  implies  V^-1 <- E^-1 V^-1
                v_inv.add_row_multiple(t, j, &-&q);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility of the remaining block
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(&d[(i, j)] % &p).is_zero())
            });
            match bad {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
    }
    finish(u, d, v, v_inv)
}

fn finish(mut u: IntMatrix, mut d: IntMatrix, v: IntMatrix, v_inv: IntMatrix) -> SmithDecomposition {
    for t in 0..d.rows().min(d.cols()) {
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition { u, d, v, v_inv }
}

fn min_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let e = &d[(i, j)];
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            if best.as_ref().is_none_or(|(_, _, b)| &a < b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Solves `M x = b` over the integers. `None` when no integer solution exists.
pub fn solve_integer_linear(
    m: &IntMatrix,
    b: &[BigInt],
) -> Result<Option<Vec<BigInt>>, crate::error::GentorError> {
    if b.len() != m.rows() {
        return Err(crate::error::GentorError::Dimension(format!(
            "right-hand side has length {} but matrix has {} rows",
            b.len(),
            m.rows()
        )));
    }
    let snf = smith_normal_form(m);
    let c = snf.u.mul_vec(b)?;
    let diag = snf.invariant_diagonal();
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, ci) in c.iter().enumerate() {
        let di = diag.get(i).cloned().unwrap_or_default();
        if di.is_zero() {
            if !ci.is_zero() {
                return Ok(None);
            }
        } else {
            let (q, r) = ci.div_rem(&di);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        }
    }
    Ok(Some(snf.v.mul_vec(&y)?))
}
