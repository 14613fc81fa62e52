use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Row-style Hermite normal form.
///
/// Returns `(H, U)` with `U * M = H`, `U` unimodular, pivots positive and the
/// entries above each pivot reduced into `[0, pivot)`. Zero rows sink to the
/// bottom.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = m.rows();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivot_row = 0;
    for col in 0..m.cols() {
        if pivot_row == rows {
            break;
        }
        // gcd-combine every row below into the pivot row
        for i in pivot_row + 1..rows {
            if h[(i, col)].is_zero() {
                continue;
            }
            if h[(pivot_row, col)].is_zero() {
                h.swap_rows(pivot_row, i);
                u.swap_rows(pivot_row, i);
                continue;
            }
            let x = h[(pivot_row, col)].clone();
            let y = h[(i, col)].clone();
            if (&y % &x).is_zero() {
                let q = -(&y / &x);
                h.add_row_multiple(i, pivot_row, &q);
                u.add_row_multiple(i, pivot_row, &q);
                continue;
            }
            let eg = x.extended_gcd(&y);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let c = -(&y / &g);
            let d = &x / &g;
            h.combine_rows(pivot_row, i, [&s, &t, &c, &d]);
            u.combine_rows(pivot_row, i, [&s, &t, &c, &d]);
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let p = h[(pivot_row, col)].clone();
        for i in 0..pivot_row {
            let q = h[(i, col)].div_floor(&p);
            if !q.is_zero() {
                let f = -q;
                h.add_row_multiple(i, pivot_row, &f);
                u.add_row_multiple(i, pivot_row, &f);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Nonzero rows of the Hermite form: a basis of the row lattice.
pub fn row_lattice_basis(m: &IntMatrix) -> IntMatrix {
    let (h, _) = hermite_normal_form(m);
    let keep: Vec<usize> = (0..h.rows()).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).collect();
    h.select_rows(&keep)
}

/// Inverse of a unimodular square matrix. Returns `None` if `|det| != 1`.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    if m.rows() != m.cols() {
        return None;
    }
    let (h, u) = hermite_normal_form(m);
    (h == IntMatrix::identity(m.rows())).then_some(u)
}

#[cfg(test)]
pub(crate) fn is_hermite(h: &IntMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero_row = false;
    for i in 0..h.rows() {
        let lead = h.row(i).iter().position(|x| !x.is_zero());
        match lead {
            None => seen_zero_row = true,
            Some(j) => {
                if seen_zero_row || last_pivot.is_some_and(|lp| j <= lp) {
                    return false;
                }
                let p = &h[(i, j)];
                if !p.is_positive() {
                    return false;
                }
                for k in 0..i {
                    let e = &h[(k, j)];
                    if e.is_negative() || e >= p {
                        return false;
                    }
                }
                last_pivot = Some(j);
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn identity_is_fixed() {
        let id = IntMatrix::identity(3);
        let (h, u) = hermite_normal_form(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn two_by_two_example() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]).unwrap();
        let (h, u) = hermite_normal_form(&m);
        assert_eq!(u.mul(&m).unwrap(), h);
        assert_eq!(h, IntMatrix::from_rows(&[vec![2, 0], vec![0, 4]]).unwrap());
        assert_eq!(u.determinant().unwrap().abs(), BigInt::from(1));
        assert!(is_hermite(&h));
    }

    #[test]
    fn zero_matrix() {
        let z = IntMatrix::zeros(2, 3);
        let (h, u) = hermite_normal_form(&z);
        assert!(h.is_zero());
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn inverse_of_unimodular() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap();
        let inv = unimodular_inverse(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), IntMatrix::identity(2));
        let singular = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]).unwrap();
        assert!(unimodular_inverse(&singular).is_none());
    }
}
