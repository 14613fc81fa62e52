use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{smith_normal_form, IntMatrix};
use crate::error::GentorError;

/// Order of an element: a positive integer or infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(BigInt),
    Infinite,
}

impl Order {
    pub fn is_finite(&self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            Order::Finite(k) => Some(k),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(k) => s.serialize_str(&k.to_string()),
            Order::Infinite => s.serialize_str("inf"),
        }
    }
}

/// A finitely generated abelian group presented as `Z^c / rowspace(R)`.
///
/// Canonical coordinates are one entry per invariant factor (reduced into
/// `[0, d)`) followed by `free_rank` integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianStructure {
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
    /// `(t + f) x c` matrix taking a generator-exponent vector to canonical coordinates.
    pub to_canonical: IntMatrix,
    /// `c x (t + f)` matrix lifting canonical coordinates back to generator exponents.
    pub from_canonical: IntMatrix,
    pub relations: IntMatrix,
}

/// Structure of the cokernel of the relation rows `R` (generators are columns).
pub fn cokernel_structure(r: &IntMatrix) -> AbelianStructure {
    let c = r.cols();
    let snf = smith_normal_form(r);
    let diag = snf.invariant_diagonal();
    let mut torsion_idx = Vec::new();
    let mut invariant_factors = Vec::new();
    let mut free_idx = Vec::new();
    for i in 0..c {
        let di = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        if di.is_zero() {
            free_idx.push(i);
        } else if !di.is_one() {
            torsion_idx.push(i);
            invariant_factors.push(di);
        }
    }
    // canonical y = V^T v, so row i of V^T is column i of V
    let vt = snf.v.transpose();
    let selected: Vec<usize> = torsion_idx.iter().chain(&free_idx).copied().collect();
    let to_canonical = vt.select_rows(&selected);
    // inverse of V^T is (V^-1)^T; its columns lift canonical basis vectors
    let lift = snf.v_inv.transpose();
    let from_canonical = lift.select_cols(&selected);
    AbelianStructure {
        invariant_factors,
        free_rank: free_idx.len(),
        to_canonical,
        from_canonical,
        relations: r.clone(),
    }
}

impl AbelianStructure {
    pub fn num_generators(&self) -> usize {
        self.relations.cols()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Exponent of the torsion part: the last invariant factor, or 1.
    pub fn torsion_exponent(&self) -> BigInt {
        self.invariant_factors.last().cloned().unwrap_or_else(BigInt::one)
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn canonical(&self, v: &[BigInt]) -> Result<Vec<BigInt>, GentorError> {
        let mut y = self.to_canonical.mul_vec(v)?;
        for (yi, d) in y.iter_mut().zip(&self.invariant_factors) {
            *yi = yi.mod_floor(d);
        }
        Ok(y)
    }

    /// Canonical representative of the class of `v`, in generator coordinates.
    pub fn representative(&self, v: &[BigInt]) -> Result<Vec<BigInt>, GentorError> {
        let y = self.canonical(v)?;
        self.from_canonical.mul_vec(&y)
    }

    pub fn element_order(&self, v: &[BigInt]) -> Result<Order, GentorError> {
        let y = self.canonical(v)?;
        let t = self.invariant_factors.len();
        if y[t..].iter().any(|x| !x.is_zero()) {
            return Ok(Order::Infinite);
        }
        let mut ord = BigInt::one();
        for (yi, d) in y.iter().zip(&self.invariant_factors) {
            let o = d / yi.gcd(d);
            ord = ord.lcm(&o);
        }
        Ok(Order::Finite(ord))
    }

    /// Human-readable form, e.g. `C4 x C4 x Z`.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("C{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            k => parts.push(format!("Z^{k}")),
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" x ")
        }
    }
}

/// Order of `v` in the cokernel of the relations behind `s`.
pub fn element_order_in_cokernel(s: &AbelianStructure, v: &[BigInt]) -> Result<Order, GentorError> {
    s.element_order(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlin::bigvec;

    #[test]
    fn empty_relations_give_free_group() {
        let r = IntMatrix::zeros(0, 2);
        let s = cokernel_structure(&r);
        assert_eq!(s.free_rank, 2);
        assert!(s.invariant_factors.is_empty());
        assert_eq!(s.element_order(&bigvec(&[0, 1])).unwrap(), Order::Infinite);
    }

    #[test]
    fn c4_by_c4() {
        let r = IntMatrix::from_rows(&[vec![4, 0], vec![0, 4]]).unwrap();
        let s = cokernel_structure(&r);
        assert_eq!(s.invariant_factors, bigvec(&[4, 4]));
        assert_eq!(s.free_rank, 0);
        assert_eq!(s.element_order(&bigvec(&[1, 0])).unwrap(), Order::Finite(4.into()));
        assert_eq!(s.element_order(&bigvec(&[2, 0])).unwrap(), Order::Finite(2.into()));
        assert_eq!(s.element_order(&bigvec(&[0, 0])).unwrap(), Order::Finite(1.into()));
        assert_eq!(s.describe(), "C4 x C4");
    }

    #[test]
    fn klein_bottle_relation() {
        let r = IntMatrix::from_rows(&[vec![2, -2]]).unwrap();
        let s = cokernel_structure(&r);
        assert_eq!(s.invariant_factors, bigvec(&[2]));
        assert_eq!(s.free_rank, 1);
    }

    #[test]
    fn representative_is_stable() {
        let r = IntMatrix::from_rows(&[vec![2, 4, 0], vec![0, 6, 3]]).unwrap();
        let s = cokernel_structure(&r);
        let v = bigvec(&[5, -7, 11]);
        let rep = s.representative(&v).unwrap();
        assert_eq!(s.canonical(&rep).unwrap(), s.canonical(&v).unwrap());
        assert_eq!(s.representative(&rep).unwrap(), rep);
        assert!(s.element_order(&[]).is_err());
    }
}
