//! Exact integer linear algebra.
//!
//! Relations are rows and generators are columns throughout: an abelian group
//! is the cokernel `Z^c / rowspace(R)`.

mod abelian;
mod hnf;
mod matrix;
mod snf;

pub use abelian::{cokernel_structure, element_order_in_cokernel, AbelianStructure, Order};
pub use hnf::{hermite_normal_form, row_lattice_basis, unimodular_inverse};
pub use matrix::{bigvec, IntMatrix};
pub use snf::{smith_normal_form, solve_integer_linear, SmithDecomposition};

