//! Constructors for the example groups and lookup by name.
//!
//! Names understood by [`open_group`]:
//!
//! | name | group |
//! |------|-------|
//! | `dinf` | infinite dihedral group |
//! | `klein` | Klein bottle group `<x, y \| x^y = x^-1>` |
//! | `promislow` | Promislow group `P` |
//! | `K:p,n,m` | the metabelian group `K(p^n, p^m)` |
//! | `wreath:<file>` | `Z wr Q` for the table in `<file>` (or `wreath:C<n>`) |
//! | `freeabext:<file>` | `F / [R, R]` for the input in `<file>` |
//! | `spec:<file>` | an extension spec in JSON |
//! | `gamma` | `(ZP) x| (P x P)` |
//! | `Z` | the infinite cyclic group, generator `z` |
//! | `A*B` | direct product |

pub mod classic;
pub mod freeabext;
pub mod gamma;
mod registry;
pub mod wreath;

use crate::engine::is_generalized_torsion;
use crate::error::{GentorError, Result};
use crate::extgroup::{direct_product, ExtGroup, ExtensionSpec};
use crate::metab::{build_k, KGroup, MetabConfig};
use crate::word::{eval_word, Word};

pub use classic::{build_dihedral_infinite, build_klein_bottle, build_promislow};
pub use freeabext::{build_free_abelianized_extension, FreeAbelExtInput};
pub use gamma::{build_casolo_gamma, GammaElement, GammaGroup, GroupRingElement};
pub use registry::{catalog_entries, open_group, open_group_with, AnyElem, AnyGroup};
pub use wreath::{augmentation, build_wreath, cyclic_table};

/// `K(p^n, p^m)` with the default size cap.
#[allow(non_snake_case)]
pub fn build_K_group(p: u64, n: u32, m: u32) -> Result<KGroup> {
    build_k(p, n, m, MetabConfig::default())
}

/// `G x Z` with the generator of `Z` returned by name.
pub fn with_central_z(spec: &ExtensionSpec) -> Result<(ExtGroup, String)> {
    let product = direct_product(spec, &ExtensionSpec::free_abelian(&["z"]))?;
    let z = product
        .generators
        .last()
        .map(|(n, _)| n.clone())
        .ok_or_else(|| GentorError::InvalidSpec("product has no generators".into()))?;
    Ok((ExtGroup::new("central", product)?, z))
}

/// Whether the central generator `z` of `G x Z` is reported outside `T*(G x Z)`,
/// as it must be: a central generalized torsion element has finite order.
pub fn central_nontorsion_check(spec: &ExtensionSpec) -> Result<bool> {
    let (g, z) = with_central_z(spec)?;
    let z = eval_word(&g, &Word::gen(z))?;
    Ok(!is_generalized_torsion(&g, &z)?)
}
