//! Exact computation of generalized torsion in finitely generated
//! abelian-by-finite groups.
//!
//! An element `g` is generalized torsion when some product of conjugates
//! `g^{x_1} ... g^{x_k}` is trivial. For abelian-by-finite groups this
//! happens exactly when the image of `g` in the abelianization has finite
//! order, and every such element has a certificate of length at most the
//! index of a free abelian normal subgroup of finite index.
//!
//! The crate is organized as
//!
//! * [`intlin`]: Hermite/Smith normal forms and abelian group structure,
//! * [`extgroup`]: point group acting on a lattice with a factor set,
//! * [`metab`]: collection for the metabelian groups `K(p^n, p^m)`,
//! * [`engine`]: the decision procedure, bounds, certificates, identities and search,
//! * [`catalog`]: constructors for the worked examples,
//! * [`word`] and [`cli`]: words over generators and the command-line front end.

pub mod catalog;
pub mod cli;
pub mod engine;
pub mod error;
pub mod extgroup;
pub mod group;
pub mod intlin;
pub mod json;
pub mod metab;
pub mod product;
pub mod rng;
pub mod word;

pub use error::{GentorError, Result};
pub use group::{ComputableGroup, Labeled};
pub use word::{eval_word, parse_word, Word};
