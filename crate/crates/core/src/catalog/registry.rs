use std::path::Path;

use num_bigint::BigInt;
use serde_json::Value;

use super::classic::{dihedral_infinite, klein_bottle, promislow};
use super::freeabext::{free_abelianized_extension, FreeAbelExtInput};
use super::gamma::{build_casolo_gamma, GammaElement, GammaGroup};
use super::wreath::{cyclic_table, wreath, TableFile};
use crate::error::{GentorError, Result};
use crate::extgroup::{ExtElement, ExtGroup, ExtensionSpec, SpecFile};
use crate::group::{ComputableGroup, Labeled};
use crate::intlin::AbelianStructure;
use crate::metab::{build_k, KGroup, MetabConfig, MetabElement};
use crate::product::ProductGroup;

/// Any backend, selected at run time.
pub enum AnyGroup {
    Ext(ExtGroup),
    K(KGroup),
    Gamma(GammaGroup),
    Product(Box<ProductGroup<AnyGroup, AnyGroup>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnyElem {
    Ext(ExtElement),
    K(MetabElement),
    Gamma(GammaElement),
    Pair(Box<(AnyElem, AnyElem)>),
}

/// Moves elements of a concrete backend in and out of [`AnyElem`].
trait Embed: ComputableGroup {
    fn wrap(e: Self::Elem) -> AnyElem;
    fn peel(e: &AnyElem) -> &Self::Elem;
}

fn foreign() -> ! {
    panic!("element belongs to a different group")
}

impl Embed for ExtGroup {
    fn wrap(e: ExtElement) -> AnyElem {
        AnyElem::Ext(e)
    }
    fn peel(e: &AnyElem) -> &ExtElement {
        match e {
            AnyElem::Ext(x) => x,
            _ => foreign(),
        }
    }
}

impl Embed for KGroup {
    fn wrap(e: MetabElement) -> AnyElem {
        AnyElem::K(e)
    }
    fn peel(e: &AnyElem) -> &MetabElement {
        match e {
            AnyElem::K(x) => x,
            _ => foreign(),
        }
    }
}

impl Embed for GammaGroup {
    fn wrap(e: GammaElement) -> AnyElem {
        AnyElem::Gamma(e)
    }
    fn peel(e: &AnyElem) -> &GammaElement {
        match e {
            AnyElem::Gamma(x) => x,
            _ => foreign(),
        }
    }
}

impl Embed for ProductGroup<AnyGroup, AnyGroup> {
    fn wrap(e: (AnyElem, AnyElem)) -> AnyElem {
        AnyElem::Pair(Box::new(e))
    }
    fn peel(e: &AnyElem) -> &(AnyElem, AnyElem) {
        match e {
            AnyElem::Pair(x) => x,
            _ => foreign(),
        }
    }
}

macro_rules! dispatch {
    ($s:expr, $g:ident => $e:expr) => {
        match $s {
            AnyGroup::Ext($g) => $e,
            AnyGroup::K($g) => $e,
            AnyGroup::Gamma($g) => $e,
            AnyGroup::Product(b) => {
                let $g = &**b;
                $e
            }
        }
    };
}

fn wrap_labeled<G: Embed>(l: Labeled<G::Elem>) -> Labeled<AnyElem> {
    Labeled::new(G::wrap(l.elem), l.word)
}

fn mul_in<G: Embed>(g: &G, a: &AnyElem, b: &AnyElem) -> AnyElem {
    G::wrap(g.mul(G::peel(a), G::peel(b)))
}

fn inv_in<G: Embed>(g: &G, a: &AnyElem) -> AnyElem {
    G::wrap(g.inv(G::peel(a)))
}

fn pow_in<G: Embed>(g: &G, a: &AnyElem, k: i64) -> AnyElem {
    G::wrap(g.pow(G::peel(a), k))
}

fn generators_in<G: Embed>(g: &G) -> Vec<(String, AnyElem)> {
    g.generators().into_iter().map(|(n, e)| (n, G::wrap(e))).collect()
}

fn transversal_in<G: Embed>(g: &G) -> Result<Vec<Labeled<AnyElem>>> {
    Ok(g.transversal()?.into_iter().map(wrap_labeled::<G>).collect())
}

fn symbolic_in<G: Embed>(g: &G, k: i64, xs: &[AnyElem]) -> Result<bool> {
    let xs: Vec<G::Elem> = xs.iter().map(|x| G::peel(x).clone()).collect();
    g.verify_identity_symbolic(k, &xs)
}

impl ComputableGroup for AnyGroup {
    type Elem = AnyElem;

    fn name(&self) -> String {
        dispatch!(self, g => g.name())
    }

    fn identity(&self) -> AnyElem {
        fn id<G: Embed>(g: &G) -> AnyElem {
            G::wrap(g.identity())
        }
        dispatch!(self, g => id(g))
    }

    fn mul(&self, a: &AnyElem, b: &AnyElem) -> AnyElem {
        dispatch!(self, g => mul_in(g, a, b))
    }

    fn inv(&self, a: &AnyElem) -> AnyElem {
        dispatch!(self, g => inv_in(g, a))
    }

    fn pow(&self, a: &AnyElem, k: i64) -> AnyElem {
        dispatch!(self, g => pow_in(g, a, k))
    }

    fn generators(&self) -> Vec<(String, AnyElem)> {
        dispatch!(self, g => generators_in(g))
    }

    fn abelianization(&self) -> Result<&AbelianStructure> {
        dispatch!(self, g => g.abelianization())
    }

    fn pi(&self, a: &AnyElem) -> Result<Vec<BigInt>> {
        fn pi_in<G: Embed>(g: &G, a: &AnyElem) -> Result<Vec<BigInt>> {
            g.pi(G::peel(a))
        }
        dispatch!(self, g => pi_in(g, a))
    }

    fn transversal(&self) -> Result<Vec<Labeled<AnyElem>>> {
        dispatch!(self, g => transversal_in(g))
    }

    fn coset_index(&self, a: &AnyElem) -> Result<usize> {
        fn idx<G: Embed>(g: &G, a: &AnyElem) -> Result<usize> {
            g.coset_index(G::peel(a))
        }
        dispatch!(self, g => idx(g, a))
    }

    fn torsion_free(&self) -> Option<bool> {
        dispatch!(self, g => ComputableGroup::torsion_free(g))
    }

    fn center_rank(&self) -> Option<usize> {
        dispatch!(self, g => ComputableGroup::center_rank(g))
    }

    fn hirsch_length(&self) -> Option<usize> {
        dispatch!(self, g => ComputableGroup::hirsch_length(g))
    }

    fn element_json(&self, a: &AnyElem) -> Value {
        fn js<G: Embed>(g: &G, a: &AnyElem) -> Value {
            g.element_json(G::peel(a))
        }
        dispatch!(self, g => js(g, a))
    }

    fn verify_identity_symbolic(&self, k: i64, conjugators: &[AnyElem]) -> Result<bool> {
        dispatch!(self, g => symbolic_in(g, k, conjugators))
    }
}

impl AnyGroup {
    pub fn as_ext(&self) -> Option<&ExtGroup> {
        match self {
            AnyGroup::Ext(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_gamma(&self) -> Option<&GammaGroup> {
        match self {
            AnyGroup::Gamma(g) => Some(g),
            _ => None,
        }
    }
}

/// Catalog names with a one-line description.
pub fn catalog_entries() -> Vec<(&'static str, &'static str)> {
    vec![
        ("dinf", "infinite dihedral group Z x| C2"),
        ("klein", "Klein bottle group <x, y | x^y = x^-1>"),
        ("promislow", "Promislow group <x, y | (x^2)^y = x^-2, (y^2)^x = y^-2>"),
        ("K:p,n,m", "metabelian group K(p^n, p^m), p prime, p^(n+m) <= 256"),
        ("wreath:<file>", "Z wr Q for a JSON table {\"q_table\": ...}; wreath:C<n> for cyclic Q"),
        ("freeabext:<file>", "F/[R,R] for JSON {\"rank\", \"q_table\", \"images\", \"names\"?}"),
        ("spec:<file>", "extension given by a JSON spec"),
        ("gamma", "(ZP) x| (P x P) over the Promislow group"),
        ("Z", "infinite cyclic group with generator z"),
        ("A*B", "direct product of two catalog groups"),
    ]
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| GentorError::InvalidInput(format!("cannot read `{path}`: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T> {
    serde_json::from_str(&read(path)?).map_err(|e| GentorError::InvalidInput(format!("`{path}`: {e}")))
}

fn parse_k(args: &str) -> Result<(u64, u32, u32)> {
    let parts: Vec<&str> = args.split(',').map(str::trim).collect();
    let bad = || GentorError::InvalidInput(format!("expected K:p,n,m, got `K:{args}`"));
    match parts.as_slice() {
        [p, n, m] => Ok((
            p.parse().map_err(|_| bad())?,
            n.parse().map_err(|_| bad())?,
            m.parse().map_err(|_| bad())?,
        )),
        _ => Err(bad()),
    }
}

fn open_single(name: &str, config: MetabConfig) -> Result<AnyGroup> {
    Ok(match name {
        "dinf" => AnyGroup::Ext(dihedral_infinite()),
        "klein" => AnyGroup::Ext(klein_bottle()),
        "promislow" => AnyGroup::Ext(promislow()),
        "gamma" => AnyGroup::Gamma(build_casolo_gamma()),
        "Z" => AnyGroup::Ext(ExtGroup::new("Z", ExtensionSpec::free_abelian(&["z"]))?),
        _ => {
            if let Some(args) = name.strip_prefix("K:") {
                let (p, n, m) = parse_k(args)?;
                AnyGroup::K(build_k(p, n, m, config)?)
            } else if let Some(path) = name.strip_prefix("wreath:") {
                let table = match path.strip_prefix('C').and_then(|n| n.parse::<usize>().ok()) {
                    Some(n) if !Path::new(path).exists() && n > 0 => cyclic_table(n),
                    _ => parse_json::<TableFile>(path)?.q_table,
                };
                AnyGroup::Ext(wreath(name, &table)?)
            } else if let Some(path) = name.strip_prefix("freeabext:") {
                let input: FreeAbelExtInput = parse_json(path)?;
                AnyGroup::Ext(free_abelianized_extension(name, &input)?)
            } else if let Some(path) = name.strip_prefix("spec:") {
                let spec = SpecFile::from_json(&read(path)?)?.into_spec()?;
                AnyGroup::Ext(ExtGroup::new(name, spec)?)
            } else {
                return Err(GentorError::UnknownIdentifier(format!(
                    "{name} (see `gentor catalog list`)"
                )));
            }
        }
    })
}

/// Opens a catalog group by name; `A*B*C` is the left-nested product.
pub fn open_group(name: &str) -> Result<AnyGroup> {
    open_group_with(name, MetabConfig::default())
}

pub fn open_group_with(name: &str, config: MetabConfig) -> Result<AnyGroup> {
    let mut parts = name.split('*');
    let first = parts.next().unwrap_or_default();
    let mut group = open_single(first, config)?;
    for part in parts {
        group = AnyGroup::Product(Box::new(ProductGroup::new(group, open_single(part, config)?)));
    }
    Ok(group)
}
