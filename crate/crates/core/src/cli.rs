//! Command-line front end. [`run`] renders each command's output as a string
//! so that the binary is a thin wrapper and the commands can be tested in
//! process.

use clap::{Parser, Subcommand};
use serde_json::Value;

use crate::catalog::{catalog_entries, open_group_with, AnyGroup};
use crate::engine::{
    certificate_json, gen_exponent_bounds, gen_order_search, is_generalized_torsion,
    positive_identity_witnesses, verify_certificate_json, verify_identity_sampled,
    verify_identity_universal, witness_construct, WitnessCertificate,
};
use crate::error::{GentorError, Result};
use crate::extgroup::{validate_extension, ExtGroup, SpecFile};
use crate::group::{abelian_order, lattice_index, ComputableGroup, Labeled};
use crate::intlin::Order;
use crate::metab::MetabConfig;
use crate::word::{eval_word, parse_word};

#[derive(Debug, Parser)]
#[command(name = "gentor", version, about = "Generalized torsion in abelian-by-finite groups")]
pub struct Cli {
    /// Largest admissible p^(n+m) for K:p,n,m groups.
    #[arg(long, global = true, default_value_t = 256)]
    pub size_cap: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Catalog of named groups.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Abelianization, index of the lattice, torsion-freeness, center rank and exponent bounds.
    Info { group: String },
    /// Whether a word is generalized torsion, and the order of its image in G^ab.
    Decide { group: String, word: String },
    /// Certificate `g^{x_1} ... g^{x_k} = 1` as JSON.
    Witness {
        group: String,
        word: String,
        /// Breadth-first search for a shortest certificate instead of the construction.
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = 8)]
        max_k: usize,
        #[arg(long, default_value_t = 3)]
        radius: usize,
    },
    /// Lower and upper bound for the generalized exponent.
    Exponent { group: String },
    /// Constructs the positive identity of the group and verifies it.
    Identity {
        group: String,
        /// Symbolic check for all elements at once; `--samples` and `--seed` are ignored.
        #[arg(long)]
        universal: bool,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, env = "GENTOR_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Checks a JSON extension spec against the group axioms.
    Validate { spec: String },
    /// Re-verifies a certificate produced by `witness`.
    CheckCert { group: String, certificate: String },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// Names accepted wherever a group is expected.
    List,
    /// JSON spec of an extension-backed group.
    Spec { group: String },
}

fn open(cli: &Cli, name: &str) -> Result<AnyGroup> {
    open_group_with(name, MetabConfig { size_cap: cli.size_cap })
}

fn element(group: &AnyGroup, word: &str) -> Result<Labeled<<AnyGroup as ComputableGroup>::Elem>> {
    let w = parse_word(word)?;
    Ok(Labeled::new(eval_word(group, &w)?, w))
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| GentorError::InvalidInput(format!("cannot read `{path}`: {e}")))
}

fn or_na<T: ToString>(r: Result<T>) -> String {
    r.map(|v| v.to_string()).unwrap_or_else(|_| "n/a".into())
}

fn opt_na<T: ToString>(r: Option<T>) -> String {
    r.map(|v| v.to_string()).unwrap_or_else(|| "n/a".into())
}

/// Executes one command and returns its standard output.
pub fn run(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Catalog { action: CatalogAction::List } => {
            let width = catalog_entries().iter().map(|(n, _)| n.len()).max().unwrap_or(0);
            Ok(catalog_entries()
                .into_iter()
                .map(|(n, d)| format!("{n:width$}  {d}\n"))
                .collect())
        }
        Command::Catalog { action: CatalogAction::Spec { group } } => {
            let g = open(cli, group)?;
            let ext = g.as_ext().ok_or_else(|| {
                GentorError::Unsupported(format!("`{group}` is not given by an extension spec"))
            })?;
            Ok(SpecFile::from_spec(ext.spec())?.to_json_pretty() + "\n")
        }
        Command::Info { group } => info(&open(cli, group)?),
        Command::Decide { group, word } => {
            let g = open(cli, group)?;
            let e = element(&g, word)?;
            let answer = is_generalized_torsion(&g, &e.elem)?;
            let order = match abelian_order(&g, &e.elem)? {
                Order::Finite(k) => k.to_string(),
                Order::Infinite => "infinite".into(),
            };
            Ok(format!("{answer}\npi_order={order}\n"))
        }
        Command::Witness {
            group,
            word,
            search,
            max_k,
            radius,
        } => {
            let g = open(cli, group)?;
            let base = element(&g, word)?;
            let cert = if *search {
                match gen_order_search(&g, &base, *max_k, *radius)? {
                    Some(found) => searched_certificate(&g, base, found.conjugators),
                    None => {
                        return Ok(format!(
                            "no certificate with k <= {max_k} and conjugators of length <= {radius}\n"
                        ))
                    }
                }
            } else {
                witness_construct(&g, &base)?
            };
            let json = certificate_json(&g, &cert);
            Ok(serde_json::to_string_pretty(&json).expect("certificate serializes") + "\n")
        }
        Command::Exponent { group } => Ok(format!("{}\n", gen_exponent_bounds(&open(cli, group)?)?)),
        Command::Identity {
            group,
            universal,
            samples,
            seed,
        } => identity(&open(cli, group)?, *universal, *samples, *seed),
        Command::Validate { spec } => {
            let spec = SpecFile::from_json(&read(spec)?)?.into_spec()?;
            let report = validate_extension(&spec);
            if report.is_valid() {
                ExtGroup::new("spec", spec)?;
                Ok("valid\n".into())
            } else {
                let list: Vec<String> = report.violations.iter().map(|v| format!("  {v}")).collect();
                Err(GentorError::InvalidSpec(format!("\n{}", list.join("\n"))))
            }
        }
        Command::CheckCert { group, certificate } => {
            let g = open(cli, group)?;
            let cert: Value = serde_json::from_str(&read(certificate)?)
                .map_err(|e| GentorError::InvalidInput(format!("certificate JSON: {e}")))?;
            if verify_certificate_json(&g, &cert)? {
                Ok("verified\n".into())
            } else {
                Err(GentorError::InvalidInput("certificate does not multiply to the identity".into()))
            }
        }
    }
}

fn searched_certificate(
    g: &AnyGroup,
    base: Labeled<<AnyGroup as ComputableGroup>::Elem>,
    conjugators: Vec<Labeled<<AnyGroup as ComputableGroup>::Elem>>,
) -> WitnessCertificate<<AnyGroup as ComputableGroup>::Elem> {
    let product = conjugators
        .iter()
        .fold(g.identity(), |acc, x| g.mul(&acc, &g.conj(&base.elem, &x.elem)));
    WitnessCertificate {
        length: conjugators.len(),
        verified: product == g.identity(),
        base,
        conjugators,
    }
}

fn info(g: &AnyGroup) -> Result<String> {
    let ab = g.abelianization();
    let mut out = format!("group: {}\n", g.name());
    out += &format!(
        "abelianization: {}\n",
        ab.map(|a| a.describe()).unwrap_or_else(|_| "n/a".into())
    );
    out += &format!("index: {}\n", or_na(lattice_index(g)));
    out += &format!("torsion_free: {}\n", opt_na(g.torsion_free()));
    out += &format!("center_rank: {}\n", opt_na(g.center_rank()));
    out += &format!("hirsch_length: {}\n", opt_na(g.hirsch_length()));
    let bounds = match gen_exponent_bounds(g) {
        Ok(b) => b.to_string(),
        Err(GentorError::InfiniteAbelianization) => "none (G^ab is infinite)".into(),
        Err(GentorError::TheoremViolation(m)) => return Err(GentorError::TheoremViolation(m)),
        Err(_) => "n/a".into(),
    };
    out += &format!("exponent: {bounds}\n");
    Ok(out)
}

fn identity(g: &AnyGroup, universal: bool, samples: usize, seed: u64) -> Result<String> {
    // (k, conjugator families); the group-ring backend has no lattice and
    // uses its own degree-16 construction, one family per sign reverser.
    let families: Vec<(u64, String, Vec<_>)> = match g {
        AnyGroup::Gamma(gamma) => gamma
            .sign_reversers()
            .into_iter()
            .map(|s| {
                let conj = gamma.degree16_conjugators(&s.elem);
                let conj = conj.into_iter().map(crate::catalog::AnyElem::Gamma).collect();
                (1, format!("sigma={}", s.word), conj)
            })
            .collect(),
        _ => {
            let id = positive_identity_witnesses(g)?;
            let words: Vec<String> = id.conjugators.iter().map(|c| c.word.to_string()).collect();
            let conj = id.conjugators.into_iter().map(|c| c.elem).collect();
            vec![(id.k, format!("conjugators=[{}]", words.join(", ")), conj)]
        }
    };
    let mut out = String::new();
    for (k, label, conj) in families {
        let m = conj.len() as u64;
        out += &format!("identity: k={k} m={m} degree={} {label}\n", k * m);
        if universal {
            if !verify_identity_universal(g, k, &conj)? {
                return Err(GentorError::TheoremViolation(format!(
                    "{out}universal check of the identity failed"
                )));
            }
            out += "universal: holds\n";
        } else {
            let report = verify_identity_sampled(g, k, &conj, samples, seed);
            out += &format!(
                "sampled: samples={} seed={} failures={}\n",
                report.samples, report.seed, report.failures
            );
            if let Some(w) = report.counterexample {
                return Err(GentorError::TheoremViolation(format!("{out}identity fails at {w}")));
            }
        }
    }
    Ok(out)
}
