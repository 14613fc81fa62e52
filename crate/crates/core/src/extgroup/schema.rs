use indexmap::IndexMap;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{ExtElement, ExtensionSpec};
use crate::error::{GentorError, Result};
use crate::intlin::IntMatrix;

/// On-disk form of an [`ExtensionSpec`].
///
/// ```json
/// {
///   "q_size": 2,
///   "q_table": [[0, 1], [1, 0]],
///   "n": 1,
///   "phi": [[[1]], [[-1]]],
///   "coc": [[[0], [0]], [[0], [0]]],
///   "generators": { "s": {"q": 1, "a": [0]}, "t": {"q": 0, "a": [1]} }
/// }
/// ```
///
/// Integers are JSON numbers in the `i64` range. Generator order is the
/// order of the keys in the file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub q_size: usize,
    pub q_table: Vec<Vec<usize>>,
    pub n: usize,
    pub phi: Vec<Vec<Vec<i64>>>,
    pub coc: Vec<Vec<Vec<i64>>>,
    pub generators: IndexMap<String, GeneratorBinding>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorBinding {
    pub q: usize,
    pub a: Vec<i64>,
}

fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| GentorError::InvalidInput(format!("{x} does not fit the JSON integer range")))
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

impl SpecFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| GentorError::InvalidInput(format!("spec JSON: {e}")))
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec files always serialize")
    }

    /// Converts to the in-memory form. Shape errors are reported; the group
    /// axioms are left to `validate_extension`.
    pub fn into_spec(self) -> Result<ExtensionSpec> {
        let mut phi = Vec::with_capacity(self.phi.len());
        for (q, m) in self.phi.iter().enumerate() {
            let rows: Vec<Vec<BigInt>> = m.iter().map(|r| big(r)).collect();
            let mat = IntMatrix::from_rows_with_cols(rows, self.n)
                .map_err(|_| GentorError::InvalidInput(format!("phi[{q}] rows must have length n = {}", self.n)))?;
            if mat.rows() != self.n {
                return Err(GentorError::InvalidInput(format!("phi[{q}] must have n = {} rows", self.n)));
            }
            phi.push(mat);
        }
        let coc = self
            .coc
            .iter()
            .map(|row| row.iter().map(|v| big(v)).collect())
            .collect();
        let generators = self
            .generators
            .into_iter()
            .map(|(name, g)| (name, ExtElement::new(g.q, big(&g.a))))
            .collect();
        Ok(ExtensionSpec {
            q_size: self.q_size,
            q_table: self.q_table,
            n: self.n,
            phi,
            coc,
            generators,
        })
    }

    pub fn from_spec(spec: &ExtensionSpec) -> Result<Self> {
        let phi = spec
            .phi
            .iter()
            .map(|m| {
                m.to_rows()
                    .iter()
                    .map(|r| r.iter().map(to_i64).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let coc = spec
            .coc
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(to_i64).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut generators = IndexMap::new();
        for (name, g) in &spec.generators {
            let a = g.a.iter().map(to_i64).collect::<Result<Vec<_>>>()?;
            generators.insert(name.clone(), GeneratorBinding { q: g.q, a });
        }
        Ok(SpecFile {
            q_size: spec.q_size,
            q_table: spec.q_table.clone(),
            n: spec.n,
            phi,
            coc,
            generators,
        })
    }
}
