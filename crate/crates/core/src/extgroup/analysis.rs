use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::symbolic::SymbolicElement;
use super::{validate_extension, ExtElement, ExtensionSpec};
use crate::error::{GentorError, Result};
use crate::intlin::{solve_integer_linear, IntMatrix};

pub(crate) fn require_valid(spec: &ExtensionSpec) -> Result<()> {
    let report = validate_extension(spec);
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(GentorError::InvalidSpec(format!(
            "{v} ({} violation(s) in total)",
            report.violations.len()
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionReport {
    pub torsion_free: bool,
    /// A nontrivial element of finite order, when one exists.
    pub witness: Option<ExtElement>,
    pub witness_order: Option<usize>,
}

/// Decides torsion-freeness.
///
/// For each `q != 0` of order `o`, `(q, a)^o = (0, N_q a + c_q)` with `N_q`
/// and `c_q` obtained by multiplying symbolically. A torsion element over `q`
/// exists iff `N_q a = -c_q` has an integer solution.
pub fn is_torsion_free(spec: &ExtensionSpec) -> Result<TorsionReport> {
    require_valid(spec)?;
    Ok(torsion_report(spec))
}

pub(crate) fn torsion_report(spec: &ExtensionSpec) -> TorsionReport {
    for q in 1..spec.q_size {
        let o = spec.q_order(q);
        let g = SymbolicElement::generic(spec, q);
        let p = spec.sym_pow(&g, o as u64);
        debug_assert_eq!(p.q, 0);
        let rhs: Vec<BigInt> = p.cst.iter().map(|c| -c).collect();
        if let Some(a) = solve_integer_linear(&p.lin, &rhs).expect("square system") {
            return TorsionReport {
                torsion_free: false,
                witness: Some(ExtElement::new(q, a)),
                witness_order: Some(o),
            };
        }
    }
    TorsionReport {
        torsion_free: true,
        witness: None,
        witness_order: None,
    }
}

/// Rank of the fixed lattice `{a : phi(q) a = a for all q}`.
pub fn center_rank(spec: &ExtensionSpec) -> Result<usize> {
    require_valid(spec)?;
    Ok(fixed_rank(spec))
}

pub(crate) fn fixed_rank(spec: &ExtensionSpec) -> usize {
    let id = IntMatrix::identity(spec.n);
    let mut stacked = IntMatrix::zeros(0, spec.n);
    for q in 1..spec.q_size {
        let d = spec.phi[q].sub(&id).expect("square");
        stacked = stacked.vstack(&d).expect("same width");
    }
    spec.n - stacked.rank()
}

/// Relation rows for `G^ab` over the columns `t_1..t_n, r_0..r_{|Q|-1}`.
///
/// `pi((q, a)) = (a | e_q)`. Rows: `(e_i - phi(q) e_i | 0)` from conjugating
/// translations, `(-coc(q, q') | e_q + e_q' - e_qq')` from `r_q r_q' = r_qq' t^coc`,
/// and `(0 | e_0)`.
pub fn abelianization_relations(spec: &ExtensionSpec) -> Result<IntMatrix> {
    require_valid(spec)?;
    Ok(relations_unchecked(spec))
}

pub(crate) fn relations_unchecked(spec: &ExtensionSpec) -> IntMatrix {
    let n = spec.n;
    let s = spec.q_size;
    let width = n + s;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for q in 1..s {
        for i in 0..n {
            let mut row = vec![BigInt::zero(); width];
            for k in 0..n {
                row[k] = -&spec.phi[q][(k, i)];
            }
            row[i] += 1;
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    for q in 1..s {
        for r in 1..s {
            let mut row = vec![BigInt::zero(); width];
            for k in 0..n {
                row[k] = -&spec.coc[q][r][k];
            }
            row[n + q] += 1;
            row[n + r] += 1;
            row[n + spec.q_mul(q, r)] -= 1;
            rows.push(row);
        }
    }
    let mut last = vec![BigInt::zero(); width];
    last[n] = 1.into();
    rows.push(last);
    IntMatrix::from_rows_with_cols(rows, width).expect("rows built with fixed width")
}

/// The coordinate representatives `{(q, 0)}`.
pub fn transversal(spec: &ExtensionSpec) -> Vec<ExtElement> {
    (0..spec.q_size)
        .map(|q| ExtElement::new(q, vec![BigInt::zero(); spec.n]))
        .collect()
}

/// Representatives `(s, 0)` of the right cosets `<q_g> s` in `Q`, hence of `A<g>` in `G`.
pub fn transversal_mod(spec: &ExtensionSpec, g: &ExtElement) -> Vec<ExtElement> {
    let mut covered = vec![false; spec.q_size];
    let mut reps = Vec::new();
    for s in 0..spec.q_size {
        if covered[s] {
            continue;
        }
        let mut h = s;
        loop {
            covered[h] = true;
            h = spec.q_mul(g.q, h);
            if h == s {
                break;
            }
        }
        reps.push(ExtElement::new(s, vec![BigInt::zero(); spec.n]));
    }
    reps
}

/// `G_1 x G_2` with `Q = Q_1 x Q_2` indexed as `q_1 |Q_2| + q_2`.
///
/// Generator names are kept when the two tables are disjoint and suffixed
/// with `_1` / `_2` otherwise.
pub fn direct_product(a: &ExtensionSpec, b: &ExtensionSpec) -> Result<ExtensionSpec> {
    require_valid(a)?;
    require_valid(b)?;
    let (sa, sb) = (a.q_size, b.q_size);
    let (na, nb) = (a.n, b.n);
    let idx = |x: usize, y: usize| x * sb + y;
    let q_size = sa * sb;
    let mut q_table = vec![vec![0; q_size]; q_size];
    let mut phi = vec![IntMatrix::zeros(0, 0); q_size];
    let mut coc = vec![vec![Vec::new(); q_size]; q_size];
    for x1 in 0..sa {
        for y1 in 0..sb {
            let i = idx(x1, y1);
            phi[i] = IntMatrix::block_diagonal(&a.phi[x1], &b.phi[y1]);
            for x2 in 0..sa {
                for y2 in 0..sb {
                    let j = idx(x2, y2);
                    q_table[i][j] = idx(a.q_mul(x1, x2), b.q_mul(y1, y2));
                    let mut c = a.coc[x1][x2].clone();
                    c.extend(b.coc[y1][y2].iter().cloned());
                    coc[i][j] = c;
                }
            }
        }
    }
    let clash = a
        .generators
        .iter()
        .any(|(n, _)| b.generators.iter().any(|(m, _)| m == n));
    let rename = |name: &str, side: &str| {
        if clash {
            format!("{name}_{side}")
        } else {
            name.to_string()
        }
    };
    let mut generators = Vec::new();
    for (name, g) in &a.generators {
        let mut v = g.a.clone();
        v.extend(std::iter::repeat_n(BigInt::zero(), nb));
        generators.push((rename(name, "1"), ExtElement::new(idx(g.q, 0), v)));
    }
    for (name, g) in &b.generators {
        let mut v = vec![BigInt::zero(); na];
        v.extend(g.a.iter().cloned());
        generators.push((rename(name, "2"), ExtElement::new(idx(0, g.q), v)));
    }
    Ok(ExtensionSpec {
        q_size,
        q_table,
        n: na + nb,
        phi,
        coc,
        generators,
    })
}
