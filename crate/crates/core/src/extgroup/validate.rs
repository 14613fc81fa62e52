use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::ExtensionSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Shape { what: String },
    TableEntry { row: usize, col: usize },
    NotIdentity { q: usize },
    NoInverse { q: usize },
    NotAssociative { a: usize, b: usize, c: usize },
    NotUnimodular { q: usize },
    NotAntiHomomorphism { q: usize, r: usize },
    NotNormalized { q: usize, r: usize },
    CocycleIdentity { a: usize, b: usize, c: usize },
    BadGenerator { name: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { what } => write!(f, "shape: {what}"),
            Violation::TableEntry { row, col } => write!(f, "q_table[{row}][{col}] out of range"),
            Violation::NotIdentity { q } => write!(f, "0 is not an identity for {q}"),
            Violation::NoInverse { q } => write!(f, "{q} has no inverse"),
            Violation::NotAssociative { a, b, c } => write!(f, "({a}{b}){c} != {a}({b}{c})"),
            Violation::NotUnimodular { q } => write!(f, "phi({q}) is not unimodular"),
            Violation::NotAntiHomomorphism { q, r } => {
                write!(f, "phi({q}*{r}) != phi({r}) phi({q})")
            }
            Violation::NotNormalized { q, r } => write!(f, "coc({q},{r}) must vanish"),
            Violation::CocycleIdentity { a, b, c } => {
                write!(f, "cocycle identity fails at ({a},{b},{c})")
            }
            Violation::BadGenerator { name } => write!(f, "generator `{name}` has the wrong shape"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every axiom of an extension spec and lists the failures with
/// their witnessing indices. Later checks are skipped when the shape of the
/// data is already wrong.
pub fn validate_extension(spec: &ExtensionSpec) -> ValidationReport {
    let mut v = Vec::new();
    let s = spec.q_size;
    let n = spec.n;

    if s == 0 {
        v.push(Violation::Shape { what: "q_size must be positive".into() });
    }
    if spec.q_table.len() != s || spec.q_table.iter().any(|r| r.len() != s) {
        v.push(Violation::Shape { what: format!("q_table must be {s}x{s}") });
    }
    if spec.phi.len() != s || spec.phi.iter().any(|m| m.rows() != n || m.cols() != n) {
        v.push(Violation::Shape { what: format!("phi must hold {s} matrices of size {n}x{n}") });
    }
    if spec.coc.len() != s
        || spec.coc.iter().any(|r| r.len() != s || r.iter().any(|c| c.len() != n))
    {
        v.push(Violation::Shape { what: format!("coc must be {s}x{s} vectors of length {n}") });
    }
    if !v.is_empty() {
        return ValidationReport { violations: v };
    }

    for i in 0..s {
        for j in 0..s {
            if spec.q_table[i][j] >= s {
                v.push(Violation::TableEntry { row: i, col: j });
            }
        }
    }
    if !v.is_empty() {
        return ValidationReport { violations: v };
    }

    let t = &spec.q_table;
    for q in 0..s {
        if t[0][q] != q || t[q][0] != q {
            v.push(Violation::NotIdentity { q });
        }
        if !t[q].contains(&0) {
            v.push(Violation::NoInverse { q });
        }
    }
    for a in 0..s {
        for b in 0..s {
            for c in 0..s {
                if t[t[a][b]][c] != t[a][t[b][c]] {
                    v.push(Violation::NotAssociative { a, b, c });
                }
            }
        }
    }
    if !v.is_empty() {
        return ValidationReport { violations: v };
    }

    for q in 0..s {
        let det = spec.phi[q].determinant().expect("square by shape check");
        if !det.abs().is_one() {
            v.push(Violation::NotUnimodular { q });
        }
    }
    for q in 0..s {
        for r in 0..s {
            let lhs = &spec.phi[t[q][r]];
            let rhs = spec.phi[r].mul(&spec.phi[q]).expect("square by shape check");
            if *lhs != rhs {
                v.push(Violation::NotAntiHomomorphism { q, r });
            }
        }
    }
    for q in 0..s {
        if spec.coc[0][q].iter().any(|x| !x.is_zero()) {
            v.push(Violation::NotNormalized { q: 0, r: q });
        }
        if q != 0 && spec.coc[q][0].iter().any(|x| !x.is_zero()) {
            v.push(Violation::NotNormalized { q, r: 0 });
        }
    }
    // coc(ab, c) + phi(c) coc(a, b) = coc(a, bc) + coc(b, c)
    for a in 0..s {
        for b in 0..s {
            let moved: Vec<Vec<_>> = (0..s)
                .map(|c| spec.phi[c].mul_vec(&spec.coc[a][b]).expect("shape checked"))
                .collect();
            for c in 0..s {
                let ok = (0..n).all(|i| {
                    &spec.coc[t[a][b]][c][i] + &moved[c][i] == &spec.coc[a][t[b][c]][i] + &spec.coc[b][c][i]
                });
                if !ok {
                    v.push(Violation::CocycleIdentity { a, b, c });
                }
            }
        }
    }
    for (name, g) in &spec.generators {
        if g.q >= s || g.a.len() != n {
            v.push(Violation::BadGenerator { name: name.clone() });
        }
    }
    ValidationReport { violations: v }
}
