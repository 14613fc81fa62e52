use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::catalog::classic::{build_dihedral_infinite, build_klein_bottle, build_promislow};
use crate::group::ComputableGroup;
use crate::intlin::{bigvec, cokernel_structure};

fn e(q: usize, a: &[i64]) -> ExtElement {
    ExtElement::new(q, bigvec(a))
}

/// `S_3` as permutations of `{0,1,2}`, identity first; `table[i][j]` is
/// "apply `i`, then `j`".
fn s3_table() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let find = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| find([b[a[0]], b[a[1]], b[a[2]]]))
                .collect()
        })
        .collect()
}

#[test]
fn dinf_is_valid() {
    assert!(validate_extension(&build_dihedral_infinite()).is_valid());
    assert!(validate_extension(&build_klein_bottle()).is_valid());
    assert!(validate_extension(&build_promislow()).is_valid());
}

#[test]
fn homomorphic_phi_on_nonabelian_q_is_rejected() {
    let table = s3_table();
    let s = table.len();
    // phi(q) e_t = e_{q t}: a homomorphism, not an anti-homomorphism
    let phi = (0..s)
        .map(|q| {
            IntMatrix::from_fn(s, s, |r, c| BigInt::from(u8::from(table[q][c] == r)))
        })
        .collect();
    let spec = ExtensionSpec {
        q_size: s,
        q_table: table,
        n: s,
        phi,
        coc: vec![vec![vec![BigInt::from(0); s]; s]; s],
        generators: vec![],
    };
    let report = validate_extension(&spec);
    assert!(!report.is_valid());
    let witness = report.violations.iter().find_map(|v| match v {
        Violation::NotAntiHomomorphism { q, r } => Some((*q, *r)),
        _ => None,
    });
    let (q, r) = witness.expect("anti-homomorphism failure is reported");
    assert_ne!(spec.q_mul(q, r), spec.q_mul(r, q));
}

#[test]
fn perturbed_cocycle_is_rejected() {
    let mut spec = build_klein_bottle();
    spec.coc[1][1][0] += 1;
    let report = validate_extension(&spec);
    assert!(report
        .violations
        .iter()
        .any(|v| matches!(v, Violation::CocycleIdentity { .. })));
    assert!(ExtGroup::new("bad", spec).is_err());
}

#[test]
fn multiplication_examples() {
    let d = build_dihedral_infinite();
    assert_eq!(d.mul(&e(1, &[0]), &e(1, &[0])), d.identity());
    let g = e(1, &[5]);
    assert_eq!(d.mul(&g, &d.identity()), g);

    let k = build_klein_bottle();
    assert_eq!(k.mul(&e(1, &[0, 0]), &e(1, &[0, 0])), e(0, &[0, 1]));
    let (x, y) = (e(0, &[1, 0]), e(1, &[0, 0]));
    assert_eq!(k.conj(&x, &y), k.inv(&x));
    assert_eq!(k.inv(&k.identity()), k.identity());
    assert_eq!(k.conj(&y, &k.identity()), y);
    assert_eq!(k.pow(&y, -3), k.inv(&k.pow(&y, 3)));
}

#[test]
fn torsion_freeness() {
    let d = is_torsion_free(&build_dihedral_infinite()).unwrap();
    assert!(!d.torsion_free);
    assert_eq!(d.witness, Some(e(1, &[0])));
    assert_eq!(d.witness_order, Some(2));
    assert!(is_torsion_free(&build_klein_bottle()).unwrap().torsion_free);
    assert!(is_torsion_free(&build_promislow()).unwrap().torsion_free);
}

#[test]
fn center_ranks() {
    assert_eq!(center_rank(&ExtensionSpec::free_abelian(&["a", "b", "c"])).unwrap(), 3);
    assert_eq!(center_rank(&build_klein_bottle()).unwrap(), 1);
    assert_eq!(center_rank(&build_promislow()).unwrap(), 0);
}

#[test]
fn abelianizations() {
    let d = cokernel_structure(&abelianization_relations(&build_dihedral_infinite()).unwrap());
    assert_eq!((d.invariant_factors.clone(), d.free_rank), (bigvec(&[2, 2]), 0));
    let p = cokernel_structure(&abelianization_relations(&build_promislow()).unwrap());
    assert_eq!((p.invariant_factors.clone(), p.free_rank), (bigvec(&[4, 4]), 0));
    let z = cokernel_structure(&abelianization_relations(&ExtensionSpec::free_abelian(&["a", "b"])).unwrap());
    assert_eq!((z.invariant_factors.len(), z.free_rank), (0, 2));
    let k = cokernel_structure(&abelianization_relations(&build_klein_bottle()).unwrap());
    assert_eq!((k.invariant_factors.clone(), k.free_rank), (bigvec(&[2]), 1));
}

#[test]
fn transversals() {
    let triv = ExtensionSpec::free_abelian(&["a"]);
    assert_eq!(transversal(&triv), vec![triv.identity()]);
    let p = build_promislow();
    let x = p.generator("x").unwrap().clone();
    assert_eq!(transversal_mod(&p, &x).len(), 2);
    let x2 = p.pow(&x, 2);
    assert_eq!(transversal_mod(&p, &x2).len(), 4);
    assert_eq!(transversal(&p).len(), 4);
}

#[test]
fn direct_products() {
    let p = build_promislow();
    let pp = direct_product(&p, &p).unwrap();
    assert_eq!((pp.q_size, pp.n), (16, 6));
    assert!(validate_extension(&pp).is_valid());
    assert_eq!(pp.generators.len(), 4);
    assert!(pp.generator("x_1").is_some());

    let triv = ExtensionSpec {
        q_size: 1,
        q_table: vec![vec![0]],
        n: 0,
        phi: vec![IntMatrix::zeros(0, 0)],
        coc: vec![vec![vec![]]],
        generators: vec![],
    };
    let same = direct_product(&p, &triv).unwrap();
    assert_eq!(same, p);
}

#[test]
fn promislow_gates() {
    let g = ExtGroup::new("promislow", build_promislow()).unwrap();
    let s = g.spec();
    let x = s.generator("x").unwrap().clone();
    let y = s.generator("y").unwrap().clone();
    let (x2, y2) = (s.pow(&x, 2), s.pow(&y, 2));
    assert_eq!(s.conj(&x2, &y), s.pow(&x, -2));
    assert_eq!(s.conj(&y2, &x), s.pow(&y, -2));
    assert_eq!(ComputableGroup::torsion_free(&g), Some(true));
    let ab = g.abelianization().unwrap();
    assert_eq!(ab.invariant_factors, bigvec(&[4, 4]));
}

#[test]
fn schema_round_trip() {
    for spec in [build_dihedral_infinite(), build_klein_bottle(), build_promislow()] {
        let file = SpecFile::from_spec(&spec).unwrap();
        let back = SpecFile::from_json(&file.to_json_pretty()).unwrap().into_spec().unwrap();
        assert_eq!(back, spec);
    }
}

fn groups() -> Vec<ExtGroup> {
    vec![
        ExtGroup::new("dinf", build_dihedral_infinite()).unwrap(),
        ExtGroup::new("klein", build_klein_bottle()).unwrap(),
        ExtGroup::new("promislow", build_promislow()).unwrap(),
    ]
}

fn elem(spec: &ExtensionSpec, q: usize, a: &[i64]) -> ExtElement {
    ExtElement::new(q % spec.q_size, a[..spec.n].iter().map(|&v| BigInt::from(v)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_axioms(
        which in 0usize..3,
        qs in prop::array::uniform3(0usize..4),
        av in prop::array::uniform3(prop::collection::vec(-6i64..6, 3)),
    ) {
        let g = &groups()[which];
        let s = g.spec();
        let a = elem(s, qs[0], &av[0]);
        let b = elem(s, qs[1], &av[1]);
        let c = elem(s, qs[2], &av[2]);
        prop_assert_eq!(s.mul(&s.mul(&a, &b), &c), s.mul(&a, &s.mul(&b, &c)));
        prop_assert_eq!(s.mul(&a, &s.inv(&a)), s.identity());
        prop_assert_eq!(s.mul(&s.inv(&a), &a), s.identity());
        prop_assert_eq!(s.conj(&s.conj(&a, &b), &c), s.conj(&a, &s.mul(&b, &c)));
    }

    #[test]
    fn pi_is_a_homomorphism(
        which in 0usize..3,
        qs in prop::array::uniform2(0usize..4),
        av in prop::array::uniform2(prop::collection::vec(-6i64..6, 3)),
    ) {
        let g = &groups()[which];
        let s = g.spec();
        let a = elem(s, qs[0], &av[0]);
        let b = elem(s, qs[1], &av[1]);
        let ab = g.abelianization().unwrap();
        let sum: Vec<BigInt> = g.pi(&a).unwrap().iter().zip(g.pi(&b).unwrap()).map(|(x, y)| x + y).collect();
        prop_assert_eq!(
            ab.canonical(&g.pi(&s.mul(&a, &b)).unwrap()).unwrap(),
            ab.canonical(&sum).unwrap()
        );
    }

    #[test]
    fn bieberbach_powers_are_nontrivial(
        which in 1usize..3,
        q in 0usize..4,
        a in prop::collection::vec(-6i64..6, 3),
    ) {
        let g = &groups()[which];
        let s = g.spec();
        let x = elem(s, q, &a);
        prop_assume!(!x.is_identity());
        for j in 1..=12 {
            prop_assert!(!s.pow(&x, j).is_identity());
        }
    }
}

#[test]
fn center_rank_zero_iff_finite_abelianization() {
    for g in groups() {
        if ComputableGroup::torsion_free(&g) != Some(true) {
            continue;
        }
        let finite = g.abelianization().unwrap().free_rank == 0;
        assert_eq!(ComputableGroup::center_rank(&g) == Some(0), finite, "{}", g.name());
    }
}
