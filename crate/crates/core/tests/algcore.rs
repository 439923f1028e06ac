use entwined::algcore::{
    check_algebra, check_bimodule, check_coalgebra, restrict_bimodule, subalgebra, Algebra, Bimodule, Coalgebra,
};
use entwined::exactlin::{Field, FieldSpec, Matrix, PrimeField, Rationals};
use entwined::zoo::{
    build_example, group_algebra, grouplike_coalgebra, product_of_fields, random_bimodule, truncated_polynomial,
    GroupPresentation, EXAMPLES,
};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn zoo_algebras_hold<F: Field>(name: &str, f: F) {
    let ca = build_example(name, f).unwrap();
    assert!(check_algebra(ca.algebra()).all_hold(), "{name}");
    assert!(check_coalgebra(ca.coalgebra()).all_hold(), "{name}");
    assert!(check_bimodule(&Bimodule::regular(ca.algebra())).all_hold(), "{name}");
}

#[test]
fn zoo_structures_satisfy_axioms() {
    for ex in EXAMPLES {
        match ex.field {
            FieldSpec::Rationals => zoo_algebras_hold(ex.name, Rationals),
            FieldSpec::Prime(p) => zoo_algebras_hold(ex.name, PrimeField::new(p).unwrap()),
        }
    }
}

#[test]
fn perturbed_product_is_caught_with_witness() {
    let q = Rationals;
    let a = group_algebra(&GroupPresentation::cyclic(3), q).unwrap();
    let mut table: Vec<Vec<Vec<_>>> = (0..3)
        .map(|i| (0..3).map(|j| a.basis_product(i, j).to_vec()).collect())
        .collect();
    table[1][2][0] = q.from_i64(2);
    let bad = Algebra::from_table(q, table, a.unit().to_vec()).unwrap();
    let r = check_algebra(&bad);
    assert!(!r.all_hold());
    let failing: Vec<_> = r.failing().collect();
    assert!(failing.iter().all(|c| !c.witnesses.is_empty() && c.failures >= c.witnesses.len()));
}

#[test]
fn wrong_unit_is_caught() {
    let q = Rationals;
    let a = truncated_polynomial(3, q).unwrap();
    let table: Vec<Vec<Vec<_>>> = (0..3)
        .map(|i| (0..3).map(|j| a.basis_product(i, j).to_vec()).collect())
        .collect();
    let bad = Algebra::from_table(q, table, a.basis_vector(1)).unwrap();
    let r = check_algebra(&bad);
    assert!(r.holds("associativity"));
    assert!(!r.holds("unit"));
}

#[test]
fn perturbed_coalgebra_is_caught() {
    let f = PrimeField::new(3).unwrap();
    let c = grouplike_coalgebra(3, f).unwrap();
    let mut counit = c.counit().to_vec();
    counit[2] = 2;
    let bad = Coalgebra::from_tables(f, c.tables(), counit).unwrap();
    let r = check_coalgebra(&bad);
    assert!(!r.holds("counit"));
    assert!(!r.get("counit").unwrap().witnesses.is_empty());

    let mut tables = c.tables();
    tables[0][1][1] = 1;
    let r = check_coalgebra(&Coalgebra::from_tables(f, tables, c.counit().to_vec()).unwrap());
    assert!(!r.all_hold());
}

#[test]
fn perturbed_bimodule_is_caught() {
    let q = Rationals;
    let a = group_algebra(&GroupPresentation::cyclic(2), q).unwrap();
    let m = Bimodule::regular(&a);
    let mut left = m.left_actions().to_vec();
    left[1].set(0, 0, q.one());
    let bad = Bimodule::new(a, 2, left, m.right_actions().to_vec()).unwrap();
    let r = check_bimodule(&bad);
    assert!(!r.all_hold());
    assert!(r.failing().all(|c| !c.witnesses.is_empty()));
}

#[test]
fn product_of_fields_is_commutative_semisimple() {
    let q = Rationals;
    let a = product_of_fields(3, q).unwrap();
    assert!(a.is_commutative());
    let m = Bimodule::regular(&a);
    // centre of a commutative algebra acting on itself is everything
    assert_eq!(m.invariants_dim(), 3);
}

#[test]
fn invariants_of_noncommutative_regular_bimodule_is_the_centre() {
    // the centre of Q[S3] is spanned by the three class sums
    let a = group_algebra(&GroupPresentation::s3(), Rationals).unwrap();
    assert_eq!(Bimodule::regular(&a).invariants_dim(), 3);
}

#[test]
fn restriction_to_subalgebra() {
    let q = Rationals;
    let a = group_algebra(&GroupPresentation::cyclic(4), q).unwrap();
    // span{1, g²}
    let incl = Matrix::from_columns(q, 4, &[a.basis_vector(0), a.basis_vector(2)]);
    let b = subalgebra(&a, &incl).unwrap();
    assert_eq!(b.algebra.dim(), 2);
    assert!(check_algebra(&b.algebra).all_hold());
    let m = restrict_bimodule(&Bimodule::regular(&a), &incl).unwrap();
    assert_eq!(m.dim(), 4);
    assert!(check_bimodule(&m).all_hold());
    // span{g} is not closed
    let bad = Matrix::from_columns(q, 4, &[a.basis_vector(0), a.basis_vector(1)]);
    assert!(subalgebra(&a, &bad).is_err());
}

#[test]
fn seeded_random_bimodules_are_bimodules() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let a = group_algebra(&GroupPresentation::cyclic(3), PrimeField::new(3).unwrap()).unwrap();
    for _ in 0..20 {
        let m = random_bimodule(&a, &mut rng);
        assert!(check_bimodule(&m).all_hold());
    }
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix<Rationals>> {
    prop::collection::vec(-2i64..=2, n * n)
        .prop_map(move |v| Matrix::from_fn(Rationals, n, n, |i, j| Rationals.from_i64(v[i * n + j])))
        .prop_filter("invertible", |m| m.rank() == m.rows())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rebasing_preserves_algebra_axioms(t in invertible(3)) {
        let a = truncated_polynomial(3, Rationals).unwrap().rebase(&t).unwrap();
        prop_assert!(check_algebra(&a).all_hold());
    }

    #[test]
    fn rebasing_preserves_coalgebra_axioms(qm in invertible(3)) {
        let c = grouplike_coalgebra(3, Rationals).unwrap().rebase(&qm).unwrap();
        prop_assert!(check_coalgebra(&c).all_hold());
    }

    #[test]
    fn product_is_bilinear(x in prop::collection::vec(-3i64..=3, 4), y in prop::collection::vec(-3i64..=3, 4), z in prop::collection::vec(-3i64..=3, 4)) {
        let q = Rationals;
        let a = group_algebra(&GroupPresentation::cyclic(4), q).unwrap();
        let v = |w: &[i64]| w.iter().map(|&n| q.from_i64(n)).collect::<Vec<_>>();
        let (x, y, z) = (v(&x), v(&y), v(&z));
        let yz: Vec<_> = y.iter().zip(&z).map(|(p, r)| q.add(p, r)).collect();
        let lhs = a.mul(&x, &yz);
        let rhs: Vec<_> = a.mul(&x, &y).iter().zip(a.mul(&x, &z)).map(|(p, r)| q.add(p, &r)).collect();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
    }
}
