use entwined::exactlin::{quotient_basis, rank_of_rows, Field, FieldSpec, Matrix, PrimeField, Rationals, SparseMap};
use proptest::prelude::*;

fn q_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rationals>> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        Matrix::from_fn(Rationals, rows, cols, |i, j| Rationals.from_i64(v[i * cols + j]))
    })
}

fn fp_matrix(p: u64, rows: usize, cols: usize) -> impl Strategy<Value = Matrix<PrimeField>> {
    prop::collection::vec(0..p as i64, rows * cols).prop_map(move |v| {
        let f = PrimeField::new(p).unwrap();
        Matrix::from_fn(f, rows, cols, |i, j| f.from_i64(v[i * cols + j]))
    })
}

/// Fraction-free Bareiss elimination over i128, independent of the library.
fn bareiss_rank(m: &Matrix<Rationals>) -> usize {
    let mut a: Vec<Vec<i128>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_integer().try_into().unwrap()).collect())
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
    }
    rank
}

#[test]
fn field_text_round_trip() {
    let q = Rationals;
    for s in ["0", "1", "-1/2", "22/7", "-5"] {
        assert_eq!(q.format(&q.parse(s).unwrap()), s);
    }
    assert_eq!(q.format(&q.parse("4/6").unwrap()), "2/3");
    assert!(q.parse("1/0").is_err());
    assert!(q.parse("x").is_err());
    let f = PrimeField::new(7).unwrap();
    assert_eq!(f.format(&f.parse("6").unwrap()), "6");
    assert!(f.parse("-1").is_err(), "residues are written 0..p-1");
    assert!(f.parse("7").is_err());
    assert_eq!(f.spec(), FieldSpec::Prime(7));
    assert_eq!(f.spec().to_string(), "F_7");
    assert_eq!(q.spec().to_string(), "Q");
    assert!(PrimeField::new(4).is_err());
    assert!(PrimeField::new(1).is_err());
}

#[test]
fn prime_field_inverses() {
    for p in [2u64, 3, 5, 101, 4_294_967_291] {
        let f = PrimeField::new(p).unwrap();
        for a in [1u64, 2 % p, p - 1, p / 2 + 1] {
            let a = a % p;
            if a == 0 {
                continue;
            }
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), 1, "p={p} a={a}");
        }
        assert_eq!(f.inv(&0), None);
    }
}

#[test]
fn characteristic_changes_rank() {
    // [[1,1],[1,-1]] is invertible over Q, singular over F_2
    let rows = [[1i64, 1], [1, -1]];
    let q = Matrix::from_fn(Rationals, 2, 2, |i, j| Rationals.from_i64(rows[i][j]));
    let f2 = PrimeField::new(2).unwrap();
    let m2 = Matrix::from_fn(f2, 2, 2, |i, j| f2.from_i64(rows[i][j]));
    assert_eq!(q.rank(), 2);
    assert_eq!(m2.rank(), 1);
}

#[test]
fn quotient_of_span() {
    let q = Rationals;
    let spanning = Matrix::from_columns(q, 3, &[vec![q.one(), q.one(), q.zero()], vec![q.from_i64(2), q.from_i64(2), q.zero()]]);
    let quot = quotient_basis(&q, 3, &spanning);
    assert_eq!(quot.dim(), 2);
    assert_eq!(quot.ambient_dim(), 3);
}

proptest! {
    #[test]
    fn rank_matches_bareiss_and_transpose(m in q_matrix(4, 5)) {
        let r = m.rank();
        prop_assert_eq!(r, bareiss_rank(&m));
        prop_assert_eq!(r, m.transpose().rank());
    }

    #[test]
    fn rank_nullity(m in fp_matrix(3, 4, 6)) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn solve_recovers_a_preimage(m in q_matrix(4, 3), x in prop::collection::vec(-3i64..=3, 3)) {
        let x: Vec<_> = x.into_iter().map(|v| Rationals.from_i64(v)).collect();
        let b = m.mul_vec(&x);
        let y = m.solve(&b).expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn inverse_is_two_sided(m in fp_matrix(5, 3, 3)) {
        match m.inverse() {
            Some(inv) => {
                let id = Matrix::identity(*m.field(), 3);
                prop_assert_eq!(m.mul(&inv), id.clone());
                prop_assert_eq!(inv.mul(&m), id);
            }
            None => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn sparse_engine_agrees_with_dense(m in fp_matrix(2, 5, 7)) {
        let f = *m.field();
        prop_assert_eq!(rank_of_rows(&f, m.cols(), m.sparse_rows()), m.rank());
        let s = SparseMap::from_dense(&m);
        prop_assert_eq!(s.to_dense(), m.clone());
        prop_assert_eq!(s.rank(), m.rank());
    }

    #[test]
    fn image_basis_spans_image(m in q_matrix(3, 4)) {
        let img = m.image_basis();
        prop_assert_eq!(img.cols(), m.rank());
        prop_assert_eq!(img.hstack(&m).rank(), img.cols());
    }

    #[test]
    fn kron_rank_multiplies(a in fp_matrix(3, 2, 3), b in fp_matrix(3, 2, 2)) {
        prop_assert_eq!(a.kron(&b).rank(), a.rank() * b.rank());
    }
}
