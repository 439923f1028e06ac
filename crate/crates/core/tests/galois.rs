use entwined::algcore::{check_bimodule, Bimodule, Coalgebra};
use entwined::entwine::{ac_bimodule, check_entwining, Entwining};
use entwined::exactlin::{Field, Matrix, PrimeField, Rationals};
use entwined::galois::{
    check_beta_bimodule, check_coaction, check_translation_identity, coinvariants, galois_beta, tensor_over_b,
    ComoduleAlgebra, GaloisExtension,
};
use entwined::zoo::{
    build_example, group_algebra, non_galois_example, quotient_coaction, sweedler_h4, trivial_extension,
    truncated_polynomial, GroupPresentation,
};
use entwined::Error;

fn c4_c2<F: Field>(f: F) -> ComoduleAlgebra<F> {
    quotient_coaction(&GroupPresentation::cyclic(4).with_subgroup(vec![0, 2]).unwrap(), f).unwrap()
}

fn unit_vec<F: Field>(f: &F, n: usize, k: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    v[k] = f.one();
    v
}

/// `x ⊗ y` in `V ⊗ W` under the flat index convention.
fn tensor<F: Field>(f: &F, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(f.mul(a, b));
        }
    }
    out
}

fn add_into<F: Field>(f: &F, acc: &mut [F::Elem], v: &[F::Elem], c: &F::Elem) {
    for (s, t) in acc.iter_mut().zip(v) {
        *s = f.add(s, &f.mul(c, t));
    }
}

/// Entwining axioms by direct expansion on basis elements, written with
/// explicit sums instead of composed Kronecker products.
fn entwining_axioms_by_expansion<F: Field>(e: &Entwining<F>) -> [bool; 4] {
    let f = e.field().clone();
    let a = e.algebra();
    let c = e.coalgebra();
    let (da, dc) = (a.dim(), c.dim());
    // ψ applied to c ⊗ x for a general x ∈ A
    let psi_of = |i: usize, x: &[F::Elem]| {
        let mut acc = vec![f.zero(); da * dc];
        for (j, xj) in x.iter().enumerate() {
            if !f.is_zero(xj) {
                add_into(&f, &mut acc, &e.apply(i, j), xj);
            }
        }
        acc
    };

    // (aa')_α ⊗ c^α = a_α a'_β ⊗ c^{αβ}
    let mut mult = true;
    for i in 0..dc {
        for j in 0..da {
            for k in 0..da {
                let lhs = psi_of(i, a.basis_product(j, k));
                let mut rhs = vec![f.zero(); da * dc];
                let first = e.apply(i, j);
                for alpha in 0..da {
                    for l in 0..dc {
                        let coef = &first[alpha * dc + l];
                        if f.is_zero(coef) {
                            continue;
                        }
                        let second = e.apply(l, k);
                        for beta in 0..da {
                            for m in 0..dc {
                                let c2 = &second[beta * dc + m];
                                if f.is_zero(c2) {
                                    continue;
                                }
                                let prod = a.mul(&unit_vec(&f, da, alpha), &unit_vec(&f, da, beta));
                                add_into(&f, &mut rhs, &tensor(&f, &prod, &unit_vec(&f, dc, m)), &f.mul(coef, c2));
                            }
                        }
                    }
                }
                mult &= lhs == rhs;
            }
        }
    }

    // 1_α ⊗ c^α = 1 ⊗ c
    let unit = (0..dc).all(|i| psi_of(i, a.unit()) == tensor(&f, a.unit(), &unit_vec(&f, dc, i)));

    // a_α ⊗ (c^α)_1 ⊗ (c^α)_2 = a_{βα} ⊗ (c_1)^α ⊗ (c_2)^β
    let delta = c.comult();
    let mut comult = true;
    for i in 0..dc {
        for j in 0..da {
            let p = e.apply(i, j);
            let mut lhs = vec![f.zero(); da * dc * dc];
            for alpha in 0..da {
                for l in 0..dc {
                    let coef = &p[alpha * dc + l];
                    if !f.is_zero(coef) {
                        add_into(&f, &mut lhs, &tensor(&f, &unit_vec(&f, da, alpha), &delta.column(l)), coef);
                    }
                }
            }
            let mut rhs = vec![f.zero(); da * dc * dc];
            for c1 in 0..dc {
                for c2 in 0..dc {
                    let d = delta.get(c1 * dc + c2, i);
                    if f.is_zero(d) {
                        continue;
                    }
                    // ψ(c2 ⊗ a) = a_β ⊗ c2^β, then ψ(c1 ⊗ a_β)
                    let inner = e.apply(c2, j);
                    for beta in 0..da {
                        for m in 0..dc {
                            let w = &inner[beta * dc + m];
                            if f.is_zero(w) {
                                continue;
                            }
                            let outer = e.apply(c1, beta);
                            let term = tensor(&f, &outer, &unit_vec(&f, dc, m));
                            add_into(&f, &mut rhs, &term, &f.mul(d, w));
                        }
                    }
                }
            }
            comult &= lhs == rhs;
        }
    }

    // a_α ε(c^α) = a ε(c)
    let eps = c.counit();
    let counit = (0..dc).all(|i| {
        (0..da).all(|j| {
            let p = e.apply(i, j);
            let mut lhs = vec![f.zero(); da];
            for alpha in 0..da {
                for l in 0..dc {
                    let v = f.mul(&p[alpha * dc + l], &eps[l]);
                    lhs[alpha] = f.add(&lhs[alpha], &v);
                }
            }
            let mut rhs = unit_vec(&f, da, j);
            for x in rhs.iter_mut() {
                *x = f.mul(x, &eps[i]);
            }
            lhs == rhs
        })
    });
    [mult, unit, comult, counit]
}

#[test]
fn coaction_checks() {
    let q = Rationals;
    let a = truncated_polynomial(2, q).unwrap();
    assert!(check_coaction(&trivial_extension(&a)).all_hold());
    assert!(check_coaction(&c4_c2(q)).all_hold());
    let zero = ComoduleAlgebra::new(a.clone(), Coalgebra::ground(q), Matrix::zeros(q, 2, 2)).unwrap();
    let r = check_coaction(&zero);
    assert!(!r.holds("counit"));
    assert!(matches!(GaloisExtension::new(zero), Err(Error::Invalid(_))));
    assert!(matches!(
        ComoduleAlgebra::new(a, Coalgebra::ground(q), Matrix::zeros(q, 2, 3)),
        Err(Error::DimensionMismatch(_))
    ));
}

#[test]
fn coinvariant_dimensions() {
    let q = Rationals;
    let a = truncated_polynomial(2, q).unwrap();
    assert_eq!(coinvariants(&trivial_extension(&a)).unwrap().algebra.dim(), 2);

    let c4c4 = build_example("c4-c4", q).unwrap();
    let b = coinvariants(&c4c4).unwrap();
    assert_eq!(b.inclusion.cols(), 1);
    assert_eq!(b.inclusion.column(0), unit_vec(&q, 4, 0));

    let b = coinvariants(&c4_c2(q)).unwrap();
    assert_eq!(b.inclusion.cols(), 2);
    let expected = Matrix::from_columns(q, 4, &[unit_vec(&q, 4, 0), unit_vec(&q, 4, 2)]);
    assert_eq!(b.inclusion.hstack(&expected).rank(), 2);

    assert_eq!(coinvariants(&non_galois_example(q)).unwrap().algebra.dim(), 2);
}

#[test]
fn tensor_over_b_dimensions() {
    let q = Rationals;
    let a = group_algebra(&GroupPresentation::cyclic(2), q).unwrap();
    let unit_only = Matrix::column_vector(q, unit_vec(&q, 2, 0));
    assert_eq!(tensor_over_b(&a, &unit_only).dim(), 4);
    assert_eq!(tensor_over_b(&a, &Matrix::identity(q, 2)).dim(), 2);
    let ca = c4_c2(q);
    let b = coinvariants(&ca).unwrap();
    assert_eq!(tensor_over_b(ca.algebra(), &b.inclusion).dim(), 8);
}

#[test]
fn beta_bijectivity() {
    let q = Rationals;
    let triv = GaloisExtension::new(trivial_extension(&truncated_polynomial(2, q).unwrap())).unwrap();
    assert!(triv.is_galois());
    assert_eq!(triv.beta().rows(), 2);

    let ext = GaloisExtension::new(c4_c2(q)).unwrap();
    assert!(ext.is_galois());
    assert_eq!((ext.beta().rows(), ext.beta().cols()), (8, 8));
    assert_eq!(ext.beta().rank(), 8);

    let ng = non_galois_example(q);
    let b = coinvariants(&ng).unwrap();
    let aba = tensor_over_b(ng.algebra(), &b.inclusion);
    let (beta, is_galois) = galois_beta(&ng, &aba).unwrap();
    assert!(!is_galois);
    assert!(beta.rank() <= 2);
    let ext = GaloisExtension::new(ng).unwrap();
    assert_eq!(ext.gamma().unwrap_err(), Error::NotGalois);
    assert!(matches!(ext.canonical_psi(), Err(Error::NotGalois)));
    assert!(matches!(check_translation_identity(&ext), Err(Error::NotGalois)));
}

#[test]
fn translation_map_values() {
    let q = Rationals;
    let triv = GaloisExtension::new(trivial_extension(&truncated_polynomial(2, q).unwrap())).unwrap();
    let one = unit_vec(&q, 2, 0);
    assert_eq!(triv.gamma().unwrap().column(0), triv.class_of(&one, &one));

    let ext = GaloisExtension::new(c4_c2(q)).unwrap();
    let gamma = ext.gamma().unwrap();
    // β(g³ ⊗ g) = g⁴ ⊗ c̄₁ = 1 ⊗ c̄₁
    assert_eq!(gamma.column(1), ext.class_of(&unit_vec(&q, 4, 3), &unit_vec(&q, 4, 1)));
    assert_eq!(gamma.column(0), ext.class_of(&unit_vec(&q, 4, 0), &unit_vec(&q, 4, 0)));
}

#[test]
fn canonical_psi_on_c4_c2_is_degree_shift() {
    for_both_fields(|ext| {
        let f = *ext.field();
        let psi = ext.canonical_psi().unwrap();
        for i in 0..2 {
            for k in 0..4 {
                let expected = tensor(&f, &unit_vec(&f, 4, k), &unit_vec(&f, 2, (i + k) % 2));
                assert_eq!(psi.apply(i, k), expected, "ψ(c{i} ⊗ g^{k})");
            }
        }
        assert!(check_entwining(&psi).all_hold());
        assert_eq!(entwining_axioms_by_expansion(&psi), [true; 4]);
        // (1 ⊗ c̄₀)·g = g ⊗ c̄₁
        let ac = ac_bimodule(&psi);
        let one_c0 = tensor(&f, &unit_vec(&f, 4, 0), &unit_vec(&f, 2, 0));
        assert_eq!(ac.right(1).mul_vec(&one_c0), tensor(&f, &unit_vec(&f, 4, 1), &unit_vec(&f, 2, 1)));
        assert!(check_bimodule(&ac).all_hold());
        assert!(check_beta_bimodule(&ext).unwrap());
        assert!(check_translation_identity(&ext).unwrap());
    });
}

fn for_both_fields(check: impl Fn(GaloisExtension<Rationals>) + Copy) {
    check(GaloisExtension::new(c4_c2(Rationals)).unwrap());
    // The same shape holds over F_2; rerun the generic part there.
    let ext = GaloisExtension::new(c4_c2(PrimeField::new(2).unwrap())).unwrap();
    assert!(ext.is_galois());
    let psi = ext.canonical_psi().unwrap();
    assert_eq!(entwining_axioms_by_expansion(&psi), [true; 4]);
    assert!(check_beta_bimodule(&ext).unwrap());
}

#[test]
fn sweedler_extension() {
    let q = Rationals;
    let ext = GaloisExtension::new(sweedler_h4(q).unwrap()).unwrap();
    assert_eq!(ext.coinvariants().algebra.dim(), 1);
    assert_eq!(ext.tensor_over_b().dim(), 16);
    assert!(ext.is_galois());
    assert_eq!(ext.beta().rank(), 16);
    let psi = ext.canonical_psi().unwrap();
    assert!(check_entwining(&psi).all_hold());
    assert_eq!(entwining_axioms_by_expansion(&psi), [true; 4]);
    assert!(check_beta_bimodule(&ext).unwrap());
    assert!(check_translation_identity(&ext).unwrap());
}

#[test]
fn sweedler_translation_identity_on_x_by_hand() {
    // δx = x ⊗ 1 + g ⊗ x, so x·γ(1) + g·γ(x) must equal the class of 1 ⊗ x.
    let q = Rationals;
    let ext = GaloisExtension::new(sweedler_h4(q).unwrap()).unwrap();
    let gamma = ext.gamma().unwrap();
    let lhs = ext
        .left_on_aba(2)
        .mul_vec(&gamma.column(0))
        .iter()
        .zip(ext.left_on_aba(1).mul_vec(&gamma.column(2)))
        .map(|(a, b)| q.add(a, &b))
        .collect::<Vec<_>>();
    assert_eq!(lhs, ext.class_of(&unit_vec(&q, 4, 0), &unit_vec(&q, 4, 2)));
}

#[test]
fn trivial_extension_psi_is_flip() {
    let q = Rationals;
    let a = truncated_polynomial(2, q).unwrap();
    let ext = GaloisExtension::new(trivial_extension(&a)).unwrap();
    let psi = ext.canonical_psi().unwrap();
    assert_eq!(psi, Entwining::flip(a.clone(), Coalgebra::ground(q)));
    assert!(check_beta_bimodule(&ext).unwrap());
    assert!(check_translation_identity(&ext).unwrap());
    assert_eq!(ac_bimodule(&psi), Bimodule::regular(&a));
}

#[test]
fn s3_over_a3_is_galois() {
    let q = Rationals;
    let ext = GaloisExtension::new(build_example("s3-a3", q).unwrap()).unwrap();
    assert_eq!(ext.coinvariants().algebra.dim(), 3);
    assert!(ext.is_galois());
    let psi = ext.canonical_psi().unwrap();
    assert!(check_entwining(&psi).all_hold());
    assert_eq!(entwining_axioms_by_expansion(&psi), [true; 4]);
    assert!(check_beta_bimodule(&ext).unwrap());
    assert!(check_translation_identity(&ext).unwrap());
}
