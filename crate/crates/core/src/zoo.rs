//! Validated example structures: group algebras and their quotient
//! gradings, Sweedler's four-dimensional algebra, trivial extensions,
//! a non-Galois control, and random bimodules for sampling.

use rand::Rng;

use crate::algcore::{Algebra, Bimodule, Coalgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Field, FieldSpec, Matrix};
use crate::galois::ComoduleAlgebra;

/// A finite group by its Cayley table. The identity is index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub order: usize,
    pub cayley: Vec<Vec<usize>>,
    pub subgroup: Option<Vec<usize>>,
}

impl GroupPresentation {
    pub fn new(cayley: Vec<Vec<usize>>, subgroup: Option<Vec<usize>>) -> Result<Self> {
        let g = GroupPresentation {
            order: cayley.len(),
            cayley,
            subgroup,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn cyclic(n: usize) -> Self {
        let cayley = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        GroupPresentation {
            order: n,
            cayley,
            subgroup: None,
        }
    }

    /// Symmetric group on three letters: index `r^i s^j` as `i + 3j`.
    pub fn s3() -> Self {
        // (r^a s^b)(r^c s^d) = r^{a + (-1)^b c} s^{b+d}
        let idx = |a: usize, b: usize| a % 3 + 3 * (b % 2);
        let cayley = (0..6)
            .map(|x| {
                let (a, b) = (x % 3, x / 3);
                (0..6)
                    .map(|y| {
                        let (c, d) = (y % 3, y / 3);
                        let rot = if b == 0 { a + c } else { a + 3 - c };
                        idx(rot, b + d)
                    })
                    .collect()
            })
            .collect();
        GroupPresentation {
            order: 6,
            cayley,
            subgroup: None,
        }
    }

    pub fn with_subgroup(mut self, subgroup: Vec<usize>) -> Result<Self> {
        self.subgroup = Some(subgroup);
        self.validate()?;
        Ok(self)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.cayley[a][b] == 0).expect("validated group")
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        let bad = |m: String| Err(Error::Malformed(m));
        if n == 0 {
            return bad("group of order 0".into());
        }
        if self.cayley.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return bad("Cayley table must be square with entries below the order".into());
        }
        if (0..n).any(|i| self.cayley[0][i] != i || self.cayley[i][0] != i) {
            return bad("index 0 must be the identity".into());
        }
        for i in 0..n {
            if !(0..n).any(|j| self.cayley[i][j] == 0 && self.cayley[j][i] == 0) {
                return bad(format!("element {i} has no two-sided inverse"));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.cayley[self.cayley[i][j]][k] != self.cayley[i][self.cayley[j][k]] {
                        return bad(format!("table is not associative at ({i}, {j}, {k})"));
                    }
                }
            }
        }
        if let Some(sub) = &self.subgroup {
            if sub.iter().any(|&x| x >= n) || !sub.contains(&0) {
                return bad("subgroup must contain the identity and valid indices".into());
            }
            for &a in sub {
                for &b in sub {
                    if !sub.contains(&self.cayley[a][b]) {
                        return Err(Error::Invalid("subgroup is not closed".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_normal(&self, sub: &[usize]) -> bool {
        (0..self.order).all(|g| {
            let gi = self.inverse(g);
            sub.iter().all(|&h| sub.contains(&self.mul(self.mul(g, h), gi)))
        })
    }

    /// Coset label of each element for `x ↦ xN`, labels in order of first appearance.
    pub fn coset_labels(&self, sub: &[usize]) -> Vec<usize> {
        let mut labels = vec![usize::MAX; self.order];
        let mut next = 0;
        for x in 0..self.order {
            if labels[x] != usize::MAX {
                continue;
            }
            for &h in sub {
                labels[self.mul(x, h)] = next;
            }
            next += 1;
        }
        labels
    }
}

pub fn group_algebra<F: Field>(g: &GroupPresentation, field: F) -> Result<Algebra<F>> {
    g.validate()?;
    let n = g.order;
    let e = |k: usize| {
        let mut v = vec![field.zero(); n];
        v[k] = field.one();
        v
    };
    let table = (0..n).map(|i| (0..n).map(|j| e(g.mul(i, j))).collect()).collect();
    Algebra::from_table(field.clone(), table, e(0))
}

/// `Δc = c ⊗ c`, `εc = 1` on every basis element.
pub fn grouplike_coalgebra<F: Field>(n: usize, field: F) -> Result<Coalgebra<F>> {
    if n == 0 {
        return Err(Error::Invalid("group-like coalgebra needs at least one element".into()));
    }
    let mut comult = Matrix::zeros(field.clone(), n * n, n);
    for i in 0..n {
        comult.set(i * n + i, i, field.one());
    }
    Coalgebra::from_matrix(comult, vec![field.one(); n])
}

/// `k[x]/(x^n)` with basis `1, x, …, x^{n-1}`.
pub fn truncated_polynomial<F: Field>(n: usize, field: F) -> Result<Algebra<F>> {
    if n == 0 {
        return Err(Error::Invalid("truncated polynomial algebra needs n ≥ 1".into()));
    }
    let e = |k: usize| {
        let mut v = vec![field.zero(); n];
        if k < n {
            v[k] = field.one();
        }
        v
    };
    let table = (0..n).map(|i| (0..n).map(|j| e(i + j)).collect()).collect();
    Algebra::from_table(field.clone(), table, e(0))
}

/// `k^n` with orthogonal idempotent basis.
pub fn product_of_fields<F: Field>(n: usize, field: F) -> Result<Algebra<F>> {
    if n == 0 {
        return Err(Error::Invalid("product of zero fields".into()));
    }
    let z = vec![field.zero(); n];
    let table = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut v = z.clone();
                    if i == j {
                        v[i] = field.one();
                    }
                    v
                })
                .collect()
        })
        .collect();
    Algebra::from_table(field.clone(), table, vec![field.one(); n])
}

/// `A = k[G]`, `C = k[G/N]` group-like, `δ(x) = x ⊗ x̄`.
pub fn quotient_coaction<F: Field>(g: &GroupPresentation, field: F) -> Result<ComoduleAlgebra<F>> {
    let sub = g
        .subgroup
        .clone()
        .ok_or_else(|| Error::Invalid("quotient coaction needs a subgroup".into()))?;
    if !g.is_normal(&sub) {
        return Err(Error::Invalid("subgroup is not normal".into()));
    }
    let labels = g.coset_labels(&sub);
    let cosets = g.order / sub.len();
    let a = group_algebra(g, field.clone())?;
    let c = grouplike_coalgebra(cosets, field.clone())?;
    let mut delta = Matrix::zeros(field.clone(), g.order * cosets, g.order);
    for (x, &l) in labels.iter().enumerate() {
        delta.set(x * cosets + l, x, field.one());
    }
    ComoduleAlgebra::new(a, c, delta)
}

/// Sweedler's algebra with basis `{1, g, x, gx}`, `g² = 1`, `x² = 0`,
/// `xg = -gx`, `Δg = g ⊗ g`, `Δx = x ⊗ 1 + g ⊗ x`, coacting on itself by `Δ`.
pub fn sweedler_h4<F: Field>(field: F) -> Result<ComoduleAlgebra<F>> {
    if field.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic(2));
    }
    let n = 4;
    let e = |k: usize, s: i64| {
        let mut v = vec![field.zero(); n];
        v[k] = field.from_i64(s);
        v
    };
    let zero = vec![field.zero(); n];
    let (one, g, x, gx) = (0, 1, 2, 3);
    let mut table = vec![vec![zero.clone(); n]; n];
    for k in 0..n {
        table[one][k] = e(k, 1);
        table[k][one] = e(k, 1);
    }
    table[g][g] = e(one, 1);
    table[g][x] = e(gx, 1);
    table[g][gx] = e(x, 1);
    table[x][g] = e(gx, -1);
    table[gx][g] = e(x, -1);
    let a = Algebra::from_table(field.clone(), table, e(one, 1))?;

    let mut comult = Matrix::zeros(field.clone(), n * n, n);
    let mut put = |i: usize, j: usize, col: usize| comult.set(i * n + j, col, field.one());
    put(one, one, one);
    put(g, g, g);
    put(x, one, x);
    put(g, x, x);
    put(gx, g, gx);
    put(one, gx, gx);
    let counit = vec![field.one(), field.one(), field.zero(), field.zero()];
    let c = Coalgebra::from_matrix(comult.clone(), counit)?;
    ComoduleAlgebra::new(a, c, comult)
}

/// `C = k`, `δ(a) = a ⊗ 1`; the coinvariants are all of `A`.
pub fn trivial_extension<F: Field>(a: &Algebra<F>) -> ComoduleAlgebra<F> {
    let f = a.field().clone();
    ComoduleAlgebra::new(a.clone(), Coalgebra::ground(f.clone()), Matrix::identity(f, a.dim()))
        .expect("identity coaction has the right shape")
}

/// `A = k[C2]`, `δ(a) = a ⊗ c_0` into a two-element group-like coalgebra.
pub fn non_galois_example<F: Field>(field: F) -> ComoduleAlgebra<F> {
    let a = group_algebra(&GroupPresentation::cyclic(2), field.clone()).expect("C2 is a group");
    let c = grouplike_coalgebra(2, field.clone()).expect("n = 2");
    let mut delta = Matrix::zeros(field.clone(), 4, 2);
    for j in 0..2 {
        delta.set(j * 2, j, field.one());
    }
    ComoduleAlgebra::new(a, c, delta).expect("shape")
}

/// Named examples, as exposed by the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NamedExample {
    pub name: &'static str,
    pub field: FieldSpec,
    pub description: &'static str,
}

pub const EXAMPLES: &[NamedExample] = &[
    NamedExample {
        name: "c4-c2",
        field: FieldSpec::Rationals,
        description: "Q[C4] graded by C4/{e,g²}",
    },
    NamedExample {
        name: "c4-c2-f2",
        field: FieldSpec::Prime(2),
        description: "F2[C4] graded by C4/{e,g²}",
    },
    NamedExample {
        name: "c4-c4",
        field: FieldSpec::Rationals,
        description: "Q[C4] coacting on itself by Δ (coinvariants k)",
    },
    NamedExample {
        name: "s3-a3",
        field: FieldSpec::Rationals,
        description: "Q[S3] graded by S3/A3",
    },
    NamedExample {
        name: "sweedler-h4",
        field: FieldSpec::Rationals,
        description: "Sweedler's H4 coacting on itself by Δ",
    },
    NamedExample {
        name: "dual-numbers",
        field: FieldSpec::Rationals,
        description: "trivial extension of Q[x]/(x²)",
    },
    NamedExample {
        name: "dual-numbers-f2",
        field: FieldSpec::Prime(2),
        description: "trivial extension of F2[x]/(x²)",
    },
    NamedExample {
        name: "non-galois",
        field: FieldSpec::Rationals,
        description: "Q[C2] with constant coaction into a 2-element group-like coalgebra",
    },
];

pub fn find_example(name: &str) -> Option<&'static NamedExample> {
    EXAMPLES.iter().find(|e| e.name == name)
}

/// Build a named example over `field` (which must match the example's field spec).
pub fn build_example<F: Field>(name: &str, field: F) -> Result<ComoduleAlgebra<F>> {
    let ex = find_example(name).ok_or_else(|| Error::Invalid(format!("unknown example {name:?}")))?;
    if ex.field != field.spec() {
        return Err(Error::Invalid(format!("example {name} lives over {}", ex.field)));
    }
    match name {
        "c4-c2" | "c4-c2-f2" => quotient_coaction(&GroupPresentation::cyclic(4).with_subgroup(vec![0, 2])?, field),
        "c4-c4" => quotient_coaction(&GroupPresentation::cyclic(4).with_subgroup(vec![0])?, field),
        "s3-a3" => quotient_coaction(&GroupPresentation::s3().with_subgroup(vec![0, 1, 2])?, field),
        "sweedler-h4" => sweedler_h4(field),
        "dual-numbers" | "dual-numbers-f2" => Ok(trivial_extension(&truncated_polynomial(2, field)?)),
        "non-galois" => Ok(non_galois_example(field)),
        _ => unreachable!("every listed example has a builder"),
    }
}

/// A small random scalar in `{-2, …, 2}`.
pub fn random_scalar<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R) -> F::Elem {
    field.from_i64(rng.gen_range(-2..=2))
}

/// A random bimodule: a quotient or submodule of a free bimodule `A ⊗ V ⊗ A`
/// by the sub-bimodule generated by a few sparse random elements, or a
/// regular / free bimodule outright.
pub fn random_bimodule<F: Field, R: Rng + ?Sized>(a: &Algebra<F>, rng: &mut R) -> Bimodule<F> {
    let f = a.field().clone();
    let rank = rng.gen_range(1..=2);
    let free = Bimodule::free(a, rank);
    let gens = rng.gen_range(0..=2);
    if gens == 0 {
        return if rng.gen_bool(0.5) { Bimodule::regular(a) } else { free };
    }
    // sparse generators keep the quotient bases free of large fractions
    let columns: Vec<Vec<F::Elem>> = (0..gens)
        .map(|_| {
            let mut v = vec![f.zero(); free.dim()];
            for _ in 0..rng.gen_range(1..=3) {
                let i = rng.gen_range(0..free.dim());
                v[i] = random_scalar(&f, rng);
            }
            v
        })
        .collect();
    let sub = free.generated_submodule(&Matrix::from_columns(f, free.dim(), &columns));
    let closed = "generated sub-bimodules are closed under the actions";
    if rng.gen_bool(0.5) && sub.cols() < free.dim() {
        free.quotient(&sub).expect(closed)
    } else {
        free.submodule(&sub).expect(closed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::{check_algebra, check_bimodule, check_coalgebra};
    use crate::exactlin::{PrimeField, Rationals};
    use crate::galois::check_coaction;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn group_tables() {
        assert!(GroupPresentation::cyclic(4).validate().is_ok());
        assert!(GroupPresentation::s3().validate().is_ok());
        assert!(!GroupPresentation::s3().is_commutative_table());
        let mut bad = GroupPresentation::cyclic(3);
        bad.cayley[1][1] = 1;
        assert!(bad.validate().is_err());
        // a Latin square that is not associative
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(GroupPresentation::new(loop5, None), Err(Error::Malformed(_))));
    }

    impl GroupPresentation {
        fn is_commutative_table(&self) -> bool {
            (0..self.order).all(|i| (0..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
        }
    }

    #[test]
    fn group_algebras_pass_checks() {
        let a = group_algebra(&GroupPresentation::cyclic(2), Rationals).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.is_commutative());
        assert!(check_algebra(&a).all_hold());
        let f2 = PrimeField::new(2).unwrap();
        let a = group_algebra(&GroupPresentation::cyclic(4), f2).unwrap();
        assert_eq!(a.dim(), 4);
        let s3 = group_algebra(&GroupPresentation::s3(), Rationals).unwrap();
        assert!(check_algebra(&s3).all_hold());
        assert!(!s3.is_commutative());
    }

    #[test]
    fn grouplike_coalgebras() {
        assert!(grouplike_coalgebra(0, Rationals).is_err());
        for n in 1..5 {
            assert!(check_coalgebra(&grouplike_coalgebra(n, Rationals).unwrap()).all_hold());
        }
        assert_eq!(grouplike_coalgebra(1, Rationals).unwrap(), Coalgebra::ground(Rationals));
    }

    #[test]
    fn sweedler_structure() {
        let h = sweedler_h4(Rationals).unwrap();
        assert!(check_algebra(h.algebra()).all_hold());
        assert!(check_coalgebra(h.coalgebra()).all_hold());
        assert!(check_coaction(&h).all_hold());
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(sweedler_h4(f2).unwrap_err(), Error::UnsupportedCharacteristic(2));
        assert!(sweedler_h4(PrimeField::new(3).unwrap()).is_ok());
    }

    #[test]
    fn non_normal_subgroup_rejected() {
        let g = GroupPresentation::s3().with_subgroup(vec![0, 3]).unwrap();
        assert!(matches!(quotient_coaction(&g, Rationals), Err(Error::Invalid(_))));
    }

    #[test]
    fn named_examples_build() {
        for ex in EXAMPLES {
            let ok = match ex.field {
                FieldSpec::Rationals => build_example(ex.name, Rationals).map(|_| ()),
                FieldSpec::Prime(p) => build_example(ex.name, PrimeField::new(p).unwrap()).map(|_| ()),
            };
            assert!(ok.is_ok(), "{}", ex.name);
        }
        assert!(build_example("c4-c2", PrimeField::new(2).unwrap()).is_err());
    }

    #[test]
    fn random_bimodules_are_bimodules() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = group_algebra(&GroupPresentation::cyclic(2), Rationals).unwrap();
        for _ in 0..20 {
            let m = random_bimodule(&a, &mut rng);
            assert!(check_bimodule(&m).all_hold());
        }
    }
}
