use nccech::exactla::{
    homology_dim, image_basis, kernel_basis, quotient_map, Field, Matrix, Scalar, Subspace,
};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::Prime(5)),
        Just(Field::Prime(7)),
        Just(Field::Prime(2))
    ]
}

fn matrix_in(field: Field, max: usize) -> impl Strategy<Value = Matrix> {
    (0..=max, 0..=max).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r).prop_map(
            move |rows| {
                let rows: Vec<Vec<Scalar>> = rows
                    .iter()
                    .map(|row| row.iter().map(|&x| field.from_i64(x)).collect())
                    .collect();
                Matrix::from_rows(field, c, rows).unwrap()
            },
        )
    })
}

fn matrix() -> impl Strategy<Value = Matrix> {
    field().prop_flat_map(|f| matrix_in(f, 6))
}

fn vectors_in(field: Field, n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    proptest::collection::vec(proptest::collection::vec(-2i64..=2, n), 0..=max).prop_map(
        move |vs| {
            vs.iter()
                .map(|v| v.iter().map(|&x| field.from_i64(x)).collect())
                .collect()
        },
    )
}

fn two_subspaces() -> impl Strategy<Value = (Subspace, Subspace)> {
    (field(), 1usize..=6).prop_flat_map(|(f, n)| {
        (vectors_in(f, n, 4), vectors_in(f, n, 4)).prop_map(move |(a, b)| {
            (
                Subspace::span(f, n, &a).unwrap(),
                Subspace::span(f, n, &b).unwrap(),
            )
        })
    })
}

proptest! {
    #[test]
    fn rank_equals_rank_of_transpose(m in matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_nullity(m in matrix()) {
        let k = kernel_basis(&m);
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        prop_assert_eq!(image_basis(&m).dim(), m.rank());
        for v in k.basis_vectors() {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn rref_is_idempotent_and_spans_the_rows(m in matrix()) {
        let (r, rank) = m.rref();
        prop_assert_eq!(r.rref(), (r.clone(), rank));
        prop_assert_eq!(Subspace::from_rows(&r), Subspace::from_rows(&m));
    }

    #[test]
    fn grassmann_formula((u, v) in two_subspaces()) {
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&s) && v.is_subspace_of(&s));
    }

    #[test]
    fn quotient_kills_the_subspace_and_splits((w, _) in two_subspaces()) {
        let n = w.ambient_dim();
        let q = quotient_map(n, &w).unwrap();
        prop_assert_eq!(q.shape(), (n - w.dim(), n));
        for v in w.basis_vectors() {
            prop_assert!(q.mul_vec(&v).unwrap().iter().all(Scalar::is_zero));
        }
        let section = w.quotient_projection().section();
        prop_assert_eq!(q.mul(&section).unwrap(), Matrix::identity(w.field(), n - w.dim()));
    }

    #[test]
    fn quotient_depends_only_on_the_subspace(
        (f, n) in (field(), 1usize..=5),
        coeffs in proptest::collection::vec(1i64..=4, 4),
    ) {
        // the same subspace spanned by a basis and by rescaled, summed generators
        let e = |i: usize| -> Vec<Scalar> { (0..n).map(|j| f.from_i64((i == j) as i64)).collect() };
        let a = vec![e(0), e(n - 1)];
        let mix: Vec<Scalar> = e(0).iter().zip(e(n - 1)).map(|(x, y)| &(x * &f.from_i64(coeffs[0])) + &y).collect();
        let b = vec![mix, e(n - 1), e(0)];
        let wa = Subspace::span(f, n, &a).unwrap();
        let wb = Subspace::span(f, n, &b).unwrap();
        prop_assert_eq!(&wa, &wb);
        prop_assert_eq!(quotient_map(n, &wa).unwrap(), quotient_map(n, &wb).unwrap());
    }

    #[test]
    fn homology_of_a_split_pair(m in matrix()) {
        // k^c --m--> k^r --0--> 0
        let zero = Matrix::zeros(m.field(), 0, m.rows());
        prop_assert_eq!(homology_dim(&m, &zero).unwrap(), m.rows() - m.rank());
    }

    #[test]
    fn scalar_field_axioms(f in field(), a in -20i64..20, b in -20i64..20, c in 1i64..20) {
        let (x, y) = (f.from_i64(a), f.from_i64(b));
        let z = f.from_i64(c);
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        if !z.is_zero() {
            prop_assert_eq!(&x.div(&z).unwrap() * &z, x.clone());
        }
        prop_assert_eq!(f.parse(&x.to_string()).unwrap(), x);
    }
}
