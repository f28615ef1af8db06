//! Random small algebras, ideals and coverings for property checks and
//! searches.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{ideal_closure, make_algebra, Algebra, Ideal};
use crate::covering::{is_covering, Covering};
use crate::exactla::{Field, Scalar};

fn monomial_algebra(field: Field, monomials: &[(u32, u32)]) -> Algebra {
    // commutative algebra spanned by x^a y^b for the listed exponents; products
    // that leave the list vanish
    let dim = monomials.len();
    let mut triples = Vec::new();
    for (i, &(a, b)) in monomials.iter().enumerate() {
        for (j, &(c, d)) in monomials.iter().enumerate() {
            if let Some(k) = monomials.iter().position(|&m| m == (a + c, b + d)) {
                triples.push((i, j, k, field.one()));
            }
        }
    }
    let mut unit = vec![field.zero(); dim];
    unit[0] = field.one();
    let labels = monomials
        .iter()
        .map(|&(a, b)| format!("x^{a}y^{b}"))
        .collect();
    make_algebra(field, dim, triples, unit)
        .expect("monomial algebra")
        .with_labels(labels)
}

/// The exterior algebra on two generators: basis 1, u, v, uv with u v = -v u.
pub fn exterior_two(field: Field) -> Algebra {
    let one = field.one();
    let minus = -&one;
    let triples = vec![
        (0, 0, 0, one.clone()),
        (0, 1, 1, one.clone()),
        (1, 0, 1, one.clone()),
        (0, 2, 2, one.clone()),
        (2, 0, 2, one.clone()),
        (0, 3, 3, one.clone()),
        (3, 0, 3, one.clone()),
        (1, 2, 3, one.clone()),
        (2, 1, 3, minus),
    ];
    let unit = vec![field.one(), field.zero(), field.zero(), field.zero()];
    make_algebra(field, 4, triples, unit)
        .expect("exterior algebra")
        .with_labels(vec!["1".into(), "u".into(), "v".into(), "uv".into()])
}

/// Every algebra in the sampling family, up to `max_dim`.
pub fn algebra_family(field: Field, max_dim: usize) -> Vec<Algebra> {
    let k = Algebra::ground(field);
    let t2 = Algebra::upper_triangular(field, 2);
    let d2 = Algebra::truncated_polynomial(field, 2);
    let mut out = vec![
        Algebra::matrix(field, 2),
        t2.clone(),
        Algebra::upper_triangular(field, 3),
        monomial_algebra(field, &[(0, 0), (1, 0), (0, 1)]),
        monomial_algebra(field, &[(0, 0), (1, 0), (0, 1), (1, 1)]),
        exterior_two(field),
        Algebra::direct_product(field, &[&Algebra::matrix(field, 2), &k]).unwrap(),
        Algebra::direct_product(field, &[&t2, &k]).unwrap(),
        Algebra::direct_product(field, &[&t2, &k, &k]).unwrap(),
        Algebra::direct_product(field, &[&d2, &d2]).unwrap(),
        Algebra::direct_product(field, &[&d2, &k]).unwrap(),
        Algebra::direct_product(field, &[&t2, &t2]).unwrap(),
    ];
    out.extend((1..=6).map(|n| Algebra::split(field, n)));
    out.extend((2..=6).map(|n| Algebra::truncated_polynomial(field, n)));
    out.retain(|a| a.dim() <= max_dim);
    out
}

pub fn random_algebra<R: Rng>(rng: &mut R, field: Field, max_dim: usize) -> Algebra {
    algebra_family(field, max_dim)
        .choose(rng)
        .cloned()
        .unwrap_or_else(|| Algebra::ground(field))
}

fn random_coeff<R: Rng>(rng: &mut R, field: Field) -> Scalar {
    loop {
        let c = field.from_i64(rng.gen_range(-2..=2));
        if !c.is_zero() {
            return c;
        }
    }
}

/// Zero ideal with probability 1/5, otherwise the ideal generated by one or
/// two sparse random elements.
pub fn random_ideal<R: Rng>(rng: &mut R, a: &Arc<Algebra>) -> Ideal {
    let field = a.field();
    if a.dim() == 0 || rng.gen_bool(0.2) {
        return Ideal::zero(a.clone());
    }
    let gens: Vec<Vec<Scalar>> = (0..rng.gen_range(1..=2))
        .map(|_| {
            let mut v = vec![field.zero(); a.dim()];
            for _ in 0..rng.gen_range(1..=2) {
                v[rng.gen_range(0..a.dim())] = random_coeff(rng, field);
            }
            v
        })
        .collect();
    ideal_closure(a, &gens).expect("generators of the right length")
}

/// The ideal generated by one random element with at most two nonzero
/// coordinates, or `None` if that is all of `A`.
pub fn random_principal_ideal<R: Rng>(rng: &mut R, a: &Arc<Algebra>) -> Option<Ideal> {
    let field = a.field();
    let mut v = vec![field.zero(); a.dim()];
    for _ in 0..rng.gen_range(1..=2) {
        v[rng.gen_range(0..a.dim())] = random_coeff(rng, field);
    }
    let ideal = ideal_closure(a, &[v]).expect("generator of the right length");
    (ideal.dim() < a.dim()).then_some(ideal)
}

/// A random covering (zero intersection) of a random algebra of dimension at
/// most `max_dim` by between 1 and `max_n` ideals. Gives up after 200 draws.
pub fn random_covering<R: Rng>(
    rng: &mut R,
    field: Field,
    max_dim: usize,
    max_n: usize,
) -> Option<Covering> {
    for _ in 0..200 {
        let a = Arc::new(random_algebra(rng, field, max_dim));
        let n = rng.gen_range(1..=max_n.max(1));
        let ideals = (0..n).map(|_| random_ideal(rng, &a)).collect();
        let c = Covering::new(a, ideals).ok()?;
        if is_covering(&c) {
            return Some(c);
        }
    }
    None
}

/// The ideal generated by the listed basis elements.
pub fn coordinate_ideal(a: &Arc<Algebra>, basis: &[usize]) -> Ideal {
    let gens: Vec<_> = basis.iter().map(|&i| a.basis_vector(i)).collect();
    ideal_closure(a, &gens).expect("basis indices in range")
}

/// `k^3` covered by `⟨e3⟩` and `⟨e1⟩`: two patches `k^2` glued along one point.
pub fn split_three_covering(field: Field) -> Covering {
    let a = Arc::new(Algebra::split(field, 3));
    let ideals = vec![coordinate_ideal(&a, &[2]), coordinate_ideal(&a, &[0])];
    Covering::new(a, ideals).expect("nonempty")
}

/// `M_2 ⊕ k` covered by `M_2 ⊕ 0` and `0 ⊕ k`, with empty overlap.
pub fn matrix_point_covering(field: Field) -> Covering {
    let m2 = Algebra::matrix(field, 2);
    let a = Arc::new(
        Algebra::direct_product(field, &[&m2, &Algebra::ground(field)]).expect("same field"),
    );
    let ideals = vec![
        coordinate_ideal(&a, &[0, 1, 2, 3]),
        coordinate_ideal(&a, &[4]),
    ];
    Covering::new(a, ideals).expect("nonempty")
}

/// `k[x,y]/(x,y)^2` covered by the lines `(x)`, `(y)` and `(x+y)`. This is a
/// covering that is not complete.
pub fn three_lines_covering(field: Field) -> Covering {
    let a = Arc::new(monomial_algebra(field, &[(0, 0), (1, 0), (0, 1)]));
    let line = |v: [i64; 3]| {
        ideal_closure(&a, &[v.iter().map(|&c| field.from_i64(c)).collect()]).expect("length 3")
    };
    Covering::new(
        a.clone(),
        vec![line([0, 1, 0]), line([0, 0, 1]), line([0, 1, 1])],
    )
    .expect("nonempty")
}
