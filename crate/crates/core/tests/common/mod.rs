#![allow(dead_code)]

use nalg::catalog::{build, FamilyId, FamilyTag};
use nalg::scalar::{int, ratio};
use nalg::{depolarize, Algebra, BilinearMap, Element, PolarPair, Scalar};
use proptest::prelude::*;

/// Structure constants drawn from {-2, ..., 2} ∪ {±1/2}.
pub fn entry() -> impl Strategy<Value = Scalar> {
    prop_oneof![(-2i64..=2).prop_map(int), Just(ratio(1, 2)), Just(ratio(-1, 2))]
}

/// Mostly-zero entries so that identities hold with some probability.
pub fn sparse_entry() -> impl Strategy<Value = Scalar> {
    prop_oneof![6 => Just(int(0)), 1 => entry()]
}

pub fn dense_map(n: usize) -> impl Strategy<Value = BilinearMap> {
    prop::collection::vec(entry(), n * n * n).prop_map(move |v| BilinearMap::from_flat(n, v).unwrap())
}

pub fn sparse_map(n: usize) -> impl Strategy<Value = BilinearMap> {
    prop::collection::vec(sparse_entry(), n * n * n)
        .prop_map(move |v| BilinearMap::from_flat(n, v).unwrap())
}

pub fn random_algebra() -> impl Strategy<Value = Algebra> {
    (1usize..=4)
        .prop_flat_map(|n| prop_oneof![dense_map(n), sparse_map(n)])
        .prop_map(Algebra::new)
}

/// Commutative products with values in the last `r` coordinates that vanish
/// on those coordinates: exactly the two-step nilpotent commutative ones.
pub fn two_step_bullet(n: usize) -> impl Strategy<Value = BilinearMap> {
    (1..n.max(2), prop::collection::vec(entry(), n * n * n)).prop_map(move |(r, v)| {
        let r = r.min(n - 1);
        let top = n - r;
        BilinearMap::from_fn(n, |i, j, k| {
            let (a, b) = (i.min(j), i.max(j));
            if b < top && k >= top {
                v[(a * n + b) * n + k].clone()
            } else {
                int(0)
            }
        })
    })
}

/// Truncated polynomial algebra `K[x]/(x^{n+1})` on `x, .., x^n`, optionally
/// with a unit, with basis rescaled by `scales`.
pub fn polynomial_algebra() -> impl Strategy<Value = Algebra> {
    (1usize..=4, any::<bool>(), prop::collection::vec(prop_oneof![Just(int(1)), Just(int(-2)), Just(ratio(1, 2))], 4))
        .prop_map(|(n, unital, scales)| {
            // basis e_k = s_k x^{k+offset}
            let offset = usize::from(!unital);
            BilinearMap::from_fn(n, |i, j, k| {
                if i + j + offset == k {
                    // (s_i x^{i+o})(s_j x^{j+o}) = s_i s_j / s_k e_k
                    &scales[i] * &scales[j] / &scales[k]
                } else {
                    int(0)
                }
            })
        })
        .prop_map(Algebra::new)
}

pub fn commutative_algebra() -> impl Strategy<Value = Algebra> {
    prop_oneof![
        (1usize..=4).prop_flat_map(|n| dense_map(n).prop_map(|m| m.symmetric_part())),
        (1usize..=4).prop_flat_map(|n| sparse_map(n).prop_map(|m| m.symmetric_part())),
        (2usize..=4).prop_flat_map(two_step_bullet),
    ]
    .prop_map(Algebra::new)
    .boxed()
    .prop_union(polynomial_algebra().boxed())
}

/// Lie brackets `[v_n, v_j] = Σ d_ij v_i` on an abelian ideal, plus a
/// central term from a random scalar cocycle when the dimension allows it.
pub fn lie_bracket(n: usize) -> impl Strategy<Value = BilinearMap> {
    prop::collection::vec(sparse_entry(), n * n).prop_map(move |d| {
        let last = n - 1;
        let entries = (0..last).map(|j| {
            let image = Element::from_coords((0..n).map(|i| if i < last { d[i * n + j].clone() } else { int(0) }).collect());
            (last, j, image)
        });
        BilinearMap::skew_from_entries(n, entries)
    })
}

/// Random parameters for each catalog family; D4_DEC1 and D4_DEC2 use
/// parametrizations that satisfy their constraints.
pub fn catalog_member() -> impl Strategy<Value = (FamilyId, Algebra)> {
    let tags: Vec<FamilyTag> = FamilyTag::ALL.to_vec();
    (prop::sample::select(tags), prop::collection::vec(entry(), 9)).prop_map(|(tag, p)| {
        let id = match tag {
            FamilyTag::D4Dec1 => {
                // trace-free action on (v1, v2) and [v1, v2] central
                FamilyId::new(tag)
                    .with("E11_1", p[0].clone()).unwrap()
                    .with("E11_2", p[1].clone()).unwrap()
                    .with("E12_1", p[2].clone()).unwrap()
                    .with("E12_2", -p[0].clone()).unwrap()
                    .with("F11", p[3].clone()).unwrap()
                    .with("F12", p[4].clone()).unwrap()
                    .with("H12", p[5].clone()).unwrap()
            }
            FamilyTag::D4Dec2 => {
                // (F21, E21) proportional to (F11, E11)
                FamilyId::new(tag)
                    .with("C12", p[0].clone()).unwrap()
                    .with("D12", p[1].clone()).unwrap()
                    .with("E11", p[2].clone()).unwrap()
                    .with("F11", p[3].clone()).unwrap()
                    .with("E21", &p[2] * &p[4]).unwrap()
                    .with("F21", &p[3] * &p[4]).unwrap()
            }
            _ => {
                let mut id = FamilyId::new(tag);
                for (k, (name, _)) in tag.params().iter().enumerate() {
                    id.set(name, p[k].clone()).unwrap();
                }
                id
            }
        };
        let a = build(&id).unwrap();
        (id, a)
    })
}

/// A catalog member with one structure constant replaced.
pub fn perturbed_catalog_member() -> impl Strategy<Value = Algebra> {
    (catalog_member(), any::<prop::sample::Index>(), entry()).prop_map(|((_, a), idx, v)| {
        let n = a.dim();
        let flat = idx.index(n * n * n);
        let mut m = a.into_mult();
        m.set(flat / (n * n), (flat / n) % n, flat % n, v);
        Algebra::new(m)
    })
}

/// Depolarized pairs that satisfy or nearly satisfy the structure conditions.
pub fn constructed_pair_algebra() -> impl Strategy<Value = Algebra> {
    (2usize..=4)
        .prop_flat_map(|n| (two_step_bullet(n), lie_bracket(n)))
        .prop_map(|(bullet, bracket)| depolarize(&PolarPair::new(bullet, bracket).unwrap()))
}

pub fn lie_algebra() -> impl Strategy<Value = Algebra> {
    (1usize..=4).prop_flat_map(lie_bracket).prop_map(Algebra::new)
}

/// The mixed population used by the equivalence properties.
pub fn population() -> impl Strategy<Value = Algebra> {
    prop_oneof![
        random_algebra(),
        catalog_member().prop_map(|(_, a)| a),
        perturbed_catalog_member(),
        constructed_pair_algebra(),
        lie_algebra(),
        commutative_algebra(),
    ]
}
