//! Structural invariants of an algebra and its polarization: product
//! spans, centers, the derived subalgebra, the `A¹ ⊕ A²` grading, and the
//! characterization of symmetric Leibniz algebras through `(•, [,])`.

use crate::error::{Error, Result};
use crate::identity::{self, first_failing_triple, first_nonzero, mul, IdentityReport, Witness};
use crate::linalg;
use crate::polar::{polarize, PolarPair};
use crate::tensor::{Algebra, BilinearMap, Element};

/// A subspace held by a reduced echelon basis, so equal subspaces have
/// equal representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Element>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::spanned_by(ambient_dim, (0..ambient_dim).map(|i| Element::basis(ambient_dim, i)))
    }

    pub fn spanned_by(ambient_dim: usize, generators: impl IntoIterator<Item = Element>) -> Self {
        let rows: Vec<_> = generators.into_iter().map(Element::into_coords).collect();
        let ech = linalg::row_reduce(&rows, ambient_dim);
        Subspace {
            ambient_dim,
            basis: ech.rows.into_iter().map(Element::from_coords).collect(),
            pivots: ech.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    /// Pivot coordinate of each basis vector.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &Element) -> bool {
        // reduce v against the echelon basis
        let mut r = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r.coords()[p].clone();
            r.add_scaled(&-c, b.coords());
        }
        r.is_zero()
    }

    /// First basis vector of `self` that `other` misses, if any.
    pub fn first_outside(&self, other: &Subspace) -> Option<&Element> {
        self.basis.iter().find(|b| !other.contains(b))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.first_outside(other).is_none()
    }
}

/// `A = A¹ ⊕ A²` with `A²` the span of the products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDecomposition {
    pub part1: Subspace,
    pub part2: Subspace,
}

/// The four conditions characterizing symmetric Leibniz algebras through
/// their polarization, each evaluated on every basis triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureVerdict {
    pub is_symmetric_leibniz: bool,
    /// `x • (y • z) = 0`.
    pub bullet_two_step: bool,
    pub bracket_jacobi: bool,
    /// `[x, y • z] = 0`.
    pub bracket_kills_products: bool,
    /// `x • [y, z] = 0`.
    pub bullet_kills_brackets: bool,
    /// First failure, tagged with the condition name.
    pub witness: Option<Witness>,
}

impl StructureVerdict {
    pub fn flags(&self) -> [(&'static str, bool); 4] {
        [
            ("bullet_two_step", self.bullet_two_step),
            ("bracket_jacobi", self.bracket_jacobi),
            ("bracket_kills_products", self.bracket_kills_products),
            ("bullet_kills_brackets", self.bullet_kills_brackets),
        ]
    }
}

/// Span of all `m(e_i, e_j)`.
pub fn product_span(m: &BilinearMap) -> Subspace {
    let n = m.dim();
    Subspace::spanned_by(
        n,
        (0..n).flat_map(|i| (0..n).map(move |j| m.basis_product(i, j))),
    )
}

/// `{ x : m(x, y) = m(y, x) = 0 for all y }`.
pub fn center_of(m: &BilinearMap) -> Subspace {
    let n = m.dim();
    let mut rows = Vec::with_capacity(2 * n * n);
    // coefficient of e_k in m(x, e_j) is Σ_i x_i m[i][j][k]
    for j in 0..n {
        for k in 0..n {
            rows.push((0..n).map(|i| m.get(i, j, k).clone()).collect::<Vec<_>>());
        }
    }
    if !m.is_symmetric() {
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| m.get(j, i, k).clone()).collect());
            }
        }
    }
    let kernel = linalg::nullspace(&rows, n);
    Subspace::spanned_by(n, kernel.into_iter().map(Element::from_coords))
}

/// Span of all bracket values `[x, y]`.
pub fn derived_subalgebra(bracket: &BilinearMap) -> Result<Subspace> {
    if let Some((i, j)) = bracket.skewness_defect() {
        return Err(Error::NotSkew { i, j });
    }
    Ok(product_span(bracket))
}

/// Grading of a symmetric Leibniz algebra by its commutative part.
///
/// `A²` is the product span of `•`; `A¹` is spanned by the standard basis
/// vectors at the non-pivot coordinates of `A²`.
pub fn graded_basis(a: &Algebra) -> Result<GradedDecomposition> {
    let bullet = polarize(a).into_parts().0;
    if let Some(w) = identity::two_step_nilpotent_report(&bullet).witness {
        return Err(Error::Precondition(format!(
            "commutative part is not two-step nilpotent: {} at {:?}",
            w.part.unwrap_or_default(),
            w.indices
        )));
    }
    let n = a.dim();
    let part2 = product_span(&bullet);
    let mut is_pivot = vec![false; n];
    for &p in part2.pivots() {
        is_pivot[p] = true;
    }
    let part1 = Subspace::spanned_by(
        n,
        (0..n).filter(|&c| !is_pivot[c]).map(|c| Element::basis(n, c)),
    );

    for x in part1.basis() {
        for y in part1.basis() {
            if !part2.contains(&mul(&bullet, x, y)) {
                return Err(Error::Precondition(format!("A1 • A1 not inside A2 at ({x}, {y})")));
            }
        }
        for y in part2.basis() {
            if !mul(&bullet, x, y).is_zero() {
                return Err(Error::Precondition(format!("A1 • A2 nonzero at ({x}, {y})")));
            }
        }
    }
    for x in part2.basis() {
        for y in part2.basis() {
            if !mul(&bullet, x, y).is_zero() {
                return Err(Error::Precondition(format!("A2 • A2 nonzero at ({x}, {y})")));
            }
        }
    }
    Ok(GradedDecomposition { part1, part2 })
}

/// Evaluates the four conditions on a polarized pair. All four are always
/// computed so the verdict shows every failing condition.
pub fn pair_verdict(p: &PolarPair) -> StructureVerdict {
    let (bullet, bracket) = (p.bullet(), p.bracket());
    let n = p.dim();
    let scan = |name: &'static str, f: &(dyn Fn(&Element, &Element, &Element) -> Element + Sync)| {
        first_failing_triple(n, |i, j, k| {
            let (x, y, z) = (Element::basis(n, i), Element::basis(n, j), Element::basis(n, k));
            first_nonzero(&[i, j, k], [(Some(name), f(&x, &y, &z))])
        })
    };
    let w1 = scan("bullet_two_step", &|x, y, z| mul(bullet, x, &mul(bullet, y, z)));
    let w2 = identity::jacobi_report(bracket).witness.map(|mut w| {
        w.part = Some("bracket_jacobi".into());
        w
    });
    let w3 = scan("bracket_kills_products", &|x, y, z| mul(bracket, x, &mul(bullet, y, z)));
    let w4 = scan("bullet_kills_brackets", &|x, y, z| mul(bullet, x, &mul(bracket, y, z)));

    let flags = [w1.is_none(), w2.is_none(), w3.is_none(), w4.is_none()];
    StructureVerdict {
        is_symmetric_leibniz: flags.iter().all(|&f| f),
        bullet_two_step: flags[0],
        bracket_jacobi: flags[1],
        bracket_kills_products: flags[2],
        bullet_kills_brackets: flags[3],
        witness: w1.or(w2).or(w3).or(w4),
    }
}

pub fn structure_verdict(a: &Algebra) -> StructureVerdict {
    pair_verdict(&polarize(a))
}

/// `[A, A] ⊆ Z(A, •)` and `A²_• ⊆ Z(A, [,]) ∩ Z(A, •)`.
///
/// A failing witness carries no basis indices; its defect is a basis
/// vector of the smaller subspace that escapes the larger one.
pub fn check_center_containments(a: &Algebra) -> IdentityReport {
    let (bullet, bracket) = polarize(a).into_parts();
    let derived = product_span(&bracket);
    let squares = product_span(&bullet);
    let bullet_center = center_of(&bullet);
    let bracket_center = center_of(&bracket);
    let checks = [
        ("derived_in_bullet_center", &derived, &bullet_center),
        ("products_in_bracket_center", &squares, &bracket_center),
        ("products_in_bullet_center", &squares, &bullet_center),
    ];
    let witness = checks.into_iter().find_map(|(name, sub, sup)| {
        sub.first_outside(sup)
            .map(|v| Witness::new(Vec::new(), Some(name), v.clone()))
    });
    IdentityReport::new("center_containments", witness)
}
