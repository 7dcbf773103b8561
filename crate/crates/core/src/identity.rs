//! Identity checking for nonassociative products.
//!
//! Every identity handled here is multilinear, so it holds on the whole
//! algebra iff it holds on all basis pairs/triples. Checks enumerate those
//! in lexicographic order and report the first failing one; the scan is
//! split across rayon workers by first index but the reported witness is
//! always the global lexicographic minimum.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar;
use crate::tensor::{Algebra, BilinearMap, Element};

/// A failing basis tuple together with the nonzero defect it produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Basis indices, `(i, j)` for binary identities and `(i, j, k)` otherwise.
    pub indices: Vec<usize>,
    /// Which sub-identity failed, for identities made of several parts.
    pub part: Option<String>,
    pub defect: Element,
}

impl Witness {
    pub fn new(indices: Vec<usize>, part: Option<&str>, defect: Element) -> Self {
        Witness {
            indices,
            part: part.map(str::to_string),
            defect,
        }
    }
}

/// Outcome of an identity check. The identity holds iff there is no witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: String,
    pub witness: Option<Witness>,
}

impl IdentityReport {
    pub fn new(identity: impl Into<String>, witness: Option<Witness>) -> Self {
        IdentityReport {
            identity: identity.into(),
            witness,
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    /// Renders a one-line summary with the given basis names.
    pub fn describe(&self, names: Option<&[String]>) -> String {
        match &self.witness {
            None => format!("{}: holds", self.identity),
            Some(w) => {
                let args: Vec<String> = w
                    .indices
                    .iter()
                    .map(|&i| match names {
                        Some(n) => n[i].clone(),
                        None => format!("e{i}"),
                    })
                    .collect();
                let part = w
                    .part
                    .as_ref()
                    .map(|p| format!(" [{p}]"))
                    .unwrap_or_default();
                let at = if args.is_empty() {
                    String::new()
                } else {
                    format!(" at ({})", args.join(", "))
                };
                format!(
                    "{}: fails{at}{part}: defect = {}",
                    self.identity,
                    w.defect.display_with(names)
                )
            }
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe(None))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    Associative,
    Commutative,
    Skew,
    Jacobi,
    /// Skew-symmetry plus Jacobi.
    Lie,
    WeaklyAssociative,
    LeftLeibniz,
    RightLeibniz,
    SymmetricLeibniz,
    LieAdmissible,
    TwoStepNilpotent,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 11] = [
        IdentityKind::Associative,
        IdentityKind::Commutative,
        IdentityKind::Skew,
        IdentityKind::Jacobi,
        IdentityKind::Lie,
        IdentityKind::WeaklyAssociative,
        IdentityKind::LeftLeibniz,
        IdentityKind::RightLeibniz,
        IdentityKind::SymmetricLeibniz,
        IdentityKind::LieAdmissible,
        IdentityKind::TwoStepNilpotent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Associative => "associative",
            IdentityKind::Commutative => "commutative",
            IdentityKind::Skew => "skew",
            IdentityKind::Jacobi => "jacobi",
            IdentityKind::Lie => "lie",
            IdentityKind::WeaklyAssociative => "weakly_associative",
            IdentityKind::LeftLeibniz => "left_leibniz",
            IdentityKind::RightLeibniz => "right_leibniz",
            IdentityKind::SymmetricLeibniz => "symmetric_leibniz",
            IdentityKind::LieAdmissible => "lie_admissible",
            IdentityKind::TwoStepNilpotent => "two_step_nilpotent",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

// ---------------------------------------------------------------------------
// scanning

pub(crate) fn first_failing_pair<F>(n: usize, f: F) -> Option<Witness>
where
    F: Fn(usize, usize) -> Option<Witness> + Sync,
{
    (0..n)
        .into_par_iter()
        .find_map_first(|i| (0..n).find_map(|j| f(i, j)))
}

pub(crate) fn first_failing_triple<F>(n: usize, f: F) -> Option<Witness>
where
    F: Fn(usize, usize, usize) -> Option<Witness> + Sync,
{
    (0..n)
        .into_par_iter()
        .find_map_first(|i| (0..n).find_map(|j| (0..n).find_map(|k| f(i, j, k))))
}

/// Returns the first nonzero `(part, defect)` as a witness at `indices`.
pub(crate) fn first_nonzero<'a, I>(indices: &[usize], parts: I) -> Option<Witness>
where
    I: IntoIterator<Item = (Option<&'a str>, Element)>,
{
    parts
        .into_iter()
        .find(|(_, d)| !d.is_zero())
        .map(|(part, d)| Witness::new(indices.to_vec(), part, d))
}

fn check_triples<F>(name: &str, n: usize, defect: F) -> IdentityReport
where
    F: Fn(&Element, &Element, &Element) -> Element + Sync,
{
    let witness = first_failing_triple(n, |i, j, k| {
        let d = defect(&basis(n, i), &basis(n, j), &basis(n, k));
        first_nonzero(&[i, j, k], [(None, d)])
    });
    IdentityReport::new(name, witness)
}

fn basis(n: usize, i: usize) -> Element {
    Element::basis(n, i)
}

// ---------------------------------------------------------------------------
// trilinear maps on arbitrary elements

fn check_dims(m: &BilinearMap, elems: &[&Element]) -> Result<()> {
    match elems.iter().find(|e| e.dim() != m.dim()) {
        Some(e) => Err(Error::DimensionMismatch {
            left: m.dim(),
            right: e.dim(),
        }),
        None => Ok(()),
    }
}

#[inline]
pub(crate) fn mul(m: &BilinearMap, x: &Element, y: &Element) -> Element {
    m.eval(x.coords(), y.coords())
}

/// `x ∗ (y ∗ z) - (x ∗ y) ∗ z` for the product `m`.
pub(crate) fn associator_of(m: &BilinearMap, x: &Element, y: &Element, z: &Element) -> Element {
    mul(m, x, &mul(m, y, z)) - mul(m, &mul(m, x, y), z)
}

pub(crate) fn wa_of(m: &BilinearMap, x: &Element, y: &Element, z: &Element) -> Element {
    associator_of(m, x, y, z) + associator_of(m, y, z, x) - associator_of(m, y, x, z)
}

pub(crate) fn b_of(m: &BilinearMap, x: &Element, y: &Element, z: &Element) -> Element {
    let yz = mul(m, y, z);
    mul(m, x, &yz) + mul(m, &yz, x)
}

/// `x(yz) - (xy)z - y(xz)`.
pub(crate) fn left_leibniz_of(m: &BilinearMap, x: &Element, y: &Element, z: &Element) -> Element {
    mul(m, x, &mul(m, y, z)) - mul(m, &mul(m, x, y), z) - mul(m, y, &mul(m, x, z))
}

/// `(yz)x - (yx)z - y(zx)`.
pub(crate) fn right_leibniz_of(m: &BilinearMap, x: &Element, y: &Element, z: &Element) -> Element {
    mul(m, &mul(m, y, z), x) - mul(m, &mul(m, y, x), z) - mul(m, y, &mul(m, z, x))
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` with `m` as the bracket.
pub(crate) fn jacobi_of(m: &BilinearMap, x: &Element, y: &Element, z: &Element) -> Element {
    mul(m, x, &mul(m, y, z)) + mul(m, y, &mul(m, z, x)) + mul(m, z, &mul(m, x, y))
}

/// `x ∗ (y ∗ z) - (x ∗ y) ∗ z`.
pub fn associator(a: &Algebra, x: &Element, y: &Element, z: &Element) -> Result<Element> {
    check_dims(a.mult(), &[x, y, z])?;
    Ok(associator_of(a.mult(), x, y, z))
}

/// Weak-associativity defect `𝒜(x,y,z) + 𝒜(y,z,x) - 𝒜(y,x,z)`.
pub fn wa_defect(a: &Algebra, x: &Element, y: &Element, z: &Element) -> Result<Element> {
    check_dims(a.mult(), &[x, y, z])?;
    Ok(wa_of(a.mult(), x, y, z))
}

/// `x ∗ (y ∗ z) + (y ∗ z) ∗ x`.
pub fn b_map(a: &Algebra, x: &Element, y: &Element, z: &Element) -> Result<Element> {
    check_dims(a.mult(), &[x, y, z])?;
    Ok(b_of(a.mult(), x, y, z))
}

/// Value of the defect of `kind` on arbitrary elements (for binary
/// identities `z` is ignored). Used to spot-check basis verdicts.
pub fn defect_at(
    a: &Algebra,
    kind: IdentityKind,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Vec<Element>> {
    let m = a.mult();
    check_dims(m, &[x, y, z])?;
    let skew_part = || m.skew_part();
    Ok(match kind {
        IdentityKind::Associative => vec![associator_of(m, x, y, z)],
        IdentityKind::Commutative => vec![mul(m, x, y) - mul(m, y, x)],
        IdentityKind::Skew => vec![mul(m, x, y) + mul(m, y, x)],
        IdentityKind::Jacobi => vec![jacobi_of(m, x, y, z)],
        IdentityKind::Lie => vec![mul(m, x, y) + mul(m, y, x), jacobi_of(m, x, y, z)],
        IdentityKind::WeaklyAssociative => vec![wa_of(m, x, y, z)],
        IdentityKind::LeftLeibniz => vec![left_leibniz_of(m, x, y, z)],
        IdentityKind::RightLeibniz => vec![right_leibniz_of(m, x, y, z)],
        IdentityKind::SymmetricLeibniz => {
            vec![left_leibniz_of(m, x, y, z), right_leibniz_of(m, x, y, z)]
        }
        IdentityKind::LieAdmissible => vec![jacobi_of(&skew_part(), x, y, z)],
        IdentityKind::TwoStepNilpotent => {
            vec![mul(m, &mul(m, x, y), z), mul(m, x, &mul(m, y, z))]
        }
    })
}

// ---------------------------------------------------------------------------
// identity checks

/// Commutativity of a bare bilinear map.
pub fn commutative_report(m: &BilinearMap) -> IdentityReport {
    let n = m.dim();
    let w = first_failing_pair(n, |i, j| {
        let d = m.basis_product(i, j) - m.basis_product(j, i);
        first_nonzero(&[i, j], [(None, d)])
    });
    IdentityReport::new(IdentityKind::Commutative.name(), w)
}

/// Skew-symmetry of a bare bilinear map.
pub fn skew_report(m: &BilinearMap) -> IdentityReport {
    let n = m.dim();
    let w = first_failing_pair(n, |i, j| {
        let d = m.basis_product(i, j) + m.basis_product(j, i);
        first_nonzero(&[i, j], [(None, d)])
    });
    IdentityReport::new(IdentityKind::Skew.name(), w)
}

/// Jacobi identity for `m` viewed as a bracket.
pub fn jacobi_report(m: &BilinearMap) -> IdentityReport {
    check_triples(IdentityKind::Jacobi.name(), m.dim(), |x, y, z| jacobi_of(m, x, y, z))
}

/// Skew-symmetry and Jacobi; the witness part says which one failed.
pub fn lie_report(m: &BilinearMap) -> IdentityReport {
    let mut skew = skew_report(m);
    if let Some(w) = skew.witness.as_mut() {
        w.part = Some("skew".into());
        return IdentityReport::new(IdentityKind::Lie.name(), skew.witness);
    }
    let mut jac = jacobi_report(m);
    if let Some(w) = jac.witness.as_mut() {
        w.part = Some("jacobi".into());
    }
    IdentityReport::new(IdentityKind::Lie.name(), jac.witness)
}

/// Associativity of a bare bilinear map.
pub fn associative_report(m: &BilinearMap) -> IdentityReport {
    check_triples(IdentityKind::Associative.name(), m.dim(), |x, y, z| {
        associator_of(m, x, y, z)
    })
}

/// `(xy)z = 0` and `x(yz) = 0` for a bare bilinear map.
pub fn two_step_nilpotent_report(m: &BilinearMap) -> IdentityReport {
    let n = m.dim();
    let w = first_failing_triple(n, |i, j, k| {
        let (x, y, z) = (basis(n, i), basis(n, j), basis(n, k));
        first_nonzero(
            &[i, j, k],
            [
                (Some("(xy)z"), mul(m, &mul(m, &x, &y), &z)),
                (Some("x(yz)"), mul(m, &x, &mul(m, &y, &z))),
            ],
        )
    });
    IdentityReport::new(IdentityKind::TwoStepNilpotent.name(), w)
}

/// Decides `kind` for `a` on all basis tuples.
pub fn check_identity(a: &Algebra, kind: IdentityKind) -> IdentityReport {
    let m = a.mult();
    let n = a.dim();
    let name = kind.name();
    match kind {
        IdentityKind::Associative => associative_report(m),
        IdentityKind::Commutative => commutative_report(m),
        IdentityKind::Skew => skew_report(m),
        IdentityKind::Jacobi => jacobi_report(m),
        IdentityKind::Lie => lie_report(m),
        IdentityKind::WeaklyAssociative => check_triples(name, n, |x, y, z| wa_of(m, x, y, z)),
        IdentityKind::LeftLeibniz => {
            check_triples(name, n, |x, y, z| left_leibniz_of(m, x, y, z))
        }
        IdentityKind::RightLeibniz => {
            check_triples(name, n, |x, y, z| right_leibniz_of(m, x, y, z))
        }
        IdentityKind::SymmetricLeibniz => {
            let w = first_failing_triple(n, |i, j, k| {
                let (x, y, z) = (basis(n, i), basis(n, j), basis(n, k));
                first_nonzero(
                    &[i, j, k],
                    [
                        (Some("left_leibniz"), left_leibniz_of(m, &x, &y, &z)),
                        (Some("right_leibniz"), right_leibniz_of(m, &x, &y, &z)),
                    ],
                )
            });
            IdentityReport::new(name, w)
        }
        IdentityKind::LieAdmissible => {
            let mut r = jacobi_report(&m.skew_part());
            r.identity = name.to_string();
            r
        }
        IdentityKind::TwoStepNilpotent => two_step_nilpotent_report(m),
    }
}

/// Parses the identity name and checks it.
pub fn check_identity_named(a: &Algebra, kind: &str) -> Result<IdentityReport> {
    Ok(check_identity(a, kind.parse()?))
}

/// Checks that every `ad(x) = L_x - R_x` is a derivation of `∗`:
/// `ad(x)(y∗z) = ad(x)(y)∗z + y∗ad(x)(z)` on basis triples.
pub fn check_commutator_derivation(a: &Algebra) -> IdentityReport {
    let m = a.mult();
    let n = a.dim();
    let ad = |x: &Element, v: &Element| mul(m, x, v) - mul(m, v, x);
    check_triples("commutator_derivation", n, |x, y, z| {
        ad(x, &mul(m, y, z)) - mul(m, &ad(x, y), z) - mul(m, y, &ad(x, z))
    })
}

/// Leibniz compatibility `b(p(x,y),z) - p(x,b(y,z)) - p(b(x,z),y) = 0`.
pub fn leibniz_compat(product: &BilinearMap, bracket: &BilinearMap) -> Result<IdentityReport> {
    if product.dim() != bracket.dim() {
        return Err(Error::DimensionMismatch {
            left: product.dim(),
            right: bracket.dim(),
        });
    }
    Ok(check_triples("leibniz_compat", product.dim(), |x, y, z| {
        leibniz_compat_of(product, bracket, x, y, z)
    }))
}

pub(crate) fn leibniz_compat_of(
    p: &BilinearMap,
    b: &BilinearMap,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Element {
    mul(b, &mul(p, x, y), z) - mul(p, x, &mul(b, y, z)) - mul(p, &mul(b, x, z), y)
}

/// Cross-check of `4𝒜_•(x,y,z) = ℬ(x,y,z) + ℬ(x,z,y) - ℬ(z,x,y) - ℬ(z,y,x)`
/// where `•` is the symmetric part of `∗`. Holds for every algebra.
pub fn four_a_bullet_identity_check(a: &Algebra) -> IdentityReport {
    let m = a.mult();
    let bullet = m.symmetric_part();
    let four = scalar::int(4);
    check_triples("four_a_bullet", a.dim(), |x, y, z| {
        let lhs = associator_of(&bullet, x, y, z).scale(&four);
        let rhs = b_of(m, x, y, z) + b_of(m, x, z, y) - b_of(m, z, x, y) - b_of(m, z, y, x);
        lhs - rhs
    })
}

/// One-operation form of the Poisson axioms:
/// `3(xy)z - 3x(yz) = (xz)y + (yz)x - (yx)z - (zx)y`.
pub fn poisson_depolarized_identity(a: &Algebra) -> IdentityReport {
    let m = a.mult();
    let three = scalar::int(3);
    check_triples("poisson_depolarized", a.dim(), |x, y, z| {
        let p = |u: &Element, v: &Element| mul(m, u, v);
        let lhs = (p(&p(x, y), z) - p(x, &p(y, z))).scale(&three);
        let rhs = p(&p(x, z), y) + p(&p(y, z), x) - p(&p(y, x), z) - p(&p(z, x), y);
        lhs - rhs
    })
}
