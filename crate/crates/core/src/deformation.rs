//! Truncated formal deformations `∗_t = ∗ + Σ tⁱ φ_i` of a commutative
//! symmetric Leibniz algebra, computed modulo `t^{N+1}`.
//!
//! Two routes are implemented independently. The series route multiplies
//! truncated series with [`deformed_product`] and reads off each power of
//! `t` in the two symmetric Leibniz identities
//!
//! ```text
//! I1 = X∗(Y∗Z) - (X∗Y)∗Z - Y∗(X∗Z)
//! I2 = Y∗(Z∗X) - (Y∗Z)∗X + (Y∗X)∗Z
//! ```
//!
//! The cochain route writes the order 1 and order 2 coefficients out by
//! hand ([`delta1_first`], [`delta1_second`], [`order2_obstruction`]).

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::identity::{self, IdentityReport, IdentityKind, Witness};
use crate::linalg;
use crate::polar::{is_nonassociative_poisson, PolarPair};
use crate::scalar::{self, Scalar};
use crate::tensor::{Algebra, BilinearMap, Element, TrilinearTensor};

/// `∗_t` modulo `t^{N+1}`. Missing `φ_i` (for `i` beyond the supplied list)
/// are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDeformation {
    base: Algebra,
    phis: Vec<BilinearMap>,
    order: usize,
}

impl TruncatedDeformation {
    pub fn new(base: Algebra, phis: Vec<BilinearMap>, order: usize) -> Result<Self> {
        require_commutative(&base)?;
        if let Some(phi) = phis.iter().find(|p| p.dim() != base.dim()) {
            return Err(Error::DimensionMismatch {
                left: base.dim(),
                right: phi.dim(),
            });
        }
        if phis.len() > order {
            return Err(Error::Precondition(format!(
                "{} deformation terms exceed truncation order {order}",
                phis.len()
            )));
        }
        Ok(TruncatedDeformation { base, phis, order })
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn phis(&self) -> &[BilinearMap] {
        &self.phis
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// `φ_k`, with `φ_0` the base product; `None` when `φ_k` is zero.
    pub fn term(&self, k: usize) -> Option<&BilinearMap> {
        match k {
            0 => Some(self.base.mult()),
            _ => self.phis.get(k - 1),
        }
    }
}

fn require_commutative(base: &Algebra) -> Result<()> {
    match base.mult().asymmetry() {
        Some((i, j)) => Err(Error::NotCommutative { i, j }),
        None => Ok(()),
    }
}

/// A truncated series `Σ_{k ≤ N} tᵏ x_k` with coefficients in the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesElement {
    coeffs: Vec<Element>,
}

impl SeriesElement {
    pub fn new(coeffs: Vec<Element>) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return Err(Error::Precondition("series needs at least the t^0 coefficient".into()));
        };
        let dim = first.dim();
        if let Some(c) = coeffs.iter().find(|c| c.dim() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: c.dim(),
            });
        }
        Ok(SeriesElement { coeffs })
    }

    /// `x` placed at `t⁰`.
    pub fn constant(x: Element, order: usize) -> Self {
        let mut coeffs = vec![Element::zero(x.dim()); order + 1];
        coeffs[0] = x;
        SeriesElement { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.coeffs[0].dim()
    }

    pub fn coeff(&self, k: usize) -> &Element {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    fn combine(&self, other: &SeriesElement, sign: &Scalar) -> SeriesElement {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| {
                let mut c = a.clone();
                c.add_scaled(sign, b.coords());
                c
            })
            .collect();
        SeriesElement { coeffs }
    }
}

/// Degree `k` coefficient is `Σ_{a+b+c=k} φ_a(x_b, y_c)`.
pub fn deformed_product(
    d: &TruncatedDeformation,
    x: &SeriesElement,
    y: &SeriesElement,
) -> Result<SeriesElement> {
    for s in [x, y] {
        if s.order() != d.order {
            return Err(Error::OrderMismatch {
                expected: d.order,
                found: s.order(),
            });
        }
        if s.dim() != d.dim() {
            return Err(Error::DimensionMismatch {
                left: d.dim(),
                right: s.dim(),
            });
        }
    }
    Ok(series_mul(d, x, y))
}

fn series_mul(d: &TruncatedDeformation, x: &SeriesElement, y: &SeriesElement) -> SeriesElement {
    let n = d.dim();
    let mut coeffs = vec![Element::zero(n); d.order + 1];
    for (b, xb) in x.coeffs.iter().enumerate() {
        if xb.is_zero() {
            continue;
        }
        for (c, yc) in y.coeffs.iter().enumerate().take(d.order + 1 - b) {
            if yc.is_zero() {
                continue;
            }
            for a in 0..=d.order - b - c {
                if let Some(phi) = d.term(a) {
                    coeffs[a + b + c] += &phi.eval(xb.coords(), yc.coords());
                }
            }
        }
    }
    SeriesElement { coeffs }
}

/// Which of the two symmetric Leibniz identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LeibnizPart {
    First,
    Second,
}

impl LeibnizPart {
    pub fn name(self) -> &'static str {
        match self {
            LeibnizPart::First => "first",
            LeibnizPart::Second => "second",
        }
    }
}

/// Coefficients of `I1` and `I2` at one power of `t`, over all basis triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeDefects {
    pub degree: usize,
    pub first: TrilinearTensor,
    pub second: TrilinearTensor,
}

impl DegreeDefects {
    pub fn holds(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }

    /// Lexicographically first failing triple; `first` wins ties.
    pub fn witness(&self) -> Option<(LeibnizPart, Witness)> {
        first_witness(&self.first, &self.second)
    }
}

fn first_witness(first: &TrilinearTensor, second: &TrilinearTensor) -> Option<(LeibnizPart, Witness)> {
    let n = first.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for (part, t) in [(LeibnizPart::First, first), (LeibnizPart::Second, second)] {
                    let v = t.get(i, j, k);
                    if !v.is_zero() {
                        return Some((part, Witness::new(vec![i, j, k], Some(part.name()), v.clone())));
                    }
                }
            }
        }
    }
    None
}

/// Result of expanding both identities through `t^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationReport {
    pub degrees: Vec<DegreeDefects>,
}

impl DeformationReport {
    pub fn holds(&self) -> bool {
        self.degrees.iter().all(DegreeDefects::holds)
    }

    pub fn first_failing_degree(&self) -> Option<usize> {
        self.degrees.iter().find(|d| !d.holds()).map(|d| d.degree)
    }

    /// The lowest failing degree with its witness.
    pub fn first_failure(&self) -> Option<(usize, LeibnizPart, Witness)> {
        self.degrees
            .iter()
            .find_map(|d| d.witness().map(|(part, w)| (d.degree, part, w)))
    }

    /// Collapses the report to a single identity report whose witness part
    /// reads `"t^k first"` or `"t^k second"`.
    pub fn summary(&self) -> IdentityReport {
        let witness = self.first_failure().map(|(degree, part, mut w)| {
            w.part = Some(format!("t^{degree} {}", part.name()));
            w
        });
        IdentityReport::new("truncated_symmetric_leibniz", witness)
    }
}

/// Expands `I1` and `I2` over `∗_t` on every basis triple, degree by degree.
pub fn truncated_identity_check(d: &TruncatedDeformation) -> DeformationReport {
    let n = d.dim();
    let order = d.order;
    let minus = -scalar::one();
    let plus = scalar::one();
    let per_triple: Vec<(SeriesElement, SeriesElement)> = (0..n * n * n)
        .into_par_iter()
        .map(|idx| {
            let basis = |i: usize| SeriesElement::constant(Element::basis(n, i), order);
            let (x, y, z) = (basis(idx / (n * n)), basis((idx / n) % n), basis(idx % n));
            let mul = |a: &SeriesElement, b: &SeriesElement| series_mul(d, a, b);
            let i1 = mul(&x, &mul(&y, &z))
                .combine(&mul(&mul(&x, &y), &z), &minus)
                .combine(&mul(&y, &mul(&x, &z)), &minus);
            let i2 = mul(&y, &mul(&z, &x))
                .combine(&mul(&mul(&y, &z), &x), &minus)
                .combine(&mul(&mul(&y, &x), &z), &plus);
            (i1, i2)
        })
        .collect();
    let at = |i: usize, j: usize, k: usize| &per_triple[(i * n + j) * n + k];
    let degrees = (0..=order)
        .map(|degree| DegreeDefects {
            degree,
            first: TrilinearTensor::from_fn(n, |i, j, k| at(i, j, k).0.coeff(degree).clone()),
            second: TrilinearTensor::from_fn(n, |i, j, k| at(i, j, k).1.coeff(degree).clone()),
        })
        .collect();
    DeformationReport { degrees }
}

fn check_pair(base: &Algebra, phi: &BilinearMap) -> Result<()> {
    if base.dim() != phi.dim() {
        return Err(Error::DimensionMismatch {
            left: base.dim(),
            right: phi.dim(),
        });
    }
    require_commutative(base)
}

fn ev(m: &BilinearMap, x: &Element, y: &Element) -> Element {
    m.eval(x.coords(), y.coords())
}

fn basis_triples(
    n: usize,
    f: impl Fn(&Element, &Element, &Element) -> Element + Sync,
) -> TrilinearTensor {
    TrilinearTensor::par_from_fn(n, |i, j, k| {
        f(&Element::basis(n, i), &Element::basis(n, j), &Element::basis(n, k))
    })
}

/// `δφ⁽¹⁾(X,Y,Z) = φ(X,Y∗Z) - φ(X∗Y,Z) - φ(Y,X∗Z) + X∗φ(Y,Z) - φ(X,Y)∗Z - Y∗φ(X,Z)`.
pub fn delta1_first(base: &Algebra, phi: &BilinearMap) -> Result<TrilinearTensor> {
    check_pair(base, phi)?;
    Ok(basis_triples(base.dim(), |x, y, z| first_cochain(base.mult(), phi, x, y, z)))
}

/// `δφ⁽²⁾(X,Y,Z) = φ(Y,Z∗X) - φ(Y∗Z,X) + φ(Y∗X,Z) + Y∗φ(Z,X) - φ(Y,Z)∗X + φ(Y,X)∗Z`.
pub fn delta1_second(base: &Algebra, phi: &BilinearMap) -> Result<TrilinearTensor> {
    check_pair(base, phi)?;
    Ok(basis_triples(base.dim(), |x, y, z| second_cochain(base.mult(), phi, x, y, z)))
}

fn first_cochain(m: &BilinearMap, phi: &BilinearMap, x: &Element, y: &Element, z: &Element) -> Element {
    ev(phi, x, &ev(m, y, z)) - ev(phi, &ev(m, x, y), z) - ev(phi, y, &ev(m, x, z))
        + ev(m, x, &ev(phi, y, z))
        - ev(m, &ev(phi, x, y), z)
        - ev(m, y, &ev(phi, x, z))
}

fn second_cochain(m: &BilinearMap, phi: &BilinearMap, x: &Element, y: &Element, z: &Element) -> Element {
    ev(phi, y, &ev(m, z, x)) - ev(phi, &ev(m, y, z), x)
        + ev(phi, &ev(m, y, x), z)
        + ev(m, y, &ev(phi, z, x))
        - ev(m, &ev(phi, y, z), x)
        + ev(m, &ev(phi, y, x), z)
}

/// The two order-2 conditions
///
/// ```text
/// φ1(X,φ1(Y,Z)) - φ1(φ1(X,Y),Z) - φ1(Y,φ1(X,Z)) + δφ2⁽¹⁾(X,Y,Z)
/// φ1(Y,φ1(Z,X)) - φ1(φ1(Y,Z),X) + φ1(φ1(Y,X),Z) + δφ2⁽²⁾(X,Y,Z)
/// ```
///
/// Both vanish iff `∗ + tφ1 + t²φ2` is symmetric Leibniz modulo `t³`
/// (given the lower orders).
pub fn order2_obstruction(
    base: &Algebra,
    phi1: &BilinearMap,
    phi2: &BilinearMap,
) -> Result<(TrilinearTensor, TrilinearTensor)> {
    check_pair(base, phi1)?;
    check_pair(base, phi2)?;
    let m = base.mult();
    let n = base.dim();
    let first = basis_triples(n, |x, y, z| {
        ev(phi1, x, &ev(phi1, y, z)) - ev(phi1, &ev(phi1, x, y), z) - ev(phi1, y, &ev(phi1, x, z))
            + first_cochain(m, phi2, x, y, z)
    });
    let second = basis_triples(n, |x, y, z| {
        ev(phi1, y, &ev(phi1, z, x)) - ev(phi1, &ev(phi1, y, z), x)
            + ev(phi1, &ev(phi1, y, x), z)
            + second_cochain(m, phi2, x, y, z)
    });
    Ok((first, second))
}

/// `(ρ, ψ)` with `ρ = ½(φ + φᵀ)` and `ψ = ½(φ - φᵀ)`.
pub fn split(phi: &BilinearMap) -> (BilinearMap, BilinearMap) {
    (phi.symmetric_part(), phi.skew_part())
}

/// The three conclusions about `ψ = ψ_{φ1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    /// `ψ` satisfies Jacobi.
    pub jacobi: IdentityReport,
    /// `(∗, ψ)` is a nonassociative Poisson algebra.
    pub poisson: IdentityReport,
    /// `ψ(X,Y)∗Z - ψ(Z,X)∗Y = 0`.
    pub annihilation: IdentityReport,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.parts().iter().all(|r| r.holds())
    }

    pub fn parts(&self) -> [&IdentityReport; 3] {
        [&self.jacobi, &self.poisson, &self.annihilation]
    }
}

fn hypothesis(which: &str, detail: impl Into<String>) -> Error {
    Error::Hypothesis {
        which: which.to_string(),
        detail: detail.into(),
    }
}

fn tensor_witness(t: &TrilinearTensor) -> Option<String> {
    t.first_nonzero()
        .map(|([i, j, k], v)| format!("nonzero at (e{i}, e{j}, e{k}): {v}"))
}

/// Checks the conclusions about `ψ_{φ1}` for a commutative symmetric Leibniz
/// base and an order-1 direction `φ1`.
///
/// Fails with [`Error::Hypothesis`] naming `base_commutative`,
/// `base_symmetric_leibniz`, `delta1_first` or `delta1_second`.
pub fn verify_deformation_theorem(base: &Algebra, phi1: &BilinearMap) -> Result<TheoremReport> {
    if base.dim() != phi1.dim() {
        return Err(Error::DimensionMismatch {
            left: base.dim(),
            right: phi1.dim(),
        });
    }
    if let Some((i, j)) = base.mult().asymmetry() {
        return Err(hypothesis("base_commutative", format!("e{i}*e{j} != e{j}*e{i}")));
    }
    let sl = identity::check_identity(base, IdentityKind::SymmetricLeibniz);
    if !sl.holds() {
        return Err(hypothesis("base_symmetric_leibniz", sl.to_string()));
    }
    if let Some(w) = tensor_witness(&delta1_first(base, phi1)?) {
        return Err(hypothesis("delta1_first", w));
    }
    if let Some(w) = tensor_witness(&delta1_second(base, phi1)?) {
        return Err(hypothesis("delta1_second", w));
    }

    let (_, psi) = split(phi1);
    let m = base.mult();
    let jacobi = IdentityReport::new("psi_jacobi", identity::jacobi_report(&psi).witness);
    let pair = PolarPair::new(m.clone(), psi.clone()).expect("commutative base and skew part");
    let poisson = is_nonassociative_poisson(&pair);
    let annihilation = triple_report("psi_annihilation", base.dim(), |x, y, z| {
        ev(m, &ev(&psi, x, y), z) - ev(m, &ev(&psi, z, x), y)
    });
    Ok(TheoremReport {
        jacobi,
        poisson,
        annihilation,
    })
}

fn triple_report(
    name: &str,
    n: usize,
    f: impl Fn(&Element, &Element, &Element) -> Element + Sync,
) -> IdentityReport {
    let witness = identity::first_failing_triple(n, |i, j, k| {
        let d = f(&Element::basis(n, i), &Element::basis(n, j), &Element::basis(n, k));
        identity::first_nonzero(&[i, j, k], [(None, d)])
    });
    IdentityReport::new(name, witness)
}

/// `Y∗ρ(X,Z) + ρ(Y,Z∗X) + ψ(Y,X∗Z) = 0` for `(ρ, ψ) = split(φ1)`.
pub fn rho_relation(base: &Algebra, phi1: &BilinearMap) -> Result<IdentityReport> {
    check_pair(base, phi1)?;
    let (rho, psi) = split(phi1);
    let m = base.mult();
    Ok(triple_report("rho_relation", base.dim(), |x, y, z| {
        ev(m, y, &ev(&rho, x, z)) + ev(&rho, y, &ev(m, z, x)) + ev(&psi, y, &ev(m, x, z))
    }))
}

/// `ψ(Y,Z)∗X + ψ(X,Y)∗Z - 3ψ(Z,X)∗Y = 0` for `ψ = ψ_{φ1}`.
pub fn psi_relation(base: &Algebra, phi1: &BilinearMap) -> Result<IdentityReport> {
    check_pair(base, phi1)?;
    let (_, psi) = split(phi1);
    let m = base.mult();
    let three = scalar::int(3);
    Ok(triple_report("psi_relation", base.dim(), |x, y, z| {
        ev(m, &ev(&psi, y, z), x) + ev(m, &ev(&psi, x, y), z)
            - ev(m, &ev(&psi, z, x), y).scale(&three)
    }))
}

fn flatten(t: &TrilinearTensor) -> impl Iterator<Item = &Scalar> {
    let n = t.dim();
    (0..n * n * n).flat_map(move |idx| {
        t.get(idx / (n * n), (idx / n) % n, idx % n).coords().iter()
    })
}

fn elementary(n: usize, u: usize) -> BilinearMap {
    let mut e = BilinearMap::zero(n);
    e.set(u / (n * n), (u / n) % n, u % n, scalar::one());
    e
}

/// Coefficient matrix of the linear map `φ ↦ (δφ⁽¹⁾, δφ⁽²⁾)` with `φ`
/// flattened in structure-constant order.
fn delta1_matrix(base: &Algebra) -> Vec<Vec<Scalar>> {
    let n = base.dim();
    let cols = n * n * n;
    let columns: Vec<Vec<Scalar>> = (0..cols)
        .map(|u| {
            let e = elementary(n, u);
            let d1 = delta1_first(base, &e).expect("checked base");
            let d2 = delta1_second(base, &e).expect("checked base");
            flatten(&d1).chain(flatten(&d2)).cloned().collect()
        })
        .collect();
    let nrows = columns.first().map_or(0, Vec::len);
    (0..nrows)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect::<Vec<_>>())
        .filter(|row| row.iter().any(|v| !v.is_zero()))
        .collect()
}

fn unflatten(n: usize, v: Vec<Scalar>) -> BilinearMap {
    BilinearMap::from_flat(n, v).expect("n^3 entries")
}

/// A basis of the order-1 directions `{φ : δφ⁽¹⁾ = δφ⁽²⁾ = 0}`.
pub fn order1_directions(base: &Algebra) -> Result<Vec<BilinearMap>> {
    require_commutative(base)?;
    let n = base.dim();
    let rows = delta1_matrix(base);
    Ok(linalg::nullspace(&rows, n * n * n)
        .into_iter()
        .map(|v| unflatten(n, v))
        .collect())
}

/// Some `φ2` making both order-2 conditions vanish, or `None` if `φ1` does
/// not extend to order 2.
pub fn order2_extension(base: &Algebra, phi1: &BilinearMap) -> Result<Option<BilinearMap>> {
    check_pair(base, phi1)?;
    let n = base.dim();
    let cols = n * n * n;
    let (q1, q2) = order2_obstruction(base, phi1, &BilinearMap::zero(n))?;
    let rhs_full: Vec<Scalar> = flatten(&q1).chain(flatten(&q2)).map(|v| -v.clone()).collect();
    let columns: Vec<Vec<Scalar>> = (0..cols)
        .map(|u| {
            let e = elementary(n, u);
            let d1 = delta1_first(base, &e).expect("checked base");
            let d2 = delta1_second(base, &e).expect("checked base");
            flatten(&d1).chain(flatten(&d2)).cloned().collect()
        })
        .collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (r, b) in rhs_full.into_iter().enumerate() {
        let row: Vec<Scalar> = columns.iter().map(|c| c[r].clone()).collect();
        if row.iter().all(Zero::is_zero) {
            if !b.is_zero() {
                return Ok(None);
            }
            continue;
        }
        rows.push(row);
        rhs.push(b);
    }
    Ok(linalg::solve(&rows, &rhs, cols).map(|(particular, _)| unflatten(n, particular)))
}
