//! Elements, bilinear maps and algebras given by structure constants.
//!
//! A bilinear map on an `n`-dimensional space is stored as a dense
//! `n × n × n` cube: entry `[i][j][k]` is the coefficient of `e_k` in
//! `m(e_i, e_j)`. Dimensions stay small (≤ 16 in practice) so a flat
//! `Vec` beats any sparse layout.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// A vector expressed in the distinguished basis `e_0 .. e_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(Vec<Scalar>);

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element(vec![Scalar::zero(); dim])
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        let mut e = Self::zero(dim);
        e.0[index] = scalar::one();
        e
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        Element(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Element(coords.iter().map(|&c| scalar::int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        Element(self.0.iter().map(|c| c * factor).collect())
    }

    /// `self += factor * other` without allocating.
    pub fn add_scaled(&mut self, factor: &Scalar, other: &[Scalar]) {
        if factor.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(other) {
            if !b.is_zero() {
                *a += factor * b;
            }
        }
    }

    /// Renders the element with the given basis names (`e0..` when `None`).
    pub fn display_with(&self, names: Option<&[String]>) -> String {
        let mut out = String::new();
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = match names {
                Some(names) => names[k].clone(),
                None => format!("e{k}"),
            };
            out.push_str(&scalar::format_term(c, &name, out.is_empty()));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(None))
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        debug_assert_eq!(self.dim(), rhs.dim());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        debug_assert_eq!(self.dim(), rhs.dim());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        self += &rhs;
        self
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(mut self, rhs: Element) -> Element {
        self -= &rhs;
        self
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Mul<&Element> for &Scalar {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

/// A bilinear map `V × V → V` given by its structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    dim: usize,
    data: Vec<Scalar>,
}

impl BilinearMap {
    pub fn zero(dim: usize) -> Self {
        BilinearMap {
            dim,
            data: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    /// Builds from a flat `[i][j][k]` cube.
    pub fn from_flat(dim: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != dim * dim * dim {
            return Err(Error::Shape {
                dim,
                len: data.len(),
            });
        }
        Ok(BilinearMap { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    data.push(f(i, j, k));
                }
            }
        }
        BilinearMap { dim, data }
    }

    /// Builds from a list of `(i, j, k, coefficient)` entries; later entries
    /// for the same slot add up.
    pub fn from_entries<I>(dim: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut m = Self::zero(dim);
        for (i, j, k, c) in entries {
            let slot = m.index(i, j, k);
            m.data[slot] += c;
        }
        m
    }

    /// Convenience for small integer tables: `(i, j, k, c)`.
    pub fn from_int_entries(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        Self::from_entries(
            dim,
            entries.iter().map(|&(i, j, k, c)| (i, j, k, scalar::int(c))),
        )
    }

    /// A skew map from `m(e_i, e_j) = -m(e_j, e_i) = value` entries.
    pub fn skew_from_entries<I>(dim: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Element)>,
    {
        let mut m = Self::zero(dim);
        for (i, j, value) in entries {
            m.set_product(i, j, &value);
            m.set_product(j, i, &-value);
        }
        m
    }

    #[inline]
    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_flat(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let slot = self.index(i, j, k);
        self.data[slot] = value;
    }

    /// Coordinates of `m(e_i, e_j)`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = self.index(i, j, 0);
        &self.data[start..start + self.dim]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        Element(self.product(i, j).to_vec())
    }

    pub fn set_product(&mut self, i: usize, j: usize, value: &Element) {
        let start = self.index(i, j, 0);
        self.data[start..start + self.dim].clone_from_slice(value.coords());
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Evaluates `m(x, y)`, checking dimensions.
    pub fn apply(&self, x: &Element, y: &Element) -> Result<Element> {
        for d in [x.dim(), y.dim()] {
            if d != self.dim {
                return Err(Error::DimensionMismatch {
                    left: self.dim,
                    right: d,
                });
            }
        }
        Ok(self.eval(x.coords(), y.coords()))
    }

    /// `m(x, y)` on raw coordinates; callers guarantee the lengths.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        let mut out = Element::zero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                out.add_scaled(&(xi * yj), self.product(i, j));
            }
        }
        out
    }

    /// `m(e_i, v)`.
    pub fn left_basis(&self, i: usize, v: &[Scalar]) -> Element {
        let mut out = Element::zero(self.dim);
        for (j, c) in v.iter().enumerate() {
            out.add_scaled(c, self.product(i, j));
        }
        out
    }

    /// `m(v, e_j)`.
    pub fn right_basis(&self, v: &[Scalar], j: usize) -> Element {
        let mut out = Element::zero(self.dim);
        for (i, c) in v.iter().enumerate() {
            out.add_scaled(c, self.product(i, j));
        }
        out
    }

    /// Swaps the two input slots: `mᵀ(x, y) = m(y, x)`.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j, k| self.get(j, i, k).clone())
    }

    /// `½(m + mᵀ)`.
    pub fn symmetric_part(&self) -> Self {
        let half = scalar::half();
        Self::from_fn(self.dim, |i, j, k| (self.get(i, j, k) + self.get(j, i, k)) * &half)
    }

    /// `½(m - mᵀ)`.
    pub fn skew_part(&self) -> Self {
        let half = scalar::half();
        Self::from_fn(self.dim, |i, j, k| (self.get(i, j, k) - self.get(j, i, k)) * &half)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        BilinearMap {
            dim: self.dim,
            data: self.data.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(BilinearMap {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// First pair `(i, j)` with `m(e_i, e_j) != m(e_j, e_i)`, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (i..self.dim).map(move |j| (i, j)))
            .find(|&(i, j)| self.product(i, j) != self.product(j, i))
    }

    /// First pair `(i, j)` with `m(e_i, e_j) != -m(e_j, e_i)`, if any.
    pub fn skewness_defect(&self) -> Option<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (i..self.dim).map(move |j| (i, j)))
            .find(|&(i, j)| {
                self.product(i, j)
                    .iter()
                    .zip(self.product(j, i))
                    .any(|(a, b)| !(a + b).is_zero())
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }

    pub fn is_skew(&self) -> bool {
        self.skewness_defect().is_none()
    }

    /// Extends to `dim + extra` by embedding the current basis at `offset`;
    /// new directions multiply to zero.
    pub fn embed(&self, new_dim: usize, offset: usize) -> Self {
        assert!(offset + self.dim <= new_dim);
        let mut out = Self::zero(new_dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out.set(i + offset, j + offset, k + offset, self.get(i, j, k).clone());
                }
            }
        }
        out
    }
}

/// A linear endomorphism, stored as the images `d(e_j)` of the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    images: Vec<Element>,
}

impl LinearMap {
    pub fn zero(dim: usize) -> Self {
        LinearMap {
            images: vec![Element::zero(dim); dim],
        }
    }

    pub fn from_images(images: Vec<Element>) -> Result<Self> {
        let dim = images.len();
        if let Some(bad) = images.iter().find(|e| e.dim() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: bad.dim(),
            });
        }
        Ok(LinearMap { images })
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, j: usize) -> &Element {
        &self.images[j]
    }

    pub fn apply(&self, v: &[Scalar]) -> Element {
        let mut out = Element::zero(self.dim());
        for (j, c) in v.iter().enumerate() {
            out.add_scaled(c, self.images[j].coords());
        }
        out
    }
}

/// An element-valued trilinear map on basis triples, i.e. an
/// `n × n × n × n` array. Identity defects are returned in this form so the
/// cochain and series routes can be compared exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrilinearTensor {
    dim: usize,
    values: Vec<Element>,
}

impl TrilinearTensor {
    pub fn zero(dim: usize) -> Self {
        TrilinearTensor {
            dim,
            values: vec![Element::zero(dim); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Element) -> Self {
        let mut values = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    values.push(f(i, j, k));
                }
            }
        }
        TrilinearTensor { dim, values }
    }

    /// As [`from_fn`](Self::from_fn), evaluating entries on the rayon pool.
    pub fn par_from_fn(dim: usize, f: impl Fn(usize, usize, usize) -> Element + Sync) -> Self {
        let values = (0..dim * dim * dim)
            .into_par_iter()
            .map(|idx| f(idx / (dim * dim), (idx / dim) % dim, idx % dim))
            .collect();
        TrilinearTensor { dim, values }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Element {
        &self.values[(i * self.dim + j) * self.dim + k]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Element::is_zero)
    }

    /// Lexicographically first nonzero entry.
    pub fn first_nonzero(&self) -> Option<([usize; 3], &Element)> {
        let n = self.dim;
        self.values
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_zero())
            .map(|(idx, v)| ([idx / (n * n), (idx / n) % n, idx % n], v))
    }
}

/// A finite-dimensional algebra `(A, ∗)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    mult: BilinearMap,
    label: Option<String>,
    names: Option<Vec<String>>,
}

impl Algebra {
    pub fn new(mult: BilinearMap) -> Self {
        Algebra {
            mult,
            label: None,
            names: None,
        }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(BilinearMap::zero(dim))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Attaches display names for the basis; ignored unless there is one
    /// name per basis vector.
    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() == self.dim() {
            self.names = Some(names);
        }
        self
    }

    pub fn dim(&self) -> usize {
        self.mult.dim()
    }

    pub fn mult(&self) -> &BilinearMap {
        &self.mult
    }

    pub fn into_mult(self) -> BilinearMap {
        self.mult
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// `x ∗ y`.
    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.mult.apply(x, y)
    }
}

impl From<BilinearMap> for Algebra {
    fn from(mult: BilinearMap) -> Self {
        Algebra::new(mult)
    }
}
