//! JSON algebra files.
//!
//! ```json
//! {
//!   "dim": 3,
//!   "label": "D3_C2(alpha=1)",
//!   "names": ["u1", "u2", "w1"],
//!   "products": [
//!     { "i": 0, "j": 1, "coeffs": { "2": "2" } }
//!   ]
//! }
//! ```
//!
//! Structure constants are rational strings so no precision is lost in
//! transit. The writer is canonical: keys in the order above, products
//! sorted by `(i, j)`, zero coefficients dropped, pretty-printed with a
//! trailing newline. A pair file carries `bullet` and `bracket` lists in
//! place of `products`.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polar::PolarPair;
use crate::scalar::{format_scalar, parse_scalar};
use crate::tensor::{Algebra, BilinearMap};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductEntry {
    i: usize,
    j: usize,
    coeffs: BTreeMap<usize, String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
    products: Vec<ProductEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairFile {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
    bullet: Vec<ProductEntry>,
    bracket: Vec<ProductEntry>,
}

fn from_json<'de, T: Deserialize<'de>>(text: &'de str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|err| {
        let path = err.path().to_string();
        let inner = err.into_inner();
        if path == "." {
            Error::Format(inner.to_string())
        } else {
            Error::Format(format!("{path}: {inner}"))
        }
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    text
}

fn check_names(dim: usize, names: &Option<Vec<String>>) -> Result<()> {
    match names {
        Some(n) if n.len() != dim => Err(Error::Format(format!(
            "names: {} names given for dimension {dim}",
            n.len()
        ))),
        _ => Ok(()),
    }
}

fn decode_products(dim: usize, field: &str, entries: &[ProductEntry]) -> Result<BilinearMap> {
    let mut m = BilinearMap::zero(dim);
    let mut seen = vec![false; dim * dim];
    for (idx, entry) in entries.iter().enumerate() {
        let at = format!("{field}[{idx}]");
        for (name, value) in [("i", entry.i), ("j", entry.j)] {
            if value >= dim {
                return Err(Error::Format(format!(
                    "{at}.{name}: index {value} out of range for dimension {dim}"
                )));
            }
        }
        let slot = entry.i * dim + entry.j;
        if seen[slot] {
            return Err(Error::Format(format!(
                "{at}: duplicate product ({}, {})",
                entry.i, entry.j
            )));
        }
        seen[slot] = true;
        for (&k, text) in &entry.coeffs {
            if k >= dim {
                return Err(Error::Format(format!(
                    "{at}.coeffs.{k}: index {k} out of range for dimension {dim}"
                )));
            }
            let value = parse_scalar(text).map_err(|e| Error::Format(format!("{at}.coeffs.{k}: {e}")))?;
            m.set(entry.i, entry.j, k, value);
        }
    }
    Ok(m)
}

fn encode_products(m: &BilinearMap) -> Vec<ProductEntry> {
    let n = m.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let coeffs: BTreeMap<usize, String> = m
                .product(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, format_scalar(c)))
                .collect();
            if !coeffs.is_empty() {
                out.push(ProductEntry { i, j, coeffs });
            }
        }
    }
    out
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let file: AlgebraFile = from_json(text)?;
    check_names(file.dim, &file.names)?;
    let mult = decode_products(file.dim, "products", &file.products)?;
    let mut a = Algebra::new(mult);
    if let Some(label) = file.label {
        a = a.with_label(label);
    }
    if let Some(names) = file.names {
        a = a.with_names(names);
    }
    Ok(a)
}

pub fn algebra_to_json(a: &Algebra) -> String {
    to_json(&AlgebraFile {
        dim: a.dim(),
        label: a.label().map(str::to_string),
        names: a.names().map(<[String]>::to_vec),
        products: encode_products(a.mult()),
    })
}

/// A bare bilinear map, written exactly like an algebra's product table.
pub fn map_to_json(m: &BilinearMap) -> String {
    algebra_to_json(&Algebra::new(m.clone()))
}

pub fn read_algebra(path: impl AsRef<Path>) -> Result<Algebra> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse_algebra(&text).map_err(|e| match e {
        Error::Format(msg) => Error::Format(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn write_algebra(path: impl AsRef<Path>, a: &Algebra) -> Result<()> {
    std::fs::write(path, algebra_to_json(a))?;
    Ok(())
}

/// A polar pair with the optional display metadata of its file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDocument {
    pub pair: PolarPair,
    pub label: Option<String>,
    pub names: Option<Vec<String>>,
}

pub fn parse_pair(text: &str) -> Result<PairDocument> {
    let file: PairFile = from_json(text)?;
    check_names(file.dim, &file.names)?;
    let bullet = decode_products(file.dim, "bullet", &file.bullet)?;
    let bracket = decode_products(file.dim, "bracket", &file.bracket)?;
    Ok(PairDocument {
        pair: PolarPair::new(bullet, bracket)?,
        label: file.label,
        names: file.names,
    })
}

pub fn pair_to_json(doc: &PairDocument) -> String {
    to_json(&PairFile {
        dim: doc.pair.dim(),
        label: doc.label.clone(),
        names: doc.names.clone(),
        bullet: encode_products(doc.pair.bullet()),
        bracket: encode_products(doc.pair.bracket()),
    })
}

pub fn read_pair(path: impl AsRef<Path>) -> Result<PairDocument> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse_pair(&text).map_err(|e| match e {
        Error::Format(msg) => Error::Format(format!("{}: {msg}", path.display())),
        other => other,
    })
}
