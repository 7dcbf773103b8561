//! Exact linear algebra over ℚ.
//!
//! Rows are first cleared of denominators and eliminated over ℤ
//! (cross-multiplication followed by content removal), which keeps entry
//! growth in check without ever dividing. Pivots are taken column by column
//! from the left, choosing the lowest-index remaining row with a nonzero
//! entry, so every output is a deterministic function of the input order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

/// Reduced row echelon form of a set of rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub ncols: usize,
    /// Nonzero rows in reduced echelon form, each with pivot entry 1.
    pub rows: Vec<Vec<Scalar>>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }
}

fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Row-reduces `rows` (each of length `ncols`).
pub fn row_reduce(rows: &[Vec<Scalar>], ncols: usize) -> Echelon {
    let mut work: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "row length differs from column count");
            integer_row(r)
        })
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        if next == work.len() {
            break;
        }
        let Some(found) = (next..work.len()).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        // keep the relative order of the untouched rows
        let pivot_row = work.remove(found);
        work.insert(next, pivot_row);
        if work[next][col].is_negative() {
            for x in work[next].iter_mut() {
                *x = -&*x;
            }
        }
        remove_content(&mut work[next]);
        let (before, rest) = work.split_at_mut(next);
        let (pivot, after) = rest.split_first_mut().expect("pivot row exists");
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[col].is_zero() {
                continue;
            }
            let a = pivot[col].clone();
            let b = row[col].clone();
            for (x, p) in row.iter_mut().zip(pivot.iter()) {
                *x = &*x * &a - p * &b;
            }
            remove_content(row);
        }
        pivots.push(col);
        next += 1;
    }
    let rows = work
        .into_iter()
        .take(pivots.len())
        .zip(&pivots)
        .map(|(row, &p)| {
            let lead = row[p].clone();
            row.into_iter()
                .map(|x| Scalar::new(x, lead.clone()))
                .collect()
        })
        .collect();
    Echelon {
        ncols,
        rows,
        pivots,
    }
}

/// Basis of `{ v : R v = 0 }` for the matrix whose rows are `rows`.
///
/// One vector per free column `f`: `v_f = 1`, `v_p = -R[p][f]` at every
/// pivot `p`, zero elsewhere.
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let ech = row_reduce(rows, ncols);
    ech.free_columns()
        .into_iter()
        .map(|f| {
            let mut v = vec![Scalar::zero(); ncols];
            v[f] = Scalar::one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Reduced echelon basis of the span of `vectors`.
pub fn span_basis(vectors: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    row_reduce(vectors, ncols).rows
}

pub fn rank(rows: &[Vec<Scalar>], ncols: usize) -> usize {
    row_reduce(rows, ncols).rank()
}

/// Solution set of `R x = b`: a particular solution and a kernel basis, or
/// `None` when the system is inconsistent.
pub fn solve(
    rows: &[Vec<Scalar>],
    rhs: &[Scalar],
    ncols: usize,
) -> Option<(Vec<Scalar>, Vec<Vec<Scalar>>)> {
    assert_eq!(rows.len(), rhs.len());
    let augmented: Vec<Vec<Scalar>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let ech = row_reduce(&augmented, ncols + 1);
    if ech.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut particular = vec![Scalar::zero(); ncols];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        particular[p] = row[ncols].clone();
    }
    Some((particular, nullspace(rows, ncols)))
}

/// Whether `v` lies in the span of the reduced echelon `basis`.
pub fn in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    rank(&rows, v.len()) == basis.len()
}
