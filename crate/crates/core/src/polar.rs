//! Polarization `∗ ↦ (•, [,])` and depolarization `(•, [,]) ↦ ∗`.

use crate::error::{Error, Result};
use crate::identity::{self, IdentityReport, Witness};
use crate::tensor::{Algebra, BilinearMap};

/// A commutative product together with a skew-symmetric one on the same
/// space. Construction rejects maps without the required symmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarPair {
    bullet: BilinearMap,
    bracket: BilinearMap,
}

impl PolarPair {
    pub fn new(bullet: BilinearMap, bracket: BilinearMap) -> Result<Self> {
        if bullet.dim() != bracket.dim() {
            return Err(Error::DimensionMismatch {
                left: bullet.dim(),
                right: bracket.dim(),
            });
        }
        if let Some((i, j)) = bullet.asymmetry() {
            return Err(Error::NotCommutative { i, j });
        }
        if let Some((i, j)) = bracket.skewness_defect() {
            return Err(Error::NotSkew { i, j });
        }
        Ok(PolarPair { bullet, bracket })
    }

    pub fn dim(&self) -> usize {
        self.bullet.dim()
    }

    pub fn bullet(&self) -> &BilinearMap {
        &self.bullet
    }

    pub fn bracket(&self) -> &BilinearMap {
        &self.bracket
    }

    pub fn into_parts(self) -> (BilinearMap, BilinearMap) {
        (self.bullet, self.bracket)
    }
}

/// `x • y = ½(x∗y + y∗x)`, `[x, y] = ½(x∗y - y∗x)`.
pub fn polarize(a: &Algebra) -> PolarPair {
    PolarPair {
        bullet: a.mult().symmetric_part(),
        bracket: a.mult().skew_part(),
    }
}

/// `x ∗ y = x • y + [x, y]`.
pub fn depolarize(p: &PolarPair) -> Algebra {
    let mult = p
        .bullet
        .checked_add(&p.bracket)
        .expect("pair components share a dimension");
    Algebra::new(mult)
}

/// Depolarizes two raw maps, validating their symmetry first.
pub fn depolarize_maps(bullet: BilinearMap, bracket: BilinearMap) -> Result<Algebra> {
    Ok(depolarize(&PolarPair::new(bullet, bracket)?))
}

fn tagged(report: IdentityReport, part: &str) -> Option<Witness> {
    report.witness.map(|mut w| {
        w.part = Some(part.to_string());
        w
    })
}

fn poisson_conditions(p: &PolarPair, with_associativity: bool) -> Option<Witness> {
    tagged(identity::commutative_report(&p.bullet), "commutative")
        .or_else(|| {
            if with_associativity {
                tagged(identity::associative_report(&p.bullet), "associative")
            } else {
                None
            }
        })
        .or_else(|| tagged(identity::jacobi_report(&p.bracket), "jacobi"))
        .or_else(|| {
            let r = identity::leibniz_compat(&p.bullet, &p.bracket).expect("equal dimensions");
            tagged(r, "leibniz")
        })
}

/// Commutative `•`, Lie `[,]`, and `[x•y, z] = x•[y,z] + [x,z]•y`.
pub fn is_nonassociative_poisson(p: &PolarPair) -> IdentityReport {
    IdentityReport::new("nonassociative_poisson", poisson_conditions(p, false))
}

/// As [`is_nonassociative_poisson`] with `•` also associative.
pub fn is_poisson(p: &PolarPair) -> IdentityReport {
    IdentityReport::new("poisson", poisson_conditions(p, true))
}
