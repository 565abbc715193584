use std::fmt;

use serde::Serialize;

use super::{bresinsky_params, require_edim, type3_params, StructureError};
use crate::rf::factorizations;
use crate::semigroup::NumericalSemigroup;

/// Binomial `x^lhs - x^rhs`, stored as exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BinomialRelation {
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
}

impl BinomialRelation {
    pub fn new(lhs: Vec<u64>, rhs: Vec<u64>) -> Self {
        debug_assert_eq!(lhs.len(), rhs.len());
        Self { lhs, rhs }
    }

    pub fn degrees(&self, gens: &[u64]) -> (u128, u128) {
        let deg = |v: &[u64]| {
            v.iter()
                .zip(gens)
                .map(|(&e, &g)| e as u128 * g as u128)
                .sum()
        };
        (deg(&self.lhs), deg(&self.rhs))
    }

    pub fn is_homogeneous(&self, gens: &[u64]) -> bool {
        let (l, r) = self.degrees(gens);
        l == r
    }

    pub fn has_disjoint_supports(&self) -> bool {
        self.lhs
            .iter()
            .zip(&self.rhs)
            .all(|(&l, &r)| l == 0 || r == 0)
    }

    /// Same binomial over generators reordered by `perm` (new index `k` is old
    /// index `perm[k]`).
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        Self::new(
            perm.iter().map(|&p| self.lhs[p]).collect(),
            perm.iter().map(|&p| self.rhs[p]).collect(),
        )
    }

    /// Equal as binomials up to sign.
    pub fn same_up_to_sign(&self, other: &Self) -> bool {
        self == other || (self.lhs == other.rhs && self.rhs == other.lhs)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, exps: &[u64]) -> fmt::Result {
    let mut first = true;
    for (k, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "x{}", k + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

impl fmt::Display for BinomialRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.lhs)?;
        f.write_str(" - ")?;
        write_monomial(f, &self.rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealFamily {
    /// Three generators, not symmetric: three binomials.
    NonSymmetric3,
    /// Four generators, symmetric, not a complete intersection: five binomials.
    Bresinsky,
    /// Four odd generators, almost symmetric of type three: six binomials.
    Type3Odd,
}

/// Closed-form generators of the defining ideal. Variable `x_{k+1}` has
/// degree `gens[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DefiningIdeal {
    pub family: IdealFamily,
    pub gens: Vec<u64>,
    pub relations: Vec<BinomialRelation>,
}

pub fn defining_ideal(s: &NumericalSemigroup) -> Result<DefiningIdeal, StructureError> {
    let ideal = match s.embedding_dimension() {
        3 if !s.is_symmetric() => non_symmetric_3(s)?,
        4 if s.is_symmetric() => {
            let p = bresinsky_params(s).map_err(|_| StructureError::OutsideCoveredFamilies)?;
            DefiningIdeal {
                family: IdealFamily::Bresinsky,
                gens: p.gens.to_vec(),
                relations: p.relations(),
            }
        }
        4 if s.all_generators_odd() && s.semigroup_type() == 3 && s.is_almost_symmetric() => {
            let p = type3_params(s)?;
            DefiningIdeal {
                family: IdealFamily::Type3Odd,
                gens: p.gens.to_vec(),
                relations: p.relations(),
            }
        }
        _ => return Err(StructureError::OutsideCoveredFamilies),
    };
    for r in &ideal.relations {
        if !r.is_homogeneous(&ideal.gens) || !r.has_disjoint_supports() {
            return Err(StructureError::Inhomogeneous(r.to_string()));
        }
    }
    Ok(ideal)
}

// For three generators and S not symmetric, α_i n_i has exactly one
// factorization over the other two generators, with both coefficients
// positive, and the three binomials x_i^{α_i} - x_j^{r_ij} x_k^{r_ik}
// generate the ideal.
fn non_symmetric_3(s: &NumericalSemigroup) -> Result<DefiningIdeal, StructureError> {
    require_edim(s, 3)?;
    let gens = s.generators();
    let alpha = s.alpha_exponents();
    let mut relations = Vec::with_capacity(3);
    for i in 0..3 {
        let value = alpha[i] * gens[i];
        let rhs: Vec<Vec<u64>> = factorizations(s, value)
            .into_iter()
            .map(|f| f.0)
            .filter(|v| v[i] == 0)
            .collect();
        let [rhs] = rhs.as_slice() else {
            return Err(StructureError::OutsideCoveredFamilies);
        };
        if rhs.iter().enumerate().any(|(j, &c)| j != i && c == 0) {
            return Err(StructureError::OutsideCoveredFamilies);
        }
        let mut lhs = vec![0; 3];
        lhs[i] = alpha[i];
        relations.push(BinomialRelation::new(lhs, rhs.clone()));
    }
    Ok(DefiningIdeal {
        family: IdealFamily::NonSymmetric3,
        gens: gens.to_vec(),
        relations,
    })
}
