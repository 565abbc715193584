//! Structure theory for small embedding dimension: classification,
//! complete intersections, parameter extraction for the symmetric,
//! pseudo-symmetric and type-three families, and defining ideals.

mod bresinsky;
mod ci;
mod herzog;
mod ideal;
mod pseudo;
mod type3;

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::rf::{row_factors, RfError};
use crate::semigroup::NumericalSemigroup;

pub use bresinsky::{
    bresinsky_generators, bresinsky_params, bresinsky_solutions, solve_bresinsky,
    symmetric_parity_case, BresinskyParams, ParityCase,
};
pub use ci::{gluings, is_complete_intersection, Gluing};
pub use herzog::Herzog3Params;
pub use ideal::{defining_ideal, BinomialRelation, DefiningIdeal, IdealFamily};
pub use pseudo::{pseudo_sym4_params, pseudo_sym_parity_check, PseudoSym4Params};
pub use type3::{cyclic_generators, type3_params, uf_case, Type3Params, UfCase};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("expected embedding dimension {expected}, found {found}")]
    EmbeddingDimension { expected: usize, found: usize },
    #[error("semigroup is not {0}")]
    Precondition(&'static str),
    #[error("no Bresinsky parameters exist for any relabeling")]
    NoBresinskyParams,
    #[error("RF-matrix of F(S)/2 matches the canonical form under no relabeling")]
    NoPseudoSymmetricLabeling,
    #[error("pseudo-Frobenius numbers {0:?} are not of the form {{f, 2f, 3f}}")]
    PseudoFrobeniusShape(Vec<i64>),
    #[error("no relabeling makes the type-three templates valid RF-matrices")]
    NoType3Labeling,
    #[error("RF-matrices of the two smaller pseudo-Frobenius numbers match no UF template")]
    NoUfTemplate,
    #[error("semigroup lies outside the families with a closed-form defining ideal")]
    OutsideCoveredFamilies,
    #[error("relation {0} is not homogeneous")]
    Inhomogeneous(String),
    #[error(transparent)]
    Rf(#[from] RfError),
}

pub(crate) fn require_edim(s: &NumericalSemigroup, e: usize) -> Result<(), StructureError> {
    if s.embedding_dimension() == e {
        Ok(())
    } else {
        Err(StructureError::EmbeddingDimension {
            expected: e,
            found: s.embedding_dimension(),
        })
    }
}

/// Permutations of `0..N` in lexicographic order.
pub fn permutations<const N: usize>() -> Vec<[usize; N]> {
    let mut current: [usize; N] = std::array::from_fn(|i| i);
    let mut out = vec![current];
    loop {
        let Some(i) = (1..N).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..N).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current);
    }
}

/// Whether `rows`, written over the generators reordered by `perm`, form a
/// valid RF-matrix of `f`.
pub(crate) fn template_holds(
    s: &NumericalSemigroup,
    f: i64,
    perm: &[usize; 4],
    rows: &[[i64; 4]; 4],
) -> bool {
    let gens = s.generators();
    rows.iter().enumerate().all(|(k, row)| {
        let mut orig = [0i64; 4];
        for (l, &v) in row.iter().enumerate() {
            orig[perm[l]] = v;
        }
        row_factors(&orig, perm[k], f, gens)
    })
}

/// Position-wise selection: `out[k] = values[perm[k]]`.
pub fn relabel<T: Copy, const N: usize>(values: &[T], perm: &[usize; N]) -> [T; N] {
    std::array::from_fn(|k| values[perm[k]])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    SymmetricNonCi,
    SymmetricCi,
    PseudoSymmetric,
    /// Almost symmetric of the given type, at least three.
    AlmostSymmetric(usize),
    NonAlmostSymmetric,
}

impl ClassLabel {
    pub fn is_almost_symmetric(self) -> bool {
        !matches!(self, ClassLabel::NonAlmostSymmetric)
    }

    pub fn parse(label: &str) -> Option<Self> {
        match label {
            "symmetric-nonCI" => Some(Self::SymmetricNonCi),
            "symmetric-CI" => Some(Self::SymmetricCi),
            "pseudo-symmetric" => Some(Self::PseudoSymmetric),
            "non-almost-symmetric" => Some(Self::NonAlmostSymmetric),
            other => other
                .strip_prefix("almost-symmetric-type-")
                .and_then(|t| t.parse().ok())
                .filter(|&t| t >= 3)
                .map(Self::AlmostSymmetric),
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SymmetricNonCi => f.write_str("symmetric-nonCI"),
            Self::SymmetricCi => f.write_str("symmetric-CI"),
            Self::PseudoSymmetric => f.write_str("pseudo-symmetric"),
            Self::AlmostSymmetric(t) => write!(f, "almost-symmetric-type-{t}"),
            Self::NonAlmostSymmetric => f.write_str("non-almost-symmetric"),
        }
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SemigroupClass {
    pub label: ClassLabel,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub all_generators_odd: bool,
}

pub fn classify(s: &NumericalSemigroup) -> SemigroupClass {
    let label = if s.is_symmetric() {
        if is_complete_intersection(s) {
            ClassLabel::SymmetricCi
        } else {
            ClassLabel::SymmetricNonCi
        }
    } else if s.is_pseudo_symmetric() {
        ClassLabel::PseudoSymmetric
    } else if s.is_almost_symmetric() {
        ClassLabel::AlmostSymmetric(s.semigroup_type())
    } else {
        ClassLabel::NonAlmostSymmetric
    };
    SemigroupClass {
        label,
        semigroup_type: s.semigroup_type(),
        all_generators_odd: s.all_generators_odd(),
    }
}
