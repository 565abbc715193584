//! Everything the library can say about a single semigroup, in one report.

use serde::Serialize;

use crate::rf::{has_unique_rf_matrix, rf_matrices, StreamStatus};
use crate::semigroup::NumericalSemigroup;
use crate::structure::{
    bresinsky_params, classify, defining_ideal, is_complete_intersection, pseudo_sym4_params,
    pseudo_sym_parity_check, symmetric_parity_case, type3_params, uf_case, BresinskyParams,
    DefiningIdeal, ParityCase, PseudoSym4Params, SemigroupClass, Type3Params, UfCase,
};

/// RF-matrices emitted per pseudo-Frobenius number unless overridden.
pub const DEFAULT_MATRIX_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RfSummary {
    pub f: i64,
    /// Total number of RF-matrices, saturating.
    pub total: u128,
    pub unique: bool,
    pub truncated: bool,
    pub matrices: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub gens: Vec<u64>,
    pub multiplicity: u64,
    pub embedding_dimension: usize,
    pub frobenius: i64,
    pub genus: u64,
    pub pseudo_frobenius: Vec<i64>,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub class: SemigroupClass,
    pub complete_intersection: bool,
    pub alpha: Vec<u64>,
    pub rf: Vec<RfSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bresinsky: Option<BresinskyParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parity_case: Option<ParityCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pseudo_symmetric: Option<PseudoSym4Params>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pseudo_parity_check: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub type3: Option<Type3Params>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uf_case: Option<UfCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<DefiningIdeal>,
}

pub fn analyze(s: &NumericalSemigroup, matrix_cap: usize) -> AnalysisReport {
    let e = s.embedding_dimension();
    let class = classify(s);
    let rf = if s.multiplicity() == 1 {
        Vec::new()
    } else {
        s.pseudo_frobenius()
            .iter()
            .map(|&f| {
                let mut stream = rf_matrices(s, f, matrix_cap).expect("f is pseudo-Frobenius");
                let matrices: Vec<Vec<Vec<i64>>> =
                    stream.by_ref().map(|m| m.rows().to_vec()).collect();
                RfSummary {
                    f,
                    total: stream.total(),
                    unique: has_unique_rf_matrix(s, f).expect("f is pseudo-Frobenius"),
                    truncated: stream.status() == StreamStatus::Truncated,
                    matrices,
                }
            })
            .collect()
    };
    let four = e == 4;
    let bresinsky = (four && s.is_symmetric())
        .then(|| bresinsky_params(s).ok())
        .flatten();
    let pseudo = four && s.is_pseudo_symmetric();
    let type3_candidate = four && s.is_almost_symmetric() && s.semigroup_type() == 3;
    AnalysisReport {
        gens: s.generators().to_vec(),
        multiplicity: s.multiplicity(),
        embedding_dimension: e,
        frobenius: s.frobenius(),
        genus: s.genus(),
        pseudo_frobenius: s.pseudo_frobenius().to_vec(),
        semigroup_type: s.semigroup_type(),
        class,
        complete_intersection: is_complete_intersection(s),
        alpha: s.alpha_exponents(),
        rf,
        parity_case: bresinsky.as_ref().map(symmetric_parity_case),
        bresinsky,
        pseudo_symmetric: pseudo.then(|| pseudo_sym4_params(s).ok()).flatten(),
        pseudo_parity_check: pseudo.then(|| pseudo_sym_parity_check(s).ok()).flatten(),
        type3: type3_candidate.then(|| type3_params(s).ok()).flatten(),
        uf_case: type3_candidate.then(|| uf_case(s).ok()).flatten(),
        ideal: defining_ideal(s).ok(),
    }
}
