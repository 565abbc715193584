//! Exhaustive checks of the structure theorems over every semigroup with
//! three or four generators below a bound.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::census::{map_partitions, CensusQuery, ParityFilter, QueryError};
use crate::construct::{build_type3, BuildOptions};
use crate::rf::has_unique_rf_matrix;
use crate::semigroup::NumericalSemigroup;
use crate::structure::{
    bresinsky_params, is_complete_intersection, pseudo_sym4_params, pseudo_sym_parity_check,
    symmetric_parity_case, type3_params, uf_case, ParityCase, UfCase,
};

/// Counterexamples kept per suite.
const KEPT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Symmetric with four generators: not a complete intersection exactly
    /// when Bresinsky parameters exist.
    BresinskyBiconditional,
    /// Symmetric non-CI with four generators: some parity case applies
    /// exactly when every generator is odd.
    BresinskyParity,
    /// Pseudo-symmetric with four generators: the row-parity criterion.
    PseudoSymmetricParity,
    /// Pseudo-symmetric with four generators: `F/2` has a unique RF-matrix in
    /// the canonical shape.
    PseudoSymmetricCanonical,
    /// Pseudo-symmetric, four odd generators, `F/2` odd: `α_2`, `α_3` odd and
    /// `α_1 ≡ α_4 (mod 2)` in the canonical labeling.
    PseudoSymmetricAlphaParity,
    /// Almost symmetric of type three with four odd generators: `PF = {f,2f,3f}`
    /// with `f` and every `α_i` odd, and case nUF2.
    Type3Odd,
    /// Odd type-three instances are reproduced by the cyclic construction.
    Type3RoundTrip,
    /// Almost symmetric of type three with four generators: some template
    /// case applies.
    Type3UfCoverage,
    /// At least three generators: `α_i` is below every other generator.
    AlphaBelowGenerators,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::BresinskyBiconditional,
        Suite::BresinskyParity,
        Suite::PseudoSymmetricParity,
        Suite::PseudoSymmetricCanonical,
        Suite::PseudoSymmetricAlphaParity,
        Suite::Type3Odd,
        Suite::Type3RoundTrip,
        Suite::Type3UfCoverage,
        Suite::AlphaBelowGenerators,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BresinskyBiconditional => "bresinsky-biconditional",
            Suite::BresinskyParity => "bresinsky-parity",
            Suite::PseudoSymmetricParity => "pseudo-symmetric-parity",
            Suite::PseudoSymmetricCanonical => "pseudo-symmetric-canonical",
            Suite::PseudoSymmetricAlphaParity => "pseudo-symmetric-alpha-parity",
            Suite::Type3Odd => "type3-odd",
            Suite::Type3RoundTrip => "type3-round-trip",
            Suite::Type3UfCoverage => "type3-uf-coverage",
            Suite::AlphaBelowGenerators => "alpha-below-generators",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: u64,
    pub failed: u64,
    pub counterexamples: Vec<Vec<u64>>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        Self {
            suite,
            checked: 0,
            failed: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, s: &NumericalSemigroup, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.counterexamples.len() < KEPT {
                self.counterexamples.push(s.generators().to_vec());
            }
        }
    }

    fn merge(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.failed += other.failed;
        let room = KEPT.saturating_sub(self.counterexamples.len());
        self.counterexamples
            .extend(other.counterexamples.into_iter().take(room));
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_gen: u64,
    pub suites: Vec<SuiteReport>,
    /// `(α_1 mod 2)` values seen in the alpha-parity suite: even, odd.
    pub alpha_parities_seen: (bool, bool),
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn suite(&self, suite: Suite) -> &SuiteReport {
        self.suites
            .iter()
            .find(|r| r.suite == suite)
            .expect("every suite is reported")
    }

    pub fn passed_count(&self) -> usize {
        self.suites.iter().filter(|r| r.passed()).count()
    }

    pub fn failed_count(&self) -> usize {
        self.suites.len() - self.passed_count()
    }
}

struct Partial {
    suites: Vec<SuiteReport>,
    parities: (bool, bool),
}

impl Partial {
    fn new() -> Self {
        Self {
            suites: Suite::ALL.iter().map(|&s| SuiteReport::new(s)).collect(),
            parities: (false, false),
        }
    }

    fn at(&mut self, suite: Suite) -> &mut SuiteReport {
        &mut self.suites[Suite::ALL.iter().position(|&s| s == suite).unwrap()]
    }

    fn merge(mut self, other: Partial) -> Partial {
        for (mine, theirs) in self.suites.iter_mut().zip(other.suites) {
            mine.merge(theirs);
        }
        self.parities.0 |= other.parities.0;
        self.parities.1 |= other.parities.1;
        self
    }
}

fn check_symmetric(p: &mut Partial, s: &NumericalSemigroup) {
    let ci = is_complete_intersection(s);
    let params = bresinsky_params(s);
    let extracted = params.as_ref().is_ok_and(|b| b.satisfies_identities());
    p.at(Suite::BresinskyBiconditional)
        .record(s, extracted == !ci);
    if let (false, Ok(b)) = (ci, params) {
        let case = symmetric_parity_case(&b);
        p.at(Suite::BresinskyParity)
            .record(s, (case != ParityCase::None) == s.all_generators_odd());
    }
}

fn check_pseudo_symmetric(p: &mut Partial, s: &NumericalSemigroup) {
    p.at(Suite::PseudoSymmetricParity)
        .record(s, pseudo_sym_parity_check(s) == Ok(true));
    let half = s.frobenius() / 2;
    let params = pseudo_sym4_params(s);
    let unique = has_unique_rf_matrix(s, half) == Ok(true);
    p.at(Suite::PseudoSymmetricCanonical)
        .record(s, unique && params.is_ok());
    if let Ok(params) = params {
        if s.all_generators_odd() && half % 2 == 1 {
            let [a1, a2, a3, a4] = params.alpha;
            let ok = a2 % 2 == 1 && a3 % 2 == 1 && a1 % 2 == a4 % 2;
            p.at(Suite::PseudoSymmetricAlphaParity).record(s, ok);
            if a1 % 2 == 0 {
                p.parities.0 = true;
            } else {
                p.parities.1 = true;
            }
        }
    }
}

fn check_type3(p: &mut Partial, s: &NumericalSemigroup) {
    let case = uf_case(s);
    p.at(Suite::Type3UfCoverage).record(s, case.is_ok());
    if !s.all_generators_odd() {
        return;
    }
    let params = type3_params(s);
    let ok = params.as_ref().is_ok_and(|t| {
        t.f % 2 == 1 && t.alpha.iter().all(|a| a % 2 == 1) && t.cyclic_identities_hold()
    }) && case == Ok(UfCase::NUf2);
    p.at(Suite::Type3Odd).record(s, ok);
    let rebuilt = params
        .ok()
        .and_then(|t| build_type3(t.alpha, BuildOptions::default()).ok());
    p.at(Suite::Type3RoundTrip)
        .record(s, rebuilt.is_some_and(|b| b.semigroup == *s));
}

fn check_alpha(p: &mut Partial, s: &NumericalSemigroup) {
    let gens = s.generators();
    let alpha = s.alpha_exponents();
    let ok = (0..gens.len()).all(|i| (0..gens.len()).all(|j| i == j || alpha[i] < gens[j]));
    p.at(Suite::AlphaBelowGenerators).record(s, ok);
}

fn check(p: &mut Partial, s: &NumericalSemigroup) {
    let e = s.embedding_dimension();
    if e >= 3 {
        check_alpha(p, s);
    }
    if e != 4 {
        return;
    }
    if s.is_symmetric() {
        check_symmetric(p, s);
    } else if s.is_pseudo_symmetric() {
        check_pseudo_symmetric(p, s);
    } else if s.is_almost_symmetric() && s.semigroup_type() == 3 {
        check_type3(p, s);
    }
}

/// Runs every suite over all semigroups with three or four generators, each
/// at most `max_gen`, of any parity.
pub fn verify(max_gen: u64, workers: usize) -> Result<VerifyReport, QueryError> {
    let start = Instant::now();
    let q = CensusQuery::new(max_gen, [3, 4], ParityFilter::Any)?;
    let merged = map_partitions(&q, workers, |sgs| {
        let mut p = Partial::new();
        for s in &sgs {
            check(&mut p, s);
        }
        p
    })
    .into_iter()
    .fold(Partial::new(), Partial::merge);
    Ok(VerifyReport {
        max_gen,
        suites: merged.suites,
        alpha_parities_seen: merged.parities,
        elapsed: start.elapsed(),
    })
}
