//! Factorizations and row-factorization (RF) matrices of pseudo-Frobenius
//! numbers.

use serde::Serialize;
use thiserror::Error;

use crate::semigroup::NumericalSemigroup;

/// Default number of RF-matrices streamed before truncation is reported.
pub const DEFAULT_RF_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RfError {
    #[error("{0} is not a pseudo-Frobenius number")]
    NotPseudoFrobenius(i64),
    #[error("row index {index} out of range for embedding dimension {edim}")]
    RowIndex { index: usize, edim: usize },
    #[error("row {row:?} does not factor {f}")]
    InvalidRow { row: Vec<i64>, f: i64 },
}

/// Coefficients of a value over the minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Factorization(pub Vec<u64>);

impl Factorization {
    pub fn value(&self, gens: &[u64]) -> u64 {
        self.0.iter().zip(gens).map(|(c, g)| c * g).sum()
    }
}

/// Every factorization of `value`, in ascending lexicographic order. Empty
/// iff `value` is not in the semigroup.
pub fn factorizations(s: &NumericalSemigroup, value: u64) -> Vec<Factorization> {
    let gens = s.generators();
    let mut out = Vec::new();
    let mut coeffs = vec![0u64; gens.len()];
    if s.contains(value as i64) {
        descend(s, gens.len() - 1, value, &mut coeffs, &mut out);
    }
    out.sort_unstable();
    out
}

// Fixes coefficients from the largest generator downwards. Any residual that
// is not in S can never be completed, whatever the remaining generators.
fn descend(
    s: &NumericalSemigroup,
    idx: usize,
    residual: u64,
    coeffs: &mut Vec<u64>,
    out: &mut Vec<Factorization>,
) {
    let g = s.generators()[idx];
    if idx == 0 {
        if residual.is_multiple_of(g) {
            coeffs[0] = residual / g;
            out.push(Factorization(coeffs.clone()));
        }
        return;
    }
    for c in 0..=residual / g {
        let rest = residual - c * g;
        if !s.contains(rest as i64) {
            continue;
        }
        coeffs[idx] = c;
        descend(s, idx - 1, rest, coeffs, out);
    }
    coeffs[idx] = 0;
}

fn check_pf(s: &NumericalSemigroup, f: i64) -> Result<(), RfError> {
    if s.pseudo_frobenius().binary_search(&f).is_ok() {
        Ok(())
    } else {
        Err(RfError::NotPseudoFrobenius(f))
    }
}

/// All candidate rows `i` of an RF-matrix of `f`: `-1` at position `i`, a
/// factorization of `f + n_i` elsewhere.
pub fn rf_rows(s: &NumericalSemigroup, f: i64, i: usize) -> Result<Vec<Vec<i64>>, RfError> {
    check_pf(s, f)?;
    let gens = s.generators();
    if i >= gens.len() {
        return Err(RfError::RowIndex {
            index: i,
            edim: gens.len(),
        });
    }
    let target = (f + gens[i] as i64) as u64;
    let rows: Vec<Vec<i64>> = factorizations(s, target)
        .into_iter()
        .map(|fact| {
            // f is not in S, so no factorization of f + n_i uses n_i
            debug_assert_eq!(fact.0[i], 0);
            let mut row: Vec<i64> = fact.0.iter().map(|&c| c as i64).collect();
            row[i] = -1;
            row
        })
        .collect();
    debug_assert!(!rows.is_empty());
    Ok(rows)
}

/// Row-factorization matrix of a pseudo-Frobenius number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RfMatrix {
    f: i64,
    rows: Vec<Vec<i64>>,
}

impl RfMatrix {
    /// Validates the diagonal, the sign pattern and every row sum.
    pub fn new(f: i64, rows: Vec<Vec<i64>>, gens: &[u64]) -> Result<Self, RfError> {
        for (i, row) in rows.iter().enumerate() {
            if !row_factors(row, i, f, gens) {
                return Err(RfError::InvalidRow {
                    row: row.clone(),
                    f,
                });
            }
        }
        if rows.len() != gens.len() {
            return Err(RfError::RowIndex {
                index: rows.len(),
                edim: gens.len(),
            });
        }
        Ok(Self { f, rows })
    }

    pub fn f(&self) -> i64 {
        self.f
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    /// Rows and columns reordered so that new index `k` is old index `perm[k]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let rows = perm
            .iter()
            .map(|&pi| perm.iter().map(|&pj| self.rows[pi][pj]).collect())
            .collect();
        Self { f: self.f, rows }
    }
}

/// Whether `row` is a valid row `i` of an RF-matrix of `f` over `gens`.
pub fn row_factors(row: &[i64], i: usize, f: i64, gens: &[u64]) -> bool {
    row.len() == gens.len()
        && row
            .iter()
            .enumerate()
            .all(|(j, &a)| if j == i { a == -1 } else { a >= 0 })
        && row
            .iter()
            .zip(gens)
            .map(|(&a, &g)| a * g as i64)
            .sum::<i64>()
            == f
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(x: i64) -> Self {
        if x.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Parity of the entry sum of a row, the `-1` included.
pub fn row_parity(row: &[i64]) -> Parity {
    Parity::of(row.iter().sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StreamStatus {
    Running,
    Exhausted,
    Truncated,
}

/// Lazy Cartesian product of the candidate rows, in lexicographic order of
/// row tuples. Stops after `cap` matrices; [`RfMatrices::status`] then tells
/// truncation apart from exhaustion.
#[derive(Debug, Clone)]
pub struct RfMatrices {
    f: i64,
    gens: Vec<u64>,
    choices: Vec<Vec<Vec<i64>>>,
    cursor: Option<Vec<usize>>,
    emitted: usize,
    cap: usize,
    status: StreamStatus,
}

impl RfMatrices {
    pub fn status(&self) -> StreamStatus {
        self.status
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    /// Number of RF-matrices of `f`, saturating.
    pub fn total(&self) -> u128 {
        self.choices
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
    }

    fn advance(&mut self) {
        let Some(cursor) = self.cursor.as_mut() else {
            return;
        };
        for k in (0..cursor.len()).rev() {
            cursor[k] += 1;
            if cursor[k] < self.choices[k].len() {
                return;
            }
            cursor[k] = 0;
        }
        self.cursor = None;
    }
}

impl Iterator for RfMatrices {
    type Item = RfMatrix;

    fn next(&mut self) -> Option<RfMatrix> {
        let Some(cursor) = self.cursor.as_ref() else {
            self.status = StreamStatus::Exhausted;
            return None;
        };
        if self.emitted >= self.cap {
            self.status = StreamStatus::Truncated;
            return None;
        }
        let rows: Vec<Vec<i64>> = cursor
            .iter()
            .zip(&self.choices)
            .map(|(&k, c)| c[k].clone())
            .collect();
        let m = RfMatrix::new(self.f, rows, &self.gens).expect("candidate rows factor f");
        self.emitted += 1;
        self.advance();
        Some(m)
    }
}

pub fn rf_matrices(s: &NumericalSemigroup, f: i64, cap: usize) -> Result<RfMatrices, RfError> {
    let choices = (0..s.embedding_dimension())
        .map(|i| rf_rows(s, f, i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RfMatrices {
        f,
        gens: s.generators().to_vec(),
        cursor: Some(vec![0; choices.len()]),
        choices,
        emitted: 0,
        cap,
        status: StreamStatus::Running,
    })
}

pub fn has_unique_rf_matrix(s: &NumericalSemigroup, f: i64) -> Result<bool, RfError> {
    for i in 0..s.embedding_dimension() {
        if rf_rows(s, f, i)?.len() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
