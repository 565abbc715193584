//! Exhaustive enumeration of numerical semigroups by generator bound and
//! aggregation of their classes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::semigroup::{gcd, Minimality, NumericalSemigroup};
use crate::structure::{classify, ClassLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityFilter {
    Odd,
    Any,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("max_gen must be at least 3, got {0}")]
    BoundTooSmall(u64),
    #[error("embedding dimensions must lie in 2..=7, got {0}")]
    EdimOutOfRange(usize),
    #[error("no embedding dimension requested")]
    NoEdim,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusQuery {
    max_gen: u64,
    edims: BTreeSet<usize>,
    parity: ParityFilter,
    classes: Option<BTreeSet<ClassLabel>>,
}

impl CensusQuery {
    pub fn new(
        max_gen: u64,
        edims: impl IntoIterator<Item = usize>,
        parity: ParityFilter,
    ) -> Result<Self, QueryError> {
        if max_gen < 3 {
            return Err(QueryError::BoundTooSmall(max_gen));
        }
        let edims: BTreeSet<usize> = edims.into_iter().collect();
        if edims.is_empty() {
            return Err(QueryError::NoEdim);
        }
        if let Some(&e) = edims.iter().find(|&&e| !(2..=7).contains(&e)) {
            return Err(QueryError::EdimOutOfRange(e));
        }
        Ok(Self {
            max_gen,
            edims,
            parity,
            classes: None,
        })
    }

    /// Restrict counting to the given labels. Without a filter every almost
    /// symmetric semigroup is counted.
    pub fn with_classes(mut self, classes: impl IntoIterator<Item = ClassLabel>) -> Self {
        self.classes = Some(classes.into_iter().collect());
        self
    }

    pub fn max_gen(&self) -> u64 {
        self.max_gen
    }

    pub fn edims(&self) -> &BTreeSet<usize> {
        &self.edims
    }

    pub fn parity(&self) -> ParityFilter {
        self.parity
    }

    fn selects(&self, label: ClassLabel) -> bool {
        match &self.classes {
            Some(set) => set.contains(&label),
            None => label.is_almost_symmetric(),
        }
    }

    fn candidates(&self) -> Vec<u64> {
        match self.parity {
            ParityFilter::Odd => (3..=self.max_gen).step_by(2).collect(),
            ParityFilter::Any => (2..=self.max_gen).collect(),
        }
    }
}

/// Fixed-width bitset over `0..=bound` holding the elements of a submonoid.
#[derive(Clone)]
struct Reach {
    words: Vec<u64>,
}

impl Reach {
    fn zero(bound: u64) -> Self {
        let mut words = vec![0u64; (bound as usize + 64) / 64];
        words[0] = 1;
        Self { words }
    }

    fn get(&self, x: u64) -> bool {
        let x = x as usize;
        self.words[x / 64] >> (x % 64) & 1 == 1
    }

    fn or_shifted(&mut self, by: usize) {
        let (word_shift, bit_shift) = (by / 64, by % 64);
        for k in (0..self.words.len()).rev() {
            let mut v = 0;
            if k >= word_shift {
                v = self.words[k - word_shift] << bit_shift;
                if bit_shift > 0 && k > word_shift {
                    v |= self.words[k - word_shift - 1] >> (64 - bit_shift);
                }
            }
            self.words[k] |= v;
        }
    }

    /// Closure under adding `x`. Bits past the bound may hold junk but are
    /// never read.
    fn with_generator(&self, x: u64) -> Self {
        let mut next = self.clone();
        let limit = self.words.len() * 64;
        let mut step = x as usize;
        while step < limit {
            next.or_shifted(step);
            step *= 2;
        }
        next
    }
}

// Minimal generating sets whose largest element is `largest`, sizes in
// `edims`, in lexicographic order.
fn visit_partition(q: &CensusQuery, largest: u64, smaller: &[u64], emit: &mut impl FnMut(&[u64])) {
    let max_edim = *q.edims.iter().next_back().expect("nonempty");
    let mut chosen = Vec::with_capacity(max_edim);
    dfs(
        q,
        largest,
        smaller,
        0,
        &mut chosen,
        &Reach::zero(largest),
        0,
        max_edim,
        emit,
    );
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    q: &CensusQuery,
    largest: u64,
    smaller: &[u64],
    start: usize,
    chosen: &mut Vec<u64>,
    reach: &Reach,
    running_gcd: u64,
    max_edim: usize,
    emit: &mut impl FnMut(&[u64]),
) {
    let size = chosen.len() + 1;
    if q.edims.contains(&size) && gcd(running_gcd, largest) == 1 {
        chosen.push(largest);
        emit(chosen);
        chosen.pop();
    }
    if size == max_edim {
        return;
    }
    for (k, &x) in smaller.iter().enumerate().skip(start) {
        if reach.get(x) {
            continue;
        }
        let next = reach.with_generator(x);
        // once the largest element is representable, no superset is minimal
        if next.get(largest) {
            continue;
        }
        chosen.push(x);
        dfs(
            q,
            largest,
            smaller,
            k + 1,
            chosen,
            &next,
            gcd(running_gcd, x),
            max_edim,
            emit,
        );
        chosen.pop();
    }
}

fn partition_semigroups(
    q: &CensusQuery,
    candidates: &[u64],
    index: usize,
) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    visit_partition(q, candidates[index], &candidates[..index], &mut |gens| {
        let s = NumericalSemigroup::with_minimality(gens, Minimality::Require)
            .expect("enumeration yields minimal generating sets with gcd 1");
        out.push(s);
    });
    out
}

/// Every numerical semigroup matching the query's bound, parity and
/// embedding dimensions, ordered by largest generator and then
/// lexicographically.
pub fn enumerate_semigroups(q: &CensusQuery) -> impl Iterator<Item = NumericalSemigroup> + '_ {
    let candidates = q.candidates();
    (0..candidates.len()).flat_map(move |i| partition_semigroups(q, &candidates, i))
}

/// Applies `f` to each partition (all semigroups sharing a largest
/// generator) on `workers` threads; results come back in partition order.
pub fn map_partitions<R, F>(q: &CensusQuery, workers: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(Vec<NumericalSemigroup>) -> R + Sync,
{
    let candidates = q.candidates();
    let run = || {
        (0..candidates.len())
            .into_par_iter()
            .map(|i| f(partition_semigroups(q, &candidates, i)))
            .collect()
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
        .install(run)
}

/// One exported line per counted semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub gens: Vec<u64>,
    #[serde(rename = "F")]
    pub frobenius: i64,
    pub genus: u64,
    #[serde(rename = "PF")]
    pub pseudo_frobenius: Vec<i64>,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub class: ClassLabel,
    pub alpha: Vec<u64>,
    pub all_odd: bool,
}

impl CensusRecord {
    pub fn of(s: &NumericalSemigroup) -> Self {
        Self {
            gens: s.generators().to_vec(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            pseudo_frobenius: s.pseudo_frobenius().to_vec(),
            semigroup_type: s.semigroup_type(),
            class: classify(s).label,
            alpha: s.alpha_exponents(),
            all_odd: s.all_generators_odd(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub edim: usize,
    pub class: ClassLabel,
    pub count: u64,
}

#[derive(Debug, Clone, Default)]
struct Tally {
    counts: BTreeMap<(usize, ClassLabel), u64>,
    population: BTreeMap<usize, u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        for (k, v) in other.population {
            *self.population.entry(k).or_default() += v;
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusTable {
    pub query: CensusQuery,
    pub rows: Vec<CensusRow>,
    /// Number of semigroups enumerated per embedding dimension, counted or
    /// not.
    pub population: BTreeMap<usize, u64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

// The rows the published tables list for each embedding dimension.
fn standard_rows(e: usize) -> Vec<ClassLabel> {
    let mut rows = Vec::new();
    if e >= 4 {
        rows.push(ClassLabel::SymmetricNonCi);
    }
    rows.push(ClassLabel::SymmetricCi);
    if e >= 3 {
        rows.push(ClassLabel::PseudoSymmetric);
    }
    let top = match e {
        ..=3 => 2,
        4 => 3,
        _ => e,
    };
    rows.extend((3..=top).map(ClassLabel::AlmostSymmetric));
    rows
}

impl CensusTable {
    pub fn count(&self, edim: usize, class: ClassLabel) -> u64 {
        self.rows
            .iter()
            .find(|r| r.edim == edim && r.class == class)
            .map_or(0, |r| r.count)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("edim,class,count\n");
        for r in &self.rows {
            writeln!(out, "{},{},{}", r.edim, r.class, r.count).unwrap();
        }
        out
    }

    /// Counts keyed by `e{edim}/{class}`.
    pub fn keyed_counts(&self) -> BTreeMap<String, u64> {
        self.rows
            .iter()
            .map(|r| (format!("e{}/{}", r.edim, r.class), r.count))
            .collect()
    }

    /// Aligned text table followed by the elapsed time.
    pub fn to_table(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|r| r.class.to_string().len())
            .max()
            .unwrap_or(0)
            .max("class".len());
        let parity = match self.query.parity {
            ParityFilter::Odd => "odd",
            ParityFilter::Any => "any",
        };
        let mut out = format!("generators <= {}, parity {parity}\n", self.query.max_gen);
        writeln!(out, "{:>4}  {:<width$}  {:>10}", "edim", "class", "count").unwrap();
        for r in &self.rows {
            writeln!(
                out,
                "{:>4}  {:<width$}  {:>10}",
                r.edim,
                r.class.to_string(),
                r.count
            )
            .unwrap();
        }
        for (e, n) in &self.population {
            writeln!(out, "e={e}: {n} semigroups enumerated").unwrap();
        }
        writeln!(out, "elapsed: {:.2?}", self.elapsed).unwrap();
        out
    }
}

fn tally(
    q: &CensusQuery,
    sgs: &[NumericalSemigroup],
    records: Option<&mut Vec<CensusRecord>>,
) -> Tally {
    let mut t = Tally::default();
    let mut records = records;
    for s in sgs {
        let e = s.embedding_dimension();
        *t.population.entry(e).or_default() += 1;
        let label = classify(s).label;
        if q.selects(label) {
            *t.counts.entry((e, label)).or_default() += 1;
            if let Some(r) = records.as_deref_mut() {
                r.push(CensusRecord::of(s));
            }
        }
    }
    t
}

fn build_table(q: &CensusQuery, t: Tally, elapsed: Duration) -> CensusTable {
    let mut rows = Vec::new();
    for &e in &q.edims {
        let mut labels: Vec<ClassLabel> = standard_rows(e)
            .into_iter()
            .filter(|&l| q.selects(l))
            .collect();
        for &(edim, label) in t.counts.keys() {
            if edim == e && !labels.contains(&label) {
                labels.push(label);
            }
        }
        for label in labels {
            rows.push(CensusRow {
                edim: e,
                class: label,
                count: t.counts.get(&(e, label)).copied().unwrap_or(0),
            });
        }
    }
    let mut population = t.population;
    for &e in &q.edims {
        population.entry(e).or_default();
    }
    CensusTable {
        query: q.clone(),
        rows,
        population,
        elapsed,
    }
}

pub fn census(q: &CensusQuery, workers: usize) -> CensusTable {
    let start = Instant::now();
    let merged = map_partitions(q, workers, |sgs| tally(q, &sgs, None))
        .into_iter()
        .fold(Tally::default(), Tally::merge);
    build_table(q, merged, start.elapsed())
}

/// As [`census`], also returning a record per counted semigroup, sorted by
/// generators.
pub fn census_with_records(q: &CensusQuery, workers: usize) -> (CensusTable, Vec<CensusRecord>) {
    let start = Instant::now();
    let parts = map_partitions(q, workers, |sgs| {
        let mut records = Vec::new();
        let t = tally(q, &sgs, Some(&mut records));
        (t, records)
    });
    let mut merged = Tally::default();
    let mut records = Vec::new();
    for (t, r) in parts {
        merged = merged.merge(t);
        records.extend(r);
    }
    records.sort_by(|a, b| a.gens.cmp(&b.gens));
    (build_table(q, merged, start.elapsed()), records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens_of(q: &CensusQuery) -> Vec<Vec<u64>> {
        enumerate_semigroups(q)
            .map(|s| s.generators().to_vec())
            .collect()
    }

    #[test]
    fn reach_closure() {
        let r = Reach::zero(130).with_generator(7).with_generator(9);
        for x in 0..=130u64 {
            let expected = (0..=x / 7).any(|a| (x - 7 * a) % 9 == 0);
            assert_eq!(r.get(x), expected, "{x}");
        }
    }

    #[test]
    fn small_enumerations() {
        let q = CensusQuery::new(3, [2], ParityFilter::Any).unwrap();
        assert_eq!(gens_of(&q), vec![vec![2, 3]]);

        let q = CensusQuery::new(13, [4], ParityFilter::Any).unwrap();
        let all = gens_of(&q);
        assert!(all.contains(&vec![4, 7, 10, 13]));
        assert!(all.contains(&vec![8, 10, 11, 13]));

        let q = CensusQuery::new(29, [4], ParityFilter::Odd).unwrap();
        let all = gens_of(&q);
        assert!(all.contains(&vec![15, 23, 27, 29]));
        assert!(all.contains(&vec![13, 17, 19, 23]));
    }

    #[test]
    fn query_validation() {
        assert_eq!(
            CensusQuery::new(2, [3], ParityFilter::Odd),
            Err(QueryError::BoundTooSmall(2))
        );
        assert_eq!(
            CensusQuery::new(10, [8], ParityFilter::Odd),
            Err(QueryError::EdimOutOfRange(8))
        );
        assert_eq!(
            CensusQuery::new(10, [], ParityFilter::Odd),
            Err(QueryError::NoEdim)
        );
    }

    #[test]
    fn rows_and_formats() {
        let q = CensusQuery::new(30, [3, 4], ParityFilter::Odd).unwrap();
        let t = census(&q, 2);
        let labels: Vec<String> = t
            .rows
            .iter()
            .map(|r| format!("{}/{}", r.edim, r.class))
            .collect();
        assert_eq!(
            labels,
            [
                "3/symmetric-CI",
                "3/pseudo-symmetric",
                "4/symmetric-nonCI",
                "4/symmetric-CI",
                "4/pseudo-symmetric",
                "4/almost-symmetric-type-3"
            ]
        );
        assert!(t.to_csv().starts_with("edim,class,count\n3,symmetric-CI,"));
        assert!(t.keyed_counts().contains_key("e4/almost-symmetric-type-3"));
        assert!(t.to_table().contains("elapsed"));
    }
}
