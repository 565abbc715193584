//! Numerical semigroups given by generators, backed by an Apéry set.
//!
//! Every query (membership, Frobenius number, genus, pseudo-Frobenius
//! numbers) is answered from the Apéry set with respect to the multiplicity,
//! which is filled once at construction time.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;
use thiserror::Error;

/// Largest multiplicity accepted by the constructors. The Apéry table has one
/// entry per residue class, so this bounds its memory.
pub const MAX_MULTIPLICITY: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("empty generator list")]
    Empty,
    #[error("generators must be positive integers")]
    ZeroGenerator,
    #[error("gcd of the generators is {0}, so the complement is infinite")]
    GcdNotOne(u64),
    #[error("generator {0} is not minimal")]
    NotMinimal(u64),
    #[error("multiplicity {0} exceeds the supported limit")]
    MultiplicityTooLarge(u64),
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

/// Strictly increasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GeneratorList(Vec<u64>);

impl GeneratorList {
    /// Returns the minimal generating set of the monoid generated by `raw`.
    ///
    /// The gcd of `raw` may exceed one; the result then generates a monoid
    /// with the same gcd.
    pub fn minimalize(raw: &[u64]) -> Result<Self, SemigroupError> {
        let sorted = sorted_checked(raw)?;
        let monoid = Submonoid::new(&sorted)?;
        Ok(Self(irreducibles(&sorted, |x| monoid.contains(x))))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }
}

fn sorted_checked(raw: &[u64]) -> Result<Vec<u64>, SemigroupError> {
    if raw.is_empty() {
        return Err(SemigroupError::Empty);
    }
    if raw.contains(&0) {
        return Err(SemigroupError::ZeroGenerator);
    }
    let mut sorted = raw.to_vec();
    sorted.sort_unstable();
    Ok(sorted)
}

/// Keeps the elements of a sorted generating list that are not an earlier
/// generator plus an element of the monoid. Duplicates collapse to one copy.
fn irreducibles(sorted: &[u64], contains: impl Fn(u64) -> bool) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::with_capacity(sorted.len());
    let mut distinct = sorted.to_vec();
    distinct.dedup();
    for &n in &distinct {
        let reducible = distinct
            .iter()
            .take_while(|&&p| p < n)
            .any(|&p| contains(n - p));
        if !reducible {
            out.push(n);
        }
    }
    out
}

/// Least elements of a monoid in each residue class modulo `base`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AperySet {
    base: u64,
    values: Vec<u64>,
}

impl AperySet {
    /// Shortest paths over the residue graph mod `base`, one edge per
    /// generator. Residues that no combination reaches hold `u64::MAX`.
    pub fn with_base(gens: &[u64], base: u64) -> Self {
        assert!(base > 0, "Apéry base must be positive");
        let m = base as usize;
        let steps: Vec<(usize, u64)> = gens
            .iter()
            .filter(|&&g| g % base != 0)
            .map(|&g| ((g % base) as usize, g))
            .collect();
        let mut values = vec![u64::MAX; m];
        values[0] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0u64, 0usize)));
        while let Some(Reverse((dist, r))) = heap.pop() {
            if dist > values[r] {
                continue;
            }
            for &(step, g) in &steps {
                let mut next = r + step;
                if next >= m {
                    next -= m;
                }
                let cand = dist.saturating_add(g);
                if cand < values[next] {
                    values[next] = cand;
                    heap.push(Reverse((cand, next)));
                }
            }
        }
        Self { base, values }
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    #[inline]
    pub fn contains(&self, x: u64) -> bool {
        x >= self.values[(x % self.base) as usize]
    }
}

/// Submonoid of `N` generated by an arbitrary finite list, possibly with
/// gcd greater than one. Membership reduces to the numerical semigroup
/// generated by the list divided by its gcd.
#[derive(Debug, Clone)]
pub struct Submonoid {
    scale: u64,
    apery: AperySet,
}

impl Submonoid {
    pub fn new(gens: &[u64]) -> Result<Self, SemigroupError> {
        let sorted = sorted_checked(gens)?;
        let scale = gcd_all(&sorted);
        let reduced: Vec<u64> = sorted.iter().map(|g| g / scale).collect();
        if reduced[0] > MAX_MULTIPLICITY {
            return Err(SemigroupError::MultiplicityTooLarge(reduced[0]));
        }
        let apery = AperySet::with_base(&reduced, reduced[0]);
        Ok(Self { scale, apery })
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn contains(&self, x: u64) -> bool {
        x.is_multiple_of(self.scale) && self.apery.contains(x / self.scale)
    }
}

/// True iff `x` is a nonnegative integer combination of `gens`.
pub fn submonoid_contains(gens: &[u64], x: u64) -> bool {
    if x == 0 {
        return true;
    }
    match Submonoid::new(gens) {
        Ok(m) => m.contains(x),
        Err(_) => false,
    }
}

/// How [`NumericalSemigroup::with_minimality`] treats redundant generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Minimality {
    /// Drop redundant generators silently.
    Auto,
    /// Reject input that is not already a minimal generating set.
    Require,
}

/// A numerical semigroup with its minimal generators and cached invariants.
///
/// Immutable once built; all caches are filled by the constructor.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    gens: GeneratorList,
    apery: AperySet,
    frobenius: i64,
    genus: u64,
    pf: Vec<i64>,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for NumericalSemigroup {}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, minimalizing the generators.
    pub fn new(raw: &[u64]) -> Result<Self, SemigroupError> {
        Self::with_minimality(raw, Minimality::Auto)
    }

    pub fn with_minimality(raw: &[u64], mode: Minimality) -> Result<Self, SemigroupError> {
        let sorted = sorted_checked(raw)?;
        let g = gcd_all(&sorted);
        if g != 1 {
            return Err(SemigroupError::GcdNotOne(g));
        }
        let m = sorted[0];
        if m > MAX_MULTIPLICITY {
            return Err(SemigroupError::MultiplicityTooLarge(m));
        }
        let apery = AperySet::with_base(&sorted, m);
        let minimal = irreducibles(&sorted, |x| apery.contains(x));
        if mode == Minimality::Require && minimal.len() != sorted.len() {
            let extra = sorted
                .windows(2)
                .find(|w| w[0] == w[1])
                .map(|w| w[0])
                .or_else(|| sorted.iter().copied().find(|n| !minimal.contains(n)))
                .unwrap_or(m);
            return Err(SemigroupError::NotMinimal(extra));
        }
        Ok(Self::from_parts(GeneratorList(minimal), apery))
    }

    fn from_parts(gens: GeneratorList, apery: AperySet) -> Self {
        let m = apery.base();
        let values = apery.values();
        let max = *values.iter().max().expect("Apéry set is nonempty");
        let frobenius = max as i64 - m as i64;
        let sum: u128 = values.iter().map(|&w| w as u128).sum();
        let m128 = m as u128;
        let genus = ((sum - m128 * (m128 - 1) / 2) / m128) as u64;
        let pf = if m == 1 {
            vec![-1]
        } else {
            let mut pf: Vec<i64> = values
                .iter()
                .skip(1)
                .filter(|&&w| {
                    gens.as_slice()
                        .iter()
                        .skip(1)
                        .all(|&n| apery.contains(w + n - m))
                })
                .map(|&w| w as i64 - m as i64)
                .collect();
            pf.sort_unstable();
            pf
        };
        Self {
            gens,
            apery,
            frobenius,
            genus,
            pf,
        }
    }

    pub fn generators(&self) -> &[u64] {
        self.gens.as_slice()
    }

    pub fn generator_list(&self) -> &GeneratorList {
        &self.gens
    }

    pub fn embedding_dimension(&self) -> usize {
        self.gens.len()
    }

    pub fn multiplicity(&self) -> u64 {
        self.gens.as_slice()[0]
    }

    pub fn apery(&self) -> &AperySet {
        &self.apery
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && self.apery.contains(x as u64)
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Positive integers outside the semigroup, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        (1..=self.frobenius.max(0) as u64)
            .filter(|&x| !self.apery.contains(x))
            .collect()
    }

    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.pf
    }

    pub fn semigroup_type(&self) -> usize {
        self.pf.len()
    }

    pub fn all_generators_odd(&self) -> bool {
        self.generators().iter().all(|n| n % 2 == 1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.semigroup_type() == 1
    }

    pub fn is_pseudo_symmetric(&self) -> bool {
        self.pf.len() == 2 && self.frobenius % 2 == 0 && 2 * self.pf[0] == self.frobenius
    }

    /// Checks `2g = F + t` and the pairing `f_i + f_{t-i} = F` of the
    /// pseudo-Frobenius numbers; the two criteria must agree.
    pub fn is_almost_symmetric(&self) -> bool {
        let by_count = self.almost_symmetric_by_count();
        let by_pairing = self.almost_symmetric_by_pairing();
        assert_eq!(
            by_count,
            by_pairing,
            "almost symmetry criteria disagree for {:?}",
            self.generators()
        );
        by_count
    }

    pub fn almost_symmetric_by_count(&self) -> bool {
        2 * self.genus as i64 == self.frobenius + self.pf.len() as i64
    }

    pub fn almost_symmetric_by_pairing(&self) -> bool {
        let t = self.pf.len();
        (0..t - 1).all(|i| self.pf[i] + self.pf[t - 2 - i] == self.frobenius)
    }

    /// `α_i`, the least positive multiple of the i-th minimal generator that
    /// lies in the monoid generated by the other generators. Empty for `N`.
    pub fn alpha_exponents(&self) -> Vec<u64> {
        let gens = self.generators();
        if gens.len() < 2 {
            return Vec::new();
        }
        (0..gens.len())
            .map(|i| {
                let others: Vec<u64> = gens
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &g)| g)
                    .collect();
                let monoid = Submonoid::new(&others).expect("others are positive");
                // n_j * n_i is always a multiple of n_j, so the least other
                // generator caps the search.
                let cap = others[0];
                (1..=cap)
                    .find(|&a| monoid.contains(a * gens[i]))
                    .unwrap_or_else(|| panic!("alpha search for {} exceeded cap {cap}", gens[i]))
            })
            .collect()
    }
}
