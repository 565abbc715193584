//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's arithmetic.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Membership table of the monoid generated by `gens` on `0..len`.
pub fn sieve(gens: &[u64], len: usize) -> Vec<bool> {
    let mut member = vec![false; len];
    member[0] = true;
    for x in 1..len {
        member[x] = gens
            .iter()
            .any(|&g| (g as usize) <= x && member[x - g as usize]);
    }
    member
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn gcd_all(gens: &[u64]) -> u64 {
    gens.iter().fold(0, |acc, &g| gcd(acc, g))
}

/// Invariants computed from the membership table alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForce {
    pub gaps: Vec<u64>,
    pub frobenius: i64,
    pub pseudo_frobenius: Vec<i64>,
    member: Vec<bool>,
}

impl BruteForce {
    /// `gens` must have gcd 1. The Frobenius number is below `m * n_e`, so
    /// the table never needs to be longer.
    pub fn new(gens: &[u64]) -> Self {
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        let len = if sorted[0] == 1 {
            2
        } else {
            let top = sorted[sorted.len() - 1] as usize;
            sorted[0] as usize * top + top + 1
        };
        let member = sieve(&sorted, len);
        let gaps: Vec<u64> = (1..len).filter(|&x| !member[x]).map(|x| x as u64).collect();
        let frobenius = gaps.last().map_or(-1, |&f| f as i64);
        let pseudo_frobenius = if gaps.is_empty() {
            vec![-1]
        } else {
            gaps.iter()
                .filter(|&&f| sorted.iter().all(|&g| member[(f + g) as usize]))
                .map(|&f| f as i64)
                .collect()
        };
        Self {
            gaps,
            frobenius,
            pseudo_frobenius,
            member,
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && (x as usize >= self.member.len() || self.member[x as usize])
    }
}

/// Brute-force minimal generating set: elements not a sum of two nonzero
/// elements.
pub fn minimal_generators(raw: &[u64]) -> Vec<u64> {
    let max = *raw.iter().max().unwrap() as usize;
    let member = sieve(raw, max + 1);
    let mut out: Vec<u64> = raw
        .iter()
        .copied()
        .filter(|&n| !(1..n as usize).any(|a| member[a] && member[n as usize - a]))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Every nonnegative solution of `Σ c_j gens_j = value`, by nested search
/// over the first `len - 1` coefficients.
pub fn factorizations(gens: &[u64], value: u64) -> Vec<Vec<u64>> {
    fn go(gens: &[u64], k: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if k + 1 == gens.len() {
            if left.is_multiple_of(gens[k]) {
                cur.push(left / gens[k]);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for c in 0..=left / gens[k] {
            cur.push(c);
            go(gens, k + 1, left - c * gens[k], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(gens, 0, value, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Cardinality of a minimal presentation, the sum over Betti degrees `s` of
/// one less than the number of connected components of the graph on
/// `{i : s - n_i ∈ S}` with `i ~ j` when `s - n_i - n_j ∈ S`. Betti degrees
/// lie below `F + n_{e-1} + n_e`.
pub fn minimal_presentation_size(gens: &[u64]) -> usize {
    let e = gens.len();
    if e == 1 {
        return 0;
    }
    let bf = BruteForce::new(gens);
    let bound = (bf.frobenius + (gens[e - 2] + gens[e - 1]) as i64) as usize;
    let member = sieve(gens, bound + 1);
    let mut total = 0;
    let mut parent = vec![0usize; e];
    for s in 1..=bound {
        if !member[s] {
            continue;
        }
        let live: Vec<usize> = (0..e)
            .filter(|&i| gens[i] as usize <= s && member[s - gens[i] as usize])
            .collect();
        if live.len() < 2 {
            continue;
        }
        for &i in &live {
            parent[i] = i;
        }
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (a, &i) in live.iter().enumerate() {
            for &j in &live[a + 1..] {
                let need = gens[i] as usize + gens[j] as usize;
                if need <= s && member[s - need] {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
        let roots = live.iter().filter(|&&i| find(&mut parent, i) == i).count();
        total += roots - 1;
    }
    total
}

/// Least `k ≥ 1` with `k n_i` in the monoid of the other generators.
pub fn alpha(gens: &[u64], i: usize) -> u64 {
    let others: Vec<u64> = gens
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &g)| g)
        .collect();
    let cap = others[0] * gens[i];
    let member = sieve(&others, cap as usize + 1);
    (1..).find(|&k| member[(k * gens[i]) as usize]).unwrap()
}

/// Random generator set with gcd 1 and Frobenius number below `max_frobenius`.
pub fn random_semigroup(rng: &mut ChaCha8Rng, max_frobenius: i64) -> Vec<u64> {
    loop {
        let e = rng.gen_range(2..=5);
        let m = rng.gen_range(2..=40u64);
        let mut gens = vec![m];
        for _ in 1..e {
            gens.push(rng.gen_range(m + 1..=m + 80));
        }
        if gcd_all(&gens) != 1 {
            continue;
        }
        let gens = minimal_generators(&gens);
        if BruteForce::new(&gens).frobenius < max_frobenius {
            return gens;
        }
    }
}
