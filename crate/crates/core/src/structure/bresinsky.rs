//! Four-generated symmetric semigroups that are not complete intersections.
//!
//! Indices are cyclic mod 4: with `α_i = a_i + b_i`,
//!
//! ```text
//! n_1 = α_2 α_3 a_4 + a_2 b_3 b_4    n_2 = α_3 α_4 a_1 + a_3 b_4 b_1
//! n_3 = α_1 α_4 a_2 + a_4 b_1 b_2    n_4 = α_1 α_2 a_3 + a_1 b_2 b_3
//! ```

use serde::Serialize;

use super::{permutations, relabel, require_edim, BinomialRelation, StructureError};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BresinskyParams {
    /// `perm[k]` is the index, among the sorted generators, of `n_{k+1}`.
    pub perm: [usize; 4],
    /// Generators in the relabeled order.
    pub gens: [u64; 4],
    pub alpha: [u64; 4],
    pub a: [u64; 4],
    pub b: [u64; 4],
}

/// Generator formula in terms of `a` and `b`; `None` on overflow.
pub fn bresinsky_generators(a: &[u64; 4], b: &[u64; 4]) -> Option<[u64; 4]> {
    let mut alpha = [0u64; 4];
    for i in 0..4 {
        alpha[i] = a[i].checked_add(b[i])?;
    }
    let mut out = [0u64; 4];
    for (i, slot) in out.iter_mut().enumerate() {
        let at = |k: usize| (i + k) % 4;
        let p = alpha[at(1)]
            .checked_mul(alpha[at(2)])?
            .checked_mul(a[at(3)])?;
        let q = a[at(1)].checked_mul(b[at(2)])?.checked_mul(b[at(3)])?;
        *slot = p.checked_add(q)?;
    }
    Some(out)
}

impl BresinskyParams {
    pub fn satisfies_identities(&self) -> bool {
        (0..4).all(|i| self.a[i] + self.b[i] == self.alpha[i])
            && bresinsky_generators(&self.a, &self.b) == Some(self.gens)
    }

    /// `f_1, …, f_5` as exponent vectors over the relabeled generators.
    pub fn relations(&self) -> Vec<BinomialRelation> {
        let (al, a, b) = (self.alpha, self.a, self.b);
        let mono = |pairs: &[(usize, u64)]| {
            let mut v = vec![0u64; 4];
            for &(k, e) in pairs {
                v[k] += e;
            }
            v
        };
        vec![
            BinomialRelation::new(mono(&[(0, al[0])]), mono(&[(2, b[2]), (3, a[3])])),
            BinomialRelation::new(mono(&[(1, al[1])]), mono(&[(0, a[0]), (3, b[3])])),
            BinomialRelation::new(mono(&[(2, al[2])]), mono(&[(0, b[0]), (1, a[1])])),
            BinomialRelation::new(mono(&[(3, al[3])]), mono(&[(1, b[1]), (2, a[2])])),
            BinomialRelation::new(mono(&[(0, a[0]), (2, a[2])]), mono(&[(1, a[1]), (3, a[3])])),
        ]
    }
}

/// All `(a, b)` with positive entries, `a_i + b_i = α_i` and the generator
/// formula holding for the generators `n` in the given order.
///
/// The degree identities `α_1 n_1 = b_3 n_3 + a_4 n_4`, `α_4 n_4 = b_2 n_2 +
/// a_3 n_3`, `α_3 n_3 = b_1 n_1 + a_2 n_2` and `α_2 n_2 = a_1 n_1 + b_4 n_4`
/// follow from the formula, so `a_4` alone determines a candidate.
pub fn solve_bresinsky(n: [u64; 4], alpha: [u64; 4]) -> Vec<([u64; 4], [u64; 4])> {
    let prod = |x: u64, y: u64| x as u128 * y as u128;
    let exact = |total: u128, minus: u128, div: u64| -> Option<u64> {
        let rest = total.checked_sub(minus)?;
        let div = div as u128;
        (rest % div == 0).then(|| (rest / div) as u64)
    };
    let split = |alpha: u64, b: u64| (b >= 1 && b < alpha).then(|| alpha - b);
    let mut out = Vec::new();
    for a4 in 1..alpha[3] {
        let solve = || -> Option<([u64; 4], [u64; 4])> {
            let b3 = exact(prod(alpha[0], n[0]), prod(a4, n[3]), n[2])?;
            let a3 = split(alpha[2], b3)?;
            let b2 = exact(prod(alpha[3], n[3]), prod(a3, n[2]), n[1])?;
            let a2 = split(alpha[1], b2)?;
            let b1 = exact(prod(alpha[2], n[2]), prod(a2, n[1]), n[0])?;
            let a1 = split(alpha[0], b1)?;
            let b4 = exact(prod(alpha[1], n[1]), prod(a1, n[0]), n[3])?;
            (a4 + b4 == alpha[3]).then_some(())?;
            let a = [a1, a2, a3, a4];
            let b = [b1, b2, b3, b4];
            (bresinsky_generators(&a, &b)? == n).then_some((a, b))
        };
        if let Some(sol) = solve() {
            out.push(sol);
        }
    }
    out
}

/// Every relabeling and parameter set, relabelings in lexicographic order.
pub fn bresinsky_solutions(s: &NumericalSemigroup) -> Result<Vec<BresinskyParams>, StructureError> {
    require_edim(s, 4)?;
    let sorted_alpha = s.alpha_exponents();
    let mut out = Vec::new();
    for perm in permutations::<4>() {
        let gens = relabel(s.generators(), &perm);
        let alpha = relabel(&sorted_alpha, &perm);
        for (a, b) in solve_bresinsky(gens, alpha) {
            out.push(BresinskyParams {
                perm,
                gens,
                alpha,
                a,
                b,
            });
        }
    }
    Ok(out)
}

/// The first solution in relabeling order, then ascending `a_4`.
pub fn bresinsky_params(s: &NumericalSemigroup) -> Result<BresinskyParams, StructureError> {
    bresinsky_solutions(s)?
        .into_iter()
        .next()
        .ok_or(StructureError::NoBresinskyParams)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ParityCase {
    /// Every `α_i` and every `a_i` odd.
    A,
    /// Exactly one even `α_{i0}`; `a_{i0}` and `a_{i0-1}` odd, the other two even.
    B,
    /// Every `α_i` even and every `a_i` odd.
    C,
    None,
}

pub fn symmetric_parity_case(p: &BresinskyParams) -> ParityCase {
    let odd = |x: u64| x % 2 == 1;
    let even_alpha: Vec<usize> = (0..4).filter(|&i| !odd(p.alpha[i])).collect();
    let a_all_odd = p.a.iter().all(|&x| odd(x));
    match even_alpha.as_slice() {
        [] if a_all_odd => ParityCase::A,
        [_, _, _, _] if a_all_odd => ParityCase::C,
        &[i0] => {
            let prev = (i0 + 3) % 4;
            let matches = (0..4).all(|i| odd(p.a[i]) == (i == i0 || i == prev));
            if matches {
                ParityCase::B
            } else {
                ParityCase::None
            }
        }
        _ => ParityCase::None,
    }
}
