use serde::Serialize;

use super::{permutations, relabel, require_edim, template_holds, StructureError};
use crate::rf::{rf_rows, row_parity, Parity};
use crate::semigroup::NumericalSemigroup;

/// Canonical shape of the RF-matrix of `F(S)/2` for a four-generated
/// pseudo-symmetric semigroup:
///
/// ```text
/// | -1     α_2-1  0      0     |
/// | 0      -1     α_3-1  0     |
/// | α_1-1  0      -1     α_4-1 |
/// | α_1-1  a      0      -1    |
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PseudoSym4Params {
    pub perm: [usize; 4],
    pub gens: [u64; 4],
    pub alpha: [u64; 4],
    pub a: u64,
    /// The matrix above, in the relabeled order.
    pub rows: [[i64; 4]; 4],
}

fn template(alpha: [u64; 4], a: u64) -> [[i64; 4]; 4] {
    let [a1, a2, a3, a4] = alpha.map(|x| x as i64 - 1);
    let a = a as i64;
    [
        [-1, a2, 0, 0],
        [0, -1, a3, 0],
        [a1, 0, -1, a4],
        [a1, a, 0, -1],
    ]
}

pub fn pseudo_sym4_params(s: &NumericalSemigroup) -> Result<PseudoSym4Params, StructureError> {
    require_edim(s, 4)?;
    if !s.is_pseudo_symmetric() {
        return Err(StructureError::Precondition("pseudo-symmetric"));
    }
    let half = s.frobenius() / 2;
    let sorted_alpha = s.alpha_exponents();
    for perm in permutations::<4>() {
        let gens = relabel(s.generators(), &perm);
        let alpha = relabel(&sorted_alpha, &perm);
        let n = gens.map(|g| g as i64);
        // last row: (α_1-1) n_1 + a n_2 - n_4 = F/2
        let rest = half + n[3] - (alpha[0] as i64 - 1) * n[0];
        if rest < 0 || rest % n[1] != 0 {
            continue;
        }
        let a = (rest / n[1]) as u64;
        let rows = template(alpha, a);
        if template_holds(s, half, &perm, &rows) {
            return Ok(PseudoSym4Params {
                perm,
                gens,
                alpha,
                a,
                rows,
            });
        }
    }
    Err(StructureError::NoPseudoSymmetricLabeling)
}

/// Both sides of the parity criterion for pseudo-symmetric semigroups with
/// four generators, evaluated separately: all generators odd, against every
/// row of every RF-matrix of `F/2` having the parity of `F/2`. Returns
/// whether the two sides agree.
pub fn pseudo_sym_parity_check(s: &NumericalSemigroup) -> Result<bool, StructureError> {
    require_edim(s, 4)?;
    if !s.is_pseudo_symmetric() {
        return Err(StructureError::Precondition("pseudo-symmetric"));
    }
    let half = s.frobenius() / 2;
    let target = Parity::of(half);
    let mut rows_match = true;
    for i in 0..4 {
        rows_match &= rf_rows(s, half, i)?.iter().all(|r| row_parity(r) == target);
    }
    Ok(s.all_generators_odd() == rows_match)
}
