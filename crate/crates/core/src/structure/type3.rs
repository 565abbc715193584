//! Four-generated almost symmetric semigroups of type three.

use serde::Serialize;

use super::{
    permutations, relabel, require_edim, template_holds, BinomialRelation, StructureError,
};
use crate::rf::RfMatrix;
use crate::semigroup::NumericalSemigroup;

type Rows = [[i64; 4]; 4];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Type3Params {
    pub perm: [usize; 4],
    /// Generators in the relabeled order.
    pub gens: [u64; 4],
    pub alpha: [u64; 4],
    /// Smallest pseudo-Frobenius number; the others are `2f` and `3f`.
    pub f: i64,
}

fn shifted(alpha: [u64; 4]) -> [i64; 4] {
    alpha.map(|x| x as i64)
}

fn rf_f_rows(alpha: [u64; 4]) -> Rows {
    let [a1, a2, a3, a4] = shifted(alpha);
    [
        [-1, a2 - 1, 0, 0],
        [0, -1, a3 - 1, 0],
        [0, 0, -1, a4 - 1],
        [a1 - 1, 0, 0, -1],
    ]
}

fn rf_2f_rows(alpha: [u64; 4]) -> Rows {
    let [a1, a2, a3, a4] = shifted(alpha);
    [
        [-1, a2 - 2, a3 - 1, 0],
        [0, -1, a3 - 2, a4 - 1],
        [a1 - 1, 0, -1, a4 - 2],
        [a1 - 2, a2 - 1, 0, -1],
    ]
}

/// `n_i = (α_{i+1}-1)(α_{i+2}-1)α_{i+3} + α_{i+1}`, indices mod 4; `None` on
/// overflow.
pub fn cyclic_generators(alpha: [u64; 4]) -> Option<[u64; 4]> {
    let mut out = [0u64; 4];
    for (i, slot) in out.iter_mut().enumerate() {
        let at = |k: usize| alpha[(i + k) % 4];
        *slot = at(1)
            .checked_sub(1)?
            .checked_mul(at(2).checked_sub(1)?)?
            .checked_mul(at(3))?
            .checked_add(at(1))?;
    }
    Some(out)
}

impl Type3Params {
    pub fn rf_f(&self) -> RfMatrix {
        self.matrix(self.f, rf_f_rows(self.alpha))
    }

    pub fn rf_2f(&self) -> RfMatrix {
        self.matrix(2 * self.f, rf_2f_rows(self.alpha))
    }

    fn matrix(&self, f: i64, rows: Rows) -> RfMatrix {
        RfMatrix::new(f, rows.iter().map(|r| r.to_vec()).collect(), &self.gens)
            .expect("template validated at extraction")
    }

    /// `f = (α_{i+1}-1) n_{i+1} - n_i` for every `i`.
    pub fn cyclic_identities_hold(&self) -> bool {
        (0..4).all(|i| {
            let j = (i + 1) % 4;
            (self.alpha[j] as i64 - 1) * self.gens[j] as i64 - self.gens[i] as i64 == self.f
        })
    }

    /// The six binomials generating the defining ideal, over the relabeled
    /// generators.
    pub fn relations(&self) -> Vec<BinomialRelation> {
        let al = self.alpha;
        let mono = |pairs: &[(usize, u64)]| {
            let mut v = vec![0u64; 4];
            for &(k, e) in pairs {
                v[k] += e;
            }
            v
        };
        let rel = |l: &[(usize, u64)], r: &[(usize, u64)]| BinomialRelation::new(mono(l), mono(r));
        vec![
            rel(&[(0, al[0])], &[(1, al[1] - 1), (3, 1)]),
            rel(&[(1, al[1])], &[(2, al[2] - 1), (0, 1)]),
            rel(&[(2, al[2])], &[(3, al[3] - 1), (1, 1)]),
            rel(&[(3, al[3])], &[(0, al[0] - 1), (2, 1)]),
            rel(&[(0, al[0] - 1), (1, 1)], &[(2, al[2] - 1), (3, 1)]),
            rel(&[(0, 1), (3, al[3] - 1)], &[(1, al[1] - 1), (2, 1)]),
        ]
    }
}

/// Requires `PF(S) = {f, 2f, 3f}`; searches the relabelings for one under
/// which the two canonical matrices are RF-matrices of `f` and `2f`.
pub fn type3_params(s: &NumericalSemigroup) -> Result<Type3Params, StructureError> {
    require_edim(s, 4)?;
    let pf = s.pseudo_frobenius();
    let f = pf[0];
    if pf != [f, 2 * f, 3 * f] {
        return Err(StructureError::PseudoFrobeniusShape(pf.to_vec()));
    }
    let sorted_alpha = s.alpha_exponents();
    permutations::<4>()
        .into_iter()
        .find_map(|perm| {
            let alpha = relabel(&sorted_alpha, &perm);
            (template_holds(s, f, &perm, &rf_f_rows(alpha))
                && template_holds(s, 2 * f, &perm, &rf_2f_rows(alpha)))
            .then(|| Type3Params {
                perm,
                gens: relabel(s.generators(), &perm),
                alpha,
                f,
            })
        })
        .ok_or(StructureError::NoType3Labeling)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UfCase {
    #[serde(rename = "UF1")]
    Uf1,
    #[serde(rename = "UF2")]
    Uf2,
    #[serde(rename = "nUF1")]
    NUf1,
    #[serde(rename = "nUF2")]
    NUf2,
}

impl std::fmt::Display for UfCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            UfCase::Uf1 => "UF1",
            UfCase::Uf2 => "UF2",
            UfCase::NUf1 => "nUF1",
            UfCase::NUf2 => "nUF2",
        })
    }
}

fn exact_div(num: i64, den: i64) -> Option<i64> {
    (num >= 0 && num % den == 0).then(|| num / den)
}

struct TemplateInput<'a> {
    s: &'a NumericalSemigroup,
    perm: [usize; 4],
    n: [i64; 4],
    alpha: [i64; 4],
    f: i64,
    g: i64,
}

impl TemplateInput<'_> {
    fn pair(&self, rf_f: &Rows, rf_g: &Rows) -> bool {
        template_holds(self.s, self.f, &self.perm, rf_f)
            && template_holds(self.s, self.g, &self.perm, rf_g)
    }

    fn uf1(&self) -> bool {
        let [a1, a2, _, a4] = self.alpha;
        let n = self.n;
        let rf_f = [
            [-1, a2 - 1, 0, 0],
            [a1 - 1, -1, 0, 0],
            [a1 - 2, 0, -1, 1],
            [0, a2 - 2, 1, -1],
        ];
        // the two wildcard rows share b41 n1 + b32 n2 = f' + n1 + n3, so
        // they are searched rather than solved
        let total = self.g + n[0] + n[2];
        (1..=total / n[0]).any(|b41| {
            let Some(b32) = exact_div(total - b41 * n[0], n[1]) else {
                return false;
            };
            let rf_g = [
                [-1, 0, 0, a4 - 1],
                [0, -1, 1, a4 - 2],
                [b41 - 1, b32, -1, 0],
                [b41, b32 - 1, 0, -1],
            ];
            self.pair(&rf_f, &rf_g)
        })
    }

    fn uf2(&self) -> bool {
        let [_, a2, a3, a4] = self.alpha;
        let n = self.n;
        let Some(a21) = exact_div(self.f + n[1] - (a3 - 2) * n[2], n[0]) else {
            return false;
        };
        let Some(b41) = exact_div(self.g + n[2], n[0]).map(|x| x - a21) else {
            return false;
        };
        let rf_f = [
            [-1, a2 - 1, 0, 0],
            [a21, -1, a3 - 2, 0],
            [a21 - 1, 0, -1, 1],
            [0, a2 - 2, a3 - 1, -1],
        ];
        let rf_g = [
            [-1, 0, 0, a4 - 1],
            [0, -1, a3 - 1, a4 - 2],
            [a21 + b41, 0, -1, 0],
            [b41, a2 - 1, 0, -1],
        ];
        self.pair(&rf_f, &rf_g)
    }

    fn nuf1(&self) -> bool {
        let [a1, a2, a3, a4] = self.alpha;
        let rf_f = [
            [-1, 0, 0, a4 - 1],
            [0, -1, 1, a4 - 2],
            [0, a2 - 1, -1, 0],
            [1, a2 - 2, 0, -1],
        ];
        let rf_g = [
            [-1, 1, a3 - 2, 0],
            [a1 - 1, -1, 0, 0],
            [a1 - 2, 0, -1, 1],
            [0, 0, a3 - 1, -1],
        ];
        self.pair(&rf_f, &rf_g)
    }

    fn nuf2(&self) -> bool {
        let alpha = self.alpha.map(|x| x as u64);
        self.pair(&rf_f_rows(alpha), &rf_2f_rows(alpha))
    }
}

/// First template pair, in the order nUF2, nUF1, UF2, UF1, that the
/// RF-matrices of the two smaller pseudo-Frobenius numbers fit under some
/// relabeling and some assignment of those numbers to the two templates.
pub fn uf_case(s: &NumericalSemigroup) -> Result<UfCase, StructureError> {
    require_edim(s, 4)?;
    if !(s.is_almost_symmetric() && s.semigroup_type() == 3) {
        return Err(StructureError::Precondition(
            "almost symmetric of type three",
        ));
    }
    let pf = s.pseudo_frobenius();
    let sorted_alpha = s.alpha_exponents();
    let inputs: Vec<TemplateInput> = permutations::<4>()
        .into_iter()
        .flat_map(|perm| {
            let n = relabel(s.generators(), &perm).map(|x| x as i64);
            let alpha = relabel(&sorted_alpha, &perm).map(|x| x as i64);
            [(pf[0], pf[1]), (pf[1], pf[0])].map(|(f, g)| TemplateInput {
                s,
                perm,
                n,
                alpha,
                f,
                g,
            })
        })
        .collect();
    [UfCase::NUf2, UfCase::NUf1, UfCase::Uf2, UfCase::Uf1]
        .into_iter()
        .find(|case| {
            inputs.iter().any(|input| match case {
                UfCase::NUf2 => input.nuf2(),
                UfCase::NUf1 => input.nuf1(),
                UfCase::Uf2 => input.uf2(),
                UfCase::Uf1 => input.uf1(),
            })
        })
        .ok_or(StructureError::NoUfTemplate)
}
