//! Forward constructions from structure parameters.

use thiserror::Error;

use crate::semigroup::{gcd_all, Minimality, NumericalSemigroup, SemigroupError};
use crate::structure::{
    cyclic_generators, is_complete_intersection, BresinskyParams, Herzog3Params, Type3Params,
};

/// Largest generator any builder will produce.
pub const GENERATOR_LIMIT: u64 = 1 << 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("gcd(n_i)={0}")]
    GcdNotOne(u64),
    #[error("generators exceed 2^40")]
    Overflow,
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("postcondition failed: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    /// Re-check the structural claims on every result.
    pub verify: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self { verify: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Built<P> {
    pub semigroup: NumericalSemigroup,
    /// Generators in the order the formula produced them.
    pub formula_order: Vec<u64>,
    pub params: P,
}

fn postcondition(ok: bool, what: &str) -> Result<(), BuildError> {
    if ok {
        Ok(())
    } else {
        Err(BuildError::Postcondition(what.to_owned()))
    }
}

fn check_limit(gens: &[u64]) -> Result<(), BuildError> {
    if gens.iter().any(|&g| g > GENERATOR_LIMIT) {
        Err(BuildError::Overflow)
    } else {
        Ok(())
    }
}

fn check_distinct(gens: &[u64]) -> Result<(), BuildError> {
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() == gens.len() {
        Ok(())
    } else {
        Err(BuildError::Degenerate(format!(
            "generators {gens:?} coincide"
        )))
    }
}

fn check_gcd(gens: &[u64]) -> Result<(), BuildError> {
    match gcd_all(gens) {
        1 => Ok(()),
        d => Err(BuildError::GcdNotOne(d)),
    }
}

// Builds with minimality required; a redundant generator means the
// parameters were degenerate for this family.
fn minimal_semigroup(gens: &[u64]) -> Result<NumericalSemigroup, BuildError> {
    NumericalSemigroup::with_minimality(gens, Minimality::Require).map_err(|e| match e {
        SemigroupError::NotMinimal(n) => {
            BuildError::Degenerate(format!("generator {n} is redundant in {gens:?}"))
        }
        SemigroupError::GcdNotOne(d) => BuildError::GcdNotOne(d),
        other => BuildError::Semigroup(other),
    })
}

// Position of each formula-order generator among the sorted generators.
fn sorting_perm<const N: usize>(formula: &[u64; N], sorted: &[u64]) -> [usize; N] {
    std::array::from_fn(|k| {
        sorted
            .iter()
            .position(|&g| g == formula[k])
            .expect("generator present")
    })
}

/// Symmetric, non-complete-intersection semigroup from Bresinsky's
/// parameters. Only positivity of the `a_i` and `b_i` is required.
pub fn build_symmetric_bresinsky(
    a: [u64; 4],
    b: [u64; 4],
    opts: BuildOptions,
) -> Result<Built<BresinskyParams>, BuildError> {
    for (name, v) in [("a", a), ("b", b)] {
        if let Some(i) = v.iter().position(|&x| x == 0) {
            return Err(BuildError::InvalidParameter(format!(
                "{name}_{} must be at least 1",
                i + 1
            )));
        }
    }
    let gens = crate::structure::bresinsky_generators(&a, &b).ok_or(BuildError::Overflow)?;
    check_limit(&gens)?;
    check_distinct(&gens)?;
    check_gcd(&gens)?;
    let s = minimal_semigroup(&gens)?;
    let params = BresinskyParams {
        perm: sorting_perm(&gens, s.generators()),
        gens,
        alpha: std::array::from_fn(|i| a[i] + b[i]),
        a,
        b,
    };
    if opts.verify {
        postcondition(s.embedding_dimension() == 4, "embedding dimension 4")?;
        postcondition(s.is_symmetric(), "symmetric")?;
        postcondition(!is_complete_intersection(&s), "not a complete intersection")?;
        postcondition(params.satisfies_identities(), "degree identities")?;
    }
    Ok(Built {
        semigroup: s,
        formula_order: gens.to_vec(),
        params,
    })
}

/// Three-generated pseudo-symmetric semigroup from the exponents of its
/// Herzog matrix.
pub fn build_pseudo_sym3(
    alpha: u64,
    beta: u64,
    gamma: u64,
    opts: BuildOptions,
) -> Result<Built<Herzog3Params>, BuildError> {
    if alpha == 0 || beta == 0 || gamma == 0 {
        return Err(BuildError::InvalidParameter(
            "exponents must be at least 1".into(),
        ));
    }
    let params = Herzog3Params { alpha, beta, gamma };
    let gens = params.generators().ok_or(BuildError::Overflow)?;
    check_limit(&gens)?;
    check_distinct(&gens)?;
    check_gcd(&gens)?;
    let s = minimal_semigroup(&gens)?;
    if opts.verify {
        postcondition(s.embedding_dimension() == 3, "embedding dimension 3")?;
        postcondition(s.is_pseudo_symmetric(), "pseudo-symmetric")?;
        postcondition(
            s.all_generators_odd() == params.parity_uniform(),
            "generator parity matches exponent parity",
        )?;
        for m in params.minors() {
            postcondition(m.is_homogeneous(&gens), "homogeneous minors")?;
        }
    }
    Ok(Built {
        semigroup: s,
        formula_order: gens.to_vec(),
        params,
    })
}

/// Almost symmetric semigroup of type three with odd generators, from four
/// odd exponents at least 3.
pub fn build_type3(alpha: [u64; 4], opts: BuildOptions) -> Result<Built<Type3Params>, BuildError> {
    if let Some(i) = alpha.iter().position(|&x| x < 3 || x % 2 == 0) {
        return Err(BuildError::InvalidParameter(format!(
            "alpha_{} = {} must be odd and at least 3",
            i + 1,
            alpha[i]
        )));
    }
    let gens = cyclic_generators(alpha).ok_or(BuildError::Overflow)?;
    check_limit(&gens)?;
    check_gcd(&gens)?;
    check_distinct(&gens)?;
    let s = minimal_semigroup(&gens)?;
    let f = (alpha[1] as i64 - 1) * gens[1] as i64 - gens[0] as i64;
    let params = Type3Params {
        perm: sorting_perm(&gens, s.generators()),
        gens,
        alpha,
        f,
    };
    if opts.verify {
        postcondition(s.embedding_dimension() == 4, "embedding dimension 4")?;
        postcondition(s.all_generators_odd(), "all generators odd")?;
        postcondition(s.is_almost_symmetric(), "almost symmetric")?;
        postcondition(
            s.pseudo_frobenius() == [f, 2 * f, 3 * f],
            "PF(S) = {f, 2f, 3f}",
        )?;
        postcondition(params.cyclic_identities_hold(), "cyclic identities for f")?;
    }
    Ok(Built {
        semigroup: s,
        formula_order: gens.to_vec(),
        params,
    })
}

/// `S_n = <15, 15+2^{n+2}, 15+2^{n+2}+2^{n+1}, 15+2^{n+2}+2^{n+1}+2^n>`,
/// which is the type-three construction at `α = (3+2^n, 3, 3, 3)`.
pub fn family_sn(n: u32, opts: BuildOptions) -> Result<Built<Type3Params>, BuildError> {
    if n == 0 {
        return Err(BuildError::InvalidParameter("n must be at least 1".into()));
    }
    if n + 3 >= 40 {
        return Err(BuildError::Overflow);
    }
    let (p0, p1, p2) = (1u64 << n, 1u64 << (n + 1), 1u64 << (n + 2));
    let formula = vec![15, 15 + p2, 15 + p2 + p1, 15 + p2 + p1 + p0];
    let built = build_type3([3 + p0, 3, 3, 3], opts)?;
    if opts.verify {
        postcondition(
            built.semigroup.generators() == formula,
            "agrees with the type-three construction",
        )?;
    }
    Ok(Built {
        formula_order: formula,
        ..built
    })
}
