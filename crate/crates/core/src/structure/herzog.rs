use serde::Serialize;

use super::BinomialRelation;

/// Exponents of the 2×3 matrix
///
/// ```text
/// | x1^α  x2^β  x3^γ |
/// | x2    x3    x1   |
/// ```
///
/// whose maximal minors generate the defining ideal of a three-generated
/// pseudo-symmetric semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Herzog3Params {
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
}

impl Herzog3Params {
    /// `n_1 = (β+1)γ + 1`, `n_2 = (γ+1)α + 1`, `n_3 = (α+1)β + 1`; `None` on
    /// overflow.
    pub fn generators(&self) -> Option<[u64; 3]> {
        let f = |x: u64, y: u64| x.checked_add(1)?.checked_mul(y)?.checked_add(1);
        Some([
            f(self.beta, self.gamma)?,
            f(self.gamma, self.alpha)?,
            f(self.alpha, self.beta)?,
        ])
    }

    /// The three 2×2 minors, in the order of the generator formula.
    pub fn minors(&self) -> Vec<BinomialRelation> {
        let (a, b, c) = (self.alpha, self.beta, self.gamma);
        vec![
            BinomialRelation::new(vec![a + 1, 0, 0], vec![0, 1, c]),
            BinomialRelation::new(vec![0, b + 1, 0], vec![a, 0, 1]),
            BinomialRelation::new(vec![0, 0, c + 1], vec![1, b, 0]),
        ]
    }

    /// All three odd, or all three even.
    pub fn parity_uniform(&self) -> bool {
        let p = self.alpha % 2;
        self.beta % 2 == p && self.gamma % 2 == p
    }
}
