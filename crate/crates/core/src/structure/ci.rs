use serde::Serialize;

use crate::semigroup::{gcd_all, NumericalSemigroup, Submonoid};

/// A split of the minimal generators into `A_1 ∪ A_2` such that the
/// semigroup is the gluing `d_1 <A_1/d_1> + d_2 <A_2/d_2>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gluing {
    pub left: Vec<u64>,
    pub right: Vec<u64>,
    pub left_gcd: u64,
    pub right_gcd: u64,
}

/// Complete intersection test by recursive gluing decomposition.
pub fn is_complete_intersection(s: &NumericalSemigroup) -> bool {
    is_ci(s.generators())
}

/// Every gluing decomposition of the minimal generators, whether or not the
/// two factors are themselves complete intersections.
pub fn gluings(s: &NumericalSemigroup) -> Vec<Gluing> {
    let gens = s.generators();
    splits(gens).filter_map(|(l, r)| glue(&l, &r)).collect()
}

// `gens` is the minimal generating set of a numerical semigroup.
fn is_ci(gens: &[u64]) -> bool {
    if gens.len() == 1 {
        return true;
    }
    splits(gens).any(|(l, r)| {
        glue(&l, &r).is_some_and(|g| {
            let l: Vec<u64> = g.left.iter().map(|x| x / g.left_gcd).collect();
            let r: Vec<u64> = g.right.iter().map(|x| x / g.right_gcd).collect();
            is_ci(&l) && is_ci(&r)
        })
    })
}

// Unordered bipartitions into two nonempty blocks; the first generator always
// lands in the left block.
fn splits(gens: &[u64]) -> impl Iterator<Item = (Vec<u64>, Vec<u64>)> + '_ {
    let e = gens.len();
    let full = (1u32 << e) - 1;
    (0..full)
        .filter(move |&mask| mask & 1 == 1 && mask != full)
        .map(move |mask| {
            let (mut l, mut r) = (Vec::new(), Vec::new());
            for (k, &g) in gens.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    l.push(g);
                } else {
                    r.push(g);
                }
            }
            (l, r)
        })
}

fn glue(left: &[u64], right: &[u64]) -> Option<Gluing> {
    let d1 = gcd_all(left);
    let d2 = gcd_all(right);
    if crate::semigroup::gcd(d1, d2) != 1 {
        return None;
    }
    let l: Vec<u64> = left.iter().map(|x| x / d1).collect();
    let r: Vec<u64> = right.iter().map(|x| x / d2).collect();
    // d_1 must be a non-generator element of <A_2/d_2>, and symmetrically
    let member_not_generator = |d: u64, block: &[u64]| {
        !block.contains(&d) && Submonoid::new(block).is_ok_and(|m| m.contains(d))
    };
    if member_not_generator(d1, &r) && member_not_generator(d2, &l) {
        Some(Gluing {
            left: left.to_vec(),
            right: right.to_vec(),
            left_gcd: d1,
            right_gcd: d2,
        })
    } else {
        None
    }
}
