//! Herzog exponents of a non-symmetric three-generated semigroup.
//!
//! With generators labelled `n₁, n₂, n₃` (playing `X, Y, Z`), each
//! `rᵢ = min{k > 0 : k·nᵢ ∈ ⟨nⱼ, nₖ⟩}` has a unique representation
//! `rᵢ nᵢ = λᵢⱼ nⱼ + λᵢₖ nₖ` with both coefficients positive, and the
//! presentation ideal is generated by the 2×2 minors of
//!
//! ```text
//! | X^a1  Y^b2 |
//! | Y^b1  Z^c2 |
//! | Z^c1  X^a2 |
//! ```
//!
//! with `a1 = λ₂₁, a2 = λ₃₁, b1 = λ₃₂, b2 = λ₁₂, c1 = λ₁₃, c2 = λ₂₃`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HerzogData {
    /// Generators in the roles of `X, Y, Z`.
    pub ordering: [i64; 3],
    pub a1: i64,
    pub a2: i64,
    pub b1: i64,
    pub b2: i64,
    pub c1: i64,
    pub c2: i64,
    /// `a1 ≤ a2`, `b2 ≤ b1` and `c1 ≤ c2`.
    pub hypothesis: bool,
    /// `a1·b2·c1`, the bideg predicted when the hypothesis holds.
    pub predicted_bideg: i64,
    /// `[a1·b1·c1, a2·b2·c2]`.
    pub cdeg_candidates: [i64; 2],
}

impl HerzogData {
    /// The three binomial relations, `(lhs exponent, rhs monomial)` per variable,
    /// written as exponent vectors over `(X, Y, Z)`.
    pub fn relations(&self) -> [([i64; 3], [i64; 3]); 3] {
        [
            ([self.a1 + self.a2, 0, 0], [0, self.b2, self.c1]),
            ([0, self.b1 + self.b2, 0], [self.a1, 0, self.c2]),
            ([0, 0, self.c1 + self.c2], [self.a2, self.b1, 0]),
        ]
    }

    /// Both sides of every relation have the same degree.
    pub fn relations_hold(&self) -> bool {
        let w = self.ordering;
        let deg = |e: [i64; 3]| e[0] * w[0] + e[1] * w[1] + e[2] * w[2];
        self.relations().iter().all(|(l, r)| deg(*l) == deg(*r))
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HerzogReport {
    /// Data for the ascending labelling `n₁ < n₂ < n₃`.
    pub ascending: HerzogData,
    /// All six labellings, in lexicographic order of the index permutation.
    pub orderings: Vec<HerzogData>,
    /// `rᵢ` for the ascending labelling.
    pub minimal_multiples: [i64; 3],
}

impl HerzogReport {
    /// Labellings satisfying the inequality hypothesis.
    pub fn applicable(&self) -> impl Iterator<Item = &HerzogData> {
        self.orderings.iter().filter(|d| d.hypothesis)
    }
}

/// Least `k > 0` with `k·n` representable by `p, q`, and its unique
/// representation with positive coefficients.
fn minimal_relation(n: i64, p: i64, q: i64) -> Result<(i64, i64, i64)> {
    let representable = |v: i64| (0..=v / p).any(|i| (v - i * p) % q == 0);
    let r = (1..)
        .find(|&k| representable(k * n))
        .expect("k = p is always representable");
    let target = r * n;
    let positive: Vec<(i64, i64)> = (1..=target / p)
        .filter_map(|i| {
            let rest = target - i * p;
            (rest > 0 && rest % q == 0).then_some((i, rest / q))
        })
        .collect();
    match positive.as_slice() {
        [(i, j)] => Ok((r, *i, *j)),
        [] => Err(Error::SymmetricSemigroup),
        _ => Err(Error::InternalInvariantViolation(format!(
            "{r}·{n} has {} positive representations by {p},{q}",
            positive.len()
        ))),
    }
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

pub fn herzog_exponents(h: &NumericalSemigroup) -> Result<HerzogReport> {
    let n = h.generators();
    if n.len() != 3 {
        return Err(Error::NotThreeGenerated(n.len()));
    }
    if h.is_symmetric() {
        return Err(Error::SymmetricSemigroup);
    }
    // lambda[i][j]: coefficient of n_j in the minimal relation of n_i.
    let mut lambda = [[0i64; 3]; 3];
    let mut multiples = [0i64; 3];
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let (r, lj, lk) = minimal_relation(n[i], n[j], n[k])?;
        multiples[i] = r;
        lambda[i][j] = lj;
        lambda[i][k] = lk;
    }
    let orderings: Vec<HerzogData> = PERMUTATIONS
        .iter()
        .map(|&[x, y, z]| {
            let (a1, a2) = (lambda[y][x], lambda[z][x]);
            let (b1, b2) = (lambda[z][y], lambda[x][y]);
            let (c1, c2) = (lambda[x][z], lambda[y][z]);
            HerzogData {
                ordering: [n[x], n[y], n[z]],
                a1,
                a2,
                b1,
                b2,
                c1,
                c2,
                hypothesis: a1 <= a2 && b2 <= b1 && c1 <= c2,
                predicted_bideg: a1 * b2 * c1,
                cdeg_candidates: [a1 * b1 * c1, a2 * b2 * c2],
            }
        })
        .collect();
    for d in &orderings {
        if !d.relations_hold() {
            return Err(Error::InternalInvariantViolation(format!(
                "Herzog relations fail for ordering {:?}",
                d.ordering
            )));
        }
    }
    Ok(HerzogReport {
        ascending: orderings[0].clone(),
        orderings,
        minimal_multiples: multiples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    fn exps(d: &HerzogData) -> [i64; 6] {
        [d.a1, d.a2, d.b1, d.b2, d.c1, d.c2]
    }

    #[test]
    fn worked_example() {
        let r = herzog_exponents(&ns(&[5, 7, 9])).unwrap();
        assert_eq!(exps(&r.ascending), [1, 4, 1, 1, 2, 1]);
        assert!(!r.ascending.hypothesis);
        assert_eq!(r.minimal_multiples, [5, 2, 3]);
        // X^5 − Y Z^2, Y^2 − X Z, Z^3 − X^4 Y
        assert_eq!(
            r.ascending.relations(),
            [([5, 0, 0], [0, 1, 2]), ([0, 2, 0], [1, 0, 1]), ([0, 0, 3], [4, 1, 0])]
        );
        assert_eq!(r.ascending.cdeg_candidates, [2, 4]);
        // The labelling (Y, X, Z) = (5, 7, 9) and its cyclic partner satisfy
        // the inequalities and predict bideg 1.
        let applicable: Vec<_> = r.applicable().map(|d| (d.ordering, d.predicted_bideg)).collect();
        assert_eq!(applicable, vec![([7, 5, 9], 1), ([7, 9, 5], 1)]);
    }

    #[test]
    fn three_four_five() {
        let r = herzog_exponents(&ns(&[3, 4, 5])).unwrap();
        assert_eq!(exps(&r.ascending), [1, 2, 1, 1, 1, 1]);
        assert_eq!(r.minimal_multiples, [3, 2, 2]);
        assert!(r.ascending.hypothesis);
        assert_eq!(r.ascending.predicted_bideg, 1);
    }

    #[test]
    fn candidates_do_not_depend_on_labelling() {
        let r = herzog_exponents(&ns(&[8, 9, 21])).unwrap();
        let mut base = r.ascending.cdeg_candidates;
        base.sort();
        for d in &r.orderings {
            let mut c = d.cdeg_candidates;
            c.sort();
            assert_eq!(c, base);
        }
    }

    #[test]
    fn row_sums_are_minimal_multiples() {
        for g in [[5, 7, 9], [3, 4, 5], [7, 9, 11], [4, 5, 11], [8, 9, 21]] {
            let r = herzog_exponents(&ns(&g)).unwrap();
            let d = &r.ascending;
            assert_eq!([d.a1 + d.a2, d.b1 + d.b2, d.c1 + d.c2], r.minimal_multiples, "{g:?}");
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(herzog_exponents(&ns(&[3, 5])), Err(Error::NotThreeGenerated(2))));
        assert!(matches!(
            herzog_exponents(&ns(&[4, 5, 6, 7])),
            Err(Error::NotThreeGenerated(4))
        ));
        // <4,6,9> and <6,7,15> are complete intersections.
        assert!(matches!(herzog_exponents(&ns(&[6, 7, 15])), Err(Error::SymmetricSemigroup)));
        assert!(matches!(herzog_exponents(&ns(&[4, 6, 9])), Err(Error::SymmetricSemigroup)));
    }
}
