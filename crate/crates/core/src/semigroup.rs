//! Numerical semigroups and their elementary invariants.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::valueset::ValueSet;

/// Default bound on the sieve when locating the conductor.
pub const DEFAULT_SIEVE_CAP: i64 = 1_000_000;

/// A cofinite additive submonoid `H` of the nonnegative integers.
///
/// Membership below the conductor is materialized as a bit window; the
/// minimal generating set is kept sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    gens: Vec<i64>,
    members: ValueSet,
    genus: usize,
}

impl NumericalSemigroup {
    /// The full semigroup `N`.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            gens: vec![1],
            members: ValueSet::interval_from(0),
            genus: 0,
        }
    }

    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        Self::from_generators_with_cap(gens, DEFAULT_SIEVE_CAP)
    }

    pub fn from_generators_with_cap(gens: &[i64], cap: i64) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let mut cand = gens.to_vec();
        cand.sort_unstable();
        cand.dedup();
        let g = cand.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::NonCoprime(g));
        }
        let e = cand[0];
        if e == 1 {
            return Ok(Self::naturals());
        }

        // Sieve until `e` consecutive members appear.
        let mut sieve = vec![true];
        let mut run = 0i64;
        let mut z = 0i64;
        while run < e {
            z += 1;
            if z > cap {
                return Err(Error::SieveCapExceeded(cap));
            }
            let member = cand
                .iter()
                .any(|&a| a <= z && sieve[(z - a) as usize]);
            sieve.push(member);
            run = if member { run + 1 } else { 0 };
        }
        let conductor = z - e + 1;
        let members = ValueSet::from_fn(0, conductor, |x| sieve[x as usize]);
        let genus = sieve[..conductor as usize].iter().filter(|m| !**m).count();

        let contains = |x: i64| members.contains(x);
        let minimal = cand
            .into_iter()
            .filter(|&a| a < conductor + e && !(1..a).any(|m| contains(m) && contains(a - m)))
            .collect();
        Ok(NumericalSemigroup {
            gens: minimal,
            members,
            genus,
        })
    }

    /// Builds the semigroup from a membership set already known to be a
    /// numerical semigroup (contains 0, closed under addition, min 0).
    pub(crate) fn from_members(members: ValueSet) -> Self {
        debug_assert_eq!(members.least(), 0);
        let c = members.conductor();
        if c == 0 {
            return Self::naturals();
        }
        let e = (1..=c).find(|&z| members.contains(z)).unwrap_or(c);
        let gens = (e..c + e)
            .filter(|&a| members.contains(a))
            .filter(|&a| !(e..=a - e).any(|m| members.contains(m) && members.contains(a - m)))
            .collect();
        let genus = (1..c).filter(|&z| !members.contains(z)).count();
        NumericalSemigroup {
            gens,
            members,
            genus,
        }
    }

    pub fn generators(&self) -> &[i64] {
        &self.gens
    }

    pub(crate) fn members(&self) -> &ValueSet {
        &self.members
    }

    pub fn contains(&self, z: i64) -> bool {
        self.members.contains(z)
    }

    pub fn conductor(&self) -> i64 {
        self.members.conductor()
    }

    /// `conductor - 1`; equals -1 for `N`.
    pub fn frobenius(&self) -> i64 {
        self.conductor() - 1
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn multiplicity(&self) -> i64 {
        self.gens[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.gens.len()
    }

    pub fn is_naturals(&self) -> bool {
        self.conductor() == 0
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..self.conductor()).filter(|&z| !self.contains(z)).collect()
    }

    /// Least element of `H` in each residue class mod `a`, indexed by residue.
    pub fn apery(&self, a: i64) -> Result<Vec<i64>> {
        if a <= 0 || !self.contains(a) {
            return Err(Error::NotMember(a));
        }
        let mut out = vec![-1i64; a as usize];
        let mut missing = a;
        let mut z = 0;
        while missing > 0 {
            let slot = &mut out[(z % a) as usize];
            if *slot < 0 && self.contains(z) {
                *slot = z;
                missing -= 1;
            }
            z += 1;
        }
        Ok(out)
    }

    /// Pseudo-Frobenius numbers: gaps `z` with `z + (H \ {0}) ⊆ H`.
    /// Empty for `N`.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        (1..self.conductor())
            .filter(|&z| !self.contains(z) && self.gens.iter().all(|&a| self.contains(z + a)))
            .collect()
    }

    /// Cohen-Macaulay type of `k[[H]]`; 1 for `N`.
    pub fn cm_type(&self) -> usize {
        self.pseudo_frobenius().len().max(1)
    }

    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius();
        (0..=f).all(|z| self.contains(z) != self.contains(f - z))
    }

    /// `H \ {g}` for a minimal generator `g > F`; `None` otherwise.
    pub fn remove_generator(&self, g: i64) -> Option<Self> {
        if g <= self.frobenius() || !self.gens.contains(&g) {
            return None;
        }
        let members = ValueSet::from_fn(0, g + 1, |z| z != g && self.contains(z));
        Some(Self::from_members(members))
    }

    /// Children in the semigroup tree: remove each generator above `F`.
    pub fn children(&self) -> Vec<Self> {
        self.gens
            .iter()
            .filter_map(|&g| self.remove_generator(g))
            .collect()
    }

    pub fn info(&self) -> SemigroupInfo {
        SemigroupInfo {
            gens: self.gens.clone(),
            frobenius: self.frobenius(),
            conductor: self.conductor(),
            genus: self.genus,
            multiplicity: self.multiplicity(),
            r#type: self.cm_type(),
            pf: self.pseudo_frobenius(),
            symmetric: self.is_symmetric(),
        }
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{}", self)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", join(&self.gens))
    }
}

pub(crate) fn join(xs: &[i64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Stable-key summary of a semigroup.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SemigroupInfo {
    pub gens: Vec<i64>,
    pub frobenius: i64,
    pub conductor: i64,
    pub genus: usize,
    pub multiplicity: i64,
    #[serde(rename = "type")]
    pub r#type: usize,
    pub pf: Vec<i64>,
    pub symmetric: bool,
}

/// Parses `"5,7,9"` into integers.
pub fn parse_list(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<i64>().map_err(|_| Error::Parse {
                what: "integer list",
                value: text.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    /// Membership by unbounded-knapsack DP up to `bound`.
    fn dp_members(gens: &[i64], bound: i64) -> Vec<bool> {
        let mut m = vec![false; bound as usize + 1];
        m[0] = true;
        for z in 1..=bound {
            m[z as usize] = gens.iter().any(|&a| a <= z && m[(z - a) as usize]);
        }
        m
    }

    #[test]
    fn five_seven_nine() {
        let h = ns(&[9, 7, 5]);
        assert_eq!(h.generators(), &[5, 7, 9]);
        assert_eq!(h.frobenius(), 13);
        assert_eq!(h.conductor(), 14);
        assert_eq!(h.genus(), 8);
        assert_eq!(h.multiplicity(), 5);
        assert_eq!(h.gaps(), vec![1, 2, 3, 4, 6, 8, 11, 13]);
        let dp = dp_members(&[5, 7, 9], 35);
        for z in 0..=35 {
            assert_eq!(h.contains(z), dp[z as usize], "{z}");
        }
        assert!(h.contains(18));
        assert!(!h.contains(13));
        assert!(!h.contains(-3));
    }

    #[test]
    fn naturals_and_errors() {
        let n = ns(&[1]);
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.conductor(), 0);
        assert_eq!(n.genus(), 0);
        assert!(n.pseudo_frobenius().is_empty());
        assert_eq!(n.cm_type(), 1);
        assert!(n.is_symmetric());
        assert_eq!(ns(&[1, 5, 7]), n);
        assert!(matches!(
            NumericalSemigroup::from_generators(&[2, 4]),
            Err(Error::NonCoprime(2))
        ));
        assert!(matches!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyGenerators)
        ));
        assert!(matches!(
            NumericalSemigroup::from_generators(&[3, 0]),
            Err(Error::NonPositiveGenerator(0))
        ));
        assert!(matches!(
            NumericalSemigroup::from_generators_with_cap(&[1000, 1001], 5000),
            Err(Error::SieveCapExceeded(5000))
        ));
    }

    #[test]
    fn generator_reduction() {
        assert_eq!(ns(&[5, 7, 9, 10, 12, 14, 100]).generators(), &[5, 7, 9]);
        assert_eq!(ns(&[4, 6, 9, 11]).generators(), &[4, 6, 9, 11]);
        assert_eq!(ns(&[4, 6, 9]).generators(), &[4, 6, 9]);
    }

    #[test]
    fn apery_sets() {
        assert_eq!(ns(&[5, 7, 9]).apery(5).unwrap(), vec![0, 16, 7, 18, 9]);
        assert_eq!(ns(&[1]).apery(1).unwrap(), vec![0]);
        assert_eq!(ns(&[2, 3]).apery(2).unwrap(), vec![0, 3]);
        assert!(matches!(ns(&[5, 7, 9]).apery(6), Err(Error::NotMember(6))));
        assert!(matches!(ns(&[5, 7, 9]).apery(0), Err(Error::NotMember(0))));
    }

    #[test]
    fn pseudo_frobenius_and_symmetry() {
        assert_eq!(ns(&[5, 7, 9]).pseudo_frobenius(), vec![11, 13]);
        assert_eq!(ns(&[5, 7, 9]).cm_type(), 2);
        assert_eq!(ns(&[2, 3]).pseudo_frobenius(), vec![1]);
        assert_eq!(ns(&[5, 7, 9, 11, 13]).pseudo_frobenius(), vec![2, 4, 6, 8]);
        assert!(ns(&[2, 3]).is_symmetric());
        assert!(!ns(&[5, 7, 9]).is_symmetric());
        assert!(!ns(&[3, 4, 5]).is_symmetric());
        assert!(ns(&[3, 5]).is_symmetric());
    }

    #[test]
    fn tree_children() {
        assert_eq!(NumericalSemigroup::naturals().children(), vec![ns(&[2, 3])]);
        let kids: Vec<_> = ns(&[2, 3]).children().iter().map(|h| h.generators().to_vec()).collect();
        assert_eq!(kids, vec![vec![3, 4, 5], vec![2, 5]]);
        let kids: Vec<_> = ns(&[3, 4, 5]).children().iter().map(|h| h.generators().to_vec()).collect();
        assert_eq!(kids, vec![vec![4, 5, 6, 7], vec![3, 5, 7], vec![3, 4]]);
        assert!(ns(&[5, 7, 9]).remove_generator(7).is_none());
    }

    #[test]
    fn info_json_keys() {
        let v = serde_json::to_string(&ns(&[5, 7, 9]).info()).unwrap();
        assert_eq!(
            v,
            r#"{"gens":[5,7,9],"frobenius":13,"conductor":14,"genus":8,"multiplicity":5,"type":2,"pf":[11,13],"symmetric":false}"#
        );
    }

    #[test]
    fn parse_lists() {
        assert_eq!(parse_list("5,7, 9").unwrap(), vec![5, 7, 9]);
        assert_eq!(parse_list("-3,0").unwrap(), vec![-3, 0]);
        assert!(parse_list("5,x").is_err());
    }
}
