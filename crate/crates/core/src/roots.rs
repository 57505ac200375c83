//! Enumeration of normalized relative ideals and the rootset search
//! `{L : L + … + L (n times) is a translate of K}`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::relideal::{IdealJson, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;
use crate::valueset::ValueSet;

pub const DEFAULT_NMAX: usize = 4;
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Every relative ideal `I` with `min(I) = 0`, each exactly once.
///
/// Such an ideal is `H ∪ S` for a set `S` of gaps. Gaps are decided from
/// the largest down, so closure of a candidate gap only depends on choices
/// already made; infeasible branches are cut at once. Output order is
/// lexicographic in the choice vector (largest gap first, exclude before
/// include), so the first ideal is `H` itself.
pub struct IdealEnumerator {
    h: Arc<NumericalSemigroup>,
    gaps: Vec<i64>,
    member: Vec<bool>,
    choice: Vec<bool>,
    started: bool,
    nodes: u64,
}

impl IdealEnumerator {
    pub fn new(h: &Arc<NumericalSemigroup>) -> Self {
        let mut gaps = h.gaps();
        gaps.reverse();
        let member = (0..h.conductor()).map(|z| h.contains(z)).collect();
        IdealEnumerator {
            h: Arc::clone(h),
            gaps,
            member,
            choice: Vec::new(),
            started: false,
            nodes: 0,
        }
    }

    /// Search nodes visited so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn contains(&self, z: i64) -> bool {
        z >= self.member.len() as i64 || self.member[z as usize]
    }

    fn can_include(&self, g: i64) -> bool {
        self.h.generators().iter().all(|&a| self.contains(g + a))
    }

    fn emit(&self) -> RelativeIdeal {
        let set = ValueSet::from_fn(0, self.member.len() as i64, |z| self.member[z as usize]);
        RelativeIdeal::from_value_set(&self.h, set).expect("enumerated sets are closed")
    }
}

impl Iterator for IdealEnumerator {
    type Item = RelativeIdeal;

    fn next(&mut self) -> Option<RelativeIdeal> {
        if !self.started {
            self.started = true;
            self.choice = vec![false; self.gaps.len()];
            self.nodes += 1;
            return Some(self.emit());
        }
        while let Some(last) = self.choice.pop() {
            let g = self.gaps[self.choice.len()];
            if last {
                self.member[g as usize] = false;
                continue;
            }
            self.nodes += 1;
            if self.can_include(g) {
                self.member[g as usize] = true;
                self.choice.push(true);
                self.choice.resize(self.gaps.len(), false);
                return Some(self.emit());
            }
        }
        None
    }
}

/// All normalized ideals, failing with `LimitExceeded` if there are more
/// than `limit`.
pub fn enumerate_ideals(h: &Arc<NumericalSemigroup>, limit: Option<usize>) -> Result<Vec<RelativeIdeal>> {
    let mut out = Vec::new();
    for ideal in IdealEnumerator::new(h) {
        if limit.is_some_and(|l| out.len() >= l) {
            return Err(Error::LimitExceeded(limit.unwrap_or_default()));
        }
        out.push(ideal);
    }
    Ok(out)
}

/// Socle dimension of the least proper embedding `s + L ⊆ H \ {0}`.
pub fn class_socle_dim(ideal: &RelativeIdeal) -> usize {
    let h = ideal.ambient();
    let unit = RelativeIdeal::unit(h);
    let base = ideal.normalized();
    let s = (1..)
        .find(|&s| base.translate(s).is_subset(&unit))
        .expect("large translates lie in H");
    base.translate(s)
        .socle_dim()
        .expect("proper embedding is m-primary")
}

#[derive(Clone, Debug)]
pub struct RootClass {
    /// Normalized representative, `min = 0`.
    pub representative: RelativeIdeal,
    /// Least `n` with `nL ≅ K`.
    pub n: usize,
    /// Every `n ≤ nmax` with `nL ≅ K`.
    pub exponents: Vec<usize>,
    pub socle_dim: usize,
    /// Socle dimension 1 in the least proper embedding.
    pub irreducible: bool,
}

impl RootClass {
    pub fn is_canonical_class(&self) -> bool {
        self.exponents.first() == Some(&1)
    }

    pub fn to_json(&self) -> RootClassJson {
        RootClassJson {
            ideal: self.representative.to_json(),
            n: self.n,
            irreducible: self.irreducible,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootClassJson {
    pub ideal: IdealJson,
    pub n: usize,
    pub irreducible: bool,
}

/// Every translation class `L` with `nL ≅ K` for some `1 ≤ n ≤ nmax`,
/// sorted by representative.
pub fn rootset(h: &Arc<NumericalSemigroup>, nmax: usize, budget: u64) -> Result<Vec<RootClass>> {
    if nmax == 0 {
        return Err(Error::InvalidInput("nmax must be at least 1".into()));
    }
    let k = RelativeIdeal::canonical(h);
    let mut enumerator = IdealEnumerator::new(h);
    let mut work = 0u64;
    let mut found = Vec::new();
    while let Some(l) = enumerator.next() {
        work += nmax as u64;
        if enumerator.nodes() + work > budget {
            return Err(Error::SearchBudgetExceeded(budget));
        }
        let mut power = l.clone();
        let mut exponents = Vec::new();
        for n in 1..=nmax {
            if n > 1 {
                power = power.add(&l)?;
            }
            if power.normalized() == k {
                exponents.push(n);
            }
        }
        if let Some(&n) = exponents.first() {
            let socle_dim = class_socle_dim(&l);
            found.push(RootClass {
                representative: l,
                n,
                exponents,
                socle_dim,
                irreducible: socle_dim == 1,
            });
        }
    }
    found.sort_by(|a, b| a.representative.value_set().cmp(b.representative.value_set()));
    Ok(found)
}
