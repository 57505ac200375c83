//! Relative ideals of a numerical semigroup: value sets `I ⊂ Z` with
//! `I + H ⊆ I`, modelling fractional monomial ideals of `k[[H]]`.
//!
//! Products of monomial ideals become sumsets, `Hom(J, I)` becomes the
//! colon `I − J = {z : z + J ⊆ I}`, and lengths are counts of value-set
//! differences. Two monomial ideals are isomorphic exactly when their value
//! sets are translates of each other.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::valueset::ValueSet;

#[derive(Clone)]
pub struct RelativeIdeal {
    ambient: Arc<NumericalSemigroup>,
    set: ValueSet,
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.same_ambient(other) && self.set == other.set
    }
}

impl Eq for RelativeIdeal {}

impl RelativeIdeal {
    /// `∪ (g + H)` over the given integers.
    pub fn from_generators(h: &Arc<NumericalSemigroup>, gens: &[i64]) -> Result<Self> {
        let lo = *gens.iter().min().ok_or(Error::EmptyGenerators)?;
        let hs = h.members();
        let set = ValueSet::from_chunks(lo, lo + h.conductor(), |s| {
            gens.iter().fold(0, |acc, &g| acc | hs.chunk(s - g))
        });
        Ok(RelativeIdeal {
            ambient: Arc::clone(h),
            set,
        })
    }

    /// Wraps a value set, checking closure under `+H`.
    pub fn from_value_set(h: &Arc<NumericalSemigroup>, set: ValueSet) -> Result<Self> {
        let closed = h
            .generators()
            .iter()
            .all(|&a| set.shift(a).is_subset(&set));
        if !closed {
            return Err(Error::NotAnIdeal);
        }
        Ok(RelativeIdeal {
            ambient: Arc::clone(h),
            set,
        })
    }

    /// Builds an ideal from its elements below `conductor` (everything from
    /// `conductor` on is included).
    pub fn from_elements(h: &Arc<NumericalSemigroup>, elements: &[i64], conductor: i64) -> Result<Self> {
        let lo = elements.iter().copied().min().unwrap_or(conductor).min(conductor);
        let set = ValueSet::from_fn(lo, conductor, |z| elements.contains(&z));
        Self::from_value_set(h, set)
    }

    /// `H` itself, the unit ideal.
    pub fn unit(h: &Arc<NumericalSemigroup>) -> Self {
        RelativeIdeal {
            ambient: Arc::clone(h),
            set: h.members().clone(),
        }
    }

    /// The maximal ideal `M = H \ {0}`.
    pub fn maximal(h: &Arc<NumericalSemigroup>) -> Self {
        Self::from_generators(h, h.generators()).expect("generators are nonempty")
    }

    /// The canonical relative ideal `K = {z : F − z ∉ H}`; `min(K) = 0`.
    pub fn canonical(h: &Arc<NumericalSemigroup>) -> Self {
        let f = h.frobenius();
        let set = ValueSet::from_fn(0, f + 1, |z| !h.contains(f - z));
        RelativeIdeal {
            ambient: Arc::clone(h),
            set,
        }
    }

    pub fn ambient(&self) -> &Arc<NumericalSemigroup> {
        &self.ambient
    }

    pub(crate) fn value_set(&self) -> &ValueSet {
        &self.set
    }

    pub fn min(&self) -> i64 {
        self.set.least()
    }

    pub fn conductor(&self) -> i64 {
        self.set.conductor()
    }

    pub fn contains(&self, z: i64) -> bool {
        self.set.contains(z)
    }

    /// Elements of `[min, conductor)`.
    pub fn finite_part(&self) -> Vec<i64> {
        self.set.finite_part()
    }

    pub fn same_ambient(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// Re-reads the same value set as an ideal over another semigroup.
    pub fn over(&self, h: &Arc<NumericalSemigroup>) -> Result<Self> {
        Self::from_value_set(h, self.set.clone())
    }

    /// Minimal generators: elements of `I \ (I + M)`.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let gens = self.ambient.generators();
        let upper = self.conductor() + self.ambient.multiplicity();
        (self.min()..upper)
            .filter(|&z| self.contains(z) && gens.iter().all(|&a| !self.contains(z - a)))
            .collect()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.set.is_subset(&other.set)
    }

    /// Sumset `I + J`, the value set of the ideal product.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.add_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let gens = self.minimal_generators();
        let lo = self.min() + other.min();
        let hi = self.min() + other.conductor();
        let set = ValueSet::from_chunks(lo, hi, |s| {
            gens.iter().fold(0, |acc, &g| acc | other.set.chunk(s - g))
        });
        RelativeIdeal {
            ambient: Arc::clone(&self.ambient),
            set,
        }
    }

    /// Colon `I − J = {z : z + J ⊆ I}`, the value set of `Hom(J, I)`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.colon_unchecked(other))
    }

    fn colon_unchecked(&self, other: &Self) -> Self {
        // z + J ⊆ I iff z + g ∈ I for every minimal generator g of J.
        let gens = other.minimal_generators();
        let lo = self.min() - other.min();
        let hi = self.conductor() - other.min();
        let set = ValueSet::from_chunks(lo, hi, |s| {
            gens.iter().fold(!0, |acc, &g| acc & self.set.chunk(s + g))
        });
        RelativeIdeal {
            ambient: Arc::clone(&self.ambient),
            set,
        }
    }

    /// `H − I`.
    pub fn dual(&self) -> Self {
        RelativeIdeal::unit(&self.ambient).colon_unchecked(self)
    }

    /// `H − (H − I)`; always contains `I`.
    pub fn bidual(&self) -> Self {
        self.dual().dual()
    }

    /// `I + (H − I)`, the value set of `I·I*`.
    pub fn trace(&self) -> Self {
        self.add_unchecked(&self.dual())
    }

    /// `I + I + … + I` (`n` summands, `n ≥ 1`).
    pub fn nfold(&self, n: usize) -> Self {
        assert!(n >= 1, "nfold needs n >= 1");
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.add_unchecked(self);
        }
        acc
    }

    /// `λ(J/I) = |J \ I|` for `I = self ⊆ J = bigger`.
    pub fn length_in(&self, bigger: &Self) -> Result<usize> {
        self.check_ambient(bigger)?;
        if !self.is_subset(bigger) {
            return Err(Error::NotContained);
        }
        Ok(bigger.set.count_minus(&self.set))
    }

    pub fn translate(&self, s: i64) -> Self {
        RelativeIdeal {
            ambient: Arc::clone(&self.ambient),
            set: self.set.shift(s),
        }
    }

    /// Translate with `min = 0`.
    pub fn normalized(&self) -> Self {
        self.translate(-self.min())
    }

    /// True iff `other = s + self` for some integer `s`.
    pub fn iso_equal(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.set.same_shape(&other.set))
    }

    fn check_m_primary(&self) -> Result<()> {
        if self.contains(0) || !self.set.is_subset(self.ambient.members()) {
            return Err(Error::NotMPrimary);
        }
        Ok(())
    }

    /// Dimension of the socle of `R/I`: `|((I − M) ∩ H) \ I|`.
    pub fn socle_dim(&self) -> Result<usize> {
        self.check_m_primary()?;
        let quotient = self.colon_unchecked(&Self::maximal(&self.ambient));
        let hs = self.ambient.members();
        Ok(quotient.set.intersection(hs).count_minus(&self.set))
    }

    /// Canonical-ideal recognition by the socle criterion `I − M = I ∪ {s}`
    /// with `s ∈ H`, cross-checked against `I ≅ K`.
    pub fn is_canonical(&self) -> Result<bool> {
        self.check_m_primary()?;
        let quotient = self.colon_unchecked(&Self::maximal(&self.ambient));
        let by_socle = quotient.set.is_subset(self.ambient.members())
            && quotient.set.count_minus(&self.set) == 1;
        let by_iso = self.set.same_shape(Self::canonical(&self.ambient).value_set());
        if by_socle != by_iso {
            return Err(Error::InternalInvariantViolation(format!(
                "canonical tests disagree for {self}: socle criterion {by_socle}, translate of K {by_iso}"
            )));
        }
        Ok(by_socle)
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            min: self.min(),
            conductor: self.conductor(),
            elements: self.finite_part(),
        }
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elts = self.finite_part();
        if elts.is_empty() {
            write!(f, "[{},∞)", self.conductor())
        } else {
            write!(f, "{{{}}} ∪ [{},∞)", crate::semigroup::join(&elts), self.conductor())
        }
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelativeIdeal({} over {})", self, self.ambient)
    }
}

/// Serialized form of a relative ideal.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IdealJson {
    pub min: i64,
    pub conductor: i64,
    pub elements: Vec<i64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(g: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(g).unwrap())
    }

    fn ideal(h: &Arc<NumericalSemigroup>, elts: &[i64], cond: i64) -> RelativeIdeal {
        RelativeIdeal::from_elements(h, elts, cond).unwrap()
    }

    /// Colon membership by definition over a wide window of `J`.
    fn in_colon_brute(i: &RelativeIdeal, j: &RelativeIdeal, z: i64) -> bool {
        (j.min()..j.conductor() + 40).all(|y| !j.contains(y) || i.contains(z + y))
    }

    #[test]
    fn from_generators_examples() {
        let s = h(&[5, 7, 9]);
        let c = RelativeIdeal::from_generators(&s, &[5, 7]).unwrap();
        assert_eq!(c, ideal(&s, &[5, 7, 10, 12, 14, 15, 16, 17], 19));
        assert_eq!(RelativeIdeal::from_generators(&s, &[0]).unwrap(), RelativeIdeal::unit(&s));
        let m = RelativeIdeal::from_generators(&s, &[5, 7, 9]).unwrap();
        assert_eq!(m, RelativeIdeal::maximal(&s));
        assert_eq!(m.finite_part(), vec![5, 7, 9, 10, 12]);
        assert_eq!(m.conductor(), 14);
        assert!(matches!(
            RelativeIdeal::from_generators(&s, &[]),
            Err(Error::EmptyGenerators)
        ));
        assert!(matches!(
            RelativeIdeal::from_elements(&s, &[0], 10),
            Err(Error::NotAnIdeal)
        ));
    }

    #[test]
    fn canonical_examples() {
        let s = h(&[5, 7, 9]);
        let k = RelativeIdeal::canonical(&s);
        assert_eq!(k, ideal(&s, &[0, 2, 5, 7, 9, 10, 11, 12], 14));
        let t = h(&[2, 3]);
        assert_eq!(RelativeIdeal::canonical(&t), RelativeIdeal::unit(&t));
        let u = h(&[3, 4, 5]);
        assert_eq!(RelativeIdeal::canonical(&u), ideal(&u, &[0, 1], 3));
    }

    #[test]
    fn sums() {
        let s = h(&[5, 7, 9]);
        let m = RelativeIdeal::maximal(&s);
        let m2 = m.add(&m).unwrap();
        let brute: Vec<i64> = (0..40)
            .filter(|&z| (0..=z).any(|a| m.contains(a) && m.contains(z - a)))
            .collect();
        assert_eq!((0..40).filter(|&z| m2.contains(z)).collect::<Vec<_>>(), brute);
        assert_eq!(&brute[..7], &[10, 12, 14, 15, 16, 17, 18]);
        let unit = RelativeIdeal::unit(&s);
        assert_eq!(m.add(&unit).unwrap(), m);
        let c = RelativeIdeal::from_generators(&s, &[5, 7]).unwrap();
        assert_eq!(c.add(&c.dual()).unwrap(), m);
        assert_eq!(c.trace(), m);
    }

    #[test]
    fn colons_and_duals() {
        let s = h(&[5, 7, 9]);
        let m = RelativeIdeal::maximal(&s);
        let mm = m.colon(&m).unwrap();
        assert_eq!(mm, ideal(&s, &[0, 5, 7, 9, 10, 11, 12, 13], 14));
        let c = RelativeIdeal::from_generators(&s, &[5, 7]).unwrap();
        assert_eq!(c.colon(&RelativeIdeal::unit(&s)).unwrap(), c);
        let cd = RelativeIdeal::unit(&s).colon(&c).unwrap();
        assert_eq!(cd, ideal(&s, &[0, 2, 5, 7, 9, 10, 11, 12, 13], 14));
        assert_eq!(c.dual(), cd);
        assert_eq!(c.bidual(), ideal(&s, &[5, 7, 10, 12, 14, 15, 16, 17, 18], 19));
        assert_eq!(RelativeIdeal::unit(&s).dual(), RelativeIdeal::unit(&s));
        for (i, j) in [(&c, &m), (&m, &c), (&cd, &c), (&c, &cd), (&m, &cd)] {
            let got = i.colon(j).unwrap();
            for z in i.min() - j.min() - 10..i.conductor() - j.min() + 10 {
                assert_eq!(got.contains(z), in_colon_brute(i, j, z), "z = {z}");
            }
            assert!(got.add(j).unwrap().is_subset(i));
        }
    }

    #[test]
    fn lengths() {
        let s = h(&[5, 7, 9]);
        let c = RelativeIdeal::from_generators(&s, &[5, 7]).unwrap();
        let unit = RelativeIdeal::unit(&s);
        assert_eq!(c.length_in(&unit).unwrap(), 3);
        assert_eq!(c.length_in(&c).unwrap(), 0);
        let p = RelativeIdeal::from_generators(&s, &[5]).unwrap();
        assert_eq!(p.length_in(&unit).unwrap(), 5);
        assert!(matches!(unit.length_in(&c), Err(Error::NotContained)));
        let other = RelativeIdeal::unit(&h(&[2, 3]));
        assert!(matches!(c.length_in(&other), Err(Error::AmbientMismatch)));
    }

    #[test]
    fn translation_and_iso() {
        let s = h(&[5, 7, 9]);
        let k = RelativeIdeal::canonical(&s);
        let c = k.translate(5);
        assert!(c.is_subset(&RelativeIdeal::unit(&s)));
        assert_eq!(c, RelativeIdeal::from_generators(&s, &[5, 7]).unwrap());
        assert!(k.iso_equal(&k.translate(42)).unwrap());
        assert!(!k.iso_equal(&RelativeIdeal::unit(&s)).unwrap());
        assert_eq!(k.translate(-3).normalized(), k);
    }

    #[test]
    fn canonical_recognition() {
        let s = h(&[5, 7, 9]);
        let c = RelativeIdeal::from_generators(&s, &[5, 7]).unwrap();
        assert!(c.is_canonical().unwrap());
        assert_eq!(c.socle_dim().unwrap(), 1);
        let m = RelativeIdeal::maximal(&s);
        assert!(!m.is_canonical().unwrap());
        assert_eq!(m.socle_dim().unwrap(), 1);
        let n = h(&[1]);
        assert!(RelativeIdeal::maximal(&n).is_canonical().unwrap());
        assert!(matches!(RelativeIdeal::unit(&s).is_canonical(), Err(Error::NotMPrimary)));
        assert!(matches!(
            RelativeIdeal::canonical(&s).socle_dim(),
            Err(Error::NotMPrimary)
        ));
        // Principal ideals: socle of R/(x) has dimension equal to the type.
        let p = RelativeIdeal::from_generators(&s, &[5]).unwrap();
        assert_eq!(p.socle_dim().unwrap(), 2);
    }

    #[test]
    fn minimal_generators_of_ideals() {
        let s = h(&[5, 7, 9]);
        assert_eq!(RelativeIdeal::canonical(&s).minimal_generators(), vec![0, 2]);
        assert_eq!(RelativeIdeal::maximal(&s).minimal_generators(), vec![5, 7, 9]);
        let mm = RelativeIdeal::maximal(&s).colon(&RelativeIdeal::maximal(&s)).unwrap();
        assert_eq!(mm.minimal_generators(), vec![0, 11, 13]);
    }

    #[test]
    fn json_shape() {
        let s = h(&[3, 4, 5]);
        let v = serde_json::to_string(&RelativeIdeal::canonical(&s).to_json()).unwrap();
        assert_eq!(v, r#"{"min":0,"conductor":3,"elements":[0,1]}"#);
    }
}
