//! Closed-form degree evaluators. Nothing here builds a ring: the inputs are
//! invariants of the component rings and the outputs are the degrees the
//! corresponding constructions must have.
//!
//! The evaluators are generic over the integer type; the semilocal formula
//! returns an exact rational.

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::degrees::DegreeReport;
use crate::error::{Error, Result};

/// Invariants of one local ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaInputs<T> {
    pub cdeg: T,
    pub bideg: T,
    /// Multiplicity `deg(R) = e₀(𝔪)`.
    pub deg: T,
    #[serde(rename = "type")]
    pub r#type: T,
    /// Residue field extension degree.
    pub e: T,
}

impl<T: Integer + Clone> FormulaInputs<T> {
    pub fn new(cdeg: T, bideg: T, deg: T, r#type: T) -> Self {
        FormulaInputs {
            cdeg,
            bideg,
            deg,
            r#type,
            e: T::one(),
        }
    }

    fn validate(&self) -> Result<()> {
        let fields = [&self.cdeg, &self.bideg, &self.deg, &self.r#type];
        if fields.iter().any(|v| **v < T::zero()) || self.e < T::one() {
            return Err(Error::InvalidInput(
                "formula inputs must be nonnegative with e >= 1".into(),
            ));
        }
        Ok(())
    }
}

impl From<&DegreeReport> for FormulaInputs<i64> {
    fn from(r: &DegreeReport) -> Self {
        FormulaInputs::new(r.cdeg as i64, r.bideg as i64, r.multiplicity, r.r#type as i64)
    }
}

/// `bideg(R ⋉ 𝔪) = 2·bideg(R) − 1` for non-Gorenstein `R`.
pub fn augmented_bideg<T: Integer + Clone>(f: &FormulaInputs<T>) -> Result<T> {
    f.validate()?;
    if f.bideg.is_zero() {
        return Err(Error::GorensteinInput);
    }
    let two = T::one() + T::one();
    Ok(two * f.bideg.clone() - T::one())
}

/// `(cdeg, bideg)` of a product: `d₁·deg₂ + deg₁·d₂` for each degree.
pub fn product_degrees<T: Integer + Clone>(f1: &FormulaInputs<T>, f2: &FormulaInputs<T>) -> Result<(T, T)> {
    f1.validate()?;
    f2.validate()?;
    let mix = |a: &T, b: &T| a.clone() * f2.deg.clone() + f1.deg.clone() * b.clone();
    Ok((mix(&f1.cdeg, &f2.cdeg), mix(&f1.bideg, &f2.bideg)))
}

/// `(cdeg + e₀ − 2r)·Σ 1/eᵢ` over the residue extension degrees of the
/// maximal ideals of `𝔪:𝔪`.
pub fn semilocal_cdeg<T: Integer + Clone>(f: &FormulaInputs<T>, e_list: &[T]) -> Result<Ratio<T>> {
    f.validate()?;
    if e_list.is_empty() || e_list.iter().any(|e| *e < T::one()) {
        return Err(Error::InvalidInput(
            "residue degrees must be a nonempty list of positive integers".into(),
        ));
    }
    let two = T::one() + T::one();
    let base = f.cdeg.clone() + f.deg.clone() - two * f.r#type.clone();
    let weights = e_list
        .iter()
        .fold(Ratio::from_integer(T::zero()), |acc, e| acc + Ratio::new(T::one(), e.clone()));
    Ok(weights * Ratio::from_integer(base))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn augmented() {
        let goto = FormulaInputs::new(2i64, 1, 5, 2);
        assert_eq!(augmented_bideg(&goto).unwrap(), 1);
        assert_eq!(augmented_bideg(&FormulaInputs::new(4i64, 3, 7, 3)).unwrap(), 5);
        assert!(matches!(
            augmented_bideg(&FormulaInputs::new(0i64, 0, 2, 1)),
            Err(Error::GorensteinInput)
        ));
        assert!(augmented_bideg(&FormulaInputs::new(0i64, -1, 2, 1)).is_err());
    }

    #[test]
    fn products() {
        let f = FormulaInputs::new(1i64, 1, 3, 2);
        assert_eq!(product_degrees(&f, &f).unwrap(), (6, 6));
        // (r − 1)·3 + 3·(r − 1) with r = 2
        let g = FormulaInputs::new(0i64, 0, 2, 1);
        assert_eq!(product_degrees(&f, &g).unwrap(), (2, 2));
    }

    #[test]
    fn semilocal() {
        let f = FormulaInputs::new(2i64, 1, 5, 2);
        assert_eq!(semilocal_cdeg(&f, &[1]).unwrap(), Ratio::from_integer(3));
        assert_eq!(semilocal_cdeg(&f, &[1, 1]).unwrap(), Ratio::from_integer(6));
        assert_eq!(semilocal_cdeg(&f, &[2, 3]).unwrap(), Ratio::new(5, 2));
        let g = FormulaInputs::new(0i64, 0, 2, 1);
        assert_eq!(semilocal_cdeg(&g, &[2]).unwrap(), Ratio::from_integer(0));
        assert!(semilocal_cdeg(&g, &[]).is_err());
        assert!(semilocal_cdeg(&g, &[0]).is_err());
    }

    #[test]
    fn other_integer_widths() {
        let f = FormulaInputs::new(2u32, 1, 5, 2);
        assert_eq!(augmented_bideg(&f).unwrap(), 1u32);
        let big = FormulaInputs::new(2i128, 1, 5, 2);
        assert_eq!(semilocal_cdeg(&big, &[3]).unwrap(), Ratio::from_integer(1));
    }
}
