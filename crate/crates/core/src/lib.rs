//! Canonical degree (`cdeg`), bi-canonical degree (`bideg`) and trace degree
//! (`tdeg`) of numerical semigroup rings `k[[H]]`, computed exactly on value
//! sets, together with an exhaustive survey harness over the semigroup tree.

pub mod cli;
pub mod degrees;
pub mod derived;
pub mod error;
pub mod relideal;
pub mod roots;
pub mod semigroup;
pub mod survey;
mod valueset;

pub use degrees::{classify, DegreeReport};
pub use error::{Error, Result};
pub use relideal::RelativeIdeal;
pub use semigroup::NumericalSemigroup;

/// Formula inputs over machine integers.
pub type Formula = derived::FormulaInputs<i64>;
/// Exact rationals returned by the semilocal evaluator.
pub type Rational = num_rational::Ratio<i64>;
