//! Constructions built on top of the degree engine: the ring `𝔪:𝔪`, the
//! Herzog exponents of three-generated semigroups, and closed-form degree
//! evaluators for augmented rings, products and the semilocal case.

pub mod formulas;
pub mod herzog;
pub mod mm;

pub use formulas::{augmented_bideg, product_degrees, semilocal_cdeg, FormulaInputs};
pub use herzog::{herzog_exponents, HerzogData, HerzogReport};
pub use mm::{
    mm_canonical_check, mm_module_generators, mm_report, mm_ring, tcdeg_formula, MmReport,
};
