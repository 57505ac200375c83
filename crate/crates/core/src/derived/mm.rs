//! `A = 𝔪:𝔪` for a monomial ring `k[[H]]`, as the semigroup `H ∪ PF(H)`.

use std::sync::Arc;

use serde::Serialize;

use crate::degrees::{self, embed_canonical};
use crate::error::{Error, Result};
use crate::relideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

fn non_dvr(h: &NumericalSemigroup) -> Result<()> {
    if h.is_naturals() {
        Err(Error::IsDvr)
    } else {
        Ok(())
    }
}

/// `A = M − M = H ∪ PF(H)`. The residue field does not grow (`e = 1`).
pub fn mm_ring(h: &Arc<NumericalSemigroup>) -> Result<Arc<NumericalSemigroup>> {
    non_dvr(h)?;
    let m = RelativeIdeal::maximal(h);
    let a = m.colon(&m)?;
    Ok(Arc::new(NumericalSemigroup::from_members(a.value_set().clone())))
}

/// Minimal number of generators of `A` as an `R`-module: `|A \ (M + A)|`.
pub fn mm_module_generators(h: &Arc<NumericalSemigroup>) -> Result<usize> {
    non_dvr(h)?;
    let m = RelativeIdeal::maximal(h);
    let a = m.colon(&m)?;
    let ma = m.add(&a)?;
    ma.length_in(&a)
}

/// The canonical ideal of `A`, computed as `M + 𝒞` and read over `A`.
pub fn mm_canonical_ideal(h: &Arc<NumericalSemigroup>) -> Result<(Arc<NumericalSemigroup>, RelativeIdeal)> {
    let a = mm_ring(h)?;
    let (_, c) = embed_canonical(h);
    let d = RelativeIdeal::maximal(h).add(&c)?;
    Ok((Arc::clone(&a), d.over(&a)?))
}

/// True iff `M + 𝒞` is a translate of `K(A)`.
pub fn mm_canonical_check(h: &Arc<NumericalSemigroup>) -> Result<bool> {
    let (a, d) = match mm_canonical_ideal(h) {
        Ok(x) => x,
        Err(Error::NotAnIdeal) => return Ok(false),
        Err(e) => return Err(e),
    };
    d.iso_equal(&RelativeIdeal::canonical(&a))
}

/// `cdeg(R) + e₀(𝔪) − 2r`, which predicts `cdeg(A)` when `e = 1`.
pub fn tcdeg_formula(h: &Arc<NumericalSemigroup>) -> Result<i64> {
    non_dvr(h)?;
    Ok(degrees::cdeg(h) as i64 + h.multiplicity() - 2 * h.cm_type() as i64)
}

/// Everything the `mm` command prints for one step of the tower.
#[derive(Clone, Debug, Serialize)]
pub struct MmReport {
    pub gens: Vec<i64>,
    pub mm_gens: Vec<i64>,
    pub r#type: usize,
    pub nu: usize,
    pub nu_matches_type_plus_one: bool,
    pub cdeg: usize,
    pub cdeg_mm_direct: usize,
    pub cdeg_mm_formula: i64,
    pub formula_ok: bool,
    pub mm_gorenstein: bool,
    pub canonical_ok: bool,
    /// `λ(A/D)`, `λ(A/D**)` and `bideg(A)` for `D = M + 𝒞`.
    pub colength_d: usize,
    pub colength_d_bidual: usize,
    /// The same lengths after replacing `𝒞` by `x𝒞`, `v(x) = e₀`.
    pub colength_xd: usize,
    pub colength_xd_bidual: usize,
    pub bideg_mm: usize,
}

pub fn mm_report(h: &Arc<NumericalSemigroup>) -> Result<MmReport> {
    let (a, d) = mm_canonical_ideal(h)?;
    let unit_a = RelativeIdeal::unit(&a);
    let lengths = |d: &RelativeIdeal| -> Result<(usize, usize)> {
        Ok((d.length_in(&unit_a)?, d.bidual().length_in(&unit_a)?))
    };
    let (colength_d, colength_d_bidual) = lengths(&d)?;
    let (colength_xd, colength_xd_bidual) = lengths(&d.translate(h.multiplicity()))?;
    let nu = mm_module_generators(h)?;
    let cdeg_mm_direct = degrees::cdeg(&a);
    let cdeg_mm_formula = tcdeg_formula(h)?;
    Ok(MmReport {
        gens: h.generators().to_vec(),
        mm_gens: a.generators().to_vec(),
        r#type: h.cm_type(),
        nu,
        nu_matches_type_plus_one: nu == h.cm_type() + 1,
        cdeg: degrees::cdeg(h),
        cdeg_mm_direct,
        cdeg_mm_formula,
        formula_ok: cdeg_mm_direct as i64 == cdeg_mm_formula,
        mm_gorenstein: a.is_symmetric(),
        canonical_ok: d.iso_equal(&RelativeIdeal::canonical(&a))?,
        colength_d,
        colength_d_bidual,
        colength_xd,
        colength_xd_bidual,
        bideg_mm: degrees::bideg(&a),
    })
}
