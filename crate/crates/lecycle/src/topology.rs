//! Milnor numbers, Milnor-fiber reports (Euler characteristic, chain
//! complex, Betti bounds), the Sebastiani-Thom bouquet rule, and the
//! dimension-lowering prediction formulas.

use crate::cycles::{critical_data, LeResult};
use crate::error::{Error, Result};
use crate::homology::HomologyProfile;
use crate::ideal::{Limits, LocalMultiplicity};
use crate::poly::Polynomial;

/// Milnor number at the origin: the length of the Jacobian algebra.
/// Requires an isolated (or empty) critical point at the origin; zero
/// exactly when the origin is not a critical point.
pub fn milnor_number(f: &Polynomial, limits: &Limits) -> Result<u64> {
    let cd = critical_data(f, limits)?;
    if cd.s() > 0 {
        return Err(Error::NonIsolated { s: cd.s() });
    }
    match cd.jacobian().local_multiplicity(limits)? {
        LocalMultiplicity::Finite(v) => Ok(v),
        LocalMultiplicity::NotZeroDimensional => Err(Error::NonIsolated { s: cd.s() }),
    }
}

/// An upper bound `rank H~^{degree} ≤ bound` in one cohomological degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiBound {
    pub degree: i64,
    pub bound: u64,
}

/// What the chain-complex structure of the Milnor fiber yields: cell
/// counts, the Euler characteristic, per-degree Betti bounds, and the
/// connectivity degree.
#[derive(Debug, Clone)]
pub struct MilnorFiberReport {
    pub n: usize,
    pub s: i64,
    /// λ^s, ..., λ^0: the ranks of the chain complex from top to bottom.
    pub chain_ranks: Vec<u64>,
    pub euler_characteristic: i64,
    /// rank H~^{n-k} ≤ λ^k for 0 ≤ k ≤ s.
    pub betti_bounds: Vec<BettiBound>,
    /// The fiber is (n-s-1)-connected.
    pub connectivity: i64,
    /// When supplied: the attaching bound `b_n ≤ (Γ^1 · V(f))_0`.
    pub attaching_bound: Option<u64>,
    /// Standing note on when the top bound is attained.
    pub top_bound_note: String,
}

/// Note emitted with every report: the λ^s bound on rank H~^{n-s} is
/// attained only when the critical locus is smooth and the lower Lê cycles
/// vanish, i.e. for a μ-constant family over Σf. Reported as text, never
/// used to alter computed values.
pub const TOP_BOUND_NOTE: &str = "the bound rank H~^(n-s) <= lambda^s is attained only if the critical locus is smooth near the origin and all lower Le cycles vanish (a mu-constant family)";

/// χ(F) = 1 + Σ_{0≤k≤s} (-1)^{n-k} λ^k, plus the associated bounds.
pub fn milnor_fiber_report(
    le: &LeResult,
    n: usize,
    attaching_bound: Option<u64>,
) -> Result<MilnorFiberReport> {
    if le.s > n as i64 {
        return Err(Error::InvalidInput(format!(
            "s = {} exceeds the ambient dimension n = {n}",
            le.s
        )));
    }
    let mut euler: i64 = 1;
    let mut betti_bounds = Vec::new();
    for (k, &lam) in le.lambda.iter().enumerate() {
        let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
        euler += sign * lam as i64;
        betti_bounds.push(BettiBound { degree: (n - k) as i64, bound: lam });
    }
    let chain_ranks: Vec<u64> = le.lambda.iter().rev().copied().collect();
    Ok(MilnorFiberReport {
        n,
        s: le.s,
        chain_ranks,
        euler_characteristic: euler,
        betti_bounds,
        connectivity: n as i64 - le.s - 1,
        attaching_bound,
        top_bound_note: TOP_BOUND_NOTE.to_string(),
    })
}

/// Sebastiani-Thom for two isolated singularities: the fiber of
/// `f(w) + g(z)` is a bouquet of `mu_f * mu_g` spheres of dimension
/// `n_f + n_g + 1`.
pub fn sebastiani_thom_milnor(mu_f: u64, n_f: usize, mu_g: u64, n_g: usize) -> (usize, u64) {
    (n_f + n_g + 1, mu_f * mu_g)
}

/// Same statement as a homology profile, for cross-checks against the
/// general join formula.
pub fn sebastiani_thom_profile(mu_f: u64, n_f: usize, mu_g: u64, n_g: usize) -> HomologyProfile {
    let (degree, rank) = sebastiani_thom_milnor(mu_f, n_f, mu_g, n_g);
    HomologyProfile::sphere_bouquet(degree as i64, rank)
}

/// Predicted invariants for a modified function, carrying only what the
/// formulas determine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LePrediction {
    pub s: i64,
    pub lambda: Vec<u64>,
}

/// Prediction for `f + z_0^j` in the rotated coordinates
/// `(z_1, ..., z_n, z_0)`: the critical dimension drops by one,
/// `λ~^0 = λ^0 + (j-1) λ^1` and `λ~^k = (j-1) λ^{k+1}` for k ≥ 1.
/// Requires `γ^1 = 0` or `j > 1 + λ^0 / γ^1`, checked exactly.
pub fn le_iomdine_predict(le: &LeResult, j: u64) -> Result<LePrediction> {
    if le.s < 1 {
        return Err(Error::NonIsolated { s: le.s });
    }
    let s = le.s as usize;
    let gamma1 = le.gamma_at(1);
    let lambda0 = le.lambda[0];
    // j > 1 + λ^0/γ^1  <=>  (j - 1) γ^1 > λ^0, in exact integers.
    if gamma1 != 0 && (j.saturating_sub(1)) * gamma1 <= lambda0 {
        return Err(Error::HypothesisFailure(format!(
            "j = {j} does not satisfy j > 1 + {lambda0}/{gamma1}"
        )));
    }
    let mut lambda = Vec::with_capacity(s);
    lambda.push(lambda0 + (j - 1) * le.lambda.get(1).copied().unwrap_or(0));
    for k in 1..s {
        lambda.push((j - 1) * le.lambda[k + 1]);
    }
    Ok(LePrediction { s: le.s - 1, lambda })
}

/// Prediction for the restriction `f|_{V(z_0)}` in coordinates
/// `(z_1, ..., z_n)`: `λ~^0 = γ^1 + λ^1`, `λ~^k = λ^{k+1}` for k ≥ 1.
pub fn restriction_predict(le: &LeResult) -> Result<LePrediction> {
    if le.s < 1 {
        return Err(Error::NonIsolated { s: le.s });
    }
    let s = le.s as usize;
    let mut lambda = Vec::with_capacity(s);
    lambda.push(le.gamma_at(1) + le.lambda[1]);
    for k in 1..s {
        lambda.push(le.lambda[k + 1]);
    }
    Ok(LePrediction { s: le.s - 1, lambda })
}
