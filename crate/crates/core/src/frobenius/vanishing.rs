//! Necessary conditions for positivity of restriction coefficients, the
//! Durfee-square criterion, and the stabilization of `r_λ^{μ^(n)}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::coeff::{coeff, CoeffKind, CoeffQuery};
use crate::characters::chi;
use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::partition::{partitions_of, Partition};
use crate::symfunc::terms::q;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VanishingKind {
    /// `r_λ^μ > 0 ⇒ |λ ∩ μ̂| ≥ 2|μ̂| - |λ|`, with `μ̂` = μ minus its first part.
    RBound,
    /// `t_λ^μ > 0 ⇒ |λ ∩ μ| ≥ 2|μ| - |λ|`.
    TBound,
    /// `a_λ^μ > 0 ⇒ |λ ∩ μ| ≥ 2|μ| - |λ|`.
    ABound,
}

impl VanishingKind {
    pub fn coeff_kind(self) -> CoeffKind {
        match self {
            VanishingKind::RBound => CoeffKind::R,
            VanishingKind::TBound => CoeffKind::T,
            VanishingKind::ABound => CoeffKind::A,
        }
    }
}

/// Whether the inequality of `kind` holds for `(λ, μ)`. When it fails the
/// corresponding coefficient must vanish.
pub fn vanishing_check(kind: VanishingKind, lambda: &Partition, mu: &Partition) -> bool {
    let target = match kind {
        VanishingKind::RBound => mu.hat(),
        VanishingKind::TBound | VanishingKind::ABound => mu.clone(),
    };
    let lhs = lambda.intersect(&target).size() as i64;
    lhs >= 2 * target.size() as i64 - lambda.size() as i64
}

/// `D(μ) ≤ 2^{k-1}`.
pub fn durfee_criterion(mu: &Partition, k: usize) -> bool {
    assert!(k >= 1, "k must be positive");
    let bound = 1usize.checked_shl((k - 1) as u32).unwrap_or(usize::MAX);
    mu.durfee() <= bound
}

/// The smallest `λ` (canonical order) with `λ_1 ≤ k` and `r_λ^μ > 0`, if any.
///
/// Every such `λ` has `|λ| ≤ k|μ|`: writing `s_λ` through `e_ν` with
/// `ℓ(ν) ≤ k`, the degree-`|μ|` part of `F{e_ν}` is a sum over `M` on
/// `{0,1}^k` with `Σ_j M(j) = |μ|`, and `|ν| = Σ_j |j| M(j) ≤ k|μ|`.
///
/// The search reads all candidates at once. `r_λ^μ = ⟨s_{λ^T}, ω(s_μ[H])⟩`
/// and `λ^T` has at most `k` parts, so it suffices to specialize
/// `ω(s_μ[H])` to `k` variables, where it becomes the polynomial
/// `Σ_ρ χ_μ(ρ)/z_ρ Π_{r ∈ ρ} Π_i (1 - (-x_i)^r)` of degree at most `k|μ|`.
/// Multiplying by the Vandermonde determinant turns Schur coefficients into
/// coefficients of strictly decreasing exponent vectors.
pub fn witness_search(mu: &Partition, k: usize) -> Result<Option<Partition>> {
    let all = restriction_coefficients_with_short_rows(mu, k)?;
    Ok(all
        .into_iter()
        .filter(|(_, v)| v.is_positive())
        .map(|(lam, _)| lam)
        .min())
}

/// `(λ, r_λ^μ)` for every `λ` with `λ_1 ≤ k` and `r_λ^μ ≠ 0`.
pub(crate) fn restriction_coefficients_with_short_rows(
    mu: &Partition,
    k: usize,
) -> Result<Vec<(Partition, BigInt)>> {
    let n = mu.size();
    let max_deg = k * n + k * (k - 1) / 2;
    // Π_i (1 - (-x_i)^r) for each cycle length r
    let factor = |r: usize| {
        let mut f = MPoly::one(k);
        for i in 0..k {
            let mut g = MPoly::one(k);
            let sign = if r % 2 == 1 { 1 } else { -1 };
            g.add_assign(&MPoly::var_power(k, i, r).scale(&q(sign)));
            f = f.mul(&g, None);
        }
        f
    };
    let mut poly = MPoly::zero(k);
    for rho in partitions_of(n) {
        let c = chi(mu, &rho);
        if c == 0 {
            continue;
        }
        let mut term = MPoly::one(k);
        for &r in rho.parts() {
            term = term.mul(&factor(r), None);
        }
        let coeff = q(c) / BigRational::from_integer(rho.z_value());
        poly.add_assign(&term.scale(&coeff));
    }
    // Vandermonde Π_{i<j} (x_i - x_j)
    let mut vdm = MPoly::one(k);
    for i in 0..k {
        for j in i + 1..k {
            let mut d = MPoly::var_power(k, i, 1);
            d.add_assign(&MPoly::var_power(k, j, 1).scale(&q(-1)));
            vdm = vdm.mul(&d, None);
        }
    }
    let prod = poly.mul(&vdm, Some(max_deg));
    let mut out = Vec::new();
    for (exps, c) in prod.terms() {
        if c.is_zero() || exps.windows(2).any(|w| w[0] <= w[1]) {
            continue;
        }
        let nu: Vec<usize> = exps
            .iter()
            .enumerate()
            .map(|(i, &e)| e - (k - 1 - i))
            .collect();
        let nu = Partition::from_composition(&nu);
        if !c.is_integer() {
            return Err(Error::Integrality(format!(
                "restriction coefficient for {} came out as {c}",
                nu.conjugate()
            )));
        }
        out.push((nu.conjugate(), c.to_integer()));
    }
    Ok(out)
}

/// Checks `r_λ^{μ^(n)} = a_λ^μ` for `n` from `max(|λ| + |μ| + 1, μ_1 + |μ|)`
/// through two steps beyond, with `μ^(n) = (n - |μ|, μ)`. Both sides come
/// from their plethystic formulas.
pub fn stabilization_check(lambda: &Partition, mu: &Partition) -> Result<bool> {
    let a = coeff(&CoeffQuery::new(CoeffKind::A, lambda.clone(), mu.clone()))?;
    let start = (lambda.size() + mu.size() + 1).max(mu.part(0) + mu.size());
    for n in start..=start + 2 {
        let padded = mu.stable_pad(n)?;
        let r = coeff(&CoeffQuery::new(CoeffKind::R, lambda.clone(), padded))?;
        if r != a {
            return Ok(false);
        }
    }
    Ok(true)
}
