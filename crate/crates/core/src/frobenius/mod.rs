//! The Frobenius transform and its relatives.
//!
//! For a symmetric function `f`, the Frobenius transform `F{f}` is the
//! symmetric power series whose degree-`n` part is the Frobenius character
//! of the `S_n`-module obtained by evaluating `f` on `K^n`. It factors as
//! `F{f} = F_Sur{f} · H` with `F_Sur{f}` a finite symmetric function of the
//! same degree and leading term, and `F_Sur` is the Hall adjoint of
//! plethysm by `H₊ = h_1 + h_2 + ⋯`. Its inverse is the adjoint of plethysm
//! by the plethystic inverse of `H₊`.
//!
//! Besides these operator routes, this module has the closed-form
//! expansions of `F_Sur` on `h`, `e` and `p` products ([`fsur_h_direct`] and
//! friends), the Lyndon-word formulas for the inverse ([`fsurinv_e_words`]),
//! the five families of restriction coefficients ([`coeff`]) and the
//! vanishing criteria.

mod adjoint;
mod coeff;
mod direct;
mod genfunc;
mod inverse;
mod vanishing;

pub use coeff::{
    coeff, coeff_by_operator, coeff_column, coeff_row, coeff_transposed, stable_matrix,
    stable_matrix_inverse, CoeffKind, CoeffMatrix, CoeffQuery,
};
pub use direct::{
    fsur_e_direct, fsur_h_direct, fsur_p_by_set_partitions, fsur_p_direct, functions_m,
    set_partitions, FunctionM,
};
pub use genfunc::{genfunc_identity_check, GenFuncIdentity};
pub use inverse::{
    e1_power_divides, falling_factorial, falling_factorial_divides, fsurinv_e_words,
    fsurinv_h_direct, fsurinveprod,
};
pub use vanishing::{
    durfee_criterion, stabilization_check, vanishing_check, witness_search, VanishingKind,
};

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::{partitions_up_to, Partition};
use crate::symfunc::{standard_series, Basis, StandardSeries, SymFunc, SymSeries};

/// The surjective Frobenius transform `F_Sur`.
pub fn fsur(f: &SymFunc) -> SymFunc {
    adjoint::adjoint_of_plethysm(StandardSeries::HPlus, f)
}

/// Which computation of `F_Sur⁻¹` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum InverseRoute {
    /// Adjoint of plethysm by `ω(L_1) - ω(L_2) + ⋯`.
    #[default]
    Cadogan,
    /// `f + M f + M² f + ⋯` with `M = id - F_Sur`; terminates because `M`
    /// strictly lowers degree.
    Iteration,
}

/// The inverse surjective Frobenius transform.
pub fn fsurinv(f: &SymFunc) -> SymFunc {
    fsurinv_with(f, InverseRoute::Cadogan)
}

pub fn fsurinv_with(f: &SymFunc, route: InverseRoute) -> SymFunc {
    match route {
        InverseRoute::Cadogan => adjoint::adjoint_of_plethysm(StandardSeries::Cadogan, f),
        InverseRoute::Iteration => {
            let mut total = f.clone();
            let mut cur = f.clone();
            while !cur.is_zero() {
                cur = &cur - &fsur(&cur);
                total += &cur;
            }
            total
        }
    }
}

/// `F{f} = F_Sur{f} · H`, known through degree `n`.
pub fn frobenius_series(f: &SymFunc, n: usize) -> SymSeries {
    standard_series(StandardSeries::H, n).mul_symfunc(&fsur(f))
}

/// `Σ_λ s_λ · (s_λ[h_2 + h_3 + ⋯])^⊥ f`. The plethysm starts in degree
/// `2|λ|`, so only `2|λ| ≤ deg f` contributes.
pub fn fsur_expansion(f: &SymFunc) -> SymFunc {
    let deg = f.degree();
    let hgeq2 = standard_series(StandardSeries::HGeq2, deg);
    let mut total = SymFunc::zero();
    for lam in partitions_up_to(deg / 2) {
        let s = SymFunc::from_basis(Basis::S, &lam);
        let op = s.plethysm_series(&hgeq2);
        let skewed = f.skewed_by(&op).expect("series known through deg f");
        if !skewed.is_zero() {
            total += &(&s * &skewed);
        }
    }
    total
}

/// The stable transform `f ↦ H^⊥ F_Sur{f}`, whose Schur matrix is `[a]`.
pub fn stable_transform(f: &SymFunc) -> SymFunc {
    let fs = fsur(f);
    let h = standard_series(StandardSeries::H, fs.degree());
    fs.skewed_by(&h).expect("series known through degree")
}

/// Inverse of [`stable_transform`]: `F_Sur⁻¹ ((1 - e_1 + e_2 - ⋯)^⊥ f)`.
pub fn stable_transform_inverse(f: &SymFunc) -> SymFunc {
    let emin = standard_series(StandardSeries::EMinus, f.degree());
    fsurinv(&f.skewed_by(&emin).expect("series known through degree"))
}

/// `h̃_λ = F_Sur⁻¹{h_λ}`.
pub fn tilde_h(lambda: &Partition) -> SymFunc {
    fsurinv(&SymFunc::from_basis(Basis::H, lambda))
}

/// `s̃_λ = F_Sur⁻¹{H^⊥ s_λ}`.
pub fn tilde_s(lambda: &Partition) -> SymFunc {
    let s = SymFunc::from_basis(Basis::S, lambda);
    let h = standard_series(StandardSeries::H, lambda.size());
    fsurinv(&s.skewed_by(&h).expect("series known through degree"))
}

/// Integer coordinates of a transform output. A non-integer here means a
/// bug, so it is reported as [`Error::Integrality`].
pub fn integral_output(f: &SymFunc, basis: Basis) -> Result<BTreeMap<Partition, BigInt>> {
    f.to_basis_integral(basis).map_err(|e| match e {
        Error::NonIntegral { .. } => Error::Integrality(e.to_string()),
        other => other,
    })
}

#[cfg(test)]
mod tests;
