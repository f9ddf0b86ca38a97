//! Word formulas for `F_Sur⁻¹` on products of `e` and `h`, and the
//! divisibility criterion they imply.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::lyndon::{pi_of_word, words_with_content};
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};

fn signed_e_sum(entries: impl IntoIterator<Item = (Partition, i64)>) -> SymFunc {
    let mut counts: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (p, c) in entries {
        *counts.entry(p).or_insert_with(BigRational::zero) += BigRational::from_integer(c.into());
    }
    counts.retain(|_, c| !c.is_zero());
    SymFunc::from_basis_coefficients(Basis::E, counts.iter())
}

fn sign(exp: usize) -> i64 {
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `F_Sur⁻¹{e_λ} = Σ_w (-1)^{|λ| - |π(w)|} e_{π(w)}` over all words `w` over
/// `[ℓ]` with `λ_i` copies of letter `i`. `λ` may be any composition,
/// zeros included.
pub fn fsurinv_e_words(lambda: &[usize]) -> SymFunc {
    let total: usize = lambda.iter().sum();
    signed_e_sum(words_with_content(lambda).into_iter().map(|w| {
        let pi = pi_of_word(&w);
        let s = sign(total - pi.size());
        (pi, s)
    }))
}

/// `Σ_{k ≤ r/2} (-1)^k h_{r-2k} e_k`, which equals `F_Sur⁻¹{h_r}`.
pub fn fsurinv_h_direct(r: usize) -> SymFunc {
    (0..=r / 2)
        .map(|k| {
            let t = &SymFunc::h(r - 2 * k) * &SymFunc::e(k);
            if k % 2 == 1 {
                -t
            } else {
                t
            }
        })
        .sum()
}

/// `e_1 (e_1 - 1) ⋯ (e_1 - k + 1)`.
pub fn falling_factorial(k: usize) -> SymFunc {
    let e1 = SymFunc::e(1);
    (0..k).fold(SymFunc::one(), |acc, i| {
        &acc * &(&e1 - &SymFunc::integer(i as i64))
    })
}

/// The product formula for `F_Sur⁻¹{e_λ e_1^k}`: words `w` over
/// `{0} ∪ [ℓ]` with `k` zeros and `λ_i` copies of `i`, weighted by the
/// statistic of `p_+(w)`, the longest prefix free of `0`; the sum is then
/// multiplied by [`falling_factorial`]`(k)`.
pub fn fsurinveprod(lambda: &[usize], k: usize) -> SymFunc {
    let total: usize = lambda.iter().sum();
    let mut content = Vec::with_capacity(lambda.len() + 1);
    content.push(k);
    content.extend_from_slice(lambda);
    // letter 1 plays the role of 0; the others keep their relative order
    let sum = signed_e_sum(words_with_content(&content).into_iter().map(|w| {
        let end = w.iter().position(|&x| x == 1).unwrap_or(w.len());
        let pi = pi_of_word(&w[..end]);
        let s = sign(total - pi.size());
        (pi, s)
    }));
    &sum * &falling_factorial(k)
}

/// Whether `e_1^k` divides `f`: every monomial of `f` in the
/// (algebraically independent) `e_i` has `e_1` to a power at least `k`.
pub fn e1_power_divides(f: &SymFunc, k: usize) -> bool {
    f.to_basis(Basis::E)
        .keys()
        .all(|lam| lam.multiplicity(1) >= k)
}

/// Whether `e_1 (e_1 - 1) ⋯ (e_1 - k + 1)` divides `f`. Writing `f` as a
/// polynomial in `e_1` with coefficients in the other `e_i`, this holds iff
/// each coefficient polynomial vanishes at `e_1 = 0, 1, …, k - 1`, i.e. iff
/// each is divisible by the monic falling factorial.
pub fn falling_factorial_divides(f: &SymFunc, k: usize) -> bool {
    let mut groups: BTreeMap<Partition, BTreeMap<usize, BigRational>> = BTreeMap::new();
    for (lam, c) in f.to_basis(Basis::E) {
        let ones = lam.multiplicity(1);
        let rest: Vec<usize> = lam.parts().iter().copied().filter(|&p| p > 1).collect();
        groups
            .entry(Partition::from_composition(&rest))
            .or_default()
            .insert(ones, c);
    }
    groups.values().all(|poly| {
        (0..k).all(|x| {
            let x = BigInt::from(x);
            poly.iter()
                .map(|(&e, c)| c * BigRational::from_integer(x.pow(e as u32)))
                .fold(BigRational::zero(), |a, b| a + b)
                .is_zero()
        })
    })
}
