//! Generating-function identities for `F_Sur⁻¹` in auxiliary variables
//! `t_1, …, t_ℓ`, checked coefficientwise through a total degree.
//!
//! * `F_Sur⁻¹{1 / Π_i H(t_i)} = 1 / Π_{w ∈ Lyndon([ℓ])} H(t^w)`
//! * `F_Sur⁻¹{Π_i H(t_i)} = Π_{w ∈ Lyndon([ℓ])} H(t^w) / Π_{w ∈ Lyndon([ℓ]²)} H(t^w)`
//!
//! Here `1 / H(t) = Σ_r (-1)^r e_r t^r`, and for a word over `[ℓ]²` the
//! monomial `t^w` is the product of `t_i t_j` over its letters `(i, j)`.

use std::collections::BTreeMap;

use super::fsurinv;
use crate::lyndon::{enumerate_lyndon, Alphabet};
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};

/// Polynomial in `t_1..t_ℓ` with symmetric-function coefficients.
type TPoly = BTreeMap<Vec<usize>, SymFunc>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenFuncIdentity {
    /// The reciprocal-product identity, in terms of `e`.
    Reciprocal,
    /// The product identity, in terms of `h`, with the `[ℓ]²` alphabet.
    Product,
}

fn total(exp: &[usize]) -> usize {
    exp.iter().sum()
}

fn mul(a: &TPoly, b: &TPoly, max_deg: usize) -> TPoly {
    let mut out = TPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            if total(&e) > max_deg {
                continue;
            }
            let prod = ca * cb;
            let entry = out.entry(e).or_default();
            *entry += &prod;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `Σ_r c_r · t^{r·step}` with `c_r = e_r` (signed `(-1)^r`) or `h_r`,
/// through total degree `max_deg`.
fn single_factor(step: &[usize], basis: Basis, alternating: bool, max_deg: usize) -> TPoly {
    let w = total(step);
    let mut out = TPoly::new();
    let mut r = 0;
    while r * w <= max_deg {
        let mut c = SymFunc::from_basis(basis, &Partition::row(r));
        if alternating && r % 2 == 1 {
            c = -c;
        }
        out.insert(step.iter().map(|x| x * r).collect(), c);
        if w == 0 {
            break;
        }
        r += 1;
    }
    out
}

/// All exponent vectors of length `l` with total at most `max_deg`.
fn exponents(l: usize, max_deg: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                let used = total(&v);
                (0..=max_deg - used).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Left side: `F_Sur⁻¹` applied to each coefficient of `Π_i 1/H(t_i)` (resp.
/// `Π_i H(t_i)`), whose coefficient at `t^α` is `(-1)^{|α|} e_α` (resp. `h_α`).
fn left_side(l: usize, max_deg: usize, which: GenFuncIdentity) -> TPoly {
    exponents(l, max_deg)
        .into_iter()
        .map(|alpha| {
            let f = match which {
                GenFuncIdentity::Reciprocal => {
                    let e =
                        SymFunc::from_composition(Basis::E, &alpha).expect("e is multiplicative");
                    if total(&alpha) % 2 == 1 {
                        -e
                    } else {
                        e
                    }
                }
                GenFuncIdentity::Product => {
                    SymFunc::from_composition(Basis::H, &alpha).expect("h is multiplicative")
                }
            };
            (alpha, fsurinv(&f))
        })
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

fn right_side(l: usize, max_deg: usize, which: GenFuncIdentity) -> TPoly {
    let mut acc: TPoly = TPoly::from([(vec![0; l], SymFunc::one())]);
    let single = enumerate_lyndon(Alphabet::Range(l), max_deg);
    for content in single
        .iter()
        .flat_map(|(c, ws)| std::iter::repeat_n(c, ws.len()))
    {
        let f = match which {
            GenFuncIdentity::Reciprocal => single_factor(content, Basis::E, true, max_deg),
            GenFuncIdentity::Product => single_factor(content, Basis::H, false, max_deg),
        };
        acc = mul(&acc, &f, max_deg);
    }
    if which == GenFuncIdentity::Product {
        let pairs = Alphabet::Pairs(l);
        for ws in enumerate_lyndon(pairs, max_deg / 2).values() {
            for w in ws {
                let mut step = vec![0; l];
                for &x in w.letters() {
                    let (i, j) = pairs.unpair(x);
                    step[i - 1] += 1;
                    step[j - 1] += 1;
                }
                acc = mul(
                    &acc,
                    &single_factor(&step, Basis::E, true, max_deg),
                    max_deg,
                );
            }
        }
    }
    acc
}

/// Expands both sides through total degree `max_deg` in `t_1..t_l` and
/// compares them.
pub fn genfunc_identity_check(l: usize, max_deg: usize, which: GenFuncIdentity) -> bool {
    left_side(l, max_deg, which) == right_side(l, max_deg, which)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(genfunc_identity_check(1, 4, GenFuncIdentity::Reciprocal));
        assert!(genfunc_identity_check(2, 4, GenFuncIdentity::Reciprocal));
        assert!(genfunc_identity_check(1, 6, GenFuncIdentity::Product));
        assert!(genfunc_identity_check(2, 3, GenFuncIdentity::Product));
    }

    #[test]
    fn detects_a_wrong_side() {
        let mut right = right_side(1, 3, GenFuncIdentity::Product);
        right.insert(vec![3], SymFunc::h(3));
        assert_ne!(left_side(1, 3, GenFuncIdentity::Product), right);
    }
}
