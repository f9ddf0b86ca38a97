//! Sparse power-sum coefficient maps and the arithmetic shared by finite
//! symmetric functions and truncated series.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partition::Partition;

/// `p_λ ↦ coefficient`. Never stores zeros.
pub(crate) type Terms = BTreeMap<Partition, BigRational>;

pub(crate) fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn add_term(t: &mut Terms, p: Partition, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match t.entry(p) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn add_scaled(t: &mut Terms, other: &Terms, c: &BigRational) {
    if c.is_zero() {
        return;
    }
    for (p, v) in other {
        if c.is_one() {
            add_term(t, p.clone(), v.clone());
        } else {
            add_term(t, p.clone(), v * c);
        }
    }
}

pub(crate) fn degree(t: &Terms) -> usize {
    t.keys().next_back().map_or(0, Partition::size)
}

pub(crate) fn truncate(t: &Terms, cutoff: usize) -> Terms {
    t.iter()
        .take_while(|(p, _)| p.size() <= cutoff)
        .map(|(p, c)| (p.clone(), c.clone()))
        .collect()
}

/// Product in the power-sum basis, dropping degrees above `cutoff`.
pub(crate) fn mul(a: &Terms, b: &Terms, cutoff: Option<usize>) -> Terms {
    let mut out = Terms::new();
    let limit = cutoff.unwrap_or(usize::MAX);
    for (pa, ca) in a {
        let da = pa.size();
        if da > limit {
            break;
        }
        for (pb, cb) in b {
            if da + pb.size() > limit {
                break;
            }
            add_term(&mut out, pa.union(pb), ca * cb);
        }
    }
    out
}

pub(crate) fn pow(a: &Terms, k: usize, cutoff: Option<usize>) -> Terms {
    let mut acc = one();
    for _ in 0..k {
        acc = mul(&acc, a, cutoff);
    }
    acc
}

pub(crate) fn one() -> Terms {
    let mut t = Terms::new();
    t.insert(Partition::empty(), BigRational::one());
    t
}

pub(crate) fn kronecker(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    for (p, ca) in small {
        if let Some(cb) = large.get(p) {
            let z = BigRational::from_integer(p.z_value());
            add_term(&mut out, p.clone(), ca * cb * z);
        }
    }
    out
}

pub(crate) fn omega(a: &Terms) -> Terms {
    a.iter()
        .map(|(p, c)| (p.clone(), if p.sign() == 1 { c.clone() } else { -c }))
        .collect()
}

/// Multiset difference `λ \ ρ` together with the constant produced by
/// `p_ρ^⊥ p_λ = ∏_j j^{m_j(ρ)} (m_j(λ))_{m_j(ρ)} p_{λ \ ρ}`; `None` if
/// `ρ` is not a sub-multiset of `λ`.
pub(crate) fn skew_monomial(lambda: &Partition, rho: &Partition) -> Option<(Partition, BigInt)> {
    let mut rest = Vec::with_capacity(lambda.len());
    let mut factor = BigInt::one();
    let lm = lambda.multiplicities();
    let rm = rho.multiplicities();
    let mut ri = 0;
    for (part, mult) in lm {
        let take = match rm.get(ri) {
            Some(&(rp, rmult)) if rp == part => {
                ri += 1;
                rmult
            }
            Some(&(rp, _)) if rp > part => return None,
            _ => 0,
        };
        if take > mult {
            return None;
        }
        for i in 0..take {
            factor *= part;
            factor *= mult - i;
        }
        rest.extend(std::iter::repeat_n(part, mult - take));
    }
    if ri < rm.len() {
        return None;
    }
    Some((Partition::from_sorted_unchecked(rest), factor))
}

/// `Σ_{μ ⊢ n} p_μ / z_μ`.
pub(crate) fn h_expansion(n: usize) -> Terms {
    crate::partition::partitions_of(n)
        .into_iter()
        .map(|mu| {
            let z = BigRational::from_integer(mu.z_value());
            (mu, z.recip())
        })
        .collect()
}

/// `Σ_{μ ⊢ n} ε_μ p_μ / z_μ`.
pub(crate) fn e_expansion(n: usize) -> Terms {
    crate::partition::partitions_of(n)
        .into_iter()
        .map(|mu| {
            let z = BigRational::from_integer(mu.z_value()).recip();
            let c = if mu.sign() == 1 { z } else { -z };
            (mu, c)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn skew_monomial_cases() {
        assert_eq!(
            skew_monomial(&p(&[2, 1, 1]), &p(&[1])),
            Some((p(&[2, 1]), BigInt::from(2)))
        );
        assert_eq!(
            skew_monomial(&p(&[2, 2]), &p(&[2, 2])),
            Some((Partition::empty(), BigInt::from(8)))
        );
        assert_eq!(skew_monomial(&p(&[2, 1]), &p(&[3])), None);
        assert_eq!(skew_monomial(&p(&[2, 1]), &p(&[1, 1])), None);
        assert_eq!(
            skew_monomial(&p(&[3]), &Partition::empty()),
            Some((p(&[3]), BigInt::from(1)))
        );
    }
}
