//! Per-degree transition data between the power-sum basis and the m/e/h/s
//! bases, memoized process-wide.
//!
//! * `s`: character values, `s_λ = Σ χ_λ(μ) p_μ / z_μ` and `p_μ = Σ χ_λ(μ) s_λ`.
//! * `m`: `p_μ = Σ R_{μλ} m_λ` where `R_{μλ}` counts the ways to distribute
//!   the parts of μ into ℓ(λ) labelled bins with sums λ; `m = R⁻¹ p`.
//! * `h`, `e`: products of the one-part expansions; coordinates are read off
//!   by pairing against the dual bases `m` and `ω m`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::terms::{self, Terms};
use super::Basis;
use crate::characters::chi;
use crate::linalg;
use crate::partition::{partitions_of, Partition};

pub(crate) struct Transition {
    /// Basis element → power-sum expansion.
    pub to_p: HashMap<Partition, Terms>,
    /// `p_μ` → expansion in the basis.
    pub from_p: HashMap<Partition, Vec<(Partition, BigRational)>>,
}

type Cache = RwLock<HashMap<(Basis, usize), Arc<Transition>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub(crate) fn transition(basis: Basis, n: usize) -> Arc<Transition> {
    if let Some(t) = cache().read().unwrap().get(&(basis, n)) {
        return Arc::clone(t);
    }
    let t = Arc::new(build(basis, n));
    cache()
        .write()
        .unwrap()
        .entry((basis, n))
        .or_insert(t)
        .clone()
}

fn build(basis: Basis, n: usize) -> Transition {
    let parts = partitions_of(n);
    match basis {
        Basis::P => Transition {
            to_p: parts
                .iter()
                .map(|l| {
                    (
                        l.clone(),
                        std::iter::once((l.clone(), terms::q(1))).collect(),
                    )
                })
                .collect(),
            from_p: parts
                .iter()
                .map(|l| (l.clone(), vec![(l.clone(), terms::q(1))]))
                .collect(),
        },
        Basis::S => {
            let mut to_p = HashMap::new();
            let mut from_p: HashMap<Partition, Vec<(Partition, BigRational)>> = HashMap::new();
            for lam in &parts {
                let mut row = Terms::new();
                for mu in &parts {
                    let c = chi(lam, mu);
                    if c != 0 {
                        let z = BigRational::from_integer(mu.z_value());
                        row.insert(mu.clone(), terms::q(c) / z);
                        from_p
                            .entry(mu.clone())
                            .or_default()
                            .push((lam.clone(), terms::q(c)));
                    }
                }
                to_p.insert(lam.clone(), row);
            }
            Transition { to_p, from_p }
        }
        Basis::M => {
            let r: Vec<Vec<BigRational>> = parts
                .iter()
                .map(|mu| {
                    parts
                        .iter()
                        .map(|lam| BigRational::from_integer(distribution_count(mu, lam)))
                        .collect()
                })
                .collect();
            let inv = linalg::invert(r.clone()).expect("monomial transition is unitriangular");
            let mut to_p = HashMap::new();
            for (i, lam) in parts.iter().enumerate() {
                let row: Terms = parts
                    .iter()
                    .zip(&inv[i])
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(mu, c)| (mu.clone(), c.clone()))
                    .collect();
                to_p.insert(lam.clone(), row);
            }
            let from_p = parts
                .iter()
                .zip(&r)
                .map(|(mu, row)| {
                    let v = parts
                        .iter()
                        .zip(row)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(l, c)| (l.clone(), c.clone()))
                        .collect();
                    (mu.clone(), v)
                })
                .collect();
            Transition { to_p, from_p }
        }
        Basis::H | Basis::E => {
            let single: Vec<Terms> = (0..=n)
                .map(|k| {
                    if basis == Basis::H {
                        terms::h_expansion(k)
                    } else {
                        terms::e_expansion(k)
                    }
                })
                .collect();
            let mut to_p = HashMap::new();
            for lam in &parts {
                let row = lam
                    .parts()
                    .iter()
                    .fold(terms::one(), |acc, &k| terms::mul(&acc, &single[k], None));
                to_p.insert(lam.clone(), row);
            }
            // Coefficient of h_λ (resp. e_λ) in f is ⟨f, m_λ⟩ (resp. ⟨f, ω m_λ⟩).
            let m = transition(Basis::M, n);
            let mut from_p: HashMap<Partition, Vec<(Partition, BigRational)>> = HashMap::new();
            for lam in &parts {
                for (mu, c) in &m.to_p[lam] {
                    let mut v = c * BigRational::from_integer(mu.z_value());
                    if basis == Basis::E && mu.sign() == -1 {
                        v = -v;
                    }
                    from_p.entry(mu.clone()).or_default().push((lam.clone(), v));
                }
            }
            Transition { to_p, from_p }
        }
    }
}

/// Number of maps from the parts of `mu` to `ℓ(λ)` labelled bins such that
/// bin `j` receives total `λ_j`; the coefficient of `m_λ` in `p_μ`.
pub(crate) fn distribution_count(mu: &Partition, lam: &Partition) -> BigInt {
    if mu.size() != lam.size() {
        return BigInt::zero();
    }
    fn rec(
        idx: usize,
        parts: &[usize],
        remaining: &mut Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), BigInt>,
    ) -> BigInt {
        if idx == parts.len() {
            return BigInt::from(u8::from(remaining.iter().all(|&r| r == 0)));
        }
        let key = (idx, remaining.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for j in 0..remaining.len() {
            if remaining[j] >= parts[idx] {
                remaining[j] -= parts[idx];
                total += rec(idx + 1, parts, remaining, memo);
                remaining[j] += parts[idx];
            }
        }
        memo.insert(key, total.clone());
        total
    }
    let mut remaining = lam.parts().to_vec();
    rec(0, mu.parts(), &mut remaining, &mut HashMap::new())
}
