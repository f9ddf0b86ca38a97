//! Plethysm in the power-sum representation: `p_k[g]` replaces every `p_j`
//! in `g` by `p_{jk}`, and `f ↦ f[g]` is a ring homomorphism in `f`.

use std::collections::HashMap;

use super::terms::{self, Terms};
use crate::partition::Partition;

/// `p_k[g]`, dropping degrees above `cutoff`.
pub(crate) fn power_sum_of(k: usize, g: &Terms, cutoff: Option<usize>) -> Terms {
    let limit = cutoff.unwrap_or(usize::MAX);
    let mut out = Terms::new();
    for (lam, c) in g {
        if lam.size().saturating_mul(k) > limit {
            // terms are sorted by size, so nothing later fits either
            break;
        }
        terms::add_term(&mut out, lam.scale(k), c.clone());
    }
    out
}

/// Memoizes `p_λ[g]` for one fixed `g` and cutoff.
pub(crate) struct PowerSumPlethysms<'a> {
    g: &'a Terms,
    cutoff: Option<usize>,
    single: HashMap<usize, Terms>,
    products: HashMap<Partition, Terms>,
}

impl<'a> PowerSumPlethysms<'a> {
    pub(crate) fn new(g: &'a Terms, cutoff: Option<usize>) -> Self {
        PowerSumPlethysms {
            g,
            cutoff,
            single: HashMap::new(),
            products: HashMap::new(),
        }
    }

    pub(crate) fn get(&mut self, lam: &Partition) -> Terms {
        if lam.is_empty() {
            return terms::one();
        }
        if let Some(t) = self.products.get(lam) {
            return t.clone();
        }
        let k = lam.part(0);
        let (g, cutoff) = (self.g, self.cutoff);
        let head = self
            .single
            .entry(k)
            .or_insert_with(|| power_sum_of(k, g, cutoff))
            .clone();
        let tail = self.get(&lam.hat());
        let t = terms::mul(&head, &tail, self.cutoff);
        self.products.insert(lam.clone(), t.clone());
        t
    }
}

/// `f[g]` truncated at `cutoff`. When `g` has no constant term every
/// `p_λ[g]` starts in degree `|λ|`, so larger `λ` are skipped outright.
pub(crate) fn plethysm(f: &Terms, g: &Terms, cutoff: Option<usize>) -> Terms {
    let no_constant = !g.contains_key(&Partition::empty());
    let mut cache = PowerSumPlethysms::new(g, cutoff);
    let mut out = Terms::new();
    for (lam, c) in f {
        if no_constant && cutoff.is_some_and(|n| lam.size() > n) {
            break;
        }
        let t = cache.get(lam);
        terms::add_scaled(&mut out, &t, c);
    }
    out
}
