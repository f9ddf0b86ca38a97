//! Sparse polynomials in finitely many commuting variables with rational
//! coefficients. Used to specialize symmetric functions to finitely many
//! variables.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exponent vector → coefficient; no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<usize>, BigRational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, vec![0; nvars], BigRational::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<usize>, coeff: BigRational) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    /// `x_i^k` (zero-based variable index).
    pub fn var_power(nvars: usize, i: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = k;
        Self::monomial(nvars, e, BigRational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[usize]) -> BigRational {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<usize>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_assign(&mut self, other: &MPoly) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        let mut out = Self::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    /// Product, dropping monomials of total degree above `max_degree` if given.
    pub fn mul(&self, other: &MPoly, max_degree: Option<usize>) -> MPoly {
        let mut acc: BTreeMap<Vec<usize>, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            let d1: usize = e1.iter().sum();
            for (e2, c2) in &other.terms {
                if let Some(m) = max_degree {
                    if d1 + e2.iter().sum::<usize>() > m {
                        continue;
                    }
                }
                let e: Vec<usize> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        MPoly {
            nvars: self.nvars,
            terms: acc,
        }
    }
}
