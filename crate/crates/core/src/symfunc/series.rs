//! Degree-truncated symmetric power series.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::plethysm;
use super::terms::{self, Terms};
use super::{to_basis_terms, Basis, Graded, SymFunc};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// An element of the completion of Λ, known exactly through degree
/// `cutoff` and unknown beyond it.
#[derive(Clone, PartialEq, Eq)]
pub struct SymSeries {
    terms: Terms,
    cutoff: usize,
}

impl Graded for SymSeries {
    fn p_terms(&self) -> &Terms {
        &self.terms
    }

    fn known_through(&self) -> Option<usize> {
        Some(self.cutoff)
    }
}

impl SymSeries {
    pub(crate) fn from_terms(t: Terms, cutoff: usize) -> Self {
        let terms = if terms::degree(&t) > cutoff {
            terms::truncate(&t, cutoff)
        } else {
            t
        };
        SymSeries { terms, cutoff }
    }

    /// Embeds a finite function; terms above `cutoff` are dropped.
    pub fn from_symfunc(f: &SymFunc, cutoff: usize) -> Self {
        Self::from_terms(f.p_terms().clone(), cutoff)
    }

    pub fn zero(cutoff: usize) -> Self {
        SymSeries {
            terms: Terms::new(),
            cutoff,
        }
    }

    pub fn one(cutoff: usize) -> Self {
        SymSeries {
            terms: terms::one(),
            cutoff,
        }
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Forgets everything above degree `n` (no-op if `n ≥ cutoff`).
    pub fn with_cutoff(&self, n: usize) -> Self {
        Self::from_terms(self.terms.clone(), n.min(self.cutoff))
    }

    /// The known part as a finite function.
    pub fn truncated(&self) -> SymFunc {
        SymFunc::from_terms(self.terms.clone())
    }

    pub fn homogeneous(&self, d: usize) -> Result<SymFunc> {
        if d > self.cutoff {
            return Err(Error::Precision {
                needed: d,
                cutoff: self.cutoff,
            });
        }
        Ok(self.truncated().homogeneous(d))
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&Partition::empty())
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn p_coefficients(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn to_basis(&self, basis: Basis) -> BTreeMap<Partition, BigRational> {
        to_basis_terms(&self.terms, basis)
    }

    pub fn to_basis_integral(&self, basis: Basis) -> Result<BTreeMap<Partition, BigInt>> {
        super::integral(self.to_basis(basis), basis)
    }

    pub fn add(&self, other: &SymSeries) -> SymSeries {
        let n = self.cutoff.min(other.cutoff);
        let mut t = terms::truncate(&self.terms, n);
        for (p, c) in other.terms.iter().take_while(|(p, _)| p.size() <= n) {
            terms::add_term(&mut t, p.clone(), c.clone());
        }
        SymSeries {
            terms: t,
            cutoff: n,
        }
    }

    pub fn sub(&self, other: &SymSeries) -> SymSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymSeries {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> SymSeries {
        let mut t = Terms::new();
        terms::add_scaled(&mut t, &self.terms, c);
        SymSeries {
            terms: t,
            cutoff: self.cutoff,
        }
    }

    pub fn mul(&self, other: &SymSeries) -> SymSeries {
        let n = self.cutoff.min(other.cutoff);
        SymSeries {
            terms: terms::mul(&self.terms, &other.terms, Some(n)),
            cutoff: n,
        }
    }

    /// Product with a finite function; the cutoff is unchanged.
    pub fn mul_symfunc(&self, f: &SymFunc) -> SymSeries {
        SymSeries {
            terms: terms::mul(&self.terms, f.p_terms(), Some(self.cutoff)),
            cutoff: self.cutoff,
        }
    }

    pub fn omega(&self) -> SymSeries {
        SymSeries {
            terms: terms::omega(&self.terms),
            cutoff: self.cutoff,
        }
    }

    pub fn kronecker(&self, other: &SymSeries) -> SymSeries {
        let n = self.cutoff.min(other.cutoff);
        SymSeries::from_terms(terms::kronecker(&self.terms, &other.terms), n)
    }

    /// Plethysm `self[inner]` of two series; `inner` must have no constant
    /// term. Known through the smaller of the two cutoffs.
    pub fn plethysm(&self, inner: &SymSeries) -> Result<SymSeries> {
        if !inner.constant_term().is_zero() {
            return Err(Error::ConstantTerm);
        }
        let n = self.cutoff.min(inner.cutoff);
        Ok(SymSeries {
            terms: plethysm::plethysm(&self.terms, &inner.terms, Some(n)),
            cutoff: n,
        })
    }
}

impl fmt::Debug for SymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(deg > {})", self.truncated(), self.cutoff)
    }
}

/// Named series used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardSeries {
    /// `H = 1 + h_1 + h_2 + ⋯`
    H,
    /// `H₊ = h_1 + h_2 + ⋯`
    HPlus,
    /// `E = 1 + e_1 + e_2 + ⋯`
    E,
    /// `1 - e_1 + e_2 - ⋯`
    EMinus,
    /// `L_n = (1/n) Σ_{d | n} μ(d) p_d^{n/d}`
    Lyndon(usize),
    /// `L_1 + L_2 + ⋯`
    LyndonSum,
    /// `ω(L_1) - ω(L_2) + ω(L_3) - ⋯`, the plethystic inverse of `H₊`.
    Cadogan,
    /// `h_2 + h_3 + ⋯`
    HGeq2,
}

impl fmt::Display for StandardSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardSeries::H => write!(f, "H"),
            StandardSeries::HPlus => write!(f, "Hplus"),
            StandardSeries::E => write!(f, "E"),
            StandardSeries::EMinus => write!(f, "Emin"),
            StandardSeries::Lyndon(n) => write!(f, "Lyndon({n})"),
            StandardSeries::LyndonSum => write!(f, "LyndonSum"),
            StandardSeries::Cadogan => write!(f, "Cadogan"),
            StandardSeries::HGeq2 => write!(f, "Hgeq2"),
        }
    }
}

impl FromStr for StandardSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "H" => StandardSeries::H,
            "Hplus" => StandardSeries::HPlus,
            "E" => StandardSeries::E,
            "Emin" => StandardSeries::EMinus,
            "LyndonSum" => StandardSeries::LyndonSum,
            "Cadogan" => StandardSeries::Cadogan,
            "Hgeq2" => StandardSeries::HGeq2,
            _ => {
                let n = s
                    .strip_prefix("Lyndon(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|r| r.trim().parse().ok())
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown series {s:?}")))?;
                StandardSeries::Lyndon(n)
            }
        })
    }
}

/// `name` truncated at degree `n`.
pub fn standard_series(name: StandardSeries, n: usize) -> SymSeries {
    let mut t = Terms::new();
    match name {
        StandardSeries::H | StandardSeries::HPlus | StandardSeries::HGeq2 => {
            let start = match name {
                StandardSeries::H => 0,
                StandardSeries::HPlus => 1,
                _ => 2,
            };
            for k in start..=n {
                t.extend(terms::h_expansion(k));
            }
        }
        StandardSeries::E | StandardSeries::EMinus => {
            for k in 0..=n {
                let e = terms::e_expansion(k);
                if name == StandardSeries::EMinus && k % 2 == 1 {
                    t.extend(e.into_iter().map(|(p, c)| (p, -c)));
                } else {
                    t.extend(e);
                }
            }
        }
        StandardSeries::Lyndon(k) => {
            if k <= n && k > 0 {
                t = lyndon_terms(k);
            }
        }
        StandardSeries::LyndonSum => {
            for k in 1..=n {
                t.extend(lyndon_terms(k));
            }
        }
        StandardSeries::Cadogan => {
            for k in 1..=n {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                terms::add_scaled(&mut t, &terms::omega(&lyndon_terms(k)), &terms::q(sign));
            }
        }
    }
    SymSeries::from_terms(t, n)
}

/// `L_n` in power sums.
fn lyndon_terms(n: usize) -> Terms {
    let mut t = Terms::new();
    let inv_n = BigRational::new(BigInt::one(), BigInt::from(n));
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let lam = Partition::from_sorted_unchecked(vec![d; n / d]);
        terms::add_term(&mut t, lam, &inv_n * terms::q(mu));
    }
    t
}

/// The Möbius function.
pub(crate) fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(mobius(i + 1), e, "mu({})", i + 1);
        }
    }

    #[test]
    fn names_round_trip() {
        for s in [
            StandardSeries::H,
            StandardSeries::HPlus,
            StandardSeries::E,
            StandardSeries::EMinus,
            StandardSeries::Lyndon(4),
            StandardSeries::LyndonSum,
            StandardSeries::Cadogan,
            StandardSeries::HGeq2,
        ] {
            assert_eq!(s.to_string().parse::<StandardSeries>().unwrap(), s);
        }
        assert!("Lyndon(x)".parse::<StandardSeries>().is_err());
    }

    #[test]
    fn cutoff_is_respected() {
        let h = standard_series(StandardSeries::H, 3);
        assert_eq!(h.cutoff(), 3);
        assert!(h.p_coefficients().all(|(p, _)| p.size() <= 3));
        let mixed = h.mul(&standard_series(StandardSeries::E, 5));
        assert_eq!(mixed.cutoff(), 3);
        assert!(standard_series(StandardSeries::Lyndon(4), 3).is_zero());
    }

    #[test]
    fn series_plethysm_rejects_constant_term() {
        let h = standard_series(StandardSeries::H, 4);
        assert_eq!(h.plethysm(&h), Err(Error::ConstantTerm));
        assert!(h
            .plethysm(&standard_series(StandardSeries::HPlus, 4))
            .is_ok());
    }
}
