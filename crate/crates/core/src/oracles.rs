//! Independent routes used to cross-check the transforms: the roots-of-unity
//! formula for `F` and symmetric group characters.
//!
//! Nothing here depends on [`crate::frobenius`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use crate::characters::character as character_value;
use crate::error::{Error, Result};
use crate::partition::{partitions_up_to, Partition};
use crate::symfunc::terms::Terms;
use crate::symfunc::{SymFunc, SymSeries};

/// Evaluation at the eigenvalues `Ξ_μ` of a permutation matrix of cycle type
/// `μ`. The roots of unity never appear: `p_k(Ξ_μ) = Σ_{d|k} d·m_d(μ)`.
#[derive(Clone, Debug)]
pub struct EvalAtUnity {
    mu: Partition,
}

impl EvalAtUnity {
    pub fn new(mu: Partition) -> Self {
        EvalAtUnity { mu }
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn power_sum(&self, k: usize) -> BigInt {
        let v: usize = (1..=k)
            .filter(|d| k % d == 0)
            .map(|d| d * self.mu.multiplicity(d))
            .sum();
        BigInt::from(v)
    }

    /// `f(Ξ_μ)`, read off the power-sum expansion.
    pub fn eval(&self, f: &SymFunc) -> BigRational {
        let mut total = BigRational::zero();
        for (lam, c) in f.p_coefficients() {
            let prod = lam
                .parts()
                .iter()
                .fold(BigInt::one(), |acc, &k| acc * self.power_sum(k));
            total += c * BigRational::from_integer(prod);
        }
        total
    }

    /// `f(Ξ_μ)` for `f` with integer Schur coefficients, where it is a
    /// character value and hence an integer.
    pub fn eval_integer(&self, f: &SymFunc) -> Result<BigInt> {
        let v = self.eval(f);
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::Integrality(format!(
                "{f} at Xi_{} gave {v}",
                self.mu
            )))
        }
    }
}

/// `F{f} = Σ_μ f(Ξ_μ) p_μ / z_μ`, over `|μ| ≤ n`.
pub fn frobenius_via_roots(f: &SymFunc, n: usize) -> SymSeries {
    let mut terms = Terms::new();
    for mu in partitions_up_to(n) {
        let v = EvalAtUnity::new(mu.clone()).eval(f);
        if !v.is_zero() {
            let c = v / BigRational::from_integer(mu.z_value());
            terms.insert(mu, c);
        }
    }
    SymSeries::from_terms(terms, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::symfunc::terms::q;
    use crate::symfunc::Basis;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from_composition(v)
    }

    fn half() -> BigRational {
        BigRational::new(1.into(), 2.into())
    }

    #[test]
    fn series_of_one() {
        let got = frobenius_via_roots(&SymFunc::one(), 2).truncated();
        let p1 = SymFunc::p(1);
        let expected = SymFunc::one() + p1.clone() + (SymFunc::p(2) + p1.pow(2)).scale(&half());
        assert_eq!(got, expected);
    }

    #[test]
    fn degree_two_parts() {
        let s2 = SymFunc::from_basis(Basis::S, &p(&[2]));
        let got = frobenius_via_roots(&s2, 2).homogeneous(2).unwrap();
        let expected =
            SymFunc::p(1).pow(2).scale(&q(3)).scale(&half()) + SymFunc::p(2).scale(&half());
        assert_eq!(got, expected);

        let e1 = SymFunc::e(1);
        let got = frobenius_via_roots(&e1, 2).homogeneous(2).unwrap();
        assert_eq!(got, &e1 * &SymFunc::h(1));
    }

    #[test]
    fn characters() {
        for n in 0..=6 {
            for mu in partitions_of(n) {
                assert_eq!(character_value(&Partition::row(n), &mu).unwrap(), 1);
            }
        }
        assert_eq!(character_value(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(character_value(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert!(character_value(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=6 {
            let parts = partitions_of(n);
            for mu in &parts {
                for nu in &parts {
                    let s: i64 = parts
                        .iter()
                        .map(|l| character_value(l, mu).unwrap() * character_value(l, nu).unwrap())
                        .sum();
                    let expected = if mu == nu {
                        mu.z_value()
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(BigInt::from(s), expected);
                }
            }
        }
    }

    #[test]
    fn schur_values_are_integers() {
        for m in 0..=4 {
            for lam in partitions_of(m) {
                let s = SymFunc::from_basis(Basis::S, &lam);
                for mu in partitions_up_to(8) {
                    EvalAtUnity::new(mu).eval_integer(&s).unwrap();
                }
            }
        }
        // but not always nonnegative: e_2(1, -1) = -1
        let s11 = SymFunc::from_basis(Basis::S, &p(&[1, 1]));
        assert_eq!(
            EvalAtUnity::new(p(&[2])).eval_integer(&s11).unwrap(),
            BigInt::from(-1)
        );
        // trivial module: evaluations count fixed points of the action on monomials
        let h2 = SymFunc::h(2);
        assert_eq!(
            EvalAtUnity::new(p(&[2])).eval_integer(&h2).unwrap(),
            BigInt::from(1)
        );
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..4, 0..3).prop_map(|v| Partition::from_composition(&v))
    }

    proptest! {
        #[test]
        fn evaluation_is_multiplicative(a in arb_partition(), b in arb_partition(), mu in arb_partition()) {
            let f = SymFunc::from_basis(Basis::S, &a);
            let g = SymFunc::from_basis(Basis::H, &b);
            let ev = EvalAtUnity::new(mu);
            prop_assert_eq!(ev.eval(&(&f * &g)), ev.eval(&f) * ev.eval(&g));
            prop_assert_eq!(ev.eval(&(&f + &g)), ev.eval(&f) + ev.eval(&g));
        }
    }
}
