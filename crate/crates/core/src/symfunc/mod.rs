//! Exact symmetric functions.
//!
//! Every element is stored in the power-sum basis with arbitrary-precision
//! rational coefficients. In that representation the Kronecker product is
//! diagonal, `ω` is a sign flip and plethysm is substitution `p_j ↦ p_{jk}`;
//! the other bases (`m`, `e`, `h`, `s`) are reached through memoized
//! per-degree transitions.
//!
//! [`SymFunc`] is a finite element of Λ. [`SymSeries`] is an element of the
//! completion truncated at an explicit cutoff degree; any operation that
//! would need terms beyond the cutoff fails with [`Error::Precision`] instead
//! of silently truncating.

mod json;
pub(crate) mod plethysm;
pub(crate) mod series;
pub(crate) mod terms;
pub(crate) mod transition;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::partition::Partition;
pub use json::{ElementJson, TermJson};
pub use series::{standard_series, StandardSeries, SymSeries};
use terms::Terms;

/// The five classical bases of Λ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn tag(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
        }
    }

    /// Whether the basis is multiplicative, so that compositions may be
    /// sorted into partitions without changing the element.
    pub fn is_multiplicative(self) -> bool {
        matches!(self, Basis::E | Basis::H | Basis::P)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            _ => Err(Error::InvalidArgument(format!("unknown basis {s:?}"))),
        }
    }
}

/// Anything graded and stored in power sums: a finite function, or a series
/// known through some cutoff.
pub trait Graded {
    #[doc(hidden)]
    fn p_terms(&self) -> &BTreeMap<Partition, BigRational>;
    /// Highest degree known exactly; `None` for finite elements.
    fn known_through(&self) -> Option<usize>;
}

/// A finite symmetric function.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: Terms,
}

impl Graded for SymFunc {
    fn p_terms(&self) -> &Terms {
        &self.terms
    }

    fn known_through(&self) -> Option<usize> {
        None
    }
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::p_term(Partition::empty(), c)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(terms::q(n))
    }

    /// `c · p_λ`.
    pub fn p_term(lambda: Partition, c: BigRational) -> Self {
        let mut t = Terms::new();
        terms::add_term(&mut t, lambda, c);
        SymFunc { terms: t }
    }

    pub(crate) fn from_terms(terms: Terms) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        SymFunc { terms }
    }

    /// Builds from explicit power-sum coefficients.
    pub fn from_p_coefficients<I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = (Partition, BigRational)>,
    {
        let mut t = Terms::new();
        for (p, c) in coeffs {
            terms::add_term(&mut t, p, c);
        }
        SymFunc { terms: t }
    }

    /// The basis element `b_λ`.
    pub fn from_basis(basis: Basis, lambda: &Partition) -> Self {
        if basis == Basis::P {
            return Self::p_term(lambda.clone(), BigRational::one());
        }
        let t = transition::transition(basis, lambda.size());
        SymFunc {
            terms: t.to_p[lambda].clone(),
        }
    }

    /// `b_α` for a composition α of a multiplicative basis (`e`, `h`, `p`).
    pub fn from_composition(basis: Basis, parts: &[usize]) -> Result<Self> {
        if !basis.is_multiplicative() {
            return Err(Error::InvalidArgument(format!(
                "basis {basis} is not multiplicative; composition index {parts:?} is ambiguous"
            )));
        }
        Ok(Self::from_basis(basis, &Partition::from_composition(parts)))
    }

    /// `Σ c_λ b_λ`.
    pub fn from_basis_coefficients<'a, I>(basis: Basis, coeffs: I) -> Self
    where
        I: IntoIterator<Item = (&'a Partition, &'a BigRational)>,
    {
        let mut out = Terms::new();
        for (lam, c) in coeffs {
            terms::add_scaled(&mut out, Self::from_basis(basis, lam).p_terms(), c);
        }
        SymFunc { terms: out }
    }

    pub fn h(n: usize) -> Self {
        Self::from_basis(Basis::H, &Partition::row(n))
    }

    pub fn e(n: usize) -> Self {
        Self::from_basis(Basis::E, &Partition::row(n))
    }

    pub fn p(n: usize) -> Self {
        Self::from_basis(Basis::P, &Partition::row(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest degree with a nonzero term (0 for the zero function).
    pub fn degree(&self) -> usize {
        terms::degree(&self.terms)
    }

    /// Power-sum coefficients in canonical partition order.
    pub fn p_coefficients(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn p_coefficient(&self, lambda: &Partition) -> BigRational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.p_coefficient(&Partition::empty())
    }

    /// Degree-`d` homogeneous component.
    pub fn homogeneous(&self, d: usize) -> Self {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// The top-degree homogeneous component.
    pub fn top_component(&self) -> Self {
        self.homogeneous(self.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.degree();
        self.terms.keys().all(|p| p.size() == d)
    }

    /// Coordinates in `basis`, exact and rational.
    pub fn to_basis(&self, basis: Basis) -> BTreeMap<Partition, BigRational> {
        to_basis_terms(&self.terms, basis)
    }

    /// Integer coordinates in `basis`, or [`Error::NonIntegral`].
    pub fn to_basis_integral(&self, basis: Basis) -> Result<BTreeMap<Partition, BigInt>> {
        integral(self.to_basis(basis), basis)
    }

    /// `⟨self, s_λ⟩` for all λ, as integers.
    pub fn schur_coefficients(&self) -> Result<BTreeMap<Partition, BigInt>> {
        self.to_basis_integral(Basis::S)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut t = Terms::new();
        terms::add_scaled(&mut t, &self.terms, c);
        SymFunc { terms: t }
    }

    pub fn pow(&self, k: usize) -> Self {
        SymFunc {
            terms: terms::pow(&self.terms, k, None),
        }
    }

    /// The ring involution `ω(p_k) = (-1)^{k-1} p_k`.
    pub fn omega(&self) -> Self {
        SymFunc {
            terms: terms::omega(&self.terms),
        }
    }

    /// `f ↦ f[-p_1] = (-1)^{deg} ω(f)` on homogeneous pieces.
    pub fn omega_bar(&self) -> Self {
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), if p.len() % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// Kronecker product: `p_λ ∗ p_μ = δ_{λμ} z_λ p_λ`.
    pub fn kronecker(&self, other: &SymFunc) -> Self {
        SymFunc {
            terms: terms::kronecker(&self.terms, &other.terms),
        }
    }

    /// Hall inner product against a finite function or a series. For a series
    /// the cutoff must reach `self.degree()`.
    pub fn hall<G: Graded>(&self, other: &G) -> Result<BigRational> {
        check_precision(self.degree(), other)?;
        let theirs = other.p_terms();
        let mut acc = BigRational::zero();
        for (p, c) in &self.terms {
            if let Some(d) = theirs.get(p) {
                acc += c * d * BigRational::from_integer(p.z_value());
            }
        }
        Ok(acc)
    }

    /// `g^⊥ self`, the Hall adjoint of multiplication by `g`. In power sums
    /// `p_k^⊥` acts as `k ∂/∂p_k`.
    pub fn skewed_by<G: Graded>(&self, g: &G) -> Result<SymFunc> {
        let deg = self.degree();
        check_precision(deg, g)?;
        let mut out = Terms::new();
        for (rho, gc) in g.p_terms() {
            if rho.size() > deg {
                break;
            }
            for (lam, fc) in &self.terms {
                if let Some((rest, k)) = terms::skew_monomial(lam, rho) {
                    terms::add_term(&mut out, rest, gc * fc * BigRational::from_integer(k));
                }
            }
        }
        Ok(SymFunc { terms: out })
    }

    /// Plethysm `self[inner]` for finite `inner`.
    pub fn plethysm(&self, inner: &SymFunc) -> SymFunc {
        SymFunc {
            terms: plethysm::plethysm(&self.terms, &inner.terms, None),
        }
    }

    /// Plethysm `self[inner]` for a series `inner`; the result is known through
    /// the same cutoff.
    pub fn plethysm_series(&self, inner: &SymSeries) -> SymSeries {
        let n = inner.cutoff();
        SymSeries::from_terms(plethysm::plethysm(&self.terms, inner.p_terms(), Some(n)), n)
    }

    /// Specializes to `nvars` variables: `p_k ↦ x_1^k + ... + x_nvars^k`.
    pub fn evaluate_in_variables(&self, nvars: usize) -> MPoly {
        let mut out = MPoly::zero(nvars);
        let mut cache: BTreeMap<usize, MPoly> = BTreeMap::new();
        for (lam, c) in &self.terms {
            let mut prod = MPoly::one(nvars);
            for &k in lam.parts() {
                let pk = cache.entry(k).or_insert_with(|| {
                    let mut s = MPoly::zero(nvars);
                    for i in 0..nvars {
                        s.add_assign(&MPoly::var_power(nvars, i, k));
                    }
                    s
                });
                prod = prod.mul(pk, None);
            }
            out.add_assign(&prod.scale(c));
        }
        out
    }

    /// Formats in `basis` as an expression like `3*h[2,1] - h[1]`; fails if a
    /// coefficient is not an integer.
    pub fn to_expr_string(&self, basis: Basis) -> Result<String> {
        let coeffs = self.to_basis_integral(basis)?;
        Ok(format_integral(basis, &coeffs))
    }
}

pub(crate) fn check_precision<G: Graded>(needed: usize, g: &G) -> Result<()> {
    match g.known_through() {
        Some(cutoff) if cutoff < needed => Err(Error::Precision { needed, cutoff }),
        _ => Ok(()),
    }
}

pub(crate) fn to_basis_terms(t: &Terms, basis: Basis) -> BTreeMap<Partition, BigRational> {
    if basis == Basis::P {
        return t.clone();
    }
    let mut out = BTreeMap::new();
    let mut current: Option<(usize, std::sync::Arc<transition::Transition>)> = None;
    for (mu, c) in t {
        let n = mu.size();
        if current.as_ref().is_none_or(|(d, _)| *d != n) {
            current = Some((n, transition::transition(basis, n)));
        }
        let tr = &current.as_ref().unwrap().1;
        if let Some(row) = tr.from_p.get(mu) {
            for (lam, v) in row {
                terms::add_term(&mut out, lam.clone(), c * v);
            }
        }
    }
    out
}

pub(crate) fn integral(
    coeffs: BTreeMap<Partition, BigRational>,
    basis: Basis,
) -> Result<BTreeMap<Partition, BigInt>> {
    coeffs
        .into_iter()
        .map(|(p, c)| {
            if c.is_integer() {
                Ok((p, c.to_integer()))
            } else {
                Err(Error::NonIntegral {
                    basis: basis.tag(),
                    partition: p.to_string(),
                    value: c.to_string(),
                })
            }
        })
        .collect()
}

fn format_integral(basis: Basis, coeffs: &BTreeMap<Partition, BigInt>) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, (lam, c)) in coeffs.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let atom = format!("{}{}", basis.tag(), lam);
        if lam.is_empty() {
            s.push_str(&mag.to_string());
        } else if mag.is_one() {
            s.push_str(&atom);
        } else {
            s.push_str(&format!("{mag}*{atom}"));
        }
    }
    s
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Prints the power-sum expansion, e.g. `1/2*p[1,1] + 1/2*p[2]`.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if lam.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*p{lam}")?;
            }
        }
        Ok(())
    }
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(mut self, rhs: SymFunc) -> SymFunc {
        self += &rhs;
        self
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        for (p, c) in &rhs.terms {
            terms::add_term(&mut self.terms, p.clone(), c.clone());
        }
    }
}

impl SubAssign<&SymFunc> for SymFunc {
    fn sub_assign(&mut self, rhs: &SymFunc) {
        for (p, c) in &rhs.terms {
            terms::add_term(&mut self.terms, p.clone(), -c);
        }
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(mut self, rhs: SymFunc) -> SymFunc {
        self -= &rhs;
        self
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

impl Mul<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        SymFunc {
            terms: terms::mul(&self.terms, &rhs.terms, None),
        }
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: SymFunc) -> SymFunc {
        &self * &rhs
    }
}

impl std::iter::Sum for SymFunc {
    fn sum<I: Iterator<Item = SymFunc>>(iter: I) -> SymFunc {
        iter.fold(SymFunc::zero(), |acc, x| acc + x)
    }
}
