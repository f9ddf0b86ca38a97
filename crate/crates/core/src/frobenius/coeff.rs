//! The five families of restriction coefficients.
//!
//! With `m = |λ|`, `n = |μ|` and `C = ω(L_1) - ω(L_2) + ⋯`:
//!
//! | kind | operator route                 | plethystic formula                      |
//! |------|--------------------------------|-----------------------------------------|
//! | `r`  | `⟨F{s_λ}, s_μ⟩`                 | `⟨s_λ, s_μ[H]⟩`                          |
//! | `t`  | `⟨F_Sur{s_λ}, s_μ⟩`             | `⟨s_λ, s_μ[H₊]⟩`                         |
//! | `u`  | `⟨F_Sur⁻¹{s_λ}, s_μ⟩`           | `⟨s_λ, s_μ[C]⟩`                          |
//! | `a`  | `⟨H^⊥ F_Sur{s_λ}, s_μ⟩`         | `⟨s_λ, (s_μ H)[H₊]⟩`                     |
//! | `b`  | `⟨F_Sur⁻¹{(H^⊥)⁻¹ s_λ}, s_μ⟩`   | `⟨s_λ, s_μ[C] · (1 - e_1 + e_2 - ⋯)⟩`    |
//!
//! and for `u`, `b` also the transposed forms
//! `(-1)^{m-n} ⟨s_{λ^T}, s_{μ^T}[L_1 + L_2 + ⋯]⟩` (times `H` for `b`).
//! Every plethysm is truncated at degree `m`, which is all the pairing sees.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{fsur, fsurinv, integral_output, stable_transform, stable_transform_inverse};
use crate::error::{Error, Result};
use crate::partition::{partitions_up_to, Partition};
use crate::symfunc::{standard_series, Basis, StandardSeries, SymFunc, SymSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffKind {
    /// Restriction coefficients `r_λ^μ`.
    R,
    /// Surjective restriction coefficients `t_λ^μ`.
    T,
    /// Inverse surjective restriction coefficients `u_λ^μ`.
    U,
    /// Stable restriction coefficients `a_λ^μ`.
    A,
    /// Inverse stable restriction coefficients `b_λ^μ`.
    B,
}

impl CoeffKind {
    pub const ALL: [CoeffKind; 5] = [
        CoeffKind::R,
        CoeffKind::T,
        CoeffKind::U,
        CoeffKind::A,
        CoeffKind::B,
    ];

    /// `r`, `t` and `a` are multiplicities, hence never negative.
    pub fn is_nonnegative(self) -> bool {
        matches!(self, CoeffKind::R | CoeffKind::T | CoeffKind::A)
    }
}

impl fmt::Display for CoeffKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CoeffKind::R => "r",
            CoeffKind::T => "t",
            CoeffKind::U => "u",
            CoeffKind::A => "a",
            CoeffKind::B => "b",
        };
        f.write_str(c)
    }
}

impl FromStr for CoeffKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r" => Ok(CoeffKind::R),
            "t" => Ok(CoeffKind::T),
            "u" => Ok(CoeffKind::U),
            "a" => Ok(CoeffKind::A),
            "b" => Ok(CoeffKind::B),
            _ => Err(Error::InvalidArgument(format!(
                "unknown coefficient kind {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffQuery {
    pub kind: CoeffKind,
    pub lambda: Partition,
    pub mu: Partition,
}

impl CoeffQuery {
    pub fn new(kind: CoeffKind, lambda: Partition, mu: Partition) -> Self {
        CoeffQuery { kind, lambda, mu }
    }
}

fn integer_pairing(f: &SymFunc, g: &SymFunc) -> Result<BigInt> {
    let v = f.hall(g)?;
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::Integrality(format!("pairing came out as {v}")))
    }
}

/// The series `G` with `coeff = ⟨s_λ, G⟩`, known through degree `n`.
fn formula_series(kind: CoeffKind, mu: &Partition, n: usize) -> Result<SymSeries> {
    let s_mu = SymFunc::from_basis(Basis::S, mu);
    let series = |name| standard_series(name, n);
    Ok(match kind {
        CoeffKind::R => s_mu.plethysm_series(&series(StandardSeries::H)),
        CoeffKind::T => s_mu.plethysm_series(&series(StandardSeries::HPlus)),
        CoeffKind::U => s_mu.plethysm_series(&series(StandardSeries::Cadogan)),
        CoeffKind::A => {
            let smu_h = series(StandardSeries::H).mul_symfunc(&s_mu).truncated();
            smu_h.plethysm_series(&series(StandardSeries::HPlus))
        }
        CoeffKind::B => s_mu
            .plethysm_series(&series(StandardSeries::Cadogan))
            .mul(&series(StandardSeries::EMinus)),
    })
}

/// `coeff_λ^μ` by the plethystic formula, plethysms truncated at `|λ|`.
pub fn coeff(q: &CoeffQuery) -> Result<BigInt> {
    let g = formula_series(q.kind, &q.mu, q.lambda.size())?;
    integer_pairing(&SymFunc::from_basis(Basis::S, &q.lambda), &g.truncated())
}

/// `u` and `b` by their transposed formulas; `None` for other kinds.
pub fn coeff_transposed(q: &CoeffQuery) -> Result<Option<BigInt>> {
    let m = q.lambda.size();
    let n = q.mu.size();
    let l = standard_series(StandardSeries::LyndonSum, m);
    let s_mu_t = SymFunc::from_basis(Basis::S, &q.mu.conjugate());
    let g = match q.kind {
        CoeffKind::U => s_mu_t.plethysm_series(&l),
        CoeffKind::B => s_mu_t
            .plethysm_series(&l)
            .mul(&standard_series(StandardSeries::H, m)),
        _ => return Ok(None),
    };
    let v = integer_pairing(
        &SymFunc::from_basis(Basis::S, &q.lambda.conjugate()),
        &g.truncated(),
    )?;
    Ok(Some(if (m + n) % 2 == 1 { -v } else { v }))
}

/// The transform whose Schur matrix is the given kind, applied to `s_λ` and
/// truncated at degree `n` where the output is a series.
fn operator_image(kind: CoeffKind, lambda: &Partition, n: usize) -> SymFunc {
    let s = SymFunc::from_basis(Basis::S, lambda);
    match kind {
        CoeffKind::R => super::frobenius_series(&s, n).truncated(),
        CoeffKind::T => fsur(&s),
        CoeffKind::U => fsurinv(&s),
        CoeffKind::A => stable_transform(&s),
        CoeffKind::B => stable_transform_inverse(&s),
    }
}

/// `coeff_λ^μ` by applying the corresponding transform to `s_λ`.
pub fn coeff_by_operator(q: &CoeffQuery) -> Result<BigInt> {
    let img = operator_image(q.kind, &q.lambda, q.mu.size());
    integer_pairing(&img, &SymFunc::from_basis(Basis::S, &q.mu))
}

/// `μ ↦ coeff_λ^μ` for all `|μ| ≤ n`, by the operator route.
pub fn coeff_row(
    kind: CoeffKind,
    lambda: &Partition,
    n: usize,
) -> Result<Vec<(Partition, BigInt)>> {
    let img = operator_image(kind, lambda, n);
    Ok(integral_output(&img, Basis::S)?
        .into_iter()
        .filter(|(mu, _)| mu.size() <= n)
        .collect())
}

/// `λ ↦ coeff_λ^μ` for all `|λ| ≤ n`, by the plethystic formula.
pub fn coeff_column(kind: CoeffKind, mu: &Partition, n: usize) -> Result<Vec<(Partition, BigInt)>> {
    let g = formula_series(kind, mu, n)?.truncated();
    Ok(integral_output(&g, Basis::S)?.into_iter().collect())
}

/// A square matrix of coefficients over all partitions of size at most
/// `maxdeg` in canonical order. Entry `(i, j)` is `coeff_λ^μ` with
/// `μ = partitions[i]` and `λ = partitions[j]`, so `[a]` is upper
/// unitriangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMatrix {
    pub kind: CoeffKind,
    pub partitions: Vec<Partition>,
    pub entries: Vec<Vec<BigInt>>,
}

#[derive(Serialize)]
struct MatrixJson<'a> {
    kind: String,
    partitions: Vec<&'a [usize]>,
    rows: Vec<Vec<String>>,
}

impl CoeffMatrix {
    /// Builds the matrix from the plethystic formula, one column series per
    /// `μ` (in parallel).
    pub fn by_formula(kind: CoeffKind, maxdeg: usize) -> Result<Self> {
        let partitions = partitions_up_to(maxdeg);
        let index = |p: &Partition| partitions.binary_search(p).expect("listed");
        let columns: Vec<Vec<(Partition, BigInt)>> = partitions
            .par_iter()
            .map(|mu| coeff_column(kind, mu, maxdeg))
            .collect::<Result<_>>()?;
        let n = partitions.len();
        let mut entries = vec![vec![BigInt::zero(); n]; n];
        for (i, col) in columns.into_iter().enumerate() {
            for (lam, v) in col {
                entries[i][index(&lam)] = v;
            }
        }
        Ok(CoeffMatrix {
            kind,
            partitions,
            entries,
        })
    }

    /// Builds the matrix by applying the transform to every `s_λ`.
    pub fn by_operator(kind: CoeffKind, maxdeg: usize) -> Result<Self> {
        let partitions = partitions_up_to(maxdeg);
        let index = |p: &Partition| partitions.binary_search(p).expect("listed");
        let rows: Vec<Vec<(Partition, BigInt)>> = partitions
            .par_iter()
            .map(|lam| coeff_row(kind, lam, maxdeg))
            .collect::<Result<_>>()?;
        let n = partitions.len();
        let mut entries = vec![vec![BigInt::zero(); n]; n];
        for (j, row) in rows.into_iter().enumerate() {
            for (mu, v) in row {
                entries[index(&mu)][j] = v;
            }
        }
        Ok(CoeffMatrix {
            kind,
            partitions,
            entries,
        })
    }

    /// `coeff_λ^μ`, or `None` if either index is outside the matrix.
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&BigInt> {
        let j = self.partitions.binary_search(lambda).ok()?;
        let i = self.partitions.binary_search(mu).ok()?;
        Some(&self.entries[i][j])
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, v)| match i.cmp(&j) {
                std::cmp::Ordering::Equal => v.is_one(),
                std::cmp::Ordering::Greater => v.is_zero(),
                std::cmp::Ordering::Less => true,
            })
        })
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
        })
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &CoeffMatrix) -> CoeffMatrix {
        let n = self.entries.len();
        let mut entries = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k][j];
                    if !b.is_zero() {
                        entries[i][j] += a * b;
                    }
                }
            }
        }
        CoeffMatrix {
            kind: self.kind,
            partitions: self.partitions.clone(),
            entries,
        }
    }

    /// Whether `(-1)^{|λ| - |μ|} coeff_λ^μ ≥ 0` for every entry.
    pub fn has_alternating_signs(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, v)| {
                let odd = (self.partitions[i].size() + self.partitions[j].size()) % 2 == 1;
                if odd {
                    !v.is_positive()
                } else {
                    !v.is_negative()
                }
            })
        })
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.partitions.iter().map(Partition::to_string));
        w.write_record(&header).expect("in-memory write");
        for (mu, row) in self.partitions.iter().zip(&self.entries) {
            let mut rec = vec![mu.to_string()];
            rec.extend(row.iter().map(BigInt::to_string));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn to_json(&self) -> String {
        let j = MatrixJson {
            kind: self.kind.to_string(),
            partitions: self.partitions.iter().map(Partition::parts).collect(),
            rows: self
                .entries
                .iter()
                .map(|r| r.iter().map(BigInt::to_string).collect())
                .collect(),
        };
        serde_json::to_string(&j).expect("matrix serializes")
    }
}

/// `[a]` or `[b]` (or any other kind) over partitions of size at most
/// `maxdeg`. For `b` with `maxdeg ≤ 6` the formula result is checked
/// against the inverse of `[a]`.
pub fn stable_matrix(kind: CoeffKind, maxdeg: usize) -> Result<CoeffMatrix> {
    let m = CoeffMatrix::by_formula(kind, maxdeg)?;
    if kind == CoeffKind::B && maxdeg <= 6 {
        let a = CoeffMatrix::by_formula(CoeffKind::A, maxdeg)?;
        let inv = stable_matrix_inverse(&a)?;
        if inv.entries != m.entries {
            return Err(Error::Integrality(
                "inverse stable matrix disagrees with the inverse of [a]".into(),
            ));
        }
    }
    Ok(m)
}

/// Inverse of an upper unitriangular integer matrix by back substitution.
pub fn stable_matrix_inverse(a: &CoeffMatrix) -> Result<CoeffMatrix> {
    if !a.is_upper_unitriangular() {
        return Err(Error::InvalidArgument(
            "matrix is not upper unitriangular".into(),
        ));
    }
    let n = a.entries.len();
    let mut x = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        x[i][i] = BigInt::one();
        for j in i + 1..n {
            let mut acc = BigInt::zero();
            for k in i..j {
                if !x[i][k].is_zero() && !a.entries[k][j].is_zero() {
                    acc += &x[i][k] * &a.entries[k][j];
                }
            }
            x[i][j] = -acc;
        }
    }
    Ok(CoeffMatrix {
        kind: CoeffKind::B,
        partitions: a.partitions.clone(),
        entries: x,
    })
}
