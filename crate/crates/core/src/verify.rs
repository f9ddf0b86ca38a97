//! Verification sweeps. Each suite checks a family of identities over all
//! partitions up to some size and reports how many checks passed.
//!
//! Every suite also checks that the transform outputs it sees have integer
//! coordinates in the `m`, `e`, `h` and `s` bases; a failure there is
//! reported separately because it indicates a bug rather than a false
//! identity.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::frobenius::{
    coeff_column, coeff_row, durfee_criterion, e1_power_divides, falling_factorial,
    falling_factorial_divides, frobenius_series, fsur, fsur_e_direct, fsur_expansion,
    fsur_h_direct, fsur_p_by_set_partitions, fsur_p_direct, fsurinv, fsurinv_h_direct,
    fsurinv_with, fsurinveprod, genfunc_identity_check, stable_matrix_inverse, vanishing_check,
    witness_search, CoeffKind, CoeffMatrix, GenFuncIdentity, InverseRoute, VanishingKind,
};
use crate::lyndon::{factorize, is_lyndon, lyndon_words, witt_count};
use crate::oracles::{character_value, frobenius_via_roots, EvalAtUnity};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::symfunc::{Basis, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Kronecker,
    Routes,
    Vanishing,
    Durfee,
    Genfunc,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Kronecker,
        Suite::Routes,
        Suite::Vanishing,
        Suite::Durfee,
        Suite::Genfunc,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Kronecker => "kronecker",
            Suite::Routes => "routes",
            Suite::Vanishing => "vanishing",
            Suite::Durfee => "durfee",
            Suite::Genfunc => "genfunc",
            Suite::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// Outcome of a suite.
#[derive(Clone, Debug, Default)]
pub struct Checker {
    pub checks: usize,
    pub failures: Vec<String>,
    pub integrality: Vec<String>,
}

impl Checker {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Records `f` as a transform output that must be integral.
    pub fn integral(&mut self, f: &SymFunc, what: impl Fn() -> String) {
        for basis in [Basis::M, Basis::E, Basis::H, Basis::S] {
            self.checks += 1;
            if let Err(e) = f.to_basis_integral(basis) {
                self.integrality.push(format!("{}: {e}", what()));
            }
        }
    }

    fn result<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e @ Error::Integrality(_)) => {
                self.checks += 1;
                self.integrality.push(format!("{}: {e}", what()));
                None
            }
            Err(e) => {
                self.check(false, || format!("{}: {e}", what()));
                None
            }
        }
    }

    pub fn merge(mut self, other: Checker) -> Checker {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.integrality.extend(other.integrality);
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.integrality.is_empty()
    }
}

fn merge_all(parts: Vec<Checker>) -> Checker {
    parts.into_iter().fold(Checker::default(), Checker::merge)
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub maxdeg: usize,
    pub outcome: Checker,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcome.passed()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = &self.outcome;
        let failed = o.failures.len() + o.integrality.len();
        writeln!(
            f,
            "suite {} (maxdeg {}): {} checks, {} passed, {} failed",
            self.suite,
            self.maxdeg,
            o.checks,
            o.checks - failed,
            failed
        )?;
        for msg in o.failures.iter().take(20) {
            writeln!(f, "  FAIL {msg}")?;
        }
        for msg in o.integrality.iter().take(20) {
            writeln!(f, "  INTEGRALITY {msg}")?;
        }
        Ok(())
    }
}

/// Runs `suite` with every bound derived from `maxdeg`.
pub fn run_suite(suite: Suite, maxdeg: usize) -> SuiteReport {
    let outcome = match suite {
        Suite::Kronecker => kronecker_suite(&KroneckerBounds::from_maxdeg(maxdeg)),
        Suite::Routes => routes_suite(&RoutesBounds::from_maxdeg(maxdeg)),
        Suite::Vanishing => vanishing_suite(&VanishingBounds::from_maxdeg(maxdeg)),
        Suite::Durfee => durfee_suite(&DurfeeBounds::from_maxdeg(maxdeg)),
        Suite::Genfunc => genfunc_suite(&GenfuncBounds::from_maxdeg(maxdeg)),
        Suite::Oracle => oracle_suite(maxdeg),
    };
    SuiteReport {
        suite,
        maxdeg,
        outcome,
    }
}

fn all_basis_elements(maxdeg: usize) -> Vec<(Basis, Partition)> {
    Basis::ALL
        .into_iter()
        .flat_map(|b| partitions_up_to(maxdeg).into_iter().map(move |l| (b, l)))
        .collect()
}

/// Product-to-Kronecker identity `F{s_λ s_μ} = F{s_λ} ∗ F{s_μ}` and its
/// coefficient form.
#[derive(Clone, Debug)]
pub struct KroneckerBounds {
    /// `|λ|, |μ|` for the series identity.
    pub factor_deg: usize,
    /// Degree through which the series are compared.
    pub series_deg: usize,
    /// `|λ|, |μ|` for the coefficient identity.
    pub coeff_factor_deg: usize,
    /// `|ν|` for the coefficient identity.
    pub coeff_target_deg: usize,
}

impl KroneckerBounds {
    pub fn from_maxdeg(n: usize) -> Self {
        KroneckerBounds {
            factor_deg: n,
            series_deg: n + 2,
            coeff_factor_deg: n.saturating_sub(1),
            coeff_target_deg: n + 2,
        }
    }
}

pub fn kronecker_suite(b: &KroneckerBounds) -> Checker {
    let parts = partitions_up_to(b.factor_deg);
    let series: Vec<_> = parts
        .par_iter()
        .map(|l| frobenius_series(&SymFunc::from_basis(Basis::S, l), b.series_deg))
        .collect();
    let pairs: Vec<(usize, usize)> = (0..parts.len())
        .flat_map(|i| (i..parts.len()).map(move |j| (i, j)))
        .collect();
    let mut out = merge_all(
        pairs
            .par_iter()
            .map(|&(i, j)| {
                let mut c = Checker::default();
                let prod = &SymFunc::from_basis(Basis::S, &parts[i])
                    * &SymFunc::from_basis(Basis::S, &parts[j]);
                let lhs = frobenius_series(&prod, b.series_deg);
                c.integral(&fsur(&prod), || {
                    format!("F_Sur{{s{} s{}}}", parts[i], parts[j])
                });
                c.check(lhs == series[i].kronecker(&series[j]), || {
                    format!(
                        "F{{s{} s{}}} != F{{s{}}} * F{{s{}}}",
                        parts[i], parts[j], parts[i], parts[j]
                    )
                });
                c
            })
            .collect(),
    );
    out = out.merge(coefficient_identity(b.coeff_factor_deg, b.coeff_target_deg));
    out
}

/// `Σ_{ν'} r_{ν'}^ν c^{ν'}_{λμ} = Σ_{λ',μ'} r_λ^{λ'} r_μ^{μ'} g_{λ'μ'ν}`, with
/// the left side's `r` from plethystic formulas and the right side's from the
/// transform.
fn coefficient_identity(factor_deg: usize, target_deg: usize) -> Checker {
    let mut c = Checker::default();
    let factors = partitions_up_to(factor_deg);
    let targets = partitions_up_to(target_deg);
    // r_{ν'}^ν for |ν'| ≤ 2·factor_deg, by formula
    let columns: Vec<Option<BTreeMap<Partition, BigInt>>> = targets
        .par_iter()
        .map(|nu| {
            coeff_column(CoeffKind::R, nu, 2 * factor_deg)
                .ok()
                .map(|v| v.into_iter().collect())
        })
        .collect();
    // r_λ^{λ'} for |λ'| ≤ target_deg, by operator
    let mut rows: Vec<BTreeMap<Partition, BigInt>> = Vec::new();
    for lam in &factors {
        let r = coeff_row(CoeffKind::R, lam, target_deg);
        rows.push(
            c.result(r, || format!("row r_{lam}"))
                .unwrap_or_default()
                .into_iter()
                .collect(),
        );
    }
    let kron = kronecker_coefficients(target_deg);
    for (ti, nu) in targets.iter().enumerate() {
        let Some(col) = &columns[ti] else {
            c.check(false, || format!("column r^{nu}"));
            continue;
        };
        let same_size = partitions_of(nu.size());
        for (i, lam) in factors.iter().enumerate() {
            for (j, mu) in factors.iter().enumerate().skip(i) {
                let prod = &SymFunc::from_basis(Basis::S, lam) * &SymFunc::from_basis(Basis::S, mu);
                let Some(lr) = c.result(prod.schur_coefficients(), || format!("s{lam} s{mu}"))
                else {
                    continue;
                };
                let lhs: BigInt = lr
                    .iter()
                    .map(|(nup, v)| col.get(nup).cloned().unwrap_or_default() * v)
                    .sum();
                let mut rhs = BigInt::zero();
                for lp in &same_size {
                    let Some(a) = rows[i].get(lp) else { continue };
                    for mp in &same_size {
                        let Some(bv) = rows[j].get(mp) else { continue };
                        if let Some(g) = kron.get(&(lp.clone(), mp.clone(), nu.clone())) {
                            rhs += a * bv * g;
                        }
                    }
                }
                c.check(lhs == rhs, || {
                    format!("coefficient identity at λ={lam}, μ={mu}, ν={nu}")
                });
            }
        }
    }
    c
}

fn kronecker_coefficients(maxdeg: usize) -> BTreeMap<(Partition, Partition, Partition), BigInt> {
    let mut out = BTreeMap::new();
    for n in 0..=maxdeg {
        let parts = partitions_of(n);
        let schur: Vec<SymFunc> = parts
            .iter()
            .map(|l| SymFunc::from_basis(Basis::S, l))
            .collect();
        let entries: Vec<_> = (0..parts.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let schur = &schur;
                let parts = &parts;
                (0..parts.len()).flat_map(move |j| {
                    let k = schur[i].kronecker(&schur[j]);
                    k.schur_coefficients()
                        .expect("Kronecker coefficients are integers")
                        .into_iter()
                        .map(move |(nu, v)| ((parts[i].clone(), parts[j].clone(), nu), v))
                })
            })
            .collect();
        out.extend(entries);
    }
    out
}

/// Agreement of the different computations of `F_Sur`, its inverse and the
/// stable coefficients.
#[derive(Clone, Debug)]
pub struct RoutesBounds {
    /// `F_Sur = Σ_λ s_λ (s_λ[h_2 + ⋯])^⊥` on `s_λ`.
    pub expansion_deg: usize,
    /// Direct formulas on `h_λ`, `e_λ`.
    pub direct_he_deg: usize,
    /// Direct formula on `p_λ`.
    pub direct_p_deg: usize,
    /// The set-partition sum for `p_λ`, which is exponential.
    pub set_partition_deg: usize,
    /// Inverse contract on all five bases.
    pub inverse_deg: usize,
    /// `[a]` and `[b]`.
    pub stable_deg: usize,
    /// `r_λ^{μ^(n)} = a_λ^μ` for large `n`.
    pub stabilization_deg: usize,
}

impl RoutesBounds {
    pub fn from_maxdeg(n: usize) -> Self {
        RoutesBounds {
            expansion_deg: n,
            direct_he_deg: n,
            direct_p_deg: n,
            set_partition_deg: n.min(7),
            inverse_deg: n,
            stable_deg: n,
            stabilization_deg: n,
        }
    }
}

pub fn routes_suite(b: &RoutesBounds) -> Checker {
    let mut out = Checker::default();
    out = out.merge(expansion_checks(b.expansion_deg));
    out = out.merge(direct_checks(
        b.direct_he_deg,
        b.direct_p_deg,
        b.set_partition_deg,
    ));
    out = out.merge(inverse_checks(b.inverse_deg));
    out = out.merge(stable_matrix_checks(b.stable_deg));
    out.merge(stabilization_checks(b.stabilization_deg))
}

pub fn expansion_checks(maxdeg: usize) -> Checker {
    merge_all(
        partitions_up_to(maxdeg)
            .par_iter()
            .map(|lam| {
                let mut c = Checker::default();
                let f = SymFunc::from_basis(Basis::S, lam);
                let g = fsur(&f);
                c.integral(&g, || format!("F_Sur{{s{lam}}}"));
                c.check(fsur_expansion(&f) == g, || {
                    format!("expansion of F_Sur{{s{lam}}}")
                });
                c
            })
            .collect(),
    )
}

pub fn direct_checks(he_deg: usize, p_deg: usize, set_partition_deg: usize) -> Checker {
    let he = partitions_up_to(he_deg).into_par_iter().map(|lam| {
        let mut c = Checker::default();
        let h = fsur(&SymFunc::from_basis(Basis::H, &lam));
        let e = fsur(&SymFunc::from_basis(Basis::E, &lam));
        c.integral(&h, || format!("F_Sur{{h{lam}}}"));
        c.integral(&e, || format!("F_Sur{{e{lam}}}"));
        c.check(fsur_h_direct(&lam) == h, || {
            format!("direct F_Sur{{h{lam}}}")
        });
        c.check(fsur_e_direct(&lam) == e, || {
            format!("direct F_Sur{{e{lam}}}")
        });
        c
    });
    let p = partitions_up_to(p_deg).into_par_iter().map(|lam| {
        let mut c = Checker::default();
        let g = fsur(&SymFunc::from_basis(Basis::P, &lam));
        c.integral(&g, || format!("F_Sur{{p{lam}}}"));
        c.check(fsur_p_direct(&lam) == g, || {
            format!("direct F_Sur{{p{lam}}}")
        });
        if lam.size() <= set_partition_deg {
            c.check(fsur_p_by_set_partitions(&lam) == g, || {
                format!("set partitions F_Sur{{p{lam}}}")
            });
        }
        c
    });
    merge_all(he.collect()).merge(merge_all(p.collect()))
}

pub fn inverse_checks(maxdeg: usize) -> Checker {
    merge_all(
        all_basis_elements(maxdeg)
            .par_iter()
            .map(|(basis, lam)| {
                let mut c = Checker::default();
                let f = SymFunc::from_basis(*basis, lam);
                let name = || format!("{}{lam}", basis.tag());
                let fs = fsur(&f);
                let inv = fsurinv(&f);
                c.integral(&fs, || format!("F_Sur{{{}}}", name()));
                c.integral(&inv, || format!("F_Sur^-1{{{}}}", name()));
                c.check(fsurinv(&fs) == f, || format!("F_Sur^-1 F_Sur {}", name()));
                c.check(fsur(&inv) == f, || format!("F_Sur F_Sur^-1 {}", name()));
                c.check(fsurinv_with(&f, InverseRoute::Iteration) == inv, || {
                    format!("inverse routes on {}", name())
                });
                c
            })
            .collect(),
    )
}

pub fn stable_matrix_checks(maxdeg: usize) -> Checker {
    let mut c = Checker::default();
    let a = c.result(CoeffMatrix::by_formula(CoeffKind::A, maxdeg), || {
        "[a] by formula".into()
    });
    let a_op = c.result(CoeffMatrix::by_operator(CoeffKind::A, maxdeg), || {
        "[a] by transform".into()
    });
    let b = c.result(CoeffMatrix::by_formula(CoeffKind::B, maxdeg), || {
        "[b] by formula".into()
    });
    let b_op = c.result(CoeffMatrix::by_operator(CoeffKind::B, maxdeg), || {
        "[b] by transform".into()
    });
    let (Some(a), Some(a_op), Some(b), Some(b_op)) = (a, a_op, b, b_op) else {
        return c;
    };
    c.check(a.is_upper_unitriangular(), || {
        "[a] is not upper unitriangular".into()
    });
    c.check(a == a_op, || "[a] routes disagree".into());
    c.check(b == b_op, || "[b] routes disagree".into());
    c.check(b.has_alternating_signs(), || {
        "[b] has a sign violation".into()
    });
    for row in &a.entries {
        for v in row {
            c.check(!v.is_negative(), || "[a] has a negative entry".into());
        }
    }
    if let Some(inv) = c.result(stable_matrix_inverse(&a), || "inverse of [a]".into()) {
        c.check(inv.entries == b.entries, || {
            "[b] is not the inverse of [a]".into()
        });
    }
    c
}

/// `r_λ^{μ^(n)} = a_λ^μ` for the three smallest admissible `n` at or beyond
/// `|λ| + |μ| + 1`, over `|λ|, |μ| ≤ maxdeg`.
pub fn stabilization_checks(maxdeg: usize) -> Checker {
    merge_all(
        partitions_up_to(maxdeg)
            .par_iter()
            .map(|mu| {
                let mut c = Checker::default();
                let m = mu.size();
                let Some(a) = c.result(coeff_column(CoeffKind::A, mu, maxdeg), || {
                    format!("a column {mu}")
                }) else {
                    return c;
                };
                let a: BTreeMap<Partition, BigInt> = a.into_iter().collect();
                let first = (m + 1).max(mu.part(0) + m);
                let last = (maxdeg + m + 1).max(mu.part(0) + m) + 2;
                let mut columns = BTreeMap::new();
                for n in first..=last {
                    let padded = mu.stable_pad(n).expect("first part large enough");
                    if let Some(col) = c.result(coeff_column(CoeffKind::R, &padded, maxdeg), || {
                        format!("r column {padded}")
                    }) {
                        columns.insert(n, col.into_iter().collect::<BTreeMap<_, _>>());
                    }
                }
                for lam in partitions_up_to(maxdeg) {
                    let start = (lam.size() + m + 1).max(mu.part(0) + m);
                    let expected = a.get(&lam).cloned().unwrap_or_default();
                    for n in start..=start + 2 {
                        let got = columns
                            .get(&n)
                            .and_then(|col| col.get(&lam))
                            .cloned()
                            .unwrap_or_default();
                        c.check(got == expected, || {
                            format!(
                                "r_{lam}^{} = {got} but a_{lam}^{mu} = {expected}",
                                mu.stable_pad(n).unwrap()
                            )
                        });
                    }
                }
                c
            })
            .collect(),
    )
}

/// Vanishing bounds and nonnegativity.
#[derive(Clone, Debug)]
pub struct VanishingBounds {
    /// `|λ|, |μ|` for `r` and `t`.
    pub rt_deg: usize,
    /// `|λ|, |μ|` for `a`.
    pub a_deg: usize,
}

impl VanishingBounds {
    pub fn from_maxdeg(n: usize) -> Self {
        VanishingBounds {
            rt_deg: n,
            a_deg: n.saturating_sub(1),
        }
    }
}

pub fn vanishing_suite(b: &VanishingBounds) -> Checker {
    let jobs: Vec<(VanishingKind, usize, Partition)> = [
        (VanishingKind::RBound, b.rt_deg),
        (VanishingKind::TBound, b.rt_deg),
        (VanishingKind::ABound, b.a_deg),
    ]
    .into_iter()
    .flat_map(|(k, d)| partitions_up_to(d).into_iter().map(move |mu| (k, d, mu)))
    .collect();
    merge_all(
        jobs.par_iter()
            .map(|(kind, deg, mu)| {
                let mut c = Checker::default();
                let ck = kind.coeff_kind();
                let Some(col) =
                    c.result(coeff_column(ck, mu, *deg), || format!("{ck} column {mu}"))
                else {
                    return c;
                };
                let col: BTreeMap<Partition, BigInt> = col.into_iter().collect();
                for lam in partitions_up_to(*deg) {
                    let v = col.get(&lam).cloned().unwrap_or_default();
                    c.check(!v.is_negative(), || format!("{ck}_{lam}^{mu} = {v} < 0"));
                    if !vanishing_check(*kind, &lam, mu) {
                        c.check(v.is_zero(), || {
                            format!("{ck}_{lam}^{mu} = {v} violates the bound")
                        });
                    }
                }
                c
            })
            .collect(),
    )
}

#[derive(Clone, Debug)]
pub struct DurfeeBounds {
    pub max_size: usize,
    pub ks: Vec<usize>,
    /// Witnesses up to this size are confirmed through the transform.
    pub confirm_deg: usize,
}

impl DurfeeBounds {
    pub fn from_maxdeg(n: usize) -> Self {
        DurfeeBounds {
            max_size: n,
            ks: vec![1, 2],
            confirm_deg: 8,
        }
    }
}

/// A witness `λ` with `λ_1 ≤ k` and `r_λ^μ > 0` exists iff `D(μ) ≤ 2^{k-1}`.
pub fn durfee_suite(b: &DurfeeBounds) -> Checker {
    let jobs: Vec<(usize, Partition)> =
        b.ks.iter()
            .flat_map(|&k| {
                partitions_up_to(b.max_size)
                    .into_iter()
                    .map(move |mu| (k, mu))
            })
            .collect();
    merge_all(
        jobs.par_iter()
            .map(|(k, mu)| {
                let mut c = Checker::default();
                let Some(w) = c.result(witness_search(mu, *k), || {
                    format!("witness search {mu}, k={k}")
                }) else {
                    return c;
                };
                let expected = durfee_criterion(mu, *k);
                c.check(w.is_some() == expected, || {
                    format!("μ={mu}, k={k}: witness {w:?}, criterion says {expected}")
                });
                if let Some(lam) = w.filter(|l| l.size() <= b.confirm_deg) {
                    let row = coeff_row(CoeffKind::R, &lam, mu.size());
                    if let Some(row) = c.result(row, || format!("row r_{lam}")) {
                        let v = row
                            .into_iter()
                            .find(|(m, _)| m == mu)
                            .map(|(_, v)| v)
                            .unwrap_or_default();
                        c.check(v.is_positive(), || {
                            format!("witness {lam} for {mu} has r = {v}")
                        });
                    }
                }
                c
            })
            .collect(),
    )
}

/// Lyndon words, the generating-function identities and the corollaries of
/// the word formulas.
#[derive(Clone, Debug)]
pub struct GenfuncBounds {
    /// `(ℓ, D)` for the reciprocal identity.
    pub reciprocal: Vec<(usize, usize)>,
    /// `(ℓ, D)` for the product identity.
    pub product: Vec<(usize, usize)>,
    /// Word length for the factorization and Witt checks, over up to 3 letters.
    pub word_len: usize,
    /// `ℓ` for `F_Sur⁻¹{e_1^ℓ}` and `r` for `F_Sur⁻¹{h_r}`.
    pub falling_deg: usize,
    pub h_deg: usize,
    /// `|λ| + k` for the product formula and degree for divisibility.
    pub eprod_deg: usize,
    pub divisibility_k: usize,
}

impl GenfuncBounds {
    pub fn from_maxdeg(n: usize) -> Self {
        GenfuncBounds {
            reciprocal: vec![(1, n), (2, n)],
            product: vec![(1, n + 2), (2, n.saturating_sub(1))],
            word_len: n + 4,
            falling_deg: n + 3,
            h_deg: n + 6,
            eprod_deg: n + 2,
            divisibility_k: 3,
        }
    }
}

/// Splits `w` into non-increasing Lyndon pieces by trying every cut.
fn factorize_by_search(w: &[usize]) -> Option<Vec<Vec<usize>>> {
    let n = w.len();
    if n == 0 {
        return Some(Vec::new());
    }
    for mask in 0u64..(1u64 << (n - 1)) {
        let mut pieces = Vec::new();
        let mut start = 0;
        for i in 0..n {
            if i == n - 1 || mask & (1 << i) != 0 {
                pieces.push(w[start..=i].to_vec());
                start = i + 1;
            }
        }
        if pieces.iter().all(|p| is_lyndon(p)) && pieces.windows(2).all(|x| x[0] >= x[1]) {
            return Some(pieces);
        }
    }
    None
}

fn all_words(l: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=l).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn lyndon_checks(word_len: usize) -> Checker {
    let mut c = Checker::default();
    let jobs: Vec<Vec<usize>> = (0..=word_len).flat_map(|n| all_words(3, n)).collect();
    c = c.merge(merge_all(
        jobs.par_iter()
            .map(|w| {
                let mut c = Checker::default();
                let duval: Vec<Vec<usize>> =
                    factorize(w).into_iter().map(<[usize]>::to_vec).collect();
                c.check(Some(duval) == factorize_by_search(w), || {
                    format!("factorization of {w:?}")
                });
                c
            })
            .collect(),
    ));
    for l in 1..=3 {
        let words = lyndon_words(l, word_len);
        for n in 1..=word_len {
            let count = words.iter().filter(|w| w.len() == n).count();
            c.check(BigInt::from(count) == witt_count(l, n), || {
                format!("Witt count ℓ={l}, n={n}")
            });
        }
        c.check(words.iter().all(|w| is_lyndon(w)), || {
            format!("generated words over {l} letters")
        });
    }
    c
}

pub fn genfunc_suite(b: &GenfuncBounds) -> Checker {
    lyndon_checks(b.word_len)
        .merge(generating_function_checks(&b.reciprocal, &b.product))
        .merge(corollary_checks(b))
}

/// The two identities at each `(ℓ, D)`.
pub fn generating_function_checks(
    reciprocal: &[(usize, usize)],
    product: &[(usize, usize)],
) -> Checker {
    let mut c = Checker::default();
    for &(l, d) in reciprocal {
        c.check(
            genfunc_identity_check(l, d, GenFuncIdentity::Reciprocal),
            || format!("reciprocal identity ℓ={l}, D={d}"),
        );
    }
    for &(l, d) in product {
        c.check(
            genfunc_identity_check(l, d, GenFuncIdentity::Product),
            || format!("product identity ℓ={l}, D={d}"),
        );
    }
    c
}

pub fn corollary_checks(b: &GenfuncBounds) -> Checker {
    let mut c = Checker::default();
    let e1 = SymFunc::e(1);
    for l in 0..=b.falling_deg {
        let inv = fsurinv(&e1.pow(l));
        c.integral(&inv, || format!("F_Sur^-1{{e1^{l}}}"));
        c.check(inv == falling_factorial(l), || {
            format!("F_Sur^-1{{e1^{l}}}")
        });
    }
    for r in 0..=b.h_deg {
        c.check(fsurinv_h_direct(r) == fsurinv(&SymFunc::h(r)), || {
            format!("F_Sur^-1{{h{r}}}")
        });
    }
    for total in 0..=b.eprod_deg {
        for k in 0..=total {
            for lam in partitions_of(total - k) {
                let f = &SymFunc::from_basis(Basis::E, &lam) * &e1.pow(k);
                c.check(fsurinveprod(lam.parts(), k) == fsurinv(&f), || {
                    format!("product formula for e{lam} e1^{k}")
                });
            }
        }
    }
    // e_1^k | F_Sur{f} iff e_1(e_1 - 1)⋯(e_1 - k + 1) | f
    for k in 0..=b.divisibility_k {
        let ff = falling_factorial(k);
        for lam in partitions_up_to(b.eprod_deg) {
            let e = SymFunc::from_basis(Basis::E, &lam);
            let mut samples = vec![e.clone()];
            if lam.size() + k <= b.eprod_deg {
                let multiple = &ff * &e;
                samples.push(&multiple + &(&ff * &SymFunc::e(2)));
                samples.push(multiple);
            }
            for f in samples {
                let lhs = falling_factorial_divides(&f, k);
                let rhs = e1_power_divides(&fsur(&f), k);
                c.check(lhs == rhs, || format!("divisibility for k={k} at {f}"));
            }
        }
    }
    c
}

/// The roots-of-unity formula against `F_Sur{f} · H`, and character sanity.
pub fn oracle_suite(maxdeg: usize) -> Checker {
    let mut c = merge_all(
        all_basis_elements(maxdeg)
            .par_iter()
            .map(|(basis, lam)| {
                let mut c = Checker::default();
                let f = SymFunc::from_basis(*basis, lam);
                let via_roots = frobenius_via_roots(&f, maxdeg);
                let series = frobenius_series(&f, maxdeg);
                c.integral(&series.truncated(), || format!("F{{{}{lam}}}", basis.tag()));
                c.check(via_roots == series, || {
                    format!("roots of unity for {}{lam}", basis.tag())
                });
                c
            })
            .collect(),
    );
    for n in 0..=maxdeg {
        let parts = partitions_of(n);
        for mu in &parts {
            for nu in &parts {
                let s: i64 = parts
                    .iter()
                    .map(|l| {
                        character_value(l, mu).unwrap_or(0) * character_value(l, nu).unwrap_or(0)
                    })
                    .sum();
                let expected = if mu == nu {
                    mu.z_value()
                } else {
                    BigInt::zero()
                };
                c.check(BigInt::from(s) == expected, || {
                    format!("column orthogonality at {mu}, {nu}")
                });
            }
        }
        for lam in &parts {
            let s = SymFunc::from_basis(Basis::S, lam);
            for mu in partitions_up_to(maxdeg.max(8)) {
                let v = EvalAtUnity::new(mu.clone()).eval(&s);
                c.check(v.is_integer(), || format!("s{lam} at Xi_{mu} = {v}"));
            }
        }
    }
    c
}
