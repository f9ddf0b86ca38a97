//! Hall adjoints of plethysm by a fixed series.
//!
//! If `T` is the operator `g ↦ g[G]`, its adjoint `T*` satisfies
//! `⟨T* f, g⟩ = ⟨f, g[G]⟩`. Taking `g = p_ν` gives the power-sum coefficients
//! `[p_ν] T* f = ⟨f, p_ν[G]⟩ / z_ν`, and only `|ν| ≤ deg f` can contribute
//! when `G` has no constant term. The tables of `p_ν[G]` are memoized per
//! series and grown on demand.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::Zero;

use crate::partition::{partitions_up_to, Partition};
use crate::symfunc::plethysm::PowerSumPlethysms;
use crate::symfunc::terms::{self, Terms};
use crate::symfunc::{standard_series, Graded, StandardSeries, SymFunc};

pub(crate) struct AdjointTable {
    cutoff: usize,
    rows: Vec<(Partition, Terms)>,
}

type Cache = RwLock<HashMap<StandardSeries, Arc<AdjointTable>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn table(series: StandardSeries, n: usize) -> Arc<AdjointTable> {
    if let Some(t) = cache().read().unwrap().get(&series) {
        if t.cutoff >= n {
            return Arc::clone(t);
        }
    }
    // grow with some headroom so nearby degrees reuse the table
    let cutoff = n.max(4);
    let g = standard_series(series, cutoff);
    let mut pleth = PowerSumPlethysms::new(g.p_terms(), Some(cutoff));
    let rows = partitions_up_to(cutoff)
        .into_iter()
        .map(|nu| {
            let t = pleth.get(&nu);
            (nu, t)
        })
        .collect();
    let t = Arc::new(AdjointTable { cutoff, rows });
    let mut w = cache().write().unwrap();
    let entry = w.entry(series).or_insert_with(|| Arc::clone(&t));
    if entry.cutoff < cutoff {
        *entry = Arc::clone(&t);
    }
    Arc::clone(entry)
}

/// Adjoint of `g ↦ g[series]` applied to `f`. The series must have no
/// constant term.
pub(crate) fn adjoint_of_plethysm(series: StandardSeries, f: &SymFunc) -> SymFunc {
    let deg = f.degree();
    let tab = table(series, deg);
    let ft = f.p_terms();
    let mut out = Terms::new();
    for (nu, row) in &tab.rows {
        if nu.size() > deg {
            break;
        }
        let mut acc = BigRational::zero();
        // `row` may be much longer than `f`; iterate over the shorter side
        if ft.len() <= row.len() {
            for (lam, c) in ft {
                if let Some(d) = row.get(lam) {
                    acc += c * d * BigRational::from_integer(lam.z_value());
                }
            }
        } else {
            for (lam, d) in row {
                if lam.size() > deg {
                    break;
                }
                if let Some(c) = ft.get(lam) {
                    acc += c * d * BigRational::from_integer(lam.z_value());
                }
            }
        }
        if !acc.is_zero() {
            acc /= BigRational::from_integer(nu.z_value());
            terms::add_term(&mut out, nu.clone(), acc);
        }
    }
    SymFunc::from_p_coefficients(out)
}
