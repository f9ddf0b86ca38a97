//! Irreducible characters of the symmetric group via the Murnaghan–Nakayama
//! rule, computed on beta-sets (rim hook removal = moving a bead down).

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::partition::Partition;

type Memo = RwLock<HashMap<(Partition, Partition), i64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `χ_λ(μ)`: the irreducible character indexed by `λ` at a permutation of
/// cycle type `μ`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.to_string(),
            left_size: lambda.size(),
            right: mu.to_string(),
            right_size: mu.size(),
        });
    }
    Ok(chi(lambda, mu))
}

pub(crate) fn chi(lambda: &Partition, mu: &Partition) -> i64 {
    if mu.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = memo().read().unwrap().get(&key) {
        return v;
    }
    let k = mu.part(0);
    let rest = mu.hat();
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i))
        .collect();
    let mut total: i64 = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sub = chi(&Partition::from_sorted_unchecked(parts), &rest);
        let term = if between % 2 == 0 { sub } else { -sub };
        total = total.checked_add(term).expect("character value overflow");
    }
    memo().write().unwrap().insert(key, total);
    total
}
