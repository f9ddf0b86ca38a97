//! Closed-form expansions of `F_Sur` on products of `h`, `e` and `p`.
//!
//! * `F_Sur{h_λ} = Σ_M Π_j h_{M(j)}` over `M: ℕ^ℓ → ℕ` with `M(0) = 0` and
//!   `Σ_j j_i M(j) = λ_i`.
//! * `F_Sur{e_λ}` is the same sum over `M: {0,1}^ℓ → ℕ`, with `h_{M(j)}` for
//!   `j` of even weight and `e_{M(j)}` for odd weight.
//! * `F_Sur{p_λ} = Σ_π Π_{U ∈ π} Σ_{d | gcd(λ_U)} d^{|U|-1} p_d` over set
//!   partitions `π` of `{1, …, ℓ}`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};

/// A finitely supported `M: ℕ^ℓ → ℕ` (zero values are not stored).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FunctionM {
    values: BTreeMap<Vec<usize>, usize>,
}

impl FunctionM {
    pub fn values(&self) -> &BTreeMap<Vec<usize>, usize> {
        &self.values
    }

    /// `(Σ_j j_i M(j))_i`.
    pub fn column_sums(&self, len: usize) -> Vec<usize> {
        let mut out = vec![0; len];
        for (j, &m) in &self.values {
            for (o, &ji) in out.iter_mut().zip(j) {
                *o += ji * m;
            }
        }
        out
    }

    /// `Σ_j M(j)`.
    pub fn total(&self) -> usize {
        self.values.values().sum()
    }
}

/// All `M` with `M(0) = 0` and column sums `lambda`. With `binary` the
/// domain is `{0,1}^ℓ`, otherwise `ℕ^ℓ` (pruned to `j ≤ λ` componentwise).
pub fn functions_m(lambda: &[usize], binary: bool) -> Vec<FunctionM> {
    let mut vectors: Vec<Vec<usize>> = vec![vec![]];
    for &l in lambda {
        let top = if binary { l.min(1) } else { l };
        vectors = vectors
            .into_iter()
            .flat_map(|v| {
                (0..=top).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    vectors.retain(|v| v.iter().any(|&x| x > 0));

    fn rec(
        idx: usize,
        vectors: &[Vec<usize>],
        remaining: &mut Vec<usize>,
        cur: &mut BTreeMap<Vec<usize>, usize>,
        out: &mut Vec<FunctionM>,
    ) {
        if remaining.iter().all(|&r| r == 0) {
            out.push(FunctionM {
                values: cur.clone(),
            });
            return;
        }
        if idx == vectors.len() {
            return;
        }
        let j = &vectors[idx];
        let max = j
            .iter()
            .zip(remaining.iter())
            .filter(|(&ji, _)| ji > 0)
            .map(|(&ji, &r)| r / ji)
            .min()
            .unwrap_or(0);
        for m in (0..=max).rev() {
            if m > 0 {
                for (r, &ji) in remaining.iter_mut().zip(j) {
                    *r -= ji * m;
                }
                cur.insert(j.clone(), m);
            }
            rec(idx + 1, vectors, remaining, cur, out);
            if m > 0 {
                for (r, &ji) in remaining.iter_mut().zip(j) {
                    *r += ji * m;
                }
                cur.remove(j);
            }
        }
    }

    let mut out = Vec::new();
    rec(
        0,
        &vectors,
        &mut lambda.to_vec(),
        &mut BTreeMap::new(),
        &mut out,
    );
    out
}

/// `F_Sur{h_λ}` by summing over the functions `M`.
pub fn fsur_h_direct(lambda: &Partition) -> SymFunc {
    let mut counts: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for m in functions_m(lambda.parts(), false) {
        let idx: Vec<usize> = m.values().values().copied().collect();
        *counts
            .entry(Partition::from_composition(&idx))
            .or_insert_with(|| BigRational::from_integer(0.into())) += BigRational::one();
    }
    SymFunc::from_basis_coefficients(Basis::H, counts.iter())
}

/// `F_Sur{e_λ}` by summing over the functions `M` on `{0,1}^ℓ`.
pub fn fsur_e_direct(lambda: &Partition) -> SymFunc {
    let mut counts: BTreeMap<(Partition, Partition), i64> = BTreeMap::new();
    for m in functions_m(lambda.parts(), true) {
        let (mut hs, mut es) = (Vec::new(), Vec::new());
        for (j, &v) in m.values() {
            if j.iter().sum::<usize>() % 2 == 0 {
                hs.push(v);
            } else {
                es.push(v);
            }
        }
        *counts
            .entry((
                Partition::from_composition(&hs),
                Partition::from_composition(&es),
            ))
            .or_default() += 1;
    }
    counts
        .into_iter()
        .map(|((h, e), c)| {
            let prod = &SymFunc::from_basis(Basis::H, &h) * &SymFunc::from_basis(Basis::E, &e);
            prod.scale(&BigRational::from_integer(c.into()))
        })
        .sum()
}

/// `Σ_{d | g} d^{k-1} p_d`, the contribution of one block of size `k` whose
/// parts have gcd `g`.
fn block_factor(g: usize, k: usize) -> SymFunc {
    (1..=g)
        .filter(|d| g % d == 0)
        .map(|d| {
            let c = BigInt::from(d).pow((k - 1) as u32);
            SymFunc::p_term(Partition::row(d), BigRational::from_integer(c))
        })
        .sum()
}

/// `F_Sur{p_λ}` by the set-partition formula. Set partitions with the same
/// multiset of block contents give equal products, so the sum is organized
/// as a recursion on the multiset of parts not yet placed: the block of the
/// first remaining part is chosen as a sub-multiset of the rest, counted
/// with binomial multiplicities.
pub fn fsur_p_direct(lambda: &Partition) -> SymFunc {
    fn rec(parts: &[usize], memo: &mut HashMap<Vec<usize>, SymFunc>) -> SymFunc {
        if parts.is_empty() {
            return SymFunc::one();
        }
        if let Some(v) = memo.get(parts) {
            return v.clone();
        }
        let first = parts[0];
        let rest = Partition::from_composition(&parts[1..]);
        let mults = rest.multiplicities();
        let mut total = SymFunc::zero();
        let mut take = vec![0usize; mults.len()];
        loop {
            let mut ways = BigInt::one();
            let mut g = first;
            let mut size = 1;
            let mut remaining = Vec::with_capacity(parts.len());
            for (&(part, mult), &t) in mults.iter().zip(&take) {
                ways *= binomial(mult, t);
                if t > 0 {
                    g = g.gcd(&part);
                    size += t;
                }
                remaining.extend(std::iter::repeat_n(part, mult - t));
            }
            let term = &block_factor(g, size) * &rec(&remaining, memo);
            total += &term.scale(&BigRational::from_integer(ways));
            // next sub-multiset in mixed radix
            let mut i = 0;
            while i < take.len() && take[i] == mults[i].1 {
                take[i] = 0;
                i += 1;
            }
            if i == take.len() {
                break;
            }
            take[i] += 1;
        }
        memo.insert(parts.to_vec(), total.clone());
        total
    }
    rec(lambda.parts(), &mut HashMap::new())
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

/// All set partitions of `{1, …, n}`, blocks listed by smallest element.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i > n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            rec(i + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        rec(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(1, n, &mut Vec::new(), &mut out);
    out
}

/// `F_Sur{p_λ}` by literally enumerating set partitions of `{1, …, ℓ}`.
pub fn fsur_p_by_set_partitions(lambda: &Partition) -> SymFunc {
    set_partitions(lambda.len())
        .into_iter()
        .map(|pi| {
            pi.iter().fold(SymFunc::one(), |acc, block| {
                let g = block
                    .iter()
                    .fold(0usize, |g, &i| g.gcd(&lambda.part(i - 1)));
                &acc * &block_factor(g, block.len())
            })
        })
        .sum()
}
