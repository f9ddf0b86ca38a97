//! Integer partitions.
//!
//! Partitions are ordered canonically: first by size, then in *descending*
//! lexicographic order within a size, so the partitions of 3 come out as
//! `[3], [2,1], [1,1,1]`. Every enumeration and every matrix index in the crate
//! uses this order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates `parts` as a partition.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NotAPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts a composition into a partition, discarding zero entries.
    pub fn from_composition(parts: &[usize]) -> Self {
        let mut v: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-part partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (zero-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `m_i(λ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Pairs `(part, multiplicity)` in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// Cellwise intersection of Young diagrams.
    pub fn intersect(&self, other: &Partition) -> Self {
        let parts = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Partition(parts)
    }

    /// `self ⊆ other` as Young diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Side of the Durfee square: the largest `d` with `λ_d ≥ d`.
    pub fn durfee(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// `z_λ = ∏ i^{m_i} m_i!`, the size of the centralizer of a permutation of
    /// cycle type λ.
    pub fn z_value(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, mult) in self.multiplicities() {
            for k in 1..=mult {
                z *= part;
                z *= k;
            }
        }
        z
    }

    /// `(-1)^{|λ| - ℓ(λ)}`, the sign of a permutation of cycle type λ.
    pub fn sign(&self) -> i32 {
        if (self.size() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `μ^{(n)} = (n - |μ|, μ_1, μ_2, ...)`.
    pub fn stable_pad(&self, n: usize) -> Result<Self> {
        let size = self.size();
        let first = n
            .checked_sub(size)
            .filter(|&f| f >= self.part(0))
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "cannot pad {self} to size {n}: need n >= {}",
                    self.part(0) + size
                ))
            })?;
        let mut parts = Vec::with_capacity(self.len() + 1);
        if first > 0 {
            parts.push(first);
        }
        parts.extend_from_slice(&self.0);
        Ok(Partition(parts))
    }

    /// Drops the first part.
    pub fn hat(&self) -> Self {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Multiset union of parts, i.e. the index of `p_λ p_μ`.
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j == other.len() || (i < self.len() && self.0[i] >= other.0[j]) {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        Partition(parts)
    }

    /// Multiplies every part by `k`, the index of `p_k[p_λ]`.
    pub fn scale(&self, k: usize) -> Self {
        Partition(self.0.iter().map(|p| p * k).collect())
    }

    /// Whether `self / inner` is a horizontal strip (at most one cell per column).
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        inner.is_contained_in(self)
            && (0..self.len()).all(|i| i + 1 >= self.len() || self.0[i + 1] <= inner.part(i))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a comma-separated list of nonnegative integers, brackets optional.
pub(crate) fn parse_index_list(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let t = t
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(t)
        .trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::NotAPartition(format!("{s:?}: bad entry {x:?}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_index_list(s)?)
    }
}

/// All partitions of `n` in canonical order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n` in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Partitions of `n` with every part at most `max_part`.
pub fn partitions_with_max_part(n: usize, max_part: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.part(0) <= max_part)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(p(&[3, 1]).intersect(&p(&[2, 2])), p(&[2, 1]));
        assert_eq!(p(&[4, 2, 1]).intersect(&p(&[4, 2, 1])), p(&[4, 2, 1]));
        assert_eq!(p(&[5]).intersect(&p(&[1, 1, 1])), p(&[1]));
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(Partition::empty().durfee(), 0);
        assert_eq!(p(&[3, 2, 2]).durfee(), 2);
        assert_eq!(p(&[1, 1, 1, 1]).durfee(), 1);
    }

    #[test]
    fn z_examples() {
        assert_eq!(p(&[1, 1]).z_value(), BigInt::from(2));
        assert_eq!(p(&[2]).z_value(), BigInt::from(2));
        assert_eq!(p(&[3, 1, 1]).z_value(), BigInt::from(6));
        assert_eq!(Partition::empty().z_value(), BigInt::from(1));
    }

    /// Independent count: p(n, k) = p(n, k - 1) + p(n - k, k).
    fn partition_count(n: usize) -> usize {
        let mut table = vec![vec![0usize; n + 1]; n + 1];
        for row in table.iter_mut() {
            row[0] = 1;
        }
        for k in 1..=n {
            for m in 1..=n {
                table[k][m] = table[k - 1][m] + if m >= k { table[k][m - k] } else { 0 };
            }
        }
        table[n][n]
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(8).len(), 22);
        for n in 0..=15 {
            let ps = partitions_of(n);
            assert_eq!(ps.len(), if n == 0 { 1 } else { partition_count(n) });
            assert!(ps.windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=10usize {
            let fact: BigInt = (1..=n).fold(BigInt::one(), |a, k| a * k);
            let total: BigInt = partitions_of(n).iter().map(|l| &fact / l.z_value()).sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn stable_pad_and_hat() {
        assert_eq!(p(&[2, 1]).stable_pad(7).unwrap(), p(&[4, 2, 1]));
        assert_eq!(p(&[4, 2, 1]).hat(), p(&[2, 1]));
        assert!(p(&[2, 1]).stable_pad(4).is_err());
        assert_eq!(
            Partition::empty().stable_pad(0).unwrap(),
            Partition::empty()
        );
        assert_eq!(Partition::empty().stable_pad(3).unwrap(), p(&[3]));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("[3,2,1]".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("3, 2,1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[2,0]".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 2, 1]).to_string(), "[3,2,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
    }

    #[test]
    fn horizontal_strips() {
        assert!(p(&[3, 1]).is_horizontal_strip_over(&p(&[1])));
        assert!(p(&[2, 2]).is_horizontal_strip_over(&p(&[2])));
        assert!(!p(&[2, 2]).is_horizontal_strip_over(&p(&[1])));
        assert!(p(&[2, 2]).is_horizontal_strip_over(&p(&[2, 1])));
        assert!(p(&[4]).is_horizontal_strip_over(&Partition::empty()));
        assert!(!p(&[1, 1]).is_horizontal_strip_over(&Partition::empty()));
    }

    use proptest::prelude::*;

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..8, 0..7).prop_map(|v| Partition::from_composition(&v))
    }

    proptest! {
        #[test]
        fn conjugate_is_size_preserving_involution(l in arb_partition()) {
            prop_assert_eq!(l.conjugate().size(), l.size());
            prop_assert_eq!(l.conjugate().conjugate(), l.clone());
            prop_assert_eq!(l.durfee(), l.conjugate().durfee());
        }

        #[test]
        fn intersection_laws(a in arb_partition(), b in arb_partition(), c in arb_partition()) {
            let ab = a.intersect(&b);
            prop_assert!(ab.is_contained_in(&a) && ab.is_contained_in(&b));
            prop_assert_eq!(&ab, &b.intersect(&a));
            prop_assert_eq!(ab.intersect(&c), a.intersect(&b.intersect(&c)));
        }

        #[test]
        fn pad_then_hat(m in arb_partition(), extra in 0usize..5) {
            let n = m.part(0) + m.size() + extra;
            let padded = m.stable_pad(n).unwrap();
            prop_assert_eq!(padded.size(), n);
            prop_assert_eq!(padded.hat(), m);
        }
    }
}
