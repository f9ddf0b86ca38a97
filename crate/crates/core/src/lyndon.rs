//! Words, Lyndon words and the Chen–Fox–Lyndon factorization.
//!
//! The free functions are generic over any totally ordered letter type and
//! compare words lexicographically with a proper prefix being smaller.
//! [`Word`] adds an explicit alphabet, either `[ℓ] = {1, …, ℓ}` or the pairs
//! `[ℓ]²` ordered lexicographically.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::series::mobius;

/// Nonempty and strictly smaller than each of its proper suffixes.
pub fn is_lyndon<T: Ord>(w: &[T]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Duval's scan: the unique factorization `w = u_1 u_2 ⋯ u_k` into Lyndon
/// words with `u_1 ≥ u_2 ≥ ⋯ ≥ u_k`.
pub fn factorize<T: Ord>(w: &[T]) -> Vec<&[T]> {
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && w[k] <= w[j] {
            if w[k] < w[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push(&w[i..i + j - k]);
            i += j - k;
        }
    }
    out
}

/// Multiplicities of the distinct Lyndon factors, sorted decreasingly.
pub fn pi_of_word<T: Ord>(w: &[T]) -> Partition {
    let factors = factorize(w);
    let mut counts: Vec<usize> = Vec::new();
    // equal factors are adjacent because the factorization is non-increasing
    let mut prev: Option<&[T]> = None;
    for f in factors {
        if prev == Some(f) {
            *counts.last_mut().unwrap() += 1;
        } else {
            counts.push(1);
            prev = Some(f);
        }
    }
    Partition::from_composition(&counts)
}

/// Lyndon words over `{1, …, k}` of length at most `n`, in lexicographic
/// order (Fredricksen–Kessler–Maiorana generation).
pub fn lyndon_words(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || n == 0 {
        return out;
    }
    let mut w: Vec<usize> = vec![0];
    while !w.is_empty() {
        *w.last_mut().unwrap() += 1;
        out.push(w.clone());
        let m = w.len();
        while w.len() < n {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&k) {
            w.pop();
        }
    }
    out
}

/// Number of Lyndon words of length `n` over `ℓ` letters:
/// `(1/n) Σ_{d | n} μ(d) ℓ^{n/d}`.
pub fn witt_count(l: usize, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    let mut total = BigInt::zero();
    for d in (1..=n).filter(|d| n % d == 0) {
        total += BigInt::from(mobius(d)) * BigInt::from(l).pow((n / d) as u32);
    }
    total / n
}

/// All words with the given content (`content[i]` copies of letter `i + 1`),
/// in lexicographic order.
pub fn words_with_content(content: &[usize]) -> Vec<Vec<usize>> {
    fn rec(remaining: &mut [usize], cur: &mut Vec<usize>, len: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in 0..remaining.len() {
            if remaining[i] > 0 {
                remaining[i] -= 1;
                cur.push(i + 1);
                rec(remaining, cur, len, out);
                cur.pop();
                remaining[i] += 1;
            }
        }
    }
    let len = content.iter().sum();
    let mut out = Vec::new();
    rec(
        &mut content.to_vec(),
        &mut Vec::with_capacity(len),
        len,
        &mut out,
    );
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// `{1, …, ℓ}`
    Range(usize),
    /// `{1, …, ℓ}²`, ordered lexicographically.
    Pairs(usize),
}

impl Alphabet {
    pub fn len(self) -> usize {
        match self {
            Alphabet::Range(l) => l,
            Alphabet::Pairs(l) => l * l,
        }
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }

    /// The pair `(i, j)` as a letter of `[ℓ]²`.
    pub fn pair(self, i: usize, j: usize) -> Result<usize> {
        match self {
            Alphabet::Pairs(l) if (1..=l).contains(&i) && (1..=l).contains(&j) => {
                Ok((i - 1) * l + j)
            }
            _ => Err(Error::InvalidArgument(format!(
                "({i},{j}) is not a letter of {self:?}"
            ))),
        }
    }

    /// Inverse of [`Alphabet::pair`].
    pub fn unpair(self, letter: usize) -> (usize, usize) {
        match self {
            Alphabet::Pairs(l) => ((letter - 1) / l + 1, (letter - 1) % l + 1),
            Alphabet::Range(_) => (letter, 0),
        }
    }
}

/// A word over a declared alphabet. Letters are stored as positions
/// `1..=alphabet.len()` in the alphabet's order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<usize>,
    alphabet: AlphabetKey,
}

// `Alphabet` itself is not ordered; words order by letters first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct AlphabetKey(u8, usize);

impl From<Alphabet> for AlphabetKey {
    fn from(a: Alphabet) -> Self {
        match a {
            Alphabet::Range(l) => AlphabetKey(0, l),
            Alphabet::Pairs(l) => AlphabetKey(1, l),
        }
    }
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&x| x == 0 || x > alphabet.len()) {
            return Err(Error::InvalidArgument(format!(
                "letter {bad} outside alphabet of size {}",
                alphabet.len()
            )));
        }
        Ok(Word {
            letters,
            alphabet: alphabet.into(),
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        match self.alphabet {
            AlphabetKey(0, l) => Alphabet::Range(l),
            AlphabetKey(_, l) => Alphabet::Pairs(l),
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `content()[a - 1]` is the number of occurrences of letter `a`.
    pub fn content(&self) -> Vec<usize> {
        let mut c = vec![0; self.alphabet().len()];
        for &x in &self.letters {
            c[x - 1] += 1;
        }
        c
    }

    pub fn is_lyndon(&self) -> bool {
        is_lyndon(&self.letters)
    }

    pub fn factorize(&self) -> Vec<Word> {
        factorize(&self.letters)
            .into_iter()
            .map(|f| Word {
                letters: f.to_vec(),
                alphabet: self.alphabet,
            })
            .collect()
    }

    pub fn pi(&self) -> Partition {
        pi_of_word(&self.letters)
    }

    /// Parses a word over `[ℓ]`: a digit string (e.g. `21211`) or a
    /// comma-separated list (e.g. `10,2,10`). The alphabet is the largest
    /// letter unless `alphabet_size` is given.
    pub fn parse(s: &str, alphabet_size: Option<usize>) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('(') {
            return Self::parse_pairs(s, alphabet_size);
        }
        let letters: Vec<usize> = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidArgument(format!("bad letter {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidArgument(format!("bad letter {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        let l = alphabet_size.unwrap_or_else(|| letters.iter().copied().max().unwrap_or(1));
        Word::new(Alphabet::Range(l), letters)
    }

    /// Parses a word over `[ℓ]²` written as `(1,2)(2,1)`.
    fn parse_pairs(s: &str, alphabet_size: Option<usize>) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::InvalidArgument(format!("bad pair word {s:?}")))?;
            let (i, j) = inner
                .0
                .split_once(',')
                .ok_or_else(|| Error::InvalidArgument(format!("bad pair {:?}", inner.0)))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad letter {t:?}")))
            };
            pairs.push((parse(i)?, parse(j)?));
            rest = inner.1.trim_start();
        }
        let l = alphabet_size
            .unwrap_or_else(|| pairs.iter().map(|&(i, j)| i.max(j)).max().unwrap_or(1));
        let alphabet = Alphabet::Pairs(l);
        let letters = pairs
            .into_iter()
            .map(|(i, j)| alphabet.pair(i, j))
            .collect::<Result<_>>()?;
        Word::new(alphabet, letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.alphabet() {
            Alphabet::Range(l) if l <= 9 => {
                for x in &self.letters {
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            Alphabet::Range(_) => {
                let s: Vec<String> = self.letters.iter().map(usize::to_string).collect();
                write!(f, "{}", s.join(","))
            }
            a @ Alphabet::Pairs(_) => {
                for &x in &self.letters {
                    let (i, j) = a.unpair(x);
                    write!(f, "({i},{j})")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Lyndon words of length at most `n` over `alphabet`, grouped by content.
pub fn enumerate_lyndon(alphabet: Alphabet, n: usize) -> BTreeMap<Vec<usize>, Vec<Word>> {
    let mut out: BTreeMap<Vec<usize>, Vec<Word>> = BTreeMap::new();
    for letters in lyndon_words(alphabet.len(), n) {
        let w = Word {
            letters,
            alphabet: alphabet.into(),
        };
        out.entry(w.content()).or_default().push(w);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s, None).unwrap()
    }

    fn all_words(k: usize, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for len in 1..=n {
            let mut cur: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..len {
                cur = cur
                    .into_iter()
                    .flat_map(|v| {
                        (1..=k).map(move |x| {
                            let mut v = v.clone();
                            v.push(x);
                            v
                        })
                    })
                    .collect();
            }
            out.extend(cur);
        }
        out
    }

    /// Every way to cut `w` into non-increasing Lyndon pieces.
    fn brute_force_factorizations(w: &[usize]) -> Vec<Vec<Vec<usize>>> {
        fn rec(
            w: &[usize],
            prev: Option<&[usize]>,
            acc: &mut Vec<Vec<usize>>,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            if w.is_empty() {
                out.push(acc.clone());
                return;
            }
            for cut in 1..=w.len() {
                let head = &w[..cut];
                if is_lyndon(head) && prev.is_none_or(|p| p >= head) {
                    acc.push(head.to_vec());
                    rec(&w[cut..], Some(head), acc, out);
                    acc.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(w, None, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn lyndon_examples() {
        assert!(w("1").is_lyndon());
        assert!(w("12").is_lyndon());
        assert!(!w("21").is_lyndon());
        assert!(!w("1212").is_lyndon());
        assert!(!w("").is_lyndon());
    }

    #[test]
    fn factorization_examples() {
        let word = w("21212121111");
        let parts: Vec<String> = word.factorize().iter().map(Word::to_string).collect();
        assert_eq!(parts, ["2", "12", "12", "12", "1", "1", "1", "1"]);
        assert_eq!(word.pi(), Partition::new(vec![4, 3, 1]).unwrap());
        assert!(w("").factorize().is_empty());
        assert_eq!(w("111").factorize().len(), 3);
        assert_eq!(w("1111").pi(), Partition::row(4));
        assert_eq!(w("1122").pi(), Partition::row(1));
    }

    #[test]
    fn duval_matches_brute_force() {
        for word in all_words(3, 8) {
            let all = brute_force_factorizations(&word);
            assert_eq!(all.len(), 1, "{word:?}");
            let duval: Vec<Vec<usize>> = factorize(&word)
                .into_iter()
                .map(<[usize]>::to_vec)
                .collect();
            assert_eq!(duval, all[0]);
        }
    }

    #[test]
    fn factorization_is_valid_over_two_letters() {
        for word in all_words(2, 12) {
            let f = factorize(&word);
            assert!(f.iter().all(|u| is_lyndon(u)));
            assert!(f.windows(2).all(|p| p[0] >= p[1]));
            assert_eq!(f.concat(), word);
            assert_eq!(pi_of_word(&word).size(), f.len());
        }
    }

    #[test]
    fn enumeration_examples() {
        let two = enumerate_lyndon(Alphabet::Range(2), 3);
        let len2: Vec<String> = two
            .values()
            .flatten()
            .filter(|w| w.len() == 2)
            .map(Word::to_string)
            .collect();
        assert_eq!(len2, ["12"]);
        let mut len3: Vec<String> = two
            .values()
            .flatten()
            .filter(|w| w.len() == 3)
            .map(Word::to_string)
            .collect();
        len3.sort();
        assert_eq!(len3, ["112", "122"]);
        let one = enumerate_lyndon(Alphabet::Range(1), 6);
        assert_eq!(one.values().flatten().count(), 1);
    }

    #[test]
    fn witt_counts() {
        for l in 1..=3 {
            let words = lyndon_words(l, 8);
            for n in 1..=8 {
                let brute = all_words(l, n)
                    .into_iter()
                    .filter(|w| w.len() == n && is_lyndon(w))
                    .count();
                let fkm = words.iter().filter(|w| w.len() == n).count();
                assert_eq!(BigInt::from(brute), witt_count(l, n), "l={l} n={n}");
                assert_eq!(fkm, brute);
            }
        }
        assert_eq!(witt_count(2, 2), BigInt::from(1));
        assert_eq!(witt_count(2, 3), BigInt::from(2));
    }

    #[test]
    fn words_with_content_counts() {
        let ws = words_with_content(&[2, 1]);
        assert_eq!(ws, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
        assert_eq!(words_with_content(&[2, 0, 2]).len(), 6);
        assert_eq!(words_with_content(&[]), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn printing_and_parsing() {
        assert_eq!(w("2121").to_string(), "2121");
        let big = Word::parse("10,2,10", None).unwrap();
        assert_eq!(big.to_string(), "10,2,10");
        assert_eq!(big.alphabet(), Alphabet::Range(10));
        let pairs = Word::parse("(1,2)(2,1)(1,1)", None).unwrap();
        assert_eq!(pairs.to_string(), "(1,2)(2,1)(1,1)");
        assert_eq!(pairs.letters(), &[2, 3, 1]);
        assert!(Word::parse("1a", None).is_err());
        assert!(Word::parse("13", Some(2)).is_err());
        assert!(Word::parse("(1,2", None).is_err());
    }

    proptest! {
        #[test]
        fn pi_has_word_length(v in prop::collection::vec(1usize..=4, 0..16)) {
            prop_assert_eq!(pi_of_word(&v).size(), factorize(&v).len());
            prop_assert_eq!(factorize(&v).concat(), v);
        }
    }
}
