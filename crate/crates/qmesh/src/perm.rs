//! Permutations in one-line notation and generation of avoidance classes.
//!
//! Positions and values are 1-based, matching the usual one-line notation
//! `σ = σ_1 … σ_n`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A permutation of `{1, …, n}` stored as its one-line word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from a word that must already be a bijection on `{1..n}`.
    pub fn new(word: Vec<u32>) -> Result<Self, Error> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for (pos, &v) in word.iter().enumerate() {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} at position {} is outside 1..={n}", pos + 1)));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated at position {}", pos + 1)));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    /// Internal constructor for words known to be valid.
    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as u32).collect() }
    }

    /// The decreasing permutation `n … 2 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation { word: (1..=n as u32).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    pub fn reverse(&self) -> Self {
        Permutation { word: self.word.iter().rev().copied().collect() }
    }

    pub fn complement(&self) -> Self {
        let n = self.len() as u32;
        Permutation { word: self.word.iter().map(|&v| n + 1 - v).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation { word: inv }
    }

    /// 1-based positions of the left-to-right minima.
    pub fn left_to_right_minima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut low = u32::MAX;
        for (i, &v) in self.word.iter().enumerate() {
            if v < low {
                low = v;
                out.push(i + 1);
            }
        }
        out
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !occurs(pattern, self)
    }
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts either a plain digit string ("867943251") or a comma-separated list.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Permutation::empty());
        }
        let word: Result<Vec<u32>, Error> = if s.contains(',') {
            s.split(',')
                .enumerate()
                .map(|(i, tok)| {
                    tok.trim().parse::<u32>().map_err(|_| {
                        Error::InvalidPermutation(format!(
                            "entry {} ({:?}) is not a positive integer",
                            i + 1,
                            tok.trim()
                        ))
                    })
                })
                .collect()
        } else {
            s.chars()
                .enumerate()
                .map(|(i, c)| {
                    c.to_digit(10).ok_or_else(|| {
                        Error::InvalidPermutation(format!("character {:?} at position {} is not a digit", c, i + 1))
                    })
                })
                .collect()
        };
        Permutation::new(word?)
    }
}

/// Standardizes a word of distinct integers to the order-isomorphic permutation.
pub fn reduce<T: Ord + Copy + fmt::Debug>(word: &[T]) -> Result<Permutation, Error> {
    let mut idx: Vec<usize> = (0..word.len()).collect();
    idx.sort_by_key(|&i| word[i]);
    for w in idx.windows(2) {
        if word[w[0]] == word[w[1]] {
            return Err(Error::InvalidPermutation(format!("duplicate entry {:?}", word[w[0]])));
        }
    }
    let mut out = vec![0u32; word.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Ok(Permutation { word: out })
}

/// True iff some subsequence of `sigma` is order-isomorphic to `pattern`.
pub fn occurs(pattern: &Permutation, sigma: &Permutation) -> bool {
    let p = pattern.word();
    let s = sigma.word();
    match p {
        [] => true,
        [_] => !s.is_empty(),
        [1, 2, 3] => contains_123(s),
        [1, 3, 2] => contains_132(s),
        _ => embed(p, s, 0, &mut Vec::with_capacity(p.len())),
    }
}

fn contains_123(s: &[u32]) -> bool {
    // smallest value seen, and smallest value that ends an increasing pair
    let mut low = u32::MAX;
    let mut mid = u32::MAX;
    for &v in s {
        if v > mid {
            return true;
        }
        if v > low {
            mid = mid.min(v);
        }
        low = low.min(v);
    }
    false
}

fn contains_132(s: &[u32]) -> bool {
    // scan for j,k with s[j] > s[k] > min(s[..j])
    let mut prefix_min = u32::MAX;
    for j in 0..s.len() {
        if prefix_min < s[j] {
            for &v in &s[j + 1..] {
                if v > prefix_min && v < s[j] {
                    return true;
                }
            }
        }
        prefix_min = prefix_min.min(s[j]);
    }
    false
}

fn embed(p: &[u32], s: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
    let k = chosen.len();
    if k == p.len() {
        return true;
    }
    for j in start..s.len() {
        let v = s[j];
        let consistent = chosen.iter().zip(p).all(|(&c, &pc)| (pc < p[k]) == (c < v));
        if consistent {
            chosen.push(v);
            if embed(p, s, j + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Does appending `v` to `prefix` complete an occurrence of `pattern` ending at `v`?
fn completes_occurrence(pattern: &[u32], prefix: &[u32], v: u32) -> bool {
    match pattern {
        [1, 2, 3] => {
            // need a < b < v with a before b
            let mut low = u32::MAX;
            for &b in prefix {
                if b < v && low < b {
                    return true;
                }
                low = low.min(b);
            }
            false
        }
        [1, 3, 2] => {
            // need a < v < b with a before b
            let mut low = u32::MAX;
            for &b in prefix {
                if b > v && low < v {
                    return true;
                }
                low = low.min(b);
            }
            false
        }
        _ => {
            let Some((&last, head)) = pattern.split_last() else {
                return true;
            };
            sub_embed_with_last(head, last, prefix, v, 0, &mut Vec::new())
        }
    }
}

fn sub_embed_with_last(head: &[u32], last: u32, s: &[u32], v: u32, start: usize, chosen: &mut Vec<u32>) -> bool {
    let k = chosen.len();
    if k == head.len() {
        return true;
    }
    for j in start..s.len() {
        let c = s[j];
        if (head[k] < last) != (c < v) {
            continue;
        }
        let consistent = chosen.iter().zip(head).all(|(&x, &px)| (px < head[k]) == (x < c));
        if consistent {
            chosen.push(c);
            if sub_embed_with_last(head, last, s, v, j + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Calls `visit` on every permutation of length `n` avoiding `tau`, in lexicographic order.
///
/// Prefixes are pruned as soon as their last entry completes an occurrence of `tau`,
/// so nothing outside the avoidance class is ever materialized.
pub fn for_each_avoider<F: FnMut(&Permutation)>(n: usize, tau: &Permutation, mut visit: F) {
    let pattern = tau.word().to_vec();
    let mut word: Vec<u32> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    let mut scratch = Permutation::empty();
    fn rec<F: FnMut(&Permutation)>(
        n: usize,
        pattern: &[u32],
        word: &mut Vec<u32>,
        used: &mut [bool],
        scratch: &mut Permutation,
        visit: &mut F,
    ) {
        if word.len() == n {
            std::mem::swap(&mut scratch.word, word);
            visit(scratch);
            std::mem::swap(&mut scratch.word, word);
            return;
        }
        for v in 1..=n as u32 {
            if used[v as usize] {
                continue;
            }
            if pattern.len() <= word.len() + 1 && completes_occurrence(pattern, word, v) {
                continue;
            }
            used[v as usize] = true;
            word.push(v);
            rec(n, pattern, word, used, scratch, visit);
            word.pop();
            used[v as usize] = false;
        }
    }
    if pattern.is_empty() {
        // the empty pattern occurs in everything
        return;
    }
    rec(n, &pattern, &mut word, &mut used, &mut scratch, &mut visit);
}

/// All permutations of length `n` avoiding `tau`, in lexicographic order.
pub fn avoiders(n: usize, tau: &Permutation) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_avoider(n, tau, |p| out.push(p.clone()));
    out
}

/// The pattern 123.
pub fn p123() -> Permutation {
    Permutation { word: vec![1, 2, 3] }
}

/// The pattern 132.
pub fn p132() -> Permutation {
    Permutation { word: vec![1, 3, 2] }
}

/// The two avoidance classes the statistics are defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    Avoid123,
    Avoid132,
}

impl Class {
    pub fn pattern(self) -> Permutation {
        match self {
            Class::Avoid123 => p123(),
            Class::Avoid132 => p132(),
        }
    }

    pub fn contains(self, sigma: &Permutation) -> bool {
        sigma.avoids(&self.pattern())
    }
}

impl TryFrom<&Permutation> for Class {
    type Error = Error;

    fn try_from(tau: &Permutation) -> Result<Self, Error> {
        match tau.word() {
            [1, 2, 3] => Ok(Class::Avoid123),
            [1, 3, 2] => Ok(Class::Avoid132),
            _ => Err(Error::UnsupportedClass(tau.to_string())),
        }
    }
}

impl FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "123" => Ok(Class::Avoid123),
            "132" => Ok(Class::Avoid132),
            other => Err(Error::UnsupportedClass(other.to_string())),
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::Avoid123 => "123",
            Class::Avoid132 => "132",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&[2, 7, 5, 4]).unwrap(), perm("1432"));
        assert_eq!(reduce::<u32>(&[]).unwrap(), Permutation::empty());
        assert_eq!(reduce(&[10, 20, 30]).unwrap(), perm("123"));
        assert!(reduce(&[3, 1, 3]).is_err());
    }

    #[test]
    fn occurs_examples() {
        assert!(!occurs(&p132(), &perm("867943251")));
        assert!(!occurs(&p123(), &perm("869743251")));
        assert!(occurs(&perm("1"), &perm("21")));
        assert!(!occurs(&p123(), &perm("2413")));
        assert!(occurs(&p132(), &perm("2413")));
        assert!(!occurs(&p132(), &perm("3412")));
        assert!(occurs(&perm("2413"), &perm("25314")));
    }

    #[test]
    fn involutions() {
        assert_eq!(perm("123").reverse(), perm("321"));
        assert_eq!(perm("471569283").complement(), perm("639541827"));
        let s = perm("471569283");
        assert_eq!(s.inverse().inverse(), s);
        assert_eq!(s.reverse().reverse(), s);
        assert_eq!(s.complement().complement(), s);
    }

    #[test]
    fn minima() {
        let s = perm("867943251");
        let vals: Vec<u32> = s.left_to_right_minima().iter().map(|&j| s.at(j)).collect();
        assert_eq!(vals, vec![8, 6, 4, 3, 2, 1]);
        assert_eq!(Permutation::identity(5).left_to_right_minima(), vec![1]);
        assert_eq!(Permutation::decreasing(4).left_to_right_minima(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn class_sizes() {
        assert_eq!(avoiders(9, &p123()).len(), 4862);
        assert_eq!(avoiders(0, &p123()), vec![Permutation::empty()]);
        assert_eq!(avoiders(4, &perm("2413")).len(), 23);
        assert_eq!(avoiders(5, &perm("1234")).len(), 103);
    }

    #[test]
    fn display_forms() {
        assert_eq!(perm("867943251").to_string(), "867943251");
        let ten: Permutation = "8,6,10,9,4,3,2,7,1,5".parse().unwrap();
        assert_eq!(ten.to_string(), "8,6,10,9,4,3,2,7,1,5");
        assert!("1224".parse::<Permutation>().is_err());
        assert!("12a".parse::<Permutation>().is_err());
    }
}
