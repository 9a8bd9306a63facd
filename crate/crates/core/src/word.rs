//! Words over a truncated alphabet `{1..n}` and the structural maps the
//! axioms quantify over: abelianization (content), interval restriction
//! and ordered morphisms.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A letter of the alphabet `{1..n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub fn new(value: u32, n: u8) -> Result<Self> {
        if value == 0 || value > n as u32 {
            return Err(Error::LetterOutOfRange { letter: value, n });
        }
        Ok(Letter(value as u8))
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn check_alphabet(n: u32) -> Result<u8> {
    if n == 0 || n > u8::MAX as u32 {
        return Err(Error::InvalidAlphabet(n));
    }
    Ok(n as u8)
}

/// An element of the free monoid on `{1..n}`.
///
/// The alphabet bound is part of the value: two words with the same letters
/// over different truncations are different words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    n: u8,
    letters: Vec<u8>,
}

impl Word {
    pub fn new(n: u8, letters: Vec<u8>) -> Result<Self> {
        check_alphabet(n as u32)?;
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > n) {
            return Err(Error::LetterOutOfRange {
                letter: bad as u32,
                n,
            });
        }
        Ok(Word { n, letters })
    }

    /// Builds a word without range checks. Callers guarantee `1 <= l <= n`.
    pub(crate) fn from_raw(n: u8, letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1 && l <= n));
        Word { n, letters }
    }

    pub fn empty(n: u8) -> Self {
        Word {
            n,
            letters: Vec::new(),
        }
    }

    /// Parses the text format: one digit per letter when `n <= 9`,
    /// comma-separated integers otherwise. A comma anywhere forces the
    /// comma-separated reading. The empty string is the identity.
    pub fn parse(s: &str, n: u8) -> Result<Self> {
        check_alphabet(n as u32)?;
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty(n));
        }
        let values: Vec<u32> = if s.contains(',') || n > 9 {
            s.split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::ParseWord(s.to_string()))?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::ParseWord(s.to_string()))
                })
                .collect::<Result<_>>()?
        };
        let letters = values
            .into_iter()
            .map(|v| Letter::new(v, n).map(Letter::value))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { n, letters })
    }

    pub fn alphabet_size(&self) -> u8 {
        self.n
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.n != other.n {
            return Err(Error::AlphabetMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = Vec::with_capacity(self.degree() + other.degree());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word { n: self.n, letters })
    }

    pub fn content(&self) -> ContentVector {
        let mut counts = vec![0u32; self.n as usize];
        for &l in &self.letters {
            counts[l as usize - 1] += 1;
        }
        ContentVector { counts }
    }

    /// Deletes every letter outside `interval`. The alphabet bound is kept.
    pub fn restrict(&self, interval: Interval) -> Word {
        Word {
            n: self.n,
            letters: self
                .letters
                .iter()
                .copied()
                .filter(|&l| interval.contains(l))
                .collect(),
        }
    }

    pub fn apply_morphism(&self, morphism: &OrderedMorphism) -> Result<Word> {
        let letters = self
            .letters
            .iter()
            .map(|&l| morphism.image(l).ok_or(Error::MorphismDomain(l)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word {
            n: morphism.target_n,
            letters,
        })
    }

    /// Same letters over a larger (or equal) alphabet.
    pub fn widen(&self, n: u8) -> Result<Word> {
        Word::new(n, self.letters.clone())
    }

    /// All `n^degree` words of the given degree, in lexicographic order.
    pub fn all(n: u8, degree: usize) -> AllWords {
        AllWords {
            n,
            current: if n == 0 && degree > 0 {
                None
            } else {
                Some(vec![1; degree])
            },
        }
    }

    /// All words of degree `0..=max_degree`, shortest first.
    pub fn all_up_to(n: u8, max_degree: usize) -> impl Iterator<Item = Word> {
        (0..=max_degree).flat_map(move |d| Word::all(n, d))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 9 {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
        } else {
            for (i, l) in self.letters.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

/// Lexicographic odometer over `{1..n}^degree`.
pub struct AllWords {
    n: u8,
    current: Option<Vec<u8>>,
}

impl Iterator for AllWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.take()?;
        let out = Word {
            n: self.n,
            letters: cur.clone(),
        };
        let mut next = cur;
        let mut i = next.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if next[i] < self.n {
                next[i] += 1;
                for x in &mut next[i + 1..] {
                    *x = 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Image of a word in the free commutative monoid: `counts[a-1]` is the
/// multiplicity of letter `a`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContentVector {
    counts: Vec<u32>,
}

impl ContentVector {
    pub fn zero(n: u8) -> Self {
        ContentVector {
            counts: vec![0; n as usize],
        }
    }

    pub fn from_counts(counts: Vec<u32>) -> Self {
        ContentVector { counts }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn get(&self, letter: u8) -> u32 {
        self.counts.get(letter as usize - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    pub fn add_letter(&mut self, letter: u8) {
        self.counts[letter as usize - 1] += 1;
    }
}

impl fmt::Display for ContentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if c == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, c)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// The interval `{k : lo <= k <= hi}` of the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    lo: u8,
    hi: u8,
}

impl Interval {
    pub fn new(lo: u8, hi: u8) -> Result<Self> {
        if lo == 0 || lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    pub fn full(n: u8) -> Self {
        Interval {
            lo: 1,
            hi: n.max(1),
        }
    }

    pub fn lo(self) -> u8 {
        self.lo
    }

    pub fn hi(self) -> u8 {
        self.hi
    }

    pub fn contains(self, letter: u8) -> bool {
        self.lo <= letter && letter <= self.hi
    }

    /// Every interval of `{1..n}`, shortest first, then by left end.
    pub fn all(n: u8) -> Vec<Interval> {
        let mut out = Vec::new();
        for len in 1..=n {
            for lo in 1..=(n - len + 1) {
                out.push(Interval {
                    lo,
                    hi: lo + len - 1,
                });
            }
        }
        out
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// A strictly increasing map from a subalphabet of `{1..source_n}` into
/// `{1..target_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedMorphism {
    map: BTreeMap<u8, u8>,
    target_n: u8,
}

impl OrderedMorphism {
    pub fn new(pairs: impl IntoIterator<Item = (u8, u8)>, target_n: u8) -> Result<Self> {
        check_alphabet(target_n as u32)?;
        let mut map = BTreeMap::new();
        for (s, t) in pairs {
            if s == 0 || t == 0 || t > target_n {
                return Err(Error::InvalidMorphism(format!("{s} -> {t} out of range")));
            }
            if map.insert(s, t).is_some() {
                return Err(Error::InvalidMorphism(format!("letter {s} mapped twice")));
            }
        }
        let images: Vec<u8> = map.values().copied().collect();
        if images.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidMorphism(
                "map is not strictly increasing".into(),
            ));
        }
        Ok(OrderedMorphism { map, target_n })
    }

    pub fn identity(n: u8) -> Self {
        OrderedMorphism {
            map: (1..=n).map(|a| (a, a)).collect(),
            target_n: n,
        }
    }

    pub fn image(&self, letter: u8) -> Option<u8> {
        self.map.get(&letter).copied()
    }

    pub fn source(&self) -> impl Iterator<Item = u8> + '_ {
        self.map.keys().copied()
    }

    pub fn target_n(&self) -> u8 {
        self.target_n
    }

    /// Every ordered morphism between nonempty subalphabets of `{1..n}`.
    pub fn all_between_subalphabets(n: u8) -> Vec<OrderedMorphism> {
        let subsets: Vec<Vec<u8>> = (1u32..(1u32 << n))
            .map(|mask| (1..=n).filter(|&a| mask & (1 << (a - 1)) != 0).collect())
            .collect();
        let mut out = Vec::new();
        for src in &subsets {
            for dst in subsets.iter().filter(|d| d.len() == src.len()) {
                out.push(OrderedMorphism {
                    map: src.iter().copied().zip(dst.iter().copied()).collect(),
                    target_n: n,
                });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 9).unwrap()
    }

    #[test]
    fn concat_examples() {
        assert_eq!(w("12").concat(&w("3")).unwrap(), w("123"));
        assert_eq!(w("").concat(&w("21")).unwrap(), w("21"));
        assert_eq!(w("31").concat(&w("2")).unwrap(), w("312"));
    }

    #[test]
    fn concat_rejects_mismatched_alphabets() {
        let a = Word::parse("1", 3).unwrap();
        let b = Word::parse("1", 4).unwrap();
        assert_eq!(
            a.concat(&b),
            Err(Error::AlphabetMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn content_examples() {
        assert_eq!(
            Word::parse("1243", 4).unwrap().content().counts(),
            &[1, 1, 1, 1]
        );
        assert_eq!(Word::empty(3).content().counts(), &[0, 0, 0]);
        assert_eq!(Word::parse("121", 2).unwrap().content().counts(), &[2, 1]);
    }

    #[test]
    fn restrict_examples() {
        let i12 = Interval::new(1, 2).unwrap();
        assert_eq!(w("1243").restrict(i12), w("12"));
        assert_eq!(w("3142").restrict(Interval::full(9)), w("3142"));
        assert_eq!(w("3142").restrict(Interval::new(2, 3).unwrap()), w("32"));
    }

    #[test]
    fn morphism_examples() {
        let om = OrderedMorphism::new([(1, 3), (2, 5)], 9).unwrap();
        assert_eq!(w("12").apply_morphism(&om).unwrap(), w("35"));
        assert_eq!(
            w("121")
                .apply_morphism(&OrderedMorphism::identity(9))
                .unwrap(),
            w("121")
        );
        let om = OrderedMorphism::new([(1, 1), (2, 4)], 9).unwrap();
        assert_eq!(w("212").apply_morphism(&om).unwrap(), w("414"));
    }

    #[test]
    fn morphism_outside_source_is_an_error() {
        let om = OrderedMorphism::new([(1, 2)], 4).unwrap();
        assert_eq!(w("12").apply_morphism(&om), Err(Error::MorphismDomain(2)));
    }

    #[test]
    fn non_increasing_morphism_is_rejected() {
        assert!(OrderedMorphism::new([(1, 3), (2, 2)], 4).is_err());
    }

    #[test]
    fn text_format() {
        let big = Word::parse("10,2,11", 12).unwrap();
        assert_eq!(big.letters(), &[10, 2, 11]);
        assert_eq!(big.to_string(), "10,2,11");
        assert_eq!(Word::parse("", 3).unwrap(), Word::empty(3));
        assert!(Word::parse("15", 4).is_err());
        assert!(Word::parse("1x", 4).is_err());
        assert_eq!(w("312").to_string(), "312");
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Word::all(3, 4).count(), 81);
        assert_eq!(Word::all(2, 0).count(), 1);
        assert_eq!(Word::all_up_to(2, 3).count(), 1 + 2 + 4 + 8);
        let v: Vec<String> = Word::all(2, 2).map(|w| w.to_string()).collect();
        assert_eq!(v, ["11", "12", "21", "22"]);
    }

    #[test]
    fn subalphabet_morphism_count() {
        // sum_k C(4,k)^2 - 1 (empty source excluded)
        assert_eq!(OrderedMorphism::all_between_subalphabets(4).len(), 69);
    }

    #[test]
    fn intervals_are_listed_shortest_first() {
        let all = Interval::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], Interval::new(1, 1).unwrap());
        assert_eq!(all[5], Interval::full(3));
    }
}
