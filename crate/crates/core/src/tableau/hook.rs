//! Hook words: a strictly decreasing part followed by a weakly
//! increasing part, and the factorization into hook segments that
//! defines the canonical words of a strict shape.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::tableau::StrictPartition;
use crate::word::Word;

/// True iff `letters` is a strictly decreasing prefix followed by a weakly
/// increasing suffix.
pub fn is_hook(letters: &[u8]) -> bool {
    let mut i = 1;
    while i < letters.len() && letters[i] < letters[i - 1] {
        i += 1;
    }
    // the last decreasing letter may start the increasing part
    letters
        .get(i.saturating_sub(1)..)
        .is_none_or(|rest| rest.windows(2).all(|w| w[0] <= w[1]))
}

pub fn is_hook_word(w: &Word) -> bool {
    is_hook(w.letters())
}

/// Longest hook subword: the best split into a strictly decreasing
/// subsequence of a prefix and a weakly increasing subsequence of the
/// remaining suffix. Quadratic.
pub fn longest_hook(letters: &[u8]) -> usize {
    let len = letters.len();
    // dec_end[j]: longest strictly decreasing subsequence ending at j
    let mut dec_end = vec![1usize; len];
    for j in 0..len {
        for i in 0..j {
            if letters[i] > letters[j] {
                dec_end[j] = dec_end[j].max(dec_end[i] + 1);
            }
        }
    }
    // inc_start[j]: longest weakly increasing subsequence starting at j
    let mut inc_start = vec![1usize; len];
    for j in (0..len).rev() {
        for k in j + 1..len {
            if letters[j] <= letters[k] {
                inc_start[j] = inc_start[j].max(inc_start[k] + 1);
            }
        }
    }
    let mut best_prefix = vec![0usize; len + 1];
    for p in 0..len {
        best_prefix[p + 1] = best_prefix[p].max(dec_end[p]);
    }
    let mut best_suffix = vec![0usize; len + 1];
    for p in (0..len).rev() {
        best_suffix[p] = best_suffix[p + 1].max(inc_start[p]);
    }
    (0..=len)
        .map(|p| best_prefix[p] + best_suffix[p])
        .max()
        .unwrap_or(0)
}

pub fn longest_hook_subword(w: &Word) -> usize {
    longest_hook(w.letters())
}

/// Segment lengths `nu_l, ..., nu_1` (shortest first).
fn segment_lengths(shape: &StrictPartition) -> Vec<usize> {
    shape.parts().iter().rev().map(|&p| p as usize).collect()
}

fn segments_ok(letters: &[u8], lengths: &[usize]) -> bool {
    let mut start = 0;
    let mut prev: Option<&[u8]> = None;
    for &len in lengths {
        let seg = &letters[start..start + len];
        if !is_hook(seg) {
            return false;
        }
        if let Some(p) = prev {
            let joined: Vec<u8> = p.iter().chain(seg).copied().collect();
            if longest_hook(&joined) != len {
                return false;
            }
        }
        prev = Some(seg);
        start += len;
    }
    true
}

/// Whether `w` splits into hook segments of lengths `nu_l, ..., nu_1`
/// with each segment a longest hook subword of itself preceded by the
/// previous segment.
pub fn hook_factorization_check(w: &Word, shape: &StrictPartition) -> Result<bool> {
    if w.degree() != shape.size() {
        return Err(Error::LengthMismatch {
            len: w.degree(),
            size: shape.size(),
        });
    }
    Ok(segments_ok(w.letters(), &segment_lengths(shape)))
}

/// All hook words of length `len` over `{1..n}`.
pub fn hook_words(len: usize, n: u8) -> Vec<Vec<u8>> {
    // decreasing part d (possibly empty) then increasing part i whose first
    // letter is not below d's last (otherwise it would extend d)
    let mut out = BTreeSet::new();
    fn go(cur: &mut Vec<u8>, len: usize, n: u8, increasing: bool, out: &mut BTreeSet<Vec<u8>>) {
        if cur.len() == len {
            out.insert(cur.clone());
            return;
        }
        let last = cur.last().copied();
        for x in 1..=n {
            let (ok, inc) = match (last, increasing) {
                (None, _) => (true, false),
                (Some(l), false) => (true, x >= l),
                (Some(l), true) => (x >= l, true),
            };
            if ok {
                cur.push(x);
                go(cur, len, n, inc, out);
                cur.pop();
            }
        }
    }
    go(&mut Vec::new(), len, n, false, &mut out);
    out.into_iter().collect()
}

/// `hook(nu)` over `{1..n}`, built segment by segment.
pub fn enumerate_hook(shape: &StrictPartition, n: u8) -> BTreeSet<Word> {
    let lengths = segment_lengths(shape);
    let pools: Vec<Vec<Vec<u8>>> = lengths.iter().map(|&l| hook_words(l, n)).collect();
    let mut out = BTreeSet::new();

    fn go(
        k: usize,
        prev: Option<&[u8]>,
        acc: &mut Vec<u8>,
        pools: &[Vec<Vec<u8>>],
        lengths: &[usize],
        n: u8,
        out: &mut BTreeSet<Word>,
    ) {
        if k == pools.len() {
            out.insert(Word::from_raw(n, acc.clone()));
            return;
        }
        for seg in &pools[k] {
            if let Some(p) = prev {
                let joined: Vec<u8> = p.iter().chain(seg).copied().collect();
                if longest_hook(&joined) != lengths[k] {
                    continue;
                }
            }
            let start = acc.len();
            acc.extend_from_slice(seg);
            go(k + 1, Some(seg), acc, pools, lengths, n, out);
            acc.truncate(start);
        }
    }

    go(0, None, &mut Vec::new(), &pools, &lengths, n, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 9).unwrap()
    }

    fn shape(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    /// Every subword, checked directly.
    fn brute_longest_hook(letters: &[u8]) -> usize {
        let len = letters.len();
        (0u32..(1 << len))
            .filter_map(|mask| {
                let sub: Vec<u8> = (0..len)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| letters[i])
                    .collect();
                is_hook(&sub).then_some(sub.len())
            })
            .max()
            .unwrap_or(0)
    }

    /// Every split point, checked directly.
    fn brute_is_hook(letters: &[u8]) -> bool {
        (0..=letters.len()).any(|p| {
            letters[..p].windows(2).all(|x| x[0] > x[1])
                && letters[p..].windows(2).all(|x| x[0] <= x[1])
        })
    }

    #[test]
    fn hook_word_examples() {
        assert!(is_hook_word(&w("4213")));
        assert!(is_hook_word(&w("12")));
        assert!(!is_hook_word(&w("121")));
        assert!(is_hook_word(&w("")));
        assert!(is_hook_word(&w("312")));
        assert!(!is_hook_word(&w("132")));
    }

    #[test]
    fn every_length_two_word_is_a_hook() {
        for x in Word::all(4, 2) {
            assert!(is_hook_word(&x));
        }
    }

    #[test]
    fn is_hook_matches_split_oracle() {
        for d in 0..=6 {
            for x in Word::all(3, d) {
                assert_eq!(is_hook(x.letters()), brute_is_hook(x.letters()), "{x}");
            }
        }
    }

    #[test]
    fn longest_hook_examples() {
        assert_eq!(longest_hook_subword(&w("3142")), 3);
        assert_eq!(longest_hook_subword(&w("11235")), 5);
        assert_eq!(longest_hook_subword(&w("243")), 2);
        assert_eq!(brute_longest_hook(&[2, 4, 3]), 2);
    }

    #[test]
    fn longest_hook_matches_subword_oracle() {
        for d in 0..=7 {
            for x in Word::all(3, d) {
                assert_eq!(
                    longest_hook(x.letters()),
                    brute_longest_hook(x.letters()),
                    "{x}"
                );
            }
        }
        // a few longer words, up to 12 letters
        let samples = ["316254978312", "121212121212", "987654321123", "5454545454"];
        for s in samples {
            let x = w(s);
            assert_eq!(
                longest_hook(x.letters()),
                brute_longest_hook(x.letters()),
                "{s}"
            );
        }
    }

    #[test]
    fn factorization_examples() {
        let s21 = shape(&[2, 1]);
        assert!(hook_factorization_check(&w("132"), &s21).unwrap());
        assert!(hook_factorization_check(&w("121"), &s21).unwrap());
        assert!(!hook_factorization_check(&w("123"), &s21).unwrap());
        assert_eq!(
            hook_factorization_check(&w("12"), &s21),
            Err(Error::LengthMismatch { len: 2, size: 3 })
        );
    }

    #[test]
    fn example_patterns_for_shape_21() {
        // distinct letters b<c<d: bdc and cdb; two equal: bdb and ccb
        let s21 = shape(&[2, 1]);
        let distinct: Vec<String> = enumerate_hook(&s21, 3)
            .into_iter()
            .filter(|x| x.content().counts().iter().all(|&c| c == 1))
            .map(|x| x.to_string())
            .collect();
        assert_eq!(distinct, ["132", "231"]);
        let two: Vec<String> = enumerate_hook(&s21, 2)
            .into_iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(two, ["121", "221"]);
    }

    #[test]
    fn enumerate_hook_examples() {
        let ones: Vec<String> = enumerate_hook(&shape(&[1]), 3)
            .into_iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(ones, ["1", "2", "3"]);
        let distinct = enumerate_hook(&shape(&[2, 1]), 4)
            .into_iter()
            .filter(|x| x.content().counts().iter().all(|&c| c <= 1))
            .count();
        assert_eq!(distinct, 8);
    }

    #[test]
    fn generator_matches_filter() {
        for size in 1..=6u32 {
            for nu in StrictPartition::all_of_size(size) {
                for n in 1..=3u8 {
                    let filtered: BTreeSet<Word> = Word::all(n, size as usize)
                        .filter(|x| hook_factorization_check(x, &nu).unwrap())
                        .collect();
                    assert_eq!(enumerate_hook(&nu, n), filtered, "nu={nu} n={n}");
                }
            }
        }
    }

    #[test]
    fn hook_word_generator_matches_filter() {
        for len in 0..=5 {
            let filtered: Vec<Vec<u8>> = Word::all(3, len)
                .filter(|x| brute_is_hook(x.letters()))
                .map(|x| x.letters().to_vec())
                .collect();
            assert_eq!(hook_words(len, 3), filtered);
        }
    }
}
