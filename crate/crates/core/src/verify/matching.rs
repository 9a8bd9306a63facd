//! Perfect matchings between the monomials of two products that must agree
//! in a quotient algebra.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::NcPoly;
use crate::word::{ContentVector, Word};

/// Monomials of the two sides of a commutation identity with equal
/// content.
#[derive(Debug, Clone)]
pub struct ContentBlock {
    pub content: ContentVector,
    pub left: Vec<Word>,
    pub right: Vec<Word>,
}

/// Outcome of matching one content block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Matching {
    /// Exactly one perfect matching; entry `i` is the right partner of
    /// `left[i]`.
    Unique(Vec<Word>),
    /// No perfect matching, or more than one; the count is given.
    NotUnique(u64),
}

impl Matching {
    pub fn unique(&self) -> Option<&[Word]> {
        match self {
            Matching::Unique(p) => Some(p),
            Matching::NotUnique(_) => None,
        }
    }

    pub fn count(&self) -> u64 {
        match self {
            Matching::Unique(_) => 1,
            Matching::NotUnique(k) => *k,
        }
    }
}

/// Groups the supports of two products by content.
pub fn content_blocks(left: &NcPoly, right: &NcPoly) -> Vec<ContentBlock> {
    let mut blocks: BTreeMap<ContentVector, (Vec<Word>, Vec<Word>)> = BTreeMap::new();
    for w in left.support() {
        blocks.entry(w.content()).or_default().0.push(w.clone());
    }
    for w in right.support() {
        blocks.entry(w.content()).or_default().1.push(w.clone());
    }
    blocks
        .into_iter()
        .map(|(content, (left, right))| ContentBlock {
            content,
            left,
            right,
        })
        .collect()
}

/// Admissible pairs of a block. A word present on both sides cancels and
/// is paired only with itself.
pub fn admissible(
    block: &ContentBlock,
    edge: &mut impl FnMut(&Word, &Word) -> bool,
) -> Vec<Vec<bool>> {
    let on_right: HashMap<&Word, usize> = block
        .right
        .iter()
        .enumerate()
        .map(|(j, w)| (w, j))
        .collect();
    let on_left: HashMap<&Word, usize> =
        block.left.iter().enumerate().map(|(i, w)| (w, i)).collect();
    block
        .left
        .iter()
        .map(|u| {
            block
                .right
                .iter()
                .map(
                    |v| match (on_right.contains_key(u), on_left.contains_key(v)) {
                        (true, _) | (_, true) => u == v,
                        _ => edge(u, v),
                    },
                )
                .collect()
        })
        .collect()
}

/// Counts perfect matchings of a square bipartite adjacency matrix.
pub fn count_perfect_matchings(adj: &[Vec<bool>]) -> u64 {
    let k = adj.len();
    if adj.iter().any(|row| row.len() != k) {
        return 0;
    }
    assert!(k <= 24, "block too large for subset dynamic programming");
    let mut ways = vec![0u64; 1 << k];
    ways[0] = 1;
    for mask in 0usize..(1 << k) {
        let w = ways[mask];
        if w == 0 {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == k {
            continue;
        }
        for (j, &ok) in adj[row].iter().enumerate() {
            if ok && mask & (1 << j) == 0 {
                ways[mask | (1 << j)] += w;
            }
        }
    }
    ways[(1 << k) - 1]
}

fn find_matching(
    adj: &[Vec<bool>],
    row: usize,
    used: &mut Vec<bool>,
    out: &mut Vec<usize>,
) -> bool {
    if row == adj.len() {
        return true;
    }
    for j in 0..adj[row].len() {
        if adj[row][j] && !used[j] {
            used[j] = true;
            out.push(j);
            if find_matching(adj, row + 1, used, out) {
                return true;
            }
            out.pop();
            used[j] = false;
        }
    }
    false
}

pub fn match_block(block: &ContentBlock, edge: &mut impl FnMut(&Word, &Word) -> bool) -> Matching {
    let adj = admissible(block, edge);
    let count = count_perfect_matchings(&adj);
    if count != 1 {
        return Matching::NotUnique(count);
    }
    let mut out = Vec::new();
    find_matching(&adj, 0, &mut vec![false; block.right.len()], &mut out);
    Matching::Unique(out.into_iter().map(|j| block.right[j].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let t = true;
        let f = false;
        assert_eq!(count_perfect_matchings(&[]), 1);
        assert_eq!(count_perfect_matchings(&[vec![t, t], vec![t, t]]), 2);
        assert_eq!(count_perfect_matchings(&[vec![t, f], vec![t, t]]), 1);
        assert_eq!(count_perfect_matchings(&[vec![t, f], vec![t, f]]), 0);
        assert_eq!(count_perfect_matchings(&vec![vec![t, t, t]; 3]), 6);
        assert_eq!(count_perfect_matchings(&[vec![t, t]]), 0);
    }

    #[test]
    fn common_words_pair_with_themselves() {
        let w = |s| Word::parse(s, 3).unwrap();
        let block = ContentBlock {
            content: w("123").content(),
            left: vec![w("123"), w("213")],
            right: vec![w("123"), w("132")],
        };
        let m = match_block(&block, &mut |_, _| true);
        assert_eq!(m, Matching::Unique(vec![w("123"), w("132")]));
    }
}
