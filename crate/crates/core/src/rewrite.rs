//! Homogeneous pattern relations, congruence classes by breadth-first
//! closure, and the Knuth / shifted Knuth presentations.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Interval, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cmp {
    Le,
    Lt,
}

impl Cmp {
    fn holds(self, x: u8, y: u8) -> bool {
        match self {
            Cmp::Le => x <= y,
            Cmp::Lt => x < y,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Cmp::Le => "<=",
            Cmp::Lt => "<",
        }
    }
}

/// A rule `left ~ right` between letter patterns, valid for every
/// assignment of letters to the variables that satisfies the chain
/// `vars[0] ops[0] vars[1] ops[1] ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternRelation {
    id: String,
    vars: Vec<char>,
    ops: Vec<Cmp>,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl PatternRelation {
    /// `constraints` is a chain such as `a<=b<c` (`≤` is accepted for `<=`).
    pub fn new(id: &str, left: &str, right: &str, constraints: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidRelation(format!("{id}: {msg}"));
        let (vars, ops) =
            parse_chain(constraints).ok_or_else(|| bad("malformed constraint chain"))?;
        let mut seen = vars.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != vars.len() {
            return Err(bad("a variable appears twice in the chain"));
        }
        let index = |p: &str| -> Result<Vec<usize>> {
            p.chars()
                .map(|c| {
                    vars.iter()
                        .position(|&v| v == c)
                        .ok_or_else(|| bad("pattern variable missing from chain"))
                })
                .collect()
        };
        let left_idx = index(left)?;
        let right_idx = index(right)?;
        if left_idx.is_empty() {
            return Err(bad("empty pattern"));
        }
        let mut l = left_idx.clone();
        let mut r = right_idx.clone();
        l.sort_unstable();
        r.sort_unstable();
        if l != r {
            return Err(bad("left and right patterns use different variables"));
        }
        let mut used = l;
        used.dedup();
        if used.len() != vars.len() {
            return Err(bad("chain mentions a variable absent from the patterns"));
        }
        Ok(PatternRelation {
            id: id.to_string(),
            vars,
            ops,
            left: left_idx,
            right: right_idx,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    pub fn left_pattern(&self) -> String {
        self.left.iter().map(|&i| self.vars[i]).collect()
    }

    pub fn right_pattern(&self) -> String {
        self.right.iter().map(|&i| self.vars[i]).collect()
    }

    pub fn chain(&self) -> String {
        let mut s = String::new();
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                s.push_str(self.ops[i - 1].symbol());
            }
            s.push(*v);
        }
        s
    }

    pub fn variables(&self) -> &[char] {
        &self.vars
    }

    pub fn reversed(&self) -> PatternRelation {
        PatternRelation {
            id: self.id.clone(),
            vars: self.vars.clone(),
            ops: self.ops.clone(),
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    fn chain_holds(&self, values: &[u8]) -> bool {
        self.ops
            .iter()
            .enumerate()
            .all(|(i, op)| op.holds(values[i], values[i + 1]))
    }

    /// Rewrites `window` by the rule when it matches the left pattern.
    pub fn rewrite_slice(&self, window: &[u8]) -> Option<Vec<u8>> {
        if window.len() != self.left.len() {
            return None;
        }
        PatternRef {
            rel: self,
            pattern: &self.left,
            image: &self.right,
        }
        .rewrite(window)
    }

    pub fn instantiate(&self, window: &Word) -> Option<Word> {
        self.rewrite_slice(window.letters())
            .map(|letters| Word::from_raw(window.alphabet_size(), letters))
    }

    /// Every `(left, right)` instance over `{1..n}`.
    pub fn instances(&self, n: u8) -> Vec<(Word, Word)> {
        let mut out = Vec::new();
        let k = self.vars.len();
        let mut values = vec![1u8; k];
        loop {
            if self.chain_holds(&values) {
                let l = self.left.iter().map(|&v| values[v]).collect();
                let r = self.right.iter().map(|&v| values[v]).collect();
                out.push((Word::from_raw(n, l), Word::from_raw(n, r)));
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if values[i] < n {
                    values[i] += 1;
                    for x in &mut values[i + 1..] {
                        *x = 1;
                    }
                    break;
                }
            }
        }
    }

    /// The degeneracy patterns of the chain: each `<=` is resolved to `<` or
    /// `=`, listed with fewest equalities first, earlier equalities first.
    pub fn letter_patterns(&self) -> Vec<LetterPattern> {
        let le_positions: Vec<usize> = self
            .ops
            .iter()
            .enumerate()
            .filter(|(_, op)| **op == Cmp::Le)
            .map(|(i, _)| i)
            .collect();
        let mut masks: Vec<u32> = (0..(1u32 << le_positions.len())).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        masks
            .into_iter()
            .map(|mask| {
                let mut ranks = vec![1u8; self.vars.len()];
                for i in 1..self.vars.len() {
                    let eq = le_positions
                        .iter()
                        .position(|&p| p == i - 1)
                        .map(|bit| mask & (1 << bit) != 0)
                        .unwrap_or(false);
                    ranks[i] = if eq { ranks[i - 1] } else { ranks[i - 1] + 1 };
                }
                LetterPattern {
                    vars: self.vars.clone(),
                    ranks,
                }
            })
            .collect()
    }

    /// Instantiates both sides for a letter pattern, with letters given by
    /// rank (`a<b<c` becomes `1,2,3`).
    pub fn instantiate_pattern(&self, pattern: &LetterPattern) -> (Word, Word) {
        let n = pattern.alphabet_size();
        let l = self.left.iter().map(|&v| pattern.ranks[v]).collect();
        let r = self.right.iter().map(|&v| pattern.ranks[v]).collect();
        (Word::from_raw(n, l), Word::from_raw(n, r))
    }
}

impl fmt::Display for PatternRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ~ {} for {}",
            self.id,
            self.left_pattern(),
            self.right_pattern(),
            self.chain()
        )
    }
}

fn parse_chain(s: &str) -> Option<(Vec<char>, Vec<Cmp>)> {
    let s = s.replace('≤', "<=");
    let mut vars = Vec::new();
    let mut ops = Vec::new();
    let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
    loop {
        let v = chars.next()?;
        if !v.is_ascii_alphabetic() {
            return None;
        }
        vars.push(v);
        match chars.next() {
            None => break,
            Some('<') => {
                if chars.peek() == Some(&'=') {
                    chars.next();
                    ops.push(Cmp::Le);
                } else {
                    ops.push(Cmp::Lt);
                }
            }
            Some(_) => return None,
        }
    }
    if vars.len() > 16 {
        return None;
    }
    Some((vars, ops))
}

/// A resolution of a constraint chain into a concrete order type, e.g.
/// `a=b<c<d` with ranks `1,1,2,3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LetterPattern {
    vars: Vec<char>,
    ranks: Vec<u8>,
}

impl LetterPattern {
    pub fn ranks(&self) -> &[u8] {
        &self.ranks
    }

    /// Number of distinct letters.
    pub fn alphabet_size(&self) -> u8 {
        self.ranks.iter().copied().max().unwrap_or(1)
    }

    /// Letter name used for a rank: the first variable in its equality group.
    pub fn letter_name(&self, rank: u8) -> char {
        let i = self
            .ranks
            .iter()
            .position(|&r| r == rank)
            .expect("rank in pattern");
        self.vars[i]
    }

    /// Renders a concrete word (over ranks) with the pattern's letter names.
    pub fn render(&self, word: &Word) -> String {
        word.letters()
            .iter()
            .map(|&l| self.letter_name(l))
            .collect()
    }
}

impl fmt::Display for LetterPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                f.write_str(if self.ranks[i] == self.ranks[i - 1] {
                    "="
                } else {
                    "<"
                })?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationSetKind {
    Knuth,
    ShiftedKnuth,
    Custom,
}

/// A named list of pattern relations generating a congruence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelationSet {
    kind: RelationSetKind,
    relations: Vec<PatternRelation>,
}

/// JSON form of one custom relation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationSpec {
    #[serde(default)]
    pub id: Option<String>,
    pub left: String,
    pub right: String,
    pub constraints: String,
}

impl RelationSet {
    /// K.1 and K.2.
    pub fn knuth() -> Self {
        let rel = |id, l, r, c| PatternRelation::new(id, l, r, c).expect("builtin relation");
        RelationSet {
            kind: RelationSetKind::Knuth,
            relations: vec![
                rel("K.1", "acb", "cab", "a<=b<c"),
                rel("K.2", "bca", "bac", "a<b<=c"),
            ],
        }
    }

    /// SP.1 through SP.8.
    pub fn shifted_knuth() -> Self {
        let rel = |id, l, r, c| PatternRelation::new(id, l, r, c).expect("builtin relation");
        RelationSet {
            kind: RelationSetKind::ShiftedKnuth,
            relations: vec![
                rel("SP.1", "abdc", "adbc", "a<=b<=c<d"),
                rel("SP.2", "acdb", "acbd", "a<=b<c<=d"),
                rel("SP.3", "dacb", "adcb", "a<=b<c<d"),
                rel("SP.4", "badc", "bdac", "a<b<=c<d"),
                rel("SP.5", "cbda", "cdba", "a<b<c<=d"),
                rel("SP.6", "dbca", "bdca", "a<b<=c<d"),
                rel("SP.7", "bcda", "bcad", "a<b<=c<=d"),
                rel("SP.8", "cadb", "cdab", "a<=b<c<=d"),
            ],
        }
    }

    pub fn custom(relations: Vec<PatternRelation>) -> Self {
        RelationSet {
            kind: RelationSetKind::Custom,
            relations,
        }
    }

    /// No relations: the free monoid.
    pub fn trivial() -> Self {
        RelationSet::custom(Vec::new())
    }

    /// Knuth relations plus `ab ~ ba`; its quotient is the free
    /// commutative monoid.
    pub fn commutative() -> Self {
        let mut relations = RelationSet::knuth().relations;
        relations.push(PatternRelation::new("C", "ab", "ba", "a<b").expect("builtin relation"));
        RelationSet::custom(relations)
    }

    pub fn from_specs(specs: &[RelationSpec]) -> Result<Self> {
        let relations = specs
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let id = s.id.clone().unwrap_or_else(|| format!("R.{}", i + 1));
                PatternRelation::new(&id, &s.left, &s.right, &s.constraints)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RelationSet::custom(relations))
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let specs: Vec<RelationSpec> = serde_json::from_str(json)?;
        RelationSet::from_specs(&specs)
    }

    pub fn kind(&self) -> RelationSetKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            RelationSetKind::Knuth => "knuth",
            RelationSetKind::ShiftedKnuth => "shifted-knuth",
            RelationSetKind::Custom => "custom",
        }
    }

    pub fn relations(&self) -> &[PatternRelation] {
        &self.relations
    }

    pub fn relation(&self, id: &str) -> Option<&PatternRelation> {
        self.relations.iter().find(|r| r.id == id)
    }

    /// Words reachable from `w` by one application of one relation, in
    /// either direction, at one position.
    pub fn neighbors(&self, w: &Word) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        self.for_each_neighbor(w.letters(), |letters| {
            out.insert(Word::from_raw(w.alphabet_size(), letters));
        });
        out.remove(w);
        out
    }

    fn for_each_neighbor(&self, letters: &[u8], mut f: impl FnMut(Vec<u8>)) {
        for rel in &self.relations {
            let len = rel.len();
            if len > letters.len() {
                continue;
            }
            for (pattern, image) in [(&rel.left, &rel.right), (&rel.right, &rel.left)] {
                let directed = PatternRef {
                    rel,
                    pattern,
                    image,
                };
                for start in 0..=(letters.len() - len) {
                    if let Some(rewritten) = directed.rewrite(&letters[start..start + len]) {
                        if rewritten.as_slice() != &letters[start..start + len] {
                            let mut next = letters.to_vec();
                            next[start..start + len].copy_from_slice(&rewritten);
                            f(next);
                        }
                    }
                }
            }
        }
    }

    /// The congruence class of `w`, by breadth-first closure.
    pub fn equiv_class(&self, w: &Word) -> EquivClass {
        let mut seen: BTreeSet<Word> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(cur) = queue.pop_front() {
            self.for_each_neighbor(cur.letters(), |letters| {
                let next = Word::from_raw(w.alphabet_size(), letters);
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            });
        }
        EquivClass { members: seen }
    }

    pub fn equivalent(&self, w1: &Word, w2: &Word) -> bool {
        if w1 == w2 {
            return true;
        }
        if w1.alphabet_size() != w2.alphabet_size() || w1.content() != w2.content() {
            return false;
        }
        let mut seen: BTreeSet<Word> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w1.clone());
        queue.push_back(w1.clone());
        while let Some(cur) = queue.pop_front() {
            let mut found = false;
            self.for_each_neighbor(cur.letters(), |letters| {
                if found {
                    return;
                }
                let next = Word::from_raw(w1.alphabet_size(), letters);
                if &next == w2 {
                    found = true;
                } else if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            });
            if found {
                return true;
            }
        }
        false
    }

    /// Partition of all words of `degree` over `{1..n}` into classes.
    pub fn partition(&self, n: u8, degree: usize) -> ClassPartition {
        let mut class_of: HashMap<Word, usize> = HashMap::new();
        let mut classes: Vec<Vec<Word>> = Vec::new();
        for w in Word::all(n, degree) {
            if class_of.contains_key(&w) {
                continue;
            }
            let id = classes.len();
            let members: Vec<Word> = self.equiv_class(&w).members.into_iter().collect();
            for m in &members {
                class_of.insert(m.clone(), id);
            }
            classes.push(members);
        }
        ClassPartition { class_of, classes }
    }
}

struct PatternRef<'a> {
    rel: &'a PatternRelation,
    pattern: &'a [usize],
    image: &'a [usize],
}

impl PatternRef<'_> {
    fn rewrite(&self, window: &[u8]) -> Option<Vec<u8>> {
        let mut values = [0u8; 16];
        let values = &mut values[..self.rel.vars.len()];
        for (&var, &letter) in self.pattern.iter().zip(window) {
            if values[var] == 0 {
                values[var] = letter;
            } else if values[var] != letter {
                return None;
            }
        }
        if !self.rel.chain_holds(values) {
            return None;
        }
        Some(self.image.iter().map(|&v| values[v]).collect())
    }
}

/// A congruence class: all members share degree and content.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivClass {
    members: BTreeSet<Word>,
}

impl EquivClass {
    pub fn members(&self) -> &BTreeSet<Word> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.contains(w)
    }

    /// The lexicographically least member.
    pub fn canonical(&self) -> &Word {
        self.members.iter().next().expect("classes are nonempty")
    }
}

/// All classes of one degree, with a word-to-class index.
#[derive(Debug, Clone)]
pub struct ClassPartition {
    class_of: HashMap<Word, usize>,
    classes: Vec<Vec<Word>>,
}

impl ClassPartition {
    pub fn class_of(&self, w: &Word) -> Option<usize> {
        self.class_of.get(w).copied()
    }

    pub fn classes(&self) -> &[Vec<Word>] {
        &self.classes
    }

    /// Classes as a set of sorted member lists, for comparing partitions
    /// computed by different routes.
    pub fn as_blocks(&self) -> BTreeSet<Vec<Word>> {
        self.classes.iter().cloned().collect()
    }
}

/// Memoized canonical representatives under one relation set.
pub struct Canonicalizer<'a> {
    rels: &'a RelationSet,
    cache: HashMap<Word, Word>,
}

impl<'a> Canonicalizer<'a> {
    pub fn new(rels: &'a RelationSet) -> Self {
        Canonicalizer {
            rels,
            cache: HashMap::new(),
        }
    }

    pub fn canonical(&mut self, w: &Word) -> Word {
        if let Some(c) = self.cache.get(w) {
            return c.clone();
        }
        let class = self.rels.equiv_class(w);
        let rep = class.canonical().clone();
        for m in class.members {
            self.cache.insert(m, rep.clone());
        }
        rep
    }
}

/// Outcome of checking that every shifted Knuth instance is Knuth-valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport {
    pub instances_checked: usize,
    pub failures: Vec<(String, Word, Word)>,
}

/// Checks that the shifted Knuth congruence refines the Knuth congruence:
/// every SP instance over `{1..n}` of degree at most `degree_bound` is
/// Knuth-equivalent.
pub fn factorization_report(n: u8, degree_bound: usize) -> FactorizationReport {
    let knuth = RelationSet::knuth();
    let mut report = FactorizationReport {
        instances_checked: 0,
        failures: Vec::new(),
    };
    for rel in RelationSet::shifted_knuth().relations() {
        if rel.len() > degree_bound {
            continue;
        }
        for (u, v) in rel.instances(n) {
            report.instances_checked += 1;
            if !knuth.equivalent(&u, &v) {
                report.failures.push((rel.id().to_string(), u, v));
            }
        }
    }
    report
}

pub fn verify_factorization(n: u8, degree_bound: usize) -> bool {
    factorization_report(n, degree_bound).failures.is_empty()
}

/// Searches for shifted-Knuth-equivalent words whose restrictions to some
/// interval are not shifted-Knuth-equivalent. Returns the first witness.
pub fn restriction_counterexample(
    rels: &RelationSet,
    n: u8,
    max_degree: usize,
) -> Option<(Word, Word, Interval)> {
    for d in 1..=max_degree {
        let part = rels.partition(n, d);
        for class in part.classes() {
            let first = &class[0];
            for other in &class[1..] {
                for iv in Interval::all(n) {
                    let (a, b) = (first.restrict(iv), other.restrict(iv));
                    if !rels.equivalent(&a, &b) {
                        return Some((first.clone(), other.clone(), iv));
                    }
                }
            }
        }
    }
    None
}
