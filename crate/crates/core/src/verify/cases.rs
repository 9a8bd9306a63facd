//! Regenerates the relations of a presentation from a commutation identity:
//! each left-hand side is a monomial of one product, and every monomial of
//! the other product with the same content except one is ruled out.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::algebra::{NcPoly, PolyContext};
use crate::error::{Error, Result};
use crate::rewrite::{Canonicalizer, LetterPattern, RelationSet, RelationSetKind};
use crate::verify::matching::{content_blocks, match_block, Matching};
use crate::verify::Product;
use crate::word::{Interval, Word};

/// Why a candidate cannot be identified with the left-hand side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    /// The restrictions to this proper interval are not Knuth-equivalent.
    Restriction(Interval),
    /// The words themselves are not Knuth-equivalent.
    PlacticInequality,
    /// The candidate is the unique partner of another monomial.
    MatchedElsewhere(Word),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub word: Word,
    pub reason: Reason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub relation_id: String,
    pub pattern: LetterPattern,
    pub lhs: Word,
    pub expected: Word,
    pub lhs_in_product: bool,
    pub candidates: Vec<Word>,
    pub eliminated: Vec<Elimination>,
    pub survivors: Vec<Word>,
    /// Number of perfect matchings of the content block.
    pub matchings: u64,
}

impl CaseReport {
    pub fn survivor(&self) -> Option<&Word> {
        match self.survivors.as_slice() {
            [w] => Some(w),
            _ => None,
        }
    }

    pub fn passed(&self) -> bool {
        self.lhs_in_product && self.survivor() == Some(&self.expected)
    }

    fn interval_name(&self, iv: Interval) -> String {
        format!(
            "[{},{}]",
            self.pattern.letter_name(iv.lo()),
            self.pattern.letter_name(iv.hi())
        )
    }

    pub fn reason_text(&self, reason: &Reason) -> String {
        match reason {
            Reason::Restriction(iv) => format!("restriction to {}", self.interval_name(*iv)),
            Reason::PlacticInequality => "plactic inequality".to_string(),
            Reason::MatchedElsewhere(u) => format!("matched with {}", self.pattern.render(u)),
        }
    }

    pub fn to_json(&self) -> Value {
        let r = |w: &Word| self.pattern.render(w);
        let eliminated: Vec<Value> = self
            .eliminated
            .iter()
            .map(|e| json!({ "word": r(&e.word), "reason": self.reason_text(&e.reason) }))
            .collect();
        json!({
            "check": "case",
            "relation": self.relation_id,
            "pattern": self.pattern.to_string(),
            "lhs": r(&self.lhs),
            "expected": r(&self.expected),
            "candidates": self.candidates.iter().map(r).collect::<Vec<_>>(),
            "eliminated": eliminated,
            "survivor": self.survivor().map(r),
            "matchings": self.matchings,
            "pass": self.passed(),
        })
    }
}

struct Kappa<'a> {
    canon: Canonicalizer<'a>,
}

impl Kappa<'_> {
    fn equal(&mut self, u: &Word, v: &Word) -> bool {
        u == v || (u.content() == v.content() && self.canon.canonical(u) == self.canon.canonical(v))
    }

    /// The first interval, shortest first, on which the restrictions differ
    /// in the plactic monoid.
    fn separating_interval(&mut self, u: &Word, v: &Word, n: u8) -> Option<Interval> {
        Interval::all(n)
            .into_iter()
            .find(|&iv| !self.equal(&u.restrict(iv), &v.restrict(iv)))
    }
}

/// Runs the elimination argument for every relation and every degeneracy
/// pattern of its constraint chain.
pub fn verify_case_analysis(rels: &RelationSet) -> Result<Vec<CaseReport>> {
    let (left_product, right_product) = match rels.kind() {
        RelationSetKind::Knuth => (Product::S1S11, Product::S11S1),
        RelationSetKind::ShiftedKnuth => (Product::P1P21, Product::P21P1),
        RelationSetKind::Custom => {
            return Err(Error::InvalidRelation(
                "case analysis needs knuth or shifted-knuth".into(),
            ))
        }
    };
    let knuth = RelationSet::knuth();
    let mut kappa = Kappa {
        canon: Canonicalizer::new(&knuth),
    };
    let mut products: HashMap<(u8, usize), (NcPoly, NcPoly)> = HashMap::new();
    let mut out = Vec::new();
    for rel in rels.relations() {
        for pattern in rel.letter_patterns() {
            let n = pattern.alphabet_size();
            let degree = rel.len();
            if let std::collections::hash_map::Entry::Vacant(e) = products.entry((n, degree)) {
                let ctx = PolyContext::new(n, degree)?;
                e.insert((left_product.expand(ctx)?, right_product.expand(ctx)?));
            }
            let (left, right) = &products[&(n, degree)];
            let pair = rel.instantiate_pattern(&pattern);
            out.push(run_case(rel.id(), pattern, pair, left, right, &mut kappa));
        }
    }
    Ok(out)
}

fn run_case(
    relation_id: &str,
    pattern: LetterPattern,
    (lhs, expected): (Word, Word),
    left: &NcPoly,
    right: &NcPoly,
    kappa: &mut Kappa<'_>,
) -> CaseReport {
    let n = pattern.alphabet_size();
    let content = lhs.content();
    let candidates: Vec<Word> = right
        .support()
        .filter(|w| w.content() == content)
        .cloned()
        .collect();
    let mut eliminated = Vec::new();
    let mut open = Vec::new();
    for v in &candidates {
        match kappa.separating_interval(&lhs, v, n) {
            Some(iv) if iv == Interval::full(n) => eliminated.push(Elimination {
                word: v.clone(),
                reason: Reason::PlacticInequality,
            }),
            Some(iv) => eliminated.push(Elimination {
                word: v.clone(),
                reason: Reason::Restriction(iv),
            }),
            None => open.push(v.clone()),
        }
    }

    let block = content_blocks(left, right)
        .into_iter()
        .find(|b| b.content == content);
    let matching = match &block {
        Some(b) => match_block(b, &mut |u, v| kappa.separating_interval(u, v, n).is_none()),
        None => Matching::NotUnique(0),
    };
    let mut survivors = open.clone();
    if let (Some(b), Some(partners)) = (&block, matching.unique()) {
        let partner_of: HashMap<&Word, &Word> = b.left.iter().zip(partners).collect();
        let owner_of: HashMap<&Word, &Word> =
            b.left.iter().zip(partners).map(|(u, v)| (v, u)).collect();
        if let Some(&mine) = partner_of.get(&lhs) {
            survivors = vec![mine.clone()];
            for v in open.iter().filter(|v| *v != mine) {
                let owner = owner_of.get(v).map_or_else(|| v.clone(), |u| (*u).clone());
                eliminated.push(Elimination {
                    word: v.clone(),
                    reason: Reason::MatchedElsewhere(owner),
                });
            }
        }
    }
    let order: HashMap<&Word, usize> = candidates.iter().enumerate().map(|(i, w)| (w, i)).collect();
    eliminated.sort_by_key(|e| order[&e.word]);

    CaseReport {
        relation_id: relation_id.to_string(),
        pattern,
        lhs_in_product: left.coeff(&lhs) != 0.into(),
        lhs,
        expected,
        candidates,
        eliminated,
        survivors,
        matchings: matching.count(),
    }
}
