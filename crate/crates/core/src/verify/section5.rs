//! Replacing one factor of the commutation axiom by another shape of the
//! same size, and comparing the identifications each choice forces.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde_json::{json, Value};

use crate::algebra::PolyContext;
use crate::error::{Error, Result};
use crate::rewrite::{Canonicalizer, RelationSet};
use crate::verify::matching::{content_blocks, match_block};
use crate::verify::Product;
use crate::word::{Interval, Word};

#[derive(Debug, Clone, PartialEq)]
pub struct Section5Report {
    pub part: &'static str,
    pub description: String,
    pub n: u8,
    pub degree: usize,
    pub pass: bool,
    pub detail: Value,
}

impl Section5Report {
    pub fn passed(&self) -> bool {
        self.pass
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": "section5",
            "part": self.part,
            "description": self.description,
            "n": self.n,
            "D": self.degree,
            "detail": self.detail,
            "pass": self.pass,
        })
    }
}

/// How a pair of monomials with equal content may be identified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeRule {
    /// Every restriction that deletes a letter leaves equal words.
    ProperRestrictionsEqual,
    /// Every restriction, the whole word included, is Knuth-equivalent.
    KnuthOnAllIntervals,
}

/// Blocks of identified words, and the contents whose matching was not
/// unique with their matching counts.
pub type Closure = (BTreeSet<Vec<Word>>, Vec<(String, u64)>);

/// The identifications forced by `left = right` in a quotient: within each
/// content class the uncancelled monomials must pair up uniquely; the
/// congruence closure of the pairs is returned as blocks of words of
/// `degree` over `{1..n}`, with the content classes whose matching was not
/// unique.
pub fn forced_closure(left: Product, n: u8, degree: usize, rule: EdgeRule) -> Result<Closure> {
    let ctx = PolyContext::new(n, degree)?;
    let lp = left.expand(ctx)?;
    let rp = left.swapped().expand(ctx)?;
    let knuth = RelationSet::knuth();
    let mut canon = Canonicalizer::new(&knuth);
    let intervals = Interval::all(n);
    let mut edge = |u: &Word, v: &Word| match rule {
        EdgeRule::ProperRestrictionsEqual => intervals.iter().all(|&iv| {
            let (a, b) = (u.restrict(iv), v.restrict(iv));
            a.degree() == u.degree() || a == b
        }),
        EdgeRule::KnuthOnAllIntervals => intervals.iter().all(|&iv| {
            let (a, b) = (u.restrict(iv), v.restrict(iv));
            a == b || canon.canonical(&a) == canon.canonical(&b)
        }),
    };

    let words: Vec<Word> = Word::all(n, degree).collect();
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    let mut failures = Vec::new();
    for block in content_blocks(&lp, &rp) {
        if block.content.degree() != degree {
            continue;
        }
        let matching = match_block(&block, &mut edge);
        match matching.unique() {
            Some(partners) => {
                for (u, v) in block.left.iter().zip(partners) {
                    let (a, b) = (find(&mut parent, index[u]), find(&mut parent, index[v]));
                    parent[a] = b;
                }
            }
            None => failures.push((block.content.to_string(), matching.count())),
        }
    }

    let mut groups: BTreeMap<usize, Vec<Word>> = BTreeMap::new();
    for (i, w) in words.iter().enumerate() {
        groups
            .entry(find(&mut parent, i))
            .or_default()
            .push(w.clone());
    }
    Ok((groups.into_values().collect(), failures))
}

/// `P_(1) P_(2) = P_(2) P_(1)` in the free algebra.
pub fn free_identity_p1_p2(n: u8, max_degree: usize) -> Result<Section5Report> {
    let ctx = PolyContext::new(n, max_degree)?;
    let left = Product::P1P2.expand(ctx)?;
    let right = Product::P2P1.expand(ctx)?;
    let diff = left.sub(&right)?;
    Ok(Section5Report {
        part: "a",
        description: "P(1)*P(2) = P(2)*P(1) in the free algebra".into(),
        n,
        degree: max_degree,
        pass: diff.is_zero() && !left.is_zero(),
        detail: json!({ "terms": left.len(), "difference_terms": diff.len() }),
    })
}

fn block_diff(closure: &BTreeSet<Vec<Word>>, classes: &BTreeSet<Vec<Word>>) -> Value {
    let only = |a: &BTreeSet<Vec<Word>>, b: &BTreeSet<Vec<Word>>| -> Vec<Vec<String>> {
        a.difference(b)
            .take(5)
            .map(|blk| blk.iter().map(Word::to_string).collect())
            .collect()
    };
    json!({ "only_in_closure": only(closure, classes), "only_in_classes": only(classes, closure) })
}

fn compare(
    part: &'static str,
    description: String,
    products: [Product; 2],
    rels: &RelationSet,
    n: u8,
    degree: usize,
    rule: EdgeRule,
) -> Result<Section5Report> {
    let classes = rels.partition(n, degree).as_blocks();
    let mut pass = true;
    let mut detail = serde_json::Map::new();
    for p in products {
        let (closure, failures) = forced_closure(p, n, degree, rule)?;
        let agrees = failures.is_empty() && closure == classes;
        pass &= agrees;
        detail.insert(
            p.name().to_string(),
            json!({
                "classes": closure.len(),
                "equals_relation_classes": agrees,
                "non_unique_matchings": failures.iter().map(|(c, k)| json!({"content": c, "matchings": k})).collect::<Vec<_>>(),
                "difference": if agrees { Value::Null } else { block_diff(&closure, &classes) },
            }),
        );
    }
    detail.insert("relation_classes".into(), json!(classes.len()));
    Ok(Section5Report {
        part,
        description,
        n,
        degree,
        pass,
        detail: Value::Object(detail),
    })
}

/// `S_(1)` against `S_(2)` forces the same degree 3 identifications as
/// `S_(1)` against `S_(1,1)`: the Knuth classes.
pub fn verify_section5_plactic(n: u8) -> Result<Section5Report> {
    compare(
        "b",
        "S(2) in place of S(1,1) forces the Knuth classes in degree 3".into(),
        [Product::S1S2, Product::S1S11],
        &RelationSet::knuth(),
        n,
        3,
        EdgeRule::ProperRestrictionsEqual,
    )
}

/// `P_(1)` against `P_(3)` forces the same degree 4 identifications as
/// `P_(1)` against `P_(2,1)`: the shifted Knuth classes.
pub fn verify_section5_shifted(n: u8) -> Result<Section5Report> {
    compare(
        "c",
        "P(3) in place of P(2,1) forces the shifted Knuth classes in degree 4".into(),
        [Product::P1P3, Product::P1P21],
        &RelationSet::shifted_knuth(),
        n,
        4,
        EdgeRule::KnuthOnAllIntervals,
    )
}

pub fn verify_section5(n: u8, max_degree: usize) -> Result<Vec<Section5Report>> {
    if n < 4 || max_degree < 4 {
        return Err(Error::DegreeBound {
            degree: 4,
            bound: max_degree.min(n as usize),
        });
    }
    Ok(vec![
        free_identity_p1_p2(n, max_degree)?,
        verify_section5_plactic(n)?,
        verify_section5_shifted(n)?,
    ])
}
