//! Degree-truncated integer polynomials in noncommuting letters, their
//! images in quotient monoid algebras, and their commutative images.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rewrite::{Canonicalizer, RelationSet};
use crate::word::{ContentVector, Word};

/// Alphabet size and degree bound shared by the operands of an operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyContext {
    pub n: u8,
    pub max_degree: usize,
}

impl PolyContext {
    pub fn new(n: u8, max_degree: usize) -> Result<Self> {
        crate::word::check_alphabet(n as u32)?;
        Ok(PolyContext { n, max_degree })
    }

    fn same_as(&self, other: &PolyContext) -> Result<()> {
        if self != other {
            return Err(Error::ContextMismatch {
                n1: self.n,
                d1: self.max_degree,
                n2: other.n,
                d2: other.max_degree,
            });
        }
        Ok(())
    }
}

fn add_into<K: Ord>(terms: &mut BTreeMap<K, BigInt>, key: K, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(e) => {
            e.insert(coeff);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// An element of the truncated monoid algebra `Z F({1..n})`: words of
/// degree at most `max_degree` with nonzero integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPoly {
    ctx: PolyContext,
    terms: BTreeMap<Word, BigInt>,
}

impl NcPoly {
    pub fn zero(ctx: PolyContext) -> Self {
        NcPoly {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The empty word with coefficient one.
    pub fn one(ctx: PolyContext) -> Self {
        let mut p = NcPoly::zero(ctx);
        p.terms.insert(Word::empty(ctx.n), BigInt::one());
        p
    }

    pub fn from_terms<I, C>(ctx: PolyContext, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, C)>,
        C: Into<BigInt>,
    {
        let mut p = NcPoly::zero(ctx);
        for (w, c) in terms {
            p.add_term(w, c.into())?;
        }
        Ok(p)
    }

    /// Sum of the given words, each with coefficient one.
    pub fn sum_of<I: IntoIterator<Item = Word>>(ctx: PolyContext, words: I) -> Result<Self> {
        NcPoly::from_terms(ctx, words.into_iter().map(|w| (w, 1)))
    }

    pub fn add_term(&mut self, w: Word, coeff: BigInt) -> Result<()> {
        if w.alphabet_size() != self.ctx.n {
            return Err(Error::AlphabetMismatch {
                left: self.ctx.n,
                right: w.alphabet_size(),
            });
        }
        if w.degree() > self.ctx.max_degree {
            return Err(Error::DegreeBound {
                degree: w.degree(),
                bound: self.ctx.max_degree,
            });
        }
        add_into(&mut self.terms, w, coeff);
        Ok(())
    }

    pub fn context(&self) -> PolyContext {
        self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree of a term, or 0 for the zero polynomial.
    pub fn max_term_degree(&self) -> usize {
        self.terms.keys().map(Word::degree).max().unwrap_or(0)
    }

    pub fn add(&self, other: &NcPoly) -> Result<NcPoly> {
        self.ctx.same_as(&other.ctx)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_into(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NcPoly) -> Result<NcPoly> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> NcPoly {
        let mut out = NcPoly::zero(self.ctx);
        for (w, c) in &self.terms {
            add_into(&mut out.terms, w.clone(), c * k);
        }
        out
    }

    /// Product by concatenation; terms above the degree bound are dropped.
    pub fn mul(&self, other: &NcPoly) -> Result<NcPoly> {
        self.ctx.same_as(&other.ctx)?;
        let mut out = NcPoly::zero(self.ctx);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if u.degree() + v.degree() > self.ctx.max_degree {
                    continue;
                }
                let uv = u.concat(v).expect("same alphabet");
                add_into(&mut out.terms, uv, a * b);
            }
        }
        Ok(out)
    }

    /// Linear extension of the abelianization map.
    pub fn abelianize(&self) -> CPoly {
        let mut out = CPoly::zero();
        for (w, c) in &self.terms {
            add_into(&mut out.terms, w.content(), c.clone());
        }
        out
    }

    /// Linear extension of the quotient map: each word becomes the
    /// lexicographically least member of its class.
    pub fn project(&self, rels: &RelationSet) -> QuotientPoly {
        let mut canon = Canonicalizer::new(rels);
        let mut out = QuotientPoly {
            ctx: self.ctx,
            rels: rels.clone(),
            terms: BTreeMap::new(),
        };
        for (w, c) in &self.terms {
            add_into(&mut out.terms, canon.canonical(w), c.clone());
        }
        out
    }

    /// Words whose coefficient is positive in `self` (used for indicator sums).
    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(self.terms.iter().map(|(w, c)| (format!("[{w}]"), c)), f)
    }
}

fn fmt_terms<'a>(
    mut terms: impl Iterator<Item = (String, &'a BigInt)>,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    let Some((k, c)) = terms.next() else {
        return f.write_str("0");
    };
    write_term(f, &k, c, true)?;
    for (k, c) in terms {
        write_term(f, &k, c, false)?;
    }
    Ok(())
}

fn write_term(f: &mut fmt::Formatter<'_>, key: &str, c: &BigInt, first: bool) -> fmt::Result {
    match (first, c.is_negative()) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let mag = c.abs();
    if mag.is_one() {
        f.write_str(key)
    } else {
        write!(f, "{mag}{key}")
    }
}

/// An element of the commutative image: content vectors with integer
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CPoly {
    terms: BTreeMap<ContentVector, BigInt>,
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly::default()
    }

    pub fn add_term(&mut self, content: ContentVector, coeff: BigInt) {
        add_into(&mut self.terms, content, coeff);
    }

    pub fn terms(&self) -> &BTreeMap<ContentVector, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, content: &ContentVector) -> BigInt {
        self.terms.get(content).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(self.terms.iter().map(|(k, c)| (k.to_string(), c)), f)
    }
}

/// An element of `Z M` for the quotient monoid `M` of a relation set,
/// keyed by canonical class representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPoly {
    ctx: PolyContext,
    rels: RelationSet,
    terms: BTreeMap<Word, BigInt>,
}

impl QuotientPoly {
    pub fn relations(&self) -> &RelationSet {
        &self.rels
    }

    pub fn context(&self) -> PolyContext {
        self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, rep: &Word) -> BigInt {
        self.terms.get(rep).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn sub_scaled(&mut self, other: &QuotientPoly, k: &BigInt) {
        for (w, c) in &other.terms {
            add_into(&mut self.terms, w.clone(), -(c * k));
        }
    }
}

impl fmt::Display for QuotientPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(self.terms.iter().map(|(w, c)| (format!("[{w}]"), c)), f)
    }
}

/// `pA pB - pB pA` projected to the quotient; zero certifies that the
/// images commute.
pub fn commutator_in_quotient(
    pa: &NcPoly,
    pb: &NcPoly,
    rels: &RelationSet,
) -> Result<QuotientPoly> {
    let needed = pa.max_term_degree() + pb.max_term_degree();
    if needed > pa.context().max_degree {
        return Err(Error::DegreeBound {
            degree: needed,
            bound: pa.context().max_degree,
        });
    }
    let diff = pa.mul(pb)?.sub(&pb.mul(pa)?)?;
    Ok(diff.project(rels))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PolyContext {
        PolyContext::new(3, 4).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    fn poly(terms: &[(&str, i64)]) -> NcPoly {
        NcPoly::from_terms(ctx(), terms.iter().map(|&(s, c)| (w(s), c))).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(
            poly(&[("1", 1)]).mul(&poly(&[("2", 1)])).unwrap(),
            poly(&[("12", 1)])
        );
        let p = poly(&[("12", 3), ("2", -1)]);
        assert_eq!(p.mul(&NcPoly::one(ctx())).unwrap(), p);
        let s = poly(&[("1", 1), ("2", 1)]);
        assert_eq!(
            s.mul(&s).unwrap(),
            poly(&[("11", 1), ("12", 1), ("21", 1), ("22", 1)])
        );
    }

    #[test]
    fn truncation_drops_high_degree_terms() {
        let p = poly(&[("123", 1)]);
        let q = poly(&[("12", 1), ("1", 1)]);
        assert_eq!(p.mul(&q).unwrap(), poly(&[("1231", 1)]));
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let other = NcPoly::one(PolyContext::new(3, 5).unwrap());
        assert!(matches!(
            poly(&[("1", 1)]).mul(&other),
            Err(Error::ContextMismatch { .. })
        ));
        assert!(NcPoly::from_terms(ctx(), [(w("12312"), 1)]).is_err());
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let p = poly(&[("12", 1), ("12", -1), ("3", 2)]);
        assert_eq!(p.len(), 1);
        assert!(p.sub(&p).unwrap().is_zero());
    }

    #[test]
    fn projection_examples() {
        let knuth = RelationSet::knuth();
        let q = poly(&[("132", 1), ("312", 1)]).project(&knuth);
        assert_eq!(q.len(), 1);
        assert_eq!(q.coeff(&w("132")), BigInt::from(2));
        let q = poly(&[("12", 1)]).project(&knuth);
        assert_eq!(q.coeff(&w("12")), BigInt::from(1));
        let c4 = PolyContext::new(4, 4).unwrap();
        let p = NcPoly::from_terms(
            c4,
            [
                (Word::parse("1243", 4).unwrap(), 1),
                (Word::parse("1423", 4).unwrap(), -1),
            ],
        )
        .unwrap();
        assert!(p.project(&RelationSet::shifted_knuth()).is_zero());
    }

    #[test]
    fn abelianize_example() {
        let c = poly(&[("12", 1), ("21", 1)]).abelianize();
        assert_eq!(c.terms().len(), 1);
        assert_eq!(
            c.coeff(&ContentVector::from_counts(vec![1, 1, 0])),
            BigInt::from(2)
        );
        assert_eq!(c.to_string(), "2x1 x2");
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[("12", 1), ("2", -3)]).to_string(), "[12] - 3[2]");
        assert_eq!(NcPoly::zero(ctx()).to_string(), "0");
    }

    #[test]
    fn commutator_needs_room_for_both_products() {
        let p = poly(&[("123", 1)]);
        let q = poly(&[("12", 1)]);
        assert!(matches!(
            commutator_in_quotient(&p, &q, &RelationSet::knuth()),
            Err(Error::DegreeBound {
                degree: 5,
                bound: 4
            })
        ));
    }
}
