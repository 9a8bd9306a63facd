use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::poly::PolyContext;
use crate::algebra::schur::free_schur;
use crate::error::{Error, Result};
use crate::rewrite::{Canonicalizer, RelationSet};
use crate::tableau::{Partition, Tableau};

/// The tableau of shape `xi` whose row `i` is filled with `i`.
fn highest_weight_tableau(xi: &Partition) -> Tableau {
    let rows = xi
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| vec![i as u8 + 1; len as usize])
        .collect();
    Tableau::from_rows(rows).expect("row i filled with i is semistandard")
}

/// Expands the plactic image of `S_nu S_mu` in the basis of plactic Schur
/// functions. Shapes are tried in decreasing lexicographic order; the
/// coefficient of each is read off at its highest-weight class.
pub fn lr_expand(nu: &Partition, mu: &Partition, n: u8) -> Result<BTreeMap<Partition, BigInt>> {
    let size = nu.size() + mu.size();
    let ctx = PolyContext::new(n, size)?;
    let knuth = RelationSet::knuth();
    let product = free_schur(nu, ctx)?.mul(&free_schur(mu, ctx)?)?;
    let mut remainder = product.project(&knuth);
    let mut canon = Canonicalizer::new(&knuth);
    let mut out = BTreeMap::new();
    for xi in Partition::all_of_size(size as u32) {
        if xi.len() > n as usize {
            continue;
        }
        let key = canon.canonical(&highest_weight_tableau(&xi).reading_word(n)?);
        let c = remainder.coeff(&key);
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            return Err(Error::NonzeroRemainder(format!(
                "negative coefficient {c} at shape {xi}"
            )));
        }
        let basis = free_schur(&xi, ctx)?.project(&knuth);
        remainder.sub_scaled(&basis, &c);
        out.insert(xi, c);
    }
    if !remainder.is_zero() {
        return Err(Error::NonzeroRemainder(remainder.to_string()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::p_tableau;
    use crate::word::Word;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn expand(nu: &str, mu: &str, n: u8) -> Vec<(String, i64)> {
        lr_expand(&part(nu), &part(mu), n)
            .unwrap()
            .into_iter()
            .map(|(k, v)| (k.to_string(), i64::try_from(v).unwrap()))
            .collect()
    }

    /// Counts product monomials whose insertion tableau is the highest
    /// weight tableau of each shape.
    fn class_count(nu: &str, mu: &str, n: u8) -> Vec<(String, i64)> {
        let (nu, mu) = (part(nu), part(mu));
        let size = nu.size() + mu.size();
        let ctx = PolyContext::new(n, size).unwrap();
        let product = free_schur(&nu, ctx)
            .unwrap()
            .mul(&free_schur(&mu, ctx).unwrap())
            .unwrap();
        let mut out = Vec::new();
        for xi in Partition::all_of_size(size as u32) {
            let target = highest_weight_tableau(&xi);
            let count: i64 = product
                .terms()
                .iter()
                .filter(|(w, _)| p_tableau(w) == target)
                .map(|(_, c)| i64::try_from(c.clone()).unwrap())
                .sum();
            if count != 0 {
                out.push((xi.to_string(), count));
            }
        }
        out.sort();
        out
    }

    #[test]
    fn small_products() {
        assert_eq!(
            expand("1", "1", 4),
            [("(1,1)".to_string(), 1), ("(2)".to_string(), 1)]
        );
        assert_eq!(expand("2,1", "", 4), [("(2,1)".to_string(), 1)]);
        assert_eq!(
            expand("2,1", "1", 4),
            [
                ("(2,1,1)".to_string(), 1),
                ("(2,2)".to_string(), 1),
                ("(3,1)".to_string(), 1)
            ]
        );
    }

    #[test]
    fn matches_class_counting() {
        for (nu, mu) in [
            ("1", "1"),
            ("2,1", "1"),
            ("2", "2"),
            ("2,1", "2"),
            ("1,1", "2,1"),
        ] {
            assert_eq!(expand(nu, mu, 4), class_count(nu, mu, 4), "{nu} * {mu}");
        }
    }

    #[test]
    fn symmetric_in_factors() {
        for (nu, mu) in [("2", "1,1"), ("2,1", "1"), ("3", "1,1")] {
            assert_eq!(expand(nu, mu, 4), expand(mu, nu, 4));
        }
    }

    #[test]
    fn highest_weight_reading_word() {
        let xi = part("3,2,1");
        let t = highest_weight_tableau(&xi);
        let w = t.reading_word(3).unwrap();
        assert_eq!(w, Word::parse("322111", 3).unwrap());
        let rep = RelationSet::knuth().equiv_class(&w).canonical().clone();
        assert_eq!(p_tableau(&rep), t);
    }
}
