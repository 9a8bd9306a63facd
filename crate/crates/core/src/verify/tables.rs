//! Monomial listings of small products of free Schur functions, compared
//! against fixed reading-word columns.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::algebra::PolyContext;
use crate::error::{Error, Result};
use crate::verify::Product;
use crate::word::Word;

/// A group of listings checked together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TableFamily {
    /// `S_(1,1) S_(1)`.
    Unshifted1,
    /// `P_(2,1) P_(1)`.
    Shifted2,
    /// `S_(2) S_(1)`.
    Unshifted2x1,
    /// `P_(1) P_(3)` and `P_(3) P_(1)`.
    Unshifted3x1Table3,
    /// `P_(3) P_(1)` on content `abcc`.
    BccTable4,
}

impl TableFamily {
    pub const ALL: [TableFamily; 5] = [
        TableFamily::Unshifted1,
        TableFamily::Shifted2,
        TableFamily::Unshifted2x1,
        TableFamily::Unshifted3x1Table3,
        TableFamily::BccTable4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableFamily::Unshifted1 => "unshifted-1",
            TableFamily::Shifted2 => "shifted-2",
            TableFamily::Unshifted2x1 => "unshifted-2x1",
            TableFamily::Unshifted3x1Table3 => "unshifted-3x1-table3",
            TableFamily::BccTable4 => "bcc-table4",
        }
    }
}

impl fmt::Display for TableFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidRelation(format!("unknown table family {s:?}")))
    }
}

/// One column of a table: the expected monomials of `product` whose
/// content matches `pattern`, written in the pattern's letters.
#[derive(Debug, Clone, Copy)]
pub struct TableSpec {
    pub family: TableFamily,
    pub label: &'static str,
    pub product: Product,
    pub pattern: &'static str,
    pub words: &'static [&'static str],
}

const TABLES: &[TableSpec] = &[
    TableSpec {
        family: TableFamily::Unshifted1,
        label: "1a",
        product: Product::S11S1,
        pattern: "abc",
        words: &["cba", "cab", "bac"],
    },
    TableSpec {
        family: TableFamily::Unshifted1,
        label: "1b",
        product: Product::S11S1,
        pattern: "aac",
        words: &["caa"],
    },
    TableSpec {
        family: TableFamily::Unshifted1,
        label: "1c",
        product: Product::S11S1,
        pattern: "abb",
        words: &["bab"],
    },
    TableSpec {
        family: TableFamily::Shifted2,
        label: "2a",
        product: Product::P21P1,
        pattern: "abcd",
        words: &[
            "bdca", "cdba", "adcb", "cdab", "adbc", "bdac", "acbd", "bcad",
        ],
    },
    TableSpec {
        family: TableFamily::Shifted2,
        label: "2b",
        product: Product::P21P1,
        pattern: "abbd",
        words: &["bdba", "adbb", "bdab", "bbad"],
    },
    TableSpec {
        family: TableFamily::Shifted2,
        label: "2c",
        product: Product::P21P1,
        pattern: "abcc",
        words: &["ccba", "ccab", "acbc", "bcac"],
    },
    TableSpec {
        family: TableFamily::Shifted2,
        label: "2d",
        product: Product::P21P1,
        pattern: "aacd",
        words: &["adca", "cdaa", "adac", "acad"],
    },
    TableSpec {
        family: TableFamily::Unshifted2x1,
        label: "5a",
        product: Product::S2S1,
        pattern: "abc",
        words: &["bca", "acb", "abc"],
    },
    TableSpec {
        family: TableFamily::Unshifted2x1,
        label: "5b",
        product: Product::S2S1,
        pattern: "aab",
        words: &["aba", "aab"],
    },
    TableSpec {
        family: TableFamily::Unshifted2x1,
        label: "5c",
        product: Product::S2S1,
        pattern: "abb",
        words: &["abb", "bba"],
    },
    TableSpec {
        family: TableFamily::Unshifted3x1Table3,
        label: "3a-left",
        product: Product::P1P3,
        pattern: "abcd",
        words: &[
            "abcd", "acbd", "adbc", "adcb", "bacd", "bcad", "bdac", "bdca", "cabd", "cbad", "cdab",
            "cdba", "dabc", "dbac", "dcab", "dcba",
        ],
    },
    TableSpec {
        family: TableFamily::Unshifted3x1Table3,
        label: "3a-right",
        product: Product::P3P1,
        pattern: "abcd",
        words: &[
            "bcda", "cbda", "dbca", "dcba", "acdb", "cadb", "dacb", "dcab", "abdc", "badc", "dabc",
            "dbac", "abcd", "bacd", "cabd", "cbad",
        ],
    },
    TableSpec {
        family: TableFamily::Unshifted3x1Table3,
        label: "3b",
        product: Product::P3P1,
        pattern: "aabc",
        words: &[
            "cbaa", "baca", "caba", "abca", "aacb", "caab", "aabc", "baac",
        ],
    },
    TableSpec {
        family: TableFamily::Unshifted3x1Table3,
        label: "3c",
        product: Product::P3P1,
        pattern: "abbc",
        words: &[
            "bbca", "cbba", "abcb", "bacb", "cabb", "cbab", "abbc", "babc",
        ],
    },
    TableSpec {
        family: TableFamily::BccTable4,
        label: "4",
        product: Product::P3P1,
        pattern: "abcc",
        words: &[
            "bcca", "cbca", "accb", "cacb", "abcc", "bacc", "cabc", "cbac",
        ],
    },
];

pub fn table_specs() -> &'static [TableSpec] {
    TABLES
}

/// Letters of a pattern string mapped to ranks `1..k` in alphabetical order.
struct Lettering {
    to_rank: BTreeMap<char, u8>,
    to_char: BTreeMap<u8, char>,
}

impl Lettering {
    fn new(pattern: &str) -> Self {
        let letters: BTreeSet<char> = pattern.chars().collect();
        let to_rank: BTreeMap<char, u8> = letters
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i as u8 + 1))
            .collect();
        let to_char = to_rank.iter().map(|(&c, &r)| (r, c)).collect();
        Lettering { to_rank, to_char }
    }

    fn n(&self) -> u8 {
        self.to_rank.len() as u8
    }

    fn word(&self, s: &str) -> Result<Word> {
        let letters = s
            .chars()
            .map(|c| {
                self.to_rank
                    .get(&c)
                    .copied()
                    .ok_or_else(|| Error::ParseWord(s.to_string()))
            })
            .collect::<Result<Vec<u8>>>()?;
        Word::new(self.n(), letters)
    }

    fn render(&self, w: &Word) -> String {
        w.letters().iter().map(|r| self.to_char[r]).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub family: TableFamily,
    pub label: String,
    pub product: Product,
    pub pattern: String,
    pub computed: Vec<String>,
    pub missing: Vec<String>,
    pub extra: Vec<String>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": "table",
            "family": self.family.name(),
            "table": self.label,
            "product": self.product.name(),
            "pattern": self.pattern,
            "words": self.computed,
            "missing": self.missing,
            "extra": self.extra,
            "pass": self.passed(),
        })
    }
}

/// Monomials of `product` whose content is that of `pattern`, in the
/// pattern's letters, sorted.
pub fn product_monomials(product: Product, pattern: &str) -> Result<BTreeSet<String>> {
    let lettering = Lettering::new(pattern);
    let target = lettering.word(pattern)?.content();
    let ctx = PolyContext::new(lettering.n(), pattern.chars().count())?;
    let poly = product.expand(ctx)?;
    Ok(poly
        .support()
        .filter(|w| w.content() == target)
        .map(|w| lettering.render(w))
        .collect())
}

pub fn verify_table(spec: &TableSpec) -> Result<TableReport> {
    let computed = product_monomials(spec.product, spec.pattern)?;
    let expected: BTreeSet<String> = spec.words.iter().map(|s| s.to_string()).collect();
    Ok(TableReport {
        family: spec.family,
        label: spec.label.to_string(),
        product: spec.product,
        pattern: spec.pattern.to_string(),
        missing: expected.difference(&computed).cloned().collect(),
        extra: computed.difference(&expected).cloned().collect(),
        computed: computed.into_iter().collect(),
    })
}

/// Checks every listing of `family`, or of all families.
pub fn verify_tables(family: Option<TableFamily>) -> Result<Vec<TableReport>> {
    TABLES
        .iter()
        .filter(|t| family.is_none_or(|f| t.family == f))
        .map(verify_table)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::OrderedMorphism;

    #[test]
    fn every_listing_matches() {
        for r in verify_tables(None).unwrap() {
            assert!(
                r.passed(),
                "{} {}: missing {:?} extra {:?}",
                r.family,
                r.label,
                r.missing,
                r.extra
            );
        }
    }

    #[test]
    fn families_parse() {
        for f in TableFamily::ALL {
            assert_eq!(f.name().parse::<TableFamily>().unwrap(), f);
        }
        assert!("table-9".parse::<TableFamily>().is_err());
    }

    #[test]
    fn wrong_column_reports_differences() {
        let spec = TableSpec {
            words: &["caa", "aca"],
            ..TABLES[1]
        };
        let r = verify_table(&spec).unwrap();
        assert!(!r.passed());
        assert_eq!(r.extra, Vec::<String>::new());
        assert_eq!(r.missing, ["aca"]);
    }

    #[test]
    fn listings_are_invariant_under_relabeling() {
        // the distinct-letter column of P_(2,1) P_(1), placed on other
        // letters of a larger alphabet
        let ctx = PolyContext::new(6, 4).unwrap();
        let poly = Product::P21P1.expand(ctx).unwrap();
        let base = Lettering::new("abcd");
        let column: BTreeSet<Word> = TABLES[3]
            .words
            .iter()
            .map(|s| base.word(s).unwrap())
            .collect();
        for omega in OrderedMorphism::all_between_subalphabets(6)
            .into_iter()
            .filter(|m| m.source().count() == 4)
        {
            let src: Vec<u8> = omega.source().collect();
            if src != [1, 2, 3, 4] {
                continue;
            }
            let image: BTreeSet<Word> = column
                .iter()
                .map(|w| w.widen(6).unwrap().apply_morphism(&omega).unwrap())
                .collect();
            let content = image.iter().next().unwrap().content();
            let found: BTreeSet<Word> = poly
                .support()
                .filter(|w| w.content() == content)
                .cloned()
                .collect();
            assert_eq!(found, image);
        }
    }
}
