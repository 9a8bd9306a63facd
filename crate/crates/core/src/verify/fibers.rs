//! Congruence classes against insertion fibers, and hook words as class
//! representatives.

use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use serde_json::{json, Value};

use crate::rewrite::RelationSet;
use crate::tableau::{hook_factorization_check, mixed_insert_word, p_tableau, StrictPartition};
use crate::word::Word;

fn fibers<K: Hash + Eq>(n: u8, degree: usize, key: impl Fn(&Word) -> K) -> BTreeSet<Vec<Word>> {
    let mut groups: HashMap<K, Vec<Word>> = HashMap::new();
    for w in Word::all(n, degree) {
        groups.entry(key(&w)).or_default().push(w);
    }
    groups.into_values().collect()
}

/// Whether Knuth classes of degree `degree` over `{1..n}` are exactly the
/// fibers of the insertion tableau.
pub fn plactic_fibers_agree(n: u8, degree: usize) -> bool {
    RelationSet::knuth().partition(n, degree).as_blocks() == fibers(n, degree, p_tableau)
}

/// Whether shifted Knuth classes are exactly the fibers of mixed insertion.
pub fn shifted_fibers_agree(n: u8, degree: usize) -> bool {
    RelationSet::shifted_knuth()
        .partition(n, degree)
        .as_blocks()
        == fibers(n, degree, mixed_insert_word)
}

fn hook_shape(w: &Word) -> Option<StrictPartition> {
    StrictPartition::all_of_size(w.degree() as u32)
        .into_iter()
        .find(|nu| hook_factorization_check(w, nu).unwrap_or(false))
}

/// The member of the shifted Knuth class of `w` that lies in `hook(nu)`
/// for some strict `nu`, when there is exactly one.
pub fn hook_representative(w: &Word) -> Option<Word> {
    let class = RelationSet::shifted_knuth().equiv_class(w);
    let mut found = class.members().iter().filter(|m| hook_shape(m).is_some());
    match (found.next(), found.next()) {
        (Some(m), None) => Some(m.clone()),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookReport {
    pub n: u8,
    pub max_degree: usize,
    pub classes_checked: usize,
    /// Classes (by least member) with zero or several hook members.
    pub failures: Vec<(Word, usize)>,
    /// Classes whose hook member's shape differs from the mixed insertion
    /// shape.
    pub shape_mismatches: Vec<Word>,
}

impl HookReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": "hook-representatives",
            "n": self.n,
            "D": self.max_degree,
            "classes_checked": self.classes_checked,
            "failures": self.failures.iter().map(|(w, k)| json!({"class": w.to_string(), "hook_members": k})).collect::<Vec<_>>(),
            "shape_mismatches": self.shape_mismatches.iter().map(Word::to_string).collect::<Vec<_>>(),
            "pass": self.passed(),
        })
    }
}

/// Counts hook members in every shifted Knuth class of degree at most
/// `max_degree` over `{1..n}`.
pub fn hook_representatives_report(n: u8, max_degree: usize) -> HookReport {
    let sk = RelationSet::shifted_knuth();
    let mut report = HookReport {
        n,
        max_degree,
        classes_checked: 0,
        failures: Vec::new(),
        shape_mismatches: Vec::new(),
    };
    for d in 0..=max_degree {
        for class in sk.partition(n, d).classes() {
            report.classes_checked += 1;
            let hooks: Vec<(&Word, StrictPartition)> = class
                .iter()
                .filter_map(|m| hook_shape(m).map(|nu| (m, nu)))
                .collect();
            if hooks.len() != 1 {
                report.failures.push((class[0].clone(), hooks.len()));
                continue;
            }
            let (m, nu) = &hooks[0];
            let shape = mixed_insert_word(m).shape();
            if shape != nu.parts() {
                report.shape_mismatches.push(class[0].clone());
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fibers() {
        for d in 1..=4 {
            assert!(plactic_fibers_agree(3, d));
            assert!(shifted_fibers_agree(3, d));
        }
    }

    #[test]
    fn hook_members() {
        let r = hook_representatives_report(3, 4);
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.shape_mismatches.is_empty());
        let w = Word::parse("1243", 4).unwrap();
        let rep = hook_representative(&w).unwrap();
        assert!(RelationSet::shifted_knuth().equivalent(&w, &rep));
    }
}
