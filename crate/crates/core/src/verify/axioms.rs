//! Exhaustive checks of the four axioms of each system on a quotient of the
//! free monoid, up to an alphabet size and degree.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::algebra::{commutator_in_quotient, free_schur, shifted_free_schur, PolyContext};
use crate::error::{Error, Result};
use crate::rewrite::{restriction_counterexample, ClassPartition, RelationSet};
use crate::tableau::{longest_hook_subword, mixed_insert_word, Partition, StrictPartition};
use crate::word::{Interval, OrderedMorphism, Word};

/// Which axiom list to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxiomSystem {
    /// Quotients sitting over the free commutative monoid.
    Plac,
    /// Quotients sitting over the plactic monoid.
    SPlac,
}

impl AxiomSystem {
    pub fn name(self) -> &'static str {
        match self {
            AxiomSystem::Plac => "plac",
            AxiomSystem::SPlac => "splac",
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            AxiomSystem::Plac => "Plac",
            AxiomSystem::SPlac => "SPlac",
        }
    }

    /// The relation set whose quotient is the initial object.
    pub fn default_relations(self) -> RelationSet {
        match self {
            AxiomSystem::Plac => RelationSet::knuth(),
            AxiomSystem::SPlac => RelationSet::shifted_knuth(),
        }
    }
}

impl fmt::Display for AxiomSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plac" | "plactic" => Ok(AxiomSystem::Plac),
            "splac" | "shifted-plactic" => Ok(AxiomSystem::SPlac),
            _ => Err(Error::InvalidRelation(format!(
                "unknown axiom system {s:?}"
            ))),
        }
    }
}

const MAX_LISTED: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom_id: String,
    pub relation_set: String,
    pub n: u8,
    pub max_degree: usize,
    pub instances_checked: u64,
    pub violation_count: u64,
    /// The first few violations, described.
    pub violations: Vec<String>,
}

impl AxiomReport {
    fn new(system: AxiomSystem, k: u8, rels: &RelationSet, n: u8, max_degree: usize) -> Self {
        AxiomReport {
            axiom_id: format!("{}.{k}", system.prefix()),
            relation_set: rels.name().to_string(),
            n,
            max_degree,
            instances_checked: 0,
            violation_count: 0,
            violations: Vec::new(),
        }
    }

    fn violation(&mut self, msg: impl FnOnce() -> String) {
        self.violation_count += 1;
        if self.violations.len() < MAX_LISTED {
            self.violations.push(msg());
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": "axiom",
            "axiom": self.axiom_id,
            "relation_set": self.relation_set,
            "n": self.n,
            "D": self.max_degree,
            "instances_checked": self.instances_checked,
            "violation_count": self.violation_count,
            "violations": self.violations,
            "pass": self.passed(),
        })
    }
}

/// A finding recorded for information only; it never fails a run.
#[derive(Debug, Clone, PartialEq)]
pub struct InfoRecord {
    pub id: String,
    pub detail: Value,
}

impl InfoRecord {
    pub fn to_json(&self) -> Value {
        json!({ "check": "info", "id": self.id, "detail": self.detail })
    }
}

/// Congruence classes of every degree `0..=max_degree`.
struct Classes {
    by_degree: Vec<ClassPartition>,
}

impl Classes {
    fn new(rels: &RelationSet, n: u8, max_degree: usize) -> Self {
        Classes {
            by_degree: (0..=max_degree).map(|d| rels.partition(n, d)).collect(),
        }
    }

    fn id(&self, w: &Word) -> usize {
        self.by_degree[w.degree()]
            .class_of(w)
            .expect("every word is classified")
    }

    fn same(&self, u: &Word, v: &Word) -> bool {
        u.degree() == v.degree() && self.id(u) == self.id(v)
    }

    fn iter(&self) -> impl Iterator<Item = &Vec<Word>> {
        self.by_degree.iter().flat_map(|p| p.classes())
    }
}

/// Checks axioms 1 through 4 of `system` for the quotient by `rels` on
/// words of degree at most `max_degree` over `{1..n}`.
pub fn verify_axioms(
    system: AxiomSystem,
    rels: &RelationSet,
    n: u8,
    max_degree: usize,
) -> Result<(Vec<AxiomReport>, Vec<InfoRecord>)> {
    let ctx = PolyContext::new(n, max_degree)?;
    let phi = Classes::new(rels, n, max_degree);
    let kappa = match system {
        AxiomSystem::Plac => None,
        AxiomSystem::SPlac => Some(Classes::new(&RelationSet::knuth(), n, max_degree)),
    };

    let mut a1 = AxiomReport::new(system, 1, rels, n, max_degree);
    for class in phi.iter() {
        let first = &class[0];
        for w in &class[1..] {
            a1.instances_checked += 1;
            let ok = match &kappa {
                None => w.content() == first.content(),
                Some(k) => k.same(w, first),
            };
            if !ok {
                a1.violation(|| format!("{first} and {w} share a class but not their image"));
            }
        }
    }

    let mut a2 = AxiomReport::new(system, 2, rels, n, max_degree);
    let (pa, pb) = match system {
        AxiomSystem::Plac => (
            free_schur(&Partition::new(vec![1])?, ctx)?,
            free_schur(&Partition::new(vec![1, 1])?, ctx)?,
        ),
        AxiomSystem::SPlac => (
            shifted_free_schur(&StrictPartition::new(vec![1])?, ctx)?,
            shifted_free_schur(&StrictPartition::new(vec![2, 1])?, ctx)?,
        ),
    };
    let commutator = commutator_in_quotient(&pa, &pb, rels)?;
    a2.instances_checked = pa.mul(&pb)?.len() as u64;
    for (w, c) in commutator.terms() {
        a2.violation(|| format!("commutator has coefficient {c} at class of {w}"));
    }

    let mut a3 = AxiomReport::new(system, 3, rels, n, max_degree);
    for omega in OrderedMorphism::all_between_subalphabets(n) {
        for class in phi.iter() {
            let mut images = class
                .iter()
                .filter(|w| w.letters().iter().all(|&l| omega.image(l).is_some()))
                .map(|w| {
                    (
                        w,
                        w.apply_morphism(&omega).expect("letters lie in the source"),
                    )
                });
            let Some((w0, img0)) = images.next() else {
                continue;
            };
            for (w, img) in images {
                a3.instances_checked += 1;
                if !phi.same(&img0, &img) {
                    a3.violation(|| format!("{w0} ~ {w} but images {img0} and {img} differ"));
                }
            }
        }
    }

    let mut a4 = AxiomReport::new(system, 4, rels, n, max_degree);
    let target = kappa.as_ref().unwrap_or(&phi);
    for iv in Interval::all(n) {
        for class in phi.iter() {
            let r0 = class[0].restrict(iv);
            for w in &class[1..] {
                a4.instances_checked += 1;
                let r = w.restrict(iv);
                if !target.same(&r0, &r) {
                    a4.violation(|| {
                        format!(
                            "{} ~ {w} but restrictions to {iv} differ: {r0} vs {r}",
                            class[0]
                        )
                    });
                }
            }
        }
    }

    Ok((vec![a1, a2, a3, a4], info_records(system, n, max_degree)))
}

fn info_records(system: AxiomSystem, n: u8, max_degree: usize) -> Vec<InfoRecord> {
    if system != AxiomSystem::SPlac {
        return Vec::new();
    }
    let mut out = Vec::new();
    let sk = RelationSet::shifted_knuth();
    let detail = match restriction_counterexample(&sk, n, max_degree) {
        Some((u, v, iv)) => json!({
            "found": true,
            "w1": u.to_string(),
            "w2": v.to_string(),
            "interval": iv.to_string(),
            "restricted": [u.restrict(iv).to_string(), v.restrict(iv).to_string()],
        }),
        None => json!({ "found": false, "n": n, "D": max_degree }),
    };
    out.push(InfoRecord {
        id: "shifted-restriction-counterexample".into(),
        detail,
    });

    let (mut agree, mut disagree) = (0u64, 0u64);
    let mut example = None;
    for w in Word::all_up_to(n, max_degree) {
        let row = mixed_insert_word(&w).first_row_len();
        let hook = longest_hook_subword(&w);
        if row == hook {
            agree += 1;
        } else {
            disagree += 1;
            example.get_or_insert_with(
                || json!({ "word": w.to_string(), "first_row": row, "longest_hook": hook }),
            );
        }
    }
    out.push(InfoRecord {
        id: "first-row-vs-longest-hook".into(),
        detail: json!({ "agree": agree, "disagree": disagree, "first_disagreement": example }),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(system: AxiomSystem, rels: &RelationSet, n: u8, d: usize) -> Vec<AxiomReport> {
        let (reports, _) = verify_axioms(system, rels, n, d).unwrap();
        for r in &reports {
            assert!(r.passed(), "{}", r.to_json());
        }
        reports
    }

    #[test]
    fn plactic_axioms_hold() {
        let reports = all_pass(AxiomSystem::Plac, &RelationSet::knuth(), 3, 5);
        let ids: Vec<&str> = reports.iter().map(|r| r.axiom_id.as_str()).collect();
        assert_eq!(ids, ["Plac.1", "Plac.2", "Plac.3", "Plac.4"]);
    }

    #[test]
    fn shifted_axioms_hold() {
        all_pass(AxiomSystem::SPlac, &RelationSet::shifted_knuth(), 3, 5);
    }

    #[test]
    fn commutative_quotient_satisfies_plactic_axioms() {
        all_pass(AxiomSystem::Plac, &RelationSet::commutative(), 3, 4);
    }

    #[test]
    fn plactic_monoid_satisfies_shifted_axioms() {
        all_pass(AxiomSystem::SPlac, &RelationSet::knuth(), 3, 4);
    }

    #[test]
    fn free_monoid_fails_commutation() {
        let (reports, _) = verify_axioms(AxiomSystem::Plac, &RelationSet::trivial(), 3, 4).unwrap();
        let failed: Vec<&str> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.axiom_id.as_str())
            .collect();
        assert_eq!(failed, ["Plac.2"]);
        let (reports, _) =
            verify_axioms(AxiomSystem::SPlac, &RelationSet::trivial(), 3, 4).unwrap();
        assert!(!reports[1].passed());
    }

    #[test]
    fn shifted_classes_are_content_uniform() {
        let (reports, _) =
            verify_axioms(AxiomSystem::Plac, &RelationSet::shifted_knuth(), 3, 4).unwrap();
        assert!(reports[0].passed());
    }

    #[test]
    fn too_small_degree_bound_is_an_error() {
        assert!(verify_axioms(AxiomSystem::SPlac, &RelationSet::shifted_knuth(), 3, 3).is_err());
    }

    #[test]
    fn info_records_are_produced() {
        let (_, info) =
            verify_axioms(AxiomSystem::SPlac, &RelationSet::shifted_knuth(), 3, 4).unwrap();
        assert_eq!(info.len(), 2);
        assert_eq!(info[0].id, "shifted-restriction-counterexample");
    }
}
